//! Criteria on weak orders, Cambrian lattices, arc diagrams and Motzkin
//! paths: 1, 4, 5, 6, 7 and 8.

use std::collections::BTreeSet;

use cambrian_core::cambrian::Cambrian;
use cambrian_core::coxeter::{Coxeter, CoxeterElement, TypeTag};
use cambrian_core::heaps::CoxeterHeap;
use cambrian_core::lattice::{Congruence, FacetPolynomial, FiniteLattice, ShardLabeling};
use cambrian_core::typea::{
    closed_form_conjectured, conjectured_from_recurrence, maximal_diagrams, motzkin_paths_no_low_peaks, psi,
    psi_inverse, NuMap,
};
use cambrian_core::weak::WeakOrder;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{crystallographic_range, lattice_range, Outcome, Report, VerifyError};

/// Largest rank for the generating-function and bijection checks.
pub const MAX_TYPE_A_RANK: usize = 7;

/// Random congruences sampled per weak order in criterion 6.
pub const CONGRUENCE_SAMPLES: usize = 100;

/// Seed for the sampled congruences.
pub const CONGRUENCE_SEED: u64 = 0x5eed_c0de;

fn label(cox: &Coxeter, c: &CoxeterElement) -> String {
    format!("{} c={}", cox.type_tag(), c.label_string(cox.diagram()))
}

/// Calls `f` on the Cambrian lattice of every Coxeter element of `tag`.
pub fn for_each_cambrian(
    tag: TypeTag,
    mut f: impl FnMut(&Coxeter, &CoxeterElement, &Cambrian) -> Result<(), VerifyError>,
) -> Result<(), VerifyError> {
    let cox = Coxeter::new(tag)?;
    for c in CoxeterElement::all(cox.diagram()) {
        let camb = Cambrian::new(&cox, &c)?;
        f(&cox, &c, &camb)?;
    }
    Ok(())
}

/// Brute-force image of `pop↓` against the commuting-descents condition and
/// the Boolean-interval condition, for one lattice.
pub fn image_check(cox: &Coxeter, c: &CoxeterElement, camb: &Cambrian) -> Result<Report, VerifyError> {
    let mut r = Report::new("image");
    for (w, cond) in camb.image_conditions()? {
        r.check(cond.in_image == cond.condition2 && cond.in_image == cond.condition3, || {
            format!("{} w={:?} {cond:?}", label(cox, c), cox.reduced_word(w))
        });
    }
    Ok(r)
}

/// Criterion 1 over [`lattice_range`].
pub fn criterion_image(out: &mut Outcome) -> Result<(), VerifyError> {
    for tag in lattice_range() {
        for_each_cambrian(tag, |cox, c, camb| {
            out.report.absorb(image_check(cox, c, camb)?);
            Ok(())
        })?;
    }
    Ok(())
}

/// The maximum orbit equals `h`, and the orbit of `z_c` is the predicted
/// chain of length `h`.
pub fn orbit_check(cox: &Coxeter, c: &CoxeterElement, camb: &Cambrian) -> Result<Report, VerifyError> {
    let mut r = Report::new("orbits");
    let h = cox.type_tag().coxeter_number();
    let (max, _) = camb.lattice().orbit_stats();
    r.check(max == h, || format!("{} max orbit {max}, h = {h}", label(cox, c)));
    let heap = CoxeterHeap::new(cox, c)?;
    r.check(heap.orbit_matches(camb)?, || format!("{} orbit of z_c differs", label(cox, c)));
    Ok(r)
}

/// Pop orbits in the quotient by `samples` seeded random congruences of
/// `Weak(W)` stay within `h`; the quotient lattice's own pop is checked
/// against the class-representative formula on every element.
pub fn quotient_orbit_check(tag: TypeTag, samples: usize, seed: u64) -> Result<(Report, Vec<usize>), VerifyError> {
    let mut r = Report::new("quotient orbits");
    let cox = Coxeter::new(tag)?;
    let weak = WeakOrder::new(&cox)?;
    let l = weak.lattice();
    let h = tag.coxeter_number();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut maxima = Vec::with_capacity(samples);
    for k in 0..samples {
        let generators = rng.gen_range(1..=3);
        let cong = Congruence::random(l, &mut rng, generators);
        r.check(cong.check(l), || format!("{tag} sample {k} is not a congruence"));
        let (q, reps) = cong.quotient(l)?;
        for (i, &x) in reps.iter().enumerate() {
            let via_l = cong.quotient_pop(l, x)?;
            r.check(reps[q.pop_down(i)] == via_l, || format!("{tag} sample {k}: quotient pop routes differ at {x}"));
        }
        let (max, _) = q.orbit_stats();
        maxima.push(max);
        r.check(max <= h, || format!("{tag} sample {k}: orbit {max} > h = {h}"));
    }
    Ok((r, maxima))
}

/// Criterion 6: orbit maxima and `z_c` over [`lattice_range`], and sampled
/// congruences of `Weak(A_3)` and `Weak(B_3)`.
pub fn criterion_orbits(out: &mut Outcome) -> Result<(), VerifyError> {
    for tag in lattice_range() {
        for_each_cambrian(tag, |cox, c, camb| {
            out.report.absorb(orbit_check(cox, c, camb)?);
            Ok(())
        })?;
    }
    for tag in [TypeTag::A(3), TypeTag::B(3)] {
        let (r, maxima) = quotient_orbit_check(tag, CONGRUENCE_SAMPLES, CONGRUENCE_SEED)?;
        out.report.absorb(r);
        let top = maxima.iter().max().copied().unwrap_or(0);
        out.notes.push(format!("{tag}: {} sampled quotients, largest orbit {top}", maxima.len()));
    }
    Ok(())
}

/// The six interval conditions agree and the dynamical identity holds for
/// every `w` and `t ≤ h`.
pub fn interval_check(cox: &Coxeter, c: &CoxeterElement, camb: &Cambrian) -> Result<Report, VerifyError> {
    let mut r = Report::new("intervals");
    let h = cox.type_tag().coxeter_number();
    for &w in camb.sortables() {
        let ic = camb.interval_conditions(w)?;
        r.check(ic.all_equivalent(), || format!("{} w={:?} {ic:?}", label(cox, c), cox.reduced_word(w)));
        for t in 0..=h {
            let holds = camb.dynamical_identity(w, t)?;
            r.check(holds, || format!("{} w={:?} t={t}", label(cox, c), cox.reduced_word(w)));
        }
    }
    Ok(r)
}

/// Criterion 7 over [`crystallographic_range`].
pub fn criterion_intervals(out: &mut Outcome) -> Result<(), VerifyError> {
    for tag in crystallographic_range() {
        for_each_cambrian(tag, |cox, c, camb| {
            out.report.absorb(interval_check(cox, c, camb)?);
            Ok(())
        })?;
    }
    Ok(())
}

/// `|pop↓(L)| = |pop↑(L)| = #facets`, the three facet-polynomial routes
/// agree, and `P_L = P_{L*}`.
pub fn bookkeeping_check(l: &FiniteLattice, name: &str) -> Result<Report, VerifyError> {
    let mut r = Report::new("bookkeeping");
    let s = ShardLabeling::new(l)?;
    let facets = s.facets().len();
    let (down, up) = (l.pop_down_image().len(), l.pop_up_image().len());
    r.check(down == facets && up == facets, || format!("{name}: |pop↓| {down}, |pop↑| {up}, facets {facets}"));
    let p = FacetPolynomial::via_facets(&s);
    let routes = [FacetPolynomial::via_pop_down(l, &s), FacetPolynomial::via_pop_up(l, &s)];
    r.check(routes.iter().all(|x| *x == p), || format!("{name}: facet polynomial routes differ"));
    let dual = FacetPolynomial::of(&l.dual())?;
    r.check(dual == p, || format!("{name}: P_L {:?} vs P_L* {:?}", p.coeffs, dual.coeffs));
    Ok(r)
}

/// Criterion 8 over [`lattice_range`].
pub fn criterion_bookkeeping(out: &mut Outcome) -> Result<(), VerifyError> {
    for tag in lattice_range() {
        for_each_cambrian(tag, |cox, c, camb| {
            out.report.absorb(bookkeeping_check(camb.lattice(), &label(cox, c))?);
            Ok(())
        })?;
    }
    Ok(())
}

/// For `A_n` with the bipartite Coxeter element: the facet polynomial from
/// maximal arc diagrams and from the lattice, the closed form, and the
/// coefficient obtained from the `M̄` functional equation all agree.
pub fn generating_function_check(max_n: usize) -> Result<Report, VerifyError> {
    let mut r = Report::new("generating function");
    let closed = closed_form_conjectured(max_n);
    let functional = conjectured_from_recurrence(max_n);
    for n in 1..=max_n {
        let cox = Coxeter::new(TypeTag::A(n))?;
        let c = CoxeterElement::bipartite(cox.diagram());
        let nu = NuMap::of(&c);
        let mad = FacetPolynomial::from_degrees(maximal_diagrams(&nu)?.iter().map(|d| d.len()));
        let lattice = FacetPolynomial::of(Cambrian::new(&cox, &c)?.lattice())?;
        let from_closed = closed.coeff(n).to_u64();
        let from_functional = functional.coeff(n).to_u64();
        r.check(mad == lattice, || format!("A{n}: MAD {:?} vs lattice {:?}", mad.coeffs, lattice.coeffs));
        r.check(from_closed.as_ref() == Some(&mad.coeffs), || {
            format!("A{n}: closed form {from_closed:?} vs MAD {:?}", mad.coeffs)
        });
        r.check(from_functional == from_closed, || {
            format!("A{n}: functional equation {from_functional:?} vs closed form {from_closed:?}")
        });
    }
    Ok(r)
}

/// Criterion 4 for `1 ≤ n ≤ 7`.
pub fn criterion_generating_function(out: &mut Outcome) -> Result<(), VerifyError> {
    out.report.absorb(generating_function_check(MAX_TYPE_A_RANK)?);
    Ok(())
}

/// `Ψ` maps maximal bipartite arc diagrams of `A_n` bijectively onto Motzkin
/// paths of length `n + 1` without height-one peaks, with
/// `|δ| = n − #U(Ψ(δ))` and `Ψ⁻¹` a two-sided inverse.
pub fn bijection_check(n: usize) -> Result<Report, VerifyError> {
    let mut r = Report::new("bijection");
    let mads = maximal_diagrams(&NuMap::bipartite(n))?;
    let bar: BTreeSet<_> = motzkin_paths_no_low_peaks(n + 1).into_iter().collect();
    let mut images = BTreeSet::new();
    for d in &mads {
        let m = psi(d)?;
        r.check(bar.contains(&m), || format!("A{n}: Ψ({d:?}) = {m} has a low peak"));
        r.check(d.len() + m.count_up() == n, || format!("A{n}: |δ| = {} but #U = {}", d.len(), m.count_up()));
        r.check(psi_inverse(&m)? == *d, || format!("A{n}: Ψ⁻¹Ψ differs at {m}"));
        images.insert(m);
    }
    r.check(images.len() == mads.len(), || format!("A{n}: Ψ is not injective"));
    r.check(images == bar, || format!("A{n}: image has {} paths, target {}", images.len(), bar.len()));
    for m in &bar {
        r.check(psi(&psi_inverse(m)?)? == *m, || format!("A{n}: ΨΨ⁻¹ differs at {m}"));
    }
    Ok(r)
}

/// Criterion 5 for `1 ≤ n ≤ 7`.
pub fn criterion_bijection(out: &mut Outcome) -> Result<(), VerifyError> {
    for n in 1..=MAX_TYPE_A_RANK {
        out.report.absorb(bijection_check(n)?);
    }
    Ok(())
}
