//! Criterion 10: published worked examples, checked value by value.

use std::collections::BTreeSet;

use cambrian_core::cambrian::{descents_commute, projective_roots};
use cambrian_core::coxeter::{Coxeter, TypeTag};
use cambrian_core::heaps::CoxeterHeap;
use cambrian_core::lattice::ShardLabeling;
use cambrian_core::typea::{MotzkinPath, NuMap};
use cambrian_core::weak::{
    format_permutation, from_permutation, parse_permutation, pop_weak, reflection, to_permutation,
    transposition_table, WeakOrder,
};

use crate::{Outcome, Report, VerifyError};

/// `pop↓(52341) = 25314` in `Weak(A_4)`, whose descents `s_2, s_3` do not
/// commute.
pub fn pop_weak_vector() -> Result<Report, VerifyError> {
    let mut r = Report::new("pop_weak(52341)");
    let cox = Coxeter::new(TypeTag::A(4))?;
    let w = from_permutation(&cox, &parse_permutation("52341")?)?;
    let p = pop_weak(&cox, w);
    let got = format_permutation(&to_permutation(&cox, p)?);
    r.check(got == "25314", || format!("got {got}"));
    r.check(cox.descents(p) == 0b0110, || format!("descents {:#b}", cox.descents(p)));
    r.check(!descents_commute(&cox, p), || "descents commute".into());
    Ok(r)
}

/// The seven left inversions of `c⁻¹` for the bipartite element of `A_7`,
/// as transpositions and as words.
pub fn bipartite_a7_vector() -> Result<Report, VerifyError> {
    let mut r = Report::new("inv(c⁻¹) in A7");
    let cox = Coxeter::new(TypeTag::A(7))?;
    let nu = NuMap::bipartite(7);
    let c = nu.coxeter_element(&cox);
    r.check(NuMap::of(&c) == nu, || "ν does not round-trip".into());
    let table = transposition_table(&cox)?;
    // (transposition, reflection word with 0-based letters)
    let expected: [((usize, usize), &[usize]); 7] = [
        ((2, 3), &[1]),
        ((4, 5), &[3]),
        ((6, 7), &[5]),
        ((1, 3), &[1, 0, 1]),
        ((2, 5), &[1, 3, 2, 3, 1]),
        ((4, 7), &[3, 5, 4, 5, 3]),
        ((6, 8), &[5, 6, 5]),
    ];
    let want: BTreeSet<usize> = expected.iter().map(|(t, _)| table[t]).collect();
    let via_projectives: BTreeSet<usize> = projective_roots(&cox, &c).into_iter().collect();
    let via_inverse: BTreeSet<usize> = cox.left_inversions(c.inverse_element(&cox)).into_iter().collect();
    r.check(via_projectives == want, || format!("projective roots {via_projectives:?}, expected {want:?}"));
    r.check(via_inverse == want, || format!("left inversions {via_inverse:?}, expected {want:?}"));
    for (t, word) in expected {
        let g = cox.from_word(word)?;
        r.check(reflection(&cox, table[&t]) == g, || format!("{t:?} is not the word {word:?}"));
    }
    Ok(r)
}

/// `A_8` with `c = s1 s3 s2 s4 s6 s5 s7 s8`: `h = 9`, `ψ(s_k) = s_{9−k}` and
/// `z_c = c³ · s1 s3 s2 s4 s6`.
pub fn a8_vector() -> Result<Report, VerifyError> {
    let mut r = Report::new("z_c in A8");
    let cox = Coxeter::new(TypeTag::A(8))?;
    let word = [0, 2, 1, 3, 5, 4, 6, 7];
    let heap = CoxeterHeap::with_word(&cox, &word)?;
    r.check(heap.coxeter_number() == 9, || format!("h = {}", heap.coxeter_number()));
    r.check((0..8).all(|i| cox.psi(i) == 7 - i), || format!("ψ = {:?}", cox.psi_map()));
    let mut z = word.repeat(3);
    z.extend([0, 2, 1, 3, 5]);
    let expected = cox.from_word(&z)?;
    r.check(expected.length() == z.len(), || "the z_c word is not reduced".into());
    r.check(heap.z_c() == expected, || format!("z_c = {:?}", cox.reduced_word(heap.z_c())));
    Ok(r)
}

/// `D_5` with `c = s0 s2 s1 s3 s4`: `h = 8`, `ψ` swaps `s_0` and `s_1`,
/// `X_1 = {s0, s1, s3}` and `X_2 = {s2, s4}`.
pub fn d5_vector() -> Result<Report, VerifyError> {
    let mut r = Report::new("D5 bipartition");
    let cox = Coxeter::new(TypeTag::D(5))?;
    r.check(cox.diagram().edges() == vec![(0, 2), (1, 2), (2, 3), (3, 4)], || "edges differ".into());
    let heap = CoxeterHeap::with_word(&cox, &[0, 2, 1, 3, 4])?;
    r.check(heap.coxeter_number() == 8, || format!("h = {}", heap.coxeter_number()));
    r.check(cox.psi_map() == vec![1, 0, 2, 3, 4], || format!("ψ = {:?}", cox.psi_map()));
    let (x1, x2) = heap.bipartition();
    r.check((x1, x2) == (0b01011, 0b10100), || format!("X1 = {x1:#b}, X2 = {x2:#b}"));
    Ok(r)
}

/// In `Weak(I_2(m))` with chains `a_1 ⋖ … ⋖ a_{m−1}` and
/// `a_m ⋖ … ⋖ a_{2m−2}`: `κ(a_i) = a_{i−1}` with `a_0 = a_{2m−2}`, and the
/// Galois graph arrows follow the interval rule.
pub fn dihedral_vector(m: usize) -> Result<Report, VerifyError> {
    let mut r = Report::new(&format!("κ in I2({m})"));
    let cox = Coxeter::new(TypeTag::I2(m))?;
    let weak = WeakOrder::new(&cox)?;
    let l = weak.lattice();
    let chain = |start: usize| {
        let mut v = vec![start];
        while let Some(&next) = l.upper_covers(*v.last().expect("nonempty")).first() {
            if next == l.top() {
                break;
            }
            v.push(next);
        }
        v
    };
    let first = weak.index_of(cox.simple(0));
    let second = weak.index_of(cox.simple(1));
    // a[i] for 1 ≤ i ≤ 2m − 2; a[0] aliases a[2m − 2].
    let mut a = vec![0usize];
    a.extend(chain(first));
    a.extend(chain(second));
    r.check(a.len() == 2 * m - 1, || format!("chains have {} elements", a.len() - 1));
    if a.len() != 2 * m - 1 {
        return Ok(r);
    }
    a[0] = a[2 * m - 2];
    let s = ShardLabeling::new(l)?;
    for i in 1..=2 * m - 2 {
        r.check(s.kappa(a[i]) == a[i - 1], || format!("κ(a_{i}) is not a_{}", i - 1));
    }
    let pos = |x: usize| (1..=2 * m - 2).find(|&i| a[i] == x).expect("join-irreducible");
    let got: BTreeSet<(usize, usize)> = s.galois_graph(l).into_iter().map(|(x, y)| (pos(x), pos(y))).collect();
    let mut want = BTreeSet::new();
    for i in 1..=2 * m - 2 {
        for j in 1..=2 * m - 2 {
            let arrow = if i <= m - 1 {
                (1..i).contains(&j) || (m + 1..=2 * m - 2).contains(&j)
            } else {
                (2..m).contains(&j) || (m..i).contains(&j)
            };
            if arrow {
                want.insert((i, j));
            }
        }
    }
    r.check(got == want, || format!("Galois graph {got:?}, expected {want:?}"));
    Ok(r)
}

/// The peaks of `UHHDHUDUHUDD` are `(6, 1)` and `(10, 2)`.
pub fn peaks_vector() -> Result<Report, VerifyError> {
    let mut r = Report::new("peaks");
    let path: MotzkinPath = "UHHDHUDUHUDD".parse()?;
    let peaks = path.peaks();
    r.check(peaks == vec![(6, 1), (10, 2)], || format!("peaks {peaks:?}"));
    r.check(path.has_low_peak(), || "a height-one peak is expected".into());
    Ok(r)
}

/// Criterion 10.
pub fn criterion_vectors(out: &mut Outcome) -> Result<(), VerifyError> {
    out.report.absorb(pop_weak_vector()?);
    out.report.absorb(bipartite_a7_vector()?);
    out.report.absorb(a8_vector()?);
    out.report.absorb(d5_vector()?);
    out.report.absorb(dihedral_vector(5)?);
    out.report.absorb(peaks_vector()?);
    Ok(())
}
