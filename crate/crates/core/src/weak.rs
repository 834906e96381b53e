//! The right weak order on a finite Coxeter group, its pop-stack operators,
//! cover reflections, canonical join representations and a one-line
//! permutation codec for type `A`.

use std::collections::{HashMap, VecDeque};

use crate::coxeter::{bits64, split, Coxeter, CoxeterError, Group, GroupElement, TypeTag};
use crate::lattice::FiniteLattice;
use crate::Error;

/// `Weak(W)` as a [`FiniteLattice`] whose element `k` is `group.element(k)`.
#[derive(Clone, Debug)]
pub struct WeakOrder {
    group: Group,
    lattice: FiniteLattice,
}

impl WeakOrder {
    /// Enumerates `W` and builds the lattice with covers `w ⋖ ws`, `s ∉ Des(w)`.
    pub fn new(cox: &Coxeter) -> Result<Self, Error> {
        let group = Group::new(cox)?;
        let n = cox.rank();
        let covers_up: Vec<Vec<usize>> = (0..group.len())
            .map(|k| {
                (0..n)
                    .filter(|&i| group.image_of_simple(k, i) >= 0)
                    .map(|i| group.right(k, i))
                    .collect()
            })
            .collect();
        let lattice = FiniteLattice::from_covers(group.len(), &covers_up)?;
        Ok(WeakOrder { group, lattice })
    }

    /// The enumerated group.
    pub fn group(&self) -> &Group {
        &self.group
    }

    /// The lattice.
    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    /// Group element at a lattice index.
    pub fn element(&self, k: usize) -> GroupElement {
        self.group.element(k)
    }

    /// Lattice index of a group element.
    pub fn index_of(&self, w: GroupElement) -> usize {
        self.group.index_of(w).expect("element of W")
    }
}

/// `pop↓(w) = w · w∘(Des(w))`, without building the lattice.
pub fn pop_weak(cox: &Coxeter, w: GroupElement) -> GroupElement {
    cox.mul(w, cox.long_element(cox.descents(w)))
}

/// `pop↑(w)`, obtained from [`pop_weak`] through the antiautomorphism
/// `w ↦ w w∘`.
pub fn pop_up_weak(cox: &Coxeter, w: GroupElement) -> GroupElement {
    let w0 = cox.w0();
    cox.mul(pop_weak(cox, cox.mul(w, w0)), w0)
}

/// Cover reflections of `w` as positive root indices: `β = −w(α_s)` for
/// each `s ∈ Des(w)`, so that `t_β w = w s ⋖ w`. Ordered by `s`.
pub fn cover_reflections(cox: &Coxeter, w: GroupElement) -> Vec<usize> {
    bits64(cox.descents(w)).map(|s| cox.cover_root(w, s)).collect()
}

/// Canonical join representation of `w` in `Weak(W)`: for each cover
/// reflection `t`, the minimal `x ≤ w` having `t` as a left inversion.
///
/// The set `{x ≤ w : t ∈ inv(x)}` has a unique minimal element, so
/// descending greedily while keeping `t` reaches it.
pub fn cjr_weak(cox: &Coxeter, w: GroupElement) -> Vec<GroupElement> {
    let mut out: Vec<GroupElement> = cover_reflections(cox, w)
        .into_iter()
        .map(|beta| minimal_witness(cox, w, beta))
        .collect();
    out.sort();
    out
}

/// The minimal `x ≤ w` with `β ∈ inv(x)`; requires `β ∈ inv(w)`.
pub fn minimal_witness(cox: &Coxeter, w: GroupElement, beta: usize) -> GroupElement {
    debug_assert!(w.has_inversion(beta));
    let mut x = w;
    'descend: loop {
        for s in bits64(cox.descents(x)) {
            if cox.cover_root(x, s) != beta {
                x = cox.right_mul(x, s);
                continue 'descend;
            }
        }
        return x;
    }
}

/// The interval `[u, v]` of `Weak(W)` as a lattice, with its elements.
pub fn weak_interval(
    cox: &Coxeter,
    u: GroupElement,
    v: GroupElement,
) -> Result<(FiniteLattice, Vec<GroupElement>), Error> {
    if !u.leq(v) {
        return Err(Error::InvalidInput("weak interval needs u ≤ v".into()));
    }
    let mut elems = vec![u];
    let mut index = HashMap::from([(u, 0usize)]);
    let mut covers_up: Vec<Vec<usize>> = vec![Vec::new()];
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        let x = elems[k];
        for s in 0..cox.rank() {
            let img = cox.image_of_simple(x, s);
            if img < 0 {
                continue;
            }
            let y = Coxeter::toggle(x, img);
            if !y.leq(v) {
                continue;
            }
            let idx = *index.entry(y).or_insert_with(|| {
                elems.push(y);
                covers_up.push(Vec::new());
                queue.push_back(elems.len() - 1);
                elems.len() - 1
            });
            covers_up[k].push(idx);
        }
    }
    let lattice = FiniteLattice::from_covers(elems.len(), &covers_up)?;
    Ok((lattice, elems))
}

/// Root index of the transposition `(a b)`, `1 ≤ a < b ≤ n + 1`, in type
/// `A_n`: the root `α_{a} + ⋯ + α_{b−1}` in 1-based labels.
pub fn transposition_table(cox: &Coxeter) -> Result<HashMap<(usize, usize), usize>, Error> {
    require_type_a(cox)?;
    let rs = cox.roots();
    Ok((0..cox.num_roots())
        .map(|r| {
            let sup = rs.support[r];
            let i = sup.trailing_zeros() as usize;
            let j = 63 - sup.leading_zeros() as usize;
            ((i + 1, j + 2), r)
        })
        .collect())
}

fn require_type_a(cox: &Coxeter) -> Result<usize, Error> {
    match cox.type_tag() {
        TypeTag::A(n) => Ok(n),
        t => Err(Error::Coxeter(CoxeterError::InvalidType(format!(
            "permutations need type A, got {t}"
        )))),
    }
}

/// One-line notation `w(1) ⋯ w(n+1)` of a type-`A_n` element.
///
/// The pair `a < b` is a left inversion iff the value `a` appears after the
/// value `b`, so the position of `v` counts smaller values placed before it
/// plus larger values placed before it.
pub fn to_permutation(cox: &Coxeter, w: GroupElement) -> Result<Vec<usize>, Error> {
    let n = require_type_a(cox)?;
    let table = transposition_table(cox)?;
    let inv = |a: usize, b: usize| w.has_inversion(table[&(a, b)]);
    let mut perm = vec![0; n + 1];
    for v in 1..=n + 1 {
        let pos = (1..v).filter(|&u| !inv(u, v)).count() + (v + 1..=n + 1).filter(|&u| inv(v, u)).count();
        perm[pos] = v;
    }
    Ok(perm)
}

/// The type-`A_n` element with one-line notation `perm` (values `1..=n+1`).
pub fn from_permutation(cox: &Coxeter, perm: &[usize]) -> Result<GroupElement, Error> {
    let n = require_type_a(cox)?;
    if perm.len() != n + 1 {
        return Err(Error::InvalidPermutation(format!(
            "A{n} needs {} values, got {}",
            n + 1,
            perm.len()
        )));
    }
    let mut seen = vec![false; n + 2];
    for &v in perm {
        if v == 0 || v > n + 1 || seen[v] {
            return Err(Error::InvalidPermutation(format!("{perm:?} is not a permutation of 1..={}", n + 1)));
        }
        seen[v] = true;
    }
    let table = transposition_table(cox)?;
    let mut inv: u128 = 0;
    for p in 0..perm.len() {
        for q in p + 1..perm.len() {
            if perm[p] > perm[q] {
                inv |= 1 << table[&(perm[q], perm[p])];
            }
        }
    }
    Ok(GroupElement { inv })
}

/// Parses `52341` (single digits) or `5,2,3,4,1`.
pub fn parse_permutation(s: &str) -> Result<Vec<usize>, Error> {
    let s = s.trim();
    let bad = || Error::InvalidPermutation(s.to_string());
    if s.contains(',') {
        s.split(',').map(|t| t.trim().parse::<usize>().map_err(|_| bad())).collect()
    } else {
        s.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect()
    }
}

/// Formats a permutation compactly when every value is a single digit.
pub fn format_permutation(perm: &[usize]) -> String {
    if perm.iter().all(|&v| v < 10) {
        perm.iter().map(|v| v.to_string()).collect()
    } else {
        perm.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// Right descents of a one-line permutation as a bitmask of internal
/// indices `i` with `w(i+1) > w(i+2)`.
pub fn permutation_descents(perm: &[usize]) -> u64 {
    (0..perm.len().saturating_sub(1))
        .filter(|&i| perm[i] > perm[i + 1])
        .fold(0, |m, i| m | 1 << i)
}

/// The reflection `t_β` as a group element.
///
/// Writes `β = s_{i1} ⋯ s_{ik}(α_j)` by walking down the breadth-first
/// distances from the simple roots, then returns `s_{i1} ⋯ s_{ik} s_j s_{ik} ⋯ s_{i1}`.
pub fn reflection(cox: &Coxeter, beta: usize) -> GroupElement {
    let rs = cox.roots();
    let n = cox.rank();
    let mut dist = vec![usize::MAX; cox.num_roots()];
    let mut queue: VecDeque<usize> = (0..n).collect();
    for i in 0..n {
        dist[i] = 0;
    }
    while let Some(r) = queue.pop_front() {
        for i in 0..n {
            let (p, k) = split(rs.act(i, r as i32));
            if p && dist[k] == usize::MAX {
                dist[k] = dist[r] + 1;
                queue.push_back(k);
            }
        }
    }
    let mut word = Vec::new();
    let mut cur = beta;
    while dist[cur] > 0 {
        let (i, k) = (0..n)
            .map(|i| (i, split(rs.act(i, cur as i32))))
            .find(|&(_, (p, k))| p && dist[k] + 1 == dist[cur])
            .map(|(i, (_, k))| (i, k))
            .expect("breadth-first distances decrease along some simple reflection");
        word.push(i);
        cur = k;
    }
    let mut full = word.clone();
    full.push(cur);
    full.extend(word.iter().rev());
    cox.from_word(&full).expect("valid word")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterDiagram;
    use proptest::prelude::*;

    fn a(n: usize) -> Coxeter {
        Coxeter::new(TypeTag::A(n)).unwrap()
    }

    /// One-line notation by swapping positions along a reduced word.
    fn perm_by_swaps(cox: &Coxeter, w: GroupElement) -> Vec<usize> {
        let mut p: Vec<usize> = (1..=cox.rank() + 1).collect();
        for i in cox.reduced_word(w) {
            p.swap(i, i + 1);
        }
        p
    }

    #[test]
    fn a2_lattice_shape() {
        let cox = a(2);
        let weak = WeakOrder::new(&cox).unwrap();
        let l = weak.lattice();
        assert_eq!(l.len(), 6);
        assert_eq!(l.cover_pairs().len(), 6);
        let s12 = weak.index_of(cox.from_word(&[0, 1]).unwrap());
        let s21 = weak.index_of(cox.from_word(&[1, 0]).unwrap());
        assert_eq!(weak.element(l.meet(s12, s21)), GroupElement::IDENTITY);
        assert!(!l.is_distributive_interval(l.bottom(), l.top()).unwrap());
        let s1 = weak.index_of(cox.simple(0));
        assert!(l.is_boolean_interval(s1, s12).unwrap());
    }

    #[test]
    fn a1_is_a_two_chain() {
        let weak = WeakOrder::new(&a(1)).unwrap();
        assert_eq!(weak.lattice().len(), 2);
        assert_eq!(weak.lattice().height(), 1);
    }

    #[test]
    fn dihedral_weak_order_is_two_chains() {
        for m in 3..=8 {
            let cox = Coxeter::new(TypeTag::I2(m)).unwrap();
            let l = WeakOrder::new(&cox).unwrap().lattice().clone();
            assert_eq!(l.len(), 2 * m);
            assert_eq!(l.atoms().len(), 2);
            assert_eq!(l.join_irreducibles().len(), 2 * m - 2);
            assert_eq!(l.height(), m);
        }
    }

    #[test]
    fn pop_weak_examples() {
        let cox = a(4);
        let w = from_permutation(&cox, &parse_permutation("52341").unwrap()).unwrap();
        assert_eq!(format_permutation(&to_permutation(&cox, pop_weak(&cox, w)).unwrap()), "25314");
        assert_eq!(pop_weak(&cox, GroupElement::IDENTITY), GroupElement::IDENTITY);
        assert_eq!(pop_weak(&cox, cox.w0()), GroupElement::IDENTITY);
    }

    #[test]
    fn pop_weak_matches_lattice_pop() {
        let mut types = vec![
            TypeTag::A(1),
            TypeTag::A(2),
            TypeTag::A(3),
            TypeTag::A(4),
            TypeTag::B(2),
            TypeTag::B(3),
            TypeTag::G2,
            TypeTag::H3,
        ];
        types.extend((3..=8).map(TypeTag::I2));
        for t in types {
            let cox = Coxeter::new(t).unwrap();
            let weak = WeakOrder::new(&cox).unwrap();
            let l = weak.lattice();
            for k in 0..l.len() {
                let w = weak.element(k);
                assert_eq!(weak.index_of(pop_weak(&cox, w)), l.pop_down(k), "{t}");
                assert_eq!(weak.index_of(pop_up_weak(&cox, w)), l.pop_up(k), "{t}");
            }
        }
    }

    #[test]
    fn cover_reflections_examples() {
        let cox = a(2);
        assert!(cover_reflections(&cox, GroupElement::IDENTITY).is_empty());
        assert_eq!(cover_reflections(&cox, cox.simple(0)), vec![0]);
        // Brute force: reflections t with t w∘ ⋖ w∘.
        let w0 = cox.w0();
        let mut brute: Vec<usize> = (0..cox.num_roots())
            .filter(|&b| {
                let tw = cox.mul(reflection(&cox, b), w0);
                tw.leq(w0) && tw.length() + 1 == w0.length()
            })
            .collect();
        brute.sort_unstable();
        let mut got = cover_reflections(&cox, w0);
        got.sort_unstable();
        assert_eq!(got, brute);
        assert_eq!(got.len(), 2);
        // The two cover reflections of w∘ in A2 are s1 and s2 (w∘ s_i = s_{ψ(i)} w∘).
        assert_eq!(got, vec![0, 1]);
    }

    #[test]
    fn reflections_are_involutions_with_one_root() {
        for t in [TypeTag::A(3), TypeTag::B(3), TypeTag::H3, TypeTag::I2(7)] {
            let cox = Coxeter::new(t).unwrap();
            for b in 0..cox.num_roots() {
                let r = reflection(&cox, b);
                assert_eq!(cox.mul(r, r), GroupElement::IDENTITY);
                assert!(r.has_inversion(b));
                assert_eq!(r.length() % 2, 1);
            }
        }
    }

    #[test]
    fn cjr_examples() {
        let cox = a(2);
        assert!(cjr_weak(&cox, GroupElement::IDENTITY).is_empty());
        assert_eq!(cjr_weak(&cox, cox.simple(0)), vec![cox.simple(0)]);
        // The two atoms already join to w∘ in the hexagon.
        assert_eq!(cjr_weak(&cox, cox.w0()), vec![cox.simple(0), cox.simple(1)]);
        let s12 = cox.from_word(&[0, 1]).unwrap();
        assert_eq!(cjr_weak(&cox, s12), vec![s12]);
    }

    #[test]
    fn cjr_matches_lattice_canonical_join() {
        for t in [TypeTag::A(3), TypeTag::B(3), TypeTag::H3, TypeTag::I2(5)] {
            let cox = Coxeter::new(t).unwrap();
            let weak = WeakOrder::new(&cox).unwrap();
            let shards = crate::lattice::ShardLabeling::new(weak.lattice()).unwrap();
            for k in 0..weak.lattice().len() {
                let mut got: Vec<usize> =
                    cjr_weak(&cox, weak.element(k)).into_iter().map(|x| weak.index_of(x)).collect();
                got.sort_unstable();
                assert_eq!(got, shards.d_set(k), "{t}");
            }
        }
    }

    #[test]
    fn shard_labels_determine_cover_reflection() {
        // Equal shard labels on two covers y ⋖ z force equal z y⁻¹.
        for t in [TypeTag::A(3), TypeTag::B(3)] {
            let cox = Coxeter::new(t).unwrap();
            let weak = WeakOrder::new(&cox).unwrap();
            let l = weak.lattice();
            let shards = crate::lattice::ShardLabeling::new(l).unwrap();
            let mut seen: HashMap<usize, GroupElement> = HashMap::new();
            for (y, z) in l.cover_pairs() {
                let t_ = cox.mul(weak.element(z), cox.inverse(weak.element(y)));
                let prev = *seen.entry(shards.label(y, z)).or_insert(t_);
                assert_eq!(prev, t_);
            }
        }
    }

    #[test]
    fn shard_labels_of_pop_intervals_are_monotone() {
        let cox = a(3);
        let weak = WeakOrder::new(&cox).unwrap();
        let l = weak.lattice();
        let shards = crate::lattice::ShardLabeling::new(l).unwrap();
        let labels = |w: usize| -> std::collections::BTreeSet<usize> {
            let (sub, map) = l.interval(l.pop_down(w), w).unwrap();
            sub.cover_pairs().into_iter().map(|(x, y)| shards.label(map[x], map[y])).collect()
        };
        let all: Vec<_> = (0..l.len()).map(labels).collect();
        for z in 0..l.len() {
            for w in 0..l.len() {
                let dz: std::collections::BTreeSet<usize> = shards.d_set(z).iter().copied().collect();
                let dw: std::collections::BTreeSet<usize> = shards.d_set(w).iter().copied().collect();
                if dz.is_subset(&dw) {
                    assert!(all[z].is_subset(&all[w]));
                }
            }
        }
    }

    #[test]
    fn descents_monotone_under_inverse_order() {
        for t in [TypeTag::A(3), TypeTag::B(3)] {
            let cox = Coxeter::new(t).unwrap();
            let g = Group::new(&cox).unwrap();
            let invs: Vec<GroupElement> = g.elements().iter().map(|&w| cox.inverse(w)).collect();
            for (a_, &u) in g.elements().iter().enumerate() {
                for (b_, &v) in g.elements().iter().enumerate() {
                    if invs[a_].leq(invs[b_]) {
                        let (du, dv) = (cox.descents(u), cox.descents(v));
                        assert_eq!(du & !dv, 0);
                    }
                }
            }
        }
    }

    #[test]
    fn weak_interval_matches_lattice_interval() {
        let cox = Coxeter::new(TypeTag::B(3)).unwrap();
        let weak = WeakOrder::new(&cox).unwrap();
        let l = weak.lattice();
        for k in (0..l.len()).step_by(7) {
            let w = weak.element(k);
            let p = pop_weak(&cox, w);
            let (a_, _) = weak_interval(&cox, p, w).unwrap();
            let (b_, _) = l.interval(weak.index_of(p), k).unwrap();
            assert_eq!(a_.len(), b_.len());
            assert_eq!(a_.is_distributive(), b_.is_distributive());
            assert_eq!(a_.is_boolean(), b_.is_boolean());
        }
        assert!(weak_interval(&cox, cox.w0(), GroupElement::IDENTITY).is_err());
    }

    #[test]
    fn permutation_codec_agrees_with_swaps() {
        let cox = a(4);
        let g = Group::new(&cox).unwrap();
        for &w in g.elements() {
            let p = to_permutation(&cox, w).unwrap();
            assert_eq!(p, perm_by_swaps(&cox, w));
            assert_eq!(from_permutation(&cox, &p).unwrap(), w);
            assert_eq!(permutation_descents(&p), cox.descents(w));
        }
        assert!(from_permutation(&cox, &[1, 2, 2, 4, 5]).is_err());
        assert!(from_permutation(&cox, &[1, 2, 3]).is_err());
        let b = Coxeter::new(TypeTag::B(2)).unwrap();
        assert!(to_permutation(&b, GroupElement::IDENTITY).is_err());
        assert_eq!(parse_permutation("5,2,3,4,1").unwrap(), vec![5, 2, 3, 4, 1]);
        assert!(parse_permutation("5x").is_err());
        let _ = CoxeterDiagram::of_type(TypeTag::A(4)).unwrap();
    }

    proptest! {
        #[test]
        fn pop_weak_is_below_and_deletes_descents(word in proptest::collection::vec(0usize..5, 0..30)) {
            let cox = a(5);
            let w = cox.from_word(&word).unwrap();
            let p = pop_weak(&cox, w);
            prop_assert!(p.leq(w));
            prop_assert_eq!(p.length() + cox.long_element(cox.descents(w)).length(), w.length());
            prop_assert!(w.leq(pop_up_weak(&cox, w)));
        }

        #[test]
        fn cjr_join_is_w(word in proptest::collection::vec(0usize..4, 0..20)) {
            let cox = a(4);
            let w = cox.from_word(&word).unwrap();
            let parts = cjr_weak(&cox, w);
            prop_assert_eq!(parts.len(), cox.descents(w).count_ones() as usize);
            for x in &parts {
                prop_assert!(x.leq(w));
                prop_assert_eq!(cox.descents(*x).count_ones(), 1);
            }
        }
    }
}
