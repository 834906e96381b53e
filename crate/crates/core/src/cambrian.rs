//! `c`-sorting words, `c`-sortable elements, Cambrian lattices, the
//! projection `π↓^c`, the Cambrian pop-stack operator and the conditions
//! describing its image.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::coxeter::{bits64, pos, split, Coxeter, CoxeterElement, Group, GroupElement};
use crate::lattice::{Congruence, FiniteLattice};
use crate::weak::{pop_weak, weak_interval};
use crate::Error;

/// The `c`-sorting word of an element with its blocks `I_c^{(k)}(w)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SortingWord {
    /// Letters (internal simple indices), a reduced word for `w`.
    pub letters: Vec<usize>,
    /// Bitmask of letters taken from the `k`-th copy of `c`, one entry per
    /// copy up to the last nonempty one.
    pub blocks: Vec<u64>,
}

impl SortingWord {
    /// `true` iff the blocks are nested decreasing.
    pub fn is_nested(&self) -> bool {
        self.blocks.windows(2).all(|b| b[1] & !b[0] == 0)
    }
}

/// The lexicographically first reduced subword of `c^∞` representing `w`.
///
/// Scans `c^∞` and takes a letter `s` exactly when `s` is a left descent of
/// what remains to be sorted.
pub fn sorting_word(cox: &Coxeter, c: &CoxeterElement, w: GroupElement) -> SortingWord {
    let mut rem = w;
    let mut letters = Vec::with_capacity(w.length());
    let mut blocks = Vec::new();
    while rem != GroupElement::IDENTITY {
        let mut block = 0u64;
        for &s in c.word() {
            if rem.has_inversion(s) {
                letters.push(s);
                block |= 1 << s;
                rem = cox.left_mul(s, rem);
            }
        }
        blocks.push(block);
    }
    SortingWord { letters, blocks }
}

/// `c`-sortability by nested blocks of the sorting word.
pub fn is_sortable(cox: &Coxeter, c: &CoxeterElement, w: GroupElement) -> bool {
    sorting_word(cox, c, w).is_nested()
}

/// `c`-sortability by the recursion on the first letter `s` of `c`: if `s`
/// is a left descent, `w` is sortable iff `sw` is `scs`-sortable; otherwise
/// iff `w` lies in `W_{S∖{s}}` and is sortable there for `c` without `s`.
pub fn is_sortable_recursive(cox: &Coxeter, c: &CoxeterElement, w: GroupElement) -> bool {
    let mut word: Vec<usize> = c.word().to_vec();
    let mut w = w;
    while w != GroupElement::IDENTITY {
        let Some(&s) = word.first() else {
            return false;
        };
        if w.has_inversion(s) {
            word.rotate_left(1);
            w = cox.left_mul(s, w);
        } else if cox.support(w) >> s & 1 == 1 {
            return false;
        } else {
            word.remove(0);
        }
    }
    true
}

/// All `c`-sortable elements by depth-first search over sorting words.
///
/// A sortable element's sorting word is built from nested blocks; every
/// prefix ending at a block boundary is itself the sorting word of a
/// sortable element, so the search extends block by block and keeps only
/// words that are the sorting words of their products.
pub fn sortables_by_search(cox: &Coxeter, c: &CoxeterElement) -> Vec<GroupElement> {
    let mut out = vec![GroupElement::IDENTITY];
    let mut stack: Vec<(GroupElement, u64, usize)> =
        vec![(GroupElement::IDENTITY, cox.all_simples(), 0)];
    while let Some((w, prev, nblocks)) = stack.pop() {
        // Nonempty sub-blocks of `prev`.
        let mut sub = prev;
        while sub != 0 {
            let mut x = w;
            let mut ok = true;
            for &s in c.word() {
                if sub >> s & 1 == 1 {
                    let y = cox.right_mul(x, s);
                    if y.length() < x.length() {
                        ok = false;
                        break;
                    }
                    x = y;
                }
            }
            if ok {
                let sw = sorting_word(cox, c, x);
                if sw.blocks.len() == nblocks + 1 && sw.blocks[nblocks] == sub && sw.is_nested() {
                    out.push(x);
                    stack.push((x, sub, nblocks + 1));
                }
            }
            sub = (sub - 1) & prev;
        }
    }
    out.sort();
    out.dedup();
    out
}

/// `ρ` indexed by vertex: `ρ_{a_k} = s_{a_n} ⋯ s_{a_{k+1}}(α_{a_k})` for
/// `c = s_{a_1} ⋯ s_{a_n}`. As a set this is `inv(c⁻¹)`.
pub fn projective_roots(cox: &Coxeter, c: &CoxeterElement) -> Vec<usize> {
    let word = c.word();
    let n = word.len();
    let mut rho = vec![0; n];
    for k in 0..n {
        let suffix: Vec<usize> = word[k + 1..].iter().rev().copied().collect();
        let (p, r) = split(cox.roots().act_word(&suffix, pos(word[k])));
        debug_assert!(p);
        rho[word[k]] = r;
    }
    rho
}

/// `true` iff every two descents of `w` commute.
pub fn descents_commute(cox: &Coxeter, w: GroupElement) -> bool {
    let d = cox.descents(w);
    bits64(d).all(|i| bits64(d).all(|j| i == j || cox.diagram().commute(i, j)))
}

/// The three equivalent descriptions of membership in the image of
/// `pop↓_{Camb_c}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ImageConditions {
    /// Membership in the brute-force image.
    pub in_image: bool,
    /// Descents commute and `inv(w) ∩ inv(c⁻¹) = ∅`.
    pub condition2: bool,
    /// `[pop↓_{Camb_c}(w), w]` is Boolean and `p_i ≰ w` for all `i`.
    pub condition3: bool,
}

/// The six conditions on `[pop↓(w), w]` for a `c`-sortable `w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IntervalConditions {
    /// The descents of `w` commute.
    pub descents_commute: bool,
    /// The weak interval is distributive.
    pub weak_distributive: bool,
    /// The weak interval is Boolean.
    pub weak_boolean: bool,
    /// The Cambrian interval is distributive.
    pub camb_distributive: bool,
    /// The Cambrian interval is Boolean.
    pub camb_boolean: bool,
    /// The two intervals are equal as sets.
    pub intervals_equal: bool,
}

impl IntervalConditions {
    /// All six as an array, in order.
    pub fn as_array(&self) -> [bool; 6] {
        [
            self.descents_commute,
            self.weak_distributive,
            self.weak_boolean,
            self.camb_distributive,
            self.camb_boolean,
            self.intervals_equal,
        ]
    }

    /// `true` iff all six agree.
    pub fn all_equivalent(&self) -> bool {
        let a = self.as_array();
        a.iter().all(|&x| x == a[0])
    }
}

/// The `c`-Cambrian lattice: the sublattice of `Weak(W)` on `c`-sortable
/// elements. Element `k` of the lattice is `sortables()[k]`.
#[derive(Clone, Debug)]
pub struct Cambrian {
    cox: Coxeter,
    c: CoxeterElement,
    sortables: Vec<GroupElement>,
    index: HashMap<GroupElement, usize>,
    lattice: FiniteLattice,
}

impl Cambrian {
    /// Builds `Camb_c`, enumerating sortables by search.
    pub fn new(cox: &Coxeter, c: &CoxeterElement) -> Result<Self, Error> {
        let mut sortables = sortables_by_search(cox, c);
        // Increasing length gives a linear extension, which keeps indices readable.
        sortables.sort_by_key(|w| (w.length(), *w));
        let index: HashMap<GroupElement, usize> =
            sortables.iter().enumerate().map(|(k, &w)| (w, k)).collect();
        let lattice = FiniteLattice::from_leq(sortables.len(), |a, b| sortables[a].leq(sortables[b]))?;
        Ok(Cambrian {
            cox: cox.clone(),
            c: c.clone(),
            sortables,
            index,
            lattice,
        })
    }

    /// The Coxeter group.
    pub fn coxeter(&self) -> &Coxeter {
        &self.cox
    }

    /// The Coxeter element.
    pub fn coxeter_element(&self) -> &CoxeterElement {
        &self.c
    }

    /// The lattice.
    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    /// Sortable elements by lattice index.
    pub fn sortables(&self) -> &[GroupElement] {
        &self.sortables
    }

    /// Number of sortable elements.
    pub fn len(&self) -> usize {
        self.sortables.len()
    }

    /// Never true: `e` is always sortable.
    pub fn is_empty(&self) -> bool {
        self.sortables.is_empty()
    }

    /// Group element at a lattice index.
    pub fn element(&self, k: usize) -> GroupElement {
        self.sortables[k]
    }

    /// Lattice index of a sortable element.
    pub fn index_of(&self, w: GroupElement) -> Option<usize> {
        self.index.get(&w).copied()
    }

    fn require(&self, w: GroupElement) -> Result<usize, Error> {
        self.index_of(w)
            .ok_or_else(|| Error::NotSortable(format!("{:?}", self.cox.label_word(&self.cox.reduced_word(w)))))
    }

    /// `π↓^c(w)`: the maximum sortable element weakly below `w`, found by
    /// brute force with a uniqueness check.
    pub fn pi_down(&self, w: GroupElement) -> Result<GroupElement, Error> {
        let below: Vec<GroupElement> = self.sortables.iter().copied().filter(|x| x.leq(w)).collect();
        let top = below
            .iter()
            .copied()
            .max_by_key(|x| x.length())
            .expect("e is below everything");
        if below.iter().all(|x| x.leq(top)) {
            Ok(top)
        } else {
            Err(Error::MaxNotUnique("sortable elements below w".into()))
        }
    }

    /// `pop↓_{Camb_c}(w) = π↓^c(pop↓_{Weak}(w))` for sortable `w`.
    pub fn pop(&self, w: GroupElement) -> Result<GroupElement, Error> {
        self.require(w)?;
        self.pi_down(pop_weak(&self.cox, w))
    }

    /// Forward orbit of the Cambrian pop down to `e`, inclusive.
    pub fn orbit(&self, w: GroupElement) -> Result<Vec<GroupElement>, Error> {
        let mut out = vec![w];
        let mut x = w;
        while x != GroupElement::IDENTITY {
            x = self.pop(x)?;
            out.push(x);
        }
        Ok(out)
    }

    /// The image of `pop↓_{Camb_c}` by brute force.
    pub fn pop_image(&self) -> Result<BTreeSet<GroupElement>, Error> {
        self.sortables.iter().map(|&w| self.pop(w)).collect()
    }

    /// `p_i`, the unique maximal element of
    /// `Θ_i = {x ∈ Camb_c : s_i ≤ x, s_j ≰ x for j ≠ i}`, for each `i`.
    pub fn p_elements(&self) -> Result<Vec<GroupElement>, Error> {
        let simples = self.cox.all_simples() as u128;
        (0..self.cox.rank())
            .map(|i| {
                let theta: Vec<GroupElement> = self
                    .sortables
                    .iter()
                    .copied()
                    .filter(|x| x.inv & simples == 1 << i)
                    .collect();
                let top = theta.iter().copied().max_by_key(|x| x.length()).expect("s_i ∈ Θ_i");
                if theta.iter().all(|x| x.leq(top)) {
                    Ok(top)
                } else {
                    Err(Error::MaxNotUnique(format!("Θ_{i}")))
                }
            })
            .collect()
    }

    /// Condition (2) of the image description.
    pub fn condition2(&self, w: GroupElement) -> bool {
        let rho = projective_roots(&self.cox, &self.c);
        descents_commute(&self.cox, w) && rho.iter().all(|&r| !w.has_inversion(r))
    }

    /// Condition (3) of the image description, given precomputed `p_i`.
    pub fn condition3(&self, w: GroupElement, p: &[GroupElement]) -> Result<bool, Error> {
        let k = self.require(w)?;
        let bottom = self.require(self.pop(w)?)?;
        let boolean = self.lattice.is_boolean_interval(bottom, k)?;
        Ok(boolean && p.iter().all(|pi| !pi.leq(w)))
    }

    /// Evaluates the three image conditions for every sortable element.
    pub fn image_conditions(&self) -> Result<Vec<(GroupElement, ImageConditions)>, Error> {
        let image = self.pop_image()?;
        let p = self.p_elements()?;
        self.sortables
            .iter()
            .map(|&w| {
                Ok((
                    w,
                    ImageConditions {
                        in_image: image.contains(&w),
                        condition2: self.condition2(w),
                        condition3: self.condition3(w, &p)?,
                    },
                ))
            })
            .collect()
    }

    /// The six interval conditions for a sortable `w`.
    pub fn interval_conditions(&self, w: GroupElement) -> Result<IntervalConditions, Error> {
        let k = self.require(w)?;
        let pw = pop_weak(&self.cox, w);
        let (weak_l, weak_elems) = weak_interval(&self.cox, pw, w)?;
        let pc = self.pop(w)?;
        let (camb_l, camb_map) = self.lattice.interval(self.require(pc)?, k)?;
        let weak_set: BTreeSet<GroupElement> = weak_elems.into_iter().collect();
        let camb_set: BTreeSet<GroupElement> = camb_map.iter().map(|&x| self.sortables[x]).collect();
        Ok(IntervalConditions {
            descents_commute: descents_commute(&self.cox, w),
            weak_distributive: weak_l.is_distributive(),
            weak_boolean: weak_l.is_boolean(),
            camb_distributive: camb_l.is_distributive(),
            camb_boolean: camb_l.is_boolean(),
            intervals_equal: weak_set == camb_set,
        })
    }

    /// Whether `pop_Weak^t(pop_Camb(w)) = pop_Camb^{t+1}(w)`.
    pub fn dynamical_identity(&self, w: GroupElement, t: usize) -> Result<bool, Error> {
        let mut lhs = self.pop(w)?;
        let mut rhs = lhs;
        for _ in 0..t {
            lhs = pop_weak(&self.cox, lhs);
            rhs = self.pop(rhs)?;
        }
        Ok(lhs == rhs)
    }

    /// The spine: union of the maximum-length chains, as an induced
    /// sublattice with its elements.
    pub fn spine(&self) -> Result<(FiniteLattice, Vec<GroupElement>), Error> {
        let idx = self.lattice.maximum_chain_union();
        let (l, map) = self.lattice.induced(&idx)?;
        Ok((l, map.into_iter().map(|k| self.sortables[k]).collect()))
    }

    /// The `c`-Cambrian congruence on `Weak(W)`: fibers of `π↓^c`,
    /// generated as the closure of the pairs `(w, π↓^c(w))`.
    pub fn congruence(&self, weak: &crate::weak::WeakOrder) -> Result<Congruence, Error> {
        let g: &Group = weak.group();
        let pairs: Vec<(usize, usize)> = g
            .elements()
            .iter()
            .map(|&w| Ok((weak.index_of(w), weak.index_of(self.pi_down(w)?))))
            .collect::<Result<_, Error>>()?;
        Ok(Congruence::closure(weak.lattice(), &pairs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::TypeTag;
    use crate::lattice::FacetPolynomial;
    use crate::weak::{from_permutation, to_permutation, WeakOrder};
    use proptest::prelude::*;

    fn setup(t: TypeTag, word: &[usize]) -> (Coxeter, CoxeterElement) {
        let cox = Coxeter::new(t).unwrap();
        let c = CoxeterElement::from_word(cox.diagram(), word).unwrap();
        (cox, c)
    }

    #[test]
    fn sorting_word_examples() {
        let (cox, c) = setup(TypeTag::A(2), &[0, 1]);
        assert_eq!(sorting_word(&cox, &c, GroupElement::IDENTITY).letters, Vec::<usize>::new());
        let sw = sorting_word(&cox, &c, cox.w0());
        assert_eq!(sw.letters, vec![0, 1, 0]);
        assert_eq!(sw.blocks, vec![0b11, 0b01]);
        // s2 s1 is not sortable for c = s1 s2: blocks {2}, {1}.
        let s21 = cox.from_word(&[1, 0]).unwrap();
        let sw = sorting_word(&cox, &c, s21);
        assert_eq!(sw.blocks, vec![0b10, 0b01]);
        assert!(!sw.is_nested());
    }

    #[test]
    fn sorting_words_are_reduced_words() {
        for t in [TypeTag::A(3), TypeTag::B(3), TypeTag::H3] {
            let cox = Coxeter::new(t).unwrap();
            let g = Group::new(&cox).unwrap();
            for c in CoxeterElement::all(cox.diagram()) {
                for &w in g.elements() {
                    let sw = sorting_word(&cox, &c, w);
                    assert_eq!(sw.letters.len(), w.length());
                    assert_eq!(cox.from_word(&sw.letters).unwrap(), w);
                }
            }
        }
    }

    #[test]
    fn two_sortability_routes_agree() {
        for t in [TypeTag::A(3), TypeTag::A(4), TypeTag::B(3), TypeTag::D(4), TypeTag::H3, TypeTag::G2] {
            let cox = Coxeter::new(t).unwrap();
            let g = Group::new(&cox).unwrap();
            for c in CoxeterElement::all(cox.diagram()) {
                let mut filtered: Vec<GroupElement> = g
                    .elements()
                    .iter()
                    .copied()
                    .filter(|&w| {
                        let a = is_sortable(&cox, &c, w);
                        assert_eq!(a, is_sortable_recursive(&cox, &c, w), "{t}");
                        a
                    })
                    .collect();
                filtered.sort();
                assert_eq!(filtered, sortables_by_search(&cox, &c), "{t}");
            }
        }
    }

    #[test]
    fn sortable_counts_are_catalan_numbers() {
        // Coxeter–Catalan numbers ∏ (h + e_i + 1)/(e_i + 1).
        for (t, n) in [
            (TypeTag::A(1), 2),
            (TypeTag::A(3), 14),
            (TypeTag::A(4), 42),
            (TypeTag::A(5), 132),
            (TypeTag::B(3), 20),
            (TypeTag::B(4), 70),
            (TypeTag::D(4), 50),
            (TypeTag::H3, 32),
            (TypeTag::F4, 105),
            (TypeTag::E6, 833),
            (TypeTag::I2(7), 9),
        ] {
            let cox = Coxeter::new(t).unwrap();
            for c in CoxeterElement::all(cox.diagram()).into_iter().take(3) {
                assert_eq!(sortables_by_search(&cox, &c).len(), n, "{t}");
            }
        }
    }

    #[test]
    fn dihedral_sortables() {
        for m in 3..=9 {
            let (cox, c) = setup(TypeTag::I2(m), &[0, 1]);
            let camb = Cambrian::new(&cox, &c).unwrap();
            assert_eq!(camb.len(), m + 2);
            let mut expect: Vec<GroupElement> = (0..=m)
                .map(|k| cox.from_word(&(0..k).map(|i| i % 2).collect::<Vec<_>>()).unwrap())
                .collect();
            expect.push(cox.simple(1));
            expect.sort();
            let mut got = camb.sortables().to_vec();
            got.sort();
            assert_eq!(got, expect);
        }
    }

    #[test]
    fn tamari_is_312_avoiding() {
        let (cox, c) = setup(TypeTag::A(4), &[0, 1, 2, 3]);
        let g = Group::new(&cox).unwrap();
        for &w in g.elements() {
            let p = to_permutation(&cox, w).unwrap();
            let has312 = (0..5).any(|a| {
                (a + 1..5).any(|b| (b + 1..5).any(|d| p[b] < p[d] && p[d] < p[a]))
            });
            assert_eq!(is_sortable(&cox, &c, w), !has312);
        }
    }

    #[test]
    fn a2_cambrian_examples() {
        let (cox, c) = setup(TypeTag::A(2), &[0, 1]);
        let camb = Cambrian::new(&cox, &c).unwrap();
        assert_eq!(camb.len(), 5);
        let s1 = cox.simple(0);
        let s2 = cox.simple(1);
        let s12 = cox.from_word(&[0, 1]).unwrap();
        let s21 = cox.from_word(&[1, 0]).unwrap();
        assert_eq!(camb.pi_down(s21).unwrap(), s2);
        assert_eq!(camb.pi_down(cox.w0()).unwrap(), cox.w0());
        assert_eq!(camb.pop(cox.w0()).unwrap(), GroupElement::IDENTITY);
        assert_eq!(camb.pop(s12).unwrap(), s1);
        assert_eq!(camb.pop(GroupElement::IDENTITY).unwrap(), GroupElement::IDENTITY);
        assert!(matches!(camb.pop(s21), Err(Error::NotSortable(_))));
        assert_eq!(camb.orbit(s12).unwrap(), vec![s12, s1, GroupElement::IDENTITY]);
        assert_eq!(camb.p_elements().unwrap(), vec![s12, s2]);
        let image = camb.pop_image().unwrap();
        assert_eq!(image, BTreeSet::from([GroupElement::IDENTITY, s1]));
        assert_eq!(FacetPolynomial::of(camb.lattice()).unwrap().coeffs, vec![0, 1, 1]);
        let (spine, elems) = camb.spine().unwrap();
        assert_eq!(spine.len(), 4);
        assert_eq!(elems, vec![GroupElement::IDENTITY, s1, s12, cox.w0()]);
    }

    #[test]
    fn a2_cambrian_congruence_classes() {
        let (cox, c) = setup(TypeTag::A(2), &[0, 1]);
        let camb = Cambrian::new(&cox, &c).unwrap();
        let weak = WeakOrder::new(&cox).unwrap();
        let cong = camb.congruence(&weak).unwrap();
        assert_eq!(cong.num_classes(), 5);
        let s2 = weak.index_of(cox.simple(1));
        let s21 = weak.index_of(cox.from_word(&[1, 0]).unwrap());
        assert_eq!(cong.class_of(s2), cong.class_of(s21));
        assert!(cong.check(weak.lattice()));
        let top = weak.index_of(cox.w0());
        assert_eq!(cong.quotient_pop(weak.lattice(), top).unwrap(), weak.lattice().bottom());
    }

    #[test]
    fn cambrian_is_a_sublattice_and_pop_matches() {
        for t in [TypeTag::A(3), TypeTag::B(3), TypeTag::H3, TypeTag::G2, TypeTag::A(4), TypeTag::D(4)] {
            let cox = Coxeter::new(t).unwrap();
            let weak = WeakOrder::new(&cox).unwrap();
            let wl = weak.lattice();
            for c in CoxeterElement::all(cox.diagram()) {
                let camb = Cambrian::new(&cox, &c).unwrap();
                let l = camb.lattice();
                for a in 0..l.len() {
                    let ia = weak.index_of(camb.element(a));
                    for b in 0..l.len() {
                        let ib = weak.index_of(camb.element(b));
                        assert_eq!(camb.element(l.meet(a, b)), weak.element(wl.meet(ia, ib)));
                        assert_eq!(camb.element(l.join(a, b)), weak.element(wl.join(ia, ib)));
                    }
                    assert_eq!(camb.element(l.pop_down(a)), camb.pop(camb.element(a)).unwrap());
                }
                // π↓ is idempotent, order-preserving and agrees with the congruence.
                let cong = camb.congruence(&weak).unwrap();
                assert!(cong.check(wl));
                assert_eq!(cong.num_classes(), camb.len());
                for k in 0..wl.len() {
                    let p = camb.pi_down(weak.element(k)).unwrap();
                    assert_eq!(weak.index_of(p), cong.pi_down(k));
                    assert_eq!(camb.pi_down(p).unwrap(), p);
                }
            }
        }
    }

    #[test]
    fn sortable_cjr_lemma() {
        for t in [TypeTag::A(3), TypeTag::B(3), TypeTag::H3] {
            let cox = Coxeter::new(t).unwrap();
            let g = Group::new(&cox).unwrap();
            for c in CoxeterElement::all(cox.diagram()) {
                let camb = Cambrian::new(&cox, &c).unwrap();
                let shards = crate::lattice::ShardLabeling::new(camb.lattice()).unwrap();
                for &w in g.elements() {
                    let cjr = crate::weak::cjr_weak(&cox, w);
                    let all = cjr.iter().all(|&x| is_sortable(&cox, &c, x));
                    assert_eq!(is_sortable(&cox, &c, w), all);
                    if let Some(k) = camb.index_of(w) {
                        let mut d: Vec<GroupElement> =
                            shards.d_set(k).iter().map(|&j| camb.element(j)).collect();
                        d.sort();
                        assert_eq!(d, cjr);
                    }
                }
            }
        }
    }

    #[test]
    fn projective_roots_are_inversions_of_c_inverse() {
        for t in [TypeTag::A(4), TypeTag::B(3), TypeTag::D(4), TypeTag::H3, TypeTag::E6] {
            let cox = Coxeter::new(t).unwrap();
            for c in CoxeterElement::all(cox.diagram()).into_iter().take(6) {
                let rho: BTreeSet<usize> = projective_roots(&cox, &c).into_iter().collect();
                let inv: BTreeSet<usize> = c.inverse_element(&cox).inversions().into_iter().collect();
                assert_eq!(rho, inv);
            }
        }
    }

    #[test]
    fn p_elements_contain_their_projective_root() {
        for t in [TypeTag::A(3), TypeTag::B(3), TypeTag::D(4), TypeTag::G2] {
            let cox = Coxeter::new(t).unwrap();
            for c in CoxeterElement::all(cox.diagram()) {
                let camb = Cambrian::new(&cox, &c).unwrap();
                let p = camb.p_elements().unwrap();
                let rho = projective_roots(&cox, &c);
                for (i, pi) in p.iter().enumerate() {
                    assert!(pi.has_inversion(rho[i]));
                }
                // p_i ≤ w iff ρ_i ∈ inv(w) on sortables.
                for &w in camb.sortables() {
                    for i in 0..cox.rank() {
                        assert_eq!(p[i].leq(w), w.has_inversion(rho[i]), "{t}");
                    }
                }
            }
        }
    }

    #[test]
    fn a1_p_is_w0() {
        let (cox, c) = setup(TypeTag::A(1), &[0]);
        let camb = Cambrian::new(&cox, &c).unwrap();
        assert_eq!(camb.p_elements().unwrap(), vec![cox.w0()]);
        assert_eq!(camb.len(), 2);
    }

    #[test]
    fn chosun_inversions_of_c_inverse() {
        let cox = Coxeter::new(TypeTag::A(7)).unwrap();
        let c = CoxeterElement::bipartite(cox.diagram());
        let table = crate::weak::transposition_table(&cox).unwrap();
        let mut got: Vec<(usize, usize)> = projective_roots(&cox, &c)
            .into_iter()
            .map(|r| *table.iter().find(|(_, &v)| v == r).unwrap().0)
            .collect();
        got.sort_unstable();
        let mut expect = vec![(2, 3), (4, 5), (6, 7), (1, 3), (2, 5), (4, 7), (6, 8)];
        expect.sort_unstable();
        assert_eq!(got, expect);
    }

    #[test]
    fn image_and_interval_theorems_small() {
        for t in [TypeTag::A(3), TypeTag::B(3), TypeTag::G2, TypeTag::I2(5)] {
            let cox = Coxeter::new(t).unwrap();
            let h = t.coxeter_number();
            for c in CoxeterElement::all(cox.diagram()) {
                let camb = Cambrian::new(&cox, &c).unwrap();
                for (w, cond) in camb.image_conditions().unwrap() {
                    assert_eq!(cond.in_image, cond.condition2, "{t} {w}");
                    assert_eq!(cond.in_image, cond.condition3, "{t} {w}");
                    let ic = camb.interval_conditions(w).unwrap();
                    assert!(ic.all_equivalent(), "{t} {w} {ic:?}");
                    for s in 0..=h {
                        assert!(camb.dynamical_identity(w, s).unwrap());
                    }
                }
                let (max_orbit, _) = camb.lattice().orbit_stats();
                assert!(max_orbit <= h);
            }
        }
    }

    #[test]
    fn interval_condition_examples() {
        let (cox, c) = setup(TypeTag::A(2), &[0, 1]);
        let camb = Cambrian::new(&cox, &c).unwrap();
        assert_eq!(camb.interval_conditions(GroupElement::IDENTITY).unwrap().as_array(), [true; 6]);
        assert_eq!(camb.interval_conditions(cox.simple(0)).unwrap().as_array(), [true; 6]);
        assert_eq!(camb.interval_conditions(cox.w0()).unwrap().as_array(), [false; 6]);
    }

    #[test]
    fn boolean_pop_intervals_have_power_of_two_size() {
        let (cox, c) = setup(TypeTag::A(4), &[1, 0, 3, 2]);
        let camb = Cambrian::new(&cox, &c).unwrap();
        let l = camb.lattice();
        for k in 0..l.len() {
            let (iv, _) = l.interval(l.pop_down(k), k).unwrap();
            assert!(iv.len() >= 1 << l.lower_covers(k).len());
        }
    }

    #[test]
    fn pop_example_in_weak_a4() {
        let cox = Coxeter::new(TypeTag::A(4)).unwrap();
        let w = from_permutation(&cox, &[5, 2, 3, 4, 1]).unwrap();
        let p = pop_weak(&cox, w);
        assert!(!descents_commute(&cox, p));
    }

    proptest! {
        #[test]
        fn pi_down_is_below_and_sortable(word in proptest::collection::vec(0usize..4, 0..25), ci in 0usize..8) {
            let cox = Coxeter::new(TypeTag::A(4)).unwrap();
            let c = CoxeterElement::all(cox.diagram())[ci].clone();
            let camb = Cambrian::new(&cox, &c).unwrap();
            let w = cox.from_word(&word).unwrap();
            let p = camb.pi_down(w).unwrap();
            prop_assert!(p.leq(w));
            prop_assert!(is_sortable(&cox, &c, p));
            prop_assert_eq!(p == w, is_sortable(&cox, &c, w));
        }
    }
}
