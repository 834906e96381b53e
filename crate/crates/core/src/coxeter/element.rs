//! Group elements as left inversion sets, and the group operations on them.

use std::fmt;

use serde::Serialize;

use super::roots::{neg, pos, split, RootSystem, SRoot};
use super::{CoxeterDiagram, CoxeterError, TypeTag};

/// A group element, canonically represented by its left inversion set
/// `inv(w) = {β ∈ Φ⁺ : w⁻¹(β) < 0}` as a bitset over root indices.
///
/// The length `ℓ(w) = |inv(w)|` is a popcount, so it is not stored.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct GroupElement {
    /// Bit `r` is set iff `β_r ∈ inv(w)`.
    pub inv: u128,
}

impl GroupElement {
    /// The identity element.
    pub const IDENTITY: GroupElement = GroupElement { inv: 0 };

    /// Coxeter length `ℓ(w)`.
    #[inline]
    pub fn length(self) -> usize {
        self.inv.count_ones() as usize
    }

    /// True iff `β_r ∈ inv(w)`.
    #[inline]
    pub fn has_inversion(self, r: usize) -> bool {
        self.inv >> r & 1 == 1
    }

    /// Weak order: `self ≤ other` iff `inv(self) ⊆ inv(other)`.
    #[inline]
    pub fn leq(self, other: GroupElement) -> bool {
        self.inv & !other.inv == 0
    }

    /// Indices of the left inversions, increasing.
    pub fn inversions(self) -> Vec<usize> {
        bits(self.inv).collect()
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "inv{:#x}", self.inv)
    }
}

/// Iterates the set bits of a `u128`.
pub fn bits(mut x: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if x == 0 {
            None
        } else {
            let r = x.trailing_zeros() as usize;
            x &= x - 1;
            Some(r)
        }
    })
}

/// Iterates the set bits of a `u64`.
pub fn bits64(mut x: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if x == 0 {
            None
        } else {
            let r = x.trailing_zeros() as usize;
            x &= x - 1;
            Some(r)
        }
    })
}

/// Side of a multiplication by a simple reflection.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `s_i · w`.
    Left,
    /// `w · s_i`.
    Right,
}

/// A finite irreducible Coxeter group with its root system.
#[derive(Clone, Debug)]
pub struct Coxeter {
    roots: RootSystem,
}

impl Coxeter {
    /// The standard group of a finite type.
    pub fn new(tag: TypeTag) -> Result<Self, CoxeterError> {
        Self::from_diagram(&CoxeterDiagram::of_type(tag)?)
    }

    /// The group of a validated diagram.
    pub fn from_diagram(diagram: &CoxeterDiagram) -> Result<Self, CoxeterError> {
        if diagram.type_tag.num_reflections() > 128 {
            return Err(CoxeterError::TooManyRoots(diagram.type_tag.num_reflections()));
        }
        Ok(Coxeter {
            roots: RootSystem::build(diagram)?,
        })
    }

    /// The root system.
    pub fn roots(&self) -> &RootSystem {
        &self.roots
    }

    /// The diagram.
    pub fn diagram(&self) -> &CoxeterDiagram {
        &self.roots.diagram
    }

    /// The type tag.
    pub fn type_tag(&self) -> TypeTag {
        self.roots.diagram.type_tag
    }

    /// Rank `n`.
    pub fn rank(&self) -> usize {
        self.roots.rank()
    }

    /// Number of reflections `N`.
    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    /// Bitmask of all simple indices.
    pub fn all_simples(&self) -> u64 {
        if self.rank() == 64 {
            u64::MAX
        } else {
            (1u64 << self.rank()) - 1
        }
    }

    /// The simple reflection `s_i`.
    pub fn simple(&self, i: usize) -> GroupElement {
        GroupElement { inv: 1 << i }
    }

    /// `s_i · w`: toggle `α_i`, then conjugate the rest by `s_i`.
    pub fn left_mul(&self, i: usize, w: GroupElement) -> GroupElement {
        let mut out: u128 = 0;
        for r in bits(w.inv & !(1u128 << i)) {
            let (p, k) = split(self.roots.simple_action[i][r]);
            debug_assert!(p);
            out |= 1 << k;
        }
        if !w.has_inversion(i) {
            out |= 1 << i;
        }
        GroupElement { inv: out }
    }

    /// `w(α_i)` as a signed root.
    pub fn image_of_simple(&self, w: GroupElement, i: usize) -> SRoot {
        self.roots.act_word(&self.reduced_word(w), pos(i))
    }

    /// `w · s_i`: `inv` gains or loses the root `±w(α_i)`.
    pub fn right_mul(&self, w: GroupElement, i: usize) -> GroupElement {
        Self::toggle(w, self.image_of_simple(w, i))
    }

    /// Right multiplication given a precomputed `w(α_i)`.
    #[inline]
    pub fn toggle(w: GroupElement, image: SRoot) -> GroupElement {
        let (_, k) = split(image);
        GroupElement {
            inv: w.inv ^ (1u128 << k),
        }
    }

    /// Multiplies by `s_i` on the given side.
    pub fn apply_simple(&self, w: GroupElement, i: usize, side: Side) -> GroupElement {
        match side {
            Side::Left => self.left_mul(i, w),
            Side::Right => self.right_mul(w, i),
        }
    }

    /// Reduced word, stripping the smallest left descent at each step.
    pub fn reduced_word(&self, w: GroupElement) -> Vec<usize> {
        let mut word = Vec::with_capacity(w.length());
        let mut cur = w;
        let mask = self.all_simples() as u128;
        while cur.inv != 0 {
            let i = (cur.inv & mask).trailing_zeros() as usize;
            word.push(i);
            cur = self.left_mul(i, cur);
        }
        word
    }

    /// Product of a word of simple indices (not necessarily reduced).
    pub fn from_word(&self, word: &[usize]) -> Result<GroupElement, CoxeterError> {
        if let Some(&bad) = word.iter().find(|&&i| i >= self.rank()) {
            return Err(CoxeterError::InvalidWord(format!("letter {bad} out of range")));
        }
        Ok(word
            .iter()
            .rev()
            .fold(GroupElement::IDENTITY, |w, &i| self.left_mul(i, w)))
    }

    /// Validates that a bitset is the inversion set of a group element.
    pub fn from_inv(&self, inv: u128) -> Result<GroupElement, CoxeterError> {
        let n = self.num_roots();
        if n < 128 && inv >> n != 0 {
            return Err(CoxeterError::NotBiclosed);
        }
        let mask = self.all_simples() as u128;
        let mut cur = GroupElement { inv };
        let mut word = Vec::new();
        while cur.inv != 0 {
            let d = cur.inv & mask;
            if d == 0 {
                return Err(CoxeterError::NotBiclosed);
            }
            let i = d.trailing_zeros() as usize;
            word.push(i);
            let next = self.left_mul(i, cur);
            if next.length() + 1 != cur.length() {
                return Err(CoxeterError::NotBiclosed);
            }
            cur = next;
        }
        let rebuilt = self.from_word(&word)?;
        if rebuilt.inv != inv {
            return Err(CoxeterError::NotBiclosed);
        }
        Ok(rebuilt)
    }

    /// Product `u · v`.
    pub fn mul(&self, u: GroupElement, v: GroupElement) -> GroupElement {
        self.reduced_word(u)
            .iter()
            .rev()
            .fold(v, |acc, &i| self.left_mul(i, acc))
    }

    /// Inverse `w⁻¹`.
    pub fn inverse(&self, w: GroupElement) -> GroupElement {
        self.reduced_word(w)
            .iter()
            .fold(GroupElement::IDENTITY, |acc, &i| self.left_mul(i, acc))
    }

    /// Right descents `Des(w) = {s : ℓ(ws) < ℓ(w)}` as a bitmask.
    pub fn descents(&self, w: GroupElement) -> u64 {
        let word = self.reduced_word(w);
        (0..self.rank())
            .filter(|&i| self.roots.act_word(&word, pos(i)) < 0)
            .fold(0, |m, i| m | 1 << i)
    }

    /// Left descents `{s : ℓ(sw) < ℓ(w)}`, i.e. simple roots in `inv(w)`.
    pub fn left_descents(&self, w: GroupElement) -> u64 {
        (w.inv & self.all_simples() as u128) as u64
    }

    /// Left inversions as root indices.
    pub fn left_inversions(&self, w: GroupElement) -> Vec<usize> {
        w.inversions()
    }

    /// Length `ℓ(w)`.
    pub fn length(&self, w: GroupElement) -> usize {
        w.length()
    }

    /// Support: simple indices occurring in any reduced word.
    pub fn support(&self, w: GroupElement) -> u64 {
        bits(w.inv).fold(0, |m, r| m | self.roots.support[r])
    }

    /// Long element `w∘(J)` of the parabolic `W_J`: its inversions are the
    /// positive roots supported in `J`.
    pub fn long_element(&self, j: u64) -> GroupElement {
        let inv = (0..self.num_roots())
            .filter(|&r| self.roots.support[r] & !j == 0)
            .fold(0u128, |m, r| m | 1 << r);
        GroupElement { inv }
    }

    /// The longest element `w∘`.
    pub fn w0(&self) -> GroupElement {
        self.long_element(self.all_simples())
    }

    /// `ψ(i)` defined by `w∘ s_i w∘ = s_{ψ(i)}`, i.e. `w∘(α_i) = −α_{ψ(i)}`.
    pub fn psi(&self, i: usize) -> usize {
        let img = self.image_of_simple(self.w0(), i);
        let (p, k) = split(img);
        debug_assert!(!p && k < self.rank());
        k
    }

    /// `ψ` as a table.
    pub fn psi_map(&self) -> Vec<usize> {
        let word = self.reduced_word(self.w0());
        (0..self.rank())
            .map(|i| split(self.roots.act_word(&word, pos(i))).1)
            .collect()
    }

    /// The group-theoretic order of an element.
    pub fn order(&self, w: GroupElement) -> usize {
        let mut k = 1;
        let mut x = w;
        while x != GroupElement::IDENTITY {
            x = self.mul(x, w);
            k += 1;
        }
        k
    }

    /// The reflection root `−w(α_s)` removed by `w ⋖ ws` for `s ∈ Des(w)`.
    pub fn cover_root(&self, w: GroupElement, s: usize) -> usize {
        let (p, k) = split(self.image_of_simple(w, s));
        debug_assert!(!p);
        k
    }

    /// Signed root for `−β_r`.
    pub fn neg_root(r: usize) -> SRoot {
        neg(r)
    }

    /// Display labels of a word.
    pub fn label_word(&self, word: &[usize]) -> Vec<usize> {
        word.iter().map(|&i| self.diagram().labels[i]).collect()
    }

    /// Parses a comma-separated word of display labels.
    pub fn parse_label_word(&self, s: &str) -> Result<Vec<usize>, CoxeterError> {
        s.split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| {
                let l: usize = t
                    .trim()
                    .trim_start_matches(['s', 'S'])
                    .parse()
                    .map_err(|_| CoxeterError::InvalidWord(s.to_string()))?;
                self.diagram()
                    .index_of_label(l)
                    .ok_or_else(|| CoxeterError::InvalidWord(format!("no generator labelled {l}")))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn a2_right_multiplication_examples() {
        let g = Coxeter::new(TypeTag::A(2)).unwrap();
        let s1 = g.apply_simple(GroupElement::IDENTITY, 0, Side::Right);
        assert_eq!(s1.inversions(), vec![0]);
        let s1s2 = g.apply_simple(s1, 1, Side::Right);
        // inv(s1 s2) = {α1, s1(α2) = α1 + α2}.
        let root_12 = (0..3).find(|&r| g.roots().support[r] == 0b11).unwrap();
        let mut expect = vec![0, root_12];
        expect.sort();
        assert_eq!(s1s2.inversions(), expect);
    }

    #[test]
    fn w0_loses_one_length_on_any_side() {
        for t in [TypeTag::A(3), TypeTag::B(3), TypeTag::H3, TypeTag::I2(7)] {
            let g = Coxeter::new(t).unwrap();
            let w0 = g.w0();
            assert_eq!(w0.length(), t.num_reflections());
            assert_eq!(g.descents(w0), g.all_simples());
            for i in 0..g.rank() {
                assert_eq!(g.right_mul(w0, i).length(), w0.length() - 1);
                assert_eq!(g.left_mul(i, w0).length(), w0.length() - 1);
            }
        }
    }

    #[test]
    fn long_element_examples() {
        let g = Coxeter::new(TypeTag::A(2)).unwrap();
        assert_eq!(g.long_element(0), GroupElement::IDENTITY);
        assert_eq!(g.long_element(0b01), g.simple(0));
        let w0 = g.long_element(0b11);
        assert_eq!(w0, g.from_word(&[0, 1, 0]).unwrap());
        assert_eq!(g.mul(w0, w0), GroupElement::IDENTITY);
    }

    #[test]
    fn psi_examples() {
        let a8 = Coxeter::new(TypeTag::A(8)).unwrap();
        // s_k ↦ s_{9−k}, i.e. internal i ↦ 7 − i.
        assert_eq!(a8.psi_map(), (0..8).rev().collect::<Vec<_>>());
        let d5 = Coxeter::new(TypeTag::D(5)).unwrap();
        assert_eq!(d5.psi(0), 1);
        assert_eq!(d5.psi(2), 2);
        for t in [TypeTag::B(3), TypeTag::D(4), TypeTag::E7, TypeTag::H3, TypeTag::F4] {
            let g = Coxeter::new(t).unwrap();
            assert_eq!(g.psi_map(), (0..g.rank()).collect::<Vec<_>>(), "{t}");
        }
    }

    #[test]
    fn psi_is_a_diagram_automorphism() {
        for t in [TypeTag::A(5), TypeTag::D(5), TypeTag::E6, TypeTag::I2(5), TypeTag::I2(8)] {
            let g = Coxeter::new(t).unwrap();
            let p = g.psi_map();
            for i in 0..g.rank() {
                assert_eq!(p[p[i]], i);
                for j in 0..g.rank() {
                    assert_eq!(g.diagram().bond[i][j], g.diagram().bond[p[i]][p[j]]);
                }
            }
        }
    }

    #[test]
    fn inversion_count_and_coxeter_number_table() {
        for t in [
            TypeTag::A(1),
            TypeTag::A(8),
            TypeTag::B(5),
            TypeTag::D(6),
            TypeTag::E6,
            TypeTag::E7,
            TypeTag::E8,
            TypeTag::F4,
            TypeTag::G2,
            TypeTag::H3,
            TypeTag::H4,
            TypeTag::I2(5),
            TypeTag::I2(11),
        ] {
            let g = Coxeter::new(t).unwrap();
            assert_eq!(g.w0().length(), t.num_reflections());
            let c: Vec<usize> = (0..g.rank()).collect();
            let h = g.order(g.from_word(&c).unwrap());
            assert_eq!(h, 2 * t.num_reflections() / t.rank(), "{t}");
        }
    }

    #[test]
    fn from_inv_rejects_non_biclosed_sets() {
        let g = Coxeter::new(TypeTag::A(2)).unwrap();
        let root_12 = (0..3).find(|&r| g.roots().support[r] == 0b11).unwrap();
        // {α1 + α2} alone is not an inversion set, nor is {α1, α2}.
        assert!(g.from_inv(1 << root_12).is_err());
        assert!(g.from_inv(0b11).is_err());
        assert!(g.from_inv(1 << 3).is_err());
        assert!(g.from_inv(1 | 1 << root_12).is_ok());
    }

    #[test]
    fn labels_parse() {
        let d5 = Coxeter::new(TypeTag::D(5)).unwrap();
        assert_eq!(d5.parse_label_word("0,2,1,3,4").unwrap(), vec![0, 2, 1, 3, 4]);
        let a3 = Coxeter::new(TypeTag::A(3)).unwrap();
        assert_eq!(a3.parse_label_word("s1,s3,s2").unwrap(), vec![0, 2, 1]);
        assert!(a3.parse_label_word("4").is_err());
    }

    fn word_strategy(n: usize) -> impl Strategy<Value = Vec<usize>> {
        proptest::collection::vec(0..n, 0..14)
    }

    proptest! {
        #[test]
        fn apply_simple_twice_is_identity(word in word_strategy(4), i in 0usize..4, left in any::<bool>()) {
            let g = Coxeter::new(TypeTag::B(4)).unwrap();
            let w = g.from_word(&word).unwrap();
            let side = if left { Side::Left } else { Side::Right };
            let once = g.apply_simple(w, i, side);
            prop_assert_eq!(once.length().abs_diff(w.length()), 1);
            prop_assert_eq!(g.apply_simple(once, i, side), w);
        }

        #[test]
        fn inverse_and_product_laws(u in word_strategy(3), v in word_strategy(3)) {
            let g = Coxeter::new(TypeTag::H3).unwrap();
            let a = g.from_word(&u).unwrap();
            let b = g.from_word(&v).unwrap();
            let mut uv = u.clone();
            uv.extend(&v);
            prop_assert_eq!(g.mul(a, b), g.from_word(&uv).unwrap());
            prop_assert_eq!(g.mul(a, g.inverse(a)), GroupElement::IDENTITY);
            prop_assert_eq!(g.inverse(a).length(), a.length());
            prop_assert!(g.from_inv(a.inv).is_ok());
        }

        #[test]
        fn reduced_word_has_length_many_letters(word in word_strategy(5)) {
            let g = Coxeter::new(TypeTag::D(5)).unwrap();
            let w = g.from_word(&word).unwrap();
            let rw = g.reduced_word(w);
            prop_assert_eq!(rw.len(), w.length());
            prop_assert_eq!(g.from_word(&rw).unwrap(), w);
        }

        #[test]
        fn descents_match_length_drop(word in word_strategy(4)) {
            let g = Coxeter::new(TypeTag::F4).unwrap();
            let w = g.from_word(&word).unwrap();
            let des = g.descents(w);
            for i in 0..4 {
                let lower = g.right_mul(w, i).length() < w.length();
                prop_assert_eq!(des >> i & 1 == 1, lower);
            }
        }
    }
}
