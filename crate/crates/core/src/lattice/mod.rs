//! Finite lattices on index sets `0..n`.
//!
//! A [`FiniteLattice`] stores weak downsets and upsets as bitsets; meets
//! are the largest element of a downset intersection and joins the
//! smallest element of an upset intersection. Pop-stack operators, orbits,
//! intervals, distributivity and Boolean tests live here; shard labels,
//! congruences and exports live in submodules.

mod congruence;
mod export;
mod shard;

pub use congruence::Congruence;
pub use export::{galois_dot, hasse_dot};
pub use shard::{FacetPolynomial, ShardLabeling};

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::coxeter::max_elements;

/// Lattices up to this size get precomputed meet/join tables and a full
/// pairwise lattice check at build time.
pub const TABLE_LIMIT: usize = 2048;

/// Errors from lattice construction and lattice-theoretic queries.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    /// The order is not a lattice (or not a partial order).
    #[error("not a lattice: {0}")]
    NotALattice(String),
    /// `κ` or a shard label failed to exist or be unique.
    #[error("lattice is not semidistributive: {0}")]
    NotSemidistributive(String),
    /// `u ≰ v` for a requested interval `[u, v]`.
    #[error("[{u}, {v}] is not an interval: {u} is not below {v}")]
    NotAnInterval {
        /// Lower end.
        u: usize,
        /// Upper end.
        v: usize,
    },
    /// The element is not the bottom of its congruence class.
    #[error("element {0} is not a quotient representative")]
    NotAQuotientRepresentative(usize),
    /// Refused because of the element cap.
    #[error("lattice of size {size} exceeds the element cap {cap}")]
    TooLarge {
        /// Requested size.
        size: usize,
        /// Configured cap.
        cap: usize,
    },
}

/// A finite lattice on `0..n`.
#[derive(Clone, Debug)]
pub struct FiniteLattice {
    n: usize,
    down: Vec<FixedBitSet>,
    up: Vec<FixedBitSet>,
    dsize: Vec<usize>,
    usize_: Vec<usize>,
    covers_down: Vec<Vec<usize>>,
    covers_up: Vec<Vec<usize>>,
    bottom: usize,
    top: usize,
    meet_table: Option<Vec<u32>>,
    join_table: Option<Vec<u32>>,
}

impl FiniteLattice {
    /// Builds a lattice from an order predicate `leq(x, y)`.
    pub fn from_leq(n: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self, LatticeError> {
        Self::check_cap(n)?;
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for (y, d) in down.iter_mut().enumerate() {
            for x in 0..n {
                if x == y || leq(x, y) {
                    d.insert(x);
                }
            }
        }
        Self::from_downsets(down)
    }

    /// Builds a lattice from its cover relation (`covers_up[x]` lists the
    /// elements covering `x`).
    pub fn from_covers(n: usize, covers_up: &[Vec<usize>]) -> Result<Self, LatticeError> {
        Self::check_cap(n)?;
        let mut indeg = vec![0usize; n];
        for ups in covers_up {
            for &y in ups {
                indeg[y] += 1;
            }
        }
        let mut order: Vec<usize> = (0..n).filter(|&x| indeg[x] == 0).collect();
        let mut head = 0;
        while head < order.len() {
            let x = order[head];
            head += 1;
            for &y in &covers_up[x] {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    order.push(y);
                }
            }
        }
        if order.len() != n {
            return Err(LatticeError::NotALattice("cover relation has a cycle".into()));
        }
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for &x in &order {
            down[x].insert(x);
            let dx = down[x].clone();
            for &y in &covers_up[x] {
                down[y].union_with(&dx);
            }
        }
        Self::from_downsets(down)
    }

    /// Builds a lattice from weak downsets (`down[y]` contains `x` iff
    /// `x ≤ y`; reflexive).
    pub fn from_downsets(down: Vec<FixedBitSet>) -> Result<Self, LatticeError> {
        let n = down.len();
        Self::check_cap(n)?;
        if n == 0 {
            return Err(LatticeError::NotALattice("empty order".into()));
        }
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (y, d) in down.iter().enumerate() {
            if !d.contains(y) {
                return Err(LatticeError::NotALattice("order is not reflexive".into()));
            }
            for x in d.ones() {
                up[x].insert(y);
            }
        }
        for y in 0..n {
            for x in down[y].ones() {
                if x != y && down[y].contains(x) && down[x].contains(y) {
                    return Err(LatticeError::NotALattice("order is not antisymmetric".into()));
                }
                if !down[x].is_subset(&down[y]) {
                    return Err(LatticeError::NotALattice("order is not transitive".into()));
                }
            }
        }
        let dsize: Vec<usize> = down.iter().map(|d| d.count_ones(..)).collect();
        let usize_: Vec<usize> = up.iter().map(|u| u.count_ones(..)).collect();
        let bottom = (0..n).find(|&x| usize_[x] == n).ok_or_else(|| {
            LatticeError::NotALattice("no minimum element".into())
        })?;
        let top = (0..n)
            .find(|&x| dsize[x] == n)
            .ok_or_else(|| LatticeError::NotALattice("no maximum element".into()))?;
        let mut covers_down = vec![Vec::new(); n];
        let mut covers_up = vec![Vec::new(); n];
        for y in 0..n {
            let mut below: Vec<usize> = down[y].ones().filter(|&x| x != y).collect();
            below.sort_by_key(|&x| std::cmp::Reverse(dsize[x]));
            let mut covered = FixedBitSet::with_capacity(n);
            for x in below {
                if !covered.contains(x) {
                    covers_down[y].push(x);
                    covered.union_with(&down[x]);
                }
            }
            covers_down[y].sort_unstable();
        }
        for y in 0..n {
            for &x in &covers_down[y] {
                covers_up[x].push(y);
            }
        }
        let mut lat = FiniteLattice {
            n,
            down,
            up,
            dsize,
            usize_,
            covers_down,
            covers_up,
            bottom,
            top,
            meet_table: None,
            join_table: None,
        };
        if n <= TABLE_LIMIT {
            lat.build_tables()?;
        }
        Ok(lat)
    }

    fn check_cap(n: usize) -> Result<(), LatticeError> {
        let cap = max_elements();
        if n > cap {
            return Err(LatticeError::TooLarge { size: n, cap });
        }
        Ok(())
    }

    fn build_tables(&mut self) -> Result<(), LatticeError> {
        let n = self.n;
        let mut mt = vec![0u32; n * n];
        let mut jt = vec![0u32; n * n];
        for x in 0..n {
            for y in x..n {
                let m = self.meet_slow(x, y)?;
                let j = self.join_slow(x, y)?;
                mt[x * n + y] = m as u32;
                mt[y * n + x] = m as u32;
                jt[x * n + y] = j as u32;
                jt[y * n + x] = j as u32;
            }
        }
        self.meet_table = Some(mt);
        self.join_table = Some(jt);
        Ok(())
    }

    fn meet_slow(&self, x: usize, y: usize) -> Result<usize, LatticeError> {
        let mut common = self.down[x].clone();
        common.intersect_with(&self.down[y]);
        let best = common
            .ones()
            .max_by_key(|&z| self.dsize[z])
            .expect("bottom is common");
        if self.dsize[best] != common.count_ones(..) || !common.is_subset(&self.down[best]) {
            return Err(LatticeError::NotALattice(format!("{x} and {y} have no meet")));
        }
        Ok(best)
    }

    fn join_slow(&self, x: usize, y: usize) -> Result<usize, LatticeError> {
        let mut common = self.up[x].clone();
        common.intersect_with(&self.up[y]);
        let best = common
            .ones()
            .max_by_key(|&z| self.usize_[z])
            .expect("top is common");
        if self.usize_[best] != common.count_ones(..) || !common.is_subset(&self.up[best]) {
            return Err(LatticeError::NotALattice(format!("{x} and {y} have no join")));
        }
        Ok(best)
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.n
    }

    /// Never true: lattices are nonempty.
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// The minimum `0̂`.
    pub fn bottom(&self) -> usize {
        self.bottom
    }

    /// The maximum `1̂`.
    pub fn top(&self) -> usize {
        self.top
    }

    /// `x ≤ y`.
    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.down[y].contains(x)
    }

    /// Weak downset of `x`.
    pub fn downset(&self, x: usize) -> &FixedBitSet {
        &self.down[x]
    }

    /// Weak upset of `x`.
    pub fn upset(&self, x: usize) -> &FixedBitSet {
        &self.up[x]
    }

    /// Size of the weak downset of `x`; a linear extension key.
    pub fn downset_size(&self, x: usize) -> usize {
        self.dsize[x]
    }

    /// Elements covered by `x`.
    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.covers_down[x]
    }

    /// Elements covering `x`.
    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.covers_up[x]
    }

    /// All cover pairs `(x, y)` with `x ⋖ y`.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|y| self.covers_down[y].iter().map(move |&x| (x, y)))
            .collect()
    }

    /// Elements in a linear extension (increasing downset size).
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.n).collect();
        v.sort_by_key(|&x| (self.dsize[x], x));
        v
    }

    /// Meet `x ∧ y`.
    pub fn meet(&self, x: usize, y: usize) -> usize {
        match &self.meet_table {
            Some(t) => t[x * self.n + y] as usize,
            None => self.meet_slow(x, y).expect("validated lattice"),
        }
    }

    /// Join `x ∨ y`.
    pub fn join(&self, x: usize, y: usize) -> usize {
        match &self.join_table {
            Some(t) => t[x * self.n + y] as usize,
            None => self.join_slow(x, y).expect("validated lattice"),
        }
    }

    /// Meet of a set (`1̂` for the empty set).
    pub fn meet_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.top, |a, b| self.meet(a, b))
    }

    /// Join of a set (`0̂` for the empty set).
    pub fn join_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.bottom, |a, b| self.join(a, b))
    }

    /// `pop↓(x) = x ∧ ⋀{y : y ⋖ x}`.
    pub fn pop_down(&self, x: usize) -> usize {
        self.meet_all(self.covers_down[x].iter().copied().chain([x]))
    }

    /// `pop↑(x) = x ∨ ⋁{y : x ⋖ y}`.
    pub fn pop_up(&self, x: usize) -> usize {
        self.join_all(self.covers_up[x].iter().copied().chain([x]))
    }

    /// Forward orbit of `pop↓` from `x`, ending with `0̂` exactly once.
    pub fn orbit(&self, x: usize) -> Vec<usize> {
        let mut out = vec![x];
        let mut cur = x;
        while cur != self.bottom {
            cur = self.pop_down(cur);
            out.push(cur);
        }
        out
    }

    /// `|O(x)|` for every element.
    pub fn orbit_sizes(&self) -> Vec<usize> {
        let mut size = vec![0usize; self.n];
        for x in self.linear_extension() {
            size[x] = if x == self.bottom {
                1
            } else {
                1 + size[self.pop_down(x)]
            };
        }
        size
    }

    /// `(υ_L, Υ_L)`: the maximum orbit size and the elements attaining it.
    pub fn orbit_stats(&self) -> (usize, Vec<usize>) {
        let size = self.orbit_sizes();
        let max = size.iter().copied().max().unwrap_or(0);
        let arg = (0..self.n).filter(|&x| size[x] == max).collect();
        (max, arg)
    }

    /// The image `pop↓(L)`, sorted.
    pub fn pop_down_image(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.n).map(|x| self.pop_down(x)).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// The image `pop↑(L)`, sorted.
    pub fn pop_up_image(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.n).map(|x| self.pop_up(x)).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Join-irreducibles: exactly one lower cover.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.covers_down[x].len() == 1).collect()
    }

    /// Meet-irreducibles: exactly one upper cover.
    pub fn meet_irreducibles(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.covers_up[x].len() == 1).collect()
    }

    /// Atoms: elements covering `0̂`.
    pub fn atoms(&self) -> &[usize] {
        &self.covers_up[self.bottom]
    }

    /// Length of the longest chain (number of cover steps).
    pub fn height(&self) -> usize {
        self.chain_depths().0[self.top]
    }

    /// `(depth, co-depth)`: longest chain lengths from `0̂` up to `x` and from
    /// `x` up to `1̂`.
    pub fn chain_depths(&self) -> (Vec<usize>, Vec<usize>) {
        let order = self.linear_extension();
        let mut depth = vec![0usize; self.n];
        for &y in &order {
            depth[y] = self.covers_down[y]
                .iter()
                .map(|&x| depth[x] + 1)
                .max()
                .unwrap_or(0);
        }
        let mut co = vec![0usize; self.n];
        for &x in order.iter().rev() {
            co[x] = self.covers_up[x]
                .iter()
                .map(|&y| co[y] + 1)
                .max()
                .unwrap_or(0);
        }
        (depth, co)
    }

    /// Elements lying on some maximum-length chain.
    pub fn maximum_chain_union(&self) -> Vec<usize> {
        let (d, c) = self.chain_depths();
        let h = d[self.top];
        (0..self.n).filter(|&x| d[x] + c[x] == h).collect()
    }

    /// The subposet induced on `subset`, with the index map back into `self`.
    pub fn induced(&self, subset: &[usize]) -> Result<(FiniteLattice, Vec<usize>), LatticeError> {
        let idx = subset.to_vec();
        let lat = FiniteLattice::from_leq(idx.len(), |a, b| self.leq(idx[a], idx[b]))?;
        Ok((lat, idx))
    }

    /// The interval `[u, v]` as a lattice, with the index map into `self`.
    pub fn interval(&self, u: usize, v: usize) -> Result<(FiniteLattice, Vec<usize>), LatticeError> {
        if !self.leq(u, v) {
            return Err(LatticeError::NotAnInterval { u, v });
        }
        let mut members = self.up[u].clone();
        members.intersect_with(&self.down[v]);
        let subset: Vec<usize> = members.ones().collect();
        self.induced(&subset)
    }

    /// The dual lattice `L*` on the same indices, built from reversed covers.
    pub fn dual(&self) -> FiniteLattice {
        FiniteLattice::from_covers(self.n, &self.covers_down).expect("dual of a lattice")
    }

    /// Distributivity: every join-irreducible `j` is join-prime, i.e. the
    /// elements not above `j` have a join that is still not above `j`.
    pub fn is_distributive(&self) -> bool {
        self.join_irreducibles().into_iter().all(|j| {
            let outside = (0..self.n).filter(|&x| !self.leq(j, x));
            !self.leq(j, self.join_all(outside))
        })
    }

    /// Boolean test: with `k` atoms, `|L| = 2^k` and `x ↦ {atoms ≤ x}` is an
    /// order isomorphism onto the subsets of the atoms.
    pub fn is_boolean(&self) -> bool {
        let atoms = self.atoms();
        let k = atoms.len();
        if k >= 32 || self.n != 1usize << k {
            return false;
        }
        let mask: Vec<u32> = (0..self.n)
            .map(|x| {
                atoms
                    .iter()
                    .enumerate()
                    .filter(|(_, &a)| self.leq(a, x))
                    .fold(0u32, |m, (i, _)| m | 1 << i)
            })
            .collect();
        let mut seen = vec![false; self.n];
        for &m in &mask {
            if seen[m as usize] {
                return false;
            }
            seen[m as usize] = true;
        }
        (0..self.n).all(|x| {
            (0..self.n).all(|y| self.leq(x, y) == (mask[x] & !mask[y] == 0))
        })
    }

    /// Distributivity of the interval `[u, v]`.
    pub fn is_distributive_interval(&self, u: usize, v: usize) -> Result<bool, LatticeError> {
        Ok(self.interval(u, v)?.0.is_distributive())
    }

    /// Boolean test for the interval `[u, v]`.
    pub fn is_boolean_interval(&self, u: usize, v: usize) -> Result<bool, LatticeError> {
        Ok(self.interval(u, v)?.0.is_boolean())
    }

    /// The chain `0 < 1 < ⋯ < k−1`.
    pub fn chain(k: usize) -> FiniteLattice {
        FiniteLattice::from_leq(k, |a, b| a <= b).expect("chain")
    }

    /// The Boolean lattice on `k` atoms; element `S` is the bitmask `S`.
    pub fn boolean(k: usize) -> FiniteLattice {
        FiniteLattice::from_leq(1 << k, |a, b| a & !b == 0).expect("Boolean lattice")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// The pentagon `N5`: 0 < a < b < 1, 0 < c < 1.
    pub(crate) fn pentagon() -> FiniteLattice {
        FiniteLattice::from_covers(5, &[vec![1, 3], vec![2], vec![4], vec![4], vec![]]).unwrap()
    }

    /// The diamond `M3`.
    pub(crate) fn diamond() -> FiniteLattice {
        FiniteLattice::from_covers(5, &[vec![1, 2, 3], vec![4], vec![4], vec![4], vec![]]).unwrap()
    }

    /// Brute-force distributivity by the identity `x ∧ (y ∨ z) = (x∧y) ∨ (x∧z)`.
    pub(crate) fn distributive_by_identity(l: &FiniteLattice) -> bool {
        let n = l.len();
        (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|z| l.meet(x, l.join(y, z)) == l.join(l.meet(x, y), l.meet(x, z)))
            })
        })
    }

    #[test]
    fn non_lattices_are_rejected() {
        // Two maximal elements.
        assert!(FiniteLattice::from_covers(3, &[vec![1, 2], vec![], vec![]]).is_err());
        // Bowtie: 0 < a,b < c,d < 1 has no join of a, b.
        let bowtie = [vec![1, 2], vec![3, 4], vec![3, 4], vec![5], vec![5], vec![]];
        assert!(FiniteLattice::from_covers(6, &bowtie).is_err());
        assert!(FiniteLattice::from_covers(2, &[vec![1], vec![0]]).is_err());
    }

    #[test]
    fn meet_join_trivia() {
        let l = pentagon();
        for x in 0..5 {
            assert_eq!(l.meet(x, l.bottom()), l.bottom());
            assert_eq!(l.join(x, x), x);
        }
        assert_eq!(l.join(1, 3), 4);
        assert_eq!(l.meet(2, 3), 0);
    }

    #[test]
    fn pop_and_orbits() {
        let l = pentagon();
        assert_eq!(l.pop_down(l.bottom()), l.bottom());
        assert_eq!(l.orbit(l.bottom()), vec![l.bottom()]);
        assert_eq!(l.orbit(2), vec![2, 1, 0]);
        assert_eq!(l.orbit_stats(), (3, vec![2]));
        assert_eq!(l.pop_down(4), 0);
        assert_eq!(l.pop_up(0), 4);
    }

    #[test]
    fn distributivity_examples() {
        // The pentagon has |J| = 3 = height, yet it is not distributive.
        let p = pentagon();
        assert_eq!(p.join_irreducibles().len(), 3);
        assert_eq!(p.height(), 3);
        assert!(!p.is_distributive());
        assert!(!diamond().is_distributive());
        assert!(FiniteLattice::boolean(3).is_distributive());
        assert!(FiniteLattice::chain(4).is_distributive());
        // Product of two chains.
        let grid = FiniteLattice::from_leq(9, |a, b| a / 3 <= b / 3 && a % 3 <= b % 3).unwrap();
        assert!(grid.is_distributive());
        assert!(!grid.is_boolean());
    }

    #[test]
    fn boolean_examples() {
        assert!(FiniteLattice::boolean(0).is_boolean());
        assert!(FiniteLattice::boolean(4).is_boolean());
        assert!(FiniteLattice::chain(2).is_boolean());
        assert!(!FiniteLattice::chain(3).is_boolean());
        assert!(!diamond().is_boolean());
        let l = pentagon();
        assert!(l.is_boolean_interval(1, 2).unwrap());
        assert!(l.is_boolean_interval(3, 3).unwrap());
        assert!(matches!(
            l.interval(2, 3),
            Err(LatticeError::NotAnInterval { .. })
        ));
    }

    #[test]
    fn dual_swaps_order() {
        let l = pentagon();
        let d = l.dual();
        for x in 0..5 {
            for y in 0..5 {
                assert_eq!(l.leq(x, y), d.leq(y, x));
                assert_eq!(l.meet(x, y), d.join(x, y));
            }
        }
    }

    #[test]
    fn maximum_chains() {
        let l = pentagon();
        assert_eq!(l.maximum_chain_union(), vec![0, 1, 2, 4]);
    }

    fn random_lattice() -> impl Strategy<Value = FiniteLattice> {
        // Lattices of order ideals of random posets on ≤ 5 points: always
        // distributive. Also closure systems from random subset families:
        // intersection-closed families containing the full set are lattices.
        proptest::collection::vec(0u32..32, 0..10).prop_map(|fam| {
            let mut sets: Vec<u32> = fam;
            sets.push(31);
            loop {
                let mut grew = false;
                let snapshot = sets.clone();
                for &a in &snapshot {
                    for &b in &snapshot {
                        if !sets.contains(&(a & b)) {
                            sets.push(a & b);
                            grew = true;
                        }
                    }
                }
                if !grew {
                    break;
                }
            }
            sets.sort_unstable();
            sets.dedup();
            let s = sets.clone();
            FiniteLattice::from_leq(s.len(), |x, y| s[x] & !s[y] == 0).unwrap()
        })
    }

    proptest! {
        #[test]
        fn distributive_test_matches_identity(l in random_lattice()) {
            prop_assert_eq!(l.is_distributive(), distributive_by_identity(&l));
        }

        #[test]
        fn boolean_implies_distributive(l in random_lattice()) {
            if l.is_boolean() {
                prop_assert!(l.is_distributive());
            }
        }

        #[test]
        fn pop_is_below_and_orbit_terminates(l in random_lattice()) {
            for x in 0..l.len() {
                prop_assert!(l.leq(l.pop_down(x), x));
                prop_assert!(l.leq(x, l.pop_up(x)));
                let o = l.orbit(x);
                prop_assert_eq!(*o.last().unwrap(), l.bottom());
                prop_assert_eq!(o.iter().filter(|&&y| y == l.bottom()).count(), 1);
            }
        }

        #[test]
        fn meet_is_greatest_lower_bound(l in random_lattice()) {
            let n = l.len();
            for x in 0..n {
                for y in 0..n {
                    let m = l.meet(x, y);
                    prop_assert!(l.leq(m, x) && l.leq(m, y));
                    for z in 0..n {
                        if l.leq(z, x) && l.leq(z, y) {
                            prop_assert!(l.leq(z, m));
                        }
                    }
                }
            }
        }
    }
}
