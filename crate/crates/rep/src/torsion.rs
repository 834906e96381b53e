//! Torsion classes of `mod KQ_c` as bitsets over positive-root indices,
//! the lattice `tors KQ_c`, the dictionary `φ_c`, brick labels and
//! Serre / projective detection.
//!
//! A torsion class is determined by the indecomposables it contains, so a
//! `u128` with bit `r` for the indecomposable of root `β_r` is exact.

use std::collections::{BTreeSet, HashMap, VecDeque};

use cambrian_core::cambrian::Cambrian;
use cambrian_core::coxeter::{bits, GroupElement};
use cambrian_core::lattice::{FiniteLattice, ShardLabeling};

use crate::algebra::PathAlgebra;
use crate::quiver::{quotient, trace, Rep};
use crate::RepError;

/// Root indices of the set bits.
pub fn members(set: u128) -> Vec<usize> {
    bits(set).collect()
}

/// Bitmask of a list of root indices.
pub fn mask(items: &[usize]) -> u128 {
    items.iter().fold(0, |m, &r| m | 1 << r)
}

impl PathAlgebra {
    /// `C^⊥`: indecomposables `Y` with `Hom(C, Y) = 0`.
    pub fn perp(&self, c: u128) -> u128 {
        (0..self.len())
            .filter(|&y| bits(c).all(|x| self.hom(x, y) == 0))
            .fold(0, |m, y| m | 1 << y)
    }

    /// `⊥C`: indecomposables `Y` with `Hom(Y, C) = 0`.
    pub fn left_perp(&self, c: u128) -> u128 {
        (0..self.len())
            .filter(|&y| bits(c).all(|x| self.hom(y, x) == 0))
            .fold(0, |m, y| m | 1 << y)
    }

    /// `T(C) = Filt(Gen C)`, computed as `⊥(C^⊥)` from the torsion pair
    /// `(T(C), C^⊥)`. Memoized.
    pub fn torsion_closure(&self, c: u128) -> u128 {
        if let Some(&t) = self.closure_cache.read().expect("cache lock").get(&c) {
            return t;
        }
        let t = self.left_perp(self.perp(c));
        self.closure_cache.write().expect("cache lock").insert(c, t);
        t
    }

    /// `Filt(Cogen C)`, computed as `(⊥C)^⊥`.
    pub fn torsion_free_closure(&self, c: u128) -> u128 {
        self.perp(self.left_perp(c))
    }

    /// `T(C)` by explicit module computation: `E` lies in `Filt(Gen C)` iff
    /// repeatedly dividing out the trace of `C` reaches zero. The trace of
    /// `C` in a module is a quotient of a sum of copies of members of `C`,
    /// so it lies in `Gen C`, and a nonzero module with zero trace has no
    /// first filtration step.
    pub fn torsion_closure_explicit(&self, c: u128) -> u128 {
        let gens: Vec<&Rep> = bits(c).map(|r| self.indec(r)).collect();
        (0..self.len())
            .filter(|&e| in_filt_gen(self, &gens, self.indec(e)))
            .fold(0, |m, e| m | 1 << e)
    }

    /// True iff `t` is closed under quotients and extensions.
    pub fn is_torsion_class(&self, t: u128) -> bool {
        self.torsion_closure(t) == t
    }

    /// `φ_c(w)`: the bricks whose dimension vectors lie in `inv(w)`.
    pub fn phi(&self, w: GroupElement) -> u128 {
        w.inv
    }

    /// `φ_c⁻¹(T)`: the group element with inversion set `dim T`.
    pub fn phi_inverse(&self, t: u128) -> Result<GroupElement, RepError> {
        Ok(self.coxeter().from_inv(t)?)
    }

    /// Breadth-first enumeration of all torsion classes: every torsion
    /// class is the join of the `T(X)` it contains, so adding one brick at
    /// a time from `0` reaches all of them.
    pub fn all_torsion_classes(&self) -> Vec<u128> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::from([0u128]);
        seen.insert(0u128);
        while let Some(t) = queue.pop_front() {
            for x in 0..self.len() {
                if t >> x & 1 == 0 {
                    let u = self.torsion_closure(t | 1 << x);
                    if seen.insert(u) {
                        queue.push_back(u);
                    }
                }
            }
        }
        let mut out: Vec<u128> = seen.into_iter().collect();
        out.sort_by_key(|&t| (t.count_ones(), t));
        out
    }

    /// True iff `t` is a Serre subcategory, checked directly: `t` equals
    /// the extension closure of the simples it contains.
    pub fn is_serre_direct(&self, t: u128) -> bool {
        self.torsion_closure_explicit(t & self.simples_mask()) == t
    }

    /// True iff some nonzero projective lies in `t`.
    pub fn contains_projective(&self, t: u128) -> bool {
        (0..self.rank()).any(|i| t >> self.projective(i) & 1 == 1)
    }

    /// `Gen(P_S)` for the projective cover `P_S` of the simples `S`,
    /// computed explicitly as the indecomposables equal to the trace of
    /// `P_S` in themselves.
    pub fn gen_of_projective_cover(&self, simples: &[usize]) -> u128 {
        let ps: Vec<Rep> = simples.iter().map(|&i| Rep::projective(self.quiver(), i)).collect();
        let refs: Vec<&Rep> = ps.iter().collect();
        (0..self.len())
            .filter(|&y| {
                let (t, _) = trace(self.quiver(), &refs, self.indec(y));
                t.dims == self.indec(y).dims
            })
            .fold(0, |m, y| m | 1 << y)
    }

    /// Vertices whose simple lies in `t`.
    pub fn simple_vertices(&self, t: u128) -> Vec<usize> {
        (0..self.rank()).filter(|&i| t >> self.simple(i) & 1 == 1).collect()
    }

    /// Simple objects of the wide subcategory whose indecomposables are
    /// `w`: members `X` admitting no nonzero map from a member of strictly
    /// smaller dimension vector (such a map would have a proper image).
    pub fn wide_simples(&self, w: u128) -> Vec<usize> {
        bits(w)
            .filter(|&x| {
                !bits(w).any(|y| {
                    y != x
                        && self.hom(y, x) > 0
                        && (0..self.rank()).all(|v| self.dims(y)[v] <= self.dims(x)[v])
                })
            })
            .collect()
    }
}

fn in_filt_gen(alg: &PathAlgebra, gens: &[&Rep], e: &Rep) -> bool {
    let q = alg.quiver();
    let mut cur = e.clone();
    loop {
        if cur.is_zero() {
            return true;
        }
        let (t, incl) = trace(q, gens, &cur);
        if t.is_zero() {
            return false;
        }
        cur = quotient(q, &cur, &incl).0;
    }
}

/// `tors KQ_c` as a finite lattice with brick labels.
#[derive(Clone, Debug)]
pub struct TorsLattice {
    /// Torsion classes, by size then bits.
    pub classes: Vec<u128>,
    /// Containment order.
    pub lattice: FiniteLattice,
    index: HashMap<u128, usize>,
    shard: ShardLabeling,
    brick_of_jirr: HashMap<usize, usize>,
}

impl TorsLattice {
    /// Enumerates torsion classes, orders them by containment and computes
    /// shard labels; each join-irreducible `T(X)` is matched to its brick.
    pub fn new(alg: &PathAlgebra) -> Result<Self, RepError> {
        let classes = alg.all_torsion_classes();
        let lattice = FiniteLattice::from_leq(classes.len(), |a, b| classes[a] & !classes[b] == 0)?;
        let index: HashMap<u128, usize> = classes.iter().enumerate().map(|(k, &t)| (t, k)).collect();
        let shard = ShardLabeling::new(&lattice)?;
        let mut brick_of_jirr = HashMap::new();
        for x in 0..alg.len() {
            let j = index[&alg.torsion_closure(1 << x)];
            if brick_of_jirr.insert(j, x).is_some() {
                return Err(RepError::Construction(format!("two bricks generate torsion class {j}")));
            }
        }
        if brick_of_jirr.len() != shard.jirr.len() || shard.jirr.iter().any(|j| !brick_of_jirr.contains_key(j)) {
            return Err(RepError::Construction("T(X) does not biject onto join-irreducibles".into()));
        }
        Ok(TorsLattice { classes, lattice, index, shard, brick_of_jirr })
    }

    /// Number of torsion classes.
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    /// Never true.
    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Lattice index of a torsion class.
    pub fn index_of(&self, t: u128) -> Option<usize> {
        self.index.get(&t).copied()
    }

    /// The brick `X` with `T(X)` the shard label of the cover `x ⋖ y`.
    pub fn brick_label(&self, x: usize, y: usize) -> usize {
        self.brick_of_jirr[&self.shard.label(x, y)]
    }

    /// `D(T)`: bricks labeling the lower covers, sorted.
    pub fn d_set(&self, t: usize) -> Vec<usize> {
        let mut d: Vec<usize> = self.lattice.lower_covers(t).iter().map(|&x| self.brick_label(x, t)).collect();
        d.sort_unstable();
        d
    }

    /// `U(T)`: bricks labeling the upper covers, sorted.
    pub fn u_set(&self, t: usize) -> Vec<usize> {
        let mut u: Vec<usize> = self.lattice.upper_covers(t).iter().map(|&y| self.brick_label(t, y)).collect();
        u.sort_unstable();
        u
    }

    /// `pop↓` in the lattice, as a bitset.
    pub fn pop_down(&self, t: u128) -> u128 {
        self.classes[self.lattice.pop_down(self.index[&t])]
    }

    /// `pop↑` in the lattice, as a bitset.
    pub fn pop_up(&self, t: u128) -> u128 {
        self.classes[self.lattice.pop_up(self.index[&t])]
    }

    /// `(D(T), U(T))` by shard labels.
    pub fn labels(&self, t: u128) -> (Vec<usize>, Vec<usize>) {
        let k = self.index[&t];
        (self.d_set(k), self.u_set(k))
    }

    /// `(D(T), U(T))` without shard labels: `Filt(D(T)) = T ∩ (pop↓T)^⊥`
    /// and `Filt(U(T)) = pop↑T ∩ T^⊥` (the wide subcategories of the two
    /// pop intervals, matching the Ingalls–Thomas description), and the
    /// labels are their simple objects.
    pub fn labels_via_wide(&self, alg: &PathAlgebra, t: u128) -> (Vec<usize>, Vec<usize>) {
        let wd = t & alg.perp(self.pop_down(t));
        let wu = self.pop_up(t) & alg.perp(t);
        (alg.wide_simples(wd), alg.wide_simples(wu))
    }

    /// `pop↓(T) = T ∩ ⊥D(T)` from brick labels.
    pub fn pop_down_by_bricks(&self, alg: &PathAlgebra, t: u128) -> u128 {
        let (d, _) = self.labels(t);
        t & alg.left_perp(mask(&d))
    }

    /// `pop↑(T) = Filt(T ∪ U(T))` from brick labels.
    pub fn pop_up_by_bricks(&self, alg: &PathAlgebra, t: u128) -> u128 {
        let (_, u) = self.labels(t);
        alg.torsion_closure(t | mask(&u))
    }

    /// Serre detection: every brick in `D(T)` is simple.
    pub fn is_serre(&self, alg: &PathAlgebra, t: u128) -> bool {
        self.labels(t).0.iter().all(|&x| alg.is_simple(x))
    }

    /// Projective-generation detection: with `S` the simples in `T`, `T` is
    /// `Gen(P_S)` iff it is the largest torsion class containing `S` and no
    /// other simple. Returns the vertices of `S` when it is.
    pub fn projective_generator(&self, alg: &PathAlgebra, t: u128) -> Option<Vec<usize>> {
        let s = t & alg.simples_mask();
        let best = self
            .classes
            .iter()
            .copied()
            .filter(|&u| u & alg.simples_mask() == s)
            .max_by_key(|&u| u.count_ones())?;
        (best == t).then(|| alg.simple_vertices(t))
    }

    /// Checks `φ_c` is a lattice isomorphism `Camb_c → tors KQ_c`: the
    /// images of sortables are exactly the torsion classes, and order,
    /// covers, meets and joins correspond.
    pub fn phi_is_isomorphism(&self, alg: &PathAlgebra, camb: &Cambrian) -> bool {
        let images: Vec<u128> = camb.sortables().iter().map(|&w| alg.phi(w)).collect();
        let as_set: BTreeSet<u128> = images.iter().copied().collect();
        if as_set.len() != images.len() || as_set != self.classes.iter().copied().collect() {
            return false;
        }
        let idx: Vec<usize> = images.iter().map(|t| self.index[t]).collect();
        let l = camb.lattice();
        for a in 0..images.len() {
            let mut cov: Vec<usize> = l.upper_covers(a).iter().map(|&b| idx[b]).collect();
            cov.sort_unstable();
            let mut want = self.lattice.upper_covers(idx[a]).to_vec();
            want.sort_unstable();
            if cov != want {
                return false;
            }
            for b in 0..images.len() {
                if l.leq(a, b) != (images[a] & !images[b] == 0) {
                    return false;
                }
                if images[l.meet(a, b)] != images[a] & images[b] {
                    return false;
                }
                if images[l.join(a, b)] != alg.torsion_closure(images[a] | images[b]) {
                    return false;
                }
            }
        }
        true
    }
}
