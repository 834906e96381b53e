//! Lattice congruences, their quotients and the quotient pop formula.

use rand::Rng;

use super::{FiniteLattice, LatticeError};

/// A lattice congruence: a partition of `L` into intervals compatible with
/// meets and joins.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Congruence {
    class_of: Vec<usize>,
    min: Vec<usize>,
    max: Vec<usize>,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

impl Congruence {
    /// The smallest congruence identifying every given pair.
    ///
    /// Union-find fixpoint: every pair `(x, y)` that merges two classes
    /// queues `(x ∨ z, y ∨ z)` and `(x ∧ z, y ∧ z)` for all `z`. Pairs that
    /// merge nothing are already implied, so compatibility of the merging
    /// pairs suffices.
    pub fn closure(l: &FiniteLattice, pairs: &[(usize, usize)]) -> Self {
        let n = l.len();
        let mut parent: Vec<usize> = (0..n).collect();
        let mut work: Vec<(usize, usize)> = pairs.to_vec();
        while let Some((x, y)) = work.pop() {
            let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
            if rx == ry {
                continue;
            }
            parent[rx] = ry;
            for z in 0..n {
                work.push((l.join(x, z), l.join(y, z)));
                work.push((l.meet(x, z), l.meet(y, z)));
            }
        }
        let roots: Vec<usize> = (0..n).map(|x| find(&mut parent, x)).collect();
        let mut ids = vec![usize::MAX; n];
        let mut class_of = vec![0; n];
        let mut next = 0;
        for x in l.linear_extension() {
            let r = roots[x];
            if ids[r] == usize::MAX {
                ids[r] = next;
                next += 1;
            }
            class_of[x] = ids[r];
        }
        let mut min = vec![usize::MAX; next];
        let mut max = vec![usize::MAX; next];
        for x in 0..n {
            let c = class_of[x];
            min[c] = if min[c] == usize::MAX { x } else { l.meet(min[c], x) };
            max[c] = if max[c] == usize::MAX { x } else { l.join(max[c], x) };
        }
        Congruence { class_of, min, max }
    }

    /// The discrete congruence.
    pub fn discrete(l: &FiniteLattice) -> Self {
        Self::closure(l, &[])
    }

    /// Number of classes.
    pub fn num_classes(&self) -> usize {
        self.min.len()
    }

    /// Class id of `x`.
    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    /// Members of each class.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_classes()];
        for (x, &c) in self.class_of.iter().enumerate() {
            out[c].push(x);
        }
        out
    }

    /// `π↓(x)`: the bottom of the class of `x`.
    pub fn pi_down(&self, x: usize) -> usize {
        self.min[self.class_of[x]]
    }

    /// `π↑(x)`: the top of the class of `x`.
    pub fn pi_up(&self, x: usize) -> usize {
        self.max[self.class_of[x]]
    }

    /// Class bottoms, increasing by index.
    pub fn representatives(&self) -> Vec<usize> {
        let mut v = self.min.clone();
        v.sort_unstable();
        v
    }

    /// Checks that every class is exactly the interval between its bottom
    /// and top, and that `π↓`, `π↑` are order-preserving.
    pub fn check(&self, l: &FiniteLattice) -> bool {
        let n = l.len();
        for x in 0..n {
            let c = self.class_of[x];
            if self.class_of[self.min[c]] != c || self.class_of[self.max[c]] != c {
                return false;
            }
            if !l.leq(self.min[c], x) || !l.leq(x, self.max[c]) {
                return false;
            }
        }
        for c in 0..self.num_classes() {
            for z in 0..n {
                let inside = l.leq(self.min[c], z) && l.leq(z, self.max[c]);
                if inside != (self.class_of[z] == c) {
                    return false;
                }
            }
        }
        l.cover_pairs().into_iter().all(|(x, y)| {
            l.leq(self.pi_down(x), self.pi_down(y)) && l.leq(self.pi_up(x), self.pi_up(y))
        })
    }

    /// Checks compatibility with meets and joins directly.
    pub fn is_compatible(&self, l: &FiniteLattice) -> bool {
        let n = l.len();
        (0..n).all(|x| {
            (0..n).all(|y| {
                self.class_of[x] != self.class_of[y]
                    || (0..n).all(|z| {
                        self.class_of[l.join(x, z)] == self.class_of[l.join(y, z)]
                            && self.class_of[l.meet(x, z)] == self.class_of[l.meet(y, z)]
                    })
            })
        })
    }

    /// The quotient `π↓(L)` as the subposet induced on class bottoms, with
    /// the index map into `L`.
    pub fn quotient(&self, l: &FiniteLattice) -> Result<(FiniteLattice, Vec<usize>), LatticeError> {
        l.induced(&self.representatives())
    }

    /// Pop in the quotient via `π↓(⋀_L{π↓(a) : a ⋖ x})` for `x = π↓(x)`.
    pub fn quotient_pop(&self, l: &FiniteLattice, x: usize) -> Result<usize, LatticeError> {
        if self.pi_down(x) != x {
            return Err(LatticeError::NotAQuotientRepresentative(x));
        }
        let m = l.meet_all(
            l.lower_covers(x)
                .iter()
                .map(|&a| self.pi_down(a))
                .chain([x]),
        );
        Ok(self.pi_down(m))
    }

    /// A congruence generated by `k` uniformly random cover pairs.
    pub fn random(l: &FiniteLattice, rng: &mut impl Rng, k: usize) -> Self {
        let covers = l.cover_pairs();
        if covers.is_empty() {
            return Self::discrete(l);
        }
        let pairs: Vec<(usize, usize)> = (0..k)
            .map(|_| covers[rng.gen_range(0..covers.len())])
            .collect();
        Self::closure(l, &pairs)
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::pentagon;
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn trivial_congruences() {
        let l = pentagon();
        let d = Congruence::discrete(&l);
        assert_eq!(d.num_classes(), 5);
        for x in 0..5 {
            assert_eq!(d.quotient_pop(&l, x).unwrap(), l.pop_down(x));
        }
        let full = Congruence::closure(&l, &[(l.bottom(), l.top())]);
        assert_eq!(full.num_classes(), 1);
        assert_eq!(full.quotient_pop(&l, l.bottom()).unwrap(), l.bottom());
        assert!(matches!(
            full.quotient_pop(&l, l.top()),
            Err(LatticeError::NotAQuotientRepresentative(_))
        ));
    }

    #[test]
    fn pentagon_congruence_propagates() {
        // Collapsing a ⋖ b in 0 < a < b < 1, 0 < c < 1 is already a
        // congruence with classes {0}, {a, b}, {c}, {1}.
        let l = pentagon();
        let c = Congruence::closure(&l, &[(1, 2)]);
        assert_eq!(c.num_classes(), 4);
        assert!(c.check(&l) && c.is_compatible(&l));
        // Collapsing 0 ⋖ a forces c ≡ 1 (join with c), giving {0, a, b},
        // {c, 1}.
        let c2 = Congruence::closure(&l, &[(0, 1)]);
        assert_eq!(c2.num_classes(), 2);
        assert!(c2.check(&l) && c2.is_compatible(&l));
    }

    #[test]
    fn random_congruences_are_congruences() {
        let l = FiniteLattice::boolean(3);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let c = Congruence::random(&l, &mut rng, 2);
            assert!(c.check(&l));
            assert!(c.is_compatible(&l));
            let (q, reps) = c.quotient(&l).unwrap();
            for (k, &x) in reps.iter().enumerate() {
                let p = c.quotient_pop(&l, x).unwrap();
                assert_eq!(reps[q.pop_down(k)], p);
            }
        }
    }
}
