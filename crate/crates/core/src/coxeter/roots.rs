//! Positive root systems with exact coordinates and simple-reflection tables.
//!
//! Roots are identified by index; signed roots use the [`SRoot`] encoding
//! `r ≥ 0 ↦ +β_r`, `r < 0 ↦ −β_{!r}`. Simple roots always occupy indices
//! `0..rank`, so `beta_of_simple[i] = i`.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use super::{CoxeterDiagram, CoxeterError, TypeTag};
use crate::ring::GoldenInt;

/// Signed root index: `r ≥ 0` is `+β_r`, `r < 0` is `−β_{!r}`.
pub type SRoot = i32;

/// Positive signed root for index `r`.
#[inline]
pub fn pos(r: usize) -> SRoot {
    r as SRoot
}

/// Negative signed root for index `r`.
#[inline]
pub fn neg(r: usize) -> SRoot {
    !(r as SRoot)
}

/// Splits a signed root into `(is_positive, index)`.
#[inline]
pub fn split(r: SRoot) -> (bool, usize) {
    if r >= 0 {
        (true, r as usize)
    } else {
        (false, (!r) as usize)
    }
}

/// Exact coefficient model used for root coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CoeffKind {
    /// Integer coordinates in the simple-root basis (Weyl groups).
    Integer,
    /// Golden-integer coordinates (`H3`, `H4`, `I2(5)`).
    Golden,
    /// Dihedral index model: root `k` is the unit vector at angle `kπ/m`.
    Dihedral,
}

/// Positive roots of a finite Coxeter group with exact coordinates.
#[derive(Clone, Debug, Serialize)]
pub struct RootSystem {
    /// The underlying diagram.
    pub diagram: CoxeterDiagram,
    /// Coefficient model.
    pub kind: CoeffKind,
    /// Coordinates in the simple-root basis; empty in the dihedral model.
    pub coords: Vec<Vec<GoldenInt>>,
    /// Angle index `k` of each root in the dihedral model; empty otherwise.
    pub angle: Vec<usize>,
    /// Bitmask of simple indices with nonzero coordinate.
    pub support: Vec<u64>,
    /// `simple_action[i][r]` is the signed index of `s_i(β_r)`.
    pub simple_action: Vec<Vec<SRoot>>,
    /// Index of `α_i` for each simple index `i`.
    pub beta_of_simple: Vec<usize>,
}

impl RootSystem {
    /// Builds the positive roots of a diagram by reflection closure.
    pub fn build(diagram: &CoxeterDiagram) -> Result<Self, CoxeterError> {
        diagram.validate()?;
        match diagram.type_tag {
            TypeTag::I2(m) if m != 5 => Ok(Self::dihedral(diagram, m)),
            _ => Self::closure(diagram),
        }
    }

    /// Number of positive roots.
    pub fn len(&self) -> usize {
        self.support.len()
    }

    /// True when there are no roots (never for a valid diagram).
    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    /// Rank of the diagram.
    pub fn rank(&self) -> usize {
        self.diagram.rank
    }

    /// Applies `s_i` to a signed root.
    #[inline]
    pub fn act(&self, i: usize, r: SRoot) -> SRoot {
        let (p, k) = split(r);
        let img = self.simple_action[i][k];
        if p {
            img
        } else {
            !img
        }
    }

    /// Applies the word `a_1 ⋯ a_k` (rightmost letter first) to a signed root.
    pub fn act_word(&self, word: &[usize], r: SRoot) -> SRoot {
        word.iter().rev().fold(r, |acc, &i| self.act(i, acc))
    }

    /// Coordinate strings for display or CSV export.
    pub fn coord_strings(&self, r: usize) -> Vec<String> {
        match self.kind {
            CoeffKind::Dihedral => vec![format!("angle:{}", self.angle[r])],
            _ => self.coords[r].iter().map(|c| c.to_string()).collect(),
        }
    }

    /// The coefficient `c` with `s_i(α_j) = α_j − c·α_i` for a bond.
    fn cartan(i: usize, j: usize, m: usize) -> Option<GoldenInt> {
        Some(match m {
            2 => GoldenInt::ZERO,
            3 => GoldenInt::int(-1),
            4 if i < j => GoldenInt::int(-1),
            4 => GoldenInt::int(-2),
            5 => -GoldenInt::PHI,
            6 if i < j => GoldenInt::int(-1),
            6 => GoldenInt::int(-3),
            _ => return None,
        })
    }

    fn closure(diagram: &CoxeterDiagram) -> Result<Self, CoxeterError> {
        let n = diagram.rank;
        let bound = diagram.type_tag.num_reflections();
        let mut cm = vec![vec![GoldenInt::ZERO; n]; n];
        for (i, row) in cm.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = if i == j {
                    GoldenInt::int(2)
                } else {
                    Self::cartan(i, j, diagram.bond[i][j]).ok_or_else(|| {
                        CoxeterError::NonFiniteType(format!(
                            "bond {} has no exact golden model",
                            diagram.bond[i][j]
                        ))
                    })?
                };
            }
        }
        let reflect = |i: usize, beta: &[GoldenInt]| -> Vec<GoldenInt> {
            let coeff = (0..n).fold(GoldenInt::ZERO, |acc, j| acc + beta[j] * cm[i][j]);
            let mut out = beta.to_vec();
            out[i] = out[i] - coeff;
            out
        };
        let mut coords: Vec<Vec<GoldenInt>> = (0..n)
            .map(|i| {
                let mut v = vec![GoldenInt::ZERO; n];
                v[i] = GoldenInt::ONE;
                v
            })
            .collect();
        let mut index: HashMap<Vec<GoldenInt>, usize> =
            coords.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        let mut queue: VecDeque<usize> = (0..n).collect();
        while let Some(r) = queue.pop_front() {
            for i in 0..n {
                if r == i {
                    continue;
                }
                let img = reflect(i, &coords[r]);
                if img.iter().any(|c| c.signum() < 0) {
                    return Err(CoxeterError::NonFiniteType(
                        "reflection produced a mixed-sign root".into(),
                    ));
                }
                if !index.contains_key(&img) {
                    if coords.len() == bound {
                        return Err(CoxeterError::NonFiniteType(format!(
                            "root closure exceeds N = {bound}"
                        )));
                    }
                    index.insert(img.clone(), coords.len());
                    queue.push_back(coords.len());
                    coords.push(img);
                }
            }
        }
        if coords.len() != bound {
            return Err(CoxeterError::NonFiniteType(format!(
                "closure produced {} roots, expected {bound}",
                coords.len()
            )));
        }
        let mut simple_action = vec![vec![0; coords.len()]; n];
        for (i, row) in simple_action.iter_mut().enumerate() {
            for (r, slot) in row.iter_mut().enumerate() {
                *slot = if r == i {
                    neg(i)
                } else {
                    pos(index[&reflect(i, &coords[r])])
                };
            }
        }
        let support = coords
            .iter()
            .map(|v| {
                v.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .fold(0u64, |m, (j, _)| m | 1 << j)
            })
            .collect();
        let kind = if coords.iter().flatten().all(|c| c.is_integer()) {
            CoeffKind::Integer
        } else {
            CoeffKind::Golden
        };
        Ok(RootSystem {
            diagram: diagram.clone(),
            kind,
            coords,
            angle: Vec::new(),
            support,
            simple_action,
            beta_of_simple: (0..n).collect(),
        })
    }

    /// Dihedral model: positive roots are the angles `kπ/m`, `0 ≤ k < m`,
    /// with `α_1 = v_0` and `α_2 = v_{m−1}`; reflecting `v_k` in the line
    /// orthogonal to `v_j` gives `v_{2j−k+m mod 2m}`.
    fn dihedral(diagram: &CoxeterDiagram, m: usize) -> Self {
        let angle_of_index = |r: usize| match r {
            0 => 0,
            1 => m - 1,
            r => r - 1,
        };
        let index_of_angle = |k: usize| match k {
            0 => 0,
            k if k == m - 1 => 1,
            k => k + 1,
        };
        let angle: Vec<usize> = (0..m).map(angle_of_index).collect();
        let mirror = [0usize, m - 1];
        let mut simple_action = vec![vec![0; m]; 2];
        for (i, row) in simple_action.iter_mut().enumerate() {
            for (r, slot) in row.iter_mut().enumerate() {
                let k = angle[r];
                let img = (2 * mirror[i] + 3 * m - k) % (2 * m);
                *slot = if img < m {
                    pos(index_of_angle(img))
                } else {
                    neg(index_of_angle(img - m))
                };
            }
        }
        let support = angle
            .iter()
            .map(|&k| match k {
                0 => 0b01,
                k if k == m - 1 => 0b10,
                _ => 0b11,
            })
            .collect();
        RootSystem {
            diagram: diagram.clone(),
            kind: CoeffKind::Dihedral,
            coords: Vec::new(),
            angle,
            support,
            simple_action,
            beta_of_simple: vec![0, 1],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(t: TypeTag) -> RootSystem {
        RootSystem::build(&CoxeterDiagram::of_type(t).unwrap()).unwrap()
    }

    #[test]
    fn a2_roots_by_hand() {
        let r = rs(TypeTag::A(2));
        let mut got: Vec<Vec<i64>> = r
            .coords
            .iter()
            .map(|v| v.iter().map(|c| c.a).collect())
            .collect();
        got.sort();
        assert_eq!(got, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(r.kind, CoeffKind::Integer);
    }

    #[test]
    fn a1_single_root() {
        assert_eq!(rs(TypeTag::A(1)).len(), 1);
    }

    #[test]
    fn i2_5_uses_golden_coordinates() {
        let r = rs(TypeTag::I2(5));
        assert_eq!(r.len(), 5);
        assert_eq!(r.kind, CoeffKind::Golden);
    }

    #[test]
    fn golden_and_dihedral_models_of_i2_5_agree() {
        // Independent oracle: the dihedral index model with m = 5 must give
        // the same permutation action up to relabelling of roots.
        let g = rs(TypeTag::I2(5));
        let d = CoxeterDiagram::of_type(TypeTag::I2(5)).unwrap();
        let h = RootSystem::dihedral(&d, 5);
        // Words applied to α_1 enumerate roots in a canonical way in both.
        let words: [&[usize]; 5] = [&[], &[1], &[0, 1], &[1, 0, 1], &[0, 1, 0, 1]];
        let mut map = vec![usize::MAX; 5];
        for w in words {
            let (pg, ig) = split(g.act_word(w, pos(0)));
            let (ph, ih) = split(h.act_word(w, pos(0)));
            assert_eq!(pg, ph);
            map[ig] = ih;
        }
        assert!(map.iter().all(|&x| x != usize::MAX));
        for i in 0..2 {
            for r in 0..5 {
                let (pg, ig) = split(g.simple_action[i][r]);
                let (ph, ih) = split(h.simple_action[i][map[r]]);
                assert_eq!((pg, map[ig]), (ph, ih));
            }
        }
    }

    #[test]
    fn simple_action_is_involutive_and_positive() {
        for t in [
            TypeTag::A(4),
            TypeTag::B(3),
            TypeTag::D(5),
            TypeTag::E6,
            TypeTag::E8,
            TypeTag::F4,
            TypeTag::G2,
            TypeTag::H3,
            TypeTag::H4,
            TypeTag::I2(8),
        ] {
            let r = rs(t);
            assert_eq!(r.len(), t.num_reflections(), "{t}");
            for i in 0..r.rank() {
                for k in 0..r.len() {
                    let img = r.act(i, pos(k));
                    assert_eq!(r.act(i, img), pos(k));
                    assert_eq!(img < 0, k == i, "{t}: s_{i} must only negate α_{i}");
                }
            }
            for v in &r.coords {
                assert!(v.iter().all(|c| c.signum() >= 0));
            }
        }
    }

    #[test]
    fn affine_bond_is_not_finite() {
        let d = CoxeterDiagram {
            rank: 3,
            bond: vec![vec![1, 4, 2], vec![4, 1, 4], vec![2, 4, 1]],
            type_tag: TypeTag::B(3),
            labels: vec![1, 2, 3],
        };
        assert!(RootSystem::build(&d).is_err());
    }
}
