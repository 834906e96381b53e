//! The category `mod KQ_c` for a simply-laced Dynkin type: one explicit
//! indecomposable per positive root, Hom/Ext tables and decomposition of
//! arbitrary representations into indecomposables.

use std::collections::HashMap;
use std::sync::RwLock;

use cambrian_core::cambrian::projective_roots;
use cambrian_core::coxeter::{Coxeter, CoxeterElement};
use serde::Serialize;

use crate::linalg::{Matrix, Q};
use crate::quiver::{ext_dim, hom_basis, reflect_at_source, Morphism, Quiver, Rep};
use crate::RepError;

/// `mod KQ_c` with its indecomposables indexed by positive-root index.
#[derive(Debug)]
pub struct PathAlgebra {
    cox: Coxeter,
    c: CoxeterElement,
    quiver: Quiver,
    indec: Vec<Rep>,
    dims: Vec<Vec<usize>>,
    hom: Vec<Vec<usize>>,
    ext: Vec<Vec<usize>>,
    hom_bases: Vec<Vec<Vec<Morphism>>>,
    tau_orbit: Vec<(usize, usize)>,
    root_of_dims: HashMap<Vec<usize>, usize>,
    projective: Vec<usize>,
    injective: Vec<usize>,
    pub(crate) closure_cache: RwLock<HashMap<u128, u128>>,
}

/// One row of the exported brick table.
#[derive(Clone, Debug, Serialize)]
pub struct BrickRecord {
    /// Positive-root index.
    pub index: usize,
    /// Dimension vector in the simple-root basis.
    pub dims: Vec<usize>,
    /// `(i, r)` with this brick `≅ τ^{−r} P(i)`, `i` a diagram label.
    pub tau_orbit: (usize, usize),
    /// Arrow matrices as row-major strings, keyed by `tail→head` labels.
    pub maps: Vec<(String, Vec<Vec<String>>)>,
}

impl PathAlgebra {
    /// Builds every indecomposable as `τ^{−r} P(i) = (C⁻)^r P(i)`, where the
    /// Coxeter functor `C⁻` applies source reflections in the order of `c`'s
    /// word (each letter is a source when its turn comes).
    pub fn new(cox: &Coxeter, c: &CoxeterElement) -> Result<Self, RepError> {
        let quiver = Quiver::of_coxeter(cox, c)?;
        let n = cox.rank();
        let roots = cox.roots();
        let mut root_of_dims = HashMap::new();
        for r in 0..cox.num_roots() {
            let coords: Option<Vec<usize>> = roots.coords[r]
                .iter()
                .map(|g| (g.b == 0 && g.a >= 0).then_some(g.a as usize))
                .collect();
            let coords = coords.ok_or_else(|| RepError::Construction(format!("root {r} is not integral")))?;
            root_of_dims.insert(coords, r);
        }
        let mut slots: Vec<Option<(Rep, (usize, usize))>> = vec![None; cox.num_roots()];
        for i in 0..n {
            let mut m = Rep::projective(&quiver, i);
            let mut r = 0;
            while !m.is_zero() {
                let idx = *root_of_dims.get(&m.dims).ok_or_else(|| {
                    RepError::Construction(format!("τ^-{r} P({i}) has non-root dimension {:?}", m.dims))
                })?;
                if slots[idx].is_some() {
                    return Err(RepError::Construction(format!("dimension {:?} produced twice", m.dims)));
                }
                slots[idx] = Some((m.clone(), (i, r)));
                m = coxeter_minus(&quiver, c, &m);
                r += 1;
            }
        }
        let mut indec = Vec::with_capacity(slots.len());
        let mut tau_orbit = Vec::with_capacity(slots.len());
        for (idx, s) in slots.into_iter().enumerate() {
            let (m, t) = s.ok_or_else(|| RepError::Construction(format!("no indecomposable for root {idx}")))?;
            indec.push(m);
            tau_orbit.push(t);
        }
        let dims: Vec<Vec<usize>> = indec.iter().map(|m| m.dims.clone()).collect();
        let nr = indec.len();
        let mut hom_bases = vec![vec![Vec::new(); nr]; nr];
        let mut hom = vec![vec![0; nr]; nr];
        let mut ext = vec![vec![0; nr]; nr];
        for a in 0..nr {
            for b in 0..nr {
                hom_bases[a][b] = hom_basis(&quiver, &indec[a], &indec[b]);
                hom[a][b] = hom_bases[a][b].len();
                ext[a][b] = ext_dim(&quiver, &indec[a], &indec[b]);
            }
        }
        let projective = projective_roots(cox, c);
        let injective = (0..n)
            .map(|i| {
                let d = Rep::injective(&quiver, i).dims;
                root_of_dims[&d]
            })
            .collect();
        Ok(PathAlgebra {
            cox: cox.clone(),
            c: c.clone(),
            quiver,
            indec,
            dims,
            hom,
            ext,
            hom_bases,
            tau_orbit,
            root_of_dims,
            projective,
            injective,
            closure_cache: RwLock::new(HashMap::new()),
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

    /// The quiver `Q_c`.
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    /// Number of vertices `n = |Λ|`.
    pub fn rank(&self) -> usize {
        self.quiver.n
    }

    /// Number of indecomposables (`|Φ⁺|`).
    pub fn len(&self) -> usize {
        self.indec.len()
    }

    /// Never true: every Dynkin quiver has indecomposables.
    pub fn is_empty(&self) -> bool {
        self.indec.is_empty()
    }

    /// Bitmask of all indecomposables.
    pub fn all(&self) -> u128 {
        if self.len() == 128 {
            u128::MAX
        } else {
            (1u128 << self.len()) - 1
        }
    }

    /// The indecomposable with root index `r`.
    pub fn indec(&self, r: usize) -> &Rep {
        &self.indec[r]
    }

    /// Dimension vector of indecomposable `r`.
    pub fn dims(&self, r: usize) -> &[usize] {
        &self.dims[r]
    }

    /// Root index of a dimension vector, if it is a positive root.
    pub fn root_of(&self, dims: &[usize]) -> Option<usize> {
        self.root_of_dims.get(dims).copied()
    }

    /// `dim Hom(X_a, X_b)`.
    pub fn hom(&self, a: usize, b: usize) -> usize {
        self.hom[a][b]
    }

    /// `dim Ext¹(X_a, X_b)`.
    pub fn ext(&self, a: usize, b: usize) -> usize {
        self.ext[a][b]
    }

    /// A basis of `Hom(X_a, X_b)`.
    pub fn hom_basis(&self, a: usize, b: usize) -> &[Morphism] {
        &self.hom_bases[a][b]
    }

    /// `(i, r)` with `X_a ≅ τ^{−r} P(i)`.
    pub fn tau_orbit(&self, a: usize) -> (usize, usize) {
        self.tau_orbit[a]
    }

    /// Root index of `S(i)`.
    pub fn simple(&self, i: usize) -> usize {
        self.cox.roots().beta_of_simple[i]
    }

    /// True iff indecomposable `a` is simple.
    pub fn is_simple(&self, a: usize) -> bool {
        self.dims[a].iter().sum::<usize>() == 1
    }

    /// Root index of `P(i)`; its dimension vector is `ρ_i`.
    pub fn projective(&self, i: usize) -> usize {
        self.projective[i]
    }

    /// Root index of `I(i)`.
    pub fn injective(&self, i: usize) -> usize {
        self.injective[i]
    }

    /// True iff indecomposable `a` is projective.
    pub fn is_projective(&self, a: usize) -> bool {
        self.projective.contains(&a)
    }

    /// Bitmask of the simples.
    pub fn simples_mask(&self) -> u128 {
        (0..self.rank()).fold(0, |m, i| m | 1 << self.simple(i))
    }

    /// Multiplicities of the indecomposable summands of `M`, by root index.
    ///
    /// The matrix `H = (dim Hom(X_γ, X_β))` is unitriangular in any order
    /// refining the (directed) Auslander–Reiten order, so the multiplicity
    /// vector `m` is the unique solution of `H m = (dim Hom(X_γ, M))_γ`.
    /// The solution is checked to be a nonnegative integer vector with
    /// `Σ m_β dim X_β = dim M`.
    pub fn decompose(&self, m: &Rep) -> Result<Vec<usize>, RepError> {
        let nr = self.len();
        let h = Matrix::from_vec(
            nr,
            nr,
            (0..nr).flat_map(|g| (0..nr).map(move |b| (g, b))).map(|(g, b)| crate::linalg::q(self.hom[g][b] as i64)).collect(),
        );
        let rhs = Matrix::from_vec(
            nr,
            1,
            (0..nr).map(|g| crate::linalg::q(crate::quiver::hom_dim(&self.quiver, &self.indec[g], m) as i64)).collect(),
        );
        let sol = h.solve(&rhs).ok_or_else(|| RepError::Construction("Hom matrix is singular".into()))?;
        let mut mult = Vec::with_capacity(nr);
        for b in 0..nr {
            let v: &Q = &sol[(b, 0)];
            if !v.is_integer() || v < &crate::linalg::q(0) {
                return Err(RepError::Construction(format!("non-integral multiplicity {v} for root {b}")));
            }
            mult.push(v.to_integer().try_into().expect("small multiplicity"));
        }
        let mut total = vec![0usize; self.rank()];
        for (b, &k) in mult.iter().enumerate() {
            for v in 0..self.rank() {
                total[v] += k * self.dims[b][v];
            }
        }
        if total != m.dims {
            return Err(RepError::Construction(format!(
                "summands of dimension {total:?} do not add up to {:?}",
                m.dims
            )));
        }
        Ok(mult)
    }

    /// The root index of `M` if it is indecomposable, else an error listing
    /// its summands.
    pub fn identify_brick(&self, m: &Rep) -> Result<usize, RepError> {
        let mult = self.decompose(m)?;
        let parts: Vec<(usize, usize)> = mult.iter().enumerate().filter(|(_, &k)| k > 0).map(|(b, &k)| (b, k)).collect();
        match parts.as_slice() {
            [(b, 1)] => Ok(*b),
            _ => Err(RepError::NotABrick(format!("dimension {:?} splits as {parts:?}", m.dims))),
        }
    }

    /// Direct sum `⊕ X_{r}` over a list of root indices (with repetition).
    pub fn sum_of(&self, parts: &[usize]) -> Rep {
        Rep::direct_sum(&self.quiver, &parts.iter().map(|&r| &self.indec[r]).collect::<Vec<_>>())
    }

    /// JSON-ready brick table.
    pub fn brick_table(&self) -> Vec<BrickRecord> {
        let labels = &self.cox.diagram().labels;
        (0..self.len())
            .map(|r| BrickRecord {
                index: r,
                dims: self.dims[r].clone(),
                tau_orbit: (labels[self.tau_orbit[r].0], self.tau_orbit[r].1),
                maps: self
                    .quiver
                    .arrows
                    .iter()
                    .enumerate()
                    .map(|(a, &(t, h))| {
                        let m = &self.indec[r].maps[a];
                        let rows = (0..m.rows()).map(|i| (0..m.cols()).map(|j| m[(i, j)].to_string()).collect()).collect();
                        (format!("{}→{}", labels[t], labels[h]), rows)
                    })
                    .collect(),
            })
            .collect()
    }
}

/// The Coxeter functor `C⁻`: source reflections in the order of `c`.
pub fn coxeter_minus(q: &Quiver, c: &CoxeterElement, m: &Rep) -> Rep {
    let mut cur_q = q.clone();
    let mut cur = m.clone();
    for &k in c.word() {
        let (nq, nm) = reflect_at_source(&cur_q, &cur, k);
        cur_q = nq;
        cur = nm;
    }
    debug_assert_eq!(&cur_q, q);
    cur
}
