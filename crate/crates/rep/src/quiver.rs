//! Quivers `Q_c`, their representations and morphisms, Hom/Ext, kernels,
//! cokernels, traces, extensions and BGP reflection functors.
//!
//! A representation assigns `ℚ^{d_v}` to each vertex and a `d_head × d_tail`
//! matrix to each arrow. A morphism `M → N` is one `N_v × M_v` matrix per
//! vertex commuting with the arrow maps.

use cambrian_core::coxeter::{Coxeter, CoxeterElement};
use serde::Serialize;

use crate::linalg::{Matrix, Q};
use crate::RepError;

/// A finite acyclic quiver on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Quiver {
    /// Number of vertices.
    pub n: usize,
    /// Arrows as `(tail, head)`.
    pub arrows: Vec<(usize, usize)>,
}

impl Quiver {
    /// Builds a quiver, rejecting self-loops and out-of-range vertices.
    pub fn new(n: usize, arrows: Vec<(usize, usize)>) -> Result<Self, RepError> {
        for &(t, h) in &arrows {
            if t >= n || h >= n || t == h {
                return Err(RepError::InvalidQuiver(format!("bad arrow {t}→{h} on {n} vertices")));
            }
        }
        let q = Quiver { n, arrows };
        if q.topological_order().is_none() {
            return Err(RepError::InvalidQuiver("quiver has an oriented cycle".into()));
        }
        Ok(q)
    }

    /// `Q_c`: an arrow `i → j` for each edge with `s_i` before `s_j` in `c`.
    pub fn of_coxeter(cox: &Coxeter, c: &CoxeterElement) -> Result<Self, RepError> {
        let tag = cox.type_tag();
        if !tag.is_simply_laced() {
            return Err(RepError::NotSimplyLaced(tag.to_string()));
        }
        Quiver::new(cox.rank(), c.orientation(cox.diagram()))
    }

    /// Vertices ordered so that every arrow goes forward.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indeg = vec![0usize; self.n];
        for &(_, h) in &self.arrows {
            indeg[h] += 1;
        }
        let mut ready: Vec<usize> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        let mut out = Vec::with_capacity(self.n);
        while let Some(v) = ready.pop() {
            out.push(v);
            for &(t, h) in &self.arrows {
                if t == v {
                    indeg[h] -= 1;
                    if indeg[h] == 0 {
                        ready.push(h);
                    }
                }
            }
        }
        (out.len() == self.n).then_some(out)
    }

    /// Bitmask of vertices reachable from `i` by an oriented path, `i` included.
    pub fn reachable_from(&self, i: usize) -> u64 {
        let mut seen = 1u64 << i;
        let mut stack = vec![i];
        while let Some(v) = stack.pop() {
            for &(t, h) in &self.arrows {
                if t == v && seen >> h & 1 == 0 {
                    seen |= 1 << h;
                    stack.push(h);
                }
            }
        }
        seen
    }

    /// Bitmask of vertices from which `i` is reachable, `i` included.
    pub fn reaching(&self, i: usize) -> u64 {
        (0..self.n).filter(|&v| self.reachable_from(v) >> i & 1 == 1).fold(0, |m, v| m | 1 << v)
    }

    /// Euler form `⟨d, e⟩ = Σ d_i e_i − Σ_{i→j} d_i e_j`.
    pub fn euler_form(&self, d: &[usize], e: &[usize]) -> i64 {
        let diag: i64 = (0..self.n).map(|i| (d[i] * e[i]) as i64).sum();
        let off: i64 = self.arrows.iter().map(|&(t, h)| (d[t] * e[h]) as i64).sum();
        diag - off
    }

    /// The quiver with every arrow at `k` reversed.
    pub fn reflected(&self, k: usize) -> Quiver {
        let arrows = self
            .arrows
            .iter()
            .map(|&(t, h)| if t == k || h == k { (h, t) } else { (t, h) })
            .collect();
        Quiver { n: self.n, arrows }
    }

    /// True iff no arrow starts at `k`.
    pub fn is_sink(&self, k: usize) -> bool {
        self.arrows.iter().all(|&(t, _)| t != k)
    }

    /// True iff no arrow ends at `k`.
    pub fn is_source(&self, k: usize) -> bool {
        self.arrows.iter().all(|&(_, h)| h != k)
    }
}

/// A representation of a quiver over `ℚ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rep {
    /// Dimension vector.
    pub dims: Vec<usize>,
    /// One matrix per arrow, shape `dims[head] × dims[tail]`.
    pub maps: Vec<Matrix>,
}

impl Rep {
    /// The zero representation.
    pub fn zero(q: &Quiver) -> Rep {
        Rep {
            dims: vec![0; q.n],
            maps: q.arrows.iter().map(|_| Matrix::zeros(0, 0)).collect(),
        }
    }

    /// Builds a representation, checking matrix shapes.
    pub fn new(q: &Quiver, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Rep, RepError> {
        let r = Rep { dims, maps };
        r.validate(q)?;
        Ok(r)
    }

    /// Checks matrix shapes against the dimension vector.
    pub fn validate(&self, q: &Quiver) -> Result<(), RepError> {
        if self.dims.len() != q.n || self.maps.len() != q.arrows.len() {
            return Err(RepError::ShapeMismatch("vertex or arrow count".into()));
        }
        for (a, &(t, h)) in q.arrows.iter().enumerate() {
            let m = &self.maps[a];
            if m.rows() != self.dims[h] || m.cols() != self.dims[t] {
                return Err(RepError::ShapeMismatch(format!(
                    "arrow {t}→{h}: {}x{} for dims {}→{}",
                    m.rows(),
                    m.cols(),
                    self.dims[t],
                    self.dims[h]
                )));
            }
        }
        Ok(())
    }

    /// The simple representation `S(i)`.
    pub fn simple(q: &Quiver, i: usize) -> Rep {
        Self::thin(q, 1 << i)
    }

    /// The indecomposable projective `P(i)`, spanned by paths starting at `i`.
    pub fn projective(q: &Quiver, i: usize) -> Rep {
        Self::thin(q, q.reachable_from(i))
    }

    /// The indecomposable injective `I(i)`, dual to paths ending at `i`.
    pub fn injective(q: &Quiver, i: usize) -> Rep {
        Self::thin(q, q.reaching(i))
    }

    /// The representation with `ℚ` on `support` and identity maps inside it.
    /// On a tree this is indecomposable whenever the support is connected.
    pub fn thin(q: &Quiver, support: u64) -> Rep {
        let dims: Vec<usize> = (0..q.n).map(|v| (support >> v & 1) as usize).collect();
        let maps = q
            .arrows
            .iter()
            .map(|&(t, h)| {
                if dims[t] == 1 && dims[h] == 1 {
                    Matrix::identity(1)
                } else {
                    Matrix::zeros(dims[h], dims[t])
                }
            })
            .collect();
        Rep { dims, maps }
    }

    /// Total dimension.
    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// True iff every space is zero.
    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// Direct sum of representations, in order.
    pub fn direct_sum(q: &Quiver, parts: &[&Rep]) -> Rep {
        let dims = (0..q.n).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let maps = (0..q.arrows.len())
            .map(|a| Matrix::block_diag(&parts.iter().map(|p| p.maps[a].clone()).collect::<Vec<_>>()))
            .collect();
        Rep { dims, maps }
    }
}

/// A morphism of representations: one matrix per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Morphism {
    /// `mats[v]` has shape `N_v × M_v`.
    pub mats: Vec<Matrix>,
}

impl Morphism {
    /// The zero morphism `M → N`.
    pub fn zero(m: &Rep, n: &Rep) -> Morphism {
        Morphism { mats: m.dims.iter().zip(&n.dims).map(|(&a, &b)| Matrix::zeros(b, a)).collect() }
    }

    /// The identity of `M`.
    pub fn identity(m: &Rep) -> Morphism {
        Morphism { mats: m.dims.iter().map(|&d| Matrix::identity(d)).collect() }
    }

    /// Composition `self ∘ f`.
    pub fn after(&self, f: &Morphism) -> Morphism {
        Morphism { mats: self.mats.iter().zip(&f.mats).map(|(g, f)| g.mul(f)).collect() }
    }

    /// Sum of two parallel morphisms.
    pub fn add(&self, other: &Morphism) -> Morphism {
        Morphism { mats: self.mats.iter().zip(&other.mats).map(|(a, b)| a.add(b)).collect() }
    }

    /// Scalar multiple.
    pub fn scale(&self, s: &Q) -> Morphism {
        Morphism { mats: self.mats.iter().map(|a| a.scale(s)).collect() }
    }

    /// True iff every component vanishes.
    pub fn is_zero(&self) -> bool {
        self.mats.iter().all(Matrix::is_zero)
    }

    /// True iff every component is injective.
    pub fn is_injective(&self) -> bool {
        self.mats.iter().all(Matrix::is_injective)
    }

    /// True iff every component is surjective.
    pub fn is_surjective(&self) -> bool {
        self.mats.iter().all(Matrix::is_surjective)
    }

    /// True iff the matrices intertwine the arrow maps of `m` and `n`.
    pub fn is_morphism(&self, q: &Quiver, m: &Rep, n: &Rep) -> bool {
        q.arrows.iter().enumerate().all(|(a, &(t, h))| {
            n.maps[a].mul(&self.mats[t]) == self.mats[h].mul(&m.maps[a])
        })
    }

    /// Entries of all components concatenated.
    pub fn flatten(&self) -> Vec<Q> {
        self.mats.iter().flat_map(|m| m.entries().iter().cloned()).collect()
    }

    /// Inverse of [`Morphism::flatten`].
    pub fn unflatten(m: &Rep, n: &Rep, flat: &[Q]) -> Morphism {
        let mut off = 0;
        let mats = m
            .dims
            .iter()
            .zip(&n.dims)
            .map(|(&a, &b)| {
                let mat = Matrix::from_vec(b, a, flat[off..off + a * b].to_vec());
                off += a * b;
                mat
            })
            .collect();
        Morphism { mats }
    }

    /// `[f_1 ⋯ f_k] : ⊕ M_i → N` from morphisms `f_i : M_i → N`.
    pub fn row(n: &Rep, parts: &[Morphism]) -> Morphism {
        let mats = (0..n.dims.len())
            .map(|v| Matrix::hstack(n.dims[v], &parts.iter().map(|f| f.mats[v].clone()).collect::<Vec<_>>()))
            .collect();
        Morphism { mats }
    }

    /// `(f_1, …, f_k)ᵀ : M → ⊕ N_i` from morphisms `f_i : M → N_i`.
    pub fn column(m: &Rep, parts: &[Morphism]) -> Morphism {
        let mats = (0..m.dims.len())
            .map(|v| Matrix::vstack(m.dims[v], &parts.iter().map(|f| f.mats[v].clone()).collect::<Vec<_>>()))
            .collect();
        Morphism { mats }
    }
}

/// The map `δ : ⊕_v Hom(M_v, N_v) → ⊕_{a:t→h} Hom(M_t, N_h)`,
/// `(f_v) ↦ (N_a f_t − f_h M_a)`. Its kernel is `Hom(M, N)` and its cokernel
/// is `Ext¹(M, N)`; this is the standard projective resolution of `M`
/// written in coordinates.
pub fn hom_complex(q: &Quiver, m: &Rep, n: &Rep) -> Matrix {
    let mut voff = Vec::with_capacity(q.n);
    let mut cols = 0;
    for v in 0..q.n {
        voff.push(cols);
        cols += n.dims[v] * m.dims[v];
    }
    let mut aoff = Vec::with_capacity(q.arrows.len());
    let mut rows = 0;
    for &(t, h) in &q.arrows {
        aoff.push(rows);
        rows += n.dims[h] * m.dims[t];
    }
    let mut d = Matrix::zeros(rows, cols);
    for (a, &(t, h)) in q.arrows.iter().enumerate() {
        let (mt, nh) = (m.dims[t], n.dims[h]);
        for p in 0..nh {
            for qq in 0..mt {
                let row = aoff[a] + p * mt + qq;
                // N_a f_t: variable f_t[r][qq] gets N_a[p][r].
                for r in 0..n.dims[t] {
                    let c = &n.maps[a][(p, r)];
                    if !num::Zero::is_zero(c) {
                        d[(row, voff[t] + r * mt + qq)] += c;
                    }
                }
                // −f_h M_a: variable f_h[p][r] gets −M_a[r][qq].
                for r in 0..m.dims[h] {
                    let c = &m.maps[a][(r, qq)];
                    if !num::Zero::is_zero(c) {
                        d[(row, voff[h] + p * m.dims[h] + r)] -= c;
                    }
                }
            }
        }
    }
    d
}

/// A basis of `Hom(M, N)`.
pub fn hom_basis(q: &Quiver, m: &Rep, n: &Rep) -> Vec<Morphism> {
    let k = hom_complex(q, m, n).nullspace();
    (0..k.cols())
        .map(|j| {
            let flat: Vec<Q> = (0..k.rows()).map(|i| k[(i, j)].clone()).collect();
            Morphism::unflatten(m, n, &flat)
        })
        .collect()
}

/// `dim Hom(M, N)`.
pub fn hom_dim(q: &Quiver, m: &Rep, n: &Rep) -> usize {
    let d = hom_complex(q, m, n);
    d.cols() - d.rank()
}

/// `dim Ext¹(M, N)`, as `dim Hom − ⟨dim M, dim N⟩`; the result is checked
/// against the cokernel dimension of [`hom_complex`].
pub fn ext_dim(q: &Quiver, m: &Rep, n: &Rep) -> usize {
    let d = hom_complex(q, m, n);
    let hom = d.cols() - d.rank();
    let ext = hom as i64 - q.euler_form(&m.dims, &n.dims);
    assert!(ext >= 0, "negative Ext dimension");
    debug_assert_eq!(ext as usize, d.rows() - d.rank());
    ext as usize
}

/// Flattened cocycle `ζ ∈ ⊕_a Hom(M_t, N_h)` representing an extension class.
pub type Cocycle = Vec<Q>;

/// Splits a cocycle into its per-arrow matrices.
pub fn cocycle_blocks(q: &Quiver, m: &Rep, n: &Rep, zeta: &[Q]) -> Vec<Matrix> {
    let mut off = 0;
    q.arrows
        .iter()
        .map(|&(t, h)| {
            let len = n.dims[h] * m.dims[t];
            let b = Matrix::from_vec(n.dims[h], m.dims[t], zeta[off..off + len].to_vec());
            off += len;
            b
        })
        .collect()
}

/// Flattens per-arrow matrices into a cocycle.
pub fn cocycle_from_blocks(blocks: &[Matrix]) -> Cocycle {
    blocks.iter().flat_map(|b| b.entries().iter().cloned()).collect()
}

/// Cocycles whose classes form a basis of `Ext¹(M, N)`, chosen among the
/// standard basis vectors of the cocycle space.
pub fn ext_basis(q: &Quiver, m: &Rep, n: &Rep) -> Vec<Cocycle> {
    let d = hom_complex(q, m, n);
    let im = d.column_space();
    let len = d.rows();
    let base: Vec<Vec<Q>> = (0..im.cols()).map(|j| (0..len).map(|i| im[(i, j)].clone()).collect()).collect();
    let units: Vec<Vec<Q>> = (0..len)
        .map(|k| (0..len).map(|i| if i == k { num::One::one() } else { num::Zero::zero() }).collect())
        .collect();
    crate::linalg::complement_indices(len, &base, &units)
        .into_iter()
        .map(|k| units[k].clone())
        .collect()
}

/// The coboundaries `δ(Hom-space)`, spanning the trivial classes.
pub fn coboundaries(q: &Quiver, m: &Rep, n: &Rep) -> Vec<Cocycle> {
    let d = hom_complex(q, m, n);
    let im = d.column_space();
    (0..im.cols()).map(|j| (0..d.rows()).map(|i| im[(i, j)].clone()).collect()).collect()
}

/// Pushes a cocycle for `Ext¹(M, N)` forward along `h : N → N'`.
pub fn push_cocycle(q: &Quiver, m: &Rep, n: &Rep, zeta: &[Q], h: &Morphism) -> Cocycle {
    let blocks = cocycle_blocks(q, m, n, zeta);
    cocycle_from_blocks(
        &q.arrows.iter().enumerate().map(|(a, &(_, hd))| h.mats[hd].mul(&blocks[a])).collect::<Vec<_>>(),
    )
}

/// Pulls a cocycle for `Ext¹(M, N)` back along `g : M' → M`.
pub fn pull_cocycle(q: &Quiver, m: &Rep, n: &Rep, zeta: &[Q], g: &Morphism) -> Cocycle {
    let blocks = cocycle_blocks(q, m, n, zeta);
    cocycle_from_blocks(
        &q.arrows.iter().enumerate().map(|(a, &(t, _))| blocks[a].mul(&g.mats[t])).collect::<Vec<_>>(),
    )
}

/// An explicit short exact sequence `0 → N → E → M → 0`.
#[derive(Clone, Debug)]
pub struct Extension {
    /// The middle term.
    pub middle: Rep,
    /// `N → E`.
    pub inclusion: Morphism,
    /// `E → M`.
    pub projection: Morphism,
}

/// The extension of `M` by `N` with cocycle `ζ`:
/// `E_v = N_v ⊕ M_v`, `E_a = [[N_a, ζ_a], [0, M_a]]`.
pub fn extension(q: &Quiver, m: &Rep, n: &Rep, zeta: &[Q]) -> Extension {
    let blocks = cocycle_blocks(q, m, n, zeta);
    let dims: Vec<usize> = (0..q.n).map(|v| n.dims[v] + m.dims[v]).collect();
    let maps = q
        .arrows
        .iter()
        .enumerate()
        .map(|(a, &(t, h))| {
            let mut e = Matrix::zeros(dims[h], dims[t]);
            e.set_block(0, 0, &n.maps[a]);
            e.set_block(0, n.dims[t], &blocks[a]);
            e.set_block(n.dims[h], n.dims[t], &m.maps[a]);
            e
        })
        .collect();
    let middle = Rep { dims, maps };
    let inclusion = Morphism {
        mats: (0..q.n)
            .map(|v| Matrix::vstack(n.dims[v], &[Matrix::identity(n.dims[v]), Matrix::zeros(m.dims[v], n.dims[v])]))
            .collect(),
    };
    let projection = Morphism {
        mats: (0..q.n)
            .map(|v| Matrix::hstack(m.dims[v], &[Matrix::zeros(m.dims[v], n.dims[v]), Matrix::identity(m.dims[v])]))
            .collect(),
    };
    Extension { middle, inclusion, projection }
}

/// A cocycle for the class of an explicit short exact sequence
/// `0 → N → E → M → 0`: with `σ_v` a linear section of `E_v → M_v`,
/// `ζ_a` is the unique solution of `i_h ζ_a = E_a σ_t − σ_h M_a`.
pub fn cocycle_of(q: &Quiver, m: &Rep, ses: &Extension) -> Cocycle {
    let sections: Vec<Matrix> = ses
        .projection
        .mats
        .iter()
        .map(|p| p.solve(&Matrix::identity(p.rows())).expect("projection is surjective"))
        .collect();
    let blocks: Vec<Matrix> = q
        .arrows
        .iter()
        .enumerate()
        .map(|(a, &(t, h))| {
            let d = ses.middle.maps[a]
                .mul(&sections[t])
                .add(&sections[h].mul(&m.maps[a]).scale(&-Q::from_integer(1.into())));
            ses.inclusion.mats[h].solve(&d).expect("defect lies in the kernel of the projection")
        })
        .collect();
    cocycle_from_blocks(&blocks)
}

/// `f ∘ σ : Q → N` for a surjection `p : M → Q` and `f : M → N` vanishing on
/// `ker p`, with `σ` a linear right inverse of `p`.
pub fn factor_through_quotient(p: &Morphism, f: &Morphism) -> Morphism {
    Morphism {
        mats: p
            .mats
            .iter()
            .zip(&f.mats)
            .map(|(p, f)| f.mul(&p.solve(&Matrix::identity(p.rows())).expect("p is surjective")))
            .collect(),
    }
}

/// The unique `u : L → K` with `i ∘ u = f`, for an injection `i : K → M`
/// and `f : L → M` with image inside `im i`.
pub fn factor_through_inclusion(i: &Morphism, f: &Morphism) -> Morphism {
    Morphism {
        mats: i
            .mats
            .iter()
            .zip(&f.mats)
            .map(|(i, f)| i.solve(f).expect("image lies in the subobject"))
            .collect(),
    }
}

/// The subrepresentation of `M` with the given column-basis subspaces,
/// with its inclusion. Fails if the subspaces are not arrow-stable.
pub fn subrep(q: &Quiver, m: &Rep, spaces: &[Matrix]) -> Result<(Rep, Morphism), RepError> {
    let dims: Vec<usize> = spaces.iter().map(Matrix::cols).collect();
    let mut maps = Vec::with_capacity(q.arrows.len());
    for (a, &(t, h)) in q.arrows.iter().enumerate() {
        let target = m.maps[a].mul(&spaces[t]);
        let x = spaces[h]
            .solve(&target)
            .ok_or_else(|| RepError::ShapeMismatch(format!("subspace not stable under arrow {t}→{h}")))?;
        maps.push(x);
    }
    Ok((Rep { dims, maps }, Morphism { mats: spaces.to_vec() }))
}

/// Kernel of `f : M → N` with its inclusion.
pub fn kernel(q: &Quiver, m: &Rep, f: &Morphism) -> (Rep, Morphism) {
    let spaces: Vec<Matrix> = f.mats.iter().map(Matrix::nullspace).collect();
    subrep(q, m, &spaces).expect("kernels are subrepresentations")
}

/// Image of `f : M → N` as a subrepresentation of `N`.
pub fn image(q: &Quiver, n: &Rep, f: &Morphism) -> (Rep, Morphism) {
    let spaces: Vec<Matrix> = f.mats.iter().map(Matrix::column_space).collect();
    subrep(q, n, &spaces).expect("images are subrepresentations")
}

/// Cokernel of `f : M → N` with its projection.
pub fn cokernel(q: &Quiver, n: &Rep, f: &Morphism) -> (Rep, Morphism) {
    let pis: Vec<Matrix> = f.mats.iter().map(Matrix::left_annihilator).collect();
    quotient_by(q, n, pis)
}

/// The quotient of `N` by a subrepresentation with inclusion `incl`.
pub fn quotient(q: &Quiver, n: &Rep, incl: &Morphism) -> (Rep, Morphism) {
    cokernel(q, n, incl)
}

fn quotient_by(q: &Quiver, n: &Rep, pis: Vec<Matrix>) -> (Rep, Morphism) {
    let dims: Vec<usize> = pis.iter().map(Matrix::rows).collect();
    // π_v has full row rank, so it has a right inverse σ_v and the induced
    // arrow map is π_h N_a σ_t.
    let sigmas: Vec<Matrix> = pis
        .iter()
        .map(|p| p.solve(&Matrix::identity(p.rows())).expect("full row rank"))
        .collect();
    let maps = q
        .arrows
        .iter()
        .enumerate()
        .map(|(a, &(t, h))| pis[h].mul(&n.maps[a]).mul(&sigmas[t]))
        .collect();
    (Rep { dims, maps }, Morphism { mats: pis })
}

/// The trace of the given representations in `M`: the sum of the images of
/// all morphisms from them, with its inclusion.
pub fn trace(q: &Quiver, gens: &[&Rep], m: &Rep) -> (Rep, Morphism) {
    let mut cols: Vec<Vec<Matrix>> = vec![Vec::new(); q.n];
    for g in gens {
        for f in hom_basis(q, g, m) {
            for v in 0..q.n {
                cols[v].push(f.mats[v].clone());
            }
        }
    }
    let spaces: Vec<Matrix> = (0..q.n)
        .map(|v| Matrix::hstack(m.dims[v], &cols[v]).column_space())
        .collect();
    subrep(q, m, &spaces).expect("traces are subrepresentations")
}

/// The socle: at each vertex, the common kernel of the outgoing arrows.
pub fn socle(q: &Quiver, m: &Rep) -> (Rep, Morphism) {
    let spaces: Vec<Matrix> = (0..q.n)
        .map(|v| {
            let outs: Vec<Matrix> = q
                .arrows
                .iter()
                .enumerate()
                .filter(|(_, &(t, _))| t == v)
                .map(|(a, _)| m.maps[a].clone())
                .collect();
            if outs.is_empty() {
                Matrix::identity(m.dims[v])
            } else {
                Matrix::vstack(m.dims[v], &outs).nullspace()
            }
        })
        .collect();
    subrep(q, m, &spaces).expect("socles are subrepresentations")
}

/// BGP reflection `S⁻_k` at a source `k`: returns the reflected quiver and
/// `M'_k = coker(M_k → ⊕_{k→j} M_j)` with the projections as new arrows.
pub fn reflect_at_source(q: &Quiver, m: &Rep, k: usize) -> (Quiver, Rep) {
    assert!(q.is_source(k), "vertex {k} is not a source");
    let outs: Vec<usize> = (0..q.arrows.len()).filter(|&a| q.arrows[a].0 == k).collect();
    let total: usize = outs.iter().map(|&a| m.dims[q.arrows[a].1]).sum();
    let phi = Matrix::vstack(m.dims[k], &outs.iter().map(|&a| m.maps[a].clone()).collect::<Vec<_>>());
    let pi = phi.left_annihilator();
    let new_q = q.reflected(k);
    let mut dims = m.dims.clone();
    dims[k] = pi.rows();
    let mut maps = m.maps.clone();
    let mut off = 0;
    for &a in &outs {
        let j = q.arrows[a].1;
        maps[a] = pi.block(0, pi.rows(), off, off + m.dims[j]);
        off += m.dims[j];
    }
    debug_assert_eq!(off, total);
    (new_q, Rep { dims, maps })
}

/// BGP reflection `S⁺_k` at a sink `k`: returns the reflected quiver and
/// `M'_k = ker(⊕_{i→k} M_i → M_k)` with the kernel components as new arrows.
pub fn reflect_at_sink(q: &Quiver, m: &Rep, k: usize) -> (Quiver, Rep) {
    assert!(q.is_sink(k), "vertex {k} is not a sink");
    let ins: Vec<usize> = (0..q.arrows.len()).filter(|&a| q.arrows[a].1 == k).collect();
    let phi = Matrix::hstack(m.dims[k], &ins.iter().map(|&a| m.maps[a].clone()).collect::<Vec<_>>());
    let iota = phi.nullspace();
    let new_q = q.reflected(k);
    let mut dims = m.dims.clone();
    dims[k] = iota.cols();
    let mut maps = m.maps.clone();
    let mut off = 0;
    for &a in &ins {
        let i = q.arrows[a].0;
        maps[a] = iota.block(off, off + m.dims[i], 0, iota.cols());
        off += m.dims[i];
    }
    (new_q, Rep { dims, maps })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Quiver {
        Quiver::new(2, vec![(0, 1)]).unwrap()
    }

    #[test]
    fn projectives_injectives_simples() {
        let q = a2();
        assert_eq!(Rep::projective(&q, 0).dims, vec![1, 1]);
        assert_eq!(Rep::projective(&q, 1).dims, vec![0, 1]);
        assert_eq!(Rep::injective(&q, 0).dims, vec![1, 0]);
        assert_eq!(Rep::injective(&q, 1).dims, vec![1, 1]);
        assert!(Quiver::new(2, vec![(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn hom_and_ext_in_a2() {
        let q = a2();
        let (s1, s2, p1) = (Rep::simple(&q, 0), Rep::simple(&q, 1), Rep::projective(&q, 0));
        assert_eq!(hom_dim(&q, &s1, &s2), 0);
        assert_eq!(ext_dim(&q, &s1, &s2), 1);
        assert_eq!(ext_dim(&q, &s2, &s1), 0);
        assert_eq!(hom_dim(&q, &p1, &s2), 0);
        assert_eq!(hom_dim(&q, &s2, &p1), 1);
        assert_eq!(hom_dim(&q, &p1, &s1), 1);
        assert_eq!(hom_dim(&q, &p1, &p1), 1);
        // The nonsplit extension of S(1) by S(2) is P(1).
        let z = ext_basis(&q, &s1, &s2);
        assert_eq!(z.len(), 1);
        let e = extension(&q, &s1, &s2, &z[0]);
        assert_eq!(e.middle.dims, vec![1, 1]);
        assert_eq!(hom_dim(&q, &e.middle, &e.middle), 1);
        assert!(e.inclusion.is_morphism(&q, &s2, &e.middle));
        assert!(e.projection.is_morphism(&q, &e.middle, &s1));
    }

    #[test]
    fn kernel_cokernel_trace_socle() {
        let q = a2();
        let p1 = Rep::projective(&q, 0);
        let s1 = Rep::simple(&q, 0);
        let f = &hom_basis(&q, &p1, &s1)[0];
        let (k, incl) = kernel(&q, &p1, f);
        assert_eq!(k.dims, vec![0, 1]);
        assert!(incl.is_morphism(&q, &k, &p1));
        let (c, pi) = cokernel(&q, &p1, &incl);
        assert_eq!(c.dims, vec![1, 0]);
        assert!(pi.is_morphism(&q, &p1, &c));
        let (t, _) = trace(&q, &[&Rep::simple(&q, 1)], &p1);
        assert_eq!(t.dims, vec![0, 1]);
        assert_eq!(socle(&q, &p1).0.dims, vec![0, 1]);
    }

    #[test]
    fn reflections_in_a2() {
        let q = a2();
        // S⁻ at the source 0 sends P(0) = (1,1) to S(1) over 1 → 0.
        let (q2, m) = reflect_at_source(&q, &Rep::projective(&q, 0), 0);
        assert_eq!(q2.arrows, vec![(1, 0)]);
        assert_eq!(m.dims, vec![0, 1]);
        m.validate(&q2).unwrap();
        let (q3, back) = reflect_at_sink(&q2, &m, 0);
        assert_eq!(q3, q);
        assert_eq!(back.dims, vec![1, 1]);
        assert_eq!(hom_dim(&q, &back, &back), 1);
    }
}
