//! Shard labels, `κ`, canonical join/meet representations, the Galois
//! graph and the facet polynomial of a semidistributive lattice.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use super::{FiniteLattice, LatticeError};

/// `κ` and edge labels of a semidistributive lattice.
#[derive(Clone, Debug)]
pub struct ShardLabeling {
    /// Join-irreducible elements, increasing.
    pub jirr: Vec<usize>,
    /// Meet-irreducible elements, increasing.
    pub mirr: Vec<usize>,
    kappa: HashMap<usize, usize>,
    edge_label: HashMap<(usize, usize), usize>,
    d: Vec<Vec<usize>>,
    u: Vec<Vec<usize>>,
}

impl ShardLabeling {
    /// Computes `κ` and all edge labels, failing if either does not exist
    /// or is not unique.
    ///
    /// `κ(j)` is the unique meet-irreducible `m` with `m ∧ j = j_*` and
    /// `m ∨ j = m^*`; the label of `x ⋖ y` is the unique join-irreducible
    /// `j ≤ y` with `x ≤ κ(j)`.
    pub fn new(l: &FiniteLattice) -> Result<Self, LatticeError> {
        let jirr = l.join_irreducibles();
        let mirr = l.meet_irreducibles();
        if jirr.len() != mirr.len() {
            return Err(LatticeError::NotSemidistributive(format!(
                "{} join-irreducibles but {} meet-irreducibles",
                jirr.len(),
                mirr.len()
            )));
        }
        let mut kappa = HashMap::new();
        for &j in &jirr {
            let j_low = l.lower_covers(j)[0];
            let found: Vec<usize> = mirr
                .iter()
                .copied()
                .filter(|&m| l.meet(m, j) == j_low && l.join(m, j) == l.upper_covers(m)[0])
                .collect();
            match found.as_slice() {
                [m] => {
                    kappa.insert(j, *m);
                }
                _ => {
                    return Err(LatticeError::NotSemidistributive(format!(
                        "κ({j}) has {} candidates",
                        found.len()
                    )))
                }
            }
        }
        let image: BTreeSet<usize> = kappa.values().copied().collect();
        if image.len() != jirr.len() {
            return Err(LatticeError::NotSemidistributive("κ is not injective".into()));
        }
        let mut edge_label = HashMap::new();
        for (x, y) in l.cover_pairs() {
            let found: Vec<usize> = jirr
                .iter()
                .copied()
                .filter(|&j| l.leq(j, y) && l.leq(x, kappa[&j]))
                .collect();
            match found.as_slice() {
                [j] => {
                    edge_label.insert((x, y), *j);
                }
                _ => {
                    return Err(LatticeError::NotSemidistributive(format!(
                        "edge {x}⋖{y} has {} labels",
                        found.len()
                    )))
                }
            }
        }
        let n = l.len();
        let mut d = vec![Vec::new(); n];
        let mut u = vec![Vec::new(); n];
        for v in 0..n {
            d[v] = l.lower_covers(v).iter().map(|&x| edge_label[&(x, v)]).collect();
            d[v].sort_unstable();
            u[v] = l
                .upper_covers(v)
                .iter()
                .map(|&y| kappa[&edge_label[&(v, y)]])
                .collect();
            u[v].sort_unstable();
        }
        Ok(ShardLabeling {
            jirr,
            mirr,
            kappa,
            edge_label,
            d,
            u,
        })
    }

    /// `κ(j)`.
    pub fn kappa(&self, j: usize) -> usize {
        self.kappa[&j]
    }

    /// Shard label `j_{x,y}` of a cover `x ⋖ y`.
    pub fn label(&self, x: usize, y: usize) -> usize {
        self.edge_label[&(x, y)]
    }

    /// Canonical join representation `D(v) = {j_{x,v} : x ⋖ v}`.
    pub fn d_set(&self, v: usize) -> &[usize] {
        &self.d[v]
    }

    /// Canonical meet representation `U(v) = {κ(j_{v,y}) : v ⋖ y}`.
    pub fn u_set(&self, v: usize) -> &[usize] {
        &self.u[v]
    }

    /// Arrows `j → j'` of the Galois graph: `j ≠ j'` and `j ≰ κ(j')`.
    pub fn galois_graph(&self, l: &FiniteLattice) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for &j in &self.jirr {
            for &k in &self.jirr {
                if j != k && !l.leq(j, self.kappa(k)) {
                    out.push((j, k));
                }
            }
        }
        out
    }

    /// Faces of the canonical join complex: the sets `D(v)`.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        self.d.clone()
    }

    /// Facets of the canonical join complex: inclusion-maximal `D(v)`.
    pub fn facets(&self) -> Vec<Vec<usize>> {
        let sets: Vec<BTreeSet<usize>> =
            self.d.iter().map(|v| v.iter().copied().collect()).collect();
        sets.iter()
            .filter(|s| !sets.iter().any(|t| t.len() > s.len() && s.is_subset(t)))
            .map(|s| s.iter().copied().collect())
            .collect()
    }
}

/// `P_L(q)` as integer coefficients indexed by degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FacetPolynomial {
    /// `coeffs[k]` is the coefficient of `q^k`.
    pub coeffs: Vec<u64>,
}

impl FacetPolynomial {
    /// Builds a polynomial from a multiset of degrees.
    pub fn from_degrees(degrees: impl IntoIterator<Item = usize>) -> Self {
        let mut coeffs: Vec<u64> = Vec::new();
        for d in degrees {
            if coeffs.len() <= d {
                coeffs.resize(d + 1, 0);
            }
            coeffs[d] += 1;
        }
        if coeffs.is_empty() {
            coeffs.push(0);
        }
        FacetPolynomial { coeffs }
    }

    /// `P(1)`.
    pub fn total(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    /// `Σ_{v ∈ pop↓(L)} q^{|U(v)|}`.
    pub fn via_pop_down(l: &FiniteLattice, s: &ShardLabeling) -> Self {
        Self::from_degrees(l.pop_down_image().into_iter().map(|v| s.u_set(v).len()))
    }

    /// `Σ_{v ∈ pop↑(L)} q^{|D(v)|}`.
    pub fn via_pop_up(l: &FiniteLattice, s: &ShardLabeling) -> Self {
        Self::from_degrees(l.pop_up_image().into_iter().map(|v| s.d_set(v).len()))
    }

    /// Facets of the canonical join complex counted by size.
    pub fn via_facets(s: &ShardLabeling) -> Self {
        Self::from_degrees(s.facets().into_iter().map(|f| f.len()))
    }

    /// `P_L(q)` by the defining sum over `pop↓(L)`.
    pub fn of(l: &FiniteLattice) -> Result<Self, LatticeError> {
        let s = ShardLabeling::new(l)?;
        Ok(Self::via_pop_down(l, &s))
    }
}

impl fmt::Display for FacetPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| match (k, c) {
                (0, c) => c.to_string(),
                (1, 1) => "q".to_string(),
                (1, c) => format!("{c}q"),
                (k, 1) => format!("q^{k}"),
                (k, c) => format!("{c}q^{k}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}
