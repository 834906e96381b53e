//! Arcs, noncrossing arc diagrams, `Δ`, `c`-sortable arcs and maximal
//! diagrams (facets of the complex of sortable-arc diagrams).

use std::fmt;

use serde::Serialize;

use super::{inverse_permutation, Nu, NuMap};
use crate::Error;

/// An arc from `left` to `right` on the points `1, …, n+1`.
///
/// Bit `k` of `above` is set iff the arc passes above the interior point `k`;
/// interior points with a clear bit are passed below.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Arc {
    /// Left endpoint.
    pub left: usize,
    /// Right endpoint, `left < right`.
    pub right: usize,
    /// Interior points passed above.
    pub above: u64,
}

/// Where an arc sits relative to a point at the same abscissa.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Place {
    Above,
    Below,
    At,
}

impl Arc {
    /// Builds an arc, checking `left < right ≤ 63` and `above ⊆ (left, right)`.
    pub fn new(left: usize, right: usize, above: u64) -> Result<Self, Error> {
        if left == 0 || left >= right || right > 63 {
            return Err(Error::InvalidInput(format!("bad arc endpoints {left}→{right}")));
        }
        if above & !interior_mask(left, right) != 0 {
            return Err(Error::InvalidInput(format!("above set escapes {left}→{right}")));
        }
        Ok(Arc { left, right, above })
    }

    /// Whether the arc passes above the interior point `k`.
    pub fn passes_above(&self, k: usize) -> bool {
        self.above >> k & 1 == 1
    }

    /// Interior points passed above, increasing.
    pub fn above_points(&self) -> Vec<usize> {
        (self.left + 1..self.right).filter(|&k| self.passes_above(k)).collect()
    }

    /// Interior points passed below, increasing.
    pub fn below_points(&self) -> Vec<usize> {
        (self.left + 1..self.right).filter(|&k| !self.passes_above(k)).collect()
    }

    /// Whether every interior point is passed on the side `ν` prescribes.
    pub fn is_sortable(&self, nu: &NuMap) -> bool {
        (self.left + 1..self.right).all(|k| self.passes_above(k) == (nu.get(k) == Nu::A))
    }

    fn place(&self, k: usize) -> Place {
        if k == self.left || k == self.right {
            Place::At
        } else if self.passes_above(k) {
            Place::Above
        } else {
            Place::Below
        }
    }

    /// Whether two arcs can coexist in a noncrossing arc diagram: distinct
    /// left endpoints, distinct right endpoints, and no crossing.
    ///
    /// At every common abscissa the vertical order of the two arcs is forced
    /// unless both pass on the same side of the point there; an endpoint
    /// sits between "above" and "below". The arcs cross iff both orders are
    /// forced somewhere.
    pub fn compatible(&self, other: &Arc) -> bool {
        if self.left == other.left || self.right == other.right {
            return false;
        }
        let lo = self.left.max(other.left);
        let hi = self.right.min(other.right);
        if lo >= hi {
            return true;
        }
        let (mut self_over, mut other_over) = (false, false);
        for k in lo..=hi {
            match (self.place(k), other.place(k)) {
                (Place::Above, Place::Below | Place::At) | (Place::At, Place::Below) => {
                    self_over = true
                }
                (Place::Below, Place::Above | Place::At) | (Place::At, Place::Above) => {
                    other_over = true
                }
                _ => {}
            }
        }
        !(self_over && other_over)
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}→{}", self.left, self.right)?;
        let above = self.above_points();
        if !above.is_empty() {
            let pts: Vec<String> = above.iter().map(|k| k.to_string()).collect();
            write!(f, " over {{{}}}", pts.join(","))?;
        }
        Ok(())
    }
}

fn interior_mask(left: usize, right: usize) -> u64 {
    if right <= left + 1 {
        0
    } else {
        ((1u64 << (right - left - 1)) - 1) << (left + 1)
    }
}

/// A set of arcs on the points `1, …, n+1`, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ArcDiagram {
    /// `n`: the diagram lives on `n + 1` points.
    pub n: usize,
    /// Arcs, sorted.
    pub arcs: Vec<Arc>,
}

impl ArcDiagram {
    /// Builds a diagram, sorting the arcs and checking the endpoints fit.
    pub fn new(n: usize, mut arcs: Vec<Arc>) -> Result<Self, Error> {
        if let Some(a) = arcs.iter().find(|a| a.right > n + 1) {
            return Err(Error::InvalidInput(format!("arc {a} exceeds {} points", n + 1)));
        }
        arcs.sort();
        arcs.dedup();
        Ok(ArcDiagram { n, arcs })
    }

    /// `|δ|`.
    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    /// Whether there are no arcs.
    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    /// Pairwise compatibility of all arcs.
    pub fn is_noncrossing(&self) -> bool {
        self.arcs
            .iter()
            .enumerate()
            .all(|(i, a)| self.arcs[i + 1..].iter().all(|b| a.compatible(b)))
    }

    /// Whether every arc is sortable for `ν`.
    pub fn is_sortable(&self, nu: &NuMap) -> bool {
        self.arcs.iter().all(|a| a.is_sortable(nu))
    }

    /// Whether `k` is the left endpoint of some arc.
    pub fn is_left_endpoint(&self, k: usize) -> bool {
        self.arcs.iter().any(|a| a.left == k)
    }

    /// Whether `k` is the right endpoint of some arc.
    pub fn is_right_endpoint(&self, k: usize) -> bool {
        self.arcs.iter().any(|a| a.right == k)
    }

    /// Recovers the permutation `w` with `Δ(w) = δ` by a search that only
    /// places a descent `prev > v` when `v→prev` is an arc of `δ` (and
    /// otherwise only ascents). Exponential in the worst case.
    pub fn to_permutation(&self) -> Result<Vec<usize>, Error> {
        let m = self.n + 1;
        let mut perm_out = None;
        search_permutation(self, m, &mut Vec::new(), &mut vec![false; m + 1], &mut perm_out);
        perm_out.ok_or_else(|| Error::InvalidInput("diagram is not in the image of Δ".into()))
    }
}

fn search_permutation(
    target: &ArcDiagram,
    m: usize,
    prefix: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut Option<Vec<usize>>,
) {
    if out.is_some() {
        return;
    }
    if prefix.len() == m {
        if delta(prefix) == *target {
            *out = Some(prefix.clone());
        }
        return;
    }
    for v in 1..=m {
        if used[v] {
            continue;
        }
        // Adjacent descents of w are exactly the arcs of Δ(w).
        if let Some(&prev) = prefix.last() {
            let is_arc = target.arcs.iter().any(|a| a.left == v && a.right == prev);
            if (prev > v) != is_arc {
                continue;
            }
        }
        used[v] = true;
        prefix.push(v);
        search_permutation(target, m, prefix, used, out);
        prefix.pop();
        used[v] = false;
    }
}

impl fmt::Display for ArcDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.arcs.iter().map(|a| a.to_string()).collect();
        write!(f, "{{{}}}", parts.join("; "))
    }
}

/// `Δ(w)`: one arc from `w(i+1)` to `w(i)` per descent `i`, passing above
/// `k` iff `w⁻¹(k) > i + 1`.
pub fn delta(perm: &[usize]) -> ArcDiagram {
    let inv = inverse_permutation(perm);
    let arcs = (0..perm.len().saturating_sub(1))
        .filter(|&p| perm[p] > perm[p + 1])
        .map(|p| {
            let (lo, hi) = (perm[p + 1], perm[p]);
            // 1-based descent position is p + 1, so "w⁻¹(k) > i + 1" is inv > p + 2.
            let above = (lo + 1..hi)
                .filter(|&k| inv[k - 1] > p + 2)
                .fold(0u64, |acc, k| acc | 1 << k);
            Arc { left: lo, right: hi, above }
        })
        .collect();
    ArcDiagram::new(perm.len() - 1, arcs).expect("Δ arcs fit")
}

/// The unique `ν`-sortable arc from `left` to `right`.
pub fn sortable_arc(nu: &NuMap, left: usize, right: usize) -> Arc {
    let above = (left + 1..right)
        .filter(|&k| nu.get(k) == Nu::A)
        .fold(0u64, |acc, k| acc | 1 << k);
    Arc { left, right, above }
}

/// All `n(n+1)/2` sortable arcs, sorted.
pub fn sortable_arcs(nu: &NuMap) -> Vec<Arc> {
    let m = nu.rank() + 1;
    let mut out = Vec::new();
    for l in 1..=m {
        for r in l + 1..=m {
            out.push(sortable_arc(nu, l, r));
        }
    }
    out
}

/// Compatibility graph as one bitmask of neighbours per vertex.
fn compatibility_graph(arcs: &[Arc]) -> Vec<u128> {
    let mut adj = vec![0u128; arcs.len()];
    for i in 0..arcs.len() {
        for j in i + 1..arcs.len() {
            if arcs[i].compatible(&arcs[j]) {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    adj
}

/// Maximal cliques by Bron–Kerbosch with pivoting.
fn maximal_cliques(adj: &[u128]) -> Vec<u128> {
    fn go(adj: &[u128], r: u128, mut p: u128, mut x: u128, out: &mut Vec<u128>) {
        if p == 0 && x == 0 {
            out.push(r);
            return;
        }
        let pivot = (p | x).trailing_zeros() as usize;
        let mut cand = p & !adj[pivot];
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            go(adj, r | 1 << v, p & adj[v], x & adj[v], out);
            p &= !(1u128 << v);
            x |= 1 << v;
        }
    }
    let all = if adj.len() == 128 { u128::MAX } else { (1u128 << adj.len()) - 1 };
    let mut out = Vec::new();
    go(adj, 0, all, 0, &mut out);
    out
}

/// All cliques (including the empty one).
fn all_cliques(adj: &[u128]) -> Vec<u128> {
    fn go(adj: &[u128], r: u128, p: u128, out: &mut Vec<u128>) {
        out.push(r);
        let mut cand = p;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            // Only extend with larger indices to list each clique once.
            let higher = if v == 127 { 0 } else { u128::MAX << (v + 1) };
            go(adj, r | 1 << v, p & adj[v] & higher, out);
        }
    }
    let all = if adj.len() == 128 { u128::MAX } else { (1u128 << adj.len()) - 1 };
    let mut out = Vec::new();
    go(adj, 0, all, &mut out);
    out
}

fn diagram_of(n: usize, arcs: &[Arc], mask: u128) -> ArcDiagram {
    let chosen = (0..arcs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| arcs[i]).collect();
    ArcDiagram::new(n, chosen).expect("arcs fit")
}

fn check_arc_count(arcs: &[Arc]) -> Result<(), Error> {
    if arcs.len() > 128 {
        return Err(Error::InvalidInput(format!("{} arcs exceed the clique cap of 128", arcs.len())));
    }
    Ok(())
}

/// `MAD(c)`: maximal noncrossing diagrams of `ν`-sortable arcs, sorted.
pub fn maximal_diagrams(nu: &NuMap) -> Result<Vec<ArcDiagram>, Error> {
    let arcs = sortable_arcs(nu);
    check_arc_count(&arcs)?;
    let adj = compatibility_graph(&arcs);
    let mut out: Vec<ArcDiagram> = maximal_cliques(&adj)
        .into_iter()
        .map(|m| diagram_of(nu.rank(), &arcs, m))
        .collect();
    out.sort();
    Ok(out)
}

/// `AD(c)`: every noncrossing diagram of `ν`-sortable arcs, sorted.
pub fn sortable_diagrams(nu: &NuMap) -> Result<Vec<ArcDiagram>, Error> {
    let arcs = sortable_arcs(nu);
    check_arc_count(&arcs)?;
    let adj = compatibility_graph(&arcs);
    let mut out: Vec<ArcDiagram> = all_cliques(&adj)
        .into_iter()
        .map(|m| diagram_of(nu.rank(), &arcs, m))
        .collect();
    out.sort();
    Ok(out)
}

/// Every arc on `n + 1` points, with every above set.
pub fn all_arcs(n: usize) -> Vec<Arc> {
    let m = n + 1;
    let mut out = Vec::new();
    for l in 1..=m {
        for r in l + 1..=m {
            let gap = r - l - 1;
            for bits in 0u64..1 << gap {
                out.push(Arc { left: l, right: r, above: bits << (l + 1) });
            }
        }
    }
    out
}

/// `AD_n`: every noncrossing arc diagram on `n + 1` points.
pub fn all_noncrossing_diagrams(n: usize) -> Result<Vec<ArcDiagram>, Error> {
    let arcs = all_arcs(n);
    check_arc_count(&arcs)?;
    let adj = compatibility_graph(&arcs);
    let mut out: Vec<ArcDiagram> =
        all_cliques(&adj).into_iter().map(|m| diagram_of(n, &arcs, m)).collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cambrian::{is_sortable, Cambrian};
    use crate::coxeter::{Coxeter, CoxeterElement, Group, TypeTag};
    use crate::lattice::FacetPolynomial;
    use crate::weak::to_permutation;
    use std::collections::BTreeSet;

    fn arc(l: usize, r: usize, above: &[usize]) -> Arc {
        Arc::new(l, r, above.iter().fold(0, |acc, k| acc | 1 << k)).unwrap()
    }

    #[test]
    fn delta_small_examples() {
        assert!(delta(&[1, 2, 3]).is_empty());
        assert_eq!(delta(&[2, 1]).arcs, vec![arc(1, 2, &[])]);
    }

    #[test]
    fn delta_of_325148679() {
        let d = delta(&[3, 2, 5, 1, 4, 8, 6, 7, 9]);
        // Descents at positions 1, 3, 6.
        assert_eq!(d.arcs, vec![arc(1, 5, &[4]), arc(2, 3, &[]), arc(6, 8, &[7])]);
        let cox = Coxeter::new(TypeTag::A(8)).unwrap();
        let c = CoxeterElement::from_word(cox.diagram(), &[0, 1, 3, 7, 2, 4, 6, 5]).unwrap();
        assert!(d.is_sortable(&NuMap::of(&c)));
        assert!(d.is_noncrossing());
    }

    #[test]
    fn crossing_cases() {
        // Nested: the outer arc passes above both endpoints of the inner one.
        assert!(arc(1, 4, &[2, 3]).compatible(&arc(2, 3, &[])));
        // Outer arc passes below 2 and above 3 while an arc joins 2 and 3.
        assert!(!arc(1, 4, &[3]).compatible(&arc(2, 3, &[])));
        assert!(arc(1, 3, &[2]).compatible(&arc(2, 4, &[])));
        assert!(!arc(1, 3, &[2]).compatible(&arc(2, 4, &[3])));
        // Touching end to start is allowed; shared endpoints on one side are not.
        assert!(arc(1, 2, &[]).compatible(&arc(2, 3, &[])));
        assert!(!arc(1, 2, &[]).compatible(&arc(1, 3, &[])));
        assert!(!arc(1, 3, &[]).compatible(&arc(2, 3, &[])));
    }

    #[test]
    fn delta_is_a_bijection_onto_noncrossing_diagrams() {
        for n in 1..=5 {
            let cox = Coxeter::new(TypeTag::A(n)).unwrap();
            let g = Group::new(&cox).unwrap();
            let all = all_noncrossing_diagrams(n).unwrap();
            assert_eq!(all.len(), g.len(), "n={n}");
            let images: BTreeSet<ArcDiagram> = g
                .elements()
                .iter()
                .map(|&w| {
                    let p = to_permutation(&cox, w).unwrap();
                    let d = delta(&p);
                    assert!(d.is_noncrossing());
                    assert_eq!(d.len(), crate::weak::permutation_descents(&p).count_ones() as usize);
                    assert_eq!(d.to_permutation().unwrap(), p);
                    d
                })
                .collect();
            assert_eq!(images, all.into_iter().collect::<BTreeSet<_>>());
        }
    }

    #[test]
    fn unique_sortable_arc_per_pair() {
        let nu = NuMap::bipartite(5);
        for l in 1..=6 {
            for r in l + 1..=6 {
                let found: Vec<Arc> = all_arcs(5)
                    .into_iter()
                    .filter(|a| a.left == l && a.right == r && a.is_sortable(&nu))
                    .collect();
                assert_eq!(found, vec![sortable_arc(&nu, l, r)]);
            }
        }
        assert!(arc(3, 4, &[]).is_sortable(&nu));
    }

    #[test]
    fn sortable_iff_arcs_sortable() {
        for n in 1..=5 {
            let cox = Coxeter::new(TypeTag::A(n)).unwrap();
            let g = Group::new(&cox).unwrap();
            for c in CoxeterElement::all(cox.diagram()) {
                let nu = NuMap::of(&c);
                for &w in g.elements() {
                    let p = to_permutation(&cox, w).unwrap();
                    assert_eq!(delta(&p).is_sortable(&nu), is_sortable(&cox, &c, w));
                }
            }
        }
    }

    #[test]
    fn complex_is_flag_and_counts_sortables() {
        // Cliques of pairwise-compatible sortable arcs are exactly Δ of the
        // sortable elements, so pairwise compatibility is enough.
        for n in 1..=5 {
            let cox = Coxeter::new(TypeTag::A(n)).unwrap();
            for c in CoxeterElement::all(cox.diagram()) {
                let nu = NuMap::of(&c);
                let camb = Cambrian::new(&cox, &c).unwrap();
                let from_sortables: BTreeSet<ArcDiagram> = camb
                    .sortables()
                    .iter()
                    .map(|&w| delta(&to_permutation(&cox, w).unwrap()))
                    .collect();
                let cliques: BTreeSet<ArcDiagram> =
                    sortable_diagrams(&nu).unwrap().into_iter().collect();
                assert_eq!(cliques, from_sortables);
            }
        }
    }

    #[test]
    fn maximal_diagrams_are_maximal() {
        for n in 1..=6 {
            let nu = NuMap::bipartite(n);
            let arcs = sortable_arcs(&nu);
            let mads = maximal_diagrams(&nu).unwrap();
            for d in &mads {
                assert!(d.is_noncrossing());
                for a in &arcs {
                    if !d.arcs.contains(a) {
                        assert!(d.arcs.iter().any(|b| !a.compatible(b)));
                    }
                }
                // Every interior i has i−1 as a left or i+1 as a right endpoint.
                for i in 2..=n {
                    assert!(d.is_left_endpoint(i - 1) || d.is_right_endpoint(i + 1));
                }
            }
            // Direct maximality among all faces agrees with the clique search.
            let faces = sortable_diagrams(&nu).unwrap();
            let direct: Vec<ArcDiagram> = faces
                .iter()
                .filter(|f| {
                    !faces.iter().any(|g| {
                        g.len() > f.len() && f.arcs.iter().all(|a| g.arcs.contains(a))
                    })
                })
                .cloned()
                .collect();
            assert_eq!(direct, mads);
        }
    }

    #[test]
    fn mad_examples() {
        let mads = maximal_diagrams(&NuMap::bipartite(1)).unwrap();
        assert_eq!(mads.len(), 1);
        assert_eq!(mads[0].arcs, vec![arc(1, 2, &[])]);
        let sizes: Vec<usize> = maximal_diagrams(&NuMap::bipartite(2))
            .unwrap()
            .iter()
            .map(|d| d.len())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        assert_eq!(sizes, vec![1, 2]);
    }

    #[test]
    fn mad_polynomial_equals_lattice_facet_polynomial() {
        for n in 1..=5 {
            let cox = Coxeter::new(TypeTag::A(n)).unwrap();
            for c in CoxeterElement::all(cox.diagram()) {
                let camb = Cambrian::new(&cox, &c).unwrap();
                let lattice_poly = FacetPolynomial::of(camb.lattice()).unwrap();
                let mad_poly = FacetPolynomial::from_degrees(
                    maximal_diagrams(&NuMap::of(&c)).unwrap().iter().map(|d| d.len()),
                );
                assert_eq!(mad_poly, lattice_poly, "n={n} c={:?}", c.word());
            }
        }
    }

    #[test]
    fn arc_validation() {
        assert!(Arc::new(2, 2, 0).is_err());
        assert!(Arc::new(1, 3, 1 << 3).is_err());
        assert!(ArcDiagram::new(1, vec![arc(1, 3, &[])]).is_err());
    }
}
