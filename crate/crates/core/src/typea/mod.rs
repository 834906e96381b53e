//! Type-`A` specializations: `ν_c`, the pattern test for sortability,
//! double descents, the Choi–Sun membership test, noncrossing arc
//! diagrams, Motzkin paths and their generating functions.

mod arcs;
mod motzkin;
mod series;

pub use arcs::{
    all_arcs, all_noncrossing_diagrams, delta, maximal_diagrams, sortable_arc, sortable_arcs,
    sortable_diagrams, Arc, ArcDiagram,
};
pub use motzkin::{
    motzkin_paths, motzkin_paths_no_low_peaks, psi, psi_inverse, MotzkinPath, Step,
};
pub use series::{
    closed_form_conjectured, closed_form_m, closed_form_m_bar, conjectured_from_recurrence,
    m_bar_by_recurrence, m_by_recurrence, series_by_enumeration, QPoly, Series,
};

use serde::Serialize;

use crate::coxeter::{Coxeter, CoxeterElement, TypeTag};
use crate::Error;

/// The two values of `ν_c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Nu {
    /// `s_i` precedes `s_{i−1}`: sortable arcs pass above `i`.
    A,
    /// `s_{i−1}` precedes `s_i`: sortable arcs pass below `i`.
    B,
}

/// `ν_c : {2, …, n} → {A, B}` for a Coxeter element of `A_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct NuMap {
    n: usize,
    values: Vec<Nu>,
}

impl NuMap {
    /// `ν_c` from a Coxeter element (internal index `i − 1` is `s_i`).
    pub fn of(c: &CoxeterElement) -> Self {
        let n = c.rank();
        let values = (2..=n)
            .map(|i| if c.precedes(i - 1, i - 2) { Nu::A } else { Nu::B })
            .collect();
        NuMap { n, values }
    }

    /// Builds a map from explicit values for `2, …, n`.
    pub fn from_values(n: usize, values: Vec<Nu>) -> Result<Self, Error> {
        if values.len() != n.saturating_sub(1) {
            return Err(Error::InvalidInput(format!("ν needs {} values", n.saturating_sub(1))));
        }
        Ok(NuMap { n, values })
    }

    /// The bipartite map `ν_{c×}`: `A` on odd points, `B` on even points.
    pub fn bipartite(n: usize) -> Self {
        NuMap {
            n,
            values: (2..=n).map(|i| if i % 2 == 1 { Nu::A } else { Nu::B }).collect(),
        }
    }

    /// The rank `n`.
    pub fn rank(&self) -> usize {
        self.n
    }

    /// `ν(i)` for `2 ≤ i ≤ n`.
    pub fn get(&self, i: usize) -> Nu {
        self.values[i - 2]
    }

    /// The Coxeter element with this `ν`: orient the edge between `s_{i−1}` and `s_i` by `ν(i)`.
    pub fn coxeter_element(&self, cox: &Coxeter) -> CoxeterElement {
        let arrows: Vec<(usize, usize)> = (2..=self.n)
            .map(|i| match self.get(i) {
                Nu::A => (i - 1, i - 2),
                Nu::B => (i - 2, i - 1),
            })
            .collect();
        CoxeterElement::from_orientation(cox.rank(), &arrows)
    }

    /// Compact display such as `ABBA`.
    pub fn label(&self) -> String {
        self.values.iter().map(|v| if *v == Nu::A { 'A' } else { 'B' }).collect()
    }
}

/// `w⁻¹` of a one-line permutation (1-based values; `inv[v−1]` is the
/// 1-based position of `v`).
pub fn inverse_permutation(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (p, &v) in perm.iter().enumerate() {
        inv[v - 1] = p + 1;
    }
    inv
}

/// `c`-sortability by the pattern condition, reading `ν` at the value
/// `w(i)` lying strictly between the descent values `w(j+1) < w(i) < w(j)`:
/// `ν(w(i)) = A` forces `j < i` and `ν(w(i)) = B` forces `i < j`.
pub fn is_sortable_pattern(nu: &NuMap, perm: &[usize]) -> bool {
    let m = perm.len();
    (0..m.saturating_sub(1)).filter(|&j| perm[j] > perm[j + 1]).all(|j| {
        (0..m).all(|i| {
            let v = perm[i];
            if !(perm[j + 1] < v && v < perm[j]) {
                return true;
            }
            match nu.get(v) {
                Nu::A => j < i,
                Nu::B => i < j,
            }
        })
    })
}

/// The same pattern condition with `ν` read at the position `i` instead of
/// the value `w(i)`; pairs with `i ∉ {2, …, n}` impose nothing. Kept to
/// document that this reading is not equivalent to sortability.
pub fn is_sortable_pattern_positional(nu: &NuMap, perm: &[usize]) -> bool {
    let m = perm.len();
    (0..m.saturating_sub(1)).filter(|&j| perm[j] > perm[j + 1]).all(|j| {
        (0..m).all(|i| {
            let pos = i + 1;
            if !(perm[j + 1] < perm[i] && perm[i] < perm[j]) || pos < 2 || pos > nu.rank() {
                return true;
            }
            match nu.get(pos) {
                Nu::A => j < i,
                Nu::B => i < j,
            }
        })
    })
}

/// Double descents: `i ∈ [1, n−1]` with `w(i) > w(i+1) > w(i+2)`.
pub fn double_descents(perm: &[usize]) -> Vec<usize> {
    (0..perm.len().saturating_sub(2))
        .filter(|&i| perm[i] > perm[i + 1] && perm[i + 1] > perm[i + 2])
        .map(|i| i + 1)
        .collect()
}

/// Image membership for `Camb_{c×}` by the five Choi–Sun conditions, taken
/// literally. For `n = 1` the conditions are vacuous and accept `21`, which
/// is not in the image; the test is exact for `n ≥ 2`.
pub fn choi_sun_check(perm: &[usize]) -> bool {
    let n = perm.len() - 1;
    let inv = inverse_permutation(perm);
    let at = |v: usize| inv[v - 1];
    if !double_descents(perm).is_empty() {
        return false;
    }
    // w⁻¹(2k) < w⁻¹(2k+1) for 3 ≤ 2k+1 ≤ n+1.
    if (1..).map(|k| 2 * k).take_while(|&a| a + 1 <= n + 1).any(|a| at(a) > at(a + 1)) {
        return false;
    }
    // w⁻¹(2k) < w⁻¹(2k+3) for 5 ≤ 2k+3 ≤ n+1.
    if (1..).map(|k| 2 * k).take_while(|&a| a + 3 <= n + 1).any(|a| at(a) > at(a + 3)) {
        return false;
    }
    // For n = 1 the point n − 1 = 0 does not exist and the condition is void.
    if n % 2 == 1 && n >= 3 && at(n - 1) > at(n + 1) {
        return false;
    }
    if n != 1 && at(1) > at(3) {
        return false;
    }
    true
}

/// Checks that a Coxeter group is of type `A` and returns `n`.
pub fn rank_of_type_a(cox: &Coxeter) -> Result<usize, Error> {
    match cox.type_tag() {
        TypeTag::A(n) => Ok(n),
        t => Err(Error::InvalidInput(format!("type A required, got {t}"))),
    }
}
