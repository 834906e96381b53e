//! Coxeter elements as acyclic orientations of the Coxeter graph.

use serde::Serialize;

use super::element::{Coxeter, GroupElement};
use super::{CoxeterDiagram, CoxeterError};

/// A Coxeter element `c`, stored by its canonical reduced word: the
/// topological sort of the orientation `Q_c` that always takes the
/// smallest available index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CoxeterElement {
    word: Vec<usize>,
}

impl CoxeterElement {
    /// Validates a word using every simple index exactly once and returns
    /// the canonical representative of its commutation class.
    pub fn from_word(diagram: &CoxeterDiagram, word: &[usize]) -> Result<Self, CoxeterError> {
        let n = diagram.rank;
        let mut seen = vec![false; n];
        if word.len() != n {
            return Err(CoxeterError::InvalidWord(format!(
                "a Coxeter element needs {n} letters, got {}",
                word.len()
            )));
        }
        for &i in word {
            if i >= n || seen[i] {
                return Err(CoxeterError::InvalidWord(
                    "every simple reflection must appear exactly once".into(),
                ));
            }
            seen[i] = true;
        }
        let mut pos = vec![0; n];
        for (k, &i) in word.iter().enumerate() {
            pos[i] = k;
        }
        let arrows: Vec<(usize, usize)> = diagram
            .edges()
            .into_iter()
            .map(|(i, j)| if pos[i] < pos[j] { (i, j) } else { (j, i) })
            .collect();
        Ok(Self::from_orientation(n, &arrows))
    }

    /// The canonical word of an acyclic orientation (`(i, j)` means `s_i`
    /// precedes `s_j`).
    pub fn from_orientation(n: usize, arrows: &[(usize, usize)]) -> Self {
        let mut indeg = vec![0usize; n];
        for &(_, j) in arrows {
            indeg[j] += 1;
        }
        let mut done = vec![false; n];
        let mut word = Vec::with_capacity(n);
        while word.len() < n {
            let next = (0..n)
                .find(|&v| !done[v] && indeg[v] == 0)
                .expect("orientation must be acyclic");
            done[next] = true;
            word.push(next);
            for &(i, j) in arrows {
                if i == next {
                    indeg[j] -= 1;
                }
            }
        }
        CoxeterElement { word }
    }

    /// All Coxeter elements, one per acyclic orientation, in a fixed order.
    ///
    /// Finite Coxeter graphs are trees, so every orientation is acyclic.
    pub fn all(diagram: &CoxeterDiagram) -> Vec<Self> {
        let edges = diagram.edges();
        let m = edges.len();
        (0u64..1 << m)
            .map(|mask| {
                let arrows: Vec<(usize, usize)> = edges
                    .iter()
                    .enumerate()
                    .map(|(k, &(i, j))| if mask >> k & 1 == 0 { (i, j) } else { (j, i) })
                    .collect();
                Self::from_orientation(diagram.rank, &arrows)
            })
            .collect()
    }

    /// The bipartite Coxeter element: the colour class of index `0` first,
    /// then the other class (for `A_n`: odd generators, then even ones).
    pub fn bipartite(diagram: &CoxeterDiagram) -> Self {
        let n = diagram.rank;
        let mut colour = vec![usize::MAX; n];
        colour[0] = 0;
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for u in diagram.neighbours(v) {
                if colour[u] == usize::MAX {
                    colour[u] = 1 - colour[v];
                    stack.push(u);
                }
            }
        }
        let word: Vec<usize> = (0..n)
            .filter(|&i| colour[i] == 0)
            .chain((0..n).filter(|&i| colour[i] == 1))
            .collect();
        Self::from_word(diagram, &word).expect("bipartite word is a Coxeter element")
    }

    /// The linear Coxeter element `s_0 s_1 ⋯ s_{n−1}` in internal indices.
    pub fn linear(diagram: &CoxeterDiagram) -> Self {
        let word: Vec<usize> = (0..diagram.rank).collect();
        Self::from_word(diagram, &word).expect("linear word is a Coxeter element")
    }

    /// The canonical reduced word.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Rank.
    pub fn rank(&self) -> usize {
        self.word.len()
    }

    /// Position of `s_i` in the canonical word.
    pub fn position(&self, i: usize) -> usize {
        self.word.iter().position(|&x| x == i).expect("index in range")
    }

    /// True iff `s_i` precedes `s_j` (meaningful for adjacent `i`, `j`).
    pub fn precedes(&self, i: usize, j: usize) -> bool {
        self.position(i) < self.position(j)
    }

    /// Arrows `i → j` of `Q_c`: adjacent pairs with `s_i` before `s_j`.
    pub fn orientation(&self, diagram: &CoxeterDiagram) -> Vec<(usize, usize)> {
        diagram
            .edges()
            .into_iter()
            .map(|(i, j)| if self.precedes(i, j) { (i, j) } else { (j, i) })
            .collect()
    }

    /// The group element `c`.
    pub fn element(&self, cox: &Coxeter) -> GroupElement {
        cox.from_word(&self.word).expect("valid word")
    }

    /// The group element `c⁻¹`.
    pub fn inverse_element(&self, cox: &Coxeter) -> GroupElement {
        let rev: Vec<usize> = self.word.iter().rev().copied().collect();
        cox.from_word(&rev).expect("valid word")
    }

    /// The Coxeter number `h`, computed as the order of `c`.
    pub fn coxeter_number(&self, cox: &Coxeter) -> usize {
        cox.order(self.element(cox))
    }

    /// Display form of the word using diagram labels, e.g. `1,3,2`.
    pub fn label_string(&self, diagram: &CoxeterDiagram) -> String {
        self.word
            .iter()
            .map(|&i| diagram.labels[i].to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::TypeTag;

    #[test]
    fn counts_and_canonical_forms() {
        let d = CoxeterDiagram::of_type(TypeTag::A(4)).unwrap();
        let all = CoxeterElement::all(&d);
        assert_eq!(all.len(), 8);
        // s1 s3 s2 s4 ≡ s3 s1 s4 s2 (same orientation).
        let a = CoxeterElement::from_word(&d, &[0, 2, 1, 3]).unwrap();
        let b = CoxeterElement::from_word(&d, &[2, 0, 3, 1]).unwrap();
        assert_eq!(a, b);
        assert!(all.contains(&a));
        assert!(CoxeterElement::from_word(&d, &[0, 0, 1, 2]).is_err());
    }

    #[test]
    fn commutation_class_gives_equal_elements() {
        let cox = Coxeter::new(TypeTag::D(5)).unwrap();
        let d = cox.diagram().clone();
        for c in CoxeterElement::all(&d) {
            let reordered = CoxeterElement::from_word(&d, c.word()).unwrap();
            assert_eq!(reordered.element(&cox), c.element(&cox));
        }
    }

    #[test]
    fn bipartite_words() {
        let d = CoxeterDiagram::of_type(TypeTag::A(7)).unwrap();
        let expect = CoxeterElement::from_word(&d, &[0, 2, 4, 6, 1, 3, 5]).unwrap();
        assert_eq!(CoxeterElement::bipartite(&d), expect);
        // Canonical form takes the smallest available index first.
        assert_eq!(expect.word(), &[0, 2, 1, 4, 3, 6, 5]);
        let d5 = CoxeterDiagram::of_type(TypeTag::D(5)).unwrap();
        let expect5 = CoxeterElement::from_word(&d5, &[0, 1, 3, 2, 4]).unwrap();
        assert_eq!(CoxeterElement::bipartite(&d5), expect5);
    }

    #[test]
    fn coxeter_number_is_independent_of_c() {
        for t in [TypeTag::A(3), TypeTag::B(3), TypeTag::D(4), TypeTag::H3, TypeTag::E6] {
            let cox = Coxeter::new(t).unwrap();
            for c in CoxeterElement::all(cox.diagram()) {
                assert_eq!(c.coxeter_number(&cox), t.coxeter_number());
            }
        }
    }

    #[test]
    fn coxeter_number_examples() {
        for (t, h) in [(TypeTag::A(2), 3), (TypeTag::A(8), 9), (TypeTag::D(5), 8)] {
            let cox = Coxeter::new(t).unwrap();
            assert_eq!(CoxeterElement::linear(cox.diagram()).coxeter_number(&cox), h);
        }
    }
}
