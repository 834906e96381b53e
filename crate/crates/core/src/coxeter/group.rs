//! Explicit enumeration of a finite Coxeter group with multiplication tables.

use std::collections::HashMap;
use std::collections::VecDeque;

use super::element::{Coxeter, GroupElement};
use super::roots::{pos, RootSystem, SRoot};
use super::CoxeterError;

/// Default cap on enumerated group and lattice sizes.
pub const DEFAULT_MAX_ELEMENTS: usize = 200_000;

/// Reads the element cap from `CAMBRIAN_POP_MAX_ELEMENTS`, falling back to
/// [`DEFAULT_MAX_ELEMENTS`].
pub fn max_elements() -> usize {
    std::env::var("CAMBRIAN_POP_MAX_ELEMENTS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_ELEMENTS)
}

/// All elements of `W`, indexed in breadth-first order from the identity
/// (so lengths are nondecreasing), with left and right multiplication
/// tables by simple reflections.
#[derive(Clone, Debug)]
pub struct Group {
    cox: Coxeter,
    elems: Vec<GroupElement>,
    index: HashMap<GroupElement, usize>,
    left: Vec<u32>,
    right: Vec<u32>,
    image: Vec<SRoot>,
}

impl Group {
    /// Enumerates `W`, refusing groups above the configured cap.
    pub fn new(cox: &Coxeter) -> Result<Self, CoxeterError> {
        Self::with_cap(cox, max_elements())
    }

    /// Enumerates `W` with an explicit cap.
    pub fn with_cap(cox: &Coxeter, cap: usize) -> Result<Self, CoxeterError> {
        let order = cox.type_tag().group_order();
        if order > cap as u64 {
            return Err(CoxeterError::GroupTooLarge { order, cap });
        }
        let n = cox.rank();
        let rs: &RootSystem = cox.roots();
        let mut elems = vec![GroupElement::IDENTITY];
        let mut index = HashMap::from([(GroupElement::IDENTITY, 0usize)]);
        // image[w·n + i] = w(α_i).
        let mut image: Vec<SRoot> = (0..n).map(pos).collect();
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            let w = elems[k];
            for j in 0..n {
                let x = cox.left_mul(j, w);
                if index.contains_key(&x) {
                    continue;
                }
                let idx = elems.len();
                index.insert(x, idx);
                elems.push(x);
                for i in 0..n {
                    let img = rs.act(j, image[k * n + i]);
                    image.push(img);
                }
                queue.push_back(idx);
            }
        }
        if elems.len() as u64 != order {
            return Err(CoxeterError::NonFiniteType(format!(
                "enumerated {} elements, expected {order}",
                elems.len()
            )));
        }
        let mut left = vec![0u32; elems.len() * n];
        let mut right = vec![0u32; elems.len() * n];
        for (k, &w) in elems.iter().enumerate() {
            for i in 0..n {
                left[k * n + i] = index[&cox.left_mul(i, w)] as u32;
                right[k * n + i] = index[&Coxeter::toggle(w, image[k * n + i])] as u32;
            }
        }
        Ok(Group {
            cox: cox.clone(),
            elems,
            index,
            left,
            right,
            image,
        })
    }

    /// The underlying Coxeter group.
    pub fn coxeter(&self) -> &Coxeter {
        &self.cox
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.elems.len()
    }

    /// Never true: the identity is always present.
    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// Elements in breadth-first order.
    pub fn elements(&self) -> &[GroupElement] {
        &self.elems
    }

    /// Element at an index.
    pub fn element(&self, k: usize) -> GroupElement {
        self.elems[k]
    }

    /// Index of an element.
    pub fn index_of(&self, w: GroupElement) -> Option<usize> {
        self.index.get(&w).copied()
    }

    /// Index of `s_i · w_k`.
    pub fn left(&self, k: usize, i: usize) -> usize {
        self.left[k * self.cox.rank() + i] as usize
    }

    /// Index of `w_k · s_i`.
    pub fn right(&self, k: usize, i: usize) -> usize {
        self.right[k * self.cox.rank() + i] as usize
    }

    /// `w_k(α_i)`.
    pub fn image_of_simple(&self, k: usize, i: usize) -> SRoot {
        self.image[k * self.cox.rank() + i]
    }

    /// Right descents of `w_k`.
    pub fn descents(&self, k: usize) -> u64 {
        (0..self.cox.rank())
            .filter(|&i| self.image_of_simple(k, i) < 0)
            .fold(0, |m, i| m | 1 << i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::TypeTag;

    #[test]
    fn orders_match_table() {
        for t in [
            TypeTag::A(1),
            TypeTag::A(4),
            TypeTag::B(4),
            TypeTag::D(4),
            TypeTag::F4,
            TypeTag::G2,
            TypeTag::H3,
            TypeTag::I2(12),
        ] {
            let g = Group::new(&Coxeter::new(t).unwrap()).unwrap();
            assert_eq!(g.len() as u64, t.group_order(), "{t}");
        }
    }

    #[test]
    fn cap_is_enforced() {
        let cox = Coxeter::new(TypeTag::E7).unwrap();
        assert!(matches!(
            Group::with_cap(&cox, 1000),
            Err(CoxeterError::GroupTooLarge { .. })
        ));
    }

    #[test]
    fn tables_agree_with_direct_products() {
        let cox = Coxeter::new(TypeTag::B(3)).unwrap();
        let g = Group::new(&cox).unwrap();
        for k in 0..g.len() {
            let w = g.element(k);
            assert_eq!(cox.descents(w), g.descents(k));
            for i in 0..3 {
                assert_eq!(g.element(g.right(k, i)), cox.right_mul(w, i));
                assert_eq!(g.element(g.left(k, i)), cox.left_mul(i, w));
            }
        }
    }

    #[test]
    fn weak_order_prefix_characterisation_rank3() {
        // u ≤ v iff some reduced word of v begins with a reduced word of u:
        // compute the prefix order by BFS over right multiplication.
        for t in [TypeTag::A(3), TypeTag::B(3), TypeTag::H3] {
            let cox = Coxeter::new(t).unwrap();
            let g = Group::new(&cox).unwrap();
            let n = g.len();
            let mut above = vec![vec![false; n]; n];
            for u in 0..n {
                let mut stack = vec![u];
                above[u][u] = true;
                while let Some(x) = stack.pop() {
                    for i in 0..3 {
                        let y = g.right(x, i);
                        if g.element(y).length() > g.element(x).length() && !above[u][y] {
                            above[u][y] = true;
                            stack.push(y);
                        }
                    }
                }
            }
            for u in 0..n {
                for v in 0..n {
                    assert_eq!(g.element(u).leq(g.element(v)), above[u][v], "{t}");
                }
            }
        }
    }
}
