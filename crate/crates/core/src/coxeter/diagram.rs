//! Coxeter diagrams of finite irreducible type and their classification.
//!
//! Internal simple indices are always `0..rank`. Each diagram also carries
//! display labels: types `A`, `B`, `E`, `F`, `G`, `H`, `I2` use `1..=rank`,
//! type `D` uses `0..rank` with the fork legs `s0`, `s1` both attached to
//! `s2`. `E` types follow Bourbaki numbering (`s2` hangs off `s4`).

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::CoxeterError;

/// Finite irreducible Coxeter type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum TypeTag {
    /// `A_n`, `n ≥ 1`.
    A(usize),
    /// `B_n`, `n ≥ 2`.
    B(usize),
    /// `D_n`, `n ≥ 4`.
    D(usize),
    /// `E_6`.
    E6,
    /// `E_7`.
    E7,
    /// `E_8`.
    E8,
    /// `F_4`.
    F4,
    /// `G_2`.
    G2,
    /// `H_3`.
    H3,
    /// `H_4`.
    H4,
    /// Dihedral `I_2(m)`, `m ≥ 3`.
    I2(usize),
}

impl TypeTag {
    /// Number of simple reflections.
    pub fn rank(self) -> usize {
        match self {
            TypeTag::A(n) | TypeTag::B(n) | TypeTag::D(n) => n,
            TypeTag::E6 => 6,
            TypeTag::E7 => 7,
            TypeTag::E8 => 8,
            TypeTag::F4 | TypeTag::H4 => 4,
            TypeTag::G2 | TypeTag::I2(_) => 2,
            TypeTag::H3 => 3,
        }
    }

    /// Number of reflections `N = |Φ⁺|`.
    pub fn num_reflections(self) -> usize {
        match self {
            TypeTag::A(n) => n * (n + 1) / 2,
            TypeTag::B(n) => n * n,
            TypeTag::D(n) => n * (n - 1),
            TypeTag::E6 => 36,
            TypeTag::E7 => 63,
            TypeTag::E8 => 120,
            TypeTag::F4 => 24,
            TypeTag::G2 => 6,
            TypeTag::H3 => 15,
            TypeTag::H4 => 60,
            TypeTag::I2(m) => m,
        }
    }

    /// Group order `|W|`.
    pub fn group_order(self) -> u64 {
        fn fact(n: usize) -> u64 {
            (1..=n as u64).product()
        }
        match self {
            TypeTag::A(n) => fact(n + 1),
            TypeTag::B(n) => (1u64 << n) * fact(n),
            TypeTag::D(n) => (1u64 << (n - 1)) * fact(n),
            TypeTag::E6 => 51_840,
            TypeTag::E7 => 2_903_040,
            TypeTag::E8 => 696_729_600,
            TypeTag::F4 => 1_152,
            TypeTag::G2 => 12,
            TypeTag::H3 => 120,
            TypeTag::H4 => 14_400,
            TypeTag::I2(m) => 2 * m as u64,
        }
    }

    /// Coxeter number `h = 2N/n`.
    pub fn coxeter_number(self) -> usize {
        2 * self.num_reflections() / self.rank()
    }

    /// True for Weyl groups, i.e. types admitting integer root coordinates.
    pub fn is_crystallographic(self) -> bool {
        !matches!(self, TypeTag::H3 | TypeTag::H4)
            && !matches!(self, TypeTag::I2(m) if !matches!(m, 3 | 4 | 6))
    }

    /// True for types `A`, `D`, `E`.
    pub fn is_simply_laced(self) -> bool {
        matches!(
            self,
            TypeTag::A(_) | TypeTag::D(_) | TypeTag::E6 | TypeTag::E7 | TypeTag::E8
        ) || self == TypeTag::I2(3)
    }

    /// The canonical tag of the same group: `I2(3)`, `I2(4)`, `I2(6)` become
    /// `A2`, `B2`, `G2`.
    pub fn canonical(self) -> TypeTag {
        match self {
            TypeTag::I2(3) => TypeTag::A(2),
            TypeTag::I2(4) => TypeTag::B(2),
            TypeTag::I2(6) => TypeTag::G2,
            t => t,
        }
    }

    fn validate(self) -> Result<(), CoxeterError> {
        let ok = match self {
            TypeTag::A(n) => n >= 1,
            TypeTag::B(n) => n >= 2,
            TypeTag::D(n) => n >= 4,
            TypeTag::I2(m) => m >= 3,
            _ => true,
        };
        if ok && self.rank() <= 64 {
            Ok(())
        } else {
            Err(CoxeterError::InvalidType(self.to_string()))
        }
    }
}

impl fmt::Display for TypeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeTag::A(n) => write!(f, "A{n}"),
            TypeTag::B(n) => write!(f, "B{n}"),
            TypeTag::D(n) => write!(f, "D{n}"),
            TypeTag::E6 => write!(f, "E6"),
            TypeTag::E7 => write!(f, "E7"),
            TypeTag::E8 => write!(f, "E8"),
            TypeTag::F4 => write!(f, "F4"),
            TypeTag::G2 => write!(f, "G2"),
            TypeTag::H3 => write!(f, "H3"),
            TypeTag::H4 => write!(f, "H4"),
            TypeTag::I2(m) => write!(f, "I2:{m}"),
        }
    }
}

impl FromStr for TypeTag {
    type Err = CoxeterError;

    /// Accepts `A4`, `B3`, `D5`, `E6`, `F4`, `G2`, `H3`, `I2:5`, `I2(5)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CoxeterError::InvalidType(s.to_string());
        let t = s.trim();
        let upper = t.to_ascii_uppercase();
        if let Some(rest) = upper.strip_prefix("I2") {
            let m: usize = rest
                .trim_start_matches([':', '('])
                .trim_end_matches(')')
                .parse()
                .map_err(|_| bad())?;
            let tag = TypeTag::I2(m);
            tag.validate()?;
            return Ok(tag);
        }
        let (head, num) = upper.split_at(1.min(upper.len()));
        let n: usize = num.parse().map_err(|_| bad())?;
        let tag = match (head, n) {
            ("A", n) => TypeTag::A(n),
            ("B", n) | ("C", n) => TypeTag::B(n),
            ("D", n) => TypeTag::D(n),
            ("E", 6) => TypeTag::E6,
            ("E", 7) => TypeTag::E7,
            ("E", 8) => TypeTag::E8,
            ("F", 4) => TypeTag::F4,
            ("G", 2) => TypeTag::G2,
            ("H", 3) => TypeTag::H3,
            ("H", 4) => TypeTag::H4,
            _ => return Err(bad()),
        };
        tag.validate()?;
        Ok(tag)
    }
}

/// A Coxeter diagram: symmetric bond matrix `m(s_i, s_j)` plus type tag.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoxeterDiagram {
    /// Number of simple reflections.
    pub rank: usize,
    /// `bond[i][j] = m(s_i, s_j)`; `1` on the diagonal, `≥ 2` elsewhere.
    pub bond: Vec<Vec<usize>>,
    /// Finite type of the diagram, consistent with `bond`.
    pub type_tag: TypeTag,
    /// Display label of each internal index.
    pub labels: Vec<usize>,
}

impl CoxeterDiagram {
    /// The standard diagram of a finite type.
    pub fn of_type(tag: TypeTag) -> Result<Self, CoxeterError> {
        tag.validate()?;
        let n = tag.rank();
        let mut bond = vec![vec![2usize; n]; n];
        for (i, row) in bond.iter_mut().enumerate() {
            row[i] = 1;
        }
        let mut set = |i: usize, j: usize, m: usize| {
            bond[i][j] = m;
            bond[j][i] = m;
        };
        let mut labels: Vec<usize> = (1..=n).collect();
        match tag {
            TypeTag::A(n) => (0..n - 1).for_each(|i| set(i, i + 1, 3)),
            TypeTag::B(n) => {
                (0..n - 2).for_each(|i| set(i, i + 1, 3));
                set(n - 2, n - 1, 4);
            }
            TypeTag::D(n) => {
                labels = (0..n).collect();
                set(0, 2, 3);
                set(1, 2, 3);
                (2..n - 1).for_each(|i| set(i, i + 1, 3));
            }
            TypeTag::E6 | TypeTag::E7 | TypeTag::E8 => {
                // Bourbaki: 1-3-4-5-6(-7(-8)) with 2 attached to 4.
                set(0, 2, 3);
                set(1, 3, 3);
                (2..n - 1).for_each(|i| set(i, i + 1, 3));
            }
            TypeTag::F4 => {
                set(0, 1, 3);
                set(1, 2, 4);
                set(2, 3, 3);
            }
            TypeTag::G2 => set(0, 1, 6),
            TypeTag::H3 | TypeTag::H4 => {
                set(0, 1, 5);
                (1..n - 1).for_each(|i| set(i, i + 1, 3));
            }
            TypeTag::I2(m) => set(0, 1, m),
        }
        Ok(CoxeterDiagram {
            rank: n,
            bond,
            type_tag: tag,
            labels,
        })
    }

    /// Builds a diagram from an explicit bond matrix, classifying its type.
    pub fn from_bonds(bond: Vec<Vec<usize>>) -> Result<Self, CoxeterError> {
        let tag = classify(&bond)?;
        let rank = bond.len();
        let labels = match tag {
            TypeTag::D(_) => (0..rank).collect(),
            _ => (1..=rank).collect(),
        };
        Ok(CoxeterDiagram {
            rank,
            bond,
            type_tag: tag,
            labels,
        })
    }

    /// Checks the bond matrix axioms and that `type_tag` matches the bonds.
    pub fn validate(&self) -> Result<(), CoxeterError> {
        if self.bond.len() != self.rank || self.labels.len() != self.rank {
            return Err(CoxeterError::InvalidDiagram("shape mismatch".into()));
        }
        let found = classify(&self.bond)?;
        if found.canonical() != self.type_tag.canonical() {
            return Err(CoxeterError::InvalidDiagram(format!(
                "bonds classify as {found}, tag says {}",
                self.type_tag
            )));
        }
        Ok(())
    }

    /// True when `s_i` and `s_j` commute (`m = 2`).
    pub fn commute(&self, i: usize, j: usize) -> bool {
        self.bond[i][j] == 2
    }

    /// Neighbours of `i` in the Coxeter graph (`m ≥ 3`).
    pub fn neighbours(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.rank).filter(move |&j| j != i && self.bond[i][j] >= 3)
    }

    /// Edges `{i, j}` with `i < j` of the Coxeter graph.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.rank {
            for j in i + 1..self.rank {
                if self.bond[i][j] >= 3 {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Internal index of a display label.
    pub fn index_of_label(&self, label: usize) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }
}

/// Classifies a symmetric bond matrix as a finite irreducible type.
pub fn classify(bond: &[Vec<usize>]) -> Result<TypeTag, CoxeterError> {
    let n = bond.len();
    let invalid = |m: &str| CoxeterError::InvalidDiagram(m.to_string());
    if n == 0 {
        return Err(invalid("empty diagram"));
    }
    for i in 0..n {
        if bond[i].len() != n || bond[i][i] != 1 {
            return Err(invalid("diagonal must be 1"));
        }
        for j in 0..n {
            if i != j && (bond[i][j] < 2 || bond[i][j] != bond[j][i]) {
                return Err(invalid("off-diagonal bonds must be symmetric and ≥ 2"));
            }
        }
    }
    if n == 1 {
        return Ok(TypeTag::A(1));
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if bond[i][j] >= 3 {
                edges.push((i, j, bond[i][j]));
            }
        }
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &(a, b, _) in &edges {
            let w = if a == v {
                b
            } else if b == v {
                a
            } else {
                continue;
            };
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(invalid("Coxeter graph is disconnected"));
    }
    let infinite = || CoxeterError::NonFiniteType("bond pattern is not of finite type".into());
    if edges.len() != n - 1 {
        return Err(infinite());
    }
    if n == 2 {
        return Ok(match edges[0].2 {
            3 => TypeTag::A(2),
            4 => TypeTag::B(2),
            6 => TypeTag::G2,
            m => TypeTag::I2(m),
        });
    }
    let degree: Vec<usize> = (0..n)
        .map(|v| edges.iter().filter(|e| e.0 == v || e.1 == v).count())
        .collect();
    let heavy: Vec<&(usize, usize, usize)> = edges.iter().filter(|e| e.2 > 3).collect();
    let branch: Vec<usize> = (0..n).filter(|&v| degree[v] >= 3).collect();
    if heavy.is_empty() {
        if branch.is_empty() {
            return Ok(TypeTag::A(n));
        }
        if branch.len() > 1 || degree[branch[0]] > 3 {
            return Err(infinite());
        }
        let c = branch[0];
        let mut legs: Vec<usize> = edges
            .iter()
            .filter_map(|e| match (e.0 == c, e.1 == c) {
                (true, _) => Some(e.1),
                (_, true) => Some(e.0),
                _ => None,
            })
            .map(|start| {
                let (mut prev, mut cur, mut len) = (c, start, 1);
                loop {
                    let next = edges.iter().find_map(|e| {
                        if e.0 == cur && e.1 != prev {
                            Some(e.1)
                        } else if e.1 == cur && e.0 != prev {
                            Some(e.0)
                        } else {
                            None
                        }
                    });
                    match next {
                        Some(nx) => {
                            prev = cur;
                            cur = nx;
                            len += 1;
                        }
                        None => break len,
                    }
                }
            })
            .collect();
        legs.sort_unstable();
        return match legs.as_slice() {
            [1, 1, _] => Ok(TypeTag::D(n)),
            [1, 2, 2] => Ok(TypeTag::E6),
            [1, 2, 3] => Ok(TypeTag::E7),
            [1, 2, 4] => Ok(TypeTag::E8),
            _ => Err(infinite()),
        };
    }
    if heavy.len() > 1 || !branch.is_empty() {
        return Err(infinite());
    }
    let (a, b, m) = *heavy[0];
    let at_end = degree[a] == 1 || degree[b] == 1;
    match (m, n, at_end) {
        (4, _, true) => Ok(TypeTag::B(n)),
        (4, 4, false) => Ok(TypeTag::F4),
        (5, 3, true) => Ok(TypeTag::H3),
        (5, 4, true) => Ok(TypeTag::H4),
        _ => Err(infinite()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const ALL: &[TypeTag] = &[
        TypeTag::A(1),
        TypeTag::A(5),
        TypeTag::B(2),
        TypeTag::B(4),
        TypeTag::D(4),
        TypeTag::D(6),
        TypeTag::E6,
        TypeTag::E7,
        TypeTag::E8,
        TypeTag::F4,
        TypeTag::G2,
        TypeTag::H3,
        TypeTag::H4,
        TypeTag::I2(5),
        TypeTag::I2(9),
    ];

    #[test]
    fn standard_diagrams_classify_as_themselves() {
        for &t in ALL {
            let d = CoxeterDiagram::of_type(t).unwrap();
            d.validate().unwrap();
            assert_eq!(classify(&d.bond).unwrap().canonical(), t.canonical(), "{t}");
        }
    }

    #[test]
    fn d5_uses_example_labels() {
        let d = CoxeterDiagram::of_type(TypeTag::D(5)).unwrap();
        assert_eq!(d.labels, vec![0, 1, 2, 3, 4]);
        assert_eq!(d.edges(), vec![(0, 2), (1, 2), (2, 3), (3, 4)]);
    }

    #[test]
    fn affine_and_cyclic_bonds_rejected() {
        // Triangle A~2.
        let tri = vec![vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]];
        assert!(classify(&tri).is_err());
        // B~3 style: two heavy bonds.
        let two = vec![vec![1, 4, 2], vec![4, 1, 4], vec![2, 4, 1]];
        assert!(classify(&two).is_err());
        // D with a long fork arm is E; too long is infinite.
        let mut e9 = vec![vec![2usize; 9]; 9];
        for (i, row) in e9.iter_mut().enumerate() {
            row[i] = 1;
        }
        let mut set = |i: usize, j: usize| {
            e9[i][j] = 3;
            e9[j][i] = 3;
        };
        set(0, 2);
        set(1, 3);
        (2..8).for_each(|i| set(i, i + 1));
        assert!(classify(&e9).is_err());
        // Disconnected.
        let disc = vec![vec![1, 2], vec![2, 1]];
        assert!(classify(&disc).is_err());
    }

    #[test]
    fn parse_round_trip() {
        for &t in ALL {
            assert_eq!(t.to_string().parse::<TypeTag>().unwrap(), t);
        }
        assert_eq!("I2(7)".parse::<TypeTag>().unwrap(), TypeTag::I2(7));
        assert!("D3".parse::<TypeTag>().is_err());
        assert!("E9".parse::<TypeTag>().is_err());
    }

    #[test]
    fn coxeter_numbers_table() {
        assert_eq!(TypeTag::A(8).coxeter_number(), 9);
        assert_eq!(TypeTag::D(5).coxeter_number(), 8);
        assert_eq!(TypeTag::E8.coxeter_number(), 30);
        assert_eq!(TypeTag::H4.coxeter_number(), 30);
        assert_eq!(TypeTag::I2(7).coxeter_number(), 7);
    }
}
