//! Motzkin paths, peaks, and the bijection `Ψ` between maximal bipartite
//! arc diagrams and Motzkin paths without peaks of height 1.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::arcs::{sortable_arc, ArcDiagram};
use super::NuMap;
use crate::Error;

/// One step of a lattice path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Step {
    /// `(1, 1)`.
    U,
    /// `(1, −1)`.
    D,
    /// `(1, 0)`.
    H,
}

/// A Motzkin path as a word over `{U, D, H}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MotzkinPath {
    /// The steps.
    pub steps: Vec<Step>,
}

impl MotzkinPath {
    /// Builds a path, checking it never dips below the axis and ends on it.
    pub fn new(steps: Vec<Step>) -> Result<Self, Error> {
        let mut h = 0i64;
        for (i, s) in steps.iter().enumerate() {
            h += match s {
                Step::U => 1,
                Step::D => -1,
                Step::H => 0,
            };
            if h < 0 {
                return Err(Error::InvalidPath(format!("dips below the axis at step {}", i + 1)));
            }
        }
        if h != 0 {
            return Err(Error::InvalidPath(format!("ends at height {h}")));
        }
        Ok(MotzkinPath { steps })
    }

    /// Length.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    /// Whether the path is empty.
    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// `#U`.
    pub fn count_up(&self) -> usize {
        self.steps.iter().filter(|&&s| s == Step::U).count()
    }

    /// Peaks `(j, k)`: an up step ends at abscissa `j` and height `k` and a
    /// down step follows.
    pub fn peaks(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut h = 0usize;
        for (i, s) in self.steps.iter().enumerate() {
            match s {
                Step::U => {
                    h += 1;
                    if self.steps.get(i + 1) == Some(&Step::D) {
                        out.push((i + 1, h));
                    }
                }
                Step::D => h -= 1,
                Step::H => {}
            }
        }
        out
    }

    /// Whether some peak has height 1.
    pub fn has_low_peak(&self) -> bool {
        self.peaks().iter().any(|&(_, k)| k == 1)
    }
}

impl fmt::Display for MotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{s:?}")?;
        }
        Ok(())
    }
}

impl FromStr for MotzkinPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let steps = s
            .trim()
            .chars()
            .map(|ch| match ch {
                'U' | 'u' => Ok(Step::U),
                'D' | 'd' => Ok(Step::D),
                'H' | 'h' => Ok(Step::H),
                other => Err(Error::InvalidPath(format!("unexpected letter {other:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        MotzkinPath::new(steps)
    }
}

/// `M_n`: all Motzkin paths of length `n`, in lexicographic order `U < D < H`.
pub fn motzkin_paths(n: usize) -> Vec<MotzkinPath> {
    fn go(n: usize, h: usize, prefix: &mut Vec<Step>, out: &mut Vec<MotzkinPath>) {
        let left = n - prefix.len();
        if left == 0 {
            if h == 0 {
                out.push(MotzkinPath { steps: prefix.clone() });
            }
            return;
        }
        if h < left {
            prefix.push(Step::U);
            go(n, h + 1, prefix, out);
            prefix.pop();
        }
        if h > 0 {
            prefix.push(Step::D);
            go(n, h - 1, prefix, out);
            prefix.pop();
        }
        if h + 1 <= left {
            prefix.push(Step::H);
            go(n, h, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 0, &mut Vec::new(), &mut out);
    out
}

/// `M̄_n`: Motzkin paths of length `n` without peaks of height 1.
pub fn motzkin_paths_no_low_peaks(n: usize) -> Vec<MotzkinPath> {
    motzkin_paths(n).into_iter().filter(|p| !p.has_low_peak()).collect()
}

/// `Ψ(δ) = M_1 ⋯ M_{n+1}` with `M_i = U` if `i ≤ n` and `i + 1` is not a
/// right endpoint, `M_i = D` if `i ≥ 2` and `i − 1` is not a left endpoint,
/// and `H` otherwise.
pub fn psi(delta: &ArcDiagram) -> Result<MotzkinPath, Error> {
    let n = delta.n;
    let steps = (1..=n + 1)
        .map(|i| {
            let up = i <= n && !delta.is_right_endpoint(i + 1);
            let down = i >= 2 && !delta.is_left_endpoint(i - 1);
            match (up, down) {
                (true, true) => Err(Error::NotMaximal(format!(
                    "step {i} would be both U and D in {delta}"
                ))),
                (true, false) => Ok(Step::U),
                (false, true) => Ok(Step::D),
                (false, false) => Ok(Step::H),
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    MotzkinPath::new(steps).map_err(|e| Error::NotMaximal(format!("{delta}: {e}")))
}

/// `Ψ⁻¹(M)` for the bipartite `ν`, built left to right from partial arcs.
///
/// Open partial arcs are kept in vertical order, bottom first. At an odd
/// point the unattached arcs pass above, so the arc attached there is the
/// lowest and a new arc starts below all others; at an even point the roles
/// of top and bottom swap.
pub fn psi_inverse(path: &MotzkinPath) -> Result<ArcDiagram, Error> {
    if path.is_empty() {
        return Err(Error::InvalidPath("empty path".into()));
    }
    if path.has_low_peak() {
        return Err(Error::InvalidPath(format!("{path} has a peak of height 1")));
    }
    let n = path.len() - 1;
    let nu = NuMap::bipartite(n);
    let m = |i: usize| path.steps[i - 1];
    let mut open: Vec<usize> = Vec::new();
    let mut arcs = Vec::new();
    for k in 1..=n + 1 {
        let odd = k % 2 == 1;
        if k >= 2 && m(k - 1) != Step::U {
            let left = if odd {
                (!open.is_empty()).then(|| open.remove(0))
            } else {
                open.pop()
            }
            .ok_or_else(|| Error::InvalidPath(format!("no partial arc to attach at {k}")))?;
            arcs.push(sortable_arc(&nu, left, k));
        }
        if k <= n && m(k + 1) != Step::D {
            if odd {
                open.insert(0, k);
            } else {
                open.push(k);
            }
        }
    }
    if !open.is_empty() {
        return Err(Error::InvalidPath(format!("{} partial arcs left open", open.len())));
    }
    ArcDiagram::new(n, arcs)
}

#[cfg(test)]
mod tests {
    use super::super::arcs::maximal_diagrams;
    use super::*;
    use std::collections::BTreeSet;

    fn p(s: &str) -> MotzkinPath {
        s.parse().unwrap()
    }

    #[test]
    fn counts_and_examples() {
        assert_eq!(motzkin_paths(0).len(), 1);
        let counts: Vec<usize> = (0..=8).map(|n| motzkin_paths(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9, 21, 51, 127, 323]);
        let bar3: Vec<String> =
            motzkin_paths_no_low_peaks(3).iter().map(|m| m.to_string()).collect();
        assert_eq!(bar3, vec!["UHD", "HHH"]);
        assert_eq!(p("UHHDHUDUHUDD").peaks(), vec![(6, 1), (10, 2)]);
        assert!("UDD".parse::<MotzkinPath>().is_err());
        assert!("UX".parse::<MotzkinPath>().is_err());
    }

    #[test]
    fn psi_small_case() {
        let mads = maximal_diagrams(&NuMap::bipartite(1)).unwrap();
        assert_eq!(psi(&mads[0]).unwrap(), p("HH"));
        assert_eq!(psi_inverse(&p("HH")).unwrap(), mads[0]);
    }

    #[test]
    fn psi_rejects_non_maximal() {
        // The empty diagram on 3 points has step 2 both U and D.
        let empty = ArcDiagram::new(2, vec![]).unwrap();
        assert!(matches!(psi(&empty), Err(Error::NotMaximal(_))));
        assert!(matches!(psi_inverse(&p("UD")), Err(Error::InvalidPath(_))));
    }

    #[test]
    fn step_by_step_example() {
        let m = p("UHUUDHDD");
        let d = psi_inverse(&m).unwrap();
        assert_eq!(psi(&d).unwrap(), m);
        assert!(d.is_noncrossing());
        assert_eq!(d.len(), 7 - m.count_up());
        assert!(maximal_diagrams(&NuMap::bipartite(7)).unwrap().contains(&d));
    }

    #[test]
    fn psi_is_a_bijection() {
        for n in 1..=7 {
            let mads = maximal_diagrams(&NuMap::bipartite(n)).unwrap();
            let bar = motzkin_paths_no_low_peaks(n + 1);
            let mut images = BTreeSet::new();
            for d in &mads {
                let m = psi(d).unwrap();
                assert!(!m.has_low_peak());
                assert_eq!(d.len(), n - m.count_up());
                assert_eq!(&psi_inverse(&m).unwrap(), d);
                images.insert(m);
            }
            assert_eq!(images.len(), mads.len());
            assert_eq!(images, bar.iter().cloned().collect::<BTreeSet<_>>());
            for m in &bar {
                assert_eq!(&psi(&psi_inverse(m).unwrap()).unwrap(), m);
            }
        }
    }
}
