//! Exact bivariate power series in `z` with polynomial coefficients in `q`,
//! used to expand the Motzkin generating functions three ways: by the
//! functional equations, by the closed forms, and by path enumeration.

use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use super::motzkin::motzkin_paths_no_low_peaks;
use super::motzkin::motzkin_paths;

/// A polynomial in `q` with rational coefficients; `coeffs[k]` multiplies
/// `q^k`. Trailing zeros are trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    /// A constant.
    pub fn constant(c: i64) -> Self {
        Self::from_coeffs(vec![BigRational::from_integer(c.into())])
    }

    /// `c q^k`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = BigRational::from_integer(c.into());
        Self::from_coeffs(coeffs)
    }

    /// From integer coefficients.
    pub fn from_ints(c: &[i64]) -> Self {
        Self::from_coeffs(c.iter().map(|&x| BigRational::from_integer(x.into())).collect())
    }

    fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    /// Whether this is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `q^k`.
    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Degree plus one (0 for the zero polynomial).
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    /// Whether the coefficient list is empty.
    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonnegative integer coefficients, if every coefficient is one.
    pub fn to_u64(&self) -> Option<Vec<u64>> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_integer() && !c.is_negative() {
                    u64::try_from(c.to_integer()).ok()
                } else {
                    None
                }
            })
            .collect()
    }

    /// The constant coefficient, if the polynomial is constant.
    fn as_constant(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    fn add(&self, o: &QPoly) -> QPoly {
        let n = self.len().max(o.len());
        Self::from_coeffs((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }

    fn neg(&self) -> QPoly {
        QPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    fn mul(&self, o: &QPoly) -> QPoly {
        if self.is_zero() || o.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.len() + o.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    fn scale(&self, s: &BigRational) -> QPoly {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Divides by `q`; the constant term must vanish.
    fn div_q(&self) -> Option<QPoly> {
        match self.coeffs.first() {
            None => Some(QPoly::zero()),
            Some(c) if c.is_zero() => Some(QPoly { coeffs: self.coeffs[1..].to_vec() }),
            Some(_) => None,
        }
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => c.to_string(),
                1 => format!("{c}q"),
                _ => format!("{c}q^{k}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// A power series in `z` truncated after `z^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<QPoly>,
}

impl Series {
    /// From coefficients `[z^0, z^1, …]`.
    pub fn new(coeffs: Vec<QPoly>) -> Self {
        Series { coeffs }
    }

    /// The truncation order.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `z^n`.
    pub fn coeff(&self, n: usize) -> &QPoly {
        &self.coeffs[n]
    }

    /// Coefficients `[z^0, …, z^order]`.
    pub fn coeffs(&self) -> &[QPoly] {
        &self.coeffs
    }

    /// Keeps `z^0, …, z^order`.
    pub fn truncate(&self, order: usize) -> Series {
        Series { coeffs: self.coeffs[..=order].to_vec() }
    }

    fn zeros(order: usize) -> Series {
        Series { coeffs: vec![QPoly::zero(); order + 1] }
    }

    /// A polynomial in `z`: `terms[n]` multiplies `z^n`.
    fn poly(order: usize, terms: &[QPoly]) -> Series {
        let mut s = Self::zeros(order);
        for (n, t) in terms.iter().enumerate().take(order + 1) {
            s.coeffs[n] = t.clone();
        }
        s
    }

    fn add(&self, o: &Series) -> Series {
        Series { coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.add(b)).collect() }
    }

    fn sub(&self, o: &Series) -> Series {
        self.add(&o.neg())
    }

    fn neg(&self) -> Series {
        Series { coeffs: self.coeffs.iter().map(QPoly::neg).collect() }
    }

    fn mul(&self, o: &Series) -> Series {
        let n = self.order();
        let mut out = Self::zeros(n);
        for i in 0..=n {
            for j in 0..=n - i {
                out.coeffs[i + j] = out.coeffs[i + j].add(&self.coeffs[i].mul(&o.coeffs[j]));
            }
        }
        out
    }

    /// `√F` for `F` with constant term 1.
    fn sqrt(&self) -> Series {
        assert_eq!(self.coeffs[0], QPoly::constant(1), "sqrt needs constant term 1");
        let n = self.order();
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let mut s = Self::zeros(n);
        s.coeffs[0] = QPoly::constant(1);
        for k in 1..=n {
            let mut acc = self.coeffs[k].clone();
            for i in 1..k {
                acc = acc.add(&s.coeffs[i].mul(&s.coeffs[k - i]).neg());
            }
            s.coeffs[k] = acc.scale(&half);
        }
        s
    }

    /// `1/F` for `F` with a nonzero constant (in `q`) term.
    fn recip(&self) -> Series {
        let c = self.coeffs[0].as_constant().filter(|c| !c.is_zero());
        let c = c.expect("reciprocal needs a nonzero constant term");
        let inv = c.recip();
        let n = self.order();
        let mut r = Self::zeros(n);
        r.coeffs[0] = QPoly::from_coeffs(vec![inv.clone()]);
        for k in 1..=n {
            let mut acc = QPoly::zero();
            for i in 1..=k {
                acc = acc.add(&self.coeffs[i].mul(&r.coeffs[k - i]));
            }
            r.coeffs[k] = acc.neg().scale(&inv);
        }
        r
    }

    /// Divides by `z`, dropping the top term; `z^0` must vanish.
    fn div_z(&self) -> Series {
        assert!(self.coeffs[0].is_zero(), "division by z needs a zero constant term");
        Series { coeffs: self.coeffs[1..].to_vec() }
    }

    /// Divides every coefficient by `q`.
    fn div_q(&self) -> Series {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| c.div_q().expect("division by q needs zero q^0 terms"))
                .collect(),
        }
    }
}

fn one() -> QPoly {
    QPoly::constant(1)
}

fn q() -> QPoly {
    QPoly::monomial(1, 1)
}

/// `M(q, z)` through order `order` from `M − 1 = qz²M² + zM`:
/// `M_n = M_{n−1} + q Σ_{a+b=n−2} M_a M_b`.
pub fn m_by_recurrence(order: usize) -> Series {
    let mut m: Vec<QPoly> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut c = if n == 0 { one() } else { m[n - 1].clone() };
        if n >= 2 {
            let mut conv = QPoly::zero();
            for a in 0..=n - 2 {
                conv = conv.add(&m[a].mul(&m[n - 2 - a]));
            }
            c = c.add(&q().mul(&conv));
        }
        m.push(c);
    }
    Series::new(m)
}

/// `M̄(q, z)` through order `order` from `M̄ − 1 = qz²(M − 1)M̄ + zM̄`:
/// `M̄_n = M̄_{n−1} + q Σ_{a+b=n−2, a≥1} M_a M̄_b`.
pub fn m_bar_by_recurrence(order: usize) -> Series {
    let m = m_by_recurrence(order);
    let mut mb: Vec<QPoly> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut c = if n == 0 { one() } else { mb[n - 1].clone() };
        if n >= 3 {
            let mut conv = QPoly::zero();
            for a in 1..=n - 2 {
                conv = conv.add(&m.coeff(a).mul(&mb[n - 2 - a]));
            }
            c = c.add(&q().mul(&conv));
        }
        mb.push(c);
    }
    Series::new(mb)
}

/// `M(q, z) = (1 − z − √(1 − 2z + (1 − 4q)z²)) / (2qz²)` expanded exactly.
pub fn closed_form_m(order: usize) -> Series {
    let work = order + 2;
    let disc = Series::poly(work, &[one(), QPoly::constant(-2), QPoly::from_ints(&[1, -4])]);
    let num = Series::poly(work, &[one(), QPoly::constant(-1)]).sub(&disc.sqrt());
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let s = num.div_z().div_z().div_q();
    Series::new(s.coeffs.iter().map(|c| c.scale(&half)).collect()).truncate(order)
}

/// `M̄(q, z) = 2 / (1 − z + 2qz² + √(1 − 2z + (1 − 4q)z²))` expanded exactly.
pub fn closed_form_m_bar(order: usize) -> Series {
    let disc = Series::poly(order, &[one(), QPoly::constant(-2), QPoly::from_ints(&[1, -4])]);
    let den = Series::poly(order, &[one(), QPoly::constant(-1), QPoly::monomial(2, 1)])
        .add(&disc.sqrt());
    Series::poly(order, &[QPoly::constant(2)]).mul(&den.recip())
}

/// The right side of the facet generating function,
/// `(1/(qz)) (2 / (1 − qz(1 − 2z) + √(1 + q²z² − 2qz(1 + 2z))) − 1) − 1`,
/// expanded exactly; `coeff(n)` is the predicted `P(q)` for `A_n`.
pub fn closed_form_conjectured(order: usize) -> Series {
    let work = order + 1;
    // 1 + q²z² − 2qz(1 + 2z) = 1 − 2qz + (q² − 4q)z².
    let disc = Series::poly(work, &[one(), QPoly::monomial(-2, 1), QPoly::from_ints(&[0, -4, 1])]);
    // 1 − qz(1 − 2z) = 1 − qz + 2qz².
    let den = Series::poly(work, &[one(), QPoly::monomial(-1, 1), QPoly::monomial(2, 1)])
        .add(&disc.sqrt());
    let frac = Series::poly(work, &[QPoly::constant(2)]).mul(&den.recip());
    let inner = frac.sub(&Series::poly(work, &[one()]));
    inner.div_z().div_q().sub(&Series::poly(order, &[one()]))
}

/// `(1/(qz))(M̄(1/q, qz) − 1) − 1`: the coefficient of `z^n` is
/// `Σ_k m̄_{n+1,k} q^{n−k}` where `m̄_{n,k}` counts `M̄_n` by `#U = k`.
pub fn conjectured_from_recurrence(order: usize) -> Series {
    let mb = m_bar_by_recurrence(order + 1);
    let mut coeffs = vec![QPoly::zero()];
    for n in 1..=order {
        let src = mb.coeff(n + 1);
        let mut c = vec![BigRational::zero(); n + 1];
        for k in 0..src.len() {
            c[n - k] = src.coeff(k);
        }
        coeffs.push(QPoly::from_coeffs(c));
    }
    Series::new(coeffs)
}

/// `M` or `M̄` counted directly from path enumeration.
pub fn series_by_enumeration(order: usize, no_low_peaks: bool) -> Series {
    let coeffs = (0..=order)
        .map(|n| {
            let paths =
                if no_low_peaks { motzkin_paths_no_low_peaks(n) } else { motzkin_paths(n) };
            let mut c = vec![0i64; n / 2 + 1];
            for p in paths {
                c[p.count_up()] += 1;
            }
            QPoly::from_ints(&c)
        })
        .collect();
    Series::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m_three_ways() {
        let rec = m_by_recurrence(10);
        assert_eq!(rec, closed_form_m(10));
        assert_eq!(rec, series_by_enumeration(10, false));
        assert_eq!(rec.coeff(4).to_u64().unwrap(), vec![1, 6, 2]);
    }

    #[test]
    fn m_bar_three_ways() {
        let rec = m_bar_by_recurrence(10);
        assert_eq!(rec, closed_form_m_bar(10));
        assert_eq!(rec, series_by_enumeration(10, true));
        assert_eq!(rec.coeff(3).to_u64().unwrap(), vec![1, 1]);
    }

    #[test]
    fn conjectured_form_two_ways() {
        let closed = closed_form_conjectured(9);
        assert_eq!(closed, conjectured_from_recurrence(9));
        assert!(closed.coeff(0).is_zero());
        assert_eq!(closed.coeff(1).to_u64().unwrap(), vec![0, 1]);
        assert_eq!(closed.coeff(2).to_u64().unwrap(), vec![0, 1, 1]);
    }

    #[test]
    fn qpoly_display() {
        assert_eq!(QPoly::from_ints(&[1, 0, 3]).to_string(), "1 + 3q^2");
        assert_eq!(QPoly::zero().to_string(), "0");
    }
}
