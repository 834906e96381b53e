//! Exact coefficient arithmetic for root coordinates.
//!
//! Crystallographic root systems only need integers; the `H` types and
//! `I2(5)` need the golden integers `Z[φ]` with `φ² = φ + 1`. Both are
//! represented by [`GoldenInt`], whose integer subring is `b = 0`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

/// An element `a + bφ` of `Z[φ]`, where `φ = (1 + √5)/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize)]
pub struct GoldenInt {
    /// Rational part.
    pub a: i64,
    /// Coefficient of `φ`.
    pub b: i64,
}

impl GoldenInt {
    /// The additive identity.
    pub const ZERO: GoldenInt = GoldenInt { a: 0, b: 0 };
    /// The multiplicative identity.
    pub const ONE: GoldenInt = GoldenInt { a: 1, b: 0 };
    /// The golden ratio itself.
    pub const PHI: GoldenInt = GoldenInt { a: 0, b: 1 };

    /// Builds `a + bφ`.
    pub const fn new(a: i64, b: i64) -> Self {
        GoldenInt { a, b }
    }

    /// Embeds an integer.
    pub const fn int(a: i64) -> Self {
        GoldenInt { a, b: 0 }
    }

    /// True when the value is zero.
    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// True when the value lies in `Z`.
    pub fn is_integer(self) -> bool {
        self.b == 0
    }

    /// Exact sign of the real number `a + bφ`.
    ///
    /// `2(a + bφ) = (2a + b) + b√5`, so the sign follows from comparing
    /// `(2a + b)²` with `5b²` when the two summands disagree in sign.
    pub fn signum(self) -> i32 {
        let p = 2 * self.a as i128 + self.b as i128;
        let q = self.b as i128;
        let sp = p.signum();
        let sq = q.signum();
        if sp == 0 {
            return sq as i32;
        }
        if sq == 0 || sp == sq {
            return sp as i32;
        }
        match (p * p).cmp(&(5 * q * q)) {
            Ordering::Greater => sp as i32,
            Ordering::Less => sq as i32,
            Ordering::Equal => 0,
        }
    }

    /// Floating-point value, for display only.
    pub fn to_f64(self) -> f64 {
        self.a as f64 + self.b as f64 * (1.0 + 5f64.sqrt()) / 2.0
    }
}

impl Add for GoldenInt {
    type Output = GoldenInt;
    fn add(self, o: GoldenInt) -> GoldenInt {
        GoldenInt::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for GoldenInt {
    type Output = GoldenInt;
    fn sub(self, o: GoldenInt) -> GoldenInt {
        GoldenInt::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for GoldenInt {
    type Output = GoldenInt;
    fn neg(self) -> GoldenInt {
        GoldenInt::new(-self.a, -self.b)
    }
}

impl Mul for GoldenInt {
    type Output = GoldenInt;
    // (a + bφ)(c + dφ) = ac + bd + (ad + bc + bd)φ since φ² = φ + 1.
    fn mul(self, o: GoldenInt) -> GoldenInt {
        GoldenInt::new(
            self.a * o.a + self.b * o.b,
            self.a * o.b + self.b * o.a + self.b * o.b,
        )
    }
}

impl PartialOrd for GoldenInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GoldenInt {
    fn cmp(&self, other: &Self) -> Ordering {
        (*self - *other).signum().cmp(&0)
    }
}

impl fmt::Display for GoldenInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, 1) => write!(f, "φ"),
            (0, b) => write!(f, "{b}φ"),
            (a, 1) => write!(f, "{a}+φ"),
            (a, b) if b < 0 => write!(f, "{a}{b}φ"),
            (a, b) => write!(f, "{a}+{b}φ"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn phi_squared_is_phi_plus_one() {
        assert_eq!(GoldenInt::PHI * GoldenInt::PHI, GoldenInt::new(1, 1));
    }

    #[test]
    fn sign_of_conjugate_pair() {
        // φ - 2 < 0 and 1 - φ/2 > 0.
        assert_eq!(GoldenInt::new(-2, 1).signum(), -1);
        assert_eq!(GoldenInt::new(2, -1).signum(), 1);
        assert_eq!(GoldenInt::new(-1, 1).signum(), 1);
        assert_eq!(GoldenInt::new(1, -1).signum(), -1);
        assert_eq!(GoldenInt::ZERO.signum(), 0);
    }

    proptest! {
        #[test]
        fn sign_agrees_with_float(a in -1000i64..1000, b in -1000i64..1000) {
            let g = GoldenInt::new(a, b);
            let f = g.to_f64();
            let expect = if f > 1e-9 { 1 } else if f < -1e-9 { -1 } else { 0 };
            prop_assert_eq!(g.signum(), expect);
        }

        #[test]
        fn ring_axioms(a in -50i64..50, b in -50i64..50, c in -50i64..50, d in -50i64..50, e in -50i64..50, f in -50i64..50) {
            let x = GoldenInt::new(a, b);
            let y = GoldenInt::new(c, d);
            let z = GoldenInt::new(e, f);
            prop_assert_eq!(x * (y + z), x * y + x * z);
            prop_assert_eq!((x * y) * z, x * (y * z));
            prop_assert_eq!(x * y, y * x);
            prop_assert_eq!(x - x, GoldenInt::ZERO);
        }

        #[test]
        fn order_is_translation_invariant(a in -50i64..50, b in -50i64..50, c in -50i64..50, d in -50i64..50) {
            let x = GoldenInt::new(a, b);
            let y = GoldenInt::new(c, d);
            prop_assert_eq!(x.cmp(&y), (x + GoldenInt::PHI).cmp(&(y + GoldenInt::PHI)));
        }
    }
}
