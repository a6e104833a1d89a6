use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use super::rational::{int, parse_rational, rat, Rational};
use crate::error::{Error, Result};

/// The radicand of the quadratic field this crate works in.
pub const RADICAND: i64 = 161;

/// An element `a + b·√161` of the real quadratic field Q(√161).
///
/// Equality is componentwise (√161 is irrational) and the order is the
/// order of the reals, decided exactly.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadNum {
    pub a: Rational,
    pub b: Rational,
}

impl QuadNum {
    pub fn new(a: Rational, b: Rational) -> Self {
        QuadNum { a, b }
    }

    pub fn rational(a: Rational) -> Self {
        QuadNum { a, b: Rational::zero() }
    }

    /// √161.
    pub fn sqrt_radicand() -> Self {
        QuadNum {
            a: Rational::zero(),
            b: Rational::one(),
        }
    }

    /// ρ₀ = (33 − √161)/116, the density threshold of the sparse case.
    pub fn rho0() -> Self {
        QuadNum {
            a: rat(33, 116),
            b: rat(-1, 116),
        }
    }

    pub fn conj(&self) -> Self {
        QuadNum {
            a: self.a.clone(),
            b: -self.b.clone(),
        }
    }

    /// `a² − 161·b²`, the product with the conjugate.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - int(RADICAND) * &self.b * &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn signum(&self) -> i32 {
        let sa = sign(&self.a);
        let sb = sign(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        // opposite signs: the larger magnitude wins
        let a2 = &self.a * &self.a;
        let b2 = int(RADICAND) * &self.b * &self.b;
        match a2.cmp(&b2) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => unreachable!("161 is not a perfect square"),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.signum() >= 0
    }

    pub fn recip(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let c = self.conj();
        Some(QuadNum {
            a: c.a / &n,
            b: c.b / &n,
        })
    }

    pub fn to_f64(&self) -> f64 {
        super::rational::to_f64(&self.a) + super::rational::to_f64(&self.b) * (RADICAND as f64).sqrt()
    }
}

fn sign(x: &Rational) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

impl From<Rational> for QuadNum {
    fn from(a: Rational) -> Self {
        QuadNum::rational(a)
    }
}

impl PartialOrd for QuadNum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadNum {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

impl fmt::Display for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            return write!(f, "{}*sqrt({RADICAND})", self.b);
        }
        if self.b.is_negative() {
            write!(f, "{} - {}*sqrt({RADICAND})", self.a, -self.b.clone())
        } else {
            write!(f, "{} + {}*sqrt({RADICAND})", self.a, self.b)
        }
    }
}

impl<'a> Add<&'a QuadNum> for &'a QuadNum {
    type Output = QuadNum;
    fn add(self, o: &QuadNum) -> QuadNum {
        QuadNum {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
        }
    }
}

impl<'a> Sub<&'a QuadNum> for &'a QuadNum {
    type Output = QuadNum;
    fn sub(self, o: &QuadNum) -> QuadNum {
        QuadNum {
            a: &self.a - &o.a,
            b: &self.b - &o.b,
        }
    }
}

impl<'a> Mul<&'a QuadNum> for &'a QuadNum {
    type Output = QuadNum;
    fn mul(self, o: &QuadNum) -> QuadNum {
        QuadNum {
            a: &self.a * &o.a + int(RADICAND) * &self.b * &o.b,
            b: &self.a * &o.b + &self.b * &o.a,
        }
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl<'a> Div<&'a QuadNum> for &'a QuadNum {
    type Output = QuadNum;
    /// Panics on division by zero.
    fn div(self, o: &QuadNum) -> QuadNum {
        self * &o.recip().expect("division by zero in Q(sqrt 161)")
    }
}

impl Neg for QuadNum {
    type Output = QuadNum;
    fn neg(self) -> QuadNum {
        QuadNum { a: -self.a, b: -self.b }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<QuadNum> for QuadNum {
            type Output = QuadNum;
            fn $m(self, o: QuadNum) -> QuadNum {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl std::str::FromStr for QuadNum {
    type Err = Error;

    /// Parses the [`Display`](fmt::Display) forms: `a`, `b*sqrt(161)`,
    /// `a + b*sqrt(161)` and `a - b*sqrt(161)`.
    fn from_str(text: &str) -> Result<QuadNum> {
        let text = text.trim();
        let surd = format!("*sqrt({RADICAND})");
        let Some(head) = text.strip_suffix(surd.as_str()) else {
            return Ok(QuadNum::rational(parse_rational(text)?));
        };
        for (sep, sign) in [(" + ", 1), (" - ", -1)] {
            if let Some((a, b)) = head.rsplit_once(sep) {
                return Ok(QuadNum {
                    a: parse_rational(a)?,
                    b: parse_rational(b)? * int(sign),
                });
            }
        }
        Ok(QuadNum {
            a: Rational::zero(),
            b: parse_rational(head)?,
        })
    }
}
