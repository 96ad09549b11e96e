//! The rational function field `Q(q)`, with values kept in a canonical form
//! so that equality is a plain structural comparison.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

use super::poly::{gcd, QPoly};
use super::QalgError;

/// An element of `Q(q)` as a reduced fraction of integer polynomials.
///
/// Canonical form: numerator and denominator share no nonconstant factor and
/// no integer content, the denominator is nonzero and has a positive leading
/// coefficient, and zero is `0/1`. Two values are equal iff their components
/// are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QRat {
    num: QPoly,
    den: QPoly,
}

impl QRat {
    /// Reduce `num/den` to canonical form. Panics if `den` is zero; use
    /// [`QRat::checked_div`] for data-dependent divisors.
    pub fn new(num: QPoly, den: QPoly) -> Self {
        assert!(!den.is_zero(), "denominator must be nonzero");
        if num.is_zero() {
            return Self::zero();
        }
        let g = gcd(&num, &den);
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = num.div_exact_scalar(&c).unwrap();
            den = den.div_exact_scalar(&c).unwrap();
        }
        if den.leading_coeff().is_some_and(|l| l.is_negative()) {
            num = -num;
            den = -den;
        }
        QRat { num, den }
    }

    pub fn zero() -> Self {
        QRat {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn one() -> Self {
        QRat {
            num: QPoly::one(),
            den: QPoly::one(),
        }
    }

    /// `q^k` for any integer `k`, negative exponents included.
    pub fn q_pow(k: i64) -> Self {
        if k >= 0 {
            QPoly::monomial(BigInt::one(), k as usize).into()
        } else {
            QRat {
                num: QPoly::one(),
                den: QPoly::monomial(BigInt::one(), (-k) as usize),
            }
        }
    }

    pub fn numer(&self) -> &QPoly {
        &self.num
    }

    pub fn denom(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value is a polynomial (denominator 1).
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Division that reports a zero divisor instead of panicking.
    pub fn checked_div(&self, rhs: &QRat) -> Result<QRat, QalgError> {
        if rhs.is_zero() {
            return Err(QalgError::DivisionByZero);
        }
        Ok(self / rhs)
    }

    /// Exact evaluation at a rational point; errors at poles.
    pub fn eval(&self, x: &BigRational) -> Result<BigRational, QalgError> {
        let den = self.den.eval(x);
        if den.is_zero() {
            return Err(QalgError::Pole);
        }
        Ok(self.num.eval(x) / den)
    }
}

impl From<QPoly> for QRat {
    fn from(p: QPoly) -> Self {
        QRat {
            num: p,
            den: QPoly::one(),
        }
    }
}

impl From<&QPoly> for QRat {
    fn from(p: &QPoly) -> Self {
        p.clone().into()
    }
}

impl From<i64> for QRat {
    fn from(c: i64) -> Self {
        QPoly::from(c).into()
    }
}

impl Default for QRat {
    fn default() -> Self {
        Self::zero()
    }
}

impl Add<&QRat> for &QRat {
    type Output = QRat;
    fn add(self, rhs: &QRat) -> QRat {
        QRat::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub<&QRat> for &QRat {
    type Output = QRat;
    fn sub(self, rhs: &QRat) -> QRat {
        QRat::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul<&QRat> for &QRat {
    type Output = QRat;
    fn mul(self, rhs: &QRat) -> QRat {
        QRat::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div<&QRat> for &QRat {
    type Output = QRat;
    fn div(self, rhs: &QRat) -> QRat {
        assert!(!rhs.is_zero(), "division by zero in Q(q)");
        QRat::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_rat_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for QRat {
            type Output = QRat;
            fn $method(self, rhs: QRat) -> QRat {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&QRat> for QRat {
            type Output = QRat;
            fn $method(self, rhs: &QRat) -> QRat {
                (&self).$method(rhs)
            }
        }
        impl $trait<QRat> for &QRat {
            type Output = QRat;
            fn $method(self, rhs: QRat) -> QRat {
                self.$method(&rhs)
            }
        }
    };
}

forward_rat_binop!(Add, add);
forward_rat_binop!(Sub, sub);
forward_rat_binop!(Mul, mul);
forward_rat_binop!(Div, div);

impl Neg for QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        -&self
    }
}

impl fmt::Display for QRat {
    /// Renders `num` when the denominator is 1 and `num/(den)` otherwise;
    /// a multi-term numerator is parenthesized, e.g. `(1+q)/(1+q+q^2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let terms = self.num.coeffs().iter().filter(|c| !c.is_zero()).count();
        if terms > 1 {
            write!(f, "({})/({})", self.num, self.den)
        } else {
            write!(f, "{}/({})", self.num, self.den)
        }
    }
}

impl FromStr for QRat {
    type Err = QalgError;

    /// Parses the `Display` format: a polynomial, or `num/(den)` with the
    /// numerator optionally parenthesized.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let Some(slash) = find_top_level_slash(s) else {
            return Ok(s.parse::<QPoly>()?.into());
        };
        let num_part = strip_parens(s[..slash].trim());
        let den_part = s[slash + 1..].trim();
        let den_inner = den_part
            .strip_prefix('(')
            .and_then(|rest| rest.strip_suffix(')'))
            .ok_or_else(|| QalgError::Parse("denominator must be parenthesized".into()))?;
        let num: QPoly = num_part.parse()?;
        let den: QPoly = den_inner.parse()?;
        if den.is_zero() {
            return Err(QalgError::DivisionByZero);
        }
        Ok(QRat::new(num, den))
    }
}

fn find_top_level_slash(s: &str) -> Option<usize> {
    let mut depth = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.checked_sub(1)?,
            '/' if depth == 0 => return Some(i),
            _ => {}
        }
    }
    None
}

fn strip_parens(s: &str) -> &str {
    if let Some(inner) = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
        // Only strip when the parens actually match each other.
        let mut depth = 0i64;
        for (i, c) in inner.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => depth -= 1,
                _ => {}
            }
            if depth < 0 && i < inner.len() - 1 {
                return s;
            }
        }
        if depth == 0 {
            return inner;
        }
    }
    s
}
