//! Integer-coefficient polynomials in the formal variable `q`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

use super::QalgError;

/// Degrees above this are rejected by the text parser so hostile input
/// cannot force huge allocations.
const MAX_PARSE_DEGREE: usize = 4096;

/// A polynomial in `q` with arbitrary-precision integer coefficients.
///
/// `coeffs[i]` is the coefficient of `q^i`. The representation is canonical:
/// the highest-degree coefficient is nonzero and the zero polynomial is the
/// empty vector, so derived equality is exact equality of polynomials.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    /// Build from coefficients (index = exponent), trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `c * q^deg`.
    pub fn monomial(c: BigInt, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        QPoly { coeffs }
    }

    /// The variable `q` itself.
    pub fn q() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^i` (zero when out of range).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// True when every coefficient is `>= 0`.
    pub fn coeffs_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Evaluation at `q = 1`, i.e. the sum of the coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Multiply by `q^k`.
    pub fn shifted(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    pub fn scaled(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Greatest common divisor of the coefficients (nonnegative; 0 for the
    /// zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// `self` divided by its content. The leading coefficient keeps its sign.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let g = self.content();
        if g.is_one() {
            return self.clone();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Divide by an integer scalar, returning `None` unless every
    /// coefficient divides exactly.
    pub fn div_exact_scalar(&self, c: &BigInt) -> Option<Self> {
        if c.is_zero() {
            return None;
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            let (quot, rem) = a.div_rem(c);
            if !rem.is_zero() {
                return None;
            }
            out.push(quot);
        }
        Some(QPoly { coeffs: out })
    }

    /// Exact polynomial division over `Z[q]`; `None` if `d` is zero or does
    /// not divide `self` exactly.
    pub fn div_exact(&self, d: &QPoly) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dd = d.degree().unwrap();
        let sd = self.degree().unwrap();
        if sd < dd {
            return None;
        }
        let lead = d.leading_coeff().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            if rem[dd + k].is_zero() {
                continue;
            }
            let (c, r) = rem[dd + k].div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                let t = dc * &c;
                rem[j + k] -= t;
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(quot))
    }

    /// Flip the sign when the leading coefficient is negative.
    fn with_positive_lead(self) -> Self {
        match self.leading_coeff() {
            Some(l) if l.is_negative() => -&self,
            _ => self,
        }
    }
}

/// Pseudo-remainder of `a` by `b` (`b` nonzero): the remainder of
/// `lc(b)^(deg a - deg b + 1) * a` divided by `b`.
fn pseudo_rem(a: &QPoly, b: &QPoly) -> QPoly {
    let db = b.degree().expect("pseudo_rem by zero polynomial");
    let lb = b.leading_coeff().unwrap().clone();
    let mut r = a.clone();
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let lr = r.leading_coeff().unwrap().clone();
        r = &r.scaled(&lb) - &b.shifted(dr - db).scaled(&lr);
    }
    r
}

/// Greatest common divisor over `Z[q]` (primitive pseudo-remainder
/// sequence with content extraction). The result has a positive leading
/// coefficient; `gcd(0, 0) = 0`.
pub fn gcd(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_zero() {
        return b.clone().with_positive_lead();
    }
    if b.is_zero() {
        return a.clone().with_positive_lead();
    }
    let content = a.content().gcd(&b.content());
    let mut p = a.primitive_part();
    let mut r = b.primitive_part();
    while !r.is_zero() {
        let next = pseudo_rem(&p, &r).primitive_part();
        p = r;
        r = next;
    }
    p.scaled(&content).with_positive_lead()
}

/// Least common multiple over `Z[q]`, primitive up to the contents of the
/// inputs; zero if either input is zero.
pub fn lcm(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_zero() || b.is_zero() {
        return QPoly::zero();
    }
    let g = gcd(a, b);
    (a * b).div_exact(&g).expect("gcd divides the product")
}

impl Add<&QPoly> for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for i in 0..len {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Sub<&QPoly> for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for i in 0..len {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Mul<&QPoly> for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_poly_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: QPoly) -> QPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&QPoly> for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: &QPoly) -> QPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<QPoly> for &QPoly {
            type Output = QPoly;
            fn $method(self, rhs: QPoly) -> QPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_poly_binop!(Add, add);
forward_poly_binop!(Sub, sub);
forward_poly_binop!(Mul, mul);

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

impl From<i64> for QPoly {
    fn from(c: i64) -> Self {
        Self::constant(BigInt::from(c))
    }
}

impl fmt::Display for QPoly {
    /// Renders e.g. `1+2q+2q^2+q^3`; zero terms are omitted, a unit
    /// coefficient prints as bare `q`, and the zero polynomial prints `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let mag = c.abs();
            match i {
                0 => write!(f, "{mag}")?,
                1 if mag.is_one() => write!(f, "q")?,
                1 => write!(f, "{mag}q")?,
                _ if mag.is_one() => write!(f, "q^{i}")?,
                _ => write!(f, "{mag}q^{i}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for QPoly {
    type Err = QalgError;

    /// Parses the `Display` format: signed terms of the shape `c`, `q`,
    /// `cq`, `q^k` or `cq^k` joined by `+`/`-`. Whitespace is ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(QalgError::Parse("empty polynomial".into()));
        }
        let bytes = compact.as_bytes();
        let mut coeffs: Vec<BigInt> = Vec::new();
        let mut pos = 0;
        let mut first = true;
        while pos < bytes.len() {
            let sign = match bytes[pos] {
                b'+' if !first => {
                    pos += 1;
                    1
                }
                b'-' => {
                    pos += 1;
                    -1
                }
                _ if first => 1,
                other => {
                    return Err(QalgError::Parse(format!(
                        "expected '+' or '-', found {:?}",
                        other as char
                    )))
                }
            };
            first = false;
            let digits_start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let mag = if pos > digits_start {
                compact[digits_start..pos]
                    .parse::<BigInt>()
                    .map_err(|e| QalgError::Parse(e.to_string()))?
            } else {
                BigInt::one()
            };
            let exponent = if pos < bytes.len() && bytes[pos] == b'q' {
                pos += 1;
                if pos < bytes.len() && bytes[pos] == b'^' {
                    pos += 1;
                    let e_start = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    if pos == e_start {
                        return Err(QalgError::Parse("missing exponent after '^'".into()));
                    }
                    compact[e_start..pos]
                        .parse::<usize>()
                        .map_err(|e| QalgError::Parse(e.to_string()))?
                } else {
                    1
                }
            } else {
                if pos == digits_start {
                    return Err(QalgError::Parse("expected a coefficient or 'q'".into()));
                }
                0
            };
            if exponent > MAX_PARSE_DEGREE {
                return Err(QalgError::Parse(format!(
                    "exponent {exponent} exceeds the supported maximum {MAX_PARSE_DEGREE}"
                )));
            }
            if coeffs.len() <= exponent {
                coeffs.resize(exponent + 1, BigInt::zero());
            }
            coeffs[exponent] += mag * sign;
        }
        Ok(Self::from_coeffs(coeffs))
    }
}
