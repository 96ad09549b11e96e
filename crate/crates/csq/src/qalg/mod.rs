//! Exact arithmetic in `Z[q]` and `Q(q)`: q-integers, q-factorials and the
//! classical identities relating them.
//!
//! [`QPoly`] is the ring of integer polynomials in `q` and [`QRat`] the field
//! of rational functions over it; all computation in this crate is exact and
//! every value is kept in a canonical form.

mod poly;
mod rat;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use thiserror::Error;

pub use poly::{gcd, lcm, QPoly};
pub use rat::QRat;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QalgError {
    #[error("division by zero in Q(q)")]
    DivisionByZero,
    #[error("denominator vanishes at the evaluation point")]
    Pole,
    #[error("{0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// The q-integer `1 + q + ... + q^(n-1)`; `qint(0)` is zero.
///
/// Panics on a negative index: no formula in this crate consumes one, so a
/// negative argument is a caller bug.
pub fn qint(n: i64) -> QPoly {
    assert!(n >= 0, "q-integer index must be nonnegative, got {n}");
    QPoly::from_coeffs(vec![BigInt::one(); n as usize])
}

/// The q-factorial, the product of `qint(1)..=qint(n)`; `qfact(0)` is 1.
pub fn qfact(n: i64) -> QPoly {
    assert!(n >= 0, "q-factorial index must be nonnegative, got {n}");
    let mut acc = QPoly::one();
    for i in 1..=n {
        acc = &acc * &qint(i);
    }
    acc
}

/// The q-integer for an arbitrary integer index, as the rational function
/// `(1 - q^k)/(1 - q)`. For `k < 0` this is `-qint(-k)/q^(-k)`; only the
/// identity checker below needs that extension.
fn qint_signed(k: i64) -> QRat {
    if k >= 0 {
        qint(k).into()
    } else {
        QRat::new(-qint(-k), QPoly::monomial(BigInt::one(), (-k) as usize))
    }
}

/// Checks, for the given `0 <= m <= n`, the three exact identities
///
/// ```text
/// [2][m]       = [m+1] + q[m-1]
/// [m+1][n] - [m][n+1]  = q^m [n-m]
/// [m+1][n] - q[m][n-1] = [m+n]
/// ```
///
/// Evaluated in `Q(q)`; the only index that can go negative under the
/// precondition is `-1` (at `m = 0` or `n = 0`), which is handled by the
/// rational-function form of the q-integer.
pub fn check_qint_identities(m: i64, n: i64) -> bool {
    assert!(0 <= m && m <= n, "requires 0 <= m <= n, got ({m}, {n})");
    let q = QRat::from(QPoly::q());
    let two = qint_signed(2);

    let id1 = &two * &qint_signed(m) == &qint_signed(m + 1) + &(&q * &qint_signed(m - 1));
    let id2 = &(&qint_signed(m + 1) * &qint_signed(n)) - &(&qint_signed(m) * &qint_signed(n + 1))
        == &QRat::q_pow(m) * &qint_signed(n - m);
    let id3 = &(&qint_signed(m + 1) * &qint_signed(n))
        - &(&q * &(&qint_signed(m) * &qint_signed(n - 1)))
        == qint_signed(m + n);
    id1 && id2 && id3
}

/// Checks `sum_k prod_{i != k} x_i/(x_k - x_i) = (-1)^(n+1)` exactly over
/// the rationals. The entries must be nonzero and pairwise distinct.
pub fn check_partial_fraction_identity(xs: &[BigRational]) -> Result<bool, QalgError> {
    if xs.is_empty() {
        return Err(QalgError::Domain("empty sample set".into()));
    }
    if xs.iter().any(|x| x.is_zero()) {
        return Err(QalgError::Domain("entries must be nonzero".into()));
    }
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            if xs[i] == xs[j] {
                return Err(QalgError::Domain(
                    "entries must be pairwise distinct".into(),
                ));
            }
        }
    }
    let mut sum = BigRational::zero();
    for k in 0..xs.len() {
        let mut prod = BigRational::one();
        for (i, x) in xs.iter().enumerate() {
            if i != k {
                prod *= x / (&xs[k] - x);
            }
        }
        sum += prod;
    }
    let expected = if xs.len().is_multiple_of(2) {
        -BigRational::one()
    } else {
        BigRational::one()
    };
    Ok(sum == expected)
}
