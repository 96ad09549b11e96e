//! Fraction-free exact linear solving over `Z[q]`.

use num::bigint::BigInt;
use num::Zero;

use crate::qalg::QPoly;

/// Solve the square integer system `A x = b` with polynomial right-hand
/// side by fraction-free (Bareiss) elimination and exact back substitution.
///
/// Returns `None` when the matrix is singular or some solution component is
/// not a polynomial — both signal an upstream inconsistency to the caller.
pub(crate) fn solve_int_system(mut a: Vec<Vec<BigInt>>, mut b: Vec<QPoly>) -> Option<Vec<QPoly>> {
    let n = a.len();
    debug_assert!(a.iter().all(|row| row.len() == n) && b.len() == n);
    let mut prev = BigInt::from(1);
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        for r in col + 1..n {
            if a[r][col].is_zero() {
                // Still rescale so every row below shares the pivot factor.
                for c in col + 1..n {
                    let t = &a[col][col] * &a[r][c];
                    a[r][c] = exact_int_div(t, &prev);
                }
                b[r] = exact_poly_div(b[r].scaled(&a[col][col]), &prev);
                continue;
            }
            for c in col + 1..n {
                let t = &a[col][col] * &a[r][c] - &a[r][col] * &a[col][c];
                a[r][c] = exact_int_div(t, &prev);
            }
            let t = &b[r].scaled(&a[col][col]) - &b[col].scaled(&a[r][col]);
            b[r] = exact_poly_div(t, &prev);
            a[r][col] = BigInt::zero();
        }
        prev = a[col][col].clone();
    }
    // Back substitution; each division must be exact for a Z[q] solution.
    let mut x = vec![QPoly::zero(); n];
    for i in (0..n).rev() {
        let mut acc = b[i].clone();
        for j in i + 1..n {
            acc = &acc - &x[j].scaled(&a[i][j]);
        }
        x[i] = acc.div_exact_scalar(&a[i][i])?;
    }
    Some(x)
}

fn exact_int_div(value: BigInt, by: &BigInt) -> BigInt {
    debug_assert!((&value % by).is_zero(), "Bareiss division must be exact");
    value / by
}

fn exact_poly_div(value: QPoly, by: &BigInt) -> QPoly {
    value
        .div_exact_scalar(by)
        .expect("Bareiss division must be exact")
}

/// Binomial coefficient as a big integer.
pub(crate) fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::from(1);
    for i in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(s: &str) -> QPoly {
        s.parse().unwrap()
    }

    #[test]
    fn solves_a_unitriangular_system() {
        // x0 + 2 x1 = 1 + 2q ; x1 = q
        let a = vec![
            vec![BigInt::from(1), BigInt::from(2)],
            vec![BigInt::from(0), BigInt::from(1)],
        ];
        let b = vec![qp("1+2q"), qp("q")];
        let x = solve_int_system(a, b).unwrap();
        assert_eq!(x, vec![QPoly::one(), QPoly::q()]);
    }

    #[test]
    fn detects_singular_and_nonpolynomial() {
        let a = vec![
            vec![BigInt::from(1), BigInt::from(1)],
            vec![BigInt::from(2), BigInt::from(2)],
        ];
        let b = vec![qp("1"), qp("2")];
        assert!(solve_int_system(a, b).is_none());

        // 2x = 1 has no integer-polynomial solution.
        let a = vec![vec![BigInt::from(2)]];
        assert!(solve_int_system(a, vec![qp("1")]).is_none());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 0), BigInt::from(1));
        assert_eq!(binomial(2, 5), BigInt::zero());
    }
}
