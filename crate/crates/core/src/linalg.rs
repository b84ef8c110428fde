//! Small dense exact linear algebra over `Rational`.

use num_traits::{One, Zero};

use crate::polyalg::Rational;

/// Determinant by fraction-exact Gaussian elimination.
pub(crate) fn determinant(mut rows: Vec<Vec<Rational>>) -> Rational {
    let n = rows.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !rows[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            rows.swap(pivot, col);
            det = -det;
        }
        let p = rows[col][col].clone();
        det *= &p;
        let pivot_row = rows[col].clone();
        for row in &mut rows[col + 1..] {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &p;
            for (x, y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= &factor * y;
            }
        }
    }
    det
}

#[cfg(test)]
/// Solves `a · x = b` for square nonsingular `a`; `None` when singular.
pub(crate) fn solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = a.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(pivot, col);
        b.swap(pivot, col);
        let p = a[col][col].clone();
        let pivot_row = a[col].clone();
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &p;
            for (x, y) in a[r][col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= &factor * y;
            }
            let delta = &factor * &b[col];
            b[r] -= delta;
        }
    }
    Some((0..n).map(|i| &b[i] / &a[i][i]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    #[test]
    fn determinant_small() {
        assert_eq!(determinant(vec![vec![q(2), q(1)], vec![q(7), q(4)]]), q(1));
        assert_eq!(determinant(vec![vec![q(0), q(1)], vec![q(1), q(0)]]), q(-1));
        assert_eq!(determinant(vec![vec![q(1), q(2)], vec![q(2), q(4)]]), q(0));
        assert_eq!(determinant(vec![]), q(1));
    }

    #[test]
    fn solve_small() {
        let x = solve(vec![vec![q(2), q(1)], vec![q(1), q(3)]], vec![q(3), q(5)]).unwrap();
        assert_eq!(x, vec![Rational::new(4.into(), 5.into()), Rational::new(7.into(), 5.into())]);
        assert!(solve(vec![vec![q(1), q(1)], vec![q(1), q(1)]], vec![q(1), q(2)]).is_none());
    }
}
