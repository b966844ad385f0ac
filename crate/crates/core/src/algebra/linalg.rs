//! Dense exact linear algebra over the rationals.

use num_traits::{One, Zero};

use super::Rational;

pub type Matrix = Vec<Vec<Rational>>;

pub fn from_ints(rows: &[Vec<i64>]) -> Matrix {
    rows.iter()
        .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
        .collect()
}

pub fn transpose(a: &Matrix, ncols: usize) -> Matrix {
    (0..ncols).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(a: &mut Matrix, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = a[row][col].recip();
        for x in a[row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..a.len() {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot = a[row].clone();
                for (x, p) in a[r].iter_mut().zip(&pivot).take(ncols) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == a.len() {
            break;
        }
    }
    pivots
}

pub fn rank(a: &Matrix, ncols: usize) -> usize {
    rref(&mut a.clone(), ncols).len()
}

/// A basis of `{x : A x = 0}`.
pub fn nullspace(a: &Matrix, ncols: usize) -> Vec<Vec<Rational>> {
    let mut m = a.clone();
    let pivots = rref(&mut m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[r][f].clone();
            }
            v
        })
        .collect()
}

/// The unique solution of the square or overdetermined system `A x = b`,
/// when it exists and is unique.
pub fn solve_unique(a: &Matrix, b: &[Rational], ncols: usize) -> Option<Vec<Rational>> {
    let mut aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(r, x)| {
            let mut r = r.clone();
            r.push(x.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug, ncols + 1);
    if pivots.contains(&ncols) || pivots.len() != ncols {
        return None;
    }
    Some((0..ncols).map(|i| aug[i][ncols].clone()).collect())
}

pub fn determinant(a: &Matrix) -> Rational {
    let n = a.len();
    let mut m = a.clone();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        det *= &m[col][col];
        let inv = m[col][col].recip();
        for r in col + 1..n {
            if !m[r][col].is_zero() {
                let f = &m[r][col] * &inv;
                let pivot = m[col].clone();
                for (x, p) in m[r].iter_mut().zip(&pivot).skip(col) {
                    *x -= &f * p;
                }
            }
        }
    }
    det
}
