//! Gaussian elimination over the rationals.

use crate::rational::Rational;

pub type Matrix = Vec<Vec<Rational>>;

/// Result of solving `A x = b` exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<Rational>),
    /// Columns of `A` are dependent; `rank` < number of unknowns.
    Singular {
        rank: usize,
    },
    /// No solution; `row` is the first original equation that cannot hold.
    Inconsistent {
        row: usize,
    },
}

struct Echelon {
    rows: Matrix,
    /// original row index of each reduced row
    origin: Vec<usize>,
    pivots: Vec<usize>,
}

fn echelon(mut rows: Matrix, pivot_cols: usize) -> Echelon {
    let mut origin: Vec<usize> = (0..rows.len()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..pivot_cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        origin.swap(r, p);
        let inv = rows[r][col].recip().expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i == r || rows[i][col].is_zero() {
                continue;
            }
            let factor = rows[i][col].clone();
            for j in 0..rows[i].len() {
                let delta = &factor * &rows[r][j];
                rows[i][j] -= &delta;
            }
        }
        pivots.push(col);
        r += 1;
    }
    Echelon { rows, origin, pivots }
}

pub fn rank(m: &[Vec<Rational>]) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    echelon(m.to_vec(), cols).pivots.len()
}

pub fn determinant(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "determinant of a non-square matrix");
    let mut a = m.to_vec();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&i| !a[i][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        det *= &a[col][col];
        let inv = a[col][col].recip().expect("nonzero pivot");
        let (top, rest) = a.split_at_mut(col + 1);
        let pivot = &top[col];
        for row in rest.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] * &inv;
            for (x, p) in row[col..].iter_mut().zip(&pivot[col..]) {
                let delta = &factor * p;
                *x -= &delta;
            }
        }
    }
    det
}

pub fn transpose(m: &[Vec<Rational>]) -> Matrix {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).map(|j| m.iter().map(|row| row[j].clone()).collect()).collect()
}

/// Solve `a x = b` for an `m × n` system with `m ≥ n` allowed. Extra
/// equations are checked for consistency rather than fitted.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Solution {
    assert_eq!(a.len(), b.len(), "row count mismatch");
    let n = a.first().map_or(0, Vec::len);
    let augmented: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let e = echelon(augmented, n);
    let rank = e.pivots.len();
    // Rows past the pivots have all-zero coefficients; a nonzero right-hand
    // side there is a contradiction.
    let bad = (rank..e.rows.len()).filter(|&i| !e.rows[i][n].is_zero()).map(|i| e.origin[i]).min();
    if let Some(row) = bad {
        return Solution::Inconsistent { row };
    }
    if rank < n {
        return Solution::Singular { rank };
    }
    Solution::Unique((0..n).map(|i| e.rows[i][n].clone()).collect())
}
