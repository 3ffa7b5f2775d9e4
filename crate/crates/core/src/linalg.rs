//! Exact rational Gaussian elimination: determinants and linear solving.
//! Pivoting takes the first nonzero entry in column order; exact arithmetic
//! needs no magnitude heuristics.

use num::traits::Zero;

use crate::number::Rat;

/// Determinant of a square matrix by exact elimination.
pub fn determinant(mut m: Vec<Vec<Rat>>) -> Rat {
    let n = m.len();
    debug_assert!(m.iter().all(|row| row.len() == n));
    let mut det = Rat::from_integer(1.into());
    for col in 0..n {
        let Some(pivot_row) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rat::zero();
        };
        if pivot_row != col {
            m.swap(pivot_row, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pivot;
            for c in col..n {
                let t = &factor * &m[col][c];
                m[r][c] -= t;
            }
        }
    }
    det
}

/// Solution set of A x = b: one particular solution plus a basis of the
/// kernel, or None when the system is inconsistent.
pub struct Solution {
    pub particular: Vec<Rat>,
    pub kernel: Vec<Vec<Rat>>,
}

pub fn solve(a: &[Vec<Rat>], b: &[Rat]) -> Option<Solution> {
    let rows = a.len();
    assert_eq!(rows, b.len());
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();

    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(p, row);
        let pivot = m[row][col].clone();
        for c in col..=cols {
            m[row][c] = &m[row][c] / &pivot;
        }
        for r in 0..rows {
            if r != row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..=cols {
                    let t = &factor * &m[row][c];
                    m[r][c] -= t;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    // inconsistent when a zero row has nonzero rhs
    for r in row..rows {
        if !m[r][cols].is_zero() {
            return None;
        }
    }

    let mut particular = vec![Rat::zero(); cols];
    for (i, &pc) in pivot_cols.iter().enumerate() {
        particular[pc] = m[i][cols].clone();
    }
    let mut kernel = Vec::new();
    for free in 0..cols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![Rat::zero(); cols];
        v[free] = Rat::from_integer(1.into());
        for (i, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -m[i][free].clone();
        }
        kernel.push(v);
    }
    Some(Solution { particular, kernel })
}
