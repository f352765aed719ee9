//! Exact rank and determinant of rational matrices by fraction-free
//! Gaussian elimination: denominators are cleared once, then Bareiss
//! one-step elimination keeps every intermediate value an integer.

use combinatorics::exact_div;
use num::{BigInt, Integer, One, Zero};

use crate::Coeff;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Elimination {
    pub rank: usize,
    /// Exact determinant for square input; zero when rank-deficient. The
    /// determinant of the empty matrix is 1.
    pub det: Coeff,
}

pub fn eliminate(matrix: &[Vec<Coeff>]) -> Elimination {
    let rows = matrix.len();
    if rows == 0 {
        return Elimination { rank: 0, det: Coeff::one() };
    }
    let cols = matrix[0].len();
    debug_assert!(matrix.iter().all(|r| r.len() == cols));

    let mut scale = BigInt::one();
    for row in matrix {
        for e in row {
            scale = scale.lcm(e.denom());
        }
    }
    let lift = Coeff::from_integer(scale.clone());
    let mut a: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| row.iter().map(|e| (e * &lift).to_integer()).collect())
        .collect();

    let mut prev = BigInt::one();
    let mut sign = 1i64;
    let mut rank = 0usize;
    let mut row = 0usize;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(p) = (row..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        if p != row {
            a.swap(p, row);
            sign = -sign;
        }
        let (done, rest) = a.split_at_mut(row + 1);
        let pivot_row = &done[row];
        for r in rest.iter_mut() {
            for c in (col + 1)..cols {
                let num = &pivot_row[col] * &r[c] - &r[col] * &pivot_row[c];
                r[c] = exact_div(num, &prev);
            }
            r[col] = BigInt::zero();
        }
        prev = a[row][col].clone();
        row += 1;
        rank += 1;
    }

    let det = if rows == cols && rank == rows {
        let mut denom = BigInt::one();
        for _ in 0..rows {
            denom *= &scale;
        }
        let numer = if sign < 0 { -prev } else { prev };
        Coeff::new(numer, denom)
    } else {
        Coeff::zero()
    };
    Elimination { rank, det }
}
