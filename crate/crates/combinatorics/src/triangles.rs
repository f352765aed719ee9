//! The three defect-count triangles: Catalan (ballot numbers), Motzkin and
//! Riordan. Each entry counts half diagrams of the matching planar family
//! with a given number of defects; squared row sums give algebra dimensions.

use num::{One, Zero};

use crate::{binomial, DomainError, Int};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangleKind {
    Catalan,
    Motzkin,
    Riordan,
}

/// Triangle entry for `0 <= k <= n`; `k > n` is a domain error.
pub fn triangle(kind: TriangleKind, n: usize, k: usize) -> Result<Int, DomainError> {
    if k > n {
        return Err(DomainError(format!("triangle entry ({n}, {k}) has k > n")));
    }
    Ok(match kind {
        TriangleKind::Catalan => catalan_entry(n, k),
        TriangleKind::Motzkin => motzkin_row(n)[k].clone(),
        TriangleKind::Riordan => riordan_row(n)[k].clone(),
    })
}

/// `C_{n,k} = binom(n+k, k) - binom(n+k, k-1)` (ballot numbers).
fn catalan_entry(n: usize, k: usize) -> Int {
    if k == 0 {
        return Int::one();
    }
    binomial(n + k, k) - binomial(n + k, k - 1)
}

/// Recursive route `C_{n,k} = C_{n,k-1} + C_{n-1,k}`; oracle for the closed
/// form above.
pub fn catalan_entry_rec(n: usize, k: usize) -> Int {
    if k > n {
        return Int::zero();
    }
    if k == 0 {
        return Int::one();
    }
    catalan_entry_rec(n, k - 1) + catalan_entry_rec(n - 1, k)
}

/// `M_{n,k} = M_{n-1,k-1} + M_{n-1,k} + M_{n-1,k+1}` with `M_{0,0} = 1`.
fn motzkin_row(n: usize) -> Vec<Int> {
    let mut row = vec![Int::one()];
    for m in 1..=n {
        let at = |j: isize| -> Int {
            if j < 0 || j as usize >= row.len() {
                Int::zero()
            } else {
                row[j as usize].clone()
            }
        };
        let mut next = Vec::with_capacity(m + 1);
        for k in 0..=m {
            let k = k as isize;
            next.push(at(k - 1) + at(k) + at(k + 1));
        }
        row = next;
    }
    row
}

/// Riordan triangle: `R_{n,k} = R_{n-1,k-1} + R_{n-1,k} + R_{n-1,k+1}` for
/// `k >= 1` and `R_{n,0} = R_{n-1,1}`, seeded with `R_{1,0} = 0, R_{1,1} = 1`.
fn riordan_row(n: usize) -> Vec<Int> {
    if n == 0 {
        return vec![Int::one()];
    }
    let mut row = vec![Int::zero(), Int::one()];
    for m in 2..=n {
        let at = |j: isize| -> Int {
            if j < 0 || j as usize >= row.len() {
                Int::zero()
            } else {
                row[j as usize].clone()
            }
        };
        let mut next = Vec::with_capacity(m + 1);
        next.push(at(1));
        for k in 1..=m {
            let k = k as isize;
            next.push(at(k - 1) + at(k) + at(k + 1));
        }
        row = next;
    }
    row
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::TriangleKind::*;

    fn t(kind: TriangleKind, n: usize, k: usize) -> Int {
        triangle(kind, n, k).unwrap()
    }

    #[test]
    fn riordan_pinned_entries() {
        assert_eq!(t(Riordan, 1, 0), Int::zero());
        for n in 1..=8 {
            assert_eq!(t(Riordan, n, n), Int::one());
        }
        assert_eq!(t(Riordan, 3, 1), Int::from(3));
    }

    #[test]
    fn motzkin_column_zero_is_motzkin_sequence() {
        let expect = [1i64, 1, 2, 4, 9, 21, 51, 127, 323];
        for (n, &m) in expect.iter().enumerate() {
            assert_eq!(t(Motzkin, n, 0), Int::from(m));
        }
    }

    #[test]
    fn catalan_closed_matches_recursion() {
        for n in 0..=8 {
            for k in 0..=n {
                assert_eq!(t(Catalan, n, k), catalan_entry_rec(n, k));
            }
        }
    }

    #[test]
    fn out_of_range_is_domain_error() {
        assert!(triangle(Catalan, 2, 3).is_err());
    }
}
