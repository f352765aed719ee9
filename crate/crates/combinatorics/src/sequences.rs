//! Counting sequences: factorials, binomials, Bell/Stirling numbers (with a
//! minimum-block-size-2 variant), double factorials, Catalan and Fuss-Catalan
//! numbers, and the odd/even block-partition counts.

use num::{One, Signed, Zero};

use crate::Int;

pub fn factorial(n: usize) -> Int {
    let mut acc = Int::one();
    for i in 2..=n {
        acc *= Int::from(i);
    }
    acc
}

/// `binom(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> Int {
    if k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for i in 0..k {
        acc = acc * Int::from(n - i) / Int::from(i + 1);
    }
    acc
}

/// Exact integer division; panics if `b` does not divide `a`.
pub fn exact_div(a: Int, b: &Int) -> Int {
    let (q, r) = num::Integer::div_rem(&a, b);
    assert!(r.is_zero(), "non-exact division {a} / {b}");
    q
}

fn ipow(base: Int, exp: usize) -> Int {
    if exp == 0 {
        return Int::one();
    }
    num::pow::pow(base, exp)
}

/// Double factorial `n!!` for `n >= -1`; both `(-1)!!` and `0!!` are 1.
pub fn double_factorial(n: i64) -> Int {
    assert!(n >= -1, "double factorial undefined for n = {n}");
    let mut acc = Int::one();
    let mut i = n;
    while i > 1 {
        acc *= Int::from(i);
        i -= 2;
    }
    acc
}

/// Stirling number of the second kind `S(n, k)` via the standard recursion.
pub fn stirling2(n: usize, k: usize) -> Int {
    if k > n {
        return Int::zero();
    }
    // row DP: s[j] = S(i, j)
    let mut row = vec![Int::zero(); k + 1];
    row[0] = Int::one();
    for _ in 1..=n {
        for j in (1..=k).rev() {
            let prev = row[j - 1].clone();
            row[j] = &row[j] * Int::from(j) + prev;
        }
        row[0] = Int::zero();
    }
    row[k].clone()
}

/// Alternating-sum closed form for `S(n, k)`; oracle for [`stirling2`].
pub fn stirling2_closed(n: usize, k: usize) -> Int {
    if k > n {
        return Int::zero();
    }
    let mut sum = Int::zero();
    for j in 0..=k {
        let term = binomial(k, j) * ipow(Int::from(k - j), n);
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    exact_div(sum, &factorial(k))
}

/// Partitions of `[n]` into exactly `k` blocks, every block of size >= 2
/// (associated Stirling numbers of the second kind).
pub fn stirling2_min2(n: usize, k: usize) -> Int {
    // b(n, k) = k b(n-1, k) + (n-1) b(n-2, k-1)
    if k > n / 2 {
        return if n == 0 && k == 0 { Int::one() } else { Int::zero() };
    }
    let mut table = vec![vec![Int::zero(); k + 1]; n + 1];
    table[0][0] = Int::one();
    if n >= 1 {
        table[1][0] = Int::zero();
    }
    for i in 2..=n {
        for j in 1..=k.min(i / 2) {
            let a = &table[i - 1][j] * Int::from(j);
            let b = &table[i - 2][j - 1] * Int::from(i - 1);
            table[i][j] = a + b;
        }
    }
    if n == 0 && k == 0 {
        Int::one()
    } else if k == 0 {
        Int::zero()
    } else {
        table[n][k].clone()
    }
}

pub fn bell(n: usize) -> Int {
    let mut sum = Int::zero();
    for k in 0..=n {
        sum += stirling2(n, k);
    }
    sum
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockCount {
    Exactly(usize),
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinBlock {
    One,
    Two,
}

/// Count set partitions of `[n]` with the given number of blocks and minimum
/// block size. `(n, All, One)` is the Bell number `B_n`.
pub fn count_set_partitions(n: usize, k: BlockCount, min_block: MinBlock) -> Int {
    match (k, min_block) {
        (BlockCount::Exactly(k), MinBlock::One) => stirling2(n, k),
        (BlockCount::Exactly(k), MinBlock::Two) => stirling2_min2(n, k),
        (BlockCount::All, MinBlock::One) => bell(n),
        (BlockCount::All, MinBlock::Two) => {
            let mut sum = Int::zero();
            for j in 0..=n / 2 {
                sum += stirling2_min2(n, j);
            }
            sum
        }
    }
}

pub fn catalan(n: usize) -> Int {
    exact_div(binomial(2 * n, n), &Int::from(n + 1))
}

/// Fuss-Catalan number `C_n^{(r)} = binom((r+1)n, n) / (rn + 1)`.
pub fn fuss_catalan(r: usize, n: usize) -> Int {
    exact_div(binomial((r + 1) * n, n), &Int::from(r * n + 1))
}

pub fn motzkin_number(n: usize) -> Int {
    crate::triangles::triangle(crate::TriangleKind::Motzkin, n, 0).unwrap()
}

/// Flat Riordan sequence read off the zero-defect column of the Riordan
/// triangle: 1, 0, 1, 1, 3, 6, 15, ...
pub fn riordan_number(n: usize) -> Int {
    crate::triangles::triangle(crate::TriangleKind::Riordan, n, 0).unwrap()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

/// Number of set partitions of `[n]` into exactly `k` blocks, all of odd
/// (resp. even) size. Closed form via the exponential generating functions
/// `(sinh x)^k / k!` and `(cosh x - 1)^k / k!`.
pub fn parity_block_counts(kind: Parity, n: usize, k: usize) -> Int {
    match kind {
        Parity::Odd => {
            if k > n || (n + k) % 2 == 1 {
                return Int::zero();
            }
            if n == 0 {
                return Int::one();
            }
            if k == 0 {
                return Int::zero();
            }
            let mut sum = Int::zero();
            for j in 0..=k {
                let base = Int::from(k as i64 - 2 * j as i64);
                let term = binomial(k, j) * ipow(base, n);
                if j % 2 == 0 {
                    sum += term;
                } else {
                    sum -= term;
                }
            }
            exact_div(sum, &(ipow(Int::from(2), k) * factorial(k)))
        }
        Parity::Even => {
            if n % 2 == 1 || 2 * k > n {
                return if n == 0 && k == 0 { Int::one() } else { Int::zero() };
            }
            if n == 0 {
                return if k == 0 { Int::one() } else { Int::zero() };
            }
            if k == 0 {
                return Int::zero();
            }
            let mut sum = Int::zero();
            for j in 1..=k {
                let term = binomial(2 * k, k - j) * ipow(Int::from(j), n);
                if (k - j).is_multiple_of(2) {
                    sum += term;
                } else {
                    sum -= term;
                }
            }
            let denom = ipow(Int::from(2), k) * factorial(k);
            let val = exact_div(Int::from(2) * sum, &denom);
            assert!(!val.is_negative());
            val
        }
    }
}

/// Recursive route to the same counts; oracle for [`parity_block_counts`].
///
/// `O(n,k) = O(n-2,k-2) + k^2 O(n-2,k)` and
/// `E(2m,k) = (2k-1) E(2m-2,k-1) + k^2 E(2m-2,k)`.
pub fn parity_block_counts_rec(kind: Parity, n: usize, k: usize) -> Int {
    fn odd(n: i64, k: i64) -> Int {
        if k < 0 || k > n {
            return Int::zero();
        }
        match (n, k) {
            (0, 0) => Int::one(),
            (0, _) | (1, 0) => Int::zero(),
            (1, 1) => Int::one(),
            _ => odd(n - 2, k - 2) + Int::from(k * k) * odd(n - 2, k),
        }
    }
    fn even(n: i64, k: i64) -> Int {
        if n % 2 == 1 || k < 0 || 2 * k > n {
            return Int::zero();
        }
        match (n, k) {
            (0, 0) => Int::one(),
            (0, _) => Int::zero(),
            _ if k == 0 => Int::zero(),
            _ => Int::from(2 * k - 1) * even(n - 2, k - 1) + Int::from(k * k) * even(n - 2, k),
        }
    }
    match kind {
        Parity::Odd => odd(n as i64, k as i64),
        Parity::Even => even(n as i64, k as i64),
    }
}

/// Dimension of the parity matching algebra on `n` strands: the number of
/// set partitions of `[2n]` into even blocks.
pub fn parity_matching_dim(n: usize) -> Int {
    let mut sum = Int::zero();
    for j in 0..=n {
        sum += parity_block_counts(Parity::Even, 2 * n, j);
    }
    sum
}

/// Dimension of the planar even algebra: `binom(3n, n) / (2n + 1)`.
pub fn planar_even_dim(n: usize) -> Int {
    exact_div(binomial(3 * n, n), &Int::from(2 * n + 1))
}

/// Number of planar set partitions of a row of `m` points with all blocks of
/// even size; zero for odd `m`, one for `m = 0`.
pub fn planar_even_interior(m: usize) -> Int {
    if m % 2 == 1 {
        Int::zero()
    } else {
        planar_even_dim(m / 2)
    }
}

/// Number of partial matchings of `[m]` (set partitions with all blocks of
/// size at most 2); equals the number of involutions of `[m]`.
pub fn partial_matching_count(m: usize) -> Int {
    let mut sum = Int::zero();
    for j in 0..=m / 2 {
        sum += binomial(m, 2 * j) * double_factorial(2 * j as i64 - 1);
    }
    sum
}
