//! Cell label sets and exact dimensions.
//!
//! Closed forms throughout; the enumerators in [`crate::enumerate`] and
//! [`crate::cells`] provide the brute-force counterparts that the test
//! suites compare against.

use combinatorics::{
    bell, binomial, catalan, compositions_with_sum, count_set_partitions, double_factorial,
    exact_div, factorial, fuss_catalan, motzkin_number, num_standard_tableaux,
    parity_block_counts, parity_matching_dim, partial_matching_count, partitions_of,
    planar_even_dim, riordan_number, stirling2, stirling2_min2, triangle, BlockCount, Int,
    IntegerPartition, MinBlock, Parity, TriangleKind,
};
use num::{One, Zero};

use crate::{CellLabel, FamilyError, FamilyId, FamilySpec};

/// The complete cell label set in a fixed order.
pub fn cell_labels(spec: &FamilySpec) -> Result<Vec<CellLabel>, FamilyError> {
    let n = spec.n;
    Ok(match spec.id {
        FamilyId::Partition | FamilyId::QuasiPartitionIndex => partition_labels(0, n, 1),
        FamilyId::HalfPartition => partition_labels(0, n - 1, 1),
        FamilyId::Brauer => partition_labels(n % 2, n, 2),
        FamilyId::RookBrauer | FamilyId::Rook => partition_labels(0, n, 1),
        FamilyId::UniformBlock | FamilyId::Gr1m => size_tuple_labels(n),
        FamilyId::ParityMatching => parity_labels(n),
        FamilyId::PlanarPartition
        | FamilyId::Motzkin
        | FamilyId::PlanarQuasiPartitionIndex
        | FamilyId::PlanarRook => (0..=n).map(CellLabel::Count).collect(),
        FamilyId::TemperleyLieb => (n % 2..=n).step_by(2).map(CellLabel::Count).collect(),
        FamilyId::PlanarEven => word_labels(n, 2),
        FamilyId::PlanarRColor => word_labels(n, spec.r()),
        FamilyId::PlanarUniform => {
            let mut words = compositions_with_sum(n, n);
            words.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
            words.into_iter().map(CellLabel::Word).collect()
        }
        FamilyId::PartialTlIndex => {
            return Err(FamilyError::Unsupported(
                "partial_tl_index cells are indexed by defect-and-arc pairs, which the label \
                 grammar does not carry"
                    .into(),
            ))
        }
    })
}

/// Cell module dimension for a label of the family.
pub fn cell_dim(spec: &FamilySpec, label: &CellLabel) -> Result<Int, FamilyError> {
    ensure_label(spec, label)?;
    let n = spec.n;
    Ok(match (spec.id, label) {
        (FamilyId::Partition, CellLabel::Partition(lam)) => {
            num_standard_tableaux(lam) * marked_partition_count(n, lam.size())
        }
        (FamilyId::HalfPartition, CellLabel::Partition(lam)) => {
            let k = lam.size() + 1;
            let inner = Int::from(k) * marked_partition_count(n - 1, k)
                + marked_partition_count(n - 1, k - 1);
            num_standard_tableaux(lam) * inner
        }
        (FamilyId::QuasiPartitionIndex, CellLabel::Partition(lam)) => {
            num_standard_tableaux(lam) * quasi_half_count(n, lam.size())
        }
        (FamilyId::UniformBlock | FamilyId::Gr1m, CellLabel::SizeTuple(entries)) => {
            uniform_cell_dim(n, entries)
        }
        (FamilyId::ParityMatching, CellLabel::Pair(mu, nu)) => {
            num_standard_tableaux(mu)
                * num_standard_tableaux(nu)
                * parity_half_count(n, mu.size(), nu.size())
        }
        (FamilyId::Brauer, CellLabel::Partition(lam)) => {
            let k = lam.size();
            binomial(n, k)
                * double_factorial(n as i64 - k as i64 - 1)
                * num_standard_tableaux(lam)
        }
        (FamilyId::RookBrauer, CellLabel::Partition(lam)) => {
            let k = lam.size();
            binomial(n, k) * partial_matching_count(n - k) * num_standard_tableaux(lam)
        }
        (FamilyId::Rook, CellLabel::Partition(lam)) => {
            binomial(n, lam.size()) * num_standard_tableaux(lam)
        }
        (FamilyId::PlanarPartition, CellLabel::Count(k)) => {
            triangle(TriangleKind::Catalan, n + k, n - k).expect("k <= n")
        }
        (FamilyId::TemperleyLieb, CellLabel::Count(d)) => {
            triangle(TriangleKind::Catalan, (n + d) / 2, (n - d) / 2).expect("d <= n")
        }
        (FamilyId::Motzkin, CellLabel::Count(k)) => {
            triangle(TriangleKind::Motzkin, n, *k).expect("k <= n")
        }
        (FamilyId::PlanarQuasiPartitionIndex, CellLabel::Count(k)) => {
            triangle(TriangleKind::Riordan, n, *k).expect("k <= n")
        }
        (FamilyId::PlanarRook, CellLabel::Count(free)) => binomial(n, *free),
        (FamilyId::PlanarEven, CellLabel::Word(w)) => zone_dim(2, w, n),
        (FamilyId::PlanarRColor, CellLabel::Word(w)) => zone_dim(spec.r(), w, n),
        (FamilyId::PlanarUniform, CellLabel::Word(_)) => Int::one(),
        _ => unreachable!("label validated against the family"),
    })
}

/// Dimension of the algebra.
pub fn algebra_dim(spec: &FamilySpec) -> Int {
    let n = spec.n;
    match spec.id {
        FamilyId::Partition => bell(2 * n),
        FamilyId::HalfPartition => bell(2 * n - 1),
        FamilyId::QuasiPartitionIndex => {
            count_set_partitions(2 * n, BlockCount::All, MinBlock::Two)
        }
        FamilyId::UniformBlock | FamilyId::Gr1m => squared_cell_sum(spec),
        FamilyId::ParityMatching => parity_matching_dim(n),
        FamilyId::Brauer => double_factorial(2 * n as i64 - 1),
        FamilyId::RookBrauer => partial_matching_count(2 * n),
        FamilyId::Rook => (0..=n)
            .map(|k| binomial(n, k) * binomial(n, k) * factorial(k))
            .sum(),
        FamilyId::PlanarPartition => catalan(2 * n),
        FamilyId::TemperleyLieb => catalan(n),
        FamilyId::Motzkin => motzkin_number(2 * n),
        FamilyId::PartialTlIndex => partial_tl_dim(n),
        FamilyId::PlanarQuasiPartitionIndex => riordan_number(2 * n),
        FamilyId::PlanarRook => binomial(2 * n, n),
        FamilyId::PlanarEven => planar_even_dim(n),
        FamilyId::PlanarRColor => {
            let r = spec.r();
            let base = Int::from(2).pow(n as u32 - 1);
            if r > n {
                base
            } else if 2 * r > n {
                base + color_surplus(n - r)
            } else {
                squared_cell_sum(spec)
            }
        }
        FamilyId::PlanarUniform => Int::from(2).pow(n as u32 - 1),
    }
}

pub(crate) fn ensure_label(spec: &FamilySpec, label: &CellLabel) -> Result<(), FamilyError> {
    if cell_labels(spec)?.contains(label) {
        Ok(())
    } else {
        Err(FamilyError::UnknownLabel(format!("{label} for {spec}")))
    }
}

fn partition_labels(lo: usize, hi: usize, step: usize) -> Vec<CellLabel> {
    (lo..=hi)
        .step_by(step)
        .flat_map(|k| partitions_of(k).into_iter().map(CellLabel::Partition))
        .collect()
}

fn parity_labels(n: usize) -> Vec<CellLabel> {
    let mut out = Vec::new();
    for k1 in (n % 2..=n).step_by(2) {
        for k2 in 0..=(n - k1) / 2 {
            for mu in partitions_of(k1) {
                for nu in partitions_of(k2) {
                    out.push(CellLabel::Pair(mu.clone(), nu));
                }
            }
        }
    }
    out
}

fn size_tuple_labels(n: usize) -> Vec<CellLabel> {
    // multiplicity vectors m_k with sum k*m_k = n, then a partition of each m_k
    fn types(k: usize, left: usize, acc: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if left == 0 {
            out.push(acc.clone());
            return;
        }
        if k > left {
            return;
        }
        for m in (0..=left / k).rev() {
            if m > 0 {
                acc.push((k, m));
            }
            types(k + 1, left - k * m, acc, out);
            if m > 0 {
                acc.pop();
            }
        }
    }
    let mut shapes = Vec::new();
    types(1, n, &mut Vec::new(), &mut shapes);
    let mut out = Vec::new();
    for shape in shapes {
        let mut stack: Vec<Vec<(usize, IntegerPartition)>> = vec![Vec::new()];
        for &(k, m) in &shape {
            let mut next = Vec::new();
            for prefix in &stack {
                for lam in partitions_of(m) {
                    let mut entry = prefix.clone();
                    entry.push((k, lam));
                    next.push(entry);
                }
            }
            stack = next;
        }
        out.extend(stack.into_iter().map(CellLabel::SizeTuple));
    }
    out.sort();
    out
}

fn word_labels(n: usize, r: usize) -> Vec<CellLabel> {
    let mut out = Vec::new();
    for s in (n % r..=n).step_by(r) {
        let mut words = compositions_with_sum(s, r);
        words.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        out.extend(words.into_iter().map(CellLabel::Word));
    }
    out
}

/// Set partitions of `[n]` with `k` of the blocks marked.
fn marked_partition_count(n: usize, k: usize) -> Int {
    (k..=n).map(|j| binomial(j, k) * stirling2(n, j)).sum()
}

/// Half diagrams of the no-singleton family: `k` defect blocks of any size,
/// every free block of size at least two. Defect singletons occupy `s` of
/// the `n` vertices; the rest carry `j` marked blocks of size two or more.
fn quasi_half_count(n: usize, k: usize) -> Int {
    let mut total = Int::zero();
    for s in 0..=k.min(n) {
        let mut inner = Int::zero();
        for j in (k - s)..=(n - s) / 2 {
            inner += binomial(j, k - s) * stirling2_min2(n - s, j);
        }
        total += binomial(n, s) * inner;
    }
    total
}

fn uniform_cell_dim(n: usize, entries: &[(usize, IntegerPartition)]) -> Int {
    let mut denom = Int::one();
    let mut tableaux = Int::one();
    for (k, lam) in entries {
        // lam partitions the multiplicity of size-k blocks
        let m = lam.size();
        denom *= factorial(*k).pow(m as u32) * factorial(m);
        tableaux *= num_standard_tableaux(lam);
    }
    exact_div(factorial(n), &denom) * tableaux
}

/// Half diagrams of the even-block family with `k1` odd and `k2` even
/// defect blocks (free blocks all even).
fn parity_half_count(n: usize, k1: usize, k2: usize) -> Int {
    let mut total = Int::zero();
    for i in k1..=n {
        let odd = parity_block_counts(Parity::Odd, i, k1);
        if odd.is_zero() {
            continue;
        }
        let mut inner = Int::zero();
        for j in k2..=(n - i) / 2 {
            inner += binomial(j, k2) * parity_block_counts(Parity::Even, n - i, j);
        }
        total += binomial(n, i) * odd * inner;
    }
    total
}

/// Motzkin half diagrams with `d` defects and `p` arcs, squared and summed:
/// the balanced index set pairs a top half and a bottom half with matching
/// defect and arc counts.
fn partial_tl_dim(n: usize) -> Int {
    let mut total = Int::zero();
    for d in 0..=n {
        for p in 0..=(n - d) / 2 {
            let halves = binomial(n, 2 * p + d)
                * triangle(TriangleKind::Catalan, p + d, p).expect("p <= p + d");
            total += &halves * &halves;
        }
    }
    total
}

fn squared_cell_sum(spec: &FamilySpec) -> Int {
    cell_labels(spec)
        .expect("family exposes labels")
        .iter()
        .map(|lam| {
            let d = cell_dim(spec, lam).expect("label from the family");
            &d * &d
        })
        .sum()
}

/// `a_j` of the near-diagonal color dimension formula
/// `(9j^2 + 17j + 6) 2^{j-3}` with the `j = 0` value pinned to 1.
fn color_surplus(j: usize) -> Int {
    if j == 0 {
        return Int::one();
    }
    let poly = Int::from(9 * j * j + 17 * j + 6);
    exact_div(poly * Int::from(2).pow(j as u32), &Int::from(8))
}

/// Planar one-row partitions of `z` vertices, every block size divisible by
/// `r`: the count of fillings of a free zone.
fn planar_interior(r: usize, z: usize) -> Int {
    if z == 0 {
        Int::one()
    } else if z.is_multiple_of(r) {
        fuss_catalan(r, z / r)
    } else {
        Int::zero()
    }
}

/// `hull[m][c]` counts the ways a defect block of size-class `c + 1` can sit
/// on an interval of `m` vertices, touching both ends: a subset `D` of the
/// interval with `1, m` in `D` and `|D| ≡ c + 1 (mod r)`, weighted by planar
/// mod-`r` fillings of the gaps between consecutive chosen vertices.
fn hull_table(r: usize, m_max: usize) -> Vec<Vec<Int>> {
    let mut g = vec![vec![Int::zero(); r]; m_max + 1];
    if m_max >= 1 {
        g[1][0] = Int::one();
    }
    for j in 2..=m_max {
        for i in 1..j {
            let f = planar_interior(r, j - i - 1);
            if f.is_zero() {
                continue;
            }
            for c in 0..r {
                if g[i][c].is_zero() {
                    continue;
                }
                let add = &g[i][c] * &f;
                g[j][(c + 1) % r] += add;
            }
        }
    }
    g
}

/// Half diagrams of the planar mod-`r` family whose defect blocks spell the
/// word `w` left to right: split the row into free zones and defect hulls,
/// one hull per letter, and multiply the independent fill counts. The result
/// is symmetric in the letters of `w`.
fn zone_dim(r: usize, word: &[usize], n: usize) -> Int {
    let hull = hull_table(r, n);
    let mut dp: Vec<Int> = (0..=n).map(|j| planar_interior(r, j)).collect();
    for &c in word {
        let ci = c - 1;
        let mut with_hull = vec![Int::zero(); n + 1];
        for j in 1..=n {
            for m in 1..=j {
                if hull[m][ci].is_zero() || dp[j - m].is_zero() {
                    continue;
                }
                with_hull[j] += &dp[j - m] * &hull[m][ci];
            }
        }
        let mut next = vec![Int::zero(); n + 1];
        for j in 0..=n {
            for z in 0..=j {
                let f = planar_interior(r, z);
                if f.is_zero() || with_hull[j - z].is_zero() {
                    continue;
                }
                next[j] += &with_hull[j - z] * f;
            }
        }
        dp = next;
    }
    dp[n].clone()
}
