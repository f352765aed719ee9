use std::collections::BTreeMap;

use combinatorics::{all_perms, Int, Perm};
use num::Zero;

use crate::tableau::relabel;
use crate::{Coeff, SpechtError, StandardTableau};

/// Row-equivalence class of a filling, represented with each row sorted.
pub type Tabloid = Vec<Vec<usize>>;

/// Signed tabloid expansion of the polytabloid of an arbitrary injective
/// filling: the alternating sum over the column stabilizer.
pub fn polytabloid_expansion(rows: &[Vec<usize>]) -> BTreeMap<Tabloid, Int> {
    let cols = rows.first().map_or(0, |r| r.len());
    let columns: Vec<Vec<usize>> = (0..cols)
        .map(|c| rows.iter().filter(|r| r.len() > c).map(|r| r[c]).collect())
        .collect();
    let mut out = BTreeMap::new();
    let mut work = rows.to_vec();
    expand(&columns, 0, 1, &mut work, &mut out);
    out.retain(|_, c| !c.is_zero());
    out
}

fn expand(
    columns: &[Vec<usize>],
    c: usize,
    sign: i64,
    work: &mut Vec<Vec<usize>>,
    out: &mut BTreeMap<Tabloid, Int>,
) {
    if c == columns.len() {
        let mut tabloid = work.clone();
        for row in &mut tabloid {
            row.sort_unstable();
        }
        *out.entry(tabloid).or_insert_with(Int::zero) += sign;
        return;
    }
    let m = columns[c].len();
    for pi in all_perms(m) {
        for i in 0..m {
            work[i][c] = columns[c][pi.apply(i)];
        }
        expand(columns, c + 1, sign * pi.sign(), work, out);
    }
    for (i, &v) in columns[c].iter().enumerate() {
        work[i][c] = v;
    }
}

/// The bilinear form `<e_T, sigma . e_U>` under the tabloid inner product
/// (tabloids are orthonormal), normalized by the column stabilizer order so
/// that the one-column module evaluates to exactly `sign(sigma)` and the
/// one-row module to `1`.
pub fn specht_form(
    t: &StandardTableau,
    sigma: &Perm,
    u: &StandardTableau,
) -> Result<Coeff, SpechtError> {
    if t.shape() != u.shape() {
        return Err(SpechtError::Shape(format!(
            "form of shapes {} and {}",
            t.shape(),
            u.shape()
        )));
    }
    if sigma.degree() != t.size() {
        return Err(SpechtError::Degree(format!(
            "permutation of degree {} on {} cells",
            sigma.degree(),
            t.size()
        )));
    }
    let et = polytabloid_expansion(t.rows());
    let eu = polytabloid_expansion(&relabel(u.rows(), sigma));
    let mut acc = Int::zero();
    for (tabloid, c) in &et {
        if let Some(d) = eu.get(tabloid) {
            acc += c * d;
        }
    }
    let stabilizer: Int = t
        .shape()
        .conjugate()
        .into_iter()
        .map(combinatorics::factorial)
        .product();
    Ok(Coeff::new(acc, stabilizer))
}
