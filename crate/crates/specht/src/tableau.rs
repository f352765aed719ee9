use std::fmt;

use combinatorics::{IntegerPartition, Perm};

use crate::SpechtError;

/// Standard filling of a Young diagram: entries `1..=k` each used once, rows
/// and columns strictly increasing. The derived order compares row-reading
/// words, which is the order used for every basis listing.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, SpechtError> {
        for w in rows.windows(2) {
            if w[0].len() < w[1].len() {
                return Err(SpechtError::Shape(format!(
                    "row lengths not weakly decreasing: {rows:?}"
                )));
            }
        }
        if rows.iter().any(|r| r.is_empty()) {
            return Err(SpechtError::Shape(format!("empty row in {rows:?}")));
        }
        let k: usize = rows.iter().map(|r| r.len()).sum();
        let mut seen = vec![false; k];
        for row in &rows {
            for &v in row {
                if v == 0 || v > k || seen[v - 1] {
                    return Err(SpechtError::Shape(format!(
                        "entries of {rows:?} are not a bijection onto 1..={k}"
                    )));
                }
                seen[v - 1] = true;
            }
        }
        for row in &rows {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(SpechtError::Shape(format!("row not increasing in {rows:?}")));
            }
        }
        for (r, row) in rows.iter().enumerate().skip(1) {
            for (c, &v) in row.iter().enumerate() {
                if rows[r - 1][c] >= v {
                    return Err(SpechtError::Shape(format!(
                        "column not increasing in {rows:?}"
                    )));
                }
            }
        }
        Ok(StandardTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> IntegerPartition {
        IntegerPartition::new(self.rows.iter().map(|r| r.len()).collect())
            .expect("tableau shape is a partition")
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn row_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// All standard tableaux of the given shape, sorted by row-reading word.
pub fn standard_tableaux(shape: &IntegerPartition) -> Vec<StandardTableau> {
    let parts = shape.parts();
    let k = shape.size();
    let mut rows: Vec<Vec<usize>> = parts.iter().map(|&p| Vec::with_capacity(p)).collect();
    let mut out = Vec::new();
    fill(parts, k, 1, &mut rows, &mut out);
    out.sort();
    out
}

fn fill(
    parts: &[usize],
    k: usize,
    next: usize,
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<StandardTableau>,
) {
    if next > k {
        out.push(StandardTableau { rows: rows.clone() });
        return;
    }
    for r in 0..parts.len() {
        let filled = rows[r].len();
        if filled < parts[r] && (r == 0 || rows[r - 1].len() > filled) {
            rows[r].push(next);
            fill(parts, k, next + 1, rows, out);
            rows[r].pop();
        }
    }
}

/// Entrywise relabelling `v -> sigma(v)` (1-based entries, 0-based `Perm`).
pub(crate) fn relabel(rows: &[Vec<usize>], sigma: &Perm) -> Vec<Vec<usize>> {
    rows.iter()
        .map(|row| row.iter().map(|&v| sigma.apply(v - 1) + 1).collect())
        .collect()
}
