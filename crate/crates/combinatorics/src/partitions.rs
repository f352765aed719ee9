//! Integer partitions, standard-tableau counts via hook lengths, and
//! compositions.

use std::fmt;

use crate::{exact_div, factorial, DomainError, Int};

/// Weakly decreasing sequence of positive parts; the empty partition is
/// allowed and denotes the unique partition of 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntegerPartition {
    parts: Vec<usize>,
}

impl IntegerPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self, DomainError> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(DomainError(format!("parts not weakly decreasing: {parts:?}")));
            }
        }
        if parts.contains(&0) {
            return Err(DomainError(format!("zero part in partition: {parts:?}")));
        }
        Ok(IntegerPartition { parts })
    }

    pub fn empty() -> Self {
        IntegerPartition { parts: Vec::new() }
    }

    pub fn single_row(k: usize) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            IntegerPartition { parts: vec![k] }
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Column lengths (the conjugate partition).
    pub fn conjugate(&self) -> Vec<usize> {
        let cols = self.parts.first().copied().unwrap_or(0);
        (0..cols)
            .map(|j| self.parts.iter().filter(|&&p| p > j).count())
            .collect()
    }
}

impl fmt::Display for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// All partitions of `k` in reverse-lexicographic order, `[k]` first.
pub fn partitions_of(k: usize) -> Vec<IntegerPartition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<IntegerPartition>) {
        if remaining == 0 {
            out.push(IntegerPartition { parts: current.clone() });
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            current.push(p);
            rec(remaining - p, p, current, out);
            current.pop();
        }
    }
    rec(k, k.max(1), &mut current, &mut out);
    out
}

/// Number of standard Young tableaux of shape `lambda` via the hook length
/// formula.
pub fn num_standard_tableaux(lambda: &IntegerPartition) -> Int {
    let k = lambda.size();
    if k == 0 {
        return Int::from(1);
    }
    let cols = lambda.conjugate();
    let mut denom = Int::from(1);
    for (i, &row) in lambda.parts().iter().enumerate() {
        for (j, &col) in cols.iter().enumerate().take(row) {
            let hook = (row - 1 - j) + (col - 1 - i) + 1;
            denom *= Int::from(hook);
        }
    }
    exact_div(factorial(k), &denom)
}

/// All compositions of `n` (ordered sequences of positive parts); `n = 0`
/// yields the single empty composition.
pub fn compositions_of(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        for p in 1..=remaining {
            current.push(p);
            rec(remaining - p, current, out);
            current.pop();
        }
    }
    rec(n, &mut current, &mut out);
    out
}

/// Compositions with sum `s` and every part in `1..=max_part`.
pub fn compositions_with_sum(s: usize, max_part: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        for p in 1..=remaining.min(max_part) {
            current.push(p);
            rec(remaining - p, max_part, current, out);
            current.pop();
        }
    }
    rec(s, max_part, &mut current, &mut out);
    out
}
