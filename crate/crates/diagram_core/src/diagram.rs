use crate::error::DiagramError;
use std::fmt;

/// A set partition of the `2n` vertices `{1..n, 1'..n'}` in canonical form:
/// slots sorted inside each block, blocks sorted by least slot. Since top
/// slots precede bottom slots, this puts blocks with a top vertex first
/// (ordered by least top vertex) and purely-bottom blocks last (ordered by
/// least bottom vertex).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl Diagram {
    /// Builds from blocks of internal slots (`0..n` top, `n..2n` bottom),
    /// canonicalizing the order.
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self, DiagramError> {
        let mut seen = vec![false; 2 * n];
        for block in &mut blocks {
            if block.is_empty() {
                return Err(DiagramError::Invalid("empty block".into()));
            }
            block.sort_unstable();
            for &s in block.iter() {
                if s >= 2 * n {
                    return Err(DiagramError::Invalid(format!("slot {s} out of range")));
                }
                if seen[s] {
                    return Err(DiagramError::Invalid(format!("slot {s} repeated")));
                }
                seen[s] = true;
            }
        }
        if seen.iter().any(|&b| !b) {
            return Err(DiagramError::Invalid("blocks do not cover all vertices".into()));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(Diagram { n, blocks })
    }

    /// Builds from user-facing signed blocks: `k` is the top vertex `k`,
    /// `-k` the bottom vertex `k'`; `n` is inferred from the largest label.
    pub fn from_signed(blocks: &[Vec<i64>]) -> Result<Self, DiagramError> {
        let n = blocks
            .iter()
            .flatten()
            .map(|&v| v.unsigned_abs() as usize)
            .max()
            .unwrap_or(0);
        let converted = blocks
            .iter()
            .map(|block| {
                block
                    .iter()
                    .map(|&v| {
                        if v == 0 || v.unsigned_abs() as usize > n {
                            Err(DiagramError::Invalid(format!("bad vertex label {v}")))
                        } else if v > 0 {
                            Ok(v as usize - 1)
                        } else {
                            Ok(n + (-v) as usize - 1)
                        }
                    })
                    .collect::<Result<Vec<usize>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Diagram::new(n, converted)
    }

    /// Parses the textual format, e.g. `[[1,-2],[2,-1]]`.
    pub fn parse(text: &str) -> Result<Self, DiagramError> {
        let blocks: Vec<Vec<i64>> = serde_json::from_str(text)
            .map_err(|e| DiagramError::Parse(format!("{e}")))?;
        Diagram::from_signed(&blocks)
    }

    pub fn identity(n: usize) -> Self {
        let blocks = (0..n).map(|j| vec![j, n + j]).collect();
        Diagram { n, blocks }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Index of the block containing each slot.
    pub fn block_index(&self) -> Vec<usize> {
        let mut idx = vec![0; 2 * self.n];
        for (i, block) in self.blocks.iter().enumerate() {
            for &s in block {
                idx[s] = i;
            }
        }
        idx
    }

    /// Number of top vertices in the block.
    pub fn top_count(&self, block: usize) -> usize {
        self.blocks[block].iter().filter(|&&s| s < self.n).count()
    }

    /// Number of bottom vertices in the block.
    pub fn bottom_count(&self, block: usize) -> usize {
        self.blocks[block].len() - self.top_count(block)
    }

    /// Number of blocks meeting both rows.
    pub fn propagating_count(&self) -> usize {
        let n = self.n;
        self.blocks
            .iter()
            .filter(|b| b[0] < n && b[b.len() - 1] >= n)
            .count()
    }

    /// Swaps the rows (`i <-> i'`), the algebra anti-involution.
    pub fn involute(&self) -> Self {
        let n = self.n;
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&s| if s < n { s + n } else { s - n }).collect())
            .collect();
        Diagram::new(n, blocks).expect("involution preserves validity")
    }

    /// True when the diagram can be drawn in the rectangle without crossing
    /// strands; equivalently the blocks are noncrossing in the cyclic order
    /// `1, ..., n, n', ..., 1'`.
    pub fn is_planar(&self) -> bool {
        let n = self.n;
        let pos = |s: usize| if s < n { s } else { 3 * n - 1 - s };
        let mut block_at = vec![usize::MAX; 2 * n];
        for (i, block) in self.blocks.iter().enumerate() {
            for &s in block {
                block_at[pos(s)] = i;
            }
        }
        noncrossing_sweep(&block_at)
    }

    pub fn signed_blocks(&self) -> Vec<Vec<i64>> {
        let n = self.n as i64;
        self.blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|&s| {
                        if s < self.n {
                            s as i64 + 1
                        } else {
                            -(s as i64 - n + 1)
                        }
                    })
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = serde_json::to_string(&self.signed_blocks()).map_err(|_| fmt::Error)?;
        f.write_str(&text)
    }
}

/// Stack test for noncrossing block structures: scanning positions left to
/// right, a revisited block must be the most recently opened unclosed one.
pub(crate) fn noncrossing_sweep(block_at: &[usize]) -> bool {
    let m = block_at.len();
    let mut first = vec![usize::MAX; m];
    let mut last = vec![0usize; m];
    for (p, &b) in block_at.iter().enumerate() {
        if b == usize::MAX {
            continue;
        }
        if first[b] == usize::MAX {
            first[b] = p;
        }
        last[b] = p;
    }
    let mut stack: Vec<usize> = Vec::new();
    for (p, &b) in block_at.iter().enumerate() {
        if b == usize::MAX {
            continue;
        }
        if first[b] == p {
            stack.push(b);
        } else if stack.last() != Some(&b) {
            return false;
        }
        if last[b] == p {
            stack.pop();
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_display_roundtrip() {
        let d = Diagram::parse("[[1,-2],[2,-1]]").unwrap();
        assert_eq!(d.n(), 2);
        assert_eq!(d.to_string(), "[[1,-2],[2,-1]]");
        let e = Diagram::parse("[[2,-1],[1,-2]]").unwrap();
        assert_eq!(d, e);
    }

    #[test]
    fn canonical_block_order() {
        let d = Diagram::parse("[[-1,-3,-4],[2,3,5],[1,-2,-5,-6],[6,-8],[4],[8],[7],[-7]]")
            .unwrap();
        assert_eq!(
            d.to_string(),
            "[[1,-2,-5,-6],[2,3,5],[4],[6,-8],[7],[8],[-1,-3,-4],[-7]]"
        );
        assert_eq!(d.propagating_count(), 2);
    }

    #[test]
    fn invalid_inputs_rejected() {
        assert!(Diagram::parse("[[1,2]]").is_err());
        assert!(Diagram::parse("[[1,-1],[1,-2]]").is_err());
        assert!(Diagram::parse("[[0]]").is_err());
        assert!(Diagram::parse("[[1,").is_err());
    }

    #[test]
    fn empty_diagram() {
        let d = Diagram::parse("[]").unwrap();
        assert_eq!(d.n(), 0);
        assert_eq!(d, Diagram::identity(0));
        assert_eq!(d.to_string(), "[]");
    }

    #[test]
    fn involute_examples() {
        let sym = Diagram::parse("[[1,-2],[2,-1]]").unwrap();
        assert_eq!(sym.involute(), sym);
        let d = Diagram::parse("[[1,-1,-2],[2]]").unwrap();
        assert_eq!(d.involute().to_string(), "[[1,2,-1],[-2]]");
        assert_eq!(d.involute().involute(), d);
        let id = Diagram::identity(5);
        assert_eq!(id.involute(), id);
    }

    #[test]
    fn planarity_examples() {
        assert!(Diagram::identity(4).is_planar());
        assert!(!Diagram::parse("[[1,-2],[2,-1]]").unwrap().is_planar());
        assert!(Diagram::parse("[[1,4],[2,3],[-1,-2],[-3,-4]]").unwrap().is_planar());
        assert!(Diagram::parse("[[1,-1],[2,-2],[3,-3]]").unwrap().is_planar());
        // a cap nested under a propagating strand
        assert!(Diagram::parse("[[1,-3],[2,3],[-1,-2]]").unwrap().is_planar());
        assert!(!Diagram::parse("[[1,3],[2,-2],[-1,-3]]").unwrap().is_planar());
    }
}
