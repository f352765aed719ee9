use crate::diagram::noncrossing_sweep;
use crate::error::DiagramError;
use std::fmt;

/// A set partition of one row of `n` vertices with a chosen subset of blocks
/// marked as defects (the ends of propagating strands). Canonical form:
/// vertices sorted inside blocks, blocks sorted by least vertex. Vertices are
/// `0`-based internally and printed `1`-based with a `*` suffix on defect
/// blocks, e.g. `[[1,2,4]*,[3,5,6]*,[7],[8]*]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfDiagram {
    n: usize,
    blocks: Vec<Vec<usize>>,
    defect: Vec<bool>,
}

impl HalfDiagram {
    pub fn new(
        n: usize,
        blocks: Vec<Vec<usize>>,
        defect: Vec<bool>,
    ) -> Result<Self, DiagramError> {
        if blocks.len() != defect.len() {
            return Err(DiagramError::Invalid("defect flags do not match blocks".into()));
        }
        let mut seen = vec![false; n];
        let mut paired: Vec<(Vec<usize>, bool)> = blocks.into_iter().zip(defect).collect();
        for (block, _) in &mut paired {
            if block.is_empty() {
                return Err(DiagramError::Invalid("empty block".into()));
            }
            block.sort_unstable();
            for &v in block.iter() {
                if v >= n {
                    return Err(DiagramError::Invalid(format!("vertex {v} out of range")));
                }
                if seen[v] {
                    return Err(DiagramError::Invalid(format!("vertex {v} repeated")));
                }
                seen[v] = true;
            }
        }
        if seen.iter().any(|&b| !b) {
            return Err(DiagramError::Invalid("blocks do not cover all vertices".into()));
        }
        paired.sort_unstable_by_key(|(b, _)| b[0]);
        let (blocks, defect) = paired.into_iter().unzip();
        Ok(HalfDiagram { n, blocks, defect })
    }

    /// Parses the textual format, e.g. `[[1,2]*,[3]]`.
    pub fn parse(text: &str) -> Result<Self, DiagramError> {
        let body = text.trim();
        let inner = body
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| DiagramError::Parse("expected [...]".into()))?;
        let mut blocks = Vec::new();
        let mut defect = Vec::new();
        let mut rest = inner.trim();
        let mut max = 0usize;
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('[')
                .ok_or_else(|| DiagramError::Parse(format!("expected block at {rest:?}")))?;
            let close = open
                .find(']')
                .ok_or_else(|| DiagramError::Parse("unterminated block".into()))?;
            let block = open[..close]
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| DiagramError::Parse(format!("bad vertex {t:?}")))
                })
                .collect::<Result<Vec<usize>, _>>()?;
            rest = open[close + 1..].trim_start();
            let is_defect = if let Some(r) = rest.strip_prefix('*') {
                rest = r.trim_start();
                true
            } else {
                false
            };
            if let Some(r) = rest.strip_prefix(',') {
                rest = r.trim_start();
            } else if !rest.is_empty() {
                return Err(DiagramError::Parse(format!("unexpected {rest:?}")));
            }
            for &v in &block {
                if v == 0 {
                    return Err(DiagramError::Parse("vertices are 1-based".into()));
                }
                max = max.max(v);
            }
            blocks.push(block.iter().map(|&v| v - 1).collect());
            defect.push(is_defect);
        }
        HalfDiagram::new(max, blocks, defect)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn is_defect(&self, block: usize) -> bool {
        self.defect[block]
    }

    pub fn defect_count(&self) -> usize {
        self.defect.iter().filter(|&&d| d).count()
    }

    /// Indices of the defect blocks, in canonical (least-vertex) order. The
    /// `i`-th entry is defect slot `i` of the cell module.
    pub fn defect_blocks(&self) -> Vec<usize> {
        (0..self.blocks.len()).filter(|&i| self.defect[i]).collect()
    }

    /// Sizes of the defect blocks in slot order.
    pub fn defect_sizes(&self) -> Vec<usize> {
        self.defect_blocks().iter().map(|&i| self.blocks[i].len()).collect()
    }

    /// Index of the block containing each vertex.
    pub fn block_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.n];
        for (i, block) in self.blocks.iter().enumerate() {
            for &v in block {
                idx[v] = i;
            }
        }
        idx
    }

    /// True when the half can appear in a planar diagram: the blocks are
    /// noncrossing on the line and no defect block is nested inside the span
    /// of another block (its strand to the other row would have to cross).
    pub fn is_planar(&self) -> bool {
        let mut block_at = vec![usize::MAX; self.n];
        for (i, block) in self.blocks.iter().enumerate() {
            for &v in block {
                block_at[v] = i;
            }
        }
        if !noncrossing_sweep(&block_at) {
            return false;
        }
        let top = top_level_flags(&self.blocks);
        self.defect.iter().zip(top).all(|(&d, t)| !d || t)
    }
}

impl fmt::Display for HalfDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, &v) in block.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", v + 1)?;
            }
            write!(f, "]")?;
            if self.defect[i] {
                write!(f, "*")?;
            }
        }
        write!(f, "]")
    }
}

/// For each block, whether it is nested inside no other block's span.
pub fn top_level_flags(blocks: &[Vec<usize>]) -> Vec<bool> {
    blocks
        .iter()
        .map(|b| {
            let (lo, hi) = (b[0], b[b.len() - 1]);
            !blocks
                .iter()
                .any(|c| c[0] < lo && hi < c[c.len() - 1])
        })
        .collect()
}
