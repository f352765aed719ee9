use std::fmt;

use combinatorics::IntegerPartition;

use crate::{FamilyError, FamilyId};

/// A cell label. The shape depends on the family: a defect or singleton
/// count, an integer partition, a pair of partitions, a tuple of partitions
/// keyed by block size, or a word of block-size classes.
///
/// Textual forms: `2`; `[3,1]` (empty partition `[]`); `[2,1]|[1]`;
/// `1:[1,1];2:[2]`; `[1,1,2]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CellLabel {
    /// Defect count, or for the planar rook family the free-vertex count.
    Count(usize),
    Partition(IntegerPartition),
    /// Odd-block piece and even-block piece of the parity matching family.
    Pair(IntegerPartition, IntegerPartition),
    /// `(k, lambda)` entries with `lambda` nonempty, ascending in `k`: the
    /// partition attached to each block size.
    SizeTuple(Vec<(usize, IntegerPartition)>),
    /// Composition; a word of block-size classes for the colored families.
    Word(Vec<usize>),
}

/// Shape of label a family uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelKind {
    Count,
    Partition,
    Pair,
    SizeTuple,
    Word,
}

pub(crate) fn label_kind(id: FamilyId) -> Option<LabelKind> {
    Some(match id {
        FamilyId::Partition
        | FamilyId::HalfPartition
        | FamilyId::QuasiPartitionIndex
        | FamilyId::Brauer
        | FamilyId::RookBrauer
        | FamilyId::Rook => LabelKind::Partition,
        FamilyId::UniformBlock | FamilyId::Gr1m => LabelKind::SizeTuple,
        FamilyId::ParityMatching => LabelKind::Pair,
        FamilyId::PlanarPartition
        | FamilyId::TemperleyLieb
        | FamilyId::Motzkin
        | FamilyId::PlanarQuasiPartitionIndex
        | FamilyId::PlanarRook => LabelKind::Count,
        FamilyId::PlanarEven | FamilyId::PlanarRColor | FamilyId::PlanarUniform => LabelKind::Word,
        FamilyId::PartialTlIndex => return None,
    })
}

impl CellLabel {
    pub fn size_tuple(entries: Vec<(usize, IntegerPartition)>) -> Result<Self, FamilyError> {
        for w in entries.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(FamilyError::Parse("block sizes must be strictly ascending".into()));
            }
        }
        if entries.iter().any(|(k, lam)| *k == 0 || lam.is_empty()) {
            return Err(FamilyError::Parse(
                "size tuple entries need positive size and nonempty partition".into(),
            ));
        }
        Ok(CellLabel::SizeTuple(entries))
    }

    /// Parses the textual form appropriate for the family.
    pub fn parse(id: FamilyId, text: &str) -> Result<Self, FamilyError> {
        let kind = label_kind(id).ok_or_else(|| {
            FamilyError::Unsupported(format!("{id} does not expose cell labels"))
        })?;
        let text = text.trim();
        match kind {
            LabelKind::Count => text
                .parse::<usize>()
                .map(CellLabel::Count)
                .map_err(|_| FamilyError::Parse(format!("expected a count, got {text:?}"))),
            LabelKind::Partition => Ok(CellLabel::Partition(parse_partition(text)?)),
            LabelKind::Pair => {
                let (mu, nu) = text
                    .split_once('|')
                    .ok_or_else(|| FamilyError::Parse("expected mu|nu".into()))?;
                Ok(CellLabel::Pair(parse_partition(mu)?, parse_partition(nu)?))
            }
            LabelKind::SizeTuple => {
                let mut entries = Vec::new();
                for item in text.split(';') {
                    let (k, lam) = item
                        .split_once(':')
                        .ok_or_else(|| FamilyError::Parse("expected size:partition".into()))?;
                    let k = k
                        .trim()
                        .parse::<usize>()
                        .map_err(|_| FamilyError::Parse(format!("bad block size {k:?}")))?;
                    entries.push((k, parse_partition(lam)?));
                }
                entries.sort_by_key(|(k, _)| *k);
                CellLabel::size_tuple(entries)
            }
            LabelKind::Word => Ok(CellLabel::Word(parse_list(text)?)),
        }
    }
}

fn parse_list(text: &str) -> Result<Vec<usize>, FamilyError> {
    let inner = text
        .trim()
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| FamilyError::Parse(format!("expected [...], got {text:?}")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| FamilyError::Parse(format!("bad entry {t:?}")))
        })
        .collect()
}

fn parse_partition(text: &str) -> Result<IntegerPartition, FamilyError> {
    IntegerPartition::new(parse_list(text)?).map_err(|e| FamilyError::Parse(e.to_string()))
}

fn write_list(f: &mut fmt::Formatter<'_>, items: &[usize]) -> fmt::Result {
    write!(f, "[")?;
    for (i, v) in items.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{v}")?;
    }
    write!(f, "]")
}

impl fmt::Display for CellLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CellLabel::Count(c) => write!(f, "{c}"),
            CellLabel::Partition(p) => write!(f, "{p}"),
            CellLabel::Pair(mu, nu) => write!(f, "{mu}|{nu}"),
            CellLabel::SizeTuple(entries) => {
                for (i, (k, lam)) in entries.iter().enumerate() {
                    if i > 0 {
                        write!(f, ";")?;
                    }
                    write!(f, "{k}:{lam}")?;
                }
                Ok(())
            }
            CellLabel::Word(w) => write_list(f, w),
        }
    }
}
