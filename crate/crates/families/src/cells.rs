//! Cell bases: half diagrams carrying the family's defect pattern for a
//! label, decorated with standard tableaux where the family keeps symmetric
//! group data on its propagating strands.

use combinatorics::IntegerPartition;
use diagram_core::enumerate::{
    for_each_noncrossing_partition, for_each_partial_matching, for_each_set_partition,
};
use diagram_core::HalfDiagram;
use itertools::Itertools;
use specht::{standard_tableaux, StandardTableau};

use crate::dims::ensure_label;
use crate::enumerate::max_halves_n;
use crate::{CellLabel, FamilyError, FamilyId, FamilySpec};

/// How tableau data attaches to a label's defect slots. Within each class,
/// defect blocks are taken in least-vertex order and tableau entries
/// `1..=m` index them in that order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellSymmetry {
    /// Planar families: no tableau data.
    Trivial,
    /// One symmetric group on all defect slots.
    Single,
    /// One symmetric group on all defect slots except the pinned one (the
    /// defect block containing the last vertex).
    SingleWithPin,
    /// A symmetric group per defect-block size, smallest size first.
    BySize,
    /// A symmetric group on the odd-size defects and one on the even-size
    /// defects, odd class first.
    ByParity,
}

pub fn cell_symmetry(id: FamilyId) -> CellSymmetry {
    match id {
        FamilyId::Partition
        | FamilyId::QuasiPartitionIndex
        | FamilyId::Brauer
        | FamilyId::RookBrauer
        | FamilyId::Rook => CellSymmetry::Single,
        FamilyId::HalfPartition => CellSymmetry::SingleWithPin,
        FamilyId::UniformBlock | FamilyId::Gr1m => CellSymmetry::BySize,
        FamilyId::ParityMatching => CellSymmetry::ByParity,
        _ => CellSymmetry::Trivial,
    }
}

/// One cell basis vector: a half diagram and, for the non-planar families,
/// a standard tableau per symmetry class (in the class order of
/// [`CellSymmetry`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellElement {
    pub half: HalfDiagram,
    pub tableaux: Vec<StandardTableau>,
}

/// All half diagrams realizing the label's defect pattern, sorted.
pub fn enumerate_cell_halves(
    spec: &FamilySpec,
    label: &CellLabel,
) -> Result<Vec<HalfDiagram>, FamilyError> {
    if !spec.id.supports_cell_basis() {
        return Err(FamilyError::Unsupported(format!(
            "{} does not expose a half-diagram cell basis",
            spec.id
        )));
    }
    ensure_label(spec, label)?;
    let n = spec.n;
    let max = max_halves_n(spec.id);
    if n > max {
        return Err(FamilyError::ResourceLimit(format!(
            "cell halves of {spec} exceed the enumeration bound n <= {max} \
             (override with DIAGRAMALG_MAX_BASIS)"
        )));
    }
    let mut out = Vec::new();
    let mut take = |blocks: &[Vec<usize>]| {
        for flags in mark_choices(spec, label, blocks) {
            let half = HalfDiagram::new(n, blocks.to_vec(), flags).expect("valid half");
            if !spec.id.planar() || half.is_planar() {
                out.push(half);
            }
        }
    };
    if spec.id.planar() && !spec.id.small_blocks() {
        for_each_noncrossing_partition(n, &|_| true, &|_| true, &mut take);
    } else if spec.id.small_blocks() {
        for_each_partial_matching(n, false, &mut take);
    } else {
        for_each_set_partition(n, &mut take);
    }
    out.sort();
    Ok(out)
}

/// The cell basis: halves crossed with standard tableaux so that the count
/// equals the cell dimension.
pub fn enumerate_cell_basis(
    spec: &FamilySpec,
    label: &CellLabel,
) -> Result<Vec<CellElement>, FamilyError> {
    let halves = enumerate_cell_halves(spec, label)?;
    let shapes: Vec<IntegerPartition> = match label {
        CellLabel::Partition(lam) => vec![lam.clone()],
        CellLabel::Pair(mu, nu) => vec![mu.clone(), nu.clone()],
        CellLabel::SizeTuple(entries) => entries.iter().map(|(_, lam)| lam.clone()).collect(),
        CellLabel::Count(_) | CellLabel::Word(_) => Vec::new(),
    };
    let fillings: Vec<Vec<StandardTableau>> = if shapes.is_empty() {
        vec![Vec::new()]
    } else {
        shapes
            .iter()
            .map(|s| standard_tableaux(s).into_iter())
            .multi_cartesian_product()
            .collect()
    };
    let mut out = Vec::with_capacity(halves.len() * fillings.len());
    for half in halves {
        for tabs in &fillings {
            out.push(CellElement {
                half: half.clone(),
                tableaux: tabs.clone(),
            });
        }
    }
    Ok(out)
}

/// Defect-flag assignments realizing the label on the given blocks.
fn mark_choices(spec: &FamilySpec, label: &CellLabel, blocks: &[Vec<usize>]) -> Vec<Vec<bool>> {
    let m = blocks.len();
    let sizes: Vec<usize> = blocks.iter().map(|b| b.len()).collect();
    let subsets_of = |pool: Vec<usize>, want: usize, forced: Vec<usize>| -> Vec<Vec<bool>> {
        if want > pool.len() {
            return Vec::new();
        }
        pool.into_iter()
            .combinations(want)
            .map(|chosen| {
                let mut flags = vec![false; m];
                for &i in chosen.iter().chain(&forced) {
                    flags[i] = true;
                }
                flags
            })
            .collect()
    };
    let all_blocks: Vec<usize> = (0..m).collect();
    match (spec.id, label) {
        (FamilyId::Partition | FamilyId::PlanarPartition, _) => {
            subsets_of(all_blocks, defect_count(label), Vec::new())
        }
        (FamilyId::HalfPartition, CellLabel::Partition(lam)) => {
            let pin = (0..m)
                .find(|&i| blocks[i].contains(&(spec.n - 1)))
                .expect("blocks cover the row");
            let pool = (0..m).filter(|&i| i != pin).collect();
            subsets_of(pool, lam.size(), vec![pin])
        }
        (FamilyId::UniformBlock | FamilyId::Gr1m, CellLabel::SizeTuple(entries)) => {
            let mut want: Vec<usize> = entries
                .iter()
                .flat_map(|(k, lam)| std::iter::repeat_n(*k, lam.size()))
                .collect();
            want.sort_unstable();
            let mut have = sizes.clone();
            have.sort_unstable();
            if have == want {
                vec![vec![true; m]]
            } else {
                Vec::new()
            }
        }
        (FamilyId::ParityMatching, CellLabel::Pair(mu, nu)) => {
            let odd: Vec<usize> = (0..m).filter(|&i| sizes[i] % 2 == 1).collect();
            if odd.len() != mu.size() {
                return Vec::new();
            }
            let evens = (0..m).filter(|&i| sizes[i].is_multiple_of(2)).collect();
            subsets_of(evens, nu.size(), odd)
        }
        (FamilyId::Brauer | FamilyId::TemperleyLieb, _) => {
            let singles: Vec<usize> = (0..m).filter(|&i| sizes[i] == 1).collect();
            if singles.len() != defect_count(label) {
                return Vec::new();
            }
            let mut flags = vec![false; m];
            for &i in &singles {
                flags[i] = true;
            }
            vec![flags]
        }
        (FamilyId::RookBrauer | FamilyId::Motzkin, _) => {
            let singles = (0..m).filter(|&i| sizes[i] == 1).collect();
            subsets_of(singles, defect_count(label), Vec::new())
        }
        (FamilyId::Rook, CellLabel::Partition(lam)) => {
            if sizes.iter().any(|&s| s != 1) {
                return Vec::new();
            }
            subsets_of(all_blocks, lam.size(), Vec::new())
        }
        (FamilyId::PlanarRook, CellLabel::Count(free)) => {
            if sizes.iter().any(|&s| s != 1) || *free > m {
                return Vec::new();
            }
            subsets_of(all_blocks, m - free, Vec::new())
        }
        (FamilyId::PlanarQuasiPartitionIndex, CellLabel::Count(k)) => subsets_of(
            all_blocks,
            *k,
            Vec::new(),
        )
        .into_iter()
        .filter(|flags| (0..m).all(|i| flags[i] || sizes[i] >= 2))
        .collect(),
        (FamilyId::PlanarEven, CellLabel::Word(w)) => word_marks(&sizes, w, 2),
        (FamilyId::PlanarRColor, CellLabel::Word(w)) => word_marks(&sizes, w, spec.r()),
        (FamilyId::PlanarUniform, CellLabel::Word(w)) => {
            if sizes == *w {
                vec![vec![true; m]]
            } else {
                Vec::new()
            }
        }
        _ => unreachable!("label validated against the family"),
    }
}

fn defect_count(label: &CellLabel) -> usize {
    match label {
        CellLabel::Count(k) => *k,
        CellLabel::Partition(lam) => lam.size(),
        _ => unreachable!("count-style label"),
    }
}

/// Mark assignments whose marked blocks, in least-vertex order, spell the
/// word of size classes, with every free block size divisible by `r`.
fn word_marks(sizes: &[usize], word: &[usize], r: usize) -> Vec<Vec<bool>> {
    let m = sizes.len();
    (0..m)
        .combinations(word.len())
        .filter(|chosen| {
            let spelled = chosen.iter().map(|&i| (sizes[i] - 1) % r + 1);
            spelled.eq(word.iter().copied())
                && (0..m)
                    .filter(|i| !chosen.contains(i))
                    .all(|i| sizes[i].is_multiple_of(r))
        })
        .map(|chosen| {
            let mut flags = vec![false; m];
            for i in chosen {
                flags[i] = true;
            }
            flags
        })
        .collect()
}
