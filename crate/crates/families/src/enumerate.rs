//! Full basis enumeration: a streaming visitor plus a materializing wrapper.
//!
//! Partition-type families filter all set partitions of the `2n` vertices;
//! matching-type families walk partial matchings; planar families use the
//! pruned noncrossing generator so only boundary-planar candidates are ever
//! built.

use diagram_core::enumerate::{
    for_each_partial_matching, for_each_planar_diagram, for_each_set_partition,
};
use diagram_core::Diagram;

use crate::{contains, FamilyError, FamilyId, FamilySpec};

type BlockPredicate = Box<dyn Fn(&[usize]) -> bool>;

/// Largest `n` whose full basis may be enumerated, honoring the
/// `DIAGRAMALG_MAX_BASIS` environment override.
pub fn max_enumerable_n(id: FamilyId) -> usize {
    env_bound().unwrap_or(class_default(id))
}

/// Half-diagram enumeration walks one row instead of two, so it is allowed
/// a little further out.
pub(crate) fn max_halves_n(id: FamilyId) -> usize {
    env_bound().unwrap_or(class_default(id) + 2)
}

fn class_default(id: FamilyId) -> usize {
    if id.small_blocks() || id.planar() {
        7
    } else {
        5
    }
}

fn env_bound() -> Option<usize> {
    std::env::var("DIAGRAMALG_MAX_BASIS").ok()?.parse().ok()
}

fn check_bound(spec: &FamilySpec) -> Result<(), FamilyError> {
    let max = max_enumerable_n(spec.id);
    if spec.n > max {
        return Err(FamilyError::ResourceLimit(format!(
            "basis of {spec} exceeds the enumeration bound n <= {max} \
             (override with DIAGRAMALG_MAX_BASIS)"
        )));
    }
    Ok(())
}

/// Visits every basis diagram of the family. Visit order is deterministic
/// but generator-specific; [`enumerate_basis`] sorts.
pub fn for_each_basis_diagram(
    spec: &FamilySpec,
    visit: &mut dyn FnMut(&Diagram),
) -> Result<(), FamilyError> {
    check_bound(spec)?;
    let n = spec.n;
    if spec.id.planar() {
        let counts = move |slots: &[usize]| {
            let top = slots.iter().filter(|&&s| s < n).count();
            (top, slots.len() - top)
        };
        let strand = move |b: &[usize]| b.len() == 1 || (b.len() == 2 && counts(b) == (1, 1));
        let may_close: BlockPredicate = match spec.id {
            FamilyId::PlanarPartition => Box::new(|_: &[usize]| true),
            FamilyId::PlanarQuasiPartitionIndex => Box::new(|b: &[usize]| b.len() >= 2),
            FamilyId::PlanarUniform => Box::new(move |b: &[usize]| {
                let (t, bo) = counts(b);
                t == bo
            }),
            FamilyId::PlanarEven => Box::new(|b: &[usize]| b.len().is_multiple_of(2)),
            FamilyId::PlanarRColor => {
                let r = spec.r();
                Box::new(move |b: &[usize]| {
                    let (t, bo) = counts(b);
                    t % r == bo % r
                })
            }
            FamilyId::TemperleyLieb => Box::new(|b: &[usize]| b.len() == 2),
            FamilyId::Motzkin | FamilyId::PartialTlIndex => Box::new(|b: &[usize]| b.len() <= 2),
            FamilyId::PlanarRook => Box::new(strand),
            _ => unreachable!("planar family"),
        };
        let may_grow: BlockPredicate = match spec.id {
            FamilyId::TemperleyLieb | FamilyId::Motzkin | FamilyId::PartialTlIndex => {
                Box::new(|b: &[usize]| b.len() <= 2)
            }
            FamilyId::PlanarRook => Box::new(strand),
            _ => Box::new(|_: &[usize]| true),
        };
        for_each_planar_diagram(n, &may_grow, &may_close, &mut |d| {
            if contains(spec, d).expect("sizes match") {
                visit(d);
            }
        });
    } else if spec.id.small_blocks() {
        let perfect = spec.id == FamilyId::Brauer;
        for_each_partial_matching(2 * n, perfect, &mut |blocks| {
            let d = Diagram::new(n, blocks.to_vec()).expect("blocks partition the slots");
            if contains(spec, &d).expect("sizes match") {
                visit(&d);
            }
        });
    } else {
        for_each_set_partition(2 * n, &mut |blocks| {
            let d = Diagram::new(n, blocks.to_vec()).expect("blocks partition the slots");
            if contains(spec, &d).expect("sizes match") {
                visit(&d);
            }
        });
    }
    Ok(())
}

/// The full basis in sorted canonical order.
pub fn enumerate_basis(spec: &FamilySpec) -> Result<Vec<Diagram>, FamilyError> {
    let mut out = Vec::new();
    for_each_basis_diagram(spec, &mut |d| out.push(d.clone()))?;
    out.sort();
    Ok(out)
}
