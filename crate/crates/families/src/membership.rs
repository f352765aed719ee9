use diagram_core::Diagram;

use crate::{FamilyError, FamilyId, FamilySpec};

/// Whether the diagram belongs to the family's basis.
pub fn contains(spec: &FamilySpec, d: &Diagram) -> Result<bool, FamilyError> {
    if d.n() != spec.n {
        return Err(FamilyError::SizeMismatch {
            expected: spec.n,
            got: d.n(),
        });
    }
    if spec.id.planar() && !d.is_planar() {
        return Ok(false);
    }
    let n = spec.n;
    let sizes = |i: usize| (d.top_count(i), d.bottom_count(i));
    let every = |pred: &dyn Fn(usize, usize) -> bool| {
        (0..d.blocks().len()).all(|i| {
            let (t, b) = sizes(i);
            pred(t, b)
        })
    };
    Ok(match spec.id {
        FamilyId::Partition | FamilyId::PlanarPartition => true,
        FamilyId::HalfPartition => {
            let idx = d.block_index();
            idx[n - 1] == idx[2 * n - 1]
        }
        FamilyId::QuasiPartitionIndex | FamilyId::PlanarQuasiPartitionIndex => {
            every(&|t, b| t + b >= 2)
        }
        FamilyId::Gr1m | FamilyId::PlanarRColor => {
            let r = spec.r();
            every(&|t, b| t % r == b % r)
        }
        FamilyId::UniformBlock | FamilyId::PlanarUniform => every(&|t, b| t == b),
        FamilyId::ParityMatching | FamilyId::PlanarEven => every(&|t, b| (t + b) % 2 == 0),
        FamilyId::Brauer | FamilyId::TemperleyLieb => every(&|t, b| t + b == 2),
        FamilyId::RookBrauer | FamilyId::Motzkin => every(&|t, b| t + b <= 2),
        FamilyId::Rook | FamilyId::PlanarRook => every(&|t, b| t + b == 1 || (t == 1 && b == 1)),
        FamilyId::PartialTlIndex => {
            let top_arcs = (0..d.blocks().len()).filter(|&i| sizes(i) == (2, 0)).count();
            let bottom_arcs = (0..d.blocks().len()).filter(|&i| sizes(i) == (0, 2)).count();
            every(&|t, b| t + b <= 2) && top_arcs == bottom_arcs
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(id: FamilyId, n: usize) -> FamilySpec {
        FamilySpec::new(id, n).unwrap()
    }

    fn d(text: &str) -> Diagram {
        Diagram::parse(text).unwrap()
    }

    #[test]
    fn identity_is_in_every_family() {
        for id in crate::spec::ALL_FAMILIES {
            let s = if id.requires_r() {
                FamilySpec::with_r(id, 3, 4).unwrap()
            } else {
                spec(id, 3)
            };
            assert!(contains(&s, &Diagram::identity(3)).unwrap(), "{id}");
        }
    }

    #[test]
    fn size_mismatch_is_an_error() {
        let s = spec(FamilyId::Brauer, 3);
        assert!(contains(&s, &Diagram::identity(2)).is_err());
    }

    #[test]
    fn half_partition_requires_last_strands_joined() {
        let s = spec(FamilyId::HalfPartition, 2);
        assert!(contains(&s, &d("[[1],[2,-2],[-1]]")).unwrap());
        assert!(!contains(&s, &d("[[1,-2],[2,-1]]")).unwrap());
    }

    #[test]
    fn parity_matching_examples() {
        let s = spec(FamilyId::ParityMatching, 2);
        assert!(contains(&s, &d("[[1,2],[-1,-2]]")).unwrap());
        assert!(!contains(&s, &d("[[1,-1],[2],[-2]]")).unwrap());
    }

    #[test]
    fn rook_two_blocks_must_propagate() {
        let s = spec(FamilyId::Rook, 2);
        assert!(contains(&s, &d("[[1,-2],[2],[-1]]")).unwrap());
        assert!(!contains(&s, &d("[[1,2],[-1],[-2]]")).unwrap());
    }

    #[test]
    fn planar_families_reject_crossings() {
        let swap = d("[[1,-2],[2,-1]]");
        assert!(contains(&spec(FamilyId::UniformBlock, 2), &swap).unwrap());
        assert!(!contains(&spec(FamilyId::PlanarUniform, 2), &swap).unwrap());
        assert!(!contains(&spec(FamilyId::PlanarPartition, 2), &swap).unwrap());
    }

    #[test]
    fn partial_tl_balances_row_arcs() {
        let s = spec(FamilyId::PartialTlIndex, 2);
        assert!(contains(&s, &d("[[1,2],[-1,-2]]")).unwrap());
        assert!(!contains(&s, &d("[[1,2],[-1],[-2]]")).unwrap());
    }

    #[test]
    fn color_congruence() {
        let s = FamilySpec::with_r(FamilyId::PlanarRColor, 3, 2).unwrap();
        // 2 top vs 0 bottom vertices is fine mod 2, 2 vs 1 is not
        assert!(contains(&s, &d("[[1,2],[3,-3],[-1,-2]]")).unwrap());
        assert!(!contains(&s, &d("[[1,2,-1],[3,-3],[-2]]")).unwrap());
    }
}
