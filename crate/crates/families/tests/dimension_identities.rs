//! Three independent faces of each family's size must coincide: the closed
//! form, the sum of squared cell dimensions, and a brute-force count of the
//! diagram basis. Cell dimensions are likewise checked against an explicit
//! enumeration of the half-diagram basis.

use families::{
    algebra_dim, cell_dim, cell_labels, enumerate_cell_basis, for_each_basis_diagram, FamilyId,
    FamilySpec, Int,
};

fn spec(id: FamilyId, n: usize) -> FamilySpec {
    FamilySpec::new(id, n).unwrap()
}

fn spec_r(id: FamilyId, n: usize, r: usize) -> FamilySpec {
    FamilySpec::with_r(id, n, r).unwrap()
}

fn squared_cells(s: &FamilySpec) -> Int {
    cell_labels(s)
        .unwrap()
        .iter()
        .map(|l| {
            let d = cell_dim(s, l).unwrap();
            &d * &d
        })
        .sum()
}

fn basis_count(s: &FamilySpec) -> Int {
    let mut c: u64 = 0;
    for_each_basis_diagram(s, &mut |_| c += 1).unwrap();
    Int::from(c)
}

fn check_three_way(s: &FamilySpec) {
    let closed = algebra_dim(s);
    assert_eq!(squared_cells(s), closed, "cell squares of {s}");
    assert_eq!(basis_count(s), closed, "basis count of {s}");
}

#[test]
fn partition_type_families_agree() {
    for n in 1..=4 {
        check_three_way(&spec(FamilyId::Partition, n));
        check_three_way(&spec(FamilyId::HalfPartition, n));
        check_three_way(&spec(FamilyId::UniformBlock, n));
        check_three_way(&spec_r(FamilyId::Gr1m, n, n + 1));
    }
    for n in 1..=5 {
        check_three_way(&spec(FamilyId::ParityMatching, n));
    }
}

#[test]
fn quasi_partition_count_matches_closed_form() {
    // no cell basis here; the label data still squares up against the
    // brute-force diagram count
    for n in 1..=4 {
        check_three_way(&spec(FamilyId::QuasiPartitionIndex, n));
    }
}

#[test]
fn matching_type_families_agree() {
    for n in 1..=5 {
        check_three_way(&spec(FamilyId::Brauer, n));
        check_three_way(&spec(FamilyId::RookBrauer, n));
        check_three_way(&spec(FamilyId::Rook, n));
    }
}

#[test]
fn planar_families_agree() {
    for n in 1..=6 {
        check_three_way(&spec(FamilyId::TemperleyLieb, n));
        check_three_way(&spec(FamilyId::Motzkin, n));
        check_three_way(&spec(FamilyId::PlanarPartition, n));
        check_three_way(&spec(FamilyId::PlanarQuasiPartitionIndex, n));
        check_three_way(&spec(FamilyId::PlanarRook, n));
        check_three_way(&spec(FamilyId::PlanarEven, n));
        check_three_way(&spec(FamilyId::PlanarUniform, n));
    }
    for n in 1..=5 {
        check_three_way(&spec_r(FamilyId::PlanarRColor, n, 2));
        check_three_way(&spec_r(FamilyId::PlanarRColor, n, 3));
        check_three_way(&spec_r(FamilyId::PlanarRColor, n, 4));
    }
}

#[test]
fn balanced_motzkin_count_matches_closed_form() {
    for n in 1..=5 {
        let s = spec(FamilyId::PartialTlIndex, n);
        assert_eq!(basis_count(&s), algebra_dim(&s), "{s}");
    }
}

#[test]
fn cell_dimensions_match_basis_enumeration() {
    let sweeps = [
        spec(FamilyId::Partition, 4),
        spec(FamilyId::HalfPartition, 4),
        spec(FamilyId::UniformBlock, 4),
        spec_r(FamilyId::Gr1m, 4, 5),
        spec(FamilyId::ParityMatching, 4),
        spec(FamilyId::Brauer, 5),
        spec(FamilyId::RookBrauer, 5),
        spec(FamilyId::Rook, 5),
        spec(FamilyId::TemperleyLieb, 6),
        spec(FamilyId::Motzkin, 6),
        spec(FamilyId::PlanarPartition, 6),
        spec(FamilyId::PlanarQuasiPartitionIndex, 6),
        spec(FamilyId::PlanarRook, 6),
        spec(FamilyId::PlanarEven, 5),
        spec_r(FamilyId::PlanarRColor, 5, 3),
        spec(FamilyId::PlanarUniform, 6),
    ];
    for top in sweeps {
        for n in 1..=top.n {
            let s = match top.r {
                Some(r) => spec_r(top.id, n, r),
                None => spec(top.id, n),
            };
            for label in cell_labels(&s).unwrap() {
                let counted = enumerate_cell_basis(&s, &label).unwrap().len();
                let formula = cell_dim(&s, &label).unwrap();
                assert_eq!(Int::from(counted as u64), formula, "{s} cell {label}");
            }
        }
    }
}
