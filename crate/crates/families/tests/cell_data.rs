//! Pinned label sets, pinned cell dimensions, and recurrences that check the
//! closed forms from an independent direction.

use combinatorics::{bell, binomial, count_set_partitions, BlockCount, MinBlock};
use families::{
    algebra_dim, cell_dim, cell_labels, enumerate_cell_basis, CellLabel, FamilyId, FamilySpec, Int,
};

fn spec(id: FamilyId, n: usize) -> FamilySpec {
    FamilySpec::new(id, n).unwrap()
}

fn label(id: FamilyId, text: &str) -> CellLabel {
    CellLabel::parse(id, text).unwrap()
}

fn dims(s: &FamilySpec) -> Vec<Int> {
    cell_labels(s)
        .unwrap()
        .iter()
        .map(|l| cell_dim(s, l).unwrap())
        .collect()
}

#[test]
fn temperley_lieb_labels_step_by_two() {
    let shown: Vec<String> = cell_labels(&spec(FamilyId::TemperleyLieb, 4))
        .unwrap()
        .iter()
        .map(|l| l.to_string())
        .collect();
    assert_eq!(shown, ["0", "2", "4"]);
}

#[test]
fn even_block_planar_labels_and_dims() {
    let s = spec(FamilyId::PlanarEven, 4);
    let shown: Vec<String> = cell_labels(&s).unwrap().iter().map(|l| l.to_string()).collect();
    assert_eq!(
        shown,
        ["[]", "[2]", "[1,1]", "[2,2]", "[1,1,2]", "[1,2,1]", "[2,1,1]", "[1,1,1,1]"]
    );
    let expect = [3, 4, 5, 1, 1, 1, 1, 1];
    let got = dims(&s);
    for (d, e) in got.iter().zip(expect) {
        assert_eq!(*d, Int::from(e));
    }
}

#[test]
fn three_color_planar_pins() {
    let s = FamilySpec::with_r(FamilyId::PlanarRColor, 5, 3).unwrap();
    assert_eq!(
        cell_dim(&s, &label(FamilyId::PlanarRColor, "[2]")).unwrap(),
        Int::from(4)
    );
    assert_eq!(
        cell_dim(&s, &label(FamilyId::PlanarRColor, "[1,1]")).unwrap(),
        Int::from(5)
    );
    assert_eq!(algebra_dim(&s), Int::from(54));
    // the empty word labels a cell exactly when r divides n
    let has_empty = |n: usize| {
        cell_labels(&FamilySpec::with_r(FamilyId::PlanarRColor, n, 3).unwrap())
            .unwrap()
            .contains(&label(FamilyId::PlanarRColor, "[]"))
    };
    assert!(has_empty(3));
    assert!(has_empty(6));
    assert!(!has_empty(5));
}

#[test]
fn matching_family_dimension_pins() {
    let b = spec(FamilyId::Brauer, 3);
    assert_eq!(cell_dim(&b, &label(FamilyId::Brauer, "[1]")).unwrap(), Int::from(3));
    assert_eq!(cell_dim(&b, &label(FamilyId::Brauer, "[3]")).unwrap(), Int::from(1));
    assert_eq!(
        cell_dim(&b, &label(FamilyId::Brauer, "[2,1]")).unwrap(),
        Int::from(2)
    );
    let pr = spec(FamilyId::PlanarRook, 4);
    let got = dims(&pr);
    for (k, d) in got.iter().enumerate() {
        assert_eq!(*d, binomial(4, k), "free singleton count {k}");
    }
}

#[test]
fn uniform_block_algebra_dimensions() {
    let expect = [1, 3, 16, 131, 1496];
    for (n, e) in (1..=5).zip(expect) {
        assert_eq!(algebra_dim(&spec(FamilyId::UniformBlock, n)), Int::from(e));
    }
}

#[test]
fn even_matching_dimension_recurrence() {
    // dim A_n = sum_i binom(2n-1, 2i-1) dim A_{n-i}, seeded with dim A_0 = 1
    let mut known = vec![Int::from(1u32)];
    for n in 1..=8usize {
        let mut total = Int::from(0u32);
        for i in 1..=n {
            total += binomial(2 * n - 1, 2 * i - 1) * &known[n - i];
        }
        assert_eq!(algebra_dim(&spec(FamilyId::ParityMatching, n)), total, "n={n}");
        known.push(total);
    }
}

#[test]
fn no_singleton_count_alternating_sum() {
    // partitions of [m] without singletons: sum_j (-1)^(j-1) B_{m-j} + 1
    for n in 1..=6usize {
        let m = 2 * n;
        let mut alt = Int::from(1u32);
        for j in 1..=m {
            let term = bell(m - j);
            if j % 2 == 1 {
                alt += term;
            } else {
                alt -= term;
            }
        }
        assert_eq!(
            count_set_partitions(m, BlockCount::All, MinBlock::Two),
            alt,
            "m={m}"
        );
        assert_eq!(algebra_dim(&spec(FamilyId::QuasiPartitionIndex, n)), alt);
    }
}

#[test]
fn no_singleton_cells_at_one_vertex() {
    let s = spec(FamilyId::QuasiPartitionIndex, 1);
    assert_eq!(
        cell_dim(&s, &label(FamilyId::QuasiPartitionIndex, "[]")).unwrap(),
        Int::from(0)
    );
    assert_eq!(
        cell_dim(&s, &label(FamilyId::QuasiPartitionIndex, "[1]")).unwrap(),
        Int::from(1)
    );
}

#[test]
fn pinned_vertex_family_small_cases() {
    // n = 1: one cell, dimension 1, algebra of dimension B_1 = 1
    let s = spec(FamilyId::HalfPartition, 1);
    let labels = cell_labels(&s).unwrap();
    assert_eq!(labels.len(), 1);
    assert_eq!(cell_dim(&s, &labels[0]).unwrap(), Int::from(1));
    assert_eq!(algebra_dim(&s), Int::from(1));
    // n = 2: B_3 = 5 splits as 1^2 + 2^2
    let s = spec(FamilyId::HalfPartition, 2);
    let mut ds = dims(&s);
    ds.sort();
    assert_eq!(ds, vec![Int::from(1), Int::from(2)]);
}

#[test]
fn label_grammar_round_trips() {
    let samples = [
        spec(FamilyId::Partition, 4),
        spec(FamilyId::HalfPartition, 4),
        spec(FamilyId::UniformBlock, 5),
        spec(FamilyId::ParityMatching, 5),
        spec(FamilyId::Brauer, 5),
        spec(FamilyId::TemperleyLieb, 6),
        spec(FamilyId::PlanarEven, 6),
        FamilySpec::with_r(FamilyId::PlanarRColor, 6, 3).unwrap(),
        FamilySpec::with_r(FamilyId::Gr1m, 4, 5).unwrap(),
        spec(FamilyId::PlanarUniform, 5),
        spec(FamilyId::PlanarRook, 5),
    ];
    for s in samples {
        for l in cell_labels(&s).unwrap() {
            let round = CellLabel::parse(s.id, &l.to_string()).unwrap();
            assert_eq!(round, l, "{s}");
        }
    }
}

#[test]
fn cell_basis_elements_carry_matching_tableau_shapes() {
    let s = spec(FamilyId::ParityMatching, 4);
    let l = label(FamilyId::ParityMatching, "[2]|[1]");
    for el in enumerate_cell_basis(&s, &l).unwrap() {
        assert_eq!(el.tableaux.len(), 2);
        assert_eq!(el.tableaux[0].size(), 2);
        assert_eq!(el.tableaux[1].size(), 1);
        assert_eq!(el.half.defect_blocks().len(), 3);
    }
}
