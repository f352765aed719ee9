//! Cross-checks of the straightening algorithm, the bilinear form, and the
//! permutation action against direct tabloid computations.

use std::collections::BTreeMap;

use combinatorics::{all_perms, num_standard_tableaux, partitions_of, Int, IntegerPartition, Perm};
use num::Zero;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use specht::{
    act, polytabloid_expansion, specht_form, standard_tableaux, straighten, Coeff, SpechtVector,
    StandardTableau, Tabloid,
};

fn shapes(k: usize) -> Vec<IntegerPartition> {
    partitions_of(k)
}

fn filling_from_perm(parts: &[usize], p: &Perm) -> Vec<Vec<usize>> {
    let mut values = (0..p.degree()).map(|i| p.apply(i) + 1);
    parts
        .iter()
        .map(|&len| (0..len).map(|_| values.next().unwrap()).collect())
        .collect()
}

fn rational_expansion(rows: &[Vec<usize>]) -> BTreeMap<Tabloid, Coeff> {
    polytabloid_expansion(rows)
        .into_iter()
        .map(|(t, c)| (t, Coeff::from_integer(c)))
        .collect()
}

/// Tabloid expansion of a linear combination of standard polytabloids.
fn expansion_of_vector(v: &SpechtVector) -> BTreeMap<Tabloid, Coeff> {
    let mut out: BTreeMap<Tabloid, Coeff> = BTreeMap::new();
    for (t, c) in v.iter() {
        for (tab, n) in polytabloid_expansion(t.rows()) {
            let entry = out.entry(tab).or_insert_with(Coeff::zero);
            *entry = &*entry + &(Coeff::from_integer(n) * c);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn check_straighten_matches_expansion(parts: &[usize], p: &Perm) {
    let filling = filling_from_perm(parts, p);
    let direct = rational_expansion(&filling);
    let via_basis = expansion_of_vector(&straighten(&filling));
    assert_eq!(
        direct, via_basis,
        "straightening changed the polytabloid for filling {filling:?}"
    );
}

#[test]
fn tableau_counts_match_hook_lengths() {
    for k in 0..=7 {
        for shape in shapes(k) {
            let listed = standard_tableaux(&shape);
            assert_eq!(Int::from(listed.len()), num_standard_tableaux(&shape));
            for w in listed.windows(2) {
                assert!(w[0] < w[1], "listing out of order for {shape}");
            }
        }
    }
}

#[test]
fn straightening_is_the_identity_on_polytabloids_exhaustive() {
    for k in 1..=5 {
        for shape in shapes(k) {
            for p in all_perms(k) {
                check_straighten_matches_expansion(shape.parts(), &p);
            }
        }
    }
}

#[test]
fn straightening_is_the_identity_on_polytabloids_sampled() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0101);
    let perms = all_perms(6);
    for shape in shapes(6) {
        for _ in 0..40 {
            let p = &perms[rng.random_range(0..perms.len())];
            check_straighten_matches_expansion(shape.parts(), p);
        }
    }
}

fn rank(mut m: Vec<Vec<Coeff>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pivot) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pivot);
        for i in r + 1..rows {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &m[r][c];
            let scaled: Vec<Coeff> = m[r][c..].iter().map(|v| v * &f).collect();
            for (entry, delta) in m[i][c..].iter_mut().zip(scaled) {
                *entry = &*entry - &delta;
            }
        }
        r += 1;
    }
    r
}

#[test]
fn standard_polytabloids_span_a_space_of_dimension_f_lambda() {
    for k in 0..=6 {
        for shape in shapes(k) {
            let basis = standard_tableaux(&shape);
            let expansions: Vec<BTreeMap<Tabloid, Coeff>> = basis
                .iter()
                .map(|t| rational_expansion(t.rows()))
                .collect();
            let mut tabloids: Vec<Tabloid> = expansions
                .iter()
                .flat_map(|e| e.keys().cloned())
                .collect();
            tabloids.sort();
            tabloids.dedup();
            let matrix: Vec<Vec<Coeff>> = expansions
                .iter()
                .map(|e| {
                    tabloids
                        .iter()
                        .map(|t| e.get(t).cloned().unwrap_or_else(Coeff::zero))
                        .collect()
                })
                .collect();
            assert_eq!(Int::from(rank(matrix)), num_standard_tableaux(&shape));
        }
    }
}

#[test]
fn gram_matrix_of_the_form_is_nonsingular() {
    for k in 0..=6 {
        for shape in shapes(k) {
            let basis = standard_tableaux(&shape);
            let id = Perm::identity(k);
            let gram: Vec<Vec<Coeff>> = basis
                .iter()
                .map(|t| {
                    basis
                        .iter()
                        .map(|u| specht_form(t, &id, u).unwrap())
                        .collect()
                })
                .collect();
            for (i, row) in gram.iter().enumerate() {
                for (j, entry) in row.iter().enumerate() {
                    assert_eq!(*entry, gram[j][i].clone(), "gram not symmetric at {shape}");
                    if i == j {
                        assert!(*entry > Coeff::zero(), "diagonal not positive at {shape}");
                    }
                }
            }
            assert_eq!(rank(gram), basis.len(), "singular gram matrix at {shape}");
        }
    }
}

#[test]
fn action_is_a_homomorphism_exhaustive() {
    for k in 1..=4 {
        let perms = all_perms(k);
        for shape in shapes(k) {
            for t in standard_tableaux(&shape) {
                let v = SpechtVector::basis(t);
                let inner: Vec<SpechtVector> =
                    perms.iter().map(|s2| act(s2, &v).unwrap()).collect();
                for s1 in &perms {
                    for (s2, w) in perms.iter().zip(&inner) {
                        assert_eq!(act(&s1.compose(s2), &v).unwrap(), act(s1, w).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn action_agrees_with_the_form() {
    // sigma . e_U expanded through act must reproduce all form values
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0102);
    for k in 1..=5 {
        let perms = all_perms(k);
        for shape in shapes(k) {
            let basis = standard_tableaux(&shape);
            let id = Perm::identity(k);
            for _ in 0..10 {
                let sigma = &perms[rng.random_range(0..perms.len())];
                let u = &basis[rng.random_range(0..basis.len())];
                let image = act(sigma, &SpechtVector::basis(u.clone())).unwrap();
                for t in &basis {
                    let mut expected = Coeff::zero();
                    for (v, c) in image.iter() {
                        expected += specht_form(t, &id, v).unwrap() * c;
                    }
                    assert_eq!(specht_form(t, sigma, u).unwrap(), expected);
                }
            }
        }
    }
}

#[test]
fn form_is_invariant_under_moving_the_permutation() {
    for k in 1..=4 {
        let perms = all_perms(k);
        for shape in shapes(k) {
            let basis = standard_tableaux(&shape);
            for sigma in &perms {
                for t in &basis {
                    for u in &basis {
                        assert_eq!(
                            specht_form(t, sigma, u).unwrap(),
                            specht_form(u, &sigma.inverse(), t).unwrap()
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn one_row_and_one_column_modules() {
    let row = StandardTableau::new(vec![vec![1, 2, 3, 4]]).unwrap();
    let col = StandardTableau::new(vec![vec![1], vec![2], vec![3], vec![4]]).unwrap();
    for sigma in all_perms(4) {
        let rv = act(&sigma, &SpechtVector::basis(row.clone())).unwrap();
        assert_eq!(rv, SpechtVector::basis(row.clone()));
        let cv = act(&sigma, &SpechtVector::basis(col.clone())).unwrap();
        let mut expected = SpechtVector::zero();
        expected.add_term(col.clone(), Coeff::from_integer(sigma.sign().into()));
        assert_eq!(cv, expected);
    }
}

#[test]
fn transposition_negates_the_two_cell_column() {
    let col = StandardTableau::new(vec![vec![1], vec![2]]).unwrap();
    let swapped = act(
        &Perm::transposition(2, 0, 1),
        &SpechtVector::basis(col.clone()),
    )
    .unwrap();
    assert_eq!(swapped, SpechtVector::basis(col.clone()).negated());
}
