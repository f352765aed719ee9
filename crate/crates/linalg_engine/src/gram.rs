//! Gram matrices of the cell bilinear forms, their determinant polynomials
//! in β, and the semisimplicity verdict they imply.

use families::{cell_labels, enumerate_cell_basis, CellLabel, FamilySpec};
use num::{One, Zero};

use crate::cell::{pair_cell_elements, pair_structure};
use crate::element::{power, Params};
use crate::matrix::eliminate;
use crate::poly::{lagrange, Poly};
use crate::{Coeff, EngineError};

/// Entry budget for determinant interpolation; each sample point costs one
/// exact elimination of the full matrix.
const DET_POLY_MAX_DIM: usize = 128;

#[derive(Debug, Clone)]
pub struct GramReport {
    pub spec: FamilySpec,
    pub label: CellLabel,
    /// Symmetric, indexed by `enumerate_cell_basis` order on both sides.
    pub matrix: Vec<Vec<Coeff>>,
    pub rank: usize,
    pub det: Coeff,
    pub nondegenerate: bool,
}

#[cfg(feature = "parallel")]
fn run_tasks<T, U, F>(items: Vec<T>, f: F, parallel: bool) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(&T) -> U + Sync,
{
    use rayon::prelude::*;
    if parallel {
        items.par_iter().map(&f).collect()
    } else {
        items.iter().map(&f).collect()
    }
}

#[cfg(not(feature = "parallel"))]
fn run_tasks<T, U, F>(items: Vec<T>, f: F, _parallel: bool) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(&f).collect()
}

fn gram_matrix_impl(
    spec: &FamilySpec,
    label: &CellLabel,
    p: &Params,
    parallel: bool,
) -> Result<GramReport, EngineError> {
    p.check(spec.id)?;
    let basis = enumerate_cell_basis(spec, label)?;
    let m = basis.len();
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|i| (i..m).map(move |j| (i, j))).collect();
    let entries = run_tasks(
        pairs.clone(),
        |&(i, j)| pair_cell_elements(spec, label, &basis[i], &basis[j], p),
        parallel,
    );
    let mut matrix = vec![vec![Coeff::zero(); m]; m];
    for ((i, j), entry) in pairs.into_iter().zip(entries) {
        let value = entry?;
        matrix[i][j] = value.clone();
        matrix[j][i] = value;
    }
    let elim = eliminate(&matrix);
    let nondegenerate = !elim.det.is_zero();
    debug_assert_eq!(nondegenerate, elim.rank == m);
    Ok(GramReport {
        spec: *spec,
        label: label.clone(),
        matrix,
        rank: elim.rank,
        det: elim.det,
        nondegenerate,
    })
}

/// The Gram matrix of the cell form, with exact rank and determinant.
pub fn gram_matrix(
    spec: &FamilySpec,
    label: &CellLabel,
    p: &Params,
) -> Result<GramReport, EngineError> {
    gram_matrix_impl(spec, label, p, true)
}

/// Single-threaded [`gram_matrix`]; the benchmark baseline.
pub fn gram_matrix_serial(
    spec: &FamilySpec,
    label: &CellLabel,
    p: &Params,
) -> Result<GramReport, EngineError> {
    gram_matrix_impl(spec, label, p, false)
}

/// How the path weight behaves while β sweeps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GammaMode {
    TieToBeta,
    Fixed(Coeff),
}

/// The Gram determinant as a polynomial in β, recovered by Lagrange
/// interpolation from exact evaluations. Entries of the matrix are
/// monomials β^l·γ^p times fixed rationals, so with d = Σ over rows of the
/// largest exponent in the row, d + 1 sample points determine det exactly.
pub fn gram_det_poly(
    spec: &FamilySpec,
    label: &CellLabel,
    mode: &GammaMode,
) -> Result<Poly, EngineError> {
    if matches!(mode, GammaMode::TieToBeta) {
        Params::tied(Coeff::zero()).check(spec.id)?;
    } else {
        // a fixed path weight only commutes with the β sweep where the
        // two-parameter product is defined
        Params::new(Coeff::zero(), Coeff::one()).check(spec.id)?;
    }
    let basis = enumerate_cell_basis(spec, label)?;
    let m = basis.len();
    if m > DET_POLY_MAX_DIM {
        return Err(EngineError::ResourceLimit(format!(
            "cell dimension {m} exceeds the determinant interpolation bound {DET_POLY_MAX_DIM}"
        )));
    }
    let mut structure = vec![vec![None; m]; m];
    for i in 0..m {
        for j in i..m {
            let cell = pair_structure(spec, label, &basis[i], &basis[j])?;
            structure[i][j].clone_from(&cell);
            structure[j][i] = cell;
        }
    }
    let beta_exponent = |entry: &Option<(usize, usize, Coeff)>| match (entry, mode) {
        (None, _) => 0,
        (Some((l, p, _)), GammaMode::TieToBeta) => l + p,
        (Some((l, _, _)), GammaMode::Fixed(_)) => *l,
    };
    let degree_bound: usize = structure
        .iter()
        .map(|row| row.iter().map(beta_exponent).max().unwrap_or(0))
        .sum();

    let samples: Vec<Coeff> = (0..=degree_bound as i64)
        .map(|x| Coeff::from_integer(x.into()))
        .collect();
    let dets = run_tasks(
        samples.clone(),
        |beta| {
            let matrix: Vec<Vec<Coeff>> = structure
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|entry| match entry {
                            None => Coeff::zero(),
                            Some((l, pw, form)) => {
                                let gamma = match mode {
                                    GammaMode::TieToBeta => beta,
                                    GammaMode::Fixed(g) => g,
                                };
                                power(beta, *l) * power(gamma, *pw) * form
                            }
                        })
                        .collect()
                })
                .collect();
            eliminate(&matrix).det
        },
        true,
    );
    lagrange(&samples.into_iter().zip(dets).collect::<Vec<_>>())
}

#[derive(Debug, Clone)]
pub struct SemisimpleReport {
    pub spec: FamilySpec,
    pub semisimple: bool,
    pub reports: Vec<GramReport>,
}

impl SemisimpleReport {
    pub fn degenerate_labels(&self) -> Vec<&CellLabel> {
        self.reports
            .iter()
            .filter(|r| !r.nondegenerate)
            .map(|r| &r.label)
            .collect()
    }
}

/// Semisimplicity at specialized parameters: every cell form nondegenerate.
pub fn is_semisimple_at(spec: &FamilySpec, p: &Params) -> Result<SemisimpleReport, EngineError> {
    p.check(spec.id)?;
    let labels = cell_labels(spec)?;
    let reports = run_tasks(
        labels,
        |label| gram_matrix_impl(spec, label, p, false),
        true,
    );
    let reports = reports.into_iter().collect::<Result<Vec<_>, _>>()?;
    let semisimple = reports.iter().all(|r| r.nondegenerate);
    Ok(SemisimpleReport { spec: *spec, semisimple, reports })
}

#[cfg(test)]
mod tests {
    use families::FamilyId;

    use super::*;

    fn z(n: i64) -> Coeff {
        Coeff::from_integer(n.into())
    }

    #[test]
    fn single_cap_pairing_is_one_loop() {
        let spec = FamilySpec::new(FamilyId::TemperleyLieb, 2).unwrap();
        let poly = gram_det_poly(&spec, &CellLabel::Count(0), &GammaMode::TieToBeta).unwrap();
        assert_eq!(poly.to_string(), "beta");
    }

    #[test]
    fn free_vertices_pair_as_paths() {
        let spec = FamilySpec::new(FamilyId::PlanarRook, 2).unwrap();
        let poly = gram_det_poly(&spec, &CellLabel::Count(1), &GammaMode::TieToBeta).unwrap();
        assert_eq!(poly.to_string(), "beta^2");
        // with the path weight frozen, the determinant is constant in β
        let fixed = gram_det_poly(&spec, &CellLabel::Count(1), &GammaMode::Fixed(z(7))).unwrap();
        assert_eq!(fixed.to_string(), "49");
    }

    #[test]
    fn report_flags_track_rank() {
        let spec = FamilySpec::new(FamilyId::TemperleyLieb, 3).unwrap();
        let degenerate = gram_matrix(&spec, &CellLabel::Count(1), &Params::tied(z(1))).unwrap();
        assert!(!degenerate.nondegenerate);
        assert_eq!(degenerate.rank, 1);
        let generic = gram_matrix(&spec, &CellLabel::Count(1), &Params::tied(z(5))).unwrap();
        assert!(generic.nondegenerate);
        assert_eq!(generic.rank, 2);
    }
}
