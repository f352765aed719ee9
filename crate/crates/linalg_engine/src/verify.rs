//! Structural verification sweeps over a whole family at one size:
//! dimension identities, closure and filtration of the product, the
//! involution anti-automorphism, and the left module law on cell bases.

use combinatorics::Int;
use diagram_core::{compose, Diagram};
use families::{
    algebra_dim, cell_dim, cell_labels, contains, enumerate_basis, enumerate_cell_basis,
    FamilySpec,
};
use num::Zero;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::cell::{act_on_cell, CellVector};
use crate::element::{multiply, Element, Params};
use crate::{run_tasks, Coeff, EngineError};

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub spec: FamilySpec,
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Seed for every sampled check; equal options give equal reports.
    pub seed: u64,
    /// Pairs drawn once the exhaustive count exceeds `pair_budget`.
    pub samples: usize,
    /// Largest pair count still checked exhaustively.
    pub pair_budget: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { seed: 0x5eed, samples: 200, pair_budget: 4096 }
    }
}

fn family_params(spec: &FamilySpec) -> Params {
    let two = Coeff::from_integer(2.into());
    if spec.id.small_blocks() {
        Params::new(two, Coeff::from_integer(3.into()))
    } else {
        Params::tied(two)
    }
}

fn sample_pairs(
    count: usize,
    opts: &VerifyOptions,
    rng: &mut ChaCha8Rng,
) -> (Vec<(usize, usize)>, String) {
    let total = count * count;
    if total <= opts.pair_budget {
        let pairs = (0..count).flat_map(|i| (0..count).map(move |j| (i, j))).collect();
        (pairs, format!("all {total} pairs"))
    } else {
        let pairs = (0..opts.samples)
            .map(|_| (rng.random_range(0..count), rng.random_range(0..count)))
            .collect();
        (pairs, format!("{} of {total} pairs (seed {})", opts.samples, opts.seed))
    }
}

fn dimension_check(spec: &FamilySpec, basis: &[Diagram]) -> Result<CheckOutcome, EngineError> {
    let expected = algebra_dim(spec);
    let counted = Int::from(basis.len());
    let mut passed = counted == expected;
    let mut detail = format!("enumerated {counted}, closed form {expected}");
    if spec.id.supports_cells() {
        let mut square_sum = Int::zero();
        for label in cell_labels(spec)? {
            let d = cell_dim(spec, &label)?;
            square_sum += &d * &d;
        }
        passed = passed && square_sum == expected;
        detail.push_str(&format!(", cell square sum {square_sum}"));
    }
    Ok(CheckOutcome { name: "dimension", passed, detail })
}

fn closure_filtration_checks(
    spec: &FamilySpec,
    basis: &[Diagram],
    opts: &VerifyOptions,
    rng: &mut ChaCha8Rng,
    parallel: bool,
) -> Result<Vec<CheckOutcome>, EngineError> {
    let (pairs, how) = sample_pairs(basis.len(), opts, rng);
    let results = run_tasks(
        pairs,
        |&(i, j)| -> Result<(bool, bool), EngineError> {
            let product = compose(&basis[j], &basis[i])?;
            let inside = contains(spec, &product.diagram)?;
            let bound = basis[i].propagating_count().min(basis[j].propagating_count());
            let filtered = product.diagram.propagating_count() <= bound;
            Ok((inside, filtered))
        },
        parallel,
    );
    let mut closed = true;
    let mut filtered = true;
    for r in results {
        let (inside, below) = r?;
        closed &= inside;
        filtered &= below;
    }
    Ok(vec![
        CheckOutcome { name: "closure", passed: closed, detail: how.clone() },
        CheckOutcome { name: "filtration", passed: filtered, detail: how },
    ])
}

fn involution_check(
    spec: &FamilySpec,
    basis: &[Diagram],
    opts: &VerifyOptions,
    rng: &mut ChaCha8Rng,
    parallel: bool,
) -> Result<CheckOutcome, EngineError> {
    let p = family_params(spec);
    let (pairs, how) = sample_pairs(basis.len(), opts, rng);
    let results = run_tasks(
        pairs,
        |&(i, j)| -> Result<bool, EngineError> {
            let x = Element::basis(*spec, basis[i].clone())?;
            let y = Element::basis(*spec, basis[j].clone())?;
            let lhs = multiply(&x, &y, &p)?.involute();
            let rhs = multiply(&y.involute(), &x.involute(), &p)?;
            Ok(lhs == rhs)
        },
        parallel,
    );
    let mut passed = true;
    for r in results {
        passed &= r?;
    }
    Ok(CheckOutcome { name: "involution", passed, detail: how })
}

fn module_law_check(
    spec: &FamilySpec,
    basis: &[Diagram],
    opts: &VerifyOptions,
    rng: &mut ChaCha8Rng,
    parallel: bool,
) -> Result<CheckOutcome, EngineError> {
    let p = family_params(spec);
    let labels = cell_labels(spec)?;
    let mut cases = Vec::new();
    for label in &labels {
        let cell = enumerate_cell_basis(spec, label)?;
        for v in cell {
            for i in 0..basis.len() {
                for j in 0..basis.len() {
                    cases.push((i, j, label.clone(), v.clone()));
                }
            }
        }
    }
    let how;
    if cases.len() > opts.pair_budget {
        cases = (0..opts.samples)
            .map(|_| cases[rng.random_range(0..cases.len())].clone())
            .collect();
        how = format!("{} sampled cases (seed {})", cases.len(), opts.seed);
    } else {
        how = format!("all {} cases", cases.len());
    }
    let results = run_tasks(
        cases,
        |(i, j, label, v)| -> Result<bool, EngineError> {
            let unit = CellVector::basis(*spec, label.clone(), v)?;
            let inner = act_on_cell(&basis[*j], &unit, &p)?;
            let lhs = act_on_cell(&basis[*i], &inner, &p)?;
            let x = Element::basis(*spec, basis[*i].clone())?;
            let y = Element::basis(*spec, basis[*j].clone())?;
            let product = multiply(&x, &y, &p)?;
            let mut rhs = CellVector::zero(*spec, label.clone());
            for (d, c) in product.terms() {
                rhs.add_scaled(&act_on_cell(d, &unit, &p)?, c)?;
            }
            Ok(lhs == rhs)
        },
        parallel,
    );
    let mut passed = true;
    for r in results {
        passed &= r?;
    }
    Ok(CheckOutcome { name: "module law", passed, detail: how })
}

fn verify_family_impl(
    spec: &FamilySpec,
    opts: &VerifyOptions,
    parallel: bool,
) -> Result<VerifyReport, EngineError> {
    let basis = enumerate_basis(spec)?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut checks = vec![dimension_check(spec, &basis)?];
    if spec.id.supports_products() {
        checks.extend(closure_filtration_checks(spec, &basis, opts, &mut rng, parallel)?);
        checks.push(involution_check(spec, &basis, opts, &mut rng, parallel)?);
        if spec.id.supports_cell_basis() {
            checks.push(module_law_check(spec, &basis, opts, &mut rng, parallel)?);
        }
    }
    Ok(VerifyReport { spec: *spec, checks })
}

/// Run every applicable structural check for one family at one size.
pub fn verify_family(spec: &FamilySpec, opts: &VerifyOptions) -> Result<VerifyReport, EngineError> {
    verify_family_impl(spec, opts, true)
}

/// Single-threaded [`verify_family`]; the benchmark baseline.
pub fn verify_family_serial(
    spec: &FamilySpec,
    opts: &VerifyOptions,
) -> Result<VerifyReport, EngineError> {
    verify_family_impl(spec, opts, false)
}
