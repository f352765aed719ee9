//! Cell-module vectors: the diagram action on half diagrams and the
//! bilinear pairing that fills Gram matrices.
//!
//! A basis vector of the cell module is a half diagram together with one
//! standard tableau per symmetry class of its defect blocks. Acting with a
//! diagram glues it below the half; the defect permutation this induces is
//! pushed into the tableau factors and straightened. Pairing two halves
//! glues them face to face; each matched defect class contributes the Specht
//! form at the induced permutation.

use std::collections::BTreeMap;

use combinatorics::{IntegerPartition, Perm};
use diagram_core::{glue_onto_half, pair_halves, Diagram, HalfDiagram};
use families::{
    cell_symmetry, contains, CellElement, CellLabel, CellSymmetry, FamilySpec,
};
use itertools::Itertools;
use num::{One, Zero};
use specht::{act, specht_form, SpechtVector, StandardTableau};

use crate::element::Params;
use crate::{Coeff, EngineError};

type CellKey = (HalfDiagram, Vec<StandardTableau>);

/// A finite rational combination of cell-basis vectors for one label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellVector {
    spec: FamilySpec,
    label: CellLabel,
    terms: BTreeMap<CellKey, Coeff>,
}

impl CellVector {
    pub fn zero(spec: FamilySpec, label: CellLabel) -> Self {
        CellVector { spec, label, terms: BTreeMap::new() }
    }

    pub fn basis(spec: FamilySpec, label: CellLabel, elem: &CellElement) -> Result<Self, EngineError> {
        let mut out = CellVector::zero(spec, label);
        out.add_term(elem, Coeff::one())?;
        Ok(out)
    }

    pub fn add_term(&mut self, elem: &CellElement, c: Coeff) -> Result<(), EngineError> {
        validate_cell_element(&self.spec, &self.label, elem)?;
        self.add_unchecked(elem.half.clone(), elem.tableaux.clone(), c);
        Ok(())
    }

    fn add_unchecked(&mut self, half: HalfDiagram, tableaux: Vec<StandardTableau>, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((half, tableaux)) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &CellVector, scale: &Coeff) -> Result<(), EngineError> {
        if other.spec != self.spec || other.label != self.label {
            return Err(EngineError::Mismatch(
                "cell vectors live in different cell modules".into(),
            ));
        }
        for ((h, t), c) in &other.terms {
            self.add_unchecked(h.clone(), t.clone(), c * scale);
        }
        Ok(())
    }

    pub fn spec(&self) -> &FamilySpec {
        &self.spec
    }

    pub fn label(&self) -> &CellLabel {
        &self.label
    }

    pub fn coeff(&self, elem: &CellElement) -> Coeff {
        self.terms
            .get(&(elem.half.clone(), elem.tableaux.clone()))
            .cloned()
            .unwrap_or_else(Coeff::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&HalfDiagram, &[StandardTableau], &Coeff)> {
        self.terms.iter().map(|((h, t), c)| (h, t.as_slice(), c))
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Tableau shapes a label prescribes, in symmetry-class order.
pub(crate) fn label_shapes(label: &CellLabel) -> Vec<IntegerPartition> {
    match label {
        CellLabel::Partition(lam) => vec![lam.clone()],
        CellLabel::Pair(mu, nu) => vec![mu.clone(), nu.clone()],
        CellLabel::SizeTuple(entries) => entries.iter().map(|(_, lam)| lam.clone()).collect(),
        CellLabel::Count(_) | CellLabel::Word(_) => Vec::new(),
    }
}

fn validate_cell_element(
    spec: &FamilySpec,
    label: &CellLabel,
    elem: &CellElement,
) -> Result<(), EngineError> {
    if elem.half.n() != spec.n {
        return Err(EngineError::Mismatch(format!(
            "half diagram on {} vertices in a module of {}",
            elem.half.n(),
            spec
        )));
    }
    let shapes = label_shapes(label);
    if elem.tableaux.len() != shapes.len() {
        return Err(EngineError::Mismatch(format!(
            "label {label} carries {} tableau slots, element has {}",
            shapes.len(),
            elem.tableaux.len()
        )));
    }
    let classes = defect_classes(spec, label, &elem.half)?;
    for (i, shape) in shapes.iter().enumerate() {
        if elem.tableaux[i].shape() != *shape {
            return Err(EngineError::Mismatch(format!(
                "tableau {} has shape {}, label {label} wants {shape}",
                i,
                elem.tableaux[i].shape()
            )));
        }
        if elem.tableaux[i].size() != classes[i].len() {
            return Err(EngineError::Mismatch(format!(
                "half diagram has {} defects in class {}, tableau covers {}",
                classes[i].len(),
                i,
                elem.tableaux[i].size()
            )));
        }
    }
    Ok(())
}

/// Defect slots of `half` grouped into the family's symmetry classes, each
/// class listing global slot indices in least-vertex order. Classes carrying
/// no tableau data (planar families, the pinned slot) are omitted.
fn defect_classes(
    spec: &FamilySpec,
    label: &CellLabel,
    half: &HalfDiagram,
) -> Result<Vec<Vec<usize>>, EngineError> {
    let slots = half.defect_blocks();
    let size_of = |i: usize| half.blocks()[slots[i]].len();
    Ok(match cell_symmetry(spec.id) {
        CellSymmetry::Trivial => Vec::new(),
        CellSymmetry::Single => vec![(0..slots.len()).collect()],
        CellSymmetry::SingleWithPin => {
            let pin = (0..slots.len())
                .find(|&i| half.blocks()[slots[i]].contains(&(spec.n - 1)))
                .ok_or_else(|| {
                    EngineError::Mismatch("no defect block contains the pinned vertex".into())
                })?;
            vec![(0..slots.len()).filter(|&i| i != pin).collect()]
        }
        CellSymmetry::BySize => match label {
            CellLabel::SizeTuple(entries) => entries
                .iter()
                .map(|(k, _)| (0..slots.len()).filter(|&i| size_of(i) == *k).collect())
                .collect(),
            _ => {
                return Err(EngineError::Mismatch(format!(
                    "label {label} does not carry block sizes"
                )))
            }
        },
        CellSymmetry::ByParity => vec![
            (0..slots.len()).filter(|&i| size_of(i) % 2 == 1).collect(),
            (0..slots.len()).filter(|&i| size_of(i) % 2 == 0).collect(),
        ],
    })
}

/// Restricts a global defect-slot map to one symmetry class, relabelled to
/// positions within the class.
fn class_perm(
    from: &[usize],
    to: &[usize],
    map: &Perm,
) -> Result<Perm, EngineError> {
    let images = from
        .iter()
        .map(|&slot| {
            let target = map.apply(slot);
            to.iter().position(|&t| t == target).ok_or_else(|| {
                EngineError::Mismatch(
                    "induced defect permutation crosses a symmetry class".into(),
                )
            })
        })
        .collect::<Result<Vec<usize>, EngineError>>()?;
    Perm::from_images(images)
        .map_err(|e| EngineError::Mismatch(format!("induced class map: {e}")))
}

/// Left action of a basis diagram on a cell vector: glue `d` below each
/// half, drop terms whose defects die or merge, scale by β^loops·γ^paths,
/// and straighten the permuted tableaux.
pub fn act_on_cell(d: &Diagram, v: &CellVector, p: &Params) -> Result<CellVector, EngineError> {
    let spec = *v.spec();
    p.check(spec.id)?;
    if !contains(&spec, d)? {
        return Err(EngineError::Mismatch(format!(
            "diagram {d} is not a basis element of {spec}"
        )));
    }
    let mut out = CellVector::zero(spec, v.label().clone());
    for ((half, tabs), c) in &v.terms {
        let Some(step) = glue_onto_half(d, half)? else {
            continue;
        };
        let scalar = p.scalar(step.loops, step.paths) * c;
        if scalar.is_zero() {
            continue;
        }
        let from = defect_classes(&spec, v.label(), half)?;
        let to = defect_classes(&spec, v.label(), &step.half)?;
        let mut factors: Vec<SpechtVector> = Vec::with_capacity(from.len());
        for (i, t) in tabs.iter().enumerate() {
            let sigma = class_perm(&from[i], &to[i], &step.perm)?;
            factors.push(act(&sigma, &SpechtVector::basis(t.clone()))?);
        }
        if factors.is_empty() {
            out.add_unchecked(step.half, Vec::new(), scalar);
            continue;
        }
        let supports: Vec<Vec<(&StandardTableau, &Coeff)>> =
            factors.iter().map(|f| f.iter().collect()).collect();
        for combo in supports.into_iter().multi_cartesian_product() {
            let mut coeff = scalar.clone();
            let mut tableaux = Vec::with_capacity(combo.len());
            for (t, tc) in combo {
                coeff *= tc;
                tableaux.push(t.clone());
            }
            out.add_unchecked(step.half.clone(), tableaux, coeff);
        }
    }
    Ok(out)
}

/// Glue data of a basis pairing: interior component counts and the
/// class-restricted Specht form product, which is parameter-free.
pub(crate) fn pair_structure(
    spec: &FamilySpec,
    label: &CellLabel,
    a: &CellElement,
    b: &CellElement,
) -> Result<Option<(usize, usize, Coeff)>, EngineError> {
    validate_cell_element(spec, label, a)?;
    validate_cell_element(spec, label, b)?;
    let Some(pairing) = pair_halves(&a.half, &b.half)? else {
        return Ok(None);
    };
    let from = defect_classes(spec, label, &a.half)?;
    let to = defect_classes(spec, label, &b.half)?;
    let mut form = Coeff::one();
    for i in 0..from.len() {
        let sigma = class_perm(&from[i], &to[i], &pairing.perm)?;
        form *= specht_form(&b.tableaux[i], &sigma, &a.tableaux[i])?;
    }
    Ok(Some((pairing.loops, pairing.paths, form)))
}

/// The bilinear form on two cell-basis vectors: 0 when the glued halves do
/// not match defects bijectively, otherwise β^loops·γ^paths times the Specht
/// form at the induced permutation.
pub fn pair_cell_elements(
    spec: &FamilySpec,
    label: &CellLabel,
    a: &CellElement,
    b: &CellElement,
    p: &Params,
) -> Result<Coeff, EngineError> {
    p.check(spec.id)?;
    match pair_structure(spec, label, a, b)? {
        None => Ok(Coeff::zero()),
        Some((loops, paths, form)) => Ok(p.scalar(loops, paths) * form),
    }
}

/// Bilinear extension of [`pair_cell_elements`] to cell vectors.
pub fn pair_vectors(v: &CellVector, w: &CellVector, p: &Params) -> Result<Coeff, EngineError> {
    if v.spec != w.spec || v.label != w.label {
        return Err(EngineError::Mismatch(
            "pairing of vectors from different cell modules".into(),
        ));
    }
    let mut total = Coeff::zero();
    for ((h1, t1), c1) in &v.terms {
        for ((h2, t2), c2) in &w.terms {
            let a = CellElement { half: h1.clone(), tableaux: t1.clone() };
            let b = CellElement { half: h2.clone(), tableaux: t2.clone() };
            total += pair_cell_elements(&v.spec, &v.label, &a, &b, p)? * c1 * c2;
        }
    }
    Ok(total)
}
