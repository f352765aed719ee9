//! Algebra elements with exact rational coefficients and the two-parameter
//! diagram product.

use std::collections::BTreeMap;
use std::fmt;

use diagram_core::{compose, Diagram};
use families::{contains, FamilyId, FamilySpec};
use num::{One, Signed, Zero};

use crate::{Coeff, EngineError};

pub(crate) fn power(base: &Coeff, exp: usize) -> Coeff {
    let mut out = Coeff::one();
    for _ in 0..exp {
        out *= base;
    }
    out
}

/// Specialized loop weight β and path weight γ.
///
/// The separate path count only multiplies associatively on families whose
/// blocks have size at most two; everywhere else the two weights must be
/// tied, which [`Params::check`] enforces before any product is formed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Params {
    beta: Coeff,
    gamma: Coeff,
}

impl Params {
    pub fn new(beta: Coeff, gamma: Coeff) -> Self {
        Params { beta, gamma }
    }

    /// The single-parameter specialization γ = β.
    pub fn tied(beta: Coeff) -> Self {
        let gamma = beta.clone();
        Params { beta, gamma }
    }

    /// Validates the γ = β tie where the family requires it.
    pub fn for_family(id: FamilyId, beta: Coeff, gamma: Coeff) -> Result<Self, EngineError> {
        let p = Params { beta, gamma };
        p.check(id)?;
        Ok(p)
    }

    pub fn beta(&self) -> &Coeff {
        &self.beta
    }

    pub fn gamma(&self) -> &Coeff {
        &self.gamma
    }

    pub fn check(&self, id: FamilyId) -> Result<(), EngineError> {
        if !id.small_blocks() && self.beta != self.gamma {
            return Err(EngineError::Mismatch(format!(
                "{id} has blocks larger than two, so the path weight must equal β \
                 (got β = {}, γ = {})",
                self.beta, self.gamma
            )));
        }
        Ok(())
    }

    /// β^loops · γ^paths.
    pub fn scalar(&self, loops: usize, paths: usize) -> Coeff {
        power(&self.beta, loops) * power(&self.gamma, paths)
    }
}

/// A finite rational combination of basis diagrams of one family. Zero
/// coefficients are pruned; every support diagram is a member of the family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    spec: FamilySpec,
    terms: BTreeMap<Diagram, Coeff>,
}

impl Element {
    pub fn zero(spec: FamilySpec) -> Self {
        Element { spec, terms: BTreeMap::new() }
    }

    pub fn basis(spec: FamilySpec, d: Diagram) -> Result<Self, EngineError> {
        let mut out = Element::zero(spec);
        out.add_diagram(d, Coeff::one())?;
        Ok(out)
    }

    pub fn identity(spec: FamilySpec) -> Result<Self, EngineError> {
        Element::basis(spec, Diagram::identity(spec.n))
    }

    pub fn from_terms(
        spec: FamilySpec,
        terms: impl IntoIterator<Item = (Diagram, Coeff)>,
    ) -> Result<Self, EngineError> {
        let mut out = Element::zero(spec);
        for (d, c) in terms {
            out.add_diagram(d, c)?;
        }
        Ok(out)
    }

    /// Adds `c·d`, checking family membership.
    pub fn add_diagram(&mut self, d: Diagram, c: Coeff) -> Result<(), EngineError> {
        if !contains(&self.spec, &d)? {
            return Err(EngineError::Mismatch(format!(
                "diagram {d} is not a basis element of {}",
                self.spec
            )));
        }
        self.add_unchecked(d, c);
        Ok(())
    }

    fn add_unchecked(&mut self, d: Diagram, c: Coeff) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(d);
        match entry {
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

    pub fn add_scaled(&mut self, other: &Element, scale: &Coeff) -> Result<(), EngineError> {
        if other.spec != self.spec {
            return Err(EngineError::Mismatch(format!(
                "cannot add an element of {} into {}",
                other.spec, self.spec
            )));
        }
        for (d, c) in &other.terms {
            self.add_unchecked(d.clone(), c * scale);
        }
        Ok(())
    }

    pub fn scale(&mut self, scale: &Coeff) {
        if scale.is_zero() {
            self.terms.clear();
            return;
        }
        for c in self.terms.values_mut() {
            *c *= scale;
        }
    }

    pub fn spec(&self) -> &FamilySpec {
        &self.spec
    }

    pub fn coeff(&self, d: &Diagram) -> Coeff {
        self.terms.get(d).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Diagram, &Coeff)> {
        self.terms.iter()
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The linear extension of the top-bottom flip of diagrams.
    pub fn involute(&self) -> Element {
        let terms = self
            .terms
            .iter()
            .map(|(d, c)| (d.involute(), c.clone()))
            .collect();
        Element { spec: self.spec, terms }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mag.is_one() {
                write!(f, "{d}")?;
            } else {
                write!(f, "{mag}*{d}")?;
            }
        }
        Ok(())
    }
}

/// The product x·y: stack each diagram of y on top of each diagram of x,
/// weight the removed interior components by β^loops·γ^paths, and collect.
pub fn multiply(x: &Element, y: &Element, p: &Params) -> Result<Element, EngineError> {
    if x.spec != y.spec {
        return Err(EngineError::Mismatch(format!(
            "product of elements of {} and {}",
            x.spec, y.spec
        )));
    }
    let spec = x.spec;
    if !spec.id.supports_products() {
        return Err(EngineError::Unsupported(format!(
            "{} is an index set without a closed product",
            spec.id
        )));
    }
    p.check(spec.id)?;
    let mut out = Element::zero(spec);
    for (dx, cx) in &x.terms {
        for (dy, cy) in &y.terms {
            let step = compose(dy, dx)?;
            let c = cx * cy * p.scalar(step.loops, step.paths);
            debug_assert!(contains(&spec, &step.diagram).unwrap_or(false));
            out.add_unchecked(step.diagram, c);
        }
    }
    Ok(out)
}
