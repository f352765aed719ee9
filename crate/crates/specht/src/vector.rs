use std::collections::BTreeMap;

use num::Zero;

use crate::{Coeff, StandardTableau};

/// Exact linear combination of standard polytabloids of one shape. Zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SpechtVector {
    coeffs: BTreeMap<StandardTableau, Coeff>,
}

impl SpechtVector {
    pub fn zero() -> Self {
        SpechtVector::default()
    }

    pub fn basis(t: StandardTableau) -> Self {
        let mut v = SpechtVector::zero();
        v.add_term(t, Coeff::from_integer(1.into()));
        v
    }

    pub fn add_term(&mut self, t: StandardTableau, c: Coeff) {
        if c.is_zero() {
            return;
        }
        debug_assert!(
            self.coeffs.keys().next().is_none_or(|u| u.shape() == t.shape()),
            "mixed shapes in one vector"
        );
        match self.coeffs.entry(t) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &SpechtVector, scale: &Coeff) {
        for (t, c) in &other.coeffs {
            self.add_term(t.clone(), c * scale);
        }
    }

    pub fn negated(&self) -> SpechtVector {
        let mut v = SpechtVector::zero();
        v.add_scaled(self, &Coeff::from_integer((-1).into()));
        v
    }

    pub fn coeff(&self, t: &StandardTableau) -> Coeff {
        self.coeffs.get(t).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&StandardTableau, &Coeff)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }
}
