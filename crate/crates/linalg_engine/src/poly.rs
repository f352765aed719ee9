//! Univariate polynomials in β with exact rational coefficients, recovered
//! from point evaluations by Lagrange interpolation.

use std::fmt;

use num::{One, Signed, Zero};

use crate::{Coeff, EngineError};

/// Coefficients ascending by degree; no trailing zeros; the zero polynomial
/// stores nothing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Coeff>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Coeff) -> Self {
        Poly::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<Coeff>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn eval(&self, x: &Coeff) -> Coeff {
        let mut acc = Coeff::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn is_root(&self, x: &Coeff) -> bool {
        self.eval(x).is_zero()
    }

    /// Divides out one factor (β − r) by synthetic division; `None` when r
    /// is not a root.
    pub fn divide_root(&self, r: &Coeff) -> Option<Poly> {
        let d = self.degree()?;
        if d == 0 {
            return None;
        }
        let mut quotient = vec![Coeff::zero(); d];
        let mut carry = Coeff::zero();
        for i in (1..=d).rev() {
            carry = &self.coeffs[i] + carry * r;
            quotient[i - 1] = carry.clone();
        }
        let remainder = &self.coeffs[0] + carry * r;
        if remainder.is_zero() {
            Some(Poly::from_coeffs(quotient))
        } else {
            None
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "beta")?;
                    } else {
                        write!(f, "beta^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// The unique polynomial of degree < points.len() through the given points.
/// The sample abscissae must be pairwise distinct.
pub fn lagrange(points: &[(Coeff, Coeff)]) -> Result<Poly, EngineError> {
    let k = points.len();
    let mut acc = vec![Coeff::zero(); k.max(1)];
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut num = vec![Coeff::one()];
        let mut den = Coeff::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if j == i {
                continue;
            }
            num = mul_linear(&num, xj);
            let d = xi - xj;
            if d.is_zero() {
                return Err(EngineError::Mismatch(format!(
                    "duplicate interpolation point β = {xi}"
                )));
            }
            den *= d;
        }
        let w = yi / den;
        for (slot, c) in acc.iter_mut().zip(num) {
            *slot += c * &w;
        }
    }
    Ok(Poly::from_coeffs(acc))
}

/// Multiplies the coefficient vector by (β − root).
fn mul_linear(coeffs: &[Coeff], root: &Coeff) -> Vec<Coeff> {
    let mut out = vec![Coeff::zero(); coeffs.len() + 1];
    for (i, c) in coeffs.iter().enumerate() {
        out[i + 1] += c;
        out[i] -= c * root;
    }
    out
}
