use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::{Coeff, Poly};

/// Sign and magnitude rendering of a coefficient.
pub trait CoeffDisplay {
    fn is_negative_coeff(&self) -> bool;
    fn is_unit_magnitude(&self) -> bool;
    fn magnitude_text(&self) -> String;
}

impl CoeffDisplay for BigUint {
    fn is_negative_coeff(&self) -> bool {
        false
    }
    fn is_unit_magnitude(&self) -> bool {
        self.is_one()
    }
    fn magnitude_text(&self) -> String {
        self.to_string()
    }
}

impl CoeffDisplay for BigInt {
    fn is_negative_coeff(&self) -> bool {
        self.is_negative()
    }
    fn is_unit_magnitude(&self) -> bool {
        self.magnitude().is_one()
    }
    fn magnitude_text(&self) -> String {
        self.magnitude().to_string()
    }
}

impl CoeffDisplay for BigRational {
    fn is_negative_coeff(&self) -> bool {
        self.is_negative()
    }
    fn is_unit_magnitude(&self) -> bool {
        self.abs().is_one()
    }
    fn magnitude_text(&self) -> String {
        let a = self.abs();
        if a.is_integer() {
            a.to_string()
        } else {
            format!("({a})")
        }
    }
}

/// Ascending exponents: `3 + 2x^3 + 4x^5`, `1 - x + x^2`, `0`.
impl<C: Coeff + CoeffDisplay> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let neg = c.is_negative_coeff();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = c.is_unit_magnitude();
            if e == 0 || !unit {
                f.write_str(&c.magnitude_text())?;
            }
            match e {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{e}")?,
            }
        }
        Ok(())
    }
}

impl<C: Coeff + CoeffDisplay> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}
