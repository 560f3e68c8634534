//! Closure of certificates under the congruence operations: adding a term,
//! multiplying by a monomial or a polynomial, composing and reversing.
//!
//! None of these re-verify their input; a valid input gives a valid output.

use super::{Certificate, ChainError, LinkStep};
use crate::poly::NatPoly;

impl Certificate {
    /// `start + g ~ end + g`; every spectator absorbs `g`.
    pub fn shift(&self, g: &NatPoly) -> Certificate {
        if g.is_zero() {
            return self.clone();
        }
        Certificate {
            p: self.p.clone(),
            start: &self.start + g,
            end: &self.end + g,
            steps: self
                .steps
                .iter()
                .map(|s| LinkStep::new(s.k, &s.f + g, s.dir))
                .collect(),
        }
    }

    /// `xʲ·start ~ xʲ·end`.
    pub fn mul_monomial(&self, j: u32) -> Certificate {
        if j == 0 {
            return self.clone();
        }
        Certificate {
            p: self.p.clone(),
            start: self.start.shift(j),
            end: self.end.shift(j),
            steps: self
                .steps
                .iter()
                .map(|s| LinkStep::new(s.k + j, s.f.shift(j), s.dir))
                .collect(),
        }
    }

    /// `g·start ~ g·end`.
    ///
    /// Each original step becomes one step per unit monomial of `g` (ascending
    /// exponent, copies consecutive), so the result has
    /// `len() × (sum of g's coefficients)` steps.
    pub fn mul_poly(&self, g: &NatPoly) -> Certificate {
        let units: Vec<u32> = g.unit_monomials().collect();
        let mut steps = Vec::with_capacity(self.steps.len() * units.len());
        for step in &self.steps {
            let before = step.source(&self.p);
            let after = step.target(&self.p);
            // units already moved to `after`, and those still at `before`
            let mut done = NatPoly::zero();
            let mut pending = g.clone();
            for &j in &units {
                let xj = NatPoly::monomial(1u32.into(), j);
                pending = pending.checked_sub(&xj).expect("unit monomial of g");
                let spectator = &(&step.f.shift(j) + &(&done * &after)) + &(&pending * &before);
                steps.push(LinkStep::new(step.k + j, spectator, step.dir));
                done += &xj;
            }
        }
        Certificate {
            p: self.p.clone(),
            start: g * &self.start,
            end: g * &self.end,
            steps,
        }
    }

    /// `self` followed by `next`.
    pub fn concat(&self, next: &Certificate) -> Result<Certificate, ChainError> {
        if self.p != next.p {
            return Err(ChainError::GeneratorMismatch);
        }
        if self.end != next.start {
            return Err(ChainError::EndpointMismatch {
                left: self.end.to_string(),
                right: next.start.to_string(),
            });
        }
        let mut steps = self.steps.clone();
        steps.extend(next.steps.iter().cloned());
        Ok(Certificate {
            p: self.p.clone(),
            start: self.start.clone(),
            end: next.end.clone(),
            steps,
        })
    }

    /// Concatenates a nonempty sequence of chains.
    pub fn concat_all<'a, I>(parts: I) -> Result<Certificate, ChainError>
    where
        I: IntoIterator<Item = &'a Certificate>,
    {
        let mut iter = parts.into_iter();
        let first = iter.next().expect("at least one certificate");
        let mut out = first.clone();
        for next in iter {
            if out.p != next.p {
                return Err(ChainError::GeneratorMismatch);
            }
            if out.end != next.start {
                return Err(ChainError::EndpointMismatch {
                    left: out.end.to_string(),
                    right: next.start.to_string(),
                });
            }
            out.steps.extend(next.steps.iter().cloned());
            out.end = next.end.clone();
        }
        Ok(out)
    }

    /// `end ~ start`.
    pub fn reverse(&self) -> Certificate {
        Certificate {
            p: self.p.clone(),
            start: self.end.clone(),
            end: self.start.clone(),
            steps: self.steps.iter().rev().map(LinkStep::flipped).collect(),
        }
    }
}
