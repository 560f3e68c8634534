//! Rewrite-chain certificates for the congruence on ℕ\[x\] generated by
//! `x = p(x)`.
//!
//! A [`LinkStep`] names one generator substitution `f + xᵏ·x ↔ f + xᵏ·p`; it
//! carries the spectator `f` explicitly so a checker never has to trust the
//! producer's bookkeeping. A [`Certificate`] is a start term, an end term and
//! the steps between them. [`Certificate::verify`] replays the steps using
//! nothing but polynomial arithmetic.

mod json;
mod transform;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::NatPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// `f + xᵏ·x → f + xᵏ·p`
    Expand,
    /// `f + xᵏ·p → f + xᵏ·x`
    Contract,
}

impl Direction {
    pub fn flip(self) -> Direction {
        match self {
            Direction::Expand => Direction::Contract,
            Direction::Contract => Direction::Expand,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinkStep {
    pub k: u32,
    pub f: NatPoly,
    pub dir: Direction,
}

impl LinkStep {
    pub fn new(k: u32, f: NatPoly, dir: Direction) -> Self {
        LinkStep { k, f, dir }
    }

    pub fn expand(k: u32, f: NatPoly) -> Self {
        Self::new(k, f, Direction::Expand)
    }

    pub fn contract(k: u32, f: NatPoly) -> Self {
        Self::new(k, f, Direction::Contract)
    }

    /// The same substitution read backwards.
    pub fn flipped(&self) -> LinkStep {
        LinkStep::new(self.k, self.f.clone(), self.dir.flip())
    }

    /// The term this step applies to.
    pub fn source(&self, p: &NatPoly) -> NatPoly {
        match self.dir {
            Direction::Expand => &self.f + &NatPoly::x().shift(self.k),
            Direction::Contract => &self.f + &p.shift(self.k),
        }
    }

    /// The term this step produces.
    pub fn target(&self, p: &NatPoly) -> NatPoly {
        self.flipped().source(p)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChainError {
    #[error("term does not match the step's decomposition (first difference at x^{exponent})")]
    StepMismatch { exponent: u32 },
    #[error("cannot concatenate: first chain ends at {left}, second starts at {right}")]
    EndpointMismatch { left: String, right: String },
    #[error("certificates use different generators")]
    GeneratorMismatch,
    #[error("malformed certificate at line {line}, column {column}: {message}")]
    Malformed {
        line: usize,
        column: usize,
        message: String,
    },
}

/// Applies one link step to `r`, returning the partner term.
pub fn apply_step(r: &NatPoly, p: &NatPoly, step: &LinkStep) -> Result<NatPoly, ChainError> {
    let expected = step.source(p);
    if *r != expected {
        return Err(ChainError::StepMismatch {
            exponent: first_difference(r, &expected),
        });
    }
    Ok(step.target(p))
}

fn first_difference(a: &NatPoly, b: &NatPoly) -> u32 {
    let mut exps: Vec<u32> = a.terms().chain(b.terms()).map(|(e, _)| e).collect();
    exps.sort_unstable();
    exps.into_iter()
        .find(|e| a.coeff_ref(*e) != b.coeff_ref(*e))
        .expect("terms differ somewhere")
}

/// Outcome of replaying a certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verification {
    Valid,
    /// `index` is the failing step, or `steps.len()` when the replay ends
    /// somewhere other than the stated end.
    Invalid {
        index: usize,
        reason: String,
    },
}

impl Verification {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verification::Valid)
    }

    pub fn failed_at(&self) -> Option<usize> {
        match self {
            Verification::Valid => None,
            Verification::Invalid { index, .. } => Some(*index),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Certificate {
    pub p: NatPoly,
    pub start: NatPoly,
    pub end: NatPoly,
    pub steps: Vec<LinkStep>,
}

impl Certificate {
    /// The empty chain `term ~ term`.
    pub fn identity(p: &NatPoly, term: &NatPoly) -> Self {
        Certificate {
            p: p.clone(),
            start: term.clone(),
            end: term.clone(),
            steps: Vec::new(),
        }
    }

    /// The one-step chain `x ~ p`.
    pub fn generator(p: &NatPoly) -> Self {
        Certificate {
            p: p.clone(),
            start: NatPoly::x(),
            end: p.clone(),
            steps: vec![LinkStep::expand(0, NatPoly::zero())],
        }
    }

    /// A single-step chain starting at the step's source.
    pub fn single(p: &NatPoly, step: LinkStep) -> Self {
        Certificate {
            p: p.clone(),
            start: step.source(p),
            end: step.target(p),
            steps: vec![step],
        }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The terms `r0 = start, r1, …, rn`, or the first failing step.
    pub fn replay(&self) -> Result<Vec<NatPoly>, (usize, ChainError)> {
        let mut terms = Vec::with_capacity(self.steps.len() + 1);
        terms.push(self.start.clone());
        for (i, step) in self.steps.iter().enumerate() {
            let next =
                apply_step(terms.last().expect("nonempty"), &self.p, step).map_err(|e| (i, e))?;
            terms.push(next);
        }
        Ok(terms)
    }

    /// Replays from `start` and checks that the chain lands on `end`.
    pub fn verify(&self) -> Verification {
        let mut current = self.start.clone();
        for (i, step) in self.steps.iter().enumerate() {
            match apply_step(&current, &self.p, step) {
                Ok(next) => current = next,
                Err(e) => {
                    return Verification::Invalid {
                        index: i,
                        reason: e.to_string(),
                    }
                }
            }
        }
        if current != self.end {
            return Verification::Invalid {
                index: self.steps.len(),
                reason: format!("chain ends at {current}, certificate claims {}", self.end),
            };
        }
        Verification::Valid
    }
}

/// Checks `cert` and returns a [`Verification`].
pub fn verify(cert: &Certificate) -> Verification {
    cert.verify()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn np(s: &str) -> NatPoly {
        s.parse().unwrap()
    }

    pub(crate) fn intro_prefix() -> Certificate {
        let p = np("1 + x^2");
        Certificate {
            p: p.clone(),
            start: np("x"),
            end: np("1 + x + x^3"),
            steps: vec![
                LinkStep::expand(0, NatPoly::zero()),
                LinkStep::expand(1, np("1")),
            ],
        }
    }

    #[test]
    fn generator_step() {
        let p = np("1 + x^2");
        let r = apply_step(&np("x"), &p, &LinkStep::expand(0, NatPoly::zero())).unwrap();
        assert_eq!(r, np("1 + x^2"));
    }

    #[test]
    fn shifted_step() {
        let p = np("1 + x^2");
        let r = apply_step(&np("1 + x^2"), &p, &LinkStep::expand(1, np("1"))).unwrap();
        assert_eq!(r, np("1 + x + x^3"));
    }

    #[test]
    fn expand_then_contract_is_identity() {
        let p = np("1 + x + x^2");
        let r = np("3 + 2x^2 + x^4");
        let s = LinkStep::expand(1, np("3 + x^2 + x^4"));
        let there = apply_step(&r, &p, &s).unwrap();
        assert_eq!(apply_step(&there, &p, &s.flipped()).unwrap(), r);
    }

    #[test]
    fn mismatch_reports_exponent() {
        let p = np("1 + x^2");
        let err =
            apply_step(&np("x + x^3"), &p, &LinkStep::expand(0, NatPoly::zero())).unwrap_err();
        assert_eq!(err, ChainError::StepMismatch { exponent: 3 });
    }

    #[test]
    fn intro_chain_verifies() {
        let c = intro_prefix();
        assert!(c.verify().is_valid());
        let terms = c.replay().unwrap();
        assert_eq!(terms, vec![np("x"), np("1 + x^2"), np("1 + x + x^3")]);
    }

    #[test]
    fn empty_chain() {
        let c = Certificate::identity(&np("1 + x^2"), &np("x^3"));
        assert!(c.verify().is_valid());
        let mut bad = c.clone();
        bad.end = np("x");
        assert_eq!(bad.verify().failed_at(), Some(0));
    }

    #[test]
    fn corrupted_step_fails_at_index() {
        let mut c = intro_prefix();
        c.steps[1].k = 2;
        assert_eq!(c.verify().failed_at(), Some(1));
        let mut c = intro_prefix();
        c.end = np("1 + x^3");
        assert_eq!(c.verify().failed_at(), Some(2));
    }
}
