//! Certificate synthesis for `q1 ~ q2` modulo `x = p(x)`.
//!
//! The pipeline: a ring cofactor `r̃` with `q1 − q2 = r̃·(p − x)` gives a chain
//! `q1 + s ~ q2 + s` ([`common_summand`]), and cancellation of the common summand `s`
//! between high elements ([`cancel_high`]) turns that into `q1 ~ q2`.
//! Chains are long; [`bfs_search`] finds short ones for small instances.

mod cancel;
mod search;
mod witness;

pub use cancel::{cancel_high, inverse_witness, unit_absorb, unit_element, UnitData};
pub use search::bfs_search;
pub use witness::{
    highness_oracle, ladder_down, ladder_up, witness_multiple, witness_power, LeWitness,
};

use thiserror::Error;

use crate::chain::Certificate;
use crate::hypotheses::{
    check_ring_implication, check_synthesis_preconditions, is_cofactor, HypothesisReport,
    RingVerdict,
};
use crate::poly::{IntPoly, NatPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SynthError {
    #[error("p has zero constant term")]
    ZeroConstantTerm,
    #[error("p has degree below 2")]
    DegreeBelowTwo,
    #[error("{0} is constant, so it is not high")]
    ConstantElement(String),
    #[error("{0}")]
    InvalidArgument(String),
    #[error("cofactor does not satisfy q1 - q2 = r(p - x)")]
    BadCofactor,
    #[error("input certificate fails at step {index}: {reason}")]
    InvalidCertificate { index: usize, reason: String },
    #[error("certificate endpoints are not a1 + b and a2 + b for a common b")]
    NotACommonSummand,
    #[error("hypotheses fail: {}", .0.failures().join(", "))]
    Hypotheses(HypothesisReport),
    #[error("p - x does not divide q1 - q2 over the integers")]
    RingImplication(RingVerdict),
}

/// `q1 + s ~ q2 + s` from a cofactor `r̃` with `q1 − q2 = r̃·(p − x)`.
///
/// With `r = −r̃ = r1 − r2` split into non-negative parts, `s = r1·x + r2·p`.
/// The chain expands `r1·x` to `r1·p` one unit monomial at a time, then
/// contracts `r2·p` to `r2·x`, landing on `q1 + r1·p + r2·x = q2 + s`.
pub fn common_summand(
    p: &NatPoly,
    q1: &NatPoly,
    q2: &NatPoly,
    rtilde: &IntPoly,
) -> Result<(NatPoly, Certificate), SynthError> {
    if !is_cofactor(p, q1, q2, rtilde) {
        return Err(SynthError::BadCofactor);
    }
    let r = -rtilde.clone();
    let (r1, r2) = r.pos_neg_split();
    let r1x = r1.shift(1);
    let r2p = &r2 * p;
    let s = &r1x + &r2p;
    let gen = Certificate::generator(p);
    let expand = gen.mul_poly(&r1).shift(&(q1 + &r2p));
    let contract = gen.mul_poly(&r2).reverse().shift(&(q1 + &(&r1 * p)));
    let cert = Certificate::concat_all(&[expand, contract]).expect("phases chain by construction");
    debug_assert_eq!(cert.end, q2 + &s);
    Ok((s, cert))
}

/// A certificate for `q1 ~ q2`, or the reason none can be built.
///
/// Hypothesis failures are reported before the ring check. Equal inputs give
/// the empty chain.
pub fn synthesize(p: &NatPoly, q1: &NatPoly, q2: &NatPoly) -> Result<Certificate, SynthError> {
    let report = check_synthesis_preconditions(p, q1, q2);
    if !report.main_theorem_ok() {
        return Err(SynthError::Hypotheses(report));
    }
    if q1 == q2 {
        return Ok(Certificate::identity(p, q1));
    }
    let verdict = check_ring_implication(&IntPoly::x(), &p.to_int(), &q1.to_int(), &q2.to_int())
        .expect("deg p ≥ 2, so p differs from x");
    let rtilde = match &verdict.cofactor {
        Some(r) if verdict.holds => r.clone(),
        _ => return Err(SynthError::RingImplication(verdict)),
    };
    let (_, k) = common_summand(p, q1, q2, &rtilde)?;
    cancel_high(p, &k, q1, q2)
}
