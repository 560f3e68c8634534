//! Deciding when an implication `p1 = p2 ⇒ q1 = q2` holds ring-theoretically,
//! the complex-root route to it, and the preconditions for rig synthesis.
//!
//! Cofactors are always reported relative to the divisor `d = p2 − p1`. With
//! `p1 = x` and `p2 = p` this is `p(x) − x`, the polynomial the main
//! synthesis works with.

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::{gcd, squarefree, IntPoly, NatPoly, Poly, RatPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HypothesisError {
    #[error("p1 = p2, so the hypothesis generates the trivial relation")]
    DegenerateDivisor,
}

/// Whether `d = p2 − p1` divides `q1 − q2` in ℤ\[x\].
///
/// Exactly one of `cofactor` and `remainder` is present. When the division
/// fails over ℚ the remainder is the rational one; when it succeeds over ℚ
/// with a non-integral quotient the remainder is where integer long division
/// gets stuck.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingVerdict {
    pub holds: bool,
    /// `r` with `q1 − q2 = r·d`.
    pub cofactor: Option<IntPoly>,
    pub remainder: Option<RatPoly>,
}

/// Individually testable hypothesis flags. `None` means not evaluated by the
/// operation that produced the report.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisReport {
    pub primitive: Option<bool>,
    pub squarefree: Option<bool>,
    pub roots_condition: Option<bool>,
    pub constant_term_ok: Option<bool>,
    pub degree_ok: Option<bool>,
    pub q1_nonconstant: Option<bool>,
    pub q2_nonconstant: Option<bool>,
}

impl HypothesisReport {
    /// The hypotheses of the ring-to-rig theorem: `p(0) ≠ 0`, `deg p ≥ 2`,
    /// `q1` and `q2` non-constant.
    pub fn main_theorem_ok(&self) -> bool {
        [
            self.constant_term_ok,
            self.degree_ok,
            self.q1_nonconstant,
            self.q2_nonconstant,
        ]
        .iter()
        .all(|f| *f == Some(true))
    }

    /// Primitivity, squarefreeness and the root condition together.
    pub fn complex_route_ok(&self) -> bool {
        [self.primitive, self.squarefree, self.roots_condition]
            .iter()
            .all(|f| *f == Some(true))
    }

    /// Names of the evaluated flags that are false.
    pub fn failures(&self) -> Vec<&'static str> {
        [
            ("primitive", self.primitive),
            ("squarefree", self.squarefree),
            ("roots_condition", self.roots_condition),
            ("constant_term_ok", self.constant_term_ok),
            ("degree_ok", self.degree_ok),
            ("q1_nonconstant", self.q1_nonconstant),
            ("q2_nonconstant", self.q2_nonconstant),
        ]
        .into_iter()
        .filter(|(_, f)| *f == Some(false))
        .map(|(n, _)| n)
        .collect()
    }

    /// Fills every flag `self` leaves unevaluated from `other`.
    pub fn merge(mut self, other: &HypothesisReport) -> HypothesisReport {
        self.primitive = self.primitive.or(other.primitive);
        self.squarefree = self.squarefree.or(other.squarefree);
        self.roots_condition = self.roots_condition.or(other.roots_condition);
        self.constant_term_ok = self.constant_term_ok.or(other.constant_term_ok);
        self.degree_ok = self.degree_ok.or(other.degree_ok);
        self.q1_nonconstant = self.q1_nonconstant.or(other.q1_nonconstant);
        self.q2_nonconstant = self.q2_nonconstant.or(other.q2_nonconstant);
        self
    }
}

fn divisor(p1: &IntPoly, p2: &IntPoly) -> Result<IntPoly, HypothesisError> {
    let d = p2 - p1;
    if d.is_zero() {
        return Err(HypothesisError::DegenerateDivisor);
    }
    Ok(d)
}

/// Integer long division of `a` by `d`, stopping at the first leading
/// coefficient not divisible by `lc(d)`. Returns the remainder reached.
fn integer_long_division_remainder(a: &IntPoly, d: &IntPoly) -> IntPoly {
    let dd = d.degree().expect("nonzero divisor");
    let lc = d.leading_coeff().expect("nonzero divisor").clone();
    let mut rem = a.clone();
    while let Some(rd) = rem.degree() {
        if rd < dd {
            break;
        }
        let top = rem.leading_coeff().expect("nonzero");
        if !(top % &lc).is_zero() {
            break;
        }
        let t = Poly::monomial(top / &lc, rd - dd);
        rem = &rem - &(&t * d);
    }
    rem
}

fn verdict_for(diff: &IntPoly, d: &IntPoly) -> RingVerdict {
    let (quotient, rem) = diff.to_rat().divrem(&d.to_rat()).expect("nonzero divisor");
    if !rem.is_zero() {
        return RingVerdict {
            holds: false,
            cofactor: None,
            remainder: Some(rem),
        };
    }
    match quotient.to_int() {
        Ok(r) => {
            debug_assert_eq!(&r * d, *diff);
            RingVerdict {
                holds: true,
                cofactor: Some(r),
                remainder: None,
            }
        }
        Err(_) => RingVerdict {
            holds: false,
            cofactor: None,
            remainder: Some(integer_long_division_remainder(diff, d).to_rat()),
        },
    }
}

/// Decides whether `p2 − p1` divides `q1 − q2` in ℤ\[x\].
pub fn check_ring_implication(
    p1: &IntPoly,
    p2: &IntPoly,
    q1: &IntPoly,
    q2: &IntPoly,
) -> Result<RingVerdict, HypothesisError> {
    let d = divisor(p1, p2)?;
    Ok(verdict_for(&(q1 - q2), &d))
}

/// Reports primitivity and squarefreeness of `d = p2 − p1` and whether every
/// complex root `t` of `d` satisfies `q1(t) = q2(t)`, decided exactly by
/// division over ℚ. Also returns the ring verdict.
///
/// Panics if all three flags hold but the ring implication fails: by Gauss's
/// lemma that cannot happen.
pub fn check_complex_route(
    p1: &IntPoly,
    p2: &IntPoly,
    q1: &IntPoly,
    q2: &IntPoly,
) -> Result<(HypothesisReport, RingVerdict), HypothesisError> {
    let d = divisor(p1, p2)?;
    let diff = q1 - q2;
    // Every complex root of d is a root of q1 − q2 iff the squarefree part
    // d / gcd(d, d′) divides q1 − q2; for squarefree d that part is d itself.
    let d_rat = d.to_rat();
    let (radical, _) = d_rat
        .divrem(&gcd(&d_rat, &d.derivative().to_rat()))
        .expect("gcd of a nonzero polynomial is nonzero");
    let (_, rem) = diff.to_rat().divrem(&radical).expect("nonzero divisor");
    let report = HypothesisReport {
        primitive: Some(d.is_primitive()),
        squarefree: Some(squarefree(&d).expect("nonzero divisor")),
        roots_condition: Some(rem.is_zero()),
        ..HypothesisReport::default()
    };
    let verdict = verdict_for(&diff, &d);
    if report.complex_route_ok() {
        assert!(
            verdict.holds,
            "primitive squarefree divisor with vanishing remainder must divide over Z"
        );
    }
    Ok((report, verdict))
}

/// The ring-to-rig theorem's conditions on `p`, `q1`, `q2`.
pub fn check_synthesis_preconditions(p: &NatPoly, q1: &NatPoly, q2: &NatPoly) -> HypothesisReport {
    HypothesisReport {
        constant_term_ok: Some(!p.constant_term().is_zero()),
        degree_ok: Some(p.degree().is_some_and(|d| d >= 2)),
        q1_nonconstant: Some(!q1.is_constant()),
        q2_nonconstant: Some(!q2.is_constant()),
        ..HypothesisReport::default()
    }
}

/// Everything known about `(x, p, q1, q2)`: the main-theorem flags, the
/// complex-route flags for `p(x) − x`, and the ring verdict.
pub fn full_report(p: &NatPoly, q1: &NatPoly, q2: &NatPoly) -> (HypothesisReport, RingVerdict) {
    let pre = check_synthesis_preconditions(p, q1, q2);
    let x = IntPoly::x();
    let p = p.to_int();
    if p == x {
        let verdict = RingVerdict {
            holds: q1 == q2,
            cofactor: (q1 == q2).then(IntPoly::zero),
            remainder: (q1 != q2).then(|| (q1.to_int() - q2.to_int()).to_rat()),
        };
        return (pre, verdict);
    }
    let (route, verdict) =
        check_complex_route(&x, &p, &q1.to_int(), &q2.to_int()).expect("p differs from x");
    (pre.merge(&route), verdict)
}

/// `p(x) − x` as an integer polynomial.
pub fn fixed_point_divisor(p: &NatPoly) -> IntPoly {
    &p.to_int() - &IntPoly::x()
}

/// True when `r·(p − x) = q1 − q2`.
pub fn is_cofactor(p: &NatPoly, q1: &NatPoly, q2: &NatPoly, r: &IntPoly) -> bool {
    r * &fixed_point_divisor(p) == &q1.to_int() - &q2.to_int()
}
