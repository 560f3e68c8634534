//! Small concrete rigs: degrees, codegrees, countable cardinals and the
//! three-element quotient of ℕ\[x\], plus two finite toys.
//!
//! They serve as evaluation targets and as counterexamples showing that each
//! hypothesis of the synthesis theorem is needed: a relation `p1 = p2` can
//! hold at some element while `q1 = q2` fails there.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::poly::NatPoly;
use crate::rig::{FiniteRig, Rig};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("elements come from different models")]
    MixedModels,
    #[error("the {0} model has an infinite carrier")]
    InfiniteCarrier(Model),
    #[error("unknown model {0:?} (expected degrees, codegrees, cardinals or three)")]
    UnknownModel(String),
}

fn superscript(n: u64) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string()
        .bytes()
        .map(|b| DIGITS[(b - b'0') as usize])
        .collect()
}

/// `Lⁿ` stands for "degree n"; addition takes the larger degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DegreeElem {
    NegInf,
    Fin(u64),
}

impl fmt::Display for DegreeElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegreeElem::NegInf => write!(f, "L^-∞"),
            DegreeElem::Fin(n) => write!(f, "L{}", superscript(*n)),
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Degrees;

impl Rig for Degrees {
    type Elem = DegreeElem;
    fn zero(&self) -> DegreeElem {
        DegreeElem::NegInf
    }
    fn one(&self) -> DegreeElem {
        DegreeElem::Fin(0)
    }
    fn add(&self, a: &DegreeElem, b: &DegreeElem) -> DegreeElem {
        match (a, b) {
            (DegreeElem::NegInf, o) | (o, DegreeElem::NegInf) => *o,
            (DegreeElem::Fin(m), DegreeElem::Fin(n)) => DegreeElem::Fin(*m.max(n)),
        }
    }
    fn mul(&self, a: &DegreeElem, b: &DegreeElem) -> DegreeElem {
        match (a, b) {
            (DegreeElem::Fin(m), DegreeElem::Fin(n)) => {
                DegreeElem::Fin(m.checked_add(*n).expect("degree overflow"))
            }
            _ => DegreeElem::NegInf,
        }
    }
    fn from_nat(&self, n: &BigUint) -> DegreeElem {
        if n.is_zero() {
            DegreeElem::NegInf
        } else {
            DegreeElem::Fin(0)
        }
    }
}

/// `εⁿ` stands for "vanishes to order n"; addition takes the smaller order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CodegreeElem {
    Fin(u64),
    Inf,
}

impl fmt::Display for CodegreeElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodegreeElem::Fin(n) => write!(f, "ε{}", superscript(*n)),
            CodegreeElem::Inf => write!(f, "ε^∞"),
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Codegrees;

impl Rig for Codegrees {
    type Elem = CodegreeElem;
    fn zero(&self) -> CodegreeElem {
        CodegreeElem::Inf
    }
    fn one(&self) -> CodegreeElem {
        CodegreeElem::Fin(0)
    }
    fn add(&self, a: &CodegreeElem, b: &CodegreeElem) -> CodegreeElem {
        match (a, b) {
            (CodegreeElem::Inf, o) | (o, CodegreeElem::Inf) => *o,
            (CodegreeElem::Fin(m), CodegreeElem::Fin(n)) => CodegreeElem::Fin(*m.min(n)),
        }
    }
    fn mul(&self, a: &CodegreeElem, b: &CodegreeElem) -> CodegreeElem {
        match (a, b) {
            (CodegreeElem::Fin(m), CodegreeElem::Fin(n)) => {
                CodegreeElem::Fin(m.checked_add(*n).expect("codegree overflow"))
            }
            _ => CodegreeElem::Inf,
        }
    }
    fn from_nat(&self, n: &BigUint) -> CodegreeElem {
        if n.is_zero() {
            CodegreeElem::Inf
        } else {
            CodegreeElem::Fin(0)
        }
    }
}

/// Countable cardinals: the naturals and `ℵ₀`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CardElem {
    Finite(BigUint),
    Aleph0,
}

impl fmt::Display for CardElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CardElem::Finite(n) => write!(f, "{n}"),
            CardElem::Aleph0 => write!(f, "ℵ₀"),
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Cardinals;

impl Rig for Cardinals {
    type Elem = CardElem;
    fn zero(&self) -> CardElem {
        CardElem::Finite(BigUint::zero())
    }
    fn one(&self) -> CardElem {
        CardElem::Finite(BigUint::one())
    }
    fn add(&self, a: &CardElem, b: &CardElem) -> CardElem {
        match (a, b) {
            (CardElem::Finite(m), CardElem::Finite(n)) => CardElem::Finite(m + n),
            _ => CardElem::Aleph0,
        }
    }
    fn mul(&self, a: &CardElem, b: &CardElem) -> CardElem {
        match (a, b) {
            (CardElem::Finite(m), CardElem::Finite(n)) => CardElem::Finite(m * n),
            (CardElem::Finite(z), _) | (_, CardElem::Finite(z)) if z.is_zero() => self.zero(),
            _ => CardElem::Aleph0,
        }
    }
    fn from_nat(&self, n: &BigUint) -> CardElem {
        CardElem::Finite(n.clone())
    }
}

/// ℕ\[x\] modulo "same constancy class": zero, nonzero constant, non-constant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ThreeElem {
    Zero,
    Constant,
    NonConstant,
}

impl ThreeElem {
    /// The class of a polynomial.
    pub fn classify(q: &NatPoly) -> ThreeElem {
        if q.is_zero() {
            ThreeElem::Zero
        } else if q.is_constant() {
            ThreeElem::Constant
        } else {
            ThreeElem::NonConstant
        }
    }
}

impl fmt::Display for ThreeElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ThreeElem::Zero => "zero",
            ThreeElem::Constant => "constant",
            ThreeElem::NonConstant => "non-constant",
        })
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ThreeElement;

impl Rig for ThreeElement {
    type Elem = ThreeElem;
    fn zero(&self) -> ThreeElem {
        ThreeElem::Zero
    }
    fn one(&self) -> ThreeElem {
        ThreeElem::Constant
    }
    fn add(&self, a: &ThreeElem, b: &ThreeElem) -> ThreeElem {
        *a.max(b)
    }
    fn mul(&self, a: &ThreeElem, b: &ThreeElem) -> ThreeElem {
        if *a == ThreeElem::Zero || *b == ThreeElem::Zero {
            ThreeElem::Zero
        } else {
            *a.max(b)
        }
    }
}

impl FiniteRig for ThreeElement {
    fn elements(&self) -> Vec<ThreeElem> {
        vec![ThreeElem::Zero, ThreeElem::Constant, ThreeElem::NonConstant]
    }
}

/// `({0, 1}, ∨, ∧)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct BooleanLattice;

impl Rig for BooleanLattice {
    type Elem = bool;
    fn zero(&self) -> bool {
        false
    }
    fn one(&self) -> bool {
        true
    }
    fn add(&self, a: &bool, b: &bool) -> bool {
        *a || *b
    }
    fn mul(&self, a: &bool, b: &bool) -> bool {
        *a && *b
    }
}

impl FiniteRig for BooleanLattice {
    fn elements(&self) -> Vec<bool> {
        vec![false, true]
    }
}

/// The rig with one element.
#[derive(Debug, Clone, Copy, Default)]
pub struct TrivialRig;

impl Rig for TrivialRig {
    type Elem = ();
    fn zero(&self) {}
    fn one(&self) {}
    fn add(&self, _: &(), _: &()) {}
    fn mul(&self, _: &(), _: &()) {}
}

impl FiniteRig for TrivialRig {
    fn elements(&self) -> Vec<()> {
        vec![()]
    }
}

/// Elements `a` with `b ≤ a` for every `b`, where `b ≤ a` means `b + c = a`
/// for some `c`. Decided by exhaustive search.
pub fn high_set<R: FiniteRig>(rig: &R) -> Vec<R::Elem> {
    let all = rig.elements();
    all.iter()
        .filter(|a| all.iter().all(|b| all.iter().any(|c| rig.add(b, c) == **a)))
        .cloned()
        .collect()
}

/// The models selectable by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Model {
    Degrees,
    Codegrees,
    Cardinals,
    Three,
}

impl Model {
    pub const ALL: [Model; 4] = [
        Model::Degrees,
        Model::Codegrees,
        Model::Cardinals,
        Model::Three,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Model::Degrees => "degrees",
            Model::Codegrees => "codegrees",
            Model::Cardinals => "cardinals",
            Model::Three => "three",
        }
    }

    pub fn zero(self) -> RigElement {
        match self {
            Model::Degrees => RigElement::Degree(Degrees.zero()),
            Model::Codegrees => RigElement::Codegree(Codegrees.zero()),
            Model::Cardinals => RigElement::Cardinal(Cardinals.zero()),
            Model::Three => RigElement::Three(ThreeElement.zero()),
        }
    }

    pub fn one(self) -> RigElement {
        match self {
            Model::Degrees => RigElement::Degree(Degrees.one()),
            Model::Codegrees => RigElement::Codegree(Codegrees.one()),
            Model::Cardinals => RigElement::Cardinal(Cardinals.one()),
            Model::Three => RigElement::Three(ThreeElement.one()),
        }
    }

    /// Enumeration order used by [`find_counterexample`]. `bound` caps the
    /// finite degrees, codegrees and cardinals (inclusive); the three-element
    /// model ignores it.
    ///
    /// * degrees: `L^-∞, L⁰, …, L^bound`
    /// * codegrees: `ε^∞, ε⁰, …, ε^bound`
    /// * cardinals: `0, 1, …, bound, ℵ₀`
    pub fn elements(self, bound: u64) -> Vec<RigElement> {
        match self {
            Model::Degrees => std::iter::once(DegreeElem::NegInf)
                .chain((0..=bound).map(DegreeElem::Fin))
                .map(RigElement::Degree)
                .collect(),
            Model::Codegrees => std::iter::once(CodegreeElem::Inf)
                .chain((0..=bound).map(CodegreeElem::Fin))
                .map(RigElement::Codegree)
                .collect(),
            Model::Cardinals => (0..=bound)
                .map(|n| CardElem::Finite(n.into()))
                .chain(std::iter::once(CardElem::Aleph0))
                .map(RigElement::Cardinal)
                .collect(),
            Model::Three => ThreeElement
                .elements()
                .into_iter()
                .map(RigElement::Three)
                .collect(),
        }
    }

    /// High elements, for the model with a finite carrier.
    pub fn high_set(self) -> Result<Vec<RigElement>, ModelError> {
        match self {
            Model::Three => Ok(high_set(&ThreeElement)
                .into_iter()
                .map(RigElement::Three)
                .collect()),
            other => Err(ModelError::InfiniteCarrier(other)),
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Model {
    type Err = ModelError;
    fn from_str(s: &str) -> Result<Model, ModelError> {
        Model::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| ModelError::UnknownModel(s.to_string()))
    }
}

/// An element of one of the named models.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RigElement {
    Degree(DegreeElem),
    Codegree(CodegreeElem),
    Cardinal(CardElem),
    Three(ThreeElem),
}

impl RigElement {
    pub fn model(&self) -> Model {
        match self {
            RigElement::Degree(_) => Model::Degrees,
            RigElement::Codegree(_) => Model::Codegrees,
            RigElement::Cardinal(_) => Model::Cardinals,
            RigElement::Three(_) => Model::Three,
        }
    }

    pub fn add(&self, other: &RigElement) -> Result<RigElement, ModelError> {
        use RigElement::*;
        Ok(match (self, other) {
            (Degree(a), Degree(b)) => Degree(Degrees.add(a, b)),
            (Codegree(a), Codegree(b)) => Codegree(Codegrees.add(a, b)),
            (Cardinal(a), Cardinal(b)) => Cardinal(Cardinals.add(a, b)),
            (Three(a), Three(b)) => Three(ThreeElement.add(a, b)),
            _ => return Err(ModelError::MixedModels),
        })
    }

    pub fn mul(&self, other: &RigElement) -> Result<RigElement, ModelError> {
        use RigElement::*;
        Ok(match (self, other) {
            (Degree(a), Degree(b)) => Degree(Degrees.mul(a, b)),
            (Codegree(a), Codegree(b)) => Codegree(Codegrees.mul(a, b)),
            (Cardinal(a), Cardinal(b)) => Cardinal(Cardinals.mul(a, b)),
            (Three(a), Three(b)) => Three(ThreeElement.mul(a, b)),
            _ => return Err(ModelError::MixedModels),
        })
    }

    /// `q(self)` in the element's own model.
    pub fn eval(&self, q: &NatPoly) -> RigElement {
        match self {
            RigElement::Degree(a) => RigElement::Degree(q.eval(&Degrees, a)),
            RigElement::Codegree(a) => RigElement::Codegree(q.eval(&Codegrees, a)),
            RigElement::Cardinal(a) => RigElement::Cardinal(q.eval(&Cardinals, a)),
            RigElement::Three(a) => RigElement::Three(q.eval(&ThreeElement, a)),
        }
    }
}

impl fmt::Display for RigElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RigElement::Degree(a) => a.fmt(f),
            RigElement::Codegree(a) => a.fmt(f),
            RigElement::Cardinal(a) => a.fmt(f),
            RigElement::Three(a) => a.fmt(f),
        }
    }
}

pub const DEFAULT_BOUND: u64 = 32;

/// The first element `a` of `model.elements(bound)` with `p1(a) = p2(a)` and
/// `q1(a) ≠ q2(a)`.
pub fn find_counterexample(
    p1: &NatPoly,
    p2: &NatPoly,
    q1: &NatPoly,
    q2: &NatPoly,
    model: Model,
    bound: u64,
) -> Option<RigElement> {
    model
        .elements(bound)
        .into_iter()
        .find(|a| a.eval(p1) == a.eval(p2) && a.eval(q1) != a.eval(q2))
}

/// `deg q` as a degree element.
pub fn degree_of(q: &NatPoly) -> DegreeElem {
    q.degree()
        .map_or(DegreeElem::NegInf, |d| DegreeElem::Fin(d.into()))
}

/// Lowest exponent with a nonzero coefficient, as a codegree element.
pub fn codegree_of(q: &NatPoly) -> CodegreeElem {
    q.codegree()
        .map_or(CodegreeElem::Inf, |d| CodegreeElem::Fin(d.into()))
}
