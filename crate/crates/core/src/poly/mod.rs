//! Sparse univariate polynomials with exact coefficients.
//!
//! A [`Poly`] stores a map from exponent to coefficient. The map never holds a
//! zero coefficient, so the zero polynomial is the empty map and structural
//! equality is polynomial equality. Three instantiations are used throughout:
//! [`NatPoly`] (ℕ\[x\]), [`IntPoly`] (ℤ\[x\]) and [`RatPoly`] (ℚ\[x\]).

mod divide;
mod fmt;
mod parse;
mod text;

pub use divide::{gcd, squarefree};
pub use parse::{parse_int_poly, ParseError};

use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::rig::{Rig, Ring};

/// Coefficient domains a [`Poly`] can be built over.
pub trait Coeff:
    Clone
    + Eq
    + Zero
    + One
    + std::fmt::Debug
    + for<'a> AddAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
}

impl<T> Coeff for T where
    T: Clone
        + Eq
        + Zero
        + One
        + std::fmt::Debug
        + for<'a> AddAssign<&'a T>
        + for<'a> MulAssign<&'a T>
{
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operation is undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("coefficient of x^{exponent} is negative")]
    NegativeCoefficient { exponent: u32 },
    #[error("coefficient of x^{exponent} is not an integer")]
    NonIntegral { exponent: u32 },
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly<C> {
    terms: BTreeMap<u32, C>,
}

pub type NatPoly = Poly<BigUint>;
pub type IntPoly = Poly<BigInt>;
pub type RatPoly = Poly<BigRational>;

impl<C> Default for Poly<C> {
    fn default() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }
}

impl<C: Coeff> Poly<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn x() -> Self {
        Self::monomial(C::one(), 1)
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0)
    }

    /// `c·x^e`; the zero polynomial when `c` is zero.
    pub fn monomial(c: C, e: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Poly { terms }
    }

    /// Builds a polynomial from (exponent, coefficient) pairs in any order.
    /// Repeated exponents are summed and zero results dropped.
    pub fn from_terms<I: IntoIterator<Item = (u32, C)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, &c);
        }
        p
    }

    /// Polynomial with coefficient `coeffs[i]` on `x^i`.
    pub fn from_dense<I: IntoIterator<Item = C>>(coeffs: I) -> Self {
        Self::from_terms(coeffs.into_iter().enumerate().map(|(i, c)| (i as u32, c)))
    }

    fn add_term(&mut self, e: u32, c: &C) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(C::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    /// Least exponent with a nonzero coefficient, or `None` for zero.
    pub fn codegree(&self) -> Option<u32> {
        self.terms.keys().next().copied()
    }

    /// True for the zero polynomial and for nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.degree().is_none_or(|d| d == 0)
    }

    pub fn coeff(&self, e: u32) -> C {
        self.terms.get(&e).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeff_ref(&self, e: u32) -> Option<&C> {
        self.terms.get(&e)
    }

    pub fn leading_coeff(&self) -> Option<&C> {
        self.terms.values().next_back()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &C)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Multiplies by `x^j`.
    pub fn shift(&self, j: u32) -> Self {
        if j == 0 {
            return self.clone();
        }
        Poly {
            terms: self.terms.iter().map(|(e, c)| (e + j, c.clone())).collect(),
        }
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self::from_terms(self.terms.iter().map(|(e, c)| {
            let mut c = c.clone();
            c *= k;
            (*e, c)
        }))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Maps coefficients into another domain.
    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }
}

impl<C: Coeff> AddAssign<&Poly<C>> for Poly<C> {
    fn add_assign(&mut self, rhs: &Poly<C>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c);
        }
    }
}

impl<C: Coeff> Add<&Poly<C>> for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Coeff> Add for Poly<C> {
    type Output = Poly<C>;
    fn add(mut self, rhs: Poly<C>) -> Poly<C> {
        self += &rhs;
        self
    }
}

impl<C: Coeff> Mul<&Poly<C>> for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        let mut out = Poly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut c = ca.clone();
                c *= cb;
                out.add_term(ea + eb, &c);
            }
        }
        out
    }
}

impl<C: Coeff> Mul for Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: Poly<C>) -> Poly<C> {
        &self * &rhs
    }
}

impl<C: Coeff + Neg<Output = C>> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl<C: Coeff + Neg<Output = C>> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        -&self
    }
}

impl<C: Coeff + Neg<Output = C>> Sub<&Poly<C>> for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &-c.clone());
        }
        out
    }
}

impl<C: Coeff + Neg<Output = C>> Sub for Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: Poly<C>) -> Poly<C> {
        &self - &rhs
    }
}

impl NatPoly {
    /// `self − other` when the difference stays in ℕ\[x\].
    pub fn checked_sub(&self, other: &NatPoly) -> Option<NatPoly> {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let have = terms.get_mut(e)?;
            if *have < *c {
                return None;
            }
            *have -= c;
            if have.is_zero() {
                terms.remove(e);
            }
        }
        Some(Poly { terms })
    }

    /// Coefficient-wise `self ≤ other`.
    pub fn le_coeffwise(&self, other: &NatPoly) -> bool {
        self.terms
            .iter()
            .all(|(e, c)| other.terms.get(e).is_some_and(|o| c <= o))
    }

    /// Sum of the coefficients, i.e. the number of unit monomials.
    pub fn mass(&self) -> BigUint {
        self.terms.values().fold(BigUint::zero(), |acc, c| acc + c)
    }

    /// The value at 0.
    pub fn constant_term(&self) -> BigUint {
        self.coeff(0)
    }

    pub fn to_int(&self) -> IntPoly {
        self.map_coeffs(|c| BigInt::from(c.clone()))
    }

    pub fn to_rat(&self) -> RatPoly {
        self.to_int().to_rat()
    }

    /// Exponents of the unit monomials in ascending order, copies consecutive.
    ///
    /// Panics if a coefficient does not fit in `u64`.
    pub fn unit_monomials(&self) -> impl Iterator<Item = u32> + '_ {
        self.terms.iter().flat_map(|(e, c)| {
            let n = c.to_u64().expect("coefficient too large to decompose");
            std::iter::repeat_n(*e, n as usize)
        })
    }

    /// Image of `self` under the homomorphism ℕ\[x\] → `rig` sending x to `at`.
    pub fn eval<R: Rig>(&self, rig: &R, at: &R::Elem) -> R::Elem {
        eval_sparse(
            rig,
            self.terms.iter().map(|(e, c)| (*e, rig.from_nat(c))),
            at,
        )
    }
}

impl IntPoly {
    pub fn to_rat(&self) -> RatPoly {
        self.map_coeffs(|c| BigRational::from_integer(c.clone()))
    }

    /// The polynomial as an element of ℕ\[x\], if no coefficient is negative.
    pub fn to_nat(&self) -> Result<NatPoly, PolyError> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            match c.to_biguint() {
                Some(n) => {
                    terms.insert(*e, n);
                }
                None => return Err(PolyError::NegativeCoefficient { exponent: *e }),
            }
        }
        Ok(Poly { terms })
    }

    /// Gcd of the absolute values of the coefficients; 0 for the zero
    /// polynomial.
    pub fn content(&self) -> BigUint {
        self.terms
            .values()
            .fold(BigUint::zero(), |acc, c| acc.gcd(c.magnitude()))
    }

    /// Content together with whether it equals 1.
    pub fn content_primitive(&self) -> (BigUint, bool) {
        let c = self.content();
        let primitive = c.is_one();
        (c, primitive)
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    pub fn derivative(&self) -> IntPoly {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(e, _)| **e > 0)
                .map(|(e, c)| (e - 1, c * BigInt::from(*e))),
        )
    }

    /// Minimal split `self = pos − neg` with `pos`, `neg` in ℕ\[x\] and
    /// disjoint supports.
    pub fn pos_neg_split(&self) -> (NatPoly, NatPoly) {
        let mut pos = BTreeMap::new();
        let mut neg = BTreeMap::new();
        for (e, c) in &self.terms {
            match c.sign() {
                Sign::Plus => {
                    pos.insert(*e, c.magnitude().clone());
                }
                Sign::Minus => {
                    neg.insert(*e, c.magnitude().clone());
                }
                Sign::NoSign => unreachable!("zero coefficient stored"),
            }
        }
        (Poly { terms: pos }, Poly { terms: neg })
    }

    pub fn eval<R: Ring>(&self, ring: &R, at: &R::Elem) -> R::Elem {
        eval_sparse(
            ring,
            self.terms.iter().map(|(e, c)| {
                let m = ring.from_nat(c.magnitude());
                let v = if c.is_negative() { ring.neg(&m) } else { m };
                (*e, v)
            }),
            at,
        )
    }

    /// Evaluation into a rig without negatives; fails on a negative
    /// coefficient.
    pub fn eval_in_rig<R: Rig>(&self, rig: &R, at: &R::Elem) -> Result<R::Elem, PolyError> {
        Ok(self.to_nat()?.eval(rig, at))
    }
}

impl RatPoly {
    /// The polynomial as an element of ℤ\[x\], if every coefficient is an
    /// integer.
    pub fn to_int(&self) -> Result<IntPoly, PolyError> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if !c.is_integer() {
                return Err(PolyError::NonIntegral { exponent: *e });
            }
            terms.insert(*e, c.to_integer());
        }
        Ok(Poly { terms })
    }

    /// Rescaled to leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> RatPoly {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }
}

/// Horner-style evaluation over a sparse term list in ascending order.
fn eval_sparse<R: Rig>(
    rig: &R,
    terms: impl DoubleEndedIterator<Item = (u32, R::Elem)>,
    at: &R::Elem,
) -> R::Elem {
    let mut acc = rig.zero();
    let mut current: Option<u32> = None;
    for (e, c) in terms.rev() {
        if let Some(prev) = current {
            acc = rig.mul(&acc, &rig.pow(at, prev - e));
        }
        acc = rig.add(&acc, &c);
        current = Some(e);
    }
    match current {
        Some(e) if e > 0 => rig.mul(&acc, &rig.pow(at, e)),
        _ => acc,
    }
}
