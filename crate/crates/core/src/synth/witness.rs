//! Constructive `b ≤ a` in the additive semigroup of ℕ\[x\]/(x = p(x)).
//!
//! A witness for `b ≤ a` is a cofactor `c` together with a certificate for
//! `b + c ~ a`. The ladder and highness lemmas below build such witnesses for
//! monomials and then for arbitrary `b` below any non-constant `a`.

use num_traits::Zero;

use super::SynthError;
use crate::chain::{Certificate, LinkStep};
use crate::poly::NatPoly;

/// Proof that `b ≤ a`: `cert` runs from `b + c` to `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeWitness {
    pub b: NatPoly,
    pub a: NatPoly,
    pub c: NatPoly,
    pub cert: Certificate,
}

impl LeWitness {
    /// `b ≤ a` with `c = a − b` and an empty chain. Panics unless `b ≤ a`
    /// coefficient-wise.
    pub fn trivial(p: &NatPoly, b: &NatPoly, a: &NatPoly) -> LeWitness {
        let c = a.checked_sub(b).expect("b is coefficient-wise below a");
        LeWitness {
            b: b.clone(),
            a: a.clone(),
            c,
            cert: Certificate::identity(p, a),
        }
    }

    /// Endpoint contract plus replay.
    pub fn is_valid(&self) -> bool {
        self.cert.start == &self.b + &self.c
            && self.cert.end == self.a
            && self.cert.verify().is_valid()
    }

    /// `xʲ·b ≤ xʲ·a`.
    pub fn times_monomial(&self, j: u32) -> LeWitness {
        LeWitness {
            b: self.b.shift(j),
            a: self.a.shift(j),
            c: self.c.shift(j),
            cert: self.cert.mul_monomial(j),
        }
    }

    /// Transitivity along `w0.b ≤ w0.a = w1.b ≤ ⋯ ≤ wn.a`.
    ///
    /// The cofactor is the sum of the parts' cofactors; segment `i` is shifted
    /// by the cofactors of every later part.
    pub fn compose_all(parts: &[LeWitness]) -> LeWitness {
        assert!(!parts.is_empty(), "nothing to compose");
        for pair in parts.windows(2) {
            assert_eq!(pair[0].a, pair[1].b, "witnesses do not chain");
        }
        let mut suffix = vec![NatPoly::zero(); parts.len() + 1];
        for i in (0..parts.len()).rev() {
            suffix[i] = &suffix[i + 1] + &parts[i].c;
        }
        let p = &parts[0].cert.p;
        let mut cert = Certificate::identity(p, &(&parts[0].b + &suffix[0]));
        for (i, w) in parts.iter().enumerate() {
            append(&mut cert, &w.cert.shift(&suffix[i + 1]));
        }
        LeWitness {
            b: parts[0].b.clone(),
            a: parts[parts.len() - 1].a.clone(),
            c: suffix[0].clone(),
            cert,
        }
    }

    /// Compatibility with addition: `Σ bᵢ ≤ Σ aᵢ`.
    ///
    /// Parts are applied in order; while part `i` runs, earlier parts sit at
    /// their `a` and later ones at their `b + c`.
    pub fn sum_all(p: &NatPoly, parts: &[LeWitness]) -> LeWitness {
        if parts.is_empty() {
            return LeWitness::trivial(p, &NatPoly::zero(), &NatPoly::zero());
        }
        let mut pending = vec![NatPoly::zero(); parts.len() + 1];
        for i in (0..parts.len()).rev() {
            pending[i] = &(&pending[i + 1] + &parts[i].b) + &parts[i].c;
        }
        let mut done = NatPoly::zero();
        let mut cert = Certificate::identity(p, &pending[0]);
        for (i, w) in parts.iter().enumerate() {
            append(&mut cert, &w.cert.shift(&(&done + &pending[i + 1])));
            done += &w.a;
        }
        let b = parts
            .iter()
            .fold(NatPoly::zero(), |acc, w| acc + w.b.clone());
        let c = parts
            .iter()
            .fold(NatPoly::zero(), |acc, w| acc + w.c.clone());
        LeWitness {
            b,
            a: done,
            c,
            cert,
        }
    }
}

fn append(acc: &mut Certificate, next: &Certificate) {
    debug_assert_eq!(acc.end, next.start);
    acc.steps.extend(next.steps.iter().cloned());
    acc.end = next.end.clone();
}

fn require_constant_term(p: &NatPoly) -> Result<(), SynthError> {
    if p.constant_term().is_zero() {
        return Err(SynthError::ZeroConstantTerm);
    }
    Ok(())
}

pub(crate) fn require_high_generator(p: &NatPoly) -> Result<(), SynthError> {
    require_constant_term(p)?;
    if p.degree().is_none_or(|d| d < 2) {
        return Err(SynthError::DegreeBelowTwo);
    }
    Ok(())
}

fn xpow(e: u32) -> NatPoly {
    NatPoly::monomial(1u32.into(), e)
}

/// `xⁿ ≤ xⁿ⁺¹` with `c = xⁿ·(p − 1)`, one contraction at `k = n`.
pub fn ladder_up(p: &NatPoly, n: u32) -> Result<LeWitness, SynthError> {
    require_constant_term(p)?;
    let p_minus_one = p.checked_sub(&NatPoly::one()).expect("p(0) ≥ 1");
    Ok(LeWitness {
        b: xpow(n),
        a: xpow(n + 1),
        c: p_minus_one.shift(n),
        cert: Certificate::single(p, LinkStep::contract(n, NatPoly::zero())),
    })
}

/// `xᶠʳᵒᵐ ≤ xᵗᵒ` for `from ≤ to`, composed from single ladder steps.
fn ladder_span(p: &NatPoly, from: u32, to: u32) -> Result<LeWitness, SynthError> {
    debug_assert!(from <= to);
    if from == to {
        return Ok(LeWitness::trivial(p, &xpow(from), &xpow(from)));
    }
    let parts = (from..to)
        .map(|n| ladder_up(p, n))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(LeWitness::compose_all(&parts))
}

/// Smallest exponent `d ≥ 2` with a nonzero coefficient in `p`.
fn high_exponent(p: &NatPoly) -> u32 {
    p.terms()
        .map(|(e, _)| e)
        .find(|e| *e >= 2)
        .expect("degree at least two")
}

/// `1 + x^d ≤ x` with `c = p − 1 − x^d`, one contraction at `k = 0`.
fn head_below_x(p: &NatPoly, d: u32) -> LeWitness {
    let b = &NatPoly::one() + &xpow(d);
    let c = p.checked_sub(&b).expect("p = 1 + x^d + g");
    LeWitness {
        b,
        a: NatPoly::x(),
        c,
        cert: Certificate::single(p, LinkStep::contract(0, NatPoly::zero())),
    }
}

/// `xⁿ⁺¹ ≤ xⁿ` for `n ≥ 1`.
///
/// Base case `x² ≤ x^d ≤ x` where `d` is the smallest exponent ≥ 2 of `p`;
/// larger `n` multiply the base case by `xⁿ⁻¹`.
pub fn ladder_down(p: &NatPoly, n: u32) -> Result<LeWitness, SynthError> {
    require_high_generator(p)?;
    if n == 0 {
        return Err(SynthError::InvalidArgument(
            "ladder_down needs n ≥ 1".into(),
        ));
    }
    let d = high_exponent(p);
    let up = ladder_span(p, 2, d)?;
    let xd_below_x = {
        let w = head_below_x(p, d);
        // x^d ≤ x with cofactor 1 + g: same chain, different split of the start
        LeWitness {
            b: xpow(d),
            a: w.a,
            c: p.checked_sub(&xpow(d)).expect("x^d occurs in p"),
            cert: w.cert,
        }
    };
    let base = LeWitness::compose_all(&[up, xd_below_x]);
    Ok(base.times_monomial(n - 1))
}

/// `xⁿ ≤ x`.
pub fn witness_power(p: &NatPoly, n: u32) -> Result<LeWitness, SynthError> {
    require_high_generator(p)?;
    match n {
        0 => ladder_up(p, 0),
        1 => Ok(LeWitness::trivial(p, &NatPoly::x(), &NatPoly::x())),
        _ => {
            let parts = (1..n)
                .rev()
                .map(|m| ladder_down(p, m))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(LeWitness::compose_all(&parts))
        }
    }
}

/// `2x ≤ x` via `x ≥ x^d ≥ x^{d−1}(1 + x^d) = x^{d−1} + x^{2d−1} ≥ 2x`.
fn double_below_x(p: &NatPoly) -> Result<LeWitness, SynthError> {
    let d = high_exponent(p);
    let spread = LeWitness::sum_all(
        p,
        &[ladder_span(p, 1, d - 1)?, ladder_span(p, 1, 2 * d - 1)?],
    );
    let gather = head_below_x(p, d).times_monomial(d - 1);
    let top = witness_power(p, d)?;
    Ok(LeWitness::compose_all(&[spread, gather, top]))
}

/// `n·x ≤ x`.
///
/// `n = 0` is `0 ≤ x` with `c = x`; otherwise pairs of `x` are merged one at
/// a time by the `2x ≤ x` witness.
pub fn witness_multiple(p: &NatPoly, n: u32) -> Result<LeWitness, SynthError> {
    require_high_generator(p)?;
    let x = NatPoly::x();
    match n {
        0 => return Ok(LeWitness::trivial(p, &NatPoly::zero(), &x)),
        1 => return Ok(LeWitness::trivial(p, &x, &x)),
        _ => {}
    }
    let merge = double_below_x(p)?;
    let parts: Vec<LeWitness> = (2..=n)
        .rev()
        .map(|i| {
            let rest = x.scale(&(i - 2).into());
            LeWitness::sum_all(p, &[merge.clone(), LeWitness::trivial(p, &rest, &rest)])
        })
        .collect();
    Ok(LeWitness::compose_all(&parts))
}

/// `b ≤ a` for non-constant `a`: every polynomial lies below every
/// non-constant one.
///
/// Decomposes `b` into unit monomials `x^{n₁} + ⋯ + x^{n_k}` and composes
/// `b ≤ k·x ≤ x ≤ x^m ≤ a`, with `m` the smallest positive exponent of `a`.
pub fn highness_oracle(p: &NatPoly, a: &NatPoly, b: &NatPoly) -> Result<LeWitness, SynthError> {
    require_high_generator(p)?;
    let m = a
        .terms()
        .map(|(e, _)| e)
        .find(|e| *e >= 1)
        .ok_or(SynthError::ConstantElement(a.to_string()))?;
    if b.is_zero() {
        return Ok(LeWitness::trivial(p, b, a));
    }
    let mut powers = Vec::new();
    let mut cache: Vec<(u32, LeWitness)> = Vec::new();
    for n in b.unit_monomials() {
        if cache.last().is_none_or(|(e, _)| *e != n) {
            cache.push((n, witness_power(p, n)?));
        }
        powers.push(cache.last().expect("just pushed").1.clone());
    }
    let k = u32::try_from(powers.len())
        .map_err(|_| SynthError::InvalidArgument("b has too many unit monomials".into()))?;
    let gather = LeWitness::sum_all(p, &powers);
    let merge = witness_multiple(p, k)?;
    let climb = ladder_span(p, 1, m)?;
    let top = LeWitness::trivial(p, &xpow(m), a);
    Ok(LeWitness::compose_all(&[gather, merge, climb, top]))
}
