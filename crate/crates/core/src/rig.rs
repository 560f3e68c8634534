//! Rig and ring interfaces used for polynomial evaluation, plus the number
//! systems ℕ, ℤ and ℤ/mℤ.
//!
//! A rig is given by a value that carries whatever parameters it needs (a
//! modulus, a bound) and performs the operations on its element type.

use std::fmt::Debug;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};

pub trait Rig {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Image of a natural number, `1 + 1 + ⋯ + 1`, by double-and-add.
    fn from_nat(&self, n: &BigUint) -> Self::Elem {
        let mut acc = self.zero();
        let one = self.one();
        for i in (0..n.bits()).rev() {
            acc = self.add(&acc, &acc);
            if n.bit(i) {
                acc = self.add(&acc, &one);
            }
        }
        acc
    }

    fn pow(&self, a: &Self::Elem, n: u32) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            n >>= 1;
            if n > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

pub trait Ring: Rig {
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
}

/// A rig whose carrier can be listed in full.
pub trait FiniteRig: Rig {
    fn elements(&self) -> Vec<Self::Elem>;
}

/// (ℕ, +, ·).
#[derive(Debug, Clone, Copy, Default)]
pub struct Naturals;

impl Rig for Naturals {
    type Elem = BigUint;
    fn zero(&self) -> BigUint {
        BigUint::zero()
    }
    fn one(&self) -> BigUint {
        BigUint::one()
    }
    fn add(&self, a: &BigUint, b: &BigUint) -> BigUint {
        a + b
    }
    fn mul(&self, a: &BigUint, b: &BigUint) -> BigUint {
        a * b
    }
    fn from_nat(&self, n: &BigUint) -> BigUint {
        n.clone()
    }
}

/// (ℤ, +, ·).
#[derive(Debug, Clone, Copy, Default)]
pub struct Integers;

impl Rig for Integers {
    type Elem = BigInt;
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn from_nat(&self, n: &BigUint) -> BigInt {
        BigInt::from(n.clone())
    }
}

impl Ring for Integers {
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
}

/// ℤ/mℤ with representatives in `0..m`.
#[derive(Debug, Clone, Copy)]
pub struct IntegersMod {
    modulus: u64,
}

impl IntegersMod {
    /// Panics if `modulus` is zero.
    pub fn new(modulus: u64) -> Self {
        assert!(modulus > 0, "modulus must be positive");
        IntegersMod { modulus }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }
}

impl Rig for IntegersMod {
    type Elem = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.modulus
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.modulus as u128) as u64
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.modulus as u128) as u64
    }
    fn from_nat(&self, n: &BigUint) -> u64 {
        (n % self.modulus).to_u64().expect("residue fits in u64")
    }
}

impl Ring for IntegersMod {
    fn neg(&self, a: &u64) -> u64 {
        (self.modulus - a % self.modulus) % self.modulus
    }
}

impl FiniteRig for IntegersMod {
    fn elements(&self) -> Vec<u64> {
        (0..self.modulus).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_nat_matches_repeated_addition() {
        let z7 = IntegersMod::new(7);
        for n in 0u32..40 {
            let mut acc = 0u64;
            for _ in 0..n {
                acc = z7.add(&acc, &1);
            }
            assert_eq!(z7.from_nat(&BigUint::from(n)), acc);
        }
    }

    #[test]
    fn modular_negation() {
        let z5 = IntegersMod::new(5);
        for a in z5.elements() {
            assert_eq!(z5.add(&a, &z5.neg(&a)), 0);
        }
    }

    #[test]
    fn pow_by_squaring() {
        assert_eq!(Naturals.pow(&BigUint::from(3u32), 5), BigUint::from(243u32));
        assert_eq!(Integers.pow(&BigInt::from(-2), 0), BigInt::one());
    }
}
