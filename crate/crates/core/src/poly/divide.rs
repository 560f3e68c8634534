//! Division with remainder over ℚ, gcd and squarefreeness.

use num_traits::Zero;

use super::{IntPoly, Poly, PolyError, RatPoly};

impl RatPoly {
    /// Returns `(quotient, remainder)` with `self = quotient·divisor + remainder`
    /// and the remainder zero or of degree below the divisor's.
    pub fn divrem(&self, divisor: &RatPoly) -> Result<(RatPoly, RatPoly), PolyError> {
        let dd = divisor.degree().ok_or(PolyError::DivisionByZero)?;
        let lc = divisor.leading_coeff().expect("nonzero divisor").clone();
        let mut quotient = RatPoly::zero();
        let mut rem = self.clone();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = rem.leading_coeff().expect("nonzero remainder") / &lc;
            let e = rd - dd;
            let t = Poly::monomial(c, e);
            rem = &rem - &(&t * divisor);
            debug_assert!(rem.degree().is_none_or(|d| d < rd));
            quotient += &t;
        }
        Ok((quotient, rem))
    }
}

/// Monic gcd over ℚ. `gcd(0, 0) = 0`.
pub fn gcd(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let (_, r) = a.divrem(&b).expect("nonzero divisor");
        a = b;
        b = r.monic();
    }
    a.monic()
}

/// Whether `d` has no repeated complex roots, decided by `gcd(d, d′)` over ℚ
/// being constant.
pub fn squarefree(d: &IntPoly) -> Result<bool, PolyError> {
    if d.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let g = gcd(&d.to_rat(), &d.derivative().to_rat());
    Ok(g.degree().is_some_and(|deg| deg.is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rp(s: &str) -> RatPoly {
        s.parse::<IntPoly>().unwrap().to_rat()
    }

    #[test]
    fn exact_division() {
        let (q, r) = rp("x^7 - x").divrem(&rp("x^2 - x + 1")).unwrap();
        assert_eq!(q, rp("x^5 + x^4 - x^2 - x"));
        assert!(r.is_zero());
        assert_eq!(&q * &rp("x^2 - x + 1"), rp("x^7 - x"));
    }

    #[test]
    fn monomial_division() {
        let (q, r) = rp("x^2").divrem(&rp("x")).unwrap();
        assert_eq!((q, r), (rp("x"), RatPoly::zero()));
    }

    #[test]
    fn division_with_remainder() {
        let (q, r) = rp("x^2 + 1").divrem(&rp("x + 1")).unwrap();
        assert_eq!(q, rp("x - 1"));
        assert_eq!(r, rp("2"));
        assert_eq!(&(&q * &rp("x + 1")) + &r, rp("x^2 + 1"));
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(
            rp("x").divrem(&RatPoly::zero()),
            Err(PolyError::DivisionByZero)
        );
    }

    #[test]
    fn fractional_quotient() {
        let (q, r) = rp("-1 - x^2").divrem(&rp("2 + 2x^2")).unwrap();
        assert!(r.is_zero());
        assert!(q.to_int().is_err());
    }

    #[test]
    fn squarefree_examples() {
        let ip = |s: &str| s.parse::<IntPoly>().unwrap();
        assert_eq!(squarefree(&ip("x^2 - x + 1")), Ok(true));
        assert_eq!(squarefree(&ip("x^2 + 2x + 1")), Ok(false));
        assert_eq!(squarefree(&ip("x")), Ok(true));
        assert_eq!(squarefree(&ip("5")), Ok(true));
        assert_eq!(squarefree(&ip("(x - 2)^2 (x + 3)")), Ok(false));
        assert_eq!(squarefree(&IntPoly::zero()), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn gcd_of_shared_factor() {
        let g = gcd(&rp("(x - 1)(x + 2)"), &rp("(x - 1)(x^2 + 1)"));
        assert_eq!(g, rp("x - 1"));
    }
}
