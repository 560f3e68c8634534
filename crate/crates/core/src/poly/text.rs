//! Canonical serialized form: `[[exponent, "coefficient"], …]` sorted by
//! ascending exponent, coefficients as decimal strings.

use std::fmt::Display;
use std::str::FromStr;

use serde::de::Error as _;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Coeff, Poly};

impl<C: Coeff + Display> Serialize for Poly<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&(e, c.to_string()))?;
        }
        seq.end()
    }
}

impl<'de, C: Coeff + FromStr> Deserialize<'de> for Poly<C> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let pairs: Vec<(u32, String)> = Vec::deserialize(deserializer)?;
        let mut out = Poly::zero();
        let mut last: Option<u32> = None;
        for (e, text) in pairs {
            if let Some(prev) = last {
                if e == prev {
                    return Err(D::Error::custom(format!("duplicate exponent {e}")));
                }
                if e < prev {
                    return Err(D::Error::custom(format!(
                        "exponents out of order: {e} after {prev}"
                    )));
                }
            }
            last = Some(e);
            let c: C = text
                .parse()
                .map_err(|_| D::Error::custom(format!("bad coefficient {text:?} at x^{e}")))?;
            if c.is_zero() {
                return Err(D::Error::custom(format!("zero coefficient at x^{e}")));
            }
            out.terms.insert(e, c);
        }
        Ok(out)
    }
}
