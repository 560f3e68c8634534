//! Certificate files.
//!
//! ```text
//! {
//!   "p": [[0,"1"],[2,"1"]],
//!   "start": [[1,"1"]],
//!   "end": [[0,"1"],[2,"1"]],
//!   "steps": [
//!     {"k":0,"f":[],"dir":"expand"}
//!   ]
//! }
//! ```
//!
//! Polynomials use the canonical pair-list form. The writer emits exactly this
//! layout, so `to_json(from_json(s)) == s` for any file the writer produced.

use serde::{Deserialize, Serialize};

use super::{Certificate, ChainError, Direction, LinkStep};
use crate::poly::NatPoly;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StepRecord {
    k: u32,
    f: NatPoly,
    dir: Direction,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CertificateRecord {
    p: NatPoly,
    start: NatPoly,
    end: NatPoly,
    steps: Vec<StepRecord>,
}

fn compact<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

impl Certificate {
    pub fn to_json(&self) -> String {
        let mut out = String::new();
        out.push_str("{\n");
        out.push_str(&format!("  \"p\": {},\n", compact(&self.p)));
        out.push_str(&format!("  \"start\": {},\n", compact(&self.start)));
        out.push_str(&format!("  \"end\": {},\n", compact(&self.end)));
        if self.steps.is_empty() {
            out.push_str("  \"steps\": []\n");
        } else {
            out.push_str("  \"steps\": [\n");
            for (i, s) in self.steps.iter().enumerate() {
                let rec = StepRecord {
                    k: s.k,
                    f: s.f.clone(),
                    dir: s.dir,
                };
                out.push_str("    ");
                out.push_str(&compact(&rec));
                if i + 1 < self.steps.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str("  ]\n");
        }
        out.push_str("}\n");
        out
    }

    /// Parses a certificate file. Non-canonical polynomials (zero
    /// coefficients, unsorted or repeated exponents) are rejected.
    pub fn from_json(text: &str) -> Result<Certificate, ChainError> {
        let rec: CertificateRecord =
            serde_json::from_str(text).map_err(|e| ChainError::Malformed {
                line: e.line(),
                column: e.column(),
                message: e.to_string(),
            })?;
        Ok(Certificate {
            p: rec.p,
            start: rec.start,
            end: rec.end,
            steps: rec
                .steps
                .into_iter()
                .map(|s| LinkStep::new(s.k, s.f, s.dir))
                .collect(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::tests::intro_prefix;

    #[test]
    fn roundtrip_is_exact() {
        let c = intro_prefix();
        let text = c.to_json();
        let back = Certificate::from_json(&text).unwrap();
        assert_eq!(back, c);
        assert_eq!(back.to_json(), text);
        assert!(text.contains(r#"{"k":1,"f":[[0,"1"]],"dir":"expand"}"#));
    }

    #[test]
    fn empty_chain_roundtrip() {
        let p: NatPoly = "1 + x^2".parse().unwrap();
        let c = Certificate::identity(&p, &"x^5".parse().unwrap());
        let back = Certificate::from_json(&c.to_json()).unwrap();
        assert!(back.verify().is_valid());
        assert_eq!(back, c);
    }

    #[test]
    fn rejects_malformed() {
        let good = intro_prefix().to_json();
        let unsorted = good.replace(r#""p": [[0,"1"],[2,"1"]]"#, r#""p": [[2,"1"],[0,"1"]]"#);
        assert_ne!(unsorted, good);
        assert!(matches!(
            Certificate::from_json(&unsorted),
            Err(ChainError::Malformed { line: 2, .. })
        ));
        let zero = good.replace(r#""start": [[1,"1"]]"#, r#""start": [[1,"0"]]"#);
        assert!(Certificate::from_json(&zero).is_err());
        let truncated = &good[..good.len() / 2];
        assert!(Certificate::from_json(truncated).is_err());
        let bad_dir = good.replacen("expand", "sideways", 1);
        assert!(Certificate::from_json(&bad_dir).is_err());
    }
}
