//! Shared helpers for the integration tests, including an evaluation oracle
//! that does not go through the chain checker.

#![allow(dead_code)]

use std::path::PathBuf;

use rigproof::hypotheses::fixed_point_divisor;
use rigproof::rig::{FiniteRig, IntegersMod};
use rigproof::{Certificate, NatPoly};

pub fn np(s: &str) -> NatPoly {
    s.parse().unwrap()
}

/// A fresh directory under the system temp dir, removed on drop.
pub struct ScratchDir(PathBuf);

impl ScratchDir {
    pub fn new(tag: &str) -> ScratchDir {
        let dir = std::env::temp_dir().join(format!("rigproof-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        ScratchDir(dir)
    }

    pub fn file(&self, name: &str) -> PathBuf {
        self.0.join(name)
    }
}

impl Drop for ScratchDir {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

/// Every replayed term of `cert` lies in one class modulo `p − x`.
///
/// Checked two ways: equal remainders after division by `p − x` over ℚ, and
/// equal values at every fixed point of `p` in ℤ/m for small `m`.
pub fn congruent_terms(cert: &Certificate) -> Result<(), String> {
    let terms = cert
        .replay()
        .map_err(|(i, e)| format!("replay fails at {i}: {e}"))?;
    let d = fixed_point_divisor(&cert.p).to_rat();
    let rem = |t: &NatPoly| t.to_rat().divrem(&d).expect("p differs from x").1;
    let r0 = rem(&terms[0]);
    // the remainder is an invariant, so sampling keeps long chains cheap
    let stride = (terms.len() / 64).max(1);
    for (i, t) in terms
        .iter()
        .enumerate()
        .step_by(stride)
        .chain([(terms.len() - 1, &terms[terms.len() - 1])])
    {
        if rem(t) != r0 {
            return Err(format!("term {i} ({t}) leaves the class of {}", terms[0]));
        }
    }
    for m in 2..=12u64 {
        let zm = IntegersMod::new(m);
        for a in zm.elements() {
            if cert.p.eval(&zm, &a) != a {
                continue;
            }
            let v0 = terms[0].eval(&zm, &a);
            if let Some((i, _)) = terms
                .iter()
                .enumerate()
                .find(|(_, t)| t.eval(&zm, &a) != v0)
            {
                return Err(format!("term {i} differs at the fixed point {a} of Z/{m}"));
            }
        }
    }
    Ok(())
}
