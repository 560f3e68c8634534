//! Bounded shortest-chain search.
//!
//! Bidirectional breadth-first search over terms of degree at most
//! `max_degree` and coefficient mass at most `max_coeff_mass`. Link steps are
//! reversible, so the backward side explores the same graph from `q2`.
//! Whole layers are expanded (smaller frontier first, forward on ties) and the
//! search stops after the first layer that produces a meeting, keeping the
//! shortest meeting, earliest discovered on ties. That is both minimal and
//! deterministic.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::chain::{Certificate, LinkStep};
use crate::poly::NatPoly;

struct Bounds {
    degree: u32,
    mass: BigUint,
}

impl Bounds {
    fn admits(&self, r: &NatPoly) -> bool {
        r.degree().is_none_or(|d| d <= self.degree) && r.mass() <= self.mass
    }
}

/// All single-step neighbours of `r` inside the bounds: ascending `k`,
/// expansion before contraction.
fn neighbours(r: &NatPoly, p: &NatPoly, bounds: &Bounds) -> Vec<(LinkStep, NatPoly)> {
    let mut out = Vec::new();
    let top = r.degree().unwrap_or(0);
    for k in 0..=top {
        if !r.coeff_ref(k + 1).is_none_or(Zero::is_zero) {
            let f = r
                .checked_sub(&NatPoly::monomial(1u32.into(), k + 1))
                .expect("x^(k+1) occurs in r");
            let step = LinkStep::expand(k, f);
            let next = step.target(p);
            if bounds.admits(&next) {
                out.push((step, next));
            }
        }
        if let Some(f) = r.checked_sub(&p.shift(k)) {
            let step = LinkStep::contract(k, f);
            let next = step.target(p);
            if bounds.admits(&next) {
                out.push((step, next));
            }
        }
    }
    out
}

/// One side of the search: every visited term maps to its distance and the
/// step linking it to its parent (`None` at the root).
struct Side {
    seen: HashMap<NatPoly, (usize, Option<(NatPoly, LinkStep)>)>,
    frontier: Vec<NatPoly>,
    depth: usize,
}

impl Side {
    fn new(root: &NatPoly) -> Side {
        let mut seen = HashMap::new();
        seen.insert(root.clone(), (0, None));
        Side {
            seen,
            frontier: vec![root.clone()],
            depth: 0,
        }
    }

    /// Path from the root to `r` as steps in root-to-`r` order.
    fn path_to(&self, r: &NatPoly) -> Vec<LinkStep> {
        let mut steps = Vec::new();
        let mut cur = r.clone();
        while let Some((_, Some((parent, step)))) = self.seen.get(&cur) {
            steps.push(step.clone());
            cur = parent.clone();
        }
        steps.reverse();
        steps
    }
}

/// A minimal-length certificate for `q1 ~ q2` whose terms all stay within
/// the bounds, or `None` if no chain of at most `max_steps` steps exists
/// there.
pub fn bfs_search(
    p: &NatPoly,
    q1: &NatPoly,
    q2: &NatPoly,
    max_steps: usize,
    max_degree: u32,
    max_coeff_mass: u64,
) -> Option<Certificate> {
    if q1 == q2 {
        return Some(Certificate::identity(p, q1));
    }
    let bounds = Bounds {
        degree: max_degree,
        mass: max_coeff_mass.into(),
    };
    if !bounds.admits(q1) || !bounds.admits(q2) {
        return None;
    }
    let mut fwd = Side::new(q1);
    let mut bwd = Side::new(q2);
    while fwd.depth + bwd.depth < max_steps && !fwd.frontier.is_empty() && !bwd.frontier.is_empty()
    {
        let forward = fwd.frontier.len() <= bwd.frontier.len();
        let (this, other) = if forward {
            (&mut fwd, &bwd)
        } else {
            (&mut bwd, &fwd)
        };
        let mut best: Option<(usize, NatPoly)> = None;
        let mut next = Vec::new();
        for r in std::mem::take(&mut this.frontier) {
            for (step, n) in neighbours(&r, p, &bounds) {
                if this.seen.contains_key(&n) {
                    continue;
                }
                // on the backward side steps are stored in q1-to-q2 order
                let link = if forward { step } else { step.flipped() };
                this.seen
                    .insert(n.clone(), (this.depth + 1, Some((r.clone(), link))));
                if let Some((d, _)) = other.seen.get(&n) {
                    let total = this.depth + 1 + d;
                    if total <= max_steps && best.as_ref().is_none_or(|(t, _)| total < *t) {
                        best = Some((total, n.clone()));
                    }
                }
                next.push(n);
            }
        }
        this.frontier = next;
        this.depth += 1;
        if let Some((_, meet)) = best {
            let mut steps = fwd.path_to(&meet);
            let mut back = bwd.path_to(&meet);
            back.reverse();
            steps.extend(back);
            return Some(Certificate {
                p: p.clone(),
                start: q1.clone(),
                end: q2.clone(),
                steps,
            });
        }
    }
    None
}
