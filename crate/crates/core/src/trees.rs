//! Certificates executed as bijections between sets of trees.
//!
//! A [`Tree`] is an element of the initial algebra `T ≅ p(T)`: each node picks
//! one unit monomial of `p` (its slot) and has that monomial's exponent many
//! children. A [`PolyValue`] is an element of `q(T)`: a slot of `q` together
//! with a tuple of trees.
//!
//! Slots always index the unit-monomial decomposition of a polynomial in
//! ascending exponent with copies consecutive. When a link step splits a term
//! into spectator `f` and an active part, each exponent block gives its first
//! copies to `f` and the remaining ones to the active part. An expansion
//! unpacks the last tree of the active tuple; a contraction packs the trailing
//! trees back into one node.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::chain::{Certificate, Direction, LinkStep, Verification};
use crate::poly::NatPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TreeError {
    #[error("slot {slot} out of range (polynomial has {mass} unit monomials)")]
    SlotOutOfRange { slot: usize, mass: usize },
    #[error("slot {slot} expects {expected} children, found {found}")]
    ArityMismatch {
        slot: usize,
        expected: usize,
        found: usize,
    },
    #[error("p has zero constant term, so there are no trees")]
    NoLeaves,
    #[error("value lies over {found}, expected {expected}")]
    EndpointMismatch { expected: String, found: String },
    #[error("at position {pos}: {message}")]
    Parse { pos: usize, message: String },
    #[error("certificate fails at step {index}: {reason}")]
    InvalidCertificate { index: usize, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tree {
    pub slot: usize,
    pub children: Vec<Tree>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyValue {
    pub q: NatPoly,
    pub slot: usize,
    pub tuple: Vec<Tree>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Run {
    Forward,
    Backward,
}

/// Where each exponent block starts in the unit-monomial listing.
struct Layout {
    blocks: BTreeMap<u32, (usize, usize)>,
    mass: usize,
}

impl Layout {
    fn of(q: &NatPoly) -> Layout {
        let mut blocks = BTreeMap::new();
        let mut start = 0;
        for (e, c) in q.terms() {
            let c = c.to_usize().expect("coefficient fits in memory");
            blocks.insert(e, (start, c));
            start += c;
        }
        Layout {
            blocks,
            mass: start,
        }
    }

    fn start(&self, e: u32) -> usize {
        self.blocks.get(&e).map_or(0, |b| b.0)
    }

    fn count(&self, e: u32) -> usize {
        self.blocks.get(&e).map_or(0, |b| b.1)
    }

    /// Exponent of `slot` and its offset inside that exponent's block.
    fn locate(&self, slot: usize) -> Result<(u32, usize), TreeError> {
        self.blocks
            .iter()
            .find(|(_, (s, c))| slot >= *s && slot < s + c)
            .map(|(e, (s, _))| (*e, slot - s))
            .ok_or(TreeError::SlotOutOfRange {
                slot,
                mass: self.mass,
            })
    }
}

impl Tree {
    pub fn leaf(slot: usize) -> Tree {
        Tree {
            slot,
            children: Vec::new(),
        }
    }

    /// Number of nodes, leaves included.
    pub fn size(&self) -> usize {
        1 + self.children.iter().map(Tree::size).sum::<usize>()
    }

    /// Checks slot ranges and arities against `p`.
    pub fn validate(&self, p: &NatPoly) -> Result<(), TreeError> {
        validate_with(self, &Layout::of(p))
    }
}

fn validate_with(t: &Tree, layout: &Layout) -> Result<(), TreeError> {
    let (e, _) = layout.locate(t.slot)?;
    if t.children.len() != e as usize {
        return Err(TreeError::ArityMismatch {
            slot: t.slot,
            expected: e as usize,
            found: t.children.len(),
        });
    }
    t.children.iter().try_for_each(|c| validate_with(c, layout))
}

impl PolyValue {
    /// Total node count of the tuple.
    pub fn size(&self) -> usize {
        self.tuple.iter().map(Tree::size).sum()
    }

    /// Checks the top slot against `q` and every tree against `p`.
    pub fn validate(&self, p: &NatPoly) -> Result<(), TreeError> {
        let (e, _) = Layout::of(&self.q).locate(self.slot)?;
        if self.tuple.len() != e as usize {
            return Err(TreeError::ArityMismatch {
                slot: self.slot,
                expected: e as usize,
                found: self.tuple.len(),
            });
        }
        let layout = Layout::of(p);
        self.tuple
            .iter()
            .try_for_each(|t| validate_with(t, &layout))
    }
}

/// Unfolds the root: `T → p(T)`.
pub fn alpha(t: &Tree, p: &NatPoly) -> PolyValue {
    PolyValue {
        q: p.clone(),
        slot: t.slot,
        tuple: t.children.clone(),
    }
}

/// Folds a value over `p` into a tree: `p(T) → T`.
pub fn alpha_inv(v: &PolyValue) -> Tree {
    Tree {
        slot: v.slot,
        children: v.tuple.clone(),
    }
}

/// One exponent block of a step's source term.
#[derive(Debug, Clone)]
struct Block {
    e: u32,
    start: usize,
    len: usize,
    /// copies owned by the spectator
    spect: usize,
    /// first slot of the same exponent in the target
    dst: usize,
}

/// A link step compiled to slot arithmetic.
#[derive(Debug, Clone)]
struct StepPlan {
    dir: Direction,
    k: usize,
    source: NatPoly,
    blocks: Vec<Block>,
    /// expansion: first target slot of the active copies, per exponent of p
    expand_base: BTreeMap<u32, usize>,
    /// contraction: target slot of the active x^(k+1)
    contract_slot: usize,
}

impl StepPlan {
    fn new(step: &LinkStep, p: &NatPoly) -> StepPlan {
        let source = step.source(p);
        let (src, dst, spect) = (
            Layout::of(&source),
            Layout::of(&step.target(p)),
            Layout::of(&step.f),
        );
        let blocks = src
            .blocks
            .iter()
            .map(|(&e, &(start, len))| Block {
                e,
                start,
                len,
                spect: spect.count(e),
                dst: dst.start(e),
            })
            .collect();
        let active = |e: u32| dst.start(e) + spect.count(e);
        StepPlan {
            dir: step.dir,
            k: step.k as usize,
            source,
            blocks,
            expand_base: p.terms().map(|(ge, _)| (ge, active(step.k + ge))).collect(),
            contract_slot: active(step.k + 1),
        }
    }

    fn locate(&self, slot: usize) -> Option<&Block> {
        let i = self.blocks.partition_point(|b| b.start + b.len <= slot);
        self.blocks.get(i).filter(|b| slot >= b.start)
    }

    /// Moves `(slot, tuple)` across the step; the tuple's shape is trusted.
    fn apply(
        &self,
        gen: &Layout,
        slot: usize,
        mut tuple: Vec<Tree>,
    ) -> Result<(usize, Vec<Tree>), TreeError> {
        let b = self.locate(slot).ok_or(TreeError::SlotOutOfRange {
            slot,
            mass: self.blocks.last().map_or(0, |b| b.start + b.len),
        })?;
        let off = slot - b.start;
        if off < b.spect {
            return Ok((b.dst + off, tuple));
        }
        match self.dir {
            Direction::Expand => {
                // active x^(k+1): unpack its last tree into the x^k·p part
                let last = tuple.pop().expect("active tuple has k + 1 trees");
                let (ge, goff) = gen.locate(last.slot)?;
                tuple.extend(last.children);
                Ok((self.expand_base[&ge] + goff, tuple))
            }
            Direction::Contract => {
                // active x^k·p: the trailing trees become one node
                let sigma = gen.start(b.e - self.k as u32) + (off - b.spect);
                let children = tuple.split_off(self.k);
                tuple.push(Tree {
                    slot: sigma,
                    children,
                });
                Ok((self.contract_slot, tuple))
            }
        }
    }
}

/// The bijection induced by one step on values over its source term.
pub fn apply_step_value(
    step: &LinkStep,
    p: &NatPoly,
    v: &PolyValue,
) -> Result<PolyValue, TreeError> {
    let plan = StepPlan::new(step, p);
    if v.q != plan.source {
        return Err(TreeError::EndpointMismatch {
            expected: plan.source.to_string(),
            found: v.q.to_string(),
        });
    }
    v.validate(p)?;
    let (slot, tuple) = plan.apply(&Layout::of(p), v.slot, v.tuple.clone())?;
    Ok(PolyValue {
        q: step.target(p),
        slot,
        tuple,
    })
}

/// A certificate compiled for repeated execution in both directions.
pub struct Bijection {
    p: NatPoly,
    start: NatPoly,
    end: NatPoly,
    gen: Layout,
    forward: Vec<StepPlan>,
    backward: Vec<StepPlan>,
}

impl Bijection {
    /// Fails with the first bad step if `cert` does not verify.
    pub fn new(cert: &Certificate) -> Result<Bijection, TreeError> {
        if let Verification::Invalid { index, reason } = cert.verify() {
            return Err(TreeError::InvalidCertificate { index, reason });
        }
        Ok(Bijection {
            p: cert.p.clone(),
            start: cert.start.clone(),
            end: cert.end.clone(),
            gen: Layout::of(&cert.p),
            forward: cert
                .steps
                .iter()
                .map(|s| StepPlan::new(s, &cert.p))
                .collect(),
            backward: cert
                .steps
                .iter()
                .rev()
                .map(|s| StepPlan::new(&s.flipped(), &cert.p))
                .collect(),
        })
    }

    /// Transports `v` from `start` to `end` (forward) or back.
    pub fn run(&self, v: PolyValue, run: Run) -> Result<PolyValue, TreeError> {
        let (from, to, plans) = match run {
            Run::Forward => (&self.start, &self.end, &self.forward),
            Run::Backward => (&self.end, &self.start, &self.backward),
        };
        if v.q != *from {
            return Err(TreeError::EndpointMismatch {
                expected: from.to_string(),
                found: v.q.to_string(),
            });
        }
        v.validate(&self.p)?;
        let (mut slot, mut tuple) = (v.slot, v.tuple);
        for plan in plans {
            (slot, tuple) = plan.apply(&self.gen, slot, tuple)?;
        }
        Ok(PolyValue {
            q: to.clone(),
            slot,
            tuple,
        })
    }
}

/// Transports `v` along `cert`: from `start` to `end` when running forward,
/// from `end` to `start` backward. Compiles the certificate on every call;
/// use [`Bijection`] to run many values.
pub fn apply_bijection(
    cert: &Certificate,
    v: &PolyValue,
    run: Run,
) -> Result<PolyValue, TreeError> {
    Bijection::new(cert)?.run(v.clone(), run)
}

fn arities(q: &NatPoly) -> Vec<usize> {
    q.unit_monomials().map(|e| e as usize).collect()
}

/// Splits `total` into `parts` positive summands uniformly at random among
/// compositions. Requires `total ≥ parts ≥ 1`.
fn random_composition(rng: &mut ChaCha8Rng, total: usize, parts: usize) -> Vec<usize> {
    let mut cuts: Vec<usize> = rand::seq::index::sample(rng, total - 1, parts - 1)
        .into_iter()
        .map(|c| c + 1)
        .collect();
    cuts.sort_unstable();
    cuts.push(total);
    let mut prev = 0;
    cuts.into_iter()
        .map(|c| {
            let d = c - prev;
            prev = c;
            d
        })
        .collect()
}

fn random_tree_with(rng: &mut ChaCha8Rng, ar: &[usize], budget: usize) -> Tree {
    let allowed: Vec<usize> = (0..ar.len()).filter(|s| ar[*s] < budget).collect();
    let slot = allowed[rng.gen_range(0..allowed.len())];
    let children = if ar[slot] == 0 {
        Vec::new()
    } else {
        // the node itself takes one unit; children get at least one each
        let total = rng.gen_range(ar[slot]..budget);
        random_composition(rng, total, ar[slot])
            .into_iter()
            .map(|b| random_tree_with(rng, ar, b))
            .collect()
    };
    Tree { slot, children }
}

/// A pseudo-random tree over `p` with at most `size_bound` nodes
/// (at least one), determined by `seed`.
pub fn random_tree(p: &NatPoly, size_bound: usize, seed: u64) -> Result<Tree, TreeError> {
    if p.constant_term().to_usize() == Some(0) {
        return Err(TreeError::NoLeaves);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(random_tree_with(&mut rng, &arities(p), size_bound.max(1)))
}

/// A pseudo-random value over `q` whose trees total at most
/// `max(size_bound, deg of the chosen slot)` nodes.
pub fn random_value(
    q: &NatPoly,
    p: &NatPoly,
    size_bound: usize,
    seed: u64,
) -> Result<PolyValue, TreeError> {
    if p.constant_term().to_usize() == Some(0) {
        return Err(TreeError::NoLeaves);
    }
    let qa = arities(q);
    if qa.is_empty() {
        return Err(TreeError::SlotOutOfRange { slot: 0, mass: 0 });
    }
    let pa = arities(p);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let slot = rng.gen_range(0..qa.len());
    let tuple = if qa[slot] == 0 {
        Vec::new()
    } else {
        let total = rng.gen_range(qa[slot]..=size_bound.max(qa[slot]));
        random_composition(&mut rng, total, qa[slot])
            .into_iter()
            .map(|b| random_tree_with(&mut rng, &pa, b))
            .collect()
    };
    Ok(PolyValue {
        q: q.clone(),
        slot,
        tuple,
    })
}

/// All trees over `p` by exact node count, up to `max_nodes`.
struct TreeTable {
    by_size: Vec<Vec<Tree>>,
}

impl TreeTable {
    fn new(p: &NatPoly, max_nodes: usize) -> TreeTable {
        let ar = arities(p);
        let mut by_size: Vec<Vec<Tree>> = vec![Vec::new(); max_nodes + 1];
        for n in 1..=max_nodes {
            let mut here = Vec::new();
            for (slot, &a) in ar.iter().enumerate() {
                if a == 0 {
                    if n == 1 {
                        here.push(Tree::leaf(slot));
                    }
                    continue;
                }
                for children in tuples(&by_size, a, n - 1) {
                    here.push(Tree { slot, children });
                }
            }
            by_size[n] = here;
        }
        TreeTable { by_size }
    }
}

/// Every `len`-tuple of trees with exactly `total` nodes, sizes in
/// lexicographic order and trees in table order within each size.
fn tuples(by_size: &[Vec<Tree>], len: usize, total: usize) -> Vec<Vec<Tree>> {
    if len == 0 {
        return if total == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    for first in 1..=total.saturating_sub(len - 1) {
        let rests = tuples(by_size, len - 1, total - first);
        if rests.is_empty() {
            continue;
        }
        for t in &by_size[first] {
            for rest in &rests {
                let mut v = Vec::with_capacity(len);
                v.push(t.clone());
                v.extend(rest.iter().cloned());
                out.push(v);
            }
        }
    }
    out
}

/// Every value over `q` with at most `max_nodes` nodes in total, ordered by
/// slot of `q`, then total size, then component sizes, then table order.
pub fn enumerate_values(q: &NatPoly, p: &NatPoly, max_nodes: usize) -> Vec<PolyValue> {
    let table = TreeTable::new(p, max_nodes);
    let mut out = Vec::new();
    for (slot, a) in arities(q).into_iter().enumerate() {
        for total in 0..=max_nodes {
            for tuple in tuples(&table.by_size, a, total) {
                out.push(PolyValue {
                    q: q.clone(),
                    slot,
                    tuple,
                });
            }
        }
    }
    out
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.slot)?;
        if !self.children.is_empty() {
            f.write_str("(")?;
            for (i, c) in self.children.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                c.fmt(f)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Display for PolyValue {
    /// Same syntax as a tree; the outer slot indexes `q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        alpha_inv(self).fmt(f)
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn err(&self, message: &str) -> TreeError {
        TreeError::Parse {
            pos: self.pos,
            message: message.to_string(),
        }
    }

    fn tree(&mut self) -> Result<Tree, TreeError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a slot number"));
        }
        let slot = std::str::from_utf8(&self.s[start..self.pos])
            .expect("ascii digits")
            .parse::<usize>()
            .map_err(|_| TreeError::Parse {
                pos: start,
                message: "slot number too large".into(),
            })?;
        self.skip_ws();
        let mut children = Vec::new();
        if self.s.get(self.pos) == Some(&b'(') {
            self.pos += 1;
            loop {
                children.push(self.tree()?);
                self.skip_ws();
                match self.s.get(self.pos) {
                    Some(b',') => self.pos += 1,
                    Some(b')') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return Err(self.err("expected ',' or ')'")),
                }
            }
        }
        Ok(Tree { slot, children })
    }
}

impl FromStr for Tree {
    type Err = TreeError;
    fn from_str(s: &str) -> Result<Tree, TreeError> {
        let mut p = Parser {
            s: s.as_bytes(),
            pos: 0,
        };
        let t = p.tree()?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(p.err("trailing input"));
        }
        Ok(t)
    }
}

/// Parses a value over `q` and checks it against `q` and `p`.
pub fn parse_value(text: &str, q: &NatPoly, p: &NatPoly) -> Result<PolyValue, TreeError> {
    let t: Tree = text.parse()?;
    let v = PolyValue {
        q: q.clone(),
        slot: t.slot,
        tuple: t.children,
    };
    v.validate(p)?;
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::synth::synthesize;

    fn np(s: &str) -> NatPoly {
        s.parse().unwrap()
    }

    fn node(l: Tree, r: Tree) -> Tree {
        Tree {
            slot: 1,
            children: vec![l, r],
        }
    }

    #[test]
    fn alpha_pair() {
        let p = np("1 + x^2");
        let v = alpha(&Tree::leaf(0), &p);
        assert_eq!((v.slot, v.tuple.len()), (0, 0));
        let t = node(Tree::leaf(0), node(Tree::leaf(0), Tree::leaf(0)));
        let v = alpha(&t, &p);
        assert_eq!(v.slot, 1);
        assert_eq!(v.tuple, t.children);
        assert_eq!(alpha_inv(&v), t);
    }

    #[test]
    fn generator_on_a_leaf() {
        let p = np("1 + x^2");
        let cert = Certificate::generator(&p);
        let v = PolyValue {
            q: NatPoly::x(),
            slot: 0,
            tuple: vec![Tree::leaf(0)],
        };
        let w = apply_bijection(&cert, &v, Run::Forward).unwrap();
        assert_eq!(
            w,
            PolyValue {
                q: p.clone(),
                slot: 0,
                tuple: vec![]
            }
        );
        assert_eq!(apply_bijection(&cert, &w, Run::Backward).unwrap(), v);
    }

    #[test]
    fn spectators_keep_their_block_position() {
        // 2x² = x² + x·x: expand the active copy, the spectator copy stays first
        let p = np("1 + x^2");
        let step = LinkStep::expand(1, np("x^2"));
        let leaves = vec![Tree::leaf(0), Tree::leaf(0)];
        let spect = PolyValue {
            q: np("2x^2"),
            slot: 0,
            tuple: leaves.clone(),
        };
        let w = apply_step_value(&step, &p, &spect).unwrap();
        assert_eq!(w.q, np("x + x^2 + x^3"));
        assert_eq!((w.slot, w.tuple.clone()), (1, leaves.clone()));
        let active = PolyValue {
            q: np("2x^2"),
            slot: 1,
            tuple: leaves,
        };
        let w = apply_step_value(&step, &p, &active).unwrap();
        assert_eq!((w.slot, w.tuple.len()), (0, 1));
    }

    #[test]
    fn seven_trees_roundtrip() {
        let p = np("1 + x^2");
        let cert = synthesize(&p, &np("x^7"), &NatPoly::x()).unwrap();
        let v: PolyValue = parse_value("0(0,0,0,0,0,0,0)", &np("x^7"), &p).unwrap();
        let w = apply_bijection(&cert, &v, Run::Forward).unwrap();
        assert_eq!(w.q, NatPoly::x());
        w.validate(&p).unwrap();
        assert_eq!(apply_bijection(&cert, &w, Run::Backward).unwrap(), v);
        for seed in 0..50 {
            let v = random_value(&np("x^7"), &p, 40, seed).unwrap();
            let w = apply_bijection(&cert, &v, Run::Forward).unwrap();
            w.validate(&p).unwrap();
            assert_eq!(apply_bijection(&cert, &w, Run::Backward).unwrap(), v);
        }
    }

    #[test]
    fn endpoint_mismatch() {
        let p = np("1 + x^2");
        let cert = Certificate::generator(&p);
        let v = PolyValue {
            q: np("x^2"),
            slot: 0,
            tuple: vec![Tree::leaf(0), Tree::leaf(0)],
        };
        assert!(matches!(
            apply_bijection(&cert, &v, Run::Forward),
            Err(TreeError::EndpointMismatch { .. })
        ));
    }

    #[test]
    fn random_trees() {
        let p = np("1 + x + x^2");
        assert_eq!(random_tree(&p, 1, 9).unwrap().size(), 1);
        assert_eq!(
            random_tree(&p, 30, 4).unwrap(),
            random_tree(&p, 30, 4).unwrap()
        );
        for seed in 0..100 {
            let t = random_tree(&p, 50, seed).unwrap();
            assert!(t.size() <= 50);
            t.validate(&p).unwrap();
        }
        assert_eq!(random_tree(&np("x + x^2"), 5, 0), Err(TreeError::NoLeaves));
    }

    #[test]
    fn enumeration_counts() {
        let p = np("1 + x^2");
        let one = enumerate_values(&np("1"), &p, 5);
        assert_eq!(
            one,
            vec![PolyValue {
                q: np("1"),
                slot: 0,
                tuple: vec![]
            }]
        );
        // binary trees with 1 and 3 nodes
        assert_eq!(enumerate_values(&NatPoly::x(), &p, 3).len(), 2);
        // plus the two 5-node trees
        assert_eq!(enumerate_values(&NatPoly::x(), &p, 5).len(), 4);
        let vs = enumerate_values(&np("2 + x^2"), &np("1 + x + x^2"), 4);
        let mut seen = std::collections::HashSet::new();
        for v in &vs {
            v.validate(&np("1 + x + x^2")).unwrap();
            assert!(v.size() <= 4);
            assert!(seen.insert(v.clone()));
        }
    }

    #[test]
    fn text_format() {
        let t: Tree = "1(0, 1(0,0))".parse().unwrap();
        assert_eq!(t.to_string(), "1(0,1(0,0))");
        t.validate(&np("1 + x^2")).unwrap();
        assert!("1(0,".parse::<Tree>().is_err());
        assert!("1()".parse::<Tree>().is_err());
        assert!("1 2".parse::<Tree>().is_err());
        assert!(matches!(
            "1(0)".parse::<Tree>().unwrap().validate(&np("1 + x^2")),
            Err(TreeError::ArityMismatch { .. })
        ));
        assert!(matches!(
            parse_value("3", &np("1 + x"), &np("1 + x^2")),
            Err(TreeError::SlotOutOfRange { .. })
        ));
    }
}
