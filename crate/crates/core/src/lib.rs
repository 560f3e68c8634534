//! Certificates for polynomial identities in rigs.
//!
//! Given `p, q1, q2 ∈ ℕ[x]`, [`synth::synthesize`] builds an explicit chain of
//! link steps proving `q1 = q2` in `ℕ[x]/(x = p(x))` whenever `p(0) ≠ 0`,
//! `deg p ≥ 2`, both `q`s are non-constant, and `p(x) − x` divides
//! `q1 − q2` over ℤ. [`chain::verify`] replays such a chain using nothing but
//! polynomial arithmetic, and [`trees::apply_bijection`] runs it as a
//! bijection `q1(T) → q2(T)` on the trees `T ≅ p(T)`.
//!
//! ```
//! use rigproof::{synthesize, NatPoly};
//!
//! let p: NatPoly = "1 + x^2".parse().unwrap();
//! let cert = synthesize(&p, &"x^7".parse().unwrap(), &NatPoly::x()).unwrap();
//! assert!(cert.verify().is_valid());
//! ```
//!
//! The `examples/` directory has one program per capability:
//!
//! * `seven_trees`: prove `T⁷ ≅ T` for binary trees and run it on data
//! * `gaussian_trees`: the `T ≅ 1 + T + T²` family
//! * `check_hypotheses`: hypothesis reports and ring verdicts
//! * `sharpness`: counterexample rigs for dropped hypotheses
//! * `shortest_chain`: bounded search for short chains
//! * `certificate_file`: write, reload, corrupt and re-verify a certificate
//! * `random_example`: a larger generator with a hand-picked identity

pub mod chain;
pub mod cli;
pub mod hypotheses;
pub mod models;
pub mod poly;
pub mod rig;
pub mod synth;
pub mod trees;

pub use chain::{verify, Certificate, Direction, LinkStep, Verification};
pub use hypotheses::{check_complex_route, check_ring_implication, check_synthesis_preconditions};
pub use models::{find_counterexample, Model, RigElement};
pub use poly::{IntPoly, NatPoly, RatPoly};
pub use synth::{bfs_search, synthesize, SynthError};
pub use trees::{apply_bijection, Bijection, PolyValue, Run, Tree};
