//! Exact, combinatorial certificates of virtual fibration for classic
//! Montesinos links `(q_1/p, ..., q_n/p)` with a common odd denominator.
//!
//! The pipeline reconstructs every step that can be checked without
//! geometry: the Seifert invariants of the double branched cover, the
//! `p^2`-fold cover tower of the base orbifold and its curve system, the
//! horizontal surface of the JSJ pieces and the resulting semi-bundle,
//! and the sign conditions that make the Dehn-twisted fibration
//! transverse to the lifted link. [`pipeline::certify`] runs it end to end.
//!
//! All arithmetic is exact. Indices of cover sheets are `0..p`; the
//! difference `i - k` is always taken as the non-negative residue mod `p`.

pub mod cover;
pub mod dot;
pub mod exact;
pub mod graph_manifold;
pub mod pipeline;
pub mod report;
pub mod seifert;
pub mod tangle;
pub mod transversality;

pub use pipeline::{certify, Outcome, PipelineError};
pub use tangle::{parse_montesinos, MontesinosLink, TangleFraction};
