//! Desk-scale machinery for transcendence-measure computations: exact
//! multivariate polynomial arithmetic with degree/height certificates,
//! semi-resultant elimination, a Siegel-lemma solver, auxiliary exponential
//! polynomials, and certified arbitrary-precision ball evaluation.
//!
//! The crate is organized around the effective objects:
//!
//! * [`exactpoly`] — sparse integer polynomials with cached degrees and height;
//! * [`algnum`] — algebraic numbers, quadratic-irrational reduction data,
//!   complex balls and the transcendental triple (log a2/log a1, a1^b, a2^b);
//! * [`elimination`] — resultants, semi-resultants and their degree/height
//!   certificates, integer factorization, small-value factor extraction;
//! * [`siegel`] — small nontrivial solutions of polynomial linear systems;
//! * [`auxfn`] — auxiliary exponential polynomial construction and the
//!   Schwarz / Tijdeman / Hermite checkers;
//! * [`pipeline`] — budget arithmetic, the elimination chain, the exhaustive
//!   coprime-pair scanner and the comparison bound evaluators;
//! * [`suite`] — the acceptance suites run by `gk suite` and the
//!   `acceptance` integration test.

pub mod algnum;
pub mod auxfn;
pub mod elimination;
pub mod exactpoly;
pub mod pipeline;
pub mod siegel;
pub mod suite;

pub use algnum::{AlgebraicNumber, Ball, QuadraticData, TranscendentalTriple};
pub use exactpoly::MultiPoly;
