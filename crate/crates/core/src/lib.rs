//! Exact arithmetic for symmetric real polynomials and the degree / half-degree
//! principles.
//!
//! A symmetric polynomial `F` of degree `d` in `n` variables has a real zero iff
//! it has one on the points with at most `d` distinct coordinates, and it is
//! nonnegative on `R^n` (or the orthant) iff it is nonnegative on the points with
//! at most `max(2, d/2)` distinct (nonzero) coordinates. This crate provides the
//! machinery behind those statements:
//!
//! - [`poly`]: exact sparse multivariate and dense univariate polynomials over `Q`.
//! - [`symmetric`]: `e_k` / `p_k` families, Newton identities, and the
//!   decomposition `F = G(e_1, ..., e_n)` with its structural split.
//! - [`hyperbolic`]: Sylvester (Hankel power-sum) matrices, exact inertia,
//!   real-rootedness tests, root profiles and distinct-root perturbations.
//! - [`reduction`]: multiplicity patterns and reduced instances on the test sets.
//! - [`search`]: grid / descent minimization, zero search, a brute-force oracle and
//!   the slice-optimization experiment.

pub mod error;
pub mod hyperbolic;
pub mod poly;
pub mod reduction;
pub mod search;
pub mod symmetric;

pub use error::{Error, Result};
pub use hyperbolic::{InertiaResult, Perturbation, RootProfile, SymMatrix};
pub use poly::{FloatPoly, Monomial, MultiPoly, Rational, UniPoly};
pub use reduction::{Mode, MultiplicityPattern, Principle, ReducedInstance};
pub use search::{SearchConfig, Verdict, VerdictStatus, Witness};
pub use symmetric::{GPoly, StructuralSplit};
