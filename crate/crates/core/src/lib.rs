//! Exact computation of Gelfand–Tsetlin dimensions and their boundary limits.
//!
//! The crate computes relative dimensions `Dim_{K,N}(κ,ν)/Dim_N ν` of the
//! Gelfand–Tsetlin graph by several independent exact routes (lattice-path
//! counting, a skew Jacobi–Trudi determinant, basis-coefficient extraction,
//! and a residue determinant), evaluates the Schur-type special functions
//! behind those routes, and realizes the boundary objects: the generating
//! function `Φ(u;ω)`, its Laurent coefficients `φ_n`, the Markov kernels
//! `Λ^∞_K`, and the integral kernels `R_k^{(j)}(u;N)`.
//!
//! Modules:
//! - [`exact`]: arbitrary-precision rationals, rational functions with
//!   rational root/pole multisets, fraction-free determinants, exact Laurent
//!   windows via partial fractions.
//! - [`gt`]: signatures, interlacing, path-counting DP, the Weyl dimension
//!   formula, rational Schur evaluation, weight multiplicities, modified
//!   Frobenius coordinates.
//! - [`schur`]: shifted Schur `S*_μ`, dual Schur `σ_μ`, the Schur-like family
//!   `𝔖_{κ|N}`, `H*(t;ν)`, the finite Cauchy-type sum, and the difference
//!   operator realizing `D_{N,N−1}`.
//! - [`reldim`]: relative dimensions by the basis-coefficient and
//!   residue-determinant routes, the stochastic links `Λ^N_K`, and the
//!   generating-expansion cross-check.
//! - [`boundary`]: the parameter space `Ω`, `Φ(u;ω)`, exact and numeric
//!   `φ_n`, `Λ^∞_K`, contour quadrature, approximation sweeps, and the
//!   log-concavity check.

pub use num;

pub mod boundary;
pub mod error;
pub mod exact;
pub mod gt;
pub mod reldim;
pub mod schur;

pub use error::{Error, Result};
pub use exact::{Rat, RationalFn};
pub use gt::Signature;
