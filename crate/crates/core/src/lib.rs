//! Exact computer-algebra kernels for computing and verifying equations of
//! fake projective planes.
//!
//! The crate is organized around the algorithmic stages of that computation:
//!
//! - [`exact`] — arbitrary-precision integers/rationals, residues mod `p^k`,
//!   number-field and cyclotomic arithmetic, Hensel lifting and rational
//!   reconstruction.
//! - [`mpoly`] — multivariate polynomials and homogeneous ideals over the
//!   coefficient rings of `exact`, Jacobians and linear coordinate changes.
//! - [`groebner`] — Buchberger Gröbner bases, normal forms, Hilbert
//!   series/polynomials.
//! - [`lift`] — polynomial-identity certificates solved mod `p` and lifted
//!   mod `p^k`, with exact reconstruction of the coefficients.
//! - [`lattice`] — exact-integer LLL, minimal-polynomial recognition from
//!   p-adic and high-precision floating data, equation-basis shrinking.
//! - [`grouprep`] — the order-648 group behind the cover tower, its
//!   Dixon–Schneider character table, restrictions and decompositions.
//! - [`geom`] — Riemann–Roch/Lefschetz dimension bookkeeping and the cover
//!   section kernels (Reynolds averaging, square/cube root branch handling).
//! - [`verify`] — Hilbert-polynomial checks, Jacobian smoothness probes and
//!   the singular-cut search.

pub mod exact;
pub mod groebner;
pub mod lattice;
pub mod mpoly;
pub mod oracle;
pub mod linalg;
