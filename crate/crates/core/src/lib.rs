//! Landau–Bloch univalence radii for elliptic polyharmonic mappings.
//!
//! The crate is organised in three layers:
//!
//! * [`mapping`] represents truncated polyharmonic series
//!   `F(z) = a0 + Σ_k |z|^{2(k-1)} (h_k(z) + conj(g_k(z)))`, the closed-form
//!   extremal functions `F1`/`F2`, Wirtinger derivatives and distortions,
//!   and a deterministic generator of admissible random coefficient tables.
//! * [`radii`] evaluates the radius equations for the elliptic theorems and
//!   their harmonic / quasiregular baselines, and solves them with a
//!   safeguarded bracketing root finder.
//! * [`verify`] is a numerical falsification harness: grid injectivity
//!   checks, schlicht-disk boundary scans, coefficient-bound checks,
//!   sharpness probes on the extremal functions and a Parseval cross-check.
//!
//! [`cli`] wires all of this into the `landau` binary.
//!
//! ```
//! use polyharmonic_landau::radii::{solve, TheoremParams};
//! use polyharmonic_landau::mapping::EllipticParams;
//!
//! let params = TheoremParams::T26 { p: 1, elliptic: EllipticParams::new(1.0, 0.0)?, lambda: 1.0 };
//! let result = solve(&params)?;
//! assert!((result.radius - 0.5).abs() < 1e-12);
//! # Ok::<(), polyharmonic_landau::Error>(())
//! ```

pub mod cli;
pub mod error;
pub mod mapping;
pub mod radii;
pub mod verify;

pub use error::{Error, Result};
pub use num_complex::Complex64;
