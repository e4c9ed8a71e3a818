//! Signed generating functions `Σ (−1)^{ℓ(σ)} x^{L(σ)}` of the odd length
//! `L` over descent classes of the symmetric group.
//!
//! The crate has three layers:
//!
//! * exact data: [`perm`], [`class`] and [`laurent`];
//! * closed forms and class rewrites: [`closed_form`] and [`transforms`];
//! * ground truth and checking: [`oracle`] (brute-force enumeration) and
//!   [`verify`] (exhaustive scans pitting the two against each other).
//!
//! [`cli`] is the command-line front end used by the `oddinv` binary.

pub mod class;
pub mod cli;
pub mod closed_form;
pub mod error;
pub mod laurent;
pub mod oracle;
pub mod perm;
pub mod transforms;
pub mod verify;

pub use class::{ClassSpec, Interval, PositionSet};
pub use error::{Error, Result};
pub use laurent::SignedPoly;
pub use perm::{ChessboardClass, Permutation, Population};
