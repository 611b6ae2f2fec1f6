//! Exact computations on finitely presented diffeological spaces: tangent
//! spaces and `T^k` fibres as colimits of germ diagrams, the comparison map
//! `ρ : T^k -> ⋀^k T`, and compatibility of differential forms.
//!
//! All arithmetic is over arbitrary-precision rationals. Results are about the
//! finite fragment of the germ category that a presentation lists.

#![no_std]

extern crate alloc;

pub mod catalog;
pub mod error;
pub mod forms;
pub mod linalg;
pub mod multilinear;
pub mod presentation;
pub mod symcalc;
pub mod tangent;

pub use error::{Error, Result};
pub use linalg::{RatMat, Rational};
pub use presentation::{GermPresentation, PresentedMap, Tri};
pub use symcalc::{Poly, PolyForm, PolyMap};
