//! Exact-arithmetic toolkit for square superpotential quiver algebras on the
//! two-torus: impressions, toric centers, Y^{p,q} families, mutation,
//! Berenstein-Douglas resolutions, and simple-module moduli.

pub mod algebra;
pub mod error;
pub mod fixtures;
pub mod impression;
pub mod linalg;
pub mod monomial;
pub mod mutation;
pub mod quiver;
pub mod report;
pub mod resolution;
pub mod simples;
pub mod toric;
pub mod ypq;

pub use error::{Error, Result};
pub use monomial::Monomial4;
pub use quiver::{ArrowClass, Orientation, Quiver, TorusQuiver, UnitCycle};
