//! Exact arithmetic for two prehomogeneous spaces of G₂ type over ℚ: orbit
//! classification by square classes and norm classes, explicit orbit
//! representatives, stabilizers, and the Galois-cohomology bookkeeping
//! behind them.

pub mod battery;
pub mod case1;
pub mod case2;
pub mod cohomology;
pub mod error;
pub mod fields;
pub mod g2rep;
pub mod io;
pub mod linalg;
pub mod sample;

pub use case1::Vec7;
pub use case2::{BinForm, GroupElem2, PairVec};
pub use cohomology::{Cocycle, NormClass, SigmaStructure};
pub use error::{Error, Result};
pub use fields::{QuadElem, QuadField, Rat, SquareClass};
pub use g2rep::{GroupElem1, TriVector};
pub use linalg::{HermitianMat, Mat, Scalar};
