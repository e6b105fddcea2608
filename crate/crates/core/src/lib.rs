//! Exact-arithmetic engine for finite-dimensional Hopf algebras,
//! Yetter–Drinfeld module algebras and braided Brauer group computations
//! over the rationals.

pub mod algebra;
pub mod check;
pub mod e2;
pub mod error;
pub mod hopf;
pub mod io;
pub mod linalg;
pub mod rational;
pub mod report;
pub mod sampling;
pub mod suites;
pub mod sweedler;
pub mod tensor;
pub mod yd;

pub use error::{Error, Result};
pub use rational::{q, qi, Rational};
