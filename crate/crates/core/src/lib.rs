//! Exact satisfiability and validity checking for probabilistic justification
//! logic over the basic justification logic J.
//!
//! The pipeline is: parse a formula ([`syntax`]), enumerate the atoms over its
//! basic subformulas, filter them with the atom-level J oracle ([`jsem`]) under
//! a constant specification ([`cspec`]), and decide the resulting exact linear
//! systems ([`linrat`]). Satisfiable inputs come with a small finite model
//! whose size bounds are checked before it is returned ([`solver`]).

pub mod cli;
pub mod cspec;
pub mod error;
pub mod jsem;
pub mod linrat;
pub mod rational;
pub mod solver;
pub mod syntax;

pub use error::{Error, Result};
pub use rational::Rational;
