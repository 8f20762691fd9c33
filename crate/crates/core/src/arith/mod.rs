//! Exact arithmetic over the rationals: big rationals, polynomials,
//! reduced rational functions and coprime-basis refinement.

pub mod basis;
pub mod poly;
pub mod rational;
pub mod ratfunc;
pub mod zpoly;

pub use basis::{coprime_basis, squarefree_decomposition, squarefree_part, CoprimeBasis};
pub use poly::{Degree, Poly};
pub use rational::{format_rational, parse_rational, Rational};
pub use ratfunc::RatFunc;
pub use zpoly::ZPoly;
