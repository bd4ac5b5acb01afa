//! Exactly solvable quantum systems built on exceptional Laguerre and Jacobi
//! polynomials: exact construction, algebraic verification, quadrature
//! orthogonality checks, and a finite-difference spectral cross-check.

pub mod classical;
pub mod cli;
pub mod polycore;
pub mod serial;
pub mod xconstruct;
pub mod quadrature;
pub mod spectral;
