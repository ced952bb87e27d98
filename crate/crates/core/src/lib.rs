//! Exact computations for the quantum group SU_q(3), the quantum 5-sphere
//! and the quantum projective plane.

pub mod exactla;
pub mod expr;
pub mod haar;
pub mod holo;
pub mod ncpoly;
pub mod numeric;
pub mod qalgebras;
pub mod qcoeff;
pub mod report;
pub mod suite;
pub mod uqsu3;
