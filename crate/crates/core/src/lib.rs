//! Exact algebra of 2D radial differential operators and a numerical harness
//! for checking ladder actions and hidden symmetries.

pub mod cli;
pub mod opalg;
pub mod numerics;
pub mod systems;
