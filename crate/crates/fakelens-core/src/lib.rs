//! Exact-arithmetic computation of the higher simple structure sets of fake
//! lens spaces whose fundamental group is a cyclic 2-group.
//!
//! The library computes each structure set two independent ways and checks
//! that they agree:
//!
//! * a first-principles lattice pipeline through the representation ring —
//!   build the rho-invariant matrix over the group ring, take the integer
//!   preimage of `4 · R̂^±`, push it through the reduction map onto the
//!   normal-invariant torsion and read off the quotient structure;
//! * the closed formulas classifying the answer by the parities of the
//!   dimension parameters.
//!
//! The crate is `no_std` (with `alloc`); all arithmetic is exact, over
//! arbitrary-precision integers and rationals. IO, the CLI and the file
//! formats live in the companion `fakelens-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod exactalg;
pub mod lclass;
pub mod repring;
pub mod rho;
pub mod structset;
pub mod tables;

pub use exactalg::{FgAbelianGroup, Int, IntLattice, IntMatrix, Rat, RatMatrix};
