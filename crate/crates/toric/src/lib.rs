//! Grevlex initial ideals and reduced Groebner bases of simplicial toric
//! ideals, computed combinatorially from the defining semigroup rather
//! than by critical-pair completion.
//!
//! The pipeline: validate a presentation, enumerate the bounded
//! complement `B_A` layer by layer, group it into equivalence classes to
//! read off the decomposition and ring flags, then assemble the minimal
//! generators of the initial ideal and the reduced basis. The `verify`
//! module re-derives everything by brute force for cross-checking.

pub mod cli;
pub mod core;
pub mod decompose;
pub mod enumerate;
pub mod groebner;
pub mod verify;
