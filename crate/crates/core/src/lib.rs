//! Exact Calabi-Yau criteria for braided Hopf algebras of finite Cartan type over finite
//! abelian groups, and for their smash products with the group algebra.
//!
//! Scalars live in cyclotomic fields ([`cyclotomic`]), data are Cartan datums ([`datum`]) or
//! Lie algebras with a group action ([`lie`]), and the Hopf structure of `R#kΓ` is verified
//! symbolically up to a degree bound ([`smash`]).

#![allow(clippy::needless_range_loop)]

pub mod cartan;
pub mod cli;
pub mod cyclotomic;
pub mod error;
pub mod group;
pub mod io;
pub mod lie;
pub mod rational;
pub mod datum;
pub mod report;
pub mod sample;
pub mod smash;
