//! Symbolic computations in the smash product `R#kΓ`.

pub mod confluence;
pub mod element;
pub mod hopf;
pub mod presentation;
pub mod verify;
pub mod word;

pub use confluence::{ConfluenceReport, Divergence};
pub use element::{Monomial, SmashElement, Tensor};
pub use verify::DiagonalAutomorphism;
pub use presentation::{PresentedAlgebra, Relation, Rule, DEFAULT_DEGREE_BOUND};
pub use word::Word;
