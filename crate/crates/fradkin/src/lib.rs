//! Exact computations for the parametric Demkov-Fradkin Lie algebra family,
//! its Killing forms and matrix representations, and a superintegrable
//! discretization of the isotropic harmonic oscillator.

pub mod algebra_core;
pub mod error;
pub mod exec;
pub mod ext;
pub mod iho_discretization;
pub mod killing_levi;
pub mod matrix;
pub mod nambu_gradient;
pub mod rational;
pub mod representations;
pub mod sample;
pub mod symplectic_oracle;
pub mod tables;

pub use error::{Error, Result};
pub use rational::Q;
