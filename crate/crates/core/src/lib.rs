//! Rank-frequency analysis of small corpora.
//!
//! The pipeline runs tokenization ([`corpus`]), optional bound-morpheme
//! splitting ([`morphology`]), counting and ranking ([`rankfreq`]), model
//! fitting with chi-square goodness of fit ([`fitting`]), and comparison
//! against random "monkey" texts ([`nullmodel`]).

pub mod corpus;
pub mod error;
pub mod fitting;
pub mod morphology;
pub mod nullmodel;
pub mod rankfreq;

pub use error::{Error, Result};
