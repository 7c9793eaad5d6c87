//! Rack, degenerate and quandle homology of finite quandles, with
//! certification of cycles and boundaries and translation between colored
//! knot diagrams and the chains they represent.

pub mod catalog;
pub mod chains;
pub mod diagrams;
pub mod error;
pub mod homology;
pub mod intlin;
pub mod quandle;

pub use error::{Error, Result};
