pub mod classify;
pub mod error;
pub mod generate;
pub mod graph;
pub mod maxcut;
pub mod planar;
pub mod polytope;
pub mod spqr;
pub mod tjoin;
pub mod verify;

pub use error::{Error, ParseError, Result};
pub use graph::{Cut, Graph};
