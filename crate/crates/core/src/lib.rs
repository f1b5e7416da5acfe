//! Constant dimension codes and flag codes over finite fields.

pub mod cdc;
pub mod cli;
pub mod equiv;
pub mod error;
pub mod fixtures;
pub mod flags;
pub mod genset;
pub mod gf;
pub mod grassmann;
pub mod incdec;
pub mod io;
pub mod linalg;
pub mod random;
pub mod search;

pub use error::{Error, Result};
