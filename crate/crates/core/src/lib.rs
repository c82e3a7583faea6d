pub mod error;
pub mod field;
pub mod fqlinalg;
pub mod group;
pub mod homcount;
pub mod rng;
pub mod chartab;
pub mod cli;
pub mod dist;
pub mod stats;
pub mod walkcert;
pub mod words;

pub use error::{Error, Result};
pub use group::{FiniteGroup, Group};
pub use words::Word;
