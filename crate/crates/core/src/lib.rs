//! Exact construction, detection and classification of finite
//! `k`-translatable groupoids and semigroups.

pub mod arith;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod format;
pub mod properties;
pub mod search;
pub mod structure;
pub mod table;
pub mod translatable;

pub use arith::Element;
pub use error::{Error, Result};
pub use table::{CayleyTable, KSequence, Ordering, Presentation, Witness};
