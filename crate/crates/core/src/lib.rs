//! Local-orbit geometry of bipartite `K × M` quantum states.

pub mod algebra;
pub mod analysis;
pub mod appendix;
pub mod canonical;
pub mod entanglement;
pub mod error;
pub mod gram;
pub mod io;
pub mod linalg;
pub mod scans;
pub mod states;
pub mod strata;

pub use error::{Error, Result};
pub use linalg::{CMat, CVec, RMat};
