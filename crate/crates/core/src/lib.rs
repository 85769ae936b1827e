//! Exact enumeration of the mex statistic over six weighted combinatorial
//! structures.
//!
//! * [`exactnum`]: big-integer combinatorial numbers.
//! * [`series`]: truncated power series over the rationals.
//! * [`structures`]: the objects themselves and brute-force enumeration.
//! * [`genfun`]: avoidance generating functions and closed forms.
//! * [`engine`]: inclusion-exclusion assembly of mex tables.
//! * [`verify`]: cross-checks between all of the above.

pub mod engine;
pub mod exactnum;
pub mod exec;
pub mod genfun;
pub mod series;
pub mod structures;
pub mod verify;

pub use engine::{MexEngine, MexTable, Method, TableMethod, ENGINE_MAX_M};
pub use exec::Execution;
pub use genfun::AvoidSet;
pub use series::TruncatedSeries;
pub use structures::{Object, StructureKind};
