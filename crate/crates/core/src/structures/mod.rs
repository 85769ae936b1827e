//! The six weighted combinatorial structures, their objects, exhaustive
//! enumeration by size and direct mex evaluation.
//!
//! Enumeration is the ground truth every generating function in this crate
//! is checked against.

mod enumerate;
mod objects;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::exactnum::{bell, catalan, factorial, partition_count};

pub use enumerate::{
    enumerate, for_each_object, max_distribution_is, max_distribution_is_with,
    mex_distribution_bf, mex_distribution_bf_with, weight_mask_histogram,
    weight_mask_histogram_with, Distribution, MaskHistogram,
};
pub use objects::{
    peak_conditions_hold, Composition, DyckPath, IntegerPartition, InversionSequence, Peak,
    PlanarTree, SetPartition, Step, TreeNode,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("invalid {kind}: {reason}")]
    Invalid { kind: StructureKind, reason: String },
    #[error("brute-force enumeration of {kind} is limited to n <= {bound} (requested n = {n})")]
    BoundExceeded { kind: StructureKind, n: usize, bound: usize },
    #[error("unknown structure `{0}` (expected one of ip, ic, is, dp, sp, pt)")]
    UnknownKind(String),
}

impl StructureError {
    pub(crate) fn invalid(kind: StructureKind, reason: impl Into<String>) -> Self {
        StructureError::Invalid { kind, reason: reason.into() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StructureKind {
    IntegerPartition,
    IntegerComposition,
    InversionSequence,
    DyckPath,
    SetPartition,
    PlanarTree,
}

impl StructureKind {
    pub const ALL: [StructureKind; 6] = [
        StructureKind::IntegerPartition,
        StructureKind::IntegerComposition,
        StructureKind::InversionSequence,
        StructureKind::DyckPath,
        StructureKind::SetPartition,
        StructureKind::PlanarTree,
    ];

    /// Short lowercase code used on the command line.
    pub fn code(self) -> &'static str {
        match self {
            StructureKind::IntegerPartition => "ip",
            StructureKind::IntegerComposition => "ic",
            StructureKind::InversionSequence => "is",
            StructureKind::DyckPath => "dp",
            StructureKind::SetPartition => "sp",
            StructureKind::PlanarTree => "pt",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            StructureKind::IntegerPartition => "integer partition",
            StructureKind::IntegerComposition => "integer composition",
            StructureKind::InversionSequence => "inversion sequence",
            StructureKind::DyckPath => "Dyck path",
            StructureKind::SetPartition => "set partition",
            StructureKind::PlanarTree => "planar tree",
        }
    }

    /// Largest size accepted by the brute-force enumerators.
    pub fn brute_force_bound(self) -> usize {
        match self {
            StructureKind::IntegerPartition => 25,
            StructureKind::IntegerComposition => 18,
            StructureKind::InversionSequence => 9,
            StructureKind::DyckPath => 13,
            StructureKind::SetPartition => 11,
            StructureKind::PlanarTree => 13,
        }
    }

    pub(crate) fn check_bound(self, n: usize) -> Result<(), StructureError> {
        let bound = self.brute_force_bound();
        if n > bound {
            Err(StructureError::BoundExceeded { kind: self, n, bound })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for StructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StructureKind {
    type Err = StructureError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        StructureKind::ALL
            .into_iter()
            .find(|k| k.code().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| StructureError::UnknownKind(s.to_string()))
    }
}

/// An object of one of the six structures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Object {
    Partition(IntegerPartition),
    Composition(Composition),
    InversionSequence(InversionSequence),
    DyckPath(DyckPath),
    SetPartition(SetPartition),
    PlanarTree(PlanarTree),
}

impl Object {
    pub fn kind(&self) -> StructureKind {
        match self {
            Object::Partition(_) => StructureKind::IntegerPartition,
            Object::Composition(_) => StructureKind::IntegerComposition,
            Object::InversionSequence(_) => StructureKind::InversionSequence,
            Object::DyckPath(_) => StructureKind::DyckPath,
            Object::SetPartition(_) => StructureKind::SetPartition,
            Object::PlanarTree(_) => StructureKind::PlanarTree,
        }
    }

    /// Sum of parts, length, semilength, ground-set size or vertex count.
    pub fn size(&self) -> usize {
        match self {
            Object::Partition(p) => p.size(),
            Object::Composition(c) => c.size(),
            Object::InversionSequence(s) => s.size(),
            Object::DyckPath(d) => d.size(),
            Object::SetPartition(s) => s.size(),
            Object::PlanarTree(t) => t.size(),
        }
    }

    /// Weight of every piece: part values, entries, peak heights, block
    /// sizes or child counts. Repeats are kept.
    pub fn piece_weights(&self) -> Vec<u32> {
        match self {
            Object::Partition(p) => p.parts().to_vec(),
            Object::Composition(c) => c.parts().to_vec(),
            Object::InversionSequence(s) => s.entries().to_vec(),
            Object::DyckPath(d) => d.peaks().iter().map(|p| p.y).collect(),
            Object::SetPartition(s) => s.blocks().iter().map(|b| b.len() as u32).collect(),
            Object::PlanarTree(t) => t.child_counts(),
        }
    }

    pub fn mex(&self) -> u32 {
        mex_of(self)
    }

    /// Bit `w` is set iff some piece has weight `w`, for `1 <= w <= 63`.
    pub fn weight_mask(&self) -> u64 {
        self.piece_weights()
            .into_iter()
            .filter(|&w| (1..64).contains(&w))
            .fold(0u64, |m, w| m | (1u64 << w))
    }
}

/// Smallest `k >= 1` such that no piece of `obj` has weight `k`. The empty
/// object of every structure has mex 1.
pub fn mex_of(obj: &Object) -> u32 {
    mex_of_weights(&obj.piece_weights())
}

pub(crate) fn mex_of_weights(weights: &[u32]) -> u32 {
    let mut seen = vec![false; weights.len() + 2];
    for &w in weights {
        if let Some(slot) = seen.get_mut(w as usize) {
            *slot = true;
        }
    }
    (1..seen.len()).find(|&k| !seen[k]).expect("pigeonhole") as u32
}

/// Number of objects of size `n`, from the classical formulas.
pub fn count_objects(kind: StructureKind, n: usize) -> BigInt {
    let n64 = n as u64;
    match kind {
        StructureKind::IntegerPartition => partition_count(n64),
        StructureKind::IntegerComposition => {
            if n == 0 {
                BigInt::from(1)
            } else {
                BigInt::from(1) << (n - 1)
            }
        }
        StructureKind::InversionSequence => factorial(n64),
        StructureKind::DyckPath => catalan(n64),
        StructureKind::SetPartition => bell(n64),
        StructureKind::PlanarTree => {
            if n == 0 {
                BigInt::from(1)
            } else {
                catalan(n64 - 1)
            }
        }
    }
}
