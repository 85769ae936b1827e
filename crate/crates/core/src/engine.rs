//! Inclusion-exclusion over avoidance series.
//!
//! With `G_T` the series of objects avoiding every weight in `T`:
//!
//! * `F_m = Σ_{T ⊆ [m]} (-1)^{|T|} G_T` counts objects containing every
//!   weight `1..=m`;
//! * `Γ_m = Σ_{T ⊆ [m], m ∈ T} (-1)^{|T|+1} G_T = F_{m-1} - F_m` counts
//!   objects with mex exactly `m`.
//!
//! The subset terms are independent and are evaluated through
//! [`Execution`]. `G_T` results are memoized per engine.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::exec::Execution;
use crate::genfun::{
    self, dp_gamma_closed, ic_gamma_closed, ip_gamma_series, is_gamma, pt_gamma1_series,
    pt_gamma2_coeff, sp_gamma_series, AvoidSet, GenFunError,
};
use crate::series::TruncatedSeries;
use crate::structures::{count_objects, mex_distribution_bf_with, StructureError, StructureKind};

/// Largest mex the engine will assemble (`2^(m-1)` subset terms per column).
pub const ENGINE_MAX_M: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("mex must be at least 1")]
    ZeroMex,
    #[error("engine supports m <= {ENGINE_MAX_M} (requested {0})")]
    MexTooLarge(usize),
    #[error(
        "cross-check mismatch for {kind} at n={n}, m={m}: {} = {}, {} = {}",
        first.0.label(), first.1, second.0.label(), second.1
    )]
    CrossCheckMismatch {
        kind: StructureKind,
        n: usize,
        m: usize,
        first: (Method, BigInt),
        second: (Method, BigInt),
    },
    #[error(transparent)]
    GenFun(#[from] GenFunError),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

/// How a table cell was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Engine,
    ClosedForm,
    BruteForce,
}

impl Method {
    pub fn label(self) -> &'static str {
        match self {
            Method::Engine => "engine",
            Method::ClosedForm => "closed form",
            Method::BruteForce => "brute force",
        }
    }
}

/// How to fill a [`MexTable`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableMethod {
    Engine,
    /// Closed forms where one exists for the cell, the engine elsewhere.
    ClosedForm,
    BruteForce,
    /// Engine values, compared against the closed form and (within the
    /// enumeration bounds) brute force.
    CrossCheck,
}

/// `γ_{n,m}` for `0 <= n <= max_n`, `1 <= m <= max_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MexTable {
    pub kind: StructureKind,
    pub max_n: usize,
    pub max_m: usize,
    /// `entries[n][m - 1]`
    pub entries: Vec<Vec<BigInt>>,
    /// Objects of size `n` with mex greater than `max_m`.
    pub residual: Vec<BigInt>,
    /// `methods[n][m - 1]`
    pub methods: Vec<Vec<Method>>,
}

impl MexTable {
    pub fn get(&self, n: usize, m: usize) -> Option<&BigInt> {
        if m == 0 {
            return None;
        }
        self.entries.get(n)?.get(m - 1)
    }

    /// Column `m` as a sequence indexed by `n`.
    pub fn column(&self, m: usize) -> Vec<BigInt> {
        self.entries.iter().map(|row| row[m - 1].clone()).collect()
    }

    /// Row `n` with an extra leading `m = 0` column, placing the empty
    /// object under `m = 0` instead of `m = 1`.
    pub fn row_with_empty_at_zero(&self, n: usize) -> Vec<BigInt> {
        let mut row = Vec::with_capacity(self.max_m + 1);
        row.push(BigInt::zero());
        row.extend(self.entries[n].iter().cloned());
        if n == 0 && self.max_m > 0 {
            row[0] = std::mem::take(&mut row[1]);
        }
        row
    }
}

type GtKey = (StructureKind, AvoidSet, usize);

/// Table entries with the method behind each one.
type Cells = (Vec<Vec<BigInt>>, Vec<Vec<Method>>);

/// Evaluates `F_m`, `Γ_m` and mex tables, caching avoidance series.
#[derive(Debug, Default)]
pub struct MexEngine {
    exec: Execution,
    cache: Mutex<HashMap<GtKey, Arc<TruncatedSeries>>>,
}

impl MexEngine {
    pub fn new(exec: Execution) -> Self {
        Self { exec, cache: Mutex::new(HashMap::new()) }
    }

    pub fn execution(&self) -> Execution {
        self.exec
    }

    /// Memoized [`genfun::gt_series`].
    pub fn gt(
        &self,
        kind: StructureKind,
        avoid: &AvoidSet,
        order: usize,
    ) -> Result<Arc<TruncatedSeries>, GenFunError> {
        let key = (kind, avoid.clone(), order);
        if let Some(hit) = self.cache.lock().expect("cache poisoned").get(&key) {
            return Ok(Arc::clone(hit));
        }
        let series = Arc::new(genfun::gt_series(kind, avoid, order)?);
        self.cache
            .lock()
            .expect("cache poisoned")
            .entry(key)
            .or_insert_with(|| Arc::clone(&series));
        Ok(series)
    }

    fn signed_sum(
        &self,
        kind: StructureKind,
        order: usize,
        masks: &[u64],
        sign_of: impl Fn(u64) -> bool + Sync + Send,
    ) -> Result<TruncatedSeries, EngineError> {
        let terms = self.exec.try_map(masks, |&mask| {
            self.gt(kind, &AvoidSet::from_mask(mask), order).map(|g| (mask, g))
        })?;
        let mut acc = TruncatedSeries::zero(order);
        for (mask, g) in terms {
            acc = if sign_of(mask) { &acc + &g } else { &acc - &g };
        }
        Ok(acc)
    }

    /// Objects containing at least one piece of each weight `1..=m`.
    pub fn f_series(
        &self,
        kind: StructureKind,
        m: usize,
        order: usize,
    ) -> Result<TruncatedSeries, EngineError> {
        if m > ENGINE_MAX_M {
            return Err(EngineError::MexTooLarge(m));
        }
        let masks: Vec<u64> = (0..1u64 << m).collect();
        self.signed_sum(kind, order, &masks, |mask| mask.count_ones() % 2 == 0)
    }

    /// Objects with mex exactly `m`, summing over the `2^(m-1)` sets
    /// `T ⊆ [m]` that contain `m`.
    pub fn gamma_series(
        &self,
        kind: StructureKind,
        m: usize,
        order: usize,
    ) -> Result<TruncatedSeries, EngineError> {
        if m == 0 {
            return Err(EngineError::ZeroMex);
        }
        if m > ENGINE_MAX_M {
            return Err(EngineError::MexTooLarge(m));
        }
        let top = 1u64 << (m - 1);
        let masks: Vec<u64> = (0..top).map(|rest| rest | top).collect();
        self.signed_sum(kind, order, &masks, |mask| mask.count_ones() % 2 == 1)
    }

    fn engine_columns(
        &self,
        kind: StructureKind,
        max_n: usize,
        max_m: usize,
    ) -> Result<Vec<Vec<BigInt>>, EngineError> {
        (1..=max_m)
            .map(|m| {
                let s = self.gamma_series(kind, m, max_n)?;
                Ok(s.to_integers().map_err(GenFunError::from)?)
            })
            .collect()
    }

    /// Closed-form column `m`, or `None` where no closed form covers the
    /// cell (the engine fills those).
    fn closed_column(
        &self,
        kind: StructureKind,
        m: usize,
        max_n: usize,
    ) -> Result<Vec<Option<BigInt>>, EngineError> {
        let series_column = |s: TruncatedSeries| -> Result<Vec<Option<BigInt>>, EngineError> {
            let v = s.to_integers().map_err(GenFunError::from)?;
            Ok(v.into_iter().map(Some).collect())
        };
        Ok(match kind {
            StructureKind::IntegerPartition => series_column(ip_gamma_series(m, max_n)?)?,
            StructureKind::IntegerComposition => {
                (0..=max_n).map(|n| Some(ic_gamma_closed(n as u64, m as u64))).collect()
            }
            StructureKind::InversionSequence => {
                (0..=max_n).map(|n| Some(is_gamma(n as u64, m as u64))).collect()
            }
            StructureKind::SetPartition => series_column(sp_gamma_series(m, max_n)?)?,
            StructureKind::DyckPath if m <= 2 => series_column(dp_gamma_closed(m, max_n)?)?,
            StructureKind::PlanarTree if m == 1 => series_column(pt_gamma1_series(max_n)?)?,
            // the coefficient formula is only valid from two vertices on
            StructureKind::PlanarTree if m == 2 => (0..=max_n)
                .map(|n| (n >= 2).then(|| pt_gamma2_coeff(n as u64)).transpose())
                .collect::<Result<_, _>>()?,
            _ => vec![None; max_n + 1],
        })
    }

    fn brute_rows(
        &self,
        kind: StructureKind,
        max_n: usize,
        max_m: usize,
    ) -> Result<Vec<Vec<BigInt>>, EngineError> {
        (0..=max_n)
            .map(|n| {
                let d = mex_distribution_bf_with(kind, n, self.exec)?;
                Ok((1..=max_m)
                    .map(|m| BigInt::from(d.get(&(m as u32)).copied().unwrap_or(0)))
                    .collect())
            })
            .collect()
    }

    pub fn mex_table(
        &self,
        kind: StructureKind,
        max_n: usize,
        max_m: usize,
        method: TableMethod,
    ) -> Result<MexTable, EngineError> {
        let (entries, methods) = match method {
            TableMethod::Engine => {
                let cols = self.engine_columns(kind, max_n, max_m)?;
                (transpose(&cols, max_n), vec![vec![Method::Engine; max_m]; max_n + 1])
            }
            TableMethod::BruteForce => {
                kind.check_bound(max_n)?;
                (self.brute_rows(kind, max_n, max_m)?, vec![vec![Method::BruteForce; max_m]; max_n + 1])
            }
            TableMethod::ClosedForm => self.closed_table(kind, max_n, max_m)?,
            TableMethod::CrossCheck => {
                let cols = self.engine_columns(kind, max_n, max_m)?;
                let engine = transpose(&cols, max_n);
                self.cross_check(kind, &engine, max_n, max_m)?;
                (engine, vec![vec![Method::Engine; max_m]; max_n + 1])
            }
        };
        let residual = entries
            .iter()
            .enumerate()
            .map(|(n, row)| count_objects(kind, n) - row.iter().sum::<BigInt>())
            .collect::<Vec<_>>();
        debug_assert!(residual.iter().all(|r| !r.is_negative()));
        Ok(MexTable { kind, max_n, max_m, entries, residual, methods })
    }

    fn closed_table(
        &self,
        kind: StructureKind,
        max_n: usize,
        max_m: usize,
    ) -> Result<Cells, EngineError> {
        let mut entries = vec![Vec::with_capacity(max_m); max_n + 1];
        let mut methods = vec![Vec::with_capacity(max_m); max_n + 1];
        for m in 1..=max_m {
            let closed = self.closed_column(kind, m, max_n)?;
            let engine = if closed.iter().any(Option::is_none) {
                Some(self.gamma_series(kind, m, max_n)?.to_integers().map_err(GenFunError::from)?)
            } else {
                None
            };
            for (n, cell) in closed.into_iter().enumerate() {
                match cell {
                    Some(v) => {
                        entries[n].push(v);
                        methods[n].push(Method::ClosedForm);
                    }
                    None => {
                        entries[n].push(engine.as_ref().expect("engine column computed")[n].clone());
                        methods[n].push(Method::Engine);
                    }
                }
            }
        }
        Ok((entries, methods))
    }

    fn cross_check(
        &self,
        kind: StructureKind,
        engine: &[Vec<BigInt>],
        max_n: usize,
        max_m: usize,
    ) -> Result<(), EngineError> {
        let mismatch = |n: usize, m: usize, other: Method, value: BigInt| EngineError::CrossCheckMismatch {
            kind,
            n,
            m,
            first: (Method::Engine, engine[n][m - 1].clone()),
            second: (other, value),
        };
        for m in 1..=max_m {
            for (n, cell) in self.closed_column(kind, m, max_n)?.into_iter().enumerate() {
                if let Some(v) = cell {
                    if v != engine[n][m - 1] {
                        return Err(mismatch(n, m, Method::ClosedForm, v));
                    }
                }
            }
        }
        let brute_max = max_n.min(kind.brute_force_bound());
        let brute = self.brute_rows(kind, brute_max, max_m)?;
        for (n, row) in brute.into_iter().enumerate() {
            for (i, v) in row.into_iter().enumerate() {
                if v != engine[n][i] {
                    return Err(mismatch(n, i + 1, Method::BruteForce, v));
                }
            }
        }
        Ok(())
    }
}

fn transpose(cols: &[Vec<BigInt>], max_n: usize) -> Vec<Vec<BigInt>> {
    (0..=max_n).map(|n| cols.iter().map(|c| c[n].clone()).collect()).collect()
}

pub fn f_series(kind: StructureKind, m: usize, order: usize) -> Result<TruncatedSeries, EngineError> {
    MexEngine::default().f_series(kind, m, order)
}

pub fn gamma_series(
    kind: StructureKind,
    m: usize,
    order: usize,
) -> Result<TruncatedSeries, EngineError> {
    MexEngine::default().gamma_series(kind, m, order)
}

pub fn mex_table(
    kind: StructureKind,
    max_n: usize,
    max_m: usize,
    method: TableMethod,
) -> Result<MexTable, EngineError> {
    MexEngine::default().mex_table(kind, max_n, max_m, method)
}
