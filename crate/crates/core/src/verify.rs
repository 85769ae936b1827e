//! Runs every available cross-check for one structure and collects the
//! outcome of each comparison in a [`Report`].
//!
//! Comparisons performed, where they apply:
//!
//! * engine mex counts against brute-force enumeration;
//! * closed forms against the engine;
//! * `Γ_m = F_{m-1} - F_m`;
//! * row sums against the classical totals;
//! * every `G_T` with `T ⊆ [min(max_m, 5)]` against enumeration;
//! * structure-specific identities (Dyck path decompositions, the
//!   Lagrange-inversion count for planar trees, the subset-sum coefficients
//!   for inversion sequences);
//! * for inversion sequences, the observed equality between mex counts and
//!   the distribution of the largest entry.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::engine::{EngineError, MexEngine, ENGINE_MAX_M};
use crate::exec::Execution;
use crate::genfun::{
    gt_series, is_summed_gt_coeff, pt_g2_coeff, pt_gamma2_coeff, AvoidSet, GenFunError,
};
use crate::series::TruncatedSeries;
use crate::structures::{
    count_objects, max_distribution_is_with, mex_distribution_bf_with, weight_mask_histogram_with,
    StructureError, StructureKind,
};

/// Largest weight whose avoidance sets are checked exhaustively.
const GT_CHECK_MAX_WEIGHT: usize = 5;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("max-m must be between 1 and {ENGINE_MAX_M} (got {0})")]
    MexRange(usize),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    GenFun(#[from] GenFunError),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    /// A known, documented disagreement that is not a failure.
    SkippedKnown,
    ConjecturePass,
    ConjectureFail,
}

impl Status {
    pub fn is_failure(self) -> bool {
        matches!(self, Status::Fail | Status::ConjectureFail)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::SkippedKnown => "SKIPPED-KNOWN",
            Status::ConjecturePass => "CONJECTURE-PASS",
            Status::ConjectureFail => "CONJECTURE-FAIL",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub status: Status,
    pub name: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub kind: StructureKind,
    pub max_n: usize,
    pub max_m: usize,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        !self.checks.iter().any(|c| c.status.is_failure())
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verify {} (n <= {}, m <= {})", self.kind.code(), self.max_n, self.max_m)?;
        for c in &self.checks {
            writeln!(f, "{:<15} {}: {}", c.status.to_string(), c.name, c.detail)?;
        }
        let failed = self.checks.iter().filter(|c| c.status.is_failure()).count();
        writeln!(
            f,
            "{} checks, {} failed, {} skipped-known: {}",
            self.checks.len(),
            failed,
            self.count(Status::SkippedKnown),
            if failed == 0 { "OK" } else { "FAILED" }
        )
    }
}

struct Recorder(Vec<Check>);

impl Recorder {
    fn push(&mut self, status: Status, name: impl Into<String>, detail: impl Into<String>) {
        self.0.push(Check { status, name: name.into(), detail: detail.into() });
    }

    /// Records PASS if `first` is `None`, otherwise FAIL with the message.
    fn outcome(&mut self, name: impl Into<String>, ok_detail: String, first: Option<String>) {
        match first {
            None => self.push(Status::Pass, name, ok_detail),
            Some(msg) => self.push(Status::Fail, name, msg),
        }
    }
}

fn first_mismatch<'a>(
    cells: impl IntoIterator<Item = (usize, &'a BigInt, &'a BigInt)>,
    left: &str,
    right: &str,
) -> Option<String> {
    cells
        .into_iter()
        .find(|(_, a, b)| a != b)
        .map(|(n, a, b)| format!("n={n}: {left} {a}, {right} {b}"))
}

/// Checks `kind` for `0 <= n <= max_n`, `1 <= m <= max_m`. `max_n` must lie
/// within the brute-force bound of the structure and `max_m` within the
/// engine limit.
pub fn verify_structure(
    kind: StructureKind,
    max_n: usize,
    max_m: usize,
    exec: Execution,
) -> Result<Report, VerifyError> {
    if !(1..=ENGINE_MAX_M).contains(&max_m) {
        return Err(VerifyError::MexRange(max_m));
    }
    let bound = kind.brute_force_bound();
    if max_n > bound {
        return Err(StructureError::BoundExceeded { kind, n: max_n, bound }.into());
    }
    let engine = MexEngine::new(exec);
    let mut rec = Recorder(Vec::new());

    let brute: Vec<_> = (0..=max_n)
        .map(|n| mex_distribution_bf_with(kind, n, exec))
        .collect::<Result<_, _>>()?;
    let brute_cell = |n: usize, m: usize| BigInt::from(brute[n].get(&(m as u32)).copied().unwrap_or(0));

    let mut gammas = Vec::with_capacity(max_m);
    for m in 1..=max_m {
        let g = engine.gamma_series(kind, m, max_n)?.to_integers().map_err(GenFunError::from)?;
        gammas.push(g);
    }

    for m in 1..=max_m {
        let col = &gammas[m - 1];
        let bf: Vec<BigInt> = (0..=max_n).map(|n| brute_cell(n, m)).collect();
        rec.outcome(
            format!("engine vs brute force, m={m}"),
            format!("n=0..{max_n} agree"),
            first_mismatch((0..=max_n).map(|n| (n, &col[n], &bf[n])), "engine", "brute force"),
        );
    }

    closed_form_checks(&mut rec, kind, max_n, max_m, &gammas)?;

    for m in 1..=max_m {
        let lhs = engine.gamma_series(kind, m, max_n)?;
        let rhs = &engine.f_series(kind, m - 1, max_n)? - &engine.f_series(kind, m, max_n)?;
        let ok = lhs == rhs;
        rec.push(
            if ok { Status::Pass } else { Status::Fail },
            format!("gamma = F(m-1) - F(m), m={m}"),
            if ok { format!("{} coefficients agree", max_n + 1) } else { "series differ".into() },
        );
    }

    let totals: Vec<BigInt> = (0..=max_n).map(|n| count_objects(kind, n)).collect();
    let bf_sums: Vec<BigInt> = brute.iter().map(|d| BigInt::from(d.values().sum::<u64>())).collect();
    rec.outcome(
        "row sums (brute force)",
        format!("n=0..{max_n} match the classical totals"),
        first_mismatch((0..=max_n).map(|n| (n, &bf_sums[n], &totals[n])), "sum", "total"),
    );
    // the mex of a size-n object is at most n + 1
    let full_rows = (max_m - 1).min(max_n);
    let engine_sums: Vec<BigInt> =
        (0..=full_rows).map(|n| gammas.iter().map(|c| &c[n]).sum()).collect();
    rec.outcome(
        "row sums (engine)",
        format!("n=0..{full_rows} match the classical totals"),
        first_mismatch((0..=full_rows).map(|n| (n, &engine_sums[n], &totals[n])), "sum", "total"),
    );

    gt_checks(&mut rec, kind, max_n, max_m, exec)?;

    match kind {
        StructureKind::DyckPath => dyck_checks(&mut rec, &engine, max_n)?,
        StructureKind::PlanarTree => planar_tree_checks(&mut rec, max_n)?,
        StructureKind::InversionSequence => {
            inversion_sequence_checks(&mut rec, &engine, max_n, max_m, &gammas, exec)?
        }
        _ => {}
    }

    Ok(Report { kind, max_n, max_m, checks: rec.0 })
}

fn closed_form_checks(
    rec: &mut Recorder,
    kind: StructureKind,
    max_n: usize,
    max_m: usize,
    gammas: &[Vec<BigInt>],
) -> Result<(), VerifyError> {
    use crate::genfun::{
        dp_gamma_closed, ic_gamma_closed, ip_gamma_series, is_gamma, pt_gamma1_series,
        sp_gamma_series,
    };
    let ints = |s: TruncatedSeries| -> Result<Vec<BigInt>, VerifyError> {
        Ok(s.to_integers().map_err(GenFunError::from)?)
    };
    for m in 1..=max_m {
        let (closed, from): (Vec<BigInt>, usize) = match kind {
            StructureKind::IntegerPartition => (ints(ip_gamma_series(m, max_n)?)?, 0),
            StructureKind::IntegerComposition => {
                ((0..=max_n).map(|n| ic_gamma_closed(n as u64, m as u64)).collect(), 0)
            }
            StructureKind::InversionSequence => {
                ((0..=max_n).map(|n| is_gamma(n as u64, m as u64)).collect(), 0)
            }
            StructureKind::SetPartition => (ints(sp_gamma_series(m, max_n)?)?, 0),
            StructureKind::DyckPath if m <= 2 => (ints(dp_gamma_closed(m, max_n)?)?, 0),
            StructureKind::PlanarTree if m == 1 => (ints(pt_gamma1_series(max_n)?)?, 0),
            StructureKind::PlanarTree if m == 2 => {
                if max_n >= 1 {
                    let formula = pt_gamma2_coeff(1)?;
                    let count = &gammas[1][1];
                    rec.push(
                        if &formula == count { Status::Pass } else { Status::SkippedKnown },
                        "closed form vs engine, m=2, n=1",
                        format!(
                            "coefficient formula gives {formula}, the count is {count}; \
                             the formula is only valid for n >= 2"
                        ),
                    );
                }
                let mut v = vec![BigInt::zero(); 2.min(max_n + 1)];
                for n in 2..=max_n {
                    v.push(pt_gamma2_coeff(n as u64)?);
                }
                (v, 2)
            }
            _ => continue,
        };
        if from > max_n {
            continue;
        }
        let col = &gammas[m - 1];
        rec.outcome(
            format!("closed form vs engine, m={m}"),
            format!("n={from}..{max_n} agree"),
            first_mismatch((from..=max_n).map(|n| (n, &closed[n], &col[n])), "closed form", "engine"),
        );
    }
    Ok(())
}

fn gt_checks(
    rec: &mut Recorder,
    kind: StructureKind,
    max_n: usize,
    max_m: usize,
    exec: Execution,
) -> Result<(), VerifyError> {
    let w = max_m.min(GT_CHECK_MAX_WEIGHT);
    let histograms: Vec<_> = (0..=max_n)
        .map(|n| weight_mask_histogram_with(kind, n, exec))
        .collect::<Result<_, _>>()?;
    let mut failure = None;
    for mask in 0..1u64 << w {
        let avoid = AvoidSet::from_mask(mask);
        let series = gt_series(kind, &avoid, max_n)?.to_integers().map_err(GenFunError::from)?;
        let forbidden = avoid.weight_mask();
        for (n, h) in histograms.iter().enumerate() {
            let bf: u64 = h.iter().filter(|(m, _)| *m & forbidden == 0).map(|(_, c)| c).sum();
            if BigInt::from(bf) != series[n] {
                failure = Some(format!("T={avoid}, n={n}: series {}, brute force {bf}", series[n]));
                break;
            }
        }
        if failure.is_some() {
            break;
        }
    }
    rec.outcome(
        format!("avoidance series vs brute force, T in subsets of [{w}]"),
        format!("{} sets, n=0..{max_n} agree", 1u64 << w),
        failure,
    );
    Ok(())
}

fn dyck_checks(rec: &mut Recorder, engine: &MexEngine, max_n: usize) -> Result<(), VerifyError> {
    let n = max_n;
    let g12 = gt_series(StructureKind::DyckPath, &AvoidSet::new([1, 2])?, n)?;
    let g2 = gt_series(StructureKind::DyckPath, &AvoidSet::new([2])?, n)?;
    let gamma2 = engine.gamma_series(StructureKind::DyckPath, 2, n)?;
    let x = TruncatedSeries::x(n);
    let ok = gamma2 == &(&x * &g12) * &g2;
    rec.push(
        if ok { Status::Pass } else { Status::Fail },
        "dyck: gamma_2 = x G_{1,2} G_2",
        format!("to order {n}"),
    );
    let one_plus_xc = &TruncatedSeries::one(n) + &(&x * &TruncatedSeries::catalan(n));
    rec.push(
        if g2 == one_plus_xc { Status::Pass } else { Status::Fail },
        "dyck: G_2 = 1 + x C",
        format!("to order {n}"),
    );
    Ok(())
}

/// `n [x^n] (G_{2} - 1) = [u^{n-1}] (1 + u + u^3/(1-u))^n`, the Lagrange
/// inversion count of trees with no vertex of out-degree 2.
fn planar_tree_checks(rec: &mut Recorder, max_n: usize) -> Result<(), VerifyError> {
    if max_n < 2 {
        return Ok(());
    }
    let g2 = gt_series(StructureKind::PlanarTree, &AvoidSet::new([2])?, max_n)?
        .to_integers()
        .map_err(GenFunError::from)?;
    let order = max_n;
    let u = TruncatedSeries::x(order);
    let one = TruncatedSeries::one(order);
    let cube = u.pow(3);
    let phi = &(&one + &u) + &cube.checked_div(&(&one - &u)).map_err(GenFunError::from)?;
    let mut failure = None;
    for n in 2..=max_n {
        let power = phi.pow(n as u32);
        let rhs = power.coeff(n - 1).cloned().unwrap_or_else(BigRational::zero);
        let lhs = BigRational::from_integer(BigInt::from(n) * &g2[n]);
        let formula = pt_g2_coeff(n as u64)?;
        if lhs != rhs || formula != g2[n] {
            failure = Some(format!("n={n}: n*[x^n] {lhs}, Lagrange {rhs}, formula {formula}"));
            break;
        }
    }
    rec.outcome(
        "planar tree: Lagrange count of trees avoiding out-degree 2",
        format!("n=2..{max_n} agree"),
        failure,
    );
    Ok(())
}

fn inversion_sequence_checks(
    rec: &mut Recorder,
    engine: &MexEngine,
    max_n: usize,
    max_m: usize,
    gammas: &[Vec<BigInt>],
    exec: Execution,
) -> Result<(), VerifyError> {
    // subset sums of G_T over |T| = k, m in T, against the Stirling formula
    let mut failure = None;
    'outer: for m in 1..=max_m {
        let top = 1u64 << (m - 1);
        for n in m..=max_n {
            for k in 1..=m {
                let mut direct = BigInt::zero();
                for rest in 0..top {
                    let mask = rest | top;
                    if mask.count_ones() as usize == k {
                        let g = engine.gt(StructureKind::InversionSequence, &AvoidSet::from_mask(mask), max_n)?;
                        direct += g.coeff(n).expect("within order").to_integer();
                    }
                }
                let formula = is_summed_gt_coeff(n as u64, m as u64, k as u64)?;
                if direct != formula {
                    failure = Some(format!("n={n}, m={m}, k={k}: subset sum {direct}, formula {formula}"));
                    break 'outer;
                }
            }
        }
    }
    rec.outcome(
        "inversion sequences: subset sums vs Stirling formula",
        format!("m=1..{max_m}, n=m..{max_n} agree"),
        failure,
    );

    // mex m at size n is as frequent as largest entry n - m
    let top_n = max_n.min(8);
    let mut failure = None;
    for n in 1..=top_n {
        let dist = max_distribution_is_with(n, exec)?;
        for m in 1..=n {
            let by_max = BigInt::from(dist.get(&((n - m) as u32)).copied().unwrap_or(0));
            let by_mex = if m <= max_m {
                gammas[m - 1][n].clone()
            } else {
                crate::genfun::is_gamma(n as u64, m as u64)
            };
            if by_max != by_mex {
                failure = Some(format!("n={n}, m={m}: mex count {by_mex}, max-entry count {by_max}"));
            }
        }
    }
    rec.push(
        if failure.is_none() { Status::ConjecturePass } else { Status::ConjectureFail },
        "inversion sequences: mex m counts equal largest-entry n-m counts",
        failure.unwrap_or_else(|| format!("n=1..{top_n}, 1 <= m <= n agree")),
    );
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_reports_pass() {
        for kind in StructureKind::ALL {
            let r = verify_structure(kind, 7, 4, Execution::default()).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn planar_tree_edge_case_is_reported() {
        let r = verify_structure(StructureKind::PlanarTree, 6, 3, Execution::default()).unwrap();
        assert!(r.passed());
        let skipped: Vec<_> = r.checks.iter().filter(|c| c.status == Status::SkippedKnown).collect();
        assert_eq!(skipped.len(), 1);
        assert!(skipped[0].name.contains("m=2, n=1"));
    }

    #[test]
    fn conjecture_is_reported() {
        let r = verify_structure(StructureKind::InversionSequence, 6, 6, Execution::default()).unwrap();
        assert_eq!(r.count(Status::ConjecturePass), 1);
        assert!(r.to_string().contains("CONJECTURE-PASS"));
    }

    #[test]
    fn bounds_are_enforced() {
        assert!(matches!(
            verify_structure(StructureKind::InversionSequence, 10, 3, Execution::default()),
            Err(VerifyError::Structure(StructureError::BoundExceeded { .. }))
        ));
        assert!(matches!(
            verify_structure(StructureKind::DyckPath, 5, 13, Execution::default()),
            Err(VerifyError::MexRange(13))
        ));
    }
}
