//! Avoidance series `G_T` for each structure, and the closed forms for mex
//! counts that are available for particular structures.
//!
//! `G_T` counts the objects containing no piece whose weight lies in `T`.
//! All series returned here are counting sequences (for set partitions the
//! exponential generating function is converted before returning).

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactnum::{binomial, factorial, stirling2};
use crate::series::{SeriesError, TruncatedSeries};
use crate::structures::StructureKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenFunError {
    #[error("forbidden weights must be positive (got 0)")]
    ZeroWeight,
    #[error("cannot parse avoid list `{0}`: expected comma-separated positive integers")]
    Parse(String),
    #[error("{0}")]
    Precondition(String),
    #[error("no closed form for {what}")]
    Unsupported { what: String },
    #[error("planar-tree fixed point for T = {avoid} did not stabilise within {rounds} rounds")]
    NonConvergence { avoid: AvoidSet, rounds: usize },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// A finite set of forbidden positive weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct AvoidSet(BTreeSet<u32>);

impl AvoidSet {
    pub fn new(weights: impl IntoIterator<Item = u32>) -> Result<Self, GenFunError> {
        let set: BTreeSet<u32> = weights.into_iter().collect();
        if set.contains(&0) {
            return Err(GenFunError::ZeroWeight);
        }
        Ok(Self(set))
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The subset of `1..=m` selected by the bits of `mask` (bit `i - 1`
    /// selects `i`).
    pub fn from_mask(mask: u64) -> Self {
        Self((1..=64u32).filter(|i| mask >> (i - 1) & 1 == 1).collect())
    }

    /// Indicator of `i ∈ T`.
    pub fn contains(&self, i: u32) -> bool {
        self.0.contains(&i)
    }

    pub fn max(&self) -> Option<u32> {
        self.0.last().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }

    /// Bit `i` set for every `i ∈ T`, matching
    /// [`Object::weight_mask`](crate::structures::Object::weight_mask).
    pub fn weight_mask(&self) -> u64 {
        self.iter().filter(|&i| i < 64).fold(0, |m, i| m | 1 << i)
    }
}

impl fmt::Display for AvoidSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, w) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str("}")
    }
}

impl FromStr for AvoidSet {
    type Err = GenFunError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let weights = s
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| GenFunError::Parse(s.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(weights)
    }
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn poly(order: usize, coeffs: &[i64]) -> TruncatedSeries {
    TruncatedSeries::from_integers(order, coeffs.iter().copied())
}

fn one_minus_x_pow(order: usize, i: usize) -> TruncatedSeries {
    &TruncatedSeries::one(order) - &TruncatedSeries::monomial(order, i, BigRational::one())
}

/// Partition generating function `∏_{i>=1} 1/(1 - x^i)` through degree
/// `order`.
pub fn partition_series(order: usize) -> TruncatedSeries {
    let denominator = (1..=order).fold(TruncatedSeries::one(order), |acc, i| {
        &acc * &one_minus_x_pow(order, i)
    });
    denominator.reciprocal().expect("constant term 1")
}

/// Counting sequence of size-`n` objects avoiding every weight in `avoid`,
/// for `n = 0..=order`.
pub fn gt_series(
    kind: StructureKind,
    avoid: &AvoidSet,
    order: usize,
) -> Result<TruncatedSeries, GenFunError> {
    match kind {
        StructureKind::IntegerPartition => Ok(ip_gt(avoid, order)),
        StructureKind::IntegerComposition => ic_gt(avoid, order),
        StructureKind::InversionSequence => Ok(TruncatedSeries::from_integers(
            order,
            (0..=order as u64).map(|n| is_count_avoiding(n, avoid)),
        )),
        StructureKind::DyckPath => dp_gt(avoid, order),
        StructureKind::SetPartition => sp_gt(avoid, order),
        StructureKind::PlanarTree => pt_gt(avoid, order),
    }
}

fn ip_gt(avoid: &AvoidSet, order: usize) -> TruncatedSeries {
    avoid
        .iter()
        .fold(partition_series(order), |acc, i| &acc * &one_minus_x_pow(order, i as usize))
}

/// `(1 - x) / (1 - 2x + Σ_{i∈T} x^i (1 - x))`
fn ic_gt(avoid: &AvoidSet, order: usize) -> Result<TruncatedSeries, GenFunError> {
    let one_minus_x = poly(order, &[1, -1]);
    let mut den = poly(order, &[1, -2]);
    for i in avoid.iter() {
        den = &den + &one_minus_x.shift(i as usize);
    }
    Ok(one_minus_x.checked_div(&den)?)
}

/// Continued fraction with `max(T)` levels, evaluated from the innermost
/// level `1 + x - x C(x)` outwards.
fn dp_gt(avoid: &AvoidSet, order: usize) -> Result<TruncatedSeries, GenFunError> {
    let catalan = TruncatedSeries::catalan(order);
    let Some(depth) = avoid.max() else {
        return Ok(catalan);
    };
    let x = TruncatedSeries::x(order);
    let mut level = &poly(order, &[1, 1]) - &(&x * &catalan);
    for i in (1..depth).rev() {
        let head = poly(order, &[1, i64::from(avoid.contains(i))]);
        level = &head - &(&x * &level.reciprocal()?);
    }
    Ok(level.reciprocal()?)
}

/// `e^x - 1` as an exponential generating function.
fn exp_minus_one(order: usize) -> TruncatedSeries {
    TruncatedSeries::from_coeffs(
        order,
        (0..=order).map(|n| {
            if n == 0 {
                BigRational::zero()
            } else {
                BigRational::new(BigInt::one(), factorial(n as u64))
            }
        }),
    )
}

/// `x^n / n!`
fn egf_monomial(order: usize, n: usize) -> TruncatedSeries {
    TruncatedSeries::monomial(order, n, BigRational::new(BigInt::one(), factorial(n as u64)))
}

/// `exp(e^x - 1 - Σ_{n∈T} x^n/n!)`, converted to counts.
fn sp_gt(avoid: &AvoidSet, order: usize) -> Result<TruncatedSeries, GenFunError> {
    let exponent = avoid
        .iter()
        .fold(exp_minus_one(order), |acc, n| &acc - &egf_monomial(order, n as usize));
    Ok(exponent.exp()?.egf_to_counts())
}

/// One application of `G ↦ 1 + x + x Σ_{k>=1, k∉T} (G - 1)^k`, with the
/// infinite sum taken as `1/(2 - G) - 1` minus the `k ∈ T` terms.
fn pt_step(g: &TruncatedSeries, avoid: &AvoidSet) -> Result<TruncatedSeries, GenFunError> {
    let order = g.order();
    let one = TruncatedSeries::one(order);
    let h = g - &one;
    let mut sum = &(&TruncatedSeries::constant(order, q(2)) - g).reciprocal()? - &one;
    let mut power = one.clone();
    for k in 1..=avoid.max().unwrap_or(0) {
        power = &power * &h;
        if k as usize > order {
            break; // h has valuation >= 1
        }
        if avoid.contains(k) {
            sum = &sum - &power;
        }
    }
    Ok(&poly(order, &[1, 1]) + &sum.shift(1))
}

/// Fixed point of [`pt_step`], seeded at `1 + x`. Each round fixes one more
/// coefficient, so round `d` is evaluated at order `d`; a final round at
/// full order confirms stability.
fn pt_gt(avoid: &AvoidSet, order: usize) -> Result<TruncatedSeries, GenFunError> {
    let mut g = poly(order.min(1), &[1, 1]);
    for d in 2..=order {
        g = pt_step(&g.with_order(d), avoid)?;
    }
    let check = pt_step(&g, avoid)?;
    if check != g {
        return Err(GenFunError::NonConvergence { avoid: avoid.clone(), rounds: order + 1 });
    }
    Ok(g)
}

/// Number of inversion sequences of size `n` with no entry in `avoid`.
///
/// Only forbidden values `1..=n-1` matter. With those listed as
/// `i1 < ... < ik`, the count is `(n-k)! · ∏_j (i_j - j + 1)`.
pub fn is_count_avoiding(n: u64, avoid: &AvoidSet) -> BigInt {
    let effective: Vec<u64> = avoid.iter().map(u64::from).filter(|&i| i < n).collect();
    let k = effective.len() as u64;
    effective
        .iter()
        .enumerate()
        .fold(factorial(n - k), |acc, (j, &i)| acc * (i - j as u64))
}

/// Coefficient of `x^n` in `Σ_{T ⊆ [m], |T| = k, m ∈ T} G_T` for inversion
/// sequences: `(m - k + 1) · S(m, m - k + 1) · (n - k)!`.
pub fn is_summed_gt_coeff(n: u64, m: u64, k: u64) -> Result<BigInt, GenFunError> {
    if !(1 <= k && k <= m && m <= n) {
        return Err(GenFunError::Precondition(format!(
            "is_summed_gt_coeff requires 1 <= k <= m <= n (got n={n}, m={m}, k={k})"
        )));
    }
    Ok(BigInt::from(m - k + 1) * stirling2(m, m - k + 1) * factorial(n - k))
}

/// Number of inversion sequences of size `n` with mex `m`.
///
/// Zero for `n < m`, one for `n = m`, otherwise the alternating sum of
/// [`is_summed_gt_coeff`] over `k`. The empty sequence (`n = 0`) has mex 1.
pub fn is_gamma(n: u64, m: u64) -> BigInt {
    if n == 0 {
        return BigInt::from(u8::from(m == 1));
    }
    if m == 0 || n < m {
        return BigInt::zero();
    }
    if n == m {
        return BigInt::one();
    }
    (1..=m)
        .map(|k| {
            let term = is_summed_gt_coeff(n, m, k).expect("1 <= k <= m < n");
            if k % 2 == 1 { term } else { -term }
        })
        .sum()
}

/// Number of compositions of `n` with mex `m`, by summing multinomial
/// coefficients over the multisets of extra parts.
///
/// Such a composition uses each of `1..m-1` at least once and never `m`.
/// With `n = binom(m, 2) + k`, the extra parts form a partition of `k` with
/// no part `m`; `α_i` counts extra parts equal to `i`.
pub fn ic_gamma_closed(n: u64, m: u64) -> BigInt {
    if m == 0 {
        return BigInt::zero();
    }
    let base = m * (m - 1) / 2;
    if n < base {
        return BigInt::zero();
    }
    let k = (n - base) as usize;
    let m = m as usize;

    fn term(alpha: &[u64], m: usize) -> BigInt {
        let extra: u64 = alpha.iter().sum();
        let numerator = factorial(m as u64 - 1 + extra);
        let mut denominator = BigInt::one();
        for i in 1..m {
            denominator *= factorial(alpha.get(i).copied().unwrap_or(0) + 1);
        }
        for &a in alpha.iter().skip(m + 1) {
            denominator *= factorial(a);
        }
        numerator / denominator
    }

    fn walk(remaining: usize, largest: usize, m: usize, alpha: &mut Vec<u64>, acc: &mut BigInt) {
        if remaining == 0 {
            *acc += term(alpha, m);
            return;
        }
        for part in (1..=largest.min(remaining)).rev() {
            if part == m {
                continue;
            }
            alpha[part] += 1;
            walk(remaining - part, part, m, alpha, acc);
            alpha[part] -= 1;
        }
    }

    // alpha[0] unused
    let mut alpha = vec![0u64; k + 1];
    let mut acc = BigInt::zero();
    walk(k, k, m, &mut alpha, &mut acc);
    acc
}

/// `(x^binom(m,2) - x^binom(m+1,2)) P(x)`
pub fn ip_gamma_series(m: usize, order: usize) -> Result<TruncatedSeries, GenFunError> {
    if m == 0 {
        return Err(GenFunError::Precondition("mex is at least 1".into()));
    }
    let lo = TruncatedSeries::monomial(order, m * (m - 1) / 2, BigRational::one());
    let hi = TruncatedSeries::monomial(order, m * (m + 1) / 2, BigRational::one());
    Ok(&(&lo - &hi) * &partition_series(order))
}

/// Set partitions with mex `m`:
/// `exp(e^x - 1 - x^m/m!) ∏_{k=1}^{m-1} (1 - exp(-x^k/k!))`, as counts.
pub fn sp_gamma_series(m: usize, order: usize) -> Result<TruncatedSeries, GenFunError> {
    if m == 0 {
        return Err(GenFunError::Precondition("mex is at least 1".into()));
    }
    let one = TruncatedSeries::one(order);
    let mut egf = (&exp_minus_one(order) - &egf_monomial(order, m)).exp()?;
    for k in 1..m {
        let factor = &one - &(-&egf_monomial(order, k)).exp()?;
        egf = &egf * &factor;
    }
    Ok(egf.egf_to_counts())
}

/// Dyck paths with mex 1 (`1/(1 + x - xC)`) or mex 2
/// (`(x(1-x) + 3x²C)/(1 + x + x²C)`).
pub fn dp_gamma_closed(m: usize, order: usize) -> Result<TruncatedSeries, GenFunError> {
    let c = TruncatedSeries::catalan(order);
    match m {
        1 => Ok((&poly(order, &[1, 1]) - &c.shift(1)).reciprocal()?),
        2 => {
            let num = &poly(order, &[0, 1, -1]) + &c.shift(2).scalar_mul(&q(3));
            let den = &poly(order, &[1, 1]) + &c.shift(2);
            Ok(num.checked_div(&den)?)
        }
        _ => Err(GenFunError::Unsupported { what: format!("Dyck paths with mex {m}") }),
    }
}

/// Planar trees with mex 1: `(3(1+x) - sqrt(1 - 2x - 3x²)) / (2(1+x))`.
pub fn pt_gamma1_series(order: usize) -> Result<TruncatedSeries, GenFunError> {
    let one_plus_x = poly(order, &[1, 1]);
    let root = poly(order, &[1, -2, -3]).sqrt()?;
    let num = &one_plus_x.scalar_mul(&q(3)) - &root;
    Ok(num.checked_div(&one_plus_x.scalar_mul(&q(2)))?)
}

fn divide_exact(sum: BigInt, n: u64) -> BigInt {
    let (quot, rem) = sum.div_rem(&BigInt::from(n));
    debug_assert!(rem.is_zero(), "sum not divisible by {n}");
    quot
}

fn require_positive(n: u64) -> Result<i64, GenFunError> {
    if n == 0 {
        return Err(GenFunError::Precondition("planar-tree coefficient formulas need n >= 1".into()));
    }
    Ok(n as i64)
}

/// Planar trees on `n` vertices with no vertex of out-degree 2:
/// `(1/n) Σ_{k=0}^{n} (-1)^k binom(n,k) binom(2n-3k-2, n-k-1)`.
pub fn pt_g2_coeff(n: u64) -> Result<BigInt, GenFunError> {
    let ni = require_positive(n)?;
    let sum: BigInt = (0..=ni)
        .map(|k| {
            let t = binomial(ni, k) * binomial(2 * ni - 3 * k - 2, ni - k - 1);
            if k % 2 == 0 { t } else { -t }
        })
        .sum();
    Ok(divide_exact(sum, n))
}

/// Planar trees on `n` vertices with no vertex of out-degree 1 or 2, by the
/// formula `(1/n) Σ_{k=0}^{n} binom(n,k) binom(n-2k-2, k-1)`.
///
/// The formula returns 0 at `n = 1`, although the single-vertex tree
/// qualifies; the value is returned as the formula gives it.
pub fn pt_g12_coeff(n: u64) -> Result<BigInt, GenFunError> {
    let ni = require_positive(n)?;
    let sum: BigInt = (0..=ni)
        .map(|k| binomial(ni, k) * binomial(ni - 2 * k - 2, k - 1))
        .sum();
    Ok(divide_exact(sum, n))
}

/// `pt_g2_coeff(n) - pt_g12_coeff(n)`: planar trees with mex 2 for
/// `n >= 2`. At `n = 1` this gives 1, whereas no 1-vertex tree has mex 2.
pub fn pt_gamma2_coeff(n: u64) -> Result<BigInt, GenFunError> {
    Ok(pt_g2_coeff(n)? - pt_g12_coeff(n)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::weight_mask_histogram;

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        s.to_integers().unwrap().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    fn set(w: &[u32]) -> AvoidSet {
        AvoidSet::new(w.iter().copied()).unwrap()
    }

    /// Brute-force count of size-`n` objects avoiding `avoid`.
    fn brute_avoiding(kind: StructureKind, n: usize, avoid: &AvoidSet) -> i64 {
        let forbidden = avoid.weight_mask();
        weight_mask_histogram(kind, n)
            .unwrap()
            .into_iter()
            .filter(|(mask, _)| mask & forbidden == 0)
            .map(|(_, c)| c as i64)
            .sum()
    }

    #[test]
    fn avoid_set_parsing() {
        assert_eq!("1,3, 2".parse::<AvoidSet>().unwrap(), set(&[1, 2, 3]));
        assert_eq!("".parse::<AvoidSet>().unwrap(), AvoidSet::empty());
        assert_eq!("0,1".parse::<AvoidSet>(), Err(GenFunError::ZeroWeight));
        assert!(matches!("1,x".parse::<AvoidSet>(), Err(GenFunError::Parse(_))));
        assert_eq!(set(&[2, 5]).to_string(), "{2,5}");
        assert_eq!(AvoidSet::from_mask(0b101), set(&[1, 3]));
        assert_eq!(set(&[1, 3]).weight_mask(), 0b1010);
    }

    #[test]
    fn gt_examples() {
        use StructureKind::*;
        assert_eq!(ints(&gt_series(IntegerComposition, &set(&[1]), 7).unwrap()), [1, 0, 1, 1, 2, 3, 5, 8]);
        assert_eq!(ints(&gt_series(DyckPath, &set(&[2]), 6).unwrap()), [1, 1, 1, 2, 5, 14, 42]);
        assert_eq!(
            ints(&gt_series(SetPartition, &set(&[1]), 8).unwrap()),
            [1, 0, 1, 1, 4, 11, 41, 162, 715]
        );
        assert_eq!(ints(&gt_series(PlanarTree, &set(&[1]), 7).unwrap()), [1, 1, 0, 1, 1, 3, 6, 15]);
        assert_eq!(ints(&gt_series(IntegerPartition, &set(&[1]), 5).unwrap())[5], 2);
    }

    #[test]
    fn gt_with_empty_avoid_set_is_total_count() {
        use crate::structures::count_objects;
        for kind in StructureKind::ALL {
            let g = gt_series(kind, &AvoidSet::empty(), 10).unwrap().to_integers().unwrap();
            for (n, c) in g.iter().enumerate() {
                assert_eq!(*c, count_objects(kind, n), "{kind} n={n}");
            }
        }
    }

    #[test]
    fn gt_matches_brute_force_on_all_subsets_of_small_weights() {
        for kind in StructureKind::ALL {
            let top = kind.brute_force_bound().min(10);
            for mask in 0..32u64 {
                let avoid = AvoidSet::from_mask(mask);
                let g = ints(&gt_series(kind, &avoid, top).unwrap());
                for (n, &got) in g.iter().enumerate() {
                    assert_eq!(got, brute_avoiding(kind, n, &avoid), "{kind} T={avoid} n={n}");
                }
            }
        }
    }

    #[test]
    fn pt_fixed_point_edge_orders() {
        assert_eq!(ints(&gt_series(StructureKind::PlanarTree, &set(&[3]), 0).unwrap()), [1]);
        assert_eq!(ints(&gt_series(StructureKind::PlanarTree, &set(&[3]), 1).unwrap()), [1, 1]);
        // weights beyond the order cannot matter
        let far = gt_series(StructureKind::PlanarTree, &set(&[40]), 8).unwrap();
        assert_eq!(far, gt_series(StructureKind::PlanarTree, &AvoidSet::empty(), 8).unwrap());
    }

    #[test]
    fn is_count_avoiding_examples() {
        assert_eq!(is_count_avoiding(3, &set(&[1])), BigInt::from(2));
        assert_eq!(is_count_avoiding(3, &set(&[2])), BigInt::from(4));
        for n in 0..8 {
            assert_eq!(is_count_avoiding(n, &AvoidSet::empty()), factorial(n));
        }
        // forbidden values >= n impose nothing
        assert_eq!(is_count_avoiding(3, &set(&[3, 7])), BigInt::from(6));
    }

    #[test]
    fn is_summed_examples() {
        for n in 2..8u64 {
            for m in 1..=n {
                assert_eq!(
                    is_summed_gt_coeff(n, m, 1).unwrap(),
                    BigInt::from(m) * factorial(n - 1)
                );
            }
        }
        assert_eq!(is_summed_gt_coeff(3, 2, 1).unwrap(), BigInt::from(4));
        assert_eq!(is_summed_gt_coeff(3, 2, 2).unwrap(), BigInt::from(1));
        assert_eq!(is_count_avoiding(3, &set(&[1, 2])), BigInt::from(1));
        assert!(is_summed_gt_coeff(3, 4, 1).is_err());
        assert!(is_summed_gt_coeff(5, 2, 3).is_err());
        assert!(is_summed_gt_coeff(5, 2, 0).is_err());
    }

    #[test]
    fn is_summed_matches_subset_sums() {
        for m in 1..=6u64 {
            for k in 1..=m {
                for n in m..=9u64 {
                    let direct: BigInt = (0..1u64 << (m - 1))
                        .filter(|rest| rest.count_ones() as u64 == k - 1)
                        .map(|rest| {
                            let t = AvoidSet::from_mask(rest | 1 << (m - 1));
                            is_count_avoiding(n, &t)
                        })
                        .sum();
                    assert_eq!(direct, is_summed_gt_coeff(n, m, k).unwrap(), "n={n} m={m} k={k}");
                }
            }
        }
    }

    #[test]
    fn is_gamma_examples() {
        assert_eq!(is_gamma(3, 1), BigInt::from(2));
        assert_eq!(is_gamma(3, 3), BigInt::from(1));
        assert_eq!(is_gamma(2, 3), BigInt::from(0));
        assert_eq!(is_gamma(5, 2), BigInt::from(42));
        assert_eq!(is_gamma(0, 1), BigInt::from(1));
        assert_eq!(is_gamma(0, 2), BigInt::from(0));
    }

    #[test]
    fn is_gamma_matches_small_m_table() {
        // γ_{n,m} for m <= 5 as explicit factorial combinations
        let f = |k: u64| factorial(k);
        for n in 6..=12u64 {
            assert_eq!(is_gamma(n, 1), f(n - 1));
            assert_eq!(is_gamma(n, 2), 2 * f(n - 1) - f(n - 2));
            assert_eq!(is_gamma(n, 3), 3 * f(n - 1) - 6 * f(n - 2) + f(n - 3));
            assert_eq!(is_gamma(n, 4), 4 * f(n - 1) - 18 * f(n - 2) + 14 * f(n - 3) - f(n - 4));
            assert_eq!(
                is_gamma(n, 5),
                5 * f(n - 1) - 40 * f(n - 2) + 75 * f(n - 3) - 30 * f(n - 4) + f(n - 5)
            );
        }
    }

    #[test]
    fn ic_closed_examples() {
        assert_eq!(ic_gamma_closed(4, 2), BigInt::from(3));
        assert_eq!(ic_gamma_closed(6, 4), BigInt::from(6));
        assert_eq!(ic_gamma_closed(5, 4), BigInt::from(0));
        assert_eq!(ic_gamma_closed(21, 7), BigInt::from(720));
        assert_eq!(ic_gamma_closed(0, 1), BigInt::from(1));
        assert_eq!(ic_gamma_closed(1, 1), BigInt::from(0));
        assert_eq!(ic_gamma_closed(20, 4), BigInt::from(208_843));
    }

    #[test]
    fn ip_closed_examples() {
        let g1 = ints(&ip_gamma_series(1, 6).unwrap());
        assert_eq!(g1[0], 1);
        assert_eq!(g1[5], 2);
        assert_eq!(ints(&ip_gamma_series(2, 3).unwrap())[1], 1);
        assert!(ip_gamma_series(0, 3).is_err());
    }

    #[test]
    fn sp_closed_sequences() {
        assert_eq!(
            ints(&sp_gamma_series(1, 11).unwrap()),
            [1, 0, 1, 1, 4, 11, 41, 162, 715, 3425, 17722, 98253]
        );
        assert_eq!(
            ints(&sp_gamma_series(2, 10).unwrap()),
            [0, 1, 1, 1, 5, 16, 42, 169, 779, 3385, 16263]
        );
        assert_eq!(
            ints(&sp_gamma_series(3, 10).unwrap()),
            [0, 0, 0, 3, 6, 25, 60, 336, 1246, 6777, 29070]
        );
    }

    #[test]
    fn dp_closed_forms() {
        assert_eq!(ints(&dp_gamma_closed(1, 6).unwrap()), [1, 0, 1, 2, 6, 18, 57]);
        let g2 = ints(&dp_gamma_closed(2, 12).unwrap());
        assert_eq!(&g2[..4], &[0, 1, 1, 1]);
        assert!(matches!(dp_gamma_closed(3, 5), Err(GenFunError::Unsupported { .. })));
    }

    #[test]
    fn pt_closed_forms() {
        assert_eq!(ints(&pt_gamma1_series(7).unwrap()), [1, 1, 0, 1, 1, 3, 6, 15]);
        assert_eq!(pt_g2_coeff(1).unwrap(), BigInt::from(1));
        assert_eq!(pt_g2_coeff(4).unwrap(), BigInt::from(2));
        assert_eq!(pt_g2_coeff(5).unwrap(), BigInt::from(6));
        assert_eq!(pt_g12_coeff(4).unwrap(), BigInt::from(1));
        assert_eq!(pt_g12_coeff(3).unwrap(), BigInt::from(0));
        assert_eq!(pt_g12_coeff(1).unwrap(), BigInt::from(0));
        assert_eq!(pt_gamma2_coeff(5).unwrap(), BigInt::from(5));
        assert_eq!(pt_gamma2_coeff(9).unwrap(), BigInt::from(359));
        assert_eq!(pt_gamma2_coeff(15).unwrap(), BigInt::from(306_568));
        assert!(pt_g2_coeff(0).is_err());
    }

    #[test]
    fn pt_coefficient_formulas_match_series_from_n_2() {
        let g2 = gt_series(StructureKind::PlanarTree, &set(&[2]), 20).unwrap().to_integers().unwrap();
        let g12 = gt_series(StructureKind::PlanarTree, &set(&[1, 2]), 20).unwrap().to_integers().unwrap();
        for n in 1..=20u64 {
            assert_eq!(pt_g2_coeff(n).unwrap(), g2[n as usize], "g2 n={n}");
            if n >= 2 {
                assert_eq!(pt_g12_coeff(n).unwrap(), g12[n as usize], "g12 n={n}");
            }
        }
        assert_eq!(g12[1], BigInt::from(1));
    }
}
