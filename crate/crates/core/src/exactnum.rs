//! Exact integer arithmetic and the classical counting functions used by the
//! generating-function layer.
//!
//! Everything here is pure and returns arbitrary-precision values. The only
//! shared state is the Stirling memo table, which sits behind an `RwLock`.

use std::sync::{OnceLock, RwLock};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
use num_traits::{One, Zero};

/// `n!`
pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Binomial coefficient with the combinatorial convention: zero whenever
/// `b < 0`, `a < 0` or `b > a`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        // acc * (a - i) is divisible by (i + 1) at every step
        acc = acc * (a - i) / (i + 1);
    }
    acc
}

fn stirling_table() -> &'static RwLock<Vec<Vec<BigInt>>> {
    static TABLE: OnceLock<RwLock<Vec<Vec<BigInt>>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![vec![BigInt::one()]]))
}

/// Stirling number of the second kind `S(n, k)`.
///
/// Rows are memoized; row `n` stores `S(n, 0..=n)`.
pub fn stirling2(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let (n, k) = (n as usize, k as usize);
    {
        let table = stirling_table().read().expect("stirling table poisoned");
        if let Some(row) = table.get(n) {
            return row[k].clone();
        }
    }
    let mut table = stirling_table().write().expect("stirling table poisoned");
    while table.len() <= n {
        let prev = table.last().expect("table starts with row 0");
        let r = table.len();
        let mut row = vec![BigInt::zero(); r + 1];
        for j in 1..=r {
            let carried = if j < prev.len() { &prev[j] * j } else { BigInt::zero() };
            row[j] = carried + &prev[j - 1];
        }
        table.push(row);
    }
    table[n][k].clone()
}

/// Sum, over all multisets of `n - k` integers drawn from `1..=k`, of the
/// product of the multiset. The empty multiset contributes 1.
///
/// Evaluated literally, by walking nondecreasing sequences. Returns zero
/// outside `1 <= k <= n` (except `n = k = 0`, which is the empty product).
pub fn sum_of_products_g(n: u64, k: u64) -> BigInt {
    if k > n || (k == 0 && n > 0) {
        return BigInt::zero();
    }
    fn walk(remaining: u64, smallest: u64, k: u64, product: &BigInt, acc: &mut BigInt) {
        if remaining == 0 {
            *acc += product;
            return;
        }
        for v in smallest..=k {
            walk(remaining - 1, v, k, &(product * v), acc);
        }
    }
    let mut acc = BigInt::zero();
    walk(n - k, 1, k, &BigInt::one(), &mut acc);
    acc
}

/// Catalan number `C_n = binom(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> BigInt {
    binomial(2 * n as i64, n as i64) / (n + 1)
}

/// Bell number, the total number of set partitions of an `n`-set.
pub fn bell(n: u64) -> BigInt {
    (0..=n).map(|k| stirling2(n, k)).sum()
}

/// Number of integer partitions of `n`, by the bounded-part recurrence.
pub fn partition_count(n: u64) -> BigInt {
    let n = n as usize;
    let mut ways = vec![BigInt::zero(); n + 1];
    ways[0] = BigInt::one();
    for part in 1..=n {
        for total in part..=n {
            let add = ways[total - part].clone();
            ways[total] += add;
        }
    }
    ways.swap_remove(n)
}
