//! Independent enumerators, written without the library's grammar walker,
//! checked against the engine and the library's own enumeration.

use std::collections::BTreeMap;

use mexkit::engine::MexEngine;
use mexkit::genfun::{gt_series, AvoidSet};
use mexkit::structures::mex_distribution_bf;
use mexkit::StructureKind::{self, *};
use num_bigint::BigInt;
use proptest::prelude::*;

fn mex(weights: &[u32]) -> u32 {
    (1..).find(|k| !weights.contains(k)).unwrap()
}

/// Compositions of `n` from the `2^(n-1)` cut sets.
fn compositions(n: usize) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    (0..1u32 << (n - 1))
        .map(|cuts| {
            let mut parts = vec![];
            let mut len = 1;
            for i in 0..n - 1 {
                if cuts >> i & 1 == 1 {
                    parts.push(len);
                    len = 1;
                } else {
                    len += 1;
                }
            }
            parts.push(len);
            parts
        })
        .collect()
}

/// Partitions as sorted compositions, deduplicated.
fn partitions(n: usize) -> Vec<Vec<u32>> {
    let mut all: Vec<Vec<u32>> = compositions(n)
        .into_iter()
        .map(|mut c| {
            c.sort_unstable();
            c
        })
        .collect();
    all.sort();
    all.dedup();
    all
}

/// Inversion sequences by mixed-radix counting.
fn inversion_sequences(n: usize) -> Vec<Vec<u32>> {
    let total: usize = (1..=n).product();
    (0..total)
        .map(|mut idx| {
            (1..=n)
                .map(|radix| {
                    let d = idx % radix;
                    idx /= radix;
                    d as u32
                })
                .collect()
        })
        .collect()
}

/// Peak heights of every Dyck path of semilength `n`, from bit strings.
fn dyck_peak_heights(n: usize) -> Vec<Vec<u32>> {
    let mut out = vec![];
    for bits in 0u64..1 << (2 * n) {
        if bits.count_ones() as usize != n {
            continue;
        }
        // bit i set = up step
        let mut h: i32 = 0;
        let mut peaks = vec![];
        let mut ok = true;
        for i in 0..2 * n {
            let up = bits >> i & 1 == 1;
            h += if up { 1 } else { -1 };
            if h < 0 {
                ok = false;
                break;
            }
            if up && i + 1 < 2 * n && bits >> (i + 1) & 1 == 0 {
                peaks.push(h as u32);
            }
        }
        if ok {
            out.push(peaks);
        }
    }
    out
}

/// Block sizes of every set partition of `{1..n}`, by inserting elements
/// one at a time.
fn set_partition_block_sizes(n: usize) -> Vec<Vec<u32>> {
    let mut acc: Vec<Vec<u32>> = vec![vec![]];
    for _ in 0..n {
        let mut next = vec![];
        for blocks in &acc {
            for i in 0..blocks.len() {
                let mut b = blocks.clone();
                b[i] += 1;
                next.push(b);
            }
            let mut b = blocks.clone();
            b.push(1);
            next.push(b);
        }
        acc = next;
    }
    acc
}

/// Preorder out-degree sequences of planar trees with `n` vertices, each
/// tree being a root over an ordered forest.
fn planar_tree_degrees(n: usize) -> Vec<Vec<u32>> {
    fn forests(n: usize, memo: &mut BTreeMap<usize, Vec<Vec<u32>>>) -> Vec<Vec<u32>> {
        // forests with `n` vertices as [tree count, preorder degrees...]
        if let Some(v) = memo.get(&n) {
            return v.clone();
        }
        let mut out = vec![];
        if n == 0 {
            out.push(vec![0]);
        }
        for first in 1..=n {
            for tree in trees(first, memo) {
                for rest in forests(n - first, memo) {
                    let mut f = vec![rest[0] + 1];
                    f.extend_from_slice(&tree);
                    f.extend_from_slice(&rest[1..]);
                    out.push(f);
                }
            }
        }
        memo.insert(n, out.clone());
        out
    }
    fn trees(n: usize, memo: &mut BTreeMap<usize, Vec<Vec<u32>>>) -> Vec<Vec<u32>> {
        // a root over a forest; the forest's tree count is the root degree
        forests(n - 1, memo)
    }
    if n == 0 {
        return vec![vec![]];
    }
    trees(n, &mut BTreeMap::new())
}

fn weights(kind: StructureKind, n: usize) -> Vec<Vec<u32>> {
    match kind {
        IntegerPartition => partitions(n),
        IntegerComposition => compositions(n),
        InversionSequence => inversion_sequences(n),
        DyckPath => dyck_peak_heights(n),
        SetPartition => set_partition_block_sizes(n),
        PlanarTree => planar_tree_degrees(n),
    }
}

fn oracle_bound(kind: StructureKind) -> usize {
    match kind {
        IntegerPartition => 14,
        IntegerComposition => 14,
        InversionSequence => 7,
        DyckPath => 10,
        SetPartition => 8,
        PlanarTree => 10,
    }
}

fn oracle_distribution(kind: StructureKind, n: usize) -> BTreeMap<u32, u64> {
    let mut d = BTreeMap::new();
    for w in weights(kind, n) {
        *d.entry(mex(&w)).or_insert(0) += 1;
    }
    d
}

#[test]
fn oracle_totals_are_classical() {
    let expect: [(StructureKind, [usize; 6]); 6] = [
        (IntegerPartition, [1, 1, 2, 3, 5, 7]),
        (IntegerComposition, [1, 1, 2, 4, 8, 16]),
        (InversionSequence, [1, 1, 2, 6, 24, 120]),
        (DyckPath, [1, 1, 2, 5, 14, 42]),
        (SetPartition, [1, 1, 2, 5, 15, 52]),
        (PlanarTree, [1, 1, 1, 2, 5, 14]),
    ];
    for (kind, counts) in expect {
        for (n, c) in counts.into_iter().enumerate() {
            assert_eq!(weights(kind, n).len(), c, "{kind} n={n}");
        }
    }
}

#[test]
fn library_enumeration_matches_oracle() {
    for kind in StructureKind::ALL {
        for n in 0..=oracle_bound(kind) {
            assert_eq!(mex_distribution_bf(kind, n).unwrap(), oracle_distribution(kind, n), "{kind} n={n}");
        }
    }
}

#[test]
fn engine_matches_oracle() {
    let engine = MexEngine::default();
    for kind in StructureKind::ALL {
        let max_n = oracle_bound(kind);
        let cols: Vec<Vec<BigInt>> = (1..=6)
            .map(|m| engine.gamma_series(kind, m, max_n).unwrap().to_integers().unwrap())
            .collect();
        for n in 0..=max_n {
            let d = oracle_distribution(kind, n);
            for m in 1..=6 {
                let want = BigInt::from(d.get(&(m as u32)).copied().unwrap_or(0));
                assert_eq!(cols[m - 1][n], want, "{kind} n={n} m={m}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn avoidance_series_match_oracle(
        kind_idx in 0usize..6,
        forbidden in proptest::collection::btree_set(1u32..8, 0..4),
    ) {
        let kind = StructureKind::ALL[kind_idx];
        let max_n = oracle_bound(kind).min(9);
        let avoid = AvoidSet::new(forbidden.iter().copied()).unwrap();
        let series = gt_series(kind, &avoid, max_n).unwrap().to_integers().unwrap();
        for n in 0..=max_n {
            let count = weights(kind, n)
                .iter()
                .filter(|w| !w.iter().any(|x| forbidden.contains(x)))
                .count();
            prop_assert_eq!(&series[n], &BigInt::from(count), "{} T={} n={}", kind, avoid, n);
        }
    }
}
