//! Exhaustive enumeration.
//!
//! Every structure is generated as the set of words of a small grammar over
//! `u32` letters, walked depth-first with letters in increasing order, so the
//! output is lexicographic in that encoding:
//!
//! | structure | word |
//! |---|---|
//! | partitions | parts, non-increasing |
//! | compositions | parts |
//! | inversion sequences | entries |
//! | Dyck paths | steps, `0 = U`, `1 = D` |
//! | set partitions | restricted growth string |
//! | planar trees | Łukasiewicz word (preorder child counts) |
//!
//! For parallel runs the search tree is cut at a frontier of prefixes that
//! are walked independently; the frontier keeps lexicographic order.

use std::collections::BTreeMap;

use super::{
    Composition, DyckPath, IntegerPartition, InversionSequence, Object, PlanarTree,
    SetPartition, Step, StructureError, StructureKind,
};
use crate::exec::Execution;

/// `value -> number of objects`; absent values have count 0.
pub type Distribution = BTreeMap<u32, u64>;

/// `weight mask -> number of objects`, see [`Object::weight_mask`].
pub type MaskHistogram = BTreeMap<u64, u64>;

const FRONTIER_TARGET: usize = 256;

#[derive(Debug, Clone, Copy)]
struct State {
    a: u32,
    b: u32,
}

#[derive(Debug, Clone, Copy)]
struct Grammar {
    kind: StructureKind,
    n: u32,
}

impl Grammar {
    fn start(&self) -> State {
        match self.kind {
            // a = sum so far, b = largest part still allowed
            StructureKind::IntegerPartition => State { a: 0, b: self.n },
            // PT: a = open child slots
            StructureKind::PlanarTree => State { a: u32::from(self.n > 0), b: 0 },
            // IC: a = sum; DP: a = height, b = up steps; SP: a = blocks
            _ => State { a: 0, b: 0 },
        }
    }

    fn complete(&self, depth: usize, st: State) -> bool {
        let n = self.n as usize;
        match self.kind {
            StructureKind::IntegerPartition | StructureKind::IntegerComposition => st.a == self.n,
            StructureKind::DyckPath => depth == 2 * n,
            StructureKind::InversionSequence
            | StructureKind::SetPartition
            | StructureKind::PlanarTree => depth == n,
        }
    }

    fn letters(&self, depth: usize, st: State) -> std::ops::RangeInclusive<u32> {
        let n = self.n;
        match self.kind {
            StructureKind::IntegerPartition => 1..=st.b.min(n - st.a),
            StructureKind::IntegerComposition => 1..=n - st.a,
            StructureKind::InversionSequence => 0..=depth as u32,
            StructureKind::DyckPath => 0..=1,
            StructureKind::SetPartition => 0..=st.a,
            StructureKind::PlanarTree => 0..=n - 1 - depth as u32,
        }
    }

    fn step(&self, depth: usize, st: State, letter: u32) -> Option<State> {
        let n = self.n;
        match self.kind {
            StructureKind::IntegerPartition => Some(State { a: st.a + letter, b: letter }),
            StructureKind::IntegerComposition => Some(State { a: st.a + letter, b: 0 }),
            StructureKind::InversionSequence => Some(st),
            StructureKind::DyckPath => match letter {
                0 if st.b < n => Some(State { a: st.a + 1, b: st.b + 1 }),
                1 if st.a > 0 => Some(State { a: st.a - 1, b: st.b }),
                _ => None,
            },
            StructureKind::SetPartition => {
                Some(State { a: st.a.max(letter + 1), b: 0 })
            }
            StructureKind::PlanarTree => {
                let open = st.a + letter - 1;
                let remaining = n - depth as u32 - 1;
                let ok = if remaining == 0 { open == 0 } else { open >= 1 && open <= remaining };
                ok.then_some(State { a: open, b: 0 })
            }
        }
    }

    fn walk<F: FnMut(&[u32])>(&self, word: &mut Vec<u32>, st: State, visit: &mut F) {
        if self.complete(word.len(), st) {
            visit(word);
            return;
        }
        let depth = word.len();
        for letter in self.letters(depth, st) {
            if let Some(next) = self.step(depth, st, letter) {
                word.push(letter);
                self.walk(word, next, visit);
                word.pop();
            }
        }
    }

    /// Prefixes covering the whole search tree exactly once, in
    /// lexicographic order.
    fn frontier(&self, target: usize) -> Vec<(Vec<u32>, State)> {
        let mut frontier = vec![(Vec::new(), self.start())];
        loop {
            if frontier.len() >= target || frontier.iter().all(|(w, s)| self.complete(w.len(), *s)) {
                return frontier;
            }
            let mut next = Vec::with_capacity(frontier.len() * 2);
            for (word, st) in frontier {
                if self.complete(word.len(), st) {
                    next.push((word, st));
                    continue;
                }
                for letter in self.letters(word.len(), st) {
                    if let Some(ns) = self.step(word.len(), st, letter) {
                        let mut w = word.clone();
                        w.push(letter);
                        next.push((w, ns));
                    }
                }
            }
            frontier = next;
        }
    }

    fn decode(&self, word: &[u32]) -> Object {
        let obj = match self.kind {
            StructureKind::IntegerPartition => {
                IntegerPartition::new(word.to_vec()).map(Object::Partition)
            }
            StructureKind::IntegerComposition => {
                Composition::new(word.to_vec()).map(Object::Composition)
            }
            StructureKind::InversionSequence => {
                InversionSequence::new(word.to_vec()).map(Object::InversionSequence)
            }
            StructureKind::DyckPath => DyckPath::new(
                word.iter().map(|&l| if l == 0 { Step::Up } else { Step::Down }).collect(),
            )
            .map(Object::DyckPath),
            StructureKind::SetPartition => SetPartition::from_rgs(word).map(Object::SetPartition),
            StructureKind::PlanarTree => PlanarTree::from_lukasiewicz(word).map(Object::PlanarTree),
        };
        obj.expect("grammar only produces valid words")
    }
}

/// Folds every object of size `n` into per-prefix accumulators, returned in
/// lexicographic order of their prefixes.
fn fold_objects<A, I, V>(
    kind: StructureKind,
    n: usize,
    exec: Execution,
    init: I,
    visit: V,
) -> Result<Vec<A>, StructureError>
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    V: Fn(&mut A, Object) + Sync + Send,
{
    kind.check_bound(n)?;
    let grammar = Grammar { kind, n: n as u32 };
    let frontier = if exec.is_parallel() {
        grammar.frontier(FRONTIER_TARGET)
    } else {
        vec![(Vec::new(), grammar.start())]
    };
    Ok(exec.map(&frontier, |(prefix, st)| {
        let mut acc = init();
        let mut word = prefix.clone();
        grammar.walk(&mut word, *st, &mut |w| visit(&mut acc, grammar.decode(w)));
        acc
    }))
}

/// Every object of size `n`, each exactly once, in lexicographic order of
/// its word encoding.
pub fn enumerate(kind: StructureKind, n: usize) -> Result<Vec<Object>, StructureError> {
    let chunks = fold_objects(kind, n, Execution::default(), Vec::new, |acc, o| acc.push(o))?;
    Ok(chunks.into_iter().flatten().collect())
}

/// Calls `f` on every object of size `n`, sequentially and in order.
pub fn for_each_object<F: FnMut(Object)>(
    kind: StructureKind,
    n: usize,
    mut f: F,
) -> Result<(), StructureError> {
    kind.check_bound(n)?;
    let grammar = Grammar { kind, n: n as u32 };
    grammar.walk(&mut Vec::new(), grammar.start(), &mut |w| f(grammar.decode(w)));
    Ok(())
}

fn merge_counts<K: Ord>(parts: Vec<BTreeMap<K, u64>>) -> BTreeMap<K, u64> {
    let mut out = BTreeMap::new();
    for part in parts {
        for (k, v) in part {
            *out.entry(k).or_insert(0) += v;
        }
    }
    out
}

pub fn mex_distribution_bf(kind: StructureKind, n: usize) -> Result<Distribution, StructureError> {
    mex_distribution_bf_with(kind, n, Execution::default())
}

/// Counts of size-`n` objects grouped by mex.
pub fn mex_distribution_bf_with(
    kind: StructureKind,
    n: usize,
    exec: Execution,
) -> Result<Distribution, StructureError> {
    let parts = fold_objects(kind, n, exec, Distribution::new, |acc, o| {
        *acc.entry(o.mex()).or_insert(0) += 1;
    })?;
    Ok(merge_counts(parts))
}

pub fn weight_mask_histogram(kind: StructureKind, n: usize) -> Result<MaskHistogram, StructureError> {
    weight_mask_histogram_with(kind, n, Execution::default())
}

/// Counts of size-`n` objects grouped by the set of piece weights they
/// contain (restricted to weights `1..=63`). Enough to answer every
/// avoidance and mex query at this size.
pub fn weight_mask_histogram_with(
    kind: StructureKind,
    n: usize,
    exec: Execution,
) -> Result<MaskHistogram, StructureError> {
    let parts = fold_objects(kind, n, exec, MaskHistogram::new, |acc, o| {
        *acc.entry(o.weight_mask()).or_insert(0) += 1;
    })?;
    Ok(merge_counts(parts))
}

pub fn max_distribution_is(n: usize) -> Result<Distribution, StructureError> {
    max_distribution_is_with(n, Execution::default())
}

/// Inversion sequences of size `n` grouped by their largest entry. The empty
/// sequence has no maximum, so `n = 0` gives an empty map.
pub fn max_distribution_is_with(n: usize, exec: Execution) -> Result<Distribution, StructureError> {
    let parts = fold_objects(StructureKind::InversionSequence, n, exec, Distribution::new, |acc, o| {
        if let Object::InversionSequence(s) = o {
            if let Some(m) = s.max_entry() {
                *acc.entry(m).or_insert(0) += 1;
            }
        }
    })?;
    Ok(merge_counts(parts))
}
