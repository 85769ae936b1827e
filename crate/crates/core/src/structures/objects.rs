use std::collections::{BTreeSet, VecDeque};

use super::{StructureError, StructureKind};

/// Parts `λ1 >= λ2 >= ... >= λk > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntegerPartition(Vec<u32>);

impl IntegerPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self, StructureError> {
        if parts.contains(&0) {
            return Err(StructureError::invalid(StructureKind::IntegerPartition, "zero part"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(StructureError::invalid(
                StructureKind::IntegerPartition,
                "parts must be non-increasing",
            ));
        }
        Ok(Self(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }
}

/// An ordered sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self, StructureError> {
        if parts.contains(&0) {
            return Err(StructureError::invalid(StructureKind::IntegerComposition, "zero part"));
        }
        Ok(Self(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }
}

/// `(x1, ..., xn)` with `0 <= xi <= i - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InversionSequence(Vec<u32>);

impl InversionSequence {
    pub fn new(entries: Vec<u32>) -> Result<Self, StructureError> {
        if let Some(i) = entries.iter().enumerate().position(|(i, &x)| x as usize > i) {
            return Err(StructureError::invalid(
                StructureKind::InversionSequence,
                format!("entry {} at position {} exceeds {}", entries[i], i + 1, i),
            ));
        }
        Ok(Self(entries))
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn max_entry(&self) -> Option<u32> {
        self.0.iter().copied().max()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Down,
}

/// A peak `(x, y)`: an up step ending at abscissa `x`, height `y`, followed
/// by a down step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Peak {
    pub x: u32,
    pub y: u32,
}

/// A Dyck path stored as its step word. Peaks are derived.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DyckPath(Vec<Step>);

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self, StructureError> {
        let mut height = 0i64;
        for (i, s) in steps.iter().enumerate() {
            height += if *s == Step::Up { 1 } else { -1 };
            if height < 0 {
                return Err(StructureError::invalid(
                    StructureKind::DyckPath,
                    format!("path goes below the axis after step {}", i + 1),
                ));
            }
        }
        if height != 0 {
            return Err(StructureError::invalid(StructureKind::DyckPath, "path does not return to the axis"));
        }
        Ok(Self(steps))
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    /// Semilength.
    pub fn size(&self) -> usize {
        self.0.len() / 2
    }

    pub fn peaks(&self) -> Vec<Peak> {
        let mut peaks = Vec::new();
        let mut height = 0u32;
        for (i, s) in self.0.iter().enumerate() {
            match s {
                Step::Up => {
                    height += 1;
                    if self.0.get(i + 1) == Some(&Step::Down) {
                        peaks.push(Peak { x: i as u32 + 1, y: height });
                    }
                }
                Step::Down => height -= 1,
            }
        }
        peaks
    }
}

impl std::fmt::Display for DyckPath {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for s in &self.0 {
            f.write_str(if *s == Step::Up { "U" } else { "D" })?;
        }
        Ok(())
    }
}

/// Checks the peak-list characterization of Dyck paths of semilength
/// `size`: parity, strictly increasing abscissae, positive heights, the
/// first peak on the diagonal, the step inequalities between consecutive
/// peaks, and a final peak that closes the path.
pub fn peak_conditions_hold(peaks: &[Peak], size: usize) -> bool {
    let Some(first) = peaks.first() else {
        return size == 0;
    };
    let last = peaks[peaks.len() - 1];
    let each = peaks.iter().all(|p| (p.x + p.y) % 2 == 0 && p.y > 0);
    let between = peaks.windows(2).all(|w| {
        let (a, b) = (w[0], w[1]);
        let (xa, ya, xb, yb) = (a.x as i64, a.y as i64, b.x as i64, b.y as i64);
        xa < xb && (xb - xa - ya).abs() <= yb && yb < xb - xa + ya
    });
    each && between && first.x == first.y && (last.x + last.y) as usize == 2 * size
}

/// Blocks `B1, ..., Bk`, nonempty, disjoint, covering `{1..n}`, listed by
/// increasing minimum. Each block is stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetPartition(Vec<Vec<u32>>);

impl SetPartition {
    pub fn new(mut blocks: Vec<Vec<u32>>) -> Result<Self, StructureError> {
        let bad = |r: String| StructureError::invalid(StructureKind::SetPartition, r);
        for b in &mut blocks {
            if b.is_empty() {
                return Err(bad("empty block".into()));
            }
            b.sort_unstable();
        }
        if blocks.windows(2).any(|w| w[0][0] >= w[1][0]) {
            return Err(bad("blocks must be ordered by increasing minimum".into()));
        }
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for &e in blocks.iter().flatten() {
            let slot = seen
                .get_mut(e as usize)
                .filter(|_| e >= 1)
                .ok_or_else(|| bad(format!("element {e} outside 1..={n}")))?;
            if *slot {
                return Err(bad(format!("element {e} appears twice")));
            }
            *slot = true;
        }
        Ok(Self(blocks))
    }

    /// Builds the partition encoded by a restricted growth string, where
    /// `rgs[i]` is the block index of element `i + 1`.
    pub fn from_rgs(rgs: &[u32]) -> Result<Self, StructureError> {
        let mut blocks: Vec<Vec<u32>> = Vec::new();
        for (i, &b) in rgs.iter().enumerate() {
            let b = b as usize;
            if b > blocks.len() {
                return Err(StructureError::invalid(
                    StructureKind::SetPartition,
                    "not a restricted growth string",
                ));
            }
            if b == blocks.len() {
                blocks.push(Vec::new());
            }
            blocks[b].push(i as u32 + 1);
        }
        Ok(Self(blocks))
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(Vec::len).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct TreeNode {
    pub children: Vec<TreeNode>,
}

impl TreeNode {
    fn size(&self) -> usize {
        1 + self.children.iter().map(TreeNode::size).sum::<usize>()
    }

    fn preorder_counts(&self, out: &mut Vec<u32>) {
        out.push(self.children.len() as u32);
        for c in &self.children {
            c.preorder_counts(out);
        }
    }
}

/// A rooted planar (ordered) tree, possibly empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PlanarTree {
    root: Option<TreeNode>,
}

impl PlanarTree {
    pub fn empty() -> Self {
        Self { root: None }
    }

    pub fn from_root(root: TreeNode) -> Self {
        Self { root: Some(root) }
    }

    pub fn root(&self) -> Option<&TreeNode> {
        self.root.as_ref()
    }

    /// Vertex count.
    pub fn size(&self) -> usize {
        self.root.as_ref().map_or(0, TreeNode::size)
    }

    /// Number of children of every vertex, in preorder. This is also the
    /// Łukasiewicz word of the tree.
    pub fn child_counts(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.size());
        if let Some(r) = &self.root {
            r.preorder_counts(&mut out);
        }
        out
    }

    /// Decodes a Łukasiewicz word (preorder child counts).
    pub fn from_lukasiewicz(word: &[u32]) -> Result<Self, StructureError> {
        if word.is_empty() {
            return Ok(Self::empty());
        }
        let mut open = 1i64;
        for (i, &d) in word.iter().enumerate() {
            open += d as i64 - 1;
            let last = i + 1 == word.len();
            if (open <= 0 && !last) || (last && open != 0) {
                return Err(StructureError::invalid(
                    StructureKind::PlanarTree,
                    "not a Łukasiewicz word",
                ));
            }
        }
        fn build(word: &[u32], pos: &mut usize) -> TreeNode {
            let d = word[*pos];
            *pos += 1;
            TreeNode { children: (0..d).map(|_| build(word, pos)).collect() }
        }
        let mut pos = 0;
        Ok(Self::from_root(build(word, &mut pos)))
    }

    /// Breadth-first presentation: vertices are labelled `1..=k` in BFS
    /// order and entry `i - 1` is `{i} ∪ children(i)`.
    pub fn bfs_sets(&self) -> Vec<BTreeSet<u32>> {
        let Some(root) = &self.root else {
            return Vec::new();
        };
        let mut sets = Vec::new();
        let mut queue = VecDeque::from([root]);
        let mut next_label = 2u32;
        while let Some(node) = queue.pop_front() {
            let label = sets.len() as u32 + 1;
            let mut set = BTreeSet::from([label]);
            for c in &node.children {
                set.insert(next_label);
                next_label += 1;
                queue.push_back(c);
            }
            sets.push(set);
        }
        sets
    }

    /// Inverse of [`bfs_sets`](Self::bfs_sets). Rejects families that are
    /// not a breadth-first labelling of some planar tree.
    pub fn from_bfs_sets(sets: &[BTreeSet<u32>]) -> Result<Self, StructureError> {
        let bad = |r: &str| StructureError::invalid(StructureKind::PlanarTree, r);
        let k = sets.len();
        if k == 0 {
            return Ok(Self::empty());
        }
        let mut children: Vec<Vec<u32>> = Vec::with_capacity(k);
        let mut covered = vec![false; k + 1];
        for (i, set) in sets.iter().enumerate() {
            let label = i as u32 + 1;
            if set.first() != Some(&label) {
                return Err(bad("min A_i must equal i"));
            }
            let kids: Vec<u32> = set.iter().copied().skip(1).collect();
            if kids.windows(2).any(|w| w[1] != w[0] + 1) {
                return Err(bad("children must form an interval"));
            }
            for &c in &kids {
                match covered.get_mut(c as usize) {
                    Some(slot) if !*slot && c >= 2 => *slot = true,
                    _ => return Err(bad("children must partition 2..=k")),
                }
            }
            children.push(kids);
        }
        if covered[2..].iter().any(|c| !c) {
            return Err(bad("children must partition 2..=k"));
        }
        fn build(v: u32, children: &[Vec<u32>]) -> TreeNode {
            TreeNode {
                children: children[v as usize - 1].iter().map(|&c| build(c, children)).collect(),
            }
        }
        let tree = Self::from_root(build(1, &children));
        if tree.bfs_sets() != sets {
            return Err(bad("labels are not in breadth-first order"));
        }
        Ok(tree)
    }
}
