//! Finite simple digraphs and their two-way distance structure.
//!
//! Vertices are always `0..n`. A digraph may carry a Cayley tag recording
//! that it is `Cay(Z_n, S)`: vertex `x` points to `x + s (mod n)` for every
//! `s` in the connection set `S`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::bits::BitMatrix;
use crate::error::{Error, Result};

/// Cayley structure of a digraph over the cyclic group `Z_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyTag {
    pub modulus: usize,
    /// Sorted, duplicate-free, every element in `1..modulus`.
    pub connection_set: Vec<usize>,
}

/// A finite simple digraph on vertices `0..n`.
///
/// Out-neighbour sets are stored as bit rows of width `n`, which makes the
/// intersection counting downstream word-parallel.
#[derive(Clone, Debug)]
pub struct Digraph {
    n: usize,
    adj: BitMatrix,
    cayley: Option<CayleyTag>,
}

impl Digraph {
    /// The Cayley digraph `Cay(Z_n, set)`.
    ///
    /// Requires a nonempty `set` with every element in `1..n`; element 0
    /// would create self-loops and is rejected.
    pub fn cayley(n: usize, set: &[usize]) -> Result<Self> {
        let set: BTreeSet<usize> = set.iter().copied().collect();
        if set.is_empty() {
            return Err(Error::EmptyConnectionSet);
        }
        if set.contains(&0) {
            return Err(Error::ZeroInConnectionSet);
        }
        if let Some(&s) = set.iter().find(|&&s| s >= n) {
            return Err(Error::ElementOutOfRange {
                element: s,
                modulus: n,
            });
        }
        let mut adj = BitMatrix::new(n, n);
        for x in 0..n {
            for &s in &set {
                adj.set(x, (x + s) % n);
            }
        }
        Ok(Digraph {
            n,
            adj,
            cayley: Some(CayleyTag {
                modulus: n,
                connection_set: set.into_iter().collect(),
            }),
        })
    }

    /// A general digraph from explicit out-neighbour lists.
    pub fn from_out_neighbors(lists: &[Vec<usize>]) -> Result<Self> {
        let n = lists.len();
        let mut adj = BitMatrix::new(n, n);
        for (x, out) in lists.iter().enumerate() {
            for &y in out {
                if y >= n {
                    return Err(Error::ElementOutOfRange {
                        element: y,
                        modulus: n,
                    });
                }
                if y == x {
                    return Err(Error::SelfLoop(x));
                }
                if adj.get(x, y) {
                    return Err(Error::DuplicateArc { x, y });
                }
                adj.set(x, y);
            }
        }
        Ok(Digraph {
            n,
            adj,
            cayley: None,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cayley_tag(&self) -> Option<&CayleyTag> {
        self.cayley.as_ref()
    }

    #[inline]
    pub fn has_arc(&self, x: usize, y: usize) -> bool {
        self.adj.get(x, y)
    }

    pub fn out_neighbors(&self, v: usize) -> Vec<usize> {
        self.adj.row_ones(v).collect()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.adj.row_count(v)
    }

    /// True when every arc has its reverse. For a Cayley digraph this is
    /// equivalent to `S = -S`.
    pub fn is_undirected(&self) -> bool {
        for x in 0..self.n {
            for y in self.adj.row_ones(x) {
                if !self.adj.get(y, x) {
                    return false;
                }
            }
        }
        true
    }

    fn bfs(&self, src: usize) -> Result<Vec<u32>> {
        let n = self.n;
        let mut dist = vec![u32::MAX; n];
        dist[src] = 0;
        let mut queue = VecDeque::with_capacity(n);
        queue.push_back(src);
        while let Some(x) = queue.pop_front() {
            let dx = dist[x];
            for y in self.adj.row_ones(x) {
                if dist[y] == u32::MAX {
                    dist[y] = dx + 1;
                    queue.push_back(y);
                }
            }
        }
        if let Some(to) = dist.iter().position(|&d| d == u32::MAX) {
            return Err(Error::NotStronglyConnected { from: src, to });
        }
        Ok(dist)
    }

    /// All-pairs directed distances. Fails unless the digraph is strongly
    /// connected, reporting an unreachable ordered pair.
    ///
    /// For Cayley digraphs a single BFS from 0 is translated to every
    /// source, since dist(x, y) only depends on y - x.
    pub fn distances(&self) -> Result<DistanceMatrix> {
        let n = self.n;
        let mut dist = vec![0u32; n * n];
        if self.cayley.is_some() {
            let base = self.bfs(0)?;
            for x in 0..n {
                for y in 0..n {
                    dist[x * n + y] = base[(y + n - x) % n];
                }
            }
        } else {
            for x in 0..n {
                let row = self.bfs(x)?;
                dist[x * n..(x + 1) * n].copy_from_slice(&row);
            }
        }
        Ok(DistanceMatrix { n, dist })
    }

    /// Partition of `X × X` by the two-way distance
    /// `(dist(x, y), dist(y, x))`.
    ///
    /// Class 0 is the diagonal pair (0, 0); the remaining classes are
    /// indexed in lexicographic order of their labels.
    pub fn two_way_partition(&self) -> Result<RelationPartition> {
        let n = self.n;
        let dm = self.distances()?;
        let mut labels: BTreeSet<(usize, usize)> = BTreeSet::new();
        for x in 0..n {
            for y in 0..n {
                labels.insert((dm.get(x, y), dm.get(y, x)));
            }
        }
        // (0, 0) sorts first because every off-diagonal label has both
        // entries >= 1.
        let ordered: Vec<(usize, usize)> = labels.into_iter().collect();
        debug_assert_eq!(ordered[0], (0, 0));
        let index: BTreeMap<(usize, usize), u32> = ordered
            .iter()
            .enumerate()
            .map(|(i, &l)| (l, i as u32))
            .collect();
        let mut class_of = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                class_of[x * n + y] = index[&(dm.get(x, y), dm.get(y, x))];
            }
        }
        RelationPartition::from_class_matrix(n, class_of, Some(ordered))
    }

    /// Length of the shortest directed cycle, computed as
    /// `min over arcs (x, y) of 1 + dist(y, x)`.
    pub fn girth(&self) -> Result<usize> {
        let dm = self.distances()?;
        let mut best = usize::MAX;
        for x in 0..self.n {
            for y in self.adj.row_ones(x) {
                best = best.min(1 + dm.get(y, x));
            }
        }
        Ok(best)
    }

    /// The set of arc types `(1, r)` where `r = dist(y, x)` over arcs
    /// `(x, y)`.
    pub fn arc_types(&self) -> Result<BTreeSet<(usize, usize)>> {
        let dm = self.distances()?;
        let mut types = BTreeSet::new();
        for x in 0..self.n {
            for y in self.adj.row_ones(x) {
                types.insert((1usize, dm.get(y, x)));
            }
        }
        Ok(types)
    }
}

/// All-pairs directed distances of a strongly connected digraph.
#[derive(Clone, Debug)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.dist[x * self.n + y] as usize
    }
}

/// A partition of `X × X` into indexed classes, class 0 being the diagonal.
///
/// This is the raw material of the scheme axioms: `d` counts the
/// non-diagonal classes, so indices run over `0..=d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationPartition {
    n: usize,
    d: usize,
    class_of: Vec<u32>,
    labels: Option<Vec<(usize, usize)>>,
}

impl RelationPartition {
    /// Build from an explicit `n × n` class matrix (row-major).
    ///
    /// Validates that class 0 is exactly the diagonal, that class indices
    /// are contiguous, and that every class is nonempty.
    pub fn from_class_matrix(
        n: usize,
        class_of: Vec<u32>,
        labels: Option<Vec<(usize, usize)>>,
    ) -> Result<Self> {
        assert_eq!(class_of.len(), n * n, "class matrix must be n*n");
        let mut max = 0u32;
        for x in 0..n {
            for y in 0..n {
                let k = class_of[x * n + y];
                max = max.max(k);
                if (x == y) != (k == 0) {
                    return Err(Error::DiagonalViolation { x, y });
                }
            }
        }
        let d = max as usize;
        let mut seen = vec![false; d + 1];
        for &k in &class_of {
            seen[k as usize] = true;
        }
        if let Some(i) = seen.iter().position(|&s| !s) {
            return Err(Error::EmptyClass(i));
        }
        if let Some(ref l) = labels {
            assert_eq!(l.len(), d + 1, "one label per class");
        }
        Ok(RelationPartition {
            n,
            d,
            class_of,
            labels,
        })
    }

    /// Build a translation partition over `Z_n` from difference classes.
    ///
    /// `classes[i]` becomes class `i + 1`: the pairs `(x, y)` with
    /// `y - x mod n` in `classes[i]`. The classes must partition `1..n`.
    pub fn from_difference_classes(n: usize, classes: &[Vec<usize>]) -> Result<Self> {
        let mut class_of_diff = vec![u32::MAX; n];
        class_of_diff[0] = 0;
        for (i, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(Error::EmptyClass(i + 1));
            }
            for &c in class {
                if c == 0 || c >= n {
                    return Err(Error::NotAPartition {
                        n,
                        detail: format!("element {c} out of range"),
                    });
                }
                if class_of_diff[c] != u32::MAX {
                    return Err(Error::NotAPartition {
                        n,
                        detail: format!("element {c} appears twice"),
                    });
                }
                class_of_diff[c] = (i + 1) as u32;
            }
        }
        if let Some(c) = class_of_diff.iter().position(|&k| k == u32::MAX) {
            return Err(Error::NotAPartition {
                n,
                detail: format!("element {c} is uncovered"),
            });
        }
        let mut class_of = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                class_of[x * n + y] = class_of_diff[(y + n - x) % n];
            }
        }
        RelationPartition::from_class_matrix(n, class_of, None)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of non-diagonal classes.
    pub fn d(&self) -> usize {
        self.d
    }

    #[inline]
    pub fn class_of(&self, x: usize, y: usize) -> usize {
        self.class_of[x * self.n + y] as usize
    }

    pub fn labels(&self) -> Option<&[(usize, usize)]> {
        self.labels.as_deref()
    }

    pub fn label(&self, class: usize) -> Option<(usize, usize)> {
        self.labels.as_ref().map(|l| l[class])
    }

    /// Index of the class carrying a given two-way label, if labelled.
    pub fn class_with_label(&self, label: (usize, usize)) -> Option<usize> {
        self.labels
            .as_ref()
            .and_then(|l| l.iter().position(|&x| x == label))
    }

    /// `None` when translation-invariant over `Z_n`; otherwise a witness
    /// pair `(x, y)` with `class(x, y) != class(0, y - x)`.
    pub fn translation_witness(&self) -> Option<(usize, usize)> {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                if self.class_of(x, y) != self.class_of(0, (y + n - x) % n) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    pub fn is_translation_invariant(&self) -> bool {
        self.translation_witness().is_none()
    }

    /// Difference classes `D_i = { c : class(0, c) = i }` for `i = 1..=d`,
    /// or `None` when the partition is not translation-invariant.
    pub fn difference_classes(&self) -> Option<Vec<Vec<usize>>> {
        if !self.is_translation_invariant() {
            return None;
        }
        let mut classes = vec![Vec::new(); self.d];
        for c in 1..self.n {
            classes[self.class_of(0, c) - 1].push(c);
        }
        Some(classes)
    }

    /// True when `other` induces the same unordered family of classes,
    /// regardless of how the classes are indexed or labelled.
    pub fn same_partition(&self, other: &RelationPartition) -> bool {
        self.n == other.n && self.canonical_relabel() == other.canonical_relabel()
    }

    fn canonical_relabel(&self) -> Vec<u32> {
        let mut map = vec![u32::MAX; self.d + 1];
        let mut next = 0u32;
        let mut out = Vec::with_capacity(self.class_of.len());
        for &k in &self.class_of {
            if map[k as usize] == u32::MAX {
                map[k as usize] = next;
                next += 1;
            }
            out.push(map[k as usize]);
        }
        out
    }
}
