//! Brute-force ground truth: enumerate coding trees and count their orbits
//! under permutations of the colours.
//!
//! A k-coding tree has black vertices (hedra) and coloured vertices (fronts,
//! coloured `1..=k+1`). Every edge joins a black and a coloured vertex, and
//! each black vertex sees exactly one neighbour of every colour. Isomorphism
//! classes of coding trees with `n` black vertices, taken up to recolouring,
//! are the unlabeled k-trees with `n` hedra.
//!
//! Everything here is exponential and only meant for small `k` and `n`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::partitions::Partition;

pub const MAX_K: usize = 3;
pub const MAX_N: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexKind {
    Black,
    Colored(u8),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodingTree {
    k: usize,
    kinds: Vec<VertexKind>,
    adj: Vec<Vec<usize>>,
}

/// Rooted-at-the-center AHU string of a coding tree. Two trees have equal
/// codes iff they are isomorphic by a map preserving kinds and colours.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(String);

/// A permutation of the colours `1..=k+1`, stored as the image of each
/// colour in order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColorPermutation(Vec<u8>);

impl CodingTree {
    /// Builds and validates a coding tree.
    pub fn new(k: usize, kinds: Vec<VertexKind>, edges: &[(usize, usize)]) -> Result<Self> {
        let invalid = |msg: String| Err(Error::InvalidCodingTree(msg));
        let n = kinds.len();
        if n == 0 {
            return invalid("no vertices".into());
        }
        if edges.len() != n - 1 {
            return invalid(format!("{n} vertices but {} edges", edges.len()));
        }
        for kind in &kinds {
            if let VertexKind::Colored(c) = *kind {
                if c == 0 || c as usize > k + 1 {
                    return invalid(format!("color {c} outside 1..={}", k + 1));
                }
            }
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            if a >= n || b >= n {
                return invalid(format!("edge ({a}, {b}) out of range"));
            }
            match (kinds[a], kinds[b]) {
                (VertexKind::Black, VertexKind::Colored(_)) | (VertexKind::Colored(_), VertexKind::Black) => {
                }
                _ => return invalid(format!("edge ({a}, {b}) does not join black to colored")),
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        let tree = CodingTree { k, kinds, adj };
        if tree.bfs_distances(0).iter().any(Option::is_none) {
            return invalid("not connected".into());
        }
        for v in 0..n {
            if tree.kinds[v] != VertexKind::Black {
                continue;
            }
            let colors: BTreeSet<u8> = tree.adj[v].iter().filter_map(|&w| tree.color(w)).collect();
            if tree.adj[v].len() != k + 1 || colors.len() != k + 1 {
                return invalid(format!("black vertex {v} does not see each color exactly once"));
            }
        }
        Ok(tree)
    }

    /// The coding tree of a lone front: one coloured vertex.
    pub fn single_front(k: usize, color: u8) -> Result<Self> {
        Self::new(k, vec![VertexKind::Colored(color)], &[])
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn kinds(&self) -> &[VertexKind] {
        &self.kinds
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn vertex_count(&self) -> usize {
        self.kinds.len()
    }

    pub fn black_count(&self) -> usize {
        self.kinds.iter().filter(|&&t| t == VertexKind::Black).count()
    }

    fn color(&self, v: usize) -> Option<u8> {
        match self.kinds[v] {
            VertexKind::Colored(c) => Some(c),
            VertexKind::Black => None,
        }
    }

    fn bfs_distances(&self, from: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.kinds.len()];
        dist[from] = Some(0);
        let mut queue = VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            let dv = dist[v].expect("visited");
            for &w in &self.adj[v] {
                if dist[w].is_none() {
                    dist[w] = Some(dv + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    fn farthest(&self, from: usize) -> (usize, Vec<usize>) {
        let dist: Vec<usize> = self
            .bfs_distances(from)
            .into_iter()
            .map(|d| d.expect("connected"))
            .collect();
        let far = (0..dist.len())
            .max_by_key(|&v| (dist[v], std::cmp::Reverse(v)))
            .expect("nonempty");
        (far, dist)
    }

    /// Middle vertices of a longest path: one vertex, or the two ends of a
    /// central edge.
    pub fn centers(&self) -> Vec<usize> {
        let (a, _) = self.farthest(0);
        let (b, from_a) = self.farthest(a);
        let diameter = from_a[b];
        let (_, from_b) = self.farthest(b);
        (0..self.kinds.len())
            .filter(|&v| {
                let (da, db) = (from_a[v], from_b[v]);
                da + db == diameter && (da == diameter / 2 || da == diameter.div_ceil(2))
            })
            .collect()
    }

    /// The canonical root. Leaves of a coding tree are coloured, so a longest
    /// path has even length and the center is a single vertex; should a
    /// central edge ever occur, its black endpoint is used.
    pub fn center(&self) -> usize {
        let centers = self.centers();
        match centers.as_slice() {
            [c] => *c,
            _ => *centers
                .iter()
                .find(|&&v| self.kinds[v] == VertexKind::Black)
                .expect("a central edge has a black endpoint"),
        }
    }

    fn encode_from(&self, v: usize, parent: Option<usize>, out: &mut String) {
        let mut children: Vec<String> = self.adj[v]
            .iter()
            .filter(|&&w| Some(w) != parent)
            .map(|&w| {
                let mut s = String::new();
                self.encode_from(w, Some(v), &mut s);
                s
            })
            .collect();
        children.sort_unstable();
        out.push('(');
        match self.kinds[v] {
            VertexKind::Black => out.push('b'),
            VertexKind::Colored(c) => out.push(char::from(b'0' + c)),
        }
        for child in children {
            out.push_str(&child);
        }
        out.push(')');
    }

    pub fn canonical_code(&self) -> CanonicalCode {
        let mut s = String::new();
        self.encode_from(self.center(), None, &mut s);
        CanonicalCode(s)
    }

    /// Applies a colour permutation to every coloured vertex.
    pub fn recolor(&self, perm: &ColorPermutation) -> CodingTree {
        let kinds = self
            .kinds
            .iter()
            .map(|&t| match t {
                VertexKind::Colored(c) => VertexKind::Colored(perm.apply(c)),
                VertexKind::Black => VertexKind::Black,
            })
            .collect();
        CodingTree {
            k: self.k,
            kinds,
            adj: self.adj.clone(),
        }
    }

    /// Glues a new hedron onto the front `at`: a black vertex joined to `at`
    /// and to fresh leaves of the other `k` colours.
    fn attach_hedron(&self, at: usize) -> CodingTree {
        let shared = self.color(at).expect("attach at a colored vertex");
        let mut tree = self.clone();
        let black = tree.kinds.len();
        tree.kinds.push(VertexKind::Black);
        tree.adj.push(vec![at]);
        tree.adj[at].push(black);
        for c in (1..=(self.k + 1) as u8).filter(|&c| c != shared) {
            let leaf = tree.kinds.len();
            tree.kinds.push(VertexKind::Colored(c));
            tree.adj.push(vec![black]);
            tree.adj[black].push(leaf);
        }
        tree
    }
}

impl CanonicalCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Rebuilds a tree (with arbitrary vertex numbering) from its code.
    pub fn decode(&self, k: usize) -> Result<CodingTree> {
        let bytes = self.0.as_bytes();
        let bad = |msg: &str| Error::InvalidCode(format!("{msg} in {:?}", self.0));
        let mut kinds = Vec::new();
        let mut edges = Vec::new();
        let mut stack: Vec<usize> = Vec::new();
        let mut pos = 0;
        while pos < bytes.len() {
            match bytes[pos] {
                b'(' => {
                    let label = *bytes.get(pos + 1).ok_or_else(|| bad("truncated"))?;
                    let kind = match label {
                        b'b' => VertexKind::Black,
                        b'1'..=b'9' => VertexKind::Colored(label - b'0'),
                        _ => return Err(bad("unknown label")),
                    };
                    let v = kinds.len();
                    kinds.push(kind);
                    if let Some(&parent) = stack.last() {
                        edges.push((parent, v));
                    } else if v != 0 {
                        return Err(bad("more than one root"));
                    }
                    stack.push(v);
                    pos += 2;
                }
                b')' => {
                    stack.pop().ok_or_else(|| bad("unbalanced"))?;
                    pos += 1;
                }
                _ => return Err(bad("unexpected character")),
            }
        }
        if !stack.is_empty() {
            return Err(bad("unbalanced"));
        }
        CodingTree::new(k, kinds, &edges)
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl ColorPermutation {
    /// `images[c - 1]` is the image of colour `c`.
    pub fn new(images: Vec<u8>) -> Result<Self> {
        let colors = images.len();
        let seen: BTreeSet<u8> = images.iter().copied().collect();
        if seen.len() != colors || images.iter().any(|&c| c == 0 || c as usize > colors) {
            return Err(Error::InvalidPermutation { perm: images, colors });
        }
        Ok(ColorPermutation(images))
    }

    pub fn identity(colors: usize) -> Self {
        ColorPermutation((1..=colors as u8).collect())
    }

    /// Every permutation of `1..=colors`, in lexicographic order of images.
    pub fn all(colors: usize) -> Vec<Self> {
        (1..=colors as u8)
            .permutations(colors)
            .map(ColorPermutation)
            .collect()
    }

    pub fn colors(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, c: u8) -> u8 {
        self.0[c as usize - 1]
    }

    pub fn cycle_type(&self) -> Partition {
        let mut seen = vec![false; self.0.len()];
        let mut parts = Vec::new();
        for start in 0..self.0.len() {
            let mut len = 0;
            let mut c = start;
            while !seen[c] {
                seen[c] = true;
                c = self.0[c] as usize - 1;
                len += 1;
            }
            if len > 0 {
                parts.push(len);
            }
        }
        Partition::new(parts)
    }
}

fn check_limits(k: usize, n: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    if k > MAX_K || n > MAX_N {
        return Err(Error::OracleLimit {
            k,
            n,
            max_k: MAX_K,
            max_n: MAX_N,
        });
    }
    Ok(())
}

/// One representative per isomorphism class of k-coding trees with `n`
/// black vertices, keyed by canonical code.
///
/// Classes with `n + 1` black vertices come from gluing a hedron onto every
/// front of every class with `n`: removing a black vertex that is a leaf of
/// the tree with coloured leaves stripped (together with its leaf fronts)
/// always leaves a valid coding tree.
pub fn enumerate_trees(k: usize, n: usize) -> Result<BTreeMap<CanonicalCode, CodingTree>> {
    check_limits(k, n)?;
    let mut level: BTreeMap<CanonicalCode, CodingTree> = (1..=(k + 1) as u8)
        .map(|c| {
            let t = CodingTree::single_front(k, c).expect("valid");
            (t.canonical_code(), t)
        })
        .collect();
    for _ in 0..n {
        let mut next = BTreeMap::new();
        for tree in level.values() {
            for v in (0..tree.vertex_count()).filter(|&v| tree.color(v).is_some()) {
                let grown = tree.attach_hedron(v);
                next.entry(grown.canonical_code()).or_insert(grown);
            }
        }
        level = next;
    }
    Ok(level)
}

pub fn enumerate_coding_trees(k: usize, n: usize) -> Result<Vec<CanonicalCode>> {
    Ok(enumerate_trees(k, n)?.into_keys().collect())
}

/// Number of colour-orbits of coding trees with `n` black vertices, i.e.
/// the number of unlabeled k-trees with `n` hedra.
pub fn orbit_count(k: usize, n: usize) -> Result<usize> {
    let trees = enumerate_trees(k, n)?;
    let perms = ColorPermutation::all(k + 1);
    let reps: BTreeSet<CanonicalCode> = trees
        .values()
        .map(|t| {
            perms
                .iter()
                .map(|p| t.recolor(p).canonical_code())
                .min()
                .expect("at least the identity")
        })
        .collect();
    Ok(reps.len())
}

/// Number of isomorphism classes left unchanged by recolouring with `perm`.
pub fn fixed_count(k: usize, n: usize, perm: &ColorPermutation) -> Result<usize> {
    if perm.colors() != k + 1 {
        return Err(Error::InvalidPermutation {
            perm: perm.0.clone(),
            colors: k + 1,
        });
    }
    let trees = enumerate_trees(k, n)?;
    Ok(trees
        .iter()
        .filter(|(code, t)| &t.recolor(perm).canonical_code() == *code)
        .count())
}
