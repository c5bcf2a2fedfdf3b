//! Generation of trivalent trees with colored leaves, up to isomorphism.
//!
//! Combinatorial types of plane tropical curves are trivalent trees whose
//! leaves are the unbounded rays, colored by (direction, weight). Trees are
//! generated level by level: every tree with k+1 leaves arises from a tree
//! with k leaves by subdividing one edge and hanging the new leaf there, so
//! a canonical-form dedup per level enumerates each class exactly once.

use std::collections::BTreeMap;

use crate::lattice::IntVec2;

/// Unrooted tree whose vertices are either leaves (degree 1, colored) or
/// internal (degree 3).
#[derive(Clone, Debug)]
pub(crate) struct LeafTree {
    pub adj: Vec<Vec<usize>>,
    /// `Some(color)` for leaves.
    pub color: Vec<Option<u32>>,
}

impl LeafTree {
    fn two_leaves(c0: u32, c1: u32) -> Self {
        LeafTree {
            adj: vec![vec![1], vec![0]],
            color: vec![Some(c0), Some(c1)],
        }
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (v, ns) in self.adj.iter().enumerate() {
            for &w in ns {
                if v < w {
                    out.push((v, w));
                }
            }
        }
        out
    }

    /// Subdivide edge (a,b) with a new internal vertex and hang a new leaf
    /// of the given color on it.
    fn grow(&self, a: usize, b: usize, color: u32) -> LeafTree {
        let mut t = self.clone();
        let m = t.adj.len();
        let leaf = m + 1;
        t.adj.push(vec![a, b, leaf]);
        t.adj.push(vec![m]);
        t.color.push(None);
        t.color.push(Some(color));
        let pos = t.adj[a].iter().position(|&x| x == b).unwrap();
        t.adj[a][pos] = m;
        let pos = t.adj[b].iter().position(|&x| x == a).unwrap();
        t.adj[b][pos] = m;
        t
    }
}

/// Canonical string of a colored leaf tree (AHU encoding rooted at the
/// tree center).
pub(crate) fn leaf_tree_canon(t: &LeafTree) -> String {
    let n = t.adj.len();
    if n == 1 {
        return encode_vertex(t, 0);
    }
    centers(&t.adj)
        .into_iter()
        .map(|c| rooted(t, c, usize::MAX))
        .min()
        .unwrap()
}

fn encode_vertex(t: &LeafTree, v: usize) -> String {
    match t.color[v] {
        Some(c) => format!("L{c}"),
        None => "I".to_string(),
    }
}

fn rooted(t: &LeafTree, v: usize, parent: usize) -> String {
    let mut subs: Vec<String> = t.adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted(t, w, v))
        .collect();
    subs.sort();
    format!("({}{})", encode_vertex(t, v), subs.join(""))
}

fn centers(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut degree: Vec<usize> = adj.iter().map(|a| a.len()).collect();
    let mut removed = vec![false; n];
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            if removed[v] {
                continue;
            }
            removed[v] = true;
            remaining -= 1;
            for &w in &adj[v] {
                if !removed[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    (0..n).filter(|&v| !removed[v]).collect()
}

/// All isomorphism classes of trivalent trees whose leaf-color multiset is
/// exactly `colors` (sorted ascending).
pub(crate) fn colored_trees(colors: &[u32]) -> Vec<LeafTree> {
    assert!(colors.windows(2).all(|w| w[0] <= w[1]), "colors sorted");
    if colors.len() < 2 {
        return Vec::new();
    }
    let mut level: BTreeMap<String, LeafTree> = BTreeMap::new();
    let base = LeafTree::two_leaves(colors[0], colors[1]);
    level.insert(leaf_tree_canon(&base), base);
    for &c in &colors[2..] {
        let mut next: BTreeMap<String, LeafTree> = BTreeMap::new();
        for t in level.values() {
            for (a, b) in t.edges() {
                let grown = t.grow(a, b, c);
                let key = leaf_tree_canon(&grown);
                next.entry(key).or_insert(grown);
            }
        }
        level = next;
    }
    level.into_values().collect()
}

/// A trivalent tree with rays: the combinatorial skeleton the search
/// realizes through point configurations. Edge derivatives are forced by
/// the ray directions (each edge carries the sum of the ray directions on
/// its head side).
#[derive(Clone, Debug)]
pub(crate) struct RayTree {
    pub n_vertices: usize,
    /// internal edges (tail, head, derivative tail→head)
    pub edges: Vec<(usize, usize, IntVec2)>,
    /// (vertex, direction); direction = weight × primitive
    pub rays: Vec<(usize, IntVec2)>,
}

/// Convert a leaf tree into a ray tree using the given color → direction
/// table. Returns `None` when some internal edge would get derivative zero
/// (such a type is never rigid).
pub(crate) fn to_ray_tree(t: &LeafTree, dir_of_color: &[IntVec2]) -> Option<RayTree> {
    let n = t.adj.len();
    let internal: Vec<usize> = (0..n).filter(|&v| t.color[v].is_none()).collect();
    if internal.is_empty() {
        return None;
    }
    let mut index = vec![usize::MAX; n];
    for (i, &v) in internal.iter().enumerate() {
        index[v] = i;
    }
    // sum of ray directions in the component of `to` after cutting (from, to)
    fn side_sum(
        t: &LeafTree,
        dir_of_color: &[IntVec2],
        from: usize,
        to: usize,
    ) -> IntVec2 {
        match t.color[to] {
            Some(c) => dir_of_color[c as usize],
            None => {
                let mut sum = IntVec2::ZERO;
                for &w in &t.adj[to] {
                    if w != from {
                        sum = sum + side_sum(t, dir_of_color, to, w);
                    }
                }
                sum
            }
        }
    }
    let mut edges = Vec::new();
    let mut rays = Vec::new();
    for (v, ns) in t.adj.iter().enumerate() {
        if t.color[v].is_some() {
            continue;
        }
        for &w in ns {
            match t.color[w] {
                Some(c) => rays.push((index[v], dir_of_color[c as usize])),
                None => {
                    if v < w {
                        let d = side_sum(t, dir_of_color, v, w);
                        if d.is_zero() {
                            return None;
                        }
                        edges.push((index[v], index[w], d));
                    }
                }
            }
        }
    }
    Some(RayTree {
        n_vertices: internal.len(),
        edges,
        rays,
    })
}
