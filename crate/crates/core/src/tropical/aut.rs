//! Automorphism counting and canonical forms for combinatorial types.
//!
//! An automorphism fixes every labeled end, preserves face assignments and
//! base degrees, and may reverse a stored edge orientation only if it
//! negates the stored derivative accordingly. Trees get a fast AHU-style
//! canonical encoding (rooted at the tree center); everything else goes
//! through a small refinement-plus-backtracking canonical labeling.

use std::collections::BTreeMap;

use crate::lattice::IntVec2;

use super::CombinatorialType;

/// Invariant data of a vertex that any automorphism must preserve.
fn local_key(t: &CombinatorialType, v: usize) -> String {
    let mut aways = t.away_derivatives(v);
    aways.sort();
    let ends = t.ends_at(v);
    let mut rays: Vec<IntVec2> = t
        .rays
        .iter()
        .filter(|&&(w, _)| w == v)
        .map(|&(_, d)| d)
        .collect();
    rays.sort();
    let aways_s: Vec<String> = aways.iter().map(|u| u.to_string()).collect();
    let rays_s: Vec<String> = rays.iter().map(|u| u.to_string()).collect();
    format!(
        "{}:{}:e{:?}:r[{}]:a[{}]",
        t.vertices[v].face,
        t.vertices[v].base_degree,
        ends,
        rays_s.join(""),
        aways_s.join("")
    )
}

/// Stable partition refinement: a vertex's color absorbs the multiset of
/// (away-derivative, neighbor color) over its incident edges until the
/// partition stops changing.
fn refine(t: &CombinatorialType, mut colors: Vec<usize>) -> Vec<usize> {
    let n = t.n_vertices();
    loop {
        let mut sigs: Vec<(usize, Vec<(IntVec2, usize)>)> =
            colors.iter().map(|&c| (c, Vec::new())).collect();
        for e in &t.edges {
            if e.tail == e.head {
                sigs[e.tail].1.push((e.derivative, colors[e.tail]));
                sigs[e.tail].1.push((-e.derivative, colors[e.tail]));
            } else {
                sigs[e.tail].1.push((e.derivative, colors[e.head]));
                sigs[e.head].1.push((-e.derivative, colors[e.tail]));
            }
        }
        for s in sigs.iter_mut() {
            s.1.sort();
        }
        let mut palette: BTreeMap<&(usize, Vec<(IntVec2, usize)>), usize> = BTreeMap::new();
        for s in &sigs {
            let next = palette.len();
            palette.entry(s).or_insert(next);
        }
        let new_colors: Vec<usize> = sigs.iter().map(|s| palette[s]).collect();
        if new_colors == colors {
            return colors;
        }
        if palette.len() == n {
            return new_colors;
        }
        colors = new_colors;
    }
}

fn initial_colors(t: &CombinatorialType) -> Vec<usize> {
    let keys: Vec<String> = (0..t.n_vertices()).map(|v| local_key(t, v)).collect();
    let mut palette: BTreeMap<&String, usize> = BTreeMap::new();
    for k in &keys {
        let next = palette.len();
        palette.entry(k).or_insert(next);
    }
    keys.iter().map(|k| palette[k]).collect()
}

/// Multiset of edge derivatives between an ordered vertex pair, oriented
/// low-index → high-index. Loops are kept separately.
fn pair_classes(t: &CombinatorialType) -> BTreeMap<(usize, usize), BTreeMap<IntVec2, usize>> {
    let mut m: BTreeMap<(usize, usize), BTreeMap<IntVec2, usize>> = BTreeMap::new();
    for e in &t.edges {
        if e.tail == e.head {
            continue;
        }
        let (a, b, d) = if e.tail < e.head {
            (e.tail, e.head, e.derivative)
        } else {
            (e.head, e.tail, -e.derivative)
        };
        *m.entry((a, b)).or_default().entry(d).or_insert(0) += 1;
    }
    m
}

/// Loops at each vertex keyed by the lexicographically larger of ±u.
fn loop_classes(t: &CombinatorialType) -> BTreeMap<usize, BTreeMap<IntVec2, usize>> {
    let mut m: BTreeMap<usize, BTreeMap<IntVec2, usize>> = BTreeMap::new();
    for e in &t.edges {
        if e.tail == e.head {
            let c = std::cmp::max(e.derivative, -e.derivative);
            *m.entry(e.tail).or_default().entry(c).or_insert(0) += 1;
        }
    }
    m
}

fn negate_class(c: &BTreeMap<IntVec2, usize>) -> BTreeMap<IntVec2, usize> {
    c.iter().map(|(&d, &k)| (-d, k)).collect()
}

fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

/// Order of the automorphism group fixing every labeled end.
///
/// Counts vertex bijections by backtracking over refinement classes, then
/// multiplies by the number of ways to permute indistinguishable parallel
/// edges, loops, and same-direction rays, which is independent of the
/// chosen vertex map.
pub fn aut_order(t: &CombinatorialType) -> u64 {
    let n = t.n_vertices();
    let colors = refine(t, initial_colors(t));
    let pairs = pair_classes(t);
    let loops = loop_classes(t);

    // candidate targets per vertex share the refined color
    let mut sigma = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let count = count_maps(t, &colors, &pairs, &loops, &mut sigma, &mut used, 0);

    let mut factor: u64 = 1;
    for classes in pairs.values() {
        for &k in classes.values() {
            factor *= factorial(k);
        }
    }
    for classes in loops.values() {
        for (&d, &k) in classes {
            factor *= factorial(k);
            if d.is_zero() {
                // a zero-derivative loop can also be reversed onto itself
                factor *= 1u64 << k;
            }
        }
    }
    let mut ray_counts: BTreeMap<(usize, IntVec2), usize> = BTreeMap::new();
    for &(v, d) in &t.rays {
        *ray_counts.entry((v, d)).or_insert(0) += 1;
    }
    for &k in ray_counts.values() {
        factor *= factorial(k);
    }
    count * factor
}

fn count_maps(
    t: &CombinatorialType,
    colors: &[usize],
    pairs: &BTreeMap<(usize, usize), BTreeMap<IntVec2, usize>>,
    loops: &BTreeMap<usize, BTreeMap<IntVec2, usize>>,
    sigma: &mut Vec<usize>,
    used: &mut Vec<bool>,
    v: usize,
) -> u64 {
    let n = t.n_vertices();
    if v == n {
        return 1;
    }
    let mut total = 0;
    'cand: for w in 0..n {
        if used[w] || colors[w] != colors[v] {
            continue;
        }
        // loops at v must match loops at w
        if loops.get(&v) != loops.get(&w) {
            continue;
        }
        // edges toward already-mapped vertices must match class-for-class
        for prev in 0..v {
            let (a, b, swap_src) = if prev < v { (prev, v, false) } else { (v, prev, true) };
            let src = pairs.get(&(a, b));
            let (x, y) = (sigma[prev], w);
            let (ta, tb, swap_tgt) = if x < y { (x, y, false) } else { (y, x, true) };
            let tgt = pairs.get(&(ta, tb));
            let matches = match (src, tgt) {
                (None, None) => true,
                (Some(s), Some(tg)) => {
                    if swap_src == swap_tgt {
                        s == tg
                    } else {
                        negate_class(s) == *tg
                    }
                }
                _ => false,
            };
            if !matches {
                continue 'cand;
            }
        }
        sigma[v] = w;
        used[w] = true;
        total += count_maps(t, colors, pairs, loops, sigma, used, v + 1);
        used[w] = false;
        sigma[v] = usize::MAX;
    }
    total
}

/// Canonical byte string: equal strings iff the types are isomorphic
/// preserving end labels, faces and derivatives (up to simultaneous edge
/// reversal and negation). Deterministic in the input ordering.
///
/// Trees (the common case: every genus-0 curve) take the fast AHU path;
/// multigraphs, loops and disconnected types go through the general
/// labeling search.
pub fn canonical_form(t: &CombinatorialType) -> String {
    if is_simple_tree(t) {
        format!("T|{}", ahu(t))
    } else {
        format!("G|{}", general_canon(t))
    }
}

fn is_simple_tree(t: &CombinatorialType) -> bool {
    let n = t.n_vertices();
    if t.edges.len() + 1 != n {
        return false;
    }
    let mut seen: BTreeMap<(usize, usize), ()> = BTreeMap::new();
    for e in &t.edges {
        if e.tail == e.head {
            return false;
        }
        let k = (e.tail.min(e.head), e.tail.max(e.head));
        if seen.insert(k, ()).is_some() {
            return false;
        }
    }
    t.is_connected()
}

/// Canonical encoding of a tree, rooted at its center (or the better of
/// the two central vertices).
fn ahu(t: &CombinatorialType) -> String {
    let n = t.n_vertices();
    if n == 1 {
        return format!("({}|)", local_key(t, 0));
    }
    let mut adj: Vec<Vec<(usize, IntVec2)>> = vec![Vec::new(); n];
    for e in &t.edges {
        adj[e.tail].push((e.head, e.derivative));
        adj[e.head].push((e.tail, -e.derivative));
    }
    let centers = tree_centers(&adj);
    centers
        .into_iter()
        .map(|c| ahu_rooted(t, &adj, c, usize::MAX))
        .min()
        .unwrap()
}

fn tree_centers(adj: &[Vec<(usize, IntVec2)>]) -> Vec<usize> {
    let n = adj.len();
    let mut degree: Vec<usize> = adj.iter().map(|a| a.len()).collect();
    let mut removed = vec![false; n];
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            remaining -= 1;
            for &(w, _) in &adj[v] {
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

fn ahu_rooted(
    t: &CombinatorialType,
    adj: &[Vec<(usize, IntVec2)>],
    v: usize,
    parent: usize,
) -> String {
    let mut subs: Vec<String> = adj[v]
        .iter()
        .filter(|&&(w, _)| w != parent)
        .map(|&(w, d)| format!("{}>{}", d, ahu_rooted(t, adj, w, v)))
        .collect();
    subs.sort();
    format!("({}|{})", local_key(t, v), subs.join(","))
}

/// Canonical labeling by individualization-refinement with a minimal
/// adjacency encoding. Used only off the tree fast path (multigraphs,
/// loops, positive genus) — inputs there are small.
fn general_canon(t: &CombinatorialType) -> String {
    let colors = refine(t, initial_colors(t));
    let mut best: Option<String> = None;
    search_canon(t, colors, &mut best);
    best.unwrap()
}

fn search_canon(t: &CombinatorialType, colors: Vec<usize>, best: &mut Option<String>) {
    let n = t.n_vertices();
    let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        cells.entry(colors[v]).or_default().push(v);
    }
    let target = cells.values().find(|c| c.len() > 1).cloned();
    match target {
        None => {
            let enc = encode_ordering(t, &colors);
            if best.as_ref().map_or(true, |b| enc < *b) {
                *best = Some(enc);
            }
        }
        Some(cell) => {
            for &v in &cell {
                let mut ind: Vec<(usize, usize)> =
                    colors.iter().map(|&c| (2 * c + 1, 0)).collect();
                ind[v] = (2 * colors[v], 0);
                let mut palette: BTreeMap<(usize, usize), usize> = BTreeMap::new();
                for s in &ind {
                    let next = palette.len();
                    palette.entry(*s).or_insert(next);
                }
                let new_colors: Vec<usize> = ind.iter().map(|s| palette[s]).collect();
                search_canon(t, refine(t, new_colors), best);
            }
        }
    }
}

fn encode_ordering(t: &CombinatorialType, colors: &[usize]) -> String {
    let n = t.n_vertices();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| colors[v]);
    let mut rank = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    let verts: Vec<String> = order.iter().map(|&v| local_key(t, v)).collect();
    let mut edges: Vec<(usize, usize, IntVec2)> = t
        .edges
        .iter()
        .map(|e| {
            let (i, j) = (rank[e.tail], rank[e.head]);
            if i < j {
                (i, j, e.derivative)
            } else if i > j {
                (j, i, -e.derivative)
            } else {
                (i, i, std::cmp::max(e.derivative, -e.derivative))
            }
        })
        .collect();
    edges.sort();
    let edges_s: Vec<String> = edges
        .iter()
        .map(|(i, j, d)| format!("{i}-{j}{d}"))
        .collect();
    format!("{};{}", verts.join(","), edges_s.join(","))
}

#[cfg(test)]
mod tests {
    use super::super::{EdgeData, VertexData};
    use super::*;
    use crate::complex::Face;

    fn pictured() -> CombinatorialType {
        CombinatorialType {
            vertices: vec![
                VertexData::on(Face::C1),
                VertexData::on(Face::C2),
                VertexData::interior(),
                VertexData::on(Face::C3),
            ],
            edges: vec![
                EdgeData {
                    tail: 0,
                    head: 2,
                    derivative: IntVec2::new(1, 1),
                },
                EdgeData {
                    tail: 1,
                    head: 2,
                    derivative: IntVec2::new(-2, 1),
                },
                EdgeData {
                    tail: 2,
                    head: 3,
                    derivative: IntVec2::new(-1, 2),
                },
            ],
            ends: vec![0, 0, 0, 1, 1, 1, 3, 3],
            rays: vec![],
        }
    }

    /// Independent brute force over all vertex bijections, used as the
    /// oracle for `aut_order` on small types.
    fn aut_brute(t: &CombinatorialType) -> u64 {
        let n = t.n_vertices();
        let pairs = pair_classes(t);
        let loops = loop_classes(t);
        let mut perm: Vec<usize> = (0..n).collect();
        let mut count = 0u64;
        permute(&mut perm, 0, &mut |p| {
            if valid(t, &pairs, &loops, p) {
                count += 1;
            }
        });
        let mut factor = 1u64;
        for classes in pairs.values() {
            for &k in classes.values() {
                factor *= factorial(k);
            }
        }
        for classes in loops.values() {
            for (&d, &k) in classes {
                factor *= factorial(k);
                if d.is_zero() {
                    factor *= 1 << k;
                }
            }
        }
        let mut ray_counts: BTreeMap<(usize, IntVec2), usize> = BTreeMap::new();
        for &(v, d) in &t.rays {
            *ray_counts.entry((v, d)).or_insert(0) += 1;
        }
        for &k in ray_counts.values() {
            factor *= factorial(k);
        }
        count * factor
    }

    fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permute(p, k + 1, f);
            p.swap(k, i);
        }
    }

    fn valid(
        t: &CombinatorialType,
        pairs: &BTreeMap<(usize, usize), BTreeMap<IntVec2, usize>>,
        loops: &BTreeMap<usize, BTreeMap<IntVec2, usize>>,
        sigma: &[usize],
    ) -> bool {
        let n = t.n_vertices();
        for v in 0..n {
            let w = sigma[v];
            if t.vertices[v] != t.vertices[w] {
                return false;
            }
            if t.ends_at(v) != t.ends_at(w) {
                return false;
            }
            let mut rv: Vec<IntVec2> = t
                .rays
                .iter()
                .filter(|&&(x, _)| x == v)
                .map(|&(_, d)| d)
                .collect();
            let mut rw: Vec<IntVec2> = t
                .rays
                .iter()
                .filter(|&&(x, _)| x == w)
                .map(|&(_, d)| d)
                .collect();
            rv.sort();
            rw.sort();
            if rv != rw {
                return false;
            }
            if loops.get(&v) != loops.get(&w) {
                return false;
            }
        }
        for a in 0..n {
            for b in (a + 1)..n {
                let src = pairs.get(&(a, b));
                let (x, y) = (sigma[a], sigma[b]);
                let (ta, tb, flipped) = if x < y { (x, y, false) } else { (y, x, true) };
                let tgt = pairs.get(&(ta, tb));
                let ok = match (src, tgt) {
                    (None, None) => true,
                    (Some(s), Some(tg)) => {
                        if flipped {
                            negate_class(s) == *tg
                        } else {
                            s == tg
                        }
                    }
                    _ => false,
                };
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn distinguishable_vertices_give_trivial_group() {
        let t = pictured();
        assert_eq!(aut_order(&t), 1);
        assert_eq!(aut_brute(&t), 1);
    }

    #[test]
    fn parallel_edges_swap() {
        let t = CombinatorialType {
            vertices: vec![VertexData::interior(), VertexData::interior()],
            edges: vec![
                EdgeData {
                    tail: 0,
                    head: 1,
                    derivative: IntVec2::new(1, 0),
                },
                EdgeData {
                    tail: 0,
                    head: 1,
                    derivative: IntVec2::new(1, 0),
                },
            ],
            ends: vec![],
            rays: vec![],
        };
        assert_eq!(aut_order(&t), aut_brute(&t));
        // the two vertices are distinguishable by derivative sign, so only
        // the edge swap contributes
        assert_eq!(aut_order(&t), 2);
    }

    #[test]
    fn symmetric_fork_doubles() {
        // center with two identical dangling vertices: swapping them is an
        // automorphism
        let t = CombinatorialType {
            vertices: vec![
                VertexData::on(Face::C1),
                VertexData::on(Face::C2),
                VertexData::on(Face::C2),
            ],
            edges: vec![
                EdgeData {
                    tail: 0,
                    head: 1,
                    derivative: IntVec2::new(1, 0),
                },
                EdgeData {
                    tail: 0,
                    head: 2,
                    derivative: IntVec2::new(1, 0),
                },
            ],
            ends: vec![0],
            rays: vec![],
        };
        assert_eq!(aut_order(&t), 2);
        assert_eq!(aut_brute(&t), 2);
    }

    #[test]
    fn aut_divides_vertex_factorial() {
        let t = pictured();
        let n_fact = factorial(t.n_vertices());
        assert_eq!(n_fact % aut_order(&t), 0);
    }

    #[test]
    fn canonical_is_permutation_invariant() {
        let t = pictured();
        let perm = [2usize, 0, 3, 1];
        let mut inv = [0usize; 4];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let permuted = CombinatorialType {
            vertices: perm.iter().map(|&p| t.vertices[p]).collect(),
            edges: t
                .edges
                .iter()
                .map(|e| EdgeData {
                    tail: inv[e.tail],
                    head: inv[e.head],
                    derivative: e.derivative,
                })
                .collect(),
            ends: t.ends.iter().map(|&v| inv[v]).collect(),
            rays: vec![],
        };
        assert_eq!(canonical_form(&t), canonical_form(&permuted));
    }

    #[test]
    fn canonical_ignores_stored_orientation() {
        let t = pictured();
        let mut flipped = t.clone();
        let e = &mut flipped.edges[1];
        std::mem::swap(&mut e.tail, &mut e.head);
        e.derivative = -e.derivative;
        assert_eq!(canonical_form(&t), canonical_form(&flipped));
    }

    #[test]
    fn canonical_separates_different_derivatives() {
        let t = pictured();
        let mut other = t.clone();
        other.edges[0].derivative = IntVec2::new(2, 1);
        assert_ne!(canonical_form(&t), canonical_form(&other));
    }

    #[test]
    fn canonical_handles_multigraphs() {
        let double = |d0: IntVec2, d1: IntVec2| CombinatorialType {
            vertices: vec![VertexData::interior(), VertexData::interior()],
            edges: vec![
                EdgeData {
                    tail: 0,
                    head: 1,
                    derivative: d0,
                },
                EdgeData {
                    tail: 1,
                    head: 0,
                    derivative: d1,
                },
            ],
            ends: vec![],
            rays: vec![],
        };
        // same pair of parallel edges written with opposite orientations
        let a = double(IntVec2::new(1, 2), IntVec2::new(-1, -2));
        let b = double(IntVec2::new(1, 2), IntVec2::new(1, 2));
        // b's second edge is (1,2) oriented 1→0, i.e. (−1,−2) oriented 0→1:
        // these are genuinely different multisets
        assert_ne!(canonical_form(&a), canonical_form(&b));
        let c = CombinatorialType {
            vertices: vec![VertexData::interior(), VertexData::interior()],
            edges: vec![
                EdgeData {
                    tail: 0,
                    head: 1,
                    derivative: IntVec2::new(1, 2),
                },
                EdgeData {
                    tail: 0,
                    head: 1,
                    derivative: IntVec2::new(1, 2),
                },
            ],
            ends: vec![],
            rays: vec![],
        };
        assert_eq!(canonical_form(&a), canonical_form(&c));
    }
}
