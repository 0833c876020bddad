//! Exhaustive generation of unlabelled trees.

use std::collections::BTreeMap;

use super::{SimplicialGraph, VertexId};

/// Canonical string of a tree: the parenthesised rooted encoding at its
/// center (the smaller one if the tree is bicentral). Two trees get the same
/// code iff they are isomorphic.
pub fn canonical_tree_code(t: &SimplicialGraph) -> String {
    centers(t)
        .into_iter()
        .map(|c| rooted_code(t, c, usize::MAX))
        .min()
        .unwrap_or_default()
}

fn rooted_code(t: &SimplicialGraph, v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = t
        .neighbors(v)
        .iter()
        .filter(|&&u| u != parent)
        .map(|&u| rooted_code(t, u, v))
        .collect();
    kids.sort_unstable();
    let mut s = String::with_capacity(2 + kids.iter().map(String::len).sum::<usize>());
    s.push('(');
    kids.iter().for_each(|k| s.push_str(k));
    s.push(')');
    s
}

/// Leaf-stripping centers.
fn centers(t: &SimplicialGraph) -> Vec<usize> {
    let n = t.vertex_count();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &u in t.neighbors(leaf) {
                deg[u] -= 1;
                if deg[u] == 1 {
                    next.push(u);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn tree_from_edges(n: usize, edges: Vec<(usize, usize)>) -> SimplicialGraph {
    let labels = (1..=n).map(|i| VertexId(format!("v{i}"))).collect();
    SimplicialGraph::new(labels, edges).expect("generated tree is simple")
}

/// All trees on exactly `n` vertices up to isomorphism, sorted by canonical code.
/// Vertices are labelled `v1..vn`.
pub fn trees_with_vertices(n: usize) -> Vec<SimplicialGraph> {
    if n == 0 {
        return Vec::new();
    }
    let mut current: BTreeMap<String, SimplicialGraph> = BTreeMap::new();
    let single = tree_from_edges(1, Vec::new());
    current.insert(canonical_tree_code(&single), single);
    for size in 2..=n {
        let mut next = BTreeMap::new();
        for t in current.values() {
            for attach in 0..t.vertex_count() {
                let mut edges = t.edges();
                edges.push((attach, size - 1));
                let grown = tree_from_edges(size, edges);
                next.entry(canonical_tree_code(&grown)).or_insert(grown);
            }
        }
        current = next;
    }
    current.into_values().collect()
}

/// All trees with between 1 and `max_n` vertices up to isomorphism.
pub fn trees_up_to(max_n: usize) -> Vec<SimplicialGraph> {
    (1..=max_n).flat_map(trees_with_vertices).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    /// Independent route: decode every Prüfer sequence and dedupe by code.
    fn prufer_classes(n: usize) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        if n <= 2 {
            let t = tree_from_edges(n, if n == 2 { vec![(0, 1)] } else { vec![] });
            out.insert(canonical_tree_code(&t));
            return out;
        }
        let len = n - 2;
        let mut seq = vec![0usize; len];
        loop {
            let mut degree = vec![1usize; n];
            seq.iter().for_each(|&s| degree[s] += 1);
            let mut edges = Vec::new();
            for &s in &seq {
                let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
                edges.push((leaf, s));
                degree[leaf] -= 1;
                degree[s] -= 1;
            }
            let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
            edges.push((rest[0], rest[1]));
            out.insert(canonical_tree_code(&tree_from_edges(n, edges)));
            // odometer
            let mut i = 0;
            while i < len {
                seq[i] += 1;
                if seq[i] < n {
                    break;
                }
                seq[i] = 0;
                i += 1;
            }
            if i == len {
                break;
            }
        }
        out
    }

    #[test]
    fn known_counts() {
        let counts: Vec<usize> = (1..=9).map(|n| trees_with_vertices(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47]);
    }

    #[test]
    fn agrees_with_prufer_enumeration() {
        for n in 1..=8 {
            let generated: BTreeSet<String> =
                trees_with_vertices(n).iter().map(canonical_tree_code).collect();
            assert_eq!(generated, prufer_classes(n), "n = {n}");
        }
    }

    #[test]
    fn generated_graphs_are_trees() {
        assert!(trees_up_to(9).iter().all(SimplicialGraph::is_tree));
    }

    #[test]
    fn code_is_label_invariant() {
        let t2 = SimplicialGraph::t2();
        let tripod = SimplicialGraph::tripod(2, 2, 2).unwrap();
        assert_eq!(canonical_tree_code(&t2), canonical_tree_code(&tripod));
        let p7 = SimplicialGraph::path(7).unwrap();
        assert_ne!(canonical_tree_code(&t2), canonical_tree_code(&p7));
    }
}
