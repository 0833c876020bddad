use serde_json::json;

use super::SimplicialGraph;
use crate::error::{invalid, Result};

/// A tree written as an induced path (the spine) with leaves hanging off its
/// interior vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HairyDecomposition {
    /// Spine vertices `v1..vm` in path order.
    pub spine: Vec<usize>,
    /// `hairs[i]` are the leaves attached to `spine[i]`, in canonical order.
    /// Always empty for the two endpoints.
    pub hairs: Vec<Vec<usize>>,
}

impl HairyDecomposition {
    /// Spine length `m`.
    pub fn m(&self) -> usize {
        self.spine.len()
    }

    /// `k_i` for every spine position.
    pub fn hair_counts(&self) -> Vec<usize> {
        self.hairs.iter().map(Vec::len).collect()
    }

    /// `k = k_2 + ... + k_{m-1}`.
    pub fn total_hairs(&self) -> usize {
        self.hairs.iter().map(Vec::len).sum()
    }

    /// Checks the structural invariants against `g`.
    pub fn is_valid_for(&self, g: &SimplicialGraph) -> bool {
        let m = self.m();
        if m == 0 || self.hairs.len() != m {
            return false;
        }
        if !self.spine.windows(2).all(|w| g.adjacent(w[0], w[1])) {
            return false;
        }
        let spine_is_induced = (0..m).all(|i| (i + 2..m).all(|j| !g.adjacent(self.spine[i], self.spine[j])));
        if !spine_is_induced || !self.hairs[0].is_empty() || !self.hairs[m - 1].is_empty() {
            return false;
        }
        let mut seen = vec![0u8; g.vertex_count()];
        for &v in &self.spine {
            seen[v] += 1;
        }
        for (i, hs) in self.hairs.iter().enumerate() {
            for &h in hs {
                seen[h] += 1;
                if g.degree(h) != 1 || !g.adjacent(h, self.spine[i]) {
                    return false;
                }
            }
        }
        seen.iter().all(|&c| c == 1)
    }

    pub fn to_json(&self, g: &SimplicialGraph) -> serde_json::Value {
        let spine: Vec<&str> = self.spine.iter().map(|&v| g.label(v).as_str()).collect();
        let hairs: serde_json::Map<String, serde_json::Value> = self
            .spine
            .iter()
            .zip(&self.hairs)
            .filter(|(_, hs)| !hs.is_empty())
            .map(|(&v, hs)| {
                let labels: Vec<&str> = hs.iter().map(|&h| g.label(h).as_str()).collect();
                (g.label(v).to_string(), json!(labels))
            })
            .collect();
        json!({ "spine": spine, "m": self.m(), "hairs": hairs, "k": self.hair_counts() })
    }
}

impl SimplicialGraph {
    /// A longest path, found by a double breadth-first sweep from vertex 0.
    /// Ties go to the smallest vertex; the path is oriented so that its first
    /// vertex precedes its last in canonical order. Only meaningful for trees.
    pub(crate) fn tree_diameter_path(&self) -> Vec<usize> {
        let farthest = |dist: &[usize]| {
            let best = dist.iter().copied().filter(|&d| d != usize::MAX).max().unwrap_or(0);
            dist.iter().position(|&d| d == best).unwrap_or(0)
        };
        let one_end = farthest(&self.distances_from(0));
        let dist = self.distances_from(one_end);
        let other_end = farthest(&dist);
        // walk back from other_end along strictly decreasing distance
        let mut path = vec![other_end];
        let mut cur = other_end;
        while dist[cur] > 0 {
            cur = *self
                .neighbors(cur)
                .iter()
                .find(|&&u| dist[u] + 1 == dist[cur])
                .expect("bfs predecessor exists");
            path.push(cur);
        }
        if path[0] > path[path.len() - 1] {
            path.reverse();
        }
        path
    }

    /// Decomposes a tree as a hairy path graph, or returns `None` when it is
    /// not one (equivalently, when it contains an induced `T_{2,2,2}`).
    pub fn hairy_path(&self) -> Result<Option<HairyDecomposition>> {
        if !self.is_tree() {
            return Err(invalid("hairy path decomposition needs a tree"));
        }
        let spine = self.tree_diameter_path();
        let m = spine.len();
        let mut pos = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in spine.iter().enumerate() {
            pos[v] = i;
        }
        let mut hairs = vec![Vec::new(); m];
        for v in 0..self.vertex_count() {
            if pos[v] != usize::MAX {
                continue;
            }
            let anchor = self.neighbors(v).iter().find(|&&u| pos[u] != usize::MAX);
            match anchor {
                Some(&u) if self.degree(v) == 1 && pos[u] > 0 && pos[u] + 1 < m => hairs[pos[u]].push(v),
                _ => return Ok(None),
            }
        }
        Ok(Some(HairyDecomposition { spine, hairs }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t2_is_not_hairy() {
        assert_eq!(SimplicialGraph::t2().hairy_path().unwrap(), None);
    }

    #[test]
    fn paths_are_hairless() {
        for n in 1..8 {
            let p = SimplicialGraph::path(n).unwrap();
            let d = p.hairy_path().unwrap().unwrap();
            assert_eq!(d.spine, (0..n).collect::<Vec<_>>());
            assert_eq!(d.total_hairs(), 0);
            assert!(d.is_valid_for(&p));
        }
    }

    #[test]
    fn two_hair_example() {
        let t = SimplicialGraph::from_labels(
            &["b", "x", "y", "c", "h", "h1", "h2"],
            &[("b", "x"), ("x", "y"), ("y", "c"), ("x", "h"), ("y", "h1"), ("y", "h2")],
        )
        .unwrap();
        let d = t.hairy_path().unwrap().unwrap();
        assert_eq!(d.spine, vec![0, 1, 2, 3]);
        assert_eq!(d.hair_counts(), vec![0, 1, 2, 0]);
        assert!(d.is_valid_for(&t));
    }

    #[test]
    fn non_trees_are_rejected() {
        assert!(SimplicialGraph::cycle(4).unwrap().hairy_path().is_err());
        let forest = SimplicialGraph::from_labels(&["a", "b", "c"], &[("a", "b")]).unwrap();
        assert!(forest.hairy_path().is_err());
    }
}
