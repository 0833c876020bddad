use super::SimplicialGraph;

/// All injective maps `pattern -> host` preserving adjacency and
/// non-adjacency, up to `max_results`.
///
/// Each map is indexed by pattern vertex. Pattern vertices are placed in
/// descending-degree order and host vertices are tried in canonical order,
/// so the result order is deterministic.
pub fn find_induced_embeddings(
    pattern: &SimplicialGraph,
    host: &SimplicialGraph,
    max_results: usize,
) -> Vec<Vec<usize>> {
    let k = pattern.vertex_count();
    let mut out = Vec::new();
    if max_results == 0 || k > host.vertex_count() {
        return out;
    }
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(pattern.degree(v)));

    let mut map = vec![usize::MAX; k];
    let mut used = vec![false; host.vertex_count()];
    extend(pattern, host, &order, 0, &mut map, &mut used, max_results, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn extend(
    pattern: &SimplicialGraph,
    host: &SimplicialGraph,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
    max_results: usize,
    out: &mut Vec<Vec<usize>>,
) {
    if depth == order.len() {
        out.push(map.to_vec());
        return;
    }
    let v = order[depth];
    for t in 0..host.vertex_count() {
        if used[t] || host.degree(t) < pattern.degree(v) {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| pattern.adjacent(u, v) == host.adjacent(map[u], t));
        if !consistent {
            continue;
        }
        map[v] = t;
        used[t] = true;
        extend(pattern, host, order, depth + 1, map, used, max_results, out);
        used[t] = false;
        map[v] = usize::MAX;
        if out.len() >= max_results {
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Every injection, filtered by the induced condition.
    fn brute_force(pattern: &SimplicialGraph, host: &SimplicialGraph) -> Vec<Vec<usize>> {
        fn go(k: usize, n: usize, cur: &mut Vec<usize>, all: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                all.push(cur.clone());
                return;
            }
            for t in 0..n {
                if !cur.contains(&t) {
                    cur.push(t);
                    go(k, n, cur, all);
                    cur.pop();
                }
            }
        }
        let mut all = Vec::new();
        go(pattern.vertex_count(), host.vertex_count(), &mut Vec::new(), &mut all);
        all.retain(|m| host.is_induced_embedding(pattern, m));
        all
    }

    #[test]
    fn edge_into_p3() {
        let p2 = SimplicialGraph::path(2).unwrap();
        let p3 = SimplicialGraph::path(3).unwrap();
        let found = find_induced_embeddings(&p2, &p3, usize::MAX);
        assert_eq!(found.len(), 4);
        assert_eq!(brute_force(&p2, &p3).len(), 4);
    }

    #[test]
    fn p3_into_triangle_is_empty() {
        let p3 = SimplicialGraph::path(3).unwrap();
        let c3 = SimplicialGraph::cycle(3).unwrap();
        assert!(brute_force(&p3, &c3).is_empty());
        assert!(find_induced_embeddings(&p3, &c3, usize::MAX).is_empty());
    }

    #[test]
    fn tripod_into_long_path_is_empty() {
        let t2 = SimplicialGraph::t2();
        let p22 = SimplicialGraph::path(22).unwrap();
        assert!(find_induced_embeddings(&t2, &p22, 1).is_empty());
    }

    #[test]
    fn agrees_with_brute_force() {
        let hosts = [
            SimplicialGraph::cycle(6).unwrap(),
            SimplicialGraph::t2(),
            SimplicialGraph::path(6).unwrap(),
            SimplicialGraph::tripod(1, 2, 3).unwrap(),
        ];
        let patterns = [
            SimplicialGraph::path(3).unwrap(),
            SimplicialGraph::path(4).unwrap(),
            SimplicialGraph::tripod(1, 1, 1).unwrap(),
            SimplicialGraph::path(1).unwrap().complement(),
            SimplicialGraph::path(3).unwrap().complement(),
        ];
        for h in &hosts {
            for p in &patterns {
                let mut fast = find_induced_embeddings(p, h, usize::MAX);
                let mut slow = brute_force(p, h);
                fast.sort();
                slow.sort();
                assert_eq!(fast, slow);
                assert!(fast.iter().all(|m| h.is_induced_embedding(p, m)));
            }
        }
    }

    #[test]
    fn respects_max_results() {
        let p2 = SimplicialGraph::path(2).unwrap();
        let c12 = SimplicialGraph::cycle(12).unwrap();
        assert_eq!(find_induced_embeddings(&p2, &c12, 5).len(), 5);
        assert_eq!(find_induced_embeddings(&p2, &c12, 0).len(), 0);
    }
}
