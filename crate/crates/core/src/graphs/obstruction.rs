use serde_json::json;

use super::SimplicialGraph;

/// Seven distinct vertices in the tripod obstruction pattern:
/// `{x, p, q, r}` independent; `a` adjacent to `x` and `p` but not to `q`, `r`;
/// `b` adjacent to `x` and `q` but not to `p`, `r`; `c` adjacent to `x` and `r`
/// but not to `p`, `q`. Adjacency among `a`, `b`, `c` is unconstrained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TripodObstruction {
    pub x: usize,
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl TripodObstruction {
    pub const ROLES: [&'static str; 7] = ["x", "p", "q", "r", "a", "b", "c"];

    pub fn vertices(&self) -> [usize; 7] {
        [self.x, self.p, self.q, self.r, self.a, self.b, self.c]
    }

    /// Rechecks the pattern in `g`.
    pub fn holds_in(&self, g: &SimplicialGraph) -> bool {
        let vs = self.vertices();
        if vs.iter().any(|&v| v >= g.vertex_count()) {
            return false;
        }
        let distinct = (0..7).all(|i| (i + 1..7).all(|j| vs[i] != vs[j]));
        let adj = |u, v| g.adjacent(u, v);
        distinct
            && g.is_independent(&[self.x, self.p, self.q, self.r])
            && adj(self.a, self.x) && adj(self.a, self.p) && !adj(self.a, self.q) && !adj(self.a, self.r)
            && adj(self.b, self.x) && adj(self.b, self.q) && !adj(self.b, self.p) && !adj(self.b, self.r)
            && adj(self.c, self.x) && adj(self.c, self.r) && !adj(self.c, self.p) && !adj(self.c, self.q)
    }

    pub fn to_json(&self, g: &SimplicialGraph) -> serde_json::Value {
        let l = |v: usize| g.label(v).as_str().to_owned();
        json!({
            "x": l(self.x), "p": l(self.p), "q": l(self.q), "r": l(self.r),
            "a": l(self.a), "b": l(self.b), "c": l(self.c),
        })
    }

    pub fn from_json(g: &SimplicialGraph, value: &serde_json::Value) -> crate::Result<Self> {
        let get = |role: &str| -> crate::Result<usize> {
            let label = value
                .get(role)
                .and_then(|v| v.as_str())
                .ok_or_else(|| crate::error::invalid(format!("certificate lacks role {role}")))?;
            g.vertex(label)
        };
        Ok(TripodObstruction {
            x: get("x")?,
            p: get("p")?,
            q: get("q")?,
            r: get("r")?,
            a: get("a")?,
            b: get("b")?,
            c: get("c")?,
        })
    }
}

impl SimplicialGraph {
    /// First instance of the tripod obstruction pattern, searching `x`, then
    /// `a, p`, then `b, q`, then `c, r` in canonical order.
    pub fn find_tripod_obstruction(&self) -> Option<TripodObstruction> {
        let n = self.vertex_count();
        let adj = |u: usize, v: usize| self.adjacent(u, v);
        for x in 0..n {
            let nx = self.neighbors(x);
            for &a in nx {
                for &p in self.neighbors(a) {
                    if p == x || adj(p, x) {
                        continue;
                    }
                    for &b in nx {
                        if b == a || adj(b, p) {
                            continue;
                        }
                        for &q in self.neighbors(b) {
                            if q == x || q == p || adj(q, x) || adj(q, p) || adj(q, a) {
                                continue;
                            }
                            for &c in nx {
                                if c == a || c == b || adj(c, p) || adj(c, q) {
                                    continue;
                                }
                                for &r in self.neighbors(c) {
                                    if r == x || r == p || r == q || adj(r, x) || adj(r, p) || adj(r, q) || adj(r, a) || adj(r, b) {
                                        continue;
                                    }
                                    return Some(TripodObstruction { x, p, q, r, a, b, c });
                                }
                            }
                        }
                    }
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn variant(extra: &[(&str, &str)]) -> SimplicialGraph {
        let mut edges = vec![("x", "a"), ("x", "b"), ("x", "c"), ("a", "p"), ("b", "q"), ("c", "r")];
        edges.extend_from_slice(extra);
        SimplicialGraph::from_labels(&["x", "a", "b", "c", "p", "q", "r"], &edges).unwrap()
    }

    /// Exhaustive search over all ordered 7-tuples.
    fn brute_force_exists(g: &SimplicialGraph) -> bool {
        let n = g.vertex_count();
        let mut t = [0usize; 7];
        fn go(g: &SimplicialGraph, depth: usize, n: usize, t: &mut [usize; 7]) -> bool {
            if depth == 7 {
                let [x, p, q, r, a, b, c] = *t;
                return TripodObstruction { x, p, q, r, a, b, c }.holds_in(g);
            }
            for v in 0..n {
                if t[..depth].contains(&v) {
                    continue;
                }
                t[depth] = v;
                if go(g, depth + 1, n, t) {
                    return true;
                }
            }
            false
        }
        go(g, 0, n, &mut t)
    }

    #[test]
    fn t2_has_the_figure_labelling() {
        let g = SimplicialGraph::t2();
        let cert = g.find_tripod_obstruction().unwrap();
        assert!(cert.holds_in(&g));
        let labels: Vec<&str> = cert.vertices().iter().map(|&v| g.label(v).as_str()).collect();
        assert_eq!(labels, TripodObstruction::ROLES);
    }

    #[test]
    fn variants_with_extra_edges_among_abc() {
        for extra in [
            vec![("b", "c")],
            vec![("a", "b"), ("b", "c")],
            vec![("a", "b"), ("b", "c"), ("c", "a")],
        ] {
            let g = variant(&extra);
            let cert = g.find_tripod_obstruction().expect("pattern present");
            assert!(cert.holds_in(&g));
        }
    }

    #[test]
    fn paths_and_hairy_trees_have_none() {
        for n in 1..12 {
            assert!(SimplicialGraph::path(n).unwrap().find_tripod_obstruction().is_none());
        }
        let hairy = SimplicialGraph::from_labels(
            &["b", "x", "y", "c", "h", "h1", "h2"],
            &[("b", "x"), ("x", "y"), ("y", "c"), ("x", "h"), ("y", "h1"), ("y", "h2")],
        )
        .unwrap();
        assert!(hairy.find_tripod_obstruction().is_none());
        assert!(!brute_force_exists(&hairy));
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        let graphs = [
            SimplicialGraph::t2(),
            SimplicialGraph::cycle(7).unwrap(),
            SimplicialGraph::tripod(1, 2, 2).unwrap(),
            SimplicialGraph::tripod(2, 3, 2).unwrap(),
            variant(&[("a", "q")]),
            variant(&[("p", "q")]),
        ];
        for g in &graphs {
            assert_eq!(g.find_tripod_obstruction().is_some(), brute_force_exists(g), "{g:?}");
        }
    }

    #[test]
    fn json_round_trip() {
        let g = SimplicialGraph::t2();
        let cert = g.find_tripod_obstruction().unwrap();
        assert_eq!(TripodObstruction::from_json(&g, &cert.to_json(&g)).unwrap(), cert);
    }
}
