//! Reference implementations used only to cross-check the main algorithms.
//!
//! Nothing here is called by the production code paths in [`crate::words`]
//! or [`crate::extgraph`]; these routines work directly from the group
//! presentation and share no reduction or normal-form code with them.

use std::collections::{HashSet, VecDeque};

use crate::graphs::SimplicialGraph;
use crate::words::Letter;

const BITS: u32 = 5;
const MAX_LEN: usize = 12;

/// Exhaustive search over the words reachable from a start word by relator
/// moves: swapping adjacent commuting letters and deleting (optionally also
/// inserting) adjacent inverse pairs.
pub struct RewriteOracle<'a> {
    graph: &'a SimplicialGraph,
}

/// Outcome of exploring one start word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exploration {
    /// Shortest length reached.
    pub min_len: usize,
    /// Lexicographically least word among those of length `min_len`.
    pub least_shortest: Vec<Letter>,
    /// Number of distinct words visited.
    pub states: usize,
}

fn pack(ls: &[Letter]) -> u64 {
    let mut x = ls.len() as u64;
    for (i, l) in ls.iter().enumerate() {
        x |= (l.code() as u64) << (4 + BITS as usize * i);
    }
    x
}

fn unpack(x: u64) -> Vec<Letter> {
    let len = (x & 0xf) as usize;
    (0..len)
        .map(|i| Letter::from_code(((x >> (4 + BITS as usize * i)) & 0x1f) as usize))
        .collect()
}

impl<'a> RewriteOracle<'a> {
    /// Supports graphs with at most 16 vertices.
    pub fn new(graph: &'a SimplicialGraph) -> Self {
        assert!(graph.vertex_count() <= 16, "oracle packs letters into 5 bits");
        RewriteOracle { graph }
    }

    /// Relator moves without insertions. Start words up to 12 letters.
    pub fn explore(&self, start: &[Letter]) -> Exploration {
        self.search(start, start.len())
    }

    /// Also allows inserting `v v^-1` pairs while the word stays within `cap` letters.
    pub fn explore_with_insertions(&self, start: &[Letter], cap: usize) -> Exploration {
        self.search(start, cap.max(start.len()))
    }

    fn search(&self, start: &[Letter], cap: usize) -> Exploration {
        assert!(cap <= MAX_LEN, "oracle handles words up to {MAX_LEN} letters");
        let inserting = cap > start.len();
        let mut seen: HashSet<u64> = HashSet::new();
        let mut queue = VecDeque::new();
        let first = pack(start);
        seen.insert(first);
        queue.push_back(first);
        let mut best = start.to_vec();
        while let Some(state) = queue.pop_front() {
            let cur = unpack(state);
            if cur.len() < best.len() || (cur.len() == best.len() && cur < best) {
                best = cur.clone();
            }
            let mut push = |next: Vec<Letter>| {
                let key = pack(&next);
                if seen.insert(key) {
                    queue.push_back(key);
                }
            };
            for i in 0..cur.len().saturating_sub(1) {
                let (u, v) = (cur[i], cur[i + 1]);
                if u == v.inverse() {
                    let mut next = cur.clone();
                    next.drain(i..i + 2);
                    push(next);
                } else if u != v && (u.vertex() == v.vertex() || !self.graph.adjacent(u.vertex(), v.vertex())) {
                    let mut next = cur.clone();
                    next.swap(i, i + 1);
                    push(next);
                }
            }
            if inserting && cur.len() + 2 <= cap {
                for i in 0..=cur.len() {
                    for code in 0..2 * self.graph.vertex_count() {
                        let l = Letter::from_code(code);
                        let mut next = cur.clone();
                        next.insert(i, l.inverse());
                        next.insert(i, l);
                        push(next);
                    }
                }
            }
        }
        Exploration { min_len: best.len(), least_shortest: best, states: seen.len() }
    }
}

/// Calls `f` on every word of length `0..=max_len` over the letters of `g`.
pub fn for_each_word(g: &SimplicialGraph, max_len: usize, mut f: impl FnMut(&[Letter])) {
    let letters = 2 * g.vertex_count();
    let mut cur: Vec<Letter> = Vec::with_capacity(max_len);
    f(&cur);
    fn go(letters: usize, max_len: usize, cur: &mut Vec<Letter>, f: &mut impl FnMut(&[Letter])) {
        if cur.len() == max_len {
            return;
        }
        for code in 0..letters {
            cur.push(Letter::from_code(code));
            f(cur);
            go(letters, max_len, cur, f);
            cur.pop();
        }
    }
    go(letters, max_len, &mut cur, &mut f);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packing_round_trips() {
        let w = vec![Letter::pos(3), Letter::neg(15), Letter::pos(0)];
        assert_eq!(unpack(pack(&w)), w);
        assert_eq!(unpack(pack(&[])), Vec::<Letter>::new());
    }

    #[test]
    fn small_explorations() {
        let g = SimplicialGraph::path(5).unwrap();
        let o = RewriteOracle::new(&g);
        // x1 x3 x1^-1 -> x3
        let e = o.explore(&[Letter::pos(0), Letter::pos(2), Letter::neg(0)]);
        assert_eq!(e.min_len, 1);
        assert_eq!(e.least_shortest, vec![Letter::pos(2)]);
        // x2 x3 x2^-1 is stuck
        let e = o.explore(&[Letter::pos(1), Letter::pos(2), Letter::neg(1)]);
        assert_eq!((e.min_len, e.states), (3, 1));
    }

    #[test]
    fn insertions_never_shorten_further_on_p4() {
        let g = SimplicialGraph::path(4).unwrap();
        let o = RewriteOracle::new(&g);
        for_each_word(&g, 3, |w| {
            let plain = o.explore(w);
            let wide = o.explore_with_insertions(w, w.len() + 2);
            assert_eq!(plain.min_len, wide.min_len, "{w:?}");
            assert_eq!(plain.least_shortest, wide.least_shortest, "{w:?}");
        });
    }

    #[test]
    fn word_counts() {
        let g = SimplicialGraph::path(2).unwrap();
        let mut n = 0;
        for_each_word(&g, 3, |_| n += 1);
        assert_eq!(n, 1 + 4 + 16 + 64);
    }
}
