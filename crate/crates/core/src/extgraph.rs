//! Finite pieces of the extension graph.
//!
//! A vertex of the extension graph is a conjugate `a^w = w^-1 a w` of a
//! generator; two vertices are adjacent iff they do not commute. The graph is
//! infinite, so everything here works with vertices whose canonical
//! conjugator has normal-form length at most a radius `L`.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::graphs::{SimplicialGraph, VertexId};
use crate::words::{GraphGroup, Letter, NormalForm, Word};

/// A conjugate `a^w` of generator `a`, stored with the shortest conjugator.
///
/// Equality, hashing and ordering use only `key`, the normal form of the
/// element `w^-1 a w`.
#[derive(Clone, Debug)]
pub struct ExtVertex {
    base: usize,
    conjugator: NormalForm,
    key: NormalForm,
}

impl PartialEq for ExtVertex {
    fn eq(&self, other: &Self) -> bool {
        self.key == other.key
    }
}

impl Eq for ExtVertex {}

impl Hash for ExtVertex {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key.hash(state);
    }
}

impl PartialOrd for ExtVertex {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtVertex {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key.cmp(&other.key)
    }
}

impl ExtVertex {
    /// The generator itself, `a^1`.
    pub fn generator(a: usize) -> Self {
        let w = NormalForm::new_unchecked(Word::generator(a));
        ExtVertex { base: a, conjugator: NormalForm::default(), key: w }
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn conjugator(&self) -> &NormalForm {
        &self.conjugator
    }

    pub fn key(&self) -> &NormalForm {
        &self.key
    }

    /// Normal-form length of the conjugator.
    pub fn radius(&self) -> usize {
        self.conjugator.len()
    }

    pub fn is_generator(&self) -> bool {
        self.conjugator.is_empty()
    }

    /// The element as a word (its normal form).
    pub fn element(&self) -> &Word {
        self.key.as_word()
    }

    /// The reduced word `w^-1 a w` built from the stored conjugator.
    pub fn conjugate_word(&self) -> Word {
        let w = self.conjugator.as_word();
        let mut out = w.inverse();
        out.push(Letter::pos(self.base));
        out * w
    }

    pub fn display<'a>(&'a self, g: &'a SimplicialGraph) -> impl fmt::Display + 'a {
        DisplayExt { v: self, g }
    }
}

struct DisplayExt<'a> {
    v: &'a ExtVertex,
    g: &'a SimplicialGraph,
}

impl fmt::Display for DisplayExt<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = self.g.label(self.v.base);
        if self.v.is_generator() {
            write!(f, "{base}")
        } else {
            write!(f, "{base}^({})", self.g.group().format_word(self.v.conjugator.as_word()))
        }
    }
}

/// Canonical conjugate of `a` by `w`: conjugator letters that can be moved
/// to the front and commute with `a` are stripped, so the stored
/// `w^-1 a w` is reduced.
pub fn ext_vertex(g: &SimplicialGraph, a: usize, w: &Word) -> Result<ExtVertex> {
    if a >= g.vertex_count() {
        return Err(invalid(format!("vertex index {a} out of range")));
    }
    let grp = g.group();
    let mut u = grp.reduce(w).into_letters();
    let pa = Letter::pos(a);
    loop {
        let strip = grp
            .front_positions(&u)
            .into_iter()
            .find(|&k| grp.letters_commute(pa, u[k]));
        match strip {
            Some(k) => {
                u.remove(k);
            }
            None => break,
        }
    }
    Ok(canonical_unchecked(grp, a, Word::new(u)))
}

/// Builds the vertex from a conjugator already known to be stripped.
fn canonical_unchecked(grp: GraphGroup<'_>, a: usize, u: Word) -> ExtVertex {
    let conjugator = grp.normal_form(&u);
    let key = grp.normal_form(&grp.conjugate_word(Letter::pos(a), conjugator.as_word()));
    ExtVertex { base: a, conjugator, key }
}

/// Whether `u` and `v` fail to commute.
///
/// Conjugating both by the inverse of `u`'s conjugator turns `u` into its
/// generator `a`, and a generator commutes with an element iff no vertex of
/// the element's support is adjacent to `a`.
pub fn ext_adjacent(g: &SimplicialGraph, u: &ExtVertex, v: &ExtVertex) -> bool {
    if u == v {
        return false;
    }
    let grp = g.group();
    let h = v.conjugator.as_word() * &u.conjugator.as_word().inverse();
    let moved = grp.conjugate_word(Letter::pos(v.base), &h);
    grp.support(&moved).iter().any(|&s| g.adjacent(u.base, s))
}

/// Same relation computed from the commutator of the two elements.
pub fn ext_adjacent_by_commutator(g: &SimplicialGraph, u: &ExtVertex, v: &ExtVertex) -> bool {
    !g.group().commute_elements(u.element(), v.element())
}

/// Whether `a` is the stored conjugator's canonical base: no letter that can
/// be shuffled to the front of `u` commutes with `a`.
fn is_stripped(grp: GraphGroup<'_>, a: usize, u: &[Letter]) -> bool {
    let pa = Letter::pos(a);
    grp.front_positions(u).into_iter().all(|k| !grp.letters_commute(pa, u[k]))
}

/// Every vertex with conjugator length at most `radius`, ordered by
/// conjugator length, then conjugator normal form, then base. The first
/// `|V(G)|` entries are the generators in canonical order.
pub fn enumerate_vertices(g: &SimplicialGraph, radius: usize) -> Vec<ExtVertex> {
    let grp = g.group();
    let conjugators = grp.normal_forms(radius);
    let n = g.vertex_count();
    let out: Vec<ExtVertex> = conjugators
        .par_iter()
        .flat_map_iter(|u| {
            (0..n)
                .filter(|&a| is_stripped(grp, a, u.as_word().letters()))
                .map(|a| canonical_unchecked(grp, a, u.as_word().clone()))
                .collect::<Vec<_>>()
        })
        .collect();
    debug_assert_eq!(out.iter().collect::<HashSet<_>>().len(), out.len());
    out
}

/// A finite induced subgraph of the extension graph.
#[derive(Clone, Debug)]
pub struct ExtSubgraphView {
    pub vertices: Vec<ExtVertex>,
    /// Abstract graph on `s1..sk` (in `vertices` order) with the same adjacency.
    pub graph: SimplicialGraph,
}

pub fn induced_ext_subgraph(g: &SimplicialGraph, set: &[ExtVertex]) -> Result<ExtSubgraphView> {
    let mut seen = HashSet::new();
    for v in set {
        if !seen.insert(v) {
            return Err(invalid(format!("duplicate extension vertex {}", v.display(g))));
        }
    }
    let labels = (1..=set.len())
        .map(|i| VertexId::new(format!("s{i}")))
        .collect::<Result<Vec<_>>>()?;
    let edges: Vec<(usize, usize)> = (0..set.len())
        .flat_map(|i| (i + 1..set.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| ext_adjacent(g, &set[i], &set[j]))
        .collect();
    Ok(ExtSubgraphView { vertices: set.to_vec(), graph: SimplicialGraph::new(labels, edges)? })
}

/// Whether `map` (indexed by vertices of `pattern`) is an induced embedding
/// of `pattern` into the extension graph of `g`.
pub fn verify_ext_witness(g: &SimplicialGraph, pattern: &SimplicialGraph, map: &[ExtVertex]) -> bool {
    let k = pattern.vertex_count();
    map.len() == k
        && (0..k).all(|i| {
            (i + 1..k).all(|j| map[i] != map[j] && pattern.adjacent(i, j) == ext_adjacent(g, &map[i], &map[j]))
        })
}

/// Result of conjugating an independent set into the generators.
#[derive(Clone, Debug)]
pub struct PushToBase {
    /// `w` such that `g -> w g w^-1` sends every input vertex to a generator.
    pub conjugator: Word,
    /// The generator each input vertex lands on.
    pub images: Vec<usize>,
}

/// Finds an inner automorphism `g -> w g w^-1` sending every vertex of the
/// independent set `set` to a generator, one vertex at a time; each step fixes
/// the generators already reached.
pub fn push_to_base(g: &SimplicialGraph, set: &[ExtVertex]) -> Result<PushToBase> {
    for (i, u) in set.iter().enumerate() {
        for v in &set[i + 1..] {
            if ext_adjacent(g, u, v) {
                return Err(Error::PreconditionViolation(format!(
                    "{} and {} do not commute",
                    u.display(g),
                    v.display(g)
                )));
            }
        }
    }
    let grp = g.group();
    let mut total = Word::empty();
    let mut images = Vec::with_capacity(set.len());
    for v in set {
        // image of v under the automorphism built so far
        let moved = ext_vertex(g, v.base, &(v.conjugator.as_word() * &total.inverse()))?;
        total = grp.reduce(&(moved.conjugator.as_word() * &total));
        images.push(moved.base);
    }
    for (v, &b) in set.iter().zip(&images) {
        let pushed = total.clone() * v.element() * total.inverse();
        if !grp.equal(&pushed, &Word::generator(b)) {
            return Err(Error::InvariantFailure(format!("{} did not land on {}", v.display(g), g.label(b))));
        }
    }
    Ok(PushToBase { conjugator: total, images })
}

/// Bounded search for an induced embedding of `pattern` into the extension
/// graph of `g` using vertices of radius at most `radius`.
///
/// The first maximum independent set of `pattern` is anchored on generators:
/// any independent set of the extension graph can be conjugated into the
/// generators, and conjugation is an automorphism of the extension graph.
/// `None` means no witness within this radius, not non-embeddability.
///
/// Host graphs are limited to 128 vertices.
pub fn search_induced_embedding_ext(
    pattern: &SimplicialGraph,
    g: &SimplicialGraph,
    radius: usize,
) -> Result<Option<Vec<ExtVertex>>> {
    let pool = enumerate_vertices(g, radius);
    search_in_pool(pattern, g, &pool)
}

/// [`search_induced_embedding_ext`] over a precomputed vertex pool whose first
/// `|V(g)|` entries are the generators.
pub fn search_in_pool(
    pattern: &SimplicialGraph,
    g: &SimplicialGraph,
    pool: &[ExtVertex],
) -> Result<Option<Vec<ExtVertex>>> {
    let n = g.vertex_count();
    if n > 128 {
        return Err(invalid("extension-graph search supports at most 128 host vertices"));
    }
    if pattern.is_empty() {
        return Ok(Some(Vec::new()));
    }
    let grp = g.group();
    let nbr_mask: Vec<u128> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u128, |m, &u| m | 1 << u))
        .collect();
    // base vertices adjacent to each pool vertex: those whose link meets its support
    let adj_mask: Vec<u128> = pool
        .par_iter()
        .map(|v| grp.support(v.element()).iter().fold(0u128, |m, &s| m | nbr_mask[s]))
        .collect();
    let mut classes: BTreeMap<u128, Vec<usize>> = BTreeMap::new();
    for (i, &m) in adj_mask.iter().enumerate() {
        classes.entry(m).or_default().push(i);
    }

    let anchors = pattern.first_maximum_independent_set();
    let mut order = anchors.clone();
    let mut rest: Vec<usize> = (0..pattern.vertex_count()).filter(|v| !anchors.contains(v)).collect();
    rest.sort_by_key(|&v| std::cmp::Reverse(pattern.degree(v)));
    order.extend(rest);

    let mut search = PoolSearch {
        pattern,
        g,
        pool,
        classes: &classes,
        order: &order,
        anchor_count: anchors.len(),
        assigned: vec![usize::MAX; pattern.vertex_count()],
        candidates: vec![Vec::new(); order.len()],
        cache: HashMap::new(),
    };
    if search.extend(0) {
        Ok(Some(search.assigned.iter().map(|&i| pool[i].clone()).collect()))
    } else {
        Ok(None)
    }
}

struct PoolSearch<'a> {
    pattern: &'a SimplicialGraph,
    g: &'a SimplicialGraph,
    pool: &'a [ExtVertex],
    classes: &'a BTreeMap<u128, Vec<usize>>,
    order: &'a [usize],
    anchor_count: usize,
    /// pool index per pattern vertex
    assigned: Vec<usize>,
    /// per depth, candidates fixed once the anchors are placed
    candidates: Vec<Vec<usize>>,
    cache: HashMap<(usize, usize), bool>,
}

impl PoolSearch<'_> {
    fn adjacent(&mut self, i: usize, j: usize) -> bool {
        let key = if i < j { (i, j) } else { (j, i) };
        if let Some(&hit) = self.cache.get(&key) {
            return hit;
        }
        let res = ext_adjacent(self.g, &self.pool[i], &self.pool[j]);
        self.cache.insert(key, res);
        res
    }

    fn prepare_candidates(&mut self) -> bool {
        let anchors = &self.order[..self.anchor_count];
        let anchor_bits = anchors.iter().fold(0u128, |m, &a| m | 1 << self.assigned[a]);
        for d in self.anchor_count..self.order.len() {
            let v = self.order[d];
            let required = anchors
                .iter()
                .filter(|&&a| self.pattern.adjacent(a, v))
                .fold(0u128, |m, &a| m | 1 << self.assigned[a]);
            let mut cands: Vec<usize> = self
                .classes
                .iter()
                .filter(|(&mask, _)| mask & anchor_bits == required)
                .flat_map(|(_, members)| members.iter().copied())
                .filter(|&c| c >= 128 || anchor_bits & (1 << c) == 0)
                .collect();
            cands.sort_unstable();
            if cands.is_empty() {
                return false;
            }
            self.candidates[d] = cands;
        }
        true
    }

    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        if depth < self.anchor_count {
            for t in 0..self.g.vertex_count() {
                let ok = self.order[..depth].iter().all(|&u| {
                    let tu = self.assigned[u];
                    tu != t && !self.g.adjacent(tu, t)
                });
                if !ok {
                    continue;
                }
                self.assigned[v] = t;
                let ready = depth + 1 < self.anchor_count || self.prepare_candidates();
                if ready && self.extend(depth + 1) {
                    return true;
                }
                self.assigned[v] = usize::MAX;
            }
            return false;
        }
        let cands = std::mem::take(&mut self.candidates[depth]);
        let mut found = false;
        for &c in &cands {
            let mut ok = true;
            for d in self.anchor_count..depth {
                let u = self.order[d];
                let cu = self.assigned[u];
                if cu == c || self.adjacent(cu, c) != self.pattern.adjacent(u, v) {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
            self.assigned[v] = c;
            if self.extend(depth + 1) {
                found = true;
                break;
            }
            self.assigned[v] = usize::MAX;
        }
        self.candidates[depth] = cands;
        found
    }
}

/// Outcome of the exhaustive path-graph commutation check.
#[derive(Clone, Debug, Serialize)]
pub struct LemmaPathReport {
    pub n: usize,
    pub radius: usize,
    pub triples: usize,
    pub vertices: usize,
    /// `(triple, vertex)` pairs where the vertex commutes with the middle vertex.
    pub checked: usize,
    pub violations: Vec<String>,
}

/// In `G(P_n)`, for every independent `{x, p, q}` with `p` between `x` and `q`
/// and every extension vertex of radius at most `radius` commuting with `p`,
/// checks that it commutes with `x` or with `q`. Commutation is decided by
/// reducing commutators.
pub fn verify_lemma_path(n: usize, radius: usize) -> Result<LemmaPathReport> {
    if n < 5 {
        return Err(invalid(format!("path length must be at least 5, got {n}")));
    }
    let g = SimplicialGraph::path(n)?;
    let grp = g.group();
    let vertices = enumerate_vertices(&g, radius);
    let mut triples = Vec::new();
    for x in 0..n {
        for p in x + 2..n {
            for q in p + 2..n {
                triples.push((x, p, q));
            }
        }
    }
    let results: Vec<(usize, Vec<String>)> = vertices
        .par_iter()
        .map(|v| {
            let commutes = |t: usize| grp.commute_elements(v.element(), &Word::generator(t));
            let mut checked = 0;
            let mut bad = Vec::new();
            for &(x, p, q) in &triples {
                if commutes(p) {
                    checked += 1;
                    if !commutes(x) && !commutes(q) {
                        bad.push(format!(
                            "{} commutes with {} but with neither {} nor {}",
                            v.display(&g),
                            g.label(p),
                            g.label(x),
                            g.label(q)
                        ));
                    }
                }
            }
            (checked, bad)
        })
        .collect();
    let checked = results.iter().map(|r| r.0).sum();
    let violations: Vec<String> = results.into_iter().flat_map(|r| r.1).collect();
    let report = LemmaPathReport { n, radius, triples: triples.len(), vertices: vertices.len(), checked, violations };
    if report.violations.is_empty() {
        Ok(report)
    } else {
        Err(Error::InvariantFailure(format!(
            "{} path-lemma violations, first: {}",
            report.violations.len(),
            report.violations[0]
        )))
    }
}

/// Parses `a`, `a^()` or `a^(w)` with `w` in word syntax.
pub fn parse_ext_vertex(g: &SimplicialGraph, s: &str) -> Result<ExtVertex> {
    let s = s.trim();
    let bad = |m: String| Error::Parse { line: 1, column: 1, message: m };
    let (name, conj) = match s.split_once('^') {
        None => (s, ""),
        Some((name, rest)) => {
            let inner = rest
                .trim()
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(|| bad(format!("expected `{name}^(word)` in {s:?}")))?;
            (name.trim(), inner)
        }
    };
    let a = g.index_of(name).ok_or_else(|| bad(format!("unknown generator {name:?}")))?;
    let w = g.group().parse_word(conj)?;
    ext_vertex(g, a, &w)
}

/// Splits on whitespace or `;` outside parentheses and parses each piece.
pub fn parse_ext_vertex_list(g: &SimplicialGraph, s: &str) -> Result<Vec<ExtVertex>> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    let flush = |cur: &mut String, out: &mut Vec<ExtVertex>| -> Result<()> {
        if !cur.trim().is_empty() {
            out.push(parse_ext_vertex(g, cur)?);
        }
        cur.clear();
        Ok(())
    };
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            _ => {}
        }
        let separator = depth == 0 && (c == ';' || c.is_whitespace());
        // `a ^ (w)` with spaces around the caret stays one token
        let caret_follows = chars.peek().is_some_and(|&n| n == '^') || cur.trim_end().ends_with('^');
        if separator && !(c.is_whitespace() && caret_follows) {
            flush(&mut cur, &mut out)?;
        } else if !(c.is_whitespace() && depth == 0) {
            cur.push(c);
        }
    }
    flush(&mut cur, &mut out)?;
    Ok(out)
}

/// Witness map as a JSON object `pattern label -> extension vertex`.
pub fn witness_to_json(pattern: &SimplicialGraph, g: &SimplicialGraph, map: &[ExtVertex]) -> serde_json::Value {
    let obj: serde_json::Map<String, serde_json::Value> = map
        .iter()
        .enumerate()
        .map(|(i, v)| (pattern.label(i).to_string(), serde_json::Value::String(v.display(g).to_string())))
        .collect();
    serde_json::Value::Object(obj)
}

pub fn witness_from_json(
    pattern: &SimplicialGraph,
    g: &SimplicialGraph,
    value: &serde_json::Value,
) -> Result<Vec<ExtVertex>> {
    let obj = value.as_object().ok_or_else(|| invalid("witness must be a JSON object"))?;
    pattern
        .labels()
        .iter()
        .map(|l| {
            let s = obj
                .get(l.as_str())
                .and_then(|v| v.as_str())
                .ok_or_else(|| invalid(format!("witness lacks vertex {l}")))?;
            parse_ext_vertex(g, s)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize) -> SimplicialGraph {
        SimplicialGraph::path(n).unwrap()
    }

    fn ev(g: &SimplicialGraph, s: &str) -> ExtVertex {
        parse_ext_vertex(g, s).unwrap()
    }

    #[test]
    fn canonical_conjugates() {
        let g = p(5);
        let grp = g.group();
        let a = ev(&g, "x1");
        assert_eq!(a.key().as_word(), &Word::generator(0));
        assert_eq!(a, ev(&g, "x1^()"));
        let c = ev(&g, "x1^(x2 x3)");
        assert_eq!(grp.support(c.element()), [0, 1, 2].into());
        assert_eq!(c.radius(), 2);
        assert!(grp.is_reduced(&c.conjugate_word()));
        let stripped = ev(&g, "x1^(x3)");
        assert_eq!(stripped, a);
        assert!(stripped.is_generator());
        // x1^(x1 x2) = x1^(x2)
        assert_eq!(ev(&g, "x1^(x1 x2)"), ev(&g, "x1^(x2)"));
        assert!(ext_vertex(&g, 7, &Word::empty()).is_err());
    }

    #[test]
    fn adjacency() {
        let g = p(5);
        let u = ev(&g, "x1^(x2)");
        assert!(!ext_adjacent(&g, &u, &u));
        assert!(ext_adjacent(&g, &ev(&g, "x1"), &ev(&g, "x2")));
        assert!(!ext_adjacent(&g, &ev(&g, "x1"), &ev(&g, "x3")));
        assert!(ext_adjacent(&g, &u, &ev(&g, "x3")));
        assert!(!ext_adjacent(&g, &u, &ev(&g, "x4")));
    }

    #[test]
    fn adjacency_routes_agree() {
        let g = p(5);
        let vs = enumerate_vertices(&g, 2);
        for (i, u) in vs.iter().enumerate() {
            for v in &vs[i..] {
                let fast = ext_adjacent(&g, u, v);
                assert_eq!(fast, ext_adjacent_by_commutator(&g, u, v));
                assert_eq!(fast, ext_adjacent(&g, v, u));
            }
        }
    }

    #[test]
    fn enumeration() {
        let g = p(3);
        let l0 = enumerate_vertices(&g, 0);
        assert_eq!(l0.iter().map(|v| v.base()).collect::<Vec<_>>(), vec![0, 1, 2]);
        assert!(l0.iter().all(ExtVertex::is_generator));
        // radius one: conjugates a^b with a, b adjacent, distinct by key
        let l1 = enumerate_vertices(&g, 1);
        let brute: HashSet<ExtVertex> = (0..3)
            .flat_map(|a| (0..6).map(move |c| (a, c)))
            .map(|(a, c)| ext_vertex(&g, a, &Word::new(vec![Letter::from_code(c)])).unwrap())
            .collect();
        assert_eq!(l1.iter().cloned().collect::<HashSet<_>>(), brute);
        // x1^x2, x1^x2^-1, x2^x1, x2^x1^-1, x2^x3, x2^x3^-1, x3^x2, x3^x2^-1
        assert_eq!(l1.len(), 3 + 8);
        let l2 = enumerate_vertices(&g, 2);
        assert!(l1.iter().all(|v| l2.contains(v)));
        assert_eq!(l2.iter().collect::<HashSet<_>>().len(), l2.len());
    }

    #[test]
    fn keys_have_unit_exponent_profile() {
        let g = p(5);
        for v in enumerate_vertices(&g, 2) {
            let mut sums = [0i32; 5];
            for l in v.element().letters() {
                sums[l.vertex()] += l.sign() as i32;
            }
            let nonzero: Vec<usize> = (0..5).filter(|&i| sums[i] != 0).collect();
            assert_eq!(nonzero, vec![v.base()]);
            assert_eq!(sums[v.base()], 1);
        }
    }

    #[test]
    fn generators_induce_the_graph() {
        for g in [p(5), SimplicialGraph::t2(), SimplicialGraph::cycle(6).unwrap()] {
            let gens: Vec<ExtVertex> = (0..g.vertex_count()).map(ExtVertex::generator).collect();
            let view = induced_ext_subgraph(&g, &gens).unwrap();
            assert_eq!(view.graph.edges(), g.edges());
        }
    }

    #[test]
    fn induced_rejects_duplicates() {
        let g = p(5);
        let s = vec![ev(&g, "x1"), ev(&g, "x1^(x3)")];
        assert!(induced_ext_subgraph(&g, &s).is_err());
    }

    #[test]
    fn conjugate_attached_to_path_segment() {
        // x1^(x2 x3) in G(P_k + tails): commutes with v iff v outside {b, c, x1, x2, x3}
        let g = SimplicialGraph::from_labels(
            &["b0", "b", "x1", "x2", "x3", "c", "c0"],
            &[("b0", "b"), ("b", "x1"), ("x1", "x2"), ("x2", "x3"), ("x3", "c"), ("c", "c0")],
        )
        .unwrap();
        let t = ev(&g, "x1^(x2 x3)");
        let adjacent: Vec<&str> = (0..g.vertex_count())
            .filter(|&v| ext_adjacent(&g, &t, &ExtVertex::generator(v)))
            .map(|v| g.label(v).as_str())
            .collect();
        assert_eq!(adjacent, vec!["b", "x1", "x2", "x3", "c"]);
    }

    #[test]
    fn push_to_base_examples() {
        let g = p(5);
        let gens = vec![ev(&g, "x1"), ev(&g, "x3")];
        let r = push_to_base(&g, &gens).unwrap();
        assert!(r.conjugator.is_empty());
        assert_eq!(r.images, vec![0, 2]);
        // x4 commutes with x1^(x2) (Lk(x4) = {x3, x5} misses {x1, x2})
        let r = push_to_base(&g, &[ev(&g, "x1^(x2)"), ev(&g, "x4")]).unwrap();
        assert_eq!(r.images, vec![0, 3]);
        let err = push_to_base(&g, &[ev(&g, "x1^(x2)"), ev(&g, "x3")]).unwrap_err();
        assert!(matches!(err, Error::PreconditionViolation(_)));
        let g6 = p(6);
        let r = push_to_base(&g6, &[ev(&g6, "x1^(x2)"), ev(&g6, "x5")]).unwrap();
        assert_eq!(g6.group().format_word(&r.conjugator), "x2");
        assert_eq!(r.images, vec![0, 4]);
    }

    #[test]
    fn lemma_path_small() {
        let r = verify_lemma_path(5, 0).unwrap();
        assert_eq!((r.triples, r.vertices), (1, 5));
        assert!(r.violations.is_empty());
        assert!(verify_lemma_path(5, 2).unwrap().checked > 0);
        assert!(verify_lemma_path(4, 1).is_err());
    }

    #[test]
    fn search_finds_identity_for_paths() {
        for n in 1..6 {
            let g = p(n);
            let w = search_induced_embedding_ext(&g, &g, 1).unwrap().unwrap();
            assert!(w.iter().enumerate().all(|(i, v)| v == &ExtVertex::generator(i)));
        }
    }

    #[test]
    fn search_finds_nontrivial_witness() {
        // a star K_{1,3} needs a conjugate in G(P_5): the center has three
        // pairwise commuting neighbours
        let star = SimplicialGraph::tripod(1, 1, 1).unwrap();
        let g = p(5);
        assert!(search_induced_embedding_ext(&star, &g, 0).unwrap().is_none());
        let w = search_induced_embedding_ext(&star, &g, 2).unwrap().unwrap();
        assert!(verify_ext_witness(&g, &star, &w));
    }

    #[test]
    fn ext_vertex_syntax() {
        let g = p(5);
        let v = ev(&g, "x1^(x2 x3)");
        assert_eq!(v.display(&g).to_string(), "x1^(x2 x3)");
        assert_eq!(ev(&g, &v.display(&g).to_string()), v);
        let list = parse_ext_vertex_list(&g, "x1^(x2 x3) x4; x2 ^ (x3^-1)").unwrap();
        assert_eq!(list.len(), 3);
        assert_eq!(list[2], ev(&g, "x2^(x3^-1)"));
        assert!(parse_ext_vertex(&g, "x1^x2").is_err());
        assert!(parse_ext_vertex(&g, "y^()").is_err());
    }

    #[test]
    fn witness_json_round_trip() {
        let star = SimplicialGraph::tripod(1, 1, 1).unwrap();
        let g = p(5);
        let w = search_induced_embedding_ext(&star, &g, 2).unwrap().unwrap();
        let back = witness_from_json(&star, &g, &witness_to_json(&star, &g, &w)).unwrap();
        assert_eq!(back, w);
    }
}
