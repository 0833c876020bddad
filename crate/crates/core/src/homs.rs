//! Graph homomorphisms and the group maps they induce.
//!
//! A graph homomorphism `phi: G2 -> G1` induces `phi*: G(G1) -> G(G2)`,
//! sending `v` to the product of its fiber. Injectivity and the surviving
//! property are universally quantified, so the checks here are bounded:
//! each report states the word length it covers.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::graphs::SimplicialGraph;
use crate::words::{GraphGroup, Letter, Word};

/// Outcome of a bounded or exact check.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CheckReport {
    pub check: String,
    /// Word-length bound, `None` for exact checks.
    pub bound: Option<usize>,
    pub checked: usize,
    pub violations: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn new(check: &str, bound: Option<usize>, checked: usize, violations: Vec<String>) -> Self {
        CheckReport { check: check.to_string(), bound, checked, violations }
    }
}

/// A vertex map `source -> target`.
#[derive(Clone, Debug, PartialEq)]
pub struct GraphHom {
    source: SimplicialGraph,
    target: SimplicialGraph,
    map: Vec<usize>,
}

impl GraphHom {
    /// Builds the map; adjacency preservation is checked by [`GraphHom::is_graph_hom`].
    pub fn new(source: SimplicialGraph, target: SimplicialGraph, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.vertex_count() {
            return Err(invalid(format!(
                "map has {} entries for {} source vertices",
                map.len(),
                source.vertex_count()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&t| t >= target.vertex_count()) {
            return Err(invalid(format!("target index {bad} out of range")));
        }
        Ok(GraphHom { source, target, map })
    }

    /// Builds the map from `(source label, target label)` pairs covering every source vertex.
    pub fn from_labels(source: SimplicialGraph, target: SimplicialGraph, pairs: &[(&str, &str)]) -> Result<Self> {
        let mut map = vec![usize::MAX; source.vertex_count()];
        for &(s, t) in pairs {
            let si = source.vertex(s)?;
            if map[si] != usize::MAX {
                return Err(invalid(format!("vertex {s} mapped twice")));
            }
            map[si] = target.vertex(t)?;
        }
        if let Some(missing) = map.iter().position(|&t| t == usize::MAX) {
            return Err(invalid(format!("vertex {} is not mapped", source.label(missing))));
        }
        GraphHom::new(source, target, map)
    }

    pub fn identity(g: &SimplicialGraph) -> Self {
        GraphHom { source: g.clone(), target: g.clone(), map: (0..g.vertex_count()).collect() }
    }

    /// Inclusion of `sub` into `g`, matching vertices by label.
    pub fn inclusion(sub: &SimplicialGraph, g: &SimplicialGraph) -> Result<Self> {
        let map = sub.labels().iter().map(|l| g.vertex(l.as_str())).collect::<Result<Vec<_>>>()?;
        GraphHom::new(sub.clone(), g.clone(), map)
    }

    pub fn source(&self) -> &SimplicialGraph {
        &self.source
    }

    pub fn target(&self) -> &SimplicialGraph {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// Every source edge goes to a target edge (so no edge collapses).
    pub fn is_graph_hom(&self) -> bool {
        self.source.edges().into_iter().all(|(u, v)| self.target.adjacent(self.map[u], self.map[v]))
    }

    /// Fibers over each target vertex in ascending source order.
    pub fn fibers(&self) -> Vec<Vec<usize>> {
        let mut fibers = vec![Vec::new(); self.target.vertex_count()];
        for (s, &t) in self.map.iter().enumerate() {
            fibers[t].push(s);
        }
        fibers
    }

    /// The induced map `G(target) -> G(source)`.
    pub fn induced(&self) -> Result<InducedHom> {
        if !self.is_graph_hom() {
            return Err(Error::PreconditionViolation("vertex map does not preserve adjacency".into()));
        }
        let fiber_order = self.fibers();
        let images = fiber_order.iter().map(|f| f.iter().map(|&s| Letter::pos(s)).collect()).collect();
        let group = GroupHom::new(self.target.clone(), self.source.clone(), images)?;
        Ok(InducedHom { hom: self.clone(), fiber_order, group })
    }

    /// `map: s -> t` lines preceded by `source:` and `target:` graph references.
    pub fn to_text(&self, source_ref: &str, target_ref: &str) -> String {
        let mut out = format!("source: {source_ref}\ntarget: {target_ref}\n");
        for (s, &t) in self.map.iter().enumerate() {
            out.push_str(&format!("map: {} -> {}\n", self.source.label(s), self.target.label(t)));
        }
        out
    }
}

/// Parsed hom file; graph references are resolved by the caller.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomFile {
    pub source_ref: String,
    pub target_ref: String,
    pub pairs: Vec<(String, String)>,
}

impl HomFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut source_ref = None;
        let mut target_ref = None;
        let mut pairs = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse {
                line: i + 1,
                column: raw.len() - raw.trim_start().len() + 1,
                message,
            };
            let (key, rest) = line.split_once(':').ok_or_else(|| err(format!("expected `key: value`, got {line:?}")))?;
            let rest = rest.trim();
            match key.trim() {
                "source" => source_ref = Some(rest.to_string()),
                "target" => target_ref = Some(rest.to_string()),
                "map" => {
                    let (s, t) = rest.split_once("->").ok_or_else(|| err(format!("expected `s -> t`, got {rest:?}")))?;
                    pairs.push((s.trim().to_string(), t.trim().to_string()));
                }
                other => return Err(err(format!("unknown key {other:?}"))),
            }
        }
        let missing = |what: &str| Error::Parse { line: 1, column: 1, message: format!("missing `{what}:` line") };
        Ok(HomFile {
            source_ref: source_ref.ok_or_else(|| missing("source"))?,
            target_ref: target_ref.ok_or_else(|| missing("target"))?,
            pairs,
        })
    }

    pub fn resolve(&self, source: SimplicialGraph, target: SimplicialGraph) -> Result<GraphHom> {
        let pairs: Vec<(&str, &str)> = self.pairs.iter().map(|(s, t)| (s.as_str(), t.as_str())).collect();
        GraphHom::from_labels(source, target, &pairs)
    }
}

/// A homomorphism `G(domain) -> G(codomain)` given by generator images.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupHom {
    domain: SimplicialGraph,
    codomain: SimplicialGraph,
    images: Vec<Word>,
}

impl GroupHom {
    pub fn new(domain: SimplicialGraph, codomain: SimplicialGraph, images: Vec<Word>) -> Result<Self> {
        if images.len() != domain.vertex_count() {
            return Err(invalid(format!("{} images for {} generators", images.len(), domain.vertex_count())));
        }
        let rank = codomain.vertex_count();
        if images.iter().flat_map(|w| w.letters()).any(|l| l.vertex() >= rank) {
            return Err(invalid("image uses a generator outside the codomain"));
        }
        Ok(GroupHom { domain, codomain, images })
    }

    pub fn identity(g: &SimplicialGraph) -> Self {
        let images = (0..g.vertex_count()).map(Word::generator).collect();
        GroupHom { domain: g.clone(), codomain: g.clone(), images }
    }

    pub fn domain(&self) -> &SimplicialGraph {
        &self.domain
    }

    pub fn codomain(&self) -> &SimplicialGraph {
        &self.codomain
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    /// Letterwise substitution; inverse letters take the inverse image. Not reduced.
    pub fn apply(&self, w: &Word) -> Word {
        let mut out = Vec::new();
        for &l in w.letters() {
            let img = self.images[l.vertex()].letters();
            if l.is_inverse() {
                out.extend(img.iter().rev().map(|x| x.inverse()));
            } else {
                out.extend_from_slice(img);
            }
        }
        Word::new(out)
    }

    /// `then` after `self`, with images reduced to normal form.
    pub fn compose(&self, then: &GroupHom) -> Result<GroupHom> {
        if self.codomain != then.domain {
            return Err(invalid("composition of maps between mismatched groups"));
        }
        let grp = then.codomain.group();
        let images = self.images.iter().map(|w| grp.normal_form(&then.apply(w)).into_word()).collect();
        GroupHom::new(self.domain.clone(), then.codomain.clone(), images)
    }

    /// Exact well-definedness check: commuting generators have commuting images.
    pub fn relators_preserved(&self) -> CheckReport {
        let grp = self.codomain.group();
        let n = self.domain.vertex_count();
        let mut checked = 0;
        let mut violations = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.domain.adjacent(u, v) {
                    continue;
                }
                checked += 1;
                if !grp.commute_elements(&self.images[u], &self.images[v]) {
                    violations.push(format!(
                        "images of {} and {} do not commute",
                        self.domain.label(u),
                        self.domain.label(v)
                    ));
                }
            }
        }
        CheckReport::new("relator preservation", None, checked, violations)
    }

    /// Every nontrivial normal form of length at most `max_len` has nontrivial image.
    pub fn bounded_injectivity(&self, max_len: usize) -> Result<CheckReport> {
        if max_len < 1 {
            return Err(invalid("injectivity bound must be at least 1"));
        }
        let dom = self.domain.group();
        let cod = self.codomain.group();
        let words = dom.normal_forms(max_len);
        let violations: Vec<String> = words
            .par_iter()
            .filter(|w| !w.is_empty() && cod.is_trivial(&self.apply(w.as_word())))
            .map(|w| format!("{} maps to the identity", dom.format_word(w.as_word())))
            .collect();
        Ok(CheckReport::new("bounded injectivity", Some(max_len), words.len() - 1, violations))
    }
}

/// `phi*` for a graph homomorphism `phi`, with its fiber products fixed.
#[derive(Clone, Debug, PartialEq)]
pub struct InducedHom {
    hom: GraphHom,
    fiber_order: Vec<Vec<usize>>,
    group: GroupHom,
}

impl InducedHom {
    pub fn hom(&self) -> &GraphHom {
        &self.hom
    }

    pub fn fiber_order(&self) -> &[Vec<usize>] {
        &self.fiber_order
    }

    pub fn as_group_hom(&self) -> &GroupHom {
        &self.group
    }

    pub fn apply(&self, w: &Word) -> Word {
        self.group.apply(w)
    }
}

/// The retraction `G(g) -> G(g minus killed)` induced by the inclusion.
pub fn kill_generators(g: &SimplicialGraph, killed: &[usize]) -> Result<InducedHom> {
    let sub = g.remove(killed)?;
    GraphHom::inclusion(&sub, g)?.induced()
}

/// First innermost cancellation `v^e .. v^-e` of `v` in `w`: consecutive
/// occurrences of `v` with opposite signs whose interior, as an element,
/// has support avoiding `Lk(v)`.
pub fn find_innermost_cancellation_of(grp: GraphGroup<'_>, w: &[Letter], v: usize) -> Option<(usize, usize)> {
    let g = grp.graph();
    let occurrences: Vec<usize> = (0..w.len()).filter(|&i| w[i].vertex() == v).collect();
    occurrences.windows(2).map(|p| (p[0], p[1])).find(|&(i, j)| {
        w[i] == w[j].inverse() && {
            let interior = grp.reduce(&Word::new(w[i + 1..j].to_vec()));
            grp.support(&interior).iter().all(|&s| !g.adjacent(v, s))
        }
    })
}

/// Bounded check that `phi` is `v`-surviving: for every reduced word `w` of
/// length at most `max_len` in G(target), `phi*(w)` has no innermost
/// cancellation of `v`.
pub fn check_surviving(phi: &GraphHom, v: usize, max_len: usize) -> Result<CheckReport> {
    if v >= phi.source.vertex_count() {
        return Err(invalid(format!("vertex index {v} out of range")));
    }
    if max_len < 1 {
        return Err(invalid("surviving bound must be at least 1"));
    }
    let induced = phi.induced()?;
    let dom = phi.target.group();
    let cod = phi.source.group();
    let mut words = Vec::new();
    dom.for_each_reduced_word(max_len, |w| words.push(w.to_vec()));
    let violations: Vec<String> = words
        .par_iter()
        .filter_map(|w| {
            let img = induced.apply(&Word::new(w.clone()));
            find_innermost_cancellation_of(cod, img.letters(), v).map(|(i, j)| {
                format!(
                    "image of {} = {} cancels {} at positions {}..{}",
                    dom.format_word(&Word::new(w.clone())),
                    cod.format_word(&img),
                    phi.source.label(v),
                    i,
                    j
                )
            })
        })
        .collect();
    Ok(CheckReport::new(
        &format!("{}-surviving", phi.source.label(v)),
        Some(max_len),
        words.len(),
        violations,
    ))
}

/// Bounded check that every `w` of length at most `max_len` with `x` in its
/// support has `phi*(w)` supported on at least one of `watch`.
pub fn check_support_hits(phi: &GraphHom, x: usize, watch: &[usize], max_len: usize) -> Result<CheckReport> {
    if max_len < 1 {
        return Err(invalid("support bound must be at least 1"));
    }
    let induced = phi.induced()?;
    let dom = phi.target.group();
    let cod = phi.source.group();
    let words = dom.normal_forms(max_len);
    let relevant: Vec<_> = words.iter().filter(|w| w.as_word().letters().iter().any(|l| l.vertex() == x)).collect();
    let watch: BTreeSet<usize> = watch.iter().copied().collect();
    let violations: Vec<String> = relevant
        .par_iter()
        .filter(|w| cod.support(&induced.apply(w.as_word())).is_disjoint(&watch))
        .map(|w| format!("image of {} misses {:?}", dom.format_word(w.as_word()), cod.format_support(&watch)))
        .collect();
    Ok(CheckReport::new("support", Some(max_len), relevant.len(), violations))
}
