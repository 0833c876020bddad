//! Graph moves that preserve embeddability of the group, the tree pipeline
//! built from them, hairy path witnesses and tripod certificates.

use serde::Serialize;
use serde_json::json;

use crate::error::{invalid, Error, Result};
use crate::extgraph::{ext_vertex, verify_ext_witness, witness_to_json, ExtVertex};
use crate::graphs::{fresh_label, HairyDecomposition, SimplicialGraph, TripodObstruction, VertexId};
use crate::homs::{check_support_hits, check_surviving, CheckReport, GraphHom, GroupHom, InducedHom};
use crate::words::Word;

/// Which move produced a [`MoveResult`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub kind: &'static str,
    pub vertex: String,
    pub k: Option<usize>,
}

#[derive(Clone, Debug)]
pub enum MoveWitness {
    /// Extension vertices of the new graph, indexed by old vertex, inducing the old graph.
    Conjugates(Vec<ExtVertex>),
    /// Graph map new -> old whose induced map embeds the old group.
    Hom(Box<InducedHom>),
}

/// A move `old -> new` with `G(old) <= G(new)` and the data to check it.
#[derive(Clone, Debug)]
pub struct MoveResult {
    pub old_graph: SimplicialGraph,
    pub new_graph: SimplicialGraph,
    pub witness: MoveWitness,
    pub provenance: Provenance,
    /// Indices in `new_graph` of the vertices that replace the moved vertex.
    pub new_vertices: Vec<usize>,
    /// Indices in `old_graph`: `[a_1..a_k, b, c]` for the leaf move, `[a, b, c]` for the tripod move.
    pub neighbors: Vec<usize>,
}

impl MoveResult {
    /// The embedding `G(old) -> G(new)` as a group map.
    pub fn group_hom(&self) -> GroupHom {
        match &self.witness {
            MoveWitness::Conjugates(set) => {
                let images = set.iter().map(|v| v.element().clone()).collect();
                GroupHom::new(self.old_graph.clone(), self.new_graph.clone(), images)
                    .expect("witness conjugates live in the new graph")
            }
            MoveWitness::Hom(induced) => induced.as_group_hom().clone(),
        }
    }

    /// Exact induced-subgraph check for the leaf move; relator preservation
    /// and bounded injectivity at `max_len` for the tripod move.
    pub fn verify(&self, max_len: usize) -> Result<Vec<CheckReport>> {
        match &self.witness {
            MoveWitness::Conjugates(set) => {
                let ok = verify_ext_witness(&self.new_graph, &self.old_graph, set);
                let k = set.len();
                let violations = if ok { Vec::new() } else { vec!["conjugates do not induce the old graph".into()] };
                Ok(vec![CheckReport {
                    check: "induced extension subgraph".into(),
                    bound: None,
                    checked: k * k.saturating_sub(1) / 2,
                    violations,
                }])
            }
            MoveWitness::Hom(induced) => {
                let g = induced.as_group_hom();
                Ok(vec![g.relators_preserved(), g.bounded_injectivity(max_len)?])
            }
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let witness = match &self.witness {
            MoveWitness::Conjugates(set) => witness_to_json(&self.old_graph, &self.new_graph, set),
            MoveWitness::Hom(induced) => {
                let dom = self.new_graph.group();
                let images: serde_json::Map<String, serde_json::Value> = induced
                    .as_group_hom()
                    .images()
                    .iter()
                    .enumerate()
                    .map(|(v, w)| (self.old_graph.label(v).to_string(), json!(dom.format_word(w))))
                    .collect();
                let map: serde_json::Map<String, serde_json::Value> = induced
                    .hom()
                    .map()
                    .iter()
                    .enumerate()
                    .map(|(s, &t)| (self.new_graph.label(s).to_string(), json!(self.old_graph.label(t).as_str())))
                    .collect();
                json!({ "graph_map": map, "group_map": images })
            }
        };
        json!({
            "move": self.provenance,
            "old_graph": self.old_graph.to_json(),
            "new_graph": self.new_graph.to_json(),
            "witness": witness,
        })
    }
}

/// Rebuilds `g` with vertex `x` replaced by `count` new vertices named
/// `{x}1..`, dropping `dropped`; returns the graph, the old-to-new index map
/// for kept vertices and the new vertex indices.
fn splice(
    g: &SimplicialGraph,
    x: usize,
    dropped: &[usize],
    count: usize,
    new_edges: impl Fn(&dyn Fn(usize) -> usize) -> Vec<(usize, usize)>,
) -> Result<(SimplicialGraph, Vec<usize>, Vec<usize>)> {
    let kept: Vec<usize> = (0..g.vertex_count()).filter(|&v| v != x && !dropped.contains(&v)).collect();
    let kept_labels: Vec<VertexId> = kept.iter().map(|&v| g.label(v).clone()).collect();
    let mut fresh: Vec<VertexId> = Vec::new();
    for i in 1..=count {
        fresh.push(fresh_label(&kept_labels, format!("{}{i}", g.label(x)), &fresh));
    }
    let mut labels = Vec::new();
    let mut old_to_new = vec![usize::MAX; g.vertex_count()];
    let mut new_vertices = Vec::new();
    for (v, slot) in old_to_new.iter_mut().enumerate() {
        if v == x {
            for l in &fresh {
                new_vertices.push(labels.len());
                labels.push(l.clone());
            }
        } else if !dropped.contains(&v) {
            *slot = labels.len();
            labels.push(g.label(v).clone());
        }
    }
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| old_to_new[u] != usize::MAX && old_to_new[v] != usize::MAX)
        .map(|(u, v)| (old_to_new[u], old_to_new[v]))
        .collect();
    let nv = new_vertices.clone();
    let first = nv[0];
    let o2n = old_to_new.clone();
    let lookup = move |i: usize| if i < count { first + i } else { o2n[i - count] };
    edges.extend(new_edges(&lookup));
    Ok((SimplicialGraph::new(labels, edges)?, old_to_new, new_vertices))
}

/// Replaces `x` (degree `k + 2` with `k >= 1`) and `k` of its leaf
/// neighbours `a_i` with a path `x1 .. x{2k+1}` from `b` to `c`, the two
/// remaining neighbours in canonical order. When more than `k` neighbours are
/// leaves, the last `k` in canonical order are removed.
pub fn move_deg1k(g: &SimplicialGraph, x: usize) -> Result<MoveResult> {
    if x >= g.vertex_count() {
        return Err(invalid(format!("vertex index {x} out of range")));
    }
    let deg = g.degree(x);
    let leaf_count = g.neighbors(x).iter().filter(|&&v| g.degree(v) == 1).count();
    if deg < 3 || leaf_count < deg - 2 {
        return Err(invalid(format!(
            "{} has degree {deg} with {leaf_count} leaf neighbours; need degree k+2 with k >= 1 leaves",
            g.label(x)
        )));
    }
    let k = deg - 2;
    // the last k leaves in canonical order are removed; the other two neighbours are b, c
    let mut leaves: Vec<usize> = g.neighbors(x).iter().rev().filter(|&&v| g.degree(v) == 1).take(k).copied().collect();
    leaves.reverse();
    let others: Vec<usize> = g.neighbors(x).iter().filter(|v| !leaves.contains(v)).copied().collect();
    let (b, c) = (others[0], others[1]);
    let len = 2 * k + 1;
    let (new_graph, old_to_new, nv) = splice(g, x, &leaves, len, |at| {
        // indices below `len` are path positions, the rest are offset old vertices
        let mut e: Vec<(usize, usize)> = (0..len - 1).map(|i| (at(i), at(i + 1))).collect();
        e.push((at(len + b), at(0)));
        e.push((at(len - 1), at(len + c)));
        e
    })?;
    let grp = new_graph.group();
    let mut set = Vec::with_capacity(g.vertex_count());
    let conj: Word = nv[1..].iter().map(|&v| crate::words::Letter::pos(v)).collect();
    for (v, &renamed) in old_to_new.iter().enumerate() {
        let ext = if v == x {
            ext_vertex(&new_graph, nv[0], &conj)?
        } else if let Some(i) = leaves.iter().position(|&a| a == v) {
            ExtVertex::generator(nv[2 * i + 1])
        } else {
            ExtVertex::generator(renamed)
        };
        set.push(ext);
    }
    debug_assert!(grp.is_reduced(&set[x].conjugate_word()));
    let mut neighbors = leaves;
    neighbors.extend([b, c]);
    Ok(MoveResult {
        old_graph: g.clone(),
        new_graph,
        witness: MoveWitness::Conjugates(set),
        provenance: Provenance { kind: "deg1k", vertex: g.label(x).to_string(), k: Some(k) },
        new_vertices: nv,
        neighbors,
    })
}

/// Replaces the tripod at `x` (degree 3, link `{a, b, c}` in canonical order)
/// with the hexagon `a - x3 - b - x1 - c - x2 - a`.
pub fn move_deg3(g: &SimplicialGraph, x: usize) -> Result<MoveResult> {
    if x >= g.vertex_count() {
        return Err(invalid(format!("vertex index {x} out of range")));
    }
    if g.degree(x) != 3 {
        return Err(invalid(format!("{} has degree {}, need 3", g.label(x), g.degree(x))));
    }
    let (a, b, c) = (g.neighbors(x)[0], g.neighbors(x)[1], g.neighbors(x)[2]);
    let (new_graph, old_to_new, nv) = splice(g, x, &[], 3, |at| {
        let o = |v: usize| at(3 + v);
        vec![(o(a), at(2)), (at(2), o(b)), (o(b), at(0)), (at(0), o(c)), (o(c), at(1)), (at(1), o(a))]
    })?;
    let mut map = vec![usize::MAX; new_graph.vertex_count()];
    for v in 0..g.vertex_count() {
        if v != x {
            map[old_to_new[v]] = v;
        }
    }
    for &i in &nv {
        map[i] = x;
    }
    let hom = GraphHom::new(new_graph.clone(), g.clone(), map)?;
    let induced = hom.induced()?;
    Ok(MoveResult {
        old_graph: g.clone(),
        new_graph,
        witness: MoveWitness::Hom(Box::new(induced)),
        provenance: Provenance { kind: "deg3", vertex: g.label(x).to_string(), k: None },
        new_vertices: nv,
        neighbors: vec![a, b, c],
    })
}

/// The three support checks behind injectivity of the tripod move, at `max_len`:
/// with `a` removed, the restricted map survives every vertex but `x2`, `x3`;
/// it puts `x2` or `x3` in the support of every image of a word involving `x`;
/// and the full map survives `a`.
pub fn deg3_support_checks(mv: &MoveResult, max_len: usize) -> Result<Vec<CheckReport>> {
    let MoveWitness::Hom(induced) = &mv.witness else {
        return Err(invalid("support checks apply to the tripod move"));
    };
    let (old, new) = (&mv.old_graph, &mv.new_graph);
    let a = mv.neighbors[0];
    let x = old.vertex(&mv.provenance.vertex)?;
    let a_new = new.vertex(old.label(a).as_str())?;
    let old1 = old.remove(&[a])?;
    let new1 = new.remove(&[a_new])?;
    let map1: Vec<usize> = new1
        .labels()
        .iter()
        .map(|l| {
            let s = new.vertex(l.as_str())?;
            old1.vertex(old.label(induced.hom().map()[s]).as_str())
        })
        .collect::<Result<_>>()?;
    let phi1 = GraphHom::new(new1.clone(), old1.clone(), map1)?;
    let x_new: Vec<usize> =
        mv.new_vertices.iter().map(|&v| new1.vertex(new.label(v).as_str())).collect::<Result<_>>()?;
    let exempt = [x_new[1], x_new[2]];

    let mut restricted = CheckReport {
        check: format!("surviving after removing {}", old.label(a)),
        bound: Some(max_len),
        checked: 0,
        violations: Vec::new(),
    };
    for v in (0..new1.vertex_count()).filter(|v| !exempt.contains(v)) {
        let r = check_surviving(&phi1, v, max_len)?;
        restricted.checked += r.checked;
        restricted.violations.extend(r.violations);
    }
    let x1 = old1.vertex(old.label(x).as_str())?;
    let mut hits = check_support_hits(&phi1, x1, &exempt, max_len)?;
    hits.check = format!("support meets {{{}, {}}}", new1.label(exempt[0]), new1.label(exempt[1]));
    let full = check_surviving(induced.hom(), a_new, max_len)?;
    Ok(vec![restricted, hits, full])
}

/// One verified stage of the tree pipeline.
#[derive(Clone, Debug, Serialize)]
pub struct PipelineStage {
    pub from: String,
    pub to: String,
    #[serde(rename = "move")]
    pub provenance: Provenance,
    pub vertices: usize,
    pub reports: Vec<CheckReport>,
}

/// The chain `T2 -> .. -> C12 -> P22`, with the last edge cited, not checked.
#[derive(Clone, Debug, Serialize)]
pub struct PipelineCertificate {
    pub stages: Vec<PipelineStage>,
    /// Relator preservation and bounded injectivity of the composite `G(T2) -> G(C12)`.
    pub composite: Vec<CheckReport>,
    pub final_graph_is_c12: bool,
    pub external: ExternalEdge,
    #[serde(skip)]
    pub composite_hom: Option<GroupHom>,
    #[serde(skip)]
    pub graphs: Vec<SimplicialGraph>,
}

impl PipelineCertificate {
    pub fn chain(&self) -> Vec<String> {
        let mut out: Vec<String> = self.stages.iter().map(|s| s.from.clone()).collect();
        if let Some(last) = self.stages.last() {
            out.push(last.to.clone());
        }
        out.push(format!("[external] {}", self.external.to));
        out
    }

    pub fn passed(&self) -> bool {
        self.final_graph_is_c12
            && self.stages.iter().flat_map(|s| &s.reports).chain(&self.composite).all(CheckReport::passed)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ExternalEdge {
    pub from: String,
    pub to: String,
    pub statement: String,
    pub verified: bool,
}

fn is_cycle(g: &SimplicialGraph, n: usize) -> bool {
    g.vertex_count() == n && g.is_connected() && (0..n).all(|v| g.degree(v) == 2)
}

/// Tripod move at the center of `T2`, then leaf moves at `a`, `b`, `c`,
/// giving a 12-cycle. Stage checks run at `max_len`; the composite is
/// checked for injectivity at `composite_len`.
pub fn build_t2_pipeline(max_len: usize, composite_len: usize) -> Result<PipelineCertificate> {
    let t2 = SimplicialGraph::t2();
    let mut graphs = vec![t2.clone()];
    let mut stages = Vec::new();
    let step1 = move_deg3(&t2, t2.vertex("x")?)?;
    let mut composite = step1.group_hom();
    stages.push(PipelineStage {
        from: "T2".into(),
        to: "G1".into(),
        provenance: step1.provenance.clone(),
        vertices: step1.new_graph.vertex_count(),
        reports: step1.verify(max_len)?,
    });
    let mut current = step1.new_graph;
    graphs.push(current.clone());
    for (i, label) in ["a", "b", "c"].into_iter().enumerate() {
        let step = move_deg1k(&current, current.vertex(label)?)?;
        composite = composite.compose(&step.group_hom())?;
        let to = if i == 2 { "C12".to_string() } else { format!("G1.{}", i + 1) };
        stages.push(PipelineStage {
            from: stages.last().map(|s: &PipelineStage| s.to.clone()).unwrap_or_default(),
            to,
            provenance: step.provenance.clone(),
            vertices: step.new_graph.vertex_count(),
            reports: step.verify(max_len)?,
        });
        current = step.new_graph;
        graphs.push(current.clone());
    }
    let final_graph_is_c12 = is_cycle(&current, 12);
    let composite_reports = vec![composite.relators_preserved(), composite.bounded_injectivity(composite_len)?];
    Ok(PipelineCertificate {
        stages,
        composite: composite_reports,
        final_graph_is_c12,
        external: ExternalEdge {
            from: "C12".into(),
            to: "P22".into(),
            statement: "G(C_m) embeds in G(P_(2m-2)) for m >= 3; cited, not checked by this tool".into(),
            verified: false,
        },
        composite_hom: Some(composite),
        graphs,
    })
}

/// An induced embedding of a hairy tree into the extension graph of a path.
#[derive(Clone, Debug)]
pub struct HairyWitness {
    pub n: usize,
    pub decomposition: HairyDecomposition,
    pub path: SimplicialGraph,
    /// Indexed by tree vertex.
    pub map: Vec<ExtVertex>,
}

impl HairyWitness {
    pub fn verify(&self, tree: &SimplicialGraph) -> bool {
        verify_ext_witness(&self.path, tree, &self.map)
    }

    pub fn to_json(&self, tree: &SimplicialGraph) -> serde_json::Value {
        json!({
            "n": self.n,
            "decomposition": self.decomposition.to_json(tree),
            "path_labels": self.path.labels().iter().map(|l| l.as_str()).collect::<Vec<_>>(),
            "witness": witness_to_json(tree, &self.path, &self.map),
        })
    }
}

/// Spine vertex `v` with `k > 0` hairs becomes a block `v1 .. v(2k+1)` of the
/// path and maps to `v1^(v2 .. v(2k+1))`; its hairs go to `v2, v4, .., v(2k)`.
/// Hairless spine vertices keep a single path vertex.
pub fn hairy_witness(tree: &SimplicialGraph) -> Result<HairyWitness> {
    let Some(dec) = tree.hairy_path()? else {
        let hint = if tree.find_tripod_obstruction().is_some() {
            "; it contains an induced T2, see the non-embeddability certificate"
        } else {
            ""
        };
        return Err(invalid(format!("tree is not a hairy path{hint}")));
    };
    let mut labels: Vec<VertexId> = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for (i, &v) in dec.spine.iter().enumerate() {
        let k = dec.hairs[i].len();
        let mut block = Vec::new();
        if k == 0 {
            block.push(labels.len());
            labels.push(fresh_label(&[], tree.label(v).to_string(), &labels));
        } else {
            for j in 1..=2 * k + 1 {
                block.push(labels.len());
                labels.push(fresh_label(&[], format!("{}{j}", tree.label(v)), &labels));
            }
        }
        blocks.push(block);
    }
    let n = labels.len();
    let path = SimplicialGraph::new(labels, (0..n.saturating_sub(1)).map(|i| (i, i + 1)))?;
    let mut map = vec![None; tree.vertex_count()];
    for (i, &v) in dec.spine.iter().enumerate() {
        let block = &blocks[i];
        let conj: Word = block[1..].iter().map(|&u| crate::words::Letter::pos(u)).collect();
        map[v] = Some(ext_vertex(&path, block[0], &conj)?);
        for (j, &h) in dec.hairs[i].iter().enumerate() {
            map[h] = Some(ExtVertex::generator(block[2 * j + 1]));
        }
    }
    let map: Vec<ExtVertex> = map.into_iter().map(|v| v.expect("every tree vertex is placed")).collect();
    let witness = HairyWitness { n, decomposition: dec, path, map };
    if !witness.verify(tree) {
        return Err(Error::InvariantFailure("hairy witness does not induce the tree".into()));
    }
    Ok(witness)
}

/// The tripod pattern found in a graph, which rules out every path extension graph.
#[derive(Clone, Debug)]
pub struct NonEmbeddabilityCertificate {
    pub tuple: TripodObstruction,
    pub statement: String,
    pub proof: Vec<String>,
}

impl NonEmbeddabilityCertificate {
    pub fn to_json(&self, g: &SimplicialGraph) -> serde_json::Value {
        json!({ "tuple": self.tuple.to_json(g), "statement": self.statement, "proof": self.proof })
    }
}

pub fn certify_non_embeddability(g: &SimplicialGraph) -> Option<NonEmbeddabilityCertificate> {
    let t = g.find_tripod_obstruction()?;
    let l = |v: usize| g.label(v).as_str();
    let (x, p, q, r, a, b, c) = (l(t.x), l(t.p), l(t.q), l(t.r), l(t.a), l(t.b), l(t.c));
    let proof = vec![
        format!(
            "{{{x}, {p}, {q}, {r}}} is independent, so under any induced embedding into P_n^E its image is an \
             independent set of conjugates; one inner automorphism moves all four onto vertices of P_n"
        ),
        format!(
            "on a path, two of the images of {p}, {q}, {r} lie on the same side of the image of {x}; \
             name them so that {x}, the nearer one, and the farther one appear in this order"
        ),
        format!(
            "{a} (resp. {b}, {c}) is adjacent to {x} and {p} (resp. {q}, {r}) and to neither of the other two, \
             so its image does not commute with the images of {x} and its own partner but commutes with the rest"
        ),
        "the middle vertex p of an independent triple x, p, q on a path separates the other two: a conjugate \
         commuting with p has connected support avoiding Lk(p), so it commutes with x or with q"
            .to_string(),
        "whichever of the three pairs sits in the middle, the matching vertex among a, b, c would commute with \
         the middle image but with neither outer image; contradiction"
            .to_string(),
    ];
    Some(NonEmbeddabilityCertificate {
        tuple: t,
        statement: "does not embed in P_n^E as an induced subgraph for any n".into(),
        proof,
    })
}

/// The three graphs obtained from `T2` by adding edges `b-c`, `a-b, b-c`
/// and `a-b, b-c, a-c`.
pub fn t2_variants() -> Vec<SimplicialGraph> {
    let base = [("x", "a"), ("x", "b"), ("x", "c"), ("a", "p"), ("b", "q"), ("c", "r")];
    let extra: [&[(&str, &str)]; 3] = [&[("b", "c")], &[("a", "b"), ("b", "c")], &[("a", "b"), ("b", "c"), ("a", "c")]];
    extra
        .iter()
        .map(|e| {
            let edges: Vec<(&str, &str)> = base.iter().chain(e.iter()).copied().collect();
            SimplicialGraph::from_labels(&["x", "a", "b", "c", "p", "q", "r"], &edges).expect("valid variant")
        })
        .collect()
}

/// The 4-fold commutator check in `G(P5)`.
#[derive(Clone, Debug, Serialize)]
pub struct CounterexampleReport {
    pub main: String,
    pub main_reduced: String,
    pub main_trivial: bool,
    pub first_trivial: bool,
    pub second_trivial: bool,
}

impl CounterexampleReport {
    pub fn passed(&self) -> bool {
        !self.main_trivial && self.first_trivial && self.second_trivial
    }
}

/// `[x2 x4, x3, x1, x5]` is nontrivial in `G(P5)` although
/// `[x2, x3, x1, x5]` and `[x4, x3, x1, x5]` are both trivial.
pub fn counterexample_check() -> Result<CounterexampleReport> {
    let g = SimplicialGraph::path(5)?;
    let grp = g.group();
    let w = |s: &str| grp.parse_word(s);
    let comm = |first: &str| -> Result<Word> { Ok(grp.iterated_commutator(&[w(first)?, w("x3")?, w("x1")?, w("x5")?])) };
    let main = comm("x2 x4")?;
    let report = CounterexampleReport {
        main: "[x2 x4, x3, x1, x5]".into(),
        main_reduced: grp.format_word(&grp.normal_form(&main).into_word()),
        main_trivial: grp.is_trivial(&main),
        first_trivial: grp.is_trivial(&comm("x2")?),
        second_trivial: grp.is_trivial(&comm("x4")?),
    };
    if report.passed() {
        Ok(report)
    } else {
        Err(Error::InvariantFailure(format!("commutator identities failed: {report:?}")))
    }
}
