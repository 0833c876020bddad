//! Batch front end for `raag-core`.
//!
//! Graphs are read in the opposite convention (adjacent generators do not
//! commute). With `--convention raag` every input graph is complemented on
//! the way in, so commuting generators are the adjacent ones.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use raag_core::constructions::{
    build_t2_pipeline, certify_non_embeddability, counterexample_check, deg3_support_checks, hairy_witness,
    move_deg1k, move_deg3, MoveResult,
};
use raag_core::extgraph::{
    enumerate_vertices, ext_adjacent, induced_ext_subgraph, parse_ext_vertex, parse_ext_vertex_list, push_to_base,
    search_induced_embedding_ext, verify_ext_witness, verify_lemma_path, witness_from_json, witness_to_json,
};
use raag_core::homs::{CheckReport, HomFile};
use raag_core::suite::{run_all, DEFAULT_SEED};
use raag_core::{Error, SimplicialGraph, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Convention {
    /// Adjacent generators commute
    Raag,
    /// Adjacent generators do not commute
    Opposite,
}

#[derive(Debug, Parser)]
#[command(name = "raag", version, about = "Words, extension graphs and embedding certificates for graph groups")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Graph file (text or JSON), or `builtin:NAME` with NAME one of Pn, Cn, Kn, T2
    #[arg(long, global = true)]
    pub graph: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Convention::Opposite)]
    pub convention: Convention,
    /// Conjugator radius for extension-graph work
    #[arg(long, global = true)]
    pub radius: Option<usize>,
    /// Word-length bound for bounded checks
    #[arg(long, global = true)]
    pub length: Option<usize>,
    /// Write the JSON report here
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Seed for sampled checks
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduce a word
    Reduce { word: Vec<String> },
    /// Canonical normal form of a word
    Nf { word: Vec<String> },
    /// Whether two elements commute
    Commute { u: String, w: String },
    /// Left-normed iterated commutator of the given elements
    Comm { elements: Vec<String> },
    /// Support of an element
    Support { word: Vec<String> },
    /// Whether two extension vertices are adjacent (do not commute)
    ExtAdjacent { u: String, v: String },
    /// List extension vertices up to --radius
    ExtEnumerate,
    /// Induced subgraph of the extension graph on the given vertices
    ExtInduced { vertices: Vec<String> },
    /// Bounded search for an induced copy of --pattern in the extension graph
    EmbedSearch {
        #[arg(long)]
        pattern: String,
    },
    /// Recheck a witness file against --pattern and --graph
    VerifyWitness {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        witness: PathBuf,
    },
    /// Conjugate an independent set of extension vertices onto generators
    PushToBase { vertices: Vec<String> },
    /// Replace a vertex with k leaves by a path of length 2k+1
    MoveDeg1k {
        #[arg(long)]
        vertex: String,
    },
    /// Replace a tripod by a hexagon
    MoveDeg3 {
        #[arg(long)]
        vertex: String,
        /// Also run the three support checks behind injectivity
        #[arg(long)]
        support_checks: bool,
    },
    /// Chain of moves from T2 to C12
    PipelineT2,
    /// Hairy path decomposition and witness, or a T2 certificate
    Hairy,
    /// Look for the tripod obstruction pattern
    Obstruct,
    /// Exhaustive check of the path commutation lemma
    VerifyLemmaPath {
        #[arg(long, default_value_t = 5)]
        n: usize,
    },
    /// The 4-fold commutator example in G(P5)
    Counterexample,
    /// Run every acceptance check
    VerifyAll,
    /// Check a graph homomorphism file and its induced group map
    HomVerify {
        #[arg(long)]
        hom: PathBuf,
        /// Also check the surviving property at every source vertex
        #[arg(long)]
        surviving: bool,
    },
}

/// Exit status and output of one run.
#[derive(Debug)]
pub struct Outcome {
    /// 0 success, 1 verification failure, 2 usage or parse error.
    pub code: i32,
    pub summary: String,
    pub report: Option<Value>,
}

enum Fail {
    Usage(String),
    Verification(String, Option<Value>),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        match e {
            Error::InvariantFailure(m) => Fail::Verification(m, None),
            other => Fail::Usage(other.to_string()),
        }
    }
}

type Res = Result<(String, Value), Fail>;

const DEFAULT_RADIUS: usize = 2;
const DEFAULT_LENGTH: usize = 5;

/// Runs one command; writes the JSON report to `--out` when given.
pub fn run(config: &RunConfig) -> Outcome {
    let (code, summary, report) = match dispatch(config) {
        Ok((s, r)) => (0, s, Some(r)),
        Err(Fail::Verification(s, r)) => (1, s, r),
        Err(Fail::Usage(s)) => return Outcome { code: 2, summary: format!("error: {s}"), report: None },
    };
    if let (Some(path), Some(r)) = (&config.out, &report) {
        let text = serde_json::to_string_pretty(r).expect("reports serialize");
        if let Err(e) = fs::write(path, text + "\n") {
            return Outcome { code: 2, summary: format!("error: writing {}: {e}", path.display()), report };
        }
    }
    Outcome { code, summary, report }
}

pub fn builtin_graph(name: &str) -> Option<SimplicialGraph> {
    let num = |prefix: char| name.strip_prefix(prefix).and_then(|n| n.parse::<usize>().ok());
    match name {
        "T2" => Some(SimplicialGraph::t2()),
        _ if name.starts_with('P') => num('P').and_then(|n| SimplicialGraph::path(n).ok()),
        _ if name.starts_with('C') => num('C').and_then(|n| SimplicialGraph::cycle(n).ok()),
        _ if name.starts_with('K') => num('K').map(SimplicialGraph::complete),
        _ => None,
    }
}

fn load_graph_raw(spec: &str) -> Result<SimplicialGraph, Fail> {
    if let Some(name) = spec.strip_prefix("builtin:") {
        return builtin_graph(name).ok_or_else(|| Fail::Usage(format!("unknown builtin graph {name:?}")));
    }
    let text = fs::read_to_string(spec).map_err(|e| Fail::Usage(format!("reading {spec}: {e}")))?;
    raag_core::graphs::parse_graph(&text).map_err(|e| Fail::Usage(format!("{spec}: {e}")))
}

impl RunConfig {
    fn convert(&self, g: SimplicialGraph) -> SimplicialGraph {
        match self.convention {
            Convention::Opposite => g,
            Convention::Raag => g.complement(),
        }
    }

    fn load(&self, spec: &str) -> Result<SimplicialGraph, Fail> {
        Ok(self.convert(load_graph_raw(spec)?))
    }

    fn graph(&self) -> Result<SimplicialGraph, Fail> {
        let spec = self.graph.as_deref().ok_or_else(|| Fail::Usage("this command needs --graph".into()))?;
        self.load(spec)
    }

    fn radius(&self) -> usize {
        self.radius.unwrap_or(DEFAULT_RADIUS)
    }

    fn length(&self) -> usize {
        self.length.unwrap_or(DEFAULT_LENGTH)
    }
}

fn word_arg(g: &SimplicialGraph, parts: &[String]) -> Result<Word, Fail> {
    Ok(g.group().parse_word(&parts.join(" "))?)
}

fn reports_outcome(title: String, reports: &[CheckReport], mut report: Value) -> Res {
    let mut text = title;
    for r in reports {
        let bound = r.bound.map(|b| format!(" (length <= {b})")).unwrap_or_default();
        let _ = write!(text, "\n  {}{bound}: {} checked, {} violations", r.check, r.checked, r.violations.len());
        if let Some(v) = r.violations.first() {
            let _ = write!(text, "; first: {v}");
        }
    }
    report["reports"] = serde_json::to_value(reports).expect("reports serialize");
    if reports.iter().all(CheckReport::passed) {
        Ok((text, report))
    } else {
        Err(Fail::Verification(text, Some(report)))
    }
}

fn move_outcome(mv: &MoveResult, length: usize) -> Res {
    let reports = mv.verify(length)?;
    let title = format!(
        "{} move at {}: {} -> {} vertices\n{}",
        mv.provenance.kind,
        mv.provenance.vertex,
        mv.old_graph.vertex_count(),
        mv.new_graph.vertex_count(),
        mv.new_graph.to_text().trim_end()
    );
    reports_outcome(title, &reports, mv.to_json())
}

fn dispatch(cfg: &RunConfig) -> Res {
    match &cfg.command {
        Command::Reduce { word } => {
            let g = cfg.graph()?;
            let grp = g.group();
            let w = word_arg(&g, word)?;
            let r = grp.reduce(&w);
            let s = grp.format_word(&r);
            Ok((format!("{s}\n(length {} -> {})", w.len(), r.len()), json!({ "input": grp.format_word(&w), "reduced": s, "length": r.len() })))
        }
        Command::Nf { word } => {
            let g = cfg.graph()?;
            let grp = g.group();
            let nf = grp.normal_form(&word_arg(&g, word)?);
            let s = grp.format_word(nf.as_word());
            Ok((s.clone(), json!({ "normal_form": s, "length": nf.len() })))
        }
        Command::Commute { u, w } => {
            let g = cfg.graph()?;
            let grp = g.group();
            let (u, w) = (grp.parse_word(u)?, grp.parse_word(w)?);
            let c = grp.commute_elements(&u, &w);
            Ok((if c { "commute" } else { "do not commute" }.to_string(), json!({ "commute": c })))
        }
        Command::Comm { elements } => {
            let g = cfg.graph()?;
            let grp = g.group();
            if elements.len() < 2 {
                return Err(Fail::Usage("comm needs at least two elements".into()));
            }
            let gs = elements.iter().map(|e| grp.parse_word(e)).collect::<raag_core::Result<Vec<_>>>()?;
            let c = grp.normal_form(&grp.iterated_commutator(&gs));
            let s = grp.format_word(c.as_word());
            let shown = if c.is_empty() { "1".to_string() } else { s.clone() };
            Ok((format!("[{}] = {shown}", elements.join(", ")), json!({ "commutator": s, "trivial": c.is_empty() })))
        }
        Command::Support { word } => {
            let g = cfg.graph()?;
            let grp = g.group();
            let supp = grp.format_support(&grp.support(&word_arg(&g, word)?));
            Ok((format!("{{{}}}", supp.join(", ")), json!({ "support": supp })))
        }
        Command::ExtAdjacent { u, v } => {
            let g = cfg.graph()?;
            let (a, b) = (parse_ext_vertex(&g, u)?, parse_ext_vertex(&g, v)?);
            let adj = ext_adjacent(&g, &a, &b);
            let text = format!("{} and {} are {}", a.display(&g), b.display(&g), if adj { "adjacent" } else { "not adjacent" });
            Ok((text, json!({ "adjacent": adj })))
        }
        Command::ExtEnumerate => {
            let g = cfg.graph()?;
            let vs: Vec<String> = enumerate_vertices(&g, cfg.radius()).iter().map(|v| v.display(&g).to_string()).collect();
            Ok((format!("{} vertices with radius <= {}\n{}", vs.len(), cfg.radius(), vs.join("\n")), json!({ "radius": cfg.radius(), "vertices": vs })))
        }
        Command::ExtInduced { vertices } => {
            let g = cfg.graph()?;
            let set = parse_ext_vertex_list(&g, &vertices.join(" "))?;
            let view = induced_ext_subgraph(&g, &set)?;
            let names: Vec<String> = set.iter().map(|v| v.display(&g).to_string()).collect();
            let edges: Vec<[&str; 2]> = view.graph.edges().into_iter().map(|(i, j)| [names[i].as_str(), names[j].as_str()]).collect();
            let text = edges.iter().map(|e| format!("{} -- {}", e[0], e[1])).collect::<Vec<_>>().join("\n");
            Ok((format!("{} vertices, {} edges\n{text}", names.len(), edges.len()), json!({ "vertices": names, "edges": edges })))
        }
        Command::EmbedSearch { pattern } => {
            let g = cfg.graph()?;
            let p = cfg.load(pattern)?;
            let r = cfg.radius();
            match search_induced_embedding_ext(&p, &g, r)? {
                Some(w) => {
                    let wj = witness_to_json(&p, &g, &w);
                    let lines: Vec<String> = (0..p.vertex_count()).map(|i| format!("{} -> {}", p.label(i), w[i].display(&g))).collect();
                    Ok((format!("witness found within radius {r}\n{}", lines.join("\n")), json!({ "found": true, "radius": r, "witness": wj })))
                }
                None => Ok((format!("no witness within radius {r}"), json!({ "found": false, "radius": r }))),
            }
        }
        Command::VerifyWitness { pattern, witness } => {
            let g = cfg.graph()?;
            let p = cfg.load(pattern)?;
            let text = fs::read_to_string(witness).map_err(|e| Fail::Usage(format!("reading {}: {e}", witness.display())))?;
            let value: Value = serde_json::from_str(&text).map_err(|e| Fail::Usage(format!("{}: {e}", witness.display())))?;
            let inner = value.get("witness").unwrap_or(&value);
            let map = witness_from_json(&p, &g, inner)?;
            if verify_ext_witness(&g, &p, &map) {
                Ok(("witness verified".into(), json!({ "verified": true })))
            } else {
                Err(Fail::Verification("witness does not induce the pattern".into(), Some(json!({ "verified": false }))))
            }
        }
        Command::PushToBase { vertices } => {
            let g = cfg.graph()?;
            let set = parse_ext_vertex_list(&g, &vertices.join(" "))?;
            let r = push_to_base(&g, &set)?;
            let w = g.group().format_word(&r.conjugator);
            let images: Vec<&str> = r.images.iter().map(|&b| g.label(b).as_str()).collect();
            let shown = if w.is_empty() { "1".to_string() } else { w.clone() };
            Ok((format!("w = {shown}; images under g -> w g w^-1: {}", images.join(", ")), json!({ "conjugator": w, "images": images })))
        }
        Command::MoveDeg1k { vertex } => {
            let g = cfg.graph()?;
            move_outcome(&move_deg1k(&g, g.vertex(vertex)?)?, cfg.length())
        }
        Command::MoveDeg3 { vertex, support_checks } => {
            let g = cfg.graph()?;
            let mv = move_deg3(&g, g.vertex(vertex)?)?;
            if *support_checks {
                let mut reports = mv.verify(cfg.length())?;
                reports.extend(deg3_support_checks(&mv, cfg.length())?);
                let title = format!("deg3 move at {} with support checks", mv.provenance.vertex);
                return reports_outcome(title, &reports, mv.to_json());
            }
            move_outcome(&mv, cfg.length())
        }
        Command::PipelineT2 => {
            let cert = build_t2_pipeline(cfg.length(), cfg.length())?;
            let mut reports: Vec<CheckReport> = cert.stages.iter().flat_map(|s| s.reports.clone()).collect();
            reports.extend(cert.composite.clone());
            let title = format!(
                "{}\nlast edge {} -> {}: {}",
                cert.chain().join(" -> "),
                cert.external.from,
                cert.external.to,
                cert.external.statement
            );
            let report = serde_json::to_value(&cert).expect("certificate serializes");
            if !cert.final_graph_is_c12 {
                return Err(Fail::Verification(format!("{title}\nfinal graph is not C12"), Some(report)));
            }
            reports_outcome(title, &reports, report)
        }
        Command::Hairy => {
            let g = cfg.graph()?;
            if !g.is_tree() {
                return Err(Fail::Usage("hairy needs a tree".into()));
            }
            match g.hairy_path()? {
                Some(_) => {
                    let w = hairy_witness(&g)?;
                    let lines: Vec<String> = (0..g.vertex_count()).map(|i| format!("{} -> {}", g.label(i), w.map[i].display(&w.path))).collect();
                    Ok((format!("hairy path; embeds in P{}^E\n{}", w.n, lines.join("\n")), w.to_json(&g)))
                }
                None => {
                    let cert = certify_non_embeddability(&g)
                        .ok_or_else(|| Fail::Verification("not hairy but no tripod pattern found".into(), None))?;
                    Ok(("not hairy; induced T2 found".into(), json!({ "hairy": false, "certificate": cert.to_json(&g) })))
                }
            }
        }
        Command::Obstruct => {
            let g = cfg.graph()?;
            match certify_non_embeddability(&g) {
                Some(cert) => {
                    let t = cert.tuple.to_json(&g);
                    let text = format!("tripod pattern {t}\n{}\n- {}", cert.statement, cert.proof.join("\n- "));
                    Ok((text, cert.to_json(&g)))
                }
                None => Ok(("no tripod pattern found".into(), json!({ "certificate": null }))),
            }
        }
        Command::VerifyLemmaPath { n } => {
            let r = verify_lemma_path(*n, cfg.radius())?;
            let text = format!(
                "P{}: {} triples, {} vertices of radius <= {}, {} commuting pairs, no violations",
                r.n, r.triples, r.vertices, r.radius, r.checked
            );
            Ok((text, serde_json::to_value(&r).expect("report serializes")))
        }
        Command::Counterexample => {
            let r = counterexample_check()?;
            let text = format!(
                "{} = {} (nontrivial)\n[x2, x3, x1, x5] = 1\n[x4, x3, x1, x5] = 1",
                r.main, r.main_reduced
            );
            Ok((text, serde_json::to_value(&r).expect("report serializes")))
        }
        Command::VerifyAll => {
            let seed = cfg.seed.unwrap_or(DEFAULT_SEED);
            let reports = run_all(seed);
            let text = reports
                .iter()
                .map(|r| format!("[{}] {:>2} {}: {}", if r.passed { "PASS" } else { "FAIL" }, r.id, r.name, r.detail))
                .collect::<Vec<_>>()
                .join("\n");
            let report = json!({ "seed": seed, "criteria": reports });
            if reports.iter().all(|r| r.passed) {
                Ok((text, report))
            } else {
                Err(Fail::Verification(text, Some(report)))
            }
        }
        Command::HomVerify { hom, surviving } => {
            let text = fs::read_to_string(hom).map_err(|e| Fail::Usage(format!("reading {}: {e}", hom.display())))?;
            let file = HomFile::parse(&text).map_err(|e| Fail::Usage(format!("{}: {e}", hom.display())))?;
            let base = hom.parent().unwrap_or(Path::new("."));
            let resolve = |r: &str| -> Result<SimplicialGraph, Fail> {
                if r.starts_with("builtin:") || Path::new(r).is_absolute() {
                    cfg.load(r)
                } else {
                    cfg.load(&base.join(r).to_string_lossy())
                }
            };
            let phi = file.resolve(resolve(&file.source_ref)?, resolve(&file.target_ref)?)?;
            if !phi.is_graph_hom() {
                return Err(Fail::Verification("map does not preserve adjacency".into(), Some(json!({ "graph_hom": false }))));
            }
            let induced = phi.induced()?;
            let g = induced.as_group_hom();
            let mut reports = vec![g.relators_preserved(), g.bounded_injectivity(cfg.length())?];
            if *surviving {
                for v in 0..phi.source().vertex_count() {
                    reports.push(raag_core::homs::check_surviving(&phi, v, cfg.length())?);
                }
            }
            reports_outcome("graph homomorphism; induced map".into(), &reports, json!({ "graph_hom": true }))
        }
    }
}
