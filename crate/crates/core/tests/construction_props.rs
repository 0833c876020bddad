mod common;

use common::*;
use proptest::prelude::*;
use raag_core::constructions::*;
use raag_core::extgraph::search_induced_embedding_ext;
use raag_core::homs::CheckReport;
use raag_core::SimplicialGraph;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]
    #[test]
    fn hairy_trees_get_verified_witnesses(t in arb_tree(10)) {
        if let Some(dec) = t.hairy_path().unwrap() {
            let w = hairy_witness(&t).unwrap();
            prop_assert!(w.verify(&t));
            prop_assert_eq!(w.n, dec.m() + 2 * dec.total_hairs());
        } else {
            prop_assert!(certify_non_embeddability(&t).is_some());
            prop_assert!(hairy_witness(&t).is_err());
        }
    }

    #[test]
    fn leaf_moves_verify_on_random_hosts(g in arb_graph(6), k in 1usize..4) {
        // attach a fresh vertex x with k leaves and two anchors in g
        let n = g.vertex_count();
        prop_assume!(n >= 2);
        let mut labels: Vec<String> = g.labels().iter().map(|l| l.to_string()).collect();
        let mut edges: Vec<(String, String)> = g.edges().into_iter().map(|(u, v)| (labels[u].clone(), labels[v].clone())).collect();
        labels.push("x".into());
        edges.push(("x".into(), labels[0].clone()));
        edges.push(("x".into(), labels[1].clone()));
        for i in 1..=k {
            labels.push(format!("a{i}"));
            edges.push(("x".into(), format!("a{i}")));
        }
        let l: Vec<&str> = labels.iter().map(String::as_str).collect();
        let e: Vec<(&str, &str)> = edges.iter().map(|(u, v)| (u.as_str(), v.as_str())).collect();
        let host = SimplicialGraph::from_labels(&l, &e).unwrap();
        let mv = move_deg1k(&host, host.vertex("x").unwrap()).unwrap();
        prop_assert!(mv.verify(1).unwrap().iter().all(CheckReport::passed));
    }
}

#[test]
fn certificates_never_contradict_search() {
    let mut graphs = vec![SimplicialGraph::t2()];
    graphs.extend(t2_variants());
    for g in &graphs {
        assert!(certify_non_embeddability(g).is_some());
        for n in 1..=7 {
            let p = SimplicialGraph::path(n).unwrap();
            assert!(search_induced_embedding_ext(g, &p, 2).unwrap().is_none());
        }
    }
}

#[test]
fn tripod_move_on_star_yields_c6_with_injective_map() {
    let star = SimplicialGraph::tripod(1, 1, 1).unwrap();
    let mv = move_deg3(&star, 0).unwrap();
    assert_eq!(mv.new_graph.vertex_count(), 6);
    assert!(mv.verify(5).unwrap().iter().all(CheckReport::passed));
}

#[test]
fn pipeline_graph_sizes() {
    let cert = build_t2_pipeline(2, 3).unwrap();
    assert_eq!(cert.stages[0].vertices, 9);
    assert_eq!(cert.stages.last().unwrap().vertices, 12);
    assert!(cert.final_graph_is_c12);
    assert_eq!(cert.chain().last().unwrap(), "[external] P22");
    assert!(!cert.external.verified);
    assert!(cert.passed());
}

#[test]
fn figure_six_like_leaf_move() {
    // the leaf move at x of the spine tree gives back a hairy path with one fewer hair
    let t = raag_core::suite::figure_six_tree();
    let mv = move_deg1k(&t, t.vertex("x").unwrap()).unwrap();
    assert!(mv.verify(1).unwrap()[0].passed());
    assert_eq!(mv.new_graph.hairy_path().unwrap().unwrap().total_hairs(), 2);
}
