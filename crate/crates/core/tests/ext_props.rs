mod common;

use std::collections::HashSet;

use common::*;
use proptest::prelude::*;
use raag_core::extgraph::*;
use raag_core::{ExtVertex, SimplicialGraph, Word};

fn arb_ext(g: &SimplicialGraph, max_len: usize) -> impl Strategy<Value = ExtVertex> {
    let g = g.clone();
    (0..g.vertex_count(), arb_word(g.vertex_count(), max_len)).prop_map(move |(a, w)| ext_vertex(&g, a, &w).unwrap())
}

fn graph_with_pair(max_n: usize) -> impl Strategy<Value = (SimplicialGraph, ExtVertex, ExtVertex, Word)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g.clone()), arb_ext(&g, 4), arb_ext(&g, 4), arb_word(n, 3))
    })
}

proptest! {
    #[test]
    fn canonical_conjugate_is_reduced_and_equal((g, u, _v, w) in graph_with_pair(6)) {
        let grp = g.group();
        prop_assert!(grp.is_reduced(&u.conjugate_word()));
        prop_assert!(grp.equal(&u.conjugate_word(), u.element()));
        // re-conjugating by w agrees with the group conjugate
        let moved = ext_vertex(&g, u.base(), &(u.conjugator().as_word() * &w)).unwrap();
        prop_assert!(grp.equal(moved.element(), &grp.conjugate(u.element(), &w)));
    }

    #[test]
    fn adjacency_symmetric_and_matches_commutators((g, u, v, _w) in graph_with_pair(6)) {
        prop_assert!(!ext_adjacent(&g, &u, &u));
        prop_assert_eq!(ext_adjacent(&g, &u, &v), ext_adjacent(&g, &v, &u));
        prop_assert_eq!(ext_adjacent(&g, &u, &v), ext_adjacent_by_commutator(&g, &u, &v));
    }

    #[test]
    fn adjacency_is_conjugation_equivariant((g, u, v, w) in graph_with_pair(6)) {
        let ug = ext_vertex(&g, u.base(), &(u.conjugator().as_word() * &w)).unwrap();
        let vg = ext_vertex(&g, v.base(), &(v.conjugator().as_word() * &w)).unwrap();
        prop_assert_eq!(ext_adjacent(&g, &u, &v), ext_adjacent(&g, &ug, &vg));
    }

    #[test]
    fn display_round_trips((g, u, _v, _w) in graph_with_pair(6)) {
        prop_assert_eq!(parse_ext_vertex(&g, &u.display(&g).to_string()).unwrap(), u);
    }

    #[test]
    fn generators_induce_the_base_graph(g in arb_graph(7)) {
        let gens: Vec<ExtVertex> = (0..g.vertex_count()).map(ExtVertex::generator).collect();
        let view = induced_ext_subgraph(&g, &gens).unwrap();
        prop_assert_eq!(view.graph.edges(), g.edges());
    }

    #[test]
    fn enumeration_is_deduplicated_and_complete(g in arb_graph(5)) {
        let grp = g.group();
        let vs = enumerate_vertices(&g, 2);
        let set: HashSet<&ExtVertex> = vs.iter().collect();
        prop_assert_eq!(set.len(), vs.len());
        for v in &vs {
            let mut sums = vec![0i32; g.vertex_count()];
            for l in v.element().letters() { sums[l.vertex()] += l.sign() as i32; }
            prop_assert!(sums.iter().enumerate().all(|(i, &s)| s == (i == v.base()) as i32));
            prop_assert!(v.radius() <= 2);
        }
        // every conjugate by a word of length <= 2 is listed
        for a in 0..g.vertex_count() {
            for w in grp.normal_forms(2) {
                let v = ext_vertex(&g, a, w.as_word()).unwrap();
                prop_assert!(set.contains(&v));
            }
        }
    }

    #[test]
    fn push_to_base_lands_on_generators(seed in any::<u64>(), n in 4usize..7) {
        let g = SimplicialGraph::path(n).unwrap();
        let grp = g.group();
        let pool = enumerate_vertices(&g, 2);
        let mut set: Vec<ExtVertex> = Vec::new();
        let mut s = seed;
        for _ in 0..pool.len() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let c = &pool[(s >> 33) as usize % pool.len()];
            if set.iter().all(|u| u != c && !ext_adjacent(&g, u, c)) { set.push(c.clone()); }
            if set.len() == 3 { break; }
        }
        let r = push_to_base(&g, &set).unwrap();
        for (v, &b) in set.iter().zip(&r.images) {
            let moved = r.conjugator.clone() * v.element() * r.conjugator.inverse();
            prop_assert!(grp.equal(&moved, &Word::generator(b)));
        }
    }
}

/// Every injective assignment of pattern vertices to pool vertices.
fn brute_force_exists(pattern: &SimplicialGraph, g: &SimplicialGraph, pool: &[ExtVertex]) -> bool {
    fn go(i: usize, map: &mut Vec<ExtVertex>, pattern: &SimplicialGraph, g: &SimplicialGraph, pool: &[ExtVertex]) -> bool {
        if i == pattern.vertex_count() {
            return true;
        }
        for c in pool {
            let ok = map.iter().enumerate().all(|(j, u)| u != c && ext_adjacent(g, u, c) == pattern.adjacent(i, j));
            if ok {
                map.push(c.clone());
                if go(i + 1, map, pattern, g, pool) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    go(0, &mut Vec::new(), pattern, g, pool)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn search_agrees_with_brute_force(p in arb_graph(4), n in 2usize..5) {
        let g = SimplicialGraph::path(n).unwrap();
        let pool = enumerate_vertices(&g, 1);
        let found = search_in_pool(&p, &g, &pool).unwrap();
        if let Some(w) = &found {
            prop_assert!(verify_ext_witness(&g, &p, w));
        }
        // anchoring on generators loses nothing
        prop_assert_eq!(found.is_some(), brute_force_exists(&p, &g, &pool));
    }
}

#[test]
fn witness_files_round_trip() {
    let star = SimplicialGraph::tripod(1, 1, 1).unwrap();
    let g = SimplicialGraph::path(5).unwrap();
    let w = search_induced_embedding_ext(&star, &g, 2).unwrap().unwrap();
    let json = witness_to_json(&star, &g, &w).to_string();
    let back = witness_from_json(&star, &g, &serde_json::from_str(&json).unwrap()).unwrap();
    assert!(verify_ext_witness(&g, &star, &back));
}

#[test]
fn no_t2_in_small_path_extension_graphs() {
    let t2 = SimplicialGraph::t2();
    for n in 1..=6 {
        assert!(search_induced_embedding_ext(&t2, &SimplicialGraph::path(n).unwrap(), 2).unwrap().is_none());
    }
}
