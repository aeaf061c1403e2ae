//! The exhaustive oracles against hand-sized instances and a naive
//! enumeration written here from scratch.

use std::collections::VecDeque;

use dcn_core::bcdc::build_bcdc;
use dcn_core::cuts::verify_cut;
use dcn_core::dcell::build_dcell;
use dcn_core::graph::{complete_graph, cycle_graph};
use dcn_core::search::{exists_cut_of_size, g_extra_connectivity, min_structure_cut, CutSearch, SearchBudget};
use dcn_core::{Graph, Mode, ShapeSpec};

/// Does deleting `gone` leave at most one vertex or a disconnected rest?
fn naive_cuts(g: &Graph, gone: &[bool]) -> bool {
    let alive: Vec<usize> = (0..g.vertex_count()).filter(|&v| !gone[v]).collect();
    if alive.len() <= 1 {
        return true;
    }
    let mut seen = vec![false; g.vertex_count()];
    let mut queue = VecDeque::from([alive[0]]);
    seen[alive[0]] = true;
    let mut reached = 1;
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if !gone[w] && !seen[w] {
                seen[w] = true;
                reached += 1;
                queue.push_back(w);
            }
        }
    }
    reached < alive.len()
}

/// Is there a set of `k` edges whose endpoints cut `g`? Brute force over
/// every `k`-subset of the edge list.
fn naive_edge_cut_exists(g: &Graph, k: usize) -> bool {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > edges.len() {
        return false;
    }
    loop {
        let mut gone = vec![false; g.vertex_count()];
        for &i in &idx {
            gone[edges[i].0] = true;
            gone[edges[i].1] = true;
        }
        if naive_cuts(g, &gone) {
            return true;
        }
        // Next combination in lexicographic order.
        let Some(pos) = (0..k).rev().find(|&i| idx[i] != i + edges.len() - k) else {
            return false;
        };
        idx[pos] += 1;
        for j in pos + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn budget() -> SearchBudget {
    SearchBudget::default()
}

#[test]
fn k5_edges_bound_one() {
    let g = complete_graph(5);
    assert_eq!(exists_cut_of_size(&g, ShapeSpec::Star(1), Mode::Structure, 1, &budget()).unwrap(), CutSearch::NotFound);
    assert!(!naive_edge_cut_exists(&g, 1));
    assert!(naive_edge_cut_exists(&g, 2));
}

#[test]
fn d14_edges_bounds_two_and_three() {
    let g = build_dcell(1, 4, 100).unwrap();
    assert_eq!(g.edge_count(), 40);
    assert_eq!(exists_cut_of_size(&g, ShapeSpec::Star(1), Mode::Structure, 2, &budget()).unwrap(), CutSearch::NotFound);
    assert!(!naive_edge_cut_exists(&g, 2));
    match exists_cut_of_size(&g, ShapeSpec::Star(1), Mode::Structure, 3, &budget()).unwrap() {
        CutSearch::Found(w) => {
            assert_eq!(w.len(), 3);
            assert!(verify_cut(&g, &w, ShapeSpec::Star(1), Mode::Structure).pass);
        }
        other => panic!("expected a witness, got {other:?}"),
    }
    assert!(naive_edge_cut_exists(&g, 3));
}

#[test]
fn minimum_examples() {
    let r = min_structure_cut(&complete_graph(5), ShapeSpec::Star(1), Mode::Structure, &budget()).unwrap();
    assert_eq!(r.value, Some(2));
    let b4 = build_bcdc(4, 1000).unwrap();
    let r = min_structure_cut(&b4, ShapeSpec::Star(1), Mode::Structure, &budget()).unwrap();
    assert_eq!(r.value, Some(4));
    assert!(verify_cut(&b4, r.witness.as_ref().unwrap(), ShapeSpec::Star(1), Mode::Structure).pass);
    let r = min_structure_cut(&cycle_graph(6), ShapeSpec::Single, Mode::Structure, &budget()).unwrap();
    assert_eq!(r.value, Some(2));
}

#[test]
fn extra_connectivity_examples() {
    let b3 = build_bcdc(3, 1000).unwrap();
    assert_eq!(g_extra_connectivity(&b3, 0, &budget()).unwrap().value, Some(4));
    assert_eq!(g_extra_connectivity(&cycle_graph(6), 0, &budget()).unwrap().value, Some(2));
    let b4 = build_bcdc(4, 1000).unwrap();
    assert_eq!(g_extra_connectivity(&b4, 0, &budget()).unwrap().value, Some(6));
    let r = g_extra_connectivity(&b4, 1, &budget()).unwrap();
    assert_eq!(r.value, Some(8));
    let w = r.witness.unwrap();
    let rest = b4.without(&w);
    let comps = rest.components();
    assert!(comps.len() >= 2 && comps.iter().all(|c| c.len() >= 2));
}

#[test]
fn no_three_edges_cut_b4() {
    // Independent check of the B_4 edge minimum: no 3 edges cut it.
    let b4 = build_bcdc(4, 1000).unwrap();
    assert!(!naive_edge_cut_exists(&b4, 3));
}
