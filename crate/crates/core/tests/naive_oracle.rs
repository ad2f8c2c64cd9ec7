//! The library's graph oracle against the naive reference in `common`.

mod common;

use common::Naive;
use indegraph::closed_form::{cf_clique_chromatic, cf_degree, cf_is_hamiltonian};
use indegraph::{ExtendedLength, IndependentGraph, Modulus};

fn m(n: u64) -> Modulus {
    Modulus::new(n).unwrap()
}

fn to_ext(v: Option<u64>) -> ExtendedLength {
    v.map_or(ExtendedLength::Infinite, ExtendedLength::Finite)
}

#[test]
fn adjacency_degrees_and_edges() {
    for n in 2..=120 {
        let naive = Naive::new(n);
        let g = IndependentGraph::build(m(n)).unwrap();
        for a in 0..n {
            for b in 0..n {
                assert_eq!(g.is_adjacent(a, b).unwrap(), naive.adj[a as usize][b as usize], "n={n} a={a} b={b}");
            }
            assert_eq!(g.degree(a).unwrap(), naive.degree(a as usize));
            assert_eq!(cf_degree(a, m(n)).unwrap(), naive.degree(a as usize));
        }
        assert_eq!(g.edge_count(), naive.edge_count(), "n={n}");
    }
}

#[test]
fn distances_and_cycles() {
    for n in 2..=60 {
        let naive = Naive::new(n);
        let g = IndependentGraph::build(m(n)).unwrap();
        assert_eq!(g.diameter(), to_ext(naive.diameter()), "diameter n={n}");
        assert_eq!(g.girth(), to_ext(naive.girth()), "girth n={n}");
        assert!(g.is_connected());
    }
}

#[test]
fn bipartiteness_small() {
    for n in 2..=18 {
        let g = IndependentGraph::build(m(n)).unwrap();
        assert_eq!(g.is_bipartite(), Naive::new(n).is_bipartite(), "n={n}");
        assert_eq!(g.is_bipartite(), common::is_prime(n));
    }
}

#[test]
fn clique_and_chromatic_small() {
    for n in 2..=18 {
        let naive = Naive::new(n);
        let g = IndependentGraph::build(m(n)).unwrap();
        let omega = naive.clique_number();
        assert_eq!(g.clique_number(64).unwrap(), omega, "clique n={n}");
        assert_eq!(omega, common::divisor_count(n));
        assert_eq!(cf_clique_chromatic(m(n)), omega);
        if n <= 10 {
            assert_eq!(g.chromatic_number(64).unwrap(), naive.chromatic_number(), "chromatic n={n}");
        }
    }
}

#[test]
fn hamiltonicity_small() {
    for n in 2..=10 {
        let naive = Naive::new(n).is_hamiltonian();
        let g = IndependentGraph::build(m(n)).unwrap();
        let search = g.find_hamiltonian_cycle(24).unwrap();
        assert_eq!(search.cycle.is_some(), naive, "n={n}");
        if let Some(c) = &search.cycle {
            assert!(g.is_hamiltonian_cycle(c));
        }
        assert_eq!(cf_is_hamiltonian(m(n)), naive, "n={n}");
        // 2φ(n) <= n, computed independently
        assert_eq!(naive, n >= 3 && 2 * common::phi(n) <= n, "n={n}");
    }
}
