//! Explicit construction of the independent graph and brute-force invariants.
//!
//! Nothing here uses the order-class structure of the graph: every invariant is
//! computed from the adjacency relation alone, so these results can serve as
//! ground truth for the closed forms and for the audited statements.

use std::collections::{HashMap, HashSet};

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::{is_star_profile, DegreeSequence, ExtendedLength, InvariantSet};
use crate::zn::{element_order, Modulus, OrderDecomposition};

pub const DEFAULT_BUILD_LIMIT: u64 = 20_000;
pub const DEFAULT_EXACT_SEARCH_LIMIT: u64 = 64;
pub const DEFAULT_HAMILTONIAN_LIMIT: u64 = 24;

/// Size limits for brute-force work. Exceeding one is a [`Error::Capacity`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleLimits {
    /// Largest `n` for which the explicit graph is built.
    #[serde(rename = "oracle_build_limit")]
    pub build: u64,
    /// Largest `n` for exact clique and chromatic number searches.
    #[serde(rename = "exact_search_limit")]
    pub exact_search: u64,
    /// Largest `n` for the Hamiltonian cycle search.
    #[serde(rename = "hamiltonian_limit")]
    pub hamiltonian: u64,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            build: DEFAULT_BUILD_LIMIT,
            exact_search: DEFAULT_EXACT_SEARCH_LIMIT,
            hamiltonian: DEFAULT_HAMILTONIAN_LIMIT,
        }
    }
}

/// `I_G(Z_n)`: vertices `0..n`, with `a ~ b` iff `a != b` and `o(a) != o(b)`.
#[derive(Clone, Debug)]
pub struct IndependentGraph {
    modulus: Modulus,
    orders: Vec<u64>,
    rows: Vec<FixedBitSet>,
}

/// A maximum clique, vertices ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clique(pub Vec<u64>);

/// An optimal proper coloring: `colors[v]` is in `0..color_count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub color_count: u64,
    pub colors: Vec<u32>,
}

/// Outcome of the exhaustive Hamiltonian cycle search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HamiltonianSearch {
    /// Canonical cycle (starts at 0, second vertex smaller than the last), or
    /// `None` when the search space was exhausted.
    pub cycle: Option<Vec<u64>>,
    /// Search nodes visited; a certificate size for negative answers.
    pub nodes_explored: u64,
}

impl IndependentGraph {
    /// Builds with the default build limit.
    pub fn build(n: Modulus) -> Result<Self> {
        Self::build_with_limit(n, DEFAULT_BUILD_LIMIT)
    }

    pub fn build_with_limit(n: Modulus, limit: u64) -> Result<Self> {
        let m = n.get();
        if m > limit {
            return Err(Error::Capacity { what: "graph construction", n: m, limit });
        }
        let size = m as usize;
        let orders: Vec<u64> = (0..m)
            .map(|a| element_order(a, n))
            .collect::<Result<_>>()?;
        let mut rows = vec![FixedBitSet::with_capacity(size); size];
        for a in 0..size {
            for b in (a + 1)..size {
                if orders[a] != orders[b] {
                    rows[a].insert(b);
                    rows[b].insert(a);
                }
            }
        }
        Ok(IndependentGraph { modulus: n, orders, rows })
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn vertex_count(&self) -> usize {
        self.rows.len()
    }

    /// Additive order of each vertex, indexed by residue.
    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    fn index(&self, a: u64) -> Result<usize> {
        self.modulus.check_residue(a)?;
        Ok(a as usize)
    }

    pub fn is_adjacent(&self, a: u64, b: u64) -> Result<bool> {
        let (a, b) = (self.index(a)?, self.index(b)?);
        Ok(self.rows[a].contains(b))
    }

    pub fn neighbors(&self, a: u64) -> Result<impl Iterator<Item = u64> + '_> {
        let a = self.index(a)?;
        Ok(self.rows[a].ones().map(|b| b as u64))
    }

    pub fn degree(&self, a: u64) -> Result<u64> {
        let a = self.index(a)?;
        Ok(self.rows[a].count_ones(..) as u64)
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r.count_ones(..) as u64).collect()
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::from_degrees(self.degrees())
    }

    pub fn edge_count(&self) -> u64 {
        self.degrees().iter().sum::<u64>() / 2
    }

    /// Edges `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.rows.iter().enumerate().flat_map(|(a, row)| {
            row.ones()
                .filter(move |&b| b > a)
                .map(move |b| (a as u64, b as u64))
        })
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count() as u64;
        self.edge_count() == n * (n - 1) / 2
    }

    /// Star with center 0: vertex 0 sees everyone, every other vertex is a leaf.
    pub fn is_star(&self) -> bool {
        let n = self.vertex_count() as u64;
        is_star_profile(n, self.rows[0].count_ones(..) as u64, &self.degree_sequence())
    }

    /// Breadth-first search from `root` over bitset frontiers. Returns the
    /// eccentricity of `root` if every vertex is reachable.
    fn eccentricity(&self, root: usize) -> Option<u64> {
        let n = self.vertex_count();
        let mut seen = FixedBitSet::with_capacity(n);
        seen.insert(root);
        let mut seen_count = 1;
        let mut frontier = vec![root];
        let mut depth = 0;
        while seen_count < n {
            if frontier.is_empty() {
                return None;
            }
            let before = seen.clone();
            for &v in &frontier {
                seen.union_with(&self.rows[v]);
                if seen.count_ones(..) == n {
                    break;
                }
            }
            depth += 1;
            seen_count = seen.count_ones(..);
            frontier = seen.difference(&before).collect();
        }
        Some(depth)
    }

    /// Breadth-first reachability from vertex 0.
    pub fn is_connected(&self) -> bool {
        self.eccentricity(0).is_some()
    }

    fn component_count(&self) -> usize {
        let n = self.vertex_count();
        let mut seen = FixedBitSet::with_capacity(n);
        let mut count = 0;
        for root in 0..n {
            if seen.contains(root) {
                continue;
            }
            count += 1;
            let mut stack = vec![root];
            seen.insert(root);
            while let Some(v) = stack.pop() {
                for w in self.rows[v].ones() {
                    if !seen.put(w) {
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    /// Shortest cycle length by BFS from every vertex.
    ///
    /// Forests are detected first from `m = n - components`; otherwise each BFS
    /// stops once its depth can no longer beat the best cycle found, and the
    /// whole search stops at 3.
    pub fn girth(&self) -> ExtendedLength {
        let n = self.vertex_count();
        if self.edge_count() as usize + self.component_count() == n {
            return ExtendedLength::Infinite;
        }
        let mut best = u64::MAX;
        let mut depth = vec![u64::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::new();
        for root in 0..n {
            depth.fill(u64::MAX);
            parent.fill(usize::MAX);
            queue.clear();
            depth[root] = 0;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                if 2 * depth[u] >= best {
                    break;
                }
                for w in self.rows[u].ones() {
                    if depth[w] == u64::MAX {
                        depth[w] = depth[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(depth[u] + depth[w] + 1);
                    }
                }
                if best == 3 {
                    return ExtendedLength::Finite(3);
                }
            }
        }
        ExtendedLength::Finite(best)
    }

    /// Largest eccentricity, from a BFS at every vertex.
    pub fn diameter(&self) -> ExtendedLength {
        let mut diameter = 0;
        for root in 0..self.vertex_count() {
            match self.eccentricity(root) {
                Some(e) => diameter = diameter.max(e),
                None => return ExtendedLength::Infinite,
            }
        }
        ExtendedLength::Finite(diameter)
    }

    /// Two-colorability: BFS layering per component, then no edge may join two
    /// vertices whose layers have equal parity.
    pub fn is_bipartite(&self) -> bool {
        let n = self.vertex_count();
        let mut seen = FixedBitSet::with_capacity(n);
        let mut parity = [FixedBitSet::with_capacity(n), FixedBitSet::with_capacity(n)];
        let mut side = vec![0usize; n];
        for root in 0..n {
            if seen.contains(root) {
                continue;
            }
            seen.insert(root);
            parity[0].insert(root);
            side[root] = 0;
            let mut frontier = vec![root];
            let mut level = 0;
            while !frontier.is_empty() {
                level ^= 1;
                let mut next = FixedBitSet::with_capacity(n);
                for &v in &frontier {
                    next.union_with(&self.rows[v]);
                }
                next.difference_with(&seen);
                seen.union_with(&next);
                parity[level].union_with(&next);
                frontier = next.ones().collect();
                for &v in &frontier {
                    side[v] = level;
                }
            }
        }
        (0..n).all(|v| self.rows[v].is_disjoint(&parity[side[v]]))
    }

    /// Groups of vertices with identical neighborhoods, ordered by smallest member.
    /// Members of a group are pairwise non-adjacent and interchangeable.
    pub fn twin_classes(&self) -> Vec<Vec<usize>> {
        let mut index: HashMap<&FixedBitSet, usize> = HashMap::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for (v, row) in self.rows.iter().enumerate() {
            let id = *index.entry(row).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[id].push(v);
        }
        classes
    }

    /// The parts of the graph if it is complete multipartite (every vertex is
    /// adjacent to exactly the vertices outside its twin class), else `None`.
    pub fn multipartite_parts(&self) -> Option<Vec<Vec<usize>>> {
        let n = self.vertex_count();
        let classes = self.twin_classes();
        for class in &classes {
            let mut outside = FixedBitSet::with_capacity(n);
            outside.insert_range(..);
            for &v in class {
                outside.set(v, false);
            }
            if self.rows[class[0]] != outside {
                return None;
            }
        }
        Some(classes)
    }

    /// True iff `a ~ b` exactly when `a` and `b` lie in different classes of
    /// `decomposition`, and the classes partition the vertex set.
    pub fn verify_complete_multipartite(&self, decomposition: &OrderDecomposition) -> bool {
        if decomposition.modulus != self.modulus {
            return false;
        }
        let n = self.vertex_count();
        let mut part: Vec<Option<usize>> = vec![None; n];
        for (id, members) in decomposition.classes.values().enumerate() {
            for &a in members {
                match part.get_mut(a as usize) {
                    Some(slot @ None) => *slot = Some(id),
                    _ => return false,
                }
            }
        }
        let Some(part) = part.into_iter().collect::<Option<Vec<usize>>>() else {
            return false;
        };
        (0..n).all(|a| ((a + 1)..n).all(|b| self.rows[a].contains(b) == (part[a] != part[b])))
    }

    fn check_limit(&self, what: &'static str, limit: u64) -> Result<()> {
        let n = self.modulus.get();
        if n > limit {
            return Err(Error::Capacity { what, n, limit });
        }
        Ok(())
    }

    /// Maximum clique by branch and bound with greedy-coloring bounds.
    pub fn max_clique(&self, limit: u64) -> Result<Clique> {
        self.check_limit("exact clique search", limit)?;
        let n = self.vertex_count();
        let mut all = FixedBitSet::with_capacity(n);
        all.insert_range(..);
        let mut best = Vec::new();
        self.expand_clique(&mut Vec::new(), all, &mut best);
        best.sort_unstable();
        Ok(Clique(best.into_iter().map(|v| v as u64).collect()))
    }

    pub fn clique_number(&self, limit: u64) -> Result<u64> {
        Ok(self.max_clique(limit)?.0.len() as u64)
    }

    fn expand_clique(&self, current: &mut Vec<usize>, candidates: FixedBitSet, best: &mut Vec<usize>) {
        let (order, bounds) = self.greedy_color_order(&candidates);
        let mut candidates = candidates;
        for i in (0..order.len()).rev() {
            if current.len() + bounds[i] <= best.len() {
                return;
            }
            let v = order[i];
            current.push(v);
            let mut next = candidates.clone();
            next.intersect_with(&self.rows[v]);
            if next.is_clear() {
                if current.len() > best.len() {
                    best.clone_from(current);
                }
            } else {
                self.expand_clique(current, next, best);
            }
            current.pop();
            candidates.set(v, false);
        }
    }

    /// Sequential greedy coloring of `candidates`; returns vertices sorted by
    /// color and, per position, the number of colors used up to it.
    fn greedy_color_order(&self, candidates: &FixedBitSet) -> (Vec<usize>, Vec<usize>) {
        let mut uncolored = candidates.clone();
        let mut order = Vec::with_capacity(candidates.count_ones(..));
        let mut bounds = Vec::with_capacity(order.capacity());
        let mut color = 0;
        while !uncolored.is_clear() {
            color += 1;
            let mut available = uncolored.clone();
            while let Some(v) = available.minimum() {
                available.set(v, false);
                available.difference_with(&self.rows[v]);
                uncolored.set(v, false);
                order.push(v);
                bounds.push(color);
            }
        }
        (order, bounds)
    }

    /// Chromatic number by exact search: try `k = ω, ω + 1, …` colors with
    /// DSatur-ordered backtracking until one succeeds.
    pub fn min_coloring(&self, limit: u64) -> Result<Coloring> {
        self.check_limit("exact coloring search", limit)?;
        let n = self.vertex_count();
        let lower = self.clique_number(limit)? as usize;
        for k in lower.max(1)..=n {
            if let Some(colors) = DsaturSearch::new(self, k).run() {
                return Ok(Coloring { color_count: k as u64, colors });
            }
        }
        unreachable!("n colors always suffice")
    }

    pub fn chromatic_number(&self, limit: u64) -> Result<u64> {
        Ok(self.min_coloring(limit)?.color_count)
    }

    pub fn is_proper_coloring(&self, colors: &[u32]) -> bool {
        colors.len() == self.vertex_count()
            && self.edges().all(|(a, b)| colors[a as usize] != colors[b as usize])
    }

    /// Exhaustive Hamiltonian cycle search from vertex 0.
    ///
    /// Twin vertices are interchangeable, so each twin class is entered in
    /// ascending index order; failed `(visited counts, last class)` states are
    /// memoized.
    pub fn find_hamiltonian_cycle(&self, limit: u64) -> Result<HamiltonianSearch> {
        self.check_limit("Hamiltonian cycle search", limit)?;
        let n = self.vertex_count();
        if n < 3 {
            return Ok(HamiltonianSearch { cycle: None, nodes_explored: 0 });
        }
        let classes = self.twin_classes();
        let mut class_of = vec![0; n];
        for (id, members) in classes.iter().enumerate() {
            for &v in members {
                class_of[v] = id;
            }
        }
        let mut search = HamiltonianDfs {
            graph: self,
            classes: &classes,
            class_of: &class_of,
            used: vec![0; classes.len()],
            path: Vec::with_capacity(n),
            failed: HashSet::new(),
            nodes: 0,
        };
        search.path.push(0);
        search.used[class_of[0]] = 1;
        let found = search.dfs();
        let nodes_explored = search.nodes;
        let cycle = found.then(|| {
            let mut path = search.path;
            if path[1] > path[n - 1] {
                path[1..].reverse();
            }
            path.into_iter().map(|v| v as u64).collect()
        });
        Ok(HamiltonianSearch { cycle, nodes_explored })
    }

    /// A valid Hamiltonian cycle lists every vertex once, with consecutive and
    /// wrap-around pairs adjacent.
    pub fn is_hamiltonian_cycle(&self, cycle: &[u64]) -> bool {
        let n = self.vertex_count();
        if cycle.len() != n || n < 3 {
            return false;
        }
        let mut seen = FixedBitSet::with_capacity(n);
        for &v in cycle {
            if v as usize >= n || seen.put(v as usize) {
                return false;
            }
        }
        (0..n).all(|i| self.rows[cycle[i] as usize].contains(cycle[(i + 1) % n] as usize))
    }

    /// Every invariant; exact searches are skipped (left `None`) above their limits.
    pub fn invariants(&self, limits: &OracleLimits) -> InvariantSet {
        let n = self.modulus.get();
        let clique_number = self.clique_number(limits.exact_search).ok();
        let chromatic_number = self.chromatic_number(limits.exact_search).ok();
        let hamiltonian = self
            .find_hamiltonian_cycle(limits.hamiltonian)
            .ok()
            .map(|s| s.cycle.is_some());
        InvariantSet {
            n,
            edge_count: self.edge_count(),
            degree_sequence: self.degree_sequence(),
            connected: self.is_connected(),
            girth: self.girth(),
            diameter: self.diameter(),
            bipartite: self.is_bipartite(),
            complete: self.is_complete(),
            star: self.is_star(),
            clique_number,
            chromatic_number,
            hamiltonian,
            partite_count: self.multipartite_parts().map_or(0, |p| p.len() as u64),
        }
    }
}

struct DsaturSearch<'g> {
    graph: &'g IndependentGraph,
    k: usize,
    colors: Vec<Option<u32>>,
    // neighbor_colors[v * k + c]: colored neighbors of v holding color c
    neighbor_colors: Vec<u32>,
    saturation: Vec<usize>,
}

impl<'g> DsaturSearch<'g> {
    fn new(graph: &'g IndependentGraph, k: usize) -> Self {
        let n = graph.vertex_count();
        DsaturSearch {
            graph,
            k,
            colors: vec![None; n],
            neighbor_colors: vec![0; n * k],
            saturation: vec![0; n],
        }
    }

    fn run(mut self) -> Option<Vec<u32>> {
        if self.solve(0) {
            Some(self.colors.into_iter().map(|c| c.unwrap()).collect())
        } else {
            None
        }
    }

    fn pick(&self) -> Option<usize> {
        let rows = &self.graph.rows;
        (0..self.colors.len())
            .filter(|&v| self.colors[v].is_none())
            .max_by_key(|&v| (self.saturation[v], rows[v].count_ones(..), std::cmp::Reverse(v)))
    }

    fn assign(&mut self, v: usize, c: u32) {
        self.colors[v] = Some(c);
        for w in self.graph.rows[v].ones() {
            let slot = &mut self.neighbor_colors[w * self.k + c as usize];
            if *slot == 0 {
                self.saturation[w] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize, c: u32) {
        self.colors[v] = None;
        for w in self.graph.rows[v].ones() {
            let slot = &mut self.neighbor_colors[w * self.k + c as usize];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    fn solve(&mut self, used: usize) -> bool {
        let Some(v) = self.pick() else {
            return true;
        };
        if self.saturation[v] >= self.k {
            return false;
        }
        // A fresh color is only worth trying once (the first unused one).
        for c in 0..self.k.min(used + 1) {
            if self.neighbor_colors[v * self.k + c] != 0 {
                continue;
            }
            self.assign(v, c as u32);
            if self.solve(used.max(c + 1)) {
                return true;
            }
            self.unassign(v, c as u32);
        }
        false
    }
}

struct HamiltonianDfs<'g> {
    graph: &'g IndependentGraph,
    classes: &'g [Vec<usize>],
    class_of: &'g [usize],
    used: Vec<usize>,
    path: Vec<usize>,
    failed: HashSet<(Vec<usize>, usize)>,
    nodes: u64,
}

impl HamiltonianDfs<'_> {
    fn dfs(&mut self) -> bool {
        self.nodes += 1;
        let rows = &self.graph.rows;
        let last = *self.path.last().expect("path starts at 0");
        if self.path.len() == rows.len() {
            return rows[last].contains(self.path[0]);
        }
        let key = (self.used.clone(), self.class_of[last]);
        if self.failed.contains(&key) {
            return false;
        }
        for c in 0..self.classes.len() {
            let Some(&v) = self.classes[c].get(self.used[c]) else {
                continue;
            };
            if !rows[last].contains(v) {
                continue;
            }
            self.path.push(v);
            self.used[c] += 1;
            if self.dfs() {
                return true;
            }
            self.used[c] -= 1;
            self.path.pop();
        }
        self.failed.insert(key);
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zn::order_decomposition;

    fn graph(n: u64) -> IndependentGraph {
        IndependentGraph::build(Modulus::new(n).unwrap()).unwrap()
    }

    /// Pairwise scan straight from the adjacency definition.
    fn edge_count_by_scan(n: u64) -> u64 {
        let m = Modulus::new(n).unwrap();
        let mut count = 0;
        for a in 0..n {
            for b in (a + 1)..n {
                if element_order(a, m).unwrap() != element_order(b, m).unwrap() {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn build_examples() {
        let g = graph(2);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1)]);

        let g = graph(5);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (0, 3), (0, 4)]);
        assert!(g.is_star());

        assert_eq!(edge_count_by_scan(6), 13);
        assert_eq!(graph(6).edge_count(), 13);
    }

    #[test]
    fn build_refuses_beyond_limit() {
        let err = IndependentGraph::build_with_limit(Modulus::new(101).unwrap(), 100).unwrap_err();
        assert!(err.is_capacity());
        assert!(IndependentGraph::build(Modulus::new(20_001).unwrap()).unwrap_err().is_capacity());
    }

    #[test]
    fn degree_examples() {
        assert_eq!(graph(6).degree(0).unwrap(), 5);
        assert_eq!(graph(6).degree(1).unwrap(), 4);
        assert_eq!(graph(12).degree(4).unwrap(), 10);
        assert!(matches!(graph(6).degree(6), Err(Error::ResidueOutOfRange { .. })));
        assert!(graph(6).is_adjacent(0, 9).is_err());
    }

    #[test]
    fn edge_count_examples() {
        assert_eq!(graph(4).edge_count(), 5);
        assert_eq!(graph(5).edge_count(), 4);
        assert_eq!(edge_count_by_scan(10), 33);
        assert_eq!(graph(10).edge_count(), 33);
        for n in 2..=60 {
            assert_eq!(graph(n).edge_count(), edge_count_by_scan(n));
        }
    }

    #[test]
    fn connectivity_examples() {
        assert!(graph(2).is_connected());
        assert!(graph(6).is_connected());
        assert!(graph(9).is_connected());
    }

    #[test]
    fn girth_examples() {
        assert_eq!(graph(7).girth(), ExtendedLength::Infinite);
        assert_eq!(graph(6).girth(), ExtendedLength::Finite(3));
        assert_eq!(graph(4).girth(), ExtendedLength::Finite(3));
        assert!(graph(4).is_adjacent(0, 1).unwrap());
        assert!(graph(4).is_adjacent(1, 2).unwrap());
        assert!(graph(4).is_adjacent(0, 2).unwrap());
        assert_eq!(graph(2).girth(), ExtendedLength::Infinite);
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(graph(2).diameter(), ExtendedLength::Finite(1));
        assert_eq!(graph(7).diameter(), ExtendedLength::Finite(2));
        assert_eq!(graph(6).diameter(), ExtendedLength::Finite(2));
        assert!(!graph(6).is_adjacent(1, 5).unwrap());
    }

    #[test]
    fn bipartite_examples() {
        assert!(graph(5).is_bipartite());
        assert!(!graph(6).is_bipartite());
        assert!(graph(2).is_bipartite());
        assert!(!graph(4).is_bipartite());
    }

    #[test]
    fn clique_examples() {
        assert_eq!(graph(6).clique_number(64).unwrap(), 4);
        assert_eq!(graph(8).clique_number(64).unwrap(), 4);
        assert_eq!(graph(5).clique_number(64).unwrap(), 2);
        assert_eq!(graph(2).clique_number(64).unwrap(), 2);
        assert!(graph(65).clique_number(64).unwrap_err().is_capacity());
    }

    #[test]
    fn max_clique_is_a_clique() {
        for n in 2..=40 {
            let g = graph(n);
            let Clique(c) = g.max_clique(64).unwrap();
            for (i, &a) in c.iter().enumerate() {
                for &b in &c[i + 1..] {
                    assert!(g.is_adjacent(a, b).unwrap());
                }
            }
        }
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(graph(2).chromatic_number(64).unwrap(), 2);
        assert_eq!(graph(4).chromatic_number(64).unwrap(), 3);
        assert_eq!(graph(6).chromatic_number(64).unwrap(), 4);
        assert!(graph(65).chromatic_number(64).unwrap_err().is_capacity());
    }

    #[test]
    fn colorings_are_proper() {
        for n in 2..=40 {
            let g = graph(n);
            let c = g.min_coloring(64).unwrap();
            assert!(g.is_proper_coloring(&c.colors));
            assert!(c.colors.iter().all(|&x| u64::from(x) < c.color_count));
        }
    }

    /// Brute force on a hand-built 5-cycle, where the chromatic number (3)
    /// exceeds the clique number (2), so the search must reject k = 2.
    #[test]
    fn coloring_search_climbs_past_clique_bound() {
        let n = 5;
        let mut rows = vec![FixedBitSet::with_capacity(n); n];
        for i in 0..n {
            rows[i].insert((i + 1) % n);
            rows[(i + 1) % n].insert(i);
        }
        let g = IndependentGraph { modulus: Modulus::new(5).unwrap(), orders: vec![1; n], rows };
        assert_eq!(g.clique_number(64).unwrap(), 2);
        assert_eq!(g.chromatic_number(64).unwrap(), 3);
        assert_eq!(g.girth(), ExtendedLength::Finite(5));
        assert_eq!(g.diameter(), ExtendedLength::Finite(2));
        assert!(!g.is_bipartite());
        let h = g.find_hamiltonian_cycle(24).unwrap();
        assert_eq!(h.cycle, Some(vec![0, 1, 2, 3, 4]));
        assert!(g.multipartite_parts().is_none());
    }

    #[test]
    fn disconnected_graph_reports_infinite_diameter() {
        let n = 4;
        let mut rows = vec![FixedBitSet::with_capacity(n); n];
        rows[0].insert(1);
        rows[1].insert(0);
        rows[2].insert(3);
        rows[3].insert(2);
        let g = IndependentGraph { modulus: Modulus::new(4).unwrap(), orders: vec![1; n], rows };
        assert!(!g.is_connected());
        assert_eq!(g.diameter(), ExtendedLength::Infinite);
        assert_eq!(g.girth(), ExtendedLength::Infinite);
        assert!(g.is_bipartite());
    }

    #[test]
    fn hamiltonian_examples() {
        let g = graph(6);
        let h = g.find_hamiltonian_cycle(24).unwrap();
        let cycle = h.cycle.expect("n = 6 is Hamiltonian");
        assert!(g.is_hamiltonian_cycle(&cycle));
        assert_eq!(cycle[0], 0);
        assert!(cycle[1] < cycle[5]);

        let h = graph(9).find_hamiltonian_cycle(24).unwrap();
        assert!(h.cycle.is_none());
        assert!(h.nodes_explored > 0);

        assert!(graph(3).find_hamiltonian_cycle(24).unwrap().cycle.is_none());
        assert!(graph(2).find_hamiltonian_cycle(24).unwrap().cycle.is_none());
        assert!(graph(25).find_hamiltonian_cycle(24).unwrap_err().is_capacity());
    }

    /// Plain backtracking with no symmetry reduction, small n only.
    fn hamiltonian_naive(g: &IndependentGraph) -> bool {
        fn go(g: &IndependentGraph, path: &mut Vec<usize>, seen: &mut Vec<bool>) -> bool {
            let n = g.vertex_count();
            let last = *path.last().unwrap();
            if path.len() == n {
                return g.rows[last].contains(0);
            }
            for w in g.rows[last].ones() {
                if !seen[w] {
                    seen[w] = true;
                    path.push(w);
                    if go(g, path, seen) {
                        return true;
                    }
                    path.pop();
                    seen[w] = false;
                }
            }
            false
        }
        let n = g.vertex_count();
        if n < 3 {
            return false;
        }
        let mut seen = vec![false; n];
        seen[0] = true;
        go(g, &mut vec![0], &mut seen)
    }

    #[test]
    fn hamiltonian_search_agrees_with_naive_backtracking() {
        for n in 2..=12 {
            let g = graph(n);
            let h = g.find_hamiltonian_cycle(24).unwrap();
            assert_eq!(h.cycle.is_some(), hamiltonian_naive(&g), "n = {n}");
            if let Some(c) = h.cycle {
                assert!(g.is_hamiltonian_cycle(&c));
            }
        }
    }

    #[test]
    fn multipartite_examples() {
        for n in [2, 6, 12] {
            let g = graph(n);
            assert!(g.verify_complete_multipartite(&order_decomposition(g.modulus())));
        }
        assert_eq!(graph(6).multipartite_parts().unwrap().len(), 4);

        // Wrong decomposition: merge two classes.
        let mut d = order_decomposition(Modulus::new(6).unwrap());
        let moved = d.classes.remove(&2).unwrap();
        d.classes.get_mut(&3).unwrap().extend(moved);
        assert!(!graph(6).verify_complete_multipartite(&d));

        // Decomposition for a different modulus.
        assert!(!graph(6).verify_complete_multipartite(&order_decomposition(Modulus::new(5).unwrap())));
    }

    #[test]
    fn invariants_respect_limits() {
        let g = graph(30);
        let inv = g.invariants(&OracleLimits { build: 100, exact_search: 20, hamiltonian: 10 });
        assert_eq!(inv.clique_number, None);
        assert_eq!(inv.chromatic_number, None);
        assert_eq!(inv.hamiltonian, None);
        assert!(inv.handshake_holds());

        let inv = graph(6).invariants(&OracleLimits::default());
        assert_eq!(inv.clique_number, Some(4));
        assert_eq!(inv.chromatic_number, Some(4));
        assert_eq!(inv.hamiltonian, Some(true));
        assert_eq!(inv.partite_count, 4);
    }
}
