//! Invariants of the independent graph computed from the divisors of `n` alone.
//!
//! The graph is complete multipartite with one part per divisor `d | n`, of
//! size `φ(d)`. Everything below follows from that and needs only the
//! factorization of `n`, never the graph itself.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::{DegreeRun, DegreeSequence, ExtendedLength, InvariantSet};
use crate::zn::{element_order, Factorization, Modulus};

/// Divisors of `n` with their totients, computed from one factorization.
#[derive(Clone, Debug)]
pub struct DivisorTable {
    modulus: Modulus,
    factorization: Factorization,
    // (d, φ(d)) ascending by d
    entries: Vec<(u64, u64)>,
}

impl DivisorTable {
    pub fn new(n: Modulus) -> Self {
        let factorization = Factorization::of(n.get());
        let entries = factorization.divisors_with_phi();
        DivisorTable { modulus: n, factorization, entries }
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn entries(&self) -> &[(u64, u64)] {
        &self.entries
    }

    pub fn is_prime(&self) -> bool {
        self.factorization.is_prime()
    }

    pub fn phi_n(&self) -> u64 {
        self.entries.last().map_or(1, |&(_, phi)| phi)
    }

    pub fn phi_of_divisor(&self, d: u64) -> Option<u64> {
        self.entries
            .binary_search_by_key(&d, |&(d, _)| d)
            .ok()
            .map(|i| self.entries[i].1)
    }

    pub fn part_count(&self) -> u64 {
        self.entries.len() as u64
    }
}

/// Multiset of part sizes `{φ(d) : d | n}`, ascending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartSizeProfile {
    pub n: u64,
    pub sizes: Vec<u64>,
}

impl PartSizeProfile {
    pub fn largest(&self) -> u64 {
        self.sizes.last().copied().unwrap_or(0)
    }
}

pub fn cf_part_sizes(n: Modulus) -> PartSizeProfile {
    part_sizes(&DivisorTable::new(n))
}

fn part_sizes(table: &DivisorTable) -> PartSizeProfile {
    let mut sizes: Vec<u64> = table.entries.iter().map(|&(_, phi)| phi).collect();
    sizes.sort_unstable();
    PartSizeProfile { n: table.modulus.get(), sizes }
}

/// `n - φ(o(a))`: vertex `a` misses exactly the other members of its order class.
pub fn cf_degree(a: u64, n: Modulus) -> Result<u64> {
    let order = element_order(a, n)?;
    Ok(n.get() - crate::zn::euler_phi(order))
}

/// `(n² - Σ_{d|n} φ(d)²) / 2`, computed in 128-bit arithmetic.
pub fn cf_edge_count(n: Modulus) -> Result<u64> {
    edge_count(&DivisorTable::new(n))
}

fn edge_count(table: &DivisorTable) -> Result<u64> {
    let n = u128::from(table.modulus.get());
    let squares: u128 = table
        .entries
        .iter()
        .map(|&(_, phi)| u128::from(phi) * u128::from(phi))
        .sum();
    u64::try_from((n * n - squares) / 2).map_err(|_| Error::Overflow("edge count"))
}

/// Degree sequence: each part of size `φ(d)` contributes `φ(d)` vertices of
/// degree `n - φ(d)`.
fn degree_sequence(table: &DivisorTable) -> DegreeSequence {
    let n = table.modulus.get();
    DegreeSequence::from_runs(
        table
            .entries
            .iter()
            .map(|&(_, phi)| DegreeRun { degree: n - phi, count: phi }),
    )
}

/// Infinite for prime `n` (a star), otherwise 3.
pub fn cf_girth(n: Modulus) -> ExtendedLength {
    girth(&DivisorTable::new(n))
}

fn girth(table: &DivisorTable) -> ExtendedLength {
    if table.is_prime() {
        ExtendedLength::Infinite
    } else {
        ExtendedLength::Finite(3)
    }
}

/// 1 for `K_2`, otherwise 2 (vertex 0 is adjacent to everything).
pub fn cf_diameter(n: Modulus) -> ExtendedLength {
    if n.get() == 2 {
        ExtendedLength::Finite(1)
    } else {
        ExtendedLength::Finite(2)
    }
}

/// `d(n)`: both the clique number and the chromatic number of a complete
/// multipartite graph equal its number of parts.
pub fn cf_clique_chromatic(n: Modulus) -> u64 {
    Factorization::of(n.get()).divisor_count()
}

/// A complete multipartite graph on at least 3 vertices is Hamiltonian iff its
/// largest part is no bigger than all other parts together. The largest part
/// here is `φ(n)`.
pub fn cf_is_hamiltonian(n: Modulus) -> bool {
    hamiltonian(n.get(), DivisorTable::new(n).phi_n())
}

fn hamiltonian(n: u64, phi_n: u64) -> bool {
    n >= 3 && 2 * u128::from(phi_n) <= u128::from(n)
}

pub fn cf_is_bipartite(n: Modulus) -> bool {
    DivisorTable::new(n).is_prime()
}

pub fn cf_is_complete(n: Modulus) -> bool {
    n.get() == 2
}

/// Star centered at 0: exactly two parts (the identity and everything else),
/// which happens for prime `n`.
pub fn cf_is_star(n: Modulus) -> bool {
    DivisorTable::new(n).is_prime()
}

/// All invariants at once, from a single factorization of `n`.
pub fn cf_invariants(n: Modulus) -> Result<InvariantSet> {
    invariants_from_table(&DivisorTable::new(n))
}

pub fn invariants_from_table(table: &DivisorTable) -> Result<InvariantSet> {
    let n = table.modulus;
    let parts = table.part_count();
    let prime = table.is_prime();
    Ok(InvariantSet {
        n: n.get(),
        edge_count: edge_count(table)?,
        degree_sequence: degree_sequence(table),
        connected: true,
        girth: girth(table),
        diameter: cf_diameter(n),
        bipartite: prime,
        complete: cf_is_complete(n),
        star: prime,
        clique_number: Some(parts),
        chromatic_number: Some(parts),
        hamiltonian: Some(hamiltonian(n.get(), table.phi_n())),
        partite_count: parts,
    })
}
