//! The published statements about the independent graph, transcribed
//! literally. No value here is corrected; where a printed formula is wrong the
//! audit is expected to flag it.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::invariants::ExtendedLength;
use crate::zn::{classify, euler_phi, is_prime, ElementClass, Factorization, Modulus};

/// The claimed degree of a vertex: one exact value, or one of two values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DegreeClaim {
    Exact(i128),
    EitherOf(i128, i128),
}

impl DegreeClaim {
    pub fn admits(self, degree: u64) -> bool {
        let d = i128::from(degree);
        match self {
            DegreeClaim::Exact(v) => v == d,
            DegreeClaim::EitherOf(x, y) => x == d || y == d,
        }
    }
}

impl fmt::Display for DegreeClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegreeClaim::Exact(v) => v.fmt(f),
            DegreeClaim::EitherOf(x, y) => write!(f, "{{{x}|{y}}}"),
        }
    }
}

/// How to read the two cases of the `|N_n|` lemma.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NeitherReading {
    /// As printed: `n - φ(n) - 1` for even `n`, `n - φ(n) - 2` for odd `n`.
    Printed,
    /// Cases exchanged, matching how the lemma is used in the edge-count proof.
    Swapped,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PerfectVerdict {
    WeaklyPerfect,
    StronglyPerfect,
}

impl PerfectVerdict {
    /// The audited usage: equal clique and chromatic numbers is "weakly perfect",
    /// the reverse of the standard term.
    pub fn from_numbers(clique: i128, chromatic: i128) -> Self {
        if clique == chromatic {
            PerfectVerdict::WeaklyPerfect
        } else {
            PerfectVerdict::StronglyPerfect
        }
    }
}

impl fmt::Display for PerfectVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PerfectVerdict::WeaklyPerfect => "WEAKLY_PERFECT",
            PerfectVerdict::StronglyPerfect => "STRONGLY_PERFECT",
        })
    }
}

/// Claimed structural facts for one `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralClaims {
    pub connected: bool,
    pub complete: bool,
    pub star: bool,
    pub girth: ExtendedLength,
    pub diameter_bound: u64,
    pub bipartite: bool,
    pub partite_count: u64,
    /// `None` where nothing is asserted (prime `n >= 5`).
    pub hamiltonian: Option<bool>,
}

/// `|S_n|`: 1 for odd `n`, 2 for even `n`.
pub fn pc_involution_count(n: Modulus) -> i128 {
    if n.get().is_multiple_of(2) {
        2
    } else {
        1
    }
}

/// `|N_n|` per the chosen reading of its two cases.
pub fn pc_neither_count(n: Modulus, reading: NeitherReading) -> i128 {
    let m = i128::from(n.get());
    let base = m - i128::from(euler_phi(n.get()));
    let even = n.get().is_multiple_of(2);
    let subtract_one = match reading {
        NeitherReading::Printed => even,
        NeitherReading::Swapped => !even,
    };
    if subtract_one {
        base - 1
    } else {
        base - 2
    }
}

/// Claimed degree of `a`, chosen by the `S_n` / `U_n` / `N_n` case it falls in
/// (involutions first).
pub fn pc_degree(a: u64, n: Modulus) -> Result<DegreeClaim> {
    Ok(degree_for_class(classify(a, n)?, n))
}

pub fn degree_for_class(class: ElementClass, n: Modulus) -> DegreeClaim {
    let m = i128::from(n.get());
    let phi = i128::from(euler_phi(n.get()));
    match class {
        ElementClass::Involution => DegreeClaim::Exact(m - 1),
        ElementClass::Unit => DegreeClaim::Exact(m - phi),
        ElementClass::Neither => DegreeClaim::EitherOf(phi + 2, phi + 1),
    }
}

/// Claimed edge count:
/// `((n-1)² - φ(φ-2)) / 2` for odd `n`, `((n-1)² + 1 - φ(φ-2)) / 2` for even `n`.
pub fn pc_edge_count(n: Modulus) -> i128 {
    let m = i128::from(n.get());
    let phi = i128::from(euler_phi(n.get()));
    let even_term = if n.get().is_multiple_of(2) { 1 } else { 0 };
    ((m - 1) * (m - 1) + even_term - phi * (phi - 2)) / 2
}

/// `None` below the hypothesis `n > 2`.
fn above_two(n: Modulus) -> Option<i128> {
    (n.get() > 2).then(|| i128::from(n.get()))
}

/// Claimed clique number `(n - φ(φ-2) + |S_n|) / 2`, returned verbatim even when
/// not positive.
pub fn pc_clique(n: Modulus) -> Option<i128> {
    let m = above_two(n)?;
    let phi = i128::from(euler_phi(n.get()));
    Some((m - phi * (phi - 2) + pc_involution_count(n)) / 2)
}

/// Claimed chromatic number `(3n - 3φ + |S_n|) / 2`.
pub fn pc_chromatic(n: Modulus) -> Option<i128> {
    let m = above_two(n)?;
    let phi = i128::from(euler_phi(n.get()));
    Some((3 * m - 3 * phi + pc_involution_count(n)) / 2)
}

/// The perfectness verdict obtained by applying the audited definition to its
/// own clique and chromatic formulas.
pub fn pc_perfect_verdict(n: Modulus) -> Option<PerfectVerdict> {
    Some(PerfectVerdict::from_numbers(pc_clique(n)?, pc_chromatic(n)?))
}

pub fn pc_structural_claims(n: Modulus) -> StructuralClaims {
    let m = n.get();
    let prime = is_prime(m);
    let hamiltonian = if m <= 3 {
        Some(false)
    } else if !prime {
        Some(true)
    } else {
        None
    };
    StructuralClaims {
        connected: true,
        complete: m == 2,
        star: prime,
        girth: if prime { ExtendedLength::Infinite } else { ExtendedLength::Finite(3) },
        diameter_bound: 2,
        bipartite: prime,
        partite_count: Factorization::of(m).divisor_count(),
        hamiltonian,
    }
}
