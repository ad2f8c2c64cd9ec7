use std::fmt;

use serde::{Deserialize, Serialize};

/// A girth or diameter value: a finite length or `INFINITE`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ExtendedLength {
    Finite(u64),
    Infinite,
}

impl ExtendedLength {
    pub fn finite(self) -> Option<u64> {
        match self {
            ExtendedLength::Finite(v) => Some(v),
            ExtendedLength::Infinite => None,
        }
    }

    pub fn is_at_most(self, bound: u64) -> bool {
        matches!(self, ExtendedLength::Finite(v) if v <= bound)
    }
}

impl fmt::Display for ExtendedLength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedLength::Finite(v) => v.fmt(f),
            ExtendedLength::Infinite => f.write_str("INFINITE"),
        }
    }
}

/// One run of a run-length encoded degree sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegreeRun {
    pub degree: u64,
    pub count: u64,
}

/// Degree sequence stored as `(degree, multiplicity)` runs, highest degree first.
///
/// Run-length form keeps closed-form results small when `n` is far beyond
/// anything that could be materialized vertex by vertex.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DegreeSequence(Vec<DegreeRun>);

impl DegreeSequence {
    pub fn from_degrees<I: IntoIterator<Item = u64>>(degrees: I) -> Self {
        Self::from_runs(degrees.into_iter().map(|degree| DegreeRun { degree, count: 1 }))
    }

    /// Merges runs with equal degree and sorts descending.
    pub fn from_runs<I: IntoIterator<Item = DegreeRun>>(runs: I) -> Self {
        let mut map = std::collections::BTreeMap::new();
        for run in runs {
            if run.count > 0 {
                *map.entry(run.degree).or_insert(0u64) += run.count;
            }
        }
        DegreeSequence(
            map.into_iter()
                .rev()
                .map(|(degree, count)| DegreeRun { degree, count })
                .collect(),
        )
    }

    pub fn runs(&self) -> &[DegreeRun] {
        &self.0
    }

    pub fn vertex_count(&self) -> u64 {
        self.0.iter().map(|r| r.count).sum()
    }

    pub fn degree_sum(&self) -> u128 {
        self.0
            .iter()
            .map(|r| u128::from(r.degree) * u128::from(r.count))
            .sum()
    }

    pub fn max_degree(&self) -> Option<u64> {
        self.0.first().map(|r| r.degree)
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, run) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}x{}", run.degree, run.count)?;
        }
        Ok(())
    }
}

/// Every invariant of one independent graph.
///
/// The clique, chromatic and Hamiltonian fields are `None` when they were not
/// computed (an exact search would exceed its configured limit).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantSet {
    pub n: u64,
    pub edge_count: u64,
    pub degree_sequence: DegreeSequence,
    pub connected: bool,
    pub girth: ExtendedLength,
    pub diameter: ExtendedLength,
    pub bipartite: bool,
    pub complete: bool,
    pub star: bool,
    pub clique_number: Option<u64>,
    pub chromatic_number: Option<u64>,
    pub hamiltonian: Option<bool>,
    pub partite_count: u64,
}

impl InvariantSet {
    /// Degree sum equals twice the edge count.
    pub fn handshake_holds(&self) -> bool {
        self.degree_sequence.degree_sum() == 2 * u128::from(self.edge_count)
    }
}

/// A star centered at vertex 0: every other vertex is a leaf.
pub(crate) fn is_star_profile(n: u64, center_degree: u64, degrees: &DegreeSequence) -> bool {
    if center_degree != n - 1 {
        return false;
    }
    let expected = DegreeSequence::from_runs([
        DegreeRun { degree: n - 1, count: 1 },
        DegreeRun { degree: 1, count: n - 1 },
    ]);
    *degrees == expected
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CheckStatus {
    Agree,
    Disagree,
    /// One side did not compute the value.
    Skipped,
}

/// One field of two invariant sets compared side by side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantCheck {
    pub invariant: &'static str,
    pub closed_form: String,
    pub oracle: String,
    pub status: CheckStatus,
}

fn check<T: PartialEq + fmt::Display>(invariant: &'static str, a: &T, b: &T) -> InvariantCheck {
    InvariantCheck {
        invariant,
        closed_form: a.to_string(),
        oracle: b.to_string(),
        status: if a == b { CheckStatus::Agree } else { CheckStatus::Disagree },
    }
}

fn check_opt<T: PartialEq + fmt::Display>(invariant: &'static str, a: Option<&T>, b: Option<&T>) -> InvariantCheck {
    match (a, b) {
        (Some(a), Some(b)) => check(invariant, a, b),
        _ => InvariantCheck {
            invariant,
            closed_form: a.map_or_else(|| "-".into(), ToString::to_string),
            oracle: b.map_or_else(|| "-".into(), ToString::to_string),
            status: CheckStatus::Skipped,
        },
    }
}

/// Field-by-field comparison of a closed-form set against an oracle set.
pub fn compare_invariants(closed_form: &InvariantSet, oracle: &InvariantSet) -> Vec<InvariantCheck> {
    let (a, b) = (closed_form, oracle);
    vec![
        check("edges", &a.edge_count, &b.edge_count),
        check("degrees", &a.degree_sequence, &b.degree_sequence),
        check("connected", &a.connected, &b.connected),
        check("complete", &a.complete, &b.complete),
        check("star", &a.star, &b.star),
        check("bipartite", &a.bipartite, &b.bipartite),
        check("girth", &a.girth, &b.girth),
        check("diameter", &a.diameter, &b.diameter),
        check_opt("clique", a.clique_number.as_ref(), b.clique_number.as_ref()),
        check_opt("chromatic", a.chromatic_number.as_ref(), b.chromatic_number.as_ref()),
        check_opt("hamiltonian", a.hamiltonian.as_ref(), b.hamiltonian.as_ref()),
        check("parts", &a.partite_count, &b.partite_count),
    ]
}
