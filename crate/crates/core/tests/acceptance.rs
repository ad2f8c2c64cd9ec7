//! The eight acceptance criteria, each with its time budget. Prints one
//! PASS/FAIL line per criterion and exits non-zero if any fails.

mod common;

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use indegraph::audit::{sweep, AuditConfig, GroundTruth, Status};
use indegraph::closed_form::{
    cf_clique_chromatic, cf_degree, cf_diameter, cf_edge_count, cf_girth, cf_invariants, cf_is_bipartite,
    cf_is_complete, cf_is_hamiltonian,
};
use indegraph::zn::order_decomposition;
use indegraph::{IndependentGraph, Modulus, OracleLimits, TheoremId};

type Check = Result<(), String>;

fn m(n: u64) -> Modulus {
    Modulus::new(n).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn graph(n: u64) -> IndependentGraph {
    IndependentGraph::build(m(n)).expect("within default build limit")
}

/// Edge counts 5 and 4 for n = 4 and n = 5, from both the oracle and the closed form.
fn c1() -> Check {
    for (n, want) in [(4, 5), (5, 4)] {
        let oracle = graph(n).edge_count();
        let cf = cf_edge_count(m(n)).map_err(|e| e.to_string())?;
        let naive = common::Naive::new(n).edge_count();
        ensure(oracle == want && cf == want && naive == want, || {
            format!("n={n}: oracle {oracle}, closed form {cf}, reference {naive}, expected {want}")
        })?;
    }
    Ok(())
}

/// Complete multipartite over the order classes for every n in [2, 512].
fn c2() -> Check {
    for n in 2..=512 {
        ensure(graph(n).verify_complete_multipartite(&order_decomposition(m(n))), || {
            format!("n={n} is not complete multipartite over its order classes")
        })?;
    }
    Ok(())
}

/// Closed forms equal the oracle for every n in [2, 512].
fn c3() -> Check {
    for n in 2..=512 {
        let g = graph(n);
        let modulus = m(n);
        let cf_edges = cf_edge_count(modulus).map_err(|e| e.to_string())?;
        ensure(g.edge_count() == cf_edges, || format!("n={n}: edge count"))?;
        for a in 0..n {
            let cf = cf_degree(a, modulus).map_err(|e| e.to_string())?;
            ensure(g.degree(a).unwrap() == cf, || format!("n={n}: degree of {a}"))?;
        }
        ensure(g.girth() == cf_girth(modulus), || format!("n={n}: girth"))?;
        ensure(g.diameter() == cf_diameter(modulus), || format!("n={n}: diameter"))?;
        ensure(g.is_bipartite() == cf_is_bipartite(modulus), || format!("n={n}: bipartite"))?;
        ensure(g.is_complete() == cf_is_complete(modulus), || format!("n={n}: complete"))?;
    }
    Ok(())
}

/// Exact clique and chromatic numbers on [2, 64], Hamiltonicity on [2, 24].
fn c4() -> Check {
    let limits = OracleLimits::default();
    for n in 2..=64 {
        let g = graph(n);
        let want = cf_clique_chromatic(m(n));
        let omega = g.clique_number(limits.exact_search).map_err(|e| e.to_string())?;
        let chi = g.chromatic_number(limits.exact_search).map_err(|e| e.to_string())?;
        ensure(omega == want && chi == want, || format!("n={n}: ω={omega}, χ={chi}, d(n)={want}"))?;
    }
    for n in 2..=24 {
        let g = graph(n);
        let search = g.find_hamiltonian_cycle(limits.hamiltonian).map_err(|e| e.to_string())?;
        if let Some(c) = &search.cycle {
            ensure(g.is_hamiltonian_cycle(c), || format!("n={n}: invalid cycle {c:?}"))?;
        }
        ensure(search.cycle.is_some() == cf_is_hamiltonian(m(n)), || format!("n={n}: Hamiltonicity"))?;
    }
    Ok(())
}

/// Zero mismatches over [2, 512] for the statements that hold.
fn c5() -> Check {
    let report = sweep(2, 512, &AuditConfig::default()).map_err(|e| e.to_string())?;
    use TheoremId::*;
    for t in [T2_4, T2_12, C2_13, T2_14, T2_15, T2_16, T3_1, T3_2, T3_3, C3_4, L2_5] {
        let s = &report.summary[&t];
        ensure(s.fails == 0, || format!("{t}: {} mismatches, first at {:?}", s.fails, s.first_counterexample))?;
        ensure(s.holds > 0, || format!("{t}: never checked"))?;
    }
    Ok(())
}

/// Exact first counterexamples over [2, 64], each decided by the oracle.
fn c6() -> Check {
    let report = sweep(2, 64, &AuditConfig::default()).map_err(|e| e.to_string())?;
    use TheoremId::*;
    for (t, want) in [(L2_6, 3), (T2_7, 12), (T2_10, 10), (T2_17, 9), (T4_1, 5), (T4_3, 4)] {
        let got = report.first_counterexample(t);
        ensure(got == Some(want), || format!("{t}: first counterexample {got:?}, expected {want}"))?;
        let v = report.result(want).and_then(|r| r.verdict(t)).unwrap();
        ensure(v.status == Status::Mismatch && v.ground_truth == GroundTruth::Oracle, || {
            format!("{t} at n={want} not an oracle mismatch: {v:?}")
        })?;
    }
    let swapped = &report.summary[&L2_6Swapped];
    ensure(swapped.fails == 0, || format!("L2.6-swapped failed {} times", swapped.fails))
}

/// Byte-identical parallel sweeps and a golden DOT export.
fn c7() -> Check {
    let run = |args: &[&str]| {
        let out = Command::new(env!("CARGO_BIN_EXE_indegraph"))
            .args(args)
            .env_remove("INDEGRAPH_ORACLE_LIMIT")
            .env_remove("INDEGRAPH_EXACT_LIMIT")
            .env_remove("INDEGRAPH_HAMILTONIAN_LIMIT")
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success(), || format!("{args:?} exited with {:?}", out.status))?;
        Ok::<_, String>(out.stdout)
    };
    let args = ["sweep", "2", "64", "--format", "json", "--jobs", "8"];
    let first = run(&args)?;
    let second = run(&args)?;
    ensure(!first.is_empty() && first == second, || "sweep outputs differ between runs".into())?;
    let serial = run(&["sweep", "2", "64", "--format", "json", "--jobs", "1"])?;
    ensure(serial == first, || "--jobs 1 and --jobs 8 outputs differ".into())?;
    let dot = run(&["export", "6", "--format", "dot"])?;
    ensure(dot == include_bytes!("golden/indep_6.dot"), || {
        format!("DOT differs from golden:\n{}", String::from_utf8_lossy(&dot))
    })
}

/// Closed forms at n = 10^9 + 7 in under 100 ms; oracle refuses past its limit.
fn c8() -> Check {
    let n = m(1_000_000_007);
    let start = Instant::now();
    let inv = cf_invariants(n).map_err(|e| e.to_string())?;
    let took = start.elapsed();
    ensure(took < Duration::from_millis(100), || format!("cf_invariants took {took:?}"))?;
    ensure(inv.partite_count == 2 && inv.handshake_holds(), || format!("unexpected invariants {inv:?}"))?;

    let limits = OracleLimits::default();
    let err = match IndependentGraph::build_with_limit(n, limits.build) {
        Ok(_) => return Err("oracle built a graph above its limit".into()),
        Err(e) => e,
    };
    ensure(err.is_capacity(), || format!("expected a capacity error, got {err}"))?;
    let err = IndependentGraph::build_with_limit(m(limits.build + 1), limits.build).err();
    ensure(err.is_some_and(|e| e.is_capacity()), || "limit + 1 not refused".into())?;
    ensure(IndependentGraph::build_with_limit(m(100), 100).is_ok(), || "limit itself refused".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, Duration, fn() -> Check); 8] = [
        ("1 edge counts for n = 4, 5", Duration::from_secs(1), c1),
        ("2 complete multipartite on [2, 512]", Duration::from_secs(120), c2),
        ("3 closed form equals oracle on [2, 512]", Duration::from_secs(300), c3),
        ("4 clique/chromatic on [2, 64], Hamiltonian on [2, 24]", Duration::from_secs(300), c4),
        ("5 no mismatches for confirmed statements on [2, 512]", Duration::from_secs(300), c5),
        ("6 first counterexamples on [2, 64]", Duration::from_secs(300), c6),
        ("7 deterministic sweep and golden DOT export", Duration::from_secs(300), c7),
        ("8 closed forms at 10^9 + 7, oracle capacity error", Duration::from_secs(1), c8),
    ];
    let mut failed = 0;
    for (name, budget, check) in criteria {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let result = result.and_then(|()| {
            ensure(took <= budget, || format!("took {took:.2?}, budget {budget:?}"))
        });
        match result {
            Ok(()) => println!("PASS  criterion {name} ({took:.2?})"),
            Err(e) => {
                failed += 1;
                println!("FAIL  criterion {name} ({took:.2?}): {e}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
