//! C interface to `indegraph`.
//!
//! Graphs and sweep reports are opaque handles created by `*_new` / `*_build`
//! and released by the matching `*_free`. Every fallible call returns an
//! [`IndegraphStatus`]; the message for the most recent failure on the calling
//! thread is available from [`indegraph_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use indegraph::audit::{render_report, sweep_parallel, AuditConfig, ReportFormat, SweepReport};
use indegraph::closed_form::cf_invariants;
use indegraph::invariants::{ExtendedLength, InvariantSet};
use indegraph::{Error, IndependentGraph, Modulus, OracleLimits};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndegraphStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    CapacityExceeded = 3,
    Overflow = 4,
    Internal = 5,
}

/// Report rendering formats.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndegraphFormat {
    Markdown = 0,
    Json = 1,
    Csv = 2,
}

/// Girth or diameter value used when the length is infinite.
pub const INDEGRAPH_INFINITE: u64 = u64::MAX;

/// Closed-form invariants. Boolean fields are 0 or 1.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct IndegraphInvariants {
    pub n: u64,
    pub edge_count: u64,
    pub connected: u8,
    pub complete: u8,
    pub star: u8,
    pub bipartite: u8,
    pub hamiltonian: u8,
    /// `INDEGRAPH_INFINITE` when acyclic.
    pub girth: u64,
    pub diameter: u64,
    pub clique_number: u64,
    pub chromatic_number: u64,
    pub partite_count: u64,
    pub max_degree: u64,
}

/// Explicit graph on `Z_n`.
pub struct IndegraphGraph {
    inner: IndependentGraph,
}

/// Result of an audit sweep.
pub struct IndegraphReport {
    inner: SweepReport,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> IndegraphStatus {
    match err {
        Error::InvalidModulus(_) | Error::ResidueOutOfRange { .. } | Error::InvalidRange { .. } => {
            IndegraphStatus::InvalidArgument
        }
        Error::Capacity { .. } => IndegraphStatus::CapacityExceeded,
        Error::Overflow(_) => IndegraphStatus::Overflow,
        _ => IndegraphStatus::Internal,
    }
}

/// Runs `f`, recording any error or panic as the thread's last error.
fn guard(f: impl FnOnce() -> Result<(), (IndegraphStatus, String)>) -> IndegraphStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => IndegraphStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".to_string());
            IndegraphStatus::Internal
        }
    }
}

fn lift(err: Error) -> (IndegraphStatus, String) {
    (status_of(&err), err.to_string())
}

fn null(what: &str) -> (IndegraphStatus, String) {
    (IndegraphStatus::NullPointer, format!("{what} is null"))
}

fn modulus(n: u64) -> Result<Modulus, (IndegraphStatus, String)> {
    Modulus::new(n).map_err(lift)
}

/// Message for the last failed call on this thread, or null if none. The
/// pointer is valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn indegraph_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn indegraph_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Closed-form invariants of the graph for `n`; never builds the graph.
///
/// # Safety
/// `out` must be null or point to writable memory for one `IndegraphInvariants`.
#[no_mangle]
pub unsafe extern "C" fn indegraph_invariants(n: u64, out: *mut IndegraphInvariants) -> IndegraphStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let inv = cf_invariants(modulus(n)?).map_err(lift)?;
        // SAFETY: checked non-null above; the caller guarantees it is writable.
        unsafe { out.write(to_c(&inv)) };
        Ok(())
    })
}

fn length(l: ExtendedLength) -> u64 {
    l.finite().unwrap_or(INDEGRAPH_INFINITE)
}

fn to_c(inv: &InvariantSet) -> IndegraphInvariants {
    IndegraphInvariants {
        n: inv.n,
        edge_count: inv.edge_count,
        connected: inv.connected.into(),
        complete: inv.complete.into(),
        star: inv.star.into(),
        bipartite: inv.bipartite.into(),
        hamiltonian: inv.hamiltonian.unwrap_or(false).into(),
        girth: length(inv.girth),
        diameter: length(inv.diameter),
        clique_number: inv.clique_number.unwrap_or(0),
        chromatic_number: inv.chromatic_number.unwrap_or(0),
        partite_count: inv.partite_count,
        max_degree: inv.degree_sequence.max_degree().unwrap_or(0),
    }
}

/// Builds the explicit graph. Fails with `CAPACITY_EXCEEDED` when `n` is
/// above `build_limit` (0 selects the default limit).
///
/// # Safety
/// `out` must be null or point to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn indegraph_graph_build(
    n: u64,
    build_limit: u64,
    out: *mut *mut IndegraphGraph,
) -> IndegraphStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let limit = if build_limit == 0 { OracleLimits::default().build } else { build_limit };
        let inner = IndependentGraph::build_with_limit(modulus(n)?, limit).map_err(lift)?;
        let handle = Box::into_raw(Box::new(IndegraphGraph { inner }));
        // SAFETY: checked non-null above.
        unsafe { out.write(handle) };
        Ok(())
    })
}

/// Releases a graph. Null is ignored.
///
/// # Safety
/// `graph` must be null or a handle from `indegraph_graph_build` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn indegraph_graph_free(graph: *mut IndegraphGraph) {
    if !graph.is_null() {
        // SAFETY: the caller passes ownership of a handle created by Box::into_raw.
        drop(unsafe { Box::from_raw(graph) });
    }
}

unsafe fn graph_ref<'a>(graph: *const IndegraphGraph) -> Result<&'a IndependentGraph, (IndegraphStatus, String)> {
    // SAFETY: forwarded from the caller's contract.
    unsafe { graph.as_ref() }.map(|g| &g.inner).ok_or_else(|| null("graph"))
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn indegraph_graph_vertex_count(graph: *const IndegraphGraph) -> u64 {
    // SAFETY: forwarded from the caller's contract.
    unsafe { graph.as_ref() }.map_or(0, |g| g.inner.vertex_count() as u64)
}

/// # Safety
/// `graph` must be null or a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn indegraph_graph_edge_count(
    graph: *const IndegraphGraph,
    out: *mut u64,
) -> IndegraphStatus {
    guard(|| {
        // SAFETY: forwarded from the caller's contract.
        let g = unsafe { graph_ref(graph) }?;
        if out.is_null() {
            return Err(null("out"));
        }
        // SAFETY: checked non-null above.
        unsafe { out.write(g.edge_count()) };
        Ok(())
    })
}

/// # Safety
/// `graph` must be null or a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn indegraph_graph_degree(
    graph: *const IndegraphGraph,
    vertex: u64,
    out: *mut u64,
) -> IndegraphStatus {
    guard(|| {
        // SAFETY: forwarded from the caller's contract.
        let g = unsafe { graph_ref(graph) }?;
        if out.is_null() {
            return Err(null("out"));
        }
        let d = g.degree(vertex).map_err(lift)?;
        // SAFETY: checked non-null above.
        unsafe { out.write(d) };
        Ok(())
    })
}

/// Writes 1 to `out` if `a` and `b` are adjacent, else 0.
///
/// # Safety
/// `graph` must be null or a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn indegraph_graph_is_adjacent(
    graph: *const IndegraphGraph,
    a: u64,
    b: u64,
    out: *mut u8,
) -> IndegraphStatus {
    guard(|| {
        // SAFETY: forwarded from the caller's contract.
        let g = unsafe { graph_ref(graph) }?;
        if out.is_null() {
            return Err(null("out"));
        }
        let adj = g.is_adjacent(a, b).map_err(lift)?;
        // SAFETY: checked non-null above.
        unsafe { out.write(adj.into()) };
        Ok(())
    })
}

/// Audits every statement for each `n` in `[lo, hi]` with default limits,
/// falling back to closed forms beyond them. `jobs` = 0 uses one thread.
///
/// # Safety
/// `out` must be null or point to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn indegraph_sweep(
    lo: u64,
    hi: u64,
    jobs: u32,
    out: *mut *mut IndegraphReport,
) -> IndegraphStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let inner =
            sweep_parallel(lo, hi, &AuditConfig::default(), jobs.max(1) as usize).map_err(lift)?;
        let handle = Box::into_raw(Box::new(IndegraphReport { inner }));
        // SAFETY: checked non-null above.
        unsafe { out.write(handle) };
        Ok(())
    })
}

/// Releases a report. Null is ignored.
///
/// # Safety
/// `report` must be null or a handle from `indegraph_sweep` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn indegraph_report_free(report: *mut IndegraphReport) {
    if !report.is_null() {
        // SAFETY: the caller passes ownership of a handle created by Box::into_raw.
        drop(unsafe { Box::from_raw(report) });
    }
}

/// Number of (n, statement) pairs whose verdict is MISMATCH; 0 for null.
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn indegraph_report_mismatch_count(report: *const IndegraphReport) -> u64 {
    // SAFETY: forwarded from the caller's contract.
    unsafe { report.as_ref() }.map_or(0, |r| r.inner.summary.values().map(|s| s.fails).sum())
}

/// First counterexample for a statement id such as `"T2.10"`, written to
/// `out`; writes 0 when the statement held throughout.
///
/// # Safety
/// `report` must be null or a live handle, `theorem` null or NUL-terminated,
/// `out` null or writable.
#[no_mangle]
pub unsafe extern "C" fn indegraph_report_first_counterexample(
    report: *const IndegraphReport,
    theorem: *const c_char,
    out: *mut u64,
) -> IndegraphStatus {
    guard(|| {
        // SAFETY: forwarded from the caller's contract.
        let r = unsafe { report.as_ref() }.ok_or_else(|| null("report"))?;
        if theorem.is_null() {
            return Err(null("theorem"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        // SAFETY: non-null and NUL-terminated by contract.
        let id = unsafe { CStr::from_ptr(theorem) }.to_string_lossy();
        let t = indegraph::TheoremId::ALL
            .iter()
            .copied()
            .find(|t| t.as_str() == id)
            .ok_or_else(|| (IndegraphStatus::InvalidArgument, format!("unknown statement id '{id}'")))?;
        // SAFETY: checked non-null above.
        unsafe { out.write(r.inner.first_counterexample(t).unwrap_or(0)) };
        Ok(())
    })
}

/// Renders a report. The string must be released with `indegraph_string_free`.
///
/// # Safety
/// `report` must be null or a live handle; `out` null or writable.
#[no_mangle]
pub unsafe extern "C" fn indegraph_report_render(
    report: *const IndegraphReport,
    format: IndegraphFormat,
    out: *mut *mut c_char,
) -> IndegraphStatus {
    guard(|| {
        // SAFETY: forwarded from the caller's contract.
        let r = unsafe { report.as_ref() }.ok_or_else(|| null("report"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let format = match format {
            IndegraphFormat::Markdown => ReportFormat::Markdown,
            IndegraphFormat::Json => ReportFormat::Json,
            IndegraphFormat::Csv => ReportFormat::Csv,
        };
        let text = render_report(&r.inner, format).map_err(lift)?;
        let c = CString::new(text).map_err(|e| (IndegraphStatus::Internal, e.to_string()))?;
        // SAFETY: checked non-null above.
        unsafe { out.write(c.into_raw()) };
        Ok(())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from `indegraph_report_render` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn indegraph_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: the caller passes ownership of a CString created by into_raw.
        drop(unsafe { CString::from_raw(s) });
    }
}
