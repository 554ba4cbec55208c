//! C ABI over `mincut-core`.
//!
//! Every fallible function returns a [`MincutStatus`] and writes results
//! through out-pointers. On failure a message is kept per thread and can
//! be read with [`mincut_last_error`]. Handles are opaque; each one
//! returned to the caller must be released with its `_free` function.
//! Panics are caught at the boundary and reported as
//! `MINCUT_STATUS_INTERNAL`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use mincut_core::classify;
use mincut_core::formats;
use mincut_core::operator::{self, IterationConfig, IterationTrace, Outcome};
use mincut_core::{iso, mincut, Error};

/// Status codes returned by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MincutStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    BudgetExceeded = 4,
    Disconnected = 5,
    OutOfRange = 6,
    Internal = 99,
}

/// Which way an orbit of the mincut-graph operator ended.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MincutOutcomeKind {
    FixedPoint = 0,
    Periodic = 1,
    Null = 2,
    Unresolved = 3,
}

/// Outcome of [`mincut_iterate`]. `period` is 1 for fixed points and 0
/// when there is no terminal cycle; `steps` counts operator applications.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MincutOutcome {
    pub kind: MincutOutcomeKind,
    pub period: usize,
    pub preperiod: usize,
    pub steps: usize,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MincutClassification {
    pub lambda: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub maximally_edge_connected: bool,
    pub super_lambda: bool,
    pub regular: bool,
    pub fixed_point_predicted: bool,
    pub mincut_count: usize,
    pub trivial_cut_count: usize,
}

/// Opaque graph handle.
pub struct MincutGraph(mincut_core::Graph);

/// Opaque handle to an enumerated mincut family.
pub struct MincutFamily(mincut_core::MincutFamily);

/// Opaque handle to an iteration trace.
pub struct MincutTrace(IterationTrace);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> MincutStatus {
    match e {
        Error::Parse { .. } => MincutStatus::Parse,
        Error::TooLarge { .. } | Error::BudgetExceeded { .. } => MincutStatus::BudgetExceeded,
        Error::Disconnected => MincutStatus::Disconnected,
        Error::IndexOutOfRange { .. } => MincutStatus::OutOfRange,
        _ => MincutStatus::InvalidArgument,
    }
}

struct Fail(MincutStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null_ptr(what: &str) -> Fail {
    Fail(MincutStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, converting errors and panics into a status code.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> MincutStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => MincutStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            MincutStatus::Internal
        }
    }
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null_ptr(what))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null_ptr("output pointer"));
    }
    out.write(value);
    Ok(())
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn mincut_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Builds a graph on `n` vertices from `m` edges stored as `2m`
/// consecutive endpoints. `edges` may be null when `m` is 0.
///
/// # Safety
/// `edges` must point to `2 * m` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mincut_graph_from_edges(
    n: usize,
    edges: *const usize,
    m: usize,
    out: *mut *mut MincutGraph,
) -> MincutStatus {
    guard(|| {
        let flat: &[usize] = if m == 0 {
            &[]
        } else if edges.is_null() {
            return Err(null_ptr("edges"));
        } else {
            std::slice::from_raw_parts(edges, 2 * m)
        };
        let pairs: Vec<(usize, usize)> = flat.chunks(2).map(|p| (p[0], p[1])).collect();
        let g = mincut_core::Graph::from_edge_list(n, &pairs)?;
        put(out, Box::into_raw(Box::new(MincutGraph(g))))
    })
}

/// Parses one graph6 string.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mincut_graph_from_graph6(
    text: *const c_char,
    out: *mut *mut MincutGraph,
) -> MincutStatus {
    guard(|| {
        if text.is_null() {
            return Err(null_ptr("text"));
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| Fail(MincutStatus::Parse, "graph6 text is not UTF-8".into()))?;
        let g = formats::parse_graph6(s.trim())?;
        put(out, Box::into_raw(Box::new(MincutGraph(g))))
    })
}

/// # Safety
/// `g` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mincut_graph_free(g: *mut MincutGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices; 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn mincut_graph_order(g: *const MincutGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.order())
}

/// Number of edges; 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn mincut_graph_size(g: *const MincutGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.size())
}

/// Whether `u` and `v` are adjacent; false for bad handles or indices.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn mincut_graph_has_edge(g: *const MincutGraph, u: usize, v: usize) -> bool {
    g.as_ref()
        .is_some_and(|g| u < g.0.order() && v < g.0.order() && g.0.has_edge(u, v))
}

/// Encodes `g` as graph6. Release the string with [`mincut_string_free`].
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mincut_graph_to_graph6(
    g: *const MincutGraph,
    out: *mut *mut c_char,
) -> MincutStatus {
    guard(|| {
        let g = borrow(g, "graph")?;
        let s = CString::new(formats::to_graph6(&g.0)).expect("graph6 is printable ASCII");
        put(out, s.into_raw())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mincut_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Edge connectivity λ; 0 for disconnected graphs.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mincut_edge_connectivity(
    g: *const MincutGraph,
    out: *mut usize,
) -> MincutStatus {
    guard(|| put(out, mincut::edge_connectivity(&borrow(g, "graph")?.0)))
}

/// Enumerates every minimum edge-cut. Graphs with more than `budget`
/// vertices (or more than 64) fail with `MINCUT_STATUS_BUDGET_EXCEEDED`.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mincut_enumerate(
    g: *const MincutGraph,
    budget: usize,
    out: *mut *mut MincutFamily,
) -> MincutStatus {
    guard(|| {
        let f = mincut::enumerate_mincuts_with_budget(&borrow(g, "graph")?.0, budget)?;
        put(out, Box::into_raw(Box::new(MincutFamily(f))))
    })
}

/// # Safety
/// `f` must be null or a live family handle.
#[no_mangle]
pub unsafe extern "C" fn mincut_family_free(f: *mut MincutFamily) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// # Safety
/// `f` must be null or a live family handle.
#[no_mangle]
pub unsafe extern "C" fn mincut_family_lambda(f: *const MincutFamily) -> usize {
    f.as_ref().map_or(0, |f| f.0.lambda)
}

/// # Safety
/// `f` must be null or a live family handle.
#[no_mangle]
pub unsafe extern "C" fn mincut_family_len(f: *const MincutFamily) -> usize {
    f.as_ref().map_or(0, |f| f.0.len())
}

/// Side of cut `i` that contains vertex 0, as a bitmask over vertices.
///
/// # Safety
/// `f` must be a live family handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mincut_family_cut_side(
    f: *const MincutFamily,
    i: usize,
    out: *mut u64,
) -> MincutStatus {
    guard(|| {
        let f = borrow(f, "family")?;
        let cut = f.0.cuts.get(i).ok_or_else(|| out_of_range(i, f.0.len()))?;
        put(out, cut.side_a_mask())
    })
}

/// Copies the edges of cut `i` into `buf` as `2λ` endpoints. `cap` is the
/// number of `size_t` slots available and must be at least `2λ`.
///
/// # Safety
/// `f` must be a live family handle; `buf` must have `cap` writable slots.
#[no_mangle]
pub unsafe extern "C" fn mincut_family_cut_edges(
    f: *const MincutFamily,
    i: usize,
    buf: *mut usize,
    cap: usize,
) -> MincutStatus {
    guard(|| {
        let f = borrow(f, "family")?;
        let cut = f.0.cuts.get(i).ok_or_else(|| out_of_range(i, f.0.len()))?;
        let need = 2 * cut.edges().len();
        if cap < need {
            return Err(Fail(
                MincutStatus::InvalidArgument,
                format!("buffer holds {cap} values, {need} needed"),
            ));
        }
        if buf.is_null() {
            return Err(null_ptr("buf"));
        }
        let dst = std::slice::from_raw_parts_mut(buf, need);
        for (k, e) in cut.edges().iter().enumerate() {
            dst[2 * k] = e.u;
            dst[2 * k + 1] = e.v;
        }
        Ok(())
    })
}

fn out_of_range(i: usize, len: usize) -> Fail {
    Fail(
        MincutStatus::OutOfRange,
        format!("index {i} out of range for {len} cuts"),
    )
}

/// The mincut graph `X(g)` as a new handle.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mincut_xgraph(
    g: *const MincutGraph,
    budget: usize,
    out: *mut *mut MincutGraph,
) -> MincutStatus {
    guard(|| {
        let x = operator::mincut_graph_with_budget(&borrow(g, "graph")?.0, budget)?;
        put(out, Box::into_raw(Box::new(MincutGraph(x))))
    })
}

/// # Safety
/// `g` and `h` must be live graph handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mincut_are_isomorphic(
    g: *const MincutGraph,
    h: *const MincutGraph,
    out: *mut bool,
) -> MincutStatus {
    guard(|| {
        let same = iso::are_isomorphic(&borrow(g, "g")?.0, &borrow(h, "h")?.0)?;
        put(out, same)
    })
}

/// Classifies a connected graph on at least two vertices.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mincut_classify(
    g: *const MincutGraph,
    out: *mut MincutClassification,
) -> MincutStatus {
    guard(|| {
        let g = &borrow(g, "graph")?.0;
        let family = mincut::enumerate_mincuts(g)?;
        let r = classify::classify(g, &family)?;
        put(
            out,
            MincutClassification {
                lambda: r.lambda,
                min_degree: r.delta,
                max_degree: r.max_degree,
                maximally_edge_connected: r.maximally_edge_connected,
                super_lambda: r.super_lambda,
                regular: r.regular,
                fixed_point_predicted: r.fixed_point_predicted,
                mincut_count: family.len(),
                trivial_cut_count: r.trivial_cut_count,
            },
        )
    })
}

/// Iterates `X` from `g` for at most `max_steps` applications with the
/// default enumeration and canonical-labeling budgets.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mincut_iterate(
    g: *const MincutGraph,
    max_steps: usize,
    out: *mut *mut MincutTrace,
) -> MincutStatus {
    guard(|| {
        let config = IterationConfig::with_max_steps(max_steps);
        let trace = operator::iterate_with(&borrow(g, "graph")?.0, &config)?;
        put(out, Box::into_raw(Box::new(MincutTrace(trace))))
    })
}

/// # Safety
/// `t` must be null or a live trace handle.
#[no_mangle]
pub unsafe extern "C" fn mincut_trace_free(t: *mut MincutTrace) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// # Safety
/// `t` must be a live trace handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mincut_trace_outcome(
    t: *const MincutTrace,
    out: *mut MincutOutcome,
) -> MincutStatus {
    guard(|| {
        let t = &borrow(t, "trace")?.0;
        let applied = t.steps.len() - 1;
        let o = match t.outcome {
            Outcome::FixedPoint { preperiod } => MincutOutcome {
                kind: MincutOutcomeKind::FixedPoint,
                period: 1,
                preperiod,
                steps: applied,
            },
            Outcome::Periodic { period, preperiod } => MincutOutcome {
                kind: MincutOutcomeKind::Periodic,
                period,
                preperiod,
                steps: applied,
            },
            Outcome::Null { steps } => MincutOutcome {
                kind: MincutOutcomeKind::Null,
                period: 0,
                preperiod: 0,
                steps,
            },
            Outcome::Unresolved { steps, ref reason } => {
                set_error(reason.clone());
                MincutOutcome {
                    kind: MincutOutcomeKind::Unresolved,
                    period: 0,
                    preperiod: 0,
                    steps,
                }
            }
        };
        put(out, o)
    })
}

/// Number of graphs recorded in the trace, the input included.
///
/// # Safety
/// `t` must be null or a live trace handle.
#[no_mangle]
pub unsafe extern "C" fn mincut_trace_len(t: *const MincutTrace) -> usize {
    t.as_ref().map_or(0, |t| t.0.graphs.len())
}

/// Copy of the `i`-th graph of the orbit as a new handle.
///
/// # Safety
/// `t` must be a live trace handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mincut_trace_graph(
    t: *const MincutTrace,
    i: usize,
    out: *mut *mut MincutGraph,
) -> MincutStatus {
    guard(|| {
        let t = &borrow(t, "trace")?.0;
        let g = t.graphs.get(i).ok_or_else(|| {
            Fail(
                MincutStatus::OutOfRange,
                format!("step {i} out of range for {} graphs", t.graphs.len()),
            )
        })?;
        put(out, Box::into_raw(Box::new(MincutGraph(g.clone()))))
    })
}
