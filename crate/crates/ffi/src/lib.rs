//! C ABI for the load coloring solver.
//!
//! Graphs and results are opaque handles created and destroyed here; every
//! function returns an [`LcpStatus`] (or a plain value with a documented
//! null/absent sentinel) and traps panics at the boundary, so no Rust
//! unwinding ever crosses into C. The matching header is generated into
//! `include/lcp.h` at build time.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use lcp::graph::{evaluate_coloring, Graph, TwoColoring, Vertex};
use lcp::io::parse_graph;
use lcp::{optimize_klcp, solve_klcp};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LcpStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// Input text was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Input text did not parse as a `p lcp` instance.
    ParseError = 3,
    /// An argument violates a documented precondition (e.g. a self-loop).
    InvalidArgument = 4,
    /// The solver refused the instance (e.g. projected tables too large).
    SolveFailed = 5,
    /// The caller's buffer is too small; the required length was written.
    BufferTooSmall = 6,
    /// An internal panic was trapped at the boundary.
    Panic = 7,
}

/// Opaque graph handle.
pub struct LcpGraph {
    inner: Graph,
}

/// Opaque solve-outcome handle.
pub struct LcpResult {
    verdict: bool,
    /// The decision parameter, or -1 in optimization mode.
    k: i64,
    /// The computed optimum, or -1 in decision mode.
    mu: i64,
    red: Vec<u32>,
    blue: Vec<u32>,
    red_edges: i64,
    blue_edges: i64,
    decided_by: Option<CString>,
}

fn guarded(body: impl FnOnce() -> LcpStatus) -> LcpStatus {
    catch_unwind(AssertUnwindSafe(body)).unwrap_or(LcpStatus::Panic)
}

fn write_out<T>(out: *mut *mut T, value: T) -> LcpStatus {
    if out.is_null() {
        return LcpStatus::NullArgument;
    }
    unsafe { *out = Box::into_raw(Box::new(value)) };
    LcpStatus::Ok
}

/// Version string of the library; static storage, do not free.
#[no_mangle]
pub extern "C" fn lcp_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Creates a graph with vertices `1..=n` and no edges.
#[no_mangle]
pub extern "C" fn lcp_graph_new(n: u32, out: *mut *mut LcpGraph) -> LcpStatus {
    guarded(|| {
        let mut g = Graph::new();
        for v in 1..=n {
            g.add_vertex(Vertex(v));
        }
        write_out(out, LcpGraph { inner: g })
    })
}

/// Parses a `p lcp` instance from a NUL-terminated string.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lcp_graph_parse(
    text: *const c_char,
    out: *mut *mut LcpGraph,
) -> LcpStatus {
    guarded(|| {
        if text.is_null() {
            return LcpStatus::NullArgument;
        }
        let Ok(text) = unsafe { CStr::from_ptr(text) }.to_str() else {
            return LcpStatus::InvalidUtf8;
        };
        match parse_graph(text) {
            Ok(g) => write_out(out, LcpGraph { inner: g }),
            Err(_) => LcpStatus::ParseError,
        }
    })
}

/// Inserts edge `{u, v}`, creating endpoints as needed. Vertex ids are
/// 1-based; self-loops, zero ids, and duplicate edges are rejected.
///
/// # Safety
/// `g` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn lcp_graph_add_edge(g: *mut LcpGraph, u: u32, v: u32) -> LcpStatus {
    guarded(|| {
        let Some(g) = (unsafe { g.as_mut() }) else {
            return LcpStatus::NullArgument;
        };
        if u == 0 || v == 0 || u == v {
            return LcpStatus::InvalidArgument;
        }
        if g.inner.add_edge(Vertex(u), Vertex(v)) {
            LcpStatus::Ok
        } else {
            LcpStatus::InvalidArgument
        }
    })
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn lcp_graph_vertex_count(g: *const LcpGraph) -> u64 {
    catch_unwind(AssertUnwindSafe(|| {
        unsafe { g.as_ref() }.map_or(0, |g| g.inner.n() as u64)
    }))
    .unwrap_or(0)
}

/// Number of edges, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn lcp_graph_edge_count(g: *const LcpGraph) -> u64 {
    catch_unwind(AssertUnwindSafe(|| {
        unsafe { g.as_ref() }.map_or(0, |g| g.inner.m() as u64)
    }))
    .unwrap_or(0)
}

/// Releases a graph handle; null is a no-op.
///
/// # Safety
/// `g` must be null or an unreleased handle from this library.
#[no_mangle]
pub unsafe extern "C" fn lcp_graph_free(g: *mut LcpGraph) {
    if !g.is_null() {
        drop(unsafe { Box::from_raw(g) });
    }
}

fn result_from_coloring(g: &Graph, f: &TwoColoring, k: i64, mu: i64, verdict: bool) -> LcpResult {
    let profile = evaluate_coloring(g, f).expect("witness colorings are total");
    LcpResult {
        verdict,
        k,
        mu,
        red: f.red_vertices().into_iter().map(|v| v.0).collect(),
        blue: f.blue_vertices().into_iter().map(|v| v.0).collect(),
        red_edges: profile.red_edges as i64,
        blue_edges: profile.blue_edges as i64,
        decided_by: None,
    }
}

/// Decides whether mu(G) >= k; with `want_witness`, Yes results carry a
/// certifying coloring retrievable via the witness accessors.
///
/// # Safety
/// `g` must be a live graph handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lcp_solve(
    g: *const LcpGraph,
    k: u32,
    want_witness: bool,
    out: *mut *mut LcpResult,
) -> LcpStatus {
    guarded(|| {
        let Some(g) = (unsafe { g.as_ref() }) else {
            return LcpStatus::NullArgument;
        };
        let result = match solve_klcp(&g.inner, k as usize, want_witness) {
            Ok(r) => r,
            Err(_) => return LcpStatus::SolveFailed,
        };
        let mut ffi = match &result.witness {
            Some(f) => result_from_coloring(&g.inner, f, k as i64, -1, result.verdict),
            None => LcpResult {
                verdict: result.verdict,
                k: k as i64,
                mu: -1,
                red: Vec::new(),
                blue: Vec::new(),
                red_edges: -1,
                blue_edges: -1,
                decided_by: None,
            },
        };
        ffi.decided_by = Some(CString::new(result.decided_by.as_str()).expect("no NULs"));
        write_out(out, ffi)
    })
}

/// Computes mu(G) and an optimal coloring.
///
/// # Safety
/// `g` must be a live graph handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lcp_optimize(g: *const LcpGraph, out: *mut *mut LcpResult) -> LcpStatus {
    guarded(|| {
        let Some(g) = (unsafe { g.as_ref() }) else {
            return LcpStatus::NullArgument;
        };
        match optimize_klcp(&g.inner) {
            Ok((mu, f)) => write_out(out, result_from_coloring(&g.inner, &f, -1, mu as i64, true)),
            Err(_) => LcpStatus::SolveFailed,
        }
    })
}

/// 1 for Yes, 0 for No, -1 for a null handle.
///
/// # Safety
/// `r` must be null or a live result handle.
#[no_mangle]
pub unsafe extern "C" fn lcp_result_verdict(r: *const LcpResult) -> i32 {
    catch_unwind(AssertUnwindSafe(|| {
        unsafe { r.as_ref() }.map_or(-1, |r| i32::from(r.verdict))
    }))
    .unwrap_or(-1)
}

/// The decision parameter k, or -1 in optimization mode or for null.
///
/// # Safety
/// `r` must be null or a live result handle.
#[no_mangle]
pub unsafe extern "C" fn lcp_result_k(r: *const LcpResult) -> i64 {
    catch_unwind(AssertUnwindSafe(|| unsafe { r.as_ref() }.map_or(-1, |r| r.k))).unwrap_or(-1)
}

/// The computed mu, or -1 in decision mode or for null.
///
/// # Safety
/// `r` must be null or a live result handle.
#[no_mangle]
pub unsafe extern "C" fn lcp_result_mu(r: *const LcpResult) -> i64 {
    catch_unwind(AssertUnwindSafe(|| unsafe { r.as_ref() }.map_or(-1, |r| r.mu))).unwrap_or(-1)
}

/// Red-edge count of the reported coloring, or -1 when no coloring exists.
///
/// # Safety
/// `r` must be null or a live result handle.
#[no_mangle]
pub unsafe extern "C" fn lcp_result_red_edges(r: *const LcpResult) -> i64 {
    catch_unwind(AssertUnwindSafe(|| {
        unsafe { r.as_ref() }.map_or(-1, |r| r.red_edges)
    }))
    .unwrap_or(-1)
}

/// Blue-edge count of the reported coloring, or -1 when no coloring exists.
///
/// # Safety
/// `r` must be null or a live result handle.
#[no_mangle]
pub unsafe extern "C" fn lcp_result_blue_edges(r: *const LcpResult) -> i64 {
    catch_unwind(AssertUnwindSafe(|| {
        unsafe { r.as_ref() }.map_or(-1, |r| r.blue_edges)
    }))
    .unwrap_or(-1)
}

/// Which pipeline stage decided (decision mode); borrowed from the result,
/// valid until `lcp_result_free`. Null in optimization mode or for null.
///
/// # Safety
/// `r` must be null or a live result handle.
#[no_mangle]
pub unsafe extern "C" fn lcp_result_decided_by(r: *const LcpResult) -> *const c_char {
    catch_unwind(AssertUnwindSafe(|| {
        unsafe { r.as_ref() }
            .and_then(|r| r.decided_by.as_ref())
            .map_or(ptr::null(), |s| s.as_ptr())
    }))
    .unwrap_or(ptr::null())
}

/// 1 when the result carries a witness coloring, 0 when not, -1 for null.
///
/// # Safety
/// `r` must be null or a live result handle.
#[no_mangle]
pub unsafe extern "C" fn lcp_result_has_witness(r: *const LcpResult) -> i32 {
    catch_unwind(AssertUnwindSafe(|| {
        unsafe { r.as_ref() }.map_or(-1, |r| i32::from(!r.red.is_empty() || !r.blue.is_empty()))
    }))
    .unwrap_or(-1)
}

fn copy_side(side: &[u32], out: *mut u32, cap: u64, written: *mut u64) -> LcpStatus {
    if written.is_null() {
        return LcpStatus::NullArgument;
    }
    unsafe { *written = side.len() as u64 };
    if (cap as usize) < side.len() {
        return LcpStatus::BufferTooSmall;
    }
    if side.is_empty() {
        return LcpStatus::Ok;
    }
    if out.is_null() {
        return LcpStatus::NullArgument;
    }
    unsafe { ptr::copy_nonoverlapping(side.as_ptr(), out, side.len()) };
    LcpStatus::Ok
}

/// Copies the red vertex list into `out` (capacity `cap` entries); the
/// required length is always stored in `written`. Returns `BufferTooSmall`
/// without copying when `cap` is short — call with `cap = 0` to query.
///
/// # Safety
/// `r` must be a live result handle, `written` valid, and `out` must point
/// to at least `cap` writable entries when `cap > 0`.
#[no_mangle]
pub unsafe extern "C" fn lcp_result_copy_red(
    r: *const LcpResult,
    out: *mut u32,
    cap: u64,
    written: *mut u64,
) -> LcpStatus {
    guarded(|| {
        let Some(r) = (unsafe { r.as_ref() }) else {
            return LcpStatus::NullArgument;
        };
        copy_side(&r.red, out, cap, written)
    })
}

/// Blue-side counterpart of `lcp_result_copy_red`.
///
/// # Safety
/// Same contract as `lcp_result_copy_red`.
#[no_mangle]
pub unsafe extern "C" fn lcp_result_copy_blue(
    r: *const LcpResult,
    out: *mut u32,
    cap: u64,
    written: *mut u64,
) -> LcpStatus {
    guarded(|| {
        let Some(r) = (unsafe { r.as_ref() }) else {
            return LcpStatus::NullArgument;
        };
        copy_side(&r.blue, out, cap, written)
    })
}

/// Releases a result handle; null is a no-op.
///
/// # Safety
/// `r` must be null or an unreleased handle from this library.
#[no_mangle]
pub unsafe extern "C" fn lcp_result_free(r: *mut LcpResult) {
    if !r.is_null() {
        drop(unsafe { Box::from_raw(r) });
    }
}
