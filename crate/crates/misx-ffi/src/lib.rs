//! C ABI for the misx workbench: opaque graph handles, status codes, and
//! decimal strings for the unbounded counts.
//!
//! Conventions: every fallible call returns a [`MisxStatus`] and writes
//! its outputs through pointers, graphs travel as opaque `MisxGraph`
//! handles owned by the caller and released with [`misx_graph_free`],
//! and every returned string is released with [`misx_string_free`].
//! [`misx_last_error_message`] retrieves the message of the most recent
//! failure on the calling thread.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::ffi::{c_char, CStr, CString};
use std::str::FromStr;

use num_bigint::BigUint;

use misx::bounds;
use misx::codec::{graph6_decode, graph6_encode};
use misx::count;
use misx::error::Error;
use misx::family::{self, P3Policy};
use misx::graph::Graph;
use misx::turan;
use misx::verify;

/// Opaque graph handle.
pub struct MisxGraph {
    inner: Graph,
}

/// Status of a C-API call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MisxStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument,
    /// Parameters violate a documented precondition.
    InvalidArgument,
    /// An edge list contained a self-loop.
    SelfLoop,
    /// A vertex index was out of range.
    VertexOutOfRange,
    /// A tree-only operation received a non-tree.
    NotATree,
    /// The order exceeds a hard guard.
    OrderGuard,
    /// Unparseable graph6, edge-list, or number text.
    MalformedInput,
    /// An internal invariant failed; report as a bug.
    Defect,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn remember_error(msg: String) {
    let c = CString::new(msg).unwrap_or_else(|_| CString::new("invalid error text").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> MisxStatus {
    match err {
        Error::EdgeOutOfRange { .. } | Error::VertexOutOfRange { .. } => {
            MisxStatus::VertexOutOfRange
        }
        Error::SelfLoop { .. } => MisxStatus::SelfLoop,
        Error::NotATree => MisxStatus::NotATree,
        Error::OrderGuard { .. } => MisxStatus::OrderGuard,
        Error::Graph6 { .. } | Error::EdgeList { .. } => MisxStatus::MalformedInput,
        Error::InvalidParam(_) => MisxStatus::InvalidArgument,
        Error::Defect(_) => MisxStatus::Defect,
    }
}

fn fail(err: Error) -> MisxStatus {
    let status = status_of(&err);
    remember_error(err.to_string());
    status
}

fn fail_null() -> MisxStatus {
    remember_error("null pointer argument".into());
    MisxStatus::NullArgument
}

unsafe fn graph_ref<'a>(g: *const MisxGraph) -> Option<&'a Graph> {
    g.as_ref().map(|h| &h.inner)
}

fn emit_graph(out: *mut *mut MisxGraph, g: Graph) -> MisxStatus {
    if out.is_null() {
        return fail_null();
    }
    unsafe {
        *out = Box::into_raw(Box::new(MisxGraph { inner: g }));
    }
    MisxStatus::Ok
}

fn emit_string(out: *mut *mut c_char, text: String) -> MisxStatus {
    if out.is_null() {
        return fail_null();
    }
    match CString::new(text) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            MisxStatus::Ok
        }
        Err(_) => {
            remember_error("text contained an interior NUL".into());
            MisxStatus::Defect
        }
    }
}

/// Message of the most recent error on this thread, or null. Free with
/// [`misx_string_free`].
#[no_mangle]
pub extern "C" fn misx_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|slot| match &*slot.borrow() {
        Some(msg) => msg.clone().into_raw(),
        None => std::ptr::null_mut(),
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must have been returned by this library and not freed before.
#[no_mangle]
pub unsafe extern "C" fn misx_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Releases a graph handle. Null is ignored.
///
/// # Safety
/// `g` must have been returned by this library and not freed before.
#[no_mangle]
pub unsafe extern "C" fn misx_graph_free(g: *mut MisxGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Builds a graph on `n` vertices from `num_edges` pairs packed flat as
/// `u0, v0, u1, v1, ...`. Self-loops and out-of-range endpoints are
/// rejected; duplicate edges collapse.
///
/// # Safety
/// `endpoints` must point to `2 * num_edges` readable values (or be null
/// when `num_edges` is zero); `out` must be a valid destination.
#[no_mangle]
pub unsafe extern "C" fn misx_graph_from_edges(
    n: usize,
    endpoints: *const usize,
    num_edges: usize,
    out: *mut *mut MisxGraph,
) -> MisxStatus {
    if num_edges > 0 && endpoints.is_null() {
        return fail_null();
    }
    let flat = if num_edges == 0 {
        &[][..]
    } else {
        std::slice::from_raw_parts(endpoints, 2 * num_edges)
    };
    let edges: Vec<(usize, usize)> = flat.chunks_exact(2).map(|c| (c[0], c[1])).collect();
    match Graph::from_edges(n, &edges) {
        Ok(g) => emit_graph(out, g),
        Err(e) => fail(e),
    }
}

/// Decodes a NUL-terminated graph6 string.
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` must be a valid
/// destination.
#[no_mangle]
pub unsafe extern "C" fn misx_graph_from_graph6(
    text: *const c_char,
    out: *mut *mut MisxGraph,
) -> MisxStatus {
    if text.is_null() {
        return fail_null();
    }
    match graph6_decode(CStr::from_ptr(text).to_bytes()) {
        Ok(g) => emit_graph(out, g),
        Err(e) => fail(e),
    }
}

/// Encodes a graph as graph6.
///
/// # Safety
/// `g` must be a live handle; `out` must be a valid destination.
#[no_mangle]
pub unsafe extern "C" fn misx_graph_to_graph6(
    g: *const MisxGraph,
    out: *mut *mut c_char,
) -> MisxStatus {
    match graph_ref(g) {
        Some(g) => emit_string(out, graph6_encode(g)),
        None => fail_null(),
    }
}

/// Number of vertices; 0 for a null handle.
///
/// # Safety
/// `g` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn misx_graph_order(g: *const MisxGraph) -> usize {
    graph_ref(g).map_or(0, Graph::order)
}

/// Number of edges; 0 for a null handle.
///
/// # Safety
/// `g` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn misx_graph_edge_count(g: *const MisxGraph) -> usize {
    graph_ref(g).map_or(0, Graph::edge_count)
}

/// Whether the edge `{u, v}` is present. False for a null handle or
/// out-of-range endpoints.
///
/// # Safety
/// `g` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn misx_graph_has_edge(g: *const MisxGraph, u: usize, v: usize) -> bool {
    graph_ref(g).is_some_and(|g| g.has_edge(u, v))
}

/// Whether the graph is a tree.
///
/// # Safety
/// `g` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn misx_graph_is_tree(g: *const MisxGraph) -> bool {
    graph_ref(g).is_some_and(Graph::is_tree)
}

/// Whether every degree is at most 3.
///
/// # Safety
/// `g` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn misx_graph_is_subcubic(g: *const MisxGraph) -> bool {
    graph_ref(g).is_some_and(Graph::is_subcubic)
}

/// Complement on the same vertex set.
///
/// # Safety
/// `g` must be a live handle; `out` must be a valid destination.
#[no_mangle]
pub unsafe extern "C" fn misx_graph_complement(
    g: *const MisxGraph,
    out: *mut *mut MisxGraph,
) -> MisxStatus {
    match graph_ref(g) {
        Some(g) => emit_graph(out, g.complement()),
        None => fail_null(),
    }
}

unsafe fn emit_alpha_count(
    result: Result<count::AlphaCount, Error>,
    alpha_out: *mut usize,
    count_out: *mut *mut c_char,
) -> MisxStatus {
    if alpha_out.is_null() {
        return fail_null();
    }
    match result {
        Ok(ac) => {
            *alpha_out = ac.alpha;
            emit_string(count_out, ac.count.to_string())
        }
        Err(e) => fail(e),
    }
}

/// Exact `(alpha, count)` by branch-and-bound; guarded at order 30. The
/// count is written as a decimal string.
///
/// # Safety
/// All pointers must be valid destinations; `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn misx_count_mis_exact(
    g: *const MisxGraph,
    alpha_out: *mut usize,
    count_out: *mut *mut c_char,
) -> MisxStatus {
    match graph_ref(g) {
        Some(g) => emit_alpha_count(count::count_mis_exact(g), alpha_out, count_out),
        None => fail_null(),
    }
}

/// Exact `(alpha, count)` for a tree via the linear-time DP.
///
/// # Safety
/// All pointers must be valid destinations; `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn misx_count_mis_tree(
    g: *const MisxGraph,
    alpha_out: *mut usize,
    count_out: *mut *mut c_char,
) -> MisxStatus {
    match graph_ref(g) {
        Some(g) => emit_alpha_count(count::count_mis_tree(g), alpha_out, count_out),
        None => fail_null(),
    }
}

/// Splits the maximum-independent-set count of a tree by membership of
/// vertex `v`. Both counts are decimal strings.
///
/// # Safety
/// All pointers must be valid destinations; `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn misx_conditional_count_tree(
    g: *const MisxGraph,
    v: usize,
    with_out: *mut *mut c_char,
    without_out: *mut *mut c_char,
) -> MisxStatus {
    let Some(g) = graph_ref(g) else {
        return fail_null();
    };
    match count::conditional_count_tree(g, v) {
        Ok(split) => {
            let st = emit_string(with_out, split.with_vertex.to_string());
            if st != MisxStatus::Ok {
                return st;
            }
            emit_string(without_out, split.without_vertex.to_string())
        }
        Err(e) => fail(e),
    }
}

/// Number of cliques of order `q`, as a decimal string.
///
/// # Safety
/// All pointers must be valid destinations; `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn misx_count_cliques(
    g: *const MisxGraph,
    q: usize,
    count_out: *mut *mut c_char,
) -> MisxStatus {
    match graph_ref(g) {
        Some(g) => emit_string(count_out, count::count_cliques(g, q).to_string()),
        None => fail_null(),
    }
}

/// Number of cliques of order `q` containing vertex `u`, as a decimal
/// string.
///
/// # Safety
/// All pointers must be valid destinations; `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn misx_clique_degree(
    g: *const MisxGraph,
    u: usize,
    q: usize,
    count_out: *mut *mut c_char,
) -> MisxStatus {
    let Some(g) = graph_ref(g) else {
        return fail_null();
    };
    match count::clique_degree(g, u, q) {
        Ok(d) => emit_string(count_out, d.to_string()),
        Err(e) => fail(e),
    }
}

/// The Turán graph `T_p(n)`.
///
/// # Safety
/// `out` must be a valid destination.
#[no_mangle]
pub unsafe extern "C" fn misx_turan_graph(
    n: usize,
    p: usize,
    out: *mut *mut MisxGraph,
) -> MisxStatus {
    match turan::turan_graph(n, p) {
        Ok(g) => emit_graph(out, g),
        Err(e) => fail(e),
    }
}

/// Complement of `T_alpha(n)`: a disjoint union of balanced cliques.
///
/// # Safety
/// `out` must be a valid destination.
#[no_mangle]
pub unsafe extern "C" fn misx_turan_complement(
    n: usize,
    alpha: usize,
    out: *mut *mut MisxGraph,
) -> MisxStatus {
    match turan::turan_complement(n, alpha) {
        Ok(g) => emit_graph(out, g),
        Err(e) => fail(e),
    }
}

/// The star with `n - alpha - 1` edges subdivided once.
///
/// # Safety
/// `out` must be a valid destination.
#[no_mangle]
pub unsafe extern "C" fn misx_gen_subdivided_star(
    n: usize,
    alpha: usize,
    out: *mut *mut MisxGraph,
) -> MisxStatus {
    match family::gen_subdivided_star(n, alpha) {
        Ok(g) => emit_graph(out, g),
        Err(e) => fail(e),
    }
}

/// The caterpillar with a pendant on every vertex of a path of order `k`.
///
/// # Safety
/// `out` must be a valid destination.
#[no_mangle]
pub unsafe extern "C" fn misx_gen_caterpillar(k: usize, out: *mut *mut MisxGraph) -> MisxStatus {
    match family::gen_caterpillar(k) {
        Ok(g) => emit_graph(out, g),
        Err(e) => fail(e),
    }
}

/// A tree grown from a single vertex by `steps` middle-vertex path
/// attachments. With `seeded` false the deterministic chain policy is
/// used and `seed` is ignored.
///
/// # Safety
/// `out` must be a valid destination.
#[no_mangle]
pub unsafe extern "C" fn misx_gen_p3_tree(
    steps: usize,
    seeded: bool,
    seed: u64,
    out: *mut *mut MisxGraph,
) -> MisxStatus {
    let policy = if seeded {
        P3Policy::SeededRandom(seed)
    } else {
        P3Policy::DeterministicChain
    };
    match family::gen_p3_tree(steps, policy) {
        Ok(g) => emit_graph(out, g),
        Err(e) => fail(e),
    }
}

/// The mixed extremal subcubic tree for the given order and independence
/// number.
///
/// # Safety
/// `out` must be a valid destination.
#[no_mangle]
pub unsafe extern "C" fn misx_gen_extremal_subcubic(
    n: usize,
    alpha: usize,
    out: *mut *mut MisxGraph,
) -> MisxStatus {
    match family::gen_extremal_subcubic(n, alpha) {
        Ok(g) => emit_graph(out, g),
        Err(e) => fail(e),
    }
}

/// The `n`-th Fibonacci number as a decimal string.
///
/// # Safety
/// `out` must be a valid destination.
#[no_mangle]
pub unsafe extern "C" fn misx_fib(n: usize, out: *mut *mut c_char) -> MisxStatus {
    emit_string(out, bounds::fib(n).to_string())
}

/// The ceiling/floor product bound for order `n` and independence number
/// `alpha`, as a decimal string.
///
/// # Safety
/// `out` must be a valid destination.
#[no_mangle]
pub unsafe extern "C" fn misx_general_bound(
    n: usize,
    alpha: usize,
    out: *mut *mut c_char,
) -> MisxStatus {
    match turan::general_bound(n, alpha) {
        Ok(b) => emit_string(out, b.to_string()),
        Err(e) => fail(e),
    }
}

/// The order-only bound `3^(n/3)`-style value, as a decimal string.
///
/// # Safety
/// `out` must be a valid destination.
#[no_mangle]
pub unsafe extern "C" fn misx_moon_moser_bound(n: usize, out: *mut *mut c_char) -> MisxStatus {
    match turan::moon_moser_bound(n) {
        Ok(b) => emit_string(out, b.to_string()),
        Err(e) => fail(e),
    }
}

/// The tree bound `2^(n-alpha-1) (+1 when 2 alpha = n)`, as a decimal
/// string.
///
/// # Safety
/// `out` must be a valid destination.
#[no_mangle]
pub unsafe extern "C" fn misx_tree_bound(
    n: usize,
    alpha: usize,
    out: *mut *mut c_char,
) -> MisxStatus {
    match bounds::tree_bound(n, alpha) {
        Ok(b) => emit_string(out, b.to_string()),
        Err(e) => fail(e),
    }
}

/// Compares the decimal integer `c` against `phi^m` exactly. Writes -1,
/// 0, or 1.
///
/// # Safety
/// `c_decimal` must be a valid NUL-terminated string; `ordering_out`
/// must be a valid destination.
#[no_mangle]
pub unsafe extern "C" fn misx_phi_power_compare(
    c_decimal: *const c_char,
    m: usize,
    ordering_out: *mut i32,
) -> MisxStatus {
    if c_decimal.is_null() || ordering_out.is_null() {
        return fail_null();
    }
    let text = match CStr::from_ptr(c_decimal).to_str() {
        Ok(t) => t,
        Err(_) => {
            remember_error("count text is not UTF-8".into());
            return MisxStatus::MalformedInput;
        }
    };
    let c = match BigUint::from_str(text) {
        Ok(c) => c,
        Err(_) => {
            remember_error(format!("not a decimal nonnegative integer: {text:?}"));
            return MisxStatus::MalformedInput;
        }
    };
    *ordering_out = match bounds::phi_power_compare(&c, m) {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    };
    MisxStatus::Ok
}

/// Runs one exhaustive verifier (`theorem` is one of "1", "2", "3", "4",
/// "cor1", "fig1") and writes its summary counters. Returns Ok even when
/// violations were found; the counters carry the verdict.
///
/// # Safety
/// `theorem` must be a valid NUL-terminated string; the counter pointers
/// must be valid destinations.
#[no_mangle]
pub unsafe extern "C" fn misx_verify(
    theorem: *const c_char,
    max_n: usize,
    jobs: usize,
    instances_out: *mut usize,
    violations_out: *mut usize,
    mismatches_out: *mut usize,
) -> MisxStatus {
    if theorem.is_null()
        || instances_out.is_null()
        || violations_out.is_null()
        || mismatches_out.is_null()
    {
        return fail_null();
    }
    let name = match CStr::from_ptr(theorem).to_str() {
        Ok(t) => t,
        Err(_) => {
            remember_error("theorem name is not UTF-8".into());
            return MisxStatus::MalformedInput;
        }
    };
    let report = match name {
        "1" => verify::verify_theorem1(max_n, jobs),
        "2" => verify::verify_theorem2(max_n, jobs),
        "3" => verify::verify_theorem3(max_n, jobs),
        "4" => verify::verify_theorem4(max_n, jobs),
        "cor1" => verify::verify_corollary1(max_n, jobs),
        "fig1" => Ok(verify::figure1_check()),
        other => {
            remember_error(format!("unknown theorem {other:?}"));
            return MisxStatus::InvalidArgument;
        }
    };
    match report {
        Ok(report) => {
            *instances_out = report.instances;
            *violations_out = report.violations;
            *mismatches_out = report.mismatches;
            MisxStatus::Ok
        }
        Err(e) => fail(e),
    }
}
