//! C ABI over `dstar`.
//!
//! Graphs, triangles and generating functions cross the boundary as opaque
//! handles that the caller frees with the matching `*_free` function. Exact
//! integers cross as NUL-terminated decimal strings owned by the caller and
//! released with [`dstar_string_free`]. Every fallible call returns a
//! [`DstarStatus`]; on failure [`dstar_last_error_message`] describes the cause.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use dstar::graph::{parse_edge_list, parse_graph6, Family, Graph};
use dstar::oracle::series_divide;
use dstar::starseq::{frequency_from_star, frequency_sequence, star_from_frequency, star_sequence, StarTriangle};
use dstar::verify::{verify_graph, VerifyOptions};
use dstar::zagreb::{generating_function, m2_direct, m2_from_frequency, m2_from_star, recurrence_coefficients, RationalGF};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DstarStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    SizeMismatch = 5,
    BufferTooSmall = 6,
    Panic = 7,
}

/// Opaque simple graph.
pub struct DstarGraph(Graph);

/// Opaque double-star or frequency triangle.
pub struct DstarTriangle(StarTriangle);

/// Opaque rational generating function.
pub struct DstarGf(RationalGF);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

struct Fail(DstarStatus, String);

type FfiResult<T> = Result<T, Fail>;

fn fail<T>(status: DstarStatus, msg: impl Into<String>) -> FfiResult<T> {
    Err(Fail(status, msg.into()))
}

fn guard<F: FnOnce() -> FfiResult<()>>(f: F) -> DstarStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => DstarStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            DstarStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> FfiResult<&'a str> {
    if s.is_null() {
        return fail(DstarStatus::NullPointer, format!("{what} is NULL"));
    }
    // SAFETY: caller passes a valid NUL-terminated string.
    CStr::from_ptr(s)
        .to_str()
        .or_else(|e| fail(DstarStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> FfiResult<&'a T> {
    // SAFETY: caller passes a live handle from this library or NULL.
    p.as_ref().map_or_else(|| fail(DstarStatus::NullPointer, format!("{what} is NULL")), Ok)
}

unsafe fn write_out<T>(out: *mut T, value: T) -> FfiResult<()> {
    if out.is_null() {
        return fail(DstarStatus::NullPointer, "output pointer is NULL");
    }
    // SAFETY: caller passes a writable location.
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> FfiResult<()> {
    let c = CString::new(s).or_else(|_| fail(DstarStatus::Panic, "string contains NUL"))?;
    if out.is_null() {
        return fail(DstarStatus::NullPointer, "output pointer is NULL");
    }
    out.write(c.into_raw());
    Ok(())
}

unsafe fn write_handle<T>(out: *mut *mut T, value: T) -> FfiResult<()> {
    if out.is_null() {
        return fail(DstarStatus::NullPointer, "output pointer is NULL");
    }
    out.write(Box::into_raw(Box::new(value)));
    Ok(())
}

/// Message for the most recent failure on this thread, or NULL. Valid until
/// the next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn dstar_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Release a string returned by this library. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn dstar_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: `s` came from CString::into_raw in this crate.
        drop(CString::from_raw(s));
    }
}

// ---- graphs ---------------------------------------------------------------

/// Parse the `n <count>` / `u v` edge-list format.
#[no_mangle]
pub unsafe extern "C" fn dstar_graph_from_edge_list(text: *const c_char, out: *mut *mut DstarGraph) -> DstarStatus {
    guard(|| {
        let text = read_str(text, "text")?;
        let g = parse_edge_list(text).or_else(|e| fail(DstarStatus::ParseError, e.to_string()))?;
        write_handle(out, DstarGraph(g))
    })
}

/// Parse one graph6 record.
#[no_mangle]
pub unsafe extern "C" fn dstar_graph_from_graph6(text: *const c_char, out: *mut *mut DstarGraph) -> DstarStatus {
    guard(|| {
        let text = read_str(text, "text")?;
        let g = parse_graph6(text.as_bytes()).or_else(|e| fail(DstarStatus::ParseError, e.to_string()))?;
        write_handle(out, DstarGraph(g))
    })
}

/// Build a family member from `complete:N`, `path:N`, `cycle:N`, `star:K`
/// or `double-star:A,B`.
#[no_mangle]
pub unsafe extern "C" fn dstar_graph_from_family(spec: *const c_char, out: *mut *mut DstarGraph) -> DstarStatus {
    guard(|| {
        let spec = read_str(spec, "spec")?;
        let family: Family = spec.parse().or_else(|e: dstar::GraphError| fail(DstarStatus::InvalidArgument, e.to_string()))?;
        let g = family.build().or_else(|e| fail(DstarStatus::InvalidArgument, e.to_string()))?;
        write_handle(out, DstarGraph(g))
    })
}

/// Release a graph. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn dstar_graph_free(g: *mut DstarGraph) {
    if !g.is_null() {
        // SAFETY: `g` came from Box::into_raw in this crate.
        drop(Box::from_raw(g));
    }
}

#[no_mangle]
pub unsafe extern "C" fn dstar_graph_vertex_count(g: *const DstarGraph, out: *mut usize) -> DstarStatus {
    guard(|| write_out(out, deref(g, "graph")?.0.vertex_count()))
}

#[no_mangle]
pub unsafe extern "C" fn dstar_graph_edge_count(g: *const DstarGraph, out: *mut usize) -> DstarStatus {
    guard(|| write_out(out, deref(g, "graph")?.0.edge_count()))
}

#[no_mangle]
pub unsafe extern "C" fn dstar_graph_isolated_count(g: *const DstarGraph, out: *mut usize) -> DstarStatus {
    guard(|| write_out(out, deref(g, "graph")?.0.isolated_count()))
}

/// Copy vertex degrees into `buf`. `*len_out` always receives the vertex
/// count; if `buf_len` is smaller, nothing is copied and `BufferTooSmall` is
/// returned. `buf` may be NULL when `buf_len` is 0.
#[no_mangle]
pub unsafe extern "C" fn dstar_graph_degrees(
    g: *const DstarGraph,
    buf: *mut usize,
    buf_len: usize,
    len_out: *mut usize,
) -> DstarStatus {
    guard(|| {
        let degrees = deref(g, "graph")?.0.degrees();
        let ds = degrees.as_slice();
        write_out(len_out, ds.len())?;
        if buf_len < ds.len() {
            return fail(DstarStatus::BufferTooSmall, format!("need {} slots, got {buf_len}", ds.len()));
        }
        if !ds.is_empty() {
            if buf.is_null() {
                return fail(DstarStatus::NullPointer, "buf is NULL");
            }
            // SAFETY: buf has room for buf_len >= ds.len() elements.
            ptr::copy_nonoverlapping(ds.as_ptr(), buf, ds.len());
        }
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn dstar_graph_to_graph6(g: *const DstarGraph, out: *mut *mut c_char) -> DstarStatus {
    guard(|| write_string(out, deref(g, "graph")?.0.to_graph6()))
}

// ---- triangles ------------------------------------------------------------

#[no_mangle]
pub unsafe extern "C" fn dstar_star_sequence(g: *const DstarGraph, out: *mut *mut DstarTriangle) -> DstarStatus {
    guard(|| write_handle(out, DstarTriangle(star_sequence(&deref(g, "graph")?.0))))
}

#[no_mangle]
pub unsafe extern "C" fn dstar_frequency_sequence(g: *const DstarGraph, out: *mut *mut DstarTriangle) -> DstarStatus {
    guard(|| write_handle(out, DstarTriangle(frequency_sequence(&deref(g, "graph")?.0))))
}

/// Frequency triangle to double-star triangle.
#[no_mangle]
pub unsafe extern "C" fn dstar_star_from_frequency(f: *const DstarTriangle, out: *mut *mut DstarTriangle) -> DstarStatus {
    guard(|| write_handle(out, DstarTriangle(star_from_frequency(&deref(f, "triangle")?.0))))
}

/// Double-star triangle to frequency triangle.
#[no_mangle]
pub unsafe extern "C" fn dstar_frequency_from_star(s: *const DstarTriangle, out: *mut *mut DstarTriangle) -> DstarStatus {
    guard(|| write_handle(out, DstarTriangle(frequency_from_star(&deref(s, "triangle")?.0))))
}

/// Parse `{ "n": int, "entries": [[a, b, "decimal"], ...] }`.
#[no_mangle]
pub unsafe extern "C" fn dstar_triangle_from_json(json: *const c_char, out: *mut *mut DstarTriangle) -> DstarStatus {
    guard(|| {
        let json = read_str(json, "json")?;
        let t = StarTriangle::from_json_str(json).or_else(|e| fail(DstarStatus::ParseError, e.to_string()))?;
        write_handle(out, DstarTriangle(t))
    })
}

#[no_mangle]
pub unsafe extern "C" fn dstar_triangle_to_json(t: *const DstarTriangle, out: *mut *mut c_char) -> DstarStatus {
    guard(|| write_string(out, deref(t, "triangle")?.0.to_json_string()))
}

/// Vertex count the triangle belongs to.
#[no_mangle]
pub unsafe extern "C" fn dstar_triangle_n(t: *const DstarTriangle, out: *mut usize) -> DstarStatus {
    guard(|| write_out(out, deref(t, "triangle")?.0.n()))
}

/// Entry `(a, b)` as a decimal string; swapped or out-of-range indices follow
/// the library convention (symmetric lookup, zero outside).
#[no_mangle]
pub unsafe extern "C" fn dstar_triangle_get(t: *const DstarTriangle, a: usize, b: usize, out: *mut *mut c_char) -> DstarStatus {
    guard(|| write_string(out, deref(t, "triangle")?.0.get(a, b).to_string()))
}

/// Non-zero into `*out` when both triangles hold identical entries.
/// Triangles for different vertex counts give `SizeMismatch`.
#[no_mangle]
pub unsafe extern "C" fn dstar_triangle_equal(x: *const DstarTriangle, y: *const DstarTriangle, out: *mut bool) -> DstarStatus {
    guard(|| {
        let (x, y) = (&deref(x, "x")?.0, &deref(y, "y")?.0);
        x.ensure_same_n(y).or_else(|e| fail(DstarStatus::SizeMismatch, e.to_string()))?;
        write_out(out, x == y)
    })
}

#[no_mangle]
pub unsafe extern "C" fn dstar_triangle_free(t: *mut DstarTriangle) {
    if !t.is_null() {
        // SAFETY: `t` came from Box::into_raw in this crate.
        drop(Box::from_raw(t));
    }
}

// ---- Zagreb indices -------------------------------------------------------

/// `M2^(p)` by the edge sum.
#[no_mangle]
pub unsafe extern "C" fn dstar_m2_direct(g: *const DstarGraph, p: u64, out: *mut *mut c_char) -> DstarStatus {
    guard(|| write_string(out, m2_direct(&deref(g, "graph")?.0, p).to_string()))
}

/// `M2^(p)` from a frequency triangle.
#[no_mangle]
pub unsafe extern "C" fn dstar_m2_from_frequency(f: *const DstarTriangle, p: u64, out: *mut *mut c_char) -> DstarStatus {
    guard(|| write_string(out, m2_from_frequency(&deref(f, "triangle")?.0, p).to_string()))
}

/// `M2^(p)` from a double-star triangle.
#[no_mangle]
pub unsafe extern "C" fn dstar_m2_from_star(s: *const DstarTriangle, p: u64, out: *mut *mut c_char) -> DstarStatus {
    guard(|| write_string(out, m2_from_star(&deref(s, "triangle")?.0, p).to_string()))
}

// ---- generating function and recurrence -----------------------------------

#[no_mangle]
pub unsafe extern "C" fn dstar_generating_function(g: *const DstarGraph, out: *mut *mut DstarGf) -> DstarStatus {
    guard(|| write_handle(out, DstarGf(generating_function(&deref(g, "graph")?.0))))
}

/// `{ "numerator": ["decimal", ...], "denominator_roots": [c, ...] }`.
#[no_mangle]
pub unsafe extern "C" fn dstar_gf_to_json(gf: *const DstarGf, out: *mut *mut c_char) -> DstarStatus {
    guard(|| write_string(out, deref(gf, "gf")?.0.to_json_string()))
}

/// First `terms` series coefficients as a JSON array of decimal strings.
#[no_mangle]
pub unsafe extern "C" fn dstar_gf_series(gf: *const DstarGf, terms: usize, out: *mut *mut c_char) -> DstarStatus {
    guard(|| {
        let gf = &deref(gf, "gf")?.0;
        let series = series_divide(&gf.numerator, &gf.denominator(), terms)
            .or_else(|e| fail(DstarStatus::InvalidArgument, e.to_string()))?;
        let strings: Vec<String> = series.iter().map(ToString::to_string).collect();
        write_string(out, serde_json::to_string(&strings).expect("string array serializes"))
    })
}

#[no_mangle]
pub unsafe extern "C" fn dstar_gf_free(gf: *mut DstarGf) {
    if !gf.is_null() {
        // SAFETY: `gf` came from Box::into_raw in this crate.
        drop(Box::from_raw(gf));
    }
}

/// Comtet numbers `[C_{n-1}, i]`, `i = 0..=|C_{n-1}|`, as a JSON array of
/// decimal strings.
#[no_mangle]
pub unsafe extern "C" fn dstar_recurrence_coefficients(n: usize, out: *mut *mut c_char) -> DstarStatus {
    guard(|| {
        let coeffs: Vec<String> = recurrence_coefficients(n).iter().map(ToString::to_string).collect();
        write_string(out, serde_json::to_string(&coeffs).expect("string array serializes"))
    })
}

/// Run the identity suite on `g`. `*passed` receives the verdict; when
/// `report_out` is non-NULL it receives the JSON report.
#[no_mangle]
pub unsafe extern "C" fn dstar_verify(
    g: *const DstarGraph,
    p_max: u64,
    passed: *mut bool,
    report_out: *mut *mut c_char,
) -> DstarStatus {
    guard(|| {
        let report = verify_graph(&deref(g, "graph")?.0, VerifyOptions { p_max, inject_fault: false });
        write_out(passed, report.passed())?;
        if !report_out.is_null() {
            write_string(report_out, serde_json::to_string(&report).expect("report serializes"))?;
        }
        Ok(())
    })
}
