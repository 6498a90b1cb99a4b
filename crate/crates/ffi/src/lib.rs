//! C ABI for the edge-ideals library.
//!
//! Graphs are opaque handles created and freed by this layer; every function
//! returns an [`EiStatus`] code and writes results through out-pointers.
//! Strings returned through `char **` are UTF-8, NUL-terminated, and must be
//! released with [`ei_string_free`].

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use edge_ideals::scm;
use edge_ideals::{Error, FieldSpec, Graph, MonomialIdeal};

/// Status codes returned by every FFI entry point.
#[repr(C)]
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum EiStatus {
    /// Success.
    Ok = 0,
    /// A required pointer argument was NULL.
    NullPointer = 1,
    /// Arguments violate a precondition (bad vertex count, loop edge,
    /// non-prime characteristic, ...).
    InvalidArgument = 2,
    /// The input text failed to parse.
    ParseError = 3,
    /// The operation is undefined for the input (e.g. the dual of an edgeless
    /// graph's edge ideal).
    Unsupported = 4,
    /// Internal cross-check failure; never expected.
    Internal = 5,
}

/// Opaque graph handle.
pub struct EiGraph {
    inner: Graph,
}

fn status_of(err: &Error) -> EiStatus {
    match err {
        Error::Parse { .. } => EiStatus::ParseError,
        Error::DualOfZero | Error::DualOfUnit | Error::ZeroIdeal | Error::UnitIdeal
        | Error::EdgelessGraph | Error::NotChordal | Error::VoidComplex => EiStatus::Unsupported,
        Error::RouteDisagreement { .. } => EiStatus::Internal,
        _ => EiStatus::InvalidArgument,
    }
}

unsafe fn write_graph(out: *mut *mut EiGraph, g: Graph) -> EiStatus {
    if out.is_null() {
        return EiStatus::NullPointer;
    }
    *out = Box::into_raw(Box::new(EiGraph { inner: g }));
    EiStatus::Ok
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> EiStatus {
    if out.is_null() {
        return EiStatus::NullPointer;
    }
    match CString::new(s) {
        Ok(cs) => {
            *out = cs.into_raw();
            EiStatus::Ok
        }
        Err(_) => EiStatus::Internal,
    }
}

fn field_of(characteristic: u64) -> Result<FieldSpec, EiStatus> {
    FieldSpec::new(characteristic).map_err(|_| EiStatus::InvalidArgument)
}

/// Builds a graph on `n` vertices from `edge_count` pairs of 1-based
/// endpoints laid out as `[i1, j1, i2, j2, ...]`.
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable `u32`s (may be NULL when
/// `edge_count` is 0); `out` must be a valid pointer. The handle must be
/// released with [`ei_graph_free`].
#[no_mangle]
pub unsafe extern "C" fn ei_graph_create(
    n: u32,
    edges: *const u32,
    edge_count: usize,
    out: *mut *mut EiGraph,
) -> EiStatus {
    if edge_count > 0 && edges.is_null() {
        return EiStatus::NullPointer;
    }
    let pairs: Vec<(usize, usize)> = (0..edge_count)
        .map(|k| {
            let i = *edges.add(2 * k) as usize;
            let j = *edges.add(2 * k + 1) as usize;
            (i, j)
        })
        .collect();
    match Graph::new(n as usize, &pairs) {
        Ok(g) => write_graph(out, g),
        Err(e) => status_of(&e),
    }
}

/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ei_graph_cycle(n: u32, out: *mut *mut EiGraph) -> EiStatus {
    match Graph::cycle(n as usize) {
        Ok(g) => write_graph(out, g),
        Err(e) => status_of(&e),
    }
}

/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ei_graph_complete(n: u32, out: *mut *mut EiGraph) -> EiStatus {
    match Graph::complete(n as usize) {
        Ok(g) => write_graph(out, g),
        Err(e) => status_of(&e),
    }
}

/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ei_graph_path(n: u32, out: *mut *mut EiGraph) -> EiStatus {
    match Graph::path(n as usize) {
        Ok(g) => write_graph(out, g),
        Err(e) => status_of(&e),
    }
}

/// Parses the edge-list text format (first non-comment line `n`, then one
/// `i j` pair per line; `#` starts a comment).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ei_graph_parse(text: *const c_char, out: *mut *mut EiGraph) -> EiStatus {
    if text.is_null() {
        return EiStatus::NullPointer;
    }
    let Ok(text) = CStr::from_ptr(text).to_str() else {
        return EiStatus::ParseError;
    };
    match Graph::from_edge_list_text(text) {
        Ok(g) => write_graph(out, g),
        Err(e) => status_of(&e),
    }
}

/// Releases a graph handle. NULL is a no-op.
///
/// # Safety
/// `g` must have been returned by one of the `ei_graph_*` constructors and
/// not freed already.
#[no_mangle]
pub unsafe extern "C" fn ei_graph_free(g: *mut EiGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

unsafe fn graph_ref<'a>(g: *const EiGraph) -> Result<&'a Graph, EiStatus> {
    g.as_ref().map(|h| &h.inner).ok_or(EiStatus::NullPointer)
}

unsafe fn write_bool(out: *mut bool, value: bool) -> EiStatus {
    if out.is_null() {
        return EiStatus::NullPointer;
    }
    *out = value;
    EiStatus::Ok
}

/// # Safety
/// `g` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ei_graph_vertex_count(g: *const EiGraph, out: *mut u32) -> EiStatus {
    let graph = match graph_ref(g) {
        Ok(graph) => graph,
        Err(status) => return status,
    };
    if out.is_null() {
        return EiStatus::NullPointer;
    }
    *out = graph.n() as u32;
    EiStatus::Ok
}

/// # Safety
/// `g` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ei_graph_is_chordal(g: *const EiGraph, out: *mut bool) -> EiStatus {
    match graph_ref(g) {
        Ok(graph) => write_bool(out, graph.is_chordal()),
        Err(status) => status,
    }
}

/// # Safety
/// `g` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ei_graph_is_forest(g: *const EiGraph, out: *mut bool) -> EiStatus {
    match graph_ref(g) {
        Ok(graph) => write_bool(out, graph.is_forest()),
        Err(status) => status,
    }
}

/// Sequential Cohen-Macaulayness over the field of the given characteristic
/// (0 or a prime below 2^31).
///
/// # Safety
/// `g` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ei_is_scm(
    g: *const EiGraph,
    characteristic: u64,
    out: *mut bool,
) -> EiStatus {
    let graph = match graph_ref(g) {
        Ok(graph) => graph,
        Err(status) => return status,
    };
    let field = match field_of(characteristic) {
        Ok(field) => field,
        Err(status) => return status,
    };
    write_bool(out, scm::is_scm(graph, field))
}

/// # Safety
/// `g` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ei_is_cm(
    g: *const EiGraph,
    characteristic: u64,
    out: *mut bool,
) -> EiStatus {
    let graph = match graph_ref(g) {
        Ok(graph) => graph,
        Err(status) => return status,
    };
    let field = match field_of(characteristic) {
        Ok(field) => field,
        Err(status) => return status,
    };
    write_bool(out, scm::is_cm_graph(graph, field))
}

/// Unmixedness of the edge ideal; edgeless graphs count as unmixed.
///
/// # Safety
/// `g` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ei_is_unmixed(g: *const EiGraph, out: *mut bool) -> EiStatus {
    let graph = match graph_ref(g) {
        Ok(graph) => graph,
        Err(status) => return status,
    };
    if graph.is_edgeless() {
        return write_bool(out, true);
    }
    match MonomialIdeal::edge_ideal(graph).is_unmixed() {
        Ok(v) => write_bool(out, v),
        Err(e) => status_of(&e),
    }
}

/// Full classification as a JSON object, the same shape the CLI emits.
///
/// # Safety
/// `g` must be a live handle; `out` must be valid. Free the string with
/// [`ei_string_free`].
#[no_mangle]
pub unsafe extern "C" fn ei_classify_json(
    g: *const EiGraph,
    characteristic: u64,
    out: *mut *mut c_char,
) -> EiStatus {
    let graph = match graph_ref(g) {
        Ok(graph) => graph,
        Err(status) => return status,
    };
    let field = match field_of(characteristic) {
        Ok(field) => field,
        Err(status) => return status,
    };
    match scm::classify(graph, field) {
        Ok(report) => write_string(out, report.to_json().to_string()),
        Err(e) => status_of(&e),
    }
}

/// Alexander dual generators as a JSON array of index arrays.
///
/// # Safety
/// `g` must be a live handle; `out` must be valid. Free the string with
/// [`ei_string_free`].
#[no_mangle]
pub unsafe extern "C" fn ei_dual_json(g: *const EiGraph, out: *mut *mut c_char) -> EiStatus {
    let graph = match graph_ref(g) {
        Ok(graph) => graph,
        Err(status) => return status,
    };
    match MonomialIdeal::edge_ideal(graph).alexander_dual() {
        Ok(dual) => write_string(out, dual.to_json().to_string()),
        Err(e) => status_of(&e),
    }
}

/// Betti table of the edge ideal (or its Alexander dual) as JSON
/// `{"i":…,"j":…,"beta":…}` triples.
///
/// # Safety
/// `g` must be a live handle; `out` must be valid. Free the string with
/// [`ei_string_free`].
#[no_mangle]
pub unsafe extern "C" fn ei_betti_json(
    g: *const EiGraph,
    characteristic: u64,
    of_dual: bool,
    out: *mut *mut c_char,
) -> EiStatus {
    let graph = match graph_ref(g) {
        Ok(graph) => graph,
        Err(status) => return status,
    };
    let field = match field_of(characteristic) {
        Ok(field) => field,
        Err(status) => return status,
    };
    let mut ideal = MonomialIdeal::edge_ideal(graph);
    if of_dual {
        ideal = match ideal.alexander_dual() {
            Ok(dual) => dual,
            Err(e) => return status_of(&e),
        };
    }
    match edge_ideals::resolution::betti_table(&ideal, field) {
        Ok(table) => write_string(out, table.to_json().to_string()),
        Err(e) => status_of(&e),
    }
}

/// Releases a string returned by this library. NULL is a no-op.
///
/// # Safety
/// `s` must have been returned by an `ei_*_json` function and not freed
/// already.
#[no_mangle]
pub unsafe extern "C" fn ei_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Static description of a status code; never needs freeing.
#[no_mangle]
pub extern "C" fn ei_status_message(status: EiStatus) -> *const c_char {
    let msg: &'static [u8] = match status {
        EiStatus::Ok => b"ok\0",
        EiStatus::NullPointer => b"null pointer argument\0",
        EiStatus::InvalidArgument => b"invalid argument\0",
        EiStatus::ParseError => b"parse error\0",
        EiStatus::Unsupported => b"operation undefined for this input\0",
        EiStatus::Internal => b"internal invariant violation\0",
    };
    msg.as_ptr() as *const c_char
}

// keep a typed null around so cbindgen sees the opaque struct used by value
#[doc(hidden)]
pub fn _opaque_marker() -> *const EiGraph {
    ptr::null()
}
