//! C interface to `graph-discord`.
//!
//! Graphs and labelings cross the boundary as opaque handles owned by the
//! caller and released with their `*_free` function. Every entry point
//! returns a [`GdStatus`]; on failure [`gd_last_error`] describes the cause
//! for the calling thread. Strings returned through `char **` must be
//! released with [`gd_string_free`]. Vertex and slot numbers are 1-based.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use graph_discord::binary::BinaryMatrix;
use graph_discord::block::block_decompose;
use graph_discord::density::Sign;
use graph_discord::generators::FamilySpec;
use graph_discord::graph::{parse_edge_list, ClusterLabeling, Graph};
use graph_discord::graph6::parse_graph6;
use graph_discord::measures::{self, qd};
use graph_discord::oracle::fixed_basis_discord;
use graph_discord::report::to_json;
use graph_discord::Error;

/// Result code of every call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GdStatus {
    Ok = 0,
    NullPointer = 1,
    Parse = 2,
    Dimension = 3,
    EmptyGraph = 4,
    InvalidArgument = 5,
    Internal = 6,
}

/// Opaque graph handle.
pub struct GdGraph(Graph);

/// Opaque cluster labeling handle.
pub struct GdLabeling(ClusterLabeling);

/// Violation totals and `QD` for one sign.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GdQd {
    pub prop2: u64,
    pub prop3: u64,
    pub prop4: u64,
    pub prop5: u64,
    pub qd: u64,
    pub zero_discord: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Fail(GdStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parse { .. }
            | Error::VertexOutOfRange { .. }
            | Error::SelfPair(_)
            | Error::NotBijective(_)
            | Error::NotBinary(_) => GdStatus::Parse,
            Error::Dimension(_) | Error::IndexOutOfRange { .. } => GdStatus::Dimension,
            Error::EmptyGraph => GdStatus::EmptyGraph,
            Error::Numerical(_) => GdStatus::Internal,
            _ => GdStatus::InvalidArgument,
        };
        Fail(status, e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(GdStatus::NullPointer, format!("{what} is null"))
}

fn invalid(msg: impl Into<String>) -> Fail {
    Fail(GdStatus::InvalidArgument, msg.into())
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> GdStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            GdStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            GdStatus::Internal
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(GdStatus::Parse, format!("{what} is not UTF-8")))
}

unsafe fn slice_arg<'a, T>(p: *const T, len: usize, what: &str) -> Result<&'a [T], Fail> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn ref_arg<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

fn sign_arg(s: i32) -> Result<Sign, Fail> {
    Sign::from_value(i64::from(s)).ok_or_else(|| invalid(format!("sign must be -1 or +1, got {s}")))
}

fn matrix_arg(entries: &[u8], order: usize) -> Result<BinaryMatrix, Fail> {
    if let Some(&x) = entries.iter().find(|&&x| x > 1) {
        return Err(Fail::from(Error::NotBinary(i64::from(x))));
    }
    Ok(BinaryMatrix::from_fn(order, |i, j| entries[i * order + j] == 1))
}

fn boxed<T>(value: T) -> *mut T {
    Box::into_raw(Box::new(value))
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn gd_status_message(status: GdStatus) -> *const c_char {
    let s: &'static CStr = match status {
        GdStatus::Ok => c"ok",
        GdStatus::NullPointer => c"null pointer argument",
        GdStatus::Parse => c"malformed input",
        GdStatus::Dimension => c"dimension mismatch",
        GdStatus::EmptyGraph => c"graph has no edges",
        GdStatus::InvalidArgument => c"invalid argument",
        GdStatus::Internal => c"internal error",
    };
    s.as_ptr()
}

/// Message for the most recent failure on this thread; empty after a
/// success. Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn gd_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Builds a graph from `edge_count` pairs of 1-based endpoints in `edges`
/// and `loop_count` 1-based vertices in `loops`.
///
/// # Safety
/// `edges` must point to `2 * edge_count` values and `loops` to
/// `loop_count` values (either may be null when its count is 0); `out` must
/// be writable.
#[no_mangle]
pub unsafe extern "C" fn gd_graph_new(
    vertex_count: usize,
    edges: *const u32,
    edge_count: usize,
    loops: *const u32,
    loop_count: usize,
    out: *mut *mut GdGraph,
) -> GdStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let flat = slice_arg(edges, 2 * edge_count, "edges")?;
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|p| (p[0] as usize, p[1] as usize)).collect();
        let loops: Vec<usize> = slice_arg(loops, loop_count, "loops")?.iter().map(|&v| v as usize).collect();
        let g = Graph::build(vertex_count, &pairs, &loops)?;
        *out = boxed(GdGraph(g));
        Ok(())
    })
}

/// Parses an edge-list document. The labeling comes from its header and
/// optional `perm:` line.
///
/// # Safety
/// `text` must be a NUL-terminated string; `graph_out` and `labeling_out`
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn gd_graph_from_edge_list(
    text: *const c_char,
    graph_out: *mut *mut GdGraph,
    labeling_out: *mut *mut GdLabeling,
) -> GdStatus {
    guard(|| {
        if graph_out.is_null() || labeling_out.is_null() {
            return Err(null("output pointer"));
        }
        let inst = parse_edge_list(str_arg(text, "text")?)?.into_instance()?;
        *graph_out = boxed(GdGraph(inst.graph));
        *labeling_out = boxed(GdLabeling(inst.labeling));
        Ok(())
    })
}

/// Decodes one graph6 line (short form).
///
/// # Safety
/// `line` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gd_graph_from_graph6(line: *const c_char, out: *mut *mut GdGraph) -> GdStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = boxed(GdGraph(parse_graph6(str_arg(line, "line")?)?));
        Ok(())
    })
}

/// Generates a family member, e.g. `("werner", "d=3")`.
///
/// # Safety
/// `family` and `params` must be NUL-terminated strings (`params` may be
/// null for none); `graph_out` and `labeling_out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gd_generate(
    family: *const c_char,
    params: *const c_char,
    graph_out: *mut *mut GdGraph,
    labeling_out: *mut *mut GdLabeling,
) -> GdStatus {
    guard(|| {
        if graph_out.is_null() || labeling_out.is_null() {
            return Err(null("output pointer"));
        }
        let params = if params.is_null() { "" } else { str_arg(params, "params")? };
        let inst = FamilySpec::parse(str_arg(family, "family")?, params)?.generate()?;
        *graph_out = boxed(GdGraph(inst.graph));
        *labeling_out = boxed(GdLabeling(inst.labeling));
        Ok(())
    })
}

/// # Safety
/// `graph` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn gd_graph_vertex_count(graph: *const GdGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.0.vertex_count())
}

/// # Safety
/// `graph` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn gd_graph_edge_count(graph: *const GdGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.0.edge_count())
}

/// # Safety
/// `graph` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn gd_graph_free(graph: *mut GdGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Labeling with `m` clusters of `n`. `permutation` lists the `m*n`
/// vertices cluster by cluster, 1-based; null gives the natural labeling.
///
/// # Safety
/// `permutation` must point to `len` values or be null; `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn gd_labeling_new(
    m: usize,
    n: usize,
    permutation: *const u32,
    len: usize,
    out: *mut *mut GdLabeling,
) -> GdStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let lab = if permutation.is_null() {
            ClusterLabeling::natural(m, n)?
        } else {
            let p: Vec<usize> = slice_arg(permutation, len, "permutation")?.iter().map(|&v| v as usize).collect();
            ClusterLabeling::new(m, n, &p)?
        };
        *out = boxed(GdLabeling(lab));
        Ok(())
    })
}

/// # Safety
/// `labeling` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn gd_labeling_free(labeling: *mut GdLabeling) {
    if !labeling.is_null() {
        drop(Box::from_raw(labeling));
    }
}

/// `QD` of `rho_l` (`sign = -1`) or `rho_q` (`sign = +1`).
///
/// # Safety
/// `graph` and `labeling` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gd_qd(
    graph: *const GdGraph,
    labeling: *const GdLabeling,
    sign: i32,
    out: *mut GdQd,
) -> GdStatus {
    guard(|| {
        let (g, lab) = (ref_arg(graph, "graph")?, ref_arg(labeling, "labeling")?);
        if out.is_null() {
            return Err(null("out"));
        }
        let r = qd(&g.0, &lab.0, sign_arg(sign)?)?;
        let b = &r.breakdown;
        *out = GdQd {
            prop2: b.prop2_total,
            prop3: b.prop3_total,
            prop4: b.prop4_total,
            prop5: b.prop5_total,
            qd: r.qd_total,
            zero_discord: r.is_zero_discord(),
        };
        Ok(())
    })
}

/// Full report as a JSON document; free with [`gd_string_free`].
///
/// # Safety
/// `graph` and `labeling` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gd_report_json(
    graph: *const GdGraph,
    labeling: *const GdLabeling,
    sign: i32,
    out: *mut *mut c_char,
) -> GdStatus {
    guard(|| {
        let (g, lab) = (ref_arg(graph, "graph")?, ref_arg(labeling, "labeling")?);
        if out.is_null() {
            return Err(null("out"));
        }
        let json = to_json(&qd(&g.0, &lab.0, sign_arg(sign)?)?);
        *out = CString::new(json).map_err(|_| invalid("report contains NUL"))?.into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn gd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Discord in bits for a measurement of the slot index in the
/// computational basis.
///
/// # Safety
/// `graph` and `labeling` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gd_fixed_basis_discord(
    graph: *const GdGraph,
    labeling: *const GdLabeling,
    sign: i32,
    out: *mut f64,
) -> GdStatus {
    guard(|| {
        let (g, lab) = (ref_arg(graph, "graph")?, ref_arg(labeling, "labeling")?);
        if out.is_null() {
            return Err(null("out"));
        }
        let rho = block_decompose(&g.0, &lab.0)?.density_matrix(sign_arg(sign)?)?;
        *out = fixed_basis_discord(&rho, lab.0.m(), lab.0.n())?.discord_fixed_basis;
        Ok(())
    })
}

/// Non-normality of a row-major `order x order` 0/1 matrix.
///
/// # Safety
/// `matrix` must point to `order * order` bytes; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gd_nn(matrix: *const u8, order: usize, out: *mut u64) -> GdStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let m = matrix_arg(slice_arg(matrix, order * order, "matrix")?, order)?;
        *out = measures::nn(&m);
        Ok(())
    })
}

/// Non-commutativity of two row-major `order x order` 0/1 matrices.
///
/// # Safety
/// `a` and `b` must each point to `order * order` bytes; `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn gd_nc1(a: *const u8, b: *const u8, order: usize, out: *mut u64) -> GdStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let a = matrix_arg(slice_arg(a, order * order, "a")?, order)?;
        let b = matrix_arg(slice_arg(b, order * order, "b")?, order)?;
        *out = measures::nc1(&a, &b)?;
        Ok(())
    })
}
