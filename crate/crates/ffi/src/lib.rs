//! C ABI for `isodiamond`.
//!
//! Graphs and embeddings are opaque heap handles released with their
//! `_free` functions. Every fallible call returns an [`IsodiamondStatus`]
//! and writes results through out-pointers; on failure a description is
//! available from [`isodiamond_last_error`] on the same thread. Strings
//! returned through `char **` out-pointers belong to the caller and are
//! released with [`isodiamond_string_free`].

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use isodiamond::certificate::certificate_json;
use isodiamond::generators::{generate_diamond_patch, generate_named};
use isodiamond::{
    embed_direct, embed_minimum, emit_svg, is_isometric_diamond_subgraph, is_partial_cube, parse_edge_list,
    verify_embedding, DiamondEmbedding, DrawingConfig, Graph, Obstruction,
};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsodiamondStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    NotEmbeddable = 5,
    UnsupportedDimension = 6,
    ResourceLimit = 7,
    Panic = 8,
}

/// Which construction [`isodiamond_embed`] uses.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsodiamondEmbeddingKind {
    /// Minimum dimension.
    Minimum = 0,
    /// One coordinate per relation class.
    Direct = 1,
}

/// Opaque graph handle.
pub struct IsodiamondGraph {
    inner: Graph,
}

/// Opaque embedding handle.
pub struct IsodiamondEmbedding {
    inner: DiamondEmbedding,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(IsodiamondStatus, String);

impl Failure {
    fn new(status: IsodiamondStatus, message: impl ToString) -> Self {
        Failure(status, message.to_string())
    }
}

fn set_last_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> IsodiamondStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
            IsodiamondStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_last_error(message);
            status
        }
        Err(_) => {
            set_last_error("internal panic".to_string());
            IsodiamondStatus::Panic
        }
    }
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| Failure::new(IsodiamondStatus::NullPointer, format!("{what} is null")))
}

unsafe fn input_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::new(IsodiamondStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure::new(IsodiamondStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::new(IsodiamondStatus::NullPointer, "output pointer is null"));
    }
    out.write(value);
    Ok(())
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior NUL").into_raw()
}

unsafe fn write_graph(out: *mut *mut IsodiamondGraph, g: Graph) -> Result<(), Failure> {
    write_out(out, Box::into_raw(Box::new(IsodiamondGraph { inner: g })))
}

fn obstruction(o: Obstruction) -> Failure {
    let cert = certificate_json(&o).to_string();
    Failure::new(IsodiamondStatus::NotEmbeddable, format!("{o}: {cert}"))
}

/// Parses the edge-list text format.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn isodiamond_graph_from_edge_list(
    text: *const c_char,
    out: *mut *mut IsodiamondGraph,
) -> IsodiamondStatus {
    guard(|| {
        let text = input_str(text, "text")?;
        let g = parse_edge_list(text).map_err(|e| Failure::new(IsodiamondStatus::ParseError, e))?;
        write_graph(out, g)
    })
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `pairs` (`2 * edge_count` entries).
///
/// # Safety
/// `pairs` must point to `2 * edge_count` readable values (or may be null
/// when `edge_count` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn isodiamond_graph_from_edges(
    n: usize,
    pairs: *const usize,
    edge_count: usize,
    out: *mut *mut IsodiamondGraph,
) -> IsodiamondStatus {
    guard(|| {
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else {
            if pairs.is_null() {
                return Err(Failure::new(IsodiamondStatus::NullPointer, "pairs is null"));
            }
            let len = edge_count
                .checked_mul(2)
                .ok_or_else(|| Failure::new(IsodiamondStatus::InvalidArgument, "edge count overflows"))?;
            std::slice::from_raw_parts(pairs, len)
        };
        let edges = flat.chunks_exact(2).map(|p| (p[0], p[1]));
        let g = Graph::new(n, edges).map_err(|e| Failure::new(IsodiamondStatus::InvalidArgument, e))?;
        write_graph(out, g)
    })
}

/// Looks up a named fixture such as `"desargues"`, `"c6"` or `"p5"`.
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn isodiamond_graph_named(
    name: *const c_char,
    out: *mut *mut IsodiamondGraph,
) -> IsodiamondStatus {
    guard(|| {
        let name = input_str(name, "name")?;
        let g = generate_named(name).map_err(|e| Failure::new(IsodiamondStatus::InvalidArgument, e))?;
        write_graph(out, g)
    })
}

/// Patch of the `k`-dimensional diamond graph with coordinates in `-r..=r`,
/// refused with `RESOURCE_LIMIT` above `cap` vertices.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn isodiamond_graph_diamond_patch(
    k: usize,
    r: usize,
    cap: usize,
    out: *mut *mut IsodiamondGraph,
) -> IsodiamondStatus {
    guard(|| {
        let patch = generate_diamond_patch(k, r, cap).map_err(|e| Failure::new(IsodiamondStatus::ResourceLimit, e))?;
        write_graph(out, patch.graph)
    })
}

/// # Safety
/// `graph` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn isodiamond_graph_free(graph: *mut IsodiamondGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn isodiamond_graph_vertex_count(graph: *const IsodiamondGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.inner.vertex_count())
}

/// Number of edges, or 0 for a null handle.
///
/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn isodiamond_graph_edge_count(graph: *const IsodiamondGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.inner.edge_count())
}

/// Writes whether the graph is a partial cube. Disconnected graphs give
/// `INVALID_ARGUMENT`.
///
/// # Safety
/// `graph` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn isodiamond_is_partial_cube(graph: *const IsodiamondGraph, out: *mut bool) -> IsodiamondStatus {
    guard(|| {
        let g = borrow(graph, "graph")?;
        let verdict = is_partial_cube(&g.inner).map_err(|e| Failure::new(IsodiamondStatus::InvalidArgument, e))?;
        write_out(out, verdict.is_yes())
    })
}

/// Writes whether the graph is an isometric diamond subgraph. When
/// `certificate` is non-null it receives the rejection certificate as JSON,
/// or null for embeddable graphs.
///
/// # Safety
/// `graph` must be a live handle; `embeddable` must be writable;
/// `certificate` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn isodiamond_recognize(
    graph: *const IsodiamondGraph,
    embeddable: *mut bool,
    certificate: *mut *mut c_char,
) -> IsodiamondStatus {
    guard(|| {
        let g = borrow(graph, "graph")?;
        let result = is_isometric_diamond_subgraph(&g.inner);
        write_out(embeddable, result.is_ok())?;
        if !certificate.is_null() {
            let cert = match result {
                Ok(_) => ptr::null_mut(),
                Err(o) => into_c_string(certificate_json(&o).to_string()),
            };
            certificate.write(cert);
        }
        Ok(())
    })
}

/// Writes the minimum diamond dimension, or returns `NOT_EMBEDDABLE`.
///
/// # Safety
/// `graph` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn isodiamond_dimension(graph: *const IsodiamondGraph, out: *mut usize) -> IsodiamondStatus {
    guard(|| {
        let g = borrow(graph, "graph")?;
        let s = is_isometric_diamond_subgraph(&g.inner).map_err(obstruction)?;
        write_out(out, s.dimension())
    })
}

/// Computes and verifies an embedding.
///
/// # Safety
/// `graph` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn isodiamond_embed(
    graph: *const IsodiamondGraph,
    kind: IsodiamondEmbeddingKind,
    out: *mut *mut IsodiamondEmbedding,
) -> IsodiamondStatus {
    guard(|| {
        let g = borrow(graph, "graph")?;
        let e = match kind {
            IsodiamondEmbeddingKind::Minimum => embed_minimum(&g.inner),
            IsodiamondEmbeddingKind::Direct => embed_direct(&g.inner),
        }
        .map_err(obstruction)?;
        verify_embedding(&g.inner, &e).map_err(|v| Failure::new(IsodiamondStatus::Panic, v))?;
        write_out(out, Box::into_raw(Box::new(IsodiamondEmbedding { inner: e })))
    })
}

/// Parses an embedding document `{"dimension": d, "vectors": [...]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn isodiamond_embedding_from_json(
    json: *const c_char,
    out: *mut *mut IsodiamondEmbedding,
) -> IsodiamondStatus {
    guard(|| {
        let json = input_str(json, "json")?;
        let e: DiamondEmbedding =
            serde_json::from_str(json).map_err(|e| Failure::new(IsodiamondStatus::ParseError, e))?;
        write_out(out, Box::into_raw(Box::new(IsodiamondEmbedding { inner: e })))
    })
}

/// # Safety
/// `embedding` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn isodiamond_embedding_free(embedding: *mut IsodiamondEmbedding) {
    if !embedding.is_null() {
        drop(Box::from_raw(embedding));
    }
}

/// Embedding dimension `d`; vectors have `d + 1` coordinates. 0 for null.
///
/// # Safety
/// `embedding` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn isodiamond_embedding_dimension(embedding: *const IsodiamondEmbedding) -> usize {
    embedding.as_ref().map_or(0, |e| e.inner.dimension)
}

/// Number of vectors, or 0 for null.
///
/// # Safety
/// `embedding` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn isodiamond_embedding_vertex_count(embedding: *const IsodiamondEmbedding) -> usize {
    embedding.as_ref().map_or(0, |e| e.inner.vertex_count())
}

/// Copies the vector of `vertex` into `buf`, which must hold at least
/// `dimension + 1` values.
///
/// # Safety
/// `embedding` must be a live handle; `buf` must point to `len` writable values.
#[no_mangle]
pub unsafe extern "C" fn isodiamond_embedding_coords(
    embedding: *const IsodiamondEmbedding,
    vertex: usize,
    buf: *mut i64,
    len: usize,
) -> IsodiamondStatus {
    guard(|| {
        let e = borrow(embedding, "embedding")?;
        let Some(v) = e.inner.coords.get(vertex) else {
            return Err(Failure::new(
                IsodiamondStatus::InvalidArgument,
                format!("vertex {vertex} out of range"),
            ));
        };
        if len < v.len() {
            return Err(Failure::new(
                IsodiamondStatus::InvalidArgument,
                format!("buffer holds {len} values, need {}", v.len()),
            ));
        }
        if buf.is_null() {
            return Err(Failure::new(IsodiamondStatus::NullPointer, "buf is null"));
        }
        ptr::copy_nonoverlapping(v.as_ptr(), buf, v.len());
        Ok(())
    })
}

/// Serializes an embedding to its JSON document.
///
/// # Safety
/// `embedding` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn isodiamond_embedding_to_json(
    embedding: *const IsodiamondEmbedding,
    out: *mut *mut c_char,
) -> IsodiamondStatus {
    guard(|| {
        let e = borrow(embedding, "embedding")?;
        let text = serde_json::to_string(&e.inner).map_err(|e| Failure::new(IsodiamondStatus::Panic, e))?;
        write_out(out, into_c_string(text))
    })
}

/// Writes whether the embedding is valid and isometric for the graph; the
/// first violation, if any, is left in [`isodiamond_last_error`].
///
/// # Safety
/// `graph` and `embedding` must be live handles; `ok` must be writable.
#[no_mangle]
pub unsafe extern "C" fn isodiamond_verify(
    graph: *const IsodiamondGraph,
    embedding: *const IsodiamondEmbedding,
    ok: *mut bool,
) -> IsodiamondStatus {
    let mut violation = None;
    let status = guard(|| {
        let g = borrow(graph, "graph")?;
        let e = borrow(embedding, "embedding")?;
        let result = verify_embedding(&g.inner, &e.inner);
        write_out(ok, result.is_ok())?;
        violation = result.err();
        Ok(())
    });
    if let Some(v) = violation {
        set_last_error(v.to_string());
    }
    status
}

/// Renders a dimension-2 embedding as SVG.
///
/// # Safety
/// `graph` and `embedding` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn isodiamond_to_svg(
    graph: *const IsodiamondGraph,
    embedding: *const IsodiamondEmbedding,
    scale: f64,
    out: *mut *mut c_char,
) -> IsodiamondStatus {
    guard(|| {
        let g = borrow(graph, "graph")?;
        let e = borrow(embedding, "embedding")?;
        let cfg = DrawingConfig {
            scale,
            ..DrawingConfig::default()
        };
        let svg = emit_svg(&g.inner, &e.inner, &cfg).map_err(|err| {
            let status = match err {
                isodiamond::DrawError::UnsupportedDimension(_) => IsodiamondStatus::UnsupportedDimension,
                _ => IsodiamondStatus::InvalidArgument,
            };
            Failure::new(status, err)
        })?;
        write_out(out, into_c_string(svg))
    })
}

/// # Safety
/// `s` must be null or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn isodiamond_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failed call on this thread, or null. Valid until
/// the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn isodiamond_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn isodiamond_status_message(status: IsodiamondStatus) -> *const c_char {
    let msg: &'static [u8] = match status {
        IsodiamondStatus::Ok => b"ok\0",
        IsodiamondStatus::NullPointer => b"null pointer argument\0",
        IsodiamondStatus::InvalidUtf8 => b"string is not valid UTF-8\0",
        IsodiamondStatus::ParseError => b"parse error\0",
        IsodiamondStatus::InvalidArgument => b"invalid argument\0",
        IsodiamondStatus::NotEmbeddable => b"graph is not an isometric diamond subgraph\0",
        IsodiamondStatus::UnsupportedDimension => b"unsupported embedding dimension\0",
        IsodiamondStatus::ResourceLimit => b"resource limit exceeded\0",
        IsodiamondStatus::Panic => b"internal error\0",
    };
    msg.as_ptr().cast()
}
