//! C ABI over `transit-core`.
//!
//! Every fallible call returns a [`TgStatus`]; on failure the message is kept
//! per thread and read back with [`tg_last_error`]. Objects cross the boundary
//! as opaque handles, everything structured crosses as JSON. Strings handed
//! out by the library must be released with [`tg_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use serde::Serialize;
use transit_core::formats::{graph_from_text, transit_from_json, transit_to_json};
use transit_core::harness::{verify_theorem, TheoremId};
use transit_core::recognizers::{recognize, ClassId};
use transit_core::{
    axiom_profile, check_axiom, graphs, hull, is_convex_geometry, AxiomId, Error, Graph, Model, Subset,
};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidInput = 3,
    OutOfRange = 4,
    AxiomViolation = 5,
    TooLarge = 6,
    Disconnected = 7,
    UnknownId = 8,
    HypothesesNotMet = 9,
    Internal = 10,
    Panic = 11,
}

impl From<&Error> for TgStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::AxiomViolation { .. } => TgStatus::AxiomViolation,
            Error::IndexOutOfRange { .. } => TgStatus::OutOfRange,
            Error::GroundTooLarge { .. } => TgStatus::TooLarge,
            Error::Disconnected | Error::NotConnected => TgStatus::Disconnected,
            Error::UnknownTheorem(_) | Error::UnknownPredicate(_) | Error::UnknownId(_) => TgStatus::UnknownId,
            Error::HypothesesNotMet(_) => TgStatus::HypothesesNotMet,
            Error::InternalDisagreement(_) => TgStatus::Internal,
            _ => TgStatus::InvalidInput,
        }
    }
}

/// Opaque handle to a transit function.
pub struct TgTransit(transit_core::TransitFunction);

/// Opaque handle to a simple graph.
pub struct TgGraph(Graph);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nuls removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Fail(TgStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(TgStatus::from(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(TgStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, translating errors and panics into a status and a message.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> TgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            TgStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside transit-ffi".into());
            TgStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    unsafe { CStr::from_ptr(p) }.to_str().map_err(|_| Fail(TgStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn out<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Fail> {
    unsafe { p.as_mut() }.ok_or_else(|| null(what))
}

fn json_out(v: &impl Serialize, dst: &mut *mut c_char) -> Result<(), Fail> {
    let s = serde_json::to_string(v).map_err(|e| Fail(TgStatus::Internal, e.to_string()))?;
    string_out(s, dst)
}

fn string_out(s: String, dst: &mut *mut c_char) -> Result<(), Fail> {
    *dst = CString::new(s).map_err(|e| Fail(TgStatus::Internal, e.to_string()))?.into_raw();
    Ok(())
}

/// Message for the last failed call on this thread, or null after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn tg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn tg_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Parses a transit function from its JSON document.
///
/// # Safety
/// `json` must be a nul-terminated string; `out_handle` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tg_transit_from_json(json: *const c_char, out_handle: *mut *mut TgTransit) -> TgStatus {
    guard(|| {
        let dst = unsafe { out(out_handle, "out_handle") }?;
        let r = transit_from_json(unsafe { text(json, "json") }?)?;
        *dst = Box::into_raw(Box::new(TgTransit(r)));
        Ok(())
    })
}

/// # Safety
/// `t` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tg_transit_free(t: *mut TgTransit) {
    if !t.is_null() {
        drop(unsafe { Box::from_raw(t) });
    }
}

/// # Safety
/// `t` must be a live handle and `out_json` writable.
#[no_mangle]
pub unsafe extern "C" fn tg_transit_to_json(t: *const TgTransit, out_json: *mut *mut c_char) -> TgStatus {
    guard(|| {
        let r = unsafe { t.as_ref() }.ok_or_else(|| null("t"))?;
        let dst = unsafe { out(out_json, "out_json") }?;
        string_out(transit_to_json(&r.0), dst)
    })
}

/// Size of the ground set.
///
/// # Safety
/// `t` must be a live handle and `out_n` writable.
#[no_mangle]
pub unsafe extern "C" fn tg_transit_len(t: *const TgTransit, out_n: *mut usize) -> TgStatus {
    guard(|| {
        let r = unsafe { t.as_ref() }.ok_or_else(|| null("t"))?;
        *unsafe { out(out_n, "out_n") }? = r.0.len();
        Ok(())
    })
}

/// `R(u, v)` as a bitmask over the ground set.
///
/// # Safety
/// `t` must be a live handle and `out_set` writable.
#[no_mangle]
pub unsafe extern "C" fn tg_transit_get(t: *const TgTransit, u: usize, v: usize, out_set: *mut u64) -> TgStatus {
    guard(|| {
        let r = unsafe { t.as_ref() }.ok_or_else(|| null("t"))?;
        *unsafe { out(out_set, "out_set") }? = r.0.transit_set(u, v)?.bits();
        Ok(())
    })
}

/// Checks one axiom by name (`b1`, `J0`, `(Ch)`, `a'`, ...).
///
/// # Safety
/// `t` must be a live handle, `axiom` a nul-terminated string and `out_holds`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn tg_check_axiom(t: *const TgTransit, axiom: *const c_char, out_holds: *mut bool) -> TgStatus {
    guard(|| {
        let r = unsafe { t.as_ref() }.ok_or_else(|| null("t"))?;
        let a: AxiomId = unsafe { text(axiom, "axiom") }?.parse()?;
        let dst = unsafe { out(out_holds, "out_holds") }?;
        *dst = check_axiom(&r.0, a).holds;
        Ok(())
    })
}

/// Every axiom verdict, with witnesses, as a JSON object keyed by axiom.
///
/// # Safety
/// `t` must be a live handle and `out_json` writable.
#[no_mangle]
pub unsafe extern "C" fn tg_axiom_profile_json(t: *const TgTransit, out_json: *mut *mut c_char) -> TgStatus {
    guard(|| {
        let r = unsafe { t.as_ref() }.ok_or_else(|| null("t"))?;
        json_out(&axiom_profile(&r.0), unsafe { out(out_json, "out_json") }?)
    })
}

/// Convex hull of the bitmask `set`.
///
/// # Safety
/// `t` must be a live handle and `out_set` writable.
#[no_mangle]
pub unsafe extern "C" fn tg_hull(t: *const TgTransit, set: u64, out_set: *mut u64) -> TgStatus {
    guard(|| {
        let r = unsafe { t.as_ref() }.ok_or_else(|| null("t"))?;
        let s = Subset::from_bits(set);
        if !s.is_subset(r.0.ground().full()) {
            return Err(Fail(TgStatus::OutOfRange, format!("set {set:#x} leaves the ground set")));
        }
        *unsafe { out(out_set, "out_set") }? = hull(&r.0, s).bits();
        Ok(())
    })
}

/// Whether the R-convexity is a convex geometry.
///
/// # Safety
/// `t` must be a live handle and `out_is_geometry` writable.
#[no_mangle]
pub unsafe extern "C" fn tg_is_convex_geometry(t: *const TgTransit, out_is_geometry: *mut bool) -> TgStatus {
    guard(|| {
        let r = unsafe { t.as_ref() }.ok_or_else(|| null("t"))?;
        let dst = unsafe { out(out_is_geometry, "out_is_geometry") }?;
        *dst = is_convex_geometry(&r.0)?.is_geometry;
        Ok(())
    })
}

/// The full geometry certificate as JSON.
///
/// # Safety
/// `t` must be a live handle and `out_json` writable.
#[no_mangle]
pub unsafe extern "C" fn tg_geometry_json(t: *const TgTransit, out_json: *mut *mut c_char) -> TgStatus {
    guard(|| {
        let r = unsafe { t.as_ref() }.ok_or_else(|| null("t"))?;
        json_out(&is_convex_geometry(&r.0)?, unsafe { out(out_json, "out_json") }?)
    })
}

/// Parses a graph from graph6 or an adjacency JSON document.
///
/// # Safety
/// `src` must be a nul-terminated string; `out_handle` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tg_graph_parse(src: *const c_char, out_handle: *mut *mut TgGraph) -> TgStatus {
    guard(|| {
        let dst = unsafe { out(out_handle, "out_handle") }?;
        let g = graph_from_text(unsafe { text(src, "src") }?)?;
        *dst = Box::into_raw(Box::new(TgGraph(g)));
        Ok(())
    })
}

/// # Safety
/// `g` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tg_graph_free(g: *mut TgGraph) {
    if !g.is_null() {
        drop(unsafe { Box::from_raw(g) });
    }
}

/// Number of vertices.
///
/// # Safety
/// `g` must be a live handle and `out_n` writable.
#[no_mangle]
pub unsafe extern "C" fn tg_graph_len(g: *const TgGraph, out_n: *mut usize) -> TgStatus {
    guard(|| {
        let g = unsafe { g.as_ref() }.ok_or_else(|| null("g"))?;
        *unsafe { out(out_n, "out_n") }? = g.0.len();
        Ok(())
    })
}

/// Builds a graph transit function by model name: `I`, `J`, `m3`, `A`, `T`,
/// `WT`, `P3` or `C` (case-insensitive).
///
/// # Safety
/// `g` must be a live handle, `model` a nul-terminated string and
/// `out_handle` writable.
#[no_mangle]
pub unsafe extern "C" fn tg_build(
    g: *const TgGraph,
    model: *const c_char,
    out_handle: *mut *mut TgTransit,
) -> TgStatus {
    guard(|| {
        let g = unsafe { g.as_ref() }.ok_or_else(|| null("g"))?;
        let m: Model = unsafe { text(model, "model") }?.parse()?;
        let dst = unsafe { out(out_handle, "out_handle") }?;
        *dst = Box::into_raw(Box::new(TgTransit(graphs::build(m, &g.0)?)));
        Ok(())
    })
}

/// Class membership by name (`chordal`, `ptolemaic`, `block_graph`, ...).
///
/// # Safety
/// `g` must be a live handle, `class` a nul-terminated string and
/// `out_member` writable.
#[no_mangle]
pub unsafe extern "C" fn tg_recognize(g: *const TgGraph, class: *const c_char, out_member: *mut bool) -> TgStatus {
    guard(|| {
        let g = unsafe { g.as_ref() }.ok_or_else(|| null("g"))?;
        let c: ClassId = unsafe { text(class, "class") }?.parse()?;
        let dst = unsafe { out(out_member, "out_member") }?;
        *dst = recognize(&g.0, c)?.holds;
        Ok(())
    })
}

/// Runs one registered claim over all objects up to `n_max` (0 picks the
/// claim's default) and reports the counts as JSON.
///
/// # Safety
/// `theorem` must be a nul-terminated string and `out_json` writable.
#[no_mangle]
pub unsafe extern "C" fn tg_verify_theorem_json(
    theorem: *const c_char,
    n_max: usize,
    out_json: *mut *mut c_char,
) -> TgStatus {
    guard(|| {
        let t: TheoremId = unsafe { text(theorem, "theorem") }?.parse()?;
        let dst = unsafe { out(out_json, "out_json") }?;
        let n = if n_max == 0 { t.default_n() } else { n_max };
        json_out(&verify_theorem(t, n)?, dst)
    })
}
