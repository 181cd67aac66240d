//! C interface to `vtpoly`.
//!
//! Every fallible function returns a [`VtpStatus`]; on failure a message is
//! kept per thread and can be fetched with [`vtp_last_error`]. Strings handed
//! out by the library are owned by the caller and released with
//! [`vtp_string_free`]. Handles are released with their `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use vtpoly::candmap::{
    build_candidate_map, format_map_text, heawood_min_vertices, parse_map_text, tucker_admissible, CandidateMap,
    OrbitSymbol,
};
use vtpoly::enumerate::{enumerate_filtered, Filters};
use vtpoly::geometry::Coordinate3;
use vtpoly::geomiso::maps_isomorphic;
use vtpoly::realize::{export_off, place_vertices, search_realizations, verify_realization, RealizeError};
use vtpoly::rotgroup::{build_tetrahedral_group, GroupKind};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VtpStatus {
    Ok = 0,
    /// The call succeeded but the answer is negative (not embedded, not
    /// isomorphic, nothing found).
    Negative = 1,
    NullPointer = 2,
    InvalidUtf8 = 3,
    Parse = 4,
    InvalidMap = 5,
    InvalidArgument = 6,
    NotEmbedded = 7,
    OutOfRange = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VtpGroup {
    Tetrahedral = 0,
    Octahedral = 1,
    Icosahedral = 2,
}

impl From<VtpGroup> for GroupKind {
    fn from(g: VtpGroup) -> Self {
        match g {
            VtpGroup::Tetrahedral => GroupKind::Tetrahedral,
            VtpGroup::Octahedral => GroupKind::Octahedral,
            VtpGroup::Icosahedral => GroupKind::Icosahedral,
        }
    }
}

/// Counts and genus of a map.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VtpSummary {
    pub vertices: u32,
    pub edges: u32,
    pub faces: u32,
    pub genus: i64,
    pub degree: u32,
}

/// Opaque candidate map.
pub struct VtpMap {
    symbols: Vec<OrbitSymbol>,
    map: CandidateMap,
}

/// Opaque result of an enumeration run.
pub struct VtpEnumeration {
    maps: Vec<(Vec<OrbitSymbol>, CandidateMap)>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let text = message.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn fail(status: VtpStatus, message: impl Into<String>) -> VtpStatus {
    set_error(message);
    status
}

/// Runs `f`, turning panics into [`VtpStatus::Panic`].
fn guard(f: impl FnOnce() -> Result<VtpStatus, (VtpStatus, String)>) -> VtpStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => status,
        Ok(Err((status, message))) => fail(status, message),
        Err(_) => fail(VtpStatus::Panic, "internal panic"),
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, (VtpStatus, String)> {
    if s.is_null() {
        return Err((VtpStatus::NullPointer, "null string argument".into()));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| (VtpStatus::InvalidUtf8, "argument is not valid UTF-8".into()))
}

unsafe fn read_map<'a>(m: *const VtpMap) -> Result<&'a VtpMap, (VtpStatus, String)> {
    m.as_ref().ok_or((VtpStatus::NullPointer, "null map handle".into()))
}

unsafe fn read_base(s: *const c_char) -> Result<Coordinate3, (VtpStatus, String)> {
    let text = read_str(s)?;
    let base: Coordinate3 = text
        .parse()
        .map_err(|e| (VtpStatus::Parse, format!("base {text:?}: {e}")))?;
    if base.is_zero() {
        return Err((VtpStatus::InvalidArgument, "base vertex is the zero vector".into()));
    }
    Ok(base)
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), (VtpStatus, String)> {
    if out.is_null() {
        return Err((VtpStatus::NullPointer, "null output pointer".into()));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), (VtpStatus, String)> {
    let c = CString::new(s).map_err(|_| (VtpStatus::InvalidArgument, "string contains NUL".into()))?;
    if out.is_null() {
        return Err((VtpStatus::NullPointer, "null output pointer".into()));
    }
    out.write(c.into_raw());
    Ok(())
}

fn new_map(symbols: Vec<OrbitSymbol>) -> Result<VtpMap, (VtpStatus, String)> {
    let map = build_candidate_map(&symbols, &build_tetrahedral_group())
        .map_err(|e| (VtpStatus::InvalidMap, e.to_string()))?;
    Ok(VtpMap { symbols, map })
}

/// Message of the last failure on this thread, or null. Free with
/// [`vtp_string_free`].
#[no_mangle]
pub extern "C" fn vtp_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().clone().map_or(ptr::null_mut(), CString::into_raw))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn vtp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses map text (one symbol per line) and builds the map over `T`.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vtp_map_parse(text: *const c_char, out: *mut *mut VtpMap) -> VtpStatus {
    guard(|| {
        let text = read_str(text)?;
        let symbols = parse_map_text(text).map_err(|e| (VtpStatus::Parse, e.to_string()))?;
        let map = new_map(symbols)?;
        write_out(out, Box::into_raw(Box::new(map)))?;
        Ok(VtpStatus::Ok)
    })
}

/// # Safety
/// `map` must come from this library and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn vtp_map_free(map: *mut VtpMap) {
    if !map.is_null() {
        drop(Box::from_raw(map));
    }
}

/// # Safety
/// `map` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vtp_map_summary(map: *const VtpMap, out: *mut VtpSummary) -> VtpStatus {
    guard(|| {
        let s = read_map(map)?.map.summary();
        let summary = VtpSummary {
            vertices: s.vertex_count as u32,
            edges: s.edge_count as u32,
            faces: s.face_count as u32,
            genus: s.genus,
            degree: s.schlafli_vertex_degree as u32,
        };
        write_out(out, summary)?;
        Ok(VtpStatus::Ok)
    })
}

/// Map text of the handle, one symbol per line.
///
/// # Safety
/// `map` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vtp_map_to_text(map: *const VtpMap, out: *mut *mut c_char) -> VtpStatus {
    guard(|| {
        write_string(out, format_map_text(&read_map(map)?.symbols))?;
        Ok(VtpStatus::Ok)
    })
}

/// Verifies the realization with the base vertex at `base` ("a,b,c", each an
/// integer or p/q). Returns `Ok` when embedded and `Negative` otherwise; the
/// line-oriented report goes to `report` unless it is null.
///
/// # Safety
/// `map` must be a live handle, `base` a NUL-terminated string, `report`
/// null or writable.
#[no_mangle]
pub unsafe extern "C" fn vtp_verify(map: *const VtpMap, base: *const c_char, report: *mut *mut c_char) -> VtpStatus {
    guard(|| {
        let map = read_map(map)?;
        let base = read_base(base)?;
        let r = verify_realization(&map.map, &base);
        if !report.is_null() {
            write_string(report, r.to_string())?;
        }
        Ok(if r.is_embedded() {
            VtpStatus::Ok
        } else {
            VtpStatus::Negative
        })
    })
}

/// OFF text of an embedded realization; `NotEmbedded` otherwise.
///
/// # Safety
/// `map` must be a live handle, `base` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn vtp_export_off(map: *const VtpMap, base: *const c_char, out: *mut *mut c_char) -> VtpStatus {
    guard(|| {
        let map = read_map(map)?;
        let base = read_base(base)?;
        let realization = place_vertices(&map.map, &base).map_err(|e| (VtpStatus::InvalidArgument, e.to_string()))?;
        match export_off(&realization) {
            Ok(text) => {
                write_string(out, text)?;
                Ok(VtpStatus::Ok)
            }
            Err(e @ RealizeError::NotEmbedded(_)) => Err((VtpStatus::NotEmbedded, e.to_string())),
            Err(e) => Err((VtpStatus::InvalidArgument, e.to_string())),
        }
    })
}

/// Enumerates candidate maps over `T`. `min_genus` is ignored when negative.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vtp_enumerate(
    tucker: bool,
    schewe: bool,
    min_genus: i64,
    out: *mut *mut VtpEnumeration,
) -> VtpStatus {
    guard(|| {
        let filters = Filters {
            tucker,
            schewe,
            min_genus: (min_genus >= 0).then_some(min_genus),
        };
        let maps = enumerate_filtered(&build_tetrahedral_group(), &filters)
            .into_iter()
            .map(|(class, map)| (class.representative, map))
            .collect();
        write_out(out, Box::into_raw(Box::new(VtpEnumeration { maps })))?;
        Ok(VtpStatus::Ok)
    })
}

/// Number of classes in the enumeration, 0 for null.
///
/// # Safety
/// `e` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn vtp_enumeration_len(e: *const VtpEnumeration) -> usize {
    e.as_ref().map_or(0, |e| e.maps.len())
}

/// A new map handle for class `index`; free it with [`vtp_map_free`].
///
/// # Safety
/// `e` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vtp_enumeration_get(
    e: *const VtpEnumeration,
    index: usize,
    out: *mut *mut VtpMap,
) -> VtpStatus {
    guard(|| {
        let e = e
            .as_ref()
            .ok_or((VtpStatus::NullPointer, "null enumeration handle".to_string()))?;
        let (symbols, map) = e
            .maps
            .get(index)
            .ok_or((VtpStatus::OutOfRange, format!("index {index} out of range")))?;
        let handle = VtpMap {
            symbols: symbols.clone(),
            map: map.clone(),
        };
        write_out(out, Box::into_raw(Box::new(handle)))?;
        Ok(VtpStatus::Ok)
    })
}

/// # Safety
/// `e` must come from this library and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn vtp_enumeration_free(e: *mut VtpEnumeration) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// Grid search; writes the embedded bases one per line ("a,b,c") and their
/// count. Returns `Negative` when none is found.
///
/// # Safety
/// `map` must be a live handle; `out` and `count` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vtp_search(
    map: *const VtpMap,
    bound: i64,
    workers: u32,
    out: *mut *mut c_char,
    count: *mut usize,
) -> VtpStatus {
    guard(|| {
        let map = read_map(map)?;
        let hits = search_realizations(&map.map, bound, workers as usize)
            .map_err(|e| (VtpStatus::InvalidArgument, e.to_string()))?;
        let text: String = hits.iter().map(|h| format!("{h}\n")).collect();
        write_out(count, hits.len())?;
        write_string(out, text)?;
        Ok(if hits.is_empty() {
            VtpStatus::Negative
        } else {
            VtpStatus::Ok
        })
    })
}

/// Writes a row-major witness matrix when the maps are geometrically
/// isomorphic (`Ok`); returns `Negative` otherwise.
///
/// # Safety
/// Both handles must be live; `witness` must point to 9 writable ints or be null.
#[no_mangle]
pub unsafe extern "C" fn vtp_isomorphic(a: *const VtpMap, b: *const VtpMap, witness: *mut i32) -> VtpStatus {
    guard(|| {
        let (a, b) = (read_map(a)?, read_map(b)?);
        match maps_isomorphic(&a.symbols, &b.symbols) {
            Some(w) => {
                if !witness.is_null() {
                    for (i, v) in w.rows().iter().flatten().enumerate() {
                        witness.add(i).write(*v);
                    }
                }
                Ok(VtpStatus::Ok)
            }
            None => Ok(VtpStatus::Negative),
        }
    })
}

#[no_mangle]
pub extern "C" fn vtp_tucker_admissible(group: VtpGroup, genus: u64) -> bool {
    tucker_admissible(group.into(), genus)
}

#[no_mangle]
pub extern "C" fn vtp_heawood_min_vertices(genus: u64) -> u64 {
    heawood_min_vertices(genus)
}
