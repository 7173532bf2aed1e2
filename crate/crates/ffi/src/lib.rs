//! C interface to `alcove-adlv`.
//!
//! Root systems and dimension maps are opaque handles created by `*_new` /
//! `*_compute` and released with the matching `*_free`. Every fallible call
//! returns an [`AdlvStatus`]; the message of the last failure on the calling
//! thread is available from [`adlv_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use alcove_adlv::adlv::{
    compute_map, formula_eval, k_level_dimension, DimensionMap, Entry, EnumerationMode, MuSpec,
};
use alcove_adlv::affine_weyl::{length, Alcove};
use alcove_adlv::cli::mapfile::MapFile;
use alcove_adlv::root_data::{parse_word, RootSystem, RootSystemKind};
use alcove_adlv::Error;

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdlvStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    /// The map changed between radius R-1 and R.
    Unstable = 3,
    /// The alcove lies outside the computed window.
    OutsideWindow = 4,
    NotInShrunkenRegion = 5,
    ParseError = 6,
    Internal = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdlvGroup {
    A1 = 0,
    A2 = 1,
    C2 = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdlvMode {
    AllVertices = 0,
    FundamentalDomain = 1,
}

/// Capacity of [`AdlvEntry::word`], including the terminating NUL.
pub const ADLV_WORD_CAPACITY: usize = 32;

/// One map entry. `dim` is meaningful only when `nonempty` is true.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct AdlvEntry {
    pub lambda: [i64; 2],
    pub length: i64,
    pub nonempty: bool,
    pub dim: i64,
    /// Reduced word of the finite part, such as `s1s2`, NUL terminated.
    pub word: [c_char; ADLV_WORD_CAPACITY],
}

/// Opaque root system handle.
pub struct AdlvRootSystem {
    rs: RootSystem,
}

/// Opaque dimension map handle.
pub struct AdlvDimensionMap {
    dm: DimensionMap,
    sorted: Vec<(Alcove, Entry)>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn fail(status: AdlvStatus, msg: impl Into<String>) -> AdlvStatus {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
    status
}

fn fail_with(e: Error) -> AdlvStatus {
    let status = match e {
        Error::NotInShrunkenRegion => AdlvStatus::NotInShrunkenRegion,
        Error::RadiusTooSmall { .. } => AdlvStatus::Unstable,
        Error::WindowTooSmall { .. } => AdlvStatus::OutsideWindow,
        Error::Parse(_) => AdlvStatus::ParseError,
        Error::InvalidConfig(_) | Error::NotAnAlcove | Error::VertexInBaseAlcove(_) => {
            AdlvStatus::InvalidArgument
        }
        _ => AdlvStatus::Internal,
    };
    fail(status, e.to_string())
}

fn kind_of(g: AdlvGroup) -> RootSystemKind {
    match g {
        AdlvGroup::A1 => RootSystemKind::A1,
        AdlvGroup::A2 => RootSystemKind::A2,
        AdlvGroup::C2 => RootSystemKind::C2,
    }
}

unsafe fn alcove_from(
    rs: &RootSystem,
    lambda1: i64,
    lambda2: i64,
    word: *const c_char,
) -> Result<Alcove, AdlvStatus> {
    if word.is_null() {
        return Err(fail(AdlvStatus::NullPointer, "word is null"));
    }
    let text = CStr::from_ptr(word)
        .to_str()
        .map_err(|_| fail(AdlvStatus::ParseError, "word is not UTF-8"))?;
    let w = parse_word(text)
        .and_then(|g| rs.from_word(&g))
        .map_err(fail_with)?;
    if rs.rank == 1 && lambda2 != 0 {
        return Err(fail(
            AdlvStatus::InvalidArgument,
            "rank-1 lambda has a second coordinate",
        ));
    }
    Ok(Alcove::new(rs, [lambda1, lambda2], w))
}

/// Message describing the last failure on this thread; empty if none.
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn adlv_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn adlv_root_system_new(
    group: AdlvGroup,
    out: *mut *mut AdlvRootSystem,
) -> AdlvStatus {
    if out.is_null() {
        return fail(AdlvStatus::NullPointer, "out is null");
    }
    *out = Box::into_raw(Box::new(AdlvRootSystem {
        rs: RootSystem::new(kind_of(group)),
    }));
    AdlvStatus::Ok
}

/// # Safety
/// `rs` must come from [`adlv_root_system_new`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn adlv_root_system_free(rs: *mut AdlvRootSystem) {
    if !rs.is_null() {
        drop(Box::from_raw(rs));
    }
}

/// Order of the finite Weyl group, or 0 for a null handle.
///
/// # Safety
/// `rs` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn adlv_root_system_order(rs: *const AdlvRootSystem) -> usize {
    rs.as_ref().map_or(0, |r| r.rs.order())
}

/// Length of the longest finite Weyl element, or 0 for a null handle.
///
/// # Safety
/// `rs` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn adlv_root_system_delta(rs: *const AdlvRootSystem) -> usize {
    rs.as_ref().map_or(0, |r| r.rs.delta())
}

/// Computes the map for `l(w) <= window` from vertices with `l(Q1) <= radius`.
/// Unless `allow_unstable` is set, a map that changes between radius R-1
/// and R is rejected with [`AdlvStatus::Unstable`].
///
/// # Safety
/// `rs` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn adlv_map_compute(
    rs: *const AdlvRootSystem,
    radius: i64,
    window: i64,
    mode: AdlvMode,
    allow_unstable: bool,
    out: *mut *mut AdlvDimensionMap,
) -> AdlvStatus {
    let (Some(r), false) = (rs.as_ref(), out.is_null()) else {
        return fail(AdlvStatus::NullPointer, "null handle or output pointer");
    };
    let mode = match mode {
        AdlvMode::AllVertices => EnumerationMode::AllVertices,
        AdlvMode::FundamentalDomain => EnumerationMode::FundamentalDomain,
    };
    let dm = match compute_map(&r.rs, radius, window, mode) {
        Ok(dm) => dm,
        Err(e) => return fail_with(e),
    };
    if !dm.stability && !allow_unstable {
        return fail_with(Error::RadiusTooSmall {
            group: r.rs.kind,
            radius,
        });
    }
    let sorted = dm.sorted();
    *out = Box::into_raw(Box::new(AdlvDimensionMap { dm, sorted }));
    AdlvStatus::Ok
}

/// # Safety
/// `map` must come from [`adlv_map_compute`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn adlv_map_free(map: *mut AdlvDimensionMap) {
    if !map.is_null() {
        drop(Box::from_raw(map));
    }
}

/// Number of entries, or 0 for a null handle.
///
/// # Safety
/// `map` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn adlv_map_len(map: *const AdlvDimensionMap) -> usize {
    map.as_ref().map_or(0, |m| m.sorted.len())
}

/// # Safety
/// `map` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn adlv_map_is_stable(map: *const AdlvDimensionMap) -> bool {
    map.as_ref().is_some_and(|m| m.dm.stability)
}

/// Entry `index` in canonical order (length, then lambda, then Weyl element).
///
/// # Safety
/// `map` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn adlv_map_entry_at(
    map: *const AdlvDimensionMap,
    index: usize,
    out: *mut AdlvEntry,
) -> AdlvStatus {
    let (Some(m), false) = (map.as_ref(), out.is_null()) else {
        return fail(AdlvStatus::NullPointer, "null handle or output pointer");
    };
    let Some((a, e)) = m.sorted.get(index) else {
        return fail(
            AdlvStatus::InvalidArgument,
            format!("index {index} out of range"),
        );
    };
    let rs = &m.dm.rs;
    let mut word = [0 as c_char; ADLV_WORD_CAPACITY];
    for (dst, src) in word
        .iter_mut()
        .zip(a.word(rs).bytes().take(ADLV_WORD_CAPACITY - 1))
    {
        *dst = src as c_char;
    }
    *out = AdlvEntry {
        lambda: a.lambda,
        length: length(rs, a),
        nonempty: e.dim().is_some(),
        dim: e.dim().unwrap_or(-1),
        word,
    };
    AdlvStatus::Ok
}

/// Looks up the alcove `(lambda, word)`. Writes whether the variety is
/// non-empty and, if so, its dimension.
///
/// # Safety
/// `map` must be a live handle, `word` a NUL-terminated string and the
/// outputs valid for one write each.
#[no_mangle]
pub unsafe extern "C" fn adlv_map_get(
    map: *const AdlvDimensionMap,
    lambda1: i64,
    lambda2: i64,
    word: *const c_char,
    out_nonempty: *mut bool,
    out_dim: *mut i64,
) -> AdlvStatus {
    let (Some(m), false, false) = (map.as_ref(), out_nonempty.is_null(), out_dim.is_null()) else {
        return fail(AdlvStatus::NullPointer, "null handle or output pointer");
    };
    let a = match alcove_from(&m.dm.rs, lambda1, lambda2, word) {
        Ok(a) => a,
        Err(s) => return s,
    };
    let Some(e) = m.dm.get(&a) else {
        return fail(
            AdlvStatus::OutsideWindow,
            format!("alcove lies outside window {}", m.dm.window),
        );
    };
    *out_nonempty = e.dim().is_some();
    *out_dim = e.dim().unwrap_or(-1);
    AdlvStatus::Ok
}

/// The closed formula on the shrunken region.
///
/// # Safety
/// As for [`adlv_map_get`], with a root system handle.
#[no_mangle]
pub unsafe extern "C" fn adlv_formula_eval(
    rs: *const AdlvRootSystem,
    lambda1: i64,
    lambda2: i64,
    word: *const c_char,
    out_nonempty: *mut bool,
    out_dim: *mut i64,
) -> AdlvStatus {
    let (Some(r), false, false) = (rs.as_ref(), out_nonempty.is_null(), out_dim.is_null()) else {
        return fail(AdlvStatus::NullPointer, "null handle or output pointer");
    };
    let a = match alcove_from(&r.rs, lambda1, lambda2, word) {
        Ok(a) => a,
        Err(s) => return s,
    };
    match formula_eval(&r.rs, &a) {
        Ok(e) => {
            *out_nonempty = e.dim().is_some();
            *out_dim = e.dim().unwrap_or(-1);
            AdlvStatus::Ok
        }
        Err(e) => fail_with(e),
    }
}

/// Dimension at hyperspecial level for the dominant coweight `mu`, in
/// coroot coordinates.
///
/// # Safety
/// `map` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn adlv_k_level_dimension(
    map: *const AdlvDimensionMap,
    mu1: i64,
    mu2: i64,
    out: *mut i64,
) -> AdlvStatus {
    let (Some(m), false) = (map.as_ref(), out.is_null()) else {
        return fail(AdlvStatus::NullPointer, "null handle or output pointer");
    };
    let spec = match MuSpec::new(&m.dm.rs, [mu1, mu2]) {
        Ok(s) => s,
        Err(e) => return fail_with(e),
    };
    match k_level_dimension(&spec, &m.dm) {
        Ok(d) => {
            *out = d;
            AdlvStatus::Ok
        }
        Err(e) => fail_with(e),
    }
}

/// The map as a JSON document, or null on failure. Release the string with
/// [`adlv_string_free`].
///
/// # Safety
/// `map` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn adlv_map_to_json(map: *const AdlvDimensionMap) -> *mut c_char {
    let Some(m) = map.as_ref() else {
        fail(AdlvStatus::NullPointer, "map is null");
        return ptr::null_mut();
    };
    match MapFile::from_map(&m.dm).to_json() {
        Ok(s) => CString::new(s).map_or(ptr::null_mut(), CString::into_raw),
        Err(e) => {
            fail_with(e);
            ptr::null_mut()
        }
    }
}

/// # Safety
/// `s` must be null or a string returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn adlv_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
