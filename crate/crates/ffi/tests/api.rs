use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use alcove_adlv_ffi::*;

fn root_system(g: AdlvGroup) -> *mut AdlvRootSystem {
    let mut rs = ptr::null_mut();
    assert_eq!(unsafe { adlv_root_system_new(g, &mut rs) }, AdlvStatus::Ok);
    rs
}

fn map(rs: *const AdlvRootSystem, radius: i64, window: i64) -> *mut AdlvDimensionMap {
    let mut m = ptr::null_mut();
    let s = unsafe { adlv_map_compute(rs, radius, window, AdlvMode::AllVertices, false, &mut m) };
    assert_eq!(s, AdlvStatus::Ok);
    m
}

fn lookup(m: *const AdlvDimensionMap, lambda: [i64; 2], word: &str) -> (AdlvStatus, bool, i64) {
    let w = CString::new(word).unwrap();
    let (mut ne, mut d) = (false, 0);
    let s = unsafe { adlv_map_get(m, lambda[0], lambda[1], w.as_ptr(), &mut ne, &mut d) };
    (s, ne, d)
}

#[test]
fn root_system_sizes() {
    for (g, order, delta) in [
        (AdlvGroup::A1, 2, 1),
        (AdlvGroup::A2, 6, 3),
        (AdlvGroup::C2, 8, 4),
    ] {
        let rs = root_system(g);
        unsafe {
            assert_eq!(adlv_root_system_order(rs), order);
            assert_eq!(adlv_root_system_delta(rs), delta);
            adlv_root_system_free(rs);
        }
    }
}

#[test]
fn a1_map_through_handles() {
    let rs = root_system(AdlvGroup::A1);
    let m = map(rs, 9, 9);
    unsafe {
        assert!(adlv_map_is_stable(m));
        assert_eq!(adlv_map_len(m), 19);
        let mut e = std::mem::zeroed::<AdlvEntry>();
        for i in 0..adlv_map_len(m) {
            assert_eq!(adlv_map_entry_at(m, i, &mut e), AdlvStatus::Ok);
            let want = match e.length {
                0 => Some(0),
                l if l % 2 == 1 => Some((l + 1) / 2),
                _ => None,
            };
            assert_eq!(e.nonempty, want.is_some());
            if let Some(d) = want {
                assert_eq!(e.dim, d);
            }
        }
        assert_eq!(
            adlv_map_entry_at(m, 19, &mut e),
            AdlvStatus::InvalidArgument
        );
        adlv_map_free(m);
        adlv_root_system_free(rs);
    }
}

#[test]
fn a2_lookups_and_errors() {
    let rs = root_system(AdlvGroup::A2);
    let m = map(rs, 10, 8);
    assert_eq!(lookup(m, [0, 0], "e"), (AdlvStatus::Ok, true, 0));
    assert_eq!(lookup(m, [0, 0], "s1"), (AdlvStatus::Ok, true, 1));
    assert_eq!(lookup(m, [9, 9], "e").0, AdlvStatus::OutsideWindow);
    assert_eq!(lookup(m, [0, 0], "s7").0, AdlvStatus::ParseError);
    assert_eq!(lookup(m, [0, 0], "x").0, AdlvStatus::ParseError);
    unsafe {
        let msg = CStr::from_ptr(adlv_last_error()).to_str().unwrap();
        assert!(msg.contains("bad Weyl word"), "{msg}");

        let mut k = 0;
        assert_eq!(adlv_k_level_dimension(m, 1, 1, &mut k), AdlvStatus::Ok);
        assert_eq!(k, 2);
        assert_eq!(
            adlv_k_level_dimension(m, 3, 3, &mut k),
            AdlvStatus::OutsideWindow
        );
        assert_eq!(
            adlv_k_level_dimension(m, -1, 0, &mut k),
            AdlvStatus::InvalidArgument
        );

        let json = adlv_map_to_json(m);
        assert!(!json.is_null());
        assert!(CStr::from_ptr(json)
            .to_str()
            .unwrap()
            .contains("\"group\": \"a2\""));
        adlv_string_free(json);
        adlv_map_free(m);
        adlv_root_system_free(rs);
    }
}

#[test]
fn formula_through_handles() {
    let rs = root_system(AdlvGroup::A2);
    let (mut ne, mut d) = (false, 0);
    let e = CString::new("e").unwrap();
    unsafe {
        assert_eq!(
            adlv_formula_eval(rs, 0, 0, e.as_ptr(), &mut ne, &mut d),
            AdlvStatus::NotInShrunkenRegion
        );
        assert_eq!(
            adlv_formula_eval(rs, 4, 4, e.as_ptr(), &mut ne, &mut d),
            AdlvStatus::Ok
        );
        assert!(!ne);
        adlv_root_system_free(rs);
    }
}

#[test]
fn null_handles_are_rejected() {
    let mut m = ptr::null_mut();
    unsafe {
        assert_eq!(
            adlv_root_system_new(AdlvGroup::A2, ptr::null_mut()),
            AdlvStatus::NullPointer
        );
        assert_eq!(
            adlv_map_compute(ptr::null(), 4, 4, AdlvMode::AllVertices, false, &mut m),
            AdlvStatus::NullPointer
        );
        assert_eq!(adlv_map_len(ptr::null()), 0);
        assert!(adlv_map_to_json(ptr::null()).is_null());
        adlv_map_free(ptr::null_mut());
        adlv_root_system_free(ptr::null_mut());
        adlv_string_free(ptr::null_mut());
    }
}

#[test]
fn unstable_map_is_refused_unless_allowed() {
    let rs = root_system(AdlvGroup::A1);
    let mut m = ptr::null_mut();
    unsafe {
        assert_eq!(
            adlv_map_compute(rs, 1, 9, AdlvMode::AllVertices, false, &mut m),
            AdlvStatus::Unstable
        );
        assert_eq!(
            adlv_map_compute(rs, 1, 9, AdlvMode::AllVertices, true, &mut m),
            AdlvStatus::Ok
        );
        assert!(!adlv_map_is_stable(m));
        adlv_map_free(m);
        adlv_root_system_free(rs);
    }
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/include/alcove_adlv.h"
    ))
    .unwrap();
    for name in [
        "adlv_root_system_new",
        "adlv_map_compute",
        "adlv_map_get",
        "adlv_map_entry_at",
        "adlv_k_level_dimension",
        "adlv_map_to_json",
        "adlv_string_free",
        "typedef struct AdlvDimensionMap AdlvDimensionMap",
        "ADLV_STATUS_OK = 0",
    ] {
        assert!(header.contains(name), "missing {name}");
    }
}

const C_PROGRAM: &str = r#"
#include <stdio.h>
#include "alcove_adlv.h"

int main(void) {
    AdlvRootSystem *rs = NULL;
    AdlvDimensionMap *map = NULL;
    bool nonempty = false;
    int64_t dim = -1;
    if (adlv_root_system_new(ADLV_GROUP_A2, &rs) != ADLV_STATUS_OK) return 10;
    if (adlv_map_compute(rs, 8, 6, ADLV_MODE_ALL_VERTICES, false, &map) != ADLV_STATUS_OK) return 11;
    if (adlv_map_get(map, 0, 0, "s1s2", &nonempty, &dim) != ADLV_STATUS_OK) return 12;
    if (!nonempty || dim != 2) return 13;
    AdlvEntry e;
    if (adlv_map_entry_at(map, 0, &e) != ADLV_STATUS_OK || e.length != 0 || e.dim != 0) return 14;
    printf("%zu %s\n", adlv_map_len(map), e.word);
    adlv_map_free(map);
    adlv_root_system_free(rs);
    return 0;
}
"#;

/// Compiles a C client against the generated header and the static library.
#[test]
fn c_client_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let profile_dir = std::env::current_exe()
        .unwrap()
        .parent()
        .unwrap()
        .parent()
        .unwrap()
        .to_path_buf();
    let lib = profile_dir.join("libalcove_adlv_ffi.a");
    assert!(
        lib.exists(),
        "static library not found at {}",
        lib.display()
    );
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("client.c");
    let exe = dir.path().join("client");
    std::fs::write(&src, C_PROGRAM).unwrap();
    let status = Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("a C compiler is available");
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "client exited with {:?}", out.status);
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.ends_with(" e\n"), "{stdout}");
}
