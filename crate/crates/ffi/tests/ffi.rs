use std::ffi::{c_char, CStr, CString};
use std::process::Command;
use std::ptr;

use mckay_ffi::*;
use serde_json::Value;

fn catalog(name: &str) -> *mut MckayGroup {
    let name = CString::new(name).unwrap();
    let mut g = ptr::null_mut();
    let status = unsafe { mckay_group_from_catalog(name.as_ptr(), 10_000, &mut g) };
    assert_eq!(status, MckayStatus::Ok);
    assert!(!g.is_null());
    g
}

fn take_json(s: *mut c_char) -> Value {
    let v = serde_json::from_str(unsafe { CStr::from_ptr(s) }.to_str().unwrap()).unwrap();
    unsafe { mckay_string_free(s) };
    v
}

fn last_error() -> String {
    let p = mckay_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn group_queries() {
    let g = catalog("binary-icosahedral");
    let mut n = 0usize;
    unsafe {
        assert_eq!(mckay_group_order(g, &mut n), MckayStatus::Ok);
        assert_eq!(n, 120);
        assert_eq!(mckay_group_dimension(g, &mut n), MckayStatus::Ok);
        assert_eq!(n, 2);
        assert_eq!(mckay_group_class_count(g, &mut n), MckayStatus::Ok);
        assert_eq!(n, 9);
        assert_eq!(
            mckay_group_projective_class_count(g, &mut n),
            MckayStatus::Ok
        );
        assert_eq!(n, 5);
        let mut e = 0i64;
        assert_eq!(mckay_euler_tpn(g, &mut e), MckayStatus::Ok);
        assert_eq!(e, 10);
        let mut b = false;
        assert_eq!(mckay_passes_pure_codim2(g, &mut b), MckayStatus::Ok);
        assert!(b);
        assert_eq!(
            mckay_generated_by_pseudo_reflections(g, &mut b),
            MckayStatus::Ok
        );
        assert!(!b);
        mckay_group_free(g);
    }
}

#[test]
fn json_results() {
    let g = catalog("minus-one-sl2");
    let mut s = ptr::null_mut();
    unsafe {
        assert_eq!(mckay_stringy_e_json(g, false, &mut s), MckayStatus::Ok);
        let v = take_json(s);
        assert_eq!(v["rendered"], "uv + (uv)^2");
        assert_eq!(v["euler"], "2");
        assert_eq!(mckay_hodge_tpn_json(g, &mut s), MckayStatus::Ok);
        let v = take_json(s);
        assert_eq!(v["n"], 1);
        assert_eq!(v["classes"].as_array().unwrap().len(), 1);
        mckay_group_free(g);
        assert_eq!(mckay_hilb_series_json(0, 2, &mut s), MckayStatus::Ok);
        let v = take_json(s);
        assert_eq!(v["series"][2], serde_json::json!(["1", "0", "2", "0", "2"]));
    }
}

#[test]
fn cotangent_flag() {
    let g = catalog("symmetric:3");
    let mut s = ptr::null_mut();
    unsafe {
        assert_eq!(
            mckay_stringy_e_json(g, false, &mut s),
            MckayStatus::InvalidInput
        );
        assert!(last_error().contains("odd") || last_error().contains("size"));
        assert_eq!(mckay_stringy_e_json(g, true, &mut s), MckayStatus::Ok);
        let v = take_json(s);
        assert_eq!(v["euler"], "3");
        mckay_group_free(g);
    }
}

#[test]
fn from_json_document() {
    let doc = CString::new(
        r#"{"cyclotomic_order":4,"size":2,"generators":[[[["0","1"],["0"]],[["0"],["0","-1"]]]]}"#,
    )
    .unwrap();
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(
            mckay_group_from_json(doc.as_ptr(), 100, &mut g),
            MckayStatus::Ok
        );
        let mut n = 0usize;
        mckay_group_order(g, &mut n);
        assert_eq!(n, 4);
        mckay_group_free(g);
    }
}

#[test]
fn error_codes() {
    let mut g = ptr::null_mut();
    let mut n = 0usize;
    unsafe {
        assert_eq!(
            mckay_group_from_catalog(ptr::null(), 10, &mut g),
            MckayStatus::NullArgument
        );
        let bad = CString::new("nope").unwrap();
        assert_eq!(
            mckay_group_from_catalog(bad.as_ptr(), 10, &mut g),
            MckayStatus::InvalidInput
        );
        assert!(last_error().contains("unknown catalog group"));
        let junk = CString::new("{").unwrap();
        assert_eq!(
            mckay_group_from_json(junk.as_ptr(), 10, &mut g),
            MckayStatus::InvalidInput
        );
        let invalid = [0xffu8, 0];
        assert_eq!(
            mckay_group_from_json(invalid.as_ptr().cast(), 10, &mut g),
            MckayStatus::InvalidUtf8
        );
        assert_eq!(
            mckay_group_order(ptr::null(), &mut n),
            MckayStatus::NullArgument
        );
        let h = catalog("trivial-sl2");
        assert_eq!(
            mckay_group_order(h, ptr::null_mut()),
            MckayStatus::NullArgument
        );
        assert_eq!(mckay_group_order(h, &mut n), MckayStatus::Ok);
        assert!(mckay_last_error_message().is_null());
        let s3 = catalog("symmetric:3");
        let mut e = 0i64;
        assert_eq!(mckay_euler_tpn(s3, &mut e), MckayStatus::InvalidInput);
        mckay_group_free(h);
        mckay_group_free(s3);
        mckay_group_free(ptr::null_mut());
        mckay_string_free(ptr::null_mut());
    }
}

const HEADER: &str = include_str!("../include/mckay.h");

#[test]
fn header_declares_every_export() {
    for name in [
        "mckay_group_from_catalog",
        "mckay_group_from_json",
        "mckay_group_free",
        "mckay_group_order",
        "mckay_group_dimension",
        "mckay_group_class_count",
        "mckay_group_projective_class_count",
        "mckay_stringy_e_json",
        "mckay_hodge_tpn_json",
        "mckay_euler_tpn",
        "mckay_passes_pure_codim2",
        "mckay_generated_by_pseudo_reflections",
        "mckay_hilb_series_json",
        "mckay_string_free",
        "mckay_last_error_message",
        "typedef struct MckayGroup MckayGroup;",
        "MCKAY_STATUS_OK = 0",
        "MCKAY_STATUS_INVALID_INPUT = 2",
        "MCKAY_STATUS_INTERNAL = 3",
    ] {
        assert!(HEADER.contains(name), "{name}");
    }
}

#[test]
fn header_compiles_as_c() {
    let Ok(cc) = Command::new("cc").arg("--version").output() else {
        eprintln!("no C compiler; skipping");
        return;
    };
    assert!(cc.status.success());
    let dir = std::env::temp_dir().join(format!("mckay-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("use.c");
    std::fs::write(
        &src,
        r#"#include "mckay.h"
int probe(void) {
    MckayGroup *g = 0;
    size_t n = 0;
    if (mckay_group_from_catalog("binary-tetrahedral", 1000, &g) != MCKAY_STATUS_OK) return 1;
    mckay_group_order(g, &n);
    mckay_group_free(g);
    return n == 24 ? 0 : 2;
}
"#,
    )
    .unwrap();
    let include = concat!(env!("CARGO_MANIFEST_DIR"), "/include");
    let out = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-c", "-I", include])
        .arg(&src)
        .arg("-o")
        .arg(dir.join("use.o"))
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}
