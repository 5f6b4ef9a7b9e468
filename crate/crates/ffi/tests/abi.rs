use std::ffi::{c_char, CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use radsym_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(radsym_last_error()) }.to_string_lossy().into_owned()
}

fn take_string(p: *mut c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned();
    unsafe { radsym_string_free(p) };
    s
}

fn system(name: &str) -> *mut RadsymSystem {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { radsym_system_new(cstr(name).as_ptr(), &mut out) }, RadsymStatus::Ok);
    out
}

fn build(sys: *const RadsymSystem, name: &str) -> *mut RadsymOperator {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { radsym_operator_build(sys, cstr(name).as_ptr(), &mut out) }, RadsymStatus::Ok, "{name}");
    out
}

#[test]
fn su2_closure_through_handles() {
    let ho = system("ho");
    let (op, om, o3) = (build(ho, "O+"), build(ho, "O-"), build(ho, "O3"));
    let mut c = ptr::null_mut();
    let mut rhs = ptr::null_mut();
    let mut diff = ptr::null_mut();
    let mut zero = false;
    unsafe {
        assert_eq!(radsym_operator_commutator(op, om, &mut c), RadsymStatus::Ok);
        assert_eq!(radsym_operator_scale(o3, cstr("2").as_ptr(), &mut rhs), RadsymStatus::Ok);
        assert_eq!(radsym_operator_sub(c, rhs, &mut diff), RadsymStatus::Ok);
        assert_eq!(radsym_operator_is_zero(diff, &mut zero), RadsymStatus::Ok);
    }
    assert!(zero);
    for p in [op, om, o3, c, rhs, diff] {
        unsafe { radsym_operator_free(p) };
    }
    unsafe { radsym_system_free(ho) };
}

#[test]
fn operator_strings_round_out() {
    let ha = system("ha");
    let t3 = build(ha, "T3");
    let (mut text, mut json) = (ptr::null_mut(), ptr::null_mut());
    unsafe {
        assert_eq!(radsym_operator_to_string(t3, &mut text), RadsymStatus::Ok);
        assert_eq!(radsym_operator_to_json(t3, &mut json), RadsymStatus::Ok);
    }
    assert!(!take_string(text).is_empty());
    let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
    assert!(v["terms"].as_array().is_some_and(|t| !t.is_empty()));
    unsafe {
        radsym_operator_free(t3);
        radsym_system_free(ha);
    }
}

#[test]
fn generalized_system_validates_parameters() {
    let mut out = ptr::null_mut();
    let s = unsafe {
        radsym_system_generalized(cstr("3/2").as_ptr(), cstr("1").as_ptr(), cstr("1").as_ptr(), &mut out)
    };
    assert_eq!(s, RadsymStatus::Ok);
    let theta = build(out, "Theta3");
    unsafe {
        radsym_operator_free(theta);
        radsym_system_free(out);
    }
    let mut bad = ptr::null_mut();
    let s = unsafe {
        radsym_system_generalized(cstr("-1").as_ptr(), cstr("1").as_ptr(), cstr("1").as_ptr(), &mut bad)
    };
    assert_eq!(s, RadsymStatus::InvalidArgument);
    assert!(bad.is_null());
    let s = unsafe {
        radsym_system_generalized(cstr("x").as_ptr(), cstr("1").as_ptr(), cstr("1").as_ptr(), &mut bad)
    };
    assert_eq!(s, RadsymStatus::InvalidArgument);
    assert!(last_error().contains("zeta"));
}

#[test]
fn error_codes() {
    let mut sys = ptr::null_mut();
    assert_eq!(unsafe { radsym_system_new(ptr::null(), &mut sys) }, RadsymStatus::NullPointer);
    assert_eq!(unsafe { radsym_system_new(cstr("xx").as_ptr(), &mut sys) }, RadsymStatus::UnknownName);
    assert!(last_error().contains("xx"));
    let bytes = [0xffu8, 0];
    assert_eq!(unsafe { radsym_system_new(bytes.as_ptr().cast(), &mut sys) }, RadsymStatus::InvalidUtf8);
    let ho = system("ho");
    assert_eq!(unsafe { radsym_system_new(cstr("ho").as_ptr(), ptr::null_mut()) }, RadsymStatus::NullPointer);
    let mut op = ptr::null_mut();
    assert_eq!(unsafe { radsym_operator_build(ho, cstr("G+").as_ptr(), &mut op) }, RadsymStatus::UnknownName);
    assert_eq!(unsafe { radsym_operator_build(ptr::null(), cstr("H").as_ptr(), &mut op) }, RadsymStatus::NullPointer);
    let mut z = false;
    assert_eq!(unsafe { radsym_operator_is_zero(ptr::null(), &mut z) }, RadsymStatus::NullPointer);
    assert_eq!(last_error(), "operator is null");
    let h = build(ho, "H");
    assert_eq!(unsafe { radsym_operator_is_zero(h, &mut z) }, RadsymStatus::Ok);
    assert_eq!(last_error(), "");
    unsafe {
        radsym_operator_free(h);
        radsym_system_free(ho);
        radsym_operator_free(ptr::null_mut());
        radsym_string_free(ptr::null_mut());
    }
}

#[test]
fn identity_registry_access() {
    let mut list = ptr::null_mut();
    assert_eq!(unsafe { radsym_identity_list(&mut list) }, RadsymStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(list)).unwrap();
    let ids: Vec<&str> = v.as_array().unwrap().iter().map(|e| e["id"].as_str().unwrap()).collect();
    assert!(ids.contains(&"ha.f1-equals-gminus"));

    let (mut pass, mut json) = (false, ptr::null_mut());
    assert_eq!(
        unsafe { radsym_verify_identity(cstr("ha.g-su2").as_ptr(), &mut pass, &mut json) },
        RadsymStatus::Ok
    );
    let report: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
    assert_eq!(report["asserted"], false);
    assert_eq!(report["pass"], false);
    assert!(pass, "reported-only identities do not fail");
    assert_eq!(
        unsafe { radsym_verify_identity(cstr("ho.nope").as_ptr(), &mut pass, ptr::null_mut()) },
        RadsymStatus::UnknownName
    );
}

#[test]
fn ladder_check_reports_constant() {
    let ho = system("ho");
    let (mut pass, mut json) = (false, ptr::null_mut());
    let s = unsafe { radsym_ladder_check(ho, cstr("a2").as_ptr(), 1, 1, &mut pass, &mut json) };
    assert_eq!(s, RadsymStatus::Ok, "{}", last_error());
    assert!(pass);
    let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
    assert!((v["constant"][0].as_f64().unwrap().hypot(v["constant"][1].as_f64().unwrap()) - 1.0).abs() < 1e-6);
    let s = unsafe { radsym_ladder_check(ho, cstr("a2").as_ptr(), 1, 0, &mut pass, ptr::null_mut()) };
    assert_eq!(s, RadsymStatus::NumericError);
    unsafe { radsym_system_free(ho) };
}

fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

/// The checked-in header matches what cbindgen produces from the source.
#[test]
fn header_is_current() {
    let header = std::fs::read_to_string(manifest_dir().join("include/radsym.h")).unwrap();
    for f in ["radsym_operator_build", "radsym_verify_identity", "radsym_ladder_check", "radsym_last_error"] {
        assert!(header.contains(f), "{f} missing from header");
    }
    assert!(header.contains("typedef struct RadsymOperator RadsymOperator;"));
}

fn staticlib() -> Option<PathBuf> {
    // target/<profile>/deps/abi-<hash> -> target/<profile>/libradsym_ffi.a
    let exe = std::env::current_exe().ok()?;
    let profile_dir = exe.parent()?.parent()?;
    let lib = profile_dir.join("libradsym_ffi.a");
    lib.exists().then_some(lib)
}

#[test]
fn c_program_links_against_staticlib() {
    let Some(lib) = staticlib() else {
        eprintln!("staticlib not built; skipping C link test");
        return;
    };
    let Ok(cc) = which_cc() else {
        eprintln!("no C compiler; skipping C link test");
        return;
    };
    let dir = tempfile::tempdir().unwrap();
    let exe = dir.path().join("smoke");
    let status = Command::new(&cc)
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest_dir().join("include"))
        .arg(manifest_dir().join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .arg("-o")
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C compilation failed");
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}

fn which_cc() -> Result<PathBuf, ()> {
    for c in ["cc", "gcc", "clang"] {
        if Command::new(c).arg("--version").output().is_ok_and(|o| o.status.success()) {
            return Ok(Path::new(c).to_path_buf());
        }
    }
    Err(())
}
