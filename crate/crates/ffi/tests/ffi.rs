use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use isq_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(isq_last_error()) }
        .to_string_lossy()
        .into_owned()
}

#[test]
fn quotient_of_i2_through_handles() {
    unsafe {
        let mut s: *mut IsqSemigroup = ptr::null_mut();
        assert_eq!(isq_semigroup_symmetric(2, &mut s), IsqStatus::Ok);
        let mut size = 0;
        assert_eq!(isq_semigroup_size(s, &mut size), IsqStatus::Ok);
        assert_eq!(size, 7);

        let mut e: *mut IsqSubset = ptr::null_mut();
        assert_eq!(isq_subset_idempotents(s, &mut e), IsqStatus::Ok);
        let mut q: *mut IsqQuotient = ptr::null_mut();
        assert_eq!(isq_quotient_build(s, e, &mut q), IsqStatus::Ok);
        let mut k = 0;
        assert_eq!(isq_quotient_num_classes(q, &mut k), IsqStatus::Ok);
        assert_eq!(k, 7);
        let mut inductive = false;
        assert_eq!(isq_quotient_is_inductive(q, &mut inductive), IsqStatus::Ok);
        assert!(inductive);

        // a class composed with the identity at its range is itself
        let (mut c, mut d, mut defined) = (0, 0, false);
        assert_eq!(isq_quotient_class_of(q, 5, &mut c), IsqStatus::Ok);
        let mut r = 0;
        assert_eq!(isq_semigroup_mul(s, 5, 5, &mut r), IsqStatus::Ok);
        let mut inv = 0;
        assert_eq!(isq_semigroup_inv(s, 5, &mut inv), IsqStatus::Ok);
        assert_eq!(isq_semigroup_mul(s, inv, 5, &mut r), IsqStatus::Ok);
        assert_eq!(isq_quotient_class_of(q, r, &mut d), IsqStatus::Ok);
        let mut out = usize::MAX;
        assert_eq!(
            isq_quotient_compose(q, c, d, &mut out, &mut defined),
            IsqStatus::Ok
        );
        assert!(defined);
        assert_eq!(out, c);

        let mut json = ptr::null_mut();
        assert_eq!(isq_quotient_to_json(q, &mut json), IsqStatus::Ok);
        assert!(CStr::from_ptr(json)
            .to_str()
            .unwrap()
            .contains("\"inductive\":true"));
        isq_string_free(json);

        isq_quotient_free(q);
        isq_subset_free(e);
        isq_semigroup_free(s);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut s: *mut IsqSemigroup = ptr::null_mut();
        let bad = CString::new("{not json").unwrap();
        assert_eq!(
            isq_semigroup_from_json(bad.as_ptr(), &mut s),
            IsqStatus::Parse
        );
        assert!(s.is_null());
        assert!(!last_error().is_empty());

        assert_eq!(isq_semigroup_symmetric(9, &mut s), IsqStatus::InvalidInput);
        let mut size = 0;
        assert_eq!(
            isq_semigroup_size(ptr::null(), &mut size),
            IsqStatus::NullPointer
        );

        assert_eq!(isq_semigroup_symmetric(2, &mut s), IsqStatus::Ok);
        let ids = [1usize, 2];
        let mut n: *mut IsqSubset = ptr::null_mut();
        assert_eq!(
            isq_subset_new(s, ids.as_ptr(), ids.len(), &mut n),
            IsqStatus::Ok
        );
        let mut q: *mut IsqQuotient = ptr::null_mut();
        assert_eq!(isq_quotient_build(s, n, &mut q), IsqStatus::NotNormal);
        let bad_ids = [40usize];
        let mut m: *mut IsqSubset = ptr::null_mut();
        assert_eq!(
            isq_subset_new(s, bad_ids.as_ptr(), 1, &mut m),
            IsqStatus::UnknownElement
        );
        isq_subset_free(n);
        isq_semigroup_free(s);
    }
}

#[test]
fn json_round_trip_and_normal_list() {
    unsafe {
        let text =
            CString::new(r#"{"kind":"table","n":2,"mul":[[0,1],[1,0]],"inv":[0,1]}"#).unwrap();
        let mut s: *mut IsqSemigroup = ptr::null_mut();
        assert_eq!(
            isq_semigroup_from_json(text.as_ptr(), &mut s),
            IsqStatus::Ok
        );
        let mut out = ptr::null_mut();
        assert_eq!(isq_enumerate_normal_json(s, &mut out), IsqStatus::Ok);
        let listed = CStr::from_ptr(out).to_str().unwrap().to_owned();
        isq_string_free(out);
        assert_eq!(listed, r#"{"inclusions":[[0,1]],"members":[[0],[0,1]]}"#);
        isq_semigroup_free(s);
    }
}

#[test]
fn header_declares_the_api() {
    let header =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/isq.h")).unwrap();
    for name in [
        "isq_quotient_build",
        "isq_semigroup_from_json",
        "ISQ_STATUS_NOT_NORMAL",
        "typedef struct IsqQuotient",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}

/// Compile the C smoke test against the header and the static library.
#[test]
fn c_program_links_and_runs() {
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(|d| d.parent()).unwrap().to_path_buf();
    let lib = profile_dir.join("libisq_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!(
            "skipping: no C compiler or static library at {}",
            lib.display()
        );
        return;
    }
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let out = tempfile::tempdir().unwrap();
    let bin = out.path().join("smoke");
    let status = Command::new("cc")
        .arg(dir.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(dir.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");
    let run = Command::new(&bin).output().unwrap();
    assert!(
        run.status.success(),
        "{}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert!(String::from_utf8_lossy(&run.stdout).starts_with("ok "));
}
