use std::ffi::{c_char, CStr};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use morphcheck_ffi::*;

unsafe fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let owned = CStr::from_ptr(s).to_str().unwrap().to_string();
    morphcheck_string_free(s);
    owned
}

fn last_error() -> String {
    let p = morphcheck_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

#[test]
fn closed_forms_round_trip_as_strings() {
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(morphcheck_c_top_x(4, 4, 3, &mut out), MorphcheckStatus::Ok);
        assert_eq!(take(out), "920");
        assert_eq!(morphcheck_c_top_pullback_y(4, 24, 5, 7, &mut out), MorphcheckStatus::Ok);
        assert_eq!(take(out), "559776");
        assert_eq!(morphcheck_c_top_x(4, 0, 3, &mut out), MorphcheckStatus::InvalidArgument);
        assert!(last_error().contains("d >= 1"));
    }
}

#[test]
fn hurwitz_and_bounds() {
    unsafe {
        let (mut lhs, mut rhs, mut holds) = (ptr::null_mut(), ptr::null_mut(), false);
        assert_eq!(morphcheck_hurwitz_check(4, 5, 3, 3, &mut lhs, &mut rhs, &mut holds), MorphcheckStatus::Ok);
        assert!(holds);
        assert_eq!((take(lhs), take(rhs)), ("1580".to_string(), "1350".to_string()));

        assert_eq!(
            morphcheck_hurwitz_check(4, 5, 2, 3, ptr::null_mut(), ptr::null_mut(), &mut holds),
            MorphcheckStatus::InvalidArgument
        );
        assert!(last_error().contains("e must be >= 3"));
        assert_eq!(
            morphcheck_hurwitz_check(4, 5, 3, 3, ptr::null_mut(), ptr::null_mut(), ptr::null_mut()),
            MorphcheckStatus::NullPointer
        );

        let (mut big_m, mut m0) = (0u32, 0u32);
        assert_eq!(morphcheck_max_poly_degree(4, 3, 3, &mut big_m, &mut m0), MorphcheckStatus::Ok);
        assert_eq!(big_m, 1);
        assert!(m0 >= big_m);
    }
}

#[test]
fn chern_over_multidegree() {
    unsafe {
        let mut out = ptr::null_mut();
        let degrees = [4u32];
        assert_eq!(morphcheck_twisted_top_chern(4, degrees.as_ptr(), 1, 6, &mut out), MorphcheckStatus::Ok);
        assert_eq!(take(out), "920");
        assert_eq!(
            morphcheck_twisted_top_chern(4, ptr::null(), 0, 6, &mut out),
            MorphcheckStatus::InvalidArgument
        );
        assert_eq!(
            morphcheck_twisted_top_chern(4, ptr::null(), 2, 6, &mut out),
            MorphcheckStatus::NullPointer
        );
    }
}

#[test]
fn case_report_handle() {
    unsafe {
        let mut report = ptr::null_mut();
        assert_eq!(
            morphcheck_classify_case(4, 11, 4, MorphcheckCharMode::Zero, false, &mut report),
            MorphcheckStatus::Ok
        );
        let mut overall = MorphcheckOverall::ExtensionHolds;
        assert_eq!(morphcheck_case_report_overall(report, &mut overall), MorphcheckStatus::Ok);
        assert_eq!(overall, MorphcheckOverall::Undetermined);
        let mut big_m = 0;
        morphcheck_case_report_max_degree(report, &mut big_m);
        let mut status = MorphcheckVerdictStatus::Excluded;
        assert_eq!(morphcheck_case_report_verdict_status(report, 4, &mut status), MorphcheckStatus::Ok);
        assert_eq!(status, MorphcheckVerdictStatus::Survives);
        assert_eq!(
            morphcheck_case_report_verdict_status(report, big_m + 1, &mut status),
            MorphcheckStatus::IndexOutOfRange
        );
        let mut json = ptr::null_mut();
        assert_eq!(morphcheck_case_report_to_json(report, &mut json), MorphcheckStatus::Ok);
        let json = take(json);
        assert_eq!(json, morphcheck::render::to_json(&morphcheck::feasibility::classify_case(
            4, 11, 4, morphcheck::feasibility::CharProfile::CHAR0).unwrap()));
        morphcheck_case_report_free(report);

        assert_eq!(
            morphcheck_case_report_overall(ptr::null(), &mut overall),
            MorphcheckStatus::NullPointer
        );
        assert_eq!(
            morphcheck_classify_case(4, 11, 2, MorphcheckCharMode::Positive, true, &mut report),
            MorphcheckStatus::InvalidArgument
        );
    }
}

#[test]
fn paper_tables_and_version() {
    unsafe {
        let mut passed = false;
        assert_eq!(morphcheck_verify_paper_tables(&mut passed), MorphcheckStatus::Ok);
        assert!(passed);
        let mut v = ptr::null_mut();
        assert_eq!(morphcheck_version(&mut v), MorphcheckStatus::Ok);
        assert_eq!(take(v), env!("CARGO_PKG_VERSION"));
    }
}

/// Compiles `examples/smoke.c` against the generated header and the static
/// library. Skipped when no C compiler is on PATH.
#[test]
fn c_smoke_program() {
    let Ok(cc) = which_cc() else {
        eprintln!("no C compiler; skipping");
        return;
    };
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    // target/<profile>/deps/abi-<hash>
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().unwrap().parent().unwrap();
    let lib = profile_dir.join("libmorphcheck_ffi.a");
    if !lib.exists() {
        eprintln!("static library not built at {}; skipping", lib.display());
        return;
    }
    let out = std::env::temp_dir().join(format!("morphcheck_smoke_{}", std::process::id()));
    let status = Command::new(&cc)
        .arg(manifest.join("examples/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success(), "C smoke program failed to compile");
    let run = Command::new(&out).output().unwrap();
    std::fs::remove_file(&out).ok();
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert_eq!(String::from_utf8_lossy(&run.stdout), "ok\n");
}

fn which_cc() -> Result<String, ()> {
    for cand in ["cc", "gcc", "clang"] {
        if Command::new(cand).arg("--version").output().is_ok() {
            return Ok(cand.to_string());
        }
    }
    Err(())
}
