use std::f64::consts::PI;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use inscribed_ffi::*;

#[test]
fn scalar_functions() {
    let mut v = f64::NAN;
    assert_eq!(insc_li2(1.0, &mut v), InscStatus::Ok);
    assert_eq!(v, PI * PI / 6.0);
    assert_eq!(insc_li2(1.5, &mut v), InscStatus::OutsideRealBranch);

    assert_eq!(insc_p_contain(0.0, &mut v), InscStatus::Ok);
    assert_eq!(v, 0.25);
    assert_eq!(insc_p_contain(-1.0, &mut v), InscStatus::OutOfRange);
    assert_eq!(insc_chord_cdf(1.0, &mut v), InscStatus::Ok);
    assert_eq!(v, 1.0);
    assert!((insc_three_circle_probability() - 0.387_128_710_6).abs() < 1e-9);

    assert_eq!(insc_p_from_integral(0.5, 1e-10, &mut v), InscStatus::Ok);
    let mut closed = 0.0;
    insc_p_contain(0.5, &mut closed);
    assert!((v - closed).abs() < 1e-8);
}

#[test]
fn quadrature_results() {
    let mut q = InscQuadResult::default();
    assert_eq!(insc_li2_integral_oracle(-2.0, 1e-11, &mut q), InscStatus::Ok);
    let mut li2 = 0.0;
    insc_li2(-2.0, &mut li2);
    assert!((q.value - li2).abs() < 1e-10);

    assert_eq!(insc_di_dr(0.5, 1e-9, &mut q), InscStatus::Ok);
    assert!((q.value + 2.0 * PI * 0.75f64.ln() / 0.5).abs() < 1e-7);
    assert_eq!(insc_di_dr(0.0, 1e-9, &mut q), InscStatus::OutOfRange);
    assert_eq!(insc_i_of_r(0.5, -1.0, &mut q), InscStatus::InvalidParameter);

    assert_eq!(insc_dif_square_integral(0.0, 1e-10, &mut q), InscStatus::Ok);
    assert_eq!(q.value, 0.0);

    let (mut a, mut g) = (0.0, 0.0);
    assert_eq!(insc_arc_difference(0.7, 2.0, &mut a), InscStatus::Ok);
    assert_eq!(insc_arc_difference_geometric(0.7, 2.0, &mut g), InscStatus::Ok);
    assert!((a - g).abs() < 1e-10);
}

#[test]
fn predicates() {
    let mut s = 0;
    assert_eq!(insc_side_of(0.0, 0.0, 0.0, PI / 2.0, &mut s), InscStatus::Ok);
    assert_eq!(s, -1);
    assert_eq!(insc_side_of(0.0, 0.0, 1.0, 1.0, &mut s), InscStatus::Degenerate);
    assert_eq!(insc_orientation(0.0, PI / 2.0, PI, &mut s), InscStatus::Ok);
    assert_eq!(s, -1);
    let mut inside = false;
    let eq = [PI / 2.0, 7.0 * PI / 6.0, 11.0 * PI / 6.0];
    assert_eq!(insc_contains(eq[0], eq[1], eq[2], 0.5, 0.0, &mut inside), InscStatus::Ok);
    assert!(inside);
    assert_eq!(insc_contains(eq[0], eq[1], eq[2], 0.99, 0.0, &mut inside), InscStatus::Ok);
    assert!(!inside);
}

#[test]
fn null_pointers_are_reported() {
    assert_eq!(insc_p_contain(0.5, ptr::null_mut()), InscStatus::NullPointer);
    assert_eq!(insc_simulator_new(1, ptr::null_mut()), InscStatus::NullPointer);
    let mut e = InscEstimate::default();
    let status = unsafe { insc_simulator_triangle(ptr::null(), 0.5, 10, 0, &mut e) };
    assert_eq!(status, InscStatus::NullPointer);
    unsafe { insc_simulator_free(ptr::null_mut()) };
}

#[test]
fn simulator_handle_lifecycle() {
    let run = |workers| {
        let mut sim = ptr::null_mut();
        assert_eq!(insc_simulator_new(workers, &mut sim), InscStatus::Ok);
        let mut tri = InscEstimate::default();
        let mut chords = [InscEstimate::default(); 2];
        let mut attempts = 0u64;
        let (mut ab, mut bc) = (InscEstimate::default(), InscEstimate::default());
        unsafe {
            assert_eq!(insc_simulator_triangle(sim, 0.5, 40_000, 3, &mut tri), InscStatus::Ok);
            let radii = [0.4, 1.0];
            let status =
                insc_simulator_chords(sim, radii.as_ptr(), 2, 20_000, 3, chords.as_mut_ptr(), &mut attempts);
            assert_eq!(status, InscStatus::Ok);
            assert_eq!(insc_simulator_three_circles(sim, 30_000, 3, &mut ab, &mut bc), InscStatus::Ok);
            let mut bad = InscEstimate::default();
            assert_eq!(insc_simulator_triangle(sim, 2.0, 10, 3, &mut bad), InscStatus::OutOfRange);
            insc_simulator_free(sim);
        }
        (tri, chords, attempts, ab, bc)
    };
    let one = run(1);
    let three = run(3);
    assert_eq!(one, three);
    assert_eq!(one.1[1].p_hat, 1.0);
    assert!(one.2 > 20_000);
}

/// Directory holding the `libinscribed_ffi.a` built alongside this test.
fn staticlib() -> Option<PathBuf> {
    let exe = std::env::current_exe().ok()?;
    let deps = exe.parent()?;
    [deps, deps.parent()?]
        .iter()
        .map(|d| d.join("libinscribed_ffi.a"))
        .find(|p| p.exists())
}

#[test]
fn c_program_links_against_header() {
    let Some(lib) = staticlib() else {
        eprintln!("skipping: static library not found next to the test binary");
        return;
    };
    if Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: no C compiler");
        return;
    }
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let dir = tempfile::tempdir().unwrap();
    let exe = dir.path().join("smoke");
    let status = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-I"])
        .arg(manifest.join("include"))
        .arg(manifest.join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C smoke test failed to compile");
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}
