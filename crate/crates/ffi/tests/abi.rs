use std::ffi::{CStr, CString};
use std::ptr;

use bethe_symm_ffi::*;

struct Owned(*mut BsValue);

impl Drop for Owned {
    fn drop(&mut self) {
        unsafe { bs_value_free(self.0) }
    }
}

fn parse(s: &str) -> Owned {
    let c = CString::new(s).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { bs_value_parse(c.as_ptr(), &mut out) }, BsStatus::Ok);
    Owned(out)
}

fn text(v: &Owned) -> String {
    unsafe {
        let s = bs_value_to_string(v.0);
        let t = CStr::from_ptr(s).to_str().unwrap().to_owned();
        bs_string_free(s);
        t
    }
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(bs_last_error()).to_string_lossy().into_owned() }
}

#[test]
fn parse_and_print() {
    assert_eq!(text(&parse("-6/4")), "-3/2");
    assert_eq!(text(&parse("u1")), "u1");
}

#[test]
fn arithmetic() {
    let (a, b) = (parse("z1"), parse("1/2"));
    let mut out = ptr::null_mut();
    unsafe {
        assert_eq!(bs_value_binary(BsOp::Add, a.0, b.0, &mut out), BsStatus::Ok);
        let sum = Owned(out);
        assert_eq!(text(&sum), "z1 + 1/2");
        assert_eq!(bs_value_binary(BsOp::Sub, sum.0, b.0, &mut out), BsStatus::Ok);
        let back = Owned(out);
        assert_eq!(bs_value_equal(back.0, a.0), 1);
        let zero = parse("0");
        assert_eq!(bs_value_binary(BsOp::Div, a.0, zero.0, &mut out), BsStatus::DivisionByZero);
    }
}

#[test]
fn errors_are_reported() {
    let mut out = ptr::null_mut();
    let bad = CString::new("1/0").unwrap();
    unsafe {
        assert_ne!(bs_value_parse(bad.as_ptr(), &mut out), BsStatus::Ok);
        assert!(!last_error().is_empty());
        assert_eq!(bs_value_parse(ptr::null(), &mut out), BsStatus::NullPointer);
        assert!(last_error().contains("null"));
        let invalid = [0xffu8, 0];
        assert_eq!(bs_value_parse(invalid.as_ptr().cast(), &mut out), BsStatus::InvalidUtf8);
    }
}

#[test]
fn schur_of_single_box_is_power_sum() {
    let (z1, z2) = (parse("z1"), parse("z2"));
    let vars = [z1.0 as *const BsValue, z2.0 as *const BsValue];
    let mut out = ptr::null_mut();
    unsafe {
        assert_eq!(bs_schur([1usize].as_ptr(), 1, vars.as_ptr(), 2, &mut out), BsStatus::Ok);
        assert_eq!(text(&Owned(out)), "z1 + z2");
        assert_eq!(
            bs_schur([1usize, 1, 1].as_ptr(), 3, vars.as_ptr(), 2, &mut out),
            BsStatus::ShapeMismatch
        );
    }
}

#[test]
fn grothendieck_at_zero_beta_is_schur() {
    let (z1, z2, beta) = (parse("2/3"), parse("-5"), parse("0"));
    let vars = [z1.0 as *const BsValue, z2.0 as *const BsValue];
    let parts = [2usize, 1];
    let (mut s, mut g) = (ptr::null_mut(), ptr::null_mut());
    unsafe {
        assert_eq!(bs_schur(parts.as_ptr(), 2, vars.as_ptr(), 2, &mut s), BsStatus::Ok);
        assert_eq!(bs_grothendieck(parts.as_ptr(), 2, vars.as_ptr(), 2, beta.0, &mut g), BsStatus::Ok);
        let (s, g) = (Owned(s), Owned(g));
        assert_eq!(bs_value_equal(s.0, g.0), 1);
        // s_{21}(a, b) = a b (a + b)
        assert_eq!(text(&s), "130/9");
    }
}

#[test]
fn felderhof_determinant_matches_lattice_dwbp() {
    let (p, q) = (parse("3/7"), parse("-2/5"));
    let (u1, u2) = (parse("1/3"), parse("5/2"));
    let us = [u1.0 as *const BsValue, u2.0 as *const BsValue];
    let (mut wf, mut dw) = (ptr::null_mut(), ptr::null_mut());
    unsafe {
        assert_eq!(
            bs_felderhof_wavefunction(2, [1usize, 2].as_ptr(), 2, us.as_ptr(), 2, p.0, q.0, 0, &mut wf),
            BsStatus::Ok
        );
        assert_eq!(bs_felderhof_dwbp(us.as_ptr(), 2, p.0, q.0, &mut dw), BsStatus::Ok);
        let (wf, dw) = (Owned(wf), Owned(dw));
        assert_eq!(bs_value_equal(wf.0, dw.0), 1, "{} vs {}", text(&wf), text(&dw));
    }
}

#[test]
fn smoke_suite_through_the_abi() {
    let filter = CString::new("Lemma*").unwrap();
    let profile = CString::new("smoke").unwrap();
    let mut suite = ptr::null_mut();
    unsafe {
        assert_eq!(bs_verify(filter.as_ptr(), profile.as_ptr(), 7, &mut suite), BsStatus::Ok);
        assert!(bs_suite_len(suite) > 0);
        assert_eq!(bs_suite_passed(suite), 1);
        let json = bs_suite_json(suite);
        let parsed: serde_json::Value = serde_json::from_str(CStr::from_ptr(json).to_str().unwrap()).unwrap();
        assert_eq!(parsed.as_array().unwrap().len(), bs_suite_len(suite));
        bs_string_free(json);
        bs_suite_free(suite);
        let bogus = CString::new("extreme").unwrap();
        assert_eq!(bs_verify(filter.as_ptr(), bogus.as_ptr(), 7, &mut suite), BsStatus::Parse);
    }
}

#[test]
fn header_declares_every_entry_point() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/bethe_symm.h")).unwrap();
    for name in [
        "bs_last_error",
        "bs_string_free",
        "bs_value_parse",
        "bs_value_free",
        "bs_value_to_string",
        "bs_value_binary",
        "bs_value_equal",
        "bs_schur",
        "bs_grothendieck",
        "bs_felderhof_wavefunction",
        "bs_felderhof_dwbp",
        "bs_verify",
        "bs_suite_len",
        "bs_suite_passed",
        "bs_suite_json",
        "bs_suite_free",
    ] {
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
    assert!(header.contains("typedef struct BsValue BsValue;"));
}
