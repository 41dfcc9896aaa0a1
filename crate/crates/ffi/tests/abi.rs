use std::ffi::{c_char, CStr, CString};
use std::ptr;

use covseries_ffi::*;

const PLAIN: u32 = CsFormat::Plain as u32;
const LATEX: u32 = CsFormat::Latex as u32;
const JSON: u32 = CsFormat::Json as u32;

unsafe fn take_string(p: *mut c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    cs_string_free(p);
    s
}

unsafe fn last_error() -> String {
    let p = cs_last_error();
    assert!(!p.is_null());
    CStr::from_ptr(p).to_string_lossy().into_owned()
}

unsafe fn series(d: u32) -> *mut CsRational {
    let mut h = ptr::null_mut();
    assert_eq!(cs_poincare_series(d, &mut h), CsStatus::Ok);
    h
}

unsafe fn render(h: *const CsRational, format: u32, d: u32) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(cs_rational_render(h, format, d, &mut s), CsStatus::Ok);
    take_string(s)
}

#[test]
fn compute_and_render() {
    unsafe {
        let h = series(3);
        assert!(cs_last_error().is_null());
        assert_eq!(render(h, PLAIN, 3), "(1+z^3)/((1-z)*(1-z^2)*(1-z^4))");
        assert_eq!(render(h, LATEX, 3), r"\frac{1 + z^{3}}{(1 - z)(1 - z^{2})(1 - z^{4})}");
        assert_eq!(
            render(h, JSON, 3),
            r#"{"d":3,"numerator":[1,0,0,1],"denominator_exponents":[1,2,4]}"#
        );

        let mut s = ptr::null_mut();
        assert_eq!(cs_rational_expand_json(h, 8, &mut s), CsStatus::Ok);
        assert_eq!(take_string(s), "[1,1,2,3,5,6,8,10,13]");
        cs_rational_free(h);
    }
}

#[test]
fn parse_json_and_equality() {
    unsafe {
        let h = series(4);
        let text = CString::new(render(h, PLAIN, 4)).unwrap();
        let mut parsed = ptr::null_mut();
        assert_eq!(cs_rational_parse(text.as_ptr(), &mut parsed), CsStatus::Ok);

        let json = CString::new(render(h, JSON, 4)).unwrap();
        let mut d = 0u32;
        let mut from_json = ptr::null_mut();
        assert_eq!(
            cs_rational_from_json(json.as_ptr(), &mut d, &mut from_json),
            CsStatus::Ok
        );
        assert_eq!(d, 4);

        let mut eq = false;
        assert_eq!(cs_rational_equals(h, parsed, &mut eq), CsStatus::Ok);
        assert!(eq);
        assert_eq!(cs_rational_equals(h, from_json, &mut eq), CsStatus::Ok);
        assert!(eq);

        let other = series(5);
        assert_eq!(cs_rational_equals(h, other, &mut eq), CsStatus::Ok);
        assert!(!eq);

        // Same function written differently.
        let a = CString::new("1/(1-z)").unwrap();
        let b = CString::new("(1+z)/(1-z^2)").unwrap();
        let (mut ha, mut hb) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(cs_rational_parse(a.as_ptr(), &mut ha), CsStatus::Ok);
        assert_eq!(cs_rational_parse(b.as_ptr(), &mut hb), CsStatus::Ok);
        assert_eq!(cs_rational_equals(ha, hb, &mut eq), CsStatus::Ok);
        assert!(eq);

        for p in [h, parsed, from_json, other, ha, hb] {
            cs_rational_free(p);
        }
    }
}

#[test]
fn dims_table() {
    unsafe {
        for method in [CsMethod::Springer, CsMethod::Dp, CsMethod::Gf] {
            let mut s = ptr::null_mut();
            assert_eq!(cs_dims_json(2, 5, method as u32, &mut s), CsStatus::Ok);
            let json = take_string(s);
            assert!(json.ends_with(r#""dims":[1,1,2,2,3,3]}"#), "{json}");
        }
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(cs_poincare_series(0, &mut h), CsStatus::DegreeOutOfRange);
        assert!(h.is_null());
        assert!(last_error().contains("out of range"));
        assert_eq!(
            cs_poincare_series(cs_max_degree() + 1, &mut h),
            CsStatus::DegreeOutOfRange
        );
        assert_eq!(cs_poincare_series(3, ptr::null_mut()), CsStatus::NullPointer);

        let bad = CString::new("1/(1+z").unwrap();
        assert_eq!(cs_rational_parse(bad.as_ptr(), &mut h), CsStatus::ParseError);
        assert!(last_error().starts_with("parse error"));
        assert_eq!(cs_rational_parse(ptr::null(), &mut h), CsStatus::NullPointer);
        let invalid = [0xffu8 as c_char, 0];
        assert_eq!(cs_rational_parse(invalid.as_ptr(), &mut h), CsStatus::InvalidUtf8);

        let junk = CString::new(r#"{"d":1}"#).unwrap();
        assert_eq!(
            cs_rational_from_json(junk.as_ptr(), ptr::null_mut(), &mut h),
            CsStatus::ParseError
        );

        let good = series(2);
        let mut s = ptr::null_mut();
        assert_eq!(cs_rational_render(good, 9, 2, &mut s), CsStatus::InvalidArgument);
        assert!(s.is_null());
        assert_eq!(cs_dims_json(2, 3, 7, &mut s), CsStatus::InvalidArgument);
        assert_eq!(cs_dims_json(21, 3, 0, &mut s), CsStatus::DegreeOutOfRange);
        assert_eq!(cs_rational_render(ptr::null(), PLAIN, 2, &mut s), CsStatus::NullPointer);
        let mut eq = false;
        assert_eq!(cs_rational_equals(good, ptr::null(), &mut eq), CsStatus::NullPointer);

        // A later success clears the message.
        assert_eq!(cs_rational_render(good, PLAIN, 2, &mut s), CsStatus::Ok);
        assert!(cs_last_error().is_null());
        cs_string_free(s);
        cs_rational_free(good);

        cs_rational_free(ptr::null_mut());
        cs_string_free(ptr::null_mut());
    }
}
