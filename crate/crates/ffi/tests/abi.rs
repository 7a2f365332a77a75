use std::ffi::{c_char, CStr, CString};
use std::process::Command;
use std::ptr;

use translatable_ffi::*;

fn last_error() -> String {
    let p = tt_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn take(s: *mut c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_string_lossy().into_owned();
    unsafe { tt_string_free(s) };
    out
}

fn sequence(n: usize, k: usize, a: &[usize]) -> *mut TtSequence {
    let mut seq = ptr::null_mut();
    assert_eq!(unsafe { tt_sequence_new(n, k, a.as_ptr(), &mut seq) }, TtStatus::Ok);
    seq
}

#[test]
fn z4_round_trip() {
    let seq = sequence(4, 3, &[1, 2, 3, 4]);
    let mut table = ptr::null_mut();
    unsafe {
        assert_eq!(tt_table_from_sequence(seq, &mut table), TtStatus::Ok);
        assert_eq!(tt_table_order(table), 4);
        let mut v = 0;
        assert_eq!(tt_table_entry(table, 2, 4, &mut v), TtStatus::Ok);
        assert_eq!(v, 1);
        assert_eq!(tt_table_entry(table, 5, 1, &mut v), TtStatus::InvalidArgument);
        assert!(last_error().contains("out of range"));

        let mut ks = [0usize; 4];
        let mut len = 0;
        assert_eq!(tt_detect(table, ks.as_mut_ptr(), ks.len(), &mut len), TtStatus::Ok);
        assert_eq!(&ks[..len], &[3]);

        let mut text = ptr::null_mut();
        assert_eq!(tt_table_to_string(table, TtFormat::Text, &mut text), TtStatus::Ok);
        assert_eq!(take(text), "1 2 3 4\n2 3 4 1\n3 4 1 2\n4 1 2 3\n");

        let mut json = ptr::null_mut();
        assert_eq!(tt_table_to_string(table, TtFormat::Json, &mut json), TtStatus::Ok);
        let json = CString::new(take(json)).unwrap();
        let mut back = ptr::null_mut();
        assert_eq!(tt_table_parse(json.as_ptr(), &mut back), TtStatus::Ok);
        let mut w = 0;
        tt_table_entry(back, 3, 3, &mut w);
        assert_eq!(w, 1);

        let mut holds = false;
        let assoc = CString::new("associative").unwrap();
        assert_eq!(tt_check(table, assoc.as_ptr(), &mut holds), TtStatus::Ok);
        assert!(holds);
        assert_eq!(tt_semigroup_criterion(seq, &mut holds), TtStatus::Ok);
        assert!(holds);

        tt_table_free(back);
        tt_table_free(table);
        tt_sequence_free(seq);
    }
}

#[test]
fn rows_and_detection_failure() {
    let rows = [1, 3, 4, 2, 3, 1, 2, 4, 4, 2, 3, 1, 2, 4, 1, 3];
    let mut table = ptr::null_mut();
    unsafe {
        assert_eq!(tt_table_from_rows(4, rows.as_ptr(), &mut table), TtStatus::Ok);
        let mut len = 99;
        assert_eq!(tt_detect(table, ptr::null_mut(), 0, &mut len), TtStatus::Ok);
        assert_eq!(len, 0);
        let mut holds = true;
        let name = CString::new("left-cancellative").unwrap();
        assert_eq!(tt_check(table, name.as_ptr(), &mut holds), TtStatus::Ok);
        assert!(holds);
        let bad = CString::new("shiny").unwrap();
        assert_eq!(tt_check(table, bad.as_ptr(), &mut holds), TtStatus::UnknownProperty);
        tt_table_free(table);
    }
}

#[test]
fn error_codes() {
    let mut seq = ptr::null_mut();
    unsafe {
        assert_eq!(tt_sequence_new(4, 4, [1, 2, 3, 4].as_ptr(), &mut seq), TtStatus::InvalidArgument);
        assert!(seq.is_null());
        assert_eq!(tt_sequence_new(3, 1, [1, 2, 9].as_ptr(), &mut seq), TtStatus::InvalidArgument);
        assert_eq!(tt_sequence_new(3, 1, ptr::null(), &mut seq), TtStatus::NullPointer);
        assert_eq!(tt_idempotent_sequence(6, 3, &mut seq), TtStatus::ConstructionImpossible);
        assert!(last_error().contains("gcd(k-1, n)=2"));

        assert_eq!(tt_idempotent_sequence(4, 2, &mut seq), TtStatus::Ok);
        assert!(tt_last_error().is_null());
        let mut small = [0usize; 2];
        let mut len = 0;
        assert_eq!(tt_sequence_values(seq, small.as_mut_ptr(), 2, &mut len), TtStatus::BufferTooSmall);
        assert_eq!(len, 4);
        let mut vals = [0usize; 4];
        assert_eq!(tt_sequence_values(seq, vals.as_mut_ptr(), 4, &mut len), TtStatus::Ok);
        assert_eq!(vals, [1, 4, 3, 2]);
        let mut assoc = true;
        assert_eq!(tt_semigroup_criterion(seq, &mut assoc), TtStatus::Ok);
        assert!(!assoc);

        let mut table = ptr::null_mut();
        assert_eq!(tt_table_from_sequence(seq, &mut table), TtStatus::Ok);
        let name = CString::new("regular").unwrap();
        assert_eq!(tt_check(table, name.as_ptr(), &mut assoc), TtStatus::Precondition);
        tt_table_free(table);
        tt_sequence_free(seq);

        let garbage = CString::new("1 2\n3").unwrap();
        assert_eq!(tt_table_parse(garbage.as_ptr(), &mut table), TtStatus::Parse);
        assert_eq!(tt_table_order(ptr::null()), 0);
        tt_table_free(ptr::null_mut());
        tt_sequence_free(ptr::null_mut());
        tt_string_free(ptr::null_mut());
    }
}

#[test]
fn verify_campaigns() {
    let mut passed = false;
    let mut report = ptr::null_mut();
    let id = CString::new("semi").unwrap();
    unsafe {
        assert_eq!(tt_verify(id.as_ptr(), 6, 2, &mut passed, &mut report), TtStatus::Ok);
    }
    assert!(passed);
    let lines = take(report);
    assert_eq!(lines.lines().count(), 15);
    assert!(lines.lines().all(|l| l.contains("\"status\":\"pass\"")));

    let id = CString::new("no-such").unwrap();
    unsafe {
        assert_eq!(tt_verify(id.as_ptr(), 0, 0, &mut passed, &mut report), TtStatus::UnknownTheorem);
        let big = CString::new("semi").unwrap();
        assert_eq!(tt_verify(big.as_ptr(), 500, 1, &mut passed, &mut report), TtStatus::ResourceLimit);
    }
}

const HEADER: &str = include_str!("../include/translatable.h");

#[test]
fn header_declares_the_abi() {
    for decl in [
        "typedef struct TtSequence TtSequence;",
        "typedef struct TtTable TtTable;",
        "TT_STATUS_OK = 0",
        "TT_STATUS_CONSTRUCTION_IMPOSSIBLE = 6",
        "TT_FORMAT_TEXT = 1",
        "const char *tt_last_error(void);",
        "enum TtStatus tt_sequence_new(size_t n, size_t k, const size_t *entries, struct TtSequence **out);",
        "void tt_string_free(char *s);",
        "void tt_table_free(struct TtTable *table);",
        "size_t tt_table_order(const struct TtTable *table);",
    ] {
        assert!(HEADER.contains(decl), "missing `{decl}`");
    }
    for f in [
        "tt_idempotent_sequence", "tt_sequence_values", "tt_semigroup_criterion", "tt_sequence_free",
        "tt_table_from_sequence", "tt_table_from_rows", "tt_table_parse", "tt_table_to_string",
        "tt_table_entry", "tt_detect", "tt_check", "tt_verify",
    ] {
        assert!(HEADER.contains(&format!(" {f}(")), "missing `{f}`");
    }
}

#[test]
fn header_compiles_as_c_and_cpp() {
    let include = concat!(env!("CARGO_MANIFEST_DIR"), "/include");
    let src = std::env::temp_dir().join(format!("tt_header_{}.c", std::process::id()));
    std::fs::write(&src, "#include \"translatable.h\"\nint main(void) { return TT_STATUS_OK; }\n").unwrap();
    for (cc, lang) in [("cc", "c"), ("c++", "c++")] {
        let Ok(out) = Command::new(cc)
            .args(["-fsyntax-only", "-Wall", "-Werror", "-x", lang, "-I", include])
            .arg(&src)
            .output()
        else {
            eprintln!("{cc} not found; skipping");
            continue;
        };
        assert!(out.status.success(), "{cc}: {}", String::from_utf8_lossy(&out.stderr));
    }
}
