//! The generated header declares every export and compiles as C; when the
//! static library is available, a small C program links against it.

use std::path::{Path, PathBuf};
use std::process::Command;

const EXPORTS: &[&str] = &[
    "pg_last_error",
    "pg_version",
    "pg_string_free",
    "pg_check",
    "pg_verdict_kind",
    "pg_verdict_index",
    "pg_verdict_alpha",
    "pg_verdict_json",
    "pg_verdict_free",
    "pg_alpha_sign",
    "pg_threshold",
    "pg_threshold_lo",
    "pg_threshold_hi",
    "pg_threshold_json",
    "pg_threshold_free",
    "pg_symbolic_check",
];

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "polya_gate.h"

int main(void) {
    PgVerdict *v = NULL;
    if (pg_check("3/2;1,60", 5, &v) != PG_STATUS_OK) return 1;
    if (pg_verdict_kind(v) != PG_VERDICT_KIND_FIRST_NEGATIVE_ALPHA) return 2;
    if (pg_verdict_index(v) != 3) return 3;
    char *json = pg_verdict_json(v);
    printf("%s\n", json);
    pg_string_free(json);
    pg_verdict_free(v);

    PgThreshold *t = NULL;
    if (pg_threshold("1", "1/2", 3, "60", "100", "1/1000", &t) != PG_STATUS_BAD_BRACKET) return 4;
    if (pg_last_error() == NULL) return 5;
    return 0;
}
"#;

fn header() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("include/polya_gate.h")
}

fn have_cc() -> bool {
    Command::new("cc")
        .arg("--version")
        .output()
        .is_ok_and(|o| o.status.success())
}

#[test]
fn header_declares_every_export() {
    let text = std::fs::read_to_string(header()).expect("header generated by build script");
    for name in EXPORTS {
        let declared = text.contains(&format!(" {name}(")) || text.contains(&format!("*{name}("));
        assert!(declared, "{name} missing from header");
    }
    assert!(text.contains("typedef struct PgVerdict PgVerdict;"));
    assert!(text.contains("PG_STATUS_BAD_BRACKET = 4"));
}

/// `target/<profile>` for this test binary.
fn profile_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

#[test]
fn c_program_compiles_and_runs() {
    if !have_cc() {
        eprintln!("cc not found; skipping");
        return;
    }
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("main.c");
    std::fs::write(&src, PROGRAM).unwrap();
    let include = header().parent().unwrap().to_path_buf();

    let syntax = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(&include)
        .arg(&src)
        .output()
        .unwrap();
    assert!(
        syntax.status.success(),
        "{}",
        String::from_utf8_lossy(&syntax.stderr)
    );

    let lib = profile_dir().join("libpolya_gate_ffi.a");
    if !lib.exists() {
        eprintln!("{} not built; skipping link step", lib.display());
        return;
    }
    let bin = dir.path().join("main");
    let link = Command::new("cc")
        .arg("-I")
        .arg(&include)
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .output()
        .unwrap();
    assert!(
        link.status.success(),
        "{}",
        String::from_utf8_lossy(&link.stderr)
    );
    let run = Command::new(&bin).output().unwrap();
    assert!(run.status.success(), "exit {:?}", run.status.code());
    assert!(String::from_utf8_lossy(&run.stdout).contains("first_negative_alpha"));
}
