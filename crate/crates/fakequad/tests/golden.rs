//! Golden-file checks for the reproduction targets. Run with
//! UPDATE_GOLDEN=1 to rewrite the committed files after an intentional
//! change.

use std::fs;
use std::path::PathBuf;

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

fn check(name: &str, generated: &str) {
    let path = golden_path(name);
    if std::env::var("UPDATE_GOLDEN").is_ok() {
        fs::write(&path, generated).expect("write golden file");
        return;
    }
    let committed = fs::read_to_string(&path).expect("read golden file");
    assert_eq!(
        committed, generated,
        "{} drifted from the committed golden file",
        name
    );
}

#[test]
fn theorem_b_matches_golden() {
    check(
        "theorem_b.txt",
        &fakequad::cli::theorem_b_report().expect("table generates"),
    );
}

#[test]
fn section4_matches_golden() {
    check(
        "section4.txt",
        &fakequad::cli::section4_report().expect("replay generates"),
    );
}

#[test]
fn covers_matches_golden() {
    check(
        "covers.txt",
        &fakequad::cli::covers_report().expect("pipelines generate"),
    );
}
