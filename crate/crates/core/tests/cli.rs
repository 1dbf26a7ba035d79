use std::path::PathBuf;
use std::process::Command;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .display()
        .to_string()
}

fn ncluster(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_ncluster"))
        .args(args)
        .env("NO_COLOR", "1")
        .output()
        .unwrap()
}

#[test]
fn binary_exit_codes() {
    let lit = data("example_literal.json");
    let o = ncluster(&[
        "check-pair",
        "--input",
        &lit,
        "--x",
        "X",
        "--y",
        "Y",
        "--window",
        "-20..20",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.contains("witness -4"), "{text}");
    assert!(text.contains("(-1,3)"));

    let o = ncluster(&["ext", "--n", "3", "--arcs", "(2,9) (-1,6)", "--degree", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(o.stdout, b"1\n");

    let o = ncluster(&["check-pair", "--x", "X", "--y", "Y", "--window", "-20..20"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn mutate_without_certificate_reports_failure() {
    let lit = data("example_literal.json");
    let o = ncluster(&[
        "mutate", "--input", &lit, "--x", "X", "--y", "Y", "--d", "D", "--window", "-20..20",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let o = ncluster(&[
        "mutate", "--input", &lit, "--x", "X", "--y", "Y", "--d", "D", "--window", "-20..20",
        "--force",
    ]);
    // Rotating the literal sets works, but the result is still not a pair.
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn n_override_revalidates_document() {
    let closed = data("example_closed.json");
    let o = ncluster(&[
        "nc", "--input", &closed, "--n", "2", "--set", "X", "--window", "-5..5",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(
        err.contains("explicit[0]") && err.contains("not 2-admissible"),
        "{err}"
    );
}

#[test]
fn text_render_respects_no_color() {
    let closed = data("example_closed.json");
    let o = ncluster(&[
        "render",
        "--input",
        &closed,
        "--set",
        "Y",
        "--highlight",
        "X",
        "--style",
        "text",
        "--window",
        "-9..15",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(!text.contains('\x1b'));
    assert_eq!(text.matches("\ncomponent ").count(), 3);
    assert!(text.contains("* "));
}

#[test]
fn oracle_command_passes() {
    let o = ncluster(&["oracle", "--n", "2", "--window", "-8..8", "--cases", "50"]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stdout)
    );
}
