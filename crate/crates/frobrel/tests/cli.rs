//! End-to-end tests of the command line: exit codes, report wording, and
//! the shipped example corpus.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use frobrel::files::{self, FrobeniusFile, GroupoidFile, ResultsFile};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn frobrel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_frobrel"))
        .args(args)
        .output()
        .expect("the binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn check_passes_on_the_shipped_examples() {
    let run = frobrel(&["check", data("one_volume.json").to_str().unwrap()]);
    assert_eq!(exit_code(&run), 0, "{}", stdout(&run));
    let report = stdout(&run);
    assert!(report.contains("commutative: yes"));
    assert!(report.contains("special: no"));

    let run = frobrel(&["check", data("torus.json").to_str().unwrap()]);
    assert_eq!(exit_code(&run), 0);
    let report = stdout(&run);
    assert!(report.contains("commutative: no"));
    assert!(report.contains("dagger: no"));
    assert!(report.contains("Nakayama nontrivial: yes"));
}

#[test]
fn check_distinguishes_failure_from_format_error() {
    let dir = tempdir();
    let broken = dir.join("broken.json");
    // Well-formed file, but the unit is empty: a semantic failure.
    std::fs::write(
        &broken,
        r#"{"elements":["x"],"eta":[],"epsilon":[],"mu":[],"delta":[]}"#,
    )
    .unwrap();
    let run = frobrel(&["check", broken.to_str().unwrap()]);
    assert_eq!(exit_code(&run), 1);
    assert!(stdout(&run).contains("unit axiom"));

    let garbage = dir.join("garbage.json");
    std::fs::write(&garbage, "not json at all").unwrap();
    let run = frobrel(&["check", garbage.to_str().unwrap()]);
    assert_eq!(exit_code(&run), 2);

    let unknown = dir.join("unknown.json");
    std::fs::write(
        &unknown,
        r#"{"elements":["x"],"eta":["y"],"epsilon":[],"mu":[],"delta":[]}"#,
    )
    .unwrap();
    let run = frobrel(&["check", unknown.to_str().unwrap()]);
    assert_eq!(exit_code(&run), 2, "labels outside the carrier are a format error");
}

#[test]
fn eval_prints_the_diagonal_for_the_snake() {
    let run = frobrel(&[
        "eval",
        "snake_left",
        data("one_volume.json").to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&run), 0);
    assert_eq!(stdout(&run), "(1) -> (1)\n(nu) -> (nu)\n");
}

#[test]
fn eval_rejects_ill_typed_terms() {
    let run = frobrel(&["eval", "mul ; mul", data("one_volume.json").to_str().unwrap()]);
    assert_eq!(exit_code(&run), 2);
}

#[test]
fn eval_reads_terms_from_files() {
    let dir = tempdir();
    let term = dir.join("alpha.term");
    std::fs::write(&term, "mul ; counit\n").unwrap();
    let run = frobrel(&[
        "eval",
        &format!("@{}", term.display()),
        data("one_volume.json").to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&run), 0);
    assert_eq!(stdout(&run), "(1, nu) -> ()\n(nu, 1) -> ()\n");
}

#[test]
fn genus_of_the_torus_object() {
    let run = frobrel(&["genus", data("torus.json").to_str().unwrap(), "--max", "3"]);
    assert_eq!(exit_code(&run), 0);
    assert_eq!(
        stdout(&run),
        "genus 0: false\ngenus 1: true\ngenus 2: false\ngenus 3: false\n"
    );
}

#[test]
fn nerve_then_genus_stays_true_for_groups() {
    let dir = tempdir();
    let object = dir.join("z2.json");
    let run = frobrel(&[
        "nerve",
        data("z2.groupoid.json").to_str().unwrap(),
        "--object",
        object.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&run), 0);
    let run = frobrel(&["genus", object.to_str().unwrap(), "--max", "5"]);
    assert_eq!(exit_code(&run), 0);
    for line in stdout(&run).lines() {
        assert!(line.ends_with("true"), "{line}");
    }
}

#[test]
fn convert_round_trips_byte_for_byte() {
    let dir = tempdir();
    let simp = dir.join("ov.simplicial.json");
    let back = dir.join("ov.back.json");
    let source = data("one_volume.json");
    assert_eq!(
        exit_code(&frobrel(&[
            "convert",
            source.to_str().unwrap(),
            "--to",
            "simplicial",
            "-o",
            simp.to_str().unwrap(),
        ])),
        0
    );
    assert_eq!(
        exit_code(&frobrel(&[
            "convert",
            simp.to_str().unwrap(),
            "--to",
            "frobenius",
            "-o",
            back.to_str().unwrap(),
        ])),
        0
    );
    assert_eq!(
        std::fs::read_to_string(&source).unwrap(),
        std::fs::read_to_string(&back).unwrap()
    );
}

#[test]
fn enumerate_agrees_with_the_oracle_and_the_frozen_results() {
    let run = frobrel(&["enumerate", "2", "--oracle-check"]);
    assert_eq!(exit_code(&run), 0);
    assert!(stdout(&run).contains("the raw search agrees"));

    for n in ["1", "2", "3"] {
        let frozen = data(&format!("enumeration/n{n}.json"));
        let run = frobrel(&["enumerate", n, "--out", frozen.to_str().unwrap()]);
        assert_eq!(exit_code(&run), 0, "n = {n}");
        assert!(stdout(&run).contains("results match"), "n = {n}");
    }

    let run = frobrel(&["enumerate", "4"]);
    assert_eq!(exit_code(&run), 2);
}

#[test]
fn duals_reports_which_duals_fix_the_object() {
    let dir = tempdir();
    let run = frobrel(&[
        "duals",
        data("one_volume.json").to_str().unwrap(),
        "--out-dir",
        dir.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&run), 0);
    let report = stdout(&run);
    assert!(report.contains("opposite: equal to the original"));
    assert!(report.contains("rotation: different"));
    for name in ["rotation", "dagger", "opposite"] {
        let file: FrobeniusFile = files::load(&dir.join(format!("one_volume.{name}.json"))).unwrap();
        assert!(file.to_object().unwrap().verify().passes());
    }
}

#[test]
fn exterior_builtins_write_objects() {
    let dir = tempdir();
    let out = dir.join("torus.json");
    let run = frobrel(&["exterior", "2", "torus", "-o", out.to_str().unwrap()]);
    assert_eq!(exit_code(&run), 0);
    assert_eq!(
        std::fs::read_to_string(&out).unwrap(),
        std::fs::read_to_string(data("torus.json")).unwrap()
    );
    // Dimension checks are format errors.
    assert_eq!(exit_code(&frobrel(&["exterior", "3", "torus"])), 2);
}

#[test]
fn shipped_corpus_round_trips_through_serialization() {
    for name in ["one_volume.json", "torus.json"] {
        let path = data(name);
        let file: FrobeniusFile = files::load(&path).unwrap();
        let object = file.to_object().unwrap();
        assert_eq!(FrobeniusFile::from_object(&object), file, "{name}");
        // Tool-written files are in canonical form already.
        assert_eq!(
            files::to_pretty_string(&file).unwrap(),
            std::fs::read_to_string(&path).unwrap(),
            "{name}"
        );
    }
    for name in [
        "z2.groupoid.json",
        "z3.groupoid.json",
        "pair2.groupoid.json",
        "s3.groupoid.json",
    ] {
        let path = data(name);
        let file: GroupoidFile = files::load(&path).unwrap();
        let groupoid = file.to_groupoid().unwrap();
        assert!(groupoid.validate().passes(), "{name}");
        assert_eq!(GroupoidFile::from_groupoid(&groupoid), file, "{name}");
    }
    for n in 1..=3 {
        let path = data(&format!("enumeration/n{n}.json"));
        let file: ResultsFile = files::load(&path).unwrap();
        assert_eq!(file.carrier_size, n);
        for representative in &file.representatives {
            assert!(representative.to_object().unwrap().verify().passes());
        }
    }
}

fn tempdir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!(
        "frobrel-cli-{}-{:?}",
        std::process::id(),
        std::thread::current().id()
    ));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
