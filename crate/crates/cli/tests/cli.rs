use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures").join(name)
}

fn codemix(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_codemix")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn analyze_worked_cases_json() {
    let out = codemix(&["analyze", path_str(&fixture("cases_01_04.tsv"))]);
    assert!(out.status.success(), "{}", stderr(&out));
    let json: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let cf2: Vec<f64> = json["per_sentence"].as_array().unwrap().iter().map(|s| s["CF2"].as_f64().unwrap()).collect();
    assert_eq!(cf2.len(), 4);
    for (got, want) in cf2.iter().zip([95.0, 0.0, 67.5, 27.5]) {
        assert!((got - want).abs() <= 0.1, "{cf2:?}");
    }
    let text = stdout(&out);
    let positions: Vec<usize> = ["corpus", "sentences", "tokens", "weights", "distribution", "summary", "cmi", "per_sentence"]
        .iter()
        .map(|k| text.find(&format!("\n  \"{k}\":")).unwrap_or_else(|| panic!("missing {k}")))
        .collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "top-level keys out of order");
}

#[test]
fn inline_format_flag() {
    let column = codemix(&["analyze", path_str(&fixture("cases_01_04.tsv")), "--out", "csv", "--per-sentence"]);
    let inline =
        codemix(&["analyze", path_str(&fixture("cases_01_04.txt")), "--format", "inline", "--out", "csv", "--per-sentence"]);
    assert!(inline.status.success(), "{}", stderr(&inline));
    assert_eq!(stdout(&column), stdout(&inline));
}

#[test]
fn analyze_empty_file_fails() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.tsv");
    fs::write(&empty, "").unwrap();
    let out = codemix(&["analyze", path_str(&empty)]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("empty corpus"), "{}", stderr(&out));
}

#[test]
fn analyze_mix_only_weights() {
    let dir = tempfile::tempdir().unwrap();
    let case3 = dir.path().join("case3.tsv");
    let text: String = (0..10).map(|i| format!("w{i}\tL{}\n", i % 2 + 1)).collect::<String>() + "\n";
    fs::write(&case3, text).unwrap();
    let out = codemix(&["analyze", path_str(&case3), "--weights", "100,0"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let json: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let raw = json["per_sentence"][0]["raw"]["CF2"].as_f64().unwrap();
    // (100 * 0.5) / (0.25 / 9 * 4 + 1)
    let expected = 50.0 / (1.0 + 1.0 / 9.0);
    assert!((raw - expected).abs() < 1e-9);
    assert!((raw - 45.0).abs() < 1e-9);
}

#[test]
fn analyze_rejects_zero_weights() {
    let out = codemix(&["analyze", path_str(&fixture("case_06.tsv")), "--weights", "0,0"]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("invalid weights"));
}

#[test]
fn parse_errors_carry_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.tsv");
    fs::write(&bad, "a\tEN\nb\tBN\nbroken\n").unwrap();
    let out = codemix(&["analyze", path_str(&bad)]);
    assert!(!out.status.success());
    let err = stderr(&out);
    assert!(err.contains("bad.tsv") && err.contains("line 3"), "{err}");
}

#[test]
fn unknown_tags_are_errors_unless_lenient() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("es.tsv");
    fs::write(&file, "hola\tES\nfriend\tEN\n\n").unwrap();
    let strict = codemix(&["analyze", path_str(&file)]);
    assert!(!strict.status.success());
    assert!(stderr(&strict).contains("ES"));
    let extended = codemix(&["analyze", path_str(&file), "--languages", "es", "--out", "csv", "--per-sentence"]);
    assert!(extended.status.success());
    assert!(stdout(&extended).lines().nth(1).unwrap().starts_with("0,2,0,2,1,"));
    let lenient = codemix(&["analyze", path_str(&file), "--lenient-tags", "--out", "csv", "--per-sentence"]);
    assert!(stdout(&lenient).lines().nth(1).unwrap().starts_with("0,2,1,1,0,"));
}

#[test]
fn per_sentence_csv_columns() {
    let out = codemix(&["analyze", path_str(&fixture("cases_01_04.tsv")), "--out", "csv", "--per-sentence"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "index,W,u,N,S,LF,SF,MF,CMI,CF1,CF2,CF3");
    assert_eq!(lines.next().unwrap(), "0,10,0,10,9,1.00,1.00,0.90,90.00,95.00,95.00,95.00");
    assert_eq!(lines.count(), 3);
}

#[test]
fn skipped_sentences_warn() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("gaps.tsv");
    fs::write(&file, "a\tEN\n\n\n\nb\tBN\n").unwrap();
    let out = codemix(&["analyze", path_str(&file)]);
    assert!(out.status.success());
    assert!(stderr(&out).contains("skipped 2 empty sentence(s)"), "{}", stderr(&out));
}

fn write_tags(path: &Path, sentences: &[&[&str]]) {
    let mut text = String::new();
    for s in sentences {
        for (i, t) in s.iter().enumerate() {
            text.push_str(&format!("w{i}\t{t}\n"));
        }
        text.push('\n');
    }
    fs::write(path, text).unwrap();
}

#[test]
fn compare_alternating_against_blocked() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.tsv"), dir.path().join("b.tsv"));
    write_tags(&a, &[&["EN", "BN", "EN", "BN", "EN", "BN"], &["HI", "EN", "HI", "EN"]]);
    write_tags(&b, &[&["EN", "EN", "EN", "BN", "BN", "BN"], &["HI", "HI", "EN", "EN"]]);
    let out = codemix(&["compare", path_str(&a), path_str(&b)]);
    assert!(out.status.success(), "{}", stderr(&out));
    let json: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let verdict = |i: usize| json["comparison"][i]["verdict"].as_str().unwrap().to_string();
    let index = |i: usize| json["comparison"][i]["index"].as_str().unwrap().to_string();
    assert_eq!((index(0), verdict(0)), ("CMI".into(), "TIE".into()));
    assert_eq!((index(2), verdict(2)), ("CF2".into(), "A".into()));
    assert_eq!((index(3), verdict(3)), ("CF3".into(), "A".into()));

    // hand-evaluated: sentence 1 of A has W=6, N=2, S=5; of B, S=1
    // A: MF 0.5, SF 1,   LF 3 -> CF2 = 75 / (0.05 * 2 + 1)
    // B: MF 0.5, SF 0.2, LF 3 -> CF2 = 35 / 1.1
    // sentence 2: W=4, N=2, LF 2, f = 0.25/3 + 1; A: S=3 -> 75/f, B: S=1 -> (25 + 50/3)/f
    let f2 = 0.25 / 3.0 + 1.0;
    let mean_a = (75.0 / 1.1 + 75.0 / f2) / 2.0;
    let mean_b = (35.0 / 1.1 + (25.0 + 50.0 / 3.0) / f2) / 2.0;
    let raw = &json["comparison"][2]["raw"];
    assert!((raw["mean_a"].as_f64().unwrap() - mean_a).abs() < 1e-9);
    assert!((raw["mean_b"].as_f64().unwrap() - mean_b).abs() < 1e-9);
}

#[test]
fn compare_identical_files() {
    let f = fixture("cases_01_04.tsv");
    let out = codemix(&["compare", path_str(&f), path_str(&f), "--out", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 5);
    for row in rows {
        let fields: Vec<&str> = row.split(',').collect();
        assert_eq!((fields[3], fields[4]), ("0.00", "TIE"), "{row}");
    }
}

#[test]
fn compare_names_the_failing_input() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("broken_b.tsv");
    fs::write(&bad, "oops\n").unwrap();
    let out = codemix(&["compare", path_str(&fixture("case_06.tsv")), path_str(&bad)]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("broken_b.tsv"));
}

#[test]
fn plot_csv_layout() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("plot.csv");
    let out = codemix(&["plot", path_str(&fixture("cases_01_04.tsv")), "--index", "cf2", "--csv", path_str(&csv)]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(fs::read_to_string(&csv).unwrap(), "words,cf2\n10,95.00\n10,0.00\n10,67.50\n10,27.50\n");
}

#[test]
fn plot_unknown_index() {
    let out = codemix(&["plot", path_str(&fixture("case_06.tsv")), "--index", "cf9", "--csv", "/dev/null"]);
    assert!(!out.status.success());
    let err = stderr(&out);
    assert!(err.contains("cf9") && err.contains("cmi, cf1, cf2, cf3"), "{err}");
}

#[test]
fn plot_single_sentence_svg() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("plot.svg");
    let out = codemix(&["plot", path_str(&fixture("case_06.tsv")), "--index", "cf2", "--svg", path_str(&svg)]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = fs::read_to_string(&svg).unwrap();
    assert!(text.starts_with("<svg"));
    assert_eq!(text.matches("<circle").count(), 1);
    assert!(text.contains("words per sentence") && text.contains(">CF2<"));
}

#[test]
fn plot_requires_an_output() {
    let out = codemix(&["plot", path_str(&fixture("case_06.tsv")), "--index", "cf2"]);
    assert!(!out.status.success());
}

#[test]
fn generate_is_deterministic_and_parseable() {
    let args = [
        "generate", "--sentences", "20", "--words", "4-12", "--languages", "3", "--arrangement", "random",
        "--undefined-ratio", "0.25", "--seed", "99",
    ];
    let (first, second) = (codemix(&args), codemix(&args));
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);

    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("gen.tsv");
    fs::write(&file, &first.stdout).unwrap();
    let out = codemix(&["analyze", path_str(&file)]);
    assert!(out.status.success(), "{}", stderr(&out));
    let json: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["sentences"], 20);
}

#[test]
fn generate_rejects_too_many_languages() {
    let out = codemix(&["generate", "--sentences", "1", "--words", "3", "--languages", "4", "--arrangement", "blocked"]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("4 languages"));
}

#[test]
fn stats_prints_tables() {
    let out = codemix(&["stats", path_str(&fixture("case_11.tsv"))]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("Language Independent"));
    assert!(text.contains("CMI-all: 33.33  CMI-mixed: 33.33"), "{text}");
}
