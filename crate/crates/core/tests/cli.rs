use std::path::Path;
use std::process::{Command, Output};

fn boxicity(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_boxicity")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn gen(spec: &str) -> String {
    let o = boxicity(&["gen", spec]);
    assert!(o.status.success());
    stdout(&o).trim().to_string()
}

#[test]
fn box_certificate_reverifies() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("m2c4.cert");
    let g = gen("mycielski:cycle:4:2");
    let o = boxicity(&["box", &g, "--out", cert.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), format!("box 2\ncertificate {}\n", cert.display()));

    let o = boxicity(&["verify-cover", &g, cert.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "accept\n");

    // the same certificate does not fit a different graph
    let o = boxicity(&["verify-cover", &gen("mycielski:path:4:2"), cert.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn tampered_certificate_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("c5.cert");
    let g = gen("cycle:5");
    let o = boxicity(&["box", &g, "--stdout"]);
    let text = stdout(&o);
    let body = text.strip_prefix("box 2\n").unwrap();
    let mut lines: Vec<&str> = body.lines().collect();
    lines[1] = "parts 1";
    lines.truncate(3);
    std::fs::write(&cert, lines.join("\n")).unwrap();
    let o = boxicity(&["verify-cover", &g, cert.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("reject: host edge"), "{}", stdout(&o));
}

#[test]
fn lemma41_certificate_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("k3.cert");
    let o = boxicity(&["construct-cover", "--lemma41", "3"]);
    assert!(o.status.success());
    std::fs::write(&cert, o.stdout).unwrap();
    let o = boxicity(&["verify-cover", &gen("mycielski:complete:3:2"), cert.to_str().unwrap()]);
    assert_eq!(stdout(&o), "accept\n");

    let o = boxicity(&["construct-cover", "--thm42", &gen("star:3")]);
    assert!(stdout(&o).contains("parts 2\n"));
}

#[test]
fn gen_round_trip_is_byte_identical() {
    for spec in ["complete:7", "empty:3", "path:6", "cycle:9", "star:4", "multipartite:3,1,2", "focalize:mycielski:path:3:3:2"] {
        let g6 = gen(spec);
        let o = boxicity(&["gen", spec, "--dot"]);
        assert!(stdout(&o).starts_with("graph G {"));
        let reparsed = boxicity::graph6::encode(&boxicity::graph6::decode(&g6).unwrap());
        assert_eq!(reparsed, g6);
    }
    assert_eq!(gen("mycielski:cycle:4:3"), {
        let o = boxicity(&["gen", "cycle:4", "--r", "3"]);
        stdout(&o).trim().to_string()
    });
}

#[test]
fn bounds_row() {
    let o = boxicity(&["bounds", &gen("multipartite:1,1,2")]);
    assert!(o.status.success());
    let out = stdout(&o);
    let row: Vec<&str> = out.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(&row[1..4], ["M2", "2", "3"]);
    for tag in ["cor3.6", "thm4.2", "lemma3.3", "roberts-floor-n/2", "thm1.1"] {
        assert!(out.contains(tag), "missing {tag}");
    }
}

#[test]
fn error_exit_codes() {
    assert_eq!(boxicity(&["gen", "wheel:5"]).status.code(), Some(2));
    assert_eq!(boxicity(&["interval", "~~~"]).status.code(), Some(2));
    let o = boxicity(&["box", &gen("mycielski:complete:5:2"), "--stdout", "--max-complement-edges", "19"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--max-complement-edges"));
    assert_eq!(boxicity(&["construct-cover", "--lemma41", "1"]).status.code(), Some(2));
}

#[test]
fn survey_bundled_corpus() {
    let corpus = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/corpus_le6.g6");
    let o = boxicity(&["survey", corpus.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some(boxicity::cli::SURVEY_HEADER));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 208);
    assert!(rows.iter().all(|r| !r.contains("fail")));

    let o = boxicity(&["survey", corpus.to_str().unwrap(), "--mycielski-r", "3", "--max-complement-edges", "12"]);
    assert_eq!(o.status.code(), Some(0));
}
