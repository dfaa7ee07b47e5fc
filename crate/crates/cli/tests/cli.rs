use std::fs;
use std::path::Path;
use std::process::{Command, Output};

const TWO_TRIANGLES: &str = "a b\nb c\na c\nd e\ne f\nd f\nc d\n";
const RING: &str = "a b\nb c\nc d\nd e\ne f\nf a\na c\nd f\n";

fn netcentral(args: &[&str], cwd: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_netcentral"))
        .args(args)
        .current_dir(cwd)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn version_lists_definition_strings() {
    let tmp = tempfile::tempdir().unwrap();
    let out = netcentral(&["--version"], tmp.path());
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("definition versions:"));
    assert!(text.contains("kendall-tau-b/1"));
    assert!(text.contains("louvain-seeded/1"));
    assert!(text.contains("discrete-mle-ks-xmin/1"));
}

#[test]
fn analyze_writes_reports() {
    let tmp = tempfile::tempdir().unwrap();
    fs::write(tmp.path().join("tri.edges"), TWO_TRIANGLES).unwrap();
    let out = netcentral(
        &["analyze", "tri.edges", "--seed", "7", "--out", "result"],
        tmp.path(),
    );
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("tri: 6 nodes, 7 edges"));

    let dir = tmp.path().join("result");
    for name in [
        "centrality.csv",
        "correlations.csv",
        "topology.csv",
        "pair_summary.csv",
        "consistency.csv",
        "regression.csv",
        "manifest.json",
    ] {
        assert!(dir.join(name).is_file(), "{name} missing");
    }
    let centrality = fs::read_to_string(dir.join("centrality.csv")).unwrap();
    assert!(centrality.starts_with("network,node,measure,score\n"));
    assert_eq!(centrality.lines().count(), 1 + 17 * 6);
    let manifest = fs::read_to_string(dir.join("manifest.json")).unwrap();
    assert!(manifest.contains("\"seed\": 7"));
    assert!(manifest.contains("\"katz_s\""));
}

#[test]
fn analyze_accepts_partition_and_katz_s() {
    let tmp = tempfile::tempdir().unwrap();
    fs::write(tmp.path().join("tri.edges"), TWO_TRIANGLES).unwrap();
    fs::write(tmp.path().join("tri.part"), "a 0\nb 0\nc 0\nd 1\ne 1\nf 1\n").unwrap();
    let out = netcentral(
        &[
            "analyze",
            "tri.edges",
            "--partition",
            "tri.part",
            "--katz-s",
            "0.2",
            "--out",
            "result",
        ],
        tmp.path(),
    );
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("2 communities"));
    let manifest = fs::read_to_string(tmp.path().join("result/manifest.json")).unwrap();
    assert!(manifest.contains("\"katz_s\": 0.2"));
    assert!(manifest.contains("external-file:"));
}

#[test]
fn analyze_rejects_bad_katz_s() {
    let tmp = tempfile::tempdir().unwrap();
    fs::write(tmp.path().join("tri.edges"), TWO_TRIANGLES).unwrap();
    let out = netcentral(
        &["analyze", "tri.edges", "--katz-s", "-1", "--out", "result"],
        tmp.path(),
    );
    assert!(!out.status.success());
    assert!(stderr(&out).contains("katz"));
}

#[test]
fn batch_runs_corpus_directory() {
    let tmp = tempfile::tempdir().unwrap();
    let corpus = tmp.path().join("corpus");
    fs::create_dir(&corpus).unwrap();
    fs::write(corpus.join("tri.edges"), TWO_TRIANGLES).unwrap();
    fs::write(corpus.join("ring.edges"), RING).unwrap();
    let out = netcentral(&["batch", "corpus", "--out", "result"], tmp.path());
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("analyzed 2 networks (0 skipped)"));

    let correlations = fs::read_to_string(tmp.path().join("result/correlations.csv")).unwrap();
    assert_eq!(correlations.lines().count(), 1 + 2 * 70);
    // networks sorted by id: ring before tri
    assert!(correlations.lines().nth(1).unwrap().starts_with("ring,"));
    let consistency = fs::read_to_string(tmp.path().join("result/consistency.csv")).unwrap();
    assert_eq!(consistency.lines().count(), 1 + 4);
}

#[test]
fn batch_with_partitions_dir() {
    let tmp = tempfile::tempdir().unwrap();
    let corpus = tmp.path().join("corpus");
    let parts = tmp.path().join("parts");
    fs::create_dir(&corpus).unwrap();
    fs::create_dir(&parts).unwrap();
    fs::write(corpus.join("tri.edges"), TWO_TRIANGLES).unwrap();
    fs::write(parts.join("tri.part"), "a 0\nb 0\nc 0\nd 1\ne 1\nf 1\n").unwrap();
    let out = netcentral(
        &["batch", "corpus", "--partitions", "parts", "--out", "result"],
        tmp.path(),
    );
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let manifest = fs::read_to_string(tmp.path().join("result/manifest.json")).unwrap();
    assert!(manifest.contains("\"communities\": 2"));

    // a network without its partition file is skipped, not fatal
    fs::write(corpus.join("ring.edges"), RING).unwrap();
    let out = netcentral(
        &["batch", "corpus", "--partitions", "parts", "--out", "result2"],
        tmp.path(),
    );
    assert!(out.status.success());
    assert!(stderr(&out).contains("skipped ring"));
    let manifest = fs::read_to_string(tmp.path().join("result2/manifest.json")).unwrap();
    assert!(manifest.contains("no partition file"));
}

#[test]
fn batch_measure_subset() {
    let tmp = tempfile::tempdir().unwrap();
    let corpus = tmp.path().join("corpus");
    fs::create_dir(&corpus).unwrap();
    fs::write(corpus.join("tri.edges"), TWO_TRIANGLES).unwrap();
    fs::write(corpus.join("ring.edges"), RING).unwrap();
    let out = netcentral(
        &[
            "batch", "corpus", "--measures", "degree,pc", "--out", "result",
        ],
        tmp.path(),
    );
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let correlations = fs::read_to_string(tmp.path().join("result/correlations.csv")).unwrap();
    // one data row per network
    assert_eq!(correlations.lines().count(), 1 + 2);

    let bad = netcentral(
        &["batch", "corpus", "--measures", "degree,bogus", "--out", "r2"],
        tmp.path(),
    );
    assert!(!bad.status.success());
    assert!(stderr(&bad).contains("bogus"));
}

#[test]
fn batch_exit_codes() {
    let tmp = tempfile::tempdir().unwrap();
    let corpus = tmp.path().join("corpus");
    fs::create_dir(&corpus).unwrap();

    // empty corpus: hard error
    let out = netcentral(&["batch", "corpus", "--out", "r0"], tmp.path());
    assert!(!out.status.success());
    assert!(stderr(&out).contains("no edge-list files"));

    // one broken network among good ones: success, listed in manifest
    fs::write(corpus.join("tri.edges"), TWO_TRIANGLES).unwrap();
    fs::write(corpus.join("bad.edges"), "a b c d\n").unwrap();
    let out = netcentral(&["batch", "corpus", "--out", "r1"], tmp.path());
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let manifest = fs::read_to_string(tmp.path().join("r1/manifest.json")).unwrap();
    assert!(manifest.contains("\"id\": \"bad\""));

    // every network broken: nonzero exit, manifest still written
    fs::remove_file(corpus.join("tri.edges")).unwrap();
    let out = netcentral(&["batch", "corpus", "--out", "r2"], tmp.path());
    assert!(!out.status.success());
    assert!(tmp.path().join("r2/manifest.json").is_file());
}

#[test]
fn batch_reruns_are_byte_identical() {
    let tmp = tempfile::tempdir().unwrap();
    let corpus = tmp.path().join("corpus");
    fs::create_dir(&corpus).unwrap();
    fs::write(corpus.join("tri.edges"), TWO_TRIANGLES).unwrap();
    fs::write(corpus.join("ring.edges"), RING).unwrap();

    let mut outputs = Vec::new();
    for run in ["r1", "r2"] {
        let out = netcentral(&["batch", "corpus", "--seed", "3", "--out", run], tmp.path());
        assert!(out.status.success());
        let mut tree = String::new();
        let mut names: Vec<_> = fs::read_dir(tmp.path().join(run))
            .unwrap()
            .map(|e| e.unwrap().file_name().into_string().unwrap())
            .collect();
        names.sort();
        for name in names {
            tree.push_str(&name);
            tree.push('\n');
            tree.push_str(&fs::read_to_string(tmp.path().join(run).join(&name)).unwrap());
        }
        outputs.push(tree);
    }
    assert_eq!(outputs[0], outputs[1]);
}
