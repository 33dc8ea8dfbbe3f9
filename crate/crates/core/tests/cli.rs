use std::path::PathBuf;

use cartqec::cli::run;
use cartqec::evalcode::{self, PointSet};
use cartqec::footprint::{self, ProductSpec};
use cartqec::report::{self, TableRecord};

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("cartqec").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

#[test]
fn params_example_one() {
    let (code, out, _) = cli(&["params", "--p", "3", "--r", "2,2,1", "--delta", "4"]);
    assert_eq!(code, 0);
    assert!(out.contains("[243,236,4]"), "{out}");
    assert!(out.contains("[[243,229,4]] *"), "{out}");
    assert!(out.contains("[[243,232,>=4]] *"), "{out}");
    assert!(out.contains("SINGLETON: slack=5"), "{out}");
}

#[test]
fn params_mds_example() {
    let (code, out, _) = cli(&["params", "--p", "3", "--r", "2,1", "--delta", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("[[27,23,3]] !"), "{out}");
    assert!(out.contains("SINGLETON: MDS"), "{out}");
}

#[test]
fn params_hypothesis_failures() {
    let (code, _, err) = cli(&["params", "--p", "2", "--r", "1,1", "--delta", "5"]);
    assert_eq!(code, 2);
    assert!(err.contains("empty"), "{err}");
    let (code, out, err) = cli(&["params", "--p", "2", "--r", "1,1", "--delta", "4"]);
    assert_eq!(code, 2);
    assert!(out.contains("[4,1,4]"), "{out}");
    assert!(err.contains("does not contain its Euclidean dual"), "{err}");
    let (code, _, err) = cli(&["params", "--p", "2", "--r", "1,1", "--delta", "6"]);
    assert_eq!(code, 2);
    assert!(err.contains("outside"), "{err}");
    assert_eq!(cli(&["params", "--p", "2", "--r", "1,1", "--delta", "1"]).0, 2);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(cli(&["params", "--p", "3", "--r", "2,1"]).0, 1);
    assert_eq!(cli(&["params", "--p", "3", "--r", "2,1", "--delta", "3..5"]).0, 1);
    assert_eq!(cli(&["table", "--p", "3", "--r", "2,1", "--delta", "3", "--format", "xml"]).0, 1);
    assert_eq!(cli(&["table", "--p", "6", "--r", "1", "--delta", "3"]).0, 1);
    assert_eq!(cli(&["table", "--p", "2", "--r", "2", "--q", "8", "--delta", "3"]).0, 1);
    assert_eq!(cli(&["verify", "--p", "3", "--r", "2,1", "--delta", "3..4", "--dump", "x.txt"]).0, 1);
}

#[test]
fn table_rows_match_examples() {
    let (code, out, _) = cli(&["table", "--p", "2", "--r", "3,3", "--delta", "3..8", "--q", "8"]);
    assert_eq!(code, 0);
    let row7 = out.lines().find(|l| l.trim_start().starts_with("7 ")).unwrap();
    let fields: Vec<&str> = row7.split_whitespace().collect();
    assert_eq!(fields, ["7", "[[64,36,7]]", "[[64,40,7]]", "2", "4", "4"]);

    let (_, out, _) = cli(&["table", "--p", "5", "--r", "1,1,1,1", "--delta", "5"]);
    let fields: Vec<&str> = out.lines().last().unwrap().split_whitespace().collect();
    assert_eq!(fields, ["5", "[[625,587,5]]", "[[625,597,5]]", "4", "10", "10"]);

    let (_, out, _) = cli(&["table", "--p", "2", "--r", "3,3,3,1", "--delta", "9", "--q", "8"]);
    let fields: Vec<&str> = out.lines().last().unwrap().split_whitespace().collect();
    assert_eq!(fields, ["9", "[[1024,922,9]]", "[[1024,938,9]]", "3", "9", "16"]);
}

#[test]
fn table_skips_inadmissible_delta() {
    let (code, out, _) = cli(&["table", "--p", "3", "--r", "2,1", "--delta", "3..7"]);
    assert_eq!(code, 0);
    assert!(out.contains("# delta=6 skipped"), "{out}");
    let (code, out, err) = cli(&["table", "--p", "3", "--r", "2,1", "--delta", "3..7", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 5);
    assert!(err.contains("delta=6 skipped"));
    assert_eq!(cli(&["table", "--p", "3", "--r", "2,1", "--delta", "3..29"]).0, 2);
}

#[test]
fn golden_tables() {
    let configs = [
        ("table1.csv", ["--p", "2", "--r", "3,3", "--q", "8", "--delta", "3..8"]),
        ("table2.csv", ["--p", "5", "--r", "1,1,1,1", "--q", "5", "--delta", "3..6"]),
        ("table3.csv", ["--p", "2", "--r", "4,4,2", "--q", "16", "--delta", "3..17"]),
        ("table4.csv", ["--p", "2", "--r", "3,3,3,1", "--q", "8", "--delta", "3..9"]),
    ];
    for (name, args) in configs {
        let mut full = vec!["table"];
        full.extend(args);
        full.extend(["--format", "csv"]);
        let (code, out, _) = cli(&full);
        assert_eq!(code, 0);
        let expected = std::fs::read_to_string(golden(name)).unwrap();
        let parse = |s: &str| -> Vec<TableRecord> {
            csv::Reader::from_reader(s.as_bytes()).deserialize().collect::<Result<_, _>>().unwrap()
        };
        assert_eq!(parse(&out), parse(&expected), "{name}");
        assert_eq!(out, expected, "{name}");
    }
}

#[test]
fn csv_round_trip_reproduces_rows() {
    let spec = ProductSpec::new(2, &[4, 4, 2]).unwrap();
    let (_, out, _) = cli(&["table", "--p", "2", "--r", "4,4,2", "--delta", "3..17", "--format", "csv"]);
    assert_eq!(out.lines().next().unwrap(), report::CSV_HEADER);
    let parsed: Vec<TableRecord> = csv::Reader::from_reader(out.as_bytes())
        .deserialize()
        .collect::<Result<_, _>>()
        .unwrap();
    let direct: Vec<TableRecord> = report::table(&spec, 3, 17)
        .iter()
        .map(|(_, r)| TableRecord::from(r.as_ref().unwrap()))
        .collect();
    assert_eq!(parsed, direct);
}

#[test]
fn json_rows_use_csv_field_names() {
    let (code, out, _) = cli(&["table", "--p", "2", "--r", "3,3", "--delta", "3..8", "--format", "json"]);
    assert_eq!(code, 0);
    let header: Vec<&str> = report::CSV_HEADER.split(',').collect();
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 6);
    for line in lines {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(|k| k.as_str()).collect();
        let mut want = header.clone();
        want.sort_unstable();
        let mut got = keys.clone();
        got.sort_unstable();
        assert_eq!(got, want);
        let rec: TableRecord = serde_json::from_value(v).unwrap();
        assert_eq!(rec.n, 64);
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["table", "--p", "2", "--r", "4,4,2", "--delta", "3..17"][..],
        &["params", "--p", "3", "--r", "2,2,1", "--delta", "7", "--format", "json"],
        &["verify", "--p", "2", "--r", "1,1,1"],
        &["tau", "--p", "3", "--r", "2,1"],
    ] {
        let a = cli(args);
        let b = cli(args);
        assert_eq!(a, b);
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    let p = path.to_str().unwrap();
    let (code, out, _) = cli(&["table", "--p", "2", "--r", "3,3", "--delta", "3..8", "--format", "csv", "--out", p]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), std::fs::read_to_string(golden("table1.csv")).unwrap());
}

#[test]
fn grid_outputs() {
    let (code, out, _) = cli(&["grid", "--p", "3", "--r", "2,1"]);
    assert_eq!(code, 0);
    assert_eq!(out, " 9  8  7  6  5  4  3  2  1\n18 16 14 12 10  8  6  4  2\n27 24 21 18 15 12  9  6  3\n");
    assert_eq!(cli(&["grid", "--p", "2", "--r", "1"]).1, "2 1\n");
    let (_, out, _) = cli(&["grid", "--p", "2", "--r", "1,1,1"]);
    assert_eq!(out.matches("# a3=").count(), 2);
    assert_eq!(cli(&["grid", "--p", "2", "--r", "1,1,1,1"]).0, 2);
    let (_, out, _) = cli(&["grid", "--p", "2", "--r", "1,1", "--format", "csv"]);
    assert_eq!(out, "a1,a2,sigma\n0,0,4\n0,1,2\n1,0,2\n1,1,1\n");
}

#[test]
fn tau_outputs() {
    let (code, out, _) = cli(&["tau", "--p", "3", "--r", "2,2,1", "--s", "6"]);
    assert_eq!(code, 0);
    assert_eq!(out, "s=6 tau=8 calls=9 K=2 bound=4\n");
    let (_, out, _) = cli(&["tau", "--p", "2", "--r", "4,4,2", "--format", "csv"]);
    let total: u64 = out.lines().skip(1).map(|l| l.split(',').nth(1).unwrap().parse::<u64>().unwrap()).sum();
    assert_eq!(total, 1024);
    let (_, out, _) = cli(&["tau", "--p", "2", "--r", "4,4,2", "--s", "3..4"]);
    assert_eq!(out, "s=3 tau=3 calls=3 K=3 bound=3*\ns=4 tau=6 calls=6 K=3 bound=6\n");
}

#[test]
fn verify_examples() {
    let (code, out, _) = cli(&["verify", "--p", "3", "--r", "2,1", "--delta", "4", "--level", "matrix"]);
    assert_eq!(code, 0, "{out}");
    assert!(!out.contains("FAIL"));
    let (code, out, _) = cli(&["verify", "--p", "2", "--r", "2,1", "--delta", "3", "--level", "matrix"]);
    assert_eq!(code, 0);
    assert!(out.contains("dist_brute=3 dist_designed=3"), "{out}");
    let (code, out, _) = cli(&["verify", "--p", "3", "--r", "2,2,1", "--delta", "4", "--level", "matrix"]);
    assert_eq!(code, 0);
    assert!(out.contains("PASS delta=4 rank: rank=236"), "{out}");
}

#[test]
fn verify_sweep_and_levels() {
    let (code, out, _) = cli(&["verify", "--p", "2", "--r", "2,2"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.matches("PASS delta=").count() + out.matches("SKIP delta=").count(), 16 * 5);
    let (code, out, _) = cli(&["verify", "--p", "2", "--r", "2,2", "--level", "none", "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("delta,check,status,detail\n"));
    assert!(!out.contains("FAIL"));
}

#[test]
fn matrix_cap_env_var() {
    // the only test touching this variable
    std::env::set_var(cartqec::cli::MATRIX_CAP_ENV, "16");
    let (code, _, err) = cli(&["verify", "--p", "3", "--r", "2,1", "--delta", "4"]);
    std::env::remove_var(cartqec::cli::MATRIX_CAP_ENV);
    assert_eq!(code, 2);
    assert!(err.contains("cap"), "{err}");
}

#[test]
fn golden_matrix_dumps() {
    for (name, p, r, delta) in [("dump_p2_r2-1_delta3.txt", 2, &[2u32, 1][..], 3), ("dump_p3_r2-1_delta4.txt", 3, &[2, 1], 4)] {
        let spec = ProductSpec::new(p, r).unwrap();
        let points = PointSet::new(&spec).unwrap();
        let l = footprint::improved_defining_set(&spec, delta).unwrap();
        let code = evalcode::EvalCode::new(&points, &l).unwrap();
        let mut buf = Vec::new();
        evalcode::write_matrix_dump(&mut buf, points.field().q(), code.generator()).unwrap();
        let expected = std::fs::read_to_string(golden(name)).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), expected, "{name}");
        let (q, m) = evalcode::read_matrix_dump(&expected).unwrap();
        assert_eq!((q, m.rows(), m.cols()), (points.field().q(), l.len(), points.len()));

        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("g.txt");
        let (rc, _, _) = cli(&[
            "verify",
            "--p",
            &p.to_string(),
            "--r",
            &r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","),
            "--delta",
            &delta.to_string(),
            "--dump",
            path.to_str().unwrap(),
        ]);
        assert_eq!(rc, 0);
        assert_eq!(std::fs::read_to_string(&path).unwrap(), expected);
    }
}
