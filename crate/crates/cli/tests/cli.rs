use std::process::{Command, Output};

fn mexkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mexkit")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = mexkit(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

/// `(n, values)` rows of a delimited table with a header line.
fn parse_delimited(text: &str, delimiter: u8) -> Vec<(String, Vec<String>)> {
    let mut r = csv::ReaderBuilder::new().delimiter(delimiter).from_reader(text.as_bytes());
    r.records()
        .map(|rec| {
            let rec = rec.unwrap();
            (rec[0].to_string(), rec.iter().skip(1).map(str::to_string).collect())
        })
        .collect()
}

fn parse_json(text: &str) -> Vec<(String, Vec<String>)> {
    let v: serde_json::Value = serde_json::from_str(text).unwrap();
    v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|row| {
            let n = row["n"].as_str().expect("n is a string").to_string();
            let values = row["values"]
                .as_array()
                .unwrap()
                .iter()
                .map(|x| x.as_str().expect("values are strings").to_string())
                .collect();
            (n, values)
        })
        .collect()
}

fn values_of(rows: &[(String, Vec<String>)]) -> Vec<String> {
    rows.iter().flat_map(|(_, v)| v.iter().cloned()).collect()
}

#[test]
fn composition_table_matches_published_rows() {
    let text = stdout(&["table", "--structure", "ic", "--max-n", "21", "--max-m", "7", "--empty-at-zero"]);
    let rows = parse_delimited(&text, b'\t');
    assert_eq!(rows.len(), 22);
    assert_eq!(rows[0].1, ["1", "0", "0", "0", "0", "0", "0", "0"]);
    assert_eq!(rows[1].1, ["0", "0", "1", "0", "0", "0", "0", "0"]);
    assert_eq!(rows[10].1, ["0", "34", "105", "197", "152", "24", "0", "0"]);
    assert_eq!(rows[21].1, ["0", "6765", "54810", "233505", "414718", "283938", "54120", "720"]);
}

#[test]
fn set_partition_row() {
    let rows = parse_delimited(&stdout(&["table", "--structure", "sp", "--max-n", "10", "--max-m", "3"]), b'\t');
    assert_eq!(rows[5], ("5".to_string(), vec!["11".into(), "16".into(), "25".into()]));
}

#[test]
fn empty_table_row() {
    let rows = parse_delimited(&stdout(&["table", "--structure", "ip", "--max-n", "0", "--max-m", "3"]), b'\t');
    assert_eq!(rows, vec![("0".to_string(), vec!["1".into(), "0".into(), "0".into()])]);
}

#[test]
fn planar_tree_sequence() {
    let text = stdout(&["sequence", "--structure", "pt", "--m", "2", "--max-n", "15", "--format", "bfile"]);
    let expected = [0, 1, 1, 1, 5, 16, 42, 120, 359, 1078, 3278, 10077, 31209, 97449, 306568];
    let lines: Vec<String> = expected.iter().enumerate().map(|(i, v)| format!("{} {v}", i + 1)).collect();
    assert_eq!(text, lines.join("\n") + "\n");
}

#[test]
fn avoidance_sequence() {
    let rows = parse_delimited(&stdout(&["gt", "--structure", "dp", "--avoid", "2", "--max-n", "6", "--format", "csv"]), b',');
    assert_eq!(values_of(&rows), ["1", "1", "1", "2", "5", "14", "42"]);
}

#[test]
fn inversion_sequence_mex_one_starts_at_one() {
    let text = stdout(&["sequence", "--structure", "is", "--m", "1", "--max-n", "5", "--format", "bfile"]);
    assert_eq!(text, "1 1\n2 1\n3 2\n4 6\n5 24\n");
    let text = stdout(&["sequence", "--structure", "is", "--m", "1", "--max-n", "5", "--format", "bfile", "--offset", "0"]);
    // the empty sequence has mex 1
    assert!(text.starts_with("0 1\n1 1\n"));
}

#[test]
fn methods_agree() {
    let base = ["table", "--structure", "dp", "--max-n", "9", "--max-m", "4", "--format", "csv", "--method"];
    let outputs: Vec<String> = ["engine", "closed", "brute", "cross"]
        .iter()
        .map(|m| {
            let mut args = base.to_vec();
            args.push(m);
            stdout(&args)
        })
        .collect();
    assert!(outputs.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn formats_encode_the_same_numbers() {
    let base = ["table", "--structure", "is", "--max-n", "8", "--max-m", "5", "--format"];
    let run = |f: &str| {
        let mut args = base.to_vec();
        args.push(f);
        stdout(&args)
    };
    let tsv = parse_delimited(&run("tsv"), b'\t');
    let csv = parse_delimited(&run("csv"), b',');
    let json = parse_json(&run("json"));
    assert_eq!(tsv, csv);
    assert_eq!(tsv, json);
    let bfile: Vec<String> = run("bfile")
        .lines()
        .enumerate()
        .map(|(i, line)| {
            let (idx, v) = line.split_once(' ').unwrap();
            assert_eq!(idx, i.to_string());
            v.to_string()
        })
        .collect();
    assert_eq!(bfile, values_of(&tsv));
}

#[test]
fn large_values_survive_json() {
    let text = stdout(&["gt", "--structure", "is", "--max-n", "25", "--format", "json"]);
    let rows = parse_json(&text);
    assert_eq!(rows[25].1[0], "15511210043330985984000000");
}

#[test]
fn output_is_deterministic() {
    let args = ["table", "--structure", "pt", "--max-n", "12", "--max-m", "5", "--format", "json"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("seq.txt");
    let out = mexkit(&["sequence", "--structure", "ic", "--m", "2", "--max-n", "11", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let rows = parse_delimited(&std::fs::read_to_string(&path).unwrap(), b'\t');
    assert_eq!(values_of(&rows), ["0", "1", "1", "1", "3", "6", "10", "18", "33", "59", "105", "187"]);
}

#[test]
fn verify_reports() {
    let text = stdout(&["verify", "--structure", "ic", "--max-n", "16", "--max-m", "6"]);
    assert!(!text.contains("FAIL"), "{text}");
    let text = stdout(&["verify", "--structure", "pt", "--max-n", "12", "--max-m", "3"]);
    assert!(text.contains("SKIPPED-KNOWN   closed form vs engine, m=2, n=1"), "{text}");
    let text = stdout(&["verify", "--structure", "is", "--max-n", "8", "--max-m", "8"]);
    assert!(text.contains("CONJECTURE-PASS"), "{text}");
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        vec!["table", "--structure", "xx"],
        vec!["table"],
        vec!["gt", "--structure", "ic", "--avoid", "1,a"],
        vec!["gt", "--structure", "ic", "--avoid", "0"],
        vec!["sequence", "--structure", "ic", "--m", "0"],
        vec!["sequence", "--structure", "ic", "--m", "13"],
        vec!["table", "--structure", "is", "--max-n", "12", "--method", "brute"],
        vec!["table", "--structure", "ic", "--max-n", "5", "--offset", "6"],
        vec!["verify", "--structure", "sp", "--max-n", "30"],
        vec!["frobnicate"],
    ] {
        let out = mexkit(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn help_exits_cleanly() {
    assert_eq!(mexkit(&["--help"]).status.code(), Some(0));
}
