use std::collections::BTreeMap;
use std::process::{Command, Output};

use serde_json::Value;

fn gsp4count(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gsp4count"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// `(k, p, type, value)` tuples with multiplicity.
type Multiset = BTreeMap<(String, String, String, String), usize>;

fn csv_cells(text: &str) -> Multiset {
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("k,p,type,value,route"));
    let mut m = Multiset::new();
    for l in lines {
        let f: Vec<&str> = l.split(',').collect();
        assert_eq!(f.len(), 5, "{l}");
        *m.entry((f[0].into(), f[1].into(), f[2].into(), f[3].into())).or_default() += 1;
    }
    m
}

fn json_cells(text: &str) -> Multiset {
    let v: Value = serde_json::from_str(text).unwrap();
    let mut m = Multiset::new();
    for r in v.as_array().unwrap() {
        let s = |key: &str| match &r[key] {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        *m.entry((s("k"), s("p"), s("type"), s("value"))).or_default() += 1;
    }
    m
}

#[test]
fn scalar_count_json() {
    let o = gsp4count(&["count", "--p", "2", "--k", "19", "--type", "IIa", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        r#"{"k":19,"p":2,"type":"IIa","value":1,"route":"series"}"#
    );
}

#[test]
fn unknown_scalar_exits_three() {
    let o = gsp4count(&["count", "--p", "11", "--k", "2", "--type", "Va"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("2,11,Va,unknown,"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["nonsense"][..],
        &["count", "--p", "2"],
        &["count", "--p", "9", "--k", "4", "--type", "I"],
        &["dims", "--group", "sideways", "--p", "5", "--kmax", "3"],
        &["table", "--type", "IIa", "--format", "xml"],
    ] {
        let o = gsp4count(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn csv_and_json_agree() {
    let base = ["table", "--type", "IIIa+VIa/b", "--primes", "2,5,13", "--kmin", "1", "--kmax", "24"];
    let csv = gsp4count(&base);
    let mut with_json = base.to_vec();
    with_json.extend(["--format", "json"]);
    let json = gsp4count(&with_json);
    let c = csv_cells(&stdout(&csv));
    assert_eq!(c, json_cells(&stdout(&json)));
    assert!(c.keys().any(|k| k.3 == "unknown"));
    assert_eq!(c.values().sum::<usize>(), 3 * 24);
}

#[test]
fn output_is_deterministic_and_ordered() {
    let args = ["table", "--suite", "appendix-b"];
    let a = stdout(&gsp4count(&args));
    let b = stdout(&gsp4count(&args));
    assert_eq!(a, b);
    let cells = csv_cells(&a);
    assert_eq!(cells.values().sum::<usize>(), 928);
    // ascending p then k within each type
    let mut last: Option<(String, u64, u32)> = None;
    for l in a.lines().skip(1) {
        let f: Vec<&str> = l.split(',').collect();
        let key = (f[2].to_string(), f[1].parse().unwrap(), f[0].parse().unwrap());
        if let Some(prev) = &last {
            if prev.0 == key.0 {
                assert!((prev.1, prev.2) < (key.1, key.2), "{l}");
            }
        }
        last = Some(key);
    }
}

#[test]
fn appendix_markdown_layout() {
    let o = gsp4count(&["table", "--suite", "appendix-b", "--type", "Va", "--format", "md"]);
    let text = stdout(&o);
    let headers: Vec<&str> = text.lines().filter(|l| l.starts_with("| p \\ k")).collect();
    assert_eq!(headers.len(), 2);
    assert!(headers[0].ends_with("| 29 |"));
    assert!(headers[1].ends_with("| 30 |"));
    // p = 2, even block: a single 1 at k = 30
    let row = text.lines().filter(|l| l.starts_with("| 2 |")).nth(1).unwrap();
    assert!(row.ends_with("| 0 | 1 |"), "{row}");
}

#[test]
fn plancherel_report() {
    let o = gsp4count(&["plancherel", "--q", "2"]);
    assert_eq!(
        stdout(&o),
        "type,mass\nI,1\nII,3\nIII,4\nIV,7\nV,1\nVI,0\nsystem,ok\n"
    );
    let j = gsp4count(&["plancherel", "--q", "49", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&j)).unwrap();
    assert_eq!(v["system"], "ok");
    assert_eq!(v["masses"][3]["mass"], 48 * (49 * 49 * 49 - 1));
    assert_eq!(gsp4count(&["plancherel", "--q", "1"]).status.code(), Some(2));
}

#[test]
fn dims_and_newforms() {
    let o = gsp4count(&["dims", "--group", "full", "--p", "2", "--kmax", "12"]);
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines[0], "k,p,group,value");
    assert_eq!(lines[10], "10,2,full,1");
    let o = gsp4count(&["newforms", "--group", "borel", "--p", "11", "--kmin", "2", "--kmax", "3"]);
    assert_eq!(stdout(&o), "k,p,group,value\n2,11,borel,unknown\n3,11,borel,2\n");
    let o = gsp4count(&["newforms", "--group", "full", "--p", "11", "--kmax", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn series_dump_and_out_file() {
    let o = gsp4count(&["series", "--p", "3", "--type", "Vb", "--upto", "8", "--fraction"]);
    assert_eq!(stdout(&o).trim(), "(6:1) / (0:1 2:-1 6:-1 8:1)");
    let dir = std::env::temp_dir().join(format!("gsp4count-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("series.csv");
    let o = gsp4count(&[
        "series", "--p", "3", "--type", "Vb", "--upto", "8", "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.ends_with("6,3,Vb,1,series\n7,3,Vb,0,series\n8,3,Vb,1,series\n"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn check_suites_pass() {
    let o = gsp4count(&["check", "--suite", "plancherel"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("plancherel,166,0,ok"));
    let o = gsp4count(&["check", "--suite", "appendix", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["cases"], 928);
    assert_eq!(v[0]["failures"].as_array().unwrap().len(), 0);
}
