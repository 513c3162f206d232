use cubiq_cli::{run, Outcome};
use serde_json::Value;

fn cubiq(args: &str) -> Outcome {
    run(std::iter::once("cubiq").chain(args.split_whitespace()))
}

fn json(args: &str) -> Value {
    let out = cubiq(args);
    assert_eq!(out.code, 0, "{args}: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{args}: {e}: {}", out.stdout))
}

#[test]
fn twinless_vector() {
    let out = cubiq("twins 2,2,3");
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "no twins\n");
}

#[test]
fn twins_with_negative_coordinates() {
    let out = cubiq("twins 24,-30,27 --verify");
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.lines().any(|l| l == "28,35,14"));
    assert!(out.stdout.ends_with("match: true\n"));
}

#[test]
fn count_twins_verified() {
    let v = json("count-twins 9 --verify --json");
    assert_eq!(v["result"], 120);
    assert_eq!(v["oracle"], 120);
    assert_eq!(v["match"], true);
}

#[test]
fn param_rows() {
    let out = cubiq("param 1 2 2 3");
    assert_eq!(out.code, 0);
    let rows: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(rows.len(), 4);
    assert!(rows.contains(&"1 1 0 1"));
    let v = json("param -1 0 0 1 --verify --json");
    assert_eq!(v["match"], true);
}

#[test]
fn verify_only_appends() {
    for cmd in [
        "twins 1,2,2",
        "extend 1,2,2 2,1,-2",
        "lattice 2,2,1",
        "param 3 0 4 5",
        "count-twins 45",
        "count-vectors 25",
        "twin-complete 17",
        "pyth 9",
        "explore --dim 5 --max 12",
    ] {
        let plain = json(&format!("{cmd} --json"));
        let checked = json(&format!("{cmd} --json --verify"));
        assert_eq!(plain["result"], checked["result"], "{cmd}");
        assert_eq!(plain["input"], checked["input"], "{cmd}");
        assert!(plain.get("oracle").is_none(), "{cmd}");
        assert_eq!(checked["match"], true, "{cmd}: {checked}");
    }
}

#[test]
fn json_shape() {
    let v = json("twin-complete 10 --json");
    assert_eq!(v["command"], "twin-complete");
    assert_eq!(v["input"], 10);
    assert_eq!(v["result"]["twin_complete"], true);
    let v = json("lattice 2,2,1 --json");
    assert_eq!(v["result"]["edge"], 3);
    let v = json("census --check twin-counts --max 30 --json");
    assert_eq!(v["result"][0]["passed"], true);
}

#[test]
fn census_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("jacobi.csv");
    let out = cubiq(&format!("census --check jacobi --max 3 --csv {}", path.display()));
    assert_eq!(out.code, 0, "{}", out.stderr);
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(
        text,
        "check_name,input,formula,oracle,match\njacobi,1,8,8,true\njacobi,2,24,24,true\njacobi,3,32,32,true\n"
    );
}

#[test]
fn exit_codes() {
    assert_eq!(cubiq("frobnicate").code, 2);
    assert_eq!(cubiq("twins").code, 2);
    assert_eq!(cubiq("count-twins 9 --shout").code, 2);
    assert_eq!(cubiq("twins 1,2").code, 2);
    assert_eq!(cubiq("census --check nope").code, 2);
    assert_eq!(cubiq("--help").code, 0);

    let out = cubiq("extend 24,-30,27 28,35,14");
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("non-integer length"));
    assert_eq!(cubiq("param 2 1 2 3").code, 1);
    assert_eq!(cubiq("pyth 4").code, 1);
    assert_eq!(cubiq("count-twins 0").code, 1);
    assert_eq!(cubiq("explore --dim 4 --max 10").code, 1);
    assert_eq!(cubiq("census --check jacobi --max 100000").code, 1);
}

/// The sessions shown in the guide are replayed verbatim.
#[test]
fn guide_transcripts() {
    let guide = include_str!("../../../book/src/verification.md");
    let mut in_text = false;
    let mut sessions: Vec<(String, String)> = Vec::new();
    for line in guide.lines() {
        if line.starts_with("```") {
            in_text = line == "```text";
            continue;
        }
        if !in_text {
            continue;
        }
        if let Some(cmd) = line.strip_prefix("$ cubiq ") {
            sessions.push((cmd.to_string(), String::new()));
        } else if let Some((_, out)) = sessions.last_mut() {
            out.push_str(line);
            out.push('\n');
        }
    }
    assert!(sessions.len() >= 6);
    for (cmd, expected) in sessions {
        let out = cubiq(&cmd);
        assert_eq!(out.code, 0, "{cmd}: {}", out.stderr);
        assert_eq!(out.stdout, expected, "{cmd}");
    }
}
