use std::fs;

use serde_json::Value;

use super::*;

fn gencol(args: &[&str]) -> Outcome {
    match Cli::try_parse_from(std::iter::once("gencol").chain(args.iter().copied())) {
        Ok(cli) => execute(&cli),
        Err(e) => Outcome::error(e.exit_code() as u8, e.to_string()),
    }
}

fn json_of(out: &Outcome) -> Value {
    serde_json::from_str(&out.stdout)
        .unwrap_or_else(|e| panic!("bad json ({e}): {}\nstderr: {}", out.stdout, out.stderr))
}

fn code(out: &Outcome) -> u8 {
    out.code
}

#[test]
fn param_values() {
    let out = gencol(&["param", "--named", "fan9", "--f", "fan"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json_of(&out)["result"]["value"], 9);

    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("edgeless.txt");
    fs::write(&file, "# three isolated vertices\n0\n1\n2\n").unwrap();
    let out = gencol(&["param", "--graph", file.to_str().unwrap(), "--f", "star"]);
    assert_eq!(json_of(&out)["result"]["value"], 1);

    let out = gencol(&["param", "--graph6", "C~", "--f", "mad"]);
    let r = json_of(&out);
    assert_eq!((r["result"]["value"].clone(), r["result"]["exact"].clone()), (3.into(), "3".into()));
}

#[test]
fn solve_and_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("col.json");
    let out = gencol(&[
        "solve", "col", "--named", "C5", "--f", "star", "--p", "1", "--out",
        report.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let r: Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(r["result"]["value"], 3);
    assert_eq!(r["certificate"]["kind"], "col");

    let out = gencol(&["verify", report.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(json_of(&out)["result"]["valid"], true);

    // Claim col = 2 with the single island {0}: vertex 0 then has 2 outside neighbours.
    let mut tampered = r.clone();
    tampered["certificate"]["value"] = 2.into();
    tampered["certificate"]["islands"][0] = serde_json::json!([0]);
    let bad = dir.path().join("tampered.json");
    fs::write(&bad, tampered.to_string()).unwrap();
    let out = gencol(&["verify", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert_eq!(json_of(&out)["result"]["valid"], false);
}

#[test]
fn fan_join_choosability_and_islands() {
    let out = gencol(&["solve", "choosable", "--named", "fanjoin:2", "--s", "2", "--f", "fan", "--p", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json_of(&out)["result"]["choosable"], true);

    let out = gencol(&["solve", "island", "--named", "fanjoin:2", "--s", "2", "--f", "fan", "--p", "2"]);
    let r = json_of(&out);
    assert_eq!(r["result"]["island"], Value::Null);
    assert_eq!(r["certificate"]["kind"], "no_island");
}

#[test]
fn caps_and_usage_errors_have_their_exit_codes() {
    let out = gencol(&["solve", "choosable", "--named", "fanjoin:3", "--s", "2", "--f", "fan", "--p", "2"]);
    assert_eq!(code(&out), 3);
    assert!(out.stderr.contains("cap"));

    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("big.json");
    let out = gencol(&[
        "solve", "col", "--named", "pathpower:20:3", "--f", "star", "--p", "1", "--out",
        report.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let out = gencol(&["verify", report.to_str().unwrap()]);
    assert_eq!(code(&out), 3);
    assert!(out.stderr.contains("unverifiable at cap"));

    assert_eq!(code(&gencol(&["param", "--named", "C5", "--f", "girth"])), 2);
    assert_eq!(code(&gencol(&["param", "--f", "star"])), 2);
    assert_eq!(code(&gencol(&["frobnicate"])), 2);
}

#[test]
fn lemma_suites_through_the_cli() {
    let out = gencol(&["lemma", "estim", "--smax", "12"]);
    assert_eq!(code(&out), 0);
    let out = gencol(&["lemma", "path", "--t", "2", "--n", "24", "--trials", "1000", "--seed", "0"]);
    assert_eq!(code(&out), 0);
    let r = json_of(&out);
    let block = &r["result"]["checks"][0];
    assert_eq!(block["passed"], true);
    assert!(block["detail"]["max_mono_component"].as_u64().unwrap() <= 8);
    let out = gencol(&["lemma", "nofan", "--i", "2"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn question_search_reports_slack() {
    let out = gencol(&["question", "q1", "--max-n", "4", "--p-min", "1", "--p-max", "1"]);
    assert_eq!(code(&out), 0);
    let r = json_of(&out);
    assert_eq!(r["result"]["min_slack"], 0);
    assert_eq!(r["result"]["rows"].as_array().unwrap().len(), 1 + 2 + 4 + 11);

    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("c4.g6");
    fs::write(&file, "Cr\n").unwrap();
    let out = gencol(&["question", "q1", "--graph6-file", file.to_str().unwrap(), "--p-min", "2", "--p-max", "2"]);
    let r = json_of(&out);
    assert!(r["result"]["min_slack"].as_i64().unwrap() >= 0);
    let row = &r["result"]["rows"][0];
    assert_eq!((row["graph6"].clone(), row["lhs"].clone()), ("Cr".into(), 2.into()));

    let out = gencol(&["question", "q2", "--max-n", "4", "--format", "table"]);
    let text = out.stdout;
    assert!(text.contains("graph6\tlhs\tp\trhs\tskipped\tslack"));
}

#[test]
fn generate_named_and_random() {
    let out = gencol(&["generate", "petersen"]);
    assert_eq!(json_of(&out)["result"]["text"], "IheA@GUAo");
    let out = gencol(&["generate", "C5", "--emit", "edge-list"]);
    let text = json_of(&out)["result"]["text"].as_str().unwrap().to_string();
    assert_eq!(text.lines().count(), 5);
    let a = gencol(&["generate", "bipartite", "--n", "30", "--d", "5", "--seed", "4"]);
    let b = gencol(&["generate", "bipartite", "--n", "30", "--d", "5", "--seed", "4"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(code(&gencol(&["generate", "bipartite", "--n", "3", "--d", "4"])), 2);
}

#[test]
fn adversary_reports_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.txt");
    let gen = gencol(&["generate", "gnp", "--n", "40", "--prob", "1/4", "--seed", "2", "--emit", "edge-list"]);
    fs::write(&g, json_of(&gen)["result"]["text"].as_str().unwrap()).unwrap();
    let run = |p: &std::path::Path| gencol(&["adversary", "--graph", p.to_str().unwrap(), "--d", "4", "--seed", "11"]);
    let (a, b) = (run(&g), run(&g));
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let r = json_of(&a);
    assert_eq!(r["result"]["s_size"], 4);
    assert!(r["result"]["conditions"]["b"].is_boolean());
}

#[test]
fn timing_is_opt_in() {
    let plain = json_of(&gencol(&["lemma", "estim"]));
    assert_eq!(plain["elapsed_ms"], Value::Null);
    let timed = json_of(&gencol(&["lemma", "estim", "--timing"]));
    assert!(timed["elapsed_ms"].is_u64());
}
