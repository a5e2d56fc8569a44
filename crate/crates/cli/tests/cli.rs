use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use palrich_cli::commands::{self, Options};
use palrich_cli::input::{parse_input, parse_morphism, parse_spec};
use palrich_cli::report::{
    AnalysisReport, ClassifyReport, DefectValue, EnumerateReport, Envelope, FixedPointClassDto, PeriodicReport, QDto,
    SpecialReport,
};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;

fn palrich(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_palrich")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = palrich(&all);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_str(stdout(&out).lines().next().unwrap()).unwrap()
}

fn round_trip<T: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug>(env: &Envelope<T>) {
    let text = serde_json::to_string(env).unwrap();
    let back: Envelope<T> = serde_json::from_str(&text).unwrap();
    assert_eq!(&back, env, "{text}");
}

#[test]
fn reports_round_trip_through_json() {
    let opts = Options { jobs: 1, ..Options::default() };
    for s in ["periodic:abcabcacbacb", "abbabaabba", "morphic:a=ab,b=a;seed=a", "evper:c|ab", ""] {
        let input = parse_input(s).unwrap();
        round_trip(&commands::analyze(&input, &opts, Some(5)).unwrap());
        round_trip(&commands::balance(&input, &opts).unwrap());
        round_trip(&commands::returns(&input, None, &opts).unwrap());
    }
    for u in ["aacbccbcacbc", "abcbac", "aabbaabab"] {
        round_trip(&Envelope::new(None, commands::periodic_verdict(&u.into()).unwrap()));
    }
    for m in ["a=baa,b=baba", "a=aba,b=ab", "a=ab,b=ba", "a=aabbaa,b=bab"] {
        round_trip(&commands::classify_p(&parse_morphism(m).unwrap()).unwrap());
    }
    let m = parse_morphism("a=aabbaa,b=bab").unwrap();
    round_trip(&commands::fixed_point_class(&m, b'a').unwrap());
    round_trip(&commands::special_test(&m, &parse_spec("morphic:a=ab,b=a;seed=a").unwrap(), None).unwrap());
    round_trip(&commands::preserves(&parse_morphism("a=aba,b=bcb,c=cbc").unwrap(), 4).unwrap());
    round_trip(&commands::enumerate(Some(commands::Predicate::BalancedWr), None, 3, 8, &opts).unwrap());
}

#[test]
fn defect_is_a_number_or_infinite() {
    let v = json(&["periodic", "aacbccbcacbc"]);
    assert_eq!(v["defect"], "infinite");
    let r: Envelope<PeriodicReport> = serde_json::from_value(v).unwrap();
    assert!(matches!(r.body.defect, DefectValue::Infinite(_)));
    let v = json(&["periodic", "abcbac"]);
    assert_eq!(v["defect"], 1);
    assert_eq!(v["primitive_root"], "abcbac");
    assert_eq!(v["power_almost_rich"], true);
}

#[test]
fn analyze_examples() {
    let v = json(&["analyze", "periodic:aabbaabab"]);
    assert_eq!(v["is_rich"], true);
    assert_eq!(v["periodic"]["power_rich"], true);
    assert_eq!(v["window"], 27);
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));

    let r: Envelope<AnalysisReport> = serde_json::from_value(json(&["analyze", "abbabaabba"])).unwrap();
    assert!(!r.body.is_rich && r.body.defect >= 1);
    assert_eq!(r.window, None);

    let r: Envelope<AnalysisReport> =
        serde_json::from_value(json(&["--oracle", "analyze", "periodic:abcabcacbacb"])).unwrap();
    assert_eq!(r.body.oddities.len(), 3);
    assert_eq!(r.body.defect, 4);
    assert_eq!(r.body.defective_positions, [4, 5, 6, 7]);
    assert!(r.body.oracle_checked);

    let v = json(&["--window", "20", "analyze", "periodic:aabacabaac"]);
    assert_eq!(v["window"], 20);
    assert_eq!(v["length"], 20);
    assert_eq!(v["defective_positions"], serde_json::json!([10, 11]));
}

#[test]
fn complexity_rows_are_csv() {
    let out = stdout(&palrich(&["analyze", "--complexity", "3", "abaab"]));
    let csv: Vec<&str> = out.lines().skip_while(|l| *l != "n,P,C").collect();
    assert_eq!(csv, ["n,P,C", "0,1,1", "1,2,2", "2,1,3", "3,1,3"]);
    let v = json(&["analyze", "--complexity", "1", "ab"]);
    assert_eq!(v["complexity"][1], serde_json::json!({"n": 1, "P": 2, "C": 2}));
}

#[test]
fn generate_examples() {
    let gen = |args: &[&str]| stdout(&palrich(args)).trim().to_string();
    assert_eq!(gen(&["generate", "thue-morse", "10"]), "abbabaabba");
    assert_eq!(gen(&["generate", "fraenkel", "3"]), "1213121");
    assert_eq!(gen(&["generate", "episturmian", "abc", "7"]), "abacaba");
    assert_eq!(gen(&["generate", "episturmian", "ab"]), "aba");
    assert_eq!(gen(&["generate", "fibonacci", "8"]), "abaababa");
    assert_eq!(gen(&["generate", "wr-family", "1", "3", "1"]), "1213");
    assert_eq!(gen(&["generate", "wr-family", "2", "3", "1"]), "1211213");
    assert_eq!(gen(&["generate", "fixed-point", "a=aba,b=bb", "a", "8"]), "ababbaba");
    assert_eq!(gen(&["generate", "prefix", "evper:c|ab", "4"]), "caba");
    let fib = gen(&["generate", "episturmian", "ab", "30"]);
    assert_eq!(fib, gen(&["generate", "fibonacci", "30"]));
}

#[test]
fn enumerate_examples() {
    let v = json(&["enumerate", "rich", "2", "5"]);
    let hits: Vec<u64> = v["rows"].as_array().unwrap().iter().map(|r| r["hits"].as_u64().unwrap()).collect();
    assert_eq!(hits, [1, 2, 4, 8, 16, 32]);
    let v = json(&["enumerate", "rich", "2", "8"]);
    assert_eq!(v["rows"][8]["hits"], 252);

    let out = palrich(&["--jobs", "4", "enumerate", "counterexample-hunt", "theorem-p1", "3", "8"]);
    assert!(out.status.success());
    assert!(stdout(&out).ends_with("none found\n"));

    let r: Envelope<EnumerateReport> =
        serde_json::from_value(json(&["--jobs", "3", "enumerate", "balanced-wr", "3", "10"])).unwrap();
    assert!(r.body.unmatched.is_empty());
    assert!(!r.body.matches.is_empty());
    assert!(r.body.matches.iter().any(|m| m.family == "family2(k=3, j=1)"));
}

#[test]
fn jobs_do_not_change_results() {
    let one = stdout(&palrich(&["--json", "enumerate", "weakly-rich-period", "3", "7"]));
    let many = stdout(&palrich(&["--json", "--jobs", "5", "enumerate", "weakly-rich-period", "3", "7"]));
    assert_eq!(one, many);
}

#[test]
fn morphism_examples() {
    let r: Envelope<ClassifyReport> =
        serde_json::from_value(json(&["morphism", "classify-p", "a=baa,b=baba"])).unwrap();
    let cert = r.body.certificate.unwrap();
    assert!(r.body.class_p && r.body.standard);
    assert_eq!(cert.p, "b");
    assert_eq!(cert.q["a"], QDto::Appended("aa".into()));

    let v = json(&["morphism", "classify-p", "a=aba,b=ab"]);
    assert_eq!(v["p"], "aba");
    assert_eq!(v["q"]["b"], serde_json::json!({"trimmed": 1}));
    let v = json(&["morphism", "classify-p", "a=ab,b=ba"]);
    assert_eq!(v["class_p"], false);
    assert!(v.get("p").is_none());

    let fixed = |m: &str| -> SpecialReport {
        let env: Envelope<SpecialReport> =
            serde_json::from_value(json(&["morphism", "fixed-point-class", m, "a"])).unwrap();
        env.body
    };
    let r = fixed("a=aabbaa,b=bab");
    assert_eq!(r.class, FixedPointClassDto::InfiniteDefect);
    assert_eq!(r.image, "aabbaaaabbaababbab");
    assert_eq!(fixed("a=abb,b=ac,c=a").class, FixedPointClassDto::Rich);
    assert_eq!(fixed("a=aba,b=bcb,c=cac").class, FixedPointClassDto::InfiniteDefect);

    let v = json(&["morphism", "special-test", "a=aabbaa,b=bab", "morphic:a=ab,b=a;seed=a"]);
    assert_eq!(v["image"], "aabbaababaabbaaaabbaa");
    assert_eq!(v["rich"], true);

    assert_eq!(stdout(&palrich(&["morphism", "apply", "a=ab,b=a", "aab"])), "ababa\n");
    assert_eq!(stdout(&palrich(&["morphism", "iterate", "a=ab,b=ba", "a", "3"])), "abbabaab\n");
    let v = json(&["morphism", "preserves", "a=aba,b=bcb,c=cbc", "4"]);
    assert_eq!(v["preserves"], false);
    assert!(v["counterexamples"].as_array().unwrap().contains(&Value::from("acb")));
}

#[test]
fn balance_and_returns() {
    let v = json(&["balance", "periodic:1213121"]);
    assert_eq!(v["balanced"], true);
    assert_eq!(v["frequencies"]["1"], "4/7");
    assert_eq!(v["gaps"]["2"], serde_json::json!([3, 4]));
    let v = json(&["balance", "aabcb"]);
    assert_eq!(v["witness"], serde_json::json!({"u": "aa", "v": "cb", "letter": "a"}));

    let v = json(&["returns", "periodic:aabacabaac"]);
    assert_eq!(v["all_palindromic"], false);
    assert!(v["returns"].as_array().unwrap().iter().any(|r| r["return_word"] == "cabaac"));
    let v = json(&["returns", "abaaba", "aba"]);
    assert_eq!(
        v["returns"][0],
        serde_json::json!({
            "factor": "aba", "return_word": "abaaba", "start": 1, "end": 6, "palindromic": true
        })
    );
}

#[test]
fn file_inputs() {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("words.txt");
    fs::write(&path, "abba\n\nabbabaabba\nperiodic:ab\n").unwrap();
    let arg = format!("@{}", path.display());
    let out = palrich(&["--json", "analyze", &arg]);
    assert!(out.status.success());
    let rich: Vec<bool> =
        stdout(&out).lines().map(|l| serde_json::from_str::<Value>(l).unwrap()["is_rich"].as_bool().unwrap()).collect();
    assert_eq!(rich, [true, false, true]);
    assert_eq!(palrich(&["analyze", "@/nonexistent/words"]).status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(palrich(&["analyze", "ab-c"]).status.code(), Some(2));
    assert_eq!(palrich(&["analyze", "periodic:"]).status.code(), Some(2));
    assert_eq!(palrich(&["analyze", "morphic:a=ba,b=a;seed=a"]).status.code(), Some(2));
    assert_eq!(palrich(&["analyze"]).status.code(), Some(2));
    assert_eq!(palrich(&["--window", "0", "analyze", "periodic:ab"]).status.code(), Some(2));
    assert_eq!(palrich(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(palrich(&["generate", "fraenkel", "10"]).status.code(), Some(2));
    assert_eq!(palrich(&["enumerate", "rich", "3", "20"]).status.code(), Some(2));
    assert_eq!(palrich(&["morphism", "fixed-point-class", "a=ab,b=ba", "a"]).status.code(), Some(2));
    assert_eq!(palrich(&["--oracle", "--window", "700", "analyze", "periodic:ab"]).status.code(), Some(2));
    assert_eq!(palrich(&["--version"]).status.code(), Some(0));
    assert_eq!(palrich(&["analyze", "abc"]).status.code(), Some(0));
}
