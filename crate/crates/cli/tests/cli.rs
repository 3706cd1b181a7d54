use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use proptest::prelude::*;
use tempfile::TempDir;

fn daa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_daa"))
        .args(args)
        .output()
        .expect("run daa")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn data_of(json: &str) -> Vec<i64> {
    let v: serde_json::Value = serde_json::from_str(json).unwrap();
    serde_json::from_value(v["data"].clone()).unwrap()
}

fn fixture_data(name: &str) -> Vec<i64> {
    data_of(&stdout(&daa(&["catalog", "--dump", name])))
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_writes_documents_with_recipe_echo() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("arabic.json");
    let run = daa(&[
        "gen",
        "lo_shu",
        "lo_shu",
        "--variant",
        "aggregated",
        "--k",
        "2",
        "--out",
        path_str(&out),
    ]);
    assert_eq!(code(&run), 0, "{}", String::from_utf8_lossy(&run.stderr));
    let text = fs::read_to_string(&out).unwrap();
    assert_eq!(data_of(&text), fixture_data("arabic"));
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["recipe"]["variant"], "aggregated");
    assert_eq!(doc["recipe"]["k"], 2);
    assert_eq!(doc["recipe"]["seed_a"], "lo_shu");
}

#[test]
fn gen_examples() {
    let ksr = daa(&["gen", "k1", "k0", "--variant", "gapda"]);
    assert_eq!(code(&ksr), 0);
    assert_eq!(data_of(&stdout(&ksr)), fixture_data("ksr"));
    let isda3 = daa(&["gen", "L2", "L3", "--variant", "rev-dispersed", "--k", "1"]);
    assert_eq!(code(&isda3), 0);
    assert_eq!(data_of(&stdout(&isda3)), fixture_data("l6d_rev"));
}

#[test]
fn gen_exit_codes() {
    let gapped = daa(&["gen", "k1", "k0", "--variant", "dispersed", "--k", "2"]);
    assert_eq!(code(&gapped), 1);
    assert!(String::from_utf8_lossy(&gapped.stderr).contains("full cover"));
    assert_eq!(
        code(&daa(&[
            "gen",
            "l2",
            "latin_cube",
            "--variant",
            "aggregated"
        ])),
        2
    );
    assert_eq!(
        code(&daa(&[
            "gen",
            "l2",
            "missing.txt",
            "--variant",
            "aggregated"
        ])),
        2
    );
    assert_eq!(code(&daa(&["gen", "l2", "l3", "--variant", "sideways"])), 2);
}

#[test]
fn gen_then_analyze_confirms_prediction() {
    let dir = TempDir::new().unwrap();
    for (a, b, variant) in [
        ("lo_shu", "lo_shu", "aggregated"),
        ("lo_shu", "lo_shu", "rev-dispersed"),
        ("l2", "l3", "dispersed"),
        ("m4", "lo_shu", "rev-aggregated"),
        ("k1", "k0", "gapda"),
    ] {
        let out = dir.path().join(format!("{a}-{b}-{variant}.json"));
        assert_eq!(
            code(&daa(&[
                "gen",
                a,
                b,
                "--variant",
                variant,
                "--out",
                path_str(&out)
            ])),
            0
        );
        let run = daa(&["analyze", path_str(&out), "--json"]);
        assert_eq!(code(&run), 0, "{a} {b} {variant}");
        let report: serde_json::Value = serde_json::from_str(&stdout(&run)).unwrap();
        assert_eq!(report["prediction"]["eigen_match"], true);
        assert_eq!(report["prediction"]["singular_match"], true);
    }
}

#[test]
fn analyze_examples() {
    let l6a = stdout(&daa(&["analyze", "l6a"]));
    assert!(l6a.contains("R index: 6849"));
    assert!(l6a.contains("rank: 4"));
    assert!(l6a.contains("squared singular values: 225 81 12 12 0 0"));
    let order12 = stdout(&daa(&["analyze", "order12"]));
    assert!(order12.contains("rank: 5"));
    assert!(order12.contains("line sum: 858"));
}

#[test]
fn analyze_exit_codes() {
    let dir = TempDir::new().unwrap();
    let cube = daa(&["analyze", "latin_cube"]);
    assert_eq!(code(&cube), 2);
    let ragged = dir.path().join("ragged.txt");
    fs::write(&ragged, "1 2 3\n4 5 6\n").unwrap();
    assert_eq!(code(&daa(&["analyze", path_str(&ragged)])), 2);
    let skewed = dir.path().join("skewed.txt");
    fs::write(&skewed, "1 2\n3 4\n").unwrap();
    let run = daa(&["analyze", path_str(&skewed)]);
    assert_eq!(code(&run), 2);
    assert!(stdout(&run).contains("rank: 2"));
    let wrong = daa(&[
        "analyze",
        "l6a",
        "--variant",
        "dispersed",
        "--seed-a",
        "l2",
        "--seed-b",
        "l3",
    ]);
    assert_eq!(code(&wrong), 1);
    assert!(stdout(&wrong).contains("MISMATCH"));
}

#[test]
fn verify_examples() {
    assert_eq!(code(&daa(&["verify", "ksr", "--property", "magic"])), 0);
    assert_eq!(
        code(&daa(&[
            "verify",
            "lo_shu",
            "--property",
            "fullcover",
            "--k",
            "2"
        ])),
        0
    );
    let l3 = daa(&["verify", "L3", "--property", "magic"]);
    assert_eq!(code(&l3), 1);
    assert!(stdout(&l3).contains("antidiagonal"));
    assert_eq!(
        code(&daa(&["verify", "latin_cube_agg", "--property", "latin"])),
        0
    );
    assert_eq!(
        code(&daa(&["verify", "l6a", "--property", "diagonal-latin"])),
        1
    );
    assert_eq!(
        code(&daa(&["verify", "m4", "--property", "pandiagonal"])),
        1
    );
    assert_eq!(
        code(&daa(&["verify", "latin_cube", "--property", "pandiagonal"])),
        2
    );
}

#[test]
fn catalog_examples() {
    let all = daa(&["catalog"]);
    assert_eq!(code(&all), 0);
    let text = stdout(&all);
    assert_eq!(text.matches("  order ").count(), 9);
    assert!(text.contains("lo_shu"));
    let twelve = stdout(&daa(&["catalog", "--order", "12"]));
    assert!(twelve.contains("C_mn=8, 4 pair(s)"));
    let seven = daa(&["catalog", "--order", "7"]);
    assert_eq!(code(&seven), 0);
    assert!(stdout(&seven).contains("no entries"));
    assert_eq!(code(&daa(&["catalog", "--dump", "nope"])), 2);
}

#[test]
fn shuffle_examples() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("yh.txt");
    assert_eq!(
        code(&daa(&[
            "shuffle",
            "arabic",
            "--m",
            "3",
            "--out",
            path_str(&out)
        ])),
        0
    );
    let yh = dir.path().join("yh.json");
    assert_eq!(
        code(&daa(&[
            "shuffle",
            path_str(&out),
            "--m",
            "1",
            "--out",
            path_str(&yh)
        ])),
        0
    );
    assert_eq!(
        data_of(&fs::read_to_string(&yh).unwrap()),
        fixture_data("yh")
    );
    assert_eq!(
        data_of(&stdout(&daa(&["shuffle", "l6a", "--m", "2"]))),
        fixture_data("l6a_rev")
    );
    assert_eq!(code(&daa(&["shuffle", "l6a", "--m", "4"])), 2);
}

fn tensor_text() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (2usize..=3, 1usize..=4).prop_flat_map(|(dims, side)| {
        let len = side.pow(dims as u32);
        (
            Just(dims),
            Just(side),
            prop::collection::vec(any::<i64>(), len),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn documents_round_trip_through_both_formats((dims, side, data) in tensor_text()) {
        prop_assume!(side > 1 || dims == 2);
        let dir = TempDir::new().unwrap();
        let json = dir.path().join("t.json");
        let doc = serde_json::json!({ "dims": dims, "side": side, "data": data });
        fs::write(&json, doc.to_string()).unwrap();
        let text = dir.path().join("t.txt");
        let back = dir.path().join("back.json");
        prop_assert_eq!(code(&daa(&["shuffle", path_str(&json), "--m", "1", "--out", path_str(&text)])), 0);
        prop_assert_eq!(code(&daa(&["shuffle", path_str(&text), "--m", "1", "--out", path_str(&back)])), 0);
        let round: serde_json::Value = serde_json::from_str(&fs::read_to_string(&back).unwrap()).unwrap();
        prop_assert_eq!(round["dims"].as_u64(), Some(dims as u64));
        prop_assert_eq!(round["side"].as_u64(), Some(side as u64));
        prop_assert_eq!(data_of(&round.to_string()), data);
    }
}
