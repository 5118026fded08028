use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lincomplex"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(out.stderr.is_empty());
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

#[test]
fn compute_gcd_golden() {
    let out = run(&[
        "compute",
        "--seq",
        "100110",
        "--algorithm",
        "gcd",
        "--no-timing",
    ]);
    let expected = r#"{
  "n": 6,
  "input_format": "bits",
  "algorithm": "GcdMethod",
  "complexity": 6,
  "min_poly_bits": "1000001",
  "min_poly_human": "x^6+1",
  "deltas": null,
  "ops": {
    "xor": 0,
    "cmp": 0,
    "counter": 0,
    "total": 0
  },
  "bound": null,
  "within_bound": true,
  "elapsed_ns": 0
}
"#;
    assert_eq!(String::from_utf8(out.stdout).unwrap(), expected);
}

#[test]
fn compute_auto_constant() {
    let v = json(&["compute", "--seq", "111", "--algorithm", "auto"]);
    assert_eq!(v["complexity"], 1);
    assert_eq!(v["min_poly_human"], "x+1");
    assert_eq!(v["within_bound"], true);
}

#[test]
fn compute_fast_square_factor() {
    let v = json(&["compute", "--seq", "000101", "--algorithm", "fast"]);
    assert_eq!(v["algorithm"], "Fast3x2n");
    assert_eq!(v["complexity"], 4);
    assert_eq!(v["min_poly_bits"], "10101");
    assert_eq!(v["min_poly_human"], "(x^2+x+1)^2");
    assert_eq!(v["bound"], 16);
}

#[test]
fn every_algorithm_agrees_on_a_power_of_two() {
    let seq = "10011010";
    for alg in ["auto", "games-chan", "ppp", "general", "fast", "bm", "gcd"] {
        let v = json(&["compute", "--seq", seq, "--algorithm", alg]);
        assert_eq!(v["complexity"], 7, "{alg}");
        assert_eq!(v["min_poly_bits"], "11111111", "{alg}");
    }
}

#[test]
fn compute_ppp_with_explicit_poly() {
    let v = json(&[
        "compute",
        "--seq",
        "011011",
        "--algorithm",
        "ppp",
        "--poly",
        "111",
    ]);
    assert_eq!(v["complexity"], 2);
    assert_eq!(v["algorithm"], "PPP");
}

#[test]
fn hex_and_file_inputs_match_bits() {
    // digits 9 and 5, each read low bit first: 1001 1010
    let hex = json(&[
        "compute",
        "--seq",
        "95",
        "--format",
        "hex",
        "--len",
        "8",
        "--no-timing",
    ]);
    let bits = json(&["compute", "--seq", "10011010", "--no-timing"]);
    assert_eq!(hex["complexity"], bits["complexity"]);
    assert_eq!(hex["min_poly_bits"], bits["min_poly_bits"]);
    assert_eq!(hex["input_format"], "hex");

    let path = std::env::temp_dir().join(format!("lincomplex-cli-{}.txt", std::process::id()));
    std::fs::write(&path, "10011010\n").unwrap();
    let file = json(&["compute", "--in", path.to_str().unwrap(), "--no-timing"]);
    std::fs::remove_file(&path).ok();
    assert_eq!(file["min_poly_bits"], bits["min_poly_bits"]);
}

#[test]
fn plain_output() {
    let out = run(&["compute", "--seq", "011", "--plain", "--no-timing"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("complexity: 2"));
    assert!(text.contains("min_poly: x^2+x+1 [111]"));
}

#[test]
fn compute_exit_codes() {
    assert_eq!(code(&["compute", "--seq", "01a1"]), 2);
    assert_eq!(code(&["compute", "--seq", "ff", "--format", "hex"]), 2);
    assert_eq!(code(&["compute", "--seq", "0101", "--len", "5"]), 2);
    assert_eq!(code(&["compute"]), 2);
    assert_eq!(
        code(&["compute", "--seq", "011011", "--algorithm", "games-chan"]),
        3
    );
    assert_eq!(
        code(&["compute", "--seq", "0010111", "--algorithm", "fast"]),
        3
    );
    assert_eq!(
        code(&["compute", "--seq", "0010111", "--algorithm", "general"]),
        3
    );
    assert_eq!(
        code(&["compute", "--seq", "0010111", "--algorithm", "auto"]),
        0
    );
}

#[test]
fn verify_exhaustive() {
    let v = json(&["verify", "--n", "12", "--exhaustive"]);
    assert_eq!(
        (v["checked"].as_u64(), v["mismatches"].as_u64()),
        (Some(4096), Some(0))
    );
    let v = json(&["verify", "--n", "9", "--exhaustive"]);
    assert_eq!(
        (v["checked"].as_u64(), v["mismatches"].as_u64()),
        (Some(512), Some(0))
    );
    assert_eq!(code(&["verify", "--n", "40", "--exhaustive"]), 2);
}

#[test]
fn verify_family_is_reproducible() {
    let args = [
        "verify", "--family", "3x2n", "--n-max", "10", "--trials", "1000", "--seed", "7",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["bound_violations"], 0);
    assert_eq!(v["mismatches"], 0);
}

#[test]
fn verify_other_families() {
    for (family, extra) in [
        ("pow2", "8"),
        ("5x2n", "6"),
        ("p^n", "4"),
        ("composite", "7"),
    ] {
        let v = json(&[
            "verify", "--family", family, "--n-max", extra, "--trials", "50",
        ]);
        assert_eq!(v["mismatches"], 0, "{family}");
        assert_eq!(v["bound_violations"], 0, "{family}");
    }
}

#[test]
fn bench_reference_bounds() {
    for (family, bound) in [("3x2n", 7188), ("5x2n", 17172), ("pow2", 1034)] {
        let v = json(&[
            "bench", "--family", family, "--n-max", "10", "--trials", "5",
        ]);
        let row = &v.as_array().unwrap()[10];
        assert_eq!(row["n"], 10);
        assert_eq!(row["bound"], bound, "{family}");
        assert_eq!(row["within_bound"], true);
    }
}

#[test]
fn bench_csv_is_stable_without_timing() {
    let args = [
        "bench",
        "--family",
        "13x2n",
        "--n-max",
        "4",
        "--trials",
        "20",
        "--format",
        "csv",
        "--no-timing",
    ];
    let a = run(&args);
    assert_eq!(a.stdout, run(&args).stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("n,N,algorithm"));
    assert_eq!(lines.count(), 5);
}

#[test]
fn enumerate_rows() {
    let v = json(&["enumerate", "--poly", "111", "--max-power", "2"]);
    let row = &v["rows"][1];
    assert_eq!((row["ell"].as_u64(), row["i"].as_u64()), (Some(2), Some(1)));
    assert_eq!(
        (row["formula"].as_u64(), row["brute"].as_u64()),
        (Some(2), Some(2))
    );
    assert_eq!(row["pass"], true);

    let v = json(&["enumerate", "--poly", "111", "--max-power", "1"]);
    assert_eq!(v["rows"][0]["formula"], 1);
    assert_eq!(v["rows"][0]["pass"], true);

    let v = json(&["enumerate", "--poly", "1101", "--max-power", "2"]);
    assert_eq!(
        (
            v["rows"][1]["formula"].as_u64(),
            v["rows"][1]["brute"].as_u64()
        ),
        (Some(4), Some(4))
    );
    assert_eq!(v["all_pass"], true);
}

#[test]
fn enumerate_exit_codes() {
    assert_eq!(
        code(&["enumerate", "--poly", "11111", "--max-power", "2"]),
        2
    );
    assert_eq!(
        code(&["enumerate", "--poly", "11001", "--max-power", "6"]),
        4
    );
    assert_eq!(code(&["enumerate", "--poly", "1q1", "--max-power", "2"]), 2);
}
