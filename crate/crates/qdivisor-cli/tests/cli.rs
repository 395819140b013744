//! End-to-end tests against the built binary: golden outputs, exit codes,
//! format handling, caching, and byte stability.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use qdivisor_cli::output::OutputRecord;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_qdivisor-lab"));
    // Tests control caching explicitly.
    cmd.env_remove("QDIVISOR_LAB_CACHE_DIR");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn temp_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("qdivisor-lab-{tag}-{}", std::process::id()));
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn poly_12_golden_listing() {
    assert_eq!(
        stdout_of(&["poly", "12"]),
        "q^22 + q^21 + q^20 + q^19 + q^18 + q^17 + q^16 + q^15 + q^14 + 2*q^13\n\
         + 2*q^12 + 2*q^11 + 2*q^10 + 2*q^9 + q^8 + q^7 + q^6 + q^5 + q^4 + q^3\n\
         + q^2 + q + 1\n"
    );
}

#[test]
fn poly_1_is_bare_one() {
    assert_eq!(stdout_of(&["poly", "1"]), "1\n");
}

#[test]
fn poly_6_json_golden() {
    assert_eq!(
        stdout_of(&["poly", "6", "--format", "json"]),
        "{\"n\":6,\"degree\":10,\"coefficients\":[1,1,1,1,1,2,1,1,1,1,1]}\n"
    );
}

#[test]
fn poly_csv_lists_every_power() {
    let csv = stdout_of(&["poly", "3", "--format", "csv"]);
    assert_eq!(csv, "exponent,coefficient\n0,1\n1,1\n2,0\n3,1\n4,1\n");
}

#[test]
fn fn_golden_lines() {
    assert_eq!(
        stdout_of(&["fn", "12"]),
        "F(12) = 2, witness divisors 2 < 3 < 4 = 2*2\n"
    );
    assert_eq!(stdout_of(&["fn", "7"]), "F(7) = 1\n");
    assert_eq!(
        stdout_of(&["fn", "60"]),
        "F(60) = 3, witness divisors 3 < 4 < 5 < 6 = 2*3\n"
    );
}

#[test]
fn fn_json_round_trips() {
    let json = stdout_of(&["fn", "12", "--format", "json"]);
    let record: OutputRecord = serde_json::from_str(json.trim()).unwrap();
    assert_eq!(
        record,
        OutputRecord::FValue {
            n: 12,
            value: 2,
            chain: Some(vec![2, 3]),
        }
    );
    assert_eq!(record.to_json(), json.trim());
}

#[test]
fn scan_bfile_golden() {
    assert_eq!(stdout_of(&["scan", "1", "3", "F"]), "1 1\n2 1\n3 1\n");
    assert_eq!(stdout_of(&["scan", "12", "12", "maxcoeff"]), "12 2\n");
}

#[test]
fn scan_default_format_is_bfile() {
    assert_eq!(
        stdout_of(&["scan", "1", "5", "F"]),
        stdout_of(&["scan", "1", "5", "F", "--format", "bfile"])
    );
}

#[test]
fn scan_csv_and_json_forms() {
    assert_eq!(
        stdout_of(&["scan", "5", "7", "F", "--format", "csv"]),
        "n,value\n5,1\n6,2\n7,1\n"
    );
    assert_eq!(
        stdout_of(&["scan", "5", "6", "F", "--format", "json"]),
        "{\"n\":5,\"value\":1}\n{\"n\":6,\"value\":2}\n"
    );
}

#[test]
fn scan_output_is_stable_across_thread_counts() {
    let reference = stdout_of(&["scan", "1", "200", "F", "--threads", "1"]);
    for threads in ["2", "3", "8"] {
        assert_eq!(
            stdout_of(&["scan", "1", "200", "F", "--threads", threads]),
            reference,
            "threads = {threads}"
        );
    }
}

#[test]
fn scan_empty_range_is_usage_error() {
    let out = run(&["scan", "5", "4", "F"]);
    assert_eq!(exit_code(&out), 1);
    assert!(!String::from_utf8_lossy(&out.stderr).is_empty());
}

#[test]
fn scan_rejects_human_format() {
    let out = run(&["scan", "1", "3", "F", "--format", "human"]);
    assert_eq!(exit_code(&out), 1);
}

#[test]
fn scan_cache_round_trip() {
    let dir = temp_dir("cache");
    let cache_arg = dir.to_str().unwrap();
    let first = stdout_of(&["scan", "1", "30", "F", "--cache", cache_arg]);
    let cache_file = dir.join("F.bfile");
    assert_eq!(fs::read_to_string(&cache_file).unwrap(), first);

    // Re-running over a cached range is byte-identical.
    let second = stdout_of(&["scan", "1", "30", "F", "--cache", cache_arg]);
    assert_eq!(second, first);

    // Extending the range extends the cache.
    let extended = stdout_of(&["scan", "1", "50", "F", "--cache", cache_arg]);
    assert_eq!(fs::read_to_string(&cache_file).unwrap(), extended);
    assert!(extended.starts_with(&first));

    // The cache is honored through the environment variable too.
    let out = bin()
        .args(["scan", "1", "30", "F"])
        .env("QDIVISOR_LAB_CACHE_DIR", cache_arg)
        .output()
        .unwrap();
    assert_eq!(String::from_utf8_lossy(&out.stdout), first);

    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn unwritable_cache_warns_but_computes() {
    let dir = temp_dir("cache-unwritable");
    // A regular file where the cache directory should be.
    let blocker = dir.join("blocker");
    fs::write(&blocker, "not a directory").unwrap();
    let out = bin()
        .args(["scan", "1", "3", "F", "--cache"])
        .arg(blocker.join("sub"))
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 0);
    assert_eq!(String::from_utf8_lossy(&out.stdout), "1 1\n2 1\n3 1\n");
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn perimeter_outputs() {
    assert_eq!(
        stdout_of(&["perimeter", "12"]),
        "2n = 24 is the perimeter of a Pythagorean triangle: (6, 8, 10)\n"
    );
    assert_eq!(
        stdout_of(&["perimeter", "7"]),
        "2n = 14 is not the perimeter of a Pythagorean triangle\n"
    );
    assert_eq!(
        stdout_of(&["perimeter", "6", "--format", "json"]),
        "{\"n\":6,\"is_perimeter\":true,\"triangle\":[3,4,5],\"perimeter\":12}\n"
    );
    let record: OutputRecord =
        serde_json::from_str(stdout_of(&["perimeter", "7", "--format", "json"]).trim()).unwrap();
    assert_eq!(
        record,
        OutputRecord::Perimeter {
            n: 7,
            is_perimeter: false,
            triangle: None,
            perimeter: None,
        }
    );
}

#[test]
fn mean_golden_rows() {
    assert_eq!(stdout_of(&["mean", "1"]), "1 1/1 1.000000\n");
    assert_eq!(
        stdout_of(&["mean", "10", "100", "1000"]),
        "10 11/10 1.100000\n100 34/25 1.360000\n1000 1521/1000 1.521000\nstrictly increasing: true\n"
    );
}

#[test]
fn mean_rejects_non_increasing_checkpoints() {
    let out = run(&["mean", "10", "10"]);
    assert_eq!(exit_code(&out), 1);
    let out = run(&["mean", "100", "10"]);
    assert_eq!(exit_code(&out), 1);
}

#[test]
fn mean_json_round_trips() {
    let json = stdout_of(&["mean", "10", "--format", "json"]);
    let record: OutputRecord = serde_json::from_str(json.trim()).unwrap();
    assert_eq!(
        record,
        OutputRecord::Mean {
            x: 10,
            numerator: 11,
            denominator: 10,
            decimal: "1.100000".into(),
        }
    );
}

#[test]
fn verify_passes_and_reports_each_suite() {
    let out = run(&["verify", "--max-n", "200", "--oracle-max", "200"]);
    assert_eq!(exit_code(&out), 0);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("oracle equivalence: 200/200 ok"), "{text}");
    assert!(text.contains("all 11 suites passed"), "{text}");
}

#[test]
fn verify_usage_errors() {
    assert_eq!(exit_code(&run(&["verify", "--max-n", "0"])), 1);
    assert_eq!(
        exit_code(&run(&["verify", "--max-n", "10", "--oracle-max", "501"])),
        1
    );
}

#[test]
fn bad_inputs_exit_one() {
    assert_eq!(exit_code(&run(&["poly", "0"])), 1);
    assert_eq!(exit_code(&run(&["fn", "0"])), 1);
    assert_eq!(exit_code(&run(&["poly", "six"])), 1);
    assert_eq!(exit_code(&run(&["nonsense"])), 1);
    assert_eq!(exit_code(&run(&["poly", "6", "--format", "bfile"])), 1);
    assert_eq!(exit_code(&run(&["scan", "1", "3", "G"])), 1);
}

#[test]
fn help_exits_zero() {
    assert_eq!(exit_code(&run(&["--help"])), 0);
    assert_eq!(exit_code(&run(&["poly", "--help"])), 0);
}

#[test]
fn runs_are_reproducible() {
    for args in [
        vec!["poly", "97"],
        vec!["fn", "720"],
        vec!["scan", "90", "140", "maxcoeff", "--format", "csv"],
        vec!["mean", "50", "60"],
    ] {
        assert_eq!(stdout_of(&args), stdout_of(&args), "{args:?}");
    }
}
