use std::process::{Command, Output};

use arboreal::experiments::{
    cheb_scan, DiscCheckReport, DistributionReport, HCheckReport, Report, SampleReport, ScanOptions, ScanReport,
};
use arboreal::wreath::{pattern_distribution, CyclePattern};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arboreal")).args(args).env_remove("ARBOREAL_CAP_BITS").output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn failure(args: &[&str]) -> (i32, String) {
    let out = run(args);
    assert!(out.stdout.is_empty(), "{args:?} wrote a report");
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.trim_end().lines().count(), 1, "{args:?}: {err}");
    (out.status.code().unwrap(), err)
}

#[test]
fn wreath_dist_example() {
    let text = stdout(&["wreath-dist", "--d", "2", "--n", "2", "--output", "csv"]);
    let r = DistributionReport::from_csv(&text).unwrap();
    assert_eq!(r.rows.len(), 4);
    assert_eq!(r, DistributionReport::new(&pattern_distribution(2, 2).unwrap()));
    let json = stdout(&["wreath-dist", "--d", "2", "--n", "2", "--output", "json"]);
    assert_eq!(DistributionReport::from_json(&json).unwrap(), r);
}

#[test]
fn check_h_example() {
    let r = HCheckReport::from_csv(&stdout(&["dyn-check-h", "--field", "Q", "--poly", "1,0,1", "--N", "4"])).unwrap();
    assert!(r.report.overall);
    let json = stdout(&["dyn-check-h", "--field", "Q", "--poly", "1,0,1", "--N", "4", "--output", "json"]);
    assert_eq!(HCheckReport::from_json(&json).unwrap(), r);
}

#[test]
fn cheb_scan_example() {
    let text = stdout(&["exp-cheb-scan", "--q", "3", "--d", "2", "--n", "1", "--b", "1", "--seed", "7"]);
    let r = ScanReport::from_csv(&text).unwrap();
    assert_eq!(r.tally(&"1^2".parse::<CyclePattern>().unwrap()), 3);
    assert_eq!(r.tally(&"2^1".parse::<CyclePattern>().unwrap()), 3);
    assert_eq!(r.non_squarefree, 3);
    assert_eq!(r, cheb_scan(3, 1, 2, 1, &ScanOptions { seed: 7, check_h: false, ..Default::default() }).unwrap());
}

#[test]
fn worker_count_does_not_change_output() {
    let args = ["exp-cheb-scan", "--q", "9", "--d", "2", "--n", "2", "--seed", "3", "--check-h"];
    let one = stdout(&[&args[..], &["--workers", "1"]].concat());
    assert_eq!(stdout(&[&args[..], &["--workers", "5"]].concat()), one);
    let sample = ["wreath-sample", "--d", "2", "--n", "3", "--samples", "2000", "--seed", "4"];
    let a = stdout(&[&sample[..], &["--workers", "1"]].concat());
    assert_eq!(stdout(&[&sample[..], &["--workers", "3"]].concat()), a);
    assert_eq!(SampleReport::from_csv(&a).unwrap().rows.iter().map(|r| r.count).sum::<u64>(), 2000);
}

#[test]
fn validation_errors_exit_2() {
    for args in [
        &["wreath-dist", "--d", "1", "--n", "2"][..],
        &["exp-cheb-scan", "--q", "4", "--d", "2", "--n", "1", "--seed", "1"],
        &["dyn-check-h", "--field", "Q", "--poly", "1,x", "--N", "2"],
        &["dyn-check-h", "--field", "q=6", "--poly", "1,0,1", "--N", "2"],
        &["exp-frob", "--field", "Q", "--poly", "1,0,1", "--n", "1", "--seed", "1"],
        &["no-such-command"],
        &["wreath-dist", "--d", "2"],
        &["wreath-dist", "--d", "2", "--n", "2", "--workers", "0"],
    ] {
        assert_eq!(failure(args).0, 2, "{args:?}");
    }
}

#[test]
fn randomized_commands_need_a_seed() {
    for args in [
        &["wreath-sample", "--d", "2", "--n", "2", "--samples", "10"][..],
        &["exp-cheb-scan", "--q", "3", "--d", "2", "--n", "1"],
        &["exp-frob", "--field", "q=5", "--poly", "1,0,1", "--n", "1"],
        &["exp-char2-quad", "--k", "1", "--n", "1"],
    ] {
        let (code, err) = failure(args);
        assert_eq!(code, 2);
        assert!(err.contains("--seed"), "{err}");
    }
}

#[test]
fn caps_exit_3() {
    for args in [
        &["wreath-dist", "--d", "2", "--n", "7"][..],
        &["wreath-dist", "--d", "2", "--n", "3", "--cap-leaves", "4"],
        &["exp-cheb-scan", "--q", "1009", "--d", "2", "--n", "1", "--seed", "1"],
        &["exp-char2", "--n", "40"],
    ] {
        assert_eq!(failure(args).0, 3, "{args:?}");
    }
}

#[test]
fn cap_bits_flag_and_environment() {
    let args = ["dyn-disc", "--field", "Q", "--map", "1,1,1", "--n", "6"];
    assert_eq!(failure(&[&args[..], &["--cap-bits", "4"]].concat()).0, 3);
    let out = Command::new(env!("CARGO_BIN_EXE_arboreal")).args(args).env("ARBOREAL_CAP_BITS", "4").output().unwrap();
    assert_eq!(out.status.code(), Some(3));
    let r = DiscCheckReport::from_csv(&stdout(&args[..5])).unwrap();
    assert!(r.iterate.is_none());
    let r = DiscCheckReport::from_json(&stdout(&[&args[..5], &["--n", "2", "--output", "json"]].concat())).unwrap();
    assert!(r.iterate.is_some());
}

#[test]
fn out_writes_a_file_and_nothing_to_stdout() {
    let dir = std::env::temp_dir().join(format!("arboreal-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("fpp.json");
    let out = run(&["wreath-fpp", "--d", "3", "--n", "2", "--output", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text, stdout(&["wreath-fpp", "--d", "3", "--n", "2", "--output", "json"]));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn help_goes_to_stdout() {
    let text = stdout(&["--help"]);
    for cmd in ["wreath-dist", "dyn-disc", "exp-orbit-primes", "exp-char2-quad"] {
        assert!(text.contains(cmd), "{cmd} missing from help");
    }
}
