use std::process::{Command, Output};

fn catsort(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_catsort")).args(args).output().expect("spawn catsort")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn first_value(o: &Output) -> f64 {
    let out = stdout(o);
    out.trim().rsplit("≈ ").next().unwrap().parse().unwrap()
}

#[test]
fn rn_brackets_one_half_at_the_known_crossing() {
    let a = catsort(&["rn", "--n", "1000", "--h", "439", "--z", "33"]);
    let b = catsort(&["rn", "--n", "1000", "--h", "440", "--z", "33"]);
    assert!(a.status.success() && b.status.success());
    assert!(first_value(&a) >= 0.5);
    assert!(first_value(&b) <= 0.5);
}

#[test]
fn rn_domain_error_exits_2() {
    let o = catsort(&["rn", "--n", "10", "--h", "3", "--z", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("domain"));
}

#[test]
fn usage_error_exits_2() {
    assert_eq!(catsort(&["rn", "--n", "10"]).status.code(), Some(2));
    assert_eq!(catsort(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn delta_n3() {
    let plain = catsort(&["delta", "--n", "3"]);
    let exact = catsort(&["delta", "--n", "3", "--exact"]);
    let screened = catsort(&["delta", "--n", "3", "--screened"]);
    assert_eq!(stdout(&plain).lines().next(), Some("1/5 at pair (1,2),(2,1)"));
    assert_eq!(stdout(&exact), stdout(&screened));
}

#[test]
fn delta_n1000_scaled_below_three() {
    let o = catsort(&["delta", "--n", "1000"]);
    assert!(o.status.success());
    let line = stdout(&o).lines().find(|l| l.starts_with("scaled_n54")).unwrap().to_string();
    let v: f64 = line.split_whitespace().nth(1).unwrap().parse().unwrap();
    assert!(v < 3.0);
}

#[test]
fn scan_csv_is_identical_across_workers() {
    let dir = tempfile::tempdir().unwrap();
    let mut files = Vec::new();
    for w in ["1", "4"] {
        let path = dir.path().join(format!("scan{w}.csv"));
        let p = path.to_str().unwrap();
        let o = catsort(&["scan", "--from", "3", "--to", "40", "--workers", w, "--output", p]);
        assert!(o.status.success());
        files.push(std::fs::read(&path).unwrap());
    }
    assert_eq!(files[0], files[1]);
    let text = String::from_utf8(files.remove(0)).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("n,delta_num,delta_den,argmin_a,argmin_b,delta_float,scaled_n54,log_n_delta")
    );
    assert!(lines.next().unwrap().starts_with("3,1,5,2,1,"));
    assert_eq!(text.lines().count(), 39);
}

#[test]
fn scan_rejects_bad_range() {
    assert_eq!(catsort(&["scan", "--from", "2", "--to", "5"]).status.code(), Some(2));
    assert_eq!(catsort(&["scan", "--from", "3", "--to", "5", "--workers", "0"]).status.code(), Some(2));
}

#[test]
fn export_and_compare() {
    let dir = tempfile::tempdir().unwrap();
    let ours = dir.path().join("ours.txt");
    let o = catsort(&["export-oeis", "--which", "A335212", "--max-n", "12", "--output", ours.to_str().unwrap()]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&ours).unwrap();
    assert!(text.starts_with("3 1\n"));
    assert_eq!(text.lines().count(), 10);

    let good = dir.path().join("good.txt");
    std::fs::write(&good, format!("# header\n{}", text.lines().take(5).collect::<Vec<_>>().join("\n"))).unwrap();
    let o = catsort(&["export-oeis", "--which", "A335212", "--max-n", "12", "--compare", good.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));

    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "3 2\n").unwrap();
    let o = catsort(&["export-oeis", "--which", "A335212", "--max-n", "12", "--compare", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_suites() {
    let lemmas = catsort(&["verify", "--suite", "lemmas", "--max-n", "60"]);
    assert!(lemmas.status.success(), "{}", stdout(&lemmas));
    let oracle = catsort(&["verify", "--suite", "oracle", "--max-n", "8"]);
    assert!(oracle.status.success(), "{}", stdout(&oracle));
    let crossing = catsort(&["verify", "--suite", "crossing", "--n", "1000"]);
    assert!(crossing.status.success());
    assert!(stdout(&crossing).contains("z*=33, h1=439"));
}

#[test]
fn verify_limit_reports_the_finite_gap() {
    let o = catsort(&["verify", "--suite", "limit"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("PASS normalization"));
    assert!(out.contains("FAIL finite-n gap"));
}

#[test]
fn limit_expected_crossing() {
    let o = catsort(&["limit", "--t", "0.5", "--r", "8"]);
    let v: f64 = stdout(&o).trim().parse().unwrap();
    assert!((v - 1.0).abs() < 1e-8);

    let o = catsort(&["expected", "--n", "5", "--row", "1", "--col", "1"]);
    assert_eq!(stdout(&o).trim(), "1/1 ≈ 1");
    assert_eq!(catsort(&["expected", "--n", "5", "--row", "3", "--col", "1"]).status.code(), Some(2));

    let o = catsort(&["crossing", "--n", "1000"]);
    let out = stdout(&o);
    assert!(out.contains("z_star 33") && out.contains("h1 439"));
}

#[test]
fn nmax_env_limits_capacity() {
    let o = Command::new(env!("CARGO_BIN_EXE_catsort"))
        .args(["delta", "--n", "50"])
        .env("CATSORT_NMAX", "20")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("n_max >= "));
}
