use std::process::Command;

fn esq(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("esq").chain(args.iter().copied());
    let code = esq_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

/// Data rows of a CSV dataset, header skipped.
fn rows(csv: &str) -> Vec<Vec<String>> {
    csv.lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .map(|l| l.split(',').map(str::to_owned).collect())
        .collect()
}

fn header(csv: &str) -> String {
    csv.lines().find(|l| !l.starts_with('#')).unwrap().to_owned()
}

fn num(s: &str) -> f64 {
    s.parse().unwrap()
}

#[test]
fn pure_loss_bound_is_log2_3() {
    let (code, out, _) = esq(&["bound", "gaussian", "--tau", "0.5", "--nu", "0.5", "--format", "csv"]);
    assert_eq!(code, 0);
    let line = out.lines().find(|l| l.starts_with("esq-asymptotic,")).unwrap();
    let v = num(line.rsplit(',').next().unwrap());
    assert!((v - 3f64.log2()).abs() < 1e-11);
}

#[test]
fn zero_photons_give_zero() {
    let (code, out, _) = esq(&[
        "bound",
        "gaussian",
        "--tau",
        "0.5",
        "--nu",
        "0.5",
        "--photons",
        "0",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    let first = &doc["bounds"][0];
    assert_eq!(first["name"], "esq-finite-N");
    assert_eq!(first["value"].as_f64(), Some(0.0));
    assert_eq!(doc["constraint"], "N=0");
}

#[test]
fn depolarizing_above_two_thirds_is_flagged() {
    let (code, out, _) = esq(&["bound", "depolarizing", "--p", "0.7"]);
    assert_eq!(code, 0);
    assert!(out.contains("entanglement-breaking: yes"));
    let line = out.lines().find(|l| l.starts_with("esq-depolarizing ")).unwrap();
    assert!(line.trim_end().ends_with(" 0"));
    assert!(out.lines().any(|l| l.starts_with("eb-zero")));
}

#[test]
fn every_flag_group_resolves() {
    for args in [
        &["--tau", "0.5", "--nu", "0.7"][..],
        &["--tau", "0.5", "--chi", "0.2"],
        &["--T", "0.5", "--G", "1.5"],
        &["--eta", "0.3"],
        &["--eta", "0.3", "--nb", "1"],
        &["--nbar", "0.4"],
        &["--gain", "3"],
    ] {
        let mut argv = vec!["bound", "gaussian"];
        argv.extend_from_slice(args);
        let (code, _, err) = esq(&argv);
        assert_eq!(code, 0, "{args:?}: {err}");
    }
}

#[test]
fn qubit_commands() {
    for args in [
        &["bound", "erasure", "--d", "3", "--p", "0.2"][..],
        &["bound", "amplitude-damping", "--gamma", "0.3"],
        &[
            "bound", "pauli", "--p0", "0.7", "--p1", "0.1", "--p2", "0.1", "--p3", "0.1",
        ],
    ] {
        let (code, _, err) = esq(args);
        assert_eq!(code, 0, "{args:?}: {err}");
    }
}

#[test]
fn parameter_errors_exit_1() {
    for args in [
        &["bound", "gaussian", "--tau", "0.5", "--nu", "0.1"][..],
        &["bound", "gaussian", "--tau", "0.5"],
        &["bound", "gaussian", "--eta", "0.5", "--gain", "2"],
        &["bound", "gaussian", "--eta", "0.5", "--photons", "-1"],
        &["bound", "depolarizing", "--p", "1.5"],
        &[
            "bound", "pauli", "--p0", "0.5", "--p1", "0.1", "--p2", "0.1", "--p3", "0.1",
        ],
        &["bound", "erasure", "--d", "1", "--p", "0.5"],
        &["sweep", "pure-loss", "--start", "0.5", "--stop", "0.1"],
        &["sweep", "pure-loss", "--points", "1"],
        &["sweep", "additive", "--start", "0", "--stop", "1", "--log"],
        &["sweep", "pure-loss", "--curves", "nope"],
        &["sweep", "depolarizing", "--photons", "0.1"],
        &["figure", "fig7"],
        &["frobnicate"],
    ] {
        let (code, _, err) = esq(args);
        assert_eq!(code, 1, "{args:?}");
        assert!(!err.is_empty());
    }
}

#[test]
fn help_goes_to_stdout() {
    let (code, out, _) = esq(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("sweep"));
}

#[test]
fn pure_loss_sweep_shape() {
    let (code, out, _) = esq(&[
        "sweep",
        "pure-loss",
        "--start",
        "0",
        "--stop",
        "0.9",
        "--points",
        "10",
        "--curves",
        "esq-asymptotic,plob",
    ]);
    assert_eq!(code, 0);
    assert_eq!(header(&out), "x,esq-asymptotic,plob-pure-loss");
    let rows = rows(&out);
    assert_eq!(rows.len(), 10);
    assert!(rows.iter().all(|r| r.len() == 3));
    assert_eq!(rows[9][0], "0.9");
    assert!(out.contains("# source plob-pure-loss: external-cited\n"));
    assert!(!out.contains('\r'));
}

#[test]
fn additive_log_sweep_decreases() {
    let (code, out, _) = esq(&[
        "sweep", "additive", "--start", "0.1", "--stop", "10", "--log", "--points", "25",
    ]);
    assert_eq!(code, 0);
    let esq: Vec<f64> = rows(&out).iter().map(|r| num(&r[1])).collect();
    assert_eq!(esq.len(), 25);
    assert!(esq.windows(2).all(|w| w[1] < w[0]), "{esq:?}");
}

#[test]
fn thermal_finite_sweep_vanishes_only_at_zero() {
    let (code, out, _) = esq(&[
        "sweep",
        "thermal",
        "--nb",
        "1",
        "--photons",
        "0.1",
        "--start",
        "0",
        "--stop",
        "1",
        "--points",
        "21",
    ]);
    assert_eq!(code, 0);
    assert_eq!(header(&out), "x,esq-finite-N");
    for r in rows(&out) {
        let (x, y) = (num(&r[0]), num(&r[1]));
        assert_eq!(y == 0.0, x == 0.0, "eta = {x}: {y}");
    }
}

#[test]
fn out_of_domain_cells_are_empty() {
    let (code, out, _) = esq(&["sweep", "amplifier", "--start", "0.5", "--stop", "2", "--points", "4"]);
    assert_eq!(code, 0);
    let rows = rows(&out);
    assert_eq!(rows[0], ["0.5", "", ""]);
    assert!(rows[3].iter().all(|c| !c.is_empty()));
}

#[test]
fn csv_is_byte_stable() {
    let args = ["figure", "fig1-ad", "--points", "51"];
    let (_, a, _) = esq(&args);
    let (_, b, _) = esq(&args);
    assert_eq!(a, b);
}

#[test]
fn figures_list_omitted_curves() {
    let (code, out, _) = esq(&["figure", "fig4-thermal", "--points", "11"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l.starts_with("# omitted: pirandola-thermal")));
    assert!(out.contains("eta = 10^(-x/10)"));
    let names: Vec<_> = header(&out).split(',').skip(1).map(str::to_owned).collect();
    assert_eq!(names, ["esq-asymptotic"]);
}

#[test]
fn fig3_additive_near_nbar_one() {
    // 20 points on [0.1, 2] put n̄ = 1 on the grid.
    let (code, out, _) = esq(&["figure", "fig3-additive", "--points", "20"]);
    assert_eq!(code, 0);
    let row = rows(&out).into_iter().find(|r| r[0] == "1").unwrap();
    assert!((num(&row[1]) - 0.5385080850124818).abs() < 1e-11);
}

#[test]
fn json_mirrors_csv() {
    let (_, csv, _) = esq(&["sweep", "amplitude-damping", "--points", "6"]);
    let (_, json, _) = esq(&["sweep", "amplitude-damping", "--points", "6", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    let curves = doc["curves"].as_array().unwrap();
    let names: Vec<_> = curves.iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert_eq!(header(&csv), format!("x,{}", names.join(",")));
    for (i, row) in rows(&csv).iter().enumerate() {
        for (k, c) in curves.iter().enumerate() {
            let p = &c["points"][i];
            assert_eq!(esq_cli::format::format_g(p[0].as_f64().unwrap()), row[0]);
            assert_eq!(esq_cli::format::format_g(p[1].as_f64().unwrap()), row[k + 1]);
        }
    }
}

#[test]
fn files_and_svg_are_written() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("fig2.csv");
    let svg = dir.path().join("fig2.svg");
    let (code, out, _) = esq(&[
        "figure",
        "fig2-depol",
        "--points",
        "31",
        "--out",
        csv.to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let (_, direct, _) = esq(&["figure", "fig2-depol", "--points", "31"]);
    assert_eq!(std::fs::read_to_string(&csv).unwrap(), direct);
    let svg = std::fs::read_to_string(&svg).unwrap();
    assert!(svg.starts_with("<svg") && svg.contains("<path"));
}

#[test]
fn unwritable_output_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("missing").join("x.csv");
    let (code, _, _) = esq(&["figure", "fig1-ad", "--out", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
}

#[test]
fn verify_report_is_deterministic() {
    let (code, a, _) = esq(&["verify", "--seed", "5"]);
    assert_eq!(code, 0, "{a}");
    let (_, b, _) = esq(&["verify", "--seed", "5"]);
    assert_eq!(a, b);
    assert_eq!(a.lines().filter(|l| l.starts_with("PASS suite")).count(), 9);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_esq");
    let ok = Command::new(bin)
        .args(["bound", "gaussian", "--eta", "0.5"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let bad = Command::new(bin)
        .args(["bound", "gaussian", "--eta", "2"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("eta"));
}
