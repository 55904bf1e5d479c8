//! End-to-end exercises of the `sensa` binary.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn sensa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sensa"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn fresh_dir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("sensa-cli-{name}"));
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("terminated by signal")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn usage_errors_exit_1_without_writing() {
    let dir = fresh_dir("usage");
    let out = dir.join("x.csv");
    let out_s = out.to_str().unwrap();

    let o = sensa(&["sample", "--bogus-flag", "--out", out_s]);
    assert_eq!(code(&o), 1);
    assert!(!out.exists());

    let o = sensa(&[
        "estimate",
        "--estimator",
        "nonsense",
        "--evals",
        "e.csv",
        "--out",
        out_s,
    ]);
    assert_eq!(code(&o), 1);
    assert!(!out.exists());

    // The pseudo-random sampler needs an explicit seed.
    let o = sensa(&[
        "sample",
        "--method",
        "random",
        "--rows-exp",
        "3",
        "--dims",
        "2",
        "--out",
        out_s,
    ]);
    assert_eq!(code(&o), 1);
    assert!(!out.exists());

    let o = sensa(&["--help"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn sample_writes_matrix_and_sidecar_idempotently() {
    let dir = fresh_dir("sample");
    let out = dir.join("m.csv");
    let out_s = out.to_str().unwrap().to_owned();
    let args = [
        "sample",
        "--method",
        "sobol",
        "--rows-exp",
        "4",
        "--dims",
        "3",
        "--seed",
        "9",
        "--out",
        &out_s,
    ];
    let o = sensa(&args);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let text = fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().count(), 16);
    assert!(text.lines().all(|l| l.split(',').count() == 3));
    assert!(dir.join("m.csv.meta.json").exists());

    let first = fs::read(&out).unwrap();
    let o = sensa(&args);
    assert_eq!(code(&o), 0);
    assert_eq!(fs::read(&out).unwrap(), first);

    // Seeded pseudo-random sampling works and differs from the sequence.
    let rnd = dir.join("r.csv");
    let o = sensa(&[
        "sample",
        "--method",
        "random",
        "--rows-exp",
        "4",
        "--dims",
        "3",
        "--seed",
        "9",
        "--out",
        rnd.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_ne!(fs::read(&rnd).unwrap(), first);
}

#[test]
fn metafunction_generates_and_evaluates() {
    let dir = fresh_dir("metafn");
    let spec = dir.join("spec.txt");
    let o = sensa(&[
        "metafunction",
        "generate",
        "--k",
        "4",
        "--k2",
        "0.4",
        "--k3",
        "0.2",
        "--seed",
        "7",
        "--out",
        spec.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));

    let matrix = dir.join("m.csv");
    let o = sensa(&[
        "sample",
        "--method",
        "sobol",
        "--rows-exp",
        "4",
        "--dims",
        "4",
        "--seed",
        "3",
        "--out",
        matrix.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));

    let y = dir.join("y.csv");
    let o = sensa(&[
        "metafunction",
        "evaluate",
        "--spec",
        spec.to_str().unwrap(),
        "--matrix",
        matrix.to_str().unwrap(),
        "--out",
        y.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let values: Vec<f64> = fs::read_to_string(&y)
        .unwrap()
        .lines()
        .map(|l| l.parse().unwrap())
        .collect();
    assert_eq!(values.len(), 16);
    assert!(values.iter().all(|v| v.is_finite()));

    // A spec on the wrong matrix width is a data error.
    let narrow = dir.join("narrow.csv");
    fs::write(&narrow, "0.1,0.2\n0.3,0.4\n").unwrap();
    let o = sensa(&[
        "metafunction",
        "evaluate",
        "--spec",
        spec.to_str().unwrap(),
        "--matrix",
        narrow.to_str().unwrap(),
        "--out",
        y.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 2);
}

#[test]
fn estimate_computes_known_values_and_flags_degeneracy() {
    let dir = fresh_dir("estimate");
    // Design evaluations with input 2 inert: yA, a shuffled yAB_1, yAB_2 = yA.
    let evals = dir.join("evals.csv");
    fs::write(&evals, "0,3,0\n1,2,1\n2,1,2\n3,0,3\n").unwrap();
    let out = dir.join("t.csv");
    let o = sensa(&[
        "estimate",
        "--estimator",
        "jansen",
        "--evals",
        evals.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let text = fs::read_to_string(&out).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "estimator,input,T_hat,f0,Vy");
    // Hand arithmetic: V = 1.25, sum of squared swaps on input 1 is 20,
    // so T_1 = 20/(2*4)/1.25 = 2; the inert input lands on exactly 0.
    assert_eq!(lines[1], "jansen,1,2,1.5,1.25");
    assert_eq!(lines[2], "jansen,2,0,1.5,1.25");

    // Constant outputs have no variance to decompose.
    let flat = dir.join("flat.csv");
    fs::write(&flat, "1,1,1\n1,1,1\n1,1,1\n").unwrap();
    let o = sensa(&[
        "estimate",
        "--estimator",
        "jansen",
        "--evals",
        flat.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("variance"), "stderr: {}", stderr(&o));
}

#[test]
fn estimate_runs_the_star_design_from_centers() {
    let dir = fresh_dir("stars");
    let centers = dir.join("centers.csv");
    let o = sensa(&[
        "sample",
        "--method",
        "sobol",
        "--rows-exp",
        "3",
        "--dims",
        "2",
        "--seed",
        "5",
        "--out",
        centers.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));

    // Evaluate y = x1 + 2 x2 along the star points, in design row order.
    let m = sensa_core::sampling::SampleMatrix::read_csv(&centers).unwrap();
    let star = sensa_core::sampling::build_star_design(&m, 0.25).unwrap();
    let mut text = String::new();
    for r in 0..star.points.rows() {
        let row = star.points.row(r);
        text.push_str(&(row[0] + 2.0 * row[1]).to_string());
        text.push('\n');
    }
    let evals = dir.join("y.csv");
    fs::write(&evals, text).unwrap();

    let out = dir.join("t.csv");
    let o = sensa(&[
        "estimate",
        "--estimator",
        "razavi-gupta",
        "--evals",
        evals.to_str().unwrap(),
        "--centers",
        centers.to_str().unwrap(),
        "--delta-h",
        "0.25",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let text = fs::read_to_string(&out).unwrap();
    let t: Vec<f64> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(2).unwrap().parse().unwrap())
        .collect();
    assert_eq!(t.len(), 2);
    // The steeper input must dominate, roughly 4:1 in variance.
    assert!(t[1] > 2.0 * t[0], "got {t:?}");

    // Omitting the star geometry is an error for this estimator.
    let o = sensa(&[
        "estimate",
        "--estimator",
        "razavi-gupta",
        "--evals",
        evals.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 2);
}

#[test]
fn benchmark_summarize_analyze_pipeline() {
    let dir = fresh_dir("bench");
    let records = dir.join("records.csv");
    let cfg = dir.join("cfg.txt");
    fs::write(
        &cfg,
        format!(
            "global_seed = 11\nrows_exp = 4\ntruth_rows_exp = 6\nmode = rank\nparallelism = 1\nout_path = {}\n",
            records.display()
        ),
    )
    .unwrap();
    let o = sensa(&["benchmark", "--config", cfg.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(String::from_utf8_lossy(&o.stdout).contains("wrote 1152 records"));
    let text = fs::read_to_string(&records).unwrap();
    assert!(text.starts_with("#schema sensa-records-v1\n"));

    // Rerunning against the same file with a conflicting seed must refuse
    // rather than mix runs.
    let o = sensa(&[
        "benchmark",
        "--config",
        cfg.to_str().unwrap(),
        "--seed",
        "12",
    ]);
    assert_eq!(code(&o), 2);

    // Redirecting the output makes the override fine.
    let alt = dir.join("records-alt.csv");
    let o = sensa(&[
        "benchmark",
        "--config",
        cfg.to_str().unwrap(),
        "--seed",
        "12",
        "--out",
        alt.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_ne!(fs::read(&records).unwrap(), fs::read(&alt).unwrap());

    let summary = dir.join("summary.csv");
    let o = sensa(&[
        "summarize",
        "--records",
        records.to_str().unwrap(),
        "--out",
        summary.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let text = fs::read_to_string(&summary).unwrap();
    assert!(text
        .starts_with("table,estimator,bin_lo,bin_hi,count,median,mean_frac_neg,mean_frac_gt1\n"));
    assert!(text.contains("bin_median,jansen,"));
    assert!(text.contains("negative_r,"));

    let report = dir.join("sa.csv");
    let o = sensa(&[
        "analyze",
        "--records",
        records.to_str().unwrap(),
        "--out",
        report.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let text = fs::read_to_string(&report).unwrap();
    assert!(text.starts_with("estimator,output,parameter_or_cluster,Si,Ti\n"));
    assert_eq!(text.lines().count(), 1 + 8 * 7);

    // Missing records file is a data error.
    let o = sensa(&[
        "analyze",
        "--records",
        dir.join("nope.csv").to_str().unwrap(),
        "--out",
        report.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 2);
}
