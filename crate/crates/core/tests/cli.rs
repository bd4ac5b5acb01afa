use std::process::{Command, Output};

use serde_json::Value;

fn xsolvable(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_xsolvable")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn construct_worked_instance() {
    let out = xsolvable(&["construct", "--case", "l2", "--ell", "1", "--alpha", "-2", "--n", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["polynomial"]["coefficients"], serde_json::json!(["2", "1"]));
    assert_eq!(v["energy"], "4");
    assert_eq!(v["system"]["case"], "l2");
}

#[test]
fn construct_rejects_inadmissible_parameters() {
    let out = xsolvable(&["construct", "--case", "j1", "--ell", "1", "--alpha", "0", "--beta", "-1/2"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("parameter constraint violated: β<−ℓ"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn construct_extended_jacobi_ground_shift() {
    let out = xsolvable(&["construct", "--case", "extj", "--ell", "2", "--alpha", "-5/2", "--beta", "-5/2", "--n", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    // P_{ℓ,0} has degree ℓ+1; its energy is that of level 1
    assert_eq!(v["polynomial"]["degree"], 3);
    assert_eq!(v["level"], 1);
    assert_eq!(v["energy"], "36");
    assert_eq!(v["energy_table"][0]["energy"], "0");
    assert!(v["energy_table"][0]["poly_index"].is_null());
}

#[test]
fn decimal_parameters_are_exact() {
    let a = xsolvable(&["construct", "--case", "l1", "--ell", "1", "--alpha", "0.5"]);
    let b = xsolvable(&["construct", "--case", "l1", "--ell", "1", "--alpha", "1/2"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn validation_errors_exit_one() {
    for args in [
        vec!["construct", "--case", "q9", "--ell", "1", "--alpha", "1"],
        vec!["construct", "--case", "l2", "--ell", "1", "--alpha", "two"],
        vec!["construct", "--case", "j1", "--ell", "1", "--alpha", "3/2"],
        vec!["construct", "--case", "l2", "--ell", "1", "--alpha", "-2", "--beta", "1"],
        vec!["spectrum", "--case", "l2", "--ell", "1", "--alpha", "-2", "-k", "11"],
        vec!["verify", "--suite", "nonsense"],
        vec!["frobnicate"],
    ] {
        let out = xsolvable(&args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
    }
    assert_eq!(xsolvable(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_passes_and_catches_an_injected_fault() {
    let out = xsolvable(&["verify"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let suites = json(&out);
    assert_eq!(suites.as_array().unwrap().len(), 8);
    assert!(suites.as_array().unwrap().iter().all(|s| s["pass"] == true));

    let out = xsolvable(&["verify", "--suite", "residual", "--inject-fault", "p-l2-sign"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v[0]["suite"], "residual");
    assert_eq!(v[0]["pass"], false);
    assert!(v[0]["failed"].as_u64().unwrap() > 0);
}

#[test]
fn verify_identities_suite() {
    let out = xsolvable(&["verify", "--suite", "identities"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)[0]["checked"], 2000);
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--suite", "zeros", "--suite", "mirror"];
    assert_eq!(xsolvable(&args).stdout, xsolvable(&args).stdout);
    let args = ["plotdata", "--case", "j2", "--ell", "1", "--alpha", "-5/2", "--beta", "3/2", "--points", "50"];
    assert_eq!(xsolvable(&args).stdout, xsolvable(&args).stdout);
}

#[test]
fn ortho_reports_small_off_diagonal() {
    let out = xsolvable(&["ortho", "--case", "l2", "--ell", "1", "--alpha", "-2", "--nmax", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["size"], 7);
    assert!(v["max_off_diagonal"].as_f64().unwrap() < 1e-10);

    // an impossible threshold turns into exit 2
    let out = xsolvable(&["ortho", "--case", "l2", "--ell", "1", "--alpha", "-2", "--nmax", "3", "--tol", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn spectrum_matches_closed_form() {
    let out = xsolvable(&["spectrum", "--case", "l2", "--ell", "1", "--alpha", "-2", "-k", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["analytic"], serde_json::json!(["4", "8", "12", "16", "20"]));
    assert!(v["max_error"].as_f64().unwrap() < 1e-3);

    let coarse = xsolvable(&["spectrum", "--case", "l2", "--ell", "1", "--alpha", "-2", "--points", "200", "--tol", "1e-6"]);
    assert_eq!(coarse.status.code(), Some(2));
}

#[test]
fn plotdata_rows_are_finite() {
    let out = xsolvable(&["plotdata", "--case", "l2", "--ell", "1", "--alpha", "-2", "--points", "500"]);
    assert_eq!(out.status.code(), Some(0));
    let mut rdr = csv::Reader::from_reader(out.stdout.as_slice());
    let headers = rdr.headers().unwrap().clone();
    assert_eq!(&headers[0], "x");
    assert_eq!(&headers[1], "V");
    assert_eq!(headers.len(), 2 + 4);
    let mut rows = 0;
    for rec in rdr.records() {
        for field in rec.unwrap().iter() {
            assert!(field.parse::<f64>().unwrap().is_finite());
        }
        rows += 1;
    }
    assert_eq!(rows, 500);
}

#[test]
fn plotdata_window_outside_domain_is_rejected() {
    let out = xsolvable(&["plotdata", "--case", "j1", "--ell", "1", "--alpha", "3/2", "--beta", "-5/2", "--x-max", "2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn zeros_sweep_and_single_query() {
    let out = xsolvable(&["zeros", "--count", "50"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = json(&out);
    assert_eq!(rows.as_array().unwrap().len(), 50);
    assert!(rows.as_array().unwrap().iter().all(|r| r["agree"] == true));

    let out = xsolvable(&["zeros", "--kind", "jacobi", "--n", "2", "--alpha", "-5/2", "--beta", "-5/2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)[0]["sturm"], 0);

    let out = xsolvable(&["zeros", "--kind", "laguerre", "--n", "3", "--alpha", "-2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("theorem hypothesis violated"));
}
