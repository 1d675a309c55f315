//! End-to-end tests of the `qheis` binary: file emission, round trips,
//! parametrization flags and exit codes.

use qheis_core::geodesic::GeodesicParams;
use qheis_core::io::Table;
use std::f64::consts::PI;
use std::path::PathBuf;
use std::process::{Command, Output};

fn qheis(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qheis"))
        .args(args)
        .output()
        .expect("spawn qheis")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn temp_path(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("qheis-test-{}-{name}", std::process::id()));
    p
}

const REFERENCE: [&str; 4] = ["--covector", "1,0,0,0", "--c567", "1,0,0"];

#[test]
fn geodesic_reference_table() {
    let out = qheis(&[&["geodesic"], &REFERENCE[..], &["--samples", "100"]].concat());
    assert!(out.status.success());
    let table = Table::from_csv(&stdout_str(&out)).unwrap();
    assert_eq!(
        table.columns,
        ["t", "b1", "b2", "b3", "b4", "a2", "a3", "a4", "h1", "h2", "h3", "h4", "b_sq"]
    );
    assert_eq!(table.rows.len(), 100);

    // first row: everything zero except h1 = 1
    let first = &table.rows[0];
    assert_eq!(first[0], 0.0);
    for &x in &first[1..8] {
        assert_eq!(x, 0.0);
    }
    assert_eq!(first[8], 1.0);

    // last row at t = 2 pi (the default horizon is one period): b ~ 0, a2 ~ -2 pi
    let last = table.rows.last().unwrap();
    assert!((last[0] - 2.0 * PI).abs() < 1e-15);
    for &b in &last[1..5] {
        assert!(b.abs() < 1e-12);
    }
    assert!((last[5] + 2.0 * PI).abs() < 1e-12);
}

#[test]
fn geodesic_rows_reverify_against_the_closed_form() {
    let path = temp_path("geodesic.csv");
    let out = qheis(
        &[
            &["geodesic"],
            &REFERENCE[..],
            &["--t-max", "7.5", "--samples", "211", "--out", path.to_str().unwrap()],
        ]
        .concat(),
    );
    assert!(out.status.success());

    let table = Table::from_csv(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let gp = GeodesicParams::from_covector([1.0, 0.0, 0.0, 0.0], [1.0, 0.0, 0.0]);
    for row in &table.rows {
        let t = row[0];
        let p = gp.point(t);
        let h = gp.vertical(t);
        let expected: Vec<f64> = [p.b.to_array().as_slice(), &p.a, &h, &[p.b.norm_sq()]].concat();
        for (got, want) in row[1..].iter().zip(expected) {
            assert!((got - want).abs() <= 1e-12 * (1.0 + want.abs()), "{got} vs {want}");
        }
    }
    std::fs::remove_file(&path).ok();
}

#[test]
fn geodesic_degenerate_params_emit_a_straight_line() {
    let out = qheis(&[
        "geodesic",
        "--covector",
        "0.5,-0.25,0,0",
        "--c567",
        "0,0,0",
        "--t-max",
        "2",
        "--samples",
        "5",
    ]);
    assert!(out.status.success());
    let table = Table::from_csv(&stdout_str(&out)).unwrap();
    for row in &table.rows {
        let t = row[0];
        assert_eq!(row[1], 0.5 * t);
        assert_eq!(row[2], -0.25 * t);
        // vertical block stays at the origin
        assert_eq!(&row[5..8], &[0.0, 0.0, 0.0]);
    }
}

#[test]
fn geodesic_supports_json_output() {
    let out = qheis(&[&["geodesic"], &REFERENCE[..], &["--samples", "3", "--format", "json"]].concat());
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(doc["meta"]["command"], "geodesic");
    assert_eq!(doc["meta"]["params"]["frequency"], 1.0);
    assert_eq!(doc["meta"]["columns"][0], "t");
    assert_eq!(doc["rows"].as_array().unwrap().len(), 3);
}

#[test]
fn solution_constants_flag_matches_covector_route() {
    // C2 = C5 = 1 is the covector (1,0,0,0) with vertical constants (1,0,0)
    let via_constants = qheis(&["geodesic", "--constants", "0,1,0,0,1,0,0", "--samples", "50"]);
    let via_covector = qheis(&[&["geodesic"], &REFERENCE[..], &["--samples", "50"]].concat());
    assert!(via_constants.status.success());
    assert_eq!(stdout_str(&via_constants), stdout_str(&via_covector));

    // the long-form alias is accepted too
    let via_alias = qheis(&["geodesic", "--paper-constants", "0,1,0,0,1,0,0", "--samples", "50"]);
    assert!(via_alias.status.success());
    assert_eq!(stdout_str(&via_alias), stdout_str(&via_constants));
}

#[test]
fn orbit_d_rows_at_the_period_coincide() {
    let out = qheis(
        &[
            &["orbit"],
            &REFERENCE[..],
            &["--side", "d", "--axis", "1,0,0", "--s-samples", "7", "--samples", "9"],
        ]
        .concat(),
    );
    assert!(out.status.success());
    let table = Table::from_csv(&stdout_str(&out)).unwrap();
    assert_eq!(table.columns, ["s", "t", "a2", "a3", "a4", "b1", "b2", "b3", "b4"]);

    let expected = [-2.0 * PI, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0];
    let mut found = 0;
    for row in &table.rows {
        if (row[1] - 2.0 * PI).abs() < 1e-12 {
            found += 1;
            for (x, want) in row[2..].iter().zip(expected) {
                assert!((x - want).abs() < 1e-11, "{x} vs {want}");
            }
        }
    }
    assert_eq!(found, 7, "one row per s at t = 2 pi");
}

#[test]
fn orbit_zero_slice_equals_the_geodesic() {
    let orbit = qheis(
        &[
            &["orbit"],
            &REFERENCE[..],
            &["--side", "c", "--axis", "1,1,-1", "--s-samples", "3", "--s-max", "1", "--samples", "40"],
        ]
        .concat(),
    );
    assert!(orbit.status.success());
    let orbit = Table::from_csv(&stdout_str(&orbit)).unwrap();

    let geodesic = qheis(&[&["geodesic"], &REFERENCE[..], &["--samples", "40"]].concat());
    let geodesic = Table::from_csv(&stdout_str(&geodesic)).unwrap();

    let zero_slice: Vec<_> = orbit.rows.iter().filter(|r| r[0] == 0.0).collect();
    assert_eq!(zero_slice.len(), 40);
    for (orbit_row, geo_row) in zero_slice.iter().zip(&geodesic.rows) {
        assert_eq!(orbit_row[1], geo_row[0]); // t
        // orbit stores (a2,a3,a4,b1..b4); geodesic stores (b1..b4,a2..a4)
        let a = &orbit_row[2..5];
        let b = &orbit_row[5..9];
        for i in 0..4 {
            assert!((b[i] - geo_row[1 + i]).abs() < 1e-15);
        }
        for i in 0..3 {
            assert!((a[i] - geo_row[5 + i]).abs() < 1e-15);
        }
    }
}

#[test]
fn jacobian_table_sign_pattern() {
    let out = qheis(&["jacobian", "--tau-max", "12.566370614359172", "--samples", "1001"]);
    assert!(out.status.success());
    let table = Table::from_csv(&stdout_str(&out)).unwrap();
    assert_eq!(table.columns, ["tau", "j_expanded", "j_factored", "f"]);
    for row in &table.rows {
        let (tau, j_exp, j_fact) = (row[0], row[1], row[2]);
        assert!((j_exp - j_fact).abs() < 1e-9 * (1.0 + tau.powi(4)));
        if tau > 0.05 && tau < 2.0 * PI - 0.05 {
            assert!(j_fact > 0.0, "J({tau}) <= 0 before the first conjugate point");
        }
        if (tau - 2.0 * PI).abs() < 1e-12 {
            assert!(j_fact.abs() < 1e-9);
        }
    }
}

#[test]
fn maxwell_report_text_and_json() {
    let text = qheis(&[&["maxwell"], &REFERENCE[..]].concat());
    assert!(text.status.success());
    let body = stdout_str(&text);
    assert!(body.contains("maxwell time"), "{body}");
    assert!(body.contains("6.28318530717958"), "{body}");

    let json = qheis(&[&["maxwell"], &REFERENCE[..], &["--format", "json"]].concat());
    assert!(json.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&json)).unwrap();
    assert!((doc["maxwell_time"].as_f64().unwrap() - 2.0 * PI).abs() < 1e-15);
    assert!((doc["maxwell_point"][0].as_f64().unwrap() + 2.0 * PI).abs() < 1e-12);
    assert!((doc["cut_time"].as_f64().unwrap() - 2.0 * PI).abs() < 1e-15);
    assert!((doc["first_conjugate_tau"].as_f64().unwrap() - 2.0 * PI).abs() < 1e-10);
}

#[test]
fn maxwell_degenerate_reports_unbounded() {
    let out = qheis(&["maxwell", "--covector", "1,0,0,0", "--c567", "0,0,0"]);
    assert!(out.status.success());
    assert!(stdout_str(&out).contains("unbounded"));
}

#[test]
fn verify_passes_and_is_deterministic() {
    let path = temp_path("verify.json");
    let first = qheis(&["verify", "--seed", "0", "--out", path.to_str().unwrap()]);
    assert!(
        first.status.success(),
        "{}",
        String::from_utf8_lossy(&first.stderr)
    );
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["passed"], true);
    std::fs::remove_file(&path).ok();

    let second = qheis(&["verify", "--seed", "0"]);
    assert!(second.status.success());
    let third = qheis(&["verify", "--seed", "0"]);
    assert_eq!(stdout_str(&second), stdout_str(&third));
}

#[test]
fn usage_errors_exit_two() {
    // no parametrization at all
    let out = qheis(&["geodesic"]);
    assert_eq!(out.status.code(), Some(2));

    // both parametrizations at once (rejected by clap)
    let out = qheis(
        &[
            &["geodesic"],
            &REFERENCE[..],
            &["--constants", "0,1,0,0,1,0,0"],
        ]
        .concat(),
    );
    assert_eq!(out.status.code(), Some(2));

    // malformed numbers
    let out = qheis(&["geodesic", "--covector", "1,0,zero,0", "--c567", "1,0,0"]);
    assert_eq!(out.status.code(), Some(2));

    // wrong arity
    let out = qheis(&["geodesic", "--covector", "1,0,0", "--c567", "1,0,0"]);
    assert_eq!(out.status.code(), Some(2));

    // too few samples
    let out = qheis(&[&["geodesic"], &REFERENCE[..], &["--samples", "1"]].concat());
    assert_eq!(out.status.code(), Some(2));

    // degenerate constants route
    let out = qheis(&["geodesic", "--constants", "0,1,0,0,0,0,0"]);
    assert_eq!(out.status.code(), Some(2));

    // zero orbit axis
    let out = qheis(
        &[&["orbit"], &REFERENCE[..], &["--side", "d", "--axis", "0,0,0"]].concat(),
    );
    assert_eq!(out.status.code(), Some(2));

    // unknown subcommand
    let out = qheis(&["nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}
