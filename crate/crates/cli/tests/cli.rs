use legendre_cli::{catalog, run, EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn legendre(args: &[&str]) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("legendre").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Outcome {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn json(o: &Outcome) -> Value {
    serde_json::from_str(o.stdout.trim_end()).unwrap()
}

#[test]
fn transform_quadratic_csv() {
    let o = legendre(&[
        "transform",
        "--fn",
        "quadratic",
        "--domain",
        "-2:2",
        "--grid",
        "5",
    ]);
    assert_eq!(o.code, EXIT_OK);
    let lines: Vec<&str> = o.stdout.lines().collect();
    assert_eq!(lines.len(), 6);
    assert_eq!(lines[0], "y,x,G");
    assert_eq!(lines[3], "0,0,0");
    assert!(o.stdout.ends_with('\n') && !o.stdout.contains('\r'));
    for line in &lines[1..] {
        let fields: Vec<f64> = line.split(',').map(|f| f.parse().unwrap()).collect();
        assert_eq!(fields.len(), 3);
        assert!((fields[2] - 0.5 * fields[0] * fields[0]).abs() < 1e-12);
    }
}

#[test]
fn transform_json_rows() {
    let o = legendre(&[
        "transform",
        "--fn",
        "exp",
        "--grid",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(o.code, EXIT_OK);
    let rows = json(&o);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 3);
    for r in rows {
        let (y, g) = (r["y"].as_f64().unwrap(), r["G"].as_f64().unwrap());
        assert!((g - (y * y.ln() - y)).abs() < 1e-10);
        assert!((r["x"].as_f64().unwrap() - y.ln()).abs() < 1e-10);
    }
}

#[test]
fn involution_report_schema() {
    let o = legendre(&[
        "check",
        "involution",
        "--fn",
        "exp",
        "--domain",
        "-1:1",
        "--tol",
        "1e-6",
    ]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let v = json(&o);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    for key in [
        "check_name",
        "function",
        "domain",
        "max_abs_error",
        "tolerance",
        "pass",
        "points_evaluated",
    ] {
        assert!(keys.contains(&key), "missing {key}");
    }
    assert_eq!(v["check_name"], "involution");
    assert_eq!(v["function"], "exp");
    assert_eq!(v["pass"], true);
    assert_eq!(v["points_evaluated"], 201);
    assert_eq!(v["domain"]["lo"], -1.0);
}

#[test]
fn area_mixed_box() {
    let o = legendre(&[
        "check",
        "area",
        "--fn",
        "shifted-quadratic",
        "--box",
        "1:-1",
        "--xs",
        "0.5,0.25",
    ]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let v = json(&o);
    assert!((v["a0"].as_f64().unwrap() - 0.5).abs() <= 1e-8);
    assert_eq!(v["pass"], true);
    assert_eq!(v["case"], "PN");
    let points = v["points"].as_array().unwrap();
    assert_eq!(points.len(), 2);
    for key in ["x", "y", "f_tilde", "g_tilde", "residual"] {
        assert!(points[0].get(key).is_some(), "missing {key}");
    }
}

#[test]
fn area_box_violation_and_out_of_range_corner() {
    let o = legendre(&[
        "check",
        "area",
        "--fn",
        "shifted-quadratic",
        "--box",
        "1:-1",
        "--xs",
        "1.5",
    ]);
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.stderr.contains("BoxViolation"), "{}", o.stderr);
    let o = legendre(&[
        "check",
        "area",
        "--fn",
        "shifted-quadratic",
        "--box",
        "1:-5",
    ]);
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.stderr.contains("ConjugateOutOfRange"), "{}", o.stderr);
}

#[test]
fn failing_check_exits_one_and_still_reports() {
    let o = legendre(&["check", "involution", "--fn", "cosh", "--tol", "0"]);
    assert_eq!(o.code, EXIT_CHECK_FAILED);
    assert_eq!(json(&o)["pass"], false);
}

#[test]
fn usage_errors_name_the_flag() {
    let o = legendre(&["transform", "--fn", "exp", "--grid", "3", "--bogus"]);
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.stderr.contains("--bogus"));
    assert!(o.stdout.is_empty());

    let o = legendre(&["transform", "--fn", "exp", "--domain", "1:0", "--grid", "3"]);
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.stderr.contains("--domain"), "{}", o.stderr);

    let o = legendre(&[
        "check",
        "oracle",
        "--fn",
        "exp",
        "--samples",
        "1",
        "--grid",
        "3",
    ]);
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.stderr.contains("--samples"), "{}", o.stderr);

    let o = legendre(&["transform", "--fn", "exp"]);
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.stderr.contains("--grid"), "{}", o.stderr);
}

#[test]
fn input_errors_print_error_name() {
    let o = legendre(&[
        "check",
        "fenchel-young",
        "--fn",
        "poly:0,0,0,1",
        "--domain",
        "-1:1",
    ]);
    assert_eq!(o.code, EXIT_USAGE);
    assert!(
        o.stderr.starts_with("error: NonMonotoneDerivative"),
        "{}",
        o.stderr
    );

    let o = legendre(&["check", "involution", "--fn", "sine"]);
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.stderr.contains("UnknownFunction"));

    let o = legendre(&["check", "involution", "--fn", "poly:0,0,0.5"]);
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.stderr.contains("--domain"));
}

#[test]
fn poly_spec_matches_catalog_output() {
    let a = legendre(&[
        "transform",
        "--fn",
        "poly:0,0,0.5",
        "--domain",
        "-2:2",
        "--grid",
        "9",
    ]);
    let b = legendre(&["transform", "--fn", "quadratic", "--grid", "9"]);
    assert_eq!(a.code, EXIT_OK);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn help_exits_zero() {
    let o = legendre(&["--help"]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.contains("transform"));
}

#[test]
fn catalog_passes_checks_on_default_domains() {
    for entry in catalog() {
        let name = entry.name.as_str();
        let runs: [&[&str]; 3] = [
            &["check", "involution", "--fn", name],
            &["check", "fenchel-young", "--fn", name],
            &[
                "check",
                "oracle",
                "--fn",
                name,
                "--samples",
                "401",
                "--grid",
                "33",
            ],
        ];
        for args in runs {
            let o = legendre(args);
            assert_eq!(o.code, EXIT_OK, "{args:?}: {} {}", o.stdout, o.stderr);
        }
        let o = legendre(&["check", "area", "--fn", name]);
        if name == "quartic" {
            // x^4/4 on [0.1, 2] has f > 0 and no x = 0: no axis base point.
            assert_eq!(o.code, EXIT_USAGE);
            assert!(o.stderr.contains("NoAxisIntersection"));
        } else {
            assert_eq!(o.code, EXIT_OK, "{name}: {} {}", o.stdout, o.stderr);
        }
    }
}

#[test]
fn binary_matches_library_entry_point() {
    let args = ["check", "area", "--fn", "exp", "--box", "-1:1"];
    let lib = legendre(&args);
    let bin = std::process::Command::new(env!("CARGO_BIN_EXE_legendre"))
        .args(args)
        .output()
        .unwrap();
    assert_eq!(bin.status.code(), Some(lib.code));
    assert_eq!(String::from_utf8(bin.stdout).unwrap(), lib.stdout);

    let bin = std::process::Command::new(env!("CARGO_BIN_EXE_legendre"))
        .args([
            "check",
            "involution",
            "--fn",
            "poly:0,0,0,1",
            "--domain",
            "-1:1",
        ])
        .output()
        .unwrap();
    assert_eq!(bin.status.code(), Some(EXIT_USAGE));
}
