//! End-to-end runs of the `hecke` binary.

use std::process::Command;

use hecke_forms::cli::parse_scalars;
use hecke_forms::exact::Scalar;
use hecke_forms::hecke::HeckeAlgebra;
use hecke_forms::prinseries::PrincipalSeries;

fn hecke(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hecke"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn csv_cells(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .map(|l| l.split(',').map(|c| c.trim_matches('"').to_string()).collect())
        .collect()
}

#[test]
fn gram_csv_and_json_reload_exactly() {
    let h = HeckeAlgebra::from_label("A2", &[]).unwrap();
    let nu_text = "3/2+i,3/2-i";
    let nu = h.rs.from_coweight_coords(&parse_scalars(&h, nu_text).unwrap());
    let expected = PrincipalSeries::new(&h, nu).unwrap().star_gram().unwrap();

    let (code, out, _) = hecke(&["gram", "--type", "A2", "--form", "star", "--nu", nu_text, "--out", "csv"]);
    assert_eq!(code, 0);
    let rows = csv_cells(&out);
    assert_eq!(rows.len(), 6);
    for (x, row) in rows.iter().enumerate() {
        for (y, cell) in row.iter().enumerate() {
            let v: Vec<Scalar> = parse_scalars(&h, cell).unwrap();
            assert_eq!(v[0], expected[(x, y)]);
        }
    }

    let (code, out, _) = hecke(&["gram", "--type", "A2", "--form", "star", "--nu", nu_text, "--out", "json"]);
    assert_eq!(code, 0);
    let json: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(json["schema"], "hecke-forms/1");
    assert_eq!(json["hermitian"], true);
    for (x, row) in json["gram"].as_array().unwrap().iter().enumerate() {
        for (y, cell) in row.as_array().unwrap().iter().enumerate() {
            let v = parse_scalars(&h, cell.as_str().unwrap()).unwrap();
            assert_eq!(v[0], expected[(x, y)]);
        }
    }
}

#[test]
fn config_file_sets_type_and_parameters() {
    let dir = std::env::temp_dir().join(format!("hecke-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("b2.cfg");
    std::fs::write(&path, "# unequal parameters\ntype = B\nrank = 2\nk = 1, 2\n").unwrap();
    let (code, out, _) = hecke(&["--config", path.to_str().unwrap(), "roots", "info", "--out", "json"]);
    assert_eq!(code, 0);
    let json: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(json["type"], "B2");
    assert_eq!(json["k_simple"], serde_json::json!(["1", "2"]));
    let (code, _, _) = hecke(&["--config", path.to_str().unwrap(), "classify"]);
    assert_eq!(code, 0);

    std::fs::write(&path, "colour = red\n").unwrap();
    let (code, _, _) = hecke(&["--config", path.to_str().unwrap(), "roots", "info"]);
    assert_eq!(code, 2);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn exit_codes() {
    assert_eq!(hecke(&["normalize", "--type", "B2", "x1*x2 - x2*x1"]).0, 0);
    assert_eq!(hecke(&["gram", "--type", "A1", "--form", "bullet", "--nu", "1+i"]).0, 1);
    assert_eq!(hecke(&["normalize", "--type", "A1", "x3"]).0, 2);
    assert_eq!(hecke(&["normalize", "--type", "Q7", "x1"]).0, 2);
    let (code, out, _) = hecke(&["dirac-check", "--type", "A4"]);
    assert_eq!(code, 0);
    assert!(out.contains("= zero") && out.contains("no spin module"), "{out}");
    assert_eq!(hecke(&["bogus"]).0, 2);
    let (code, _, err) = hecke(&["normalize", "--type", "A1", "(x1"]);
    assert_eq!(code, 2);
    assert!(err.contains("line 1, column 4"), "{err}");
}

#[test]
fn scan_csv_has_header_and_rows() {
    let (code, out, _) = hecke(&["signature-scan", "--type", "A2", "--box", "2", "--denom", "2", "--out", "csv"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    let header = lines.next().unwrap();
    assert!(header.starts_with("c1,c2,sign_vector"), "{header}");
    assert!(lines.count() > 0);
}
