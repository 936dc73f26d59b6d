//! End-to-end runs of the command line front end on the bundled data files.

use std::path::PathBuf;

use dkring::cli::{load, run, Input};
use dkring::nc_geometry::StructAlgebra;
use dkring::CoeffRing;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("examples/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn table_csv(file: &str, extra: &[&str]) -> (i32, Vec<String>) {
    let path = data(file);
    let mut args = vec!["dkring", "table", "--input", &path, "--format", "csv"];
    args.extend_from_slice(extra);
    let r = run(args);
    (r.code, r.stdout.lines().map(str::to_string).collect())
}

#[test]
fn sphere_has_one_class_in_degree_two() {
    let (code, lines) = table_csv("sphere2.json", &[]);
    assert_eq!(code, 0);
    let nonzero: Vec<_> = lines.iter().skip(1).filter(|l| !l.contains(",0,")).collect();
    assert_eq!(nonzero.len(), 1, "{lines:?}");
    assert!(nonzero[0].contains(",2,1,"), "{lines:?}");
}

#[test]
fn multiplication_by_two_leaves_torsion() {
    let (code, lines) = table_csv("times_two.json", &[]);
    assert_eq!(code, 0);
    assert!(lines.iter().any(|l| l.contains(",1,0,2")), "{lines:?}");
    let (code, lines) = table_csv("times_two.json", &["--ring", "zmod:2"]);
    assert_eq!(code, 0);
    assert!(!lines.iter().any(|l| l.contains(",0,2") || l.contains(",1,0,2")), "{lines:?}");
}

#[test]
fn hochschild_ranks_of_the_test_algebras() {
    let ranks = |file: &str| -> Vec<String> {
        let (code, lines) = table_csv(file, &[]);
        assert_eq!(code, 0, "{lines:?}");
        lines.iter().skip(1).map(|l| l.split(',').nth(3).unwrap().to_string()).collect()
    };
    assert_eq!(ranks("dual_numbers.json"), ["2", "2", "2"]);
    assert_eq!(ranks("upper_triangular.json"), ["3", "6", "12"]);
}

#[test]
fn bundled_algebras_match_the_built_in_ones() {
    let z2 = CoeffRing::Modular(2);
    for (file, built) in [
        ("dual_numbers.json", StructAlgebra::dual_numbers(z2)),
        ("upper_triangular.json", StructAlgebra::upper_triangular(z2)),
    ] {
        match load(data(file).as_ref()).unwrap() {
            Input::Algebra(s) => assert_eq!(s.to_json(), built.to_json(), "{file}"),
            Input::Complex(_) => panic!("{file} loaded as a complex"),
        }
    }
}

#[test]
fn exit_codes() {
    let sphere = data("sphere2.json");
    assert_eq!(run(["dkring", "table", "--input", &sphere, "--rmax", "1"]).code, 3);
    assert_eq!(run(["dkring", "table", "--input", "/nonexistent.json"]).code, 2);
    assert_eq!(run(["dkring", "verify", "--format", "xml"]).code, 2);
    assert_eq!(run(["dkring", "verify", "--ring", "zmod:4", "--suite", "doldkan"]).code, 2);
    assert_eq!(run(["dkring", "verify", "--suite", "yangbaxter,qttq"]).code, 0);
}

#[test]
fn verify_is_deterministic_and_sorted() {
    let args = ["dkring", "verify", "--suite", "kequivq,doldkan,cohotv", "--seed", "11", "--format", "csv"];
    let a = run(args);
    assert_eq!(a.code, 0, "{}", a.stderr);
    assert_eq!(a.stdout, run(args).stdout);
    let rows: Vec<&str> = a.stdout.lines().skip(1).collect();
    let mut sorted = rows.clone();
    sorted.sort();
    assert_eq!(rows, sorted);
    let other = run(["dkring", "verify", "--suite", "doldkan", "--seed", "11", "--format", "csv"]);
    let doldkan: Vec<&str> = rows.iter().copied().filter(|r| r.starts_with("doldkan")).collect();
    assert_eq!(other.stdout.lines().skip(1).collect::<Vec<_>>(), doldkan);
}

#[test]
fn verify_json_reports_counts() {
    let r = run(["dkring", "verify", "--suite", "cohotv", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["failed"], 0);
    assert_eq!(v["passed"].as_u64().unwrap() as usize, v["checks"].as_array().unwrap().len());
}

#[test]
fn omega_and_amitsur_run_on_input() {
    let s = data("dual_numbers.json");
    let o = run(["dkring", "omega", "--input", &s, "--levels", "2", "--format", "csv"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert!(o.stdout.lines().count() > 1);
    let a = run(["dkring", "amitsur", "--input", &s, "--levels", "2"]);
    assert_eq!(a.code, 0, "{}", a.stderr);
}
