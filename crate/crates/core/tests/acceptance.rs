//! Runs every acceptance criterion at the default bounds (levels 4, r_max 5,
//! w_max 3, seed 0) and prints one pass/fail line per criterion. Exits
//! nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use dkring::verify::{run_suites, Check, SuiteParams};

struct Criterion {
    name: &'static str,
    suites: &'static [&'static str],
    /// Keeps only the checks of the suites that belong to this criterion.
    select: fn(&Check) -> bool,
}

fn all(_: &Check) -> bool {
    true
}

fn retraction(c: &Check) -> bool {
    c.check.starts_with("p̂j = 1")
}

fn mixed(c: &Check) -> bool {
    !retraction(c)
}

const CRITERIA: &[Criterion] = &[
    Criterion { name: "Dold-Kan round trip N(K(A)) = A", suites: &["doldkan"], select: all },
    Criterion { name: "Fin-functoriality of Q (and K)", suites: &["functoriality"], select: all },
    Criterion { name: "retraction: p̂j = 1 and [h, ∂] = 1 − jp̂", suites: &["kequivq"], select: retraction },
    Criterion {
        name: "mixed complexes: μl = 0, ld = Bl, p̂B = Dp̂, H(NQA, μ) ≅ A, rescaled p̂ over Z/5",
        suites: &["kequivq"],
        select: mixed,
    },
    Criterion { name: "word complexes: spheres, ker p, p(ε_n) = n!", suites: &["cohotv"], select: all },
    Criterion { name: "υ, (QA, ∘) Fin-ring, p̂ ring map, gr_F", suites: &["monoidal"], select: all },
    Criterion { name: "l: A → πQA graded-ring iso, B a ⋆-derivation", suites: &["propi"], select: all },
    Criterion {
        name: "τ, Yang-Baxter, δ-products, ᾱ ring iso on the Amitsur complex",
        suites: &["yangbaxter", "nusbo"],
        select: all,
    },
    Criterion { name: "QΩ ≅ ∐S and Q Z<0,1> ≅ ⊕Z", suites: &["qomega"], select: all },
    Criterion { name: "H_n(N∐S, μ) ≅ Ω^n as modules and rings", suites: &["nchkr"], select: all },
    Criterion { name: "TQ ≅ QT and Q(D(0) ∐ D(0)) ≅ QD(0) ∐ QD(0)", suites: &["qttq"], select: all },
];

fn run_criterion(c: &Criterion, params: &SuiteParams) -> (bool, String) {
    let names: Vec<String> = c.suites.iter().map(|s| s.to_string()).collect();
    match run_suites(&names, params) {
        Err(e) => (false, format!("error: {e}")),
        Ok(checks) => {
            let chosen: Vec<&Check> = checks.iter().filter(|k| (c.select)(k)).collect();
            let failed: Vec<String> = chosen
                .iter()
                .filter(|k| !k.passed)
                .map(|k| format!("{}: {} ({})", k.suite, k.check, k.detail))
                .collect();
            if chosen.is_empty() {
                (false, "no checks selected".into())
            } else if failed.is_empty() {
                let cases: usize = chosen.iter().map(|k| k.cases).sum();
                (true, format!("{} checks, {cases} cases", chosen.len()))
            } else {
                (false, failed.join("; "))
            }
        }
    }
}

fn determinism() -> (bool, String) {
    let args = ["dkring", "verify", "--seed", "0"];
    let a = dkring::cli::run(args);
    let b = dkring::cli::run(args);
    if a.code != 0 {
        return (false, format!("verify exited {}: {}", a.code, a.stderr.trim()));
    }
    if a.stdout != b.stdout || a.code != b.code {
        return (false, "two runs with seed 0 differ".into());
    }
    let c = dkring::cli::run(["dkring", "verify", "--seed", "0", "--format", "csv"]);
    let d = dkring::cli::run(["dkring", "verify", "--seed", "0", "--format", "csv"]);
    if c.stdout != d.stdout {
        return (false, "two csv runs with seed 0 differ".into());
    }
    (true, format!("{} bytes of json, {} bytes of csv, identical", a.stdout.len(), c.stdout.len()))
}

fn main() -> ExitCode {
    let params = SuiteParams::default();
    let mut failures = 0;
    let mut report = |i: usize, name: &str, (ok, detail): (bool, String), secs: f64| {
        let status = if ok { "pass" } else { "FAIL" };
        println!("criterion {i:>2} {status}  {name}  [{detail}, {secs:.1}s]");
        if !ok {
            failures += 1;
        }
    };
    for (i, c) in CRITERIA.iter().enumerate() {
        let t = Instant::now();
        let r = run_criterion(c, &params);
        report(i + 1, c.name, r, t.elapsed().as_secs_f64());
    }
    let t = Instant::now();
    let r = determinism();
    report(12, "verify output is byte-identical across runs", r, t.elapsed().as_secs_f64());
    println!("{} of 12 criteria passed", 12 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
