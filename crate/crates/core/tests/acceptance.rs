//! Acceptance criteria. Each criterion prints one PASS/FAIL line; the
//! process exits non-zero if any fails.

use std::process::Command;
use std::time::{Duration, Instant};

use stirling_odf::cli::{self, default_sweep, EXIT_VIOLATION};
use stirling_odf::combinatorics::{
    factorial, odd_double_factorial, set_partition_block_counts, stirling1_oracle_poly,
    stirling2_oracle_explicit, StirlingKind, StirlingTriangle,
};
use stirling_odf::identities::{
    build_eq3_rhs_poly, derivation_coherence, interpolate_stirling_diagonal, run_suite, verify_eq4,
    IdentityId, IdentityReport, Sweep, Tables, Value,
};
use stirling_odf::{ExactInt, ExactRat, Execution};

type Outcome = Result<(), String>;

/// Name, optional wall-clock limit in seconds, check.
type Criterion = (&'static str, Option<u64>, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_pass(reports: &[IdentityReport], expected_checked: &[usize]) -> Outcome {
    for (r, &n) in reports.iter().zip(expected_checked) {
        ensure(r.passed(), || format!("{} failed: {:?}", r.id, r.counterexamples.first()))?;
        ensure(r.checked == n, || format!("{} checked {} points, expected {n}", r.id, r.checked))?;
    }
    Ok(())
}

fn eq4_sweep() -> Outcome {
    let out = run_cli(&["verify", "eq4", "--k-max", "60"]);
    ensure(out.0 == 0, || format!("verify eq4 exited {}", out.0))?;
    ensure(out.1.starts_with("EQ4 pass checked=61"), || out.1.clone())?;
    let t = Tables::with_rows(0, 6);
    for (k, v) in [(2, 3), (3, 15)] {
        let c = verify_eq4(&t, k);
        ensure(c.holds && c.rhs == Value::Int(v.into()), || format!("k = {k}: {c:?}"))?;
    }
    Ok(())
}

fn derivation() -> Outcome {
    let t = Tables::with_rows(31, 20);
    for k in 0..=10 {
        let interp = interpolate_stirling_diagonal(&t, k);
        let rhs = build_eq3_rhs_poly(&t, k).map_err(|e| e.to_string())?;
        ensure(interp == rhs, || format!("k = {k}: {interp:?} != {rhs:?}"))?;
        ensure(interp.degree() == Some(2 * k), || format!("k = {k}: degree {:?}", interp.degree()))?;
        let lead = ExactRat::new(odd_double_factorial(k as u64), factorial(2 * k as u64)).unwrap();
        ensure(interp.leading_coeff().ok() == Some(&lead), || format!("k = {k}: leading coefficient"))?;
        let c = derivation_coherence(&t, k);
        ensure(c.holds, || format!("k = {k}: derivation incoherent {c:?}"))?;
    }
    Ok(())
}

fn eq3_chain() -> Outcome {
    let req = [(IdentityId::Eq3Chain, Sweep::Pairs { n: 1..=40, k: 0..=12 })];
    let reports = run_suite(&req, Execution::default()).map_err(|e| e.to_string())?;
    // Σ_{k=0}^{12} (40 − k)
    all_pass(&reports, &[(0..=12).map(|k| 40 - k).sum()])
}

fn polynomial_and_pointwise() -> Outcome {
    let sweeps = [
        (IdentityId::Eq1, Sweep::Single(0..=50), 51),
        (IdentityId::Eq2, Sweep::Single(0..=50), 51),
        (IdentityId::Gould1332, Sweep::Pairs { n: 1..=40, k: 0..=40 }, (1..=40).map(|n| n + 1).sum()),
        (IdentityId::Gould1434, Sweep::Single(0..=60), 61),
        (IdentityId::Callan53, Sweep::Single(0..=60), 61),
        (IdentityId::UnitSum, Sweep::Single(0..=60), 61),
    ];
    for (id, sweep, checked) in sweeps {
        let start = Instant::now();
        let reports = run_suite(&[(id, sweep)], Execution::default()).map_err(|e| e.to_string())?;
        all_pass(&reports, &[checked])?;
        let took = start.elapsed();
        ensure(took < Duration::from_secs(10), || format!("{id} sweep took {took:?}"))?;
    }
    Ok(())
}

fn oracle_equivalence() -> Outcome {
    let second = StirlingTriangle::with_rows(StirlingKind::Second, 30);
    for n in 0..=30 {
        for k in 0..=n {
            ensure(second.get(n, k) == stirling2_oracle_explicit(n, k), || format!("S({n},{k}) explicit"))?;
        }
    }
    for n in 0..=12 {
        let counts = set_partition_block_counts(n).map_err(|e| e.to_string())?;
        for (k, c) in counts.into_iter().enumerate() {
            ensure(second.get(n, k) == ExactInt::from(c), || format!("S({n},{k}) enumeration"))?;
        }
    }
    let first = StirlingTriangle::with_rows(StirlingKind::FirstSigned, 30);
    for n in 0..=30 {
        ensure(first.row(n) == Some(stirling1_oracle_poly(n).as_slice()), || format!("s row {n}"))?;
    }
    Ok(())
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(std::iter::once("stirling-odf").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

fn mutation_sensitivity() -> Outcome {
    // the library route, every stored entry of both triangles up to row 8
    let requests: Vec<_> = IdentityId::ALL.iter().map(|&id| (id, default_sweep(id, 8, 8))).collect();
    let (first, second) = stirling_odf::identities::rows_required(&requests);
    let clean = Tables::with_rows(first, second);
    for (kind, name) in [(StirlingKind::FirstSigned, "stirling1"), (StirlingKind::Second, "stirling2")] {
        for n in 0..=8 {
            for k in 0..=n {
                let mut t = clean.clone();
                let tri = t.triangle_mut(kind);
                tri.set_entry(n, k, tri.get(n, k) + 1).unwrap();
                let reports =
                    stirling_odf::identities::run_suite_on(&requests, &mut t, Execution::default())
                        .map_err(|e| e.to_string())?;
                ensure(reports.iter().any(|r| !r.counterexamples.is_empty()), || {
                    format!("{name}({n},{k}) corruption undetected")
                })?;

                // and the CLI contract
                let spec = format!("{name}:{n}:{k}");
                let (code, json) = run_cli(&[
                    "verify", "all", "--k-max", "8", "--n-max", "8", "--format", "json", "--corrupt", &spec,
                ]);
                ensure(code == EXIT_VIOLATION, || format!("{spec}: exit {code}"))?;
                let v: serde_json::Value = serde_json::from_str(&json).map_err(|e| e.to_string())?;
                let any_ce = v
                    .as_array()
                    .into_iter()
                    .flatten()
                    .any(|r| r["counterexamples"].as_array().is_some_and(|a| !a.is_empty()));
                ensure(any_ce, || format!("{spec}: no counterexamples printed"))?;
            }
        }
    }
    Ok(())
}

fn cli_determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_stirling-odf"))
            .args(["verify", "all", "--k-max", "12", "--n-max", "25", "--format", "json"])
            .output()
            .map_err(|e| e.to_string())
    };
    let a = run()?;
    let b = run()?;
    ensure(a.status.code() == Some(0), || format!("first run exited {:?}", a.status.code()))?;
    ensure(b.status.code() == Some(0), || format!("second run exited {:?}", b.status.code()))?;
    ensure(a.stdout == b.stdout, || "outputs differ".into())?;
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).map_err(|e| e.to_string())?;
    ensure(v.as_array().map(Vec::len) == Some(10), || "expected 10 reports".into())
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("1 odd double factorial sum, k <= 60", Some(10), eq4_sweep),
        ("2 derivation: interpolated diagonal = C(n,k)/(n+j) form, k <= 10", Some(5), derivation),
        ("3 three-expression chain, k <= 12, k+1 <= n <= 40", Some(10), eq3_chain),
        ("4 Eq1/Eq2 n <= 50, Gould 13.32 n <= 40, Gould 14.34/Callan k <= 60, unit sum n <= 60", Some(60), polynomial_and_pointwise),
        ("5 Stirling tables = independent oracles", None, oracle_equivalence),
        ("6 single-entry corruption (n <= 8) makes verify all exit 1", None, mutation_sensitivity),
        ("7 verify all --format json is byte-identical across runs", None, cli_determinism),
    ];
    let mut failed = 0;
    for (name, limit, f) in criteria {
        let start = Instant::now();
        let mut outcome = f();
        let took = start.elapsed();
        if let (Ok(()), Some(secs)) = (&outcome, limit) {
            if took > Duration::from_secs(secs) {
                outcome = Err(format!("took {took:?}, limit {secs}s"));
            }
        }
        match outcome {
            Ok(()) => println!("PASS  criterion {name}  ({:.2?})", took),
            Err(e) => {
                failed += 1;
                println!("FAIL  criterion {name}  ({:.2?}): {e}", took);
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
