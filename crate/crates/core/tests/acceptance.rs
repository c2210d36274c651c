//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits non-zero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use mzv_core::mzv::{enumerate_index_sets, index_word, mzv_bruteforce, MzvCache};
use mzv_core::verify::Status;
use mzv_core::{run_all, BigFloat, Config, IndexSet, Report, Suite, ZetaEngine};

const BRUTE_TERMS: u64 = 4000;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn config(suites: &[Suite], weights: (u32, u32), tol: f64) -> Config {
    Config { digits: 50, weights, tol, suites: suites.to_vec(), jobs: None }
}

fn run(cfg: &Config, engine: &ZetaEngine) -> Report {
    run_all(cfg, engine).expect("valid configuration")
}

fn max_residual<'a>(checks: impl Iterator<Item = &'a mzv_core::verify::CheckResult>) -> f64 {
    checks.filter_map(|c| c.residual).fold(0.0, f64::max)
}

/// Controls must fail, everything else must pass.
fn report_outcome(r: &Report, extra: &str) -> Outcome {
    let regular: Vec<_> = r.checks.iter().filter(|c| !c.negative_control).collect();
    let controls: Vec<_> = r.checks.iter().filter(|c| c.negative_control).collect();
    let failing: Vec<&str> = regular.iter().filter(|c| !c.passed()).map(|c| c.name.as_str()).collect();
    let undetected: Vec<&str> = controls.iter().filter(|c| !c.passed()).map(|c| c.name.as_str()).collect();
    let ok = failing.is_empty() && undetected.is_empty() && !regular.is_empty();
    let mut d = format!(
        "{} checks pass, {} controls detected, max residual {:.2e}{extra}",
        regular.len() - failing.len(),
        controls.len() - undetected.len(),
        max_residual(regular.iter().copied())
    );
    if !failing.is_empty() {
        d += &format!("; failing: {failing:?}");
    }
    if !undetected.is_empty() {
        d += &format!("; controls not detected: {undetected:?}");
    }
    for msg in &r.diagnostics {
        d += &format!("; diagnostic: {msg}");
    }
    outcome(ok, d)
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let v = f();
    (v, t.elapsed())
}

fn exact_suite() -> Outcome {
    let cfg = config(&[Suite::Exact], (5, 5), 1e-30);
    let (r, dt) = timed(|| run(&cfg, &ZetaEngine::new()));
    let nonzero: Vec<&str> = r
        .checks
        .iter()
        .filter(|c| !c.negative_control && c.residual.is_some_and(|x| x != 0.0))
        .map(|c| c.name.as_str())
        .collect();
    let mut o = report_outcome(&r, &format!(", {:.2}s", dt.as_secs_f64()));
    if !nonzero.is_empty() {
        o.ok = false;
        o.detail += &format!("; nonzero residual: {nonzero:?}");
    }
    if dt >= Duration::from_secs(5) {
        o.ok = false;
        o.detail += "; over 5s";
    }
    o
}

fn sum_formula() -> Outcome {
    let cfg = config(&[Suite::Corollary], (5, 12), 1e-30);
    let (r, dt) = timed(|| run(&cfg, &ZetaEngine::new()));
    let k1: Vec<_> = r.checks.iter().filter(|c| c.name == "sum_formula_k1").collect();
    let ok = k1.len() == 8 && k1.iter().all(|c| c.passed()) && dt < Duration::from_secs(120);
    outcome(ok, format!("{} of 8 weights pass, max residual {:.2e}, cold {:.2}s", k1.iter().filter(|c| c.passed()).count(), max_residual(k1.iter().copied()), dt.as_secs_f64()))
}

fn weighted_sum_formulas() -> Outcome {
    let cfg = config(&[Suite::Corollary], (5, 12), 1e-30);
    let r = run(&cfg, &ZetaEngine::new());
    let weighted: Vec<_> = r.checks.iter().filter(|c| ["sum_formula_k2", "sum_formula_k3", "sum_formula_k4"].contains(&c.name.as_str())).collect();
    let factors = r.find("sum_formula_factors_l5");
    let ok = weighted.len() == 24 && weighted.iter().all(|c| c.passed()) && factors.is_some_and(|c| c.passed());
    outcome(
        ok,
        format!(
            "{} of 24 pass, max residual {:.2e}, integer factors at l=5 {}",
            weighted.iter().filter(|c| c.passed()).count(),
            max_residual(weighted.iter().copied()),
            if factors.is_some_and(|c| c.passed()) { "match" } else { "mismatch" }
        ),
    )
}

fn theorem() -> Outcome {
    let r = run(&config(&[Suite::Theorem], (5, 12), 1e-30), &ZetaEngine::new());
    report_outcome(&r, "")
}

fn series_suites() -> Outcome {
    let r = run(&config(&[Suite::Props, Suite::Appendix], (5, 10), 1e-25), &ZetaEngine::new());
    report_outcome(&r, "")
}

fn cyclic() -> Outcome {
    let r = run(&config(&[Suite::Cyclic], (5, 7), 1e-25), &ZetaEngine::new());
    let n = r.checks.iter().filter(|c| c.name == "cyclic_pointwise").count();
    let expected: usize = (4..=7).map(|w| enumerate_index_sets(4, w, false).len()).sum();
    let mut o = report_outcome(&r, &format!(", {n} index sets"));
    if n != expected {
        o.ok = false;
        o.detail += &format!("; expected {expected} index sets");
    }
    o
}

fn rel(a: &BigFloat, b: &BigFloat) -> f64 {
    (a - b).abs().to_f64() / b.abs().to_f64()
}

fn evaluator() -> Outcome {
    const DIGITS: u32 = 50;
    let e = ZetaEngine::new();
    let z = |s: &str| e.mzv(&s.parse::<IndexSet>().unwrap(), DIGITS).unwrap();
    let mut problems = Vec::new();

    let stuffle = rel(&(&z("2") * &z("3")), &(&(&z("2,3") + &z("3,2")) + &z("5")));
    if stuffle > 1e-45 {
        problems.push(format!("stuffle residual {stuffle:.2e}"));
    }

    let admissible: Vec<IndexSet> = (2..=8).flat_map(|w| (1..w as usize).flat_map(move |d| enumerate_index_sets(d, w, true))).collect();
    let mut worst_dual: f64 = 0.0;
    for l in &admissible {
        let w = index_word(l);
        let d = e.mzv_word(&w.dual(), DIGITS).unwrap();
        worst_dual = worst_dual.max(rel(&d, &e.mzv(l, DIGITS).unwrap()));
    }
    if worst_dual > 1e-45 {
        problems.push(format!("duality residual {worst_dual:.2e}"));
    }

    let mut outside = Vec::new();
    for l in &admissible {
        let bf = mzv_bruteforce(l, BRUTE_TERMS).unwrap();
        let err = (&e.mzv(l, DIGITS).unwrap() - &bf.value).abs().to_f64();
        if err > bf.error_bound {
            outside.push(l.to_string());
        }
    }
    if !outside.is_empty() {
        problems.push(format!("brute force disagrees beyond its bound for {outside:?}"));
    }

    let bits = mzv_core::bigfloat::bits_for_digits(DIGITS);
    let pi = BigFloat::pi(bits);
    let pi2 = &pi * &pi;
    let z2 = rel(&z("2"), &pi2.div_u64(6));
    let z4 = rel(&z("4"), &(&pi2 * &pi2).div_u64(90));
    if z2 > 1e-45 || z4 > 1e-45 {
        problems.push(format!("pi powers: {z2:.2e}, {z4:.2e}"));
    }

    let detail = format!(
        "{} admissible sets, stuffle {stuffle:.1e}, duality {worst_dual:.1e}, zeta(2) {z2:.1e}, zeta(4) {z4:.1e}",
        admissible.len()
    );
    if problems.is_empty() {
        outcome(true, detail)
    } else {
        outcome(false, format!("{detail}; {}", problems.join("; ")))
    }
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().expect("temp dir");
    let path = dir.path().join("values.tsv");
    let cfg = Config::default();
    let cold = run(&cfg, &ZetaEngine::with_cache(MzvCache::open(&path).unwrap()));
    let warm = || {
        let engine = ZetaEngine::with_cache(MzvCache::open(&path).unwrap());
        let r = run(&cfg, &engine);
        (r, engine.cache().stats())
    };
    let (a, sa) = warm();
    let (b, sb) = warm();
    let same = a.canonical_json() == b.canonical_json();
    let matches_cold = a.canonical_json() == cold.canonical_json();
    let errors = a.checks.iter().filter(|c| c.status == Status::Error).count();
    let ok = same && sa.misses == 0 && sb.misses == 0 && errors == 0;
    outcome(
        ok,
        format!(
            "warm reports identical: {same}, warm misses {}/{}, cache entries {}, cold report identical: {matches_cold}",
            sa.misses, sb.misses, sa.entries
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("exact suite", exact_suite),
        ("sum formula, l = 5..12", sum_formula),
        ("weighted sum formulas, l = 5..12", weighted_sum_formulas),
        ("omega identity, l = 5..12", theorem),
        ("series identities up to weight 10", series_suites),
        ("cyclic pointwise identity, weight <= 7", cyclic),
        ("evaluator properties", evaluator),
        ("determinism with warm cache", determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let (o, dt) = timed(f);
        if !o.ok {
            failed += 1;
        }
        println!("{} {}. {name} ({:.2}s): {}", if o.ok { "PASS" } else { "FAIL" }, i + 1, dt.as_secs_f64(), o.detail);
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
