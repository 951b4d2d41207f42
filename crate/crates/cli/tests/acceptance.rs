//! Acceptance gate: one line per criterion, non-zero exit if any fails.
//!
//! Runs as a plain binary (`harness = false`) so the lines always show up in
//! `cargo test` output.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use lexrev_core::verify::{main_theorem_queries, run_suite, Suite, SuiteReport};
use lexrev_core::{gen, lex_infers_direct, lex_sequence, parse_formula, parse_kb, z_partition, RankedSequence};

const PENGUIN: &str = "vars: b, f, p\ndefault: b => f\ndefault: p => b\ndefault: p => !f\n";

struct Outcome {
    passed: bool,
    detail: String,
}

fn suite_outcome(reports: &[SuiteReport], expected_instances: usize) -> Outcome {
    let passed = reports
        .iter()
        .all(|r| r.all_passed() && r.instances() == expected_instances);
    let detail = reports
        .iter()
        .map(|r| {
            let mut s = format!(
                "{}: {}/{} instances clean, {} checks",
                r.suite,
                r.passed,
                r.instances(),
                r.checks
            );
            if let Some(f) = &r.first_failure {
                s.push_str(&format!(" (instance {}: {})", f.index, f.description));
            }
            s
        })
        .collect::<Vec<_>>()
        .join("; ");
    Outcome { passed, detail }
}

fn main_theorem() -> Outcome {
    let start = Instant::now();
    let report = run_suite(Suite::MainTheorem, 1, 100);
    let elapsed = start.elapsed();
    // Instances use 1 to 4 variables; each gets all literal-conjunction pairs plus 200 random pairs.
    let min_queries = (1..=4)
        .map(|n| main_theorem_queries(&mut gen::instance_rng(1, 0), &gen::vocabulary(n)).len())
        .min()
        .unwrap();
    let mut outcome = suite_outcome(&[report], 100);
    outcome.passed &= elapsed < Duration::from_secs(60) && min_queries >= 200;
    outcome
        .detail
        .push_str(&format!(", at least {min_queries} queries per base, {:.2?}", elapsed));
    outcome
}

fn penguin_regression() -> Outcome {
    let base = parse_kb(PENGUIN).unwrap();
    let zp = z_partition(&base).unwrap();
    let mut failures = Vec::new();
    if zp.render(&base) != "Δ0: b => f\nΔ1: p => b, p => !f\n" {
        failures.push(format!("partition {:?}", zp.render(&base)));
    }
    let expected = RankedSequence::from_indices(8, &[&[0, 2, 3], &[1, 5], &[4, 7], &[6]]).unwrap();
    let seq = lex_sequence(&base).unwrap();
    if seq != expected {
        failures.push(format!("sequence {}", seq.render(base.vocab())));
    }
    for (theta, phi, want) in [("p", "!f", true), ("p", "b", true), ("b", "f", true), ("p", "f", false)] {
        let t = parse_formula(theta, base.vocab()).unwrap();
        let p = parse_formula(phi, base.vocab()).unwrap();
        let direct = lex_infers_direct(&base, &t, &p).unwrap();
        let revised = seq.infers(&t, &p);
        if direct != want || revised != want {
            failures.push(format!(
                "{theta} |~ {phi}: direct {direct}, revision {revised}, expected {want}"
            ));
        }
    }
    Outcome {
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            "partition, chain ({0,2,3},{1,5},{4,7},{6}) and p|~!f, p|~b, b|~f YES, p|~f NO".into()
        } else {
            failures.join("; ")
        },
    }
}

fn conjecture_report() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_lexrev"))
            .args(["conjecture", "--seed", "7", "--count", "50"])
            .output()
            .expect("spawn lexrev")
    };
    let first = run();
    let second = run();
    let stdout = String::from_utf8_lossy(&first.stdout).into_owned();
    let summary = stdout
        .lines()
        .find(|l| l.starts_with("summary:"))
        .unwrap_or("no summary line")
        .to_string();
    let completed = first.status.code() == Some(0) && summary.starts_with("summary: 50 bases");
    let deterministic = first.stdout == second.stdout && second.status.code() == Some(0);
    Outcome {
        passed: completed && deterministic,
        detail: format!("completed {completed}, deterministic {deterministic}; {summary}"),
    }
}

type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        (
            "main theorem: direct closure equals revision sequence",
            Box::new(main_theorem),
        ),
        ("penguin regression", Box::new(penguin_regression)),
        (
            "rational postulates and consistency preservation",
            Box::new(|| suite_outcome(&[run_suite(Suite::Rational, 1, 100)], 100)),
        ),
        (
            "entrenchment axioms",
            Box::new(|| suite_outcome(&[run_suite(Suite::EAxioms, 1, 200)], 200)),
        ),
        (
            "revision postulates and associativity",
            Box::new(|| suite_outcome(&[run_suite(Suite::Postulates, 1, 200)], 200)),
        ),
        (
            "bridge properties",
            Box::new(|| suite_outcome(&[run_suite(Suite::Props, 1, 200)], 200)),
        ),
        (
            "set difference, iterated-revision C2, suffix rewrite",
            Box::new(|| {
                suite_outcome(
                    &[run_suite(Suite::SetDifference, 1, 200), run_suite(Suite::Dp, 1, 200)],
                    200,
                )
            }),
        ),
        ("conjecture report", Box::new(conjecture_report)),
    ];
    let mut all = true;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = check();
        all &= outcome.passed;
        let mark = if outcome.passed { "PASS" } else { "FAIL" };
        println!("criterion {} [{mark}] {name}: {}", i + 1, outcome.detail);
    }
    if all {
        println!("acceptance: all 8 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: FAILED");
        ExitCode::FAILURE
    }
}
