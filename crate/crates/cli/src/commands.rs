use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use lexrev_core::defaults::{
    literal_queries, parse_kb_with, rational_closure_sequence, KbLimits, Subset, DEFAULT_MAX_DEFAULTS,
};
use lexrev_core::logic::DEFAULT_MAX_VARS;
use lexrev_core::verify::conjecture_sweep;
use lexrev_core::{
    conjecture_check, lex_sequence, parse_formula, run_suite, z_partition, DefaultBase, Formula, LexClosure,
    RankedSequence, Suite, ZPartition,
};

use crate::{read_file, CliError, Report, Result, Status};

/// Variable cap for random bases in a conjecture sweep unless `--max-vars` is given.
pub const SWEEP_MAX_VARS: usize = 4;
pub const DEFAULT_VERIFY_SEED: u64 = 1;
pub const DEFAULT_VERIFY_COUNT: usize = 100;
pub const DEFAULT_SWEEP_SEED: u64 = 7;
pub const DEFAULT_SWEEP_COUNT: usize = 50;

/// Flags shared by every command.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Options {
    pub kb: Option<PathBuf>,
    pub seed: Option<u64>,
    pub count: Option<usize>,
    pub explain: bool,
    pub max_vars: Option<usize>,
}

impl Options {
    pub(crate) fn kb_limits(&self) -> KbLimits {
        KbLimits {
            max_vars: self.max_vars.unwrap_or(DEFAULT_MAX_VARS),
            max_defaults: DEFAULT_MAX_DEFAULTS,
        }
    }

    fn require_kb(&self) -> Result<&Path> {
        self.kb
            .as_deref()
            .ok_or_else(|| CliError::Usage("this command needs --kb <path>".into()))
    }

    /// The knowledge base named by `--kb`, if any.
    pub fn load_kb(&self) -> Result<Option<DefaultBase>> {
        match &self.kb {
            None => Ok(None),
            Some(path) => Ok(Some(parse_kb_with(&read_file(path)?, self.kb_limits())?)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Engine {
    /// Maximal consistent subsets of defaults, by enumeration.
    LexDirect,
    /// Rank comparison on the iterated-revision sequence.
    LexRevision,
    /// Rank comparison on the System Z ranking.
    Rational,
}

fn admissible(options: &Options) -> Result<(DefaultBase, ZPartition)> {
    options.require_kb()?;
    let base = options.load_kb()?.expect("kb present");
    let zp = z_partition(&base)?;
    Ok((base, zp))
}

fn render_subset(base: &DefaultBase, subset: Subset) -> String {
    let parts: Vec<String> = subset
        .indices()
        .map(|i| base.defaults()[i].display(base.vocab()).to_string())
        .collect();
    format!("{{{}}}", parts.join(", "))
}

fn explain_ranks(out: &mut String, base: &DefaultBase, seq: &RankedSequence, theta: &Formula, phi: &Formula) {
    let vocab = base.vocab();
    let counter = Formula::and(theta.clone(), Formula::not(phi.clone()));
    writeln!(out, "sequence: {}", seq.render(vocab)).unwrap();
    writeln!(out, "rank({}) = {}", theta.display(vocab), seq.rank(theta)).unwrap();
    writeln!(out, "rank({}) = {}", counter.display(vocab), seq.rank(&counter)).unwrap();
}

/// `query θ φ`: whether `θ |~ φ` under the chosen engine.
pub fn query(options: &Options, theta: &str, phi: &str, engine: Engine) -> Result<Report> {
    let (base, zp) = admissible(options)?;
    let vocab = base.vocab();
    let theta = parse_formula(theta, vocab)?;
    let phi = parse_formula(phi, vocab)?;
    let mut explanation = String::new();
    let answer = match engine {
        Engine::LexDirect => {
            let closure = LexClosure::with_partition(&base, zp.clone());
            if options.explain {
                explanation.push_str(&zp.render(&base));
                let bases = closure.maximal_bases(&lexrev_core::models(&theta, vocab));
                writeln!(explanation, "maximal bases for {}:", theta.display(vocab)).unwrap();
                if bases.is_empty() {
                    explanation.push_str("  (none: premise unsatisfiable)\n");
                }
                for subset in bases {
                    writeln!(explanation, "  {}", render_subset(&base, subset)).unwrap();
                }
            }
            closure.infers(&theta, &phi)
        }
        Engine::LexRevision | Engine::Rational => {
            let seq = match engine {
                Engine::LexRevision => lex_sequence(&base)?,
                _ => rational_closure_sequence(&base, &zp),
            };
            if options.explain {
                explain_ranks(&mut explanation, &base, &seq, &theta, &phi);
            }
            seq.infers(&theta, &phi)
        }
    };
    let (word, status) = if answer {
        ("YES", Status::Yes)
    } else {
        ("NO", Status::No)
    };
    Ok(Report::new(format!("{word}\n{explanation}"), status))
}

/// `partition`: the strata, one line each.
pub fn partition(options: &Options) -> Result<Report> {
    let (base, zp) = admissible(options)?;
    Ok(Report::new(zp.render(&base), Status::Pass))
}

/// `verify <suite>`; `all` runs every suite.
pub fn verify(options: &Options, suite: &str) -> Result<Report> {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse::<Suite>().map_err(CliError::Usage)?]
    };
    let seed = options.seed.unwrap_or(DEFAULT_VERIFY_SEED);
    let count = options.count.unwrap_or(DEFAULT_VERIFY_COUNT);
    let mut text = String::new();
    let mut status = Status::Pass;
    for suite in suites {
        let report = run_suite(suite, seed, count);
        if !report.all_passed() {
            status = Status::Fail;
        }
        writeln!(text, "{report}").unwrap();
    }
    Ok(Report::new(text, status))
}

fn render_base(base: &DefaultBase) -> String {
    let parts: Vec<String> = base
        .defaults()
        .iter()
        .map(|d| d.display(base.vocab()).to_string())
        .collect();
    format!("[{}]", parts.join(", "))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "YES"
    } else {
        "NO"
    }
}

#[derive(Default)]
struct Totals {
    bases: usize,
    full_agreement: usize,
    equivalent: usize,
    rewrite: usize,
    queries: usize,
    agreements: usize,
}

fn describe_entry(
    out: &mut String,
    totals: &mut Totals,
    label: &str,
    base: &DefaultBase,
    report: &lexrev_core::defaults::ConjectureReport,
) {
    let vocab = base.vocab();
    writeln!(
        out,
        "{label}: {} vars, {} defaults {}",
        vocab.len(),
        base.len(),
        render_base(base)
    )
    .unwrap();
    writeln!(
        out,
        "  agreement {}/{}, sequences equivalent: {}, suffix rewrite: {}",
        report.agreements,
        report.queries,
        yes_no(report.sequences_equivalent()),
        if report.theta_rewrite_holds { "holds" } else { "FAILS" }
    )
    .unwrap();
    for d in &report.divergences {
        writeln!(
            out,
            "  divergence: {} |~ {}  conjunction-chain {}, rational {}",
            d.theta.display(vocab),
            d.phi.display(vocab),
            yes_no(d.conjunction_chain),
            yes_no(d.rational_closure)
        )
        .unwrap();
    }
    totals.bases += 1;
    totals.full_agreement += report.full_agreement() as usize;
    totals.equivalent += report.sequences_equivalent() as usize;
    totals.rewrite += report.theta_rewrite_holds as usize;
    totals.queries += report.queries;
    totals.agreements += report.agreements;
}

/// `conjecture`: compares the conjunction chain with rational closure on
/// the `--kb` base, or on a seeded sweep of random bases. Always `Pass`.
pub fn conjecture(options: &Options) -> Result<Report> {
    let mut text = String::new();
    let mut totals = Totals::default();
    if let Some(base) = options.load_kb()? {
        let report = conjecture_check(&base, &literal_queries(base.vocab()))?;
        describe_entry(&mut text, &mut totals, "base", &base, &report);
    } else {
        let seed = options.seed.unwrap_or(DEFAULT_SWEEP_SEED);
        let count = options.count.unwrap_or(DEFAULT_SWEEP_COUNT);
        let max_vars = options.max_vars.unwrap_or(SWEEP_MAX_VARS);
        writeln!(
            text,
            "sweep: seed {seed}, {count} bases, up to {max_vars} vars, up to 5 defaults"
        )
        .unwrap();
        for entry in conjecture_sweep(seed, count, max_vars)? {
            describe_entry(
                &mut text,
                &mut totals,
                &format!("base {}", entry.index),
                &entry.base,
                &entry.report,
            );
        }
    }
    writeln!(
        text,
        "summary: {} bases, {} in full agreement, {} with equivalent sequences, {}/{} queries agree, suffix rewrite held on {}/{}",
        totals.bases,
        totals.full_agreement,
        totals.equivalent,
        totals.agreements,
        totals.queries,
        totals.rewrite,
        totals.bases
    )
    .unwrap();
    Ok(Report::new(text, Status::Pass))
}
