//! Revision sessions driven by a line-oriented script:
//!
//! ```text
//! # optional; otherwise taken from --kb or from the script itself
//! vars: b, f, p
//! revise {b -> f}
//! revise {p -> b; p -> !f}
//! query p |~ !f
//! show beliefs
//! show ranking
//! show entrench p p | q
//! ```

use std::fmt::Write as _;

use lexrev_core::defaults::parse_vars_line;
use lexrev_core::logic::identifiers;
use lexrev_core::{
    entrenchment_from_set, parse_formula, revise_entrenchment, EntrenchmentOrder, EntrenchmentRelation, Formula,
    Vocabulary,
};

use crate::{CliError, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Directive {
    Revise(Vec<Formula>),
    Query(Formula, Formula),
    ShowBeliefs,
    ShowRanking,
    ShowEntrench(Formula, Formula),
}

/// A directive before its formulas are parsed.
#[derive(Debug)]
enum Raw<'a> {
    Revise(Vec<&'a str>),
    Query(&'a str, &'a str),
    ShowBeliefs,
    ShowRanking,
    ShowEntrench(&'a str),
}

impl Raw<'_> {
    fn formula_texts(&self) -> Vec<&str> {
        match self {
            Raw::Revise(items) => items.clone(),
            Raw::Query(a, b) => vec![a, b],
            Raw::ShowEntrench(text) => vec![text],
            Raw::ShowBeliefs | Raw::ShowRanking => Vec::new(),
        }
    }
}

fn script_error(line: usize, message: impl Into<String>) -> CliError {
    CliError::Script {
        line,
        message: message.into(),
    }
}

fn parse_raw(line: usize, text: &str) -> Result<Raw<'_>> {
    let (word, rest) = text.split_once(char::is_whitespace).unwrap_or((text, ""));
    let rest = rest.trim();
    match word {
        "revise" => {
            let inner = match rest.strip_prefix('{') {
                Some(r) => r
                    .strip_suffix('}')
                    .ok_or_else(|| script_error(line, "unterminated `{` in revise"))?,
                None => rest,
            };
            let items: Vec<&str> = inner.split(';').map(str::trim).filter(|s| !s.is_empty()).collect();
            Ok(Raw::Revise(items))
        }
        "query" => {
            let mut parts = rest.split("|~");
            match (parts.next(), parts.next(), parts.next()) {
                (Some(a), Some(b), None) => Ok(Raw::Query(a.trim(), b.trim())),
                _ => Err(script_error(line, "expected `query θ |~ φ`")),
            }
        }
        "show" => {
            let (what, arg) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
            match (what, arg.trim()) {
                ("beliefs", "") => Ok(Raw::ShowBeliefs),
                ("ranking", "") => Ok(Raw::ShowRanking),
                ("entrench", arg) if !arg.is_empty() => Ok(Raw::ShowEntrench(arg)),
                _ => Err(script_error(line, format!("unknown `show {rest}`"))),
            }
        }
        other => Err(script_error(line, format!("unknown directive `{other}`"))),
    }
}

/// Splits `θ φ` into two formulas: at `;` or `,` if present, otherwise at the
/// unique whitespace position where both halves parse.
fn split_pair(line: usize, text: &str, vocab: &Vocabulary) -> Result<(Formula, Formula)> {
    let parse = |s: &str| parse_formula(s, vocab).map_err(|e| script_error(line, e.to_string()));
    if let Some((a, b)) = text.split_once([';', ',']) {
        return Ok((parse(a)?, parse(b)?));
    }
    let mut found = Vec::new();
    for (i, c) in text.char_indices() {
        if c.is_whitespace() {
            let (a, b) = (&text[..i], &text[i..]);
            if let (Ok(x), Ok(y)) = (parse_formula(a, vocab), parse_formula(b, vocab)) {
                if !found.iter().any(|(fa, fb): &(Formula, Formula)| *fa == x && *fb == y) {
                    found.push((x, y));
                }
            }
        }
    }
    match found.len() {
        1 => Ok(found.pop().unwrap()),
        0 => Err(script_error(line, format!("expected two formulas in `{text}`"))),
        _ => Err(script_error(
            line,
            format!("ambiguous formula pair `{text}`; separate with `;`"),
        )),
    }
}

/// Parses a script. The vocabulary comes from a `vars:` line, else from
/// `fallback`, else from identifiers in order of first appearance.
pub fn parse_script(
    text: &str,
    fallback: Option<&Vocabulary>,
    max_vars: usize,
) -> Result<(Vocabulary, Vec<(usize, Directive)>)> {
    let mut declared: Option<Vocabulary> = None;
    let mut raws = Vec::new();
    for (idx, raw_line) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw_line.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        if let Some(rest) = content.strip_prefix("vars:") {
            if declared.is_some() || !raws.is_empty() {
                return Err(script_error(line, "`vars:` must come first and only once"));
            }
            declared = Some(parse_vars_line(rest, line, max_vars)?);
            continue;
        }
        raws.push((line, content, parse_raw(line, content)?));
    }

    let vocab = match (declared, fallback) {
        (Some(v), _) => v,
        (None, Some(v)) => v.clone(),
        (None, None) => {
            let mut names: Vec<String> = Vec::new();
            for (_, _, raw) in &raws {
                for text in raw.formula_texts() {
                    for name in identifiers(text) {
                        if !names.contains(&name) {
                            names.push(name);
                        }
                    }
                }
            }
            if names.is_empty() {
                names.push("p".into());
            }
            Vocabulary::with_cap(names, max_vars)?
        }
    };

    let mut directives = Vec::with_capacity(raws.len());
    for (line, _, raw) in raws {
        let parse = |s: &str| parse_formula(s, &vocab).map_err(|e| script_error(line, e.to_string()));
        let directive = match raw {
            Raw::Revise(items) => Directive::Revise(items.into_iter().map(parse).collect::<Result<_>>()?),
            Raw::Query(a, b) => Directive::Query(parse(a)?, parse(b)?),
            Raw::ShowBeliefs => Directive::ShowBeliefs,
            Raw::ShowRanking => Directive::ShowRanking,
            Raw::ShowEntrench(text) => {
                let (a, b) = split_pair(line, text, &vocab)?;
                Directive::ShowEntrench(a, b)
            }
        };
        directives.push((line, directive));
    }
    Ok((vocab, directives))
}

/// Current entrenchment relation plus the directives applied so far.
#[derive(Debug, Clone)]
pub struct Session {
    vocab: Vocabulary,
    current: EntrenchmentRelation,
    transcript: Vec<Directive>,
}

impl Session {
    /// Starts at the relation that believes only tautologies.
    pub fn new(vocab: Vocabulary) -> Self {
        let current = EntrenchmentRelation::initial(&vocab);
        Self {
            vocab,
            current,
            transcript: Vec::new(),
        }
    }

    pub fn vocab(&self) -> &Vocabulary {
        &self.vocab
    }

    pub fn current(&self) -> &EntrenchmentRelation {
        &self.current
    }

    pub fn transcript(&self) -> &[Directive] {
        &self.transcript
    }

    /// Runs one directive, returning its output (possibly empty).
    pub fn apply(&mut self, directive: Directive) -> String {
        let vocab = &self.vocab;
        let mut out = String::new();
        match &directive {
            Directive::Revise(set) => {
                self.current = revise_entrenchment(&self.current, &entrenchment_from_set(set, vocab));
            }
            Directive::Query(theta, phi) => {
                out.push_str(if self.current.infers(theta, phi) {
                    "YES\n"
                } else {
                    "NO\n"
                });
            }
            Directive::ShowBeliefs => out.push_str(&self.beliefs()),
            Directive::ShowRanking => {
                if self.current.is_absurd() {
                    out.push_str("(absurd: no worlds ranked)\n");
                }
                for (i, layer) in self.current.carrier().layers().iter().enumerate() {
                    writeln!(out, "rank {i}: {}", vocab.render_set(layer)).unwrap();
                }
            }
            Directive::ShowEntrench(theta, phi) => {
                let symbol = match (self.current.leq(theta, phi), self.current.leq(phi, theta)) {
                    (true, true) => "≈",
                    (true, false) => "≺",
                    (false, true) => "≻",
                    (false, false) => unreachable!("entrenchment is total"),
                };
                writeln!(out, "{} {symbol} {}", theta.display(vocab), phi.display(vocab)).unwrap();
            }
        }
        self.transcript.push(directive);
        out
    }

    /// `Bel = Cn(…)` with the first carrier layer as a disjunction of world descriptions.
    pub fn beliefs(&self) -> String {
        if self.current.is_absurd() {
            return "Bel = L (absurd)\n".into();
        }
        let first = self.current.most_plausible();
        let theory = if first.is_full() {
            Formula::Top
        } else {
            Formula::disjunction(first.iter().map(|w| Formula::world_description(&self.vocab, w)))
        };
        format!("Bel = Cn({})\n", theory.display(&self.vocab))
    }
}

/// Parses and runs a whole script, returning the concatenated output.
pub fn run_script(text: &str, fallback: Option<&Vocabulary>, max_vars: usize) -> Result<String> {
    let (vocab, directives) = parse_script(text, fallback, max_vars)?;
    let mut session = Session::new(vocab);
    let mut out = String::new();
    for (_, directive) in directives {
        out.push_str(&session.apply(directive));
    }
    Ok(out)
}
