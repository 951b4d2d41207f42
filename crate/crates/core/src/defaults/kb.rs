//! Knowledge-base text format.
//!
//! ```text
//! # comment
//! vars: b, f, p
//! default: b => f
//! default: p => !f
//! ```

use super::base::{Default, DefaultBase, DEFAULT_MAX_DEFAULTS};
use crate::error::{Error, Result};
use crate::logic::{parse_formula, Vocabulary, DEFAULT_MAX_VARS};

/// Limits applied while loading a knowledge base.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KbLimits {
    pub max_vars: usize,
    pub max_defaults: usize,
}

impl std::default::Default for KbLimits {
    fn default() -> Self {
        Self {
            max_vars: DEFAULT_MAX_VARS,
            max_defaults: DEFAULT_MAX_DEFAULTS,
        }
    }
}

fn format_error(line: usize, message: impl Into<String>) -> Error {
    Error::Format {
        line,
        message: message.into(),
    }
}

/// Parses `vars: a, b` into a vocabulary.
pub fn parse_vars_line(rest: &str, line: usize, max_vars: usize) -> Result<Vocabulary> {
    let names: Vec<&str> = rest.split(',').map(str::trim).collect();
    if names.iter().any(|n| n.is_empty()) {
        return Err(format_error(line, "empty variable name in `vars:`"));
    }
    Vocabulary::with_cap(names, max_vars).map_err(|e| format_error(line, e.to_string()))
}

/// Parses a default `λ => χ`.
pub fn parse_default(text: &str, vocab: &Vocabulary) -> Result<Default> {
    let mut parts = text.split("=>");
    let (Some(premise), Some(conclusion), None) = (parts.next(), parts.next(), parts.next()) else {
        return Err(Error::Syntax {
            position: 0,
            message: "expected exactly one `=>`".into(),
        });
    };
    Ok(Default::new(
        parse_formula(premise, vocab)?,
        parse_formula(conclusion, vocab)?,
    ))
}

pub fn parse_kb(text: &str) -> Result<DefaultBase> {
    parse_kb_with(text, KbLimits::default())
}

pub fn parse_kb_with(text: &str, limits: KbLimits) -> Result<DefaultBase> {
    let mut vocab: Option<Vocabulary> = None;
    let mut defaults = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        if let Some(rest) = content.strip_prefix("vars:") {
            if vocab.is_some() {
                return Err(format_error(line, "duplicate `vars:` line"));
            }
            vocab = Some(parse_vars_line(rest, line, limits.max_vars)?);
        } else if let Some(rest) = content.strip_prefix("default:") {
            let Some(v) = vocab.as_ref() else {
                return Err(format_error(line, "`default:` before `vars:`"));
            };
            defaults.push(parse_default(rest, v).map_err(|e| format_error(line, e.to_string()))?);
        } else {
            return Err(format_error(line, format!("unrecognized line `{content}`")));
        }
    }
    let vocab = vocab.ok_or_else(|| format_error(0, "missing `vars:` line"))?;
    DefaultBase::with_cap(vocab, defaults, limits.max_defaults)
}
