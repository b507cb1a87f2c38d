//! Line-oriented input files.
//!
//! ```text
//! # the cone |z|^2 = |w|^2
//! vars: z, w
//! realvars: x y, s t
//! eq: z*conj(z) - w*conj(w) = 0
//! ```
//!
//! `vars:` lists the complex variables; `name:twin` overrides the default
//! `xi_name` for the conjugate slot. `realvars:` gives one `re im` pair per
//! complex variable. Every `eq:` line holds one equation `L = R` (or just
//! `L`, meaning `L = 0`).

use crate::error::{ParseError, ParseErrorKind};
use crate::polyring::parse::{parse_expression, Resolver};
use crate::polyring::Polynomial;

/// One `key: value` line with positions for error messages.
#[derive(Debug, Clone)]
pub(crate) struct Directive<'a> {
    pub line: usize,
    pub key: &'a str,
    pub value: &'a str,
    /// 1-based column of the first character of `value`.
    pub value_col: usize,
}

pub(crate) fn directives(text: &str) -> Result<Vec<Directive<'_>>, ParseError> {
    let mut out = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        if content.trim().is_empty() {
            continue;
        }
        let Some(colon) = content.find(':') else {
            let col = content.len() - content.trim_start().len() + 1;
            return Err(ParseError::new(
                line,
                col,
                ParseErrorKind::Directive("expected `key: value`".into()),
            ));
        };
        let key = content[..colon].trim();
        let rest = &content[colon + 1..];
        let value_col = char_col(content, colon + 1) + (rest.len() - rest.trim_start().len());
        out.push(Directive { line, key, value: rest.trim(), value_col });
    }
    Ok(out)
}

fn char_col(s: &str, byte: usize) -> usize {
    s[..byte].chars().count() + 1
}

/// Split a comma-separated list, keeping the column of each trimmed item.
pub(crate) fn list_items(d: &Directive<'_>) -> Vec<(String, usize)> {
    let mut items = Vec::new();
    let mut offset = 0;
    for piece in d.value.split(',') {
        let lead = piece.len() - piece.trim_start().len();
        let col = d.value_col + d.value[..offset + lead].chars().count();
        if !piece.trim().is_empty() {
            items.push((piece.trim().to_string(), col));
        }
        offset += piece.len() + 1;
    }
    items
}

/// Parse `L = R` or `L` into `L - R`.
pub(crate) fn parse_equation<R: Resolver>(
    d: &Directive<'_>,
    resolver: &R,
) -> Result<Polynomial, ParseError> {
    let parts: Vec<&str> = d.value.split('=').collect();
    match parts.as_slice() {
        [lhs] => parse_expression(lhs, resolver, d.line, d.value_col),
        [lhs, rhs] => {
            let l = parse_expression(lhs, resolver, d.line, d.value_col)?;
            let rcol = d.value_col + lhs.chars().count() + 1;
            let r = if rhs.trim().is_empty() {
                Polynomial::zero(resolver.context())
            } else {
                parse_expression(rhs, resolver, d.line, rcol)?
            };
            Ok(&l - &r)
        }
        _ => {
            let col = d.value_col + parts[0].chars().count() + parts[1].chars().count() + 1;
            Err(ParseError::new(
                d.line,
                col,
                ParseErrorKind::Syntax("more than one `=` in equation".into()),
            ))
        }
    }
}
