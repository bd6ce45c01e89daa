//! Line-oriented text format for monoids.
//!
//! ```text
//! monoid <name>
//! order <k>
//! neutral <i>
//! labels <l0> <l1> ...      (optional)
//! table
//! <k lines of k space-separated indices>
//! end
//! ```
//!
//! Blank lines and lines starting with `#` are skipped on input. After `end`
//! only record lines (`hom`, `cong`, `zigzag`, `dominion`) may follow; they
//! are ignored by [`parse_monoid`].

use std::fmt::Write as _;

use thiserror::Error;

use crate::monoid::{FiniteMonoid, MonoidError, DEFAULT_ORDER_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("unexpected end of input: {0}")]
    Truncated(String),
    #[error("invalid monoid: {0}")]
    Invalid(#[from] MonoidError),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

const TRAILING_RECORDS: [&str; 4] = ["hom", "cong", "zigzag", "dominion"];

/// Parses one monoid block, validating it under the default order cap.
pub fn parse_monoid(input: &str) -> Result<FiniteMonoid, ParseError> {
    parse_monoid_with_cap(input, DEFAULT_ORDER_CAP)
}

pub fn parse_monoid_with_cap(input: &str, cap: usize) -> Result<FiniteMonoid, ParseError> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let mut next = |what: &str| {
        lines
            .next()
            .ok_or_else(|| ParseError::Truncated(format!("expected {what}")))
    };

    let (ln, header) = next("`monoid <name>`")?;
    let name = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["monoid", name] => name.to_string(),
        _ => return Err(syntax(ln, "expected `monoid <name>`")),
    };
    let (ln, line) = next("`order <k>`")?;
    let order = keyed_number(ln, line, "order")?;
    let (ln, line) = next("`neutral <i>`")?;
    let neutral = keyed_number(ln, line, "neutral")?;
    if order > cap {
        return Err(MonoidError::OrderCap { order, cap }.into());
    }

    let (mut ln, mut line) = next("`table` or `labels`")?;
    let mut labels = None;
    if let Some(rest) = line.strip_prefix("labels") {
        if !rest.is_empty() && !rest.starts_with(char::is_whitespace) {
            return Err(syntax(ln, "expected `labels` or `table`"));
        }
        let found: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
        if found.len() != order {
            return Err(syntax(
                ln,
                format!("expected {order} labels, found {}", found.len()),
            ));
        }
        labels = Some(found);
        (ln, line) = next("`table`")?;
    }
    if line != "table" {
        return Err(syntax(ln, "expected `table`"));
    }

    let mut rows = Vec::with_capacity(order);
    for row in 0..order {
        let (ln, line) = next(&format!("table row {row}"))?;
        let entries = line
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| syntax(ln, format!("table row {row}: bad entry {t:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if entries.len() != order {
            return Err(syntax(
                ln,
                format!(
                    "table row {row} has {} entries, expected {order}",
                    entries.len()
                ),
            ));
        }
        if let Some(&bad) = entries.iter().find(|&&v| v >= order) {
            return Err(syntax(
                ln,
                format!("table row {row}: entry {bad} out of range"),
            ));
        }
        rows.push(entries);
    }
    let (ln, line) = next("`end`")?;
    if line != "end" {
        return Err(syntax(ln, "expected `end`"));
    }
    for (ln, line) in lines {
        let keyword = line.split_whitespace().next().unwrap_or_default();
        if !TRAILING_RECORDS.contains(&keyword) {
            return Err(syntax(ln, "unexpected content after `end`"));
        }
    }

    let mut monoid = FiniteMonoid::validate_with_cap(order, neutral, rows, cap)?.with_name(name);
    if let Some(labels) = labels {
        monoid = monoid.with_labels(labels)?;
    }
    Ok(monoid)
}

fn keyed_number(ln: usize, line: &str, key: &str) -> Result<usize, ParseError> {
    match line.split_whitespace().collect::<Vec<_>>()[..] {
        [k, v] if k == key => v
            .parse()
            .map_err(|_| syntax(ln, format!("`{key}` needs a nonnegative integer"))),
        _ => Err(syntax(ln, format!("expected `{key} <number>`"))),
    }
}

/// Renders the canonical text form; `parse_monoid` inverts it exactly.
pub fn render_monoid(monoid: &FiniteMonoid) -> String {
    let k = monoid.order();
    let mut out = String::new();
    let _ = writeln!(out, "monoid {}", monoid.name());
    let _ = writeln!(out, "order {k}");
    let _ = writeln!(out, "neutral {}", monoid.neutral());
    if let Some(labels) = monoid.labels() {
        let _ = writeln!(out, "labels {}", labels.join(" "));
    }
    out.push_str("table\n");
    for row in monoid.table().chunks(k) {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out.push_str("end\n");
    out
}
