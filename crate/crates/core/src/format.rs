//! The plain-text family format.
//!
//! ```text
//! # comment
//! n=3
//! -
//! 1
//! 1 2
//! ```
//!
//! A header `n=<int>` comes first, then one set per line as 1-based element
//! labels separated by spaces, or `-` for the empty set. Comment lines start
//! with `#`; blank lines are ignored. Output lists sets by cardinality, then
//! by mask.

use std::fmt::Write as _;

use crate::cube::{dimension_cap, CubePoint, SetFamily};
use crate::error::{Error, Result};

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Parse with the configured dimension cap.
pub fn parse_family(text: &str) -> Result<SetFamily> {
    parse_family_with_cap(text, dimension_cap())
}

pub fn parse_family_with_cap(text: &str, cap: usize) -> Result<SetFamily> {
    let mut family: Option<SetFamily> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw.trim_end();
        let trimmed = content.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let indent = content.len() - trimmed.len();
        let Some(fam) = family.as_mut() else {
            family = Some(parse_header(trimmed, line_no, indent, cap)?);
            continue;
        };
        let n = fam.n();
        let set = if trimmed == "-" {
            CubePoint::EMPTY
        } else {
            parse_set(content, line_no, n)?
        };
        if !fam.insert(set) {
            return Err(parse_error(
                line_no,
                indent + 1,
                format!("duplicate set {set}"),
            ));
        }
    }
    family.ok_or_else(|| parse_error(1, 1, "missing header 'n=<int>'"))
}

fn parse_header(trimmed: &str, line: usize, indent: usize, cap: usize) -> Result<SetFamily> {
    let value = trimmed
        .strip_prefix("n=")
        .ok_or_else(|| parse_error(line, indent + 1, "expected header 'n=<int>'"))?;
    let n: usize = value
        .trim()
        .parse()
        .map_err(|_| parse_error(line, indent + 3, format!("invalid dimension '{value}'")))?;
    if n == 0 || n > cap {
        return Err(parse_error(
            line,
            indent + 3,
            format!("dimension {n} outside 1..={cap}"),
        ));
    }
    SetFamily::empty(n)
}

fn parse_set(content: &str, line: usize, n: usize) -> Result<CubePoint> {
    let mut set = CubePoint::EMPTY;
    let mut offset = 0;
    for token in content.split(' ') {
        let column = offset + 1;
        offset += token.len() + 1;
        if token.is_empty() {
            continue;
        }
        let element: usize = token
            .parse()
            .map_err(|_| parse_error(line, column, format!("invalid element '{token}'")))?;
        if element == 0 || element > n {
            return Err(parse_error(
                line,
                column,
                format!("element {element} out of range [1, {n}]"),
            ));
        }
        if set.contains(element) {
            return Err(parse_error(
                line,
                column,
                format!("repeated element {element}"),
            ));
        }
        set = set.with(element);
    }
    Ok(set)
}

/// Canonical text for a family.
pub fn write_family(family: &SetFamily) -> String {
    let mut sets: Vec<CubePoint> = family.iter().collect();
    sets.sort_by_key(|s| (s.len(), s.0));
    let mut out = format!("n={}\n", family.n());
    for set in sets {
        if set.is_empty() {
            out.push('-');
        } else {
            let labels: Vec<String> = set.elements().map(|e| e.to_string()).collect();
            out.push_str(&labels.join(" "));
        }
        out.push('\n');
    }
    out
}

/// One-line rendering, e.g. `{-, 1, 1 2}`, for messages.
pub fn family_summary(family: &SetFamily) -> String {
    let mut out = String::from("{");
    for (k, line) in write_family(family).lines().skip(1).enumerate() {
        if k > 0 {
            out.push_str(", ");
        }
        let _ = write!(out, "{line}");
    }
    out.push('}');
    out
}
