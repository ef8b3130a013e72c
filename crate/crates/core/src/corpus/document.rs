//! Plain-text brace documents.
//!
//! ```text
//! # comment
//! brace T2
//! order 2
//! add
//! 0 1
//! 1 0
//! circ
//! 0 1
//! 1 0
//! end
//! ```
//!
//! Documents may be concatenated. Blank lines and lines starting with `#`
//! are ignored between and inside documents.

use std::fmt;

use crate::error::{Error, Result};
use crate::FiniteSkewBrace;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraceDocument {
    pub name: String,
    pub order: usize,
    pub add: Vec<Vec<usize>>,
    pub circ: Vec<Vec<usize>>,
}

impl BraceDocument {
    pub fn from_brace(b: &FiniteSkewBrace) -> Self {
        BraceDocument { name: b.name().to_string(), order: b.order(), add: b.add_rows(), circ: b.circ_rows() }
    }

    pub fn to_brace(&self) -> Result<FiniteSkewBrace> {
        FiniteSkewBrace::from_rows(self.name.clone(), &self.add, &self.circ)
    }
}

impl fmt::Display for BraceDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "brace {}", self.name)?;
        writeln!(f, "order {}", self.order)?;
        for (label, table) in [("add", &self.add), ("circ", &self.circ)] {
            writeln!(f, "{label}")?;
            for row in table {
                let line: Vec<String> = row.iter().map(usize::to_string).collect();
                writeln!(f, "{}", line.join(" "))?;
            }
        }
        writeln!(f, "end")
    }
}

/// Parses every document in `text` without validating the axioms.
pub fn parse_documents(text: &str) -> Result<Vec<BraceDocument>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .peekable();
    let mut docs = Vec::new();
    while let Some((line, header)) = lines.next() {
        let name = header
            .strip_prefix("brace ")
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .ok_or_else(|| syntax(line, "expected `brace <name>`"))?
            .to_string();
        let (line, order_line) = lines.next().ok_or_else(|| syntax(line, "missing `order <n>`"))?;
        let order: usize = order_line
            .strip_prefix("order ")
            .and_then(|s| s.trim().parse().ok())
            .filter(|&n| n > 0)
            .ok_or_else(|| syntax(line, "expected `order <n>` with n > 0"))?;
        let mut tables = Vec::with_capacity(2);
        let mut last = line;
        for label in ["add", "circ"] {
            let (line, l) = lines.next().ok_or_else(|| syntax(last, format!("missing `{label}`")))?;
            if l != label {
                return Err(syntax(line, format!("expected `{label}`")));
            }
            last = line;
            let mut rows = Vec::with_capacity(order);
            for _ in 0..order {
                let (line, l) = lines.next().ok_or_else(|| syntax(last, "table ended early"))?;
                last = line;
                let row = l
                    .split_whitespace()
                    .map(|t| {
                        let v: usize = t.parse().map_err(|_| syntax(line, format!("bad entry {t:?}")))?;
                        if v >= order {
                            return Err(syntax(line, format!("entry {v} out of range for order {order}")));
                        }
                        Ok(v)
                    })
                    .collect::<Result<Vec<usize>>>()?;
                if row.len() != order {
                    return Err(syntax(line, format!("row has {} entries, expected {order}", row.len())));
                }
                rows.push(row);
            }
            tables.push(rows);
        }
        let (line, l) = lines.next().ok_or_else(|| syntax(last, "missing `end`"))?;
        if l != "end" {
            return Err(syntax(line, "expected `end`"));
        }
        let circ = tables.pop().unwrap();
        let add = tables.pop().unwrap();
        docs.push(BraceDocument { name, order, add, circ });
    }
    Ok(docs)
}

/// Parses and validates every document.
pub fn parse_braces(text: &str) -> Result<Vec<FiniteSkewBrace>> {
    parse_documents(text)?.iter().map(BraceDocument::to_brace).collect()
}

fn syntax(line: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { line, msg: msg.into() }
}
