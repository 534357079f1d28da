//! The `garside-structure v1` text format.
//!
//! ```text
//! garside-structure v1
//! simples:
//! 1
//! x
//! D
//! atoms: x
//! delta: D
//! product:
//! 1 1 = 1
//! ...
//! ```
//!
//! `simples:` lists one name per line in index order, starting with `1`;
//! `atoms:` and `delta:` take their names on the header line or the lines
//! after it; `product:` lists every defined product of two simples.

use std::collections::HashMap;
use std::fmt::Write;

use crate::error::{GarsideError, ParseError, Result};
use crate::structure::{RawStructure, StructureTable};

pub const HEADER: &str = "garside-structure v1";

const SECTIONS: [&str; 4] = ["simples", "atoms", "delta", "product"];

/// Canonical serialization; `load_structure(serialize(t))` reproduces `t`.
pub fn serialize(table: &StructureTable) -> String {
    serialize_raw(&table.to_raw())
}

pub fn serialize_raw(raw: &RawStructure) -> String {
    let mut out = String::new();
    out.push_str(HEADER);
    out.push_str("\nsimples:\n");
    for name in &raw.names {
        out.push_str(name);
        out.push('\n');
    }
    let atoms: Vec<&str> = raw.atoms.iter().map(|&a| raw.names[a].as_str()).collect();
    let _ = writeln!(out, "atoms: {}", atoms.join(" "));
    let _ = writeln!(out, "delta: {}", raw.names[raw.delta]);
    out.push_str("product:\n");
    let mut products = raw.products.clone();
    products.sort_unstable();
    for (a, b, c) in products {
        let _ = writeln!(out, "{} {} = {}", raw.names[a], raw.names[b], raw.names[c]);
    }
    out
}

/// Header line number and `(line, text)` entries of one section.
type Section<'a> = (usize, Vec<(usize, &'a str)>);

fn err(line: usize, column: usize, message: impl Into<String>) -> GarsideError {
    GarsideError::Parse(ParseError { line, column, message: message.into() })
}

/// Parses the text format without checking the axioms.
pub fn parse_raw(text: &[u8]) -> Result<RawStructure> {
    let text = std::str::from_utf8(text).map_err(|e| err(1, 1, format!("not UTF-8: {e}")))?;
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    match lines.next() {
        Some((_, l)) if l.trim() == HEADER => {}
        _ => return Err(err(1, 1, format!("expected header `{HEADER}`"))),
    }

    // Collect entries per section, remembering where each came from.
    let mut sections: HashMap<&str, Section> = HashMap::new();
    let mut current: Option<&str> = None;
    let mut last_index = None;
    for (lineno, line) in lines {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if let Some((head, rest)) = trimmed.split_once(':') {
            if !head.contains(char::is_whitespace) {
                let pos = SECTIONS
                    .iter()
                    .position(|s| *s == head)
                    .ok_or_else(|| err(lineno, 1, format!("unknown section `{head}`")))?;
                if sections.contains_key(head) {
                    return Err(err(lineno, 1, format!("section `{head}` repeated")));
                }
                if last_index.is_some_and(|l| pos < l) {
                    return Err(err(lineno, 1, format!("section `{head}` out of order")));
                }
                last_index = Some(pos);
                let head = SECTIONS[pos];
                let entries = sections.entry(head).or_insert((lineno, Vec::new()));
                if !rest.trim().is_empty() {
                    entries.1.push((lineno, rest.trim()));
                }
                current = Some(head);
                continue;
            }
        }
        match current {
            Some(s) => sections.get_mut(s).unwrap().1.push((lineno, trimmed)),
            None => return Err(err(lineno, 1, "content before the first section")),
        }
    }
    let end = text.lines().count();
    let section = |name: &str| sections.get(name).ok_or_else(|| err(end, 1, format!("missing `{name}:` section")));

    let (_, simple_lines) = section("simples")?;
    let mut names = Vec::new();
    let mut index = HashMap::new();
    for &(lineno, l) in simple_lines {
        if l.contains(char::is_whitespace) {
            return Err(err(lineno, 1, "one simple name per line"));
        }
        if index.insert(l, names.len()).is_some() {
            return Err(err(lineno, 1, format!("duplicate simple `{l}`")));
        }
        names.push(l.to_string());
    }
    let lookup = |lineno: usize, line: &str, name: &str| -> Result<usize> {
        let column = line.find(name).map_or(1, |c| c + 1);
        index.get(name).copied().ok_or_else(|| err(lineno, column, format!("unknown simple `{name}`")))
    };

    let (_, atom_lines) = section("atoms")?;
    let mut atoms = Vec::new();
    for &(lineno, l) in atom_lines {
        for name in l.split_whitespace() {
            atoms.push(lookup(lineno, l, name)?);
        }
    }

    let (delta_line, delta_lines) = section("delta")?;
    let delta = match delta_lines[..] {
        [(lineno, l)] if !l.contains(char::is_whitespace) => lookup(lineno, l, l)?,
        [] => return Err(err(*delta_line, 1, "`delta:` needs one name")),
        _ => return Err(err(*delta_line, 1, "`delta:` takes exactly one name")),
    };

    let (_, product_lines) = section("product")?;
    let mut products = Vec::with_capacity(product_lines.len());
    for &(lineno, l) in product_lines {
        let parts: Vec<&str> = l.split_whitespace().collect();
        match parts[..] {
            [a, b, "=", c] => products.push((lookup(lineno, l, a)?, lookup(lineno, l, b)?, lookup(lineno, l, c)?)),
            _ => return Err(err(lineno, 1, "expected `a b = c`")),
        }
    }

    Ok(RawStructure { names, atoms, delta, products })
}

/// Parses and validates a structure file. Files that parse but fail an
/// axiom are rejected with [`GarsideError::Axioms`].
pub fn load_structure(text: &[u8]) -> Result<StructureTable> {
    StructureTable::from_raw(parse_raw(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{braid_raw, torus};

    #[test]
    fn round_trip_torus() {
        let t = torus(2, 2).unwrap();
        let text = serialize(&t);
        let back = load_structure(text.as_bytes()).unwrap();
        assert_eq!(back, *t);
        assert_eq!(serialize(&back), text);
    }

    #[test]
    fn hand_written_b2() {
        let text = "garside-structure v1\nsimples:\n1\ns1\natoms: s1\ndelta: s1\nproduct:\n1 1 = 1\n1 s1 = s1\ns1 1 = s1\n";
        let t = load_structure(text.as_bytes()).unwrap();
        assert_eq!(t.simple_count(), 2);
        assert_eq!(t.garside_norm(), 1);
    }

    #[test]
    fn missing_delta_is_a_parse_error() {
        let text = "garside-structure v1\nsimples:\n1\ns1\natoms: s1\nproduct:\n1 1 = 1\n";
        assert!(matches!(load_structure(text.as_bytes()), Err(GarsideError::Parse(_))));
    }

    #[test]
    fn parse_errors_carry_positions() {
        let text = "garside-structure v1\nsimples:\n1\ns1\natoms: s1\ndelta: s1\nproduct:\n1 s2 = s1\n";
        match load_structure(text.as_bytes()) {
            Err(GarsideError::Parse(ParseError { line, column, .. })) => assert_eq!((line, column), (8, 3)),
            other => panic!("{other:?}"),
        }
        let text = "garside-structure v1\nsimples:\n1\nbogus:\n";
        assert!(matches!(load_structure(text.as_bytes()), Err(GarsideError::Parse(ParseError { line: 4, .. }))));
        assert!(matches!(load_structure(b"garside v2\n"), Err(GarsideError::Parse(ParseError { line: 1, .. }))));
    }

    #[test]
    fn axiom_failures_are_distinct_from_parse_errors() {
        let mut raw = braid_raw(3).unwrap();
        raw.products.retain(|&(a, b, _)| !(a == 1 && b == 1));
        let s1 = 1;
        raw.products.push((s1, s1, raw.delta));
        let text = serialize_raw(&raw);
        assert!(matches!(load_structure(text.as_bytes()), Err(GarsideError::Axioms(_))));
    }
}
