//! Words in the atoms and their inverses.
//!
//! Text syntax: whitespace-separated tokens `name`, `name^k` where `name` is
//! any simple of the structure (expanded into atoms) or `D` for Δ, and `k`
//! a nonzero integer.

use crate::error::{GarsideError, Result};
use crate::structure::{SimpleId, StructureTable};

const MAX_EXPONENT: i64 = 1 << 20;

/// A sequence of `(atom, ±1)` letters.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Word {
    letters: Vec<(SimpleId, i8)>,
}

impl Word {
    /// Builds a word, checking that every letter is an atom with exponent
    /// `±1`.
    pub fn new(table: &StructureTable, letters: Vec<(SimpleId, i8)>) -> Result<Self> {
        for (i, &(s, e)) in letters.iter().enumerate() {
            if !table.is_atom(s) || (e != 1 && e != -1) {
                return Err(GarsideError::Word { position: i, message: "letters must be atoms with exponent ±1".into() });
            }
        }
        Ok(Word { letters })
    }

    pub fn letters(&self) -> &[(SimpleId, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|&(s, e)| (s, -e)).collect() }
    }

    pub fn parse(table: &StructureTable, text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for (position, token) in text.split_whitespace().enumerate() {
            let err = |message: String| GarsideError::Word { position, message };
            let (name, exponent) = match token.rsplit_once('^') {
                Some((name, exp)) => {
                    let k: i64 = exp.parse().map_err(|_| err(format!("bad exponent in `{token}`")))?;
                    if k.abs() > MAX_EXPONENT {
                        return Err(err(format!("exponent too large in `{token}`")));
                    }
                    (name, k)
                }
                None => (token, 1),
            };
            let simple = if name == "D" {
                table.delta()
            } else {
                table.lookup(name).ok_or_else(|| err(format!("unknown simple `{name}`")))?
            };
            let atoms = table.atom_word(simple);
            for _ in 0..exponent.unsigned_abs() {
                if exponent > 0 {
                    letters.extend(atoms.iter().map(|&a| (a, 1)));
                } else {
                    letters.extend(atoms.iter().rev().map(|&a| (a, -1)));
                }
            }
        }
        Ok(Word { letters })
    }

    pub fn to_text(&self, table: &StructureTable) -> String {
        self.letters
            .iter()
            .map(|&(s, e)| if e > 0 { table.name(s).to_string() } else { format!("{}^-1", table.name(s)) })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{braid_classical, torus};

    #[test]
    fn parses_exponents_and_delta() {
        let b3 = braid_classical(3).unwrap();
        let w = Word::parse(&b3, "s1^2 s2^-1 D").unwrap();
        assert_eq!(w.to_text(&b3), "s1 s1 s2^-1 s1 s2 s1");
        let w = Word::parse(&b3, "s1s2^-1").unwrap();
        assert_eq!(w.to_text(&b3), "s2^-1 s1^-1");
        assert!(Word::parse(&b3, "  ").unwrap().is_empty());
        assert!(Word::parse(&b3, "1").unwrap().is_empty());
    }

    #[test]
    fn rejects_unknown_tokens() {
        let t = torus(2, 3).unwrap();
        assert!(matches!(Word::parse(&t, "x z"), Err(GarsideError::Word { position: 1, .. })));
        assert!(matches!(Word::parse(&t, "x^a"), Err(GarsideError::Word { position: 0, .. })));
    }

    #[test]
    fn letters_must_be_atoms() {
        let b3 = braid_classical(3).unwrap();
        let s1s2 = b3.lookup("s1s2").unwrap();
        assert!(Word::new(&b3, vec![(s1s2, 1)]).is_err());
        assert!(Word::new(&b3, vec![(b3.lookup("s1").unwrap(), -1)]).is_ok());
    }
}
