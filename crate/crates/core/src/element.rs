//! Group elements in left normal form `Δ^p·s₁⋯s_ℓ`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Mul;
use std::sync::Arc;

use crate::error::{GarsideError, Result};
use crate::structure::{SimpleId, StructureTable};
use crate::word::Word;

/// An element of the Garside group of a [`StructureTable`], stored in left
/// normal form. Two elements are equal iff their normal forms coincide.
#[derive(Clone)]
pub struct Element {
    table: Arc<StructureTable>,
    inf: i64,
    factors: Vec<SimpleId>,
}

/// Incremental left normal form of `Δ^inf` times a growing product of
/// simples.
struct Normalizer<'a> {
    table: &'a StructureTable,
    inf: i64,
    factors: Vec<SimpleId>,
}

impl<'a> Normalizer<'a> {
    /// `factors` must already be left-weighted.
    fn new(table: &'a StructureTable, inf: i64, factors: Vec<SimpleId>) -> Self {
        Normalizer { table, inf, factors }
    }

    /// Replaces the pair at `i, i+1` by its left-weighted form.
    fn weight_pair(&mut self, i: usize) -> bool {
        let t = self.table;
        let (s, u) = (self.factors[i], self.factors[i + 1]);
        let a = t.meet_left(t.left_complement(s), u);
        if a == SimpleId::IDENTITY {
            return false;
        }
        self.factors[i] = t.product(s, a).expect("s·(∂s ∧ u) is simple");
        self.factors[i + 1] = t.left_quotient(a, u).expect("∂s ∧ u divides u");
        true
    }

    fn push(&mut self, s: SimpleId) {
        if s == SimpleId::IDENTITY {
            return;
        }
        self.factors.push(s);
        let mut i = self.factors.len() - 1;
        while i > 0 && self.weight_pair(i - 1) {
            i -= 1;
        }
        while self.factors.last() == Some(&SimpleId::IDENTITY) {
            self.factors.pop();
        }
    }

    fn finish(mut self) -> (i64, Vec<SimpleId>) {
        // The leftward pass above already yields a normal form; the sweep
        // only confirms it.
        loop {
            let mut changed = false;
            for i in 0..self.factors.len().saturating_sub(1) {
                changed |= self.weight_pair(i);
            }
            if !changed {
                break;
            }
        }
        let delta = self.table.delta();
        let lead = self.factors.iter().take_while(|&&s| s == delta).count();
        let tail = self.factors.iter().rev().take_while(|&&s| s == SimpleId::IDENTITY).count();
        let end = self.factors.len() - tail;
        let factors = if lead >= end { Vec::new() } else { self.factors[lead..end].to_vec() };
        (self.inf + lead as i64, factors)
    }
}

impl Element {
    fn from_parts(table: Arc<StructureTable>, inf: i64, factors: Vec<SimpleId>) -> Self {
        Element { table, inf, factors }
    }

    pub fn identity(table: &Arc<StructureTable>) -> Self {
        Self::from_parts(table.clone(), 0, Vec::new())
    }

    pub fn delta_power(table: &Arc<StructureTable>, k: i64) -> Self {
        Self::from_parts(table.clone(), k, Vec::new())
    }

    pub fn from_simple(table: &Arc<StructureTable>, s: SimpleId) -> Self {
        if s == table.delta() {
            Self::delta_power(table, 1)
        } else if s == SimpleId::IDENTITY {
            Self::identity(table)
        } else {
            Self::from_parts(table.clone(), 0, vec![s])
        }
    }

    /// Normal form of `Δ^inf` times an arbitrary product of simples.
    pub fn from_simples(table: &Arc<StructureTable>, inf: i64, simples: impl IntoIterator<Item = SimpleId>) -> Self {
        let mut nz = Normalizer::new(table, inf, Vec::new());
        for s in simples {
            nz.push(s);
        }
        let (inf, factors) = nz.finish();
        Self::from_parts(table.clone(), inf, factors)
    }

    /// Accepts `(inf, factors)` only if it already is a left normal form.
    pub fn from_normal_form(table: &Arc<StructureTable>, inf: i64, factors: Vec<SimpleId>) -> Result<Self> {
        let g = Self::from_parts(table.clone(), inf, factors);
        if g.factors.iter().any(|&s| s == SimpleId::IDENTITY || s == table.delta()) || !g.is_left_weighted() {
            return Err(GarsideError::Internal("not a left normal form".into()));
        }
        Ok(g)
    }

    /// The element spelled by a word in the atoms and their inverses.
    pub fn from_word(table: &Arc<StructureTable>, word: &Word) -> Self {
        let mut g = Self::identity(table);
        for &(atom, exp) in word.letters() {
            let a = Self::from_simple(table, atom);
            g = if exp > 0 { &g * &a } else { &g * &a.inverse() };
        }
        g
    }

    /// Parses the word syntax of [`Word::parse`].
    pub fn parse(table: &Arc<StructureTable>, text: &str) -> Result<Self> {
        Ok(Self::from_word(table, &Word::parse(table, text)?))
    }

    pub fn table(&self) -> &Arc<StructureTable> {
        &self.table
    }

    pub fn same_table(&self, other: &Element) -> bool {
        Arc::ptr_eq(&self.table, &other.table) || *self.table == *other.table
    }

    pub fn inf(&self) -> i64 {
        self.inf
    }

    pub fn sup(&self) -> i64 {
        self.inf + self.factors.len() as i64
    }

    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    /// `(inf, sup, len)`.
    pub fn invariants(&self) -> (i64, i64, i64) {
        (self.inf(), self.sup(), self.factors.len() as i64)
    }

    pub fn factors(&self) -> &[SimpleId] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    pub fn is_delta_power(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.inf >= 0
    }

    pub fn is_left_weighted(&self) -> bool {
        let t = &self.table;
        self.factors
            .windows(2)
            .all(|w| t.meet_left(t.left_complement(w[0]), w[1]) == SimpleId::IDENTITY)
    }

    /// Product `self·other`, or an error if the operands live in different
    /// structures.
    pub fn multiply(&self, other: &Element) -> Result<Element> {
        if !self.same_table(other) {
            return Err(GarsideError::TableMismatch);
        }
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Element) -> Element {
        let t = &*self.table;
        let q = other.inf;
        let head = self.factors.iter().map(|&s| t.tau_pow(s, q)).collect();
        let mut nz = Normalizer::new(t, self.inf + q, head);
        for &s in &other.factors {
            nz.push(s);
        }
        let (inf, factors) = nz.finish();
        Self::from_parts(self.table.clone(), inf, factors)
    }

    pub fn inverse(&self) -> Element {
        let t = &*self.table;
        let p = self.inf;
        let l = self.factors.len() as i64;
        let mut nz = Normalizer::new(t, -p - l, Vec::new());
        for (i, &s) in self.factors.iter().enumerate().rev() {
            nz.push(t.tau_pow(t.left_complement(s), -(p + i as i64 + 1)));
        }
        let (inf, factors) = nz.finish();
        Self::from_parts(self.table.clone(), inf, factors)
    }

    /// `self^n` by repeated squaring.
    pub fn power(&self, n: i64) -> Element {
        let mut base = if n < 0 { self.inverse() } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = Self::identity(&self.table);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `Δ^{-k}·self·Δ^k`.
    pub fn tau(&self, k: i64) -> Element {
        let t = &*self.table;
        let factors = self.factors.iter().map(|&s| t.tau_pow(s, k)).collect();
        Self::from_parts(self.table.clone(), self.inf, factors)
    }

    /// `w⁻¹·self·w`.
    pub fn conjugate_by(&self, w: &Element) -> Element {
        &(&w.inverse() * self) * w
    }

    /// `s⁻¹·self·s` for a simple `s`, without building `s⁻¹` separately.
    pub fn conjugate_by_simple(&self, s: SimpleId) -> Element {
        let t = &*self.table;
        // s⁻¹ = Δ⁻¹·τ⁻¹(∂s), and Δ⁻¹·x·Δ^p = Δ^{p-1}·τ^p(x).
        let x = t.tau_pow(t.left_complement(s), -1);
        let head = t.tau_pow(x, self.inf);
        Self::from_simples(
            &self.table,
            self.inf - 1,
            std::iter::once(head).chain(self.factors.iter().copied()).chain(std::iter::once(s)),
        )
    }

    pub fn commutes_with(&self, other: &Element) -> bool {
        self * other == other * self
    }

    /// Whether `self ≤_L other`, i.e. `self⁻¹·other` is positive.
    pub fn left_divides(&self, other: &Element) -> bool {
        (&self.inverse() * other).is_positive()
    }

    /// Whether `self ≤_R other`, i.e. `other·self⁻¹` is positive.
    pub fn right_divides(&self, other: &Element) -> bool {
        (other * &self.inverse()).is_positive()
    }

    /// Spells the element as a word: `D^p` followed by the factor names.
    pub fn to_word_text(&self) -> String {
        let mut parts = Vec::new();
        match self.inf {
            0 => {}
            1 => parts.push("D".to_string()),
            p => parts.push(format!("D^{p}")),
        }
        parts.extend(self.factors.iter().map(|&s| self.table.name(s).to_string()));
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join(" ")
        }
    }

    pub fn factor_names(&self) -> Vec<String> {
        self.factors.iter().map(|&s| self.table.name(s).to_string()).collect()
    }
}

/// Panics if the operands come from different structures; use
/// [`Element::multiply`] for a fallible product.
impl Mul<&Element> for &Element {
    type Output = Element;

    fn mul(self, rhs: &Element) -> Element {
        assert!(self.same_table(rhs), "elements belong to different structures");
        self.mul_unchecked(rhs)
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.inf == other.inf && self.factors == other.factors && self.same_table(other)
    }
}

impl Eq for Element {}

impl Hash for Element {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.inf.hash(state);
        self.factors.hash(state);
    }
}

/// Canonical order: by `inf`, then by the sequence of factor indices.
impl Ord for Element {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.inf, &self.factors)
            .cmp(&(other.inf, &other.factors))
            .then(self.table.fingerprint().cmp(&other.table.fingerprint()))
    }
}

impl PartialOrd for Element {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({})", self.to_word_text())
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_word_text())
    }
}

/// Meet and join of two simples under `≤_L`.
pub fn lattice_ops(table: &StructureTable, a: SimpleId, b: SimpleId) -> (SimpleId, SimpleId) {
    (table.meet_left(a, b), table.join_left(a, b))
}

/// Simple left and right divisors of a positive element.
pub fn divisor_sets(g: &Element) -> Result<(Vec<SimpleId>, Vec<SimpleId>)> {
    if !g.is_positive() {
        return Err(GarsideError::NotPositive { inf: g.inf() });
    }
    let table = g.table();
    let mut left = Vec::new();
    let mut right = Vec::new();
    for s in table.simples() {
        let e = Element::from_simple(table, s);
        if e.left_divides(g) {
            left.push(s);
        }
        if e.right_divides(g) {
            right.push(s);
        }
    }
    Ok((left, right))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{braid_classical, free_abelian, torus};

    #[test]
    fn braid_relation_gives_delta() {
        let b3 = braid_classical(3).unwrap();
        let g = Element::parse(&b3, "s1 s2 s1").unwrap();
        assert_eq!(g.inf(), 1);
        assert!(g.factors().is_empty());
    }

    #[test]
    fn empty_word_is_identity() {
        for t in [braid_classical(3).unwrap(), torus(2, 3).unwrap(), free_abelian(2).unwrap()] {
            assert!(Element::parse(&t, "").unwrap().is_identity());
        }
    }

    #[test]
    fn atom_inverse_normal_form() {
        let b3 = braid_classical(3).unwrap();
        let g = Element::parse(&b3, "s1^-1").unwrap();
        assert_eq!(g.inf(), -1);
        assert_eq!(g.factor_names(), ["s1s2"]);
        assert!((&g * &Element::parse(&b3, "s1").unwrap()).is_identity());
    }

    #[test]
    fn products_and_powers() {
        let b3 = braid_classical(3).unwrap();
        let s1 = Element::parse(&b3, "s1").unwrap();
        let s2s1 = Element::parse(&b3, "s2 s1").unwrap();
        assert_eq!(&s1 * &s2s1, Element::delta_power(&b3, 1));
        let s1s2 = Element::parse(&b3, "s1 s2").unwrap();
        assert_eq!(s1s2.power(3), Element::delta_power(&b3, 2));
        assert_eq!(s1s2.power(-3), Element::delta_power(&b3, -2));
        assert_eq!(s1s2.power(2).factor_names(), ["s2"]);
        assert_eq!(s1s2.power(2).inf(), 1);
    }

    #[test]
    fn mixing_tables_is_an_error() {
        let b3 = braid_classical(3).unwrap();
        let z2 = free_abelian(2).unwrap();
        let g = Element::parse(&b3, "s1").unwrap();
        let h = Element::parse(&z2, "e1").unwrap();
        assert_eq!(g.multiply(&h), Err(GarsideError::TableMismatch));
        // Independently built copies of the same structure are compatible.
        let b3b = braid_classical(3).unwrap();
        assert!(g.multiply(&Element::parse(&b3b, "s2").unwrap()).is_ok());
    }

    #[test]
    fn invariants_examples() {
        let b3 = braid_classical(3).unwrap();
        assert_eq!(Element::delta_power(&b3, 2).invariants(), (2, 2, 0));
        assert_eq!(Element::parse(&b3, "s1 s2").unwrap().invariants(), (0, 1, 1));
        let t22 = torus(2, 2).unwrap();
        let g = Element::parse(&t22, "y^-1 x y").unwrap();
        assert_eq!(g.invariants(), (-1, 2, 3));
        assert_eq!(g.factor_names(), ["y", "x", "y"]);
    }

    #[test]
    fn lattice_examples() {
        let b3 = braid_classical(3).unwrap();
        let id = |n: &str| b3.lookup(n).unwrap();
        assert_eq!(lattice_ops(&b3, id("s1s2"), id("s1")).0, id("s1"));
        assert_eq!(lattice_ops(&b3, id("s1"), id("s2")).1, b3.delta());
        assert_eq!(b3.tau(id("s1")), id("s2"));
        assert_eq!(b3.tau_order(), 2);
        for a in 2..=4 {
            let t = torus(a, a).unwrap();
            assert_eq!(t.meet_left(t.lookup("x").unwrap(), t.lookup("y").unwrap()), SimpleId::IDENTITY);
        }
        assert_eq!(free_abelian(2).unwrap().tau_order(), 1);
        let z3 = free_abelian(3).unwrap();
        let m = z3.meet_left(z3.lookup("e1e2").unwrap(), z3.lookup("e2e3").unwrap());
        assert_eq!(z3.name(m), "e2");
        for s in b3.simples() {
            let c = b3.left_complement(s);
            assert_eq!(b3.product(s, c), Some(b3.delta()));
        }
    }

    #[test]
    fn tau_on_elements() {
        let b3 = braid_classical(3).unwrap();
        let s1 = Element::parse(&b3, "s1").unwrap();
        assert_eq!(s1.tau(1), Element::parse(&b3, "s2").unwrap());
        assert_eq!(s1.tau(2), s1);
        assert_eq!(s1.tau(-1), s1.conjugate_by(&Element::delta_power(&b3, -1)));
    }

    #[test]
    fn divisor_set_examples() {
        let b3 = braid_classical(3).unwrap();
        let (l, r) = divisor_sets(&Element::delta_power(&b3, 1)).unwrap();
        assert_eq!(l.len(), 6);
        assert_eq!(l, r);

        let t22 = torus(2, 2).unwrap();
        let (l, r) = divisor_sets(&Element::parse(&t22, "x").unwrap()).unwrap();
        let names: Vec<_> = l.iter().map(|&s| t22.name(s)).collect();
        assert_eq!(names, ["1", "x"]);
        assert_eq!(l, r);

        let z2 = free_abelian(2).unwrap();
        let (l, r) = divisor_sets(&Element::parse(&z2, "e1^2 e2").unwrap()).unwrap();
        assert_eq!(l.len(), 4);
        assert_eq!(l, r);

        let neg = Element::parse(&b3, "s1^-1").unwrap();
        assert!(matches!(divisor_sets(&neg), Err(GarsideError::NotPositive { inf: -1 })));
    }

    #[test]
    fn conjugate_by_simple_matches_generic() {
        let b4 = braid_classical(4).unwrap();
        let g = Element::parse(&b4, "s1 s3^-1 s2 s2 s1^-1").unwrap();
        for s in b4.simples() {
            let w = Element::from_simple(&b4, s);
            assert_eq!(g.conjugate_by_simple(s), g.conjugate_by(&w));
        }
    }
}
