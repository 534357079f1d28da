//! Summit invariants, super summit sets and conjugacy decisions.
//!
//! Conjugators follow one convention throughout: a conjugator `w` for
//! `g → h` satisfies `w⁻¹·g·w = h`.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{GarsideError, Result};
use crate::element::Element;

pub const DEFAULT_CAP: usize = 100_000;

/// `infs`, `sups`, `lens` of a conjugacy class together with a summit
/// representative and the conjugator reaching it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummitData {
    pub infs: i64,
    pub sups: i64,
    pub lens: i64,
    pub representative: Element,
    /// `conjugator⁻¹·g·conjugator = representative`.
    pub conjugator: Element,
}

/// Moves the first factor, twisted by `τ^{-inf}`, to the end.
pub fn cycling(g: &Element) -> (Element, Element) {
    let Some(&first) = g.factors().first() else {
        return (g.clone(), Element::identity(g.table()));
    };
    let table = g.table();
    let w = Element::from_simple(table, table.tau_pow(first, -g.inf()));
    (g.conjugate_by(&w), w)
}

/// Moves the last factor to the front.
pub fn decycling(g: &Element) -> (Element, Element) {
    let Some(&last) = g.factors().last() else {
        return (g.clone(), Element::identity(g.table()));
    };
    let w = Element::from_simple(g.table(), last).inverse();
    (g.conjugate_by(&w), w)
}

/// Iterated cycling until `inf` has not grown for `‖Δ‖` consecutive steps,
/// then iterated decycling until `sup` has not dropped for `‖Δ‖` steps.
pub fn summit_invariants(g: &Element) -> SummitData {
    let bound = g.table().garside_norm().max(1);
    let mut current = g.clone();
    let mut conjugator = Element::identity(g.table());

    let mut stalled = 0;
    while stalled < bound && !current.is_delta_power() {
        let (next, w) = cycling(&current);
        stalled = if next.inf() > current.inf() { 0 } else { stalled + 1 };
        conjugator = &conjugator * &w;
        current = next;
    }
    let mut stalled = 0;
    while stalled < bound && !current.is_delta_power() {
        let (next, w) = decycling(&current);
        stalled = if next.sup() < current.sup() { 0 } else { stalled + 1 };
        conjugator = &conjugator * &w;
        current = next;
    }
    SummitData {
        infs: current.inf(),
        sups: current.sup(),
        lens: current.sup() - current.inf(),
        representative: current,
        conjugator,
    }
}

/// Super summit set with, for each member `h`, a conjugator `w` such that
/// `w⁻¹·g·w = h`. Keys are in canonical order.
pub fn super_summit_set_with_conjugators(g: &Element, cap: usize) -> Result<BTreeMap<Element, Element>> {
    let summit = summit_invariants(g);
    let table = g.table();
    let mut found = BTreeMap::new();
    found.insert(summit.representative.clone(), summit.conjugator.clone());
    let mut queue = VecDeque::from([summit.representative.clone()]);
    while let Some(x) = queue.pop_front() {
        let wx = found[&x].clone();
        for s in table.simples().skip(1) {
            let y = x.conjugate_by_simple(s);
            if y.inf() != summit.infs || y.sup() != summit.sups || found.contains_key(&y) {
                continue;
            }
            if found.len() >= cap {
                return Err(GarsideError::CapExceeded { cap });
            }
            found.insert(y.clone(), &wx * &Element::from_simple(table, s));
            queue.push_back(y);
        }
    }
    Ok(found)
}

/// All conjugates of `g` realising both `infs` and `sups`, in canonical
/// order.
pub fn super_summit_set(g: &Element, cap: usize) -> Result<Vec<Element>> {
    Ok(super_summit_set_with_conjugators(g, cap)?.into_keys().collect())
}

/// A conjugator `w` with `w⁻¹·g·w = h`, or `None` when `g` and `h` are not
/// conjugate.
pub fn is_conjugate(g: &Element, h: &Element, cap: usize) -> Result<Option<Element>> {
    if !g.same_table(h) {
        return Err(GarsideError::TableMismatch);
    }
    let sh = summit_invariants(h);
    let sg = summit_invariants(g);
    if (sg.infs, sg.sups) != (sh.infs, sh.sups) {
        return Ok(None);
    }
    let sss = super_summit_set_with_conjugators(g, cap)?;
    Ok(sss.get(&sh.representative).map(|w| w * &sh.conjugator.inverse()))
}

/// `(a, w)` with `w⁻¹·g·w = Δ^a` when `g` is conjugate to a power of Δ.
pub fn conjugate_to_delta_power(g: &Element) -> Option<(i64, Element)> {
    let s = summit_invariants(g);
    (s.lens == 0).then_some((s.infs, s.conjugator))
}
