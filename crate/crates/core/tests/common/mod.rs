#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};
use std::sync::{Arc, OnceLock};

use garside::{braid_classical, free_abelian, torus, Element, StructureTable};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn tables() -> &'static [(&'static str, Arc<StructureTable>)] {
    static TABLES: OnceLock<Vec<(&'static str, Arc<StructureTable>)>> = OnceLock::new();
    TABLES.get_or_init(|| {
        vec![
            ("braid:3", braid_classical(3).unwrap()),
            ("braid:4", braid_classical(4).unwrap()),
            ("torus:2:2", torus(2, 2).unwrap()),
            ("torus:3:3", torus(3, 3).unwrap()),
            ("torus:2:3", torus(2, 3).unwrap()),
            ("free_abelian:2", free_abelian(2).unwrap()),
            ("free_abelian:3", free_abelian(3).unwrap()),
        ]
    })
}

pub fn table(name: &str) -> Arc<StructureTable> {
    tables().iter().find(|(n, _)| *n == name).map(|(_, t)| t.clone()).unwrap()
}

/// `Δ^inf` times up to `max_len` uniformly chosen simples (the normal form
/// may come out shorter).
pub fn random_element(rng: &mut impl Rng, table: &Arc<StructureTable>, inf_range: i64, max_len: usize) -> Element {
    let n = table.simple_count();
    let len = rng.gen_range(0..=max_len);
    let simples: Vec<_> = (0..len).map(|_| table.simple(rng.gen_range(0..n)).unwrap()).collect();
    Element::from_simples(table, rng.gen_range(-inf_range..=inf_range), simples)
}

/// Random element of canonical length at most `max_len`.
pub fn random_bounded(rng: &mut impl Rng, table: &Arc<StructureTable>, max_len: usize) -> Element {
    loop {
        let g = random_element(rng, table, 2, max_len);
        if g.canonical_length() <= max_len {
            return g;
        }
    }
}

/// Random word text in atoms and their inverses.
pub fn random_word_text(rng: &mut impl Rng, table: &StructureTable, len: usize) -> String {
    let atoms = table.atoms();
    (0..len)
        .map(|_| {
            let a = table.name(*atoms.choose(rng).unwrap());
            if rng.gen_bool(0.5) {
                a.to_string()
            } else {
                format!("{a}^-1")
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// `(max inf, min sup)` over the conjugates of `g` reachable by conjugating
/// with simples and their inverses while staying inside the band
/// `inf ≥ inf(g)`, `sup ≤ sup(g)`. Uses only plain group multiplication.
pub fn band_oracle(g: &Element, cap: usize) -> (i64, i64) {
    let table = g.table();
    let conjugators: Vec<Element> = table
        .simples()
        .skip(1)
        .flat_map(|s| {
            let e = Element::from_simple(table, s);
            [e.inverse(), e]
        })
        .collect();
    let (lo, hi) = (g.inf(), g.sup());
    let mut seen = BTreeSet::from([g.clone()]);
    let mut queue = VecDeque::from([g.clone()]);
    let (mut best_inf, mut best_sup) = (lo, hi);
    while let Some(x) = queue.pop_front() {
        best_inf = best_inf.max(x.inf());
        best_sup = best_sup.min(x.sup());
        for w in &conjugators {
            let y = &(&w.inverse() * &x) * w;
            if y.inf() < lo || y.sup() > hi || seen.contains(&y) {
                continue;
            }
            assert!(seen.len() < cap, "band oracle exceeded {cap} elements");
            seen.insert(y.clone());
            queue.push_back(y);
        }
    }
    (best_inf, best_sup)
}

/// Smallest `j ≥ 1` with `g^j` a power of `Δ^m`, by direct multiplication.
pub fn minimal_central_power(g: &Element, limit: u64) -> Option<u64> {
    let m = g.table().central_exponent() as i64;
    let mut power = Element::identity(g.table());
    for j in 1..=limit {
        power = &power * g;
        if power.is_delta_power() && power.inf().rem_euclid(m) == 0 {
            return Some(j);
        }
    }
    None
}
