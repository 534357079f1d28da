//! The central quotient `G_Δ = G/⟨Δ^m⟩`.
//!
//! Since `τ^m = id`, `Δ^m` is central and multiplying by it only shifts
//! `inf`. A coset is therefore represented by the element whose `inf` lies
//! in `[0, m)`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_integer::Integer;

use crate::conjugacy::is_conjugate;
use crate::element::Element;
use crate::error::{GarsideError, Result};
use crate::periodicity::{periodicity_class, translation_numbers, Rational};
use crate::structure::{SimpleId, StructureTable};

use std::sync::Arc;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum QuotientOrder {
    Finite(u64),
    Infinite,
}

impl fmt::Display for QuotientOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuotientOrder::Finite(n) => write!(f, "{n}"),
            QuotientOrder::Infinite => f.write_str("infinite"),
        }
    }
}

/// A witness `Δ^u·a` of a finite cyclic subgroup of `G_Δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeIGenerator {
    /// Reduced mod `m`.
    pub u: i64,
    pub a: SimpleId,
    /// `None` exactly when `a` is the identity.
    pub q: Option<i64>,
    pub element: Element,
    pub order: u64,
}

/// Canonical representative of the coset `g·⟨Δ^m⟩`.
pub fn coset_representative(g: &Element) -> Element {
    let m = g.table().central_exponent() as i64;
    let shift = g.inf().div_euclid(m) * m;
    if shift == 0 {
        return g.clone();
    }
    &Element::delta_power(g.table(), -shift) * g
}

/// `g ∈ ⟨Δ^m⟩`.
pub fn is_trivial_in_quotient(g: &Element) -> bool {
    g.is_delta_power() && g.inf().rem_euclid(g.table().central_exponent() as i64) == 0
}

/// Order of the image of `g` in `G_Δ`. For a `p/q`-periodic `g` this is
/// `q·m / gcd(p, m)`; the value is confirmed by checking every smaller power.
pub fn quotient_order(g: &Element) -> Result<QuotientOrder> {
    let Some(report) = periodicity_class(g)? else {
        return Ok(QuotientOrder::Infinite);
    };
    let m = g.table().central_exponent() as i64;
    let expected = report.q * m / report.p.gcd(&m);
    let mut power = Element::identity(g.table());
    for j in 1..=expected {
        power = &power * g;
        if is_trivial_in_quotient(&power) {
            if j != expected {
                return Err(GarsideError::Internal(format!("g^{j} is trivial in the quotient, expected order {expected}")));
            }
            return Ok(QuotientOrder::Finite(j as u64));
        }
    }
    Err(GarsideError::Internal(format!("g^{expected} is not trivial in the quotient")))
}

fn finite_order(g: &Element) -> Result<u64> {
    match quotient_order(g)? {
        QuotientOrder::Finite(n) => Ok(n),
        QuotientOrder::Infinite => Err(GarsideError::Internal(format!("{g} has infinite order in the quotient"))),
    }
}

/// `τ^{(q−1)u}(a)·τ^{(q−2)u}(a)⋯τ^u(a)·a` as an element.
fn twisted_product(table: &Arc<StructureTable>, u: i64, a: SimpleId, q: i64) -> Element {
    let mut product = Element::identity(table);
    for i in (0..q).rev() {
        product = &product * &Element::from_simple(table, table.tau_pow(a, i * u));
    }
    product
}

/// Every `(u, a, q)` with `u ∈ [0, m)`, `a ≠ Δ` and `2 ≤ q ≤ ‖Δ‖` whose
/// twisted product equals Δ, plus the pure powers `Δ^u`. Ordered by `u`,
/// then `a`, then `q`.
pub fn enumerate_type_i(table: &Arc<StructureTable>) -> Result<Vec<TypeIGenerator>> {
    let m = table.central_exponent() as i64;
    let norm = table.garside_norm() as i64;
    let delta = Element::delta_power(table, 1);
    let mut out = Vec::new();
    for u in 0..m {
        let shift = Element::delta_power(table, u);
        for a in table.simples() {
            if a == table.delta() {
                continue;
            }
            let element = &shift * &Element::from_simple(table, a);
            if a == table.identity() {
                let order = finite_order(&element)?;
                out.push(TypeIGenerator { u, a, q: None, element, order });
                continue;
            }
            for q in 2..=norm {
                if twisted_product(table, u, a, q) != delta {
                    continue;
                }
                if element.power(q) != Element::delta_power(table, u * q + 1) {
                    return Err(GarsideError::Internal(format!("(Δ^{u}·{})^{q} differs from Δ^{}", table.name(a), u * q + 1)));
                }
                let order = finite_order(&element)?;
                out.push(TypeIGenerator { u, a, q: Some(q), element: element.clone(), order });
            }
        }
    }
    Ok(out)
}

/// Partitions generator indices into conjugacy classes of their elements.
pub fn group_by_conjugacy(generators: &[TypeIGenerator], cap: usize) -> Result<Vec<Vec<usize>>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    'next: for (i, g) in generators.iter().enumerate() {
        for class in &mut classes {
            if is_conjugate(&generators[class[0]].element, &g.element, cap)?.is_some() {
                class.push(i);
                continue 'next;
            }
        }
        classes.push(vec![i]);
    }
    Ok(classes)
}

/// Whether `INF(g·h) = INF(g) + INF(h)` for commuting periodic `g`, `h`.
pub fn inf_additivity_check(g: &Element, h: &Element) -> Result<bool> {
    if !g.same_table(h) {
        return Err(GarsideError::TableMismatch);
    }
    if !g.commutes_with(h) {
        return Err(GarsideError::NotCommuting);
    }
    let zero = Rational::from_integer(0);
    let (tg, th) = (translation_numbers(g), translation_numbers(h));
    if tg.len != zero || th.len != zero {
        return Err(GarsideError::NotPeriodic);
    }
    Ok(translation_numbers(&(g * h)).inf == tg.inf + th.inf)
}

/// Enumerates the subgroup of `G_Δ` generated by the images of pairwise
/// commuting periodic elements and returns a single generator of it
/// together with its order.
pub fn certify_cyclic(generators: &[Element], cap: usize) -> Result<(Element, u64)> {
    let Some(first) = generators.first() else {
        return Err(GarsideError::Hypothesis("at least one generator is required".into()));
    };
    for (i, g) in generators.iter().enumerate() {
        if !g.same_table(first) {
            return Err(GarsideError::TableMismatch);
        }
        if periodicity_class(g)?.is_none() {
            return Err(GarsideError::NotPeriodic);
        }
        if generators[..i].iter().any(|h| !g.commutes_with(h)) {
            return Err(GarsideError::NotCommuting);
        }
    }
    let subgroup = quotient_closure(generators, cap)?;
    let size = subgroup.len() as u64;
    for candidate in &subgroup {
        if quotient_order(candidate)? == QuotientOrder::Finite(size) {
            return Ok((candidate.clone(), size));
        }
    }
    Err(GarsideError::Internal(format!("no single generator for a subgroup of order {size}")))
}

/// Coset representatives of the subgroup of `G_Δ` generated by `generators`.
pub fn quotient_closure(generators: &[Element], cap: usize) -> Result<BTreeSet<Element>> {
    let Some(first) = generators.first() else {
        return Err(GarsideError::Hypothesis("at least one generator is required".into()));
    };
    let reduced: Vec<Element> = generators.iter().map(coset_representative).collect();
    let one = Element::identity(first.table());
    let mut found = BTreeSet::from([one.clone()]);
    let mut queue = VecDeque::from([one]);
    while let Some(x) = queue.pop_front() {
        for g in &reduced {
            let y = coset_representative(&(&x * g));
            if found.contains(&y) {
                continue;
            }
            if found.len() >= cap {
                return Err(GarsideError::CapExceeded { cap });
            }
            found.insert(y.clone());
            queue.push_back(y);
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conjugacy::DEFAULT_CAP;
    use crate::instances::{braid_classical, free_abelian, torus};

    #[test]
    fn order_examples() {
        let b3 = braid_classical(3).unwrap();
        assert_eq!(quotient_order(&Element::parse(&b3, "s1 s2").unwrap()).unwrap(), QuotientOrder::Finite(3));
        assert_eq!(quotient_order(&Element::delta_power(&b3, 1)).unwrap(), QuotientOrder::Finite(2));
        assert_eq!(quotient_order(&Element::delta_power(&b3, 2)).unwrap(), QuotientOrder::Finite(1));
        assert_eq!(quotient_order(&Element::parse(&b3, "s1").unwrap()).unwrap(), QuotientOrder::Infinite);
        let t22 = torus(2, 2).unwrap();
        assert_eq!(quotient_order(&Element::parse(&t22, "x").unwrap()).unwrap(), QuotientOrder::Finite(2));
    }

    #[test]
    fn coset_representatives_reduce_inf() {
        let b3 = braid_classical(3).unwrap();
        let g = Element::parse(&b3, "D^-3 s1").unwrap();
        let r = coset_representative(&g);
        assert_eq!(r.inf(), 1);
        assert_eq!(r.factors(), g.factors());
    }

    #[test]
    fn type_i_b3() {
        let b3 = braid_classical(3).unwrap();
        let gens = enumerate_type_i(&b3).unwrap();
        let s1 = b3.lookup("s1").unwrap();
        let s2 = b3.lookup("s2").unwrap();
        let proper: Vec<_> = gens.iter().filter(|g| g.q.is_some()).map(|g| (g.u, g.a, g.q.unwrap(), g.order)).collect();
        assert_eq!(proper, [(1, s1, 3, 3), (1, s2, 3, 3)]);
        let pure: Vec<_> = gens.iter().filter(|g| g.q.is_none()).map(|g| (g.u, g.order)).collect();
        assert_eq!(pure, [(0, 1), (1, 2)]);
        let classes = group_by_conjugacy(&gens, DEFAULT_CAP).unwrap();
        assert_eq!(classes.len(), 3);
    }

    #[test]
    fn type_i_torus_and_abelian() {
        let t22 = torus(2, 2).unwrap();
        let gens = enumerate_type_i(&t22).unwrap();
        let proper: Vec<_> =
            gens.iter().filter(|g| g.q.is_some()).map(|g| (g.u, t22.name(g.a), g.q.unwrap(), g.order)).collect();
        assert_eq!(proper, [(0, "x", 2, 2), (0, "y", 2, 2)]);
        let classes = group_by_conjugacy(&gens, DEFAULT_CAP).unwrap();
        assert_eq!(classes.len(), 3);

        let z3 = free_abelian(3).unwrap();
        assert!(enumerate_type_i(&z3).unwrap().iter().all(|g| g.q.is_none()));
    }

    #[test]
    fn additivity_examples() {
        let b3 = braid_classical(3).unwrap();
        let g = Element::parse(&b3, "s1 s2").unwrap();
        let h = Element::parse(&b3, "D^2 s1 s2").unwrap();
        assert!(inf_additivity_check(&g, &h).unwrap());
        let t33 = torus(3, 3).unwrap();
        assert!(inf_additivity_check(&Element::parse(&t33, "x").unwrap(), &Element::parse(&t33, "x^2").unwrap()).unwrap());
        assert!(inf_additivity_check(&Element::delta_power(&b3, 2), &Element::delta_power(&b3, -5)).unwrap());
        assert_eq!(
            inf_additivity_check(&Element::parse(&b3, "s1").unwrap(), &Element::parse(&b3, "s2").unwrap()),
            Err(GarsideError::NotCommuting)
        );
    }

    #[test]
    fn cyclic_certificates() {
        let t22 = torus(2, 2).unwrap();
        let x = Element::parse(&t22, "x").unwrap();
        assert_eq!(certify_cyclic(&[x.clone()], DEFAULT_CAP).unwrap(), (x, 2));
        let b3 = braid_classical(3).unwrap();
        let d = Element::delta_power(&b3, 1);
        assert_eq!(certify_cyclic(&[d.clone()], DEFAULT_CAP).unwrap(), (d.clone(), 2));

        let g = Element::parse(&b3, "s1 s2").unwrap();
        let (gen, order) = certify_cyclic(&[g.clone(), g.power(2), Element::delta_power(&b3, 2)], DEFAULT_CAP).unwrap();
        assert_eq!(order, 3);
        assert_eq!(quotient_order(&gen).unwrap(), QuotientOrder::Finite(3));

        let s2 = Element::parse(&b3, "D s2").unwrap();
        assert_eq!(certify_cyclic(&[s2, d], DEFAULT_CAP), Err(GarsideError::NotCommuting));
    }
}
