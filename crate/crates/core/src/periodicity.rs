//! Translation numbers, periodic elements and Garside elements.

use std::collections::{BTreeSet, VecDeque};

use num_integer::Integer;
use num_rational::Ratio;

use crate::conjugacy::{conjugate_to_delta_power, is_conjugate, summit_invariants, DEFAULT_CAP};
use crate::element::Element;
use crate::error::{GarsideError, Result};
use crate::structure::Side;

/// Exact rational, always reduced with a positive denominator.
pub type Rational = Ratio<i64>;

/// `INF(g)`, `SUP(g)` and `LEN(g) = SUP(g) − INF(g)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TranslationData {
    pub inf: Rational,
    pub sup: Rational,
    pub len: Rational,
}

/// `g` is `p/q`-periodic: `q` is the least positive exponent with `g^q`
/// conjugate to a power of Δ, and `g^q` is conjugate to `Δ^p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicityReport {
    pub p: i64,
    pub q: i64,
    /// `conjugator⁻¹·g^q·conjugator = Δ^p`.
    pub conjugator: Element,
}

/// Certificate that `g^q` is conjugate to `Δ^p` where `p/q` is the reduced
/// form of a requested ratio `a/b`. The same conjugator also takes `g^b` to
/// `Δ^a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootCertificate {
    pub p: i64,
    pub q: i64,
    pub conjugator: Element,
}

/// Certificate that `g^d`, `d = gcd(a, b)`, is conjugate to `Δ^e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GcdCertificate {
    pub d: i64,
    pub e: i64,
    pub conjugator: Element,
}

/// `INF(g) = max infs(g^k)/k` and `SUP(g) = min sups(g^k)/k` over
/// `k = 1..=‖Δ‖`.
pub fn translation_numbers(g: &Element) -> TranslationData {
    let norm = g.table().garside_norm().max(1) as i64;
    let mut power = g.clone();
    let mut inf: Option<Rational> = None;
    let mut sup: Option<Rational> = None;
    for k in 1..=norm {
        let s = summit_invariants(&power);
        let lo = Rational::new(s.infs, k);
        let hi = Rational::new(s.sups, k);
        inf = Some(inf.map_or(lo, |v| v.max(lo)));
        sup = Some(sup.map_or(hi, |v| v.min(hi)));
        if k < norm {
            power = &power * g;
        }
    }
    let (inf, sup) = (inf.unwrap(), sup.unwrap());
    TranslationData { inf, sup, len: sup - inf }
}

/// An element is periodic iff `LEN(g) = 0`.
pub fn is_periodic(g: &Element) -> bool {
    translation_numbers(g).len == Rational::from_integer(0)
}

pub fn periodicity_class(g: &Element) -> Result<Option<PeriodicityReport>> {
    let t = translation_numbers(g);
    if t.len != Rational::from_integer(0) {
        return Ok(None);
    }
    let (p, q) = (*t.inf.numer(), *t.inf.denom());
    let (a, conjugator) = conjugate_to_delta_power(&g.power(q))
        .ok_or_else(|| GarsideError::Internal(format!("g^{q} is not conjugate to a power of Δ although INF = SUP = {p}/{q}")))?;
    if a != p {
        return Err(GarsideError::Internal(format!("g^{q} is conjugate to Δ^{a}, expected Δ^{p}")));
    }
    Ok(Some(PeriodicityReport { p, q, conjugator }))
}

/// `lens(g^k)` for `k = 1..=kmax`.
pub fn lens_profile(g: &Element, kmax: usize) -> Result<Vec<i64>> {
    if !is_periodic(g) {
        return Err(GarsideError::NotPeriodic);
    }
    let mut out = Vec::with_capacity(kmax);
    let mut power = Element::identity(g.table());
    for _ in 0..kmax {
        power = &power * g;
        out.push(summit_invariants(&power).lens);
    }
    Ok(out)
}

/// Given that some `g^{kb}` is conjugate to `Δ^{ka}`, certifies that `g^b`
/// is conjugate to `Δ^a`. The hypothesis is re-derived as `INF(g) = a/b`
/// for a periodic `g`.
pub fn delta_root_certificate(g: &Element, a: i64, b: i64) -> Result<RootCertificate> {
    if b == 0 {
        return Err(GarsideError::Hypothesis("the exponent of g must be nonzero".into()));
    }
    let t = translation_numbers(g);
    if t.len != Rational::from_integer(0) {
        return Err(GarsideError::NotPeriodic);
    }
    let ratio = Rational::new(a, b);
    if t.inf != ratio {
        return Err(GarsideError::Hypothesis(format!("INF(g) = {} differs from {a}/{b}", t.inf)));
    }
    let (p, q) = (*ratio.numer(), *ratio.denom());
    let (e, conjugator) = conjugate_to_delta_power(&g.power(q))
        .ok_or_else(|| GarsideError::Internal(format!("g^{q} is not conjugate to a power of Δ")))?;
    if e != p {
        return Err(GarsideError::Internal(format!("g^{q} is conjugate to Δ^{e}, expected Δ^{p}")));
    }
    Ok(RootCertificate { p, q, conjugator })
}

/// If `g^a` and `g^b` are both conjugate to powers of Δ, so is
/// `g^{gcd(a,b)}`; returns the certificate for the latter.
pub fn gcd_periodic_exponent(g: &Element, a: i64, b: i64) -> Result<GcdCertificate> {
    for e in [a, b] {
        if e == 0 {
            return Err(GarsideError::Hypothesis("exponents must be nonzero".into()));
        }
        if summit_invariants(&g.power(e)).lens != 0 {
            return Err(GarsideError::Hypothesis(format!("g^{e} is not conjugate to a power of Δ")));
        }
    }
    let t = translation_numbers(g);
    let (p, q) = (*t.inf.numer(), *t.inf.denom());
    if t.len != Rational::from_integer(0) || a % q != 0 || b % q != 0 {
        return Err(GarsideError::Internal(format!("periodic exponents {a}, {b} are not multiples of q = {q}")));
    }
    let d = a.gcd(&b);
    let (e, conjugator) = conjugate_to_delta_power(&g.power(d))
        .ok_or_else(|| GarsideError::Internal(format!("g^{d} is not conjugate to a power of Δ")))?;
    if e != d / q * p {
        return Err(GarsideError::Internal(format!("g^{d} is conjugate to Δ^{e}, expected Δ^{}", d / q * p)));
    }
    Ok(GcdCertificate { d, e, conjugator })
}

/// Commutes with every atom, hence with the whole group.
pub fn is_central(g: &Element) -> bool {
    g.table().atoms().iter().all(|&a| g.commutes_with(&Element::from_simple(g.table(), a)))
}

/// All positive divisors of a positive `c` on one side, built outward from
/// the identity one atom at a time.
pub fn positive_divisors(c: &Element, side: Side, cap: usize) -> Result<BTreeSet<Element>> {
    if !c.is_positive() {
        return Err(GarsideError::NotPositive { inf: c.inf() });
    }
    let table = c.table();
    let atoms: Vec<Element> = table.atoms().iter().map(|&a| Element::from_simple(table, a)).collect();
    let one = Element::identity(table);
    let mut found = BTreeSet::from([one.clone()]);
    let mut queue = VecDeque::from([one]);
    while let Some(x) = queue.pop_front() {
        for a in &atoms {
            let (y, divides) = match side {
                Side::Left => {
                    let y = &x * a;
                    let d = y.left_divides(c);
                    (y, d)
                }
                Side::Right => {
                    let y = a * &x;
                    let d = y.right_divides(c);
                    (y, d)
                }
            };
            if divides && !found.contains(&y) {
                if found.len() >= cap {
                    return Err(GarsideError::CapExceeded { cap });
                }
                found.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(found)
}

/// `L(c) = R(c)` and `L(c)` generates the positive monoid (every atom left
/// divides `c`).
pub fn is_garside_element(c: &Element) -> Result<bool> {
    is_garside_element_with_cap(c, DEFAULT_CAP)
}

pub fn is_garside_element_with_cap(c: &Element, cap: usize) -> Result<bool> {
    let left = positive_divisors(c, Side::Left, cap)?;
    let table = c.table();
    if !table.atoms().iter().all(|&a| left.contains(&Element::from_simple(table, a))) {
        return Ok(false);
    }
    let right = positive_divisors(c, Side::Right, cap)?;
    Ok(left == right)
}

/// For a nontrivial central `g`, returns `(k, Δ^k·g)` with `k` the least
/// nonnegative multiple of the central exponent such that `k ≥ 1 − inf(g)`;
/// the result is a Garside element.
pub fn garside_element_from_central(g: &Element) -> Result<(i64, Element)> {
    if g.is_identity() {
        return Err(GarsideError::Hypothesis("the identity has no associated Garside element".into()));
    }
    if !is_central(g) {
        return Err(GarsideError::NotCentral);
    }
    let m = g.table().central_exponent() as i64;
    let lower = (1 - g.inf()).max(0);
    let k = Integer::div_ceil(&lower, &m) * m;
    let c = &Element::delta_power(g.table(), k) * g;
    if !is_garside_element(&c)? {
        return Err(GarsideError::Internal(format!("Δ^{k}·g is not a Garside element")));
    }
    Ok((k, c))
}

/// Looks for `(k, ℓ)`, `k ≥ 1`, `ℓ ≠ 0`, with `g^k` conjugate to `h^ℓ`.
///
/// Exponents up to `bound` are searched first. If nothing is found and both
/// elements are periodic and nontrivial, a pair is read off their `p/q`
/// data. `None` means no pair within the bound, not a proof of
/// non-commensurability.
pub fn commensurable(g: &Element, h: &Element, bound: i64) -> Result<Option<(i64, i64)>> {
    if !g.same_table(h) {
        return Err(GarsideError::TableMismatch);
    }
    let tg = translation_numbers(g);
    let th = translation_numbers(h);
    for k in 1..=bound {
        for l in (1..=bound).flat_map(|l| [l, -l]) {
            let kr = Rational::from_integer(k);
            let lr = Rational::from_integer(l);
            let (h_inf, h_sup) = if l > 0 { (lr * th.inf, lr * th.sup) } else { (lr * th.sup, lr * th.inf) };
            if kr * tg.inf != h_inf || kr * tg.sup != h_sup {
                continue;
            }
            if is_conjugate(&g.power(k), &h.power(l), DEFAULT_CAP)?.is_some() {
                return Ok(Some((k, l)));
            }
        }
    }
    let zero = Rational::from_integer(0);
    if tg.len == zero && th.len == zero && !g.is_identity() && !h.is_identity() {
        let (p1, q1) = (*tg.inf.numer(), *tg.inf.denom());
        let (p2, q2) = (*th.inf.numer(), *th.inf.denom());
        if p1 != 0 && p2 != 0 {
            let g0 = p1.gcd(&p2);
            let (k, l) = (q1 * p2 / g0, q2 * p1 / g0);
            return Ok(Some(if k < 0 { (-k, -l) } else { (k, l) }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{braid_classical, free_abelian, torus};

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q)
    }

    #[test]
    fn translation_examples() {
        let b3 = braid_classical(3).unwrap();
        let t = translation_numbers(&Element::parse(&b3, "s1 s2").unwrap());
        assert_eq!((t.inf, t.sup, t.len), (r(2, 3), r(2, 3), r(0, 1)));
        let t = translation_numbers(&Element::parse(&b3, "s1").unwrap());
        assert_eq!((t.inf, t.sup, t.len), (r(0, 1), r(1, 1), r(1, 1)));
        let t = translation_numbers(&Element::delta_power(&b3, -4));
        assert_eq!((t.inf, t.sup), (r(-4, 1), r(-4, 1)));
    }

    #[test]
    fn periodic_examples() {
        let b3 = braid_classical(3).unwrap();
        assert!(is_periodic(&Element::parse(&b3, "s1 s2").unwrap()));
        assert!(!is_periodic(&Element::parse(&b3, "s1").unwrap()));
        assert!(is_periodic(&Element::identity(&b3)));

        let rep = periodicity_class(&Element::parse(&b3, "s1 s2").unwrap()).unwrap().unwrap();
        assert_eq!((rep.p, rep.q), (2, 3));
        let t22 = torus(2, 2).unwrap();
        let rep = periodicity_class(&Element::parse(&t22, "x").unwrap()).unwrap().unwrap();
        assert_eq!((rep.p, rep.q), (1, 2));
        let t33 = torus(3, 3).unwrap();
        let rep = periodicity_class(&Element::parse(&t33, "x").unwrap()).unwrap().unwrap();
        assert_eq!((rep.p, rep.q), (1, 3));
        let z2 = free_abelian(2).unwrap();
        assert_eq!(periodicity_class(&Element::parse(&z2, "e1").unwrap()).unwrap(), None);
        let rep = periodicity_class(&Element::identity(&b3)).unwrap().unwrap();
        assert_eq!((rep.p, rep.q), (0, 1));
    }

    #[test]
    fn lens_profile_examples() {
        let b3 = braid_classical(3).unwrap();
        assert_eq!(lens_profile(&Element::parse(&b3, "s1 s2").unwrap(), 6).unwrap(), [1, 1, 0, 1, 1, 0]);
        let t22 = torus(2, 2).unwrap();
        assert_eq!(lens_profile(&Element::parse(&t22, "x").unwrap(), 4).unwrap(), [1, 0, 1, 0]);
        assert_eq!(lens_profile(&Element::delta_power(&t22, 1), 3).unwrap(), [0, 0, 0]);
        assert_eq!(lens_profile(&Element::parse(&b3, "s1").unwrap(), 3), Err(GarsideError::NotPeriodic));
    }

    #[test]
    fn root_certificates() {
        let b3 = braid_classical(3).unwrap();
        let g = Element::parse(&b3, "s1 s2").unwrap();
        let c = delta_root_certificate(&g, 4, 6).unwrap();
        assert_eq!((c.p, c.q), (2, 3));
        assert_eq!(g.power(3).conjugate_by(&c.conjugator), Element::delta_power(&b3, 2));
        assert_eq!(g.power(6).conjugate_by(&c.conjugator), Element::delta_power(&b3, 4));
        assert!(matches!(delta_root_certificate(&g, 1, 3), Err(GarsideError::Hypothesis(_))));
        assert_eq!(delta_root_certificate(&Element::parse(&b3, "s1").unwrap(), 1, 1), Err(GarsideError::NotPeriodic));

        let w = Element::parse(&b3, "s1 s2^-1").unwrap();
        let g = Element::delta_power(&b3, 3).conjugate_by(&w);
        let c = delta_root_certificate(&g, 3, 1).unwrap();
        assert_eq!(g.conjugate_by(&c.conjugator), Element::delta_power(&b3, 3));

        let t22 = torus(2, 2).unwrap();
        let x = Element::parse(&t22, "x").unwrap();
        let c = delta_root_certificate(&x, 2, 4).unwrap();
        assert_eq!((c.p, c.q), (1, 2));
        assert_eq!(x.power(2).conjugate_by(&c.conjugator), Element::delta_power(&t22, 1));
    }

    #[test]
    fn gcd_certificates() {
        let b3 = braid_classical(3).unwrap();
        let g = Element::parse(&b3, "s1 s2").unwrap();
        let c = gcd_periodic_exponent(&g, 6, 9).unwrap();
        assert_eq!((c.d, c.e), (3, 2));
        assert_eq!(g.power(3).conjugate_by(&c.conjugator), Element::delta_power(&b3, 2));
        let c = gcd_periodic_exponent(&g, 3, 3).unwrap();
        assert_eq!((c.d, c.e), (3, 2));
        assert!(matches!(gcd_periodic_exponent(&g, 6, 4), Err(GarsideError::Hypothesis(m)) if m.contains("g^4")));

        let t33 = torus(3, 3).unwrap();
        let x = Element::parse(&t33, "x").unwrap();
        let c = gcd_periodic_exponent(&x, 3, 6).unwrap();
        assert_eq!((c.d, c.e), (3, 1));
    }

    #[test]
    fn garside_elements() {
        let b3 = braid_classical(3).unwrap();
        assert!(is_garside_element(&Element::delta_power(&b3, 2)).unwrap());
        assert!(is_garside_element(&Element::delta_power(&b3, 1)).unwrap());
        assert!(!is_garside_element(&Element::parse(&b3, "s1 s2").unwrap()).unwrap());
        let t22 = torus(2, 2).unwrap();
        assert!(!is_garside_element(&Element::parse(&t22, "x").unwrap()).unwrap());
        let z2 = free_abelian(2).unwrap();
        assert!(is_garside_element(&Element::parse(&z2, "e1^2 e2").unwrap()).unwrap());
        assert!(is_garside_element(&Element::parse(&z2, "e1 e2").unwrap()).unwrap());
        assert!(matches!(
            is_garside_element(&Element::parse(&z2, "e1^-1").unwrap()),
            Err(GarsideError::NotPositive { .. })
        ));
    }

    #[test]
    fn garside_from_central() {
        let b3 = braid_classical(3).unwrap();
        let (k, c) = garside_element_from_central(&Element::delta_power(&b3, 2)).unwrap();
        assert_eq!((k, c), (0, Element::delta_power(&b3, 2)));
        let z2 = free_abelian(2).unwrap();
        let (k, c) = garside_element_from_central(&Element::delta_power(&z2, -1)).unwrap();
        assert_eq!((k, c), (2, Element::delta_power(&z2, 1)));
        let t22 = torus(2, 2).unwrap();
        let (k, c) = garside_element_from_central(&Element::delta_power(&t22, 1)).unwrap();
        assert_eq!((k, c), (0, Element::delta_power(&t22, 1)));
        assert_eq!(
            garside_element_from_central(&Element::parse(&b3, "s1").unwrap()),
            Err(GarsideError::NotCentral)
        );
    }

    #[test]
    fn commensurability() {
        let b3 = braid_classical(3).unwrap();
        let g = Element::parse(&b3, "s1 s2").unwrap();
        let d = Element::delta_power(&b3, 1);
        assert_eq!(commensurable(&g, &d, 4).unwrap(), Some((3, 2)));
        // Below the search bound the p/q data still answers.
        assert_eq!(commensurable(&g, &d, 1).unwrap(), Some((3, 2)));
        assert_eq!(commensurable(&g, &g, 1).unwrap(), Some((1, 1)));
        let z2 = free_abelian(2).unwrap();
        let e1 = Element::parse(&z2, "e1").unwrap();
        assert_eq!(commensurable(&e1, &Element::delta_power(&z2, 1), 10).unwrap(), None);
        assert_eq!(commensurable(&e1, &e1, 1).unwrap(), Some((1, 1)));
    }
}
