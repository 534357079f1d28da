//! Built-in Garside structures and instance selection.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{GarsideError, Result};
use crate::format::load_structure;
use crate::structure::{RawStructure, StructureTable};

pub const MAX_BRAID_STRANDS: usize = 7;
pub const MAX_ABELIAN_RANK: usize = 12;

/// Which structure to build.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InstanceSpec {
    Braid(usize),
    Torus(usize, usize),
    FreeAbelian(usize),
    Custom(PathBuf),
}

impl InstanceSpec {
    pub fn build(&self) -> Result<Arc<StructureTable>> {
        match self {
            InstanceSpec::Braid(n) => braid_classical(*n),
            InstanceSpec::Torus(a, b) => torus(*a, *b),
            InstanceSpec::FreeAbelian(l) => free_abelian(*l),
            InstanceSpec::Custom(path) => {
                let bytes = std::fs::read(path)
                    .map_err(|e| GarsideError::Instance(format!("cannot read {}: {e}", path.display())))?;
                Ok(Arc::new(load_structure(&bytes)?))
            }
        }
    }
}

impl fmt::Display for InstanceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InstanceSpec::Braid(n) => write!(f, "braid:{n}"),
            InstanceSpec::Torus(a, b) => write!(f, "torus:{a}:{b}"),
            InstanceSpec::FreeAbelian(l) => write!(f, "free_abelian:{l}"),
            InstanceSpec::Custom(p) => write!(f, "custom:{}", p.display()),
        }
    }
}

impl FromStr for InstanceSpec {
    type Err = GarsideError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || GarsideError::Instance(format!("cannot parse instance `{s}`"));
        let (kind, rest) = s.split_once(':').ok_or_else(bad)?;
        let ints = || -> Result<Vec<usize>> { rest.split(':').map(|p| p.parse().map_err(|_| bad())).collect() };
        match kind {
            "braid" => match ints()?[..] {
                [n] => Ok(InstanceSpec::Braid(n)),
                _ => Err(bad()),
            },
            "torus" => match ints()?[..] {
                [a] => Ok(InstanceSpec::Torus(a, a)),
                [a, b] => Ok(InstanceSpec::Torus(a, b)),
                _ => Err(bad()),
            },
            "free_abelian" | "abelian" => match ints()?[..] {
                [l] => Ok(InstanceSpec::FreeAbelian(l)),
                _ => Err(bad()),
            },
            "custom" if !rest.is_empty() => Ok(InstanceSpec::Custom(PathBuf::from(rest))),
            _ => Err(bad()),
        }
    }
}

/// Raw table of the classical structure on `B_n`: the `n!` permutation
/// braids, generated by closure from the atoms `s1..s{n-1}`.
pub fn braid_raw(n: usize) -> Result<RawStructure> {
    if !(2..=MAX_BRAID_STRANDS).contains(&n) {
        return Err(GarsideError::Instance(format!("braid strands must be in 2..={MAX_BRAID_STRANDS}, got {n}")));
    }
    // A simple is a permutation w; w·s_i stays simple iff w(i) < w(i+1).
    let identity: Vec<u8> = (0..n as u8).collect();
    let mut perms = vec![identity.clone()];
    let mut names = vec!["1".to_string()];
    let mut parent: Vec<Option<(usize, usize)>> = vec![None];
    let mut index = HashMap::from([(identity, 0usize)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(w) = queue.pop_front() {
        for i in 0..n - 1 {
            let p = &perms[w];
            if p[i] > p[i + 1] {
                continue;
            }
            let mut q = p.clone();
            q.swap(i, i + 1);
            if !index.contains_key(&q) {
                let name = if w == 0 { format!("s{}", i + 1) } else { format!("{}s{}", names[w], i + 1) };
                index.insert(q.clone(), perms.len());
                queue.push_back(perms.len());
                perms.push(q);
                names.push(name);
                parent.push(Some((w, i)));
            }
        }
    }
    let count = perms.len();
    let step = |w: usize, i: usize| -> Option<usize> {
        let p = &perms[w];
        if p[i] > p[i + 1] {
            return None;
        }
        let mut q = p.clone();
        q.swap(i, i + 1);
        Some(index[&q])
    };
    let right_atom: Vec<Vec<Option<usize>>> = (0..count).map(|w| (0..n - 1).map(|i| step(w, i)).collect()).collect();

    // s·t is simple iff s·t' is simple and (s·t')·a is, where t = t'·a.
    let mut product = vec![None; count * count];
    for s in 0..count {
        product[s * count] = Some(s);
        for t in 1..count {
            let (tp, i) = parent[t].unwrap();
            product[s * count + t] = product[s * count + tp].and_then(|x| right_atom[x][i]);
        }
    }
    let products = (0..count)
        .flat_map(|s| (0..count).map(move |t| (s, t)))
        .filter_map(|(s, t)| product[s * count + t].map(|c| (s, t, c)))
        .collect();
    let delta = count - 1;
    debug_assert_eq!(perms[delta], (0..n as u8).rev().collect::<Vec<_>>());
    Ok(RawStructure { names, atoms: (1..n).collect(), delta, products })
}

/// The classical Garside structure on the braid group `B_n`, `2 ≤ n ≤ 7`.
pub fn braid_classical(n: usize) -> Result<Arc<StructureTable>> {
    Ok(Arc::new(StructureTable::from_raw(braid_raw(n)?)?))
}

/// Raw table of `⟨x, y | x^a = y^b⟩` with Δ = x^a = y^b.
pub fn torus_raw(a: usize, b: usize) -> Result<RawStructure> {
    if a < 2 || b < 2 {
        return Err(GarsideError::Instance(format!("torus parameters must be at least 2, got ({a}, {b})")));
    }
    let pw = |g: &str, i: usize| if i == 1 { g.to_string() } else { format!("{g}{i}") };
    let mut names = vec!["1".to_string()];
    names.extend((1..a).map(|i| pw("x", i)));
    names.extend((1..b).map(|j| pw("y", j)));
    names.push("D".to_string());
    let count = names.len();
    let delta = count - 1;
    let x = |i: usize| if i == a { delta } else { i };
    let y = |j: usize| if j == b { delta } else { a - 1 + j };

    let mut products = Vec::new();
    for s in 0..count {
        products.push((0, s, s));
        if s != 0 {
            products.push((s, 0, s));
        }
    }
    for i in 1..a {
        for k in 1..=a - i {
            products.push((x(i), x(k), x(i + k)));
        }
    }
    for j in 1..b {
        for k in 1..=b - j {
            products.push((y(j), y(k), y(j + k)));
        }
    }
    products.sort_unstable();
    Ok(RawStructure { names, atoms: vec![x(1), y(1)], delta, products })
}

pub fn torus(a: usize, b: usize) -> Result<Arc<StructureTable>> {
    Ok(Arc::new(StructureTable::from_raw(torus_raw(a, b)?)?))
}

/// Raw table of `Z^ℓ` with simples `{0,1}^ℓ` and Δ = (1,…,1).
pub fn free_abelian_raw(rank: usize) -> Result<RawStructure> {
    if !(1..=MAX_ABELIAN_RANK).contains(&rank) {
        return Err(GarsideError::Instance(format!("free abelian rank must be in 1..={MAX_ABELIAN_RANK}, got {rank}")));
    }
    let count = 1usize << rank;
    let names = (0..count)
        .map(|mask| {
            if mask == 0 {
                "1".to_string()
            } else {
                (0..rank).filter(|i| mask & (1 << i) != 0).map(|i| format!("e{}", i + 1)).collect()
            }
        })
        .collect();
    let products = (0..count)
        .flat_map(|s| (0..count).map(move |t| (s, t)))
        .filter(|(s, t)| s & t == 0)
        .map(|(s, t)| (s, t, s | t))
        .collect();
    Ok(RawStructure { names, atoms: (0..rank).map(|i| 1 << i).collect(), delta: count - 1, products })
}

pub fn free_abelian(rank: usize) -> Result<Arc<StructureTable>> {
    Ok(Arc::new(StructureTable::from_raw(free_abelian_raw(rank)?)?))
}
