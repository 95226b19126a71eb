//! Upper central and derived series, p-group and elementary-abelian tests,
//! and the rank of abelian groups.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize, Serializer};

use crate::arith::{exact_log, prime_divisors, prime_power};
use crate::construct::quotient;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::subgroup::{center, commutator_subgroup_of, whole_group, Subgroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeriesKind {
    UpperCentral,
    Derived,
}

#[derive(Debug, Clone, Serialize)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    /// Orders of the distinct terms, starting at `Z_1` or `G'`.
    pub subgroup_orders: Vec<usize>,
    /// The series reached `G` (upper central) or `{e}` (derived).
    pub terminated: bool,
    pub length: usize,
    #[serde(skip)]
    pub terms: Vec<Subgroup>,
}

/// Nilpotency class, serialized as an integer or `"not nilpotent"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Nilpotency {
    Class(usize),
    NotNilpotent,
}

impl Nilpotency {
    pub fn class(self) -> Option<usize> {
        match self {
            Nilpotency::Class(c) => Some(c),
            Nilpotency::NotNilpotent => None,
        }
    }
}

impl fmt::Display for Nilpotency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Nilpotency::Class(c) => write!(f, "{c}"),
            Nilpotency::NotNilpotent => write!(f, "not nilpotent"),
        }
    }
}

impl Serialize for Nilpotency {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Nilpotency::Class(c) => s.serialize_u64(*c as u64),
            Nilpotency::NotNilpotent => s.serialize_str("not nilpotent"),
        }
    }
}

impl<'de> Deserialize<'de> for Nilpotency {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Class(usize),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Class(c) => Ok(Nilpotency::Class(c)),
            Raw::Text(t) if t == "not nilpotent" => Ok(Nilpotency::NotNilpotent),
            Raw::Text(t) => Err(de::Error::custom(format!("unknown nilpotency value {t:?}"))),
        }
    }
}

impl SeriesReport {
    pub fn nilpotency(&self) -> Nilpotency {
        debug_assert_eq!(self.kind, SeriesKind::UpperCentral);
        if self.terminated {
            Nilpotency::Class(self.length)
        } else {
            Nilpotency::NotNilpotent
        }
    }
}

/// `Z_1 <= Z_2 <= ...` where `Z_i` is the preimage of `Z(G / Z_{i-1})`.
pub fn upper_central_series(g: &FiniteGroup) -> SeriesReport {
    let mut terms: Vec<Subgroup> = Vec::new();
    if g.order() > 1 {
        let mut current = center(g);
        loop {
            terms.push(current.clone());
            if current.is_whole() {
                break;
            }
            // A central subgroup is always normal, so the quotient exists.
            let q = quotient(g, &current).expect("upper central term is normal");
            let zq = center(&q.group);
            let mut mask = FixedBitSet::with_capacity(g.order());
            for x in g.elements() {
                if zq.contains(q.projection[x]) {
                    mask.insert(x);
                }
            }
            let next = Subgroup::from_mask(g.order(), mask);
            if next.order() == current.order() {
                break;
            }
            current = next;
        }
    }
    let terminated = terms.last().map_or(true, |t| t.is_whole());
    SeriesReport {
        kind: SeriesKind::UpperCentral,
        subgroup_orders: terms.iter().map(Subgroup::order).collect(),
        terminated,
        length: terms.len(),
        terms,
    }
}

/// `G' >= G'' >= ...` until the terms stop shrinking.
pub fn derived_series(g: &FiniteGroup) -> SeriesReport {
    let mut terms: Vec<Subgroup> = Vec::new();
    if g.order() > 1 {
        let mut current = whole_group(g);
        loop {
            let next = commutator_subgroup_of(g, &current);
            if next.order() == current.order() {
                break;
            }
            let trivial = next.is_trivial();
            terms.push(next.clone());
            if trivial {
                break;
            }
            current = next;
        }
    }
    let terminated = g.order() == 1 || terms.last().is_some_and(Subgroup::is_trivial);
    SeriesReport {
        kind: SeriesKind::Derived,
        subgroup_orders: terms.iter().map(Subgroup::order).collect(),
        terminated,
        length: terms.len(),
        terms,
    }
}

pub fn nilpotency_class(g: &FiniteGroup) -> Nilpotency {
    upper_central_series(g).nilpotency()
}

pub fn is_solvable(g: &FiniteGroup) -> bool {
    derived_series(g).terminated
}

/// The prime `p` when `|G| = p^k` with `k >= 1`. The trivial group gets no prime.
pub fn is_p_group(g: &FiniteGroup) -> Option<usize> {
    prime_power(g.order()).map(|(p, _)| p)
}

/// `(p, n)` when `G` is abelian and every non-identity element has order `p`,
/// so that `G = Z_p^n`.
pub fn is_elementary_abelian(g: &FiniteGroup) -> Option<(usize, u32)> {
    let p = is_p_group(g)?;
    if !g.is_abelian() {
        return None;
    }
    let e = g.identity();
    if g.elements().any(|x| x != e && g.element_order(x) != p) {
        return None;
    }
    Some((p, exact_log(g.order(), p)?))
}

/// Minimal number of generators of an abelian group: the largest
/// `log_p |{x : x^p = e}|` over primes `p` dividing the order.
pub fn abelian_rank(g: &FiniteGroup) -> Result<usize> {
    if let Some((a, b)) = g.non_commuting_pair() {
        return Err(Error::NotAbelian(a, b));
    }
    let e = g.identity();
    Ok(prime_divisors(g.order())
        .into_iter()
        .map(|p| {
            let torsion = g.elements().filter(|&x| g.pow(x, p) == e).count();
            exact_log(torsion, p).expect("p-torsion of an abelian group has p-power order") as usize
        })
        .max()
        .unwrap_or(0))
}
