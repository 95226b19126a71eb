//! Isomorphism of small groups by backtracking over generator images.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup};
use crate::limits::Limits;
use crate::rank::rank_with;
use crate::series::{derived_series, upper_central_series, Nilpotency};
use crate::subgroup::{center, commutator_subgroup};

/// Invariants that any isomorphism preserves.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    /// Element orders, sorted ascending.
    pub element_orders: Vec<usize>,
    pub center_order: usize,
    pub commutator_order: usize,
    pub nilpotency: Nilpotency,
    /// `None` when the group is not solvable.
    pub derived_length: Option<usize>,
}

impl Fingerprint {
    /// Name of the first invariant that differs, if any.
    pub fn first_difference(&self, other: &Fingerprint) -> Option<String> {
        if self.order != other.order {
            return Some(format!("order {} vs {}", self.order, other.order));
        }
        if self.element_orders != other.element_orders {
            return Some("element order profiles differ".into());
        }
        if self.center_order != other.center_order {
            return Some(format!(
                "center order {} vs {}",
                self.center_order, other.center_order
            ));
        }
        if self.commutator_order != other.commutator_order {
            return Some(format!(
                "commutator subgroup order {} vs {}",
                self.commutator_order, other.commutator_order
            ));
        }
        if self.nilpotency != other.nilpotency {
            return Some(format!(
                "nilpotency class {} vs {}",
                self.nilpotency, other.nilpotency
            ));
        }
        if self.derived_length != other.derived_length {
            return Some(format!(
                "derived length {:?} vs {:?}",
                self.derived_length, other.derived_length
            ));
        }
        None
    }
}

pub fn invariant_fingerprint(g: &FiniteGroup) -> Fingerprint {
    let mut element_orders = g.element_orders().to_vec();
    element_orders.sort_unstable();
    let derived = derived_series(g);
    Fingerprint {
        order: g.order(),
        element_orders,
        center_order: center(g).order(),
        commutator_order: commutator_subgroup(g).order(),
        nilpotency: upper_central_series(g).nilpotency(),
        derived_length: derived.terminated.then_some(derived.length),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoResult {
    pub isomorphic: bool,
    /// `map[x]` is the image of `x`; verified to be a homomorphic bijection.
    pub map: Option<Vec<Element>>,
    pub obstruction: Option<String>,
}

pub fn is_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> Result<IsoResult> {
    is_isomorphic_with(g, h, &Limits::default())
}

pub fn is_isomorphic_with(g: &FiniteGroup, h: &FiniteGroup, limits: &Limits) -> Result<IsoResult> {
    if g.order() != h.order() {
        return Err(Error::OrderMismatch(g.order(), h.order()));
    }
    if g.order() > limits.iso_cap {
        return Err(Error::cap("isomorphism test order", g.order(), limits.iso_cap));
    }
    if let Some(diff) = invariant_fingerprint(g).first_difference(&invariant_fingerprint(h)) {
        return Ok(IsoResult {
            isomorphic: false,
            map: None,
            obstruction: Some(diff),
        });
    }
    let gens = rank_with(g, limits)?.witness;
    let zg = center(g);
    let zh = center(h);
    let candidates: Vec<Vec<Element>> = gens
        .iter()
        .map(|&s| {
            h.elements()
                .filter(|&y| {
                    h.element_order(y) == g.element_order(s) && zh.contains(y) == zg.contains(s)
                })
                .collect()
        })
        .collect();
    let mut search = Backtrack {
        g,
        h,
        gens: &gens,
        candidates: &candidates,
        images: Vec::with_capacity(gens.len()),
    };
    match search.run() {
        Some(map) => {
            verify_isomorphism(g, h, &map)?;
            Ok(IsoResult {
                isomorphic: true,
                map: Some(map),
                obstruction: None,
            })
        }
        None => Ok(IsoResult {
            isomorphic: false,
            map: None,
            obstruction: Some("no assignment of generator images extends to an isomorphism".into()),
        }),
    }
}

struct Backtrack<'a> {
    g: &'a FiniteGroup,
    h: &'a FiniteGroup,
    gens: &'a [Element],
    candidates: &'a [Vec<Element>],
    images: Vec<Element>,
}

impl Backtrack<'_> {
    fn run(&mut self) -> Option<Vec<Element>> {
        let depth = self.images.len();
        if depth == self.gens.len() {
            return self.extend();
        }
        for &y in &self.candidates[depth] {
            self.images.push(y);
            if self.extend().is_some() {
                if let Some(map) = self.run() {
                    return Some(map);
                }
            }
            self.images.pop();
        }
        None
    }

    /// Extends the assigned generator images to the subgroup they generate,
    /// failing on any clash or loss of injectivity.
    fn extend(&self) -> Option<Vec<Element>> {
        let (g, h) = (self.g, self.h);
        let assigned = &self.gens[..self.images.len()];
        let mut map = vec![usize::MAX; g.order()];
        let mut used = vec![false; h.order()];
        map[g.identity()] = h.identity();
        used[h.identity()] = true;
        let mut queue = vec![g.identity()];
        let mut k = 0;
        while k < queue.len() {
            let x = queue[k];
            for (&s, &t) in assigned.iter().zip(&self.images) {
                let y = g.mul(x, s);
                let image = h.mul(map[x], t);
                if map[y] == usize::MAX {
                    if used[image] {
                        return None;
                    }
                    map[y] = image;
                    used[image] = true;
                    queue.push(y);
                } else if map[y] != image {
                    return None;
                }
            }
            k += 1;
        }
        Some(map)
    }
}

fn verify_isomorphism(g: &FiniteGroup, h: &FiniteGroup, map: &[Element]) -> Result<()> {
    let mut seen = vec![false; h.order()];
    for &y in map {
        if y >= h.order() || std::mem::replace(&mut seen[y], true) {
            return Err(Error::VerificationFailure(vec![
                "isomorphism witness is not a bijection".into(),
            ]));
        }
    }
    for a in g.elements() {
        for b in g.elements() {
            if map[g.mul(a, b)] != h.mul(map[a], map[b]) {
                return Err(Error::VerificationFailure(vec![format!(
                    "isomorphism witness fails on ({a}, {b})"
                )]));
            }
        }
    }
    Ok(())
}
