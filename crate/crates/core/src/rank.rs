//! `rk(G)`, the size of a smallest generating set.
//!
//! Cyclic, abelian and p-group cases have exact structural answers; other
//! groups fall back to an increasing-size subset search. Burnside-basis
//! answers for small p-groups are confirmed by the subset search.

use serde::{Deserialize, Serialize};

use crate::arith::{exact_log, prime_divisors, prime_power};
use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup};
use crate::limits::Limits;
use crate::series::abelian_rank;
use crate::subgroup::{center, closure, frattini_by_powers_and_commutators, join, Subgroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RankMethod {
    BruteForce,
    Burnside,
    Abelian,
}

/// Evidence that no smaller generating set exists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    /// Every candidate subset of size `rank - 1` was tried and failed.
    Exhaustive { subsets_tested: u64 },
    /// Exact by the abelian p-torsion count or the Burnside basis theorem.
    Structural,
    /// A structural answer that an exhaustive search confirmed.
    CrossChecked { subsets_tested: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankResult {
    pub rank: usize,
    pub witness: Vec<Element>,
    pub method: RankMethod,
    pub certificate: Certificate,
}

pub fn rank(g: &FiniteGroup) -> Result<RankResult> {
    rank_with(g, &Limits::default())
}

pub fn rank_with(g: &FiniteGroup, limits: &Limits) -> Result<RankResult> {
    let n = g.order();
    if n == 1 {
        return Ok(RankResult {
            rank: 0,
            witness: Vec::new(),
            method: RankMethod::Abelian,
            certificate: Certificate::Structural,
        });
    }
    if let Some(x) = g.elements().find(|&x| g.element_order(x) == n) {
        return Ok(RankResult {
            rank: 1,
            witness: vec![x],
            method: RankMethod::BruteForce,
            certificate: Certificate::Exhaustive { subsets_tested: 1 },
        });
    }
    if g.is_abelian() {
        let witness = abelian_witness(g);
        debug_assert_eq!(Ok(witness.len()), abelian_rank(g));
        return Ok(RankResult {
            rank: witness.len(),
            witness,
            method: RankMethod::Abelian,
            certificate: Certificate::Structural,
        });
    }
    if let Some((p, _)) = prime_power(n) {
        let witness = burnside_witness(g, p);
        let certificate = if n <= limits.rank_certify_cap {
            let brute = rank_brute_force(g, limits)?;
            if brute.rank != witness.len() {
                return Err(Error::VerificationFailure(vec![format!(
                    "rank: Burnside basis gives {}, subset search gives {}",
                    witness.len(),
                    brute.rank
                )]));
            }
            match brute.certificate {
                Certificate::Exhaustive { subsets_tested } => {
                    Certificate::CrossChecked { subsets_tested }
                }
                other => other,
            }
        } else {
            Certificate::Structural
        };
        return Ok(RankResult {
            rank: witness.len(),
            witness,
            method: RankMethod::Burnside,
            certificate,
        });
    }
    rank_brute_force(g, limits)
}

/// `rk(Z(G))`, computed on the center as a standalone group.
pub fn rank_of_center(g: &FiniteGroup) -> Result<RankResult> {
    rank_of_center_with(g, &Limits::default())
}

pub fn rank_of_center_with(g: &FiniteGroup, limits: &Limits) -> Result<RankResult> {
    let z = center(g);
    let zg = z.to_group_with(g, limits)?;
    let mut r = rank_with(&zg, limits)?;
    // report the witness in the parent's numbering
    r.witness = r.witness.iter().map(|&i| z.members()[i]).collect();
    Ok(r)
}

/// Candidate order for subset search: descending element order, then index.
fn search_order(g: &FiniteGroup) -> Vec<Element> {
    let orders = g.element_orders();
    let mut c: Vec<Element> = g.elements().filter(|&x| x != g.identity()).collect();
    c.sort_by(|&a, &b| orders[b].cmp(&orders[a]).then(a.cmp(&b)));
    c
}

/// Exact rank by trying all subsets of size 0, 1, 2, ... in turn.
///
/// Within a subset, an element is skipped when it already lies in the
/// subgroup generated by the earlier choices; such a subset can never be
/// the first to generate `G`.
pub fn rank_brute_force(g: &FiniteGroup, limits: &Limits) -> Result<RankResult> {
    let n = g.order();
    if n == 1 {
        return Ok(RankResult {
            rank: 0,
            witness: Vec::new(),
            method: RankMethod::BruteForce,
            certificate: Certificate::Exhaustive { subsets_tested: 0 },
        });
    }
    let candidates = search_order(g);
    let trivial = closure(g, []);
    let mut tested_below = 1u64; // the empty set
    for k in 1..=limits.rank_k_cap {
        let mut search = SubsetSearch {
            g,
            candidates: &candidates,
            k,
            chosen: Vec::with_capacity(k),
            tested: 0,
        };
        if search.descend(&trivial, 0) {
            return Ok(RankResult {
                rank: k,
                witness: search.chosen,
                method: RankMethod::BruteForce,
                certificate: Certificate::Exhaustive {
                    subsets_tested: tested_below,
                },
            });
        }
        tested_below = search.tested;
    }
    Err(Error::SearchCapExceeded {
        cap: limits.rank_k_cap,
    })
}

struct SubsetSearch<'a> {
    g: &'a FiniteGroup,
    candidates: &'a [Element],
    k: usize,
    chosen: Vec<Element>,
    tested: u64,
}

impl SubsetSearch<'_> {
    fn descend(&mut self, h: &Subgroup, start: usize) -> bool {
        let depth = self.chosen.len();
        for i in start..self.candidates.len() {
            // not enough candidates left to fill the subset
            if self.candidates.len() - i < self.k - depth {
                break;
            }
            let x = self.candidates[i];
            if h.contains(x) {
                continue;
            }
            let next = join(self.g, h, &[x]);
            self.chosen.push(x);
            if depth + 1 == self.k {
                self.tested += 1;
                if next.is_whole() {
                    return true;
                }
            } else if !next.is_whole() && self.descend(&next, i + 1) {
                return true;
            }
            self.chosen.pop();
        }
        false
    }
}

/// Greedy basis of `G / Phi(G)` for a p-group: repeatedly add an element
/// outside `<Phi(G), chosen>`. Each addition raises the order by exactly `p`.
fn burnside_witness(g: &FiniteGroup, p: usize) -> Vec<Element> {
    let phi = frattini_by_powers_and_commutators(g, p);
    greedy_complement(g, &phi, &search_order(g))
}

fn greedy_complement(g: &FiniteGroup, start: &Subgroup, candidates: &[Element]) -> Vec<Element> {
    let mut h = start.clone();
    let mut chosen = Vec::new();
    for &x in candidates {
        if h.is_whole() {
            break;
        }
        if !h.contains(x) {
            chosen.push(x);
            h = join(g, &h, &[x]);
        }
    }
    chosen
}

/// Minimal generating set of an abelian group: a Burnside basis of each
/// Sylow subgroup, with the i-th basis elements of all Sylows multiplied
/// together.
fn abelian_witness(g: &FiniteGroup) -> Vec<Element> {
    let orders = g.element_orders();
    let mut parts: Vec<Vec<Element>> = Vec::new();
    for p in prime_divisors(g.order()) {
        let sylow: Vec<Element> = search_order(g)
            .into_iter()
            .filter(|&x| exact_log(orders[x], p).is_some())
            .collect();
        // Phi of an abelian p-group is its subgroup of p-th powers.
        let phi = closure(g, sylow.iter().map(|&x| g.pow(x, p)));
        parts.push(greedy_complement(g, &phi, &sylow));
    }
    let r = parts.iter().map(Vec::len).max().unwrap_or(0);
    (0..r)
        .map(|i| {
            parts
                .iter()
                .filter_map(|basis| basis.get(i))
                .fold(g.identity(), |acc, &x| g.mul(acc, x))
        })
        .collect()
}
