//! Claim-by-claim verification. Every check runs even after a failure, so
//! one run reports all broken claims.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::report::{invariant_report, InvariantReport};
use crate::alpha_c::{alpha_c_with, AlphaCParams};
use crate::arith::is_prime;
use crate::construct::{abelian_product_with, cyclic_with, direct_product_with, quotient_with};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::iso::is_isomorphic_with;
use crate::limits::Limits;
use crate::presentation::{coset_enumerate_with, order_p5_presentation_text, parse_presentation};
use crate::rank::{rank_brute_force, rank_of_center_with, rank_with};
use crate::series::{is_elementary_abelian, is_solvable, nilpotency_class, Nilpotency};
use crate::subgroup::{center, closure, commutator_subgroup, frattini_cross_checked};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub claim: String,
    pub passed: bool,
    pub detail: String,
}

/// The outcome of checking a batch of claims about one subject.
#[derive(Debug, Clone, Serialize)]
pub struct Verification {
    pub subject: String,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<InvariantReport>,
}

impl Verification {
    pub fn new(subject: impl Into<String>) -> Self {
        Verification {
            subject: subject.into(),
            checks: Vec::new(),
            report: None,
        }
    }

    pub fn check(&mut self, claim: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            claim: claim.to_string(),
            passed,
            detail: detail.into(),
        });
    }

    /// Records `expected == actual`.
    pub fn expect_eq<T: PartialEq + std::fmt::Debug>(&mut self, claim: &str, expected: T, actual: T) {
        let passed = expected == actual;
        self.check(claim, passed, format!("expected {expected:?}, got {actual:?}"));
    }

    /// Records an error from a sub-computation as a failed check.
    pub fn absorb<T>(&mut self, claim: &str, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(claim, false, e.to_string());
                None
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<String> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| format!("{}: {} ({})", self.subject, c.claim, c.detail))
            .collect()
    }

    pub fn into_result(self) -> Result<Self> {
        if self.passed() {
            Ok(self)
        } else {
            Err(Error::VerificationFailure(self.failures()))
        }
    }
}

/// Checks every claim made about an alpha-C group, returning the failed
/// checks in the result rather than as an error.
pub fn check_alpha_c(params: AlphaCParams, limits: &Limits) -> Result<Verification> {
    let g = alpha_c_with(params, limits)?;
    let mut v = Verification::new(params.to_string());
    let (n1, n2, n3) = (params.n1(), params.n2(), params.n3());
    let [f1, f2, f3] = params.center_factors();
    let n = g.order();

    v.expect_eq("order is n1 n2 n3", n1 * n2 * n3, n);

    let z = center(&g);
    v.expect_eq("center order is n1 (n2/n1) (n3/n1)", f1 * f2 * f3, z.order());
    let explicit: Vec<usize> = g
        .elements()
        .filter(|&i| {
            let e = params.decode(i);
            e.y % n1 == 0 && e.z % n1 == 0
        })
        .collect();
    v.expect_eq("center is {(x, n1 y, n1 z)}", explicit.as_slice(), z.members());
    if let Some(zg) = v.absorb("center as a group", z.to_group_with(&g, limits)) {
        if let Some(model) = v.absorb("center model", abelian_product_with(&[f1, f2, f3], limits)) {
            if let Some(iso) = v.absorb("center isomorphism", is_isomorphic_with(&zg, &model, limits)) {
                v.check(
                    "center is isomorphic to Z_n1 x Z_(n2/n1) x Z_(n3/n1)",
                    iso.isomorphic,
                    iso.obstruction.unwrap_or_default(),
                );
            }
        }
    }

    let a = params.encode(params.generator_a());
    let b = params.encode(params.generator_b());
    v.check(
        "a = (0,1,0) and b = (0,0,1) generate G",
        closure(&g, [a, b]).is_whole(),
        "",
    );
    let rank = v.absorb("rank", rank_with(&g, limits));
    let center_rank = v.absorb("center rank", rank_of_center_with(&g, limits));
    if let Some(r) = &rank {
        v.expect_eq("rank is 2", 2, r.rank);
    }
    if let Some(r) = &center_rank {
        v.expect_eq("center rank is 3", 3, r.rank);
    }
    if let (Some(r), Some(c)) = (&rank, &center_rank) {
        v.check(
            "is a C-group",
            r.rank < c.rank,
            format!("rk(G) = {}, rk(Z(G)) = {}", r.rank, c.rank),
        );
    }

    v.expect_eq("nilpotency class is 2", Nilpotency::Class(2), nilpotency_class(&g));
    v.check("solvable", is_solvable(&g), "");
    let derived = commutator_subgroup(&g);
    v.check(
        "commutator subgroup order divides n1",
        n1 % derived.order() == 0,
        format!("|G'| = {}", derived.order()),
    );

    // closed-form commutator: every pair when small, seeded sample otherwise
    let mut bad_commutator = None;
    let mut pairs = 0u64;
    let mut test_pair = |i: usize, j: usize| {
        pairs += 1;
        let closed = params.encode(params.commutator(params.decode(i), params.decode(j)));
        if closed != g.commutator(i, j) && bad_commutator.is_none() {
            bad_commutator = Some((i, j));
        }
    };
    if n <= 256 {
        for i in g.elements() {
            for j in g.elements() {
                test_pair(i, j);
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(limits.seed);
        for _ in 0..1000.max(n) {
            test_pair(rng.gen_range(0..n), rng.gen_range(0..n));
        }
    }
    v.check(
        "commutator closed form matches the table",
        bad_commutator.is_none(),
        match bad_commutator {
            Some((i, j)) => format!("differs at ({}, {})", g.label(i), g.label(j)),
            None => format!("{pairs} pairs"),
        },
    );

    let bad_inverse = g
        .elements()
        .find(|&i| params.encode(params.inverse(params.decode(i))) != g.inverse(i));
    v.check(
        "inverse closed form matches the table",
        bad_inverse.is_none(),
        bad_inverse.map(|i| g.label(i)).unwrap_or_default(),
    );

    v.check(
        "canonical words are a bijection onto G",
        canonical_form_is_bijective(&g, params),
        "",
    );

    v.report = v.absorb("invariant report", invariant_report(&params.to_string(), &g, limits));
    Ok(v)
}

/// Decomposes every element, checks the exponent ranges, multiplies the
/// word back out in the table and checks no two elements share a word.
fn canonical_form_is_bijective(g: &FiniteGroup, params: AlphaCParams) -> bool {
    let a = params.encode(params.generator_a());
    let b = params.encode(params.generator_b());
    let c = g.commutator(a, b);
    let ranges = params.canonical_ranges();
    let n1 = params.n1();
    let mut words = HashSet::new();
    g.elements().all(|i| {
        let w = params.canonical_decompose(params.decode(i));
        let ks = [w.k1, w.k2, w.k3, w.k4, w.k5];
        let in_range = ks.iter().zip(ranges).all(|(&k, r)| k < r);
        let product = [
            g.pow(a, w.k1 * n1),
            g.pow(b, w.k2 * n1),
            g.pow(c, w.k3),
            g.pow(a, w.k4),
            g.pow(b, w.k5),
        ]
        .into_iter()
        .fold(g.identity(), |acc, x| g.mul(acc, x));
        in_range && product == i && words.insert(w)
    }) && words.len() == params.order()
}

/// Like [`check_alpha_c`], but any failed claim becomes an error.
pub fn verify_alpha_c(params: AlphaCParams, limits: &Limits) -> Result<Verification> {
    check_alpha_c(params, limits)?.into_result()
}

/// Existence and structure of the C-group of order `p^5`, plus (for every
/// `p` within the isomorphism cap) its identification with the group
/// presented by `a^(p^2) = b^(p^2) = [a,b]^p = 1`, `[a,b]` central.
pub fn check_p5_claim(p: usize, limits: &Limits) -> Result<Verification> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    let order = p.checked_pow(5).unwrap_or(usize::MAX);
    // the rank, Frattini and isomorphism legs all need small groups
    let cap = limits.iso_cap.min(limits.subgroup_cap);
    if order > cap {
        return Err(Error::cap("p^5 verification order", order, cap));
    }
    let params = AlphaCParams::new(p, p * p, p * p)?;
    let mut v = Verification::new(format!("p5(p={p})"));
    let existence = check_alpha_c(params, limits)?;
    v.check(
        "alpha-C(p, p^2, p^2) passes every alpha-C check",
        existence.passed(),
        existence.failures().join("; "),
    );
    let g = alpha_c_with(params, limits)?;
    let z = center(&g);
    if let Some(phi) = v.absorb("Frattini subgroup", frattini_cross_checked(&g, limits)) {
        v.check(
            "Phi(G) = Z(G)",
            phi == z,
            format!("|Phi| = {}, |Z| = {}", phi.order(), z.order()),
        );
    }
    if let Some(q) = v.absorb("G/Z(G)", quotient_with(&g, &z, limits)) {
        v.expect_eq(
            "G/Z(G) is elementary abelian of order p^2",
            Some((p, 2)),
            is_elementary_abelian(&q.group),
        );
    }
    v.expect_eq("Z(G) is elementary abelian of rank 3", Some((p, 3)), {
        z.to_group_with(&g, limits).ok().and_then(|zg| is_elementary_abelian(&zg))
    });
    let a = params.encode(params.generator_a());
    let b = params.encode(params.generator_b());
    v.expect_eq(
        "|a| = |b| = p^2 and |[a,b]| = p",
        (p * p, p * p, p),
        (
            g.element_order(a),
            g.element_order(b),
            g.element_order(g.commutator(a, b)),
        ),
    );

    let text = order_p5_presentation_text(p);
    let presented = parse_presentation(&text).and_then(|pr| coset_enumerate_with(&pr, limits));
    if let Some(h) = v.absorb("coset enumeration of the derived presentation", presented) {
        v.expect_eq("presented group has order p^5", order, h.order());
        if h.order() == order {
            if let Some(iso) = v.absorb("isomorphism test", is_isomorphic_with(&g, &h, limits)) {
                v.check(
                    "presented group is isomorphic to alpha-C(p, p^2, p^2)",
                    iso.isomorphic,
                    iso.obstruction.unwrap_or_default(),
                );
            }
        }
    }
    v.report = existence.report;
    Ok(v)
}

pub fn verify_p5_claim(p: usize, limits: &Limits) -> Result<Verification> {
    check_p5_claim(p, limits)?.into_result()
}

/// `alpha-C(p, p^2, p^2) x Z_(k p)` is a C-group for `k = 1..=k_max`.
///
/// Ranks use the exact structural routes; products within the certify
/// cap are confirmed by exhaustive subset search as well.
pub fn check_multiple_of_p5(p: usize, k_max: usize, limits: &Limits) -> Result<Verification> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    if k_max == 0 {
        return Err(Error::InvalidArgument("k_max must be at least 1".into()));
    }
    let params = AlphaCParams::new(p, p * p, p * p)?;
    let largest = params.order().saturating_mul(k_max * p);
    if largest > limits.order_cap {
        return Err(Error::cap("group order", largest, limits.order_cap));
    }
    let base = alpha_c_with(params, limits)?;
    let mut v = Verification::new(format!("multiple-of-p5(p={p}, k<={k_max})"));
    for k in 1..=k_max {
        let id = format!("{params}xC({})", k * p);
        let built = cyclic_with(k * p, limits).and_then(|c| direct_product_with(&base, &c, limits));
        let Some(g) = v.absorb(&format!("{id} construction"), built) else {
            continue;
        };
        let (Some(r), Some(c)) = (
            v.absorb(&format!("{id} rank"), rank_with(&g, limits)),
            v.absorb(&format!("{id} center rank"), rank_of_center_with(&g, limits)),
        ) else {
            continue;
        };
        v.check(
            &format!("{id} is a C-group"),
            r.rank < c.rank,
            format!("order {}, rk(G) = {}, rk(Z(G)) = {}", g.order(), r.rank, c.rank),
        );
        if g.order() <= 256 {
            let zg = center(&g).to_group_with(&g, limits)?;
            let brute = (rank_brute_force(&g, limits), rank_brute_force(&zg, limits));
            if let (Some(br), Some(bc)) = (
                v.absorb(&format!("{id} brute-force rank"), brute.0),
                v.absorb(&format!("{id} brute-force center rank"), brute.1),
            ) {
                v.expect_eq(
                    &format!("{id} brute-force ranks agree"),
                    (r.rank, c.rank),
                    (br.rank, bc.rank),
                );
            }
        }
    }
    Ok(v)
}

pub fn verify_multiple_of_p5(p: usize, k_max: usize, limits: &Limits) -> Result<Verification> {
    check_multiple_of_p5(p, k_max, limits)?.into_result()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_c_244_passes() {
        let v = verify_alpha_c(AlphaCParams::new(2, 4, 4).unwrap(), &Limits::default()).unwrap();
        let r = v.report.unwrap();
        assert_eq!((r.order, r.rank, r.center_rank), (32, 2, 3));
        assert_eq!(r.nilpotency_class, Nilpotency::Class(2));
    }

    #[test]
    fn alpha_c_248_passes() {
        let v = verify_alpha_c(AlphaCParams::new(2, 4, 8).unwrap(), &Limits::default()).unwrap();
        let r = v.report.unwrap();
        assert_eq!(r.order, 64);
        assert!(r.is_c_group);
    }

    #[test]
    fn p5_claims() {
        let limits = Limits::default();
        assert!(verify_p5_claim(2, &limits).is_ok());
        assert!(matches!(
            verify_p5_claim(5, &limits),
            Err(Error::OrderCapExceeded { .. })
        ));
        assert!(matches!(verify_p5_claim(4, &limits), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn multiple_of_p5() {
        let limits = Limits::default();
        let v = verify_multiple_of_p5(2, 2, &limits).unwrap();
        assert!(v.checks.iter().any(|c| c.claim.contains("xC(4) is a C-group")));
        assert!(matches!(
            verify_multiple_of_p5(2, 0, &limits),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn failures_are_collected() {
        let mut v = Verification::new("x");
        v.check("one", false, "a");
        v.check("two", true, "");
        v.check("three", false, "b");
        assert_eq!(v.failures().len(), 2);
        match v.into_result() {
            Err(Error::VerificationFailure(f)) => assert_eq!(f.len(), 2),
            other => panic!("{other:?}"),
        }
    }
}
