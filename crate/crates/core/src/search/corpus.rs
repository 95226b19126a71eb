//! A deterministic, constructive corpus of small groups and the
//! properties checked over it.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::family::{enumerate_alpha_c, AlphaCFamilyQuery};
use super::report::{invariant_report, InvariantReport};
use super::verify::Verification;
use crate::alpha_c::{alpha_c_with, AlphaCParams};
use crate::arith::{exact_log, prime_power};
use crate::construct::{abelian_product_with, cyclic_with, dihedral_with, direct_product_with, quotient_with};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Provenance};
use crate::limits::Limits;
use crate::presentation::{
    coset_enumerate_with, order_p5_presentation_text, parse_presentation, ORDER_64_PRESENTATION,
};
use crate::rank::{rank_brute_force, rank_with};
use crate::series::{abelian_rank, is_elementary_abelian, Nilpotency};
use crate::subgroup::{center, commutator_subgroup, frattini_cross_checked, is_normal, subgroup_lattice};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSpec {
    /// `C(n)` for `1 <= n <= max_cyclic`.
    pub max_cyclic: usize,
    /// Non-decreasing factor tuples of length 2 up to `max_abelian_factors`,
    /// all factors at least 2, with product at most this.
    pub max_abelian_order: usize,
    pub max_abelian_factors: usize,
    /// `D(n)` of order `2n` for `3 <= n <= max_dihedral_n`.
    pub max_dihedral_n: usize,
    pub max_alpha_c: usize,
    /// Each alpha-C group times `C(m)` for these `m`, up to `max_product_order`.
    pub product_cyclic: Vec<usize>,
    pub max_product_order: usize,
    pub presentations: bool,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            max_cyclic: 32,
            max_abelian_order: 64,
            max_abelian_factors: 3,
            max_dihedral_n: 16,
            max_alpha_c: 256,
            product_cyclic: vec![2, 3, 4],
            max_product_order: 256,
            presentations: true,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub id: String,
    pub group: FiniteGroup,
}

fn factor_tuples(max_product: usize, max_len: usize, min_len: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, product: usize, max: usize, max_len: usize, out: &mut Vec<Vec<usize>>) {
        out.push(prefix.clone());
        if prefix.len() == max_len {
            return;
        }
        let start = prefix.last().copied().unwrap_or(2);
        for f in start..=max / product {
            prefix.push(f);
            extend(prefix, product * f, max, max_len, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 1, max_product, max_len, &mut out);
    out.retain(|t| t.len() >= min_len);
    out
}

type Job<'a> = Box<dyn Fn() -> Result<FiniteGroup> + 'a>;

/// Builds the corpus in a fixed order. Construction errors are collected
/// with their ids rather than stopping at the first one.
pub fn build_corpus(spec: &CorpusSpec, limits: &Limits) -> Result<Vec<CorpusEntry>> {
    let mut jobs: Vec<(String, Job)> = Vec::new();
    for n in 1..=spec.max_cyclic {
        jobs.push((format!("C({n})"), Box::new(move || cyclic_with(n, limits))));
    }
    for t in factor_tuples(spec.max_abelian_order, spec.max_abelian_factors, 2) {
        let id = Provenance::AbelianProduct { factors: t.clone() }.to_string();
        jobs.push((id, Box::new(move || abelian_product_with(&t, limits))));
    }
    for n in 3..=spec.max_dihedral_n {
        jobs.push((format!("D({n})"), Box::new(move || dihedral_with(n, limits))));
    }
    for p in enumerate_alpha_c(&AlphaCFamilyQuery::up_to(spec.max_alpha_c)) {
        jobs.push((p.to_string(), Box::new(move || alpha_c_with(p, limits))));
        for &m in &spec.product_cyclic {
            if p.order() * m > spec.max_product_order {
                continue;
            }
            jobs.push((
                format!("{p}xC({m})"),
                Box::new(move || direct_product_with(&alpha_c_with(p, limits)?, &cyclic_with(m, limits)?, limits)),
            ));
        }
    }
    if spec.presentations {
        jobs.push((
            "pres(order64)".into(),
            Box::new(move || coset_enumerate_with(&parse_presentation(ORDER_64_PRESENTATION)?, limits)),
        ));
        jobs.push((
            "pres(p5,p=2)".into(),
            Box::new(move || coset_enumerate_with(&parse_presentation(&order_p5_presentation_text(2))?, limits)),
        ));
    }
    let mut entries = Vec::new();
    let mut errors = Vec::new();
    for (id, job) in jobs {
        match job() {
            Ok(group) => entries.push(CorpusEntry { id, group }),
            Err(e) => errors.push(format!("{id}: {e}")),
        }
    }
    if errors.is_empty() {
        Ok(entries)
    } else {
        Err(Error::Corpus(errors))
    }
}

/// Invariant reports for every entry, computed in parallel and returned in
/// group_id order.
pub fn corpus_reports(corpus: &[CorpusEntry], limits: &Limits) -> Result<Vec<InvariantReport>> {
    let mut reports = corpus
        .par_iter()
        .map(|e| invariant_report(&e.id, &e.group, limits))
        .collect::<Result<Vec<_>>>()?;
    reports.sort_by(|a, b| a.group_id.cmp(&b.group_id));
    Ok(reports)
}

/// Findings for one corpus group; merged into a single [`Verification`].
struct Findings(Vec<(String, bool, String)>);

impl Findings {
    fn check(&mut self, claim: String, passed: bool, detail: impl Into<String>) {
        self.0.push((claim, passed, detail.into()));
    }
}

fn check_entry(e: &CorpusEntry, r: &InvariantReport, limits: &Limits) -> Findings {
    let g = &e.group;
    let id = &e.id;
    let mut f = Findings(Vec::new());
    let nilpotent = matches!(r.nilpotency_class, Nilpotency::Class(_));
    if r.p_group.is_some() {
        f.check(format!("{id}: p-group is nilpotent"), nilpotent, r.nilpotency_class.to_string());
    }
    if nilpotent {
        f.check(format!("{id}: nilpotent implies solvable"), r.solvable, "");
    }
    if r.is_c_group {
        f.check(format!("{id}: C-group is solvable"), r.solvable, "");
    }

    // independent recompute of the C-group predicate
    let recomputed = if g.order() <= limits.rank_certify_cap {
        center(g)
            .to_group_with(g, limits)
            .and_then(|z| Ok((rank_brute_force(g, limits)?.rank, rank_brute_force(&z, limits)?.rank)))
    } else {
        center(g)
            .to_group_with(g, limits)
            .and_then(|z| Ok((rank_with(g, limits)?.rank, abelian_rank(&z)?)))
    };
    match recomputed {
        Ok((rk, zrk)) => f.check(
            format!("{id}: is_c_group matches recomputed ranks"),
            r.is_c_group == (rk < zrk) && (r.rank, r.center_rank) == (rk, zrk),
            format!("report ({}, {}), recomputed ({rk}, {zrk})", r.rank, r.center_rank),
        ),
        Err(err) => f.check(format!("{id}: recompute ranks"), false, err.to_string()),
    }

    if g.is_abelian() && g.order() <= 200 {
        let pair = abelian_rank(g).and_then(|a| Ok((a, rank_brute_force(g, limits)?.rank)));
        match pair {
            Ok((a, b)) => f.check(
                format!("{id}: abelian rank equals brute-force rank"),
                a == b,
                format!("{a} vs {b}"),
            ),
            Err(err) => f.check(format!("{id}: abelian rank"), false, err.to_string()),
        }
    }

    if let Some(p) = r.p_group {
        if g.order() <= 128 {
            check_p_group(&mut f, id, g, p, limits);
        }
    }

    if let (Some((_, 2)), true) = (prime_power(g.order()), g.order() <= 49) {
        f.check(
            format!("{id}: order p^2 group is cyclic or elementary abelian"),
            r.rank == 1 || is_elementary_abelian(g).is_some(),
            format!("rank {}", r.rank),
        );
    }

    if let Provenance::AlphaC { n1, n2, n3 } = *g.provenance() {
        f.check(
            format!("{id}: nilpotency class is 2"),
            r.nilpotency_class == Nilpotency::Class(2),
            r.nilpotency_class.to_string(),
        );
        let d = commutator_subgroup(g).order();
        f.check(format!("{id}: commutator subgroup order divides n1"), n1 % d == 0, format!("{d}"));
        if let Ok(params) = AlphaCParams::new(n1, n2, n3) {
            // three invariant factors sharing a divisor
            if factor_gcd(&params.center_factors()).is_some() {
                f.check(
                    format!("{id}: center rank is 3"),
                    r.center_rank == 3,
                    format!("{}", r.center_rank),
                );
            }
        }
    }

    if let Provenance::DirectProduct { left, right } = g.provenance() {
        if let (Provenance::AlphaC { .. }, Provenance::Cyclic { .. }) = (&**left, &**right) {
            f.check(
                format!("{id}: rank of a product is at most the sum of ranks"),
                r.rank <= 2 + 1,
                format!("{}", r.rank),
            );
        }
    }
    f
}

fn factor_gcd(ns: &[usize]) -> Option<usize> {
    let g = ns.iter().fold(0, |acc, &n| num_integer::gcd(acc, n));
    (g > 1).then_some(g)
}

/// Burnside basis consistency, the two Frattini routes, the universal
/// property of the Frattini subgroup and order-`p^2` quotients.
fn check_p_group(f: &mut Findings, id: &str, g: &FiniteGroup, p: usize, limits: &Limits) {
    let phi = match frattini_cross_checked(g, limits) {
        Ok(phi) => {
            f.check(format!("{id}: Frattini routes agree"), true, "");
            phi
        }
        Err(err) => {
            f.check(format!("{id}: Frattini routes agree"), false, err.to_string());
            return;
        }
    };
    let burnside = exact_log(g.order() / phi.order(), p).map(|k| k as usize);
    match rank_brute_force(g, limits) {
        Ok(r) => f.check(
            format!("{id}: log_p |G/Phi(G)| equals brute-force rank"),
            burnside == Some(r.rank),
            format!("{burnside:?} vs {}", r.rank),
        ),
        Err(err) => f.check(format!("{id}: brute-force rank"), false, err.to_string()),
    }
    let lattice = match subgroup_lattice(g, limits) {
        Ok(l) => l,
        Err(err) => {
            f.check(format!("{id}: subgroup lattice"), false, err.to_string());
            return;
        }
    };
    let mut bad_frattini = None;
    let mut bad_p2 = None;
    let mut tested = 0;
    for n in &lattice.subgroups {
        if n.is_whole() || is_normal(g, n).is_err() {
            continue;
        }
        let index = g.order() / n.order();
        let Ok(q) = quotient_with(g, n, limits) else {
            continue;
        };
        tested += 1;
        if is_elementary_abelian(&q.group).is_some() && !phi.is_subset(n) && bad_frattini.is_none() {
            bad_frattini = Some(n.order());
        }
        if index == p * p && !(q.group.is_abelian() && (is_elementary_abelian(&q.group).is_some() || is_cyclic(&q.group))) {
            bad_p2 = Some(n.order());
        }
    }
    f.check(
        format!("{id}: Phi(G) lies in every normal N with elementary abelian quotient"),
        bad_frattini.is_none(),
        match bad_frattini {
            Some(o) => format!("fails for a normal subgroup of order {o}"),
            None => format!("{tested} quotients"),
        },
    );
    f.check(
        format!("{id}: quotients of order p^2 are cyclic or elementary abelian"),
        bad_p2.is_none(),
        bad_p2.map(|o| format!("normal subgroup of order {o}")).unwrap_or_default(),
    );
}

fn is_cyclic(g: &FiniteGroup) -> bool {
    g.element_orders().iter().any(|&o| o == g.order())
}

/// Runs every corpus property in parallel and merges the findings in
/// group_id order.
pub fn check_corpus(corpus: &[CorpusEntry], limits: &Limits) -> Result<(Verification, Vec<InvariantReport>)> {
    let reports = corpus_reports(corpus, limits)?;
    let mut findings: Vec<(&str, Findings)> = corpus
        .par_iter()
        .map(|e| {
            let r = reports
                .binary_search_by(|r| r.group_id.as_str().cmp(&e.id))
                .map(|i| &reports[i])
                .expect("report for every entry");
            (e.id.as_str(), check_entry(e, r, limits))
        })
        .collect();
    findings.sort_by(|a, b| a.0.cmp(b.0));
    let mut v = Verification::new("corpus");
    for (_, f) in findings {
        for (claim, passed, detail) in f.0 {
            v.check(&claim, passed, detail);
        }
    }
    Ok((v, reports))
}

/// Every tuple `(n1, ..., nk)` with `k <= max_len`, entries at least 2,
/// product at most `max_product` and `gcd > 1` needs exactly `k`
/// generators, by exhaustive subset search.
pub fn common_divisor_sweep(max_product: usize, max_len: usize, limits: &Limits) -> Result<Verification> {
    let tuples: Vec<Vec<usize>> = ordered_tuples(max_product, max_len)
        .into_iter()
        .filter(|t| factor_gcd(t).is_some())
        .collect();
    let results: Vec<(Vec<usize>, Result<usize>)> = tuples
        .into_par_iter()
        .map(|t| {
            let r = abelian_product_with(&t, limits).and_then(|g| Ok(rank_brute_force(&g, limits)?.rank));
            (t, r)
        })
        .collect();
    let mut v = Verification::new(format!("gcd tuples up to {max_product}"));
    for (t, r) in results {
        let id = Provenance::AbelianProduct { factors: t.clone() }.to_string();
        if let Some(rank) = v.absorb(&format!("{id} rank"), r) {
            v.expect_eq(&format!("{id} needs {} generators", t.len()), t.len(), rank);
        }
    }
    Ok(v)
}

fn ordered_tuples(max_product: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut frontier: Vec<(Vec<usize>, usize)> = vec![(Vec::new(), 1)];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for (t, prod) in frontier {
            for f in 2..=max_product / prod {
                let mut u = t.clone();
                u.push(f);
                next.push((u, prod * f));
            }
        }
        out.extend(next.iter().map(|(t, _)| t.clone()));
        frontier = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> CorpusSpec {
        CorpusSpec {
            max_cyclic: 12,
            max_abelian_order: 16,
            max_abelian_factors: 3,
            max_dihedral_n: 6,
            max_alpha_c: 32,
            product_cyclic: vec![2],
            max_product_order: 64,
            presentations: false,
        }
    }

    #[test]
    fn tuples() {
        let t = factor_tuples(8, 3, 2);
        assert_eq!(t, vec![vec![2, 2], vec![2, 2, 2], vec![2, 3], vec![2, 4]]);
        assert_eq!(ordered_tuples(4, 2), vec![vec![2], vec![3], vec![4], vec![2, 2]]);
    }

    #[test]
    fn default_corpus_contents() {
        let spec = CorpusSpec {
            max_alpha_c: 64,
            max_product_order: 64,
            ..CorpusSpec::default()
        };
        let c = build_corpus(&spec, &Limits::default()).unwrap();
        let ids: Vec<&str> = c.iter().map(|e| e.id.as_str()).collect();
        for want in ["alphaC(2,4,4)", "pres(order64)", "pres(p5,p=2)", "alphaC(2,4,4)xC(2)", "D(8)", "abelian(2,2,2)"] {
            assert!(ids.contains(&want), "{want}");
        }
        assert_eq!(c.iter().find(|e| e.id == "pres(order64)").unwrap().group.order(), 64);
    }

    #[test]
    fn small_corpus_properties_hold() {
        let limits = Limits::default();
        let c = build_corpus(&small(), &limits).unwrap();
        let (v, reports) = check_corpus(&c, &limits).unwrap();
        assert!(v.passed(), "{:?}", v.failures());
        assert_eq!(reports.len(), c.len());
        assert!(reports.windows(2).all(|w| w[0].group_id < w[1].group_id));
    }

    #[test]
    fn corpus_is_deterministic() {
        let limits = Limits::default();
        let a = build_corpus(&small(), &limits).unwrap();
        let b = build_corpus(&small(), &limits).unwrap();
        assert_eq!(a.len(), b.len());
        assert!(a.iter().zip(&b).all(|(x, y)| x.id == y.id && x.group == y.group));
    }

    #[test]
    fn errors_are_aggregated() {
        let limits = Limits {
            order_cap: 20,
            ..Limits::default()
        };
        match build_corpus(&small(), &limits) {
            Err(Error::Corpus(errs)) => assert!(errs.iter().any(|e| e.starts_with("alphaC(2,4,4)"))),
            other => panic!("{:?}", other.map(|c| c.len())),
        }
    }

    #[test]
    fn common_divisor_small() {
        let v = common_divisor_sweep(24, 3, &Limits::default()).unwrap();
        assert!(v.passed(), "{:?}", v.failures());
        assert!(v.checks.len() > 10);
    }
}
