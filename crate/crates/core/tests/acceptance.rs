//! End-to-end acceptance criteria. Prints one PASS/FAIL line per criterion
//! and exits non-zero if any fails.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::time::{Duration, Instant};

use cgroups::export::{parse_table_text, table_text};
use cgroups::presentation::{order_p5_presentation_text, CosetTable, ORDER_64_PRESENTATION};
use cgroups::rank::rank_brute_force;
use cgroups::search::{build_corpus, corpus_reports, enumerate_alpha_c, common_divisor_sweep, AlphaCFamilyQuery, CorpusSpec};
use cgroups::subgroup::{frattini_by_maximal, frattini_by_powers_and_commutators};
use cgroups::{
    abelian_product, abelian_rank, alpha_c, center, coset_enumerate, cyclic, dihedral, direct_product,
    is_c_group, is_elementary_abelian, is_isomorphic, nilpotency_class, parse_presentation, quotient,
    rank, rank_of_center, upper_central_series, AlphaCParams, FiniteGroup, Limits, Nilpotency,
};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn family(max: usize) -> Vec<AlphaCParams> {
    enumerate_alpha_c(&AlphaCFamilyQuery::up_to(max))
}

/// Every valid triple by a naive scan, to pin down the enumeration.
fn naive_triples(max: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for n1 in 2..=max {
        for n2 in 1..=max {
            for n3 in 1..=max {
                if n1 * n2 * n3 > max || n2 % n1 != 0 || n3 % n1 != 0 {
                    continue;
                }
                let g = num_gcd(num_gcd(n1, n2 / n1), n3 / n1);
                if g > 1 {
                    out.push((n1, n2, n3));
                }
            }
        }
    }
    out
}

fn num_gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

fn criterion_1() -> Outcome {
    let params = family(512);
    let triples: Vec<_> = params.iter().map(|p| (p.n1(), p.n2(), p.n3())).collect();
    ensure(triples == naive_triples(512), || "family enumeration differs from naive scan".into())?;
    for p in &params {
        let g = alpha_c(*p).map_err(err)?;
        let (n1, n2, n3) = (p.n1(), p.n2(), p.n3());
        let z = center(&g);
        let rk = rank(&g).map_err(err)?.rank;
        let zrk = rank_of_center(&g).map_err(err)?.rank;
        let got = (g.order(), rk, z.order(), zrk, is_c_group(&g).map_err(err)?);
        let want = (n1 * n2 * n3, 2, n1 * (n2 / n1) * (n3 / n1), 3, true);
        ensure(got == want, || format!("{p}: got {got:?}, want {want:?}"))?;
    }
    Ok(format!("{} groups", params.len()))
}

fn criterion_2() -> Outcome {
    let params = family(512);
    for p in &params {
        let g = alpha_c(*p).map_err(err)?;
        let upper = upper_central_series(&g);
        ensure(upper.nilpotency() == Nilpotency::Class(2), || {
            format!("{p}: {} with orders {:?}", upper.nilpotency(), upper.subgroup_orders)
        })?;
    }
    Ok(format!("{} groups", params.len()))
}

/// The closed forms written out directly on coordinates.
fn coords(p: &AlphaCParams, i: usize) -> (usize, usize, usize) {
    (i % p.n1(), (i / p.n1()) % p.n2(), i / (p.n1() * p.n2()))
}

fn index(p: &AlphaCParams, (x, y, z): (usize, usize, usize)) -> usize {
    x + p.n1() * y + p.n1() * p.n2() * z
}

fn criterion_3() -> Outcome {
    let mut pairs = 0usize;
    for p in family(256) {
        let g = alpha_c(p).map_err(err)?;
        let (n1, n2, n3) = (p.n1(), p.n2(), p.n3());
        for i in g.elements() {
            let (x, y, z) = coords(&p, i);
            let inv = (((n1 - x) + y * z) % n1, (n2 - y) % n2, (n3 - z) % n3);
            ensure(index(&p, inv) == g.inverse(i), || format!("{p}: inverse of {i}"))?;
            for j in g.elements() {
                // u = (x1, x2, x3), v = (y1, y2, y3)
                let (_, x2, x3) = coords(&p, i);
                let (_, y2, y3) = coords(&p, j);
                let first = (y2 * x3 + (n2 - 1) * x2 * y3) % n1;
                let form = index(&p, (first, 0, 0));
                ensure(form == g.commutator(i, j), || format!("{p}: commutator of {i}, {j}"))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs"))
}

fn criterion_4() -> Outcome {
    let mut sizes = Vec::new();
    for (n1, n2, n3) in [(2, 4, 4), (2, 4, 8)] {
        let p = AlphaCParams::new(n1, n2, n3).map_err(err)?;
        let g = alpha_c(p).map_err(err)?;
        let a = index(&p, (0, 1, 0));
        let b = index(&p, (0, 0, 1));
        let c = g.commutator(a, b);
        let mut seen = HashSet::new();
        let mut words = 0;
        for k1 in 0..n2 / n1 {
            for k2 in 0..n3 / n1 {
                for k3 in 0..n1 {
                    for k4 in 0..n1 {
                        for k5 in 0..n1 {
                            let parts = [
                                g.pow(a, k1 * n1),
                                g.pow(b, k2 * n1),
                                g.pow(c, k3),
                                g.pow(a, k4),
                                g.pow(b, k5),
                            ];
                            seen.insert(parts.iter().fold(g.identity(), |acc, &x| g.mul(acc, x)));
                            words += 1;
                        }
                    }
                }
            }
        }
        ensure(words == g.order() && seen.len() == g.order(), || {
            format!("{p}: {words} words, {} distinct, order {}", seen.len(), g.order())
        })?;
        sizes.push(g.order());
    }
    Ok(format!("bijections of size {sizes:?}"))
}

fn generator(g: &FiniteGroup, name: &str) -> Result<usize, String> {
    g.elements()
        .find(|&i| g.label(i) == name)
        .ok_or_else(|| format!("no element labelled {name}"))
}

fn criterion_5() -> Outcome {
    let pres = parse_presentation(&order_p5_presentation_text(2)).map_err(err)?;
    let h = coset_enumerate(&pres, 1 << 16).map_err(err)?;
    ensure(h.order() == 32, || format!("order {}", h.order()))?;
    let g = alpha_c(AlphaCParams::new(2, 4, 4).map_err(err)?).map_err(err)?;
    let iso = is_isomorphic(&g, &h).map_err(err)?;
    ensure(iso.isomorphic, || format!("not isomorphic: {:?}", iso.obstruction))?;
    let limits = Limits::default();
    let z = center(&h);
    let phi_max = frattini_by_maximal(&h, &limits).map_err(err)?;
    let phi_pc = frattini_by_powers_and_commutators(&h, 2);
    ensure(phi_max == z && phi_pc == z, || {
        format!("|Phi| = {} / {}, |Z| = {}", phi_max.order(), phi_pc.order(), z.order())
    })?;
    let q = quotient(&h, &z).map_err(err)?;
    ensure(is_elementary_abelian(&q.group) == Some((2, 2)), || "G/Z(G) is not (Z2)^2".into())?;
    let a = generator(&h, "a")?;
    let b = generator(&h, "b")?;
    let orders = (h.element_order(a), h.element_order(b), h.element_order(h.commutator(a, b)));
    ensure(orders == (4, 4, 2), || format!("orders {orders:?}"))?;
    Ok("order 32, isomorphic to alphaC(2,4,4), Phi = Z".into())
}

fn criterion_6() -> Outcome {
    let pres = parse_presentation(ORDER_64_PRESENTATION).map_err(err)?;
    let table = CosetTable::enumerate(&pres, 1 << 16).map_err(err)?;
    ensure(table.is_complete() && table.live_count() == 64, || {
        format!("{} cosets", table.live_count())
    })?;
    let g = coset_enumerate(&pres, 1 << 16).map_err(err)?;
    ensure(nilpotency_class(&g) == Nilpotency::Class(3), || {
        format!("class {}", nilpotency_class(&g))
    })?;
    ensure(is_c_group(&g).map_err(err)?, || "not a C-group".into())?;
    Ok("64 cosets, class 3, C-group".into())
}

fn criterion_7() -> Outcome {
    let limits = Limits::default();
    let base = alpha_c(AlphaCParams::new(2, 4, 4).map_err(err)?).map_err(err)?;
    let mut seen = Vec::new();
    for k in 1..=4 {
        let g = direct_product(&base, &cyclic(2 * k).map_err(err)?).map_err(err)?;
        let zg = center(&g).to_group(&g).map_err(err)?;
        let rk = rank_brute_force(&g, &limits).map_err(err)?.rank;
        let zrk = rank_brute_force(&zg, &limits).map_err(err)?.rank;
        ensure(rk < zrk, || format!("k = {k}: rk {rk}, center rk {zrk}"))?;
        seen.push((g.order(), rk, zrk));
    }
    let orders: Vec<usize> = seen.iter().map(|s| s.0).collect();
    ensure(orders == [64, 128, 192, 256], || format!("orders {orders:?}"))?;
    Ok(format!("(order, rk, center rk) = {seen:?}"))
}

fn corpus() -> Result<Vec<cgroups::search::CorpusEntry>, String> {
    build_corpus(&CorpusSpec::default(), &Limits::default()).map_err(err)
}

fn criterion_8() -> Outcome {
    let limits = Limits::default();
    let sweep = common_divisor_sweep(200, 3, &limits).map_err(err)?;
    ensure(sweep.passed(), || sweep.failures().join("; "))?;
    let mut abelian = 0;
    for e in corpus()? {
        if !e.group.is_abelian() || e.group.order() > 200 {
            continue;
        }
        let a = abelian_rank(&e.group).map_err(err)?;
        let b = rank_brute_force(&e.group, &limits).map_err(err)?.rank;
        ensure(a == b, || format!("{}: abelian rank {a}, brute force {b}", e.id))?;
        abelian += 1;
    }
    Ok(format!("{} tuples, {abelian} abelian corpus groups", sweep.checks.len() / 2))
}

fn criterion_9() -> Outcome {
    let limits = Limits::default();
    let mut count = 0;
    for e in corpus()? {
        let g = &e.group;
        let Some((p, _)) = prime_power_order(g.order()) else { continue };
        if g.order() > 128 {
            continue;
        }
        let by_max = frattini_by_maximal(g, &limits).map_err(err)?;
        let by_pc = frattini_by_powers_and_commutators(g, p);
        ensure(by_max == by_pc, || format!("{}: Frattini routes differ", e.id))?;
        let mut quotient_order = g.order() / by_max.order();
        let mut log = 0;
        while quotient_order > 1 {
            ensure(quotient_order % p == 0, || format!("{}: |G/Phi| not a power of p", e.id))?;
            quotient_order /= p;
            log += 1;
        }
        let brute = rank_brute_force(g, &limits).map_err(err)?.rank;
        ensure(log == brute, || format!("{}: log_p |G/Phi| = {log}, brute force {brute}", e.id))?;
        count += 1;
    }
    Ok(format!("{count} p-groups"))
}

fn prime_power_order(n: usize) -> Option<(usize, usize)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n % d == 0)?;
    let (mut m, mut k) = (n, 0);
    while m % p == 0 {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

fn criterion_10() -> Outcome {
    let c = corpus()?;
    let reports = corpus_reports(&c, &Limits::default()).map_err(err)?;
    let (mut p_groups, mut c_groups) = (0, 0);
    for r in &reports {
        if prime_power_order(r.order).is_some() {
            ensure(matches!(r.nilpotency_class, Nilpotency::Class(_)), || {
                format!("{}: p-group not nilpotent", r.group_id)
            })?;
            p_groups += 1;
        }
        if r.is_c_group {
            ensure(r.solvable, || format!("{}: C-group not solvable", r.group_id))?;
            c_groups += 1;
        }
    }
    ensure(c_groups > 0, || "no C-groups in the corpus".into())?;
    Ok(format!("{p_groups} p-groups nilpotent, {c_groups} C-groups solvable"))
}

/// Closure of a set of permutations under composition, by breadth-first
/// search from the identity.
fn permutation_closure(gens: &[Vec<usize>]) -> BTreeSet<Vec<usize>> {
    let n = gens[0].len();
    let id: Vec<usize> = (0..n).collect();
    let mut seen = BTreeSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for s in gens {
            let q: Vec<usize> = (0..n).map(|i| s[p[i]]).collect();
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    seen
}

fn criterion_11() -> Outcome {
    let groups = [
        cyclic(1).map_err(err)?,
        cyclic(7).map_err(err)?,
        dihedral(5).map_err(err)?,
        abelian_product(&[2, 6]).map_err(err)?,
        alpha_c(AlphaCParams::new(2, 4, 4).map_err(err)?).map_err(err)?,
    ];
    for g in &groups {
        let rows = parse_table_text(&table_text(g)).map_err(err)?;
        let back = FiniteGroup::from_table(&rows).map_err(err)?;
        ensure(&back == g, || format!("table round trip changed {}", g.provenance()))?;
        let json = FiniteGroup::from_json(&g.to_json(), &Limits::default()).map_err(err)?;
        ensure(&json == g, || format!("json round trip changed {}", g.provenance()))?;
    }
    let pres = parse_presentation("<a,b | a^2, b^2, (ab)^3>").map_err(err)?;
    let h = coset_enumerate(&pres, 1 << 10).map_err(err)?;
    // two transpositions of three points satisfy the relators
    let oracle = permutation_closure(&[vec![1, 0, 2], vec![0, 2, 1]]);
    ensure(h.order() == 6 && oracle.len() == 6, || {
        format!("coset enumeration {}, permutation closure {}", h.order(), oracle.len())
    })?;
    Ok(format!("{} round trips, order 6 = closure 6", groups.len() * 2))
}

type Criterion = (u32, &'static str, Option<u64>, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 11] = [
        (1, "alpha-C existence up to order 512", Some(30), criterion_1),
        (2, "alpha-C nilpotency class 2", Some(10), criterion_2),
        (3, "commutator and inverse closed forms", Some(20), criterion_3),
        (4, "canonical words biject onto G", None, criterion_4),
        (5, "order p^5 uniqueness at p = 2, positive direction", Some(10), criterion_5),
        (6, "order-64 presentation", Some(10), criterion_6),
        (7, "alphaC(2,4,4) x Z_2k by brute-force rank", Some(60), criterion_7),
        (8, "minimum generator count of gcd tuples", None, criterion_8),
        (9, "Burnside basis consistency", None, criterion_9),
        (10, "nilpotence and solvability on the corpus", None, criterion_10),
        (11, "oracle round trips", None, criterion_11),
    ];
    let mut failed = 0;
    for (n, name, bound, run) in criteria {
        let start = Instant::now();
        let mut outcome = run();
        let took = start.elapsed();
        if let (Ok(detail), Some(secs)) = (&outcome, bound) {
            if took > Duration::from_secs(secs) {
                outcome = Err(format!("{detail}; took longer than {secs} s"));
            }
        }
        match outcome {
            Ok(detail) => println!("[PASS] {n:>2} {name} ({:.2} s): {detail}", took.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {n:>2} {name} ({:.2} s): {why}", took.as_secs_f64());
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
