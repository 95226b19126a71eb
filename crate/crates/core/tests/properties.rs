use cgroups::rank::rank_brute_force;
use cgroups::search::{build_corpus, CorpusSpec};
use cgroups::{
    abelian_product, alpha_c, center, is_c_group, is_isomorphic, parse_presentation, AlphaCParams,
    Limits, Presentation,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Valid triples of order at most 512, built from n1 and the two quotients.
fn alpha_c_params() -> impl Strategy<Value = AlphaCParams> {
    (2usize..=4, 1usize..=8, 1usize..=8)
        .prop_filter_map("order or gcd out of range", |(n1, q2, q3)| {
            if n1 * n1 * n1 * q2 * q3 > 512 {
                return None;
            }
            AlphaCParams::new(n1, n1 * q2, n1 * q3).ok()
        })
}

fn coords(p: &AlphaCParams, i: usize) -> (usize, usize, usize) {
    (i % p.n1(), (i / p.n1()) % p.n2(), i / (p.n1() * p.n2()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn alpha_c_inverse_and_commutator(p in alpha_c_params(), seed in any::<u64>()) {
        let g = alpha_c(p).unwrap();
        let (n1, n2, n3) = (p.n1(), p.n2(), p.n3());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let elements: Vec<usize> = g.elements().collect();
        for _ in 0..64 {
            let u = *elements.choose(&mut rng).unwrap();
            let v = *elements.choose(&mut rng).unwrap();
            let (x1, x2, x3) = coords(&p, u);
            let inv = ((n1 - x1 + x2 * x3) % n1, (n2 - x2) % n2, (n3 - x3) % n3);
            prop_assert_eq!(g.mul(u, inv.0 + n1 * inv.1 + n1 * n2 * inv.2), g.identity());
            let (_, y2, y3) = coords(&p, v);
            let first = (y2 * x3 + (n2 - 1) * x2 * y3) % n1;
            prop_assert_eq!(g.commutator(u, v), first);
        }
    }

    #[test]
    fn canonical_words_rebuild_elements(p in alpha_c_params(), i in any::<prop::sample::Index>()) {
        let g = alpha_c(p).unwrap();
        let x = i.index(g.order());
        let w = p.canonical_decompose(p.decode(x));
        let a = p.encode(p.generator_a());
        let b = p.encode(p.generator_b());
        let c = g.commutator(a, b);
        let n1 = p.n1();
        let rebuilt = [g.pow(a, w.k1 * n1), g.pow(b, w.k2 * n1), g.pow(c, w.k3), g.pow(a, w.k4), g.pow(b, w.k5)]
            .into_iter()
            .fold(g.identity(), |acc, y| g.mul(acc, y));
        prop_assert_eq!(rebuilt, x);
        let ranges = p.canonical_ranges();
        prop_assert!([w.k1, w.k2, w.k3, w.k4, w.k5].iter().zip(ranges).all(|(&k, r)| k < r));
    }

    #[test]
    fn alpha_c_center_matches_formula(p in alpha_c_params()) {
        let g = alpha_c(p).unwrap();
        let z = center(&g);
        let n1 = p.n1();
        for x in g.elements() {
            let (_, y, w) = coords(&p, x);
            prop_assert_eq!(z.contains(x), y % n1 == 0 && w % n1 == 0);
        }
    }

    #[test]
    fn common_divisor_tuples_need_every_generator(
        d in 2usize..=5,
        multipliers in prop::collection::vec(1usize..=5, 1..=3),
    ) {
        let tuple: Vec<usize> = multipliers.iter().map(|m| d * m).collect();
        prop_assume!(tuple.iter().product::<usize>() <= 200);
        let g = abelian_product(&tuple).unwrap();
        prop_assert_eq!(rank_brute_force(&g, &Limits::default()).unwrap().rank, tuple.len());
        prop_assert!(!is_c_group(&g).unwrap());
    }

    #[test]
    fn presentation_display_round_trips(
        relators in prop::collection::vec(
            prop::collection::vec(prop::sample::select(vec![1i32, -1, 2, -2, 3, -3]), 1..12),
            1..5,
        ),
    ) {
        let names = vec!["a".to_string(), "b".to_string(), "c".to_string()];
        let Ok(p) = Presentation::new(names, relators) else {
            return Ok(());
        };
        let reparsed = parse_presentation(&p.to_string()).unwrap();
        prop_assert_eq!(reparsed, p);
    }
}

#[test]
fn isomorphism_is_reflexive_and_symmetric() {
    let spec = CorpusSpec {
        max_alpha_c: 64,
        product_cyclic: vec![2],
        max_product_order: 64,
        presentations: true,
        ..CorpusSpec::default()
    };
    let corpus = build_corpus(&spec, &Limits::default()).unwrap();
    let mut by_order: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for (i, e) in corpus.iter().enumerate() {
        by_order.entry(e.group.order()).or_default().push(i);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let classes: Vec<&Vec<usize>> = by_order.values().filter(|v| v.len() > 1).collect();
    let mut pairs = 0;
    let mut isomorphic_pairs = 0;
    for _ in 0..40 {
        let class = classes.choose(&mut rng).unwrap();
        let i = *class.choose(&mut rng).unwrap();
        let j = *class.choose(&mut rng).unwrap();
        let (g, h) = (&corpus[i].group, &corpus[j].group);
        assert!(is_isomorphic(g, g).unwrap().isomorphic, "{}", corpus[i].id);
        let gh = is_isomorphic(g, h).unwrap().isomorphic;
        let hg = is_isomorphic(h, g).unwrap().isomorphic;
        assert_eq!(gh, hg, "{} vs {}", corpus[i].id, corpus[j].id);
        isomorphic_pairs += gh as usize;
        pairs += 1;
    }
    assert!(pairs >= 20);
    assert!(isomorphic_pairs < pairs);
}
