use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::alpha_c::AlphaCParams;
use crate::arith::{prime_divisors, prime_power};

/// Which alpha-C parameter triples to list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaCFamilyQuery {
    pub max_order: usize,
    /// Keep only groups of prime-power order.
    #[serde(default)]
    pub prime_power_only: bool,
    /// Keep only groups whose order has all prime divisors in this list.
    #[serde(default)]
    pub primes: Option<Vec<usize>>,
}

impl AlphaCFamilyQuery {
    pub fn up_to(max_order: usize) -> Self {
        AlphaCFamilyQuery {
            max_order,
            prime_power_only: false,
            primes: None,
        }
    }
}

/// All valid triples with `n1 n2 n3 <= max_order`, lexicographic.
pub fn enumerate_alpha_c(q: &AlphaCFamilyQuery) -> Vec<AlphaCParams> {
    let max = q.max_order;
    let mut out = Vec::new();
    let mut n1 = 2;
    // n2, n3 >= n1, so n1^3 bounds the order from below
    while n1 * n1 * n1 <= max {
        for n2 in (n1..=max / (n1 * n1)).step_by(n1) {
            for n3 in (n1..=max / (n1 * n2)).step_by(n1) {
                if let Ok(p) = AlphaCParams::new(n1, n2, n3) {
                    if keep(q, p.order()) {
                        out.push(p);
                    }
                }
            }
        }
        n1 += 1;
    }
    out
}

fn keep(q: &AlphaCFamilyQuery, order: usize) -> bool {
    if q.prime_power_only && prime_power(order).is_none() {
        return false;
    }
    match &q.primes {
        Some(allowed) => prime_divisors(order).iter().all(|p| allowed.contains(p)),
        None => true,
    }
}

/// Orders realized by alpha-C groups up to `max_order`.
pub fn alpha_c_orders(max_order: usize) -> BTreeSet<usize> {
    enumerate_alpha_c(&AlphaCFamilyQuery::up_to(max_order))
        .iter()
        .map(AlphaCParams::order)
        .collect()
}
