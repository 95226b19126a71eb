//! Constructors for cyclic, abelian, dihedral, product and quotient groups.

use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup, Provenance};
use crate::limits::Limits;
use crate::subgroup::{is_normal, Subgroup};

fn checked_order(factors: &[usize], cap: usize) -> Result<usize> {
    let mut n: usize = 1;
    for &f in factors {
        n = n
            .checked_mul(f)
            .filter(|&n| n <= cap)
            .ok_or_else(|| Error::cap("group order", factors.iter().product(), cap))?;
    }
    Ok(n)
}

/// `Z_n` with `i * j = (i + j) mod n`.
pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    cyclic_with(n, &Limits::default())
}

pub fn cyclic_with(n: usize, limits: &Limits) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidArgument("cyclic group order must be positive".into()));
    }
    let n = checked_order(&[n], limits.order_cap)?;
    let mut table = Vec::with_capacity(n * n);
    for i in 0..n {
        table.extend((0..n).map(|j| ((i + j) % n) as u32));
    }
    FiniteGroup::build(n, table, Provenance::Cyclic { n }, None, limits)
}

/// `Z_{n_1} x ... x Z_{n_k}` with componentwise addition.
///
/// Element tuples are encoded mixed-radix with the first factor least
/// significant: `(t_1, t_2, ...)` has index `t_1 + n_1 t_2 + n_1 n_2 t_3 + ...`.
pub fn abelian_product(ns: &[usize]) -> Result<FiniteGroup> {
    abelian_product_with(ns, &Limits::default())
}

pub fn abelian_product_with(ns: &[usize], limits: &Limits) -> Result<FiniteGroup> {
    if ns.is_empty() {
        return Err(Error::InvalidArgument("abelian product needs at least one factor".into()));
    }
    if ns.contains(&0) {
        return Err(Error::InvalidArgument("cyclic factors must be positive".into()));
    }
    let n = checked_order(ns, limits.order_cap)?;
    let decode = |mut i: usize| -> Vec<usize> {
        ns.iter()
            .map(|&m| {
                let d = i % m;
                i /= m;
                d
            })
            .collect()
    };
    let encode = |t: &[usize]| -> usize {
        t.iter()
            .zip(ns)
            .rev()
            .fold(0, |acc, (&d, &m)| acc * m + d)
    };
    let tuples: Vec<Vec<usize>> = (0..n).map(decode).collect();
    let mut table = Vec::with_capacity(n * n);
    let mut sum = vec![0; ns.len()];
    for a in &tuples {
        for b in &tuples {
            for (k, s) in sum.iter_mut().enumerate() {
                *s = (a[k] + b[k]) % ns[k];
            }
            table.push(encode(&sum) as u32);
        }
    }
    let labels = tuples.iter().map(|t| tuple_label(t)).collect();
    FiniteGroup::build(
        n,
        table,
        Provenance::AbelianProduct {
            factors: ns.to_vec(),
        },
        Some(labels),
        limits,
    )
}

pub(crate) fn tuple_label(t: &[usize]) -> String {
    let parts: Vec<String> = t.iter().map(|d| d.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Dihedral group of order `2n`: element `r^i s^j` has index `i + n j`.
pub fn dihedral(n: usize) -> Result<FiniteGroup> {
    dihedral_with(n, &Limits::default())
}

pub fn dihedral_with(n: usize, limits: &Limits) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidArgument("dihedral parameter must be positive".into()));
    }
    let order = checked_order(&[2, n], limits.order_cap)?;
    let mut table = Vec::with_capacity(order * order);
    for a in 0..order {
        let (i, s) = (a % n, a / n);
        for b in 0..order {
            let (j, t) = (b % n, b / n);
            // s r^j = r^-j s
            let rot = if s == 0 { (i + j) % n } else { (i + n - j) % n };
            table.push((rot + n * ((s + t) % 2)) as u32);
        }
    }
    let labels = (0..order)
        .map(|a| match (a % n, a / n) {
            (0, 0) => "e".to_string(),
            (i, 0) => format!("r^{i}"),
            (0, _) => "s".to_string(),
            (i, _) => format!("r^{i}s"),
        })
        .collect();
    FiniteGroup::build(order, table, Provenance::Dihedral { n }, Some(labels), limits)
}

/// `G x H` with componentwise multiplication; `(a, b)` has index `a |H| + b`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
    direct_product_with(g, h, &Limits::default())
}

pub fn direct_product_with(g: &FiniteGroup, h: &FiniteGroup, limits: &Limits) -> Result<FiniteGroup> {
    let (m, k) = (g.order(), h.order());
    let n = checked_order(&[m, k], limits.order_cap)?;
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        let (a1, a2) = (a / k, a % k);
        for b in 0..n {
            let (b1, b2) = (b / k, b % k);
            table.push((g.mul(a1, b1) * k + h.mul(a2, b2)) as u32);
        }
    }
    let labels = (g.labels().is_some() || h.labels().is_some()).then(|| {
        (0..n)
            .map(|a| format!("({},{})", g.label(a / k), h.label(a % k)))
            .collect()
    });
    FiniteGroup::build(
        n,
        table,
        Provenance::DirectProduct {
            left: Box::new(g.provenance().clone()),
            right: Box::new(h.provenance().clone()),
        },
        labels,
        limits,
    )
}

/// A quotient group together with the canonical projection.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub group: FiniteGroup,
    /// `projection[g]` is the coset index of `gN`.
    pub projection: Vec<Element>,
    /// Minimal member of each coset, in coset order.
    pub representatives: Vec<Element>,
}

/// `G / N` on left cosets, numbered by their minimal member.
pub fn quotient(g: &FiniteGroup, normal: &Subgroup) -> Result<Quotient> {
    quotient_with(g, normal, &Limits::default())
}

pub fn quotient_with(g: &FiniteGroup, normal: &Subgroup, limits: &Limits) -> Result<Quotient> {
    if normal.parent_order() != g.order() {
        return Err(Error::InvalidArgument(format!(
            "subgroup belongs to a group of order {}, not {}",
            normal.parent_order(),
            g.order()
        )));
    }
    if let Err(witness) = is_normal(g, normal) {
        return Err(Error::NotNormal { witness });
    }
    let mut projection = vec![usize::MAX; g.order()];
    let mut representatives = Vec::new();
    for x in g.elements() {
        if projection[x] != usize::MAX {
            continue;
        }
        let c = representatives.len();
        representatives.push(x);
        for &m in normal.members() {
            projection[g.mul(x, m)] = c;
        }
    }
    let q = representatives.len();
    let mut table = Vec::with_capacity(q * q);
    for &a in &representatives {
        for &b in &representatives {
            table.push(projection[g.mul(a, b)] as u32);
        }
    }
    let group = FiniteGroup::build(
        q,
        table,
        Provenance::Quotient {
            parent: Box::new(g.provenance().clone()),
            normal_order: normal.order(),
        },
        None,
        limits,
    )?;
    Ok(Quotient {
        group,
        projection,
        representatives,
    })
}
