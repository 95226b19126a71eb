//! The dense Cayley-table group that every algorithm in the crate works on.

use std::fmt;
use std::ops::Range;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::Limits;

/// Index of a group element, `0..order`.
pub type Element = usize;

/// Which constructor produced a group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Provenance {
    Table,
    Cyclic {
        n: usize,
    },
    AbelianProduct {
        factors: Vec<usize>,
    },
    Dihedral {
        n: usize,
    },
    AlphaC {
        n1: usize,
        n2: usize,
        n3: usize,
    },
    DirectProduct {
        left: Box<Provenance>,
        right: Box<Provenance>,
    },
    Quotient {
        parent: Box<Provenance>,
        normal_order: usize,
    },
    Subgroup {
        parent: Box<Provenance>,
        order: usize,
    },
    CosetEnumeration {
        presentation: String,
    },
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Table => write!(f, "table"),
            Provenance::Cyclic { n } => write!(f, "C({n})"),
            Provenance::AbelianProduct { factors } => {
                let parts: Vec<String> = factors.iter().map(|n| n.to_string()).collect();
                write!(f, "abelian({})", parts.join(","))
            }
            Provenance::Dihedral { n } => write!(f, "D({n})"),
            Provenance::AlphaC { n1, n2, n3 } => write!(f, "alphaC({n1},{n2},{n3})"),
            Provenance::DirectProduct { left, right } => write!(f, "{left}x{right}"),
            Provenance::Quotient {
                parent,
                normal_order,
            } => write!(f, "{parent}/N{normal_order}"),
            Provenance::Subgroup { parent, order } => write!(f, "sub{order}({parent})"),
            Provenance::CosetEnumeration { presentation } => write!(f, "pres{presentation}"),
        }
    }
}

/// How thoroughly associativity was checked when the table was accepted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "kebab-case")]
pub enum AssociativityCheck {
    Exhaustive,
    Sampled { triples: u64, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProvenanceRecord {
    pub source: Provenance,
    pub associativity: AssociativityCheck,
}

/// On-disk JSON form of a group; the interchange unit of the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    pub order: usize,
    pub identity: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default)]
    pub labels: Option<Vec<String>>,
    #[serde(default)]
    pub provenance: Option<ProvenanceRecord>,
}

/// A finite group given by its full multiplication table.
///
/// `mul(i, j)` is the index of `g_i * g_j`. Values are immutable after
/// construction and every constructor validates the group axioms.
#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    identity: Element,
    inverses: Vec<u32>,
    labels: Option<Vec<String>>,
    provenance: Provenance,
    associativity: AssociativityCheck,
    element_orders: OnceLock<Vec<usize>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("identity", &self.identity)
            .field("provenance", &self.provenance)
            .finish_non_exhaustive()
    }
}

/// Two groups are equal when they have the same table; labels and
/// provenance are ignored.
impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.identity == other.identity && self.table == other.table
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Validates an explicit table with the default limits.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self> {
        Self::from_table_with(rows, &Limits::default())
    }

    pub fn from_table_with(rows: &[Vec<usize>], limits: &Limits) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if n > limits.order_cap {
            return Err(Error::cap("group order", n, limits.order_cap));
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::NotAGroup(format!(
                        "entry ({i},{j}) = {v} is out of range 0..{n}"
                    )));
                }
                table.push(v as u32);
            }
        }
        Self::build(n, table, Provenance::Table, None, limits)
    }

    /// Validates a row-major flat table and wraps it.
    pub(crate) fn build(
        order: usize,
        table: Vec<u32>,
        provenance: Provenance,
        labels: Option<Vec<String>>,
        limits: &Limits,
    ) -> Result<Self> {
        if order > limits.order_cap {
            return Err(Error::cap("group order", order, limits.order_cap));
        }
        debug_assert_eq!(table.len(), order * order);
        if let Some(l) = &labels {
            if l.len() != order {
                return Err(Error::NotAGroup(format!(
                    "{} labels for {order} elements",
                    l.len()
                )));
            }
        }
        let identity = find_identity(order, &table)?;
        check_latin(order, &table)?;
        let associativity = check_associative(order, &table, limits)?;
        let mut inverses = vec![0u32; order];
        for (i, inv) in inverses.iter_mut().enumerate() {
            let row = &table[i * order..(i + 1) * order];
            // Latin rows guarantee exactly one solution of i * j = e.
            *inv = row.iter().position(|&v| v as usize == identity).unwrap() as u32;
        }
        Ok(FiniteGroup {
            order,
            table,
            identity,
            inverses,
            labels,
            provenance,
            associativity,
            element_orders: OnceLock::new(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Element {
        self.identity
    }

    pub fn elements(&self) -> Range<Element> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inverse(&self, a: Element) -> Element {
        self.inverses[a] as usize
    }

    /// Row `a` of the table: `row(a)[b] == mul(a, b)`.
    pub fn row(&self, a: Element) -> &[u32] {
        &self.table[a * self.order..(a + 1) * self.order]
    }

    pub fn pow(&self, a: Element, k: usize) -> Element {
        let mut acc = self.identity;
        let mut base = a;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `[a, b] = a b a^-1 b^-1`.
    pub fn commutator(&self, a: Element, b: Element) -> Element {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(ab, self.inverse(ba))
    }

    /// `g x g^-1`.
    pub fn conjugate(&self, g: Element, x: Element) -> Element {
        self.mul(self.mul(g, x), self.inverse(g))
    }

    pub fn element_order(&self, a: Element) -> usize {
        self.element_orders()[a]
    }

    pub fn element_orders(&self) -> &[usize] {
        self.element_orders.get_or_init(|| {
            self.elements()
                .map(|a| {
                    let mut k = 1;
                    let mut x = a;
                    while x != self.identity {
                        x = self.mul(x, a);
                        k += 1;
                    }
                    k
                })
                .collect()
        })
    }

    /// First pair (in index order) that fails to commute.
    pub fn non_commuting_pair(&self) -> Option<(Element, Element)> {
        for a in self.elements() {
            for b in a + 1..self.order {
                if self.mul(a, b) != self.mul(b, a) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_abelian(&self) -> bool {
        self.non_commuting_pair().is_none()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display label of an element, falling back to its index.
    pub fn label(&self, a: Element) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn associativity(&self) -> &AssociativityCheck {
        &self.associativity
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.elements()
            .map(|a| self.row(a).iter().map(|&v| v as usize).collect())
            .collect()
    }

    pub fn to_file(&self) -> GroupFile {
        GroupFile {
            order: self.order,
            identity: self.identity,
            table: self.table_rows(),
            labels: self.labels.clone(),
            provenance: Some(ProvenanceRecord {
                source: self.provenance.clone(),
                associativity: self.associativity.clone(),
            }),
        }
    }

    /// Re-validates a group file. The stored provenance is kept; the
    /// associativity record reflects this validation.
    pub fn from_file(file: &GroupFile, limits: &Limits) -> Result<Self> {
        if file.order != file.table.len() {
            return Err(Error::NotAGroup(format!(
                "declared order {} but the table has {} rows",
                file.order,
                file.table.len()
            )));
        }
        let mut g = Self::from_table_with(&file.table, limits)?;
        if g.identity != file.identity {
            return Err(Error::NotAGroup(format!(
                "declared identity {} but the identity row is {}",
                file.identity, g.identity
            )));
        }
        if let Some(labels) = &file.labels {
            if labels.len() != g.order {
                return Err(Error::NotAGroup(format!(
                    "{} labels for {} elements",
                    labels.len(),
                    g.order
                )));
            }
            g.labels = Some(labels.clone());
        }
        if let Some(p) = &file.provenance {
            g.provenance = p.source.clone();
        }
        Ok(g)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("group file serializes")
    }

    pub fn from_json(text: &str, limits: &Limits) -> Result<Self> {
        let file: GroupFile = serde_json::from_str(text)
            .map_err(|e| Error::NotAGroup(format!("malformed group JSON: {e}")))?;
        Self::from_file(&file, limits)
    }

}

fn find_identity(n: usize, table: &[u32]) -> Result<Element> {
    let e = (0..n)
        .find(|&i| {
            table[i * n..(i + 1) * n]
                .iter()
                .enumerate()
                .all(|(j, &v)| v as usize == j)
        })
        .ok_or_else(|| Error::NotAGroup("no row equals 0..n-1, so there is no identity".into()))?;
    for i in 0..n {
        if table[i * n + e] as usize != i {
            return Err(Error::NotAGroup(format!(
                "element {e} is a left identity but {i} * {e} != {i}"
            )));
        }
    }
    Ok(e)
}

fn check_latin(n: usize, table: &[u32]) -> Result<()> {
    let mut seen = vec![usize::MAX; n];
    for i in 0..n {
        for j in 0..n {
            let v = table[i * n + j] as usize;
            if seen[v] == i {
                return Err(Error::NotAGroup(format!(
                    "row {i} is not a permutation: value {v} repeats"
                )));
            }
            seen[v] = i;
        }
    }
    seen.fill(usize::MAX);
    for j in 0..n {
        for i in 0..n {
            let v = table[i * n + j] as usize;
            if seen[v] == j {
                return Err(Error::NotAGroup(format!(
                    "column {j} is not a permutation: value {v} repeats"
                )));
            }
            seen[v] = j;
        }
    }
    Ok(())
}

fn assoc_violation(i: usize, j: usize, k: usize) -> Error {
    Error::NotAGroup(format!(
        "associativity fails for ({i}, {j}, {k}): (g{i} g{j}) g{k} != g{i} (g{j} g{k})"
    ))
}

fn check_associative(n: usize, table: &[u32], limits: &Limits) -> Result<AssociativityCheck> {
    let at = |a: usize, b: usize| table[a * n + b] as usize;
    if n <= limits.assoc_exhaustive_cap {
        for i in 0..n {
            let row_i = &table[i * n..(i + 1) * n];
            for j in 0..n {
                let ij = row_i[j] as usize;
                let row_ij = &table[ij * n..(ij + 1) * n];
                let row_j = &table[j * n..(j + 1) * n];
                for k in 0..n {
                    if row_ij[k] != row_i[row_j[k] as usize] {
                        return Err(assoc_violation(i, j, k));
                    }
                }
            }
        }
        Ok(AssociativityCheck::Exhaustive)
    } else {
        let triples = 10 * (n as u64) * (n as u64);
        let mut rng = ChaCha8Rng::seed_from_u64(limits.seed);
        for _ in 0..triples {
            let (i, j, k) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            if at(at(i, j), k) != at(i, at(j, k)) {
                return Err(assoc_violation(i, j, k));
            }
        }
        Ok(AssociativityCheck::Sampled {
            triples,
            seed: limits.seed,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_table() {
        let g = FiniteGroup::from_table(&[vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.identity(), 0);
        assert_eq!(g.inverse(0), 0);
    }

    #[test]
    fn z2_table() {
        let g = FiniteGroup::from_table(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.element_orders(), &[1, 2]);
        assert!(g.is_abelian());
    }

    #[test]
    fn identity_need_not_be_zero() {
        // Z2 with the identity stored at index 1.
        let g = FiniteGroup::from_table(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(g.identity(), 1);
        assert_eq!(g.inverse(0), 0);
    }

    #[test]
    fn broken_row_is_rejected() {
        let rows = vec![vec![0, 1, 2], vec![1, 1, 0], vec![2, 0, 1]];
        match FiniteGroup::from_table(&rows) {
            Err(Error::NotAGroup(reason)) => assert!(reason.contains("row 1"), "{reason}"),
            other => panic!("expected NotAGroup, got {other:?}"),
        }
    }

    #[test]
    fn missing_identity_is_rejected() {
        let rows = vec![vec![1, 0], vec![0, 1]];
        // row 1 is the identity row here, so make neither row the identity
        let rows_bad = vec![vec![1, 0], vec![1, 0]];
        assert!(FiniteGroup::from_table(&rows).is_ok());
        assert!(matches!(
            FiniteGroup::from_table(&rows_bad),
            Err(Error::NotAGroup(_))
        ));
    }

    #[test]
    fn non_associative_latin_square_names_a_triple() {
        // A loop of order 5 with identity 0 that is not a group.
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        match FiniteGroup::from_table(&rows) {
            Err(Error::NotAGroup(reason)) => assert!(reason.contains("associativity"), "{reason}"),
            other => panic!("expected associativity failure, got {other:?}"),
        }
    }

    #[test]
    fn out_of_range_and_ragged_tables() {
        assert!(FiniteGroup::from_table(&[vec![0, 2], vec![1, 0]]).is_err());
        assert!(FiniteGroup::from_table(&[vec![0, 1], vec![1]]).is_err());
        assert!(FiniteGroup::from_table(&[]).is_err());
    }

    #[test]
    fn sampled_associativity_above_cap() {
        let limits = Limits {
            assoc_exhaustive_cap: 2,
            ..Limits::default()
        };
        let rows: Vec<Vec<usize>> = (0..5).map(|i| (0..5).map(|j| (i + j) % 5).collect()).collect();
        let g = FiniteGroup::from_table_with(&rows, &limits).unwrap();
        assert_eq!(
            g.associativity(),
            &AssociativityCheck::Sampled {
                triples: 250,
                seed: limits.seed
            }
        );
    }

    #[test]
    fn order_cap_is_enforced() {
        let limits = Limits {
            order_cap: 2,
            ..Limits::default()
        };
        let rows: Vec<Vec<usize>> = (0..3).map(|i| (0..3).map(|j| (i + j) % 3).collect()).collect();
        assert!(matches!(
            FiniteGroup::from_table_with(&rows, &limits),
            Err(Error::OrderCapExceeded { .. })
        ));
    }

    #[test]
    fn json_round_trip_keeps_table_and_provenance() {
        let rows: Vec<Vec<usize>> = (0..4).map(|i| (0..4).map(|j| (i + j) % 4).collect()).collect();
        let g = FiniteGroup::from_table(&rows).unwrap();
        let back = FiniteGroup::from_json(&g.to_json(), &Limits::default()).unwrap();
        assert_eq!(g, back);
        assert_eq!(back.provenance(), &Provenance::Table);
    }

    #[test]
    fn file_with_wrong_identity_is_rejected() {
        let mut file = FiniteGroup::from_table(&[vec![0, 1], vec![1, 0]])
            .unwrap()
            .to_file();
        file.identity = 1;
        assert!(FiniteGroup::from_file(&file, &Limits::default()).is_err());
    }
}
