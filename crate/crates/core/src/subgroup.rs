//! Subgroups of a table group: closures, center, commutator subgroup,
//! the full subgroup lattice, maximal subgroups and the Frattini subgroup.

use std::collections::{HashMap, HashSet};
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Serialize, Serializer};

use crate::arith::prime_power;
use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup, Provenance};
use crate::limits::Limits;

/// A set of element indices closed under the parent's operation.
///
/// Members are kept sorted, mirrored in a bitset for O(1) membership.
#[derive(Clone)]
pub struct Subgroup {
    parent_order: usize,
    members: Vec<Element>,
    mask: FixedBitSet,
    generators: Vec<Element>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.parent_order == other.parent_order && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup")
            .field("order", &self.members.len())
            .field("members", &self.members)
            .finish()
    }
}

impl Serialize for Subgroup {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.members.serialize(s)
    }
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn members(&self) -> &[Element] {
        &self.members
    }

    /// A generating set (not necessarily minimal).
    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    pub fn mask(&self) -> &FixedBitSet {
        &self.mask
    }

    #[inline]
    pub fn contains(&self, x: Element) -> bool {
        self.mask.contains(x)
    }

    pub fn is_whole(&self) -> bool {
        self.members.len() == self.parent_order
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_subset(&self, other: &Subgroup) -> bool {
        self.mask.is_subset(&other.mask)
    }

    /// Builds a subgroup from a member set already known to be closed.
    pub(crate) fn from_mask(parent_order: usize, mask: FixedBitSet) -> Self {
        let members: Vec<Element> = mask.ones().collect();
        Subgroup {
            parent_order,
            generators: members.clone(),
            members,
            mask,
        }
    }

    /// Intersection of two subgroups of the same group.
    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        assert_eq!(self.parent_order, other.parent_order);
        let mut mask = self.mask.clone();
        mask.intersect_with(&other.mask);
        Subgroup::from_mask(self.parent_order, mask)
    }

    /// The subgroup as a standalone group, elements renumbered by their
    /// position in `members()`.
    pub fn to_group(&self, g: &FiniteGroup) -> Result<FiniteGroup> {
        self.to_group_with(g, &Limits::default())
    }

    pub fn to_group_with(&self, g: &FiniteGroup, limits: &Limits) -> Result<FiniteGroup> {
        let m = self.order();
        let mut position = vec![u32::MAX; g.order()];
        for (i, &x) in self.members.iter().enumerate() {
            position[x] = i as u32;
        }
        let mut table = Vec::with_capacity(m * m);
        for &a in &self.members {
            for &b in &self.members {
                table.push(position[g.mul(a, b)]);
            }
        }
        let labels = g
            .labels()
            .map(|l| self.members.iter().map(|&x| l[x].clone()).collect());
        FiniteGroup::build(
            m,
            table,
            Provenance::Subgroup {
                parent: Box::new(g.provenance().clone()),
                order: m,
            },
            labels,
            limits,
        )
    }
}

/// Smallest subgroup containing `seed`.
pub fn closure<I>(g: &FiniteGroup, seed: I) -> Subgroup
where
    I: IntoIterator<Item = Element>,
{
    let trivial = trivial_subgroup(g);
    let extra: Vec<Element> = seed.into_iter().collect();
    join(g, &trivial, &extra)
}

pub fn trivial_subgroup(g: &FiniteGroup) -> Subgroup {
    let mut mask = FixedBitSet::with_capacity(g.order());
    mask.insert(g.identity());
    Subgroup {
        parent_order: g.order(),
        members: vec![g.identity()],
        mask,
        generators: Vec::new(),
    }
}

pub fn whole_group(g: &FiniteGroup) -> Subgroup {
    let mut mask = FixedBitSet::with_capacity(g.order());
    mask.insert_range(..);
    Subgroup {
        parent_order: g.order(),
        members: g.elements().collect(),
        mask,
        generators: g.elements().collect(),
    }
}

/// `<H, extra>`, saturating `H` under right multiplication by the generators.
pub fn join(g: &FiniteGroup, h: &Subgroup, extra: &[Element]) -> Subgroup {
    let mut new_gens: Vec<Element> = Vec::new();
    for &x in extra {
        if !h.contains(x) && !new_gens.contains(&x) {
            new_gens.push(x);
        }
    }
    if new_gens.is_empty() {
        return h.clone();
    }
    let mut gens = h.generators.clone();
    gens.extend_from_slice(&new_gens);
    let mut mask = h.mask.clone();
    let mut members = h.members.clone();
    let old_len = members.len();
    let mut idx = 0;
    while idx < members.len() {
        let x = members[idx];
        // old members are already closed under the old generators
        let active = if idx < old_len { &new_gens } else { &gens };
        for &s in active {
            let y = g.mul(x, s);
            if !mask.put(y) {
                members.push(y);
            }
        }
        idx += 1;
    }
    members.sort_unstable();
    Subgroup {
        parent_order: g.order(),
        members,
        mask,
        generators: gens,
    }
}

/// `Ok(())` when `g N g^-1 = N` for every `g`; otherwise the first
/// conjugating element that moves `N`.
pub fn is_normal(g: &FiniteGroup, n: &Subgroup) -> std::result::Result<(), Element> {
    let gens: &[Element] = if n.generators.is_empty() {
        &n.members
    } else {
        &n.generators
    };
    for x in g.elements() {
        if gens.iter().any(|&m| !n.contains(g.conjugate(x, m))) {
            return Err(x);
        }
    }
    Ok(())
}

pub fn center(g: &FiniteGroup) -> Subgroup {
    let mut mask = FixedBitSet::with_capacity(g.order());
    for z in g.elements() {
        let row = g.row(z);
        if g.elements().all(|x| row[x] as usize == g.mul(x, z)) {
            mask.insert(z);
        }
    }
    Subgroup::from_mask(g.order(), mask)
}

/// `G'`, generated by all commutators.
pub fn commutator_subgroup(g: &FiniteGroup) -> Subgroup {
    commutator_subgroup_of(g, &whole_group(g))
}

/// `H'` for a subgroup `H`, as a subgroup of the parent.
pub fn commutator_subgroup_of(g: &FiniteGroup, h: &Subgroup) -> Subgroup {
    let mut seen = FixedBitSet::with_capacity(g.order());
    let mut commutators = Vec::new();
    for &x in &h.members {
        for &y in &h.members {
            let c = g.commutator(x, y);
            if !seen.put(c) {
                commutators.push(c);
            }
        }
    }
    closure(g, commutators)
}

/// The subgroup lattice, in ascending (order, members) order.
#[derive(Debug, Clone)]
pub struct SubgroupLattice {
    pub subgroups: Vec<Subgroup>,
    maximal: Vec<usize>,
}

impl SubgroupLattice {
    pub fn maximal(&self) -> impl Iterator<Item = &Subgroup> {
        self.maximal.iter().map(move |&i| &self.subgroups[i])
    }
}

/// One generator per cyclic subgroup of prime-power order. Every subgroup
/// is generated by the prime-power-order elements it contains.
fn prime_power_cyclic_generators(g: &FiniteGroup) -> Vec<Element> {
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    let mut reps = Vec::new();
    for x in g.elements() {
        if prime_power(g.element_order(x)).is_none() {
            continue;
        }
        let c = closure(g, [x]);
        if seen.insert(c.mask.clone()) {
            reps.push(x);
        }
    }
    reps
}

/// Enumerates every subgroup by repeatedly extending known subgroups with
/// one cyclic subgroup of prime-power order, deduplicated by member set.
///
/// A proper subgroup is maximal exactly when every such extension is the
/// whole group, so maximality falls out of the same pass.
pub fn subgroup_lattice(g: &FiniteGroup, limits: &Limits) -> Result<SubgroupLattice> {
    if g.order() > limits.subgroup_cap {
        return Err(Error::cap("subgroup enumeration order", g.order(), limits.subgroup_cap));
    }
    let n = g.order();
    let reps = prime_power_cyclic_generators(g);
    let mut index: HashMap<FixedBitSet, usize> = HashMap::new();
    let mut found = vec![trivial_subgroup(g)];
    let mut extendable = vec![false];
    index.insert(found[0].mask.clone(), 0);
    let mut next = 0;
    while next < found.len() {
        let h = found[next].clone();
        for &z in &reps {
            if h.contains(z) {
                continue;
            }
            let k = join(g, &h, &[z]);
            if k.order() < n {
                extendable[next] = true;
            }
            if !index.contains_key(&k.mask) {
                index.insert(k.mask.clone(), found.len());
                found.push(k);
                extendable.push(false);
            }
        }
        next += 1;
    }
    let mut order: Vec<usize> = (0..found.len()).collect();
    order.sort_by(|&a, &b| {
        (found[a].order(), &found[a].members).cmp(&(found[b].order(), &found[b].members))
    });
    let maximal = order
        .iter()
        .enumerate()
        .filter(|&(_, &i)| found[i].order() < n && !extendable[i])
        .map(|(pos, _)| pos)
        .collect();
    let subgroups = order.into_iter().map(|i| found[i].clone()).collect();
    Ok(SubgroupLattice { subgroups, maximal })
}

pub fn maximal_subgroups(g: &FiniteGroup) -> Result<Vec<Subgroup>> {
    maximal_subgroups_with(g, &Limits::default())
}

pub fn maximal_subgroups_with(g: &FiniteGroup, limits: &Limits) -> Result<Vec<Subgroup>> {
    let lattice = subgroup_lattice(g, limits)?;
    Ok(lattice.maximal().cloned().collect())
}

/// `Phi(G)` as the intersection of all maximal subgroups, or `G` when
/// there are none.
pub fn frattini_by_maximal(g: &FiniteGroup, limits: &Limits) -> Result<Subgroup> {
    let maximal = maximal_subgroups_with(g, limits)?;
    Ok(maximal
        .iter()
        .fold(whole_group(g), |acc, m| acc.intersection(m)))
}

/// For a p-group, `Phi(G) = <x^p, [x, y]>`.
pub fn frattini_by_powers_and_commutators(g: &FiniteGroup, p: usize) -> Subgroup {
    let mut seen = FixedBitSet::with_capacity(g.order());
    let mut seed = Vec::new();
    let mut push = |x: Element| {
        if !seen.put(x) {
            seed.push(x);
        }
    };
    for x in g.elements() {
        push(g.pow(x, p));
    }
    for x in g.elements() {
        for y in g.elements() {
            push(g.commutator(x, y));
        }
    }
    closure(g, seed)
}

pub fn frattini(g: &FiniteGroup) -> Result<Subgroup> {
    frattini_with(g, &Limits::default())
}

/// `Phi(G)`: the power-commutator formula for p-groups, the intersection
/// of maximal subgroups otherwise (refused above the subgroup cap).
pub fn frattini_with(g: &FiniteGroup, limits: &Limits) -> Result<Subgroup> {
    if g.order() == 1 {
        return Ok(trivial_subgroup(g));
    }
    match prime_power(g.order()) {
        Some((p, _)) => Ok(frattini_by_powers_and_commutators(g, p)),
        None => frattini_by_maximal(g, limits),
    }
}

/// Like [`frattini_with`], but for p-groups within the subgroup cap both
/// routes are computed and must agree.
pub fn frattini_cross_checked(g: &FiniteGroup, limits: &Limits) -> Result<Subgroup> {
    let phi = frattini_with(g, limits)?;
    if prime_power(g.order()).is_some() && g.order() <= limits.subgroup_cap {
        let other = frattini_by_maximal(g, limits)?;
        if other != phi {
            return Err(Error::VerificationFailure(vec![format!(
                "Frattini subgroup: power-commutator route gives order {}, maximal-subgroup route gives order {}",
                phi.order(),
                other.order()
            )]));
        }
    }
    Ok(phi)
}
