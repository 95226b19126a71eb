//! Todd-Coxeter coset enumeration over the trivial subgroup, HLT style:
//! every relator is scanned from every live coset in turn, filling gaps
//! with new cosets, and coincidences are merged with a union-find queue.

use std::collections::VecDeque;

use super::Presentation;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Provenance};
use crate::limits::Limits;

const NONE: u32 = u32::MAX;

/// Column `2i` is generator `i`, column `2i + 1` its inverse.
#[inline]
fn column(letter: i32) -> usize {
    let g = (letter.unsigned_abs() - 1) as usize;
    2 * g + usize::from(letter < 0)
}

#[inline]
fn inv(col: usize) -> usize {
    col ^ 1
}

#[derive(Debug, Clone)]
pub struct CosetTable {
    width: usize,
    table: Vec<u32>,
    /// Union-find forest: a coset is live iff it is its own root.
    parent: Vec<u32>,
    live: usize,
    max_cosets: usize,
    complete: bool,
}

impl CosetTable {
    fn new(generators: usize, max_cosets: usize) -> Self {
        let width = 2 * generators;
        CosetTable {
            width,
            table: vec![NONE; width],
            parent: vec![0],
            live: 1,
            max_cosets,
            complete: false,
        }
    }

    /// Runs the enumeration to completion.
    pub fn enumerate(p: &Presentation, max_cosets: usize) -> Result<Self> {
        if max_cosets == 0 {
            return Err(Error::InvalidArgument("max_cosets must be at least 1".into()));
        }
        let relators: Vec<Vec<usize>> = p
            .relators()
            .iter()
            .map(|r| r.iter().map(|&l| column(l)).collect())
            .collect();
        let mut t = CosetTable::new(p.generator_count(), max_cosets);
        // A single pass leaves a complete table; the loop only guards
        // against a pass that ends with gaps.
        loop {
            let mut c = 0;
            while c < t.allocated() {
                if t.is_live(c) {
                    for r in &relators {
                        t.scan_and_fill(c, r)?;
                        if !t.is_live(c) {
                            break;
                        }
                    }
                    if t.is_live(c) {
                        for x in 0..t.width {
                            if t.get(c, x) == NONE {
                                t.define(c, x)?;
                            }
                        }
                    }
                }
                c += 1;
            }
            if t.is_closed(&relators) {
                t.complete = true;
                return Ok(t);
            }
        }
    }

    fn allocated(&self) -> usize {
        self.parent.len()
    }

    pub fn live_count(&self) -> usize {
        self.live
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    #[inline]
    fn is_live(&self, c: usize) -> bool {
        self.parent[c] as usize == c
    }

    #[inline]
    fn get(&self, c: usize, x: usize) -> u32 {
        self.table[c * self.width + x]
    }

    #[inline]
    fn set(&mut self, c: usize, x: usize, v: u32) {
        self.table[c * self.width + x] = v;
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut root = c;
        while self.parent[root] as usize != root {
            root = self.parent[root] as usize;
        }
        let mut c = c;
        while self.parent[c] as usize != root {
            let next = self.parent[c] as usize;
            self.parent[c] = root as u32;
            c = next;
        }
        root
    }

    fn define(&mut self, c: usize, x: usize) -> Result<()> {
        // Dead rows are never reclaimed, so allocation is bounded as well.
        if self.live >= self.max_cosets || self.allocated() >= self.max_cosets.saturating_mul(16) {
            return Err(Error::EnumerationOverflow {
                limit: self.max_cosets,
            });
        }
        let d = self.allocated();
        self.parent.push(d as u32);
        self.table.extend(std::iter::repeat(NONE).take(self.width));
        self.live += 1;
        self.set(c, x, d as u32);
        self.set(d, inv(x), c as u32);
        Ok(())
    }

    fn scan_and_fill(&mut self, c: usize, w: &[usize]) -> Result<()> {
        let mut f = c;
        let mut b = c;
        let mut i = 0usize;
        let mut j = w.len();
        // w[i..j] is the part of the relator not yet traced
        loop {
            while i < j && self.get(f, w[i]) != NONE {
                f = self.get(f, w[i]) as usize;
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j > i && self.get(b, inv(w[j - 1])) != NONE {
                b = self.get(b, inv(w[j - 1])) as usize;
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i + 1 {
                // deduction closes the gap
                self.set(f, w[i], b as u32);
                self.set(b, inv(w[i]), f as u32);
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }

    fn merge(&mut self, a: usize, b: usize, queue: &mut VecDeque<usize>) {
        let (ra, rb) = (self.rep(a), self.rep(b));
        if ra != rb {
            let (keep, kill) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[kill] = keep as u32;
            self.live -= 1;
            queue.push_back(kill);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = VecDeque::new();
        self.merge(a, b, &mut queue);
        while let Some(dead) = queue.pop_front() {
            for x in 0..self.width {
                let d = self.get(dead, x);
                if d == NONE {
                    continue;
                }
                let d = d as usize;
                self.set(d, inv(x), NONE);
                let mu = self.rep(dead);
                let nu = self.rep(d);
                let mu_x = self.get(mu, x);
                if mu_x != NONE {
                    self.merge(nu, mu_x as usize, &mut queue);
                } else {
                    let nu_ix = self.get(nu, inv(x));
                    if nu_ix != NONE {
                        self.merge(mu, nu_ix as usize, &mut queue);
                    } else {
                        self.set(mu, x, nu as u32);
                        self.set(nu, inv(x), mu as u32);
                    }
                }
            }
        }
    }

    /// Every live row is full and every relator closes at every live coset.
    fn is_closed(&self, relators: &[Vec<usize>]) -> bool {
        let live: Vec<usize> = (0..self.allocated()).filter(|&c| self.is_live(c)).collect();
        let full = live.iter().all(|&c| {
            (0..self.width).all(|x| {
                let v = self.get(c, x);
                v != NONE && self.is_live(v as usize)
            })
        });
        full && live.iter().all(|&c| {
            relators
                .iter()
                .all(|r| r.iter().fold(c, |k, &x| self.get(k, x) as usize) == c)
        })
    }

    /// Live cosets renumbered `0..n` in order of definition, with the
    /// action of each column.
    fn compact(&self) -> (usize, Vec<u32>) {
        let mut id = vec![NONE; self.allocated()];
        let mut n = 0;
        for c in 0..self.allocated() {
            if self.is_live(c) {
                id[c] = n as u32;
                n += 1;
            }
        }
        let mut act = Vec::with_capacity(n * self.width);
        for c in 0..self.allocated() {
            if self.is_live(c) {
                for x in 0..self.width {
                    act.push(id[self.get(c, x) as usize]);
                }
            }
        }
        (n, act)
    }

    /// The regular representation as a Cayley table. Cosets of the trivial
    /// subgroup are the group elements; `i * j` is coset `i` moved along a
    /// word for `j`.
    pub fn to_group(&self, p: &Presentation, limits: &Limits) -> Result<FiniteGroup> {
        debug_assert!(self.complete);
        let (n, act) = self.compact();
        if n > limits.order_cap {
            return Err(Error::cap("group order", n, limits.order_cap));
        }
        let w = self.width;
        // breadth-first spanning tree from the identity coset: shortest words
        let mut tree: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut words: Vec<Vec<i32>> = vec![Vec::new(); n];
        let mut seen = vec![false; n];
        let mut bfs = vec![0usize];
        seen[0] = true;
        let mut k = 0;
        while k < bfs.len() {
            let c = bfs[k];
            for x in 0..w {
                let d = act[c * w + x] as usize;
                if !seen[d] {
                    seen[d] = true;
                    tree[d] = Some((c, x));
                    let letter = (x / 2 + 1) as i32 * if x % 2 == 0 { 1 } else { -1 };
                    let mut word = words[c].clone();
                    word.push(letter);
                    words[d] = word;
                    bfs.push(d);
                }
            }
            k += 1;
        }
        debug_assert_eq!(bfs.len(), n, "coset action is transitive");
        let mut table = vec![0u32; n * n];
        for i in 0..n {
            table[i * n] = i as u32;
            for &j in &bfs[1..] {
                let (pj, x) = tree[j].unwrap();
                let via = table[i * n + pj] as usize;
                table[i * n + j] = act[via * w + x];
            }
        }
        let labels = words
            .iter()
            .map(|word| {
                if word.is_empty() {
                    "e".to_string()
                } else {
                    p.format_word(word)
                }
            })
            .collect();
        let g = FiniteGroup::build(
            n,
            table,
            Provenance::CosetEnumeration {
                presentation: p.to_string(),
            },
            Some(labels),
            limits,
        )?;
        // each generator is the coset reached from the identity along it
        let gens: Vec<usize> = (0..p.generator_count()).map(|i| act[2 * i] as usize).collect();
        for (ri, r) in p.relators().iter().enumerate() {
            let value = r.iter().fold(g.identity(), |acc, &l| {
                let s = gens[(l.unsigned_abs() - 1) as usize];
                g.mul(acc, if l > 0 { s } else { g.inverse(s) })
            });
            if value != g.identity() {
                return Err(Error::VerificationFailure(vec![format!(
                    "relator {ri} ({}) is not the identity in the enumerated group",
                    p.format_word(r)
                )]));
            }
        }
        Ok(g)
    }
}

/// Enumerates cosets of the trivial subgroup and returns the group as a table.
pub fn coset_enumerate(p: &Presentation, max_cosets: usize) -> Result<FiniteGroup> {
    let limits = Limits {
        max_cosets,
        ..Limits::default()
    };
    coset_enumerate_with(p, &limits)
}

pub fn coset_enumerate_with(p: &Presentation, limits: &Limits) -> Result<FiniteGroup> {
    CosetTable::enumerate(p, limits.max_cosets)?.to_group(p, limits)
}

#[cfg(test)]
mod tests {
    use super::super::{order_p5_presentation_text, parse_presentation, ORDER_64_PRESENTATION};
    use super::*;

    fn order_of(text: &str) -> usize {
        let p = parse_presentation(text).unwrap();
        coset_enumerate(&p, 65536).unwrap().order()
    }

    #[test]
    fn cyclic_presentations() {
        assert_eq!(order_of("<a | a^5>"), 5);
        assert_eq!(order_of("<a | a>"), 1);
        assert_eq!(order_of("<a | a^6, a^4>"), 2);
    }

    #[test]
    fn small_presentations() {
        assert_eq!(order_of("<a,b | a^2, b^2, (ab)^3>"), 6);
        assert_eq!(order_of("<a,b | a^2, b^2, (ab)^4>"), 8);
        assert_eq!(order_of("<a,b | a^4, b^2, (ab)^2, (a^-1b)^2>"), 8);
        // quaternion group
        assert_eq!(order_of("<a,b | a^4, a^2=b^2, b^-1ab=a^-1>"), 8);
        // A5 as the (2,3,5) triangle group
        assert_eq!(order_of("<a,b | a^2, b^3, (ab)^5>"), 60);
    }

    #[test]
    fn known_presentations() {
        assert_eq!(order_of(ORDER_64_PRESENTATION), 64);
        assert_eq!(order_of(&order_p5_presentation_text(2)), 32);
        assert_eq!(order_of(&order_p5_presentation_text(3)), 243);
    }

    #[test]
    fn overflow_on_infinite_group() {
        let p = parse_presentation("<a,b | [a,b]>").unwrap();
        assert_eq!(
            coset_enumerate(&p, 1000),
            Err(Error::EnumerationOverflow { limit: 1000 })
        );
    }

    #[test]
    fn deterministic_tables() {
        let p = parse_presentation(ORDER_64_PRESENTATION).unwrap();
        let a = coset_enumerate(&p, 65536).unwrap();
        let b = coset_enumerate(&p, 65536).unwrap();
        assert_eq!(a.table_rows(), b.table_rows());
        assert_eq!(a.labels(), b.labels());
    }

    #[test]
    fn labels_are_shortest_words() {
        let p = parse_presentation("<a | a^5>").unwrap();
        let g = coset_enumerate(&p, 100).unwrap();
        assert_eq!(g.label(g.identity()), "e");
        assert!(g.labels().unwrap().iter().any(|l| l == "a^-1"));
    }
}
