//! The alpha-C family: `Z_{n1} x Z_{n2} x Z_{n3}` with the twisted product
//! `(x1, y1, z1)(x2, y2, z2) = (x1 + x2 + y2 z1, y1 + y2, z1 + z2)`.
//!
//! Valid parameters satisfy `n1 | n2`, `n1 | n3` and
//! `gcd(n1, n2/n1, n3/n1) > 1`; every such group is a C-group of order
//! `n1 n2 n3` generated by `a = (0,1,0)` and `b = (0,0,1)`.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Provenance};
use crate::limits::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AlphaCParams {
    n1: usize,
    n2: usize,
    n3: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlphaCElement {
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

impl AlphaCElement {
    pub const fn new(x: usize, y: usize, z: usize) -> Self {
        AlphaCElement { x, y, z }
    }
}

impl fmt::Display for AlphaCElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

/// Exponents of the normal form `a^(k1 n1) b^(k2 n1) [a,b]^k3 a^k4 b^k5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalWord {
    pub k1: usize,
    pub k2: usize,
    pub k3: usize,
    pub k4: usize,
    pub k5: usize,
}

impl AlphaCParams {
    pub fn new(n1: usize, n2: usize, n3: usize) -> Result<Self> {
        let invalid = |reason: &str| Error::InvalidAlphaCParams {
            n1,
            n2,
            n3,
            reason: reason.to_string(),
        };
        if n1 == 0 || n2 == 0 || n3 == 0 {
            return Err(invalid("all moduli must be positive"));
        }
        if n2 % n1 != 0 {
            return Err(invalid("n1 does not divide n2"));
        }
        if n3 % n1 != 0 {
            return Err(invalid("n1 does not divide n3"));
        }
        if n1.gcd(&(n2 / n1)).gcd(&(n3 / n1)) <= 1 {
            return Err(invalid("gcd(n1, n2/n1, n3/n1) = 1"));
        }
        Ok(AlphaCParams { n1, n2, n3 })
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn n2(&self) -> usize {
        self.n2
    }

    pub fn n3(&self) -> usize {
        self.n3
    }

    /// `n1 n2 n3`, saturating on overflow.
    pub fn order(&self) -> usize {
        self.n1.saturating_mul(self.n2).saturating_mul(self.n3)
    }

    /// Invariant factors of the center: `[n1, n2/n1, n3/n1]`.
    pub fn center_factors(&self) -> [usize; 3] {
        [self.n1, self.n2 / self.n1, self.n3 / self.n1]
    }

    pub fn center_order(&self) -> usize {
        self.center_factors().iter().product()
    }

    pub fn element(&self, x: usize, y: usize, z: usize) -> AlphaCElement {
        AlphaCElement::new(x % self.n1, y % self.n2, z % self.n3)
    }

    pub fn generator_a(&self) -> AlphaCElement {
        AlphaCElement::new(0, 1 % self.n2, 0)
    }

    pub fn generator_b(&self) -> AlphaCElement {
        AlphaCElement::new(0, 0, 1 % self.n3)
    }

    /// Mixed-radix index `x + n1 y + n1 n2 z`.
    pub fn encode(&self, e: AlphaCElement) -> usize {
        e.x + self.n1 * (e.y + self.n2 * e.z)
    }

    pub fn decode(&self, i: usize) -> AlphaCElement {
        AlphaCElement::new(i % self.n1, (i / self.n1) % self.n2, i / (self.n1 * self.n2))
    }

    pub fn multiply(&self, u: AlphaCElement, v: AlphaCElement) -> AlphaCElement {
        AlphaCElement::new(
            (u.x + v.x + v.y * u.z) % self.n1,
            (u.y + v.y) % self.n2,
            (u.z + v.z) % self.n3,
        )
    }

    /// Closed-form inverse `((n1 - x) + y z, n2 - y, n3 - z)`.
    pub fn inverse(&self, u: AlphaCElement) -> AlphaCElement {
        AlphaCElement::new(
            ((self.n1 - u.x) + u.y * u.z) % self.n1,
            (self.n2 - u.y) % self.n2,
            (self.n3 - u.z) % self.n3,
        )
    }

    /// Closed-form commutator `u v u^-1 v^-1 = (v.y u.z + (n2 - 1) u.y v.z, 0, 0)`.
    pub fn commutator(&self, u: AlphaCElement, v: AlphaCElement) -> AlphaCElement {
        let x = (v.y * u.z + (self.n2 - 1) * u.y * v.z) % self.n1;
        AlphaCElement::new(x, 0, 0)
    }

    /// Exponents of the normal-form word for `g`.
    ///
    /// Multiplying the word out gives `(-k3, k1 n1 + k4, k2 n1 + k5)`, so the
    /// exponents are read off the coordinates directly. `k1` ranges over
    /// `0..n2/n1`, `k2` over `0..n3/n1` and the rest over `0..n1`.
    pub fn canonical_decompose(&self, g: AlphaCElement) -> CanonicalWord {
        CanonicalWord {
            k1: g.y / self.n1,
            k2: g.z / self.n1,
            k3: (self.n1 - g.x) % self.n1,
            k4: g.y % self.n1,
            k5: g.z % self.n1,
        }
    }

    /// Exclusive upper bounds of `(k1, k2, k3, k4, k5)`.
    pub fn canonical_ranges(&self) -> [usize; 5] {
        [self.n2 / self.n1, self.n3 / self.n1, self.n1, self.n1, self.n1]
    }
}

impl fmt::Display for AlphaCParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "alphaC({},{},{})", self.n1, self.n2, self.n3)
    }
}

pub fn alpha_c(params: AlphaCParams) -> Result<FiniteGroup> {
    alpha_c_with(params, &Limits::default())
}

pub fn alpha_c_with(params: AlphaCParams, limits: &Limits) -> Result<FiniteGroup> {
    let n = params.order();
    if n > limits.order_cap {
        return Err(Error::cap("group order", n, limits.order_cap));
    }
    let elems: Vec<AlphaCElement> = (0..n).map(|i| params.decode(i)).collect();
    let mut table = Vec::with_capacity(n * n);
    for &u in &elems {
        for &v in &elems {
            table.push(params.encode(params.multiply(u, v)) as u32);
        }
    }
    let labels = elems.iter().map(|e| e.to_string()).collect();
    FiniteGroup::build(
        n,
        table,
        Provenance::AlphaC {
            n1: params.n1,
            n2: params.n2,
            n3: params.n3,
        },
        Some(labels),
        limits,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p244() -> AlphaCParams {
        AlphaCParams::new(2, 4, 4).unwrap()
    }

    #[test]
    fn parameter_validation() {
        assert!(AlphaCParams::new(2, 4, 4).is_ok());
        assert!(AlphaCParams::new(3, 9, 9).is_ok());
        for (a, b, c) in [(2, 2, 2), (1, 4, 4), (2, 3, 4), (2, 4, 5), (0, 4, 4), (2, 4, 6)] {
            assert!(
                matches!(AlphaCParams::new(a, b, c), Err(Error::InvalidAlphaCParams { .. })),
                "({a},{b},{c}) should be rejected"
            );
        }
    }

    #[test]
    fn orders() {
        assert_eq!(alpha_c(p244()).unwrap().order(), 32);
        assert_eq!(alpha_c(AlphaCParams::new(3, 9, 9).unwrap()).unwrap().order(), 243);
    }

    #[test]
    fn inverse_example() {
        let p = p244();
        assert_eq!(p.inverse(AlphaCElement::new(1, 3, 2)), AlphaCElement::new(1, 1, 2));
    }

    #[test]
    fn commutator_examples() {
        let p = p244();
        assert_eq!(
            p.commutator(p.generator_a(), p.generator_b()),
            AlphaCElement::new(1, 0, 0)
        );
        let u = AlphaCElement::new(1, 3, 2);
        assert_eq!(p.commutator(u, u), AlphaCElement::new(0, 0, 0));
    }

    #[test]
    fn canonical_examples() {
        let p = p244();
        assert_eq!(
            p.canonical_decompose(AlphaCElement::new(0, 0, 0)),
            CanonicalWord { k1: 0, k2: 0, k3: 0, k4: 0, k5: 0 }
        );
        assert_eq!(
            p.canonical_decompose(p.generator_a()),
            CanonicalWord { k1: 0, k2: 0, k3: 0, k4: 1, k5: 0 }
        );
    }

    #[test]
    fn encode_decode_are_inverse() {
        let p = AlphaCParams::new(2, 4, 8).unwrap();
        for i in 0..p.order() {
            assert_eq!(p.encode(p.decode(i)), i);
        }
    }

    #[test]
    fn order_cap() {
        let limits = Limits {
            order_cap: 31,
            ..Limits::default()
        };
        assert!(matches!(
            alpha_c_with(p244(), &limits),
            Err(Error::OrderCapExceeded { .. })
        ));
    }
}
