//! Real quaternions and the pair action `[p, q]v = p v q`, `[p, q]* v = p v̄ q`.
//!
//! Vectors of R³ are pure-imaginary quaternions throughout.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tolerance::epsilon;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Quaternion {
    pub q0: f64,
    pub q1: f64,
    pub q2: f64,
    pub q3: f64,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const E1: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const E2: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const E3: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(q0: f64, q1: f64, q2: f64, q3: f64) -> Self {
        Self { q0, q1, q2, q3 }
    }

    /// Pure-imaginary quaternion `x e1 + y e2 + z e3`.
    pub const fn vector(x: f64, y: f64, z: f64) -> Self {
        Self::new(0.0, x, y, z)
    }

    pub fn from_array(a: [f64; 4]) -> Self {
        Self::new(a[0], a[1], a[2], a[3])
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.q0, self.q1, self.q2, self.q3]
    }

    /// Imaginary part as a 3-vector.
    pub fn xyz(self) -> [f64; 3] {
        [self.q1, self.q2, self.q3]
    }

    pub fn conj(self) -> Self {
        Self::new(self.q0, -self.q1, -self.q2, -self.q3)
    }

    pub fn norm_sqr(self) -> f64 {
        self.q0 * self.q0 + self.q1 * self.q1 + self.q2 * self.q2 + self.q3 * self.q3
    }

    pub fn norm(self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn scale(self, s: f64) -> Self {
        Self::new(self.q0 * s, self.q1 * s, self.q2 * s, self.q3 * s)
    }

    pub fn normalized(self) -> Self {
        self.scale(1.0 / self.norm())
    }

    /// Scalar product `½(p̄q + q̄p)`, the Euclidean dot product on R⁴.
    pub fn dot(self, other: Self) -> f64 {
        let s = self.conj() * other + other.conj() * self;
        0.5 * s.q0
    }

    pub fn cross(self, other: Self) -> Self {
        Self::vector(
            self.q2 * other.q3 - self.q3 * other.q2,
            self.q3 * other.q1 - self.q1 * other.q3,
            self.q1 * other.q2 - self.q2 * other.q1,
        )
    }

    pub fn distance(self, other: Self) -> f64 {
        (self - other).norm()
    }

    pub fn is_vector(self) -> bool {
        self.q0.abs() <= epsilon()
    }

    pub fn is_unit(self) -> bool {
        (self.norm() - 1.0).abs() <= epsilon()
    }

    pub fn approx_eq(self, other: Self, tol: f64) -> bool {
        self.to_array()
            .iter()
            .zip(other.to_array())
            .all(|(a, b)| (a - b).abs() <= tol)
    }
}

/// Hamilton product with `e_i e_j = −δ_ij + ε_ijk e_k`.
pub fn multiply(a: Quaternion, b: Quaternion) -> Quaternion {
    Quaternion::new(
        a.q0 * b.q0 - a.q1 * b.q1 - a.q2 * b.q2 - a.q3 * b.q3,
        a.q0 * b.q1 + a.q1 * b.q0 + a.q2 * b.q3 - a.q3 * b.q2,
        a.q0 * b.q2 - a.q1 * b.q3 + a.q2 * b.q0 + a.q3 * b.q1,
        a.q0 * b.q3 + a.q1 * b.q2 - a.q2 * b.q1 + a.q3 * b.q0,
    )
}

pub fn scalar_product(a: Quaternion, b: Quaternion) -> f64 {
    a.dot(b)
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: Quaternion) -> Quaternion {
        multiply(self, rhs)
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: f64) -> Quaternion {
        self.scale(rhs)
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: Quaternion) -> Quaternion {
        Quaternion::new(self.q0 + rhs.q0, self.q1 + rhs.q1, self.q2 + rhs.q2, self.q3 + rhs.q3)
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: Quaternion) -> Quaternion {
        self + (-rhs)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        self.scale(-1.0)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {:+}e1 {:+}e2 {:+}e3)", self.q0, self.q1, self.q2, self.q3)
    }
}

/// An isometry written as a quaternion pair, `[p, q]` or `[p, q]*`.
///
/// `(p, q)` and `(−p, −q)` act identically; constructors canonicalise so
/// the first non-negligible component of `p` is positive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GroupElement {
    left: Quaternion,
    right: Quaternion,
    star: bool,
}

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement {
        left: Quaternion::ONE,
        right: Quaternion::ONE,
        star: false,
    };

    pub fn new(left: Quaternion, right: Quaternion, star: bool) -> Self {
        let eps = epsilon();
        let flip = left
            .to_array()
            .into_iter()
            .find(|c| c.abs() > eps)
            .is_some_and(|c| c < 0.0);
        if flip {
            Self {
                left: -left,
                right: -right,
                star,
            }
        } else {
            Self { left, right, star }
        }
    }

    /// Reflection in the plane orthogonal to `root`: `[α/|α|, −α/|α|]*`.
    pub fn reflection(root: Quaternion) -> Self {
        let u = root.normalized();
        Self::new(u, -u, true)
    }

    pub fn left(&self) -> Quaternion {
        self.left
    }

    pub fn right(&self) -> Quaternion {
        self.right
    }

    pub fn is_star(&self) -> bool {
        self.star
    }

    /// The pair and star flag as nine reals, used as a hashing key.
    pub fn key(&self) -> [f64; 9] {
        let l = self.left.to_array();
        let r = self.right.to_array();
        let s = if self.star { 1.0 } else { 0.0 };
        [l[0], l[1], l[2], l[3], r[0], r[1], r[2], r[3], s]
    }

    /// Action on a pure-imaginary quaternion.
    pub fn apply(&self, v: Quaternion) -> Result<Quaternion> {
        if !v.is_vector() {
            return Err(Error::NonVectorInput(v.q0));
        }
        Ok(self.act(v))
    }

    /// Action without the vector precondition check.
    pub fn act(&self, v: Quaternion) -> Quaternion {
        let v = if self.star { v.conj() } else { v };
        self.left * v * self.right
    }

    /// `self ∘ other`, so that `compose(g, h).act(v) == g.act(h.act(v))`.
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        let (p1, q1) = (self.left, self.right);
        let (p2, q2) = (other.left, other.right);
        if self.star {
            // conj(p2 v q2) = q̄2 v̄ p̄2
            GroupElement::new(p1 * q2.conj(), p2.conj() * q1, !other.star)
        } else {
            GroupElement::new(p1 * p2, q2 * q1, other.star)
        }
    }

    pub fn inverse(&self) -> GroupElement {
        if self.star {
            // v = p w̄ q  =>  w = conj(p̄ v q̄) = q v̄ p
            GroupElement::new(self.right, self.left, true)
        } else {
            GroupElement::new(self.left.conj(), self.right.conj(), false)
        }
    }

    pub fn approx_eq(&self, other: &GroupElement, tol: f64) -> bool {
        self.star == other.star && self.left.approx_eq(other.left, tol) && self.right.approx_eq(other.right, tol)
    }

    /// Smallest `k ≥ 1` with `g^k v = v` on `probe`, up to `limit`.
    pub fn order_on(&self, probe: Quaternion, limit: usize) -> Option<usize> {
        let tol = epsilon() * probe.norm().max(1.0);
        let mut w = probe;
        for k in 1..=limit {
            w = self.act(w);
            if w.approx_eq(probe, tol) {
                return Some(k);
            }
        }
        None
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]{}", self.left, self.right, if self.star { "*" } else { "" })
    }
}

pub fn apply(g: &GroupElement, v: Quaternion) -> Result<Quaternion> {
    g.apply(v)
}

pub fn compose(g: &GroupElement, h: &GroupElement) -> GroupElement {
    g.compose(h)
}
