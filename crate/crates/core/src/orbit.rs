//! Orbits `O(Λ) = W Λ` of dominant weight vectors, plus the closed-form
//! vertex lists for A3 and B3 and the chiral icosahedron pair.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coxeter::{CoxeterSystem, Diagram, ReflectionGroup, Subgroup, SIGMA, SQRT2, TAU};
use crate::error::{Error, Result};
use crate::par::{self, Execution};
use crate::quaternion::{GroupElement, Quaternion};
use crate::tolerance::{coarse_cmp, epsilon, TolerantIndex};

/// Dynkin-style indices `(a1 a2 a3)` of `Λ = a1ω1 + a2ω2 + a3ω3`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WeightIndices {
    pub a: [f64; 3],
    pub group: Diagram,
    /// Use the unit-root normalisation `σ(a1a2a3)` (H3 only).
    pub h3_sigma_scale: bool,
}

impl WeightIndices {
    pub fn new(group: Diagram, a: [f64; 3]) -> Result<Self> {
        Self::with_sigma(group, a, false)
    }

    pub fn sigma(a: [f64; 3]) -> Result<Self> {
        Self::with_sigma(Diagram::H3, a, true)
    }

    pub fn with_sigma(group: Diagram, a: [f64; 3], h3_sigma_scale: bool) -> Result<Self> {
        if let Some(i) = a.iter().position(|x| !x.is_finite() || *x < 0.0) {
            return Err(Error::InvalidIndices(format!(
                "a{} = {} must be a finite non-negative number",
                i + 1,
                a[i]
            )));
        }
        if a.iter().all(|x| *x == 0.0) {
            return Err(Error::InvalidIndices("indices must not all be zero".into()));
        }
        if h3_sigma_scale && group != Diagram::H3 {
            return Err(Error::InvalidIndices(format!(
                "sigma scaling is only defined for H3, not {group}"
            )));
        }
        Ok(Self {
            a,
            group,
            h3_sigma_scale,
        })
    }

    /// Which indices are non-zero.
    pub fn support(&self) -> [bool; 3] {
        self.a.map(|x| x > 0.0)
    }

    /// Factor between the vector used here and the plain weight combination.
    pub fn length_scale(&self) -> f64 {
        if self.h3_sigma_scale {
            -SIGMA / SQRT2
        } else {
            1.0
        }
    }

    pub fn scaled(&self, c: f64) -> Result<Self> {
        Self::with_sigma(self.group, self.a.map(|x| x * c), self.h3_sigma_scale)
    }
}

impl fmt::Display for WeightIndices {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a1, a2, a3] = self.a;
        if self.h3_sigma_scale {
            write!(f, "{} σ({a1}, {a2}, {a3})", self.group)
        } else {
            write!(f, "{} ({a1}, {a2}, {a3})", self.group)
        }
    }
}

/// `Λ` for the given indices. For `σ(a1a2a3)` this is the component formula
/// `½[−σa1 e1 − σa3 e2 + (τa1 + 2a2 + a3) e3]`.
pub fn indices_to_vector(system: &CoxeterSystem, w: &WeightIndices) -> Quaternion {
    let [a1, a2, a3] = w.a;
    if w.h3_sigma_scale {
        Quaternion::vector(-0.5 * SIGMA * a1, -0.5 * SIGMA * a3, 0.5 * (TAU * a1 + 2.0 * a2 + a3))
    } else {
        system.weight_combination(w.a)
    }
}

/// Quadratic form `aᵀ C⁻¹ a`, the squared norm of the weight combination.
pub fn weight_norm_sqr(system: &CoxeterSystem, a: [f64; 3]) -> f64 {
    let c = &system.cartan_inverse;
    (0..3).map(|i| (0..3).map(|j| a[i] * c[i][j] * a[j]).sum::<f64>()).sum()
}

#[derive(Debug, Clone)]
pub struct Orbit {
    pub seed: Quaternion,
    /// Canonically sorted, deduplicated vertices.
    pub vertices: Vec<Quaternion>,
    /// For each vertex, the index of a group element mapping the seed to it.
    pub transversal: Vec<usize>,
    index: TolerantIndex<3>,
}

impl Orbit {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    pub fn find(&self, v: Quaternion) -> Option<usize> {
        self.index.find(&v.xyz())
    }

    pub fn seed_index(&self) -> usize {
        self.find(self.seed).expect("seed belongs to its orbit")
    }

    pub fn radius(&self) -> f64 {
        self.seed.norm()
    }

    /// `max |v| / min |v| − 1`.
    pub fn sphere_spread(&self) -> f64 {
        let (lo, hi) = self
            .vertices
            .iter()
            .map(|v| v.norm())
            .fold((f64::INFINITY, 0.0f64), |(lo, hi), r| (lo.min(r), hi.max(r)));
        hi / lo - 1.0
    }
}

/// Deduplicates and canonically sorts points; returns the kept points and,
/// for each, the position of its first occurrence.
pub(crate) fn dedup_sorted(points: &[Quaternion], tol: f64) -> (Vec<Quaternion>, Vec<usize>, TolerantIndex<3>) {
    let mut idx = TolerantIndex::<3>::new(tol);
    let mut first = Vec::new();
    for (k, p) in points.iter().enumerate() {
        if idx.insert(p.xyz()).1 {
            first.push(k);
        }
    }
    let mut order: Vec<usize> = (0..first.len()).collect();
    let pts = idx.points();
    order.sort_by(|&i, &j| coarse_cmp(&pts[i], &pts[j], tol));
    let vertices: Vec<Quaternion> = order.iter().map(|&i| points[first[i]]).collect();
    let firsts: Vec<usize> = order.iter().map(|&i| first[i]).collect();
    let mut sorted = TolerantIndex::<3>::new(tol);
    for v in &vertices {
        sorted.insert(v.xyz());
    }
    (vertices, firsts, sorted)
}

/// Orbit of `lambda` under `elements`.
pub fn orbit_under(elements: &[GroupElement], lambda: Quaternion, exec: Execution) -> Orbit {
    let images = par::map(exec, elements, |g| g.act(lambda));
    let tol = epsilon() * lambda.norm().max(1.0);
    let (vertices, transversal, index) = dedup_sorted(&images, tol);
    Orbit {
        seed: lambda,
        vertices,
        transversal,
        index,
    }
}

pub fn orbit(group: &ReflectionGroup, lambda: Quaternion) -> Orbit {
    orbit_with(group, lambda, Execution::default())
}

pub fn orbit_with(group: &ReflectionGroup, lambda: Quaternion, exec: Execution) -> Orbit {
    orbit_under(group.elements(), lambda, exec)
}

const EVEN_SIGNS: [[f64; 3]; 4] = [[1.0, 1.0, 1.0], [-1.0, -1.0, 1.0], [-1.0, 1.0, -1.0], [1.0, -1.0, -1.0]];

fn permutations(x: [f64; 3]) -> [[f64; 3]; 6] {
    let [a, b, c] = x;
    [[a, b, c], [b, c, a], [c, a, b], [a, c, b], [c, b, a], [b, a, c]]
}

/// `(α, β, γ)` for A3: `½(a1 − a3)`, `½(a1 + a3)`, `½(a1 + 2a2 + a3)`.
pub fn a3_parameters(a: [f64; 3]) -> [f64; 3] {
    let [a1, a2, a3] = a;
    [0.5 * (a1 - a3), 0.5 * (a1 + a3), 0.5 * (a1 + 2.0 * a2 + a3)]
}

/// `(α, β, γ)` for B3: `a1 + a2 + a3/√2`, `a2 + a3/√2`, `a3/√2`.
pub fn b3_parameters(a: [f64; 3]) -> [f64; 3] {
    let [a1, a2, a3] = a;
    let h = a3 / SQRT2;
    [a1 + a2 + h, a2 + h, h]
}

/// All 24 entries (repetitions kept) of the permutations of `(α, β, γ)`
/// with an even number of sign changes.
pub fn closed_form_a3(a: [f64; 3]) -> Vec<Quaternion> {
    let mut out = Vec::with_capacity(24);
    for p in permutations(a3_parameters(a)) {
        for s in EVEN_SIGNS {
            out.push(Quaternion::vector(s[0] * p[0], s[1] * p[1], s[2] * p[2]));
        }
    }
    out
}

/// All 48 entries (repetitions kept) of the signed permutations of `(α, β, γ)`.
pub fn closed_form_b3(a: [f64; 3]) -> Vec<Quaternion> {
    let mut out = Vec::with_capacity(48);
    for p in permutations(b3_parameters(a)) {
        for mask in 0..8 {
            let s = |i: usize| if mask >> i & 1 == 1 { -1.0 } else { 1.0 };
            out.push(Quaternion::vector(s(0) * p[0], s(1) * p[1], s(2) * p[2]));
        }
    }
    out
}

/// Largest distance from a point of either set to the nearest point of the other.
pub fn set_distance(a: &[Quaternion], b: &[Quaternion]) -> f64 {
    let one_way = |x: &[Quaternion], y: &[Quaternion]| {
        x.iter()
            .map(|p| y.iter().map(|q| p.distance(*q)).fold(f64::INFINITY, f64::min))
            .fold(0.0f64, f64::max)
    };
    if a.is_empty() || b.is_empty() {
        return if a.len() == b.len() { 0.0 } else { f64::INFINITY };
    }
    one_way(a, b).max(one_way(b, a))
}

/// Two mirror-image orbits of the rotation subgroup.
#[derive(Debug, Clone)]
pub struct ChiralPair {
    pub seed: Quaternion,
    pub first: Orbit,
    pub second: Orbit,
}

/// Orbits of `Λ` and of `r1 Λ` under the non-star elements of W(A3).
pub fn chiral_orbit_pair(group: &ReflectionGroup, w: &WeightIndices) -> Result<ChiralPair> {
    if group.diagram() != Diagram::A3 || w.group != Diagram::A3 {
        return Err(Error::InvalidIndices(
            "the chiral icosahedron pair is built on A3".into(),
        ));
    }
    let rotations = group.named_subgroup(Subgroup::Chiral)?;
    let lambda = indices_to_vector(&group.system, w);
    let mirrored = group.system.generators[0].act(lambda);
    let exec = Execution::default();
    Ok(ChiralPair {
        seed: lambda,
        first: orbit_under(&rotations, lambda, exec),
        second: orbit_under(&rotations, mirrored, exec),
    })
}

/// The two icosahedra `±e1 ± τe2, …` and `±τe1 ± e2, …` at unit scale.
pub fn golden_icosahedra() -> (Vec<Quaternion>, Vec<Quaternion>) {
    let mut first = Vec::new();
    let mut second = Vec::new();
    for s1 in [1.0, -1.0] {
        for s2 in [1.0, -1.0] {
            let (x, y) = (s1, s2 * TAU);
            first.push(Quaternion::vector(x, y, 0.0));
            first.push(Quaternion::vector(0.0, x, y));
            first.push(Quaternion::vector(y, 0.0, x));
            second.push(Quaternion::vector(y, x, 0.0));
            second.push(Quaternion::vector(0.0, y, x));
            second.push(Quaternion::vector(x, 0.0, y));
        }
    }
    (first, second)
}
