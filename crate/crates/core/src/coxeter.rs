//! The rank-3 diagrams A3, B3, H3: simple roots, Cartan data, fundamental
//! weights, reflection generators, and the groups they generate.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quaternion::{GroupElement, Quaternion};
use crate::tolerance::{epsilon, TolerantIndex};

/// The golden ratio τ and its conjugate σ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GoldenConstants {
    pub tau: f64,
    pub sigma: f64,
}

pub const TAU: f64 = 1.618_033_988_749_895;
pub const SIGMA: f64 = -0.618_033_988_749_894_9;
pub const SQRT2: f64 = std::f64::consts::SQRT_2;

impl GoldenConstants {
    pub fn new() -> Self {
        let r5 = 5f64.sqrt();
        Self {
            tau: (1.0 + r5) / 2.0,
            sigma: (1.0 - r5) / 2.0,
        }
    }
}

impl Default for GoldenConstants {
    fn default() -> Self {
        Self::new()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Diagram {
    A3,
    B3,
    H3,
}

impl Diagram {
    pub const ALL: [Diagram; 3] = [Diagram::A3, Diagram::B3, Diagram::H3];

    pub fn group_order(self) -> usize {
        match self {
            Diagram::A3 => 24,
            Diagram::B3 => 48,
            Diagram::H3 => 120,
        }
    }

    /// Orders of `r1r2`, `r2r3`, `r1r3`.
    pub fn coxeter_orders(self) -> [usize; 3] {
        match self {
            Diagram::A3 => [3, 3, 2],
            Diagram::B3 => [3, 4, 2],
            Diagram::H3 => [5, 3, 2],
        }
    }

    /// Order of `r_i r_j` for `i != j` (0-based).
    pub fn pair_order(self, i: usize, j: usize) -> usize {
        let [m12, m23, m13] = self.coxeter_orders();
        match (i.min(j), i.max(j)) {
            (0, 1) => m12,
            (1, 2) => m23,
            (0, 2) => m13,
            _ => 1,
        }
    }

    pub fn cartan(self) -> [[f64; 3]; 3] {
        match self {
            Diagram::A3 => [[2.0, -1.0, 0.0], [-1.0, 2.0, -1.0], [0.0, -1.0, 2.0]],
            Diagram::B3 => [[2.0, -1.0, 0.0], [-1.0, 2.0, -SQRT2], [0.0, -SQRT2, 2.0]],
            Diagram::H3 => [[2.0, -TAU, 0.0], [-TAU, 2.0, -1.0], [0.0, -1.0, 2.0]],
        }
    }

    /// Closed-form inverse Cartan matrix as printed for each diagram.
    pub fn cartan_inverse(self) -> [[f64; 3]; 3] {
        match self {
            Diagram::A3 => {
                let m = [[3.0, 2.0, 1.0], [2.0, 4.0, 2.0], [1.0, 2.0, 3.0]];
                m.map(|r| r.map(|x| x / 4.0))
            }
            Diagram::B3 => {
                let h = 1.0 / SQRT2;
                [[1.0, 1.0, h], [1.0, 2.0, SQRT2], [h, SQRT2, 1.5]]
            }
            Diagram::H3 => {
                let (t2, t3) = (TAU * TAU, TAU * TAU * TAU);
                let m = [
                    [3.0 * t2, 2.0 * t3, t3],
                    [2.0 * t3, 4.0 * t2, 2.0 * t2],
                    [t3, 2.0 * t2, TAU + 2.0],
                ];
                m.map(|r| r.map(|x| x / 2.0))
            }
        }
    }

    /// Unit quaternions `u_i` of the generators `r_i = [u_i, −u_i]*`.
    pub fn generator_units(self) -> [Quaternion; 3] {
        let h = 1.0 / SQRT2;
        match self {
            Diagram::A3 => [
                Quaternion::vector(h, h, 0.0),
                Quaternion::vector(0.0, -h, h),
                Quaternion::vector(-h, h, 0.0),
            ],
            Diagram::B3 => [
                Quaternion::vector(h, -h, 0.0),
                Quaternion::vector(0.0, h, -h),
                Quaternion::E3,
            ],
            Diagram::H3 => [
                Quaternion::E1,
                Quaternion::vector(0.5 * TAU, 0.5, 0.5 * SIGMA),
                Quaternion::E2,
            ],
        }
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Diagram::A3 => "A3",
            Diagram::B3 => "B3",
            Diagram::H3 => "H3",
        })
    }
}

impl FromStr for Diagram {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a3" => Ok(Diagram::A3),
            "b3" => Ok(Diagram::B3),
            "h3" => Ok(Diagram::H3),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CoxeterSystem {
    pub name: Diagram,
    pub simple_roots: [Quaternion; 3],
    pub cartan: [[f64; 3]; 3],
    pub cartan_inverse: [[f64; 3]; 3],
    pub weights: [Quaternion; 3],
    pub generators: [GroupElement; 3],
    pub golden: GoldenConstants,
}

fn gram(v: &[Quaternion; 3], w: &[Quaternion; 3]) -> [[f64; 3]; 3] {
    let mut m = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            m[i][j] = v[i].dot(w[j]);
        }
    }
    m
}

fn max_abs_diff(a: &[[f64; 3]; 3], b: &[[f64; 3]; 3]) -> f64 {
    let mut d: f64 = 0.0;
    for i in 0..3 {
        for j in 0..3 {
            d = d.max((a[i][j] - b[i][j]).abs());
        }
    }
    d
}

/// Inverse of a 3×3 matrix by cofactors.
pub(crate) fn invert3(m: &[[f64; 3]; 3]) -> [[f64; 3]; 3] {
    let c = |r0: usize, r1: usize, c0: usize, c1: usize| m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    let cof = [
        [c(1, 2, 1, 2), -c(1, 2, 0, 2), c(1, 2, 0, 1)],
        [-c(0, 2, 1, 2), c(0, 2, 0, 2), -c(0, 2, 0, 1)],
        [c(0, 1, 1, 2), -c(0, 1, 0, 2), c(0, 1, 0, 1)],
    ];
    let det = m[0][0] * cof[0][0] + m[0][1] * cof[0][1] + m[0][2] * cof[0][2];
    let mut inv = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            inv[i][j] = cof[j][i] / det;
        }
    }
    inv
}

/// Builds the system for `name`. Roots are `√2 u_i` with the signs that
/// reproduce the Cartan matrix, weights are `ω_i = (C⁻¹)_ij α_j`.
pub fn build_system(name: Diagram) -> Result<CoxeterSystem> {
    let units = name.generator_units();
    let cartan = name.cartan();
    let mut chosen = None;
    for mask in 0u8..8 {
        let roots: [Quaternion; 3] = std::array::from_fn(|i| {
            let s = if mask >> i & 1 == 1 { -SQRT2 } else { SQRT2 };
            units[i].scale(s)
        });
        if max_abs_diff(&gram(&roots, &roots), &cartan) < 1e-12 {
            chosen = Some(roots);
            break;
        }
    }
    let simple_roots = chosen.ok_or(Error::ConstructionInconsistency(name))?;
    let cartan_inverse = name.cartan_inverse();
    let weights: [Quaternion; 3] = std::array::from_fn(|i| {
        (0..3).fold(Quaternion::ZERO, |acc, j| {
            acc + simple_roots[j].scale(cartan_inverse[i][j])
        })
    });
    let duality = gram(&simple_roots, &weights);
    let identity = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
    if max_abs_diff(&duality, &identity) > 1e-12 {
        return Err(Error::ConstructionInconsistency(name));
    }
    let generators = simple_roots.map(GroupElement::reflection);
    Ok(CoxeterSystem {
        name,
        simple_roots,
        cartan,
        cartan_inverse,
        weights,
        generators,
        golden: GoldenConstants::new(),
    })
}

impl CoxeterSystem {
    /// `(α_i, α_j)` as measured from the roots.
    pub fn measured_cartan(&self) -> [[f64; 3]; 3] {
        gram(&self.simple_roots, &self.simple_roots)
    }

    /// `(α_i, ω_j)`.
    pub fn measured_duality(&self) -> [[f64; 3]; 3] {
        gram(&self.simple_roots, &self.weights)
    }

    /// `(ω_i, ω_j)`.
    pub fn measured_weight_gram(&self) -> [[f64; 3]; 3] {
        gram(&self.weights, &self.weights)
    }

    /// A vector fixed by no reflection of the group.
    pub fn generic_probe(&self) -> Quaternion {
        self.weights[0].scale(1.0) + self.weights[1].scale(0.731) + self.weights[2].scale(0.413)
    }

    pub fn weight_combination(&self, a: [f64; 3]) -> Quaternion {
        (0..3).fold(Quaternion::ZERO, |acc, i| acc + self.weights[i].scale(a[i]))
    }
}

/// A finite group of canonical quaternion-pair elements.
#[derive(Debug, Clone)]
pub struct ReflectionGroup {
    pub system: CoxeterSystem,
    elements: Vec<GroupElement>,
    index: TolerantIndex<9>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Subgroup {
    Chiral,
    Pyritohedral,
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Subgroup::Chiral => "chiral",
            Subgroup::Pyritohedral => "pyritohedral",
        })
    }
}

fn closure(
    generators: &[GroupElement],
    limit: usize,
) -> std::result::Result<(Vec<GroupElement>, TolerantIndex<9>), usize> {
    let mut index = TolerantIndex::new(epsilon());
    let mut elements = vec![GroupElement::IDENTITY];
    index.insert(GroupElement::IDENTITY.key());
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let g = elements[i];
        for r in generators {
            let h = r.compose(&g);
            let (j, fresh) = index.insert(h.key());
            if fresh {
                debug_assert_eq!(j, elements.len());
                elements.push(h);
                if elements.len() > limit {
                    return Err(elements.len());
                }
                queue.push_back(j);
            }
        }
    }
    Ok((elements, index))
}

/// Breadth-first closure of `{r1, r2, r3}` with canonical dedup.
pub fn generate_group(system: &CoxeterSystem) -> Result<ReflectionGroup> {
    let limit = 2 * system.name.group_order();
    let (elements, index) = closure(&system.generators, limit).map_err(|_| Error::ClosureOverflow {
        diagram: system.name,
        limit,
    })?;
    Ok(ReflectionGroup {
        system: system.clone(),
        elements,
        index,
    })
}

impl ReflectionGroup {
    pub fn new(name: Diagram) -> Result<Self> {
        generate_group(&build_system(name)?)
    }

    pub fn diagram(&self) -> Diagram {
        self.system.name
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn generators(&self) -> &[GroupElement; 3] {
        &self.system.generators
    }

    pub fn position(&self, g: &GroupElement) -> Option<usize> {
        self.index.find(&g.key())
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.position(g).is_some()
    }

    /// Number of elements without and with the star flag.
    pub fn star_split(&self) -> (usize, usize) {
        let star = self.elements.iter().filter(|g| g.is_star()).count();
        (self.elements.len() - star, star)
    }

    /// Order of `r_i r_j` measured on a generic probe vector.
    pub fn generator_pair_order(&self, i: usize, j: usize) -> Option<usize> {
        let g = self.system.generators[i].compose(&self.system.generators[j]);
        g.order_on(self.system.generic_probe(), 12)
    }

    /// Subgroup generated by the listed generators (0-based).
    pub fn generated_by(&self, which: &[usize]) -> Vec<GroupElement> {
        let gens: Vec<GroupElement> = which.iter().map(|&i| self.system.generators[i]).collect();
        closure(&gens, self.order()).map(|(e, _)| e).unwrap_or_default()
    }

    pub fn named_subgroup(&self, which: Subgroup) -> Result<Vec<GroupElement>> {
        match which {
            Subgroup::Chiral => Ok(self.elements.iter().filter(|g| !g.is_star()).copied().collect()),
            Subgroup::Pyritohedral => {
                if self.diagram() == Diagram::A3 {
                    return Err(Error::UnsupportedSubgroup {
                        diagram: Diagram::A3,
                        subgroup: "pyritohedral",
                    });
                }
                Ok(self
                    .elements
                    .iter()
                    .filter(|g| in_binary_tetrahedral(g.left()))
                    .copied()
                    .collect())
            }
        }
    }

    /// All elements fixing `v`.
    pub fn stabilizer(&self, v: Quaternion) -> Vec<GroupElement> {
        let tol = epsilon() * v.norm().max(1.0);
        self.elements
            .iter()
            .filter(|g| g.act(v).approx_eq(v, tol))
            .copied()
            .collect()
    }

    /// True if `set` is closed under composition within this group.
    pub fn is_closed_set(&self, set: &[GroupElement]) -> bool {
        let mut idx = TolerantIndex::<9>::new(epsilon());
        for g in set {
            idx.insert(g.key());
        }
        set.iter()
            .all(|g| set.iter().all(|h| idx.find(&g.compose(h).key()).is_some()))
    }
}

/// Membership in the binary tetrahedral group in its standard frame:
/// `±1, ±e_i, ½(±1 ± e1 ± e2 ± e3)`.
fn in_binary_tetrahedral(p: Quaternion) -> bool {
    let eps = 1e-9;
    let c = p.to_array();
    let units = c.iter().filter(|x| (x.abs() - 1.0).abs() < eps).count();
    let zeros = c.iter().filter(|x| x.abs() < eps).count();
    let halves = c.iter().filter(|x| (x.abs() - 0.5).abs() < eps).count();
    (units == 1 && zeros == 3) || halves == 4
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_identities() {
        let g = GoldenConstants::new();
        assert!((g.tau + g.sigma - 1.0).abs() < 1e-12);
        assert!((g.tau * g.sigma + 1.0).abs() < 1e-12);
        assert!((g.tau * g.tau - g.tau - 1.0).abs() < 1e-12);
        assert!((g.tau - TAU).abs() < 1e-15 && (g.sigma - SIGMA).abs() < 1e-15);
    }

    #[test]
    fn a3_roots_match_generators() {
        let s = build_system(Diagram::A3).unwrap();
        let expect = [
            Quaternion::vector(1.0, 1.0, 0.0),
            Quaternion::vector(0.0, -1.0, 1.0),
            Quaternion::vector(-1.0, 1.0, 0.0),
        ];
        for (r, e) in s.simple_roots.iter().zip(expect) {
            assert!(r.approx_eq(e, 1e-12));
        }
        // (ω1, ω1) = 3/4
        assert!((s.weights[0].norm_sqr() - 0.75).abs() < 1e-12);
    }

    #[test]
    fn cartan_data_is_reproduced() {
        for d in Diagram::ALL {
            let s = build_system(d).unwrap();
            let c = s.measured_cartan();
            assert!(max_abs_diff(&c, &d.cartan()) < 1e-12, "{d}");
            assert!(
                max_abs_diff(&s.measured_weight_gram(), &d.cartan_inverse()) < 1e-12,
                "{d}"
            );
            assert!(max_abs_diff(&invert3(&d.cartan()), &d.cartan_inverse()) < 1e-12, "{d}");
            for r in s.simple_roots {
                assert!((r.norm_sqr() - 2.0).abs() < 1e-12);
            }
        }
        let b3 = build_system(Diagram::B3).unwrap();
        assert!((b3.simple_roots[1].dot(b3.simple_roots[2]) + SQRT2).abs() < 1e-12);
        let h3 = build_system(Diagram::H3).unwrap();
        assert!((h3.weights[0].norm_sqr() - 1.5 * TAU * TAU).abs() < 1e-12);
    }

    #[test]
    fn group_orders_and_splits() {
        let a3 = ReflectionGroup::new(Diagram::A3).unwrap();
        assert_eq!(a3.order(), 24);
        assert_eq!(a3.star_split(), (12, 12));
        let b3 = ReflectionGroup::new(Diagram::B3).unwrap();
        assert_eq!(b3.order(), 48);
        assert_eq!(b3.star_split(), (24, 24));
        let h3 = ReflectionGroup::new(Diagram::H3).unwrap();
        assert_eq!(h3.order(), 120);
        assert_eq!(h3.star_split(), (60, 60));
    }

    #[test]
    fn every_element_has_the_conjugate_pair_form() {
        for d in Diagram::ALL {
            let g = ReflectionGroup::new(d).unwrap();
            for e in g.elements() {
                assert!(e.right().approx_eq(e.left().conj(), 1e-12));
            }
        }
    }

    #[test]
    fn closure_and_inverses() {
        for d in Diagram::ALL {
            let g = ReflectionGroup::new(d).unwrap();
            assert!(g.is_closed_set(g.elements()));
            assert!(g.contains(&GroupElement::IDENTITY));
            for e in g.elements() {
                assert!(g.contains(&e.inverse()));
            }
        }
    }

    #[test]
    fn coxeter_relations() {
        for d in Diagram::ALL {
            let g = ReflectionGroup::new(d).unwrap();
            let measured = [
                g.generator_pair_order(0, 1),
                g.generator_pair_order(1, 2),
                g.generator_pair_order(0, 2),
            ];
            assert_eq!(measured, d.coxeter_orders().map(Some), "{d}");
        }
    }

    #[test]
    fn subgroups() {
        let a3 = ReflectionGroup::new(Diagram::A3).unwrap();
        assert_eq!(a3.named_subgroup(Subgroup::Chiral).unwrap().len(), 12);
        assert!(matches!(
            a3.named_subgroup(Subgroup::Pyritohedral),
            Err(Error::UnsupportedSubgroup { .. })
        ));
        for d in [Diagram::B3, Diagram::H3] {
            let g = ReflectionGroup::new(d).unwrap();
            let chiral = g.named_subgroup(Subgroup::Chiral).unwrap();
            let pyr = g.named_subgroup(Subgroup::Pyritohedral).unwrap();
            assert_eq!(chiral.len(), g.order() / 2);
            assert_eq!(pyr.len(), 24, "{d}");
            assert!(g.is_closed_set(&chiral));
            assert!(g.is_closed_set(&pyr));
            // contains the central inversion [1, 1]*
            let inversion = GroupElement::new(Quaternion::ONE, Quaternion::ONE, true);
            assert!(pyr.iter().any(|e| e.approx_eq(&inversion, 1e-12)));
        }
    }

    #[test]
    fn stabilizers() {
        let a3 = ReflectionGroup::new(Diagram::A3).unwrap();
        let s = &a3.system;
        let v = s.weight_combination([1.0, 2.0, 0.0]);
        let stab = a3.stabilizer(v);
        assert_eq!(stab.len(), 2);
        assert!(stab.iter().any(|g| g.approx_eq(&s.generators[2], 1e-12)));
        assert_eq!(a3.stabilizer(s.weight_combination([1.0, 2.0, 3.0])).len(), 1);
        assert_eq!(a3.stabilizer(Quaternion::ZERO).len(), 24);
        let b3 = ReflectionGroup::new(Diagram::B3).unwrap();
        let stab = b3.stabilizer(b3.system.weight_combination([0.0, 1.0, 0.0]));
        assert!(b3.is_closed_set(&stab));
        assert_eq!(stab.len(), 4);
    }

    #[test]
    fn dihedral_subgroups_have_twice_the_coxeter_order() {
        for d in Diagram::ALL {
            let g = ReflectionGroup::new(d).unwrap();
            assert_eq!(g.generated_by(&[0, 1]).len(), 2 * d.pair_order(0, 1));
            assert_eq!(g.generated_by(&[1, 2]).len(), 2 * d.pair_order(1, 2));
            assert_eq!(g.generated_by(&[0, 2]).len(), 4);
        }
    }
}
