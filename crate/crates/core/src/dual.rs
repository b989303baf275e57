//! Duals of orbit polyhedra built from scaled face centres.
//!
//! The centre of a face of class `k` lies along an image of `ω_k`. The dual
//! vertex is that image scaled by `s_k`, where the factors make every dual
//! face orthogonal to its primal vertex: `(s_i ω_i − s_r ω_r) · Λ = 0`.

use serde::{Deserialize, Serialize};

use crate::coxeter::{CoxeterSystem, Diagram, ReflectionGroup, SIGMA, SQRT2, TAU};
use crate::error::{Error, Result};
use crate::orbit::{self, WeightIndices};
use crate::par::{self, Execution};
use crate::polyhedron::{face, order_about_axis, FaceShape, OrbitPolyhedron, Polyhedron};
use crate::quaternion::Quaternion;
use crate::tolerance::{epsilon, TolerantIndex};

/// Which contributing weight gets scale factor 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScaleReference {
    /// The highest-numbered contributing weight with `a_k = 0`, otherwise `ω3`.
    /// This is the normalisation the published closed forms use.
    #[default]
    Conventional,
    /// The contributing weight with the largest `ω_k · Λ`.
    LargestProjection,
    /// A fixed weight, 0-based.
    Fixed(usize),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DualSpec {
    /// Weights (0-based) whose orbits carry dual vertices, ascending.
    pub contributing: Vec<usize>,
    pub reference: usize,
    /// `s_k` for each contributing weight, `None` otherwise.
    pub scale_factors: [Option<f64>; 3],
    /// Face shape forced by the vertex stabiliser, where it forces one.
    pub expected_face: Option<FaceShape>,
}

impl DualSpec {
    pub fn factor(&self, k: usize) -> Option<f64> {
        self.scale_factors[k]
    }
}

fn pick_reference(w: &WeightIndices, contributing: &[usize], proj: &[f64; 3], how: ScaleReference) -> Result<usize> {
    match how {
        ScaleReference::Conventional => Ok(contributing
            .iter()
            .rev()
            .copied()
            .find(|&k| w.a[k] == 0.0)
            .unwrap_or(*contributing.last().expect("at least one face class"))),
        ScaleReference::LargestProjection => Ok(contributing
            .iter()
            .copied()
            .max_by(|&x, &y| proj[x].total_cmp(&proj[y]))
            .expect("at least one face class")),
        ScaleReference::Fixed(k) if contributing.contains(&k) => Ok(k),
        ScaleReference::Fixed(k) => Err(Error::InvalidIndices(format!(
            "weight {} carries no dual vertices for {w}",
            k + 1
        ))),
    }
}

/// Shape a dual face must have given the vertex stabiliser order and the
/// number of faces meeting at the vertex. Higher symmetry is not predicted.
pub fn expected_dual_face(stabilizer_order: usize, faces_at_vertex: usize) -> Option<FaceShape> {
    match (stabilizer_order, faces_at_vertex) {
        (1, 3) => Some(FaceShape::ScaleneTriangle),
        (2, 3) => Some(FaceShape::IsoscelesTriangle),
        (2, 4) => Some(FaceShape::Kite),
        _ => None,
    }
}

/// True if `measured` is `expected` or one of its more symmetric special cases.
pub fn shape_refines(measured: FaceShape, expected: FaceShape) -> bool {
    use FaceShape::*;
    measured == expected
        || matches!(
            (expected, measured),
            (ScaleneTriangle, IsoscelesTriangle | EquilateralTriangle)
                | (IsoscelesTriangle, EquilateralTriangle)
                | (Kite, Square)
        )
}

/// `s_k = (ω_r · Λ) / (ω_k · Λ)` for every face class `k` present.
pub fn solve_scale_factors(
    system: &CoxeterSystem,
    w: &WeightIndices,
    contributing: &[usize],
    how: ScaleReference,
) -> Result<DualSpec> {
    let lambda = orbit::indices_to_vector(system, w);
    let proj: [f64; 3] = std::array::from_fn(|k| system.weights[k].dot(lambda));
    let tol = epsilon() * lambda.norm().max(1.0);
    for &k in contributing {
        if proj[k].abs() <= tol {
            return Err(Error::ZeroProjection(k + 1));
        }
    }
    let mut contributing = contributing.to_vec();
    contributing.sort_unstable();
    contributing.dedup();
    let reference = pick_reference(w, &contributing, &proj, how)?;
    let mut scale_factors = [None; 3];
    for &k in &contributing {
        scale_factors[k] = Some(proj[reference] / proj[k]);
    }
    Ok(DualSpec {
        contributing,
        reference,
        scale_factors,
        expected_face: None,
    })
}

/// Spec for a built polyhedron, with the expected face shape filled in.
pub fn spec_for(poly: &OrbitPolyhedron, system: &CoxeterSystem, how: ScaleReference) -> Result<DualSpec> {
    let contributing: Vec<usize> = poly.classes.iter().map(|c| c.weight).collect();
    let mut spec = solve_scale_factors(system, &poly.indices, &contributing, how)?;
    let seed = poly.orbit.seed_index();
    let faces_at_seed = poly.mesh.faces.iter().filter(|f| f.cycle.contains(&seed)).count();
    spec.expected_face = expected_dual_face(poly.stabilizer_order, faces_at_seed);
    Ok(spec)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DualMeasurements {
    /// Largest `|n̂ × v̂|` over dual faces.
    pub orthogonality: f64,
    /// Largest out-of-plane deviation over dual faces, relative to face size.
    pub coplanarity: f64,
    /// Largest `|(c_a − c_b) · v̂|` over same-class centres sharing a face.
    pub same_class_orthogonality: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SphereRadius {
    /// 0-based weight index.
    pub weight: usize,
    pub scale_factor: f64,
    pub radius: f64,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DualSolid {
    pub spec: DualSpec,
    /// Dual vertex `i` sits over primal face `i`.
    pub mesh: Polyhedron,
    /// Weight class of each dual vertex.
    pub vertex_class: Vec<usize>,
    pub measurements: DualMeasurements,
}

/// Limit on dual face out-of-plane deviation, relative to face circumradius.
pub const COPLANARITY_TOL: f64 = 1e-8;

pub fn build_dual(poly: &OrbitPolyhedron, spec: &DualSpec, group: &ReflectionGroup) -> Result<DualSolid> {
    build_dual_with(poly, spec, group, Execution::default())
}

pub fn build_dual_with(
    poly: &OrbitPolyhedron,
    spec: &DualSpec,
    group: &ReflectionGroup,
    exec: Execution,
) -> Result<DualSolid> {
    let weights = &group.system.weights;
    let primal = &poly.mesh;
    let mut vertices = Vec::with_capacity(primal.faces.len());
    let mut vertex_class = Vec::with_capacity(primal.faces.len());
    for f in &primal.faces {
        let k = f
            .center_weight
            .ok_or_else(|| Error::InvalidIndices("face without a weight class".into()))?;
        let s = spec.factor(k).ok_or(Error::ZeroProjection(k + 1))?;
        let pts: Vec<Quaternion> = f.cycle.iter().map(|&i| primal.vertices[i]).collect();
        let dir = face::centroid(&pts).normalized();
        vertices.push(dir.scale(s * weights[k].norm()));
        vertex_class.push(k);
    }

    let incident = poly.vertex_faces();
    // (cycle, coplanarity, orthogonality, same-class orthogonality) per dual face
    type FaceResult = Result<(Vec<usize>, f64, f64, f64)>;
    let faces: Vec<FaceResult> = par::map_range(exec, primal.vertices.len(), |v| {
        let axis = primal.vertices[v].normalized();
        let ids = &incident[v];
        let pts: Vec<Quaternion> = ids.iter().map(|&i| vertices[i]).collect();
        let center = face::centroid(&pts);
        let cycle = order_about_axis(&pts, ids, center, axis);
        let ordered: Vec<Quaternion> = cycle.iter().map(|&i| vertices[i]).collect();
        let size = ordered.iter().map(|p| p.distance(center)).fold(0.0, f64::max);
        let n = face::newell_normal(&ordered).normalized();
        let deviation = ordered.iter().map(|p| (*p - center).dot(n).abs()).fold(0.0, f64::max) / size;
        if deviation > COPLANARITY_TOL {
            return Err(Error::NonCoplanarDualFace { vertex: v, deviation });
        }
        let ortho = n.cross(axis).norm();
        let mut same_class: f64 = 0.0;
        for (x, &i) in ids.iter().enumerate() {
            for &j in &ids[x + 1..] {
                if vertex_class[i] == vertex_class[j] {
                    same_class = same_class.max((vertices[i] - vertices[j]).dot(axis).abs());
                }
            }
        }
        Ok((cycle, deviation, ortho, same_class))
    });

    let mut cycles = Vec::with_capacity(faces.len());
    let mut measurements = DualMeasurements {
        orthogonality: 0.0,
        coplanarity: 0.0,
        same_class_orthogonality: 0.0,
    };
    for r in faces {
        let (cycle, dev, ortho, same) = r?;
        measurements.coplanarity = measurements.coplanarity.max(dev);
        measurements.orthogonality = measurements.orthogonality.max(ortho);
        measurements.same_class_orthogonality = measurements.same_class_orthogonality.max(same);
        cycles.push(cycle);
    }
    let mesh = Polyhedron::from_cycles(vertices, cycles, |_| None)?;
    Ok(DualSolid {
        spec: spec.clone(),
        mesh,
        vertex_class,
        measurements,
    })
}

impl DualSolid {
    /// One radius per contributing weight, `s_k |ω_k|`, with the measured count.
    pub fn sphere_radii(&self) -> Vec<SphereRadius> {
        self.spec
            .contributing
            .iter()
            .map(|&k| {
                let members: Vec<usize> = (0..self.vertex_class.len())
                    .filter(|&i| self.vertex_class[i] == k)
                    .collect();
                SphereRadius {
                    weight: k,
                    scale_factor: self.spec.scale_factors[k].unwrap_or(0.0),
                    radius: self.mesh.vertices[members[0]].norm(),
                    count: members.len(),
                }
            })
            .collect()
    }

    /// Dual faces all of one shape, or `None` if they differ.
    pub fn face_shape(&self) -> Option<FaceShape> {
        let first = self.mesh.faces.first()?.kind.shape;
        self.mesh.faces.iter().all(|f| f.kind.shape == first).then_some(first)
    }
}

/// Distance between the dual vertex set and the union of `s_k · O(ω_k)`.
pub fn scaled_orbit_distance(dual: &DualSolid, group: &ReflectionGroup) -> f64 {
    let mut expected = Vec::new();
    for &k in &dual.spec.contributing {
        let s = dual.spec.scale_factors[k].unwrap_or(0.0);
        let o = orbit::orbit(group, group.system.weights[k].scale(s));
        expected.extend(o.vertices);
    }
    orbit::set_distance(&dual.mesh.vertices, &expected)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Transitivity {
    pub transitive: bool,
    /// For face `j`, the index of a group element taking face 0 onto it.
    pub witnesses: Vec<Option<usize>>,
    /// First face no element reaches from face 0.
    pub failing: Option<(usize, usize)>,
}

/// Checks that the group maps face 0 onto every face as a vertex set.
/// Together with the group property this covers every pair of faces.
pub fn face_transitivity_check(mesh: &Polyhedron, group: &ReflectionGroup) -> Transitivity {
    let scale = mesh.vertices.iter().map(|v| v.norm()).fold(0.0, f64::max).max(1.0);
    let mut index = TolerantIndex::<3>::new(epsilon() * scale);
    for v in &mesh.vertices {
        index.insert(v.xyz());
    }
    let sets = mesh.face_sets_in_order();
    let lookup = |p: Quaternion| index.find(&p.xyz());
    let Some(first) = sets.first() else {
        return Transitivity {
            transitive: true,
            witnesses: Vec::new(),
            failing: None,
        };
    };
    let images: Vec<Option<Vec<usize>>> = par::map(Execution::default(), group.elements(), |g| {
        let ids: Option<Vec<usize>> = first.iter().map(|&i| lookup(g.act(mesh.vertices[i]))).collect();
        ids.map(|mut v| {
            v.sort_unstable();
            v
        })
    });
    let witnesses: Vec<Option<usize>> = sets
        .iter()
        .map(|target| images.iter().position(|img| img.as_ref() == Some(target)))
        .collect();
    let failing = witnesses.iter().position(Option::is_none).map(|j| (0, j));
    Transitivity {
        transitive: failing.is_none(),
        witnesses,
        failing,
    }
}

/// A published closed form for one scale factor.
#[derive(Debug, Clone, Copy)]
pub struct PrintedFormula {
    pub family: &'static str,
    pub group: Diagram,
    /// Which indices are non-zero.
    pub support: [bool; 3],
    /// Requires `a1 = a3`.
    pub symmetric: bool,
    pub reference: usize,
    pub weight: usize,
    pub symbol: &'static str,
    pub eval: fn([f64; 3]) -> f64,
}

const ALL: [bool; 3] = [true, true, true];

/// Every closed form for λ and η, normalised as printed.
pub const PRINTED_FORMULAS: &[PrintedFormula] = &[
    PrintedFormula {
        family: "A3 (a1 a2 0)",
        group: Diagram::A3,
        support: [true, true, false],
        symmetric: false,
        reference: 2,
        weight: 0,
        symbol: "λ",
        eval: |[a1, a2, _]| (a1 + 2.0 * a2) / (3.0 * a1 + 2.0 * a2),
    },
    PrintedFormula {
        family: "A3 (a1 0 a3)",
        group: Diagram::A3,
        support: [true, false, true],
        symmetric: false,
        reference: 1,
        weight: 0,
        symbol: "λ",
        eval: |[a1, _, a3]| (2.0 * a1 + 2.0 * a3) / (3.0 * a1 + a3),
    },
    PrintedFormula {
        family: "A3 (a1 0 a3)",
        group: Diagram::A3,
        support: [true, false, true],
        symmetric: false,
        reference: 1,
        weight: 2,
        symbol: "η",
        eval: |[a1, _, a3]| (2.0 * a1 + 2.0 * a3) / (a1 + 3.0 * a3),
    },
    PrintedFormula {
        family: "A3 (a1 a2 a3)",
        group: Diagram::A3,
        support: ALL,
        symmetric: false,
        reference: 2,
        weight: 0,
        symbol: "λ",
        eval: |[a1, a2, a3]| (a1 + 2.0 * a2 + 3.0 * a3) / (3.0 * a1 + 2.0 * a2 + a3),
    },
    PrintedFormula {
        family: "A3 (a1 a2 a3)",
        group: Diagram::A3,
        support: ALL,
        symmetric: false,
        reference: 2,
        weight: 1,
        symbol: "η",
        eval: |[a1, a2, a3]| (a1 + 2.0 * a2 + 3.0 * a3) / (2.0 * a1 + 4.0 * a2 + 2.0 * a3),
    },
    PrintedFormula {
        family: "A3 (a1 a2 a1)",
        group: Diagram::A3,
        support: ALL,
        symmetric: true,
        reference: 2,
        weight: 1,
        symbol: "λ",
        eval: |[a1, a2, _]| (2.0 * a1 + a2) / (2.0 * (a1 + a2)),
    },
    PrintedFormula {
        family: "B3 (a1 a2 0)",
        group: Diagram::B3,
        support: [true, true, false],
        symmetric: false,
        reference: 2,
        weight: 0,
        symbol: "λ",
        eval: |[a1, a2, _]| (a1 + 2.0 * a2) / (SQRT2 * (a1 + a2)),
    },
    PrintedFormula {
        family: "B3 (a1 0 a3)",
        group: Diagram::B3,
        support: [true, false, true],
        symmetric: false,
        reference: 1,
        weight: 0,
        symbol: "λ",
        eval: |[a1, _, a3]| (SQRT2 * a1 + 2.0 * a3) / (SQRT2 * a1 + a3),
    },
    PrintedFormula {
        family: "B3 (a1 0 a3)",
        group: Diagram::B3,
        support: [true, false, true],
        symmetric: false,
        reference: 1,
        weight: 2,
        symbol: "η",
        eval: |[a1, _, a3]| (2.0 * a1 + 2.0 * SQRT2 * a3) / (SQRT2 * a1 + 3.0 * a3),
    },
    PrintedFormula {
        family: "B3 (0 a2 a3)",
        group: Diagram::B3,
        support: [false, true, true],
        symmetric: false,
        reference: 0,
        weight: 2,
        symbol: "λ",
        eval: |[_, a2, a3]| (2.0 * a2 + SQRT2 * a3) / (2.0 * SQRT2 * a2 + 3.0 * a3),
    },
    PrintedFormula {
        family: "B3 (a1 a2 a3)",
        group: Diagram::B3,
        support: ALL,
        symmetric: false,
        reference: 2,
        weight: 0,
        symbol: "λ",
        eval: |[a1, a2, a3]| (SQRT2 * a1 + 2.0 * SQRT2 * a2 + 3.0 * a3) / (2.0 * a1 + 2.0 * a2 + SQRT2 * a3),
    },
    PrintedFormula {
        family: "B3 (a1 a2 a3)",
        group: Diagram::B3,
        support: ALL,
        symmetric: false,
        reference: 2,
        weight: 1,
        symbol: "η",
        eval: |[a1, a2, a3]| (SQRT2 * a1 + 2.0 * SQRT2 * a2 + 3.0 * a3) / (2.0 * a1 + 4.0 * a2 + 2.0 * SQRT2 * a3),
    },
    PrintedFormula {
        family: "H3 (a1 a2 0)",
        group: Diagram::H3,
        support: [true, true, false],
        symmetric: false,
        reference: 2,
        weight: 0,
        symbol: "λ",
        eval: |[a1, a2, _]| (TAU * a1 + 2.0 * a2) / (3.0 * a1 + 2.0 * TAU * a2),
    },
    PrintedFormula {
        family: "H3 (a1 0 a3)",
        group: Diagram::H3,
        support: [true, false, true],
        symmetric: false,
        reference: 1,
        weight: 0,
        symbol: "λ",
        eval: |[a1, _, a3]| (2.0 * TAU * a1 + 2.0 * a3) / (3.0 * a1 + TAU * a3),
    },
    PrintedFormula {
        family: "H3 (a1 0 a3)",
        group: Diagram::H3,
        support: [true, false, true],
        symmetric: false,
        reference: 1,
        weight: 2,
        symbol: "η",
        eval: |[a1, _, a3]| (2.0 * TAU * a1 + 2.0 * a3) / (TAU * a1 + (SIGMA + 2.0) * a3),
    },
    PrintedFormula {
        family: "H3 (0 a2 a3)",
        group: Diagram::H3,
        support: [false, true, true],
        symmetric: false,
        reference: 0,
        weight: 2,
        symbol: "λ",
        eval: |[_, a2, a3]| TAU * (2.0 * a2 + a3) / (2.0 * a2 + (SIGMA + 2.0) * a3),
    },
    PrintedFormula {
        family: "H3 (a1 a2 a3)",
        group: Diagram::H3,
        support: ALL,
        symmetric: false,
        reference: 2,
        weight: 0,
        symbol: "λ",
        eval: |[a1, a2, a3]| (TAU * a1 + 2.0 * a2 + (2.0 + SIGMA) * a3) / (3.0 * a1 + 2.0 * TAU * a2 + TAU * a3),
    },
    PrintedFormula {
        family: "H3 (a1 a2 a3)",
        group: Diagram::H3,
        support: ALL,
        symmetric: false,
        reference: 2,
        weight: 1,
        symbol: "η",
        eval: |[a1, a2, a3]| (TAU * a1 + 2.0 * a2 + (2.0 + SIGMA) * a3) / (2.0 * TAU * a1 + 4.0 * a2 + 2.0 * a3),
    },
];

impl PrintedFormula {
    pub fn applies_to(&self, w: &WeightIndices) -> bool {
        self.group == w.group
            && w.support() == self.support
            && (!self.symmetric || (w.a[0] - w.a[2]).abs() <= 1e-12 * w.a[0].max(w.a[2]))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FormulaComparison {
    pub family: String,
    pub symbol: String,
    /// 0-based weight the factor multiplies.
    pub weight: usize,
    pub reference: usize,
    pub printed: f64,
    pub solved: f64,
    pub difference: f64,
}

/// Evaluates every published closed form covering `w` next to the solver,
/// both normalised to the weight the closed form fixes to 1.
pub fn closed_form_scale_validation(system: &CoxeterSystem, w: &WeightIndices) -> Result<Vec<FormulaComparison>> {
    let mut out = Vec::new();
    for f in PRINTED_FORMULAS.iter().filter(|f| f.applies_to(w)) {
        let contributing: Vec<usize> = (0..3).filter(|&k| k == f.reference || k == f.weight).collect();
        let spec = solve_scale_factors(system, w, &contributing, ScaleReference::Fixed(f.reference))?;
        let solved = spec.scale_factors[f.weight].expect("solved weight");
        let printed = (f.eval)(w.a);
        out.push(FormulaComparison {
            family: f.family.to_string(),
            symbol: f.symbol.to_string(),
            weight: f.weight,
            reference: f.reference,
            printed,
            solved,
            difference: (printed - solved).abs(),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedron::build_polyhedron;

    fn dual_of(d: Diagram, a: [f64; 3], sigma: bool) -> (OrbitPolyhedron, DualSolid) {
        let g = ReflectionGroup::new(d).unwrap();
        let w = WeightIndices::with_sigma(d, a, sigma).unwrap();
        let p = build_polyhedron(&g, &w).unwrap();
        let spec = spec_for(&p, &g.system, ScaleReference::Conventional).unwrap();
        let dual = build_dual(&p, &spec, &g).unwrap();
        (p, dual)
    }

    #[test]
    fn a3_120_dual() {
        let (p, d) = dual_of(Diagram::A3, [1.0, 2.0, 0.0], false);
        assert_eq!(d.spec.contributing, vec![0, 2]);
        assert!((d.spec.scale_factors[0].unwrap() - 5.0 / 7.0).abs() < 1e-12);
        let radii = d.sphere_radii();
        assert!((radii[0].radius - 5.0 * 3f64.sqrt() / 14.0).abs() < 1e-12);
        assert!((radii[1].radius - 3f64.sqrt() / 2.0).abs() < 1e-12);
        assert_eq!(d.mesh.vertices.len(), 8);
        assert_eq!(d.mesh.edges.len(), p.mesh.edges.len());
        assert_eq!(d.face_shape(), Some(FaceShape::IsoscelesTriangle));
        assert_eq!(d.spec.expected_face, Some(FaceShape::IsoscelesTriangle));
    }

    #[test]
    fn kite_dual_of_a3_102() {
        let (_, d) = dual_of(Diagram::A3, [1.0, 0.0, 2.0], false);
        let c = d.mesh.census();
        assert_eq!((c.vertices, c.edges, c.faces), (14, 24, 12));
        assert_eq!(d.face_shape(), Some(FaceShape::Kite));
        assert!(d.measurements.coplanarity < 1e-8);
        let s = d.spec.scale_factors;
        assert!((s[0].unwrap() - 1.2).abs() < 1e-12 && (s[2].unwrap() - 6.0 / 7.0).abs() < 1e-12);
    }

    #[test]
    fn b3_123_dual_is_face_transitive() {
        let g = ReflectionGroup::new(Diagram::B3).unwrap();
        let (_, d) = dual_of(Diagram::B3, [1.0, 2.0, 3.0], false);
        let c = d.mesh.census();
        assert_eq!((c.vertices, c.faces), (26, 48));
        assert_eq!(d.face_shape(), Some(FaceShape::ScaleneTriangle));
        let t = face_transitivity_check(&d.mesh, &g);
        assert!(t.transitive && t.witnesses.iter().all(Option::is_some));
        assert!(d.measurements.orthogonality < 1e-9);
        assert!(d.measurements.same_class_orthogonality < 1e-10);
        assert!(scaled_orbit_distance(&d, &g) < 1e-9);
    }

    #[test]
    fn perturbed_dual_is_not_transitive() {
        let g = ReflectionGroup::new(Diagram::A3).unwrap();
        let (_, mut d) = dual_of(Diagram::A3, [1.0, 1.0, 1.0], false);
        d.mesh.vertices[3].q1 += 10.0 * epsilon();
        let t = face_transitivity_check(&d.mesh, &g);
        assert!(!t.transitive);
        assert!(t.failing.is_some());
    }

    #[test]
    fn printed_formulas_cover_every_family() {
        let cases = [
            (Diagram::A3, [1.0, 2.0, 0.0], 1),
            (Diagram::A3, [1.0, 0.0, 2.0], 2),
            (Diagram::A3, [1.0, 2.0, 3.0], 2),
            (Diagram::A3, [1.0, 2.0, 1.0], 3),
            (Diagram::B3, [2.0, 1.0, 0.0], 1),
            (Diagram::B3, [1.0, 0.0, 2.0], 2),
            (Diagram::B3, [0.0, 1.0, 2.0], 1),
            (Diagram::B3, [1.0, 2.0, 3.0], 2),
            (Diagram::H3, [1.0, 2.0, 0.0], 1),
            (Diagram::H3, [1.0, 0.0, 2.0], 2),
            (Diagram::H3, [0.0, 1.0, 2.0], 1),
            (Diagram::H3, [1.0, 2.0, 3.0], 2),
        ];
        for (d, a, n) in cases {
            let g = ReflectionGroup::new(d).unwrap();
            let w = WeightIndices::with_sigma(d, a, d == Diagram::H3).unwrap();
            let rows = closed_form_scale_validation(&g.system, &w).unwrap();
            assert_eq!(rows.len(), n, "{d} {a:?}");
            for r in rows {
                assert!(r.difference < 1e-12, "{r:?}");
            }
        }
    }

    #[test]
    fn fixed_reference_must_contribute() {
        let g = ReflectionGroup::new(Diagram::B3).unwrap();
        let w = WeightIndices::new(Diagram::B3, [2.0, 1.0, 0.0]).unwrap();
        assert!(matches!(
            solve_scale_factors(&g.system, &w, &[0, 2], ScaleReference::Fixed(1)),
            Err(Error::InvalidIndices(_))
        ));
        let spec = solve_scale_factors(&g.system, &w, &[0, 2], ScaleReference::LargestProjection).unwrap();
        // Λ = (3, 1, 0): ω1·Λ = 3 beats ω3·Λ = 4/√2
        assert_eq!(spec.reference, 0);
        assert!(spec.scale_factors[2].unwrap() > 1.0);
    }
}
