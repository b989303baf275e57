//! Convex polyhedra assembled from orbits.
//!
//! Edges are the images of `{Λ, r_iΛ}`; faces are the images of the orbit of
//! `Λ` under each dihedral subgroup `⟨r_i, r_j⟩`, centred on the direction of
//! the remaining weight `ω_k`.

pub mod face;
pub mod hull;

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::coxeter::ReflectionGroup;
use crate::error::{Error, Result};
use crate::orbit::{self, indices_to_vector, Orbit, WeightIndices};
use crate::par::{self, Execution};
use crate::quaternion::Quaternion;
use crate::tolerance::{epsilon, TolerantIndex};

pub use face::{classify_face, FaceKind, FaceShape};
pub use hull::hull_oracle;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    /// Generator `r_i` (0-based) whose mirror the edge crosses, if known.
    pub class: Option<usize>,
    pub length: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Face {
    /// Vertex indices, counter-clockwise seen from outside.
    pub cycle: Vec<usize>,
    pub kind: FaceKind,
    /// Weight (0-based) along which the face centre lies, if known.
    pub center_weight: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Polyhedron {
    pub vertices: Vec<Quaternion>,
    pub edges: Vec<Edge>,
    pub faces: Vec<Face>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Census {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler_characteristic: i64,
    pub euler_ok: bool,
    pub face_kinds: BTreeMap<String, usize>,
    pub edge_classes: BTreeMap<String, usize>,
    /// Distinct vertex distances from the origin, ascending.
    pub sphere_radii: Vec<f64>,
}

pub(crate) fn sorted_set(cycle: &[usize]) -> Vec<usize> {
    let mut s = cycle.to_vec();
    s.sort_unstable();
    s
}

/// Orders points counter-clockwise about the outward direction of their
/// centroid (the origin is inside every solid built here).
pub(crate) fn order_about_centroid(points: &[Quaternion], ids: &[usize]) -> Vec<usize> {
    let pts: Vec<Quaternion> = ids.iter().map(|&i| points[i]).collect();
    let c = face::centroid(&pts);
    let n = c.normalized();
    order_about_axis(&pts, ids, c, n)
}

pub(crate) fn order_about_axis(pts: &[Quaternion], ids: &[usize], center: Quaternion, axis: Quaternion) -> Vec<usize> {
    let u = (pts[0] - center - axis.scale((pts[0] - center).dot(axis))).normalized();
    let w = axis.cross(u);
    let mut keyed: Vec<(f64, usize)> = pts
        .iter()
        .zip(ids)
        .map(|(p, &i)| {
            let d = *p - center;
            (d.dot(w).atan2(d.dot(u)), i)
        })
        .collect();
    keyed.sort_by(|a, b| a.0.total_cmp(&b.0));
    keyed.into_iter().map(|(_, i)| i).collect()
}

impl Polyhedron {
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    /// Faces as sorted vertex-index sets, sorted.
    pub fn face_sets(&self) -> Vec<Vec<usize>> {
        let mut sets: Vec<Vec<usize>> = self.faces.iter().map(|f| sorted_set(&f.cycle)).collect();
        sets.sort();
        sets
    }

    /// Copy with every coordinate and length multiplied by `s`.
    pub fn scaled(&self, s: f64) -> Polyhedron {
        let mut out = self.clone();
        for v in &mut out.vertices {
            *v = v.scale(s);
        }
        for e in &mut out.edges {
            e.length *= s;
        }
        for f in &mut out.faces {
            for l in &mut f.kind.edge_lengths {
                *l *= s;
            }
        }
        out
    }

    pub fn circumradius(&self) -> f64 {
        self.vertices.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Sorted vertex-index set of each face, in face order.
    pub fn face_sets_in_order(&self) -> Vec<Vec<usize>> {
        self.faces.iter().map(|f| sorted_set(&f.cycle)).collect()
    }

    /// True if every edge borders exactly two faces and every face side is an edge.
    pub fn is_closed_manifold(&self) -> bool {
        let mut count: HashMap<(usize, usize), usize> = HashMap::new();
        for f in &self.faces {
            let m = f.cycle.len();
            for i in 0..m {
                let (a, b) = (f.cycle[i], f.cycle[(i + 1) % m]);
                *count.entry((a.min(b), a.max(b))).or_default() += 1;
            }
        }
        count.len() == self.edges.len()
            && self
                .edges
                .iter()
                .all(|e| count.get(&(e.a.min(e.b), e.a.max(e.b))) == Some(&2))
    }

    pub fn census(&self) -> Census {
        let mut face_kinds = BTreeMap::new();
        for f in &self.faces {
            *face_kinds.entry(f.kind.shape.name()).or_insert(0) += 1;
        }
        let mut edge_classes = BTreeMap::new();
        for e in &self.edges {
            let key = match e.class {
                Some(i) => format!("r{}", i + 1),
                None => "unlabeled".to_string(),
            };
            *edge_classes.entry(key).or_insert(0) += 1;
        }
        let mut radii: Vec<f64> = self.vertices.iter().map(|v| v.norm()).collect();
        radii.sort_by(f64::total_cmp);
        let mut sphere_radii: Vec<f64> = Vec::new();
        for r in radii {
            if sphere_radii.last().is_none_or(|l| (r - l).abs() > 1e-9 * r.max(1.0)) {
                sphere_radii.push(r);
            }
        }
        let chi = self.euler_characteristic();
        Census {
            vertices: self.vertices.len(),
            edges: self.edges.len(),
            faces: self.faces.len(),
            euler_characteristic: chi,
            euler_ok: chi == 2,
            face_kinds,
            edge_classes,
            sphere_radii,
        }
    }

    /// Builds a polyhedron from its hull alone; edges are the face sides.
    pub fn from_hull(vertices: Vec<Quaternion>) -> Result<Self> {
        let cycles = hull_oracle(&vertices)?;
        Self::from_cycles(vertices, cycles, |_| None)
    }

    pub(crate) fn from_cycles(
        vertices: Vec<Quaternion>,
        cycles: Vec<Vec<usize>>,
        center_weight: impl Fn(usize) -> Option<usize>,
    ) -> Result<Self> {
        let mut faces = Vec::with_capacity(cycles.len());
        let mut seen = HashSet::new();
        let mut edges = Vec::new();
        for (k, cycle) in cycles.into_iter().enumerate() {
            let pts: Vec<Quaternion> = cycle.iter().map(|&i| vertices[i]).collect();
            let kind = classify_face(&pts)?;
            let m = cycle.len();
            for i in 0..m {
                let (a, b) = (cycle[i], cycle[(i + 1) % m]);
                if seen.insert((a.min(b), a.max(b))) {
                    edges.push(Edge {
                        a: a.min(b),
                        b: a.max(b),
                        class: None,
                        length: vertices[a].distance(vertices[b]),
                    });
                }
            }
            faces.push(Face {
                cycle,
                kind,
                center_weight: center_weight(k),
            });
        }
        edges.sort_by_key(|e| (e.a, e.b));
        Ok(Self { vertices, edges, faces })
    }
}

/// One face class: the faces obtained from the dihedral subgroup `⟨r_i, r_j⟩`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FaceClass {
    pub generators: [usize; 2],
    /// The weight fixed by both generators.
    pub weight: usize,
    /// Vertex indices of the seed polygon through `Λ`, cyclically ordered.
    pub seed: Vec<usize>,
    pub count: usize,
}

/// A polyhedron built from a weight orbit, with its provenance.
#[derive(Debug, Clone)]
pub struct OrbitPolyhedron {
    pub indices: WeightIndices,
    pub orbit: Orbit,
    pub stabilizer_order: usize,
    pub classes: Vec<FaceClass>,
    pub mesh: Polyhedron,
}

/// Edges `{gΛ, g r_iΛ}` for every `i` with `r_iΛ ≠ Λ`.
pub fn build_edges(orbit: &Orbit, group: &ReflectionGroup, exec: Execution) -> Result<Vec<Edge>> {
    if orbit.size() < 3 {
        return Err(Error::DegenerateOrbit(orbit.size()));
    }
    let lambda = orbit.seed;
    let tol = epsilon() * lambda.norm().max(1.0);
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    for (i, r) in group.generators().iter().enumerate() {
        let other = r.act(lambda);
        if other.distance(lambda) <= tol {
            continue;
        }
        let images = par::map(exec, group.elements(), |g| {
            let a = orbit.find(g.act(lambda));
            let b = orbit.find(g.act(other));
            a.zip(b)
        });
        for (a, b) in images.into_iter().flatten() {
            let key = (a.min(b), a.max(b));
            if seen.insert(key) {
                edges.push(Edge {
                    a: key.0,
                    b: key.1,
                    class: Some(i),
                    length: orbit.vertices[a].distance(orbit.vertices[b]),
                });
            }
        }
    }
    edges.sort_by_key(|e| (e.a, e.b));
    Ok(edges)
}

/// Rank of a point set about its centroid: 0 point, 1 segment, 2 polygon.
fn affine_rank(points: &[Quaternion], tol: f64) -> usize {
    if points.len() < 2 {
        return 0;
    }
    if points.len() == 2 {
        return 1;
    }
    let c = face::centroid(points);
    let span = points.iter().map(|p| p.distance(c)).fold(0.0, f64::max);
    let d0 = points
        .iter()
        .map(|p| *p - c)
        .max_by(|a, b| a.norm().total_cmp(&b.norm()))
        .unwrap();
    let off_line = points
        .iter()
        .map(|p| (*p - c).cross(d0).norm() / d0.norm())
        .fold(0.0, f64::max);
    if span <= tol {
        0
    } else if off_line <= tol {
        1
    } else {
        2
    }
}

/// A face cycle and the 0-based weight its centre lies on.
pub type ClassedCycle = (Vec<usize>, usize);

/// Faces with their classes. Faces are sorted by vertex set.
pub fn build_faces(
    orbit: &Orbit,
    group: &ReflectionGroup,
    exec: Execution,
) -> Result<(Vec<ClassedCycle>, Vec<FaceClass>)> {
    if orbit.size() < 3 {
        return Err(Error::DegenerateOrbit(orbit.size()));
    }
    let lambda = orbit.seed;
    let tol = epsilon() * lambda.norm().max(1.0);
    let mut faces: Vec<(Vec<usize>, usize)> = Vec::new();
    let mut classes = Vec::new();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    for (i, j, k) in [(0, 1, 2), (1, 2, 0), (0, 2, 1)] {
        let dihedral = group.generated_by(&[i, j]);
        let local = orbit::orbit_under(&dihedral, lambda, Execution::Sequential);
        if affine_rank(&local.vertices, tol) < 2 {
            continue;
        }
        let seed_ids: Vec<usize> = local
            .vertices
            .iter()
            .map(|v| orbit.find(*v).expect("dihedral images lie in the orbit"))
            .collect();
        let images = par::map(exec, group.elements(), |g| {
            let ids: Option<Vec<usize>> = seed_ids.iter().map(|&s| orbit.find(g.act(orbit.vertices[s]))).collect();
            ids.map(|v| sorted_set(&v))
        });
        let mut count = 0;
        for set in images.into_iter().flatten() {
            if seen.insert(set.clone()) {
                faces.push((set, k));
                count += 1;
            }
        }
        classes.push(FaceClass {
            generators: [i, j],
            weight: k,
            seed: order_about_centroid(&orbit.vertices, &seed_ids),
            count,
        });
    }
    faces.sort();
    let faces = faces
        .into_iter()
        .map(|(set, k)| (order_about_centroid(&orbit.vertices, &set), k))
        .collect();
    Ok((faces, classes))
}

/// Full pipeline: orbit, edges, faces, classification.
pub fn build_polyhedron(group: &ReflectionGroup, indices: &WeightIndices) -> Result<OrbitPolyhedron> {
    build_polyhedron_with(group, indices, Execution::default())
}

pub fn build_polyhedron_with(
    group: &ReflectionGroup,
    indices: &WeightIndices,
    exec: Execution,
) -> Result<OrbitPolyhedron> {
    if indices.group != group.diagram() {
        return Err(Error::InvalidIndices(format!(
            "indices are for {} but the group is {}",
            indices.group,
            group.diagram()
        )));
    }
    let lambda = indices_to_vector(&group.system, indices);
    let orbit = orbit::orbit_with(group, lambda, exec);
    let stabilizer_order = group.stabilizer(lambda).len();
    let edges = build_edges(&orbit, group, exec)?;
    let (faces, classes) = build_faces(&orbit, group, exec)?;
    let kinds: Vec<Result<FaceKind>> = par::map(exec, &faces, |(cycle, _)| {
        let pts: Vec<Quaternion> = cycle.iter().map(|&i| orbit.vertices[i]).collect();
        classify_face(&pts)
    });
    let mut mesh_faces = Vec::with_capacity(faces.len());
    for ((cycle, k), kind) in faces.into_iter().zip(kinds) {
        mesh_faces.push(Face {
            cycle,
            kind: kind?,
            center_weight: Some(k),
        });
    }
    let mesh = Polyhedron {
        vertices: orbit.vertices.clone(),
        edges,
        faces: mesh_faces,
    };
    Ok(OrbitPolyhedron {
        indices: *indices,
        orbit,
        stabilizer_order,
        classes,
        mesh,
    })
}

impl OrbitPolyhedron {
    pub fn census(&self) -> Census {
        self.mesh.census()
    }

    /// Face indices incident to each vertex.
    pub fn vertex_faces(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.mesh.vertices.len()];
        for (fi, f) in self.mesh.faces.iter().enumerate() {
            for &v in &f.cycle {
                inc[v].push(fi);
            }
        }
        inc
    }

    /// Setwise stabiliser order of each face class's seed polygon.
    pub fn face_stabilizer_orders(&self, group: &ReflectionGroup) -> Vec<usize> {
        let verts = &self.orbit.vertices;
        let tol = epsilon() * self.orbit.radius().max(1.0);
        self.classes
            .iter()
            .map(|c| {
                let mut idx = TolerantIndex::<3>::new(tol);
                for &s in &c.seed {
                    idx.insert(verts[s].xyz());
                }
                group
                    .elements()
                    .iter()
                    .filter(|g| c.seed.iter().all(|&s| idx.find(&g.act(verts[s]).xyz()).is_some()))
                    .count()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::Diagram;

    fn build(d: Diagram, a: [f64; 3]) -> OrbitPolyhedron {
        let g = ReflectionGroup::new(d).unwrap();
        build_polyhedron(&g, &WeightIndices::new(d, a).unwrap()).unwrap()
    }

    fn kinds(p: &OrbitPolyhedron) -> BTreeMap<String, usize> {
        p.census().face_kinds
    }

    #[test]
    fn a3_truncated_tetrahedron_family() {
        let p = build(Diagram::A3, [1.0, 2.0, 0.0]);
        let c = p.census();
        assert_eq!((c.vertices, c.edges, c.faces), (12, 18, 8));
        assert_eq!(kinds(&p)["isogonal-hexagon"], 4);
        assert_eq!(kinds(&p)["equilateral-triangle"], 4);
        assert_eq!(c.edge_classes["r1"], 6);
        assert_eq!(c.edge_classes["r2"], 12);
        assert!(p.mesh.is_closed_manifold());
        assert_eq!(p.stabilizer_order, 2);
    }

    #[test]
    fn isogonal_hexagon_of_a3_120() {
        let p = build(Diagram::A3, [1.0, 2.0, 0.0]);
        let hex = p
            .mesh
            .faces
            .iter()
            .find(|f| f.kind.shape == FaceShape::Isogonal(6))
            .unwrap();
        let l = &hex.kind.edge_lengths;
        assert!((l[0] - 2f64.sqrt()).abs() < 1e-12 && (l[1] - 2.0 * 2f64.sqrt()).abs() < 1e-12);
        assert!(hex.kind.interior_angles.iter().all(|a| (a - 120.0).abs() < 1e-9));
        assert_eq!(hex.center_weight, Some(2));
    }

    #[test]
    fn b3_generic_census() {
        let p = build(Diagram::B3, [1.0, 2.0, 3.0]);
        let c = p.census();
        assert_eq!((c.vertices, c.edges, c.faces), (48, 72, 26));
        let k = kinds(&p);
        assert_eq!(
            (k["isogonal-hexagon"], k["rectangle"], k["isogonal-octagon"]),
            (8, 12, 6)
        );
        assert_eq!(
            p.face_stabilizer_orders(&ReflectionGroup::new(Diagram::B3).unwrap()),
            vec![6, 8, 4]
        );
    }

    #[test]
    fn faces_agree_with_hull() {
        for (d, a) in [
            (Diagram::A3, [1.0, 0.0, 0.0]),
            (Diagram::B3, [2.0, 1.0, 0.0]),
            (Diagram::H3, [1.0, 2.0, 3.0]),
        ] {
            let p = build(d, a);
            let mut hull: Vec<Vec<usize>> = hull_oracle(&p.mesh.vertices)
                .unwrap()
                .iter()
                .map(|c| sorted_set(c))
                .collect();
            hull.sort();
            assert_eq!(hull, p.mesh.face_sets(), "{d} {a:?}");
        }
    }

    #[test]
    fn outward_winding() {
        let p = build(Diagram::H3, [0.0, 1.0, 2.0]);
        for f in &p.mesh.faces {
            let pts: Vec<_> = f.cycle.iter().map(|&i| p.mesh.vertices[i]).collect();
            assert!(face::newell_normal(&pts).dot(face::centroid(&pts)) > 0.0);
        }
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let g = ReflectionGroup::new(Diagram::H3).unwrap();
        let w = WeightIndices::sigma([1.0, 2.0, 3.0]).unwrap();
        let a = build_polyhedron_with(&g, &w, Execution::Sequential).unwrap();
        let b = build_polyhedron_with(&g, &w, Execution::Parallel).unwrap();
        assert_eq!(a.mesh, b.mesh);
    }

    #[test]
    fn chiral_hull_polyhedron() {
        let g = ReflectionGroup::new(Diagram::A3).unwrap();
        let w = WeightIndices::new(Diagram::A3, [crate::coxeter::TAU, 1.0, crate::coxeter::TAU]).unwrap();
        let pair = orbit::chiral_orbit_pair(&g, &w).unwrap();
        let ico = Polyhedron::from_hull(pair.first.vertices.clone()).unwrap();
        let c = ico.census();
        assert_eq!((c.vertices, c.edges, c.faces), (12, 30, 20));
        assert_eq!(c.face_kinds["equilateral-triangle"], 20);
    }
}
