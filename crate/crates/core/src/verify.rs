//! The invariant suite behind `qpoly verify` and the checks section of reports.

use serde::{Deserialize, Serialize};

use crate::catalog::{CatalogEntry, Construction, Expected};
use crate::coxeter::{Diagram, ReflectionGroup, Subgroup, SQRT2};
use crate::dual::{self, DualSolid, FormulaComparison, ScaleReference, Transitivity};
use crate::error::Result;
use crate::orbit::{self, Orbit, WeightIndices};
use crate::par::Execution;
use crate::polyhedron::{self, face, hull_oracle, sorted_set, OrbitPolyhedron, Polyhedron};
use crate::quaternion::Quaternion;
use crate::report::Real;
use crate::tolerance::{epsilon, TolerantIndex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A published value disagrees with the computation; never a failure.
    Flagged,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
    pub measured: Option<Real>,
    pub limit: Option<Real>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Conflict {
    pub id: String,
    pub description: String,
    pub published: Real,
    pub computed: Real,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Suite {
    pub checks: Vec<Check>,
    pub conflicts: Vec<Conflict>,
}

impl Suite {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn extend(&mut self, other: Suite) {
        self.checks.extend(other.checks);
        self.conflicts.extend(other.conflicts);
    }

    /// Prefixes every check and conflict name with `prefix/`.
    pub fn prefixed(mut self, prefix: &str) -> Suite {
        for c in &mut self.checks {
            c.name = format!("{prefix}/{}", c.name);
        }
        for c in &mut self.conflicts {
            c.id = format!("{prefix}/{}", c.id);
        }
        self
    }

    fn truth(&mut self, name: &str, ok: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
            measured: None,
            limit: None,
        });
    }

    fn within(&mut self, name: &str, measured: f64, limit: f64, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            status: if measured <= limit { Status::Pass } else { Status::Fail },
            detail: detail.into(),
            measured: Some(Real(measured)),
            limit: Some(Real(limit)),
        });
    }

    fn flag(&mut self, name: &str, detail: impl Into<String>, published: f64, computed: f64) {
        let detail = detail.into();
        self.checks.push(Check {
            name: name.to_string(),
            status: Status::Flagged,
            detail: detail.clone(),
            measured: Some(Real(computed)),
            limit: None,
        });
        self.conflicts.push(Conflict {
            id: name.to_string(),
            description: detail,
            published: Real(published),
            computed: Real(computed),
        });
    }
}

fn max_matrix_diff(a: &[[f64; 3]; 3], b: &[[f64; 3]; 3]) -> f64 {
    (0..3)
        .flat_map(|i| (0..3).map(move |j| (i, j)))
        .map(|(i, j)| (a[i][j] - b[i][j]).abs())
        .fold(0.0, f64::max)
}

/// Group orders, Coxeter relations, Cartan and weight matrices, subgroups.
pub fn group_suite(group: &ReflectionGroup) -> Suite {
    let mut s = Suite::default();
    let d = group.diagram();
    let sys = &group.system;
    s.truth(
        "group-order",
        group.order() == d.group_order(),
        format!("|W({d})| = {} (expected {})", group.order(), d.group_order()),
    );
    let (plain, star) = group.star_split();
    s.truth(
        "star-split",
        plain == star && plain * 2 == group.order(),
        format!("{plain} + {star}"),
    );
    let [m12, m23, m13] = d.coxeter_orders();
    let got = [
        group.generator_pair_order(0, 1),
        group.generator_pair_order(1, 2),
        group.generator_pair_order(0, 2),
    ];
    s.truth(
        "coxeter-relations",
        got == [Some(m12), Some(m23), Some(m13)],
        format!("orders of r1r2, r2r3, r1r3: {got:?}, expected ({m12}, {m23}, {m13})"),
    );
    s.within(
        "cartan-matrix",
        max_matrix_diff(&sys.measured_cartan(), &d.cartan()),
        1e-12,
        "(αi, αj) against the Cartan matrix",
    );
    let id = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
    s.within(
        "root-weight-duality",
        max_matrix_diff(&sys.measured_duality(), &id),
        1e-12,
        "(αi, ωj) = δij",
    );
    s.within(
        "weight-gram",
        max_matrix_diff(&sys.measured_weight_gram(), &d.cartan_inverse()),
        1e-12,
        "(ωi, ωj) against the inverse Cartan matrix",
    );
    s.within(
        "cartan-inverse",
        max_matrix_diff(&crate::coxeter::invert3(&d.cartan()), &d.cartan_inverse()),
        1e-12,
        "closed-form inverse against the cofactor inverse",
    );
    s.truth(
        "closure",
        group.is_closed_set(group.elements()),
        "all pairwise products present",
    );
    let g = &sys.golden;
    let golden = (g.tau + g.sigma - 1.0)
        .abs()
        .max((g.tau * g.sigma + 1.0).abs())
        .max((g.tau * g.tau - g.tau - 1.0).abs());
    s.within("golden-identities", golden, 1e-12, "τ + σ = 1, τσ = −1, τ² = τ + 1");
    if let Ok(chiral) = group.named_subgroup(Subgroup::Chiral) {
        s.truth(
            "chiral-subgroup",
            chiral.len() * 2 == group.order() && group.is_closed_set(&chiral),
            format!("{} rotations", chiral.len()),
        );
    }
    if d != Diagram::A3 {
        if let Ok(pyrito) = group.named_subgroup(Subgroup::Pyritohedral) {
            s.truth(
                "pyritohedral-subgroup",
                pyrito.len() == 24 && group.is_closed_set(&pyrito),
                format!("{} elements", pyrito.len()),
            );
        }
    }
    s
}

/// Largest deviation of any face from a circle centred on a weight direction.
fn face_circle_deviation(poly: &OrbitPolyhedron, group: &ReflectionGroup) -> f64 {
    let weights = &group.system.weights;
    let dirs: Vec<Orbit> = (0..3).map(|k| orbit::orbit(group, weights[k].normalized())).collect();
    let mut worst: f64 = 0.0;
    for f in &poly.mesh.faces {
        let pts: Vec<Quaternion> = f.cycle.iter().map(|&i| poly.mesh.vertices[i]).collect();
        let c = face::centroid(&pts);
        let r = pts[0].distance(c);
        for p in &pts {
            worst = worst.max((p.distance(c) - r).abs() / r);
        }
        let k = f.center_weight.unwrap_or(0);
        let near = dirs[k]
            .vertices
            .iter()
            .map(|d| d.distance(c.normalized()))
            .fold(f64::INFINITY, f64::min);
        worst = worst.max(near);
    }
    worst
}

fn vertex_transitivity(poly: &OrbitPolyhedron, group: &ReflectionGroup) -> bool {
    let o = &poly.orbit;
    let el = group.elements();
    let tol = epsilon() * o.radius().max(1.0);
    (0..o.size()).all(|i| {
        let back = el[o.transversal[i]].inverse();
        (0..o.size()).all(|j| {
            let g = el[o.transversal[j]].compose(&back);
            g.act(o.vertices[i]).approx_eq(o.vertices[j], tol)
        })
    })
}

fn census_suite(s: &mut Suite, mesh: &Polyhedron, expected: &Expected) {
    let c = mesh.census();
    s.truth(
        "census-counts",
        (c.vertices, c.edges, c.faces) == (expected.vertices, expected.edges, expected.faces),
        format!(
            "V/E/F = {}/{}/{} (expected {}/{}/{})",
            c.vertices, c.edges, c.faces, expected.vertices, expected.edges, expected.faces
        ),
    );
    let want: std::collections::BTreeMap<String, usize> =
        expected.face_kinds.iter().map(|(k, n)| (k.to_string(), *n)).collect();
    s.truth(
        "face-inventory",
        c.face_kinds == want,
        format!("{:?} (expected {:?})", c.face_kinds, want),
    );
}

/// Orbit, Euler, hull oracle, face and edge laws for a built polyhedron.
pub fn polyhedron_suite(poly: &OrbitPolyhedron, group: &ReflectionGroup, expected: Option<&Expected>) -> Suite {
    let mut s = Suite::default();
    let o = &poly.orbit;
    s.truth(
        "orbit-size-law",
        o.size() * poly.stabilizer_order == group.order(),
        format!("{} × {} = {}", o.size(), poly.stabilizer_order, group.order()),
    );
    s.within("single-sphere", o.sphere_spread(), 1e-9, "max/min vertex norm − 1");
    let mesh = &poly.mesh;
    let chi = mesh.euler_characteristic();
    s.truth("euler", chi == 2, format!("V − E + F = {chi}"));
    s.truth(
        "edge-face-incidence",
        mesh.is_closed_manifold(),
        "every edge borders exactly two faces",
    );
    match hull_oracle(&mesh.vertices) {
        Ok(h) => {
            let mut hull: Vec<Vec<usize>> = h.iter().map(|c| sorted_set(c)).collect();
            hull.sort();
            s.truth(
                "hull-oracle",
                hull == mesh.face_sets(),
                format!("{} hull facets, {} group faces", hull.len(), mesh.faces.len()),
            );
        }
        Err(e) => s.truth("hull-oracle", false, e.to_string()),
    }
    let scale = poly.indices.length_scale().abs();
    let tag_err = mesh
        .edges
        .iter()
        .map(|e| {
            let want = SQRT2 * poly.indices.a[e.class.unwrap_or(0)] * scale;
            (e.length - want).abs()
        })
        .fold(0.0, f64::max);
    s.within("edge-length-tags", tag_err, 1e-9, "edge of class ri has length √2·ai");
    let stabs = poly.face_stabilizer_orders(group);
    let law = poly
        .classes
        .iter()
        .zip(&stabs)
        .all(|(c, st)| c.count * st == group.order());
    let detail: Vec<String> = poly
        .classes
        .iter()
        .zip(&stabs)
        .map(|(c, st)| format!("ω{}: {} × {}", c.weight + 1, c.count, st))
        .collect();
    s.truth("face-count-law", law, detail.join(", "));
    s.within(
        "face-circles",
        face_circle_deviation(poly, group),
        1e-8,
        "face vertices concyclic about a weight direction",
    );
    s.truth(
        "vertex-transitivity",
        vertex_transitivity(poly, group),
        "every vertex pair related by the group",
    );
    if !poly.indices.h3_sigma_scale {
        let closed = match poly.indices.group {
            Diagram::A3 => Some(orbit::closed_form_a3(poly.indices.a)),
            Diagram::B3 => Some(orbit::closed_form_b3(poly.indices.a)),
            Diagram::H3 => None,
        };
        if let Some(c) = closed {
            s.within(
                "closed-form-orbit",
                orbit::set_distance(&c, &o.vertices),
                1e-9,
                "signed permutations of (α, β, γ) against the group orbit",
            );
        }
    }
    if let Some(e) = expected {
        census_suite(&mut s, mesh, e);
    }
    s
}

/// Scale factors printed for specific index values.
struct PublishedFactor {
    group: Diagram,
    a: [f64; 3],
    weight: usize,
    value: f64,
    text: &'static str,
}

fn published_factors() -> Vec<PublishedFactor> {
    use Diagram::{A3, B3};
    let p = |group, a, weight, value, text| PublishedFactor {
        group,
        a,
        weight,
        value,
        text,
    };
    vec![
        p(A3, [1.0, 2.0, 0.0], 0, 5.0 / 7.0, "5/7"),
        p(A3, [1.0, 1.0, 0.0], 0, 0.6, "0.6"),
        p(A3, [1.0, 0.0, 2.0], 0, 1.2, "6/5"),
        p(A3, [1.0, 0.0, 2.0], 2, 6.0 / 7.0, "6/7"),
        p(A3, [1.0, 2.0, 3.0], 0, 1.4, "1.4"),
        p(A3, [1.0, 2.0, 3.0], 1, 0.875, "7/8"),
        p(A3, [1.0, 2.0, 1.0], 1, 2.0 / 3.0, "2/3"),
        p(B3, [1.0, 2.0, 0.0], 0, 5.0 / (3.0 * SQRT2), "5/(3√2)"),
        p(B3, [1.0, 0.0, 2.0], 0, (SQRT2 + 4.0) / (SQRT2 + 2.0), "(√2+4)/(√2+2)"),
        p(
            B3,
            [1.0, 0.0, 2.0],
            2,
            (2.0 + 4.0 * SQRT2) / (6.0 + SQRT2),
            "(2+4√2)/(6+√2)",
        ),
        p(B3, [0.0, 1.0, 2.0], 2, (1.0 + SQRT2) / (3.0 + SQRT2), "(1+√2)/(3+√2)"),
        p(
            B3,
            [1.0, 2.0, 3.0],
            0,
            (5.0 * SQRT2 + 9.0) / (6.0 + 3.0 * SQRT2),
            "(5√2+9)/(6+3√2)",
        ),
    ]
}

/// Orthogonality, coplanarity, combinatorics, closed forms, transitivity.
pub fn dual_suite(
    poly: &OrbitPolyhedron,
    dual: &DualSolid,
    group: &ReflectionGroup,
    formulas: &[FormulaComparison],
    transitivity: &Transitivity,
    expected: Option<&Expected>,
) -> Suite {
    let mut s = Suite::default();
    let spec = &dual.spec;
    s.truth(
        "scale-factors-positive",
        spec.contributing
            .iter()
            .all(|&k| spec.scale_factors[k].is_some_and(|x| x > 0.0)),
        format!("{:?}", spec.scale_factors),
    );
    let m = &dual.measurements;
    s.within("dual-orthogonality", m.orthogonality, 1e-9, "|n̂ × v̂| per dual face");
    s.within(
        "dual-coplanarity",
        m.coplanarity,
        1e-8,
        "dual face out-of-plane deviation",
    );
    s.within(
        "same-class-orthogonality",
        m.same_class_orthogonality,
        1e-10,
        "same-class centres on a face differ orthogonally to the vertex",
    );
    s.within(
        "dual-vertex-orbits",
        dual::scaled_orbit_distance(dual, group),
        1e-9,
        "dual vertices equal the union of scaled fundamental orbits",
    );
    let (p, d) = (poly.mesh.census(), dual.mesh.census());
    s.truth(
        "dual-combinatorics",
        d.vertices == p.faces && d.faces == p.vertices && d.edges == p.edges && d.euler_ok,
        format!(
            "dual V/E/F = {}/{}/{}, primal {}/{}/{}",
            d.vertices, d.edges, d.faces, p.vertices, p.edges, p.faces
        ),
    );
    if let Some(want) = spec.expected_face {
        let ok = dual.mesh.faces.iter().all(|f| dual::shape_refines(f.kind.shape, want));
        let got = dual.face_shape().map_or("mixed".to_string(), |x| x.name());
        s.truth(
            "dual-face-shape",
            ok,
            format!("{got}, stabiliser predicts {}", want.name()),
        );
    }
    s.truth(
        "face-transitivity",
        transitivity.transitive,
        match transitivity.failing {
            None => format!("{} faces reached from face 0", transitivity.witnesses.len()),
            Some((a, b)) => format!("no element maps face {a} onto face {b}"),
        },
    );
    for f in formulas {
        s.within(
            &format!("scale-formula {} {}", f.family, f.symbol),
            f.difference,
            1e-10,
            format!("printed {:.12} solved {:.12}", f.printed, f.solved),
        );
    }
    let w = &poly.indices;
    for pf in published_factors() {
        if pf.group == w.group && pf.a == w.a {
            let got = spec.scale_factors[pf.weight].unwrap_or(f64::NAN);
            s.within(
                &format!("published-factor ω{}", pf.weight + 1),
                (got - pf.value).abs(),
                1e-10,
                format!("{} = {:.12}, solver {:.12}", pf.text, pf.value, got),
            );
        }
    }
    if let Some(e) = expected {
        let radii = dual.sphere_radii();
        for r in &e.dual_radii {
            let got = radii
                .iter()
                .find(|x| x.weight == r.weight)
                .map_or(f64::NAN, |x| x.radius);
            let diff = (got - r.value).abs();
            s.within(
                &format!("dual-radius ω{}", r.weight + 1),
                if diff.is_nan() { f64::INFINITY } else { diff },
                r.tol,
                format!("{got:.6} against {:.6}", r.value),
            );
        }
    }
    known_conflicts(&mut s, poly, dual);
    s
}

/// Published values known to disagree with the construction.
fn known_conflicts(s: &mut Suite, poly: &OrbitPolyhedron, dual: &DualSolid) {
    let w = &poly.indices;
    if w.group == Diagram::B3 && w.a == [1.0, 2.0, 3.0] {
        let eta = dual.spec.scale_factors[1].unwrap_or(f64::NAN);
        let published = (5.0 * SQRT2 + 9.0) / (10.0 + 2.0 * SQRT2);
        s.flag(
            "published-coefficient ω2",
            format!(
                "published coefficient (5√2+9)/(10+2√2) = {published:.6} for the ω2 orbit; \
                 the orthogonality condition and the general closed form give {eta:.6}"
            ),
            published,
            eta,
        );
        let radius = dual
            .sphere_radii()
            .iter()
            .find(|r| r.weight == 1)
            .map_or(f64::NAN, |r| r.radius);
        s.flag(
            "published-radius ω2",
            format!("published middle sphere radius 1.772; the ω2 orbit lies at {radius:.6}"),
            1.772,
            radius,
        );
    }
    if w.group == Diagram::H3 && w.support() == [true, true, false] {
        let c = poly.mesh.census();
        let dec = c
            .face_kinds
            .iter()
            .filter(|(k, _)| k.ends_with("decagon"))
            .map(|(_, n)| n)
            .sum::<usize>();
        let tri = c
            .face_kinds
            .iter()
            .filter(|(k, _)| k.ends_with("triangle"))
            .map(|(_, n)| n)
            .sum::<usize>();
        s.flag(
            "published-face-counts",
            format!(
                "published 20 decagons and 12 triangles; stabiliser indices give {dec} decagons (|W|/|D5|) and {tri} triangles (|W|/|D3|)"
            ),
            20.0,
            dec as f64,
        );
    }
}

/// Full primal and dual construction with every check.
pub struct Verified {
    pub polyhedron: OrbitPolyhedron,
    pub dual: DualSolid,
    pub formulas: Vec<FormulaComparison>,
    pub transitivity: Transitivity,
    pub suite: Suite,
}

pub fn verify_indices(
    group: &ReflectionGroup,
    w: &WeightIndices,
    expected: Option<&Expected>,
    exec: Execution,
) -> Result<Verified> {
    let poly = polyhedron::build_polyhedron_with(group, w, exec)?;
    let spec = dual::spec_for(&poly, &group.system, ScaleReference::Conventional)?;
    let dual = dual::build_dual_with(&poly, &spec, group, exec)?;
    let formulas = dual::closed_form_scale_validation(&group.system, w)?;
    let transitivity = dual::face_transitivity_check(&dual.mesh, group);
    let mut suite = group_suite(group);
    suite.extend(polyhedron_suite(&poly, group, expected));
    suite.extend(dual_suite(&poly, &dual, group, &formulas, &transitivity, expected));
    Ok(Verified {
        polyhedron: poly,
        dual,
        formulas,
        transitivity,
        suite,
    })
}

/// Nearest-neighbour distance spread and neighbour counts of a point set.
fn nearest_neighbours(points: &[Quaternion]) -> (f64, f64, Vec<usize>) {
    let nn: Vec<f64> = points
        .iter()
        .enumerate()
        .map(|(i, p)| {
            points
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, q)| p.distance(*q))
                .fold(f64::INFINITY, f64::min)
        })
        .collect();
    let lo = nn.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = nn.iter().copied().fold(0.0, f64::max);
    let counts = points
        .iter()
        .map(|p| {
            points
                .iter()
                .filter(|q| (p.distance(**q) - lo).abs() <= 1e-9 * lo)
                .count()
        })
        .collect();
    (lo, hi, counts)
}

fn maps_onto(g: &crate::quaternion::GroupElement, from: &[Quaternion], onto: &[Quaternion], tol: f64) -> bool {
    let mut idx = TolerantIndex::<3>::new(tol);
    for p in onto {
        idx.insert(p.xyz());
    }
    from.len() == onto.len() && from.iter().all(|p| idx.find(&g.act(*p).xyz()).is_some())
}

/// Checks for the two rotation-subgroup icosahedra.
pub fn chiral_pair_suite(group: &ReflectionGroup, pair: &orbit::ChiralPair) -> Suite {
    let mut s = Suite::default();
    let (a, b) = (&pair.first.vertices, &pair.second.vertices);
    s.truth(
        "chiral-orbit-sizes",
        a.len() == 12 && b.len() == 12,
        format!("{} and {}", a.len(), b.len()),
    );
    for (name, set) in [("first", a), ("second", b)] {
        let (lo, hi, counts) = nearest_neighbours(set);
        s.within(
            &format!("icosahedron-edges {name}"),
            (hi - lo) / lo,
            1e-9,
            format!("nearest-neighbour spread, {} neighbours per vertex", counts[0]),
        );
        s.truth(
            &format!("icosahedron-valence {name}"),
            counts.iter().all(|&c| c == 5),
            "each vertex has five nearest neighbours",
        );
    }
    let tol = epsilon() * pair.seed.norm().max(1.0);
    let r1 = group.system.generators[0];
    s.truth(
        "mirror-image",
        maps_onto(&r1, a, b, tol),
        "r1 maps one orbit onto the other",
    );
    let stars: Vec<_> = group.elements().iter().filter(|g| g.is_star()).collect();
    let closed = stars.iter().any(|g| maps_onto(g, a, a, tol) || maps_onto(g, b, b, tol));
    s.truth("not-star-closed", !closed, "no star element preserves either orbit");
    let golden = orbit::golden_icosahedra();
    let unit = |v: &[Quaternion]| -> Vec<Quaternion> {
        let r = v[0].norm();
        v.iter().map(|p| p.scale(1.0 / r)).collect()
    };
    let (g1, g2) = (unit(&golden.0), unit(&golden.1));
    let (ua, ub) = (unit(a), unit(b));
    let d = orbit::set_distance(&ua, &g1).min(orbit::set_distance(&ua, &g2));
    let d2 = orbit::set_distance(&ub, &g1).min(orbit::set_distance(&ub, &g2));
    s.within(
        "golden-coordinates",
        d.max(d2),
        1e-9,
        "orbits match ±e1 ± τe2 and its cyclic images up to scale",
    );
    s
}

/// Checks for a hull-built polyhedron (chiral constructions).
pub fn hull_mesh_suite(mesh: &Polyhedron, expected: Option<&Expected>) -> Suite {
    let mut s = Suite::default();
    let chi = mesh.euler_characteristic();
    s.truth("euler", chi == 2, format!("V − E + F = {chi}"));
    s.truth(
        "edge-face-incidence",
        mesh.is_closed_manifold(),
        "every edge borders exactly two faces",
    );
    let radii = mesh.census().sphere_radii;
    let spread = radii.last().zip(radii.first()).map_or(0.0, |(hi, lo)| hi / lo - 1.0);
    s.within("single-sphere", spread, 1e-9, "max/min vertex norm − 1");
    if let Some(e) = expected {
        census_suite(&mut s, mesh, e);
    }
    s
}

/// C60 bond geometry: angles and the hexagon edge ratio.
pub fn c60_suite(mesh: &Polyhedron) -> Suite {
    let mut s = Suite::default();
    let mut pent_angle: f64 = 0.0;
    let mut hex_angle: f64 = 0.0;
    let mut pent_edge: f64 = 0.0;
    let mut ratio_err: f64 = 0.0;
    for f in &mesh.faces {
        match f.cycle.len() {
            5 => {
                for a in &f.kind.interior_angles {
                    pent_angle = pent_angle.max((a - 108.0).abs());
                }
                for l in &f.kind.edge_lengths {
                    pent_edge = pent_edge.max((l - 1.455).abs());
                }
            }
            6 => {
                for a in &f.kind.interior_angles {
                    hex_angle = hex_angle.max((a - 120.0).abs());
                }
                let l = &f.kind.edge_lengths;
                let r = l.last().copied().unwrap_or(0.0) / l[0];
                ratio_err = ratio_err.max((r - 1.455 / 1.391).abs());
            }
            _ => {}
        }
    }
    s.within("pentagon-angles", pent_angle, 1e-9, "interior angles of 108°");
    s.within("hexagon-angles", hex_angle, 1e-9, "interior angles of 120°");
    s.within(
        "hexagon-edge-ratio",
        ratio_err,
        1e-6,
        "long/short hexagon edge = 1.455/1.391",
    );
    s.within("pentagon-edge", pent_edge, 1e-9, "pentagon edge 1.455 mesh units");
    s
}

/// A rotation-subgroup orbit meshed through its hull, with its checks.
pub struct ChiralBuild {
    pub orbit: Orbit,
    pub mesh: Polyhedron,
    pub suite: Suite,
}

/// Orbit of `Λ` under the non-star elements, faces from the convex hull.
pub fn verify_chiral(
    group: &ReflectionGroup,
    w: &WeightIndices,
    expected: Option<&Expected>,
    exec: Execution,
) -> Result<ChiralBuild> {
    let rotations = group.named_subgroup(Subgroup::Chiral)?;
    let lambda = orbit::indices_to_vector(&group.system, w);
    let orbit = orbit::orbit_under(&rotations, lambda, exec);
    let mesh = Polyhedron::from_hull(orbit.vertices.clone())?;
    let mut suite = group_suite(group);
    suite.extend(hull_mesh_suite(&mesh, expected));
    if group.diagram() == Diagram::A3 {
        let pair = orbit::chiral_orbit_pair(group, w)?;
        if pair.first.size() == 12 && pair.second.size() == 12 {
            suite.extend(chiral_pair_suite(group, &pair));
        }
    }
    Ok(ChiralBuild { orbit, mesh, suite })
}

pub enum EntryBuild {
    Orbit(Box<Verified>),
    Chiral(Box<ChiralBuild>),
}

impl EntryBuild {
    pub fn suite(&self) -> &Suite {
        match self {
            EntryBuild::Orbit(v) => &v.suite,
            EntryBuild::Chiral(c) => &c.suite,
        }
    }

    pub fn mesh(&self) -> &Polyhedron {
        match self {
            EntryBuild::Orbit(v) => &v.polyhedron.mesh,
            EntryBuild::Chiral(c) => &c.mesh,
        }
    }
}

pub fn build_entry(entry: &CatalogEntry, exec: Execution) -> Result<EntryBuild> {
    let group = ReflectionGroup::new(entry.group)?;
    let w = entry.weight_indices()?;
    Ok(match entry.construction {
        Construction::Orbit => {
            let mut v = verify_indices(&group, &w, Some(&entry.expected), exec)?;
            if entry.name == "c60" {
                let extra = c60_suite(&v.polyhedron.mesh);
                v.suite.extend(extra);
            }
            EntryBuild::Orbit(Box::new(v))
        }
        Construction::ChiralPair => {
            EntryBuild::Chiral(Box::new(verify_chiral(&group, &w, Some(&entry.expected), exec)?))
        }
    })
}

/// Every check for one catalog entry, names prefixed with the entry name.
pub fn verify_entry(entry: &CatalogEntry, exec: Execution) -> Result<Suite> {
    Ok(build_entry(entry, exec)?.suite().clone().prefixed(entry.name))
}
