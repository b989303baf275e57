mod common;

use std::collections::BTreeMap;

use qpoly::catalog;
use qpoly::coxeter::{Diagram, ReflectionGroup};
use qpoly::orbit::WeightIndices;
use qpoly::par::Execution;
use qpoly::polyhedron::{build_polyhedron, build_polyhedron_with, hull_oracle, FaceShape};

use common::FAMILIES;

fn groups() -> Vec<ReflectionGroup> {
    Diagram::ALL.iter().map(|d| ReflectionGroup::new(*d).unwrap()).collect()
}

fn group(gs: &[ReflectionGroup], d: Diagram) -> &ReflectionGroup {
    gs.iter().find(|g| g.diagram() == d).unwrap()
}

#[test]
fn family_census_on_random_indices() {
    let gs = groups();
    let mut rng = common::rng(11);
    for fam in FAMILIES {
        let g = group(&gs, fam.group);
        for _ in 0..5 {
            let a = fam.draw(&mut rng);
            let w = WeightIndices::with_sigma(fam.group, a, fam.sigma()).unwrap();
            let p = build_polyhedron(g, &w).unwrap();
            let c = p.census();
            assert_eq!((c.vertices, c.edges, c.faces), fam.counts, "{w}");
            assert_eq!(c.euler_characteristic, 2);
            let want: BTreeMap<String, usize> = fam.kinds.iter().map(|(k, n)| (k.to_string(), *n)).collect();
            assert_eq!(c.face_kinds, want, "{w}");
            assert!(p.mesh.is_closed_manifold(), "{w}");
        }
    }
}

#[test]
fn group_faces_match_hull_faces() {
    let gs = groups();
    let mut rng = common::rng(12);
    for fam in FAMILIES {
        let g = group(&gs, fam.group);
        let a = fam.draw(&mut rng);
        let w = WeightIndices::with_sigma(fam.group, a, fam.sigma()).unwrap();
        let p = build_polyhedron(g, &w).unwrap();
        let mut hull: Vec<Vec<usize>> = hull_oracle(&p.mesh.vertices)
            .unwrap()
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        hull.sort();
        assert_eq!(hull, p.mesh.face_sets(), "{w}");
    }
}

#[test]
fn face_counts_follow_stabiliser_index() {
    let gs = groups();
    let mut rng = common::rng(13);
    for fam in FAMILIES {
        let g = group(&gs, fam.group);
        let w = WeightIndices::with_sigma(fam.group, fam.draw(&mut rng), fam.sigma()).unwrap();
        let p = build_polyhedron(g, &w).unwrap();
        let stabs = p.face_stabilizer_orders(g);
        for (class, s) in p.classes.iter().zip(stabs) {
            assert_eq!(class.count * s, g.order(), "{w} ω{}", class.weight + 1);
        }
        assert_eq!(p.orbit.size() * p.stabilizer_order, g.order());
    }
}

#[test]
fn edges_carry_their_root_length() {
    let g = ReflectionGroup::new(Diagram::B3).unwrap();
    let w = WeightIndices::new(Diagram::B3, [0.4, 1.1, 2.3]).unwrap();
    let p = build_polyhedron(&g, &w).unwrap();
    for e in &p.mesh.edges {
        let i = e.class.unwrap();
        assert!((e.length - 2f64.sqrt() * w.a[i]).abs() < 1e-12);
    }
    // σ normalisation shrinks H3 edges by τ
    let h = ReflectionGroup::new(Diagram::H3).unwrap();
    let w = WeightIndices::sigma([1.0, 2.0, 3.0]).unwrap();
    let p = build_polyhedron(&h, &w).unwrap();
    let tau = (1.0 + 5f64.sqrt()) / 2.0;
    for e in &p.mesh.edges {
        let want = w.a[e.class.unwrap()] / tau;
        assert!((e.length - want).abs() < 1e-12, "{} vs {want}", e.length);
    }
}

#[test]
fn interior_angles_of_worked_faces() {
    let g = ReflectionGroup::new(Diagram::H3).unwrap();
    let p = build_polyhedron(&g, &WeightIndices::sigma([0.0, 1.0, 2.0]).unwrap()).unwrap();
    for f in &p.mesh.faces {
        let want = match f.kind.shape {
            FaceShape::Regular(5) => 108.0,
            FaceShape::Isogonal(6) => 120.0,
            other => panic!("unexpected {other}"),
        };
        assert!(f.kind.interior_angles.iter().all(|a| (a - want).abs() < 1e-9));
    }
    let p = build_polyhedron(&g, &WeightIndices::sigma([0.0, 1.0, 1.0]).unwrap()).unwrap();
    assert_eq!(p.census().face_kinds["regular-hexagon"], 20);
}

#[test]
fn execution_modes_agree_on_catalog() {
    for e in catalog::entries()
        .iter()
        .filter(|e| e.construction == catalog::Construction::Orbit)
    {
        let g = ReflectionGroup::new(e.group).unwrap();
        let w = e.weight_indices().unwrap();
        let a = build_polyhedron_with(&g, &w, Execution::Sequential).unwrap();
        let b = build_polyhedron_with(&g, &w, Execution::Parallel).unwrap();
        assert_eq!(a.mesh, b.mesh, "{}", e.name);
    }
}
