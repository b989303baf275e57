use qpoly::catalog;
use qpoly::coxeter::{Diagram, ReflectionGroup};
use qpoly::mesh::{export_mesh, parse_mesh, MeshFormat};
use qpoly::orbit::WeightIndices;
use qpoly::par::Execution;
use qpoly::report::{DualRecord, InputEcho, Real, ReportDocument};
use qpoly::verify::{build_entry, verify_indices};

#[test]
fn every_catalog_mesh_reparses() {
    for e in catalog::entries() {
        let built = build_entry(&e, Execution::default()).unwrap();
        let mesh = built.mesh();
        for fmt in [MeshFormat::Off, MeshFormat::Obj] {
            let text = export_mesh(mesh, fmt, 1.0);
            let parsed = parse_mesh(&text, fmt).unwrap();
            assert_eq!(parsed.vertices.len(), mesh.vertices.len(), "{}", e.name);
            assert_eq!(parsed.edges, mesh.edges.len(), "{}", e.name);
            let cycles: Vec<Vec<usize>> = mesh.faces.iter().map(|f| f.cycle.clone()).collect();
            assert_eq!(parsed.faces, cycles, "{}", e.name);
            assert_eq!(
                parsed.vertices.len() + parsed.faces.len(),
                parsed.edges + 2,
                "{}",
                e.name
            );
            for (p, v) in parsed.vertices.iter().zip(&mesh.vertices) {
                let d = p.iter().zip(v.xyz()).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
                assert!(d <= qpoly::tolerance::epsilon(), "{}: {d}", e.name);
            }
        }
    }
}

#[test]
fn scaled_export_scales_every_coordinate() {
    let g = ReflectionGroup::new(Diagram::B3).unwrap();
    let p =
        qpoly::polyhedron::build_polyhedron(&g, &WeightIndices::new(Diagram::B3, [1.0, 1.0, 0.0]).unwrap()).unwrap();
    let one = parse_mesh(&export_mesh(&p.mesh, MeshFormat::Off, 1.0), MeshFormat::Off).unwrap();
    let three = parse_mesh(&export_mesh(&p.mesh, MeshFormat::Off, 3.0), MeshFormat::Off).unwrap();
    for (a, b) in one.vertices.iter().zip(&three.vertices) {
        for k in 0..3 {
            assert!((3.0 * a[k] - b[k]).abs() < 1e-12);
        }
    }
}

fn report_for(group: Diagram, a: [f64; 3], sigma: bool) -> ReportDocument {
    let g = ReflectionGroup::new(group).unwrap();
    let w = WeightIndices::with_sigma(group, a, sigma).unwrap();
    let v = verify_indices(&g, &w, None, Execution::default()).unwrap();
    let mut doc = ReportDocument::new(InputEcho {
        command: "dual".into(),
        catalog_name: None,
        group: Some(group),
        indices: Some(a.map(Real)),
        indices_text: None,
        sigma_scale: sigma,
        chiral: false,
        normalize_circumradius: false,
        mesh_scale: Real(1.0),
        epsilon: Real(qpoly::tolerance::epsilon()),
        subject: "primal".into(),
    });
    doc.set_geometry(&v.polyhedron.mesh);
    doc.dual = Some(DualRecord::new(&v.dual, &v.transitivity, &v.formulas));
    doc.checks = v.suite.checks.clone();
    doc.conflicts = v.suite.conflicts.clone();
    doc
}

#[test]
fn reports_round_trip_byte_for_byte() {
    for (d, a, s) in [
        (Diagram::A3, [1.0, 2.0, 3.0], false),
        (Diagram::B3, [1.0, 2.0, 3.0], false),
        (Diagram::H3, [1.0, 2.0, 3.0], true),
        (Diagram::H3, [1.0, 1.0, 0.0], true),
    ] {
        let doc = report_for(d, a, s);
        let text = doc.to_json();
        let back = ReportDocument::from_json(&text).unwrap();
        assert_eq!(back.to_json(), text);
        assert_eq!(back.vertices.len(), doc.vertices.len());
        let c = back.census.as_ref().unwrap();
        assert_eq!(c.vertices as i64 - c.edges as i64 + c.faces as i64, 2);
        for (x, y) in back.vertices.iter().zip(&doc.vertices) {
            assert_eq!(x.map(|r| r.0), y.map(|r| r.0));
        }
    }
}

#[test]
fn report_flags_published_conflicts_without_failing() {
    let doc = report_for(Diagram::B3, [1.0, 2.0, 3.0], false);
    assert!(!doc.conflicts.is_empty());
    let json: serde_json::Value = serde_json::from_str(&doc.to_json()).unwrap();
    let statuses: Vec<&str> = json["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["status"].as_str().unwrap())
        .collect();
    assert!(statuses.contains(&"flagged"));
    assert!(!statuses.contains(&"fail"));
    let dual = &json["dual"];
    assert_eq!(dual["reference_weight"], 3);
    assert!(dual["face_transitive"].as_bool().unwrap());
}
