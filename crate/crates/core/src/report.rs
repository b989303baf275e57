//! JSON report documents. Every real number is written with 17 significant
//! digits so a document survives a parse and re-serialise unchanged.

use std::collections::BTreeMap;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::value::RawValue;

use crate::coxeter::Diagram;
use crate::dual::{DualSolid, FormulaComparison, Transitivity};
use crate::error::{Error, Result};
use crate::polyhedron::{Census, Polyhedron};
use crate::verify::{Check, Conflict};

/// A float serialised as `d.dddddddddddddddde±x`; non-finite values become `null`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Real(pub f64);

impl From<f64> for Real {
    fn from(x: f64) -> Self {
        Real(x)
    }
}

impl Serialize for Real {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return s.serialize_none();
        }
        let x = if self.0 == 0.0 { 0.0 } else { self.0 };
        let raw = RawValue::from_string(format!("{x:.16e}")).map_err(serde::ser::Error::custom)?;
        raw.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Real {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(Real(Option::<f64>::deserialize(d)?.unwrap_or(f64::NAN)))
    }
}

fn real3(v: [f64; 3]) -> [Real; 3] {
    v.map(Real)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InputEcho {
    pub command: String,
    pub catalog_name: Option<String>,
    pub group: Option<Diagram>,
    pub indices: Option<[Real; 3]>,
    pub indices_text: Option<String>,
    pub sigma_scale: bool,
    pub chiral: bool,
    pub normalize_circumradius: bool,
    /// Factor applied to every coordinate and length in `vertices`, `edges`, `faces`, `census`.
    pub mesh_scale: Real,
    pub epsilon: Real,
    /// `primal` or `dual`: which solid the geometry sections describe.
    pub subject: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub a: usize,
    pub b: usize,
    /// `sqrt2*aN` for an edge crossing mirror `rN`.
    pub tag: Option<String>,
    pub length: Real,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FaceRecord {
    pub cycle: Vec<usize>,
    pub kind: String,
    /// 1-based weight along which the face centre lies.
    pub center_weight: Option<usize>,
    pub edge_lengths: Vec<Real>,
    pub interior_angles: Vec<Real>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler_characteristic: i64,
    pub euler_ok: bool,
    pub face_kinds: BTreeMap<String, usize>,
    pub edge_classes: BTreeMap<String, usize>,
    pub sphere_radii: Vec<Real>,
}

impl From<&Census> for CensusRecord {
    fn from(c: &Census) -> Self {
        CensusRecord {
            vertices: c.vertices,
            edges: c.edges,
            faces: c.faces,
            euler_characteristic: c.euler_characteristic,
            euler_ok: c.euler_ok,
            face_kinds: c.face_kinds.clone(),
            edge_classes: c.edge_classes.clone(),
            sphere_radii: c.sphere_radii.iter().copied().map(Real).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadiusRecord {
    /// 1-based weight.
    pub weight: usize,
    pub scale_factor: Real,
    pub radius: Real,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FormulaRecord {
    pub family: String,
    pub symbol: String,
    pub weight: usize,
    pub reference: usize,
    pub printed: Real,
    pub solved: Real,
    pub difference: Real,
}

impl From<&FormulaComparison> for FormulaRecord {
    fn from(f: &FormulaComparison) -> Self {
        FormulaRecord {
            family: f.family.clone(),
            symbol: f.symbol.clone(),
            weight: f.weight + 1,
            reference: f.reference + 1,
            printed: Real(f.printed),
            solved: Real(f.solved),
            difference: Real(f.difference),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DualRecord {
    /// 1-based weight with scale factor 1.
    pub reference_weight: usize,
    pub scale_factors: [Option<Real>; 3],
    pub sphere_radii: Vec<RadiusRecord>,
    pub census: CensusRecord,
    pub expected_face: Option<String>,
    pub face_transitive: bool,
    /// For dual face `j`, a group element index mapping face 0 onto it.
    pub transitivity_witnesses: Vec<Option<usize>>,
    pub formula_comparisons: Vec<FormulaRecord>,
    pub orthogonality: Real,
    pub coplanarity: Real,
    pub same_class_orthogonality: Real,
}

impl DualRecord {
    pub fn new(dual: &DualSolid, transitivity: &Transitivity, formulas: &[FormulaComparison]) -> Self {
        DualRecord {
            reference_weight: dual.spec.reference + 1,
            scale_factors: dual.spec.scale_factors.map(|s| s.map(Real)),
            sphere_radii: dual
                .sphere_radii()
                .iter()
                .map(|r| RadiusRecord {
                    weight: r.weight + 1,
                    scale_factor: Real(r.scale_factor),
                    radius: Real(r.radius),
                    count: r.count,
                })
                .collect(),
            census: (&dual.mesh.census()).into(),
            expected_face: dual.spec.expected_face.map(|s| s.name()),
            face_transitive: transitivity.transitive,
            transitivity_witnesses: transitivity.witnesses.clone(),
            formula_comparisons: formulas.iter().map(FormulaRecord::from).collect(),
            orthogonality: Real(dual.measurements.orthogonality),
            coplanarity: Real(dual.measurements.coplanarity),
            same_class_orthogonality: Real(dual.measurements.same_class_orthogonality),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub input: InputEcho,
    pub vertices: Vec<[Real; 3]>,
    pub edges: Vec<EdgeRecord>,
    pub faces: Vec<FaceRecord>,
    pub census: Option<CensusRecord>,
    pub dual: Option<DualRecord>,
    pub checks: Vec<Check>,
    pub conflicts: Vec<Conflict>,
}

impl ReportDocument {
    pub fn new(input: InputEcho) -> Self {
        ReportDocument {
            input,
            vertices: Vec::new(),
            edges: Vec::new(),
            faces: Vec::new(),
            census: None,
            dual: None,
            checks: Vec::new(),
            conflicts: Vec::new(),
        }
    }

    /// Fills the geometry sections from `mesh`, already scaled for output.
    pub fn set_geometry(&mut self, mesh: &Polyhedron) {
        self.vertices = mesh.vertices.iter().map(|v| real3(v.xyz())).collect();
        self.edges = mesh
            .edges
            .iter()
            .map(|e| EdgeRecord {
                a: e.a,
                b: e.b,
                tag: e.class.map(|i| format!("sqrt2*a{}", i + 1)),
                length: Real(e.length),
            })
            .collect();
        self.faces = mesh
            .faces
            .iter()
            .map(|f| FaceRecord {
                cycle: f.cycle.clone(),
                kind: f.kind.shape.name(),
                center_weight: f.center_weight.map(|k| k + 1),
                edge_lengths: f.kind.edge_lengths.iter().copied().map(Real).collect(),
                interior_angles: f.kind.interior_angles.iter().copied().map(Real).collect(),
            })
            .collect();
        self.census = Some((&mesh.census()).into());
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialises");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("report: {e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reals_keep_seventeen_digits() {
        let s = serde_json::to_string(&vec![Real(0.1), Real(-2.0 / 3.0), Real(-0.0), Real(f64::NAN)]).unwrap();
        assert_eq!(
            s,
            "[1.0000000000000001e-1,-6.6666666666666663e-1,0.0000000000000000e0,null]"
        );
        let back: Vec<Real> = serde_json::from_str(&s).unwrap();
        assert_eq!(back[1].0, -2.0 / 3.0);
        assert!(back[3].0.is_nan());
    }

    #[test]
    fn every_f64_round_trips() {
        for x in [
            std::f64::consts::PI,
            1e-300,
            6.02214076e23,
            f64::MIN_POSITIVE,
            1.0 / 3.0,
        ] {
            let s = serde_json::to_string(&Real(x)).unwrap();
            assert_eq!(serde_json::from_str::<Real>(&s).unwrap().0, x);
        }
    }
}
