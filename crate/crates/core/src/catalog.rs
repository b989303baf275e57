//! Named solids with their expected census.

use serde::Serialize;

use crate::coxeter::{Diagram, SQRT2, TAU};
use crate::error::{Error, Result};
use crate::orbit::WeightIndices;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Construction {
    /// Orbit of the full reflection group.
    Orbit,
    /// The two rotation-subgroup orbits of `Λ` and `r1Λ`; the first is meshed.
    ChiralPair,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExpectedRadius {
    /// 0-based weight.
    pub weight: usize,
    pub value: f64,
    pub tol: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Expected {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub face_kinds: Vec<(&'static str, usize)>,
    /// Dual sphere radii, only where a value is known independently.
    pub dual_radii: Vec<ExpectedRadius>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub group: Diagram,
    pub indices: [f64; 3],
    pub sigma_scale: bool,
    pub construction: Construction,
    pub expected: Expected,
    pub notes: &'static str,
}

impl CatalogEntry {
    pub fn weight_indices(&self) -> Result<WeightIndices> {
        WeightIndices::with_sigma(self.group, self.indices, self.sigma_scale)
    }
}

fn exact(weight: usize, value: f64) -> ExpectedRadius {
    ExpectedRadius {
        weight,
        value,
        tol: 1e-10,
    }
}

fn printed(weight: usize, value: f64) -> ExpectedRadius {
    ExpectedRadius {
        weight,
        value,
        tol: 1e-3,
    }
}

#[allow(clippy::too_many_arguments)]
fn entry(
    name: &'static str,
    group: Diagram,
    indices: [f64; 3],
    sigma_scale: bool,
    counts: (usize, usize, usize),
    face_kinds: &[(&'static str, usize)],
    dual_radii: Vec<ExpectedRadius>,
    notes: &'static str,
) -> CatalogEntry {
    CatalogEntry {
        name,
        group,
        indices,
        sigma_scale,
        construction: Construction::Orbit,
        expected: Expected {
            vertices: counts.0,
            edges: counts.1,
            faces: counts.2,
            face_kinds: face_kinds.to_vec(),
            dual_radii,
        },
        notes,
    }
}

const TRI: &str = "equilateral-triangle";

/// Every preset, in listing order.
// 1.4142 below is a published four-digit radius, not √2 typed by hand.
#[allow(clippy::approx_constant)]
pub fn entries() -> Vec<CatalogEntry> {
    use Diagram::{A3, B3, H3};
    let s3 = 3f64.sqrt();
    let r15 = 1.5f64.sqrt();
    let mut chiral = entry(
        "chiral-icosahedron-pair",
        A3,
        [TAU, 1.0, TAU],
        false,
        (12, 30, 20),
        &[(TRI, 20)],
        vec![],
        "two mirror-image icosahedra from the rotation subgroup of W(A3)",
    );
    chiral.construction = Construction::ChiralPair;
    vec![
        entry(
            "tetrahedron",
            A3,
            [1.0, 0.0, 0.0],
            false,
            (4, 6, 4),
            &[(TRI, 4)],
            vec![],
            "fundamental orbit O(100)",
        ),
        entry(
            "octahedron",
            A3,
            [0.0, 1.0, 0.0],
            false,
            (6, 12, 8),
            &[(TRI, 8)],
            vec![],
            "fundamental orbit O(010)",
        ),
        entry(
            "cube",
            B3,
            [0.0, 0.0, 1.0],
            false,
            (8, 12, 6),
            &[("square", 6)],
            vec![],
            "fundamental orbit O(001)",
        ),
        entry(
            "cuboctahedron",
            B3,
            [0.0, 1.0, 0.0],
            false,
            (12, 24, 14),
            &[(TRI, 8), ("square", 6)],
            vec![],
            "fundamental orbit O(010)",
        ),
        entry(
            "truncated-octahedron",
            B3,
            [1.0, 1.0, 0.0],
            false,
            (24, 36, 14),
            &[("regular-hexagon", 8), ("square", 6)],
            vec![],
            "Wigner-Seitz cell of the body-centred cubic lattice",
        ),
        entry(
            "icosahedron",
            H3,
            [0.0, 0.0, 1.0],
            true,
            (12, 30, 20),
            &[(TRI, 20)],
            vec![],
            "fundamental orbit",
        ),
        entry(
            "dodecahedron",
            H3,
            [1.0, 0.0, 0.0],
            true,
            (20, 30, 12),
            &[("regular-pentagon", 12)],
            vec![],
            "fundamental orbit",
        ),
        entry(
            "icosidodecahedron",
            H3,
            [0.0, 1.0, 0.0],
            true,
            (30, 60, 32),
            &[(TRI, 20), ("regular-pentagon", 12)],
            vec![],
            "fundamental orbit, unit edge",
        ),
        entry(
            "truncated-icosahedron",
            H3,
            [0.0, 1.0, 1.0],
            true,
            (60, 90, 32),
            &[("regular-hexagon", 20), ("regular-pentagon", 12)],
            vec![],
            "Archimedean limit of the (0 a2 a3) family",
        ),
        chiral,
        entry(
            "a3-120",
            A3,
            [1.0, 2.0, 0.0],
            false,
            (12, 18, 8),
            &[("isogonal-hexagon", 4), (TRI, 4)],
            vec![exact(0, 5.0 * s3 / 14.0), exact(2, s3 / 2.0)],
            "quasi-regular truncated tetrahedron",
        ),
        entry(
            "a3-102",
            A3,
            [1.0, 0.0, 2.0],
            false,
            (12, 24, 14),
            &[(TRI, 8), ("rectangle", 6)],
            vec![exact(0, 3.0 * s3 / 5.0), exact(1, 1.0), exact(2, 3.0 * s3 / 7.0)],
            "quasi-regular cuboctahedron; dual has kite faces",
        ),
        entry(
            "a3-123",
            A3,
            [1.0, 2.0, 3.0],
            false,
            (24, 36, 14),
            &[("isogonal-hexagon", 8), ("rectangle", 6)],
            vec![exact(0, 1.4 * s3 / 2.0), exact(1, 0.875), exact(2, s3 / 2.0)],
            "generic A3 orbit; dual has scalene faces",
        ),
        entry(
            "a3-121",
            A3,
            [1.0, 2.0, 1.0],
            false,
            (24, 36, 14),
            &[("isogonal-hexagon", 8), ("square", 6)],
            vec![exact(0, s3 / 2.0), exact(1, 2.0 / 3.0), exact(2, s3 / 2.0)],
            "same vertex set as B3 O(210)",
        ),
        entry(
            "b3-210",
            B3,
            [2.0, 1.0, 0.0],
            false,
            (24, 36, 14),
            &[("isogonal-hexagon", 8), ("square", 6)],
            vec![],
            "quasi-regular truncated octahedron",
        ),
        entry(
            "b3-120",
            B3,
            [1.0, 2.0, 0.0],
            false,
            (24, 36, 14),
            &[("isogonal-hexagon", 8), ("square", 6)],
            vec![exact(0, 5.0 / (3.0 * SQRT2)), exact(2, r15)],
            "quasi-regular truncated octahedron",
        ),
        entry(
            "b3-102",
            B3,
            [1.0, 0.0, 2.0],
            false,
            (24, 48, 26),
            &[(TRI, 8), ("square", 6), ("rectangle", 12)],
            vec![printed(0, 1.5858), printed(1, 1.4142), printed(2, 1.2648)],
            "quasi-regular small rhombicuboctahedron; dual has kite faces",
        ),
        entry(
            "b3-012",
            B3,
            [0.0, 1.0, 2.0],
            false,
            (24, 36, 14),
            &[(TRI, 8), ("isogonal-octagon", 6)],
            vec![exact(0, 1.0), exact(2, (1.0 + SQRT2) / (3.0 + SQRT2) * r15)],
            "quasi-regular truncated cube",
        ),
        entry(
            "b3-123",
            B3,
            [1.0, 2.0, 3.0],
            false,
            (48, 72, 26),
            &[("isogonal-hexagon", 8), ("rectangle", 12), ("isogonal-octagon", 6)],
            vec![printed(0, 1.569), printed(2, 1.225)],
            "generic B3 orbit; dual is face-transitive with scalene faces",
        ),
        entry(
            "h3-sigma-120",
            H3,
            [1.0, 2.0, 0.0],
            true,
            (60, 90, 32),
            &[("isogonal-decagon", 12), (TRI, 20)],
            vec![],
            "quasi-regular truncated dodecahedron",
        ),
        entry(
            "h3-sigma-102",
            H3,
            [1.0, 0.0, 2.0],
            true,
            (60, 120, 62),
            &[("regular-pentagon", 12), (TRI, 20), ("rectangle", 30)],
            vec![],
            "quasi-regular small rhombicosidodecahedron",
        ),
        entry(
            "h3-sigma-012",
            H3,
            [0.0, 1.0, 2.0],
            true,
            (60, 90, 32),
            &[("regular-pentagon", 12), ("isogonal-hexagon", 20)],
            vec![],
            "quasi-regular truncated icosahedron",
        ),
        entry(
            "h3-sigma-123",
            H3,
            [1.0, 2.0, 3.0],
            true,
            (120, 180, 62),
            &[("isogonal-decagon", 12), ("isogonal-hexagon", 20), ("rectangle", 30)],
            vec![],
            "generic H3 orbit",
        ),
        entry(
            "c60",
            H3,
            [0.0, 1.455 / SQRT2, 1.391 / SQRT2],
            false,
            (60, 90, 32),
            &[("regular-pentagon", 12), ("isogonal-hexagon", 20)],
            vec![],
            "fullerene model: single bonds 1.455 Å, double bonds 1.391 Å, in mesh units",
        ),
    ]
}

pub fn names() -> Vec<&'static str> {
    entries().iter().map(|e| e.name).collect()
}

pub fn lookup(name: &str) -> Result<CatalogEntry> {
    entries()
        .into_iter()
        .find(|e| e.name.eq_ignore_ascii_case(name))
        .ok_or_else(|| Error::UnknownEntry(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique_and_indices_valid() {
        let n = names();
        let mut sorted = n.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), n.len());
        for e in entries() {
            e.weight_indices().unwrap();
            let kinds: usize = e.expected.face_kinds.iter().map(|k| k.1).sum();
            assert_eq!(kinds, e.expected.faces, "{}", e.name);
            assert_eq!(
                e.expected.vertices + e.expected.faces,
                e.expected.edges + 2,
                "{}",
                e.name
            );
        }
    }

    #[test]
    fn lookup_is_case_insensitive() {
        assert_eq!(lookup("C60").unwrap().name, "c60");
        assert!(matches!(lookup("rhombus"), Err(Error::UnknownEntry(_))));
    }
}
