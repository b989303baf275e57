//! OFF and OBJ text export, plus the parsers used to re-read them.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::polyhedron::Polyhedron;
use crate::quaternion::Quaternion;
use crate::tolerance::{epsilon, snap_zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeshFormat {
    Off,
    Obj,
}

impl MeshFormat {
    /// Format from a path extension, `.off` or `.obj`.
    pub fn from_path(path: &std::path::Path) -> Result<Self> {
        let ext = path.extension().and_then(|e| e.to_str()).unwrap_or("");
        ext.parse()
    }
}

impl FromStr for MeshFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "off" => Ok(MeshFormat::Off),
            "obj" => Ok(MeshFormat::Obj),
            _ => Err(Error::Parse(format!("mesh format `{s}` (expected off or obj)"))),
        }
    }
}

/// Shortest round-trip decimal, with `-0` and sub-ε noise written as `0`.
fn coord(x: f64) -> String {
    format!("{}", snap_zero(x, epsilon()))
}

fn scaled(v: Quaternion, scale: f64) -> [String; 3] {
    v.xyz().map(|c| coord(c * scale))
}

/// Renders `poly` with every coordinate multiplied by `scale`.
pub fn export_mesh(poly: &Polyhedron, format: MeshFormat, scale: f64) -> String {
    let mut out = String::new();
    match format {
        MeshFormat::Off => {
            out.push_str("OFF\n");
            let _ = writeln!(out, "{} {} {}", poly.vertices.len(), poly.edges.len(), poly.faces.len());
            for v in &poly.vertices {
                let [x, y, z] = scaled(*v, scale);
                let _ = writeln!(out, "{x} {y} {z}");
            }
            for f in &poly.faces {
                let _ = write!(out, "{}", f.cycle.len());
                for i in &f.cycle {
                    let _ = write!(out, " {i}");
                }
                out.push('\n');
            }
        }
        MeshFormat::Obj => {
            for v in &poly.vertices {
                let [x, y, z] = scaled(*v, scale);
                let _ = writeln!(out, "v {x} {y} {z}");
            }
            for f in &poly.faces {
                out.push('f');
                for i in &f.cycle {
                    let _ = write!(out, " {}", i + 1);
                }
                out.push('\n');
            }
        }
    }
    out
}

/// Vertices and face cycles read back from a mesh file.
#[derive(Debug, Clone, PartialEq)]
pub struct ParsedMesh {
    pub vertices: Vec<[f64; 3]>,
    pub faces: Vec<Vec<usize>>,
    /// Edge count from the OFF header; derived from faces for OBJ.
    pub edges: usize,
}

fn bad(line: usize, what: &str) -> Error {
    Error::Parse(format!("mesh line {line}: {what}"))
}

fn edge_count(faces: &[Vec<usize>]) -> usize {
    let mut set = std::collections::BTreeSet::new();
    for f in faces {
        for i in 0..f.len() {
            let (a, b) = (f[i], f[(i + 1) % f.len()]);
            set.insert((a.min(b), a.max(b)));
        }
    }
    set.len()
}

fn floats(parts: &[&str], line: usize) -> Result<[f64; 3]> {
    if parts.len() < 3 {
        return Err(bad(line, "expected three coordinates"));
    }
    let mut v = [0.0; 3];
    for (slot, p) in v.iter_mut().zip(parts) {
        *slot = p.parse().map_err(|_| bad(line, "bad coordinate"))?;
    }
    Ok(v)
}

pub fn parse_off(text: &str) -> Result<ParsedMesh> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    match lines.next() {
        Some((_, "OFF")) => {}
        _ => return Err(bad(1, "missing OFF header")),
    }
    let (ln, counts) = lines.next().ok_or_else(|| bad(2, "missing counts"))?;
    let counts: Vec<usize> = counts
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| bad(ln, "bad count")))
        .collect::<Result<_>>()?;
    let [nv, ne, nf] = counts[..] else {
        return Err(bad(ln, "expected `V E F`"));
    };
    let mut vertices = Vec::with_capacity(nv);
    for _ in 0..nv {
        let (ln, l) = lines.next().ok_or_else(|| bad(ln, "missing vertex"))?;
        let parts: Vec<&str> = l.split_whitespace().collect();
        vertices.push(floats(&parts, ln)?);
    }
    let mut faces = Vec::with_capacity(nf);
    for _ in 0..nf {
        let (ln, l) = lines.next().ok_or_else(|| bad(ln, "missing face"))?;
        let nums: Vec<usize> = l
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| bad(ln, "bad face index")))
            .collect::<Result<_>>()?;
        let (&n, ids) = nums.split_first().ok_or_else(|| bad(ln, "empty face"))?;
        if ids.len() != n || ids.iter().any(|&i| i >= nv) {
            return Err(bad(ln, "face does not match its vertex count"));
        }
        faces.push(ids.to_vec());
    }
    Ok(ParsedMesh {
        vertices,
        faces,
        edges: ne,
    })
}

pub fn parse_obj(text: &str) -> Result<ParsedMesh> {
    let mut vertices = Vec::new();
    let mut faces = Vec::new();
    for (i, l) in text.lines().enumerate() {
        let parts: Vec<&str> = l.split_whitespace().collect();
        match parts.split_first() {
            Some((&"v", rest)) => vertices.push(floats(rest, i + 1)?),
            Some((&"f", rest)) => {
                let ids: Vec<usize> = rest
                    .iter()
                    .map(|t| {
                        let head = t.split('/').next().unwrap_or("");
                        match head.parse::<usize>() {
                            Ok(k) if k >= 1 => Ok(k - 1),
                            _ => Err(bad(i + 1, "bad face index")),
                        }
                    })
                    .collect::<Result<_>>()?;
                faces.push(ids);
            }
            _ => {}
        }
    }
    if faces.iter().flatten().any(|&k| k >= vertices.len()) {
        return Err(Error::Parse("obj face refers to a missing vertex".into()));
    }
    let edges = edge_count(&faces);
    Ok(ParsedMesh { vertices, faces, edges })
}

pub fn parse_mesh(text: &str, format: MeshFormat) -> Result<ParsedMesh> {
    match format {
        MeshFormat::Off => parse_off(text),
        MeshFormat::Obj => parse_obj(text),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{Diagram, ReflectionGroup};
    use crate::orbit::WeightIndices;
    use crate::polyhedron::build_polyhedron;

    fn tetrahedron() -> Polyhedron {
        let g = ReflectionGroup::new(Diagram::A3).unwrap();
        build_polyhedron(&g, &WeightIndices::new(Diagram::A3, [1.0, 0.0, 0.0]).unwrap())
            .unwrap()
            .mesh
    }

    #[test]
    fn off_layout() {
        let text = export_mesh(&tetrahedron(), MeshFormat::Off, 1.0);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "OFF");
        assert_eq!(lines[1], "4 6 4");
        assert_eq!(lines.len(), 2 + 4 + 4);
        assert!(lines[6..].iter().all(|l| l.starts_with("3 ")));
        assert!(!text.contains("-0 ") && !text.contains("-0\n"));
    }

    #[test]
    fn round_trips() {
        let p = tetrahedron();
        for fmt in [MeshFormat::Off, MeshFormat::Obj] {
            let parsed = parse_mesh(&export_mesh(&p, fmt, 1.0), fmt).unwrap();
            assert_eq!(parsed.vertices.len(), 4);
            assert_eq!(parsed.edges, 6);
            assert_eq!(
                parsed.faces,
                p.faces.iter().map(|f| f.cycle.clone()).collect::<Vec<_>>()
            );
            for (a, b) in parsed.vertices.iter().zip(&p.vertices) {
                assert_eq!(*a, b.xyz());
            }
        }
    }

    #[test]
    fn obj_is_one_based() {
        let text = export_mesh(&tetrahedron(), MeshFormat::Obj, 2.0);
        assert!(text
            .lines()
            .filter(|l| l.starts_with("f "))
            .all(|l| !l.split(' ').any(|t| t == "0")));
        assert_eq!(text.lines().filter(|l| l.starts_with("v ")).count(), 4);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_off("OFF\n1 0 1\n0 0 0\n3 0 1 2\n").is_err());
        assert!(parse_off("PLY\n").is_err());
        assert!(parse_obj("v 0 0 0\nf 1 2 3\n").is_err());
        assert!("stl".parse::<MeshFormat>().is_err());
    }
}
