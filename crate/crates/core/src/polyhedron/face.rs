//! Face classification: regular, isogonal (two alternating edge lengths,
//! equal angles), rectangles, kites and the three kinds of triangle.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quaternion::Quaternion;

/// Relative tolerance for equal edge lengths.
pub const LENGTH_TOL: f64 = 1e-6;
/// Tolerance for equal interior angles, in degrees.
pub const ANGLE_TOL: f64 = 1e-6;
/// Out-of-plane deviation allowed, relative to the face circumradius.
pub const PLANARITY_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FaceShape {
    EquilateralTriangle,
    IsoscelesTriangle,
    ScaleneTriangle,
    Square,
    Rectangle,
    Kite,
    /// Regular polygon with at least five sides.
    Regular(usize),
    /// Two alternating edge lengths, all angles equal, at least six sides.
    Isogonal(usize),
    Irregular(usize),
}

fn polygon_name(n: usize) -> String {
    match n {
        3 => "triangle".into(),
        4 => "quadrilateral".into(),
        5 => "pentagon".into(),
        6 => "hexagon".into(),
        7 => "heptagon".into(),
        8 => "octagon".into(),
        9 => "nonagon".into(),
        10 => "decagon".into(),
        12 => "dodecagon".into(),
        n => format!("{n}-gon"),
    }
}

impl FaceShape {
    pub fn sides(self) -> usize {
        match self {
            FaceShape::EquilateralTriangle | FaceShape::IsoscelesTriangle | FaceShape::ScaleneTriangle => 3,
            FaceShape::Square | FaceShape::Rectangle | FaceShape::Kite => 4,
            FaceShape::Regular(n) | FaceShape::Isogonal(n) | FaceShape::Irregular(n) => n,
        }
    }

    pub fn name(self) -> String {
        match self {
            FaceShape::EquilateralTriangle => "equilateral-triangle".into(),
            FaceShape::IsoscelesTriangle => "isosceles-triangle".into(),
            FaceShape::ScaleneTriangle => "scalene-triangle".into(),
            FaceShape::Square => "square".into(),
            FaceShape::Rectangle => "rectangle".into(),
            FaceShape::Kite => "kite".into(),
            FaceShape::Regular(n) => format!("regular-{}", polygon_name(n)),
            FaceShape::Isogonal(n) => format!("isogonal-{}", polygon_name(n)),
            FaceShape::Irregular(n) => format!("irregular-{}", polygon_name(n)),
        }
    }
}

impl fmt::Display for FaceShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FaceKind {
    pub shape: FaceShape,
    /// Distinct edge lengths, ascending.
    pub edge_lengths: Vec<f64>,
    /// Interior angle at each corner, degrees.
    pub interior_angles: Vec<f64>,
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= LENGTH_TOL * a.abs().max(b.abs())
}

/// Newell normal of a closed polygon, not normalised.
pub(crate) fn newell_normal(points: &[Quaternion]) -> Quaternion {
    let n = points.len();
    (0..n).fold(Quaternion::ZERO, |acc, i| acc + points[i].cross(points[(i + 1) % n]))
}

pub(crate) fn centroid(points: &[Quaternion]) -> Quaternion {
    let sum = points.iter().fold(Quaternion::ZERO, |acc, p| acc + *p);
    sum.scale(1.0 / points.len() as f64)
}

/// Classifies an ordered, planar, convex cycle.
pub fn classify_face(cycle: &[Quaternion]) -> Result<FaceKind> {
    let n = cycle.len();
    if n < 3 {
        return Err(Error::NonConvexFace(0));
    }
    let c = centroid(cycle);
    let normal = newell_normal(cycle);
    let circumradius = cycle.iter().map(|p| p.distance(c)).fold(0.0, f64::max);
    if normal.norm() <= f64::EPSILON * circumradius * circumradius {
        return Err(Error::NonConvexFace(0));
    }
    let nh = normal.normalized();
    let deviation = cycle.iter().map(|p| (*p - c).dot(nh).abs()).fold(0.0, f64::max);
    let limit = PLANARITY_TOL * circumradius;
    if deviation > limit {
        return Err(Error::NonPlanarFace { deviation, limit });
    }

    let mut lengths = Vec::with_capacity(n);
    let mut angles = Vec::with_capacity(n);
    for i in 0..n {
        let prev = cycle[(i + n - 1) % n];
        let cur = cycle[i];
        let next = cycle[(i + 1) % n];
        let (u, v) = (prev - cur, next - cur);
        let turn = (cur - prev).cross(next - cur).dot(nh);
        if turn <= 1e-12 * circumradius * circumradius {
            return Err(Error::NonConvexFace(i));
        }
        let cos = (u.dot(v) / (u.norm() * v.norm())).clamp(-1.0, 1.0);
        angles.push(cos.acos().to_degrees());
        lengths.push(cur.distance(next));
    }

    let all_lengths_equal = lengths.iter().all(|l| close(*l, lengths[0]));
    let all_angles_equal = angles.iter().all(|a| (a - angles[0]).abs() <= ANGLE_TOL);
    let alternating = n.is_multiple_of(2) && (0..n).all(|i| close(lengths[i], lengths[(i + 2) % n]));

    let shape = if n == 3 {
        let eq = |i: usize, j: usize| close(lengths[i], lengths[j]);
        match (eq(0, 1), eq(1, 2), eq(0, 2)) {
            (true, true, _) => FaceShape::EquilateralTriangle,
            (false, false, false) => FaceShape::ScaleneTriangle,
            _ => FaceShape::IsoscelesTriangle,
        }
    } else if all_lengths_equal && all_angles_equal {
        if n == 4 {
            FaceShape::Square
        } else {
            FaceShape::Regular(n)
        }
    } else if alternating && all_angles_equal {
        if n == 4 {
            FaceShape::Rectangle
        } else {
            FaceShape::Isogonal(n)
        }
    } else if n == 4
        && ((close(lengths[0], lengths[1]) && close(lengths[2], lengths[3]))
            || (close(lengths[1], lengths[2]) && close(lengths[3], lengths[0])))
    {
        FaceShape::Kite
    } else {
        FaceShape::Irregular(n)
    };

    let mut distinct: Vec<f64> = Vec::new();
    let mut sorted = lengths.clone();
    sorted.sort_by(f64::total_cmp);
    for l in sorted {
        if distinct.last().is_none_or(|d| !close(*d, l)) {
            distinct.push(l);
        }
    }
    Ok(FaceKind {
        shape,
        edge_lengths: distinct,
        interior_angles: angles,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn polygon(pts: &[(f64, f64)]) -> Vec<Quaternion> {
        pts.iter().map(|&(x, y)| Quaternion::vector(x, y, 2.0)).collect()
    }

    fn regular(n: usize, r: f64) -> Vec<Quaternion> {
        (0..n)
            .map(|k| {
                let t = std::f64::consts::TAU * k as f64 / n as f64;
                Quaternion::vector(r * t.cos(), r * t.sin(), 1.0)
            })
            .collect()
    }

    #[test]
    fn square_and_rectangle() {
        let k = classify_face(&polygon(&[(0.0, 0.0), (2.0, 0.0), (2.0, 2.0), (0.0, 2.0)])).unwrap();
        assert_eq!(k.shape, FaceShape::Square);
        assert!(k.interior_angles.iter().all(|a| (a - 90.0).abs() < 1e-12));
        let k = classify_face(&polygon(&[(0.0, 0.0), (3.0, 0.0), (3.0, 1.0), (0.0, 1.0)])).unwrap();
        assert_eq!(k.shape, FaceShape::Rectangle);
        assert_eq!(k.edge_lengths.len(), 2);
    }

    #[test]
    fn kite_and_triangles() {
        let k = classify_face(&polygon(&[(0.0, -1.0), (1.0, 0.0), (0.0, 3.0), (-1.0, 0.0)])).unwrap();
        assert_eq!(k.shape, FaceShape::Kite);
        let eq = classify_face(&regular(3, 1.0)).unwrap();
        assert_eq!(eq.shape, FaceShape::EquilateralTriangle);
        let iso = classify_face(&polygon(&[(0.0, 0.0), (2.0, 0.0), (1.0, 3.0)])).unwrap();
        assert_eq!(iso.shape, FaceShape::IsoscelesTriangle);
        let sc = classify_face(&polygon(&[(0.0, 0.0), (4.0, 0.0), (1.0, 2.0)])).unwrap();
        assert_eq!(sc.shape, FaceShape::ScaleneTriangle);
        assert!((sc.interior_angles.iter().sum::<f64>() - 180.0).abs() < 1e-9);
    }

    #[test]
    fn regular_pentagon_angles() {
        let k = classify_face(&regular(5, 1.3)).unwrap();
        assert_eq!(k.shape, FaceShape::Regular(5));
        assert!(k.interior_angles.iter().all(|a| (a - 108.0).abs() < 1e-9));
        assert_eq!(k.shape.name(), "regular-pentagon");
    }

    #[test]
    fn isogonal_hexagon() {
        // truncate an equilateral triangle unevenly: sides alternate 1 and 2
        let mut pts = Vec::new();
        let corners = [(0.0, 0.0), (5.0, 0.0), (2.5, 5.0 * 3f64.sqrt() / 2.0)];
        for k in 0..3 {
            let (ax, ay) = corners[k];
            let (bx, by) = corners[(k + 1) % 3];
            for t in [2.0 / 5.0, 3.0 / 5.0] {
                pts.push((ax + t * (bx - ax), ay + t * (by - ay)));
            }
        }
        // corners at 2/5 and 3/5 along each side: edge 1 on the sides, 2 across the cuts
        let k = classify_face(&polygon(&pts)).unwrap();
        assert_eq!(k.shape, FaceShape::Isogonal(6));
        assert!(k.interior_angles.iter().all(|a| (a - 120.0).abs() < 1e-9));
        assert!((k.edge_lengths[0] - 1.0).abs() < 1e-12 && (k.edge_lengths[1] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_polygons() {
        let bent = vec![
            Quaternion::vector(0.0, 0.0, 0.0),
            Quaternion::vector(1.0, 0.0, 0.0),
            Quaternion::vector(1.0, 1.0, 0.1),
            Quaternion::vector(0.0, 1.0, 0.0),
        ];
        assert!(matches!(classify_face(&bent), Err(Error::NonPlanarFace { .. })));
        let dart = polygon(&[(0.0, 0.0), (2.0, 1.0), (0.0, 2.0), (0.5, 1.0)]);
        assert!(matches!(classify_face(&dart), Err(Error::NonConvexFace(_))));
    }
}
