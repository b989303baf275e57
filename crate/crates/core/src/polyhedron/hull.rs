//! Gift-wrapping convex hull with coplanar facets merged into polygons.
//!
//! Used only as an oracle for the group-theoretic face construction, so it
//! shares nothing with it beyond the vertex list.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::quaternion::Quaternion;

/// Plane distance tolerance relative to the point cloud radius.
const PLANE_TOL: f64 = 1e-8;

struct Facet {
    cycle: Vec<usize>,
    members: HashSet<usize>,
    center: Quaternion,
}

fn facet_on_plane(points: &[Quaternion], normal: Quaternion, anchor: Quaternion, tol: f64) -> Facet {
    let n = normal.normalized();
    let on: Vec<usize> = (0..points.len())
        .filter(|&i| (points[i] - anchor).dot(n).abs() <= tol)
        .collect();
    // in-plane basis, (u, w, n) right-handed
    let seed = if n.q1.abs() < 0.9 {
        Quaternion::E1
    } else {
        Quaternion::E2
    };
    let u = seed.cross(n).normalized();
    let w = n.cross(u);
    let mut pts: Vec<(f64, f64, usize)> = on.iter().map(|&i| (points[i].dot(u), points[i].dot(w), i)).collect();
    pts.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    let cross = |o: &(f64, f64, usize), a: &(f64, f64, usize), b: &(f64, f64, usize)| {
        (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
    };
    let eps = tol * tol;
    // monotone chain, counter-clockwise about n, collinear points dropped
    let mut lower: Vec<(f64, f64, usize)> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= eps {
            lower.pop();
        }
        lower.push(*p);
    }
    let mut upper: Vec<(f64, f64, usize)> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= eps {
            upper.pop();
        }
        upper.push(*p);
    }
    lower.pop();
    upper.pop();
    let cycle: Vec<usize> = lower.into_iter().chain(upper).map(|p| p.2).collect();
    let center = on
        .iter()
        .fold(Quaternion::ZERO, |acc, &i| acc + points[i])
        .scale(1.0 / on.len() as f64);
    Facet {
        cycle,
        members: on.into_iter().collect(),
        center,
    }
}

/// Facets of the convex hull of `points`, each an outward counter-clockwise
/// cycle of point indices. Facets are sorted by their index sets.
pub fn hull_oracle(points: &[Quaternion]) -> Result<Vec<Vec<usize>>> {
    let n = points.len();
    if n < 4 {
        return Err(Error::DegenerateHull);
    }
    let mean = points
        .iter()
        .fold(Quaternion::ZERO, |acc, p| acc + *p)
        .scale(1.0 / n as f64);
    let scale = points.iter().map(|p| p.distance(mean)).fold(0.0, f64::max);
    if scale == 0.0 {
        return Err(Error::DegenerateHull);
    }
    let tol = PLANE_TOL * scale;

    // first facet: a supporting plane through the point with largest x
    let i0 = (0..n)
        .max_by(|&a, &b| points[a].q1.total_cmp(&points[b].q1).then(b.cmp(&a)))
        .unwrap();
    let p0 = points[i0];
    let mut first = None;
    'search: for j in 0..n {
        for k in j + 1..n {
            if j == i0 || k == i0 {
                continue;
            }
            let normal = (points[j] - p0).cross(points[k] - p0);
            let len = normal.norm();
            if len <= tol * scale {
                continue;
            }
            let nh = normal.scale(1.0 / len);
            let (mut above, mut below) = (false, false);
            for p in points {
                let d = (*p - p0).dot(nh);
                above |= d > tol;
                below |= d < -tol;
                if above && below {
                    break;
                }
            }
            match (above, below) {
                (false, false) => return Err(Error::DegenerateHull),
                (false, true) => first = Some(nh),
                (true, false) => first = Some(-nh),
                _ => continue,
            }
            break 'search;
        }
    }
    let normal = first.ok_or(Error::DegenerateHull)?;

    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    let start = facet_on_plane(points, normal, p0, tol);
    let mut key: Vec<usize> = start.cycle.clone();
    key.sort_unstable();
    seen.insert(key);
    queue.push_back(start);

    while let Some(facet) = queue.pop_front() {
        let m = facet.cycle.len();
        for e in 0..m {
            let (ia, ib) = (facet.cycle[e], facet.cycle[(e + 1) % m]);
            let (a, b) = (points[ia], points[ib]);
            let axis = b - a;
            let oriented = |c: Quaternion| {
                let mut nrm = axis.cross(c - a);
                if nrm.dot(facet.center - a) > 0.0 {
                    nrm = -nrm;
                }
                nrm
            };
            let mut best: Option<usize> = None;
            for p in 0..n {
                if facet.members.contains(&p) {
                    continue;
                }
                match best {
                    None => best = Some(p),
                    Some(c) => {
                        let nrm = oriented(points[c]);
                        if (points[p] - a).dot(nrm) > tol * nrm.norm() {
                            best = Some(p);
                        }
                    }
                }
            }
            let Some(c) = best else { continue };
            let next = facet_on_plane(points, oriented(points[c]), a, tol);
            let mut key = next.cycle.clone();
            key.sort_unstable();
            if seen.insert(key) {
                queue.push_back(next);
            }
        }
        out.push(facet.cycle);
    }
    out.sort_by(|x, y| {
        let mut a = x.clone();
        let mut b = y.clone();
        a.sort_unstable();
        b.sort_unstable();
        a.cmp(&b)
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cube() -> Vec<Quaternion> {
        let mut v = Vec::new();
        for x in [-1.0, 1.0] {
            for y in [-1.0, 1.0] {
                for z in [-1.0, 1.0] {
                    v.push(Quaternion::vector(x, y, z));
                }
            }
        }
        v
    }

    #[test]
    fn tetrahedron() {
        let pts = vec![
            Quaternion::vector(1.0, 1.0, 1.0),
            Quaternion::vector(1.0, -1.0, -1.0),
            Quaternion::vector(-1.0, 1.0, -1.0),
            Quaternion::vector(-1.0, -1.0, 1.0),
        ];
        let f = hull_oracle(&pts).unwrap();
        assert_eq!(f.len(), 4);
        assert!(f.iter().all(|c| c.len() == 3));
    }

    #[test]
    fn cube_faces_are_merged_and_outward() {
        let pts = cube();
        let faces = hull_oracle(&pts).unwrap();
        assert_eq!(faces.len(), 6);
        for c in &faces {
            assert_eq!(c.len(), 4);
            let poly: Vec<_> = c.iter().map(|&i| pts[i]).collect();
            let normal = crate::polyhedron::face::newell_normal(&poly);
            let center = crate::polyhedron::face::centroid(&poly);
            assert!(normal.dot(center) > 0.0);
        }
    }

    #[test]
    fn interior_points_are_ignored() {
        let mut pts = cube();
        pts.push(Quaternion::vector(0.1, 0.2, -0.3));
        pts.push(Quaternion::ZERO);
        let faces = hull_oracle(&pts).unwrap();
        assert_eq!(faces.len(), 6);
        assert!(faces.iter().flatten().all(|&i| i < 8));
    }

    #[test]
    fn degenerate_inputs() {
        let flat: Vec<_> = (0..6)
            .map(|k| Quaternion::vector(k as f64, (k * k) as f64, 0.0))
            .collect();
        assert!(matches!(hull_oracle(&flat), Err(Error::DegenerateHull)));
        assert!(matches!(hull_oracle(&cube()[..3]), Err(Error::DegenerateHull)));
    }
}
