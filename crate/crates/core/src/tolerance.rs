//! Tolerances and tolerant point lookup.
//!
//! All coordinates are irrational (√2, τ, σ), so equality is always "within
//! ε". [`TolerantIndex`] hashes points on a grid much coarser than ε and
//! registers each point in every cell its ε-ball touches, which makes a
//! single-cell lookup exact.

use std::collections::HashMap;
use std::sync::OnceLock;

/// Default equality tolerance.
pub const DEFAULT_EPSILON: f64 = 1e-9;

const GRID_FACTOR: f64 = 1024.0;

/// Global equality tolerance, `POLY_EPSILON` if set and valid.
pub fn epsilon() -> f64 {
    static EPS: OnceLock<f64> = OnceLock::new();
    *EPS.get_or_init(|| {
        std::env::var("POLY_EPSILON")
            .ok()
            .and_then(|s| s.trim().parse::<f64>().ok())
            .filter(|e| e.is_finite() && *e > 0.0 && *e < 1e-3)
            .unwrap_or(DEFAULT_EPSILON)
    })
}

/// Index of points in `R^N` with lookup by max-norm distance below `tol`.
#[derive(Debug, Clone)]
pub struct TolerantIndex<const N: usize> {
    tol: f64,
    step: f64,
    points: Vec<[f64; N]>,
    cells: HashMap<[i64; N], Vec<usize>>,
}

impl<const N: usize> TolerantIndex<N> {
    pub fn new(tol: f64) -> Self {
        Self {
            tol,
            step: tol * GRID_FACTOR,
            points: Vec::new(),
            cells: HashMap::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[[f64; N]] {
        &self.points
    }

    fn cell(&self, p: &[f64; N]) -> [i64; N] {
        let mut key = [0i64; N];
        for (k, x) in key.iter_mut().zip(p) {
            *k = (x / self.step).round() as i64;
        }
        key
    }

    pub fn find(&self, p: &[f64; N]) -> Option<usize> {
        let bucket = self.cells.get(&self.cell(p))?;
        bucket
            .iter()
            .copied()
            .find(|&i| self.points[i].iter().zip(p).all(|(a, b)| (a - b).abs() < self.tol))
    }

    /// Returns the index of `p`, inserting it if absent. The flag is true
    /// when a new point was added.
    pub fn insert(&mut self, p: [f64; N]) -> (usize, bool) {
        if let Some(i) = self.find(&p) {
            return (i, false);
        }
        let idx = self.points.len();
        // every cell reachable within tol, at most two per axis
        let mut keys: Vec<[i64; N]> = vec![[0; N]];
        for axis in 0..N {
            let lo = ((p[axis] - self.tol) / self.step).round() as i64;
            let hi = ((p[axis] + self.tol) / self.step).round() as i64;
            let mut next = Vec::with_capacity(keys.len() * 2);
            for k in &keys {
                for c in lo..=hi {
                    let mut k = *k;
                    k[axis] = c;
                    next.push(k);
                }
            }
            keys = next;
        }
        for k in keys {
            self.cells.entry(k).or_default().push(idx);
        }
        self.points.push(p);
        (idx, true)
    }
}

/// Ordering key that treats coordinates within `eps` as equal.
pub(crate) fn coarse_cmp(a: &[f64], b: &[f64], eps: f64) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b) {
        if (x - y).abs() >= eps {
            return x.total_cmp(y);
        }
    }
    std::cmp::Ordering::Equal
}

/// Replaces values within `eps` of zero by `0.0` (also drops `-0.0`).
pub fn snap_zero(x: f64, eps: f64) -> f64 {
    if x.abs() < eps {
        0.0
    } else {
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_points_across_cell_boundaries() {
        let mut idx = TolerantIndex::<2>::new(1e-9);
        let step = 1e-9 * GRID_FACTOR;
        // sits right on a rounding boundary
        let p = [0.5 * step, 1.0];
        let (i, fresh) = idx.insert(p);
        assert!(fresh);
        assert_eq!(idx.find(&[0.5 * step + 4e-10, 1.0]), Some(i));
        assert_eq!(idx.find(&[0.5 * step - 4e-10, 1.0 + 1e-10]), Some(i));
        assert_eq!(idx.find(&[0.5 * step + 2e-9, 1.0]), None);
        let (j, fresh) = idx.insert([0.5 * step - 1e-10, 1.0]);
        assert_eq!((j, fresh), (i, false));
        assert_eq!(idx.len(), 1);
    }

    #[test]
    fn distinct_points_stay_distinct() {
        let mut idx = TolerantIndex::<3>::new(1e-9);
        for i in 0..100 {
            let x = i as f64 * 1e-6;
            assert!(idx.insert([x, -x, 0.0]).1);
        }
        assert_eq!(idx.len(), 100);
    }
}
