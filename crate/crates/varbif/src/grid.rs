//! Uniform tensor grids on intervals and rectangles with homogeneous
//! Dirichlet boundary: only interior nodes carry unknowns.

use crate::{Error, Result};

/// Computational domain: an interval or an axis-aligned rectangle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Domain {
    Interval { a: f64, b: f64 },
    Rectangle { ax: f64, bx: f64, ay: f64, by: f64 },
}

impl Domain {
    pub fn interval(a: f64, b: f64) -> Result<Self> {
        if !(a < b) || !a.is_finite() || !b.is_finite() {
            return Err(Error::Config(format!("invalid interval ({a}, {b})")));
        }
        Ok(Domain::Interval { a, b })
    }

    pub fn rectangle(ax: f64, bx: f64, ay: f64, by: f64) -> Result<Self> {
        if !(ax < bx) || !(ay < by) || ![ax, bx, ay, by].iter().all(|v| v.is_finite()) {
            return Err(Error::Config(format!(
                "invalid rectangle ({ax}, {bx}) x ({ay}, {by})"
            )));
        }
        Ok(Domain::Rectangle { ax, bx, ay, by })
    }

    pub fn dimension(&self) -> usize {
        match self {
            Domain::Interval { .. } => 1,
            Domain::Rectangle { .. } => 2,
        }
    }

    /// Lower corner per axis.
    pub fn lower(&self) -> Vec<f64> {
        match *self {
            Domain::Interval { a, .. } => vec![a],
            Domain::Rectangle { ax, ay, .. } => vec![ax, ay],
        }
    }

    /// Axis lengths.
    pub fn lengths(&self) -> Vec<f64> {
        match *self {
            Domain::Interval { a, b } => vec![b - a],
            Domain::Rectangle { ax, bx, ay, by } => vec![bx - ax, by - ay],
        }
    }
}

/// Uniform grid over a [`Domain`]. `resolution[axis]` counts cells, so each
/// axis carries `resolution + 1` nodes of which `resolution - 1` are interior.
#[derive(Debug, Clone)]
pub struct Grid {
    pub domain: Domain,
    /// Cells per axis.
    pub resolution: Vec<usize>,
    /// Mesh width per axis.
    pub h: Vec<f64>,
}

/// Smallest admissible resolution per axis.
pub const MIN_RESOLUTION: usize = 4;

/// Builds a uniform grid; rejects resolutions below [`MIN_RESOLUTION`].
pub fn build_grid(domain: Domain, resolution: &[usize]) -> Result<Grid> {
    let dim = domain.dimension();
    if resolution.len() != dim {
        return Err(Error::Config(format!(
            "resolution has {} entries for a {}-dimensional domain",
            resolution.len(),
            dim
        )));
    }
    for &r in resolution {
        if r < MIN_RESOLUTION {
            return Err(Error::Config(format!(
                "resolution {r} below minimum {MIN_RESOLUTION}"
            )));
        }
    }
    let h = domain
        .lengths()
        .iter()
        .zip(resolution)
        .map(|(len, &r)| len / r as f64)
        .collect();
    Ok(Grid {
        domain,
        resolution: resolution.to_vec(),
        h,
    })
}

impl Grid {
    pub fn dimension(&self) -> usize {
        self.domain.dimension()
    }

    /// Interior nodes per axis.
    pub fn interior_per_axis(&self) -> Vec<usize> {
        self.resolution.iter().map(|&r| r - 1).collect()
    }

    /// Total interior node count.
    pub fn interior_nodes(&self) -> usize {
        self.interior_per_axis().iter().product()
    }

    /// Flat interior index of the interior multi-index `mi` (entries in
    /// `1..resolution[axis]`, i.e. node coordinates on the full grid).
    /// Returns `None` for boundary or out-of-range nodes.
    pub fn interior_index(&self, mi: &[usize]) -> Option<usize> {
        let mut flat = 0usize;
        // y-major in 2D: flat = (iy-1)*(nx-1) + (ix-1)
        for axis in (0..self.dimension()).rev() {
            let i = mi[axis];
            if i == 0 || i >= self.resolution[axis] {
                return None;
            }
            flat = flat * (self.resolution[axis] - 1) + (i - 1);
        }
        Some(flat)
    }

    /// Inverse of [`Grid::interior_index`].
    pub fn interior_multi_index(&self, flat: usize) -> Vec<usize> {
        let mut rest = flat;
        let mut mi = vec![0usize; self.dimension()];
        for axis in 0..self.dimension() {
            let w = self.resolution[axis] - 1;
            mi[axis] = rest % w + 1;
            rest /= w;
        }
        mi
    }

    /// Physical coordinates of the full-grid node `mi` (entries in
    /// `0..=resolution[axis]`).
    pub fn node_coords(&self, mi: &[usize]) -> Vec<f64> {
        self.domain
            .lower()
            .iter()
            .zip(&self.h)
            .zip(mi)
            .map(|((lo, h), &i)| lo + h * i as f64)
            .collect()
    }

    /// Iterates over all cells as the multi-index of each cell's lower corner
    /// (entries in `0..resolution[axis]`).
    pub fn cells(&self) -> Vec<Vec<usize>> {
        let dim = self.dimension();
        let mut out = Vec::with_capacity(self.resolution.iter().product());
        let mut idx = vec![0usize; dim];
        loop {
            out.push(idx.clone());
            let mut axis = 0;
            loop {
                idx[axis] += 1;
                if idx[axis] < self.resolution[axis] {
                    break;
                }
                idx[axis] = 0;
                axis += 1;
                if axis == dim {
                    return out;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn interval_interior_nodes() {
        let g = build_grid(Domain::interval(0.0, PI).unwrap(), &[4]).unwrap();
        assert_eq!(g.interior_nodes(), 3);
        let xs: Vec<f64> = (1..4).map(|i| g.node_coords(&[i])[0]).collect();
        assert!((xs[0] - PI / 4.0).abs() < 1e-15);
        assert!((xs[1] - PI / 2.0).abs() < 1e-15);
        assert!((xs[2] - 3.0 * PI / 4.0).abs() < 1e-15);
    }

    #[test]
    fn rectangle_interior_nodes() {
        let g = build_grid(Domain::rectangle(0.0, PI, 0.0, PI).unwrap(), &[4, 4]).unwrap();
        assert_eq!(g.interior_nodes(), 9);
    }

    #[test]
    fn below_minimum_resolution_rejected() {
        let err = build_grid(Domain::interval(0.0, 1.0).unwrap(), &[2]).unwrap_err();
        assert!(matches!(err, Error::Config(_)));
    }

    #[test]
    fn interior_bijection_roundtrip() {
        let g = build_grid(Domain::rectangle(0.0, 1.0, 0.0, 2.0).unwrap(), &[5, 7]).unwrap();
        for flat in 0..g.interior_nodes() {
            let mi = g.interior_multi_index(flat);
            assert_eq!(g.interior_index(&mi), Some(flat));
        }
        assert_eq!(g.interior_index(&[0, 3]), None);
        assert_eq!(g.interior_index(&[5, 3]), None);
    }
}
