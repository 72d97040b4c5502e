//! Grid scan of the equimodular locus of the bipyramid family, whose
//! `λ`-set is `{q - 2, q - 3, -1}`.

use serde::{Deserialize, Serialize};

use crate::error::AnalysisError;

use super::roots::sig10;

/// Rectangle `[re_min, re_max] × [im_min, im_max]` sampled at `res`
/// points per unit on the lattice `(i + j·i)/res`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
    pub res: u32,
}

impl Grid {
    pub fn cell(&self) -> f64 {
        1.0 / self.res as f64
    }

    fn indices(lo: f64, hi: f64, res: f64) -> std::ops::RangeInclusive<i64> {
        ((lo * res).ceil() as i64)..=((hi * res).floor() as i64)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LocusPoint {
    pub re: f64,
    pub im: f64,
    /// 1-based indices of the two equimodular dominant terms.
    pub pair: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LocusScan {
    pub grid: Grid,
    pub tol: f64,
    pub points: Vec<LocusPoint>,
    /// Largest real locus point.
    pub q_c: Option<f64>,
    /// Best three-way equimodular grid point in each half plane.
    pub triple_points: Vec<(f64, f64)>,
}

fn magnitudes(re: f64, im: f64) -> [f64; 3] {
    [(re - 2.0).hypot(im), (re - 3.0).hypot(im), 1.0]
}

/// Classifies a single point: the dominant pair if the two largest
/// magnitudes agree within `tol`.
pub fn b_locus_pair(re: f64, im: f64, tol: f64) -> Option<(usize, usize)> {
    let m = magnitudes(re, im);
    let mut idx = [0usize, 1, 2];
    idx.sort_by(|&a, &b| m[b].total_cmp(&m[a]).then(a.cmp(&b)));
    ((m[idx[0]] - m[idx[1]]).abs() <= tol).then(|| {
        let (a, b) = (idx[0].min(idx[1]), idx[0].max(idx[1]));
        (a + 1, b + 1)
    })
}

/// Scans the grid. `tol` defaults to half a cell.
pub fn b_locus_scan(grid: Grid, tol: Option<f64>) -> Result<LocusScan, AnalysisError> {
    if grid.res < 16 {
        return Err(AnalysisError::InvalidParameter(format!("resolution must be >= 16, got {}", grid.res)));
    }
    if !(grid.re_min <= grid.re_max && grid.im_min <= grid.im_max) {
        return Err(AnalysisError::InvalidParameter("empty grid rectangle".into()));
    }
    let res = grid.res as f64;
    let tol = tol.unwrap_or(0.5 / res);
    let mut points = Vec::new();
    let mut q_c: Option<f64> = None;
    // (spread, re, im) per half plane
    let mut best: [Option<(f64, f64, f64)>; 2] = [None, None];
    for j in Grid::indices(grid.im_min, grid.im_max, res) {
        let im = j as f64 / res;
        for i in Grid::indices(grid.re_min, grid.re_max, res) {
            let re = i as f64 / res;
            if let Some(pair) = b_locus_pair(re, im, tol) {
                points.push(LocusPoint { re, im, pair });
                if j == 0 {
                    q_c = Some(q_c.map_or(re, |q: f64| q.max(re)));
                }
            }
            if j != 0 {
                let m = magnitudes(re, im);
                let spread = m.iter().cloned().fold(f64::MIN, f64::max) - m.iter().cloned().fold(f64::MAX, f64::min);
                let h = usize::from(j < 0);
                if best[h].is_none_or(|b| spread < b.0) {
                    best[h] = Some((spread, re, im));
                }
            }
        }
    }
    let triple_points = best.iter().flatten().filter(|b| b.0 <= 2.0 / res).map(|b| (b.1, b.2)).collect();
    Ok(LocusScan { grid, tol, points, q_c, triple_points })
}

/// Rows `re,im,pair` with the pair written as `i-j`.
pub fn locus_csv(scan: &LocusScan) -> String {
    let mut s = String::from("re,im,pair\n");
    for p in &scan.points {
        s.push_str(&format!("{},{},{}-{}\n", sig10(p.re), sig10(p.im), p.pair.0, p.pair.1));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_points() {
        assert_eq!(b_locus_pair(2.5, 2.0, 1e-9), Some((1, 2)));
        assert_eq!(b_locus_pair(4.0, 0.0, 0.01), None);
        assert_eq!(b_locus_pair(3.0, 0.0, 1e-12), Some((1, 3)));
    }

    #[test]
    fn small_scan() {
        let grid = Grid { re_min: 1.0, re_max: 4.0, im_min: -2.0, im_max: 2.0, res: 16 };
        let scan = b_locus_scan(grid, None).unwrap();
        assert_eq!(scan.q_c, Some(3.0));
        assert_eq!(scan.triple_points.len(), 2);
        for p in &scan.points {
            assert_eq!(b_locus_pair(p.re, p.im, scan.tol), Some(p.pair));
        }
        assert!(b_locus_scan(Grid { res: 8, ..grid }, None).is_err());
    }
}
