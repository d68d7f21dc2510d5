use rayon::prelude::*;
use serde::Serialize;

use super::{PolyLink, Vec3};
use crate::error::{Error, Result};

pub const DEFAULT_RESOLUTION: usize = 512;
pub const MIN_RESOLUTION: usize = 16;

/// Gauss double integrals over a pair of components.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GaussIntegral {
    /// Signed integral; close to the linking number.
    pub lk_real: f64,
    /// Integral of the absolute integrand: the average over directions of
    /// the number of crossings with `i` over `j`.
    pub aov: f64,
    pub resolution: usize,
}

/// `resolution` equally spaced arc-length midpoints on component `c`, each
/// with its tangent scaled to the sample's arc length.
fn samples(p: &PolyLink, c: usize, resolution: usize) -> Vec<(Vec3, Vec3)> {
    let poly = &p.components()[c];
    let total = p.component_length(c);
    let h = total / resolution as f64;
    let mut out = Vec::with_capacity(resolution);
    let mut k = 0;
    let mut start = 0.0;
    let (mut a, mut b) = p.segment(c, 0);
    let mut len = (b - a).norm();
    for m in 0..resolution {
        let s = (m as f64 + 0.5) * h;
        while s > start + len && k + 1 < poly.len() {
            start += len;
            k += 1;
            (a, b) = p.segment(c, k);
            len = (b - a).norm();
        }
        let u = ((s - start) / len).clamp(0.0, 1.0);
        out.push((a.lerp(b, u), (b - a) * (h / len)));
    }
    out
}

/// Composite midpoint rule in arc length for the Gauss linking integral of
/// components `i` and `j`, with and without absolute value.
pub fn gauss_pair_integral(p: &PolyLink, i: usize, j: usize, resolution: usize) -> Result<GaussIntegral> {
    let n = p.n_components();
    for c in [i, j] {
        if c >= n {
            return Err(Error::ComponentRange { index: c, n });
        }
    }
    if i == j {
        return Err(Error::BadParams("Gauss pair integral needs two distinct components".into()));
    }
    if resolution < MIN_RESOLUTION {
        return Err(Error::ResolutionTooLow {
            got: resolution,
            min: MIN_RESOLUTION,
        });
    }
    let si = samples(p, i, resolution);
    let sj = samples(p, j, resolution);
    let (signed, absolute) = si
        .par_iter()
        .map(|&(x, dx)| {
            let mut acc = (0.0, 0.0);
            for &(y, dy) in &sj {
                let r = x - y;
                let d = r.norm();
                let f = dx.cross(dy).dot(r) / (d * d * d);
                acc.0 += f;
                acc.1 += f.abs();
            }
            acc
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold((0.0, 0.0), |a, b| (a.0 + b.0, a.1 + b.1));
    let norm = 4.0 * std::f64::consts::PI;
    Ok(GaussIntegral {
        lk_real: signed / norm,
        aov: absolute / norm,
        resolution,
    })
}
