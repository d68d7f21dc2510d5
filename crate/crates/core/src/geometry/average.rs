//! Averages of crossing counts over projection directions.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{project, PairCounts, PolyLink, Vec3};
use crate::error::{Error, Result};

pub const MIN_SAMPLES: usize = 100;
const MAX_RETRIES: usize = 64;
/// Step added per retry when a grid direction is non-generic.
const GRID_JITTER: Vec3 = Vec3::new(0.6e-7, -0.8e-7, 0.3e-7);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Sampler {
    /// `samples` uniform random directions. Direction `k` draws from stream
    /// `k` of a ChaCha8 generator seeded with `seed`, so results do not
    /// depend on the number of worker threads.
    MonteCarlo { samples: usize, seed: u64 },
    /// `points` directions on a Fibonacci lattice of the sphere.
    Grid { points: usize },
}

impl Sampler {
    pub fn size(&self) -> usize {
        match *self {
            Sampler::MonteCarlo { samples, .. } => samples,
            Sampler::Grid { points } => points,
        }
    }

    pub fn check(&self) -> Result<()> {
        let size = self.size();
        if size < MIN_SAMPLES {
            return Err(Error::BadParams(format!(
                "sampler needs at least {MIN_SAMPLES} directions, got {size}"
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AverageCounts {
    pub sampler: Sampler,
    /// Directions that were non-generic and replaced.
    pub resampled: usize,
    /// Mean of `ov_{i,j}`; the diagonal holds mean self-crossings.
    pub aov: Vec<Vec<f64>>,
    pub aov_se: Vec<Vec<f64>>,
    /// Mean of `cr_{i,j}`.
    pub acr: Vec<Vec<f64>>,
    pub acr_se: Vec<Vec<f64>>,
    /// Mean total crossing number of the projections.
    pub acr_total: f64,
    pub acr_total_se: f64,
}

fn uniform_direction(rng: &mut ChaCha8Rng) -> Vec3 {
    let z: f64 = rng.gen_range(-1.0..=1.0);
    let phi: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let rho = (1.0 - z * z).max(0.0).sqrt();
    Vec3::new(rho * phi.cos(), rho * phi.sin(), z)
}

fn fibonacci_direction(k: usize, n: usize) -> Vec3 {
    let golden = std::f64::consts::PI * (3.0 - 5f64.sqrt());
    let z = 1.0 - (2.0 * k as f64 + 1.0) / n as f64;
    let rho = (1.0 - z * z).max(0.0).sqrt();
    let phi = golden * k as f64;
    Vec3::new(rho * phi.cos(), rho * phi.sin(), z)
}

fn sample_one(p: &PolyLink, sampler: Sampler, k: usize) -> Result<(PairCounts, usize)> {
    let mut rng = match sampler {
        Sampler::MonteCarlo { seed, .. } => {
            let mut r = ChaCha8Rng::seed_from_u64(seed);
            r.set_stream(k as u64);
            Some(r)
        }
        Sampler::Grid { .. } => None,
    };
    let mut last = None;
    for attempt in 0..MAX_RETRIES {
        let v = match (&mut rng, sampler) {
            (Some(r), _) => uniform_direction(r),
            (None, Sampler::Grid { points }) => {
                fibonacci_direction(k, points) + GRID_JITTER * attempt as f64
            }
            (None, Sampler::MonteCarlo { .. }) => unreachable!("monte carlo always has a generator"),
        };
        match project(p, v) {
            Ok(d) => return Ok((d.pair_counts, attempt)),
            Err(e @ Error::NonGenericDirection(_)) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.expect("at least one attempt"))
}

struct Moments {
    sum: f64,
    sum_sq: f64,
}

impl Moments {
    fn push(&mut self, x: f64) {
        self.sum += x;
        self.sum_sq += x * x;
    }

    fn mean_se(&self, n: usize) -> (f64, f64) {
        let nf = n as f64;
        let mean = self.sum / nf;
        let var = ((self.sum_sq - nf * mean * mean) / (nf - 1.0)).max(0.0);
        (mean, (var / nf).sqrt())
    }
}

/// Empirical means and standard errors of `ov`, `cr` and total crossing
/// counts over the sampler's directions.
pub fn average_counts(p: &PolyLink, sampler: Sampler) -> Result<AverageCounts> {
    sampler.check()?;
    let size = sampler.size();
    let results: Vec<(PairCounts, usize)> = (0..size)
        .into_par_iter()
        .map(|k| sample_one(p, sampler, k))
        .collect::<Result<_>>()?;
    let n = p.n_components();
    let new = || (0..n).map(|_| (0..n).map(|_| Moments { sum: 0.0, sum_sq: 0.0 }).collect::<Vec<_>>()).collect::<Vec<_>>();
    let mut ov = new();
    let mut cr = new();
    let mut total = Moments { sum: 0.0, sum_sq: 0.0 };
    let mut resampled = 0;
    for (pc, retries) in &results {
        resampled += retries;
        for i in 0..n {
            for j in 0..n {
                ov[i][j].push(pc.ov[i][j] as f64);
                cr[i][j].push(pc.cr(i, j) as f64);
            }
        }
        total.push(pc.total_crossings() as f64);
    }
    let split = |m: &Vec<Vec<Moments>>| {
        let pairs: Vec<Vec<(f64, f64)>> = m.iter().map(|row| row.iter().map(|x| x.mean_se(size)).collect()).collect();
        let means = pairs.iter().map(|r| r.iter().map(|x| x.0).collect()).collect();
        let ses = pairs.iter().map(|r| r.iter().map(|x| x.1).collect()).collect();
        (means, ses)
    };
    let (aov, aov_se) = split(&ov);
    let (acr, acr_se) = split(&cr);
    let (acr_total, acr_total_se) = total.mean_se(size);
    Ok(AverageCounts {
        sampler,
        resampled,
        aov,
        aov_se,
        acr,
        acr_se,
        acr_total,
        acr_total_se,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{circle, hopf};

    #[test]
    fn lone_circle_has_no_crossings() {
        let a = average_counts(&circle(1.0, 60), Sampler::Grid { points: 200 }).unwrap();
        assert_eq!(a.acr_total, 0.0);
    }

    #[test]
    fn hopf_has_at_least_two_crossings() {
        let h = hopf(1.0, 60).unwrap();
        let a = average_counts(&h, Sampler::MonteCarlo { samples: 500, seed: 3 }).unwrap();
        assert!(a.acr[0][1] >= 2.0);
        assert!((a.acr[0][1] - a.aov[0][1] - a.aov[1][0]).abs() < 1e-9);
    }

    #[test]
    fn seeded_runs_repeat() {
        let h = hopf(1.0, 40).unwrap();
        let s = Sampler::MonteCarlo { samples: 200, seed: 11 };
        assert_eq!(average_counts(&h, s).unwrap(), average_counts(&h, s).unwrap());
        assert!(average_counts(&h, Sampler::Grid { points: 50 }).is_err());
    }
}
