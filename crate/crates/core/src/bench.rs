//! Growth-rate measurements for `Δ` construction and the maximizer.
//!
//! Only the fitted log-log slope is meaningful; absolute times depend on the
//! machine.

use std::hint::black_box;
use std::time::{Duration, Instant};

use crate::distributions::{EmpiricalSample, Sampler};
use crate::error::Result;
use crate::gfm::{delta_from_sample, gfm_maximize};
use crate::simulate::{derive_seed, make_independent_model};

pub const DEFAULT_SIZES: [usize; 4] = [50, 100, 200, 400];

/// Upper limit on the fitted exponent of the maximizer.
pub const GFM_EXPONENT_LIMIT: f64 = 2.6;

/// Observations in the sample each `Δ` is built from.
const SAMPLE_SIZE: usize = 200;

const MIN_BATCH: Duration = Duration::from_millis(20);
const ROUNDS: usize = 5;

#[derive(Debug, Clone, PartialEq)]
pub struct BenchPoint {
    pub m: usize,
    /// Seconds per `Δ` construction.
    pub delta_secs: f64,
    /// Seconds per maximization.
    pub gfm_secs: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub points: Vec<BenchPoint>,
    pub delta_exponent: f64,
    pub gfm_exponent: f64,
}

impl BenchReport {
    pub fn within_limit(&self) -> bool {
        self.gfm_exponent < GFM_EXPONENT_LIMIT
    }
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn fit_loglog_slope(xs: &[f64], ys: &[f64]) -> f64 {
    assert_eq!(xs.len(), ys.len());
    assert!(xs.len() >= 2, "need at least two points");
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let n = lx.len() as f64;
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = lx.iter().map(|x| (x - mx).powi(2)).sum();
    sxy / sxx
}

/// Median over rounds of the per-call time, each round batching calls until
/// it lasts at least [`MIN_BATCH`].
fn time_per_call(mut f: impl FnMut()) -> f64 {
    let mut per_call: Vec<f64> = (0..ROUNDS)
        .map(|_| {
            let start = Instant::now();
            let mut calls = 0u32;
            while start.elapsed() < MIN_BATCH || calls == 0 {
                f();
                calls += 1;
            }
            start.elapsed().as_secs_f64() / calls as f64
        })
        .collect();
    per_call.sort_by(f64::total_cmp);
    per_call[ROUNDS / 2]
}

fn workload(m: usize, seed: u64) -> Result<EmpiricalSample> {
    let model = make_independent_model(m, derive_seed(&[seed, m as u64]))?;
    model.sample(SAMPLE_SIZE, derive_seed(&[seed, m as u64, 1]))
}

pub fn run_bench(sizes: &[usize], seed: u64) -> Result<BenchReport> {
    let mut points = Vec::with_capacity(sizes.len());
    for &m in sizes {
        let sample = workload(m, seed)?;
        let delta_secs = time_per_call(|| {
            black_box(delta_from_sample(black_box(&sample)));
        });
        let delta = delta_from_sample(&sample);
        let gfm_secs = time_per_call(|| {
            black_box(gfm_maximize(black_box(&delta)));
        });
        log::debug!("m={m} delta={delta_secs:e}s gfm={gfm_secs:e}s");
        points.push(BenchPoint {
            m,
            delta_secs,
            gfm_secs,
        });
    }
    let xs: Vec<f64> = points.iter().map(|p| p.m as f64).collect();
    let fit = |ys: Vec<f64>| fit_loglog_slope(&xs, &ys);
    Ok(BenchReport {
        delta_exponent: fit(points.iter().map(|p| p.delta_secs).collect()),
        gfm_exponent: fit(points.iter().map(|p| p.gfm_secs).collect()),
        points,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slope_of_power_laws() {
        let xs = [50.0, 100.0, 200.0, 400.0];
        let ys: Vec<f64> = xs.iter().map(|x: &f64| 3e-9 * x.powi(2)).collect();
        assert!((fit_loglog_slope(&xs, &ys) - 2.0).abs() < 1e-12);
        let ys: Vec<f64> = xs.iter().map(|x: &f64| 7.0 * x.powf(1.5)).collect();
        assert!((fit_loglog_slope(&xs, &ys) - 1.5).abs() < 1e-12);
    }

    #[test]
    fn small_run_reports_every_size() {
        let r = run_bench(&[8, 16], 1).unwrap();
        assert_eq!(r.points.len(), 2);
        assert!(r
            .points
            .iter()
            .all(|p| p.gfm_secs > 0.0 && p.delta_secs > 0.0));
        assert!(r.gfm_exponent.is_finite());
    }
}
