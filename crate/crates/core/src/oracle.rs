//! Brute-force discrete conjugate over sampled function values.
//!
//! Nothing here inverts a derivative: the conjugate at `y` is the plain
//! maximum of `x_i*y - F_i` over the samples. That makes it an independent
//! reference for [`crate::transform::conjugate_point`].

use alloc::vec::Vec;

use crate::diff::finite_difference;
use crate::transform::conjugate_point;
use crate::{CheckReport, ConvexModel, Error, Result, VALIDATION_SAMPLES};

/// Slack added to the sampling error bound for root-finder error in the
/// reference value.
pub const BOUND_SLACK: f64 = 1e-9;

/// Samples `(x_i, F_i)` with strictly increasing `x_i`, at least two of them.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction {
    samples: Vec<(f64, f64)>,
}

impl SampledFunction {
    pub fn new(samples: Vec<(f64, f64)>) -> Result<Self> {
        let increasing = samples.windows(2).all(|w| w[0].0 < w[1].0);
        if samples.len() < 2 || !increasing {
            return Err(Error::InvalidSamples);
        }
        Ok(SampledFunction { samples })
    }

    pub fn samples(&self) -> &[(f64, f64)] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }
}

/// `n` equally spaced samples of `F` over the model's domain, endpoints included.
pub fn sample_model(model: &ConvexModel, n: usize) -> Result<SampledFunction> {
    if n < 2 {
        return Err(Error::InvalidSamples);
    }
    let samples = model
        .domain()
        .linspace(n)
        .map(|x| {
            let v = model.value_at(x);
            if v.is_finite() {
                Ok((x, v))
            } else {
                Err(Error::NonFiniteValue { x })
            }
        })
        .collect::<Result<Vec<_>>>()?;
    SampledFunction::new(samples)
}

/// `max_i (x_i*y - F_i)`, scanning left to right; ties keep the smallest `x_i`.
pub fn discrete_conjugate(s: &SampledFunction, y: f64) -> f64 {
    let mut best = f64::NEG_INFINITY;
    for &(x, v) in &s.samples {
        let candidate = x * y - v;
        if candidate.total_cmp(&best).is_gt() {
            best = candidate;
        }
    }
    best
}

/// Largest finite-difference estimate of `f'` over the validation grid.
pub fn max_curvature(model: &ConvexModel) -> f64 {
    let domain = model.domain();
    let slope = |x: f64| model.slope_at(x);
    domain
        .linspace(VALIDATION_SAMPLES)
        .map(|x| finite_difference(&slope, &domain, x))
        .fold(0.0, f64::max)
}

/// Sampling error bound `M*h^2/8 + 1e-9` for `n` uniform samples, with
/// `h = width/(n-1)` and `M` from [`max_curvature`].
pub fn oracle_bound(model: &ConvexModel, n: usize) -> f64 {
    let h = model.domain().width() / (n.max(2) - 1) as f64;
    max_curvature(model) * h * h / 8.0 + BOUND_SLACK
}

/// Compares the inversion-based conjugate with the discrete maximum over `n`
/// samples at every `y` in `y_grid`, which must lie strictly inside
/// `[f(lo), f(hi)]`.
///
/// The returned report has an empty `function` label; set it with
/// [`CheckReport::with_function`].
pub fn oracle_compare(model: &ConvexModel, n: usize, y_grid: &[f64]) -> Result<CheckReport> {
    let range = model.slope_range();
    if let Some(&y) = y_grid.iter().find(|&&y| !range.contains_interior(y)) {
        return Err(Error::ConjugateOutOfRange {
            y,
            lo: range.lo(),
            hi: range.hi(),
        });
    }
    let sampled = sample_model(model, n)?;
    let mut max_err = 0.0f64;
    for &y in y_grid {
        let exact = conjugate_point(model, y)?.value;
        let err = (exact - discrete_conjugate(&sampled, y)).abs();
        max_err = max_err.max(err);
    }
    Ok(CheckReport::new(
        "oracle",
        "",
        model.domain(),
        max_err,
        oracle_bound(model, n),
        y_grid.len(),
    ))
}
