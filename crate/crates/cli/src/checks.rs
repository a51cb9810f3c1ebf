//! Invariant checks run by `legendre check` and by the acceptance suite.
//!
//! Each check evaluates one identity on a fixed grid and condenses it into a
//! [`CheckReport`]. Grids are deterministic, so repeated runs give identical
//! reports.

use legendre_core::oracle::oracle_compare;
use legendre_core::transform::{
    area_report_mixed, area_report_same_sign, base_point, conjugate_point, double_transform,
    fenchel_young_residual, AreaPoint, AreaReport, QuadrantCase,
};
use legendre_core::{finite_difference, CheckReport, ConvexModel, Error, Result};
use serde::Serialize;

pub const INVOLUTION_TOL: f64 = 1e-6;
pub const FENCHEL_YOUNG_TOL: f64 = 1e-9;
pub const CONJUGATE_DERIVATIVE_TOL: f64 = 1e-6;
pub const SHIFT_TOL: f64 = 1e-12;

pub const INVOLUTION_POINTS: usize = 201;
pub const FENCHEL_YOUNG_POINTS: usize = 201;
pub const CONJUGATE_DERIVATIVE_POINTS: usize = 101;
pub const DEFAULT_AREA_POINTS: usize = 5;

/// Running maximum that keeps NaN, so a broken evaluation fails the check.
fn worst(acc: f64, err: f64) -> f64 {
    if acc.is_nan() || err.is_nan() {
        f64::NAN
    } else {
        acc.max(err)
    }
}

/// `sup |H - F|` over the inner 90% of the domain, `H` the double transform.
pub fn involution(function: &str, model: &ConvexModel, tol: f64) -> Result<CheckReport> {
    let back = double_transform(model)?;
    let mut max_err = 0.0f64;
    for x in model.domain().interior_grid(INVOLUTION_POINTS) {
        max_err = worst(max_err, (back.value(x)? - model.value(x)?).abs());
    }
    Ok(CheckReport::new(
        "involution",
        function,
        model.domain(),
        max_err,
        tol,
        INVOLUTION_POINTS,
    ))
}

/// Largest `|F(x) + G(f(x)) - x f(x)| / max(1, |x f(x)|)` on the interior grid.
pub fn fenchel_young(function: &str, model: &ConvexModel, tol: f64) -> Result<CheckReport> {
    let mut max_err = 0.0f64;
    for x in model.domain().interior_grid(FENCHEL_YOUNG_POINTS) {
        let scale = (x * model.derivative(x)?).abs().max(1.0);
        max_err = worst(max_err, fenchel_young_residual(model, x)? / scale);
    }
    Ok(CheckReport::new(
        "fenchel_young",
        function,
        model.domain(),
        max_err,
        tol,
        FENCHEL_YOUNG_POINTS,
    ))
}

/// Finite difference of conjugate values against the inverse derivative,
/// over the inner 90% of `[f(lo), f(hi)]`.
pub fn conjugate_derivative(function: &str, model: &ConvexModel, tol: f64) -> Result<CheckReport> {
    let range = model.slope_range();
    let conj = |y: f64| {
        conjugate_point(model, y)
            .map(|p| p.value)
            .unwrap_or(f64::NAN)
    };
    let mut max_err = 0.0f64;
    for y in range.interior_grid(CONJUGATE_DERIVATIVE_POINTS) {
        let fd = finite_difference(&conj, &range, y);
        let err = (fd - model.invert_derivative(y)?).abs();
        max_err = worst(max_err, err);
    }
    Ok(CheckReport::new(
        "conjugate_derivative",
        function,
        model.domain(),
        max_err,
        tol,
        CONJUGATE_DERIVATIVE_POINTS,
    ))
}

/// Relative deviation of `(F + c)*(y)` from `F*(y) - c` for every shift,
/// at the interior grid of the conjugate variable.
pub fn shift_covariance(
    function: &str,
    model: &ConvexModel,
    shifts: &[f64],
    points: usize,
    tol: f64,
) -> Result<CheckReport> {
    let ys: Vec<f64> = model.slope_range().interior_grid(points).collect();
    let mut max_err = 0.0f64;
    for &c in shifts {
        let shifted = model.shifted(c);
        for &y in &ys {
            let expected = conjugate_point(model, y)?.value - c;
            let got = conjugate_point(&shifted, y)?.value;
            let scale = got.abs().max(expected.abs()).max(1.0);
            max_err = worst(max_err, (got - expected).abs() / scale);
        }
    }
    Ok(CheckReport::new(
        "shift_covariance",
        function,
        model.domain(),
        max_err,
        tol,
        ys.len() * shifts.len(),
    ))
}

/// Oracle comparison with `samples` model samples at `grid` interior conjugate values.
pub fn oracle(
    function: &str,
    model: &ConvexModel,
    samples: usize,
    grid: usize,
) -> Result<CheckReport> {
    let ys: Vec<f64> = model.slope_range().interior_grid(grid).collect();
    Ok(oracle_compare(model, samples, &ys)?.with_function(function))
}

/// JSON shape of `check area`: the flat report plus the decomposition.
#[derive(Debug, Clone, Serialize)]
pub struct AreaCheck {
    #[serde(flatten)]
    pub report: CheckReport,
    pub case: QuadrantCase,
    pub x0: f64,
    pub y0: f64,
    pub a0: Option<f64>,
    pub c: f64,
    pub points: Vec<AreaPoint>,
}

impl AreaCheck {
    fn from_report(function: &str, model: &ConvexModel, r: AreaReport) -> Self {
        AreaCheck {
            report: CheckReport::new(
                "area",
                function,
                model.domain(),
                r.max_abs_residual(),
                r.tolerance,
                r.points.len(),
            ),
            case: r.case,
            x0: r.x0,
            y0: r.y0,
            a0: r.a0,
            c: r.c,
            points: r.points,
        }
    }
}

/// Same-sign report from the base point, or mixed-sign report when a box is given.
/// Without `xs`, five evenly spaced admissible points are used.
pub fn area(
    function: &str,
    model: &ConvexModel,
    box_corner: Option<(f64, f64)>,
    xs: Option<&[f64]>,
    quad_tol: f64,
) -> Result<AreaCheck> {
    let report = match box_corner {
        Some((x0, y0)) => {
            let defaults;
            let xs = match xs {
                Some(xs) => xs,
                None => {
                    defaults = mixed_points(model, x0, y0)?;
                    &defaults
                }
            };
            area_report_mixed(model, x0, y0, xs, quad_tol)?
        }
        None => {
            let defaults;
            let xs = match xs {
                Some(xs) => xs,
                None => {
                    defaults = same_sign_points(model)?;
                    &defaults
                }
            };
            area_report_same_sign(model, xs, quad_tol)?
        }
    };
    Ok(AreaCheck::from_report(function, model, report))
}

fn spread(a: f64, b: f64) -> Vec<f64> {
    let n = DEFAULT_AREA_POINTS;
    (1..=n)
        .map(|k| a + (b - a) * k as f64 / (n + 1) as f64)
        .collect()
}

/// Points strictly between the base point and the far end of the domain:
/// towards `hi` (quadrant PP) when there is room, else towards `lo`.
pub fn same_sign_points(model: &ConvexModel) -> Result<Vec<f64>> {
    let (x0, _) = base_point(model)?;
    let d = model.domain();
    Ok(if x0 < d.hi() {
        spread(x0, d.hi())
    } else {
        spread(x0, d.lo())
    })
}

/// Points inside the box: `0 < x < x0` with `y0 < f(x) < 0`, or the mirror
/// for `x0 < 0`.
pub fn mixed_points(model: &ConvexModel, x0: f64, y0: f64) -> Result<Vec<f64>> {
    let d = model.domain();
    let r = model.slope_range();
    // g extended by the endpoints outside [f(lo), f(hi)].
    let inverse = |y: f64| -> Result<f64> {
        if y <= r.lo() {
            Ok(d.lo())
        } else if y >= r.hi() {
            Ok(d.hi())
        } else {
            model.invert_derivative(y)
        }
    };
    // x range where f lies strictly between y0 and 0, clipped to the box.
    let (a, b) = if x0 < 0.0 {
        (x0.max(inverse(0.0)?), inverse(y0)?.min(0.0))
    } else {
        (inverse(y0)?.max(0.0), x0.min(inverse(0.0)?))
    };
    if a >= b || a.is_nan() || b.is_nan() {
        return Err(Error::BoxViolation { x: x0, y: y0 });
    }
    Ok(spread(a, b))
}
