use alloc::vec::Vec;

use crate::quadrature::integrate;
use crate::{ConvexModel, Error, Result};

/// Sign pattern of a graph point `(x, y)`.
///
/// The closed same-sign quadrants take precedence, so points on an axis are
/// `PP` or `NN` and the origin is `PP`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum QuadrantCase {
    /// `x >= 0, y >= 0`
    PP,
    /// `x <= 0, y <= 0`
    NN,
    /// `x > 0, y < 0`
    PN,
    /// `x < 0, y > 0`
    NP,
}

impl QuadrantCase {
    /// `None` only for NaN input.
    pub fn classify(x: f64, y: f64) -> Option<Self> {
        if x >= 0.0 && y >= 0.0 {
            Some(QuadrantCase::PP)
        } else if x <= 0.0 && y <= 0.0 {
            Some(QuadrantCase::NN)
        } else if x > 0.0 && y < 0.0 {
            Some(QuadrantCase::PN)
        } else if x < 0.0 && y > 0.0 {
            Some(QuadrantCase::NP)
        } else {
            None
        }
    }

    /// The case of `(y, x)` given the case of `(x, y)`.
    pub fn swapped(self) -> Self {
        match self {
            QuadrantCase::PN => QuadrantCase::NP,
            QuadrantCase::NP => QuadrantCase::PN,
            same => same,
        }
    }

    pub fn is_same_sign(self) -> bool {
        matches!(self, QuadrantCase::PP | QuadrantCase::NN)
    }

    fn holds(self, x: f64, y: f64) -> bool {
        match self {
            QuadrantCase::PP => x >= 0.0 && y >= 0.0,
            QuadrantCase::NN => x <= 0.0 && y <= 0.0,
            QuadrantCase::PN => x > 0.0 && y < 0.0,
            QuadrantCase::NP => x < 0.0 && y > 0.0,
        }
    }
}

/// One point of an area report.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AreaPoint {
    pub x: f64,
    pub y: f64,
    /// `∫ f` from the base point to `x`.
    pub f_tilde: f64,
    /// `∫ g` from the base point to `y`.
    pub g_tilde: f64,
    /// Same sign: `F~ + G~ - x*y`. Mixed sign: `a(x) - A0`.
    pub residual: f64,
}

/// Area decomposition of the rectangles spanned by points on the graph of `f`.
#[derive(Debug, Clone, PartialEq)]
pub struct AreaReport {
    pub case: QuadrantCase,
    pub x0: f64,
    pub y0: f64,
    pub points: Vec<AreaPoint>,
    /// Mixed-sign constant `-x*y + F~ + G~`, fixed from the first point.
    pub a0: Option<f64>,
    /// `F(x0)`, the constant with `F = F~ + c` (since `F~(x0) = 0`).
    pub c: f64,
    /// Largest admissible `|residual|`.
    pub tolerance: f64,
}

impl AreaReport {
    pub fn max_abs_residual(&self) -> f64 {
        self.points
            .iter()
            .map(|p| p.residual.abs())
            .fold(0.0, f64::max)
    }

    pub fn passes(&self) -> bool {
        self.points
            .iter()
            .all(|p| p.residual.abs() <= self.tolerance)
    }
}

/// Residual tolerance for area reports computed with quadrature tolerance `quad_tol`.
pub fn area_tolerance(quad_tol: f64) -> f64 {
    (10.0 * quad_tol).max(1e-8)
}

/// Base point of the same-sign picture.
///
/// `(0, f(0))` when `0` is in the domain and `f(0) >= 0`; otherwise
/// `(x0, 0)` for the zero `x0 >= 0` of `f`, if there is one in the domain.
pub fn base_point(model: &ConvexModel) -> Result<(f64, f64)> {
    let domain = model.domain();
    if domain.contains(0.0) {
        let y0 = model.slope_at(0.0);
        if y0 >= 0.0 {
            return Ok((0.0, y0));
        }
    }
    if model.slope_range().contains(0.0) {
        let x0 = model.invert_derivative(0.0)?;
        if x0 >= 0.0 {
            return Ok((x0, 0.0));
        }
    }
    Err(Error::NoAxisIntersection)
}

struct Areas {
    x: f64,
    y: f64,
    f_tilde: f64,
    g_tilde: f64,
}

fn areas(model: &ConvexModel, x0: f64, y0: f64, x: f64, y: f64, tol: f64) -> Result<Areas> {
    let f_tilde = integrate(&|t| model.slope_at(t), x0, x, tol)?;
    let g_tilde = integrate(
        &|s| model.invert_derivative(s).unwrap_or(f64::NAN),
        y0,
        y,
        tol,
    )?;
    Ok(Areas {
        x,
        y,
        f_tilde,
        g_tilde,
    })
}

/// Same-sign area report: for each `x`, `F~ + G~` should equal `x*f(x)`.
///
/// All points must share the `PP` or the `NN` quadrant; integrals start at
/// [`base_point`] and are computed independently (`G~` integrates the
/// numerical inverse directly).
pub fn area_report_same_sign(model: &ConvexModel, xs: &[f64], tol: f64) -> Result<AreaReport> {
    let (x0, y0) = base_point(model)?;
    let graph = xs
        .iter()
        .map(|&x| model.derivative(x).map(|y| (x, y)))
        .collect::<Result<Vec<_>>>()?;

    let case = [QuadrantCase::PP, QuadrantCase::NN]
        .into_iter()
        .find(|case| graph.iter().all(|&(x, y)| case.holds(x, y)));
    let case = match case {
        Some(c) => c,
        None => {
            // Report the first point that leaves the quadrant of the first point.
            let first = graph
                .first()
                .and_then(|&(x, y)| QuadrantCase::classify(x, y))
                .filter(|c| c.is_same_sign())
                .unwrap_or(QuadrantCase::PP);
            let &(x, y) = graph
                .iter()
                .find(|&&(x, y)| !first.holds(x, y))
                .unwrap_or(&graph[0]);
            return Err(Error::MixedSigns { x, y });
        }
    };

    let points = graph
        .iter()
        .map(|&(x, y)| {
            let a = areas(model, x0, y0, x, y, tol)?;
            Ok(AreaPoint {
                x: a.x,
                y: a.y,
                f_tilde: a.f_tilde,
                g_tilde: a.g_tilde,
                residual: a.f_tilde + a.g_tilde - a.x * a.y,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(AreaReport {
        case,
        x0,
        y0,
        points,
        a0: None,
        c: model.value_at(x0),
        tolerance: area_tolerance(tol),
    })
}

/// Mixed-sign area report with caller-chosen box corners `(x0, y0)`.
///
/// With `x0 > 0` every point must satisfy `x0 > x > 0` and `y0 < f(x) < 0`
/// (case `PN`); with `x0 < 0` the mirrored `x0 < x < 0`, `y0 > f(x) > 0`
/// (case `NP`). For each point `a(x) = -x*y + F~ + G~` with
/// `F~ = -∫_x^x0 f` and `G~ = ∫_y0^y g`; `a` does not depend on the point,
/// and residuals are measured against the value at the first point.
pub fn area_report_mixed(
    model: &ConvexModel,
    x0: f64,
    y0: f64,
    xs: &[f64],
    tol: f64,
) -> Result<AreaReport> {
    let domain = model.domain();
    if !domain.contains(x0) {
        return Err(Error::OutOfDomain {
            x: x0,
            lo: domain.lo(),
            hi: domain.hi(),
        });
    }
    let range = model.slope_range();
    if !range.contains(y0) {
        return Err(Error::ConjugateOutOfRange {
            y: y0,
            lo: range.lo(),
            hi: range.hi(),
        });
    }
    let case = if x0 < 0.0 {
        QuadrantCase::NP
    } else {
        QuadrantCase::PN
    };
    let inside = |x: f64, y: f64| match case {
        QuadrantCase::NP => x0 < x && x < 0.0 && y0 > y && y > 0.0,
        _ => x0 > x && x > 0.0 && y0 < y && y < 0.0,
    };

    let mut graph = Vec::with_capacity(xs.len());
    for &x in xs {
        let y = if domain.contains(x) {
            model.slope_at(x)
        } else {
            f64::NAN
        };
        if !inside(x, y) {
            return Err(Error::BoxViolation { x, y });
        }
        graph.push((x, y));
    }

    let mut points = Vec::with_capacity(graph.len());
    let mut a0 = None;
    for (x, y) in graph {
        let a = areas(model, x0, y0, x, y, tol)?;
        let value = -a.x * a.y + a.f_tilde + a.g_tilde;
        let reference = *a0.get_or_insert(value);
        points.push(AreaPoint {
            x: a.x,
            y: a.y,
            f_tilde: a.f_tilde,
            g_tilde: a.g_tilde,
            residual: value - reference,
        });
    }

    Ok(AreaReport {
        case,
        x0,
        y0,
        points,
        a0,
        c: model.value_at(x0),
        tolerance: area_tolerance(tol),
    })
}
