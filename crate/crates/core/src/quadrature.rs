//! Adaptive Simpson quadrature.

use crate::{Error, Result};

/// Default absolute tolerance for [`integrate`].
pub const DEFAULT_TOL: f64 = 1e-9;

/// Maximum recursion depth before [`Error::MaxDepthExceeded`].
pub const MAX_DEPTH: u32 = 60;

/// Adaptive Simpson estimate of `∫_lo^hi fun`, with absolute error `tol` on
/// smooth integrands.
///
/// `lo > hi` is allowed and yields the negated integral; `lo == hi` gives 0.
/// Subintervals are always visited left to right, so the summation order (and
/// the result) is deterministic.
pub fn integrate<F: Fn(f64) -> f64 + ?Sized>(fun: &F, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    if lo == hi {
        return Ok(0.0);
    }
    if lo > hi {
        return integrate(fun, hi, lo, tol).map(|v| -v);
    }
    let eval = |x: f64| -> Result<f64> {
        let v = fun(x);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::NonFiniteValue { x })
        }
    };
    let mid = 0.5 * (lo + hi);
    let (fa, fm, fb) = (eval(lo)?, eval(mid)?, eval(hi)?);
    let whole = simpson(lo, hi, fa, fm, fb);
    refine(
        &eval,
        Panel {
            a: lo,
            b: hi,
            fa,
            fm,
            fb,
            whole,
        },
        tol,
        MAX_DEPTH,
    )
}

#[derive(Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
}

#[inline]
fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

fn refine<E: Fn(f64) -> Result<f64>>(eval: &E, p: Panel, tol: f64, depth: u32) -> Result<f64> {
    let m = 0.5 * (p.a + p.b);
    let lm = 0.5 * (p.a + m);
    let rm = 0.5 * (m + p.b);
    let flm = eval(lm)?;
    let frm = eval(rm)?;
    let left = simpson(p.a, m, p.fa, flm, p.fm);
    let right = simpson(m, p.b, p.fm, frm, p.fb);
    let delta = left + right - p.whole;
    if delta.abs() <= 15.0 * tol {
        return Ok(left + right + delta / 15.0);
    }
    if depth == 0 || !(p.a < lm && lm < m && m < rm && rm < p.b) {
        return Err(Error::MaxDepthExceeded { lo: p.a, hi: p.b });
    }
    let l = refine(
        eval,
        Panel {
            a: p.a,
            b: m,
            fa: p.fa,
            fm: flm,
            fb: p.fm,
            whole: left,
        },
        0.5 * tol,
        depth - 1,
    )?;
    let r = refine(
        eval,
        Panel {
            a: m,
            b: p.b,
            fa: p.fm,
            fm: frm,
            fb: p.fb,
            whole: right,
        },
        0.5 * tol,
        depth - 1,
    )?;
    Ok(l + r)
}
