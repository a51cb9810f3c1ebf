use crate::Interval;

/// Cube root of `f64::EPSILON` (2^-52), the optimal-order relative step for a
/// second-order first-derivative formula.
const CBRT_EPS: f64 = 6.055_454_452_393_343e-6;

/// Step used for finite differences at `x`: `cbrt(eps) * max(1, |x|)`.
#[inline]
pub fn fd_step(x: f64) -> f64 {
    CBRT_EPS * x.abs().max(1.0)
}

/// Second-order finite-difference derivative of `f` at `x`, never sampling
/// outside `domain`.
///
/// Centered where `x ± h` fits, otherwise the one-sided three-point formula
/// pointing into the domain.
pub fn finite_difference<F: Fn(f64) -> f64 + ?Sized>(f: &F, domain: &Interval, x: f64) -> f64 {
    let h = fd_step(x).min(0.25 * domain.width());
    if x - h >= domain.lo() && x + h <= domain.hi() {
        (f(x + h) - f(x - h)) / (2.0 * h)
    } else if x + 2.0 * h <= domain.hi() {
        (-3.0 * f(x) + 4.0 * f(x + h) - f(x + 2.0 * h)) / (2.0 * h)
    } else {
        (3.0 * f(x) - 4.0 * f(x - h) + f(x - 2.0 * h)) / (2.0 * h)
    }
}
