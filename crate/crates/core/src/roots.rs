/// Relative tolerance of the monotone solver, applied both to the bracket
/// width (scaled by `max(1, |x|)`) and to the residual (scaled by `max(1, |y|)`).
pub const ROOT_RTOL: f64 = 1e-12;

const MAX_ITER: usize = 200;

/// Solves `f(x) = y` for nondecreasing `f` on `[lo, hi]`, assuming
/// `f(lo) <= y <= f(hi)`.
///
/// Brent's method: inverse quadratic / secant steps, falling back to
/// bisection whenever the interpolated step leaves the bracket or fails to
/// shrink it fast enough. The returned point always lies in `[lo, hi]`.
/// Endpoint values of `y` return the matching endpoint exactly.
pub fn solve_increasing<F: Fn(f64) -> f64 + ?Sized>(f: &F, y: f64, lo: f64, hi: f64) -> f64 {
    let mut a = lo;
    let mut b = hi;
    let mut fa = f(a) - y;
    let mut fb = f(b) - y;
    if fa >= 0.0 {
        return a;
    }
    if fb <= 0.0 {
        return b;
    }
    let ftol = ROOT_RTOL * y.abs().max(1.0);

    // b is the best estimate, c the previous one, [b, c] brackets the root.
    let mut c = a;
    let mut fc = fa;
    let mut d = b - a;
    let mut e = d;

    for _ in 0..MAX_ITER {
        if (fb > 0.0) == (fc > 0.0) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }

        let xtol = ROOT_RTOL * b.abs().max(1.0);
        let half = 0.5 * (c - b);
        if fb.abs() <= ftol || (c - b).abs() <= xtol {
            break;
        }

        if e.abs() >= 0.5 * xtol && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q) = if a == c {
                (2.0 * half * s, 1.0 - s)
            } else {
                let qa = fa / fc;
                let r = fb / fc;
                (
                    s * (2.0 * half * qa * (qa - r) - (b - a) * (r - 1.0)),
                    (qa - 1.0) * (r - 1.0) * (s - 1.0),
                )
            };
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            let min1 = 3.0 * half * q - (0.5 * xtol * q).abs();
            let min2 = (e * q).abs();
            if 2.0 * p < min1.min(min2) {
                e = d;
                d = p / q;
            } else {
                d = half;
                e = d;
            }
        } else {
            d = half;
            e = d;
        }

        a = b;
        fa = fb;
        if d.abs() > 0.5 * xtol {
            b += d;
        } else {
            b += if half > 0.0 { 0.5 * xtol } else { -0.5 * xtol };
        }
        fb = f(b) - y;
    }
    b.clamp(lo, hi)
}
