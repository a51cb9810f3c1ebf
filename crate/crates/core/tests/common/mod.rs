#![allow(dead_code)]

use legendre_core::{ConvexModel, Interval};

pub fn dom(lo: f64, hi: f64) -> Interval {
    Interval::new(lo, hi).unwrap()
}

/// Analytic test models: name, F, f, domain.
pub fn models() -> Vec<(&'static str, ConvexModel)> {
    vec![
        ("quadratic", quadratic(-2.0, 2.0)),
        ("exp", exp(-1.0, 1.0)),
        ("quartic", quartic(0.1, 2.0)),
        (
            "cosh",
            ConvexModel::analytic(f64::cosh, f64::sinh, dom(-1.5, 1.5)).unwrap(),
        ),
        (
            "shifted-quadratic",
            ConvexModel::analytic(|x| 0.5 * x * x - x, |x| x - 1.0, dom(0.0, 3.0)).unwrap(),
        ),
        (
            "xlogx",
            ConvexModel::analytic(|x| x * x.ln() - x, f64::ln, dom(0.2, 3.0)).unwrap(),
        ),
    ]
}

pub fn quadratic(lo: f64, hi: f64) -> ConvexModel {
    ConvexModel::analytic(|x| 0.5 * x * x, |x| x, dom(lo, hi)).unwrap()
}

pub fn exp(lo: f64, hi: f64) -> ConvexModel {
    ConvexModel::analytic(f64::exp, f64::exp, dom(lo, hi)).unwrap()
}

pub fn quartic(lo: f64, hi: f64) -> ConvexModel {
    ConvexModel::analytic(|x| x.powi(4) / 4.0, |x| x.powi(3), dom(lo, hi)).unwrap()
}
