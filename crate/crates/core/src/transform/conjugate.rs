use alloc::sync::Arc;

use crate::{ConvexModel, Result};

/// One evaluation of the conjugate: `x = g(y)` and `value = x*y - F(x)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConjugatePoint {
    pub y: f64,
    pub x: f64,
    pub value: f64,
}

/// Evaluates the conjugate at `y` by inverting the derivative.
pub fn conjugate_point(model: &ConvexModel, y: f64) -> Result<ConjugatePoint> {
    let x = model.invert_derivative(y)?;
    let value = x * y - model.value_at(x);
    Ok(ConjugatePoint { y, x, value })
}

/// The conjugate as a model of its own on `[f(lo), f(hi)]`.
///
/// Its derivative is the inverse `g` of `f` rather than a difference
/// quotient of conjugate values. The result goes through the same validation
/// as any other model.
pub fn conjugate_model(model: &ConvexModel) -> Result<ConvexModel> {
    let for_value = model.clone();
    let for_slope = model.clone();
    ConvexModel::new(
        Arc::new(move |y| {
            conjugate_point(&for_value, y)
                .map(|p| p.value)
                .unwrap_or(f64::NAN)
        }),
        Some(Arc::new(move |y| {
            for_slope.invert_derivative(y).unwrap_or(f64::NAN)
        })),
        model.slope_range(),
    )
}

/// The conjugate of the conjugate. Its domain is the original domain, since
/// the inverse maps endpoint slopes back to the endpoints exactly.
pub fn double_transform(model: &ConvexModel) -> Result<ConvexModel> {
    conjugate_model(&conjugate_model(model)?)
}

/// `|F(x) + G(f(x)) - x*f(x)|`, which vanishes in exact arithmetic.
pub fn fenchel_young_residual(model: &ConvexModel, x: f64) -> Result<f64> {
    let y = model.derivative(x)?;
    let g = conjugate_point(model, y)?.value;
    Ok((model.value_at(x) + g - x * y).abs())
}

/// `F(x) - x*f(x)`, the intercept of the tangent to the graph of `F` at `x`
/// with the vertical axis. Equals `-G(f(x))`.
pub fn tangent_intercept(model: &ConvexModel, x: f64) -> Result<f64> {
    let slope = model.derivative(x)?;
    Ok(model.value_at(x) - x * slope)
}
