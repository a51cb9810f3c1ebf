use alloc::sync::Arc;
use core::fmt;

use crate::diff::finite_difference;
use crate::roots::solve_increasing;
use crate::{Error, Interval, Result};

/// Shared, thread-safe real function.
pub type RealFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Number of equally spaced samples (endpoints included) used to validate a model.
pub const VALIDATION_SAMPLES: usize = 1001;

/// Relative tolerance of the analytic-vs-finite-difference derivative cross-check.
const CROSS_CHECK_RTOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DerivativeKind {
    Analytic,
    FiniteDifference,
}

/// A function `F` on a compact domain whose derivative `f = F'` is strictly
/// increasing, so that `f` can be inverted on `[f(lo), f(hi)]`.
///
/// Immutable once built; cloning shares the underlying closures.
#[derive(Clone)]
pub struct ConvexModel {
    domain: Interval,
    value: RealFn,
    slope: Option<RealFn>,
    slope_range: Interval,
    kind: DerivativeKind,
}

impl fmt::Debug for ConvexModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ConvexModel")
            .field("domain", &self.domain)
            .field("slope_range", &self.slope_range)
            .field("kind", &self.kind)
            .finish_non_exhaustive()
    }
}

impl ConvexModel {
    /// Builds and validates a model.
    ///
    /// Without `slope`, `f` is taken from finite differences of `value`. The
    /// model is checked on [`VALIDATION_SAMPLES`] equally spaced points: every
    /// value must be finite, `f` must increase strictly between neighbours,
    /// and a supplied `slope` must match finite differences of `value` at the
    /// interior samples.
    pub fn new(value: RealFn, slope: Option<RealFn>, domain: Interval) -> Result<Self> {
        let kind = if slope.is_some() {
            DerivativeKind::Analytic
        } else {
            DerivativeKind::FiniteDifference
        };
        // The range is filled in once the endpoint slopes are known.
        let mut model = ConvexModel {
            domain,
            value,
            slope,
            slope_range: domain,
            kind,
        };
        model.validate()?;
        let lo = model.slope_at(domain.lo());
        let hi = model.slope_at(domain.hi());
        model.slope_range = Interval::new(lo, hi).map_err(|_| Error::NonMonotoneDerivative {
            left: domain.lo(),
            right: domain.hi(),
            f_left: lo,
            f_right: hi,
        })?;
        Ok(model)
    }

    /// Model with analytic derivative from plain closures.
    pub fn analytic<F, D>(value: F, slope: D, domain: Interval) -> Result<Self>
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
        D: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        Self::new(Arc::new(value), Some(Arc::new(slope)), domain)
    }

    /// Model whose derivative comes from finite differences of `value`.
    pub fn finite_difference<F>(value: F, domain: Interval) -> Result<Self>
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        Self::new(Arc::new(value), None, domain)
    }

    fn validate(&self) -> Result<()> {
        let mut prev: Option<(f64, f64)> = None;
        for x in self.domain.linspace(VALIDATION_SAMPLES) {
            let fx = (self.value)(x);
            let dfx = self.slope_at(x);
            if !fx.is_finite() || !dfx.is_finite() {
                return Err(Error::NonFiniteValue { x });
            }
            if let Some((px, pdf)) = prev {
                if pdf >= dfx {
                    return Err(Error::NonMonotoneDerivative {
                        left: px,
                        right: x,
                        f_left: pdf,
                        f_right: dfx,
                    });
                }
            }
            if self.kind == DerivativeKind::Analytic && self.domain.contains_interior(x) {
                let estimated = finite_difference(&*self.value, &self.domain, x);
                let agrees = (dfx - estimated).abs() <= CROSS_CHECK_RTOL * dfx.abs().max(1.0);
                if !agrees {
                    return Err(Error::DerivativeMismatch {
                        x,
                        supplied: dfx,
                        estimated,
                    });
                }
            }
            prev = Some((x, dfx));
        }
        Ok(())
    }

    #[inline]
    pub fn domain(&self) -> Interval {
        self.domain
    }

    /// `[f(lo), f(hi)]`, the set of conjugate variables this model determines.
    #[inline]
    pub fn slope_range(&self) -> Interval {
        self.slope_range
    }

    #[inline]
    pub fn derivative_kind(&self) -> DerivativeKind {
        self.kind
    }

    /// `F(x)`.
    pub fn value(&self, x: f64) -> Result<f64> {
        self.check_domain(x)?;
        Ok((self.value)(x))
    }

    /// `f(x) = F'(x)`.
    pub fn derivative(&self, x: f64) -> Result<f64> {
        self.check_domain(x)?;
        Ok(self.slope_at(x))
    }

    /// `g(y)`, the unique `x` in the domain with `f(x) = y`.
    pub fn invert_derivative(&self, y: f64) -> Result<f64> {
        if !self.slope_range.contains(y) {
            return Err(Error::ConjugateOutOfRange {
                y,
                lo: self.slope_range.lo(),
                hi: self.slope_range.hi(),
            });
        }
        if y == self.slope_range.lo() {
            return Ok(self.domain.lo());
        }
        if y == self.slope_range.hi() {
            return Ok(self.domain.hi());
        }
        Ok(solve_increasing(
            &|x| self.slope_at(x),
            y,
            self.domain.lo(),
            self.domain.hi(),
        ))
    }

    /// The same model with `F` replaced by `F + c`.
    pub fn shifted(&self, c: f64) -> Self {
        let value = self.value.clone();
        ConvexModel {
            value: Arc::new(move |x| value(x) + c),
            ..self.clone()
        }
    }

    /// Unchecked `F`; callers keep `x` inside the domain.
    #[inline]
    pub(crate) fn value_at(&self, x: f64) -> f64 {
        (self.value)(x)
    }

    /// Unchecked `f`.
    pub(crate) fn slope_at(&self, x: f64) -> f64 {
        match &self.slope {
            Some(s) => s(x),
            None => finite_difference(&*self.value, &self.domain, x),
        }
    }

    fn check_domain(&self, x: f64) -> Result<()> {
        if self.domain.contains(x) {
            Ok(())
        } else {
            Err(Error::OutOfDomain {
                x,
                lo: self.domain.lo(),
                hi: self.domain.hi(),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dom(lo: f64, hi: f64) -> Interval {
        Interval::new(lo, hi).unwrap()
    }

    fn quadratic() -> ConvexModel {
        ConvexModel::analytic(|x| 0.5 * x * x, |x| x, dom(-2.0, 2.0)).unwrap()
    }

    #[test]
    fn quadratic_is_valid_with_expected_range() {
        let m = quadratic();
        assert_eq!(m.slope_range(), dom(-2.0, 2.0));
        assert_eq!(m.derivative_kind(), DerivativeKind::Analytic);
        assert_eq!(m.derivative(0.5).unwrap(), 0.5);
        assert!((m.invert_derivative(0.5).unwrap() - 0.5).abs() <= 1e-12);
    }

    #[test]
    fn cubic_is_rejected_with_offending_pair() {
        let err =
            ConvexModel::analytic(|x| x * x * x / 3.0, |x| x * x, dom(-1.0, 1.0)).unwrap_err();
        match err {
            Error::NonMonotoneDerivative {
                left,
                right,
                f_left,
                f_right,
            } => {
                assert!(left < right);
                assert!(f_left >= f_right);
                assert_eq!((left, right), (-1.0, -1.0 + 0.002));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn exp_without_derivative_uses_finite_differences() {
        let m = ConvexModel::finite_difference(f64::exp, dom(-1.0, 1.0)).unwrap();
        assert_eq!(m.derivative_kind(), DerivativeKind::FiniteDifference);
        let r = m.slope_range();
        assert!((r.lo() - (-1f64).exp()).abs() < 1e-6);
        assert!((r.hi() - 1f64.exp()).abs() < 1e-6);
        assert!((m.derivative(0.0).unwrap() - 1.0).abs() < 1e-8);
    }

    #[test]
    fn quartic_derivative_and_inverse() {
        let m = ConvexModel::analytic(|x| x.powi(4) / 4.0, |x| x.powi(3), dom(0.0, 3.0)).unwrap();
        assert_eq!(m.derivative(2.0).unwrap(), 8.0);
        assert!((m.invert_derivative(8.0).unwrap() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn exp_inverse_is_logarithm() {
        let m = ConvexModel::analytic(f64::exp, f64::exp, dom(-2.0, 2.0)).unwrap();
        let x = m.invert_derivative(5.0).unwrap();
        assert!((x - 5f64.ln()).abs() < 1e-9);
    }

    #[test]
    fn non_finite_values_are_rejected() {
        let err = ConvexModel::analytic(|x: f64| x.ln(), |x: f64| -1.0 / (x * x), dom(0.0, 1.0))
            .unwrap_err();
        assert_eq!(err, Error::NonFiniteValue { x: 0.0 });
    }

    #[test]
    fn wrong_derivative_is_rejected() {
        let err = ConvexModel::analytic(|x| 0.5 * x * x, |x| 2.0 * x, dom(-1.0, 1.0)).unwrap_err();
        assert_eq!(err.name(), "DerivativeMismatch");
    }

    #[test]
    fn domain_and_range_errors() {
        let m = quadratic();
        assert_eq!(m.derivative(2.5).unwrap_err().name(), "OutOfDomain");
        assert_eq!(m.value(f64::NAN).unwrap_err().name(), "OutOfDomain");
        assert_eq!(
            m.invert_derivative(3.0).unwrap_err(),
            Error::ConjugateOutOfRange {
                y: 3.0,
                lo: -2.0,
                hi: 2.0
            }
        );
    }

    #[test]
    fn endpoint_slopes_invert_to_endpoints() {
        let m = ConvexModel::analytic(f64::exp, f64::exp, dom(-1.0, 1.0)).unwrap();
        assert_eq!(m.invert_derivative(m.slope_range().lo()).unwrap(), -1.0);
        assert_eq!(m.invert_derivative(m.slope_range().hi()).unwrap(), 1.0);
    }

    #[test]
    fn shift_changes_values_only() {
        let m = quadratic();
        let s = m.shifted(7.5);
        assert_eq!(s.value(1.0).unwrap(), 8.0);
        assert_eq!(s.derivative(1.0).unwrap(), 1.0);
        assert_eq!(s.slope_range(), m.slope_range());
    }

    #[test]
    fn models_are_send_and_sync() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<ConvexModel>();
    }
}
