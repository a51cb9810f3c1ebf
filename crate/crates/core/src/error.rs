use core::fmt;

/// Errors raised by model construction, inversion, quadrature and the area reports.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Error {
    /// Interval endpoints are not finite or `lo >= hi`.
    InvalidInterval { lo: f64, hi: f64 },
    /// `f(left) >= f(right)` for adjacent validation samples `left < right`.
    NonMonotoneDerivative {
        left: f64,
        right: f64,
        f_left: f64,
        f_right: f64,
    },
    /// `F` or `f` (or a quadrature integrand) returned NaN or an infinity at `x`.
    NonFiniteValue { x: f64 },
    /// A supplied derivative disagrees with finite differences of `F`.
    DerivativeMismatch {
        x: f64,
        supplied: f64,
        estimated: f64,
    },
    /// Argument outside the model's domain.
    OutOfDomain { x: f64, lo: f64, hi: f64 },
    /// Conjugate variable outside `[f(lo), f(hi)]`.
    ConjugateOutOfRange { y: f64, lo: f64, hi: f64 },
    /// Adaptive quadrature hit its recursion limit on `[lo, hi]`.
    MaxDepthExceeded { lo: f64, hi: f64 },
    /// The graph of `f` meets neither axis at a nonnegative coordinate inside the domain.
    NoAxisIntersection,
    /// Points handed to a same-sign area report do not share one quadrant.
    MixedSigns { x: f64, y: f64 },
    /// A point violates the strict box inequalities of a mixed-sign area report.
    BoxViolation { x: f64, y: f64 },
    /// A sampled function needs at least two samples with strictly increasing abscissae.
    InvalidSamples,
}

impl Error {
    /// Stable variant name, used by the CLI when reporting failures.
    pub fn name(&self) -> &'static str {
        match self {
            Error::InvalidInterval { .. } => "InvalidInterval",
            Error::NonMonotoneDerivative { .. } => "NonMonotoneDerivative",
            Error::NonFiniteValue { .. } => "NonFiniteValue",
            Error::DerivativeMismatch { .. } => "DerivativeMismatch",
            Error::OutOfDomain { .. } => "OutOfDomain",
            Error::ConjugateOutOfRange { .. } => "ConjugateOutOfRange",
            Error::MaxDepthExceeded { .. } => "MaxDepthExceeded",
            Error::NoAxisIntersection => "NoAxisIntersection",
            Error::MixedSigns { .. } => "MixedSigns",
            Error::BoxViolation { .. } => "BoxViolation",
            Error::InvalidSamples => "InvalidSamples",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::InvalidInterval { lo, hi } => {
                write!(f, "invalid interval [{lo}, {hi}]: need finite lo < hi")
            }
            Error::NonMonotoneDerivative {
                left,
                right,
                f_left,
                f_right,
            } => write!(
                f,
                "derivative is not strictly increasing: f({left}) = {f_left} >= f({right}) = {f_right}"
            ),
            Error::NonFiniteValue { x } => write!(f, "non-finite function value at x = {x}"),
            Error::DerivativeMismatch {
                x,
                supplied,
                estimated,
            } => write!(
                f,
                "supplied derivative {supplied} at x = {x} disagrees with finite difference {estimated}"
            ),
            Error::OutOfDomain { x, lo, hi } => {
                write!(f, "x = {x} lies outside the domain [{lo}, {hi}]")
            }
            Error::ConjugateOutOfRange { y, lo, hi } => {
                write!(f, "y = {y} lies outside the derivative range [{lo}, {hi}]")
            }
            Error::MaxDepthExceeded { lo, hi } => {
                write!(f, "adaptive quadrature exceeded its depth limit on [{lo}, {hi}]")
            }
            Error::NoAxisIntersection => {
                write!(f, "graph of f meets no coordinate axis at a nonnegative point in the domain")
            }
            Error::MixedSigns { x, y } => {
                write!(f, "point ({x}, {y}) is not in the same quadrant as the others")
            }
            Error::BoxViolation { x, y } => {
                write!(f, "point ({x}, {y}) violates the box inequalities")
            }
            Error::InvalidSamples => {
                write!(f, "need at least two samples with strictly increasing x")
            }
        }
    }
}

impl core::error::Error for Error {}
