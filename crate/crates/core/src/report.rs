use alloc::string::String;

use crate::Interval;

/// Outcome of one named invariant check. `pass` is `max_abs_error <= tolerance`.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CheckReport {
    pub check_name: String,
    pub function: String,
    pub domain: Interval,
    pub max_abs_error: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub points_evaluated: usize,
}

impl CheckReport {
    pub fn new(
        check_name: impl Into<String>,
        function: impl Into<String>,
        domain: Interval,
        max_abs_error: f64,
        tolerance: f64,
        points_evaluated: usize,
    ) -> Self {
        CheckReport {
            check_name: check_name.into(),
            function: function.into(),
            domain,
            max_abs_error,
            tolerance,
            // NaN errors fail.
            pass: max_abs_error <= tolerance,
            points_evaluated,
        }
    }

    pub fn with_function(mut self, function: impl Into<String>) -> Self {
        self.function = function.into();
        self
    }
}
