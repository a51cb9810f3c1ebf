use crate::{Error, Result};

/// A compact interval `[lo, hi]` with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if lo.is_finite() && hi.is_finite() && lo < hi {
            Ok(Interval { lo, hi })
        } else {
            Err(Error::InvalidInterval { lo, hi })
        }
    }

    #[inline]
    pub fn lo(&self) -> f64 {
        self.lo
    }

    #[inline]
    pub fn hi(&self) -> f64 {
        self.hi
    }

    #[inline]
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    #[inline]
    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    /// Closed-interval membership; NaN is never contained.
    #[inline]
    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    /// Membership in the open interval `(lo, hi)`.
    #[inline]
    pub fn contains_interior(&self, x: f64) -> bool {
        self.lo < x && x < self.hi
    }

    /// `n` equally spaced points including both endpoints. The last point is
    /// `hi` exactly.
    pub fn linspace(&self, n: usize) -> impl Iterator<Item = f64> + '_ {
        let last = n.saturating_sub(1);
        let step = if last == 0 {
            0.0
        } else {
            self.width() / last as f64
        };
        (0..n).map(move |i| {
            if i == last && last > 0 {
                self.hi
            } else {
                self.lo + i as f64 * step
            }
        })
    }

    /// `n` equally spaced points across the inner 90% of the interval,
    /// symmetric about the midpoint (the midpoint is hit exactly for odd `n`).
    pub fn interior_grid(&self, n: usize) -> impl Iterator<Item = f64> + '_ {
        let mid = self.midpoint();
        let half = 0.45 * self.width();
        let last = n.saturating_sub(1);
        (0..n).map(move |i| {
            if last == 0 {
                mid
            } else {
                let t = -1.0 + 2.0 * i as f64 / last as f64;
                mid + half * t
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn rejects_degenerate_and_reversed() {
        assert!(Interval::new(1.0, 1.0).is_err());
        assert!(Interval::new(2.0, 1.0).is_err());
        assert!(Interval::new(f64::NAN, 1.0).is_err());
        assert!(Interval::new(0.0, f64::INFINITY).is_err());
        assert!(Interval::new(-1.0, 1.0).is_ok());
    }

    #[test]
    fn linspace_hits_endpoints() {
        let i = Interval::new(-1.0, 1.0).unwrap();
        let xs: Vec<f64> = i.linspace(5).collect();
        assert_eq!(xs, [-1.0, -0.5, 0.0, 0.5, 1.0]);
        let xs: Vec<f64> = i.linspace(1001).collect();
        assert_eq!(xs.len(), 1001);
        assert_eq!(xs[1000], 1.0);
    }

    #[test]
    fn interior_grid_is_inner_ninety_percent() {
        let i = Interval::new(-2.0, 2.0).unwrap();
        let ys: Vec<f64> = i.interior_grid(5).collect();
        assert_eq!(ys[2], 0.0);
        assert!((ys[0] + 1.8).abs() < 1e-15);
        assert!((ys[4] - 1.8).abs() < 1e-15);
    }
}
