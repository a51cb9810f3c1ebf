//! Named closed-form functions and `poly:` specs.

use std::fmt;
use std::sync::Arc;

use legendre_core::{ConvexModel, Interval, RealFn};

use crate::CliError;

/// A closed-form function with its exact derivative.
#[derive(Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub description: String,
    /// `None` for `poly:` specs, which need an explicit domain.
    pub default_domain: Option<Interval>,
    pub value: RealFn,
    pub slope: RealFn,
}

impl fmt::Debug for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CatalogEntry")
            .field("name", &self.name)
            .field("default_domain", &self.default_domain)
            .finish_non_exhaustive()
    }
}

impl CatalogEntry {
    fn named<F, D>(name: &str, description: &str, lo: f64, hi: f64, value: F, slope: D) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
        D: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        CatalogEntry {
            name: name.to_owned(),
            description: description.to_owned(),
            default_domain: Some(Interval::new(lo, hi).expect("catalog domain")),
            value: Arc::new(value),
            slope: Arc::new(slope),
        }
    }

    /// Validated model on `domain`, or on the default domain when `None`.
    pub fn model(&self, domain: Option<Interval>) -> Result<ConvexModel, CliError> {
        let domain = domain.or(self.default_domain).ok_or_else(|| {
            CliError::Usage(format!(
                "function `{}` needs an explicit --domain",
                self.name
            ))
        })?;
        Ok(ConvexModel::new(
            self.value.clone(),
            Some(self.slope.clone()),
            domain,
        )?)
    }
}

/// Every named function, in a fixed order.
pub fn catalog() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry::named(
            "quadratic",
            "x^2/2, kinetic-energy form; its own conjugate",
            -2.0,
            2.0,
            |x| 0.5 * x * x,
            |x| x,
        ),
        CatalogEntry::named(
            "exp",
            "e^x; conjugate y ln y - y",
            -1.0,
            1.0,
            f64::exp,
            f64::exp,
        ),
        CatalogEntry::named(
            "quartic",
            "x^4/4; conjugate (3/4) y^(4/3)",
            0.1,
            2.0,
            |x| 0.25 * x.powi(4),
            |x| x.powi(3),
        ),
        CatalogEntry::named(
            "cosh",
            "cosh x; derivative sinh x",
            -1.5,
            1.5,
            f64::cosh,
            f64::sinh,
        ),
        CatalogEntry::named(
            "shifted-quadratic",
            "x^2/2 - x; derivative x - 1 changes sign at x = 1",
            0.0,
            3.0,
            |x| 0.5 * x * x - x,
            |x| x - 1.0,
        ),
        CatalogEntry::named(
            "xlogx",
            "x ln x - x; conjugate e^y",
            0.2,
            3.0,
            |x| x * x.ln() - x,
            f64::ln,
        ),
    ]
}

/// Resolves a catalog name or a `poly:c0,c1,...,ck` spec (ascending degree).
pub fn parse_function(spec: &str) -> Result<CatalogEntry, CliError> {
    if let Some(coeffs) = spec.strip_prefix("poly:") {
        return polynomial(spec, coeffs);
    }
    catalog()
        .into_iter()
        .find(|e| e.name == spec)
        .ok_or_else(|| CliError::UnknownFunction(spec.to_owned()))
}

fn polynomial(spec: &str, list: &str) -> Result<CatalogEntry, CliError> {
    let coeffs = list
        .split(',')
        .map(|c| c.trim().parse::<f64>().ok().filter(|v| v.is_finite()))
        .collect::<Option<Vec<f64>>>()
        .ok_or_else(|| CliError::Usage(format!("bad polynomial coefficients in `{spec}`")))?;
    let derivative: Vec<f64> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| k as f64 * c)
        .collect();
    Ok(CatalogEntry {
        name: spec.to_owned(),
        description: format!("polynomial with coefficients {list}"),
        default_domain: None,
        value: Arc::new(move |x| horner(&coeffs, x)),
        slope: Arc::new(move |x| horner(&derivative, x)),
    })
}

fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}
