//! Distribution models, estimators and goodness of fit.

mod gof;
mod optimize;
mod power;
mod sample;
mod zeta;

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

pub use gof::{chi_square_sf, pearson_gof, pearson_statistic, pool_classes, GoodnessOfFit, PoolingPolicy};
pub use power::{fit_power_law, PowerLawModel};
pub use sample::sample_truncated_zeta;
pub use zeta::{fit_truncated_zeta, truncated_zeta_normalizer, TruncatedZetaModel};

/// Search interval for the exponent.
pub(crate) const A_MIN: f64 = 0.0;
pub(crate) const A_MAX: f64 = 10.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Mle,
    MinChiSq,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Mle => "mle",
            Method::MinChiSq => "min-chisq",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "mle" => Ok(Method::Mle),
            "min-chisq" | "min_chisq" => Ok(Method::MinChiSq),
            other => Err(Error::Config(format!("unknown method `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FittedModel {
    TruncatedZeta(TruncatedZetaModel),
    PowerLaw(PowerLawModel),
}

impl FittedModel {
    pub fn a(&self) -> f64 {
        match self {
            FittedModel::TruncatedZeta(m) => m.a(),
            FittedModel::PowerLaw(m) => m.a(),
        }
    }

    pub fn c(&self) -> f64 {
        match self {
            FittedModel::TruncatedZeta(m) => m.c(),
            FittedModel::PowerLaw(m) => m.c(),
        }
    }

    /// Expected count at rank `z` in a sample of `tokens` words.
    pub fn expected(&self, z: usize, tokens: f64) -> f64 {
        match self {
            FittedModel::TruncatedZeta(m) => tokens * m.pmf_unchecked(z),
            FittedModel::PowerLaw(m) => m.expected(z, tokens),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            FittedModel::TruncatedZeta(_) => "truncated",
            FittedModel::PowerLaw(_) => "power",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitResult {
    pub model: FittedModel,
    pub x2: f64,
    pub df: Option<u32>,
    pub p: Option<f64>,
    pub method: Method,
    pub pooled_classes: usize,
}

impl FitResult {
    fn new(model: FittedModel, gof: GoodnessOfFit, method: Method) -> Self {
        FitResult {
            model,
            x2: gof.x2,
            df: gof.df,
            p: gof.p,
            method,
            pooled_classes: gof.classes,
        }
    }
}
