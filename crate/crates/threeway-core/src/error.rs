use alloc::string::String;

/// Loss-function admissibility conditions.
///
/// `C1` requires every unit cost to be strictly positive. `C2` requires the
/// half-reduction cost to stay below the full reduction cost, `C3` the
/// half-elevation cost to stay below the full elevation cost; together they
/// make the shadow band nonempty around 0.5.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum LossCondition {
    C1,
    C2,
    C3,
}

impl core::fmt::Display for LossCondition {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            LossCondition::C1 => write!(f, "c1 (all losses strictly positive)"),
            LossCondition::C2 => write!(f, "c2 (lambda_sd <= lambda_r)"),
            LossCondition::C3 => write!(f, "c3 (lambda_su <= lambda_e)"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("inverted interval bounds: lo {lo} > hi {hi}")]
    InvertedBounds { lo: f64, hi: f64 },
    #[error("interval bounds must be finite, got [{lo}, {hi}]")]
    NonFinite { lo: f64, hi: f64 },
    #[error("membership interval [{lo}, {hi}] leaves [0, 1]")]
    OutOfRange { lo: f64, hi: f64 },
    #[error("membership grade {0} outside [0, 1]")]
    GradeOutOfRange(f64),
    #[error("theta {0} outside [0, 1]")]
    ThetaOutOfRange(f64),
    #[error("negative scale factor {0}")]
    NegativeScale(f64),
    #[error("loss {name} must be a strictly positive interval, got lower bound {value}")]
    NonPositiveLoss { name: &'static str, value: f64 },
    #[error("loss condition violated: {0}")]
    ConditionViolation(LossCondition),
    #[error(
        "thresholds must satisfy 0 <= beta < 0.5 < alpha <= 1, got alpha {alpha}, beta {beta}"
    )]
    InvalidThresholds { alpha: f64, beta: f64 },
    #[error("universe is empty")]
    EmptyUniverse,
    #[error("object id must be non-empty")]
    EmptyObjectId,
    #[error("duplicate object id {0:?}")]
    DuplicateId(String),
    #[error("grid must have at least two points and lo < hi")]
    InvalidGrid,
}
