//! Cost-sensitive decisions over scalar grades. A loss profile prices the
//! four grade-changing actions; thresholds with closed forms fall out of the
//! pairwise risk comparisons, and the same decision is reachable directly by
//! risk argmin. Interval-valued losses enter through a theta reduction.

use crate::error::{Error, LossCondition};
use crate::interval::{Interval, Theta};
use crate::shadow::Region;

/// One of the four grade-changing actions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Action {
    /// Raise the grade to 1.
    Elevate,
    /// Lower the grade to 0.
    Reduce,
    /// Lower a grade at or above 0.5 to 0.5.
    ShadowDown,
    /// Raise a grade below 0.5 to 0.5.
    ShadowUp,
}

impl Action {
    pub fn region(&self) -> Region {
        match self {
            Action::Elevate => Region::Elevate,
            Action::Reduce => Region::Reduce,
            Action::ShadowDown | Action::ShadowUp => Region::Shadow,
        }
    }
}

/// Which half of the grade scale an object sits in. `High` covers `m >= 0.5`
/// (its applicable shadow action is [`Action::ShadowDown`]), `Low` the rest.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Situation {
    High,
    Low,
}

impl Situation {
    pub fn of(m: f64) -> Self {
        if m >= 0.5 {
            Situation::High
        } else {
            Situation::Low
        }
    }

    pub fn shadow_action(&self) -> Action {
        match self {
            Situation::High => Action::ShadowDown,
            Situation::Low => Action::ShadowUp,
        }
    }
}

/// Unit costs of the four actions. Construction enforces the admissibility
/// conditions: strictly positive costs (c1), `shadow_down <= reduce` (c2) and
/// `shadow_up <= elevate` (c3).
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct LossProfile {
    elevate: f64,
    reduce: f64,
    shadow_down: f64,
    shadow_up: f64,
}

impl LossProfile {
    pub fn new(elevate: f64, reduce: f64, shadow_down: f64, shadow_up: f64) -> Result<Self, Error> {
        let all = [elevate, reduce, shadow_down, shadow_up];
        if all.iter().any(|v| !v.is_finite() || *v <= 0.0) {
            return Err(Error::ConditionViolation(LossCondition::C1));
        }
        if shadow_down > reduce {
            return Err(Error::ConditionViolation(LossCondition::C2));
        }
        if shadow_up > elevate {
            return Err(Error::ConditionViolation(LossCondition::C3));
        }
        Ok(Self {
            elevate,
            reduce,
            shadow_down,
            shadow_up,
        })
    }

    pub fn elevate(&self) -> f64 {
        self.elevate
    }

    pub fn reduce(&self) -> f64 {
        self.reduce
    }

    pub fn shadow_down(&self) -> f64 {
        self.shadow_down
    }

    pub fn shadow_up(&self) -> f64 {
        self.shadow_up
    }
}

/// Interval-valued unit costs. Only strict positivity of the lower bounds is
/// checked here; the admissibility conditions apply to the profile obtained
/// by theta reduction and are checked there.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct IntervalLossProfile {
    elevate: Interval,
    reduce: Interval,
    shadow_down: Interval,
    shadow_up: Interval,
}

impl IntervalLossProfile {
    pub fn new(
        elevate: Interval,
        reduce: Interval,
        shadow_down: Interval,
        shadow_up: Interval,
    ) -> Result<Self, Error> {
        for (name, interval) in [
            ("lambda_e", &elevate),
            ("lambda_r", &reduce),
            ("lambda_sd", &shadow_down),
            ("lambda_su", &shadow_up),
        ] {
            if interval.lo() <= 0.0 {
                return Err(Error::NonPositiveLoss {
                    name,
                    value: interval.lo(),
                });
            }
        }
        Ok(Self {
            elevate,
            reduce,
            shadow_down,
            shadow_up,
        })
    }

    /// Embeds scalar costs as zero-width intervals.
    pub fn from_scalar(profile: &LossProfile) -> Self {
        let point = |v: f64| Interval::point(v).expect("profile costs are finite");
        Self {
            elevate: point(profile.elevate()),
            reduce: point(profile.reduce()),
            shadow_down: point(profile.shadow_down()),
            shadow_up: point(profile.shadow_up()),
        }
    }

    pub fn elevate(&self) -> Interval {
        self.elevate
    }

    pub fn reduce(&self) -> Interval {
        self.reduce
    }

    pub fn shadow_down(&self) -> Interval {
        self.shadow_down
    }

    pub fn shadow_up(&self) -> Interval {
        self.shadow_up
    }
}

/// Collapses interval costs with `theta` and validates the admissibility
/// conditions on the reduced profile.
pub fn reduce_losses(losses: &IntervalLossProfile, theta: Theta) -> Result<LossProfile, Error> {
    LossProfile::new(
        losses.elevate.reduce(theta),
        losses.reduce.reduce(theta),
        losses.shadow_down.reduce(theta),
        losses.shadow_up.reduce(theta),
    )
}

/// Risks of the applicable actions for one grade: elevate and reduce always
/// apply; the shadow action is `ShadowDown` when `m >= 0.5`, `ShadowUp`
/// otherwise, so its error weight is never negative.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ApplicableRisks {
    pub elevate: f64,
    pub reduce: f64,
    pub shadow: f64,
    pub situation: Situation,
}

impl ApplicableRisks {
    pub fn shadow_action(&self) -> Action {
        self.situation.shadow_action()
    }

    /// Action with minimal risk. Ties prefer committed actions over the
    /// shadow, and elevation over reduction.
    pub fn best(&self) -> (Action, f64) {
        let mut action = Action::Elevate;
        let mut risk = self.elevate;
        if self.reduce < risk {
            action = Action::Reduce;
            risk = self.reduce;
        }
        if self.shadow < risk {
            action = self.shadow_action();
            risk = self.shadow;
        }
        (action, risk)
    }
}

/// Evaluates the error-weighted risks of the applicable actions.
pub fn risks(m: f64, losses: &LossProfile) -> ApplicableRisks {
    debug_assert!((0.0..=1.0).contains(&m), "grade {m} outside [0, 1]");
    let situation = Situation::of(m);
    let shadow = match situation {
        Situation::High => (m - 0.5) * losses.shadow_down,
        Situation::Low => (0.5 - m) * losses.shadow_up,
    };
    debug_assert!(shadow >= 0.0);
    ApplicableRisks {
        elevate: (1.0 - m) * losses.elevate,
        reduce: m * losses.reduce,
        shadow,
        situation,
    }
}

/// Thresholds derived from a loss profile. `gamma_minus` and `gamma_plus`
/// are extended reals: the denominators vanish when c2 or c3 hold with
/// equality and the corresponding comparison rule goes vacuous.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct DerivedThresholds {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub gamma_minus: f64,
    pub gamma_plus: f64,
}

impl DerivedThresholds {
    /// The `(alpha, beta)` pair; valid by construction since admissible
    /// profiles always give `alpha` in (0.5, 1) and `beta` in (0, 0.5).
    pub fn pair(&self) -> crate::shadow::ThresholdPair {
        crate::shadow::ThresholdPair::new(self.alpha, self.beta)
            .expect("derived thresholds always straddle 0.5")
    }
}

/// Closed-form thresholds of an admissible profile:
/// `alpha = (2*le + lsd) / (2*(le + lsd))`, evaluated as
/// `1 - lsd / (2*(le + lsd))` so fully symmetric profiles give exactly
/// `alpha + beta = 1`, and `beta = lsu / (2*(lr + lsu))`; `gamma` is the
/// elevate/reduce crossover `le / (le + lr)`.
pub fn thresholds_from_losses(losses: &LossProfile) -> DerivedThresholds {
    let alpha = 1.0 - 0.5 * (losses.shadow_down / (losses.elevate + losses.shadow_down));
    let beta = 0.5 * (losses.shadow_up / (losses.reduce + losses.shadow_up));
    let gamma = losses.elevate / (losses.elevate + losses.reduce);
    let gamma_minus = if losses.reduce > losses.shadow_down {
        -losses.shadow_down / (2.0 * (losses.reduce - losses.shadow_down))
    } else {
        f64::NEG_INFINITY
    };
    let gamma_plus = if losses.elevate > losses.shadow_up {
        (losses.elevate - 0.5 * losses.shadow_up) / (losses.elevate - losses.shadow_up)
    } else {
        f64::INFINITY
    };
    debug_assert!(
        gamma_minus <= 0.0,
        "reduce rule must stay infeasible in the high band"
    );
    debug_assert!(
        gamma_plus >= 1.0,
        "elevate rule must stay infeasible in the low band"
    );
    DerivedThresholds {
        alpha,
        beta,
        gamma,
        gamma_minus,
        gamma_plus,
    }
}

/// Threshold decision with weak inequalities: `m >= alpha` elevates,
/// `m <= beta` reduces, anything between lands in the shadow.
pub fn decide(m: f64, thresholds: &DerivedThresholds) -> Region {
    if m >= thresholds.alpha {
        Region::Elevate
    } else if m <= thresholds.beta {
        Region::Reduce
    } else {
        Region::Shadow
    }
}

/// Decision by direct risk comparison, no thresholds involved. Agrees with
/// [`decide`] over [`thresholds_from_losses`] for every admissible profile.
pub fn decide_by_rules(m: f64, losses: &LossProfile) -> Region {
    risks(m, losses).best().0.region()
}
