//! Shadowed sets over scalar grades: region assignment against a threshold
//! pair, the elevation/reduction/shadow error accounting, the balance
//! objective V, the distance-to-codebook per-object error, and a breakpoint
//! optimizer for the balanced (`beta = 1 - alpha`) threshold family.

use alloc::vec::Vec;

use crate::error::Error;
use crate::fuzzy::ScalarFuzzySet;

/// Grid granularity used by the balanced optimizer's candidate near 0.5.
const ALPHA_EPSILON: f64 = 1e-9;

/// The three-way region an object lands in.
///
/// `Shadow` carries the whole unit interval in shadowed-set semantics and the
/// single value 0.5 in three-way semantics; both views share this enum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Region {
    Elevate,
    Shadow,
    Reduce,
}

impl Region {
    /// The three-way membership value: 1, 0.5 or 0.
    pub fn codebook_value(&self) -> f64 {
        match self {
            Region::Elevate => 1.0,
            Region::Shadow => 0.5,
            Region::Reduce => 0.0,
        }
    }

    /// The shadowed-set membership shown in reports: `"1"`, `"[0,1]"` or `"0"`.
    pub fn shadow_label(&self) -> &'static str {
        match self {
            Region::Elevate => "1",
            Region::Shadow => "[0,1]",
            Region::Reduce => "0",
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Region::Elevate => "elevate",
            Region::Shadow => "shadow",
            Region::Reduce => "reduce",
        }
    }
}

/// A pair of region thresholds with `0 <= beta < 0.5 < alpha <= 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ThresholdPair {
    alpha: f64,
    beta: f64,
}

impl ThresholdPair {
    pub fn new(alpha: f64, beta: f64) -> Result<Self, Error> {
        let valid = alpha.is_finite()
            && beta.is_finite()
            && (0.0..0.5).contains(&beta)
            && alpha > 0.5
            && alpha <= 1.0;
        if !valid {
            return Err(Error::InvalidThresholds { alpha, beta });
        }
        Ok(Self { alpha, beta })
    }

    /// The `alpha + beta = 1` family used by the simplified objective.
    pub fn balanced(alpha: f64) -> Result<Self, Error> {
        Self::new(alpha, 1.0 - alpha)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Region of a grade, with weak inequalities at both thresholds: a grade
    /// equal to alpha is elevated and a grade equal to beta is reduced.
    pub fn classify(&self, m: f64) -> Region {
        if m >= self.alpha {
            Region::Elevate
        } else if m <= self.beta {
            Region::Reduce
        } else {
            Region::Shadow
        }
    }
}

/// Assigns a grade to its shadowed-set region.
pub fn shadow_assign(m: f64, thresholds: &ThresholdPair) -> Region {
    thresholds.classify(m)
}

/// The three-way approximation value of a grade: 1, 0 or 0.5.
pub fn three_way_value(m: f64, thresholds: &ThresholdPair) -> f64 {
    thresholds.classify(m).codebook_value()
}

/// Error mass accumulated per region over a whole set.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct RegionErrors {
    /// Sum of `1 - m` over elevated objects.
    pub elevated: f64,
    /// Sum of `m` over reduced objects.
    pub reduced: f64,
    /// Sum of `(1 - m) + m` over shadow objects; each term is exactly 1, so
    /// this equals the shadow cardinality bit-for-bit.
    pub shadow: f64,
    /// Sum of `|m - 0.5|` over shadow objects.
    pub shadow_half: f64,
}

/// Accumulates the four region error sums in universe order.
pub fn region_errors(set: &ScalarFuzzySet, thresholds: &ThresholdPair) -> RegionErrors {
    let mut errors = RegionErrors::default();
    for (_, m) in set.iter() {
        match thresholds.classify(m) {
            Region::Elevate => errors.elevated += 1.0 - m,
            Region::Reduce => errors.reduced += m,
            Region::Shadow => {
                errors.shadow += (1.0 - m) + m;
                errors.shadow_half += if m > 0.5 { m - 0.5 } else { 0.5 - m };
            }
        }
    }
    errors
}

/// The balance objective `V = |elevated + reduced - shadow cardinality|`.
pub fn objective_v(set: &ScalarFuzzySet, thresholds: &ThresholdPair) -> f64 {
    let errors = region_errors(set, thresholds);
    (errors.elevated + errors.reduced - errors.shadow).abs()
}

/// `objective_v` on the balanced pair `(alpha, 1 - alpha)`; alpha must lie in
/// `(0.5, 1]`.
pub fn objective_v_balanced(set: &ScalarFuzzySet, alpha: f64) -> Result<f64, Error> {
    Ok(objective_v(set, &ThresholdPair::balanced(alpha)?))
}

/// Distance from a grade to the codebook value of its region: `1 - m` when
/// elevated, `m` when reduced, `|m - 0.5|` in the shadow. The reduce branch
/// wins at `m = beta` exactly as classification does.
pub fn per_object_error(m: f64, thresholds: &ThresholdPair) -> f64 {
    match thresholds.classify(m) {
        Region::Elevate => 1.0 - m,
        Region::Reduce => m,
        Region::Shadow => {
            if m > 0.5 {
                m - 0.5
            } else {
                0.5 - m
            }
        }
    }
}

/// Sum of per-object errors in universe order.
pub fn total_error(set: &ScalarFuzzySet, thresholds: &ThresholdPair) -> f64 {
    set.iter()
        .map(|(_, m)| per_object_error(m, thresholds))
        .sum()
}

/// Result of the balanced threshold search.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct BalancedOptimum {
    pub alpha: f64,
    pub objective: f64,
}

/// Minimizes `objective_v_balanced` over the breakpoint candidate set.
///
/// V is a step function of alpha whose jumps can only sit at data grades m,
/// their mirrors 1 - m, and the domain ends, so evaluating those candidates
/// plus the midpoints between consecutive ones covers every value V takes on
/// `(0.5, 1]`. Ties go to the smallest alpha.
pub fn optimize_thresholds_balanced(set: &ScalarFuzzySet) -> Result<BalancedOptimum, Error> {
    if set.is_empty() {
        return Err(Error::EmptyUniverse);
    }
    let mut candidates: Vec<f64> = Vec::with_capacity(4 * set.len() + 4);
    candidates.push(0.5 + ALPHA_EPSILON);
    candidates.push(1.0);
    for (_, m) in set.iter() {
        for value in [m, 1.0 - m] {
            if value > 0.5 && value <= 1.0 {
                candidates.push(value);
            }
        }
    }
    candidates.sort_by(|a, b| a.partial_cmp(b).expect("candidates are finite"));
    candidates.dedup();
    let midpoints: Vec<f64> = candidates
        .windows(2)
        .map(|pair| 0.5 * (pair[0] + pair[1]))
        .collect();
    candidates.extend(midpoints);
    candidates.sort_by(|a, b| a.partial_cmp(b).expect("candidates are finite"));
    candidates.dedup();

    let mut best: Option<BalancedOptimum> = None;
    for alpha in candidates {
        let objective = objective_v_balanced(set, alpha)?;
        let improves = match &best {
            Some(current) => objective < current.objective,
            None => true,
        };
        if improves {
            best = Some(BalancedOptimum { alpha, objective });
        }
    }
    Ok(best.expect("candidate set is never empty"))
}
