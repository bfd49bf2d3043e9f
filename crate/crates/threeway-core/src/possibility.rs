//! Decisions over interval-valued risks, without collapsing the intervals:
//! pairwise possibility degrees form a complementary preference matrix, row
//! totals rank the three applicable actions, and the action with the least
//! total preference (least evidence of being the costliest) wins.

use crate::dtrs::{IntervalLossProfile, Situation};
use crate::interval::{Interval, PossibilityDegree};
use crate::shadow::Region;

/// The three applicable risk intervals of one object.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct RiskIntervals {
    pub elevate: Interval,
    pub reduce: Interval,
    pub shadow: Interval,
    pub situation: Situation,
}

/// Scales each loss interval by the error of its action: `1 - m` for
/// elevation, `m` for reduction, `|m - 0.5|` for the applicable shadow move.
pub fn risk_intervals(m: f64, losses: &IntervalLossProfile) -> RiskIntervals {
    debug_assert!((0.0..=1.0).contains(&m), "grade {m} outside [0, 1]");
    let situation = Situation::of(m);
    let shadow = match situation {
        Situation::High => losses.shadow_down().scale(m - 0.5),
        Situation::Low => losses.shadow_up().scale(0.5 - m),
    };
    RiskIntervals {
        elevate: losses.elevate().scale(1.0 - m).expect("1 - m >= 0"),
        reduce: losses.reduce().scale(m).expect("m >= 0"),
        shadow: shadow.expect("shadow error weight >= 0"),
        situation,
    }
}

/// Complementary 3x3 preference matrix over the risks, rows and columns in
/// (elevate, reduce, shadow) order. Entry `(i, j)` is the possibility that
/// risk `i` is at least risk `j`; the diagonal is exactly 0.5 and opposite
/// entries are exact complements by construction.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct PreferenceMatrix {
    entries: [[PossibilityDegree; 3]; 3],
}

impl PreferenceMatrix {
    /// Builds the matrix from the three upper-triangle degrees.
    pub fn from_upper(
        elevate_reduce: PossibilityDegree,
        elevate_shadow: PossibilityDegree,
        reduce_shadow: PossibilityDegree,
    ) -> Self {
        let half = PossibilityDegree(0.5);
        Self {
            entries: [
                [half, elevate_reduce, elevate_shadow],
                [elevate_reduce.complement(), half, reduce_shadow],
                [
                    elevate_shadow.complement(),
                    reduce_shadow.complement(),
                    half,
                ],
            ],
        }
    }

    pub fn entry(&self, row: usize, col: usize) -> PossibilityDegree {
        self.entries[row][col]
    }

    pub fn to_array(&self) -> [[f64; 3]; 3] {
        self.entries.map(|row| row.map(|degree| degree.value()))
    }
}

/// Pairwise possibility degrees of the risk intervals.
pub fn preference_matrix(risks: &RiskIntervals) -> PreferenceMatrix {
    PreferenceMatrix::from_upper(
        risks.elevate.possibility_ge(&risks.reduce),
        risks.elevate.possibility_ge(&risks.shadow),
        risks.reduce.possibility_ge(&risks.shadow),
    )
}

/// Row totals of the preference matrix. A large total means the action's
/// risk is likely to dominate the others, so the minimum total wins.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct PreferenceTotals {
    pub elevate: f64,
    pub reduce: f64,
    pub shadow: f64,
}

impl PreferenceTotals {
    pub fn sum(&self) -> f64 {
        self.elevate + self.reduce + self.shadow
    }

    /// Region of the minimal total; ties prefer committed actions over the
    /// shadow, and elevation over reduction.
    pub fn best(&self) -> Region {
        if self.elevate <= self.reduce && self.elevate <= self.shadow {
            Region::Elevate
        } else if self.reduce <= self.shadow {
            Region::Reduce
        } else {
            Region::Shadow
        }
    }
}

/// Row sums of the matrix. Each row is summed exactly (a three-term exact
/// sum, then one rounding) so the complementary pairs cancel and the three
/// totals always add up to exactly 4.5.
pub fn preference_totals(matrix: &PreferenceMatrix) -> PreferenceTotals {
    let row = |i: usize| {
        sum3(
            matrix.entries[i][0].value(),
            matrix.entries[i][1].value(),
            matrix.entries[i][2].value(),
        )
    };
    PreferenceTotals {
        elevate: row(0),
        reduce: row(1),
        shadow: row(2),
    }
}

/// Correctly rounded sum of three doubles via error-free transformations.
fn sum3(a: f64, b: f64, c: f64) -> f64 {
    let (s1, e1) = two_sum(a, b);
    let (s2, e2) = two_sum(s1, c);
    s2 + (e1 + e2)
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

/// Full pipeline for one grade: risks, preference matrix, row totals, pick.
pub fn decide_possibility(m: f64, losses: &IntervalLossProfile) -> Region {
    let risks = risk_intervals(m, losses);
    let matrix = preference_matrix(&risks);
    preference_totals(&matrix).best()
}

/// Classification of one pairwise degree: 0, strictly inside (0, 1), or 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Regime {
    /// The row risk certainly does not exceed the column risk (p = 0).
    Never,
    /// Strictly between 0 and 1.
    Partial,
    /// Certain domination (p = 1).
    Certain,
}

impl Regime {
    pub fn of(degree: PossibilityDegree) -> Self {
        let value = degree.value();
        if value == 0.0 {
            Regime::Never
        } else if value == 1.0 {
            Regime::Certain
        } else {
            Regime::Partial
        }
    }
}

/// Regimes of the three upper-triangle degrees.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct RegimeTriple {
    pub elevate_reduce: Regime,
    pub elevate_shadow: Regime,
    pub reduce_shadow: Regime,
}

impl RegimeTriple {
    pub fn of_matrix(matrix: &PreferenceMatrix) -> Self {
        Self {
            elevate_reduce: Regime::of(matrix.entry(0, 1)),
            elevate_shadow: Regime::of(matrix.entry(0, 2)),
            reduce_shadow: Regime::of(matrix.entry(1, 2)),
        }
    }
}

/// Classifies the pairwise degrees of the risks by exact comparison with 0
/// and 1.
pub fn classify_regimes(risks: &RiskIntervals) -> RegimeTriple {
    RegimeTriple::of_matrix(&preference_matrix(risks))
}

/// Set of three-way outcomes, as admitted by the regime lookup table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct OutcomeSet {
    bits: u8,
}

impl OutcomeSet {
    const ELEVATE: u8 = 1;
    const SHADOW: u8 = 2;
    const REDUCE: u8 = 4;

    fn of(regions: &[Region]) -> Self {
        let mut bits = 0;
        for region in regions {
            bits |= match region {
                Region::Elevate => Self::ELEVATE,
                Region::Shadow => Self::SHADOW,
                Region::Reduce => Self::REDUCE,
            };
        }
        Self { bits }
    }

    pub fn contains(&self, region: Region) -> bool {
        let bit = match region {
            Region::Elevate => Self::ELEVATE,
            Region::Shadow => Self::SHADOW,
            Region::Reduce => Self::REDUCE,
        };
        self.bits & bit != 0
    }

    pub fn iter(&self) -> impl Iterator<Item = Region> + '_ {
        [Region::Elevate, Region::Shadow, Region::Reduce]
            .into_iter()
            .filter(|region| self.contains(*region))
    }
}

/// Outcomes the 27-row regime table admits for a triple. The same table
/// covers both situations. The `(Certain, Never, Certain)` row is kept as
/// printed even though such a triple forces a cyclic domination chain that
/// no interval assignment can realize non-degenerately.
pub fn allowed_outcomes(triple: &RegimeTriple) -> OutcomeSet {
    use Regime::{Certain as C, Never as N, Partial as P};
    use Region::{Elevate as E, Reduce as R, Shadow as S};
    let outcomes: &[Region] = match (
        triple.elevate_reduce,
        triple.elevate_shadow,
        triple.reduce_shadow,
    ) {
        (N, N, N) => &[E],
        (N, N, P) => &[E],
        (N, N, C) => &[E],
        (N, P, N) => &[E],
        (N, P, P) => &[E, S],
        (N, P, C) => &[E, S],
        (N, C, N) => &[E],
        (N, C, P) => &[S],
        (N, C, C) => &[S],
        (P, N, N) => &[E, R],
        (P, N, P) => &[E, R, S],
        (P, N, C) => &[E],
        (P, P, N) => &[E, R],
        (P, P, P) => &[E, S, R],
        (P, P, C) => &[E, S],
        (P, C, N) => &[R],
        (P, C, P) => &[S, R],
        (P, C, C) => &[S],
        (C, N, N) => &[R],
        (C, N, P) => &[R],
        (C, N, C) => &[E],
        (C, P, N) => &[R],
        (C, P, P) => &[S, R],
        (C, P, C) => &[S],
        (C, C, N) => &[R],
        (C, C, P) => &[S, R],
        (C, C, C) => &[S],
    };
    OutcomeSet::of(outcomes)
}
