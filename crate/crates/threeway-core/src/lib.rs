//! Three-way approximation of interval-valued fuzzy sets.
//!
//! An interval-valued fuzzy set assigns each object of a finite universe a
//! membership interval inside `[0, 1]`. This crate turns such sets into
//! three-valued approximations (elevate to 1, reduce to 0, or move into a
//! shadow region) along three routes:
//!
//! - [`shadow`]: Pedrycz-style shadowed sets, with region error accounting,
//!   the balance objective, and a breakpoint optimizer for the balanced
//!   threshold family;
//! - [`dtrs`]: decision-theoretic thresholds in closed form from a loss
//!   profile, for scalar losses and for interval losses collapsed by a theta
//!   reduction;
//! - [`possibility`]: ranking of interval-valued risks by pairwise
//!   possibility degrees, keeping the intervals intact.
//!
//! The [`oracle`] module certifies the closed forms and optimizers by brute
//! force and hosts the seeded consistency suites.
//!
//! The crate is `no_std` compatible (with `alloc`); the default `std`
//! feature only toggles dependency features.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod dtrs;
pub mod error;
pub mod fuzzy;
pub mod interval;
pub mod oracle;
pub mod possibility;
pub mod shadow;

pub use dtrs::{
    decide, decide_by_rules, reduce_losses, risks, thresholds_from_losses, Action, ApplicableRisks,
    DerivedThresholds, IntervalLossProfile, LossProfile, Situation,
};
pub use error::{Error, LossCondition};
pub use fuzzy::{IntervalFuzzySet, ObjectId, ScalarFuzzySet};
pub use interval::{Interval, PossibilityDegree, Theta};
pub use possibility::{
    allowed_outcomes, classify_regimes, decide_possibility, preference_matrix, preference_totals,
    risk_intervals, OutcomeSet, PreferenceMatrix, PreferenceTotals, Regime, RegimeTriple,
    RiskIntervals,
};
pub use shadow::{
    objective_v, objective_v_balanced, optimize_thresholds_balanced, per_object_error,
    region_errors, shadow_assign, three_way_value, total_error, BalancedOptimum, Region,
    RegionErrors, ThresholdPair,
};
