//! Finite-universe fuzzy sets with interval-valued or scalar membership
//! grades. The universe is an explicitly ordered sequence of labelled objects
//! and every operation iterates in that order, so reports and sums are
//! deterministic.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Error;
use crate::interval::{Interval, Theta};

/// Label of one object in a universe. Non-empty, unique within a set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ObjectId(String);

impl ObjectId {
    pub fn new(id: impl Into<String>) -> Result<Self, Error> {
        let id = id.into();
        if id.is_empty() {
            return Err(Error::EmptyObjectId);
        }
        Ok(Self(id))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl core::fmt::Display for ObjectId {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.0)
    }
}

/// A fuzzy set whose grades are membership intervals.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalFuzzySet {
    items: Vec<(ObjectId, Interval)>,
}

impl IntervalFuzzySet {
    /// Builds a set from `(id, grade)` pairs; the pair order defines the
    /// universe order. Grades must be membership intervals and ids unique.
    pub fn new(items: Vec<(ObjectId, Interval)>) -> Result<Self, Error> {
        let mut seen = BTreeSet::new();
        for (id, grade) in &items {
            if !seen.insert(id.as_str()) {
                return Err(Error::DuplicateId(id.as_str().into()));
            }
            if grade.lo() < 0.0 || grade.hi() > 1.0 {
                return Err(Error::OutOfRange {
                    lo: grade.lo(),
                    hi: grade.hi(),
                });
            }
        }
        Ok(Self { items })
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ObjectId, Interval)> {
        self.items.iter().map(|(id, grade)| (id, *grade))
    }

    /// Collapses every grade with the same theta, preserving universe order.
    pub fn reduce(&self, theta: Theta) -> ScalarFuzzySet {
        ScalarFuzzySet {
            items: self
                .items
                .iter()
                .map(|(id, grade)| (id.clone(), grade.reduce(theta)))
                .collect(),
        }
    }
}

/// A fuzzy set with plain scalar grades in `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarFuzzySet {
    items: Vec<(ObjectId, f64)>,
}

impl ScalarFuzzySet {
    pub fn new(items: Vec<(ObjectId, f64)>) -> Result<Self, Error> {
        let mut seen = BTreeSet::new();
        for (id, grade) in &items {
            if !seen.insert(id.as_str()) {
                return Err(Error::DuplicateId(id.as_str().into()));
            }
            if !grade.is_finite() || !(0.0..=1.0).contains(grade) {
                return Err(Error::GradeOutOfRange(*grade));
            }
        }
        Ok(Self { items })
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ObjectId, f64)> {
        self.items.iter().map(|(id, grade)| (id, *grade))
    }

    pub fn grades(&self) -> impl Iterator<Item = f64> + '_ {
        self.items.iter().map(|(_, grade)| *grade)
    }

    /// Embeds every scalar grade as the zero-width interval `[g, g]`, so the
    /// interval pipeline reproduces the scalar one: `embed().reduce(theta)`
    /// returns the original set for every theta.
    pub fn embed(&self) -> IntervalFuzzySet {
        IntervalFuzzySet {
            items: self
                .items
                .iter()
                .map(|(id, grade)| {
                    let point = Interval::point(*grade).expect("grades are finite");
                    (id.clone(), point)
                })
                .collect(),
        }
    }
}
