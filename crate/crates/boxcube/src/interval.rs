//! Closed rational intervals and interval-based graph representations.
//!
//! Two closed intervals intersect exactly when `max(lo) <= min(hi)`; touching
//! at a single shared endpoint counts. A unit-interval family additionally
//! shares one length, so it is stored as one anchor per vertex plus that
//! common length.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{cmp_exact, le_exact, Rational};

/// Closed interval `[lo, hi]` with rational endpoints, `lo <= hi`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    /// Builds `[lo, hi]`, rejecting `lo > hi`.
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if cmp_exact(&lo, &hi) == std::cmp::Ordering::Greater {
            return Err(Error::invalid(format!("interval [{lo}, {hi}] has lo > hi")));
        }
        Ok(Interval { lo, hi })
    }

    /// Integer-endpoint convenience constructor for tests and generators.
    pub fn from_ints(lo: i64, hi: i64) -> Self {
        assert!(lo <= hi, "interval [{lo}, {hi}] has lo > hi");
        Interval { lo: Rational::from_integer(lo), hi: Rational::from_integer(hi) }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    /// Closed-interval intersection test; shared endpoints count.
    pub fn intersects(&self, other: &Interval) -> bool {
        le_exact(&self.lo, &other.hi) && le_exact(&other.lo, &self.hi)
    }
}

/// One closed interval per vertex `0..n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntervalRepresentation {
    intervals: Vec<Interval>,
}

impl IntervalRepresentation {
    pub fn new(intervals: Vec<Interval>) -> Self {
        IntervalRepresentation { intervals }
    }

    pub fn n(&self) -> usize {
        self.intervals.len()
    }

    pub fn interval(&self, v: usize) -> &Interval {
        &self.intervals[v]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Interval> {
        self.intervals.iter()
    }

    /// The graph with an edge wherever two of the intervals intersect.
    pub fn intersection_graph(&self) -> Graph {
        Graph::from_pairwise(self.n(), |u, v| {
            self.intervals[u].intersects(&self.intervals[v])
        })
    }
}

/// Intervals of one shared positive length, stored as per-vertex anchors;
/// vertex `v` occupies `[anchor(v), anchor(v) + length]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UnitIntervalRepresentation {
    anchors: Vec<Rational>,
    length: Rational,
}

impl UnitIntervalRepresentation {
    /// Builds the family, rejecting a non-positive shared length.
    pub fn new(anchors: Vec<Rational>, length: Rational) -> Result<Self> {
        if le_exact(&length, &Rational::from_integer(0)) {
            return Err(Error::invalid(format!("shared interval length {length} must be positive")));
        }
        Ok(UnitIntervalRepresentation { anchors, length })
    }

    pub fn n(&self) -> usize {
        self.anchors.len()
    }

    pub fn anchor(&self, v: usize) -> &Rational {
        &self.anchors[v]
    }

    pub fn anchors(&self) -> &[Rational] {
        &self.anchors
    }

    pub fn length(&self) -> &Rational {
        &self.length
    }

    pub fn interval(&self, v: usize) -> Interval {
        Interval { lo: self.anchors[v], hi: self.anchors[v] + self.length }
    }

    /// The same family as plain intervals.
    pub fn to_intervals(&self) -> IntervalRepresentation {
        IntervalRepresentation::new((0..self.n()).map(|v| self.interval(v)).collect())
    }

    /// The graph with an edge wherever `|anchor(u) - anchor(v)| <= length`.
    pub fn intersection_graph(&self) -> Graph {
        let upper: Vec<Rational> = self.anchors.iter().map(|a| a + self.length).collect();
        Graph::from_pairwise(self.n(), |u, v| {
            le_exact(&self.anchors[u], &upper[v]) && le_exact(&self.anchors[v], &upper[u])
        })
    }
}
