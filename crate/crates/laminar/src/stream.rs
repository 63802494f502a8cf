//! Streams as total maps from a bounded integer timeline to sets of
//! ground atoms, plus the basic stream algebra (restriction,
//! cardinality, substream test).

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::LazyLock;

use thiserror::Error;

/// Discrete time, dimensionless ticks.
pub type TimePoint = u64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StreamError {
    #[error("entry at time {0} lies outside the stream timeline")]
    EntryOutsideTimeline(TimePoint),
    #[error("interval is not contained in the stream timeline")]
    IntervalNotContained,
    #[error("invalid timeline: start {0} exceeds end {1}")]
    InvalidTimeline(TimePoint, TimePoint),
}

/// A predicate applied to zero or more constants, e.g. `tr(a,p1)`.
///
/// The ordering is predicate name, then arity, then arguments; tuple
/// windows rely on it to break ties deterministically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroundAtom {
    predicate: String,
    args: Vec<String>,
}

impl GroundAtom {
    pub fn new(predicate: impl Into<String>, args: Vec<String>) -> Self {
        let predicate = predicate.into();
        debug_assert!(is_lowercase_ident(&predicate));
        debug_assert!(args.iter().all(|a| is_lowercase_ident(a)));
        GroundAtom { predicate, args }
    }

    pub fn predicate(&self) -> &str {
        &self.predicate
    }

    pub fn args(&self) -> &[String] {
        &self.args
    }
}

pub(crate) fn is_lowercase_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_lowercase())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ord for GroundAtom {
    fn cmp(&self, other: &Self) -> Ordering {
        self.predicate
            .cmp(&other.predicate)
            .then(self.args.len().cmp(&other.args.len()))
            .then_with(|| self.args.cmp(&other.args))
    }
}

impl PartialOrd for GroundAtom {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GroundAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.predicate)?;
        if !self.args.is_empty() {
            write!(f, "({})", self.args.join(","))?;
        }
        Ok(())
    }
}

/// A closed interval `[start, end]` of time points.
///
/// User-facing timelines are non-empty (`start <= end`); window
/// functions may produce the empty interval when their clamped bounds
/// cross, so emptiness is representable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Timeline {
    bounds: Option<(TimePoint, TimePoint)>,
}

impl Timeline {
    pub fn new(start: TimePoint, end: TimePoint) -> Result<Self, StreamError> {
        if start > end {
            return Err(StreamError::InvalidTimeline(start, end));
        }
        Ok(Timeline {
            bounds: Some((start, end)),
        })
    }

    /// The interval `[start, end]`, empty when `start > end`.
    pub fn interval(start: TimePoint, end: TimePoint) -> Self {
        Timeline {
            bounds: (start <= end).then_some((start, end)),
        }
    }

    pub fn empty() -> Self {
        Timeline { bounds: None }
    }

    pub fn is_empty(&self) -> bool {
        self.bounds.is_none()
    }

    pub fn start(&self) -> Option<TimePoint> {
        self.bounds.map(|(s, _)| s)
    }

    pub fn end(&self) -> Option<TimePoint> {
        self.bounds.map(|(_, e)| e)
    }

    pub fn len(&self) -> u64 {
        match self.bounds {
            Some((s, e)) => e - s + 1,
            None => 0,
        }
    }

    pub fn contains(&self, t: TimePoint) -> bool {
        matches!(self.bounds, Some((s, e)) if s <= t && t <= e)
    }

    pub fn is_subset_of(&self, other: &Timeline) -> bool {
        match (self.bounds, other.bounds) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some((s1, e1)), Some((s2, e2))) => s2 <= s1 && e1 <= e2,
        }
    }

    pub fn points(&self) -> impl Iterator<Item = TimePoint> {
        let (s, e) = self.bounds.unwrap_or((1, 0));
        s..=e
    }
}

impl fmt::Display for Timeline {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.bounds {
            Some((s, e)) => write!(f, "[{s},{e}]"),
            None => write!(f, "[]"),
        }
    }
}

static NO_ATOMS: LazyLock<BTreeSet<GroundAtom>> = LazyLock::new(BTreeSet::new);

/// A timeline together with an interpretation mapping each of its time
/// points to a set of ground atoms. Points outside the timeline map to
/// the empty set. Immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stream {
    timeline: Timeline,
    interp: BTreeMap<TimePoint, BTreeSet<GroundAtom>>,
}

impl Stream {
    /// Builds a stream; every listed entry must lie inside the timeline
    /// and unlisted time points map to the empty set.
    pub fn new(
        timeline: Timeline,
        entries: BTreeMap<TimePoint, BTreeSet<GroundAtom>>,
    ) -> Result<Self, StreamError> {
        for (&t, atoms) in &entries {
            if !atoms.is_empty() && !timeline.contains(t) {
                return Err(StreamError::EntryOutsideTimeline(t));
            }
        }
        let interp = entries.into_iter().filter(|(_, a)| !a.is_empty()).collect();
        Ok(Stream { timeline, interp })
    }

    pub fn empty(timeline: Timeline) -> Self {
        Stream {
            timeline,
            interp: BTreeMap::new(),
        }
    }

    pub fn timeline(&self) -> &Timeline {
        &self.timeline
    }

    /// The interpretation at `t`; empty outside the timeline.
    pub fn atoms_at(&self, t: TimePoint) -> &BTreeSet<GroundAtom> {
        if self.timeline.contains(t) {
            self.interp.get(&t).unwrap_or(&NO_ATOMS)
        } else {
            &NO_ATOMS
        }
    }

    /// Non-empty interpretation entries, in time order.
    pub fn entries(&self) -> impl Iterator<Item = (TimePoint, &BTreeSet<GroundAtom>)> {
        self.interp.iter().map(|(&t, a)| (t, a))
    }

    /// Total number of atom occurrences, `Σ_t |v(t)|`.
    pub fn cardinality(&self) -> u64 {
        self.interp.values().map(|a| a.len() as u64).sum()
    }

    /// Restriction to `iv`, which must be contained in the timeline.
    pub fn restrict(&self, iv: Timeline) -> Result<Stream, StreamError> {
        if !iv.is_subset_of(&self.timeline) {
            return Err(StreamError::IntervalNotContained);
        }
        Ok(self.restrict_unchecked(iv))
    }

    pub(crate) fn restrict_unchecked(&self, iv: Timeline) -> Stream {
        let interp = match iv.bounds {
            None => BTreeMap::new(),
            Some((s, e)) => self
                .interp
                .range(s..=e)
                .map(|(&t, a)| (t, a.clone()))
                .collect(),
        };
        Stream {
            timeline: iv,
            interp,
        }
    }

    /// Atom occurrences within `[from, to]`, without materializing the
    /// restricted stream.
    pub(crate) fn count_in(&self, from: TimePoint, to: TimePoint) -> u64 {
        if from > to {
            return 0;
        }
        self.interp
            .range(from..=to)
            .map(|(_, a)| a.len() as u64)
            .sum()
    }

    /// Substream test: timeline contained and pointwise atom-set
    /// containment.
    pub fn is_window_of(&self, other: &Stream) -> bool {
        self.timeline.is_subset_of(&other.timeline)
            && self
                .interp
                .iter()
                .all(|(&t, atoms)| atoms.is_subset(other.atoms_at(t)))
    }

    /// Constants occurring in any atom of the stream.
    pub fn constants(&self) -> BTreeSet<&str> {
        self.interp
            .values()
            .flatten()
            .flat_map(|a| a.args().iter().map(String::as_str))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{atom, atoms, traffic_stream};

    #[test]
    fn make_stream_traffic() {
        let s = traffic_stream();
        assert_eq!(s.atoms_at(2).len(), 2);
        assert_eq!(s.atoms_at(8).len(), 1);
        assert_eq!(s.atoms_at(3).len(), 0);
        assert_eq!(s.atoms_at(99).len(), 0);
    }

    #[test]
    fn make_stream_empty() {
        let s = Stream::new(Timeline::new(0, 0).unwrap(), BTreeMap::new()).unwrap();
        assert!(s.atoms_at(0).is_empty());
    }

    #[test]
    fn make_stream_rejects_outside_entry() {
        let mut entries = BTreeMap::new();
        entries.insert(7, atoms(&[("p", &[])]));
        let err = Stream::new(Timeline::new(0, 5).unwrap(), entries).unwrap_err();
        assert_eq!(err, StreamError::EntryOutsideTimeline(7));
    }

    #[test]
    fn restrict_window() {
        let s = traffic_stream();
        let r = s.restrict(Timeline::new(6, 11).unwrap()).unwrap();
        assert_eq!(*r.timeline(), Timeline::new(6, 11).unwrap());
        assert_eq!(r.atoms_at(8), s.atoms_at(8));
        assert_eq!(r.atoms_at(11), s.atoms_at(11));
        assert!(r.atoms_at(2).is_empty());
        assert_eq!(r.cardinality(), 2);
    }

    #[test]
    fn restrict_identity_and_empty_range() {
        let s = traffic_stream();
        assert_eq!(s.restrict(Timeline::new(0, 13).unwrap()).unwrap(), s);
        let r = s.restrict(Timeline::new(3, 7).unwrap()).unwrap();
        assert_eq!(r.cardinality(), 0);
    }

    #[test]
    fn restrict_rejects_uncontained() {
        let s = traffic_stream();
        assert_eq!(
            s.restrict(Timeline::new(6, 20).unwrap()).unwrap_err(),
            StreamError::IntervalNotContained
        );
    }

    #[test]
    fn cardinality_counts_atoms() {
        let s = traffic_stream();
        assert_eq!(s.cardinality(), 4);
        assert_eq!(Stream::empty(Timeline::new(0, 0).unwrap()).cardinality(), 0);
    }

    #[test]
    fn substream_relation() {
        let s = traffic_stream();
        let r = s.restrict(Timeline::new(6, 11).unwrap()).unwrap();
        assert!(r.is_window_of(&s));
        assert!(!s.is_window_of(&r));
        assert!(s.is_window_of(&s));
    }

    #[test]
    fn atom_order_is_predicate_arity_args() {
        let a = atom("bus", &["c", "p1"]);
        let b = atom("tr", &["a", "p1"]);
        assert!(a < b);
        // shorter argument list sorts first for equal predicates
        assert!(atom("p", &["z"]) < atom("p", &["a", "b"]));
    }

    #[test]
    fn timeline_invariants() {
        assert!(Timeline::new(5, 3).is_err());
        assert!(Timeline::interval(5, 3).is_empty());
        assert_eq!(Timeline::interval(5, 3), Timeline::empty());
        assert_eq!(Timeline::new(2, 4).unwrap().len(), 3);
    }
}
