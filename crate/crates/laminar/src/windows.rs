//! The three window families (time-based, tuple-based,
//! partition-based), stream choices, and the window registry that maps
//! formula window indices to extended window functions.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::stream::{GroundAtom, Stream, TimePoint, Timeline};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WindowError {
    #[error("time point {0} lies outside the stream timeline")]
    TimeOutsideTimeline(TimePoint),
    #[error("invalid window spec: {0}")]
    InvalidSpec(String),
    #[error("window index {0} is not registered")]
    UnregisteredWindow(u32),
}

/// How tuple windows treat endpoint overflow: `ExactOrdered` trims the
/// endpoint sets to exact counts, keeping the smallest atoms first;
/// `AtLeast` keeps every atom in the selected interval.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TupleMode {
    #[default]
    ExactOrdered,
    AtLeast,
}

/// Time-based window with range `(past, future)` and step size `step`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TimeWindowSpec {
    past: u64,
    future: u64,
    step: u64,
}

impl TimeWindowSpec {
    pub fn new(past: u64, future: u64, step: u64) -> Result<Self, WindowError> {
        if step == 0 {
            return Err(WindowError::InvalidSpec("step size must be at least 1".into()));
        }
        // step <= past + future, except the [Now] window w^0
        if step > past + future && !(past == 0 && future == 0 && step == 1) {
            return Err(WindowError::InvalidSpec(format!(
                "step size {step} exceeds range {past}+{future}"
            )));
        }
        Ok(TimeWindowSpec { past, future, step })
    }

    /// The sliding window `w^l` looking `past` ticks back.
    pub fn sliding_past(past: u64) -> Self {
        TimeWindowSpec::new(past, 0, 1).expect("valid spec")
    }

    /// The window `w^{+u}` looking `future` ticks ahead.
    pub fn sliding_future(future: u64) -> Self {
        TimeWindowSpec::new(0, future, 1).expect("valid spec")
    }

    pub fn past(&self) -> u64 {
        self.past
    }

    pub fn future(&self) -> u64 {
        self.future
    }

    pub fn step(&self) -> u64 {
        self.step
    }

    /// Pivot point `⌊t/d⌋·d` for query time `t`.
    pub fn pivot(&self, t: TimePoint) -> TimePoint {
        t / self.step * self.step
    }

    /// The window of `s` at `t`: the restriction to
    /// `[max(t_min, pivot - past), min(pivot + future, t_max)]`.
    /// The interval may be empty when the clamped bounds cross.
    pub fn apply(&self, s: &Stream, t: TimePoint) -> Result<Stream, WindowError> {
        let (t_min, t_max) = in_timeline(s, t)?;
        let pivot = self.pivot(t);
        let lo = t_min.max(pivot.saturating_sub(self.past));
        let hi = t_max.min(pivot + self.future);
        Ok(s.restrict_unchecked(Timeline::interval(lo, hi)))
    }
}

fn in_timeline(s: &Stream, t: TimePoint) -> Result<(TimePoint, TimePoint), WindowError> {
    if !s.timeline().contains(t) {
        return Err(WindowError::TimeOutsideTimeline(t));
    }
    Ok((
        s.timeline().start().expect("non-empty"),
        s.timeline().end().expect("non-empty"),
    ))
}

/// The tuple time bounds `(t_l, t_u)`: the largest `t_l` such that
/// `[t_l, t]` holds at least `past_count` atoms (falling back to
/// `t_min`), and the smallest `t_u > t` such that `[t+1, t_u]` holds at
/// least `future_count` atoms (falling back to `t_max`). A zero future
/// count leaves the window anchored at `t`.
pub fn tuple_time_bounds(
    s: &Stream,
    t: TimePoint,
    past_count: u64,
    future_count: u64,
) -> Result<(TimePoint, TimePoint), WindowError> {
    let (t_min, t_max) = in_timeline(s, t)?;
    let t_l = if past_count == 0 {
        t
    } else {
        let mut seen = 0;
        let mut bound = t_min;
        let mut found = false;
        for (tp, atoms) in s.entries().filter(|&(tp, _)| tp <= t).collect::<Vec<_>>().into_iter().rev() {
            seen += atoms.len() as u64;
            if seen >= past_count {
                bound = tp;
                found = true;
                break;
            }
        }
        if found {
            bound
        } else {
            t_min
        }
    };
    let t_u = if future_count == 0 {
        t
    } else {
        let mut seen = 0;
        let mut bound = t_max;
        for (tp, atoms) in s.entries().filter(|&(tp, _)| tp > t) {
            seen += atoms.len() as u64;
            if seen >= future_count {
                bound = tp;
                break;
            }
        }
        bound
    };
    Ok((t_l, t_u))
}

/// Tuple-based window with counts `(past_count, future_count)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TupleWindowSpec {
    past_count: u64,
    future_count: u64,
    mode: TupleMode,
}

impl TupleWindowSpec {
    pub fn new(past_count: u64, future_count: u64, mode: TupleMode) -> Self {
        TupleWindowSpec {
            past_count,
            future_count,
            mode,
        }
    }

    pub fn apply(&self, s: &Stream, t: TimePoint) -> Result<Stream, WindowError> {
        let (t_l, t_u) = tuple_time_bounds(s, t, self.past_count, self.future_count)?;
        let base = s.restrict_unchecked(Timeline::interval(t_l, t_u));
        if self.mode == TupleMode::AtLeast {
            return Ok(base);
        }
        let mut entries: BTreeMap<_, _> = base.entries().map(|(tp, a)| (tp, a.clone())).collect();
        // trim the past endpoint to exactly past_count atoms in [t_l, t]
        if s.count_in(t_l, t) > self.past_count {
            let keep = self.past_count - s.count_in(t_l + 1, t);
            trim_smallest(&mut entries, t_l, keep);
        }
        // trim the future endpoint to exactly future_count atoms in [t+1, t_u]
        if t_u > t && s.count_in(t + 1, t_u) > self.future_count {
            let keep = self.future_count - s.count_in(t + 1, t_u - 1);
            trim_smallest(&mut entries, t_u, keep);
        }
        entries.retain(|_, a| !a.is_empty());
        Ok(Stream::new(*base.timeline(), entries).expect("entries within timeline"))
    }
}

fn trim_smallest(
    entries: &mut BTreeMap<TimePoint, std::collections::BTreeSet<GroundAtom>>,
    at: TimePoint,
    keep: u64,
) {
    if let Some(atoms) = entries.get_mut(&at) {
        // BTreeSet iterates in ascending order; keep the smallest atoms
        *atoms = atoms.iter().take(keep as usize).cloned().collect();
    }
}

/// Predicate-dispatch index function with a default bucket.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexFn {
    by_predicate: BTreeMap<String, u32>,
    default: u32,
}

impl IndexFn {
    pub fn new(by_predicate: BTreeMap<String, u32>, default: u32) -> Self {
        IndexFn {
            by_predicate,
            default,
        }
    }

    pub fn index_of(&self, atom: &GroundAtom) -> u32 {
        self.by_predicate
            .get(atom.predicate())
            .copied()
            .unwrap_or(self.default)
    }

    /// The substream of atoms mapped to index `i`; same timeline.
    pub fn substream(&self, i: u32, s: &Stream) -> Stream {
        let entries: BTreeMap<_, _> = s
            .entries()
            .map(|(t, atoms)| {
                (
                    t,
                    atoms
                        .iter()
                        .filter(|a| self.index_of(a) == i)
                        .cloned()
                        .collect(),
                )
            })
            .collect();
        Stream::new(*s.timeline(), entries).expect("entries within timeline")
    }
}

/// Partition-based window: per-index tuple windows over the index
/// substreams, recombined over the convex hull of their intervals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionWindowSpec {
    index: IndexFn,
    counts: BTreeMap<u32, (u64, u64)>,
    mode: TupleMode,
}

impl PartitionWindowSpec {
    pub fn new(
        index: IndexFn,
        counts: BTreeMap<u32, (u64, u64)>,
        mode: TupleMode,
    ) -> Result<Self, WindowError> {
        if !counts.contains_key(&index.default) {
            return Err(WindowError::InvalidSpec(format!(
                "default index {} has no tuple counts",
                index.default
            )));
        }
        for (pred, i) in &index.by_predicate {
            if !counts.contains_key(i) {
                return Err(WindowError::InvalidSpec(format!(
                    "index {i} (predicate {pred}) has no tuple counts"
                )));
            }
        }
        Ok(PartitionWindowSpec {
            index,
            counts,
            mode,
        })
    }

    pub fn apply(&self, s: &Stream, t: TimePoint) -> Result<Stream, WindowError> {
        in_timeline(s, t)?;
        let mut lo = TimePoint::MAX;
        let mut hi = TimePoint::MIN;
        let mut entries: BTreeMap<TimePoint, std::collections::BTreeSet<GroundAtom>> =
            BTreeMap::new();
        for (&i, &(past, future)) in &self.counts {
            let sub = self.index.substream(i, s);
            let win = TupleWindowSpec::new(past, future, self.mode).apply(&sub, t)?;
            lo = lo.min(win.timeline().start().expect("tuple window non-empty"));
            hi = hi.max(win.timeline().end().expect("tuple window non-empty"));
            for (tp, atoms) in win.entries() {
                entries.entry(tp).or_default().extend(atoms.iter().cloned());
            }
        }
        Stream::new(Timeline::interval(lo, hi), entries)
            .map_err(|_| WindowError::InvalidSpec("partition window out of bounds".into()))
    }
}

/// One of the three window families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WindowSpec {
    Time(TimeWindowSpec),
    Tuple(TupleWindowSpec),
    Partition(PartitionWindowSpec),
}

impl WindowSpec {
    pub fn apply(&self, s: &Stream, t: TimePoint) -> Result<Stream, WindowError> {
        match self {
            WindowSpec::Time(w) => w.apply(s, t),
            WindowSpec::Tuple(w) => w.apply(s, t),
            WindowSpec::Partition(w) => w.apply(s, t),
        }
    }
}

/// Selects which input stream an extended window function consumes:
/// the fixed urstream or the current window.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StreamChoice {
    Urstream,
    Current,
}

/// Maps each window index occurring in formulas to an extended window
/// function, i.e. a window spec plus a stream choice.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WindowRegistry {
    windows: BTreeMap<u32, (WindowSpec, StreamChoice)>,
}

impl WindowRegistry {
    pub fn new() -> Self {
        WindowRegistry::default()
    }

    pub fn register(&mut self, index: u32, spec: WindowSpec, choice: StreamChoice) {
        self.windows.insert(index, (spec, choice));
    }

    pub fn get(&self, index: u32) -> Option<&(WindowSpec, StreamChoice)> {
        self.windows.get(&index)
    }

    pub fn contains(&self, index: u32) -> bool {
        self.windows.contains_key(&index)
    }

    pub fn indices(&self) -> impl Iterator<Item = u32> + '_ {
        self.windows.keys().copied()
    }

    /// Applies the extended window function for `index` to the stream
    /// selected by its stream choice.
    pub fn apply_extended(
        &self,
        index: u32,
        urstream: &Stream,
        current: &Stream,
        t: TimePoint,
    ) -> Result<Stream, WindowError> {
        let (spec, choice) = self
            .windows
            .get(&index)
            .ok_or(WindowError::UnregisteredWindow(index))?;
        let input = match choice {
            StreamChoice::Urstream => urstream,
            StreamChoice::Current => current,
        };
        spec.apply(input, t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{atom, stream_of, traffic_stream};

    #[test]
    fn sliding_window_at_5_and_11() {
        let s = traffic_stream();
        let w = TimeWindowSpec::sliding_past(5);
        let r = w.apply(&s, 5).unwrap();
        assert_eq!(*r.timeline(), Timeline::new(0, 5).unwrap());
        assert_eq!(r.atoms_at(2).len(), 2);
        assert_eq!(r.cardinality(), 2);

        let r = w.apply(&s, 11).unwrap();
        assert_eq!(*r.timeline(), Timeline::new(6, 11).unwrap());
        assert!(r.atoms_at(8).contains(&atom("tr", &["d", "p2"])));
        assert!(r.atoms_at(11).contains(&atom("bus", &["e", "p2"])));
        assert_eq!(r.cardinality(), 2);
    }

    #[test]
    fn tumbling_window_with_step_3() {
        let s = traffic_stream();
        let w = TimeWindowSpec::new(2, 1, 3).unwrap();
        let r = w.apply(&s, 5).unwrap();
        assert_eq!(*r.timeline(), Timeline::new(1, 4).unwrap());
        assert_eq!(r.atoms_at(2).len(), 2);

        let r = w.apply(&s, 11).unwrap();
        assert_eq!(*r.timeline(), Timeline::new(7, 10).unwrap());
        assert_eq!(r.cardinality(), 1);
        assert!(r.atoms_at(8).contains(&atom("tr", &["d", "p2"])));
    }

    #[test]
    fn now_window_keeps_only_t() {
        let s = traffic_stream();
        let w = TimeWindowSpec::new(0, 0, 1).unwrap();
        let r = w.apply(&s, 8).unwrap();
        assert_eq!(*r.timeline(), Timeline::new(8, 8).unwrap());
        assert_eq!(r.cardinality(), 1);
    }

    #[test]
    fn invalid_step_rejected() {
        assert!(TimeWindowSpec::new(1, 0, 5).is_err());
        assert!(TimeWindowSpec::new(0, 0, 2).is_err());
        assert!(TimeWindowSpec::new(0, 0, 1).is_ok());
    }

    #[test]
    fn time_outside_timeline() {
        let s = traffic_stream();
        assert_eq!(
            TimeWindowSpec::sliding_past(5).apply(&s, 99).unwrap_err(),
            WindowError::TimeOutsideTimeline(99)
        );
    }

    #[test]
    fn tuple_time_bounds_examples() {
        let s = traffic_stream();
        assert_eq!(tuple_time_bounds(&s, 11, 3, 0).unwrap(), (2, 11));
        assert_eq!(tuple_time_bounds(&s, 2, 0, 1).unwrap(), (2, 8));
        let idx = IndexFn::new(BTreeMap::from([("tr".into(), 1)]), 2);
        let s2 = idx.substream(2, &s.restrict(Timeline::new(2, 13).unwrap()).unwrap());
        assert_eq!(tuple_time_bounds(&s2, 13, 0, 0).unwrap(), (13, 13));
    }

    #[test]
    fn tuple_window_exact_ordered_picks_smallest() {
        let s = traffic_stream();
        let w = TupleWindowSpec::new(3, 0, TupleMode::ExactOrdered);
        let r = w.apply(&s, 11).unwrap();
        assert_eq!(*r.timeline(), Timeline::new(2, 11).unwrap());
        // bus(c,p1) precedes tr(a,p1) in the atom order
        assert_eq!(
            r.atoms_at(2).iter().collect::<Vec<_>>(),
            vec![&atom("bus", &["c", "p1"])]
        );
        assert_eq!(r.cardinality(), 3);
    }

    #[test]
    fn tuple_window_at_least_keeps_all() {
        let s = traffic_stream();
        let w = TupleWindowSpec::new(3, 0, TupleMode::AtLeast);
        let r = w.apply(&s, 11).unwrap();
        assert_eq!(r, s.restrict(Timeline::new(2, 11).unwrap()).unwrap());
        assert_eq!(r.cardinality(), 4);
    }

    #[test]
    fn tuple_window_zero_counts() {
        let s = traffic_stream();
        let w = TupleWindowSpec::new(0, 0, TupleMode::ExactOrdered);
        let r = w.apply(&s, 13).unwrap();
        assert_eq!(*r.timeline(), Timeline::new(13, 13).unwrap());
        assert_eq!(r.cardinality(), 0);
        // with atoms present at t, exact mode drops them down to the count
        let r = w.apply(&s, 11).unwrap();
        assert_eq!(r.cardinality(), 0);
    }

    #[test]
    fn index_substreams() {
        let s = traffic_stream()
            .restrict(Timeline::new(2, 13).unwrap())
            .unwrap();
        let idx = IndexFn::new(BTreeMap::from([("tr".into(), 1)]), 2);
        let s1 = idx.substream(1, &s);
        assert_eq!(
            s1,
            stream_of(
                2,
                13,
                &[(2, "tr", &["a", "p1"]), (8, "tr", &["d", "p2"])]
            )
        );
        let s2 = idx.substream(2, &s);
        assert_eq!(
            s2,
            stream_of(
                2,
                13,
                &[(2, "bus", &["c", "p1"]), (11, "bus", &["e", "p2"])]
            )
        );
        let empty = Stream::empty(Timeline::new(0, 3).unwrap());
        assert_eq!(idx.substream(1, &empty), empty);
    }

    #[test]
    fn partition_window_last_two_trams() {
        let s = traffic_stream()
            .restrict(Timeline::new(2, 13).unwrap())
            .unwrap();
        let idx = IndexFn::new(BTreeMap::from([("tr".into(), 1)]), 2);
        let counts = BTreeMap::from([(1, (2, 0)), (2, (0, 0))]);
        let w = PartitionWindowSpec::new(idx, counts, TupleMode::ExactOrdered).unwrap();
        let r = w.apply(&s, 13).unwrap();
        assert_eq!(
            r,
            stream_of(
                2,
                13,
                &[(2, "tr", &["a", "p1"]), (8, "tr", &["d", "p2"])]
            )
        );
    }

    #[test]
    fn partition_window_validates_indices() {
        let idx = IndexFn::new(BTreeMap::from([("tr".into(), 1)]), 2);
        let counts = BTreeMap::from([(1, (2, 0))]);
        assert!(PartitionWindowSpec::new(idx, counts, TupleMode::ExactOrdered).is_err());
    }

    #[test]
    fn partition_window_large_counts_keep_everything() {
        let s = traffic_stream();
        let idx = IndexFn::new(BTreeMap::new(), 1);
        let counts = BTreeMap::from([(1, (1000, 0))]);
        let w = PartitionWindowSpec::new(idx, counts, TupleMode::ExactOrdered).unwrap();
        let r = w.apply(&s, 13).unwrap();
        assert_eq!(r, s);
    }

    #[test]
    fn registry_applies_choice() {
        let s = traffic_stream();
        let mut reg = WindowRegistry::new();
        reg.register(
            1,
            WindowSpec::Time(TimeWindowSpec::sliding_past(5)),
            StreamChoice::Current,
        );
        reg.register(
            2,
            WindowSpec::Time(TimeWindowSpec::sliding_future(3)),
            StreamChoice::Urstream,
        );

        let r = reg.apply_extended(1, &s, &s, 11).unwrap();
        assert_eq!(*r.timeline(), Timeline::new(6, 11).unwrap());
        assert_eq!(r.cardinality(), 2);

        // nested-window scenario: current is the tram-only window but
        // the future window consults the urstream
        let idx = IndexFn::new(BTreeMap::from([("tr".into(), 1)]), 2);
        let trams = idx.substream(
            1,
            &s.restrict(Timeline::new(2, 13).unwrap()).unwrap(),
        );
        let r = reg.apply_extended(2, &s, &trams, 2).unwrap();
        assert_eq!(*r.timeline(), Timeline::new(2, 5).unwrap());
        assert_eq!(r.atoms_at(2).len(), 2);

        let r = reg.apply_extended(2, &s, &trams, 8).unwrap();
        assert_eq!(*r.timeline(), Timeline::new(8, 11).unwrap());
        assert_eq!(r.cardinality(), 2);

        assert_eq!(
            reg.apply_extended(9, &s, &s, 0).unwrap_err(),
            WindowError::UnregisteredWindow(9)
        );
    }
}
