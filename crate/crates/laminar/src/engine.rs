//! Structures, the entailment relation, and query answering with
//! active-domain grounding for non-ground queries.

use std::collections::BTreeSet;

use thiserror::Error;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::logic::{Formula, Query, QueryAssignment, Term, TimeTerm};
use crate::stream::{Stream, TimePoint};
use crate::windows::{WindowError, WindowRegistry};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EvalError {
    #[error(transparent)]
    Window(#[from] WindowError),
    #[error("formula is not ground")]
    NonGroundFormula,
    #[error("query time {0} lies outside the urstream timeline")]
    TimeOutsideTimeline(TimePoint),
    #[error("variable {0} occurs only negatively; its answers are not restricted to the active domain")]
    UnsafeQuery(String),
}

/// The urstream together with the window registry that interprets the
/// window operators of formulas evaluated against it.
#[derive(Clone, Debug)]
pub struct Structure {
    urstream: Stream,
    registry: WindowRegistry,
}

/// The answer to a query: yes/no for ground queries, a canonically
/// ordered set of query assignments otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Answer {
    Ground(bool),
    Assignments(BTreeSet<QueryAssignment>),
}

impl Structure {
    pub fn new(urstream: Stream, registry: WindowRegistry) -> Self {
        Structure { urstream, registry }
    }

    pub fn urstream(&self) -> &Stream {
        &self.urstream
    }

    pub fn registry(&self) -> &WindowRegistry {
        &self.registry
    }

    /// The entailment relation: does the ground formula `f` hold at
    /// time `t` with `current` as the window under consideration?
    pub fn entails(&self, current: &Stream, t: TimePoint, f: &Formula) -> Result<bool, EvalError> {
        if !f.is_ground() {
            return Err(EvalError::NonGroundFormula);
        }
        if !self.urstream.timeline().contains(t) {
            return Err(EvalError::TimeOutsideTimeline(t));
        }
        self.eval(current, t, f)
    }

    fn eval(&self, current: &Stream, t: TimePoint, f: &Formula) -> Result<bool, EvalError> {
        match f {
            Formula::Atom { .. } => {
                let atom = f.as_ground_atom().ok_or(EvalError::NonGroundFormula)?;
                Ok(current.atoms_at(t).contains(&atom))
            }
            Formula::Not(g) => Ok(!self.eval(current, t, g)?),
            Formula::And(g, h) => Ok(self.eval(current, t, g)? && self.eval(current, t, h)?),
            Formula::Or(g, h) => Ok(self.eval(current, t, g)? || self.eval(current, t, h)?),
            Formula::Implies(g, h) => Ok(!self.eval(current, t, g)? || self.eval(current, t, h)?),
            Formula::Sometime(g) => {
                for t2 in current.timeline().points() {
                    if self.eval(current, t2, g)? {
                        return Ok(true);
                    }
                }
                Ok(false)
            }
            Formula::Always(g) => {
                for t2 in current.timeline().points() {
                    if !self.eval(current, t2, g)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            Formula::At(tt, g) => {
                let TimeTerm::Point(t2) = tt else {
                    return Err(EvalError::NonGroundFormula);
                };
                Ok(current.timeline().contains(*t2) && self.eval(current, *t2, g)?)
            }
            Formula::Win(i, g) => {
                let window = self
                    .registry
                    .apply_extended(*i, &self.urstream, current, t)?;
                self.eval(&window, t, g)
            }
        }
    }

    /// Candidate assignments for a query: term variables range over the
    /// active domain (urstream constants plus query constants), time
    /// variables over the urstream timeline.
    pub fn enumerate_assignments(&self, q: &Query) -> Vec<QueryAssignment> {
        let (vars, times) = q.free_variables();
        let mut domain: BTreeSet<String> =
            self.urstream.constants().into_iter().map(String::from).collect();
        collect_query_constants(&q.formula, &mut domain);
        let domain: Vec<String> = domain.into_iter().collect();
        let points: Vec<TimePoint> = self.urstream.timeline().points().collect();

        let mut candidates = vec![QueryAssignment::default()];
        for v in &vars {
            candidates = candidates
                .into_iter()
                .flat_map(|a| {
                    domain.iter().map(move |c| {
                        let mut a = a.clone();
                        a.vars.insert(v.clone(), c.clone());
                        a
                    })
                })
                .collect();
        }
        for u in &times {
            candidates = candidates
                .into_iter()
                .flat_map(|a| {
                    points.iter().map(move |&t| {
                        let mut a = a.clone();
                        a.times.insert(u.clone(), t);
                        a
                    })
                })
                .collect();
        }
        candidates
    }

    /// Answers a query: yes/no if ground, otherwise the set of
    /// compatible assignments whose ground instances hold.
    ///
    /// With the `parallel` feature the candidate assignments are
    /// evaluated on the rayon thread pool; the result is identical to
    /// [`Structure::answer_sequential`].
    pub fn answer(&self, q: &Query) -> Result<Answer, EvalError> {
        self.answer_impl(q, cfg!(feature = "parallel"))
    }

    /// Single-threaded query answering.
    pub fn answer_sequential(&self, q: &Query) -> Result<Answer, EvalError> {
        self.answer_impl(q, false)
    }

    fn answer_impl(&self, q: &Query, parallel: bool) -> Result<Answer, EvalError> {
        for i in q.formula.window_indices() {
            if !self.registry.contains(i) {
                return Err(WindowError::UnregisteredWindow(i).into());
            }
        }
        if q.is_ground() {
            let TimeTerm::Point(t) = q.at else {
                unreachable!("ground query has a literal time")
            };
            return Ok(Answer::Ground(self.entails(&self.urstream, t, &q.formula)?));
        }
        if let Some(v) = first_unsafe_variable(&q.formula) {
            return Err(EvalError::UnsafeQuery(v));
        }
        let (free_vars, _) = q.free_variables();
        let urstream_atoms: BTreeSet<&crate::stream::GroundAtom> =
            self.urstream.entries().flat_map(|(_, atoms)| atoms).collect();
        let occurrences = positive_atom_occurrences(&q.formula);
        // Only supported assignments are reported: every variable
        // binding must be witnessed by a positively occurring atom that
        // holds somewhere in the urstream. This keeps vacuously
        // satisfied bindings (an implication whose antecedent never
        // fires, say) out of the answer.
        let witnessed = |a: &QueryAssignment| {
            free_vars.iter().all(|v| {
                occurrences
                    .iter()
                    .filter(|f| f.free_variables().0.contains(v))
                    .any(|f| {
                        a.apply(f)
                            .as_ground_atom()
                            .is_some_and(|g| urstream_atoms.contains(&g))
                    })
            })
        };
        let mut candidates = self.enumerate_assignments(q);
        candidates.retain(|a| witnessed(a));
        let check = |a: &QueryAssignment| -> Result<bool, EvalError> {
            if !a.is_compatible_with(q, self.urstream.timeline()) {
                return Ok(false);
            }
            let ground = a.apply_query(q);
            let TimeTerm::Point(t) = ground.at else {
                return Ok(false);
            };
            if !self.urstream.timeline().contains(t) {
                return Ok(false);
            }
            self.entails(&self.urstream, t, &ground.formula)
        };
        let verdicts: Result<Vec<bool>, EvalError> = run_checks(&candidates, check, parallel);
        let holds = candidates
            .into_iter()
            .zip(verdicts?)
            .filter_map(|(a, yes)| yes.then_some(a))
            .collect();
        Ok(Answer::Assignments(holds))
    }

    /// Evaluates the query at every time point of the urstream timeline
    /// in ascending order, fixing the query time (a literal or a time
    /// variable substituted throughout) to each point in turn.
    pub fn evaluate_continuous(&self, q: &Query) -> Result<Vec<(TimePoint, Answer)>, EvalError> {
        let mut results = Vec::new();
        for t in self.urstream.timeline().points() {
            let fixed = match &q.at {
                TimeTerm::Variable(u) => {
                    let mut a = QueryAssignment::default();
                    a.times.insert(u.clone(), t);
                    a.apply_query(q)
                }
                TimeTerm::Point(_) => Query::new(q.formula.clone(), TimeTerm::Point(t)),
            };
            results.push((t, self.answer(&fixed)?));
        }
        Ok(results)
    }
}

#[cfg(feature = "parallel")]
fn run_checks<F>(
    candidates: &[QueryAssignment],
    check: F,
    parallel: bool,
) -> Result<Vec<bool>, EvalError>
where
    F: Fn(&QueryAssignment) -> Result<bool, EvalError> + Sync,
{
    if parallel {
        candidates.par_iter().map(|a| check(a)).collect()
    } else {
        candidates.iter().map(check).collect()
    }
}

#[cfg(not(feature = "parallel"))]
fn run_checks<F>(
    candidates: &[QueryAssignment],
    check: F,
    _parallel: bool,
) -> Result<Vec<bool>, EvalError>
where
    F: Fn(&QueryAssignment) -> Result<bool, EvalError> + Sync,
{
    candidates.iter().map(check).collect()
}

fn collect_query_constants(f: &Formula, out: &mut BTreeSet<String>) {
    match f {
        Formula::Atom { args, .. } => {
            for t in args {
                if let Term::Constant(c) = t {
                    out.insert(c.clone());
                }
            }
        }
        Formula::Not(g)
        | Formula::Sometime(g)
        | Formula::Always(g)
        | Formula::At(_, g)
        | Formula::Win(_, g) => collect_query_constants(g, out),
        Formula::And(g, h) | Formula::Or(g, h) | Formula::Implies(g, h) => {
            collect_query_constants(g, out);
            collect_query_constants(h, out);
        }
    }
}

/// Atom subformulas under an even number of explicit negations; the
/// binding witnesses for supported answers.
fn positive_atom_occurrences(f: &Formula) -> Vec<Formula> {
    fn walk(f: &Formula, pos: bool, out: &mut Vec<Formula>) {
        match f {
            Formula::Atom { .. } => {
                if pos {
                    out.push(f.clone());
                }
            }
            Formula::Not(g) => walk(g, !pos, out),
            Formula::And(g, h) | Formula::Or(g, h) | Formula::Implies(g, h) => {
                walk(g, pos, out);
                walk(h, pos, out);
            }
            Formula::Sometime(g) | Formula::Always(g) | Formula::At(_, g) | Formula::Win(_, g) => {
                walk(g, pos, out)
            }
        }
    }
    let mut out = Vec::new();
    walk(f, true, &mut out);
    out
}

/// A term variable occurring only under an odd number of explicit
/// negations cannot be bounded by the active domain; answering such a
/// query would silently under-report.
fn first_unsafe_variable(f: &Formula) -> Option<String> {
    let mut positive = BTreeSet::new();
    let mut all = BTreeSet::new();
    collect_polarities(f, true, &mut positive, &mut all);
    all.into_iter().find(|v| !positive.contains(v))
}

fn collect_polarities(
    f: &Formula,
    pos: bool,
    positive: &mut BTreeSet<String>,
    all: &mut BTreeSet<String>,
) {
    match f {
        Formula::Atom { args, .. } => {
            for t in args {
                if let Term::Variable(v) = t {
                    all.insert(v.clone());
                    if pos {
                        positive.insert(v.clone());
                    }
                }
            }
        }
        Formula::Not(g) => collect_polarities(g, !pos, positive, all),
        Formula::And(g, h) | Formula::Or(g, h) | Formula::Implies(g, h) => {
            collect_polarities(g, pos, positive, all);
            collect_polarities(h, pos, positive, all);
        }
        Formula::Sometime(g) | Formula::Always(g) | Formula::At(_, g) | Formula::Win(_, g) => {
            collect_polarities(g, pos, positive, all)
        }
    }
}
