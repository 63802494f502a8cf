//! Formula and query AST, groundness, free variables, and the
//! substitution machinery for query assignments.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::stream::{GroundAtom, TimePoint, Timeline};

/// A constant (lowercase-initial) or variable (uppercase-initial) term.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Constant(String),
    Variable(String),
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Constant(c) => write!(f, "{c}"),
            Term::Variable(v) => write!(f, "{v}"),
        }
    }
}

/// A time literal or a time variable.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TimeTerm {
    Point(TimePoint),
    Variable(String),
}

impl fmt::Display for TimeTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TimeTerm::Point(t) => write!(f, "{t}"),
            TimeTerm::Variable(u) => write!(f, "{u}"),
        }
    }
}

/// The modal formula language: atoms, classical connectives, the
/// sometime/always modalities, exact time reference, and window
/// operators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Formula {
    Atom { predicate: String, args: Vec<Term> },
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Sometime(Box<Formula>),
    Always(Box<Formula>),
    At(TimeTerm, Box<Formula>),
    Win(u32, Box<Formula>),
}

impl Formula {
    pub fn atom(predicate: impl Into<String>, args: Vec<Term>) -> Self {
        Formula::Atom {
            predicate: predicate.into(),
            args,
        }
    }

    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn and(f: Formula, g: Formula) -> Self {
        Formula::And(Box::new(f), Box::new(g))
    }

    pub fn or(f: Formula, g: Formula) -> Self {
        Formula::Or(Box::new(f), Box::new(g))
    }

    pub fn implies(f: Formula, g: Formula) -> Self {
        Formula::Implies(Box::new(f), Box::new(g))
    }

    pub fn sometime(f: Formula) -> Self {
        Formula::Sometime(Box::new(f))
    }

    pub fn always(f: Formula) -> Self {
        Formula::Always(Box::new(f))
    }

    pub fn at(t: TimeTerm, f: Formula) -> Self {
        Formula::At(t, Box::new(f))
    }

    pub fn win(i: u32, f: Formula) -> Self {
        Formula::Win(i, Box::new(f))
    }

    pub fn is_ground(&self) -> bool {
        match self {
            Formula::Atom { args, .. } => args.iter().all(|t| matches!(t, Term::Constant(_))),
            Formula::Not(f) | Formula::Sometime(f) | Formula::Always(f) | Formula::Win(_, f) => {
                f.is_ground()
            }
            Formula::And(f, g) | Formula::Or(f, g) | Formula::Implies(f, g) => {
                f.is_ground() && g.is_ground()
            }
            Formula::At(t, f) => matches!(t, TimeTerm::Point(_)) && f.is_ground(),
        }
    }

    /// The ground atom this formula node denotes, if it is a ground atom.
    pub fn as_ground_atom(&self) -> Option<GroundAtom> {
        if let Formula::Atom { predicate, args } = self {
            let consts: Option<Vec<String>> = args
                .iter()
                .map(|t| match t {
                    Term::Constant(c) => Some(c.clone()),
                    Term::Variable(_) => None,
                })
                .collect();
            return consts.map(|c| GroundAtom::new(predicate.clone(), c));
        }
        None
    }

    pub fn free_variables(&self) -> (BTreeSet<String>, BTreeSet<String>) {
        let mut vars = BTreeSet::new();
        let mut times = BTreeSet::new();
        self.collect_variables(&mut vars, &mut times);
        (vars, times)
    }

    fn collect_variables(&self, vars: &mut BTreeSet<String>, times: &mut BTreeSet<String>) {
        match self {
            Formula::Atom { args, .. } => {
                for t in args {
                    if let Term::Variable(v) = t {
                        vars.insert(v.clone());
                    }
                }
            }
            Formula::Not(f) | Formula::Sometime(f) | Formula::Always(f) | Formula::Win(_, f) => {
                f.collect_variables(vars, times)
            }
            Formula::And(f, g) | Formula::Or(f, g) | Formula::Implies(f, g) => {
                f.collect_variables(vars, times);
                g.collect_variables(vars, times);
            }
            Formula::At(t, f) => {
                if let TimeTerm::Variable(u) = t {
                    times.insert(u.clone());
                }
                f.collect_variables(vars, times);
            }
        }
    }

    /// Window indices occurring anywhere in the formula.
    pub fn window_indices(&self) -> BTreeSet<u32> {
        let mut indices = BTreeSet::new();
        self.collect_window_indices(&mut indices);
        indices
    }

    fn collect_window_indices(&self, indices: &mut BTreeSet<u32>) {
        match self {
            Formula::Atom { .. } => {}
            Formula::Win(i, f) => {
                indices.insert(*i);
                f.collect_window_indices(indices);
            }
            Formula::Not(f) | Formula::Sometime(f) | Formula::Always(f) | Formula::At(_, f) => {
                f.collect_window_indices(indices)
            }
            Formula::And(f, g) | Formula::Or(f, g) | Formula::Implies(f, g) => {
                f.collect_window_indices(indices);
                g.collect_window_indices(indices);
            }
        }
    }
}

/// A formula paired with a query time (literal or time variable).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Query {
    pub formula: Formula,
    pub at: TimeTerm,
}

impl Query {
    pub fn new(formula: Formula, at: TimeTerm) -> Self {
        Query { formula, at }
    }

    pub fn is_ground(&self) -> bool {
        matches!(self.at, TimeTerm::Point(_)) && {
            let (vars, times) = self.formula.free_variables();
            vars.is_empty() && times.is_empty() && self.formula.is_ground()
        }
    }

    /// All variables and time variables occurring in the query,
    /// including the query time.
    pub fn free_variables(&self) -> (BTreeSet<String>, BTreeSet<String>) {
        let (vars, mut times) = self.formula.free_variables();
        if let TimeTerm::Variable(u) = &self.at {
            times.insert(u.clone());
        }
        (vars, times)
    }
}

/// A variable assignment `σ` and a time variable assignment `τ`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct QueryAssignment {
    pub vars: BTreeMap<String, String>,
    pub times: BTreeMap<String, TimePoint>,
}

impl QueryAssignment {
    pub fn new(vars: BTreeMap<String, String>, times: BTreeMap<String, TimePoint>) -> Self {
        QueryAssignment { vars, times }
    }

    fn term(&self, t: &Term) -> Term {
        match t {
            Term::Constant(_) => t.clone(),
            Term::Variable(v) => match self.vars.get(v) {
                Some(c) => Term::Constant(c.clone()),
                None => t.clone(),
            },
        }
    }

    fn time_term(&self, t: &TimeTerm) -> TimeTerm {
        match t {
            TimeTerm::Point(_) => t.clone(),
            TimeTerm::Variable(u) => match self.times.get(u) {
                Some(&tp) => TimeTerm::Point(tp),
                None => t.clone(),
            },
        }
    }

    /// Structural substitution; unmapped variables pass through.
    pub fn apply(&self, f: &Formula) -> Formula {
        match f {
            Formula::Atom { predicate, args } => Formula::Atom {
                predicate: predicate.clone(),
                args: args.iter().map(|t| self.term(t)).collect(),
            },
            Formula::Not(g) => Formula::not(self.apply(g)),
            Formula::And(g, h) => Formula::and(self.apply(g), self.apply(h)),
            Formula::Or(g, h) => Formula::or(self.apply(g), self.apply(h)),
            Formula::Implies(g, h) => Formula::implies(self.apply(g), self.apply(h)),
            Formula::Sometime(g) => Formula::sometime(self.apply(g)),
            Formula::Always(g) => Formula::always(self.apply(g)),
            Formula::At(t, g) => Formula::at(self.time_term(t), self.apply(g)),
            Formula::Win(i, g) => Formula::win(*i, self.apply(g)),
        }
    }

    pub fn apply_query(&self, q: &Query) -> Query {
        Query {
            formula: self.apply(&q.formula),
            at: self.time_term(&q.at),
        }
    }

    /// True iff substituting grounds the query and every time variable
    /// occurring in it is mapped into the timeline.
    pub fn is_compatible_with(&self, q: &Query, timeline: &Timeline) -> bool {
        if !self.apply_query(q).is_ground() {
            return false;
        }
        let (_, times) = q.free_variables();
        times
            .iter()
            .all(|u| self.times.get(u).is_some_and(|&t| timeline.contains(t)))
    }
}
