//! Stream reasoning over timestamped atom streams.
//!
//! A [`Stream`](stream::Stream) maps each point of a bounded integer
//! timeline to a set of ground atoms. Window functions
//! ([`windows`]) select substreams around a query time: by time range,
//! by atom counts, or per predicate partition. Formulas ([`logic`])
//! combine atoms with classical connectives, the sometime/always
//! modalities, exact time references, and window operators; a
//! [`Structure`](engine::Structure) evaluates ground formulas and
//! answers non-ground queries by active-domain grounding. The [`io`]
//! module provides the textual stream, query, and registry formats and
//! the JSON answer serialization used by the CLI.

pub mod engine;
pub mod io;
pub mod logic;
pub mod stream;
pub mod windows;

pub use engine::{Answer, EvalError, Structure};
pub use logic::{Formula, Query, QueryAssignment, Term, TimeTerm};
pub use stream::{GroundAtom, Stream, StreamError, TimePoint, Timeline};
pub use windows::{StreamChoice, TupleMode, WindowError, WindowRegistry, WindowSpec};
