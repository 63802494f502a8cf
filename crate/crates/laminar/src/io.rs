//! Textual formats: stream documents, the query grammar, the window
//! registry config, and answer serialization.
//!
//! Stream documents are line based: a `timeline <tmin> <tmax>` header
//! followed by `<t> <atom>(, <atom>)*` event lines. `#` starts a
//! comment, blank lines are ignored, duplicate times merge.
//!
//! The query grammar, tightest to loosest: unary operators
//! (`not`, `sometime`, `always`, `@ <time>`, `win <i>`), `and`, `or`,
//! `->` (right-associative); parentheses override. A query is a
//! formula followed by `[<time>]`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::Deserialize;
use serde_json::json;
use thiserror::Error;

use crate::engine::Answer;
use crate::logic::{Formula, Query, Term, TimeTerm};
use crate::stream::{GroundAtom, Stream, StreamError, Timeline, is_lowercase_ident};
use crate::windows::{
    IndexFn, PartitionWindowSpec, StreamChoice, TimeWindowSpec, TupleMode, TupleWindowSpec,
    WindowError, WindowRegistry, WindowSpec,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("stream file declares no timeline")]
    MissingTimeline,
    #[error("identifier {0} is used both as a term variable and a time variable")]
    MixedVariableNamespace(String),
    #[error("unknown window kind \"{0}\"")]
    UnknownKind(String),
    #[error(transparent)]
    Stream(#[from] StreamError),
    #[error(transparent)]
    Window(#[from] WindowError),
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        msg: msg.into(),
    }
}

// ---------------------------------------------------------------------
// stream documents

pub fn parse_stream(text: &str) -> Result<Stream, ParseError> {
    let mut timeline: Option<Timeline> = None;
    let mut entries: BTreeMap<u64, BTreeSet<GroundAtom>> = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.splitn(2, char::is_whitespace);
        let head = parts.next().unwrap();
        let rest = parts.next().unwrap_or("").trim();
        if head == "timeline" {
            if timeline.is_some() {
                return Err(syntax(lineno, "duplicate timeline declaration"));
            }
            let mut nums = rest.split_whitespace();
            let (Some(lo), Some(hi), None) = (nums.next(), nums.next(), nums.next()) else {
                return Err(syntax(lineno, "expected: timeline <tmin> <tmax>"));
            };
            let lo: u64 = lo.parse().map_err(|_| syntax(lineno, "invalid time point"))?;
            let hi: u64 = hi.parse().map_err(|_| syntax(lineno, "invalid time point"))?;
            timeline = Some(Timeline::new(lo, hi)?);
        } else {
            let t: u64 = head
                .parse()
                .map_err(|_| syntax(lineno, format!("expected a time point, found \"{head}\"")))?;
            if timeline.is_none() {
                return Err(ParseError::MissingTimeline);
            }
            let set = entries.entry(t).or_default();
            for atom_text in split_atoms(rest).map(str::trim).filter(|s| !s.is_empty()) {
                set.insert(parse_atom_text(atom_text, lineno)?);
            }
        }
    }
    let timeline = timeline.ok_or(ParseError::MissingTimeline)?;
    Ok(Stream::new(timeline, entries)?)
}

/// Splits an event line on commas outside parentheses.
fn split_atoms(text: &str) -> impl Iterator<Item = &str> {
    let mut depth = 0u32;
    text.split(move |c| match c {
        '(' => {
            depth += 1;
            false
        }
        ')' => {
            depth = depth.saturating_sub(1);
            false
        }
        ',' => depth == 0,
        _ => false,
    })
}

fn parse_atom_text(text: &str, lineno: usize) -> Result<GroundAtom, ParseError> {
    let (name, args) = match text.find('(') {
        None => (text, vec![]),
        Some(open) => {
            let Some(inner) = text[open + 1..].strip_suffix(')') else {
                return Err(syntax(lineno, format!("unclosed atom \"{text}\"")));
            };
            let args: Vec<String> = inner.split(',').map(|s| s.trim().to_string()).collect();
            (&text[..open], args)
        }
    };
    if !is_lowercase_ident(name) || !name_args_ok(&args) {
        return Err(syntax(lineno, format!("invalid atom \"{text}\"")));
    }
    Ok(GroundAtom::new(name, args))
}

fn name_args_ok(args: &[String]) -> bool {
    args.iter().all(|a| is_lowercase_ident(a))
}

pub fn serialize_stream(s: &Stream) -> String {
    let mut out = String::new();
    match (s.timeline().start(), s.timeline().end()) {
        (Some(lo), Some(hi)) => {
            writeln!(out, "timeline {lo} {hi}").unwrap();
        }
        _ => {
            out.push_str("# empty window\n");
            return out;
        }
    }
    for (t, atoms) in s.entries() {
        let rendered: Vec<String> = atoms.iter().map(|a| a.to_string()).collect();
        writeln!(out, "{t} {}", rendered.join(", ")).unwrap();
    }
    out
}

// ---------------------------------------------------------------------
// query grammar

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Ident(String),
    Nat(u64),
    LParen,
    RParen,
    Comma,
    LBracket,
    RBracket,
    At,
    Arrow,
}

fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut tokens = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '(' => {
                chars.next();
                tokens.push(Token::LParen);
            }
            ')' => {
                chars.next();
                tokens.push(Token::RParen);
            }
            ',' => {
                chars.next();
                tokens.push(Token::Comma);
            }
            '[' => {
                chars.next();
                tokens.push(Token::LBracket);
            }
            ']' => {
                chars.next();
                tokens.push(Token::RBracket);
            }
            '@' => {
                chars.next();
                tokens.push(Token::At);
            }
            '-' => {
                chars.next();
                match chars.peek() {
                    Some(&(_, '>')) => {
                        chars.next();
                        tokens.push(Token::Arrow);
                    }
                    _ => return Err(syntax(1, format!("unexpected \"-\" at offset {pos}"))),
                }
            }
            c if c.is_ascii_digit() => {
                let mut n = String::new();
                while let Some(&(_, d)) = chars.peek() {
                    if d.is_ascii_digit() {
                        n.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                let value = n
                    .parse()
                    .map_err(|_| syntax(1, format!("number out of range at offset {pos}")))?;
                tokens.push(Token::Nat(value));
            }
            c if c.is_ascii_alphabetic() => {
                let mut id = String::new();
                while let Some(&(_, d)) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        id.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push(Token::Ident(id));
            }
            other => return Err(syntax(1, format!("unexpected character \"{other}\" at offset {pos}"))),
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, token: Token, what: &str) -> Result<(), ParseError> {
        match self.next() {
            Some(t) if t == token => Ok(()),
            other => Err(syntax(1, format!("expected {what}, found {other:?}"))),
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.disjunction()?;
        if self.peek() == Some(&Token::Arrow) {
            self.next();
            let rhs = self.formula()?; // right-associative
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.conjunction()?;
        while self.peek() == Some(&Token::Ident("or".into())) {
            self.next();
            f = Formula::or(f, self.conjunction()?);
        }
        Ok(f)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.unary()?;
        while self.peek() == Some(&Token::Ident("and".into())) {
            self.next();
            f = Formula::and(f, self.unary()?);
        }
        Ok(f)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Some(Token::Ident(kw)) if kw == "not" => {
                self.next();
                Ok(Formula::not(self.unary()?))
            }
            Some(Token::Ident(kw)) if kw == "sometime" => {
                self.next();
                Ok(Formula::sometime(self.unary()?))
            }
            Some(Token::Ident(kw)) if kw == "always" => {
                self.next();
                Ok(Formula::always(self.unary()?))
            }
            Some(Token::Ident(kw)) if kw == "win" => {
                self.next();
                match self.next() {
                    Some(Token::Nat(i)) if i >= 1 && i <= u32::MAX as u64 => {
                        Ok(Formula::win(i as u32, self.unary()?))
                    }
                    other => Err(syntax(1, format!("expected a window index after \"win\", found {other:?}"))),
                }
            }
            Some(Token::At) => {
                self.next();
                let t = self.time_term()?;
                Ok(Formula::at(t, self.unary()?))
            }
            _ => self.primary(),
        }
    }

    fn primary(&mut self) -> Result<Formula, ParseError> {
        match self.next() {
            Some(Token::LParen) => {
                let f = self.formula()?;
                self.expect(Token::RParen, "\")\"")?;
                Ok(f)
            }
            Some(Token::Ident(name)) if starts_lower(&name) => {
                if is_keyword(&name) {
                    return Err(syntax(1, format!("keyword \"{name}\" cannot start an atom")));
                }
                let mut args = Vec::new();
                if self.peek() == Some(&Token::LParen) {
                    self.next();
                    loop {
                        args.push(self.term()?);
                        match self.next() {
                            Some(Token::Comma) => continue,
                            Some(Token::RParen) => break,
                            other => {
                                return Err(syntax(1, format!("expected \",\" or \")\", found {other:?}")))
                            }
                        }
                    }
                }
                Ok(Formula::atom(name, args))
            }
            other => Err(syntax(1, format!("expected a formula, found {other:?}"))),
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        match self.next() {
            Some(Token::Ident(name)) if starts_lower(&name) => {
                if is_keyword(&name) {
                    return Err(syntax(1, format!("keyword \"{name}\" cannot be a term")));
                }
                Ok(Term::Constant(name))
            }
            Some(Token::Ident(name)) => Ok(Term::Variable(name)),
            other => Err(syntax(1, format!("expected a term, found {other:?}"))),
        }
    }

    fn time_term(&mut self) -> Result<TimeTerm, ParseError> {
        match self.next() {
            Some(Token::Nat(t)) => Ok(TimeTerm::Point(t)),
            Some(Token::Ident(name)) if !starts_lower(&name) => Ok(TimeTerm::Variable(name)),
            other => Err(syntax(1, format!("expected a time point or time variable, found {other:?}"))),
        }
    }
}

fn starts_lower(s: &str) -> bool {
    s.chars().next().is_some_and(|c| c.is_ascii_lowercase())
}

fn is_keyword(s: &str) -> bool {
    matches!(s, "not" | "and" | "or" | "sometime" | "always" | "win")
}

/// Rejects identifiers used both as a term variable and a time
/// variable; the two namespaces are disjoint.
fn check_namespaces(q: &Query) -> Result<(), ParseError> {
    let (vars, times) = q.free_variables();
    if let Some(clash) = vars.intersection(&times).next() {
        return Err(ParseError::MixedVariableNamespace(clash.clone()));
    }
    Ok(())
}

pub fn parse_query(text: &str) -> Result<Query, ParseError> {
    let mut p = Parser {
        tokens: tokenize(text)?,
        pos: 0,
    };
    let formula = p.formula()?;
    p.expect(Token::LBracket, "\"[\"")?;
    let at = p.time_term()?;
    p.expect(Token::RBracket, "\"]\"")?;
    if let Some(t) = p.peek() {
        return Err(syntax(1, format!("trailing input after query: {t:?}")));
    }
    let q = Query::new(formula, at);
    check_namespaces(&q)?;
    Ok(q)
}

/// Parses a bare formula without the `[time]` suffix.
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let mut p = Parser {
        tokens: tokenize(text)?,
        pos: 0,
    };
    let formula = p.formula()?;
    if let Some(t) = p.peek() {
        return Err(syntax(1, format!("trailing input after formula: {t:?}")));
    }
    Ok(formula)
}

pub fn print_formula(f: &Formula) -> String {
    match f {
        Formula::Atom { predicate, args } => {
            if args.is_empty() {
                predicate.clone()
            } else {
                let rendered: Vec<String> = args.iter().map(|t| t.to_string()).collect();
                format!("{predicate}({})", rendered.join(","))
            }
        }
        Formula::Not(g) => format!("not {}", print_unary_operand(g)),
        Formula::And(g, h) => format!("({} and {})", print_formula(g), print_formula(h)),
        Formula::Or(g, h) => format!("({} or {})", print_formula(g), print_formula(h)),
        Formula::Implies(g, h) => format!("({} -> {})", print_formula(g), print_formula(h)),
        Formula::Sometime(g) => format!("sometime {}", print_unary_operand(g)),
        Formula::Always(g) => format!("always {}", print_unary_operand(g)),
        Formula::At(t, g) => format!("@ {t} {}", print_unary_operand(g)),
        Formula::Win(i, g) => format!("win {i} {}", print_unary_operand(g)),
    }
}

// binary operands under a unary operator already come parenthesized
fn print_unary_operand(f: &Formula) -> String {
    print_formula(f)
}

pub fn print_query(q: &Query) -> String {
    format!("{} [{}]", print_formula(&q.formula), q.at)
}

// ---------------------------------------------------------------------
// window registry config

fn default_step() -> u64 {
    1
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RegistryEntry {
    kind: String,
    input: String,
    #[serde(default)]
    past: u64,
    #[serde(default)]
    future: u64,
    #[serde(default = "default_step")]
    step: u64,
    #[serde(default)]
    mode: Option<String>,
    #[serde(default)]
    index_by: BTreeMap<String, u32>,
    #[serde(default)]
    default_index: Option<u32>,
    #[serde(default)]
    counts: BTreeMap<String, (u64, u64)>,
}

fn parse_mode(text: &str) -> Result<TupleMode, ParseError> {
    match text {
        "exact-ordered" => Ok(TupleMode::ExactOrdered),
        "at-least" => Ok(TupleMode::AtLeast),
        other => Err(ParseError::UnknownKind(format!("tuple mode {other}"))),
    }
}

/// Parses the JSON registry document. `default_mode` applies to tuple
/// and partition entries that do not state a mode themselves.
pub fn parse_registry(text: &str, default_mode: TupleMode) -> Result<WindowRegistry, ParseError> {
    let doc: BTreeMap<String, RegistryEntry> =
        serde_json::from_str(text).map_err(|e| syntax(e.line(), e.to_string()))?;
    let mut registry = WindowRegistry::new();
    for (key, entry) in doc {
        let index: u32 = key
            .parse()
            .ok()
            .filter(|&i| i >= 1)
            .ok_or_else(|| ParseError::UnknownKind(format!("window index {key}")))?;
        let choice = match entry.input.as_str() {
            "urstream" => StreamChoice::Urstream,
            "current" => StreamChoice::Current,
            other => return Err(ParseError::UnknownKind(format!("input {other}"))),
        };
        let mode = match &entry.mode {
            Some(m) => parse_mode(m)?,
            None => default_mode,
        };
        let spec = match entry.kind.as_str() {
            "time" => WindowSpec::Time(TimeWindowSpec::new(entry.past, entry.future, entry.step)?),
            "tuple" => WindowSpec::Tuple(TupleWindowSpec::new(entry.past, entry.future, mode)),
            "partition" => {
                let default_index = entry.default_index.ok_or_else(|| {
                    WindowError::InvalidSpec("partition window needs a default_index".into())
                })?;
                let mut counts = BTreeMap::new();
                for (k, v) in entry.counts {
                    let i: u32 = k.parse().map_err(|_| {
                        ParseError::UnknownKind(format!("partition index {k}"))
                    })?;
                    counts.insert(i, v);
                }
                let idx = IndexFn::new(entry.index_by, default_index);
                WindowSpec::Partition(PartitionWindowSpec::new(idx, counts, mode)?)
            }
            other => return Err(ParseError::UnknownKind(other.to_string())),
        };
        registry.register(index, spec, choice);
    }
    Ok(registry)
}

// ---------------------------------------------------------------------
// answers

pub fn serialize_answer(a: &Answer) -> String {
    let value = match a {
        Answer::Ground(yes) => json!({
            "ground": true,
            "answer": if *yes { "yes" } else { "no" },
        }),
        Answer::Assignments(assignments) => {
            let rendered: Vec<_> = assignments
                .iter()
                .map(|qa| json!({ "vars": qa.vars, "times": qa.times }))
                .collect();
            json!({ "ground": false, "answers": rendered })
        }
    };
    value.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{assignment, q1, traffic_stream, var};
    use crate::logic::Formula;

    const TRAFFIC: &str = "timeline 0 13\n2 tr(a,p1), bus(c,p1)\n8 tr(d,p2)\n11 bus(e,p2)\n";

    #[test]
    fn parse_traffic_stream() {
        assert_eq!(parse_stream(TRAFFIC).unwrap(), traffic_stream());
    }

    #[test]
    fn parse_empty_stream_and_comments() {
        let s = parse_stream("# a comment\n\ntimeline 0 0\n").unwrap();
        assert_eq!(s, Stream::empty(Timeline::new(0, 0).unwrap()));
    }

    #[test]
    fn parse_stream_requires_timeline() {
        assert_eq!(
            parse_stream("2 tr(a,p1)\n").unwrap_err(),
            ParseError::MissingTimeline
        );
    }

    #[test]
    fn parse_stream_rejects_outside_entries() {
        let err = parse_stream("timeline 0 5\n7 p\n").unwrap_err();
        assert_eq!(err, ParseError::Stream(StreamError::EntryOutsideTimeline(7)));
    }

    #[test]
    fn duplicate_times_merge() {
        let s = parse_stream("timeline 0 5\n2 p(a)\n2 q(b)\n").unwrap();
        assert_eq!(s.atoms_at(2).len(), 2);
    }

    #[test]
    fn stream_round_trip() {
        let s = traffic_stream();
        assert_eq!(parse_stream(&serialize_stream(&s)).unwrap(), s);
    }

    #[test]
    fn parse_q1() {
        let q = parse_query("win 1 (sometime tr(X,P) and sometime bus(Y,P)) [U]").unwrap();
        let mut expected = q1();
        expected.at = TimeTerm::Variable("U".into());
        // q1 fixture uses lowercase-u label; grammar requires uppercase
        assert_eq!(q.formula, expected.formula);
        assert_eq!(q.at, TimeTerm::Variable("U".into()));
    }

    #[test]
    fn parse_q3() {
        let q = parse_query("win 1 always (tr(X,P) -> win 2 sometime bus(Y,P)) [13]").unwrap();
        let expected = Formula::win(
            1,
            Formula::always(Formula::implies(
                Formula::atom("tr", vec![var("X"), var("P")]),
                Formula::win(
                    2,
                    Formula::sometime(Formula::atom("bus", vec![var("Y"), var("P")])),
                ),
            )),
        );
        assert_eq!(q.formula, expected);
        assert_eq!(q.at, TimeTerm::Point(13));
    }

    #[test]
    fn parse_exact_time_reference() {
        let q = parse_query("@ U (tr(X,P) and bus(Y,P)) [13]").unwrap();
        assert_eq!(
            q.formula,
            Formula::at(
                TimeTerm::Variable("U".into()),
                Formula::and(
                    Formula::atom("tr", vec![var("X"), var("P")]),
                    Formula::atom("bus", vec![var("Y"), var("P")]),
                )
            )
        );
    }

    #[test]
    fn precedence_and_associativity() {
        let q = parse_query("a and b or c -> d -> e [0]").unwrap();
        let a = |n: &str| Formula::atom(n, vec![]);
        assert_eq!(
            q.formula,
            Formula::implies(
                Formula::or(Formula::and(a("a"), a("b")), a("c")),
                Formula::implies(a("d"), a("e")),
            )
        );
    }

    #[test]
    fn rejects_mixed_namespaces() {
        let err = parse_query("@ X tr(X,p1) [0]").unwrap_err();
        assert_eq!(err, ParseError::MixedVariableNamespace("X".into()));
    }

    #[test]
    fn rejects_malformed_queries() {
        assert!(matches!(
            parse_query("tr(X").unwrap_err(),
            ParseError::Syntax { .. }
        ));
        assert!(matches!(
            parse_query("tr(a,p1)").unwrap_err(),
            ParseError::Syntax { .. }
        ));
        assert!(matches!(
            parse_query("win 0 tr(a) [0]").unwrap_err(),
            ParseError::Syntax { .. }
        ));
    }

    #[test]
    fn query_round_trip() {
        for text in [
            "win 1 (sometime tr(X,P) and sometime bus(Y,P)) [U]",
            "win 1 always (tr(X,P) -> win 2 sometime bus(Y,P)) [13]",
            "@ U (tr(X,P) and bus(Y,P)) [13]",
            "not p and q or always r [5]",
        ] {
            let q = parse_query(text).unwrap();
            assert_eq!(parse_query(&print_query(&q)).unwrap(), q, "{text}");
        }
    }

    #[test]
    fn registry_for_sliding_window() {
        let reg = parse_registry(
            r#"{"1":{"kind":"time","past":5,"future":0,"step":1,"input":"current"}}"#,
            TupleMode::ExactOrdered,
        )
        .unwrap();
        assert_eq!(
            reg.get(1),
            Some(&(
                WindowSpec::Time(TimeWindowSpec::sliding_past(5)),
                StreamChoice::Current
            ))
        );
    }

    #[test]
    fn registry_for_future_window() {
        let reg = parse_registry(
            r#"{"2":{"kind":"time","past":0,"future":3,"step":1,"input":"urstream"}}"#,
            TupleMode::ExactOrdered,
        )
        .unwrap();
        assert_eq!(
            reg.get(2),
            Some(&(
                WindowSpec::Time(TimeWindowSpec::sliding_future(3)),
                StreamChoice::Urstream
            ))
        );
    }

    #[test]
    fn registry_rejects_invalid_step() {
        let err = parse_registry(
            r#"{"1":{"kind":"time","past":1,"future":0,"step":5,"input":"current"}}"#,
            TupleMode::ExactOrdered,
        )
        .unwrap_err();
        assert!(matches!(err, ParseError::Window(WindowError::InvalidSpec(_))));
    }

    #[test]
    fn registry_partition_entry() {
        let reg = parse_registry(
            r#"{"1":{"kind":"partition","index_by":{"tr":1},"default_index":2,
                   "counts":{"1":[2,0],"2":[0,0]},"input":"current"}}"#,
            TupleMode::ExactOrdered,
        )
        .unwrap();
        assert!(reg.contains(1));
    }

    #[test]
    fn registry_rejects_unknown_kind() {
        let err = parse_registry(
            r#"{"1":{"kind":"session","input":"current"}}"#,
            TupleMode::ExactOrdered,
        )
        .unwrap_err();
        assert_eq!(err, ParseError::UnknownKind("session".into()));
    }

    #[test]
    fn answers_serialize_canonically() {
        assert_eq!(
            serialize_answer(&Answer::Ground(true)),
            r#"{"answer":"yes","ground":true}"#
        );
        let single = Answer::Assignments(
            [assignment(&[("X", "a"), ("Y", "c"), ("P", "p1")], &[("U", 2)])].into(),
        );
        assert_eq!(
            serialize_answer(&single),
            r#"{"answers":[{"times":{"U":2},"vars":{"P":"p1","X":"a","Y":"c"}}],"ground":false}"#
        );
        assert_eq!(
            serialize_answer(&Answer::Assignments(Default::default())),
            r#"{"answers":[],"ground":false}"#
        );
    }
}
