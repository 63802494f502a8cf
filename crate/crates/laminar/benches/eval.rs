//! Compares parallel and sequential query answering on synthetic
//! streams of growing size.

use std::collections::{BTreeMap, BTreeSet};

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use laminar::engine::Structure;
use laminar::logic::{Formula, Query, Term, TimeTerm};
use laminar::stream::{GroundAtom, Stream, Timeline};
use laminar::windows::{StreamChoice, TimeWindowSpec, WindowRegistry, WindowSpec};

/// A stream with `n_points` time points and events for `n_vehicles`
/// vehicles cycling over `n_stops` stops.
fn synthetic_structure(n_points: u64, n_vehicles: u64, n_stops: u64) -> Structure {
    let timeline = Timeline::new(0, n_points - 1).unwrap();
    let mut entries: BTreeMap<u64, BTreeSet<GroundAtom>> = BTreeMap::new();
    for t in 0..n_points {
        let vehicle = format!("v{}", t % n_vehicles);
        let stop = format!("s{}", t % n_stops);
        let pred = if t % 2 == 0 { "tr" } else { "bus" };
        entries
            .entry(t)
            .or_default()
            .insert(GroundAtom::new(pred, vec![vehicle, stop]));
    }
    let mut reg = WindowRegistry::new();
    reg.register(
        1,
        WindowSpec::Time(TimeWindowSpec::sliding_past(5)),
        StreamChoice::Current,
    );
    Structure::new(Stream::new(timeline, entries).unwrap(), reg)
}

fn query() -> Query {
    Query::new(
        Formula::win(
            1,
            Formula::and(
                Formula::sometime(Formula::atom(
                    "tr",
                    vec![Term::Variable("X".into()), Term::Variable("P".into())],
                )),
                Formula::sometime(Formula::atom(
                    "bus",
                    vec![Term::Variable("Y".into()), Term::Variable("P".into())],
                )),
            ),
        ),
        TimeTerm::Variable("u".into()),
    )
}

fn bench_answer(c: &mut Criterion) {
    let mut group = c.benchmark_group("answer");
    for n_points in [20u64, 40, 60] {
        let m = synthetic_structure(n_points, 4, 3);
        let q = query();
        group.bench_with_input(BenchmarkId::new("parallel", n_points), &n_points, |b, _| {
            b.iter(|| m.answer(&q).unwrap())
        });
        group.bench_with_input(
            BenchmarkId::new("sequential", n_points),
            &n_points,
            |b, _| b.iter(|| m.answer_sequential(&q).unwrap()),
        );
    }
    group.finish();
}

criterion_group!(benches, bench_answer);
criterion_main!(benches);
