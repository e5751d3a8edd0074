use std::sync::Arc;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qschubert_canon::lusztig_solve;
use qschubert_freealg::{Algebra, Exec};
use qschubert_pbw::PbwFrame;
use qschubert_rootdata::{make_reduced_word, RootDatum, Weight};

fn frame(name: &str, w: &[usize], exec: Exec) -> PbwFrame {
    let alg = Arc::new(Algebra::new(RootDatum::preset(name).unwrap()).with_exec(exec));
    let word = make_reduced_word(alg.datum(), w).unwrap();
    PbwFrame::new(alg, word).unwrap()
}

fn solve(c: &mut Criterion) {
    let cases: [(&str, &[usize], Weight); 2] =
        [("A3", &[0, 1, 0, 2, 1, 0], Weight(vec![2, 2, 2])), ("C2", &[0, 1, 0, 1], Weight(vec![4, 3]))];
    let mut group = c.benchmark_group("lusztig_solve");
    group.sample_size(10);
    for (name, w, g) in cases {
        for (label, exec) in [("parallel", Exec::Parallel), ("sequential", Exec::Sequential)] {
            group.bench_with_input(BenchmarkId::new(label, name), &g, |b, g| {
                // a fresh frame per iteration so no cached monomial is reused
                b.iter(|| lusztig_solve(&frame(name, w, exec), g).unwrap());
            });
        }
    }
    group.finish();
}

criterion_group!(benches, solve);
criterion_main!(benches);
