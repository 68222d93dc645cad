use criterion::{criterion_group, criterion_main, Criterion};

use knotcalc::braid::{closure, torus_braid};
use knotcalc::diagram::PlanarDiagram;
use knotcalc::seifert::seifert_circles;
use knotcalc::skein::{homfly, kauffman};

const FIGURE_EIGHT: [[u32; 4]; 4] = [[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]];

fn bench_homfly(c: &mut Criterion) {
    let t52 = closure(&torus_braid(5, 2).unwrap());
    let t43 = closure(&torus_braid(4, 3).unwrap());
    c.bench_function("homfly torus(5,2)", |b| {
        b.iter(|| homfly(std::hint::black_box(&t52)).unwrap())
    });
    c.bench_function("homfly torus(4,3)", |b| {
        b.iter(|| homfly(std::hint::black_box(&t43)).unwrap())
    });
}

fn bench_kauffman(c: &mut Criterion) {
    let f8 = PlanarDiagram::validate(&FIGURE_EIGHT).unwrap();
    c.bench_function("kauffman figure-eight", |b| {
        b.iter(|| kauffman(std::hint::black_box(&f8)).unwrap())
    });
}

fn bench_seifert(c: &mut Criterion) {
    let t88 = closure(&torus_braid(8, 8).unwrap());
    c.bench_function("seifert torus(8,8)", |b| {
        b.iter(|| seifert_circles(std::hint::black_box(&t88)).unwrap())
    });
}

criterion_group!(benches, bench_homfly, bench_kauffman, bench_seifert);
criterion_main!(benches);
