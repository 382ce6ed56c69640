use bkkit::polytope::{lattice_volume, minkowski_sum, mixed_volume};
use bkkit::{Polytope, SupportSet};
use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

/// Lattice points of the simplex scaled by `k`, with a few cut off so the hull is not symmetric.
fn skew_simplex(n: usize, k: i64) -> SupportSet {
    let mut pts = Vec::new();
    let mut p = vec![0i64; n];
    loop {
        if p.iter().sum::<i64>() <= k && p[0] + 2 * p[n - 1] <= 2 * k - 1 {
            pts.push(p.clone());
        }
        let mut i = 0;
        while i < n && p[i] == k {
            p[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        p[i] += 1;
    }
    let refs: Vec<&[i64]> = pts.iter().map(Vec::as_slice).collect();
    SupportSet::from_i64(n, &refs).unwrap()
}

fn polytope(c: &mut Criterion) {
    let a3 = skew_simplex(3, 6);
    let a4 = skew_simplex(4, 4);
    c.bench_function("hull 3d", |b| b.iter(|| Polytope::hull(black_box(&a3))));
    c.bench_function("hull 4d", |b| b.iter(|| Polytope::hull(black_box(&a4))));

    let p3 = Polytope::hull(&a3);
    let cube = Polytope::hull(&SupportSet::from_i64(3, &[&[0, 0, 0], &[2, 0, 0], &[0, 2, 0], &[0, 0, 2], &[2, 2, 0], &[2, 0, 2], &[0, 2, 2], &[2, 2, 2]]).unwrap());
    c.bench_function("lattice volume 3d", |b| b.iter(|| lattice_volume(black_box(&p3)).unwrap()));
    c.bench_function("minkowski sum 3d", |b| b.iter(|| minkowski_sum(black_box(&p3), black_box(&cube))));

    let p4 = Polytope::hull(&a4);
    c.bench_function("mixed volume 3d", |b| b.iter(|| mixed_volume(black_box(&[&p3, &cube, &p3])).unwrap()));
    c.bench_function("lattice volume 4d", |b| b.iter(|| lattice_volume(black_box(&p4)).unwrap()));
}

criterion_group!(benches, polytope);
criterion_main!(benches);
