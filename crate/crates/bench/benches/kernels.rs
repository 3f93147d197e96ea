use criterion::{black_box, criterion_group, criterion_main, Criterion};
use symdual::{builtin, min_distance_bruteforce, min_weight_upper, FieldCtx, Mat};

fn field_ops(c: &mut Criterion) {
    let ctx = FieldCtx::new(23).unwrap();
    c.bench_function("gf23_mul_inv", |b| {
        b.iter(|| {
            let mut acc = 1u16;
            for v in 1..23u16 {
                acc = ctx.mul(acc, ctx.inv(black_box(v)).unwrap());
            }
            acc
        })
    });
}

fn mat_mul(c: &mut Criterion) {
    let ctx = FieldCtx::new(19).unwrap();
    let n = 20;
    let a = Mat::from_flat(
        &ctx,
        n,
        n,
        (0..n * n).map(|i| (i % 19) as u16).collect(),
    );
    c.bench_function("mat_mul_20x20_gf19", |b| {
        b.iter(|| black_box(&a).mat_mul(black_box(&a)).unwrap())
    });
}

fn bruteforce_distance(c: &mut Criterion) {
    let code = builtin("g1_3_12").unwrap().code();
    c.bench_function("bruteforce_12_6_gf3", |b| {
        b.iter(|| min_distance_bruteforce(black_box(&code)).unwrap())
    });
}

fn info_set_iterations(c: &mut Criterion) {
    let code = builtin("a11_32").unwrap().code();
    c.bench_function("min_weight_upper_100_iters_32_16_gf11", |b| {
        b.iter(|| min_weight_upper(black_box(&code), 100, 1, None).weight)
    });
}

criterion_group!(benches, field_ops, mat_mul, bruteforce_distance, info_set_iterations);
criterion_main!(benches);
