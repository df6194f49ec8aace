use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use nnrep_core::boolean::families;
use nnrep_core::repr::construct_ldl_general;
use nnrep_core::verify::verify_exhaustive;
use nnrep_core::Family;

fn construct(c: &mut Criterion) {
    let mut g = c.benchmark_group("construct");
    for (family, m, n) in [(Family::ParityEq, 3, 2), (Family::OrEq, 4, 1), (Family::OmbEq, 3, 2), (Family::Ip2, 4, 4)] {
        g.bench_with_input(BenchmarkId::new(family.name(), format!("m{m}n{n}")), &(m, n), |b, &(m, n)| {
            b.iter(|| family.build(m, n).unwrap())
        });
    }
    let l = families::five_input_ldl();
    g.bench_function("ldl_general/five_input", |b| b.iter(|| construct_ldl_general(&l).unwrap()));
    g.finish();
}

fn verify(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify");
    g.sample_size(20);
    for (family, m, n) in [(Family::ParityEq, 3, 2), (Family::OmbEq, 3, 2), (Family::Ip2, 6, 6)] {
        let (circuit, set) = family.build(m, n).unwrap();
        let bits = family.input_bits(m, n);
        g.bench_function(BenchmarkId::new(family.name(), format!("{bits}bits")), |b| {
            b.iter(|| verify_exhaustive(&set, &circuit).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, construct, verify);
criterion_main!(benches);
