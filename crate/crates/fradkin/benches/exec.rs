use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fradkin::algebra_core::{jacobiator_with, structure_tensor, AlgebraMode, BasisKind};
use fradkin::exec::Exec;
use fradkin::killing_levi::killing_bruteforce_with;
use fradkin::nambu_gradient::matfam::verify_all;
use fradkin::rational::q;
use fradkin::symplectic_oracle::structure_constants_bruteforce_with;

const POLICIES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn jacobi(c: &mut Criterion) {
    let mut g = c.benchmark_group("jacobiator");
    g.sample_size(10);
    let t = structure_tensor(3, &AlgebraMode::Plus(q(2)), BasisKind::LF).unwrap();
    for (name, exec) in POLICIES {
        g.bench_with_input(BenchmarkId::new(name, 3), &t, |b, t| {
            b.iter(|| jacobiator_with(t, exec))
        });
    }
    g.finish();
}

fn brute_force(c: &mut Criterion) {
    let mut g = c.benchmark_group("structure_constants");
    g.sample_size(10);
    let mode = AlgebraMode::Minus(q(3));
    for (name, exec) in POLICIES {
        g.bench_function(BenchmarkId::new(name, 3), |b| {
            b.iter(|| structure_constants_bruteforce_with(3, &mode, exec).unwrap())
        });
    }
    g.finish();
}

fn killing(c: &mut Criterion) {
    let mut g = c.benchmark_group("killing");
    g.sample_size(10);
    let t = structure_tensor(3, &AlgebraMode::Zero, BasisKind::LF).unwrap();
    for (name, exec) in POLICIES {
        g.bench_with_input(BenchmarkId::new(name, 3), &t, |b, t| {
            b.iter(|| killing_bruteforce_with(t, exec))
        });
    }
    g.finish();
}

fn matfam(c: &mut Criterion) {
    let mut g = c.benchmark_group("matfam");
    g.sample_size(10);
    for (name, exec) in POLICIES {
        g.bench_function(BenchmarkId::new(name, "3..6"), |b| {
            b.iter(|| verify_all((3, 6), 8, 1, exec).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, jacobi, brute_force, killing, matfam);
criterion_main!(benches);
