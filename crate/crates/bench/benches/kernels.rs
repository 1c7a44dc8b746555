use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ihara_core::counting::{brute_force, counts_integral, counts_mod_lattice};
use ihara_core::generators::{k4, theta};
use ihara_core::homology::smith_normal_form;
use ihara_core::twist::{radius_sweep, spectrum_w};
use ihara_core::zeta::{lfunc_edge, lfunc_ihara};
use ihara_core::{HomologyData, OneForm, QuotientGroup};

fn spectra(c: &mut Criterion) {
    let mut group = c.benchmark_group("spectrum_w");
    for (name, g) in [("k4", k4()), ("theta_3_4_5", theta(3, 4, 5))] {
        let w = OneForm::new((0..g.m()).map(|i| 0.1 * i as f64).collect());
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| {
            b.iter(|| spectrum_w(g, &w).unwrap())
        });
    }
    group.finish();
}

fn determinants(c: &mut Criterion) {
    let g = theta(3, 4, 5);
    let w = OneForm::new((0..g.m()).map(|i| 0.07 * i as f64).collect());
    c.bench_function("lfunc_edge/theta_3_4_5", |b| b.iter(|| lfunc_edge(&g, &w).unwrap()));
    c.bench_function("lfunc_ihara/theta_3_4_5", |b| b.iter(|| lfunc_ihara(&g, &w).unwrap()));
}

fn counting(c: &mut Criterion) {
    let g = k4();
    let hd = HomologyData::new(&g);
    let q = QuotientGroup::kernel_of(&[1, 1, 1], 6).unwrap();
    c.bench_function("brute_force/k4/L10", |b| b.iter(|| brute_force(&g, &hd, 10, 1e8).unwrap()));
    c.bench_function("counts_integral/k4/L8", |b| {
        b.iter(|| counts_integral(&g, &hd, 8, 1e8).unwrap())
    });
    c.bench_function("counts_mod_lattice/k4/order6/L15", |b| {
        b.iter(|| counts_mod_lattice(&g, &hd, &q, 15, 1e8).unwrap())
    });
}

fn sweeps(c: &mut Criterion) {
    let g = theta(1, 2, 3);
    let hd = HomologyData::new(&g);
    let mut group = c.benchmark_group("radius_sweep");
    group.sample_size(10);
    group.bench_function("theta_1_2_3/grid32", |b| {
        b.iter(|| radius_sweep(&g, &hd, 32, 1e8).unwrap())
    });
    group.finish();
}

fn snf(c: &mut Criterion) {
    let m = vec![
        vec![12, 18, 30, 7],
        vec![6, -4, 8, 11],
        vec![9, 27, -3, 5],
        vec![2, 14, 22, -9],
    ];
    c.bench_function("smith_normal_form/4x4", |b| b.iter(|| smith_normal_form(&m).unwrap()));
}

criterion_group!(benches, spectra, determinants, counting, sweeps, snf);
criterion_main!(benches);
