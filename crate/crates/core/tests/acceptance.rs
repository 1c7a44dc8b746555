//! Acceptance suite: one PASS/FAIL line per criterion.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{corpus, corpus_forms, g1, g2, g3, k4_form};
use ihara_core::counting::{
    brute_force, circuit_length_gcd, counts_integral, counts_mod_lattice, fill_primes_quotient,
    round_count, trace_distribution, trace_formula_eval, asymptotic_ratio, ClassCounts, Exp,
};
use ihara_core::generators::{cycle, k4};
use ihara_core::twist::{radius_sweep, spectrum_w, verify_antisymmetry};
use ihara_core::zeta::{lfunc_edge, lfunc_ihara, verify_transforms};
use ihara_core::{Graph, HomologyData, OneForm, QuotientGroup, Result};

const ROUND_RESIDUE: f64 = 1e-6;
const EXP_TOL: f64 = 1e-6;
const RADIUS_TOL: f64 = 5e-5;
const ARGMAX_TOL: f64 = 1e-9;
const TORSION_TOL: f64 = 1e-6;
const ANTISYMMETRY_TOL: f64 = 1e-7;
const DETERMINANT_TOL: f64 = 1e-8;
const TRANSFORM_TOL: f64 = 1e-7;
const RATIO_RANGE: (f64, f64) = (0.9, 1.1);
const BUDGET: f64 = 1e8;

const K4_K0: [i64; 15] = [0, 0, 24, 24, 0, 96, 168, 168, 528, 1200, 1848, 3960, 8736, 16128, 31944];
const K4_K1: [i64; 15] = [0, 0, -12, 12, 0, -12, 0, 36, 96, -60, 0, -252, 0, -252, 768];

const N3_0: [u64; 15] = [0, 0, 0, 16, 0, 24, 56, 80, 240, 360, 616, 1152, 2912, 5208, 11160];
const N3_1: [u64; 15] = [0, 0, 12, 4, 0, 36, 56, 44, 144, 420, 616, 1404, 2912, 5460, 10392];
const PI3_0: [u64; 15] = [0, 0, 0, 4, 0, 4, 8, 8, 24, 36, 56, 92, 224, 368, 744];
const PIC3_0: [u64; 15] = [0, 0, 0, 4, 0, 4, 8, 12, 32, 36, 56, 102, 224, 376, 744];
const PI3_1: [u64; 15] = [0, 0, 4, 1, 0, 4, 8, 5, 16, 42, 56, 114, 224, 386, 692];
const PIC3_1: [u64; 15] = [0, 0, 4, 1, 0, 8, 8, 6, 16, 42, 56, 122, 224, 394, 696];

const N6: [[u64; 15]; 4] = [
    [0, 0, 0, 16, 0, 24, 0, 80, 0, 360, 0, 1152, 0, 5208, 0],
    [0, 0, 12, 0, 0, 0, 56, 0, 144, 0, 616, 0, 2912, 0, 10392],
    [0, 0, 0, 4, 0, 36, 0, 44, 0, 420, 0, 1404, 0, 5460, 0],
    [0, 0, 0, 0, 0, 0, 56, 0, 240, 0, 616, 0, 2912, 0, 11160],
];
const PI6: [[u64; 15]; 4] = [
    [0, 0, 0, 4, 0, 4, 0, 8, 0, 36, 0, 92, 0, 368, 0],
    [0, 0, 4, 0, 0, 0, 8, 0, 16, 0, 56, 0, 224, 0, 692],
    [0, 0, 0, 1, 0, 4, 0, 5, 0, 42, 0, 114, 0, 386, 0],
    [0, 0, 0, 0, 0, 0, 8, 0, 24, 0, 56, 0, 224, 0, 744],
];
const PIC6: [[u64; 15]; 4] = [
    [0, 0, 0, 4, 0, 4, 0, 12, 0, 36, 0, 102, 0, 376, 0],
    [0, 0, 4, 0, 0, 0, 8, 0, 16, 0, 56, 0, 224, 0, 696],
    [0, 0, 0, 1, 0, 8, 0, 6, 0, 42, 0, 122, 0, 394, 0],
    [0, 0, 0, 0, 0, 0, 8, 0, 32, 0, 56, 0, 224, 0, 744],
];

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn new(passed: bool, detail: impl Into<String>) -> Self {
        Outcome {
            passed,
            detail: detail.into(),
        }
    }
}

fn run(id: usize, name: &str, limit: Option<Duration>, f: impl FnOnce() -> Result<Outcome>) -> bool {
    let start = Instant::now();
    let outcome = f().unwrap_or_else(|e| Outcome::new(false, format!("error: {e}")));
    let elapsed = start.elapsed();
    let in_time = limit.map_or(true, |l| elapsed <= l);
    let passed = outcome.passed && in_time;
    let limit_note = limit.map_or(String::new(), |l| format!(" / limit {:.0?}", l));
    println!(
        "{} {:>2} {:<34} {:>9.3?}{}  {}",
        if passed { "PASS" } else { "FAIL" },
        id,
        name,
        elapsed,
        limit_note,
        outcome.detail
    );
    passed
}

/// Rounds traces, returning the sequence and the worst residue.
fn rounded(traces: &[f64]) -> (Vec<i64>, f64) {
    let residue = traces.iter().map(|x| (x - x.round()).abs()).fold(0.0, f64::max);
    (traces.iter().map(|x| x.round() as i64).collect(), residue)
}

/// Element index of each class labelled by `chi_w = e(i / k)`.
fn labels_by_character(hd: &HomologyData, q: &QuotientGroup, omega: &OneForm, k: usize) -> Vec<usize> {
    q.classes_by_character(&hd.character_of(omega), k)
        .into_iter()
        .map(|i| i.expect("every value is attained"))
        .collect()
}

fn quotient_counts(g: &Graph, hd: &HomologyData, q: &QuotientGroup, len: usize) -> Result<ClassCounts> {
    let mut c = counts_mod_lattice(g, hd, q, len, BUDGET)?;
    fill_primes_quotient(&mut c, q)?;
    Ok(c)
}

fn k4_quotients() -> Result<(QuotientGroup, QuotientGroup)> {
    Ok((
        QuotientGroup::kernel_of(&[1, 1, 1], 3)?,
        QuotientGroup::kernel_of(&[1, 1, 1], 6)?,
    ))
}

fn criterion_1() -> Result<Outcome> {
    let k = trace_distribution(&k4(), &OneForm::zeros(6), 15)?;
    let (seq, residue) = rounded(&k);
    Ok(Outcome::new(
        seq == K4_K0 && residue < ROUND_RESIDUE,
        format!("residue {residue:.1e}"),
    ))
}

fn criterion_2() -> Result<Outcome> {
    let k = trace_distribution(&k4(), &k4_form(1.0 / 6.0), 15)?;
    let (seq, residue) = rounded(&k);
    Ok(Outcome::new(
        seq == K4_K1 && residue < ROUND_RESIDUE,
        format!("residue {residue:.1e}"),
    ))
}

fn criterion_3() -> Result<Outcome> {
    let g = k4();
    let hd = HomologyData::new(&g);
    let (q3, q6) = k4_quotients()?;
    let mut bad = Vec::new();

    let c3 = quotient_counts(&g, &hd, &q3, 15)?;
    let lab3 = labels_by_character(&hd, &q3, &k4_form(1.0 / 6.0), 3);
    let el = |q: &QuotientGroup, i: usize| q.elements[i].clone();
    let a0 = el(&q3, lab3[0]);
    for (name, got, want) in [
        ("N(a0)", c3.n_seq(&a0), &N3_0),
        ("pi(a0)", c3.pi_seq(&a0), &PI3_0),
        ("pi_c(a0)", c3.pi_c_seq(&a0), &PIC3_0),
    ] {
        if got != want {
            bad.push(name.to_string());
        }
    }
    for i in [1, 2] {
        let a = el(&q3, lab3[i]);
        for (name, got, want) in [
            ("N", c3.n_seq(&a), &N3_1),
            ("pi", c3.pi_seq(&a), &PI3_1),
            ("pi_c", c3.pi_c_seq(&a), &PIC3_1),
        ] {
            if got != want {
                bad.push(format!("{name}(a{i})"));
            }
        }
    }

    let c6 = quotient_counts(&g, &hd, &q6, 15)?;
    let lab6 = labels_by_character(&hd, &q6, &k4_form(1.0 / 12.0), 6);
    for i in 0..6 {
        let row = i.min(6 - i);
        let a = el(&q6, lab6[i]);
        for (name, got, want) in [
            ("N", c6.n_seq(&a), &N6[row]),
            ("pi", c6.pi_seq(&a), &PI6[row]),
            ("pi_c", c6.pi_c_seq(&a), &PIC6[row]),
        ] {
            if got != want {
                bad.push(format!("{name}(a'{i})"));
            }
        }
    }
    Ok(Outcome::new(
        bad.is_empty(),
        if bad.is_empty() {
            "27 sequences match".to_string()
        } else {
            format!("mismatch: {}", bad.join(", "))
        },
    ))
}

fn criterion_4() -> Result<Outcome> {
    let g = k4();
    let first = trace_formula_eval(&g, &OneForm::zeros(6), &Exp, 40)?;
    let mut second = 0.0;
    let mut dev: f64 = first.deviation;
    for t in [0.0, 1.0 / 6.0, 1.0 / 3.0] {
        let r = trace_formula_eval(&g, &k4_form(t), &Exp, 40)?;
        second += r.spectral.re;
        dev = dev.max(r.deviation);
    }
    let e1 = (first.spectral.re - 5.172675227).abs();
    let e2 = (second - 2.141622583).abs();
    Ok(Outcome::new(
        e1 < EXP_TOL && e2 < EXP_TOL && dev < EXP_TOL,
        format!(
            "{:.9} {:.9} (series deviation {dev:.1e})",
            first.spectral.re, second
        ),
    ))
}

fn criterion_5() -> Result<Outcome> {
    let mut notes = Vec::new();
    let mut ok = true;
    for (name, g, want) in [("G1", g1(), 1.42405), ("G2", g2(), 1.27065), ("G3", g3(), 1.30216)] {
        let rho = spectrum_w(&g, &OneForm::zeros(g.m()))?.radius;
        ok &= (rho - want).abs() < RADIUS_TOL;
        notes.push(format!("{name} {rho:.5}"));
    }

    let g = g1();
    let hd = HomologyData::new(&g);
    let rows = radius_sweep(&g, &hd, 64, BUDGET)?;
    let best = rows.iter().map(|r| r.rho_w).fold(f64::NEG_INFINITY, f64::max);
    let mut argmax: Vec<Vec<f64>> = rows
        .iter()
        .filter(|r| r.rho_w >= best - ARGMAX_TOL)
        .map(|r| r.coords.clone())
        .collect();
    argmax.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
    ok &= argmax == vec![vec![0.0, 0.0], vec![0.5, 0.0]];
    notes.push(format!("G1 argmax {argmax:?}"));

    let g = g3();
    let hd = HomologyData::new(&g);
    let rho1 = spectrum_w(&g, &OneForm::zeros(g.m()))?.radius;
    let rows = radius_sweep(&g, &hd, 64, BUDGET)?;
    let hits: Vec<Vec<f64>> = rows
        .iter()
        .filter(|r| r.coords.iter().all(|&c| c == 0.0 || c == 0.5))
        .filter(|r| r.coords.iter().any(|&c| c != 0.0))
        .filter(|r| (r.rho_w - rho1).abs() < TORSION_TOL)
        .map(|r| r.coords.clone())
        .collect();
    ok &= hits.len() == 1;
    notes.push(format!("G3 2-torsion at {hits:?}"));
    Ok(Outcome::new(ok, notes.join("; ")))
}

fn criterion_6() -> Result<Outcome> {
    let mut worst: f64 = 0.0;
    let mut failures = 0;
    for (i, g) in corpus().iter().enumerate() {
        let hd = HomologyData::new(g);
        for w in corpus_forms(g, i) {
            let r = verify_antisymmetry(g, &hd, &w, Some(ANTISYMMETRY_TOL))?;
            worst = worst.max(r.a_distance).max(r.w_distance);
            if r.a_distance > ANTISYMMETRY_TOL || r.w_distance > ANTISYMMETRY_TOL {
                failures += 1;
            }
        }
    }
    Ok(Outcome::new(
        failures == 0,
        format!("200 cases, {failures} failures, worst {worst:.1e}"),
    ))
}

fn criterion_7() -> Result<Outcome> {
    let mut worst: f64 = 0.0;
    let mut failures = 0;
    for (i, g) in corpus().iter().enumerate() {
        let mut forms = corpus_forms(g, i);
        forms.push(OneForm::zeros(g.m()));
        for w in forms {
            let a = lfunc_edge(g, &w)?;
            let b = lfunc_ihara(g, &w)?;
            let scale = a.max_abs().max(b.max_abs()).max(1.0);
            let rel = a.max_diff(&b) / scale;
            worst = worst.max(rel);
            if rel > DETERMINANT_TOL {
                failures += 1;
            }
        }
    }
    Ok(Outcome::new(
        failures == 0,
        format!("220 cases, {failures} failures, worst relative {worst:.1e}"),
    ))
}

fn criterion_8() -> Result<Outcome> {
    const LEN: usize = 8;
    let mut graphs = vec![k4(), g1(), g2(), g3(), cycle(3)];
    graphs.extend(corpus().into_iter().filter(|g| g.m() <= 9));
    let count = graphs.len();
    let mut failures = Vec::new();
    for (i, g) in graphs.iter().enumerate() {
        let hd = HomologyData::new(g);
        let oracle = brute_force(g, &hd, LEN, BUDGET)?.counts;
        let integral = counts_integral(g, &hd, LEN, BUDGET)?;
        if integral.n_mismatch(&oracle).is_some() {
            failures.push(format!("graph {i} integral"));
        }
        for t in [2, 3] {
            let q = QuotientGroup::scaled(hd.genus(), t)?;
            let spectral = counts_mod_lattice(g, &hd, &q, LEN, BUDGET)?;
            if spectral.n_mismatch(&oracle.project(&q)?).is_some() {
                failures.push(format!("graph {i} mod {t}"));
            }
        }
    }
    Ok(Outcome::new(
        failures.is_empty(),
        if failures.is_empty() {
            format!("{count} graphs agree classwise")
        } else {
            failures.join(", ")
        },
    ))
}

fn criterion_9() -> Result<Outcome> {
    let g = k4();
    let hd = HomologyData::new(&g);
    let oracle = brute_force(&g, &hd, 15, BUDGET)?.counts;
    let (q3, q6) = k4_quotients()?;
    let mut worst: f64 = 0.0;
    for q in [&q3, &q6] {
        let r = verify_transforms(&g, &hd, q, &oracle.project(q)?, 15)?;
        worst = worst.max(r.max());
    }
    Ok(Outcome::new(worst < TRANSFORM_TOL, format!("max deviation {worst:.1e}")))
}

fn criterion_10() -> Result<Outcome> {
    let g = k4();
    let hd = HomologyData::new(&g);
    let rho = spectrum_w(&g, &OneForm::zeros(6))?.radius;
    let nu = circuit_length_gcd(&g, 2 * g.m());
    let (q3, q6) = k4_quotients()?;
    let mut ratios = Vec::new();
    for (q, doubling) in [(&q3, false), (&q6, true)] {
        let c = quotient_counts(&g, &hd, q, 15)?;
        for row in asymptotic_ratio(&c, hd.genus(), rho, nu, q.order, doubling)? {
            if row.l == 15 {
                ratios.push(row.ratio);
            }
        }
    }
    let ok = !ratios.is_empty() && ratios.iter().all(|r| (RATIO_RANGE.0..=RATIO_RANGE.1).contains(r));
    let shown: Vec<String> = ratios.iter().map(|r| format!("{r:.4}")).collect();
    Ok(Outcome::new(ok, format!("ratios at l=15: {}", shown.join(" "))))
}

fn main() -> ExitCode {
    assert!(round_count(2.0 + 0.5 * ROUND_RESIDUE).is_ok());
    let secs = Duration::from_secs;
    let results = [
        run(1, "K4 circuit counts", Some(secs(1)), criterion_1),
        run(2, "K4 twisted traces", Some(secs(1)), criterion_2),
        run(3, "K4 homology-class counts", Some(secs(5)), criterion_3),
        run(4, "exp trace identities", Some(secs(1)), criterion_4),
        run(5, "genus-2 radii and sweeps", Some(secs(30)), criterion_5),
        run(6, "spectral antisymmetry", Some(secs(60)), criterion_6),
        run(7, "determinant formulas", None, criterion_7),
        run(8, "oracle equivalence", Some(secs(120)), criterion_8),
        run(9, "transform suite", None, criterion_9),
        run(10, "desk-scale asymptotics", None, criterion_10),
    ];
    let passed = results.iter().filter(|&&p| p).count();
    println!("{passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
