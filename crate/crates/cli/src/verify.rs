use anyhow::Result;
use ihara_core::counting::{brute_force, counts_integral, counts_mod_lattice, fill_primes_integral};
use ihara_core::generators::random_connected;
use ihara_core::twist::verify_antisymmetry;
use ihara_core::zeta::{lfunc_edge, lfunc_ihara, verify_transforms};
use ihara_core::{Graph, HomologyData, OneForm};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::args::{Options, Suite};
use crate::input::{self, InputError};

pub const ANTISYMMETRY_TOL: f64 = 1e-7;
pub const DETERMINANT_TOL: f64 = 1e-8;
pub const TRANSFORM_TOL: f64 = 1e-7;
const SAMPLES: usize = 10;
const RANDOM_GRAPHS: usize = 20;

pub struct Verdict {
    pub passed: bool,
    pub report: Value,
}

pub fn run(opts: &Options) -> Result<Verdict> {
    let suite = opts.suite.ok_or(InputError::Missing("verify", "--suite"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let (passed, checks) = match suite {
        Suite::Antisymmetry => antisymmetry(opts, &mut rng)?,
        Suite::Determinant => determinant(opts, &mut rng)?,
        Suite::Orthogonality => orthogonality(opts)?,
        Suite::Transforms => transforms(opts)?,
        Suite::Oracle => oracle(opts)?,
    };
    let name = format!("{suite:?}").to_lowercase();
    Ok(Verdict {
        passed,
        report: json!({ "suite": name, "seed": opts.seed, "passed": passed, "checks": checks }),
    })
}

fn random_form(rng: &mut ChaCha8Rng, m: usize) -> OneForm {
    OneForm::new((0..m).map(|_| rng.gen::<f64>()).collect())
}

/// The given `--omega`, or `SAMPLES` random 1-forms.
fn forms(opts: &Options, g: &Graph, hd: &HomologyData, rng: &mut ChaCha8Rng) -> Result<Vec<OneForm>> {
    Ok(match input::omega(opts, g, hd)? {
        Some(w) => vec![w],
        None => (0..SAMPLES).map(|_| random_form(rng, g.m())).collect(),
    })
}

fn antisymmetry(opts: &Options, rng: &mut ChaCha8Rng) -> Result<(bool, Vec<Value>)> {
    let g = input::graph(opts)?;
    let hd = HomologyData::new(&g);
    let tol = opts.tol.unwrap_or(ANTISYMMETRY_TOL);
    let mut checks = Vec::new();
    let mut all = true;
    for w in forms(opts, &g, &hd, rng)? {
        let r = verify_antisymmetry(&g, &hd, &w, Some(tol))?;
        all &= r.passed;
        checks.push(json!({
            "omega": hd.character_of(&w).coords,
            "a_distance": r.a_distance,
            "w_distance": r.w_distance,
            "conj_distance": r.conj_distance,
            "passed": r.passed,
        }));
    }
    Ok((all, checks))
}

fn determinant(opts: &Options, rng: &mut ChaCha8Rng) -> Result<(bool, Vec<Value>)> {
    let tol = opts.tol.unwrap_or(DETERMINANT_TOL);
    let graphs: Vec<Graph> = if opts.graph.is_some() || !opts.gen.is_empty() {
        vec![input::graph(opts)?]
    } else {
        (0..RANDOM_GRAPHS)
            .map(|_| {
                let n = rng.gen_range(4..=6);
                let m = rng.gen_range(n..=n * (n - 1) / 2);
                random_connected(rng, n, m)
            })
            .collect()
    };
    let mut checks = Vec::new();
    let mut all = true;
    for g in &graphs {
        let hd = HomologyData::new(g);
        let mut ws = forms(opts, g, &hd, rng)?;
        ws.push(OneForm::zeros(g.m()));
        let mut worst: f64 = 0.0;
        for w in &ws {
            let a = lfunc_edge(g, w)?;
            let b = lfunc_ihara(g, w)?;
            worst = worst.max(a.max_diff(&b) / a.max_abs().max(b.max_abs()).max(1.0));
        }
        let passed = worst <= tol;
        all &= passed;
        checks.push(json!({
            "graph": serde_json::from_str::<Value>(&ihara_core::io::graph_to_json(g))?,
            "samples": ws.len(),
            "max_relative_deviation": worst,
            "passed": passed,
        }));
    }
    Ok((all, checks))
}

fn orthogonality(opts: &Options) -> Result<(bool, Vec<Value>)> {
    let g = input::graph(opts)?;
    let q = input::lattice(opts, g.genus())?;
    let violation = q.orthogonality_violation();
    let passed = violation.is_none();
    Ok((
        passed,
        vec![json!({
            "order": q.order,
            "invariant_factors": q.invariant_factors(),
            "violation": violation.map(|(a, b, d)| json!({ "a": q.elements[a], "b": q.elements[b], "deviation": d })),
            "passed": passed,
        })],
    ))
}

fn transforms(opts: &Options) -> Result<(bool, Vec<Value>)> {
    let g = input::graph(opts)?;
    let hd = HomologyData::new(&g);
    let q = input::lattice(opts, hd.genus())?;
    let len = input::len_or(opts, 8)?;
    let tol = opts.tol.unwrap_or(TRANSFORM_TOL);
    let counts = brute_force(&g, &hd, len, input::budget(opts)?)?.counts.project(&q)?;
    let r = verify_transforms(&g, &hd, &q, &counts, len)?;
    let passed = r.passed(tol);
    Ok((
        passed,
        vec![json!({
            "order": q.order,
            "L": len,
            "forward": r.forward,
            "inverse": r.inverse,
            "total": r.total,
            "average": r.average,
            "passed": passed,
        })],
    ))
}

fn oracle(opts: &Options) -> Result<(bool, Vec<Value>)> {
    let g = input::graph(opts)?;
    let hd = HomologyData::new(&g);
    let len = input::len_or(opts, 8)?;
    let budget = input::budget(opts)?;
    let census = brute_force(&g, &hd, len, budget)?;
    let mut spectral = counts_integral(&g, &hd, len, budget)?;
    fill_primes_integral(&mut spectral)?;
    let n_mismatch = spectral.n_mismatch(&census.counts);
    let primes_agree = census
        .counts
        .rows
        .iter()
        .all(|(a, row)| spectral.pi_seq(a) == row.pi && spectral.pi_c_seq(a) == row.pi_c);
    let integral_ok = n_mismatch.is_none() && primes_agree;
    let mut checks = vec![json!({
        "target": "integral",
        "L": len,
        "circuits": census.circuits,
        "classes": census.counts.clone().pruned().rows.len(),
        "first_mismatch": n_mismatch.map(|(a, l)| json!({ "class": a, "l": l })),
        "primes_agree": primes_agree,
        "passed": integral_ok,
    })];
    let mut all = integral_ok;
    if opts.lattice.is_some() {
        let q = input::lattice(opts, hd.genus())?;
        let quotient = counts_mod_lattice(&g, &hd, &q, len, budget)?;
        let mismatch = quotient.n_mismatch(&census.counts.project(&q)?);
        let ok = mismatch.is_none();
        all &= ok;
        checks.push(json!({
            "target": "quotient",
            "order": q.order,
            "first_mismatch": mismatch.map(|(a, l)| json!({ "class": a, "l": l })),
            "passed": ok,
        }));
    }
    Ok((all, checks))
}
