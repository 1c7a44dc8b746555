use anyhow::Result;
use ihara_core::counting::{
    brute_force, circuit_length_gcd, counts_integral, counts_mod_lattice, fill_primes_integral,
    fill_primes_quotient, trace_sweep, ClassCounts,
};
use ihara_core::graph::is_bipartite;
use ihara_core::homology::{complexity, torus_volume};
use ihara_core::twist::{canonical_character, radius_sweep, spectrum_w};
use ihara_core::{Graph, HomologyData, OneForm};
use serde_json::json;

use crate::args::{Format, Method, Options, SweepKind};
use crate::input::{self, InputError};

pub fn info(opts: &Options) -> Result<String> {
    let g = input::graph(opts)?;
    let hd = HomologyData::new(&g);
    let w = complexity(&g);
    let w = match u64::try_from(&w) {
        Ok(x) => json!(x),
        Err(_) => json!(w.to_string()),
    };
    let rho = spectrum_w(&g, &OneForm::zeros(g.m()))?.radius;
    let report = json!({
        "n": g.n(),
        "m": g.m(),
        "g": g.genus(),
        "bipartite": is_bipartite(&g),
        "w": w,
        "vol": torus_volume(&g),
        "theta_coords": canonical_character(&g, &hd).coords,
        "non_tree_edges": hd.non_tree_edges(),
        "nu": circuit_length_gcd(&g, 2 * g.m()),
        "rho": rho,
    });
    Ok(serde_json::to_string_pretty(&report)? + "\n")
}

fn header(genus: usize, last: &str) -> Vec<String> {
    (1..=genus).map(|i| format!("c{i}")).chain([last.to_string()]).collect()
}

pub fn sweep(opts: &Options, what: SweepKind) -> Result<String> {
    let g = input::graph(opts)?;
    let hd = HomologyData::new(&g);
    let grid = input::grid(opts)?;
    let budget = input::budget(opts)?;
    let mut out = csv::Writer::from_writer(Vec::new());
    match what {
        SweepKind::Radius => {
            let mut h = header(hd.genus(), "rho_a");
            h.push("rho_w".into());
            out.write_record(&h)?;
            for row in radius_sweep(&g, &hd, grid, budget)? {
                let mut rec: Vec<String> = row.coords.iter().map(f64::to_string).collect();
                rec.push(format!("{:.12}", row.rho_a));
                rec.push(format!("{:.12}", row.rho_w));
                out.write_record(&rec)?;
            }
        }
        SweepKind::Trace => {
            if opts.len.is_none() {
                return Err(InputError::Missing("sweep trace", "--L").into());
            }
            let l = input::len_or(opts, 0)?;
            out.write_record(header(hd.genus(), "K"))?;
            for (coords, k) in trace_sweep(&g, &hd, grid, l, budget)? {
                let mut rec: Vec<String> = coords.iter().map(f64::to_string).collect();
                rec.push(format!("{k:.9}"));
                out.write_record(&rec)?;
            }
        }
    }
    Ok(String::from_utf8(out.into_inner()?)?)
}

/// Class counts with primes filled in, over `Z^g` or a quotient when `--lattice` is set.
pub fn class_counts(opts: &Options, g: &Graph, method: Method) -> Result<ClassCounts> {
    let hd = HomologyData::new(g);
    let len = input::len_or(opts, 8)?;
    let budget = input::budget(opts)?;
    let quotient = match &opts.lattice {
        Some(_) => Some(input::lattice(opts, hd.genus())?),
        None => None,
    };
    let counts = match (method, &quotient) {
        (Method::Oracle, None) => brute_force(g, &hd, len, budget)?.counts,
        (Method::Oracle, Some(q)) => brute_force(g, &hd, len, budget)?.counts.project(q)?,
        (Method::Spectral, None) => {
            let mut c = counts_integral(g, &hd, len, budget)?;
            fill_primes_integral(&mut c)?;
            c
        }
        (Method::Spectral, Some(q)) => {
            let mut c = counts_mod_lattice(g, &hd, q, len, budget)?;
            fill_primes_quotient(&mut c, q)?;
            c
        }
    };
    // Every quotient element keeps its row; in Z^g only classes that occur are listed.
    Ok(if quotient.is_some() { counts } else { counts.pruned() })
}

pub fn counts(opts: &Options, method: Method, format: Format) -> Result<String> {
    let g = input::graph(opts)?;
    let c = class_counts(opts, &g, method)?;
    Ok(match format {
        Format::Csv => c.to_csv(),
        Format::Json => serde_json::to_string_pretty(&c.to_json())? + "\n",
    })
}
