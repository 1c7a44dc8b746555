use std::fs::File;
use std::io::BufReader;

use ihara_core::generators::{cycle, k4, theta};
use ihara_core::io::load_graph;
use ihara_core::{Character, Graph, HomologyData, OneForm, QuotientGroup};
use serde_json::Value;
use thiserror::Error;

use crate::args::{Options, MAX_GRID, MAX_LEN};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("no graph given; use --graph PATH or --gen SPEC")]
    MissingGraph,
    #[error("unknown generator `{0}`; expected `k4`, `cycle N` or `theta L0 L1 L2`")]
    BadGenerator(String),
    #[error("cannot read {path}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("--omega has {got} coordinates but the genus is {genus}")]
    OmegaLength { got: usize, genus: usize },
    #[error("--L must be between 1 and {MAX_LEN}, got {0}")]
    BadLength(usize),
    #[error("--grid must be between 1 and {MAX_GRID}, got {0}")]
    BadGrid(usize),
    #[error("budget must be positive and finite, got {0}")]
    BadBudget(f64),
    #[error("bad lattice: {0}")]
    BadLattice(String),
    #[error("{0} requires {1}")]
    Missing(&'static str, &'static str),
}

pub fn graph(opts: &Options) -> anyhow::Result<Graph> {
    if let Some(path) = &opts.graph {
        let file = File::open(path).map_err(|source| InputError::Io {
            path: path.display().to_string(),
            source,
        })?;
        return Ok(load_graph(BufReader::new(file))?);
    }
    if opts.gen.is_empty() {
        return Err(InputError::MissingGraph.into());
    }
    generated(&opts.gen.join(" "))
}

/// Parses `k4`, `cycle N` or `theta L0 L1 L2`.
pub fn generated(spec: &str) -> anyhow::Result<Graph> {
    let bad = || InputError::BadGenerator(spec.to_string());
    let words: Vec<&str> = spec.split_whitespace().collect();
    let nums = |rest: &[&str]| -> Result<Vec<usize>, InputError> {
        rest.iter()
            .map(|w| w.parse::<usize>().ok().filter(|&x| x >= 1).ok_or_else(bad))
            .collect()
    };
    match words.as_slice() {
        ["k4"] => Ok(k4()),
        ["cycle", rest @ ..] => match nums(rest)?.as_slice() {
            [n] => Ok(cycle(*n)),
            _ => Err(bad().into()),
        },
        ["theta", rest @ ..] => match nums(rest)?.as_slice() {
            [a, b, c] => Ok(theta(*a, *b, *c)),
            _ => Err(bad().into()),
        },
        _ => Err(bad().into()),
    }
}

pub fn len_or(opts: &Options, default: usize) -> Result<usize, InputError> {
    let l = opts.len.unwrap_or(default);
    if l == 0 || l > MAX_LEN {
        return Err(InputError::BadLength(l));
    }
    Ok(l)
}

pub fn grid(opts: &Options) -> Result<usize, InputError> {
    if opts.grid == 0 || opts.grid > MAX_GRID {
        return Err(InputError::BadGrid(opts.grid));
    }
    Ok(opts.grid)
}

pub fn budget(opts: &Options) -> Result<f64, InputError> {
    let b = opts.budget.unwrap_or_else(ihara_core::counting::default_budget);
    if !(b.is_finite() && b > 0.0) {
        return Err(InputError::BadBudget(b));
    }
    Ok(b)
}

/// The 1-form for `--omega`, if given.
pub fn omega(opts: &Options, g: &Graph, hd: &HomologyData) -> Result<Option<OneForm>, InputError> {
    let Some(coords) = &opts.omega else {
        return Ok(None);
    };
    if coords.len() != hd.genus() {
        return Err(InputError::OmegaLength {
            got: coords.len(),
            genus: hd.genus(),
        });
    }
    Ok(Some(hd.form_of(&Character::new(coords.clone()), g.m())))
}

/// Parses `--lattice`, defaulting to `2 H1` when absent.
pub fn lattice(opts: &Options, genus: usize) -> anyhow::Result<QuotientGroup> {
    match &opts.lattice {
        None => Ok(QuotientGroup::scaled(genus, 2)?),
        Some(text) => parse_lattice(text, genus),
    }
}

pub fn parse_lattice(text: &str, genus: usize) -> anyhow::Result<QuotientGroup> {
    let bad = |msg: &str| InputError::BadLattice(msg.to_string());
    let value: Value = serde_json::from_str(text).map_err(|e| bad(&e.to_string()))?;
    let int_vec = |v: &Value| -> Result<Vec<i64>, InputError> {
        v.as_array()
            .ok_or_else(|| bad("expected an array of integers"))?
            .iter()
            .map(|x| x.as_i64().ok_or_else(|| bad("expected an integer")))
            .collect()
    };
    let q = match &value {
        Value::Array(rows) => {
            let gens = rows.iter().map(int_vec).collect::<Result<Vec<_>, _>>()?;
            if gens.len() != genus || gens.iter().any(|v| v.len() != genus) {
                return Err(bad(&format!("expected {genus} generators of length {genus}")).into());
            }
            let columns = (0..genus).map(|i| gens.iter().map(|v| v[i]).collect()).collect();
            QuotientGroup::new(columns)?
        }
        Value::Object(map) if map.contains_key("scale") => {
            let t = map["scale"].as_i64().filter(|&t| t >= 1).ok_or_else(|| bad("scale must be a positive integer"))?;
            QuotientGroup::scaled(genus, t)?
        }
        Value::Object(map) if map.contains_key("kernel_of") => {
            let a = int_vec(&map["kernel_of"])?;
            let k = map
                .get("k")
                .and_then(Value::as_i64)
                .filter(|&k| k >= 1)
                .ok_or_else(|| bad("kernel_of needs a positive integer k"))?;
            if a.len() != genus {
                return Err(bad(&format!("kernel_of needs {genus} coefficients")).into());
            }
            QuotientGroup::kernel_of(&a, k)?
        }
        _ => return Err(bad("expected an array, {\"scale\"} or {\"kernel_of\"}").into()),
    };
    Ok(q)
}
