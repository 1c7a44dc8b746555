//! Twisted Ihara zeta functions of finite graphs: twisted adjacency and edge
//! matrices, their spectra, L-functions, and counts of closed non-backtracking
//! walks in homology classes.
//!
//! ```
//! use ihara_core::{generators::k4, HomologyData, OneForm, lfunc_edge};
//!
//! let g = k4();
//! let hd = HomologyData::new(&g);
//! assert_eq!(hd.genus(), 3);
//! let z = lfunc_edge(&g, &OneForm::zeros(g.m())).unwrap();
//! assert_eq!(z.degree(), 12);
//! ```

pub mod counting;
pub mod error;
pub mod generators;
pub mod graph;
pub mod homology;
pub mod io;
pub mod poly;
pub mod spectrum;
pub mod twist;
pub mod zeta;

pub use counting::{
    brute_force, counts_integral, counts_mod_lattice, fill_primes_integral, fill_primes_quotient,
    trace_formula_eval, vanishing_check, ClassCounts, Exp, Monomial, TraceFormula,
};
pub use error::{Error, Result};
pub use graph::{spanning_tree, Graph, SpanningTree};
pub use homology::{Character, HomologyData, OneForm, QuotientGroup};
pub use poly::ComplexPoly;
pub use spectrum::Spectrum;
pub use twist::{canonical_character, spectrum_a, spectrum_w, verify_antisymmetry};
pub use zeta::{lfunc_edge, lfunc_ihara, log_series, verify_transforms, LogSeries};
