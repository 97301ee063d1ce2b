//! Timing and operation counts per tree size, emitted as CSV.
//!
//! The traversal columns must equal `n` and `n - 1` exactly; wall time and
//! `poly_mul_scalar_ops` are reported as measured.

use std::time::Instant;

use clap::ValueEnum;
use indpoly_core::generators::TreeFamilySpec;
use indpoly_core::{fip_in, ModularEvaluation, PolynomialAlgebra, SubtreeAlgebra, TraversalStats, Tree};

use crate::commands::{check_traversal_counters, Family};
use crate::{input_err, CliError, CliResult};

pub const CSV_HEADER: &str = "family,n,wall_ms,vertex_visits,edge_explorations,poly_mul_scalar_ops,repeats";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum BenchMode {
    /// Full polynomial with arbitrary-precision coefficients.
    #[default]
    Exact,
    /// Same traversal, evaluating I(T; 1) modulo 2^61 - 1.
    Modular,
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub family: Family,
    pub sizes: Vec<usize>,
    pub repeats: usize,
    pub mode: BenchMode,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub family: &'static str,
    pub n: usize,
    pub wall_ms: f64,
    pub vertex_visits: u64,
    pub edge_explorations: u64,
    pub poly_mul_scalar_ops: u64,
    pub repeats: usize,
}

impl BenchRow {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{:.3},{},{},{},{}",
            self.family,
            self.n,
            self.wall_ms,
            self.vertex_visits,
            self.edge_explorations,
            self.poly_mul_scalar_ops,
            self.repeats
        )
    }
}

/// Family member whose vertex count is `size`, or as close as the family
/// allows: caterpillars get one leg per spine vertex, spiders three legs,
/// complete binary trees the largest depth that fits.
pub fn family_of_size(family: Family, size: usize, seed: u64) -> CliResult<TreeFamilySpec> {
    if size == 0 {
        return Err(CliError::Input("benchmark sizes must be positive".into()));
    }
    Ok(match family {
        Family::Path => TreeFamilySpec::Path { n: size },
        Family::Star => TreeFamilySpec::Star { leaves: size - 1 },
        Family::Caterpillar => TreeFamilySpec::Caterpillar { spine: (size / 2).max(1), legs_per_vertex: 1 },
        Family::CompleteBinary => {
            let depth = (usize::BITS - 1 - (size + 1).leading_zeros()) as usize;
            TreeFamilySpec::CompleteBinary { depth: depth.saturating_sub(1) }
        }
        Family::Spider => TreeFamilySpec::Spider { legs: 3, leg_length: ((size - 1) / 3).max(1) },
        Family::Random => TreeFamilySpec::Random { n: size, seed },
    })
}

fn time_runs<A: SubtreeAlgebra>(t: &Tree, algebra: &A, repeats: usize) -> (f64, TraversalStats) {
    let mut total_ms = 0.0;
    let mut last = TraversalStats::default();
    for _ in 0..repeats {
        let started = Instant::now();
        let (value, stats) = fip_in(t, algebra);
        total_ms += started.elapsed().as_secs_f64() * 1e3;
        drop(value);
        last = stats;
    }
    (total_ms / repeats as f64, last)
}

pub fn run_bench(cfg: &BenchConfig) -> CliResult<Vec<BenchRow>> {
    if cfg.repeats == 0 {
        return Err(CliError::Input("--repeats must be at least 1".into()));
    }
    if cfg.sizes.is_empty() {
        return Err(CliError::Input("--sizes must list at least one size".into()));
    }
    if cfg.sizes.windows(2).any(|w| w[0] > w[1]) {
        return Err(CliError::Input("--sizes must be ascending".into()));
    }
    let mut rows = Vec::with_capacity(cfg.sizes.len());
    for &size in &cfg.sizes {
        let spec = family_of_size(cfg.family, size, cfg.seed)?;
        let tree = spec.generate().map_err(input_err)?;
        let (wall_ms, stats) = match cfg.mode {
            BenchMode::Exact => time_runs(&tree, &PolynomialAlgebra, cfg.repeats),
            BenchMode::Modular => {
                time_runs(&tree, &ModularEvaluation::new(1, ModularEvaluation::MERSENNE_61), cfg.repeats)
            }
        };
        check_traversal_counters(&tree, &stats).map_err(CliError::Internal)?;
        let summary = stats.summary();
        rows.push(BenchRow {
            family: spec.family_name(),
            n: tree.vertex_count(),
            wall_ms,
            vertex_visits: summary.vertex_visits,
            edge_explorations: summary.edge_explorations,
            poly_mul_scalar_ops: summary.poly_mul_scalar_ops,
            repeats: cfg.repeats,
        });
    }
    Ok(rows)
}

pub fn render_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&row.to_csv());
        out.push('\n');
    }
    out
}
