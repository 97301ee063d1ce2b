use std::str::FromStr;
use std::time::Instant;

use clap::{Args, ValueEnum};
use indpoly_core::generators::TreeFamilySpec;
use indpoly_core::{fip, split_components, Graph, Polynomial, StatsSummary, TraversalStats, Tree, TreeError};
use num_bigint::BigInt;
use serde::Serialize;

use crate::{input_err, CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    /// Descending coefficient list, `[1, 3, 1]`.
    #[default]
    Paper,
    /// One JSON record.
    Json,
    /// `x^2 + 3x + 1`.
    Pretty,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ComputeOptions {
    pub format: OutputFormat,
    pub forest: bool,
    pub stats: bool,
}

/// One computed polynomial with its provenance and counters.
#[derive(Debug, Clone, Serialize)]
pub struct OutputRecord {
    pub input: String,
    pub n: usize,
    pub alpha: usize,
    /// Descending order, `alpha + 1` entries.
    pub polynomial: Vec<serde_json::Number>,
    pub polynomial_string: String,
    pub stats: StatsSummary,
    pub wall_time_ms: f64,
}

impl OutputRecord {
    pub fn new(input: String, n: usize, poly: &Polynomial, stats: StatsSummary, wall_time_ms: f64) -> Self {
        let polynomial = poly
            .to_paper_format()
            .iter()
            .map(|c| serde_json::Number::from_str(&c.to_string()).expect("decimal integer"))
            .collect();
        OutputRecord {
            input,
            n,
            alpha: poly.degree(),
            polynomial,
            polynomial_string: poly.to_string(),
            stats,
            wall_time_ms,
        }
    }
}

/// Each vertex entered once and each edge explored once, or no traversal at
/// all for the one- and two-vertex short circuit.
pub fn check_traversal_counters(t: &Tree, stats: &TraversalStats) -> Result<(), String> {
    let n = t.vertex_count();
    let ok = if n >= 3 {
        stats.vertex_visits.len() == n && stats.edge_explorations.len() == n - 1 && stats.is_exactly_once()
    } else {
        stats.total_vertex_visits() == 0 && stats.total_edge_explorations() == 0
    };
    if ok {
        Ok(())
    } else {
        Err(format!(
            "traversal counters off for n = {n}: {} visits, {} edge explorations",
            stats.total_vertex_visits(),
            stats.total_edge_explorations()
        ))
    }
}

fn tree_error(e: TreeError, forest: bool) -> CliError {
    match e {
        TreeError::NotConnected { .. } if !forest => input_err(format!("{e} (pass --forest to accept forests)")),
        other => input_err(other),
    }
}

/// Polynomial and counter totals for `graph`, enforcing the tree/forest
/// contract.
pub fn compute_polynomial(graph: Graph, forest: bool) -> CliResult<(Polynomial, StatsSummary)> {
    if !forest {
        let tree = Tree::new(graph).map_err(|e| tree_error(e, false))?;
        let (poly, stats) = fip(&tree);
        check_traversal_counters(&tree, &stats).map_err(CliError::Internal)?;
        return Ok((poly, stats.summary()));
    }
    let components = split_components(&graph).map_err(|e| tree_error(e, true))?;
    let mut total = StatsSummary::default();
    let mut product = Polynomial::one();
    for component in components.components() {
        let (poly, stats) = fip(component);
        check_traversal_counters(component, &stats).map_err(CliError::Internal)?;
        total += stats.summary();
        product = product.mul_counted(&poly, &mut total.poly_mul_scalar_ops);
    }
    Ok((product, total))
}

pub fn cmd_compute(graph: Graph, identity: &str, opts: ComputeOptions) -> CliResult<String> {
    let n = graph.vertex_count();
    let started = Instant::now();
    let (poly, stats) = compute_polynomial(graph, opts.forest)?;
    let wall_ms = started.elapsed().as_secs_f64() * 1e3;
    let mut out = match opts.format {
        OutputFormat::Paper => poly.paper_format_string(),
        OutputFormat::Pretty => poly.to_string(),
        OutputFormat::Json => {
            let record = OutputRecord::new(identity.to_string(), n, &poly, stats, wall_ms);
            serde_json::to_string(&record).expect("record serializes")
        }
    };
    out.push('\n');
    if opts.stats && opts.format != OutputFormat::Json {
        out.push_str(&format!(
            "n={n} alpha={} vertex_visits={} edge_explorations={} poly_mul_scalar_ops={} wall_ms={wall_ms:.3}\n",
            poly.degree(),
            stats.vertex_visits,
            stats.edge_explorations,
            stats.poly_mul_scalar_ops
        ));
    }
    Ok(out)
}

pub fn cmd_eval(graph: Graph, at: &BigInt, forest: bool) -> CliResult<String> {
    let (poly, _) = compute_polynomial(graph, forest)?;
    Ok(format!("{}\n", poly.eval(at)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Family {
    Path,
    Star,
    Caterpillar,
    CompleteBinary,
    Spider,
    Random,
}

/// Family selection shared by `gen` and `bench`.
#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Vertex count (path, star, random).
    #[arg(long)]
    pub n: Option<usize>,
    /// Depth of a complete binary tree.
    #[arg(long)]
    pub depth: Option<usize>,
    /// Spine length of a caterpillar.
    #[arg(long)]
    pub spine: Option<usize>,
    /// Legs per spine vertex (caterpillar) or number of legs (spider).
    #[arg(long)]
    pub legs: Option<usize>,
    /// Leg length of a spider.
    #[arg(long)]
    pub leg_length: Option<usize>,
    #[arg(long, env = "INDPOLY_SEED", default_value_t = 0)]
    pub seed: u64,
}

fn required(value: Option<usize>, flag: &str, family: &str) -> CliResult<usize> {
    value.ok_or_else(|| CliError::Input(format!("--{flag} is required for the {family} family")))
}

impl FamilyArgs {
    pub fn to_spec(&self) -> CliResult<TreeFamilySpec> {
        let spec = match self.family {
            Family::Path => TreeFamilySpec::Path { n: required(self.n, "n", "path")? },
            Family::Star => {
                let n = required(self.n, "n", "star")?;
                if n == 0 {
                    return Err(CliError::Input("star needs --n >= 1".into()));
                }
                TreeFamilySpec::Star { leaves: n - 1 }
            }
            Family::Caterpillar => TreeFamilySpec::Caterpillar {
                spine: required(self.spine, "spine", "caterpillar")?,
                legs_per_vertex: self.legs.unwrap_or(1),
            },
            Family::CompleteBinary => {
                TreeFamilySpec::CompleteBinary { depth: required(self.depth, "depth", "complete_binary")? }
            }
            Family::Spider => TreeFamilySpec::Spider {
                legs: required(self.legs, "legs", "spider")?,
                leg_length: required(self.leg_length, "leg-length", "spider")?,
            },
            Family::Random => TreeFamilySpec::Random { n: required(self.n, "n", "random")?, seed: self.seed },
        };
        Ok(spec)
    }
}

/// Canonical edge-list text for the requested family member.
pub fn cmd_gen(spec: &TreeFamilySpec) -> CliResult<String> {
    let tree = spec.generate().map_err(input_err)?;
    Ok(tree.to_edge_list())
}
