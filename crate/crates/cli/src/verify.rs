//! Cross-checks of the engine against the oracles over exhaustive and random
//! tree corpora.

use indpoly_core::generators::{enumerate_all_trees, random_corpus, ENUMERATE_MAX_N};
use indpoly_core::oracle::{brute_force_polynomial, greedy_tree_mis, BRUTE_FORCE_MAX_N};
use indpoly_core::{fip, fipr_in, Polynomial, PolynomialAlgebra, TraversalStats, Tree};
use num_bigint::BigUint;
use rayon::prelude::*;

use crate::commands::check_traversal_counters;
use crate::{CliError, CliResult};

/// Root invariance is checked on trees up to this size; every inner vertex
/// is tried as a root.
pub const ROOT_INVARIANCE_MAX_N: usize = 20;

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub exhaustive_max_n: usize,
    pub random_count: usize,
    pub random_min_n: usize,
    pub random_max_n: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { exhaustive_max_n: 7, random_count: 200, random_min_n: 9, random_max_n: 20, seed: 0 }
    }
}

impl VerifyConfig {
    pub fn validate(&self) -> CliResult<()> {
        if self.exhaustive_max_n > ENUMERATE_MAX_N {
            return Err(CliError::Input(format!("--exhaustive-max-n must be at most {ENUMERATE_MAX_N}")));
        }
        if self.random_count > 0 {
            if self.random_max_n > BRUTE_FORCE_MAX_N {
                return Err(CliError::Input(format!("--random-max-n must be at most {BRUTE_FORCE_MAX_N}")));
            }
            if self.random_min_n == 0 || self.random_min_n > self.random_max_n {
                return Err(CliError::Input("need 1 <= --random-min-n <= --random-max-n".into()));
            }
        }
        Ok(())
    }
}

pub const SUITES: [&str; 5] =
    ["oracle-exhaustive", "oracle-random", "root-invariance", "traversal-counters", "coefficient-identities"];

#[derive(Debug, Clone, Default)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    /// Trees checked per size in the exhaustive pass, index = n.
    pub exhaustive_counts: Vec<usize>,
    pub random_checked: usize,
    pub suites: Vec<SuiteResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let counts: Vec<String> = self.exhaustive_counts.iter().skip(1).map(ToString::to_string).collect();
        let total: usize = self.exhaustive_counts.iter().sum();
        if !counts.is_empty() {
            out.push_str(&format!("exhaustive trees checked: {} = {total}\n", counts.join("+")));
        }
        out.push_str(&format!("random trees checked: {}\n", self.random_checked));
        for suite in &self.suites {
            let status = if suite.passed() { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status} {} ({} checks)\n", suite.name, suite.checked));
            for failure in &suite.failures {
                out.push_str(&format!("  {}\n", failure.replace('\n', "\n  ")));
            }
        }
        out.push_str(if self.passed() { "all suites passed\n" } else { "verification FAILED\n" });
        out
    }
}

/// Outcome of all per-tree checks; `None` means the check was skipped.
#[derive(Debug, Default)]
struct TreeOutcome {
    oracle: Option<Result<(), String>>,
    root_invariance: Option<Result<(), String>>,
    counters: Option<Result<(), String>>,
    identities: Option<Result<(), String>>,
}

fn describe(identity: &str, t: &Tree) -> String {
    format!("{identity}\n{}", t.to_edge_list().trim_end())
}

fn check_tree<E>(identity: &str, t: &Tree, engine: &E) -> TreeOutcome
where
    E: Fn(&Tree) -> (Polynomial, TraversalStats) + Sync,
{
    let n = t.vertex_count();
    let (poly, stats) = engine(t);
    let mut outcome = TreeOutcome::default();

    let expected = brute_force_polynomial(t.graph()).expect("sizes validated against the oracle cap");
    outcome.oracle = Some(if poly == expected {
        Ok(())
    } else {
        Err(format!("{}\n  engine: {poly}\n  oracle: {expected}", describe(identity, t)))
    });

    outcome.counters =
        Some(check_traversal_counters(t, &stats).map_err(|e| format!("{}\n  {e}", describe(identity, t))));

    let mut problems = Vec::new();
    if poly.coefficient(0) != BigUint::from(1u32) {
        problems.push(format!("s0 = {}", poly.coefficient(0)));
    }
    if poly.coefficient(1) != BigUint::from(n) {
        problems.push(format!("s1 = {}, expected {n}", poly.coefficient(1)));
    }
    let s2 = n * n.saturating_sub(1) / 2 - (n - 1);
    if poly.coefficient(2) != BigUint::from(s2) {
        problems.push(format!("s2 = {}, expected {s2}", poly.coefficient(2)));
    }
    let mis = greedy_tree_mis(t);
    if poly.degree() != mis {
        problems.push(format!("degree {} but greedy independence number {mis}", poly.degree()));
    }
    outcome.identities = Some(if problems.is_empty() {
        Ok(())
    } else {
        Err(format!("{}\n  {}", describe(identity, t), problems.join("; ")))
    });

    if (3..=ROOT_INVARIANCE_MAX_N).contains(&n) {
        let mut problems = Vec::new();
        for root in (0..n).filter(|&v| t.degree(v) >= 2) {
            match fipr_in(t, root, &PolynomialAlgebra) {
                Ok(map) => {
                    if map.root_state().i_of_t != expected {
                        problems.push(format!("root {root}: {}", map.root_state().i_of_t));
                    }
                    if map.stats.total_edge_explorations() != (n - 1) as u64 || !map.stats.is_exactly_once() {
                        problems
                            .push(format!("root {root}: {} edge explorations", map.stats.total_edge_explorations()));
                    }
                    if let Some(v) =
                        map.states.iter().position(|s| s.i_of_t != &s.i_minus_v + &s.i_minus_nv.shift_mul_x())
                    {
                        problems.push(format!("root {root}: recurrence fails at vertex {v}"));
                    }
                }
                Err(e) => problems.push(e.to_string()),
            }
        }
        outcome.root_invariance = Some(if problems.is_empty() {
            Ok(())
        } else {
            Err(format!("{}\n  {}", describe(identity, t), problems.join("\n  ")))
        });
    }
    outcome
}

/// Runs every suite with the production engine.
pub fn run_verify(cfg: &VerifyConfig) -> CliResult<VerifyReport> {
    run_verify_with(cfg, &fip)
}

/// Runs every suite with `engine` standing in for [`fip`]. Trees are checked
/// in parallel; failures are reported in corpus order.
pub fn run_verify_with<E>(cfg: &VerifyConfig, engine: &E) -> CliResult<VerifyReport>
where
    E: Fn(&Tree) -> (Polynomial, TraversalStats) + Sync,
{
    cfg.validate()?;
    let mut exhaustive_counts = vec![0usize];
    let mut exhaustive = Vec::new();
    for n in 1..=cfg.exhaustive_max_n {
        let before = exhaustive.len();
        for (i, t) in enumerate_all_trees(n).expect("bounded by ENUMERATE_MAX_N").enumerate() {
            exhaustive.push((format!("exhaustive n={n} #{i}"), t));
        }
        exhaustive_counts.push(exhaustive.len() - before);
    }
    let random = if cfg.random_count == 0 {
        Vec::new()
    } else {
        random_corpus(cfg.random_count, cfg.random_min_n, cfg.random_max_n, cfg.seed)
            .map_err(|e| CliError::Input(e.to_string()))?
    };
    let random: Vec<_> = random
        .into_iter()
        .enumerate()
        .map(|(i, t)| (format!("random #{i} (n={}, seed={})", t.vertex_count(), cfg.seed), t))
        .collect();

    let run = |corpus: &[(String, Tree)]| -> Vec<TreeOutcome> {
        corpus.par_iter().map(|(id, t)| check_tree(id, t, engine)).collect()
    };
    let exhaustive_outcomes = run(&exhaustive);
    let random_outcomes = run(&random);

    let mut suites: Vec<SuiteResult> = SUITES.iter().map(|&name| SuiteResult { name, ..Default::default() }).collect();
    let mut record = |suite: usize, result: &Option<Result<(), String>>| {
        if let Some(r) = result {
            suites[suite].checked += 1;
            if let Err(msg) = r {
                suites[suite].failures.push(msg.clone());
            }
        }
    };
    for (outcomes, oracle_suite) in [(&exhaustive_outcomes, 0), (&random_outcomes, 1)] {
        for o in outcomes {
            record(oracle_suite, &o.oracle);
            record(2, &o.root_invariance);
            record(3, &o.counters);
            record(4, &o.identities);
        }
    }
    Ok(VerifyReport { exhaustive_counts, random_checked: random.len(), suites })
}
