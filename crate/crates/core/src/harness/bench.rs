use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::csp::candidate_space;
use crate::csp::{
    perfect_tree_size, solve_dp_levenshtein, solve_exhaustive, tree_search, SearchStats,
};
use crate::cssp::{brute_force_cssp, solve_cssp, CsspInstance};
use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};
use crate::strings::{CspInstance, Metric, Seq};
use crate::util::mix_seed;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    Exhaustive,
    TreeSearch,
    Dp,
    /// Generator enumeration for closest substring. On a Hamming CSP
    /// instance it runs with `L = n`.
    Marx,
    BruteForceCssp,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::Exhaustive,
        Algorithm::TreeSearch,
        Algorithm::Dp,
        Algorithm::Marx,
        Algorithm::BruteForceCssp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Exhaustive => "exhaustive",
            Algorithm::TreeSearch => "tree_search",
            Algorithm::Dp => "dp",
            Algorithm::Marx => "marx",
            Algorithm::BruteForceCssp => "brute_force_cssp",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.replace('-', "_").to_ascii_lowercase();
        match key.as_str() {
            "treesearch" => Ok(Algorithm::TreeSearch),
            "bruteforce" | "brute_force" => Ok(Algorithm::BruteForceCssp),
            _ => Algorithm::ALL
                .into_iter()
                .find(|a| a.name() == key)
                .ok_or_else(|| Error::InvalidArgument(format!("unknown algorithm {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Feasible,
    Infeasible,
    /// Over budget, or the algorithm does not apply to the instance.
    Refused,
}

#[derive(Debug, Clone, PartialEq)]
pub enum BenchInstance {
    Csp {
        name: String,
        instance: CspInstance<Rational>,
    },
    Cssp {
        name: String,
        instance: CsspInstance,
    },
}

impl BenchInstance {
    pub fn csp(name: impl Into<String>, instance: CspInstance<Rational>) -> Self {
        BenchInstance::Csp {
            name: name.into(),
            instance,
        }
    }

    pub fn cssp(name: impl Into<String>, instance: CsspInstance) -> Self {
        BenchInstance::Cssp {
            name: name.into(),
            instance,
        }
    }

    pub fn name(&self) -> &str {
        match self {
            BenchInstance::Csp { name, .. } | BenchInstance::Cssp { name, .. } => name,
        }
    }

    fn descriptor(&self) -> InstanceDescriptor {
        match self {
            BenchInstance::Csp { name, instance } => InstanceDescriptor {
                name: name.clone(),
                kind: "csp".into(),
                metric: instance.metric().name().into(),
                sigma: instance.alphabet().size(),
                k: instance.k(),
                n: instance.max_len(),
                d: instance.d(),
                l: None,
            },
            BenchInstance::Cssp { name, instance } => InstanceDescriptor {
                name: name.clone(),
                kind: "cssp".into(),
                metric: "hamming".into(),
                sigma: instance.alphabet().size(),
                k: instance.k(),
                n: instance.max_len(),
                d: instance.d(),
                l: Some(instance.l()),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceDescriptor {
    pub name: String,
    /// `"csp"` or `"cssp"`.
    pub kind: String,
    pub metric: String,
    pub sigma: usize,
    pub k: usize,
    /// Longest input length.
    pub n: usize,
    pub d: usize,
    #[serde(rename = "L", default, skip_serializing_if = "Option::is_none")]
    pub l: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchmarkResult {
    pub instance: InstanceDescriptor,
    pub algorithm: Algorithm,
    pub outcome: Outcome,
    pub solution: Option<String>,
    /// Recomputed radius (CSP) or largest best-window distance (CSSP) of
    /// the solution, as `"num/den"`.
    pub radius: Option<String>,
    /// The solution passed independent re-verification. Vacuously true when
    /// there is no solution.
    pub verified: bool,
    /// Present only when the plan asks for timings; omitted otherwise so
    /// exports stay byte-reproducible.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
    pub stats: Option<SearchStats>,
    pub seed: u64,
    pub error: Option<String>,
}

#[derive(Debug, Clone)]
pub struct BenchPlan {
    pub algorithms: Vec<Algorithm>,
    pub instances: Vec<BenchInstance>,
    pub budget: Budget,
    pub timings: bool,
    /// Worker threads; 0 or 1 runs the grid sequentially.
    pub threads: usize,
}

impl BenchPlan {
    pub fn new(algorithms: Vec<Algorithm>, instances: Vec<BenchInstance>) -> Self {
        BenchPlan {
            algorithms,
            instances,
            budget: Budget::default(),
            timings: false,
            threads: 1,
        }
    }

    pub fn cells(&self) -> usize {
        self.algorithms.len() * self.instances.len()
    }
}

/// The `auto` rule. Under Hamming the search tree wins whenever its
/// `O((d+1)^(d+1))` size is below the `σⁿ` candidate space (small `d`); under
/// Levenshtein the table wins when its cells times the `2^k` moves per cell
/// undercut the candidate space (small `k`). Everything else is exhaustive.
pub fn choose_algorithm(inst: &CspInstance<Rational>) -> Algorithm {
    let space = candidate_space(inst);
    match inst.metric() {
        Metric::Hamming if perfect_tree_size(inst.d()) <= space => Algorithm::TreeSearch,
        Metric::Levenshtein if inst.k() <= 16 => {
            let width = inst.d() as u128 + 1;
            let work = inst.strings().iter().fold(1u128 << inst.k(), |acc, s| {
                acc.saturating_mul((s.len() as u128 + 1) * width)
            });
            if work <= space {
                Algorithm::Dp
            } else {
                Algorithm::Exhaustive
            }
        }
        _ => Algorithm::Exhaustive,
    }
}

/// Whether `algorithm` can run on `instance` at all, budget aside.
pub fn applicable(algorithm: Algorithm, instance: &BenchInstance) -> bool {
    match instance {
        BenchInstance::Csp { instance, .. } => match algorithm {
            Algorithm::Exhaustive => true,
            Algorithm::TreeSearch | Algorithm::Marx | Algorithm::BruteForceCssp => {
                instance.metric().is_hamming()
            }
            Algorithm::Dp => matches!(instance.metric(), Metric::Levenshtein),
        },
        BenchInstance::Cssp { .. } => {
            matches!(algorithm, Algorithm::Marx | Algorithm::BruteForceCssp)
        }
    }
}

struct Solved {
    solution: Option<Seq>,
    stats: Option<SearchStats>,
}

fn unsupported(algorithm: Algorithm, what: &str) -> Error {
    Error::InvalidArgument(format!("{algorithm} does not apply to {what}"))
}

fn solve_csp(
    inst: &CspInstance<Rational>,
    algorithm: Algorithm,
    budget: &Budget,
) -> Result<Solved> {
    match algorithm {
        Algorithm::Exhaustive => Ok(Solved {
            solution: solve_exhaustive(inst, budget)?.map(|c| c.seq),
            stats: None,
        }),
        Algorithm::TreeSearch => {
            let size = perfect_tree_size(inst.d());
            if size > budget.max_candidates {
                return Err(Error::budget(
                    "search tree nodes",
                    size,
                    budget.max_candidates,
                ));
            }
            let out = tree_search(inst)?;
            Ok(Solved {
                solution: out.center,
                stats: Some(out.stats),
            })
        }
        Algorithm::Dp => Ok(Solved {
            solution: solve_dp_levenshtein(inst, budget)?,
            stats: None,
        }),
        Algorithm::Marx | Algorithm::BruteForceCssp => {
            if !matches!(inst.metric(), Metric::Hamming) {
                return Err(Error::UnsupportedMetric {
                    operation: algorithm.name(),
                    metric: inst.metric().name(),
                });
            }
            let as_substring = CsspInstance::new(inst.strings().to_vec(), inst.d(), inst.n())?;
            solve_substring(&as_substring, algorithm, budget)
        }
    }
}

fn solve_substring(inst: &CsspInstance, algorithm: Algorithm, budget: &Budget) -> Result<Solved> {
    let solution = match algorithm {
        Algorithm::Marx => solve_cssp(inst, budget)?,
        Algorithm::BruteForceCssp => brute_force_cssp(inst, budget)?,
        other => return Err(unsupported(other, "closest substring instances")),
    };
    Ok(Solved {
        solution,
        stats: None,
    })
}

/// Independent check of a reported solution: returns `(verified, radius)`.
fn verify(instance: &BenchInstance, solution: &Seq) -> Result<(bool, String)> {
    match instance {
        BenchInstance::Csp { instance, .. } => {
            let radius = instance.radius(solution)?;
            Ok((radius <= instance.threshold(), radius.render()))
        }
        BenchInstance::Cssp { instance, .. } => {
            let worst = instance
                .window_distances(solution)?
                .into_iter()
                .max()
                .unwrap_or(0);
            let radius = Rational::from_count(worst);
            Ok((worst <= instance.d(), radius.render()))
        }
    }
}

fn run_cell(
    instance: &BenchInstance,
    algorithm: Algorithm,
    budget: &Budget,
    timings: bool,
    seed: u64,
) -> BenchmarkResult {
    let start = Instant::now();
    let solved = match instance {
        BenchInstance::Csp { instance, .. } => solve_csp(instance, algorithm, budget),
        BenchInstance::Cssp { instance, .. } => solve_substring(instance, algorithm, budget),
    };
    let elapsed = start.elapsed().as_secs_f64() * 1e3;
    let mut result = BenchmarkResult {
        instance: instance.descriptor(),
        algorithm,
        outcome: Outcome::Refused,
        solution: None,
        radius: None,
        verified: true,
        wall_time_ms: timings.then_some(elapsed),
        stats: None,
        seed,
        error: None,
    };
    match solved {
        Err(e) => result.error = Some(e.to_string()),
        Ok(Solved {
            solution: None,
            stats,
        }) => {
            result.outcome = Outcome::Infeasible;
            result.stats = stats;
        }
        Ok(Solved {
            solution: Some(seq),
            stats,
        }) => {
            result.stats = stats;
            result.solution = Some(seq.to_string());
            match verify(instance, &seq) {
                Ok((ok, radius)) => {
                    result.outcome = Outcome::Feasible;
                    result.verified = ok;
                    result.radius = Some(radius);
                    if !ok {
                        result.error = Some("reported solution failed re-verification".into());
                    }
                }
                Err(e) => {
                    result.outcome = Outcome::Feasible;
                    result.verified = false;
                    result.error = Some(format!("verification failed: {e}"));
                }
            }
        }
    }
    result
}

/// Runs every `algorithm × instance` cell. Results are ordered instance-major
/// regardless of `threads`. Each cell gets its own seed, derived from `seed`
/// and the cell's position. Refusals are recorded per cell.
pub fn run_benchmark(plan: &BenchPlan, seed: u64) -> Vec<BenchmarkResult> {
    let cells: Vec<(usize, usize)> = (0..plan.instances.len())
        .flat_map(|i| (0..plan.algorithms.len()).map(move |a| (i, a)))
        .collect();
    let run = |&(i, a): &(usize, usize)| {
        let cell_seed = mix_seed(seed, (i * plan.algorithms.len() + a) as u64);
        run_cell(
            &plan.instances[i],
            plan.algorithms[a],
            &plan.budget,
            plan.timings,
            cell_seed,
        )
    };
    if plan.threads <= 1 || cells.len() <= 1 {
        return cells.iter().map(run).collect();
    }
    let chunk = cells.len().div_ceil(plan.threads);
    std::thread::scope(|scope| {
        let handles: Vec<_> = cells
            .chunks(chunk)
            .map(|part| scope.spawn(move || part.iter().map(run).collect::<Vec<_>>()))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("benchmark worker panicked"))
            .collect()
    })
}
