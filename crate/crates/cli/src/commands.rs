use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use anyhow::{bail, Result};
use closest_core::chain::chain_report;
use closest_core::harness::{
    applicable, choose_algorithm, cost_tsv, fasta_to_string, gen_cssp_instance,
    gen_planted_instance, gen_random_hamming, gen_random_levenshtein, report_json, run_benchmark,
    Algorithm, BenchInstance, BenchPlan, BenchmarkResult, FastaRecord, InstanceFile, Outcome,
};
use closest_core::quantum::{
    algorithm_summary, cost_report, default_k_classes, grover_optimal_iterations, grover_simulate,
    regime_table, CostMetric, CostParams, GroverMode,
};
use closest_core::Budget;

use crate::input::{emit, load_csp, load_cssp, search_budget};
use crate::{
    AlgoChoice, AnalyzeChainArgs, BenchArgs, CostModelArgs, Format, GenArgs, GenKind, GroverArgs,
    GroverModeArg, SolveCspArgs, SolveCsspArgs, EXIT_INFEASIBLE, EXIT_OK, EXIT_REFUSED,
};

fn result_text(r: &BenchmarkResult) -> String {
    let mut out = format!(
        "instance\t{}\nalgorithm\t{}\noutcome\t{}\n",
        r.instance.name,
        r.algorithm,
        outcome_name(r.outcome)
    );
    if let Some(s) = &r.solution {
        let _ = writeln!(out, "solution\t{s}");
    }
    if let Some(radius) = &r.radius {
        let _ = writeln!(out, "radius\t{radius}\nverified\t{}", r.verified);
    }
    if let Some(stats) = &r.stats {
        let _ = writeln!(
            out,
            "nodes_expanded\t{}\nmax_depth\t{}\npruned_by_budget\t{}\npruned_by_bound\t{}",
            stats.nodes_expanded, stats.max_depth, stats.pruned_by_budget, stats.pruned_by_bound
        );
    }
    if let Some(e) = &r.error {
        let _ = writeln!(out, "note\t{e}");
    }
    out
}

fn outcome_name(o: Outcome) -> &'static str {
    match o {
        Outcome::Feasible => "feasible",
        Outcome::Infeasible => "infeasible",
        Outcome::Refused => "refused",
    }
}

fn exit_for(r: &BenchmarkResult) -> u8 {
    match r.outcome {
        Outcome::Feasible if r.verified => EXIT_OK,
        Outcome::Feasible | Outcome::Infeasible => EXIT_INFEASIBLE,
        Outcome::Refused => EXIT_REFUSED,
    }
}

fn solve_one(
    instance: BenchInstance,
    algorithm: Algorithm,
    budget: Budget,
    seed: u64,
    format: Format,
    output: Option<&std::path::Path>,
) -> Result<u8> {
    if !applicable(algorithm, &instance) {
        bail!("{algorithm} does not apply to this instance");
    }
    let mut plan = BenchPlan::new(vec![algorithm], vec![instance]);
    plan.budget = budget;
    let result = run_benchmark(&plan, seed).remove(0);
    if let (Outcome::Refused, Some(e)) = (result.outcome, &result.error) {
        eprintln!("refused: {e}");
    }
    let text = match format {
        Format::Json => report_json(std::slice::from_ref(&result)),
        Format::Text => result_text(&result),
        _ => bail!("solve output is text or json"),
    };
    emit(output, &text)?;
    Ok(exit_for(&result))
}

fn instance_name(path: &std::path::Path) -> String {
    path.file_stem()
        .map_or_else(|| "input".into(), |s| s.to_string_lossy().into_owned())
}

pub fn solve_csp(args: SolveCspArgs) -> Result<u8> {
    let inst = load_csp(&args.input)?;
    let algorithm = match args.algo {
        AlgoChoice::Auto => choose_algorithm(&inst),
        AlgoChoice::Exhaustive => Algorithm::Exhaustive,
        AlgoChoice::Treesearch => Algorithm::TreeSearch,
        AlgoChoice::Dp => Algorithm::Dp,
        AlgoChoice::Marx => Algorithm::Marx,
    };
    let a = &args.input;
    solve_one(
        BenchInstance::csp(instance_name(&a.input), inst),
        algorithm,
        search_budget(a.budget_nodes),
        args.seed,
        a.format,
        a.output.as_deref(),
    )
}

pub fn solve_cssp(args: SolveCsspArgs) -> Result<u8> {
    let inst = load_cssp(&args.input, args.l)?;
    let algorithm = match args.algo {
        AlgoChoice::Auto | AlgoChoice::Marx => Algorithm::Marx,
        AlgoChoice::Exhaustive => Algorithm::BruteForceCssp,
        AlgoChoice::Treesearch | AlgoChoice::Dp => {
            bail!("closest substring supports --algo marx or exhaustive")
        }
    };
    let a = &args.input;
    solve_one(
        BenchInstance::cssp(instance_name(&a.input), inst),
        algorithm,
        search_budget(a.budget_nodes),
        args.seed,
        a.format,
        a.output.as_deref(),
    )
}

pub fn analyze_chain(args: AnalyzeChainArgs) -> Result<u8> {
    let mut budget = Budget::default();
    if let Some(n) = args.budget_nodes {
        budget.max_chain_nodes = n;
    }
    let report = chain_report(args.d, &budget)?;
    let text = match args.format {
        Format::Json => report_json(std::slice::from_ref(&report)),
        Format::Text => {
            let c = &report.congestion;
            let s = &report.spectral;
            let phi = &report.conductance;
            let mut out = String::new();
            let _ = writeln!(out, "d\t{}\nnodes\t{}", report.d, report.node_count);
            let _ = writeln!(out, "stationary_checks\t{}", report.checks.all());
            let _ = writeln!(
                out,
                "layer_stationary\t{}",
                report.layer_stationary.join(" ")
            );
            let _ = writeln!(
                out,
                "rho_layers\t{}\nrho_max\t{}\nrho_below_8d\t{}",
                c.closed_form.join(" "),
                c.rho_max,
                c.rho_max_below_8d
            );
            if let Some(m) = c.direct_matches {
                let _ = writeln!(out, "rho_direct_matches\t{m}");
            }
            let _ = writeln!(
                out,
                "spectral_mode\t{:?}\nlambda2\t{:.12}\ngap\t{:.12}\nlayer_gap\t{:.12}\nmin_eigenvalue\t{:.3e}",
                s.mode, s.lambda2, s.gap, s.layer_gap, s.min_eigenvalue
            );
            let _ = writeln!(
                out,
                "gap_vs_1/(8rho^2)\t{}\ngap_vs_2^-9d^-2\t{}",
                s.meets_congestion_bound, s.meets_inverse_square_bound
            );
            match &phi.exact {
                Some(v) => {
                    let _ = writeln!(out, "conductance\t{v}");
                }
                None => {
                    let _ = writeln!(out, "conductance\t[{}, {}]", phi.lower, phi.upper);
                }
            }
            if let Some(ok) = phi.sandwich {
                let _ = writeln!(out, "sandwich\t{ok}");
            }
            let _ = writeln!(
                out,
                "mixing_time\t[{:.3}, {:.3}]",
                report.mixing.lower, report.mixing.upper
            );
            let _ = writeln!(out, "epsilon_single_leaf\t{}", report.epsilon_single_leaf);
            out
        }
        _ => bail!("analyze-chain output is text or json"),
    };
    emit(args.output.as_deref(), &text)?;
    Ok(EXIT_OK)
}

pub fn cost_model(args: CostModelArgs) -> Result<u8> {
    let text = if args.summary {
        let rows = algorithm_summary();
        match args.format {
            Format::Json => serde_json::to_string_pretty(&rows)? + "\n",
            Format::Text | Format::Tsv => {
                let mut out =
                    "algorithm\tdistance_metric\truntime\toptimality_conditions\n".to_string();
                for r in rows {
                    let _ = writeln!(
                        out,
                        "{}\t{}\t{}\t{}",
                        r.algorithm, r.distance_metric, r.runtime, r.optimality_conditions
                    );
                }
                out
            }
            Format::Fasta => bail!("fasta is not a table format"),
        }
    } else if !args.beta.is_empty() {
        let cells: Vec<_> = args
            .beta
            .iter()
            .flat_map(|&b| regime_table(b, &default_k_classes()))
            .collect();
        match args.format {
            Format::Json => serde_json::to_string_pretty(&cells)? + "\n",
            Format::Text | Format::Tsv => {
                let mut out = "beta\tk_growth\talgorithm\tregime\n".to_string();
                for c in cells {
                    let _ = writeln!(
                        out,
                        "{}\t{:?}\t{}\t{}",
                        c.beta,
                        c.k_growth,
                        c.algorithm,
                        c.regime.label()
                    );
                }
                out
            }
            Format::Fasta => bail!("fasta is not a table format"),
        }
    } else {
        let metric = match args.metric.to_ascii_lowercase().as_str() {
            "hamming" => CostMetric::Hamming,
            "levenshtein" => CostMetric::Levenshtein,
            other => bail!("cost-model metric must be hamming or levenshtein, got {other:?}"),
        };
        let profiles = cost_report(CostParams::new(args.sigma, args.n, args.k, args.d)?, metric)?;
        match args.format {
            Format::Json => report_json(&profiles),
            Format::Tsv => cost_tsv(&profiles),
            Format::Text => {
                let mut out = String::new();
                for p in &profiles {
                    let _ = writeln!(
                        out,
                        "{:<22} log2 = {:>10.3}  {}  [{}]",
                        p.algorithm, p.log2_total, p.runtime, p.optimality
                    );
                }
                out
            }
            Format::Fasta => bail!("fasta is not a table format"),
        }
    };
    emit(args.output.as_deref(), &text)?;
    Ok(EXIT_OK)
}

pub fn grover_sim(args: GroverArgs) -> Result<u8> {
    let marked: BTreeSet<usize> = args.marked.iter().copied().collect();
    let t = match args.iterations {
        Some(t) => t,
        None => grover_optimal_iterations(args.n, marked.len())?,
    };
    let mode = match args.mode {
        GroverModeArg::Statevector => GroverMode::Statevector,
        GroverModeArg::ClosedForm => GroverMode::ClosedForm,
    };
    let run = grover_simulate(args.n, &marked, t, mode)?;
    let text = match args.format {
        Format::Json => serde_json::to_string_pretty(&run)? + "\n",
        Format::Text => format!(
            "N\t{}\nmarked\t{}\niterations\t{}\noracle_queries\t{}\nsuccess_probability\t{:.12}\n",
            run.n, run.marked, run.iterations, run.oracle_queries, run.success_probability
        ),
        _ => bail!("grover-sim output is text or json"),
    };
    emit(args.output.as_deref(), &text)?;
    Ok(EXIT_OK)
}

pub fn gen_instance(args: GenArgs) -> Result<u8> {
    let mut provenance = BTreeMap::new();
    let kind = match args.kind {
        GenKind::Planted => "planted",
        GenKind::Random => "random",
        GenKind::Levenshtein => "levenshtein",
        GenKind::Motif => "motif",
    };
    for (key, value) in [
        ("generator", kind.to_string()),
        ("seed", args.seed.to_string()),
        ("sigma", args.sigma.to_string()),
        ("n", args.n.to_string()),
        ("k", args.k.to_string()),
    ] {
        provenance.insert(key.to_string(), value);
    }
    let file = match args.kind {
        GenKind::Planted => {
            let p = gen_planted_instance(args.sigma, args.n, args.k, args.d, args.seed)?;
            InstanceFile::from_csp(&p.instance, Some(provenance))
        }
        GenKind::Random => InstanceFile::from_csp(
            &gen_random_hamming(args.sigma, args.n, args.k, args.d, args.seed)?,
            Some(provenance),
        ),
        GenKind::Levenshtein => InstanceFile::from_csp(
            &gen_random_levenshtein(args.sigma, args.n, args.k, args.d, args.seed)?,
            Some(provenance),
        ),
        GenKind::Motif => {
            let Some(l) = args.l else {
                bail!("--L is required for motif instances");
            };
            let p = gen_cssp_instance(args.sigma, args.n, args.k, l, args.d, true, args.seed)?;
            InstanceFile::from_cssp(&p.instance, Some(provenance))
        }
    };
    let text = match args.format {
        Format::Json => file.to_json() + "\n",
        Format::Fasta => {
            let records: Vec<FastaRecord> = file
                .seqs()?
                .into_iter()
                .enumerate()
                .map(|(i, seq)| FastaRecord {
                    header: format!("s{}", i + 1),
                    seq,
                })
                .collect();
            fasta_to_string(&records, 60)
        }
        _ => bail!("gen-instance output is json or fasta"),
    };
    emit(args.output.as_deref(), &text)?;
    Ok(EXIT_OK)
}

pub fn bench(args: BenchArgs) -> Result<u8> {
    let algorithms = args
        .algo
        .iter()
        .map(|a| a.parse::<Algorithm>())
        .collect::<closest_core::Result<Vec<_>>>()?;
    let instances = if args.inputs.is_empty() {
        (0..args.count)
            .map(|i| {
                let seed = args.seed.wrapping_add(i as u64);
                let p = gen_planted_instance(args.sigma, args.n, args.k, args.d, seed)?;
                Ok(BenchInstance::csp(format!("planted-{i}"), p.instance))
            })
            .collect::<closest_core::Result<Vec<_>>>()?
    } else {
        args.inputs
            .iter()
            .map(|path| {
                let file = InstanceFile::read(path)?;
                let name = instance_name(path);
                Ok(if file.is_substring_instance() {
                    BenchInstance::cssp(name, file.to_cssp()?)
                } else {
                    BenchInstance::csp(name, file.to_csp()?)
                })
            })
            .collect::<closest_core::Result<Vec<_>>>()?
    };
    let mut plan = BenchPlan::new(algorithms, instances);
    plan.budget = search_budget(args.budget_nodes);
    plan.timings = args.timings;
    plan.threads = args.threads;
    let results = run_benchmark(&plan, args.seed);
    let text = match args.format {
        Format::Json => report_json(&results),
        Format::Text | Format::Tsv => {
            let mut out = "instance\talgorithm\toutcome\tsolution\tverified\n".to_string();
            for r in &results {
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}",
                    r.instance.name,
                    r.algorithm,
                    outcome_name(r.outcome),
                    r.solution.as_deref().unwrap_or("-"),
                    r.verified
                );
            }
            out
        }
        Format::Fasta => bail!("bench output is json or text"),
    };
    emit(args.output.as_deref(), &text)?;
    if results.iter().any(|r| !r.verified) {
        eprintln!("warning: some solutions failed re-verification");
        return Ok(EXIT_INFEASIBLE);
    }
    Ok(EXIT_OK)
}
