//! Batch command-line front end: transition matrices, eigenbases, stationary
//! distributions, lumping and reversibility checks, named eigenfunction
//! tables, Monte-Carlo simulation, and the verification suite.
//!
//! Exit codes: 0 success, 2 validation failure (unknown algebra, invalid
//! state basis, oversized degree, bad arguments), 1 internal error.

use clap::{Args, Parser, Subcommand};
use hopfchain::chain::{absorption_probability, check_lumping, time_reversal, Chain, ChainError};
use hopfchain::hopf::{
    eigenbasis_cocommutative, eigenbasis_commutative, eigenbasis_free_basis,
    eigenbasis_shuffle_basis, Degree, DualAlgebra, EigVector, Generator, HopfAlgebra, LetterSpec,
};
use hopfchain::instances::{get_instance, ForestAlgebra, GraphAlgebra};
use hopfchain::keys::{BasisKey, Forest, GraphKey, Partition, Tree};
use hopfchain::matrix::ExactMatrix;
use hopfchain::named::{expected_descents_from_ascending, expected_peaks_from_ascending, tree_fc};
use hopfchain::rational::Rational;
use hopfchain::simulate::{expectation_test, SimChain, Statistic, TrialReport};
use hopfchain::tables::{
    chain_table_order, render_grid, render_qsym_left, render_qsym_right, render_rock_left,
    render_rock_right, render_stationary, render_transition_matrix,
};
use hopfchain::words::{descent_composition, descents, peaks, Word};
use hopfchain::KeyComb;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "hopfchain", version, about = "Exact Hopf-power Markov chains")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct ChainArgs {
    /// Algebra instance: shuffle, free_assoc, sym_h, sym_schur, sym_p,
    /// graphs, ck_forests, qsym_F.
    #[arg(long)]
    algebra: String,
    /// Plain degree of the state space.
    #[arg(long)]
    n: Option<usize>,
    /// Multidegree (comma-separated letter counts), e.g. "1,1,1".
    #[arg(long)]
    multidegree: Option<String>,
    /// Hopf power.
    #[arg(long, default_value_t = 2)]
    a: usize,
}

#[derive(Args, Clone)]
struct OutputArgs {
    /// Output path (stdout when omitted).
    #[arg(long)]
    out: Option<String>,
    /// Output format.
    #[arg(long, default_value = "tsv")]
    format: String,
}

#[derive(Subcommand)]
enum Command {
    /// Print the exact transition matrix.
    Matrix {
        #[command(flatten)]
        chain: ChainArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print an eigenfunction table (sym_h, qsym_F) or an eigenvector dump.
    Eigenbasis {
        #[command(flatten)]
        chain: ChainArgs,
        /// left or right.
        #[arg(long, default_value = "right")]
        side: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print the stationary distribution(s).
    Stationary {
        #[command(flatten)]
        chain: ChainArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check the descent-map projection of distinct-card shuffling.
    LumpCheck {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        a: usize,
    },
    /// Print the time-reversal transition matrix.
    Reverse {
        #[command(flatten)]
        chain: ChainArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Named eigenfunction tables for the worked chains.
    Named {
        #[command(flatten)]
        chain: ChainArgs,
        /// left or right.
        #[arg(long, default_value = "right")]
        side: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Monte-Carlo simulation of one named chain.
    Simulate {
        /// riffle, rock, graph, or tree.
        #[arg(long)]
        chain: String,
        /// Deck size (riffle) or starting rock size (rock).
        #[arg(long)]
        n: Option<usize>,
        /// Explicit start state (word/partition/graph/forest syntax).
        #[arg(long)]
        start: Option<String>,
        #[arg(long, default_value_t = 2)]
        a: usize,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value_t = 10000)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Statistic: descents, peaks, pattern:<word>, binom:<j>, edges,
        /// fc:<tree>.
        #[arg(long, default_value = "descents")]
        stat: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run the invariant battery.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
    },
    /// One-step absorption probability from a state.
    Absorption {
        #[command(flatten)]
        chain: ChainArgs,
        /// Starting state, in the algebra's text syntax.
        #[arg(long)]
        start: String,
    },
}

/// Validation failure (exit 2) as distinct from an internal error (exit 1).
struct Invalid(String);

fn max_basis_cap() -> usize {
    std::env::var("HOPFCHAIN_MAX_BASIS").ok().and_then(|v| v.parse().ok()).unwrap_or(5000)
}

fn parse_degree(args: &ChainArgs) -> Result<Degree, Invalid> {
    match (&args.n, &args.multidegree) {
        (Some(n), None) => Ok(Degree::Plain(*n)),
        (None, Some(m)) => {
            let nu: Result<Vec<usize>, _> = m.split(',').map(|t| t.trim().parse()).collect();
            Ok(Degree::Multi(nu.map_err(|_| Invalid(format!("bad multidegree {m:?}")))?))
        }
        _ => Err(Invalid("exactly one of --n and --multidegree is required".into())),
    }
}

fn build_chain(args: &ChainArgs) -> Result<Chain, Invalid> {
    let alg = get_instance(&args.algebra).map_err(|e| Invalid(e.to_string()))?;
    let degree = parse_degree(args)?;
    let size = alg.basis_of(&degree).map_err(|e| Invalid(e.to_string()))?.len();
    let cap = max_basis_cap();
    if size > cap {
        return Err(Invalid(format!(
            "state space has {size} elements, over the cap {cap} (set HOPFCHAIN_MAX_BASIS to override)"
        )));
    }
    Chain::new(alg, args.a, degree).map_err(|e| match e {
        ChainError::InvalidStateBasis { .. } | ChainError::PowerTooSmall(_) => {
            Invalid(e.to_string())
        }
        other => Invalid(other.to_string()),
    })
}

fn emit(output: &OutputArgs, text: String) -> Result<(), String> {
    match &output.out {
        Some(path) => std::fs::write(path, text).map_err(|e| e.to_string()),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn matrix_to_json(m: &ExactMatrix, order: &[BasisKey]) -> serde_json::Value {
    let labels: Vec<String> = order.iter().map(|k| k.to_string()).collect();
    let rows: Vec<Vec<String>> = order
        .iter()
        .map(|x| order.iter().map(|y| m.entry(x, y).unwrap().to_string()).collect())
        .collect();
    serde_json::json!({ "basis": labels, "rows": rows })
}

fn parse_start(algebra: &str, s: &str) -> Result<BasisKey, Invalid> {
    let key = match algebra {
        "shuffle" | "free_assoc" => BasisKey::Word(s.parse::<Word>().map_err(Invalid)?),
        "sym_h" | "sym_p" => BasisKey::Partition(s.parse::<Partition>().map_err(Invalid)?),
        "sym_schur" => BasisKey::Schur(s.parse::<Partition>().map_err(Invalid)?),
        "qsym_F" => BasisKey::Composition(s.parse().map_err(Invalid)?),
        "graphs" => BasisKey::Graph(s.parse::<GraphKey>().map_err(Invalid)?),
        "ck_forests" => BasisKey::Forest(s.parse::<Forest>().map_err(Invalid)?),
        other => return Err(Invalid(format!("unknown algebra {other:?}"))),
    };
    Ok(key)
}

fn eigenvector_dump(vectors: &[EigVector]) -> String {
    let mut out = String::new();
    for v in vectors {
        out.push_str(&format!("eigenvector\t{}\texponent\t{}\n", v.label, v.exponent));
        for (k, c) in v.vector.iter() {
            out.push_str(&format!("{k}\t{c}\n"));
        }
    }
    out
}

fn generic_eigenbasis(chain: &Chain, side: &str) -> Result<Vec<EigVector>, Invalid> {
    let alg = chain.algebra.clone();
    let left = side == "left";
    let fail = |e: hopfchain::hopf::HopfError| Invalid(e.to_string());
    match alg.name() {
        "shuffle" => {
            let Degree::Multi(nu) = &chain.degree else {
                return Err(Invalid("shuffle needs --multidegree".into()));
            };
            let word_key = |w: &Word| KeyComb::singleton(BasisKey::Word(w.clone()));
            let letters: Vec<(u32, usize)> = (1..=nu.len() as u32).map(|l| (l, 1)).collect();
            let spec = LetterSpec { letters, word_element: &word_key };
            if left {
                eigenbasis_shuffle_basis(alg.as_ref(), &spec, &chain.degree, false).map_err(fail)
            } else {
                let fa = get_instance("free_assoc").unwrap();
                eigenbasis_free_basis(fa.as_ref(), &spec, &chain.degree, false).map_err(fail)
            }
        }
        "graphs" | "ck_forests" => {
            let n = chain.n();
            let mut gens = Vec::new();
            for d in 1..=n {
                if alg.name() == "graphs" {
                    for g in GraphAlgebra::connected_graphs(d) {
                        gens.push(Generator::from_key(BasisKey::Graph(g)));
                    }
                } else {
                    for t in ForestAlgebra::trees(d) {
                        gens.push(Generator::from_key(BasisKey::Forest(Forest::single(t))));
                    }
                }
            }
            if left {
                eigenbasis_commutative(alg.as_ref(), &gens, n, false).map_err(fail)
            } else {
                let dual = DualAlgebra::new(alg.clone());
                eigenbasis_cocommutative(dual.as_ref() as &dyn HopfAlgebra, &gens, n, false)
                    .map_err(fail)
            }
        }
        other => Err(Invalid(format!("no eigenbasis output for {other:?}"))),
    }
}

fn run(cli: Cli) -> Result<(), ExitCode> {
    let invalid = |Invalid(msg): Invalid| {
        eprintln!("error: {msg}");
        ExitCode::from(2)
    };
    let internal = |msg: String| {
        eprintln!("internal error: {msg}");
        ExitCode::from(1)
    };
    match cli.command {
        Command::Matrix { chain, output } => {
            let c = build_chain(&chain).map_err(invalid)?;
            let text = if output.format == "json" {
                let m = c.transition_matrix().map_err(|e| internal(e.to_string()))?;
                let order = chain_table_order(&c);
                format!("{}\n", matrix_to_json(&m, &order))
            } else {
                render_transition_matrix(&c).map_err(|e| internal(e.to_string()))?
            };
            emit(&output, text).map_err(internal)?;
        }
        Command::Eigenbasis { chain, side, output } | Command::Named { chain, side, output } => {
            if side != "left" && side != "right" {
                return Err(invalid(Invalid(format!("bad side {side:?}"))));
            }
            let c = build_chain(&chain).map_err(invalid)?;
            let n = c.n();
            let text = match c.algebra.name() {
                "sym_h" => {
                    if side == "right" {
                        render_rock_right(n)
                    } else {
                        render_rock_left(n)
                    }
                }
                "qsym_F" => {
                    if side == "right" {
                        render_qsym_right(n)
                    } else {
                        render_qsym_left(n)
                    }
                }
                _ => {
                    let vectors = generic_eigenbasis(&c, &side).map_err(invalid)?;
                    eigenvector_dump(&vectors)
                }
            };
            emit(&output, text).map_err(internal)?;
        }
        Command::Stationary { chain, output } => {
            let c = build_chain(&chain).map_err(invalid)?;
            let text = render_stationary(&c).map_err(|e| internal(e.to_string()))?;
            emit(&output, text).map_err(internal)?;
        }
        Command::LumpCheck { n, a } => {
            let source = build_chain(&ChainArgs {
                algebra: "shuffle".into(),
                n: None,
                multidegree: Some(vec!["1"; n].join(",")),
                a,
            })
            .map_err(invalid)?;
            let target = build_chain(&ChainArgs {
                algebra: "qsym_F".into(),
                n: Some(n),
                multidegree: None,
                a,
            })
            .map_err(invalid)?;
            let theta = |x: &BasisKey| BasisKey::Composition(descent_composition(x.as_word()));
            let report = check_lumping(&theta, &source, &target)
                .map_err(|e| internal(e.to_string()))?;
            println!(
                "dynkin\t{}\nmax_violation\t{}",
                if report.dynkin_holds { "pass" } else { "fail" },
                report.max_violation
            );
            if !report.dynkin_holds {
                return Err(ExitCode::from(1));
            }
        }
        Command::Reverse { chain, output } => {
            let c = build_chain(&chain).map_err(invalid)?;
            let m = time_reversal(&c).map_err(|e| invalid(Invalid(e.to_string())))?;
            let order = chain_table_order(&c);
            let text = if output.format == "json" {
                format!("{}\n", matrix_to_json(&m, &order))
            } else {
                let labels: Vec<String> = order.iter().map(|k| k.to_string()).collect();
                let entries: Vec<Vec<Rational>> = order
                    .iter()
                    .map(|x| order.iter().map(|y| m.entry(x, y).unwrap().clone()).collect())
                    .collect();
                render_grid("state", &labels, &labels, &entries)
            };
            emit(&output, text).map_err(internal)?;
        }
        Command::Simulate { chain, n, start, a, m, trials, seed, stat, output } => {
            let (sim, stat) = build_simulation(&chain, n, start, a, &stat).map_err(invalid)?;
            let report: TrialReport = expectation_test(&sim, a, m, &stat, trials, seed);
            let text = if output.format == "json" {
                format!(
                    "{}\n",
                    serde_json::json!({
                        "statistic": report.statistic,
                        "m": report.m,
                        "trials": report.trials,
                        "empirical_mean": report.empirical_mean,
                        "exact": report.exact_prediction.to_string(),
                        "stderr": report.standard_error,
                        "z": report.z_score,
                    })
                )
            } else {
                format!("{}\n{}\n", TrialReport::TSV_HEADER, report.tsv_row())
            };
            emit(&output, text).map_err(internal)?;
        }
        Command::Verify { suite, max_degree } => {
            if suite != "all" {
                return Err(invalid(Invalid(format!("unknown suite {suite:?}"))));
            }
            let results = hopfchain::verify::run_suite(max_degree);
            let mut failed = 0;
            for r in &results {
                println!("{}\t{}{}", if r.passed { "pass" } else { "FAIL" }, r.name, if r.detail.is_empty() { String::new() } else { format!("\t{}", r.detail) });
                if !r.passed {
                    failed += 1;
                }
            }
            println!("total\t{}\tfailed\t{failed}", results.len());
            if failed > 0 {
                return Err(ExitCode::from(1));
            }
        }
        Command::Absorption { chain, start } => {
            let c = build_chain(&chain).map_err(invalid)?;
            let key = parse_start(&chain.algebra, &start).map_err(invalid)?;
            let p = absorption_probability(&c, &key)
                .map_err(|e| invalid(Invalid(e.to_string())))?;
            println!("absorption\t{key}\t{p}");
        }
    }
    Ok(())
}

fn build_simulation(
    chain: &str,
    n: Option<usize>,
    start: Option<String>,
    a: usize,
    stat: &str,
) -> Result<(SimChain, Statistic), Invalid> {
    match chain {
        "riffle" => {
            let deck = match (&start, n) {
                (Some(s), _) => s.parse::<Word>().map_err(Invalid)?,
                (None, Some(n)) => Word::new((1..=n as u32).collect()),
                _ => return Err(Invalid("riffle needs --n or --start".into())),
            };
            let nlen = deck.len();
            let statistic = match stat {
                "descents" => Statistic {
                    name: format!("descents(n={nlen},a={a})"),
                    eval: Box::new(|key| descents(key.as_word()) as f64),
                    prediction: Box::new(move |m| expected_descents_from_ascending(nlen, a, m)),
                },
                "peaks" => Statistic {
                    name: format!("peaks(n={nlen},a={a})"),
                    eval: Box::new(|key| peaks(key.as_word()) as f64),
                    prediction: Box::new(move |m| expected_peaks_from_ascending(nlen, a, m)),
                },
                other if other.starts_with("pattern:") => {
                    let u: Word = other["pattern:".len()..].parse().map_err(Invalid)?;
                    let f0 = hopfchain::named::shuffle_statistic_eigenfunction(
                        &hopfchain::named::ShuffleStatistic::Pattern(u.clone()),
                        &deck,
                    );
                    let ulen = u.len();
                    let u2 = u.clone();
                    Statistic {
                        name: format!("pattern{u}"),
                        eval: Box::new(move |key| {
                            hopfchain::named::shuffle_statistic_eigenfunction(
                                &hopfchain::named::ShuffleStatistic::Pattern(u2.clone()),
                                key.as_word(),
                            )
                            .to_f64()
                        }),
                        prediction: Box::new(move |m| {
                            &Rational::from_int(a as i64)
                                .pow((1 - ulen as i64) * m as i64)
                                * &f0
                        }),
                    }
                }
                other => return Err(Invalid(format!("unknown riffle statistic {other:?}"))),
            };
            // Predictions for descents/peaks assume the ascending start.
            if matches!(stat, "descents" | "peaks") && start.is_some() {
                let sorted = deck.letters().windows(2).all(|p| p[0] < p[1]);
                if !sorted {
                    return Err(Invalid(
                        "descents/peaks predictions need an ascending start".into(),
                    ));
                }
            }
            Ok((SimChain::Riffle { start: deck }, statistic))
        }
        "rock" => {
            let lambda: Partition = match (&start, n) {
                (Some(s), _) => s.parse().map_err(Invalid)?,
                (None, Some(n)) => Partition::new(vec![n as u32]),
                _ => return Err(Invalid("rock needs --n or --start".into())),
            };
            let j: usize = if let Some(rest) = stat.strip_prefix("binom:") {
                rest.parse().map_err(|_| Invalid(format!("bad statistic {stat:?}")))?
            } else {
                return Err(Invalid(format!("unknown rock statistic {stat:?}")));
            };
            let f0: Rational = lambda
                .parts()
                .iter()
                .map(|&p| Rational::from_bigint(hopfchain::rational::binomial(p as usize, j)))
                .sum();
            let statistic = Statistic {
                name: format!("rock binom {j}"),
                eval: Box::new(move |key| {
                    key.as_partition()
                        .parts()
                        .iter()
                        .map(|&p| {
                            let mut acc = 1.0;
                            for i in 0..j {
                                if (p as usize) < i + 1 {
                                    acc = 0.0;
                                    break;
                                }
                                acc = acc * (p as usize - i) as f64 / (i + 1) as f64;
                            }
                            if (p as usize) < j {
                                0.0
                            } else {
                                acc
                            }
                        })
                        .sum()
                }),
                prediction: Box::new(move |m| {
                    &Rational::from_int(a as i64).pow((1 - j as i64) * m as i64) * &f0
                }),
            };
            Ok((SimChain::Rock { start: lambda }, statistic))
        }
        "graph" => {
            let g: GraphKey = start
                .as_deref()
                .ok_or_else(|| Invalid("graph needs --start".into()))?
                .parse()
                .map_err(Invalid)?;
            if stat != "edges" {
                return Err(Invalid(format!("unknown graph statistic {stat:?}")));
            }
            let e0 = Rational::from_int(g.num_edges() as i64);
            let statistic = Statistic {
                name: "edges".into(),
                eval: Box::new(|key| key.as_graph().num_edges() as f64),
                prediction: Box::new(move |m| {
                    &Rational::from_int(a as i64).pow(-(m as i64)) * &e0
                }),
            };
            Ok((SimChain::Graph { start: g }, statistic))
        }
        "tree" => {
            let f: Forest = start
                .as_deref()
                .ok_or_else(|| Invalid("tree needs --start".into()))?
                .parse()
                .map_err(Invalid)?;
            let c: Tree = if let Some(rest) = stat.strip_prefix("fc:") {
                let cf: Forest = rest.parse().map_err(Invalid)?;
                if cf.num_trees() != 1 {
                    return Err(Invalid("fc: statistic needs a single tree".into()));
                }
                cf.trees()[0].clone()
            } else {
                return Err(Invalid(format!("unknown tree statistic {stat:?}")));
            };
            let f0 = tree_fc(&c, &f);
            let degc = c.degree();
            let c2 = c.clone();
            let statistic = Statistic {
                name: format!("f_{c}"),
                eval: Box::new(move |key| tree_fc(&c2, key.as_forest()).to_f64()),
                prediction: Box::new(move |m| {
                    &Rational::from_int(a as i64).pow((1 - degc as i64) * m as i64) * &f0
                }),
            };
            Ok((SimChain::Tree { start: f }, statistic))
        }
        other => Err(Invalid(format!("unknown chain {other:?}"))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(code) => code,
    }
}
