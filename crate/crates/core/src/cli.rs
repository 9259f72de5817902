//! The `hyperchrome` command line.
//!
//! Exit codes: 0 on success or a passing verification, 1 when a verification
//! finds a counterexample, 2 for unreadable input, invalid flags, or a
//! hypergraph over the edge cap.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::chromatic::{count_proper_colorings, expand_broken_cycle, expand_subsets, Expansion};
use crate::cycles::CycleIndex;
use crate::error::{Error, Result};
use crate::format::read_hypergraph;
use crate::generalized::{
    chromatic_term, verify_generalized_theorem, BrokenCycleSelection, Integers, Polynomials,
    SignedComponentWeight, TheoremOutcome,
};
use crate::hypergraph::{
    ensure_within_cap, spanning_component_count, EdgeId, EdgeOrder, EdgeSubset, Hypergraph,
};
use crate::polynomial::Polynomial;
use crate::random;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "hyperchrome",
    version,
    about = "Chromatic polynomials of hypergraphs via δ-cycles and broken cycles"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Number of connected components of the spanning subgraph (V, A).
    Components {
        file: PathBuf,
        /// Comma-separated edge indices; defaults to all edges.
        #[arg(long)]
        subset: Option<String>,
    },
    /// List all δ-cycles.
    DeltaCycles {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// List all broken cycles under an edge order.
    BrokenCycles {
        file: PathBuf,
        /// Edge indices from smallest to largest, comma-separated.
        #[arg(long)]
        order: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Compute the chromatic polynomial, or count colorings with `oracle`.
    Chromatic {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::BrokenCycle)]
        method: Method,
        #[arg(long)]
        order: Option<String>,
        /// Largest color count for the oracle table; defaults to |V|.
        #[arg(long)]
        max_k: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Cross-check all methods and run randomized pruned-sum trials.
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 100)]
        trials: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Time one expansion and report how many subset terms were summed.
    Bench {
        #[arg(required_unless_present = "random", conflicts_with = "random")]
        file: Option<PathBuf>,
        /// Generate a hypergraph instead: vertex count, edge count, seed.
        #[arg(long, num_args = 3, value_names = ["N", "M", "SEED"])]
        random: Option<Vec<u64>>,
        #[arg(long)]
        order: Option<String>,
        #[arg(long, value_enum, default_value_t = Method::BrokenCycle)]
        method: Method,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Oracle,
    Subset,
    BrokenCycle,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::Subset => "subset",
            Method::BrokenCycle => "broken-cycle",
        }
    }
}

#[derive(Debug, Serialize)]
pub struct TermCounts {
    pub total: u64,
    pub admissible: u64,
}

/// One timed expansion, as printed by `bench`.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub input_digest: String,
    pub method: String,
    pub polynomial: Vec<String>,
    pub term_counts: TermCounts,
    pub elapsed: f64,
}

/// Parses `args` (program name first), runs the command, and returns the
/// exit code. Normal output goes to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Components { file, subset } => {
            let g = read_hypergraph(&file)?;
            let a = match subset {
                Some(list) => parse_subset(&g, &list)?,
                None => g.all_edges(),
            };
            emit(out, &spanning_component_count(&g, a).to_string())?;
        }
        Command::DeltaCycles { file, json } => {
            let g = read_hypergraph(&file)?;
            let index = CycleIndex::new(&g)?;
            let listing: Vec<Vec<EdgeId>> = index
                .cycles()
                .iter()
                .map(|c| c.edges().iter().collect())
                .collect();
            print_edge_sets(out, &g, &listing, json)?;
        }
        Command::BrokenCycles { file, order, json } => {
            let g = read_hypergraph(&file)?;
            let order = parse_order(&g, order.as_deref())?;
            let index = CycleIndex::new(&g)?;
            let listing: Vec<Vec<EdgeId>> = index
                .broken_cycles(&order)
                .iter()
                .map(|b| order.sorted(b.edges()))
                .collect();
            print_edge_sets(out, &g, &listing, json)?;
        }
        Command::Chromatic {
            file,
            method,
            order,
            max_k,
            json,
        } => {
            let g = read_hypergraph(&file)?;
            match method {
                Method::Oracle => {
                    let max_k = max_k.unwrap_or(g.vertex_count() as u64);
                    print_oracle_table(out, &g, max_k, json)?;
                }
                Method::Subset | Method::BrokenCycle => {
                    let order = parse_order(&g, order.as_deref())?;
                    let expansion = expand(&g, &order, method)?;
                    print_polynomial(out, &expansion.polynomial, json)?;
                }
            }
        }
        Command::Verify { file, trials, seed } => {
            let g = read_hypergraph(&file)?;
            return verify(out, &g, trials, seed);
        }
        Command::Bench {
            file,
            random,
            order,
            method,
        } => {
            let g = match (file, random) {
                (Some(file), _) => read_hypergraph(&file)?,
                (None, Some(spec)) => {
                    let (n, m, seed) = (spec[0] as usize, spec[1] as usize, spec[2]);
                    if n == 0 && m > 0 {
                        return Err(Error::Usage("random edges need at least one vertex".into()));
                    }
                    random::random_hypergraph(&mut random::seeded(seed), n, m)
                }
                (None, None) => unreachable!("clap requires a file or --random"),
            };
            let order = parse_order(&g, order.as_deref())?;
            let report = bench(&g, &order, method)?;
            emit(out, &to_json(&report))?;
        }
    }
    Ok(EXIT_OK)
}

fn emit(out: &mut dyn Write, line: &str) -> Result<()> {
    writeln!(out, "{line}").map_err(|e| Error::Usage(format!("cannot write output: {e}")))
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report types serialize")
}

fn parse_indices(list: &str) -> Result<Vec<usize>> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| Error::InvalidSubset(format!("bad edge index {s:?}")))
        })
        .collect()
}

fn parse_subset(g: &Hypergraph, list: &str) -> Result<EdgeSubset> {
    let ids = parse_indices(list)?;
    if let Some(bad) = ids.iter().find(|&&e| e >= g.edge_count()) {
        return Err(Error::InvalidSubset(format!(
            "edge index {bad} out of range (hypergraph has {} edges)",
            g.edge_count()
        )));
    }
    Ok(EdgeSubset::from_ids(ids))
}

/// `--order` lists edge indices from smallest to largest; the default is the
/// file listing order.
fn parse_order(g: &Hypergraph, list: Option<&str>) -> Result<EdgeOrder> {
    match list {
        None => Ok(EdgeOrder::listing(g.edge_count())),
        Some(list) => {
            let sequence = parse_indices(list).map_err(|e| Error::InvalidOrder(e.to_string()))?;
            EdgeOrder::from_sequence(g.edge_count(), &sequence)
        }
    }
}

fn edge_set_text(g: &Hypergraph, edges: &[EdgeId]) -> String {
    let ids: Vec<String> = edges.iter().map(|e| e.0.to_string()).collect();
    let sets: Vec<String> = edges
        .iter()
        .map(|&e| {
            let labels: Vec<String> = g.edge(e).iter().map(|&v| g.label(v)).collect();
            format!("{{{}}}", labels.join(","))
        })
        .collect();
    format!("{{{}}} = {{{}}}", ids.join(","), sets.join(","))
}

#[derive(Serialize)]
struct EdgeSetJson {
    edges: Vec<usize>,
    vertex_sets: Vec<Vec<String>>,
}

fn print_edge_sets(
    out: &mut dyn Write,
    g: &Hypergraph,
    listing: &[Vec<EdgeId>],
    json: bool,
) -> Result<()> {
    if json {
        let items: Vec<EdgeSetJson> = listing
            .iter()
            .map(|edges| EdgeSetJson {
                edges: edges.iter().map(|e| e.0).collect(),
                vertex_sets: edges
                    .iter()
                    .map(|&e| g.edge(e).iter().map(|&v| g.label(v)).collect())
                    .collect(),
            })
            .collect();
        return emit(out, &to_json(&items));
    }
    for edges in listing {
        emit(out, &edge_set_text(g, edges))?;
    }
    Ok(())
}

#[derive(Serialize)]
struct PolynomialJson {
    polynomial: Vec<String>,
}

fn print_polynomial(out: &mut dyn Write, p: &Polynomial, json: bool) -> Result<()> {
    if json {
        emit(
            out,
            &to_json(&PolynomialJson {
                polynomial: p.to_decimal_strings(),
            }),
        )
    } else {
        emit(out, &p.to_string())
    }
}

#[derive(Serialize)]
struct CountJson {
    k: u64,
    count: String,
}

fn print_oracle_table(out: &mut dyn Write, g: &Hypergraph, max_k: u64, json: bool) -> Result<()> {
    let counts = (0..=max_k)
        .map(|k| count_proper_colorings(g, k).map(|c| (k, c)))
        .collect::<Result<Vec<_>>>()?;
    if json {
        let items: Vec<CountJson> = counts
            .iter()
            .map(|&(k, count)| CountJson {
                k,
                count: count.to_string(),
            })
            .collect();
        return emit(out, &to_json(&serde_json::json!({ "counts": items })));
    }
    for (k, count) in counts {
        emit(out, &format!("{k:>4} {count}"))?;
    }
    Ok(())
}

fn expand(g: &Hypergraph, order: &EdgeOrder, method: Method) -> Result<Expansion> {
    match method {
        Method::Subset => expand_subsets(g),
        Method::BrokenCycle => expand_broken_cycle(g, order),
        Method::Oracle => Err(Error::Usage(
            "the oracle method has no subset expansion".into(),
        )),
    }
}

/// SHA-256 of a canonical rendering of the hypergraph.
pub fn input_digest(g: &Hypergraph) -> String {
    let mut hasher = Sha256::new();
    match g.vertex_labels() {
        Some(labels) => hasher.update(format!("vertices: {}\n", labels.join(" "))),
        None => hasher.update(format!("vertices: {}\n", g.vertex_count())),
    }
    for (_, members) in g.edges() {
        let ids: Vec<String> = members.iter().map(ToString::to_string).collect();
        hasher.update(ids.join(" "));
        hasher.update("\n");
    }
    hex::encode(hasher.finalize())
}

/// Runs one expansion and records its term counts and wall time.
fn bench(g: &Hypergraph, order: &EdgeOrder, method: Method) -> Result<RunReport> {
    let started = Instant::now();
    let expansion = expand(g, order, method)?;
    let elapsed = started.elapsed().as_secs_f64() * 1e3;
    Ok(RunReport {
        input_digest: input_digest(g),
        method: method.name().into(),
        polynomial: expansion.polynomial.to_decimal_strings(),
        term_counts: TermCounts {
            total: expansion.total_terms,
            admissible: expansion.admissible_terms,
        },
        elapsed,
    })
}

fn verify(out: &mut dyn Write, g: &Hypergraph, trials: u32, seed: u64) -> Result<i32> {
    ensure_within_cap(g)?;
    let full = expand_subsets(g)?.polynomial;
    let n = g.vertex_count();

    let mut oracle_checked = 0;
    for k in 0..=n as u64 {
        let count = match count_proper_colorings(g, k) {
            Ok(count) => count,
            Err(Error::ColoringBudgetExceeded { .. }) => break,
            Err(e) => return Err(e),
        };
        let value = full.evaluate(&BigInt::from(k));
        if value != BigInt::from(count) {
            emit(
                out,
                &format!("FAIL oracle: k={k}: {count} colorings, expansion gives {value}"),
            )?;
            return Ok(EXIT_FAILED);
        }
        oracle_checked += 1;
    }
    emit(
        out,
        &format!("ok   oracle agrees with subset expansion for {oracle_checked} values of k"),
    )?;

    let listing = EdgeOrder::listing(g.edge_count());
    let pruned = expand_broken_cycle(g, &listing)?.polynomial;
    if pruned != full {
        emit(
            out,
            &format!("FAIL broken-cycle (listing order): {pruned} != {full}"),
        )?;
        return Ok(EXIT_FAILED);
    }
    emit(
        out,
        &format!("ok   broken-cycle expansion equals subset expansion: {full}"),
    )?;

    let index = CycleIndex::new(g)?;
    let mut rng = random::seeded(seed);
    for trial in 0..trials {
        let order = random::random_order(&mut rng, g.edge_count());
        let all = index.broken_cycles(&order);
        let selection = BrokenCycleSelection::from_known(
            &all,
            &order,
            random::random_selection(&mut rng, &all),
        )?;
        let order_text = sequence_text(&order);

        let theorem_one = BrokenCycleSelection::from_known(&all, &order, all.clone())?;
        let outcome =
            verify_generalized_theorem(g, &order, &Polynomials, &chromatic_term, &theorem_one)?;
        if let Some(line) = failure_line(trial, "chromatic terms", &order_text, &outcome) {
            emit(out, &line)?;
            return Ok(EXIT_FAILED);
        }

        let ints = SignedComponentWeight::new(random::random_integer_weights(&mut rng, n));
        let outcome = verify_generalized_theorem(g, &order, &Integers, &ints, &selection)?;
        if let Some(line) = failure_line(trial, "integer weights", &order_text, &outcome) {
            emit(out, &line)?;
            return Ok(EXIT_FAILED);
        }

        let polys = SignedComponentWeight::new(random::random_polynomial_weights(&mut rng, n));
        let outcome = verify_generalized_theorem(g, &order, &Polynomials, &polys, &selection)?;
        if let Some(line) = failure_line(trial, "polynomial weights", &order_text, &outcome) {
            emit(out, &line)?;
            return Ok(EXIT_FAILED);
        }
    }
    emit(
        out,
        &format!("ok   {trials} randomized pruned-sum trials (seed {seed})"),
    )?;
    emit(out, "PASS")?;
    Ok(EXIT_OK)
}

fn sequence_text(order: &EdgeOrder) -> String {
    let ids: Vec<String> = order.sequence().iter().map(|e| e.0.to_string()).collect();
    ids.join(",")
}

fn failure_line<E: std::fmt::Debug>(
    trial: u32,
    family: &str,
    order: &str,
    outcome: &TheoremOutcome<E>,
) -> Option<String> {
    match outcome {
        TheoremOutcome::Checked { holds: true, .. } => None,
        TheoremOutcome::Checked { full, pruned, .. } => Some(format!(
            "FAIL trial {trial} ({family}, order {order}): full sum {full:?} != pruned sum {pruned:?}"
        )),
        TheoremOutcome::HypothesisViolated(v) => Some(format!(
            "FAIL trial {trial} ({family}, order {order}): sign-flip condition fails at A = {}, e = {}",
            v.subset, v.edge
        )),
    }
}
