//! Command dispatch for the `achroma` binary.
//!
//! Every subcommand reads graph and colouring files in the [`crate::format`]
//! text formats and produces a [`RunReport`]; `--json` prints the report's
//! JSON form, otherwise its text rendering (generators print the graph file
//! itself, so their output pipes back in). Exit codes: 0 the value was
//! computed or the property holds, 1 the answer is "no" or a harness suite
//! was violated, 2 usage or parse errors, 3 node budget exhausted. Timing
//! goes to stderr only, keeping reports byte-identical for fixed inputs.

use crate::colouring::{classify_edge, is_complete, is_inferred_complete, is_proper, reduce, Colouring};
use crate::error::{Error, Result};
use crate::families::{
    gen_elementary_drop, gen_interpolation, gen_irreducible_large, gen_np_reduction,
    gen_perfect_counterexample, gen_remove_edge_lower, gen_remove_edge_upper, gen_remove_vertex,
    gen_resign_edge, irreducible_claimed_psi, FamilyInstance, Operation,
};
use crate::format::{parse_colouring, parse_graph, serialize_graph, ColouringFile};
use crate::formulas::{psi_complete, psi_cycle, psi_path, CompleteVariant};
use crate::graph::{kstar_size, Parity, Sign, SignedGraph};
use crate::harness::check_harness;
use crate::report::RunReport;
use crate::solver::{self, witness_subgraph, SearchOptions};
use crate::switching::are_equivalent;
use clap::{Parser, Subcommand};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(name = "achroma", version, about = "Achromatic and chromatic numbers of signed graphs")]
struct Cli {
    /// Print the structured JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Abort searches after this many nodes (exit code 3).
    #[arg(long, global = true, value_name = "B")]
    node_budget: Option<u64>,
    /// Worker threads for the top-level search fan-out.
    #[arg(long, global = true, default_value_t = 1, value_name = "W")]
    workers: usize,
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 42, value_name = "S")]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact achromatic number of a signed graph file.
    Psi { file: PathBuf },
    /// Exact chromatic number of a signed graph file.
    Chi { file: PathBuf },
    /// Check a colouring file against a graph; exit 1 unless complete.
    Verify {
        file: PathBuf,
        colouring: PathBuf,
        /// Expect inferred magnitude+flag tokens ("2-", "0+").
        #[arg(long)]
        inferred: bool,
    },
    /// Reduction multigraph of a proper colouring: one vertex per magnitude,
    /// one edge per realized type.
    Reduce { file: PathBuf, colouring: PathBuf },
    /// Decide switching equivalence of two signed graph files.
    Equiv { file1: PathBuf, file2: PathBuf },
    /// Print a named family instance as a graph file.
    Gen {
        family: String,
        params: Vec<String>,
    },
    /// Extract a small vertex set whose induced subgraph keeps the given
    /// complete colouring complete.
    Witness { file: PathBuf, colouring: PathBuf },
    /// Run the randomized theorem-checking harness.
    Check {
        /// Largest random graph order.
        #[arg(long, default_value_t = 6, value_name = "N")]
        max_n: usize,
        /// Number of random graphs per stream.
        #[arg(long, default_value_t = 300, value_name = "T")]
        trials: u64,
    },
    /// Closed-form values: path <n>, cycle <n> <balanced|unbalanced>,
    /// clique <n> <positive|negative|minus-matching <size>>.
    Formula {
        shape: String,
        params: Vec<String>,
    },
}

struct Output {
    report: RunReport,
    exit: i32,
    /// Raw stdout override for text mode; generators print graph files.
    raw: Option<String>,
}

impl Output {
    fn done(report: RunReport) -> Output {
        Output { report, exit: 0, raw: None }
    }
}

/// Parses the process arguments, runs one command, prints the report and
/// returns the exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let start = std::time::Instant::now();
    let json = cli.json;
    let code = match dispatch(cli) {
        Ok(output) => {
            if json {
                println!("{}", output.report.to_json());
            } else if let Some(raw) = output.raw {
                print!("{raw}");
            } else {
                print!("{}", output.report.render_text());
            }
            output.exit
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::ResourceExhausted { .. } => 3,
                _ => 2,
            }
        }
    };
    eprintln!("elapsed: {:.2?}", start.elapsed());
    code
}

fn dispatch(cli: Cli) -> Result<Output> {
    let opts = SearchOptions {
        node_budget: cli.node_budget,
        workers: cli.workers.max(1),
    };
    match cli.command {
        Command::Psi { file } => cmd_psi(&file, &opts),
        Command::Chi { file } => cmd_chi(&file, &opts),
        Command::Verify { file, colouring, inferred } => cmd_verify(&file, &colouring, inferred),
        Command::Reduce { file, colouring } => cmd_reduce(&file, &colouring),
        Command::Equiv { file1, file2 } => cmd_equiv(&file1, &file2),
        Command::Gen { family, params } => cmd_gen(&family, &params),
        Command::Witness { file, colouring } => cmd_witness(&file, &colouring),
        Command::Check { max_n, trials } => cmd_check(cli.seed, max_n, trials, &opts),
        Command::Formula { shape, params } => cmd_formula(&shape, &params),
    }
}

fn read_graph(path: &Path) -> Result<SignedGraph> {
    parse_graph(&std::fs::read_to_string(path)?)
}

fn read_colouring(path: &Path) -> Result<ColouringFile> {
    parse_colouring(&std::fs::read_to_string(path)?)
}

fn plain_colouring(path: &Path) -> Result<Colouring> {
    match read_colouring(path)? {
        ColouringFile::Plain(phi) => Ok(phi),
        ColouringFile::Inferred(_) => Err(Error::invalid(
            "this command needs a plain colouring file (tokens like '+2', '-1', '0')",
        )),
    }
}

fn cmd_psi(file: &Path, opts: &SearchOptions) -> Result<Output> {
    let g = read_graph(file)?;
    let r = solver::psi(&g, opts)?;
    let mut report = RunReport::new(format!("psi {}", file.display()));
    report.record("psi", r.value as i64);
    report.record("order", g.order() as i64);
    report.record("size", g.size() as i64);
    report.set_witness_inferred(&r.witness);
    report.note(format!(
        "upper bound {}: min of order, twice a maximum matching plus one, and the palette size table",
        r.upper_bound
    ));
    if r.value < r.upper_bound {
        report.note(format!(
            "palettes {}..={} admit no complete colouring",
            r.value + 1,
            r.upper_bound
        ));
    }
    report.note(format!("psi {}: witness verified complete", r.value));
    report.nodes = Some(r.nodes);
    Ok(Output::done(report))
}

fn cmd_chi(file: &Path, opts: &SearchOptions) -> Result<Output> {
    let g = read_graph(file)?;
    let r = solver::chi(&g, opts)?;
    let mut report = RunReport::new(format!("chi {}", file.display()));
    report.record("chi", r.value as i64);
    report.record("order", g.order() as i64);
    report.record("size", g.size() as i64);
    report.set_witness_plain(&r.witness);
    report.note(format!(
        "chi {}: proper witness found, no proper colouring with a smaller palette",
        r.value
    ));
    report.nodes = Some(r.nodes);
    Ok(Output::done(report))
}

fn cmd_verify(file: &Path, colouring: &Path, inferred: bool) -> Result<Output> {
    let g = read_graph(file)?;
    let parsed = read_colouring(colouring)?;
    let flag = if inferred { " --inferred" } else { "" };
    let mut report = RunReport::new(format!(
        "verify {} {}{flag}",
        file.display(),
        colouring.display()
    ));
    let complete = match (parsed, inferred) {
        (ColouringFile::Inferred(gamma), true) => {
            report.record("k", gamma.k() as i64);
            report.set_witness_inferred(&gamma);
            let complete = is_inferred_complete(&g, &gamma)?;
            report.answer("complete", complete);
            report.note(if complete {
                "every magnitude is used and every edge type of K* is realized"
            } else {
                "a magnitude is unused, an edge is improper, or an edge type is missing"
            });
            complete
        }
        (ColouringFile::Plain(phi), false) => {
            report.record("k", phi.k() as i64);
            report.set_witness_plain(&phi);
            let proper = is_proper(&g, &phi)?;
            let complete = proper && is_complete(&g, &phi)?;
            report.answer("proper", proper);
            report.answer("complete", complete);
            report.note(if !proper {
                "an edge joins equal colours with effective positive sign"
            } else if !complete {
                "proper, but the reduction is a proper subgraph of K*"
            } else {
                "proper and the reduction equals K*"
            });
            complete
        }
        (ColouringFile::Plain(_), true) => {
            return Err(Error::invalid(
                "--inferred expects magnitude+flag tokens like '2-' or '0+'",
            ))
        }
        (ColouringFile::Inferred(_), false) => {
            return Err(Error::invalid(
                "the colouring file uses inferred tokens; pass --inferred",
            ))
        }
    };
    Ok(Output {
        report,
        exit: if complete { 0 } else { 1 },
        raw: None,
    })
}

fn cmd_reduce(file: &Path, colouring: &Path) -> Result<Output> {
    let g = read_graph(file)?;
    let phi = plain_colouring(colouring)?;
    let reduced = reduce(&g, &phi)?;
    let mut report = RunReport::new(format!("reduce {} {}", file.display(), colouring.display()));
    report.record("k", phi.k() as i64);
    report.record("classes", reduced.order() as i64);
    report.record("types", reduced.size() as i64);
    report.answer("complete", is_complete(&g, &phi)?);
    // The reduction stores each type once; count realizations on the input.
    let mut counts: std::collections::BTreeMap<(u32, u32, Sign), usize> = Default::default();
    for (u, v, _) in g.edges() {
        let t = classify_edge(&g, &phi, u, v)?;
        *counts.entry((t.lo, t.hi, t.sign)).or_default() += 1;
    }
    for ((i, j, s), count) in counts {
        report.note(format!("type ({i}, {j}, {s}) realized by {count} edge(s)"));
    }
    Ok(Output::done(report))
}

fn cmd_equiv(file1: &Path, file2: &Path) -> Result<Output> {
    let g1 = read_graph(file1)?;
    let g2 = read_graph(file2)?;
    let mut report = RunReport::new(format!("equiv {} {}", file1.display(), file2.display()));
    if g1.order() != g2.order() {
        report.answer("equivalent", false);
        report.note(format!(
            "orders differ: {} vs {}",
            g1.order(),
            g2.order()
        ));
        return Ok(Output { report, exit: 1, raw: None });
    }
    match are_equivalent(&g1, &g2)? {
        Some(set) => {
            report.answer("equivalent", true);
            report.note(format!("switching {set:?} maps the first graph onto the second"));
            Ok(Output::done(report))
        }
        None => {
            report.answer("equivalent", false);
            report.note("no switch set maps the first graph onto the second");
            Ok(Output { report, exit: 1, raw: None })
        }
    }
}

fn operation_text(op: &Operation) -> String {
    match *op {
        Operation::RemoveVertex(v) => format!("remove vertex {v}"),
        Operation::FlipEdgeSign(u, v) => format!("flip the sign of edge ({u}, {v})"),
        Operation::RemoveEdge(u, v) => format!("remove edge ({u}, {v})"),
        Operation::IdentifyPair(u, v) => format!("identify vertices {u} and {v}"),
    }
}

/// Assembles generator output: `# `-prefixed facts, then the graph file.
/// The same lines go into the report chain, so JSON stays a superset.
fn family_output(command: String, facts: Vec<String>, g: &SignedGraph) -> Output {
    let mut report = RunReport::new(command);
    report.record("order", g.order() as i64);
    report.record("size", g.size() as i64);
    let mut raw = String::new();
    for fact in &facts {
        writeln!(raw, "# {fact}").unwrap();
        report.note(fact.clone());
    }
    let body = serialize_graph(g);
    raw.push_str(&body);
    for line in body.lines() {
        report.note(line.to_string());
    }
    Output { report, exit: 0, raw: Some(raw) }
}

fn marked_family(command: String, instance: FamilyInstance) -> Output {
    let facts = vec![
        instance.name.clone(),
        format!("operation: {}", operation_text(&instance.operation)),
        format!(
            "claimed psi {} before, {} after the operation",
            instance.claimed_psi, instance.claimed_after
        ),
    ];
    let mut output = family_output(command, facts, &instance.graph);
    output.report.record("claimed_psi", instance.claimed_psi as i64);
    output.report.record("claimed_after", instance.claimed_after as i64);
    output
}

fn usize_param(params: &[String], index: usize, what: &str) -> Result<usize> {
    let tok = params
        .get(index)
        .ok_or_else(|| Error::invalid(format!("missing parameter: {what}")))?;
    tok.parse()
        .map_err(|_| Error::invalid(format!("invalid {what} '{tok}'")))
}

fn cmd_gen(family: &str, params: &[String]) -> Result<Output> {
    let command = format!("gen {family} {}", params.join(" "));
    let command = command.trim_end().to_string();
    match family {
        "remove-vertex" => {
            let k = usize_param(params, 0, "palette size k")?;
            Ok(marked_family(command, gen_remove_vertex(k)?))
        }
        "resign-edge" => {
            let k = usize_param(params, 0, "palette size k")?;
            Ok(marked_family(command, gen_resign_edge(k)?))
        }
        "remove-edge-lower" => {
            let k = usize_param(params, 0, "palette size k")?;
            Ok(marked_family(command, gen_remove_edge_lower(k)?))
        }
        "remove-edge-upper" => {
            let k = usize_param(params, 0, "palette size k")?;
            Ok(marked_family(command, gen_remove_edge_upper(k)?))
        }
        "elementary-drop" => {
            let k = usize_param(params, 0, "palette size k")?;
            Ok(marked_family(command, gen_elementary_drop(k)?))
        }
        "interpolation" => {
            let k = usize_param(params, 0, "palette size k")?;
            let g = gen_interpolation(k)?;
            let facts = vec![
                format!("interpolation family at k = {k}"),
                format!("chi {}, psi {}, and no complete {k}-colouring", k + 1, 2 * k),
            ];
            Ok(family_output(command, facts, &g))
        }
        "perfect-counterexample" => {
            let g = gen_perfect_counterexample();
            let facts = vec![
                "perfect underlying graph whose proper bound is not tight".to_string(),
                "clique and chromatic number 3, achromatic number 6".to_string(),
            ];
            Ok(family_output(command, facts, &g))
        }
        "irreducible" => {
            let p = usize_param(params, 0, "positive matching size p")?;
            let m = usize_param(params, 1, "order m")?;
            let g = gen_irreducible_large(p, m)?;
            let facts = vec![
                format!("irreducible family: all-negative K_{m} with {p} positive matching edge(s)"),
                format!("psi {}", irreducible_claimed_psi(p, m)),
            ];
            Ok(family_output(command, facts, &g))
        }
        "np-reduction" => {
            let k = usize_param(params, 0, "target colour count k")?;
            let path = params
                .get(1)
                .ok_or_else(|| Error::invalid("missing parameter: input graph file"))?;
            let g = read_graph(Path::new(path))?;
            let out = gen_np_reduction(&g, k)?;
            let n = g.order();
            let big = (n + k) * (n + k);
            let facts = vec![
                format!("hardness reduction of an order-{n} graph at k = {k}"),
                format!(
                    "a complete {}-colouring exists iff the input has a complete unsigned {k}-colouring",
                    2 * (big + k)
                ),
            ];
            Ok(family_output(command, facts, &out))
        }
        other => Err(Error::invalid(format!(
            "unknown family '{other}'; known families: remove-vertex <k> (k >= 3), \
             resign-edge <k> (k >= 4), remove-edge-lower <k> (k >= 5), \
             remove-edge-upper <k> (k >= 6), elementary-drop <k> (k >= 8), \
             interpolation <k> (odd k >= 3), perfect-counterexample, \
             irreducible <p> <m> (m >= 2p), np-reduction <k> <graph-file>"
        ))),
    }
}

fn cmd_witness(file: &Path, colouring: &Path) -> Result<Output> {
    let g = read_graph(file)?;
    let phi = plain_colouring(colouring)?;
    let kept = witness_subgraph(&g, &phi)?;
    let induced = g.induced_subgraph(&kept)?;
    let restricted = Colouring::new(phi.k(), kept.iter().map(|&v| phi.get(v)).collect())?;
    let still_complete = is_complete(&induced, &restricted)?;
    let mut report = RunReport::new(format!("witness {} {}", file.display(), colouring.display()));
    report.record("k", phi.k() as i64);
    report.record("kept", kept.len() as i64);
    report.record("bound", (2 * kstar_size(phi.k())).max(1) as i64);
    report.answer("complete", still_complete);
    report.note(format!(
        "kept vertices of the input graph: {}",
        kept.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
    ));
    for line in serialize_graph(&induced).lines() {
        report.note(line.to_string());
    }
    report.set_witness_plain(&restricted);
    Ok(Output {
        report,
        exit: if still_complete { 0 } else { 1 },
        raw: None,
    })
}

fn cmd_check(seed: u64, max_n: usize, trials: u64, opts: &SearchOptions) -> Result<Output> {
    let report = check_harness(seed, max_n, trials, opts);
    let violated = report
        .harness
        .as_ref()
        .is_some_and(|h| h.suites.iter().any(|s| s.violation.is_some()));
    let exit = if violated {
        1
    } else if report.stopped.is_some() {
        3
    } else {
        0
    };
    Ok(Output { report, exit, raw: None })
}

fn cmd_formula(shape: &str, params: &[String]) -> Result<Output> {
    let command = format!("formula {shape} {}", params.join(" "));
    let command = command.trim_end().to_string();
    let mut report = RunReport::new(command);
    match shape {
        "path" => {
            let n = usize_param(params, 0, "path order n")?;
            let value = psi_path(n)?;
            report.record("n", n as i64);
            report.record("psi", value as i64);
            report.note("the value is independent of the signature");
        }
        "cycle" => {
            let n = usize_param(params, 0, "cycle order n")?;
            let balance = match params.get(1).map(String::as_str) {
                Some("balanced") => Parity::Even,
                Some("unbalanced") => Parity::Odd,
                other => {
                    return Err(Error::invalid(format!(
                        "cycle needs a balance class 'balanced' or 'unbalanced', got {:?}",
                        other.unwrap_or("nothing")
                    )))
                }
            };
            let value = psi_cycle(n, balance)?;
            report.record("n", n as i64);
            report.record("psi", value as i64);
            report.note(format!(
                "cycles of equal order and balance class are switching-equivalent ({} negative edges)",
                balance
            ));
        }
        "clique" => {
            let n = usize_param(params, 0, "clique order n")?;
            let variant = match params.get(1).map(String::as_str) {
                Some("positive") => CompleteVariant::AllPositive,
                Some("negative") => CompleteVariant::AllNegative,
                Some("minus-matching") => {
                    CompleteVariant::NegativeMinusMatching(usize_param(params, 2, "matching size")?)
                }
                other => {
                    return Err(Error::invalid(format!(
                        "clique needs a variant 'positive', 'negative' or 'minus-matching <size>', got {:?}",
                        other.unwrap_or("nothing")
                    )))
                }
            };
            let value = psi_complete(n, variant)?;
            report.record("n", n as i64);
            report.record("psi", value as i64);
        }
        other => {
            return Err(Error::invalid(format!(
                "unknown formula shape '{other}'; known: path <n>, cycle <n> <balanced|unbalanced>, \
                 clique <n> <positive|negative|minus-matching <size>>"
            )))
        }
    }
    Ok(Output::done(report))
}
