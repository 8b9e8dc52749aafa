//! Command-line front end: controllability checks, input selection, exact
//! oracles, instance generation and DOT export.
//!
//! Exit codes: 0 on success (and on "controllable"), 1 when the instance is
//! not controllable/observable or has no feasible selection, 2 on usage,
//! parse or I/O errors.

mod dot;
mod instance;
mod report;

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use structctl::controllability::{is_controllable_flow, is_controllable_lin};
use structctl::generate::{generate, Family, GeneratorSpec};
use structctl::graph::{build_state_digraph, scc_decompose, SccDecomposition};
use structctl::matching::{build_system_bipartite, max_matching};
use structctl::oracle::brute_force_minccis;
use structctl::rat::{format_rat, parse_rat, rat, Rat};
use structctl::selection::{
    solve_min_cost_output_selection, solve_minccis_approx, SelectionResult,
};
use structctl::{Error, StructuredSystem};

#[derive(Parser)]
#[command(
    name = "structctl",
    version,
    about = "Structural controllability analysis and minimum-cost input selection"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide structural controllability with both deciders and print
    /// diagnostics
    Check {
        file: PathBuf,
        /// Exit with status 1 when the system is not controllable
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        json: bool,
    },
    /// Select a cheap input subset that keeps the system controllable
    Select {
        file: PathBuf,
        /// Ignore the instance costs and minimize the number of inputs
        #[arg(long)]
        uniform: bool,
        /// Override the cost vector, e.g. --costs "1 1 10"
        #[arg(long, value_name = "LIST", conflicts_with = "uniform")]
        costs: Option<String>,
        /// Treat the instance as an observability problem: `a` holds the
        /// state pattern and column j of `b` marks the states output j senses
        #[arg(long)]
        dual_observability: bool,
        #[arg(long)]
        json: bool,
    },
    /// Exact optimum by brute-force subset enumeration (small instances)
    Oracle {
        file: PathBuf,
        /// Largest input count the enumeration accepts
        #[arg(long, default_value_t = structctl::oracle::DEFAULT_SUBSET_LIMIT)]
        limit: usize,
        /// Also run the approximate solver and report the cost ratio
        #[arg(long)]
        compare: bool,
        #[arg(long)]
        json: bool,
    },
    /// Generate a deterministic random instance
    Gen {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long = "n")]
        n: usize,
        #[arg(long = "m")]
        m: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        density_a: Option<f64>,
        #[arg(long)]
        density_b: Option<f64>,
        #[arg(long)]
        cost_min: Option<i64>,
        #[arg(long)]
        cost_max: Option<i64>,
        /// Block count for the block family
        #[arg(long)]
        blocks: Option<usize>,
        /// Write here instead of stdout; a .json suffix selects JSON
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Emit Graphviz DOT for one of the derived graphs
    Export {
        file: PathBuf,
        #[arg(long, value_enum)]
        what: ExportKind,
        /// Label flow-network edges with a maximum flow
        #[arg(long)]
        with_flow: bool,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Erdos,
    Chain,
    Cycle,
    DecoupledDiagonal,
    Block,
}

impl From<FamilyArg> for Family {
    fn from(value: FamilyArg) -> Self {
        match value {
            FamilyArg::Erdos => Family::Erdos,
            FamilyArg::Chain => Family::Chain,
            FamilyArg::Cycle => Family::Cycle,
            FamilyArg::DecoupledDiagonal => Family::DecoupledDiagonal,
            FamilyArg::Block => Family::Block,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportKind {
    Digraph,
    Bipartite,
    Flownet,
    Condensation,
}

enum CliError {
    /// Usage, parse or I/O problems: exit status 2.
    Fatal(String),
    /// Well-formed but infeasible instances: exit status 1.
    Infeasible(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Fatal(msg) | CliError::Infeasible(msg) => write!(f, "{msg}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                CliError::Fatal(_) => ExitCode::from(2),
                CliError::Infeasible(_) => ExitCode::from(1),
            }
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Check { file, strict, json } => cmd_check(&file, strict, json),
        Command::Select {
            file,
            uniform,
            costs,
            dual_observability,
            json,
        } => cmd_select(&file, uniform, costs.as_deref(), dual_observability, json),
        Command::Oracle {
            file,
            limit,
            compare,
            json,
        } => cmd_oracle(&file, limit, compare, json),
        Command::Gen {
            family,
            n,
            m,
            seed,
            density_a,
            density_b,
            cost_min,
            cost_max,
            blocks,
            output,
        } => {
            let mut spec = GeneratorSpec::new(family.into(), n, m, seed);
            if let Some(d) = density_a {
                spec.density_a = d;
            }
            if let Some(d) = density_b {
                spec.density_b = d;
            }
            if let Some(c) = cost_min {
                spec.cost_min = c;
            }
            if let Some(c) = cost_max {
                spec.cost_max = c;
            }
            if let Some(b) = blocks {
                spec.blocks = b;
            }
            cmd_gen(&spec, output.as_deref())
        }
        Command::Export {
            file,
            what,
            with_flow,
            output,
        } => cmd_export(&file, what, with_flow, output.as_deref()),
    }
}

fn load_system(path: &Path) -> Result<StructuredSystem, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Fatal(format!("{}: {e}", path.display())))?;
    let parsed = if path.extension().is_some_and(|ext| ext == "json") {
        instance::parse_json(&text)
    } else {
        instance::parse_text(&text)
    }
    .map_err(|e| CliError::Fatal(format!("{}: {e}", path.display())))?;
    for warning in &parsed.warnings {
        eprintln!("warning: {}: {warning}", path.display());
    }
    Ok(parsed.system)
}

fn write_or_print(output: Option<&Path>, content: &str) -> Result<(), CliError> {
    match output {
        Some(path) => fs::write(path, content)
            .map_err(|e| CliError::Fatal(format!("{}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn component_names(scc: &SccDecomposition, id: usize) -> String {
    let names: Vec<String> = scc.components[id]
        .iter()
        .map(|&v| format!("x{}", v + 1))
        .collect();
    format!("{{{}}}", names.join(","))
}

fn cmd_check(file: &Path, strict: bool, json: bool) -> Result<ExitCode, CliError> {
    let sys = load_system(file)?;
    let scc = scc_decompose(&build_state_digraph(&sys));
    let lin = is_controllable_lin(&sys);
    let flow = is_controllable_flow(&sys);

    if lin.controllable != flow.controllable {
        eprintln!("internal disagreement between the two deciders; instance dump follows");
        eprintln!("{}", instance::to_text(&sys));
        eprintln!("graph verdict: {lin:?}");
        eprintln!("flow verdict: {flow:?}");
        return Err(CliError::Fatal("decider disagreement".into()));
    }

    let inaccessible: Vec<usize> = scc
        .non_top_linked
        .iter()
        .copied()
        .filter(|&id| {
            !scc.components[id]
                .iter()
                .any(|&r| (0..sys.m()).any(|j| sys.b().contains(r, j)))
        })
        .collect();
    let matching_size = max_matching(&build_system_bipartite(&sys, false)).cardinality();

    if json {
        let report = report::check_report(&scc, &lin, &flow, &inaccessible, matching_size, sys.n());
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        println!(
            "controllable: {}",
            if lin.controllable { "yes" } else { "no" }
        );
        println!("q: {}", scc.q());
        let sources: Vec<String> = scc
            .non_top_linked
            .iter()
            .map(|&id| component_names(&scc, id))
            .collect();
        println!("non-top-linked components: {}", sources.join(" "));
        println!(
            "max-flow: {} (required {})",
            flow.max_flow_value.unwrap(),
            flow.q + sys.n()
        );
        println!(
            "accessible: {}",
            if lin.accessible.unwrap() { "yes" } else { "no" }
        );
        if !inaccessible.is_empty() {
            let names: Vec<String> = inaccessible
                .iter()
                .map(|&id| component_names(&scc, id))
                .collect();
            println!(
                "inaccessible non-top-linked components: {}",
                names.join(" ")
            );
        }
        println!(
            "dilation-free: {} (max matching {} of {})",
            if lin.dilation_free.unwrap() {
                "yes"
            } else {
                "no"
            },
            matching_size,
            sys.n()
        );
    }

    if strict && !lin.controllable {
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_cost_list(list: &str, m: usize) -> Result<Vec<Rat>, CliError> {
    let values: Vec<&str> = list
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .collect();
    if values.len() != m {
        return Err(CliError::Fatal(format!(
            "--costs expects {m} values, found {}",
            values.len()
        )));
    }
    values
        .into_iter()
        .map(|v| parse_rat(v).map_err(|e| CliError::Fatal(e.to_string())))
        .collect()
}

fn cmd_select(
    file: &Path,
    uniform: bool,
    costs: Option<&str>,
    dual: bool,
    json: bool,
) -> Result<ExitCode, CliError> {
    let mut sys = load_system(file)?;
    if uniform {
        sys = sys
            .replace_costs(vec![rat(1); sys.m()])
            .expect("cost length matches");
    } else if let Some(list) = costs {
        let parsed = parse_cost_list(list, sys.m())?;
        sys = sys
            .replace_costs(parsed)
            .map_err(|e| CliError::Fatal(e.to_string()))?;
    }

    let result = if dual {
        // `b` columns mark which states each output senses.
        let c_bar = sys.b().transpose();
        solve_min_cost_output_selection(sys.a(), &c_bar, sys.input_costs())
    } else {
        solve_minccis_approx(&sys)
    };
    let result = result.map_err(|e| match e {
        Error::NotControllable | Error::NotObservable => CliError::Infeasible(e.to_string()),
        other => CliError::Fatal(other.to_string()),
    })?;

    if json {
        let report = report::select_report(&result, dual);
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        print_selection(&result, dual);
    }
    Ok(ExitCode::SUCCESS)
}

fn print_selection(result: &SelectionResult, dual: bool) {
    let prefix = if dual { "y" } else { "u" };
    let names: Vec<String> = result
        .inputs
        .iter()
        .map(|j| format!("{prefix}{}", j + 1))
        .collect();
    println!(
        "selected {}: {}",
        if dual { "outputs" } else { "inputs" },
        names.join(" ")
    );
    println!("total cost: {}", format_rat(&result.total_cost));
    println!("delta: {}", result.delta);
    let factor = match result.bound {
        structctl::selection::BoundClass::Exact => "optimal".to_string(),
        structctl::selection::BoundClass::DeltaMinusOne => {
            format!("cost <= {} x optimum", result.delta - 1)
        }
        structctl::selection::BoundClass::Delta => format!("cost <= {} x optimum", result.delta),
    };
    println!(
        "bound class: {} ({})",
        report::bound_name(result.bound),
        factor
    );
    println!("lp objective: {}", format_rat(&result.lp_objective));
    let net = &result.network;
    let active: Vec<String> = result
        .inputs
        .iter()
        .map(|j| {
            let id = net.edge_id(net.primed_input(j), net.sink()).unwrap();
            format!("{prefix}{} carries {}", j + 1, result.certificate.get(id))
        })
        .collect();
    println!(
        "certificate: flow value {} of {}; {}",
        net.flow_value(&result.certificate),
        net.required_flow(),
        active.join(", ")
    );
}

fn cmd_oracle(file: &Path, limit: usize, compare: bool, json: bool) -> Result<ExitCode, CliError> {
    let sys = load_system(file)?;
    let exact = brute_force_minccis(&sys, limit).map_err(|e| match e {
        Error::NotControllable => CliError::Infeasible(e.to_string()),
        other => CliError::Fatal(other.to_string()),
    })?;

    let comparison = if compare {
        let approx = solve_minccis_approx(&sys).map_err(|e| CliError::Fatal(e.to_string()))?;
        Some((approx.total_cost, approx.total_cost / exact.optimum_cost))
    } else {
        None
    };

    if json {
        let report = report::oracle_report(&exact, comparison.as_ref().map(|(a, r)| (a, r)));
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        println!("optimum cost: {}", format_rat(&exact.optimum_cost));
        let sets: Vec<String> = exact
            .optimal_sets
            .iter()
            .map(|s| {
                let names: Vec<String> = s.iter().map(|j| format!("u{}", j + 1)).collect();
                format!("{{{}}}", names.join(","))
            })
            .collect();
        println!("optimal sets: {}", sets.join(" "));
        println!("subsets examined: {}", exact.subsets_examined);
        if let Some((approx, ratio)) = comparison {
            println!("approx cost: {}", format_rat(&approx));
            let decimal = *ratio.numer() as f64 / *ratio.denom() as f64;
            println!(
                "approx/optimum ratio: {} ({decimal:.3})",
                format_rat(&ratio)
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_gen(spec: &GeneratorSpec, output: Option<&Path>) -> Result<ExitCode, CliError> {
    let sys = generate(spec).map_err(|e| CliError::Fatal(e.to_string()))?;
    let as_json = output.is_some_and(|p| p.extension().is_some_and(|ext| ext == "json"));
    let content = if as_json {
        format!(
            "{}\n",
            serde_json::to_string_pretty(&instance::to_json(&sys)).unwrap()
        )
    } else {
        instance::to_text(&sys)
    };
    write_or_print(output, &content)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_export(
    file: &Path,
    what: ExportKind,
    with_flow: bool,
    output: Option<&Path>,
) -> Result<ExitCode, CliError> {
    let sys = load_system(file)?;
    let content = match what {
        ExportKind::Digraph => dot::system_digraph(&sys),
        ExportKind::Bipartite => dot::bipartite(&sys),
        ExportKind::Flownet => dot::flow_network(&sys, with_flow),
        ExportKind::Condensation => dot::condensation(&sys),
    };
    write_or_print(output, &content)?;
    Ok(ExitCode::SUCCESS)
}
