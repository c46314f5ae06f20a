//! Command-line driver: homology characters, the four comparison
//! verifiers, the complete-graph pipeline, and character decomposition,
//! all with deterministic JSON reports.
//!
//! Exit codes: 0 success, 2 parse error, 3 validation error, 4 comparison
//! failure.

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use equihom::character::{decompose, Character};
use equihom::error::Error;
use equihom::homology::{identity_action, Method};
use equihom::json::{
    parse_generators, CharacterFile, ComplexFile, GraphFile, LatticeFile, MatroidFile,
    VectorsFile,
};
use equihom::matroid::edge_action;
use equihom::pipelines::complete_graph;
use equihom::verify::{
    homology_report, verify_alexander_duality, verify_arrangement_theorem,
    verify_crosscut_theorem, verify_main_theorem, ComparisonReport,
};
use equihom::{FiniteGroup, Matroid, Partition, Permutation, SimplicialComplex};

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser)]
#[command(name = "equihom", version, about = "Exact equivariant homology of matroid complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Betti numbers and homology characters of a complex or matroid file.
    Homology(RunArgs),
    /// Check one of the comparison isomorphisms on a given input.
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
    /// Run the complete-graph comparison for the given vertex count.
    CompleteGraph {
        /// Number of vertices (at least 3).
        m: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Decompose a symmetric-group character file into irreducibles.
    Decompose {
        /// Degree of the symmetric group; defaults to the file's "m".
        m: Option<usize>,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Subcommand)]
enum VerifyTarget {
    /// Homology of a complex against its sign-twisted dual.
    Duality(RunArgs),
    /// Flats-lattice order complex against the atom cross-cut complex.
    Crosscut(RunArgs),
    /// The three-way matroid comparison.
    Main(RunArgs),
    /// Arrangement top cohomology via the lattice against the dual side.
    Arrangement(RunArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Input file (JSON).
    #[arg(long)]
    input: Option<PathBuf>,
    /// Write the JSON report here as well.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Print the full JSON report to stdout.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Group spec: "symmetric:m", "edge-action:m", "trivial", or a path to
    /// a JSON list of image arrays.
    #[arg(long, default_value = "trivial")]
    group: String,
    /// Character computation method.
    #[arg(long, value_enum)]
    method: Option<MethodArg>,
    /// Restrict homology output to one degree.
    #[arg(long, default_value = "all")]
    degree: String,
    /// Bound on the order of a generated group.
    #[arg(long, default_value_t = equihom::perm::DEFAULT_ORDER_CAP)]
    max_group_order: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Lefschetz,
    Exact,
    Both,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Lefschetz => Method::Lefschetz,
            MethodArg::Exact => Method::Exact,
            MethodArg::Both => Method::Both,
        }
    }
}

/// What kind of object an input file holds, detected by its keys.
enum InputObject {
    Complex(SimplicialComplex),
    Matroid(Matroid),
    Lattice(equihom::FiniteLattice),
    Vectors(equihom::RationalMatrix),
}

struct Failure {
    code: u8,
    message: String,
    report: Option<ComparisonReport>,
}

impl Failure {
    fn parse(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
            report: None,
        }
    }

    fn validation(message: impl Into<String>) -> Self {
        Failure {
            code: 3,
            message: message.into(),
            report: None,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (code, report) = match e {
            Error::DualityViolation { ref report, .. }
            | Error::CrosscutTheoremViolation { ref report, .. }
            | Error::MainTheoremViolation { ref report, .. }
            | Error::ArrangementTheoremViolation { ref report, .. } => {
                (4, Some(report.as_ref().clone()))
            }
            Error::MethodDisagreement { .. } => (4, None),
            _ => (3, None),
        };
        Failure {
            code,
            message: e.to_string(),
            report,
        }
    }
}

#[derive(Serialize)]
struct CliReport {
    command: String,
    version: String,
    input_hash: String,
    #[serde(flatten)]
    body: Value,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            if let Some(report) = failure.report {
                if let Ok(json) = serde_json::to_string_pretty(&report) {
                    println!("{json}");
                }
            }
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Homology(args) => cmd_homology(args),
        Command::Verify { target } => match target {
            VerifyTarget::Duality(args) => cmd_verify_duality(args),
            VerifyTarget::Crosscut(args) => cmd_verify_crosscut(args),
            VerifyTarget::Main(args) => cmd_verify_main(args),
            VerifyTarget::Arrangement(args) => cmd_verify_arrangement(args),
        },
        Command::CompleteGraph { m, common } => cmd_complete_graph(m, common),
        Command::Decompose { m, common } => cmd_decompose(m, common),
    }
}

fn read_input(common: &CommonArgs) -> Result<(String, String), Failure> {
    let path = common
        .input
        .as_ref()
        .ok_or_else(|| Failure::parse("--input is required"))?;
    let data = fs::read_to_string(path)
        .map_err(|e| Failure::parse(format!("cannot read {}: {e}", path.display())))?;
    let hash = hex::encode(Sha256::digest(data.as_bytes()));
    Ok((data, hash))
}

fn parse_input(data: &str) -> Result<InputObject, Failure> {
    let value: Value =
        serde_json::from_str(data).map_err(|e| Failure::parse(format!("invalid JSON: {e}")))?;
    let obj = value
        .as_object()
        .ok_or_else(|| Failure::parse("input must be a JSON object"))?;
    if obj.contains_key("facets") || obj.contains_key("void") {
        let file: ComplexFile = serde_json::from_value(value.clone())
            .map_err(|e| Failure::parse(format!("complex file: {e}")))?;
        return Ok(InputObject::Complex(file.to_complex()?));
    }
    if obj.contains_key("bases") {
        let file: MatroidFile = serde_json::from_value(value.clone())
            .map_err(|e| Failure::parse(format!("matroid file: {e}")))?;
        return Ok(InputObject::Matroid(file.to_matroid()?));
    }
    if obj.contains_key("edges") {
        let file: GraphFile = serde_json::from_value(value.clone())
            .map_err(|e| Failure::parse(format!("graph file: {e}")))?;
        return Ok(InputObject::Matroid(file.to_matroid()?));
    }
    if obj.contains_key("leq_pairs") {
        let file: LatticeFile = serde_json::from_value(value.clone())
            .map_err(|e| Failure::parse(format!("lattice file: {e}")))?;
        return Ok(InputObject::Lattice(file.to_lattice()?));
    }
    if obj.contains_key("columns") {
        let file: VectorsFile = serde_json::from_value(value.clone())
            .map_err(|e| Failure::parse(format!("vectors file: {e}")))?;
        return Ok(InputObject::Vectors(file.to_matrix()?));
    }
    Err(Failure::parse(
        "unrecognized input: expected facets, bases, edges, leq_pairs, or columns",
    ))
}

/// Builds the acting group on `ground` labels from the spec string.
fn build_group(
    spec: &str,
    ground: usize,
    cap: usize,
) -> Result<Arc<FiniteGroup>, Failure> {
    if spec == "trivial" {
        return Ok(FiniteGroup::trivial(ground));
    }
    if let Some(m) = spec.strip_prefix("symmetric:") {
        let m: usize = m
            .parse()
            .map_err(|_| Failure::parse(format!("bad group spec {spec:?}")))?;
        if m != ground {
            return Err(Failure::validation(format!(
                "symmetric:{m} acts on {m} labels but the input has {ground}"
            )));
        }
        return Ok(FiniteGroup::symmetric(m));
    }
    if let Some(m) = spec.strip_prefix("edge-action:") {
        let m: usize = m
            .parse()
            .map_err(|_| Failure::parse(format!("bad group spec {spec:?}")))?;
        let expected = m * (m - 1) / 2;
        if expected != ground {
            return Err(Failure::validation(format!(
                "edge-action:{m} acts on {expected} labels but the input has {ground}"
            )));
        }
        let vertex_group = FiniteGroup::symmetric(m);
        let gens: Vec<Permutation> = vertex_group
            .generators()
            .iter()
            .map(|g| edge_action(m, g))
            .collect::<equihom::Result<_>>()?;
        return Ok(FiniteGroup::generate(ground, gens, cap.max(1))?);
    }
    // Otherwise a path to a generators file.
    let data = fs::read_to_string(spec)
        .map_err(|e| Failure::parse(format!("cannot read group file {spec:?}: {e}")))?;
    let gens = parse_generators(&data).map_err(Failure::parse)?;
    let degree = gens.first().map_or(ground, Permutation::degree);
    if degree != ground {
        return Err(Failure::validation(format!(
            "generators act on {degree} labels but the input has {ground}"
        )));
    }
    Ok(FiniteGroup::generate(ground, gens, cap)?)
}

fn emit(common: &CommonArgs, command: &str, hash: &str, body: Value) -> Result<(), Failure> {
    let report = CliReport {
        command: command.to_string(),
        version: VERSION.to_string(),
        input_hash: hash.to_string(),
        body,
    };
    let json = serde_json::to_string_pretty(&report)
        .map_err(|e| Failure::validation(format!("serialize: {e}")))?;
    if let Some(path) = &common.output {
        fs::write(path, format!("{json}\n"))
            .map_err(|e| Failure::validation(format!("cannot write output: {e}")))?;
    }
    if common.json || common.output.is_none() {
        println!("{json}");
    } else {
        // Short human summary when the JSON went to a file.
        if let Some(pass) = report.body.get("pass") {
            println!("pass: {pass}");
        } else {
            println!("written: {}", common.output.as_ref().unwrap().display());
        }
    }
    Ok(())
}

fn report_value(report: &ComparisonReport) -> Result<Value, Failure> {
    serde_json::to_value(report).map_err(|e| Failure::validation(format!("serialize: {e}")))
}

fn cmd_homology(args: RunArgs) -> Result<(), Failure> {
    let (data, hash) = read_input(&args.common)?;
    let complex = match parse_input(&data)? {
        InputObject::Complex(k) => k,
        InputObject::Matroid(m) => m.independence_complex(),
        _ => {
            return Err(Failure::validation(
                "homology expects a complex, matroid, or graph file",
            ))
        }
    };
    let group = build_group(&args.group, complex.ambient(), args.max_group_order)?;
    let method = args.method.map(Method::from).unwrap_or(Method::Exact);
    let mut report = homology_report(&complex, &group, &identity_action, method)?;
    if args.degree != "all" {
        let degree: i32 = args
            .degree
            .parse()
            .map_err(|_| Failure::parse(format!("bad degree {:?}", args.degree)))?;
        report.rows.retain(|row| row.degree == degree);
    }
    emit(&args.common, "homology", &hash, report_value(&report)?)
}

fn cmd_verify_duality(args: RunArgs) -> Result<(), Failure> {
    let (data, hash) = read_input(&args.common)?;
    let complex = match parse_input(&data)? {
        InputObject::Complex(k) => k,
        InputObject::Matroid(m) => m.independence_complex(),
        _ => return Err(Failure::validation("duality expects a complex file")),
    };
    let group = build_group(&args.group, complex.ambient(), args.max_group_order)?;
    let method = args.method.map(Method::from).unwrap_or(Method::Exact);
    let report = verify_alexander_duality(&complex, &group, method)?;
    emit(&args.common, "verify duality", &hash, report_value(&report)?)
}

fn cmd_verify_crosscut(args: RunArgs) -> Result<(), Failure> {
    let (data, hash) = read_input(&args.common)?;
    let method = args.method.map(Method::from).unwrap_or(Method::Lefschetz);
    let report = match parse_input(&data)? {
        InputObject::Matroid(matroid) => {
            let group = build_group(&args.group, matroid.size(), args.max_group_order)?;
            equihom::verify::verify_crosscut_for_matroid(&matroid, &group, method)?
        }
        InputObject::Lattice(lattice) => {
            // Generators act directly on the 1-based lattice indices.
            let group = build_group(&args.group, lattice.size(), args.max_group_order)?;
            let atoms = lattice.atoms();
            verify_crosscut_theorem(&lattice, &atoms, &group, &identity_action, method)?
        }
        _ => {
            return Err(Failure::validation(
                "crosscut expects a matroid, graph, or lattice file",
            ))
        }
    };
    emit(&args.common, "verify crosscut", &hash, report_value(&report)?)
}

fn cmd_verify_main(args: RunArgs) -> Result<(), Failure> {
    let (data, hash) = read_input(&args.common)?;
    let matroid = match parse_input(&data)? {
        InputObject::Matroid(m) => m,
        _ => {
            return Err(Failure::validation(
                "main expects a matroid or graph file",
            ))
        }
    };
    let group = build_group(&args.group, matroid.size(), args.max_group_order)?;
    let method = args.method.map(Method::from).unwrap_or(Method::Lefschetz);
    let report = verify_main_theorem(&matroid, &group, method)?;
    emit(&args.common, "verify main", &hash, report_value(&report)?)
}

fn cmd_verify_arrangement(args: RunArgs) -> Result<(), Failure> {
    let (data, hash) = read_input(&args.common)?;
    let vectors = match parse_input(&data)? {
        InputObject::Vectors(v) => v,
        _ => return Err(Failure::validation("arrangement expects a vectors file")),
    };
    let group = build_group(&args.group, vectors.cols(), args.max_group_order)?;
    let method = args.method.map(Method::from).unwrap_or(Method::Lefschetz);
    let report = verify_arrangement_theorem(&vectors, &group, method)?;
    emit(
        &args.common,
        "verify arrangement",
        &hash,
        report_value(&report)?,
    )
}

fn cmd_complete_graph(m: usize, common: CommonArgs) -> Result<(), Failure> {
    if m < 3 {
        return Err(Failure::validation("complete-graph needs m >= 3"));
    }
    let hash = hex::encode(Sha256::digest(format!("complete-graph:{m}").as_bytes()));
    let report = complete_graph(m, Method::Lefschetz)?;
    emit(&common, "complete-graph", &hash, report_value(&report)?)
}

fn cmd_decompose(m_arg: Option<usize>, common: CommonArgs) -> Result<(), Failure> {
    let (data, hash) = read_input(&common)?;
    let file: CharacterFile = serde_json::from_str(&data)
        .map_err(|e| Failure::parse(format!("character file: {e}")))?;
    let m = m_arg.unwrap_or(file.m);
    if m != file.m {
        return Err(Failure::validation(format!(
            "file says m = {}, argument says m = {m}",
            file.m
        )));
    }
    let group = FiniteGroup::symmetric(m);
    let mut values = Vec::with_capacity(group.classes().len());
    for c in 0..group.classes().len() {
        let label = group.class_label(c);
        let entry = file
            .values
            .get(&label)
            .or_else(|| {
                // Accept any ordering of the parts in the key.
                file.values.iter().find_map(|(k, v)| {
                    (Partition::parse(k).map(|p| p.label()) == Some(label.clone()))
                        .then_some(v)
                })
            })
            .ok_or_else(|| {
                Failure::validation(format!("missing value for cycle type {label}"))
            })?;
        values.push(entry.to_cyclotomic()?);
    }
    let chi = Character::new(group, values);
    let decomposition = decompose(&chi)?;
    let map: BTreeMap<String, usize> = decomposition
        .into_iter()
        .map(|(p, mult)| (p.label(), mult))
        .collect();
    let body = serde_json::json!({ "m": m, "multiplicities": map, "pass": true });
    emit(&common, "decompose", &hash, body)
}
