//! Command-line front end for `knotframe`: JSON file formats, the bundled
//! fixture corpus and the property suite.
//!
//! [`dispatch`] does all the work and returns the exit code with the text to
//! print, so the binary is a thin wrapper and the commands are testable in
//! process. Commands print one line of compact JSON; `suite run` prints a
//! text report, or JSON lines with `--json`.

pub mod corpus;
pub mod schema;
pub mod suite;

use std::fs;

use clap::{Args, Parser, Subcommand, ValueEnum};
use knotframe::framed::{
    apply_move, delta_i, delta_i_filtered, framed_homotopic_parity, framing_obstruction,
    self_linking, FramedDiagram, FramedError,
};
use knotframe::fronts::{
    bennequin, front_to_framed, rotation_number, stabilize, validate_front, FrontError,
};
use knotframe::topology::{
    alpha_nu, bundle_mul, check_toughandtechnical, condition_star, euler_realizable, Alphabet,
    BundleGroupElement, StarOutcome, TopologyError, TtOutcome,
};
use knotframe::vassiliev::{
    alternating_sum, extend_invariant, is_order_at_most, roundtrip_check, verify_main_identity,
    VassilievError,
};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};
use thiserror::Error;

use corpus::{Corpus, CorpusLoadError};
use schema::{
    parse_alphabet, CommutingPairJson, DescriptorJson, ElementJson, FramedJson, FrontJson,
    LadderJson, LoopsJson, MoveJson, PathJson, ProductJson, SchemaError, SingularJson,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Input {
        path: String,
        #[source]
        source: SchemaError,
    },
    #[error("invalid --move: {0}")]
    MoveArg(#[source] SchemaError),
    #[error("invalid --group {0:?}, expected free:N")]
    Group(String),
    #[error("crossing change {0} has no loop data for the alpha-nu filter")]
    MissingLoops(usize),
    #[error(transparent)]
    Corpus(#[from] CorpusLoadError),
    #[error(transparent)]
    Front(#[from] FrontError),
    #[error(transparent)]
    Framed(#[from] FramedError),
    #[error(transparent)]
    Vassiliev(#[from] VassilievError),
    #[error(transparent)]
    Topology(#[from] TopologyError),
}

/// Exit code, standard output and standard error of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn err(code: i32, stderr: String) -> Outcome {
        Outcome {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "knotframe",
    version,
    about = "Legendrian fronts, framed knots and finite-order invariants"
)]
struct Cli {
    /// Machine-readable output (line-delimited JSON for `suite run`).
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Legendrian fronts.
    #[command(subcommand)]
    Front(FrontCmd),
    /// Framed knot diagrams.
    #[command(subcommand)]
    Framed(FramedCmd),
    /// Paths of framed knots through the discriminant.
    #[command(subcommand)]
    Path(PathCmd),
    /// Singular knots and invariant ladders.
    #[command(subcommand)]
    Vassiliev(VassilievCmd),
    /// Abelian groups, manifold descriptors and bundle groups.
    #[command(subcommand)]
    Topo(TopoCmd),
    /// The corpus property suite.
    #[command(subcommand)]
    Suite(SuiteCmd),
}

#[derive(Debug, Subcommand)]
enum FrontCmd {
    Validate {
        file: String,
    },
    /// Thurston-Bennequin and rotation numbers.
    Invariants {
        file: String,
    },
    /// Add `i` down and `j` up zigzags.
    Stabilize {
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        file: String,
    },
    /// Framed diagram with the contact framing.
    ToFramed {
        file: String,
    },
}

#[derive(Debug, Subcommand)]
enum FramedCmd {
    /// Self-linking number.
    Sl { file: String },
    /// Framing obstruction of the first diagram against the second.
    Obstruction { first: String, second: String },
    ApplyMove {
        /// The move as a JSON object, e.g. {"type":"offset_absorb","at":0}.
        #[arg(long = "move")]
        mv: String,
        file: String,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Filter {
    AlphaNu,
}

#[derive(Debug, Subcommand)]
enum PathCmd {
    /// Signed count of crossing changes, optionally filtered.
    DeltaI {
        file: String,
        #[arg(long)]
        filter: Option<Filter>,
        /// Fundamental group the loops live in, as free:N.
        #[arg(long)]
        group: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
enum Invariant {
    #[default]
    SelfLinking,
    SelfLinkingSquared,
    Writhe,
    Crossings,
    Constant,
}

impl Invariant {
    fn eval(self, k: &FramedDiagram) -> i64 {
        match self {
            Invariant::SelfLinking => self_linking(k),
            Invariant::SelfLinkingSquared => self_linking(k).pow(2),
            Invariant::Writhe => k.diagram().writhe(),
            Invariant::Crossings => k.diagram().crossing_count() as i64,
            Invariant::Constant => 1,
        }
    }
}

#[derive(Debug, Args)]
struct InvariantArg {
    #[arg(long, value_enum, default_value_t)]
    invariant: Invariant,
}

#[derive(Debug, Subcommand)]
enum VassilievCmd {
    /// Alternating sum of an invariant over the resolutions of a singular
    /// diagram.
    AltSum {
        file: String,
        #[command(flatten)]
        x: InvariantArg,
    },
    /// Whether the invariant vanishes on every given diagram with n+1 double
    /// points.
    OrderTest {
        #[arg(long)]
        n: usize,
        #[arg(required = true)]
        files: Vec<String>,
        #[command(flatten)]
        x: InvariantArg,
    },
    /// Fill a ladder up to its top rung.
    Extend {
        #[arg(long)]
        n: usize,
        file: String,
    },
    Verify {
        #[arg(long)]
        n: usize,
        file: String,
    },
    /// Restrict to fronts, extend, and compare.
    Roundtrip {
        #[arg(long)]
        n: usize,
        #[arg(required = true)]
        fronts: Vec<String>,
        #[arg(long, default_value_t = -8, allow_hyphen_values = true)]
        floor: i64,
        #[arg(long, default_value_t = 4)]
        above: usize,
        #[command(flatten)]
        x: InvariantArg,
    },
}

#[derive(Debug, Subcommand)]
enum TopoCmd {
    EulerRealizable {
        file: String,
    },
    ConditionStar {
        file: String,
    },
    BundleMul {
        file: String,
    },
    AlphaNu {
        #[arg(long)]
        rank: usize,
        file: String,
    },
    TttWitness {
        #[arg(long, default_value_t = 6)]
        bound: u32,
        file: String,
    },
}

#[derive(Debug, Subcommand)]
enum SuiteCmd {
    Run {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn read<T: DeserializeOwned>(path: &str) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_string(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|e| CliError::Input {
        path: path.to_string(),
        source: e.into(),
    })
}

fn input<T>(path: &str, r: Result<T, SchemaError>) -> Result<T, CliError> {
    r.map_err(|source| CliError::Input {
        path: path.to_string(),
        source,
    })
}

fn line(v: Value) -> String {
    format!("{v}\n")
}

fn to_line<T: serde::Serialize>(v: &T) -> String {
    line(serde_json::to_value(v).expect("output serializes"))
}

fn load_front(path: &str) -> Result<knotframe::fronts::OrientedFront, CliError> {
    input(path, read::<FrontJson>(path)?.to_front())
}

fn load_framed(path: &str) -> Result<FramedDiagram, CliError> {
    input(path, read::<FramedJson>(path)?.to_framed())
}

fn load_alphabet(path: &str, s: &str, format: Option<u32>) -> Result<Alphabet, CliError> {
    input(path, parse_alphabet(s, format))
}

fn element(path: &str, e: &ElementJson, a: &Alphabet) -> Result<BundleGroupElement, CliError> {
    input(path, e.to_element(a))
}

/// Parses the command line and runs it.
pub fn dispatch<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome::ok(text)
                }
                _ => Outcome::err(2, text),
            };
        }
    };
    match run(cli) {
        Ok(out) => Outcome::ok(out),
        Err(e) => Outcome::err(1, format!("error: {e}\n")),
    }
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Front(cmd) => front(cmd),
        Command::Framed(cmd) => framed(cmd),
        Command::Path(cmd) => path(cmd),
        Command::Vassiliev(cmd) => vassiliev(cmd),
        Command::Topo(cmd) => topo(cmd),
        Command::Suite(SuiteCmd::Run { seed }) => {
            let corpus = Corpus::load()?;
            let report = suite::run_suite(&corpus, seed);
            Ok(if cli.json {
                report.to_json_lines()
            } else {
                report.to_text()
            })
        }
    }
}

fn front(cmd: FrontCmd) -> Result<String, CliError> {
    Ok(match cmd {
        FrontCmd::Validate { file } => {
            let f = load_front(&file)?;
            let s = validate_front(f.word())?;
            line(json!({
                "valid": true,
                "cusps": s.cusp_count,
                "crossings": s.crossing_count,
                "writhe": s.writhe,
            }))
        }
        FrontCmd::Invariants { file } => {
            let f = load_front(&file)?;
            line(json!({"tb": bennequin(&f), "r": rotation_number(&f)}))
        }
        FrontCmd::Stabilize { i, j, file } => to_line(&FrontJson::from_front(&stabilize(
            &load_front(&file)?,
            i,
            j,
        ))),
        FrontCmd::ToFramed { file } => to_line(&FramedJson::from_framed(&front_to_framed(
            &load_front(&file)?,
        ))),
    })
}

fn framed(cmd: FramedCmd) -> Result<String, CliError> {
    Ok(match cmd {
        FramedCmd::Sl { file } => {
            let k = load_framed(&file)?;
            line(
                json!({"self_linking": self_linking(&k), "writhe": k.diagram().writhe(), "offset": k.offset()}),
            )
        }
        FramedCmd::Obstruction { first, second } => {
            let (a, b) = (load_framed(&first)?, load_framed(&second)?);
            line(
                json!({"m": framing_obstruction(&a, &b)?, "homotopic": framed_homotopic_parity(&a, &b)?}),
            )
        }
        FramedCmd::ApplyMove { mv, file } => {
            let k = load_framed(&file)?;
            let parsed: MoveJson =
                serde_json::from_str(&mv).map_err(|e| CliError::MoveArg(e.into()))?;
            let mv = parsed.to_move().map_err(CliError::MoveArg)?;
            to_line(&FramedJson::from_framed(&apply_move(&k, mv)?))
        }
    })
}

fn parse_group(s: &str) -> Result<usize, CliError> {
    s.strip_prefix("free:")
        .and_then(|n| n.parse().ok())
        .ok_or_else(|| CliError::Group(s.to_string()))
}

fn path(cmd: PathCmd) -> Result<String, CliError> {
    let PathCmd::DeltaI {
        file,
        filter,
        group,
    } = cmd;
    let p = input(&file, read::<PathJson>(&file)?.to_path())?;
    let rank = group.as_deref().map(parse_group).transpose()?;
    let mut out = json!({"delta_i": delta_i(&p)});
    for (i, change) in p.crossing_changes().enumerate() {
        if let (Some(rank), Some(loops)) = (rank, &change.snapshot.loops) {
            let a = Alphabet::orientable(rank);
            a.check(&loops.0)?;
            a.check(&loops.1)?;
        }
        if filter.is_some() && change.snapshot.loops.is_none() {
            return Err(CliError::MissingLoops(i));
        }
    }
    if let Some(Filter::AlphaNu) = filter {
        let v = delta_i_filtered(&p, |s| s.loops.as_ref().is_some_and(|l| alpha_nu(l) == 1));
        out["filtered"] = json!(v);
    }
    Ok(line(out))
}

fn vassiliev(cmd: VassilievCmd) -> Result<String, CliError> {
    let singular = |path: &str| input(path, read::<SingularJson>(path)?.to_singular());
    let ladder = |path: &str| input(path, read::<LadderJson>(path)?.to_ladder());
    Ok(match cmd {
        VassilievCmd::AltSum { file, x } => {
            let s = singular(&file)?;
            let v: i64 = alternating_sum(|k: &FramedDiagram| x.invariant.eval(k), &s);
            line(json!({"value": v, "double_points": s.double_point_count()}))
        }
        VassilievCmd::OrderTest { n, files, x } => {
            let corpus = files
                .iter()
                .map(|f| singular(f))
                .collect::<Result<Vec<_>, _>>()?;
            let ok = is_order_at_most(|k: &FramedDiagram| x.invariant.eval(k), n, &corpus)?;
            line(json!({"order_at_most": ok, "n": n, "diagrams": corpus.len()}))
        }
        VassilievCmd::Extend { n, file } => to_line(&LadderJson::from_ladder(&extend_invariant(
            &ladder(&file)?,
            n,
        )?)),
        VassilievCmd::Verify { n, file } => {
            line(json!({"holds": verify_main_identity(&ladder(&file)?, n)?}))
        }
        VassilievCmd::Roundtrip {
            n,
            fronts,
            floor,
            above,
            x,
        } => {
            let fronts = fronts
                .iter()
                .map(|f| load_front(f))
                .collect::<Result<Vec<_>, _>>()?;
            let ok = roundtrip_check(
                |k: &FramedDiagram| x.invariant.eval(k),
                &fronts,
                n,
                floor,
                above,
            )?;
            line(json!({"roundtrip": ok}))
        }
    })
}

fn topo(cmd: TopoCmd) -> Result<String, CliError> {
    Ok(match cmd {
        TopoCmd::EulerRealizable { file } => {
            let d: DescriptorJson = read(&file)?;
            line(json!({"realizable": euler_realizable(&d.euler, &d.group())?}))
        }
        TopoCmd::ConditionStar { file } => {
            let d = input(&file, read::<DescriptorJson>(&file)?.to_descriptor())?;
            line(match condition_star(&d)? {
                StarOutcome::Holds(rule) => json!({"outcome": "holds", "rule": rule.name()}),
                StarOutcome::Fails { rule, torus } => {
                    json!({"outcome": "fails", "rule": rule.name(), "torus": torus})
                }
                StarOutcome::Unknown => json!({"outcome": "unknown"}),
            })
        }
        TopoCmd::BundleMul { file } => {
            let p: ProductJson = read(&file)?;
            let a = load_alphabet(&file, &p.alphabet, p.format)?;
            let mut acc = BundleGroupElement::identity(&a);
            for e in &p.elements {
                acc = bundle_mul(&acc, &element(&file, e, &a)?)?;
            }
            to_line(&ElementJson::from_element(&acc))
        }
        TopoCmd::AlphaNu { rank, file } => {
            let l: LoopsJson = read(&file)?;
            let pair = input(&file, l.to_pair())?;
            let a = Alphabet::orientable(rank);
            a.check(&pair.0)?;
            a.check(&pair.1)?;
            line(json!({"alpha_nu": alpha_nu(&pair)}))
        }
        TopoCmd::TttWitness { bound, file } => {
            let p: CommutingPairJson = read(&file)?;
            let a = load_alphabet(&file, &p.alphabet, p.format)?;
            let (alpha, beta) = (element(&file, &p.alpha, &a)?, element(&file, &p.beta, &a)?);
            line(match check_toughandtechnical(&alpha, &beta, bound)? {
                TtOutcome::Witness(w) => json!({"witness": {"n": w.n, "i": w.i, "j": w.j}}),
                TtOutcome::NoWitnessFound { bound } => json!({"witness": null, "bound": bound}),
            })
        }
    })
}
