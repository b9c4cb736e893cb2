//! The `cellcrys` command line: argument structs and their execution.
//!
//! [`execute`] renders the whole output into a string so that it can be
//! tested without spawning a process; the binary only prints it and maps
//! [`Outcome::pass`] to the exit code.

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::braid::BraidScript;
use crate::cartan::{CartanDatum, Family, Word};
use crate::checks::{self, AgreementReport, InverseReport};
use crate::crystal::{CrystalElement, ElementJson, Op, WeightVector};
use crate::epsstar::{EpsStarEngine, UnitReport};
use crate::error::{Error, Result};
use crate::graph::{crystal_graph, GraphOptions, DEFAULT_VERTEX_CAP};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "cellcrys",
    version,
    about = "Cellular crystals of classical type"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apply Kashiwara operators and print every intermediate element
    Apply(ApplyArgs),
    /// Compute eps_i^* by braid moves and by closed formulas
    Epsstar(EpsStarArgs),
    /// Run the law checks, the eps^* agreement and optionally the unit scan
    Verify(VerifyArgs),
    /// Export the crystal graph on a coordinate box as DOT
    Graph(GraphArgs),
    /// Print the word trace of the rightmost-move procedure
    TraceExample(TraceArgs),
}

#[derive(Debug, Clone, Args)]
pub struct DatumArg {
    /// Cartan type such as A4, B3, C2 or D5
    #[arg(value_name = "DATUM")]
    pub positional: Option<String>,
    #[arg(long = "datum", value_name = "DATUM")]
    pub flag: Option<String>,
}

impl DatumArg {
    pub fn resolve(&self) -> Result<CartanDatum> {
        match (&self.positional, &self.flag) {
            (Some(a), Some(b)) if a != b => Err(Error::Parse(format!(
                "datum given twice with different values: {a} and {b}"
            ))),
            (Some(s), _) | (None, Some(s)) => s.parse(),
            (None, None) => Err(Error::Parse("a Cartan type is required, e.g. A3".into())),
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct ElementArgs {
    /// Word such as 121 or 1,2,1 (default: the fixed longest word)
    #[arg(long)]
    pub word: Option<String>,
    /// z-coordinates, comma separated
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["x", "element"])]
    pub z: Option<String>,
    /// x-coordinates (x = -z), comma separated
    #[arg(long, allow_hyphen_values = true, conflicts_with = "element")]
    pub x: Option<String>,
    /// {"word": [...], "z": [...]} inline, or a path to such a file
    #[arg(long)]
    pub element: Option<String>,
}

impl ElementArgs {
    pub fn resolve(&self, datum: &CartanDatum) -> Result<CrystalElement> {
        if let Some(e) = &self.element {
            let text = if e.trim_start().starts_with('{') {
                e.clone()
            } else {
                fs::read_to_string(e).map_err(|err| Error::Parse(format!("{e}: {err}")))?
            };
            let json: ElementJson =
                serde_json::from_str(&text).map_err(|err| Error::Parse(err.to_string()))?;
            return json.into_element(datum);
        }
        let word = match &self.word {
            Some(w) => Word::parse(datum, w)?,
            None => datum.longest_word(),
        };
        match (&self.z, &self.x) {
            (Some(z), _) => CrystalElement::new(word, parse_ints(z)?),
            (None, Some(x)) => CrystalElement::from_x(word, parse_ints(x)?),
            (None, None) => Ok(CrystalElement::zero(word)),
        }
    }
}

pub fn parse_ints(s: &str) -> Result<Vec<i64>> {
    s.trim()
        .trim_start_matches('[')
        .trim_end_matches(']')
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| Error::Parse(format!("not an integer: {t:?}")))
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct ApplyArgs {
    #[command(flatten)]
    pub datum: DatumArg,
    #[command(flatten)]
    pub element: ElementArgs,
    /// Operators such as "f1 f2 e1"
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub ops: String,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct EpsStarArgs {
    #[command(flatten)]
    pub datum: DatumArg,
    #[command(flatten)]
    pub element: ElementArgs,
    /// Instead of one element, compare both computations on random points
    #[arg(long, default_value_t = 0)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Sampling range [-r, r] for --samples
    #[arg(long, default_value_t = 5)]
    pub range: i64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub datum: DatumArg,
    /// Minimum morphism cases per legal move, and eps^* sample count
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Radius of the box for the unit scan (skipped when absent)
    #[arg(long)]
    pub unit_box: Option<i64>,
    /// Scan the whole box instead of only the weight-zero points
    #[arg(long)]
    pub full_scan: bool,
    /// Also print the rightmost-move trace of the default letter
    #[arg(long)]
    pub trace_example: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct GraphArgs {
    #[command(flatten)]
    pub datum: DatumArg,
    /// Word such as 121 (default: the fixed longest word)
    #[arg(long)]
    pub word: Option<String>,
    #[arg(long, alias = "unit-box", default_value_t = 1)]
    pub radius: i64,
    /// Include edges that leave the box
    #[arg(long)]
    pub frontier: bool,
    #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
    pub cap: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct TraceArgs {
    #[command(flatten)]
    pub datum: DatumArg,
    /// Letter to move (default: n-1 for type A, 2 otherwise)
    #[arg(long)]
    pub letter: Option<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// Rendered output plus whether every check passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub pass: bool,
    pub out: Option<PathBuf>,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.pass {
            EXIT_PASS
        } else {
            EXIT_FAIL
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data serializes");
    s.push('\n');
    s
}

fn format_or(output: &OutputArgs, default: Format, allowed: &[Format]) -> Result<Format> {
    let f = output.format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(Error::Parse(format!("format {f:?} is not available here")))
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Apply(a) => cmd_apply(a),
        Command::Epsstar(a) => cmd_epsstar(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Graph(a) => cmd_graph(a),
        Command::TraceExample(a) => cmd_trace_example(a),
    }
}

#[derive(Debug, Serialize)]
struct ApplyStep {
    op: Option<String>,
    z: Vec<i64>,
    wt: WeightVector,
    eps: BTreeMap<usize, i64>,
    phi: BTreeMap<usize, i64>,
}

fn describe(op: Option<Op>, x: &CrystalElement) -> Result<ApplyStep> {
    let mut letters = x.word().letters().to_vec();
    letters.sort_unstable();
    letters.dedup();
    let mut eps = BTreeMap::new();
    let mut phi = BTreeMap::new();
    for i in letters {
        eps.insert(i, x.eps(i)?);
        phi.insert(i, x.phi(i)?);
    }
    Ok(ApplyStep {
        op: op.map(|o| o.to_string()),
        z: x.z().to_vec(),
        wt: x.wt(),
        eps,
        phi,
    })
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

pub fn cmd_apply(a: &ApplyArgs) -> Result<Outcome> {
    let datum = a.datum.resolve()?;
    let x = a.element.resolve(&datum)?;
    let ops = Op::parse_list(&a.ops)?;
    let trace = x.apply_ops(&ops)?;
    let mut steps = vec![describe(None, &x)?];
    for (op, y) in ops.iter().zip(&trace) {
        steps.push(describe(Some(*op), y)?);
    }
    let text = match format_or(&a.output, Format::Text, &[Format::Text, Format::Json])? {
        Format::Json => {
            #[derive(Serialize)]
            struct Doc<'a> {
                datum: String,
                word: &'a [usize],
                steps: &'a [ApplyStep],
            }
            to_json(&Doc {
                datum: datum.label(),
                word: x.word().letters(),
                steps: &steps,
            })
        }
        _ => {
            let mut s = format!("{} word {}\n", datum.label(), x.word());
            for st in &steps {
                let head = st.op.clone().unwrap_or_else(|| "start".into());
                let eps: Vec<String> = st.eps.iter().map(|(i, v)| format!("{i}:{v}")).collect();
                let phi: Vec<String> = st.phi.iter().map(|(i, v)| format!("{i}:{v}")).collect();
                s += &format!(
                    "{head:>5}  z=({})  wt={}  eps=[{}]  phi=[{}]\n",
                    join(&st.z),
                    st.wt,
                    eps.join(" "),
                    phi.join(" ")
                );
            }
            s
        }
    };
    Ok(Outcome {
        text,
        pass: true,
        out: a.output.out.clone(),
    })
}

pub fn cmd_epsstar(a: &EpsStarArgs) -> Result<Outcome> {
    let datum = a.datum.resolve()?;
    let engine = EpsStarEngine::new(&datum)?;
    let format = format_or(&a.output, Format::Text, &[Format::Text, Format::Json])?;
    if a.samples > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
        let pts = checks::uniform_points(&mut rng, engine.word().len(), a.range, a.samples);
        let rep = checks::eps_star_agreement(&engine, pts)?;
        let text = match format {
            Format::Json => to_json(&rep),
            _ => render_agreement(&rep, a.seed),
        };
        return Ok(Outcome {
            text,
            pass: rep.pass(),
            out: a.output.out.clone(),
        });
    }
    let x = a.element.resolve(&datum)?;
    let rep = engine.report(&x)?;
    let text = match format {
        Format::Json => to_json(&rep),
        _ => {
            let mut s = format!("{} z=({})\n", rep.datum, join(&rep.z));
            s += "  i  alg  formula  moves  final word\n";
            for e in &rep.entries {
                let w = Word::new(&datum, e.final_word.clone())?;
                s += &format!(
                    "{:>3}  {:>3}  {:>7}  {:>5}  {}{}\n",
                    e.i,
                    e.eps_star_alg,
                    e.eps_star_formula,
                    e.script_length,
                    w,
                    if e.eps_star_alg == e.eps_star_formula {
                        ""
                    } else {
                        "  MISMATCH"
                    }
                );
            }
            s += if rep.all_match() {
                "all match\n"
            } else {
                "mismatch found\n"
            };
            s
        }
    };
    Ok(Outcome {
        text,
        pass: rep.all_match(),
        out: a.output.out.clone(),
    })
}

fn render_agreement(rep: &AgreementReport, seed: u64) -> String {
    let mut s = format!(
        "{}: {} points, {} comparisons, seed {seed}\n",
        rep.datum, rep.points, rep.comparisons
    );
    match &rep.first_mismatch {
        None => s += "all match\n",
        Some((z, i, a, f)) => {
            s += &format!(
                "{} mismatches; first at i={i}, z=({}): alg {a}, formula {f}\n",
                rep.mismatches,
                join(z)
            )
        }
    }
    s
}

#[derive(Debug, Serialize)]
pub struct MorphismSummary {
    pub cases: u64,
    pub violation: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub datum: String,
    pub seed: u64,
    pub morphism: MorphismSummary,
    pub inverse: InverseReport,
    pub eps_star: AgreementReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unit: Option<UnitReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<String>>,
    pub pass: bool,
}

pub fn verify_report(a: &VerifyArgs) -> Result<VerifyReport> {
    let datum = a.datum.resolve()?;
    let engine = EpsStarEngine::new(&datum)?;
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let (cases, violation) = checks::longest_word_morphisms(&datum, a.samples, &mut rng)?;
    let inverse = checks::inverse_laws(2);
    let pts = checks::uniform_points(&mut rng, engine.word().len(), 5, a.samples);
    let eps_star = checks::eps_star_agreement(&engine, pts)?;
    let unit = match a.unit_box {
        Some(r) if r < 0 => return Err(Error::Parse(format!("negative box radius {r}"))),
        Some(r) => Some(engine.verify_unit_theorem(r, a.full_scan)),
        None => None,
    };
    let trace = if a.trace_example {
        let script = engine.script(default_letter(&datum))?;
        Some(script.trace().iter().map(Word::to_string).collect())
    } else {
        None
    };
    let pass = violation.is_none()
        && inverse.pass()
        && eps_star.pass()
        && unit.as_ref().is_none_or(|u| u.pass);
    Ok(VerifyReport {
        datum: datum.label(),
        seed: a.seed,
        morphism: MorphismSummary { cases, violation },
        inverse,
        eps_star,
        unit,
        trace,
        pass,
    })
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

pub fn render_verify(r: &VerifyReport) -> String {
    let mut s = format!("verify {} (seed {})\n", r.datum, r.seed);
    s += &format!(
        "morphism laws: {} ({} cases)\n",
        verdict(r.morphism.violation.is_none()),
        r.morphism.cases
    );
    if let Some(v) = &r.morphism.violation {
        s += &format!("  {v}\n");
    }
    s += &format!(
        "inverse laws: {} (phi1 {} cases, phi2 {} cases)\n",
        verdict(r.inverse.pass()),
        r.inverse.phi1_cases,
        r.inverse.phi2_cases
    );
    s += &format!(
        "eps* alg vs formula: {} ({} points, {} mismatches)\n",
        verdict(r.eps_star.pass()),
        r.eps_star.points,
        r.eps_star.mismatches
    );
    if let Some(u) = &r.unit {
        s += &format!(
            "unit scan radius {}: {} ({} points, {} of weight zero, {} with all eps* zero at weight zero",
            u.radius,
            verdict(u.pass),
            u.points_scanned,
            u.wt_zero_count,
            u.unit_candidates
        );
        if let Some(c) = u.eps_star_zero_count {
            s += &format!(", {c} with all eps* zero overall");
        }
        s += ")\n";
        if u.pass {
            s += "  unique unit at z = 0\n";
        }
    }
    if let Some(t) = &r.trace {
        s += "trace:\n";
        for w in t {
            s += &format!("  {w}\n");
        }
    }
    s += &format!("overall: {}\n", verdict(r.pass));
    s
}

pub fn cmd_verify(a: &VerifyArgs) -> Result<Outcome> {
    let rep = verify_report(a)?;
    let text = match format_or(&a.output, Format::Text, &[Format::Text, Format::Json])? {
        Format::Json => to_json(&rep),
        _ => render_verify(&rep),
    };
    Ok(Outcome {
        text,
        pass: rep.pass,
        out: a.output.out.clone(),
    })
}

pub fn cmd_graph(a: &GraphArgs) -> Result<Outcome> {
    let datum = a.datum.resolve()?;
    let word = match &a.word {
        Some(w) => Word::parse(&datum, w)?,
        None => datum.longest_word(),
    };
    let g = crystal_graph(
        &word,
        GraphOptions {
            radius: a.radius,
            frontier: a.frontier,
            vertex_cap: a.cap,
        },
    )?;
    let text = match format_or(&a.output, Format::Dot, &[Format::Dot, Format::Json])? {
        Format::Json => {
            #[derive(Serialize)]
            struct Doc<'a> {
                word: &'a [usize],
                vertices: &'a [Vec<i64>],
                in_box: usize,
                edges: Vec<(usize, usize, usize)>,
            }
            to_json(&Doc {
                word: word.letters(),
                vertices: &g.vertices,
                in_box: g.in_box,
                edges: g.edges.iter().map(|e| (e.from, e.to, e.letter)).collect(),
            })
        }
        _ => g.to_dot(),
    };
    Ok(Outcome {
        text,
        pass: true,
        out: a.output.out.clone(),
    })
}

pub fn default_letter(datum: &CartanDatum) -> usize {
    match datum.family() {
        Family::A => datum.rank().saturating_sub(1).max(1),
        _ => 2,
    }
}

pub fn cmd_trace_example(a: &TraceArgs) -> Result<Outcome> {
    let datum = a.datum.resolve()?;
    let i = a.letter.unwrap_or_else(|| default_letter(&datum));
    let script = crate::epsstar::rightmost_script(&datum, i)?;
    let text = match format_or(&a.output, Format::Text, &[Format::Text, Format::Json])? {
        Format::Json => {
            #[derive(Serialize)]
            struct Doc {
                datum: String,
                letter: usize,
                script: crate::braid::ScriptJson,
                trace: Vec<Vec<usize>>,
            }
            to_json(&Doc {
                datum: datum.label(),
                letter: i,
                script: script.to_json(),
                trace: script
                    .trace()
                    .iter()
                    .map(|w| w.letters().to_vec())
                    .collect(),
            })
        }
        _ => render_trace(&datum, i, &script),
    };
    Ok(Outcome {
        text,
        pass: true,
        out: a.output.out.clone(),
    })
}

fn render_trace(datum: &CartanDatum, i: usize, script: &BraidScript) -> String {
    let mut s = format!("{} letter {i}: {} moves\n", datum.label(), script.len());
    let trace = script.trace();
    s += &format!("        {}\n", trace[0]);
    for (m, w) in script.moves().iter().zip(&trace[1..]) {
        s += &format!("{:<20} {}\n", m.to_string(), w);
    }
    s
}

/// Parses, executes and writes output; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            match &outcome.out {
                Some(path) => {
                    if let Err(e) = fs::write(path, &outcome.text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return EXIT_USAGE;
                    }
                }
                None => print!("{}", outcome.text),
            }
            outcome.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}
