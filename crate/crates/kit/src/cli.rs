//! The `heawood` command line.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use heawood_core::analysis::{self, Bipartition, CycleClass, HamiltonianOutcome};
use heawood_core::fixtures;
use heawood_core::lattice::{self, KSignature};
use heawood_core::quotient::{self, build_general_quotient, build_heawood_graph, QuotientGraph};
use heawood_core::symmetry::{self, GROUP_CAP};
use heawood_core::{IntMatrix, TilingVertex};
use serde::Serialize;

use crate::domain::DomainKind;
use crate::export::{self, GraphFormat, LabeledGraph};
use crate::render;
use crate::KitError;

/// Default node budget for the backtracking Hamiltonian search.
pub const HAMILTONIAN_BUDGET: u64 = 5_000_000;

#[derive(Parser, Debug)]
#[command(
    name = "heawood",
    version,
    about = "Generalized Heawood graphs and their tori"
)]
pub struct Cli {
    /// Write the result here instead of stdout.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
    /// Seed for randomized tie-breaking. Every search is currently
    /// deterministic, so the value only has to parse.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// The graph H_k or the torus T_k.
    Build(BuildArgs),
    /// Face counts of T_k by formula and by enumeration.
    Fvector(FvectorArgs),
    /// Automorphism group orders.
    Aut(AutArgs),
    /// Bipartiteness, Hamiltonian walks, 6-cycles or the chromatic number.
    Analyze(AnalyzeArgs),
    /// The quotient by the row span of an arbitrary 3x3 integer matrix.
    Census(CensusArgs),
    /// SVG of the fundamental tile (d = 2).
    Render(RenderArgs),
    /// Shipped complexes.
    Fixture(FixtureArgs),
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("what").args(["graph", "torus"])))]
pub struct BuildArgs {
    #[arg(short)]
    pub k: KSignature,
    #[arg(long)]
    pub graph: bool,
    #[arg(long)]
    pub torus: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Dot,
    Off,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("which").args(["formula", "enumerate", "both"])))]
pub struct FvectorArgs {
    #[arg(short)]
    pub k: KSignature,
    #[arg(long)]
    pub formula: bool,
    #[arg(long)]
    pub enumerate: bool,
    #[arg(long)]
    pub both: bool,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("which").args(["generated", "brute", "compare"])))]
pub struct AutArgs {
    #[arg(short)]
    pub k: KSignature,
    #[arg(long)]
    pub generated: bool,
    #[arg(long)]
    pub brute: bool,
    #[arg(long)]
    pub compare: bool,
}

#[derive(Args, Debug)]
#[command(group(
    ArgGroup::new("which").required(true).args(["bipartite", "hamiltonian", "backtrack", "six_cycles", "chromatic"])
))]
pub struct AnalyzeArgs {
    #[arg(short)]
    pub k: KSignature,
    #[arg(long)]
    pub bipartite: bool,
    /// Alternating walk along the pair of directions at index `i`.
    #[arg(long, value_name = "I")]
    pub hamiltonian: Option<usize>,
    /// General backtracking search for a Hamiltonian cycle.
    #[arg(long)]
    pub backtrack: bool,
    #[arg(long)]
    pub six_cycles: bool,
    #[arg(long)]
    pub chromatic: bool,
    /// Vertex for --six-cycles, as comma-separated coordinates.
    #[arg(long, allow_hyphen_values = true)]
    pub vertex: Option<String>,
    /// Node budget for --backtrack.
    #[arg(long, default_value_t = HAMILTONIAN_BUDGET)]
    pub budget: u64,
}

#[derive(Args, Debug)]
pub struct CensusArgs {
    /// Rows separated by `;`, entries by `,`.
    #[arg(long, allow_hyphen_values = true)]
    pub matrix: String,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum DomainArg {
    Parallelepiped,
    Permutahedron,
}

#[derive(Args, Debug)]
pub struct RenderArgs {
    #[arg(short)]
    pub k: KSignature,
    #[arg(long, value_enum)]
    pub domain: Option<DomainArg>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixtureName {
    KleinQuartic,
}

#[derive(Args, Debug)]
pub struct FixtureArgs {
    pub name: FixtureName,
    /// Also compute the automorphism group orders.
    #[arg(long)]
    pub aut: bool,
    /// Emit an OFF mesh instead of JSON.
    #[arg(long)]
    pub off: bool,
}

/// Search caps, overridable through `HEAWOOD_CAP`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub brute_force: usize,
    pub chromatic: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            brute_force: symmetry::BRUTE_FORCE_CAP,
            chromatic: analysis::CHROMATIC_CAP,
        }
    }
}

impl Caps {
    /// Reads `HEAWOOD_CAP` if set; it replaces every cap.
    pub fn from_env_value(value: Option<&str>) -> Result<Self, KitError> {
        match value {
            None => Ok(Caps::default()),
            Some(v) => {
                let n: usize = v
                    .trim()
                    .parse()
                    .map_err(|_| KitError::Invalid(format!("HEAWOOD_CAP={v:?} is not a count")))?;
                Ok(Caps {
                    brute_force: n,
                    chromatic: n,
                })
            }
        }
    }
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("plain data serializes");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct FvectorReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    formula: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    enumerated: Option<Vec<u64>>,
    #[serde(rename = "match", skip_serializing_if = "Option::is_none")]
    matches: Option<bool>,
}

#[derive(Serialize)]
struct AutReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    generated: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    brute: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    exceptional: Option<bool>,
}

#[derive(Serialize)]
struct BipartiteReport {
    bipartite: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    coloring: Option<Vec<u8>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    odd_cycle: Option<Vec<String>>,
}

#[derive(Serialize)]
struct HamiltonianReport {
    outcome: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    length: Option<usize>,
    vertices: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    cycle: Option<Vec<String>>,
}

#[derive(Serialize)]
struct CycleEntry {
    vertices: Vec<String>,
    class: &'static str,
}

#[derive(Serialize)]
struct SixCycleReport {
    vertex: String,
    count: usize,
    cycles: Vec<CycleEntry>,
}

#[derive(Serialize)]
struct ChromaticReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    chromatic: Option<usize>,
    lower: usize,
    upper: usize,
    exact: bool,
}

#[derive(Serialize)]
struct CensusReport {
    matrix: Vec<Vec<i64>>,
    quotient_order: String,
    vertices: usize,
    edges: usize,
    regular_degree: Option<usize>,
    delta: bool,
}

#[derive(Serialize)]
struct FixtureReport {
    name: &'static str,
    vertices: usize,
    edges: u64,
    facets: usize,
    euler_characteristic: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    simplicial_aut: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    dual_aut: Option<u64>,
}

#[derive(Serialize)]
struct SceneHexagon {
    offset: Vec<i64>,
    color: &'static str,
    points: Vec<[i64; 3]>,
}

#[derive(Serialize)]
struct SceneReport {
    signature: String,
    scale: i64,
    hexagons: Vec<SceneHexagon>,
    #[serde(skip_serializing_if = "Option::is_none")]
    domain: Option<(&'static str, Vec<[i64; 3]>)>,
}

fn labels(q: &QuotientGraph, ids: &[usize]) -> Vec<String> {
    ids.iter().map(|&i| q.vertex(i).label()).collect()
}

fn parse_matrix(text: &str) -> Result<IntMatrix, KitError> {
    let rows = text
        .split(';')
        .map(|r| {
            r.split(',')
                .map(|x| {
                    x.trim()
                        .parse::<i64>()
                        .map_err(|_| KitError::Invalid(format!("bad matrix entry {x:?}")))
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(IntMatrix::from_rows(&rows)?)
}

fn fvector(a: &FvectorArgs) -> Result<String, KitError> {
    let (want_formula, want_enum) = match (a.formula, a.enumerate) {
        (true, _) => (true, false),
        (_, true) => (false, true),
        _ => (true, true),
    };
    let formula = if want_formula {
        Some(quotient::fvector_formula(&a.k)?.0)
    } else {
        None
    };
    let enumerated = if want_enum {
        Some(quotient::build_torus_complex(&a.k)?.f_vector().0)
    } else {
        None
    };
    let matches = match (&formula, &enumerated) {
        (Some(f), Some(e)) => Some(f == e),
        _ => None,
    };
    Ok(json_line(&FvectorReport {
        formula,
        enumerated,
        matches,
    }))
}

fn aut(a: &AutArgs, caps: Caps) -> Result<String, KitError> {
    let q = build_heawood_graph(&a.k)?;
    let (want_gen, want_brute) = match (a.generated, a.brute) {
        (true, _) => (true, false),
        (_, true) => (false, true),
        _ => (true, true),
    };
    let generated = if want_gen {
        let gens = symmetry::standard_generators(&q)?;
        Some(symmetry::group_closure(q.vertex_count(), &gens, GROUP_CAP)?.order())
    } else {
        None
    };
    let brute = if want_brute {
        Some(symmetry::brute_force_automorphisms(
            q.graph(),
            caps.brute_force,
        )?)
    } else {
        None
    };
    let exceptional = match (generated, brute) {
        (Some(g), Some(b)) => Some(g as u64 != b),
        _ => None,
    };
    Ok(json_line(&AutReport {
        generated,
        brute,
        exceptional,
    }))
}

fn analyze(a: &AnalyzeArgs, caps: Caps) -> Result<String, KitError> {
    let q = build_heawood_graph(&a.k)?;
    if a.bipartite {
        let report = match analysis::is_bipartite(q.graph()) {
            Bipartition::Coloring(c) => BipartiteReport {
                bipartite: true,
                coloring: Some(c),
                odd_cycle: None,
            },
            Bipartition::OddCycle(c) => BipartiteReport {
                bipartite: false,
                coloring: None,
                odd_cycle: Some(labels(&q, &c)),
            },
        };
        return Ok(json_line(&report));
    }
    if let Some(i) = a.hamiltonian {
        let r = analysis::hamiltonian_alternating_on(&q, i)?;
        return Ok(json_line(&hamiltonian_report(
            &q,
            format!("alternating({i})"),
            r.outcome,
        )?));
    }
    if a.backtrack {
        let r = analysis::hamiltonian_backtracking(q.graph(), a.budget);
        return Ok(json_line(&hamiltonian_report(
            &q,
            "backtracking".into(),
            r.outcome,
        )?));
    }
    if a.six_cycles {
        let v = match &a.vertex {
            Some(s) => {
                let coords = s
                    .split(',')
                    .map(|x| {
                        x.trim()
                            .parse::<i64>()
                            .map_err(|_| KitError::Invalid(format!("bad coordinate {x:?}")))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                q.index_of_coords(&coords)?
            }
            None => q.index_of(&TilingVertex::seed(q.d()))?,
        };
        let cycles = analysis::six_cycles_through(&q, v)?;
        let entries = cycles
            .iter()
            .map(|c| CycleEntry {
                vertices: labels(&q, &c.vertices),
                class: match c.classification {
                    CycleClass::HexagonFace => "hexagon-face",
                    CycleClass::SquareFace => "square-face",
                    CycleClass::Other => "other",
                },
            })
            .collect();
        return Ok(json_line(&SixCycleReport {
            vertex: q.vertex(v).label(),
            count: cycles.len(),
            cycles: entries,
        }));
    }
    let b = analysis::chromatic_number(q.graph(), caps.chromatic);
    let text = json_line(&ChromaticReport {
        chromatic: b.value(),
        lower: b.lower,
        upper: b.upper,
        exact: b.exact,
    });
    if b.exact {
        Ok(text)
    } else {
        Err(KitError::Budget(format!(
            "chromatic number not decided within cap, bounds: {}",
            text.trim_end()
        )))
    }
}

fn hamiltonian_report(
    q: &QuotientGraph,
    mode: String,
    outcome: HamiltonianOutcome,
) -> Result<HamiltonianReport, KitError> {
    let n = q.vertex_count();
    let r = match outcome {
        HamiltonianOutcome::HamiltonianCycle(c) => HamiltonianReport {
            outcome: "hamiltonian-cycle",
            length: Some(c.len()),
            vertices: n,
            cycle: Some(labels(q, &c)),
        },
        HamiltonianOutcome::PrematureClosure { length } => HamiltonianReport {
            outcome: "premature-closure",
            length: Some(length),
            vertices: n,
            cycle: None,
        },
        HamiltonianOutcome::NoneFound => HamiltonianReport {
            outcome: "none-found",
            length: None,
            vertices: n,
            cycle: None,
        },
        HamiltonianOutcome::Indeterminate => {
            return Err(KitError::Budget(format!(
                "{mode}: search budget exhausted on {n} vertices"
            )));
        }
    };
    Ok(r)
}

fn census(a: &CensusArgs) -> Result<String, KitError> {
    let m = parse_matrix(&a.matrix)?;
    let order = lattice::quotient_order_general(&m)?;
    let q = build_general_quotient(&m)?;
    Ok(json_line(&CensusReport {
        matrix: m.to_i64_rows().ok_or(heawood_core::Error::Overflow)?,
        quotient_order: order.to_string(),
        vertices: q.vertex_count(),
        edges: q.edge_count(),
        regular_degree: q.graph().regular_degree(),
        delta: q.is_delta(),
    }))
}

fn build(a: &BuildArgs) -> Result<String, KitError> {
    let q = build_heawood_graph(&a.k)?;
    if a.torus {
        let t = q.torus_complex()?;
        return match a.format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&export::complex_document(
                    &format!("T({})", a.k),
                    &t,
                ))?;
                s.push('\n');
                Ok(s)
            }
            Format::Off => Ok(export::export_complex_off(
                &t,
                export::torus_coordinates(&q).as_deref(),
            )),
            Format::Dot => Err(KitError::Invalid(
                "the torus has no DOT form; use json or off".into(),
            )),
        };
    }
    let lg = LabeledGraph::from_quotient(&q);
    match a.format {
        Format::Json => Ok(export::export_graph(&lg, GraphFormat::Json)),
        Format::Dot => Ok(export::export_graph(&lg, GraphFormat::Dot)),
        Format::Off => Err(KitError::Invalid("OFF needs --torus".into())),
    }
}

fn render_cmd(a: &RenderArgs, to_file: bool) -> Result<String, KitError> {
    let kind = a.domain.map(|d| match d {
        DomainArg::Parallelepiped => DomainKind::Parallelepiped,
        DomainArg::Permutahedron => DomainKind::PermutahedronDomain,
    });
    let scene = render::fundamental_tile_scene(&a.k, kind)?;
    if to_file {
        return Ok(render::to_svg(&scene));
    }
    Ok(json_line(&SceneReport {
        signature: a.k.to_string(),
        scale: render::SCALE,
        hexagons: scene
            .hexagons
            .iter()
            .map(|h| SceneHexagon {
                offset: h.offset.coeffs().to_vec(),
                color: h.color,
                points: h.outline.points.clone(),
            })
            .collect(),
        domain: scene
            .domain
            .as_ref()
            .map(|(k, p)| (k.name(), p.points.clone())),
    }))
}

fn fixture(a: &FixtureArgs) -> Result<String, KitError> {
    let FixtureName::KleinQuartic = a.name;
    let c = fixtures::klein_quartic();
    if a.off {
        return Ok(export::export_complex_off(&c, None));
    }
    let f = c.f_vector().0;
    let (simplicial_aut, dual_aut) = if a.aut {
        (
            Some(fixtures::klein_quartic_aut_order()?),
            Some(fixtures::klein_quartic_dual_aut_order()?),
        )
    } else {
        (None, None)
    };
    Ok(json_line(&FixtureReport {
        name: "klein-quartic",
        vertices: c.vertex_count(),
        edges: f[1],
        facets: c.facets().len(),
        euler_characteristic: c.euler_characteristic(),
        simplicial_aut,
        dual_aut,
    }))
}

/// Runs one parsed invocation and returns the text to emit.
pub fn execute(cli: &Cli, caps: Caps) -> Result<String, KitError> {
    match &cli.command {
        Command::Build(a) => build(a),
        Command::Fvector(a) => fvector(a),
        Command::Aut(a) => aut(a, caps),
        Command::Analyze(a) => analyze(a, caps),
        Command::Census(a) => census(a),
        Command::Render(a) => render_cmd(a, cli.output.is_some()),
        Command::Fixture(a) => fixture(a),
    }
}

/// Parses `args`, runs, writes the result to `-o` or `stdout`, and
/// returns the exit status. Diagnostics go to `stderr`.
pub fn run<I, T>(
    args: I,
    cap_env: Option<&str>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                2
            } else {
                let _ = write!(stdout, "{text}");
                0
            };
        }
    };
    let result = Caps::from_env_value(cap_env)
        .and_then(|caps| execute(&cli, caps))
        .and_then(|text| {
            match &cli.output {
                Some(path) => std::fs::write(path, text)?,
                None => stdout.write_all(text.as_bytes())?,
            }
            Ok(())
        });
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
