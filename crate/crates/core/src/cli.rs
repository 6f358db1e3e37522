//! Command-line front end for `cuberips`.
//!
//! Exit codes: 0 on success or PASS, 1 when a certificate fails, 2 on usage or
//! input errors, 3 when a resource cap is hit.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::bitset::VertexSet;
use crate::bounds::{bound_report, total_domination_lb, BoundReport};
use crate::certificates::{
    parse_classes, parse_detectors, q4_classes, q4_detectors, verify_q4_rank9, verify_q5_generator,
    verify_tds_propositions,
};
use crate::chain::{ChainDocument, Ring};
use crate::complex::{ComplexView, SimplexListDocument, DEFAULT_MAX_SIMPLICES};
use crate::error::{Error, Result};
use crate::homology::{betti, betti_of_complex, boundary, coboundary, pair, BettiProfile};
use crate::hypercube::{Params, Vertex};
use crate::koszul::{independence_certificate, IndependenceVerdict, KoszulCochain};
use crate::linalg::DEFAULT_MAX_MATRIX;
use crate::taylor::{build_dual_complex, complement_graph_stats, dual_homology_check, DualComparison, DualVariant};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

/// Environment variable limiting the worker thread count.
pub const THREADS_ENV: &str = "CUBERIPS_THREADS";

#[derive(Debug, Parser)]
#[command(name = "cuberips", version, about = "Vietoris-Rips complexes of hypercube graphs")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Emit JSON instead of a table.
    #[arg(long, global = true)]
    pub json: bool,
    /// Cap on enumerated simplices.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_SIMPLICES)]
    pub max_simplices: usize,
    /// Cap on either side of a Smith-form matrix.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_MATRIX)]
    pub max_matrix: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Connectivity and coconnectivity bounds for VR(Q_n; r).
    Bounds {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: u32,
    },
    /// Reduced Betti numbers of VR(Q_n; r) or a full subcomplex.
    Homology {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: u32,
        /// Highest degree to compute.
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value = "q")]
        ring: Ring,
        /// Comma-separated vertex subset.
        #[arg(long, value_delimiter = ',')]
        vertices: Option<Vec<Vertex>>,
    },
    /// Simplices of VR(Q_n; r) up to a dimension, as JSON.
    Skeleton {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        dim: usize,
        #[arg(long, value_delimiter = ',')]
        vertices: Option<Vec<Vertex>>,
        /// Write the simplex list here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Homology of the dual complexes built from Taylor generators.
    Dual {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: u32,
        /// `C` (admissible products) or `J` (no antipodal pair).
        #[arg(long)]
        variant: DualVariant,
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value = "q")]
        ring: Ring,
        /// Write the complex as a simplex list here.
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Check a certificate.
    Verify {
        #[command(subcommand)]
        kind: VerifyKind,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyKind {
    /// Whether a simplicial cochain is a cocycle in VR(Q_n; r).
    Cocycle {
        #[arg(long)]
        file: PathBuf,
    },
    /// Whether a simplicial chain is a cycle in VR(Q_n; r).
    Cycle {
        #[arg(long)]
        file: PathBuf,
    },
    /// The Kronecker pairing of a chain with a cochain; PASS when nonzero.
    Pairing {
        #[arg(long)]
        chain: PathBuf,
        #[arg(long)]
        cochain: PathBuf,
    },
    /// Triangular independence of Koszul classes against detector sets.
    Independence {
        /// Class file; defaults to the bundled classes of VR(Q_4; 2).
        #[arg(long)]
        classes: Option<PathBuf>,
        /// Detector file; defaults to the bundled detectors.
        #[arg(long)]
        detectors: Option<PathBuf>,
    },
    /// The degree-4 generator of VR(Q_5; 3).
    Q5,
    /// The nine classes of H^3(VR(Q_4; 2)).
    Q4,
    /// Total domination of G^c_{5,3} by detected spheres.
    Tds,
}

/// Rendered result of a command.
struct Output {
    code: i32,
    json: serde_json::Value,
    table: String,
}

impl Output {
    fn new(passed: bool, json: impl Serialize, table: String) -> Result<Self> {
        Ok(Self { code: if passed { EXIT_PASS } else { EXIT_FAIL }, json: serde_json::to_value(json)?, table })
    }
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } => EXIT_CAP,
        Error::InvalidParams(_)
        | Error::VertexOutOfRange { .. }
        | Error::OffsetOverlap { .. }
        | Error::Parse(_)
        | Error::Mismatch(_)
        | Error::DivisionByZero(_)
        | Error::Template(_)
        | Error::Unsorted => EXIT_USAGE,
        _ => EXIT_FAIL,
    }
}

/// Parse `args` (including the program name), run, and write to the given
/// streams. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    configure_threads();
    match execute(&cli) {
        Ok(o) => {
            let text = if cli.global.json {
                serde_json::to_string_pretty(&o.json).expect("serializable") + "\n"
            } else {
                o.table
            };
            let _ = out.write_all(text.as_bytes());
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var(THREADS_ENV).ok().and_then(|s| s.parse::<usize>().ok()) {
        // a pool may already exist when called repeatedly in one process
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn execute(cli: &Cli) -> Result<Output> {
    let g = &cli.global;
    match &cli.command {
        Command::Bounds { n, r } => cmd_bounds(*n, *r),
        Command::Homology { n, r, dim, ring, vertices } => cmd_homology(*n, *r, *dim, *ring, vertices.as_deref(), g),
        Command::Skeleton { n, r, dim, vertices, out } => {
            cmd_skeleton(*n, *r, *dim, vertices.as_deref(), out.as_deref(), g)
        }
        Command::Dual { n, r, variant, dim, ring, export } => {
            cmd_dual(*n, *r, *variant, *dim, *ring, export.as_deref(), g)
        }
        Command::Verify { kind } => cmd_verify(kind, g),
    }
}

fn cmd_bounds(n: u32, r: u32) -> Result<Output> {
    let rep: BoundReport = bound_report(n, r)?;
    let mut t = String::new();
    let _ = writeln!(t, "VR(Q_{n}; {r})");
    let _ = writeln!(t, "  alpha                    {}", rep.alpha);
    let _ = writeln!(t, "  connectivity lower bound {}", rep.conn_lb);
    let _ = writeln!(t, "  lambda_max(G^c)          {}", rep.spectral_lambda);
    let _ = writeln!(t, "  spectral lower bound     {}", rep.spectral_conn_lb);
    match (&rep.coconn_ub, &rep.coconn_exact) {
        (Some(d), Some(x)) => {
            let _ = writeln!(t, "  coconnectivity bound     {d} (exact {x})");
        }
        _ => {
            let _ = writeln!(t, "  coconnectivity bound     n/a (n <= r + 1)");
        }
    }
    let _ = writeln!(t, "  Kleitman max cardinality {}", rep.kleitman_max_card);
    Output::new(true, rep, t)
}

fn view_for(n: u32, r: u32, vertices: Option<&[Vertex]>) -> Result<ComplexView> {
    let params = Params::new(n, r)?;
    match vertices {
        Some(vs) => {
            for &v in vs {
                params.check_vertex(v)?;
            }
            ComplexView::restricted(params, VertexSet::from_slice(vs))
        }
        None => Ok(ComplexView::new(params)),
    }
}

#[derive(Serialize)]
struct HomologyOutput {
    n: u32,
    r: u32,
    vertices: Option<Vec<Vertex>>,
    betti: BettiProfile,
}

fn render_betti(t: &mut String, b: &BettiProfile) {
    for (k, v) in b.from_zero().iter().enumerate() {
        let _ = write!(t, "  b~_{k} = {v}");
        if let Some(tor) = b.torsion.get(&(k as i64)) {
            let _ = write!(t, "  torsion {tor:?}");
        }
        t.push('\n');
    }
}

fn cmd_homology(n: u32, r: u32, dim: usize, ring: Ring, vertices: Option<&[Vertex]>, g: &GlobalOpts) -> Result<Output> {
    let view = view_for(n, r, vertices)?;
    let b = betti(&view, dim, ring, g.max_simplices, g.max_matrix)?;
    let mut t = format!("reduced Betti numbers of VR(Q_{n}; {r}) over {ring}\n");
    render_betti(&mut t, &b);
    Output::new(true, HomologyOutput { n, r, vertices: vertices.map(<[Vertex]>::to_vec), betti: b }, t)
}

fn cmd_skeleton(
    n: u32,
    r: u32,
    dim: usize,
    vertices: Option<&[Vertex]>,
    out: Option<&Path>,
    g: &GlobalOpts,
) -> Result<Output> {
    let view = view_for(n, r, vertices)?;
    let cx = view.enumerate_skeleton(dim, g.max_simplices)?;
    let doc: SimplexListDocument = cx.to_document(view.params());
    let mut t = format!("f-vector {:?}\n", cx.f_vector());
    if let Some(path) = out {
        write_json(path, &doc)?;
        let _ = writeln!(t, "written to {}", path.display());
    }
    Output::new(true, doc, t)
}

fn write_json(path: &Path, value: &impl Serialize) -> Result<()> {
    let text = serde_json::to_string_pretty(value)? + "\n";
    std::fs::write(path, text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

#[derive(Serialize)]
struct DualOutput {
    n: u32,
    r: u32,
    variant: DualVariant,
    vertices: usize,
    face_counts: Vec<usize>,
    betti: BettiProfile,
    /// Lower bound on the total domination number of the complement graph
    /// (`J` only).
    gamma_t_lb: Option<u64>,
    /// Connectivity implied by that bound; `-2` when it says nothing.
    conn_lb: Option<i64>,
    consistent: bool,
    comparison: Option<DualComparison>,
}

fn cmd_dual(
    n: u32,
    r: u32,
    variant: DualVariant,
    dim: usize,
    ring: Ring,
    export: Option<&Path>,
    g: &GlobalOpts,
) -> Result<Output> {
    let params = Params::new(n, r)?;
    let d = build_dual_complex(params, variant, dim + 1, g.max_simplices)?;
    let b = betti_of_complex(&d.complex, dim, ring, g.max_matrix)?;
    if let Some(path) = export {
        write_json(path, &d.to_document())?;
    }
    let (gamma_t_lb, conn_lb) = match variant {
        DualVariant::J if !d.vertices.is_empty() => {
            let stats = complement_graph_stats(params)?;
            let lb = total_domination_lb(stats.vertices as u64, stats.max_degree as u64)?
                .ceil()
                .to_integer()
                .to_u64()
                .ok_or(Error::Overflow("domination bound"))?;
            // γ_t > 2k gives (k - 1)-connectivity
            let k = (lb as i64 + 1) / 2 - 1;
            (Some(lb), Some(k - 1))
        }
        _ => (None, None),
    };
    let consistent = conn_lb.is_none_or(|c| (0..=c.min(dim as i64)).all(|k| b.get(k) == 0));
    let comparison = if n <= 4 && dim >= 1 {
        Some(dual_homology_check(params, dim + 1, ring, g.max_simplices, g.max_matrix)?)
    } else {
        None
    };
    let mut t = format!("{variant:?}_({n},{r}): {} vertices, f-vector {:?}\n", d.vertices.len(), d.complex.f_vector());
    render_betti(&mut t, &b);
    if let (Some(lb), Some(c)) = (gamma_t_lb, conn_lb) {
        let _ =
            writeln!(t, "  gamma_t(complement) >= {lb}, so the complex is {c}-connected: consistent = {consistent}");
    }
    if let Some(c) = &comparison {
        let _ = writeln!(
            t,
            "  H^{}(VR) rank {}  vs  H_{}: C {} (match {}), J {} (bounds {})",
            c.vr_degree,
            c.vr_rank,
            c.t - 1,
            c.c_rank,
            c.c_matches,
            c.j_rank,
            c.j_bounds
        );
    }
    let passed = consistent && comparison.as_ref().is_none_or(|c| c.c_matches && c.j_bounds);
    let out = DualOutput {
        n,
        r,
        variant,
        vertices: d.vertices.len(),
        face_counts: d.complex.f_vector(),
        betti: b,
        gamma_t_lb,
        conn_lb,
        consistent,
        comparison,
    };
    Output::new(passed, out, t)
}

#[derive(Serialize)]
struct VerifyOutput<T: Serialize> {
    kind: &'static str,
    passed: bool,
    report: T,
}

fn verdict(kind: &'static str, passed: bool, report: impl Serialize, mut lines: String) -> Result<Output> {
    lines.insert_str(0, &format!("{} {kind}\n", if passed { "PASS" } else { "FAIL" }));
    Output::new(passed, VerifyOutput { kind, passed, report }, lines)
}

fn load_chain(path: &Path) -> Result<(Params, crate::chain::Chain)> {
    ChainDocument::from_json(&read_file(path)?)?.into_chain()
}

#[derive(Serialize)]
struct SimplicialCheck {
    dim: usize,
    ring: Ring,
    terms: usize,
    /// Simplices where the check fails, in order.
    witnesses: Vec<Vec<Vertex>>,
}

fn cmd_verify(kind: &VerifyKind, g: &GlobalOpts) -> Result<Output> {
    match kind {
        VerifyKind::Cocycle { file } => {
            let (params, phi) = load_chain(file)?;
            let view = ComplexView::new(params);
            if let Some(s) = phi.support().find(|s| !view.is_simplex(s)) {
                return Err(Error::NotAFace(s.vertices().to_vec()));
            }
            let d = coboundary(&phi, &view, g.max_simplices)?;
            let witnesses: Vec<Vec<Vertex>> = d.support().map(|s| s.vertices().to_vec()).collect();
            let mut t = String::new();
            if let Some(w) = witnesses.first() {
                let _ = writeln!(t, "  coboundary nonzero on {} cofacets, first {w:?}", witnesses.len());
            }
            let report = SimplicialCheck { dim: phi.dim(), ring: phi.ring(), terms: phi.len(), witnesses };
            verdict("cocycle", report.witnesses.is_empty(), report, t)
        }
        VerifyKind::Cycle { file } => {
            let (params, c) = load_chain(file)?;
            let view = ComplexView::new(params);
            let witnesses: Vec<Vec<Vertex>> = match boundary(&c, &view) {
                Ok(b) => b.support().map(|s| s.vertices().to_vec()).collect(),
                Err(Error::NotAFace(s)) => vec![s],
                Err(e) => return Err(e),
            };
            let mut t = String::new();
            if let Some(w) = witnesses.first() {
                let _ = writeln!(t, "  boundary nonzero, first witness {w:?}");
            }
            let report = SimplicialCheck { dim: c.dim(), ring: c.ring(), terms: c.len(), witnesses };
            verdict("cycle", report.witnesses.is_empty(), report, t)
        }
        VerifyKind::Pairing { chain, cochain } => {
            let (p1, beta) = load_chain(chain)?;
            let (p2, phi) = load_chain(cochain)?;
            if p1 != p2 {
                return Err(Error::Mismatch("chain and cochain live on different complexes".into()));
            }
            let value = pair(&beta, &phi)?;
            let t = format!("  <beta, phi> = {value}\n");
            verdict("pairing", value != 0.into(), serde_json::json!({ "value": value.to_string() }), t)
        }
        VerifyKind::Independence { classes, detectors } => {
            let classes: Vec<KoszulCochain> = match classes {
                Some(p) => parse_classes(&read_file(p)?)?,
                None => q4_classes()?,
            }
            .into_iter()
            .map(|c| c.koszul().cloned().expect("Koszul payload"))
            .collect();
            let det = match detectors {
                Some(p) => parse_detectors(&read_file(p)?)?,
                None => q4_detectors()?,
            };
            let params = Params::new(det.n, det.r)?;
            let v = independence_certificate(&classes, &det.sets(), params, Some(&det.order))?;
            let t = match &v {
                IndependenceVerdict::Pass { order } => format!("  elimination order {order:?}\n"),
                IndependenceVerdict::Fail { step, reason, .. } => format!("  step {step}: {reason}\n"),
            };
            verdict("independence", v.passed(), v, t)
        }
        VerifyKind::Q5 => {
            let rep = verify_q5_generator()?;
            let mut t = format!(
                "  alpha: {} simplices, F2 cocycle; transcribed list has {} simplices and fails on {} cofacets\n",
                rep.alpha_simplices,
                rep.printed_simplices,
                rep.printed_defects.len()
            );
            for f in &rep.families {
                let _ = writeln!(
                    t,
                    "  family {:?}: small chain {:?}, cycle {}, <beta, alpha> = {} over F2{}",
                    f.tag,
                    f.small_chain,
                    f.is_cycle,
                    f.f2_pairing,
                    f.z_pairing.map(|z| format!(", {z} over Z")).unwrap_or_default()
                );
            }
            verdict("q5", rep.passed, &rep, t)
        }
        VerifyKind::Q4 => {
            let rep = verify_q4_rank9()?;
            let mut t = String::new();
            for s in &rep.stages {
                let _ = writeln!(t, "  {:<13}{}  {}", s.stage, if s.passed { "ok  " } else { "FAIL" }, s.detail);
            }
            verdict("q4", rep.passed, &rep, t)
        }
        VerifyKind::Tds => {
            let rep = verify_tds_propositions()?;
            let mut t = String::new();
            for i in &rep.instances {
                let _ = writeln!(
                    t,
                    "  family {:?}: pairing {}, dominating {}{}",
                    i.tag,
                    i.f2_pairing,
                    i.verdict.dominating,
                    i.verdict.witness.map(|w| format!(" (vertex {w} undominated)")).unwrap_or_default()
                );
            }
            verdict("tds", rep.passed, &rep, t)
        }
    }
}
