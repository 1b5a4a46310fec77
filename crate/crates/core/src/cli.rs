//! Command-line front end. [`run`] is pure: it returns the exit code and the
//! text for stdout and stderr, which keeps it testable without spawning.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::bounds::{grassmannian_report_with, BoundReport, Method, ReportOptions, Verification};
use crate::error::{Error, Result};
use crate::face_vectors::{
    check_dehn_sommerville, f_to_h, g_tilde, h_double_prime, h_to_g, is_m_sequence, FaceVector,
};
use crate::gf2_ring::{make_ring_cached, GrassmannRing, Gf2Polynomial, GroebnerLimits};
use crate::poincare::{poincare_polynomial, BettiVector};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_COMPLEXITY: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "grassbounds",
    version,
    about = "Lower bounds on triangulations of real Grassmann manifolds G_k(R^n)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Vertex bound and per-dimension face bounds.
    Report(ReportArgs),
    /// Queries against the mod-2 cohomology ring.
    Cohomology(CohomologyArgs),
    /// Rational Poincaré polynomial.
    Poincare(PoincareArgs),
    /// f/h/g-vector transforms of a given face vector.
    Facevec(FacevecArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Ds,
    Msequence,
}

#[derive(Debug, Args)]
pub struct RingArgs {
    /// Directory holding cached Gröbner bases.
    #[arg(long = "cache", value_name = "DIR", env = "GRASSBOUNDS_CACHE")]
    pub cache_dir: Option<PathBuf>,
    /// Cap on pending S-pairs and on basis terms.
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
    pub groebner_limit: Option<u64>,
}

impl RingArgs {
    fn limits(&self) -> GroebnerLimits {
        self.groebner_limit
            .map(|l| GroebnerLimits::uniform(l as usize))
            .unwrap_or_default()
    }

    fn ring(&self, k: usize, n: usize) -> Result<GrassmannRing> {
        make_ring_cached(k, n, self.limits(), self.cache_dir.as_deref())
    }
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub n: usize,
    /// lbt, lbtm, slbtm or hpp; repeatable or comma-separated.
    #[arg(long = "method", value_delimiter = ',')]
    pub methods: Vec<String>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    /// Vertex count to use instead of the computed lower bound.
    #[arg(long)]
    pub f0: Option<BigInt>,
    /// Certify the cup-product witness by Gröbner reduction.
    #[arg(long)]
    pub verify_cohomology: bool,
    #[command(flatten)]
    pub ring: RingArgs,
}

#[derive(Debug, Args)]
pub struct CohomologyArgs {
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub n: usize,
    /// Print the height of w1.
    #[arg(long)]
    pub height_w1: bool,
    /// Print the normal form of EXPR.
    #[arg(long, value_name = "EXPR")]
    pub normal_form: Option<String>,
    /// Print "nonzero" or "zero" for the class of EXPR.
    #[arg(long, value_name = "EXPR")]
    pub check_nonzero: Option<String>,
    /// Print mod-2 Betti numbers by degree.
    #[arg(long)]
    pub betti: bool,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    #[command(flatten)]
    pub ring: RingArgs,
}

#[derive(Debug, Args)]
pub struct PoincareArgs {
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct FacevecArgs {
    /// Dimension; inferred from --f when omitted.
    #[arg(long)]
    pub d: Option<usize>,
    /// f_0,...,f_d.
    #[arg(long = "f", value_name = "LIST", value_delimiter = ',', required = true)]
    pub f: Vec<BigInt>,
    /// Reduced Betti numbers beta_0,...,beta_d (missing entries are zero).
    #[arg(long = "betti-list", value_name = "LIST", value_delimiter = ',')]
    pub betti: Vec<BigInt>,
    /// Print only one verdict.
    #[arg(long, value_enum)]
    pub check: Option<Check>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::ComplexityLimit { .. } => EXIT_COMPLEXITY,
        Error::Parse(_) => EXIT_USAGE,
        _ => EXIT_DOMAIN,
    }
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::fail(EXIT_USAGE, text)
            } else {
                Outcome::ok(text)
            };
        }
    };
    match execute(&cli.command) {
        Ok(stdout) => Outcome::ok(stdout),
        Err(err) => Outcome::fail(exit_code(&err), format!("error: {err}\n")),
    }
}

pub fn execute(command: &Command) -> Result<String> {
    match command {
        Command::Report(a) => report(a),
        Command::Cohomology(a) => cohomology(a),
        Command::Poincare(a) => poincare(a),
        Command::Facevec(a) => facevec(a),
    }
}

fn report(a: &ReportArgs) -> Result<String> {
    let methods = if a.methods.is_empty() {
        None
    } else {
        Some(
            a.methods
                .iter()
                .map(|m| m.parse())
                .collect::<Result<Vec<Method>>>()?,
        )
    };
    let options = ReportOptions {
        methods,
        f0_override: a.f0.clone(),
        verify: a.verify_cohomology.then(|| Verification {
            limits: a.ring.limits(),
            cache_dir: a.ring.cache_dir.clone(),
        }),
    };
    let r = grassmannian_report_with(a.k, a.n, &options)?;
    Ok(match a.format {
        Format::Table => render_report_table(&r),
        Format::Csv => render_report_csv(&r),
        Format::Json => pretty(&r.to_json()),
    })
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

/// Rows `0..=d` followed by `sum`, one column per method.
fn report_rows(r: &BoundReport) -> Vec<Vec<String>> {
    let mut rows: Vec<Vec<String>> = (0..=r.d)
        .map(|i| {
            std::iter::once(i.to_string())
                .chain(r.methods.iter().map(|m| m.bounds[i].to_string()))
                .collect()
        })
        .collect();
    rows.push(
        std::iter::once("sum".to_string())
            .chain(r.methods.iter().map(|m| m.total.to_string()))
            .collect(),
    );
    rows
}

fn report_header(r: &BoundReport) -> Vec<String> {
    std::iter::once("dim".to_string())
        .chain(r.methods.iter().map(|m| m.method.name().to_string()))
        .collect()
}

pub fn render_report_csv(r: &BoundReport) -> String {
    let mut out = report_header(r).join(",");
    out.push('\n');
    for row in report_rows(r) {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn render_report_table(r: &BoundReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "G_{}(R^{})  d = {}  {}",
        r.k,
        r.n,
        r.d,
        if r.orientable { "orientable" } else { "non-orientable" }
    );
    let _ = writeln!(
        out,
        "vertex bound {}  ({})",
        r.delta.value, r.delta.source
    );
    if r.f0 != r.delta.value {
        let _ = writeln!(out, "f0 = {}", r.f0);
    }
    if let Some(ok) = r.witness_certified {
        let _ = writeln!(out, "witness certified: {}", if ok { "yes" } else { "NO" });
    }
    out.push('\n');

    let header = report_header(r);
    let rows = report_rows(r);
    let widths: Vec<usize> = (0..header.len())
        .map(|c| {
            rows.iter()
                .map(|row| row[c].len())
                .chain(std::iter::once(header[c].len()))
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |cells: &[String]| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
    };
    let _ = writeln!(out, "{}", line(&header));
    for row in &rows {
        let _ = writeln!(out, "{}", line(row));
    }

    if !r.cross_checks.is_empty() {
        out.push_str("\ncross-checks\n");
        for c in &r.cross_checks {
            let _ = writeln!(
                out,
                "  [{}] {}: published {}, computed {}",
                if c.matches { "ok" } else { "differs" },
                c.name,
                c.published_value,
                c.computed_value
            );
        }
    }
    if !r.notes.is_empty() {
        out.push_str("\nnotes\n");
        for n in &r.notes {
            let _ = writeln!(out, "  - {n}");
        }
    }
    out
}

fn parse_expr(s: &str) -> Result<Gf2Polynomial> {
    s.parse()
}

fn cohomology(a: &CohomologyArgs) -> Result<String> {
    let normal_input = a.normal_form.as_deref().map(parse_expr).transpose()?;
    let check_input = a.check_nonzero.as_deref().map(parse_expr).transpose()?;
    let ring = a.ring.ring(a.k, a.n)?;
    let nothing_asked = !a.height_w1 && normal_input.is_none() && check_input.is_none() && !a.betti;

    let mut fields = serde_json::Map::new();
    let mut lines = Vec::new();
    if nothing_asked {
        let basis: Vec<String> = ring.groebner_basis().iter().map(|p| p.to_string()).collect();
        lines.push(format!(
            "G_{}(R^{})  order {}  {} basis elements",
            ring.k(),
            ring.n(),
            ring.monomial_order(),
            basis.len()
        ));
        lines.extend(basis.iter().cloned());
        fields.insert("k".into(), json!(ring.k()));
        fields.insert("n".into(), json!(ring.n()));
        fields.insert("order".into(), json!(ring.monomial_order()));
        fields.insert("groebner_basis".into(), json!(basis));
    }
    if a.height_w1 {
        let h = ring.height_w1();
        lines.push(h.to_string());
        fields.insert("height_w1".into(), json!(h));
    }
    if let Some(p) = &normal_input {
        let nf = ring.normal_form(p)?.to_string();
        lines.push(nf.clone());
        fields.insert("normal_form".into(), json!(nf));
    }
    if let Some(p) = &check_input {
        let verdict = if ring.is_nonzero_class(p)? { "nonzero" } else { "zero" };
        lines.push(verdict.to_string());
        fields.insert("check_nonzero".into(), json!(verdict));
    }
    if a.betti {
        let b = ring.gf2_betti();
        lines.push(join(b.iter()));
        fields.insert("betti".into(), json!(b));
    }
    Ok(match a.format {
        Format::Json => pretty(&Value::Object(fields)),
        Format::Table | Format::Csv => lines.iter().map(|l| format!("{l}\n")).collect(),
    })
}

fn join<T: ToString>(items: impl Iterator<Item = T>) -> String {
    items.map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn poincare(a: &PoincareArgs) -> Result<String> {
    let p = poincare_polynomial(a.k, a.n)?;
    Ok(match a.format {
        Format::Json => {
            let pairs: Vec<Value> = p
                .sparse_terms()
                .into_iter()
                .map(|(deg, c)| json!([deg, c.to_string()]))
                .collect();
            pretty(&Value::Array(pairs))
        }
        Format::Csv => {
            let mut out = String::from("degree,coefficient\n");
            for (deg, c) in p.sparse_terms() {
                let _ = writeln!(out, "{deg},{c}");
            }
            out
        }
        Format::Table => format!("{}\n", p.render("t")),
    })
}

fn facevec(a: &FacevecArgs) -> Result<String> {
    let fv = FaceVector::new(a.f.clone())?;
    let d = fv.dimension();
    if let Some(expected) = a.d {
        if expected != d {
            return Err(Error::DimensionMismatch { expected, found: d });
        }
    }
    let betti = BettiVector::from_reduced(d, &a.betti)?;
    let h = f_to_h(&fv);
    let hpp = h_double_prime(&h, &betti)?;
    let gpp = h_to_g(&hpp)?;
    let gt = g_tilde(&gpp, &betti)?;
    let ds = check_dehn_sommerville(&hpp);
    let msq = is_m_sequence(gpp.lower_half());

    let verdict = |b: bool| if b { "true" } else { "false" };
    if let Some(check) = a.check {
        let v = match check {
            Check::Ds => ds,
            Check::Msequence => msq,
        };
        return Ok(match a.format {
            Format::Json => pretty(&json!(v)),
            _ => format!("{}\n", verdict(v)),
        });
    }

    let strings = |v: &[BigInt]| v.iter().map(BigInt::to_string).collect::<Vec<_>>();
    let g_lower = &gpp.as_slice()[..gpp.lower_half().len()];
    let gt_lower = &gt.as_slice()[..gt.lower_half().len()];
    Ok(match a.format {
        Format::Json => pretty(&json!({
            "f": strings(fv.as_slice()),
            "h": strings(h.as_slice()),
            "h_pp": strings(hpp.as_slice()),
            "g_pp": strings(g_lower),
            "g_tilde": strings(gt_lower),
            "dehn_sommerville": ds,
            "m_sequence": msq,
        })),
        Format::Csv => {
            let mut out = String::new();
            for (name, v) in [
                ("f", fv.as_slice()),
                ("h", h.as_slice()),
                ("h_pp", hpp.as_slice()),
                ("g_pp", g_lower),
                ("g_tilde", gt_lower),
            ] {
                let _ = writeln!(out, "{name},{}", join(v.iter()));
            }
            let _ = writeln!(out, "dehn_sommerville,{}", verdict(ds));
            let _ = writeln!(out, "m_sequence,{}", verdict(msq));
            out
        }
        Format::Table => {
            let mut out = String::new();
            for (name, v) in [
                ("f", fv.as_slice()),
                ("h", h.as_slice()),
                ("h''", hpp.as_slice()),
                ("g''", g_lower),
                ("g~", gt_lower),
            ] {
                let _ = writeln!(out, "{name:<4} ({})", join(v.iter()));
            }
            let _ = writeln!(out, "Dehn-Sommerville {}", verdict(ds));
            let _ = writeln!(out, "M-sequence       {}", verdict(msq));
            out
        }
    })
}
