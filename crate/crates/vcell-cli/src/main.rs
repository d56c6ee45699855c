use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use vcell::dualvol::{self, PolygonDoc};
use vcell::exact::json::{PolyDoc, RatFnDoc};
use vcell::exact::{PoleReport, RatFn};
use vcell::fixtures::{self, Report};
use vcell::forms::{CurveDoc, FormDoc, ParamCurve, RationalTwoForm};
use vcell::planar::{self, canonical::boundary_factors, curves::vandermonde_curve};
use vcell::vandermonde::{self, BoundaryPatch};
use vcell::{parse_rational, PolygonQ, Rational, Scalar};

#[derive(Parser)]
#[command(
    name = "vcell",
    version,
    about = "Exact positive geometry of Vandermonde cells"
)]
struct Cli {
    /// Output file; standard output when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 200)]
    samples: usize,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// Boundary structure of the (n, d) cell.
    Boundary(BoundaryArgs),
    /// Planar cells (d = 3).
    Planar {
        #[command(subcommand)]
        cmd: PlanarCmd,
    },
    /// Rational 2-forms.
    Forms {
        #[command(subcommand)]
        cmd: FormsCmd,
    },
    /// Canonical function of a convex polygon at a point.
    Dualvol(DualvolArgs),
    /// Partial values of the limiting cell's canonical function.
    Limit(LimitArgs),
    /// Embedded quartic boundary fixtures.
    Fixtures {
        #[command(subcommand)]
        cmd: FixturesCmd,
    },
    /// Same as `planar canonical`.
    Canonical(CanonicalArgs),
    /// Same as `planar plot`.
    Plot(PlotArgs),
    /// Same as `planar membership`.
    Membership(MembershipArgs),
    /// Same as `forms residue`.
    Residue(ResidueArgs),
    /// Same as `forms logcheck`.
    Logcheck(LogcheckArgs),
    /// Same as `fixtures verify`.
    #[command(name = "fixtures-verify")]
    FixturesVerify(FixturesArgs),
    /// Quick end-to-end consistency checks.
    Selftest,
}

#[derive(Subcommand)]
enum PlanarCmd {
    Canonical(CanonicalArgs),
    Membership(MembershipArgs),
    Plot(PlotArgs),
}

#[derive(Subcommand)]
enum FormsCmd {
    Residue(ResidueArgs),
    Logcheck(LogcheckArgs),
}

#[derive(Subcommand)]
enum FixturesCmd {
    Verify(FixturesArgs),
}

#[derive(Args)]
struct BoundaryArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    d: usize,
    /// Multiplicity vectors of both types.
    #[arg(long)]
    list_multiplicities: bool,
    /// Number of boundary hypersurfaces new at this n.
    #[arg(long)]
    count_new: bool,
    /// Boundary polynomials b_2..b_n (d = 3 only).
    #[arg(long)]
    equations: bool,
    /// CSV of K sampled points on every boundary patch.
    #[arg(long, value_name = "K")]
    sample: Option<usize>,
}

#[derive(Args)]
struct CanonicalArgs {
    #[arg(long)]
    n: u32,
    /// Only the combined form.
    #[arg(long, conflicts_with = "summands")]
    combined: bool,
    /// Only the summands of the decomposition.
    #[arg(long)]
    summands: bool,
}

#[derive(Args)]
struct MembershipArgs {
    #[arg(long)]
    n: u32,
    #[arg(long, allow_hyphen_values = true)]
    x: String,
    #[arg(long, allow_hyphen_values = true)]
    y: String,
}

#[derive(Args)]
struct PlotArgs {
    #[arg(long)]
    n: u32,
}

#[derive(Args)]
struct ResidueArgs {
    #[arg(long)]
    form: PathBuf,
    #[arg(long)]
    curve: PathBuf,
}

#[derive(Args)]
struct LogcheckArgs {
    #[arg(long)]
    form: PathBuf,
    /// JSON array of parametrized curves; lines may be omitted.
    #[arg(long)]
    curves: Option<PathBuf>,
}

#[derive(Args)]
struct DualvolArgs {
    #[arg(long)]
    polygon: PathBuf,
    #[arg(long, allow_hyphen_values = true)]
    x: String,
    #[arg(long, allow_hyphen_values = true)]
    y: String,
}

#[derive(Args)]
struct LimitArgs {
    #[arg(long, allow_hyphen_values = true)]
    x: String,
    #[arg(long, allow_hyphen_values = true)]
    y: String,
    #[arg(long, default_value_t = 12)]
    n_max: u32,
}

#[derive(Args)]
struct FixturesArgs {
    /// Also run the symbolic composition and the same-hypersurface checks.
    #[arg(long)]
    slow: bool,
}

/// Bad input from the command line; exits with status 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

/// Library errors caused by the arguments count as usage errors.
fn is_usage(e: &anyhow::Error) -> bool {
    if e.downcast_ref::<Usage>().is_some() {
        return true;
    }
    matches!(
        e.downcast_ref::<vcell::Error>(),
        Some(
            vcell::Error::OutOfRange(_)
                | vcell::Error::Parse(_)
                | vcell::Error::NotAdmissible(_)
                | vcell::Error::InvalidPolygon(_)
                | vcell::Error::DimensionMismatch { .. }
                | vcell::Error::VariableMismatch(_)
        )
    )
}

struct Ctx {
    out: Option<PathBuf>,
    format: Option<Format>,
    seed: u64,
    samples: usize,
}

impl Ctx {
    fn format(&self, default: Format, allowed: &[Format]) -> anyhow::Result<Format> {
        let f = self.format.unwrap_or(default);
        if !allowed.contains(&f) {
            return Err(usage("output format not supported by this command"));
        }
        Ok(f)
    }

    fn emit(&self, text: &str) -> anyhow::Result<()> {
        match &self.out {
            Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
            None => match writeln!(std::io::stdout().lock(), "{}", text.trim_end()) {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
                _ => Ok(()),
            },
        }
    }

    fn emit_json(&self, v: &Value) -> anyhow::Result<()> {
        self.format(Format::Json, &[Format::Json])?;
        self.emit(&format!("{}\n", serde_json::to_string_pretty(v)?))
    }
}

/// `true` when every verification passed.
type Outcome = anyhow::Result<bool>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx {
        out: cli.out,
        format: cli.format,
        seed: cli.seed,
        samples: cli.samples,
    };
    match run(&ctx, cli.cmd) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(if is_usage(&e) { 2 } else { 1 })
        }
    }
}

fn run(ctx: &Ctx, cmd: Command) -> Outcome {
    match cmd {
        Command::Boundary(a) => cmd_boundary(ctx, &a),
        Command::Planar {
            cmd: PlanarCmd::Canonical(a),
        }
        | Command::Canonical(a) => cmd_canonical(ctx, &a),
        Command::Planar {
            cmd: PlanarCmd::Membership(a),
        }
        | Command::Membership(a) => cmd_membership(ctx, &a),
        Command::Planar {
            cmd: PlanarCmd::Plot(a),
        }
        | Command::Plot(a) => cmd_plot(ctx, &a),
        Command::Forms {
            cmd: FormsCmd::Residue(a),
        }
        | Command::Residue(a) => cmd_residue(ctx, &a),
        Command::Forms {
            cmd: FormsCmd::Logcheck(a),
        }
        | Command::Logcheck(a) => cmd_logcheck(ctx, &a),
        Command::Dualvol(a) => cmd_dualvol(ctx, &a),
        Command::Limit(a) => cmd_limit(ctx, &a),
        Command::Fixtures {
            cmd: FixturesCmd::Verify(a),
        }
        | Command::FixturesVerify(a) => cmd_fixtures(ctx, &a),
        Command::Selftest => cmd_selftest(ctx),
    }
}

fn rational_arg(name: &str, s: &str) -> anyhow::Result<Rational> {
    parse_rational(s).map_err(|e| usage(format!("--{name}: {e}")))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> anyhow::Result<T> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn ratfn_json(r: &RatFn) -> Value {
    json!({ "num": RatFnDoc::from(r).num, "den": RatFnDoc::from(r).den, "text": r.to_string() })
}

fn poles_json(p: &PoleReport) -> Value {
    json!({
        "rational": p.rational.iter().map(|(r, m)| json!([r.to_string(), m])).collect::<Vec<_>>(),
        "other": p.other.iter().map(|(deg, m)| json!({ "degree": deg, "mult": m })).collect::<Vec<_>>(),
        "infinity": p.infinity,
        "all_simple": p.all_simple(),
    })
}

fn form_json(f: &RationalTwoForm) -> Value {
    serde_json::to_value(FormDoc::from(f)).expect("serializable")
}

fn report_json(r: &Report) -> Value {
    json!({ "passed": r.all_passed(), "checks": r.checks })
}

fn cmd_boundary(ctx: &Ctx, a: &BoundaryArgs) -> Outcome {
    vandermonde::check_range(a.n, a.d)
        .map_err(|e| usage(format!("{e}; usage: boundary --n N --d D with 2 <= d <= n")))?;
    let vectors = vandermonde::enumerate_multiplicity_vectors(a.n, a.d)?;
    if let Some(k) = a.sample {
        ctx.format(Format::Csv, &[Format::Csv])?;
        let mut csv = String::from("type,multiplicities,preimage");
        for j in 2..=a.d {
            csv.push_str(&format!(",y{j}"));
        }
        csv.push('\n');
        for (i, mv) in vectors.iter().enumerate() {
            let patch = BoundaryPatch::new(mv.clone())?;
            for params in patch.sample_params(k, ctx.seed.wrapping_add(i as u64)) {
                let x = patch.preimage(&params)?;
                let y = patch.eval(&params)?;
                let entries: Vec<String> = mv.entries().iter().map(|m| m.to_string()).collect();
                let pre: Vec<String> = x.iter().map(|v| v.to_string()).collect();
                csv.push_str(&format!(
                    "{:?},{},{}",
                    mv.kind,
                    entries.join(":"),
                    pre.join(" ")
                ));
                for v in y {
                    csv.push_str(&format!(",{v}"));
                }
                csv.push('\n');
            }
        }
        ctx.emit(&csv)?;
        return Ok(true);
    }
    let new = vandermonde::new_hypersurface_count(a.n, a.d)?;
    if a.count_new && !a.list_multiplicities && !a.equations {
        ctx.format(Format::Json, &[Format::Json])?;
        ctx.emit(&format!("{new}\n"))?;
        return Ok(true);
    }
    let mut doc = json!({ "n": a.n, "d": a.d, "new_hypersurfaces": new.to_string() });
    if a.list_multiplicities || !a.equations {
        doc["multiplicity_vectors"] = serde_json::to_value(&vectors)?;
    }
    if a.equations {
        if a.d != 3 {
            return Err(usage("--equations is available for d = 3 only"));
        }
        let eqs: Vec<Value> = (2..=a.n as u32)
            .map(|k| -> anyhow::Result<Value> {
                let b = planar::boundary_poly(k)?;
                Ok(json!({ "k": k, "text": b.to_string(), "poly": PolyDoc::from(&b) }))
            })
            .collect::<anyhow::Result<_>>()?;
        doc["equations"] = Value::Array(eqs);
    }
    ctx.emit_json(&doc)?;
    Ok(true)
}

fn cmd_canonical(ctx: &Ctx, a: &CanonicalArgs) -> Outcome {
    let cf = planar::canonical_form(a.n)?;
    if a.combined {
        ctx.emit_json(&form_json(&cf.combined))?;
        return Ok(true);
    }
    let summands: Vec<Value> = cf
        .summands
        .iter()
        .map(|s| json!({ "label": s.label, "form": form_json(&s.form) }))
        .collect();
    if a.summands {
        ctx.emit_json(&Value::Array(summands))?;
        return Ok(true);
    }
    let residues = planar::boundary_residues(&cf)?;
    let factors_ok = cf.combined.factors().iter().all(|f| f.mult == 1)
        && boundary_factors(a.n)?
            .iter()
            .all(|b| cf.combined.factor_of(b).is_some())
        && cf.combined.factors().len() == a.n as usize - 1;
    let curves: Vec<ParamCurve> = (3..=a.n)
        .map(vandermonde_curve)
        .collect::<vcell::Result<_>>()?;
    let log = cf.combined.log_check(&curves)?.is_logarithmic();
    let logarithmic = factors_ok && log;
    let doc = json!({
        "n": cf.n,
        "combined": form_json(&cf.combined),
        "summands": summands,
        "certificate": {
            "logarithmic": logarithmic,
            "poles_on_boundary_only": factors_ok,
            "cancelled": cf.cancelled.iter().map(|l| format!("spurious factor {l} cancelled")).collect::<Vec<_>>(),
        },
        "residues": residues.iter().map(|r| json!({
            "k": r.k,
            "interval": [r.interval.0.to_string(), r.interval.1.to_string()],
            "residue": ratfn_json(&r.residue),
            "poles": poles_json(&r.residue.pole_orders()),
            "segment_sign": r.sign,
        })).collect::<Vec<_>>(),
    });
    ctx.emit_json(&doc)?;
    Ok(logarithmic)
}

fn cmd_membership(ctx: &Ctx, a: &MembershipArgs) -> Outcome {
    let pt = (rational_arg("x", &a.x)?, rational_arg("y", &a.y)?);
    let m = planar::membership(a.n, &pt)?;
    ctx.emit_json(
        &json!({ "n": a.n, "x": pt.0.to_string(), "y": pt.1.to_string(), "membership": m }),
    )?;
    Ok(true)
}

fn cmd_plot(ctx: &Ctx, a: &PlotArgs) -> Outcome {
    ctx.format(Format::Svg, &[Format::Svg])?;
    ctx.emit(&planar::plot_svg(a.n)?)?;
    Ok(true)
}

fn cmd_residue(ctx: &Ctx, a: &ResidueArgs) -> Outcome {
    let form = RationalTwoForm::try_from(&read_json::<FormDoc>(&a.form)?)?;
    let curve = ParamCurve::try_from(&read_json::<CurveDoc>(&a.curve)?)?;
    let r = form.residue(&curve)?;
    let mut doc = ratfn_json(&r);
    doc["poles"] = poles_json(&r.pole_orders());
    ctx.emit_json(&doc)?;
    Ok(true)
}

fn cmd_logcheck(ctx: &Ctx, a: &LogcheckArgs) -> Outcome {
    let form = RationalTwoForm::try_from(&read_json::<FormDoc>(&a.form)?)?;
    let curves: Vec<ParamCurve> = match &a.curves {
        Some(p) => read_json::<Vec<CurveDoc>>(p)?
            .iter()
            .map(ParamCurve::try_from)
            .collect::<vcell::Result<_>>()?,
        None => Vec::new(),
    };
    let report = form.log_check(&curves)?;
    let entries: Vec<Value> = report
        .entries
        .iter()
        .map(|e| {
            json!({
                "factor": e.factor.to_string(),
                "mult": e.mult,
                "residue": e.residue.as_ref().map(ratfn_json),
                "poles": e.poles.as_ref().map(poles_json),
                "ok": e.ok(),
            })
        })
        .collect();
    let offenders: Vec<String> = report
        .entries
        .iter()
        .filter(|e| !e.ok())
        .map(|e| e.factor.to_string())
        .collect();
    let log = report.is_logarithmic();
    ctx.emit_json(&json!({ "logarithmic": log, "offenders": offenders, "entries": entries }))?;
    Ok(log)
}

fn cmd_dualvol(ctx: &Ctx, a: &DualvolArgs) -> Outcome {
    let poly = PolygonQ::try_from(&read_json::<PolygonDoc>(&a.polygon)?)?;
    let x = (rational_arg("x", &a.x)?, rational_arg("y", &a.y)?);
    let v = dualvol::dual_volume(&poly, &x);
    ctx.emit_json(&json!({
        "x": [x.0.to_string(), x.1.to_string()],
        "bounded": v.bounded,
        "value": v.value.as_ref().map(|r| r.to_string()),
        "float_approx": v.value.as_ref().map(|r| r.to_f64()),
    }))?;
    Ok(true)
}

fn cmd_limit(ctx: &Ctx, a: &LimitArgs) -> Outcome {
    let x = (rational_arg("x", &a.x)?, rational_arg("y", &a.y)?);
    let report = dualvol::limiting_canonical(&x, a.n_max)?;
    let identities = report.rows.iter().all(|r| r.hull_identity);
    match ctx.format(Format::Csv, &[Format::Csv, Format::Json])? {
        Format::Csv => {
            let mut csv = String::from("n,value_num,value_den,float_approx,delta_float\n");
            for r in &report.rows {
                let delta = r.delta_float.map(|d| format!("{d:e}")).unwrap_or_default();
                csv.push_str(&format!(
                    "{},{},{},{:e},{}\n",
                    r.n,
                    r.value.numer(),
                    r.value.denom(),
                    r.float_approx,
                    delta
                ));
            }
            ctx.emit(&csv)?;
        }
        _ => {
            let rows: Vec<Value> = report
                .rows
                .iter()
                .map(|r| {
                    json!({
                        "n": r.n,
                        "value": r.value.to_string(),
                        "float_approx": r.float_approx,
                        "delta_float": r.delta_float,
                        "hull_value": r.hull_value.to_string(),
                        "pieces_value": r.pieces_value.to_string(),
                        "hull_identity": r.hull_identity,
                    })
                })
                .collect();
            ctx.emit_json(&json!({
                "x": [x.0.to_string(), x.1.to_string()],
                "rows": rows,
                "monotone_deltas": report.monotone_deltas,
                "converged": report.converged,
                "tolerance": report.tolerance,
            }))?;
        }
    }
    Ok(identities)
}

fn cmd_fixtures(ctx: &Ctx, a: &FixturesArgs) -> Outcome {
    let mut r = fixtures::verify_quartic_boundaries(ctx.samples, ctx.seed);
    if a.slow {
        r.extend(fixtures::verify_quartic_symbolic());
        r.extend(fixtures::verify_same_hypersurface(
            4,
            1,
            ctx.samples,
            ctx.seed,
        )?);
    }
    ctx.emit_json(&report_json(&r))?;
    Ok(r.all_passed())
}

fn cmd_selftest(ctx: &Ctx) -> Outcome {
    let mut r = fixtures::verify_quartic_boundaries(ctx.samples.min(50), ctx.seed);
    for n in 3..=5u32 {
        let cf = planar::canonical_form(n)?;
        let curves: Vec<ParamCurve> = (3..=n)
            .map(vandermonde_curve)
            .collect::<vcell::Result<_>>()?;
        let log = cf.combined.log_check(&curves)?.is_logarithmic();
        r.push(
            format!("canonical form n = {n} is logarithmic"),
            log,
            format!("{} factors", cf.combined.factors().len()),
        );
    }
    let tri = PolygonQ::new(vec![
        (Rational::from_int(0), Rational::from_int(0)),
        (Rational::from_int(1), Rational::from_int(0)),
        (Rational::from_int(0), Rational::from_int(1)),
    ])?;
    let third = parse_rational("1/3")?;
    let v = dualvol::dual_volume(&tri, &(third.clone(), third));
    r.push(
        "triangle dual volume at centroid",
        v.value == Some(Rational::from_int(27)),
        format!("{:?}", v.value.map(|x| x.to_string())),
    );
    let w = planar::canonical::orientation_witness();
    let m = planar::membership(3, &(w[0].clone(), w[1].clone()))?;
    r.push(
        "orientation witness is interior",
        m == planar::Membership::Inside,
        format!("{m:?}"),
    );
    let limit = dualvol::limiting_canonical(&(w[0].clone(), w[1].clone()), 5)?;
    r.push(
        "hull identity for the limiting cell",
        limit.rows.iter().all(|row| row.hull_identity),
        format!("n = 3..5 at ({}, {})", w[0], w[1]),
    );
    if r.checks.is_empty() {
        return Err(anyhow!("no checks ran"));
    }
    ctx.emit_json(&report_json(&r))?;
    Ok(r.all_passed())
}
