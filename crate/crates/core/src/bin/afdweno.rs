use std::path::{Path, PathBuf};
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use afdweno::config::ConfigFile;
use afdweno::harness::output::{snapshot_name, write_convergence_file, write_solution_file};
use afdweno::harness::{convergence_study, problem, run_problem, RunConfig, PROBLEM_NAMES};
use afdweno::riemann::RiemannSolverKind;
use afdweno::scheme::{derive_correction_coefficients, BoundaryProjection};
use afdweno::time::TimeIntegrator;
use afdweno::weno_center::CenterVariant;
use afdweno::SchemeOrder;

#[derive(Parser)]
#[command(name = "afdweno", version, about = "Alternative finite difference WENO solver")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Integrate one problem and write the final primitive variables as CSV.
    Run(RunArgs),
    /// Measure density errors against the exact solution on a mesh sequence.
    Convergence(ConvergenceArgs),
    /// Print the exact flux-correction coefficients of a scheme order.
    DeriveCoeffs {
        #[arg(long)]
        order: usize,
    },
    /// List the registered problems.
    List,
}

/// Scheme options shared by `run` and `convergence`. Every option can also
/// be given in a `key = value` config file; command-line flags win.
#[derive(Args, Clone, Default)]
struct SchemeArgs {
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    riemann: Option<String>,
    #[arg(long)]
    cfl: Option<f64>,
    /// on or off
    #[arg(long)]
    flattener: Option<String>,
    #[arg(long)]
    kappa: Option<f64>,
    #[arg(long = "t-end")]
    t_end: Option<f64>,
    /// rk3 or rk4
    #[arg(long)]
    integrator: Option<String>,
    /// Centre WENO-AO variant: ao3, ao3central, ao53, ao73, ao753, ao93
    #[arg(long)]
    variant: Option<String>,
    #[arg(long = "gamma-hi")]
    gamma_hi: Option<f64>,
    #[arg(long = "gamma-avg")]
    gamma_avg: Option<f64>,
    #[arg(long = "gamma-lo")]
    gamma_lo: Option<f64>,
    #[arg(long)]
    epsilon: Option<f64>,
    /// Reconstruct in characteristic variables: on or off
    #[arg(long)]
    characteristic: Option<String>,
    /// Projection of the face derivative stack: component or characteristic
    #[arg(long)]
    projection: Option<String>,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    problem: Option<String>,
    #[arg(long)]
    order: Option<usize>,
    /// NX or NXxNY
    #[arg(long)]
    zones: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    scheme: SchemeArgs,
}

#[derive(Args)]
struct ConvergenceArgs {
    #[arg(long)]
    problem: Option<String>,
    /// Comma-separated list, e.g. 3,5,7,9
    #[arg(long)]
    orders: Option<String>,
    /// Comma-separated zones per side, e.g. 16,32,64
    #[arg(long)]
    meshes: Option<String>,
    /// With several orders one file per order is written, suffixed `_<order>`.
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    scheme: SchemeArgs,
}

const SCHEME_KEYS: &[&str] = &[
    "riemann",
    "cfl",
    "flattener",
    "kappa",
    "t_end",
    "integrator",
    "variant",
    "gamma_hi",
    "gamma_avg",
    "gamma_lo",
    "epsilon",
    "characteristic",
    "projection",
];

fn load_config(path: Option<&Path>, extra: &[&str]) -> Result<ConfigFile> {
    let Some(path) = path else { return Ok(ConfigFile::default()) };
    let cfg = ConfigFile::load(path).with_context(|| format!("reading {}", path.display()))?;
    let allowed: Vec<&str> = SCHEME_KEYS.iter().chain(extra).copied().collect();
    cfg.check_keys(&allowed)?;
    Ok(cfg)
}

/// Flag value if given, else the config file value.
fn pick<T>(flag: Option<T>, file: &ConfigFile, key: &str) -> Result<Option<T>>
where
    T: FromStr,
    T::Err: std::fmt::Display,
{
    Ok(match flag {
        Some(v) => Some(v),
        None => file.parsed(key)?,
    })
}

fn on_off(s: &str) -> Result<bool> {
    match s.to_ascii_lowercase().as_str() {
        "on" | "true" | "yes" | "1" => Ok(true),
        "off" | "false" | "no" | "0" => Ok(false),
        _ => bail!("expected on or off, got '{s}'"),
    }
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>().with_context(|| format!("bad list entry '{t}'")))
        .collect()
}

fn parse_zones(s: &str) -> Result<(usize, Option<usize>)> {
    let lower = s.to_ascii_lowercase();
    match lower.split_once('x') {
        Some((a, b)) => Ok((a.trim().parse()?, Some(b.trim().parse()?))),
        None => Ok((lower.trim().parse()?, None)),
    }
}

fn apply_scheme(args: &SchemeArgs, file: &ConfigFile, cfg: &mut RunConfig) -> Result<()> {
    if let Some(r) = pick(args.riemann.clone(), file, "riemann")? {
        cfg.riemann = RiemannSolverKind::from_str(&r)?;
    }
    if let Some(c) = pick(args.cfl, file, "cfl")? {
        cfg.cfl = c;
    }
    let kappa = pick(args.kappa, file, "kappa")?;
    if let Some(k) = kappa {
        cfg.kappa = Some(k);
    }
    if let Some(f) = pick(args.flattener.clone(), file, "flattener")? {
        cfg.kappa = if on_off(&f)? { Some(kappa.or(cfg.kappa).unwrap_or(0.3)) } else { None };
    }
    if let Some(t) = pick(args.t_end, file, "t_end")? {
        cfg.t_end = t;
    }
    if let Some(i) = pick(args.integrator.clone(), file, "integrator")? {
        cfg.integrator = TimeIntegrator::from_str(&i)?;
    }
    if let Some(v) = pick(args.variant.clone(), file, "variant")? {
        let v = CenterVariant::from_str(&v)?;
        if v.order() != cfg.order {
            bail!("variant {v:?} belongs to order {}, not {}", v.order(), cfg.order);
        }
        cfg.center_variant = Some(v);
    }
    let hi = pick(args.gamma_hi, file, "gamma_hi")?;
    let avg = pick(args.gamma_avg, file, "gamma_avg")?;
    let lo = pick(args.gamma_lo, file, "gamma_lo")?;
    if hi.is_some() || avg.is_some() || lo.is_some() {
        let d = cfg.scheme().weno;
        cfg.gammas = Some([hi.unwrap_or(d.gamma_hi), avg.unwrap_or(d.gamma_avg), lo.unwrap_or(d.gamma_lo)]);
    }
    if let Some(e) = pick(args.epsilon, file, "epsilon")? {
        cfg.epsilon = Some(e);
    }
    if let Some(c) = pick(args.characteristic.clone(), file, "characteristic")? {
        cfg.characteristic_center = on_off(&c)?;
    }
    if let Some(p) = pick(args.projection.clone(), file, "projection")? {
        cfg.boundary_projection = match p.to_ascii_lowercase().as_str() {
            "component" | "componentwise" => BoundaryProjection::ComponentWise,
            "characteristic" | "char" => BoundaryProjection::Characteristic,
            _ => bail!("unknown projection '{p}'"),
        };
    }
    Ok(())
}

fn required(flag: Option<String>, file: &ConfigFile, key: &str) -> Result<String> {
    pick(flag, file, key)?.with_context(|| format!("--{key} is required"))
}

fn cmd_run(a: RunArgs) -> Result<()> {
    let file = load_config(a.scheme.config.as_deref(), &["problem", "order", "zones", "out"])?;
    let spec = problem(&required(a.problem, &file, "problem")?)?;
    let mut cfg = RunConfig::from_problem(&spec);
    if let Some(o) = pick(a.order, &file, "order")? {
        cfg.order = SchemeOrder::try_from(o)?;
    }
    if let Some(z) = pick(a.zones, &file, "zones")? {
        let (nx, ny) = parse_zones(&z)?;
        cfg.nx = nx;
        cfg.ny = ny.unwrap_or(if spec.two_d { nx } else { 1 });
    }
    apply_scheme(&a.scheme, &file, &mut cfg)?;
    let out_path = match pick(a.out.map(|p| p.display().to_string()), &file, "out")? {
        Some(p) => PathBuf::from(p),
        None => PathBuf::from(snapshot_name(
            spec.name,
            cfg.order.as_usize(),
            cfg.nx,
            spec.two_d.then_some(cfg.ny),
        )),
    };
    let started = std::time::Instant::now();
    let out = run_problem(&spec, &cfg).with_context(|| format!("running {}", spec.name))?;
    write_solution_file(&out, &out_path)?;
    for (k, v) in out.metadata() {
        eprintln!("{k} = {v}");
    }
    eprintln!("wall_seconds = {:.3}", started.elapsed().as_secs_f64());
    eprintln!("output = {}", out_path.display());
    Ok(())
}

fn cmd_convergence(a: ConvergenceArgs) -> Result<()> {
    let file = load_config(a.scheme.config.as_deref(), &["problem", "orders", "meshes", "out"])?;
    let spec = problem(&required(a.problem, &file, "problem")?)?;
    let orders = parse_list(&required(a.orders, &file, "orders")?)?;
    let meshes = parse_list(&required(a.meshes, &file, "meshes")?)?;
    let out = pick(a.out.map(|p| p.display().to_string()), &file, "out")?.map(PathBuf::from);
    for &o in &orders {
        let order = SchemeOrder::try_from(o)?;
        let mut cfg = RunConfig::from_problem(&spec);
        cfg.order = order;
        apply_scheme(&a.scheme, &file, &mut cfg)?;
        let rows = convergence_study(&spec, order, &meshes, &cfg)?;
        println!("order {o}");
        println!("{:>6} {:>12} {:>7} {:>12} {:>7}", "mesh", "L1", "order", "Linf", "order");
        for r in &rows {
            let f = |v: Option<f64>| v.map(|x| format!("{x:.2}")).unwrap_or_default();
            println!(
                "{:>6} {:>12.5E} {:>7} {:>12.5E} {:>7}",
                r.mesh,
                r.l1_error,
                f(r.l1_order),
                r.linf_error,
                f(r.linf_order)
            );
        }
        if let Some(path) = &out {
            let path = if orders.len() == 1 {
                path.clone()
            } else {
                let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("convergence");
                let ext = path.extension().and_then(|s| s.to_str()).unwrap_or("csv");
                path.with_file_name(format!("{stem}_{o}.{ext}"))
            };
            write_convergence_file(&rows, &path)?;
            eprintln!("wrote {}", path.display());
        }
    }
    Ok(())
}

fn main() -> Result<()> {
    match Cli::parse().command {
        Command::Run(a) => cmd_run(a),
        Command::Convergence(a) => cmd_convergence(a),
        Command::DeriveCoeffs { order } => {
            let order = SchemeOrder::try_from(order)?;
            let c = derive_correction_coefficients(order);
            for (q, v) in c.exact.iter().enumerate() {
                println!("c{} = {}", 2 * q + 2, v);
            }
            Ok(())
        }
        Command::List => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            for name in PROBLEM_NAMES {
                let p = problem(name)?;
                // a closed pipe just ends the listing
                if writeln!(out, "{name:<18} {:<10} {}", p.system.name(), p.description).is_err() {
                    break;
                }
            }
            Ok(())
        }
    }
}
