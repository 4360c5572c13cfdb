//! Command-line front end: `eval`, `verify`, `search` and `list`.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::error::{Error, Result};
use crate::grid::Grid;
use crate::ineq;
use crate::metrics::{self, DiskPoint, Domain, HalfPlanePoint, MobiusH};
use crate::report::Report;
use crate::specfun;
use crate::suite::{self, ScanSpec, DEFAULT_SEED};

pub const SEED_ENV: &str = "HGF_SEED";

#[derive(Debug, Parser)]
#[command(
    name = "hgf",
    version,
    about = "Special functions, hyperbolic-type metrics and inequality checks"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Evaluate a single function, e.g. `hgf eval mu r=0.5`.
    Eval {
        function: String,
        /// Arguments as key=value; points as key=re,im.
        args: Vec<String>,
    },
    /// Run a verification suite and check it against its expectation.
    Verify(ScanArgs),
    /// Scan for counterexamples; only violating rows are written.
    Search(ScanArgs),
    /// List functions, suites and search targets.
    List,
}

#[derive(Debug, Args)]
struct ScanArgs {
    /// Suite or search target name.
    target: String,
    /// Grid shorthand: `param=value`, `param=v1,v2,...` or `param=min:max:count[:log]`.
    assignments: Vec<String>,
    /// Grid override `param=min:max:count[:log]` (repeatable).
    #[arg(long = "grid", value_name = "PARAM=SPEC")]
    grid: Vec<String>,
    /// Number of random samples.
    #[arg(long)]
    samples: Option<usize>,
    /// RNG seed; falls back to the HGF_SEED environment variable.
    #[arg(long)]
    seed: Option<u64>,
    /// Tolerance applied to every case.
    #[arg(long)]
    tol: Option<f64>,
    /// Write CSV here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads.
    #[arg(long)]
    jobs: Option<usize>,
    /// key=value configuration file; command-line flags take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(args: I, env_seed: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let res = match cli.cmd {
        Cmd::Eval { function, args } => cmd_eval(&function, &args, out),
        Cmd::Verify(a) => cmd_scan(&a, false, env_seed, out, err),
        Cmd::Search(a) => cmd_scan(&a, true, env_seed, out, err),
        Cmd::List => cmd_list(out).map(|_| 0),
    };
    match res {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Param(_) | Error::Domain { .. } | Error::Config(_) => 2,
                _ => 1,
            }
        }
    }
}

// ---------------------------------------------------------------------------
// eval

struct FnDef {
    name: &'static str,
    args: &'static str,
    about: &'static str,
}

const FUNCTIONS: &[FnDef] = &[
    FnDef {
        name: "ellint_K",
        args: "r",
        about: "complete elliptic integral of the first kind",
    },
    FnDef {
        name: "mu",
        args: "r",
        about: "modulus of the Groetzsch ring",
    },
    FnDef {
        name: "mu_inv",
        args: "y",
        about: "inverse of mu",
    },
    FnDef {
        name: "gamma2",
        args: "s",
        about: "Teichmueller-type capacity 2/pi mu(1/s), s > 1",
    },
    FnDef {
        name: "phi_K",
        args: "K r",
        about: "distortion function mu_inv(mu(r)/K)",
    },
    FnDef {
        name: "lambda_K",
        args: "K",
        about: "(phi_K(1/sqrt2)/phi_{1/K}(1/sqrt2))^2",
    },
    FnDef {
        name: "eta_K",
        args: "K t",
        about: "quasisymmetry distortion function",
    },
    FnDef {
        name: "rho_half_plane",
        args: "x y",
        about: "hyperbolic distance in the upper half plane",
    },
    FnDef {
        name: "rho_disk",
        args: "x y",
        about: "hyperbolic distance in the unit disk",
    },
    FnDef {
        name: "h_metric",
        args: "[dom] c x y",
        about: "h_c metric; dom = half-plane (default) or disk",
    },
    FnDef {
        name: "h_from_rho",
        args: "c rho",
        about: "h_c as a function of rho",
    },
    FnDef {
        name: "boundary_dist",
        args: "[dom] x",
        about: "distance to the boundary",
    },
    FnDef {
        name: "F_mfprop",
        args: "c t",
        about: "log(1 + 2c sinh(t/2))",
    },
    FnDef {
        name: "lemma22_f",
        args: "c x",
        about: "log(1 + c(x - 1/x))/log x",
    },
    FnDef {
        name: "arch",
        args: "x",
        about: "inverse hyperbolic cosine",
    },
    FnDef {
        name: "distortion_rhs",
        args: "c K h",
        about: "lambda(K)^{1/2} K^{1+c} max{h^{1/K}, h}",
    },
    FnDef {
        name: "stretch_map",
        args: "K x",
        about: "z |z|^{K-1}, prints re,im",
    },
    FnDef {
        name: "mobius",
        args: "m x",
        about: "(a z + b)/(c z + d) with m=a,b,c,d; prints re,im",
    },
];

/// Formats like C's `%.15g`.
pub fn fmt_sig(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".into();
    }
    let s = format!("{x:.14e}");
    let (mant, exp) = s.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    let mant = if mant.contains('.') {
        mant.trim_end_matches('0').trim_end_matches('.')
    } else {
        mant
    };
    if !(-5..15).contains(&exp) {
        return format!("{mant}e{}{:02}", if exp < 0 { '-' } else { '+' }, exp.abs());
    }
    let (sign, digits) = match mant.strip_prefix('-') {
        Some(m) => ("-", m.replace('.', "")),
        None => ("", mant.replace('.', "")),
    };
    if exp < 0 {
        format!("{sign}0.{}{digits}", "0".repeat((-exp - 1) as usize))
    } else {
        let int_len = exp as usize + 1;
        if digits.len() <= int_len {
            format!("{sign}{digits}{}", "0".repeat(int_len - digits.len()))
        } else {
            format!("{sign}{}.{}", &digits[..int_len], &digits[int_len..])
        }
    }
}

struct EvalArgs {
    map: BTreeMap<String, String>,
}

impl EvalArgs {
    fn parse(args: &[String]) -> Result<Self> {
        let mut map = BTreeMap::new();
        for a in args {
            let (k, v) = a
                .split_once('=')
                .ok_or_else(|| Error::Param(format!("argument {a:?} is not key=value")))?;
            if map
                .insert(k.trim().to_string(), v.trim().to_string())
                .is_some()
            {
                return Err(Error::Param(format!("argument {k:?} given twice")));
            }
        }
        Ok(EvalArgs { map })
    }

    fn take(&mut self, key: &str) -> Result<String> {
        self.map
            .remove(key)
            .ok_or_else(|| Error::Param(format!("missing argument {key}=")))
    }

    fn num(&mut self, key: &str) -> Result<f64> {
        let v = self.take(key)?;
        v.parse()
            .map_err(|_| Error::Param(format!("{key}={v} is not a number")))
    }

    fn nums(&mut self, key: &str, n: usize) -> Result<Vec<f64>> {
        let v = self.take(key)?;
        let parts: std::result::Result<Vec<f64>, _> =
            v.split(',').map(|p| p.trim().parse::<f64>()).collect();
        match parts {
            Ok(p) if p.len() == n => Ok(p),
            _ => Err(Error::Param(format!(
                "{key}={v}: expected {n} comma-separated numbers"
            ))),
        }
    }

    fn point(&mut self, key: &str) -> Result<(f64, f64)> {
        let v = self.nums(key, 2)?;
        Ok((v[0], v[1]))
    }

    fn domain(&mut self) -> Result<Domain> {
        match self.map.remove("dom") {
            Some(d) => d.parse(),
            None => Ok(Domain::HalfPlane),
        }
    }

    fn finish(self) -> Result<()> {
        match self.map.keys().next() {
            Some(k) => Err(Error::Param(format!("unexpected argument {k}="))),
            None => Ok(()),
        }
    }
}

enum Value {
    Scalar(f64),
    Point(f64, f64),
}

fn hp(p: (f64, f64)) -> Result<HalfPlanePoint> {
    HalfPlanePoint::new(p.0, p.1)
}

fn dp(p: (f64, f64)) -> Result<DiskPoint> {
    DiskPoint::new(p.0, p.1)
}

fn evaluate(function: &str, a: &mut EvalArgs) -> Result<Value> {
    use Value::Scalar;
    let v = match function {
        "ellint_K" => Scalar(specfun::ellint_k(a.num("r")?)?),
        "mu" => Scalar(specfun::mu(a.num("r")?)?),
        "mu_inv" => Scalar(specfun::mu_inv(a.num("y")?)?),
        "gamma2" => Scalar(specfun::gamma2(a.num("s")?)?),
        "phi_K" => {
            let k = a.num("K")?;
            Scalar(specfun::phi_k(k, a.num("r")?)?)
        }
        "lambda_K" => Scalar(specfun::lambda_k(a.num("K")?)?),
        "eta_K" => {
            let k = a.num("K")?;
            Scalar(specfun::eta_k(k, a.num("t")?)?)
        }
        "rho_half_plane" => {
            let x = hp(a.point("x")?)?;
            Scalar(metrics::rho_half_plane(x, hp(a.point("y")?)?))
        }
        "rho_disk" => {
            let x = dp(a.point("x")?)?;
            Scalar(metrics::rho_disk(x, dp(a.point("y")?)?))
        }
        "h_metric" => {
            let dom = a.domain()?;
            let c = a.num("c")?;
            let x = a.point("x")?;
            Scalar(dom.h_metric(c, x, a.point("y")?)?)
        }
        "h_from_rho" => {
            let c = a.num("c")?;
            Scalar(metrics::h_from_rho(c, a.num("rho")?)?)
        }
        "boundary_dist" => {
            let dom = a.domain()?;
            let (re, im) = a.point("x")?;
            Scalar(dom.boundary_dist(re, im)?)
        }
        "F_mfprop" => {
            let c = a.num("c")?;
            Scalar(ineq::f_mfprop(c, a.num("t")?)?)
        }
        "lemma22_f" => {
            let c = a.num("c")?;
            Scalar(ineq::lemma22_f(c, a.num("x")?)?)
        }
        "arch" => {
            let x = a.num("x")?;
            if !(x >= 1.0) {
                return Err(Error::Domain {
                    name: "x",
                    value: x,
                    expected: "x >= 1",
                });
            }
            Scalar(ineq::arch(x))
        }
        "distortion_rhs" => {
            let c = a.num("c")?;
            let k = a.num("K")?;
            Scalar(ineq::distortion_rhs(c, k, a.num("h")?)?)
        }
        "stretch_map" => {
            let k = a.num("K")?;
            let p = metrics::stretch_map(k, hp(a.point("x")?)?)?;
            Value::Point(p.re(), p.im())
        }
        "mobius" => {
            let m = a.nums("m", 4)?;
            let map = MobiusH::new(m[0], m[1], m[2], m[3])?;
            let p = map.apply(hp(a.point("x")?)?)?;
            Value::Point(p.re(), p.im())
        }
        _ => unreachable!("checked against FUNCTIONS"),
    };
    Ok(v)
}

fn usage_functions() -> String {
    let mut s = String::from("functions:\n");
    for f in FUNCTIONS {
        s.push_str(&format!("  {:<16} {:<12} {}\n", f.name, f.args, f.about));
    }
    s
}

fn cmd_eval(function: &str, args: &[String], out: &mut dyn Write) -> Result<i32> {
    if !FUNCTIONS.iter().any(|f| f.name == function) {
        return Err(Error::Param(format!(
            "unknown function {function:?}\nusage: hgf eval <function> key=value ...\n{}",
            usage_functions()
        )));
    }
    let mut a = EvalArgs::parse(args)?;
    let v = evaluate(function, &mut a)?;
    a.finish()?;
    let text = match v {
        Value::Scalar(x) => fmt_sig(x),
        Value::Point(re, im) => format!("{},{}", fmt_sig(re), fmt_sig(im)),
    };
    writeln!(out, "{text}").map_err(io_err)?;
    Ok(0)
}

// ---------------------------------------------------------------------------
// verify / search

fn io_err(e: std::io::Error) -> Error {
    Error::Config(format!("i/o: {e}"))
}

/// Values from a `key = value` file. `#` starts a comment.
#[derive(Debug, Default, PartialEq)]
pub struct FileConfig {
    pub seed: Option<u64>,
    pub tol: Option<f64>,
    pub samples: Option<usize>,
    pub jobs: Option<usize>,
    pub out: Option<PathBuf>,
    pub grids: BTreeMap<String, Grid>,
}

fn parse_value<T: std::str::FromStr>(key: &str, v: &str) -> Result<T> {
    v.parse()
        .map_err(|_| Error::Config(format!("config: bad value {v:?} for {key}")))
}

impl FileConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = FileConfig::default();
        for (n, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| {
                Error::Config(format!("config line {}: expected key = value", n + 1))
            })?;
            let (k, v) = (k.trim(), v.trim());
            match k {
                "seed" => cfg.seed = Some(parse_value(k, v)?),
                "tol" => cfg.tol = Some(parse_value(k, v)?),
                "samples" => cfg.samples = Some(parse_value(k, v)?),
                "jobs" => cfg.jobs = Some(parse_value(k, v)?),
                "out" => cfg.out = Some(PathBuf::from(v)),
                _ => match k.strip_prefix("grid.") {
                    Some(p) => {
                        cfg.grids.insert(p.to_string(), parse_grid(v)?);
                    }
                    None => return Err(Error::Config(format!("config: unknown key {k:?}"))),
                },
            }
        }
        Ok(cfg)
    }
}

/// `v`, `v1,v2,...` or `min:max:count[:log]`.
pub fn parse_grid(s: &str) -> Result<Grid> {
    if s.contains(',') {
        let vals: std::result::Result<Vec<f64>, _> =
            s.split(',').map(|p| p.trim().parse::<f64>()).collect();
        match vals {
            Ok(v) if v.iter().all(|x| x.is_finite()) => Ok(Grid::list(&v)),
            _ => Err(Error::Param(format!("bad value list {s:?}"))),
        }
    } else {
        s.parse()
    }
}

fn parse_assignment(s: &str) -> Result<(String, Grid)> {
    let (k, v) = s
        .split_once('=')
        .ok_or_else(|| Error::Param(format!("expected param=spec, got {s:?}")))?;
    Ok((k.trim().to_string(), parse_grid(v.trim())?))
}

fn build_spec(a: &ScanArgs, env_seed: Option<&str>) -> Result<(ScanSpec, Option<PathBuf>)> {
    let file = match &a.config {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
            FileConfig::parse(&text)?
        }
        None => FileConfig::default(),
    };
    let env_seed =
        match env_seed {
            Some(s) => Some(s.trim().parse::<u64>().map_err(|_| {
                Error::Config(format!("{SEED_ENV}={s:?} is not an unsigned integer"))
            })?),
            None => None,
        };
    let mut spec = ScanSpec::new(&a.target);
    spec.seed = a.seed.or(file.seed).or(env_seed).unwrap_or(DEFAULT_SEED);
    spec.tol = a.tol.or(file.tol);
    spec.samples = a.samples.or(file.samples);
    spec.jobs = a.jobs.or(file.jobs);
    spec.grids = file.grids;
    for s in a.assignments.iter().chain(&a.grid) {
        let (k, g) = parse_assignment(s)?;
        spec.grids.insert(k, g);
    }
    if spec.jobs == Some(0) {
        return Err(Error::Config("--jobs must be at least 1".into()));
    }
    Ok((spec, a.out.clone().or(file.out)))
}

fn emit(report: &Report, path: Option<&PathBuf>, out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => {
            let f = fs::File::create(p)
                .map_err(|e| Error::Config(format!("cannot create {}: {e}", p.display())))?;
            let mut w = std::io::BufWriter::new(f);
            report.write_csv(&mut w).map_err(io_err)?;
            w.flush().map_err(io_err)
        }
        None => report.write_csv(out).map_err(io_err),
    }
}

fn cmd_scan(
    a: &ScanArgs,
    search: bool,
    env_seed: Option<&str>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let (spec, path) = build_spec(a, env_seed)?;
    let report = if search {
        suite::run_search(&spec)?
    } else {
        suite::run_scan(&spec)?
    };
    emit(&report, path.as_ref(), out)?;
    writeln!(err, "{}", report.summary_text()).map_err(io_err)?;
    Ok(if report.meets_expectation() { 0 } else { 1 })
}

fn cmd_list(out: &mut dyn Write) -> Result<()> {
    let mut s = usage_functions();
    s.push_str("\nsuites (hgf verify <suite>):\n");
    for d in suite::SUITES {
        s.push_str(&format!(
            "  {:<20} tol {:<6e} {}\n",
            d.name, d.default_tol, d.about
        ));
        let grids: Vec<String> = d
            .default_grids()
            .iter()
            .map(|(n, g)| format!("{n}={g}"))
            .collect();
        if !grids.is_empty() || d.default_samples > 0 {
            let mut line = grids.join(" ");
            if d.default_samples > 0 {
                line.push_str(&format!(" samples={}", d.default_samples));
            }
            s.push_str(&format!("  {:<20} {}\n", "", line.trim()));
        }
    }
    s.push_str("\nsearch targets (hgf search <target>):\n");
    for d in suite::SEARCH_TARGETS {
        s.push_str(&format!("  {:<20} {}\n", d.name, d.about));
    }
    out.write_all(s.as_bytes()).map_err(io_err)
}
