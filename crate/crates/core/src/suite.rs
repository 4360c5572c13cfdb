//! Named verification suites, scan specifications and the parallel runner.

use std::collections::BTreeMap;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grid::{sample_half_plane, seeded_rng, Grid};
use crate::ineq::{
    self, DistortionBound, IneqCase, ModelMap, INVARIANCE_TOL, METRIC_TOL, THEOREM_TOL,
};
use crate::metrics::{self, DiskPoint, HalfPlanePoint, MobiusH};
use crate::report::{Expectation, Report};
use crate::specfun::{SpecFunConfig, UnitPair};

pub const DEFAULT_SEED: u64 = 42;

/// What to run: a suite name plus overrides of its defaults.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ScanSpec {
    pub suite: String,
    pub grids: BTreeMap<String, Grid>,
    pub samples: Option<usize>,
    pub seed: u64,
    pub tol: Option<f64>,
    pub jobs: Option<usize>,
}

impl ScanSpec {
    pub fn new(suite: &str) -> Self {
        ScanSpec {
            suite: suite.to_string(),
            seed: DEFAULT_SEED,
            ..Default::default()
        }
    }

    pub fn grid(mut self, name: &str, grid: Grid) -> Self {
        self.grids.insert(name.to_string(), grid);
        self
    }

    pub fn samples(mut self, n: usize) -> Self {
        self.samples = Some(n);
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn tol(mut self, tol: f64) -> Self {
        self.tol = Some(tol);
        self
    }

    pub fn jobs(mut self, jobs: usize) -> Self {
        self.jobs = Some(jobs);
        self
    }
}

/// Resolved inputs handed to a suite body.
pub struct SuiteInput {
    grids: BTreeMap<&'static str, Vec<f64>>,
    pub samples: usize,
    pub seed: u64,
    pub tol: f64,
    pub cfg: SpecFunConfig,
}

impl SuiteInput {
    fn grid(&self, name: &str) -> &[f64] {
        self.grids.get(name).map_or(&[], |v| v.as_slice())
    }

    fn rng(&self) -> ChaCha8Rng {
        seeded_rng(self.seed)
    }
}

type SuiteFn = fn(&SuiteInput) -> Result<Vec<IneqCase>>;

pub struct SuiteDef {
    pub name: &'static str,
    pub about: &'static str,
    /// CSV parameter columns, in order.
    pub params: &'static [&'static str],
    pub default_tol: f64,
    /// 0 for purely grid-driven suites.
    pub default_samples: usize,
    pub expectation: Expectation,
    defaults: fn() -> Vec<(&'static str, Grid)>,
    run: SuiteFn,
}

impl SuiteDef {
    pub fn default_grids(&self) -> Vec<(&'static str, Grid)> {
        (self.defaults)()
    }

    pub fn grid_params(&self) -> Vec<&'static str> {
        self.default_grids().into_iter().map(|(n, _)| n).collect()
    }
}

impl std::fmt::Debug for SuiteDef {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SuiteDef")
            .field("name", &self.name)
            .finish()
    }
}

const C_GRID: [f64; 5] = [1.0, 1.5, 2.0, 5.0, 10.0];
const K_GRID: [f64; 7] = [1.0, 1.01, 1.2, 1.5, 2.0, 4.0, 8.0];
const LAMBDA_K: [f64; 7] = [1.0, 1.01, 1.1, 1.5, 2.0, 3.0, 5.0];

fn c_grid() -> Grid {
    Grid::list(&C_GRID)
}

fn k_grid() -> Grid {
    Grid::list(&K_GRID)
}

fn t_grid() -> Grid {
    Grid::log(1e-6, 1e6, 61)
}

fn r_grid() -> Grid {
    Grid::log(1e-6, 1.0 - 1e-6, 201)
}

fn hp(p: (f64, f64)) -> Result<HalfPlanePoint> {
    HalfPlanePoint::new(p.0, p.1)
}

fn dp(p: (f64, f64)) -> Result<DiskPoint> {
    DiskPoint::new(p.0, p.1)
}

/// Keeps parameter errors, and turns numerical failures into failing rows.
fn row(
    res: Result<IneqCase>,
    name: &'static str,
    params: impl FnOnce() -> Vec<(&'static str, f64)>,
    tol: f64,
) -> Result<IneqCase> {
    match res {
        Ok(case) => Ok(case),
        Err(e @ (Error::Param(_) | Error::Domain { .. } | Error::Config(_))) => Err(e),
        Err(_) => Ok(IneqCase::le(name, params(), f64::NAN, f64::NAN, tol)),
    }
}

fn par_rows<T: Sync>(
    items: &[T],
    f: impl Fn(&T) -> Result<IneqCase> + Sync + Send,
) -> Result<Vec<IneqCase>> {
    items.par_iter().map(f).collect()
}

fn product2(a: &[f64], b: &[f64]) -> Vec<(f64, f64)> {
    a.iter()
        .flat_map(|&x| b.iter().map(move |&y| (x, y)))
        .collect()
}

fn product3(a: &[f64], b: &[f64], c: &[f64]) -> Vec<(f64, f64, f64)> {
    product2(a, b)
        .into_iter()
        .flat_map(|(x, y)| c.iter().map(move |&z| (x, y, z)))
        .collect()
}

fn consecutive(v: &[f64]) -> Vec<(f64, f64)> {
    v.windows(2).map(|w| (w[0], w[1])).collect()
}

// ---------------------------------------------------------------------------
// suite bodies

fn run_bernoulli(inp: &SuiteInput) -> Result<Vec<IneqCase>> {
    let items: Vec<_> = product3(inp.grid("c1"), inp.grid("c2"), inp.grid("t"))
        .into_iter()
        .filter(|(c1, c2, _)| c1 >= c2)
        .collect();
    par_rows(&items, |&(c1, c2, t)| {
        ineq::bernoulli_pair(c1, c2, t, inp.tol)
    })
}

fn run_prop21(inp: &SuiteInput) -> Result<Vec<IneqCase>> {
    let items = product2(inp.grid("c"), inp.grid("x"));
    par_rows(&items, |&(c, x)| ineq::prop21_case(c, x, inp.tol))
}

fn run_lemma22(inp: &SuiteInput) -> Result<Vec<IneqCase>> {
    let items: Vec<_> = inp
        .grid("c")
        .iter()
        .flat_map(|&c| {
            consecutive(inp.grid("x"))
                .into_iter()
                .map(move |(a, b)| (c, a, b))
        })
        .collect();
    par_rows(&items, |&(c, a, b)| ineq::lemma22_pair(c, a, b, inp.tol))
}

fn t_pairs(inp: &SuiteInput) -> Vec<(f64, f64, f64)> {
    inp.grid("c")
        .iter()
        .flat_map(|&c| {
            consecutive(inp.grid("t"))
                .into_iter()
                .map(move |(a, b)| (c, a, b))
        })
        .collect()
}

fn run_mfprop_increasing(inp: &SuiteInput) -> Result<Vec<IneqCase>> {
    par_rows(&t_pairs(inp), |&(c, a, b)| {
        ineq::mfprop_increasing_pair(c, a, b, inp.tol)
    })
}

fn run_mfprop_ratio(inp: &SuiteInput) -> Result<Vec<IneqCase>> {
    par_rows(&t_pairs(inp), |&(c, a, b)| {
        ineq::mfprop_ratio_pair(c, a, b, inp.tol)
    })
}

fn run_subadditivity(inp: &SuiteInput) -> Result<Vec<IneqCase>> {
    let items = product3(inp.grid("c"), inp.grid("s"), inp.grid("t"));
    par_rows(&items, |&(c, s, t)| {
        ineq::subadditivity_case(c, s, t, inp.tol)
    })
}

type Triple = [(f64, f64); 3];

fn triangle_case(
    name: &'static str,
    c: f64,
    pts: &Triple,
    h: impl Fn(usize, usize) -> f64,
    tol: f64,
) -> IneqCase {
    // report the longest side against the sum of the other two
    let d = [h(0, 1), h(0, 2), h(1, 2)];
    let long = d.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let others = d.iter().sum::<f64>() - long;
    let margin = metrics::triangle_margin(&h);
    let params = vec![
        ("c", c),
        ("x_re", pts[0].0),
        ("x_im", pts[0].1),
        ("y_re", pts[1].0),
        ("y_im", pts[1].1),
        ("z_re", pts[2].0),
        ("z_im", pts[2].1),
    ];
    IneqCase::with_margin(name, params, long, others, margin, 1.0, tol)
}

fn half_plane_triples(rng: &mut ChaCha8Rng, n: usize) -> Vec<Triple> {
    (0..n)
        .map(|_| {
            [
                sample_half_plane(rng),
                sample_half_plane(rng),
                sample_half_plane(rng),
            ]
        })
        .collect()
}

fn run_triangle_half_plane(inp: &SuiteInput) -> Result<Vec<IneqCase>> {
    let triples = half_plane_triples(&mut inp.rng(), inp.samples);
    let items: Vec<_> = inp
        .grid("c")
        .iter()
        .flat_map(|&c| triples.iter().map(move |t| (c, *t)))
        .collect();
    par_rows(&items, |(c, t)| {
        let p = [hp(t[0])?, hp(t[1])?, hp(t[2])?];
        let c = *c;
        Ok(triangle_case(
            "triangle-half-plane",
            c,
            t,
            |i, j| metrics::h_half_plane(c, p[i], p[j]),
            inp.tol,
        ))
    })
}

fn polar(r: f64, theta: f64) -> (f64, f64) {
    (r * theta.cos(), r * theta.sin())
}

/// Collinear triples `−r, 0, r` with `r → 1`, then random triples close to a
/// diameter with the outer points near the boundary.
fn disk_triples(rng: &mut ChaCha8Rng, n: usize) -> Vec<Triple> {
    let mut out: Vec<Triple> = crate::grid::log_space(1e-8, 0.5, 41)
        .into_iter()
        .rev()
        .map(|d| {
            let r = 1.0 - d;
            [(-r, 0.0), (0.0, 0.0), (r, 0.0)]
        })
        .collect();
    use std::f64::consts::PI;
    for _ in 0..n {
        let theta = rng.random_range(0.0..2.0 * PI);
        let r1 = 1.0 - 10f64.powf(-rng.random_range(1.0..8.0));
        let r2 = 1.0 - 10f64.powf(-rng.random_range(1.0..8.0));
        let e1 = rng.random_range(-0.1..0.1);
        let e2 = rng.random_range(-0.1..0.1);
        let m = polar(rng.random_range(0.0..0.1), rng.random_range(0.0..2.0 * PI));
        out.push([polar(r1, theta + PI + e1), m, polar(r2, theta + e2)]);
    }
    out
}

fn run_disk_triangle(inp: &SuiteInput) -> Result<Vec<IneqCase>> {
    let triples = disk_triples(&mut inp.rng(), inp.samples);
    let items: Vec<_> = inp
        .grid("c")
        .iter()
        .flat_map(|&c| triples.iter().map(move |t| (c, *t)))
        .collect();
    par_rows(&items, |(c, t)| {
        let p = [dp(t[0])?, dp(t[1])?, dp(t[2])?];
        let c = *c;
        if !(c > 0.0) {
            return Err(Error::Param(format!("c = {c} must be positive")));
        }
        Ok(triangle_case(
            "disk-triangle",
            c,
            t,
            |i, j| metrics::h_disk(c, p[i], p[j]),
            inp.tol,
        ))
    })
}

fn half_plane_pairs(rng: &mut ChaCha8Rng, n: usize) -> Vec<[(f64, f64); 2]> {
    (0..n)
        .map(|_| [sample_half_plane(rng), sample_half_plane(rng)])
        .collect()
}

fn run_bridge(inp: &SuiteInput) -> Result<Vec<IneqCase>> {
    let pairs = half_plane_pairs(&mut inp.rng(), inp.samples);
    let items: Vec<_> = inp
        .grid("c")
        .iter()
        .flat_map(|&c| pairs.iter().map(move |p| (c, *p)))
        .collect();
    par_rows(&items, |&(c, [x, y])| {
        let (px, py) = (hp(x)?, hp(y)?);
        let h = metrics::h_half_plane(c, px, py);
        let params = || {
            vec![
                ("c", c),
                ("x_re", x.0),
                ("x_im", x.1),
                ("y_re", y.0),
                ("y_im", y.1),
            ]
        };
        let res = metrics::h_from_rho(c, metrics::rho_half_plane(px, py))
            .map(|b| IneqCase::eq("bridge", params(), h, b, inp.tol));
        row(res, "bridge", params, inp.tol)
    })
}

fn random_mobius(rng: &mut ChaCha8Rng) -> [f64; 4] {
    loop {
        let m: [f64; 4] = std::array::from_fn(|_| rng.random_range(-3.0..3.0));
        let det = m[0] * m[3] - m[1] * m[2];
        if det > 0.25 {
            let s = det.sqrt();
            return m.map(|v| v / s);
        }
    }
}

type MobiusItem = ([f64; 4], [(f64, f64); 2]);

fn mobius_items(inp: &SuiteInput) -> Vec<MobiusItem> {
    let mut rng = inp.rng();
    (0..inp.samples)
        .map(|_| {
            (
                random_mobius(&mut rng),
                [sample_half_plane(&mut rng), sample_half_plane(&mut rng)],
            )
        })
        .collect()
}

fn mobius_params(m: &[f64; 4], x: (f64, f64), y: (f64, f64)) -> Vec<(&'static str, f64)> {
    vec![
        ("m_a", m[0]),
        ("m_b", m[1]),
        ("m_c", m[2]),
        ("m_d", m[3]),
        ("x_re", x.0),
        ("x_im", x.1),
        ("y_re", y.0),
        ("y_im", y.1),
    ]
}

fn run_mobius_invariance(inp: &SuiteInput) -> Result<Vec<IneqCase>> {
    par_rows(&mobius_items(inp), |(m, [x, y])| {
        let map = MobiusH::new(m[0], m[1], m[2], m[3])?;
        let params = || mobius_params(m, *x, *y);
        let res = (|| {
            let (px, py) = (hp(*x)?, hp(*y)?);
            let (fx, fy) = (map.apply(px)?, map.apply(py)?);
            let before = metrics::rho_half_plane(px, py);
            let after = metrics::rho_half_plane(fx, fy);
            Ok(IneqCase::eq(
                "mobius-invariance",
                params(),
                after,
                before,
                inp.tol,
            ))
        })();
        row(res, "mobius-invariance", params, inp.tol)
    })
}

fn run_comp_rho(inp: &SuiteInput) -> Result<Vec<IneqCase>> {
    let pairs = half_plane_pairs(&mut inp.rng(), inp.samples);
    let items: Vec<_> = inp
        .grid("c")
        .iter()
        .flat_map(|&c| pairs.iter().map(move |p| (c, *p)))
        .collect();
    par_rows(&items, |&(c, [x, y])| {
        ineq::comp_rho_case(c, hp(x)?, hp(y)?, inp.tol)
    })
}

fn run_arch_bounds(inp: &SuiteInput) -> Result<Vec<IneqCase>> {
    par_rows(inp.grid("x"), |&x| ineq::arch_bounds_case(x, inp.tol))
}

fn run_fuji(inp: &SuiteInput) -> Result<Vec<IneqCase>> {
    let items = product3(inp.grid("c"), inp.grid("K"), inp.grid("t"));
    par_rows(&items, |&(c, k, t)| ineq::fuji_case(c, k, t, inp.tol))
}

fn run_k2_exponent(inp: &SuiteInput) -> Result<Vec<IneqCase>> {
    let items = product3(inp.grid("c"), inp.grid("K"), inp.grid("t"));
    par_rows(&items, |&(c, k, t)| ineq::k2_variant_case(c, k, t, inp.tol))
}

fn run_remark310(inp: &SuiteInput) -> Result<Vec<IneqCase>> {
    let tol = inp.tol;
    let fuji = ineq::fuji_case(ineq::REMARK310_C, ineq::REMARK310_K, ineq::REMARK310_T, tol)?;
    Ok(vec![ineq::remark310_case(tol), fuji])
}

fn run_lemma_a(inp: &SuiteInput) -> Result<Vec<IneqCase>> {
    let items = product2(inp.grid("c"), inp.grid("K"));
    par_rows(&items, |&(c, k)| ineq::lemma_a_case(c, k, inp.tol))
}

fn run_lemma_b1(inp: &SuiteInput) -> Result<Vec<IneqCase>> {
    let items = product2(inp.grid("K"), inp.grid("t"));
    par_rows(&items, |&(k, t)| ineq::lemma_b1_case(k, t, inp.tol))
}

fn run_lemma_b2(inp: &SuiteInput) -> Result<Vec<IneqCase>> {
    let items: Vec<_> = product3(inp.grid("c"), inp.grid("K"), inp.grid("t"))
        .into_iter()
        .filter(|&(c, _, t)| t >= ineq::log_branch_boundary(c) && t < 1.0)
        .collect();
    par_rows(&items, |&(c, k, t)| ineq::lemma_b2_case(c, k, t, inp.tol))
}

fn run_lemma_c(inp: &SuiteInput) -> Result<Vec<IneqCase>> {
    let items: Vec<_> = product2(inp.grid("c"), inp.grid("t"))
        .into_iter()
        .flat_map(|(c, t)| {
            consecutive(inp.grid("K"))
                .into_iter()
                .map(move |(a, b)| (c, t, a, b))
        })
        .collect();
    par_rows(&items, |&(c, t, k1, k2)| {
        ineq::lemma_c_pair(c, t, k1, k2, inp.tol)
    })
}

fn run_lemma_c_log(inp: &SuiteInput) -> Result<Vec<IneqCase>> {
    let items = product3(inp.grid("c"), inp.grid("K"), inp.grid("t"));
    par_rows(&items, |&(c, k, t)| {
        ineq::lemma_c_log_case(c, k, t, inp.tol)
    })
}

fn bounds(inp: &SuiteInput) -> Result<Vec<DistortionBound>> {
    inp.grid("K")
        .iter()
        .map(|&k| DistortionBound::with_config(inp.cfg, k))
        .collect()
}

fn run_schwarz_chain(inp: &SuiteInput) -> Result<Vec<IneqCase>> {
    let bs = bounds(inp)?;
    let items: Vec<_> = inp
        .grid("c")
        .iter()
        .flat_map(|&c| {
            bs.iter()
                .flat_map(move |b| inp.grid("rho").iter().map(move |&r| (c, b, r)))
        })
        .collect();
    par_rows(&items, |&(c, b, rho)| {
        let res = ineq::schwarz_chain_case_with(b, c, rho, inp.tol);
        row(
            res,
            "schwarz-chain",
            || vec![("c", c), ("K", b.k), ("rho", rho)],
            inp.tol,
        )
    })
}

fn run_distortion_stretch(inp: &SuiteInput) -> Result<Vec<IneqCase>> {
    let bs = bounds(inp)?;
    let pairs = half_plane_pairs(&mut inp.rng(), inp.samples);
    let pairs = &pairs;
    let items: Vec<_> = inp
        .grid("c")
        .iter()
        .flat_map(|&c| {
            bs.iter()
                .flat_map(move |b| pairs.iter().map(move |p| (c, b, *p)))
        })
        .collect();
    par_rows(&items, |&(c, b, [x, y])| {
        let (px, py) = (hp(x)?, hp(y)?);
        let res = ineq::empirical_distortion_case(b, c, &ModelMap::Stretch(b.k), px, py, inp.tol);
        row(
            res,
            "distortion-stretch",
            || {
                vec![
                    ("c", c),
                    ("K", b.k),
                    ("x_re", x.0),
                    ("x_im", x.1),
                    ("y_re", y.0),
                    ("y_im", y.1),
                ]
            },
            inp.tol,
        )
    })
}

fn run_distortion_mobius(inp: &SuiteInput) -> Result<Vec<IneqCase>> {
    let bound = DistortionBound::with_config(inp.cfg, 1.0)?;
    let maps = mobius_items(inp);
    let items: Vec<_> = inp
        .grid("c")
        .iter()
        .flat_map(|&c| maps.iter().map(move |m| (c, *m)))
        .collect();
    par_rows(&items, |&(c, (m, [x, y]))| {
        let params = || {
            let mut p = vec![("c", c)];
            p.extend(mobius_params(&m, x, y));
            p
        };
        let res = (|| {
            let map = ModelMap::Mobius(MobiusH::new(m[0], m[1], m[2], m[3])?);
            let case = ineq::empirical_distortion_case(&bound, c, &map, hp(x)?, hp(y)?, inp.tol)?;
            // K = 1: the bound collapses to equality of h values
            Ok(IneqCase::eq(
                "distortion-mobius",
                params(),
                case.lhs,
                case.rhs,
                inp.tol,
            ))
        })();
        row(res, "distortion-mobius", params, inp.tol)
    })
}

fn run_lambda_bound(inp: &SuiteInput) -> Result<Vec<IneqCase>> {
    par_rows(inp.grid("K"), |&k| {
        row(
            ineq::lambda_bound_case(&inp.cfg, k, inp.tol),
            "lambda-bound",
            || vec![("K", k)],
            inp.tol,
        )
    })
}

fn run_eta_bound(inp: &SuiteInput) -> Result<Vec<IneqCase>> {
    let lambdas: Vec<(f64, f64)> = inp
        .grid("K")
        .iter()
        .map(|&k| inp.cfg.lambda_k(k).map(|l| (k, l)))
        .collect::<Result<_>>()?;
    let items: Vec<_> = lambdas
        .iter()
        .flat_map(|&(k, l)| inp.grid("t").iter().map(move |&t| (k, l, t)))
        .collect();
    par_rows(&items, |&(k, l, t)| {
        row(
            ineq::eta_bound_case(&inp.cfg, l, k, t, inp.tol),
            "eta-bound",
            || vec![("K", k), ("t", t)],
            inp.tol,
        )
    })
}

fn run_mu_roundtrip(inp: &SuiteInput) -> Result<Vec<IneqCase>> {
    par_rows(inp.grid("r"), |&r| {
        let res = inp
            .cfg
            .mu(r)
            .and_then(|y| inp.cfg.mu_inv(y))
            .map(|back| IneqCase::eq("mu-roundtrip", vec![("r", r)], back, r, inp.tol));
        row(res, "mu-roundtrip", || vec![("r", r)], inp.tol)
    })
}

fn run_mu_reflection(inp: &SuiteInput) -> Result<Vec<IneqCase>> {
    // each r is paired with its complement through an exact representation
    par_rows(inp.grid("r"), |&r| {
        let p = UnitPair::new(r);
        let res = inp
            .cfg
            .mu_pair(p)
            .and_then(|a| inp.cfg.mu_pair(p.swap()).map(|b| a * b))
            .map(|prod| {
                IneqCase::eq(
                    "mu-reflection",
                    vec![("r", r)],
                    prod,
                    crate::specfun::PI_SQ_OVER_4,
                    inp.tol,
                )
            });
        row(res, "mu-reflection", || vec![("r", r)], inp.tol)
    })
}

fn run_phi_identity(inp: &SuiteInput) -> Result<Vec<IneqCase>> {
    par_rows(inp.grid("r"), |&r| {
        let res = inp.cfg.phi_k_pair(1.0, UnitPair::new(r)).map(|p| {
            let sq = p.value * p.value + p.complement * p.complement;
            IneqCase::with_margin(
                "phi-identity",
                vec![("r", r)],
                p.value,
                r,
                -(p.value - r).abs().max((sq - 1.0).abs()),
                1.0,
                inp.tol,
            )
        });
        row(res, "phi-identity", || vec![("r", r)], inp.tol)
    })
}

fn run_phi_inverse(inp: &SuiteInput) -> Result<Vec<IneqCase>> {
    let items = product2(inp.grid("K"), inp.grid("r"));
    par_rows(&items, |&(k, r)| {
        let res = inp
            .cfg
            .phi_k_pair(k, UnitPair::new(r))
            .and_then(|p| inp.cfg.phi_k_pair(1.0 / k, p))
            .map(|back| {
                IneqCase::eq(
                    "phi-inverse",
                    vec![("K", k), ("r", r)],
                    back.value,
                    r,
                    inp.tol,
                )
            });
        row(res, "phi-inverse", || vec![("K", k), ("r", r)], inp.tol)
    })
}

// ---------------------------------------------------------------------------
// registry

macro_rules! grids {
    ($($name:literal => $grid:expr),* $(,)?) => {
        || vec![$(($name, $grid)),*]
    };
}

const TRIPLE_COLS: &[&str] = &["c", "x_re", "x_im", "y_re", "y_im", "z_re", "z_im"];
const PAIR_COLS: &[&str] = &["c", "x_re", "x_im", "y_re", "y_im"];
const CKT: &[&str] = &["c", "K", "t"];

pub static SUITES: &[SuiteDef] = &[
    SuiteDef {
        name: "bernoulli",
        about: "log(1+c1 t) <= (c1/c2) log(1+c2 t) for c1 >= c2 >= 1",
        params: &["c1", "c2", "t"],
        default_tol: THEOREM_TOL,
        default_samples: 0,
        expectation: Expectation::NoViolations,
        defaults: grids!["c1" => c_grid(), "c2" => c_grid(), "t" => t_grid()],
        run: run_bernoulli,
    },
    SuiteDef {
        name: "prop21",
        about: "x <= c(x - 1/x) + 1 for x >= 1",
        params: &["c", "x"],
        default_tol: THEOREM_TOL,
        default_samples: 0,
        expectation: Expectation::NoViolations,
        defaults: grids!["c" => c_grid(), "x" => Grid::log(1.0, 1e6, 61)],
        run: run_prop21,
    },
    SuiteDef {
        name: "lemma22",
        about: "log(1 + c(x - 1/x))/log x is decreasing on x > 1",
        params: &["c", "x1", "x2"],
        default_tol: THEOREM_TOL,
        default_samples: 0,
        expectation: Expectation::NoViolations,
        defaults: grids!["c" => c_grid(), "x" => Grid::log(1.001, 1e6, 61)],
        run: run_lemma22,
    },
    SuiteDef {
        name: "mfprop-increasing",
        about: "F(t) = log(1 + 2c sinh(t/2)) is increasing",
        params: &["c", "t1", "t2"],
        default_tol: THEOREM_TOL,
        default_samples: 0,
        expectation: Expectation::NoViolations,
        defaults: grids!["c" => c_grid(), "t" => Grid::log(1e-4, 50.0, 61)],
        run: run_mfprop_increasing,
    },
    SuiteDef {
        name: "mfprop-ratio",
        about: "F(t)/t is decreasing",
        params: &["c", "t1", "t2"],
        default_tol: THEOREM_TOL,
        default_samples: 0,
        expectation: Expectation::NoViolations,
        defaults: grids!["c" => c_grid(), "t" => Grid::log(1e-4, 50.0, 61)],
        run: run_mfprop_ratio,
    },
    SuiteDef {
        name: "subadditivity",
        about: "F(s+t) <= F(s) + F(t)",
        params: &["c", "s", "t"],
        default_tol: THEOREM_TOL,
        default_samples: 0,
        expectation: Expectation::NoViolations,
        defaults: grids![
            "c" => c_grid(),
            "s" => Grid::log(1e-3, 20.0, 21),
            "t" => Grid::log(1e-3, 20.0, 21),
        ],
        run: run_subadditivity,
    },
    SuiteDef {
        name: "triangle-half-plane",
        about: "triangle inequality for h on the half plane, random triples",
        params: TRIPLE_COLS,
        default_tol: METRIC_TOL,
        default_samples: 100_000,
        expectation: Expectation::NoViolations,
        defaults: grids!["c" => Grid::list(&[1.0, 1.5, 2.0, 5.0])],
        run: run_triangle_half_plane,
    },
    SuiteDef {
        name: "disk-triangle",
        about: "triangle inequality for h on the disk; fails for c < 2",
        params: TRIPLE_COLS,
        default_tol: METRIC_TOL,
        default_samples: 2_000,
        expectation: Expectation::ViolationsBelow {
            param: "c",
            threshold: 2.0,
        },
        defaults: grids!["c" => Grid::list(&[1.0, 2.0])],
        run: run_disk_triangle,
    },
    SuiteDef {
        name: "bridge",
        about: "h on the half plane agrees with log(1 + 2c sinh(rho/2))",
        params: PAIR_COLS,
        default_tol: METRIC_TOL,
        default_samples: 10_000,
        expectation: Expectation::NoViolations,
        defaults: grids!["c" => Grid::list(&[0.5, 1.0, 2.0, 5.0])],
        run: run_bridge,
    },
    SuiteDef {
        name: "mobius-invariance",
        about: "rho is preserved by Moebius self-maps of the half plane",
        params: &["m_a", "m_b", "m_c", "m_d", "x_re", "x_im", "y_re", "y_im"],
        default_tol: INVARIANCE_TOL,
        default_samples: 10_000,
        expectation: Expectation::NoViolations,
        defaults: grids![],
        run: run_mobius_invariance,
    },
    SuiteDef {
        name: "comp-rho",
        about: "h/c <= rho <= 2h on the half plane",
        params: PAIR_COLS,
        default_tol: METRIC_TOL,
        default_samples: 100_000,
        expectation: Expectation::NoViolations,
        defaults: grids!["c" => Grid::list(&[1.0, 2.0, 10.0])],
        run: run_comp_rho,
    },
    SuiteDef {
        name: "arch-bounds",
        about: "2log(1+sqrt((x-1)/2)) <= arch x <= 2log(1+sqrt(2(x-1)))",
        params: &["x"],
        default_tol: METRIC_TOL,
        default_samples: 0,
        expectation: Expectation::NoViolations,
        defaults: grids!["x" => Grid::log(1.0, 1e6, 121)],
        run: run_arch_bounds,
    },
    SuiteDef {
        name: "fuji",
        about: "log(1+2c max{t^K,t^{1/K}}) <= K^{1+c} max{L, L^{1/K}}, L = log(1+2ct)",
        params: CKT,
        default_tol: THEOREM_TOL,
        default_samples: 0,
        expectation: Expectation::NoViolations,
        defaults: grids!["c" => c_grid(), "K" => k_grid(), "t" => t_grid()],
        run: run_fuji,
    },
    SuiteDef {
        name: "remark310",
        about: "the K^2 constant fails at K=1.2, c=5, t=0.001; the K^{1+c} constant holds",
        params: CKT,
        default_tol: THEOREM_TOL,
        default_samples: 0,
        expectation: Expectation::Exactly(1),
        defaults: grids![],
        run: run_remark310,
    },
    SuiteDef {
        name: "lemma-a",
        about: "2c < (K^{1+c})^{K/(K-1)}",
        params: &["c", "K"],
        default_tol: THEOREM_TOL,
        default_samples: 0,
        expectation: Expectation::NoViolations,
        defaults: grids![
            "c" => c_grid(),
            "K" => Grid::list(&[1.0, 1.0001, 1.001, 1.01, 1.2, 1.5, 2.0, 4.0, 8.0]),
        ],
        run: run_lemma_a,
    },
    SuiteDef {
        name: "lemma-b1",
        about: "t^{1/K} ln t >= -K/e on (0, 1)",
        params: &["K", "t"],
        default_tol: THEOREM_TOL,
        default_samples: 0,
        expectation: Expectation::NoViolations,
        defaults: grids!["K" => k_grid(), "t" => Grid::log(1e-8, 0.999, 121)],
        run: run_lemma_b1,
    },
    SuiteDef {
        name: "lemma-b2",
        about: "log(1+2ct^{1/K}) <= K^{1+c} log(1+2ct) on (e-1)/(2c) <= t < 1",
        params: CKT,
        default_tol: THEOREM_TOL,
        default_samples: 0,
        expectation: Expectation::NoViolations,
        defaults: grids!["c" => c_grid(), "K" => k_grid(), "t" => Grid::lin(0.0, 0.995, 200)],
        run: run_lemma_b2,
    },
    SuiteDef {
        name: "lemma-c",
        about: "(1+2ct)^K - (1+2ct^K) is increasing in K for t >= 1",
        params: &["c", "t", "K1", "K2"],
        default_tol: THEOREM_TOL,
        default_samples: 0,
        expectation: Expectation::NoViolations,
        defaults: grids!["c" => c_grid(), "t" => Grid::log(1.0, 1e6, 25), "K" => k_grid()],
        run: run_lemma_c,
    },
    SuiteDef {
        name: "lemma-c-log",
        about: "log(1+2ct^K) <= K log(1+2ct) for t >= 1",
        params: CKT,
        default_tol: THEOREM_TOL,
        default_samples: 0,
        expectation: Expectation::NoViolations,
        defaults: grids!["c" => c_grid(), "K" => k_grid(), "t" => Grid::log(1.0, 1e6, 61)],
        run: run_lemma_c_log,
    },
    SuiteDef {
        name: "schwarz-chain",
        about: "each link of the quasiconformal distortion chain",
        params: &["c", "K", "rho"],
        default_tol: THEOREM_TOL,
        default_samples: 0,
        expectation: Expectation::NoViolations,
        defaults: grids!["c" => c_grid(), "K" => k_grid(), "rho" => Grid::log(1e-4, 30.0, 41)],
        run: run_schwarz_chain,
    },
    SuiteDef {
        name: "distortion-stretch",
        about: "radial stretch maps obey the distortion bound",
        params: &["c", "K", "x_re", "x_im", "y_re", "y_im"],
        default_tol: THEOREM_TOL,
        default_samples: 10_000,
        expectation: Expectation::NoViolations,
        defaults: grids!["c" => Grid::list(&[1.0, 2.0, 5.0]), "K" => Grid::list(&[1.25, 2.0, 4.0])],
        run: run_distortion_stretch,
    },
    SuiteDef {
        name: "distortion-mobius",
        about: "Moebius maps preserve h exactly",
        params: &[
            "c", "m_a", "m_b", "m_c", "m_d", "x_re", "x_im", "y_re", "y_im",
        ],
        default_tol: INVARIANCE_TOL,
        default_samples: 10_000,
        expectation: Expectation::NoViolations,
        defaults: grids!["c" => Grid::list(&[1.0, 2.0, 5.0])],
        run: run_distortion_mobius,
    },
    SuiteDef {
        name: "lambda-bound",
        about: "1 <= lambda(K) <= e^{pi(K-1/K)}",
        params: &["K"],
        default_tol: THEOREM_TOL,
        default_samples: 0,
        expectation: Expectation::NoViolations,
        defaults: grids!["K" => Grid::list(&LAMBDA_K)],
        run: run_lambda_bound,
    },
    SuiteDef {
        name: "eta-bound",
        about: "eta_K(t) <= lambda(K) max{t^{1/K}, t^K}",
        params: &["K", "t"],
        default_tol: THEOREM_TOL,
        default_samples: 0,
        expectation: Expectation::NoViolations,
        defaults: grids!["K" => k_grid(), "t" => Grid::log(1e-4, 1e4, 81)],
        run: run_eta_bound,
    },
    SuiteDef {
        name: "mu-roundtrip",
        about: "mu_inv(mu(r)) = r",
        params: &["r"],
        default_tol: INVARIANCE_TOL,
        default_samples: 0,
        expectation: Expectation::NoViolations,
        defaults: grids!["r" => r_grid()],
        run: run_mu_roundtrip,
    },
    SuiteDef {
        name: "mu-reflection",
        about: "mu(r) mu(r') = pi^2/4",
        params: &["r"],
        default_tol: THEOREM_TOL,
        default_samples: 0,
        expectation: Expectation::NoViolations,
        defaults: grids!["r" => r_grid()],
        run: run_mu_reflection,
    },
    SuiteDef {
        name: "phi-identity",
        about: "phi_1(r) = r and phi_K(r)^2 + phi_{1/K}(r')^2 = 1 at K = 1",
        params: &["r"],
        default_tol: INVARIANCE_TOL,
        default_samples: 0,
        expectation: Expectation::NoViolations,
        defaults: grids!["r" => r_grid()],
        run: run_phi_identity,
    },
    SuiteDef {
        name: "phi-inverse",
        about: "phi_{1/K}(phi_K(r)) = r",
        params: &["K", "r"],
        default_tol: 1e-8,
        default_samples: 0,
        expectation: Expectation::NoViolations,
        defaults: grids!["K" => Grid::lin(1.0, 8.0, 15), "r" => r_grid()],
        run: run_phi_inverse,
    },
];

/// Targets for counterexample search. Only violating rows are reported.
pub static SEARCH_TARGETS: &[SuiteDef] = &[
    SuiteDef {
        name: "disk-triangle",
        about: "triangle violations of h on the disk",
        params: TRIPLE_COLS,
        default_tol: METRIC_TOL,
        default_samples: 2_000,
        expectation: Expectation::Any,
        defaults: grids!["c" => Grid::list(&[1.0])],
        run: run_disk_triangle,
    },
    SuiteDef {
        name: "k2-exponent",
        about: "points where the K^2 exponent variant of the composite bound fails",
        params: CKT,
        default_tol: THEOREM_TOL,
        default_samples: 0,
        expectation: Expectation::Any,
        defaults: grids![
            "c" => Grid::list(&[1.0, 2.0, 5.0, 10.0]),
            "K" => Grid::list(&[1.01, 1.1, 1.2, 1.5, 2.0]),
            "t" => Grid::log(1e-6, 1.0, 61),
        ],
        run: run_k2_exponent,
    },
];

pub fn find_suite(name: &str) -> Option<&'static SuiteDef> {
    SUITES.iter().find(|s| s.name == name)
}

pub fn find_search_target(name: &str) -> Option<&'static SuiteDef> {
    SEARCH_TARGETS.iter().find(|s| s.name == name)
}

fn resolve(def: &SuiteDef, spec: &ScanSpec) -> Result<(SuiteInput, String)> {
    let mut grids = def.default_grids();
    for (name, g) in &spec.grids {
        match grids.iter_mut().find(|(n, _)| n == name) {
            Some(slot) => slot.1 = g.clone(),
            None => {
                return Err(Error::Config(format!(
                    "suite {} has no grid parameter {name:?} (known: {})",
                    def.name,
                    def.grid_params().join(", ")
                )))
            }
        }
    }
    let tol = spec.tol.unwrap_or(def.default_tol);
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::Config(format!(
            "tolerance {tol} must be finite and > 0"
        )));
    }
    let samples = spec.samples.unwrap_or(def.default_samples);
    let mut desc: Vec<String> = grids.iter().map(|(n, g)| format!("{n}={g}")).collect();
    if def.default_samples > 0 {
        desc.push(format!("samples={samples}"));
    }
    let input = SuiteInput {
        grids: grids.iter().map(|(n, g)| (*n, g.values())).collect(),
        samples,
        seed: spec.seed,
        tol,
        cfg: SpecFunConfig::DEFAULT,
    };
    Ok((input, desc.join(" ")))
}

fn execute(def: &SuiteDef, spec: &ScanSpec) -> Result<Report> {
    let (input, grid) = resolve(def, spec)?;
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = spec.jobs {
        pool = pool.num_threads(j);
    }
    let pool = pool
        .build()
        .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
    let rows = pool.install(|| (def.run)(&input))?;
    Ok(Report {
        suite: def.name.to_string(),
        seed: spec.seed,
        tol: input.tol,
        grid,
        params: def.params.to_vec(),
        expectation: def.expectation,
        rows,
    })
}

/// Runs a verification suite. The output is independent of `jobs`.
pub fn run_scan(spec: &ScanSpec) -> Result<Report> {
    let def = find_suite(&spec.suite)
        .ok_or_else(|| Error::Config(format!("unknown suite {:?}", spec.suite)))?;
    execute(def, spec)
}

/// Runs a search target and keeps only violating rows.
pub fn run_search(spec: &ScanSpec) -> Result<Report> {
    let def = find_search_target(&spec.suite)
        .ok_or_else(|| Error::Config(format!("unknown search target {:?}", spec.suite)))?;
    let mut report = execute(def, spec)?;
    report.rows.retain(|r| !r.pass);
    Ok(report)
}
