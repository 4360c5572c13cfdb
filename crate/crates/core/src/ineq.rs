//! Inequalities of the distortion theory as evaluable cases.
//!
//! Every check produces an [`IneqCase`]: the two sides, a signed margin
//! (non-negative when the inequality holds) and a pass flag. A case passes
//! when `margin ≥ −tol·scale`; `scale` is 1 for O(1) quantities and grows
//! with the magnitude of the sides so large values are compared relatively.

use std::f64::consts::E;

use crate::error::{domain, Error, Result};
use crate::metrics::{self, HalfPlanePoint, MobiusH};
use crate::specfun::{SpecFunConfig, UnitPair};

/// Default one-sided tolerance of the theorem suites.
pub const THEOREM_TOL: f64 = 1e-9;
/// Tolerance of the metric-axiom suites.
pub const METRIC_TOL: f64 = 1e-12;
/// Tolerance of Möbius invariance.
pub const INVARIANCE_TOL: f64 = 1e-10;

/// One evaluated instance of an inequality.
#[derive(Debug, Clone, PartialEq)]
pub struct IneqCase {
    pub name: &'static str,
    pub params: Vec<(&'static str, f64)>,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub scale: f64,
    pub tol: f64,
    pub pass: bool,
}

impl IneqCase {
    /// Case for `lhs ≤ rhs`, margin `rhs − lhs`, scale `max(1, |lhs|, |rhs|)`.
    pub fn le(
        name: &'static str,
        params: Vec<(&'static str, f64)>,
        lhs: f64,
        rhs: f64,
        tol: f64,
    ) -> Self {
        let scale = 1f64.max(lhs.abs()).max(rhs.abs());
        Self::with_margin(name, params, lhs, rhs, rhs - lhs, scale, tol)
    }

    /// Case for the identity `lhs = rhs`, margin `−|lhs − rhs|`.
    pub fn eq(
        name: &'static str,
        params: Vec<(&'static str, f64)>,
        lhs: f64,
        rhs: f64,
        tol: f64,
    ) -> Self {
        Self::with_margin(name, params, lhs, rhs, -(lhs - rhs).abs(), 1.0, tol)
    }

    pub fn with_margin(
        name: &'static str,
        params: Vec<(&'static str, f64)>,
        lhs: f64,
        rhs: f64,
        margin: f64,
        scale: f64,
        tol: f64,
    ) -> Self {
        let mut case = Self {
            name,
            params,
            lhs,
            rhs,
            margin,
            scale,
            tol,
            pass: false,
        };
        case.set_tol(tol);
        case
    }

    pub fn set_tol(&mut self, tol: f64) {
        self.tol = tol;
        let finite = self.lhs.is_finite() && self.rhs.is_finite() && self.margin.is_finite();
        self.pass = finite && self.margin >= -tol * self.scale;
    }

    pub fn param(&self, name: &str) -> Option<f64> {
        self.params
            .iter()
            .find(|(n, _)| *n == name)
            .map(|&(_, v)| v)
    }
}

fn need(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Param(what.to_string()))
    }
}

fn finite_all(vals: &[f64]) -> Result<()> {
    need(
        vals.iter().all(|v| v.is_finite()),
        "parameters must be finite",
    )
}

/// `max{t^K, t^{1/K}}`, branch chosen by `t ≷ 1`.
pub fn power_max(t: f64, k: f64) -> f64 {
    if t > 1.0 {
        t.powf(k)
    } else {
        t.powf(1.0 / k)
    }
}

/// `max{L, L^{1/K}}` for `L ≥ 0`, branch chosen by `L ≷ 1`.
pub fn log_max(l: f64, k: f64) -> f64 {
    if l > 1.0 {
        l
    } else {
        l.powf(1.0 / k)
    }
}

/// The value of `t` where `log(1+2ct) = 1`.
pub fn log_branch_boundary(c: f64) -> f64 {
    (E - 1.0) / (2.0 * c)
}

/// `log(1+c₁t) ≤ (c₁/c₂)·log(1+c₂t)` for `c₁ ≥ c₂ ≥ 1`, `t > 0`.
pub fn bernoulli_pair(c1: f64, c2: f64, t: f64, tol: f64) -> Result<IneqCase> {
    finite_all(&[c1, c2, t])?;
    need(c1 >= c2 && c2 >= 1.0, "need c1 >= c2 >= 1")?;
    need(t > 0.0, "need t > 0")?;
    let lhs = (c1 * t).ln_1p();
    let rhs = c1 / c2 * (c2 * t).ln_1p();
    Ok(IneqCase::le(
        "bernoulli",
        vec![("c1", c1), ("c2", c2), ("t", t)],
        lhs,
        rhs,
        tol,
    ))
}

/// `x ≤ c(x − 1/x) + 1` for `c ≥ 1`, `x ≥ 1`.
pub fn prop21_case(c: f64, x: f64, tol: f64) -> Result<IneqCase> {
    finite_all(&[c, x])?;
    need(c >= 1.0 && x >= 1.0, "need c >= 1 and x >= 1")?;
    let rhs = c * (x - 1.0 / x) + 1.0;
    Ok(IneqCase::le(
        "prop21",
        vec![("c", c), ("x", x)],
        x,
        rhs,
        tol,
    ))
}

/// `f(x) = log(1 + c(x − 1/x)) / log x`, decreasing on `x > 1`.
pub fn lemma22_f(c: f64, x: f64) -> Result<f64> {
    finite_all(&[c, x])?;
    need(c >= 1.0, "need c >= 1")?;
    if x < 1.0 + 1e-9 {
        return Err(domain("x", x, "x >= 1 + 1e-9"));
    }
    Ok((c * (x - 1.0 / x)).ln_1p() / x.ln())
}

/// Monotonicity of [`lemma22_f`] on `x1 < x2`: `f(x2) ≤ f(x1)`.
pub fn lemma22_pair(c: f64, x1: f64, x2: f64, tol: f64) -> Result<IneqCase> {
    need(x1 < x2, "need x1 < x2")?;
    let (f1, f2) = (lemma22_f(c, x1)?, lemma22_f(c, x2)?);
    Ok(IneqCase::le(
        "lemma22",
        vec![("c", c), ("x1", x1), ("x2", x2)],
        f2,
        f1,
        tol,
    ))
}

/// `F(t) = log(1 + c√(2(ch t − 1)))`, evaluated as `log(1 + 2c·sh(t/2))`.
pub fn f_mfprop(c: f64, t: f64) -> Result<f64> {
    finite_all(&[c, t])?;
    need(c >= 1.0, "need c >= 1")?;
    if t < 0.0 {
        return Err(domain("t", t, "t >= 0"));
    }
    Ok((2.0 * c * (t / 2.0).sinh()).ln_1p())
}

/// `F(t1) ≤ F(t2)` for `t1 < t2`.
pub fn mfprop_increasing_pair(c: f64, t1: f64, t2: f64, tol: f64) -> Result<IneqCase> {
    need(t1 < t2, "need t1 < t2")?;
    let (f1, f2) = (f_mfprop(c, t1)?, f_mfprop(c, t2)?);
    Ok(IneqCase::le(
        "mfprop-increasing",
        vec![("c", c), ("t1", t1), ("t2", t2)],
        f1,
        f2,
        tol,
    ))
}

/// `F(t2)/t2 ≤ F(t1)/t1` for `0 < t1 < t2`.
pub fn mfprop_ratio_pair(c: f64, t1: f64, t2: f64, tol: f64) -> Result<IneqCase> {
    need(0.0 < t1 && t1 < t2, "need 0 < t1 < t2")?;
    let g1 = f_mfprop(c, t1)? / t1;
    let g2 = f_mfprop(c, t2)? / t2;
    Ok(IneqCase::le(
        "mfprop-ratio",
        vec![("c", c), ("t1", t1), ("t2", t2)],
        g2,
        g1,
        tol,
    ))
}

/// `F(s+t) ≤ F(s) + F(t)`.
pub fn subadditivity_case(c: f64, s: f64, t: f64, tol: f64) -> Result<IneqCase> {
    let lhs = f_mfprop(c, s + t)?;
    let rhs = f_mfprop(c, s)? + f_mfprop(c, t)?;
    Ok(IneqCase::le(
        "subadditivity",
        vec![("c", c), ("s", s), ("t", t)],
        lhs,
        rhs,
        tol,
    ))
}

/// `h/c ≤ ρ ≤ 2h` on the half plane. `lhs = ρ`, `rhs = 2h`; the margin is the
/// smaller of `ρ − h/c` and `2h − ρ`.
pub fn comp_rho_case(c: f64, x: HalfPlanePoint, y: HalfPlanePoint, tol: f64) -> Result<IneqCase> {
    finite_all(&[c])?;
    need(c >= 1.0, "need c >= 1")?;
    let rho = metrics::rho_half_plane(x, y);
    let h = metrics::h_half_plane(c, x, y);
    let margin = (rho - h / c).min(2.0 * h - rho);
    let scale = 1f64.max(2.0 * h);
    Ok(IneqCase::with_margin(
        "comp-rho",
        vec![
            ("c", c),
            ("x_re", x.re()),
            ("x_im", x.im()),
            ("y_re", y.re()),
            ("y_im", y.im()),
        ],
        rho,
        2.0 * h,
        margin,
        scale,
        tol,
    ))
}

/// `arch x` with `x − 1` kept exact near 1.
pub fn arch(x: f64) -> f64 {
    let d = x - 1.0;
    (d + (d * (2.0 + d)).sqrt()).ln_1p()
}

/// `2log(1+√((x−1)/2)) ≤ arch x ≤ 2log(1+√(2(x−1)))`; `lhs`/`rhs` are the two
/// bounds, margin the smaller of the two gaps.
pub fn arch_bounds_case(x: f64, tol: f64) -> Result<IneqCase> {
    finite_all(&[x])?;
    if x < 1.0 {
        return Err(domain("x", x, "x >= 1"));
    }
    let d = x - 1.0;
    let lower = 2.0 * (d / 2.0).sqrt().ln_1p();
    let upper = 2.0 * (2.0 * d).sqrt().ln_1p();
    let a = arch(x);
    let scale = 1f64.max(upper);
    Ok(IneqCase::with_margin(
        "arch-bounds",
        vec![("x", x)],
        lower,
        upper,
        (a - lower).min(upper - a),
        scale,
        tol,
    ))
}

/// Both sides of `log(1+2c·max{t^K,t^{1/K}}) ≤ factor·max{L, L^{1/K}}`, `L = log(1+2ct)`.
pub fn fuji_sides(c: f64, k: f64, t: f64, factor: f64) -> (f64, f64) {
    let lhs = (2.0 * c * power_max(t, k)).ln_1p();
    let rhs = factor * log_max((2.0 * c * t).ln_1p(), k);
    (lhs, rhs)
}

fn check_ckt(c: f64, k: f64, t: f64) -> Result<()> {
    finite_all(&[c, k, t])?;
    need(c >= 1.0, "need c >= 1")?;
    need(k >= 1.0, "need K >= 1")?;
    need(t > 0.0, "need t > 0")
}

/// The Bernoulli-type inequality with constant `K^{1+c}`.
pub fn fuji_case(c: f64, k: f64, t: f64, tol: f64) -> Result<IneqCase> {
    check_ckt(c, k, t)?;
    let (lhs, rhs) = fuji_sides(c, k, t, k.powf(1.0 + c));
    Ok(IneqCase::le(
        "fuji",
        vec![("c", c), ("K", k), ("t", t)],
        lhs,
        rhs,
        tol,
    ))
}

/// The same inequality with the weaker constant `K²`; fails for some parameters.
pub fn k2_variant_case(c: f64, k: f64, t: f64, tol: f64) -> Result<IneqCase> {
    check_ckt(c, k, t)?;
    let (lhs, rhs) = fuji_sides(c, k, t, k * k);
    Ok(IneqCase::le(
        "k2-exponent",
        vec![("c", c), ("K", k), ("t", t)],
        lhs,
        rhs,
        tol,
    ))
}

pub const REMARK310_K: f64 = 1.2;
pub const REMARK310_C: f64 = 5.0;
pub const REMARK310_T: f64 = 0.001;

/// The `K²` variant at `(K, c, t) = (1.2, 5, 0.001)`, where it fails.
pub fn remark310_case(tol: f64) -> IneqCase {
    let (lhs, rhs) = fuji_sides(
        REMARK310_C,
        REMARK310_K,
        REMARK310_T,
        REMARK310_K * REMARK310_K,
    );
    IneqCase::le(
        "remark310",
        vec![("c", REMARK310_C), ("K", REMARK310_K), ("t", REMARK310_T)],
        lhs,
        rhs,
        tol,
    )
}

/// `(K^{1+c})^{K/(K−1)}`, with the limit `e^{1+c}` at `K = 1`.
pub fn lemma_a_power(c: f64, k: f64) -> f64 {
    if k == 1.0 {
        (1.0 + c).exp()
    } else {
        ((1.0 + c) * k * k.ln() / (k - 1.0)).exp()
    }
}

/// `(K^{1+c})^{K/(K−1)} − 2c > 0`. `lhs = 2c`, `rhs` the power.
pub fn lemma_a_case(c: f64, k: f64, tol: f64) -> Result<IneqCase> {
    finite_all(&[c, k])?;
    need(c >= 1.0 && k >= 1.0, "need c >= 1 and K >= 1")?;
    Ok(IneqCase::le(
        "lemma-a",
        vec![("c", c), ("K", k)],
        2.0 * c,
        lemma_a_power(c, k),
        tol,
    ))
}

/// `t^{1/K}·log t`.
pub fn lemma_b1_value(k: f64, t: f64) -> f64 {
    t.powf(1.0 / k) * t.ln()
}

/// `t^{1/K}·log t ≥ −K/e`.
pub fn lemma_b1_case(k: f64, t: f64, tol: f64) -> Result<IneqCase> {
    finite_all(&[k, t])?;
    need(k >= 1.0 && t > 0.0, "need K >= 1 and t > 0")?;
    Ok(IneqCase::le(
        "lemma-b1",
        vec![("K", k), ("t", t)],
        -k / E,
        lemma_b1_value(k, t),
        tol,
    ))
}

/// Grid minimiser of `t^{1/K} log t`: `(argmin, min)`.
pub fn lemma_b1_grid_min(k: f64, grid: &[f64]) -> Option<(f64, f64)> {
    grid.iter()
        .map(|&t| (t, lemma_b1_value(k, t)))
        .min_by(|a, b| a.1.total_cmp(&b.1))
}

/// `K^{1+c}·log(1+2ct) − log(1+2ct^{1/K}) > 0` on `(e−1)/(2c) ≤ t < 1`.
pub fn lemma_b2_case(c: f64, k: f64, t: f64, tol: f64) -> Result<IneqCase> {
    check_ckt(c, k, t)?;
    need(
        t >= log_branch_boundary(c) && t < 1.0,
        "need (e-1)/(2c) <= t < 1",
    )?;
    let lhs = (2.0 * c * t.powf(1.0 / k)).ln_1p();
    let rhs = k.powf(1.0 + c) * (2.0 * c * t).ln_1p();
    Ok(IneqCase::le(
        "lemma-b2",
        vec![("c", c), ("K", k), ("t", t)],
        lhs,
        rhs,
        tol,
    ))
}

/// `C(K) = (1+2ct)^K − (1+2ct^K)`.
pub fn lemma_c_value(c: f64, k: f64, t: f64) -> f64 {
    (1.0 + 2.0 * c * t).powf(k) - (1.0 + 2.0 * c * t.powf(k))
}

/// `C(K1) ≤ C(K2)` for `1 ≤ K1 < K2`, `c ≥ 1`, `t ≥ 1`.
pub fn lemma_c_pair(c: f64, t: f64, k1: f64, k2: f64, tol: f64) -> Result<IneqCase> {
    finite_all(&[c, t, k1, k2])?;
    need(c >= 1.0 && t >= 1.0, "need c >= 1 and t >= 1")?;
    need(1.0 <= k1 && k1 < k2, "need 1 <= K1 < K2")?;
    let (a, b) = (lemma_c_value(c, k1, t), lemma_c_value(c, k2, t));
    Ok(IneqCase::le(
        "lemma-c",
        vec![("c", c), ("t", t), ("K1", k1), ("K2", k2)],
        a,
        b,
        tol,
    ))
}

/// `log(1+2ct^K) ≤ K·log(1+2ct)` for `t ≥ 1`.
pub fn lemma_c_log_case(c: f64, k: f64, t: f64, tol: f64) -> Result<IneqCase> {
    check_ckt(c, k, t)?;
    need(t >= 1.0, "need t >= 1")?;
    let lhs = (2.0 * c * t.powf(k)).ln_1p();
    let rhs = k * (2.0 * c * t).ln_1p();
    Ok(IneqCase::le(
        "lemma-c-log",
        vec![("c", c), ("K", k), ("t", t)],
        lhs,
        rhs,
        tol,
    ))
}

/// The distortion constant for a fixed `K`, with `λ(K)` evaluated once.
#[derive(Debug, Clone, Copy)]
pub struct DistortionBound {
    pub k: f64,
    pub lambda: f64,
    cfg: SpecFunConfig,
}

/// The four quantities of the Schwarz-lemma chain, each bounded by the next.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchwarzChain {
    pub schwarz: f64,
    pub eta_bound: f64,
    pub bernoulli: f64,
    pub fuji: f64,
}

impl SchwarzChain {
    pub fn link_margins(&self) -> [f64; 3] {
        [
            self.eta_bound - self.schwarz,
            self.bernoulli - self.eta_bound,
            self.fuji - self.bernoulli,
        ]
    }
}

impl DistortionBound {
    pub fn new(k: f64) -> Result<Self> {
        Self::with_config(SpecFunConfig::DEFAULT, k)
    }

    pub fn with_config(cfg: SpecFunConfig, k: f64) -> Result<Self> {
        let lambda = cfg.lambda_k(k)?;
        Ok(Self { k, lambda, cfg })
    }

    /// `λ(K)^{1/2}·K^{1+c}·max{h^{1/K}, h}`.
    pub fn rhs(&self, c: f64, h: f64) -> f64 {
        let k = self.k;
        self.lambda.sqrt() * k.powf(1.0 + c) * log_max(h, k)
    }

    pub fn schwarz_chain(&self, c: f64, rho: f64) -> Result<SchwarzChain> {
        let k = self.k;
        let half = rho / 2.0;
        let phi = self.cfg.phi_k_pair(k, UnitPair::from_tanh(half))?;
        let q = phi.ratio();
        if !q.is_finite() {
            return Err(Error::Overflow("phi / sqrt(1 - phi^2)"));
        }
        let s = half.sinh();
        let m = power_max(s, k);
        let sl = self.lambda.sqrt();
        let h = (2.0 * c * s).ln_1p();
        let chain = SchwarzChain {
            schwarz: (2.0 * c * q).ln_1p(),
            eta_bound: (2.0 * c * sl * m).ln_1p(),
            bernoulli: sl * (2.0 * c * m).ln_1p(),
            fuji: k.powf(1.0 + c) * sl * log_max(h, k),
        };
        if !chain.fuji.is_finite() || !chain.eta_bound.is_finite() {
            return Err(Error::Overflow("schwarz chain"));
        }
        Ok(chain)
    }
}

/// `λ(K)^{1/2}·K^{1+c}·max{h^{1/K}, h}`.
pub fn distortion_rhs(c: f64, k: f64, h: f64) -> Result<f64> {
    finite_all(&[c, k, h])?;
    need(c >= 1.0 && k >= 1.0, "need c >= 1 and K >= 1")?;
    if h < 0.0 {
        return Err(domain("h", h, "h >= 0"));
    }
    Ok(DistortionBound::new(k)?.rhs(c, h))
}

fn chain_case(c: f64, k: f64, rho: f64, chain: SchwarzChain, tol: f64) -> IneqCase {
    let margin = chain
        .link_margins()
        .into_iter()
        .fold(f64::INFINITY, f64::min);
    let scale = 1f64.max(chain.fuji.abs());
    IneqCase::with_margin(
        "schwarz-chain",
        vec![("c", c), ("K", k), ("rho", rho)],
        chain.schwarz,
        chain.fuji,
        margin,
        scale,
        tol,
    )
}

/// Each link of the Schwarz-lemma chain; margin is the smallest link margin.
pub fn schwarz_chain_case(c: f64, k: f64, rho: f64, tol: f64) -> Result<IneqCase> {
    schwarz_chain_case_with(&DistortionBound::new(k)?, c, rho, tol)
}

pub fn schwarz_chain_case_with(
    bound: &DistortionBound,
    c: f64,
    rho: f64,
    tol: f64,
) -> Result<IneqCase> {
    finite_all(&[c, rho])?;
    need(c >= 1.0, "need c >= 1")?;
    need(rho > 0.0, "need rho > 0")?;
    Ok(chain_case(
        c,
        bound.k,
        rho,
        bound.schwarz_chain(c, rho)?,
        tol,
    ))
}

/// Model maps with known dilatation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ModelMap {
    /// `z ↦ z|z|^{K−1}`
    Stretch(f64),
    /// 1-quasiconformal.
    Mobius(MobiusH),
}

impl ModelMap {
    pub fn dilatation(&self) -> f64 {
        match self {
            ModelMap::Stretch(k) => *k,
            ModelMap::Mobius(_) => 1.0,
        }
    }

    pub fn apply(&self, p: HalfPlanePoint) -> Result<HalfPlanePoint> {
        match self {
            ModelMap::Stretch(k) => metrics::stretch_map(*k, p),
            ModelMap::Mobius(m) => m.apply(p),
        }
    }
}

/// `h(f x, f y) ≤ λ(K)^{1/2}·K^{1+c}·max{h(x,y)^{1/K}, h(x,y)}` for a model map.
pub fn empirical_distortion_case(
    bound: &DistortionBound,
    c: f64,
    map: &ModelMap,
    x: HalfPlanePoint,
    y: HalfPlanePoint,
    tol: f64,
) -> Result<IneqCase> {
    finite_all(&[c])?;
    need(c >= 1.0, "need c >= 1")?;
    need(
        (bound.k - map.dilatation()).abs() == 0.0,
        "bound and map dilatation differ",
    )?;
    let (fx, fy) = (map.apply(x)?, map.apply(y)?);
    let lhs = metrics::h_half_plane(c, fx, fy);
    let rhs = bound.rhs(c, metrics::h_half_plane(c, x, y));
    let name = match map {
        ModelMap::Stretch(_) => "distortion-stretch",
        ModelMap::Mobius(_) => "distortion-mobius",
    };
    Ok(IneqCase::le(
        name,
        vec![
            ("c", c),
            ("K", bound.k),
            ("x_re", x.re()),
            ("x_im", x.im()),
            ("y_re", y.re()),
            ("y_im", y.im()),
        ],
        lhs,
        rhs,
        tol,
    ))
}

/// `1 ≤ λ(K) ≤ e^{π(K−1/K)}`; `lhs = λ`, `rhs` the upper bound.
pub fn lambda_bound_case(cfg: &SpecFunConfig, k: f64, tol: f64) -> Result<IneqCase> {
    let l = cfg.lambda_k(k)?;
    let upper = (std::f64::consts::PI * (k - 1.0 / k)).exp();
    Ok(IneqCase::with_margin(
        "lambda-bound",
        vec![("K", k)],
        l,
        upper,
        (l - 1.0).min(upper - l),
        upper,
        tol,
    ))
}

/// `η_K(t) ≤ λ(K)·max{t^{1/K}, t^K}`, compared relatively to the bound.
pub fn eta_bound_case(
    cfg: &SpecFunConfig,
    lambda: f64,
    k: f64,
    t: f64,
    tol: f64,
) -> Result<IneqCase> {
    let eta = cfg.eta_k(k, t)?;
    let bound = lambda * power_max(t, k);
    Ok(IneqCase::with_margin(
        "eta-bound",
        vec![("K", k), ("t", t)],
        eta,
        bound,
        bound - eta,
        bound,
        tol,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hp(re: f64, im: f64) -> HalfPlanePoint {
        HalfPlanePoint::new(re, im).unwrap()
    }

    #[test]
    fn bernoulli_examples() {
        let eq = bernoulli_pair(3.0, 3.0, 0.7, THEOREM_TOL).unwrap();
        assert!(eq.pass && eq.margin.abs() < 1e-15);
        let c = bernoulli_pair(2.0, 1.0, 1.0, THEOREM_TOL).unwrap();
        assert!((c.lhs - 3f64.ln()).abs() < 1e-15 && (c.rhs - 2.0 * 2f64.ln()).abs() < 1e-15);
        // mpmath: 0.91629073187415506..., 1.17500907311433888...
        let c = bernoulli_pair(5.0, 2.0, 0.3, THEOREM_TOL).unwrap();
        assert!((c.lhs - 0.916_290_731_874_155).abs() < 1e-15);
        assert!((c.rhs - 1.175_009_073_114_339).abs() < 1e-15);
        assert!(c.pass && c.margin > 0.0);
        assert!(bernoulli_pair(1.0, 2.0, 1.0, THEOREM_TOL).is_err());
        assert!(bernoulli_pair(2.0, 1.0, 0.0, THEOREM_TOL).is_err());
    }

    #[test]
    fn prop21_examples() {
        let c = prop21_case(4.0, 1.0, THEOREM_TOL).unwrap();
        assert_eq!(c.margin, 0.0);
        let c = prop21_case(1.0, 2.0, THEOREM_TOL).unwrap();
        assert_eq!((c.lhs, c.rhs), (2.0, 2.5));
        let c = prop21_case(3.0, 1.01, THEOREM_TOL).unwrap();
        assert!(c.margin > 0.0 && c.pass);
        assert!(prop21_case(0.5, 2.0, THEOREM_TOL).is_err());
    }

    #[test]
    fn lemma22_examples() {
        // mpmath: f(2) = 1.32192809488736234..., f(3) = 1.18265833864413808...
        assert!((lemma22_f(1.0, 2.0).unwrap() - 1.321_928_094_887_362_3).abs() < 1e-15);
        assert!((lemma22_f(1.0, 3.0).unwrap() - 1.182_658_338_644_138).abs() < 1e-15);
        assert!(lemma22_pair(1.0, 2.0, 3.0, THEOREM_TOL).unwrap().pass);
        let big = lemma22_f(1.0, 1e6).unwrap();
        assert!(big > 1.0 && big < 1.01);
        assert!(lemma22_f(2.0, 3.0).unwrap() > lemma22_f(1.0, 3.0).unwrap());
        assert!(lemma22_f(1.0, 1.0 + 1e-12).is_err());
    }

    #[test]
    fn mfprop_examples() {
        assert_eq!(f_mfprop(2.0, 0.0).unwrap(), 0.0);
        for &t in &[0.1f64, 1.0, 5.0, 20.0] {
            let literal = (1.0 + 2.0 * (2.0 * (t.cosh() - 1.0)).sqrt()).ln();
            let exp_form = (1.0 + 2.0 * ((t / 2.0).exp() - (-t / 2.0).exp())).ln();
            let f = f_mfprop(2.0, t).unwrap();
            assert!((f - literal).abs() < 1e-12 && (f - exp_form).abs() < 1e-13);
        }
        let (x, y) = (hp(-1.0, 0.3), hp(2.0, 4.0));
        let f = f_mfprop(3.0, metrics::rho_half_plane(x, y)).unwrap();
        assert!((f - metrics::h_half_plane(3.0, x, y)).abs() < 1e-13);
        assert!(
            mfprop_increasing_pair(1.0, 1.0, 2.0, THEOREM_TOL)
                .unwrap()
                .pass
        );
        assert!(mfprop_ratio_pair(1.0, 1.0, 2.0, THEOREM_TOL).unwrap().pass);
        assert!(subadditivity_case(1.0, 3.0, 4.0, METRIC_TOL).unwrap().pass);
    }

    #[test]
    fn comp_rho_examples() {
        let c = comp_rho_case(1.0, hp(0.0, 1.0), hp(0.0, 1.0), METRIC_TOL).unwrap();
        assert!(c.pass && c.margin == 0.0);
        let c = comp_rho_case(1.0, hp(0.0, 1.0), hp(0.0, 2.0), METRIC_TOL).unwrap();
        assert!((c.lhs - 2f64.ln()).abs() < 1e-15);
        // mpmath: 2h = 1.06959999347914074...
        assert!((c.rhs - 1.069_599_993_479_140_7).abs() < 1e-15);
        assert!(c.pass);
        let far = comp_rho_case(10.0, hp(-9.0, 1e-3), hp(9.0, 8.0), METRIC_TOL).unwrap();
        assert!(far.pass);
    }

    #[test]
    fn arch_bounds_examples() {
        let c = arch_bounds_case(1.0, THEOREM_TOL).unwrap();
        assert_eq!((c.lhs, c.rhs, c.margin), (0.0, 0.0, 0.0));
        let c = arch_bounds_case(1.25, THEOREM_TOL).unwrap();
        assert!(c.lhs < 2f64.ln() && 2f64.ln() < c.rhs && c.pass);
        assert!((arch(1.25) - 2f64.ln()).abs() < 1e-15);
        assert!(arch_bounds_case(1e6, THEOREM_TOL).unwrap().pass);
        assert!(arch_bounds_case(0.5, THEOREM_TOL).is_err());
    }

    #[test]
    fn fuji_examples() {
        for &(c, t) in &[(1.0, 1e-3), (5.0, 0.5), (2.0, 30.0)] {
            let case = fuji_case(c, 1.0, t, THEOREM_TOL).unwrap();
            assert!((case.lhs - case.rhs).abs() < 1e-15);
        }
        let tiny = fuji_case(3.0, 2.0, 1e-300, THEOREM_TOL).unwrap();
        assert!(tiny.pass && tiny.lhs < 1e-140);
        let case = fuji_case(5.0, 1.2, 0.001, THEOREM_TOL).unwrap();
        // mpmath: lhs 0.0311330736895022975..., rhs 0.0640646922405628901...
        assert!((case.lhs - 0.031_133_073_689_502_3).abs() < 1e-15);
        assert!((case.rhs - 0.064_064_692_240_562_9).abs() < 1e-15);
        assert!(case.pass);
    }

    #[test]
    fn case_split_agrees_with_closed_form_boundary() {
        for &c in &[1.0, 1.5, 2.0, 5.0, 10.0] {
            let b = log_branch_boundary(c);
            assert!(b > 0.0 && b < 1.0);
            for &t in &[b * 0.999, b * 1.001, b * 0.5, b * 2.0] {
                let by_value = (2.0 * c * t).ln_1p() > 1.0;
                assert_eq!(by_value, t > b, "c={c} t={t}");
            }
        }
    }

    #[test]
    fn remark310_fails_with_k_squared() {
        let case = remark310_case(THEOREM_TOL);
        assert!(!case.pass);
        // mpmath: 0.0311330736895022975..., 0.0308953955635430604...
        assert!((case.lhs - 0.031_133_073_689_502_3).abs() < 1e-15);
        assert!((case.rhs - 0.030_895_395_563_543_06).abs() < 1e-15);
        assert!(fuji_case(5.0, 1.2, 0.001, THEOREM_TOL).unwrap().pass);
    }

    #[test]
    fn lemma_a_examples() {
        let lim = lemma_a_case(1.0, 1.0, THEOREM_TOL).unwrap();
        assert!((lim.rhs - lim.lhs - (E * E - 2.0)).abs() < 1e-14);
        let c = lemma_a_case(1.0, 2.0, THEOREM_TOL).unwrap();
        assert!((c.rhs - c.lhs - 14.0).abs() < 1e-12);
        // mpmath: 60184.2464341715385...
        let c = lemma_a_case(10.0, 1.001, THEOREM_TOL).unwrap();
        assert!(((c.rhs - c.lhs) / 60_184.246_434_171_54 - 1.0).abs() < 1e-9);
        // continuity at K = 1
        assert!((lemma_a_power(3.0, 1.0 + 1e-9) / lemma_a_power(3.0, 1.0) - 1.0).abs() < 1e-6);
    }

    #[test]
    fn lemma_b_examples() {
        assert!((lemma_b1_value(1.0, 1.0 / E) + 1.0 / E).abs() < 1e-16);
        for &k in &[1.0, 2.0, 8.0] {
            assert!((lemma_b1_value(k, (-k).exp()) + k / E).abs() < 1e-14);
        }
        assert!(lemma_b1_case(2.0, 0.3, METRIC_TOL).unwrap().pass);
        // mpmath: 3.05467541458780489...
        let c = lemma_b2_case(1.0, 2.0, 0.9, THEOREM_TOL).unwrap();
        assert!((c.rhs - c.lhs - 3.054_675_414_587_805).abs() < 1e-14);
        assert!(lemma_b2_case(1.0, 2.0, 0.5, THEOREM_TOL).is_err());
        assert!(lemma_b2_case(1.0, 2.0, 1.0, THEOREM_TOL).is_err());
    }

    #[test]
    fn lemma_c_examples() {
        assert_eq!(lemma_c_value(2.0, 1.0, 3.0), 0.0);
        assert_eq!(lemma_c_value(1.0, 2.0, 1.0), 6.0);
        // mpmath: 104.518655922736988..., 5014.21135605468261...
        let c = lemma_c_pair(3.0, 5.0, 1.5, 2.5, THEOREM_TOL).unwrap();
        assert!((c.lhs - 104.518_655_922_737).abs() < 1e-10);
        assert!((c.rhs - 5_014.211_356_054_683).abs() < 1e-8);
        assert!(c.pass);
        assert!(lemma_c_log_case(3.0, 2.0, 5.0, THEOREM_TOL).unwrap().pass);
        assert!(lemma_c_pair(3.0, 0.5, 1.5, 2.5, THEOREM_TOL).is_err());
    }

    #[test]
    fn distortion_rhs_examples() {
        for &h in &[0.0, 0.3, 2.0] {
            assert_eq!(distortion_rhs(3.0, 1.0, h).unwrap(), h);
        }
        assert_eq!(distortion_rhs(1.0, 2.0, 0.0).unwrap(), 0.0);
        // mpmath: 16.2408282420514854...
        let v = distortion_rhs(1.0, 2.0, 0.5).unwrap();
        assert!((v - 16.240_828_242_051_485).abs() < 1e-12);
        assert!(distortion_rhs(0.5, 2.0, 0.5).is_err());
    }

    #[test]
    fn schwarz_chain_examples() {
        let b1 = DistortionBound::new(1.0).unwrap();
        let chain = b1.schwarz_chain(2.0, 1.3).unwrap();
        for m in chain.link_margins() {
            assert!(m.abs() < 1e-12);
        }
        // mpmath: 1.80093663800497971..., 2.22893285169806771..., 5.13064394124708680..., 19.4079332745561601...
        let b2 = DistortionBound::new(2.0).unwrap();
        let ch = b2.schwarz_chain(1.0, 1.0).unwrap();
        assert!((ch.schwarz - 1.800_936_638_004_979_7).abs() < 1e-12);
        assert!((ch.eta_bound - 2.228_932_851_698_067_7).abs() < 1e-12);
        assert!((ch.bernoulli - 5.130_643_941_247_087).abs() < 1e-12);
        assert!((ch.fuji - 19.407_933_274_556_16).abs() < 1e-11);
        assert!(schwarz_chain_case(1.0, 2.0, 1.0, THEOREM_TOL).unwrap().pass);
        assert!(
            schwarz_chain_case(3.0, 1.5, 10.0, THEOREM_TOL)
                .unwrap()
                .pass
        );
    }

    #[test]
    fn empirical_distortion_examples() {
        let b = DistortionBound::new(2.0).unwrap();
        let case = empirical_distortion_case(
            &b,
            1.0,
            &ModelMap::Stretch(2.0),
            hp(0.0, 1.0),
            hp(0.0, 2.0),
            THEOREM_TOL,
        )
        .unwrap();
        // mpmath: lhs 0.916290731874155065..., rhs 16.7965028981094163...
        assert!((case.lhs - 0.916_290_731_874_155).abs() < 1e-15);
        assert!((case.rhs - 16.796_502_898_109_416).abs() < 1e-12);
        assert!(case.pass);
        let one = DistortionBound::new(1.0).unwrap();
        let m = ModelMap::Mobius(MobiusH::new(2.0, 1.0, 1.0, 1.0).unwrap());
        let case =
            empirical_distortion_case(&one, 1.5, &m, hp(0.5, 0.5), hp(-2.0, 3.0), THEOREM_TOL)
                .unwrap();
        assert!((case.lhs - case.rhs).abs() < 1e-12);
        assert!(empirical_distortion_case(
            &one,
            1.0,
            &ModelMap::Stretch(2.0),
            hp(0.0, 1.0),
            hp(0.0, 2.0),
            THEOREM_TOL
        )
        .is_err());
    }

    #[test]
    fn lambda_and_eta_cases() {
        let cfg = SpecFunConfig::DEFAULT;
        let c = lambda_bound_case(&cfg, 1.0, THEOREM_TOL).unwrap();
        assert!(c.pass && c.lhs == 1.0);
        for &k in &[1.01, 2.0, 5.0] {
            let c = lambda_bound_case(&cfg, k, THEOREM_TOL).unwrap();
            assert!(c.pass && c.lhs < c.rhs && c.lhs > 1.0);
        }
        let l = cfg.lambda_k(2.0).unwrap();
        let c = eta_bound_case(&cfg, l, 2.0, 1.0, THEOREM_TOL).unwrap();
        assert!(c.pass && c.margin.abs() < 1e-9 * c.rhs);
    }

    #[test]
    fn non_finite_sides_fail() {
        let c = IneqCase::le("x", vec![], f64::NAN, 1.0, 1.0);
        assert!(!c.pass);
        let mut c = IneqCase::le("x", vec![], 1.0 + 1e-6, 1.0, 1e-9);
        assert!(!c.pass);
        c.set_tol(1e-3);
        assert!(c.pass);
    }
}
