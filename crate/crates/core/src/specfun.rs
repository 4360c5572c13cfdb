//! Special functions of plane quasiconformal theory.
//!
//! The stack is built bottom-up from the complete elliptic integral of the
//! first kind:
//!
//! ```text
//! 𝒦(r)     = ∫₀¹ dx / √((1−x²)(1−r²x²))          = π / (2·AGM(1, r'))
//! μ(r)     = (π/2) · 𝒦(r') / 𝒦(r)                  (Grötzsch ring modulus)
//! γ₂(s)    = 2π / μ(1/s)                           (Grötzsch capacity)
//! φ_K(r)   = μ⁻¹(μ(r) / K)                         (distortion function)
//! λ(K)     = (φ_K(1/√2) / φ_{1/K}(1/√2))²
//! η_K(t)   = φ² / (1 − φ²),  φ = φ_K(√(t/(1+t)))
//! ```
//!
//! where `r' = √(1−r²)` is the complementary modulus.
//!
//! Near `r = 1` the complement cannot be recovered from `r` in double
//! precision, so internally every argument in (0,1) travels as a
//! [`UnitPair`] holding both `r` and `r'`. Functions whose inputs are
//! naturally given in another form (η through `t`, the Schwarz chain through
//! a hyperbolic distance) build the pair directly and never lose the small
//! member.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, PI};

use crate::error::{domain, Error, Result};

/// π²/4, the value of μ(r)·μ(r').
pub const PI_SQ_OVER_4: f64 = PI * PI / 4.0;

/// Largest double strictly below one.
const BELOW_ONE: f64 = 1.0 - f64::EPSILON / 2.0;

/// Bisection stops once the bracket ratio `hi/lo − 1` drops below this.
const BISECT_REL_WIDTH: f64 = 1e-6;

/// A number `r ∈ (0,1)` together with its complement `√(1−r²)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitPair {
    pub value: f64,
    pub complement: f64,
}

impl UnitPair {
    /// Pair for `r`, complement computed as `√((1−r)(1+r))`.
    pub fn new(r: f64) -> Self {
        Self {
            value: r,
            complement: ((1.0 - r) * (1.0 + r)).sqrt(),
        }
    }

    /// Pair whose complement is `rc`.
    pub fn from_complement(rc: f64) -> Self {
        Self::new(rc).swap()
    }

    /// `r = √(t/(1+t))`, `r' = √(1/(1+t))`, the substitution used by η_K.
    pub fn from_ratio(t: f64) -> Self {
        let s = 1.0 + t;
        Self {
            value: (t / s).sqrt(),
            complement: (1.0 / s).sqrt(),
        }
    }

    /// `r = th u`, `r' = 1/ch u`.
    pub fn from_tanh(u: f64) -> Self {
        Self {
            value: u.tanh(),
            complement: 1.0 / u.cosh(),
        }
    }

    pub fn swap(self) -> Self {
        Self {
            value: self.complement,
            complement: self.value,
        }
    }

    /// `r / r'`, which equals `sh u` for a pair built by [`UnitPair::from_tanh`].
    pub fn ratio(&self) -> f64 {
        self.value / self.complement
    }
}

/// Tolerances, iteration caps and endpoint switch thresholds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpecFunConfig {
    /// Relative agreement of the AGM iterates at termination.
    pub agm_tol: f64,
    /// Residual tolerance of μ⁻¹, scaled by `max(1, y)`.
    pub inv_tol: f64,
    pub max_iter: usize,
    /// Below this μ(r) is `log(4/r)`.
    pub r_small: f64,
    /// Above this μ(r) is evaluated through `π²/(4 μ(r'))`.
    pub r_near_one: f64,
}

impl Default for SpecFunConfig {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// Parameters of a K-quasiregular distortion estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistortionParams {
    /// Maximal dilatation, `K ≥ 1`.
    pub k: f64,
    /// Metric constant `c > 0`; the theorems need `c ≥ 1`.
    pub c: f64,
}

impl DistortionParams {
    pub fn new(k: f64, c: f64) -> Result<Self> {
        if !(k.is_finite() && k >= 1.0) {
            return Err(domain("K", k, "K >= 1"));
        }
        if !(c.is_finite() && c > 0.0) {
            return Err(domain("c", c, "c > 0"));
        }
        Ok(Self { k, c })
    }

    /// Parameters admissible for the theorem suites (`c ≥ 1`).
    pub fn for_theorem(k: f64, c: f64) -> Result<Self> {
        let p = Self::new(k, c)?;
        if c < 1.0 {
            return Err(domain("c", c, "c >= 1"));
        }
        Ok(p)
    }
}

impl SpecFunConfig {
    pub const DEFAULT: SpecFunConfig = SpecFunConfig {
        agm_tol: 1e-15,
        inv_tol: 1e-13,
        max_iter: 100,
        r_small: 1e-8,
        r_near_one: 1.0 - 1e-8,
    };

    pub fn validate(&self) -> Result<()> {
        let tol_ok = |t: f64| t > 0.0 && t < 1e-3;
        if !tol_ok(self.agm_tol) || !tol_ok(self.inv_tol) {
            return Err(Error::Config(
                "tolerances must lie in (0, 1e-3)".to_string(),
            ));
        }
        if self.max_iter < 16 {
            return Err(Error::Config("max_iter must be at least 16".to_string()));
        }
        if !(0.0 < self.r_small && self.r_small < self.r_near_one && self.r_near_one < 1.0) {
            return Err(Error::Config(
                "need 0 < r_small < r_near_one < 1".to_string(),
            ));
        }
        Ok(())
    }

    fn agm(&self, mut a: f64, mut b: f64) -> Result<f64> {
        for _ in 0..self.max_iter {
            if (a - b).abs() <= self.agm_tol * a {
                return Ok(0.5 * (a + b));
            }
            let next = 0.5 * (a + b);
            b = (a * b).sqrt();
            a = next;
        }
        Err(Error::NonConvergence {
            what: "AGM",
            max_iter: self.max_iter,
        })
    }

    /// Complete elliptic integral of the first kind, modulus convention.
    pub fn ellint_k(&self, r: f64) -> Result<f64> {
        if !(0.0..1.0).contains(&r) {
            return Err(domain("r", r, "0 <= r < 1"));
        }
        self.ellint_k_pair(UnitPair::new(r))
    }

    fn ellint_k_pair(&self, p: UnitPair) -> Result<f64> {
        Ok(FRAC_PI_2 / self.agm(1.0, p.complement)?)
    }

    /// Modulus of the Grötzsch ring, `μ(r) = (π/2)𝒦(r')/𝒦(r)`.
    pub fn mu(&self, r: f64) -> Result<f64> {
        check_open_unit("r", r)?;
        self.mu_pair(UnitPair::new(r))
    }

    /// `μ(√(1−r²))`, evaluated from `r` without rounding the complement.
    pub fn mu_complement(&self, r: f64) -> Result<f64> {
        check_open_unit("r", r)?;
        self.mu_pair(UnitPair::new(r).swap())
    }

    /// μ of a pair; both members are used, so no precision is lost at either end.
    pub fn mu_pair(&self, p: UnitPair) -> Result<f64> {
        if p.value < self.r_small {
            return Ok((4.0 / p.value).ln());
        }
        if p.value > self.r_near_one {
            return Ok(PI_SQ_OVER_4 / self.mu_pair(p.swap())?);
        }
        Ok(FRAC_PI_2 * self.ellint_k_pair(p.swap())? / self.ellint_k_pair(p)?)
    }

    /// Inverse of μ. Results that round to 1 are returned as the largest
    /// double below 1.
    pub fn mu_inv(&self, y: f64) -> Result<f64> {
        if !(y.is_finite() && y > 0.0) {
            return Err(domain("y", y, "y > 0"));
        }
        if y >= FRAC_PI_2 {
            return self.solve_lower(y);
        }
        match self.solve_lower(PI_SQ_OVER_4 / y) {
            Ok(rc) => Ok(below_one(UnitPair::from_complement(rc).value)),
            Err(Error::Underflow(_)) => Ok(BELOW_ONE),
            Err(e) => Err(e),
        }
    }

    /// Inverse of μ returning both `r` and `r'`.
    pub fn mu_inv_pair(&self, y: f64) -> Result<UnitPair> {
        if !(y.is_finite() && y > 0.0) {
            return Err(domain("y", y, "y > 0"));
        }
        if y >= FRAC_PI_2 {
            Ok(UnitPair::new(self.solve_lower(y)?))
        } else {
            Ok(UnitPair::from_complement(
                self.solve_lower(PI_SQ_OVER_4 / y)?,
            ))
        }
    }

    /// Solves `μ(r) = y` for `y ≥ π/2`, i.e. `r ∈ (0, 1/√2]`.
    ///
    /// Log-scale bisection brackets the root to a relative width of 1e-6,
    /// then Newton steps with a central-difference derivative polish it.
    fn solve_lower(&self, y: f64) -> Result<f64> {
        let asymptote_start = (4.0 / self.r_small).ln();
        if y >= asymptote_start {
            let r = 4.0 * (-y).exp();
            if r == 0.0 {
                return Err(Error::Underflow("mu_inv"));
            }
            return Ok(r);
        }
        let f = |r: f64| self.mu_pair(UnitPair::new(r)).map(|m| m - y);

        let (mut lo, mut hi) = (self.r_small, FRAC_1_SQRT_2);
        if f(hi)? >= 0.0 {
            return Ok(hi);
        }
        let mut iter = 0;
        while hi / lo - 1.0 > BISECT_REL_WIDTH {
            iter += 1;
            if iter > self.max_iter {
                return Err(Error::NonConvergence {
                    what: "mu_inv bisection",
                    max_iter: self.max_iter,
                });
            }
            let mid = (lo * hi).sqrt();
            if f(mid)? > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }

        let mut r = (lo * hi).sqrt();
        for _ in 0..self.max_iter {
            let fr = f(r)?;
            if fr == 0.0 {
                break;
            }
            let h = 1e-7 * r * (1.0 - r);
            let slope = (f(r + h)? - f(r - h)?) / (2.0 * h);
            let next = (r - fr / slope).clamp(lo, hi);
            let done = (next - r).abs() <= 2.0 * f64::EPSILON * r;
            r = next;
            if done {
                break;
            }
        }
        if f(r)?.abs() > self.inv_tol * y.max(1.0) {
            return Err(Error::NonConvergence {
                what: "mu_inv Newton polish",
                max_iter: self.max_iter,
            });
        }
        Ok(r)
    }

    /// Grötzsch capacity `γ₂(s) = 2π/μ(1/s)` for `s > 1`.
    pub fn gamma2(&self, s: f64) -> Result<f64> {
        if !(s.is_finite() && s > 1.0) {
            return Err(domain("s", s, "s > 1"));
        }
        let pair = UnitPair {
            value: 1.0 / s,
            complement: ((s - 1.0) * (s + 1.0)).sqrt() / s,
        };
        Ok(2.0 * PI / self.mu_pair(pair)?)
    }

    /// Distortion function `φ_{K,2}(r) = μ⁻¹(μ(r)/K)`.
    pub fn phi_k(&self, k: f64, r: f64) -> Result<f64> {
        check_open_unit("r", r)?;
        Ok(below_one(self.phi_k_pair(k, UnitPair::new(r))?.value))
    }

    pub fn phi_k_pair(&self, k: f64, p: UnitPair) -> Result<UnitPair> {
        if !(k.is_finite() && k > 0.0) {
            return Err(domain("K", k, "K > 0"));
        }
        self.mu_inv_pair(self.mu_pair(p)? / k)
    }

    /// `λ(K) = (φ_K(1/√2) / φ_{1/K}(1/√2))²`, exactly 1 at `K = 1`.
    pub fn lambda_k(&self, k: f64) -> Result<f64> {
        if !(k.is_finite() && k >= 1.0) {
            return Err(domain("K", k, "K >= 1"));
        }
        if k == 1.0 {
            return Ok(1.0);
        }
        let mid = UnitPair::new(FRAC_1_SQRT_2);
        let up = self.phi_k_pair(k, mid)?;
        let down = self.phi_k_pair(1.0 / k, mid)?;
        let q = up.value / down.value;
        Ok(q * q)
    }

    /// `η_K(t) = φ²/(1−φ²)` with `φ = φ_{K,2}(√(t/(1+t)))`.
    pub fn eta_k(&self, k: f64, t: f64) -> Result<f64> {
        if !(k.is_finite() && k >= 1.0) {
            return Err(domain("K", k, "K >= 1"));
        }
        if !(t.is_finite() && t > 0.0) {
            return Err(domain("t", t, "t > 0"));
        }
        let phi = self.phi_k_pair(k, UnitPair::from_ratio(t))?;
        let q = phi.ratio();
        let eta = q * q;
        if !eta.is_finite() {
            return Err(Error::Overflow("eta_K"));
        }
        Ok(eta)
    }
}

fn check_open_unit(name: &'static str, r: f64) -> Result<()> {
    if r > 0.0 && r < 1.0 {
        Ok(())
    } else {
        Err(domain(name, r, "0 < r < 1"))
    }
}

fn below_one(r: f64) -> f64 {
    r.min(BELOW_ONE)
}

pub fn ellint_k(r: f64) -> Result<f64> {
    SpecFunConfig::DEFAULT.ellint_k(r)
}

pub fn mu(r: f64) -> Result<f64> {
    SpecFunConfig::DEFAULT.mu(r)
}

pub fn mu_complement(r: f64) -> Result<f64> {
    SpecFunConfig::DEFAULT.mu_complement(r)
}

pub fn mu_inv(y: f64) -> Result<f64> {
    SpecFunConfig::DEFAULT.mu_inv(y)
}

pub fn gamma2(s: f64) -> Result<f64> {
    SpecFunConfig::DEFAULT.gamma2(s)
}

pub fn phi_k(k: f64, r: f64) -> Result<f64> {
    SpecFunConfig::DEFAULT.phi_k(k, r)
}

pub fn lambda_k(k: f64) -> Result<f64> {
    SpecFunConfig::DEFAULT.lambda_k(k)
}

pub fn eta_k(k: f64, t: f64) -> Result<f64> {
    SpecFunConfig::DEFAULT.eta_k(k, t)
}
