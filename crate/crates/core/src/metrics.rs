//! Hyperbolic metrics of the upper half plane and the unit disk, and the
//! hyperbolic-type metric
//!
//! ```text
//! h_{D,c}(x, y) = log(1 + c·|x − y| / √(d_D(x)·d_D(y))),   d_D(x) = dist(x, ∂D)
//! ```
//!
//! On the half plane `h` is a function of the hyperbolic distance alone:
//! `h = log(1 + 2c·sh(ρ/2))`, see [`h_from_rho`].

use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Error, Result};

/// Point of the upper half plane, `im > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfPlanePoint {
    re: f64,
    im: f64,
}

impl HalfPlanePoint {
    pub fn new(re: f64, im: f64) -> Result<Self> {
        if !re.is_finite() {
            return Err(domain("re", re, "finite"));
        }
        if !(im.is_finite() && im > 0.0) {
            return Err(domain("im", im, "0 < im < inf"));
        }
        Ok(Self { re, im })
    }

    pub fn re(&self) -> f64 {
        self.re
    }

    pub fn im(&self) -> f64 {
        self.im
    }
}

/// Point of the open unit disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskPoint {
    re: f64,
    im: f64,
}

impl DiskPoint {
    pub fn new(re: f64, im: f64) -> Result<Self> {
        let n = re.hypot(im);
        if !(n < 1.0) {
            return Err(domain("|p|", n, "|p| < 1"));
        }
        Ok(Self { re, im })
    }

    pub fn re(&self) -> f64 {
        self.re
    }

    pub fn im(&self) -> f64 {
        self.im
    }

    pub fn norm(&self) -> f64 {
        self.re.hypot(self.im)
    }

    /// `1 − |p|²`, computed without cancellation near the origin.
    fn one_minus_norm_sq(&self) -> f64 {
        let n = self.norm();
        (1.0 - n) * (1.0 + n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Domain {
    HalfPlane,
    Disk,
}

impl Domain {
    /// Checks membership of `(re, im)`.
    pub fn contains(self, re: f64, im: f64) -> bool {
        match self {
            Domain::HalfPlane => HalfPlanePoint::new(re, im).is_ok(),
            Domain::Disk => DiskPoint::new(re, im).is_ok(),
        }
    }

    /// Euclidean distance from `(re, im)` to the boundary of the domain.
    pub fn boundary_dist(self, re: f64, im: f64) -> Result<f64> {
        match self {
            Domain::HalfPlane => Ok(HalfPlanePoint::new(re, im)?.im),
            Domain::Disk => Ok(1.0 - DiskPoint::new(re, im)?.norm()),
        }
    }

    /// `h_{D,c}` between two coordinate pairs.
    pub fn h_metric(self, c: f64, p: (f64, f64), q: (f64, f64)) -> Result<f64> {
        check_c(c)?;
        match self {
            Domain::HalfPlane => Ok(h_half_plane(
                c,
                HalfPlanePoint::new(p.0, p.1)?,
                HalfPlanePoint::new(q.0, q.1)?,
            )),
            Domain::Disk => Ok(h_disk(
                c,
                DiskPoint::new(p.0, p.1)?,
                DiskPoint::new(q.0, q.1)?,
            )),
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Domain::HalfPlane => "half-plane",
            Domain::Disk => "disk",
        })
    }
}

impl FromStr for Domain {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "half-plane" | "halfplane" | "h" | "h2" => Ok(Domain::HalfPlane),
            "disk" | "b" | "b2" => Ok(Domain::Disk),
            other => Err(Error::Param(format!(
                "unknown domain '{other}' (expected half-plane or disk)"
            ))),
        }
    }
}

fn check_c(c: f64) -> Result<()> {
    if c.is_finite() && c > 0.0 {
        Ok(())
    } else {
        Err(domain("c", c, "c > 0"))
    }
}

fn dist(a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - b.0).hypot(a.1 - b.1)
}

/// Hyperbolic distance of the half plane.
///
/// Equal to `arch(1 + |x−y|²/(2 Im x Im y))`; evaluated as
/// `2 arsh(|x−y| / (2√(Im x Im y)))`, which keeps full relative precision
/// for nearby points.
pub fn rho_half_plane(x: HalfPlanePoint, y: HalfPlanePoint) -> f64 {
    let d = dist((x.re, x.im), (y.re, y.im));
    2.0 * (d / (2.0 * (x.im * y.im).sqrt())).asinh()
}

/// Hyperbolic distance of the unit disk, `2 arsh(|a−b| / √((1−|a|²)(1−|b|²)))`.
pub fn rho_disk(a: DiskPoint, b: DiskPoint) -> f64 {
    let d = dist((a.re, a.im), (b.re, b.im));
    2.0 * (d / (a.one_minus_norm_sq() * b.one_minus_norm_sq()).sqrt()).asinh()
}

pub fn h_half_plane(c: f64, x: HalfPlanePoint, y: HalfPlanePoint) -> f64 {
    let d = dist((x.re, x.im), (y.re, y.im));
    (c * d / (x.im * y.im).sqrt()).ln_1p()
}

pub fn h_disk(c: f64, a: DiskPoint, b: DiskPoint) -> f64 {
    let d = dist((a.re, a.im), (b.re, b.im));
    (c * d / ((1.0 - a.norm()) * (1.0 - b.norm())).sqrt()).ln_1p()
}

/// `h_{H²,c}` as a function of the hyperbolic distance: `log(1 + 2c·sh(ρ/2))`.
pub fn h_from_rho(c: f64, rho: f64) -> Result<f64> {
    check_c(c)?;
    if !(rho >= 0.0) {
        return Err(domain("rho", rho, "rho >= 0"));
    }
    Ok((2.0 * c * (rho / 2.0).sinh()).ln_1p())
}

/// Real Möbius map `z ↦ (az+b)/(cz+d)` with `ad − bc > 0`; an automorphism of H².
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MobiusH {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

impl MobiusH {
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        if ![a, b, c, d].iter().all(|v| v.is_finite()) {
            return Err(Error::Param("Möbius coefficients must be finite".into()));
        }
        let det = a * d - b * c;
        if !(det > 0.0) {
            return Err(domain("ad - bc", det, "ad - bc > 0"));
        }
        Ok(Self { a, b, c, d })
    }

    pub fn identity() -> Self {
        Self {
            a: 1.0,
            b: 0.0,
            c: 0.0,
            d: 1.0,
        }
    }

    pub fn det(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    pub fn apply(&self, p: HalfPlanePoint) -> Result<HalfPlanePoint> {
        // w = (az+b)/(cz+d); with q = cz+d,
        // Re w = (a c |z|² + (ad+bc) x + b d)/|q|²,  Im w = det·y/|q|²
        let (x, y) = (p.re, p.im);
        let qre = self.c * x + self.d;
        let qim = self.c * y;
        let q2 = qre * qre + qim * qim;
        if !(q2 > f64::MIN_POSITIVE) {
            return Err(Error::Singular { re: x, im: y });
        }
        let nre = self.a * x + self.b;
        let nim = self.a * y;
        let re = (nre * qre + nim * qim) / q2;
        let im = self.det() * y / q2;
        HalfPlanePoint::new(re, im).map_err(|_| Error::Singular { re: x, im: y })
    }
}

/// Radial stretch `z ↦ z|z|^{K−1}`, a K-quasiconformal self-map of H².
pub fn stretch_map(k: f64, p: HalfPlanePoint) -> Result<HalfPlanePoint> {
    if !(k.is_finite() && k >= 1.0) {
        return Err(domain("K", k, "K >= 1"));
    }
    let scale = p.re.hypot(p.im).powf(k - 1.0);
    HalfPlanePoint::new(p.re * scale, p.im * scale).map_err(|_| Error::Overflow("stretch_map"))
}

/// `h(x,z) − h(x,y) − h(y,z)` minimised over the three choices of middle point;
/// a negative value is a triangle-inequality violation.
pub fn triangle_margin(h: impl Fn(usize, usize) -> f64) -> f64 {
    let (h01, h02, h12) = (h(0, 1), h(0, 2), h(1, 2));
    (h01 + h12 - h02).min(h01 + h02 - h12).min(h02 + h12 - h01)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hp(re: f64, im: f64) -> HalfPlanePoint {
        HalfPlanePoint::new(re, im).unwrap()
    }

    fn dp(re: f64, im: f64) -> DiskPoint {
        DiskPoint::new(re, im).unwrap()
    }

    #[test]
    fn points_validate() {
        assert!(HalfPlanePoint::new(0.0, 0.0).is_err());
        assert!(HalfPlanePoint::new(f64::NAN, 1.0).is_err());
        assert!(DiskPoint::new(0.6, 0.8).is_err());
        assert!(DiskPoint::new(0.6, 0.79).is_ok());
    }

    #[test]
    fn boundary_distance() {
        assert_eq!(Domain::HalfPlane.boundary_dist(0.0, 1.0).unwrap(), 1.0);
        assert_eq!(Domain::Disk.boundary_dist(0.0, 0.0).unwrap(), 1.0);
        assert!((Domain::Disk.boundary_dist(0.3, 0.4).unwrap() - 0.5).abs() < 1e-15);
        assert!(Domain::Disk.boundary_dist(1.0, 0.0).is_err());
        assert!(Domain::HalfPlane.boundary_dist(1.0, -1.0).is_err());
    }

    #[test]
    fn rho_half_plane_values() {
        assert_eq!(rho_half_plane(hp(0.0, 1.0), hp(0.0, 1.0)), 0.0);
        let r = rho_half_plane(hp(0.0, 1.0), hp(0.0, 2.0));
        assert!((r - 2f64.ln()).abs() < 1e-15);
        assert!((r - 1.25f64.acosh()).abs() < 1e-15);
        // mpmath: 1.45057451382258020...
        let r = rho_half_plane(hp(1.0, 1.0), hp(3.0, 2.0));
        assert!((r - 1.450_574_513_822_580_2).abs() < 1e-14);
        assert_eq!(r, rho_half_plane(hp(3.0, 2.0), hp(1.0, 1.0)));
    }

    #[test]
    fn rho_disk_values() {
        assert_eq!(rho_disk(dp(0.0, 0.0), dp(0.0, 0.0)), 0.0);
        for &r in &[0.1f64, 0.5, 0.9, 0.999] {
            let expected = ((1.0 + r) / (1.0 - r)).ln();
            assert!((rho_disk(dp(0.0, 0.0), dp(r, 0.0)) - expected).abs() < 1e-13);
        }
        // mpmath: 1.04817095877104869...
        let v = rho_disk(dp(0.1, 0.2), dp(0.0, -0.3));
        assert!((v - 1.048_170_958_771_048_7).abs() < 1e-14);
    }

    #[test]
    fn h_metric_values() {
        let hm = |c, p, q| Domain::HalfPlane.h_metric(c, p, q).unwrap();
        assert_eq!(hm(1.0, (0.0, 1.0), (0.0, 1.0)), 0.0);
        let v = hm(1.0, (0.0, 1.0), (0.0, 2.0));
        assert!((v - (1.0 + 1.0 / 2f64.sqrt()).ln()).abs() < 1e-15);
        assert!((v - 0.534_799_996_739_570_4).abs() < 1e-15);
        let v = Domain::Disk.h_metric(2.0, (0.0, 0.0), (0.5, 0.0)).unwrap();
        // mpmath: 0.881373587019543025...
        assert!((v - 0.881_373_587_019_543).abs() < 1e-15);
        assert!(Domain::Disk.h_metric(0.0, (0.0, 0.0), (0.5, 0.0)).is_err());
        assert!(Domain::Disk.h_metric(1.0, (0.0, 0.0), (1.5, 0.0)).is_err());
        assert!(hm(2.0, (0.0, 1.0), (1.0, 2.0)) > hm(1.5, (0.0, 1.0), (1.0, 2.0)));
    }

    #[test]
    fn h_from_rho_values() {
        assert_eq!(h_from_rho(3.0, 0.0).unwrap(), 0.0);
        let v = h_from_rho(1.0, 2f64.ln()).unwrap();
        let direct = h_half_plane(1.0, hp(0.0, 1.0), hp(0.0, 2.0));
        assert!((v - direct).abs() < 1e-15);
        // mpmath: 1.12635106089400359...
        assert!((h_from_rho(2.0, 1.0).unwrap() - 1.126_351_060_894_003_6).abs() < 1e-15);
        assert!(h_from_rho(1.0, -1.0).is_err());
    }

    #[test]
    fn mobius_examples() {
        let p = hp(0.3, 0.7);
        assert_eq!(MobiusH::identity().apply(p).unwrap(), p);
        let shift = MobiusH::new(1.0, 3.0, 0.0, 1.0).unwrap();
        assert_eq!(shift.apply(hp(0.0, 1.0)).unwrap(), hp(3.0, 1.0));
        let a = rho_half_plane(hp(0.0, 1.0), hp(0.0, 2.0));
        let b = rho_half_plane(
            shift.apply(hp(0.0, 1.0)).unwrap(),
            shift.apply(hp(0.0, 2.0)).unwrap(),
        );
        assert!((a - b).abs() < 1e-15);
        let inv = MobiusH::new(0.0, 1.0, -1.0, 0.0).unwrap();
        let w = inv.apply(hp(0.0, 2.0)).unwrap();
        assert!(w.re().abs() < 1e-16 && (w.im() - 0.5).abs() < 1e-16);
        let q = hp(1.5, 0.2);
        let before = rho_half_plane(hp(0.0, 2.0), q);
        let after = rho_half_plane(w, inv.apply(q).unwrap());
        assert!((before - after).abs() < 1e-12);
        assert!(MobiusH::new(1.0, 0.0, 0.0, -1.0).is_err());
    }

    #[test]
    fn stretch_examples() {
        assert_eq!(stretch_map(3.0, hp(0.0, 1.0)).unwrap(), hp(0.0, 1.0));
        let p = hp(-0.4, 2.2);
        assert_eq!(stretch_map(1.0, p).unwrap(), p);
        let w = stretch_map(2.0, hp(0.0, 2.0)).unwrap();
        assert!(w.re().abs() < 1e-15 && (w.im() - 4.0).abs() < 1e-15);
        let w = stretch_map(2.5, p).unwrap();
        assert!((w.im().atan2(w.re()) - p.im().atan2(p.re())).abs() < 1e-14);
        assert!(stretch_map(0.5, p).is_err());
    }

    #[test]
    fn disk_collinear_violation_for_c_one() {
        let r = 0.999;
        let (a, b, z) = (dp(-r, 0.0), dp(0.0, 0.0), dp(r, 0.0));
        let pts = [a, b, z];
        let m1 = triangle_margin(|i, j| h_disk(1.0, pts[i], pts[j]));
        let m2 = triangle_margin(|i, j| h_disk(2.0, pts[i], pts[j]));
        assert!(m1 < 0.0);
        assert!(m2 >= 0.0);
    }
}
