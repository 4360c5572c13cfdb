//! Parameter grids and seeded sampling.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;

/// `n` points from `a` to `b` inclusive, evenly spaced.
pub fn lin_space(a: f64, b: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![a],
        _ => (0..n)
            .map(|i| {
                if i == n - 1 {
                    b
                } else {
                    a + (b - a) * i as f64 / (n - 1) as f64
                }
            })
            .collect(),
    }
}

/// `n` points from `a` to `b` inclusive, evenly spaced in `ln`. Needs `a, b > 0`.
pub fn log_space(a: f64, b: f64, n: usize) -> Vec<f64> {
    let (la, lb) = (a.ln(), b.ln());
    let mut v: Vec<f64> = lin_space(la, lb, n).into_iter().map(f64::exp).collect();
    if let Some(first) = v.first_mut() {
        *first = a;
    }
    if n > 1 {
        v[n - 1] = b;
    }
    v
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spacing {
    Linear,
    Log,
}

/// One parameter axis of a scan.
#[derive(Debug, Clone, PartialEq)]
pub enum Grid {
    List(Vec<f64>),
    Range {
        min: f64,
        max: f64,
        count: usize,
        spacing: Spacing,
    },
}

impl Grid {
    pub fn list(values: &[f64]) -> Self {
        Grid::List(values.to_vec())
    }

    pub fn lin(min: f64, max: f64, count: usize) -> Self {
        Grid::Range {
            min,
            max,
            count,
            spacing: Spacing::Linear,
        }
    }

    pub fn log(min: f64, max: f64, count: usize) -> Self {
        Grid::Range {
            min,
            max,
            count,
            spacing: Spacing::Log,
        }
    }

    pub fn values(&self) -> Vec<f64> {
        match self {
            Grid::List(v) => v.clone(),
            Grid::Range {
                min,
                max,
                count,
                spacing: Spacing::Linear,
            } => lin_space(*min, *max, *count),
            Grid::Range {
                min,
                max,
                count,
                spacing: Spacing::Log,
            } => log_space(*min, *max, *count),
        }
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Grid::List(v) => {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "{{{}}}", parts.join(";"))
            }
            Grid::Range {
                min,
                max,
                count,
                spacing,
            } => {
                write!(f, "{min}:{max}:{count}")?;
                if *spacing == Spacing::Log {
                    write!(f, ":log")?;
                }
                Ok(())
            }
        }
    }
}

/// Parses `min:max:count[:log|:lin]` or a single value.
impl FromStr for Grid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |why: &str| Error::Param(format!("bad grid '{s}': {why}"));
        let parts: Vec<&str> = s.split(':').map(str::trim).collect();
        let num = |p: &str| p.parse::<f64>().map_err(|_| bad("expected a number"));
        match parts.as_slice() {
            [v] => {
                let v = num(v)?;
                if !v.is_finite() {
                    return Err(bad("value must be finite"));
                }
                Ok(Grid::List(vec![v]))
            }
            [min, max, count, rest @ ..] => {
                let (min, max) = (num(min)?, num(max)?);
                let count: usize = count.parse().map_err(|_| bad("count must be an integer"))?;
                if count < 1 {
                    return Err(bad("count must be at least 1"));
                }
                if !(min.is_finite() && max.is_finite()) || min > max {
                    return Err(bad("need finite min <= max"));
                }
                let spacing = match rest {
                    [] | ["lin"] | ["linear"] => Spacing::Linear,
                    ["log"] => Spacing::Log,
                    _ => return Err(bad("spacing must be 'lin' or 'log'")),
                };
                if spacing == Spacing::Log && min <= 0.0 {
                    return Err(bad("log spacing needs min > 0"));
                }
                Ok(Grid::Range {
                    min,
                    max,
                    count,
                    spacing,
                })
            }
            _ => Err(bad("expected min:max:count[:log]")),
        }
    }
}

/// Deterministic 64-bit seeded generator used by every random suite.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform point of `[-10, 10] × (0, 10]`.
pub fn sample_half_plane(rng: &mut impl Rng) -> (f64, f64) {
    let re = rng.random_range(-10.0..=10.0);
    // (0, 10]: reflect [0, 10) so the boundary is excluded
    let im = 10.0 - rng.random_range(0.0..10.0);
    (re, im)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spaces_hit_endpoints() {
        let v = log_space(1e-6, 1e6, 61);
        assert_eq!(v.len(), 61);
        assert_eq!(v[0], 1e-6);
        assert_eq!(v[60], 1e6);
        assert!((v[30] - 1.0).abs() < 1e-12);
        assert_eq!(lin_space(0.0, 1.0, 1), vec![0.0]);
        assert_eq!(lin_space(0.0, 1.0, 3), vec![0.0, 0.5, 1.0]);
    }

    #[test]
    fn parse_grid() {
        assert_eq!("1:2:3".parse::<Grid>().unwrap(), Grid::lin(1.0, 2.0, 3));
        assert_eq!(
            "1e-6:1e6:61:log".parse::<Grid>().unwrap(),
            Grid::log(1e-6, 1e6, 61)
        );
        assert_eq!("2.5".parse::<Grid>().unwrap(), Grid::list(&[2.5]));
        for bad in ["", "1:2", "1:2:0", "2:1:3", "0:1:3:log", "1:2:3:cubic", "x"] {
            assert!(bad.parse::<Grid>().is_err(), "{bad}");
        }
    }

    #[test]
    fn rng_is_reproducible() {
        let a: Vec<(f64, f64)> = {
            let mut r = seeded_rng(7);
            (0..5).map(|_| sample_half_plane(&mut r)).collect()
        };
        let b: Vec<(f64, f64)> = {
            let mut r = seeded_rng(7);
            (0..5).map(|_| sample_half_plane(&mut r)).collect()
        };
        assert_eq!(a, b);
        assert!(a
            .iter()
            .all(|&(x, y)| (-10.0..=10.0).contains(&x) && y > 0.0 && y <= 10.0));
    }
}
