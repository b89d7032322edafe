use std::f64::consts::PI;

use serde::Serialize;

use super::torus::torus_coords;
use crate::error::{Error, Result};

/// Largest `n` for which `2^{n+1}` is exact in an `f64` mantissa with room to spare.
const MAX_N: usize = 50;

/// Constants of the `K_n` immersion.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ImmersionParams {
    pub n: usize,
    /// Amplitude of the radius perturbation, `2 / (pi^2 (2^{n+1} - 5))`.
    pub d: f64,
    /// Unit for the torus radii, `1 / (2^{n+1} - 5)`.
    #[serde(rename = "D")]
    pub big_d: f64,
}

impl ImmersionParams {
    pub fn new(n: usize) -> Result<Self> {
        if !(2..=MAX_N).contains(&n) {
            return Err(Error::Domain(format!("immersion needs 2 <= n <= {MAX_N}, got {n}")));
        }
        let denom = 2f64.powi(n as i32 + 1) - 5.0;
        Ok(ImmersionParams {
            n,
            d: 2.0 / (PI * PI * denom),
            big_d: 1.0 / denom,
        })
    }

    pub fn radius(&self, t: f64) -> f64 {
        0.5 - self.d * (2.0 * t - PI) * (t * (PI - t)).max(0.0).sqrt()
    }

    /// Closed band `[lo, hi]` containing every value of the radius.
    pub fn radius_band(&self) -> (f64, f64) {
        let h = PI * PI * self.d / 4.0;
        (0.5 - h, 0.5 + h)
    }

    /// Torus radii `r_1..r_{n-1}` used over parameter `t`.
    pub fn torus_radii(&self, t: f64) -> Vec<f64> {
        let n = self.n;
        let mut radii: Vec<f64> = (1..n - 1)
            .map(|i| 2f64.powi((n - i) as i32) * self.big_d)
            .collect();
        radii.push(self.radius(t) - 0.5 + 1.5 * self.big_d);
        radii
    }
}

/// Directrix point, unit tangent and unit normal.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Directrix {
    pub alpha: [f64; 2],
    pub tangent: [f64; 2],
    pub normal: [f64; 2],
}

fn check_t(t: f64) -> Result<()> {
    if (0.0..=PI).contains(&t) {
        Ok(())
    } else {
        Err(Error::Domain(format!("t = {t} outside [0, pi]")))
    }
}

/// `alpha(t) = (5 sin t, 2 sin^2 t cos t)` with its unit tangent and the
/// normal `J = (-v_2, v_1)`.
pub fn directrix(t: f64) -> Result<Directrix> {
    check_t(t)?;
    let (s, c) = t.sin_cos();
    let alpha = [5.0 * s, 2.0 * s * s * c];
    let da = [5.0 * c, 4.0 * s * c * c - 2.0 * s * s * s];
    let norm = da[0].hypot(da[1]);
    if norm < 1e-12 {
        return Err(Error::Numeric(format!("directrix tangent vanishes at t = {t}")));
    }
    let v = [da[0] / norm, da[1] / norm];
    Ok(Directrix {
        alpha,
        tangent: v,
        normal: [-v[1], v[0]],
    })
}

pub fn radius(n: usize, t: f64) -> Result<f64> {
    check_t(t)?;
    Ok(ImmersionParams::new(n)?.radius(t))
}

pub(crate) fn immersion_into(
    p: &ImmersionParams,
    theta: &[f64],
    t: f64,
    out: &mut [f64],
) -> Result<()> {
    let n = p.n;
    let frame = directrix(t)?;
    let radii = p.torus_radii(t);
    torus_coords(&radii, theta, &mut out[1..=n]);
    let x1 = out[1];
    out[0] = frame.alpha[0] + x1 * frame.normal[0];
    out[1] = frame.alpha[1] + x1 * frame.normal[1];
    Ok(())
}

fn check_theta(n: usize, theta: &[f64]) -> Result<()> {
    if theta.len() != n - 1 {
        return Err(Error::DimensionMismatch {
            left: theta.len(),
            right: n - 1,
        });
    }
    Ok(())
}

/// Point of the immersion `K_n -> R^{n+1}`.
pub fn immersion_point(n: usize, theta: &[f64], t: f64) -> Result<Vec<f64>> {
    let p = ImmersionParams::new(n)?;
    check_theta(n, theta)?;
    let mut out = vec![0.0; n + 1];
    immersion_into(&p, theta, t, &mut out)?;
    Ok(out)
}

/// Point of the embedding `K_n -> R^{n+2}`: the immersion with `sin 2t` appended.
pub fn embedding_point(n: usize, theta: &[f64], t: f64) -> Result<Vec<f64>> {
    let mut out = immersion_point(n, theta, t)?;
    out.push((2.0 * t).sin());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{rngs::StdRng, Rng, SeedableRng};
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, TAU};

    fn dist(a: &[f64], b: &[f64]) -> f64 {
        a.iter().zip(b).map(|(x, y)| (x - y).powi(2)).sum::<f64>().sqrt()
    }

    #[test]
    fn directrix_values() {
        let f0 = directrix(0.0).unwrap();
        assert_eq!(f0.alpha, [0.0, 0.0]);
        assert!((f0.tangent[0] - 1.0).abs() < 1e-15 && f0.tangent[1].abs() < 1e-15);
        assert!(f0.normal[0].abs() < 1e-15 && (f0.normal[1] - 1.0).abs() < 1e-15);

        let mid = directrix(FRAC_PI_2).unwrap();
        assert!((mid.alpha[0] - 5.0).abs() < 1e-15 && mid.alpha[1].abs() < 1e-15);

        let fp = directrix(PI).unwrap();
        for k in 0..2 {
            assert!((fp.alpha[k] - f0.alpha[k]).abs() < 1e-12);
            assert!((fp.tangent[k] + f0.tangent[k]).abs() < 1e-12);
            assert!((fp.normal[k] + f0.normal[k]).abs() < 1e-12);
        }
        assert!(directrix(-0.1).is_err());
        assert!(directrix(3.2).is_err());
    }

    #[test]
    fn tangent_matches_finite_differences() {
        let alpha = |t: f64| [5.0 * t.sin(), 2.0 * t.sin().powi(2) * t.cos()];
        let h = 1e-6;
        for k in 0..=1000 {
            let t = PI * k as f64 / 1000.0;
            let (a, b) = (alpha(t + h), alpha(t - h));
            let fd = [(a[0] - b[0]) / (2.0 * h), (a[1] - b[1]) / (2.0 * h)];
            let norm = fd[0].hypot(fd[1]);
            let f = directrix(t).unwrap();
            assert!((f.tangent[0] - fd[0] / norm).abs() < 1e-8);
            assert!((f.tangent[1] - fd[1] / norm).abs() < 1e-8);
            let n = f.normal;
            assert!((n[0].hypot(n[1]) - 1.0).abs() < 1e-12);
            assert!((n[0] * f.tangent[0] + n[1] * f.tangent[1]).abs() < 1e-12);
        }
    }

    #[test]
    fn radius_values_and_band() {
        for n in 2..10 {
            let p = ImmersionParams::new(n).unwrap();
            assert_eq!(p.radius(0.0), 0.5);
            assert_eq!(p.radius(PI), 0.5);
            assert_eq!(p.radius(FRAC_PI_2), 0.5);
            let (lo, hi) = p.radius_band();
            assert!((hi - lo - p.big_d).abs() < 1e-15);
            for k in 0..=20000 {
                let r = p.radius(PI * k as f64 / 20000.0);
                assert!(lo <= r && r <= hi);
            }
        }
        assert!((radius(2, 1.0).unwrap() - (0.5 - (2.0 - PI) * (PI - 1.0).sqrt() * 2.0 / (3.0 * PI * PI))).abs() < 1e-15);
        assert!(ImmersionParams::new(1).is_err());
    }

    #[test]
    fn torus_radii_stay_nested_and_reach_radius() {
        for n in 2..9 {
            let p = ImmersionParams::new(n).unwrap();
            for k in 0..=400 {
                let t = PI * k as f64 / 400.0;
                let radii = p.torus_radii(t);
                let last = *radii.last().unwrap();
                assert!(last >= p.big_d - 1e-15 && last <= 2.0 * p.big_d + 1e-15);
                assert!(super::super::TorusParams::new(radii.clone()).is_ok());
                let sum: f64 = radii.iter().sum();
                assert!((sum - p.radius(t)).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn boundary_identity() {
        let mut rng = StdRng::seed_from_u64(3);
        for n in 2..=5 {
            for _ in 0..2000 {
                let th: Vec<f64> = (0..n - 1).map(|_| rng.gen_range(0.0..TAU)).collect();
                let neg: Vec<f64> = th.iter().map(|x| -x).collect();
                let a = immersion_point(n, &th, 0.0).unwrap();
                let b = immersion_point(n, &neg, PI).unwrap();
                let sum: Vec<f64> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
                assert!(dist(&sum, &vec![0.0; n + 1]) < 1e-9);
                let ea = embedding_point(n, &th, 0.0).unwrap();
                let eb = embedding_point(n, &neg, PI).unwrap();
                assert!(ea.iter().zip(&eb).all(|(x, y)| (x + y).abs() < 1e-9));
            }
        }
    }

    #[test]
    fn boundary_points_coincide_after_reflection() {
        let mut rng = StdRng::seed_from_u64(5);
        for n in 2..=5 {
            for _ in 0..500 {
                let th: Vec<f64> = (0..n - 1).map(|_| rng.gen_range(0.0..TAU)).collect();
                let mut phi = th.clone();
                phi[0] = PI - th[0];
                let a = immersion_point(n, &th, 0.0).unwrap();
                let b = immersion_point(n, &phi, PI).unwrap();
                assert!(dist(&a, &b) < 1e-9);
            }
        }
    }

    #[test]
    fn slice_lies_over_normal_segment() {
        let mut rng = StdRng::seed_from_u64(9);
        let n = 4;
        let p = ImmersionParams::new(n).unwrap();
        for _ in 0..2000 {
            let t = rng.gen_range(0.0..PI);
            let th: Vec<f64> = (0..n - 1).map(|_| rng.gen_range(0.0..TAU)).collect();
            let k = immersion_point(n, &th, t).unwrap();
            let f = directrix(t).unwrap();
            let rel = [k[0] - f.alpha[0], k[1] - f.alpha[1]];
            // along the normal, within the radius
            assert!((rel[0] * f.tangent[0] + rel[1] * f.tangent[1]).abs() < 1e-12);
            let along = rel[0] * f.normal[0] + rel[1] * f.normal[1];
            assert!(along.abs() <= p.radius(t) + 1e-12);
        }
    }

    #[test]
    fn embedding_last_coordinate() {
        let th = [0.3, 1.1];
        assert_eq!(embedding_point(3, &th, 0.0).unwrap()[4], 0.0);
        assert!(embedding_point(3, &th, PI).unwrap()[4].abs() < 1e-15);
        assert!((embedding_point(3, &th, FRAC_PI_4).unwrap()[4] - 1.0).abs() < 1e-15);
        assert!((embedding_point(3, &th, 3.0 * FRAC_PI_4).unwrap()[4] + 1.0).abs() < 1e-15);
        assert!(immersion_point(3, &[0.1], 1.0).is_err());
    }

    #[test]
    fn distinct_radii_give_disjoint_tori() {
        use super::super::{torus_point, TorusParams};
        for n in [2usize, 3] {
            let p = ImmersionParams::new(n).unwrap();
            let (lo, hi) = p.radius_band();
            let res: usize = if n == 2 { 400 } else { 40 };
            let sample = |r: f64| {
                let mut radii = p.torus_radii(0.0);
                *radii.last_mut().unwrap() = r - 0.5 + 1.5 * p.big_d;
                let tp = TorusParams::new(radii).unwrap();
                let mut pts = Vec::new();
                let total = res.pow(n as u32 - 1);
                for idx in 0..total {
                    let mut rem = idx;
                    let th: Vec<f64> = (0..n - 1)
                        .map(|_| {
                            let a = rem % res;
                            rem /= res;
                            TAU * a as f64 / res as f64
                        })
                        .collect();
                    pts.push(torus_point(&tp, &th).unwrap());
                }
                pts
            };
            let (r, r2) = (lo + 0.3 * (hi - lo), lo + 0.6 * (hi - lo));
            let (a, b) = (sample(r), sample(r2));
            let min = a
                .iter()
                .flat_map(|x| b.iter().map(move |y| dist(x, y)))
                .fold(f64::MAX, f64::min);
            assert!(min >= (r2 - r) * (1.0 - 1e-9), "n={n}: min distance {min}");
        }
    }
}
