//! Property suites driven by `wigner-kit verify`.

use log::info;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use num_complex::Complex64;
use serde::Serialize;

use crate::error::Result;
use crate::exactcomb::HalfInt;
use crate::group::{from_euler, sample_gl2, sample_haar, sample_haar_angles, sample_sl2, EulerAngles};
use crate::haar::{
    addition_formula_check, build_grid, character_norm, integrate, jacobi_orthogonality_check,
    jacobi_weight_orthogonality, legendre_product_check, schur_check, HaarGrid,
};
use crate::specfun::krawtchouk;
use crate::wigner::{dmatrix_euler, matrix_via, matrix_via_angles, oracle_matrix, Route};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Routes,
    Unitarity,
    Homomorphism,
    Schur,
    Character,
    JacobiOrth,
    Legendre,
    KrawtchoukSym,
    All,
}

impl Suite {
    pub const EACH: [Suite; 8] = [
        Suite::Routes,
        Suite::Unitarity,
        Suite::Homomorphism,
        Suite::Schur,
        Suite::Character,
        Suite::JacobiOrth,
        Suite::Legendre,
        Suite::KrawtchoukSym,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Routes => "routes",
            Suite::Unitarity => "unitarity",
            Suite::Homomorphism => "homomorphism",
            Suite::Schur => "schur",
            Suite::Character => "character",
            Suite::JacobiOrth => "jacobi-orth",
            Suite::Legendre => "legendre",
            Suite::KrawtchoukSym => "krawtchouk-sym",
            Suite::All => "all",
        }
    }
}

/// One line of a verification report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub max_deviation: f64,
    pub tolerance: f64,
    pub passed: bool,
}

/// Grid sizes overriding the exactness-budget defaults.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GridOverride {
    pub n_theta: Option<usize>,
    pub n_phi: Option<usize>,
    pub n_psi: Option<usize>,
}

pub struct VerifyConfig {
    pub max_l: HalfInt,
    pub seed: u64,
    pub grid: GridOverride,
}

struct Report {
    checks: Vec<Check>,
}

impl Report {
    fn push(&mut self, suite: Suite, name: String, max_deviation: f64, tolerance: f64) {
        let passed = max_deviation <= tolerance;
        info!("{} {name}: {max_deviation:e} (tol {tolerance:e})", suite.name());
        self.checks.push(Check {
            suite: suite.name(),
            name,
            max_deviation,
            tolerance,
            passed,
        });
    }
}

/// Runs `suite` and returns its checks in a fixed order.
pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let mut report = Report { checks: Vec::new() };
    let suites: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    for s in suites {
        match s {
            Suite::Routes => routes(&mut report, cfg)?,
            Suite::Unitarity => unitarity(&mut report, cfg)?,
            Suite::Homomorphism => homomorphism(&mut report, cfg)?,
            Suite::Schur => schur(&mut report, cfg)?,
            Suite::Character => characters(&mut report, cfg)?,
            Suite::JacobiOrth => jacobi_orth(&mut report, cfg)?,
            Suite::Legendre => legendre_suite(&mut report, cfg)?,
            Suite::KrawtchoukSym => krawtchouk_sym(&mut report, cfg)?,
            Suite::All => unreachable!(),
        }
    }
    Ok(report.checks)
}

fn spins(max_l: HalfInt) -> impl Iterator<Item = HalfInt> {
    (0..=max_l.twice()).map(HalfInt::from_twice)
}

fn grid(cfg: &VerifyConfig, l: HalfInt) -> Result<HaarGrid> {
    let base = build_grid(l)?;
    let g = cfg.grid;
    if g == GridOverride::default() {
        return Ok(base);
    }
    HaarGrid::with_sizes(
        g.n_theta.unwrap_or(base.n_theta()),
        g.n_phi.unwrap_or(base.n_phi()),
        g.n_psi.unwrap_or(base.n_psi()),
    )
}

fn routes(r: &mut Report, cfg: &VerifyConfig) -> Result<()> {
    let mut elements = sample_haar(cfg.seed, 20);
    elements.extend(sample_gl2(cfg.seed.wrapping_add(1), 10, 0.05));
    let angles = sample_haar_angles(cfg.seed.wrapping_add(2), 20);
    for l in spins(cfg.max_l) {
        let mut dev = [0.0f64; 3];
        for g in &elements {
            let oracle = oracle_matrix(l, g)?;
            let scale = oracle.max_norm();
            for (k, route) in [Route::Sum, Route::Hyp, Route::Jacobi].into_iter().enumerate() {
                dev[k] = dev[k].max(matrix_via(route, l, g)?.max_abs_diff(&oracle) / scale);
            }
        }
        r.push(Suite::Routes, format!("sum l_x2={}", l.twice()), dev[0], 1e-10);
        r.push(Suite::Routes, format!("hyp l_x2={}", l.twice()), dev[1], 1e-9);
        r.push(Suite::Routes, format!("jacobi l_x2={}", l.twice()), dev[2], 1e-9);
        let mut dev = [0.0f64; 3];
        for a in &angles {
            let oracle = oracle_matrix(l, &from_euler(a))?;
            dev[0] = dev[0].max(dmatrix_euler(l, a)?.max_abs_diff(&oracle));
            let rot = EulerAngles::rotation(a.theta())?;
            let oracle = oracle_matrix(l, &from_euler(&rot))?;
            for (k, route) in [Route::Rodrigues, Route::Krawtchouk].into_iter().enumerate() {
                dev[k + 1] = dev[k + 1].max(matrix_via_angles(route, l, &rot)?.max_abs_diff(&oracle));
            }
        }
        r.push(Suite::Routes, format!("euler l_x2={}", l.twice()), dev[0], 1e-9);
        r.push(Suite::Routes, format!("rodrigues l_x2={}", l.twice()), dev[1], 1e-9);
        r.push(Suite::Routes, format!("krawtchouk l_x2={}", l.twice()), dev[2], 1e-9);
    }
    Ok(())
}

fn unitarity(r: &mut Report, cfg: &VerifyConfig) -> Result<()> {
    let gs = sample_haar(cfg.seed, 50);
    for l in spins(cfg.max_l) {
        let mut dev = 0.0f64;
        for g in &gs {
            dev = dev.max(oracle_matrix(l, g)?.unitarity_deviation());
        }
        r.push(Suite::Unitarity, format!("l_x2={}", l.twice()), dev, 1e-10);
    }
    Ok(())
}

fn homomorphism(r: &mut Report, cfg: &VerifyConfig) -> Result<()> {
    let gs = sample_haar(cfg.seed, 50);
    let hs = sample_haar(cfg.seed.wrapping_add(1), 50);
    for l in spins(cfg.max_l) {
        let mut dev = 0.0f64;
        for (g, h) in gs.iter().zip(&hs) {
            let rhs = oracle_matrix(l, g)?.product(&oracle_matrix(l, h)?)?;
            let lhs = oracle_matrix(l, &(*g * *h))?;
            dev = dev.max(lhs.max_abs_diff(&rhs) / rhs.max_norm());
        }
        r.push(Suite::Homomorphism, format!("l_x2={}", l.twice()), dev, 1e-9);
    }
    Ok(())
}

fn schur(r: &mut Report, cfg: &VerifyConfig) -> Result<()> {
    let g = grid(cfg, cfg.max_l)?;
    let one = integrate(&g, |_| 1.0.into())?;
    r.push(Suite::Schur, "normalization".into(), (one - 1.0).norm(), 1e-13);
    for l in spins(cfg.max_l) {
        for lp in spins(cfg.max_l).filter(|lp| lp.twice() >= l.twice()) {
            let rep = schur_check(&grid(cfg, lp)?, l, lp)?;
            r.push(
                Suite::Schur,
                format!("l_x2={} l'_x2={}", l.twice(), lp.twice()),
                rep.max_deviation,
                1e-10,
            );
        }
    }
    Ok(())
}

fn characters(r: &mut Report, cfg: &VerifyConfig) -> Result<()> {
    let g = grid(cfg, cfg.max_l)?;
    for l in spins(cfg.max_l) {
        let dev = (character_norm(&g, l)? - 1.0).abs();
        r.push(Suite::Character, format!("l_x2={}", l.twice()), dev, 1e-10);
    }
    Ok(())
}

fn jacobi_orth(r: &mut Report, cfg: &VerifyConfig) -> Result<()> {
    let top = cfg.max_l.twice();
    for l2 in 0..=top {
        let mut dev = 0.0f64;
        for lp2 in (l2 % 2..=top).step_by(2) {
            for m2 in (l2 % 2..=l2.min(lp2)).step_by(2) {
                for n2 in (-m2..=m2).step_by(2) {
                    let (l, lp, m, n) = (
                        HalfInt::from_twice(l2),
                        HalfInt::from_twice(lp2),
                        HalfInt::from_twice(m2),
                        HalfInt::from_twice(n2),
                    );
                    dev = dev.max(jacobi_orthogonality_check(l, lp, m, n)?);
                }
            }
        }
        r.push(Suite::JacobiOrth, format!("substituted l_x2={l2}"), dev, 1e-10);
    }
    let mut dev = 0.0f64;
    for alpha in 0..=4 {
        for beta in 0..=4 {
            for n1 in 0..=8 {
                for n2 in 0..=8 {
                    dev = dev.max(jacobi_weight_orthogonality(alpha, beta, n1, n2)?);
                }
            }
        }
    }
    r.push(Suite::JacobiOrth, "weighted alpha,beta<=4 n<=8".into(), dev, 1e-10);
    Ok(())
}

fn legendre_suite(r: &mut Report, cfg: &VerifyConfig) -> Result<()> {
    let top = cfg.max_l.twice() / 2;
    let unimodular = sample_sl2(cfg.seed, 20);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let triples: Vec<(f64, f64, f64)> = (0..10)
        .map(|_| {
            (
                rng.gen_range(0.0..std::f64::consts::PI),
                rng.gen_range(0.0..std::f64::consts::PI),
                rng.gen_range(0.0..std::f64::consts::TAU),
            )
        })
        .collect();
    for l in 0..=top as u32 {
        let lh = HalfInt::from_int(l as i64);
        let mut dev = 0.0f64;
        for g in &unimodular {
            let t = oracle_matrix(lh, g)?.get(HalfInt::ZERO, HalfInt::ZERO)?;
            let arg = 2.0 * g.a * g.d - 1.0;
            let p = legendre_complex(l, arg);
            dev = dev.max((t - p).norm() / p.norm().max(1.0));
        }
        r.push(Suite::Legendre, format!("t00 l={l}"), dev, 1e-9);
        let (mut add, mut prod) = (0.0f64, 0.0f64);
        for &(t1, t2, phi) in &triples {
            add = add.max(addition_formula_check(l, t1, t2, phi)?);
            prod = prod.max(legendre_product_check(l, t1, t2, 2 * l as usize + 1)?);
        }
        r.push(Suite::Legendre, format!("addition l={l}"), add, 1e-9);
        r.push(Suite::Legendre, format!("product l={l}"), prod, 1e-9);
    }
    Ok(())
}

/// `P_l` at a complex argument by the three-term recurrence.
fn legendre_complex(l: u32, x: Complex64) -> Complex64 {
    let (mut p0, mut p1) = (Complex64::new(1.0, 0.0), x);
    if l == 0 {
        return p0;
    }
    for k in 2..=l {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    p1
}

fn krawtchouk_sym(r: &mut Report, cfg: &VerifyConfig) -> Result<()> {
    let mut dev = 0.0f64;
    for big_n in 0..=8u64 {
        for n in 0..=big_n {
            for x in 0..=big_n {
                for p in [0.3, 0.5, 0.9] {
                    let lhs = krawtchouk(n, x as f64, p, big_n)?;
                    let rhs = (1.0 - 1.0 / p).powi((x + n) as i32 - big_n as i32)
                        * krawtchouk(big_n - n, (big_n - x) as f64, p, big_n)?;
                    dev = dev.max((lhs - rhs).abs() / lhs.abs().max(1.0));
                }
            }
        }
    }
    r.push(Suite::KrawtchoukSym, "reflection N<=8".into(), dev, 1e-9);
    for l in spins(cfg.max_l) {
        let mut dev = 0.0f64;
        for theta in [std::f64::consts::FRAC_PI_6, std::f64::consts::FRAC_PI_3] {
            let t = matrix_via_angles(Route::Krawtchouk, l, &EulerAngles::rotation(theta)?)?;
            let d = t.dim();
            for i in 0..d {
                for j in 0..d {
                    let dot: f64 = (0..d).map(|k| t.at(i, k).re * t.at(j, k).re).sum();
                    dev = dev.max((dot - if i == j { 1.0 } else { 0.0 }).abs());
                }
            }
        }
        r.push(Suite::KrawtchoukSym, format!("row orthogonality l_x2={}", l.twice()), dev, 1e-10);
    }
    Ok(())
}

pub(crate) fn check_max_l(max_l_x2: i64) -> std::result::Result<HalfInt, String> {
    if !(0..=12).contains(&max_l_x2) {
        return Err(format!("--max-l-x2 must lie in 0..=12, got {max_l_x2}"));
    }
    Ok(HalfInt::from_twice(max_l_x2))
}
