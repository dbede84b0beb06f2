//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

use std::f64::consts::{FRAC_PI_3, FRAC_PI_6, PI, TAU};
use std::process::Command;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use wigner_kit::exactcomb::HalfInt;
use wigner_kit::group::{from_euler, sample_gl2, sample_haar, sample_haar_angles, sample_sl2, EulerAngles, Mat2C};
use wigner_kit::haar::{
    addition_formula_check, build_grid, character_norm, integrate, jacobi_orthogonality_check,
    jacobi_weight_orthogonality, legendre_product_check, monte_carlo, schur_check,
};
use wigner_kit::specfun::{hyp2f1_terminating, jacobi_eval, krawtchouk, Hyp21Spec, JacobiParams};
use wigner_kit::wigner::{
    apply_symmetry, oracle_matrix, rotation, tmn_hyp, tmn_jacobi, tmn_krawtchouk, tmn_rodrigues,
    tmn_sum, Symmetry,
};

fn h(twice: i64) -> HalfInt {
    HalfInt::from_twice(twice)
}

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(checks: &[(&str, f64, f64)], elapsed: Duration, budget: Option<Duration>) -> Outcome {
    let mut passed = true;
    let mut parts = Vec::new();
    for &(name, dev, tol) in checks {
        let ok = dev <= tol;
        passed &= ok;
        parts.push(format!("{name}={dev:.2e}{}{tol:.0e}", if ok { "<=" } else { ">" }));
    }
    if let Some(b) = budget {
        let ok = elapsed <= b;
        passed &= ok;
        parts.push(format!("time={:.2}s{}{}s", elapsed.as_secs_f64(), if ok { "<=" } else { ">" }, b.as_secs()));
    }
    Outcome { passed, detail: parts.join(" ") }
}

fn spins() -> impl Iterator<Item = HalfInt> {
    (0..=6).map(h)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut elements = sample_haar(1001, 20);
    elements.extend(sample_gl2(1002, 10, 0.05));
    let (mut sum, mut hyp, mut jac) = (0.0f64, 0.0f64, 0.0f64);
    for g in &elements {
        for l in spins() {
            let oracle = oracle_matrix(l, g).unwrap();
            let scale = oracle.max_norm();
            for m in l.projections() {
                for n in l.projections() {
                    let want = oracle.get(m, n).unwrap();
                    sum = sum.max((tmn_sum(l, m, n, g).unwrap() - want).norm() / scale);
                    if (m + n).twice() >= 0 {
                        hyp = hyp.max((tmn_hyp(l, m, n, g).unwrap() - want).norm() / scale);
                        if (m - n).twice() >= 0 {
                            jac = jac.max((tmn_jacobi(l, m, n, g).unwrap() - want).norm() / scale);
                        }
                    }
                }
            }
        }
    }
    let (mut rod, mut kraw) = (0.0f64, 0.0f64);
    for a in sample_haar_angles(1003, 20) {
        let theta = a.theta();
        let k = rotation(theta);
        for l in spins() {
            let oracle = oracle_matrix(l, &k).unwrap();
            let scale = oracle.max_norm();
            for m in l.projections() {
                for n in l.projections() {
                    let want = oracle.get(m, n).unwrap();
                    rod = rod.max((Complex64::from(tmn_rodrigues(l, m, n, theta).unwrap()) - want).norm() / scale);
                    kraw = kraw.max((Complex64::from(tmn_krawtchouk(l, m, n, theta).unwrap()) - want).norm() / scale);
                }
            }
        }
    }
    outcome(
        &[("sum", sum, 1e-10), ("hyp", hyp, 1e-9), ("jacobi", jac, 1e-9), ("rodrigues", rod, 1e-9), ("krawtchouk", kraw, 1e-9)],
        start.elapsed(),
        Some(Duration::from_secs(30)),
    )
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let gs = sample_haar(2001, 50);
    let hs = sample_haar(2002, 50);
    let (mut hom, mut uni) = (0.0f64, 0.0f64);
    for l in spins() {
        for (g, k) in gs.iter().zip(&hs) {
            let tg = oracle_matrix(l, g).unwrap();
            let rhs = tg.product(&oracle_matrix(l, k).unwrap()).unwrap();
            let lhs = oracle_matrix(l, &(*g * *k)).unwrap();
            hom = hom.max(lhs.max_abs_diff(&rhs));
            uni = uni.max(tg.unitarity_deviation());
        }
    }
    outcome(&[("homomorphism", hom, 1e-9), ("unitarity", uni, 1e-10)], start.elapsed(), Some(Duration::from_secs(10)))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let grid = build_grid(h(3)).unwrap();
    let norm = (integrate(&grid, |_| Complex64::new(1.0, 0.0)).unwrap() - 1.0).norm();
    let mut schur = 0.0f64;
    for a in 0..=3 {
        for b in 0..=3 {
            schur = schur.max(schur_check(&grid, h(a), h(b)).unwrap().max_deviation);
        }
    }
    outcome(&[("schur", schur, 1e-10), ("normalization", norm, 1e-13)], start.elapsed(), Some(Duration::from_secs(60)))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let grid = build_grid(h(6)).unwrap();
    let dev = spins().map(|l| (character_norm(&grid, l).unwrap() - 1.0).abs()).fold(0.0, f64::max);
    outcome(&[("character", dev, 1e-10)], start.elapsed(), None)
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let mut sub = 0.0f64;
    for m2 in 0..=6i64 {
        for n2 in (-m2..=m2).step_by(2) {
            for l2 in (m2..=6).step_by(2) {
                for lp2 in (m2..=6).step_by(2) {
                    sub = sub.max(jacobi_orthogonality_check(h(l2), h(lp2), h(m2), h(n2)).unwrap());
                }
            }
        }
    }
    let mut weighted = 0.0f64;
    for a in 0..=4 {
        for b in 0..=4 {
            for n1 in 0..=8 {
                for n2 in 0..=8 {
                    weighted = weighted.max(jacobi_weight_orthogonality(a, b, n1, n2).unwrap());
                }
            }
        }
    }
    outcome(&[("substituted", sub, 1e-10), ("weighted", weighted, 1e-10)], start.elapsed(), None)
}

fn f21(a: f64, b: f64, c: f64, z: f64) -> f64 {
    hyp2f1_terminating(&Hyp21Spec::new(a, b, c, z).unwrap())
}

fn poch(a: f64, k: u32) -> f64 {
    (0..k).map(|j| a + j as f64).product()
}

fn criterion_6() -> Outcome {
    let start = Instant::now();

    let mut sym = 0.0f64;
    let mut elements = sample_haar(6001, 10);
    elements.extend(sample_gl2(6002, 10, 0.05));
    for g in &elements {
        for l in spins() {
            let t = oracle_matrix(l, g).unwrap();
            let scale = t.max_norm();
            for which in [Symmetry::TransposeBc, Symmetry::FlipSigns, Symmetry::AntiTranspose] {
                for m in l.projections() {
                    for n in l.projections() {
                        let (m2, n2, g2) = apply_symmetry(which, m, n, g);
                        let other = oracle_matrix(l, &g2).unwrap().get(m2, n2).unwrap();
                        sym = sym.max((t.get(m, n).unwrap() - other).norm() / scale);
                    }
                }
            }
        }
    }

    let mut refl = 0.0f64;
    for a in 0..=6 {
        for b in 0..=6 {
            for n in 0..=10u32 {
                let p = JacobiParams::new(a as f64, b as f64, n).unwrap();
                let q = JacobiParams::new(b as f64, a as f64, n).unwrap();
                for i in 0..=20 {
                    let x = -1.0 + i as f64 / 10.0;
                    let lhs = jacobi_eval(&p, -x);
                    let rhs = if n % 2 == 0 { 1.0 } else { -1.0 } * jacobi_eval(&q, x);
                    refl = refl.max((lhs - rhs).abs() / lhs.abs().max(1.0));
                }
            }
        }
    }

    let mut hyp_ids = 0.0f64;
    for n in 0..=6u32 {
        for c in [1.5, 4.0] {
            for x in [0.2, 0.8] {
                let nf = n as f64;
                for b in [0.5, 2.0] {
                    let lhs = f21(-nf, b, c, x);
                    let rhs = poch(c - b, n) / poch(c, n) * f21(-nf, b, b - c - nf + 1.0, 1.0 - x);
                    hyp_ids = hyp_ids.max((lhs - rhs).abs() / lhs.abs().max(1.0));
                }
                for m in 0..=6u32 {
                    let mf = m as f64;
                    let lhs = f21(-nf, -mf, c, x);
                    let rhs = poch(c, m + n) / (poch(c, n) * poch(c, m))
                        * f21(-nf, -mf, -c - nf - mf + 1.0, 1.0 - x);
                    hyp_ids = hyp_ids.max((lhs - rhs).abs() / lhs.abs().max(1.0));
                }
            }
        }
    }

    let mut kref = 0.0f64;
    for big_n in 0..=8u64 {
        for n in 0..=big_n {
            for x in 0..=big_n {
                for p in [0.3, 0.5, 0.9] {
                    let lhs = krawtchouk(n, x as f64, p, big_n).unwrap();
                    let rhs = (1.0 - 1.0 / p).powi((x + n) as i32 - big_n as i32)
                        * krawtchouk(big_n - n, (big_n - x) as f64, p, big_n).unwrap();
                    kref = kref.max((lhs - rhs).abs() / lhs.abs().max(1.0));
                }
            }
        }
    }

    let mut pfaff = 0.0f64;
    for n in 0..=8u32 {
        let nf = n as f64;
        for z in [-0.7, -0.2, 0.3] {
            for c in [1.5, 3.0] {
                for b in [0.5, 2.0] {
                    let lhs = f21(-nf, b, c, z);
                    let rhs = (1.0 - z).powi(n as i32) * f21(-nf, c - b, c, z / (z - 1.0));
                    pfaff = pfaff.max((lhs - rhs).abs());
                }
            }
        }
    }

    let mut rows = 0.0f64;
    for theta in [FRAC_PI_6, FRAC_PI_3] {
        let k = from_euler(&EulerAngles::rotation(theta).unwrap());
        for l in spins() {
            let t = oracle_matrix(l, &k).unwrap();
            let d = t.dim();
            for i in 0..d {
                for j in 0..d {
                    let dot: Complex64 = (0..d).map(|c| t.at(i, c) * t.at(j, c)).sum();
                    rows = rows.max((dot - if i == j { 1.0 } else { 0.0 }).norm());
                }
            }
        }
    }

    outcome(
        &[
            ("symmetries", sym, 1e-12),
            ("reflection", refl, 1e-10),
            ("hyp-identities", hyp_ids, 1e-10),
            ("krawtchouk-reflection", kref, 1e-9),
            ("pfaff", pfaff, 1e-10),
            ("row-orthogonality", rows, 1e-10),
        ],
        start.elapsed(),
        Some(Duration::from_secs(10)),
    )
}

/// `P_l` by the three-term recurrence, at a complex argument.
fn legendre_c(l: u32, x: Complex64) -> Complex64 {
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

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let mut t00 = 0.0f64;
    for g in sample_sl2(7001, 20) {
        assert!((g.det() - 1.0).norm() < 1e-12);
        for l in 0..=6u32 {
            let t = oracle_matrix(HalfInt::from_int(l as i64), &g).unwrap().get(h(0), h(0)).unwrap();
            let p = legendre_c(l, 2.0 * g.a * g.d - 1.0);
            t00 = t00.max((t - p).norm() / p.norm().max(1.0));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7002);
    let (mut add, mut prod) = (0.0f64, 0.0f64);
    for _ in 0..10 {
        let (t1, t2, phi) = (rng.gen_range(0.0..PI), rng.gen_range(0.0..PI), rng.gen_range(0.0..TAU));
        for l in 0..=6u32 {
            add = add.max(addition_formula_check(l, t1, t2, phi).unwrap());
            prod = prod.max(legendre_product_check(l, t1, t2, 2 * l as usize + 1).unwrap());
        }
    }
    outcome(
        &[("t00", t00, 1e-9), ("addition", add, 1e-9), ("product", prod, 1e-9)],
        start.elapsed(),
        Some(Duration::from_secs(10)),
    )
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let est = monte_carlo(8001, 100_000, |g: &Mat2C| Ok(oracle_matrix(h(2), g)?.get(h(2), h(0))?.norm_sqr())).unwrap();
    let z = (est.mean - 1.0 / 3.0).abs() / est.std_error;
    let mut o = outcome(&[("sigmas", z, 4.0)], start.elapsed(), None);
    o.detail = format!("mean={:.5} stderr={:.2e} {}", est.mean, est.std_error, o.detail);
    o
}

fn criterion_9() -> Outcome {
    let start = Instant::now();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_wigner-kit"))
            .args(["verify", "--suite", "all", "--max-l-x2", "2", "--seed", "1234"])
            .output()
            .expect("run wigner-kit")
    };
    let (a, b) = (run(), run());
    let same = a.stdout == b.stdout && !a.stdout.is_empty();
    let ok = a.status.success() && b.status.success();
    let passed = same && ok;
    Outcome {
        passed,
        detail: format!(
            "bytes={} identical={same} exit={:?} time={:.2}s",
            a.stdout.len(),
            a.status.code(),
            start.elapsed().as_secs_f64()
        ),
    }
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        ("route cross-equality", criterion_1),
        ("representation axioms", criterion_2),
        ("Schur orthogonality", criterion_3),
        ("character norm", criterion_4),
        ("Jacobi orthogonality", criterion_5),
        ("identity suite", criterion_6),
        ("Legendre exercise suite", criterion_7),
        ("Monte Carlo Haar consistency", criterion_8),
        ("determinism", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        if !o.passed {
            failed += 1;
        }
        println!("criterion {} [{}] {name}: {}", i + 1, if o.passed { "PASS" } else { "FAIL" }, o.detail);
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
