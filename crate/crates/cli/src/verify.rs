//! Built-in verification suites. Each suite runs a fixed parameter box
//! (seeded where it draws random points) and reports a per-case tally.

use crate::CliError;
use clap::ValueEnum;
use gtdim_core::boundary::{omega_of, phi_eval_exact, phi_fn_of_nu, r_kernel, shift_s};
use gtdim_core::exact::{pochhammer, rat, rational_det, ratio, RMatrix, Rat};
use gtdim_core::gt::{signatures_in_box, Signature};
use gtdim_core::reldim::{genfun_check, reldim_basis, reldim_dp};
use gtdim_core::schur::{cauchy_sum, hstar, hstar_multi};
use gtdim_core::{boundary, Error};
use num::complex::Complex64;
use num::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Cauchy,
    Genfun,
    Bridge,
    Shift,
    JacobiTrudi,
    Krattenthaler,
    Logconcave,
    Kernels,
}

pub fn run_suite(suite: Suite, seed: u64) -> Result<(), CliError> {
    let (name, result) = match suite {
        Suite::Cauchy => ("cauchy", suite_cauchy(seed)),
        Suite::Genfun => ("genfun", suite_genfun(seed)),
        Suite::Bridge => ("bridge", suite_bridge(seed)),
        Suite::Shift => ("shift", suite_shift(seed)),
        Suite::JacobiTrudi => ("jacobi-trudi", suite_jacobi_trudi()),
        Suite::Krattenthaler => ("krattenthaler", suite_krattenthaler(seed)),
        Suite::Logconcave => ("logconcave", suite_logconcave()),
        Suite::Kernels => ("kernels", suite_kernels()),
    };
    match result {
        Ok(total) => {
            println!("{name}: PASS {total}/{total}");
            Ok(())
        }
        Err(msg) => Err(CliError::Verify(format!("{name}: {msg}"))),
    }
}

type SuiteResult = Result<usize, String>;

/// Half-integers never collide with the integer-offset poles of the
/// Gamma-ratio entries.
fn half_int(rng: &mut ChaCha8Rng, span: i64) -> Rat {
    ratio(2 * rng.gen_range(-span..=span) + 1, 2)
}

fn distinct_half_ints(rng: &mut ChaCha8Rng, k: usize, span: i64) -> Vec<Rat> {
    let mut out: Vec<Rat> = Vec::with_capacity(k);
    while out.len() < k {
        let c = half_int(rng, span);
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

fn rand_rat(rng: &mut ChaCha8Rng, span: i64) -> Rat {
    ratio(rng.gen_range(-span..=span), rng.gen_range(1..=5))
}

fn suite_cauchy(seed: u64) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut total = 0;
    for n in 1..=4usize {
        for nu in signatures_in_box(n, 0, 3) {
            for k in 1..=2usize {
                let t = distinct_half_ints(&mut rng, k, 12);
                let lhs = cauchy_sum(&nu, &t).map_err(|e| e.to_string())?;
                let rhs = hstar_multi(&nu, &t).map_err(|e| e.to_string())?;
                if lhs != rhs {
                    return Err(format!("nu={nu}, K={k}: sum {lhs} != H* {rhs}"));
                }
                total += 1;
            }
        }
    }
    Ok(total)
}

fn suite_genfun(seed: u64) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut total = 0;
    for n in 2..=4usize {
        for nu in signatures_in_box(n, -1, 1) {
            for k in 1..=2usize.min(n - 1) {
                let t = distinct_half_ints(&mut rng, k, 12);
                let (lhs, rhs) = genfun_check(&nu, k, &t).map_err(|e| e.to_string())?;
                if lhs != rhs {
                    return Err(format!("nu={nu}, K={k}: {lhs} != {rhs}"));
                }
                total += 1;
            }
        }
    }
    Ok(total)
}

fn suite_bridge(seed: u64) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut total = 0;
    for _ in 0..100 {
        let n = rng.gen_range(1..=5usize);
        let mut parts: Vec<i64> = (0..n).map(|_| rng.gen_range(-4..=4)).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let nu = Signature::new(parts).expect("sorted");
        let f = phi_fn_of_nu(&nu).map_err(|e| e.to_string())?;
        let mut done = 0;
        while done < 10 {
            let u = rand_rat(&mut rng, 30);
            if u.is_zero() || u == rat(1) {
                continue;
            }
            let t = ratio(-1, 2) + rat(n as i64) / (&u - rat(1));
            match (f.eval(&u), hstar(&nu, &t)) {
                (Ok(a), Ok(b)) => {
                    if a != b {
                        return Err(format!("nu={nu}, u={u}: {a} != {b}"));
                    }
                    done += 1;
                    total += 1;
                }
                _ => continue, // pole; redraw
            }
        }
    }
    Ok(total)
}

fn suite_shift(seed: u64) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut total = 0;
    for _ in 0..30 {
        let n = rng.gen_range(1..=4usize);
        let mut parts: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let omega = omega_of(&Signature::new(parts).expect("sorted")).map_err(|e| e.to_string())?;
        let shifted = shift_s(&omega).map_err(|e| e.to_string())?;
        let mut done = 0;
        while done < 10 {
            let u = rand_rat(&mut rng, 30);
            if u.is_zero() {
                continue;
            }
            match (phi_eval_exact(&shifted, &u), phi_eval_exact(&omega, &u)) {
                (Ok(a), Ok(b)) => {
                    if a != &u * b {
                        return Err(format!("u={u}: Phi(S omega) != u Phi(omega)"));
                    }
                    done += 1;
                    total += 1;
                }
                _ => continue,
            }
        }
    }
    Ok(total)
}

fn suite_jacobi_trudi() -> SuiteResult {
    let mut total = 0;
    for n in 2..=4usize {
        for nu in signatures_in_box(n, -1, 1) {
            for k in 1..n.min(3) {
                for kappa in signatures_in_box(k, -2, 2) {
                    let basis = reldim_basis(&kappa, &nu).map_err(|e| e.to_string())?;
                    let dp = reldim_dp(&kappa, &nu).map_err(|e| e.to_string())?;
                    if basis != dp {
                        return Err(format!("kappa={kappa}, nu={nu}: {basis} != {dp}"));
                    }
                    total += 1;
                }
            }
        }
    }
    Ok(total)
}

fn suite_krattenthaler(seed: u64) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut total = 0;
    // general identity with free parameters
    for n in 2..=4usize {
        for _ in 0..10 {
            let xs = distinct_half_ints(&mut rng, n, 15);
            let aa: Vec<Rat> = (0..=n).map(|_| rand_rat(&mut rng, 9)).collect(); // aa[2..=n] used
            let bb: Vec<Rat> = (0..=n).map(|_| rand_rat(&mut rng, 9)).collect(); // bb[2..=n] used
            let m = RMatrix::from_fn(n, n, |i0, j0| {
                let j = j0 + 1;
                let mut v = Rat::one();
                for a in &aa[j + 1..=n] {
                    v *= &xs[i0] + a;
                }
                for b in &bb[2..=j] {
                    v *= &xs[i0] + b;
                }
                v
            });
            let lhs = rational_det(&m).map_err(|e| e.to_string())?;
            let mut rhs = Rat::one();
            for i in 0..n {
                for j in i + 1..n {
                    rhs *= &xs[i] - &xs[j];
                }
            }
            for (i, b) in bb.iter().enumerate().take(n + 1).skip(2) {
                for a in &aa[i..=n] {
                    rhs *= b - a;
                }
            }
            if lhs != rhs {
                return Err(format!("general identity fails at n={n}"));
            }
            total += 1;
        }
    }
    // the specialization used by the Schur-like family
    for k in 1..=3usize {
        for n in (k as i64 + 1)..=6 {
            let t = distinct_half_ints(&mut rng, k, 15);
            let nk = n - k as i64;
            let m = RMatrix::from_fn(k, k, |i0, j0| {
                let j = j0 as i64 + 1;
                let mut v = Rat::one();
                for c in 1..j {
                    v *= &t[i0] + rat(c);
                }
                for c in (nk + j + 1)..=n {
                    v *= &t[i0] + rat(c);
                }
                v
            });
            let lhs = rational_det(&m).map_err(|e| e.to_string())?;
            let mut rhs = if (k * (k - 1) / 2) % 2 == 0 {
                Rat::one()
            } else {
                -Rat::one()
            };
            for i in 0..k {
                for j in i + 1..k {
                    rhs *= &t[i] - &t[j];
                }
            }
            for i in 1..=k {
                rhs *= pochhammer(&rat(nk + 1), i as u32 - 1);
            }
            if lhs != rhs {
                return Err(format!("specialization fails at K={k}, N={n}"));
            }
            total += 1;
        }
    }
    Ok(total)
}

fn suite_logconcave() -> SuiteResult {
    let mut total = 0;
    for n in 2..=5usize {
        for nu in signatures_in_box(n, -3, 3) {
            if !boundary::logconcave_check(&nu).map_err(|e| e.to_string())? {
                return Err(format!("log-concavity fails at nu={nu}"));
            }
            total += 1;
        }
    }
    Ok(total)
}

fn suite_kernels() -> SuiteResult {
    let mut total = 0;
    let grid: Vec<Complex64> = (0..128)
        .map(|m| Complex64::from_polar(1.0, std::f64::consts::TAU * (m as f64 + 0.5) / 128.0))
        .collect();
    for big_k in 1..=2i64 {
        for j in 1..=big_k {
            for k in -2..=2i64 {
                let err = |n: i64| -> Result<f64, Error> {
                    let mut worst = 0.0f64;
                    for &u in &grid {
                        let v = r_kernel(k, j, big_k, n, u)?;
                        worst = worst.max((v - u.powi(-k as i32)).norm());
                    }
                    Ok(worst)
                };
                for n in [20i64, 40, 80] {
                    let e1 = err(n).map_err(|e| e.to_string())?;
                    let e2 = err(2 * n).map_err(|e| e.to_string())?;
                    if e1 < 1.6 * e2 {
                        return Err(format!(
                            "kernel error ratio {:.3} < 1.6 at k={k}, j={j}, K={big_k}, N={n}",
                            e1 / e2
                        ));
                    }
                    total += 1;
                }
            }
        }
    }
    Ok(total)
}
