//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (run with `cargo test --test acceptance -- --nocapture` to see them all).
//!
//! Criterion 7 documents a known mathematical limitation of the contour
//! representation at very small N and fails honestly; see its test comment.

use gtdim_core::boundary::{
    approx_sweep, contour_reldim, logconcave_check, omega_of, phi_n_exact, phi_n_numeric,
    r_kernel, sweep_maxima, Sampler,
};
use gtdim_core::exact::{rat, to_f64, Rat};
use gtdim_core::gt::{
    dim_weyl, level_counts, lower_neighbors, signatures_in_box, Signature,
};
use gtdim_core::num::complex::Complex64;
use gtdim_core::num::{One, Zero};
use gtdim_core::reldim::{genfun_check, markov_row, reldim_basis, reldim_dp, reldim_residue};
use gtdim_core::schur::{cauchy_sum, hstar, hstar_multi, skew_count, Partition};
use gtdim_core::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::BTreeMap;

fn sig(parts: &[i64]) -> Signature {
    Signature::new(parts.to_vec()).unwrap()
}

fn ratio(p: i64, q: i64) -> Rat {
    gtdim_core::exact::ratio(p, q)
}

fn distinct_half_ints(rng: &mut ChaCha8Rng, k: usize, span: i64) -> Vec<Rat> {
    let mut out: Vec<Rat> = Vec::with_capacity(k);
    while out.len() < k {
        let c = ratio(2 * rng.gen_range(-span..=span) + 1, 2);
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

fn random_signature(rng: &mut ChaCha8Rng, len: usize, bound: i64) -> Signature {
    let mut parts: Vec<i64> = (0..len).map(|_| rng.gen_range(-bound..=bound)).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Signature::new(parts).expect("sorted")
}

#[test]
fn criterion_01_triple_route_exactness() {
    let cells: usize = (2..=5usize)
        .map(|n| {
            signatures_in_box(n, -2, 2)
                .par_iter()
                .map(|nu| {
                    let dim = Rat::from_integer(dim_weyl(nu).unwrap());
                    let mut cells = 0usize;
                    for k in 1..=3usize.min(n - 1) {
                        let counts = level_counts(nu, k).unwrap();
                        for kappa in signatures_in_box(k, -3, 3) {
                            let dp = Rat::from_integer(
                                counts.get(&kappa).cloned().unwrap_or_else(Zero::zero),
                            ) / &dim;
                            let skew =
                                Rat::from_integer(skew_count(&kappa, nu).unwrap()) / &dim;
                            let basis = reldim_basis(&kappa, nu).unwrap();
                            let residue = reldim_residue(&kappa, nu).unwrap();
                            assert!(
                                dp == skew && dp == basis && dp == residue,
                                "route mismatch at kappa={kappa}, nu={nu}: \
                                 dp={dp}, skew={skew}, basis={basis}, residue={residue}"
                            );
                            cells += 1;
                        }
                    }
                    cells
                })
                .sum::<usize>()
        })
        .sum();
    println!("criterion 1 (triple-route exactness): PASS — {cells} (kappa,nu) cells x 4 routes, zero tolerance");
}

#[test]
fn criterion_02_generating_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut cases = 0usize;
    for n in 2..=5usize {
        for nu in signatures_in_box(n, -2, 2) {
            for k in 1..=2usize.min(n - 1) {
                for _ in 0..5 {
                    let t = distinct_half_ints(&mut rng, k, 10);
                    let (lhs, rhs) = genfun_check(&nu, k, &t).unwrap();
                    assert_eq!(lhs, rhs, "generating identity fails at nu={nu}, K={k}");
                    cases += 1;
                }
            }
        }
    }
    println!("criterion 2 (generating identity): PASS — {cases} exact evaluations");
}

#[test]
fn criterion_03_cauchy_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut cases = 0usize;
    for n in 1..=4usize {
        for nu in signatures_in_box(n, 0, 3) {
            for k in 1..=2usize {
                for _ in 0..2 {
                    let t = distinct_half_ints(&mut rng, k, 10);
                    let lhs = cauchy_sum(&nu, &t).unwrap();
                    let rhs = hstar_multi(&nu, &t).unwrap();
                    assert_eq!(lhs, rhs, "Cauchy sum fails at nu={nu}, K={k}");
                    cases += 1;
                }
            }
        }
    }
    println!("criterion 3 (Cauchy-type identity): PASS — {cases} exact evaluations");
}

#[test]
fn criterion_04_bridge_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut cases = 0usize;
    for _ in 0..100 {
        let n = rng.gen_range(1..=6usize);
        let nu = random_signature(&mut rng, n, 4);
        let f = gtdim_core::boundary::phi_fn_of_nu(&nu).unwrap();
        let mut done = 0;
        while done < 10 {
            let u = ratio(rng.gen_range(-40..=40), rng.gen_range(1..=7));
            if u.is_zero() || u == rat(1) {
                continue;
            }
            let t = ratio(-1, 2) + rat(n as i64) / (&u - rat(1));
            match (f.eval(&u), hstar(&nu, &t)) {
                (Ok(a), Ok(b)) => {
                    assert_eq!(a, b, "bridge fails at nu={nu}, u={u}");
                    done += 1;
                    cases += 1;
                }
                _ => continue,
            }
        }
    }
    println!("criterion 4 (bridge identity): PASS — {cases} exact evaluations");
}

#[test]
fn criterion_05_uniform_approximation_decay() {
    let mut lines = Vec::new();
    for kappa in [sig(&[0]), sig(&[1, 0])] {
        let samplers: [(&str, Sampler); 2] = [
            (
                "profile",
                Sampler::Profile {
                    profile: vec![ratio(1, 2)],
                },
            ),
            ("box", Sampler::Exhaustive { bound: 1 }),
        ];
        for (name, sampler) in samplers {
            let rows = approx_sweep(&kappa, &[10, 40], &sampler).unwrap();
            let maxima = sweep_maxima(&rows);
            let (m10, m40) = (&maxima[0].1, &maxima[1].1);
            assert!(
                m40 * rat(2) < *m10,
                "decay fails for kappa={kappa}, family={name}: max(10)={m10}, max(40)={m40}"
            );
            lines.push(format!(
                "kappa={kappa} {name}: max(N=10)={m10} -> max(N=40)={m40}"
            ));
        }
    }
    println!(
        "criterion 5 (uniform approximation decay): PASS — {}",
        lines.join("; ")
    );
}

#[test]
fn criterion_06_kernel_convergence() {
    let grid: Vec<Complex64> = (0..128)
        .map(|m| Complex64::from_polar(1.0, std::f64::consts::TAU * (m as f64 + 0.5) / 128.0))
        .collect();
    let mut cases = 0usize;
    for big_k in 1..=2i64 {
        for j in 1..=big_k {
            for k in -2..=2i64 {
                let grid_err = |n: i64| -> f64 {
                    grid.iter()
                        .map(|&u| (r_kernel(k, j, big_k, n, u).unwrap() - u.powi(-k as i32)).norm())
                        .fold(0.0, f64::max)
                };
                for n in [20i64, 40, 80] {
                    let ratio = grid_err(n) / grid_err(2 * n);
                    assert!(
                        ratio >= 1.6,
                        "kernel error ratio {ratio:.3} < 1.6 at k={k}, j={j}, K={big_k}, N={n}"
                    );
                    cases += 1;
                }
            }
        }
    }
    println!("criterion 6 (kernel convergence): PASS — {cases} doubling ratios >= 1.6");
}

/// KNOWN RED. The torus quadrature uses the kernels exactly as defined, and
/// those kernels represent the relative dimension only for N large relative
/// to kappa and K: their weight functions are the unique rational
/// interpolants of the residue weights, and at small N some of their poles
/// cross the contour's separating line, adding stray residues (for N odd a
/// pole can even sit on the torus itself). No node count or grid layout can
/// repair that, so part of this box provably cannot meet the tolerance. The
/// test reports the full census rather than hiding the criterion.
#[test]
fn criterion_07_contour_representation() {
    let mut total = 0usize;
    let mut failures: Vec<(Signature, Signature, f64, f64)> = Vec::new();
    for (k, n) in [(1usize, 2usize), (1, 3), (2, 3)] {
        for nu in signatures_in_box(n, -1, 1) {
            for kappa in signatures_in_box(k, -1, 1) {
                let exact = to_f64(&reldim_dp(&kappa, &nu).unwrap());
                let got = contour_reldim(&nu, &kappa, 512).unwrap();
                total += 1;
                if (got - exact).abs() > 1e-6 {
                    failures.push((kappa, nu.clone(), exact, got));
                }
            }
        }
    }
    if failures.is_empty() {
        println!("criterion 7 (contour representation): PASS — {total} cells within 1e-6");
    } else {
        let worst = failures
            .iter()
            .map(|(_, _, e, g)| (g - e).abs())
            .fold(0.0, f64::max);
        let sample: Vec<String> = failures
            .iter()
            .take(4)
            .map(|(k, n, e, g)| format!("kappa={k} nu={n}: exact {e:.6}, quadrature {g:.6}"))
            .collect();
        println!(
            "criterion 7 (contour representation): FAIL — {}/{} cells deviate (worst {:.3}); \
             the kernel representation is asymptotic in N and provably cannot be exact on \
             this box; e.g. {}",
            failures.len(),
            total,
            worst,
            sample.join("; ")
        );
        panic!(
            "criterion 7: {}/{} cells exceed 1e-6 (see printed census); \
             the contour kernels are only asymptotically exact and this box \
             includes N too small for them",
            failures.len(),
            total
        );
    }
}

#[test]
fn criterion_08_log_concavity() {
    let mut cases = 0usize;
    for n in 2..=5usize {
        for nu in signatures_in_box(n, -3, 3) {
            assert!(
                logconcave_check(&nu).unwrap(),
                "log-concavity or support fails at nu={nu}"
            );
            cases += 1;
        }
    }
    println!("criterion 8 (log-concavity, gap-free support): PASS — {cases} signatures");
}

#[test]
fn criterion_09_exact_vs_numeric_laurent() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let n = rng.gen_range(1..=5usize);
        let nu = random_signature(&mut rng, n, 3);
        let omega = omega_of(&nu).unwrap();
        let window = phi_n_exact(&nu, -3, 3).unwrap();
        for idx in -3..=3 {
            let numeric = phi_n_numeric(&omega, idx, 1e-11).unwrap();
            let gap = (numeric - to_f64(window.get(idx))).abs();
            worst = worst.max(gap);
            assert!(
                gap <= 1e-10,
                "quadrature off by {gap:.3e} at nu={nu}, n={idx}"
            );
        }
    }
    println!(
        "criterion 9 (exact vs numeric Laurent): PASS — 50 points x 7 indices, worst gap {worst:.2e}"
    );
}

#[test]
fn criterion_10_stochasticity_and_chain_rule() {
    fn chain_product_row(nu: &Signature, k: usize) -> BTreeMap<Signature, Rat> {
        let mut cur: BTreeMap<Signature, Rat> = BTreeMap::new();
        cur.insert(nu.clone(), Rat::one());
        for _ in (k..nu.len()).rev() {
            let mut next: BTreeMap<Signature, Rat> = BTreeMap::new();
            for (mu, w) in &cur {
                let dim_mu = Rat::from_integer(dim_weyl(mu).unwrap());
                for lam in lower_neighbors(mu) {
                    let step = Rat::from_integer(dim_weyl(&lam).unwrap()) / &dim_mu;
                    *next.entry(lam).or_insert_with(Rat::zero) += w * step;
                }
            }
            cur = next;
        }
        cur
    }

    let mut rows = 0usize;
    for n in 2..=4usize {
        for nu in signatures_in_box(n, -2, 2) {
            for k in 1..n {
                let row = markov_row(&nu, k).unwrap();
                let total: Rat = row.iter().map(|(_, w)| w.clone()).sum();
                assert_eq!(total, rat(1), "row sum != 1 at nu={nu}, K={k}");
                let direct: BTreeMap<Signature, Rat> = row.into_iter().collect();
                let chained = chain_product_row(&nu, k);
                assert_eq!(
                    direct, chained,
                    "chain rule fails at nu={nu}, K={k}"
                );
                rows += 1;
            }
        }
    }
    println!("criterion 10 (stochasticity + chain rule): PASS — {rows} rows, exact");
}

// ---- supporting exactness checks reused by several criteria ----

#[test]
fn shifted_schur_vanishing_supports_cauchy_truncation() {
    // mu not contained in nu forces S*_mu(nu) = 0; this is what makes the
    // Cauchy-type sum finite, so it is pinned here alongside criterion 3.
    for nu in signatures_in_box(3, 0, 3) {
        let x: Vec<Rat> = nu.parts().iter().map(|&v| rat(v)).collect();
        for mu_sig in signatures_in_box(3, 0, 3) {
            let contained = (0..3).all(|i| mu_sig.part(i) <= nu.part(i));
            if !contained {
                let mu = Partition::new(mu_sig.parts().to_vec()).unwrap();
                assert_eq!(
                    gtdim_core::schur::shifted_schur(&mu, &x).unwrap(),
                    Rat::zero()
                );
            }
        }
    }
}

#[test]
fn contour_quadrature_error_matches_stray_residue_analysis() {
    // kappa=(1), nu=(0,-1): the k=1 kernel weight has a pole at t=-1 whose
    // image lies outside the torus; H*(-1) = 1/2 there, and the stray
    // residue is exactly +1/2. The quadrature must converge to 1/2, not to
    // the exact relative dimension 0.
    let nu = sig(&[0, -1]);
    let kappa = sig(&[1]);
    assert_eq!(reldim_dp(&kappa, &nu).unwrap(), rat(0));
    let got = contour_reldim(&nu, &kappa, 512).unwrap();
    assert!(
        (got - 0.5).abs() < 1e-9,
        "stray-residue prediction violated: got {got}"
    );
}

#[test]
fn shifted_route_is_consistent_where_it_applies() {
    // companion to criterion 1: the re-indexed residue route agrees with the
    // direct one whenever its guard passes, and only refuses via the guard
    for n in 2..=4usize {
        for nu in signatures_in_box(n, -2, 2) {
            for k in 1..n.min(3) {
                for kappa in signatures_in_box(k, -3, 3) {
                    match gtdim_core::reldim::reldim_residue_shifted(&kappa, &nu) {
                        Ok(v) => {
                            assert_eq!(v, reldim_residue(&kappa, &nu).unwrap())
                        }
                        Err(Error::Precondition(_)) => {}
                        Err(e) => panic!("unexpected error: {e}"),
                    }
                }
            }
        }
    }
}
