//! Cross-module identities for the boundary kernels that need truncated
//! infinite sums: row sums of `Λ^∞_N`, the intertwining relation
//! `Λ^∞_N Λ^N_K = Λ^∞_K`, and the product expansion of Laurent coefficients
//! over weight multiplicities.
//!
//! For an embedded point `ω(ν)` with `ν ≥ 0`, the Laurent coefficients vanish
//! at negative indices, so `φ_κ(ω) = 0` unless `κ_K ≥ 0`; truncating the
//! support at `κ_1 ≤ T` then loses only a geometrically small tail.

use gtdim_core::boundary::{lambda_inf_of_nu, phi_n_exact, phi_sig_of_nu};
use gtdim_core::exact::{rat, to_f64, Rat};
use gtdim_core::gt::{dim_weyl, weight_multiplicity, Signature};
use gtdim_core::num::{One, Signed, Zero};
use gtdim_core::reldim::markov_nk;

fn sig(parts: &[i64]) -> Signature {
    Signature::new(parts.to_vec()).unwrap()
}

/// Signatures of length `n` with parts in `[0, top]`.
fn nonneg_box(n: usize, top: i64) -> Vec<Signature> {
    gtdim_core::gt::signatures_in_box(n, 0, top)
}

#[test]
fn lambda_inf_row_sums_approach_one_from_below() {
    let base = sig(&[1, 0]);
    for n in 2..=3usize {
        let mut prev = Rat::zero();
        let mut last = Rat::zero();
        for top in [4i64, 8, 16] {
            let mut sum = Rat::zero();
            for nu in nonneg_box(n, top) {
                sum += lambda_inf_of_nu(&base, &nu).unwrap();
            }
            assert!(sum >= prev, "partial sums must be nondecreasing");
            assert!(sum < rat(1), "partial sums stay below 1");
            prev = sum.clone();
            last = sum;
        }
        let gap = to_f64(&(rat(1) - last));
        assert!(gap < 1e-6, "row sum gap {gap:.2e} at N={n}");
    }
}

#[test]
fn intertwining_relation_under_truncation() {
    // (Lambda^inf_N Lambda^N_K)(omega, kappa) = Lambda^inf_K(omega, kappa)
    let base = sig(&[1, 0]);
    let kappas = [sig(&[0]), sig(&[1]), sig(&[1, 0]), sig(&[1, 1])];
    let tol = Rat::new(1.into(), 100_000_000.into());
    for (n, top) in [(3usize, 14i64), (4, 17)] {
        let mut lhs = vec![Rat::zero(); kappas.len()];
        for nu in nonneg_box(n, top) {
            let weight = lambda_inf_of_nu(&base, &nu).unwrap();
            if weight.is_zero() {
                continue;
            }
            for (kappa, acc) in kappas.iter().zip(lhs.iter_mut()) {
                if kappa.len() < n {
                    *acc += &weight * markov_nk(&nu, kappa).unwrap();
                }
            }
        }
        for (kappa, total) in kappas.iter().zip(lhs) {
            if kappa.len() >= n {
                continue;
            }
            let rhs = lambda_inf_of_nu(&base, kappa).unwrap();
            let gap = if total > rhs { &total - &rhs } else { &rhs - &total };
            assert!(
                gap < tol,
                "intertwining gap {} at N={n}, kappa={kappa}",
                to_f64(&gap)
            );
        }
    }
}

#[test]
fn laurent_product_expands_over_weight_multiplicities() {
    // phi_{n1} phi_{n2} = sum_nu c(nu; n1, n2) phi_nu, exactly: for nu >= 0
    // embedded points the support is finite because phi_n = 0 for n < 0 and
    // c(nu; n1, n2) = 0 unless |nu| = n1 + n2.
    let base = sig(&[1, 0]);
    let window = phi_n_exact(&base, -1, 12).unwrap();
    for (n1, n2) in [(0i64, 0i64), (1, 0), (1, 1), (2, 1), (3, 0)] {
        let lhs = window.get(n1) * window.get(n2);
        let s = n1 + n2;
        let mut rhs = Rat::zero();
        let mut nu2 = 0;
        while 2 * nu2 <= s {
            let nu = sig(&[s - nu2, nu2]);
            let mult = weight_multiplicity(&nu, &[n1, n2]).unwrap();
            if !mult.is_zero() {
                rhs += Rat::from_integer(mult) * phi_sig_of_nu(&base, &nu).unwrap();
            }
            nu2 += 1;
        }
        assert_eq!(lhs, rhs, "product expansion fails at ({n1},{n2})");
    }
}

#[test]
fn phi_sig_vanishes_below_the_support() {
    // for nu >= 0 the coefficients vanish at negative indices, so any kappa
    // with a very negative last part has a zero bottom row
    let base = sig(&[2, 1, 0]);
    for kappa in [sig(&[0, -5]), sig(&[3, -4]), sig(&[1, 0, -6])] {
        let v = phi_sig_of_nu(&base, &kappa).unwrap();
        assert_eq!(v, Rat::zero());
        assert!(v.clone().abs() <= Rat::one());
    }
}

#[test]
fn lambda_inf_examples_match_markov_scale() {
    // Lambda^inf uses the same Dim_K kappa prefactor as Lambda^N_K
    let nu = sig(&[1, 0]);
    let kappa = sig(&[1, 0]);
    let phi_k = phi_sig_of_nu(&nu, &kappa).unwrap();
    let expected = Rat::from_integer(dim_weyl(&kappa).unwrap()) * phi_k;
    assert_eq!(lambda_inf_of_nu(&nu, &kappa).unwrap(), expected);
}
