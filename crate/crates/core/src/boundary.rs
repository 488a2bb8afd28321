//! The boundary parameter space `Ω`, the generating function `Φ(u;ω)`, its
//! Laurent coefficients `φ_n` (exact for finitely supported rational `ω`,
//! quadrature otherwise), the kernels `Λ^∞_K`, the integral kernels
//! `R_k^{(j)}(u;N)`, the contour quadrature, approximation sweeps, and the
//! log-concavity check for `Λ^N_1(ν,·)`.

use crate::error::{Error, Result};
use crate::exact::{laurent_window, rat, ratio, rational_det, to_f64, LaurentWindow, RMatrix, Rat, RationalFn};
use crate::gt::{dim_weyl, frobenius, Signature};
use crate::reldim::reldim_residue;
use crate::schur::hstar_fn;
use num::complex::Complex64;
use num::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Finitely supported boundary parameter
/// `ω = (α^+, β^+; α^−, β^−; γ^+, γ^−)`.
///
/// The lists are weakly decreasing and nonnegative, `β_1^+ + β_1^− ≤ 1`, and
/// `δ^± = γ^± + Σ(α_i^± + β_i^±)` is derived rather than stored.
#[derive(Debug, Clone, PartialEq)]
pub struct OmegaPoint {
    pub alpha_plus: Vec<Rat>,
    pub beta_plus: Vec<Rat>,
    pub alpha_minus: Vec<Rat>,
    pub beta_minus: Vec<Rat>,
    pub gamma_plus: Rat,
    pub gamma_minus: Rat,
}

fn check_list(name: &str, xs: &[Rat]) -> Result<()> {
    if xs.iter().any(|x| x.is_negative()) {
        return Err(Error::Domain(format!("{name} has a negative entry")));
    }
    if xs.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Domain(format!("{name} is not weakly decreasing")));
    }
    Ok(())
}

impl OmegaPoint {
    pub fn new(
        alpha_plus: Vec<Rat>,
        beta_plus: Vec<Rat>,
        alpha_minus: Vec<Rat>,
        beta_minus: Vec<Rat>,
        gamma_plus: Rat,
        gamma_minus: Rat,
    ) -> Result<Self> {
        check_list("alpha_plus", &alpha_plus)?;
        check_list("beta_plus", &beta_plus)?;
        check_list("alpha_minus", &alpha_minus)?;
        check_list("beta_minus", &beta_minus)?;
        if gamma_plus.is_negative() || gamma_minus.is_negative() {
            return Err(Error::Domain("gamma must be nonnegative".into()));
        }
        let b1p = beta_plus.first().cloned().unwrap_or_else(Rat::zero);
        let b1m = beta_minus.first().cloned().unwrap_or_else(Rat::zero);
        if b1p + b1m > Rat::one() {
            return Err(Error::Domain("beta_1^+ + beta_1^- exceeds 1".into()));
        }
        Ok(OmegaPoint {
            alpha_plus,
            beta_plus,
            alpha_minus,
            beta_minus,
            gamma_plus,
            gamma_minus,
        })
    }

    pub fn zero() -> Self {
        OmegaPoint {
            alpha_plus: vec![],
            beta_plus: vec![],
            alpha_minus: vec![],
            beta_minus: vec![],
            gamma_plus: Rat::zero(),
            gamma_minus: Rat::zero(),
        }
    }

    /// `δ^+ = γ^+ + Σ(α_i^+ + β_i^+)`.
    pub fn delta_plus(&self) -> Rat {
        self.alpha_plus
            .iter()
            .chain(self.beta_plus.iter())
            .fold(self.gamma_plus.clone(), |acc, x| acc + x)
    }

    /// `δ^− = γ^− + Σ(α_i^− + β_i^−)`.
    pub fn delta_minus(&self) -> Rat {
        self.alpha_minus
            .iter()
            .chain(self.beta_minus.iter())
            .fold(self.gamma_minus.clone(), |acc, x| acc + x)
    }

    /// Whether `Φ(·;ω)` is a rational function (no exponential factor).
    pub fn is_rational(&self) -> bool {
        self.gamma_plus.is_zero() && self.gamma_minus.is_zero()
    }
}

/// The embedding `ν ↦ ω(ν)`: split `ν` into a pair of Young diagrams
/// `(ν^+, ν^-)`, take modified Frobenius coordinates of each, and scale by
/// `1/N`. The `γ^±` of an embedded point are zero.
pub fn omega_of(nu: &Signature) -> Result<OmegaPoint> {
    let n = nu.len();
    if n == 0 {
        return Err(Error::Dimension("empty signature".into()));
    }
    let plus: Vec<i64> = nu.parts().iter().copied().filter(|&x| x > 0).collect();
    let minus: Vec<i64> = nu
        .parts()
        .iter()
        .rev()
        .copied()
        .filter(|&x| x < 0)
        .map(|x| -x)
        .collect();
    let scale = rat(n as i64);
    let coords = |diagram: Vec<i64>| -> Result<(Vec<Rat>, Vec<Rat>)> {
        let f = frobenius(&Signature::new(diagram)?)?;
        let alphas = f.pairs.iter().map(|(a, _)| a / &scale).collect();
        let betas = f.pairs.iter().map(|(_, b)| b / &scale).collect();
        Ok((alphas, betas))
    };
    let (ap, bp) = coords(plus)?;
    let (am, bm) = coords(minus)?;
    OmegaPoint::new(ap, bp, am, bm, Rat::zero(), Rat::zero())
}

/// `Φ(·;ω)` as an exact rational function of `u`, available when `γ^± = 0`.
///
/// Each coordinate contributes one linear factor:
/// `β^+`: `1+β(u−1)`, `α^+`: `1/(1−α(u−1))`,
/// `β^−`: `1+β(u^{-1}−1)`, `α^−`: `1/(1−α(u^{-1}−1))`.
pub fn phi_fn(omega: &OmegaPoint) -> Result<RationalFn> {
    if !omega.is_rational() {
        return Err(Error::Unsupported(
            "gamma > 0: Phi is not a rational function".into(),
        ));
    }
    let mut scalar = Rat::one();
    let mut zeros: Vec<Rat> = Vec::new();
    let mut poles: Vec<Rat> = Vec::new();
    for b in &omega.beta_plus {
        if b.is_zero() {
            continue;
        }
        // 1 + b(u-1) = b (u - (b-1)/b)
        scalar *= b;
        zeros.push((b - rat(1)) / b);
    }
    for a in &omega.alpha_plus {
        if a.is_zero() {
            continue;
        }
        // 1 - a(u-1) = -a (u - (1+a)/a)
        scalar /= -a;
        poles.push((rat(1) + a) / a);
    }
    for b in &omega.beta_minus {
        if b.is_zero() {
            continue;
        }
        // 1 + b(1/u - 1) = ((1-b)u + b)/u
        let c = rat(1) - b;
        poles.push(Rat::zero());
        if c.is_zero() {
            // b = 1: the factor is exactly 1/u
        } else {
            scalar *= &c;
            zeros.push(-b / c);
        }
    }
    for a in &omega.alpha_minus {
        if a.is_zero() {
            continue;
        }
        // 1 - a(1/u - 1) = ((1+a)u - a)/u
        let c = rat(1) + a;
        zeros.push(Rat::zero());
        scalar /= &c;
        poles.push(a / c);
    }
    Ok(RationalFn::new(scalar, zeros, poles))
}

/// Exact evaluation of `Φ(u;ω)` at a rational `u ≠ 0`; needs `γ^± = 0`.
pub fn phi_eval_exact(omega: &OmegaPoint, u: &Rat) -> Result<Rat> {
    if u.is_zero() {
        return Err(Error::Domain("Phi is not defined at u = 0".into()));
    }
    phi_fn(omega)?.eval(u)
}

/// `Φ(u;ω)` at a complex point, including the exponential factor.
pub fn phi_eval_c(omega: &OmegaPoint, u: Complex64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    let w = u - one;
    let wi = 1.0 / u - one;
    let mut v = (to_f64(&omega.gamma_plus) * w + to_f64(&omega.gamma_minus) * wi).exp();
    for b in &omega.beta_plus {
        v *= one + to_f64(b) * w;
    }
    for a in &omega.alpha_plus {
        v /= one - to_f64(a) * w;
    }
    for b in &omega.beta_minus {
        v *= one + to_f64(b) * wi;
    }
    for a in &omega.alpha_minus {
        v /= one - to_f64(a) * wi;
    }
    v
}

/// The shift homeomorphism `S` with `Φ(u;Sω) = u·Φ(u;ω)`: it removes
/// `β_1^−` (treating an empty list as `β_1^− = 0`) and inserts `1−β_1^−` at
/// the head of the `β^+` list.
pub fn shift_s(omega: &OmegaPoint) -> Result<OmegaPoint> {
    let mut beta_minus = omega.beta_minus.clone();
    let b1m = if beta_minus.is_empty() {
        Rat::zero()
    } else {
        beta_minus.remove(0)
    };
    let mut beta_plus = omega.beta_plus.clone();
    beta_plus.insert(0, Rat::one() - b1m);
    OmegaPoint::new(
        omega.alpha_plus.clone(),
        beta_plus,
        omega.alpha_minus.clone(),
        beta_minus,
        omega.gamma_plus.clone(),
        omega.gamma_minus.clone(),
    )
}

/// `Φ(u;ω(ν))` as a rational function of `u`, obtained by substituting
/// `t = −1/2 + N/(u−1)` into the normalized `H*(·;ν)`.
///
/// A linear factor `t − x` becomes `−(x+1/2)(u − u_x)/(u−1)` with
/// `u_x = 1 + N/(x+1/2)`; the `(u−1)` powers cancel between numerator and
/// denominator since the normalized `H*` has equally many zeros and poles.
pub fn phi_fn_of_nu(nu: &Signature) -> Result<RationalFn> {
    let n = nu.len();
    if n == 0 {
        return Err(Error::Dimension("empty signature".into()));
    }
    let h = hstar_fn(nu);
    debug_assert_eq!(h.zeros().len(), h.poles().len());
    let big_n = rat(n as i64);
    let half = ratio(1, 2);
    let mut scalar = h.scalar().clone();
    let map = |x: &Rat| -> (Rat, Rat) {
        let c = x + &half; // never zero: x is an integer
        (rat(1) + &big_n / &c, c)
    };
    let mut zeros = Vec::with_capacity(h.zeros().len());
    for z in h.zeros() {
        let (u, c) = map(z);
        scalar *= c;
        zeros.push(u);
    }
    let mut poles = Vec::with_capacity(h.poles().len());
    for p in h.poles() {
        let (u, c) = map(p);
        scalar /= c;
        poles.push(u);
    }
    Ok(RationalFn::new(scalar, zeros, poles))
}

/// Exact Laurent coefficients `φ_n(ω(ν))` for `n_min ≤ n ≤ n_max`.
pub fn phi_n_exact(nu: &Signature, n_min: i64, n_max: i64) -> Result<LaurentWindow> {
    laurent_window(&phi_fn_of_nu(nu)?, n_min, n_max)
}

/// Exact Laurent coefficients of a rational (γ = 0) boundary point.
pub fn phi_window_omega(omega: &OmegaPoint, n_min: i64, n_max: i64) -> Result<LaurentWindow> {
    laurent_window(&phi_fn(omega)?, n_min, n_max)
}

const QUAD_START: usize = 32;
const QUAD_CAP: usize = 1 << 20;

fn phi_n_trapezoid(omega: &OmegaPoint, n: i64, nodes: usize) -> f64 {
    let step = std::f64::consts::TAU / nodes as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    for m in 0..nodes {
        let theta = (m as f64 + 0.5) * step;
        let u = Complex64::from_polar(1.0, theta);
        acc += phi_eval_c(omega, u) * Complex64::from_polar(1.0, -(n as f64) * theta);
    }
    (acc / nodes as f64).re
}

/// `φ_n(ω)` by trapezoidal quadrature of `(1/2πi)∮ Φ(u;ω) u^{−n−1} du` on the
/// unit circle, doubling the node count until two successive estimates agree
/// within `tol`.
pub fn phi_n_numeric(omega: &OmegaPoint, n: i64, tol: f64) -> Result<f64> {
    if tol <= 0.0 {
        return Err(Error::Domain("tolerance must be positive".into()));
    }
    let mut nodes = QUAD_START;
    let mut prev = phi_n_trapezoid(omega, n, nodes);
    while nodes * 2 <= QUAD_CAP {
        nodes *= 2;
        let cur = phi_n_trapezoid(omega, n, nodes);
        if (cur - prev).abs() < tol {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::ToleranceNotMet {
        best: prev,
        requested: tol,
    })
}

fn phi_sig_from_window(window: &LaurentWindow, kappa: &Signature) -> Result<Rat> {
    let k = kappa.len();
    if k == 0 {
        return Err(Error::Dimension("empty signature".into()));
    }
    let m = RMatrix::from_fn(k, k, |i, j| {
        window
            .get(kappa.part(i) - (i as i64 + 1) + (j as i64 + 1))
            .clone()
    });
    rational_det(&m)
}

fn kappa_index_range(kappa: &Signature) -> (i64, i64) {
    let k = kappa.len() as i64;
    let lo = (0..k)
        .map(|i| kappa.part(i as usize) - (i + 1) + 1)
        .min()
        .unwrap();
    let hi = (0..k)
        .map(|i| kappa.part(i as usize) - (i + 1) + k)
        .max()
        .unwrap();
    (lo, hi)
}

/// `φ_κ(ω(ν)) = det[φ_{κ_i−i+j}(ω(ν))]`, exact.
pub fn phi_sig_of_nu(nu: &Signature, kappa: &Signature) -> Result<Rat> {
    let (lo, hi) = kappa_index_range(kappa);
    phi_sig_from_window(&phi_n_exact(nu, lo, hi)?, kappa)
}

/// `φ_κ(ω)` for a rational (γ = 0) boundary point, exact.
pub fn phi_sig_omega(omega: &OmegaPoint, kappa: &Signature) -> Result<Rat> {
    let (lo, hi) = kappa_index_range(kappa);
    phi_sig_from_window(&phi_window_omega(omega, lo, hi)?, kappa)
}

/// `Λ^∞_K(ω(ν),κ) = Dim_K κ · φ_κ(ω(ν))`, exact and nonnegative.
pub fn lambda_inf_of_nu(nu: &Signature, kappa: &Signature) -> Result<Rat> {
    let v = Rat::from_integer(dim_weyl(kappa)?) * phi_sig_of_nu(nu, kappa)?;
    assert!(!v.is_negative(), "phi_kappa must be nonnegative");
    Ok(v)
}

/// `Λ^∞_K(ω,κ)` for a rational boundary point.
pub fn lambda_inf_omega(omega: &OmegaPoint, kappa: &Signature) -> Result<Rat> {
    let v = Rat::from_integer(dim_weyl(kappa)?) * phi_sig_omega(omega, kappa)?;
    assert!(!v.is_negative(), "phi_kappa must be nonnegative");
    Ok(v)
}

/// The integral kernel `R_k^{(j)}(u;N)`, split by the sign of `k`.
pub fn r_kernel(k: i64, j: i64, big_k: i64, n: i64, u: Complex64) -> Result<Complex64> {
    if n <= big_k {
        return Err(Error::Dimension(format!("need N > K, got N={n}, K={big_k}")));
    }
    let one = Complex64::new(1.0, 0.0);
    let w = u - one;
    let nf = n as f64;
    let pref = (n - big_k) as f64 / nf;
    let lin_plus = |c: f64| one + c / nf * w; // 1 + c(u-1)/N
    let lin_u = |c: f64| u + c / nf * w; // u + c(u-1)/N
    let (num, den) = if k >= 1 {
        let mut num = u;
        for m in 1..k {
            num *= lin_plus((j - k) as f64 - 0.5 + m as f64);
        }
        let mut den = one;
        for m in 1..=k + 1 {
            den *= lin_u((j - k - big_k) as f64 - 1.5 + m as f64);
        }
        (num, den)
    } else if k <= -1 {
        let a = -k;
        let mut num = u;
        for m in 1..a {
            num *= lin_u((j - big_k) as f64 - 0.5 + m as f64);
        }
        let mut den = one;
        for m in 1..=a + 1 {
            den *= lin_plus(j as f64 - 1.5 + m as f64);
        }
        (num, den)
    } else {
        let den = lin_u((j - big_k) as f64 - 0.5) * lin_plus(j as f64 - 0.5);
        (u, den)
    };
    if den.norm() == 0.0 {
        return Err(Error::Pole(format!("kernel denominator vanishes at u = {u}")));
    }
    Ok(pref * num / den)
}

/// Relative dimension by the K-fold torus quadrature of
/// `Φ(u_1;ω(ν))…Φ(u_K;ω(ν)) · det[R^{(j)}_{κ_i−i+j}(u_j;N)] du_1/u_1 … du_K/u_K`.
///
/// The determinant is expanded column-wise, so the K-fold grid sum factors
/// exactly into the determinant of the matrix of single-circle quadratures
/// `A(i,j) = (1/2πi)∮ Φ(u;ω(ν)) R^{(j)}_{κ_i−i+j}(u;N) du/u`;
/// the value is bit-identical to the full product-grid sum.
///
/// The kernels converge to `u^{−k}` only as `N → ∞`, and the representation
/// itself is exact only for `N` large relative to `κ` and `K`: at small `N`
/// the kernel weights acquire poles on the wrong side of the contour and the
/// quadrature converges to the exact value plus explicit stray residues.
/// See the acceptance test output for the censused small-`N` deviations.
pub fn contour_reldim(nu: &Signature, kappa: &Signature, nodes: usize) -> Result<f64> {
    let k = kappa.len();
    let n = nu.len();
    if !(1..=2).contains(&k) {
        return Err(Error::Domain(format!("K must be 1 or 2, got {k}")));
    }
    if k >= n {
        return Err(Error::Dimension(format!(
            "need K < N, got K={k}, N={n}"
        )));
    }
    if nodes < 16 {
        return Err(Error::Domain(format!("need at least 16 nodes, got {nodes}")));
    }
    let step = std::f64::consts::TAU / nodes as f64;
    let us: Vec<Complex64> = (0..nodes)
        .map(|m| Complex64::from_polar(1.0, (m as f64 + 0.5) * step))
        .collect();
    let omega = omega_of(nu)?;
    let phis: Vec<Complex64> = us.iter().map(|&u| phi_eval_c(&omega, u)).collect();
    let mut a = [[Complex64::new(0.0, 0.0); 2]; 2];
    for (i, row) in a.iter_mut().enumerate().take(k) {
        for (j, cell) in row.iter_mut().enumerate().take(k) {
            let idx = kappa.part(i) - (i as i64 + 1) + (j as i64 + 1);
            let mut acc = Complex64::new(0.0, 0.0);
            for (u, phi) in us.iter().zip(&phis) {
                acc += phi * r_kernel(idx, j as i64 + 1, k as i64, n as i64, *u)?;
            }
            *cell = acc / nodes as f64;
        }
    }
    let det = if k == 1 {
        a[0][0]
    } else {
        a[0][0] * a[1][1] - a[0][1] * a[1][0]
    };
    Ok(det.re)
}

/// Exact deviation `|Λ^N_K(ν,κ) − Λ^∞_K(ω(ν),κ)|`.
pub fn approx_deviation(nu: &Signature, kappa: &Signature) -> Result<Rat> {
    let dim_k = Rat::from_integer(dim_weyl(kappa)?);
    let lambda_nk = &dim_k * reldim_residue(kappa, nu)?;
    let lambda_inf = lambda_inf_of_nu(nu, kappa)?;
    Ok((lambda_nk - lambda_inf).abs())
}

/// One row of an approximation sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub n: usize,
    pub nu: Signature,
    pub kappa: Signature,
    pub lambda_nk: Rat,
    pub lambda_inf: Rat,
    pub deviation: Rat,
}

/// How sweep rows pick `ν` at each level `N`.
#[derive(Debug, Clone)]
pub enum Sampler {
    /// Every signature with parts in `[−bound, bound]`.
    Exhaustive { bound: i64 },
    /// `ν_i = ⌊N·x_i⌋` for a fixed rational profile, zero-padded.
    Profile { profile: Vec<Rat> },
    /// `count` signatures drawn uniformly from the box, seeded.
    Random { bound: i64, count: usize, seed: u64 },
}

impl Sampler {
    fn sample(&self, n: usize) -> Result<Vec<Signature>> {
        match self {
            Sampler::Exhaustive { bound } => {
                Ok(crate::gt::signatures_in_box(n, -bound, *bound))
            }
            Sampler::Profile { profile } => {
                if profile.len() > n {
                    return Err(Error::Dimension(format!(
                        "profile longer than N = {n}"
                    )));
                }
                let mut parts: Vec<i64> = profile
                    .iter()
                    .map(|x| {
                        let v = (rat(n as i64) * x).floor();
                        i64::try_from(v.to_integer())
                            .map_err(|_| Error::Domain("profile entry too large".into()))
                    })
                    .collect::<Result<_>>()?;
                parts.resize(n, 0);
                parts.sort_unstable_by(|a, b| b.cmp(a));
                Ok(vec![Signature::new(parts)?])
            }
            Sampler::Random { bound, count, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(n as u64));
                let mut out = Vec::with_capacity(*count);
                for _ in 0..*count {
                    let mut parts: Vec<i64> =
                        (0..n).map(|_| rng.gen_range(-bound..=*bound)).collect();
                    parts.sort_unstable_by(|a, b| b.cmp(a));
                    out.push(Signature::new(parts)?);
                }
                Ok(out)
            }
        }
    }
}

/// Evaluate the deviation over a family of `ν` for each listed `N`.
/// Rows come back in deterministic order (per-`N`, then sample order);
/// the per-row work is distributed across threads.
pub fn approx_sweep(
    kappa: &Signature,
    n_list: &[usize],
    sampler: &Sampler,
) -> Result<Vec<SweepRow>> {
    let k = kappa.len();
    let dim_k = Rat::from_integer(dim_weyl(kappa)?);
    let mut rows = Vec::new();
    for &n in n_list {
        if n <= k {
            return Err(Error::Dimension(format!(
                "sweep level N={n} must exceed K={k}"
            )));
        }
        let nus = sampler.sample(n)?;
        let mut batch: Vec<SweepRow> = nus
            .into_par_iter()
            .map(|nu| {
                let lambda_nk = &dim_k * reldim_residue(kappa, &nu)?;
                let lambda_inf = lambda_inf_of_nu(&nu, kappa)?;
                let deviation = (&lambda_nk - &lambda_inf).abs();
                Ok(SweepRow {
                    n,
                    nu,
                    kappa: kappa.clone(),
                    lambda_nk,
                    lambda_inf,
                    deviation,
                })
            })
            .collect::<Result<_>>()?;
        rows.append(&mut batch);
    }
    Ok(rows)
}

/// Per-`N` maxima of the deviation column, in increasing `N`.
pub fn sweep_maxima(rows: &[SweepRow]) -> Vec<(usize, Rat)> {
    let mut out: Vec<(usize, Rat)> = Vec::new();
    for row in rows {
        match out.iter_mut().find(|(n, _)| *n == row.n) {
            Some((_, m)) => {
                if row.deviation > *m {
                    *m = row.deviation.clone();
                }
            }
            None => out.push((row.n, row.deviation.clone())),
        }
    }
    out.sort_by_key(|(n, _)| *n);
    out
}

/// Log-concavity and gap-free support of the measure `M = Λ^N_1(ν,·)`:
/// `M(k)M(l) ≤ M((k+l)/2)²` for same-parity `k,l`, and the support is the
/// full interval `{ν_N,…,ν_1}`.
pub fn logconcave_check(nu: &Signature) -> Result<bool> {
    let n = nu.len();
    if n < 2 {
        return Err(Error::Dimension(format!("need N >= 2, got {n}")));
    }
    let row = crate::reldim::markov_row(nu, 1)?;
    let lo = nu.part(n - 1);
    let hi = nu.part(0);
    let width = (hi - lo + 1) as usize;
    let mut mass = vec![Rat::zero(); width];
    for (kap, w) in row {
        let k = kap.part(0);
        if k < lo || k > hi {
            return Ok(false);
        }
        mass[(k - lo) as usize] = w;
    }
    if mass.iter().any(|m| !m.is_positive()) {
        return Ok(false); // internal zero or support gap
    }
    for i in 0..width {
        for j in (i..width).step_by(2) {
            let mid = (i + j) / 2;
            if &mass[i] * &mass[j] > &mass[mid] * &mass[mid] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
