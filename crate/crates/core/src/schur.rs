//! The Schur-type special functions: complete homogeneous values at all-ones,
//! the skew Jacobi–Trudi path count, shifted Schur polynomials `S*_μ`, dual
//! Schur functions `σ_μ`, the family `𝔖_{κ|N}`, the rational function
//! `H*(t;ν)`, the finite Cauchy-type sum, and the shift difference operator.

use crate::error::{Error, Result};
use crate::exact::{
    binom_int, falling_power, gamma_ratio, pochhammer, rat, rational_det, Int, RMatrix, Rat,
    RationalFn,
};
use crate::gt::Signature;
use num::{One, Signed, Zero};
use std::fmt;

/// Partition: weakly decreasing nonnegative integers, trailing zeros stripped.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Partition(Vec<i64>);

impl Partition {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.iter().any(|&x| x < 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!("not a partition: {parts:?}")));
        }
        let mut p = parts;
        while p.last() == Some(&0) {
            p.pop();
        }
        Ok(Partition(p))
    }

    pub fn empty() -> Self {
        Partition(vec![])
    }

    /// Number of nonzero parts.
    pub fn ell(&self) -> usize {
        self.0.len()
    }

    /// Part `μ_j` for 1-indexed `j`, zero beyond the length.
    pub fn part1(&self, j: usize) -> i64 {
        self.0.get(j - 1).copied().unwrap_or(0)
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// `h_m(1,…,1)` with `n` ones: `(m+n−1)! / (m!(n−1)!)` for `m ≥ 0`, else 0.
pub fn h_ones(m: i64, n: i64) -> Int {
    assert!(n >= 1);
    if m < 0 {
        return Int::zero();
    }
    binom_int((m + n - 1) as u64, m as u64)
}

/// `Dim_{K,N}(κ,ν)` through the skew Jacobi–Trudi determinant: shift both
/// rows by `ν_N`, reduce to a skew shape `ν̄/κ̄`, and evaluate
/// `det[h_{ν̄_i−κ̄_j−i+j}(1^{N−K})]`.
pub fn skew_count(kappa: &Signature, nu: &Signature) -> Result<Int> {
    let (k, n) = (kappa.len(), nu.len());
    if k >= n || k < 1 {
        return Err(Error::Dimension(format!(
            "skew route needs 1 <= K < N, got K={k}, N={n}"
        )));
    }
    let shift = nu.part(n - 1);
    if kappa.part(k - 1) < shift {
        return Ok(Int::zero());
    }
    let nu_bar: Vec<i64> = (0..n).map(|i| nu.part(i) - shift).collect();
    let kap_bar = |i: usize| -> i64 {
        if i < k {
            kappa.part(i) - shift
        } else {
            0
        }
    };
    if (0..n).any(|i| nu_bar[i] < kap_bar(i)) {
        return Ok(Int::zero());
    }
    let order = nu_bar.iter().filter(|&&x| x > 0).count();
    if order == 0 {
        return Ok(Int::one());
    }
    let ones = (n - k) as i64;
    let m = RMatrix::from_fn(order, order, |i, j| {
        Rat::from_integer(h_ones(
            nu_bar[i] - kap_bar(j) - i as i64 + j as i64,
            ones,
        ))
    });
    let det = rational_det(&m)?;
    assert!(det.is_integer() && !det.is_negative());
    Ok(det.to_integer())
}

/// Shifted Schur polynomial
/// `S*_μ(x_1,…,x_N) = det[(x_i+N−i)^{↓ μ_j+N−j}] / ∏_{i<j}(x_i−x_j−i+j)`;
/// zero when `ℓ(μ)` exceeds the number of variables.
pub fn shifted_schur(mu: &Partition, x: &[Rat]) -> Result<Rat> {
    let n = x.len();
    if mu.ell() > n {
        return Ok(Rat::zero());
    }
    if n == 0 {
        return Ok(Rat::one());
    }
    let mut den = Rat::one();
    for i in 1..=n {
        for j in i + 1..=n {
            den *= &x[i - 1] - &x[j - 1] - rat(i as i64) + rat(j as i64);
        }
    }
    if den.is_zero() {
        return Err(Error::Domain(
            "shifted bialternant denominator vanishes".into(),
        ));
    }
    let m = RMatrix::from_fn(n, n, |i0, j0| {
        let (i, j) = (i0 as i64 + 1, j0 as i64 + 1);
        let base = &x[i0] + rat(n as i64 - i);
        falling_power(&base, (mu.part1(j as usize) + n as i64 - j) as u32)
    });
    Ok(rational_det(&m)? / den)
}

/// Dual Schur function
/// `σ_μ(t_1,…,t_K) = (−1)^{K(K−1)/2} det[Γ(t_i+j−μ_j)/Γ(t_i+1)] / ∏_{i<j}(t_i−t_j)`;
/// zero when `ℓ(μ) > K`.
pub fn dual_schur(mu: &Partition, t: &[Rat]) -> Result<Rat> {
    let k = t.len();
    if mu.ell() > k {
        return Ok(Rat::zero());
    }
    if k == 0 {
        return Ok(Rat::one());
    }
    let mut den = Rat::one();
    for i in 0..k {
        for j in i + 1..k {
            if t[i] == t[j] {
                return Err(Error::Domain(format!("coincident points t = {}", t[i])));
            }
            den *= &t[i] - &t[j];
        }
    }
    let mut entries = Vec::with_capacity(k * k);
    for ti in t {
        for j in 1..=k {
            entries.push(gamma_ratio(ti, j as i64 - mu.part1(j), 1)?);
        }
    }
    let det = rational_det(&RMatrix::new(k, k, entries)?)?;
    let sign = if (k * (k - 1) / 2) & 1 == 0 {
        Rat::one()
    } else {
        -Rat::one()
    };
    Ok(sign * det / den)
}

/// `H*(·;ν) = ∏_{j=1}^N (t+j)/(t+j−ν_j)` as a normalized rational function.
pub fn hstar_fn(nu: &Signature) -> RationalFn {
    let n = nu.len() as i64;
    let zeros: Vec<Rat> = (1..=n).map(|j| rat(-j)).collect();
    let poles: Vec<Rat> = (1..=n).map(|j| rat(nu.part(j as usize - 1) - j)).collect();
    RationalFn::new(Rat::one(), zeros, poles)
}

/// `H*(t;ν)`, exact; `t` must avoid the surviving poles.
pub fn hstar(nu: &Signature, t: &Rat) -> Result<Rat> {
    hstar_fn(nu).eval(t)
}

/// `H*(t_1,…,t_K;ν) = ∏ H*(t_i;ν)`.
pub fn hstar_multi(nu: &Signature, t: &[Rat]) -> Result<Rat> {
    let f = hstar_fn(nu);
    let mut acc = Rat::one();
    for ti in t {
        acc *= f.eval(ti)?;
    }
    Ok(acc)
}

/// `(N)_μ = ∏_i (N−i+1)_{μ_i}`.
pub fn n_pochhammer(n: i64, mu: &Partition) -> Rat {
    let mut acc = Rat::one();
    for i in 1..=mu.ell() {
        acc *= pochhammer(&rat(n - i as i64 + 1), mu.part1(i) as u32);
    }
    acc
}

/// `𝔖_{κ|N}(t_1,…,t_K)`: the Schur-like symmetric function whose expansion
/// coefficients against `H*` are the relative dimensions.
pub fn sf_eval(kappa: &Signature, n: i64, t: &[Rat]) -> Result<Rat> {
    let k = kappa.len();
    if t.len() != k || k == 0 {
        return Err(Error::Dimension(format!(
            "need {k} points for a length-{k} signature"
        )));
    }
    if n < k as i64 {
        return Err(Error::Dimension(format!("need N >= K, got N={n}, K={k}")));
    }
    let mut vand = Rat::one();
    for i in 0..k {
        for j in i + 1..k {
            if t[i] == t[j] {
                return Err(Error::Domain(format!("coincident points t = {}", t[i])));
            }
            vand *= &t[i] - &t[j];
        }
    }
    let nk = n - k as i64;
    let mut entries = Vec::with_capacity(k * k);
    for ti in t {
        for j in 1..=k as i64 {
            let a = j - kappa.part(j as usize - 1);
            let e = gamma_ratio(ti, n + 1, 1)? * gamma_ratio(ti, a, a + nk + 1)?;
            entries.push(e);
        }
    }
    let det = rational_det(&RMatrix::new(k, k, entries)?)?;
    // prefactor (−1)^{K(K−1)/2} ∏_i (N−K)!/(N−K+i−1)!
    let mut pref = if (k * (k - 1) / 2) & 1 == 0 {
        Rat::one()
    } else {
        -Rat::one()
    };
    for i in 1..=k {
        pref /= pochhammer(&rat(nk + 1), i as u32 - 1);
    }
    Ok(pref * det / vand)
}

fn is_subdiagram(mu: &Partition, nu: &Signature) -> bool {
    (1..=mu.ell()).all(|i| mu.part1(i) <= nu.part(i - 1))
}

fn enumerate_subdiagrams(nu: &Signature, max_len: usize) -> Vec<Partition> {
    let mut out = vec![Partition::empty()];
    let mut cur: Vec<i64> = Vec::new();
    fn rec(nu: &Signature, cur: &mut Vec<i64>, max_len: usize, out: &mut Vec<Partition>) {
        if cur.len() == max_len {
            return;
        }
        let i = cur.len();
        let cap = nu.part(i).min(cur.last().copied().unwrap_or(i64::MAX));
        for v in 1..=cap {
            cur.push(v);
            out.push(Partition(cur.clone()));
            rec(nu, cur, max_len, out);
            cur.pop();
        }
    }
    rec(nu, &mut cur, max_len.min(nu.len()), &mut out);
    out
}

/// Finite Cauchy-type sum `Σ_{μ⊆ν} S*_μ(ν)·σ_μ(t)`, which equals
/// `H*(t_1,…,t_K;ν)`. Requires `ν` to have nonnegative parts (the vanishing
/// property that truncates the sum needs a partition argument).
pub fn cauchy_sum(nu: &Signature, t: &[Rat]) -> Result<Rat> {
    if nu.parts().iter().any(|&x| x < 0) {
        return Err(Error::Domain(format!(
            "cauchy sum needs nonnegative parts, got {nu}"
        )));
    }
    let n = nu.len();
    let k = t.len();
    if n == 0 || k == 0 {
        return Err(Error::Dimension("empty signature or point tuple".into()));
    }
    let x: Vec<Rat> = nu.parts().iter().map(|&v| rat(v)).collect();
    let mut acc = Rat::zero();
    for mu in enumerate_subdiagrams(nu, n.min(k)) {
        debug_assert!(is_subdiagram(&mu, nu));
        let s = shifted_schur(&mu, &x)?;
        if s.is_zero() {
            continue;
        }
        acc += s * dual_schur(&mu, t)?;
    }
    Ok(acc)
}

/// Apply the difference operator
/// `(1/(N−1)^{↓K}) V^{-1} ∘ ∏_i (t_i+N − (t_i+1)τ_i) ∘ V`
/// to an arbitrary K-variate function, pointwise at `t`.
pub fn apply_shift_operator<F>(f: F, n: i64, t: &[Rat]) -> Result<Rat>
where
    F: Fn(&[Rat]) -> Result<Rat>,
{
    let k = t.len();
    if n - 1 < k as i64 {
        return Err(Error::Dimension(format!(
            "operator needs N-1 >= K, got N={n}, K={k}"
        )));
    }
    let vand = |pts: &[Rat]| -> Rat {
        let mut v = Rat::one();
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                v *= &pts[i] - &pts[j];
            }
        }
        v
    };
    let v0 = vand(t);
    if v0.is_zero() {
        return Err(Error::Domain("coincident points".into()));
    }
    let mut acc = Rat::zero();
    for mask in 0u32..(1 << k) {
        let mut coeff = Rat::one();
        let shifted: Vec<Rat> = t
            .iter()
            .enumerate()
            .map(|(i, ti)| {
                if mask & (1 << i) != 0 {
                    coeff *= -(ti + rat(1));
                    ti + rat(1)
                } else {
                    coeff *= ti + rat(n);
                    ti.clone()
                }
            })
            .collect();
        let vs = vand(&shifted);
        if vs.is_zero() {
            return Err(Error::Domain(
                "shifted evaluation points collide".into(),
            ));
        }
        acc += coeff * vs * f(&shifted)?;
    }
    Ok(acc / (v0 * falling_power(&rat(n - 1), k as u32)))
}

/// `D_{N,N−1} 𝔖_{κ|N−1}` at `t`, which must reproduce `𝔖_{κ|N}(t)`.
pub fn apply_shift_diff(kappa: &Signature, n: i64, t: &[Rat]) -> Result<Rat> {
    apply_shift_operator(|ts| sf_eval(kappa, n - 1, ts), n, t)
}
