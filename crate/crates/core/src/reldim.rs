//! Relative dimensions `Dim_{K,N}(κ,ν)/Dim_N ν` by the basis-coefficient and
//! residue-determinant routes, the stochastic links `Λ^N_K`, and the
//! generating-expansion cross-check.
//!
//! `H*(·;ν)` lives in the space `V_L` of rational functions with simple
//! integer poles off the lattice interval `L(N) = {−N,…,−1}`. The fractions
//! `f_{L,k}(t) = ∏_{x∈L}(t−x)/∏_{x∈L}(t−x−k)` form a basis of `V_L`, and the
//! relative dimension is a K×K determinant of expansion coefficients of `H*`
//! in the bases attached to the sliding intervals `L(N,j) = {−N+K−j,…,−j}`.
//! The same coefficients evaluate through residues of `H*`, which gives the
//! second, independent determinant route.

use crate::error::{Error, Result};
use crate::exact::{pochhammer, rat, rational_det, Int, RMatrix, Rat, RationalFn};
use crate::gt::{count_paths, dim_weyl, level_counts, Signature};
use crate::schur::{hstar_fn, hstar_multi, sf_eval};
use num::{One, Zero};
use std::collections::BTreeMap;

/// Lattice interval `L = {a,…,b}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasisInterval {
    pub a: i64,
    pub b: i64,
}

impl BasisInterval {
    pub fn new(a: i64, b: i64) -> Result<Self> {
        if a > b {
            return Err(Error::Domain(format!("empty interval {a}..{b}")));
        }
        Ok(BasisInterval { a, b })
    }

    /// Number of lattice points.
    pub fn n(&self) -> i64 {
        self.b - self.a + 1
    }

    /// The sliding interval `L(N,j) = {−N+K−j,…,−j}`.
    pub fn sliding(n: usize, k: usize, j: usize) -> Self {
        BasisInterval {
            a: -(n as i64) + k as i64 - j as i64,
            b: -(j as i64),
        }
    }
}

/// Simple integer pole with its exact residue.
#[derive(Debug, Clone, PartialEq)]
pub struct PoleData {
    pub location: i64,
    pub residue: Rat,
}

/// Finitely supported map `k → (G : f_{L,k})`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct CoeffTable {
    pub entries: BTreeMap<i64, Rat>,
}

impl CoeffTable {
    pub fn get(&self, k: i64) -> Rat {
        self.entries.get(&k).cloned().unwrap_or_else(Rat::zero)
    }
}

/// All poles of the normalized `H*(·;ν)` with exact residues. Every pole is
/// simple because the pole locations `ν_j − j` are strictly decreasing.
pub fn hstar_poles(nu: &Signature) -> Vec<PoleData> {
    let f = hstar_fn(nu);
    f.poles()
        .iter()
        .map(|p| {
            debug_assert!(p.is_integer());
            PoleData {
                location: i64::try_from(p.to_integer()).expect("pole fits i64"),
                residue: f.residue(p).expect("poles of H* are simple"),
            }
        })
        .collect()
}

fn validate_in_vl(g: &RationalFn, l: &BasisInterval) -> Result<Vec<PoleData>> {
    if l.n() < 2 {
        return Err(Error::Unsupported(format!(
            "coefficient extraction needs an interval of at least 2 points, got {}..{}",
            l.a, l.b
        )));
    }
    g.at_infinity()
        .map_err(|_| Error::Domain("function is unbounded at infinity".into()))?;
    let mut out = Vec::new();
    let mut seen = BTreeMap::new();
    for p in g.poles() {
        if !p.is_integer() {
            return Err(Error::Domain(format!("non-integer pole at {p}")));
        }
        let loc = i64::try_from(p.to_integer())
            .map_err(|_| Error::Domain(format!("pole {p} out of range")))?;
        *seen.entry(loc).or_insert(0usize) += 1;
        if loc >= l.a && loc <= l.b {
            return Err(Error::Domain(format!(
                "pole at {loc} inside the interval {}..{}",
                l.a, l.b
            )));
        }
    }
    for (loc, mult) in seen {
        if mult != 1 {
            return Err(Error::Domain(format!(
                "pole at {loc} has multiplicity {mult}, need simple poles"
            )));
        }
        out.push(PoleData {
            location: loc,
            residue: g.residue(&rat(loc))?,
        });
    }
    Ok(out)
}

fn coeff_from_poles(poles: &[PoleData], g_inf: &Rat, l: &BasisInterval, k: i64) -> Rat {
    let n = l.n();
    if k >= 1 {
        let mut s = Rat::zero();
        for p in poles {
            let m = p.location - l.b;
            if m >= k {
                s += pochhammer(&rat(m - k + 1), (n - 2) as u32)
                    / pochhammer(&rat(m), n as u32)
                    * &p.residue;
            }
        }
        rat(n - 1) * s
    } else if k <= -1 {
        let mut s = Rat::zero();
        for p in poles {
            let m = l.a - p.location;
            if m >= -k {
                s += pochhammer(&rat(m + k + 1), (n - 2) as u32)
                    / pochhammer(&rat(m), n as u32)
                    * &p.residue;
            }
        }
        -rat(n - 1) * s
    } else {
        let mut s = g_inf.clone();
        for p in poles {
            if p.location > l.b {
                let m = p.location - l.b;
                s -= &p.residue / rat(m + n - 1);
            } else {
                let m = l.a - p.location;
                s += &p.residue / rat(m + n - 1);
            }
        }
        s
    }
}

/// Expansion coefficient `(g : f_{L,k})` of a function `g ∈ V_L`.
pub fn basis_coeff(g: &RationalFn, l: &BasisInterval, k: i64) -> Result<Rat> {
    let poles = validate_in_vl(g, l)?;
    Ok(coeff_from_poles(&poles, &g.at_infinity()?, l, k))
}

/// Coefficients `(g : f_{L,k})` for `k_min ≤ k ≤ k_max`; zero entries are
/// omitted from the table.
pub fn basis_coeffs(
    g: &RationalFn,
    l: &BasisInterval,
    k_min: i64,
    k_max: i64,
) -> Result<CoeffTable> {
    let poles = validate_in_vl(g, l)?;
    let g_inf = g.at_infinity()?;
    let mut entries = BTreeMap::new();
    for k in k_min..=k_max {
        let c = coeff_from_poles(&poles, &g_inf, l, k);
        if !c.is_zero() {
            entries.insert(k, c);
        }
    }
    Ok(CoeffTable { entries })
}

/// The full (finite) support of the coefficient table of `g` against `L`.
pub fn basis_coeffs_full(g: &RationalFn, l: &BasisInterval) -> Result<CoeffTable> {
    let poles = validate_in_vl(g, l)?;
    let mut k_min = 0i64;
    let mut k_max = 0i64;
    for p in &poles {
        if p.location > l.b {
            k_max = k_max.max(p.location - l.b);
        } else {
            k_min = k_min.min(-(l.a - p.location));
        }
    }
    basis_coeffs(g, l, k_min, k_max)
}

/// `f_{L,k}(t) = ∏_{x∈L}(t−x) / ∏_{x∈L}(t−x−k)`.
pub fn f_basis_eval(l: &BasisInterval, k: i64, t: &Rat) -> Result<Rat> {
    let mut v = Rat::one();
    for x in l.a..=l.b {
        v *= t - rat(x);
    }
    for x in l.a..=l.b {
        let d = t - rat(x + k);
        if d.is_zero() {
            return Err(Error::Pole(format!("f_(L,{k}) has a pole at t = {t}")));
        }
        v /= d;
    }
    Ok(v)
}

/// `Σ_k c_k f_{L,k}(t)`.
pub fn reconstruct(coeffs: &CoeffTable, l: &BasisInterval, t: &Rat) -> Result<Rat> {
    let mut acc = Rat::zero();
    for (k, c) in &coeffs.entries {
        acc += c * f_basis_eval(l, *k, t)?;
    }
    Ok(acc)
}

fn check_k_lt_n(kappa: &Signature, nu: &Signature) -> Result<(usize, usize)> {
    let (k, n) = (kappa.len(), nu.len());
    if k == 0 || k >= n {
        return Err(Error::Dimension(format!(
            "need 1 <= K < N, got K={k}, N={n}"
        )));
    }
    Ok((k, n))
}

/// Relative dimension through the DP path count.
pub fn reldim_dp(kappa: &Signature, nu: &Signature) -> Result<Rat> {
    check_k_lt_n(kappa, nu)?;
    Ok(Rat::new(count_paths(kappa, nu)?, dim_weyl(nu)?))
}

/// Relative dimension by the Jacobi–Trudi-type formula:
/// `det[(H*(·;ν) : f_{L(N,j), κ_i−i+j})]_{i,j=1..K}`.
pub fn reldim_basis(kappa: &Signature, nu: &Signature) -> Result<Rat> {
    let (k, n) = check_k_lt_n(kappa, nu)?;
    let g = hstar_fn(nu);
    let poles = validate_in_vl(&g, &BasisInterval::sliding(n, k, 1))?;
    let g_inf = g.at_infinity()?;
    let m = RMatrix::from_fn(k, k, |i, j| {
        let l = BasisInterval::sliding(n, k, j + 1);
        let idx = kappa.part(i) - (i as i64 + 1) + (j as i64 + 1);
        coeff_from_poles(&poles, &g_inf, &l, idx)
    });
    rational_det(&m)
}

/// Relative dimension by the residue determinant `det[A_N(i,j)]`, where the
/// entries are weighted sums of residues of `H*(·;ν)` split by the sign of
/// `k = κ_i−i+j`. Exact for every `N > K`.
pub fn reldim_residue(kappa: &Signature, nu: &Signature) -> Result<Rat> {
    let (k_len, n) = check_k_lt_n(kappa, nu)?;
    let poles = hstar_poles(nu);
    let nk = (n - k_len) as i64;
    let entry = |i: usize, j1: i64| -> Rat {
        let k = kappa.part(i) - (i as i64 + 1) + j1;
        if k >= 1 {
            let mut s = Rat::zero();
            for p in &poles {
                let m = p.location + j1;
                if m >= k {
                    s += pochhammer(&rat(m - k + 1), (nk - 1) as u32)
                        / pochhammer(&rat(m), (nk + 1) as u32)
                        * &p.residue;
                }
            }
            rat(nk) * s
        } else if k <= -1 {
            let mut s = Rat::zero();
            for p in &poles {
                let m = -(n as i64) + k_len as i64 - j1 - p.location;
                if m >= -k {
                    s += pochhammer(&rat(m + k + 1), (nk - 1) as u32)
                        / pochhammer(&rat(m), (nk + 1) as u32)
                        * &p.residue;
                }
            }
            -rat(nk) * s
        } else {
            let mut s = Rat::one();
            for p in &poles {
                let m = p.location + j1;
                if m >= 1 {
                    s -= &p.residue / rat(m + nk);
                }
                let m2 = -(n as i64) + k_len as i64 - j1 - p.location;
                if m2 >= 1 {
                    s += &p.residue / rat(m2 + nk);
                }
            }
            s
        }
    };
    let m = RMatrix::from_fn(k_len, k_len, |i, j| entry(i, j as i64 + 1));
    rational_det(&m)
}

/// Residue determinant with sums re-indexed over actual pole locations.
///
/// The re-indexing silently extends each sum by the terms `1 ≤ m < |k|`; the
/// extension is valid only when every such term carries a vanishing factor
/// `(m−|k|+1)_{N−K−1}`. That condition is checked explicitly and a violation
/// is refused, naming the offending `(i, j, m)`.
pub fn reldim_residue_shifted(kappa: &Signature, nu: &Signature) -> Result<Rat> {
    let (k_len, n) = check_k_lt_n(kappa, nu)?;
    let nk = (n - k_len) as i64;
    let poles = hstar_poles(nu);
    let has_pole = |loc: i64| poles.iter().any(|p| p.location == loc);
    for i in 0..k_len {
        for j1 in 1..=k_len as i64 {
            let k = kappa.part(i) - (i as i64 + 1) + j1;
            for m in 1..k.abs() {
                let factor = pochhammer(&rat(m - k.abs() + 1), (nk - 1) as u32);
                if factor.is_zero() {
                    continue;
                }
                // the term still vanishes if H* has no pole at its site
                let site = if k >= 1 {
                    -j1 + m
                } else {
                    -(n as i64) + k_len as i64 - j1 - m
                };
                if has_pole(site) {
                    return Err(Error::Precondition(format!(
                        "extended term at (i={}, j={}, m={}) lacks a vanishing factor; \
                         the re-indexed sums are not valid for this (kappa, N)",
                        i + 1,
                        j1,
                        m
                    )));
                }
            }
        }
    }
    let entry = |i: usize, j1: i64| -> Rat {
        let k = kappa.part(i) - (i as i64 + 1) + j1;
        if k >= 1 {
            let mut s = Rat::zero();
            for p in &poles {
                let l = p.location;
                if l >= 0 {
                    s += pochhammer(&rat(l + j1 - k + 1), (k - 1) as u32)
                        / pochhammer(&rat(l + j1 - k + nk), (k + 1) as u32)
                        * &p.residue;
                }
            }
            rat(nk) * s
        } else if k <= -1 {
            let mut s = Rat::zero();
            for p in &poles {
                let l = p.location;
                if l < -(n as i64) {
                    s += pochhammer(&rat(l + j1 + nk + 1), (-k - 1) as u32)
                        / pochhammer(&rat(l + j1), (-k + 1) as u32)
                        * &p.residue;
                }
            }
            -rat(nk) * s
        } else {
            let mut s = Rat::one();
            for p in &poles {
                let l = p.location;
                if l >= 0 {
                    s -= &p.residue / rat(l + j1 + nk);
                } else if l < -(n as i64) {
                    // re-indexing m = -N+K-j-l keeps the + sign of the
                    // original left sum
                    s += &p.residue / rat(-l - j1);
                }
            }
            s
        }
    };
    let m = RMatrix::from_fn(k_len, k_len, |i, j| entry(i, j as i64 + 1));
    rational_det(&m)
}

/// Stochastic link `Λ^N_K(ν,κ) = Dim_K κ · Dim_{K,N}(κ,ν) / Dim_N ν`.
pub fn markov_nk(nu: &Signature, kappa: &Signature) -> Result<Rat> {
    check_k_lt_n(kappa, nu)?;
    Ok(Rat::from_integer(dim_weyl(kappa)?) * reldim_dp(kappa, nu)?)
}

/// The full row `Λ^N_K(ν, ·)` over its finite support.
pub fn markov_row(nu: &Signature, k: usize) -> Result<Vec<(Signature, Rat)>> {
    if k < 1 || k >= nu.len() {
        return Err(Error::Dimension(format!(
            "need 1 <= K < N, got K={k}, N={}",
            nu.len()
        )));
    }
    let dim_nu = Rat::from_integer(dim_weyl(nu)?);
    level_counts(nu, k)?
        .into_iter()
        .map(|(kap, c)| {
            let w = Rat::from_integer(dim_weyl(&kap)?) * Rat::from_integer(c) / &dim_nu;
            Ok((kap, w))
        })
        .collect()
}

/// Both sides of the generating expansion
/// `H*(t_1,…,t_K;ν) = Σ_κ (Dim_{K,N}(κ,ν)/Dim_N ν) 𝔖_{κ|N}(t_1,…,t_K)`,
/// summed over the exact finite support `{κ : Dim_{K,N}(κ,ν) > 0}`.
pub fn genfun_check(nu: &Signature, k: usize, t: &[Rat]) -> Result<(Rat, Rat)> {
    let n = nu.len();
    if k < 1 || k >= n {
        return Err(Error::Dimension(format!(
            "need 1 <= K < N, got K={k}, N={n}"
        )));
    }
    if t.len() != k {
        return Err(Error::Dimension(format!(
            "need {k} points, got {}",
            t.len()
        )));
    }
    let lhs = hstar_multi(nu, t)?;
    let dim_nu = Rat::from_integer(dim_weyl(nu)?);
    let mut rhs = Rat::zero();
    for (kap, c) in level_counts(nu, k)? {
        if c.is_zero() {
            continue;
        }
        rhs += Rat::new(c, Int::one()) / &dim_nu * sf_eval(&kap, n as i64, t)?;
    }
    Ok((lhs, rhs))
}
