//! Signatures, interlacing, path counting in the Gelfand–Tsetlin graph,
//! the Weyl dimension formula, rational Schur evaluation, weight
//! multiplicities, and modified Frobenius coordinates.
//!
//! The path-counting dynamic program is the combinatorial oracle the rest of
//! the crate is checked against: it walks level by level from the top row down,
//! enumerating interlacing predecessors, so every count is a finite exact sum.

use crate::error::{Error, Result};
use crate::exact::{rat, ratio, rational_det, Int, RMatrix, Rat};
use num::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Weakly decreasing integer tuple; a vertex of level `N` in the graph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Signature(Vec<i64>);

impl Signature {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!(
                "not weakly decreasing: {parts:?}"
            )));
        }
        Ok(Signature(parts))
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn part(&self, i: usize) -> i64 {
        self.0[i]
    }

    /// Sum of the parts.
    pub fn weight(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Reflection `ν̂ = (−ν_N, …, −ν_1)`.
    pub fn reflect(&self) -> Signature {
        Signature(self.0.iter().rev().map(|x| -x).collect())
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// All signatures of the given length with parts in `[lo, hi]`.
pub fn signatures_in_box(len: usize, lo: i64, hi: i64) -> Vec<Signature> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn rec(out: &mut Vec<Signature>, cur: &mut Vec<i64>, len: usize, lo: i64, top: i64) {
        if cur.len() == len {
            out.push(Signature(cur.clone()));
            return;
        }
        for v in (lo..=top).rev() {
            cur.push(v);
            rec(out, cur, len, lo, v);
            cur.pop();
        }
    }
    rec(&mut out, &mut cur, len, lo, hi);
    out
}

/// `λ ≺ ν`: does `λ` interlace `ν` (lengths N−1 and N)?
pub fn interlaces(lambda: &Signature, nu: &Signature) -> Result<bool> {
    if lambda.len() + 1 != nu.len() {
        return Err(Error::Dimension(format!(
            "interlacing needs lengths N-1 and N, got {} and {}",
            lambda.len(),
            nu.len()
        )));
    }
    Ok((0..lambda.len()).all(|i| nu.part(i + 1) <= lambda.part(i) && lambda.part(i) <= nu.part(i)))
}

/// All `λ` of length N−1 with `λ ≺ ν`.
pub fn lower_neighbors(nu: &Signature) -> Vec<Signature> {
    let n = nu.len();
    if n == 0 {
        return vec![];
    }
    if n == 1 {
        return vec![Signature(vec![])];
    }
    let mut out = Vec::new();
    let mut cur = vec![0i64; n - 1];
    fn rec(nu: &[i64], cur: &mut Vec<i64>, i: usize, out: &mut Vec<Signature>) {
        if i == cur.len() {
            out.push(Signature(cur.clone()));
            return;
        }
        for v in nu[i + 1]..=nu[i] {
            cur[i] = v;
            rec(nu, cur, i + 1, out);
        }
    }
    rec(nu.parts(), &mut cur, 0, &mut out);
    out
}

/// Weyl dimension formula `Dim_N ν = ∏_{i<j} (ν_i−ν_j+j−i)/(j−i)`.
///
/// The quotient is asserted to be an exact positive integer.
pub fn dim_weyl(nu: &Signature) -> Result<Int> {
    let n = nu.len();
    if n == 0 {
        return Err(Error::Dimension("dim_weyl of empty signature".into()));
    }
    let mut num = Int::one();
    let mut den = Int::one();
    for i in 0..n {
        for j in i + 1..n {
            num *= Int::from(nu.part(i) - nu.part(j) + (j as i64) - (i as i64));
            den *= Int::from((j - i) as i64);
        }
    }
    let (q, r) = num::integer::div_rem(num, den);
    assert!(r.is_zero(), "Weyl product must be an integer");
    assert!(q.is_positive(), "Weyl dimension must be positive");
    Ok(q)
}

/// Number of interlacing chains from every vertex of level `k` up to `ν`,
/// as a map over the (finite) support at level `k`.
pub fn level_counts(nu: &Signature, k: usize) -> Result<BTreeMap<Signature, Int>> {
    let n = nu.len();
    if k < 1 || k > n {
        return Err(Error::Dimension(format!(
            "level {k} outside 1..={n}"
        )));
    }
    let mut cur: BTreeMap<Signature, Int> = BTreeMap::new();
    cur.insert(nu.clone(), Int::one());
    for _level in (k..n).rev() {
        let mut next: BTreeMap<Signature, Int> = BTreeMap::new();
        for (mu, c) in &cur {
            for lam in lower_neighbors(mu) {
                *next.entry(lam).or_insert_with(Int::zero) += c;
            }
        }
        cur = next;
    }
    Ok(cur)
}

/// `Dim_{K,N}(κ,ν)`: the number of trapezoidal schemes with top row `ν` and
/// bottom row `κ`; the Kronecker delta when `K = N`.
pub fn count_paths(kappa: &Signature, nu: &Signature) -> Result<Int> {
    let (k, n) = (kappa.len(), nu.len());
    if k < 1 || k > n {
        return Err(Error::Dimension(format!(
            "need 1 <= K <= N, got K={k}, N={n}"
        )));
    }
    if k == n {
        return Ok(if kappa == nu { Int::one() } else { Int::zero() });
    }
    Ok(level_counts(nu, k)?
        .remove(kappa)
        .unwrap_or_else(Int::zero))
}

/// `Dim_N ν` by explicit path counting; agrees with [`dim_weyl`].
pub fn dim_paths(nu: &Signature) -> Result<Int> {
    if nu.is_empty() {
        return Err(Error::Dimension("dim_paths of empty signature".into()));
    }
    Ok(level_counts(nu, 1)?.values().sum())
}

/// Modified Frobenius coordinates `(a_i, b_i)` of a Young diagram.
#[derive(Debug, Clone, PartialEq)]
pub struct FrobeniusCoords {
    pub pairs: Vec<(Rat, Rat)>,
}

impl FrobeniusCoords {
    /// `Σ (a_i + b_i)`, which equals the number of boxes.
    pub fn total(&self) -> Rat {
        self.pairs
            .iter()
            .map(|(a, b)| a + b)
            .fold(Rat::zero(), |acc, x| acc + x)
    }
}

/// Conjugate (transposed) diagram of a partition given by its parts.
fn conjugate(parts: &[i64]) -> Vec<i64> {
    let rows: Vec<i64> = parts.iter().copied().filter(|&x| x > 0).collect();
    let width = rows.first().copied().unwrap_or(0);
    (1..=width)
        .map(|c| rows.iter().filter(|&&r| r >= c).count() as i64)
        .collect()
}

/// Modified Frobenius coordinates `a_i = λ_i − i + 1/2`, `b_i = λ'_i − i + 1/2`
/// for `i = 1..d(λ)`, where `d` is the number of diagonal boxes.
pub fn frobenius(diagram: &Signature) -> Result<FrobeniusCoords> {
    if diagram.parts().iter().any(|&x| x < 0) {
        return Err(Error::Domain(format!(
            "frobenius needs a Young diagram (nonnegative parts), got {diagram}"
        )));
    }
    let lam: Vec<i64> = diagram.parts().iter().copied().filter(|&x| x > 0).collect();
    let lam_t = conjugate(&lam);
    let d = (0..lam.len())
        .take_while(|&i| lam[i] >= (i + 1) as i64)
        .count();
    let pairs = (0..d)
        .map(|i| {
            let a = rat(lam[i] - (i as i64 + 1)) + ratio(1, 2);
            let b = rat(lam_t[i] - (i as i64 + 1)) + ratio(1, 2);
            (a, b)
        })
        .collect();
    Ok(FrobeniusCoords { pairs })
}

/// Weight multiplicity `c(ν; n_1, …, n_N)`: the number of triangular schemes
/// with top row `ν` whose row sums increase by `n_j` at level `j`.
pub fn weight_multiplicity(nu: &Signature, weights: &[i64]) -> Result<Int> {
    let n = nu.len();
    if weights.len() != n {
        return Err(Error::Dimension(format!(
            "need {n} weights, got {}",
            weights.len()
        )));
    }
    if n == 0 {
        return Err(Error::Dimension("empty signature".into()));
    }
    let total: i64 = weights.iter().sum();
    if total != nu.weight() {
        return Ok(Int::zero());
    }
    // prefix[j] = required row sum at level j+1
    let prefix: Vec<i64> = weights
        .iter()
        .scan(0i64, |acc, w| {
            *acc += w;
            Some(*acc)
        })
        .collect();
    let mut cur: BTreeMap<Signature, Int> = BTreeMap::new();
    cur.insert(nu.clone(), Int::one());
    for level in (1..n).rev() {
        let want = prefix[level - 1];
        let mut next: BTreeMap<Signature, Int> = BTreeMap::new();
        for (mu, c) in &cur {
            for lam in lower_neighbors(mu) {
                if lam.weight() == want {
                    *next.entry(lam).or_insert_with(Int::zero) += c;
                }
            }
        }
        cur = next;
    }
    Ok(cur.values().sum())
}

/// Rational Schur function `S_ν(u_1,…,u_N) = det[u_i^{ν_j+N−j}] / ∏_{i<j}(u_i−u_j)`.
///
/// The points must be pairwise distinct and nonzero (negative parts require
/// invertible arguments).
pub fn schur_eval(nu: &Signature, points: &[Rat]) -> Result<Rat> {
    let n = nu.len();
    if points.len() != n {
        return Err(Error::Dimension(format!(
            "need {n} points, got {}",
            points.len()
        )));
    }
    if n == 0 {
        return Err(Error::Dimension("empty signature".into()));
    }
    for (i, u) in points.iter().enumerate() {
        if u.is_zero() {
            return Err(Error::Domain("zero evaluation point".into()));
        }
        for v in &points[i + 1..] {
            if u == v {
                return Err(Error::Domain(format!("repeated evaluation point {u}")));
            }
        }
    }
    let m = RMatrix::from_fn(n, n, |i, j| {
        let e = nu.part(j) + (n as i64) - (j as i64 + 1);
        points[i].pow(e as i32)
    });
    let mut det = rational_det(&m)?;
    for i in 0..n {
        for j in i + 1..n {
            det /= &points[i] - &points[j];
        }
    }
    Ok(det)
}

/// `S_ν(u_1,…,u_K, 1,…,1)` with `N−K` ones, evaluated exactly through the
/// branching rule (repeated points are not valid bialternant arguments).
pub fn schur_eval_padded_ones(nu: &Signature, points: &[Rat]) -> Result<Rat> {
    let k = points.len();
    let n = nu.len();
    if k > n || k < 1 {
        return Err(Error::Dimension(format!(
            "need 1 <= K <= N, got K={k}, N={n}"
        )));
    }
    if k == n {
        return schur_eval(nu, points);
    }
    let mut acc = Rat::zero();
    for lam in lower_neighbors(nu) {
        acc += schur_eval_padded_ones(&lam, points)?;
    }
    Ok(acc)
}
