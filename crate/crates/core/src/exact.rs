//! Arbitrary-precision rational arithmetic, rational functions given by their
//! root/pole multisets, fraction-free determinants, and exact Laurent windows.
//!
//! Every value here is exact: no floating point enters any code path in this
//! module. `Rat` is `num::BigRational`, which maintains lowest terms and a
//! positive denominator by construction.

use crate::error::{Error, Result};
use num::{BigInt, BigRational, One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

pub type Int = BigInt;
pub type Rat = BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Quotient of two machine integers as an exact rational.
pub fn ratio(p: i64, q: i64) -> Rat {
    Rat::new(Int::from(p), Int::from(q))
}

/// Parse `p/q` or a plain integer string.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<Int> {
        t.trim()
            .parse::<Int>()
            .map_err(|_| Error::Domain(format!("not an integer: {t:?}")))
    };
    match s.split_once('/') {
        None => Ok(Rat::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(Error::Domain(format!("zero denominator in {s:?}")));
            }
            Ok(Rat::new(parse_int(p)?, den))
        }
    }
}

/// Nearest double; used only where a numeric answer is requested.
pub fn to_f64(r: &Rat) -> f64 {
    use num::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Render a rational as `p/q`. With `strict`, integers print as `n/1`;
/// otherwise they print as a plain `n`.
pub fn fmt_rat(r: &Rat, strict: bool) -> String {
    if strict {
        format!("{}/{}", r.numer(), r.denom())
    } else {
        format!("{r}")
    }
}

/// Exact binomial coefficient.
pub fn binom_int(n: u64, k: u64) -> Int {
    if k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for i in 0..k {
        acc = acc * Int::from(n - i) / Int::from(i + 1);
    }
    acc
}

/// `Γ(t+a)/Γ(t+b)` with integer offsets, as the finite product
/// `(t+b)(t+b+1)…(t+a−1)` when `a ≥ b`, and its reciprocal otherwise.
///
/// A vanishing factor in the reciprocal range is a genuine pole and is
/// reported as an error; in the direct range it legitimately yields 0.
pub fn gamma_ratio(t: &Rat, a: i64, b: i64) -> Result<Rat> {
    let prod = |lo: i64, hi: i64| -> Rat {
        let mut acc = Rat::one();
        for m in lo..hi {
            acc *= t + rat(m);
        }
        acc
    };
    if a >= b {
        Ok(prod(b, a))
    } else {
        let p = prod(a, b);
        if p.is_zero() {
            return Err(Error::Pole(format!(
                "gamma_ratio({t}, {a}, {b}): factor vanishes in reciprocal range"
            )));
        }
        Ok(p.recip())
    }
}

/// Falling factorial power `x(x−1)…(x−m+1)`; 1 when `m = 0`.
pub fn falling_power(x: &Rat, m: u32) -> Rat {
    let mut acc = Rat::one();
    for i in 0..m {
        acc *= x - rat(i as i64);
    }
    acc
}

/// Rising factorial `x(x+1)…(x+m−1)`; 1 when `m = 0`.
pub fn pochhammer(x: &Rat, m: u32) -> Rat {
    let mut acc = Rat::one();
    for i in 0..m {
        acc *= x + rat(i as i64);
    }
    acc
}

/// Dense matrix of exact rationals, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct RMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<Rat>,
}

impl RMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rat>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(RMatrix { rows, cols, entries })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        RMatrix { rows, cols, entries }
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.cols + j]
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Denominators are cleared row by row first, so the elimination runs over
/// `BigInt` with exact divisions only; the cleared factors are divided back
/// at the end.
pub fn rational_det(m: &RMatrix) -> Result<Rat> {
    if m.rows != m.cols {
        return Err(Error::Dimension(format!(
            "determinant of non-square {}x{} matrix",
            m.rows, m.cols
        )));
    }
    let n = m.rows;
    if n == 0 {
        return Ok(Rat::one());
    }
    // Clear denominators: scale row i by the lcm of its denominators.
    let mut scale = Int::one();
    let mut a: Vec<Vec<Int>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut l = Int::one();
        for j in 0..n {
            l = num::integer::lcm(l, m.get(i, j).denom().clone());
        }
        let row: Vec<Int> = (0..n)
            .map(|j| {
                let e = m.get(i, j);
                e.numer() * (&l / e.denom())
            })
            .collect();
        scale *= l;
        a.push(row);
    }

    let mut sign = 1i32;
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(Rat::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = t / &prev;
            }
            a[i][k] = Int::zero();
        }
        prev = a[k][k].clone();
    }
    let mut det = Rat::new(a[n - 1][n - 1].clone(), scale);
    if sign < 0 {
        det = -det;
    }
    Ok(det)
}

/// Rational function `scalar · ∏(x−zero) / ∏(x−pole)` with rational root and
/// pole locations kept as multisets.
///
/// Construction cancels zero/pole pairs at equal locations with multiplicity,
/// so a normalized function has disjoint zero and pole multisets.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalFn {
    scalar: Rat,
    zeros: Vec<Rat>,
    poles: Vec<Rat>,
}

impl RationalFn {
    pub fn new(scalar: Rat, zeros: Vec<Rat>, poles: Vec<Rat>) -> Self {
        let mut zs = zeros;
        let mut ps: Vec<Option<Rat>> = poles.into_iter().map(Some).collect();
        zs.sort();
        for p in ps.iter_mut() {
            let loc = p.as_ref().unwrap();
            if let Ok(idx) = zs.binary_search(loc) {
                zs.remove(idx);
                *p = None;
            }
        }
        let mut poles: Vec<Rat> = ps.into_iter().flatten().collect();
        poles.sort();
        RationalFn { scalar, zeros: zs, poles }
    }

    /// The constant function `c`.
    pub fn constant(c: Rat) -> Self {
        RationalFn { scalar: c, zeros: vec![], poles: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn scalar(&self) -> &Rat {
        &self.scalar
    }

    pub fn zeros(&self) -> &[Rat] {
        &self.zeros
    }

    pub fn poles(&self) -> &[Rat] {
        &self.poles
    }

    pub fn is_pole(&self, x: &Rat) -> bool {
        self.poles.binary_search(x).is_ok()
    }

    /// Exact evaluation; `x` must not be a pole of the normalized function.
    pub fn eval(&self, x: &Rat) -> Result<Rat> {
        if self.is_pole(x) {
            return Err(Error::Pole(format!("evaluation at pole x = {x}")));
        }
        let mut v = self.scalar.clone();
        for z in &self.zeros {
            v *= x - z;
        }
        for p in &self.poles {
            v /= x - p;
        }
        Ok(v)
    }

    /// Value at infinity: `scalar` when `#zeros = #poles`, `0` when the poles
    /// dominate; an error when the function is unbounded.
    pub fn at_infinity(&self) -> Result<Rat> {
        use std::cmp::Ordering::*;
        match self.zeros.len().cmp(&self.poles.len()) {
            Less => Ok(Rat::zero()),
            Equal => Ok(self.scalar.clone()),
            Greater => Err(Error::Domain("unbounded at infinity".into())),
        }
    }

    /// Residue at a simple pole `p` of the normalized function.
    pub fn residue(&self, p: &Rat) -> Result<Rat> {
        let mult = self.poles.iter().filter(|q| *q == p).count();
        if mult != 1 {
            return Err(Error::Domain(format!(
                "residue at {p}: pole multiplicity {mult}, need a simple pole"
            )));
        }
        let mut r = self.scalar.clone();
        for z in &self.zeros {
            r *= p - z;
        }
        for q in &self.poles {
            if q != p {
                r /= p - q;
            }
        }
        Ok(r)
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.scalar)?;
        for z in &self.zeros {
            write!(f, "*(x-({z}))")?;
        }
        for p in &self.poles {
            write!(f, "/(x-({p}))")?;
        }
        Ok(())
    }
}

/// Contiguous window of exact Laurent coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentWindow {
    pub n_min: i64,
    pub coeffs: Vec<Rat>,
}

impl LaurentWindow {
    pub fn n_max(&self) -> i64 {
        self.n_min + self.coeffs.len() as i64 - 1
    }

    /// Coefficient at index `n`; indices outside the window panic.
    pub fn get(&self, n: i64) -> &Rat {
        assert!(
            n >= self.n_min && n <= self.n_max(),
            "index {n} outside window [{}..{}]",
            self.n_min,
            self.n_max()
        );
        &self.coeffs[(n - self.n_min) as usize]
    }
}

// ---- dense polynomial helpers over Rat (ascending coefficients) ----

fn poly_from_roots(roots: &[Rat]) -> Vec<Rat> {
    let mut p = vec![Rat::one()];
    for r in roots {
        let mut q = vec![Rat::zero(); p.len() + 1];
        for (i, c) in p.iter().enumerate() {
            q[i + 1] += c;
            q[i] -= c * r;
        }
        p = q;
    }
    p
}

fn poly_divmod(num: &[Rat], den: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let dd = den.len() - 1;
    assert!(!den[dd].is_zero());
    if num.len() <= dd {
        return (vec![Rat::zero()], num.to_vec());
    }
    let mut rem = num.to_vec();
    let mut quo = vec![Rat::zero(); num.len() - dd];
    for i in (dd..num.len()).rev() {
        let c = &rem[i] / &den[dd];
        quo[i - dd] = c.clone();
        if !c.is_zero() {
            for (j, d) in den.iter().enumerate() {
                let t = &c * d;
                rem[i - dd + j] -= t;
            }
        }
    }
    while rem.len() > 1 && rem.last().unwrap().is_zero() {
        rem.pop();
    }
    (quo, rem)
}

/// Coefficients of `p(c + v)` in `v` (Taylor shift), by repeated synthetic
/// division by `(x − c)`.
fn poly_shift(p: &[Rat], c: &Rat) -> Vec<Rat> {
    let mut work = p.to_vec();
    let mut out = Vec::with_capacity(p.len());
    for _ in 0..p.len() {
        // divide work by (x - c): remainder is work(c)
        let mut acc = Rat::zero();
        for k in (0..work.len()).rev() {
            acc = &acc * c + &work[k];
            work[k] = acc.clone();
        }
        let rem = work.remove(0);
        out.push(rem);
        // work now holds the quotient shifted down by one
        if work.is_empty() {
            break;
        }
    }
    out
}

/// First `m` coefficients of the power series `a(v)/b(v)`, requiring `b(0) ≠ 0`.
fn series_div(a: &[Rat], b: &[Rat], m: usize) -> Vec<Rat> {
    assert!(!b[0].is_zero());
    let mut c = Vec::with_capacity(m);
    for k in 0..m {
        let mut t = a.get(k).cloned().unwrap_or_else(Rat::zero);
        for (i, ci) in c.iter().enumerate() {
            if let Some(bj) = b.get(k - i) {
                t -= ci as &Rat * bj;
            }
        }
        c.push(t / &b[0]);
    }
    c
}

fn rat_pow(p: &Rat, e: u64) -> Rat {
    let mut acc = Rat::one();
    let mut base = p.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        base = &base * &base;
        e >>= 1;
    }
    acc
}

/// Exact Laurent coefficients of `f` on the unit circle for indices
/// `n_min ≤ n ≤ n_max`.
///
/// The expansion is obtained from the exact partial-fraction decomposition:
/// poles inside the unit circle feed negative powers, poles outside feed
/// nonnegative powers, each through a binomial/geometric series. The result
/// does not depend on the window bounds: extending the window never changes
/// shared entries.
pub fn laurent_window(f: &RationalFn, n_min: i64, n_max: i64) -> Result<LaurentWindow> {
    if n_min > n_max {
        return Err(Error::Domain(format!("empty window {n_min}..{n_max}")));
    }
    let one = Rat::one();
    for p in f.poles() {
        if p.abs() == one {
            return Err(Error::Unsupported(format!(
                "pole at {p} on the unit circle: no Laurent expansion on the annulus"
            )));
        }
    }

    let width = (n_max - n_min + 1) as usize;
    let mut coeffs = vec![Rat::zero(); width];
    let mut add = |n: i64, v: Rat| {
        if n >= n_min && n <= n_max {
            coeffs[(n - n_min) as usize] += v;
        }
    };

    let num = {
        let mut p = poly_from_roots(f.zeros());
        for c in p.iter_mut() {
            *c *= f.scalar();
        }
        p
    };
    let den = poly_from_roots(f.poles());
    let (quo, rem) = poly_divmod(&num, &den);

    // polynomial part feeds nonnegative powers directly
    for (i, c) in quo.iter().enumerate() {
        if !c.is_zero() {
            add(i as i64, c.clone());
        }
    }

    // group the poles by location with multiplicity
    let mut groups: BTreeMap<Rat, usize> = BTreeMap::new();
    for p in f.poles() {
        *groups.entry(p.clone()).or_insert(0) += 1;
    }

    for (p, &m) in &groups {
        // cofactor denominator without this pole
        let others: Vec<Rat> = f
            .poles()
            .iter()
            .filter(|q| *q != p)
            .cloned()
            .collect();
        let cof = poly_from_roots(&others);
        // Taylor expansion of rem/cof at p gives the principal coefficients:
        // rem/den = sum_{r=1..m} c_r/(u-p)^r + regular,  c_{m-i} = S[i].
        let rs = poly_shift(&rem, p);
        let cs = poly_shift(&cof, p);
        let s = series_div(&rs, &cs, m);
        for (i, c) in s.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let r = (m - i) as i64; // order of the 1/(u-p)^r term
            if p.is_zero() {
                // c/u^r contributes only at n = -r
                add(-r, c.clone());
            } else if p.abs() < one {
                // c/(u-p)^r = c * u^-r * (1 - p/u)^-r: negative powers
                for n in n_min..=(-r).min(n_max) {
                    let i_off = (-n - r) as u64;
                    let w = binom_int((-n - 1) as u64, (r - 1) as u64);
                    add(n, c * Rat::from_integer(w) * rat_pow(p, i_off));
                }
            } else {
                // c/(u-p)^r = c(-1)^r p^-r (1 - u/p)^-r: nonnegative powers
                let sign = if r % 2 == 0 { Rat::one() } else { -Rat::one() };
                for n in n_min.max(0)..=n_max {
                    let w = binom_int((r - 1 + n) as u64, n as u64);
                    let pw = rat_pow(p, (r + n) as u64).recip();
                    add(n, c * &sign * Rat::from_integer(w) * pw);
                }
            }
        }
    }

    Ok(LaurentWindow { n_min, coeffs })
}
