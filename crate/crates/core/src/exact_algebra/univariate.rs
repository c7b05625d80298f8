//! Dense univariate polynomials over Q with the handful of operations the
//! binary-form layer needs: Euclidean gcd, Yun's squarefree split, rational
//! root isolation and a bounded Kronecker search for small factors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Coefficients in ascending order of degree; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    c: Vec<BigRational>,
}

impl UniPoly {
    pub fn new(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UniPoly { c }
    }

    pub fn from_ints(c: &[BigInt]) -> Self {
        Self::new(c.iter().map(|x| BigRational::from_integer(x.clone())).collect())
    }

    pub fn zero() -> Self {
        UniPoly { c: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly { c: vec![BigRational::one()] }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> BigRational {
        self.c.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, x)| x * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        Self::new(self.c.iter().map(|x| x * s).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lead().recip();
        self.scale(&inv)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let z = BigRational::zero();
        Self::new(
            (0..n)
                .map(|i| self.c.get(i).unwrap_or(&z) + o.c.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let z = BigRational::zero();
        Self::new(
            (0..n)
                .map(|i| self.c.get(i).unwrap_or(&z) - o.c.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.c.len() - 1;
        let lead_inv = d.lead().recip();
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![BigRational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let coef = &r[k + dd] * &lead_inv;
            if !coef.is_zero() {
                for (j, dc) in d.c.iter().enumerate() {
                    r[k + j] -= &coef * dc;
                }
            }
            q[k] = coef;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    /// Exact division; the caller guarantees `d` divides `self`.
    pub fn div_exact(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd (zero only when both inputs are zero).
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.c.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Primitive integer coefficients with positive leading coefficient.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        primitive_integer(&self.c)
    }

    /// Yun's squarefree decomposition of a nonconstant polynomial: returns
    /// `(factor, multiplicity)` pairs with monic, squarefree, pairwise coprime
    /// factors. Constant polynomials give an empty list.
    pub fn yun(&self) -> Vec<(UniPoly, u32)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.div_exact(&a0);
        let mut c = fp.div_exact(&a0);
        let mut d = c.sub(&b.derivative());
        let mut i = 1u32;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            b = b.div_exact(&a);
            c = d.div_exact(&a);
            d = c.sub(&b.derivative());
            if a.degree().unwrap_or(0) > 0 {
                out.push((a, i));
            }
            i += 1;
        }
        out
    }

    /// Distinct rational roots, ascending.
    pub fn rational_roots(&self) -> Vec<BigRational> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        // Work with the squarefree part, primitive over Z.
        let g = self.gcd(&self.derivative());
        let sf = self.div_exact(&g);
        let mut coeffs = sf.primitive_integer();
        let mut roots = Vec::new();
        if coeffs[0].is_zero() {
            roots.push(BigRational::zero());
            coeffs.remove(0);
        }
        let p = UniPoly::from_ints(&coeffs);
        if p.degree().unwrap_or(0) == 0 {
            return roots;
        }
        let lead = coeffs.last().unwrap().abs();
        // Cauchy bound
        let max_ratio = coeffs
            .iter()
            .take(coeffs.len() - 1)
            .map(|c| BigRational::new(c.abs(), lead.clone()))
            .max()
            .unwrap_or_else(BigRational::zero);
        let bound = max_ratio + BigRational::one();
        let sturm = sturm_sequence(&p);
        // Distinct rationals with denominators dividing `lead` are at least
        // 1/lead^2 apart, so an isolating interval narrower than that holds at
        // most one candidate: the simplest fraction inside it.
        let width = BigRational::new(BigInt::one(), &lead * &lead * BigInt::from(2));
        // Invariant: endpoints are never roots; the count is for (lo, hi).
        let mut stack = vec![(-bound.clone(), bound)];
        while let Some((lo, hi)) = stack.pop() {
            let n = sign_changes_at(&sturm, &lo) - sign_changes_at(&sturm, &hi);
            if n == 0 {
                continue;
            }
            if n == 1 && &hi - &lo < width {
                let cand = simplest_between(&lo, &hi);
                if p.eval(&cand).is_zero() {
                    roots.push(cand);
                }
                continue;
            }
            let split = split_point(&p, &lo, &hi);
            stack.push((lo, split.clone()));
            stack.push((split, hi));
        }
        roots.sort();
        roots.dedup();
        roots
    }
}

/// Primitive integer multiple (content 1, positive leading coefficient) of
/// a rational coefficient vector; the leading coefficient is the last
/// nonzero entry.
pub fn primitive_integer(c: &[BigRational]) -> Vec<BigInt> {
    let den = c.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut ints: Vec<BigInt> = c.iter().map(|x| (x * BigRational::from_integer(den.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    let lead_neg = ints.iter().rev().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    for x in ints.iter_mut() {
        *x = &*x / &g;
        if lead_neg {
            *x = -&*x;
        }
    }
    ints
}

/// A point strictly inside `(lo, hi)`, near the middle, where `p` does not
/// vanish.
fn split_point(p: &UniPoly, lo: &BigRational, hi: &BigRational) -> BigRational {
    let span = hi - lo;
    for den in 2i64.. {
        for num in [den / 2, den / 2 + 1, den / 2 - 1] {
            if num <= 0 || num >= den {
                continue;
            }
            let x = lo + &span * BigRational::new(BigInt::from(num), BigInt::from(den));
            if !p.eval(&x).is_zero() {
                return x;
            }
        }
    }
    unreachable!()
}

fn sturm_sequence(p: &UniPoly) -> Vec<UniPoly> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(r.scale(&-BigRational::one()));
    }
    seq
}

fn sign_changes_at(seq: &[UniPoly], x: &BigRational) -> i64 {
    let mut last = 0i8;
    let mut changes = 0;
    for q in seq {
        let v = q.eval(x);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
    }
    changes
}

/// The fraction with the smallest denominator in the closed interval
/// `[lo, hi]` (Stern–Brocot descent via continued fractions).
pub fn simplest_between(lo: &BigRational, hi: &BigRational) -> BigRational {
    debug_assert!(lo <= hi);
    if lo.is_negative() && hi.is_positive() || lo.is_zero() || hi.is_zero() {
        return BigRational::zero();
    }
    if hi.is_negative() {
        return -simplest_between(&-hi.clone(), &-lo.clone());
    }
    let fl = lo.floor();
    if &fl == lo {
        return fl;
    }
    if fl.clone() + BigRational::one() <= *hi {
        return fl + BigRational::one();
    }
    // lo and hi share the integer part: recurse on reciprocals of the
    // fractional parts.
    let lo_frac = lo - &fl;
    let hi_frac = hi - &fl;
    let inner = simplest_between(&hi_frac.recip(), &lo_frac.recip());
    fl + inner.recip()
}

/// Searches for a factor of degree `k` (1 ≤ k ≤ 3) of a primitive integer
/// polynomial with Kronecker's method. Returns `Ok(Some(factor))` when one
/// exists, `Ok(None)` when provably none exists, and `Err(())` when the
/// divisor sets are too large to search.
pub fn kronecker_factor(p: &[BigInt], k: usize) -> Result<Option<Vec<BigInt>>, ()> {
    let n = p.len() - 1;
    if k == 0 || k >= n {
        return Ok(None);
    }
    let poly = UniPoly::from_ints(p);
    // Choose k+1 integer points with small nonzero values.
    let mut pts: Vec<(i64, BigInt)> = Vec::new();
    let mut x = 0i64;
    while pts.len() < k + 1 {
        let v = poly.eval(&BigRational::from_integer(BigInt::from(x))).to_integer();
        if v.is_zero() {
            if k == 1 {
                return Ok(Some(vec![BigInt::from(-x), BigInt::one()]));
            }
            x = if x <= 0 { -x + 1 } else { -x };
            continue;
        }
        pts.push((x, v));
        x = if x <= 0 { -x + 1 } else { -x };
    }
    let mut div_sets = Vec::new();
    let mut total: u64 = 1;
    for (_, v) in &pts {
        let ds = signed_divisors(&v.abs()).ok_or(())?;
        total = total.saturating_mul(ds.len() as u64);
        if total > 2_000_000 {
            return Err(());
        }
        div_sets.push(ds);
    }
    let xs: Vec<BigRational> = pts.iter().map(|(x, _)| BigRational::from_integer(BigInt::from(*x))).collect();
    let mut idx = vec![0usize; k + 1];
    loop {
        let ys: Vec<BigRational> = idx
            .iter()
            .zip(&div_sets)
            .map(|(&i, ds)| BigRational::from_integer(ds[i].clone()))
            .collect();
        let cand = lagrange(&xs, &ys);
        if cand.degree() == Some(k) && cand.coeffs().iter().all(|c| c.is_integer()) {
            let (_, r) = poly.div_rem(&cand);
            if r.is_zero() {
                return Ok(Some(cand.primitive_integer()));
            }
        }
        // advance mixed-radix counter
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return Ok(None);
            }
            idx[pos] += 1;
            if idx[pos] < div_sets[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

fn lagrange(xs: &[BigRational], ys: &[BigRational]) -> UniPoly {
    let mut acc = UniPoly::zero();
    for i in 0..xs.len() {
        let mut term = UniPoly::new(vec![ys[i].clone()]);
        for j in 0..xs.len() {
            if i != j {
                let den = &xs[i] - &xs[j];
                term = term.mul(&UniPoly::new(vec![-&xs[j] / &den, den.recip()]));
            }
        }
        acc = acc.add(&term);
    }
    acc
}

/// All divisors (both signs) of a positive integer, or `None` when trial
/// division would be too expensive.
fn signed_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let limit = BigInt::from(10u64).pow(12);
    if n > &limit {
        return None;
    }
    let mut m: u64 = n.try_into().ok()?;
    let mut primes: Vec<(u64, u32)> = Vec::new();
    let mut d = 2u64;
    while d * d <= m {
        let mut e = 0;
        while m % d == 0 {
            m /= d;
            e += 1;
        }
        if e > 0 {
            primes.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if m > 1 {
        primes.push((m, 1));
    }
    let mut divs = vec![1u64];
    for (p, e) in primes {
        let cur = divs.clone();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            divs.extend(cur.iter().map(|x| x * pk));
        }
    }
    divs.sort_unstable();
    Some(divs.into_iter().flat_map(|x| [BigInt::from(x), -BigInt::from(x)]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(&c.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>())
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn yun_splits_multiplicities() {
        // (x+1)^2 (x+2)^3
        let f = p(&[1, 1]).pow(2).mul(&p(&[2, 1]).pow(3));
        let d = f.yun();
        assert_eq!(d, vec![(p(&[1, 1]), 2), (p(&[2, 1]), 3)]);
    }

    #[test]
    fn rational_roots_found() {
        // (2x-1)(3x+5)(x^2+1)(x-7)^2
        let f = p(&[-1, 2]).mul(&p(&[5, 3])).mul(&p(&[1, 0, 1])).mul(&p(&[-7, 1]).pow(2));
        assert_eq!(f.rational_roots(), vec![q(-5, 3), q(1, 2), q(7, 1)]);
        assert!(p(&[2, 0, 1]).rational_roots().is_empty());
        assert_eq!(p(&[0, 0, 1]).rational_roots(), vec![q(0, 1)]);
        // roots that sit on bisection points
        let g = p(&[0, 1]).mul(&p(&[-1, 1])).mul(&p(&[1, 1]));
        assert_eq!(g.rational_roots(), vec![q(-1, 1), q(0, 1), q(1, 1)]);
    }

    #[test]
    fn simplest_fraction() {
        assert_eq!(simplest_between(&q(3, 10), &q(2, 5)), q(1, 3));
        assert_eq!(simplest_between(&q(-2, 5), &q(-3, 10)), q(-1, 3));
        assert_eq!(simplest_between(&q(7, 2), &q(9, 2)), q(4, 1));
    }

    #[test]
    fn kronecker_quadratic() {
        // x^4+1 has no quadratic factor over Q
        let f: Vec<BigInt> = [1, 0, 0, 0, 1].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(kronecker_factor(&f, 2), Ok(None));
        // (x^2+x+1)(x^2+3) has one
        let g = p(&[1, 1, 1]).mul(&p(&[3, 0, 1])).primitive_integer();
        let h = kronecker_factor(&g, 2).unwrap().unwrap();
        let hp = UniPoly::from_ints(&h);
        assert!(UniPoly::from_ints(&g).div_rem(&hp).1.is_zero());
    }
}
