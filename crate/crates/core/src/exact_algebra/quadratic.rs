use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{rat_string, QuarticForm};

/// An element `a + b·√d` of the quadratic field Q(√d); `d` is carried by the
/// caller.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadElem {
    pub a: BigRational,
    pub b: BigRational,
}

impl QuadElem {
    pub fn rational(a: BigRational) -> Self {
        QuadElem { a, b: BigRational::zero() }
    }

    pub fn zero() -> Self {
        Self::rational(BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        QuadElem { a: &self.a + &o.a, b: &self.b + &o.b }
    }

    pub fn mul(&self, o: &Self, d: &BigInt) -> Self {
        let dq = BigRational::from_integer(d.clone());
        QuadElem {
            a: &self.a * &o.a + &self.b * &o.b * dq,
            b: &self.a * &o.b + &self.b * &o.a,
        }
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        QuadElem { a: &self.a * s, b: &self.b * s }
    }

    pub fn conjugate(&self) -> Self {
        QuadElem { a: self.a.clone(), b: -&self.b }
    }

    pub fn pow(&self, e: u32, d: &BigInt) -> Self {
        (0..e).fold(QuadElem::rational(BigRational::one()), |acc, _| acc.mul(self, d))
    }

    /// Multiplicative inverse in Q(√d) for non-square `d`.
    pub fn inv(&self, d: &BigInt) -> Self {
        let dq = BigRational::from_integer(d.clone());
        let norm = &self.a * &self.a - &self.b * &self.b * dq;
        assert!(!norm.is_zero(), "inverse of zero");
        QuadElem { a: &self.a / &norm, b: -&self.b / &norm }
    }
}

/// Evaluates a quartic at a point with coordinates in Q(√d).
pub fn eval_quartic(f: &QuarticForm, p: &[QuadElem; 4], d: &BigInt) -> QuadElem {
    let mut acc = QuadElem::zero();
    for (e, c) in f.terms() {
        let mut t = QuadElem::rational(BigRational::from_integer(c.clone()));
        for (x, &k) in p.iter().zip(&e) {
            t = t.mul(&x.pow(k as u32, d), d);
        }
        acc = acc.add(&t);
    }
    acc
}

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", rat_string(&self.a)),
            (true, false) => write!(f, "{}*r", rat_string(&self.b)),
            (false, false) => {
                if self.b.is_negative() {
                    write!(f, "{} - {}*r", rat_string(&self.a), rat_string(&-&self.b))
                } else {
                    write!(f, "{} + {}*r", rat_string(&self.a), rat_string(&self.b))
                }
            }
        }
    }
}

impl Serialize for QuadElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Decomposition `n = square · kernel` with `kernel` squarefree (sign kept on
/// the kernel).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeSplit {
    /// The square root of the square part.
    pub root: BigInt,
    pub kernel: BigInt,
    /// False when a cofactor above 10^18 could not be certified squarefree.
    pub certified: bool,
}

/// Squarefree kernel of a nonzero integer by trial division below 10^6.
pub fn squarefree_split(n: &BigInt) -> SquarefreeSplit {
    assert!(!n.is_zero(), "squarefree kernel of zero");
    let sign = if n.is_negative() { -BigInt::one() } else { BigInt::one() };
    let mut m = n.abs();
    let mut root = BigInt::one();
    let mut kernel = BigInt::one();
    let mut p = BigInt::from(2);
    let limit = BigInt::from(1_000_000u32);
    while &p * &p <= m && p < limit {
        let mut e = 0u32;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        for _ in 0..e / 2 {
            root *= &p;
        }
        if e % 2 == 1 {
            kernel *= &p;
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    let mut certified = true;
    if m > BigInt::one() {
        let s = m.sqrt();
        if &s * &s == m {
            root *= s;
        } else {
            // A cofactor with no prime factor below 10^6 and below 10^18 is a
            // product of at most two distinct primes, hence squarefree.
            if m >= BigInt::from(10u64).pow(18) && p >= limit {
                certified = false;
            }
            kernel *= m;
        }
    }
    SquarefreeSplit { root, kernel: kernel * sign, certified }
}

/// Squarefree kernel of a nonzero rational `r` (the kernel of `num·den`).
pub fn rational_kernel(r: &BigRational) -> SquarefreeSplit {
    squarefree_split(&(r.numer() * r.denom()))
}

/// True when the integer is a perfect square.
pub fn is_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let s = n.sqrt();
    &s * &s == *n
}

/// Exact square root of a rational square, if it is one.
pub fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let (n, d) = (r.numer(), r.denom());
    if is_square(n) && is_square(d) {
        Some(BigRational::new(n.sqrt(), d.sqrt()))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernels() {
        let k = |n: i64| squarefree_split(&BigInt::from(n));
        assert_eq!(k(-8).kernel, BigInt::from(-2));
        assert_eq!(k(-8).root, BigInt::from(2));
        assert_eq!(k(-34).kernel, BigInt::from(-34));
        assert_eq!(k(49).kernel, BigInt::from(1));
        assert_eq!(k(2 * 9 * 25 * 7).kernel, BigInt::from(14));
        let r = BigRational::new(BigInt::from(-2), BigInt::from(17));
        assert_eq!(rational_kernel(&r).kernel, BigInt::from(-34));
    }

    #[test]
    fn field_arithmetic() {
        let d = BigInt::from(-2);
        let one = BigRational::one();
        let x = QuadElem { a: one.clone(), b: one.clone() };
        // (1+r)(1-r) = 1 - d = 3
        let y = x.mul(&x.conjugate(), &d);
        assert_eq!(y, QuadElem::rational(BigRational::from_integer(BigInt::from(3))));
        let z = x.mul(&x.inv(&d), &d);
        assert_eq!(z, QuadElem::rational(one));
    }
}
