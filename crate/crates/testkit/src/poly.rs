//! Naive polynomial arithmetic in four variables.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Poly4 = BTreeMap<[u8; 4], BigInt>;

pub fn from_terms(terms: &[([u8; 4], i64)]) -> Poly4 {
    let mut p = Poly4::new();
    for (e, c) in terms {
        *p.entry(*e).or_insert_with(BigInt::zero) += *c;
    }
    p.retain(|_, c| !c.is_zero());
    p
}

pub fn eval(f: &Poly4, x: &[BigInt; 4]) -> BigInt {
    f.iter()
        .map(|(e, c)| {
            let mut t = c.clone();
            for i in 0..4 {
                for _ in 0..e[i] {
                    t *= &x[i];
                }
            }
            t
        })
        .sum()
}

/// `f(M·x)`, i.e. `x_i ↦ Σ_j m[i][j]·x_j`, by repeated expansion.
pub fn compose(f: &Poly4, m: &[[i64; 4]; 4]) -> Poly4 {
    let mut out = Poly4::new();
    for (e, c) in f {
        let mut acc: Poly4 = BTreeMap::from([([0u8; 4], c.clone())]);
        for i in 0..4 {
            for _ in 0..e[i] {
                let mut next = Poly4::new();
                for (mono, v) in &acc {
                    for j in 0..4 {
                        if m[i][j] != 0 {
                            let mut k = *mono;
                            k[j] += 1;
                            *next.entry(k).or_insert_with(BigInt::zero) += v * m[i][j];
                        }
                    }
                }
                acc = next;
            }
        }
        for (mono, v) in acc {
            *out.entry(mono).or_insert_with(BigInt::zero) += v;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Coefficients `[c0, …, c4]` of `F(u·a + v·b) = Σ c_k u^{4−k} v^k`, found by
/// evaluating at `(1, t)` for `t = 0..4` and interpolating.
pub fn restrict_by_interpolation(f: &Poly4, a: &[i64; 4], b: &[i64; 4]) -> [BigInt; 5] {
    let ys: Vec<BigRational> = (0..5i64)
        .map(|t| {
            let x: [BigInt; 4] = std::array::from_fn(|i| BigInt::from(a[i] + t * b[i]));
            BigRational::from_integer(eval(f, &x))
        })
        .collect();
    // Lagrange basis polynomials expanded in t
    let mut coeffs = vec![BigRational::zero(); 5];
    for (k, yk) in ys.iter().enumerate() {
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for j in 0..5 {
            if j == k {
                continue;
            }
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (d, c) in basis.iter().enumerate() {
                next[d + 1] += c;
                next[d] -= c * BigRational::from_integer(BigInt::from(j));
            }
            basis = next;
            denom *= BigRational::from_integer(BigInt::from(k as i64 - j as i64));
        }
        for (d, c) in basis.iter().enumerate() {
            coeffs[d] += c * yk / &denom;
        }
    }
    std::array::from_fn(|d| {
        assert!(coeffs[d].is_integer());
        coeffs[d].to_integer()
    })
}

/// Product of binary linear forms `(α u + β v)` as coefficients of
/// `u^n, u^{n−1} v, …, v^n`.
pub fn binary_product(factors: &[(i64, i64)]) -> Vec<BigInt> {
    let mut p = vec![BigInt::one()];
    for &(al, be) in factors {
        let mut next = vec![BigInt::zero(); p.len() + 1];
        for (i, c) in p.iter().enumerate() {
            next[i] += c * al;
            next[i + 1] += c * be;
        }
        p = next;
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interpolation_matches_hand_expansion() {
        // x^4 − x y^3 − z^4 + z w^3 on (8u, v, u, 2v)
        let f = from_terms(&[([4, 0, 0, 0], 1), ([1, 3, 0, 0], -1), ([0, 0, 4, 0], -1), ([0, 0, 1, 3], 1)]);
        let r = restrict_by_interpolation(&f, &[8, 0, 1, 0], &[0, 1, 0, 2]);
        assert_eq!(r, [4095, 0, 0, 0, 0].map(BigInt::from));
    }

    #[test]
    fn compose_identity_and_swap() {
        let f = from_terms(&[([3, 1, 0, 0], 2), ([0, 0, 0, 4], -1)]);
        let id = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]];
        assert_eq!(compose(&f, &id), f);
        let swap = [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]];
        assert_eq!(compose(&f, &swap), from_terms(&[([1, 3, 0, 0], 2), ([0, 0, 0, 4], -1)]));
    }
}
