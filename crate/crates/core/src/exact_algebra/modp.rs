//! Univariate polynomials over F_p, used to bound the degrees of rational
//! factors.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

type P = Vec<u64>;

fn trim(mut a: P) -> P {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv(a: u64, p: u64) -> u64 {
    let (mut r, mut b, mut e) = (1u64, a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn rem(a: &P, m: &P, p: u64) -> P {
    let mut a = a.clone();
    let dm = m.len() - 1;
    let li = inv(m[dm], p);
    while a.len() > dm && !a.is_empty() {
        let top = a.len() - 1;
        let c = a[top] * li % p;
        if c != 0 {
            for (i, &mi) in m.iter().enumerate() {
                let k = top - dm + i;
                a[k] = (a[k] + p - c * mi % p) % p;
            }
        }
        a.pop();
        a = trim(a);
        if a.len() <= dm {
            break;
        }
    }
    trim(a)
}

fn mul_mod(a: &P, b: &P, m: &P, p: u64) -> P {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            r[i + j] = (r[i + j] + x * y) % p;
        }
    }
    rem(&trim(r), m, p)
}

fn gcd(a: &P, b: &P, p: u64) -> P {
    let (mut a, mut b) = (trim(a.clone()), trim(b.clone()));
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn div(a: &P, d: &P, p: u64) -> P {
    let mut a = a.clone();
    let dd = d.len() - 1;
    let li = inv(d[dd], p);
    let mut q = vec![0u64; a.len().saturating_sub(dd)];
    while a.len() > dd {
        let top = a.len() - 1;
        let c = a[top] * li % p;
        q[top - dd] = c;
        for (i, &di) in d.iter().enumerate() {
            let k = top - dd + i;
            a[k] = (a[k] + p - c * di % p) % p;
        }
        a.pop();
    }
    trim(q)
}

fn sub(a: &P, b: &P, p: u64) -> P {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p).collect())
}

/// Degrees of the irreducible factors of `f mod p`, or `None` when the
/// reduction drops degree or is not squarefree.
pub(crate) fn factor_degrees(f: &[BigInt], p: u64) -> Option<Vec<usize>> {
    let pb = BigInt::from(p);
    let red: P = f.iter().map(|c| (((c % &pb) + &pb) % &pb).to_u64().unwrap()).collect();
    if red.last().map_or(true, |c| *c == 0) || f.last().map_or(true, Zero::is_zero) {
        return None;
    }
    let n = red.len() - 1;
    let deriv: P = trim((1..=n).map(|i| red[i] * (i as u64 % p) % p).collect());
    if deriv.is_empty() || gcd(&red, &deriv, p).len() != 1 {
        return None;
    }
    let mut rest = red;
    let mut out = Vec::new();
    let x: P = vec![0, 1];
    let mut g = x.clone();
    let mut d = 0;
    while rest.len() > 1 {
        d += 1;
        if 2 * d > rest.len() - 1 {
            out.push(rest.len() - 1);
            break;
        }
        // g ← g^p mod rest
        let mut acc: P = vec![1];
        let mut base = rem(&g, &rest, p);
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul_mod(&acc, &base, &rest, p);
            }
            base = mul_mod(&base, &base, &rest, p);
            e >>= 1;
        }
        g = acc;
        let h = gcd(&rest, &sub(&g, &x, p), p);
        let dh = h.len() - 1;
        if dh > 0 {
            out.extend(std::iter::repeat(d).take(dh / d));
            rest = div(&rest, &h, p);
            g = rem(&g, &rest, p);
        }
    }
    Some(out)
}

/// Degrees `k` for which a factor of degree `k` over Q is not excluded by
/// the factorisation patterns modulo small primes.
pub(crate) fn possible_factor_degrees(f: &[BigInt]) -> Vec<bool> {
    let n = f.len() - 1;
    let mut possible = vec![true; n + 1];
    let mut used = 0;
    for p in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97] {
        let Some(degs) = factor_degrees(f, p) else { continue };
        let mut sums = vec![false; n + 1];
        sums[0] = true;
        for d in degs {
            for s in (d..=n).rev() {
                if sums[s - d] {
                    sums[s] = true;
                }
            }
        }
        for k in 0..=n {
            possible[k] &= sums[k];
        }
        used += 1;
        if used >= 12 && (1..n).all(|k| !possible[k]) {
            break;
        }
    }
    possible
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn degree_patterns() {
        // x^2 + 1 splits mod 5, stays irreducible mod 3
        assert_eq!(factor_degrees(&ints(&[1, 0, 1]), 5), Some(vec![1, 1]));
        assert_eq!(factor_degrees(&ints(&[1, 0, 1]), 3), Some(vec![2]));
        // 2x^5 + ... : degrees add up to 5
        let f = ints(&[1, 1, 1, 2, 0, 2]);
        let degs = factor_degrees(&f, 7).unwrap();
        assert_eq!(degs.iter().sum::<usize>(), 5);
    }

    #[test]
    fn x4_plus_1_keeps_degree_two() {
        let poss = possible_factor_degrees(&ints(&[1, 0, 0, 0, 1]));
        assert!(poss[2]);
        assert!(!poss[1] && !poss[3]);
    }

    #[test]
    fn irreducible_sextic_excludes_everything() {
        // x^6 + x + 1
        let poss = possible_factor_degrees(&ints(&[1, 1, 0, 0, 0, 0, 1]));
        assert!((1..6).all(|k| !poss[k]));
    }
}
