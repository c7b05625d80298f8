//! Arithmetic modulo a small prime: evaluation tables for a quartic and the
//! scan of all lines of P^3(F_p) whose restriction is zero or a scaled square.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::exact_algebra::QuarticForm;

/// Quadratic monomials `b_i b_j` (i ≤ j) in storage order.
pub(crate) const QUAD_PAIRS: [(usize, usize); 10] =
    [(0, 0), (0, 1), (0, 2), (0, 3), (1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3)];

pub(crate) fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Decides whether `f0 u^4 + … + f4 v^4` over F_p (p odd) is zero or a
/// nonzero constant times a square.
pub(crate) fn zero_or_scaled_square(f: [u64; 5], p: u64) -> bool {
    let Some(k) = f.iter().position(|&c| c != 0) else { return true };
    match k {
        1 | 3 => false,
        4 => true,
        2 => {
            // v^2 (f2 u^2 + f3 uv + f4 v^2): the quadratic must have zero discriminant
            (f[3] * f[3] % p + p * p - 4 % p * f[2] % p * f[4] % p) % p == 0
        }
        _ => {
            // f / f0 = (u^2 + g1 uv + g2 v^2)^2
            let i0 = inv_mod(f[0], p);
            let n = |c: u64| c * i0 % p;
            let inv2 = (p + 1) / 2;
            let g1 = n(f[1]) * inv2 % p;
            let g2 = (n(f[2]) + p - g1 * g1 % p) % p * inv2 % p;
            n(f[3]) == 2 * g1 % p * g2 % p && n(f[4]) == g2 * g2 % p
        }
    }
}

/// A quartic reduced modulo `m`, as dense terms.
#[derive(Clone, Debug)]
pub(crate) struct ModQuartic {
    pub m: u64,
    terms: Vec<([u8; 4], u64)>,
}

impl ModQuartic {
    pub fn new(f: &QuarticForm, m: u64) -> Self {
        let mb = BigInt::from(m);
        let terms = f
            .terms()
            .map(|(e, c)| {
                let r = ((c % &mb) + &mb) % &mb;
                (e, r.to_u64().unwrap())
            })
            .filter(|(_, c)| *c != 0)
            .collect();
        ModQuartic { m, terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn powers(&self, v: &[u64; 4]) -> [[u64; 5]; 4] {
        let m = self.m;
        v.map(|x| {
            let mut p = [1 % m; 5];
            for k in 1..5 {
                p[k] = p[k - 1] * (x % m) % m;
            }
            p
        })
    }

    /// `F(v)`, `∇F(v)` and the coefficients of `½ bᵀ H_F(v) b` in the
    /// `QUAD_PAIRS` basis.
    pub fn jets(&self, v: &[u64; 4]) -> (u64, [u64; 4], [u64; 10]) {
        let m = self.m;
        let pw = self.powers(v);
        let mono = |e: [i32; 4]| -> u64 {
            let mut r = 1 % m;
            for i in 0..4 {
                r = r * pw[i][e[i] as usize] % m;
            }
            r
        };
        let mut f = 0;
        let mut g = [0u64; 4];
        let mut h = [0u64; 10];
        for &(e, c) in &self.terms {
            let ei = e.map(i32::from);
            f = (f + c * mono(ei)) % m;
            for i in 0..4 {
                if ei[i] > 0 {
                    let mut d = ei;
                    d[i] -= 1;
                    g[i] = (g[i] + c * (ei[i] as u64) % m * mono(d)) % m;
                }
            }
            for (k, &(i, j)) in QUAD_PAIRS.iter().enumerate() {
                let mut d = ei;
                let coef = if i == j {
                    if ei[i] < 2 {
                        continue;
                    }
                    d[i] -= 2;
                    (ei[i] * (ei[i] - 1) / 2) as u64
                } else {
                    if ei[i] < 1 || ei[j] < 1 {
                        continue;
                    }
                    d[i] -= 1;
                    d[j] -= 1;
                    (ei[i] * ei[j]) as u64
                };
                h[k] = (h[k] + c * coef % m * mono(d)) % m;
            }
        }
        (f, g, h)
    }
}

/// One lifted F_p-line: rows of its reduced echelon form with entries in
/// `[0, p)`, and its pivot columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct EchelonLine {
    pub rows: [[u64; 4]; 2],
    pub pivots: (usize, usize),
}

impl EchelonLine {
    /// A basis of `{v ∈ Z^4 : v mod p lies on the line}`.
    pub fn lattice_basis(&self, p: u64) -> [[i64; 4]; 4] {
        let (i0, i1) = self.pivots;
        let mut out = [[0i64; 4]; 4];
        out[0] = self.rows[0].map(|x| x as i64);
        out[1] = self.rows[1].map(|x| x as i64);
        let mut k = 2;
        for j in 0..4 {
            if j != i0 && j != i1 {
                out[k][j] = p as i64;
                k += 1;
            }
        }
        out
    }
}

/// The free positions of the two echelon rows for pivots `(i0, i1)`.
fn free_slots(i0: usize, i1: usize) -> (Vec<usize>, Vec<usize>) {
    let r0 = (i0 + 1..4).filter(|&j| j != i1).collect();
    let r1 = (i1 + 1..4).collect();
    (r0, r1)
}

fn row_values(pivot: usize, slots: &[usize], p: u64) -> Vec<[u64; 4]> {
    let count = p.pow(slots.len() as u32);
    (0..count)
        .map(|mut idx| {
            let mut r = [0u64; 4];
            r[pivot] = 1;
            for &s in slots {
                r[s] = idx % p;
                idx /= p;
            }
            r
        })
        .collect()
}

/// All lines of P^3(F_p) on which `F mod p` restricts to zero or to a
/// scaled square, in a fixed order.
pub(crate) fn scan_lines(fq: &ModQuartic) -> Vec<EchelonLine> {
    let p = fq.m;
    let mut out = Vec::new();
    for (i0, i1) in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)] {
        let (s0, s1) = free_slots(i0, i1);
        let rows0 = row_values(i0, &s0, p);
        let rows1 = row_values(i1, &s1, p);
        let jets0: Vec<_> = rows0.iter().map(|r| fq.jets(r)).collect();
        let jets1: Vec<_> = rows1.iter().map(|r| fq.jets(r)).collect();
        let scan_row = |a: usize| -> Vec<EchelonLine> {
            let r0 = &rows0[a];
            let (f0, g0, h0) = &jets0[a];
            let mut found = Vec::new();
            for (r1, (f4, g1, _)) in rows1.iter().zip(&jets1) {
                let mut c1 = 0;
                let mut c3 = 0;
                for i in 0..4 {
                    c1 += g0[i] * r1[i];
                    c3 += g1[i] * r0[i];
                }
                let mut c2 = 0;
                for (k, &(i, j)) in QUAD_PAIRS.iter().enumerate() {
                    c2 += h0[k] * (r1[i] * r1[j] % p);
                }
                let f = [*f0, c1 % p, c2 % p, c3 % p, *f4];
                if zero_or_scaled_square(f, p) {
                    found.push(EchelonLine { rows: [*r0, *r1], pivots: (i0, i1) });
                }
            }
            found
        };
        out.extend(crate::search::par_flat_map(0..rows0.len(), scan_row));
    }
    out
}

/// Number of lines of P^3(F_p).
#[cfg(test)]
pub(crate) fn line_count(p: u64) -> u64 {
    p.pow(4) + p.pow(3) + 2 * p * p + p + 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_square(f: [u64; 5], p: u64) -> bool {
        if f.iter().all(|&c| c == 0) {
            return true;
        }
        // compare with every c·g^2
        for c in 1..p {
            for g0 in 0..p {
                for g1 in 0..p {
                    for g2 in 0..p {
                        let sq = [
                            g0 * g0,
                            2 * g0 * g1,
                            g1 * g1 + 2 * g0 * g2,
                            2 * g1 * g2,
                            g2 * g2,
                        ]
                        .map(|x| x * c % p);
                        if sq == f && [g0, g1, g2] != [0, 0, 0] {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    #[test]
    fn modular_square_test_matches_brute_force() {
        let p: u64 = 5;
        for code in 0..p.pow(5) {
            let mut f = [0u64; 5];
            let mut c = code;
            for slot in f.iter_mut() {
                *slot = c % p;
                c /= p;
            }
            assert_eq!(zero_or_scaled_square(f, p), brute_square(f, p), "{f:?}");
        }
    }

    #[test]
    fn scan_visits_every_line() {
        // F = 0 mod p would accept every line; use p | all coefficients
        let f = QuarticForm::from_i64_terms(&[([4, 0, 0, 0], 7), ([0, 0, 0, 4], 14)]).unwrap();
        let fq = ModQuartic::new(&f, 7);
        assert!(fq.is_zero());
        assert_eq!(scan_lines(&fq).len() as u64, line_count(7));
    }

    #[test]
    fn jets_agree_with_restriction() {
        use crate::projective::{Line, ProjPoint};
        use crate::tangency::restrict_quartic_to_line;
        let f = QuarticForm::from_i64_terms(&[([4, 0, 0, 0], 3), ([1, 3, 0, 0], -1), ([0, 1, 2, 1], 5), ([0, 0, 0, 4], 2)])
            .unwrap();
        let p = 11;
        let fq = ModQuartic::new(&f, p);
        let a = [1u64, 3, 0, 7];
        let b = [0u64, 1, 4, 2];
        let (f0, g0, h0) = fq.jets(&a);
        let (f4, g1, _) = fq.jets(&b);
        let c1 = (0..4).map(|i| g0[i] * b[i]).sum::<u64>() % p;
        let c3 = (0..4).map(|i| g1[i] * a[i]).sum::<u64>() % p;
        let c2 = QUAD_PAIRS.iter().enumerate().map(|(k, &(i, j))| h0[k] * b[i] * b[j]).sum::<u64>() % p;
        let l = Line::from_points(
            ProjPoint::new(a.map(|x| x as i64)).unwrap(),
            ProjPoint::new(b.map(|x| x as i64)).unwrap(),
        )
        .unwrap();
        let exact = restrict_quartic_to_line(&f, &l);
        let red: Vec<u64> = exact
            .coeffs()
            .iter()
            .map(|c| {
                let n = c.to_integer() % BigInt::from(p);
                ((n + BigInt::from(p)) % BigInt::from(p)).to_u64().unwrap()
            })
            .collect();
        assert_eq!(red, vec![f0, c1, c2, c3, f4]);
    }
}
