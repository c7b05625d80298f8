//! Random inputs with independent construction.

use rand::Rng;

use crate::poly::{self, Poly4};

pub const QUARTIC_MONOMIALS: usize = 35;

pub fn quartic_exponents() -> Vec<[u8; 4]> {
    let mut out = Vec::new();
    for a in (0..=4u8).rev() {
        for b in (0..=4 - a).rev() {
            for c in (0..=4 - a - b).rev() {
                out.push([a, b, c, 4 - a - b - c]);
            }
        }
    }
    out
}

/// Dense random quartic with coefficients in `[−c, c]`, not identically zero.
pub fn quartic<R: Rng>(rng: &mut R, c: i64) -> Vec<([u8; 4], i64)> {
    loop {
        let terms: Vec<_> = quartic_exponents()
            .into_iter()
            .map(|e| (e, rng.gen_range(-c..=c)))
            .filter(|(_, v)| *v != 0)
            .collect();
        if !terms.is_empty() {
            return terms;
        }
    }
}

/// Random quartic with `k` nonzero terms.
pub fn sparse_quartic<R: Rng>(rng: &mut R, k: usize, c: i64) -> Vec<([u8; 4], i64)> {
    let exps = quartic_exponents();
    let mut terms = Vec::new();
    while terms.len() < k {
        let e = exps[rng.gen_range(0..exps.len())];
        let v = rng.gen_range(1..=c) * if rng.gen_bool(0.5) { 1 } else { -1 };
        if !terms.iter().any(|(f, _)| *f == e) {
            terms.push((e, v));
        }
    }
    terms
}

/// Two independent integer vectors with entries in `[−c, c]`.
pub fn independent_pair<R: Rng>(rng: &mut R, c: i64) -> ([i64; 4], [i64; 4]) {
    loop {
        let a: [i64; 4] = std::array::from_fn(|_| rng.gen_range(-c..=c));
        let b: [i64; 4] = std::array::from_fn(|_| rng.gen_range(-c..=c));
        if crate::lines::plucker(&a, &b).iter().any(|&v| v != 0) {
            return (a, b);
        }
    }
}

pub type Mat4 = [[i64; 4]; 4];

pub fn mat_mul(a: &Mat4, b: &Mat4) -> Mat4 {
    std::array::from_fn(|i| std::array::from_fn(|j| (0..4).map(|k| a[i][k] * b[k][j]).sum()))
}

pub fn mat_vec(a: &Mat4, v: &[i64; 4]) -> [i64; 4] {
    std::array::from_fn(|i| (0..4).map(|k| a[i][k] * v[k]).sum())
}

/// A random unimodular matrix and its inverse, as a product of `steps`
/// elementary operations and a random signed permutation.
pub fn unimodular<R: Rng>(rng: &mut R, steps: usize) -> (Mat4, Mat4) {
    let id: Mat4 = std::array::from_fn(|i| std::array::from_fn(|j| i64::from(i == j)));
    let mut m = id;
    let mut inv = id;
    for _ in 0..steps {
        let i = rng.gen_range(0..4);
        let mut j = rng.gen_range(0..3);
        if j >= i {
            j += 1;
        }
        let k = rng.gen_range(-2..=2);
        let mut e = id;
        e[i][j] = k;
        let mut ei = id;
        ei[i][j] = -k;
        m = mat_mul(&m, &e);
        inv = mat_mul(&ei, &inv);
    }
    let mut perm = [0usize, 1, 2, 3];
    for i in (1..4).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let signs: [i64; 4] = std::array::from_fn(|_| if rng.gen_bool(0.5) { 1 } else { -1 });
    let mut p = [[0i64; 4]; 4];
    let mut pi = [[0i64; 4]; 4];
    for i in 0..4 {
        p[i][perm[i]] = signs[i];
        pi[perm[i]][i] = signs[i];
    }
    (mat_mul(&m, &p), mat_mul(&pi, &inv))
}

/// A quartic and a line on which it restricts to the given binary quartic:
/// `g(x, y) + z·A + w·B` with random cubics `A, B`, moved by a random
/// unimodular change of coordinates.
pub fn with_restriction<R: Rng>(rng: &mut R, g: &[i64; 5]) -> (Poly4, [i64; 4], [i64; 4]) {
    let mut terms = Vec::new();
    for (k, &c) in g.iter().enumerate() {
        terms.push(([(4 - k) as u8, k as u8, 0, 0], c));
    }
    for e in quartic_exponents() {
        if (e[2] > 0 || e[3] > 0) && rng.gen_bool(0.4) {
            terms.push((e, rng.gen_range(-3..=3)));
        }
    }
    let f = poly::from_terms(&terms);
    let (m, mi) = unimodular(rng, 6);
    // F'(x) = F(M x) vanishes to the same order on M⁻¹·l
    let f2 = poly::compose(&f, &m);
    let a = mat_vec(&mi, &[1, 0, 0, 0]);
    let b = mat_vec(&mi, &[0, 1, 0, 0]);
    (f2, a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn unimodular_inverse() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..20 {
            let (m, mi) = unimodular(&mut rng, 8);
            let id: Mat4 = std::array::from_fn(|i| std::array::from_fn(|j| i64::from(i == j)));
            assert_eq!(mat_mul(&m, &mi), id);
        }
    }

    #[test]
    fn constructed_restriction() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(3);
        let g = [1, -2, 0, 5, 3];
        let (f, a, b) = with_restriction(&mut rng, &g);
        assert_eq!(poly::restrict_by_interpolation(&f, &a, &b), g.map(num_bigint::BigInt::from));
    }
}
