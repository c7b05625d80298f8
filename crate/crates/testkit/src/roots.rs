//! Root multiplicities of binary forms by high-precision numerics.
//!
//! The multiplicity at `(1:0)` is read off the leading zero coefficients. The
//! remaining roots are found by Durand–Kerner iteration in 256-bit
//! fixed-point complex arithmetic on the monic dehomogenised polynomial, and
//! roots within `CLUSTER_TOL · max(1, |r|)` of each other are merged.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

const BITS: u32 = 256;
const ITERATIONS: usize = 800;
pub const CLUSTER_TOL: f64 = 1e-8;

#[derive(Clone, Debug)]
struct C {
    re: BigInt,
    im: BigInt,
}

fn one() -> BigInt {
    BigInt::from(1) << BITS
}

fn fx_mul(a: &BigInt, b: &BigInt) -> BigInt {
    (a * b) >> BITS
}

fn fx_from_ratio(n: &BigInt, d: &BigInt) -> BigInt {
    (n << BITS).div_floor(d)
}

fn fx_to_f64(a: &BigInt) -> f64 {
    let shift = BITS - 60;
    (a >> shift).to_f64().unwrap() / 2f64.powi(60)
}

impl C {
    fn real(re: BigInt) -> Self {
        C { re, im: BigInt::zero() }
    }
    fn add(&self, o: &C) -> C {
        C { re: &self.re + &o.re, im: &self.im + &o.im }
    }
    fn sub(&self, o: &C) -> C {
        C { re: &self.re - &o.re, im: &self.im - &o.im }
    }
    fn mul(&self, o: &C) -> C {
        C {
            re: fx_mul(&self.re, &o.re) - fx_mul(&self.im, &o.im),
            im: fx_mul(&self.re, &o.im) + fx_mul(&self.im, &o.re),
        }
    }
    fn norm2(&self) -> BigInt {
        fx_mul(&self.re, &self.re) + fx_mul(&self.im, &self.im)
    }
    fn div(&self, o: &C) -> C {
        let n = o.norm2();
        if n.is_zero() {
            return C::real(BigInt::zero());
        }
        let re = fx_mul(&self.re, &o.re) + fx_mul(&self.im, &o.im);
        let im = fx_mul(&self.im, &o.re) - fx_mul(&self.re, &o.im);
        C { re: (re << BITS) / &n, im: (im << BITS) / &n }
    }
    fn abs(&self) -> f64 {
        fx_to_f64(&self.norm2()).sqrt()
    }
}

/// Finite roots of `Σ c_k t^k` (`c` low to high, top coefficient nonzero).
fn finite_roots(c: &[BigInt]) -> Vec<C> {
    let n = c.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    let lead = &c[n];
    // monic, fixed point
    let mono: Vec<BigInt> = c.iter().map(|x| fx_from_ratio(x, lead)).collect();
    let bound = 1.0 + mono.iter().take(n).map(|x| fx_to_f64(&x.abs())).fold(0.0, f64::max);
    let eval = |z: &C| -> C {
        let mut acc = C::real(mono[n].clone());
        for k in (0..n).rev() {
            acc = acc.mul(z).add(&C::real(mono[k].clone()));
        }
        acc
    };
    let seed = C { re: fx_from_ratio(&BigInt::from(4), &BigInt::from(10)), im: fx_from_ratio(&BigInt::from(9), &BigInt::from(10)) };
    let scale = C::real(fx_from_ratio(&BigInt::from((bound * 1e6) as i64), &BigInt::from(1_000_000)));
    let mut z = Vec::with_capacity(n);
    let mut cur = scale;
    for _ in 0..n {
        cur = cur.mul(&seed);
        z.push(cur.clone());
    }
    for _ in 0..ITERATIONS {
        for i in 0..n {
            let mut den = C::real(one());
            for j in 0..n {
                if i != j {
                    den = den.mul(&z[i].sub(&z[j]));
                }
            }
            let step = eval(&z[i]).div(&den);
            z[i] = z[i].sub(&step);
        }
    }
    z
}

/// Root multiplicities of `Σ f_k u^{4−k} v^k` (any degree), sorted
/// descending; `None` for the zero form.
pub fn root_partition(f: &[BigInt]) -> Option<Vec<usize>> {
    let d = f.len() - 1;
    let at_infinity = f.iter().position(|c| !c.is_zero())?;
    // with t = u/v: Σ f_k t^{d−k}, low to high
    let poly: Vec<BigInt> = (at_infinity..=d).rev().map(|k| f[k].clone()).collect();
    let roots = finite_roots(&poly);
    let mut parent: Vec<usize> = (0..roots.len()).collect();
    fn find(p: &mut Vec<usize>, i: usize) -> usize {
        if p[i] != i {
            let r = find(p, p[i]);
            p[i] = r;
        }
        p[i]
    }
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            let scale = roots[i].abs().max(roots[j].abs()).max(1.0);
            if roots[i].sub(&roots[j]).abs() <= CLUSTER_TOL * scale {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut sizes = std::collections::BTreeMap::new();
    for i in 0..roots.len() {
        *sizes.entry(find(&mut parent, i)).or_insert(0usize) += 1;
    }
    let mut out: Vec<usize> = sizes.into_values().collect();
    if at_infinity > 0 {
        out.push(at_infinity);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    Some(out)
}

/// Kind names matching the root partitions of binary quartics.
pub fn kind_name(partition: Option<&[usize]>) -> &'static str {
    match partition {
        None => "Contained",
        Some([1, 1, 1, 1]) => "Transverse",
        Some([2, 1, 1]) => "SimpleTangent",
        Some([3, 1]) => "Flex",
        Some([2, 2]) => "Bitangent",
        Some([4]) => "Quadritangent",
        Some(_) => "Unexpected",
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::binary_product;

    fn part(f: &[i64]) -> Option<Vec<usize>> {
        root_partition(&f.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>())
    }

    #[test]
    fn partitions_of_products() {
        assert_eq!(part(&[1, 0, 0, 0, 1]), Some(vec![1, 1, 1, 1]));
        assert_eq!(part(&[0, 0, 0, 0, 0]), None);
        assert_eq!(part(&[4095, 0, 0, 0, 0]), Some(vec![4]));
        assert_eq!(part(&[0, 1, 0, 0, 0]), Some(vec![3, 1]));
        // (u² + uv + v²)²
        assert_eq!(part(&[1, 2, 3, 2, 1]), Some(vec![2, 2]));
        let f = binary_product(&[(2, -3), (2, -3), (1, 5), (7, 1)]);
        let f: Vec<i64> = f.iter().map(|c| c.to_i64().unwrap()).collect();
        assert_eq!(part(&f), Some(vec![2, 1, 1]));
        let g = binary_product(&[(3, 1), (3, 1), (3, 1), (3, 1)]);
        let g: Vec<i64> = g.iter().map(|c| c.to_i64().unwrap()).collect();
        assert_eq!(part(&g), Some(vec![4]));
    }
}
