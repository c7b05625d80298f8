//! Small-dimensional lattice tools: LLL reduction of an integral Gram matrix
//! and Fincke–Pohst enumeration of short vectors.
//!
//! Gram entries are exact `i128`; the Gram–Schmidt data are recomputed in
//! `f64`, which is ample for the dimensions (≤ 6) and sizes used here.
//! Enumeration radii carry a relative slack so callers must re-check
//! candidates exactly.

/// LLL-reduces the lattice with Gram matrix `g` (δ = 0.99). Returns the
/// reduced Gram matrix and the unimodular transform `t` whose rows express the
/// reduced basis in the input basis.
pub fn lll_gram(g: &[Vec<i128>]) -> (Vec<Vec<i128>>, Vec<Vec<i128>>) {
    let n = g.len();
    let mut g: Vec<Vec<i128>> = g.to_vec();
    let mut t: Vec<Vec<i128>> = (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect();
    let mut k = 1;
    while k < n {
        // size-reduce b_k against b_{k-1}, …, b_0
        for j in (0..k).rev() {
            let (mu, _) = gso(&g);
            let q = mu[k][j].round();
            if q != 0.0 {
                let q = q as i128;
                sub_multiple(&mut g, &mut t, k, j, q);
            }
        }
        let (mu, bstar) = gso(&g);
        if bstar[k] >= (0.99 - mu[k][k - 1] * mu[k][k - 1]) * bstar[k - 1] {
            k += 1;
        } else {
            swap(&mut g, &mut t, k, k - 1);
            k = (k - 1).max(1);
        }
    }
    (g, t)
}

/// b_k ← b_k − q·b_j, updating Gram and transform.
fn sub_multiple(g: &mut [Vec<i128>], t: &mut [Vec<i128>], k: usize, j: usize, q: i128) {
    let n = g.len();
    let gkj = g[k][j];
    let gjj = g[j][j];
    for i in 0..n {
        if i != k {
            g[k][i] -= q * g[j][i];
            g[i][k] = g[k][i];
        }
    }
    g[k][k] += q * q * gjj - 2 * q * gkj;
    for c in 0..n {
        t[k][c] -= q * t[j][c];
    }
}

fn swap(g: &mut [Vec<i128>], t: &mut [Vec<i128>], a: usize, b: usize) {
    g.swap(a, b);
    for row in g.iter_mut() {
        row.swap(a, b);
    }
    t.swap(a, b);
}

/// Gram–Schmidt coefficients `mu[i][j]` (j < i) and squared lengths `bstar`.
pub fn gso(g: &[Vec<i128>]) -> (Vec<Vec<f64>>, Vec<f64>) {
    let n = g.len();
    let mut mu = vec![vec![0.0; n]; n];
    let mut bstar = vec![0.0; n];
    // r[i][j] = <b_i, b*_j>
    let mut r = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..=i {
            let mut v = g[i][j] as f64;
            for l in 0..j {
                v -= mu[j][l] * r[i][l];
            }
            r[i][j] = v;
            if j < i {
                mu[i][j] = v / bstar[j];
            } else {
                bstar[i] = v;
            }
        }
    }
    (mu, bstar)
}

/// Integer Gram matrix of row vectors.
pub fn gram_of(rows: &[Vec<i64>]) -> Vec<Vec<i128>> {
    rows.iter()
        .map(|a| {
            rows.iter()
                .map(|b| a.iter().zip(b).map(|(x, y)| *x as i128 * *y as i128).sum())
                .collect()
        })
        .collect()
}

/// LLL-reduces a basis given as integer row vectors.
pub fn lll_rows(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let (_, t) = lll_gram(&gram_of(rows));
    apply_transform(&t, rows)
}

/// Rows of `t · rows`.
pub fn apply_transform(t: &[Vec<i128>], rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let m = rows[0].len();
    t.iter()
        .map(|tr| {
            (0..m)
                .map(|c| {
                    let v: i128 = tr.iter().zip(rows).map(|(a, r)| a * r[c] as i128).sum();
                    i64::try_from(v).expect("lattice vector exceeds i64")
                })
                .collect()
        })
        .collect()
}

/// Precomputed data for enumerating `{x : xᵀ G x ≤ R}`.
pub struct Enumerator {
    mu: Vec<Vec<f64>>,
    bstar: Vec<f64>,
}

impl Enumerator {
    pub fn new(g: &[Vec<i128>]) -> Self {
        let (mu, bstar) = gso(g);
        Enumerator { mu, bstar }
    }

    /// Visits every nonzero integer `x` with `xᵀ G x ≤ radius` (up to a small
    /// relative slack), one of each pair `±x`: the last nonzero coordinate is
    /// positive. `clip(x, lo, hi)` may narrow the range of the innermost
    /// coordinate `x[0]` given the others; `visit` receives the full vector.
    pub fn run<C, V>(&self, radius: f64, mut clip: C, mut visit: V)
    where
        C: FnMut(&[i64], i64, i64) -> Option<(i64, i64)>,
        V: FnMut(&[i64]),
    {
        let n = self.bstar.len();
        let mut x = vec![0i64; n];
        let r = radius * (1.0 + 1e-9) + 1e-9;
        self.level(n - 1, r, true, &mut x, &mut clip, &mut visit);
    }

    fn level<C, V>(&self, k: usize, rem: f64, all_zero: bool, x: &mut [i64], clip: &mut C, visit: &mut V)
    where
        C: FnMut(&[i64], i64, i64) -> Option<(i64, i64)>,
        V: FnMut(&[i64]),
    {
        let n = x.len();
        let c: f64 = -(k + 1..n).map(|j| self.mu[j][k] * x[j] as f64).sum::<f64>();
        let w = (rem.max(0.0) / self.bstar[k]).sqrt();
        let mut lo = (c - w).ceil() as i64;
        let hi = (c + w).floor() as i64;
        if all_zero {
            lo = lo.max(if k == 0 { 1 } else { 0 });
        }
        if k == 0 {
            let (lo, hi) = match clip(x, lo, hi) {
                Some((a, b)) => (a.max(lo), b.min(hi)),
                None => (lo, hi),
            };
            for v in lo..=hi {
                x[0] = v;
                visit(x);
            }
            x[0] = 0;
            return;
        }
        for v in lo..=hi {
            let d = v as f64 - c;
            let used = d * d * self.bstar[k];
            if used > rem {
                continue;
            }
            x[k] = v;
            self.level(k - 1, rem - used, all_zero && v == 0, x, clip, visit);
        }
        x[k] = 0;
    }
}

/// A basis (as rows) of the integer kernel `{x ∈ Z^4 : n·x = 0}` for a
/// nonzero `n`, LLL-reduced.
pub fn kernel_basis(n: [i64; 4]) -> Vec<Vec<i64>> {
    // Column operations on the row n, tracked in a unimodular u with n·u
    // ending as (g, 0, 0, 0); the last three columns of u span the kernel.
    let mut v: Vec<i128> = n.iter().map(|&x| x as i128).collect();
    let mut u: Vec<Vec<i128>> = (0..4).map(|i| (0..4).map(|j| i128::from(i == j)).collect()).collect();
    loop {
        let nz: Vec<usize> = (0..4).filter(|&i| v[i] != 0).collect();
        if nz.len() <= 1 {
            if nz.first().is_some_and(|&i| i != 0) {
                let i = nz[0];
                v.swap(0, i);
                for row in u.iter_mut() {
                    row.swap(0, i);
                }
            }
            break;
        }
        let piv = *nz.iter().min_by_key(|&&i| v[i].abs()).unwrap();
        for &i in &nz {
            if i != piv {
                let q = v[i].div_euclid(v[piv]);
                v[i] -= q * v[piv];
                for row in u.iter_mut() {
                    row[i] -= q * row[piv];
                }
            }
        }
    }
    let cols: Vec<Vec<i64>> = (1..4)
        .map(|c| (0..4).map(|r| i64::try_from(u[r][c]).expect("kernel basis exceeds i64")).collect())
        .collect();
    lll_rows(&cols)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lll_finds_short_basis() {
        let rows = vec![vec![1, 0, 0, 1_000_003], vec![0, 1, 0, 999_999], vec![0, 0, 1, 500_000]];
        let red = lll_rows(&rows);
        let g = gram_of(&red);
        let det_in: i128 = 1 + 1_000_003i128.pow(2) + 999_999i128.pow(2) + 500_000i128.pow(2);
        // the first reduced vector is far shorter than the input rows
        assert!(g[0][0] < 1000, "{red:?}");
        // Gram determinant is preserved
        let det = |m: &Vec<Vec<i128>>| {
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        };
        assert_eq!(det(&g), det_in);
    }

    #[test]
    fn enumeration_counts_ball_points() {
        // Z^3 points with |x|^2 <= 4, up to sign: (33 - 1) / 2 = 16
        let g = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        let mut seen = Vec::new();
        Enumerator::new(&g).run(4.0, |_, _, _| None, |x| seen.push(x.to_vec()));
        let brute = (-2i64..=2)
            .flat_map(|a| (-2i64..=2).flat_map(move |b| (-2i64..=2).map(move |c| [a, b, c])))
            .filter(|v| v.iter().map(|x| x * x).sum::<i64>() <= 4 && *v != [0, 0, 0])
            .count();
        assert_eq!(seen.len() * 2, brute);
        for x in &seen {
            let last = x.iter().rev().find(|&&v| v != 0).unwrap();
            assert!(*last > 0);
        }
    }

    #[test]
    fn kernel_of_normal() {
        let n = [3, -5, 7, 11];
        let k = kernel_basis(n);
        assert_eq!(k.len(), 3);
        for r in &k {
            assert_eq!(r.iter().zip(&n).map(|(a, b)| a * b).sum::<i64>(), 0);
        }
    }
}
