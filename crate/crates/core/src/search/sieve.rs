//! Enumeration of the rational lines of Plücker height ≤ H whose integer
//! points lie in a given full-rank lattice Λ ⊂ Z^4.
//!
//! Every such line has a Gauss-reduced basis (a, b) of its integer points with
//! |a|² ≤ 2√2·H. For each primitive short a ∈ Λ we complete it to a basis of
//! Λ, and b then runs over the projected lattice with |a∧b|² ≤ 6H², its
//! innermost coordinate clipped to the exact interval allowed by the six
//! constraints |P_j| ≤ H. Each line is produced exactly once.

use num_integer::Integer;

use crate::lattice::{apply_transform, gram_of, lll_gram, lll_rows, Enumerator};
use crate::projective::{canonicalize, wedge};

fn dot(a: &[i64; 4], b: &[i64; 4]) -> i128 {
    a.iter().zip(b).map(|(x, y)| *x as i128 * *y as i128).sum()
}

fn to4(v: &[i64]) -> [i64; 4] {
    [v[0], v[1], v[2], v[3]]
}

/// Rows 1..3 of a basis of Λ whose row 0 is `±x·W` (x primitive).
fn complete_basis(x: &[i64], w: &[Vec<i64>]) -> [[i64; 4]; 3] {
    // Column operations bring x to (±1, 0, 0, 0); the inverse row operations
    // applied to W give a basis whose first row is ±a.
    let mut x: Vec<i128> = x.iter().map(|&v| v as i128).collect();
    let mut rows: Vec<[i128; 4]> = w.iter().map(|r| std::array::from_fn(|c| r[c] as i128)).collect();
    loop {
        let nz: Vec<usize> = (0..4).filter(|&i| x[i] != 0).collect();
        if nz.len() == 1 {
            let i = nz[0];
            x.swap(0, i);
            rows.swap(0, i);
            break;
        }
        let piv = *nz.iter().min_by_key(|&&i| x[i].abs()).unwrap();
        for &i in &nz {
            if i != piv {
                let q = x[i].div_euclid(x[piv]);
                x[i] -= q * x[piv];
                // column op on x ⇔ row_piv += q·row_i on the inverse
                let ri = rows[i];
                for c in 0..4 {
                    rows[piv][c] += q * ri[c];
                }
            }
        }
    }
    std::array::from_fn(|k| rows[k + 1].map(|v| i64::try_from(v).expect("basis entry exceeds i64")))
}

/// Canonical-sign lexicographically smallest among vectors of squared length n.
fn is_preferred_shortest(a: &[i64; 4], b: &[i64; 4], n: i128) -> bool {
    let ca = canonicalize(*a).unwrap();
    let cands = [*b, std::array::from_fn(|i| a[i] + b[i]), std::array::from_fn(|i| a[i] - b[i])];
    cands.iter().filter(|v| dot(v, v) == n).all(|v| canonicalize(*v).unwrap() >= ca)
}

/// Calls `visit(a, b, plucker)` for every line of canonical Plücker height
/// ≤ `h` whose integer points lie in the lattice with basis rows `basis`.
/// `(a, b)` is a Gauss-reduced basis of the line's integer points with `a`
/// in canonical sign; `plucker` is canonical. `per_a` is called before the
/// first line through each `a` and its result handed to `visit`.
pub(crate) fn lines_in_lattice<S, P, V>(basis: &[[i64; 4]; 4], h: i64, mut per_a: P, mut visit: V)
where
    P: FnMut(&[i64; 4]) -> S,
    V: FnMut(&mut S, &[i64; 4], &[i64; 4], [i64; 6]),
{
    let w = lll_rows(&basis.iter().map(|r| r.to_vec()).collect::<Vec<_>>());
    let gw = gram_of(&w);
    let hh = h as i128;
    // |a|^2 ≤ 2√2·h  ⇔  |a|^4 ≤ 8h^2
    let na_max = (8.0 * (h as f64) * (h as f64)).sqrt().floor() + 1.0;
    Enumerator::new(&gw).run(
        na_max,
        |_, _, _| None,
        |x| {
            let raw: [i64; 4] = std::array::from_fn(|c| (0..4).map(|r| x[r] * w[r][c]).sum());
            let n = dot(&raw, &raw);
            if n * n > 8 * hh * hh {
                return;
            }
            if raw.iter().fold(0i64, |g, v| g.gcd(v)) != 1 {
                return;
            }
            let a = canonicalize(raw).unwrap();
            let rest = complete_basis(x, &w);
            // projected Gram: n·(wi·wj) − (a·wi)(a·wj)
            let proj: Vec<Vec<i128>> = (0..3)
                .map(|i| (0..3).map(|j| n * dot(&rest[i], &rest[j]) - dot(&a, &rest[i]) * dot(&a, &rest[j])).collect())
                .collect();
            let (g2, t) = lll_gram(&proj);
            let rv: Vec<Vec<i64>> = rest.iter().map(|r| r.to_vec()).collect();
            let ws: Vec<[i64; 4]> = apply_transform(&t, &rv).iter().map(|r| to4(r)).collect();
            let q: Vec<[i128; 6]> = ws.iter().map(|v| wedge(&a, v)).collect();
            let mut state: Option<S> = None;
            Enumerator::new(&g2).run(
                (6 * hh * hh) as f64,
                |y, lo, hi| {
                    let (mut lo, mut hi) = (lo as i128, hi as i128);
                    for j in 0..6 {
                        let c = y[1] as i128 * q[1][j] + y[2] as i128 * q[2][j];
                        let d = q[0][j];
                        if d == 0 {
                            if c.abs() > hh {
                                return Some((1, 0));
                            }
                            continue;
                        }
                        // −h ≤ c + y0·d ≤ h
                        let (l, u) = if d > 0 {
                            (ceil_div(-hh - c, d), Integer::div_floor(&(hh - c), &d))
                        } else {
                            (ceil_div(hh - c, d), Integer::div_floor(&(-hh - c), &d))
                        };
                        lo = lo.max(l);
                        hi = hi.min(u);
                    }
                    if lo > hi {
                        return Some((1, 0));
                    }
                    Some((lo as i64, hi as i64))
                },
                |y| {
                    let b0: [i64; 4] = std::array::from_fn(|c| (0..3).map(|r| y[r] * ws[r][c]).sum());
                    let t = dot(&a, &b0);
                    let k = Integer::div_floor(&(n - 2 * t), &(2 * n));
                    let b: [i64; 4] = std::array::from_fn(|c| b0[c] + k as i64 * a[c]);
                    let nb = dot(&b, &b);
                    if nb < n || (nb == n && !is_preferred_shortest(&a, &b, n)) {
                        return;
                    }
                    let p: [i128; 6] = std::array::from_fn(|j| (0..3).map(|r| y[r] as i128 * q[r][j]).sum());
                    if p.iter().any(|v| v.abs() > hh) {
                        return;
                    }
                    let p = p.map(|v| v as i64);
                    if p.iter().fold(0i64, |g, v| g.gcd(v)) != 1 {
                        return;
                    }
                    let s = state.get_or_insert_with(|| per_a(&a));
                    visit(s, &a, &b, canonicalize(p).unwrap());
                },
            );
        },
    );
}

fn ceil_div(n: i128, d: i128) -> i128 {
    -Integer::div_floor(&-n, &d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn identity_lattice_counts_small_heights() {
        let id = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]];
        for (h, expected) in [(1, 122usize), (2, 1034)] {
            let mut seen = HashSet::new();
            lines_in_lattice(&id, h, |_| (), |_, a, b, p| {
                assert_eq!(canonicalize(wedge(a, b).map(|v| v as i64)).unwrap(), p);
                assert!(seen.insert(p), "duplicate {p:?}");
            });
            assert_eq!(seen.len(), expected, "H = {h}");
        }
    }
}
