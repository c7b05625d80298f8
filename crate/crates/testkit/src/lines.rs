//! Lines by brute force over Plücker vectors.

use std::collections::BTreeSet;

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// All primitive vectors in `[−h, h]^6` satisfying the Plücker relation, up
/// to sign, first nonzero entry positive.
pub fn brute_force_plucker(h: i64) -> BTreeSet<[i64; 6]> {
    let side = 2 * h + 1;
    let total = side.pow(6);
    let mut out = BTreeSet::new();
    for code in 0..total {
        let mut c = code;
        let mut p = [0i64; 6];
        for slot in p.iter_mut() {
            *slot = c % side - h;
            c /= side;
        }
        let Some(first) = p.iter().copied().find(|&v| v != 0) else { continue };
        if first < 0 {
            continue;
        }
        if p[0] * p[5] - p[1] * p[4] + p[2] * p[3] != 0 {
            continue;
        }
        if p.iter().fold(0, |g, &v| gcd(g, v)) != 1 {
            continue;
        }
        out.insert(p);
    }
    out
}

/// Plücker vector `(p01, p02, p03, p12, p13, p23)` of the span of `a, b`.
pub fn plucker(a: &[i64; 4], b: &[i64; 4]) -> [i64; 6] {
    let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    pairs.map(|(i, j)| a[i] * b[j] - a[j] * b[i])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn height_one_count() {
        assert_eq!(brute_force_plucker(1).len(), 122);
    }
}
