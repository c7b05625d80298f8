use std::sync::OnceLock;

/// Exponent vectors of the given total degree in four variables, in
/// descending lexicographic order (`x^4, x^3*y, x^3*z, ...`).
pub fn monomials4(degree: u8) -> Vec<[u8; 4]> {
    let mut out = Vec::new();
    for i in (0..=degree).rev() {
        for j in (0..=degree - i).rev() {
            for k in (0..=degree - i - j).rev() {
                out.push([i, j, k, degree - i - j - k]);
            }
        }
    }
    out
}

/// The 35 quartic monomials in four variables.
pub fn quartic_monomials() -> &'static [[u8; 4]] {
    static CELL: OnceLock<Vec<[u8; 4]>> = OnceLock::new();
    CELL.get_or_init(|| monomials4(4))
}

/// Position of a degree-`d` exponent vector inside `monomials4(d)`.
pub fn index4(e: [u8; 4]) -> usize {
    let d = (e[0] + e[1] + e[2] + e[3]) as usize;
    // Count the monomials that sort before `e` in descending lex order.
    let mut idx = 0usize;
    let mut rest = d;
    for (pos, &ei) in e.iter().enumerate().take(3) {
        let vars_left = 3 - pos; // variables after this one
        for bigger in (ei as usize + 1)..=rest {
            idx += count_monomials(vars_left, rest - bigger);
        }
        rest -= ei as usize;
    }
    idx
}

/// Number of monomials of degree `d` in `n` variables.
pub fn count_monomials(n: usize, d: usize) -> usize {
    if n == 0 {
        return usize::from(d == 0);
    }
    // binomial(d + n - 1, n - 1)
    let mut num = 1usize;
    let mut den = 1usize;
    for i in 0..(n - 1) {
        num *= d + n - 1 - i;
        den *= i + 1;
    }
    num / den
}

/// Exponent vectors of degree `degree` in three variables, descending lex.
pub fn monomials3(degree: u8) -> Vec<[u8; 3]> {
    let mut out = Vec::new();
    for i in (0..=degree).rev() {
        for j in (0..=degree - i).rev() {
            out.push([i, j, degree - i - j]);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_indices() {
        for d in 0..=4u8 {
            let ms = monomials4(d);
            assert_eq!(ms.len(), count_monomials(4, d as usize));
            for (i, m) in ms.iter().enumerate() {
                assert_eq!(index4(*m), i, "{m:?}");
            }
        }
        assert_eq!(quartic_monomials().len(), 35);
        assert_eq!(quartic_monomials()[0], [4, 0, 0, 0]);
        assert_eq!(monomials3(4).len(), 15);
    }
}
