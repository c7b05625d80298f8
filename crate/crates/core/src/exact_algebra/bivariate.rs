use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{BinaryForm, Coeff};

/// A polynomial in two indeterminates `s0, s1` with rational coefficients,
/// keyed by the exponent pair.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigRational>,
}

impl BiPoly {
    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: BigRational, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        BiPoly { terms }
    }

    pub fn from_int_monomial(c: i64, i: u32, j: u32) -> Self {
        Self::monomial(BigRational::from_integer(BigInt::from(c)), i, j)
    }

    /// `c0·s0 + c1·s1`.
    pub fn linear(c0: BigRational, c1: BigRational) -> Self {
        Coeff::c_add(&Self::monomial(c0, 1, 0), &Self::monomial(c1, 0, 1))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigRational)> {
        self.terms.iter()
    }

    pub fn neg(&self) -> Self {
        BiPoly { terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Coeff::c_add(self, &o.neg())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return BiPoly::default();
        }
        BiPoly { terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect() }
    }

    /// Total degree when homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|(i, j)| i + j);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    /// The homogeneous polynomial as a binary form in `(s0, s1)` of the given
    /// degree (`s0^d` first). Panics on a non-homogeneous input.
    pub fn to_binary_form(&self, degree: u32) -> BinaryForm {
        let mut c = vec![BigRational::zero(); degree as usize + 1];
        for (&(i, j), v) in &self.terms {
            assert_eq!(i + j, degree, "polynomial is not homogeneous of degree {degree}");
            c[j as usize] = v.clone();
        }
        BinaryForm::new(c)
    }

    /// Renders in `s0, s1`, highest power of `s0` first.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (&(i, j), v) in self.terms.iter().rev() {
            let mut mono = Vec::new();
            for (k, name) in [(i, "s0"), (j, "s1")] {
                match k {
                    0 => {}
                    1 => mono.push(name.to_string()),
                    _ => mono.push(format!("{name}^{k}")),
                }
            }
            super::push_term(&mut s, v, &mono.join("*"));
        }
        s
    }

    pub fn eval(&self, s0: &BigRational, s1: &BigRational) -> BigRational {
        self.terms
            .iter()
            .map(|(&(i, j), v)| v * num_traits::pow(s0.clone(), i as usize) * num_traits::pow(s1.clone(), j as usize))
            .sum()
    }
}

impl Coeff for BiPoly {
    fn c_zero() -> Self {
        BiPoly::default()
    }

    fn c_is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn c_add(&self, o: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (k, v) in &o.terms {
            let e = terms.entry(*k).or_insert_with(BigRational::zero);
            *e += v;
            if e.is_zero() {
                terms.remove(k);
            }
        }
        BiPoly { terms }
    }

    fn c_mul(&self, o: &Self) -> Self {
        let mut out = BiPoly::default();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &o.terms {
                out = Coeff::c_add(&out, &BiPoly::monomial(a * b, i + k, j + l));
            }
        }
        out
    }

    fn c_from_int(c: &BigInt) -> Self {
        BiPoly::constant(BigRational::from_integer(c.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let s0 = BiPoly::from_int_monomial(1, 1, 0);
        let s1 = BiPoly::from_int_monomial(1, 0, 1);
        let sum = Coeff::c_add(&s0, &s1);
        let sq = Coeff::c_mul(&sum, &sum);
        assert_eq!(sq.homogeneous_degree(), Some(2));
        assert_eq!(sq.to_binary_form(2), BinaryForm::from_ints(&[1, 2, 1]));
        assert!(Coeff::c_is_zero(&sum.sub(&sum)));
        let two = BigRational::from_integer(BigInt::from(2));
        let three = BigRational::from_integer(BigInt::from(3));
        assert_eq!(sq.render(), "s0^2 + 2*s0*s1 + s1^2");
        assert_eq!(sq.eval(&two, &three), BigRational::from_integer(BigInt::from(25)));
    }
}
