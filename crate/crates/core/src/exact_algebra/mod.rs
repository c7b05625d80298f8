//! Exact arithmetic for quartic forms in four variables and for binary
//! forms: linear substitution, squarefree decomposition, scaled-square
//! detection and discriminants.

pub mod bivariate;
mod modp;
pub mod monomials;
pub mod quadratic;
pub mod univariate;

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::error::{Error, Result};
pub use bivariate::BiPoly;
use monomials::{index4, quartic_monomials};
use univariate::{kronecker_factor, primitive_integer, UniPoly};

/// Renders a rational as `n` or `n/d`.
pub fn rat_string(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn int(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

// ---------------------------------------------------------------------------
// Quartic forms in x, y, z, w
// ---------------------------------------------------------------------------

/// A nonzero homogeneous quartic in `x, y, z, w` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuarticForm {
    coeffs: Vec<BigInt>,
}

impl QuarticForm {
    /// Builds a form from `(exponent, coefficient)` terms; like terms add up.
    pub fn from_terms<I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = ([u8; 4], BigInt)>,
    {
        let mut coeffs = vec![BigInt::zero(); 35];
        let mut bad = Vec::new();
        for (e, c) in terms {
            if e.iter().map(|&x| x as u32).sum::<u32>() != 4 {
                bad.push(format!("{e:?}"));
                continue;
            }
            coeffs[index4(e)] += c;
        }
        if !bad.is_empty() {
            return Err(Error::NotQuartic { offending: bad.join(", ") });
        }
        if coeffs.iter().all(Zero::is_zero) {
            return Err(Error::ZeroForm);
        }
        Ok(QuarticForm { coeffs })
    }

    pub fn from_i64_terms(terms: &[([u8; 4], i64)]) -> Result<Self> {
        Self::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    /// Dense coefficients aligned with [`monomials::quartic_monomials`].
    pub fn dense(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, e: [u8; 4]) -> &BigInt {
        &self.coeffs[index4(e)]
    }

    /// Nonzero terms in descending lexicographic monomial order.
    pub fn terms(&self) -> impl Iterator<Item = ([u8; 4], &BigInt)> {
        quartic_monomials()
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (*e, c))
    }

    /// Gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn eval(&self, p: &[BigInt; 4]) -> BigInt {
        self.terms()
            .map(|(e, c)| {
                let mut t = c.clone();
                for (x, &k) in p.iter().zip(&e) {
                    for _ in 0..k {
                        t *= x;
                    }
                }
                t
            })
            .sum()
    }

    pub fn eval_i64(&self, p: &[i64; 4]) -> BigInt {
        self.eval(&p.map(BigInt::from))
    }

    /// Partial derivatives evaluated at an integer point.
    pub fn gradient(&self, p: &[BigInt; 4]) -> [BigInt; 4] {
        let mut g: [BigInt; 4] = Default::default();
        for (e, c) in self.terms() {
            for (i, gi) in g.iter_mut().enumerate() {
                if e[i] == 0 {
                    continue;
                }
                let mut t = c * BigInt::from(e[i]);
                for (j, x) in p.iter().enumerate() {
                    let k = if i == j { e[j] - 1 } else { e[j] };
                    for _ in 0..k {
                        t *= x;
                    }
                }
                *gi += t;
            }
        }
        g
    }

    pub fn scale(&self, s: &BigInt) -> Result<Self> {
        Self::from_terms(self.terms().map(|(e, c)| (e, c * s)))
    }

    /// Sum of two forms; fails when they cancel completely.
    pub fn add(&self, o: &Self) -> Result<Self> {
        Self::from_terms(self.terms().chain(o.terms()).map(|(e, c)| (e, c.clone())))
    }

    /// The form `F(L x)` for a linear substitution `x_i ↦ Σ_j rows[i][j]·x_j`.
    pub fn compose_linear(&self, rows: &[[BigInt; 4]; 4]) -> Result<Self> {
        let mut out: Vec<BigInt> = vec![BigInt::zero(); 35];
        for (e, c) in self.terms() {
            // Expand the product of linear forms as a sparse polynomial.
            let mut poly: Vec<([u8; 4], BigInt)> = vec![([0; 4], c.clone())];
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    let mut next: Vec<([u8; 4], BigInt)> = Vec::new();
                    for (m, v) in &poly {
                        for (j, r) in rows[i].iter().enumerate() {
                            if r.is_zero() {
                                continue;
                            }
                            let mut m2 = *m;
                            m2[j] += 1;
                            let val = v * r;
                            match next.iter_mut().find(|(mm, _)| *mm == m2) {
                                Some(slot) => slot.1 += val,
                                None => next.push((m2, val)),
                            }
                        }
                    }
                    poly = next;
                }
            }
            for (m, v) in poly {
                out[index4(m)] += v;
            }
        }
        if out.iter().all(Zero::is_zero) {
            return Err(Error::ZeroForm);
        }
        Ok(QuarticForm { coeffs: out })
    }
}

// ---------------------------------------------------------------------------
// Binary forms
// ---------------------------------------------------------------------------

/// A binary form `Σ c_i u^(d-i) v^i` with rational coefficients listed from
/// `u^d` down to `v^d`. The zero form is kept distinct: it has no degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    coeffs: Vec<BigRational>,
}

impl BinaryForm {
    /// Form of degree `coeffs.len() - 1`, or the zero form when every
    /// coefficient vanishes.
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        if coeffs.iter().all(Zero::is_zero) {
            BinaryForm { coeffs: Vec::new() }
        } else {
            BinaryForm { coeffs }
        }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| int(x)).collect())
    }

    pub fn from_bigints(c: &[BigInt]) -> Self {
        Self::new(c.iter().map(|x| BigRational::from_integer(x.clone())).collect())
    }

    pub fn zero() -> Self {
        BinaryForm { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficients from `u^d` to `v^d`; empty for the zero form.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::from_ints(&[1]), |acc, _| acc.mul(self))
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        match (self.degree(), o.degree()) {
            (None, _) => o.clone(),
            (_, None) => self.clone(),
            (Some(a), Some(b)) => {
                assert_eq!(a, b, "adding binary forms of different degrees");
                Self::new(self.coeffs.iter().zip(&o.coeffs).map(|(x, y)| x + y).collect())
            }
        }
    }

    pub fn eval(&self, u: &BigRational, v: &BigRational) -> BigRational {
        let d = match self.degree() {
            Some(d) => d,
            None => return BigRational::zero(),
        };
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * num_traits::pow(u.clone(), d - i) * num_traits::pow(v.clone(), i))
            .sum()
    }

    /// Index of the first nonzero coefficient (the power of `v` dividing
    /// the form).
    pub fn v_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// The primitive integer form with positive first nonzero coefficient
    /// that is a rational multiple of `self`.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        // primitive_integer normalises the *last* nonzero entry; feed it the
        // reversed vector so the sign convention applies to the first one.
        let rev: Vec<BigRational> = self.coeffs.iter().rev().cloned().collect();
        let mut ints = primitive_integer(&rev);
        ints.reverse();
        Self::from_bigints(&ints)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Splits off the power of `v` and dehomogenises the rest at `v = 1`.
    fn dehomogenize(&self) -> (usize, UniPoly) {
        let d = self.degree().expect("dehomogenize on the zero form");
        let k = self.v_order().unwrap();
        let asc: Vec<BigRational> = (0..=d - k).map(|j| self.coeffs[d - j].clone()).collect();
        (k, UniPoly::new(asc))
    }

    fn homogenize(p: &UniPoly, degree: usize) -> Self {
        let c = p.coeffs();
        Self::new((0..=degree).map(|i| c.get(degree - i).cloned().unwrap_or_else(BigRational::zero)).collect())
    }

    /// Greatest common divisor as a primitive integer form; `gcd(0, f) = f`.
    pub fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.primitive();
        }
        if o.is_zero() {
            return self.primitive();
        }
        let (ka, pa) = self.dehomogenize();
        let (kb, pb) = o.dehomogenize();
        let g = pa.gcd(&pb);
        let e = g.degree().unwrap_or(0);
        let k = ka.min(kb);
        let mut out = Self::homogenize(&g, e);
        if k > 0 {
            out = out.mul(&Self::from_ints(&[0, 1]).pow(k as u32));
        }
        out.primitive()
    }

    /// Exact quotient by a divisor.
    pub fn div_exact(&self, d: &Self) -> Self {
        let (ka, pa) = self.dehomogenize();
        let (kb, pb) = d.dehomogenize();
        assert!(ka >= kb, "divisor does not divide");
        let (q, r) = pa.div_rem(&pb);
        assert!(r.is_zero(), "divisor does not divide");
        let deg = self.degree().unwrap() - d.degree().unwrap();
        let mut out = Self::homogenize(&q, deg - (ka - kb));
        if ka > kb {
            out = out.mul(&Self::from_ints(&[0, 1]).pow((ka - kb) as u32));
        }
        out
    }

    /// Rational roots `(u : v)` in canonical coprime form, `(1:0)` first when
    /// present, then by increasing `u/v`.
    pub fn rational_roots(&self) -> Vec<(BigInt, BigInt)> {
        let Some(d) = self.degree() else { return Vec::new() };
        if d == 0 {
            return Vec::new();
        }
        let (k, p) = self.dehomogenize();
        let mut out = Vec::new();
        if k > 0 {
            out.push((BigInt::one(), BigInt::zero()));
        }
        for r in p.rational_roots() {
            let (n, dn) = (r.numer().clone(), r.denom().clone());
            out.push(canonical_pair(n, dn));
        }
        out
    }

    /// Renders the form in the given pair of variable names.
    pub fn render(&self, x: &str, y: &str) -> String {
        let Some(d) = self.degree() else { return "0".to_string() };
        let mut s = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut mono = Vec::new();
            if d - i > 0 {
                mono.push(power(x, d - i));
            }
            if i > 0 {
                mono.push(power(y, i));
            }
            push_term(&mut s, c, &mono.join("*"));
        }
        s
    }
}

fn power(x: &str, k: usize) -> String {
    if k == 1 {
        x.to_string()
    } else {
        format!("{x}^{k}")
    }
}

/// Appends `± c*mono` to a running sum.
pub(crate) fn push_term(s: &mut String, c: &BigRational, mono: &str) {
    let neg = c.is_negative();
    let a = c.abs();
    if s.is_empty() {
        if neg {
            s.push('-');
        }
    } else {
        s.push_str(if neg { " - " } else { " + " });
    }
    if mono.is_empty() {
        s.push_str(&rat_string(&a));
    } else if a.is_one() {
        s.push_str(mono);
    } else {
        s.push_str(&rat_string(&a));
        s.push('*');
        s.push_str(mono);
    }
}

/// `(a : b)` scaled to coprime integers with the first nonzero entry positive.
pub fn canonical_pair(a: BigInt, b: BigInt) -> (BigInt, BigInt) {
    let g = a.gcd(&b);
    let (mut a, mut b) = if g.is_zero() { (a, b) } else { (a / &g, b / &g) };
    if a.is_negative() || (a.is_zero() && b.is_negative()) {
        a = -a;
        b = -b;
    }
    (a, b)
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("u", "v"))
    }
}

impl Serialize for BinaryForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("BinaryForm", 3)?;
        st.serialize_field("degree", &self.degree())?;
        st.serialize_field("coefficients", &self.coeffs.iter().map(rat_string).collect::<Vec<_>>())?;
        st.serialize_field("text", &self.to_string())?;
        st.end()
    }
}

// ---------------------------------------------------------------------------
// Squarefree decomposition
// ---------------------------------------------------------------------------

/// `f = unit · Π factor^multiplicity` with primitive integer, squarefree,
/// pairwise coprime factors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SquarefreeDecomposition {
    #[serde(serialize_with = "ser_rat")]
    pub unit: BigRational,
    pub factors: Vec<(BinaryForm, u32)>,
}

pub(crate) fn ser_rat<S: serde::Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&rat_string(r))
}

impl SquarefreeDecomposition {
    /// Multiplies the decomposition back out.
    pub fn expand(&self) -> BinaryForm {
        self.factors
            .iter()
            .fold(BinaryForm::from_ints(&[1]), |acc, (f, m)| acc.mul(&f.pow(*m)))
            .scale(&self.unit)
    }

    /// Root multiplicities over the algebraic closure, descending.
    pub fn root_partition(&self) -> Vec<u32> {
        let mut parts: Vec<u32> = self
            .factors
            .iter()
            .flat_map(|(f, m)| std::iter::repeat(*m).take(f.degree().unwrap_or(0)))
            .collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts
    }
}

fn factor_order(a: &(BinaryForm, u32), b: &(BinaryForm, u32)) -> Ordering {
    b.1.cmp(&a.1)
        .then(a.0.degree().cmp(&b.0.degree()))
        .then_with(|| a.0.coeffs().cmp(b.0.coeffs()))
}

/// Squarefree decomposition of a nonzero binary form (Yun's algorithm on
/// the dehomogenised polynomial, with the power of `v` split off first).
/// Factors are ordered by multiplicity (descending), then degree, then
/// coefficients.
pub fn squarefree_decompose(f: &BinaryForm) -> Result<SquarefreeDecomposition> {
    if f.is_zero() {
        return Err(Error::ZeroForm);
    }
    let (k, p) = f.dehomogenize();
    let mut factors: Vec<(BinaryForm, u32)> = p
        .yun()
        .into_iter()
        .map(|(g, m)| (BinaryForm::homogenize(&g, g.degree().unwrap()).primitive(), m))
        .collect();
    if k > 0 {
        factors.push((BinaryForm::from_ints(&[0, 1]), k as u32));
    }
    factors.sort_by(factor_order);
    let product = factors
        .iter()
        .fold(BinaryForm::from_ints(&[1]), |acc, (g, m)| acc.mul(&g.pow(*m)));
    let i = f.v_order().unwrap();
    let unit = f.coeffs()[i].clone() / product.coeffs()[i].clone();
    Ok(SquarefreeDecomposition { unit, factors })
}

/// Decides whether a binary quartic is `c·g²` over Q; returns `(c, g)` with
/// `g` a primitive integer quadratic with positive leading coefficient.
pub fn is_scaled_square(f: &BinaryForm) -> Result<Option<(BigRational, BinaryForm)>> {
    match f.degree() {
        None => return Err(Error::ZeroForm),
        Some(4) => {}
        Some(d) => return Err(Error::Degree { expected: 4, found: d }),
    }
    let dec = squarefree_decompose(f)?;
    if dec.factors.iter().any(|(_, m)| m % 2 == 1) {
        return Ok(None);
    }
    let g = dec
        .factors
        .iter()
        .fold(BinaryForm::from_ints(&[1]), |acc, (h, m)| acc.mul(&h.pow(m / 2)));
    Ok(Some((dec.unit, g)))
}

/// `b² − 4ac` of `a·m² + b·mn + c·n²`.
pub fn binary_discriminant(q: &BinaryForm) -> Result<BigRational> {
    match q.degree() {
        None => Err(Error::ZeroForm),
        Some(2) => {
            let c = q.coeffs();
            Ok(&c[1] * &c[1] - int(4) * &c[0] * &c[2])
        }
        Some(d) => Err(Error::Degree { expected: 2, found: d }),
    }
}

// ---------------------------------------------------------------------------
// Substitution
// ---------------------------------------------------------------------------

/// Coefficient rings a quartic can be restricted over.
pub trait Coeff: Clone {
    fn c_zero() -> Self;
    fn c_is_zero(&self) -> bool;
    fn c_add(&self, o: &Self) -> Self;
    fn c_mul(&self, o: &Self) -> Self;
    fn c_from_int(c: &BigInt) -> Self;
}

impl Coeff for BigRational {
    fn c_zero() -> Self {
        Zero::zero()
    }
    fn c_is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn c_add(&self, o: &Self) -> Self {
        self + o
    }
    fn c_mul(&self, o: &Self) -> Self {
        self * o
    }
    fn c_from_int(c: &BigInt) -> Self {
        BigRational::from_integer(c.clone())
    }
}

/// Restricts `F` along `x_i = images[i].0·u + images[i].1·v`, returning the
/// five coefficients of `u^4, u^3 v, …, v^4`.
pub fn restrict_generic<R: Coeff>(form: &QuarticForm, images: &[[R; 2]; 4]) -> [R; 5] {
    let mut out: [R; 5] = std::array::from_fn(|_| R::c_zero());
    for (e, c) in form.terms() {
        let mut poly: Vec<R> = vec![R::c_from_int(c)];
        for (i, &k) in e.iter().enumerate() {
            for _ in 0..k {
                let mut next = vec![R::c_zero(); poly.len() + 1];
                for (j, a) in poly.iter().enumerate() {
                    if a.c_is_zero() {
                        continue;
                    }
                    next[j] = next[j].c_add(&a.c_mul(&images[i][0]));
                    next[j + 1] = next[j + 1].c_add(&a.c_mul(&images[i][1]));
                }
                poly = next;
            }
        }
        for (slot, v) in out.iter_mut().zip(poly) {
            *slot = slot.c_add(&v);
        }
    }
    out
}

/// Evaluates `F` at four linear binary forms.
pub fn substitute_linear(form: &QuarticForm, images: &[BinaryForm; 4]) -> Result<BinaryForm> {
    let mut lin: [[BigRational; 2]; 4] = Default::default();
    for (i, img) in images.iter().enumerate() {
        match img.degree() {
            None => {}
            Some(1) => lin[i] = [img.coeff(0), img.coeff(1)],
            Some(_) => return Err(Error::MalformedSubstitution { index: i }),
        }
    }
    Ok(BinaryForm::new(restrict_generic(form, &lin).to_vec()))
}

// ---------------------------------------------------------------------------
// Factorisation over Q (best effort beyond rational roots)
// ---------------------------------------------------------------------------

/// One factor of a factorisation over Q.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalFactor {
    pub form: BinaryForm,
    pub multiplicity: u32,
    /// `Some(true)` when proven irreducible over Q, `None` when the bounded
    /// factor search gave up.
    pub irreducible: Option<bool>,
}

/// Factors a nonzero binary form over Q: rational linear factors exactly,
/// and higher-degree factors split by a bounded Kronecker search.
pub fn factor_over_q(f: &BinaryForm) -> Result<(BigRational, Vec<RationalFactor>)> {
    let dec = squarefree_decompose(f)?;
    let mut out = Vec::new();
    for (h, m) in &dec.factors {
        for (piece, irr) in split_squarefree(h) {
            out.push(RationalFactor { form: piece, multiplicity: *m, irreducible: irr });
        }
    }
    out.sort_by(|a, b| factor_order(&(a.form.clone(), a.multiplicity), &(b.form.clone(), b.multiplicity)));
    // unit is unchanged: the pieces are primitive with positive leading
    // coefficient, so their product equals the primitive factor they split.
    Ok((dec.unit, out))
}

fn split_squarefree(h: &BinaryForm) -> Vec<(BinaryForm, Option<bool>)> {
    let d = h.degree().unwrap_or(0);
    if d <= 1 {
        return vec![(h.clone(), Some(true))];
    }
    let mut rest = h.clone();
    let mut out = Vec::new();
    for (a, b) in h.rational_roots() {
        // root (a:b) ↔ linear factor b·u − a·v
        let lin = BinaryForm::from_bigints(&[b.clone(), -a.clone()]).primitive();
        rest = rest.div_exact(&lin);
        out.push((lin, Some(true)));
    }
    let e = rest.degree().unwrap_or(0);
    if e == 0 {
        return out;
    }
    if e <= 3 {
        out.push((rest.primitive(), Some(true)));
        return out;
    }
    out.extend(split_no_linear(&rest.primitive()));
    out
}

/// Splits a primitive form without rational roots into higher-degree pieces.
fn split_no_linear(h: &BinaryForm) -> Vec<(BinaryForm, Option<bool>)> {
    let e = h.degree().unwrap();
    if e <= 3 {
        return vec![(h.clone(), Some(true))];
    }
    let (_, p) = h.dehomogenize(); // no v factor: v-order is 0
    let ints = p.primitive_integer();
    let possible = modp::possible_factor_degrees(&ints);
    let mut undecided = false;
    for k in (2..=e / 2).filter(|&k| possible[k]) {
        match kronecker_factor(&ints, k) {
            Ok(Some(fac)) => {
                let g = BinaryForm::homogenize(&UniPoly::from_ints(&fac), k).primitive();
                let q = h.div_exact(&g).primitive();
                let mut out = split_no_linear(&g);
                out.extend(split_no_linear(&q));
                return out;
            }
            Ok(None) => {}
            Err(()) => undecided = true,
        }
    }
    vec![(h.clone(), if undecided { None } else { Some(true) })]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bf(c: &[i64]) -> BinaryForm {
        BinaryForm::from_ints(c)
    }

    fn fermat() -> QuarticForm {
        QuarticForm::from_i64_terms(&[([4, 0, 0, 0], 1), ([0, 4, 0, 0], 1), ([0, 0, 4, 0], 1), ([0, 0, 0, 4], 1)])
            .unwrap()
    }

    fn example() -> QuarticForm {
        QuarticForm::from_i64_terms(&[([4, 0, 0, 0], 1), ([1, 3, 0, 0], -1), ([0, 0, 4, 0], -1), ([0, 0, 1, 3], 1)])
            .unwrap()
    }

    #[test]
    fn substitute_examples() {
        let u = bf(&[1, 0]);
        let v = bf(&[0, 1]);
        let z = BinaryForm::zero();
        let f = substitute_linear(&fermat(), &[u.clone(), v.clone(), z.clone(), z]).unwrap();
        assert_eq!(f, bf(&[1, 0, 0, 0, 1]));

        let imgs = [bf(&[8, 0]), v.clone(), u.clone(), bf(&[0, 2])];
        assert_eq!(substitute_linear(&example(), &imgs).unwrap(), bf(&[4095, 0, 0, 0, 0]));

        let imgs = [u.clone(), v.clone(), u.clone(), v.clone()];
        assert!(substitute_linear(&example(), &imgs).unwrap().is_zero());

        let bad = [bf(&[1, 0, 0]), v.clone(), u, v];
        assert_eq!(substitute_linear(&example(), &bad), Err(Error::MalformedSubstitution { index: 0 }));
    }

    #[test]
    fn squarefree_examples() {
        let d = squarefree_decompose(&bf(&[0, 1, 0, 0, 0])).unwrap(); // u^3 v
        assert_eq!(d.unit, int(1));
        assert_eq!(d.factors, vec![(bf(&[1, 0]), 3), (bf(&[0, 1]), 1)]);

        let d = squarefree_decompose(&bf(&[1, 2, 3, 2, 1])).unwrap();
        assert_eq!(d.unit, int(1));
        assert_eq!(d.factors, vec![(bf(&[1, 1, 1]), 2)]);

        let d = squarefree_decompose(&bf(&[4095, 0, 0, 0, 0])).unwrap();
        assert_eq!(d.unit, int(4095));
        assert_eq!(d.factors, vec![(bf(&[1, 0]), 4)]);

        assert_eq!(squarefree_decompose(&BinaryForm::zero()), Err(Error::ZeroForm));
    }

    #[test]
    fn scaled_square_examples() {
        assert_eq!(is_scaled_square(&bf(&[1, 2, 3, 2, 1])).unwrap(), Some((int(1), bf(&[1, 1, 1]))));
        assert_eq!(is_scaled_square(&bf(&[1, 0, 0, 0, 1])).unwrap(), None);
        assert_eq!(is_scaled_square(&bf(&[4095, 0, 0, 0, 0])).unwrap(), Some((int(4095), bf(&[1, 0, 0]))));
        assert_eq!(is_scaled_square(&BinaryForm::zero()), Err(Error::ZeroForm));
        assert_eq!(is_scaled_square(&bf(&[1, 0, 1])), Err(Error::Degree { expected: 4, found: 2 }));
        // c need not be a square
        assert_eq!(is_scaled_square(&bf(&[-3, 0, 6, 0, -3])).unwrap(), Some((int(-3), bf(&[1, 0, -1]))));
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(binary_discriminant(&bf(&[1, 0, 2])).unwrap(), int(-8));
        assert_eq!(binary_discriminant(&bf(&[0, 1, 0])).unwrap(), int(1));
        assert_eq!(binary_discriminant(&bf(&[1, 2, 1])).unwrap(), int(0));
        assert_eq!(binary_discriminant(&bf(&[1, 0, 0, 1])), Err(Error::Degree { expected: 2, found: 3 }));
    }

    #[test]
    fn rational_roots_of_forms() {
        // u^2 v (2u - 3v)
        let f = bf(&[0, 0, 1, 0]).mul(&bf(&[2, -3]));
        let r = f.rational_roots();
        let r: Vec<(i64, i64)> = r
            .iter()
            .map(|(a, b)| (a.try_into().unwrap(), b.try_into().unwrap()))
            .collect();
        assert_eq!(r, vec![(1, 0), (0, 1), (3, 2)]);
    }

    #[test]
    fn factor_branch_like_form() {
        // a^5 b + a b^5 = a b (a^4 + b^4)
        let f = bf(&[0, 1, 0, 0, 0, 1, 0]);
        let (unit, fs) = factor_over_q(&f).unwrap();
        assert_eq!(unit, int(1));
        let forms: Vec<_> = fs.iter().map(|x| (x.form.clone(), x.multiplicity, x.irreducible)).collect();
        assert_eq!(
            forms,
            vec![
                (bf(&[0, 1]), 1, Some(true)),
                (bf(&[1, 0]), 1, Some(true)),
                (bf(&[1, 0, 0, 0, 1]), 1, Some(true)),
            ]
        );
        // (u^2+v^2)(u^2+2v^2) splits into two quadratics
        let g = bf(&[1, 0, 1]).mul(&bf(&[1, 0, 2]));
        let (_, fs) = factor_over_q(&g).unwrap();
        assert_eq!(fs.len(), 2);
    }

    #[test]
    fn gcd_of_forms() {
        let a = bf(&[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1]); // u^12 - v^12
        let b = bf(&[1, -1]).mul(&bf(&[1, 1])).mul(&bf(&[0, 1]));
        assert_eq!(a.gcd(&b), bf(&[1, 0, -1]));
    }
}
