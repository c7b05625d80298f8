//! Contact of a line with a quartic surface.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_algebra::quadratic::{squarefree_split, QuadElem};
use crate::exact_algebra::{
    binary_discriminant, factor_over_q, restrict_generic, squarefree_decompose, BiPoly, BinaryForm, Coeff,
    QuarticForm, SquarefreeDecomposition,
};
use crate::projective::{Line, ProjPoint};
use crate::quadratic_points::QuadraticPoint;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TangencyKind {
    Transverse,
    SimpleTangent,
    Flex,
    Bitangent,
    Quadritangent,
    Contained,
}

impl TangencyKind {
    /// Bitangent in the wide sense: the restriction is a scaled square.
    pub fn is_bitangent(self) -> bool {
        matches!(self, TangencyKind::Bitangent | TangencyKind::Quadritangent)
    }

    pub fn name(self) -> &'static str {
        match self {
            TangencyKind::Transverse => "Transverse",
            TangencyKind::SimpleTangent => "SimpleTangent",
            TangencyKind::Flex => "Flex",
            TangencyKind::Bitangent => "Bitangent",
            TangencyKind::Quadritangent => "Quadritangent",
            TangencyKind::Contained => "Contained",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [
            TangencyKind::Transverse,
            TangencyKind::SimpleTangent,
            TangencyKind::Flex,
            TangencyKind::Bitangent,
            TangencyKind::Quadritangent,
            TangencyKind::Contained,
        ]
        .into_iter()
        .find(|k| k.name() == s)
    }
}

/// Classification of `f_l` with its squarefree decomposition (absent when
/// the line lies on the surface).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TangencyType {
    pub kind: TangencyKind,
    pub witness: Option<SquarefreeDecomposition>,
}

impl TangencyType {
    /// Root multiplicities over the algebraic closure, descending.
    pub fn partition(&self) -> Vec<u32> {
        self.witness.as_ref().map(|w| w.root_partition()).unwrap_or_default()
    }
}

/// `F` restricted to `u·span₀ + v·span₁`.
pub fn restrict_quartic_to_line(f: &QuarticForm, l: &Line) -> BinaryForm {
    let [a, b] = l.span();
    let (a, b) = (a.coords(), b.coords());
    let images: [[BigRational; 2]; 4] =
        std::array::from_fn(|i| [BigRational::from_integer(a[i].into()), BigRational::from_integer(b[i].into())]);
    BinaryForm::new(restrict_generic(f, &images).to_vec())
}

/// Classifies a binary quartic by its root multiplicities.
pub fn classify_form(f: &BinaryForm) -> Result<TangencyType> {
    if f.is_zero() {
        return Ok(TangencyType { kind: TangencyKind::Contained, witness: None });
    }
    if f.degree() != Some(4) {
        return Err(Error::Degree { expected: 4, found: f.degree().unwrap() });
    }
    let dec = squarefree_decompose(f)?;
    let kind = match dec.root_partition().as_slice() {
        [1, 1, 1, 1] => TangencyKind::Transverse,
        [2, 1, 1] => TangencyKind::SimpleTangent,
        [3, 1] => TangencyKind::Flex,
        [2, 2] => TangencyKind::Bitangent,
        [4] => TangencyKind::Quadritangent,
        p => unreachable!("partition {p:?} of a binary quartic"),
    };
    Ok(TangencyType { kind, witness: Some(dec) })
}

pub fn classify_tangency(f: &QuarticForm, l: &Line) -> TangencyType {
    classify_form(&restrict_quartic_to_line(f, l)).expect("restriction of a quartic has degree 4")
}

/// Location of a contact point on its line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum ContactLocation {
    /// A rational point.
    Rational { point: ProjPoint },
    /// One of a conjugate pair over Q(√d); the other is its conjugate.
    Quadratic { point: QuadraticPoint, discriminant: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContactPoint {
    pub line: Line,
    /// Linear or irreducible quadratic factor of `f_l` in `(u, v)`.
    pub factor: BinaryForm,
    pub multiplicity: u32,
    pub location: ContactLocation,
}

/// Contact points of a tangent line, one per repeated factor of `f_l` over Q;
/// conjugate pairs appear once. Each point is checked to lie on the surface.
pub fn contact_points(f: &QuarticForm, l: &Line) -> Result<Vec<ContactPoint>> {
    let fl = restrict_quartic_to_line(f, l);
    let ty = classify_form(&fl)?;
    if matches!(ty.kind, TangencyKind::Transverse | TangencyKind::Contained) {
        return Err(Error::NoContact);
    }
    let (_, factors) = factor_over_q(&fl)?;
    let [a, b] = l.span().map(|p| p.coords().map(BigInt::from));
    let mut out = Vec::new();
    for fac in factors.into_iter().filter(|x| x.multiplicity >= 2) {
        let c = fac.form.coeffs();
        let location = match fac.form.degree() {
            Some(1) => {
                // c0·u + c1·v vanishes at (u : v) = (c1 : −c0)
                let (u, v) = (c[1].to_integer(), -c[0].to_integer());
                let p: [i64; 4] = std::array::from_fn(|i| {
                    i64::try_from(&u * &a[i] + &v * &b[i]).expect("contact point exceeds i64")
                });
                let point = ProjPoint::new(p)?;
                assert!(point.on_surface(f), "contact point off the surface");
                ContactLocation::Rational { point }
            }
            Some(2) => {
                // u/v = (−c1 + √D) / (2·c0)
                let d = binary_discriminant(&fac.form)?.to_integer();
                let split = squarefree_split(&d);
                let r = BigRational::from_integer(split.root.clone());
                let u = QuadElem { a: -c[1].clone(), b: r };
                let v = QuadElem::rational(c[0].clone() * BigRational::from_integer(2.into()));
                let coords: [QuadElem; 4] = std::array::from_fn(|i| {
                    u.scale(&BigRational::from_integer(a[i].clone()))
                        .add(&v.scale(&BigRational::from_integer(b[i].clone())))
                });
                let point = QuadraticPoint::new(coords, split.kernel.clone());
                assert!(point.satisfies(f), "contact point off the surface");
                ContactLocation::Quadratic { point, discriminant: split.kernel.to_string() }
            }
            _ => unreachable!("repeated factor of degree > 2 in a binary quartic"),
        };
        out.push(ContactPoint { line: *l, factor: fac.form, multiplicity: fac.multiplicity, location });
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// The quadritangent family on x^4 - x*y^3 - z^4 + z*w^3
// ---------------------------------------------------------------------------

/// Which second equation of the family is used.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyReading {
    /// `s0^3·x = s1^3·z`, `s0·w = s1·z`.
    Printed,
    /// `s0^3·x = s1^3·z`, `s0·w = s1·y`.
    Corrected,
}

impl FamilyReading {
    pub fn equations(self) -> [&'static str; 2] {
        match self {
            FamilyReading::Printed => ["s0^3*x = s1^3*z", "s0*w = s1*z"],
            FamilyReading::Corrected => ["s0^3*x = s1^3*z", "s0*w = s1*y"],
        }
    }

    /// Images of `(x, y, z, w)` as `[u-coefficient, v-coefficient]`.
    fn parameterization(self) -> [[BiPoly; 2]; 4] {
        let m = BiPoly::from_int_monomial;
        let z = BiPoly::default;
        match self {
            // x = s1^3 u, z = s0^3 u, w = s0^2 s1 u, y free
            FamilyReading::Printed => [[m(1, 0, 3), z()], [z(), m(1, 0, 0)], [m(1, 3, 0), z()], [m(1, 2, 1), z()]],
            // x = s1^3 u, z = s0^3 u, y = s0 v, w = s1 v
            FamilyReading::Corrected => [[m(1, 0, 3), z()], [z(), m(1, 1, 0)], [m(1, 3, 0), z()], [z(), m(1, 0, 1)]],
        }
    }
}

pub fn example_quartic() -> QuarticForm {
    QuarticForm::from_i64_terms(&[([4, 0, 0, 0], 1), ([1, 3, 0, 0], -1), ([0, 0, 4, 0], -1), ([0, 0, 1, 3], 1)])
        .expect("nonzero")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilySample {
    pub param: [i64; 2],
    pub plucker: Option<[i64; 6]>,
    pub restriction: String,
    pub kind: Option<TangencyKind>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReadingReport {
    pub reading: FamilyReading,
    pub equations: [&'static str; 2],
    /// `x, y, z, w` as linear forms in `u, v` over Q[s0, s1].
    pub parameterization: [String; 4],
    /// Coefficients of `u^4, u^3 v, …, v^4`.
    pub restriction: [String; 5],
    /// The restriction is a polynomial multiple of a fourth power of a linear
    /// form, identically in `(s0 : s1)`, and not identically zero.
    pub fourth_power_identically: bool,
    /// Coefficient `c` in `c·u^4` or `c·v^4` when the linear form is `u` or `v`.
    pub scalar: Option<String>,
    pub scalar_proportional_to_s1_12_minus_s0_12: bool,
    /// Contact point as polynomials in `(s0, s1)`.
    pub contact_point: Option<[String; 4]>,
    /// Rational parameters where the family line lies on the surface.
    pub contained_parameters: Vec<[String; 2]>,
    pub samples: Vec<FamilySample>,
    pub satisfies_claim: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub quartic: String,
    pub readings: Vec<ReadingReport>,
    /// Readings under which every member is quadritangent.
    pub claim_holds_for: Vec<FamilyReading>,
}

fn render_linear(img: &[BiPoly; 2]) -> String {
    let mut parts = Vec::new();
    for (c, var) in img.iter().zip(["u", "v"]) {
        if !c.c_is_zero() {
            parts.push(format!("({})*{var}", c.render()));
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn as_form(p: &BiPoly) -> BinaryForm {
    match p.homogeneous_degree() {
        Some(d) => p.to_binary_form(d),
        None if p.c_is_zero() => BinaryForm::zero(),
        None => panic!("family coefficient is not homogeneous"),
    }
}

/// Symbolic check of one reading of the family.
pub fn verify_quadritangent_family(reading: FamilyReading) -> ReadingReport {
    let f = example_quartic();
    let images = reading.parameterization();
    let c = restrict_generic(&f, &images);
    // normalised coefficients a_i = c_i / binom(4, i)
    let binom = [1, 4, 6, 4, 1];
    let a: Vec<BiPoly> = c
        .iter()
        .zip(binom)
        .map(|(ci, b)| ci.scale(&BigRational::new(BigInt::one(), BigInt::from(b))))
        .collect();
    let nonzero = c.iter().any(|x| !x.c_is_zero());
    let rank_one = (0..4).all(|i| {
        (i..4).all(|j| a[i].c_mul(&a[j + 1]).sub(&a[i + 1].c_mul(&a[j])).c_is_zero())
    });
    let fourth_power = nonzero && rank_one;

    let (mut scalar, mut contact) = (None, None);
    if fourth_power {
        let col = |k: usize| -> [BiPoly; 4] { std::array::from_fn(|i| images[i][k].clone()) };
        let (pa, pb) = (col(0), col(1));
        let point: [BiPoly; 4] = if a[1].c_is_zero() {
            scalar = Some(c[0].clone());
            pb
        } else if a[3].c_is_zero() {
            scalar = Some(c[4].clone());
            pa
        } else {
            std::array::from_fn(|i| a[0].c_mul(&pb[i]).sub(&a[1].c_mul(&pa[i])))
        };
        contact = Some(point.map(|p| p.render()));
    }
    let target = BiPoly::from_int_monomial(1, 0, 12).sub(&BiPoly::from_int_monomial(1, 12, 0));
    let proportional = scalar.as_ref().is_some_and(|s| proportional_to(s, &target));

    let common = c.iter().map(as_form).fold(BinaryForm::zero(), |g, x| g.gcd(&x));
    let contained_parameters = common
        .rational_roots()
        .into_iter()
        .map(|(p, q)| [p.to_string(), q.to_string()])
        .collect();

    let samples = [[1, 0], [0, 1], [1, 1], [1, -1], [1, 2], [2, 3]]
        .into_iter()
        .map(|s| sample(&f, &images, s))
        .collect();

    ReadingReport {
        reading,
        equations: reading.equations(),
        parameterization: std::array::from_fn(|i| render_linear(&images[i])),
        restriction: std::array::from_fn(|i| c[i].render()),
        fourth_power_identically: fourth_power,
        scalar: scalar.map(|s| s.render()),
        scalar_proportional_to_s1_12_minus_s0_12: proportional,
        contact_point: contact,
        contained_parameters,
        samples,
        satisfies_claim: fourth_power,
    }
}

/// Whether `p = λ·q` for a nonzero rational `λ`.
fn proportional_to(p: &BiPoly, q: &BiPoly) -> bool {
    let Some((key, qv)) = q.terms().next() else { return false };
    let pv = p.terms().find(|(k, _)| *k == key).map(|(_, v)| v.clone());
    match pv {
        Some(pv) if !pv.is_zero() => p.sub(&q.scale(&(pv / qv))).c_is_zero(),
        _ => false,
    }
}

fn sample(f: &QuarticForm, images: &[[BiPoly; 2]; 4], s: [i64; 2]) -> FamilySample {
    let (s0, s1) = (BigRational::from_integer(s[0].into()), BigRational::from_integer(s[1].into()));
    let pt = |k: usize| -> Option<ProjPoint> {
        let v: [i64; 4] = std::array::from_fn(|i| {
            let e = images[i][k].eval(&s0, &s1);
            i64::try_from(e.to_integer()).expect("small sample")
        });
        ProjPoint::new(v).ok()
    };
    let line = match (pt(0), pt(1)) {
        (Some(a), Some(b)) => Line::from_points(a, b).ok(),
        _ => None,
    };
    match line {
        Some(l) => {
            let fl = restrict_quartic_to_line(f, &l);
            FamilySample {
                param: s,
                plucker: Some(l.plucker()),
                restriction: fl.to_string(),
                kind: Some(classify_form(&fl).expect("degree 4").kind),
            }
        }
        None => FamilySample { param: s, plucker: None, restriction: "degenerate".into(), kind: None },
    }
}

/// Both readings of the family.
pub fn verify_example() -> FamilyReport {
    let readings: Vec<ReadingReport> =
        [FamilyReading::Printed, FamilyReading::Corrected].into_iter().map(verify_quadritangent_family).collect();
    let claim_holds_for = readings.iter().filter(|r| r.satisfies_claim).map(|r| r.reading).collect();
    FamilyReport { quartic: crate::expr::format_quartic(&example_quartic()), readings, claim_holds_for }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(c: [i64; 4]) -> ProjPoint {
        ProjPoint::new(c).unwrap()
    }

    fn fermat() -> QuarticForm {
        QuarticForm::from_i64_terms(&[([4, 0, 0, 0], 1), ([0, 4, 0, 0], 1), ([0, 0, 4, 0], 1), ([0, 0, 0, 4], 1)])
            .unwrap()
    }

    #[test]
    fn restriction_examples() {
        let axis = Line::from_points(pt([1, 0, 0, 0]), pt([0, 1, 0, 0])).unwrap();
        assert_eq!(restrict_quartic_to_line(&fermat(), &axis), BinaryForm::from_ints(&[1, 0, 0, 0, 1]));
        let l = Line::from_points(pt([8, 0, 1, 0]), pt([0, 1, 0, 2])).unwrap();
        assert_eq!(restrict_quartic_to_line(&example_quartic(), &l), BinaryForm::from_ints(&[4095, 0, 0, 0, 0]));
        let l = Line::from_points(pt([1, 0, 1, 0]), pt([0, 1, 0, 1])).unwrap();
        assert!(restrict_quartic_to_line(&example_quartic(), &l).is_zero());
    }

    #[test]
    fn classify_examples() {
        let k = |c: &[i64]| classify_form(&BinaryForm::from_ints(c)).unwrap().kind;
        assert_eq!(k(&[1, 0, 0, 0, 1]), TangencyKind::Transverse);
        assert_eq!(k(&[0, 0, 1, 0, 0]), TangencyKind::Bitangent);
        assert_eq!(k(&[4095, 0, 0, 0, 0]), TangencyKind::Quadritangent);
        assert_eq!(k(&[0, 0, 1, 1, 0]), TangencyKind::SimpleTangent);
        assert_eq!(k(&[0, 1, 0, 0, 0]), TangencyKind::Flex);
        assert_eq!(classify_form(&BinaryForm::zero()).unwrap().kind, TangencyKind::Contained);
    }

    #[test]
    fn contacts_on_axis() {
        // F = x^2 y^2 + z^4 + w^4 restricts to u^2 v^2 on the axis e0 e1
        let f = QuarticForm::from_i64_terms(&[([2, 2, 0, 0], 1), ([0, 0, 4, 0], 1), ([0, 0, 0, 4], 1)]).unwrap();
        let axis = Line::from_points(pt([1, 0, 0, 0]), pt([0, 1, 0, 0])).unwrap();
        let cs = contact_points(&f, &axis).unwrap();
        let pts: Vec<_> = cs
            .iter()
            .map(|c| match &c.location {
                ContactLocation::Rational { point } => (*point, c.multiplicity),
                _ => panic!("irrational"),
            })
            .collect();
        assert_eq!(pts, vec![(pt([1, 0, 0, 0]), 2), (pt([0, 1, 0, 0]), 2)]);
    }

    #[test]
    fn contact_on_family_member() {
        let l = Line::from_points(pt([8, 0, 1, 0]), pt([0, 1, 0, 2])).unwrap();
        let cs = contact_points(&example_quartic(), &l).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].multiplicity, 4);
        assert_eq!(cs[0].location, ContactLocation::Rational { point: pt([0, 1, 0, 2]) });
    }

    #[test]
    fn contact_rejects_transverse() {
        assert_eq!(
            contact_points(&fermat(), &Line::from_points(pt([1, 0, 0, 0]), pt([0, 1, 0, 0])).unwrap()),
            Err(Error::NoContact)
        );
    }

    #[test]
    fn quadratic_contact_pair() {
        // F = (x^2 + y^2)^2 + z^4 - w^4 on the axis e0 e1: (u^2 + v^2)^2
        let f = QuarticForm::from_i64_terms(&[
            ([4, 0, 0, 0], 1),
            ([2, 2, 0, 0], 2),
            ([0, 4, 0, 0], 1),
            ([0, 0, 4, 0], 1),
            ([0, 0, 0, 4], -1),
        ])
        .unwrap();
        let axis = Line::from_points(pt([1, 0, 0, 0]), pt([0, 1, 0, 0])).unwrap();
        assert_eq!(classify_tangency(&f, &axis).kind, TangencyKind::Bitangent);
        let cs = contact_points(&f, &axis).unwrap();
        assert_eq!(cs.len(), 1);
        match &cs[0].location {
            ContactLocation::Quadratic { point, discriminant } => {
                assert_eq!(discriminant, "-1");
                assert!(point.satisfies(&f));
                assert!(point.conjugate().satisfies(&f));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn family_readings() {
        let c = verify_quadritangent_family(FamilyReading::Corrected);
        assert!(c.fourth_power_identically);
        assert!(c.scalar_proportional_to_s1_12_minus_s0_12);
        assert_eq!(c.restriction[0], "-s0^12 + s1^12");
        assert_eq!(c.contact_point.as_ref().unwrap(), &["0", "s0", "0", "s1"].map(String::from));
        assert_eq!(c.contained_parameters, vec![["1".to_string(), "-1".to_string()], ["1".to_string(), "1".to_string()]]);
        let s = c.samples.iter().find(|s| s.param == [1, 2]).unwrap();
        assert_eq!(s.plucker, Some([8, 0, 16, -1, 0, 2]));
        assert_eq!(s.restriction, "4095*u^4");
        assert_eq!(s.kind, Some(TangencyKind::Quadritangent));
        let s = c.samples.iter().find(|s| s.param == [1, 1]).unwrap();
        assert_eq!(s.kind, Some(TangencyKind::Contained));

        let p = verify_quadritangent_family(FamilyReading::Printed);
        assert!(!p.fourth_power_identically);
        assert!(!p.satisfies_claim);
        assert_eq!(verify_example().claim_holds_for, vec![FamilyReading::Corrected]);
    }
}
