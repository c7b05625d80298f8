//! Tangent sections, projection from the node, residual quadratics and the
//! quadratic points they produce.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_algebra::bivariate::BiPoly;
use crate::exact_algebra::monomials::monomials3;
use crate::exact_algebra::quadratic::{eval_quartic, squarefree_split, QuadElem};
use crate::exact_algebra::{factor_over_q, push_term, restrict_generic, BinaryForm, Coeff, QuarticForm};
use crate::projective::{Line, Pencil, Plane, ProjPoint};
use crate::tangency::{classify_tangency, TangencyType};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SingularityKind {
    Node,
    Cusp,
    Degenerate,
}

/// A point with coordinates in Q(r), `r² = kernel` for a squarefree integer
/// `kernel ≠ 1`, or a rational point (`kernel = 1`, all irrational parts
/// zero). Coordinates are scaled so the first nonzero one equals 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticPoint {
    pub kernel: BigInt,
    pub coords: [QuadElem; 4],
}

impl QuadraticPoint {
    /// Normalises projective coordinates over Q(√kernel).
    pub fn new(coords: [QuadElem; 4], kernel: BigInt) -> Self {
        let first = coords.iter().find(|c| !c.is_zero()).expect("zero point").clone();
        let inv = first.inv(&kernel);
        let coords = coords.map(|c| c.mul(&inv, &kernel));
        let rational = coords.iter().all(|c| c.b.is_zero());
        QuadraticPoint { kernel: if rational { BigInt::one() } else { kernel }, coords }
    }

    pub fn is_rational(&self) -> bool {
        self.kernel.is_one()
    }

    /// Monic minimal polynomial of the generator, as text.
    pub fn min_poly(&self) -> String {
        if self.is_rational() {
            return "r".to_string();
        }
        let k = &self.kernel;
        if k < &BigInt::zero() {
            format!("r^2 + {}", -k)
        } else {
            format!("r^2 - {k}")
        }
    }

    /// Image under `r ↦ −r`.
    pub fn conjugate(&self) -> Self {
        QuadraticPoint { kernel: self.kernel.clone(), coords: self.coords.clone().map(|c| c.conjugate()) }
    }

    /// True iff `F` vanishes at the point modulo the minimal polynomial.
    pub fn satisfies(&self, f: &QuarticForm) -> bool {
        eval_quartic(f, &self.coords, &self.kernel).is_zero()
    }

    /// Rational coordinates, for rational points.
    pub fn rational_coords(&self) -> Option<[BigRational; 4]> {
        self.is_rational().then(|| self.coords.clone().map(|c| c.a))
    }
}

impl Serialize for QuadraticPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("QuadraticPoint", 4)?;
        st.serialize_field("min_poly", &self.min_poly())?;
        st.serialize_field("coords", &self.coords)?;
        st.serialize_field("discriminant_kernel", &self.kernel.to_string())?;
        st.serialize_field("rational", &self.is_rational())?;
        st.end()
    }
}

// ---------------------------------------------------------------------------
// Tangent sections
// ---------------------------------------------------------------------------

/// A plane quartic with rational coefficients, indexed like `monomials3(4)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TernaryQuartic {
    coeffs: Vec<BigRational>,
}

impl TernaryQuartic {
    pub fn from_terms(terms: &[([u8; 3], i64)]) -> Self {
        let mons = monomials3(4);
        let mut coeffs = vec![BigRational::zero(); mons.len()];
        for (e, c) in terms {
            let i = mons.iter().position(|m| m == e).expect("degree-4 exponent");
            coeffs[i] += BigRational::from_integer((*c).into());
        }
        TernaryQuartic { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = ([u8; 3], &BigRational)> {
        monomials3(4).into_iter().zip(&self.coeffs).filter(|(_, c)| !c.is_zero())
    }

    pub fn eval(&self, v: &[BigRational; 3]) -> BigRational {
        self.terms()
            .map(|(e, c)| (0..3).fold(c.clone(), |acc, i| acc * num_traits::pow(v[i].clone(), e[i] as usize)))
            .sum()
    }

    pub fn render(&self, names: [&str; 3]) -> String {
        let mut s = String::new();
        for (e, c) in self.terms() {
            let mono: Vec<String> = (0..3)
                .filter(|&i| e[i] > 0)
                .map(|i| if e[i] == 1 { names[i].to_string() } else { format!("{}^{}", names[i], e[i]) })
                .collect();
            push_term(&mut s, c, &mono.join("*"));
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }
}

/// Names of the plane coordinates of a tangent section.
pub const SECTION_VARS: [&str; 3] = ["s", "a", "b"];

impl std::fmt::Display for TernaryQuartic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render(SECTION_VARS))
    }
}

impl Serialize for TernaryQuartic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `X ∩ T_p(X)` in the frame `(s, a, b) ↦ s·p + a·e₀ + b·e₁`, where `e₀, e₁`
/// is the basis of the pencil of lines through `p` in the tangent plane. The
/// pencil line `(a:b)` is `{(s, λa, λb)}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TangentSection {
    pub base_point: ProjPoint,
    pub plane: Plane,
    pub pencil: Pencil,
    pub curve: TernaryQuartic,
    pub singularity_kind: SingularityKind,
    /// The quadratic jet at the base point, in `(a, b)`.
    pub tangent_cone: BinaryForm,
    /// `g2, g3, g4` with `F(s·p + λ·d(a,b)) = λ²(g2 s² + g3 sλ + g4 λ²)`.
    #[serde(skip)]
    jets: [BiPoly; 3],
}

fn check_point(f: &QuarticForm, p: &ProjPoint) -> Result<[BigInt; 4]> {
    if !p.on_surface(f) {
        return Err(Error::NotOnSurface(p.coords()));
    }
    let g = f.gradient(&p.big());
    if g.iter().all(Zero::is_zero) {
        return Err(Error::SingularPoint(p.coords()));
    }
    Ok(g)
}

/// The tangent plane `∇F(p)·x = 0`.
pub fn tangent_plane(f: &QuarticForm, p: &ProjPoint) -> Result<Plane> {
    let g = check_point(f, p)?;
    let gcd = g.iter().fold(BigInt::zero(), |acc, c| num_integer::Integer::gcd(&acc, c));
    let n: Vec<i64> = g.iter().map(|c| (c / &gcd).to_i64().ok_or(Error::Overflow("tangent plane"))).collect::<Result<_>>()?;
    Plane::new([n[0], n[1], n[2], n[3]])
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

pub fn tangent_section(f: &QuarticForm, p: &ProjPoint) -> Result<TangentSection> {
    let plane = tangent_plane(f, p)?;
    let pencil = Pencil::new(*p, plane)?;
    let frame = [p.coords(), pencil.basis[0].coords(), pencil.basis[1].coords()];
    let curve = restrict_to_frame(f, &frame);
    // x_i = s·p_i + λ·(a·e0_i + b·e1_i)
    let images: [[BiPoly; 2]; 4] = std::array::from_fn(|i| {
        [BiPoly::constant(int(frame[0][i])), BiPoly::linear(int(frame[1][i]), int(frame[2][i]))]
    });
    let [c0, c1, g2, g3, g4] = restrict_generic(f, &images);
    debug_assert!(c0.terms().next().is_none() && c1.terms().next().is_none());
    let tangent_cone = g2.to_binary_form(2);
    let singularity_kind = if tangent_cone.is_zero() {
        SingularityKind::Degenerate
    } else {
        let [x, y, z] = [0, 1, 2].map(|i| tangent_cone.coeff(i));
        if &y * &y == int(4) * x * z {
            SingularityKind::Cusp
        } else {
            SingularityKind::Node
        }
    };
    Ok(TangentSection { base_point: *p, plane, pencil, curve, singularity_kind, tangent_cone, jets: [g2, g3, g4] })
}

fn restrict_to_frame(f: &QuarticForm, frame: &[[i64; 4]; 3]) -> TernaryQuartic {
    let mons = monomials3(4);
    let mut acc: BTreeMap<[u8; 3], BigInt> = BTreeMap::new();
    for (e, c) in f.terms() {
        // expand ∏ (s·p_i + a·e0_i + b·e1_i)^{e_i}
        let mut poly: BTreeMap<[u8; 3], BigInt> = BTreeMap::from([([0, 0, 0], c.clone())]);
        for i in 0..4 {
            for _ in 0..e[i] {
                let mut next = BTreeMap::new();
                for (m, v) in &poly {
                    for k in 0..3 {
                        if frame[k][i] != 0 {
                            let mut m2 = *m;
                            m2[k] += 1;
                            *next.entry(m2).or_insert_with(BigInt::zero) += v * frame[k][i];
                        }
                    }
                }
                poly = next;
            }
        }
        for (m, v) in poly {
            *acc.entry(m).or_insert_with(BigInt::zero) += v;
        }
    }
    let coeffs = mons.iter().map(|m| BigRational::from_integer(acc.get(m).cloned().unwrap_or_default())).collect();
    TernaryQuartic { coeffs }
}

impl TangentSection {
    fn require_node(&self) -> Result<()> {
        match self.singularity_kind {
            SingularityKind::Node => Ok(()),
            k => Err(Error::DegenerateSection(k)),
        }
    }

    /// `[g2, g3, g4]` evaluated at `(a, b)`.
    fn residual_coeffs(&self, a: i64, b: i64) -> [BigRational; 3] {
        let (a, b) = (int(a), int(b));
        std::array::from_fn(|k| self.jets[k].eval(&a, &b))
    }

    pub fn pencil_line(&self, a: i64, b: i64) -> Result<Line> {
        self.pencil.member(a, b)
    }
}

/// `q(W, T) = g2 W² + g3 WT + g4 T²`: the pencil line `(a:b)` meets the
/// section at `W·p + T·d(a,b)` for the roots of `q`, besides `p` twice.
pub fn residual_quadratic(sec: &TangentSection, a: i64, b: i64) -> Result<BinaryForm> {
    sec.require_node()?;
    if a == 0 && b == 0 {
        return Err(Error::ZeroParameter);
    }
    let q = BinaryForm::new(sec.residual_coeffs(a, b).to_vec());
    if q.is_zero() {
        return Err(Error::ContainedDirection(a, b));
    }
    Ok(q)
}

/// The two further intersection points of a pencil line with the section.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuadraticPair {
    pub param: (i64, i64),
    pub residual: BinaryForm,
    /// Conjugate pair (equal kernels); rational pairs have kernel 1.
    pub points: [QuadraticPoint; 2],
}

impl QuadraticPair {
    pub fn kernel(&self) -> &BigInt {
        &self.points[0].kernel
    }

    pub fn is_rational(&self) -> bool {
        self.points[0].is_rational()
    }
}

pub fn quadratic_point_at(f: &QuarticForm, p: &ProjPoint, a: i64, b: i64) -> Result<QuadraticPair> {
    let sec = tangent_section(f, p)?;
    quadratic_point_on_section(&sec, a, b)
}

pub fn quadratic_point_on_section(sec: &TangentSection, a: i64, b: i64) -> Result<QuadraticPair> {
    let q = residual_quadratic(sec, a, b)?;
    let [c2, c3, c4] = [0, 1, 2].map(|i| q.coeff(i));
    let disc = &c3 * &c3 - int(4) * &c2 * &c4;
    if disc.is_zero() {
        return Err(Error::TangentDirection(a, b));
    }
    let pv = sec.base_point.coords().map(int);
    let d = sec.pencil.direction_point(a, b)?.map(int);
    let lift = |w: QuadElem, t: QuadElem| -> [QuadElem; 4] {
        std::array::from_fn(|i| w.scale(&pv[i]).add(&t.scale(&d[i])))
    };
    // disc = (num/den) = root² · kernel / den², with √disc = (root/den)·√kernel
    let split = squarefree_split(&(disc.numer() * disc.denom()));
    let kernel = split.kernel.clone();
    let sqrt_coeff = BigRational::new(split.root.clone(), disc.denom().clone());
    let sqrt = if kernel.is_one() {
        QuadElem::rational(sqrt_coeff)
    } else {
        QuadElem { a: BigRational::zero(), b: sqrt_coeff }
    };
    let points = if c2.is_zero() {
        // T = 0 gives p again; the other root is W : T = −g4 : g3
        let one = QuadElem::rational(BigRational::one());
        let other = lift(QuadElem::rational(-c4.clone()), QuadElem::rational(c3.clone()));
        [QuadraticPoint::new(lift(one, QuadElem::zero()), kernel.clone()), QuadraticPoint::new(other, kernel.clone())]
    } else {
        let inv = (int(2) * &c2).recip();
        let root = |sign: i64| {
            let w = QuadElem::rational(-c3.clone()).add(&sqrt.scale(&int(sign))).scale(&inv);
            QuadraticPoint::new(lift(w, QuadElem::rational(BigRational::one())), kernel.clone())
        };
        [root(1), root(-1)]
    };
    Ok(QuadraticPair { param: (a, b), residual: q, points })
}

// ---------------------------------------------------------------------------
// Branch form
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchForm {
    /// `disc(q_(a:b)) / h²`, primitive, where `h = gcd(g2, g3, g4)`.
    pub form: BinaryForm,
    pub degree: usize,
    /// `h`: its roots are the pencil lines contained in the section.
    pub contained_factor: BinaryForm,
    /// Degree 6.
    pub generic: bool,
}

pub fn branch_form(sec: &TangentSection) -> Result<BranchForm> {
    sec.require_node()?;
    let [g2, g3, g4] = &sec.jets;
    let disc = g3.c_mul(g3).sub(&g2.c_mul(g4).scale(&int(4)));
    let disc = disc.to_binary_form(6);
    let forms = [g2.to_binary_form(2), g3.to_binary_form(3), g4.to_binary_form(4)];
    let h = forms[0].gcd(&forms[1]).gcd(&forms[2]);
    let form = disc.div_exact(&h.mul(&h)).primitive();
    let degree = form.degree().expect("nonzero branch form");
    Ok(BranchForm { form, degree, contained_factor: h, generic: degree == 6 })
}

/// A rational root of the branch form, i.e. a pencil line whose residual
/// quadratic has a double root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchDirection {
    pub param: (BigInt, BigInt),
    pub multiplicity: u32,
    pub line: Line,
    pub tangency: TangencyType,
    /// The line classifies as a bitangent.
    pub certified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrrationalDirections {
    pub factor: BinaryForm,
    pub multiplicity: u32,
    /// `Some(true)` when proved irreducible over Q.
    pub irreducible: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThroughPointReport {
    pub section: TangentSection,
    pub branch: BranchForm,
    pub rational: Vec<BranchDirection>,
    pub irrational: Vec<IrrationalDirections>,
    /// Roots with multiplicity; equals the branch-form degree.
    pub root_count: u32,
}

/// Bitangents through `p` read off from the branch form.
pub fn bitangents_through_point(f: &QuarticForm, p: &ProjPoint) -> Result<ThroughPointReport> {
    let section = tangent_section(f, p)?;
    let branch = branch_form(&section)?;
    let (_, factors) = factor_over_q(&branch.form)?;
    let mut rational = Vec::new();
    let mut irrational = Vec::new();
    let mut root_count = 0;
    for fac in factors {
        let deg = fac.form.degree().expect("nonzero factor") as u32;
        root_count += deg * fac.multiplicity;
        if deg == 1 {
            let (a, b) = fac.form.rational_roots().pop().expect("linear factor has a root");
            let (ai, bi) = match (a.to_i64(), b.to_i64()) {
                (Some(x), Some(y)) => (x, y),
                _ => return Err(Error::Overflow("branch direction")),
            };
            let line = section.pencil_line(ai, bi)?;
            let tangency = classify_tangency(f, &line);
            let certified = tangency.kind.is_bitangent();
            rational.push(BranchDirection { param: (a, b), multiplicity: fac.multiplicity, line, tangency, certified });
        } else {
            irrational.push(IrrationalDirections { factor: fac.form, multiplicity: fac.multiplicity, irreducible: fac.irreducible });
        }
    }
    rational.sort_by(|x, y| (x.param.1.abs() > x.param.0.abs()).cmp(&(y.param.1.abs() > y.param.0.abs())).then(x.param.cmp(&y.param)));
    Ok(ThroughPointReport { section, branch, rational, irrational, root_count })
}

// ---------------------------------------------------------------------------
// Batches
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BatchItem {
    pub param: (i64, i64),
    pub outcome: std::result::Result<QuadraticPair, String>,
    /// Both points satisfy F exactly.
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuadraticBatch {
    pub base_point: ProjPoint,
    pub items: Vec<BatchItem>,
    /// Kernel → number of pencil parameters producing it.
    pub kernel_histogram: BTreeMap<String, usize>,
    pub distinct_kernels: usize,
}

/// Quadratic points for each pencil parameter, in the given order.
pub fn quadratic_points_batch(f: &QuarticForm, p: &ProjPoint, params: &[(i64, i64)]) -> Result<QuadraticBatch> {
    let sec = tangent_section(f, p)?;
    sec.require_node()?;
    let items = crate::search::par_flat_map(params.to_vec(), |(a, b)| {
        let outcome = quadratic_point_on_section(&sec, a, b);
        let verified = outcome.as_ref().map(|qp| qp.points.iter().all(|pt| pt.satisfies(f))).unwrap_or(false);
        vec![BatchItem { param: (a, b), outcome: outcome.map_err(|e| e.to_string()), verified }]
    });
    let mut kernel_histogram = BTreeMap::new();
    let mut keys = std::collections::BTreeSet::new();
    for it in &items {
        if let Ok(qp) = &it.outcome {
            *kernel_histogram.entry(qp.kernel().to_string()).or_insert(0) += 1;
            keys.insert(qp.kernel().clone());
        }
    }
    Ok(QuadraticBatch { base_point: *p, items, kernel_histogram, distinct_kernels: keys.len() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_quartic;
    use crate::tangency::TangencyKind;

    fn f0() -> QuarticForm {
        parse_quartic("x*w^3 + y*z*w^2 + x^4 + y^4 + z^4").unwrap()
    }

    fn pt(c: [i64; 4]) -> ProjPoint {
        ProjPoint::new(c).unwrap()
    }

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn tangent_planes() {
        assert_eq!(tangent_plane(&f0(), &pt([0, 0, 0, 1])).unwrap(), Plane::new([1, 0, 0, 0]).unwrap());
        let g = parse_quartic("x^4 + y^4 - z^4 - w^4").unwrap();
        assert_eq!(tangent_plane(&g, &pt([1, 0, 1, 0])).unwrap(), Plane::new([1, 0, -1, 0]).unwrap());
        assert_eq!(tangent_plane(&g, &pt([1, 0, 0, 0])), Err(Error::NotOnSurface([1, 0, 0, 0])));
    }

    #[test]
    fn f0_section_is_nodal() {
        let sec = tangent_section(&f0(), &pt([0, 0, 0, 1])).unwrap();
        // frame: s ↦ w, a ↦ z, b ↦ y
        assert_eq!(sec.pencil.basis, [pt([0, 0, 1, 0]), pt([0, 1, 0, 0])]);
        assert_eq!(sec.curve, TernaryQuartic::from_terms(&[([2, 1, 1], 1), ([0, 4, 0], 1), ([0, 0, 4], 1)]));
        assert_eq!(sec.curve.to_string(), "s^2*a*b + a^4 + b^4");
        assert_eq!(sec.singularity_kind, SingularityKind::Node);
        assert_eq!(sec.tangent_cone, BinaryForm::from_ints(&[0, 1, 0]));
    }

    #[test]
    fn degenerate_section() {
        let g = parse_quartic("x^4 + y^4 - z^4 - w^4").unwrap();
        let sec = tangent_section(&g, &pt([1, 0, 1, 0])).unwrap();
        assert_eq!(sec.singularity_kind, SingularityKind::Degenerate);
        assert_eq!(residual_quadratic(&sec, 1, 1), Err(Error::DegenerateSection(SingularityKind::Degenerate)));
        assert!(branch_form(&sec).is_err());
    }

    #[test]
    fn residuals() {
        let sec = tangent_section(&f0(), &pt([0, 0, 0, 1])).unwrap();
        // pencil z = t·y is (a:b) = (t:1)
        assert_eq!(residual_quadratic(&sec, 1, 1).unwrap(), BinaryForm::from_ints(&[1, 0, 2]));
        assert_eq!(residual_quadratic(&sec, 2, 1).unwrap(), BinaryForm::from_ints(&[2, 0, 17]));
        assert_eq!(residual_quadratic(&sec, 0, 1).unwrap(), BinaryForm::from_ints(&[0, 0, 1]));
    }

    #[test]
    fn quadratic_points_f0() {
        let f = f0();
        let p = pt([0, 0, 0, 1]);
        let qp = quadratic_point_at(&f, &p, 1, 1).unwrap();
        assert_eq!(qp.kernel(), &BigInt::from(-2));
        // (0 : 1 : 1 : ±√−2)
        let c = &qp.points[0].coords;
        assert!(c[0].is_zero());
        assert_eq!(c[1], QuadElem::rational(r(1, 1)));
        assert_eq!(c[2], QuadElem::rational(r(1, 1)));
        assert_eq!(c[3].b.abs(), r(1, 1));
        assert_eq!(qp.points[1], qp.points[0].conjugate());
        assert!(qp.points.iter().all(|x| x.satisfies(&f)));
        assert_eq!(qp.points[0].min_poly(), "r^2 + 2");

        let qp2 = quadratic_point_at(&f, &p, 2, 1).unwrap();
        assert_eq!(qp2.kernel(), &BigInt::from(-34));
        assert!(qp2.points.iter().all(|x| x.satisfies(&f)));

        assert_eq!(quadratic_point_at(&f, &p, 0, 1), Err(Error::TangentDirection(0, 1)));
    }

    #[test]
    fn f0_branch_form() {
        let sec = tangent_section(&f0(), &pt([0, 0, 0, 1])).unwrap();
        let br = branch_form(&sec).unwrap();
        assert_eq!(br.form, BinaryForm::from_ints(&[0, 1, 0, 0, 0, 1, 0]));
        assert_eq!(br.degree, 6);
        assert!(br.generic);
        assert_eq!(br.contained_factor.degree(), Some(0));
    }

    #[test]
    fn f0_bitangents_through_point() {
        let rep = bitangents_through_point(&f0(), &pt([0, 0, 0, 1])).unwrap();
        assert_eq!(rep.root_count, 6);
        let lines: Vec<_> = rep.rational.iter().map(|d| (d.param.clone(), d.line.plucker())).collect();
        // {x=0,y=0} = span(e2, e3), {x=0,z=0} = span(e1, e3)
        assert_eq!(lines, vec![((1.into(), 0.into()), [0, 0, 0, 0, 0, 1]), ((0.into(), 1.into()), [0, 0, 0, 0, 1, 0])]);
        assert!(rep.rational.iter().all(|d| d.certified && d.tangency.kind == TangencyKind::Quadritangent));
        assert_eq!(rep.irrational.len(), 1);
        assert_eq!(rep.irrational[0].factor, BinaryForm::from_ints(&[1, 0, 0, 0, 1]));
        assert_eq!(rep.irrational[0].irreducible, Some(true));
    }

    #[test]
    fn off_surface_errors() {
        assert!(matches!(bitangents_through_point(&f0(), &pt([1, 0, 0, 0])), Err(Error::NotOnSurface(_))));
    }

    #[test]
    fn batch_histogram() {
        let params: Vec<_> = (0..6).map(|t| (t, 1)).collect();
        let b = quadratic_points_batch(&f0(), &pt([0, 0, 0, 1]), &params).unwrap();
        assert!(b.items[0].outcome.is_err());
        assert!(b.items[1..].iter().all(|i| i.verified));
        assert_eq!(b.distinct_kernels, 5);
    }
}
