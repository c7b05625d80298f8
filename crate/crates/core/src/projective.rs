//! Rational points, planes, lines and pencils in P^3.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_algebra::QuarticForm;
use crate::lattice::{kernel_basis, Enumerator, gram_of};

/// Index pairs of the Plücker coordinates, in storage order.
pub const PLUCKER_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Divides by the gcd and makes the first nonzero entry positive.
/// Returns `None` for the zero vector.
pub fn canonicalize<const N: usize>(v: [i64; N]) -> Option<[i64; N]> {
    let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g == 0 {
        return None;
    }
    let first = *v.iter().find(|&&x| x != 0).unwrap();
    let g = if first < 0 { -g } else { g };
    Some(v.map(|x| x / g))
}

fn narrow<const N: usize>(v: [i128; N], what: &'static str) -> Result<[i64; N]> {
    let g = v.iter().fold(0i128, |g, &x| g.gcd(&x));
    if g == 0 {
        return Ok([0; N]);
    }
    let mut out = [0i64; N];
    for (o, x) in out.iter_mut().zip(v) {
        *o = i64::try_from(x / g).map_err(|_| Error::Overflow(what))?;
    }
    Ok(out)
}

// ---------------------------------------------------------------------------

/// A rational point with primitive integer coordinates, first nonzero
/// coordinate positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ProjPoint([i64; 4]);

impl ProjPoint {
    pub fn new(c: [i64; 4]) -> Result<Self> {
        canonicalize(c).map(ProjPoint).ok_or(Error::ZeroVector)
    }

    pub fn coords(&self) -> [i64; 4] {
        self.0
    }

    pub fn big(&self) -> [BigInt; 4] {
        self.0.map(BigInt::from)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().map(|x| x.abs()).max().unwrap()
    }

    pub fn on_surface(&self, f: &QuarticForm) -> bool {
        f.eval_i64(&self.0).is_zero()
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "({a}:{b}:{c}:{d})")
    }
}

/// A plane `Σ n_i x_i = 0`, stored by canonical dual coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Plane([i64; 4]);

impl Plane {
    pub fn new(n: [i64; 4]) -> Result<Self> {
        canonicalize(n).map(Plane).ok_or(Error::ZeroVector)
    }

    pub fn dual_coords(&self) -> [i64; 4] {
        self.0
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        self.0.iter().zip(p.0).map(|(a, b)| *a as i128 * b as i128).sum::<i128>() == 0
    }

    /// Canonical points of the plane with height at most `h`, sorted by
    /// (height, support size, coordinates).
    pub fn small_points(&self, h: i64) -> Vec<ProjPoint> {
        let basis = kernel_basis(self.0);
        let g = gram_of(&basis);
        let mut pts = Vec::new();
        // sup-norm ≤ h implies squared length ≤ 4h²
        Enumerator::new(&g).run(
            (4 * h * h) as f64,
            |_, _, _| None,
            |x| {
                let v: [i64; 4] = std::array::from_fn(|c| (0..3).map(|r| x[r] * basis[r][c]).sum());
                if v.iter().all(|c| c.abs() <= h) {
                    if let Some(c) = canonicalize(v) {
                        if c == v || c == v.map(|t| -t) {
                            pts.push(ProjPoint(c));
                        }
                    }
                }
            },
        );
        pts.sort_by_key(point_key);
        pts.dedup();
        pts
    }
}

fn point_key(p: &ProjPoint) -> (i64, usize, [i64; 4]) {
    (p.height(), p.0.iter().filter(|&&c| c != 0).count(), p.0)
}

impl fmt::Display for Plane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        for (c, v) in self.0.iter().zip(["x", "y", "z", "w"]) {
            if *c == 0 {
                continue;
            }
            if s.is_empty() {
                if *c < 0 {
                    s.push('-');
                }
            } else {
                s.push_str(if *c < 0 { " - " } else { " + " });
            }
            if c.abs() != 1 {
                s.push_str(&format!("{}*", c.abs()));
            }
            s.push_str(v);
        }
        write!(f, "{s} = 0")
    }
}

// ---------------------------------------------------------------------------

/// Plücker vector of the span of two integer vectors (not normalised).
pub fn wedge(a: &[i64; 4], b: &[i64; 4]) -> [i128; 6] {
    PLUCKER_PAIRS.map(|(i, j)| a[i] as i128 * b[j] as i128 - a[j] as i128 * b[i] as i128)
}

/// `p01·p23 − p02·p13 + p03·p12`.
pub fn plucker_relation(p: &[i64; 6]) -> i128 {
    let q = p.map(|x| x as i128);
    q[0] * q[5] - q[1] * q[4] + q[2] * q[3]
}

/// The incidence pairing of two Plücker vectors.
pub fn incidence_pairing(p: &[i64; 6], q: &[i64; 6]) -> i128 {
    let p = p.map(|x| x as i128);
    let q = q.map(|x| x as i128);
    p[0] * q[5] + p[5] * q[0] - p[1] * q[4] - p[4] * q[1] + p[2] * q[3] + p[3] * q[2]
}

static PLUCKER_CHECKED: AtomicU64 = AtomicU64::new(0);
static PLUCKER_VIOLATIONS: AtomicU64 = AtomicU64::new(0);

fn audit(p: &[i64; 6]) {
    PLUCKER_CHECKED.fetch_add(1, AtomicOrdering::Relaxed);
    if plucker_relation(p) != 0 {
        PLUCKER_VIOLATIONS.fetch_add(1, AtomicOrdering::Relaxed);
    }
}

/// Process-wide count of line constructions and of those whose Plücker
/// vector failed the quadratic relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PluckerAudit {
    pub checked: u64,
    pub violations: u64,
}

pub fn plucker_audit() -> PluckerAudit {
    PluckerAudit {
        checked: PLUCKER_CHECKED.load(AtomicOrdering::Relaxed),
        violations: PLUCKER_VIOLATIONS.load(AtomicOrdering::Relaxed),
    }
}

/// A rational line: two spanning points and the canonical Plücker vector
/// `(p01, p02, p03, p12, p13, p23)`. Equality and ordering use the Plücker
/// vector only.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Line {
    span: [ProjPoint; 2],
    plucker: [i64; 6],
}

impl PartialEq for Line {
    fn eq(&self, o: &Self) -> bool {
        self.plucker == o.plucker
    }
}
impl Eq for Line {}
impl Hash for Line {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.plucker.hash(h)
    }
}
impl PartialOrd for Line {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Line {
    fn cmp(&self, o: &Self) -> Ordering {
        self.plucker.cmp(&o.plucker)
    }
}

impl Line {
    /// The line through two distinct points, spanned by exactly these points.
    pub fn from_points(a: ProjPoint, b: ProjPoint) -> Result<Self> {
        let p = narrow(wedge(&a.0, &b.0), "Plücker coordinates")?;
        let plucker = canonicalize(p).ok_or(Error::DegenerateSpan)?;
        audit(&plucker);
        Ok(Line { span: [a, b], plucker })
    }

    /// The line with a given Plücker vector; the span is a reduced pair of
    /// points on it.
    pub fn from_plucker(p: [i64; 6]) -> Result<Self> {
        let plucker = canonicalize(p).ok_or(Error::ZeroVector)?;
        if plucker_relation(&plucker) != 0 {
            return Err(Error::InvalidPlucker(p));
        }
        // Columns k, m of the antisymmetric matrix (P_ij) lie on the line and
        // span it when P_km ≠ 0.
        let mut mat = [[0i64; 4]; 4];
        for (v, (i, j)) in plucker.iter().zip(PLUCKER_PAIRS) {
            mat[i][j] = *v;
            mat[j][i] = -*v;
        }
        let idx = plucker.iter().position(|&v| v != 0).unwrap();
        let (k, m) = PLUCKER_PAIRS[idx];
        let col = |c: usize| -> [i64; 4] { std::array::from_fn(|r| mat[r][c]) };
        let a = canonicalize(col(k)).unwrap();
        let b = canonicalize(col(m)).unwrap();
        let (a, b) = reduce_pair(a, b);
        let (a, b) = (ProjPoint::new(a)?, ProjPoint::new(b)?);
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        let line = Line::from_points(a, b)?;
        debug_assert_eq!(line.plucker, plucker);
        Ok(line)
    }

    pub(crate) fn from_parts_unchecked(span: [ProjPoint; 2], plucker: [i64; 6]) -> Self {
        audit(&plucker);
        Line { span, plucker }
    }

    pub fn span(&self) -> [ProjPoint; 2] {
        self.span
    }

    pub fn plucker(&self) -> [i64; 6] {
        self.plucker
    }

    /// Sup-norm of the canonical Plücker vector.
    pub fn height(&self) -> i64 {
        self.plucker.iter().map(|x| x.abs()).max().unwrap()
    }

    pub fn contains(&self, x: &ProjPoint) -> bool {
        let [a, b] = self.span;
        let m: Vec<[i64; 4]> = vec![a.0, b.0, x.0];
        // rank of the 3×4 matrix is 2 iff all 3×3 minors vanish
        (0..4).all(|skip| {
            let cols: Vec<usize> = (0..4).filter(|&c| c != skip).collect();
            det3(&m, &cols) == 0
        })
    }
}

fn det3(m: &[[i64; 4]], c: &[usize]) -> i128 {
    let e = |r: usize, k: usize| m[r][c[k]] as i128;
    e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
        + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0))
}

/// Lagrange–Gauss reduction of a pair of integer vectors.
fn reduce_pair(mut a: [i64; 4], mut b: [i64; 4]) -> ([i64; 4], [i64; 4]) {
    let dot = |x: &[i64; 4], y: &[i64; 4]| x.iter().zip(y).map(|(p, q)| *p as i128 * *q as i128).sum::<i128>();
    loop {
        if dot(&a, &a) > dot(&b, &b) {
            std::mem::swap(&mut a, &mut b);
        }
        let na = dot(&a, &a);
        let q = (2 * dot(&a, &b) + na).div_euclid(2 * na) as i64;
        for i in 0..4 {
            b[i] -= q * a[i];
        }
        if dot(&b, &b) >= na {
            return (a, b);
        }
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.plucker;
        write!(f, "[{},{},{},{},{},{}]", p[0], p[1], p[2], p[3], p[4], p[5])
    }
}

/// Canonical Plücker line through two points.
pub fn plucker_from_points(a: ProjPoint, b: ProjPoint) -> Result<Line> {
    Line::from_points(a, b)
}

/// True iff the lines are coplanar (a line meets itself).
pub fn lines_meet(l: &Line, m: &Line) -> bool {
    incidence_pairing(&l.plucker, &m.plucker) == 0
}

// ---------------------------------------------------------------------------

/// The lines through `vertex` inside `carrier`, parameterised by P^1 via
/// `(a:b) ↦ vertex ∨ (a·basis₀ + b·basis₁)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Pencil {
    pub vertex: ProjPoint,
    pub carrier: Plane,
    pub basis: [ProjPoint; 2],
}

impl Pencil {
    /// Builds the pencil with its canonical basis: scanning the plane's points
    /// by (height, support size, coordinates), the first point other than the
    /// vertex, then the first point independent of both.
    pub fn new(vertex: ProjPoint, carrier: Plane) -> Result<Self> {
        if !carrier.contains(&vertex) {
            return Err(Error::VertexNotOnPlane);
        }
        let mut h = 1;
        loop {
            let pts = carrier.small_points(h);
            let b0 = pts.iter().find(|p| **p != vertex);
            if let Some(&b0) = b0 {
                let l = Line::from_points(vertex, b0)?;
                if let Some(&b1) = pts.iter().find(|p| !l.contains(p)) {
                    return Ok(Pencil { vertex, carrier, basis: [b0, b1] });
                }
            }
            h = h.checked_mul(2).ok_or(Error::Overflow("pencil basis"))?;
        }
    }

    /// The point `a·basis₀ + b·basis₁` (unnormalised).
    pub fn direction_point(&self, a: i64, b: i64) -> Result<[i64; 4]> {
        if a == 0 && b == 0 {
            return Err(Error::ZeroParameter);
        }
        let [p, q] = self.basis;
        let v: [i128; 4] = std::array::from_fn(|i| a as i128 * p.0[i] as i128 + b as i128 * q.0[i] as i128);
        let mut out = [0i64; 4];
        for (o, x) in out.iter_mut().zip(v) {
            *o = i64::try_from(x).map_err(|_| Error::Overflow("pencil point"))?;
        }
        Ok(out)
    }

    pub fn member(&self, a: i64, b: i64) -> Result<Line> {
        let d = ProjPoint::new(self.direction_point(a, b)?)?;
        Line::from_points(self.vertex, d)
    }
}

/// The pencil line with parameter `(a:b)`.
pub fn pencil_member(p: &Pencil, a: i64, b: i64) -> Result<Line> {
    p.member(a, b)
}

// ---------------------------------------------------------------------------

pub type Matrix4 = [[i64; 4]; 4];

fn det_big(m: &[[BigInt; 4]; 4]) -> BigInt {
    // Laplace along the first row over 3×3 minors.
    let minor = |r: usize, c: usize| -> BigInt {
        let rows: Vec<usize> = (0..4).filter(|&i| i != r).collect();
        let cols: Vec<usize> = (0..4).filter(|&j| j != c).collect();
        let e = |i: usize, j: usize| &m[rows[i]][cols[j]];
        e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
            + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0))
    };
    (0..4)
        .map(|c| {
            let s = if c % 2 == 0 { BigInt::from(1) } else { BigInt::from(-1) };
            s * &m[0][c] * minor(0, c)
        })
        .sum()
}

/// Adjugate of a 4×4 integer matrix.
pub fn adjugate(m: &Matrix4) -> [[BigInt; 4]; 4] {
    let mb: [[BigInt; 4]; 4] = m.map(|r| r.map(BigInt::from));
    let mut adj: [[BigInt; 4]; 4] = Default::default();
    for (r, adj_r) in adj.iter_mut().enumerate() {
        for (c, slot) in adj_r.iter_mut().enumerate() {
            // adj[r][c] = (−1)^{r+c} · minor(c, r)
            let rows: Vec<usize> = (0..4).filter(|&i| i != c).collect();
            let cols: Vec<usize> = (0..4).filter(|&j| j != r).collect();
            let e = |i: usize, j: usize| &mb[rows[i]][cols[j]];
            let d = e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
                + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
            *slot = if (r + c) % 2 == 0 { d } else { -d };
        }
    }
    adj
}

pub fn determinant(m: &Matrix4) -> BigInt {
    det_big(&m.map(|r| r.map(BigInt::from)))
}

/// Image of a point under `M`.
pub fn apply_to_point(m: &Matrix4, p: &ProjPoint) -> Result<ProjPoint> {
    let v: [i128; 4] = std::array::from_fn(|i| (0..4).map(|j| m[i][j] as i128 * p.0[j] as i128).sum());
    ProjPoint::new(narrow(v, "transformed point")?)
}

/// Moves the pair `(F, l)` by `M`: the new form is `F(adj(M)·x)`, which
/// vanishes on `M·X`, and the new line is `M·l`.
pub fn pgl4_apply(m: &Matrix4, f: &QuarticForm, l: &Line) -> Result<(QuarticForm, Line)> {
    if determinant(m).is_zero() {
        return Err(Error::SingularMatrix);
    }
    let adj = adjugate(m);
    let f2 = f.compose_linear(&adj)?;
    let [a, b] = l.span;
    let l2 = Line::from_points(apply_to_point(m, &a)?, apply_to_point(m, &b)?)?;
    Ok((f2, l2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(c: [i64; 4]) -> ProjPoint {
        ProjPoint::new(c).unwrap()
    }

    #[test]
    fn plucker_examples() {
        let l = plucker_from_points(pt([1, 0, 0, 0]), pt([0, 1, 0, 0])).unwrap();
        assert_eq!(l.plucker(), [1, 0, 0, 0, 0, 0]);
        let l = plucker_from_points(pt([8, 0, 1, 0]), pt([0, 1, 0, 2])).unwrap();
        assert_eq!(l.plucker(), [8, 0, 16, -1, 0, 2]);
        assert_eq!(plucker_relation(&l.plucker()), 0);
        assert_eq!(plucker_from_points(pt([1, 0, 0, 0]), pt([2, 0, 0, 0])), Err(Error::DegenerateSpan));
    }

    #[test]
    fn meeting_examples() {
        let e = |i: usize| {
            let mut c = [0; 4];
            c[i] = 1;
            pt(c)
        };
        let l01 = Line::from_points(e(0), e(1)).unwrap();
        let l02 = Line::from_points(e(0), e(2)).unwrap();
        let l23 = Line::from_points(e(2), e(3)).unwrap();
        assert!(lines_meet(&l01, &l02));
        assert!(!lines_meet(&l01, &l23));
        let t2 = Line::from_points(pt([8, 0, 1, 0]), pt([0, 1, 0, 2])).unwrap();
        let t3 = Line::from_points(pt([27, 0, 1, 0]), pt([0, 1, 0, 3])).unwrap();
        assert_eq!(incidence_pairing(&t2.plucker(), &t3.plucker()), -19);
        assert!(!lines_meet(&t2, &t3));
    }

    #[test]
    fn from_plucker_roundtrip() {
        let l = Line::from_points(pt([8, 0, 1, 0]), pt([0, 1, 0, 2])).unwrap();
        let m = Line::from_plucker(l.plucker()).unwrap();
        assert_eq!(l, m);
        assert!(m.contains(&pt([8, 0, 1, 0])));
        assert!(m.contains(&pt([0, 1, 0, 2])));
        assert_eq!(Line::from_plucker([1, 0, 0, 0, 0, 1]), Err(Error::InvalidPlucker([1, 0, 0, 0, 0, 1])));
    }

    #[test]
    fn pencil_examples() {
        let p = Pencil::new(pt([0, 0, 0, 1]), Plane::new([1, 0, 0, 0]).unwrap()).unwrap();
        assert_eq!(p.basis, [pt([0, 0, 1, 0]), pt([0, 1, 0, 0])]);
        // (1:0) → {x = 0, y = 0}
        let l = p.member(1, 0).unwrap();
        assert_eq!(l, Line::from_points(pt([0, 0, 1, 0]), pt([0, 0, 0, 1])).unwrap());
        // (0:1) → {x = 0, z = 0}
        let l = p.member(0, 1).unwrap();
        assert_eq!(l, Line::from_points(pt([0, 1, 0, 0]), pt([0, 0, 0, 1])).unwrap());
        let l = p.member(1, 1).unwrap();
        assert!(l.contains(&pt([0, 1, 1, 0])));
        assert_eq!(p.member(0, 0), Err(Error::ZeroParameter));
        assert_eq!(
            Pencil::new(pt([1, 0, 0, 0]), Plane::new([1, 0, 0, 0]).unwrap()),
            Err(Error::VertexNotOnPlane)
        );
    }

    #[test]
    fn pencil_on_skew_plane() {
        let plane = Plane::new([1, 1, -1, 0]).unwrap();
        let v = pt([1, 0, 1, 0]);
        let p = Pencil::new(v, plane).unwrap();
        for b in p.basis {
            assert!(plane.contains(&b));
            assert_ne!(b, v);
        }
        assert!(!Line::from_points(v, p.basis[0]).unwrap().contains(&p.basis[1]));
    }

    #[test]
    fn pgl_identity_and_swap() {
        let f = QuarticForm::from_i64_terms(&[([4, 0, 0, 0], 1), ([0, 4, 0, 0], 1), ([0, 0, 4, 0], 1), ([0, 0, 0, 4], 1)])
            .unwrap();
        let l = Line::from_points(pt([1, 2, 0, 0]), pt([0, 0, 1, 3])).unwrap();
        let id = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]];
        let (f2, l2) = pgl4_apply(&id, &f, &l).unwrap();
        assert_eq!((f2, l2), (f.clone(), l));
        let swap = [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]];
        let (f3, _) = pgl4_apply(&swap, &f, &l).unwrap();
        assert_eq!(f3, f);
        let sing = [[1, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]];
        assert_eq!(pgl4_apply(&sing, &f, &l), Err(Error::SingularMatrix));
    }
}
