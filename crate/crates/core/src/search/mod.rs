//! Height-bounded search for rational lines, bitangents and rational points.
//!
//! Bitangent search works modulo a prime p first: a rational bitangent or a
//! line on the surface reduces to a line of P^3(F_p) on which `F mod p` is zero
//! or a scaled square. Only the integer lattices above those F_p-lines are
//! searched, and every candidate found there is classified exactly.

mod modular;
mod sieve;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_algebra::monomials::{index4, monomials4};
use crate::exact_algebra::{BinaryForm, QuarticForm};
use crate::projective::{lines_meet, Line, ProjPoint};
use crate::tangency::{classify_form, classify_tangency, contact_points, ContactPoint, TangencyKind, TangencyType};
use modular::{is_prime, scan_lines, zero_or_scaled_square, ModQuartic, QUAD_PAIRS};
use sieve::lines_in_lattice;

/// A positive bound on the sup-norm of canonical coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct HeightBound(i64);

impl HeightBound {
    pub fn new(h: i64) -> Result<Self> {
        if h >= 1 {
            Ok(HeightBound(h))
        } else {
            Err(Error::InvalidHeight(h))
        }
    }

    pub fn get(self) -> i64 {
        self.0
    }
}

// ---------------------------------------------------------------------------
// Worker pools
// ---------------------------------------------------------------------------

/// Runs `f` on a pool of `workers` threads (or the global pool for `None`).
pub fn with_workers<T: Send>(workers: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    #[cfg(feature = "parallel")]
    {
        if let Some(n) = workers {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build().expect("thread pool");
            return pool.install(f);
        }
        f()
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = workers;
        f()
    }
}

/// Order-preserving parallel flat map.
pub(crate) fn par_flat_map<I, T, F>(items: I, f: F) -> Vec<T>
where
    I: IntoIterator,
    I::Item: Send,
    T: Send,
    F: Fn(I::Item) -> Vec<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        let items: Vec<I::Item> = items.into_iter().collect();
        items.into_par_iter().map(f).collect::<Vec<Vec<T>>>().into_iter().flatten().collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.into_iter().flat_map(f).collect()
    }
}

// ---------------------------------------------------------------------------
// Lines
// ---------------------------------------------------------------------------

const IDENTITY: [[i64; 4]; 4] = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]];

fn line_from_basis(a: &[i64; 4], b: &[i64; 4], p: [i64; 6]) -> Line {
    let a = ProjPoint::new(*a).expect("nonzero");
    let b = ProjPoint::new(*b).expect("nonzero");
    Line::from_parts_unchecked([a, b], p)
}

/// Every rational line whose canonical Plücker vector has sup-norm ≤ H, once
/// each, sorted by Plücker vector. Each line is spanned by a reduced basis of
/// its integer points.
pub fn enumerate_lines(h: HeightBound) -> Vec<Line> {
    let mut out = Vec::new();
    lines_in_lattice(&IDENTITY, h.0, |_| (), |_, a, b, p| out.push(line_from_basis(a, b, p)));
    out.sort();
    out
}

// ---------------------------------------------------------------------------
// Bitangent catalog
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub line: Line,
    pub tangency: TangencyType,
    pub contacts: Vec<ContactPoint>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BitangentCatalog {
    pub quartic: QuarticForm,
    pub height: HeightBound,
    /// `"sieve mod p"` or `"exhaustive"`.
    pub method: String,
    pub bitangents: Vec<CatalogEntry>,
    pub contained_lines: Vec<Line>,
    pub counts: BTreeMap<TangencyKind, usize>,
}

impl BitangentCatalog {
    pub fn bitangent_count(&self) -> usize {
        self.bitangents.len()
    }

    pub fn bitangent_lines(&self) -> Vec<Line> {
        self.bitangents.iter().map(|e| e.line).collect()
    }
}

/// How lines are generated before exact classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Strategy {
    /// Sieve modulo a prime chosen from H (and F's content).
    Auto,
    /// Sieve modulo the given prime (at least 5, not dividing the content).
    Modulus(u64),
    /// Classify every line of height ≤ H.
    Exhaustive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SearchConfig {
    pub strategy: Strategy,
    pub workers: Option<usize>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { strategy: Strategy::Auto, workers: None }
    }
}

/// Prime used by the sieve for height `h`.
pub fn default_modulus(f: &QuarticForm, h: HeightBound) -> u64 {
    let content = f.content();
    let target = (1.8 * (h.0 as f64).powf(2.0 / 3.0)).round().max(5.0) as u64;
    (target..)
        .find(|&p| is_prime(p) && !(&content % BigInt::from(p)).is_zero())
        .expect("a prime exists")
}

/// All rational bitangents (including quadritangents) and all rational lines
/// on the surface with Plücker height ≤ H.
pub fn search_bitangents(f: &QuarticForm, h: HeightBound) -> BitangentCatalog {
    search_bitangents_with(f, h, &SearchConfig::default()).expect("default configuration is valid")
}

pub fn search_bitangents_with(f: &QuarticForm, h: HeightBound, cfg: &SearchConfig) -> Result<BitangentCatalog> {
    let (method, found) = with_workers(cfg.workers, || -> Result<_> {
        Ok(match cfg.strategy {
            Strategy::Exhaustive => ("exhaustive".to_string(), exhaustive(f, h)),
            Strategy::Auto => {
                let p = default_modulus(f, h);
                (format!("sieve mod {p}"), sieve_search(f, h, p))
            }
            Strategy::Modulus(p) => {
                if p < 5 || !is_prime(p) || (f.content() % BigInt::from(p)).is_zero() {
                    return Err(Error::Parse { pos: 0, msg: format!("unusable sieve modulus {p}") });
                }
                (format!("sieve mod {p}"), sieve_search(f, h, p))
            }
        })
    })?;
    Ok(build_catalog(f, h, method, found, cfg.workers))
}

fn build_catalog(
    f: &QuarticForm,
    h: HeightBound,
    method: String,
    mut found: Vec<(Line, TangencyType)>,
    workers: Option<usize>,
) -> BitangentCatalog {
    found.sort_by(|x, y| x.0.cmp(&y.0));
    let n = found.len();
    found.dedup_by(|x, y| x.0 == y.0);
    assert_eq!(n, found.len(), "line produced twice");
    let mut counts = BTreeMap::new();
    let mut contained = Vec::new();
    let mut tangent = Vec::new();
    for (l, t) in found {
        *counts.entry(t.kind).or_insert(0) += 1;
        if t.kind == TangencyKind::Contained {
            contained.push(l);
        } else {
            tangent.push((l, t));
        }
    }
    let bitangents = with_workers(workers, || {
        par_flat_map(tangent, |(line, tangency)| {
            let contacts = contact_points(f, &line).expect("bitangent has contacts");
            vec![CatalogEntry { line, tangency, contacts }]
        })
    });
    BitangentCatalog { quartic: f.clone(), height: h, method, bitangents, contained_lines: contained, counts }
}

fn keep(t: &TangencyType) -> bool {
    t.kind.is_bitangent() || t.kind == TangencyKind::Contained
}

fn exhaustive(f: &QuarticForm, h: HeightBound) -> Vec<(Line, TangencyType)> {
    let lines = enumerate_lines(h);
    let chunks: Vec<Vec<Line>> = lines.chunks(512).map(|c| c.to_vec()).collect();
    par_flat_map(chunks, |chunk| {
        chunk
            .into_iter()
            .filter_map(|l| {
                let t = classify_tangency(f, &l);
                keep(&t).then_some((l, t))
            })
            .collect()
    })
}

/// Exact restriction data of F along `a + t·b`, specialised to a fixed `a`.
struct PerA {
    f0: i128,
    grad: [i128; 4],
    half_hess: [i128; 10],
    cubic: [i128; 20],
}

/// F with coefficients in i128, for the fast candidate test.
struct SmallQuartic {
    terms: Vec<([u8; 4], i128)>,
}

/// Second modulus for the candidate filter.
const CHECK_PRIME: u64 = 1_000_000_007;

impl SmallQuartic {
    /// `None` when the coefficients or the values at height `h` could
    /// overflow i128.
    fn new(f: &QuarticForm, h: i64) -> Option<Self> {
        let mut terms = Vec::new();
        let mut cmax = 0f64;
        for (e, c) in f.terms() {
            let c = c.to_i64()?;
            cmax = cmax.max((c as f64).abs());
            terms.push((e, c as i128));
        }
        // |a|, |b| ≤ 2√2·h coordinatewise; each f_k is a sum of ≤ 35 terms
        // with multinomial factors ≤ 24.
        let x = 2.9 * h as f64;
        if 35.0 * 24.0 * cmax * x.powi(4) > 1e36 {
            return None;
        }
        Some(SmallQuartic { terms })
    }

    fn per_a(&self, a: &[i64; 4]) -> PerA {
        let pw = powers(a);
        let mono = |e: [u8; 4]| -> i128 { (0..4).map(|i| pw[i][e[i] as usize]).product() };
        let mut r = PerA { f0: 0, grad: [0; 4], half_hess: [0; 10], cubic: [0; 20] };
        for &(e, c) in &self.terms {
            r.f0 += c * mono(e);
            for i in 0..4 {
                if e[i] == 0 {
                    continue;
                }
                let mut d = e;
                d[i] -= 1;
                r.grad[i] += c * e[i] as i128 * mono(d);
                // f3 = Σ_i a_i ∂_i F(b): the cubic monomial b^d gets c·e_i·a_i
                r.cubic[index4(d)] += c * e[i] as i128 * a[i] as i128;
            }
            for (k, &(i, j)) in QUAD_PAIRS.iter().enumerate() {
                let mut d = e;
                let coef = if i == j {
                    if e[i] < 2 {
                        continue;
                    }
                    d[i] -= 2;
                    (e[i] as i128) * (e[i] as i128 - 1) / 2
                } else {
                    if e[i] == 0 || e[j] == 0 {
                        continue;
                    }
                    d[i] -= 1;
                    d[j] -= 1;
                    e[i] as i128 * e[j] as i128
                };
                r.half_hess[k] += c * coef * mono(d);
            }
        }
        r
    }

    /// Coefficients of `F(u·a + v·b)`.
    fn restrict(&self, pa: &PerA, b: &[i64; 4]) -> [i128; 5] {
        let pw = powers(b);
        let mono = |e: [u8; 4]| -> i128 { (0..4).map(|i| pw[i][e[i] as usize]).product() };
        let f1: i128 = (0..4).map(|i| pa.grad[i] * b[i] as i128).sum();
        let f2: i128 = QUAD_PAIRS.iter().zip(&pa.half_hess).map(|(&(i, j), h)| h * pw[i][1] * pw[j][1]).sum();
        let f3: i128 = cubic_monomials().iter().zip(&pa.cubic).map(|(e, c)| c * mono(*e)).sum();
        let f4: i128 = self.terms.iter().map(|&(e, c)| c * mono(e)).sum();
        [pa.f0, f1, f2, f3, f4]
    }
}

fn powers(v: &[i64; 4]) -> [[i128; 5]; 4] {
    v.map(|x| {
        let x = x as i128;
        [1, x, x * x, x * x * x, x * x * x * x]
    })
}

fn cubic_monomials() -> &'static [[u8; 4]] {
    static CELL: std::sync::OnceLock<Vec<[u8; 4]>> = std::sync::OnceLock::new();
    CELL.get_or_init(|| monomials4(3))
}

fn passes_check_prime(f: &[i128; 5]) -> bool {
    let q = CHECK_PRIME as i128;
    zero_or_scaled_square(f.map(|c| c.rem_euclid(q) as u64), CHECK_PRIME)
}

fn sieve_search(f: &QuarticForm, h: HeightBound, p: u64) -> Vec<(Line, TangencyType)> {
    let fp = ModQuartic::new(f, p);
    let classes = scan_lines(&fp);
    let small = SmallQuartic::new(f, h.0);
    par_flat_map(classes, |cls| {
        let mut out = Vec::new();
        let basis = cls.lattice_basis(p);
        match &small {
            Some(sq) => lines_in_lattice(
                &basis,
                h.0,
                |a| sq.per_a(a),
                |pa, _a, b, pl| {
                    let fl = sq.restrict(pa, b);
                    if !passes_check_prime(&fl) {
                        return;
                    }
                    let form = BinaryForm::from_bigints(&fl.map(BigInt::from));
                    let t = classify_form(&form).expect("restriction has degree 4");
                    if keep(&t) {
                        out.push((line_from_basis(_a, b, pl), t));
                    }
                },
            ),
            None => lines_in_lattice(
                &basis,
                h.0,
                |_| (),
                |_, a, b, pl| {
                    let l = line_from_basis(a, b, pl);
                    let t = classify_tangency(f, &l);
                    if keep(&t) {
                        out.push((l, t));
                    }
                },
            ),
        }
        out
    })
}

// ---------------------------------------------------------------------------
// Incidence
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IncidenceGraph {
    /// Catalog bitangents, in catalog order.
    pub lines: Vec<Line>,
    /// Index pairs `(i, j)`, `i < j`, of meeting lines.
    pub edges: Vec<(usize, usize)>,
    pub degrees: Vec<usize>,
    pub max_degree: usize,
    pub isolated: usize,
}

/// Pairs of distinct catalog bitangents that meet.
pub fn incidence_graph(catalog: &BitangentCatalog) -> IncidenceGraph {
    let lines = catalog.bitangent_lines();
    let mut edges = Vec::new();
    let mut degrees = vec![0; lines.len()];
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            if lines_meet(&lines[i], &lines[j]) {
                edges.push((i, j));
                degrees[i] += 1;
                degrees[j] += 1;
            }
        }
    }
    let max_degree = degrees.iter().copied().max().unwrap_or(0);
    let isolated = degrees.iter().filter(|&&d| d == 0).count();
    IncidenceGraph { lines, edges, degrees, max_degree, isolated }
}

// ---------------------------------------------------------------------------
// Rational points
// ---------------------------------------------------------------------------

/// All canonical points of sup-norm ≤ H on the surface, sorted.
pub fn search_rational_points(f: &QuarticForm, h: HeightBound) -> Result<Vec<ProjPoint>> {
    let h = h.0;
    // F(x, y, z, w) = Σ_k g_k(x, y, z)·w^k
    let mut parts: [Vec<([u8; 3], i128)>; 5] = Default::default();
    for (e, c) in f.terms() {
        let c = c.to_i64().ok_or(Error::Overflow("point search coefficients"))? as i128;
        parts[e[3] as usize].push(([e[0], e[1], e[2]], c));
    }
    let xs: Vec<i64> = (0..=h).collect();
    let mut pts = par_flat_map(xs, |x| {
        let mut found = Vec::new();
        for y in -h..=h {
            for z in -h..=h {
                if x == 0 && (y < 0 || (y == 0 && z < 0)) {
                    continue;
                }
                let xyz = [x as i128, y as i128, z as i128];
                let g: [i128; 5] = std::array::from_fn(|k| {
                    parts[k]
                        .iter()
                        .map(|(e, c)| c * (0..3).map(|i| xyz[i].pow(e[i] as u32)).product::<i128>())
                        .sum()
                });
                for w in -h..=h {
                    if x == 0 && y == 0 && z == 0 && w <= 0 {
                        continue;
                    }
                    let wv = w as i128;
                    let val = (((g[4] * wv + g[3]) * wv + g[2]) * wv + g[1]) * wv + g[0];
                    if val == 0 {
                        if let Ok(pt) = ProjPoint::new([x, y, z, w]) {
                            if pt.coords() == [x, y, z, w] {
                                found.push(pt);
                            }
                        }
                    }
                }
            }
        }
        found
    });
    pts.sort();
    Ok(pts)
}

// ---------------------------------------------------------------------------
// Smoothness screen
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeScreen {
    pub prime: u64,
    /// `F mod p` vanishes identically.
    pub vanishes: bool,
    /// Singular points of the reduction found over F_p (at most a few listed).
    pub singular_points: Vec<[u64; 4]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmoothnessScreen {
    pub primes: Vec<PrimeScreen>,
    /// Some prime has a nonzero reduction without F_p-rational singular
    /// points. This is a screen, not a proof of smoothness.
    pub passed: bool,
}

/// Looks for F_p-rational singular points of `F mod p` for each prime.
pub fn smoothness_screen(f: &QuarticForm, primes: &[u64]) -> SmoothnessScreen {
    let mut out = Vec::new();
    for &p in primes {
        let fp = ModQuartic::new(f, p);
        if fp.is_zero() {
            out.push(PrimeScreen { prime: p, vanishes: true, singular_points: Vec::new() });
            continue;
        }
        let mut sing = Vec::new();
        for v in projective_points_mod(p) {
            let (val, g, _) = fp.jets(&v);
            if val == 0 && g.iter().all(|&x| x == 0) {
                sing.push(v);
                if sing.len() >= 8 {
                    break;
                }
            }
        }
        out.push(PrimeScreen { prime: p, vanishes: false, singular_points: sing });
    }
    let passed = out.iter().any(|s| !s.vanishes && s.singular_points.is_empty());
    SmoothnessScreen { primes: out, passed }
}

/// Representatives of P^3(F_p), first nonzero coordinate 1.
fn projective_points_mod(p: u64) -> impl Iterator<Item = [u64; 4]> {
    (0..4).flat_map(move |lead| {
        let free = 3 - lead;
        (0..p.pow(free as u32)).map(move |mut idx| {
            let mut v = [0u64; 4];
            v[lead] = 1;
            for slot in v.iter_mut().skip(lead + 1) {
                *slot = idx % p;
                idx /= p;
            }
            v
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_quartic;
    use crate::tangency::example_quartic;

    fn hb(h: i64) -> HeightBound {
        HeightBound::new(h).unwrap()
    }

    #[test]
    fn height_bound_rejects_zero() {
        assert_eq!(HeightBound::new(0), Err(Error::InvalidHeight(0)));
    }

    #[test]
    fn enumerate_small_heights() {
        let l1 = enumerate_lines(hb(1));
        assert_eq!(l1.len(), 122);
        let axes = [[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0], [0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, 1]];
        for a in axes {
            assert!(l1.iter().any(|l| l.plucker() == a));
        }
        let l2 = enumerate_lines(hb(2));
        assert_eq!(l2.len(), 1034);
        assert!(l1.iter().all(|l| l2.binary_search(l).is_ok()));
    }

    #[test]
    fn example_catalog_small() {
        let cat = search_bitangents(&example_quartic(), hb(1));
        let target = Line::from_points(ProjPoint::new([1, 0, 1, 0]).unwrap(), ProjPoint::new([0, 1, 0, 1]).unwrap())
            .unwrap();
        assert!(cat.contained_lines.contains(&target));
    }

    #[test]
    fn sieve_matches_exhaustive() {
        for (f, h) in [
            (example_quartic(), 5),
            (parse_quartic("x*w^3 + y*z*w^2 + x^4 + y^4 + z^4").unwrap(), 4),
            (parse_quartic("x^4 + y^4 - z^4 - w^4").unwrap(), 4),
            (parse_quartic("x^2*y^2 - z^4 + 3*x*y*z*w - w^4 + 2*x^3*w").unwrap(), 4),
        ] {
            let ex = search_bitangents_with(&f, hb(h), &SearchConfig { strategy: Strategy::Exhaustive, workers: None })
                .unwrap();
            for p in [5, 7, 11] {
                let sv = search_bitangents_with(&f, hb(h), &SearchConfig { strategy: Strategy::Modulus(p), workers: None })
                    .unwrap();
                assert_eq!(sv.bitangent_lines(), ex.bitangent_lines(), "p = {p}");
                assert_eq!(sv.contained_lines, ex.contained_lines, "p = {p}");
                assert_eq!(sv.counts, ex.counts);
            }
        }
    }

    #[test]
    fn points_examples() {
        let f = parse_quartic("x^4 + y^4 - z^4 - w^4").unwrap();
        let pts = search_rational_points(&f, hb(1)).unwrap();
        for c in [[1, 0, 1, 0], [0, 1, 0, 1], [1, 1, 1, 1]] {
            assert!(pts.contains(&ProjPoint::new(c).unwrap()));
        }
        let fermat = parse_quartic("x^4 + y^4 + z^4 + w^4").unwrap();
        assert!(search_rational_points(&fermat, hb(3)).unwrap().is_empty());
        let f0 = parse_quartic("x*w^3 + y*z*w^2 + x^4 + y^4 + z^4").unwrap();
        assert!(search_rational_points(&f0, hb(1)).unwrap().contains(&ProjPoint::new([0, 0, 0, 1]).unwrap()));
    }

    #[test]
    fn smoothness_examples() {
        let fermat = parse_quartic("x^4 + y^4 + z^4 + w^4").unwrap();
        let s = smoothness_screen(&fermat, &[2, 3, 5]);
        assert!(s.primes[0].vanishes || !s.primes[0].singular_points.is_empty());
        assert!(s.passed);
        let cone = parse_quartic("x^4 + y^4 + z^4").unwrap();
        assert!(!smoothness_screen(&cone, &[3, 5, 7]).passed);
    }

    #[test]
    fn incidence_examples() {
        let mut cat = search_bitangents(&example_quartic(), hb(1));
        cat.bitangents.truncate(1);
        assert!(incidence_graph(&cat).edges.is_empty());
    }
}
