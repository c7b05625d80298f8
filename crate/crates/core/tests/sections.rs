//! Tangent sections of random quartics through a rational point.

use bitangent_core::exact_algebra::{BinaryForm, QuarticForm};
use bitangent_core::projective::ProjPoint;
use bitangent_core::quadratic_points::{
    bitangents_through_point, branch_form, quadratic_point_on_section, residual_quadratic, tangent_section,
    SingularityKind,
};
use bitangent_core::search::{search_bitangents, HeightBound};
use bitangent_core::Error;
use bitangent_testkit::{poly, random};
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A random quartic vanishing at a random point, and that point.
fn surface_with_point(seed: u64) -> (QuarticForm, ProjPoint) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut terms = random::quartic(&mut rng, 4);
    terms.retain(|(e, _)| *e != [0, 0, 0, 4]);
    if !terms.iter().any(|(e, _)| e[3] == 3) {
        terms.push(([rng.gen_range(0..1), 1, 0, 3], 1));
    }
    let (m, mi) = random::unimodular(&mut rng, 4);
    let f = poly::compose(&poly::from_terms(&terms), &m);
    let p = random::mat_vec(&mi, &[0, 0, 0, 1]);
    (QuarticForm::from_terms(f.iter().map(|(e, c)| (*e, c.clone()))).unwrap(), ProjPoint::new(p).unwrap())
}

fn disc(q: &BinaryForm) -> BigRational {
    let [a, b, c] = [0, 1, 2].map(|i| q.coeff(i));
    &b * &b - BigRational::from_integer(4.into()) * a * c
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn double_roots_are_branch_roots(seed in any::<u64>()) {
        let (f, p) = surface_with_point(seed);
        let sec = tangent_section(&f, &p).unwrap();
        prop_assume!(sec.singularity_kind == SingularityKind::Node);
        let br = branch_form(&sec).unwrap();
        // degree law
        let h = br.contained_factor.degree().unwrap();
        prop_assert_eq!(br.degree + 2 * h, 6);
        for a in -4i64..=4 {
            for b in 0i64..=4 {
                if (a, b) == (0, 0) || num_integer::gcd(a, b) != 1 || (b == 0 && a < 0) {
                    continue;
                }
                let (ra, rb) = (BigRational::from_integer(a.into()), BigRational::from_integer(b.into()));
                let on_branch = br.form.eval(&ra, &rb).is_zero();
                let contained = br.contained_factor.eval(&ra, &rb).is_zero();
                match residual_quadratic(&sec, a, b) {
                    Err(Error::ContainedDirection(..)) => prop_assert!(contained),
                    Ok(q) => {
                        prop_assert_eq!(disc(&q).is_zero(), on_branch || contained);
                        if let Ok(pair) = quadratic_point_on_section(&sec, a, b) {
                            prop_assert!(pair.points.iter().all(|x| x.satisfies(&f)));
                            if !pair.is_rational() {
                                prop_assert_eq!(&pair.points[1], &pair.points[0].conjugate());
                            }
                        }
                    }
                    Err(e) => prop_assert!(false, "{e}"),
                }
            }
        }
    }
}

#[test]
fn certified_lines_appear_in_search() {
    let mut checked = 0;
    for seed in 0..40u64 {
        let (f, p) = surface_with_point(seed);
        let Ok(rep) = bitangents_through_point(&f, &p) else { continue };
        assert_eq!(rep.root_count as usize, rep.branch.degree);
        for d in rep.rational.iter().filter(|d| d.certified && d.line.height() <= 6) {
            let cat = search_bitangents(&f, HeightBound::new(d.line.height()).unwrap());
            assert!(cat.bitangent_lines().contains(&d.line), "seed {seed}: {}", d.line);
            checked += 1;
        }
    }
    assert!(checked > 0);
}
