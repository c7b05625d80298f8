//! Agreement with the independent oracles in `bitangent-testkit`.

use bitangent_core::exact_algebra::QuarticForm;
use bitangent_core::projective::{Line, ProjPoint};
use bitangent_core::search::{enumerate_lines, HeightBound};
use bitangent_core::tangency::{classify_tangency, restrict_quartic_to_line};
use bitangent_testkit::{lines, poly, random, roots};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn to_form(p: &poly::Poly4) -> QuarticForm {
    QuarticForm::from_terms(p.iter().map(|(e, c)| (*e, c.clone()))).unwrap()
}

fn line(a: [i64; 4], b: [i64; 4]) -> Option<Line> {
    Line::from_points(ProjPoint::new(a).ok()?, ProjPoint::new(b).ok()?).ok()
}

#[test]
fn enumerate_lines_matches_brute_force() {
    for h in 1..=2 {
        let ours: Vec<[i64; 6]> = enumerate_lines(HeightBound::new(h).unwrap()).iter().map(|l| l.plucker()).collect();
        let brute: Vec<[i64; 6]> = lines::brute_force_plucker(h).into_iter().collect();
        assert_eq!(ours, brute, "H = {h}");
    }
}

#[test]
fn classification_matches_root_clustering() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..60 {
        let terms = random::sparse_quartic(&mut rng, 6, 4);
        let f = QuarticForm::from_i64_terms(&terms).unwrap();
        let (a, b) = random::independent_pair(&mut rng, 3);
        let Some(l) = line(a, b) else { continue };
        let r = restrict_quartic_to_line(&f, &l);
        let ints: Vec<BigInt> = (0..5).map(|i| r.coeff(i).to_integer()).collect();
        let oracle = roots::root_partition(&ints);
        assert_eq!(classify_tangency(&f, &l).kind.name(), roots::kind_name(oracle.as_deref()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn restriction_matches_interpolation(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let terms = random::quartic(&mut rng, 5);
        let p = poly::from_terms(&terms);
        let f = to_form(&p);
        let (a, b) = random::independent_pair(&mut rng, 4);
        let l = line(a, b).unwrap();
        let [sa, sb] = l.span();
        let expect = poly::restrict_by_interpolation(&p, &sa.coords(), &sb.coords());
        let got = restrict_quartic_to_line(&f, &l);
        let got: Vec<BigInt> = (0..5).map(|i| got.coeff(i).to_integer()).collect();
        prop_assert_eq!(got, expect.to_vec());
    }

    #[test]
    fn constructed_restrictions_classify(seed in any::<u64>(), shape in 0usize..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pats: [&[(i64, i64)]; 5] = [
            &[(1, 2), (1, 2), (3, -1), (1, 1)],
            &[(2, 1), (2, 1), (2, 1), (1, -3)],
            &[(1, -1), (1, -1), (2, 5), (2, 5)],
            &[(3, 2), (3, 2), (3, 2), (3, 2)],
            &[(1, 0), (0, 1), (1, 1), (1, -1)],
        ];
        let g = poly::binary_product(pats[shape]);
        let g: [i64; 5] = std::array::from_fn(|i| i64::try_from(&g[i]).unwrap());
        let (p, a, b) = random::with_restriction(&mut rng, &g);
        let f = to_form(&p);
        let l = line(a, b).unwrap();
        let expected = ["SimpleTangent", "Flex", "Bitangent", "Quadritangent", "Transverse"][shape];
        prop_assert_eq!(classify_tangency(&f, &l).kind.name(), expected);
    }
}
