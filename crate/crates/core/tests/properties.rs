//! Property tests of the algebraic invariants and the cross-checks.

use num_rational::BigRational;
use proptest::prelude::*;

use torusq::algebra::{qbinomial_z, CycloNum, QSeries, XLaurent, ZPoly};
use torusq::bailey::{bailey_verify, make_named_pair, NamedPair};
use torusq::io::{series_from_csv, series_from_json, series_to_csv, series_to_json};
use torusq::knot::{
    c_multisum, c_product, eval_f_at_root, habiro_inverse, habiro_reconstruct, u_eval_at_root,
    CyclotomicCoeffs, KnotFamilyParams,
};
use torusq::verify::{run_mutations, CheckSpec};

fn family(max_t: u32) -> impl Strategy<Value = KnotFamilyParams> {
    (1..=max_t)
        .prop_flat_map(|t| (Just(t), 1..=t))
        .prop_map(|(t, m)| KnotFamilyParams::new(t, m).unwrap())
}

fn laurent() -> impl Strategy<Value = XLaurent> {
    prop::collection::vec((-3i64..4, -5i64..6), 0..4)
        .prop_map(|v| XLaurent::from_int_terms(&v))
}

fn series() -> impl Strategy<Value = QSeries> {
    (1u32..4, 1i64..12, prop::collection::vec((-2i64..12, laurent()), 0..8))
        .prop_map(|(scale, trunc, terms)| QSeries::from_terms(scale, Some(trunc), terms))
}

fn cyclo() -> impl Strategy<Value = CycloNum> {
    (1u64..25, prop::collection::vec(-4i64..5, 1..12)).prop_map(|(order, c)| {
        let dense = c.into_iter().map(|v| BigRational::from_integer(v.into())).collect();
        CycloNum::from_dense(order, dense)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn gaussian_binomial_pascal(n in 1i64..14, k in 0i64..14) {
        prop_assume!(k <= n);
        let left = qbinomial_z(n, k);
        let right = &qbinomial_z(n - 1, k - 1) + &qbinomial_z(n - 1, k).shift(k);
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(left, qbinomial_z(n, n - k));
    }

    #[test]
    fn series_inverse(c in prop::collection::vec(-3i64..4, 1..6), trunc in 1i64..15) {
        let mut coeffs = vec![1i64];
        coeffs.extend(c);
        let s = QSeries::from_zpoly(&ZPoly::from_i64s(0, &coeffs)).truncated(trunc);
        let prod = &s * &s.invert().unwrap();
        prop_assert_eq!(prod, QSeries::one().truncated(trunc));
    }

    #[test]
    fn series_product_is_commutative(a in series(), b in series()) {
        let a = a.with_scale(6);
        let b = b.with_scale(6);
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn cyclotomic_field_inverse(a in cyclo()) {
        prop_assume!(!a.is_zero());
        let one = &a * &a.inverse().unwrap();
        prop_assert_eq!(one, CycloNum::one(a.order()));
    }

    #[test]
    fn serialization_roundtrip(s in series()) {
        prop_assert_eq!(series_from_json(&series_to_json(&s)).unwrap(), s.clone());
        prop_assert_eq!(series_from_csv(&series_to_csv(&s).unwrap()).unwrap(), s);
    }

    #[test]
    fn coefficient_forms_agree(p in family(3), n in 0u32..6) {
        prop_assert_eq!(c_product(p, n), c_multisum(p, n).unwrap());
    }

    #[test]
    fn duality_at_roots(p in family(3), n in 1u32..9) {
        prop_assert_eq!(eval_f_at_root(p, n, true).unwrap(), u_eval_at_root(p, n).unwrap());
    }

    #[test]
    fn cyclotomic_expansion_inverts(p in family(3), n in 0u32..5) {
        let c = CyclotomicCoeffs::product(p, n + 2);
        let back = habiro_inverse(|l| habiro_reconstruct(&c, l), n).unwrap();
        prop_assert_eq!(&back, c.get(n as usize).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn perturbed_pairs_fail_at_the_perturbation(
        pick in 0usize..64,
        n0 in 0i64..5,
        e in 0i64..10,
    ) {
        let catalogue = NamedPair::catalogue(2);
        let name = catalogue[pick % catalogue.len()];
        let pair = make_named_pair(&name).unwrap();
        let delta = QSeries::monomial(XLaurent::one(), e, 1);
        let report = bailey_verify(&pair.with_beta_perturbed(n0, delta), 5, 12);
        prop_assert!(!report.passed());
        prop_assert_eq!(report.witness.unwrap().index, Some(n0));
    }

    #[test]
    fn mutations_are_located(seed in any::<u64>(), p in family(3), n in 1u32..8) {
        let specs = [
            CheckSpec::Duality { family: p, n },
            CheckSpec::Cyclotomic { family: p, n_max: 5 },
            CheckSpec::Hecke { family: p, trunc: 8 },
            CheckSpec::Theta { family: p, window: 8 },
            CheckSpec::BaileyPipeline { family: p, n_max: 3, trunc: 10 },
        ];
        for o in run_mutations(&specs, seed, 1) {
            prop_assert!(o.caught, "{} {:?}: {}", o.spec, o.mutation, o.report);
        }
    }
}
