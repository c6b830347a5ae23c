use klr_core::path_algebra::catalog::*;
use klr_core::path_algebra::homological::Homological;
use klr_core::path_algebra::klr_quiver::klr_block_presentation;
use klr_core::path_algebra::oracle::brute_force_dims;
use klr_core::path_algebra::structure::*;
use klr_core::path_algebra::{normalize, Presentation};
use klr_core::rational::{q, qf};
use klr_core::reproduce::element;
use proptest::prelude::*;

#[test]
fn two_a_dimension_and_cartan() {
    let pres = family_2a(2, 2).unwrap();
    let alg = normalize(&pres).unwrap();
    assert_eq!(alg.dim(), 11);
    assert_eq!(alg.cartan_matrix(), vec![vec![4, 2], vec![2, 3]]);
    let o = brute_force_dims(&pres, 40).unwrap();
    assert_eq!(o.dim, 11);
    assert_eq!(o.graded, alg.cartan_matrix());
}

#[test]
fn delta_block_rank_two_is_a_brauer_line() {
    for l in [q(0), q(1), qf(-5, 2)] {
        let alg = normalize(&klr_block_presentation(2, &[1, 1, 1], l).unwrap()).unwrap();
        assert_eq!(alg.dim(), 6);
        assert_eq!(alg.vertices, vec!["012".to_string(), "021".to_string()]);
        assert_eq!(alg.cartan_matrix(), vec![vec![2, 1], vec![1, 2]]);
        assert!(Homological::new(&alg).is_ok());
        assert!(is_symmetric(&alg, None).is_some());
    }
}

#[test]
fn center_dimensions() {
    let dims = |p: Presentation| center(&normalize(&p).unwrap()).len();
    assert_eq!(dims(basic_r2delta(true).unwrap()), 5);
    assert_eq!(dims(basic_r2delta(false).unwrap()), 5);
    assert_eq!(dims(family_2b(1).unwrap()), 4);
    assert_eq!(dims(family_4a(2, 2, 2).unwrap()), 6);
    assert_eq!(dims(semisimple(3).unwrap()), 3);
}

#[test]
fn lambda_zero_center_basis() {
    let alg = normalize(&basic_r2delta(true).unwrap()).unwrap();
    let z = center(&alg);
    for t in ["1", "gamma", "beta alpha", "gamma^2", "beta alpha delta"] {
        assert!(in_span(alg.dim(), &z, &element(&alg, t).unwrap()), "{t}");
    }
    assert!(!in_span(alg.dim(), &z, &element(&alg, "delta").unwrap()));
}

#[test]
fn symmetric_and_biserial() {
    for pres in [basic_r2delta(true).unwrap(), basic_r2delta(false).unwrap(), family_3b(1).unwrap()] {
        let alg = normalize(&pres).unwrap();
        let t = trace_from_presentation(&alg, &pres).unwrap().unwrap();
        assert!(check_trace(&alg, &t).valid());
        assert!(is_symmetric(&alg, None).is_some());
        assert!(is_special_biserial(&alg).holds);
        assert!(is_stably_biserial(&alg).unwrap().holds);
        assert!(is_self_injective(&alg).unwrap());
    }
}

#[test]
fn appendix_example_is_only_stably_biserial() {
    let alg = normalize(&appendix_example().unwrap()).unwrap();
    let sb = is_special_biserial(&alg);
    assert!(!sb.holds);
    assert!(!sb.failures.is_empty());
    assert!(is_stably_biserial(&alg).unwrap().holds);
    assert!(is_symmetric(&alg, None).is_some());
}

#[test]
fn path_algebra_of_a2_is_not_symmetric() {
    let pres = linear_a2().unwrap();
    let alg = normalize(&pres).unwrap();
    assert_eq!(alg.dim(), 3);
    assert!(trace_from_presentation(&alg, &pres).unwrap().is_none());
    assert!(is_symmetric(&alg, None).is_none());
    assert!(!is_self_injective(&alg).unwrap());
}

#[test]
fn two_loop_quiver_has_a_wild_witness() {
    for (a, b) in [(q(0), q(0)), (q(1), q(1))] {
        let alg = normalize(&wild_2delta(a, b).unwrap()).unwrap();
        assert_eq!(alg.dim(), 10);
        let quiver = quiver_of_algebra(&alg).unwrap();
        let w = wild_configuration_witness(&quiver).expect("witness");
        assert_eq!(w.vertex, "1");
        assert_eq!(w.loops.len(), 2);
    }
    let basic = normalize(&basic_r2delta(false).unwrap()).unwrap();
    assert!(wild_configuration_witness(&quiver_of_algebra(&basic).unwrap()).is_none());
}

#[test]
fn presentation_json_round_trip() {
    let pres = family_4b(1, 2).unwrap();
    let text = serde_json::to_string(&pres.to_json()).unwrap();
    let back = Presentation::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
    assert_eq!(normalize(&back).unwrap().dim(), normalize(&pres).unwrap().dim());
}

#[test]
fn unknown_catalog_name_is_an_error() {
    assert!(by_name("5x", &[], &q(1)).is_err());
    assert!(family("2a", &[1, 1]).is_err());
}

fn catalog_entry() -> impl Strategy<Value = (String, Vec<usize>)> {
    (0..FAMILY_NAMES.len(), any::<prop::sample::Index>()).prop_map(|(k, i)| {
        let name = FAMILY_NAMES[k];
        let tuples = exponent_tuples(name, 3);
        (name.to_string(), tuples[i.index(tuples.len())].clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn rewriting_matches_path_oracle((name, exps) in catalog_entry()) {
        let pres = family(&name, &exps).unwrap();
        let alg = normalize(&pres).unwrap();
        let o = brute_force_dims(&pres, 40).unwrap();
        prop_assert_eq!(o.dim, alg.dim());
        prop_assert_eq!(o.graded, alg.cartan_matrix());
        prop_assert!(alg.is_associative());
    }

    #[test]
    fn radical_is_the_arrow_ideal((name, exps) in catalog_entry()) {
        let alg = normalize(&family(&name, &exps).unwrap()).unwrap();
        let rad = jacobson_radical(&alg).unwrap();
        prop_assert!(same_span(alg.dim(), &rad, &arrow_ideal(&alg)));
        let powers = radical_powers(&alg).unwrap();
        prop_assert!(product_span(&alg, powers.last().unwrap(), &rad).is_empty());
        prop_assert!(powers.windows(2).all(|w| w[0].len() > w[1].len()));
    }

    #[test]
    fn socle_is_central_for_symmetric((name, exps) in catalog_entry()) {
        let alg = normalize(&family(&name, &exps).unwrap()).unwrap();
        let z = center(&alg);
        for s in socle_algebra(&alg).unwrap() {
            prop_assert!(in_span(alg.dim(), &z, &s));
        }
        prop_assert!(same_span(alg.dim(), &one_sided_socle(&alg, true).unwrap(), &one_sided_socle(&alg, false).unwrap()));
    }
}
