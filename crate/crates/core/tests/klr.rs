use klr_core::klr::zoo::*;
use klr_core::klr::{rescale_rep, verify_rep, KlrData, MatrixRep, RepJson};
use klr_core::path_algebra::klr_quiver::{klr_as_presentation, klr_block_presentation};
use klr_core::path_algebra::normalize;
use klr_core::rational::{qf, Q};
use klr_core::reproduce::random_scaling;
use klr_core::tableaux::{dim_idempotent_hom, parse_word};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn lambda() -> impl Strategy<Value = Q> {
    (-6i64..=6, 1i64..=4).prop_map(|(a, b)| qf(a, b))
}

fn zoo_at(l: &Q) -> Vec<(&'static str, MatrixRep)> {
    let mut v = vec![
        ("M0", build_m0(l.clone())),
        ("M1", build_m1(l.clone())),
        ("N0", build_n0(l.clone())),
        ("N1", build_n1(l.clone())),
        ("T1", build_t1(l.clone())),
        ("V", build_v(l.clone())),
        ("O0", build_o0(l.clone())),
        ("O1", build_o1(l.clone())),
    ];
    v.push(("L(2,1)", build_l(2, 1, l.clone()).unwrap()));
    v.push(("S(3,2)", build_s(3, 2, l.clone()).unwrap()));
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn relations_survive_rescaling(l in lambda(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for (name, r) in zoo_at(&l) {
            let sc = random_scaling(&mut rng, r.ell + 1);
            let data = KlrData::new(r.ell, r.lambda.clone()).unwrap().rescaled(&sc).unwrap();
            prop_assert!(data.is_consistent());
            prop_assert!(verify_rep(&rescale_rep(&r, &sc), &data).passed, "{}", name);
        }
    }

    #[test]
    fn json_round_trip(l in lambda()) {
        for (name, r) in zoo_at(&l) {
            let text = serde_json::to_string(&r.to_json()).unwrap();
            let back = MatrixRep::from_json(&serde_json::from_str::<RepJson>(&text).unwrap()).unwrap();
            prop_assert_eq!(back.character(), r.character(), "{}", name);
            prop_assert!(verify_rep(&back, &KlrData::new(back.ell, back.lambda.clone()).unwrap()).passed);
        }
    }

    #[test]
    fn block_cartan_matches_tableaux(l in lambda(), which in 0usize..4) {
        let (ell, beta): (usize, &[i64]) = [(1, &[1, 2][..]), (1, &[2, 1][..]), (2, &[1, 1, 1][..]), (2, &[1, 1, 0][..])][which];
        let alg = normalize(&klr_block_presentation(ell, beta, l).unwrap()).unwrap();
        let words: Vec<Vec<usize>> = alg.vertices.iter().map(|v| parse_word(v).unwrap()).collect();
        let cart = alg.cartan_matrix();
        for (i, a) in words.iter().enumerate() {
            for (j, b) in words.iter().enumerate() {
                prop_assert_eq!(cart[i][j] as u128, dim_idempotent_hom(ell, a, b).unwrap());
            }
        }
    }
}

#[test]
fn rank_two_cyclotomic_dimensions() {
    for n in 0..=3 {
        let alg = normalize(&klr_as_presentation(2, n, qf(1, 1)).unwrap()).unwrap();
        assert_eq!(alg.dim(), (1..=n).product::<usize>());
        assert!(alg.is_associative());
    }
}

#[test]
fn corrupted_rep_is_rejected() {
    let mut r = build_n1(qf(1, 1));
    let data = KlrData::new(r.ell, r.lambda.clone()).unwrap();
    assert!(verify_rep(&r, &data).passed);
    r.set_x(1, 0, 0, qf(7, 1));
    let rep = verify_rep(&r, &data);
    assert!(!rep.passed);
    assert!(!rep.failures.is_empty());
}

#[test]
fn bad_block_vector_is_an_error() {
    assert!(klr_block_presentation(1, &[1], qf(0, 1)).is_err());
    assert!(klr_block_presentation(1, &[-1, 2], qf(0, 1)).is_err());
}
