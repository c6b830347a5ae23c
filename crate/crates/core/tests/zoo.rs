use klr_core::klr::analysis::{composition_factors, epsilon, is_absolutely_irreducible, isomorphic, layers_text, radical_layers, restrict_e};
use klr_core::klr::zoo::*;
use klr_core::klr::{verify_rep, KlrData, MatrixRep};
use klr_core::rational::{q, qf, Q};

fn lambdas() -> Vec<Q> {
    vec![q(0), q(1), q(-1), qf(3, 2), qf(2, 3), q(2)]
}

fn passes(r: &MatrixRep) -> bool {
    let rep = verify_rep(r, &KlrData::new(r.ell, r.lambda.clone()).unwrap());
    if !rep.passed {
        eprintln!("{:#?}", &rep.failures[..rep.failures.len().min(3)]);
    }
    rep.passed
}

#[test]
fn hook_modules_verify() {
    for ell in 1..=4 {
        for i in 1..=ell {
            for l in [q(0), qf(3, 2)] {
                let lm = build_l(ell, i, l.clone()).unwrap();
                assert!(passes(&lm), "L ell={ell} i={i}");
                assert!(passes(&build_s(ell, i, l.clone()).unwrap()), "S ell={ell} i={i}");
                assert!(is_absolutely_irreducible(&lm));
                let binom = (1..i).fold(1usize, |acc, t| acc * (ell - t) / t);
                assert_eq!(lm.dim, binom);
            }
        }
    }
}

#[test]
fn rank_one_modules_verify_for_all_lambda() {
    for l in lambdas() {
        for r in [
            build_m0(l.clone()),
            build_m1hat(l.clone()),
            build_m1(l.clone()),
            build_n0(l.clone()),
            build_n1(l.clone()),
            build_n1hat(l.clone()),
            build_t1(l.clone()),
            build_t1hat(l.clone()),
            build_v(l.clone()),
            build_u(l.clone()),
            build_o0(l.clone()),
            build_o1(l.clone()),
            build_o1hat(l.clone()),
        ] {
            assert!(passes(&r), "lambda = {l}");
        }
    }
}

#[test]
fn t0_only_at_zero() {
    assert!(passes(&build_t0(q(0))));
    for l in [q(1), q(-2), qf(3, 2)] {
        let rep = verify_rep(&build_t0(l.clone()), &KlrData::new(1, l.clone()).unwrap());
        assert!(!rep.passed);
        let f = rep
            .failures
            .iter()
            .find(|f| f.relation.starts_with("(psi3 x3 - x4 psi3) e(0110)") && f.witness == "v2")
            .expect("expected witness");
        let mut expected = vec![q(0); 4];
        expected[2] = -(&l * &l);
        let got: Vec<Q> = f.residual.iter().map(|s| klr_core::rational::parse_q(s).unwrap()).collect();
        assert_eq!(got, expected);
    }
}

#[test]
fn irreducibles_and_reducibles() {
    for l in lambdas() {
        for r in [build_n0(l.clone()), build_n1(l.clone()), build_o0(l.clone()), build_o1(l.clone()), build_m0(l.clone())] {
            assert!(is_absolutely_irreducible(&r));
        }
        assert!(!is_absolutely_irreducible(&build_n1hat(l.clone())));
        assert!(!is_absolutely_irreducible(&build_t1(l.clone())));
    }
    assert_eq!(build_o0(q(0)).dim, 4);
    assert_eq!(build_o0(q(1)).dim, 5);
}

#[test]
fn restriction_and_epsilon() {
    let a = restrict_e(&build_m0(q(1)), 1).unwrap();
    let b = restrict_e(&build_m1hat(q(1)), 0).unwrap();
    assert!(isomorphic(&a, &b).unwrap());
    for l in [q(0), q(1)] {
        assert_eq!(epsilon(&build_o0(l.clone()), 0).unwrap(), 2);
        assert_eq!(epsilon(&build_o1(l.clone()), 0).unwrap(), 1);
    }
}

fn simples_2delta(l: &Q) -> Vec<(String, MatrixRep)> {
    vec![("N0".into(), build_n0(l.clone())), ("N1".into(), build_n1(l.clone()))]
}

#[test]
fn layer_shapes() {
    let t1 = radical_layers(&build_t1(q(2)), &simples_2delta(&q(2))).unwrap();
    assert_eq!(layers_text(&t1), "[N0; N1; N0]");
    let t1z = radical_layers(&build_t1(q(0)), &simples_2delta(&q(0))).unwrap();
    assert_eq!(layers_text(&t1z), "[N0+N1; N0]");
    let th = radical_layers(&build_t1hat(q(1)), &simples_2delta(&q(1))).unwrap();
    assert_eq!(layers_text(&th), "[N1; N0; N1; N0]");
    let thd = radical_layers(&build_t1hat(q(1)).dual(), &simples_2delta(&q(1))).unwrap();
    assert_eq!(layers_text(&thd), "[N0; N1; N0; N1]");
    for l in [q(0), q(1), qf(3, 2)] {
        let s = vec![("O0".into(), build_o0(l.clone())), ("O1".into(), build_o1(l.clone()))];
        assert_eq!(layers_text(&radical_layers(&build_o1hat(l.clone()), &s).unwrap()), "[O1; O1]");
    }
    let s = vec![("O0".into(), build_o0(q(1))), ("O1".into(), build_o1(q(1)))];
    assert_eq!(layers_text(&radical_layers(&build_v(q(1)), &s).unwrap()), "[O1; O0]");
    assert_eq!(composition_factors(&build_t1hat(q(1)), &simples_2delta(&q(1))).unwrap().get("N1"), Some(&2));
}

#[test]
fn n0_is_self_dual() {
    for l in lambdas() {
        assert!(isomorphic(&build_n0(l.clone()).dual(), &build_n0(l.clone())).unwrap());
    }
}
