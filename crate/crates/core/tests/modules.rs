use klr_core::module::{is_isomorphic, Module};
use klr_core::path_algebra::catalog::*;
use klr_core::path_algebra::homological::Homological;
use klr_core::path_algebra::{normalize, Presentation};
use klr_core::rational::{q, qf};
use klr_core::reproduce::induced_projectives;
use klr_core::string_ar::{StringAlgebra, StringWord};
use proptest::prelude::*;
use std::sync::OnceLock;

struct Fixture {
    name: &'static str,
    sa: StringAlgebra,
    strings: Vec<StringWord>,
}

fn fixtures() -> &'static [Fixture] {
    static F: OnceLock<Vec<Fixture>> = OnceLock::new();
    F.get_or_init(|| {
        let make = |name: &'static str, p: Presentation, maxlen: usize| {
            let sa = StringAlgebra::new(&normalize(&p).unwrap()).unwrap();
            let strings = sa.enumerate_strings(maxlen);
            Fixture { name, sa, strings }
        };
        vec![
            make("lambda=0", basic_r2delta(true).unwrap(), 5),
            make("lambda!=0", basic_r2delta(false).unwrap(), 5),
            make("2a(2,3)", family_2a(2, 3).unwrap(), 4),
            make("3b(2)", family_3b(2).unwrap(), 4),
        ]
    })
}

fn non_projective(h: &Homological, m: &Module) -> bool {
    !h.is_projective(m).unwrap()
}

fn pick() -> impl Strategy<Value = (usize, prop::sample::Index, prop::sample::Index)> {
    (0..4usize, any::<prop::sample::Index>(), any::<prop::sample::Index>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn string_words_are_well_behaved((k, i, _) in pick()) {
        let f = &fixtures()[k];
        let w = &f.strings[i.index(f.strings.len())];
        let sa = &f.sa;
        prop_assert!(sa.is_string(w));
        prop_assert_eq!(&sa.inverse(&sa.inverse(w)), w);
        prop_assert_eq!(&sa.canonical_string(&sa.inverse(w)), w);
        prop_assert_eq!(&sa.parse(&sa.name(w)).unwrap(), w);
        let m = sa.string_module(w).unwrap();
        prop_assert_eq!(m.dim, w.len() + 1);
        prop_assert!(sa.hom.is_indecomposable(&m).unwrap());
        prop_assert!(is_isomorphic(&m, &sa.string_module(&sa.inverse(w)).unwrap()));
    }

    #[test]
    fn tau_is_omega_squared((k, i, _) in pick()) {
        let f = &fixtures()[k];
        let h = &f.sa.hom;
        let m = f.sa.string_module(&f.strings[i.index(f.strings.len())]).unwrap();
        prop_assume!(non_projective(h, &m));
        let t = h.tau(&m).unwrap();
        prop_assert!(is_isomorphic(&t, &h.omega_power(&m, 2).unwrap()), "{}", f.name);
        prop_assert!(is_isomorphic(&h.tau_inverse(&t).unwrap(), &m));
        prop_assert!(is_isomorphic(&h.omega_inverse(&h.omega(&m).unwrap()).unwrap(), &m));
    }

    #[test]
    fn syzygy_dimension((k, i, _) in pick()) {
        let f = &fixtures()[k];
        let h = &f.sa.hom;
        let m = f.sa.string_module(&f.strings[i.index(f.strings.len())]).unwrap();
        let cover = h.projective_cover(&m).unwrap();
        prop_assert_eq!(h.omega(&m).unwrap().dim + m.dim, cover.module.dim);
        prop_assert_eq!(cover.vertices.len(), h.top(&m).unwrap().dim);
    }

    #[test]
    fn ext_three_ways((k, i, j) in pick()) {
        let f = &fixtures()[k];
        let h = &f.sa.hom;
        let m = f.sa.string_module(&f.strings[i.index(f.strings.len())]).unwrap();
        let n = f.sa.string_module(&f.strings[j.index(f.strings.len())]).unwrap();
        let e = h.ext1_dim(&m, &n).unwrap();
        prop_assert_eq!(h.ext1_dim_stable(&m, &n).unwrap(), e);
        prop_assert_eq!(h.ext1_dim_ar(&m, &n).unwrap(), e);
        prop_assert!(h.stable_hom_dim(&m, &n).unwrap() <= h.hom_dim(&m, &n));
    }
}

#[test]
fn distinct_strings_give_distinct_modules() {
    for f in fixtures() {
        let short: Vec<_> = f.strings.iter().filter(|w| w.len() <= 3).collect();
        for (a, u) in short.iter().enumerate() {
            for v in &short[a + 1..] {
                let (mu, mv) = (f.sa.string_module(u).unwrap(), f.sa.string_module(v).unwrap());
                assert!(!is_isomorphic(&mu, &mv), "{}: {} vs {}", f.name, f.sa.name(u), f.sa.name(v));
            }
        }
    }
}

#[test]
fn band_modules_are_tau_periodic() {
    for f in &fixtures()[..2] {
        let bands = f.sa.enumerate_bands(4);
        assert!(!bands.is_empty(), "{}", f.name);
        for b in &bands {
            assert!(f.sa.is_band(b));
            assert_eq!(&f.sa.canonical_band(b), b);
            for t in [q(1), qf(-2, 3)] {
                let m = f.sa.band_module(b, &t).unwrap();
                assert_eq!(m.dim, b.len());
                assert!(f.sa.hom.is_indecomposable(&m).unwrap());
                assert!(is_isomorphic(&f.sa.hom.tau(&m).unwrap(), &m), "{}: {}", f.name, f.sa.name(b));
            }
        }
    }
}

#[test]
fn parse_rejects_non_strings() {
    let sa = &fixtures()[1].sa;
    assert!(sa.parse("alpha alpha").is_err());
    assert!(sa.parse("nonsense").is_err());
}

#[test]
fn projectives_and_injectives_agree_for_symmetric() {
    for f in fixtures() {
        let h = &f.sa.hom;
        for v in 0..h.nvertices() {
            assert!(is_isomorphic(&h.projective(v), &h.injective(v)), "{}", f.name);
            assert!(h.is_projective(&h.projective(v)).unwrap());
            assert_eq!(h.top(&h.projective(v)).unwrap().dim, 1);
        }
    }
}

#[test]
fn regular_module_splits_into_induced_projectives() {
    for l in [q(0), q(1), qf(3, 2)] {
        let ip = induced_projectives(&l).unwrap();
        let copies: Vec<&Module> =
            std::iter::repeat_n(&ip.q0, ip.n0.dim).chain(std::iter::repeat_n(&ip.q1, ip.n1.dim)).collect();
        let sum = copies[1..].iter().fold(copies[0].clone(), |s, m| s.direct_sum(m));
        assert_eq!(sum.dim, ip.alg.dim());
        assert!(is_isomorphic(&ip.alg.regular_module(), &sum));
    }
}
