//! Two-point symmetric special biserial algebras, the basic algebras of `R(2 delta)` for
//! ell = 1, the stably biserial example, and the ten-dimensional two-loop presentation.
//!
//! Every constructor attaches a trace form: value 1 on the listed maximal paths (and on the
//! listed idempotents), 0 on the remaining normal words.

use super::presentation::{Path, Presentation, Quiver};
use crate::error::{Error, Result};
use crate::rational::{q, Q};
use num_traits::Zero;

type Terms<'a> = Vec<(Q, Vec<&'a str>)>;

fn pow<'a>(word: &[&'a str], k: usize) -> Vec<&'a str> {
    word.iter().copied().cycle().take(word.len() * k).collect()
}

fn zero<'a>(w: &[&'a str]) -> Terms<'a> {
    vec![(q(1), w.to_vec())]
}

fn equal<'a>(a: Vec<&'a str>, b: Vec<&'a str>) -> Terms<'a> {
    vec![(q(1), a), (q(-1), b)]
}

fn check(name: &str, exps: &[(usize, usize)]) -> Result<()> {
    for &(e, min) in exps {
        if e < min {
            return Err(Error::Invalid(format!("family {name}: exponent {e} is below the minimum {min}")));
        }
    }
    Ok(())
}

fn build(quiver: Quiver, rels: &[Terms], trace: &[Vec<&str>], trace_vertices: &[usize]) -> Result<Presentation> {
    let mut tr = Vec::new();
    for &v in trace_vertices {
        tr.push((Path::vertex(v), q(1)));
    }
    for w in trace {
        tr.push((quiver.path(w)?, q(1)));
    }
    Ok(Presentation::from_terms(quiver, rels)?.with_trace(tr))
}

fn two_cycle() -> Vec<(&'static str, usize, usize)> {
    vec![("alpha", 0, 1), ("beta", 1, 0)]
}

/// (1): `(alpha beta)^m alpha = (beta alpha)^m beta = 0`.
pub fn family_1(m: usize) -> Result<Presentation> {
    check("1", &[(m, 1)])?;
    let quiver = Quiver::new(&["0", "1"], &two_cycle())?;
    let ab = ["alpha", "beta"];
    let ba = ["beta", "alpha"];
    let mut r1 = pow(&ab, m);
    r1.push("alpha");
    let mut r2 = pow(&ba, m);
    r2.push("beta");
    build(quiver, &[zero(&r1), zero(&r2)], &[pow(&ab, m), pow(&ba, m)], &[])
}

fn with_gamma_at_0() -> Result<Quiver> {
    Quiver::new(&["0", "1"], &[("alpha", 0, 1), ("beta", 1, 0), ("gamma", 0, 0)])
}

/// (2a): `beta gamma = gamma alpha = 0`, `gamma^p = (alpha beta)^q`.
pub fn family_2a(p: usize, qe: usize) -> Result<Presentation> {
    check("2a", &[(p, 2), (qe, 1)])?;
    let quiver = with_gamma_at_0()?;
    let ab = ["alpha", "beta"];
    let rels = [zero(&["beta", "gamma"]), zero(&["gamma", "alpha"]), equal(pow(&["gamma"], p), pow(&ab, qe))];
    build(quiver, &rels, &[pow(&ab, qe), pow(&["beta", "alpha"], qe)], &[])
}

/// (2b): `beta alpha = gamma^2 = 0`, `(gamma alpha beta)^m = (alpha beta gamma)^m`.
pub fn family_2b(m: usize) -> Result<Presentation> {
    check("2b", &[(m, 1)])?;
    let quiver = with_gamma_at_0()?;
    let gab = ["gamma", "alpha", "beta"];
    let rels = [zero(&["beta", "alpha"]), zero(&["gamma", "gamma"]), equal(pow(&gab, m), pow(&["alpha", "beta", "gamma"], m))];
    build(quiver, &rels, &[pow(&gab, m), pow(&["beta", "gamma", "alpha"], m)], &[])
}

fn double_cycle() -> Result<Quiver> {
    Quiver::new(&["0", "1"], &[("alpha", 0, 1), ("beta", 1, 0), ("alpha'", 0, 1), ("beta'", 1, 0)])
}

/// (3a): `alpha beta' = beta' alpha = alpha' beta = beta alpha' = 0`,
/// `(alpha beta)^p = (alpha' beta')^q`, `(beta alpha)^p = (beta' alpha')^q`.
pub fn family_3a(p: usize, qe: usize) -> Result<Presentation> {
    check("3a", &[(p, 1), (qe, 1)])?;
    let quiver = double_cycle()?;
    let rels = [
        zero(&["alpha", "beta'"]),
        zero(&["beta'", "alpha"]),
        zero(&["alpha'", "beta"]),
        zero(&["beta", "alpha'"]),
        equal(pow(&["alpha", "beta"], p), pow(&["alpha'", "beta'"], qe)),
        equal(pow(&["beta", "alpha"], p), pow(&["beta'", "alpha'"], qe)),
    ];
    let tr = [pow(&["alpha", "beta"], p), pow(&["beta", "alpha"], p), pow(&["alpha'", "beta'"], qe), pow(&["beta'", "alpha'"], qe)];
    build(quiver, &rels, &tr, &[])
}

/// (3b): `alpha beta' = beta alpha = alpha' beta = beta' alpha' = 0` and two cycle relations.
pub fn family_3b(m: usize) -> Result<Presentation> {
    check("3b", &[(m, 1)])?;
    let quiver = double_cycle()?;
    let c1 = ["alpha", "beta", "alpha'", "beta'"];
    let c2 = ["alpha'", "beta'", "alpha", "beta"];
    let c3 = ["beta", "alpha'", "beta'", "alpha"];
    let c4 = ["beta'", "alpha", "beta", "alpha'"];
    let rels = [
        zero(&["alpha", "beta'"]),
        zero(&["beta", "alpha"]),
        zero(&["alpha'", "beta"]),
        zero(&["beta'", "alpha'"]),
        equal(pow(&c1, m), pow(&c2, m)),
        equal(pow(&c3, m), pow(&c4, m)),
    ];
    build(quiver, &rels, &[pow(&c1, m), pow(&c3, m), pow(&c2, m), pow(&c4, m)], &[])
}

fn four_arrows() -> Result<Quiver> {
    Quiver::new(&["0", "1"], &[("alpha", 0, 1), ("beta", 1, 0), ("gamma", 0, 0), ("delta", 1, 1)])
}

/// (4a): `beta gamma = gamma alpha = alpha delta = delta beta = 0`,
/// `(alpha beta)^p = gamma^q`, `(beta alpha)^p = delta^r`.
pub fn family_4a(p: usize, qe: usize, r: usize) -> Result<Presentation> {
    check("4a", &[(p, 1), (qe, 2), (r, 2)])?;
    let quiver = four_arrows()?;
    let rels = [
        zero(&["beta", "gamma"]),
        zero(&["gamma", "alpha"]),
        zero(&["alpha", "delta"]),
        zero(&["delta", "beta"]),
        equal(pow(&["alpha", "beta"], p), pow(&["gamma"], qe)),
        equal(pow(&["beta", "alpha"], p), pow(&["delta"], r)),
    ];
    build(quiver, &rels, &[pow(&["alpha", "beta"], p), pow(&["beta", "alpha"], p)], &[])
}

/// (4b): `beta alpha = gamma^2 = alpha delta = delta beta = 0`,
/// `(gamma alpha beta)^p = (alpha beta gamma)^p`, `(beta gamma alpha)^p = delta^q`.
pub fn family_4b(p: usize, qe: usize) -> Result<Presentation> {
    check("4b", &[(p, 1), (qe, 2)])?;
    let quiver = four_arrows()?;
    let gab = ["gamma", "alpha", "beta"];
    let bga = ["beta", "gamma", "alpha"];
    let rels = [
        zero(&["beta", "alpha"]),
        zero(&["gamma", "gamma"]),
        zero(&["alpha", "delta"]),
        zero(&["delta", "beta"]),
        equal(pow(&gab, p), pow(&["alpha", "beta", "gamma"], p)),
        equal(pow(&bga, p), pow(&["delta"], qe)),
    ];
    build(quiver, &rels, &[pow(&gab, p), pow(&bga, p)], &[])
}

/// (4c): `alpha beta = beta alpha = gamma^2 = delta^2 = 0` and two cycle relations.
pub fn family_4c(m: usize) -> Result<Presentation> {
    check("4c", &[(m, 1)])?;
    let quiver = four_arrows()?;
    let c1 = ["beta", "gamma", "alpha", "delta"];
    let c2 = ["delta", "beta", "gamma", "alpha"];
    let c3 = ["gamma", "alpha", "delta", "beta"];
    let c4 = ["alpha", "delta", "beta", "gamma"];
    let rels = [
        zero(&["alpha", "beta"]),
        zero(&["beta", "alpha"]),
        zero(&["gamma", "gamma"]),
        zero(&["delta", "delta"]),
        equal(pow(&c1, m), pow(&c2, m)),
        equal(pow(&c3, m), pow(&c4, m)),
    ];
    build(quiver, &rels, &[pow(&c1, m), pow(&c3, m)], &[])
}

/// Basic algebra of `R(2 delta)` for ell = 1.
///
/// lambda != 0: `alpha: 0 -> 1`, `beta: 1 -> 0`, loop `gamma` at 1 with
/// `alpha gamma = gamma beta = 0`, `(beta alpha)^2 = gamma^2`.
/// lambda = 0: loops `gamma` at 0 and `delta` at 1 with
/// `alpha beta = beta gamma = gamma alpha = delta^2 = 0`, `gamma^2 = alpha delta beta`,
/// `beta alpha delta = delta beta alpha`.
pub fn basic_r2delta(lambda_is_zero: bool) -> Result<Presentation> {
    if lambda_is_zero {
        let quiver = four_arrows()?;
        let rels = [
            zero(&["alpha", "beta"]),
            zero(&["beta", "gamma"]),
            zero(&["gamma", "alpha"]),
            zero(&["delta", "delta"]),
            equal(vec!["gamma", "gamma"], vec!["alpha", "delta", "beta"]),
            equal(vec!["beta", "alpha", "delta"], vec!["delta", "beta", "alpha"]),
        ];
        build(quiver, &rels, &[vec!["gamma", "gamma"], vec!["beta", "alpha", "delta"]], &[])
    } else {
        let quiver = Quiver::new(&["0", "1"], &[("alpha", 0, 1), ("beta", 1, 0), ("gamma", 1, 1)])?;
        let rels = [
            zero(&["alpha", "gamma"]),
            zero(&["gamma", "beta"]),
            equal(pow(&["beta", "alpha"], 2), vec!["gamma", "gamma"]),
        ];
        build(quiver, &rels, &[pow(&["alpha", "beta"], 2), pow(&["beta", "alpha"], 2)], &[])
    }
}

/// Stably biserial, not special biserial: `gamma^2 = gamma alpha beta = alpha beta gamma`,
/// `beta gamma alpha = beta alpha`, `alpha beta alpha = beta alpha beta = 0`.
pub fn appendix_example() -> Result<Presentation> {
    let quiver = Quiver::new(&["1", "2"], &[("alpha", 0, 1), ("beta", 1, 0), ("gamma", 0, 0)])?;
    let rels = [
        equal(vec!["gamma", "gamma"], vec!["gamma", "alpha", "beta"]),
        equal(vec!["gamma", "alpha", "beta"], vec!["alpha", "beta", "gamma"]),
        equal(vec!["beta", "gamma", "alpha"], vec!["beta", "alpha"]),
        zero(&["alpha", "beta", "alpha"]),
        zero(&["beta", "alpha", "beta"]),
    ];
    build(quiver, &rels, &[vec!["alpha", "beta"], vec!["beta", "alpha"], vec!["gamma", "gamma"]], &[0, 1])
}

/// Two vertices with loops x, y at 1 and z, w at 2 and arrows p: 1 -> 2, q: 2 -> 1.
pub fn wild_2delta(a: Q, b: Q) -> Result<Presentation> {
    let quiver = Quiver::new(
        &["1", "2"],
        &[("p", 0, 1), ("q", 1, 0), ("x", 0, 0), ("y", 0, 0), ("z", 1, 1), ("w", 1, 1)],
    )?;
    let mut rels = vec![
        zero(&["x", "x"]),
        vec![(q(1), vec!["y", "y"]), (-a, vec!["x", "y"])],
        equal(vec!["x", "y"], vec!["y", "x"]),
        zero(&["z", "z"]),
        vec![(q(1), vec!["w", "w"]), (-b, vec!["z", "w"])],
        equal(vec!["z", "w"], vec!["w", "z"]),
        equal(vec!["p", "q"], vec!["x", "y"]),
        equal(vec!["q", "p"], vec!["z", "w"]),
    ];
    for w in [["x", "p"], ["y", "p"], ["p", "z"], ["p", "w"], ["z", "q"], ["w", "q"], ["q", "x"], ["q", "y"]] {
        rels.push(zero(&w));
    }
    for r in &mut rels {
        r.retain(|(c, _)| !c.is_zero());
    }
    build(quiver, &rels, &[vec!["x", "y"], vec!["z", "w"]], &[])
}

/// Path algebra of `0 -> 1`.
pub fn linear_a2() -> Result<Presentation> {
    Presentation::new(Quiver::new(&["0", "1"], &[("a", 0, 1)])?, Vec::new())
}

/// `k` copies of the ground field.
pub fn semisimple(k: usize) -> Result<Presentation> {
    let names: Vec<String> = (0..k).map(|i| i.to_string()).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let tr = (0..k).map(|v| (Path::vertex(v), q(1))).collect();
    Ok(Presentation::new(Quiver::new(&refs, &[])?, Vec::new())?.with_trace(tr))
}

pub const FAMILY_NAMES: &[&str] = &["1", "2a", "2b", "3a", "3b", "4a", "4b", "4c"];

/// Number of exponents each family takes.
pub fn family_arity(name: &str) -> Option<usize> {
    Some(match name {
        "1" | "2b" | "3b" | "4c" => 1,
        "2a" | "3a" | "4b" => 2,
        "4a" => 3,
        _ => return None,
    })
}

pub fn family(name: &str, exps: &[usize]) -> Result<Presentation> {
    let arity = family_arity(name).ok_or_else(|| Error::Invalid(format!("unknown family {name}")))?;
    if exps.len() != arity {
        return Err(Error::Invalid(format!("family {name} takes {arity} exponent(s), got {}", exps.len())));
    }
    match name {
        "1" => family_1(exps[0]),
        "2a" => family_2a(exps[0], exps[1]),
        "2b" => family_2b(exps[0]),
        "3a" => family_3a(exps[0], exps[1]),
        "3b" => family_3b(exps[0]),
        "4a" => family_4a(exps[0], exps[1], exps[2]),
        "4b" => family_4b(exps[0], exps[1]),
        _ => family_4c(exps[0]),
    }
}

/// All admissible exponent tuples with entries in `1..=max`.
pub fn exponent_tuples(name: &str, max: usize) -> Vec<Vec<usize>> {
    let arity = family_arity(name).unwrap_or(0);
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..arity {
        out = out.into_iter().flat_map(|t| (1..=max).map(move |e| [t.clone(), vec![e]].concat())).collect();
    }
    out.retain(|t| family(name, t).is_ok());
    out
}

pub const CATALOG_NAMES: &[&str] =
    &["1", "2a", "2b", "3a", "3b", "4a", "4b", "4c", "basic-2delta", "appendix-example", "wild-2delta", "a2", "semisimple"];

/// Catalog lookup used by the command line; `lambda` selects the basic algebra of `R(2 delta)`,
/// and for the wild presentation `exps` may carry `a, b`.
pub fn by_name(name: &str, exps: &[usize], lambda: &Q) -> Result<Presentation> {
    match name {
        "basic-2delta" => basic_r2delta(lambda.is_zero()),
        "appendix-example" => appendix_example(),
        "wild-2delta" => {
            let a = exps.first().copied().unwrap_or(0);
            let b = exps.get(1).copied().unwrap_or(0);
            wild_2delta(q(a as i64), q(b as i64))
        }
        "a2" => linear_a2(),
        "semisimple" => semisimple(exps.first().copied().unwrap_or(2)),
        _ if family_arity(name).is_some() => family(name, exps),
        _ => Err(Error::Invalid(format!("unknown catalog algebra {name}; known: {}", CATALOG_NAMES.join(", ")))),
    }
}
