//! Explicit modules: hook simples for every rank and the small-rank modules of the
//! level-one blocks 2delta - alpha_i, 2delta and 2delta + alpha_0.

use super::rep::MatrixRep;
use crate::error::{Error, Result};
use crate::rational::{q, Q};
use num_traits::Zero;
use crate::tableaux::{is_standard, residue_word, standard_tableaux, swap_entries, Tableau};

/// Hook shape `(i, 1^{ell-i})`.
pub fn hook(ell: usize, i: usize) -> Vec<usize> {
    let mut s = vec![i];
    s.extend(std::iter::repeat_n(1, ell - i));
    s
}

fn tableau_label(t: &Tableau) -> String {
    t.iter().map(|r| r.iter().map(|e| e.to_string()).collect::<String>()).collect::<Vec<_>>().join("/")
}

fn check_hook(ell: usize, i: usize) -> Result<()> {
    if ell < 1 || i < 1 || i > ell {
        return Err(Error::Invalid(format!("need 1 <= i <= ell, got i = {i}, ell = {ell}")));
    }
    Ok(())
}

/// Tableau module on the hook `(i, 1^{ell-i})`: x acts by zero and psi_k swaps k, k+1 when
/// the result is standard.
pub fn build_l(ell: usize, i: usize, lambda: Q) -> Result<MatrixRep> {
    check_hook(ell, i)?;
    let ts = standard_tableaux(&hook(ell, i));
    let words: Vec<Vec<usize>> = ts.iter().map(|t| residue_word(ell, t)).collect();
    let labels: Vec<String> = ts.iter().map(tableau_label).collect();
    let label_refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
    let mut rep = MatrixRep::with_weights(ell, lambda, &words, &label_refs);
    for (c, t) in ts.iter().enumerate() {
        for k in 1..ell {
            let s = swap_entries(t, k);
            if is_standard(&s) {
                let r = ts.iter().position(|u| *u == s).expect("swapped tableau has the same shape");
                rep.set_psi(k, r, c, q(1));
            }
        }
    }
    Ok(rep)
}

/// Extension of [`build_l`] by one more residue `i`, with `x_{ell+1} = psi_ell = 0`.
pub fn build_s(ell: usize, i: usize, lambda: Q) -> Result<MatrixRep> {
    let l = build_l(ell, i, lambda)?;
    let words: Vec<Vec<usize>> = (0..l.dim)
        .map(|b| {
            let (w, _) = l.idempotents.iter().find(|(_, e)| !e[(b, b)].is_zero()).expect("every basis vector has a word");
            let mut w = w.clone();
            w.push(i);
            w
        })
        .collect();
    let labels: Vec<&str> = l.labels.iter().map(|s| s.as_str()).collect();
    let mut rep = MatrixRep::with_weights(ell, l.lambda.clone(), &words, &labels);
    for k in 0..l.psi.len() {
        rep.psi[k] = l.psi[k].clone();
    }
    Ok(rep)
}

fn w(s: &str) -> Vec<usize> {
    crate::tableaux::parse_word(s).expect("static word")
}

/// Two-dimensional module of the block 2delta - alpha_1 (ell = 1) on `e(011)`.
pub fn build_m0(lambda: Q) -> MatrixRep {
    let mut r = MatrixRep::with_weights(1, lambda, &[w("011"), w("011")], &["v1", "v2"]);
    r.set_x(2, 0, 1, q(1));
    r.set_x(3, 0, 1, q(-1));
    r.set_psi(2, 1, 0, q(-1));
    r
}

/// Two-dimensional uniserial module of the block 2delta - alpha_0 on `e(010)`.
pub fn build_m1hat(lambda: Q) -> MatrixRep {
    let mut r = MatrixRep::with_weights(1, lambda.clone(), &[w("010"), w("010")], &["w1", "w2"]);
    r.set_x(2, 0, 1, q(1));
    r.set_x(3, 0, 1, -lambda);
    r
}

/// One-dimensional simple of the block 2delta - alpha_0.
pub fn build_m1(lambda: Q) -> MatrixRep {
    MatrixRep::with_weights(1, lambda, &[w("010")], &["w"])
}

/// Simple module of R(2delta) on `e(0110)`.
pub fn build_n0(lambda: Q) -> MatrixRep {
    let mut r = MatrixRep::with_weights(1, lambda, &[w("0110"), w("0110")], &["v1", "v2"]);
    r.set_x(2, 0, 1, q(1));
    r.set_x(3, 0, 1, q(-1));
    r.set_psi(2, 1, 0, q(-1));
    r
}

/// One-dimensional simple module of R(2delta) on `e(0101)`.
pub fn build_n1(lambda: Q) -> MatrixRep {
    MatrixRep::with_weights(1, lambda, &[w("0101")], &["w"])
}

/// Uniserial module of R(2delta) on `e(0101)` with `x_4 w2 = (lambda^2 - 1) w1`.
pub fn build_n1hat(lambda: Q) -> MatrixRep {
    let mut r = MatrixRep::with_weights(1, lambda.clone(), &[w("0101"), w("0101")], &["w1", "w2"]);
    r.set_x(2, 0, 1, q(1));
    r.set_x(3, 0, 1, -lambda.clone());
    r.set_x(4, 0, 1, &lambda * &lambda - q(1));
    r
}

/// `N0 + N1hat` glued by `psi_3 v_i = w_i`; a module only for lambda = 0.
pub fn build_t0(lambda: Q) -> MatrixRep {
    let mut r = build_n0(lambda.clone()).direct_sum(&build_n1hat(lambda));
    r.set_psi(3, 2, 0, q(1));
    r.set_psi(3, 3, 1, q(1));
    r
}

/// Five-dimensional module with layers N0, N1, N0 (basis v1, v2, w, v~1, v~2).
pub fn build_t1(lambda: Q) -> MatrixRep {
    let words = [w("0110"), w("0110"), w("0101"), w("0110"), w("0110")];
    let mut r = MatrixRep::with_weights(1, lambda.clone(), &words, &["v1", "v2", "w", "v~1", "v~2"]);
    for (a, b) in [(0, 1), (3, 4)] {
        r.set_x(2, a, b, q(1));
        r.set_x(3, a, b, q(-1));
        r.set_psi(2, b, a, q(-1));
    }
    r.set_x(4, 3, 0, q(1));
    r.set_x(4, 4, 1, q(1));
    r.set_psi(3, 2, 1, -lambda);
    r.set_psi(3, 3, 2, q(1));
    r
}

fn six_dim(lambda: &Q, words: &[Vec<usize>]) -> MatrixRep {
    let mut r = MatrixRep::with_weights(1, lambda.clone(), words, &["v1", "v2", "w", "v~1", "v~2", "u"]);
    let l = lambda.clone();
    let set = |r: &mut MatrixRep, kind: char, k: usize, entries: &[(usize, usize, Q)]| {
        for (row, col, c) in entries {
            if kind == 'x' {
                r.set_x(k, row - 1, col - 1, c.clone());
            } else {
                r.set_psi(k, row - 1, col - 1, c.clone());
            }
        }
    };
    set(&mut r, 'x', 2, &[(1, 2, q(1)), (3, 6, q(1)), (4, 5, q(1))]);
    set(&mut r, 'x', 3, &[(1, 2, q(-1)), (3, 6, -l.clone()), (4, 5, q(-1))]);
    set(&mut r, 'x', 4, &[(3, 6, q(-1)), (4, 1, q(1)), (5, 2, q(1))]);
    set(&mut r, 'p', 2, &[(2, 1, q(-1)), (5, 4, q(-1))]);
    set(&mut r, 'p', 3, &[(1, 6, -l.clone()), (3, 2, -l.clone()), (4, 3, q(1)), (5, 6, q(1))]);
    if r.n == 5 {
        set(&mut r, 'x', 5, &[(3, 6, l.clone()), (4, 1, q(-1)), (5, 2, q(-1))]);
        set(&mut r, 'p', 4, &[(1, 4, q(-1)), (2, 5, q(-1))]);
    }
    r
}

/// Six-dimensional module of R(2delta) with layers N1, N0, N1, N0.
pub fn build_t1hat(lambda: Q) -> MatrixRep {
    let (a, b) = (w("0110"), w("0101"));
    six_dim(&lambda, &[a.clone(), a.clone(), b.clone(), a.clone(), a, b])
}

/// Six-dimensional module of R(2delta + alpha_0) extending [`build_t1hat`].
pub fn build_v(lambda: Q) -> MatrixRep {
    let (a, b) = (w("01100"), w("01010"));
    six_dim(&lambda, &[a.clone(), a.clone(), b.clone(), a.clone(), a, b])
}

/// Simple submodule of V on `v, v~` (and `w` when lambda != 0).
pub fn build_o0(lambda: Q) -> MatrixRep {
    let v = build_v(lambda.clone());
    let keep: Vec<usize> = if lambda == q(0) { vec![0, 1, 3, 4] } else { vec![0, 1, 2, 3, 4] };
    v.coordinate_submodule(&keep).expect("invariant by construction")
}

/// One-dimensional simple of R(2delta + alpha_0) on `e(01010)`.
pub fn build_o1(lambda: Q) -> MatrixRep {
    MatrixRep::with_weights(1, lambda, &[w("01010")], &["u"])
}

/// Uniserial extension of O1 by O1, extending [`build_n1hat`] with `psi_4 = 0`.
pub fn build_o1hat(lambda: Q) -> MatrixRep {
    let l = lambda.clone();
    let mut r = MatrixRep::with_weights(1, lambda, &[w("01010"), w("01010")], &["w1", "w2"]);
    r.set_x(2, 0, 1, q(1));
    r.set_x(3, 0, 1, -l.clone());
    r.set_x(4, 0, 1, &l * &l - q(1));
    r.set_x(5, 0, 1, q(2) * &l - &l * &l * &l);
    r
}

/// Submodule `U` of V spanned by `v, w, v~`; `V / U` is O1.
pub fn build_u(lambda: Q) -> MatrixRep {
    build_v(lambda).coordinate_submodule(&[0, 1, 2, 3, 4]).expect("invariant by construction")
}

pub const ZOO_NAMES: &[&str] =
    &["L", "S", "M0", "M1", "M1hat", "N0", "N1", "N1hat", "T0", "T1", "T1hat", "V", "U", "O0", "O1", "O1hat"];

/// Builds a zoo module by name; `i` and `ell` are used only by `L` and `S`.
pub fn build(name: &str, ell: usize, i: usize, lambda: Q) -> Result<MatrixRep> {
    let needs_rank_one = || {
        if ell != 1 {
            Err(Error::Invalid(format!("module {name} exists only for ell = 1")))
        } else {
            Ok(())
        }
    };
    match name {
        "L" => build_l(ell, i, lambda),
        "S" => build_s(ell, i, lambda),
        _ => {
            needs_rank_one()?;
            Ok(match name {
                "M0" => build_m0(lambda),
                "M1" => build_m1(lambda),
                "M1hat" => build_m1hat(lambda),
                "N0" => build_n0(lambda),
                "N1" => build_n1(lambda),
                "N1hat" => build_n1hat(lambda),
                "T0" => build_t0(lambda),
                "T1" => build_t1(lambda),
                "T1hat" => build_t1hat(lambda),
                "V" => build_v(lambda),
                "U" => build_u(lambda),
                "O0" => build_o0(lambda),
                "O1" => build_o1(lambda),
                "O1hat" => build_o1hat(lambda),
                _ => return Err(Error::Invalid(format!("unknown module {name}; known: {}", ZOO_NAMES.join(", ")))),
            })
        }
    }
}
