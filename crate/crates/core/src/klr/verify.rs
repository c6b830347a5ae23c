//! Relation-by-relation check of a matrix representation.

use super::data::KlrData;
use super::rep::MatrixRep;
use crate::linalg::Matrix;
use crate::poly::Poly;
use crate::rational::{fmt_q, Q};
use crate::tableaux::word_to_string;
use num_traits::{One, Zero};
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct RelationFailure {
    /// Human-readable relation, e.g. `(psi3 x3 - x4 psi3 - 0) e(0110)`.
    pub relation: String,
    /// Residue word of the idempotent the relation was tested on, if any.
    pub nu: Option<String>,
    /// Basis vector on which the residual is nonzero.
    pub witness: String,
    /// Residual as coefficients on the basis vectors.
    pub residual: Vec<String>,
    /// Residual written with basis labels.
    pub residual_text: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub relations_checked: usize,
    pub failures: Vec<RelationFailure>,
}

fn swap(nu: &[usize], k: usize) -> Vec<usize> {
    let mut w = nu.to_vec();
    w.swap(k, k + 1);
    w
}

struct Checker<'a> {
    rep: &'a MatrixRep,
    checked: usize,
    failures: Vec<RelationFailure>,
}

impl Checker<'_> {
    fn check(&mut self, lhs: &Matrix, rhs: &Matrix, name: impl FnOnce() -> String, nu: Option<&[usize]>) {
        self.checked += 1;
        if lhs == rhs {
            return;
        }
        let diff = lhs.sub(rhs);
        let col = (0..diff.cols()).find(|&c| (0..diff.rows()).any(|r| !diff[(r, c)].is_zero())).unwrap();
        let res = diff.column(col);
        let text: Vec<String> = res
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                if c.is_one() {
                    self.rep.labels[i].clone()
                } else {
                    format!("{}*{}", fmt_q(c), self.rep.labels[i])
                }
            })
            .collect();
        self.failures.push(RelationFailure {
            relation: name(),
            nu: nu.map(word_to_string),
            witness: self.rep.labels[col].clone(),
            residual: res.iter().map(fmt_q).collect(),
            residual_text: text.join(" + "),
        });
    }
}

fn eval2(p: &Poly, a: &Matrix, b: &Matrix) -> Matrix {
    p.eval_matrices(&[a, b])
}

/// Checks every defining relation of the cyclotomic KLR algebra (level one, weight Lambda_0)
/// with polynomials from `data`.
pub fn verify_rep(rep: &MatrixRep, data: &KlrData) -> VerifyReport {
    let d = rep.dim;
    let n = rep.n;
    let mut c = Checker { rep, checked: 0, failures: Vec::new() };
    let zero = Matrix::zeros(d, d);
    let id = Matrix::identity(d);
    let words: Vec<Vec<usize>> = rep.support();
    let ok_shapes = rep.x.len() == n
        && rep.psi.len() == n.saturating_sub(1)
        && rep.x.iter().chain(&rep.psi).all(|m| m.rows() == d && m.cols() == d)
        && words.iter().all(|w| w.len() == n && w.iter().all(|&r| r <= rep.ell));
    if !ok_shapes || rep.ell != data.ell {
        return VerifyReport {
            passed: false,
            relations_checked: 0,
            failures: vec![RelationFailure {
                relation: "shape".into(),
                nu: None,
                witness: String::new(),
                residual: Vec::new(),
                residual_text: "matrix sizes, residue words or rank do not match".into(),
            }],
        };
    }

    let mut sum = zero.clone();
    for (i, w) in words.iter().enumerate() {
        let e = rep.idempotent(w);
        sum = sum.add(&e);
        c.check(&e.mul(&e), &e, || format!("e({0}) e({0}) = e({0})", word_to_string(w)), Some(w));
        for w2 in &words[i + 1..] {
            c.check(&e.mul(&rep.idempotent(w2)), &zero, || format!("e({}) e({}) = 0", word_to_string(w), word_to_string(w2)), Some(w));
        }
    }
    c.check(&sum, &id, || "sum of e(nu) = 1".into(), None);

    for w in &words {
        let e = rep.idempotent(w);
        let ws = word_to_string(w);
        // cyclotomic condition for Lambda_0
        if w[0] == 0 {
            c.check(&rep.x[0].mul(&e), &zero, || format!("x1 e({ws}) = 0"), Some(w));
        } else {
            c.check(&e, &zero, || format!("e({ws}) = 0"), Some(w));
        }
        for k in 0..n {
            c.check(&rep.x[k].mul(&e), &e.mul(&rep.x[k]), || format!("x{} e({ws}) = e({ws}) x{}", k + 1, k + 1), Some(w));
            for l in k + 1..n {
                c.check(
                    &rep.x[k].mul(&rep.x[l]).mul(&e),
                    &rep.x[l].mul(&rep.x[k]).mul(&e),
                    || format!("x{} x{} e({ws}) = x{} x{} e({ws})", k + 1, l + 1, l + 1, k + 1),
                    Some(w),
                );
            }
        }
        for k in 0..n.saturating_sub(1) {
            let sw = swap(w, k);
            let esw = rep.idempotent(&sw);
            let pk = &rep.psi[k];
            c.check(&pk.mul(&e), &esw.mul(pk).mul(&e), || format!("psi{} e({ws}) = e({}) psi{}", k + 1, word_to_string(&sw), k + 1), Some(w));
            for l in k + 2..n.saturating_sub(1) {
                let pl = &rep.psi[l];
                c.check(
                    &pk.mul(pl).mul(&e),
                    &pl.mul(pk).mul(&e),
                    || format!("psi{} psi{} e({ws}) = psi{} psi{} e({ws})", k + 1, l + 1, l + 1, k + 1),
                    Some(w),
                );
            }
            let (i, j) = (w[k], w[k + 1]);
            let qv = eval2(data.q_poly(i, j), &rep.x[k], &rep.x[k + 1]).mul(&e);
            c.check(&pk.mul(pk).mul(&e), &qv, || format!("psi{0}^2 e({ws}) = Q_{{{i},{j}}}(x{0}, x{1}) e({ws})", k + 1, k + 2), Some(w));
            for l in 0..n {
                let sl = if l == k { k + 1 } else if l == k + 1 { k } else { l };
                let lhs = pk.mul(&rep.x[l]).mul(&e).sub(&rep.x[sl].mul(pk).mul(&e));
                let (rhs, rtext) = if i == j && l == k {
                    (e.scale(&-Q::one()), "-e")
                } else if i == j && l == k + 1 {
                    (e.clone(), "e")
                } else {
                    (zero.clone(), "0")
                };
                c.check(
                    &lhs,
                    &rhs,
                    || format!("(psi{0} x{1} - x{2} psi{0}) e({ws}) = {rtext}", k + 1, l + 1, sl + 1),
                    Some(w),
                );
            }
            if k + 2 < n {
                let p1 = &rep.psi[k + 1];
                let lhs = p1.mul(pk).mul(p1).mul(&e).sub(&pk.mul(p1).mul(pk).mul(&e));
                let rhs = if w[k] == w[k + 2] {
                    let corr = data.braid_correction(w[k], w[k + 1]);
                    corr.eval_matrices(&[&rep.x[k], &rep.x[k + 1], &rep.x[k + 2]]).mul(&e)
                } else {
                    zero.clone()
                };
                c.check(
                    &lhs,
                    &rhs,
                    || format!("(psi{1} psi{0} psi{1} - psi{0} psi{1} psi{0}) e({ws}) = braid correction", k + 1, k + 2),
                    Some(w),
                );
            }
        }
    }
    VerifyReport { passed: c.failures.is_empty(), relations_checked: c.checked, failures: c.failures }
}

/// Representation for the rescaled polynomials: `x_k e(nu) -> c_{nu_k nu_k}^{-1} x_k e(nu)`,
/// `psi_k e(nu) -> c_{nu_k nu_{k+1}} psi_k e(nu)`.
pub fn rescale_rep(rep: &MatrixRep, c: &[Vec<Q>]) -> MatrixRep {
    let d = rep.dim;
    let mut out = rep.clone();
    for k in 0..rep.n {
        let mut m = Matrix::zeros(d, d);
        for (w, e) in &rep.idempotents {
            m.add_scaled(&rep.x[k].mul(e), &c[w[k]][w[k]].recip());
        }
        out.x[k] = m;
    }
    for k in 0..rep.n.saturating_sub(1) {
        let mut m = Matrix::zeros(d, d);
        for (w, e) in &rep.idempotents {
            m.add_scaled(&rep.psi[k].mul(e), &c[w[k]][w[k + 1]]);
        }
        out.psi[k] = m;
    }
    out
}
