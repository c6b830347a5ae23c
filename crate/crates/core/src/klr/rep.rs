//! Matrix representations of cyclotomic KLR algebras and their JSON form.

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::module::Module;
use crate::rational::{fmt_q, parse_q, Q};
use crate::tableaux::{parse_word, word_to_string};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

/// Matrices for `e(nu)`, `x_1..x_n`, `psi_1..psi_{n-1}` acting on column vectors.
/// Only idempotents that act nonzero are stored; they are 0/1 diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixRep {
    pub ell: usize,
    pub n: usize,
    pub lambda: Q,
    pub dim: usize,
    pub labels: Vec<String>,
    pub idempotents: BTreeMap<Vec<usize>, Matrix>,
    pub x: Vec<Matrix>,
    pub psi: Vec<Matrix>,
}

impl MatrixRep {
    /// Representation with zero x and psi and the given residue word on each basis vector.
    pub fn with_weights(ell: usize, lambda: Q, words: &[Vec<usize>], labels: &[&str]) -> Self {
        let dim = words.len();
        let n = words.first().map_or(0, |w| w.len());
        let mut idempotents: BTreeMap<Vec<usize>, Matrix> = BTreeMap::new();
        for (b, w) in words.iter().enumerate() {
            assert_eq!(w.len(), n);
            idempotents.entry(w.clone()).or_insert_with(|| Matrix::zeros(dim, dim))[(b, b)] = Q::one();
        }
        let labels = if labels.len() == dim {
            labels.iter().map(|s| s.to_string()).collect()
        } else {
            (1..=dim).map(|i| format!("b{i}")).collect()
        };
        MatrixRep {
            ell,
            n,
            lambda,
            dim,
            labels,
            idempotents,
            x: vec![Matrix::zeros(dim, dim); n],
            psi: vec![Matrix::zeros(dim, dim); n.saturating_sub(1)],
        }
    }

    /// Sets `x_k` (k from 1) entry: `x_k b_col` has coefficient `c` on `b_row`.
    pub fn set_x(&mut self, k: usize, row: usize, col: usize, c: Q) {
        self.x[k - 1][(row, col)] = c;
    }

    pub fn set_psi(&mut self, k: usize, row: usize, col: usize, c: Q) {
        self.psi[k - 1][(row, col)] = c;
    }

    pub fn idempotent(&self, nu: &[usize]) -> Matrix {
        self.idempotents.get(nu).cloned().unwrap_or_else(|| Matrix::zeros(self.dim, self.dim))
    }

    pub fn support(&self) -> Vec<Vec<usize>> {
        self.idempotents.keys().cloned().collect()
    }

    /// Dimension of `e(nu) M` for each word in the support.
    pub fn character(&self) -> BTreeMap<Vec<usize>, usize> {
        self.idempotents.iter().map(|(w, e)| (w.clone(), e.trace().to_integer().try_into().unwrap_or(0))).collect()
    }

    /// Module over the generator list `[e(w) for w in words] ++ x ++ psi`.
    pub fn to_module_with(&self, words: &[Vec<usize>]) -> Module {
        let mut gens: Vec<Matrix> = words.iter().map(|w| self.idempotent(w)).collect();
        gens.extend(self.x.iter().cloned());
        gens.extend(self.psi.iter().cloned());
        Module::new(self.dim, gens)
    }

    pub fn to_module(&self) -> Module {
        self.to_module_with(&self.support())
    }

    /// Rebuilds a representation from a module over the generator list of [`Self::to_module_with`].
    /// The basis is changed so that idempotents become coordinate projections.
    pub fn from_module(ell: usize, n: usize, lambda: Q, words: &[Vec<usize>], m: &Module) -> Result<Self> {
        if m.ngens() != words.len() + n + n.saturating_sub(1) {
            return Err(Error::Invalid("generator count does not match".into()));
        }
        let mut cols = Vec::new();
        let mut word_of = Vec::new();
        for (i, w) in words.iter().enumerate() {
            for c in m.gens[i].column_space() {
                cols.push(c);
                word_of.push(w.clone());
            }
        }
        if cols.len() != m.dim {
            return Err(Error::Invalid("idempotents do not decompose the space".into()));
        }
        let p = Matrix::from_columns(m.dim, &cols);
        let mm = m.change_basis(&p)?;
        let mut rep = MatrixRep::with_weights(ell, lambda, &word_of, &[]);
        rep.n = n;
        for (i, w) in words.iter().enumerate() {
            let e = &mm.gens[i];
            let expected = rep.idempotent(w);
            if *e != expected {
                return Err(Error::Invalid("idempotent matrices are not complementary projections".into()));
            }
        }
        rep.x = mm.gens[words.len()..words.len() + n].to_vec();
        rep.psi = mm.gens[words.len() + n..].to_vec();
        Ok(rep)
    }

    pub fn direct_sum(&self, o: &MatrixRep) -> MatrixRep {
        assert_eq!((self.ell, self.n), (o.ell, o.n));
        let words: BTreeSet<Vec<usize>> = self.idempotents.keys().chain(o.idempotents.keys()).cloned().collect();
        let idempotents = words.into_iter().map(|w| {
            let m = self.idempotent(&w).direct_sum(&o.idempotent(&w));
            (w, m)
        });
        let mut labels = self.labels.clone();
        labels.extend(o.labels.iter().cloned());
        MatrixRep {
            ell: self.ell,
            n: self.n,
            lambda: self.lambda.clone(),
            dim: self.dim + o.dim,
            labels,
            idempotents: idempotents.collect(),
            x: self.x.iter().zip(&o.x).map(|(a, b)| a.direct_sum(b)).collect(),
            psi: self.psi.iter().zip(&o.psi).map(|(a, b)| a.direct_sum(b)).collect(),
        }
    }

    /// Restriction to the coordinate subspace spanned by the listed basis vectors
    /// (must be invariant; checked).
    pub fn coordinate_submodule(&self, keep: &[usize]) -> Result<MatrixRep> {
        let sub = |m: &Matrix| m.submatrix(keep, keep);
        let all: Vec<usize> = (0..self.dim).collect();
        let out: Vec<usize> = all.iter().copied().filter(|i| !keep.contains(i)).collect();
        for m in self.x.iter().chain(&self.psi) {
            if !m.submatrix(&out, keep).is_zero() {
                return Err(Error::Invalid("coordinate subspace is not invariant".into()));
            }
        }
        Ok(self.map_matrices(sub, keep.iter().map(|&i| self.labels[i].clone()).collect(), keep.len()))
    }

    /// Quotient by the coordinate subspace spanned by the listed basis vectors.
    pub fn coordinate_quotient(&self, kill: &[usize]) -> Result<MatrixRep> {
        let keep: Vec<usize> = (0..self.dim).filter(|i| !kill.contains(i)).collect();
        for m in self.x.iter().chain(&self.psi) {
            if !m.submatrix(&keep, kill).is_zero() {
                return Err(Error::Invalid("coordinate subspace is not invariant".into()));
            }
        }
        let sub = |m: &Matrix| m.submatrix(&keep, &keep);
        Ok(self.map_matrices(sub, keep.iter().map(|&i| self.labels[i].clone()).collect(), keep.len()))
    }

    fn map_matrices(&self, f: impl Fn(&Matrix) -> Matrix, labels: Vec<String>, dim: usize) -> MatrixRep {
        let idempotents =
            self.idempotents.iter().map(|(w, m)| (w.clone(), f(m))).filter(|(_, m)| !m.is_zero()).collect();
        MatrixRep {
            ell: self.ell,
            n: self.n,
            lambda: self.lambda.clone(),
            dim,
            labels,
            idempotents,
            x: self.x.iter().map(&f).collect(),
            psi: self.psi.iter().map(&f).collect(),
        }
    }

    /// Transpose of every matrix: the dual under the anti-involution fixing all generators.
    pub fn dual(&self) -> MatrixRep {
        let mut d = self.map_matrices(|m| m.transpose(), self.labels.iter().map(|l| format!("{l}*")).collect(), self.dim);
        d.idempotents = self.idempotents.clone();
        d
    }

    pub fn to_json(&self) -> RepJson {
        let flat = |m: &Matrix| m.data().iter().map(fmt_q).collect::<Vec<_>>();
        RepJson {
            ell: self.ell,
            n: self.n,
            lambda: fmt_q(&self.lambda),
            dim: self.dim,
            basis: Some(self.labels.clone()),
            idempotents: self
                .idempotents
                .iter()
                .map(|(w, m)| {
                    let bits = (0..self.dim).map(|i| if m[(i, i)].is_zero() { 0 } else { 1 }).collect();
                    (word_to_string(w), bits)
                })
                .collect(),
            x: self.x.iter().map(flat).collect(),
            psi: self.psi.iter().map(flat).collect(),
        }
    }

    pub fn from_json(j: &RepJson) -> Result<Self> {
        let d = j.dim;
        let mat = |v: &Vec<String>, what: &str| -> Result<Matrix> {
            if v.len() != d * d {
                return Err(Error::Invalid(format!("{what} has {} entries, expected {}", v.len(), d * d)));
            }
            Ok(Matrix::from_flat(d, d, v.iter().map(|s| parse_q(s)).collect::<Result<Vec<Q>>>()?))
        };
        if j.x.len() != j.n || j.psi.len() != j.n.saturating_sub(1) {
            return Err(Error::Invalid("need n matrices x and n-1 matrices psi".into()));
        }
        let mut idempotents = BTreeMap::new();
        for (w, bits) in &j.idempotents {
            let nu = parse_word(w)?;
            if nu.len() != j.n || nu.iter().any(|&r| r > j.ell) || bits.len() != d {
                return Err(Error::Invalid(format!("bad idempotent entry {w}")));
            }
            let mut m = Matrix::zeros(d, d);
            for (i, &b) in bits.iter().enumerate() {
                match b {
                    0 => {}
                    1 => m[(i, i)] = Q::one(),
                    _ => return Err(Error::Invalid("idempotent diagonal entries must be 0 or 1".into())),
                }
            }
            if !m.is_zero() {
                idempotents.insert(nu, m);
            }
        }
        Ok(MatrixRep {
            ell: j.ell,
            n: j.n,
            lambda: parse_q(&j.lambda)?,
            dim: d,
            labels: j.basis.clone().filter(|b| b.len() == d).unwrap_or_else(|| (1..=d).map(|i| format!("b{i}")).collect()),
            idempotents,
            x: j.x.iter().map(|m| mat(m, "x")).collect::<Result<_>>()?,
            psi: j.psi.iter().map(|m| mat(m, "psi")).collect::<Result<_>>()?,
        })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RepJson {
    pub ell: usize,
    pub n: usize,
    pub lambda: String,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    pub idempotents: BTreeMap<String, Vec<u8>>,
    pub x: Vec<Vec<String>>,
    pub psi: Vec<Vec<String>>,
}

/// Union of supports, so two representations can be compared as modules over one generator list.
pub fn common_words(a: &MatrixRep, b: &MatrixRep) -> Vec<Vec<usize>> {
    let s: BTreeSet<Vec<usize>> = a.idempotents.keys().chain(b.idempotents.keys()).cloned().collect();
    s.into_iter().collect()
}

pub fn is_zero_rep(r: &MatrixRep) -> bool {
    r.dim == 0 || r.idempotents.values().all(|m| m.is_zero())
}
