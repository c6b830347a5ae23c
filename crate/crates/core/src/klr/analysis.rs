//! Structural analysis of matrix representations: restriction, irreducibility, radical layers,
//! duality and isomorphism.

use super::rep::{common_words, MatrixRep};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::module::{self, Module};
use crate::rational::Q;
use num_traits::{Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};

/// `E_i M = sum over nu ending in i of e(nu) M`, as a module for one fewer strand.
pub fn restrict_e(rep: &MatrixRep, i: usize) -> Result<MatrixRep> {
    if rep.n == 0 {
        return Err(Error::Invalid("cannot restrict a module for zero strands".into()));
    }
    let keep: Vec<usize> = (0..rep.dim)
        .filter(|&b| rep.idempotents.iter().any(|(w, e)| w[rep.n - 1] == i && !e[(b, b)].is_zero()))
        .collect();
    let sub = |m: &Matrix| m.submatrix(&keep, &keep);
    let mut idempotents = BTreeMap::new();
    for (w, e) in &rep.idempotents {
        if w[rep.n - 1] == i {
            idempotents.insert(w[..rep.n - 1].to_vec(), sub(e));
        }
    }
    Ok(MatrixRep {
        ell: rep.ell,
        n: rep.n - 1,
        lambda: rep.lambda.clone(),
        dim: keep.len(),
        labels: keep.iter().map(|&b| rep.labels[b].clone()).collect(),
        idempotents,
        x: rep.x[..rep.n - 1].iter().map(sub).collect(),
        psi: rep.psi[..rep.n.saturating_sub(2)].iter().map(sub).collect(),
    })
}

/// Largest k with `E_i^k M != 0`.
pub fn epsilon(rep: &MatrixRep, i: usize) -> Result<usize> {
    let mut k = 0;
    let mut cur = rep.clone();
    while cur.n > 0 {
        cur = restrict_e(&cur, i)?;
        if cur.dim == 0 {
            break;
        }
        k += 1;
    }
    Ok(k)
}

/// Basis of the unital matrix algebra generated by the representation.
pub fn algebra_closure(rep: &MatrixRep) -> Vec<Matrix> {
    let m = rep.to_module();
    module::matrix_closure(m.dim, &m.gens)
}

pub fn is_absolutely_irreducible(rep: &MatrixRep) -> bool {
    module::is_absolutely_irreducible(&rep.to_module())
}

fn pair(a: &MatrixRep, b: &MatrixRep) -> Result<(Module, Module)> {
    if (a.ell, a.n) != (b.ell, b.n) {
        return Err(Error::Invalid("representations of different algebras".into()));
    }
    let words = common_words(a, b);
    Ok((a.to_module_with(&words), b.to_module_with(&words)))
}

pub fn hom_dim(a: &MatrixRep, b: &MatrixRep) -> Result<usize> {
    let (ma, mb) = pair(a, b)?;
    Ok(module::hom_space(&ma, &mb).len())
}

pub fn isomorphic(a: &MatrixRep, b: &MatrixRep) -> Result<bool> {
    let (ma, mb) = pair(a, b)?;
    Ok(module::is_isomorphic(&ma, &mb))
}

pub fn dual_rep(rep: &MatrixRep) -> MatrixRep {
    rep.dual()
}

/// Multiplicities of the named simples in a module, from residue characters.
/// Returns None when the character is not a nonnegative integer combination.
pub fn composition_factors(rep: &MatrixRep, simples: &[(String, MatrixRep)]) -> Option<BTreeMap<String, usize>> {
    let mut words: BTreeSet<Vec<usize>> = rep.idempotents.keys().cloned().collect();
    for (_, s) in simples {
        words.extend(s.idempotents.keys().cloned());
    }
    let words: Vec<Vec<usize>> = words.into_iter().collect();
    let ch = |r: &MatrixRep| -> Vec<Q> {
        let c = r.character();
        words.iter().map(|w| Q::from_integer((*c.get(w).unwrap_or(&0) as i64).into())).collect()
    };
    let target = ch(rep);
    let cols: Vec<Vec<Q>> = simples.iter().map(|(_, s)| ch(s)).collect();
    let a = Matrix::from_columns(words.len(), &cols);
    let sol = a.solve_vec(&target)?;
    let mut out = BTreeMap::new();
    for ((name, _), m) in simples.iter().zip(&sol) {
        if !m.is_integer() || m.is_negative() {
            return None;
        }
        let k: usize = m.to_integer().try_into().ok()?;
        if k > 0 {
            out.insert(name.clone(), k);
        }
    }
    Some(out)
}

/// One radical layer: its dimension and composition factors (if identifiable).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layer {
    pub dim: usize,
    pub factors: Option<BTreeMap<String, usize>>,
}

/// Radical layers `J^k M / J^{k+1} M`, top first, with factors named from `simples`.
pub fn radical_layers(rep: &MatrixRep, simples: &[(String, MatrixRep)]) -> Result<Vec<Layer>> {
    let words = rep.support();
    let m = rep.to_module_with(&words);
    let layers = module::radical_layers(&m)?;
    layers
        .iter()
        .map(|l| {
            let r = MatrixRep::from_module(rep.ell, rep.n, rep.lambda.clone(), &words, l)?;
            Ok(Layer { dim: l.dim, factors: composition_factors(&r, simples) })
        })
        .collect()
}

/// Compact text form such as `[N0; N1; N0]` or `[N0+N1; N0]`.
pub fn layers_text(layers: &[Layer]) -> String {
    let parts: Vec<String> = layers
        .iter()
        .map(|l| match &l.factors {
            Some(f) => f
                .iter()
                .flat_map(|(n, &k)| std::iter::repeat_n(n.clone(), k))
                .collect::<Vec<_>>()
                .join("+"),
            None => format!("?{}", l.dim),
        })
        .collect();
    format!("[{}]", parts.join("; "))
}
