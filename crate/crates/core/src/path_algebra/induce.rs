//! Induction `A e ⊗_B M` along an algebra map `B -> e A e`.

use super::algebra::FDAlgebra;
use super::klr_quiver::{klr_block_presentation, parse_generator, KlrGen};
use super::normalize;
use crate::error::{Error, Result};
use crate::linalg::{Echelon, Matrix};
use crate::module::Module;
use crate::rational::Q;
use crate::tableaux::word_to_string;
use num_traits::Zero;

/// `A e ⊗_B M`, where `embed[g]` is the image in `A` of the `g`-th generator of `B`.
pub fn induce_along(big: &FDAlgebra, embed: &[Vec<Q>], e: &[Q], m: &Module) -> Result<Module> {
    if embed.len() != m.ngens() {
        return Err(Error::Invalid("embedding and module use different generator lists".into()));
    }
    let d = big.dim();
    let ae = big.right_mult(e).column_space();
    let r = ae.len();
    let ng = big.gens.len();
    if r == 0 || m.dim == 0 {
        return Ok(Module::zero(ng));
    }
    let w = Matrix::from_columns(d, &ae);
    let coords = |x: &[Q]| -> Result<Vec<Q>> {
        w.solve_vec(x).ok_or_else(|| Error::Invalid("element does not lie in A e".into()))
    };
    let dm = m.dim;
    let total = r * dm;
    // coordinates: (t, j) -> t * dm + j
    let mut rels = Echelon::new(total);
    for (t, wt) in ae.iter().enumerate() {
        for (g, img) in embed.iter().enumerate() {
            let lhs = coords(&big.mul(wt, img))?;
            for j in 0..dm {
                let mut v = vec![Q::zero(); total];
                for (s, c) in lhs.iter().enumerate() {
                    if !c.is_zero() {
                        v[s * dm + j] += c;
                    }
                }
                for (i, c) in m.gens[g].column(j).iter().enumerate() {
                    if !c.is_zero() {
                        v[t * dm + i] -= c;
                    }
                }
                rels.insert(v);
            }
        }
    }
    let mut gens = Vec::with_capacity(ng);
    for g in &big.gens {
        let mut a = Matrix::zeros(r, r);
        for (t, wt) in ae.iter().enumerate() {
            for (s, c) in coords(&big.mul(g, wt))?.into_iter().enumerate() {
                a[(s, t)] = c;
            }
        }
        let mut big_g = Matrix::zeros(total, total);
        for s in 0..r {
            for t in 0..r {
                if !a[(s, t)].is_zero() {
                    for j in 0..dm {
                        big_g[(s * dm + j, t * dm + j)] = a[(s, t)].clone();
                    }
                }
            }
        }
        gens.push(big_g);
    }
    let v = Module::new(total, gens);
    Ok(v.quotient(rels.basis())?.0)
}

/// Image in `big` of each generator of `small` under `e(nu) -> e(nu i)`, `x_k -> x_k`,
/// `psi_k -> psi_k`, together with the idempotent `sum_nu e(nu i)`.
pub fn klr_embedding(big: &FDAlgebra, small: &FDAlgebra, i: usize) -> Result<(Vec<Vec<Q>>, Vec<Q>)> {
    let d = big.dim();
    let ext = |w: &[usize]| word_to_string(&[w, &[i][..]].concat());
    let mut embed = Vec::with_capacity(small.gen_names.len());
    let mut e = vec![Q::zero(); d];
    for name in &small.gen_names {
        let target = match parse_generator(name)? {
            KlrGen::Idempotent(w) => format!("e_{}", ext(&w)),
            KlrGen::X(k, w) => format!("x{}@{}", k + 1, ext(&w)),
            KlrGen::Psi(k, w) => format!("psi{}@{}", k + 1, ext(&w)),
        };
        let img = match big.gen_index(&target) {
            Some(g) => big.gens[g].clone(),
            // generators through killed vertices vanish
            None => vec![Q::zero(); d],
        };
        if target.starts_with("e_") {
            for (a, b) in e.iter_mut().zip(&img) {
                *a += b;
            }
        }
        embed.push(img);
    }
    Ok((embed, e))
}

/// KLR blocks `R(beta)` and `R(beta + alpha_i)` as normalized quiver algebras.
pub fn klr_block_pair(ell: usize, beta: &[i64], i: usize, lambda: &Q) -> Result<(FDAlgebra, FDAlgebra)> {
    if i > ell {
        return Err(Error::Invalid(format!("residue {i} out of range")));
    }
    let small = normalize(&klr_block_presentation(ell, beta, lambda.clone())?)?;
    let mut beta2 = beta.to_vec();
    beta2[i] += 1;
    let big = normalize(&klr_block_presentation(ell, &beta2, lambda.clone())?)?;
    Ok((big, small))
}

/// `F_i M = R(beta + alpha_i) e(beta, i) ⊗_{R(beta)} M`.
pub fn induce(big: &FDAlgebra, small: &FDAlgebra, i: usize, m: &Module) -> Result<Module> {
    let (embed, e) = klr_embedding(big, small, i)?;
    induce_along(big, &embed, &e, m)
}
