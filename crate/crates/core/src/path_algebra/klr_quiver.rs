//! The cyclotomic KLR algebra `R^{Lambda_0}(n)` as a quiver with relations: one vertex per
//! residue word, loops `x_k` at every vertex and arrows `psi_k` between words differing by
//! the transposition of positions k, k+1.

use super::presentation::{Arrow, Path, Presentation, Quiver, Relation};
use crate::error::{Error, Result};
use crate::klr::KlrData;
use crate::poly::Poly;
use crate::rational::Q;
use crate::tableaux::word_to_string;
use num_traits::{One, Zero};
use std::collections::{BTreeSet, HashMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Gen {
    X(usize),
    Psi(usize),
}

struct Builder {
    n: usize,
    index: HashMap<Vec<usize>, usize>,
    words: Vec<Vec<usize>>,
    arrows: HashMap<(bool, usize, usize), usize>,
}

impl Builder {
    /// Path of the operator product `g_1 ... g_m e(nu)`.
    fn path(&self, gens: &[Gen], nu: &[usize]) -> Path {
        let mut cur = nu.to_vec();
        let mut arrows = Vec::with_capacity(gens.len());
        for g in gens.iter().rev() {
            let v = self.index[&cur];
            match *g {
                Gen::X(k) => arrows.push(self.arrows[&(false, k, v)]),
                Gen::Psi(k) => {
                    arrows.push(self.arrows[&(true, k, v)]);
                    cur.swap(k, k + 1);
                }
            }
        }
        arrows.reverse();
        Path { start: self.index[&cur], arrows }
    }

    /// Adds `p(x_{vars[0]}, x_{vars[1]}, ...) * suffix e(nu)` to `rel`.
    fn add_poly(&self, rel: &mut Relation, p: &Poly, vars: &[usize], prefix: &[Gen], nu: &[usize], scale: &Q) {
        for (exps, c) in p.terms() {
            let mut gens = prefix.to_vec();
            for (v, &e) in vars.iter().zip(exps) {
                gens.extend(std::iter::repeat_n(Gen::X(*v), e as usize));
            }
            rel.push((self.path(&gens, nu), c * scale));
        }
    }

    fn term(&self, rel: &mut Relation, gens: &[Gen], nu: &[usize], c: i64) {
        rel.push((self.path(gens, nu), Q::from_integer(c.into())));
    }
}

fn permutations_of(word: &[usize]) -> Vec<Vec<usize>> {
    let mut sorted = word.to_vec();
    sorted.sort();
    let mut out = BTreeSet::new();
    fn go(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
        if rest.is_empty() {
            out.insert(cur.clone());
            return;
        }
        let mut seen = BTreeSet::new();
        for i in 0..rest.len() {
            if !seen.insert(rest[i]) {
                continue;
            }
            let r = rest.remove(i);
            cur.push(r);
            go(rest, cur, out);
            cur.pop();
            rest.insert(i, r);
        }
    }
    go(&mut sorted, &mut Vec::new(), &mut out);
    out.into_iter().collect()
}

/// Presentation on the given set of residue words, which must be closed under transpositions.
fn presentation_on(data: &KlrData, n: usize, words: Vec<Vec<usize>>) -> Result<Presentation> {
    let index: HashMap<Vec<usize>, usize> = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
    let mut qarrows = Vec::new();
    let mut arrows = HashMap::new();
    // x arrows first so that normal forms read x...x psi...psi
    for (v, w) in words.iter().enumerate() {
        for k in 0..n {
            arrows.insert((false, k, v), qarrows.len());
            qarrows.push(Arrow { name: format!("x{}@{}", k + 1, word_to_string(w)), src: v, tgt: v });
        }
    }
    for (v, w) in words.iter().enumerate() {
        for k in 0..n.saturating_sub(1) {
            let mut s = w.clone();
            s.swap(k, k + 1);
            let sv = *index.get(&s).ok_or_else(|| Error::Invalid("word set is not closed under transpositions".into()))?;
            arrows.insert((true, k, v), qarrows.len());
            qarrows.push(Arrow { name: format!("psi{}@{}", k + 1, word_to_string(w)), src: sv, tgt: v });
        }
    }
    let quiver = Quiver { vertices: words.iter().map(|w| word_to_string(w)).collect(), arrows: qarrows };
    let b = Builder { n, index, words, arrows };
    let mut rels: Vec<Relation> = Vec::new();
    let one = Q::one();
    for nu in &b.words {
        let mut r = Relation::new();
        if nu.first() == Some(&0) {
            b.term(&mut r, &[Gen::X(0)], nu, 1);
        } else if !nu.is_empty() {
            b.term(&mut r, &[], nu, 1);
        }
        rels.push(r);
        for k in 0..b.n {
            for l in k + 1..b.n {
                let mut r = Relation::new();
                b.term(&mut r, &[Gen::X(k), Gen::X(l)], nu, 1);
                b.term(&mut r, &[Gen::X(l), Gen::X(k)], nu, -1);
                rels.push(r);
            }
        }
        for k in 0..b.n.saturating_sub(1) {
            for l in k + 2..b.n.saturating_sub(1) {
                let mut r = Relation::new();
                b.term(&mut r, &[Gen::Psi(k), Gen::Psi(l)], nu, 1);
                b.term(&mut r, &[Gen::Psi(l), Gen::Psi(k)], nu, -1);
                rels.push(r);
            }
            let (i, j) = (nu[k], nu[k + 1]);
            let mut r = Relation::new();
            b.term(&mut r, &[Gen::Psi(k), Gen::Psi(k)], nu, 1);
            b.add_poly(&mut r, data.q_poly(i, j), &[k, k + 1], &[], nu, &-one.clone());
            rels.push(r);
            for l in 0..b.n {
                let sl = if l == k { k + 1 } else if l == k + 1 { k } else { l };
                let mut r = Relation::new();
                b.term(&mut r, &[Gen::Psi(k), Gen::X(l)], nu, 1);
                b.term(&mut r, &[Gen::X(sl), Gen::Psi(k)], nu, -1);
                if i == j && l == k {
                    b.term(&mut r, &[], nu, 1);
                } else if i == j && l == k + 1 {
                    b.term(&mut r, &[], nu, -1);
                }
                rels.push(r);
            }
            if k + 2 < b.n {
                let mut r = Relation::new();
                b.term(&mut r, &[Gen::Psi(k + 1), Gen::Psi(k), Gen::Psi(k + 1)], nu, 1);
                b.term(&mut r, &[Gen::Psi(k), Gen::Psi(k + 1), Gen::Psi(k)], nu, -1);
                if nu[k] == nu[k + 2] {
                    let corr = data.braid_correction(nu[k], nu[k + 1]);
                    b.add_poly(&mut r, &corr, &[k, k + 1, k + 2], &[], nu, &-one.clone());
                }
                rels.push(r);
            }
        }
    }
    rels.retain(|r| r.iter().any(|(_, c)| !c.is_zero()));
    Presentation::new(quiver, rels)
}

/// `R^{Lambda_0}(n)` on all words in `I^n`.
pub fn klr_as_presentation(ell: usize, n: usize, lambda: Q) -> Result<Presentation> {
    let data = KlrData::new(ell, lambda)?;
    let mut words: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..n {
        words = words.into_iter().flat_map(|w| (0..=ell).map(move |r| [w.clone(), vec![r]].concat())).collect();
    }
    presentation_on(&data, n, words)
}

/// The block `R^{Lambda_0}(beta)` on the words of content `beta`.
pub fn klr_block_presentation(ell: usize, beta: &[i64], lambda: Q) -> Result<Presentation> {
    if beta.len() != ell + 1 || beta.iter().any(|&b| b < 0) {
        return Err(Error::Invalid(format!("beta must have {} nonnegative coordinates", ell + 1)));
    }
    let data = KlrData::new(ell, lambda)?;
    let word: Vec<usize> = beta.iter().enumerate().flat_map(|(i, &b)| std::iter::repeat_n(i, b as usize)).collect();
    presentation_on(&data, word.len(), permutations_of(&word))
}

/// Generator of a normalized KLR quiver algebra, read back from its name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KlrGen {
    Idempotent(Vec<usize>),
    X(usize, Vec<usize>),
    Psi(usize, Vec<usize>),
}

pub fn parse_generator(name: &str) -> Result<KlrGen> {
    let bad = || Error::Parse(format!("not a KLR generator name: {name}"));
    if let Some(w) = name.strip_prefix("e_") {
        return Ok(KlrGen::Idempotent(crate::tableaux::parse_word(w)?));
    }
    let (head, w) = name.split_once('@').ok_or_else(bad)?;
    let word = crate::tableaux::parse_word(w)?;
    if let Some(k) = head.strip_prefix("psi") {
        let k: usize = k.parse().map_err(|_| bad())?;
        return Ok(KlrGen::Psi(k - 1, word));
    }
    if let Some(k) = head.strip_prefix('x') {
        let k: usize = k.parse().map_err(|_| bad())?;
        return Ok(KlrGen::X(k - 1, word));
    }
    Err(bad())
}

/// A matrix representation as a module over a normalized KLR quiver algebra.
pub fn rep_to_module(alg: &super::FDAlgebra, rep: &crate::klr::MatrixRep) -> Result<crate::module::Module> {
    let mut gens = Vec::with_capacity(alg.gen_names.len());
    for name in &alg.gen_names {
        let m = match parse_generator(name)? {
            KlrGen::Idempotent(w) => rep.idempotent(&w),
            KlrGen::X(k, w) => rep.x.get(k).ok_or_else(|| Error::Invalid(format!("{name}: no x_{}", k + 1)))?.mul(&rep.idempotent(&w)),
            KlrGen::Psi(k, w) => {
                rep.psi.get(k).ok_or_else(|| Error::Invalid(format!("{name}: no psi_{}", k + 1)))?.mul(&rep.idempotent(&w))
            }
        };
        gens.push(m);
    }
    let m = crate::module::Module::new(rep.dim, gens);
    if !alg.is_module(&m) {
        return Err(Error::Invalid("the representation does not factor through the algebra".into()));
    }
    Ok(m)
}
