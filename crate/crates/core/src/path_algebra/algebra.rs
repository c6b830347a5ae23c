//! Finite-dimensional algebras with a basis graded by pairs of vertices and sparse structure
//! constants.

use super::groebner::{complete, Rewriter, Word};
use super::presentation::{Path, Presentation};
use crate::error::{Error, Result};
use crate::linalg::{unit, vec_add_scaled, Echelon, Matrix};
use crate::module::Module;
use crate::rational::{fmt_q, Q};
use num_traits::{One, Zero};
use std::collections::HashMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElem {
    /// `e_left b e_right = b`.
    pub left: usize,
    pub right: usize,
    pub label: String,
    pub path: Option<Path>,
}

#[derive(Clone, Debug)]
pub struct FDAlgebra {
    pub vertices: Vec<String>,
    pub basis: Vec<BasisElem>,
    table: Vec<Vec<(usize, Q)>>,
    /// Generator names; the first `vertices.len()` are the vertex idempotents.
    pub gen_names: Vec<String>,
    pub gens: Vec<Vec<Q>>,
    /// `(source, target)` of each non-idempotent generator.
    pub gen_ends: Vec<(usize, usize)>,
    spanning: Vec<Vec<usize>>,
    to_spanning: Matrix,
    rewriter: Option<(Rewriter, Vec<Option<usize>>)>,
    word_index: HashMap<Path, usize>,
}

pub const DEFAULT_MAX_LEN: usize = 40;

/// Horizon from `WORKBENCH_MAXLEN`, else the default.
pub fn max_len_from_env() -> usize {
    std::env::var("WORKBENCH_MAXLEN").ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_MAX_LEN)
}

/// Completes the relations and builds the algebra on the normal words.
pub fn normalize(pres: &Presentation) -> Result<FDAlgebra> {
    normalize_with(pres, max_len_from_env())
}

pub fn normalize_with(pres: &Presentation, max_len: usize) -> Result<FDAlgebra> {
    let rw = complete(pres, max_len)?;
    FDAlgebra::from_rewriter(rw)
}

impl FDAlgebra {
    fn from_rewriter(rw: Rewriter) -> Result<Self> {
        let q = rw.quiver.clone();
        let mut live = vec![None; q.vertices.len()];
        let mut vertices = Vec::new();
        for v in 0..q.vertices.len() {
            if !rw.is_dead(v) {
                live[v] = Some(vertices.len());
                vertices.push(q.vertices[v].clone());
            }
        }
        let words = rw.normal_words()?;
        let mut word_index = HashMap::new();
        let basis: Vec<BasisElem> = words
            .iter()
            .enumerate()
            .map(|(k, p)| {
                word_index.insert(p.clone(), k);
                BasisElem {
                    left: live[p.start].unwrap(),
                    right: live[q.end(p)].unwrap(),
                    label: q.path_name(p),
                    path: Some(p.clone()),
                }
            })
            .collect();
        let d = basis.len();
        let coords = |poly: &super::groebner::Poly, index: &HashMap<Path, usize>| -> Vec<(usize, Q)> {
            let mut v: Vec<(usize, Q)> = poly.iter().map(|(w, c)| (index[&w.to_path()], c.clone())).collect();
            v.sort_by_key(|(i, _)| *i);
            v
        };
        let mut table = vec![Vec::new(); d * d];
        for (i, a) in words.iter().enumerate() {
            for (j, b) in words.iter().enumerate() {
                if q.end(a) != b.start {
                    continue;
                }
                let mut arrows = a.arrows.clone();
                arrows.extend_from_slice(&b.arrows);
                let p = Path { start: a.start, arrows };
                table[i * d + j] = coords(&rw.reduce_path(&p), &word_index);
            }
        }
        let nv = vertices.len();
        let mut gen_names: Vec<String> = vertices.iter().map(|v| format!("e_{v}")).collect();
        let mut gens: Vec<Vec<Q>> = (0..q.vertices.len())
            .filter(|&v| live[v].is_some())
            .map(|v| unit(d, word_index[&Path::vertex(v)]))
            .collect();
        let mut gen_ends = Vec::new();
        for (ai, a) in q.arrows.iter().enumerate() {
            let (Some(s), Some(t)) = (live[a.src], live[a.tgt]) else { continue };
            gen_names.push(a.name.clone());
            let mut v = vec![Q::zero(); d];
            for (k, c) in coords(&rw.reduce_path(&Path { start: a.src, arrows: vec![ai] }), &word_index) {
                v[k] = c;
            }
            gens.push(v);
            gen_ends.push((s, t));
        }
        debug_assert_eq!(gens.len(), nv + gen_ends.len());
        let mut alg = FDAlgebra {
            vertices,
            basis,
            table,
            gen_names,
            gens,
            gen_ends,
            spanning: Vec::new(),
            to_spanning: Matrix::zeros(0, 0),
            rewriter: Some((rw, live)),
            word_index,
        };
        alg.compute_spanning()?;
        Ok(alg)
    }

    /// Algebra from explicit structure constants; `gens` must generate it.
    pub fn from_table(
        vertices: Vec<String>,
        basis: Vec<BasisElem>,
        table: Vec<Vec<(usize, Q)>>,
        gen_names: Vec<String>,
        gens: Vec<Vec<Q>>,
        gen_ends: Vec<(usize, usize)>,
    ) -> Result<Self> {
        let d = basis.len();
        if table.len() != d * d || gens.len() != vertices.len() + gen_ends.len() || gen_names.len() != gens.len() {
            return Err(Error::Invalid("inconsistent algebra data".into()));
        }
        let mut alg = FDAlgebra {
            vertices,
            basis,
            table,
            gen_names,
            gens,
            gen_ends,
            spanning: Vec::new(),
            to_spanning: Matrix::zeros(0, 0),
            rewriter: None,
            word_index: HashMap::new(),
        };
        alg.compute_spanning()?;
        Ok(alg)
    }

    /// Finds generator words whose products span the algebra.
    fn compute_spanning(&mut self) -> Result<()> {
        let d = self.dim();
        let nv = self.vertices.len();
        let mut e = Echelon::new(d);
        let mut words = Vec::new();
        let mut queue = Vec::new();
        for v in 0..nv {
            if e.insert(self.gens[v].clone()) {
                words.push(vec![v]);
                queue.push((vec![v], self.gens[v].clone()));
            }
        }
        let mut head = 0;
        while head < queue.len() {
            let (w, y) = queue[head].clone();
            head += 1;
            for g in nv..self.gens.len() {
                let p = self.mul(&self.gens[g], &y);
                if e.insert(p.clone()) {
                    let mut w2 = vec![g];
                    w2.extend_from_slice(&w);
                    words.push(w2.clone());
                    queue.push((w2, p));
                }
            }
        }
        if e.dim() != d {
            return Err(Error::Invalid("generators do not generate the algebra".into()));
        }
        let s = Matrix::from_columns(d, e.basis());
        self.to_spanning = s.inverse().expect("spanning set is a basis");
        self.spanning = words;
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn nvertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn narrows(&self) -> usize {
        self.gen_ends.len()
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.gen_names.iter().position(|v| v == name)
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Q)] {
        &self.table[i * self.dim() + j]
    }

    pub fn mul(&self, a: &[Q], b: &[Q]) -> Vec<Q> {
        let d = self.dim();
        let mut out = vec![Q::zero(); d];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in &self.table[i * d + j] {
                    out[*k] += &xy * c;
                }
            }
        }
        out
    }

    pub fn one(&self) -> Vec<Q> {
        let mut o = vec![Q::zero(); self.dim()];
        for v in 0..self.nvertices() {
            vec_add_scaled(&mut o, &self.gens[v], &Q::one());
        }
        o
    }

    pub fn idempotent(&self, v: usize) -> &[Q] {
        &self.gens[v]
    }

    pub fn arrow(&self, a: usize) -> &[Q] {
        &self.gens[self.nvertices() + a]
    }

    pub fn arrow_name(&self, a: usize) -> &str {
        &self.gen_names[self.nvertices() + a]
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.gen_index(name).filter(|&g| g >= self.nvertices()).map(|g| g - self.nvertices())
    }

    /// Element given by a product of named generators (arrows or `e_v`).
    pub fn product_of(&self, names: &[&str]) -> Result<Vec<Q>> {
        let mut x = self.one();
        for n in names {
            let g = self.gen_index(n).ok_or_else(|| Error::Invalid(format!("unknown generator {n}")))?;
            x = self.mul(&x, &self.gens[g]);
        }
        Ok(x)
    }

    /// Normal form of a path of the original quiver.
    pub fn path_element(&self, p: &Path) -> Result<Vec<Q>> {
        let (rw, _) = self.rewriter.as_ref().ok_or_else(|| Error::Unsupported("algebra has no path presentation".into()))?;
        let mut v = vec![Q::zero(); self.dim()];
        for (w, c) in rw.reduce_path(p) {
            v[self.word_index[&Word::to_path(&w)]] = c;
        }
        Ok(v)
    }

    pub fn basis_index_of_path(&self, p: &Path) -> Option<usize> {
        self.word_index.get(p).copied()
    }

    /// Index of the vertex of the original quiver in this algebra, if it survived.
    pub fn live_vertex(&self, original: usize) -> Option<usize> {
        self.rewriter.as_ref().and_then(|(_, live)| live.get(original).copied().flatten())
    }

    pub fn rewriter(&self) -> Option<&Rewriter> {
        self.rewriter.as_ref().map(|(r, _)| r)
    }

    /// `dim e_i A e_j` as a matrix indexed by `(i, j)`.
    pub fn cartan_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.nvertices();
        let mut c = vec![vec![0; n]; n];
        for b in &self.basis {
            c[b.left][b.right] += 1;
        }
        c
    }

    /// Matrix of `y -> x y`.
    pub fn left_mult(&self, x: &[Q]) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::zeros(d, d);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..d {
                for (k, c) in &self.table[i * d + j] {
                    m[(*k, j)] += xi * c;
                }
            }
        }
        m
    }

    /// Matrix of `y -> y x`.
    pub fn right_mult(&self, x: &[Q]) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::zeros(d, d);
        for (j, xj) in x.iter().enumerate() {
            if xj.is_zero() {
                continue;
            }
            for i in 0..d {
                for (k, c) in &self.table[i * d + j] {
                    m[(*k, i)] += xj * c;
                }
            }
        }
        m
    }

    /// Left regular module in the generator convention of this algebra.
    pub fn regular_module(&self) -> Module {
        Module::new(self.dim(), self.gens.iter().map(|g| self.left_mult(g)).collect())
    }

    /// Basis indices of `A e_v`.
    pub fn projective_support(&self, v: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&k| self.basis[k].right == v).collect()
    }

    /// `P_v = A e_v` as a module, in the basis of normal words ending at `v`.
    pub fn projective(&self, v: usize) -> Module {
        let keep = self.projective_support(v);
        Module::new(keep.len(), self.gens.iter().map(|g| self.left_mult(g).submatrix(&keep, &keep)).collect())
    }

    /// Matrix of an arbitrary algebra element on a module given by generator matrices.
    pub fn act(&self, m: &Module, x: &[Q]) -> Matrix {
        let mut out = Matrix::zeros(m.dim, m.dim);
        let words: Vec<Matrix> = self.spanning.iter().map(|w| self.word_matrix(m, w)).collect();
        let coef = self.to_spanning.mul_vec(x);
        for (wm, c) in words.iter().zip(&coef) {
            if !c.is_zero() {
                out.add_scaled(wm, c);
            }
        }
        out
    }

    /// Action matrices of all basis elements.
    pub fn basis_action(&self, m: &Module) -> Vec<Matrix> {
        let words: Vec<Matrix> = self.spanning.iter().map(|w| self.word_matrix(m, w)).collect();
        (0..self.dim())
            .map(|k| {
                let mut out = Matrix::zeros(m.dim, m.dim);
                for (s, wm) in words.iter().enumerate() {
                    let c = &self.to_spanning[(s, k)];
                    if !c.is_zero() {
                        out.add_scaled(wm, c);
                    }
                }
                out
            })
            .collect()
    }

    fn word_matrix(&self, m: &Module, w: &[usize]) -> Matrix {
        let mut acc = Matrix::identity(m.dim);
        for &g in w {
            acc = acc.mul(&m.gens[g]);
        }
        acc
    }

    /// Checks that a module satisfies all defining relations of the algebra: the generator
    /// action must factor through the structure constants.
    pub fn is_module(&self, m: &Module) -> bool {
        if m.ngens() != self.gens.len() {
            return false;
        }
        let acts = self.basis_action(m);
        let act = |x: &[Q]| {
            let mut out = Matrix::zeros(m.dim, m.dim);
            for (k, c) in x.iter().enumerate() {
                if !c.is_zero() {
                    out.add_scaled(&acts[k], c);
                }
            }
            out
        };
        let mut id = Matrix::zeros(m.dim, m.dim);
        for v in 0..self.nvertices() {
            id.add_scaled(&m.gens[v], &Q::one());
        }
        if id != Matrix::identity(m.dim) {
            return false;
        }
        for (g, gm) in self.gens.iter().zip(&m.gens) {
            if act(g) != *gm {
                return false;
            }
        }
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                let mut prod = vec![Q::zero(); d];
                for (k, c) in &self.table[i * d + j] {
                    prod[*k] = c.clone();
                }
                if acts[i].mul(&acts[j]) != act(&prod) {
                    return false;
                }
            }
        }
        true
    }

    /// The opposite algebra, with the same generators (arrows reversed).
    pub fn opposite(&self) -> FDAlgebra {
        let d = self.dim();
        let mut table = vec![Vec::new(); d * d];
        for i in 0..d {
            for j in 0..d {
                table[i * d + j] = self.table[j * d + i].clone();
            }
        }
        let mut op = FDAlgebra {
            vertices: self.vertices.clone(),
            basis: self
                .basis
                .iter()
                .map(|b| BasisElem { left: b.right, right: b.left, label: b.label.clone(), path: None })
                .collect(),
            table,
            gen_names: self.gen_names.clone(),
            gens: self.gens.clone(),
            gen_ends: self.gen_ends.iter().map(|&(s, t)| (t, s)).collect(),
            spanning: Vec::new(),
            to_spanning: Matrix::zeros(0, 0),
            rewriter: None,
            word_index: HashMap::new(),
        };
        op.compute_spanning().expect("the opposite is generated by the same elements");
        op
    }

    /// Readable linear combination of basis labels.
    pub fn element_text(&self, x: &[Q]) -> String {
        let parts: Vec<String> = x
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let l = &self.basis[k].label;
                if c.is_one() {
                    l.clone()
                } else if *c == -Q::one() {
                    format!("-{l}")
                } else {
                    format!("{}*{l}", fmt_q(c))
                }
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ").replace("+ -", "- ")
        }
    }

    /// Checks associativity on all basis triples.
    pub fn is_associative(&self) -> bool {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                let ij = self.mul(&unit(d, i), &unit(d, j));
                for k in 0..d {
                    let l = self.mul(&ij, &unit(d, k));
                    let r = self.mul(&unit(d, i), &self.mul(&unit(d, j), &unit(d, k)));
                    if l != r {
                        return false;
                    }
                }
            }
        }
        true
    }
}
