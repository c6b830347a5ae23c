//! Finite-dimensional modules given by the matrices of a fixed list of generators.

use crate::error::{Error, Result};
use crate::linalg::{vec_is_zero, Echelon, Matrix};
use crate::rational::{q, Q};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Module {
    pub dim: usize,
    pub gens: Vec<Matrix>,
}

impl Module {
    pub fn new(dim: usize, gens: Vec<Matrix>) -> Self {
        for g in &gens {
            assert!(g.rows() == dim && g.cols() == dim, "generator matrix has wrong size");
        }
        Module { dim, gens }
    }

    pub fn zero(ngens: usize) -> Self {
        Module { dim: 0, gens: vec![Matrix::zeros(0, 0); ngens] }
    }

    pub fn ngens(&self) -> usize {
        self.gens.len()
    }

    pub fn direct_sum(&self, o: &Module) -> Module {
        assert_eq!(self.ngens(), o.ngens());
        Module { dim: self.dim + o.dim, gens: self.gens.iter().zip(&o.gens).map(|(a, b)| a.direct_sum(b)).collect() }
    }

    pub fn is_invariant(&self, basis: &[Vec<Q>]) -> bool {
        let e = Echelon::from_vectors(self.dim, basis.iter().cloned());
        basis.iter().all(|v| self.gens.iter().all(|g| e.contains(&g.mul_vec(v))))
    }

    /// Smallest submodule containing `vs`, as a basis.
    pub fn generated(&self, vs: &[Vec<Q>]) -> Vec<Vec<Q>> {
        let mut e = Echelon::new(self.dim);
        let mut queue: Vec<Vec<Q>> = Vec::new();
        for v in vs {
            if e.insert(v.clone()) {
                queue.push(v.clone());
            }
        }
        while let Some(v) = queue.pop() {
            for g in &self.gens {
                let w = g.mul_vec(&v);
                if e.insert(w.clone()) {
                    queue.push(w);
                }
            }
        }
        e.basis().to_vec()
    }

    /// Action restricted to an invariant subspace with the given basis.
    pub fn submodule(&self, basis: &[Vec<Q>]) -> Result<Module> {
        let k = basis.len();
        if k == 0 {
            return Ok(Module::zero(self.ngens()));
        }
        let b = Matrix::from_columns(self.dim, basis);
        let mut gens = Vec::with_capacity(self.ngens());
        for g in &self.gens {
            let x = b.solve(&g.mul(&b)).ok_or_else(|| Error::Invalid("subspace is not invariant".into()))?;
            gens.push(x);
        }
        Ok(Module { dim: k, gens })
    }

    /// Quotient by an invariant subspace, with the projection onto quotient coordinates.
    pub fn quotient(&self, sub: &[Vec<Q>]) -> Result<(Module, Matrix)> {
        let e = Echelon::from_vectors(self.dim, sub.iter().cloned());
        if !sub.iter().all(|v| self.gens.iter().all(|g| e.contains(&g.mul_vec(v)))) {
            return Err(Error::Invalid("subspace is not invariant".into()));
        }
        let sub = e.basis().to_vec();
        let comp = e.complement();
        let k = sub.len();
        let qd = comp.len();
        let mut all = sub.clone();
        all.extend(comp.iter().cloned());
        let t = Matrix::from_columns(self.dim, &all);
        let tinv = t.inverse().expect("basis completion is invertible");
        let rows: Vec<usize> = (k..self.dim).collect();
        let cols: Vec<usize> = (0..self.dim).collect();
        let proj = tinv.submatrix(&rows, &cols);
        let c = Matrix::from_columns(self.dim, &comp);
        let gens = self.gens.iter().map(|g| proj.mul(&g.mul(&c))).collect();
        Ok((Module { dim: qd, gens }, proj))
    }

    /// Transposed action, the dual under the anti-involution fixing every generator.
    pub fn transpose_dual(&self) -> Module {
        Module { dim: self.dim, gens: self.gens.iter().map(|g| g.transpose()).collect() }
    }

    /// Re-expresses the action in a new basis given by the columns of `p`.
    pub fn change_basis(&self, p: &Matrix) -> Result<Module> {
        let inv = p.inverse().ok_or_else(|| Error::Invalid("change of basis is singular".into()))?;
        Ok(Module { dim: self.dim, gens: self.gens.iter().map(|g| inv.mul(&g.mul(p))).collect() })
    }
}

/// Basis of `Hom(m, n)`: matrices F (n.dim x m.dim) with `F m_g = n_g F`.
pub fn hom_space(m: &Module, n: &Module) -> Vec<Matrix> {
    assert_eq!(m.ngens(), n.ngens(), "modules over different generator lists");
    let (dm, dn) = (m.dim, n.dim);
    if dm == 0 || dn == 0 {
        return Vec::new();
    }
    let mut basis: Vec<Matrix> = Vec::with_capacity(dm * dn);
    for i in 0..dn {
        for j in 0..dm {
            let mut f = Matrix::zeros(dn, dm);
            f[(i, j)] = Q::one();
            basis.push(f);
        }
    }
    let mut order: Vec<usize> = (0..m.ngens()).collect();
    order.sort_by_key(|&g| std::cmp::Reverse(is_diagonal(&m.gens[g]) && is_diagonal(&n.gens[g])));
    for g in order {
        if basis.is_empty() {
            break;
        }
        let (mg, ng) = (&m.gens[g], &n.gens[g]);
        let residuals: Vec<Vec<Q>> =
            basis.iter().map(|f| f.mul(mg).sub(&ng.mul(f)).data().to_vec()).collect();
        if residuals.iter().all(|r| vec_is_zero(r)) {
            continue;
        }
        let sys = Matrix::from_columns(dm * dn, &residuals);
        let ker = sys.nullspace();
        basis = ker
            .iter()
            .map(|c| {
                let mut f = Matrix::zeros(dn, dm);
                for (t, coef) in c.iter().enumerate() {
                    f.add_scaled(&basis[t], coef);
                }
                f
            })
            .collect();
    }
    basis
}

fn is_diagonal(m: &Matrix) -> bool {
    (0..m.rows()).all(|i| (0..m.cols()).all(|j| i == j || m[(i, j)].is_zero()))
}

/// Some point `t` with `det(sum t_i b_i) != 0`, if the linear span contains an invertible matrix.
pub fn generic_invertible(basis: &[Matrix], seed: u64) -> Option<Matrix> {
    let d = basis.first()?.rows();
    if d == 0 {
        return Some(Matrix::zeros(0, 0));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let combo = |t: &[i64]| {
        let mut s = Matrix::zeros(d, d);
        for (b, &c) in basis.iter().zip(t) {
            s.add_scaled(b, &q(c));
        }
        s
    };
    for _ in 0..4 {
        let t: Vec<i64> = (0..basis.len()).map(|_| rng.gen_range(-1_000_000..=1_000_000)).collect();
        let s = combo(&t);
        if !s.det().is_zero() {
            return Some(s);
        }
    }
    let k = basis.len() as u32;
    let pts = (d as u64 + 1).checked_pow(k);
    if let Some(total) = pts.filter(|&p| p <= 20_000) {
        let mut t = vec![0i64; basis.len()];
        for mut idx in 0..total {
            for c in t.iter_mut() {
                *c = (idx % (d as u64 + 1)) as i64;
                idx /= d as u64 + 1;
            }
            let s = combo(&t);
            if !s.det().is_zero() {
                return Some(s);
            }
        }
    }
    None
}

/// Isomorphism test; returns an explicit isomorphism when one exists.
pub fn isomorphism(m: &Module, n: &Module) -> Option<Matrix> {
    if m.dim != n.dim || m.ngens() != n.ngens() {
        return None;
    }
    if m.dim == 0 {
        return Some(Matrix::zeros(0, 0));
    }
    let h = hom_space(m, n);
    generic_invertible(&h, 0x5eed)
}

pub fn is_isomorphic(m: &Module, n: &Module) -> bool {
    isomorphism(m, n).is_some()
}

/// Basis (as matrices) of the unital algebra generated by `gens`.
pub fn matrix_closure(dim: usize, gens: &[Matrix]) -> Vec<Matrix> {
    let mut e = Echelon::new(dim * dim);
    let mut basis = Vec::new();
    let id = Matrix::identity(dim);
    e.insert(id.data().to_vec());
    basis.push(id.clone());
    let mut queue = vec![id];
    while let Some(b) = queue.pop() {
        for g in gens {
            let p = g.mul(&b);
            if e.insert(p.data().to_vec()) {
                basis.push(p.clone());
                queue.push(p);
            }
        }
    }
    basis
}

/// Jacobson radical of a matrix algebra given by a basis, via the trace form of the natural
/// representation. Errors if the result is not nilpotent.
pub fn matrix_algebra_radical(dim: usize, basis: &[Matrix]) -> Result<Vec<Matrix>> {
    let m = basis.len();
    let mut gram = Matrix::zeros(m, m);
    for i in 0..m {
        for j in i..m {
            let t = basis[i].mul(&basis[j]).trace();
            gram[(i, j)] = t.clone();
            gram[(j, i)] = t;
        }
    }
    let rad: Vec<Matrix> = gram
        .nullspace()
        .iter()
        .map(|c| {
            let mut s = Matrix::zeros(dim, dim);
            for (b, x) in basis.iter().zip(c) {
                s.add_scaled(b, x);
            }
            s
        })
        .collect();
    if rad.iter().any(|r| !r.is_nilpotent()) {
        return Err(Error::NotNilpotent);
    }
    Ok(rad)
}

/// Span of `{r v}` for `r` in `ops`, `v` in `vs`.
pub fn apply_span(dim: usize, ops: &[Matrix], vs: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let mut e = Echelon::new(dim);
    for r in ops {
        for v in vs {
            e.insert(r.mul_vec(v));
        }
    }
    e.basis().to_vec()
}

/// Radical filtration `M ⊃ JM ⊃ J^2 M ⊃ ... ⊃ 0`, as subspace bases.
pub fn radical_filtration(m: &Module) -> Result<Vec<Vec<Vec<Q>>>> {
    let closure = matrix_closure(m.dim, &m.gens);
    let rad = matrix_algebra_radical(m.dim, &closure)?;
    let mut cur: Vec<Vec<Q>> = (0..m.dim).map(|i| crate::linalg::unit(m.dim, i)).collect();
    let mut out = vec![cur.clone()];
    while !cur.is_empty() {
        let next = apply_span(m.dim, &rad, &cur);
        if next.len() == cur.len() {
            return Err(Error::NotNilpotent);
        }
        cur = next;
        out.push(cur.clone());
    }
    Ok(out)
}

/// Radical layers `J^k M / J^{k+1} M`, top first.
pub fn radical_layers(m: &Module) -> Result<Vec<Module>> {
    let filt = radical_filtration(m)?;
    let mut layers = Vec::new();
    for k in 0..filt.len() - 1 {
        let sub = m.submodule(&filt[k])?;
        let inner: Vec<Vec<Q>> = {
            let b = Matrix::from_columns(m.dim, &filt[k]);
            filt[k + 1].iter().map(|v| b.solve_vec(v).expect("nested filtration")).collect()
        };
        layers.push(sub.quotient(&inner)?.0);
    }
    Ok(layers)
}

/// Socle: vectors killed by the radical of the acting algebra.
pub fn socle(m: &Module) -> Result<Vec<Vec<Q>>> {
    let closure = matrix_closure(m.dim, &m.gens);
    let rad = matrix_algebra_radical(m.dim, &closure)?;
    if rad.is_empty() {
        return Ok((0..m.dim).map(|i| crate::linalg::unit(m.dim, i)).collect());
    }
    let mut stacked = Matrix::zeros(0, m.dim);
    for r in &rad {
        stacked = stacked.vcat(r);
    }
    Ok(stacked.nullspace())
}

/// Burnside test: the generators span the full matrix algebra.
pub fn is_absolutely_irreducible(m: &Module) -> bool {
    m.dim > 0 && matrix_closure(m.dim, &m.gens).len() == m.dim * m.dim
}

/// Endomorphism ring is local with residue field the ground field.
pub fn has_local_endomorphisms(m: &Module) -> Result<bool> {
    if m.dim == 0 {
        return Ok(false);
    }
    let end = hom_space(m, m);
    let rad = matrix_algebra_radical(m.dim, &end)?;
    Ok(end.len() - rad.len() == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn jordan(n: usize) -> Module {
        let mut x = Matrix::zeros(n, n);
        for i in 0..n - 1 {
            x[(i, i + 1)] = Q::one();
        }
        Module::new(n, vec![x])
    }

    #[test]
    fn hom_of_jordan_blocks() {
        assert_eq!(hom_space(&jordan(3), &jordan(3)).len(), 3);
        assert_eq!(hom_space(&jordan(2), &jordan(3)).len(), 2);
    }

    #[test]
    fn layers_of_uniserial() {
        let layers = radical_layers(&jordan(4)).unwrap();
        assert_eq!(layers.iter().map(|l| l.dim).collect::<Vec<_>>(), vec![1, 1, 1, 1]);
        assert_eq!(socle(&jordan(4)).unwrap().len(), 1);
        assert!(has_local_endomorphisms(&jordan(4)).unwrap());
    }

    #[test]
    fn decomposable_is_not_local() {
        let m = jordan(2).direct_sum(&jordan(1));
        assert!(!has_local_endomorphisms(&m).unwrap());
        assert!(!is_isomorphic(&m, &jordan(3)));
        assert!(is_isomorphic(&jordan(3), &jordan(3).transpose_dual()));
    }

    #[test]
    fn full_matrix_algebra_is_irreducible() {
        let a = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        let b = Matrix::from_i64(&[&[0, 0], &[1, 0]]);
        assert!(is_absolutely_irreducible(&Module::new(2, vec![a.clone(), b])));
        assert!(!is_absolutely_irreducible(&Module::new(2, vec![a])));
    }
}
