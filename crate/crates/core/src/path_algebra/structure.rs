//! Structure of a finite-dimensional algebra: radical, socle, center, trace forms, biseriality
//! conditions and the quiver.

use super::algebra::FDAlgebra;
use super::presentation::{Presentation, Quiver};
use crate::error::{Error, Result};
use crate::linalg::{unit, vec_is_zero, Echelon, Matrix};
use crate::module::generic_invertible;
use crate::rational::Q;
use num_traits::Zero;
use serde::Serialize;

/// Span of all products `x y` with `x` in `a`, `y` in `b`.
pub fn product_span(alg: &FDAlgebra, a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let mut e = Echelon::new(alg.dim());
    for x in a {
        for y in b {
            e.insert(alg.mul(x, y));
        }
    }
    e.basis().to_vec()
}

/// `t_k = trace of left multiplication by b_k`.
fn regular_traces(alg: &FDAlgebra) -> Vec<Q> {
    let d = alg.dim();
    (0..d)
        .map(|k| {
            let mut t = Q::zero();
            for j in 0..d {
                for (m, c) in alg.basis_product(k, j) {
                    if *m == j {
                        t += c;
                    }
                }
            }
            t
        })
        .collect()
}

/// Gram matrix `G_ij = t(b_i b_j)` of a linear functional.
pub fn gram_matrix(alg: &FDAlgebra, t: &[Q]) -> Matrix {
    let d = alg.dim();
    let mut g = Matrix::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            let mut s = Q::zero();
            for (k, c) in alg.basis_product(i, j) {
                s += c * &t[*k];
            }
            g[(i, j)] = s;
        }
    }
    g
}

/// Jacobson radical as the kernel of the trace form of the regular representation; errors if
/// the result is not nilpotent.
pub fn jacobson_radical(alg: &FDAlgebra) -> Result<Vec<Vec<Q>>> {
    let g = gram_matrix(alg, &regular_traces(alg));
    let rad = g.nullspace();
    let mut power = rad.clone();
    for _ in 0..=alg.dim() {
        if power.is_empty() {
            return Ok(rad);
        }
        power = product_span(alg, &power, &rad);
    }
    Err(Error::NotNilpotent)
}

/// Radical powers `Rad^1, Rad^2, ...` down to zero.
pub fn radical_powers(alg: &FDAlgebra) -> Result<Vec<Vec<Vec<Q>>>> {
    let rad = jacobson_radical(alg)?;
    let mut out = vec![rad.clone()];
    loop {
        let next = product_span(alg, out.last().unwrap(), &rad);
        if next.is_empty() {
            return Ok(out);
        }
        out.push(next);
    }
}

/// Span of paths of positive length: the radical for an admissible presentation.
pub fn arrow_ideal(alg: &FDAlgebra) -> Vec<Vec<Q>> {
    let mut e = Echelon::new(alg.dim());
    for (k, b) in alg.basis.iter().enumerate() {
        if b.path.as_ref().is_some_and(|p| !p.is_empty()) {
            e.insert(unit(alg.dim(), k));
        }
    }
    e.basis().to_vec()
}

/// Elements commuting with all generators.
pub fn center(alg: &FDAlgebra) -> Vec<Vec<Q>> {
    let d = alg.dim();
    let mut stacked = Matrix::zeros(0, d);
    for g in &alg.gens {
        stacked = stacked.vcat(&alg.left_mult(g).sub(&alg.right_mult(g)));
    }
    stacked.nullspace()
}

/// Two-sided annihilator of the radical.
pub fn socle_algebra(alg: &FDAlgebra) -> Result<Vec<Vec<Q>>> {
    let rad = jacobson_radical(alg)?;
    let d = alg.dim();
    let mut stacked = Matrix::zeros(0, d);
    for r in &rad {
        stacked = stacked.vcat(&alg.left_mult(r)).vcat(&alg.right_mult(r));
    }
    if rad.is_empty() {
        return Ok((0..d).map(|k| unit(d, k)).collect());
    }
    Ok(stacked.nullspace())
}

/// Left socle `{x : Rad x = 0}` or right socle `{x : x Rad = 0}`.
pub fn one_sided_socle(alg: &FDAlgebra, left: bool) -> Result<Vec<Vec<Q>>> {
    let rad = jacobson_radical(alg)?;
    let d = alg.dim();
    if rad.is_empty() {
        return Ok((0..d).map(|k| unit(d, k)).collect());
    }
    let mut stacked = Matrix::zeros(0, d);
    for r in &rad {
        stacked = stacked.vcat(&if left { alg.left_mult(r) } else { alg.right_mult(r) });
    }
    Ok(stacked.nullspace())
}

pub fn in_span(d: usize, span: &[Vec<Q>], x: &[Q]) -> bool {
    Echelon::from_vectors(d, span.iter().cloned()).contains(x)
}

/// Same subspace.
pub fn same_span(d: usize, a: &[Vec<Q>], b: &[Vec<Q>]) -> bool {
    let ea = Echelon::from_vectors(d, a.iter().cloned());
    let eb = Echelon::from_vectors(d, b.iter().cloned());
    ea.dim() == eb.dim() && b.iter().all(|v| ea.contains(v))
}

/// Trace functional from the values attached to a presentation. Each listed path must reduce
/// to a multiple of a single normal word.
pub fn trace_from_presentation(alg: &FDAlgebra, pres: &Presentation) -> Result<Option<Vec<Q>>> {
    let Some(tr) = &pres.trace else { return Ok(None) };
    let d = alg.dim();
    let mut t: Vec<Option<Q>> = vec![None; d];
    for (p, c) in tr {
        let x = alg.path_element(p)?;
        let nz: Vec<usize> = (0..d).filter(|&k| !x[k].is_zero()).collect();
        if nz.len() != 1 {
            return Err(Error::Invalid(format!(
                "trace value on {} does not determine a single basis value",
                pres.quiver.path_name(p)
            )));
        }
        let v = c / &x[nz[0]];
        match &t[nz[0]] {
            Some(old) if *old != v => {
                return Err(Error::Invalid(format!("conflicting trace values on {}", alg.basis[nz[0]].label)))
            }
            _ => t[nz[0]] = Some(v),
        }
    }
    Ok(Some(t.into_iter().map(|v| v.unwrap_or_else(Q::zero)).collect()))
}

#[derive(Clone, Debug, Serialize)]
pub struct TraceCheck {
    pub symmetric: bool,
    pub nondegenerate: bool,
    /// First basis pair `(i, j)` with `t(b_i b_j) != t(b_j b_i)`.
    pub asymmetric_pair: Option<(String, String)>,
}

impl TraceCheck {
    pub fn valid(&self) -> bool {
        self.symmetric && self.nondegenerate
    }
}

pub fn check_trace(alg: &FDAlgebra, t: &[Q]) -> TraceCheck {
    let g = gram_matrix(alg, t);
    let d = alg.dim();
    let mut asym = None;
    'outer: for i in 0..d {
        for j in i + 1..d {
            if g[(i, j)] != g[(j, i)] {
                asym = Some((alg.basis[i].label.clone(), alg.basis[j].label.clone()));
                break 'outer;
            }
        }
    }
    TraceCheck { symmetric: asym.is_none(), nondegenerate: g.rank() == d, asymmetric_pair: asym }
}

/// Verifies `trace` if given, otherwise searches the functionals vanishing on all commutators
/// for a nondegenerate one.
pub fn is_symmetric(alg: &FDAlgebra, trace: Option<&[Q]>) -> Option<Vec<Q>> {
    if let Some(t) = trace {
        return check_trace(alg, t).valid().then(|| t.to_vec());
    }
    let d = alg.dim();
    let mut comm = Echelon::new(d);
    for i in 0..d {
        for j in i + 1..d {
            let mut v = vec![Q::zero(); d];
            for (k, c) in alg.basis_product(i, j) {
                v[*k] += c;
            }
            for (k, c) in alg.basis_product(j, i) {
                v[*k] -= c;
            }
            if !vec_is_zero(&v) {
                comm.insert(v);
            }
        }
    }
    let cm = Matrix::from_rows(comm.basis().to_vec());
    let forms: Vec<Vec<Q>> = if comm.dim() == 0 { (0..d).map(|k| unit(d, k)).collect() } else { cm.nullspace() };
    if forms.is_empty() {
        return None;
    }
    let grams: Vec<Matrix> = forms.iter().map(|t| gram_matrix(alg, t)).collect();
    let m = generic_invertible(&grams, 0x7ace)?;
    // recover the functional from the Gram matrix: t(b_k) = G(e_v, b_k) for b_k starting at v
    let mut t = vec![Q::zero(); d];
    for v in 0..alg.nvertices() {
        let ev = alg.idempotent(v);
        let row = Matrix::from_rows(vec![ev.to_vec()]).mul(&m);
        for k in 0..d {
            if alg.basis[k].left == v {
                t[k] = row[(0, k)].clone();
            }
        }
    }
    Some(t)
}

/// Self-injectivity for basic algebras: left and right socles agree and every indecomposable
/// projective has a simple socle, with the socle vertices forming a permutation.
pub fn is_self_injective(alg: &FDAlgebra) -> Result<bool> {
    let d = alg.dim();
    let ls = one_sided_socle(alg, true)?;
    let rs = one_sided_socle(alg, false)?;
    if !same_span(d, &ls, &rs) {
        return Ok(false);
    }
    let n = alg.nvertices();
    let mut targets = vec![false; n];
    for v in 0..n {
        // socle of A e_v is Soc(A) e_v
        let sv: Vec<Vec<Q>> = ls.iter().map(|x| alg.mul(x, alg.idempotent(v))).collect();
        let sv = Echelon::from_vectors(d, sv).basis().to_vec();
        if sv.len() != 1 {
            return Ok(false);
        }
        let u = (0..n).find(|&u| !vec_is_zero(&alg.mul(alg.idempotent(u), &sv[0])));
        match u {
            Some(u) if !targets[u] => targets[u] = true,
            _ => return Ok(false),
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct BiserialReport {
    pub holds: bool,
    pub failures: Vec<String>,
}

fn arrow_counts(alg: &FDAlgebra, report: &mut BiserialReport) {
    for v in 0..alg.nvertices() {
        let out = alg.gen_ends.iter().filter(|e| e.0 == v).count();
        let inc = alg.gen_ends.iter().filter(|e| e.1 == v).count();
        if out > 2 || inc > 2 {
            report.failures.push(format!("vertex {} has {out} outgoing and {inc} incoming arrows", alg.vertices[v]));
        }
    }
}

/// Special biserial: at most two arrows in and out of each vertex, and for each arrow at most
/// one arrow on either side with a nonzero composite.
pub fn is_special_biserial(alg: &FDAlgebra) -> BiserialReport {
    let mut rep = BiserialReport::default();
    arrow_counts(alg, &mut rep);
    let na = alg.narrows();
    for a in 0..na {
        let after: Vec<usize> = (0..na)
            .filter(|&b| alg.gen_ends[a].1 == alg.gen_ends[b].0 && !vec_is_zero(&alg.mul(alg.arrow(a), alg.arrow(b))))
            .collect();
        if after.len() > 1 {
            let names: Vec<&str> = after.iter().map(|&b| alg.arrow_name(b)).collect();
            rep.failures.push(format!("{} is followed nontrivially by {}", alg.arrow_name(a), names.join(", ")));
        }
        let before: Vec<usize> = (0..na)
            .filter(|&b| alg.gen_ends[b].1 == alg.gen_ends[a].0 && !vec_is_zero(&alg.mul(alg.arrow(b), alg.arrow(a))))
            .collect();
        if before.len() > 1 {
            let names: Vec<&str> = before.iter().map(|&b| alg.arrow_name(b)).collect();
            rep.failures.push(format!("{} is preceded nontrivially by {}", alg.arrow_name(a), names.join(", ")));
        }
    }
    rep.holds = rep.failures.is_empty();
    rep
}

/// Stably biserial: self-injective, at most two arrows in and out, and for each arrow at most one
/// arrow on either side with `a b` outside `a Rad b + Soc`.
pub fn is_stably_biserial(alg: &FDAlgebra) -> Result<BiserialReport> {
    let mut rep = BiserialReport::default();
    if !is_self_injective(alg)? {
        rep.failures.push("not self-injective".into());
    }
    arrow_counts(alg, &mut rep);
    let d = alg.dim();
    let rad = jacobson_radical(alg)?;
    let soc = socle_algebra(alg)?;
    let na = alg.narrows();
    let escapes = |a: usize, b: usize| -> bool {
        let mut e = Echelon::from_vectors(d, soc.iter().cloned());
        for r in &rad {
            e.insert(alg.mul(&alg.mul(alg.arrow(a), r), alg.arrow(b)));
        }
        !e.contains(&alg.mul(alg.arrow(a), alg.arrow(b)))
    };
    for a in 0..na {
        let after: Vec<usize> = (0..na).filter(|&b| alg.gen_ends[a].1 == alg.gen_ends[b].0 && escapes(a, b)).collect();
        if after.len() > 1 {
            let names: Vec<&str> = after.iter().map(|&b| alg.arrow_name(b)).collect();
            rep.failures.push(format!("{} b lies outside {} Rad b + Soc for b in {}", alg.arrow_name(a), alg.arrow_name(a), names.join(", ")));
        }
        let before: Vec<usize> = (0..na).filter(|&b| alg.gen_ends[b].1 == alg.gen_ends[a].0 && escapes(b, a)).collect();
        if before.len() > 1 {
            let names: Vec<&str> = before.iter().map(|&b| alg.arrow_name(b)).collect();
            rep.failures.push(format!("b {} lies outside b Rad {} + Soc for b in {}", alg.arrow_name(a), alg.arrow_name(a), names.join(", ")));
        }
    }
    rep.holds = rep.failures.is_empty();
    Ok(rep)
}

/// Number of arrows `i -> j` in the quiver of the algebra: `dim e_i (Rad / Rad^2) e_j`.
pub fn arrow_matrix(alg: &FDAlgebra) -> Result<Vec<Vec<usize>>> {
    let d = alg.dim();
    let rad = jacobson_radical(alg)?;
    let rad2 = product_span(alg, &rad, &rad);
    let n = alg.nvertices();
    let mut out = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            let corner = |s: &[Vec<Q>]| -> usize {
                let v: Vec<Vec<Q>> = s.iter().map(|x| alg.mul(&alg.mul(alg.idempotent(i), x), alg.idempotent(j))).collect();
                Echelon::from_vectors(d, v).dim()
            };
            out[i][j] = corner(&rad) - corner(&rad2);
        }
    }
    Ok(out)
}

/// Quiver of a basic algebra with arrows named `a{i}{j}_{k}`.
pub fn quiver_of_algebra(alg: &FDAlgebra) -> Result<Quiver> {
    let m = arrow_matrix(alg)?;
    let mut arrows = Vec::new();
    for (i, row) in m.iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            for k in 0..c {
                arrows.push(super::presentation::Arrow {
                    name: format!("a{}{}_{}", alg.vertices[i], alg.vertices[j], k + 1),
                    src: i,
                    tgt: j,
                });
            }
        }
    }
    Ok(Quiver { vertices: alg.vertices.clone(), arrows })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WildWitness {
    pub vertex: String,
    pub loops: Vec<String>,
    pub arrow: String,
}

/// A vertex with at least two loops and a further arrow at it.
pub fn wild_configuration_witness(q: &Quiver) -> Option<WildWitness> {
    for (v, name) in q.vertices.iter().enumerate() {
        let loops: Vec<String> = q.arrows.iter().filter(|a| a.src == v && a.tgt == v).map(|a| a.name.clone()).collect();
        if loops.len() < 2 {
            continue;
        }
        if let Some(a) = q.arrows.iter().find(|a| (a.src == v) != (a.tgt == v)) {
            return Some(WildWitness { vertex: name.clone(), loops, arrow: a.name.clone() });
        }
    }
    None
}
