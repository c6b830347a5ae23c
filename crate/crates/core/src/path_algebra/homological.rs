//! Homological algebra over a basic algebra: projective covers, syzygies, the transpose,
//! Auslander-Reiten translates, stable Hom and Ext^1.
//!
//! Modules are left modules given by the matrices of the algebra generators (vertex
//! idempotents first, then arrows). An arrow `a = e_s a e_t` maps `e_t M` into `e_s M`.

use super::algebra::FDAlgebra;
use super::structure::{arrow_ideal, jacobson_radical, same_span};
use crate::error::{Error, Result};
use crate::linalg::{unit, vec_is_zero, Echelon, Matrix};
use crate::module::{has_local_endomorphisms, hom_space, is_isomorphic, Module};
use crate::rational::Q;
use num_traits::{One, Zero};
use serde::Serialize;

/// A minimal projective presentation `P1 -> P0 -> M -> 0`.
#[derive(Clone, Debug)]
pub struct Presentation2 {
    /// Vertices of the indecomposable summands of `P0` and `P1`.
    pub p0: Vec<usize>,
    pub p1: Vec<usize>,
    /// `entries[j][i]` lies in `e_{p1[j]} A e_{p0[i]}`: the summand generator `e_{p1[j]}` maps to
    /// `(entries[j][i])_i`.
    pub entries: Vec<Vec<Vec<Q>>>,
}

#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    pub vertices: Vec<usize>,
    pub module: Module,
    /// `M.dim x P.dim`.
    pub map: Matrix,
}

/// A basic algebra together with its opposite.
#[derive(Clone, Debug)]
pub struct Homological {
    pub alg: FDAlgebra,
    pub op: FDAlgebra,
    rad_gens: Vec<Vec<Q>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Side {
    Left,
    Right,
}

impl Homological {
    pub fn new(alg: &FDAlgebra) -> Result<Self> {
        let rad = jacobson_radical(alg)?;
        if rad.len() + alg.nvertices() != alg.dim() {
            return Err(Error::Unsupported("homological routines need a basic algebra".into()));
        }
        let arrows = arrow_ideal(alg);
        let rad_gens = if same_span(alg.dim(), &arrows, &rad) {
            (0..alg.narrows()).map(|a| alg.arrow(a).to_vec()).collect()
        } else {
            rad
        };
        Ok(Homological { op: alg.opposite(), alg: alg.clone(), rad_gens })
    }

    fn side(&self, s: Side) -> &FDAlgebra {
        match s {
            Side::Left => &self.alg,
            Side::Right => &self.op,
        }
    }

    pub fn nvertices(&self) -> usize {
        self.alg.nvertices()
    }

    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.alg.vertex_index(name).ok_or_else(|| Error::Invalid(format!("unknown vertex {name}")))
    }

    pub fn simple(&self, v: usize) -> Module {
        let ng = self.alg.gens.len();
        let mut gens = vec![Matrix::zeros(1, 1); ng];
        gens[v][(0, 0)] = Q::one();
        Module::new(1, gens)
    }

    pub fn projective(&self, v: usize) -> Module {
        self.alg.projective(v)
    }

    /// Injective hull of the simple at `v`: the dual of the right projective `e_v A`.
    pub fn injective(&self, v: usize) -> Module {
        self.op.projective(v).transpose_dual()
    }

    pub fn dim_vector(&self, m: &Module) -> Vec<usize> {
        (0..self.nvertices()).map(|v| m.gens[v].rank()).collect()
    }

    fn radical_of(&self, s: Side, m: &Module) -> Vec<Vec<Q>> {
        let alg = self.side(s);
        let mut e = Echelon::new(m.dim);
        for r in &self.rad_gens {
            let a = alg.act(m, r);
            for c in a.column_space() {
                e.insert(c);
            }
        }
        m.generated(e.basis())
    }

    /// `Rad(A) M` as a subspace.
    pub fn radical(&self, m: &Module) -> Vec<Vec<Q>> {
        self.radical_of(Side::Left, m)
    }

    /// Vectors killed by the radical.
    pub fn socle(&self, m: &Module) -> Vec<Vec<Q>> {
        if m.dim == 0 {
            return Vec::new();
        }
        let mut stacked = Matrix::zeros(0, m.dim);
        for r in &self.rad_gens {
            stacked = stacked.vcat(&self.alg.act(m, r));
        }
        if stacked.rows() == 0 {
            return (0..m.dim).map(|i| unit(m.dim, i)).collect();
        }
        stacked.nullspace()
    }

    pub fn top(&self, m: &Module) -> Result<Module> {
        Ok(m.quotient(&self.radical(m))?.0)
    }

    pub fn radical_module(&self, m: &Module) -> Result<Module> {
        m.submodule(&self.radical(m))
    }

    pub fn socle_module(&self, m: &Module) -> Result<Module> {
        m.submodule(&self.socle(m))
    }

    /// `M / Soc(M)`.
    pub fn mod_socle(&self, m: &Module) -> Result<Module> {
        Ok(m.quotient(&self.socle(m))?.0)
    }

    /// Dimension vectors of the radical layers, top first.
    pub fn radical_layers(&self, m: &Module) -> Result<Vec<Vec<usize>>> {
        let mut out = Vec::new();
        let mut cur = m.clone();
        while cur.dim > 0 {
            let rad = self.radical(&cur);
            if rad.len() == cur.dim {
                return Err(Error::NotNilpotent);
            }
            let (top, _) = cur.quotient(&rad)?;
            out.push(self.dim_vector(&top));
            cur = cur.submodule(&rad)?;
        }
        Ok(out)
    }

    /// Dimension vectors of the socle layers, socle first.
    pub fn socle_layers(&self, m: &Module) -> Result<Vec<Vec<usize>>> {
        let mut out = Vec::new();
        let mut cur = m.clone();
        while cur.dim > 0 {
            let soc = self.socle(&cur);
            out.push(self.dim_vector(&cur.submodule(&soc)?));
            cur = cur.quotient(&soc)?.0;
        }
        Ok(out)
    }

    /// `A e_v / A x_1 + ... + A x_k` for elements `x_i` of `A e_v`.
    pub fn cyclic_quotient(&self, v: usize, elems: &[Vec<Q>]) -> Result<Module> {
        let keep = self.alg.projective_support(v);
        let p = self.alg.projective(v);
        let mut sub = Vec::new();
        for x in elems {
            let outside = (0..self.alg.dim()).any(|k| !x[k].is_zero() && self.alg.basis[k].right != v);
            if outside {
                return Err(Error::Invalid(format!("element does not lie in A e_{}", self.alg.vertices[v])));
            }
            sub.push(keep.iter().map(|&k| x[k].clone()).collect::<Vec<Q>>());
        }
        let gen = p.generated(&sub);
        Ok(p.quotient(&gen)?.0)
    }

    /// `A e_v / A a` for an arrow `a` ending at `v`, by arrow name.
    pub fn arrow_quotient(&self, v: usize, arrow: &str) -> Result<Module> {
        let a = self.alg.arrow_index(arrow).ok_or_else(|| Error::Invalid(format!("unknown arrow {arrow}")))?;
        self.cyclic_quotient(v, &[self.alg.arrow(a).to_vec()])
    }

    fn cover_of(&self, s: Side, m: &Module) -> Result<ProjectiveCover> {
        let alg = self.side(s);
        let rad = self.radical_of(s, m);
        let mut lifts: Vec<(usize, Vec<Q>)> = Vec::new();
        for v in 0..alg.nvertices() {
            let ev = &m.gens[v];
            let mut e = Echelon::new(m.dim);
            for r in &rad {
                let x = ev.mul_vec(r);
                if !vec_is_zero(&x) {
                    e.insert(x);
                }
            }
            for c in ev.column_space() {
                if e.insert(c.clone()) {
                    lifts.push((v, c));
                }
            }
        }
        let acts = alg.basis_action(m);
        let mut cols: Vec<Vec<Q>> = Vec::new();
        let mut module = Module::zero(alg.gens.len());
        let mut vertices = Vec::new();
        for (v, w) in &lifts {
            for k in alg.projective_support(*v) {
                cols.push(acts[k].mul_vec(w));
            }
            module = module.direct_sum(&alg.projective(*v));
            vertices.push(*v);
        }
        let map = if cols.is_empty() { Matrix::zeros(m.dim, 0) } else { Matrix::from_columns(m.dim, &cols) };
        Ok(ProjectiveCover { vertices, module, map })
    }

    pub fn projective_cover(&self, m: &Module) -> Result<ProjectiveCover> {
        self.cover_of(Side::Left, m)
    }

    fn syzygy_of(&self, s: Side, m: &Module) -> Result<(ProjectiveCover, Module, Vec<Vec<Q>>)> {
        let cover = self.cover_of(s, m)?;
        let ker = if cover.module.dim == 0 { Vec::new() } else { cover.map.nullspace() };
        let omega = cover.module.submodule(&ker)?;
        Ok((cover, omega, ker))
    }

    /// `Omega M`, the kernel of the projective cover.
    pub fn omega(&self, m: &Module) -> Result<Module> {
        Ok(self.syzygy_of(Side::Left, m)?.1)
    }

    pub fn omega_power(&self, m: &Module, k: usize) -> Result<Module> {
        let mut cur = m.clone();
        for _ in 0..k {
            cur = self.omega(&cur)?;
        }
        Ok(cur)
    }

    /// `Omega^{-1} M`, the cokernel of the injective hull, via duality with the opposite side.
    pub fn omega_inverse(&self, m: &Module) -> Result<Module> {
        let d = m.transpose_dual();
        Ok(self.syzygy_of(Side::Right, &d)?.1.transpose_dual())
    }

    fn presentation_of(&self, s: Side, m: &Module) -> Result<Presentation2> {
        let alg = self.side(s);
        let (c0, omega, ker) = self.syzygy_of(s, m)?;
        let c1 = self.cover_of(s, &omega)?;
        let incl = if ker.is_empty() { Matrix::zeros(c0.module.dim, 0) } else { Matrix::from_columns(c0.module.dim, &ker) };
        let f = incl.mul(&c1.map);
        let d = alg.dim();
        let mut offsets0 = Vec::new();
        let mut off = 0;
        for &v in &c0.vertices {
            offsets0.push(off);
            off += alg.projective_support(v).len();
        }
        let mut entries = Vec::new();
        let mut off1 = 0;
        for &u in &c1.vertices {
            let supp = alg.projective_support(u);
            let pos = supp.iter().position(|&k| vec_is_zero(&vec_minus(&unit(d, k), alg.idempotent(u))));
            let pos = pos.ok_or_else(|| Error::Invalid("vertex idempotent is not a basis element".into()))?;
            let col = f.column(off1 + pos);
            let mut row = Vec::new();
            for (i, &v) in c0.vertices.iter().enumerate() {
                let mut x = vec![Q::zero(); d];
                for (t, k) in alg.projective_support(v).into_iter().enumerate() {
                    x[k] = col[offsets0[i] + t].clone();
                }
                row.push(x);
            }
            entries.push(row);
            off1 += supp.len();
        }
        Ok(Presentation2 { p0: c0.vertices, p1: c1.vertices, entries })
    }

    pub fn minimal_presentation(&self, m: &Module) -> Result<Presentation2> {
        self.presentation_of(Side::Left, m)
    }

    /// `Tr M` over the given side, returned as a module over the other side.
    fn transpose_of(&self, s: Side, m: &Module) -> Result<Module> {
        let alg = self.side(s);
        let pres = self.presentation_of(s, m)?;
        let d = alg.dim();
        // coordinates of e_u A inside A
        let rows_at = |u: usize| -> Vec<usize> { (0..d).filter(|&k| alg.basis[k].left == u).collect() };
        let blocks: Vec<Vec<usize>> = pres.p1.iter().map(|&u| rows_at(u)).collect();
        let total: usize = blocks.iter().map(|b| b.len()).sum();
        let mut gens = Vec::with_capacity(alg.gens.len());
        for g in &alg.gens {
            let r = alg.right_mult(g);
            let mut big = Matrix::zeros(total, total);
            let mut off = 0;
            for b in &blocks {
                big.set_block(off, off, &r.submatrix(b, b));
                off += b.len();
            }
            gens.push(big);
        }
        let y = Module { dim: total, gens };
        let mut image = Vec::new();
        for (i, &v) in pres.p0.iter().enumerate() {
            for k in rows_at(v) {
                let bk = unit(d, k);
                let mut vec = Vec::with_capacity(total);
                for (j, b) in blocks.iter().enumerate() {
                    let prod = alg.mul(&pres.entries[j][i], &bk);
                    vec.extend(b.iter().map(|&t| prod[t].clone()));
                }
                image.push(vec);
            }
        }
        Ok(y.quotient(&image)?.0)
    }

    /// `Tr M`, a right module given by the matrices of right multiplication.
    pub fn transpose(&self, m: &Module) -> Result<Module> {
        self.transpose_of(Side::Left, m)
    }

    /// `tau M = D Tr M`.
    pub fn tau(&self, m: &Module) -> Result<Module> {
        Ok(self.transpose_of(Side::Left, m)?.transpose_dual())
    }

    /// `tau^{-1} M = Tr D M`.
    pub fn tau_inverse(&self, m: &Module) -> Result<Module> {
        self.transpose_of(Side::Right, &m.transpose_dual())
    }

    pub fn hom_dim(&self, m: &Module, n: &Module) -> usize {
        hom_space(m, n).len()
    }

    /// Homomorphisms `M -> N` factoring through a projective.
    pub fn projective_homs(&self, m: &Module, n: &Module) -> Result<Vec<Matrix>> {
        let cover = self.projective_cover(n)?;
        let mut e = Echelon::new(n.dim * m.dim);
        for g in hom_space(m, &cover.module) {
            e.insert(cover.map.mul(&g).data().to_vec());
        }
        Ok(e.basis().iter().map(|v| Matrix::from_flat(n.dim, m.dim, v.clone())).collect())
    }

    /// Homomorphisms `M -> N` factoring through an injective.
    pub fn injective_homs(&self, m: &Module, n: &Module) -> Result<Vec<Matrix>> {
        // dual to the projective case over the opposite side
        let (dm, dn) = (m.transpose_dual(), n.transpose_dual());
        let cover = self.cover_of(Side::Right, &dm)?;
        let mut e = Echelon::new(n.dim * m.dim);
        for g in hom_space(&dn, &cover.module) {
            let f = cover.map.mul(&g).transpose();
            e.insert(f.data().to_vec());
        }
        Ok(e.basis().iter().map(|v| Matrix::from_flat(n.dim, m.dim, v.clone())).collect())
    }

    pub fn stable_hom_dim(&self, m: &Module, n: &Module) -> Result<usize> {
        Ok(self.hom_dim(m, n) - self.projective_homs(m, n)?.len())
    }

    pub fn costable_hom_dim(&self, m: &Module, n: &Module) -> Result<usize> {
        Ok(self.hom_dim(m, n) - self.injective_homs(m, n)?.len())
    }

    /// `Ext^1(M, N)` as `Hom(Omega M, N)` modulo maps extending to the projective cover of `M`.
    pub fn ext1_dim(&self, m: &Module, n: &Module) -> Result<usize> {
        let (cover, omega, ker) = self.syzygy_of(Side::Left, m)?;
        let h = self.hom_dim(&omega, n);
        if omega.dim == 0 || n.dim == 0 {
            return Ok(h);
        }
        let incl = Matrix::from_columns(cover.module.dim, &ker);
        let mut e = Echelon::new(n.dim * omega.dim);
        for g in hom_space(&cover.module, n) {
            e.insert(g.mul(&incl).data().to_vec());
        }
        Ok(h - e.dim())
    }

    /// `Ext^1(M, N)` as stable `Hom(Omega M, N)`; valid over a self-injective algebra.
    pub fn ext1_dim_stable(&self, m: &Module, n: &Module) -> Result<usize> {
        let omega = self.omega(m)?;
        self.stable_hom_dim(&omega, n)
    }

    /// `Ext^1(M, N)` from the Auslander-Reiten formula `D Hom-bar(N, tau M)`.
    pub fn ext1_dim_ar(&self, m: &Module, n: &Module) -> Result<usize> {
        let t = self.tau(m)?;
        self.costable_hom_dim(n, &t)
    }

    pub fn is_projective(&self, m: &Module) -> Result<bool> {
        Ok(self.omega(m)?.dim == 0)
    }

    pub fn is_indecomposable(&self, m: &Module) -> Result<bool> {
        has_local_endomorphisms(m)
    }

    pub fn isomorphic(&self, m: &Module, n: &Module) -> bool {
        is_isomorphic(m, n)
    }
}

fn vec_minus(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Multiplicities `c` with `dv = sum c_i simples[i]`, if a nonnegative integral solution exists.
pub fn composition_factors(dv: &[usize], simples: &[Vec<usize>]) -> Option<Vec<usize>> {
    let to_q = |v: &[usize]| v.iter().map(|&x| Q::from_integer((x as i64).into())).collect::<Vec<Q>>();
    let a = Matrix::from_columns(dv.len(), &simples.iter().map(|s| to_q(s)).collect::<Vec<_>>());
    let c = a.solve_vec(&to_q(dv))?;
    c.iter()
        .map(|x| (x.is_integer() && *x >= Q::zero()).then(|| x.to_integer().try_into().ok()).flatten())
        .collect()
}

/// Names each radical layer as a sum of simples, e.g. `N0+N1`.
pub fn layer_text(layer: &[usize], names: &[String], prefix: &str) -> String {
    let mut parts = Vec::new();
    for (v, &c) in layer.iter().enumerate() {
        match c {
            0 => {}
            1 => parts.push(format!("{prefix}{}", names[v])),
            _ => parts.push(format!("{c}{prefix}{}", names[v])),
        }
    }
    parts.join("+")
}

#[derive(Clone, Debug, Serialize)]
pub struct ModuleSummary {
    pub dim: usize,
    pub dim_vector: Vec<usize>,
    pub radical_layers: Vec<Vec<usize>>,
    pub indecomposable: bool,
    pub projective: bool,
}

impl Homological {
    pub fn summary(&self, m: &Module) -> Result<ModuleSummary> {
        Ok(ModuleSummary {
            dim: m.dim,
            dim_vector: self.dim_vector(m),
            radical_layers: self.radical_layers(m)?,
            indecomposable: self.is_indecomposable(m)?,
            projective: self.is_projective(m)?,
        })
    }
}
