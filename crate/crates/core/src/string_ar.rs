//! Strings, bands and string modules over special biserial algebras, and the stable-category
//! searches built on them: stable bricks, orthogonal pairs and s-projectives.
//!
//! A direct letter `a: s -> t` walks from `s` to `t`; on the string module it sends the basis
//! vector after it to the one before it, so `M(a)` has top at `t` and socle at `s`.

use crate::error::{Error, Result};
use crate::linalg::{Echelon, Matrix};
use crate::module::{hom_space, is_isomorphic, Module};
use crate::path_algebra::homological::Homological;
use crate::path_algebra::structure::{is_special_biserial, socle_algebra};
use crate::path_algebra::FDAlgebra;
use crate::rational::Q;
use num_traits::{One, Zero};
use serde::Serialize;
use std::cmp::Ordering;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub arrow: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn flip(self) -> Letter {
        Letter { arrow: self.arrow, inverse: !self.inverse }
    }
}

/// A walk: `start` matters only for the trivial string.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StringWord {
    pub start: usize,
    pub letters: Vec<Letter>,
}

impl Ord for StringWord {
    fn cmp(&self, o: &Self) -> Ordering {
        (self.letters.len(), &self.letters, self.start).cmp(&(o.letters.len(), &o.letters, o.start))
    }
}

impl PartialOrd for StringWord {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl StringWord {
    pub fn trivial(v: usize) -> Self {
        StringWord { start: v, letters: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

/// A special biserial algebra with the data needed for string combinatorics.
#[derive(Clone, Debug)]
pub struct StringAlgebra {
    pub hom: Homological,
    soc: Echelon,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtTable {
    pub ext00: usize,
    pub ext11: usize,
    pub ext01: usize,
    pub ext10: usize,
}

impl StringAlgebra {
    pub fn new(alg: &FDAlgebra) -> Result<Self> {
        let rep = is_special_biserial(alg);
        if !rep.holds {
            return Err(Error::Invalid(format!("not special biserial: {}", rep.failures.join("; "))));
        }
        let soc = Echelon::from_vectors(alg.dim(), socle_algebra(alg)?);
        Ok(StringAlgebra { hom: Homological::new(alg)?, soc })
    }

    pub fn alg(&self) -> &FDAlgebra {
        &self.hom.alg
    }

    /// `(from, to)` of a letter as a step of a walk.
    pub fn step(&self, l: Letter) -> (usize, usize) {
        let (s, t) = self.alg().gen_ends[l.arrow];
        if l.inverse {
            (t, s)
        } else {
            (s, t)
        }
    }

    pub fn end(&self, w: &StringWord) -> usize {
        w.letters.last().map_or(w.start, |&l| self.step(l).1)
    }

    /// The path `a_1 ... a_k` is nonzero modulo the socle.
    fn path_ok(&self, arrows: &[usize]) -> bool {
        let alg = self.alg();
        let mut x = alg.arrow(arrows[0]).to_vec();
        for &a in &arrows[1..] {
            x = alg.mul(&x, alg.arrow(a));
        }
        !self.soc.contains(&x)
    }

    pub fn is_string(&self, w: &StringWord) -> bool {
        let mut cur = w.start;
        for (i, &l) in w.letters.iter().enumerate() {
            let (f, t) = self.step(l);
            if f != cur {
                return false;
            }
            cur = t;
            if i > 0 && w.letters[i - 1] == l.flip() {
                return false;
            }
        }
        let mut i = 0;
        while i < w.letters.len() {
            let inv = w.letters[i].inverse;
            let mut j = i;
            while j < w.letters.len() && w.letters[j].inverse == inv {
                j += 1;
            }
            let mut run: Vec<usize> = w.letters[i..j].iter().map(|l| l.arrow).collect();
            if inv {
                run.reverse();
            }
            if !self.path_ok(&run) {
                return false;
            }
            i = j;
        }
        true
    }

    pub fn inverse(&self, w: &StringWord) -> StringWord {
        StringWord { start: self.end(w), letters: w.letters.iter().rev().map(|l| l.flip()).collect() }
    }

    /// Representative of `{C, C^{-1}}`.
    pub fn canonical_string(&self, w: &StringWord) -> StringWord {
        let inv = self.inverse(w);
        if inv < *w {
            inv
        } else {
            w.clone()
        }
    }

    /// All strings with at most `maxlen` letters, one per inversion class.
    pub fn enumerate_strings(&self, maxlen: usize) -> Vec<StringWord> {
        let mut out = Vec::new();
        let mut stack: Vec<StringWord> = (0..self.alg().nvertices()).map(StringWord::trivial).collect();
        while let Some(w) = stack.pop() {
            if self.canonical_string(&w) == w {
                out.push(w.clone());
            }
            if w.len() == maxlen {
                continue;
            }
            for l in self.letters() {
                let mut n = w.clone();
                n.letters.push(l);
                if self.is_string(&n) {
                    stack.push(n);
                }
            }
        }
        out.sort();
        out
    }

    fn letters(&self) -> Vec<Letter> {
        (0..self.alg().narrows()).flat_map(|a| [false, true].map(|inverse| Letter { arrow: a, inverse })).collect()
    }

    fn rotate(&self, w: &StringWord, k: usize) -> StringWord {
        let n = w.len();
        let letters: Vec<Letter> = (0..n).map(|i| w.letters[(i + k) % n]).collect();
        StringWord { start: self.step(letters[0]).0, letters }
    }

    pub fn is_band(&self, w: &StringWord) -> bool {
        let n = w.len();
        if n == 0 || self.end(w) != w.start {
            return false;
        }
        if !w.letters.iter().any(|l| l.inverse) || w.letters.iter().all(|l| l.inverse) {
            return false;
        }
        let doubled = StringWord { start: w.start, letters: [w.letters.clone(), w.letters.clone()].concat() };
        if !self.is_string(&doubled) {
            return false;
        }
        // primitive
        !(1..n).any(|d| n.is_multiple_of(d) && (0..n).all(|i| w.letters[i] == w.letters[i % d]))
    }

    /// Representative under rotation and inversion.
    pub fn canonical_band(&self, w: &StringWord) -> StringWord {
        let inv = self.inverse(w);
        (0..w.len()).flat_map(|k| [self.rotate(w, k), self.rotate(&inv, k)]).min().expect("bands are nonempty")
    }

    /// Band classes with at most `maxlen` letters.
    pub fn enumerate_bands(&self, maxlen: usize) -> Vec<StringWord> {
        let mut out = Vec::new();
        let mut stack: Vec<StringWord> = (0..self.alg().nvertices()).map(StringWord::trivial).collect();
        while let Some(w) = stack.pop() {
            if self.is_band(&w) && self.canonical_band(&w) == w {
                out.push(w.clone());
            }
            if w.len() == maxlen {
                continue;
            }
            for l in self.letters() {
                let mut n = w.clone();
                n.letters.push(l);
                if self.is_string(&n) {
                    stack.push(n);
                }
            }
        }
        out.sort();
        out
    }

    pub fn string_module(&self, w: &StringWord) -> Result<Module> {
        if !self.is_string(w) {
            return Err(Error::Invalid(format!("not a string: {}", self.name(w))));
        }
        let n = w.len() + 1;
        let alg = self.alg();
        let nv = alg.nvertices();
        let mut gens = vec![Matrix::zeros(n, n); alg.gens.len()];
        let mut cur = w.start;
        gens[cur][(0, 0)] = Q::one();
        for (i, &l) in w.letters.iter().enumerate() {
            cur = self.step(l).1;
            gens[cur][(i + 1, i + 1)] = Q::one();
            let g = &mut gens[nv + l.arrow];
            if l.inverse {
                g[(i + 1, i)] = Q::one();
            } else {
                g[(i, i + 1)] = Q::one();
            }
        }
        let m = Module::new(n, gens);
        if !alg.is_module(&m) {
            return Err(Error::Invalid(format!("{} does not define a module", self.name(w))));
        }
        Ok(m)
    }

    /// Band module with parameter `t` on the closing letter and one-dimensional blocks.
    pub fn band_module(&self, w: &StringWord, t: &Q) -> Result<Module> {
        if !self.is_band(w) {
            return Err(Error::Invalid(format!("not a band: {}", self.name(w))));
        }
        if t.is_zero() {
            return Err(Error::Invalid("band parameter must be nonzero".into()));
        }
        let n = w.len();
        let alg = self.alg();
        let nv = alg.nvertices();
        let mut gens = vec![Matrix::zeros(n, n); alg.gens.len()];
        let mut cur = w.start;
        for (i, &l) in w.letters.iter().enumerate() {
            gens[cur][(i, i)] = Q::one();
            cur = self.step(l).1;
            let j = (i + 1) % n;
            let c = if j == 0 { t.clone() } else { Q::one() };
            let g = &mut gens[nv + l.arrow];
            if l.inverse {
                g[(j, i)] += c;
            } else {
                g[(i, j)] += c;
            }
        }
        let m = Module::new(n, gens);
        if !alg.is_module(&m) {
            return Err(Error::Invalid(format!("{} does not define a module", self.name(w))));
        }
        Ok(m)
    }

    pub fn name(&self, w: &StringWord) -> String {
        if w.is_empty() {
            return format!("e_{}", self.alg().vertices[w.start]);
        }
        w.letters
            .iter()
            .map(|l| {
                let a = self.alg().arrow_name(l.arrow);
                if l.inverse {
                    format!("{a}^-1")
                } else {
                    a.to_string()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses `beta alpha gamma^-1`, `βαγ⁻¹` or `e_0`.
    pub fn parse(&self, s: &str) -> Result<StringWord> {
        let alg = self.alg();
        let s = s.trim();
        if let Some(v) = s.strip_prefix("e_") {
            let v = alg.vertex_index(v).ok_or_else(|| Error::Parse(format!("unknown vertex in {s}")))?;
            return Ok(StringWord::trivial(v));
        }
        let mut rest: String = s
            .replace('α', "alpha")
            .replace('β', "beta")
            .replace('γ', "gamma")
            .replace('δ', "delta")
            .replace('⁻', "^-")
            .replace('¹', "1")
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '.' && *c != '*')
            .collect();
        let mut names: Vec<(usize, String)> = (0..alg.narrows()).map(|a| (a, alg.arrow_name(a).to_string())).collect();
        names.sort_by_key(|(_, n)| std::cmp::Reverse(n.len()));
        let mut letters = Vec::new();
        while !rest.is_empty() {
            let (a, n) = names
                .iter()
                .find(|(_, n)| rest.starts_with(n.as_str()))
                .ok_or_else(|| Error::Parse(format!("cannot read a letter at {rest:?}")))?;
            rest = rest[n.len()..].to_string();
            let inverse = rest.starts_with("^-1");
            if inverse {
                rest = rest[3..].to_string();
            }
            letters.push(Letter { arrow: *a, inverse });
        }
        if letters.is_empty() {
            return Err(Error::Parse("empty string".into()));
        }
        let w = StringWord { start: self.step(letters[0]).0, letters };
        if !self.is_string(&w) && !self.is_band(&w) {
            return Err(Error::Invalid(format!("{s} is not a string for this algebra")));
        }
        Ok(w)
    }

    pub fn stable_end_dim(&self, m: &Module) -> Result<usize> {
        self.hom.stable_hom_dim(m, m)
    }

    /// `tau M` not isomorphic to `M` and a one-dimensional stable endomorphism algebra.
    pub fn is_stable_brick(&self, m: &Module) -> Result<bool> {
        if !self.hom.is_indecomposable(m)? || self.hom.is_projective(m)? {
            return Ok(false);
        }
        if self.stable_end_dim(m)? != 1 {
            return Ok(false);
        }
        Ok(!is_isomorphic(&self.hom.tau(m)?, m))
    }

    /// Unordered pairs of stable bricks among string modules with at most `maxlen` letters
    /// having no stable maps either way.
    pub fn orthogonal_brick_pairs(&self, maxlen: usize) -> Result<Vec<(StringWord, StringWord)>> {
        let bricks = self.stable_bricks(maxlen)?;
        let mut out = Vec::new();
        for i in 0..bricks.len() {
            for j in i + 1..bricks.len() {
                let (x, y) = (&bricks[i].1, &bricks[j].1);
                if self.hom.stable_hom_dim(x, y)? == 0 && self.hom.stable_hom_dim(y, x)? == 0 {
                    out.push((bricks[i].0.clone(), bricks[j].0.clone()));
                }
            }
        }
        out.sort();
        Ok(out)
    }

    fn stable_bricks(&self, maxlen: usize) -> Result<Vec<(StringWord, Module)>> {
        let mut bricks = Vec::new();
        for w in self.enumerate_strings(maxlen) {
            let m = self.string_module(&w)?;
            if self.is_stable_brick(&m)? {
                bricks.push((w, m));
            }
        }
        Ok(bricks)
    }

    /// Orthogonal pairs that are maximal with respect to the string modules with at most
    /// `maxlen` letters: every non-projective one with `tau N != N` has nonzero stable maps
    /// from and to the pair.
    pub fn sosb_pairs(&self, maxlen: usize) -> Result<Vec<(StringWord, StringWord)>> {
        let mut tests = Vec::new();
        for w in self.enumerate_strings(maxlen) {
            let n = self.string_module(&w)?;
            if !self.hom.is_projective(&n)? && !is_isomorphic(&self.hom.tau(&n)?, &n) {
                tests.push(n);
            }
        }
        let mut out = Vec::new();
        for (x, y) in self.orthogonal_brick_pairs(maxlen)? {
            let (mx, my) = (self.string_module(&x)?, self.string_module(&y)?);
            let mut maximal = true;
            for n in &tests {
                let into = self.hom.stable_hom_dim(&mx, n)? + self.hom.stable_hom_dim(&my, n)?;
                let from = self.hom.stable_hom_dim(n, &mx)? + self.hom.stable_hom_dim(n, &my)?;
                if into == 0 || from == 0 {
                    maximal = false;
                    break;
                }
            }
            if maximal {
                out.push((x, y));
            }
        }
        Ok(out)
    }

    /// `tau^{-1} Omega X`.
    pub fn s_projective(&self, x: &Module) -> Result<Module> {
        if self.hom.is_projective(x)? {
            return Err(Error::Invalid("s-projectives are attached to non-projective modules".into()));
        }
        self.hom.tau_inverse(&self.hom.omega(x)?)
    }

    /// A string with at most `maxlen` letters whose module is isomorphic to `m`.
    pub fn identify(&self, m: &Module, maxlen: usize) -> Result<Option<StringWord>> {
        for w in self.enumerate_strings(maxlen) {
            if w.len() + 1 == m.dim && is_isomorphic(&self.string_module(&w)?, m) {
                return Ok(Some(w));
            }
        }
        Ok(None)
    }

    pub fn ext_table(&self, x0: &Module, x1: &Module) -> Result<ExtTable> {
        Ok(ExtTable {
            ext00: self.hom.ext1_dim(x0, x0)?,
            ext11: self.hom.ext1_dim(x1, x1)?,
            ext01: self.hom.ext1_dim(x0, x1)?,
            ext10: self.hom.ext1_dim(x1, x0)?,
        })
    }

    /// Whether `f: M -> N` factors through a projective module.
    pub fn factors_through_projective(&self, m: &Module, n: &Module, f: &Matrix) -> Result<bool> {
        if f.rows() != n.dim || f.cols() != m.dim {
            return Err(Error::Invalid("map has the wrong shape".into()));
        }
        if m.gens.iter().zip(&n.gens).any(|(a, b)| f.mul(a) != b.mul(f)) {
            return Err(Error::Invalid("map is not a homomorphism".into()));
        }
        let e = Echelon::from_vectors(n.dim * m.dim, self.hom.projective_homs(m, n)?.iter().map(|g| g.data().to_vec()));
        Ok(e.contains(f.data()))
    }

    pub fn hom_dim(&self, m: &Module, n: &Module) -> usize {
        hom_space(m, n).len()
    }
}

/// Composite-letter band family: every word of length `q` in `letters` other than the pure
/// powers, reduced to band classes.
pub fn composite_band_classes(sa: &StringAlgebra, letters: &[StringWord], q: usize) -> Result<usize> {
    let mut classes = std::collections::BTreeSet::new();
    let k = letters.len();
    for code in 0..k.pow(q as u32) {
        let mut c = code;
        let mut idx = Vec::with_capacity(q);
        for _ in 0..q {
            idx.push(c % k);
            c /= k;
        }
        if idx.iter().all(|&i| i == idx[0]) {
            continue;
        }
        let word: Vec<Letter> = idx.iter().flat_map(|&i| letters[i].letters.clone()).collect();
        let w = StringWord { start: sa.step(word[0]).0, letters: word };
        if !sa.is_band(&w) {
            return Err(Error::Invalid(format!("{} is not a band", sa.name(&w))));
        }
        classes.insert(sa.canonical_band(&w));
    }
    Ok(classes.len())
}
