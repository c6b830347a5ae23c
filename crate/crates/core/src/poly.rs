//! Polynomials over the rationals in a few commuting variables.

use crate::linalg::Matrix;
use crate::rational::{fmt_q, Q};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Q>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, Q::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[u32]) -> Q {
        self.terms.get(e).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, e: Vec<u32>, c: Q) {
        assert_eq!(e.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e.clone()).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.scale(&-Q::one()))
    }

    pub fn scale(&self, s: &Q) -> Poly {
        let mut r = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            r.add_term(e.clone(), c * s);
        }
        r
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        let mut r = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                r.add_term(e1.iter().zip(e2).map(|(a, b)| a + b).collect(), c1 * c2);
            }
        }
        r
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Substitutes variable `i` of self by `subs[i]` (all in `subs[0].nvars()` variables).
    pub fn compose(&self, subs: &[Poly]) -> Poly {
        assert_eq!(subs.len(), self.nvars);
        let n = subs[0].nvars;
        let mut r = Poly::zero(n);
        for (e, c) in &self.terms {
            let mut t = Poly::constant(n, c.clone());
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    t = t.mul(&subs[i]);
                }
            }
            r = r.add(&t);
        }
        r
    }

    /// Exact division by `var_a - var_b`; None if not divisible.
    pub fn div_by_difference(&self, a: usize, b: usize) -> Option<Poly> {
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.nvars);
        while let Some((e, c)) = rem.leading_in(a) {
            if e[a] == 0 {
                return None;
            }
            let mut qe = e.clone();
            qe[a] -= 1;
            let mut t = Poly::zero(self.nvars);
            t.add_term(qe.clone(), c.clone());
            quot = quot.add(&t);
            let diff = Poly::var(self.nvars, a).sub(&Poly::var(self.nvars, b));
            rem = rem.sub(&t.mul(&diff));
        }
        Some(quot)
    }

    /// Term with the largest exponent of variable `a` (ties broken by the exponent vector).
    fn leading_in(&self, a: usize) -> Option<(Vec<u32>, Q)> {
        self.terms.iter().max_by(|x, y| (x.0[a], x.0).cmp(&(y.0[a], y.0))).map(|(e, c)| (e.clone(), c.clone()))
    }

    /// Evaluates at pairwise commuting square matrices.
    pub fn eval_matrices(&self, xs: &[&Matrix]) -> Matrix {
        assert_eq!(xs.len(), self.nvars);
        let d = xs.first().map_or(0, |m| m.rows());
        let mut r = Matrix::zeros(d, d);
        for (e, c) in &self.terms {
            let mut t = Matrix::identity(d);
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    t = t.mul(xs[i]);
                }
            }
            r.add_scaled(&t, c);
        }
        r
    }

    pub fn eval(&self, xs: &[Q]) -> Q {
        let mut s = Q::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    t *= &xs[i];
                }
            }
            s += t;
        }
        s
    }

    pub fn to_string_with(&self, names: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| if k == 1 { names[i].to_string() } else { format!("{}^{}", names[i], k) })
                    .collect();
                if mono.is_empty() {
                    fmt_q(c)
                } else if c.is_one() {
                    mono.join("*")
                } else {
                    format!("{}*{}", fmt_q(c), mono.join("*"))
                }
            })
            .collect();
        parts.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn divide_difference() {
        let u = Poly::var(3, 0);
        let w = Poly::var(3, 2);
        let p = u.mul(&u).sub(&w.mul(&w));
        let quot = p.div_by_difference(0, 2).unwrap();
        assert_eq!(quot, u.add(&w));
        assert!(u.add(&w).div_by_difference(0, 2).is_none());
    }

    #[test]
    fn evaluation() {
        let u = Poly::var(2, 0);
        let v = Poly::var(2, 1);
        let p = u.mul(&v).add(&Poly::constant(2, q(3)));
        assert_eq!(p.eval(&[q(2), q(5)]), q(13));
        assert_eq!(p.total_degree(), 2);
    }
}
