//! Affine Cartan data of type A and the Weyl group action on level-one weights.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, VecDeque};

/// Generalized Cartan matrix of type A_ell^(1), indexed by residues 0..=ell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanMatrix {
    ell: usize,
    a: Vec<Vec<i64>>,
}

impl CartanMatrix {
    pub fn affine_a(ell: usize) -> Result<Self> {
        if ell == 0 {
            return Err(Error::Invalid("rank ell must be at least 1".into()));
        }
        let n = ell + 1;
        let mut a = vec![vec![0i64; n]; n];
        if ell == 1 {
            a = vec![vec![2, -2], vec![-2, 2]];
        } else {
            for i in 0..n {
                a[i][i] = 2;
                a[i][(i + 1) % n] = -1;
                a[i][(i + n - 1) % n] = -1;
            }
        }
        Ok(CartanMatrix { ell, a })
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn size(&self) -> usize {
        self.ell + 1
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.a[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.a
    }

    /// Residues i != j joined by an edge of the Dynkin diagram.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.a[i][j] != 0
    }
}

/// `level * Lambda_0 + sum_i alpha[i] * alpha_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Weight {
    pub level: i64,
    pub alpha: Vec<i64>,
}

impl Weight {
    pub fn lambda0(ell: usize) -> Self {
        Weight { level: 1, alpha: vec![0; ell + 1] }
    }

    pub fn delta(ell: usize) -> Self {
        Weight { level: 0, alpha: vec![1; ell + 1] }
    }

    pub fn simple_root(ell: usize, i: usize) -> Self {
        let mut alpha = vec![0; ell + 1];
        alpha[i] = 1;
        Weight { level: 0, alpha }
    }

    pub fn add(&self, o: &Weight) -> Weight {
        Weight { level: self.level + o.level, alpha: self.alpha.iter().zip(&o.alpha).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &Weight) -> Weight {
        Weight { level: self.level - o.level, alpha: self.alpha.iter().zip(&o.alpha).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight { level: self.level * k, alpha: self.alpha.iter().map(|a| a * k).collect() }
    }

    /// Height of the root-lattice part.
    pub fn height(&self) -> i64 {
        self.alpha.iter().sum()
    }
}

pub fn pair_h(c: &CartanMatrix, i: usize, w: &Weight) -> i64 {
    let base = if i == 0 { w.level } else { 0 };
    base + (0..c.size()).map(|j| c.entry(i, j) * w.alpha[j]).sum::<i64>()
}

/// Pairing with the scaling element d: the coefficient of alpha_0.
pub fn pair_d(w: &Weight) -> i64 {
    w.alpha[0]
}

pub fn reflect(c: &CartanMatrix, i: usize, w: &Weight) -> Weight {
    let h = pair_h(c, i, w);
    let mut out = w.clone();
    out.alpha[i] -= h;
    out
}

/// Applies reflections in the listed order (first entry first).
pub fn apply_word(c: &CartanMatrix, word: &[usize], w: &Weight) -> Weight {
    word.iter().fold(w.clone(), |acc, &i| reflect(c, i, &acc))
}

/// Finds a shortest word w and k >= 0 with `mu = w(Lambda_0) - k delta`, searching words up to `depth`.
pub fn orbit_search(ell: usize, mu: &Weight, depth: usize) -> Result<Option<(Vec<usize>, i64)>> {
    let c = CartanMatrix::affine_a(ell)?;
    if mu.alpha.len() != ell + 1 {
        return Err(Error::Invalid(format!("weight has {} root coordinates, expected {}", mu.alpha.len(), ell + 1)));
    }
    if mu.level != 1 {
        return Ok(None);
    }
    let start = Weight::lambda0(ell);
    let mut seen: HashMap<Weight, Vec<usize>> = HashMap::new();
    seen.insert(start.clone(), Vec::new());
    let mut queue = VecDeque::from([start]);
    while let Some(w) = queue.pop_front() {
        let word = seen[&w].clone();
        let diff = w.sub(mu);
        let k = diff.alpha[0];
        if k >= 0 && diff.alpha.iter().all(|&a| a == k) {
            return Ok(Some((word, k)));
        }
        if word.len() == depth {
            continue;
        }
        for i in 0..=ell {
            let r = reflect(&c, i, &w);
            if !seen.contains_key(&r) {
                let mut nw = word.clone();
                nw.push(i);
                seen.insert(r.clone(), nw);
                queue.push_back(r);
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_matrices() {
        assert_eq!(CartanMatrix::affine_a(1).unwrap().rows(), &[vec![2, -2], vec![-2, 2]]);
        let c = CartanMatrix::affine_a(2).unwrap();
        assert_eq!(c.rows(), &[vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]);
        assert!(CartanMatrix::affine_a(0).is_err());
    }

    #[test]
    fn delta_is_null() {
        for ell in 1..6 {
            let c = CartanMatrix::affine_a(ell).unwrap();
            let d = Weight::delta(ell);
            for i in 0..=ell {
                assert_eq!(pair_h(&c, i, &d), 0);
            }
        }
    }

    #[test]
    fn reflection_of_lambda0() {
        let c = CartanMatrix::affine_a(1).unwrap();
        let l0 = Weight::lambda0(1);
        assert_eq!(reflect(&c, 0, &l0), l0.sub(&Weight::simple_root(1, 0)));
        assert_eq!(reflect(&c, 1, &l0), l0);
    }

    #[test]
    fn orbit_of_two_delta_minus_alpha0() {
        let mu = Weight::lambda0(1).sub(&Weight::delta(1).scale(2)).add(&Weight::simple_root(1, 0));
        assert_eq!(orbit_search(1, &mu, 20).unwrap(), Some((vec![0, 1], 0)));
    }
}
