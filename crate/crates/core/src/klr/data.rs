//! The polynomials Q_{i,j} of the normalized affine type A presentation.

use crate::cartan::CartanMatrix;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::Q;
use num_traits::{One, Zero};

/// Cartan data of A_ell^(1) together with a family `Q_{i,j}(u, v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KlrData {
    pub ell: usize,
    pub lambda: Q,
    cartan: CartanMatrix,
    q: Vec<Vec<Poly>>,
}

impl KlrData {
    /// The normalized family: for ell = 1, `Q_{0,1} = u^2 + lambda uv + v^2`; for ell >= 2,
    /// `Q_{i,i+1} = u + v` and `Q_{ell,0} = u + lambda v`.
    pub fn new(ell: usize, lambda: Q) -> Result<Self> {
        let cartan = CartanMatrix::affine_a(ell)?;
        let n = ell + 1;
        let u = Poly::var(2, 0);
        let v = Poly::var(2, 1);
        let mut q = vec![vec![Poly::zero(2); n]; n];
        let swap = |p: &Poly| p.compose(&[v.clone(), u.clone()]);
        if ell == 1 {
            let p = u.mul(&u).add(&u.mul(&v).scale(&lambda)).add(&v.mul(&v));
            q[1][0] = swap(&p);
            q[0][1] = p;
        } else {
            for i in 0..n {
                for j in 0..n {
                    if i != j && !cartan.adjacent(i, j) {
                        q[i][j] = Poly::constant(2, Q::one());
                    }
                }
            }
            for i in 0..ell {
                let p = u.add(&v);
                q[i + 1][i] = swap(&p);
                q[i][i + 1] = p;
            }
            let p = u.add(&v.scale(&lambda));
            q[0][ell] = swap(&p);
            q[ell][0] = p;
        }
        Ok(KlrData { ell, lambda, cartan, q })
    }

    /// Family with explicitly supplied polynomials, indexed `[i][j]`.
    pub fn with_polys(ell: usize, lambda: Q, q: Vec<Vec<Poly>>) -> Result<Self> {
        let cartan = CartanMatrix::affine_a(ell)?;
        if q.len() != ell + 1 || q.iter().any(|r| r.len() != ell + 1 || r.iter().any(|p| p.nvars() != 2)) {
            return Err(Error::Invalid("polynomial table has the wrong shape".into()));
        }
        Ok(KlrData { ell, lambda, cartan, q })
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn q_poly(&self, i: usize, j: usize) -> &Poly {
        &self.q[i][j]
    }

    /// `(Q_{i,j}(u,v) - Q_{i,j}(w,v)) / (u - w)` in variables (u, v, w).
    pub fn braid_correction(&self, i: usize, j: usize) -> Poly {
        let u = Poly::var(3, 0);
        let v = Poly::var(3, 1);
        let w = Poly::var(3, 2);
        let p = &self.q[i][j];
        let diff = p.compose(&[u, v.clone()]).sub(&p.compose(&[w, v]));
        diff.div_by_difference(0, 2).expect("difference quotient of a polynomial is exact")
    }

    /// `Q'_{i,j}(u,v) = c_{ij}^2 Q_{i,j}(c_{ii} u, c_{jj} v)` for a symmetric matrix with nonzero entries.
    pub fn rescaled(&self, c: &[Vec<Q>]) -> Result<Self> {
        let n = self.ell + 1;
        if c.len() != n || c.iter().any(|r| r.len() != n) {
            return Err(Error::Invalid("rescaling matrix has the wrong shape".into()));
        }
        for i in 0..n {
            for j in 0..n {
                if c[i][j].is_zero() || c[i][j] != c[j][i] {
                    return Err(Error::Invalid("rescaling matrix must be symmetric with nonzero entries".into()));
                }
            }
        }
        let u = Poly::var(2, 0);
        let v = Poly::var(2, 1);
        let mut q = self.q.clone();
        for i in 0..n {
            for j in 0..n {
                let s = self.q[i][j].compose(&[u.scale(&c[i][i]), v.scale(&c[j][j])]);
                q[i][j] = s.scale(&(&c[i][j] * &c[i][j]));
            }
        }
        Ok(KlrData { ell: self.ell, lambda: self.lambda.clone(), cartan: self.cartan.clone(), q })
    }

    /// Checks `Q_{i,j}(u,v) = Q_{j,i}(v,u)` and `Q_{i,i} = 0`.
    pub fn is_consistent(&self) -> bool {
        let u = Poly::var(2, 0);
        let v = Poly::var(2, 1);
        let n = self.ell + 1;
        (0..n).all(|i| {
            self.q[i][i].is_zero() && (0..n).all(|j| self.q[i][j] == self.q[j][i].compose(&[v.clone(), u.clone()]))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qf};

    #[test]
    fn rank_one_polynomial() {
        let d = KlrData::new(1, qf(3, 2)).unwrap();
        let p = d.q_poly(0, 1);
        assert_eq!(p.coeff(&[2, 0]), q(1));
        assert_eq!(p.coeff(&[1, 1]), qf(3, 2));
        assert_eq!(p.coeff(&[0, 2]), q(1));
        assert!(d.is_consistent());
        let b = d.braid_correction(0, 1);
        assert_eq!(b.coeff(&[1, 0, 0]), q(1));
        assert_eq!(b.coeff(&[0, 1, 0]), qf(3, 2));
        assert_eq!(b.coeff(&[0, 0, 1]), q(1));
    }

    #[test]
    fn higher_rank_polynomials() {
        let d = KlrData::new(3, q(5)).unwrap();
        assert_eq!(d.q_poly(1, 3), &Poly::constant(2, q(1)));
        assert_eq!(d.braid_correction(1, 2), Poly::constant(3, q(1)));
        assert_eq!(d.braid_correction(0, 3), Poly::constant(3, q(5)));
        assert_eq!(d.braid_correction(3, 0), Poly::constant(3, q(1)));
        assert!(d.is_consistent());
    }
}
