//! Partitions, standard tableaux, residues and the combinatorial dimension formulas.

use crate::cartan::Weight;
use crate::error::{Error, Result};
use std::collections::HashMap;

pub type Partition = Vec<usize>;

/// Rows of entries `1..=n`, each row increasing left to right.
pub type Tableau = Vec<Vec<usize>>;

/// All partitions of `n`, largest first in lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(rem: usize, max: usize, cur: &mut Partition, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn size(shape: &[usize]) -> usize {
    shape.iter().sum()
}

/// Residue of the cell in row `i`, column `j` (both starting at 1).
pub fn residue(ell: usize, i: usize, j: usize) -> usize {
    let m = (ell + 1) as i64;
    (j as i64 - i as i64).rem_euclid(m) as usize
}

pub fn residue_word(ell: usize, t: &Tableau) -> Vec<usize> {
    let n: usize = t.iter().map(|r| r.len()).sum();
    let mut w = vec![0; n];
    for (i, row) in t.iter().enumerate() {
        for (j, &e) in row.iter().enumerate() {
            w[e - 1] = residue(ell, i + 1, j + 1);
        }
    }
    w
}

pub fn is_standard(t: &Tableau) -> bool {
    for (i, row) in t.iter().enumerate() {
        for j in 0..row.len() {
            if j + 1 < row.len() && row[j] >= row[j + 1] {
                return false;
            }
            if i > 0 && (j >= t[i - 1].len() || t[i - 1][j] >= row[j]) {
                return false;
            }
        }
    }
    true
}

/// Swaps entries k and k+1.
pub fn swap_entries(t: &Tableau, k: usize) -> Tableau {
    t.iter()
        .map(|row| row.iter().map(|&e| if e == k { k + 1 } else if e == k + 1 { k } else { e }).collect())
        .collect()
}

/// Fills `shape` box by box, following residue word `word` if given.
fn fill(shape: &[usize], ell: usize, word: Option<&[usize]>, visit: &mut dyn FnMut(&Tableau)) {
    let n = size(shape);
    let mut t: Tableau = vec![Vec::new(); shape.len()];
    fn rec(
        k: usize,
        n: usize,
        shape: &[usize],
        ell: usize,
        word: Option<&[usize]>,
        t: &mut Tableau,
        visit: &mut dyn FnMut(&Tableau),
    ) {
        if k > n {
            visit(t);
            return;
        }
        for i in 0..shape.len() {
            let j = t[i].len();
            if j == shape[i] || (i > 0 && t[i - 1].len() <= j) {
                continue;
            }
            if let Some(w) = word {
                if residue(ell, i + 1, j + 1) != w[k - 1] {
                    continue;
                }
            }
            t[i].push(k);
            rec(k + 1, n, shape, ell, word, t, visit);
            t[i].pop();
        }
    }
    rec(1, n, shape, ell, word, &mut t, visit);
}

pub fn standard_tableaux(shape: &[usize]) -> Vec<Tableau> {
    let mut out = Vec::new();
    fill(shape, 1, None, &mut |t| out.push(t.clone()));
    out
}

/// Number of standard tableaux, by peeling removable corners.
pub fn count_standard(shape: &[usize]) -> u128 {
    fn go(shape: Vec<usize>, memo: &mut HashMap<Vec<usize>, u128>) -> u128 {
        if size(&shape) <= 1 {
            return 1;
        }
        if let Some(&v) = memo.get(&shape) {
            return v;
        }
        let mut total = 0;
        for i in 0..shape.len() {
            let corner = i + 1 == shape.len() || shape[i + 1] < shape[i];
            if corner {
                let mut s = shape.clone();
                s[i] -= 1;
                if s[i] == 0 {
                    s.pop();
                }
                total += go(s, memo);
            }
        }
        memo.insert(shape, total);
        total
    }
    go(shape.to_vec(), &mut HashMap::new())
}

/// Number of standard tableaux of `shape` with residue word `nu`.
pub fn kostka_residue(ell: usize, shape: &[usize], nu: &[usize]) -> u128 {
    if nu.len() != size(shape) {
        return 0;
    }
    let mut c = 0u128;
    fill(shape, ell, Some(nu), &mut |_| c += 1);
    c
}

/// Multiset of residues of the cells, as root coordinates.
pub fn content(ell: usize, shape: &[usize]) -> Vec<i64> {
    let mut c = vec![0i64; ell + 1];
    for (i, &len) in shape.iter().enumerate() {
        for j in 0..len {
            c[residue(ell, i + 1, j + 1)] += 1;
        }
    }
    c
}

/// `Lambda_0 - sum of alpha_res(c)` over the cells.
pub fn weight_of(ell: usize, shape: &[usize]) -> Weight {
    Weight { level: 1, alpha: content(ell, shape).iter().map(|c| -c).collect() }
}

fn check_beta(ell: usize, beta: &[i64]) -> Result<usize> {
    if beta.len() != ell + 1 || beta.iter().any(|&b| b < 0) {
        return Err(Error::Invalid(format!("beta must have {} nonnegative coordinates", ell + 1)));
    }
    Ok(beta.iter().sum::<i64>() as usize)
}

pub fn block_partitions(ell: usize, beta: &[i64]) -> Result<Vec<Partition>> {
    let n = check_beta(ell, beta)?;
    Ok(partitions(n).into_iter().filter(|p| content(ell, p) == beta).collect())
}

/// Dimension of the block `R^{Lambda_0}(beta)`.
pub fn dim_block(ell: usize, beta: &[i64]) -> Result<u128> {
    Ok(block_partitions(ell, beta)?.iter().map(|p| count_standard(p).pow(2)).sum())
}

/// Dimension of `R^{Lambda_0}_n` as the sum of its block dimensions; errors if that sum
/// disagrees with `n!`.
pub fn dim_full(ell: usize, n: usize) -> Result<u128> {
    let mut contents: Vec<Vec<i64>> = partitions(n).iter().map(|p| content(ell, p)).collect();
    contents.sort();
    contents.dedup();
    let mut s = 0u128;
    for beta in &contents {
        s += dim_block(ell, beta)?;
    }
    let f: u128 = (1..=n as u128).product();
    if s != f {
        return Err(Error::Invalid(format!("block dimensions sum to {s}, but {n}! = {f}")));
    }
    Ok(s)
}

/// `dim e(nu1) R e(nu2)`.
pub fn dim_idempotent_hom(ell: usize, nu1: &[usize], nu2: &[usize]) -> Result<u128> {
    if nu1.len() != nu2.len() {
        return Err(Error::Invalid("residue words of different lengths".into()));
    }
    if nu1.iter().chain(nu2).any(|&r| r > ell) {
        return Err(Error::Invalid(format!("residues must lie in 0..={ell}")));
    }
    Ok(partitions(nu1.len())
        .iter()
        .map(|p| kostka_residue(ell, p, nu1) * kostka_residue(ell, p, nu2))
        .sum())
}

/// Sum of `dim e(a) R e(b)` over pairs from `words`.
pub fn dim_corner(ell: usize, words: &[Vec<usize>]) -> Result<u128> {
    let mut t = 0;
    for a in words {
        for b in words {
            t += dim_idempotent_hom(ell, a, b)?;
        }
    }
    Ok(t)
}

/// Rows (0-based) where a box of residue `i` can be added.
pub fn addable(ell: usize, shape: &[usize], i: usize) -> Vec<usize> {
    (0..=shape.len())
        .filter(|&r| {
            let len = shape.get(r).copied().unwrap_or(0);
            (r == 0 || shape[r - 1] > len) && residue(ell, r + 1, len + 1) == i
        })
        .collect()
}

/// Rows (0-based) where a box of residue `i` can be removed.
pub fn removable(ell: usize, shape: &[usize], i: usize) -> Vec<usize> {
    (0..shape.len())
        .filter(|&r| {
            let len = shape[r];
            (r + 1 == shape.len() || shape[r + 1] < len) && residue(ell, r + 1, len) == i
        })
        .collect()
}

/// Partitions obtained by removing one box of residue `i`.
pub fn fock_e(ell: usize, i: usize, shape: &[usize]) -> Vec<Partition> {
    removable(ell, shape, i)
        .into_iter()
        .map(|r| {
            let mut s = shape.to_vec();
            s[r] -= 1;
            if s[r] == 0 {
                s.pop();
            }
            s
        })
        .collect()
}

/// Partitions obtained by adding one box of residue `i`.
pub fn fock_f(ell: usize, i: usize, shape: &[usize]) -> Vec<Partition> {
    addable(ell, shape, i)
        .into_iter()
        .map(|r| {
            let mut s = shape.to_vec();
            if r == s.len() {
                s.push(1);
            } else {
                s[r] += 1;
            }
            s
        })
        .collect()
}

pub fn word_to_string(nu: &[usize]) -> String {
    nu.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(if nu.iter().any(|&r| r > 9) { "," } else { "" })
}

/// Parses `0110` or `0,1,1,0`.
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let bad = || Error::Parse(format!("not a residue word: {s:?}"));
    if s.contains(',') {
        s.split(',').map(|p| p.trim().parse::<usize>().map_err(|_| bad())).collect()
    } else {
        s.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_of_four() {
        assert_eq!(partitions(4), vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]);
    }

    #[test]
    fn residues_of_hook() {
        let t = vec![vec![1, 2], vec![3]];
        assert_eq!(residue_word(1, &t), vec![0, 1, 1]);
        assert_eq!(residue_word(2, &t), vec![0, 1, 2]);
    }

    #[test]
    fn kostka_of_two_two() {
        assert_eq!(kostka_residue(1, &[2, 2], &[0, 1, 1, 0]), 2);
        assert_eq!(kostka_residue(1, &[2, 2], &[0, 1, 0, 1]), 0);
    }

    #[test]
    fn fock_moves() {
        assert_eq!(fock_f(1, 1, &[1]), vec![vec![2], vec![1, 1]]);
        assert_eq!(fock_e(1, 0, &[2, 1, 1]), vec![vec![2, 1]]);
    }

    #[test]
    fn word_parsing() {
        assert_eq!(parse_word("0110").unwrap(), vec![0, 1, 1, 0]);
        assert_eq!(parse_word("0,10,2").unwrap(), vec![0, 10, 2]);
        assert_eq!(word_to_string(&[0, 1, 1]), "011");
    }
}
