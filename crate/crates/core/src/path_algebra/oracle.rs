//! Independent dimension count for bounded quiver algebras: enumerate paths up to a horizon and
//! eliminate the span of all `u r w`, without any rewriting system.

use super::presentation::{Path, Presentation};
use crate::error::{Error, Result};
use crate::rational::Q;
use num_traits::Zero;
use std::collections::{BTreeMap, HashMap, HashSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleDims {
    pub dim: usize,
    /// `graded[s][t]` counts basis paths from `s` to `t`.
    pub graded: Vec<Vec<usize>>,
    pub horizon: usize,
}

#[derive(Default)]
struct SparseSpan {
    pivots: HashMap<usize, BTreeMap<usize, Q>>,
}

impl SparseSpan {
    fn reduce(&self, mut row: BTreeMap<usize, Q>) -> BTreeMap<usize, Q> {
        let mut out = BTreeMap::new();
        while let Some((lead, c)) = row.pop_last() {
            match self.pivots.get(&lead) {
                Some(p) => {
                    for (k, v) in p.iter().rev().skip(1) {
                        let e = row.entry(*k).or_insert_with(Q::zero);
                        *e -= &c * v;
                        if e.is_zero() {
                            row.remove(k);
                        }
                    }
                }
                None => {
                    out.insert(lead, c);
                }
            }
        }
        out
    }

    fn insert(&mut self, row: BTreeMap<usize, Q>) {
        // reduce only the leading terms, keeping the row sparse
        let mut row = row;
        loop {
            let Some((&lead, c)) = row.last_key_value() else { return };
            let c = c.clone();
            match self.pivots.get(&lead) {
                Some(p) => {
                    for (k, v) in p {
                        let e = row.entry(*k).or_insert_with(Q::zero);
                        *e -= &c * v;
                        if e.is_zero() {
                            row.remove(k);
                        }
                    }
                }
                None => {
                    let inv = c.recip();
                    for v in row.values_mut() {
                        *v *= &inv;
                    }
                    self.pivots.insert(lead, row);
                    return;
                }
            }
        }
    }

    fn contains(&self, idx: usize) -> bool {
        let mut row = BTreeMap::new();
        row.insert(idx, Q::from_integer(1.into()));
        self.reduce(row).is_empty()
    }
}

const PATH_LIMIT: usize = 20_000;

/// Dimensions of `kQ / I` by linear elimination over all paths up to a growing horizon.
pub fn brute_force_dims(pres: &Presentation, max_horizon: usize) -> Result<OracleDims> {
    pres.validate()?;
    let quiver = &pres.quiver;
    let nv = quiver.vertices.len();
    let mut monomials: HashSet<Vec<usize>> = HashSet::new();
    let mut binomials = Vec::new();
    let mut max_rel = 1;
    for r in &pres.relations {
        let terms: Vec<&(Path, Q)> = r.iter().filter(|(_, c)| !c.is_zero()).collect();
        if terms.iter().any(|(p, _)| p.is_empty()) {
            return Err(Error::Unsupported("the path oracle needs relations without idempotent terms".into()));
        }
        max_rel = max_rel.max(terms.iter().map(|(p, _)| p.len()).max().unwrap_or(0));
        if terms.len() == 1 {
            monomials.insert(terms[0].0.arrows.clone());
        } else if !terms.is_empty() {
            binomials.push(terms);
        }
    }
    let is_zero_path = |a: &[usize]| (0..a.len()).any(|i| (i + 1..=a.len()).any(|j| monomials.contains(&a[i..j])));

    let paths_up_to = |h: usize| -> Vec<Path> {
        let mut out = Vec::new();
        for v in 0..nv {
            let mut stack = vec![Path::vertex(v)];
            while let Some(p) = stack.pop() {
                if p.len() < h {
                    let end = quiver.end(&p);
                    for (ai, a) in quiver.arrows.iter().enumerate() {
                        if a.src == end {
                            let mut arrows = p.arrows.clone();
                            arrows.push(ai);
                            if !(0..arrows.len()).any(|i| monomials.contains(&arrows[i..])) {
                                stack.push(Path { start: v, arrows });
                            }
                        }
                    }
                }
                out.push(p);
            }
        }
        out
    };

    let compute = |h: usize| -> (Vec<Path>, SparseSpan) {
        let paths = paths_up_to(h);
        let index: HashMap<&Path, usize> = paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut by_end: Vec<Vec<&Path>> = vec![Vec::new(); nv];
        let mut by_start: Vec<Vec<&Path>> = vec![Vec::new(); nv];
        for p in &paths {
            by_end[quiver.end(p)].push(p);
            by_start[p.start].push(p);
        }
        let mut span = SparseSpan::default();
        for terms in &binomials {
            let (s, t) = (terms[0].0.start, quiver.end(&terms[0].0));
            let shortest = terms.iter().map(|(p, _)| p.len()).min().unwrap();
            for u in &by_end[s] {
                for w in &by_start[t] {
                    if u.len() + shortest + w.len() > h {
                        continue;
                    }
                    // terms through a zero monomial vanish; the others must fit the horizon
                    let mut row = BTreeMap::new();
                    let mut fits = true;
                    for (p, c) in terms {
                        let mut arrows = u.arrows.clone();
                        arrows.extend_from_slice(&p.arrows);
                        arrows.extend_from_slice(&w.arrows);
                        if is_zero_path(&arrows) {
                            continue;
                        }
                        let full = Path { start: u.start, arrows };
                        match index.get(&full) {
                            Some(&k) => {
                                let e = row.entry(k).or_insert_with(Q::zero);
                                *e += c;
                            }
                            None => fits = false,
                        }
                    }
                    if !fits {
                        continue;
                    }
                    row.retain(|_, c: &mut Q| !c.is_zero());
                    span.insert(row);
                }
            }
        }
        (paths, span)
    };

    // At horizon h the quotient count is an upper bound for the true dimension once every path
    // from some length on lies in the span; accept it when it stays fixed for max_rel + 1
    // consecutive horizons.
    let mut history: Vec<usize> = Vec::new();
    for h in max_rel..=max_horizon {
        if paths_up_to(h).len() > PATH_LIMIT {
            return Err(Error::Unsupported(format!("more than {PATH_LIMIT} nonzero paths up to length {h}")));
        }
        let (paths, span) = compute(h);
        let pivots: HashSet<usize> = span.pivots.keys().copied().collect();
        let mut full_length = vec![true; h + 1];
        for (i, p) in paths.iter().enumerate() {
            if !span.contains(i) {
                full_length[p.len()] = false;
            }
        }
        let tail = full_length.iter().rev().take_while(|&&b| b).count();
        if tail <= max_rel {
            history.clear();
            continue;
        }
        let mut graded = vec![vec![0; nv]; nv];
        let mut dim = 0;
        for (i, p) in paths.iter().enumerate() {
            if !pivots.contains(&i) {
                graded[p.start][quiver.end(p)] += 1;
                dim += 1;
            }
        }
        history.push(dim);
        if history.len() > max_rel && history.iter().rev().take(max_rel + 1).all(|&d| d == dim) {
            return Ok(OracleDims { dim, graded, horizon: h });
        }
    }
    Err(Error::HorizonExceeded { max_len: max_horizon, witness: "path oracle did not saturate".into() })
}
