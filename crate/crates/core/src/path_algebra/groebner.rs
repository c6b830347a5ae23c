//! Noncommutative Buchberger completion on a path algebra with the degree-lexicographic order.
//!
//! Words are compared by length, then lexicographically by arrow index, then by start vertex.
//! A relation whose leading word is a trivial path kills that vertex; every path through a
//! killed vertex is zero.

use super::presentation::{Path, Presentation, Quiver};
use crate::error::{Error, Result};
use crate::rational::Q;
use num_traits::{One, Zero};
use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap, HashMap};

/// A path with the monomial order as its derived order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    pub len: usize,
    pub arrows: Vec<usize>,
    pub start: usize,
}

impl Word {
    pub fn from_path(p: &Path) -> Self {
        Word { len: p.arrows.len(), arrows: p.arrows.clone(), start: p.start }
    }

    pub fn to_path(&self) -> Path {
        Path { start: self.start, arrows: self.arrows.clone() }
    }

    fn build(start: usize, arrows: Vec<usize>) -> Self {
        Word { len: arrows.len(), arrows, start }
    }
}

pub type Poly = BTreeMap<Word, Q>;

fn add_term(p: &mut Poly, w: Word, c: Q) {
    if c.is_zero() {
        return;
    }
    let e = p.entry(w.clone()).or_insert_with(Q::zero);
    *e += c;
    if e.is_zero() {
        p.remove(&w);
    }
}

#[derive(Clone, Debug)]
struct Rule {
    lm: Word,
    /// Monic; includes the leading word.
    poly: Poly,
}

/// A completed rewriting system: reduces any path to its normal form.
#[derive(Clone, Debug)]
pub struct Rewriter {
    pub quiver: Quiver,
    rules: Vec<Option<Rule>>,
    index: HashMap<Vec<usize>, usize>,
    dead: Vec<bool>,
    pub max_len: usize,
}

impl Rewriter {
    fn new(quiver: Quiver, max_len: usize) -> Self {
        let nv = quiver.vertices.len();
        Rewriter { quiver, rules: Vec::new(), index: HashMap::new(), dead: vec![false; nv], max_len }
    }

    pub fn is_dead(&self, v: usize) -> bool {
        self.dead[v]
    }

    pub fn leading_words(&self) -> Vec<Path> {
        self.rules.iter().flatten().map(|r| r.lm.to_path()).collect()
    }

    fn through_dead(&self, w: &Word) -> bool {
        if self.dead[w.start] {
            return true;
        }
        w.arrows.iter().any(|&a| self.dead[self.quiver.arrows[a].tgt])
    }

    fn find_divisor(&self, w: &Word) -> Option<(usize, usize, usize)> {
        let n = w.arrows.len();
        for i in 0..n {
            for j in i + 1..=n {
                if let Some(&r) = self.index.get(&w.arrows[i..j]) {
                    return Some((r, i, j));
                }
            }
        }
        None
    }

    pub fn reduce(&self, p: &Poly) -> Poly {
        let mut work = p.clone();
        let mut out = Poly::new();
        while let Some((w, c)) = work.pop_last() {
            if self.through_dead(&w) {
                continue;
            }
            match self.find_divisor(&w) {
                None => {
                    out.insert(w, c);
                }
                Some((r, i, j)) => {
                    let rule = self.rules[r].as_ref().unwrap();
                    for (t, tc) in rule.poly.iter().rev().skip(1) {
                        let mut arrows = w.arrows[..i].to_vec();
                        arrows.extend_from_slice(&t.arrows);
                        arrows.extend_from_slice(&w.arrows[j..]);
                        add_term(&mut work, Word::build(w.start, arrows), -(&c * tc));
                    }
                }
            }
        }
        out
    }

    pub fn reduce_path(&self, p: &Path) -> Poly {
        let mut poly = Poly::new();
        poly.insert(Word::from_path(p), Q::one());
        self.reduce(&poly)
    }

    /// All normal words, grouped by start vertex, in increasing order.
    pub fn normal_words(&self) -> Result<Vec<Path>> {
        let mut out = Vec::new();
        for v in 0..self.quiver.vertices.len() {
            if self.dead[v] {
                continue;
            }
            let mut stack = vec![Word::build(v, Vec::new())];
            while let Some(w) = stack.pop() {
                let end = w.arrows.last().map_or(w.start, |&a| self.quiver.arrows[a].tgt);
                for (ai, a) in self.quiver.arrows.iter().enumerate() {
                    if a.src != end || self.dead[a.tgt] {
                        continue;
                    }
                    let mut arrows = w.arrows.clone();
                    arrows.push(ai);
                    let n = arrows.len();
                    let normal = (0..n).all(|i| !self.index.contains_key(&arrows[i..]));
                    if normal {
                        if n >= self.max_len {
                            return Err(Error::HorizonExceeded {
                                max_len: self.max_len,
                                witness: self.quiver.path_name(&Path { start: v, arrows }),
                            });
                        }
                        stack.push(Word::build(v, arrows));
                    }
                }
                out.push(w);
            }
        }
        out.sort();
        Ok(out.into_iter().map(|w| w.to_path()).collect())
    }

    fn word_name(&self, w: &Word) -> String {
        self.quiver.path_name(&w.to_path())
    }
}

fn is_subword(small: &[usize], big: &[usize]) -> bool {
    small.len() <= big.len() && big.windows(small.len()).any(|w| w == small)
}

fn mul_left(start: usize, prefix: &[usize], p: &Poly) -> Poly {
    let mut out = Poly::new();
    for (w, c) in p {
        let mut arrows = prefix.to_vec();
        arrows.extend_from_slice(&w.arrows);
        add_term(&mut out, Word::build(start, arrows), c.clone());
    }
    out
}

fn mul_right(p: &Poly, suffix: &[usize]) -> Poly {
    let mut out = Poly::new();
    for (w, c) in p {
        let mut arrows = w.arrows.clone();
        arrows.extend_from_slice(suffix);
        add_term(&mut out, Word::build(w.start, arrows), c.clone());
    }
    out
}

/// Completes the relations of `pres` to a rewriting system.
pub fn complete(pres: &Presentation, max_len: usize) -> Result<Rewriter> {
    pres.validate()?;
    let mut rw = Rewriter::new(pres.quiver.clone(), max_len);
    let mut store: Vec<Poly> = Vec::new();
    let mut heap: BinaryHeap<Reverse<(usize, usize)>> = BinaryHeap::new();
    let push = |p: Poly, store: &mut Vec<Poly>, heap: &mut BinaryHeap<Reverse<(usize, usize)>>| {
        if p.is_empty() {
            return;
        }
        let pri = p.keys().next_back().map_or(0, |w| w.len);
        heap.push(Reverse((pri, store.len())));
        store.push(p);
    };
    for r in &pres.relations {
        let mut p = Poly::new();
        for (path, c) in r {
            add_term(&mut p, Word::from_path(path), c.clone());
        }
        push(p, &mut store, &mut heap);
    }
    let src = |q: &Quiver, a: usize| q.arrows[a].src;
    while let Some(Reverse((_, id))) = heap.pop() {
        let f = std::mem::take(&mut store[id]);
        let mut f = rw.reduce(&f);
        let Some((lm, lc)) = f.last_key_value().map(|(w, c)| (w.clone(), c.clone())) else { continue };
        let inv = lc.recip();
        for c in f.values_mut() {
            *c *= &inv;
        }
        if lm.len == 0 {
            rw.dead[lm.start] = true;
            for slot in 0..rw.rules.len() {
                let touches = rw.rules[slot].as_ref().is_some_and(|r| r.poly.keys().any(|w| rw.through_dead(w)));
                if touches {
                    let r = rw.rules[slot].take().unwrap();
                    rw.index.remove(&r.lm.arrows);
                    push(r.poly, &mut store, &mut heap);
                }
            }
            continue;
        }
        if lm.len > max_len {
            return Err(Error::HorizonExceeded { max_len, witness: rw.word_name(&lm) });
        }
        for slot in 0..rw.rules.len() {
            let contains = rw.rules[slot].as_ref().is_some_and(|r| is_subword(&lm.arrows, &r.lm.arrows));
            if contains {
                let r = rw.rules[slot].take().unwrap();
                rw.index.remove(&r.lm.arrows);
                push(r.poly, &mut store, &mut heap);
            }
        }
        let new_id = rw.rules.len();
        rw.index.insert(lm.arrows.clone(), new_id);
        rw.rules.push(Some(Rule { lm: lm.clone(), poly: f }));
        let new_rule = rw.rules[new_id].clone().unwrap();
        for slot in 0..rw.rules.len() {
            let Some(g) = rw.rules[slot].clone() else { continue };
            for (a, b) in [(&new_rule, &g), (&g, &new_rule)] {
                let (l1, l2) = (&a.lm.arrows, &b.lm.arrows);
                for k in 1..l1.len().min(l2.len()) {
                    if l1[l1.len() - k..] != l2[..k] {
                        continue;
                    }
                    let total = l1.len() + l2.len() - k;
                    if total > max_len {
                        let mut w = l1.clone();
                        w.extend_from_slice(&l2[k..]);
                        let start = src(&rw.quiver, w[0]);
                        return Err(Error::HorizonExceeded { max_len, witness: rw.word_name(&Word::build(start, w)) });
                    }
                    let left = mul_right(&a.poly, &l2[k..]);
                    let right = mul_left(src(&rw.quiver, l1[0]), &l1[..l1.len() - k], &b.poly);
                    let mut s = left;
                    for (w, c) in right {
                        add_term(&mut s, w, -c);
                    }
                    push(s, &mut store, &mut heap);
                }
                if std::ptr::eq(a, b) {
                    break;
                }
            }
        }
    }
    Ok(rw)
}
