//! Quivers, paths and presentations by relations, with the JSON exchange format.

use crate::error::{Error, Result};
use crate::rational::{fmt_q, parse_q, Q};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: &[&str], arrows: &[(&str, usize, usize)]) -> Result<Self> {
        let q = Quiver {
            vertices: vertices.iter().map(|s| s.to_string()).collect(),
            arrows: arrows.iter().map(|(n, s, t)| Arrow { name: n.to_string(), src: *s, tgt: *t }).collect(),
        };
        q.validate()?;
        Ok(q)
    }

    pub fn validate(&self) -> Result<()> {
        let nv = self.vertices.len();
        for (i, a) in self.arrows.iter().enumerate() {
            if a.src >= nv || a.tgt >= nv {
                return Err(Error::Invalid(format!("arrow {} has an endpoint outside the vertex set", a.name)));
            }
            if self.arrows[..i].iter().any(|b| b.name == a.name) {
                return Err(Error::Invalid(format!("arrow name {} is repeated", a.name)));
            }
        }
        for (i, v) in self.vertices.iter().enumerate() {
            if self.vertices[..i].contains(v) {
                return Err(Error::Invalid(format!("vertex {v} is repeated")));
            }
        }
        Ok(())
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    /// Path from arrow names (multiplication order). Empty paths need an explicit vertex.
    pub fn path(&self, names: &[&str]) -> Result<Path> {
        let arrows: Vec<usize> = names
            .iter()
            .map(|n| self.arrow_index(n).ok_or_else(|| Error::Invalid(format!("unknown arrow {n}"))))
            .collect::<Result<_>>()?;
        let start = arrows.first().map(|&a| self.arrows[a].src).ok_or_else(|| Error::Invalid("empty path needs a vertex".into()))?;
        let p = Path { start, arrows };
        self.check_path(&p)?;
        Ok(p)
    }

    pub fn check_path(&self, p: &Path) -> Result<()> {
        let mut v = p.start;
        if v >= self.vertices.len() {
            return Err(Error::Invalid("path starts outside the vertex set".into()));
        }
        for &a in &p.arrows {
            let ar = self.arrows.get(a).ok_or_else(|| Error::Invalid("unknown arrow index".into()))?;
            if ar.src != v {
                return Err(Error::Invalid(format!("arrows do not compose at {}", ar.name)));
            }
            v = ar.tgt;
        }
        Ok(())
    }

    pub fn end(&self, p: &Path) -> usize {
        p.arrows.last().map_or(p.start, |&a| self.arrows[a].tgt)
    }

    pub fn path_name(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            format!("e_{}", self.vertices[p.start])
        } else {
            p.arrows.iter().map(|&a| self.arrows[a].name.as_str()).collect::<Vec<_>>().join(" ")
        }
    }

    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self.arrows.iter().map(|a| Arrow { name: a.name.clone(), src: a.tgt, tgt: a.src }).collect(),
        }
    }
}

/// A path written in multiplication order; `start` is its source (left) vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub start: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn vertex(v: usize) -> Self {
        Path { start: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }
}

pub type Relation = Vec<(Path, Q)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
    /// Trace values on listed paths; unlisted basis paths get 0.
    pub trace: Option<Vec<(Path, Q)>>,
}

impl Presentation {
    pub fn new(quiver: Quiver, relations: Vec<Relation>) -> Result<Self> {
        let p = Presentation { quiver, relations, trace: None };
        p.validate()?;
        Ok(p)
    }

    /// Builds relations from `(coefficient, arrow names)` terms.
    pub fn from_terms(quiver: Quiver, rels: &[Vec<(Q, Vec<&str>)>]) -> Result<Self> {
        let relations = rels
            .iter()
            .map(|r| r.iter().map(|(c, names)| Ok((quiver.path(names)?, c.clone()))).collect::<Result<Relation>>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(quiver, relations)
    }

    pub fn with_trace(mut self, trace: Vec<(Path, Q)>) -> Self {
        self.trace = Some(trace);
        self
    }

    /// Paths in each relation must be parallel.
    pub fn validate(&self) -> Result<()> {
        self.quiver.validate()?;
        for r in &self.relations {
            let mut ends = None;
            for (p, _) in r {
                self.quiver.check_path(p)?;
                let e = (p.start, self.quiver.end(p));
                if *ends.get_or_insert(e) != e {
                    return Err(Error::Invalid("relation mixes paths with different endpoints".into()));
                }
            }
        }
        Ok(())
    }

    /// Every relation only involves paths of length at least 2.
    pub fn is_admissible_form(&self) -> bool {
        self.relations.iter().all(|r| r.iter().all(|(p, c)| c.is_zero() || p.len() >= 2))
    }

    pub fn to_json(&self) -> PresentationJson {
        let name = |p: &Path| -> Vec<String> { p.arrows.iter().map(|&a| self.quiver.arrows[a].name.clone()).collect() };
        PresentationJson {
            vertices: self.quiver.vertices.clone(),
            arrows: self
                .quiver
                .arrows
                .iter()
                .map(|a| ArrowJson {
                    name: a.name.clone(),
                    src: VertexRef::Name(self.quiver.vertices[a.src].clone()),
                    tgt: VertexRef::Name(self.quiver.vertices[a.tgt].clone()),
                })
                .collect(),
            relations: self
                .relations
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|(p, c)| TermJson {
                            path: name(p),
                            vertex: if p.is_empty() { Some(self.quiver.vertices[p.start].clone()) } else { None },
                            coef: fmt_q(c),
                        })
                        .collect()
                })
                .collect(),
            trace: self.trace.as_ref().map(|t| {
                t.iter()
                    .map(|(p, c)| {
                        let key = if p.is_empty() { self.quiver.vertices[p.start].clone() } else { name(p).join(" ") };
                        (key, fmt_q(c))
                    })
                    .collect()
            }),
        }
    }

    pub fn from_json(j: &PresentationJson) -> Result<Self> {
        let vref = |r: &VertexRef| -> Result<usize> {
            match r {
                VertexRef::Index(i) if *i < j.vertices.len() => Ok(*i),
                VertexRef::Name(n) => {
                    j.vertices.iter().position(|v| v == n).ok_or_else(|| Error::Invalid(format!("unknown vertex {n}")))
                }
                _ => Err(Error::Invalid("vertex index out of range".into())),
            }
        };
        let arrows = j
            .arrows
            .iter()
            .map(|a| Ok(Arrow { name: a.name.clone(), src: vref(&a.src)?, tgt: vref(&a.tgt)? }))
            .collect::<Result<Vec<_>>>()?;
        let quiver = Quiver { vertices: j.vertices.clone(), arrows };
        quiver.validate()?;
        let mut relations = Vec::new();
        for r in &j.relations {
            let mut rel = Vec::new();
            for t in r {
                let c = parse_q(&t.coef)?;
                let p = if t.path.is_empty() {
                    let v = t.vertex.as_ref().ok_or_else(|| Error::Invalid("empty path needs \"vertex\"".into()))?;
                    Path::vertex(vref(&VertexRef::Name(v.clone()))?)
                } else {
                    let names: Vec<&str> = t.path.iter().map(|s| s.as_str()).collect();
                    quiver.path(&names)?
                };
                rel.push((p, c));
            }
            relations.push(rel);
        }
        let mut p = Presentation::new(quiver, relations)?;
        if let Some(t) = &j.trace {
            let mut tr = Vec::new();
            for (k, v) in t {
                let c = parse_q(v)?;
                let path = if let Some(i) = p.quiver.vertex_index(k) {
                    Path::vertex(i)
                } else {
                    let names: Vec<&str> = k.split(|ch: char| ch.is_whitespace() || ch == '.' || ch == '*').filter(|s| !s.is_empty()).collect();
                    p.quiver.path(&names)?
                };
                tr.push((path, c));
            }
            p.trace = Some(tr);
        }
        Ok(p)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VertexRef {
    Index(usize),
    Name(String),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ArrowJson {
    pub name: String,
    pub src: VertexRef,
    pub tgt: VertexRef,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermJson {
    pub path: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex: Option<String>,
    pub coef: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PresentationJson {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowJson>,
    pub relations: Vec<Vec<TermJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<BTreeMap<String, String>>,
}
