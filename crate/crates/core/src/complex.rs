//! Finite portions of coset posets and their derived complexes.

use crate::classify::is_spherical;
use crate::coxeter::{Coxeter, CoxeterElement};
use crate::error::{Error, Result};
use crate::fc::Amalgam;
use crate::garside::Garside;
use crate::graph::CoxeterGraph;
use crate::oracle::WordOracle;
use crate::parabolic::{intersect, Parabolic};
use crate::salvetti::member_standard_general;
use crate::word::{ArtinWord, Gen, GenSet, Letter};
use serde::Serialize;
use std::collections::HashSet;
use std::fmt::Write as _;
use std::sync::Arc;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    /// `W × S^f`.
    Salvetti,
    /// Cosets `α A_T` with `T` spherical.
    Deligne,
    /// Cosets `α A_T` with `T` proper.
    Artin,
    /// Cosets `α A_T` with `T` free of `∞`.
    Clique,
}

impl Kind {
    pub fn parse(s: &str) -> Result<Kind> {
        match s {
            "salvetti" => Ok(Kind::Salvetti),
            "deligne" => Ok(Kind::Deligne),
            "artin" => Ok(Kind::Artin),
            "clique" => Ok(Kind::Clique),
            _ => Err(Error::Invalid(format!("unknown complex kind `{s}`"))),
        }
    }

    /// Admissible subsets, in ShortLex order of subsets.
    pub fn subsets(self, g: &CoxeterGraph) -> Vec<GenSet> {
        let n = g.rank();
        if n == 0 {
            return Vec::new();
        }
        let mut out: Vec<GenSet> = (0u64..(1 << n))
            .map(GenSet)
            .filter(|&t| match self {
                Kind::Salvetti | Kind::Deligne => is_spherical(g, t),
                Kind::Artin => t != g.all(),
                Kind::Clique => g.infinite_pairs(t).is_empty(),
            })
            .collect();
        out.sort_by_key(|t| t.shortlex_key());
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetElement {
    /// `α` for `α A_T`, or a reduced word for `u ∈ W` in the Salvetti kind.
    pub rep: ArtinWord,
    pub subset: GenSet,
}

/// A finite portion of a coset poset with its full strict order.
#[derive(Clone, Debug)]
pub struct CosetPoset {
    pub kind: Kind,
    pub radius: usize,
    pub elements: Vec<PosetElement>,
    /// `(i, j)` whenever `elements[i] < elements[j]`.
    pub relation: Vec<(usize, usize)>,
}

fn word_ball(g: &CoxeterGraph, radius: usize, cap: usize) -> Result<Vec<ArtinWord>> {
    let letters: Vec<Letter> = (0..g.rank() as Gen).flat_map(|s| [Letter::pos(s), Letter::neg(s)]).collect();
    let mut out = vec![ArtinWord::new()];
    let mut layer = vec![ArtinWord::new()];
    for _ in 0..radius {
        let mut next = Vec::new();
        for w in &layer {
            for &l in &letters {
                if w.letters().last() == Some(&l.inverse()) {
                    continue;
                }
                let mut v = w.clone();
                v.push(l);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        if out.len() > cap {
            return Err(Error::CapExceeded { what: "coset ball", cap });
        }
        layer = next;
    }
    Ok(out)
}

fn member(kernel: &Coxeter, w: &ArtinWord, t: GenSet, oracle: &dyn WordOracle) -> Result<bool> {
    if w.free_reduce().support().is_subset(t) {
        return Ok(true);
    }
    member_standard_general(kernel, w, t, oracle)?.ok_or(Error::NoOracle)
}

/// Cosets with a representative of word length at most `radius`, one ShortLex-least representative each.
pub fn coset_poset_ball(
    graph: &Arc<CoxeterGraph>,
    kind: Kind,
    radius: usize,
    oracle: &dyn WordOracle,
) -> Result<CosetPoset> {
    let subsets = kind.subsets(graph);
    let kernel = Coxeter::new(graph.clone());
    let cap = crate::limits::Limits::global().ball;
    if kind == Kind::Salvetti {
        let mut elements = Vec::new();
        let mut seen: HashSet<CoxeterElement> = HashSet::new();
        let mut layer = vec![CoxeterElement::identity()];
        seen.insert(CoxeterElement::identity());
        let mut all = layer.clone();
        for _ in 0..radius {
            let mut next = Vec::new();
            for u in &layer {
                for s in 0..graph.rank() as Gen {
                    let v = kernel.mul_gen(u, s)?;
                    if seen.insert(v.clone()) {
                        next.push(v);
                    }
                }
            }
            if seen.len() > cap {
                return Err(Error::CapExceeded { what: "Coxeter ball", cap });
            }
            all.extend(next.iter().cloned());
            layer = next;
        }
        for u in &all {
            for &t in &subsets {
                elements.push((u.clone(), PosetElement { rep: u.lift(), subset: t }));
            }
        }
        let mut relation = Vec::new();
        for (i, (u, a)) in elements.iter().enumerate() {
            for (j, (v, b)) in elements.iter().enumerate() {
                if a.subset == b.subset || !a.subset.is_subset(b.subset) {
                    continue;
                }
                let d = kernel.mul(&kernel.inverse(v)?, u)?;
                if d.support().is_subset(b.subset) && kernel.descents(&d)?.1.intersection(a.subset).is_empty() {
                    relation.push((i, j));
                }
            }
        }
        let elements = elements.into_iter().map(|(_, e)| e).collect();
        return Ok(CosetPoset { kind, radius, elements, relation });
    }
    let words = word_ball(graph, radius, cap)?;
    let mut elements = Vec::new();
    for &t in &subsets {
        let mut reps: Vec<ArtinWord> = Vec::new();
        for w in &words {
            if w.letters().last().is_some_and(|l| t.contains(l.gen)) {
                continue;
            }
            let mut fresh = true;
            for r in &reps {
                if member(&kernel, &r.inverse().concat(w), t, oracle)? {
                    fresh = false;
                    break;
                }
            }
            if fresh {
                reps.push(w.clone());
            }
        }
        elements.extend(reps.into_iter().map(|rep| PosetElement { rep, subset: t }));
    }
    let mut relation = Vec::new();
    for (i, a) in elements.iter().enumerate() {
        for (j, b) in elements.iter().enumerate() {
            if a.subset != b.subset
                && a.subset.is_subset(b.subset)
                && member(&kernel, &b.rep.inverse().concat(&a.rep), b.subset, oracle)?
            {
                relation.push((i, j));
            }
        }
    }
    Ok(CosetPoset { kind, radius, elements, relation })
}

impl CosetPoset {
    /// Irreflexive, antisymmetric and transitive on the stored portion.
    pub fn is_strict_order(&self) -> bool {
        let set: HashSet<(usize, usize)> = self.relation.iter().copied().collect();
        if self.relation.iter().any(|&(i, j)| i == j || set.contains(&(j, i))) {
            return false;
        }
        self.relation
            .iter()
            .all(|&(i, j)| self.relation.iter().filter(|&&(k, _)| k == j).all(|&(_, l)| set.contains(&(i, l))))
    }

    /// Elements `x` with `a ≤ x ≤ b`.
    pub fn interval(&self, a: usize, b: usize) -> Vec<usize> {
        let set: HashSet<(usize, usize)> = self.relation.iter().copied().collect();
        let le = |x: usize, y: usize| x == y || set.contains(&(x, y));
        (0..self.elements.len()).filter(|&x| le(a, x) && le(x, b)).collect()
    }

    pub fn find(&self, rep: &ArtinWord, subset: GenSet) -> Option<usize> {
        self.elements.iter().position(|e| &e.rep == rep && e.subset == subset)
    }

    /// Drops elements over a subset, renumbering the relation.
    pub fn without_subset(&self, subset: GenSet) -> CosetPoset {
        let keep: Vec<usize> = (0..self.elements.len()).filter(|&i| self.elements[i].subset != subset).collect();
        let mut index = vec![usize::MAX; self.elements.len()];
        for (n, &i) in keep.iter().enumerate() {
            index[i] = n;
        }
        CosetPoset {
            kind: self.kind,
            radius: self.radius,
            elements: keep.iter().map(|&i| self.elements[i].clone()).collect(),
            relation: self
                .relation
                .iter()
                .filter(|&&(i, j)| index[i] != usize::MAX && index[j] != usize::MAX)
                .map(|&(i, j)| (index[i], index[j]))
                .collect(),
        }
    }

    pub fn label(&self, g: &CoxeterGraph, i: usize) -> String {
        let e = &self.elements[i];
        let rep = if e.rep.is_empty() { "1".to_string() } else { g.format_word(&e.rep) };
        if self.kind == Kind::Salvetti {
            format!("({rep}, {{{}}})", g.subset_names(e.subset).join(","))
        } else {
            format!("{rep}·A_{{{}}}", g.subset_names(e.subset).join(","))
        }
    }
}

/// Order complex: one simplex per chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedComplex {
    pub vertices: usize,
    /// Chains listed bottom to top, grouped by dimension.
    pub simplices: Vec<Vec<Vec<usize>>>,
}

impl DerivedComplex {
    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    pub fn dimension(&self) -> Option<usize> {
        self.simplices.len().checked_sub(1)
    }
}

pub fn derive(p: &CosetPoset) -> DerivedComplex {
    let n = p.elements.len();
    let mut up: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(i, j) in &p.relation {
        up[i].push(j);
    }
    for u in &mut up {
        u.sort_unstable();
    }
    let mut simplices: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut stack: Vec<Vec<usize>> = (0..n).rev().map(|i| vec![i]).collect();
    while let Some(chain) = stack.pop() {
        let d = chain.len() - 1;
        if simplices.len() <= d {
            simplices.resize(d + 1, Vec::new());
        }
        let top = *chain.last().unwrap();
        for &j in up[top].iter().rev() {
            let mut c = chain.clone();
            c.push(j);
            stack.push(c);
        }
        simplices[d].push(chain);
    }
    for s in &mut simplices {
        s.sort();
    }
    DerivedComplex { vertices: n, simplices }
}

#[derive(Serialize)]
struct ElementRecord {
    id: usize,
    rep: String,
    subset: Vec<String>,
    label: String,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ComplexRecord {
    f_vector: Vec<usize>,
    simplices: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct ExportRecord {
    kind: Kind,
    radius: usize,
    elements: Vec<ElementRecord>,
    relation: Vec<(usize, usize)>,
    complex: ComplexRecord,
}

pub fn to_json(g: &CoxeterGraph, p: &CosetPoset) -> serde_json::Value {
    let c = derive(p);
    let rec = ExportRecord {
        kind: p.kind,
        radius: p.radius,
        elements: p
            .elements
            .iter()
            .enumerate()
            .map(|(i, e)| ElementRecord {
                id: i,
                rep: g.format_word(&e.rep),
                subset: g.subset_names(e.subset),
                label: p.label(g, i),
            })
            .collect(),
        relation: p.relation.clone(),
        complex: ComplexRecord { f_vector: c.f_vector(), simplices: c.simplices.into_iter().flatten().collect() },
    };
    serde_json::to_value(rec).expect("plain records serialize")
}

/// 1-skeleton of the derived complex.
pub fn to_dot(g: &CoxeterGraph, p: &CosetPoset) -> String {
    let mut out = String::from("graph derived {\n");
    for i in 0..p.elements.len() {
        let _ = writeln!(out, "  n{i} [label=\"{}\"];", p.label(g, i).replace('"', "\\\""));
    }
    for &(i, j) in &p.relation {
        let _ = writeln!(out, "  n{i} -- n{j};");
    }
    out.push_str("}\n");
    out
}

/// One vertex, one loop per generator and one 2-cell per finite label.
#[derive(Clone, Debug, Serialize)]
pub struct TwoSkeleton {
    pub vertex: String,
    pub loops: Vec<String>,
    pub cells: Vec<Cell>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Cell {
    pub pair: [String; 2],
    pub m: u32,
    pub boundary: String,
    pub length: usize,
}

/// `s t s ⋯` of length `m`.
pub fn alternating(s: Gen, t: Gen, m: u32) -> ArtinWord {
    ArtinWord((0..m).map(|i| Letter::pos(if i % 2 == 0 { s } else { t })).collect())
}

pub fn salvetti_two_skeleton(g: &CoxeterGraph) -> TwoSkeleton {
    let mut cells = Vec::new();
    for s in 0..g.rank() as Gen {
        for t in s + 1..g.rank() as Gen {
            if let Some(m) = g.m(s, t) {
                let boundary = alternating(s, t, m).concat(&alternating(t, s, m).inverse());
                cells.push(Cell {
                    pair: [g.name(s).to_string(), g.name(t).to_string()],
                    m,
                    length: boundary.len(),
                    boundary: g.format_word(&boundary),
                });
            }
        }
    }
    TwoSkeleton { vertex: "x0".into(), loops: g.names().to_vec(), cells }
}

/// Adjacency of irreducible parabolics in a spherical ambient.
///
/// `None` when the intersection is not certified trivial or nontrivial.
pub fn irreducible_parabolic_adjacent(p: &Parabolic, q: &Parabolic, radius: usize) -> Result<Option<bool>> {
    if p.is_subgroup_of(q)? || q.is_subgroup_of(p)? {
        return Ok(Some(true));
    }
    let r = intersect(p, q, radius)?;
    if !r.subgroup.is_trivial() {
        return Ok(if r.certified { Some(false) } else { None });
    }
    let gens = |x: &Parabolic| -> Result<Vec<_>> {
        let gs = x.garside();
        x.base()
            .iter()
            .map(|s| gs.normalize(&ArtinWord(vec![Letter::pos(s)]))?.conjugate_by(x.conjugator()))
            .collect()
    };
    let (a, b) = (gens(p)?, gens(q)?);
    for x in &a {
        for y in &b {
            if x.mul(y)? != y.mul(x)? {
                return Ok(Some(false));
            }
        }
    }
    Ok(if r.certified { Some(true) } else { None })
}

/// Adjacency in an FC ambient for spherical irreducible bases: `z_P z_Q = z_Q z_P`.
pub fn fc_adjacent(a: &Amalgam, (g, x): (&ArtinWord, GenSet), (h, y): (&ArtinWord, GenSet)) -> Result<bool> {
    let z = |c: &ArtinWord, base: GenSet| -> Result<ArtinWord> {
        let gs = Garside::shared(a.graph(), base)?;
        Ok(c.conjugate(&gs.center(base)?.to_word()))
    };
    let (zp, zq) = (z(g, x)?, z(h, y)?);
    a.is_trivial_word(&zp.concat(&zq).concat(&zq.concat(&zp).inverse()))
}
