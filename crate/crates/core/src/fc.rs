//! FC-type Artin groups as iterated amalgams of spherical factors.
//!
//! For an `∞` pair `{s, t}` of `U`, `A_U = A_I *_{A_K} A_J` with `I = U ∖ {s}`,
//! `J = U ∖ {t}` and `K = I ∩ J`. Words are decided by pinching syllables that
//! lie in `A_K`; membership in `A_K` is tested through the retraction `π̂_K`.

use crate::classify::{classify_spherical, is_spherical};
use crate::coxeter::{Coxeter, CoxeterElement};
use crate::error::{Error, Result};
use crate::garside::Garside;
use crate::graph::CoxeterGraph;
use crate::oracle::WordOracle;
use crate::parabolic::{self, Method, Parabolic};
use crate::salvetti::retract_word;
use crate::word::{ArtinWord, Gen, GenSet, Letter};
use serde::Serialize;
use std::sync::Arc;

#[derive(Debug)]
pub enum Node {
    Leaf {
        gens: GenSet,
    },
    Split {
        gens: GenSet,
        pair: (Gen, Gen),
        i: GenSet,
        j: GenSet,
        k: GenSet,
        left: Box<Node>,
        right: Box<Node>,
    },
}

impl Node {
    pub fn gens(&self) -> GenSet {
        match self {
            Node::Leaf { gens } | Node::Split { gens, .. } => *gens,
        }
    }

    fn build(g: &CoxeterGraph, u: GenSet) -> Result<Node> {
        if is_spherical(g, u) {
            return Ok(Node::Leaf { gens: u });
        }
        let (s, t) = *g.infinite_pairs(u).first().ok_or(Error::NotFc)?;
        let (i, j) = (u.without(s), u.without(t));
        Ok(Node::Split {
            gens: u,
            pair: (s, t),
            i,
            j,
            k: i.intersection(j),
            left: Box::new(Node::build(g, i)?),
            right: Box::new(Node::build(g, j)?),
        })
    }

    fn record(&self, g: &CoxeterGraph) -> TreeRecord {
        match self {
            Node::Leaf { gens } => TreeRecord::Leaf {
                leaf: g.subset_names(*gens),
                types: classify_spherical(g, *gens)
                    .unwrap_or_default()
                    .iter()
                    .map(|t| t.to_string())
                    .collect(),
            },
            Node::Split { pair, i, j, k, left, right, .. } => TreeRecord::Split {
                pair: [g.name(pair.0).to_string(), g.name(pair.1).to_string()],
                i: g.subset_names(*i),
                j: g.subset_names(*j),
                k: g.subset_names(*k),
                left: Box::new(left.record(g)),
                right: Box::new(right.record(g)),
            },
        }
    }
}

#[derive(Serialize, Debug)]
#[serde(untagged)]
pub enum TreeRecord {
    Leaf {
        leaf: Vec<String>,
        types: Vec<String>,
    },
    Split {
        pair: [String; 2],
        #[serde(rename = "I")]
        i: Vec<String>,
        #[serde(rename = "J")]
        j: Vec<String>,
        #[serde(rename = "K")]
        k: Vec<String>,
        left: Box<TreeRecord>,
        right: Box<TreeRecord>,
    },
}

/// Factor of an amalgam node.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    I,
    J,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::I => Side::J,
            Side::J => Side::I,
        }
    }
}

/// Which pinchable syllable is reduced first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// A vertex `g A_side` of the Bass–Serre tree of the root node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeVertex {
    pub rep: ArtinWord,
    pub side: Side,
}

/// Reduced path; `edges[i] = c_i A_K` joins `vertices[i]` and `vertices[i + 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreePath {
    pub vertices: Vec<TreeVertex>,
    pub edges: Vec<ArtinWord>,
}

impl TreePath {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Trustworthiness of an FC intersection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FcStatus {
    Exact,
    BallCertified,
    /// A leaf intersection found common elements outside its best candidate.
    Uncertified,
    /// The projection vertex was only searched up to the radius.
    UndecidedAtRadius,
}

impl FcStatus {
    fn combine(self, other: FcStatus) -> FcStatus {
        use FcStatus::*;
        let rank = |s: FcStatus| match s {
            Exact => 0,
            BallCertified => 1,
            Uncertified => 2,
            UndecidedAtRadius => 3,
        };
        if rank(self) >= rank(other) {
            self
        } else {
            other
        }
    }
}

/// `conj · A_base · conj⁻¹` with a status.
#[derive(Clone, Debug)]
pub struct FcIntersection {
    pub conj: ArtinWord,
    pub base: GenSet,
    pub status: FcStatus,
    pub radius: usize,
}

/// An FC-type Artin group with its amalgam decomposition.
pub struct Amalgam {
    graph: Arc<CoxeterGraph>,
    root: Node,
    kernel: Coxeter,
}

impl Amalgam {
    pub fn new(graph: Arc<CoxeterGraph>) -> Result<Self> {
        let root = Node::build(&graph, graph.all())?;
        let kernel = Coxeter::new(graph.clone());
        Ok(Amalgam { graph, root, kernel })
    }

    pub fn graph(&self) -> &Arc<CoxeterGraph> {
        &self.graph
    }

    pub fn root(&self) -> &Node {
        &self.root
    }

    pub fn kernel(&self) -> &Coxeter {
        &self.kernel
    }

    pub fn tree_record(&self) -> TreeRecord {
        self.root.record(&self.graph)
    }

    fn retract(&self, w: &ArtinWord, x: GenSet) -> Result<ArtinWord> {
        Ok(retract_word(&self.kernel, w, x)?.output)
    }

    fn trivial_at(&self, node: &Node, w: &ArtinWord) -> Result<bool> {
        let w = w.free_reduce();
        if w.is_empty() {
            return Ok(true);
        }
        match node {
            Node::Leaf { gens } => {
                let gs = Garside::shared(&self.graph, *gens)?;
                Ok(gs.normalize(&w)?.is_identity())
            }
            Node::Split { .. } => {
                let syl = self.reduce_at(node, &w, Strategy::Leftmost)?;
                Ok(syl.is_empty())
            }
        }
    }

    /// `w ∈ A_X` for a word over the generators of `node`.
    fn member_at(&self, node: &Node, w: &ArtinWord, x: GenSet) -> Result<bool> {
        if w.support().is_subset(x) {
            return Ok(true);
        }
        let r = self.retract(w, x)?;
        self.trivial_at(node, &w.concat(&r.inverse()))
    }

    /// Pinch-reduced syllables of a word over the generators of a split node.
    fn reduce_at(&self, node: &Node, w: &ArtinWord, strategy: Strategy) -> Result<Vec<(Side, ArtinWord)>> {
        let Node::Split { i, j, k, left, right, .. } = node else {
            unreachable!("syllables only exist at split nodes")
        };
        let mut w = w.free_reduce();
        loop {
            if w.support().is_subset(*k) {
                return Ok(if self.trivial_at(left, &w)? { Vec::new() } else { vec![(Side::I, w)] });
            }
            let syl = split_syllables(&w, *i, *j);
            let order: Vec<usize> = match strategy {
                Strategy::Leftmost => (0..syl.len()).collect(),
                Strategy::Rightmost => (0..syl.len()).rev().collect(),
            };
            let mut pinched = None;
            for idx in order {
                let (side, ref word) = syl[idx];
                let child = if side == Side::I { left } else { right };
                if self.member_at(child, word, *k)? {
                    pinched = Some((idx, self.retract(word, *k)?));
                    break;
                }
            }
            match pinched {
                Some((idx, kword)) => {
                    let mut next = ArtinWord::new();
                    for (n, (_, word)) in syl.iter().enumerate() {
                        next = next.concat(if n == idx { &kword } else { word });
                    }
                    w = next.free_reduce();
                }
                None => return Ok(syl),
            }
        }
    }

    /// Pinch-reduced syllables at the root.
    pub fn syllables(&self, w: &ArtinWord, strategy: Strategy) -> Result<Vec<(Side, ArtinWord)>> {
        self.check(w)?;
        match &self.root {
            Node::Leaf { .. } => Ok(if self.trivial_at(&self.root, w)? { Vec::new() } else { vec![(Side::I, w.clone())] }),
            node => self.reduce_at(node, w, strategy),
        }
    }

    pub fn is_trivial_word(&self, w: &ArtinWord) -> Result<bool> {
        self.check(w)?;
        self.trivial_at(&self.root, w)
    }

    /// `w ∈ A_X`.
    pub fn member_standard(&self, w: &ArtinWord, x: GenSet) -> Result<bool> {
        self.check(w)?;
        self.member_at(&self.root, w, x)
    }

    fn check(&self, w: &ArtinWord) -> Result<()> {
        if w.support().is_subset(self.graph.all()) {
            Ok(())
        } else {
            Err(Error::Invalid("word uses undeclared generators".into()))
        }
    }

    fn side_set(node: &Node, side: Side) -> GenSet {
        match node {
            Node::Split { i, j, .. } => {
                if side == Side::I {
                    *i
                } else {
                    *j
                }
            }
            Node::Leaf { gens } => *gens,
        }
    }

    /// `g A_side = g' A_side`.
    pub fn same_vertex(&self, a: &TreeVertex, b: &TreeVertex) -> Result<bool> {
        if a.side != b.side {
            return Ok(false);
        }
        let set = Amalgam::side_set(&self.root, a.side);
        self.member_standard(&a.rep.inverse().concat(&b.rep), set)
    }

    fn geodesic_at(&self, node: &Node, u: &TreeVertex, v: &TreeVertex) -> Result<TreePath> {
        let Node::Split { i, j, k, left, .. } = node else {
            return Err(Error::Invalid("a spherical group has no amalgam tree".into()));
        };
        let w = u.rep.inverse().concat(&v.rep);
        let syl = self.reduce_at(node, &w, Strategy::Leftmost)?;
        let mut vertices = vec![u.clone()];
        let mut edges = Vec::new();
        let mut c = u.rep.clone();
        let mut side = u.side;
        let only_k = syl.len() == 1 && syl[0].1.support().is_subset(*k);
        let _ = (i, j, left);
        for (s, word) in &syl {
            if !only_k && *s != side {
                edges.push(c.clone());
                side = *s;
                vertices.push(TreeVertex { rep: c.clone(), side });
            }
            c = c.concat(word);
        }
        if side != v.side {
            edges.push(c.clone());
            vertices.push(TreeVertex { rep: c.clone(), side: v.side });
        }
        if let Some(last) = vertices.last_mut() {
            *last = TreeVertex { rep: v.rep.clone(), side: v.side };
        }
        Ok(TreePath { vertices, edges })
    }

    /// The unique reduced path between two vertices of the root tree.
    pub fn tree_geodesic(&self, u: &TreeVertex, v: &TreeVertex) -> Result<TreePath> {
        self.check(&u.rep)?;
        self.check(&v.rep)?;
        self.geodesic_at(&self.root, u, v)
    }

    /// `β A_Z β⁻¹ ⊆ A_K` rewritten as `α A_{Z'} α⁻¹` with `α` a word over `K`, verified by the oracle at `node`.
    fn restandardise_at(&self, node: &Node, beta: &ArtinWord, z: GenSet, k: GenSet) -> Result<(ArtinWord, GenSet)> {
        let g = self.kernel.theta(beta)?;
        let (a, d, b) = self.kernel.double_coset_split(&g, k, z)?;
        let mut y = GenSet::EMPTY;
        for zz in z.iter() {
            match self.kernel.conj_gen(&d, zz)? {
                Some(t) if k.contains(t) => y.insert(t),
                _ => return Err(Error::Invalid("parabolic is not contained in the target subgroup".into())),
            }
        }
        let beta1 = beta.concat(&b.lift().inverse()).concat(&a.lift().concat(&d.lift()).inverse());
        let alpha = self.retract(&beta1, k)?.concat(&a.lift()).free_reduce();
        let conj_into = |c: &ArtinWord, s: Gen| c.conjugate(&ArtinWord(vec![Letter::pos(s)]));
        for t in y.iter() {
            let w = beta.inverse().concat(&conj_into(&alpha, t)).concat(beta);
            if !self.member_at(node, &w, z)? {
                return Err(Error::Invalid("restandardisation failed verification".into()));
            }
        }
        for zz in z.iter() {
            let w = alpha.inverse().concat(&conj_into(beta, zz)).concat(&alpha);
            if !self.member_at(node, &w, y)? {
                return Err(Error::Invalid("restandardisation failed verification".into()));
            }
        }
        Ok((alpha, y))
    }

    /// `β A_Z β⁻¹ = α A_Y α⁻¹` with `α` a word over `X`, for `β A_Z β⁻¹ ⊆ A_X`.
    pub fn restandardise(&self, beta: &ArtinWord, z: GenSet, x: GenSet) -> Result<(ArtinWord, GenSet)> {
        self.check(beta)?;
        self.restandardise_at(&self.root, beta, z, x)
    }

    /// `g A_X g⁻¹ ∩ h A_Y h⁻¹` for spherical `X`.
    pub fn intersect_spherical_any(
        &self,
        (g, x): (&ArtinWord, GenSet),
        (h, y): (&ArtinWord, GenSet),
        radius: usize,
    ) -> Result<FcIntersection> {
        self.check(g)?;
        self.check(h)?;
        if !is_spherical(&self.graph, x) {
            return Err(Error::NotSpherical);
        }
        if !x.is_subset(self.graph.all()) || !y.is_subset(self.graph.all()) {
            return Err(Error::Invalid("base uses undeclared generators".into()));
        }
        let mut r = self.intersect_at(&self.root, g.clone(), x, h.clone(), y, radius)?;
        r.conj = r.conj.free_reduce();
        if r.base.is_empty() {
            r.conj = ArtinWord::new();
        }
        Ok(r)
    }

    fn intersect_at(
        &self,
        node: &Node,
        mut pc: ArtinWord,
        mut px: GenSet,
        qc: ArtinWord,
        qy: GenSet,
        radius: usize,
    ) -> Result<FcIntersection> {
        let trivial = |status| FcIntersection { conj: ArtinWord::new(), base: GenSet::EMPTY, status, radius };
        if px.is_empty() || qy.is_empty() {
            return Ok(trivial(FcStatus::Exact));
        }
        let Node::Split { pair: (s, t), i, j, k, left, right, .. } = node else {
            return self.leaf_intersect(node.gens(), &pc, px, &qc, qy, radius);
        };
        if qy.contains(*s) && qy.contains(*t) {
            // Replace Q by the stabilizer in Q of the projection of P's vertex onto Q's subtree.
            let side_p = if px.is_subset(*i) { Side::I } else { Side::J };
            let u = TreeVertex { rep: pc.clone(), side: side_p };
            let (yword, side, dist) = self.project(node, &u, &qc, qy, radius)?;
            let set = if side == Side::I { *i } else { *j };
            let mut r = self.intersect_at(node, pc, px, qc.concat(&yword), qy.intersection(set), radius)?;
            if dist > 0 {
                r.status = r.status.combine(FcStatus::UndecidedAtRadius);
            }
            return Ok(r);
        }
        let side_of = |b: GenSet| if b.is_subset(*i) { Side::I } else { Side::J };
        let v = TreeVertex { rep: qc.clone(), side: side_of(qy) };
        let mut side_p = side_of(px);
        let mut status = FcStatus::Exact;
        loop {
            let u = TreeVertex { rep: pc.clone(), side: side_p };
            let path = self.geodesic_at(node, &u, &v)?;
            let (child, set) = if side_p == Side::I { (left, *i) } else { (right, *j) };
            if path.is_empty() {
                let q_local = self.retract(&pc.inverse().concat(&qc), set)?;
                let mut r = self.intersect_at(child, ArtinWord::new(), px, q_local, qy, radius)?;
                r.conj = pc.concat(&r.conj);
                r.status = r.status.combine(status);
                return Ok(r);
            }
            // P ∩ Q fixes the first edge c₁ A_K of the path.
            let c_local = self.retract(&pc.inverse().concat(&path.edges[0]), set)?;
            let r = self.intersect_at(child, ArtinWord::new(), px, c_local.clone(), *k, radius)?;
            status = status.combine(r.status);
            if r.base.is_empty() {
                return Ok(trivial(status));
            }
            let beta = c_local.inverse().concat(&r.conj);
            let (alpha, zk) = self.restandardise_at(child, &beta, r.base, *k)?;
            pc = pc.concat(&c_local).concat(&alpha).free_reduce();
            px = zk;
            side_p = side_p.other();
        }
    }

    /// Nearest vertex `h y A_V` (`y` over `Y`) to `u`, searched over words of length ≤ radius.
    fn project(
        &self,
        node: &Node,
        u: &TreeVertex,
        h: &ArtinWord,
        y: GenSet,
        radius: usize,
    ) -> Result<(ArtinWord, Side, usize)> {
        let cap = self.kernel_limits_ball();
        let letters: Vec<Letter> = y.iter().flat_map(|g| [Letter::pos(g), Letter::neg(g)]).collect();
        let mut best: Option<(ArtinWord, Side, usize)> = None;
        let mut layer = vec![ArtinWord::new()];
        let mut visited = 0usize;
        for depth in 0..=radius {
            for word in &layer {
                for side in [Side::I, Side::J] {
                    let v = TreeVertex { rep: h.concat(word), side };
                    let d = self.geodesic_at(node, u, &v)?.len();
                    if best.as_ref().is_none_or(|b| d < b.2) {
                        best = Some((word.clone(), side, d));
                    }
                }
                visited += 1;
                if visited > cap {
                    return Err(Error::CapExceeded { what: "projection search", cap });
                }
            }
            if best.as_ref().is_some_and(|b| b.2 == 0) || depth == radius {
                break;
            }
            let mut next = Vec::new();
            for word in &layer {
                for &l in &letters {
                    if word.letters().last() == Some(&l.inverse()) {
                        continue;
                    }
                    let mut w2 = word.clone();
                    w2.push(l);
                    next.push(w2);
                }
            }
            layer = next;
        }
        Ok(best.expect("the empty word is always searched"))
    }

    fn kernel_limits_ball(&self) -> usize {
        crate::limits::Limits::global().ball
    }

    fn leaf_intersect(
        &self,
        gens: GenSet,
        pc: &ArtinWord,
        px: GenSet,
        qc: &ArtinWord,
        qy: GenSet,
        radius: usize,
    ) -> Result<FcIntersection> {
        let gs = Garside::shared(&self.graph, gens)?;
        let p = Parabolic::new(gs.normalize(pc)?, px)?;
        let q = Parabolic::new(gs.normalize(qc)?, qy)?;
        let r = parabolic::intersect(&p, &q, radius)?;
        let status = match (r.method, r.certified) {
            (Method::Exact, _) => FcStatus::Exact,
            (Method::Ball, true) => FcStatus::BallCertified,
            (Method::Ball, false) => FcStatus::Uncertified,
        };
        Ok(FcIntersection { conj: r.subgroup.conjugator().to_word(), base: r.subgroup.base(), status, radius })
    }

    /// Whether two FC parabolics `g A_X g⁻¹`, `h A_Y h⁻¹` are equal, by generator conjugates.
    pub fn parabolic_contains(&self, (g, x): (&ArtinWord, GenSet), (h, y): (&ArtinWord, GenSet)) -> Result<bool> {
        // h A_Y h⁻¹ ⊆ g A_X g⁻¹ iff every g⁻¹ h σ h⁻¹ g lies in A_X.
        for s in y.iter() {
            let w = g.inverse().concat(&h.conjugate(&ArtinWord(vec![Letter::pos(s)]))).concat(g);
            if !self.member_standard(&w, x)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Coxeter image, used by callers that need `θ`.
    pub fn theta(&self, w: &ArtinWord) -> Result<CoxeterElement> {
        self.kernel.theta(w)
    }
}

impl WordOracle for Amalgam {
    fn is_trivial(&self, w: &ArtinWord) -> Result<Option<bool>> {
        Ok(Some(self.is_trivial_word(w)?))
    }

    fn name(&self) -> &'static str {
        "fc-amalgam"
    }
}

/// Maximal runs on one side; letters of `K = I ∩ J` join the current run.
fn split_syllables(w: &ArtinWord, i: GenSet, j: GenSet) -> Vec<(Side, ArtinWord)> {
    let k = i.intersection(j);
    let first = w.letters().iter().find(|l| !k.contains(l.gen)).map(|l| if i.contains(l.gen) { Side::I } else { Side::J });
    let mut side = first.unwrap_or(Side::I);
    let mut out: Vec<(Side, ArtinWord)> = Vec::new();
    let mut cur = ArtinWord::new();
    for &l in w.letters() {
        let ls = if k.contains(l.gen) {
            side
        } else if i.contains(l.gen) {
            Side::I
        } else {
            Side::J
        };
        if ls != side && !cur.is_empty() {
            out.push((side, std::mem::take(&mut cur)));
        }
        side = ls;
        cur.push(l);
    }
    if !cur.is_empty() {
        out.push((side, cur));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    fn graph(text: &str) -> Arc<CoxeterGraph> {
        Arc::new(CoxeterGraph::parse(text).unwrap())
    }

    fn w(a: &Amalgam, s: &str) -> ArtinWord {
        a.graph().parse_word(s).unwrap()
    }

    #[test]
    fn factorization_examples() {
        let sph = Amalgam::new(Arc::new(families::type_a(3))).unwrap();
        assert!(matches!(sph.root(), Node::Leaf { .. }));
        // a free, b–c braid: the second level is a free product.
        let fig = Amalgam::new(graph("generators: a b c\ndefault: inf\nb c 3\n")).unwrap();
        match fig.root() {
            Node::Split { k, right, .. } => {
                assert_eq!(*k, GenSet(0b100));
                assert!(matches!(**right, Node::Split { k: GenSet::EMPTY, .. }));
            }
            _ => panic!("expected a split"),
        }
        let path = Amalgam::new(graph("generators: a b c\ndefault: 2\na b 3\nb c 3\na c inf\n")).unwrap();
        match path.root() {
            Node::Split { i, j, k, .. } => {
                assert_eq!((*i, *j, *k), (GenSet(0b110), GenSet(0b011), GenSet(0b010)));
            }
            _ => panic!("expected a split"),
        }
        let not_fc = graph("generators: a b c d\ndefault: 2\na b 3\nb c 3\nc a 3\na d inf\n");
        assert!(matches!(Amalgam::new(not_fc), Err(Error::NotFc)));
    }

    #[test]
    fn word_problem_examples() {
        let a = Amalgam::new(graph("generators: s t\ndefault: inf\n")).unwrap();
        assert!(a.is_trivial_word(&ArtinWord::new()).unwrap());
        assert!(!a.is_trivial_word(&w(&a, "s t")).unwrap());
        assert!(a.is_trivial_word(&w(&a, "s t t^-1 s^-1")).unwrap());
        let b = Amalgam::new(graph("generators: a b c\ndefault: 2\na b 3\nb c 3\na c inf\n")).unwrap();
        assert!(b.is_trivial_word(&w(&b, "a b a b^-1 a^-1 b^-1")).unwrap());
        assert!(b.is_trivial_word(&w(&b, "a c b c b c^-1 b^-1 c^-1 c^-1 a^-1")).unwrap());
        assert!(!b.is_trivial_word(&w(&b, "a c a^-1 c^-1")).unwrap());
        assert!(!b.is_trivial_word(&w(&b, "b a c")).unwrap());
    }

    #[test]
    fn strategies_agree() {
        let b = Amalgam::new(graph("generators: a b c\ndefault: 2\na b 3\nb c 3\na c inf\n")).unwrap();
        let word = w(&b, "a b c b^-1 a b a^-1 c^-1 c a");
        let l = b.syllables(&word, Strategy::Leftmost).unwrap().len();
        let r = b.syllables(&word, Strategy::Rightmost).unwrap().len();
        assert_eq!(l, r);
    }

    #[test]
    fn tree_examples() {
        let b = Amalgam::new(graph("generators: a b c\ndefault: 2\na b 3\nb c 3\na c inf\n")).unwrap();
        let v = |s: &str, side| TreeVertex { rep: w(&b, s), side };
        assert!(b.tree_geodesic(&v("", Side::I), &v("", Side::I)).unwrap().is_empty());
        assert_eq!(b.tree_geodesic(&v("", Side::I), &v("", Side::J)).unwrap().len(), 1);
        // I = {b, c}, so a lies only in J.
        assert_eq!(b.tree_geodesic(&v("", Side::I), &v("a", Side::I)).unwrap().len(), 2);
        assert!(b.same_vertex(&v("b c", Side::I), &v("", Side::I)).unwrap());
        assert!(!b.same_vertex(&v("a", Side::I), &v("", Side::I)).unwrap());
    }

    #[test]
    fn intersection_examples() {
        let b = Amalgam::new(graph("generators: a b c\ndefault: 2\na b 3\nb c 3\na c inf\n")).unwrap();
        let x = b.graph().parse_subset("a,b").unwrap();
        let e = ArtinWord::new();
        let r = b.intersect_spherical_any((&e, x), (&e, x), 3).unwrap();
        assert_eq!(r.base, x);
        let y = b.graph().parse_subset("b,c").unwrap();
        let r = b.intersect_spherical_any((&e, x), (&e, y), 3).unwrap();
        assert_eq!(r.base, b.graph().parse_subset("b").unwrap());
        assert_eq!(r.status, FcStatus::Exact);
        // a A_{a} a⁻¹... conjugated far apart: c a c⁻¹ A_{a} vs A_{c}.
        let r = b
            .intersect_spherical_any((&w(&b, "c"), b.graph().parse_subset("a").unwrap()), (&e, b.graph().parse_subset("c").unwrap()), 3)
            .unwrap();
        assert!(r.base.is_empty());
        let free = Amalgam::new(graph("generators: a b c\ndefault: inf\nb c 3\n")).unwrap();
        let r = free
            .intersect_spherical_any((&e, GenSet(0b001)), (&e, GenSet(0b110)), 3)
            .unwrap();
        assert!(r.base.is_empty());
    }

    #[test]
    fn restandardise_example() {
        let b = Amalgam::new(graph("generators: a b c\ndefault: 2\na b 3\nb c 3\na c inf\n")).unwrap();
        // a b a⁻¹ = b⁻¹ a b, which lies in A_{a,b}.
        let (alpha, y) = b.restandardise(&w(&b, "a"), GenSet(0b010), GenSet(0b011)).unwrap();
        assert!(alpha.support().is_subset(GenSet(0b011)) && y.is_subset(GenSet(0b011)));
    }
}
