//! Garside structure of a spherical-type Artin group `A_X`.
//!
//! Simple elements are in bijection with `W_X`; the finite group is enumerated
//! once into multiplication tables and every lattice operation runs on indices.
//! Elements are kept in left normal form `Δ^p x_1 ⋯ x_r`.

use crate::classify::{classify_spherical, IrreducibleType};
use crate::coxeter::Coxeter;
use crate::error::{Error, Result};
use crate::graph::CoxeterGraph;
use crate::limits::Limits;
use crate::word::{ArtinWord, Gen, GenSet, Letter};
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex, OnceLock};

/// A simple element, indexing an element of `W_X`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Simple(pub u32);

/// Prefix (`a ≼ ab`) or suffix (`b ≽ ab`) order on simples.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Order {
    Prefix,
    Suffix,
}

pub struct Garside {
    graph: Arc<CoxeterGraph>,
    subset: GenSet,
    types: Vec<IrreducibleType>,
    gens: Vec<Gen>,
    local: [u8; 64],
    words: Vec<Vec<Gen>>,
    len: Vec<u32>,
    rmul: Vec<u32>,
    lmul: Vec<u32>,
    ldesc: Vec<GenSet>,
    rdesc: Vec<GenSet>,
    inv: Vec<u32>,
    tau: Vec<u32>,
    lcomp: Vec<u32>,
    rcomp: Vec<u32>,
    delta: u32,
    limits: Limits,
}

impl fmt::Debug for Garside {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Garside").field("subset", &self.subset).field("order", &self.words.len()).finish()
    }
}

const NONE: u8 = u8::MAX;

impl Garside {
    /// Enumerates `W_X`; fails if `X` is not spherical or `W_X` exceeds the cap.
    pub fn new(graph: Arc<CoxeterGraph>, subset: GenSet) -> Result<Self> {
        Garside::with_limits(graph, subset, Limits::global())
    }

    pub fn with_limits(graph: Arc<CoxeterGraph>, subset: GenSet, limits: Limits) -> Result<Self> {
        if !subset.is_subset(graph.all()) {
            return Err(Error::Invalid("subset contains undeclared generators".into()));
        }
        let types = classify_spherical(&graph, subset).ok_or(Error::NotSpherical)?;
        let gens: Vec<Gen> = subset.iter().collect();
        let k = gens.len();
        let mut local = [NONE; 64];
        for (i, &g) in gens.iter().enumerate() {
            local[g as usize] = i as u8;
        }
        let kernel = Coxeter::with_limits(graph.clone(), limits);
        let mut words: Vec<Vec<Gen>> = vec![Vec::new()];
        let mut len: Vec<u32> = vec![0];
        let mut rdesc: Vec<GenSet> = vec![GenSet::EMPTY];
        let mut rmul: Vec<u32> = vec![u32::MAX; k];
        let mut index: HashMap<Vec<Gen>, u32> = HashMap::new();
        index.insert(Vec::new(), 0);
        let mut level: Vec<u32> = vec![0];
        while !level.is_empty() {
            let mut next = Vec::new();
            for &u in &level {
                for (li, &s) in gens.iter().enumerate() {
                    if rdesc[u as usize].contains(s) {
                        continue;
                    }
                    let v_el = kernel.reduce(&[words[u as usize].as_slice(), &[s]].concat())?;
                    let v = match index.get(v_el.word()) {
                        Some(&v) => v,
                        None => {
                            let v = words.len() as u32;
                            if words.len() >= limits.group_order {
                                return Err(Error::CapExceeded { what: "finite Coxeter group", cap: limits.group_order });
                            }
                            index.insert(v_el.word().to_vec(), v);
                            words.push(v_el.word().to_vec());
                            len.push(len[u as usize] + 1);
                            rdesc.push(GenSet::EMPTY);
                            rmul.extend(std::iter::repeat_n(u32::MAX, k));
                            next.push(v);
                            v
                        }
                    };
                    rdesc[v as usize].insert(s);
                    rmul[u as usize * k + li] = v;
                    rmul[v as usize * k + li] = u;
                }
            }
            level = next;
        }
        let n = words.len();
        let walk = |start: u32, w: &[Gen]| -> u32 {
            w.iter().fold(start, |x, &g| rmul[x as usize * k + local[g as usize] as usize])
        };
        let mut lmul = vec![0u32; n * k];
        let mut ldesc = vec![GenSet::EMPTY; n];
        for u in 0..n {
            for (li, &s) in gens.iter().enumerate() {
                let su = walk(rmul[li], &words[u]);
                lmul[u * k + li] = su;
                if len[su as usize] < len[u] {
                    ldesc[u].insert(s);
                }
            }
        }
        let inv: Vec<u32> = (0..n)
            .map(|u| {
                let rev: Vec<Gen> = words[u].iter().rev().copied().collect();
                walk(0, &rev)
            })
            .collect();
        let delta = (0..n).max_by_key(|&u| len[u]).unwrap() as u32;
        let tau: Vec<u32> = (0..n).map(|u| walk(walk(delta, &words[u]), &words[delta as usize])).collect();
        let lcomp: Vec<u32> = (0..n).map(|u| walk(delta, &words[inv[u] as usize])).collect();
        let rcomp: Vec<u32> = (0..n).map(|u| walk(inv[u], &words[delta as usize])).collect();
        Ok(Garside {
            graph,
            subset,
            types,
            gens,
            local,
            words,
            len,
            rmul,
            lmul,
            ldesc,
            rdesc,
            inv,
            tau,
            lcomp,
            rcomp,
            delta,
            limits,
        })
    }

    /// Process-wide cached structure for `(graph, subset)`.
    pub fn shared(graph: &Arc<CoxeterGraph>, subset: GenSet) -> Result<Arc<Garside>> {
        type Cache = Mutex<HashMap<(CoxeterGraph, GenSet), Arc<Garside>>>;
        static CACHE: OnceLock<Cache> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let key = ((**graph).clone(), subset);
        if let Some(gs) = cache.lock().unwrap().get(&key) {
            return Ok(gs.clone());
        }
        let gs = Arc::new(Garside::new(graph.clone(), subset)?);
        Ok(cache.lock().unwrap().entry(key).or_insert(gs).clone())
    }

    pub fn graph(&self) -> &Arc<CoxeterGraph> {
        &self.graph
    }

    pub fn subset(&self) -> GenSet {
        self.subset
    }

    /// Irreducible components of `X` with their types.
    pub fn types(&self) -> &[IrreducibleType] {
        &self.types
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    /// `|W_X|`, the number of simple elements.
    pub fn order(&self) -> usize {
        self.words.len()
    }

    pub fn simples(&self) -> impl Iterator<Item = Simple> {
        (0..self.words.len() as u32).map(Simple)
    }

    pub fn identity_simple(&self) -> Simple {
        Simple(0)
    }

    pub fn delta(&self) -> Simple {
        Simple(self.delta)
    }

    pub fn delta_len(&self) -> usize {
        self.len[self.delta as usize] as usize
    }

    pub fn atom(&self, g: Gen) -> Result<Simple> {
        match self.local.get(g as usize) {
            Some(&li) if li != NONE => Ok(Simple(self.rmul[li as usize])),
            _ => Err(Error::Invalid(format!("generator `{}` is outside the ambient subset", self.graph.name(g)))),
        }
    }

    /// Canonical (ShortLex) reduced word of a simple.
    pub fn simple_word(&self, x: Simple) -> &[Gen] {
        &self.words[x.0 as usize]
    }

    pub fn simple_len(&self, x: Simple) -> usize {
        self.len[x.0 as usize] as usize
    }

    pub fn left_descents(&self, x: Simple) -> GenSet {
        self.ldesc[x.0 as usize]
    }

    pub fn right_descents(&self, x: Simple) -> GenSet {
        self.rdesc[x.0 as usize]
    }

    fn r(&self, x: u32, g: Gen) -> u32 {
        self.rmul[x as usize * self.gens.len() + self.local[g as usize] as usize]
    }

    fn l(&self, g: Gen, x: u32) -> u32 {
        self.lmul[x as usize * self.gens.len() + self.local[g as usize] as usize]
    }

    /// The simple represented by a positive word, if the word is reduced.
    pub fn simple_from_word(&self, w: &[Gen]) -> Option<Simple> {
        let mut x = 0u32;
        for &g in w {
            if !self.subset.contains(g) || self.rdesc[x as usize].contains(g) {
                return None;
            }
            x = self.r(x, g);
        }
        Some(Simple(x))
    }

    /// Product in `W_X` (not necessarily simple as an Artin element).
    fn wmul(&self, x: u32, y: u32) -> u32 {
        self.words[y as usize].iter().fold(x, |acc, &g| self.r(acc, g))
    }

    /// `Δ x Δ⁻¹`.
    pub fn tau(&self, x: Simple) -> Simple {
        Simple(self.tau[x.0 as usize])
    }

    /// `Δ^k x Δ^{-k}`.
    pub fn tau_pow(&self, x: Simple, k: i64) -> Simple {
        if k % 2 == 0 {
            x
        } else {
            self.tau(x)
        }
    }

    /// `Δ x⁻¹`, the simple `d` with `d x = Δ`.
    pub fn left_complement(&self, x: Simple) -> Simple {
        Simple(self.lcomp[x.0 as usize])
    }

    /// `x⁻¹ Δ`, the simple `d` with `x d = Δ`.
    pub fn right_complement(&self, x: Simple) -> Simple {
        Simple(self.rcomp[x.0 as usize])
    }

    /// The simple spelled by the reverse of a reduced word of `x`.
    pub fn reverse_simple(&self, x: Simple) -> Simple {
        Simple(self.inv[x.0 as usize])
    }

    /// Is `a` a prefix of `b`?
    pub fn is_prefix(&self, a: Simple, b: Simple) -> bool {
        let rest = self.wmul(self.inv[a.0 as usize], b.0);
        self.len[rest as usize] + self.len[a.0 as usize] == self.len[b.0 as usize]
    }

    /// Is `a` a suffix of `b`?
    pub fn is_suffix(&self, a: Simple, b: Simple) -> bool {
        let rest = self.wmul(b.0, self.inv[a.0 as usize]);
        self.len[rest as usize] + self.len[a.0 as usize] == self.len[b.0 as usize]
    }

    fn meet_prefix(&self, a: Simple, b: Simple) -> Simple {
        let (mut c, mut ra, mut rb) = (0u32, a.0, b.0);
        while let Some(s) = self.ldesc[ra as usize].intersection(self.ldesc[rb as usize]).first() {
            c = self.r(c, s);
            ra = self.l(s, ra);
            rb = self.l(s, rb);
        }
        Simple(c)
    }

    fn meet_suffix(&self, a: Simple, b: Simple) -> Simple {
        let (mut c, mut ra, mut rb) = (0u32, a.0, b.0);
        while let Some(s) = self.rdesc[ra as usize].intersection(self.rdesc[rb as usize]).first() {
            c = self.l(s, c);
            ra = self.r(ra, s);
            rb = self.r(rb, s);
        }
        Simple(c)
    }

    pub fn meet(&self, a: Simple, b: Simple, order: Order) -> Simple {
        match order {
            Order::Prefix => self.meet_prefix(a, b),
            Order::Suffix => self.meet_suffix(a, b),
        }
    }

    /// Joins via complements: `x ↦ x⁻¹Δ` reverses the prefix order into the suffix order.
    pub fn join(&self, a: Simple, b: Simple, order: Order) -> Simple {
        match order {
            Order::Prefix => {
                let m = self.meet_suffix(self.right_complement(a), self.right_complement(b));
                self.left_complement(m)
            }
            Order::Suffix => {
                let m = self.meet_prefix(self.left_complement(a), self.left_complement(b));
                self.right_complement(m)
            }
        }
    }

    /// `(a ∧ b, a ∨ b)` in the chosen order.
    pub fn lattice(&self, a: Simple, b: Simple, order: Order) -> (Simple, Simple) {
        (self.meet(a, b, order), self.join(a, b, order))
    }

    /// `Δ_Y`, the join of the atoms of `Y ⊆ X`.
    pub fn delta_of(&self, y: GenSet) -> Result<Simple> {
        let mut acc = self.identity_simple();
        for g in y.iter() {
            acc = self.join(acc, self.atom(g)?, Order::Prefix);
        }
        Ok(acc)
    }

    /// `x · y` is left-weighted: every left descent of `y` is a right descent of `x`.
    pub fn is_left_weighted(&self, x: Simple, y: Simple) -> bool {
        self.ldesc[y.0 as usize].is_subset(self.rdesc[x.0 as usize])
    }

    /// Left sliding: `(xy ∧ Δ, (xy ∧ Δ)⁻¹ xy)`.
    pub fn slide(&self, x: Simple, y: Simple) -> (Simple, Simple) {
        let (mut x, mut y) = (x.0, y.0);
        while let Some(s) = self.ldesc[y as usize].difference(self.rdesc[x as usize]).first() {
            x = self.r(x, s);
            y = self.l(s, y);
        }
        (Simple(x), Simple(y))
    }

    /// Puts `Δ^p · factors` into left normal form by iterated left sliding.
    fn normal_form(&self, mut p: i64, mut f: Vec<Simple>) -> (i64, Vec<Simple>) {
        loop {
            let mut changed = false;
            for i in (0..f.len().saturating_sub(1)).rev() {
                let (a, b) = self.slide(f[i], f[i + 1]);
                if (a, b) != (f[i], f[i + 1]) {
                    f[i] = a;
                    f[i + 1] = b;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let lead = f.iter().take_while(|&&x| x == self.delta()).count();
        p += lead as i64;
        // Δ^p Δ^lead x ⋯ : the Δ's already sit on the left, nothing to conjugate.
        f.drain(..lead);
        while f.last() == Some(&self.identity_simple()) {
            f.pop();
        }
        (p, f)
    }

    /// Appends a simple to a normal form, sliding it leftwards.
    fn push_simple(&self, p: &mut i64, f: &mut Vec<Simple>, y: Simple) {
        if y == self.identity_simple() {
            return;
        }
        f.push(y);
        let mut i = f.len() - 1;
        while i > 0 {
            let (a, b) = self.slide(f[i - 1], f[i]);
            if (a, b) == (f[i - 1], f[i]) {
                break;
            }
            f[i - 1] = a;
            f[i] = b;
            i -= 1;
        }
        let lead = f.iter().take_while(|&&x| x == self.delta()).count();
        *p += lead as i64;
        f.drain(..lead);
        while f.last() == Some(&self.identity_simple()) {
            f.pop();
        }
    }

    pub fn identity(self: &Arc<Self>) -> GarsideElement {
        GarsideElement { gs: self.clone(), power: 0, factors: Vec::new() }
    }

    pub fn delta_power(self: &Arc<Self>, k: i64) -> GarsideElement {
        GarsideElement { gs: self.clone(), power: k, factors: Vec::new() }
    }

    pub fn from_simple(self: &Arc<Self>, x: Simple) -> GarsideElement {
        let (p, f) = self.normal_form(0, vec![x]);
        GarsideElement { gs: self.clone(), power: p, factors: f }
    }

    /// Builds an element from arbitrary simple factors, renormalizing.
    pub fn from_factors(self: &Arc<Self>, power: i64, factors: Vec<Simple>) -> GarsideElement {
        let (p, f) = self.normal_form(power, factors);
        GarsideElement { gs: self.clone(), power: p, factors: f }
    }

    /// Left normal form of a signed word over `X`.
    pub fn normalize(self: &Arc<Self>, w: &ArtinWord) -> Result<GarsideElement> {
        let mut p = 0i64;
        let mut f: Vec<Simple> = Vec::new();
        for &Letter { gen, inv } in w.letters() {
            let a = self.atom(gen)?;
            if inv {
                // x · s⁻¹ = Δ^{-1} τ(x) · (Δ s⁻¹)
                p -= 1;
                for x in f.iter_mut() {
                    *x = self.tau(*x);
                }
                self.push_simple(&mut p, &mut f, self.left_complement(a));
            } else {
                self.push_simple(&mut p, &mut f, a);
            }
        }
        Ok(GarsideElement { gs: self.clone(), power: p, factors: f })
    }

    /// Normal form of a positive word of generators.
    pub fn normalize_positive(self: &Arc<Self>, w: &[Gen]) -> Result<GarsideElement> {
        self.normalize(&ArtinWord::positive(w))
    }

    /// The simple `Δ_Y` as an element.
    pub fn delta_element(self: &Arc<Self>, y: GenSet) -> Result<GarsideElement> {
        Ok(self.from_simple(self.delta_of(y)?))
    }

    /// `(s_1 ⋯ s_n)^{k_Δ}` for irreducible `Y ⊆ X`, generators in declaration order.
    pub fn center_generator(self: &Arc<Self>, y: GenSet) -> Result<GarsideElement> {
        if !y.is_subset(self.subset) {
            return Err(Error::Invalid("subset is outside the ambient".into()));
        }
        let types = classify_spherical(&self.graph, y).ok_or(Error::NotSpherical)?;
        match types.as_slice() {
            [] => Ok(self.identity()),
            [t] => {
                let word: Vec<Gen> = y.iter().collect();
                self.normalize(&ArtinWord::positive(&word).pow(t.k_delta as i64))
            }
            _ => Err(Error::Reducible),
        }
    }

    /// Product of the centre generators of the irreducible components of `Y`.
    pub fn center(self: &Arc<Self>, y: GenSet) -> Result<GarsideElement> {
        let mut z = self.identity();
        for c in self.graph.components(y) {
            z = z.mul(&self.center_generator(c)?)?;
        }
        Ok(z)
    }

    fn same(&self, other: &Garside) -> bool {
        std::ptr::eq(self, other) || (self.subset == other.subset && self.graph == other.graph)
    }
}

/// `Δ^power · factors[0] ⋯ factors[r-1]` in left normal form.
#[derive(Clone)]
pub struct GarsideElement {
    gs: Arc<Garside>,
    power: i64,
    factors: Vec<Simple>,
}

impl PartialEq for GarsideElement {
    fn eq(&self, other: &Self) -> bool {
        self.power == other.power && self.factors == other.factors
    }
}

impl Eq for GarsideElement {}

impl Hash for GarsideElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.power.hash(state);
        self.factors.hash(state);
    }
}

impl fmt::Debug for GarsideElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}

/// `x'_r ⋯ x'_1 · Δ^power`, each pair left-weighted for the suffix order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightNormalForm {
    pub factors: Vec<Simple>,
    pub power: i64,
}

/// Result of iterating the swap until it repeats.
#[derive(Clone, Debug)]
pub struct Recurrence {
    /// First element of the circuit.
    pub witness: GarsideElement,
    /// `c` with `witness = c · g · c⁻¹`.
    pub conjugator: GarsideElement,
    pub circuit: Vec<GarsideElement>,
    /// Every iterate from `g` up to the first repeat.
    pub trace: Vec<GarsideElement>,
}

impl GarsideElement {
    pub fn garside(&self) -> &Arc<Garside> {
        &self.gs
    }

    pub fn power(&self) -> i64 {
        self.power
    }

    pub fn factors(&self) -> &[Simple] {
        &self.factors
    }

    pub fn inf(&self) -> i64 {
        self.power
    }

    pub fn sup(&self) -> i64 {
        self.power + self.factors.len() as i64
    }

    pub fn canonical_len(&self) -> usize {
        self.factors.len()
    }

    /// `(inf, sup, len)`.
    pub fn profile(&self) -> (i64, i64, usize) {
        (self.inf(), self.sup(), self.canonical_len())
    }

    pub fn is_identity(&self) -> bool {
        self.power == 0 && self.factors.is_empty()
    }

    /// `inf ≥ 0`.
    pub fn is_positive(&self) -> bool {
        self.power >= 0
    }

    /// `sup ≤ 0`.
    pub fn is_negative(&self) -> bool {
        self.sup() <= 0
    }

    /// Every adjacent pair of factors passes the descent-set test, no factor is `1` or `Δ`.
    pub fn is_left_weighted(&self) -> bool {
        let gs = &self.gs;
        self.factors.iter().all(|&x| x != gs.identity_simple() && x != gs.delta())
            && self.factors.windows(2).all(|w| gs.is_left_weighted(w[0], w[1]))
    }

    fn check(&self, other: &GarsideElement) -> Result<()> {
        if self.gs.same(&other.gs) {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    pub fn mul(&self, other: &GarsideElement) -> Result<GarsideElement> {
        self.check(other)?;
        let gs = &self.gs;
        let mut f: Vec<Simple> = self.factors.iter().map(|&x| gs.tau_pow(x, other.power)).collect();
        f.extend_from_slice(&other.factors);
        Ok(gs.from_factors(self.power + other.power, f))
    }

    /// Inverse via the complement formula; the output is emitted already in left normal form.
    pub fn inverse(&self) -> GarsideElement {
        let gs = &self.gs;
        let (p, r) = (self.power, self.factors.len() as i64);
        let factors: Vec<Simple> = (1..=r)
            .rev()
            .map(|i| gs.tau_pow(gs.left_complement(self.factors[(i - 1) as usize]), p + i - 1))
            .collect();
        GarsideElement { gs: gs.clone(), power: -(p + r), factors }
    }

    /// `c · self · c⁻¹`.
    pub fn conjugate_by(&self, c: &GarsideElement) -> Result<GarsideElement> {
        c.mul(self)?.mul(&c.inverse())
    }

    pub fn pow(&self, k: i64) -> GarsideElement {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = self.gs.identity();
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base).unwrap();
        }
        out
    }

    pub fn to_word(&self) -> ArtinWord {
        let gs = &self.gs;
        let delta = ArtinWord::positive(gs.simple_word(gs.delta()));
        let mut w = delta.pow(self.power);
        for &x in &self.factors {
            w = w.concat(&ArtinWord::positive(gs.simple_word(x)));
        }
        w
    }

    /// Sum of exponents of any representing word.
    pub fn exponent_sum(&self) -> i64 {
        let gs = &self.gs;
        self.power * gs.delta_len() as i64 + self.factors.iter().map(|&x| gs.simple_len(x) as i64).sum::<i64>()
    }

    /// The anti-automorphism fixing every generator.
    pub fn reverse(&self) -> GarsideElement {
        let gs = &self.gs;
        let f: Vec<Simple> = self.factors.iter().rev().map(|&x| gs.tau_pow(gs.reverse_simple(x), self.power)).collect();
        gs.from_factors(self.power, f)
    }

    /// Right normal form, obtained by mirroring.
    pub fn right_normal_form(&self) -> RightNormalForm {
        let gs = &self.gs;
        let m = self.reverse();
        RightNormalForm { factors: m.factors.iter().rev().map(|&x| gs.reverse_simple(x)).collect(), power: m.power }
    }

    /// `(a, b)` positive with `self = a⁻¹ b` and `a ∧ b = 1`.
    pub fn mixed_np(&self) -> (GarsideElement, GarsideElement) {
        let gs = &self.gs;
        if self.power >= 0 {
            return (gs.identity(), self.clone());
        }
        let k = self.factors.len().min((-self.power) as usize);
        let a_inv = GarsideElement { gs: gs.clone(), power: self.power, factors: self.factors[..k].to_vec() };
        let b = GarsideElement { gs: gs.clone(), power: 0, factors: self.factors[k..].to_vec() };
        (a_inv.inverse(), b)
    }

    /// `(a, b)` positive with `self = a b⁻¹` and trivial suffix gcd.
    pub fn mixed_pn(&self) -> (GarsideElement, GarsideElement) {
        let (a, b) = self.reverse().mixed_np();
        (b.reverse(), a.reverse())
    }

    /// `(c(α), t)` with `t = Δ^p x_1 Δ^{-p}` and `c(α) = t⁻¹ α t`.
    pub fn cycling(&self) -> Result<(GarsideElement, GarsideElement)> {
        let gs = &self.gs;
        let first = *self.factors.first().ok_or(Error::PureDeltaPower)?;
        let t = gs.from_simple(gs.tau_pow(first, self.power));
        let mut f: Vec<Simple> = self.factors[1..].to_vec();
        f.push(t.factors[0]);
        let result = gs.from_factors(self.power, f);
        Ok((result, t))
    }

    /// `(b a⁻¹, a)` for `self = a⁻¹ b`; the result is `a · self · a⁻¹`.
    pub fn swap(&self) -> (GarsideElement, GarsideElement) {
        let (a, b) = self.mixed_np();
        let result = b.mul(&a.inverse()).unwrap();
        (result, a)
    }

    /// Iterates the swap until an iterate repeats.
    pub fn recurrent(&self) -> Result<Recurrence> {
        let cap = self.gs.limits.swap_iterations;
        let mut seen: HashMap<GarsideElement, usize> = HashMap::new();
        let mut trace: Vec<GarsideElement> = Vec::new();
        let mut conjs: Vec<GarsideElement> = Vec::new();
        let mut x = self.clone();
        let mut c = self.gs.identity();
        loop {
            if let Some(&m) = seen.get(&x) {
                return Ok(Recurrence {
                    witness: trace[m].clone(),
                    conjugator: conjs[m].clone(),
                    circuit: trace[m..].to_vec(),
                    trace,
                });
            }
            if trace.len() >= cap {
                return Err(Error::CapExceeded { what: "swap iteration", cap });
            }
            seen.insert(x.clone(), trace.len());
            trace.push(x.clone());
            conjs.push(c.clone());
            let (next, a) = x.swap();
            c = a.mul(&c)?;
            x = next;
        }
    }

    /// Generators occurring in the np form.
    pub fn support(&self) -> GenSet {
        let (a, b) = self.mixed_np();
        a.positive_support().union(b.positive_support())
    }

    fn positive_support(&self) -> GenSet {
        let gs = &self.gs;
        let mut s = if self.power > 0 { gs.subset } else { GenSet::EMPTY };
        for &x in &self.factors {
            s = s.union(gs.simple_word(x).iter().copied().collect());
        }
        s
    }

    /// `self ∈ A_Y`.
    pub fn member_standard(&self, y: GenSet) -> bool {
        self.support().is_subset(y)
    }

    /// Human-readable form `Δ^p · x1 · x2`.
    pub fn display(&self) -> String {
        let gs = &self.gs;
        let mut parts = Vec::new();
        if self.power != 0 {
            parts.push(format!("Δ^{}", self.power));
        }
        for &x in &self.factors {
            parts.push(gs.graph.format_gens(gs.simple_word(x)));
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join(" · ")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    fn gs(g: CoxeterGraph) -> Arc<Garside> {
        let all = g.all();
        Arc::new(Garside::new(Arc::new(g), all).unwrap())
    }

    fn w(gs: &Arc<Garside>, s: &str) -> GarsideElement {
        gs.normalize(&gs.graph().parse_word(s).unwrap()).unwrap()
    }

    #[test]
    fn group_orders() {
        assert_eq!(gs(families::type_a(2)).order(), 6);
        assert_eq!(gs(families::type_a(3)).order(), 24);
        assert_eq!(gs(families::type_b(3)).order(), 48);
        assert_eq!(gs(families::type_h(3)).order(), 120);
        assert_eq!(gs(families::type_d(4)).order(), 192);
        assert_eq!(gs(families::dihedral(7)).order(), 14);
    }

    #[test]
    fn non_spherical_is_rejected() {
        let g = Arc::new(families::affine_a(2));
        assert!(matches!(Garside::new(g.clone(), g.all()), Err(Error::NotSpherical)));
    }

    #[test]
    fn lattice_in_a2() {
        let a2 = gs(families::type_a(2));
        let (s, t) = (a2.atom(0).unwrap(), a2.atom(1).unwrap());
        assert_eq!(a2.meet(s, t, Order::Prefix), a2.identity_simple());
        assert_eq!(a2.join(s, t, Order::Prefix), a2.delta());
        assert_eq!(a2.simple_word(a2.delta()), &[0, 1, 0]);
        assert_eq!(a2.meet(s, s, Order::Suffix), s);
        assert_eq!(a2.join(s, t, Order::Suffix), a2.delta());
    }

    #[test]
    fn lattice_matches_brute_force_on_b3() {
        let b3 = gs(families::type_b(3));
        let all: Vec<Simple> = b3.simples().collect();
        for &a in &all {
            for &b in all.iter().step_by(5) {
                for order in [Order::Prefix, Order::Suffix] {
                    let below = |x: Simple, y: Simple| match order {
                        Order::Prefix => b3.is_prefix(x, y),
                        Order::Suffix => b3.is_suffix(x, y),
                    };
                    let lower: Vec<Simple> = all.iter().copied().filter(|&c| below(c, a) && below(c, b)).collect();
                    let meet = *lower.iter().max_by_key(|&&c| b3.simple_len(c)).unwrap();
                    assert!(lower.iter().all(|&c| below(c, meet)));
                    let upper: Vec<Simple> = all.iter().copied().filter(|&c| below(a, c) && below(b, c)).collect();
                    let join = *upper.iter().min_by_key(|&&c| b3.simple_len(c)).unwrap();
                    assert_eq!(b3.lattice(a, b, order), (meet, join));
                }
            }
        }
    }

    #[test]
    fn h3_delta() {
        let g = CoxeterGraph::parse("generators: a b c\ndefault: 2\na b 3\nb c 5\n").unwrap();
        let h3 = gs(g);
        let d = h3.delta();
        assert_eq!(h3.graph().format_gens(h3.simple_word(d)), "abacbacbacbacbc");
        let book = h3.graph().parse_word("b a b c b a c b c b a b c b c").unwrap();
        assert_eq!(h3.simple_from_word(&book.gens()), Some(d));
        assert_eq!(w(&h3, "a b c").pow(5), h3.delta_power(1));
    }

    #[test]
    fn normal_form_examples() {
        let a2 = gs(families::type_a(2));
        assert_eq!(w(&a2, "s1 s2 s1").profile(), (1, 1, 0));
        let inv = w(&a2, "s1^-1");
        assert_eq!(inv.power(), -1);
        assert_eq!(inv.factors().len(), 1);
        assert_eq!(a2.simple_word(inv.factors()[0]), &[0, 1]);
        assert_eq!(inv.profile(), (-1, 0, 1));
        assert!(w(&a2, "").is_identity());
        assert_eq!(w(&a2, "s1 s2 s1 s2 s1 s2"), a2.delta_power(2));
    }

    #[test]
    fn inverse_examples() {
        let a2 = gs(families::type_a(2));
        assert_eq!(a2.delta_power(1).inverse().profile(), (-1, -1, 0));
        assert_eq!(w(&a2, "s1").inverse(), w(&a2, "s1^-1"));
        let g = w(&a2, "s1 s2 s2 s1^-1 s2");
        assert!(g.mul(&g.inverse()).unwrap().is_identity());
        assert!(g.inverse().is_left_weighted());
    }

    #[test]
    fn mixed_form_examples() {
        let a2 = gs(families::type_a(2));
        let g = w(&a2, "s1 s2 s2");
        let (a, b) = g.mixed_np();
        assert!(a.is_identity() && b == g);
        let (a, b) = w(&a2, "s1^-1 s2").mixed_np();
        assert_eq!((a, b), (w(&a2, "s1"), w(&a2, "s2")));
        let (a, b) = a2.delta_power(-1).mixed_np();
        assert_eq!(a, a2.delta_power(1));
        assert!(b.is_identity());
        let (p, n) = w(&a2, "s1 s2^-1").mixed_pn();
        assert_eq!((p, n), (w(&a2, "s1"), w(&a2, "s2")));
    }

    #[test]
    fn swap_and_recurrence_examples() {
        let a2 = gs(families::type_a(2));
        let g = w(&a2, "s2^-1 s1 s2");
        let (r, a) = g.swap();
        assert_eq!(r, w(&a2, "s1"));
        assert_eq!(g.conjugate_by(&a).unwrap(), r);
        let rec = g.recurrent().unwrap();
        assert_eq!(rec.witness, w(&a2, "s1"));
        assert_eq!(g.conjugate_by(&rec.conjugator).unwrap(), rec.witness);
        let pos = w(&a2, "s1 s2");
        let rec = pos.recurrent().unwrap();
        assert_eq!((rec.witness.clone(), rec.circuit.len()), (pos.clone(), 1));
        assert!(rec.conjugator.is_identity());
        assert_eq!(a2.delta_power(-1).recurrent().unwrap().witness, a2.delta_power(-1));
    }

    #[test]
    fn cycling_examples() {
        let a2 = gs(families::type_a(2));
        assert!(matches!(a2.delta_power(2).cycling(), Err(Error::PureDeltaPower)));
        let g = w(&a2, "s1 s1 s2");
        let (c, t) = g.cycling().unwrap();
        assert_eq!(t.inverse().mul(&g).unwrap().mul(&t).unwrap(), c);
        assert_eq!(c, w(&a2, "s1 s2 s1"));
        // s2⁻¹ s1 s2 reaches a positive conjugate by cycling.
        let mut x = w(&a2, "s2^-1 s1 s2");
        let mut steps = 0;
        while !x.is_positive() {
            x = x.cycling().unwrap().0;
            steps += 1;
            assert!(steps <= 6);
        }
        assert_eq!(x.exponent_sum(), 1);
    }

    #[test]
    fn support_center_membership() {
        let a2 = gs(families::type_a(2));
        assert_eq!(a2.identity().support(), GenSet::EMPTY);
        assert_eq!(a2.delta_power(1).support(), a2.subset());
        assert_eq!(w(&a2, "s1^-1 s2").support(), GenSet(0b11));
        assert_eq!(a2.center_generator(GenSet(0b01)).unwrap(), w(&a2, "s1"));
        assert_eq!(a2.center_generator(GenSet(0b11)).unwrap(), a2.delta_power(2));
        let b2 = gs(families::type_b(2));
        assert_eq!(b2.center_generator(b2.subset()).unwrap(), b2.delta_power(1));
        assert!(w(&a2, "").member_standard(GenSet::EMPTY));
        assert!(!w(&a2, "s1^-1").member_standard(GenSet(0b10)));
        assert!(a2.delta_power(1).member_standard(GenSet(0b11)));
        let a3 = gs(families::type_a(3));
        assert!(matches!(a3.center_generator(GenSet(0b101)), Err(Error::Reducible)));
        assert_eq!(a3.center(GenSet(0b101)).unwrap(), w(&a3, "s1 s3"));
    }

    #[test]
    fn tau_permutes_atoms() {
        for g in [families::type_a(3), families::type_b(3), families::type_d(4), families::dihedral(5)] {
            let gs = gs(g);
            for s in gs.subset().iter() {
                let a = gs.atom(s).unwrap();
                assert_eq!(gs.simple_len(gs.tau(a)), 1);
                let conj = gs.delta_power(-1).mul(&gs.from_simple(a)).unwrap().mul(&gs.delta_power(1)).unwrap();
                assert_eq!(conj.canonical_len(), 1);
                assert_eq!(conj.power(), 0);
            }
        }
    }

    #[test]
    fn ambient_mismatch() {
        let a2 = gs(families::type_a(2));
        let b2 = gs(families::type_b(2));
        assert!(matches!(a2.identity().mul(&b2.identity()), Err(Error::AmbientMismatch)));
    }
}
