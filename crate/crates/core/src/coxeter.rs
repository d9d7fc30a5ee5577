//! Coxeter groups through Tits' solution of the word problem.
//!
//! A positive word is reduced iff no word in its braid-move orbit contains a
//! square `ss`. Elements are stored as the ShortLex-least reduced word in the
//! declaration order of the generators. Words are reduced one letter at a time,
//! so every orbit enumerated here is the orbit of a reduced word.

use crate::error::{Error, Result};
use crate::graph::CoxeterGraph;
use crate::limits::Limits;
use crate::word::{ArtinWord, Gen, GenSet};
use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex};

/// An element of a Coxeter group, held as its canonical reduced word.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CoxeterElement {
    word: Vec<Gen>,
}

impl CoxeterElement {
    pub fn identity() -> Self {
        CoxeterElement { word: Vec::new() }
    }

    pub fn word(&self) -> &[Gen] {
        &self.word
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// Generators occurring in the canonical word (the same for every reduced word).
    pub fn support(&self) -> GenSet {
        self.word.iter().copied().collect()
    }

    /// The minimal positive Artin lift.
    pub fn lift(&self) -> ArtinWord {
        ArtinWord::positive(&self.word)
    }
}

#[derive(Debug)]
struct OrbitInfo {
    canon: Vec<Gen>,
    ldesc: GenSet,
    rdesc: GenSet,
    /// For each left descent `s`, an orbit member starting with `s`, minus that letter.
    left_rest: Vec<(Gen, Vec<Gen>)>,
    /// For each right descent `s`, an orbit member ending with `s`, minus that letter.
    right_rest: Vec<(Gen, Vec<Gen>)>,
}

/// Orbits above this size are memoized under their canonical word only.
const MEMO_ORBIT_ENTRIES: usize = 4096;
const MEMO_MAX_KEYS: usize = 4_000_000;

/// Word-problem kernel for one Coxeter graph, with a shared orbit memo.
#[derive(Debug)]
pub struct Coxeter {
    graph: Arc<CoxeterGraph>,
    limits: Limits,
    memo: Mutex<HashMap<Vec<Gen>, Arc<OrbitInfo>>>,
}

impl Coxeter {
    pub fn new(graph: Arc<CoxeterGraph>) -> Self {
        Coxeter::with_limits(graph, Limits::global())
    }

    pub fn with_limits(graph: Arc<CoxeterGraph>, limits: Limits) -> Self {
        Coxeter { graph, limits, memo: Mutex::new(HashMap::new()) }
    }

    pub fn graph(&self) -> &Arc<CoxeterGraph> {
        &self.graph
    }

    fn check_letters(&self, w: &[Gen]) -> Result<()> {
        match w.iter().find(|&&g| g as usize >= self.graph.rank()) {
            Some(g) => Err(Error::UnknownGenerator(format!("#{g}"))),
            None => Ok(()),
        }
    }

    /// Enumerates the braid-move orbit of a reduced word.
    fn orbit(&self, word: &[Gen]) -> Result<Vec<Vec<Gen>>> {
        let g = &*self.graph;
        let mut seen: HashSet<Vec<Gen>> = HashSet::new();
        let mut out = vec![word.to_vec()];
        seen.insert(word.to_vec());
        let mut i = 0;
        while i < out.len() {
            let w = out[i].clone();
            i += 1;
            for p in 0..w.len().saturating_sub(1) {
                let (a, b) = (w[p], w[p + 1]);
                if a == b {
                    return Err(Error::Invalid("orbit of a non-reduced word".into()));
                }
                let Some(m) = g.m(a, b) else { continue };
                let m = m as usize;
                if p + m > w.len() {
                    continue;
                }
                if !(0..m).all(|k| w[p + k] == if k % 2 == 0 { a } else { b }) {
                    continue;
                }
                let mut next = w.clone();
                for k in 0..m {
                    next[p + k] = if k % 2 == 0 { b } else { a };
                }
                if seen.insert(next.clone()) {
                    out.push(next);
                    if out.len() > self.limits.orbit {
                        return Err(Error::CapExceeded { what: "braid-move orbit", cap: self.limits.orbit });
                    }
                }
            }
        }
        Ok(out)
    }

    fn info(&self, word: &[Gen]) -> Result<Arc<OrbitInfo>> {
        if let Some(info) = self.memo.lock().unwrap().get(word) {
            return Ok(info.clone());
        }
        let orbit = self.orbit(word)?;
        let mut info = OrbitInfo {
            canon: orbit.iter().min_by(|a, b| a.cmp(b)).cloned().unwrap_or_default(),
            ldesc: GenSet::EMPTY,
            rdesc: GenSet::EMPTY,
            left_rest: Vec::new(),
            right_rest: Vec::new(),
        };
        for w in &orbit {
            if let (Some(&f), Some(&l)) = (w.first(), w.last()) {
                if !info.ldesc.contains(f) {
                    info.ldesc.insert(f);
                    info.left_rest.push((f, w[1..].to_vec()));
                }
                if !info.rdesc.contains(l) {
                    info.rdesc.insert(l);
                    info.right_rest.push((l, w[..w.len() - 1].to_vec()));
                }
            }
        }
        let info = Arc::new(info);
        let mut memo = self.memo.lock().unwrap();
        if memo.len() > MEMO_MAX_KEYS {
            memo.clear();
        }
        if orbit.len() <= MEMO_ORBIT_ENTRIES {
            for w in orbit {
                memo.insert(w, info.clone());
            }
        } else {
            memo.insert(word.to_vec(), info.clone());
            memo.insert(info.canon.clone(), info.clone());
        }
        Ok(info)
    }

    /// `u · s`.
    pub fn mul_gen(&self, u: &CoxeterElement, s: Gen) -> Result<CoxeterElement> {
        self.check_letters(&[s])?;
        let info = self.info(&u.word)?;
        let next = if info.rdesc.contains(s) {
            let rest = &info.right_rest.iter().find(|(g, _)| *g == s).unwrap().1;
            self.info(rest)?.canon.clone()
        } else {
            let mut w = u.word.clone();
            w.push(s);
            self.info(&w)?.canon.clone()
        };
        Ok(CoxeterElement { word: next })
    }

    /// `s · u`.
    pub fn gen_mul(&self, s: Gen, u: &CoxeterElement) -> Result<CoxeterElement> {
        self.check_letters(&[s])?;
        let info = self.info(&u.word)?;
        let next = if info.ldesc.contains(s) {
            let rest = &info.left_rest.iter().find(|(g, _)| *g == s).unwrap().1;
            self.info(rest)?.canon.clone()
        } else {
            let mut w = Vec::with_capacity(u.word.len() + 1);
            w.push(s);
            w.extend_from_slice(&u.word);
            self.info(&w)?.canon.clone()
        };
        Ok(CoxeterElement { word: next })
    }

    /// Canonical reduced form of a positive word.
    pub fn reduce(&self, w: &[Gen]) -> Result<CoxeterElement> {
        self.check_letters(w)?;
        let mut u = CoxeterElement::identity();
        for &s in w {
            u = self.mul_gen(&u, s)?;
        }
        Ok(u)
    }

    /// The image of an Artin word: signs are forgotten.
    pub fn theta(&self, w: &ArtinWord) -> Result<CoxeterElement> {
        self.reduce(&w.gens())
    }

    pub fn mul(&self, u: &CoxeterElement, v: &CoxeterElement) -> Result<CoxeterElement> {
        let mut out = u.clone();
        for &s in &v.word {
            out = self.mul_gen(&out, s)?;
        }
        Ok(out)
    }

    pub fn inverse(&self, u: &CoxeterElement) -> Result<CoxeterElement> {
        let rev: Vec<Gen> = u.word.iter().rev().copied().collect();
        Ok(CoxeterElement { word: self.info(&rev)?.canon.clone() })
    }

    /// `u · v · u⁻¹`.
    pub fn conj(&self, u: &CoxeterElement, v: &CoxeterElement) -> Result<CoxeterElement> {
        self.mul(&self.mul(u, v)?, &self.inverse(u)?)
    }

    /// `(leftSet, rightSet)`: generators shortening `u` on that side.
    pub fn descents(&self, u: &CoxeterElement) -> Result<(GenSet, GenSet)> {
        let info = self.info(&u.word)?;
        Ok((info.ldesc, info.rdesc))
    }

    /// `u = u0 · u1` with `u0 ∈ W_X` and `u1` minimal in `W_X u1`.
    pub fn coset_split(&self, u: &CoxeterElement, x: GenSet) -> Result<(CoxeterElement, CoxeterElement)> {
        let mut u0 = CoxeterElement::identity();
        let mut u1 = u.clone();
        loop {
            let (ldesc, _) = self.descents(&u1)?;
            match ldesc.intersection(x).first() {
                Some(s) => {
                    u1 = self.gen_mul(s, &u1)?;
                    u0 = self.mul_gen(&u0, s)?;
                }
                None => return Ok((u0, u1)),
            }
        }
    }

    /// `u = u1 · u0` with `u0 ∈ W_X` and `u1` minimal in `u1 W_X`.
    pub fn coset_split_right(&self, u: &CoxeterElement, x: GenSet) -> Result<(CoxeterElement, CoxeterElement)> {
        let mut u0 = CoxeterElement::identity();
        let mut u1 = u.clone();
        loop {
            let (_, rdesc) = self.descents(&u1)?;
            match rdesc.intersection(x).first() {
                Some(s) => {
                    u1 = self.mul_gen(&u1, s)?;
                    u0 = self.gen_mul(s, &u0)?;
                }
                None => return Ok((u1, u0)),
            }
        }
    }

    /// `u = a · d · b` with `a ∈ W_X`, `b ∈ W_Z`, lengths adding and `d`
    /// the minimal element of the double coset `W_X u W_Z`.
    pub fn double_coset_split(
        &self,
        u: &CoxeterElement,
        x: GenSet,
        z: GenSet,
    ) -> Result<(CoxeterElement, CoxeterElement, CoxeterElement)> {
        let mut a = CoxeterElement::identity();
        let mut d = u.clone();
        let mut b = CoxeterElement::identity();
        loop {
            let (ldesc, rdesc) = self.descents(&d)?;
            if let Some(s) = ldesc.intersection(x).first() {
                d = self.gen_mul(s, &d)?;
                a = self.mul_gen(&a, s)?;
            } else if let Some(s) = rdesc.intersection(z).first() {
                d = self.mul_gen(&d, s)?;
                b = self.gen_mul(s, &b)?;
            } else {
                return Ok((a, d, b));
            }
        }
    }

    /// `Some(t)` when `u s u⁻¹` is the generator `t`.
    pub fn conj_gen(&self, u: &CoxeterElement, s: Gen) -> Result<Option<Gen>> {
        let c = self.conj(u, &CoxeterElement { word: vec![s] })?;
        Ok((c.len() == 1).then(|| c.word[0]))
    }

    pub fn is_in_parabolic(&self, u: &CoxeterElement, x: GenSet) -> bool {
        u.support().is_subset(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    fn a2() -> Coxeter {
        Coxeter::new(Arc::new(families::type_a(2)))
    }

    /// Permutation oracle for W(A_n) = S_{n+1}: s_i swaps positions i-1 and i.
    fn perm(n: usize, w: &[Gen]) -> Vec<usize> {
        let mut p: Vec<usize> = (0..=n).collect();
        for &s in w {
            p.swap(s as usize, s as usize + 1);
        }
        p
    }

    fn inversions(p: &[usize]) -> usize {
        (0..p.len()).flat_map(|i| (i + 1..p.len()).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count()
    }

    /// Signed-permutation oracle for W(B_2) with s1 the swap, s2 the sign change of the last coordinate.
    fn signed_b2(w: &[Gen]) -> [i32; 2] {
        let mut v = [1, 2];
        for &s in w {
            if s == 0 {
                v.swap(0, 1);
            } else {
                v[1] = -v[1];
            }
        }
        v
    }

    fn all_words(n: Gen, max: usize) -> Vec<Vec<Gen>> {
        let mut out = vec![vec![]];
        let mut frontier = vec![vec![]];
        for _ in 0..max {
            let mut next = Vec::new();
            for w in &frontier {
                for s in 0..n {
                    let mut v: Vec<Gen> = w.clone();
                    v.push(s);
                    next.push(v);
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    #[test]
    fn spec_examples_a2() {
        let c = a2();
        assert!(c.reduce(&[0, 0]).unwrap().is_identity());
        assert_eq!(c.reduce(&[0, 1, 0]).unwrap().word(), &[0, 1, 0]);
        assert_eq!(c.reduce(&[1, 0, 1]).unwrap().word(), &[0, 1, 0]);
        assert_eq!(c.reduce(&[0, 1, 0, 1]).unwrap().word(), &[1, 0]);
        let st = c.reduce(&[0, 1]).unwrap();
        assert_eq!(c.mul(&st, &st).unwrap().word(), &[1, 0]);
        assert_eq!(c.descents(&st).unwrap(), (GenSet::single(0), GenSet::single(1)));
        let (u0, u1) = c.coset_split(&st, GenSet::single(0)).unwrap();
        assert_eq!((u0.word(), u1.word()), (&[0][..], &[1][..]));
    }

    #[test]
    fn matches_permutation_oracle_on_a3() {
        let c = Coxeter::new(Arc::new(families::type_a(3)));
        for w in all_words(3, 7) {
            let r = c.reduce(&w).unwrap();
            assert_eq!(perm(3, r.word()), perm(3, &w), "{w:?}");
            assert_eq!(r.len(), inversions(&perm(3, &w)));
            assert_eq!(c.reduce(r.word()).unwrap(), r);
        }
    }

    #[test]
    fn a3_has_24_elements_and_b2_has_8() {
        let c = Coxeter::new(Arc::new(families::type_a(3)));
        let els: HashSet<_> = all_words(3, 6).iter().map(|w| c.reduce(w).unwrap()).collect();
        assert_eq!(els.len(), 24);
        let b = Coxeter::new(Arc::new(families::type_b(2)));
        let mut by_oracle: HashMap<[i32; 2], CoxeterElement> = HashMap::new();
        for w in all_words(2, 6) {
            let r = b.reduce(&w).unwrap();
            let key = signed_b2(&w);
            assert_eq!(signed_b2(r.word()), key);
            if let Some(prev) = by_oracle.insert(key, r.clone()) {
                assert_eq!(prev, r);
            }
        }
        assert_eq!(by_oracle.len(), 8);
    }

    #[test]
    fn exchange_parity_and_coset_split_on_small_groups() {
        for g in [families::type_a(2), families::type_b(2), families::type_a(3), families::type_b(3)] {
            let n = g.rank() as Gen;
            let c = Coxeter::new(Arc::new(g));
            let els: HashSet<_> = all_words(n, 9).iter().map(|w| c.reduce(w).unwrap()).collect();
            for u in &els {
                let (l, r) = c.descents(u).unwrap();
                for s in 0..n {
                    let us = c.mul_gen(u, s).unwrap();
                    assert_eq!(us.len() + 1 == u.len(), r.contains(s));
                    assert!(us.len() + 1 == u.len() || us.len() == u.len() + 1);
                    let su = c.gen_mul(s, u).unwrap();
                    assert_eq!(su.len() + 1 == u.len(), l.contains(s));
                }
                for x in 0..(1u64 << n) {
                    let x = GenSet(x);
                    let (u0, u1) = c.coset_split(u, x).unwrap();
                    assert!(u0.support().is_subset(x));
                    assert_eq!(c.mul(&u0, &u1).unwrap(), *u);
                    assert_eq!(u0.len() + u1.len(), u.len());
                    assert!(c.descents(&u1).unwrap().0.intersection(x).is_empty());
                }
            }
        }
    }

    #[test]
    fn theta_forgets_signs() {
        let c = a2();
        let g = families::type_a(2);
        assert!(c.theta(&g.parse_word("s1 s1^-1").unwrap()).unwrap().is_identity());
        assert_eq!(c.theta(&g.parse_word("s1^-1").unwrap()).unwrap().word(), &[0]);
    }

    #[test]
    fn infinite_label_has_no_braid_move() {
        let g = CoxeterGraph::parse("generators: s t\ndefault: inf\n").unwrap();
        let c = Coxeter::new(Arc::new(g));
        let u = c.reduce(&[0, 1, 0, 1, 0, 1]).unwrap();
        assert_eq!(u.len(), 6);
        assert!(c.reduce(&[0, 1, 1, 0]).unwrap().is_identity());
    }

    #[test]
    fn double_coset_split_reassembles() {
        let c = Coxeter::new(Arc::new(families::type_a(3)));
        for w in all_words(3, 6) {
            let u = c.reduce(&w).unwrap();
            let (a, d, b) = c.double_coset_split(&u, GenSet(0b001), GenSet(0b100)).unwrap();
            assert_eq!(c.mul(&c.mul(&a, &d).unwrap(), &b).unwrap(), u);
            assert_eq!(a.len() + d.len() + b.len(), u.len());
        }
    }

    #[test]
    fn orbit_cap_is_enforced() {
        let g = Arc::new(families::type_a(4));
        let c = Coxeter::with_limits(g, Limits { orbit: 10, ..Limits::default() });
        let err = c.reduce(&[0, 1, 0, 2, 1, 0, 3, 2, 1, 0]).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }));
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use crate::graph::families;
    use proptest::prelude::*;

    fn kernel() -> Coxeter {
        Coxeter::new(Arc::new(families::type_b(3)))
    }

    proptest! {
        #[test]
        fn theta_is_a_homomorphism(a in prop::collection::vec((0u8..3, any::<bool>()), 0..12),
                                   b in prop::collection::vec((0u8..3, any::<bool>()), 0..12)) {
            let c = kernel();
            let wa: ArtinWord = a.iter().map(|&(g, inv)| crate::word::Letter { gen: g, inv }).collect();
            let wb: ArtinWord = b.iter().map(|&(g, inv)| crate::word::Letter { gen: g, inv }).collect();
            let lhs = c.theta(&wa.concat(&wb)).unwrap();
            let rhs = c.mul(&c.theta(&wa).unwrap(), &c.theta(&wb).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn reduce_is_idempotent_and_inverse_cancels(w in prop::collection::vec(0u8..3, 0..14)) {
            let c = kernel();
            let u = c.reduce(&w).unwrap();
            prop_assert!(u.len() <= w.len());
            prop_assert_eq!(c.reduce(u.word()).unwrap(), u.clone());
            prop_assert!(c.mul(&u, &c.inverse(&u).unwrap()).unwrap().is_identity());
        }
    }
}
