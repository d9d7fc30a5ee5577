//! The affine braid group `A[Ã_n]` inside `A[B_{n+1}]`.
//!
//! `φ(t_i) = r_i` for `1 ≤ i ≤ n` and `φ(t_0) = ρ r_n ρ⁻¹` with `ρ = r_1 ⋯ r_{n+1}`.
//! The image is the kernel of `ξ`, the exponent sum of `r_{n+1}`, and conjugation
//! by `ρ` acts on the image as the rotation `f : t_i ↦ t_{i+1}`.

use crate::error::{Error, Result};
use crate::garside::{Garside, GarsideElement};
use crate::graph::{families, CoxeterGraph};
use crate::parabolic::{intersect, Intersection, Parabolic};
use crate::word::{ArtinWord, Gen, GenSet, Letter};
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct Euclid {
    n: usize,
    source: Arc<CoxeterGraph>,
    target: Arc<Garside>,
}

/// `h A_X h⁻¹` in `A[Ã_n]`, conjugator kept as a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineParabolic {
    pub conj: ArtinWord,
    pub base: GenSet,
}

impl Euclid {
    /// Standard names `t0 … tn` and `r1 … r_{n+1}`.
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Invalid("the affine cycle needs n ≥ 2".into()));
        }
        Euclid::for_graph(&families::affine_a(n))
    }

    /// Accepts a cycle `t_0 – t_1 – ⋯ – t_n – t_0` labelled 3 in declaration order.
    pub fn for_graph(g: &CoxeterGraph) -> Result<Self> {
        let k = g.rank();
        if k < 3 {
            return Err(Error::Invalid("the affine cycle needs at least 3 generators".into()));
        }
        for s in 0..k {
            for t in s + 1..k {
                let adjacent = t == s + 1 || (s == 0 && t == k - 1);
                let want = if adjacent { Some(3) } else { Some(2) };
                if g.m(s as Gen, t as Gen) != want {
                    return Err(Error::Invalid(
                        "graph must be the cycle t0 – t1 – ⋯ – tn – t0 with labels 3, in declaration order".into(),
                    ));
                }
            }
        }
        let n = k - 1;
        let names: Vec<String> = (1..=n + 1).map(|i| format!("r{i}")).collect();
        let target_graph = Arc::new(families::type_b(n + 1).renamed(&names)?);
        let target = Garside::shared(&target_graph, target_graph.all())?;
        Ok(Euclid { n, source: Arc::new(g.clone()), target })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn source(&self) -> &Arc<CoxeterGraph> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Garside> {
        &self.target
    }

    /// Index of `r_i` in the target.
    fn r(&self, i: usize) -> Gen {
        (i - 1) as Gen
    }

    /// `ρ = r_1 ⋯ r_{n+1}`.
    pub fn rho(&self) -> ArtinWord {
        ArtinWord::positive(&(1..=self.n + 1).map(|i| self.r(i)).collect::<Vec<_>>())
    }

    /// `φ(t_i)`.
    fn image(&self, i: usize) -> ArtinWord {
        if i == 0 {
            self.rho().conjugate(&ArtinWord::positive(&[self.r(self.n)]))
        } else {
            ArtinWord::positive(&[self.r(i)])
        }
    }

    pub fn embed(&self, w: &ArtinWord) -> ArtinWord {
        let mut out = ArtinWord::new();
        for l in w.letters() {
            let img = self.image(l.gen as usize);
            out = out.concat(&if l.inv { img.inverse() } else { img });
        }
        out
    }

    /// Exponent sum of `r_{n+1}`.
    pub fn xi(&self, w: &ArtinWord) -> i64 {
        let last = self.r(self.n + 1);
        w.letters().iter().filter(|l| l.gen == last).map(|l| l.sign()).sum()
    }

    /// `f^k`, indices modulo `n + 1`.
    pub fn shift(&self, w: &ArtinWord, k: i64) -> ArtinWord {
        let m = (self.n + 1) as i64;
        w.map_gens(|g| (g as i64 + k).rem_euclid(m) as Gen)
    }

    pub fn shift_set(&self, x: GenSet, k: i64) -> GenSet {
        let m = (self.n + 1) as i64;
        x.iter().map(|g| (g as i64 + k).rem_euclid(m) as Gen).collect()
    }

    /// `(h, m)` with `w = φ(h) ρ^m` and `m = ξ(w)`.
    pub fn pullback(&self, w: &ArtinWord) -> (ArtinWord, i64) {
        let n = self.n as i64;
        let t = |i: i64| i.rem_euclid(n + 1) as Gen;
        let mut h = ArtinWord::new();
        let mut k: i64 = 0;
        for l in w.letters() {
            let i = l.gen as i64 + 1;
            if i <= n {
                h.push(Letter { gen: t(i + k), inv: l.inv });
            } else if !l.inv {
                // ρ^k r_{n+1} = ρ^k (r_1 ⋯ r_n)⁻¹ ρ^{-k} · ρ^{k+1}
                for j in (1..=n).rev() {
                    h.push(Letter::neg(t(j + k)));
                }
                k += 1;
            } else {
                k -= 1;
                for j in 1..=n {
                    h.push(Letter::pos(t(j + k)));
                }
            }
        }
        (h.free_reduce(), k)
    }

    /// `φ(h A_X h⁻¹)` as a parabolic of `A[B_{n+1}]`; `X` must be proper.
    pub fn push_parabolic(&self, p: &AffineParabolic) -> Result<Parabolic> {
        let all = self.source.all();
        if p.base == all {
            return Err(Error::Invalid("the base must be a proper subset of the affine generators".into()));
        }
        if !p.base.is_subset(all) || !p.conj.support().is_subset(all) {
            return Err(Error::Invalid("parabolic uses undeclared generators".into()));
        }
        let k = (0..=self.n as Gen).find(|&g| !p.base.contains(g)).unwrap() as i64;
        // f^{-k} X avoids t_0, so it maps to a standard subset of r_1 … r_n.
        let moved = self.shift_set(p.base, -k);
        let z: GenSet = moved.iter().map(|g| self.r(g as usize)).collect();
        let conj = self.embed(&p.conj).concat(&self.rho().pow(k));
        Parabolic::new(self.target.normalize(&conj)?, z)
    }

    /// Reads a parabolic of `A[B_{n+1}]` contained in the image back in `A[Ã_n]`.
    pub fn pull_parabolic(&self, r: &Parabolic) -> Result<AffineParabolic> {
        let last = self.r(self.n + 1);
        if r.base().contains(last) {
            return Err(Error::Invalid("parabolic is not contained in the affine image".into()));
        }
        let (h, m) = self.pullback(&r.conjugator().to_word());
        let base_t: GenSet = r.base().iter().map(|g| g + 1).collect();
        Ok(AffineParabolic { conj: h, base: self.shift_set(base_t, m) })
    }

    /// `P ∩ Q` computed in `A[B_{n+1}]` and pulled back.
    pub fn intersect(
        &self,
        p: &AffineParabolic,
        q: &AffineParabolic,
        radius: usize,
    ) -> Result<(AffineParabolic, Intersection)> {
        let (bp, bq) = (self.push_parabolic(p)?, self.push_parabolic(q)?);
        let cert = intersect(&bp, &bq, radius)?;
        let back = self.pull_parabolic(&cert.subgroup)?;
        Ok((back, cert))
    }

    /// Normal form in the target of `φ(w)`.
    pub fn embed_element(&self, w: &ArtinWord) -> Result<GarsideElement> {
        self.target.normalize(&self.embed(w))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(e: &Euclid, s: &str) -> ArtinWord {
        e.source().parse_word(s).unwrap()
    }

    fn base(e: &Euclid, s: &str) -> GenSet {
        e.source().parse_subset(s).unwrap()
    }

    #[test]
    fn rho_rotates_the_image() {
        for n in 2..=3 {
            let e = Euclid::new(n).unwrap();
            let rho = e.target().normalize(&e.rho()).unwrap();
            for i in 0..=n {
                let lhs = e.embed_element(&ArtinWord(vec![Letter::pos(i as Gen)])).unwrap().conjugate_by(&rho).unwrap();
                let rhs = e.embed_element(&ArtinWord(vec![Letter::pos(((i + 1) % (n + 1)) as Gen)])).unwrap();
                assert_eq!(lhs, rhs, "n = {n}, i = {i}");
            }
        }
    }

    #[test]
    fn xi_and_shift() {
        let e = Euclid::new(2).unwrap();
        assert_eq!(e.xi(&e.rho()), 1);
        let w = word(&e, "t0 t1^-1 t2 t2 t0^-1");
        assert_eq!(e.xi(&e.embed(&w)), 0);
        assert_eq!(e.shift(&word(&e, "t2"), 1), word(&e, "t0"));
        assert_eq!(e.shift(&word(&e, "t0"), -1), word(&e, "t2"));
    }

    #[test]
    fn pullback_inverts_embedding() {
        let e = Euclid::new(3).unwrap();
        let w = word(&e, "t0 t3^-1 t1 t2 t0^-1 t3");
        let image = e.embed(&w).concat(&e.rho().pow(2));
        let (h, m) = e.pullback(&image);
        assert_eq!(m, 2);
        let lhs = e.target().normalize(&e.embed(&h).concat(&e.rho().pow(m))).unwrap();
        assert_eq!(lhs, e.target().normalize(&image).unwrap());
    }

    #[test]
    fn push_and_pull_round_trip() {
        let e = Euclid::new(2).unwrap();
        let p = AffineParabolic { conj: word(&e, "t1 t0^-1"), base: base(&e, "t0,t2") };
        let bp = e.push_parabolic(&p).unwrap();
        let back = e.pull_parabolic(&bp).unwrap();
        assert_eq!(e.push_parabolic(&back).unwrap(), bp);
    }

    #[test]
    fn intersection_examples() {
        let e = Euclid::new(2).unwrap();
        let std = |s: &str| AffineParabolic { conj: ArtinWord::new(), base: base(&e, s) };
        let (r, _) = e.intersect(&std("t1"), &std("t1,t2"), 3).unwrap();
        assert_eq!(e.push_parabolic(&r).unwrap(), e.push_parabolic(&std("t1")).unwrap());
        let (r, cert) = e.intersect(&std("t0"), &std("t1"), 5).unwrap();
        assert!(r.base.is_empty() && cert.certified);
        let p = AffineParabolic { conj: word(&e, "t2"), base: base(&e, "t0") };
        let (r, _) = e.intersect(&p, &p, 3).unwrap();
        assert_eq!(e.push_parabolic(&r).unwrap(), e.push_parabolic(&p).unwrap());
    }

    #[test]
    fn rejects_other_graphs() {
        assert!(Euclid::for_graph(&families::type_a(3)).is_err());
        assert!(Euclid::new(1).is_err());
        let e = Euclid::new(2).unwrap();
        let full = AffineParabolic { conj: ArtinWord::new(), base: e.source().all() };
        assert!(e.push_parabolic(&full).is_err());
    }
}
