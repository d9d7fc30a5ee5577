//! Parabolic subgroups `α A_X α⁻¹` of a spherical-type Artin group.
//!
//! Each value caches `z = α z_X α⁻¹`, where `z_X` is the product of the centre
//! generators of the irreducible components of `X`. Two parabolics are equal
//! iff their `z` agree, and `P ⊆ Q` iff `z_P ∈ Q`.

use crate::error::{Error, Result};
use crate::garside::{Garside, GarsideElement};
use crate::word::{ArtinWord, GenSet, Letter};
use serde::Serialize;
use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

#[derive(Clone)]
pub struct Parabolic {
    conj: GarsideElement,
    base: GenSet,
    z: GarsideElement,
}

impl fmt::Debug for Parabolic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}

impl PartialEq for Parabolic {
    fn eq(&self, other: &Self) -> bool {
        self.z == other.z
    }
}

impl Eq for Parabolic {}

impl Parabolic {
    /// `α A_X α⁻¹`.
    pub fn new(conj: GarsideElement, base: GenSet) -> Result<Self> {
        let gs = conj.garside().clone();
        if !base.is_subset(gs.subset()) {
            return Err(Error::Invalid("base is not a subset of the generators".into()));
        }
        let z = gs.center(base)?.conjugate_by(&conj)?;
        Ok(Parabolic { conj, base, z })
    }

    /// The standard parabolic `A_X`.
    pub fn standard(gs: &Arc<Garside>, base: GenSet) -> Result<Self> {
        Parabolic::new(gs.identity(), base)
    }

    pub fn trivial(gs: &Arc<Garside>) -> Self {
        Parabolic { conj: gs.identity(), base: GenSet::EMPTY, z: gs.identity() }
    }

    pub fn garside(&self) -> &Arc<Garside> {
        self.conj.garside()
    }

    pub fn conjugator(&self) -> &GarsideElement {
        &self.conj
    }

    pub fn base(&self) -> GenSet {
        self.base
    }

    pub fn z(&self) -> &GarsideElement {
        &self.z
    }

    /// `|X|`.
    pub fn dimension(&self) -> usize {
        self.base.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.base.is_empty()
    }

    pub fn is_irreducible(&self) -> bool {
        self.garside().graph().is_connected(self.base)
    }

    /// `l(Δ_X)`, the length of the Garside element of the base.
    pub fn phi(&self) -> usize {
        let gs = self.garside();
        gs.simple_len(gs.delta_of(self.base).expect("base lies in the ambient"))
    }

    /// `α⁻¹ g α ∈ A_X`.
    pub fn contains(&self, g: &GarsideElement) -> Result<bool> {
        Ok(g.conjugate_by(&self.conj.inverse())?.member_standard(self.base))
    }

    /// `self ⊆ other`.
    pub fn is_subgroup_of(&self, other: &Parabolic) -> Result<bool> {
        other.contains(&self.z)
    }

    /// `h · self · h⁻¹`.
    pub fn conjugate_by(&self, h: &GarsideElement) -> Result<Parabolic> {
        Ok(Parabolic { conj: h.mul(&self.conj)?, base: self.base, z: self.z.conjugate_by(h)? })
    }

    /// Conjugator lies in `A_X`, so the subgroup is `A_X` itself.
    pub fn is_standard(&self) -> bool {
        self.conj.member_standard(self.base)
    }

    pub fn display(&self) -> String {
        let g = self.garside().graph();
        format!("{} · A_{{{}}}", g.format_word(&self.conj.to_word().free_reduce()), g.subset_names(self.base).join(","))
    }

    pub fn record(&self) -> ParabolicRecord {
        let g = self.garside().graph();
        ParabolicRecord {
            conjugator: g.format_word(&self.conj.to_word().free_reduce()),
            base: g.subset_names(self.base),
            dimension: self.dimension(),
            z: g.format_word(&self.z.to_word().free_reduce()),
        }
    }
}

/// Serializable view of a parabolic subgroup.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ParabolicRecord {
    pub conjugator: String,
    pub base: Vec<String>,
    pub dimension: usize,
    pub z: String,
}

/// The minimal parabolic containing `g`, transported from a recurrent conjugate.
pub fn closure(g: &GarsideElement) -> Result<Parabolic> {
    let rec = g.recurrent()?;
    // witness = c g c⁻¹, so P_g = c⁻¹ A_{supp(witness)} c.
    Parabolic::new(rec.conjugator.inverse(), rec.witness.support())
}

/// Every element of word length at most `radius` over the letters of `x`, in BFS order.
pub fn ball(gs: &Arc<Garside>, x: GenSet, radius: usize) -> Result<Vec<GarsideElement>> {
    let cap = gs.limits().ball;
    let letters: Vec<Letter> = x.iter().flat_map(|g| [Letter::pos(g), Letter::neg(g)]).collect();
    let steps: Vec<GarsideElement> =
        letters.iter().map(|&l| gs.normalize(&ArtinWord(vec![l]))).collect::<Result<_>>()?;
    let mut seen: HashSet<GarsideElement> = HashSet::new();
    let mut out = vec![gs.identity()];
    seen.insert(gs.identity());
    let mut frontier: VecDeque<(GarsideElement, usize)> = VecDeque::from([(gs.identity(), 0)]);
    while let Some((e, d)) = frontier.pop_front() {
        if d == radius {
            continue;
        }
        for s in &steps {
            let f = e.mul(s)?;
            if seen.insert(f.clone()) {
                if seen.len() > cap {
                    return Err(Error::CapExceeded { what: "ball enumeration", cap });
                }
                out.push(f.clone());
                frontier.push_back((f, d + 1));
            }
        }
    }
    Ok(out)
}

/// Elements of `P` of the form `α b α⁻¹` with `b` in the radius ball of `A_X`.
pub fn parabolic_ball(p: &Parabolic, radius: usize) -> Result<Vec<GarsideElement>> {
    let inv = p.conj.inverse();
    ball(p.garside(), p.base, radius)?
        .into_iter()
        .map(|b| p.conj.mul(&b)?.mul(&inv))
        .collect()
}

/// How an intersection was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Equal or nested inputs, or inputs standard after a common conjugation.
    Exact,
    /// Best closure found among enumerated common elements.
    Ball,
}

#[derive(Clone, Debug)]
pub struct Intersection {
    pub subgroup: Parabolic,
    pub z_in_p: bool,
    pub z_in_q: bool,
    pub ball_radius: usize,
    pub method: Method,
    /// Number of common elements found in the two balls.
    pub common_elements: usize,
    /// Every common element found lies in the subgroup.
    pub certified: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct InclusionProof {
    pub z_in_p: bool,
    pub z_in_q: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CertificateRecord {
    pub subgroup: ParabolicRecord,
    pub inclusion_proof: InclusionProof,
    pub ball_radius: usize,
    pub method: Method,
    pub common_elements: usize,
    pub certified: bool,
}

impl Intersection {
    pub fn record(&self) -> CertificateRecord {
        CertificateRecord {
            subgroup: self.subgroup.record(),
            inclusion_proof: InclusionProof { z_in_p: self.z_in_p, z_in_q: self.z_in_q },
            ball_radius: self.ball_radius,
            method: self.method,
            common_elements: self.common_elements,
            certified: self.certified,
        }
    }
}

/// Preference among candidate intersections: larger `φ`, then ShortLex-smaller base, then shorter conjugator.
fn better(a: &Parabolic, b: &Parabolic) -> bool {
    let key = |p: &Parabolic| {
        let w = p.conj.to_word();
        (std::cmp::Reverse(p.phi()), p.base.shortlex_key(), w.len(), w)
    };
    key(a) < key(b)
}

/// Rounds of the escalation loop before the result is reported uncertified.
const ESCALATION_ROUNDS: usize = 8;

/// `P ∩ Q`, exact when the inputs are nested or simultaneously standard, ball-certified otherwise.
pub fn intersect(p: &Parabolic, q: &Parabolic, radius: usize) -> Result<Intersection> {
    if !p.garside().subset().eq(&q.garside().subset()) || p.garside().graph() != q.garside().graph() {
        return Err(Error::AmbientMismatch);
    }
    let exact = |r: Parabolic| -> Result<Intersection> {
        Ok(Intersection {
            z_in_p: p.contains(&r.z)?,
            z_in_q: q.contains(&r.z)?,
            subgroup: r,
            ball_radius: radius,
            method: Method::Exact,
            common_elements: 0,
            certified: true,
        })
    };
    if p.is_subgroup_of(q)? {
        return exact(p.clone());
    }
    if q.is_subgroup_of(p)? {
        return exact(q.clone());
    }
    // α⁻¹ Q α standard: P ∩ Q = α A_{X∩Y} α⁻¹.
    for (a, b) in [(p, q), (q, p)] {
        let moved = b.conjugate_by(&a.conj.inverse())?;
        if moved.is_standard() {
            return exact(Parabolic::new(a.conj.clone(), a.base.intersection(b.base))?);
        }
    }
    let mut common: Vec<GarsideElement> = Vec::new();
    let mut seen: HashSet<GarsideElement> = HashSet::new();
    for (a, b) in [(p, q), (q, p)] {
        for x in parabolic_ball(a, radius)? {
            if !seen.contains(&x) && b.contains(&x)? {
                seen.insert(x.clone());
                common.push(x);
            }
        }
    }
    let gs = p.garside();
    let mut best = Parabolic::trivial(gs);
    let mut tried: HashSet<GarsideElement> = HashSet::new();
    for x in &common {
        let c = closure(x)?;
        if tried.insert(c.z.clone()) && better(&c, &best) {
            best = c;
        }
    }
    let mut certified = false;
    for _ in 0..=ESCALATION_ROUNDS {
        let outside: Vec<&GarsideElement> =
            common.iter().filter(|x| !best.contains(x).unwrap_or(false)).collect();
        if outside.is_empty() {
            certified = true;
            break;
        }
        let mut improved = false;
        for y in outside {
            for a in 1..=2 {
                for b in 1..=3 {
                    let cand = closure(&best.z.pow(a).mul(&y.pow(b))?)?;
                    if tried.insert(cand.z.clone()) && best.is_subgroup_of(&cand)? && better(&cand, &best) {
                        best = cand;
                        improved = true;
                    }
                }
            }
            // β_m = z_T (α Δ_Z α⁻¹)^m for the closure of y.
            let cy = closure(y)?;
            let dz = gs.delta_element(cy.base)?.conjugate_by(&cy.conj)?;
            for m in 1..=4 {
                let cand = closure(&best.z.mul(&dz.pow(m))?)?;
                if tried.insert(cand.z.clone()) && best.is_subgroup_of(&cand)? && better(&cand, &best) {
                    best = cand;
                    improved = true;
                }
            }
        }
        if !improved {
            break;
        }
    }
    Ok(Intersection {
        z_in_p: p.contains(&best.z)?,
        z_in_q: q.contains(&best.z)?,
        subgroup: best,
        ball_radius: radius,
        method: Method::Ball,
        common_elements: common.len(),
        certified,
    })
}

/// `P = α A_Y α⁻¹` with `α ∈ A_X`, `Y ⊆ X`, for `P ⊆ A_X`.
///
/// The closure of `z_P` taken inside the Garside structure of `A_X` is `P` itself.
pub fn restandardise(p: &Parabolic, x: GenSet) -> Result<(GarsideElement, GenSet)> {
    let gs = p.garside();
    if !x.is_subset(gs.subset()) {
        return Err(Error::Invalid("target subset is not a subset of the generators".into()));
    }
    if !p.z.member_standard(x) {
        return Err(Error::Invalid("parabolic is not contained in the target standard subgroup".into()));
    }
    let sub = Garside::shared(gs.graph(), x)?;
    let (a, b) = p.z.mixed_np();
    let z_local = sub.normalize(&a.to_word().inverse().concat(&b.to_word()))?;
    let local = closure(&z_local)?;
    let alpha = gs.normalize(&local.conjugator().to_word())?;
    let y = local.base();
    let check = Parabolic::new(alpha.clone(), y)?;
    if check != *p {
        return Err(Error::Invalid("restandardisation failed to reproduce the subgroup".into()));
    }
    // An input already of the required shape is kept unless the closure found a shorter conjugator.
    if p.base.is_subset(x) && p.conj.member_standard(x) && p.conj.to_word().len() <= alpha.to_word().len() {
        return Ok((p.conj.clone(), p.base));
    }
    Ok((alpha, y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    fn gs(n: usize) -> Arc<Garside> {
        let g = Arc::new(families::type_a(n));
        Garside::shared(&g, g.all()).unwrap()
    }

    fn el(gs: &Arc<Garside>, w: &str) -> GarsideElement {
        gs.normalize(&gs.graph().parse_word(w).unwrap()).unwrap()
    }

    fn set(gs: &Arc<Garside>, s: &str) -> GenSet {
        gs.graph().parse_subset(s).unwrap()
    }

    #[test]
    fn construction_examples() {
        let a2 = gs(2);
        let p = Parabolic::new(el(&a2, "s2"), set(&a2, "s1")).unwrap();
        assert_eq!(*p.z(), el(&a2, "s2 s1 s2^-1"));
        assert!(Parabolic::new(el(&a2, "s1 s2"), GenSet::EMPTY).unwrap().is_trivial());
        assert!(Parabolic::new(a2.identity(), GenSet(0b100)).is_err());
        let std = Parabolic::standard(&a2, a2.subset()).unwrap();
        assert_eq!(*std.z(), a2.delta_power(2));
    }

    #[test]
    fn membership_examples() {
        let a2 = gs(2);
        let p = Parabolic::standard(&a2, set(&a2, "s1")).unwrap();
        assert!(p.contains(p.z()).unwrap());
        assert!(!p.contains(&a2.delta_power(1)).unwrap());
        assert!(p.contains(&a2.identity()).unwrap());
    }

    #[test]
    fn closure_examples() {
        let a3 = gs(3);
        let x = set(&a3, "s1,s2");
        let c = closure(&a3.delta_element(x).unwrap()).unwrap();
        assert_eq!(c, Parabolic::standard(&a3, x).unwrap());
        assert_eq!(closure(&el(&a3, "s1")).unwrap(), Parabolic::standard(&a3, set(&a3, "s1")).unwrap());
        let c = closure(&el(&a3, "s2^-1 s1 s2")).unwrap();
        assert_eq!(c, Parabolic::new(el(&a3, "s2^-1"), set(&a3, "s1")).unwrap());
        assert!(closure(&a3.identity()).unwrap().is_trivial());
    }

    #[test]
    fn equality_examples() {
        let a2 = gs(2);
        let p = Parabolic::standard(&a2, set(&a2, "s1")).unwrap();
        assert_eq!(p, p.clone());
        assert_eq!(p, Parabolic::new(el(&a2, "s1"), set(&a2, "s1")).unwrap());
        assert_ne!(p, Parabolic::standard(&a2, set(&a2, "s2")).unwrap());
        // Δ A_{s1} Δ⁻¹ = A_{s2}
        let moved = Parabolic::new(a2.delta_power(1), set(&a2, "s1")).unwrap();
        assert_eq!(moved, Parabolic::standard(&a2, set(&a2, "s2")).unwrap());
    }

    #[test]
    fn intersection_examples() {
        let a3 = gs(3);
        let p = Parabolic::standard(&a3, set(&a3, "s1,s2")).unwrap();
        let q = Parabolic::standard(&a3, set(&a3, "s2,s3")).unwrap();
        let r = intersect(&p, &q, 3).unwrap();
        assert_eq!(r.subgroup, Parabolic::standard(&a3, set(&a3, "s2")).unwrap());
        assert_eq!(r.method, Method::Exact);
        let same = intersect(&p, &p, 3).unwrap();
        assert_eq!(same.subgroup, p);
        let a2 = gs(2);
        let p = Parabolic::standard(&a2, set(&a2, "s1")).unwrap();
        let q = Parabolic::standard(&a2, set(&a2, "s2")).unwrap();
        let r = intersect(&p, &q, 6).unwrap();
        assert!(r.subgroup.is_trivial() && r.certified && r.z_in_p && r.z_in_q);
    }

    #[test]
    fn intersection_of_conjugates_needs_the_ball() {
        let a3 = gs(3);
        // s2 A_{s1,s3} s2⁻¹ ∩ A_{s1,s2}
        let p = Parabolic::new(el(&a3, "s2"), set(&a3, "s1,s3")).unwrap();
        let q = Parabolic::standard(&a3, set(&a3, "s1,s2")).unwrap();
        let r = intersect(&p, &q, 4).unwrap();
        assert!(r.certified && r.z_in_p && r.z_in_q);
        let back = intersect(&q, &p, 4).unwrap();
        assert_eq!(back.subgroup, r.subgroup);
    }

    #[test]
    fn restandardise_examples() {
        let a2 = gs(2);
        let all = a2.subset();
        let p = Parabolic::standard(&a2, set(&a2, "s1")).unwrap();
        let (alpha, y) = restandardise(&p, all).unwrap();
        assert_eq!(Parabolic::new(alpha, y).unwrap(), p);
        let p = Parabolic::new(el(&a2, "s1"), set(&a2, "s2")).unwrap();
        let (alpha, y) = restandardise(&p, all).unwrap();
        assert_eq!(y, set(&a2, "s2"));
        assert_eq!(Parabolic::new(alpha, y).unwrap(), p);
        let p = Parabolic::new(a2.delta_power(1), set(&a2, "s1")).unwrap();
        let (_, y) = restandardise(&p, all).unwrap();
        assert_eq!(y, set(&a2, "s2"));
        let a3 = gs(3);
        let p = Parabolic::new(el(&a3, "s2 s1"), set(&a3, "s2")).unwrap();
        let x = set(&a3, "s1,s2");
        let (alpha, y) = restandardise(&p, x).unwrap();
        assert!(alpha.member_standard(x) && y.is_subset(x));
        let outside = Parabolic::new(el(&a3, "s3"), set(&a3, "s2")).unwrap();
        assert!(restandardise(&outside, x).is_err());
    }
}
