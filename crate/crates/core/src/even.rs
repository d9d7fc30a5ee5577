//! Letter-filter retractions `ρ_X : A_S → A_X` of even Artin groups.

use crate::error::Result;
use crate::graph::CoxeterGraph;
use crate::oracle::WordOracle;
use crate::word::{ArtinWord, GenSet, Letter};
use serde::Serialize;

/// `ρ_X(w)`: deletes letters outside `X`. Requires every label to be even or `∞`.
pub fn rho(g: &CoxeterGraph, w: &ArtinWord, x: GenSet) -> Result<ArtinWord> {
    g.even_check()?;
    Ok(w.filter(x))
}

/// Both sides reduce to `f x A_Z x⁻¹ f⁻¹ ∩ g y A_Z y⁻¹ g⁻¹` with `Z = X ∩ Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenReduction {
    pub h: ArtinWord,
    pub x: ArtinWord,
    pub y: ArtinWord,
    pub z: GenSet,
    /// `P ∩ Q = conj · A_base · conj⁻¹` when one of the resolved cases applies.
    pub resolved: Option<(ArtinWord, GenSet)>,
    pub reason: Resolution,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Resolution {
    /// `X ∩ Y = ∅`.
    DisjointBases,
    /// `(f x)⁻¹ g y` is a word over `Z` and letters commuting with all of `Z`.
    SameConjugate,
    /// `X` contains a union `X'` of components of `S` with `X ∩ Y ⊆ X'`.
    DirectComponent,
    Unresolved,
}

/// Computes `h = f⁻¹ g`, `x = ρ_X(h)` and `y = ρ_Y(h⁻¹ x)`.
pub fn even_intersect_reduce(
    graph: &CoxeterGraph,
    (f, xs): (&ArtinWord, GenSet),
    (g, ys): (&ArtinWord, GenSet),
) -> Result<EvenReduction> {
    graph.even_check()?;
    let h = f.inverse().concat(g).free_reduce();
    let x = h.filter(xs).free_reduce();
    let y = h.inverse().concat(&x).filter(ys).free_reduce();
    let z = xs.intersection(ys);
    let mut out = EvenReduction { h: h.clone(), x: x.clone(), y: y.clone(), z, resolved: None, reason: Resolution::Unresolved };
    if z.is_empty() {
        out.resolved = Some((ArtinWord::new(), GenSet::EMPTY));
        out.reason = Resolution::DisjointBases;
        return Ok(out);
    }
    let fx = f.concat(&x).free_reduce();
    let u = x.inverse().concat(&h).concat(&y).free_reduce();
    let centralizes = |s| z.iter().all(|t| graph.m(s, t) == Some(2));
    if u.letters().iter().all(|l| z.contains(l.gen) || centralizes(l.gen)) {
        out.resolved = Some((fx, z));
        out.reason = Resolution::SameConjugate;
        return Ok(out);
    }
    // A_S = A_{S∖X'} × A_{X'}, and the bases meet only inside the factor A_{X'}.
    let whole: GenSet = graph
        .components(graph.all())
        .into_iter()
        .filter(|c| c.is_subset(xs))
        .fold(GenSet::EMPTY, GenSet::union);
    if z.is_subset(whole) {
        out.resolved = Some((g.filter(whole).free_reduce(), z));
        out.reason = Resolution::DirectComponent;
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Containment {
    Equal,
    Incomparable,
    Undecided,
}

/// `g A_X g⁻¹` against `h A_X h⁻¹`: containment either way forces equality.
///
/// Membership `w ∈ A_X` is tested as `w = ρ_X(w)` with the oracle.
pub fn conjugate_containment_check(
    graph: &CoxeterGraph,
    g: &ArtinWord,
    h: &ArtinWord,
    xs: GenSet,
    oracle: &dyn WordOracle,
) -> Result<Containment> {
    graph.even_check()?;
    let d = h.inverse().concat(g).free_reduce();
    if d.support().is_subset(xs) {
        return Ok(Containment::Equal);
    }
    let contained = |c: &ArtinWord| -> Result<Option<bool>> {
        let mut all = Some(true);
        for s in xs.iter() {
            let w = c.conjugate(&ArtinWord(vec![Letter::pos(s)]));
            match oracle.equal(&w, &w.filter(xs))? {
                Some(true) => {}
                Some(false) => return Ok(Some(false)),
                None => all = None,
            }
        }
        Ok(all)
    };
    match (contained(&d)?, contained(&d.inverse())?) {
        (Some(true), _) | (_, Some(true)) => Ok(Containment::Equal),
        (Some(false), Some(false)) => Ok(Containment::Incomparable),
        _ => Ok(Containment::Undecided),
    }
}

/// The even graph on `a … f` used in the worked example.
pub fn example_graph() -> CoxeterGraph {
    CoxeterGraph::parse("generators: a b c d e f\ndefault: 2\na b 4\nc d 6\nc e inf\nd f 8\ne f inf\n")
        .expect("static graph")
}
