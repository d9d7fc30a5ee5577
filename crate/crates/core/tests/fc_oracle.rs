use garsidekit::classify::is_spherical;
use garsidekit::coxeter::Coxeter;
use garsidekit::fc::{Amalgam, FcStatus, Strategy};
use garsidekit::garside::Garside;
use garsidekit::graph::CoxeterGraph;
use garsidekit::salvetti::retract_word;
use garsidekit::word::{ArtinWord, GenSet, Letter};
use proptest::prelude::*;
use std::sync::Arc;

fn graphs() -> Vec<Arc<CoxeterGraph>> {
    [
        "generators: a b c\ndefault: 2\na b 3\nb c 3\na c inf\n",
        "generators: a b c d\ndefault: 2\na b 3\nb c 4\nc d 3\na d inf\nb d inf\n",
        "generators: a b c\ndefault: inf\nb c 3\n",
    ]
    .iter()
    .map(|t| Arc::new(CoxeterGraph::parse(t).unwrap()))
    .collect()
}

fn word(rank: usize, raw: &[(u8, bool)]) -> ArtinWord {
    ArtinWord(raw.iter().map(|&(g, inv)| Letter { gen: (g as usize % rank) as u8, inv }).collect())
}

/// Necessary conditions for triviality: every spherical retraction is trivial.
fn shadows_trivial(g: &Arc<CoxeterGraph>, w: &ArtinWord) -> bool {
    let k = Coxeter::new(g.clone());
    if !k.theta(w).unwrap().is_identity() || w.exponent_sum() != 0 {
        return false;
    }
    let n = g.rank();
    (1u64..(1 << n)).map(GenSet).filter(|&x| is_spherical(g, x)).all(|x| {
        let r = retract_word(&k, w, x).unwrap().output;
        Garside::shared(g, x).unwrap().normalize(&r).unwrap().is_identity()
    })
}

/// Inserts `s t s … (t s t …)⁻¹` for a finite label at a position.
fn insert_relator(g: &CoxeterGraph, w: &ArtinWord, pos: usize, s: u8, t: u8) -> ArtinWord {
    let Some(m) = g.m(s, t) else { return w.clone() };
    let alt = |a: u8, b: u8| ArtinWord((0..m).map(|i| Letter::pos(if i % 2 == 0 { a } else { b })).collect());
    let rel = alt(s, t).concat(&alt(t, s).inverse());
    let pos = pos.min(w.len());
    let mut out = ArtinWord(w.letters()[..pos].to_vec());
    out = out.concat(&rel);
    out.concat(&ArtinWord(w.letters()[pos..].to_vec()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn verdicts_respect_the_spherical_shadows(gi in 0usize..3, raw in prop::collection::vec((0u8..4, any::<bool>()), 0..9)) {
        let g = &graphs()[gi];
        let a = Amalgam::new(g.clone()).unwrap();
        let w = word(g.rank(), &raw);
        let trivial = a.is_trivial_word(&w).unwrap();
        if trivial {
            prop_assert!(shadows_trivial(g, &w));
        }
        let l = a.syllables(&w, Strategy::Leftmost).unwrap().len();
        let r = a.syllables(&w, Strategy::Rightmost).unwrap().len();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn relators_and_cancellation_are_trivial(
        gi in 0usize..3,
        raw in prop::collection::vec((0u8..4, any::<bool>()), 0..7),
        pos in 0usize..8,
        s in 0u8..4,
        t in 0u8..4,
    ) {
        let g = &graphs()[gi];
        let n = g.rank() as u8;
        let (s, t) = (s % n, t % n);
        let a = Amalgam::new(g.clone()).unwrap();
        let w = word(g.rank(), &raw);
        let padded = if s == t { w.clone() } else { insert_relator(g, &w, pos, s, t) };
        prop_assert!(a.is_trivial_word(&padded.concat(&w.inverse())).unwrap());
    }

    #[test]
    fn intersections_lie_in_both_and_catch_common_elements(
        gi in 0usize..2,
        gw in prop::collection::vec((0u8..4, any::<bool>()), 0..3),
        hw in prop::collection::vec((0u8..4, any::<bool>()), 0..3),
        xb in 1u64..16,
        yb in 1u64..16,
    ) {
        let g = &graphs()[gi];
        let n = g.rank();
        let all = g.all().0;
        let (x, y) = (GenSet(xb & all), GenSet(yb & all));
        prop_assume!(!x.is_empty() && is_spherical(g, x));
        let a = Amalgam::new(g.clone()).unwrap();
        let (pg, qh) = (word(n, &gw), word(n, &hw));
        let r = a.intersect_spherical_any((&pg, x), (&qh, y), 3).unwrap();
        prop_assert!(a.parabolic_contains((&pg, x), (&r.conj, r.base)).unwrap());
        prop_assert!(a.parabolic_contains((&qh, y), (&r.conj, r.base)).unwrap());
        if r.status != FcStatus::Exact {
            return Ok(());
        }
        // Conjugates of short words over X that land in Q must land in R.
        let letters: Vec<Letter> = x.iter().flat_map(|s| [Letter::pos(s), Letter::neg(s)]).collect();
        let mut layer = vec![ArtinWord::new()];
        for _ in 0..2 {
            let mut next = Vec::new();
            for v in &layer {
                for &l in &letters {
                    let mut v2 = v.clone();
                    v2.push(l);
                    let e = pg.conjugate(&v2);
                    let in_q = a.member_standard(&qh.inverse().concat(&e).concat(&qh), y).unwrap();
                    if in_q {
                        let in_r = a.member_standard(&r.conj.inverse().concat(&e).concat(&r.conj), r.base).unwrap();
                        prop_assert!(in_r);
                    }
                    next.push(v2);
                }
            }
            layer = next;
        }
    }
}
