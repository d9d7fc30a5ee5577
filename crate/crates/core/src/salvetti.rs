//! The word retraction `π̂_X` onto a standard parabolic, valid in every Artin group.

use crate::coxeter::{Coxeter, CoxeterElement};
use crate::error::Result;
use crate::garside::{Garside, GarsideElement};
use crate::graph::CoxeterGraph;
use crate::oracle::WordOracle;
use crate::word::{ArtinWord, Gen, GenSet, Letter};
use serde::Serialize;
use std::collections::HashMap;
use std::sync::Arc;

/// Bookkeeping for one letter `s^ε` of the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub letter: Letter,
    /// `u_j = θ(prefix)`.
    pub u: CoxeterElement,
    /// `u_j = u'_j u''_j` with `u'_j ∈ W_X`.
    pub head: CoxeterElement,
    pub tail: CoxeterElement,
    /// `x_j` when it is a single generator.
    pub x: Option<Gen>,
    pub chi: Option<Letter>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RetractionTrace {
    pub input: ArtinWord,
    pub subset: GenSet,
    pub steps: Vec<TraceStep>,
    pub output: ArtinWord,
}

#[derive(Serialize)]
pub struct TraceStepRecord {
    pub letter: String,
    pub u: String,
    pub head: String,
    pub tail: String,
    pub x: Option<String>,
    pub chi: Option<String>,
}

#[derive(Serialize)]
pub struct TraceRecord {
    pub input: String,
    pub subset: Vec<String>,
    pub steps: Vec<TraceStepRecord>,
    pub output: String,
}

impl RetractionTrace {
    pub fn record(&self, g: &CoxeterGraph) -> TraceRecord {
        let letter = |l: Letter| g.format_word(&ArtinWord(vec![l]));
        TraceRecord {
            input: g.format_word(&self.input),
            subset: g.subset_names(self.subset),
            steps: self
                .steps
                .iter()
                .map(|s| TraceStepRecord {
                    letter: letter(s.letter),
                    u: g.format_gens(s.u.word()),
                    head: g.format_gens(s.head.word()),
                    tail: g.format_gens(s.tail.word()),
                    x: s.x.map(|x| g.name(x).to_string()),
                    chi: s.chi.map(letter),
                })
                .collect(),
            output: g.format_word(&self.output),
        }
    }
}

/// `π̂_X(w)`, letter by letter.
pub fn retract_word(kernel: &Coxeter, w: &ArtinWord, x: GenSet) -> Result<RetractionTrace> {
    let mut steps = Vec::with_capacity(w.len());
    let mut output = ArtinWord::new();
    let mut u = CoxeterElement::identity();
    let mut tail = CoxeterElement::identity();
    for &l in w.letters() {
        let prev_tail = tail;
        u = kernel.mul_gen(&u, l.gen)?;
        let (head, next_tail) = kernel.coset_split(&u, x)?;
        tail = next_tail;
        let conj = if l.inv { &tail } else { &prev_tail };
        let xj = kernel.conj_gen(conj, l.gen)?;
        let chi = xj.filter(|&g| x.contains(g)).map(|g| Letter { gen: g, inv: l.inv });
        if let Some(c) = chi {
            output.push(c);
        }
        steps.push(TraceStep { letter: l, u: u.clone(), head, tail: tail.clone(), x: xj, chi });
    }
    Ok(RetractionTrace { input: w.clone(), subset: x, steps, output })
}

/// `w ∈ A_X`, decided as `w ≡ π̂_X(w)` by the oracle.
///
/// Exact in both directions: members satisfy the equivalence, and `π̂_X(w)` is a word over `X`.
pub fn member_standard_general(
    kernel: &Coxeter,
    w: &ArtinWord,
    x: GenSet,
    oracle: &dyn WordOracle,
) -> Result<Option<bool>> {
    let r = retract_word(kernel, w, x)?;
    oracle.equal(w, &r.output)
}

/// Outcome of a geodesic convexity scan of `A_X` inside a spherical ambient.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ConvexityReport {
    pub max_len: usize,
    pub elements: usize,
    pub members: usize,
    /// Geodesic words counted over members.
    pub member_geodesics: u64,
    /// Members with a geodesic word using a letter outside `X`.
    pub violations: Vec<String>,
}

impl ConvexityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Breadth-first scan of the word-metric ball: every geodesic to an element of `A_X` must use only `X` letters.
pub fn convexity_scan(gs: &Arc<Garside>, x: GenSet, max_len: usize) -> Result<ConvexityReport> {
    let cap = gs.limits().ball;
    let letters: Vec<Letter> = gs.subset().iter().flat_map(|g| [Letter::pos(g), Letter::neg(g)]).collect();
    let steps: Vec<GarsideElement> =
        letters.iter().map(|&l| gs.normalize(&ArtinWord(vec![l]))).collect::<Result<_>>()?;
    // element -> (distance, clean, geodesic count)
    let mut info: HashMap<GarsideElement, (usize, bool, u64)> = HashMap::new();
    let mut layer = vec![gs.identity()];
    info.insert(gs.identity(), (0, true, 1));
    let mut report = ConvexityReport { max_len, elements: 1, members: 1, member_geodesics: 1, violations: Vec::new() };
    for d in 1..=max_len {
        let mut next: Vec<GarsideElement> = Vec::new();
        for e in &layer {
            let (_, clean, count) = info[e];
            for (l, s) in letters.iter().zip(&steps) {
                let f = e.mul(s)?;
                match info.get_mut(&f) {
                    Some(entry) if entry.0 == d => {
                        entry.1 &= clean && x.contains(l.gen);
                        entry.2 += count;
                    }
                    Some(_) => {}
                    None => {
                        info.insert(f.clone(), (d, clean && x.contains(l.gen), count));
                        next.push(f);
                        if info.len() > cap {
                            return Err(crate::Error::CapExceeded { what: "convexity scan", cap });
                        }
                    }
                }
            }
        }
        for f in &next {
            if f.member_standard(x) {
                let (_, clean, count) = info[f];
                report.members += 1;
                report.member_geodesics += count;
                if !clean {
                    report.violations.push(gs.graph().format_word(&f.to_word()));
                }
            }
        }
        report.elements += next.len();
        layer = next;
    }
    Ok(report)
}
