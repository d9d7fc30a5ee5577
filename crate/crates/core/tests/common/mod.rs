//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use garsidekit::graph::CoxeterGraph;
use garsidekit::word::{ArtinWord, Gen};
use std::collections::{HashSet, VecDeque};

/// All positive words reachable from `w` by braid moves (equal length, homogeneous relations).
pub fn braid_orbit(g: &CoxeterGraph, w: &[Gen]) -> HashSet<Vec<Gen>> {
    let mut seen: HashSet<Vec<Gen>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.to_vec());
    queue.push_back(w.to_vec());
    let n = g.rank() as Gen;
    while let Some(u) = queue.pop_front() {
        for s in 0..n {
            for t in 0..n {
                let Some(m) = (s != t).then(|| g.m(s, t)).flatten() else { continue };
                let m = m as usize;
                if m > u.len() {
                    continue;
                }
                for i in 0..=u.len() - m {
                    if (0..m).all(|j| u[i + j] == if j % 2 == 0 { s } else { t }) {
                        let mut v = u.clone();
                        for j in 0..m {
                            v[i + j] = if j % 2 == 0 { t } else { s };
                        }
                        if seen.insert(v.clone()) {
                            assert!(seen.len() < 2_000_000, "oracle orbit too large");
                            queue.push_back(v);
                        }
                    }
                }
            }
        }
    }
    seen
}

/// Positive words equal in the monoid, hence in the group.
pub fn positive_equal(g: &CoxeterGraph, a: &[Gen], b: &[Gen]) -> bool {
    a.len() == b.len() && braid_orbit(g, a).contains(b)
}

/// Rewrites signed words as `Δ^{-k} P` with `P` positive using only braid-move searches.
pub struct SignedOracle {
    graph: CoxeterGraph,
    delta: Vec<Gen>,
    /// `delta_minus[s]`: positive word with `delta_minus[s]·s = Δ`.
    delta_minus: Vec<Vec<Gen>>,
    /// `tau[s]`: the generator `t` with `s Δ = Δ t`.
    tau: Vec<Gen>,
}

impl SignedOracle {
    /// `delta` must be a positive word for the Garside element.
    pub fn new(graph: &CoxeterGraph, delta: &[Gen]) -> Self {
        let orbit = braid_orbit(graph, delta);
        let n = graph.rank() as Gen;
        let delta_minus = (0..n)
            .map(|s| {
                let w = orbit.iter().filter(|w| *w.last().unwrap() == s).min().expect("every atom divides Δ");
                w[..w.len() - 1].to_vec()
            })
            .collect();
        let tau = (0..n)
            .map(|s| {
                let lhs: Vec<Gen> = std::iter::once(s).chain(delta.iter().copied()).collect();
                let lhs_orbit = braid_orbit(graph, &lhs);
                (0..n)
                    .find(|&t| {
                        let mut rhs = delta.to_vec();
                        rhs.push(t);
                        lhs_orbit.contains(&rhs)
                    })
                    .expect("Δ normalises the atoms")
            })
            .collect();
        SignedOracle { graph: graph.clone(), delta: delta.to_vec(), delta_minus, tau }
    }

    /// `(k, P)` with `w = Δ^{-k} P`.
    pub fn split(&self, w: &ArtinWord) -> (usize, Vec<Gen>) {
        let mut k = 0usize;
        let mut p: Vec<Gen> = Vec::new();
        for l in w.letters() {
            if l.inv {
                // P s⁻¹ = P Δ⁻¹ d = Δ⁻¹ τ(P) d, where d s = Δ.
                for x in p.iter_mut() {
                    *x = self.tau[*x as usize];
                }
                k += 1;
                p.extend_from_slice(&self.delta_minus[l.gen as usize]);
            } else {
                p.push(l.gen);
            }
        }
        (k, p)
    }

    pub fn equal(&self, a: &ArtinWord, b: &ArtinWord) -> bool {
        self.equal_forms(self.split(a), self.split(b))
    }

    /// Compares `Δ^{-ka} Pa` with `Δ^{-kb} Pb`.
    pub fn equal_forms(&self, (ka, mut pa): (usize, Vec<Gen>), (kb, mut pb): (usize, Vec<Gen>)) -> bool {
        // Δ^{-ka} Pa = Δ^{-kb} Pb  ⇔  Δ^{k-ka} Pa = Δ^{k-kb} Pb.
        let k = ka.max(kb);
        for _ in ka..k {
            pa = [self.delta.clone(), pa].concat();
        }
        for _ in kb..k {
            pb = [self.delta.clone(), pb].concat();
        }
        pa.len() == pb.len() && positive_equal(&self.graph, &pa, &pb)
    }
}
