//! Recognition of spherical-type generator subsets.

use crate::graph::CoxeterGraph;
use crate::word::{Gen, GenSet};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    D,
    E,
    F,
    H,
    /// Dihedral `I_2(p)` with `p ≥ 5`; `p = 3, 4` are reported as `A_2`, `B_2`.
    I(u32),
}

/// One irreducible component of a spherical subset.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IrreducibleType {
    pub family: Family,
    pub rank: usize,
    /// Exponent with `z = (s_1⋯s_n)^{k_Δ}` generating the centre.
    pub k_delta: u32,
    pub gens: GenSet,
}

impl fmt::Display for IrreducibleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A => write!(f, "A{}", self.rank),
            Family::B => write!(f, "B{}", self.rank),
            Family::D => write!(f, "D{}", self.rank),
            Family::E => write!(f, "E{}", self.rank),
            Family::F => write!(f, "F{}", self.rank),
            Family::H => write!(f, "H{}", self.rank),
            Family::I(p) => write!(f, "I2({p})"),
        }
    }
}

/// `k_Δ` by family and rank.
pub fn k_delta(family: Family, rank: usize) -> u32 {
    let n = rank as u32;
    match family {
        Family::A if n == 1 => 1,
        Family::A => n + 1,
        Family::B => n,
        Family::D if n.is_multiple_of(2) => n - 1,
        Family::D => 2 * n - 2,
        Family::E => match n {
            6 => 12,
            7 => 9,
            _ => 15,
        },
        Family::F => 6,
        Family::H if n == 3 => 5,
        Family::H => 15,
        Family::I(p) if p % 2 == 0 => p / 2,
        Family::I(p) => p,
    }
}

/// Splits `x` into components and names each; `None` if any is not spherical.
pub fn classify_spherical(g: &CoxeterGraph, x: GenSet) -> Option<Vec<IrreducibleType>> {
    g.components(x).into_iter().map(|c| classify_component(g, c)).collect()
}

pub fn is_spherical(g: &CoxeterGraph, x: GenSet) -> bool {
    classify_spherical(g, x).is_some()
}

fn make(family: Family, rank: usize, gens: GenSet) -> Option<IrreducibleType> {
    Some(IrreducibleType { family, rank, k_delta: k_delta(family, rank), gens })
}

fn classify_component(g: &CoxeterGraph, c: GenSet) -> Option<IrreducibleType> {
    let verts: Vec<Gen> = c.iter().collect();
    let n = verts.len();
    let mut edges: Vec<(Gen, Gen, u32)> = Vec::new();
    for (i, &s) in verts.iter().enumerate() {
        for &t in &verts[i + 1..] {
            match g.m(s, t) {
                None => return None,
                Some(2) => {}
                Some(m) => edges.push((s, t, m)),
            }
        }
    }
    match n {
        1 => return make(Family::A, 1, c),
        2 => {
            return match edges[0].2 {
                3 => make(Family::A, 2, c),
                4 => make(Family::B, 2, c),
                p => make(Family::I(p), 2, c),
            }
        }
        _ => {}
    }
    if edges.len() != n - 1 {
        return None;
    }
    let degree = |v: Gen| edges.iter().filter(|e| e.0 == v || e.1 == v).count();
    let heavy: Vec<&(Gen, Gen, u32)> = edges.iter().filter(|e| e.2 != 3).collect();
    let branch: Vec<Gen> = verts.iter().copied().filter(|&v| degree(v) >= 3).collect();
    if branch.is_empty() {
        // A path: order it from one end.
        let start = verts.iter().copied().find(|&v| degree(v) == 1)?;
        let mut order = vec![start];
        while order.len() < n {
            let last = *order.last().unwrap();
            let next = edges.iter().find_map(|&(a, b, _)| {
                let other = if a == last { b } else if b == last { a } else { return None };
                (!order.contains(&other)).then_some(other)
            })?;
            order.push(next);
        }
        let label = |i: usize| {
            let (a, b) = (order[i], order[i + 1]);
            edges.iter().find(|e| (e.0 == a && e.1 == b) || (e.0 == b && e.1 == a)).unwrap().2
        };
        let labels: Vec<u32> = (0..n - 1).map(label).collect();
        return match heavy.len() {
            0 => make(Family::A, n, c),
            1 => {
                let pos = labels.iter().position(|&m| m != 3).unwrap();
                let at_end = pos == 0 || pos == n - 2;
                match labels[pos] {
                    4 if at_end => make(Family::B, n, c),
                    4 if n == 4 => make(Family::F, 4, c),
                    5 if at_end && (n == 3 || n == 4) => make(Family::H, n, c),
                    _ => None,
                }
            }
            _ => None,
        };
    }
    if branch.len() != 1 || degree(branch[0]) != 3 || !heavy.is_empty() {
        return None;
    }
    // Arm lengths from the branch vertex.
    let centre = branch[0];
    let mut arms: Vec<usize> = Vec::new();
    for &(a, b, _) in edges.iter().filter(|e| e.0 == centre || e.1 == centre) {
        let mut prev = centre;
        let mut cur = if a == centre { b } else { a };
        let mut len = 1;
        loop {
            let next = edges.iter().find_map(|&(x, y, _)| {
                let other = if x == cur { y } else if y == cur { x } else { return None };
                (other != prev).then_some(other)
            });
            match next {
                Some(nx) => {
                    prev = cur;
                    cur = nx;
                    len += 1;
                }
                None => break,
            }
        }
        arms.push(len);
    }
    arms.sort_unstable();
    match (arms[0], arms[1], arms[2]) {
        (1, 1, _) => make(Family::D, n, c),
        (1, 2, 2) => make(Family::E, 6, c),
        (1, 2, 3) => make(Family::E, 7, c),
        (1, 2, 4) => make(Family::E, 8, c),
        _ => None,
    }
}
