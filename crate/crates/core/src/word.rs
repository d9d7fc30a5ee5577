//! Generators, generator subsets and signed words.

use std::fmt;

/// Index of a generator in declaration order.
pub type Gen = u8;

/// Upper bound on the number of generators of a graph.
pub const MAX_GENS: usize = 64;

/// A subset of the generators, as a bitmask over declaration order.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenSet(pub u64);

impl GenSet {
    pub const EMPTY: GenSet = GenSet(0);

    pub fn single(g: Gen) -> Self {
        GenSet(1u64 << g)
    }

    /// The first `n` generators.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            GenSet(u64::MAX)
        } else {
            GenSet((1u64 << n) - 1)
        }
    }

    pub fn contains(self, g: Gen) -> bool {
        self.0 >> g & 1 == 1
    }

    pub fn insert(&mut self, g: Gen) {
        self.0 |= 1u64 << g;
    }

    pub fn remove(&mut self, g: Gen) {
        self.0 &= !(1u64 << g);
    }

    pub fn with(self, g: Gen) -> Self {
        GenSet(self.0 | 1u64 << g)
    }

    pub fn without(self, g: Gen) -> Self {
        GenSet(self.0 & !(1u64 << g))
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, other: GenSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: GenSet) -> Self {
        GenSet(self.0 | other.0)
    }

    pub fn intersection(self, other: GenSet) -> Self {
        GenSet(self.0 & other.0)
    }

    pub fn difference(self, other: GenSet) -> Self {
        GenSet(self.0 & !other.0)
    }

    /// Smallest member.
    pub fn first(self) -> Option<Gen> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as Gen)
    }

    pub fn iter(self) -> impl Iterator<Item = Gen> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let g = bits.trailing_zeros() as Gen;
            bits &= bits - 1;
            Some(g)
        })
    }

    /// ShortLex key: size first, then the sorted member list.
    pub fn shortlex_key(self) -> (usize, Vec<Gen>) {
        (self.len(), self.iter().collect())
    }
}

impl FromIterator<Gen> for GenSet {
    fn from_iter<I: IntoIterator<Item = Gen>>(iter: I) -> Self {
        let mut s = GenSet::EMPTY;
        for g in iter {
            s.insert(g);
        }
        s
    }
}

impl fmt::Debug for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A generator or its inverse.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Letter {
    pub gen: Gen,
    pub inv: bool,
}

impl Letter {
    pub fn pos(gen: Gen) -> Self {
        Letter { gen, inv: false }
    }

    pub fn neg(gen: Gen) -> Self {
        Letter { gen, inv: true }
    }

    pub fn inverse(self) -> Self {
        Letter { gen: self.gen, inv: !self.inv }
    }

    pub fn sign(self) -> i64 {
        if self.inv {
            -1
        } else {
            1
        }
    }
}

/// A word in the generators and their inverses.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ArtinWord(pub Vec<Letter>);

impl ArtinWord {
    pub fn new() -> Self {
        ArtinWord(Vec::new())
    }

    pub fn positive(gens: &[Gen]) -> Self {
        ArtinWord(gens.iter().map(|&g| Letter::pos(g)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    pub fn inverse(&self) -> Self {
        ArtinWord(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn concat(&self, other: &ArtinWord) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        ArtinWord(v)
    }

    /// `self · mid · self⁻¹`.
    pub fn conjugate(&self, mid: &ArtinWord) -> Self {
        self.concat(mid).concat(&self.inverse())
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut v = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            v.extend_from_slice(&base.0);
        }
        ArtinWord(v)
    }

    /// Cancels adjacent `x x⁻¹` pairs.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        ArtinWord(out)
    }

    /// Sum of the letter signs.
    pub fn exponent_sum(&self) -> i64 {
        self.0.iter().map(|l| l.sign()).sum()
    }

    /// Generators occurring in the word.
    pub fn support(&self) -> GenSet {
        self.0.iter().map(|l| l.gen).collect()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|l| !l.inv)
    }

    /// The underlying generator sequence, signs dropped.
    pub fn gens(&self) -> Vec<Gen> {
        self.0.iter().map(|l| l.gen).collect()
    }

    /// Keeps only the letters whose generator lies in `x`.
    pub fn filter(&self, x: GenSet) -> Self {
        ArtinWord(self.0.iter().copied().filter(|l| x.contains(l.gen)).collect())
    }

    /// Renames generators through `map`.
    pub fn map_gens(&self, map: impl Fn(Gen) -> Gen) -> Self {
        ArtinWord(self.0.iter().map(|l| Letter { gen: map(l.gen), inv: l.inv }).collect())
    }
}

impl FromIterator<Letter> for ArtinWord {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        ArtinWord(iter.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genset_basics() {
        let s: GenSet = [0u8, 3, 5].into_iter().collect();
        assert_eq!(s.len(), 3);
        assert!(s.contains(3) && !s.contains(1));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 3, 5]);
        assert!(GenSet::single(3).is_subset(s));
        assert_eq!(s.without(3).with(1).iter().collect::<Vec<_>>(), vec![0, 1, 5]);
        assert_eq!(GenSet::full(3), GenSet(7));
    }

    #[test]
    fn free_reduction_and_inverse() {
        let w = ArtinWord(vec![Letter::pos(0), Letter::pos(1), Letter::neg(1), Letter::neg(0), Letter::pos(2)]);
        assert_eq!(w.free_reduce(), ArtinWord(vec![Letter::pos(2)]));
        assert!(w.concat(&w.inverse()).free_reduce().is_empty());
        assert_eq!(w.exponent_sum(), 1);
        assert_eq!(w.pow(-2).exponent_sum(), -2);
    }
}
