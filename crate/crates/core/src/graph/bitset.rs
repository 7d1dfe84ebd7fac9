use std::fmt;

/// A set of vertices of a fixed host graph, stored as a bitset over `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

#[inline]
fn word_count(n: usize) -> usize {
    n.div_ceil(64)
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; word_count(n)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = VertexSet {
            n,
            words: vec![u64::MAX; word_count(n)],
        };
        s.trim();
        s
    }

    pub fn singleton(n: usize, v: usize) -> Self {
        let mut s = Self::new(n);
        s.insert(v);
        s
    }

    /// Builds a set from vertex ids; panics on ids `>= n`.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(n: usize, vertices: I) -> Self {
        let mut s = Self::new(n);
        for v in vertices {
            s.insert(v);
        }
        s
    }

    fn trim(&mut self) {
        let rem = self.n % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    /// Size of the vertex range the set lives in.
    #[inline]
    pub fn universe(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v >> 6] >> (v & 63) & 1 == 1
    }

    /// Returns true if `v` was not present.
    #[inline]
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.n, "vertex {v} out of range 0..{}", self.n);
        let w = &mut self.words[v >> 6];
        let bit = 1u64 << (v & 63);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.n {
            return false;
        }
        let w = &mut self.words[v >> 6];
        let bit = 1u64 << (v & 63);
        let present = *w & bit != 0;
        *w &= !bit;
        present
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }

    /// Smallest member.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn complement(&self) -> VertexSet {
        let mut s = VertexSet {
            n: self.n,
            words: self.words.iter().map(|w| !w).collect(),
        };
        s.trim();
        s
    }

    /// `|self ∩ other|` without allocating.
    #[inline]
    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// `|self \ other|` without allocating.
    #[inline]
    pub fn difference_len(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & !b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Lowest member of `self \ other`.
    pub fn first_not_in(&self, other: &VertexSet) -> Option<usize> {
        self.words
            .iter()
            .zip(&other.words)
            .enumerate()
            .find(|(_, (a, b))| *a & !*b != 0)
            .map(|(i, (a, b))| i * 64 + (a & !b).trailing_zeros() as usize)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * 64 + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_set_is_trimmed() {
        let s = VertexSet::full(70);
        assert_eq!(s.len(), 70);
        assert_eq!(s.complement().len(), 0);
        assert_eq!(VertexSet::full(0).len(), 0);
    }

    #[test]
    fn iteration_crosses_word_boundaries() {
        let s = VertexSet::from_vertices(200, [0, 63, 64, 130, 199]);
        assert_eq!(s.to_vec(), vec![0, 63, 64, 130, 199]);
        assert_eq!(s.first(), Some(0));
        let t = VertexSet::from_vertices(200, [0, 63]);
        assert_eq!(s.first_not_in(&t), Some(64));
        assert_eq!(s.difference_len(&t), 3);
        assert!(t.is_subset(&s));
    }
}
