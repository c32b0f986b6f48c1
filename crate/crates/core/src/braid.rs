//! Braid words, the projection to the symmetric group, and inversion sets.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A word in the generators `σ_1, …, σ_{n-1}` of the braid group on `n` strands.
///
/// Letter `+i` stands for `σ_i` and `-i` for `σ_i⁻¹`. The empty word is the identity.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidStrandCount);
        }
        for &e in &letters {
            if e == 0 || e.unsigned_abs() as usize >= strands {
                return Err(Error::LetterOutOfRange { letter: e, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord { strands: strands.max(1), letters: Vec::new() }
    }

    /// Parses comma- or whitespace-separated signed integers, e.g. `1,1,-2, -5 4`.
    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        let letters = text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<i32>().map_err(|_| Error::Parse(format!("bad letter {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&e| e > 0)
    }

    /// Errors with the first negative letter, if any.
    pub fn require_positive(&self) -> Result<()> {
        match self.letters.iter().find(|&&e| e < 0) {
            Some(&letter) => Err(Error::NegativeLetter { letter }),
            None => Ok(()),
        }
    }

    /// Cancels adjacent `e, -e` pairs until none remain.
    pub fn free_reduce(&self) -> Self {
        let mut stack: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &e in &self.letters {
            if stack.last() == Some(&-e) {
                stack.pop();
            } else {
                stack.push(e);
            }
        }
        BraidWord { strands: self.strands, letters: stack }
    }

    pub fn inverse(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|e| -e).collect(),
        }
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: other.strands });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    pub fn pow(&self, k: usize) -> Self {
        BraidWord { strands: self.strands, letters: self.letters.repeat(k) }
    }

    /// Image in the symmetric group; letter signs are ignored.
    pub fn perm(&self) -> Permutation {
        let mut p = Permutation::identity(self.strands);
        for &e in &self.letters {
            p.swap_positions(e.unsigned_abs() as usize);
        }
        p
    }

    /// The positive half twist `Δ`, as the canonical reduced word of the longest permutation.
    pub fn half_twist(strands: usize) -> Self {
        Permutation::longest(strands).reduced_word()
    }

    /// The full twist `(σ_1 ⋯ σ_{n-1})^n`.
    pub fn full_twist(strands: usize) -> Self {
        let cycle: Vec<i32> = (1..strands as i32).collect();
        BraidWord { strands: strands.max(1), letters: cycle.repeat(strands) }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// A pair `(i, j)` with `1 ≤ i < j ≤ n`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RefPair {
    pub i: usize,
    pub j: usize,
}

impl RefPair {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i == 0 || i >= j {
            return Err(Error::InvalidPair(i, j));
        }
        Ok(RefPair { i, j })
    }

    /// All pairs for `n` strands in lexicographic order.
    pub fn all(n: usize) -> Vec<RefPair> {
        (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| RefPair { i, j }))
            .collect()
    }

    pub fn count(n: usize) -> usize {
        n * n.saturating_sub(1) / 2
    }

    /// Position in the lexicographic order of [`RefPair::all`].
    pub fn index(self, n: usize) -> usize {
        // pairs starting below i, then offset within row i
        let before: usize = (1..self.i).map(|a| n - a).sum();
        before + (self.j - self.i - 1)
    }
}

impl fmt::Display for RefPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// A permutation of `{1, …, n}` stored by its images.
///
/// Products are composition of maps: `(x·y)(k) = x(y(k))`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    /// From one-line notation `x(1), …, x(n)` with 1-based values.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::Parse(format!("not a permutation: {images:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// The transposition `s_i = (i, i+1)`.
    pub fn transposition(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.swap_positions(i);
        p
    }

    /// The order-reversing permutation `w₀`.
    pub fn longest(n: usize) -> Self {
        Permutation { images: (1..=n).rev().collect() }
    }

    pub fn strands(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `x(k)` for 1-based `k`.
    pub fn image(&self, k: usize) -> usize {
        self.images[k - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    pub fn compose(&self, other: &Self) -> Self {
        Permutation { images: other.images.iter().map(|&k| self.images[k - 1]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (k, &v) in self.images.iter().enumerate() {
            inv[v - 1] = k + 1;
        }
        Permutation { images: inv }
    }

    /// In-place right multiplication by `s_i`.
    pub(crate) fn swap_positions(&mut self, i: usize) {
        self.images.swap(i - 1, i);
    }

    /// In-place left multiplication by `s_i`.
    pub(crate) fn swap_values(&mut self, i: usize) {
        for v in self.images.iter_mut() {
            if *v == i {
                *v = i + 1;
            } else if *v == i + 1 {
                *v = i;
            }
        }
    }

    pub fn mul_right_s(&self, i: usize) -> Self {
        let mut p = self.clone();
        p.swap_positions(i);
        p
    }

    pub fn mul_left_s(&self, i: usize) -> Self {
        let mut p = self.clone();
        p.swap_values(i);
        p
    }

    /// Whether `|x·s_i| = |x| + 1`.
    pub fn right_ascent(&self, i: usize) -> bool {
        self.images[i - 1] < self.images[i]
    }

    /// Whether `|s_i·x| = |x| - 1`.
    pub fn left_descent(&self, i: usize) -> bool {
        let pos_i = self.images.iter().position(|&v| v == i);
        let pos_next = self.images.iter().position(|&v| v == i + 1);
        pos_i > pos_next
    }

    /// Coxeter length: the number of inversions.
    pub fn length(&self) -> usize {
        let n = self.images.len();
        (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|&(a, b)| self.images[a] > self.images[b])
            .count()
    }

    /// `L(x) = {(i, j) : i < j, x⁻¹(i) > x⁻¹(j)}`.
    pub fn inversion_set(&self) -> BTreeSet<RefPair> {
        let inv = self.inverse();
        RefPair::all(self.images.len())
            .into_iter()
            .filter(|s| inv.image(s.i) > inv.image(s.j))
            .collect()
    }

    /// The permutation whose inversion set is `set`, if one exists.
    pub fn from_inversion_set(n: usize, set: &BTreeSet<RefPair>) -> Option<Self> {
        // (i, j) ∈ L(x) iff value i sits to the right of value j in one-line notation.
        let mut values: Vec<usize> = (1..=n).collect();
        values.sort_by(|&a, &b| {
            use std::cmp::Ordering;
            if a == b {
                return Ordering::Equal;
            }
            let (lo, hi) = (a.min(b), a.max(b));
            let swapped = set.contains(&RefPair { i: lo, j: hi });
            let a_first = (a == lo) != swapped;
            if a_first {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        });
        let p = Permutation { images: values };
        (p.inversion_set() == *set).then_some(p)
    }

    /// Canonical reduced word: repeatedly strip the smallest right descent.
    pub fn reduced_word(&self) -> BraidWord {
        let mut x = self.clone();
        let mut letters = Vec::with_capacity(self.length());
        while let Some(i) = (1..x.images.len()).find(|&i| !x.right_ascent(i)) {
            letters.push(i as i32);
            x.swap_positions(i);
        }
        letters.reverse();
        BraidWord { strands: self.images.len().max(1), letters }
    }

    /// All permutations of `n` elements in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut cur: Vec<usize> = (1..=n).collect();
        let mut out = vec![Permutation { images: cur.clone() }];
        while let Some(k) = (0..n.saturating_sub(1)).rev().find(|&k| cur[k] < cur[k + 1]) {
            let l = (k + 1..n).rev().find(|&l| cur[l] > cur[k]).unwrap();
            cur.swap(k, l);
            cur[k + 1..].reverse();
            out.push(Permutation { images: cur.clone() });
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    #[test]
    fn free_reduction() {
        assert!(w(2, &[1, -1]).free_reduce().is_empty());
        assert!(w(3, &[1, 2, -2, -1]).free_reduce().is_empty());
        assert_eq!(w(3, &[1, 2, 1]).free_reduce(), w(3, &[1, 2, 1]));
        assert_eq!(w(4, &[3, 1, -1, 2]).free_reduce(), w(4, &[3, 2]));
    }

    #[test]
    fn inverse_and_concat() {
        assert_eq!(w(3, &[1, -2]).inverse(), w(3, &[2, -1]));
        assert!(w(2, &[1]).concat(&w(2, &[-1])).unwrap().free_reduce().is_empty());
        assert!(BraidWord::identity(4).inverse().is_empty());
        assert_eq!(
            w(2, &[1]).concat(&w(3, &[1])).unwrap_err(),
            Error::StrandMismatch { left: 2, right: 3 }
        );
    }

    #[test]
    fn validation_and_parsing() {
        assert_eq!(BraidWord::new(3, vec![3]).unwrap_err(), Error::LetterOutOfRange { letter: 3, strands: 3 });
        assert!(BraidWord::new(3, vec![0]).is_err());
        assert_eq!(BraidWord::new(0, vec![]).unwrap_err(), Error::InvalidStrandCount);
        let parsed = BraidWord::parse(6, "1,1,-2, -5 -5\t4").unwrap();
        assert_eq!(parsed.letters(), &[1, 1, -2, -5, -5, 4]);
        assert_eq!(parsed.to_string(), "1,1,-2,-5,-5,4");
        assert!(BraidWord::parse(3, "1,x").is_err());
        assert!(BraidWord::parse(3, "").unwrap().is_empty());
    }

    #[test]
    fn projection_to_symmetric_group() {
        assert_eq!(w(2, &[1]).perm(), Permutation::from_images(vec![2, 1]).unwrap());
        assert!(w(2, &[1, 1]).perm().is_identity());
        assert_eq!(w(3, &[1, 2, 1]).perm(), w(3, &[2, 1, 2]).perm());
        assert_eq!(w(3, &[1, 2, 1]).perm(), Permutation::longest(3));
    }

    #[test]
    fn inversion_sets() {
        assert!(Permutation::identity(3).inversion_set().is_empty());
        let s1 = Permutation::transposition(3, 1);
        assert_eq!(s1.inversion_set(), BTreeSet::from([RefPair { i: 1, j: 2 }]));
        assert_eq!(s1.length(), 1);
        let w0 = Permutation::longest(4);
        assert_eq!(w0.inversion_set().len(), 6);
        assert_eq!(w0.length(), 6);
    }

    #[test]
    fn reduced_words() {
        assert!(Permutation::identity(4).reduced_word().is_empty());
        assert_eq!(Permutation::transposition(3, 1).reduced_word(), w(3, &[1]));
        let d = Permutation::longest(3).reduced_word();
        assert_eq!(d.len(), 3);
        assert_eq!(d.perm(), Permutation::longest(3));
    }

    #[test]
    fn exhaustive_small_groups() {
        for n in 1..=6 {
            let all = Permutation::all(n);
            assert_eq!(all.len(), (1..=n).product::<usize>());
            let mut seen = BTreeSet::new();
            for x in &all {
                let l = x.inversion_set();
                assert_eq!(l.len(), x.length());
                assert!(seen.insert(l.clone()), "L not injective");
                assert_eq!(Permutation::from_inversion_set(n, &l).as_ref(), Some(x));
                let r = x.reduced_word();
                assert_eq!(r.len(), x.length());
                assert_eq!(&r.perm(), x);
                assert!(r.is_positive());
            }
        }
    }

    #[test]
    fn ascent_and_descent_match_lengths() {
        for x in Permutation::all(4) {
            for i in 1..4 {
                assert_eq!(x.right_ascent(i), x.mul_right_s(i).length() == x.length() + 1);
                assert_eq!(x.left_descent(i), x.mul_left_s(i).length() + 1 == x.length());
                assert_eq!(x.mul_left_s(i), Permutation::transposition(4, i).compose(&x));
                assert_eq!(x.mul_right_s(i), x.compose(&Permutation::transposition(4, i)));
            }
        }
    }

    #[test]
    fn ref_pair_indexing() {
        for n in 1..=7 {
            for (k, s) in RefPair::all(n).into_iter().enumerate() {
                assert_eq!(s.index(n), k);
            }
            assert_eq!(RefPair::all(n).len(), RefPair::count(n));
        }
        assert!(RefPair::new(2, 2).is_err());
    }

    #[test]
    fn full_and_half_twists() {
        assert_eq!(BraidWord::full_twist(3).letters(), &[1, 2, 1, 2, 1, 2]);
        assert_eq!(BraidWord::half_twist(4).len(), 6);
    }
}
