//! Garside combinatorics of the positive braid monoid.
//!
//! Simple braids are identified with permutations through the section that
//! sends a permutation to any of its reduced words. Products of two simples
//! are split into a maximal simple head and a remainder; folding that split
//! gives the leftmost factor of a positive word and its left-weighted normal
//! form. Half-permutations carry the action of positive braids coming from
//! the `t`-constant terms of the LKB matrices.

use std::collections::BTreeSet;
use std::fmt;

use crate::braid::{BraidWord, Permutation, RefPair};
use crate::error::{Error, Result};
use crate::lkb;

/// Simple braids, identified with the permutations they project to.
pub type Simple = Permutation;

/// Splits `r(u)·r(v)` as `r(head)·r(rest)` with `head` as long as possible.
///
/// Generators are moved from the left of `v` to the right of `u` while that
/// keeps both factors simple; the smallest eligible index is taken first.
pub fn simple_head(u: &Simple, v: &Simple) -> (Simple, Simple) {
    let mut head = u.clone();
    let mut rest = v.clone();
    let n = head.strands();
    while let Some(i) = (1..n).find(|&i| head.right_ascent(i) && rest.left_descent(i)) {
        head.swap_positions(i);
        rest.swap_values(i);
    }
    (head, rest)
}

/// The leftmost simple factor of a positive word.
pub fn lf_positive(w: &BraidWord) -> Result<Simple> {
    w.require_positive()?;
    let n = w.strands();
    let mut acc = Permutation::identity(n);
    for &e in w.letters().iter().rev() {
        let s = Permutation::transposition(n, e as usize);
        acc = simple_head(&s, &acc).0;
    }
    Ok(acc)
}

/// Left-weighted factorization of a positive braid into non-trivial simples.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct NormalForm {
    strands: usize,
    factors: Vec<Simple>,
}

impl NormalForm {
    pub fn identity(strands: usize) -> Self {
        NormalForm { strands, factors: Vec::new() }
    }

    pub fn factors(&self) -> &[Simple] {
        &self.factors
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    /// Left multiplication by a simple, keeping the factorization left-weighted.
    pub fn left_multiply(&mut self, simple: &Simple) {
        let mut carry = simple.clone();
        for f in self.factors.iter_mut() {
            if carry.is_identity() {
                return;
            }
            let (h, r) = simple_head(&carry, f);
            *f = h;
            carry = r;
        }
        if !carry.is_identity() {
            self.factors.push(carry);
        }
    }

    /// Whether each adjacent pair is already maximally split.
    pub fn is_left_weighted(&self) -> bool {
        self.factors.iter().all(|f| !f.is_identity())
            && self
                .factors
                .windows(2)
                .all(|p| simple_head(&p[0], &p[1]) == (p[0].clone(), p[1].clone()))
    }

    /// The concatenated canonical reduced words of the factors.
    pub fn to_word(&self) -> BraidWord {
        let letters = self
            .factors
            .iter()
            .flat_map(|f| f.reduced_word().letters().to_vec())
            .collect();
        BraidWord::new(self.strands, letters).expect("factors have the right strand count")
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|x| format!("[{}]", x.reduced_word()))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Greedy normal form of a positive word; equal braids get identical forms.
pub fn greedy_normal_form(w: &BraidWord) -> Result<NormalForm> {
    w.require_positive()?;
    let n = w.strands();
    let mut nf = NormalForm::identity(n);
    for &e in w.letters().iter().rev() {
        nf.left_multiply(&Permutation::transposition(n, e as usize));
    }
    Ok(nf)
}

/// A transitively closed subset of `Ref`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct HalfPermutation {
    strands: usize,
    pairs: BTreeSet<RefPair>,
}

/// First closure violation `(i, j, k)`: `(i,j)` and `(j,k)` present, `(i,k)` absent.
fn closure_violation(pairs: &BTreeSet<RefPair>) -> Option<(usize, usize, usize)> {
    for a in pairs {
        for b in pairs.range(RefPair { i: a.j, j: 0 }..) {
            if b.i != a.j {
                break;
            }
            if !pairs.contains(&RefPair { i: a.i, j: b.j }) {
                return Some((a.i, a.j, b.j));
            }
        }
    }
    None
}

impl HalfPermutation {
    pub fn new(strands: usize, pairs: BTreeSet<RefPair>) -> Result<Self> {
        if let Some(p) = pairs.iter().find(|p| p.j > strands) {
            return Err(Error::InvalidPair(p.i, p.j));
        }
        if let Some((i, j, k)) = closure_violation(&pairs) {
            return Err(Error::NotHalfPermutation(i, j, k));
        }
        Ok(HalfPermutation { strands, pairs })
    }

    pub fn empty(strands: usize) -> Self {
        HalfPermutation { strands, pairs: BTreeSet::new() }
    }

    pub fn full(strands: usize) -> Self {
        HalfPermutation { strands, pairs: RefPair::all(strands).into_iter().collect() }
    }

    pub fn of_permutation(x: &Permutation) -> Self {
        HalfPermutation { strands: x.strands(), pairs: x.inversion_set() }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn pairs(&self) -> &BTreeSet<RefPair> {
        &self.pairs
    }

    /// Every half-permutation on `n` strands, by filtering all subsets of `Ref`.
    pub fn all(n: usize) -> Vec<Self> {
        let refs = RefPair::all(n);
        assert!(refs.len() < 32, "too many subsets to enumerate");
        (0u32..1 << refs.len())
            .filter_map(|mask| {
                let pairs: BTreeSet<RefPair> = refs
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| mask >> b & 1 == 1)
                    .map(|(_, p)| *p)
                    .collect();
                closure_violation(&pairs).is_none().then_some(HalfPermutation { strands: n, pairs })
            })
            .collect()
    }
}

/// The greatest braid below a half-permutation.
///
/// Repeatedly drops any `(i, k)` for which some `i < j < k` has neither
/// `(i, j)` nor `(j, k)`; at the fixpoint the set is an inversion set.
pub fn gb(a: &HalfPermutation) -> Result<Simple> {
    let n = a.strands;
    let mut set = a.pairs.clone();
    loop {
        let removable = set.iter().copied().find(|p| {
            (p.i + 1..p.j).any(|j| {
                !set.contains(&RefPair { i: p.i, j }) && !set.contains(&RefPair { i: j, j: p.j })
            })
        });
        match removable {
            Some(p) => {
                set.remove(&p);
            }
            None => break,
        }
    }
    Permutation::from_inversion_set(n, &set).ok_or(Error::NoInversionSet)
}

/// Brute-force greatest inversion set contained in `a`, over all of `S_n`.
pub fn gb_bruteforce(a: &HalfPermutation) -> Option<Simple> {
    let candidates: Vec<(Permutation, BTreeSet<RefPair>)> = Permutation::all(a.strands)
        .into_iter()
        .map(|x| {
            let l = x.inversion_set();
            (x, l)
        })
        .filter(|(_, l)| l.is_subset(&a.pairs))
        .collect();
    let (best, best_set) = candidates.iter().max_by_key(|(_, l)| l.len())?;
    candidates
        .iter()
        .all(|(_, l)| l.is_subset(best_set))
        .then(|| best.clone())
}

/// `σ_k A`: pairs `s'` all of whose constant-term predecessors lie in `A`.
pub fn generator_action(n: usize, k: usize, a: &BTreeSet<RefPair>) -> Result<BTreeSet<RefPair>> {
    let m = lkb::table(n)?.generator(k, true)?.clone();
    let support = lkb::constant_support(&m);
    let refs = RefPair::all(n);
    Ok(refs
        .iter()
        .filter(|target| {
            let row = target.index(n);
            support
                .iter()
                .filter(|(r, _)| *r == row)
                .all(|(_, c)| a.contains(&refs[*c]))
        })
        .copied()
        .collect())
}

/// Action of a positive word: `(σ_{a_1}⋯σ_{a_m})A = σ_{a_1}(⋯(σ_{a_m}A))`.
pub fn positive_action(w: &BraidWord, a: &BTreeSet<RefPair>) -> Result<BTreeSet<RefPair>> {
    w.require_positive()?;
    let mut cur = a.clone();
    for &e in w.letters().iter().rev() {
        cur = generator_action(w.strands(), e as usize, &cur)?;
    }
    Ok(cur)
}

/// Writes `w = x·y⁻¹` with `x`, `y` positive.
///
/// Each `σ_i⁻¹` becomes the simple `σ_i⁻¹Δ` followed by `Δ⁻¹`, and the
/// accumulated `Δ⁻¹` powers are pushed right using `Δ⁻¹σ_i = σ_{n-i}Δ⁻¹`.
/// The result is `y = Δ^m` where `m` counts negative letters.
pub fn positive_fraction(w: &BraidWord) -> (BraidWord, BraidWord) {
    let n = w.strands();
    let flip = |i: i32, m: usize| if m % 2 == 1 { n as i32 - i } else { i };
    let w0 = Permutation::longest(n);
    let mut x: Vec<i32> = Vec::new();
    let mut m = 0usize;
    for &e in w.letters() {
        let i = flip(e.abs(), m);
        if e > 0 {
            x.push(i);
        } else {
            let simple = Permutation::transposition(n, i as usize).compose(&w0);
            x.extend_from_slice(simple.reduced_word().letters());
            m += 1;
        }
    }
    let x = BraidWord::new(n, x).expect("letters stay in range");
    (x, BraidWord::half_twist(n).pow(m))
}
