//! The Lawrence-Krammer-Bigelow representation in Krammer's `x_{i,j}` basis,
//! and the tools built on top of it: the word problem, the length function
//! with respect to simple braids, the `W_A` classifier and the full-twist check.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Signed, Zero};

use crate::arith::{ExactRational, LaurentPoly, RepMatrix};
use crate::braid::{BraidWord, Permutation, RefPair};
use crate::error::{Error, Result};

/// Generator matrices of one representation of `B_n`, with verified inverses.
#[derive(Debug)]
pub struct GeneratorTable {
    strands: usize,
    dim: usize,
    positive: Vec<RepMatrix>,
    negative: Vec<RepMatrix>,
}

impl GeneratorTable {
    /// Builds the table from the positive generators, inverting each one exactly.
    pub fn from_positive(strands: usize, dim: usize, positive: Vec<RepMatrix>) -> Result<Self> {
        let negative = positive.iter().map(RepMatrix::inverse).collect::<Result<Vec<_>>>()?;
        Ok(GeneratorTable { strands, dim, positive, negative })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Matrix of `σ_k` (`sign = true`) or `σ_k⁻¹`.
    pub fn generator(&self, k: usize, positive: bool) -> Result<&RepMatrix> {
        if k == 0 || k >= self.strands {
            return Err(Error::GeneratorOutOfRange { index: k, strands: self.strands });
        }
        Ok(if positive { &self.positive[k - 1] } else { &self.negative[k - 1] })
    }

    pub fn letter(&self, e: i32) -> Result<&RepMatrix> {
        self.generator(e.unsigned_abs() as usize, e > 0)
    }

    /// Ordered product of the generator matrices of `w`.
    pub fn of_word(&self, w: &BraidWord) -> Result<RepMatrix> {
        if w.strands() != self.strands {
            return Err(Error::StrandMismatch { left: w.strands(), right: self.strands });
        }
        let mut acc = RepMatrix::identity(self.dim);
        for &e in w.letters() {
            acc = acc.try_mul(self.letter(e)?)?;
        }
        Ok(acc)
    }
}

pub(crate) fn cached_table(
    cache: &'static OnceLock<Mutex<HashMap<usize, Arc<GeneratorTable>>>>,
    n: usize,
    build: impl FnOnce() -> Result<GeneratorTable>,
) -> Result<Arc<GeneratorTable>> {
    let map = cache.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = map.lock().unwrap().get(&n) {
        return Ok(t.clone());
    }
    let table = Arc::new(build()?);
    Ok(map.lock().unwrap().entry(n).or_insert(table).clone())
}

/// Dimension `n(n-1)/2` of the LKB module.
pub fn dimension(n: usize) -> usize {
    RefPair::count(n)
}

fn poly(c: i64, a: i32, b: i32) -> LaurentPoly {
    LaurentPoly::monomial(c, a, b)
}

/// `σ_k(x_{i,j})` as a list of `(target pair, coefficient)`.
pub fn generator_action_on_basis(k: usize, s: RefPair) -> Vec<(RefPair, LaurentPoly)> {
    let (i, j) = (s.i, s.j);
    let one = LaurentPoly::one();
    let q = LaurentPoly::q();
    let one_minus_q = &one - &q;
    let q_minus_one = &q - &one;
    let pair = |a, b| RefPair { i: a, j: b };
    if k + 1 < i || j < k {
        vec![(s, one)]
    } else if k + 1 == i {
        vec![(pair(i - 1, j), one), (s, one_minus_q)]
    } else if k == i && i + 1 < j {
        vec![
            (pair(i, i + 1), &poly(1, 1, 1) * &q_minus_one),
            (pair(i + 1, j), q),
        ]
    } else if k == i {
        vec![(s, poly(1, 2, 1))]
    } else if i < k && k + 1 < j {
        let e = (k - i) as i32;
        vec![(s, one), (pair(k, k + 1), &poly(1, e, 1) * &q_minus_one.pow(2))]
    } else if k + 1 == j {
        let e = (j - i) as i32;
        vec![(pair(i, j - 1), one), (pair(j - 1, j), &poly(1, e, 1) * &q_minus_one)]
    } else {
        // k == j
        vec![(s, one_minus_q), (pair(i, j + 1), q)]
    }
}

/// Matrix of `σ_k` in the `x` basis; column `s` holds the image of `x_s`.
pub fn positive_generator_matrix(n: usize, k: usize) -> Result<RepMatrix> {
    if k == 0 || k >= n {
        return Err(Error::GeneratorOutOfRange { index: k, strands: n });
    }
    let d = dimension(n);
    let mut m = RepMatrix::zero(d);
    for s in RefPair::all(n) {
        let col = s.index(n);
        for (target, c) in generator_action_on_basis(k, s) {
            let row = target.index(n);
            let cur = m.get(row, col) + &c;
            m.set(row, col, cur);
        }
    }
    Ok(m)
}

static LKB_TABLES: OnceLock<Mutex<HashMap<usize, Arc<GeneratorTable>>>> = OnceLock::new();

/// Cached generator table for `B_n`; inverses are computed symbolically once.
pub fn table(n: usize) -> Result<Arc<GeneratorTable>> {
    if n == 0 {
        return Err(Error::InvalidStrandCount);
    }
    cached_table(&LKB_TABLES, n, || {
        let gens = (1..n).map(|k| positive_generator_matrix(n, k)).collect::<Result<Vec<_>>>()?;
        GeneratorTable::from_positive(n, dimension(n), gens)
    })
}

pub fn generator(n: usize, k: usize, positive: bool) -> Result<RepMatrix> {
    Ok(table(n)?.generator(k, positive)?.clone())
}

pub fn of_word(w: &BraidWord) -> Result<RepMatrix> {
    table(w.strands())?.of_word(w)
}

/// Decides whether `w` is the trivial braid; the LKB representation is faithful.
pub fn is_trivial(w: &BraidWord) -> Result<bool> {
    let reduced = w.free_reduce();
    if reduced.is_empty() {
        return Ok(true);
    }
    Ok(of_word(&reduced)?.is_identity())
}

pub fn words_equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    is_trivial(&a.concat(&b.inverse())?)
}

/// `ℓ_Ω` read off the `t`-degree span `[k, l]` of a representation matrix.
pub fn length_omega_of_matrix(m: &RepMatrix) -> Result<u32> {
    let (k, l) = m.t_degree_range()?;
    Ok((l - k).max(l).max(-k) as u32)
}

/// Word length of `w` with respect to the simple braids and their inverses.
pub fn length_omega(w: &BraidWord) -> Result<u32> {
    length_omega_of_matrix(&of_word(w)?)
}

/// Basis change matrices between the homological `v` basis and Krammer's `x` basis.
///
/// `to_x` has as column `v_{i,j}` its `x`-coordinates, `to_v` the reverse.
#[derive(Clone, Debug)]
pub struct BasisChange {
    pub to_x: RepMatrix,
    pub to_v: RepMatrix,
}

pub fn basis_change(n: usize) -> Result<BasisChange> {
    let d = dimension(n);
    let one = LaurentPoly::one();
    let q = LaurentPoly::q();
    let mut to_x = RepMatrix::identity(d);
    let mut to_v = RepMatrix::identity(d);
    for s in RefPair::all(n) {
        let col = s.index(n);
        for k in s.i + 1..s.j {
            let row = RefPair { i: k, j: s.j }.index(n);
            to_x.set(row, col, &one - &q);
            to_v.set(row, col, &(&q - &one) * &poly(1, (k - 1 - s.i) as i32, 0));
        }
    }
    if !(&to_x * &to_v).is_identity() || !(&to_v * &to_x).is_identity() {
        return Err(Error::BasisRoundTrip);
    }
    Ok(BasisChange { to_x, to_v })
}

/// Checks that the full twist acts as a scalar and returns that scalar.
pub fn full_twist_scalar(n: usize) -> Result<LaurentPoly> {
    if n < 2 {
        return Err(Error::InvalidStrandCount);
    }
    of_word(&BraidWord::full_twist(n))?.as_scalar().ok_or(Error::NotScalar)
}

/// Pairs `(row, col)` of `m` whose `t`-constant term is nonzero.
pub fn constant_support(m: &RepMatrix) -> BTreeSet<(usize, usize)> {
    m.nonzero_entries()
        .filter(|(_, _, e)| !e.t_coefficient(0).is_zero())
        .map(|(i, j, _)| (i, j))
        .collect()
}

/// Whether every entry lies in `R≥0 + tR[t]` once `q` is specialized.
pub fn is_w_positive(m: &RepMatrix, q: &ExactRational) -> Result<bool> {
    for (_, _, e) in m.nonzero_entries() {
        let (lo, _) = e.t_range().unwrap_or((0, 0));
        if lo < 0 {
            return Ok(false);
        }
        let c = e.t_coefficient(0).eval(q, &ExactRational::one())?;
        if c.is_negative() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A vector of `V` with `q` specialized to a rational: each coordinate is a
/// polynomial in `t` with rational coefficients, keyed by exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WVector {
    strands: usize,
    coords: Vec<BTreeMap<i32, ExactRational>>,
}

impl WVector {
    pub fn zero(strands: usize) -> Self {
        WVector { strands, coords: vec![BTreeMap::new(); dimension(strands)] }
    }

    pub fn basis(strands: usize, s: RefPair) -> Self {
        let mut v = Self::zero(strands);
        v.coords[s.index(strands)].insert(0, ExactRational::one());
        v
    }

    pub fn from_coords(strands: usize, coords: Vec<BTreeMap<i32, ExactRational>>) -> Result<Self> {
        if coords.len() != dimension(strands) {
            return Err(Error::DimensionMismatch { left: dimension(strands), right: coords.len() });
        }
        let coords = coords
            .into_iter()
            .map(|mut c| {
                c.retain(|_, v| !v.is_zero());
                c
            })
            .collect();
        Ok(WVector { strands, coords })
    }

    pub fn coords(&self) -> &[BTreeMap<i32, ExactRational>] {
        &self.coords
    }

    /// `m · v` with `q` specialized.
    pub fn apply(&self, m: &RepMatrix, q: &ExactRational) -> Result<Self> {
        let d = dimension(self.strands);
        if m.dim() != d {
            return Err(Error::DimensionMismatch { left: m.dim(), right: d });
        }
        let mut out = vec![BTreeMap::new(); d];
        for (row, col, e) in m.nonzero_entries() {
            if self.coords[col].is_empty() {
                continue;
            }
            for (a, ca) in e.eval_q(q)? {
                for (b, cb) in &self.coords[col] {
                    *out[row].entry(a + b).or_insert_with(ExactRational::zero) += &ca * cb;
                }
            }
        }
        WVector::from_coords(self.strands, out)
    }
}

/// The set `A` with `v ∈ W_A`: coordinates whose constant term vanishes.
pub fn w_class(v: &WVector) -> Result<BTreeSet<RefPair>> {
    let mut a = BTreeSet::new();
    for (s, c) in RefPair::all(v.strands).into_iter().zip(&v.coords) {
        if c.keys().next().is_some_and(|&e| e < 0) {
            return Err(Error::NotInW(s.i, s.j));
        }
        match c.get(&0) {
            Some(x) if x.is_negative() => return Err(Error::NotInW(s.i, s.j)),
            Some(_) => {}
            None => {
                a.insert(s);
            }
        }
    }
    Ok(a)
}

/// An element of a ball in `B_n` with respect to simple braids.
#[derive(Clone, Debug)]
pub struct BallElement {
    pub word: BraidWord,
    pub matrix: RepMatrix,
    pub distance: u32,
}

/// Default cap on the number of ball elements; override with `BRAIDREP_MAX_BALL`.
pub const DEFAULT_MAX_BALL: usize = 200_000;

fn max_ball() -> usize {
    std::env::var("BRAIDREP_MAX_BALL")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_MAX_BALL)
}

/// Breadth-first enumeration of the ball of the given radius in the Cayley
/// graph of `B_n` for the generating set `Ω ∪ Ω⁻¹`.
///
/// Elements are keyed by their LKB matrix, which determines the braid.
pub fn omega_ball_oracle(n: usize, radius: u32) -> Result<Vec<BallElement>> {
    if n == 0 {
        return Err(Error::InvalidStrandCount);
    }
    let limit = max_ball();
    let table = table(n)?;
    let mut steps: Vec<(BraidWord, RepMatrix)> = Vec::new();
    for x in Permutation::all(n) {
        if x.is_identity() {
            continue;
        }
        let w = x.reduced_word();
        let m = table.of_word(&w)?;
        steps.push((w.inverse(), table.of_word(&w.inverse())?));
        steps.push((w, m));
    }
    let mut seen: HashMap<RepMatrix, usize> = HashMap::new();
    let mut ball = vec![BallElement {
        word: BraidWord::identity(n),
        matrix: RepMatrix::identity(dimension(n)),
        distance: 0,
    }];
    seen.insert(ball[0].matrix.clone(), 0);
    let mut frontier = vec![0usize];
    for r in 1..=radius {
        let mut next = Vec::new();
        for &idx in &frontier {
            for (w, m) in &steps {
                let prod = ball[idx].matrix.try_mul(m)?;
                if seen.contains_key(&prod) {
                    continue;
                }
                if ball.len() >= limit {
                    return Err(Error::ResourceGuard(format!(
                        "ball exceeds {limit} elements (BRAIDREP_MAX_BALL)"
                    )));
                }
                let word = ball[idx].word.concat(w)?;
                seen.insert(prod.clone(), ball.len());
                next.push(ball.len());
                ball.push(BallElement { word, matrix: prod, distance: r });
            }
        }
        frontier = next;
    }
    Ok(ball)
}

/// Number of ball elements with each value of `ℓ_Ω` computed by the degree formula.
pub fn growth_census(n: usize, radius: u32) -> Result<Vec<usize>> {
    let ball = omega_ball_oracle(n, radius)?;
    let mut counts = vec![0usize; radius as usize + 1];
    for e in &ball {
        let len = length_omega_of_matrix(&e.matrix)? as usize;
        if len < counts.len() {
            counts[len] += 1;
        } else {
            counts.resize(len + 1, 0);
            counts[len] += 1;
        }
    }
    Ok(counts)
}
