//! The unreduced Burau representation `B_n → GL_n(Z[t, t⁻¹])`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, ToPrimitive};

use crate::arith::{ExactRational, LaurentPoly, RepMatrix};
use crate::braid::{BraidWord, Permutation};
use crate::error::{Error, Result};
use crate::lkb::{cached_table, GeneratorTable};

/// `I_{i-1} ⊕ [[1-t, t], [1, 0]] ⊕ I_{n-i-1}`.
pub fn positive_generator_matrix(n: usize, i: usize) -> Result<RepMatrix> {
    if i == 0 || i >= n {
        return Err(Error::GeneratorOutOfRange { index: i, strands: n });
    }
    let mut m = RepMatrix::identity(n);
    let t = LaurentPoly::t();
    m.set(i - 1, i - 1, &LaurentPoly::one() - &t);
    m.set(i - 1, i, t);
    m.set(i, i - 1, LaurentPoly::one());
    m.set(i, i, LaurentPoly::zero());
    Ok(m)
}

static BURAU_TABLES: OnceLock<Mutex<HashMap<usize, Arc<GeneratorTable>>>> = OnceLock::new();

pub fn table(n: usize) -> Result<Arc<GeneratorTable>> {
    if n == 0 {
        return Err(Error::InvalidStrandCount);
    }
    cached_table(&BURAU_TABLES, n, || {
        let gens = (1..n).map(|i| positive_generator_matrix(n, i)).collect::<Result<Vec<_>>>()?;
        GeneratorTable::from_positive(n, n, gens)
    })
}

pub fn generator(n: usize, i: usize, positive: bool) -> Result<RepMatrix> {
    Ok(table(n)?.generator(i, positive)?.clone())
}

pub fn of_word(w: &BraidWord) -> Result<RepMatrix> {
    table(w.strands())?.of_word(w)
}

/// `τ_α = φ₁ σ₃ φ₁⁻¹` with `φ₁ = σ₁² σ₂⁻¹ σ₅⁻² σ₄`.
pub fn tau_alpha() -> BraidWord {
    conjugate(&[1, 1, -2, -5, -5, 4])
}

/// `τ_β = φ₂ σ₃ φ₂⁻¹` with `φ₂ = σ₁⁻¹ σ₂ σ₅ σ₄⁻¹`.
pub fn tau_beta() -> BraidWord {
    conjugate(&[-1, 2, 5, -4])
}

fn conjugate(phi: &[i32]) -> BraidWord {
    let phi = BraidWord::new(6, phi.to_vec()).expect("valid in B_6");
    let mid = BraidWord::new(6, vec![3]).expect("valid in B_6");
    phi.concat(&mid).and_then(|w| w.concat(&phi.inverse())).expect("same strand count")
}

/// The commutator `[τ_α, τ_β] = τ_α⁻¹ τ_β⁻¹ τ_α τ_β`, a 44-letter word in the Burau kernel of `B_6`.
pub fn kernel_word_b6() -> BraidWord {
    let (a, b) = (tau_alpha(), tau_beta());
    a.inverse()
        .concat(&b.inverse())
        .and_then(|w| w.concat(&a))
        .and_then(|w| w.concat(&b))
        .expect("same strand count")
}

/// Permutation matrix with `P[x(k)][k] = 1`, so that `P(x·y) = P(x)P(y)`.
pub fn permutation_matrix(x: &Permutation) -> Vec<Vec<i64>> {
    let n = x.strands();
    let mut m = vec![vec![0; n]; n];
    for k in 1..=n {
        m[x.image(k) - 1][k - 1] = 1;
    }
    m
}

/// Specializes `t = 1` and checks the result is a permutation matrix.
pub fn specialize_t1(m: &RepMatrix) -> Result<Vec<Vec<i64>>> {
    let one = ExactRational::one();
    let n = m.dim();
    let mut out = vec![vec![0i64; n]; n];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            let v = m.get(i, j).eval(&one, &one)?;
            if !v.is_integer() {
                return Err(Error::NotPermutationMatrix);
            }
            *cell = v.to_integer().to_i64().ok_or(Error::NotPermutationMatrix)?;
        }
    }
    let is_perm = out.iter().all(|r| r.iter().all(|&v| v == 0 || v == 1) && r.iter().sum::<i64>() == 1)
        && (0..n).all(|j| out.iter().map(|r| r[j]).sum::<i64>() == 1);
    if !is_perm {
        return Err(Error::NotPermutationMatrix);
    }
    Ok(out)
}

/// The reduced `(n-1)`-dimensional Burau summand.
///
/// Every row of a Burau matrix sums to one, so `u = (1, …, 1)` is fixed, and
/// the row vector `f = (1, t, …, t^{n-1})` is fixed on the left, so `ker f`
/// is invariant. We use the basis `b_i = t·e_i − e_{i+1}` of `ker f`
/// (a Laurent basis of `ker f ∩ Λⁿ` because `t` is a unit) and return the
/// matrix of the restriction. The splitting `M·P = P·(R ⊕ 1)` with
/// `P = [b_1 … b_{n-1} | u]` is checked exactly.
pub fn reduced(m: &RepMatrix) -> Result<RepMatrix> {
    let n = m.dim();
    if n < 2 {
        return Ok(RepMatrix::identity(0));
    }
    let t_inv = LaurentPoly::monomial(1, 0, -1);
    let basis = change_of_basis(n);
    let image = m.try_mul(&basis)?;
    let mut r = RepMatrix::zero(n - 1);
    for col in 0..n - 1 {
        // coordinate k of Σ c_i b_i is t·c_k − c_{k−1}; solve top-down
        let mut prev = LaurentPoly::zero();
        for k in 0..n - 1 {
            let c = &(image.get(k, col) + &prev) * &t_inv;
            r.set(k, col, c.clone());
            prev = c;
        }
        if image.get(n - 1, col) != &-&prev {
            return Err(Error::SplittingFailed);
        }
    }
    let mut block = RepMatrix::identity(n);
    for i in 0..n - 1 {
        for j in 0..n - 1 {
            block.set(i, j, r.get(i, j).clone());
        }
    }
    if image != basis.try_mul(&block)? {
        return Err(Error::SplittingFailed);
    }
    Ok(r)
}

/// `P = [b_1 … b_{n-1} | u]` used by [`reduced`].
pub fn change_of_basis(n: usize) -> RepMatrix {
    let mut p = RepMatrix::zero(n);
    for i in 0..n.saturating_sub(1) {
        p.set(i, i, LaurentPoly::t());
        p.set(i + 1, i, LaurentPoly::constant(-1));
    }
    for k in 0..n {
        p.set(k, n - 1, LaurentPoly::one());
    }
    p
}

/// Determinant of `σ_i`, read off its 2×2 block.
pub fn generator_determinant(n: usize, i: usize) -> Result<LaurentPoly> {
    let m = positive_generator_matrix(n, i)?;
    let (a, b, c, d) = (m.get(i - 1, i - 1), m.get(i - 1, i), m.get(i, i - 1), m.get(i, i));
    Ok(&(a * d) - &(b * c))
}
