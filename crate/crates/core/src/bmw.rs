//! The Bratteli diagram of the Birman-Murakami-Wenzl tower and a symbolic
//! check of the BMW relations on the rescaled, substituted LKB matrices.
//!
//! Young diagrams are stored as row lengths. A column of `n` boxes is
//! therefore `[1, …, 1]`, a row of `n` boxes is `[n]`, and the two-column
//! diagram with columns of `n-1` and `1` boxes is `[2, 1, …, 1]`.

use std::collections::HashMap;
use std::fmt;

use crate::arith::{LaurentPoly, MonomialImage, RepMatrix};
use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::lkb;

/// A partition in weakly decreasing row lengths; the empty diagram is `[]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct YoungDiagram(Vec<usize>);

impl YoungDiagram {
    pub fn new(mut rows: Vec<usize>) -> Result<Self> {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        if rows.windows(2).any(|w| w[0] < w[1]) || rows.contains(&0) {
            return Err(Error::Parse(format!("rows must be weakly decreasing: {rows:?}")));
        }
        Ok(YoungDiagram(rows))
    }

    pub fn empty() -> Self {
        YoungDiagram(Vec::new())
    }

    /// A single column of `n` boxes.
    pub fn column(n: usize) -> Self {
        YoungDiagram(vec![1; n])
    }

    /// A single row of `n` boxes.
    pub fn row(n: usize) -> Self {
        YoungDiagram(if n == 0 { vec![] } else { vec![n] })
    }

    /// Columns of `n-1` and `1` boxes, for `n ≥ 2`.
    pub fn hook(n: usize) -> Self {
        let mut rows = vec![1; n - 1];
        rows[0] = 2;
        YoungDiagram(rows)
    }

    /// Parses comma-separated row lengths; an empty string is the empty diagram.
    pub fn parse(text: &str) -> Result<Self> {
        let rows = text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().map_err(|_| Error::Parse(format!("bad row length {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows)
    }

    pub fn rows(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_admissible(&self, n: usize) -> bool {
        n >= 1 && self.size() <= n && self.size() % 2 == n % 2
    }

    fn removals(&self) -> Vec<YoungDiagram> {
        let r = &self.0;
        (0..r.len())
            .filter(|&k| k + 1 == r.len() || r[k] > r[k + 1])
            .map(|k| {
                let mut rows = r.clone();
                rows[k] -= 1;
                YoungDiagram::new(rows).expect("removing a corner keeps the shape")
            })
            .collect()
    }

    fn additions(&self) -> Vec<YoungDiagram> {
        let r = &self.0;
        (0..=r.len())
            .filter(|&k| k == 0 || (k < r.len() && r[k] < r[k - 1]) || k == r.len())
            .map(|k| {
                let mut rows = r.clone();
                if k == rows.len() {
                    rows.push(1);
                } else {
                    rows[k] += 1;
                }
                YoungDiagram(rows)
            })
            .collect()
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|r| r.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Partitions of `k` in decreasing lexicographic order.
fn partitions(k: usize) -> Vec<YoungDiagram> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<YoungDiagram>) {
        if rest == 0 {
            out.push(YoungDiagram(prefix.clone()));
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k, &mut Vec::new(), &mut out);
    out
}

/// Diagrams on level `n`: all `λ` with `|λ| ≤ n`, `|λ| ≡ n (mod 2)`, by size then
/// decreasing lexicographic order.
pub fn level_diagrams(n: usize) -> Vec<YoungDiagram> {
    (n % 2..=n).step_by(2).flat_map(partitions).collect()
}

/// Diagrams on level `n-1` joined to `λ` on level `n`.
pub fn bratteli_neighbors(lambda: &YoungDiagram, n: usize) -> Result<Vec<YoungDiagram>> {
    if !lambda.is_admissible(n) {
        return Err(Error::InadmissibleDiagram(lambda.0.clone(), n));
    }
    if n == 1 {
        return Ok(Vec::new());
    }
    let mut out = lambda.removals();
    if lambda.size() < n {
        out.extend(lambda.additions());
    }
    out.sort();
    Ok(out)
}

/// Path counts on the Bratteli diagram, memoized across calls.
#[derive(Default, Debug)]
pub struct Bratteli {
    memo: HashMap<(usize, YoungDiagram), u128>,
}

impl Bratteli {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of paths from `λ` on level `n` up to the single diagram on level 1.
    pub fn dim(&mut self, n: usize, lambda: &YoungDiagram) -> Result<u128> {
        if !lambda.is_admissible(n) {
            return Err(Error::InadmissibleDiagram(lambda.0.clone(), n));
        }
        if n == 1 {
            return Ok(1);
        }
        if let Some(&d) = self.memo.get(&(n, lambda.clone())) {
            return Ok(d);
        }
        let mut total = 0u128;
        for mu in bratteli_neighbors(lambda, n)? {
            total = total.checked_add(self.dim(n - 1, &mu)?).ok_or_else(overflow)?;
        }
        self.memo.insert((n, lambda.clone()), total);
        Ok(total)
    }

    pub fn level(&mut self, n: usize) -> Result<Vec<(YoungDiagram, u128)>> {
        level_diagrams(n)
            .into_iter()
            .map(|l| {
                let d = self.dim(n, &l)?;
                Ok((l, d))
            })
            .collect()
    }
}

pub fn bratteli_dim(n: usize, lambda: &YoungDiagram) -> Result<u128> {
    Bratteli::new().dim(n, lambda)
}

/// `Σ_λ dim(V_{n,λ})²` over level `n`.
pub fn sum_sq_dimensions(n: usize) -> Result<u128> {
    Bratteli::new()
        .level(n)?
        .into_iter()
        .try_fold(0u128, |acc, (_, d)| d.checked_mul(d).and_then(|sq| acc.checked_add(sq)))
        .ok_or_else(overflow)
}

fn overflow() -> Error {
    Error::ResourceGuard("dimension exceeds 128-bit range".into())
}

/// Image of `q` under the substitution: `-α⁻²`.
pub const Q_IMAGE: MonomialImage = MonomialImage { negate: true, first: -2, second: 0 };
/// Image of `t` under the substitution: `α³l⁻¹`.
pub const T_IMAGE: MonomialImage = MonomialImage { negate: false, first: 3, second: -1 };

/// Outcome of one relation check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: String,
    pub holds: bool,
    /// Mirror relations are reported but are not part of the defining list.
    pub informational: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BmwReport {
    pub strands: usize,
    pub checks: Vec<RelationCheck>,
}

impl BmwReport {
    /// Whether every defining relation holds.
    pub fn passed(&self) -> bool {
        self.checks.iter().filter(|c| !c.informational).all(|c| c.holds)
    }
}

impl fmt::Display for BmwReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = if c.informational { " (mirror, informational)" } else { "" };
            writeln!(f, "{} {}{}", if c.holds { "PASS" } else { "FAIL" }, c.name, tag)?;
        }
        Ok(())
    }
}

/// The BMW images `S_i` of `σ_i` and `S_i⁻¹` of `σ_i⁻¹` over `Z[α^{±1}, l^{±1}]`.
///
/// The LKB matrices are substituted and multiplied by `α`: the LKB action equals
/// the BMW module action divided by `α`.
pub fn bmw_generators(n: usize) -> Result<Vec<(RepMatrix, RepMatrix)>> {
    let table = lkb::table(n)?;
    let alpha = LaurentPoly::monomial(1, 1, 0);
    let alpha_inv = LaurentPoly::monomial(1, -1, 0);
    (1..n)
        .map(|i| {
            let pos = table.generator(i, true)?.map(|e| e.subst_monomial(Q_IMAGE, T_IMAGE)).scale(&alpha);
            let neg = table.generator(i, false)?.map(|e| e.subst_monomial(Q_IMAGE, T_IMAGE)).scale(&alpha_inv);
            Ok((pos, neg))
        })
        .collect()
}

/// Verifies, with denominators cleared through `E_i = S_i + S_i⁻¹ − (α+α⁻¹)`,
/// that `E_i S_i = l⁻¹ E_i` and `E_i S_{i-1}^{±1} E_i = l^{±1}(α+α⁻¹) E_i`.
///
/// Also reports the braid relations of the `S_i` and, as information only, the
/// mirrored relations with `S_{i+1}`.
pub fn bmw_relation_check(n: usize) -> Result<BmwReport> {
    if !(2..=7).contains(&n) {
        return Err(Error::ResourceGuard(format!("BMW relation check supports 2 ≤ n ≤ 7, got {n}")));
    }
    let d = lkb::dimension(n);
    let gens = bmw_generators(n)?;
    let alpha_sum = &LaurentPoly::monomial(1, 1, 0) + &LaurentPoly::monomial(1, -1, 0);
    let l = LaurentPoly::monomial(1, 0, 1);
    let l_inv = LaurentPoly::monomial(1, 0, -1);
    let es: Vec<RepMatrix> = gens
        .iter()
        .map(|(s, s_inv)| s.try_add(s_inv)?.try_sub(&RepMatrix::scalar(d, &alpha_sum)))
        .collect::<Result<_>>()?;
    let mut checks = Vec::new();
    let mut push = |name: String, holds: bool, informational: bool| {
        checks.push(RelationCheck { name, holds, informational })
    };
    for i in 1..n {
        let (s, _) = &gens[i - 1];
        let e = &es[i - 1];
        push(format!("E{i}·S{i} = l^-1·E{i}"), e.try_mul(s)? == e.scale(&l_inv), false);
        let mut sandwich = |j: usize, informational: bool| -> Result<()> {
            let (sj, sj_inv) = &gens[j - 1];
            let lhs_pos = e.try_mul(sj)?.try_mul(e)?;
            let lhs_neg = e.try_mul(sj_inv)?.try_mul(e)?;
            push(
                format!("E{i}·S{j}·E{i} = l·(α+α^-1)·E{i}"),
                lhs_pos == e.scale(&(&l * &alpha_sum)),
                informational,
            );
            push(
                format!("E{i}·S{j}^-1·E{i} = l^-1·(α+α^-1)·E{i}"),
                lhs_neg == e.scale(&(&l_inv * &alpha_sum)),
                informational,
            );
            Ok(())
        };
        if i >= 2 {
            sandwich(i - 1, false)?;
        }
        if i + 1 < n {
            sandwich(i + 1, true)?;
        }
    }
    for i in 1..n.saturating_sub(1) {
        let (a, _) = &gens[i - 1];
        let (b, _) = &gens[i];
        let lhs = a.try_mul(b)?.try_mul(a)?;
        let rhs = b.try_mul(a)?.try_mul(b)?;
        push(format!("S{i}·S{}·S{i} = S{}·S{i}·S{}", i + 1, i + 1, i + 1), lhs == rhs, false);
    }
    Ok(BmwReport { strands: n, checks })
}

/// Product of the BMW generator images along `w`.
pub fn substituted_word(w: &BraidWord) -> Result<RepMatrix> {
    let gens = bmw_generators(w.strands())?;
    let mut acc = RepMatrix::identity(lkb::dimension(w.strands()));
    for &e in w.letters() {
        let (pos, neg) = &gens[e.unsigned_abs() as usize - 1];
        acc = acc.try_mul(if e > 0 { pos } else { neg })?;
    }
    Ok(acc)
}
