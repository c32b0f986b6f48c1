//! Self-verification suites exposed by the command line.
//!
//! Every suite is deterministic: random samples come from a seeded ChaCha RNG.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{ExactRational, LaurentPoly};
use crate::braid::{BraidWord, Permutation, RefPair};
use crate::error::{Error, Result};
use crate::garside::{self, HalfPermutation};
use crate::lkb::{self, WVector};
use crate::{bmw, burau};

/// Largest strand count any suite accepts.
pub const MAX_STRANDS: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Relations,
    BurauKernel,
    Garside,
    LkbPositivity,
    FullTwist,
    Bmw,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::BurauKernel => "burau-kernel",
            Suite::Garside => "garside",
            Suite::LkbPositivity => "lkb-positivity",
            Suite::FullTwist => "full-twist",
            Suite::Bmw => "bmw",
            Suite::All => "all",
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "relations" => Suite::Relations,
            "burau-kernel" => Suite::BurauKernel,
            "garside" => Suite::Garside,
            "lkb-positivity" => Suite::LkbPositivity,
            "full-twist" => Suite::FullTwist,
            "bmw" => Suite::Bmw,
            "all" => Suite::All,
            _ => return Err(Error::Parse(format!("unknown suite {s:?}"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
    /// Reported for information; does not affect the suite verdict.
    pub informational: bool,
}

impl Check {
    /// Whether the check counts against the suite.
    pub fn failed(&self) -> bool {
        !self.passed && !self.informational
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.informational {
            let verdict = if self.passed { "holds" } else { "does not hold" };
            return write!(f, "INFO [{}] {}: {verdict}", self.suite, self.name);
        }
        write!(f, "{} [{}] {}", if self.passed { "PASS" } else { "FAIL" }, self.suite, self.name)
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniformly random positive word with length in `0..=max_len`.
pub fn random_positive_word(rng: &mut impl Rng, n: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len).map(|_| rng.gen_range(1..n as i32)).collect();
    BraidWord::new(n, letters).expect("letters in range")
}

/// Random word with letters of either sign.
pub fn random_word(rng: &mut impl Rng, n: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..n as i32);
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect();
    BraidWord::new(n, letters).expect("letters in range")
}

pub fn random_subset(rng: &mut impl Rng, n: usize) -> BTreeSet<RefPair> {
    RefPair::all(n).into_iter().filter(|_| rng.gen_bool(0.5)).collect()
}

/// A random vector of `W_A`: coordinates outside `A` get a positive constant term,
/// every coordinate gets random `t` and `t²` terms.
pub fn random_w_vector(rng: &mut impl Rng, n: usize, a: &BTreeSet<RefPair>) -> WVector {
    let coords = RefPair::all(n)
        .into_iter()
        .map(|s| {
            let mut c = BTreeMap::new();
            if !a.contains(&s) {
                c.insert(0, ExactRational::new(rng.gen_range(1..6).into(), rng.gen_range(1..5).into()));
            }
            for e in 1..=2 {
                if rng.gen_bool(0.6) {
                    c.insert(e, ExactRational::new(rng.gen_range(-5..6).into(), rng.gen_range(1..4).into()));
                }
            }
            c
        })
        .collect();
    WVector::from_coords(n, coords).expect("dimension matches")
}

fn half() -> ExactRational {
    ExactRational::new(1.into(), 2.into())
}

fn third() -> ExactRational {
    ExactRational::new(1.into(), 3.into())
}

/// Braid relations and inverse checks for both representations.
pub fn relations(n: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (name, table) in [("burau", burau::table(n)?), ("lkb", lkb::table(n)?)] {
        let mut commute = true;
        let mut braid = true;
        let mut inverse = true;
        for i in 1..n {
            let a = table.generator(i, true)?;
            inverse &= a.try_mul(table.generator(i, false)?)?.is_identity();
            for j in i + 1..n {
                let b = table.generator(j, true)?;
                if j == i + 1 {
                    braid &= a.try_mul(b)?.try_mul(a)? == b.try_mul(a)?.try_mul(b)?;
                } else {
                    commute &= a.try_mul(b)? == b.try_mul(a)?;
                }
            }
        }
        out.push(check("relations", format!("{name} B_{n}: far commutation"), commute));
        out.push(check("relations", format!("{name} B_{n}: braid relation"), braid));
        out.push(check("relations", format!("{name} B_{n}: generator inverses"), inverse));
    }
    Ok(out)
}

fn check(suite: &'static str, name: String, passed: bool) -> Check {
    Check { suite, name, passed, informational: false }
}

/// The 44-letter commutator in `B_6`: Burau-trivial, LKB-nontrivial.
pub fn burau_kernel() -> Result<Vec<Check>> {
    let w = burau::kernel_word_b6();
    Ok(vec![
        check("burau-kernel", "kernel word has 44 letters".into(), w.len() == 44),
        check("burau-kernel", "Burau image is I_6".into(), burau::of_word(&w)?.is_identity()),
        check("burau-kernel", "LKB image is not the identity".into(), !lkb::is_trivial(&w)?),
    ])
}

/// Leftmost-factor identity, greatest-braid equivariance and the fixpoint
/// greatest braid against brute force. Exhaustive for `n ≤ 4`, sampled above.
pub fn garside_suite(n: usize) -> Result<Vec<Check>> {
    let mut rng = rng(0x6a5d);
    let perms = Permutation::all(n);
    let exhaustive = n <= 4;
    let pairs: Vec<(Permutation, Permutation)> = if exhaustive {
        perms.iter().flat_map(|x| perms.iter().map(move |y| (x.clone(), y.clone()))).collect()
    } else {
        (0..1000)
            .map(|_| (perms.choose(&mut rng).unwrap().clone(), perms.choose(&mut rng).unwrap().clone()))
            .collect()
    };
    let mut lf_ok = true;
    for (x, y) in &pairs {
        let xw = x.reduced_word();
        let yw = y.reduced_word();
        let lhs = garside::lf_positive(&xw.concat(&yw)?)?;
        let rhs = garside::lf_positive(&xw.concat(&garside::lf_positive(&yw)?.reduced_word())?)?;
        lf_ok &= lhs == rhs;
    }
    let halves = if n <= 5 {
        HalfPermutation::all(n)
    } else {
        (0..300)
            .map(|_| HalfPermutation::of_permutation(perms.choose(&mut rng).unwrap()))
            .collect()
    };
    let mut eq_ok = true;
    let mut preserved = true;
    for a in &halves {
        let g = garside::gb(a)?;
        for k in 1..n {
            let xa = garside::generator_action(n, k, a.pairs())?;
            match HalfPermutation::new(n, xa) {
                Ok(xa) => {
                    let mut word = vec![k as i32];
                    word.extend_from_slice(g.reduced_word().letters());
                    eq_ok &= garside::gb(&xa)? == garside::lf_positive(&BraidWord::new(n, word)?)?;
                }
                Err(_) => preserved = false,
            }
        }
    }
    let gb_ok = perms
        .iter()
        .all(|x| garside::gb(&HalfPermutation::of_permutation(x)).ok().as_ref() == Some(x));
    let brute_ok = n > 5 || halves.iter().all(|a| garside::gb(a).ok() == garside::gb_bruteforce(a));
    let scope = if exhaustive { "exhaustive" } else { "sampled" };
    Ok(vec![
        check("garside", format!("LF(xy) = LF(x LF(y)) on Ω×Ω, n={n} ({scope})"), lf_ok),
        check("garside", format!("GB(xA) = LF(x GB(A)), n={n}"), eq_ok),
        check("garside", format!("action preserves half-permutations, n={n}"), preserved),
        check("garside", format!("GB(L(x)) = r(x) for all x in S_{n}"), gb_ok),
        check("garside", format!("fixpoint GB matches brute force, n={n}"), brute_ok),
    ])
}

/// Positivity of positive-word images and the `W_A` action consistency.
pub fn lkb_positivity(n: usize, samples: usize) -> Result<Vec<Check>> {
    let mut rng = rng(0x9051);
    let table = lkb::table(n)?;
    let (q1, q2) = (half(), third());
    let mut positive = true;
    for _ in 0..samples {
        let m = table.of_word(&random_positive_word(&mut rng, n, 8))?;
        positive &= lkb::is_w_positive(&m, &q1)? && lkb::is_w_positive(&m, &q2)?;
    }
    let mut classes = true;
    for _ in 0..samples {
        let a = random_subset(&mut rng, n);
        let v = random_w_vector(&mut rng, n, &a);
        let x = random_positive_word(&mut rng, n, 6);
        let moved = v.apply(&table.of_word(&x)?, &q1)?;
        classes &= lkb::w_class(&moved)? == garside::positive_action(&x, &a)?;
    }
    Ok(vec![
        check("lkb-positivity", format!("{samples} positive words in B_{n} have W-positive images"), positive),
        check("lkb-positivity", format!("w_class(x·v) = x·A on {samples} samples, n={n}"), classes),
    ])
}

pub fn full_twist(n: usize) -> Result<Vec<Check>> {
    let expected = LaurentPoly::monomial(1, 2 * n as i32, 2);
    let ok = matches!(lkb::full_twist_scalar(n), Ok(c) if c == expected);
    Ok(vec![check("full-twist", format!("LKB full twist of B_{n} is q^{}·t^2", 2 * n), ok)])
}

pub fn bmw_suite(n: usize) -> Result<Vec<Check>> {
    let report = bmw::bmw_relation_check(n)?;
    Ok(report
        .checks
        .into_iter()
        .map(|c| Check {
            suite: "bmw",
            name: format!("n={n}: {}", c.name),
            passed: c.holds,
            informational: c.informational,
        })
        .collect())
}

/// Runs a suite at `n` strands.
pub fn run(suite: Suite, n: usize) -> Result<Vec<Check>> {
    if n < 2 {
        return Err(Error::InvalidStrandCount);
    }
    if n > MAX_STRANDS {
        return Err(Error::ResourceGuard(format!("verification supports n ≤ {MAX_STRANDS}")));
    }
    match suite {
        Suite::Relations => relations(n),
        Suite::BurauKernel => burau_kernel(),
        Suite::Garside => garside_suite(n),
        Suite::LkbPositivity => lkb_positivity(n, 200),
        Suite::FullTwist => full_twist(n),
        Suite::Bmw => {
            if n > 6 {
                return Err(Error::ResourceGuard("bmw suite supports n ≤ 6".into()));
            }
            bmw_suite(n)
        }
        Suite::All => {
            let mut out = relations(n)?;
            out.extend(burau_kernel()?);
            out.extend(garside_suite(n)?);
            out.extend(lkb_positivity(n, 200)?);
            out.extend(full_twist(n)?);
            if n <= 6 {
                out.extend(bmw_suite(n)?);
            }
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_at_four_strands() {
        let checks = run(Suite::All, 4).unwrap();
        for c in &checks {
            assert!(!c.failed(), "{c}");
        }
        assert!(checks.len() > 10);
    }

    #[test]
    fn guards() {
        assert!(matches!(run(Suite::Relations, 8), Err(Error::ResourceGuard(_))));
        assert_eq!(run(Suite::Relations, 1).unwrap_err(), Error::InvalidStrandCount);
        assert_eq!("bmw".parse::<Suite>().unwrap(), Suite::Bmw);
        assert!("nope".parse::<Suite>().is_err());
    }
}
