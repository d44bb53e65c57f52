//! Exchange-move calculus: presentations `β = AB` with `A` avoiding
//! `σ_{n-1}` and `B` avoiding `σ_1`, the twist `τ`, iterated exchange moves
//! `ex^k(β) = A τ^k B τ^{-k}` and degeneracy.

use std::fmt;
use std::str::FromStr;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::garside::{self, Conjugacy};

/// `β = AB` with `A ∈ ⟨σ_1, .., σ_{n-2}⟩` and `B ∈ ⟨σ_2, .., σ_{n-1}⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExchangePresentation {
    n: usize,
    a: BraidWord,
    b: BraidWord,
}

impl ExchangePresentation {
    pub fn new(n: usize, a: BraidWord, b: BraidWord) -> Result<Self> {
        if n < 4 {
            return Err(Error::TooFewStrands { n, min: 4 });
        }
        for (w, name) in [(&a, "A"), (&b, "B")] {
            if w.n() != n {
                return Err(Error::StrandMismatch {
                    left: n,
                    right: w.n(),
                });
            }
            let (lo, hi) = if name == "A" { (1, n - 2) } else { (2, n - 1) };
            if let Some(&l) = w
                .letters()
                .iter()
                .find(|l| !(lo..=hi).contains(&(l.unsigned_abs() as usize)))
            {
                return Err(Error::PresentationRange {
                    factor: name,
                    letter: l,
                    lo,
                    hi,
                });
            }
        }
        Ok(Self { n, a, b })
    }

    /// Builds a presentation from words in the comma syntax.
    pub fn parse(n: usize, a: &str, b: &str) -> Result<Self> {
        if n < 4 {
            return Err(Error::TooFewStrands { n, min: 4 });
        }
        Self::new(n, BraidWord::parse(n, a)?, BraidWord::parse(n, b)?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> &BraidWord {
        &self.a
    }

    pub fn b(&self) -> &BraidWord {
        &self.b
    }

    pub fn beta(&self) -> BraidWord {
        self.a.compose(&self.b).expect("same strand count")
    }
}

impl fmt::Display for ExchangePresentation {
    /// The presentation file format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.n)?;
        writeln!(f, "A={}", self.a)?;
        writeln!(f, "B={}", self.b)
    }
}

impl FromStr for ExchangePresentation {
    type Err = Error;

    /// Parses `key=value` lines (`n`, `A`, `B`); blank lines and `#`
    /// comments are skipped.
    fn from_str(text: &str) -> Result<Self> {
        let (mut n, mut a, mut b) = (None, None, None);
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::parse("presentation", format!("expected key=value, got {line:?}")))?;
            let value = value.trim().to_string();
            match key.trim() {
                "n" => {
                    n = Some(value.parse::<usize>().map_err(|e| {
                        Error::parse("presentation", format!("n={value:?}: {e}"))
                    })?)
                }
                "A" => a = Some(value),
                "B" => b = Some(value),
                other => {
                    return Err(Error::parse("presentation", format!("unknown key {other:?}")))
                }
            }
        }
        let n = n.ok_or_else(|| Error::parse("presentation", "missing n"))?;
        Self::parse(
            n,
            a.as_deref().unwrap_or(""),
            b.as_deref().unwrap_or(""),
        )
    }
}

/// `τ = (σ_2 σ_3 ⋯ σ_{n-2})^{n-2}`, the full twist of strands `2..n-1`.
pub fn tau(n: usize) -> Result<BraidWord> {
    if n < 4 {
        return Err(Error::TooFewStrands { n, min: 4 });
    }
    let row: Vec<i32> = (2..=(n as i32 - 2)).collect();
    let letters = row.repeat(n - 2);
    BraidWord::new(n, letters)
}

/// `ex^k(β) = A τ^k B τ^{-k}`, freely reduced.
pub fn iterated_exchange(p: &ExchangePresentation, k: i64) -> BraidWord {
    let t = tau(p.n).expect("presentations have n >= 4").pow(k);
    BraidWord::product(p.n, [&p.a, &t, &p.b, &t.inverse()]).expect("same strand count")
}

/// Which factor commutes with `τ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegeneracyReport {
    pub a_commutes: bool,
    pub b_commutes: bool,
}

impl DegeneracyReport {
    pub fn degenerate(&self) -> bool {
        self.a_commutes || self.b_commutes
    }
}

/// Decides `Aτ = τA` and `Bτ = τB` by the word problem.
pub fn is_degenerate(p: &ExchangePresentation) -> Result<DegeneracyReport> {
    let t = tau(p.n)?;
    let commutes = |x: &BraidWord| -> Result<bool> {
        garside::equal(&x.compose(&t)?, &t.compose(x)?)
    };
    Ok(DegeneracyReport {
        a_commutes: commutes(&p.a)?,
        b_commutes: commutes(&p.b)?,
    })
}

/// Necessary conditions for `β` and `ex^k(β)` to close up to the same link:
/// equal exponent sum, permutation and number of components.
pub fn markov_invariants_check(p: &ExchangePresentation, k: i64) -> bool {
    let beta = p.beta();
    let moved = iterated_exchange(p, k);
    beta.exponent_sum() == moved.exponent_sum()
        && beta.permutation() == moved.permutation()
        && beta.closure_component_count() == moved.closure_component_count()
}

/// Sign pattern of the twist factors in the power identity.
///
/// In left-to-right word order the per-period factor is either
/// `τ^{-k} · (A τ^k A^{-1})` ([`TwistSign::Printed`]: a `-k` twist about `c`
/// followed by a `+k` twist about `A(c)` read functionally) or the same with
/// `k` negated ([`TwistSign::Flipped`]).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwistSign {
    Printed,
    Flipped,
}

impl TwistSign {
    fn exponent(self, k: i64) -> i64 {
        match self {
            TwistSign::Printed => k,
            TwistSign::Flipped => -k,
        }
    }
}

/// The right-hand side of the power identity:
/// `∏_{i=1}^{N} β^{i-1} (τ^{-k} A τ^{k} A^{-1}) β^{-(i-1)} · β^N`.
pub fn twist_product(p: &ExchangePresentation, k: i64, periods: usize, sign: TwistSign) -> BraidWord {
    let n = p.n;
    let k = sign.exponent(k);
    let t = tau(n).expect("n >= 4").pow(k);
    let twist_pair = BraidWord::product(n, [&t.inverse(), &p.a, &t, &p.a.inverse()])
        .expect("same strand count");
    let beta = p.beta();
    let mut acc = BraidWord::identity(n).expect("n >= 4");
    for i in 0..periods {
        let shift = beta.pow(i as i64);
        acc = BraidWord::product(n, [&acc, &shift, &twist_pair, &shift.inverse()])
            .expect("same strand count");
    }
    acc.compose(&beta.pow(periods as i64)).expect("same strand count")
}

/// Fixes the sign pattern at `(k, N) = (1, 1)`: the first pattern whose
/// twist product is conjugate to `ex^1(β)`.
pub fn resolve_twist_sign(p: &ExchangePresentation, cap: usize) -> Result<Option<TwistSign>> {
    let target = iterated_exchange(p, 1);
    for sign in [TwistSign::Printed, TwistSign::Flipped] {
        let rhs = twist_product(p, 1, 1, sign);
        if garside::conjugate_test(&target, &rhs, cap)?.is_conjugate() {
            return Ok(Some(sign));
        }
    }
    Ok(None)
}

/// Checks that `ex^k(β)^N` is conjugate to the twist product, with the sign
/// pattern resolved by [`resolve_twist_sign`].
pub fn twist_identity_check(
    p: &ExchangePresentation,
    k: i64,
    periods: usize,
    cap: usize,
) -> Result<bool> {
    if periods == 0 {
        return Err(Error::Invalid("twist identity needs N >= 1".into()));
    }
    let Some(sign) = resolve_twist_sign(p, cap)? else {
        return Ok(false);
    };
    let lhs = iterated_exchange(p, k).pow(periods as i64);
    let rhs = twist_product(p, k, periods, sign);
    Ok(matches!(
        garside::conjugate_test(&lhs, &rhs, cap)?,
        Conjugacy::Conjugate { .. }
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::garside::DEFAULT_SSS_CAP;

    fn pres(n: usize, a: &str, b: &str) -> ExchangePresentation {
        ExchangePresentation::parse(n, a, b).unwrap()
    }

    #[test]
    fn tau_words() {
        assert_eq!(tau(4).unwrap().to_string(), "2,2");
        assert_eq!(tau(5).unwrap().to_string(), "2,3,2,3,2,3");
        assert_eq!(tau(6).unwrap().to_string(), "2,3,4,2,3,4,2,3,4,2,3,4");
        assert!(tau(3).is_err());
    }

    #[test]
    fn iterated_exchange_examples() {
        let p = pres(4, "1", "3");
        assert_eq!(iterated_exchange(&p, 0).to_string(), "1,3");
        assert_eq!(iterated_exchange(&p, 1).to_string(), "1,2,2,3,-2,-2");
        assert_eq!(iterated_exchange(&p, -1).to_string(), "1,-2,-2,3,2,2");
    }

    #[test]
    fn presentation_validation() {
        assert!(ExchangePresentation::parse(4, "3", "3").is_err());
        assert!(ExchangePresentation::parse(4, "1", "1").is_err());
        assert!(ExchangePresentation::parse(3, "1", "2").is_err());
        assert!(ExchangePresentation::parse(4, "1,-2", "2,-3").is_ok());
        let p: ExchangePresentation = "n=4\nA=1\nB=3\n".parse().unwrap();
        assert_eq!(p, pres(4, "1", "3"));
        assert_eq!(p.to_string().parse::<ExchangePresentation>().unwrap(), p);
        assert!("n=4\nC=1".parse::<ExchangePresentation>().is_err());
    }

    #[test]
    fn degeneracy_examples() {
        let r = is_degenerate(&pres(4, "2", "3")).unwrap();
        assert!(r.a_commutes && r.degenerate());
        let r = is_degenerate(&pres(4, "1", "3")).unwrap();
        assert!(!r.a_commutes && !r.b_commutes && !r.degenerate());
        let r = is_degenerate(&pres(4, "", "3,2,-3")).unwrap();
        assert!(r.a_commutes && r.degenerate());
    }

    #[test]
    fn markov_examples() {
        assert!(markov_invariants_check(&pres(4, "1", "3"), 0));
        assert!(markov_invariants_check(&pres(4, "1", "3"), 3));
        assert!(markov_invariants_check(&pres(5, "1,2", "4"), -2));
    }

    #[test]
    fn twist_identity_examples() {
        let p = pres(4, "1", "3");
        assert_eq!(resolve_twist_sign(&p, DEFAULT_SSS_CAP).unwrap(), Some(TwistSign::Printed));
        assert_eq!(twist_product(&p, 1, 1, TwistSign::Printed).to_string(), "-2,-2,1,2,2,3");
        for (k, periods) in [(0, 1), (0, 3), (1, 1), (1, 2)] {
            assert!(twist_identity_check(&p, k, periods, DEFAULT_SSS_CAP).unwrap(), "k={k} N={periods}");
        }
    }
}
