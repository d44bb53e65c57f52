//! Braid words over the Artin generators and their cheap class functions.
//!
//! Words are read left to right: `uv` means "do `u`, then `v`". Every
//! identity elsewhere in the crate is written in this convention.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A word in the signed Artin generators of `B_n`.
///
/// The letter `i > 0` stands for `σ_i`, `-i` for `σ_i^{-1}`. The empty word
/// is the identity braid.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    /// Builds a word without reducing it.
    pub fn new(n: usize, letters: Vec<i32>) -> Result<Self> {
        check_strands(n)?;
        for &l in &letters {
            check_letter(n, l)?;
        }
        Ok(Self { n, letters })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(n, Vec::new())
    }

    pub fn generator(n: usize, letter: i32) -> Result<Self> {
        Self::new(n, vec![letter])
    }

    /// Parses the comma-separated syntax (`"1,-2,3"`); the empty string is `ε`.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        Self::new(n, parse_letters(text)?)
    }

    /// Parses a word, taking the smallest strand count that fits its letters
    /// (at least `min_n`).
    pub fn parse_infer(text: &str, min_n: usize) -> Result<Self> {
        let letters = parse_letters(text)?;
        let needed = letters
            .iter()
            .map(|l| l.unsigned_abs() as usize + 1)
            .max()
            .unwrap_or(2);
        Self::new(needed.max(min_n).max(2), letters)
    }

    pub(crate) fn from_trusted(n: usize, letters: Vec<i32>) -> Self {
        debug_assert!(letters.iter().all(|&l| check_letter(n, l).is_ok()));
        Self { n, letters }
    }

    pub fn n(&self) -> usize {
        self.n
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

    /// Concatenation followed by free reduction.
    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord> {
        same_strands(self, other)?;
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(Self::from_trusted(self.n, free_reduce(letters)))
    }

    /// Composes a sequence of words of the same strand count.
    pub fn product<'a, I>(n: usize, words: I) -> Result<BraidWord>
    where
        I: IntoIterator<Item = &'a BraidWord>,
    {
        check_strands(n)?;
        let mut letters = Vec::new();
        for w in words {
            if w.n != n {
                return Err(Error::StrandMismatch { left: n, right: w.n });
            }
            letters.extend_from_slice(&w.letters);
        }
        Ok(Self::from_trusted(n, free_reduce(letters)))
    }

    pub fn inverse(&self) -> BraidWord {
        let letters = self.letters.iter().rev().map(|l| -l).collect();
        Self::from_trusted(self.n, letters)
    }

    /// `self^k` for any integer `k`, freely reduced.
    pub fn pow(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let reps = k.unsigned_abs() as usize;
        let mut letters = Vec::with_capacity(base.len() * reps);
        for _ in 0..reps {
            letters.extend_from_slice(&base.letters);
        }
        Self::from_trusted(self.n, free_reduce(letters))
    }

    /// `g^{-1} · self · g`.
    pub fn conjugate_by(&self, g: &BraidWord) -> Result<BraidWord> {
        same_strands(self, g)?;
        BraidWord::product(self.n, [&g.inverse(), self, g])
    }

    pub fn free_reduced(&self) -> BraidWord {
        Self::from_trusted(self.n, free_reduce(self.letters.clone()))
    }

    /// Image under `B_n → S_n`, with `σ_i` sent to the transposition `(i i+1)`.
    pub fn permutation(&self) -> Permutation {
        // pos[strand] tracks the current position of each strand.
        let mut at: Vec<usize> = (0..self.n).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        // at[position] = strand now sitting there; invert it.
        let mut images = vec![0; self.n];
        for (pos, &strand) in at.iter().enumerate() {
            images[strand] = pos;
        }
        Permutation { images }
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }

    /// Number of components of the closure link.
    pub fn closure_component_count(&self) -> usize {
        self.permutation().cycle_count()
    }

    /// Largest generator index used, or 0 for the empty word.
    pub fn max_generator(&self) -> usize {
        self.letters
            .iter()
            .map(|l| l.unsigned_abs() as usize)
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, l) in self.letters.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// A permutation of `{0, .., n-1}`; `images[p]` is the final position of the
/// strand that starts at position `p`.
///
/// With this convention `σ_1σ_2` in `B_3` is the cycle `(1 3 2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Invalid(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Self { images })
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Do `self`, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    /// Cycles in 1-based notation, fixed points omitted, each starting at its
    /// smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.images[i];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Number of cycles, fixed points included.
    pub fn cycle_count(&self) -> usize {
        let moved: usize = self.cycles().iter().map(Vec::len).sum();
        self.cycles().len() + (self.len() - moved)
    }

    /// Sorted cycle lengths, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let cycles = self.cycles();
        let moved: usize = cycles.iter().map(Vec::len).sum();
        let mut ty: Vec<usize> = cycles.iter().map(Vec::len).collect();
        ty.extend(std::iter::repeat_n(1, self.len() - moved));
        ty.sort_unstable();
        ty
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    /// Parses with the strand count inferred from the letters.
    fn from_str(s: &str) -> Result<Self> {
        BraidWord::parse_infer(s, 2)
    }
}

pub(crate) fn check_strands(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::TooFewStrands { n, min: 2 });
    }
    Ok(())
}

fn check_letter(n: usize, letter: i32) -> Result<()> {
    let i = letter.unsigned_abs() as usize;
    if letter == 0 || i >= n {
        return Err(Error::GeneratorOutOfRange { letter, n });
    }
    Ok(())
}

fn same_strands(u: &BraidWord, v: &BraidWord) -> Result<()> {
    if u.n != v.n {
        return Err(Error::StrandMismatch {
            left: u.n,
            right: v.n,
        });
    }
    Ok(())
}

fn parse_letters(text: &str) -> Result<Vec<i32>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|tok| {
            let tok = tok.trim();
            match tok.parse::<i32>() {
                Ok(0) => Err(Error::parse("braid word", "letter 0 is not a generator")),
                Ok(l) => Ok(l),
                Err(e) => Err(Error::parse("braid word", format!("{tok:?}: {e}"))),
            }
        })
        .collect()
}

fn free_reduce(letters: Vec<i32>) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(letters.len());
    for l in letters {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, s: &str) -> BraidWord {
        BraidWord::parse(n, s).unwrap()
    }

    #[test]
    fn compose_cancels_and_concatenates() {
        assert!(w(3, "1").compose(&w(3, "-1")).unwrap().is_empty());
        assert_eq!(w(4, "1,3").compose(&w(4, "2")).unwrap(), w(4, "1,3,2"));
        assert_eq!(w(4, "").compose(&w(4, "2,-3")).unwrap(), w(4, "2,-3"));
        assert_eq!(
            w(3, "1").compose(&w(4, "1")),
            Err(Error::StrandMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn invert_examples() {
        assert_eq!(w(3, "1,2").inverse(), w(3, "-2,-1"));
        assert!(w(3, "").inverse().is_empty());
        assert_eq!(w(3, "-2").inverse(), w(3, "2"));
    }

    #[test]
    fn permutation_examples() {
        let p = w(4, "1,3").permutation();
        assert_eq!(p.cycles(), vec![vec![1, 2], vec![3, 4]]);
        assert!(w(4, "2,2").permutation().is_identity());
        assert_eq!(w(3, "1,2").permutation().to_string(), "(1 3 2)");
    }

    #[test]
    fn exponent_sums() {
        assert_eq!(w(3, "1,-2").exponent_sum(), 0);
        assert_eq!(w(4, "1,2,2,3,-2,-2").exponent_sum(), 2);
        assert_eq!(w(3, "").exponent_sum(), 0);
    }

    #[test]
    fn closure_components() {
        assert_eq!(w(4, "1,3").closure_component_count(), 2);
        assert_eq!(w(3, "").closure_component_count(), 3);
        assert_eq!(w(3, "1,2").closure_component_count(), 1);
    }

    #[test]
    fn parse_rejects_bad_letters() {
        assert!(BraidWord::parse(3, "1,3").is_err());
        assert!(BraidWord::parse(3, "1,0").is_err());
        assert!(BraidWord::parse(3, "1,x").is_err());
        assert!(BraidWord::new(1, vec![]).is_err());
        assert_eq!(w(4, " 1, -2 ,3 ").to_string(), "1,-2,3");
        assert_eq!("2,-1".parse::<BraidWord>().unwrap().n(), 3);
    }

    #[test]
    fn pow_and_conjugate() {
        let x = w(3, "1,-2");
        assert_eq!(x.pow(2), w(3, "1,-2,1,-2"));
        assert_eq!(x.pow(-1), x.inverse());
        assert!(x.pow(0).is_empty());
        let g = w(3, "2");
        assert_eq!(x.conjugate_by(&g).unwrap(), w(3, "-2,1"));
    }
}
