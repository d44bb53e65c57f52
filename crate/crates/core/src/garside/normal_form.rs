use std::fmt;
use std::str::FromStr;

use super::simple::{left_weight, Simple, MAX_GARSIDE_STRANDS};
use crate::braid::BraidWord;
use crate::error::{Error, Result};

/// Left-greedy normal form `Δ^inf · s_1 ⋯ s_ℓ`.
///
/// Every factor is a proper simple element (neither `1` nor `Δ`) and each
/// adjacent pair is left-weighted: the starting set of `s_{j+1}` lies inside
/// the finishing set of `s_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm {
    n: usize,
    inf: i64,
    factors: Vec<Simple>,
}

impl NormalForm {
    pub fn identity(n: usize) -> Result<Self> {
        check_garside_strands(n)?;
        Ok(Self {
            n,
            inf: 0,
            factors: Vec::new(),
        })
    }

    pub fn delta_power(n: usize, p: i64) -> Result<Self> {
        let mut nf = Self::identity(n)?;
        nf.inf = p;
        Ok(nf)
    }

    pub fn of_word(w: &BraidWord) -> Result<Self> {
        let mut nf = Self::identity(w.n())?;
        for &l in w.letters() {
            nf.mul_letter(l);
        }
        Ok(nf)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn inf(&self) -> i64 {
        self.inf
    }

    pub fn sup(&self) -> i64 {
        self.inf + self.factors.len() as i64
    }

    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[Simple] {
        &self.factors
    }

    /// Right multiplication by one signed generator.
    pub fn mul_letter(&mut self, letter: i32) {
        let i = letter.unsigned_abs() as usize - 1;
        let g = Simple::generator(self.n, i);
        if letter > 0 {
            self.push_back(g);
        } else {
            // σ_i^{-1} = ∂(σ_i) · Δ^{-1}
            self.push_back(g.right_complement());
            self.mul_delta_inverse();
        }
    }

    fn mul_delta_inverse(&mut self) {
        for f in &mut self.factors {
            *f = f.flip();
        }
        self.inf -= 1;
    }

    /// Right multiplication by a simple element.
    pub fn push_back(&mut self, s: Simple) {
        if s.is_identity() {
            return;
        }
        self.factors.push(s);
        let mut j = self.factors.len() - 1;
        while j > 0 {
            let (head, tail) = self.factors.split_at_mut(j);
            if !left_weight(&mut head[j - 1], &mut tail[0]) {
                break;
            }
            j -= 1;
        }
        self.tidy();
    }

    /// Left multiplication by a simple element.
    pub fn push_front(&mut self, s: Simple) {
        if s.is_identity() {
            return;
        }
        // s Δ^p = Δ^p τ^p(s)
        self.factors.insert(0, s.flip_pow(self.inf));
        for j in 0..self.factors.len() - 1 {
            let (head, tail) = self.factors.split_at_mut(j + 1);
            if !left_weight(&mut head[j], &mut tail[0]) {
                break;
            }
        }
        self.tidy();
    }

    fn tidy(&mut self) {
        self.factors.retain(|f| !f.is_identity());
        let deltas = self.factors.iter().take_while(|f| f.is_delta()).count();
        if deltas > 0 {
            self.factors.drain(..deltas);
            self.inf += deltas as i64;
        }
        debug_assert!(self.is_valid(), "not a normal form: {self}");
    }

    /// Checks the normal-form conditions.
    pub fn is_valid(&self) -> bool {
        self.factors
            .iter()
            .all(|f| !f.is_identity() && !f.is_delta() && f.n() == self.n)
            && self
                .factors
                .windows(2)
                .all(|p| p[1].starting_set() & !p[0].finishing_set() == 0)
    }

    /// `s^{-1} · self · s`.
    pub fn conjugate_simple(&self, s: &Simple) -> NormalForm {
        let mut out = self.clone();
        out.push_back(*s);
        // s^{-1} = Δ^{-1} · (Δ s^{-1})
        out.push_front(s.left_complement());
        out.inf -= 1;
        out
    }

    /// Cycling: conjugation moving the first factor to the end. Returns the
    /// result and the simple conjugator `g` (result = `g^{-1} self g`).
    /// Δ-powers are returned unchanged with the identity conjugator.
    pub fn cycling(&self) -> (NormalForm, Simple) {
        if self.factors.is_empty() {
            return (self.clone(), Simple::identity(self.n));
        }
        let g = self.factors[0].flip_pow(self.inf);
        let mut out = NormalForm {
            n: self.n,
            inf: self.inf,
            factors: self.factors[1..].to_vec(),
        };
        out.push_back(g);
        (out, g)
    }

    /// Decycling: conjugation moving the last factor to the front. The
    /// conjugator is the inverse of the returned simple element.
    pub fn decycling(&self) -> (NormalForm, Simple) {
        let Some(&last) = self.factors.last() else {
            return (self.clone(), Simple::identity(self.n));
        };
        let mut out = NormalForm {
            n: self.n,
            inf: self.inf,
            factors: self.factors[..self.factors.len() - 1].to_vec(),
        };
        out.push_front(last);
        (out, last)
    }

    pub fn to_word(&self) -> BraidWord {
        let delta = Simple::delta(self.n).to_letters();
        let mut letters = Vec::new();
        if self.inf >= 0 {
            for _ in 0..self.inf {
                letters.extend_from_slice(&delta);
            }
        } else {
            let inv: Vec<i32> = delta.iter().rev().map(|l| -l).collect();
            for _ in 0..-self.inf {
                letters.extend_from_slice(&inv);
            }
        }
        for f in &self.factors {
            letters.extend(f.to_letters());
        }
        BraidWord::from_trusted(self.n, letters)
    }

    /// Parses the report format, given the strand count.
    pub fn parse(n: usize, text: &str) -> Result<NormalForm> {
        let nf: NormalForm = text.parse()?;
        if nf.n != n && !(nf.factors.is_empty()) {
            return Err(Error::StrandMismatch {
                left: n,
                right: nf.n,
            });
        }
        Ok(NormalForm { n, ..nf })
    }
}

impl fmt::Display for NormalForm {
    /// `D^p | perm1 ; perm2 ; ...`, each permutation as 1-based images.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{} |", self.inf)?;
        for (idx, s) in self.factors.iter().enumerate() {
            f.write_str(if idx == 0 { " " } else { " ; " })?;
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for NormalForm {
    type Err = Error;

    /// Inverse of `Display`. A bare Δ-power carries no strand count, so it
    /// parses with `n = 2`; use [`NormalForm::parse`] to set it.
    fn from_str(text: &str) -> Result<Self> {
        let bad = |r: &str| Error::parse("normal form", r.to_string());
        let (head, tail) = text.split_once('|').ok_or_else(|| bad("missing '|'"))?;
        let inf = head
            .trim()
            .strip_prefix("D^")
            .ok_or_else(|| bad("missing 'D^'"))?
            .parse::<i64>()
            .map_err(|e| bad(&e.to_string()))?;
        let tail = tail.trim();
        if tail.is_empty() {
            return Ok(NormalForm {
                n: 2,
                inf,
                factors: Vec::new(),
            });
        }
        let mut factors = Vec::new();
        let mut n = None;
        for part in tail.split(';') {
            let images: Vec<usize> = part
                .split_whitespace()
                .map(|x| x.parse::<usize>().map_err(|e| bad(&e.to_string())))
                .collect::<Result<_>>()?;
            let len = images.len();
            if *n.get_or_insert(len) != len || !(2..=MAX_GARSIDE_STRANDS).contains(&len) {
                return Err(bad("inconsistent factor sizes"));
            }
            let mut arr = vec![u8::MAX; len];
            for (strand, &img) in images.iter().enumerate() {
                if img == 0 || img > len || arr[img - 1] != u8::MAX {
                    return Err(bad("factor is not a permutation"));
                }
                arr[img - 1] = strand as u8;
            }
            factors.push(Simple::from_arrangement(&arr));
        }
        let nf = NormalForm {
            n: n.unwrap_or(2),
            inf,
            factors,
        };
        if !nf.is_valid() {
            return Err(bad("factors are not left-weighted proper simples"));
        }
        Ok(nf)
    }
}

pub(crate) fn check_garside_strands(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::TooFewStrands { n, min: 2 });
    }
    if n > MAX_GARSIDE_STRANDS {
        return Err(Error::TooManyStrands {
            n,
            max: MAX_GARSIDE_STRANDS,
        });
    }
    Ok(())
}
