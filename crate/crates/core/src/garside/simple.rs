use std::fmt;

use crate::braid::{BraidWord, Permutation};

/// Upper bound on strands for the Garside machinery.
pub const MAX_GARSIDE_STRANDS: usize = 16;

/// A simple element (positive permutation braid) of `B_n`.
///
/// Stored as the final arrangement: `arr[pos]` is the starting position of
/// the strand that ends at `pos`. Two strands cross iff they end up in
/// reversed order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Simple {
    n: u8,
    arr: [u8; MAX_GARSIDE_STRANDS],
}

impl Simple {
    pub fn identity(n: usize) -> Self {
        assert!((2..=MAX_GARSIDE_STRANDS).contains(&n));
        let mut arr = [0u8; MAX_GARSIDE_STRANDS];
        for (i, x) in arr.iter_mut().enumerate().take(n) {
            *x = i as u8;
        }
        Self { n: n as u8, arr }
    }

    /// The half twist `Δ`.
    pub fn delta(n: usize) -> Self {
        let mut s = Self::identity(n);
        s.arr[..n].reverse();
        s
    }

    /// `σ_{i+1}` for a 0-based position `i`.
    pub fn generator(n: usize, i: usize) -> Self {
        let mut s = Self::identity(n);
        s.arr.swap(i, i + 1);
        s
    }

    pub(crate) fn from_arrangement(arr: &[u8]) -> Self {
        let mut out = [0u8; MAX_GARSIDE_STRANDS];
        out[..arr.len()].copy_from_slice(arr);
        Self {
            n: arr.len() as u8,
            arr: out,
        }
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    fn slots(&self) -> &[u8] {
        &self.arr[..self.n()]
    }

    fn inverse_arr(&self) -> [u8; MAX_GARSIDE_STRANDS] {
        let mut inv = [0u8; MAX_GARSIDE_STRANDS];
        for (pos, &label) in self.slots().iter().enumerate() {
            inv[label as usize] = pos as u8;
        }
        inv
    }

    pub fn is_identity(&self) -> bool {
        self.slots().iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn is_delta(&self) -> bool {
        let n = self.n();
        self.slots()
            .iter()
            .enumerate()
            .all(|(i, &x)| x as usize == n - 1 - i)
    }

    /// Number of crossings.
    pub fn length(&self) -> usize {
        let s = self.slots();
        let mut count = 0;
        for i in 0..s.len() {
            for j in (i + 1)..s.len() {
                if s[i] > s[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Bit `i` set iff `self = σ_{i+1} · t` with `t` simple.
    pub fn starting_set(&self) -> u32 {
        let inv = self.inverse_arr();
        let mut mask = 0;
        for i in 0..self.n() - 1 {
            if inv[i] > inv[i + 1] {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Bit `i` set iff `self = t · σ_{i+1}` with `t` simple.
    pub fn finishing_set(&self) -> u32 {
        let s = self.slots();
        let mut mask = 0;
        for i in 0..s.len() - 1 {
            if s[i] > s[i + 1] {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Product as permutations (do `self`, then `other`). Only a simple
    /// element when the crossing counts add up.
    pub fn then(&self, other: &Simple) -> Simple {
        let mut out = *self;
        for pos in 0..self.n() {
            out.arr[pos] = self.arr[other.arr[pos] as usize];
        }
        out
    }

    /// `self · σ_{i+1}`.
    pub(crate) fn append_generator(&mut self, i: usize) {
        self.arr.swap(i, i + 1);
    }

    /// `σ_{i+1}^{-1} · self`.
    pub(crate) fn strip_generator(&mut self, i: usize) {
        let (lo, hi) = (i as u8, i as u8 + 1);
        for x in self.arr[..self.n as usize].iter_mut() {
            if *x == lo {
                *x = hi;
            } else if *x == hi {
                *x = lo;
            }
        }
    }

    /// `self^{-1} Δ`, so that `self · right_complement = Δ`.
    pub fn right_complement(&self) -> Simple {
        let n = self.n();
        let inv = self.inverse_arr();
        let mut out = *self;
        for pos in 0..n {
            out.arr[pos] = inv[n - 1 - pos];
        }
        out
    }

    /// `Δ self^{-1}`, so that `left_complement · self = Δ`.
    pub fn left_complement(&self) -> Simple {
        let n = self.n();
        let inv = self.inverse_arr();
        let mut out = *self;
        for (slot, &i) in out.arr[..n].iter_mut().zip(&inv[..n]) {
            *slot = (n - 1) as u8 - i;
        }
        out
    }

    /// Conjugation by `Δ`, which sends `σ_i` to `σ_{n-i}`. An involution.
    pub fn flip(&self) -> Simple {
        let n = self.n();
        let mut out = *self;
        for pos in 0..n {
            out.arr[pos] = (n - 1) as u8 - self.arr[n - 1 - pos];
        }
        out
    }

    /// Conjugation by `Δ^k`.
    pub fn flip_pow(&self, k: i64) -> Simple {
        if k.rem_euclid(2) == 1 {
            self.flip()
        } else {
            *self
        }
    }

    /// A positive word for this element.
    pub fn to_letters(&self) -> Vec<i32> {
        let mut rest = *self;
        let mut letters = Vec::with_capacity(rest.length());
        loop {
            let s = rest.starting_set();
            if s == 0 {
                break;
            }
            let i = s.trailing_zeros() as usize;
            letters.push(i as i32 + 1);
            rest.strip_generator(i);
        }
        letters
    }

    pub fn to_word(&self) -> BraidWord {
        BraidWord::from_trusted(self.n(), self.to_letters())
    }

    /// The induced strand permutation, in the convention of
    /// [`BraidWord::permutation`].
    pub fn permutation(&self) -> Permutation {
        let inv = self.inverse_arr();
        Permutation::from_images(inv[..self.n()].iter().map(|&x| x as usize).collect())
            .expect("arrangement is a bijection")
    }

    /// All `n!` simple elements, identity first.
    pub fn all(n: usize) -> Vec<Simple> {
        let mut perm: Vec<u8> = (0..n as u8).collect();
        let mut out = vec![Simple::from_arrangement(&perm)];
        while next_permutation(&mut perm) {
            out.push(Simple::from_arrangement(&perm));
        }
        out
    }
}

impl fmt::Display for Simple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let images: Vec<String> = self
            .permutation()
            .images()
            .iter()
            .map(|x| (x + 1).to_string())
            .collect();
        f.write_str(&images.join(" "))
    }
}

fn next_permutation(p: &mut [u8]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Rewrites `(s, t)` in place into the left-weighted pair with the same
/// product. Returns whether anything moved.
pub(crate) fn left_weight(s: &mut Simple, t: &mut Simple) -> bool {
    let mut moved = false;
    loop {
        let m = t.starting_set() & !s.finishing_set();
        if m == 0 {
            return moved;
        }
        let i = m.trailing_zeros() as usize;
        s.append_generator(i);
        t.strip_generator(i);
        moved = true;
    }
}
