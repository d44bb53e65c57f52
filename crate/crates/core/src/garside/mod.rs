//! Classical Garside structure on `B_n`: `Δ` is the half twist and the
//! simple elements are the `n!` positive permutation braids.
//!
//! Normal forms solve the word problem; super summit sets solve the
//! conjugacy problem.

mod normal_form;
mod simple;
mod summit;

pub use normal_form::NormalForm;
pub use simple::{Simple, MAX_GARSIDE_STRANDS};
pub use summit::{summit_element, SummitCache, SummitInvariant, SummitSet, DEFAULT_SSS_CAP};

use crate::braid::BraidWord;
use crate::error::{Error, Result};

pub fn normal_form(u: &BraidWord) -> Result<NormalForm> {
    NormalForm::of_word(u)
}

/// Word problem: `u = v` in `B_n`.
pub fn equal(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    if u.n() != v.n() {
        return Err(Error::StrandMismatch {
            left: u.n(),
            right: v.n(),
        });
    }
    Ok(normal_form(u)? == normal_form(v)?)
}

pub fn super_summit_set(u: &BraidWord, cap: usize) -> Result<SummitSet> {
    SummitSet::compute(u, cap)
}

pub fn summit_invariant(u: &BraidWord, cap: usize) -> Result<SummitInvariant> {
    Ok(super_summit_set(u, cap)?.invariant())
}

/// Why two braids were declared non-conjugate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Separation {
    ExponentSum,
    CycleType,
    SummitBounds,
    SummitSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Conjugacy {
    /// `witness^{-1} · u · witness = v`, checked by the word problem.
    Conjugate { witness: BraidWord },
    NotConjugate(Separation),
}

impl Conjugacy {
    pub fn is_conjugate(&self) -> bool {
        matches!(self, Conjugacy::Conjugate { .. })
    }
}

/// Decides whether `u` and `v` are conjugate.
pub fn conjugate_test(u: &BraidWord, v: &BraidWord, cap: usize) -> Result<Conjugacy> {
    let mut cache = SummitCache::new(cap);
    conjugate_test_cached(u, v, &mut cache)
}

/// [`conjugate_test`] reusing summit sets from `cache`.
pub fn conjugate_test_cached(
    u: &BraidWord,
    v: &BraidWord,
    cache: &mut SummitCache,
) -> Result<Conjugacy> {
    if u.n() != v.n() {
        return Err(Error::StrandMismatch {
            left: u.n(),
            right: v.n(),
        });
    }
    if u.exponent_sum() != v.exponent_sum() {
        return Ok(Conjugacy::NotConjugate(Separation::ExponentSum));
    }
    if u.permutation().cycle_type() != v.permutation().cycle_type() {
        return Ok(Conjugacy::NotConjugate(Separation::CycleType));
    }
    let (set, x_u, g_u) = cache.lookup(u)?;
    let (x_v, g_v) = summit_element(v)?;
    if x_v.inf() != set.inf() || x_v.sup() != set.sup() {
        return Ok(Conjugacy::NotConjugate(Separation::SummitBounds));
    }
    let Some(c_v) = set.conjugator_to(&x_v) else {
        return Ok(Conjugacy::NotConjugate(Separation::SummitSet));
    };
    // The set may have been seeded by another braid of the class, so route
    // u -> x_u -> seed -> x_v -> v.
    let c_u = set
        .conjugator_to(&x_u)
        .expect("summit element of u lies in its own summit set");
    let witness = BraidWord::product(u.n(), [&g_u, &c_u.inverse(), &c_v, &g_v.inverse()])?;
    if !equal(&u.conjugate_by(&witness)?, v)? {
        return Err(Error::Invalid(format!(
            "conjugator {witness} failed verification"
        )));
    }
    Ok(Conjugacy::Conjugate { witness })
}
