//! Reduced Burau representation over `Z[t, t^{-1}]`.
//!
//! Generator blocks (1-based, acting on rows/columns `i-1, i, i+1`):
//!
//! ```text
//! σ_1     = [-t 0; 1 1]            (top-left corner)
//! σ_i     = [1 t 0; 0 -t 0; 0 1 1]  (1 < i < n-1)
//! σ_{n-1} = [1 t; 0 -t]            (bottom-right corner)
//! ```
//!
//! A word maps to the ordered product of its letters' matrices, which is a
//! homomorphism for left-to-right composition.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::braid::BraidWord;

/// Finitely supported integer Laurent polynomial in `t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    // no zero coefficients are ever stored
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `coeff · t^exp`.
    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Value at `t = -1`.
    pub fn eval_at_minus_one(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(e, c)| if e.rem_euclid(2) == 0 { c.clone() } else { -c })
            .sum()
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        self + &(-o)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    /// Sparse `coeff·t^exp` sum, exponents increasing; `0` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}·t^{e}")?;
        }
        Ok(())
    }
}

/// Square matrix of Laurent polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentMatrix {
    dim: usize,
    entries: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![LaurentPoly::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = LaurentPoly::one();
        }
        Self { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &LaurentPoly {
        &self.entries[row * self.dim + col]
    }

    fn set(&mut self, row: usize, col: usize, p: LaurentPoly) {
        self.entries[row * self.dim + col] = p;
    }

    pub fn trace(&self) -> LaurentPoly {
        (0..self.dim).fold(LaurentPoly::zero(), |acc, i| &acc + self.get(i, i))
    }

    /// Entrywise evaluation at `t = -1`, row-major.
    pub fn eval_at_minus_one(&self) -> Vec<Vec<BigInt>> {
        (0..self.dim)
            .map(|r| (0..self.dim).map(|c| self.get(r, c).eval_at_minus_one()).collect())
            .collect()
    }

    /// Matrix of one signed generator of `B_{dim+1}`.
    pub fn generator(dim: usize, letter: i32) -> Self {
        let mut m = Self::identity(dim);
        if dim == 0 {
            return m;
        }
        let i = letter.unsigned_abs() as usize; // 1-based, 1..=dim
        let t = |e: i64| LaurentPoly::monomial(1, e);
        let mt = |e: i64| LaurentPoly::monomial(-1, e);
        // Positive letters use t, negative letters the inverse block with
        // t^{-1}; see the module docs for the layout.
        let (s, inv) = if letter > 0 { (1, false) } else { (-1, true) };
        let c = i - 1; // 0-based row/column of the -t entry
        m.set(c, c, mt(s));
        if c > 0 {
            m.set(c - 1, c, if inv { LaurentPoly::one() } else { t(1) });
        }
        if c + 1 < dim {
            m.set(c + 1, c, if inv { t(-1) } else { LaurentPoly::one() });
        }
        m
    }
}

impl Mul for &LaurentMatrix {
    type Output = LaurentMatrix;
    fn mul(self, o: &LaurentMatrix) -> LaurentMatrix {
        assert_eq!(self.dim, o.dim);
        let d = self.dim;
        let mut out = LaurentMatrix {
            dim: d,
            entries: vec![LaurentPoly::zero(); d * d],
        };
        for r in 0..d {
            for k in 0..d {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..d {
                    let b = o.get(k, c);
                    if !b.is_zero() {
                        let cur = &out.entries[r * d + c] + &(a * b);
                        out.entries[r * d + c] = cur;
                    }
                }
            }
        }
        out
    }
}

/// Reduced Burau matrix of a word.
pub fn burau(w: &BraidWord) -> LaurentMatrix {
    let dim = w.n() - 1;
    w.letters()
        .iter()
        .fold(LaurentMatrix::identity(dim), |acc, &l| {
            &acc * &LaurentMatrix::generator(dim, l)
        })
}

/// Trace of the reduced Burau matrix; different traces certify that two
/// braids are not conjugate.
pub fn trace_certificate(w: &BraidWord) -> LaurentPoly {
    burau(w).trace()
}

/// Spectral radius of an integer matrix together with the Gershgorin
/// upper bound it must respect.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralBracket {
    pub radius: f64,
    pub gershgorin: f64,
}

/// Characteristic polynomial `det(xI - M)`, coefficients from `x^0` up to
/// the leading `1`, by Faddeev–LeVerrier (divisions are exact).
pub fn characteristic_polynomial(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let d = m.len();
    let mut coeffs = vec![BigInt::zero(); d + 1];
    coeffs[d] = BigInt::one();
    let mut acc = vec![vec![BigInt::zero(); d]; d];
    for k in 1..=d {
        // acc <- M · acc + c_{d-k+1} I
        let mut next = vec![vec![BigInt::zero(); d]; d];
        for r in 0..d {
            for c in 0..d {
                let mut s = BigInt::zero();
                for j in 0..d {
                    s += &m[r][j] * &acc[j][c];
                }
                next[r][c] = s;
            }
            next[r][r] += &coeffs[d - k + 1];
        }
        acc = next;
        let mut tr = BigInt::zero();
        for r in 0..d {
            for j in 0..d {
                tr += &m[r][j] * &acc[j][r];
            }
        }
        coeffs[d - k] = -tr / BigInt::from(k as u64);
    }
    coeffs
}

/// Spectral radius of an integer matrix.
///
/// Eigenvalues come from a real Schur decomposition; the dominant one is
/// then polished by Newton steps on the exact characteristic polynomial.
pub fn spectral_radius(m: &[Vec<BigInt>]) -> SpectralBracket {
    let d = m.len();
    let as_f64 = |x: &BigInt| x.to_f64().unwrap_or(f64::INFINITY);
    let gershgorin = {
        let rows = (0..d)
            .map(|r| m[r].iter().map(|x| as_f64(&x.abs())).sum::<f64>())
            .fold(0.0, f64::max);
        let cols = (0..d)
            .map(|c| (0..d).map(|r| as_f64(&m[r][c].abs())).sum::<f64>())
            .fold(0.0, f64::max);
        rows.min(cols)
    };
    if d == 0 {
        return SpectralBracket {
            radius: 0.0,
            gershgorin,
        };
    }
    let dm = DMatrix::from_fn(d, d, |r, c| as_f64(&m[r][c]));
    let eigen: Vec<Complex64> = match nalgebra::linalg::Schur::try_new(dm, f64::EPSILON, 10_000) {
        Some(schur) => schur.complex_eigenvalues().iter().copied().collect(),
        None => Vec::new(),
    };
    let Some(&dominant) = eigen.iter().max_by(|a, b| a.norm().total_cmp(&b.norm())) else {
        return SpectralBracket {
            radius: gershgorin,
            gershgorin,
        };
    };
    let poly: Vec<f64> = characteristic_polynomial(m).iter().map(as_f64).collect();
    let mut z = dominant;
    for _ in 0..8 {
        let (p, dp) = horner(&poly, z);
        if dp.norm() == 0.0 {
            break;
        }
        let step = p / dp;
        if !step.re.is_finite() || !step.im.is_finite() || step.norm() > 1e-3 * z.norm().max(1.0) {
            break;
        }
        z -= step;
    }
    SpectralBracket {
        radius: z.norm().min(gershgorin),
        gershgorin,
    }
}

fn horner(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// `max(0, log ρ(burau(w)|_{t=-1}))`, a lower bound on the topological
/// entropy of `w`.
pub fn entropy_lower_bound(w: &BraidWord) -> f64 {
    let m = burau(w).eval_at_minus_one();
    spectral_radius(&m).radius.ln().max(0.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, s: &str) -> BraidWord {
        BraidWord::parse(n, s).unwrap()
    }

    #[test]
    fn generators_invert() {
        for n in 2..=6 {
            for i in 1..n as i32 {
                let prod = &LaurentMatrix::generator(n - 1, i) * &LaurentMatrix::generator(n - 1, -i);
                assert_eq!(prod, LaurentMatrix::identity(n - 1));
                let prod = &LaurentMatrix::generator(n - 1, -i) * &LaurentMatrix::generator(n - 1, i);
                assert_eq!(prod, LaurentMatrix::identity(n - 1));
            }
        }
    }

    #[test]
    fn braid_relations_as_matrix_identities() {
        for n in 3..=6 {
            for i in 1..(n as i32 - 1) {
                let lhs = burau(&w(n, &format!("{},{},{}", i, i + 1, i)));
                let rhs = burau(&w(n, &format!("{},{},{}", i + 1, i, i + 1)));
                assert_eq!(lhs, rhs);
            }
            for i in 1..n as i32 {
                for j in (i + 2)..n as i32 {
                    assert_eq!(burau(&w(n, &format!("{i},{j}"))), burau(&w(n, &format!("{j},{i}"))));
                }
            }
        }
    }

    #[test]
    fn identity_and_products() {
        assert_eq!(burau(&w(4, "")), LaurentMatrix::identity(3));
        let u = w(4, "1,-2,3");
        let v = w(4, "2,2,-1");
        assert_eq!(burau(&u.compose(&v).unwrap()), &burau(&u) * &burau(&v));
    }

    #[test]
    fn traces_separate_inverse_generators() {
        let a = trace_certificate(&w(3, "1"));
        let b = trace_certificate(&w(3, "-1"));
        assert_ne!(a, b);
        assert_eq!(a.to_string(), "1·t^0 + -1·t^1");
        assert_eq!(b.to_string(), "-1·t^-1 + 1·t^0");
    }

    #[test]
    fn lower_bound_of_the_golden_braid() {
        let m = burau(&w(3, "1,-2")).eval_at_minus_one();
        let cp = characteristic_polynomial(&m);
        assert_eq!(cp, vec![BigInt::from(1), BigInt::from(-3), BigInt::from(1)]);
        let expected = ((3.0 + 5f64.sqrt()) / 2.0).ln();
        assert!((entropy_lower_bound(&w(3, "1,-2")) - expected).abs() < 1e-12);
        assert_eq!(entropy_lower_bound(&w(3, "")), 0.0);
    }

    #[test]
    fn laurent_arithmetic() {
        let p = &LaurentPoly::monomial(2, -1) + &LaurentPoly::monomial(3, 2);
        let q = &LaurentPoly::monomial(1, 1) - &LaurentPoly::one();
        let prod = &p * &q;
        assert_eq!(prod.to_string(), "-2·t^-1 + 2·t^0 + -3·t^2 + 3·t^3");
        assert!((&p - &p).is_zero());
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(p.eval_at_minus_one(), BigInt::from(1));
    }
}
