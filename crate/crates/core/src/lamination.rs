//! Curve systems on the punctured disk in Dynnikov coordinates, the
//! piecewise-linear braid action on them, and entropy estimation from
//! coordinate growth.
//!
//! Punctures `1..n` sit on a horizontal line. For `1 <= j <= n-2`,
//! `a_j = (α_{2j} - α_{2j-1}) / 2` compares the intersections with the
//! vertical arcs below and above puncture `j+1`, and
//! `b_j = (β_j - β_{j+1}) / 2` compares the intersections with the vertical
//! arcs between punctures `j, j+1` and `j+1, j+2`.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::exchange::ExchangePresentation;

/// Integer coordinates of an integral lamination (a curve system up to
/// isotopy). Equal vectors mean isotopic curve systems.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DynnikovCoords {
    n: usize,
    a: Vec<BigInt>,
    b: Vec<BigInt>,
}

impl DynnikovCoords {
    pub fn new(n: usize, a: Vec<BigInt>, b: Vec<BigInt>) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooFewStrands { n, min: 3 });
        }
        if a.len() != n - 2 || b.len() != n - 2 {
            return Err(Error::Invalid(format!(
                "Dynnikov coordinates for D_{n} need {} entries per half, got {} and {}",
                n - 2,
                a.len(),
                b.len()
            )));
        }
        Ok(Self { n, a, b })
    }

    pub fn from_i64(n: usize, a: &[i64], b: &[i64]) -> Result<Self> {
        Self::new(
            n,
            a.iter().copied().map(BigInt::from).collect(),
            b.iter().copied().map(BigInt::from).collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> &[BigInt] {
        &self.a
    }

    pub fn b(&self) -> &[BigInt] {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().chain(&self.b).all(Zero::is_zero)
    }

    pub fn l1_norm(&self) -> BigInt {
        self.a.iter().chain(&self.b).map(|x| x.abs()).sum()
    }

    /// Image of this curve system under `w`; `act(uv) = act(v) ∘ act(u)`.
    pub fn act(&self, w: &BraidWord) -> Result<DynnikovCoords> {
        if w.n() != self.n {
            return Err(Error::StrandMismatch {
                left: w.n(),
                right: self.n,
            });
        }
        let mut out = self.clone();
        for &l in w.letters() {
            apply_letter(&mut out.a, &mut out.b, l);
        }
        Ok(out)
    }

    /// Random lamination with coordinates uniform in `[-bound, bound]`,
    /// never the zero vector.
    pub fn random<R: Rng>(n: usize, bound: i64, rng: &mut R) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooFewStrands { n, min: 3 });
        }
        loop {
            let mut draw = || -> Vec<BigInt> {
                (0..n - 2)
                    .map(|_| BigInt::from(rng.gen_range(-bound..=bound)))
                    .collect()
            };
            let a = draw();
            let b = draw();
            let c = Self { n, a, b };
            if !c.is_zero() {
                return Ok(c);
            }
        }
    }
}

impl fmt::Display for DynnikovCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[BigInt]| {
            v.iter()
                .map(BigInt::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "a:{};b:{}", join(&self.a), join(&self.b))
    }
}

/// Scalars the piecewise-linear update rules can run on.
trait PlScalar: Clone {
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn pos(&self) -> Self;
    fn negpart(&self) -> Self;
}

impl PlScalar for BigInt {
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn pos(&self) -> Self {
        if self.is_positive() {
            self.clone()
        } else {
            BigInt::zero()
        }
    }
    fn negpart(&self) -> Self {
        if self.is_negative() {
            self.clone()
        } else {
            BigInt::zero()
        }
    }
}

impl PlScalar for f64 {
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn pos(&self) -> Self {
        self.max(0.0)
    }
    fn negpart(&self) -> Self {
        self.min(0.0)
    }
}

/// Applies one signed generator. `σ_i^{-1}` is the positive rule conjugated
/// by the reflection `(a, b) ↦ (-a, b)` through the line of punctures.
fn apply_letter<T: PlScalar>(a: &mut [T], b: &mut [T], letter: i32) {
    if letter > 0 {
        apply_positive(a, b, letter as usize);
    } else {
        for x in a.iter_mut() {
            *x = x.neg();
        }
        apply_positive(a, b, letter.unsigned_abs() as usize);
        for x in a.iter_mut() {
            *x = x.neg();
        }
    }
}

fn apply_positive<T: PlScalar>(a: &mut [T], b: &mut [T], i: usize) {
    let m = a.len();
    if i == 1 {
        let (a1, b1) = (&a[0], &b[0]);
        let na = b1.neg().add(&a1.add(&b1.pos()).pos());
        let nb = a1.add(&b1.pos());
        a[0] = na;
        b[0] = nb;
    } else if i == m + 1 {
        let (a1, b1) = (&a[m - 1], &b[m - 1]);
        let na = b1.neg().add(&a1.add(&b1.negpart()).negpart());
        let nb = a1.add(&b1.negpart());
        a[m - 1] = na;
        b[m - 1] = nb;
    } else {
        let (j, k) = (i - 2, i - 1);
        let c = a[j]
            .sub(&a[k])
            .sub(&b[k].pos())
            .add(&b[j].negpart());
        let aj = a[j].sub(&b[j].pos()).sub(&b[k].pos().add(&c).pos());
        let bj = b[k].add(&c.negpart());
        let ak = a[k].sub(&b[k].negpart()).sub(&b[j].negpart().sub(&c).negpart());
        let bk = b[j].sub(&c.negpart());
        a[j] = aj;
        b[j] = bj;
        a[k] = ak;
        b[k] = bk;
    }
}

/// The round curve enclosing exactly punctures `i..=j` (1-based).
pub fn round_curve(n: usize, i: usize, j: usize) -> Result<DynnikovCoords> {
    if n < 3 {
        return Err(Error::TooFewStrands { n, min: 3 });
    }
    if !(1 <= i && i < j && j <= n) || (i == 1 && j == n) {
        return Err(Error::InessentialCurve { n, i, j });
    }
    let mut b = vec![BigInt::zero(); n - 2];
    // Only β_k with i <= k < j are crossed (twice each); a round curve meets
    // the arcs above and below each puncture equally, so a = 0.
    if i >= 2 {
        b[i - 2] = BigInt::from(-1);
    }
    if j < n {
        b[j - 2] = BigInt::from(1);
    }
    DynnikovCoords::new(n, vec![BigInt::zero(); n - 2], b)
}

/// The curve `c` around punctures `2..=n-1`, the core of the twist `τ`.
pub fn exchange_curve(n: usize) -> Result<DynnikovCoords> {
    if n < 4 {
        return Err(Error::TooFewStrands { n, min: 4 });
    }
    round_curve(n, 2, n - 1)
}

/// Probabilistic word problem: `u` and `v` act identically on `samples`
/// random integral laminations. Equal braids always agree.
pub fn action_agrees<R: Rng>(u: &BraidWord, v: &BraidWord, samples: usize, rng: &mut R) -> Result<bool> {
    if u.n() != v.n() {
        return Err(Error::StrandMismatch {
            left: u.n(),
            right: v.n(),
        });
    }
    for _ in 0..samples {
        let l = DynnikovCoords::random(u.n(), INITIAL_BOUND, rng)?;
        if l.act(u)? != l.act(v)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `A` and `B` move the exchange curve: `(A(c) != c, B(c) != c)`.
pub fn geometric_nondegeneracy(p: &ExchangePresentation) -> Result<(bool, bool)> {
    let c = exchange_curve(p.n())?;
    let a_moves = c.act(p.a())? != c;
    let b_moves = c.act(p.b())? != c;
    Ok((a_moves, b_moves))
}

/// The curves `c_1, .., c_{2N}` with `c_{2i-1} = β^{i-1}(c)` and
/// `c_{2i} = (β^{i-1} A)(c)`, words acting left to right.
pub fn curve_family(p: &ExchangePresentation, count: usize) -> Result<Vec<DynnikovCoords>> {
    if count == 0 {
        return Err(Error::Invalid("curve family needs N >= 1".into()));
    }
    let c = exchange_curve(p.n())?;
    let beta = p.beta();
    let mut out = Vec::with_capacity(2 * count);
    let mut current = c;
    for _ in 0..count {
        let moved = current.act(p.a())?;
        out.push(current.clone());
        out.push(moved);
        current = current.act(&beta)?;
    }
    Ok(out)
}

/// Parameters for [`entropy_estimate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropySettings {
    pub max_iters: usize,
    pub tol: f64,
    pub seeds: usize,
}

impl Default for EntropySettings {
    fn default() -> Self {
        Self {
            max_iters: 2000,
            tol: 1e-9,
            seeds: 4,
        }
    }
}

impl EntropySettings {
    pub fn validate(&self) -> Result<()> {
        if self.max_iters == 0 || self.seeds == 0 || !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(Error::Invalid(format!(
                "entropy settings need iters >= 1, seeds >= 1, tol > 0 (got {self:?})"
            )));
        }
        Ok(())
    }
}

/// Growth-rate estimate of the topological entropy, in nats per application
/// of the braid. It is a lower estimate for reducible classes whose growth
/// happens off the sampled laminations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropyEstimate {
    pub value: f64,
    pub iterations: usize,
    pub converged: bool,
    pub residual: f64,
}

/// Base of the fixed seed list; seed `s` uses `ENTROPY_SEED_BASE + s`.
pub const ENTROPY_SEED_BASE: u64 = 0x5eed_b4a1d;

/// Seeds used by [`entropy_estimate`] for a given seed count.
pub fn entropy_seed_list(seeds: usize) -> Vec<u64> {
    (0..seeds as u64).map(|s| ENTROPY_SEED_BASE + s).collect()
}

const CONVERGENCE_WINDOW: usize = 3;
const MAX_PERIOD: usize = 24;
const PERIOD_TOL: f64 = 1e-12;
const MAX_EXACT_ITERS: usize = 400;
const INITIAL_BOUND: i64 = 10;

/// Estimates `lim (1/m) log ‖w^m(L)‖₁`, maximized over `settings.seeds`
/// random initial laminations.
pub fn entropy_estimate(w: &BraidWord, settings: &EntropySettings) -> Result<EntropyEstimate> {
    settings.validate()?;
    if w.n() < 3 || w.is_empty() {
        return Ok(EntropyEstimate {
            value: 0.0,
            iterations: 0,
            converged: true,
            residual: 0.0,
        });
    }
    let mut best: Option<EntropyEstimate> = None;
    for seed in entropy_seed_list(settings.seeds) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let start = DynnikovCoords::random(w.n(), INITIAL_BOUND, &mut rng)?;
        let est = estimate_from(w, &start, settings);
        if best.is_none_or(|b| est.value > b.value) {
            best = Some(est);
        }
    }
    Ok(best.expect("at least one seed"))
}

/// Growth rate from a single starting lamination.
pub fn estimate_from(
    w: &BraidWord,
    start: &DynnikovCoords,
    settings: &EntropySettings,
) -> EntropyEstimate {
    let mut a: Vec<f64> = start.a.iter().map(|x| x.to_f64().unwrap_or(0.0)).collect();
    let mut b: Vec<f64> = start.b.iter().map(|x| x.to_f64().unwrap_or(0.0)).collect();
    normalize(&mut a, &mut b);

    // log-norm after each iteration, relative to the normalized start
    let mut log_norms = Vec::with_capacity(settings.max_iters + 1);
    log_norms.push(0.0);
    let mut recent: VecDeque<(Vec<f64>, Vec<f64>)> = VecDeque::with_capacity(MAX_PERIOD);
    recent.push_back((a.clone(), b.clone()));
    let mut prev_rate = f64::NAN;
    let mut agree = 0;
    let mut residual = f64::INFINITY;
    for m in 1..=settings.max_iters {
        for &l in w.letters() {
            apply_letter(&mut a, &mut b, l);
        }
        let rate = normalize(&mut a, &mut b).ln();
        log_norms.push(log_norms[m - 1] + rate);
        // A projectively periodic orbit has exact growth over one period.
        if let Some(p) = recent
            .iter()
            .rev()
            .position(|(pa, pb)| distance(pa, pb, &a, &b) < PERIOD_TOL)
        {
            let p = p + 1;
            return EntropyEstimate {
                value: ((log_norms[m] - log_norms[m - p]) / p as f64).max(0.0),
                iterations: m,
                converged: true,
                residual: 0.0,
            };
        }
        if recent.len() == MAX_PERIOD {
            recent.pop_front();
        }
        recent.push_back((a.clone(), b.clone()));
        if prev_rate.is_finite() {
            residual = (rate - prev_rate).abs();
            if residual < settings.tol {
                agree += 1;
                if agree >= CONVERGENCE_WINDOW {
                    return EntropyEstimate {
                        value: rate.max(0.0),
                        iterations: m,
                        converged: true,
                        residual,
                    };
                }
            } else {
                agree = 0;
            }
        }
        prev_rate = rate;
    }
    if let Some(m) = polynomial_growth(w, start, settings.max_iters.min(MAX_EXACT_ITERS)) {
        return EntropyEstimate {
            value: 0.0,
            iterations: m,
            converged: true,
            residual: 0.0,
        };
    }
    // Cesàro mean over the second half of the run.
    let total = settings.max_iters;
    let half = total / 2;
    let value = if total > half {
        (log_norms[total] - log_norms[half]) / (total - half) as f64
    } else {
        prev_rate
    };
    EntropyEstimate {
        value: value.max(0.0),
        iterations: total,
        converged: false,
        residual,
    }
}

/// Iterates exactly and reports the first iteration at which the orbit has
/// been linear with a common lag `p` (vanishing second differences
/// `L_{m} - 2 L_{m-p} + L_{m-2p}`) for [`CONVERGENCE_WINDOW`] consecutive
/// steps. Linear orbits have zero growth rate.
fn polynomial_growth(w: &BraidWord, start: &DynnikovCoords, iters: usize) -> Option<usize> {
    let mut orbit = vec![start.clone()];
    let mut streak = [0usize; MAX_PERIOD + 1];
    for m in 1..=iters {
        let next = orbit[m - 1].act(w).ok()?;
        orbit.push(next);
        for p in 1..=MAX_PERIOD.min(m / 2) {
            let (x, y, z) = (&orbit[m], &orbit[m - p], &orbit[m - 2 * p]);
            let flat = |u: &[BigInt], v: &[BigInt], t: &[BigInt]| {
                u.iter().zip(v).zip(t).all(|((u, v), t)| u + t == v + v)
            };
            let linear = flat(&x.a, &y.a, &z.a) && flat(&x.b, &y.b, &z.b);
            streak[p] = if linear { streak[p] + 1 } else { 0 };
            if streak[p] >= CONVERGENCE_WINDOW {
                return Some(m);
            }
        }
    }
    None
}

fn distance(a0: &[f64], b0: &[f64], a1: &[f64], b1: &[f64]) -> f64 {
    a0.iter()
        .zip(a1)
        .chain(b0.iter().zip(b1))
        .map(|(x, y)| (x - y).abs())
        .sum()
}

fn normalize(a: &mut [f64], b: &mut [f64]) -> f64 {
    let norm: f64 = a.iter().chain(b.iter()).map(|x| x.abs()).sum();
    if norm > 0.0 {
        for x in a.iter_mut().chain(b.iter_mut()) {
            *x /= norm;
        }
    }
    norm
}

/// Checks `ent(w^N) / N ≈ ent(w)` within the combined tolerances.
pub fn entropy_of_power_check(w: &BraidWord, power: usize, settings: &EntropySettings) -> Result<bool> {
    if power == 0 {
        return Err(Error::Invalid("power must be at least 1".into()));
    }
    let single = entropy_estimate(w, settings)?;
    let powered = entropy_estimate(&w.pow(power as i64), settings)?;
    for est in [&single, &powered] {
        if !est.converged {
            return Err(Error::NotConverged {
                iterations: est.iterations,
                residual: est.residual,
            });
        }
    }
    let scaled = powered.value / power as f64;
    let allowed = settings.tol * (1.0 + 1.0 / power as f64) + single.residual + powered.residual / power as f64;
    Ok((scaled - single.value).abs() <= allowed.max(settings.tol * 10.0))
}
