use braidforge::burau::{entropy_lower_bound, trace_certificate};
use braidforge::exchange::{
    is_degenerate, iterated_exchange, markov_invariants_check, resolve_twist_sign, tau,
    twist_identity_check, ExchangePresentation, TwistSign,
};
use braidforge::garside::{
    self, conjugate_test_cached, summit_element, Conjugacy, Separation, SummitCache, SummitSet,
};
use braidforge::lamination::{entropy_estimate, entropy_seed_list, geometric_nondegeneracy};
use braidforge::{BraidWord, Result};
use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::config::ExperimentConfig;

/// Hex digits of the trace hash kept in the CSV column.
pub const TRACE_HASH_LEN: usize = 16;

/// Environment variable capping the worker count.
pub const THREADS_ENV: &str = "BRAIDFORGE_THREADS";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Row {
    pub k: i64,
    pub word: String,
    pub len: usize,
    pub expsum: i64,
    pub inf: i64,
    pub sup: i64,
    /// Empty when the summit set exceeded the cap.
    pub sss_size: Option<usize>,
    pub trace: String,
    pub ent_est: f64,
    pub ent_lb: f64,
    pub converged: bool,
    pub trace_poly: String,
    pub markov: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Conjugate,
    NonConjugate,
    Undecided,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Conjugate => "conjugate",
            Verdict::NonConjugate => "non-conjugate",
            Verdict::Undecided => "undecided",
        }
    }
}

/// What a matrix entry rests on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Basis {
    Identical,
    TwistPower,
    SummitSet,
    SummitBounds,
    ExponentSum,
    CycleType,
    Trace,
    ResourceCap,
}

impl Basis {
    pub fn as_str(self) -> &'static str {
        match self {
            Basis::Identical => "identical",
            Basis::TwistPower => "twist-power",
            Basis::SummitSet => "summit-set",
            Basis::SummitBounds => "summit-bounds",
            Basis::ExponentSum => "exponent-sum",
            Basis::CycleType => "cycle-type",
            Basis::Trace => "trace",
            Basis::ResourceCap => "resource-cap",
        }
    }

    /// Bases produced by the super summit set decision.
    pub fn is_summit(self) -> bool {
        matches!(self, Basis::SummitSet | Basis::SummitBounds)
    }
}

impl From<Separation> for Basis {
    fn from(s: Separation) -> Self {
        match s {
            Separation::ExponentSum => Basis::ExponentSum,
            Separation::CycleType => Basis::CycleType,
            Separation::SummitBounds => Basis::SummitBounds,
            Separation::SummitSet => Basis::SummitSet,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairEntry {
    pub j: i64,
    pub k: i64,
    pub verdict: Verdict,
    pub basis: Basis,
    /// `g` with `g^{-1} ex^j g = ex^k`, for conjugate pairs.
    pub witness: Option<String>,
    pub traces_differ: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DegeneracySummary {
    pub a_commutes: bool,
    pub b_commutes: bool,
    pub degenerate: bool,
    pub a_moves_curve: bool,
    pub b_moves_curve: bool,
    pub agree: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckOutcome {
    Pass,
    Fail,
    Undecided,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TwistCheck {
    pub k: i64,
    pub periods: usize,
    pub outcome: CheckOutcome,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InvariantChecks {
    pub markov: bool,
    pub degeneracy_agreement: bool,
    /// `printed` or `flipped`; absent when neither pattern matched.
    pub twist_sign: Option<String>,
    pub twist_identity: Vec<TwistCheck>,
}

impl InvariantChecks {
    pub fn all_pass(&self) -> bool {
        self.markov
            && self.degeneracy_agreement
            && self
                .twist_identity
                .iter()
                .all(|c| c.outcome == CheckOutcome::Pass)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SettingsEcho {
    pub n: usize,
    #[serde(rename = "A")]
    pub a: String,
    #[serde(rename = "B")]
    pub b: String,
    pub k_min: i64,
    pub k_max: i64,
    pub iters: usize,
    pub tol: f64,
    pub seeds: Vec<u64>,
    pub cap: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub settings: SettingsEcho,
    pub rows: Vec<Row>,
    /// `matrix[a][b]` compares `k_min + a` with `k_min + b`.
    pub matrix: Vec<Vec<Verdict>>,
    pub pairs: Vec<PairEntry>,
    pub degeneracy: DegeneracySummary,
    pub checks: InvariantChecks,
}

impl ExperimentReport {
    pub fn pair(&self, j: i64, k: i64) -> Option<&PairEntry> {
        let (j, k) = (j.min(k), j.max(k));
        self.pairs.iter().find(|p| p.j == j && p.k == k)
    }

    pub fn count(&self, verdict: Verdict) -> usize {
        self.pairs.iter().filter(|p| p.verdict == verdict).count()
    }
}

fn trace_hash(poly: &str) -> String {
    let digest = Sha256::digest(poly.as_bytes());
    let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
    hex[..TRACE_HASH_LEN].to_string()
}

struct RowWork {
    row: Row,
    summit: Option<SummitSet>,
}

fn compute_row(cfg: &ExperimentConfig, k: i64) -> Result<RowWork> {
    let p = &cfg.presentation;
    let w = iterated_exchange(p, k);
    let (x, _) = summit_element(&w)?;
    let summit = match SummitSet::compute(&w, cfg.cap) {
        Ok(set) => Some(set),
        Err(e) if e.is_resource() => None,
        Err(e) => return Err(e),
    };
    let est = entropy_estimate(&w, &cfg.entropy)?;
    let poly = trace_certificate(&w).to_string();
    Ok(RowWork {
        row: Row {
            k,
            word: w.to_string(),
            len: w.len(),
            expsum: w.exponent_sum(),
            inf: x.inf(),
            sup: x.sup(),
            sss_size: summit.as_ref().map(SummitSet::len),
            trace: trace_hash(&poly),
            ent_est: est.value,
            ent_lb: entropy_lower_bound(&w),
            converged: est.converged,
            trace_poly: poly,
            markov: markov_invariants_check(p, k),
        },
        summit,
    })
}

/// Decides whether `ex^j` and `ex^k` are conjugate. A `τ^{j-k}` conjugator is
/// tried first; otherwise the super summit sets decide, and a differing trace
/// settles pairs whose sets exceeded the cap.
pub fn decide_pair(
    p: &ExchangePresentation,
    j: i64,
    k: i64,
    cache: &mut SummitCache,
) -> Result<PairEntry> {
    let u = iterated_exchange(p, j);
    let v = iterated_exchange(p, k);
    let traces_differ = trace_certificate(&u) != trace_certificate(&v);
    let entry = |verdict, basis, witness: Option<&BraidWord>| PairEntry {
        j,
        k,
        verdict,
        basis,
        witness: witness.map(BraidWord::to_string),
        traces_differ,
    };
    if j == k {
        return Ok(entry(Verdict::Conjugate, Basis::Identical, Some(&BraidWord::identity(p.n())?)));
    }
    let g = tau(p.n())?.pow(j - k);
    if garside::equal(&u.conjugate_by(&g)?, &v)? {
        return Ok(entry(Verdict::Conjugate, Basis::TwistPower, Some(&g)));
    }
    match conjugate_test_cached(&u, &v, cache) {
        Ok(Conjugacy::Conjugate { witness }) => {
            Ok(entry(Verdict::Conjugate, Basis::SummitSet, Some(&witness)))
        }
        Ok(Conjugacy::NotConjugate(sep)) => Ok(entry(Verdict::NonConjugate, sep.into(), None)),
        Err(e) if e.is_resource() => Ok(if traces_differ {
            entry(Verdict::NonConjugate, Basis::Trace, None)
        } else {
            entry(Verdict::Undecided, Basis::ResourceCap, None)
        }),
        Err(e) => Err(e),
    }
}

fn twist_check(p: &ExchangePresentation, k: i64, periods: usize, cap: usize) -> Result<TwistCheck> {
    let outcome = match twist_identity_check(p, k, periods, cap) {
        Ok(true) => CheckOutcome::Pass,
        Ok(false) => CheckOutcome::Fail,
        Err(e) if e.is_resource() => CheckOutcome::Undecided,
        Err(e) => return Err(e),
    };
    Ok(TwistCheck { k, periods, outcome })
}

fn degeneracy(p: &ExchangePresentation) -> Result<DegeneracySummary> {
    let algebraic = is_degenerate(p)?;
    let (a_moves, b_moves) = geometric_nondegeneracy(p)?;
    Ok(DegeneracySummary {
        a_commutes: algebraic.a_commutes,
        b_commutes: algebraic.b_commutes,
        degenerate: algebraic.degenerate(),
        a_moves_curve: a_moves,
        b_moves_curve: b_moves,
        agree: a_moves != algebraic.a_commutes && b_moves != algebraic.b_commutes,
    })
}

fn thread_pool() -> rayon::ThreadPool {
    let threads = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .unwrap_or(0);
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool")
}

/// Runs the experiment. Rows are computed in parallel; the pairwise matrix
/// is filled afterwards from the memoized summit sets, so the report does
/// not depend on scheduling.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ExperimentReport> {
    cfg.validate()?;
    let p = &cfg.presentation;
    let ks: Vec<i64> = cfg.ks().collect();
    let work: Vec<RowWork> = thread_pool().install(|| {
        ks.par_iter()
            .map(|&k| compute_row(cfg, k))
            .collect::<Result<_>>()
    })?;

    let mut cache = SummitCache::new(cfg.cap);
    let mut rows = Vec::with_capacity(work.len());
    for w in work {
        if let Some(set) = w.summit {
            cache.insert(set);
        }
        rows.push(w.row);
    }

    let size = ks.len();
    let mut matrix = vec![vec![Verdict::Undecided; size]; size];
    let mut pairs = Vec::new();
    for a in 0..size {
        matrix[a][a] = Verdict::Conjugate;
        for b in a + 1..size {
            let entry = decide_pair(p, ks[a], ks[b], &mut cache)?;
            matrix[a][b] = entry.verdict;
            matrix[b][a] = entry.verdict;
            pairs.push(entry);
        }
    }

    let degeneracy = degeneracy(p)?;
    let twist_sign = match resolve_twist_sign(p, cfg.cap) {
        Ok(s) => s,
        Err(e) if e.is_resource() => None,
        Err(e) => return Err(e),
    };
    let twist_identity = [(1, 1), (1, 2)]
        .into_iter()
        .map(|(k, periods)| twist_check(p, k, periods, cfg.cap))
        .collect::<Result<Vec<_>>>()?;
    let checks = InvariantChecks {
        markov: rows.iter().all(|r| r.markov),
        degeneracy_agreement: degeneracy.agree,
        twist_sign: twist_sign.map(|s| {
            match s {
                TwistSign::Printed => "printed",
                TwistSign::Flipped => "flipped",
            }
            .to_string()
        }),
        twist_identity,
    };

    Ok(ExperimentReport {
        settings: SettingsEcho {
            n: p.n(),
            a: p.a().to_string(),
            b: p.b().to_string(),
            k_min: cfg.k_min,
            k_max: cfg.k_max,
            iters: cfg.entropy.max_iters,
            tol: cfg.entropy.tol,
            seeds: entropy_seed_list(cfg.entropy.seeds),
            cap: cfg.cap,
        },
        rows,
        matrix,
        pairs,
        degeneracy,
        checks,
    })
}
