//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use braidforge::burau::{burau, entropy_lower_bound, trace_certificate};
use braidforge::exchange::{
    is_degenerate, iterated_exchange, markov_invariants_check, tau, twist_identity_check,
    ExchangePresentation,
};
use braidforge::garside::{self, normal_form, DEFAULT_SSS_CAP};
use braidforge::lamination::{
    action_agrees, entropy_estimate, entropy_of_power_check, geometric_nondegeneracy,
    DynnikovCoords, EntropySettings,
};
use braidforge::BraidWord;
use braidforge_cli::experiment::{run_experiment, Basis, Verdict};
use braidforge_cli::ExperimentConfig;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn headline() -> ExchangePresentation {
    ExchangePresentation::parse(4, "1", "3").unwrap()
}

fn random_word<R: Rng>(rng: &mut R, n: usize, gens: std::ops::RangeInclusive<i32>, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(gens.clone());
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    BraidWord::new(n, letters).unwrap()
}

fn random_presentation<R: Rng>(rng: &mut R, n: usize) -> ExchangePresentation {
    let a = random_word(rng, n, 1..=n as i32 - 2, 7);
    let b = random_word(rng, n, 2..=n as i32 - 1, 7);
    ExchangePresentation::new(n, a, b).unwrap()
}

/// Rewrites `w` by inserting defining relators, keeping the braid fixed.
fn disguise<R: Rng>(rng: &mut R, w: &BraidWord, max_len: usize) -> BraidWord {
    let n = w.n() as i32;
    let mut letters = w.letters().to_vec();
    loop {
        let i = rng.gen_range(1..n);
        let relator = match rng.gen_range(0..3) {
            1 if i + 1 < n => vec![i, i + 1, i, -(i + 1), -i, -(i + 1)],
            2 if i + 2 < n => vec![i, i + 2, -i, -(i + 2)],
            _ => vec![-i, i],
        };
        if letters.len() + relator.len() > max_len {
            return BraidWord::new(w.n(), letters).unwrap();
        }
        let at = rng.gen_range(0..=letters.len());
        letters.splice(at..at, relator);
    }
}

fn headline_reproduction() -> Outcome {
    let start = Instant::now();
    let p = headline();
    let degenerate = is_degenerate(&p).unwrap().degenerate();
    let cfg = ExperimentConfig::new(p, -3, 3).unwrap();
    let report = run_experiment(&cfg).unwrap();
    let elapsed = start.elapsed();
    let non_conjugate = report
        .pairs
        .iter()
        .filter(|e| e.verdict == Verdict::NonConjugate && e.basis.is_summit())
        .count();
    let undecided = report.count(Verdict::Undecided);
    let conjugate: Vec<String> = report
        .pairs
        .iter()
        .filter(|e| e.verdict == Verdict::Conjugate)
        .map(|e| format!("({},{})", e.j, e.k))
        .collect();
    let pass = !degenerate
        && report.pairs.len() == 21
        && non_conjugate == 21
        && undecided == 0
        && elapsed < Duration::from_secs(300);
    let mut detail = format!(
        "non-degenerate={}, {non_conjugate}/21 non-conjugate by summit sets, {undecided} undecided, {:.2}s",
        !degenerate,
        elapsed.as_secs_f64()
    );
    if !conjugate.is_empty() {
        detail += &format!("; conjugate with verified witness: {}", conjugate.join(" "));
    }
    outcome(pass, detail)
}

fn entropy_growth() -> Outcome {
    let p = headline();
    let settings = EntropySettings::default();
    let mut est = Vec::new();
    let mut lb = Vec::new();
    for k in 1..=8 {
        let w = iterated_exchange(&p, k);
        est.push(entropy_estimate(&w, &settings).unwrap().value);
        lb.push(entropy_lower_bound(&w));
    }
    let nondecreasing = |v: &[f64]| v.windows(2).all(|w| w[1] >= w[0]);
    let pass = nondecreasing(&est) && est[7] > 2.0 * est[0] && nondecreasing(&lb);
    let fmt = |v: &[f64]| v.iter().map(|x| format!("{x:.4}")).collect::<Vec<_>>().join(" ");
    outcome(pass, format!("estimates k=1..8: {}; lower bounds: {}", fmt(&est), fmt(&lb)))
}

fn estimator_calibration() -> Outcome {
    let start = Instant::now();
    let w = BraidWord::parse(3, "1,-2").unwrap();
    let golden = ((3.0 + 5f64.sqrt()) / 2.0).ln();
    let est = entropy_estimate(&w, &EntropySettings::default()).unwrap();
    let lb = entropy_lower_bound(&w);
    let elapsed = start.elapsed();
    let pass = (est.value - golden).abs() < 1e-3
        && (lb - golden).abs() < 1e-6
        && elapsed < Duration::from_secs(1);
    outcome(
        pass,
        format!(
            "estimate {:.9}, lower bound {:.12}, target {:.12}, {:.3}s",
            est.value,
            lb,
            golden,
            elapsed.as_secs_f64()
        ),
    )
}

fn degenerate_control() -> Outcome {
    let p = ExchangePresentation::parse(4, "2", "3").unwrap();
    let cfg = ExperimentConfig::new(p.clone(), -2, 2).unwrap();
    let report = run_experiment(&cfg).unwrap();
    let t = tau(4).unwrap();
    let mut verified = 0;
    for e in &report.pairs {
        let Some(witness) = e.witness.as_deref() else {
            continue;
        };
        let g = BraidWord::parse(4, witness).unwrap();
        let is_tau_power = garside::equal(&g, &t.pow(e.j - e.k)).unwrap();
        let conjugates = garside::equal(
            &iterated_exchange(&p, e.j).conjugate_by(&g).unwrap(),
            &iterated_exchange(&p, e.k),
        )
        .unwrap();
        if e.verdict == Verdict::Conjugate && e.basis == Basis::TwistPower && is_tau_power && conjugates {
            verified += 1;
        }
    }
    let total = report.pairs.len();
    outcome(
        total == 10 && verified == total,
        format!("{verified}/{total} pairs conjugate by a verified tau-power witness"),
    )
}

fn word_problem_agreement() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut equal_pairs, mut disagreements) = (0, 0);
    for i in 0..1000 {
        let n = [3, 4, 5][i % 3];
        let gens = 1..=n as i32 - 1;
        let u = random_word(&mut rng, n, gens.clone(), if i % 2 == 0 { 12 } else { 6 });
        let v = if i % 2 == 0 {
            random_word(&mut rng, n, gens, 12)
        } else {
            disguise(&mut rng, &u, 12)
        };
        let by_garside = garside::equal(&u, &v).unwrap();
        let by_action = action_agrees(&u, &v, 20, &mut rng).unwrap();
        equal_pairs += by_garside as usize;
        disagreements += (by_garside != by_action) as usize;
    }
    outcome(
        disagreements == 0,
        format!("1000 pairs ({equal_pairs} equal), {disagreements} disagreements"),
    )
}

fn cross_formulation() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let (mut degenerate, mut mismatches) = (0, 0);
    for i in 0..100 {
        let p = random_presentation(&mut rng, if i % 2 == 0 { 4 } else { 5 });
        let algebraic = is_degenerate(&p).unwrap();
        let (a_moves, b_moves) = geometric_nondegeneracy(&p).unwrap();
        degenerate += algebraic.degenerate() as usize;
        if a_moves == algebraic.a_commutes || b_moves == algebraic.b_commutes {
            mismatches += 1;
        }
    }
    outcome(
        mismatches == 0,
        format!("100 presentations ({degenerate} degenerate), {mismatches} mismatches"),
    )
}

fn twist_identity() -> Outcome {
    let p = headline();
    let results: Vec<String> = [(1, 1), (2, 1), (1, 2)]
        .into_iter()
        .map(|(k, n)| {
            let ok = twist_identity_check(&p, k, n, DEFAULT_SSS_CAP).unwrap();
            format!("(k={k},N={n}):{}", if ok { "ok" } else { "fail" })
        })
        .collect();
    outcome(results.iter().all(|r| r.ends_with("ok")), results.join(" "))
}

fn invariant_suites() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let settings = EntropySettings::default();
    let mut failures: Vec<String> = Vec::new();

    let mut action_failures = 0;
    for _ in 0..200 {
        let n = rng.gen_range(3..=6);
        let gens = 1..=n as i32 - 1;
        let (u, v) = (random_word(&mut rng, n, gens.clone(), 10), random_word(&mut rng, n, gens, 10));
        let l = DynnikovCoords::random(n, 20, &mut rng).unwrap();
        let row: Vec<i32> = (1..n as i32).collect();
        let full = BraidWord::new(n, row.repeat(n)).unwrap();
        let ok = l.act(&u.compose(&v).unwrap()).unwrap() == l.act(&u).unwrap().act(&v).unwrap()
            && l.act(&u.compose(&u.inverse()).unwrap()).unwrap() == l
            && l.act(&full).unwrap() == l;
        action_failures += !ok as usize;
    }
    if action_failures > 0 {
        failures.push(format!("action axioms x{action_failures}"));
    }

    let mut hom_failures = 0;
    let mut trace_failures = 0;
    for _ in 0..100 {
        let n = rng.gen_range(3..=5);
        let gens = 1..=n as i32 - 1;
        let (u, v) = (random_word(&mut rng, n, gens.clone(), 8), random_word(&mut rng, n, gens, 8));
        let uv = u.compose(&v).unwrap();
        let mut nf = normal_form(&u).unwrap();
        for &l in v.letters() {
            nf.mul_letter(l);
        }
        let ok = burau(&uv) == &burau(&u) * &burau(&v)
            && uv.permutation() == u.permutation().then(&v.permutation())
            && nf == normal_form(&uv).unwrap();
        hom_failures += !ok as usize;
        trace_failures += (trace_certificate(&u) != trace_certificate(&u.conjugate_by(&v).unwrap())) as usize;
    }
    if hom_failures > 0 {
        failures.push(format!("homomorphisms x{hom_failures}"));
    }
    if trace_failures > 0 {
        failures.push(format!("trace invariance x{trace_failures}"));
    }

    let p = headline();
    let samples = vec![
        BraidWord::parse(3, "1,-2").unwrap(),
        BraidWord::parse(3, "1,1,-2").unwrap(),
        BraidWord::parse(4, "1,-2,3").unwrap(),
        BraidWord::parse(4, "1,2,-3,-2").unwrap(),
        BraidWord::parse(5, "1,-2,3,-4").unwrap(),
        iterated_exchange(&p, 2),
        iterated_exchange(&p, -3),
        BraidWord::parse(3, "1,2").unwrap(),
        iterated_exchange(&p, 1),
        BraidWord::identity(4).unwrap(),
    ];
    let mut entropy_failures = 0;
    let mut worst = 0f64;
    for w in &samples {
        let g = random_word(&mut rng, w.n(), 1..=w.n() as i32 - 1, 6);
        let a = entropy_estimate(w, &settings).unwrap();
        let b = entropy_estimate(&w.conjugate_by(&g).unwrap(), &settings).unwrap();
        let diff = (a.value - b.value).abs();
        worst = worst.max(diff);
        entropy_failures += (!(a.converged && b.converged) || diff >= 2.0 * settings.tol) as usize;
    }
    if entropy_failures > 0 {
        failures.push(format!("entropy invariance x{entropy_failures}"));
    }

    let mut markov_failures = 0;
    for i in 0..200 {
        let p = random_presentation(&mut rng, if i % 2 == 0 { 4 } else { 5 });
        let k = rng.gen_range(-4..=4);
        markov_failures += !markov_invariants_check(&p, k) as usize;
    }
    if markov_failures > 0 {
        failures.push(format!("markov x{markov_failures}"));
    }

    let mut power_failures = 0;
    for w in &samples {
        power_failures += !matches!(entropy_of_power_check(w, 2, &settings), Ok(true)) as usize;
    }
    if power_failures > 0 {
        failures.push(format!("entropy of power x{power_failures}"));
    }

    let detail = format!(
        "200 action, 100 homomorphism, 100 trace, 10 entropy-invariance (max diff {worst:.1e}), 200 markov, 10 power checks{}",
        if failures.is_empty() {
            String::new()
        } else {
            format!("; failed: {}", failures.join(", "))
        }
    );
    outcome(failures.is_empty(), detail)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("headline reproduction", headline_reproduction),
        ("entropy growth", entropy_growth),
        ("estimator calibration", estimator_calibration),
        ("degenerate control", degenerate_control),
        ("word-problem oracle agreement", word_problem_agreement),
        ("cross-formulation consistency", cross_formulation),
        ("twist identity", twist_identity),
        ("invariant suites", invariant_suites),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        failed += !o.pass as usize;
        println!(
            "{} criterion {}: {name}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            i + 1,
            o.detail
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
