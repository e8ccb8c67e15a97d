//! End-to-end acceptance run: one PASS/FAIL line per criterion.
//!
//! Every check is exact; the only pinned numbers are sample counts and
//! wall-clock budgets.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use picard_core::batch::map_indexed_parallel;
use picard_core::random::{
    between, random_invalid_params, random_stabilizer_params, random_stabilizer_word,
    random_word_up_to, sample_rng,
};
use picard_core::relations::check_relations;
use picard_core::stabilizer::vertical_word;
use picard_core::{
    contraction_bound, decompose, factor_stabilizer, generator_matrix, langlands_decompose,
    params_valid, translation_matrix, BoundaryPoint, Error, GeneratorId, HeisPoint, QuadRat,
    ReductionConfig, RingTag,
};

const SEED: u64 = 20_240_601;
const ROUND_TRIP_SAMPLES: u64 = 1000;
const MAX_WORD_LENGTH: usize = 30;
const STABILIZER_SAMPLES: u64 = 1000;
const HEISENBERG_PAIRS: u64 = 1000;
const PARITY_CASES: u64 = 500;
const BOUNDARY_SAMPLES: u64 = 1000;

const BUDGET_GENERATORS: Duration = Duration::from_secs(1);
const BUDGET_ROUND_TRIP: Duration = Duration::from_secs(300);
const BUDGET_STABILIZER: Duration = Duration::from_secs(30);
const BUDGET_HEISENBERG: Duration = Duration::from_secs(10);

struct Report {
    failures: usize,
}

impl Report {
    fn record(&mut self, id: u32, name: &str, ok: bool, detail: String) {
        let status = if ok { "PASS" } else { "FAIL" };
        println!("{status} [{id}] {name}: {detail}");
        if !ok {
            self.failures += 1;
        }
    }
}

fn within(budget: Duration, start: Instant) -> (bool, String) {
    let elapsed = start.elapsed();
    (
        elapsed < budget,
        format!("{:.2}s of {}s", elapsed.as_secs_f64(), budget.as_secs()),
    )
}

fn generator_validity(report: &mut Report) {
    let start = Instant::now();
    let mut bad = Vec::new();
    for tag in RingTag::ALL {
        for g in GeneratorId::ALL {
            let m = generator_matrix(g, tag);
            if !(m.is_integral() && m.is_unitary()) {
                bad.push(format!("{g} (d={tag})"));
            }
        }
    }
    let (fast, time) = within(BUDGET_GENERATORS, start);
    report.record(
        1,
        "generator validity",
        bad.is_empty() && fast,
        format!("12 matrices, failing {bad:?}, {time}"),
    );
}

struct DescentSummary {
    samples: u64,
    mismatches: u64,
    stalls: u64,
    errors: Vec<String>,
    steps: u64,
    non_decreasing: u64,
    max_ratio: BigRational,
    ratio_sum: f64,
    meeting_bound: u64,
}

fn descent_runs(tag: RingTag) -> DescentSummary {
    // No window expansion: a stall at radius 2 surfaces as an error.
    let config = ReductionConfig {
        radius: 2,
        expanded_radius: 2,
    };
    let results = map_indexed_parallel(ROUND_TRIP_SAMPLES, |i| {
        let w = random_word_up_to(tag, MAX_WORD_LENGTH, &mut sample_rng(SEED, i));
        let g = w.evaluate();
        (g.clone(), decompose(&g, tag, &config))
    });
    let bound = contraction_bound(tag);
    let mut s = DescentSummary {
        samples: ROUND_TRIP_SAMPLES,
        mismatches: 0,
        stalls: 0,
        errors: Vec::new(),
        steps: 0,
        non_decreasing: 0,
        max_ratio: BigRational::zero(),
        ratio_sum: 0.0,
        meeting_bound: 0,
    };
    for (g, r) in results {
        match r {
            Ok(trace) => {
                if !trace.full_word.evaluate().projective_eq(&g) {
                    s.mismatches += 1;
                }
                for step in &trace.steps {
                    s.steps += 1;
                    if step.after_norm >= step.before_norm {
                        s.non_decreasing += 1;
                    }
                    let ratio = step.ratio();
                    s.ratio_sum += ratio.to_f64().unwrap();
                    if ratio < bound {
                        s.meeting_bound += 1;
                    }
                    if ratio > s.max_ratio {
                        s.max_ratio = ratio;
                    }
                }
            }
            Err(Error::Stalled(_)) => s.stalls += 1,
            Err(e) => s.errors.push(e.to_string()),
        }
    }
    s
}

fn descent(report: &mut Report) {
    let start = Instant::now();
    let runs: Vec<(RingTag, DescentSummary)> =
        RingTag::ALL.iter().map(|&t| (t, descent_runs(t))).collect();
    let (fast, time) = within(BUDGET_ROUND_TRIP, start);

    let round_trip_ok = runs
        .iter()
        .all(|(_, s)| s.mismatches == 0 && s.stalls == 0 && s.errors.is_empty());
    let detail: Vec<String> = runs
        .iter()
        .map(|(t, s)| {
            format!(
                "d={t}: {}/{} exact",
                s.samples - s.mismatches - s.stalls - s.errors.len() as u64,
                s.samples
            )
        })
        .collect();
    report.record(
        2,
        "round trip",
        round_trip_ok && fast,
        format!("{}, {time}", detail.join(", ")),
    );
    for (t, s) in &runs {
        for e in s.errors.iter().take(3) {
            println!("    d={t}: {e}");
        }
    }

    let descent_ok = runs
        .iter()
        .all(|(_, s)| s.non_decreasing == 0 && s.stalls == 0);
    let detail: Vec<String> = runs
        .iter()
        .map(|(t, s)| {
            format!(
                "d={t}: {} steps, {} non-decreasing, {} stalls",
                s.steps, s.non_decreasing, s.stalls
            )
        })
        .collect();
    report.record(
        3,
        "strict descent at radius 2",
        descent_ok,
        detail.join(", "),
    );

    let one = BigRational::one();
    let ratio_ok = runs.iter().all(|(_, s)| s.max_ratio < one);
    let detail: Vec<String> = runs
        .iter()
        .map(|(t, s)| {
            let mean = if s.steps == 0 {
                0.0
            } else {
                s.ratio_sum / s.steps as f64
            };
            format!(
                "d={t}: max {} ({:.4}), mean {mean:.4}, claimed {}, below claim {}/{}",
                s.max_ratio,
                s.max_ratio.to_f64().unwrap(),
                contraction_bound(*t),
                s.meeting_bound,
                s.steps
            )
        })
        .collect();
    report.record(4, "contraction ratios below 1", ratio_ok, detail.join("; "));
}

fn stabilizer_factorization(report: &mut Report) {
    let start = Instant::now();
    let mut failures = 0u64;
    let mut vertical_ok = true;
    for tag in RingTag::ALL {
        failures += map_indexed_parallel(STABILIZER_SAMPLES, |i| {
            let params = random_stabilizer_params(tag, &mut sample_rng(SEED + 5, i));
            let p = params.reconstruct().unwrap();
            match factor_stabilizer(&p, tag) {
                Ok(w) => w.evaluate() != p,
                Err(_) => true,
            }
        })
        .into_iter()
        .filter(|&bad| bad)
        .count() as u64;
        let v = translation_matrix(&HeisPoint::from_ints(0, 0, 2, tag));
        vertical_ok &= vertical_word(tag).evaluate() == v;
    }
    let (fast, time) = within(BUDGET_STABILIZER, start);
    report.record(
        5,
        "stabilizer factorization",
        failures == 0 && vertical_ok && fast,
        format!(
            "{} parameter sets, {failures} failures, vertical identity {}, {time}",
            3 * STABILIZER_SAMPLES,
            if vertical_ok { "exact" } else { "BROKEN" }
        ),
    );
}

fn random_heis_point(tag: RingTag, rng: &mut impl rand_core::RngCore) -> HeisPoint {
    let mut frac = |lo: i64, hi: i64| {
        let n = between(rng, lo, hi);
        let d = between(rng, 1, 6);
        BigRational::new(BigInt::from(n), BigInt::from(d))
    };
    let z = QuadRat::from_omega_basis(frac(-30, 30), frac(-30, 30), tag);
    HeisPoint::new(z, frac(-100, 100))
}

fn heisenberg_homomorphism(report: &mut Report) {
    let start = Instant::now();
    let mut failures = 0;
    for tag in RingTag::ALL {
        failures += map_indexed_parallel(HEISENBERG_PAIRS, |i| {
            let mut rng = sample_rng(SEED + 6, i);
            let p = random_heis_point(tag, &mut rng);
            let q = random_heis_point(tag, &mut rng);
            translation_matrix(&p.compose(&q).unwrap())
                != &translation_matrix(&p) * &translation_matrix(&q)
        })
        .into_iter()
        .filter(|&bad| bad)
        .count();
    }
    let (fast, time) = within(BUDGET_HEISENBERG, start);
    report.record(
        6,
        "Heisenberg homomorphism",
        failures == 0 && fast,
        format!(
            "{} pairs, {failures} failures, {time}",
            3 * HEISENBERG_PAIRS
        ),
    );
}

fn parity_consistency(report: &mut Report) {
    let mut forward_bad = 0;
    let mut backward_bad = 0;
    for tag in RingTag::ALL {
        for i in 0..PARITY_CASES {
            let mut rng = sample_rng(SEED + 7, i);
            let w = random_stabilizer_word(tag, 1 + (i % 20) as usize, &mut rng);
            let ok = langlands_decompose(&w.evaluate())
                .map(|p| params_valid(&p, tag))
                .unwrap_or(false);
            if !ok {
                forward_bad += 1;
            }

            let invalid = random_invalid_params(tag, &mut rng);
            let m = invalid.reconstruct().unwrap();
            if params_valid(&invalid, tag) || m.get(0, 2).is_integral() {
                backward_bad += 1;
            }
        }
    }
    report.record(
        7,
        "parity consistency",
        forward_bad == 0 && backward_bad == 0,
        format!(
            "{} stabilizer words ({forward_bad} invalid), {} parity violations ({backward_bad} with integral (1,3) entry)",
            3 * PARITY_CASES,
            3 * PARITY_CASES
        ),
    );
}

fn relations(report: &mut Report) {
    let checks = check_relations(RingTag::D3).expect("relations apply to d = 3");
    let failed: Vec<&str> = checks
        .iter()
        .filter(|c| !c.holds())
        .map(|c| c.name)
        .collect();
    for c in checks.iter().filter(|c| !c.holds()) {
        println!("    {} evaluates to\n{}", c.name, c.matrix);
    }
    report.record(
        8,
        "presentation relators (d=3)",
        failed.is_empty(),
        format!("{} relators, failing {failed:?}", checks.len()),
    );
}

fn boundary_consistency(report: &mut Report) {
    let mut bad = 0;
    let mut stabilizing = 0;
    for tag in RingTag::ALL {
        for i in 0..BOUNDARY_SAMPLES {
            let mut rng = sample_rng(SEED + 9, i);
            let w = if i % 2 == 0 {
                random_word_up_to(tag, MAX_WORD_LENGTH, &mut rng)
            } else {
                random_stabilizer_word(tag, 1 + (i % 15) as usize, &mut rng)
            };
            let g = w.evaluate();
            let fixes = g.fixes_infinity();
            if fixes {
                stabilizing += 1;
            }
            let image = g.boundary_image().unwrap();
            if fixes != (image == BoundaryPoint::Infinity) {
                bad += 1;
            }
            if !image.on_boundary() {
                bad += 1;
            }
            if g.is_unitary() && g.get(2, 0).is_zero() && !g.get(1, 0).is_zero() {
                bad += 1;
            }
        }
    }
    report.record(
        9,
        "boundary consistency",
        bad == 0,
        format!(
            "{} elements ({stabilizing} fixing q∞), {bad} violations",
            3 * BOUNDARY_SAMPLES
        ),
    );
}

fn main() -> ExitCode {
    let mut report = Report { failures: 0 };
    generator_validity(&mut report);
    descent(&mut report);
    stabilizer_factorization(&mut report);
    heisenberg_homomorphism(&mut report);
    parity_consistency(&mut report);
    relations(&mut report);
    boundary_consistency(&mut report);
    if report.failures == 0 {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {} criteria failed", report.failures);
        ExitCode::FAILURE
    }
}
