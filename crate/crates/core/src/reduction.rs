//! Descent to the stabilizer of `q∞`.
//!
//! Each step left-multiplies by `R·N_(z,t)` with `N_(z,t)` an integral
//! translation, chosen so that the integer `|g31|²` strictly decreases. The
//! new corner entry is `g31·(I1 + i·I2)` where
//! `I1 = -|g21/g31 + z|²/2` and `I2 = Im(g11/g31) - Im(g21/g31·conj z) + t/2`.
//! Once `g31 = 0` the remainder is factored inside `Γ∞`.

use std::fmt;

use log::{debug, trace};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::group::Matrix3;
use crate::heisenberg::HeisPoint;
use crate::intmat::IntMatrix;
use crate::ring::{nearest_candidates, parity, QuadInt, QuadRat, RingTag};
use crate::stabilizer::{factor_stabilizer, translation_word};
use crate::word::{evaluate_word, GeneratorId, Word};

/// Candidate search window.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReductionConfig {
    /// Half-width of the `z` window around `-g21/g31`.
    pub radius: u32,
    /// Radius of the single retry when nothing in the first window decreases.
    pub expanded_radius: u32,
}

impl Default for ReductionConfig {
    fn default() -> Self {
        ReductionConfig {
            radius: 2,
            expanded_radius: 4,
        }
    }
}

impl ReductionConfig {
    pub fn with_radius(radius: u32) -> Self {
        ReductionConfig {
            radius,
            expanded_radius: radius.max(4),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    pub chosen: HeisPoint,
    pub i1: BigRational,
    /// `I2 = i2_coord·√d`.
    pub i2_coord: BigRational,
    pub before_norm: BigInt,
    pub after_norm: BigInt,
}

impl ReductionStep {
    pub fn ratio(&self) -> BigRational {
        BigRational::new(self.after_norm.clone(), self.before_norm.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
    pub tail_word: Word,
    pub full_word: Word,
}

/// One row of a stall diagnostic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub point: HeisPoint,
    pub after_norm: BigInt,
}

/// Everything needed to reproduce a stalled step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StallReport {
    pub matrix: Matrix3,
    pub before_norm: BigInt,
    pub radius: u32,
    pub candidates: Vec<Candidate>,
}

impl fmt::Display for StallReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "stalled matrix (d = {}):", self.matrix.tag())?;
        write!(f, "{}", self.matrix)?;
        writeln!(
            f,
            "|g31|^2 = {}, window radius {}",
            self.before_norm, self.radius
        )?;
        writeln!(f, "candidates (point, |g31'|^2):")?;
        for c in &self.candidates {
            writeln!(f, "  {}  {}", c.point, c.after_norm)?;
        }
        Ok(())
    }
}

/// The per-step contraction constant claimed for each ring: `1/4`, `37/64`,
/// `15/16`.
pub fn contraction_bound(tag: RingTag) -> BigRational {
    let (n, d) = match tag {
        RingTag::D3 => (1, 4),
        RingTag::D7 => (37, 64),
        RingTag::D11 => (15, 16),
    };
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

struct StepContext {
    w: QuadRat,
    x1_im: BigRational,
    g11: QuadInt,
    g21: QuadInt,
    g31: QuadInt,
    before: BigInt,
}

impl StepContext {
    fn new(g: &IntMatrix) -> Result<Self> {
        let g31 = g.get(2, 0).clone();
        let g31r = g31.to_rat();
        let w = g.get(1, 0).to_rat().checked_div(&g31r)?;
        let x1 = g.get(0, 0).to_rat().checked_div(&g31r)?;
        Ok(StepContext {
            w,
            x1_im: x1.im().clone(),
            g11: g.get(0, 0).clone(),
            g21: g.get(1, 0).clone(),
            before: g31.norm(),
            g31,
        })
    }

    /// `Im(g11/g31) - Im(g21/g31·conj z)`, as a coefficient of `√d`.
    fn i2_base(&self, z: &QuadRat) -> BigRational {
        let cross = &self.w * &z.conj();
        &self.x1_im - cross.im()
    }

    /// The corner entry `g11 - g21·conj z + g31·(-|z|² + it)/2` of `R·N·G`.
    fn new_corner(&self, z: &QuadInt, corner: &QuadInt) -> QuadInt {
        &(&self.g11 - &(&self.g21 * &z.conj())) + &(&self.g31 * corner)
    }

    /// All candidates of the window, in enumeration order.
    fn candidates(&self, radius: u32) -> Vec<(HeisPoint, QuadInt, BigInt)> {
        let tag = self.w.tag();
        let mut out = Vec::new();
        for z in nearest_candidates(&-&self.w, radius) {
            let zr = z.to_rat();
            let norm = z.norm();
            let k_star = -(self.i2_base(&zr) * BigInt::from(2));
            let mut k_lo = k_star.floor().to_integer();
            if parity(&k_lo) != parity(&norm) {
                k_lo -= 1;
            }
            for k in [k_lo.clone(), k_lo + 2] {
                let corner = QuadInt::new((&k - &norm) / 2, k.clone(), tag);
                let after = self.new_corner(&z, &corner).norm();
                let point = HeisPoint::new(zr.clone(), BigRational::from_integer(k));
                out.push((point, corner, after));
            }
        }
        out
    }
}

fn step_matrix(point: &HeisPoint, corner: &QuadInt) -> IntMatrix {
    // R·N_(z,t) = [[0, 0, 1], [0, -1, -z], [1, -conj z, corner]]
    let tag = point.tag();
    let z = point.z.to_quad_int().expect("integral candidate");
    IntMatrix::from_fn(tag, |r, c| match (r, c) {
        (0, 2) | (2, 0) => QuadInt::one(tag),
        (1, 1) => -&QuadInt::one(tag),
        (1, 2) => -&z,
        (2, 1) => -&z.conj(),
        (2, 2) => corner.clone(),
        _ => QuadInt::zero(tag),
    })
}

fn reduce_step_int(
    g: &IntMatrix,
    tag: RingTag,
    config: &ReductionConfig,
) -> Result<(ReductionStep, IntMatrix)> {
    let ctx = StepContext::new(g)?;
    let mut radii = vec![config.radius];
    if config.expanded_radius > config.radius {
        radii.push(config.expanded_radius);
    }
    let mut last = Vec::new();
    for &radius in &radii {
        let cands = ctx.candidates(radius);
        let best = cands.iter().filter(|c| c.2 < ctx.before).fold(
            None::<&(HeisPoint, QuadInt, BigInt)>,
            |acc, c| match acc {
                Some(b) if b.2 <= c.2 => Some(b),
                _ => Some(c),
            },
        );
        if let Some((point, corner, after)) = best {
            let zr = &point.z;
            let half = BigRational::new(BigInt::one(), BigInt::from(2));
            let i1 = -((&ctx.w + zr).norm() * &half);
            let i2_coord = ctx.i2_base(zr) + &point.k * &half;
            let next = step_matrix(point, corner).mul(g);
            debug!(
                "d={} step: |g31|^2 {} -> {} via {} (radius {})",
                tag, ctx.before, after, point, radius
            );
            let step = ReductionStep {
                chosen: point.clone(),
                i1,
                i2_coord,
                before_norm: ctx.before.clone(),
                after_norm: after.clone(),
            };
            return Ok((step, next));
        }
        trace!("d={} radius {} gave no decrease", tag, radius);
        last = cands;
    }
    Err(Error::Stalled(Box::new(StallReport {
        matrix: g.to_matrix(),
        before_norm: ctx.before,
        radius: *radii.last().expect("non-empty"),
        candidates: last
            .into_iter()
            .map(|(point, _, after_norm)| Candidate { point, after_norm })
            .collect(),
    })))
}

fn integral_picard(g: &Matrix3, tag: RingTag) -> Result<IntMatrix> {
    if g.tag() != tag {
        return Err(Error::TagMismatch {
            left: tag.d(),
            right: g.tag().d(),
        });
    }
    let int = IntMatrix::from_matrix(g)
        .ok_or_else(|| Error::Precondition("matrix has entries outside O_d".into()))?;
    if !g.is_unitary() {
        return Err(Error::Precondition(
            "matrix does not preserve the Hermitian form".into(),
        ));
    }
    Ok(int)
}

/// One descent step: returns the step record and `G1 = R·N_(z,t)·G`.
pub fn reduce_step(
    g: &Matrix3,
    tag: RingTag,
    config: &ReductionConfig,
) -> Result<(ReductionStep, Matrix3)> {
    let int = integral_picard(g, tag)?;
    if g.fixes_infinity() {
        return Err(Error::Precondition("g31 = 0; nothing to reduce".into()));
    }
    let (step, next) = reduce_step_int(&int, tag, config)?;
    Ok((step, next.to_matrix()))
}

/// Decomposes an element of `U(2,1; O_d)` into a word in `T1, T2, M, R`.
///
/// The word is verified to evaluate to the input up to a unit scalar.
pub fn decompose(g: &Matrix3, tag: RingTag, config: &ReductionConfig) -> Result<ReductionTrace> {
    let mut current = integral_picard(g, tag)?;
    let mut steps = Vec::new();
    while !current.get(2, 0).is_zero() {
        let (step, next) = reduce_step_int(&current, tag, config)?;
        steps.push(step);
        current = next;
    }
    let tail_word = factor_stabilizer(&current.to_matrix(), tag)?;

    // G = N_{p1}^{-1}·R·N_{p2}^{-1}·R ⋯ R·G_n
    let mut full_word = Word::empty(tag);
    for step in &steps {
        full_word.append(&translation_word(&step.chosen.inverse())?);
        full_word.push(GeneratorId::R, BigInt::one());
    }
    full_word.append(&tail_word);

    if !evaluate_word(&full_word).projective_eq(g) {
        return Err(Error::Verification(format!(
            "decomposition word {full_word} does not evaluate to its input"
        )));
    }
    Ok(ReductionTrace {
        steps,
        tail_word,
        full_word,
    })
}

/// Per-step contraction: the exact ratio `after/before` and whether it is
/// below the ring's claimed constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contraction {
    pub ratio: BigRational,
    pub meets_bound: bool,
}

pub fn contraction_report(trace: &ReductionTrace, tag: RingTag) -> Vec<Contraction> {
    let bound = contraction_bound(tag);
    trace
        .steps
        .iter()
        .map(|s| {
            let ratio = s.ratio();
            let meets_bound = ratio < bound;
            Contraction { ratio, meets_bound }
        })
        .collect()
}

/// Convenience: `true` when every step has `after < before`.
pub fn strictly_descending(trace: &ReductionTrace) -> bool {
    trace.steps.iter().all(|s| s.after_norm < s.before_norm)
        && trace
            .steps
            .windows(2)
            .all(|w| w[1].before_norm == w[0].after_norm)
        && trace.steps.last().is_none_or(|s| s.after_norm.is_zero())
}
