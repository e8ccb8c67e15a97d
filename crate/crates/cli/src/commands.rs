//! Subcommand implementations. Each returns an [`Outcome`] instead of
//! printing, so the binary and the tests share one code path.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use log::{debug, info};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use picard_core::batch::map_indexed_parallel;
use picard_core::random::{random_word, sample_rng};
use picard_core::relations::check_relations;
use picard_core::{
    contraction_bound, decompose, Error, Matrix3, QuadRat, ReductionConfig, RingTag, Word,
};
use serde_json::json;

use crate::format::{parse_matrix, parse_word, serialize_matrix, serialize_word};

pub const EXIT_OK: i32 = 0;
pub const EXIT_SEMANTIC: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_STALL: i32 = 3;

/// Exit status plus captured output streams.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: impl Into<String>) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr: stderr.into(),
        }
    }
}

fn ring(d: i64) -> Result<RingTag, Outcome> {
    RingTag::new(d).map_err(|e| Outcome::fail(EXIT_PARSE, format!("error: {e}\n")))
}

fn read(path: &Path) -> Result<String, Outcome> {
    fs::read_to_string(path)
        .map_err(|e| Outcome::fail(EXIT_PARSE, format!("error: {}: {e}\n", path.display())))
}

fn write(path: &Path, contents: &str) -> Result<(), Outcome> {
    fs::write(path, contents)
        .map_err(|e| Outcome::fail(EXIT_SEMANTIC, format!("error: {}: {e}\n", path.display())))
}

fn check_d(found: RingTag, expected: Option<i64>, path: &Path) -> Result<(), Outcome> {
    match expected {
        Some(d) if d != found.d() as i64 => Err(Outcome::fail(
            EXIT_PARSE,
            format!(
                "error: {}: file has d = {}, but --d {d} was given\n",
                path.display(),
                found
            ),
        )),
        _ => Ok(()),
    }
}

fn load_matrix(path: &Path, d: Option<i64>) -> Result<Matrix3, Outcome> {
    let m = parse_matrix(&read(path)?)
        .map_err(|e| Outcome::fail(EXIT_PARSE, format!("error: {}: {e}\n", path.display())))?;
    check_d(m.tag(), d, path)?;
    Ok(m)
}

fn load_word(path: &Path, d: Option<i64>) -> Result<Word, Outcome> {
    let w = parse_word(&read(path)?)
        .map_err(|e| Outcome::fail(EXIT_PARSE, format!("error: {}: {e}\n", path.display())))?;
    check_d(w.tag(), d, path)?;
    Ok(w)
}

fn omega_form(x: &QuadRat) -> String {
    let (a, b) = x.omega_coords();
    format!("{a} + ({b})ω")
}

/// Every reason `m` is not in the Picard group, one line each.
fn violations(m: &Matrix3) -> String {
    let mut out = String::new();
    for r in 0..3 {
        for c in 0..3 {
            let x = m.get(r, c);
            if !x.is_integral() {
                writeln!(
                    out,
                    "non-integral entry ({},{}): {}",
                    r + 1,
                    c + 1,
                    omega_form(x)
                )
                .unwrap();
            }
        }
    }
    let defect = m.form_defect();
    for r in 0..3 {
        for c in 0..3 {
            let x = defect.get(r, c);
            if !x.is_zero() {
                writeln!(
                    out,
                    "form defect G*JG - J at ({},{}): {}",
                    r + 1,
                    c + 1,
                    omega_form(x)
                )
                .unwrap();
            }
        }
    }
    out
}

pub fn verify(input: &Path, d: Option<i64>) -> Outcome {
    let m = match load_matrix(input, d) {
        Ok(m) => m,
        Err(o) => return o,
    };
    if m.is_picard() {
        Outcome::ok("PICARD\n".into())
    } else {
        Outcome {
            code: EXIT_SEMANTIC,
            stdout: format!("NOT PICARD\n{}", violations(&m)),
            stderr: String::new(),
        }
    }
}

fn ratio_decimal(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn decompose_file(input: &Path, d: Option<i64>, output: Option<&Path>, radius: u32) -> Outcome {
    let m = match load_matrix(input, d) {
        Ok(m) => m,
        Err(o) => return o,
    };
    if !m.is_picard() {
        return Outcome::fail(
            EXIT_SEMANTIC,
            format!("error: input is not a Picard element\n{}", violations(&m)),
        );
    }
    let tag = m.tag();
    let trace = match decompose(&m, tag, &ReductionConfig::with_radius(radius)) {
        Ok(t) => t,
        Err(Error::Stalled(report)) => {
            return Outcome::fail(EXIT_STALL, format!("error: reduction stalled\n{report}"))
        }
        Err(e) => return Outcome::fail(EXIT_SEMANTIC, format!("error: {e}\n")),
    };
    if !trace.full_word.evaluate().projective_eq(&m) {
        return Outcome::fail(
            EXIT_SEMANTIC,
            "error: decomposition failed its round-trip check\n",
        );
    }

    let mut summary = format!("steps: {}\n", trace.steps.len());
    for (i, s) in trace.steps.iter().enumerate() {
        let ratio = s.ratio();
        writeln!(
            summary,
            "step {}: N{} |g31|^2 {} -> {} ratio {} ({:.6})",
            i + 1,
            s.chosen,
            s.before_norm,
            s.after_norm,
            ratio,
            ratio_decimal(&ratio)
        )
        .unwrap();
    }
    writeln!(summary, "word: {}", trace.full_word).unwrap();

    let file = serialize_word(&trace.full_word);
    match output {
        Some(path) => {
            if let Err(o) = write(path, &file) {
                return o;
            }
            Outcome::ok(summary)
        }
        None => Outcome {
            code: EXIT_OK,
            stdout: file,
            stderr: summary,
        },
    }
}

pub fn compose(input: &Path, d: Option<i64>, output: Option<&Path>) -> Outcome {
    let w = match load_word(input, d) {
        Ok(w) => w,
        Err(o) => return o,
    };
    let text = serialize_matrix(&w.evaluate());
    match output {
        Some(path) => match write(path, &text) {
            Ok(()) => Outcome::ok(String::new()),
            Err(o) => o,
        },
        None => Outcome::ok(text),
    }
}

pub fn random_file_name(index: u64) -> String {
    format!("matrix_{index:06}.json")
}

pub fn random(d: i64, length: usize, seed: u64, count: u64, out_dir: &Path) -> Outcome {
    let tag = match ring(d) {
        Ok(t) => t,
        Err(o) => return o,
    };
    if length == 0 {
        return Outcome::fail(EXIT_PARSE, "error: --length must be at least 1\n");
    }
    if let Err(e) = fs::create_dir_all(out_dir) {
        return Outcome::fail(
            EXIT_SEMANTIC,
            format!("error: {}: {e}\n", out_dir.display()),
        );
    }
    let texts = map_indexed_parallel(count, |i| {
        let w = random_word(tag, length, &mut sample_rng(seed, i));
        serialize_matrix(&w.evaluate())
    });
    for (i, text) in texts.iter().enumerate() {
        let path: PathBuf = out_dir.join(random_file_name(i as u64));
        if let Err(o) = write(&path, text) {
            return o;
        }
    }
    info!("wrote {count} matrices to {}", out_dir.display());
    Outcome::ok(format!("wrote {count} files to {}\n", out_dir.display()))
}

pub fn relations(d: i64) -> Outcome {
    let tag = match ring(d) {
        Ok(t) => t,
        Err(o) => return o,
    };
    let Some(checks) = check_relations(tag) else {
        return Outcome::ok(format!("d = {tag}: not applicable\n"));
    };
    let mut out = String::new();
    let mut all = true;
    for c in &checks {
        match &c.scalar {
            Some(u) => writeln!(out, "{}: identity (scalar {u})", c.name).unwrap(),
            None => {
                all = false;
                writeln!(out, "{}: NOT identity\n{}", c.name, c.matrix).unwrap();
            }
        }
    }
    Outcome {
        code: if all { EXIT_OK } else { EXIT_SEMANTIC },
        stdout: out,
        stderr: String::new(),
    }
}

enum Sample {
    Done(Vec<BigRational>),
    Stalled,
    Failed(String),
}

const BINS: usize = 10;

/// Aggregate contraction statistics for one `stats` run.
#[derive(Clone, Debug, PartialEq)]
pub struct Stats {
    pub tag: RingTag,
    pub samples: u64,
    pub decomposed: u64,
    pub stalls: u64,
    pub errors: u64,
    pub steps: u64,
    pub max_ratio: Option<BigRational>,
    pub ratio_sum: f64,
    pub meeting_bound: u64,
    pub histogram: [u64; BINS],
}

impl Stats {
    pub fn mean_steps(&self) -> f64 {
        if self.decomposed == 0 {
            0.0
        } else {
            self.steps as f64 / self.decomposed as f64
        }
    }

    pub fn mean_ratio(&self) -> f64 {
        if self.steps == 0 {
            0.0
        } else {
            self.ratio_sum / self.steps as f64
        }
    }

    pub fn fraction_meeting_bound(&self) -> f64 {
        if self.steps == 0 {
            0.0
        } else {
            self.meeting_bound as f64 / self.steps as f64
        }
    }
}

fn bin(ratio: &BigRational) -> usize {
    let scaled = (ratio * BigRational::from_integer(BigInt::from(BINS))).floor();
    scaled.to_integer().to_usize().unwrap_or(BINS).min(BINS - 1)
}

pub fn collect_stats(tag: RingTag, samples: u64, length: usize, seed: u64, radius: u32) -> Stats {
    let config = ReductionConfig::with_radius(radius);
    let results = map_indexed_parallel(samples, |i| {
        let w = random_word(tag, length, &mut sample_rng(seed, i));
        match decompose(&w.evaluate(), tag, &config) {
            Ok(t) => Sample::Done(t.steps.iter().map(|s| s.ratio()).collect()),
            Err(Error::Stalled(_)) => Sample::Stalled,
            Err(e) => Sample::Failed(format!("sample {i} ({w}): {e}")),
        }
    });
    let bound = contraction_bound(tag);
    let mut stats = Stats {
        tag,
        samples,
        decomposed: 0,
        stalls: 0,
        errors: 0,
        steps: 0,
        max_ratio: None,
        ratio_sum: 0.0,
        meeting_bound: 0,
        histogram: [0; BINS],
    };
    for r in results {
        match r {
            Sample::Done(ratios) => {
                stats.decomposed += 1;
                for ratio in ratios {
                    stats.steps += 1;
                    stats.ratio_sum += ratio_decimal(&ratio);
                    if ratio < bound {
                        stats.meeting_bound += 1;
                    }
                    stats.histogram[bin(&ratio)] += 1;
                    if stats.max_ratio.as_ref().is_none_or(|m| &ratio > m) {
                        stats.max_ratio = Some(ratio);
                    }
                }
            }
            Sample::Stalled => stats.stalls += 1,
            Sample::Failed(msg) => {
                debug!("{msg}");
                stats.errors += 1;
            }
        }
    }
    stats
}

fn bin_edges(i: usize) -> (BigRational, BigRational) {
    let edge = |n: usize| BigRational::new(BigInt::from(n), BigInt::from(BINS));
    (edge(i), edge(i + 1))
}

fn render_text(s: &Stats, length: usize, seed: u64, radius: u32) -> String {
    let bound = contraction_bound(s.tag);
    let mut out = String::new();
    writeln!(
        out,
        "d = {}, samples = {}, length = {length}, seed = {seed}, radius = {radius}",
        s.tag, s.samples
    )
    .unwrap();
    writeln!(out, "decomposed      {}", s.decomposed).unwrap();
    writeln!(out, "stalls          {}", s.stalls).unwrap();
    writeln!(out, "errors          {}", s.errors).unwrap();
    writeln!(out, "steps           {}", s.steps).unwrap();
    writeln!(out, "mean steps      {:.6}", s.mean_steps()).unwrap();
    match &s.max_ratio {
        Some(m) => writeln!(out, "max ratio       {m} ({:.6})", ratio_decimal(m)).unwrap(),
        None => writeln!(out, "max ratio       -").unwrap(),
    }
    writeln!(out, "mean ratio      {:.6}", s.mean_ratio()).unwrap();
    writeln!(
        out,
        "below {bound:<9} {} of {} ({:.6})",
        s.meeting_bound,
        s.steps,
        s.fraction_meeting_bound()
    )
    .unwrap();
    writeln!(out, "histogram of after/before:").unwrap();
    for (i, count) in s.histogram.iter().enumerate() {
        let (lo, hi) = bin_edges(i);
        writeln!(out, "  [{lo}, {hi})\t{count}").unwrap();
    }
    out
}

fn render_json(s: &Stats, length: usize, seed: u64, radius: u32) -> String {
    let histogram: Vec<_> = s
        .histogram
        .iter()
        .enumerate()
        .map(|(i, count)| {
            let (lo, hi) = bin_edges(i);
            json!({"lo": lo.to_string(), "hi": hi.to_string(), "count": count})
        })
        .collect();
    let doc = json!({
        "d": s.tag.d(),
        "samples": s.samples,
        "length": length,
        "seed": seed,
        "radius": radius,
        "decomposed": s.decomposed,
        "stalls": s.stalls,
        "errors": s.errors,
        "steps": s.steps,
        "mean_steps": s.mean_steps(),
        "max_ratio": s.max_ratio.as_ref().map(|m| m.to_string()),
        "mean_ratio": s.mean_ratio(),
        "bound": contraction_bound(s.tag).to_string(),
        "meeting_bound": s.meeting_bound,
        "fraction_meeting_bound": s.fraction_meeting_bound(),
        "histogram": histogram,
    });
    let mut text = serde_json::to_string_pretty(&doc).expect("serializable");
    text.push('\n');
    text
}

pub fn stats(
    d: i64,
    samples: u64,
    length: usize,
    seed: u64,
    radius: u32,
    output: Option<&Path>,
) -> Outcome {
    let tag = match ring(d) {
        Ok(t) => t,
        Err(o) => return o,
    };
    if samples == 0 || length == 0 {
        return Outcome::fail(
            EXIT_PARSE,
            "error: --samples and --length must be at least 1\n",
        );
    }
    let s = collect_stats(tag, samples, length, seed, radius);
    if let Some(path) = output {
        if let Err(o) = write(path, &render_json(&s, length, seed, radius)) {
            return o;
        }
    }
    let mut o = Outcome::ok(render_text(&s, length, seed, radius));
    if s.errors > 0 {
        o.code = EXIT_SEMANTIC;
        o.stderr = format!("error: {} samples failed to decompose\n", s.errors);
    }
    o
}
