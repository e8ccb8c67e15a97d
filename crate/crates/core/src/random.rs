//! Seeded generation of random words and stabilizer parameters.
//!
//! Every sample draws from its own ChaCha8 stream: the generator is seeded
//! with `seed_from_u64(seed)` and switched to stream `index`, so sample `i`
//! is the same no matter how samples are scheduled across threads. Uniform
//! choices among `n` options take `next_u64() % n`.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::ring::{parity, units, QuadInt, RingTag};
use crate::stabilizer::LanglandsParams;
use crate::word::{GeneratorId, Word};

pub const EXPONENTS: [i64; 6] = [-3, -2, -1, 1, 2, 3];

/// Generator for sample `index` under `seed`.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

pub fn below(rng: &mut impl RngCore, n: u64) -> u64 {
    rng.next_u64() % n
}

/// Integer uniform on `lo..=hi`.
pub fn between(rng: &mut impl RngCore, lo: i64, hi: i64) -> i64 {
    lo + below(rng, (hi - lo + 1) as u64) as i64
}

fn draw_letters(
    tag: RingTag,
    length: usize,
    alphabet: &[GeneratorId],
    rng: &mut impl RngCore,
) -> Word {
    let mut w = Word::empty(tag);
    for _ in 0..length {
        let g = alphabet[below(rng, alphabet.len() as u64) as usize];
        let e = EXPONENTS[below(rng, EXPONENTS.len() as u64) as usize];
        w.push(g, BigInt::from(e));
    }
    w
}

/// `length` uniformly drawn letters over `T1, T2, M, R` with exponents in
/// `[-3, 3] \ {0}`, merged into normal form (so the result may be shorter).
pub fn random_word(tag: RingTag, length: usize, rng: &mut impl RngCore) -> Word {
    draw_letters(tag, length, &GeneratorId::ALL, rng)
}

/// Like [`random_word`] with the length itself uniform on `1..=max_length`.
pub fn random_word_up_to(tag: RingTag, max_length: usize, rng: &mut impl RngCore) -> Word {
    let length = 1 + below(rng, max_length as u64) as usize;
    random_word(tag, length, rng)
}

/// Random word over the stabilizer generators `T1, T2, M`.
pub fn random_stabilizer_word(tag: RingTag, length: usize, rng: &mut impl RngCore) -> Word {
    draw_letters(
        tag,
        length,
        &[GeneratorId::T1, GeneratorId::T2, GeneratorId::M],
        rng,
    )
}

/// Random integral stabilizer parameters: `z = a + b·ω` with `a, b` in
/// `[-20, 20]`, `k` in `[-40, 40]` moved onto the parity of `|z|²`, and a
/// uniformly chosen unit `β`.
pub fn random_stabilizer_params(tag: RingTag, rng: &mut impl RngCore) -> LanglandsParams {
    let z = QuadInt::new(between(rng, -20, 20), between(rng, -20, 20), tag);
    let mut k = BigInt::from(between(rng, -40, 40));
    if parity(&k) != parity(&z.norm()) {
        k += 1;
    }
    let us = units(tag);
    let beta = us[below(rng, us.len() as u64) as usize].clone();
    LanglandsParams::translation_rotation(z.to_rat(), BigRational::from_integer(k), beta)
}

/// Like [`random_stabilizer_params`] but with `k` of the wrong parity.
pub fn random_invalid_params(tag: RingTag, rng: &mut impl RngCore) -> LanglandsParams {
    let mut p = random_stabilizer_params(tag, rng);
    p.k += BigRational::from_integer(BigInt::from(1));
    p
}
