//! Words in the four generators `T1, T2, M, R` of `PU(2,1; O_d)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::group::Matrix3;
use crate::heisenberg::{involution, rotation_matrix, translation_matrix, HeisPoint};
use crate::intmat::IntMatrix;
use crate::ring::{QuadRat, RingTag};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorId {
    /// `N_(1, √d)`.
    T1,
    /// `N_(ω3, √3)`, `N_(ω7, 0)` or `N_(ω11, √11)`.
    T2,
    /// `M_{-ω3}` for `d = 3`, `M_{-1}` otherwise.
    M,
    R,
}

impl GeneratorId {
    pub const ALL: [GeneratorId; 4] = [
        GeneratorId::T1,
        GeneratorId::T2,
        GeneratorId::M,
        GeneratorId::R,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GeneratorId::T1 => "T1",
            GeneratorId::T2 => "T2",
            GeneratorId::M => "M",
            GeneratorId::R => "R",
        }
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GeneratorId {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "T1" => Ok(GeneratorId::T1),
            "T2" => Ok(GeneratorId::T2),
            "M" => Ok(GeneratorId::M),
            "R" => Ok(GeneratorId::R),
            other => Err(format!("unknown generator {other:?}")),
        }
    }
}

/// Heisenberg coordinates of the translation generators.
pub fn translation_generator(id: GeneratorId, tag: RingTag) -> Option<HeisPoint> {
    let k = |n: i64| num_rational::BigRational::from_integer(BigInt::from(n));
    match id {
        GeneratorId::T1 => Some(HeisPoint::from_ints(1, 0, 1, tag)),
        GeneratorId::T2 => {
            let vertical = if tag == RingTag::D7 { 0 } else { 1 };
            Some(HeisPoint::new(QuadRat::omega(tag), k(vertical)))
        }
        _ => None,
    }
}

/// The rotation parameter of `M`.
pub fn rotation_generator(tag: RingTag) -> QuadRat {
    match tag {
        RingTag::D3 => -QuadRat::omega(tag),
        _ => -QuadRat::one(tag),
    }
}

/// Multiplicative order of `M`.
pub fn rotation_order(tag: RingTag) -> u32 {
    match tag {
        RingTag::D3 => 6,
        _ => 2,
    }
}

/// Power of `M` equal to `M_{-1}`.
pub fn half_turn_exponent(tag: RingTag) -> i64 {
    match tag {
        RingTag::D3 => 3,
        _ => 1,
    }
}

pub fn generator_matrix(id: GeneratorId, tag: RingTag) -> Matrix3 {
    match id {
        GeneratorId::T1 | GeneratorId::T2 => {
            translation_matrix(&translation_generator(id, tag).expect("translation generator"))
        }
        GeneratorId::M => rotation_matrix(&rotation_generator(tag)).expect("unimodular"),
        GeneratorId::R => involution(tag),
    }
}

/// A word `g1^e1 · g2^e2 · …`, kept normalized: no zero exponents and no two
/// adjacent letters with the same generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<(GeneratorId, BigInt)>,
    tag: RingTag,
}

impl Word {
    pub fn empty(tag: RingTag) -> Self {
        Word {
            letters: Vec::new(),
            tag,
        }
    }

    pub fn from_letters<I, E>(tag: RingTag, letters: I) -> Self
    where
        I: IntoIterator<Item = (GeneratorId, E)>,
        E: Into<BigInt>,
    {
        let mut w = Word::empty(tag);
        for (g, e) in letters {
            w.push(g, e.into());
        }
        w
    }

    pub fn tag(&self) -> RingTag {
        self.tag
    }

    pub fn letters(&self) -> &[(GeneratorId, BigInt)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Sum of `|exponent|` over all letters.
    pub fn total_exponent(&self) -> BigInt {
        self.letters.iter().map(|(_, e)| e.abs()).sum()
    }

    /// Appends `g^e`, merging with the last letter when the generator matches.
    pub fn push(&mut self, g: GeneratorId, e: BigInt) {
        if e.is_zero() {
            return;
        }
        if let Some((last, exp)) = self.letters.last_mut() {
            if *last == g {
                *exp += e;
                if exp.is_zero() {
                    self.letters.pop();
                }
                return;
            }
        }
        self.letters.push((g, e));
    }

    pub fn append(&mut self, other: &Word) {
        for (g, e) in &other.letters {
            self.push(*g, e.clone());
        }
    }

    pub fn inverse(&self) -> Word {
        let mut w = Word::empty(self.tag);
        for (g, e) in self.letters.iter().rev() {
            w.push(*g, -e);
        }
        w
    }

    pub fn repeat(&self, n: usize) -> Word {
        let mut w = Word::empty(self.tag);
        for _ in 0..n {
            w.append(self);
        }
        w
    }

    pub fn evaluate(&self) -> Matrix3 {
        evaluate_word(self)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, (g, e)) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if e == &BigInt::from(1) {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Ordered exact product of generator powers. The empty word is the identity.
pub fn evaluate_word(w: &Word) -> Matrix3 {
    evaluate_integral(w).to_matrix()
}

// Generators are integral and form-unitary, so the product stays in O_d and
// negative powers are conjugate transposes.
pub(crate) fn evaluate_integral(w: &Word) -> IntMatrix {
    let tag = w.tag;
    let gens: Vec<IntMatrix> = GeneratorId::ALL
        .iter()
        .map(|&g| IntMatrix::from_matrix(&generator_matrix(g, tag)).expect("integral generator"))
        .collect();
    let mut acc = IntMatrix::identity(tag);
    for (g, e) in &w.letters {
        acc = acc.mul(&gens[*g as usize].unitary_pow(e));
    }
    acc
}

/// Checks a word's tag against an expected ring.
pub fn check_tag(w: &Word, tag: RingTag) -> Result<()> {
    if w.tag == tag {
        Ok(())
    } else {
        Err(Error::TagMismatch {
            left: tag.d(),
            right: w.tag.d(),
        })
    }
}
