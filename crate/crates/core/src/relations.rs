//! Mechanical check of the Eisenstein-Picard presentation
//! `<P, Q, R | R² = (QP⁻¹)⁶ = PQ⁻¹RQP⁻¹R = P³Q⁻² = (RP)³ = 1>`
//! with `Q = N_(1,√3)·M³_{-ω3}` and `P = M_{-ω3}·Q`.

use num_bigint::BigInt;

use crate::group::Matrix3;
use crate::ring::{QuadRat, RingTag};
use crate::word::{GeneratorId, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Letter {
    P,
    Q,
    R,
}

/// Relators as sequences of `(letter, exponent)`.
const RELATORS: [(&str, &[(Letter, i64)]); 5] = [
    ("R^2", &[(Letter::R, 2)]),
    (
        "(QP^-1)^6",
        &[
            (Letter::Q, 1),
            (Letter::P, -1),
            (Letter::Q, 1),
            (Letter::P, -1),
            (Letter::Q, 1),
            (Letter::P, -1),
            (Letter::Q, 1),
            (Letter::P, -1),
            (Letter::Q, 1),
            (Letter::P, -1),
            (Letter::Q, 1),
            (Letter::P, -1),
        ],
    ),
    (
        "PQ^-1RQP^-1R",
        &[
            (Letter::P, 1),
            (Letter::Q, -1),
            (Letter::R, 1),
            (Letter::Q, 1),
            (Letter::P, -1),
            (Letter::R, 1),
        ],
    ),
    ("P^3Q^-2", &[(Letter::P, 3), (Letter::Q, -2)]),
    (
        "(RP)^3",
        &[
            (Letter::R, 1),
            (Letter::P, 1),
            (Letter::R, 1),
            (Letter::P, 1),
            (Letter::R, 1),
            (Letter::P, 1),
        ],
    ),
];

#[derive(Clone, Debug)]
pub struct RelationCheck {
    pub name: &'static str,
    pub matrix: Matrix3,
    /// The unit `u` with `matrix = u·I`, if any.
    pub scalar: Option<QuadRat>,
}

impl RelationCheck {
    pub fn holds(&self) -> bool {
        self.scalar.is_some()
    }
}

/// `P` and `Q` as words in `T1, M` (`d = 3` only).
pub fn presentation_words(tag: RingTag) -> Option<(Word, Word)> {
    if tag != RingTag::D3 {
        return None;
    }
    let q = Word::from_letters(tag, [(GeneratorId::T1, 1), (GeneratorId::M, 3)]);
    let mut p = Word::from_letters(tag, [(GeneratorId::M, 1)]);
    p.append(&q);
    Some((p, q))
}

/// Evaluates every relator; `None` when the presentation does not apply.
pub fn check_relations(tag: RingTag) -> Option<Vec<RelationCheck>> {
    let (p_word, q_word) = presentation_words(tag)?;
    let p = p_word.evaluate();
    let q = q_word.evaluate();
    let r = Word::from_letters(tag, [(GeneratorId::R, 1)]).evaluate();
    let identity = Matrix3::identity(tag);
    let checks = RELATORS
        .iter()
        .map(|(name, letters)| {
            let mut acc = identity.clone();
            for (letter, e) in letters.iter() {
                let base = match letter {
                    Letter::P => &p,
                    Letter::Q => &q,
                    Letter::R => &r,
                };
                acc = &acc * &base.pow(&BigInt::from(*e)).expect("invertible");
            }
            let scalar = acc.projective_factor(&identity);
            RelationCheck {
                name,
                matrix: acc,
                scalar,
            }
        })
        .collect();
    Some(checks)
}
