//! The stabilizer `Γ∞` of `q∞`: Langlands decomposition `P = N·A·M`, the
//! integrality criterion for its parameters, and factorization of integral
//! stabilizer elements into `T1`, `T2`, `M`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::group::Matrix3;
use crate::heisenberg::{dilation_matrix, rotation_matrix, translation_matrix, HeisPoint};
use crate::ring::{is_unit, parity, units, QuadRat, RingTag};
use crate::word::{
    check_tag, evaluate_word, half_turn_exponent, rotation_generator, rotation_order,
    translation_generator, GeneratorId, Word,
};

/// Parameters of `P = s·N_(z,t)·A_λ·M_β` with `t = k·√d`.
///
/// `s` is a unimodular scalar absorbing the projective ambiguity; it is one
/// for anything built from the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LanglandsParams {
    pub z: QuadRat,
    pub k: BigRational,
    pub lambda: BigRational,
    pub beta: QuadRat,
    pub scalar: QuadRat,
}

impl LanglandsParams {
    /// Scalar-free parameters `N_(z,t)·M_β`.
    pub fn translation_rotation(z: QuadRat, k: BigRational, beta: QuadRat) -> Self {
        let tag = z.tag();
        LanglandsParams {
            z,
            k,
            lambda: BigRational::one(),
            beta,
            scalar: QuadRat::one(tag),
        }
    }

    pub fn tag(&self) -> RingTag {
        self.z.tag()
    }

    pub fn heis_point(&self) -> HeisPoint {
        HeisPoint::new(self.z.clone(), self.k.clone())
    }

    /// `s·N·A·M`.
    pub fn reconstruct(&self) -> Result<Matrix3> {
        let tag = self.tag();
        let n = translation_matrix(&self.heis_point());
        let a = dilation_matrix(&self.lambda, tag)?;
        let m = rotation_matrix(&self.beta)?;
        Ok((&(&n * &a) * &m).scale(&self.scalar))
    }
}

fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let (n, d) = (x.numer(), x.denom());
    let (rn, rd) = (n.sqrt(), d.sqrt());
    (&rn * &rn == *n && &rd * &rd == *d).then(|| BigRational::new(rn, rd))
}

/// Reads off `(z, t, λ, β)` and the unimodular scalar from an
/// upper-triangular form-unitary matrix.
pub fn langlands_decompose(p: &Matrix3) -> Result<LanglandsParams> {
    let upper = p.get(1, 0).is_zero() && p.get(2, 0).is_zero() && p.get(2, 1).is_zero();
    if !upper {
        return Err(Error::Precondition("matrix is not upper triangular".into()));
    }
    if !p.is_unitary() {
        return Err(Error::Precondition(
            "matrix does not preserve the Hermitian form".into(),
        ));
    }
    let lambda = rational_sqrt(&p.get(0, 0).norm()).ok_or_else(|| {
        Error::Precondition("|p11| is irrational; dilation factor is not exact".into())
    })?;
    let scalar = p.get(0, 0).scale(&lambda.recip());
    let q = p.scale(&scalar.inv()?);
    let beta = q.get(1, 1).clone();
    let z = q.get(1, 2).scale(&lambda);
    let corner = q.get(0, 2).scale(&(&lambda * BigInt::from(2)));
    let params = LanglandsParams {
        z,
        k: corner.im().clone(),
        lambda,
        beta,
        scalar,
    };
    if params.reconstruct()? != *p {
        return Err(Error::Verification(
            "Langlands parameters do not reconstruct the matrix".into(),
        ));
    }
    Ok(params)
}

/// Integrality criterion for stabilizer parameters: `λ = 1`, `z ∈ O_d`,
/// `k = t/√d ∈ Z`, `β` a unit, and `k ≡ |z|² (mod 2)`.
pub fn params_valid(params: &LanglandsParams, tag: RingTag) -> bool {
    if params.tag() != tag || !params.lambda.is_one() || !params.k.is_integer() {
        return false;
    }
    if !is_unit(&params.scalar) || !units(tag).contains(&params.beta) {
        return false;
    }
    match params.z.to_quad_int() {
        Some(z) => parity(&params.k.to_integer()) == parity(&z.norm()),
        None => false,
    }
}

/// The word `(T1·M_{-1})²`, equal to the vertical translation `N_(0, 2√d)`.
pub fn vertical_word(tag: RingTag) -> Word {
    let e = half_turn_exponent(tag);
    Word::from_letters(
        tag,
        [
            (GeneratorId::T1, 1),
            (GeneratorId::M, e),
            (GeneratorId::T1, 1),
            (GeneratorId::M, e),
        ],
    )
}

/// Word for the translation `N_(z,t)` of an admissible Heisenberg point:
/// `T2^b · T1^a · (T1·M_{-1})^{2m}` with `z = a + b·ω_d`.
///
/// The vertical exponent `m` is recovered from the group law rather than a
/// closed form.
pub fn translation_word(p: &HeisPoint) -> Result<Word> {
    let tag = p.tag();
    let z =
        p.z.to_quad_int()
            .ok_or_else(|| Error::Precondition(format!("translation {p} has non-integral z")))?;
    let (a, b) = (z.a().clone(), z.b().clone());
    let t1 = translation_generator(GeneratorId::T1, tag).expect("T1");
    let t2 = translation_generator(GeneratorId::T2, tag).expect("T2");
    let residual = t1.pow(&-&a).compose(&t2.pow(&-&b))?.compose(p)?;
    if !residual.z.is_zero() {
        return Err(Error::Verification(format!(
            "residual of {p} after T2^{b} T1^{a} is not vertical"
        )));
    }
    let half = &residual.k / BigRational::from_integer(BigInt::from(2));
    if !half.is_integer() {
        return Err(Error::Precondition(format!(
            "translation {p} fails the parity condition"
        )));
    }
    let m = half.to_integer();
    let reps = m
        .abs()
        .to_usize()
        .ok_or_else(|| Error::Precondition(format!("vertical exponent {m} too large to expand")))?;
    let v = vertical_word(tag);
    let vertical = if m.is_negative() { v.inverse() } else { v };

    let mut w = Word::empty(tag);
    w.push(GeneratorId::T2, b);
    w.push(GeneratorId::T1, a);
    w.append(&vertical.repeat(reps));
    Ok(w)
}

/// Exponent `j` with `M^j = M_β`.
fn rotation_exponent(beta: &QuadRat) -> Option<u32> {
    let tag = beta.tag();
    let gen = rotation_generator(tag);
    (0..rotation_order(tag)).find(|&j| gen.pow(j) == *beta)
}

/// Factors an integral stabilizer element as `T2^b · T1^a · V^m · M^j`.
///
/// The returned word evaluates exactly to `s⁻¹·P`, where `s = p11` is the
/// unit scalar of `P`; for anything with `p11 = 1` (in particular every
/// product of `T1`, `T2`, `M`) that is `P` itself. The result is checked by
/// evaluation before it is returned.
pub fn factor_stabilizer(p: &Matrix3, tag: RingTag) -> Result<Word> {
    if p.tag() != tag {
        return Err(Error::TagMismatch {
            left: tag.d(),
            right: p.tag().d(),
        });
    }
    if !p.fixes_infinity() {
        return Err(Error::Precondition("matrix does not fix q∞".into()));
    }
    if !p.is_picard() {
        return Err(Error::Precondition(
            "matrix is not in the Picard group".into(),
        ));
    }
    let params = langlands_decompose(p)?;
    if !params_valid(&params, tag) {
        return Err(Error::Verification(format!(
            "integral stabilizer element has invalid parameters: z = {}, k = {}, β = {}",
            params.z, params.k, params.beta
        )));
    }
    let j = rotation_exponent(&params.beta).ok_or_else(|| {
        Error::Verification(format!("rotation {} is not a power of M", params.beta))
    })?;

    let mut w = translation_word(&params.heis_point())?;
    w.push(GeneratorId::M, BigInt::from(j));

    let target = p.scale(&params.scalar.inv()?);
    if evaluate_word(&w) != target {
        return Err(Error::Verification(format!(
            "stabilizer word {w} does not evaluate to its input"
        )));
    }
    check_tag(&w, tag)?;
    Ok(w)
}
