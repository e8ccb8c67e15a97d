//! The boundary Heisenberg group `C × R` with law
//! `(z1, t1)(z2, t2) = (z1 + z2, t1 + t2 + 2·Im(z1·conj(z2)))`, and the
//! matrices of translations, rotations, dilations and the involution `R`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::group::{BoundaryPoint, Matrix3};
use crate::ring::{QuadRat, RingTag};

/// A Heisenberg point `(z, t)` stored as `(z, k)` with `t = k·√d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HeisPoint {
    pub z: QuadRat,
    pub k: BigRational,
}

impl HeisPoint {
    pub fn new(z: QuadRat, k: BigRational) -> Self {
        HeisPoint { z, k }
    }

    /// `z = re + im·i√d`, `t = k·√d`, all integers.
    pub fn from_ints(re: i64, im: i64, k: i64, tag: RingTag) -> Self {
        HeisPoint::new(
            QuadRat::from_ints(re, im, tag),
            BigRational::from_integer(BigInt::from(k)),
        )
    }

    pub fn identity(tag: RingTag) -> Self {
        HeisPoint::from_ints(0, 0, 0, tag)
    }

    pub fn tag(&self) -> RingTag {
        self.z.tag()
    }

    pub fn is_identity(&self) -> bool {
        self.z.is_zero() && self.k.is_zero()
    }

    /// Group product. `Im(z1·conj(z2))` is the `i√d` coefficient times `√d`,
    /// so the vertical coordinate gains `2·coeff`.
    pub fn compose(&self, other: &HeisPoint) -> Result<HeisPoint> {
        let cross = self.z.checked_mul(&other.z.conj())?;
        let z = &self.z + &other.z;
        let k = &self.k + &other.k + cross.im() * BigInt::from(2);
        Ok(HeisPoint::new(z, k))
    }

    pub fn inverse(&self) -> HeisPoint {
        HeisPoint::new(-&self.z, -&self.k)
    }

    /// `n`-th power; `(z, t)^n = (n·z, n·t)` since `Im(z·conj(z)) = 0`.
    pub fn pow(&self, n: &BigInt) -> HeisPoint {
        let n = BigRational::from_integer(n.clone());
        HeisPoint::new(self.z.scale(&n), &self.k * n)
    }
}

impl fmt::Display for HeisPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, ({})√{})", self.z, self.k, self.tag().d())
    }
}

/// Upper-triangular translation `N_(z,t)`:
/// rows `(1, -conj z, (-|z|² + it)/2)`, `(0, 1, z)`, `(0, 0, 1)`.
pub fn translation_matrix(p: &HeisPoint) -> Matrix3 {
    let tag = p.tag();
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let corner = QuadRat::new(-p.z.norm() * &half, &p.k * &half, tag);
    let zero = || QuadRat::zero(tag);
    let one = || QuadRat::one(tag);
    Matrix3::new([
        [one(), -p.z.conj(), corner],
        [zero(), one(), p.z.clone()],
        [zero(), zero(), one()],
    ])
    .expect("uniform tag")
}

/// Rotation `M_β = diag(1, β, 1)` for exact unimodular `β`.
pub fn rotation_matrix(beta: &QuadRat) -> Result<Matrix3> {
    if !beta.norm().is_one() {
        return Err(Error::NotUnimodular);
    }
    let tag = beta.tag();
    Matrix3::diag(QuadRat::one(tag), beta.clone(), QuadRat::one(tag))
}

/// Dilation `A_λ = diag(λ, 1, 1/λ)`.
pub fn dilation_matrix(lambda: &BigRational, tag: RingTag) -> Result<Matrix3> {
    if !lambda.is_positive() {
        return Err(Error::NonPositiveDilation);
    }
    Matrix3::diag(
        QuadRat::from_rational(lambda.clone(), tag),
        QuadRat::one(tag),
        QuadRat::from_rational(lambda.recip(), tag),
    )
}

/// The involution `R` swapping `q0` and `q∞`: antidiagonal `(1, -1, 1)`.
pub fn involution(tag: RingTag) -> Matrix3 {
    Matrix3::from_fn(tag, |r, c| match (r, c) {
        (0, 2) | (2, 0) => QuadRat::one(tag),
        (1, 1) => -QuadRat::one(tag),
        _ => QuadRat::zero(tag),
    })
}

/// The Heisenberg point whose translation carries `q0` to `p`:
/// `z = z2`, `t = 2·Im(z1)`.
pub fn translation_to(p: &BoundaryPoint) -> Result<HeisPoint> {
    match p {
        BoundaryPoint::Infinity => Err(Error::PointAtInfinity),
        BoundaryPoint::Finite { z1, z2 } => {
            Ok(HeisPoint::new(z2.clone(), z1.im() * BigInt::from(2)))
        }
    }
}
