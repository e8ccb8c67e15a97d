//! Exact arithmetic in `O_d = Z[ω_d]`, `ω_d = (-1 + i√d)/2`, and in its field
//! of fractions `Q(i√d)`, for the three rings `d = 3, 7, 11`.
//!
//! [`QuadInt`] uses the `(1, ω_d)` basis, matching the ring presentation.
//! [`QuadRat`] uses the `(1, i√d)` basis so real and imaginary parts can be
//! read off directly; the imaginary part of `p + q·i√d` is `q·√d`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Which of the three imaginary quadratic rings an element lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingTag {
    D3,
    D7,
    D11,
}

impl RingTag {
    pub const ALL: [RingTag; 3] = [RingTag::D3, RingTag::D7, RingTag::D11];

    pub fn new(d: i64) -> Result<Self> {
        match d {
            3 => Ok(RingTag::D3),
            7 => Ok(RingTag::D7),
            11 => Ok(RingTag::D11),
            other => Err(Error::UnsupportedRing(other)),
        }
    }

    pub fn d(self) -> u32 {
        match self {
            RingTag::D3 => 3,
            RingTag::D7 => 7,
            RingTag::D11 => 11,
        }
    }

    /// `(1 + d)/4`, so that `ω² = -(1+d)/4 - ω` and `|ω|² = (1+d)/4`.
    pub fn omega_norm(self) -> u32 {
        (1 + self.d()) / 4
    }

    fn check(self, other: RingTag) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::TagMismatch {
                left: self.d(),
                right: other.d(),
            })
        }
    }
}

impl fmt::Display for RingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.d())
    }
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn int_rat(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

/// `a + b·ω_d` with integer coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadInt {
    a: BigInt,
    b: BigInt,
    tag: RingTag,
}

impl QuadInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, tag: RingTag) -> Self {
        QuadInt {
            a: a.into(),
            b: b.into(),
            tag,
        }
    }

    pub fn zero(tag: RingTag) -> Self {
        QuadInt::new(0, 0, tag)
    }

    pub fn one(tag: RingTag) -> Self {
        QuadInt::new(1, 0, tag)
    }

    pub fn omega(tag: RingTag) -> Self {
        QuadInt::new(0, 1, tag)
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn tag(&self) -> RingTag {
        self.tag
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn checked_add(&self, other: &QuadInt) -> Result<QuadInt> {
        self.tag.check(other.tag)?;
        Ok(QuadInt::new(
            &self.a + &other.a,
            &self.b + &other.b,
            self.tag,
        ))
    }

    pub fn checked_mul(&self, other: &QuadInt) -> Result<QuadInt> {
        self.tag.check(other.tag)?;
        let c = BigInt::from(self.tag.omega_norm());
        let bb = &self.b * &other.b;
        let a = &self.a * &other.a - &c * &bb;
        let b = &self.a * &other.b + &other.a * &self.b - bb;
        Ok(QuadInt::new(a, b, self.tag))
    }

    /// Complex conjugate: `conj(ω) = -1 - ω`, so `(a, b) ↦ (a - b, -b)`.
    pub fn conj(&self) -> QuadInt {
        QuadInt::new(&self.a - &self.b, -&self.b, self.tag)
    }

    /// `x·conj(x) = a² - ab + ((1+d)/4)·b²`.
    pub fn norm(&self) -> BigInt {
        let c = BigInt::from(self.tag.omega_norm());
        &self.a * &self.a - &self.a * &self.b + c * &self.b * &self.b
    }

    pub fn to_rat(&self) -> QuadRat {
        QuadRat::from(self)
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}ω{}", self.a, self.b, self.tag.d())
    }
}

impl Add<&QuadInt> for &QuadInt {
    type Output = QuadInt;
    fn add(self, rhs: &QuadInt) -> QuadInt {
        self.checked_add(rhs).expect("QuadInt tag mismatch")
    }
}

impl Sub<&QuadInt> for &QuadInt {
    type Output = QuadInt;
    fn sub(self, rhs: &QuadInt) -> QuadInt {
        assert_eq!(self.tag, rhs.tag, "QuadInt tag mismatch");
        QuadInt::new(&self.a - &rhs.a, &self.b - &rhs.b, self.tag)
    }
}

impl Mul<&QuadInt> for &QuadInt {
    type Output = QuadInt;
    fn mul(self, rhs: &QuadInt) -> QuadInt {
        self.checked_mul(rhs).expect("QuadInt tag mismatch")
    }
}

impl Neg for &QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        QuadInt::new(-&self.a, -&self.b, self.tag)
    }
}

/// `p + q·i√d` with rational coordinates in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadRat {
    re: BigRational,
    im: BigRational,
    tag: RingTag,
}

impl QuadRat {
    /// `re + im·i√d`. Note that `im` is the coefficient of `i√d`, not the
    /// imaginary part itself.
    pub fn new(re: BigRational, im: BigRational, tag: RingTag) -> Self {
        QuadRat { re, im, tag }
    }

    pub fn from_ints(re: i64, im: i64, tag: RingTag) -> Self {
        QuadRat::new(rat(re, 1), rat(im, 1), tag)
    }

    pub fn from_fracs(re: (i64, i64), im: (i64, i64), tag: RingTag) -> Self {
        QuadRat::new(rat(re.0, re.1), rat(im.0, im.1), tag)
    }

    pub fn from_rational(re: BigRational, tag: RingTag) -> Self {
        QuadRat::new(re, BigRational::zero(), tag)
    }

    pub fn zero(tag: RingTag) -> Self {
        QuadRat::from_ints(0, 0, tag)
    }

    pub fn one(tag: RingTag) -> Self {
        QuadRat::from_ints(1, 0, tag)
    }

    /// `ω_d = -1/2 + (1/2)·i√d`.
    pub fn omega(tag: RingTag) -> Self {
        QuadRat::from_fracs((-1, 2), (1, 2), tag)
    }

    /// Builds `a + b·ω_d` from rational coordinates in the `(1, ω_d)` basis.
    pub fn from_omega_basis(a: BigRational, b: BigRational, tag: RingTag) -> Self {
        let half = rat(1, 2);
        let re = &a - &b * &half;
        let im = b * half;
        QuadRat::new(re, im, tag)
    }

    /// Coordinates in the `(1, ω_d)` basis: `b = 2q`, `a = p + q`.
    pub fn omega_coords(&self) -> (BigRational, BigRational) {
        (&self.re + &self.im, &self.im * BigInt::from(2))
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    /// Coefficient of `i√d`; the imaginary part is `im·√d`.
    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn tag(&self) -> RingTag {
        self.tag
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> QuadRat {
        QuadRat::new(self.re.clone(), -&self.im, self.tag)
    }

    /// `|x|² = p² + d·q²`.
    pub fn norm(&self) -> BigRational {
        let d = int_rat(BigInt::from(self.tag.d()));
        &self.re * &self.re + d * &self.im * &self.im
    }

    pub fn checked_add(&self, other: &QuadRat) -> Result<QuadRat> {
        self.tag.check(other.tag)?;
        Ok(QuadRat::new(
            &self.re + &other.re,
            &self.im + &other.im,
            self.tag,
        ))
    }

    pub fn checked_sub(&self, other: &QuadRat) -> Result<QuadRat> {
        self.tag.check(other.tag)?;
        Ok(QuadRat::new(
            &self.re - &other.re,
            &self.im - &other.im,
            self.tag,
        ))
    }

    pub fn checked_mul(&self, other: &QuadRat) -> Result<QuadRat> {
        self.tag.check(other.tag)?;
        let d = int_rat(BigInt::from(self.tag.d()));
        let re = &self.re * &other.re - d * &self.im * &other.im;
        let im = &self.re * &other.im + &other.re * &self.im;
        Ok(QuadRat::new(re, im, self.tag))
    }

    /// `conj(x) / |x|²`.
    pub fn inv(&self) -> Result<QuadRat> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        Ok(QuadRat::new(&self.re / &n, -&self.im / &n, self.tag))
    }

    pub fn checked_div(&self, other: &QuadRat) -> Result<QuadRat> {
        self.tag.check(other.tag)?;
        self.checked_mul(&other.inv()?)
    }

    pub fn scale(&self, r: &BigRational) -> QuadRat {
        QuadRat::new(&self.re * r, &self.im * r, self.tag)
    }

    /// True when the element lies in `O_d`.
    pub fn is_integral(&self) -> bool {
        let (a, b) = self.omega_coords();
        a.is_integer() && b.is_integer()
    }

    pub fn to_quad_int(&self) -> Option<QuadInt> {
        let (a, b) = self.omega_coords();
        if a.is_integer() && b.is_integer() {
            Some(QuadInt::new(a.to_integer(), b.to_integer(), self.tag))
        } else {
            None
        }
    }

    pub fn pow(&self, mut n: u32) -> QuadRat {
        let mut base = self.clone();
        let mut acc = QuadRat::one(self.tag);
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }
}

impl From<&QuadInt> for QuadRat {
    fn from(x: &QuadInt) -> Self {
        QuadRat::from_omega_basis(int_rat(x.a.clone()), int_rat(x.b.clone()), x.tag)
    }
}

impl fmt::Display for QuadRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "({})i√{}", self.im, self.tag.d())
        } else {
            write!(f, "{} + ({})i√{}", self.re, self.im, self.tag.d())
        }
    }
}

// Operator forms panic on tag mismatch; they are used where the tag has
// already been validated (inside a Matrix3, for instance).
macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&QuadRat> for &QuadRat {
            type Output = QuadRat;
            fn $method(self, rhs: &QuadRat) -> QuadRat {
                self.$checked(rhs).expect("QuadRat tag mismatch")
            }
        }
        impl $trait<QuadRat> for QuadRat {
            type Output = QuadRat;
            fn $method(self, rhs: QuadRat) -> QuadRat {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &QuadRat {
    type Output = QuadRat;
    fn neg(self) -> QuadRat {
        QuadRat::new(-&self.re, -&self.im, self.tag)
    }
}

impl Neg for QuadRat {
    type Output = QuadRat;
    fn neg(self) -> QuadRat {
        -&self
    }
}

/// `floor(x + 1/2)`.
pub(crate) fn round_half_up(x: &BigRational) -> BigInt {
    (x + rat(1, 2)).floor().to_integer()
}

/// Lattice points `a + b·ω_d` in the `(2·radius + 1)²` window centred on the
/// rounded coordinates of `target`, ordered by `b` then `a`, ascending.
///
/// With `radius >= 1` the window always contains a point whose difference
/// from `target` has `|Re| <= 1/2` and `|Im| <= √d/4`.
pub fn nearest_candidates(target: &QuadRat, radius: u32) -> Vec<QuadInt> {
    let (a_star, b_star) = target.omega_coords();
    let a0 = round_half_up(&a_star);
    let b0 = round_half_up(&b_star);
    let r = i64::from(radius);
    let mut out = Vec::with_capacity(((2 * r + 1) * (2 * r + 1)) as usize);
    for db in -r..=r {
        let b = &b0 + db;
        for da in -r..=r {
            out.push(QuadInt::new(&a0 + da, b.clone(), target.tag));
        }
    }
    out
}

/// Units of `O_d`: `±1, ±ω, ±ω²` for `d = 3`, `±1` otherwise.
pub fn units(tag: RingTag) -> Vec<QuadRat> {
    let one = QuadRat::one(tag);
    match tag {
        RingTag::D3 => {
            let w = QuadRat::omega(tag);
            let w2 = &w * &w;
            vec![one.clone(), -one, w.clone(), -w, w2.clone(), -w2]
        }
        _ => vec![one.clone(), -one],
    }
}

pub fn is_unit(x: &QuadRat) -> bool {
    x.is_integral() && x.norm().is_one()
}

/// Parity of an integer, as 0 or 1.
pub(crate) fn parity(n: &BigInt) -> u8 {
    if n.is_even() {
        0
    } else {
        1
    }
}
