//! 3×3 matrices over `Q(i√d)` and the antidiagonal Hermitian form
//! `<z, w> = z1·conj(w3) + z2·conj(w2) + z3·conj(w1)`.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ring::{units, QuadRat, RingTag};

/// Exact 3×3 matrix with entries in `Q(i√d)`. Indices are 0-based, so the
/// corner entry `g31` is `get(2, 0)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix3 {
    e: [[QuadRat; 3]; 3],
    tag: RingTag,
}

/// A point of the boundary of complex hyperbolic space in Siegel coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum BoundaryPoint {
    Infinity,
    Finite { z1: QuadRat, z2: QuadRat },
}

impl BoundaryPoint {
    pub fn is_infinity(&self) -> bool {
        matches!(self, BoundaryPoint::Infinity)
    }

    /// `2·Re(z1) + |z2|² = 0`; trivially true at infinity.
    pub fn on_boundary(&self) -> bool {
        match self {
            BoundaryPoint::Infinity => true,
            BoundaryPoint::Finite { z1, z2 } => {
                (z1.re() * num_bigint::BigInt::from(2) + z2.norm()).is_zero()
            }
        }
    }
}

pub type Vector3 = [QuadRat; 3];

/// Hermitian form `<z, w>`.
pub fn herm(z: &Vector3, w: &Vector3) -> Result<QuadRat> {
    let tag = z[0].tag();
    for x in z.iter().chain(w.iter()) {
        if x.tag() != tag {
            return Err(Error::TagMismatch {
                left: tag.d(),
                right: x.tag().d(),
            });
        }
    }
    Ok(&(&z[0] * &w[2].conj()) + &(&z[1] * &w[1].conj()) + &z[2] * &w[0].conj())
}

impl Matrix3 {
    pub fn new(e: [[QuadRat; 3]; 3]) -> Result<Self> {
        let tag = e[0][0].tag();
        for row in &e {
            for x in row {
                if x.tag() != tag {
                    return Err(Error::TagMismatch {
                        left: tag.d(),
                        right: x.tag().d(),
                    });
                }
            }
        }
        Ok(Matrix3 { e, tag })
    }

    pub fn from_fn(tag: RingTag, mut f: impl FnMut(usize, usize) -> QuadRat) -> Self {
        let e = std::array::from_fn(|r| std::array::from_fn(|c| f(r, c)));
        let m = Matrix3::new(e).expect("from_fn produced mixed tags");
        assert_eq!(m.tag, tag, "from_fn produced entries of another ring");
        m
    }

    pub fn identity(tag: RingTag) -> Self {
        Matrix3::from_fn(tag, |r, c| {
            if r == c {
                QuadRat::one(tag)
            } else {
                QuadRat::zero(tag)
            }
        })
    }

    pub fn diag(a: QuadRat, b: QuadRat, c: QuadRat) -> Result<Self> {
        let tag = a.tag();
        let z = || QuadRat::zero(tag);
        Matrix3::new([[a, z(), z()], [z(), b, z()], [z(), z(), c]])
    }

    /// The form matrix `J`, antidiagonal ones.
    pub fn form(tag: RingTag) -> Self {
        Matrix3::from_fn(tag, |r, c| {
            if r + c == 2 {
                QuadRat::one(tag)
            } else {
                QuadRat::zero(tag)
            }
        })
    }

    pub fn tag(&self) -> RingTag {
        self.tag
    }

    pub fn get(&self, r: usize, c: usize) -> &QuadRat {
        &self.e[r][c]
    }

    pub fn entries(&self) -> &[[QuadRat; 3]; 3] {
        &self.e
    }

    pub fn column(&self, c: usize) -> Vector3 {
        [
            self.e[0][c].clone(),
            self.e[1][c].clone(),
            self.e[2][c].clone(),
        ]
    }

    pub fn checked_mul(&self, other: &Matrix3) -> Result<Matrix3> {
        if self.tag != other.tag {
            return Err(Error::TagMismatch {
                left: self.tag.d(),
                right: other.tag.d(),
            });
        }
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Matrix3) -> Matrix3 {
        Matrix3::from_fn(self.tag, |r, c| {
            let mut acc = QuadRat::zero(self.tag);
            for k in 0..3 {
                let (x, y) = (&self.e[r][k], &other.e[k][c]);
                if !x.is_zero() && !y.is_zero() {
                    acc = &acc + &(x * y);
                }
            }
            acc
        })
    }

    pub fn scale(&self, u: &QuadRat) -> Matrix3 {
        Matrix3::from_fn(self.tag, |r, c| &self.e[r][c] * u)
    }

    pub fn conj_transpose(&self) -> Matrix3 {
        Matrix3::from_fn(self.tag, |r, c| self.e[c][r].conj())
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix3::identity(self.tag)
    }

    /// `G*·J·G - J`; zero exactly when `G` preserves the form.
    pub fn form_defect(&self) -> Matrix3 {
        let j = Matrix3::form(self.tag);
        let gjg = self.conj_transpose().mul_unchecked(&j).mul_unchecked(self);
        Matrix3::from_fn(self.tag, |r, c| &gjg.e[r][c] - &j.e[r][c])
    }

    pub fn is_unitary(&self) -> bool {
        self.form_defect().e.iter().flatten().all(QuadRat::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.e.iter().flatten().all(QuadRat::is_integral)
    }

    /// Membership in `U(2,1; O_d)`: form-unitary with every entry in `O_d`.
    pub fn is_picard(&self) -> bool {
        self.is_integral() && self.is_unitary()
    }

    pub fn determinant(&self) -> QuadRat {
        let e = &self.e;
        let m = |a: &QuadRat, b: &QuadRat, c: &QuadRat, d: &QuadRat| &(a * b) - &(c * d);
        let c0 = m(&e[1][1], &e[2][2], &e[1][2], &e[2][1]);
        let c1 = m(&e[1][0], &e[2][2], &e[1][2], &e[2][0]);
        let c2 = m(&e[1][0], &e[2][1], &e[1][1], &e[2][0]);
        &(&(&e[0][0] * &c0) - &(&e[0][1] * &c1)) + &(&e[0][2] * &c2)
    }

    /// Exact inverse. Form-unitary matrices use `J·G*·J`; anything else falls
    /// back to the adjugate over the determinant.
    pub fn inverse(&self) -> Result<Matrix3> {
        if self.is_unitary() {
            let j = Matrix3::form(self.tag);
            return Ok(j.mul_unchecked(&self.conj_transpose()).mul_unchecked(&j));
        }
        let det = self.determinant();
        if det.is_zero() {
            return Err(Error::Singular);
        }
        let inv_det = det.inv()?;
        let e = &self.e;
        let minor = |r0: usize, r1: usize, c0: usize, c1: usize| {
            &(&e[r0][c0] * &e[r1][c1]) - &(&e[r0][c1] * &e[r1][c0])
        };
        // adj[r][c] = cofactor[c][r]
        Ok(Matrix3::from_fn(self.tag, |r, c| {
            let rows: Vec<usize> = (0..3).filter(|&i| i != c).collect();
            let cols: Vec<usize> = (0..3).filter(|&i| i != r).collect();
            let m = minor(rows[0], rows[1], cols[0], cols[1]);
            let signed = if (r + c) % 2 == 0 { m } else { -m };
            &signed * &inv_det
        }))
    }

    /// Membership in the stabilizer of `q∞`: `g31 = 0`.
    pub fn fixes_infinity(&self) -> bool {
        self.e[2][0].is_zero()
    }

    /// Image of `q∞ = (1, 0, 0)ᵗ`: infinity when `g31 = 0`, otherwise
    /// `(g11/g31, g21/g31)`.
    pub fn boundary_image(&self) -> Result<BoundaryPoint> {
        if !self.is_unitary() {
            return Err(Error::NotUnitary);
        }
        if self.fixes_infinity() {
            return Ok(BoundaryPoint::Infinity);
        }
        let g31 = &self.e[2][0];
        Ok(BoundaryPoint::Finite {
            z1: self.e[0][0].checked_div(g31)?,
            z2: self.e[1][0].checked_div(g31)?,
        })
    }

    /// `self = u·other` for a unit `u` of `O_d`.
    pub fn projective_eq(&self, other: &Matrix3) -> bool {
        self.projective_factor(other).is_some()
    }

    /// The unit `u` with `self = u·other`, if there is one.
    pub fn projective_factor(&self, other: &Matrix3) -> Option<QuadRat> {
        if self.tag != other.tag {
            return None;
        }
        units(self.tag)
            .into_iter()
            .find(|u| *self == other.scale(u))
    }

    pub fn pow(&self, n: &num_bigint::BigInt) -> Result<Matrix3> {
        use num_traits::Signed;
        let base = if n.is_negative() {
            self.inverse()?
        } else {
            self.clone()
        };
        let mut e = n.magnitude().clone();
        let mut acc = Matrix3::identity(self.tag);
        let mut sq = base;
        let zero = num_bigint::BigUint::zero();
        while e > zero {
            if e.bit(0) {
                acc = acc.mul_unchecked(&sq);
            }
            e >>= 1;
            if e > zero {
                sq = sq.mul_unchecked(&sq);
            }
        }
        Ok(acc)
    }
}

impl std::ops::Mul<&Matrix3> for &Matrix3 {
    type Output = Matrix3;
    fn mul(self, rhs: &Matrix3) -> Matrix3 {
        self.checked_mul(rhs).expect("Matrix3 tag mismatch")
    }
}

impl fmt::Display for Matrix3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.e {
            writeln!(f, "[ {} | {} | {} ]", row[0], row[1], row[2])?;
        }
        Ok(())
    }
}
