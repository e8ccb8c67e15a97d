//! Integral 3×3 matrices over `O_d`, used on the hot paths (word evaluation
//! and descent) where every entry is known to be integral.

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use crate::group::Matrix3;
use crate::ring::{QuadInt, RingTag};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IntMatrix {
    e: [[QuadInt; 3]; 3],
    tag: RingTag,
}

impl IntMatrix {
    pub fn from_fn(tag: RingTag, mut f: impl FnMut(usize, usize) -> QuadInt) -> Self {
        IntMatrix {
            e: std::array::from_fn(|r| std::array::from_fn(|c| f(r, c))),
            tag,
        }
    }

    pub fn identity(tag: RingTag) -> Self {
        IntMatrix::from_fn(tag, |r, c| {
            if r == c {
                QuadInt::one(tag)
            } else {
                QuadInt::zero(tag)
            }
        })
    }

    pub fn from_matrix(m: &Matrix3) -> Option<Self> {
        let mut ok = true;
        let out = IntMatrix::from_fn(m.tag(), |r, c| {
            m.get(r, c).to_quad_int().unwrap_or_else(|| {
                ok = false;
                QuadInt::zero(m.tag())
            })
        });
        ok.then_some(out)
    }

    pub fn to_matrix(&self) -> Matrix3 {
        Matrix3::from_fn(self.tag, |r, c| self.e[r][c].to_rat())
    }

    pub fn get(&self, r: usize, c: usize) -> &QuadInt {
        &self.e[r][c]
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        IntMatrix::from_fn(self.tag, |r, c| {
            let mut acc = QuadInt::zero(self.tag);
            for k in 0..3 {
                let (x, y) = (&self.e[r][k], &other.e[k][c]);
                if !x.is_zero() && !y.is_zero() {
                    acc = &acc + &(x * y);
                }
            }
            acc
        })
    }

    /// Inverse of a form-unitary matrix, `J·G*·J`.
    pub fn unitary_inverse(&self) -> IntMatrix {
        IntMatrix::from_fn(self.tag, |r, c| self.e[2 - c][2 - r].conj())
    }

    /// Power of a form-unitary matrix.
    pub fn unitary_pow(&self, n: &BigInt) -> IntMatrix {
        let mut sq = if n.is_negative() {
            self.unitary_inverse()
        } else {
            self.clone()
        };
        let mut e: BigUint = n.magnitude().clone();
        let mut acc = IntMatrix::identity(self.tag);
        while !e.is_zero() {
            if e.bit(0) {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if !e.is_zero() {
                sq = sq.mul(&sq);
            }
        }
        acc
    }
}
