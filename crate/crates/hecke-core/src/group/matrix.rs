//! Exact 2x2 unimodular matrices over the rationals.
//!
//! Elements of `SL(2, Z[1/S])` are stored as four `BigRational` entries in
//! row-major order. Rationals are always kept in lowest terms, so structural
//! equality is element equality.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::GroupError;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MatrixElt {
    /// Row-major entries `[a, b, c, d]` of `[[a, b], [c, d]]`.
    pub entries: [BigRational; 4],
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl MatrixElt {
    pub fn new(entries: [BigRational; 4]) -> Result<Self, GroupError> {
        let det = &entries[0] * &entries[3] - &entries[1] * &entries[2];
        if !det.is_one() {
            return Err(GroupError::NotUnimodular);
        }
        Ok(MatrixElt { entries })
    }

    pub fn identity() -> Self {
        MatrixElt {
            entries: [rat(1), rat(0), rat(0), rat(1)],
        }
    }

    pub fn from_integers(a: i64, b: i64, c: i64, d: i64) -> Result<Self, GroupError> {
        MatrixElt::new([rat(a), rat(b), rat(c), rat(d)])
    }

    /// Upper unipotent `[[1, 1], [0, 1]]`.
    pub fn gen_t() -> Self {
        MatrixElt::from_integers(1, 1, 0, 1).unwrap()
    }

    /// Rotation `[[0, -1], [1, 0]]` of order four.
    pub fn gen_s() -> Self {
        MatrixElt::from_integers(0, -1, 1, 0).unwrap()
    }

    /// Diagonal `diag(p, 1/p)`.
    pub fn gen_d(p: u64) -> Self {
        let p = BigInt::from(p);
        MatrixElt::new([
            BigRational::from_integer(p.clone()),
            rat(0),
            rat(0),
            BigRational::new(BigInt::one(), p),
        ])
        .unwrap()
    }

    pub fn multiply(&self, other: &MatrixElt) -> MatrixElt {
        let [a, b, c, d] = &self.entries;
        let [e, f, g, h] = &other.entries;
        MatrixElt {
            entries: [a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h],
        }
    }

    /// Inverse by adjugate; valid because the determinant is one.
    pub fn invert(&self) -> MatrixElt {
        let [a, b, c, d] = &self.entries;
        MatrixElt {
            entries: [d.clone(), -b.clone(), -c.clone(), a.clone()],
        }
    }

    pub fn is_identity(&self) -> bool {
        self.entries[0].is_one()
            && self.entries[1].is_zero()
            && self.entries[2].is_zero()
            && self.entries[3].is_one()
    }

    pub fn det(&self) -> BigRational {
        &self.entries[0] * &self.entries[3] - &self.entries[1] * &self.entries[2]
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|e| e.denom().is_one())
    }

    /// True when every entry denominator factors over `primes`.
    pub fn denominators_within(&self, primes: &[u64]) -> bool {
        self.entries.iter().all(|e| {
            let mut d = e.denom().abs();
            for &p in primes {
                let p = BigInt::from(p);
                while (&d % &p).is_zero() {
                    d /= &p;
                }
            }
            d.is_one()
        })
    }

    /// Canonical key of the left coset `g * SL(2, Z)`.
    ///
    /// The coset is determined by the column lattice `g * Z^2` inside `Q^2`,
    /// and the lattice by its Hermite basis `(g, u), (0, v)` with `v = 1/g`
    /// and `0 <= u < v`. Two group elements lie in the same coset iff their
    /// keys agree.
    pub fn coset_key(&self) -> String {
        let (g, u) = self.lattice_hermite();
        format!("m:{}/{};{}/{}", g.numer(), g.denom(), u.numer(), u.denom())
    }

    fn lattice_hermite(&self) -> (BigRational, BigRational) {
        let [a, b, c, d] = &self.entries;
        // Rational gcd of the top row: generator of a*Z + b*Z as a Z-module
        // of Q, together with an integral Bezout pair.
        let q = a.denom().lcm(b.denom());
        let ai = (a * BigRational::from_integer(q.clone())).to_integer();
        let bi = (b * BigRational::from_integer(q.clone())).to_integer();
        let eg = ai.extended_gcd(&bi);
        let (mut gi, mut s0, mut t0) = (eg.gcd, eg.x, eg.y);
        if gi.is_negative() {
            gi = -gi;
            s0 = -s0;
            t0 = -t0;
        }
        let g = BigRational::new(gi, q);
        // det = 1, so the second Hermite vector is (0, 1/g).
        let v = g.recip();
        let u_raw = BigRational::from_integer(s0) * c + BigRational::from_integer(t0) * d;
        let u = &u_raw - (&u_raw / &v).floor() * &v;
        (g, u)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_of_elementary_matrices() {
        let t = MatrixElt::gen_t();
        let u = MatrixElt::from_integers(1, 0, 1, 1).unwrap();
        let p = t.multiply(&u);
        assert_eq!(p, MatrixElt::from_integers(2, 1, 1, 1).unwrap());
    }

    #[test]
    fn adjugate_inverse() {
        let p = MatrixElt::from_integers(2, 1, 1, 1).unwrap();
        assert_eq!(p.invert(), MatrixElt::from_integers(1, -1, -1, 2).unwrap());
        assert!(p.multiply(&p.invert()).is_identity());
        assert!(MatrixElt::identity().invert().is_identity());
    }

    #[test]
    fn determinant_stays_one() {
        let mut x = MatrixElt::identity();
        for _ in 0..20 {
            x = x.multiply(&MatrixElt::gen_d(2));
            x = x.multiply(&MatrixElt::gen_t());
            assert!(x.det().is_one());
        }
    }

    #[test]
    fn rejects_non_unimodular() {
        assert_eq!(
            MatrixElt::from_integers(1, 0, 0, 2),
            Err(GroupError::NotUnimodular)
        );
    }

    #[test]
    fn coset_key_constant_on_coset() {
        let g = MatrixElt::gen_d(2);
        let key = g.coset_key();
        for h in [
            MatrixElt::gen_t(),
            MatrixElt::gen_s(),
            MatrixElt::gen_t().invert(),
            MatrixElt::from_integers(2, 1, 1, 1).unwrap(),
        ] {
            assert_eq!(g.multiply(&h).coset_key(), key);
        }
        assert_ne!(MatrixElt::identity().coset_key(), key);
        assert_ne!(MatrixElt::gen_d(2).invert().coset_key(), key);
    }

    #[test]
    fn denominator_screen() {
        let g = MatrixElt::gen_d(2).multiply(&MatrixElt::gen_d(2));
        assert!(g.denominators_within(&[2]));
        assert!(!g.denominators_within(&[3]));
        assert!(MatrixElt::identity().denominators_within(&[]));
    }
}
