//! Britton canonical forms for the Baumslag-Solitar groups `BS(m, n)`.
//!
//! The defining relation is `a^-1 b^m a = b^n`. A word is stored as
//! `b^lead a^{s_1} b^{k_1} ... a^{s_l} b^{k_l}` where every exponent in front
//! of an `a`-letter is normalized into `[0, m)` (before `a`) or `[0, n)`
//! (before `a^-1`), excess powers being pushed to the right through the
//! relation. Only the final exponent `k_l` is unconstrained, so stripping it
//! yields a canonical key for the left coset modulo `<b>`.
//!
//! With these constraints a pinch `a^-1 b^{mt} a` or `a b^{nt} a^-1` can only
//! occur with a zero intermediate exponent, and the normalization cancels
//! those pairs outright; the stored form is always pinch-free.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BsElt {
    pub m: u32,
    pub n: u32,
    /// Exponent of `b` before the first `a`-letter.
    pub lead: BigInt,
    /// `(sign, exponent)` per `a`-letter: `a^sign b^exponent`.
    pub syl: Vec<(i8, BigInt)>,
}

struct Builder {
    m: BigInt,
    n: BigInt,
    lead: BigInt,
    syl: Vec<(i8, BigInt)>,
}

impl Builder {
    fn new(m: u32, n: u32) -> Self {
        Builder {
            m: BigInt::from(m),
            n: BigInt::from(n),
            lead: BigInt::zero(),
            syl: Vec::new(),
        }
    }

    fn push_b(&mut self, k: &BigInt) {
        match self.syl.last_mut() {
            Some(last) => last.1 += k,
            None => self.lead += k,
        }
    }

    fn push_a(&mut self, sign: i8) {
        let (modulus, carry_mul) = if sign > 0 {
            (&self.m, &self.n)
        } else {
            (&self.n, &self.m)
        };
        let trail = match self.syl.last() {
            Some(last) => last.1.clone(),
            None => self.lead.clone(),
        };
        let r = trail.mod_floor(modulus);
        let carry = (&trail - &r) / modulus * carry_mul;
        if r.is_zero() && self.syl.last().is_some_and(|l| l.0 == -sign) {
            self.syl.pop();
            self.push_b(&carry);
        } else {
            match self.syl.last_mut() {
                Some(last) => last.1 = r,
                None => self.lead = r,
            }
            self.syl.push((sign, carry));
        }
    }

    fn push_elt(&mut self, x: &BsElt) {
        self.push_b(&x.lead);
        for (s, k) in &x.syl {
            self.push_a(*s);
            self.push_b(k);
        }
    }

    fn finish(self, m: u32, n: u32) -> BsElt {
        BsElt {
            m,
            n,
            lead: self.lead,
            syl: self.syl,
        }
    }
}

impl BsElt {
    pub fn identity(m: u32, n: u32) -> Self {
        BsElt {
            m,
            n,
            lead: BigInt::zero(),
            syl: Vec::new(),
        }
    }

    pub fn gen_a(m: u32, n: u32) -> Self {
        BsElt {
            m,
            n,
            lead: BigInt::zero(),
            syl: vec![(1, BigInt::zero())],
        }
    }

    pub fn gen_b(m: u32, n: u32) -> Self {
        BsElt {
            m,
            n,
            lead: BigInt::from(1),
            syl: Vec::new(),
        }
    }

    pub fn b_power(m: u32, n: u32, k: i64) -> Self {
        BsElt {
            m,
            n,
            lead: BigInt::from(k),
            syl: Vec::new(),
        }
    }

    pub fn multiply(&self, other: &BsElt) -> BsElt {
        let mut b = Builder::new(self.m, self.n);
        b.push_elt(self);
        b.push_elt(other);
        b.finish(self.m, self.n)
    }

    pub fn invert(&self) -> BsElt {
        let mut b = Builder::new(self.m, self.n);
        for (s, k) in self.syl.iter().rev() {
            b.push_b(&-k);
            b.push_a(-s);
        }
        b.push_b(&-self.lead.clone());
        b.finish(self.m, self.n)
    }

    /// Re-normalizes the stored word; a fixed point for canonical input.
    pub fn canonicalize(&self) -> BsElt {
        let mut b = Builder::new(self.m, self.n);
        b.push_elt(self);
        b.finish(self.m, self.n)
    }

    pub fn is_identity(&self) -> bool {
        self.lead.is_zero() && self.syl.is_empty()
    }

    /// Membership in `<b>`.
    pub fn is_b_power(&self) -> bool {
        self.syl.is_empty()
    }

    /// Number of `a`-letters, signed sequence.
    pub fn a_signs(&self) -> Vec<i8> {
        self.syl.iter().map(|(s, _)| *s).collect()
    }

    /// Canonical key of the left coset modulo `<b>`: the stored word with the
    /// trailing `b`-power stripped.
    pub fn coset_key(&self) -> String {
        if self.syl.is_empty() {
            return "bs:e".to_string();
        }
        let mut out = format!("bs:{}", self.lead);
        for (i, (s, k)) in self.syl.iter().enumerate() {
            if i + 1 == self.syl.len() {
                out.push_str(&format!(";{}", s));
            } else {
                out.push_str(&format!(";{},{}", s, k));
            }
        }
        out
    }

    /// True when the stored data satisfies every canonical-form constraint.
    pub fn is_canonical(&self) -> bool {
        let bound = |sign: i8| -> BigInt {
            if sign > 0 {
                BigInt::from(self.m)
            } else {
                BigInt::from(self.n)
            }
        };
        if let Some((first_sign, _)) = self.syl.first() {
            if self.lead.is_negative() || self.lead >= bound(*first_sign) {
                return false;
            }
        }
        for i in 0..self.syl.len().saturating_sub(1) {
            let (sign, ref exp) = self.syl[i];
            let (next_sign, _) = self.syl[i + 1];
            if exp.is_negative() || *exp >= bound(next_sign) {
                return false;
            }
            if exp.is_zero() && next_sign == -sign {
                return false;
            }
        }
        true
    }
}

impl std::fmt::Display for BsElt {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        if !self.lead.is_zero() {
            parts.push(pow("b", &self.lead));
        }
        for (s, k) in &self.syl {
            parts.push(pow("a", &BigInt::from(*s)));
            if !k.is_zero() {
                parts.push(pow("b", k));
            }
        }
        if parts.is_empty() {
            return write!(f, "e");
        }
        write!(f, "{}", parts.join(" "))
    }
}

fn pow(name: &str, k: &BigInt) -> String {
    if *k == BigInt::from(1) {
        name.to_string()
    } else {
        format!("{}^{}", name, k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(m: u32, n: u32, tokens: &[(i8, i64)]) -> BsElt {
        // (0, k) stands for b^k, (sign, 0) for a^sign
        let mut x = BsElt::identity(m, n);
        for &(s, k) in tokens {
            let g = if s == 0 {
                BsElt::b_power(m, n, k)
            } else {
                let mut a = BsElt::gen_a(m, n);
                if s < 0 {
                    a = a.invert();
                }
                a
            };
            x = x.multiply(&g);
        }
        x
    }

    #[test]
    fn defining_relation() {
        // a^-1 b^2 a = b^3 in BS(2,3)
        let lhs = w(2, 3, &[(-1, 0), (0, 2), (1, 0)]);
        assert_eq!(lhs, BsElt::b_power(2, 3, 3));
    }

    #[test]
    fn b2_times_a_is_a_b3() {
        let lhs = BsElt::b_power(2, 3, 2).multiply(&BsElt::gen_a(2, 3));
        let rhs = BsElt::gen_a(2, 3).multiply(&BsElt::b_power(2, 3, 3));
        assert_eq!(lhs, rhs);
        assert!(lhs.is_canonical());
    }

    #[test]
    fn pinch_free_and_idempotent() {
        let x = w(2, 3, &[(0, 5), (1, 0), (0, 7), (-1, 0), (0, -2), (1, 0)]);
        assert!(x.is_canonical());
        assert_eq!(x.canonicalize(), x);
    }

    #[test]
    fn inverse_cancels() {
        for tokens in [
            vec![(1i8, 0i64), (0, 3), (-1, 0)],
            vec![(0, -4), (1, 0), (1, 0), (0, 1)],
            vec![(-1, 0), (0, 2), (1, 0), (0, 9)],
        ] {
            let x = w(2, 3, &tokens);
            assert!(x.multiply(&x.invert()).is_identity());
            assert!(x.invert().multiply(&x).is_identity());
        }
    }

    #[test]
    fn bs11_is_commutative() {
        let a = BsElt::gen_a(1, 1);
        let b = BsElt::gen_b(1, 1);
        assert_eq!(a.multiply(&b), b.multiply(&a));
    }

    #[test]
    fn coset_key_strips_trailing_power() {
        let g = w(2, 3, &[(1, 0), (0, 1)]); // a b
        let h = w(2, 3, &[(1, 0), (0, -5)]); // a b^-5
        assert_eq!(g.coset_key(), h.coset_key());
        assert_ne!(g.coset_key(), BsElt::gen_b(2, 3).coset_key());
        // b a keeps its nonzero lead (only b^2 a collapses through the
        // relation), so it represents a coset distinct from a<b>
        let ba = BsElt::gen_b(2, 3).multiply(&BsElt::gen_a(2, 3));
        assert!(ba.is_canonical());
        assert_ne!(ba.coset_key(), BsElt::gen_a(2, 3).coset_key());
        let b2a = BsElt::b_power(2, 3, 2).multiply(&BsElt::gen_a(2, 3));
        assert_eq!(b2a.coset_key(), BsElt::gen_a(2, 3).coset_key());
    }
}
