//! Restricted wreath products `F wr Z` with `F = Z/q` cyclic.
//!
//! An element is a pair `(f, k)`: a finitely supported lamp configuration
//! `f: Z -> Z/q` and an integer shift. The product follows the semidirect
//! rule `(f, k)(f', k') = (f + k.f', k + k')` where `(k.f')(x) = f'(x - k)`.

use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WreathElt {
    pub q: u32,
    /// Nonzero lamp values, position -> value in `1..q`.
    pub lamps: BTreeMap<i64, u32>,
    pub shift: i64,
}

impl WreathElt {
    pub fn identity(q: u32) -> Self {
        WreathElt {
            q,
            lamps: BTreeMap::new(),
            shift: 0,
        }
    }

    /// Lamp generator: toggles position `pos` by `value`.
    pub fn lamp(q: u32, pos: i64, value: u32) -> Self {
        let mut lamps = BTreeMap::new();
        let v = value % q;
        if v != 0 {
            lamps.insert(pos, v);
        }
        WreathElt { q, lamps, shift: 0 }
    }

    /// Shift generator `(0, k)`.
    pub fn shift_by(q: u32, k: i64) -> Self {
        WreathElt {
            q,
            lamps: BTreeMap::new(),
            shift: k,
        }
    }

    pub fn multiply(&self, other: &WreathElt) -> WreathElt {
        let mut lamps = self.lamps.clone();
        for (&pos, &v) in &other.lamps {
            let p = pos + self.shift;
            let entry = lamps.entry(p).or_insert(0);
            *entry = (*entry + v) % self.q;
            if *entry == 0 {
                lamps.remove(&p);
            }
        }
        WreathElt {
            q: self.q,
            lamps,
            shift: self.shift + other.shift,
        }
    }

    pub fn invert(&self) -> WreathElt {
        let mut lamps = BTreeMap::new();
        for (&pos, &v) in &self.lamps {
            lamps.insert(pos - self.shift, (self.q - v) % self.q);
        }
        WreathElt {
            q: self.q,
            lamps,
            shift: -self.shift,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.shift == 0 && self.lamps.is_empty()
    }

    /// Membership in the subgroup of lamp configurations supported on
    /// nonnegative positions with zero shift.
    pub fn in_nonneg_lamps(&self) -> bool {
        self.shift == 0 && self.lamps.keys().all(|&p| p >= 0)
    }

    /// Canonical key of the left coset: the shift together with the lamp
    /// values strictly below it. Right multiplication by the subgroup only
    /// alters lamps at positions `>= shift`.
    pub fn coset_key(&self) -> String {
        let mut out = format!("w:{}", self.shift);
        for (&pos, &v) in self.lamps.range(..self.shift) {
            out.push_str(&format!(";{}:{}", pos, v));
        }
        out
    }
}

impl std::fmt::Display for WreathElt {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_identity() {
            return write!(f, "e");
        }
        let lamps: Vec<String> = self
            .lamps
            .iter()
            .map(|(p, v)| format!("{}:{}", p, v))
            .collect();
        write!(f, "([{}], {})", lamps.join(" "), self.shift)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn semidirect_product_rule() {
        // (d0, 1) * (d0, 0) = (d0 + d1, 1) over Z/2
        let x = WreathElt::lamp(2, 0, 1).multiply(&WreathElt::shift_by(2, 1));
        let y = WreathElt::lamp(2, 0, 1);
        let p = x.multiply(&y);
        let mut expected = BTreeMap::new();
        expected.insert(0, 1);
        expected.insert(1, 1);
        assert_eq!(p.lamps, expected);
        assert_eq!(p.shift, 1);
    }

    #[test]
    fn inverse_shifts_lamp() {
        // (d0, 1)^-1 = (d_{-1}, -1) over Z/2
        let x = WreathElt::lamp(2, 0, 1).multiply(&WreathElt::shift_by(2, 1));
        let inv = x.invert();
        assert_eq!(inv.shift, -1);
        assert_eq!(inv.lamps.get(&-1), Some(&1));
        assert!(x.multiply(&inv).is_identity());
        assert!(inv.multiply(&x).is_identity());
    }

    #[test]
    fn lamp_values_wrap_mod_q() {
        let t = WreathElt::lamp(3, 0, 1);
        let t3 = t.multiply(&t).multiply(&t);
        assert!(t3.is_identity());
    }

    #[test]
    fn subgroup_membership_by_support() {
        assert!(WreathElt::lamp(2, 3, 1).in_nonneg_lamps());
        assert!(!WreathElt::lamp(2, -1, 1).in_nonneg_lamps());
        assert!(!WreathElt::shift_by(2, 1).in_nonneg_lamps());
    }

    #[test]
    fn coset_key_ignores_lamps_at_or_above_shift() {
        let s2 = WreathElt::shift_by(2, 2);
        let with_high_lamp = s2.multiply(&WreathElt::lamp(2, 0, 1)); // lamp lands at 2
        assert_eq!(s2.coset_key(), with_high_lamp.coset_key());
        let ts2 = WreathElt::lamp(2, 0, 1).multiply(&s2);
        assert_ne!(s2.coset_key(), ts2.coset_key());
    }
}
