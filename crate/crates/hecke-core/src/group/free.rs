//! Freely reduced words in the free group on `a`, `b`.
//!
//! Included as a negative control: `<a>` is not almost normal in `F_2`, so
//! orbit enumerations against this family must hit their budgets.

use num_bigint::BigInt;
use num_traits::Zero;

pub const LETTER_A: u8 = 0;
pub const LETTER_B: u8 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeElt {
    /// Alternating runs `(letter, exponent)` with nonzero exponents.
    pub runs: Vec<(u8, BigInt)>,
}

impl FreeElt {
    pub fn identity() -> Self {
        FreeElt { runs: Vec::new() }
    }

    pub fn letter(letter: u8, exp: i64) -> Self {
        let mut out = FreeElt::identity();
        out.push_run(letter, BigInt::from(exp));
        out
    }

    fn push_run(&mut self, letter: u8, exp: BigInt) {
        if exp.is_zero() {
            return;
        }
        if let Some(last) = self.runs.last_mut() {
            if last.0 == letter {
                last.1 += exp;
                if last.1.is_zero() {
                    self.runs.pop();
                }
                return;
            }
        }
        self.runs.push((letter, exp));
    }

    pub fn multiply(&self, other: &FreeElt) -> FreeElt {
        let mut out = self.clone();
        for (letter, exp) in &other.runs {
            out.push_run(*letter, exp.clone());
        }
        out
    }

    pub fn invert(&self) -> FreeElt {
        FreeElt {
            runs: self
                .runs
                .iter()
                .rev()
                .map(|(l, e)| (*l, -e.clone()))
                .collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.runs.is_empty()
    }

    /// Membership in `<a>`.
    pub fn is_a_power(&self) -> bool {
        match self.runs.as_slice() {
            [] => true,
            [(letter, _)] => *letter == LETTER_A,
            _ => false,
        }
    }

    /// Canonical key of the left coset modulo `<a>`: the word with a trailing
    /// `a`-run stripped.
    pub fn coset_key(&self) -> String {
        let mut runs: &[(u8, BigInt)] = &self.runs;
        if let Some((letter, _)) = runs.last() {
            if *letter == LETTER_A {
                runs = &runs[..runs.len() - 1];
            }
        }
        let mut out = String::from("f:");
        for (letter, exp) in runs {
            let name = if *letter == LETTER_A { 'a' } else { 'b' };
            out.push_str(&format!("{}^{};", name, exp));
        }
        out
    }
}
