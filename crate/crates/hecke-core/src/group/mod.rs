//! Element arithmetic for the built-in group families.
//!
//! All values are canonical immediately after every operation, so structural
//! equality is group-element equality and hashing is sound.

pub mod bs;
pub mod free;
pub mod matrix;
pub mod wreath;

pub use bs::BsElt;
pub use free::FreeElt;
pub use matrix::MatrixElt;
pub use wreath::WreathElt;

use crate::error::GroupError;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupElement {
    Matrix(MatrixElt),
    Bs(BsElt),
    Wreath(WreathElt),
    Free(FreeElt),
}

impl GroupElement {
    pub fn family_name(&self) -> &'static str {
        match self {
            GroupElement::Matrix(_) => "sl2_s_integers",
            GroupElement::Bs(_) => "baumslag_solitar",
            GroupElement::Wreath(_) => "lamplighter",
            GroupElement::Free(_) => "free2",
        }
    }

    pub fn multiply(&self, other: &GroupElement) -> Result<GroupElement, GroupError> {
        match (self, other) {
            (GroupElement::Matrix(x), GroupElement::Matrix(y)) => {
                Ok(GroupElement::Matrix(x.multiply(y)))
            }
            (GroupElement::Bs(x), GroupElement::Bs(y)) => {
                if x.m != y.m || x.n != y.n {
                    return Err(GroupError::FamilyMismatch("baumslag_solitar", "baumslag_solitar"));
                }
                Ok(GroupElement::Bs(x.multiply(y)))
            }
            (GroupElement::Wreath(x), GroupElement::Wreath(y)) => {
                if x.q != y.q {
                    return Err(GroupError::FamilyMismatch("lamplighter", "lamplighter"));
                }
                Ok(GroupElement::Wreath(x.multiply(y)))
            }
            (GroupElement::Free(x), GroupElement::Free(y)) => {
                Ok(GroupElement::Free(x.multiply(y)))
            }
            (x, y) => Err(GroupError::FamilyMismatch(x.family_name(), y.family_name())),
        }
    }

    pub fn invert(&self) -> GroupElement {
        match self {
            GroupElement::Matrix(x) => GroupElement::Matrix(x.invert()),
            GroupElement::Bs(x) => GroupElement::Bs(x.invert()),
            GroupElement::Wreath(x) => GroupElement::Wreath(x.invert()),
            GroupElement::Free(x) => GroupElement::Free(x.invert()),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            GroupElement::Matrix(x) => x.is_identity(),
            GroupElement::Bs(x) => x.is_identity(),
            GroupElement::Wreath(x) => x.is_identity(),
            GroupElement::Free(x) => x.is_identity(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_mismatch_is_an_error() {
        let m = GroupElement::Matrix(MatrixElt::identity());
        let b = GroupElement::Bs(BsElt::identity(2, 3));
        assert!(matches!(
            m.multiply(&b),
            Err(GroupError::FamilyMismatch(_, _))
        ));
        let b23 = GroupElement::Bs(BsElt::gen_a(2, 3));
        let b12 = GroupElement::Bs(BsElt::gen_a(1, 2));
        assert!(b23.multiply(&b12).is_err());
    }

    #[test]
    fn identity_is_neutral_across_families() {
        for g in [
            GroupElement::Matrix(MatrixElt::gen_d(2)),
            GroupElement::Bs(BsElt::gen_a(2, 3)),
            GroupElement::Wreath(WreathElt::shift_by(2, 1)),
            GroupElement::Free(FreeElt::letter(free::LETTER_B, 2)),
        ] {
            let e = g.multiply(&g.invert()).unwrap();
            assert!(e.is_identity());
            assert_eq!(e.multiply(&g).unwrap(), g);
            assert_eq!(g.multiply(&e).unwrap(), g);
        }
    }
}
