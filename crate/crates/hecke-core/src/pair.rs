//! Pair presentations: a group family instance together with its generating
//! sets, subgroup membership predicate, canonical coset keys and budgets.

use std::collections::HashMap;

use crate::error::GroupError;
use crate::group::{bs::BsElt, free, free::FreeElt, matrix::MatrixElt, wreath::WreathElt};
use crate::group::GroupElement;

/// Family selector with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// `SL(2, Z[1/S])` over `SL(2, Z)`.
    Sl2SIntegers { primes: Vec<u64> },
    /// `BS(m, n)` over `<b>`, relation `a^-1 b^m a = b^n`.
    BaumslagSolitar { m: u32, n: u32 },
    /// `Z/q wr Z` over the lamps at nonnegative positions.
    Lamplighter { lamp_order: u32 },
    /// Free group on two letters over `<a>`; not a Hecke pair.
    Free2,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Sl2SIntegers { .. } => "sl2_s_integers",
            Family::BaumslagSolitar { .. } => "baumslag_solitar",
            Family::Lamplighter { .. } => "lamplighter",
            Family::Free2 => "free2",
        }
    }
}

/// Enumeration budgets. Exceeding one is reported, never silently truncated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budgets {
    pub max_ball: usize,
    pub max_orbit: usize,
    pub max_radius: u32,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            max_ball: 200_000,
            max_orbit: 50_000,
            max_radius: 16,
        }
    }
}

#[derive(Debug, Clone)]
pub struct PairPresentation {
    family: Family,
    budgets: Budgets,
    tol: f64,
    /// Symmetric generating set of the ambient group, unit lengths,
    /// identity excluded, in a fixed order.
    gamma_gens: Vec<(String, GroupElement)>,
}

impl PairPresentation {
    pub fn new(family: Family, budgets: Budgets, tol: f64) -> Self {
        let gamma_gens = gamma_generators_for(&family);
        PairPresentation {
            family,
            budgets,
            tol,
            gamma_gens,
        }
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn budgets(&self) -> Budgets {
        self.budgets
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn identity(&self) -> GroupElement {
        match &self.family {
            Family::Sl2SIntegers { .. } => GroupElement::Matrix(MatrixElt::identity()),
            Family::BaumslagSolitar { m, n } => GroupElement::Bs(BsElt::identity(*m, *n)),
            Family::Lamplighter { lamp_order } => {
                GroupElement::Wreath(WreathElt::identity(*lamp_order))
            }
            Family::Free2 => GroupElement::Free(FreeElt::identity()),
        }
    }

    /// The declared symmetric generating set of the ambient group.
    pub fn gamma_generators(&self) -> &[(String, GroupElement)] {
        &self.gamma_gens
    }

    /// Reorders the ambient generating set; used to vary BFS discovery order.
    pub fn with_gamma_generator_rotation(mut self, offset: usize) -> Self {
        if !self.gamma_gens.is_empty() {
            let k = offset % self.gamma_gens.len();
            self.gamma_gens.rotate_left(k);
        }
        self
    }

    /// Symmetric generators of the subgroup, sufficient for its action at the
    /// given scale.
    ///
    /// The lamplighter subgroup is an infinite direct sum and has no finite
    /// generating set; lamps at positions `0..scale` generate its image on
    /// every ball of radius `scale`, because a lamp at position `y` fixes
    /// each coset whose shift is at most `y`. The other families ignore the
    /// scale.
    pub fn lambda_generators(&self, scale: u32) -> Vec<(String, GroupElement)> {
        match &self.family {
            Family::Sl2SIntegers { .. } => vec![
                ("T".into(), GroupElement::Matrix(MatrixElt::gen_t())),
                ("T^-1".into(), GroupElement::Matrix(MatrixElt::gen_t().invert())),
                ("S".into(), GroupElement::Matrix(MatrixElt::gen_s())),
                ("S^-1".into(), GroupElement::Matrix(MatrixElt::gen_s().invert())),
            ],
            Family::BaumslagSolitar { m, n } => vec![
                ("b".into(), GroupElement::Bs(BsElt::gen_b(*m, *n))),
                ("b^-1".into(), GroupElement::Bs(BsElt::gen_b(*m, *n).invert())),
            ],
            Family::Lamplighter { lamp_order } => {
                let q = *lamp_order;
                let mut out = Vec::new();
                for y in 0..i64::from(scale) {
                    out.push((
                        format!("t[{}]", y),
                        GroupElement::Wreath(WreathElt::lamp(q, y, 1)),
                    ));
                    if q > 2 {
                        out.push((
                            format!("t[{}]^-1", y),
                            GroupElement::Wreath(WreathElt::lamp(q, y, q - 1)),
                        ));
                    }
                }
                out
            }
            Family::Free2 => vec![
                ("a".into(), GroupElement::Free(FreeElt::letter(free::LETTER_A, 1))),
                ("a^-1".into(), GroupElement::Free(FreeElt::letter(free::LETTER_A, -1))),
            ],
        }
    }

    /// Subgroup membership oracle.
    pub fn in_lambda(&self, g: &GroupElement) -> bool {
        match (&self.family, g) {
            (Family::Sl2SIntegers { .. }, GroupElement::Matrix(x)) => x.is_integral(),
            (Family::BaumslagSolitar { .. }, GroupElement::Bs(x)) => x.is_b_power(),
            (Family::Lamplighter { .. }, GroupElement::Wreath(x)) => x.in_nonneg_lamps(),
            (Family::Free2, GroupElement::Free(x)) => x.is_a_power(),
            _ => panic!(
                "element of family {} queried against pair {}",
                g.family_name(),
                self.family.name()
            ),
        }
    }

    /// Canonical key of the left coset `g * Lambda`. Two elements have equal
    /// keys iff `in_lambda(g^-1 h)`; the generic membership route stays the
    /// oracle of record in tests.
    pub fn coset_key(&self, g: &GroupElement) -> String {
        match g {
            GroupElement::Matrix(x) => x.coset_key(),
            GroupElement::Bs(x) => x.coset_key(),
            GroupElement::Wreath(x) => x.coset_key(),
            GroupElement::Free(x) => x.coset_key(),
        }
    }

    /// Membership-oracle route for coset equality.
    pub fn same_coset(&self, g: &GroupElement, h: &GroupElement) -> Result<bool, GroupError> {
        Ok(self.in_lambda(&g.invert().multiply(h)?))
    }

    /// Word length of `g` over the ambient generators, by bounded
    /// bidirectional breadth-first search. `None` once the visited-state
    /// budget is exhausted.
    pub fn element_length(&self, g: &GroupElement, budget: usize) -> Option<u32> {
        if g.is_identity() {
            return Some(0);
        }
        let gens: Vec<&GroupElement> = self.gamma_gens.iter().map(|(_, e)| e).collect();
        // forward: products s_1..s_d from the identity (right multiplication);
        // backward: u^-1 g for words u (left division), so a node in both sets
        // at depths (d, k) witnesses g = u * s_1..s_d of length d + k.
        let mut fwd: HashMap<GroupElement, u32> = HashMap::new();
        let mut bwd: HashMap<GroupElement, u32> = HashMap::new();
        fwd.insert(self.identity(), 0);
        bwd.insert(g.clone(), 0);
        let mut fwd_frontier = vec![self.identity()];
        let mut bwd_frontier = vec![g.clone()];
        let (mut df, mut db) = (0u32, 0u32);
        let mut best: Option<u32> = None;
        let mut visited = 2usize;
        loop {
            // every still-undetected meeting value exceeds df + db
            if let Some(b) = best {
                if df + db >= b {
                    return Some(b);
                }
            }
            if fwd_frontier.is_empty() && bwd_frontier.is_empty() {
                return best;
            }
            let expand_fwd = !fwd_frontier.is_empty()
                && (bwd_frontier.is_empty() || fwd.len() <= bwd.len());
            let (frontier, this, other) = if expand_fwd {
                (&mut fwd_frontier, &mut fwd, &bwd)
            } else {
                (&mut bwd_frontier, &mut bwd, &fwd)
            };
            let mut next = Vec::new();
            let mut level = 0;
            for x in frontier.drain(..) {
                let depth = this[&x];
                level = depth + 1;
                for gen in &gens {
                    let y = if expand_fwd {
                        x.multiply(gen).expect("family-consistent generator")
                    } else {
                        gen.invert().multiply(&x).expect("family-consistent generator")
                    };
                    if this.contains_key(&y) {
                        continue;
                    }
                    if let Some(&d) = other.get(&y) {
                        let candidate = depth + 1 + d;
                        best = Some(best.map_or(candidate, |b| b.min(candidate)));
                    }
                    visited += 1;
                    if visited > budget {
                        return None;
                    }
                    this.insert(y.clone(), depth + 1);
                    next.push(y);
                }
            }
            *frontier = next;
            if expand_fwd {
                df = level;
            } else {
                db = level;
            }
        }
    }
}

fn gamma_generators_for(family: &Family) -> Vec<(String, GroupElement)> {
    match family {
        Family::Sl2SIntegers { primes } => {
            let mut out = vec![
                ("T".to_string(), GroupElement::Matrix(MatrixElt::gen_t())),
                ("T^-1".to_string(), GroupElement::Matrix(MatrixElt::gen_t().invert())),
                ("S".to_string(), GroupElement::Matrix(MatrixElt::gen_s())),
                ("S^-1".to_string(), GroupElement::Matrix(MatrixElt::gen_s().invert())),
            ];
            for &p in primes {
                out.push((format!("D{}", p), GroupElement::Matrix(MatrixElt::gen_d(p))));
                out.push((
                    format!("D{}^-1", p),
                    GroupElement::Matrix(MatrixElt::gen_d(p).invert()),
                ));
            }
            out
        }
        Family::BaumslagSolitar { m, n } => vec![
            ("a".to_string(), GroupElement::Bs(BsElt::gen_a(*m, *n))),
            ("a^-1".to_string(), GroupElement::Bs(BsElt::gen_a(*m, *n).invert())),
            ("b".to_string(), GroupElement::Bs(BsElt::gen_b(*m, *n))),
            ("b^-1".to_string(), GroupElement::Bs(BsElt::gen_b(*m, *n).invert())),
        ],
        Family::Lamplighter { lamp_order } => {
            let q = *lamp_order;
            let mut out = vec![(
                "t".to_string(),
                GroupElement::Wreath(WreathElt::lamp(q, 0, 1)),
            )];
            if q > 2 {
                out.push((
                    "t^-1".to_string(),
                    GroupElement::Wreath(WreathElt::lamp(q, 0, q - 1)),
                ));
            }
            out.push(("s".to_string(), GroupElement::Wreath(WreathElt::shift_by(q, 1))));
            out.push((
                "s^-1".to_string(),
                GroupElement::Wreath(WreathElt::shift_by(q, -1)),
            ));
            out
        }
        Family::Free2 => vec![
            ("a".to_string(), GroupElement::Free(FreeElt::letter(free::LETTER_A, 1))),
            ("a^-1".to_string(), GroupElement::Free(FreeElt::letter(free::LETTER_A, -1))),
            ("b".to_string(), GroupElement::Free(FreeElt::letter(free::LETTER_B, 1))),
            ("b^-1".to_string(), GroupElement::Free(FreeElt::letter(free::LETTER_B, -1))),
        ],
    }
}
