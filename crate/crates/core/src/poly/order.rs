//! Monomial orders.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::poly::monomial::{Monomial, MAX_VARS};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Lexicographic with variable 0 largest.
    Lex,
    /// Graded reverse lexicographic.
    DegRevLex,
    /// Weighted degree, ties broken reverse lexicographically.
    WeightedDegRevLex(Arc<[u32]>),
    /// Block order: the masked variables are compared first (degrevlex within the block), then the rest.
    Elimination(u32),
}

fn revlex(a: &Monomial, b: &Monomial, mask: u32) -> Ordering {
    let (ea, eb) = (a.exps(), b.exps());
    for n in (0..MAX_VARS).rev() {
        if mask & (1 << n) == 0 {
            continue;
        }
        if ea[n] != eb[n] {
            return eb[n].cmp(&ea[n]);
        }
    }
    Ordering::Equal
}

fn masked_degree(a: &Monomial, mask: u32) -> u32 {
    let e = a.exps();
    (0..MAX_VARS).filter(|n| mask & (1 << n) != 0).map(|n| e[n] as u32).sum()
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.exps().cmp(b.exps()),
            MonomialOrder::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| revlex(a, b, u32::MAX)),
            MonomialOrder::WeightedDegRevLex(w) => a
                .weighted_degree(w)
                .cmp(&b.weighted_degree(w))
                .then_with(|| revlex(a, b, u32::MAX)),
            MonomialOrder::Elimination(mask) => {
                let m = *mask;
                masked_degree(a, m)
                    .cmp(&masked_degree(b, m))
                    .then_with(|| revlex(a, b, m))
                    .then_with(|| masked_degree(a, !m).cmp(&masked_degree(b, !m)))
                    .then_with(|| revlex(a, b, !m))
            }
        }
    }

    pub fn elimination(vars: &[usize]) -> Self {
        MonomialOrder::Elimination(vars.iter().fold(0, |m, &v| m | (1 << v)))
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::DegRevLex => "degrevlex",
            MonomialOrder::WeightedDegRevLex(_) => "wdegrevlex",
            MonomialOrder::Elimination(_) => "elim",
        }
    }
}
