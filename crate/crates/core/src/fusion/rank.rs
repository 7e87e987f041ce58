//! Rank conditions on symbolic matrices and their ideals.

use std::collections::HashSet;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;
use crate::poly::{Monomial, MonomialOrder, Polynomial};
use crate::{QIdeal, QMatrix, QPoly, Rational};

/// Eigenvalue of a rank condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Eigen {
    Zero,
    Param,
}

/// `rank (A_p - e)^power <= max_rank`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankBound {
    pub p: usize,
    pub eigen: Eigen,
    pub power: u32,
    pub max_rank: usize,
}

/// Boxes in the first `c` columns of `nu`.
pub fn column_count(nu: &[usize], c: usize) -> usize {
    nu.iter().map(|&x| x.min(c)).sum()
}

pub fn rank_bounds(p: usize, eigen: Eigen, nu: &[usize]) -> Vec<RankBound> {
    let top = nu.iter().copied().max().unwrap_or(0);
    (1..=top)
        .map(|c| RankBound { p, eigen, power: c as u32, max_rank: p - column_count(nu, c).min(p) })
        .collect()
}

/// Which entries may serve as pivots in the Fitting-ideal reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PivotPolicy {
    /// Nonzero constants only: the reduction is exact.
    Units,
    /// Also monomials in the given variable; exact after saturating by that variable.
    UnitsAndParam(usize),
}

fn pivot_score(p: &QPoly, policy: PivotPolicy) -> Option<u32> {
    if p.is_zero() {
        return None;
    }
    if p.is_constant() {
        return Some(0);
    }
    if let PivotPolicy::UnitsAndParam(s) = policy {
        if p.nterms() == 1 {
            let (m, _) = p.terms().next().unwrap();
            if *m == Monomial::var(s, m.exp(s)) {
                return Some(m.exp(s) as u32);
            }
        }
    }
    None
}

fn normalize(p: QPoly) -> QPoly {
    p.monic(&MonomialOrder::DegRevLex)
}

/// Generators of the ideal of `k x k` minors of `m`, after eliminating pivots.
/// A unit ideal is returned as the single generator `1`.
pub fn fitting_generators(m: &QMatrix, k: usize, policy: PivotPolicy) -> Result<Vec<QPoly>, AlgebraError> {
    let ring = m.ring().clone();
    let mut rows: Vec<Vec<QPoly>> = (0..m.nrows()).map(|i| (0..m.ncols()).map(|j| m.get(i, j).clone()).collect()).collect();
    let mut k = k;
    loop {
        rows.retain(|r| r.iter().any(|e| !e.is_zero()));
        let ncols = rows.first().map_or(0, |r| r.len());
        let live: Vec<usize> = (0..ncols).filter(|&j| rows.iter().any(|r| !r[j].is_zero())).collect();
        if live.len() < ncols {
            rows = rows.into_iter().map(|r| live.iter().map(|&j| r[j].clone()).collect()).collect();
        }
        if k == 0 {
            return Ok(vec![Polynomial::one(&ring)]);
        }
        let ncols = rows.first().map_or(0, |r| r.len());
        if k > rows.len() || k > ncols {
            return Ok(Vec::new());
        }
        let mut best: Option<(u32, usize, usize, usize)> = None;
        for (i, r) in rows.iter().enumerate() {
            for (j, e) in r.iter().enumerate() {
                if let Some(sc) = pivot_score(e, policy) {
                    let weight = r.iter().filter(|x| !x.is_zero()).count() + rows.iter().filter(|x| !x[j].is_zero()).count();
                    if best.map_or(true, |b| (sc, weight) < (b.0, b.3)) {
                        best = Some((sc, i, j, weight));
                    }
                }
            }
        }
        let Some((sc, a, b, _)) = best else {
            let mm = QMatrix::from_rows(&ring, rows)?;
            let mut seen = HashSet::new();
            let mut out = Vec::new();
            for g in mm.minors(k)? {
                let g = normalize(g);
                if seen.insert(g.clone()) {
                    out.push(g);
                }
            }
            return Ok(out);
        };
        let piv = rows[a][b].clone();
        let mut next = Vec::with_capacity(rows.len() - 1);
        for (i, r) in rows.iter().enumerate() {
            if i == a {
                continue;
            }
            let f = &r[b];
            let mut nr = Vec::with_capacity(r.len() - 1);
            for (j, e) in r.iter().enumerate() {
                if j == b {
                    continue;
                }
                let v = if sc == 0 {
                    // exact Schur complement
                    let inv = Rational::one() / piv.constant_term();
                    if f.is_zero() || rows[a][j].is_zero() {
                        e.clone()
                    } else {
                        e - &(f * &rows[a][j]).scale(&inv)
                    }
                } else {
                    let t = &piv * e;
                    if f.is_zero() || rows[a][j].is_zero() {
                        t
                    } else {
                        t - f * &rows[a][j]
                    }
                };
                nr.push(v);
            }
            next.push(nr);
        }
        rows = next;
        k -= 1;
    }
}

/// Every `(r+1) x (r+1)` minor of `(A - e)^c` for each bound: the literal rank ideal.
pub fn rank_ideal(a: &QMatrix, e: &QPoly, nu: &[usize]) -> Result<Vec<QPoly>, AlgebraError> {
    let p = a.nrows();
    let shifted = a.shift(e)?;
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for b in rank_bounds(p, Eigen::Zero, nu) {
        let mc = shifted.pow(b.power)?;
        for g in mc.minors(b.max_rank + 1)? {
            let g = normalize(g);
            if seen.insert(g.clone()) {
                out.push(g);
            }
        }
    }
    Ok(out)
}

/// The rank conditions of one submatrix and eigenvalue, reduced by pivoting.
pub struct RankConditions {
    /// Generators forcing `rank <= r` for every power.
    pub upper: Vec<QPoly>,
    /// For each power with a nontrivial lower bound, generators of the ideal whose nonvanishing
    /// forces `rank >= r`.
    pub witnesses: Vec<Vec<QPoly>>,
}

pub fn rank_conditions(a: &QMatrix, e: &QPoly, nu: &[usize], policy: PivotPolicy) -> Result<RankConditions, AlgebraError> {
    let p = a.nrows();
    let shifted = a.shift(e)?;
    let mut upper = Vec::new();
    let mut witnesses = Vec::new();
    let mut seen = HashSet::new();
    let mut power = QMatrix::identity(a.ring(), p);
    for b in rank_bounds(p, Eigen::Zero, nu) {
        power = power.try_mul(&shifted)?;
        for g in fitting_generators(&power, b.max_rank + 1, policy)? {
            if seen.insert(g.clone()) {
                upper.push(g);
            }
        }
        if b.max_rank > 0 {
            let w = fitting_generators(&power, b.max_rank, policy)?;
            if !(w.len() == 1 && w[0].is_constant()) {
                witnesses.push(w);
            }
        }
    }
    Ok(RankConditions { upper, witnesses })
}

/// Rank over the fraction field of `R/P` by fraction-free elimination with entries reduced modulo `P`.
pub fn generic_rank(m: &QMatrix, prime: &QIdeal) -> Result<usize, AlgebraError> {
    let mut rows: Vec<Vec<QPoly>> = Vec::new();
    for i in 0..m.nrows() {
        let mut r = Vec::new();
        for j in 0..m.ncols() {
            r.push(prime.normal_form(m.get(i, j))?);
        }
        rows.push(r);
    }
    let mut rank = 0;
    loop {
        let mut best: Option<(usize, usize, usize)> = None;
        for (i, r) in rows.iter().enumerate() {
            for (j, e) in r.iter().enumerate() {
                if !e.is_zero() {
                    let cost = if e.is_constant() { 0 } else { e.nterms() };
                    if best.map_or(true, |b| cost < b.2) {
                        best = Some((i, j, cost));
                    }
                }
            }
        }
        let Some((a, b, _)) = best else { return Ok(rank) };
        rank += 1;
        let piv = rows[a][b].clone();
        let mut next = Vec::new();
        for (i, r) in rows.iter().enumerate() {
            if i == a {
                continue;
            }
            let f = r[b].clone();
            let mut nr = Vec::new();
            for (j, e) in r.iter().enumerate() {
                if j == b {
                    continue;
                }
                let v = if f.is_zero() { e.clone() } else { &piv * e - &f * &rows[a][j] };
                nr.push(prime.normal_form(&v)?);
            }
            next.push(nr);
        }
        rows = next;
    }
}

/// Partition whose first `c` columns hold `counts[c-1]` boxes.
pub fn partition_from_column_counts(counts: &[usize]) -> Option<Vec<usize>> {
    let mut cols = Vec::new();
    let mut prev = 0;
    for &k in counts {
        if k < prev {
            return None;
        }
        cols.push(k - prev);
        prev = k;
    }
    if cols.windows(2).any(|w| w[0] < w[1]) {
        return None;
    }
    // conjugate
    let len = cols.first().copied().unwrap_or(0);
    Some((0..len).map(|r| cols.iter().filter(|&&c| c > r).count()).collect())
}

/// Jordan type at eigenvalue `e` of the upper-left `p x p` block, generically on `V(P)`.
pub fn generic_jordan_type(a: &QMatrix, p: usize, e: &QPoly, prime: &QIdeal) -> Result<Vec<usize>, AlgebraError> {
    let block = a.leading_block(p)?.shift(e)?;
    let mut counts = Vec::new();
    let mut power = QMatrix::identity(a.ring(), p);
    let mut last = usize::MAX;
    for _ in 0..=p {
        power = power.try_mul(&block)?;
        let r = generic_rank(&power, prime)?;
        if r == last {
            break;
        }
        counts.push(p - r);
        last = r;
    }
    partition_from_column_counts(&counts).ok_or_else(|| AlgebraError::Invalid("generic ranks are not those of a Jordan form".into()))
}
