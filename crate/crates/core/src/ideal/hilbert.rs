//! Hilbert series numerators of monomial ideals, and the dimension and degree they determine.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::poly::Monomial;

/// Numerator `Q(t)` of the Hilbert series `Q(t) / (1-t)^n` of `k[x]/(gens)`, coefficients by degree.
pub fn hilbert_numerator(gens: &[Monomial]) -> Vec<BigInt> {
    let mut g = gens.to_vec();
    minimize(&mut g);
    let mut q = numerator_rec(g);
    while q.len() > 1 && q.last().map_or(false, |c| c.is_zero()) {
        q.pop();
    }
    q
}

fn minimize(g: &mut Vec<Monomial>) {
    g.sort_by_key(|m| m.degree());
    g.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(g.len());
    for m in g.iter() {
        if !out.iter().any(|o| o.divides(m)) {
            out.push(*m);
        }
    }
    *g = out;
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r[i + j] += x * y;
        }
    }
    r
}

fn one_minus_t_pow(d: u32) -> Vec<BigInt> {
    let mut r = vec![BigInt::zero(); d as usize + 1];
    r[0] = BigInt::one();
    r[d as usize] -= BigInt::one();
    r
}

fn numerator_rec(g: Vec<Monomial>) -> Vec<BigInt> {
    if g.is_empty() {
        return vec![BigInt::one()];
    }
    if g.iter().any(|m| m.is_one()) {
        return vec![BigInt::zero()];
    }
    // pairwise coprime generators give a complete intersection
    let mut seen = 0u32;
    let mut coprime = true;
    for m in &g {
        let s = m.support_mask();
        if s & seen != 0 {
            coprime = false;
            break;
        }
        seen |= s;
    }
    if coprime {
        return g.iter().fold(vec![BigInt::one()], |acc, m| poly_mul(&acc, &one_minus_t_pow(m.degree())));
    }
    // pivot on the variable shared by the most generators
    let mut count = [0usize; crate::poly::MAX_VARS];
    for m in &g {
        for (n, c) in count.iter_mut().enumerate() {
            if m.exp(n) > 0 {
                *c += 1;
            }
        }
    }
    let x = (0..crate::poly::MAX_VARS).max_by_key(|&n| count[n]).unwrap();
    let xm = Monomial::var(x, 1);
    // I + (x)
    let mut plus: Vec<Monomial> = g.iter().filter(|m| m.exp(x) == 0).copied().collect();
    plus.push(xm);
    minimize(&mut plus);
    // I : x
    let mut colon: Vec<Monomial> = g.iter().map(|m| if m.exp(x) > 0 { m.with_exp(x, m.exp(x) - 1) } else { *m }).collect();
    minimize(&mut colon);
    let a = numerator_rec(plus);
    let b = numerator_rec(colon);
    let mut r = vec![BigInt::zero(); a.len().max(b.len() + 1)];
    for (i, c) in a.iter().enumerate() {
        r[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        r[i + 1] += c;
    }
    r
}

/// Split `Q(t) = (1-t)^d h(t)` with `h(1) != 0`. Returns `(d, h)`; `None` for `Q = 0`.
pub fn strip_one_minus_t(q: &[BigInt]) -> Option<(usize, Vec<BigInt>)> {
    if q.iter().all(|c| c.is_zero()) {
        return None;
    }
    let mut h = q.to_vec();
    let mut d = 0;
    loop {
        let at_one: BigInt = h.iter().sum();
        if !at_one.is_zero() {
            return Some((d, h));
        }
        // divide by (1 - t): h = (1-t) g  =>  g_k = sum_{i<=k} h_i
        let mut g = Vec::with_capacity(h.len() - 1);
        let mut acc = BigInt::zero();
        for c in &h[..h.len() - 1] {
            acc += c;
            g.push(acc.clone());
        }
        h = g;
        d += 1;
    }
}

/// `(dimension, degree)` of `k[x_1..x_n]/I` from the leading monomials of a Groebner basis.
pub fn dimension_degree(leads: &[Monomial], nvars: usize) -> Option<(usize, u64)> {
    let q = hilbert_numerator(leads);
    let (d, h) = strip_one_minus_t(&q)?;
    let deg: BigInt = h.iter().sum();
    assert!(deg.is_positive(), "degree must be positive");
    Some((nvars - d, u64::try_from(deg).expect("degree fits in u64")))
}

/// Size of a largest set of variables containing the support of no leading monomial.
pub fn max_independent_set(leads: &[Monomial], nvars: usize) -> Option<usize> {
    if leads.iter().any(|m| m.is_one()) {
        return None;
    }
    let masks: Vec<u32> = leads.iter().map(|m| m.support_mask()).collect();
    let mut best = 0;
    fn rec(v: usize, n: usize, set: u32, size: usize, masks: &[u32], best: &mut usize) {
        if size + (n - v) <= *best {
            return;
        }
        if v == n {
            *best = size;
            return;
        }
        let with = set | (1 << v);
        if masks.iter().all(|&m| m & !with != 0) {
            rec(v + 1, n, with, size + 1, masks, best);
        }
        rec(v + 1, n, set, size, masks, best);
    }
    rec(0, nvars, 0, 0, &masks, &mut best);
    Some(best)
}
