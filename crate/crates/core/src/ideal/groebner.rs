//! Buchberger's algorithm with the Gebauer-Moeller criteria.

use std::cmp::Ordering;

use crate::error::AlgebraError;
use crate::poly::{ExactField, Monomial, MonomialOrder, Polynomial, RingRef};

/// Default cap on the number of S-polynomial reductions per basis computation.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

type Terms<C> = Vec<(Monomial, C)>;

struct Elem<C> {
    terms: Terms<C>,
    lead: Monomial,
    mask: u32,
    sugar: u64,
    active: bool,
}

#[derive(Clone)]
struct Pair {
    i: usize,
    /// `None` marks an input generator waiting to be reduced and inserted.
    j: Option<usize>,
    lcm: Monomial,
    sugar: u64,
}

struct Engine<'a, C> {
    order: &'a MonomialOrder,
    elems: Vec<Elem<C>>,
    inputs: Vec<Terms<C>>,
    pairs: Vec<Pair>,
    budget: u64,
    used: u64,
}

fn sugar_of(order: &MonomialOrder, m: &Monomial) -> u64 {
    match order {
        MonomialOrder::WeightedDegRevLex(w) => m.weighted_degree(w),
        _ => m.degree() as u64,
    }
}

fn to_terms<C: ExactField>(p: &Polynomial<C>, order: &MonomialOrder) -> Terms<C> {
    p.sorted_terms(order)
}

/// `p[skip_p..] - c * m * g[1..]`: the leading terms are assumed to cancel.
fn sub_scaled<C: ExactField>(order: &MonomialOrder, p: &[(Monomial, C)], c: &C, m: &Monomial, g: &[(Monomial, C)]) -> Terms<C> {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let (mut a, mut b) = (0, 0);
    let g = &g[1..];
    while a < p.len() || b < g.len() {
        if b == g.len() {
            out.extend_from_slice(&p[a..]);
            break;
        }
        let gm = g[b].0.mul(m);
        if a == p.len() {
            out.push((gm, -(c.clone() * g[b].1.clone())));
            b += 1;
            continue;
        }
        match order.cmp(&p[a].0, &gm) {
            Ordering::Greater => {
                out.push(p[a].clone());
                a += 1;
            }
            Ordering::Less => {
                out.push((gm, -(c.clone() * g[b].1.clone())));
                b += 1;
            }
            Ordering::Equal => {
                let v = p[a].1.clone() - c.clone() * g[b].1.clone();
                if !v.is_zero() {
                    out.push((gm, v));
                }
                a += 1;
                b += 1;
            }
        }
    }
    out
}

fn make_monic<C: ExactField>(t: &mut Terms<C>) {
    if let Some((_, c)) = t.first() {
        if !c.is_one() {
            let inv = C::one() / c.clone();
            for x in t.iter_mut() {
                x.1 = x.1.clone() * inv.clone();
            }
        }
    }
}

impl<'a, C: ExactField> Engine<'a, C> {
    fn find_reducer(&self, m: &Monomial, skip: Option<usize>) -> Option<usize> {
        let mm = m.support_mask();
        let mut best: Option<usize> = None;
        for (n, e) in self.elems.iter().enumerate() {
            if !e.active || Some(n) == skip || e.mask & !mm != 0 || !e.lead.divides(m) {
                continue;
            }
            if best.map_or(true, |b| self.elems[b].terms.len() > e.terms.len()) {
                best = Some(n);
            }
        }
        best
    }

    /// Reduce until the leading term is irreducible; with `full`, reduce every term.
    fn reduce(&self, mut p: Terms<C>, full: bool, skip: Option<usize>) -> Terms<C> {
        let mut done: Terms<C> = Vec::new();
        let mut start = 0;
        while start < p.len() {
            let (lm, lc) = (p[start].0, p[start].1.clone());
            match self.find_reducer(&lm, skip) {
                Some(g) => {
                    let e = &self.elems[g];
                    let q = lm.div(&e.lead).expect("divides");
                    p = sub_scaled(self.order, &p[start + 1..], &lc, &q, &e.terms);
                    start = 0;
                }
                None => {
                    if !full {
                        break;
                    }
                    done.push(p[start].clone());
                    start += 1;
                }
            }
        }
        if full {
            done
        } else {
            p.drain(..start);
            p
        }
    }

    fn spoly(&self, i: usize, j: usize, lcm: &Monomial) -> Terms<C> {
        let (a, b) = (&self.elems[i], &self.elems[j]);
        let ma = lcm.div(&a.lead).expect("lcm");
        let mb = lcm.div(&b.lead).expect("lcm");
        let pa: Terms<C> = a.terms[1..].iter().map(|(m, c)| (m.mul(&ma), c.clone())).collect();
        sub_scaled(self.order, &pa, &C::one(), &mb, &b.terms)
    }

    fn insert(&mut self, mut t: Terms<C>, sugar: u64) {
        make_monic(&mut t);
        let lead = t[0].0;
        let h = self.elems.len();
        self.elems.push(Elem { mask: lead.support_mask(), lead, terms: t, sugar, active: true });
        self.update(h);
    }

    fn update(&mut self, h: usize) {
        let lh = self.elems[h].lead;
        let sh = self.elems[h].sugar;
        let mut cand: Vec<(usize, Monomial, bool)> = Vec::new();
        for (g, e) in self.elems.iter().enumerate() {
            if g != h && e.active {
                cand.push((g, e.lead.lcm(&lh), e.lead.coprime(&lh)));
            }
        }
        // chain criterion among the new pairs
        let mut keep: Vec<(usize, Monomial, bool)> = Vec::new();
        let mut rest = cand;
        while let Some((g, l, cop)) = rest.pop() {
            let dominated = !cop && rest.iter().chain(keep.iter()).any(|(_, l2, _)| l2.divides(&l));
            if !dominated {
                keep.push((g, l, cop));
            }
        }
        // old pairs made redundant by h
        self.pairs.retain(|p| {
            let Some(j) = p.j else { return true };
            if !lh.divides(&p.lcm) {
                return true;
            }
            let li = self.elems[p.i].lead.lcm(&lh);
            let lj = self.elems[j].lead.lcm(&lh);
            li == p.lcm || lj == p.lcm
        });
        for (g, l, cop) in keep {
            if cop {
                continue;
            }
            let e = &self.elems[g];
            let sg = e.sugar + sugar_of(self.order, &l) - sugar_of(self.order, &e.lead);
            let s2 = sh + sugar_of(self.order, &l) - sugar_of(self.order, &lh);
            self.pairs.push(Pair { i: g, j: Some(h), lcm: l, sugar: sg.max(s2) });
        }
        for g in 0..h {
            if self.elems[g].active && lh.divides(&self.elems[g].lead) {
                self.elems[g].active = false;
            }
        }
    }

    fn pick(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let mut best = 0;
        for n in 1..self.pairs.len() {
            let (a, b) = (&self.pairs[n], &self.pairs[best]);
            // smallest lcm first; sugar alone lets coefficients explode on some inputs
            let c = self.order.cmp(&a.lcm, &b.lcm).then_with(|| a.sugar.cmp(&b.sugar));
            if c == Ordering::Less {
                best = n;
            }
        }
        Some(self.pairs.swap_remove(best))
    }

    fn run(&mut self) -> Result<(), AlgebraError> {
        while let Some(p) = self.pick() {
            self.used += 1;
            if self.used > self.budget {
                return Err(AlgebraError::BudgetExceeded(self.budget));
            }
            let t = match p.j {
                None => std::mem::take(&mut self.inputs[p.i]),
                Some(j) => self.spoly(p.i, j, &p.lcm),
            };
            let r = self.reduce(t, true, None);
            if !r.is_empty() {
                if r[0].0.is_one() {
                    // unit ideal: stop early
                    for e in self.elems.iter_mut() {
                        e.active = false;
                    }
                    self.pairs.clear();
                    self.insert(r, 0);
                    return Ok(());
                }
                self.insert(r, p.sugar);
            }
        }
        Ok(())
    }
}

/// Reduced Groebner basis, monic, sorted by decreasing leading monomial.
pub fn groebner_basis<C: ExactField>(
    ring: &RingRef,
    gens: &[Polynomial<C>],
    order: &MonomialOrder,
    budget: u64,
) -> Result<Vec<Polynomial<C>>, AlgebraError> {
    let mut eng = Engine { order, elems: Vec::new(), inputs: Vec::new(), pairs: Vec::new(), budget, used: 0 };
    for g in gens {
        if g.is_zero() {
            continue;
        }
        if **g.ring() != **ring {
            return Err(AlgebraError::RingMismatch);
        }
        let t = to_terms(g, order);
        let sugar = t.iter().map(|(m, _)| sugar_of(order, m)).max().unwrap_or(0);
        let lcm = t[0].0;
        eng.pairs.push(Pair { i: eng.inputs.len(), j: None, lcm, sugar });
        eng.inputs.push(t);
    }
    eng.run()?;
    // interreduce
    let act: Vec<usize> = (0..eng.elems.len()).filter(|&n| eng.elems[n].active).collect();
    for &n in &act {
        let t = std::mem::take(&mut eng.elems[n].terms);
        let lead = t[0].clone();
        let tail = eng.reduce(t[1..].to_vec(), true, Some(n));
        let mut full = vec![lead];
        full.extend(tail);
        make_monic(&mut full);
        eng.elems[n].terms = full;
    }
    let mut out: Vec<Terms<C>> = act.into_iter().map(|n| std::mem::take(&mut eng.elems[n].terms)).collect();
    out.sort_by(|a, b| order.cmp(&b[0].0, &a[0].0));
    Ok(out.into_iter().map(|t| Polynomial::from_terms(ring, t)).collect())
}

/// Remainder of `f` modulo a Groebner basis `gb` under `order`.
pub fn normal_form<C: ExactField>(f: &Polynomial<C>, gb: &[Polynomial<C>], order: &MonomialOrder) -> Polynomial<C> {
    let eng = Engine {
        order,
        elems: gb
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| {
                let mut terms = to_terms(g, order);
                make_monic(&mut terms);
                let lead = terms[0].0;
                Elem { mask: lead.support_mask(), lead, terms, sugar: 0, active: true }
            })
            .collect(),
        inputs: Vec::new(),
        pairs: Vec::new(),
        budget: 0,
        used: 0,
    };
    let r = eng.reduce(to_terms(f, order), true, None);
    Polynomial::from_terms(f.ring(), r)
}
