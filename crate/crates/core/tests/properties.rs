use std::cmp::Ordering;

use mvfusion::corpus;
use mvfusion::fusion::{fuse, FusionOptions};
use mvfusion::ideal::{groebner_basis, Ideal, DEFAULT_BUDGET};
use mvfusion::poly::{bareiss_determinant, Monomial, MonomialOrder, Polynomial, Ring, RingRef, SymbolicMatrix};
use mvfusion::{QIdeal, QMatrix, QPoly, Rational, Tableau};
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn xyz() -> RingRef {
    Ring::with_names(&["x", "y", "z"]).unwrap()
}

prop_compose! {
    fn monomial(nvars: usize, max_deg: u16)(e in prop::collection::vec(0..=max_deg, nvars)) -> Monomial {
        Monomial::from_exps(&e)
    }
}

prop_compose! {
    fn poly_terms(nvars: usize, max_deg: u16, max_terms: usize)
        (terms in prop::collection::vec((monomial(nvars, max_deg), -4i64..=4), 1..=max_terms)) -> Vec<(Monomial, i64)> {
        terms
    }
}

fn build(ring: &RingRef, terms: &[(Monomial, i64)]) -> QPoly {
    Polynomial::from_terms(ring, terms.iter().map(|(m, c)| (*m, q(*c))))
}

fn random_poly(rng: &mut ChaCha8Rng, ring: &RingRef, nvars: usize, max_deg: u16, nterms: usize) -> QPoly {
    let mut p = Polynomial::zero(ring);
    for _ in 0..nterms {
        let e: Vec<u16> = (0..nvars).map(|_| rng.gen_range(0..=max_deg)).collect();
        let c = rng.gen_range(-3i64..=3);
        p.add_term(Monomial::from_exps(&e), q(c));
    }
    p
}

fn random_ideal(rng: &mut ChaCha8Rng, ring: &RingRef, n: usize) -> QIdeal {
    let gens = (0..n).map(|_| random_poly(rng, ring, 3, 2, 2)).filter(|p| !p.is_zero()).collect();
    Ideal::new(ring, gens)
}

const ORDERS: fn() -> Vec<MonomialOrder> = || {
    vec![
        MonomialOrder::Lex,
        MonomialOrder::DegRevLex,
        MonomialOrder::WeightedDegRevLex(vec![3, 1, 2, 1].into()),
        MonomialOrder::elimination(&[1]),
    ]
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly_terms(3, 3, 5), b in poly_terms(3, 3, 5), c in poly_terms(3, 3, 5),
                   pt in prop::collection::vec(-5i64..=5, 3)) {
        let r = xyz();
        let (a, b, c) = (build(&r, &a), build(&r, &b), build(&r, &c));
        prop_assert!((a.clone() + (-a.clone())).is_zero());
        prop_assert_eq!((a.clone() + b.clone()) * c.clone(), a.clone() * c.clone() + b.clone() * c.clone());
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        let d = (a.clone() * b.clone()).derivative(0);
        prop_assert_eq!(d, a.derivative(0) * b.clone() + a.clone() * b.derivative(0));
        let pt: Vec<Rational> = pt.into_iter().map(q).collect();
        prop_assert_eq!((a.clone() * b.clone()).evaluate(&pt), a.evaluate(&pt) * b.evaluate(&pt));
        let back = Polynomial::parse(&r, &a.to_string()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn order_axioms(a in monomial(4, 3), b in monomial(4, 3), c in monomial(4, 3)) {
        for o in ORDERS() {
            prop_assert_eq!(o.cmp(&a, &b), o.cmp(&b, &a).reverse());
            prop_assert_eq!(o.cmp(&a, &b) == Ordering::Equal, a == b);
            prop_assert_eq!(o.cmp(&a, &b), o.cmp(&a.mul(&c), &b.mul(&c)));
            prop_assert_ne!(o.cmp(&Monomial::one(), &a), Ordering::Greater);
            if o.cmp(&a, &b) == Ordering::Less && o.cmp(&b, &c) == Ordering::Less {
                prop_assert_eq!(o.cmp(&a, &c), Ordering::Less);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn determinant_matches_bareiss(entries in prop::collection::vec(-6i64..=6, 16)) {
        let r = xyz();
        let rows: Vec<Vec<QPoly>> = entries.chunks(4).map(|row| row.iter().map(|&v| Polynomial::from_int(&r, v)).collect()).collect();
        let m = SymbolicMatrix::from_rows(&r, rows).unwrap();
        let num: Vec<Vec<Rational>> = entries.chunks(4).map(|row| row.iter().map(|&v| q(v)).collect()).collect();
        prop_assert_eq!(m.determinant().unwrap().constant_term(), bareiss_determinant(&num));
    }

    #[test]
    fn symbolic_determinant_at_points(a in prop::collection::vec(poly_terms(3, 1, 2), 9), pt in prop::collection::vec(-4i64..=4, 3)) {
        let r = xyz();
        let rows: Vec<Vec<QPoly>> = a.chunks(3).map(|row| row.iter().map(|t| build(&r, t)).collect()).collect();
        let m = SymbolicMatrix::from_rows(&r, rows).unwrap();
        let pt: Vec<Rational> = pt.into_iter().map(q).collect();
        prop_assert_eq!(m.determinant().unwrap().evaluate(&pt), bareiss_determinant(&m.evaluate(&pt)));
    }

    #[test]
    fn matrix_powers_add(a in prop::collection::vec(poly_terms(3, 1, 2), 9), e1 in 0u32..3, e2 in 0u32..3) {
        let r = xyz();
        let rows: Vec<Vec<QPoly>> = a.chunks(3).map(|row| row.iter().map(|t| build(&r, t)).collect()).collect();
        let m: QMatrix = SymbolicMatrix::from_rows(&r, rows).unwrap();
        prop_assert_eq!(m.pow(e1 + e2).unwrap(), m.pow(e1).unwrap().try_mul(&m.pow(e2).unwrap()).unwrap());
    }
}

/// F and J of every worked example.
fn corpus_ideals() -> Vec<(String, QIdeal)> {
    let cases = corpus::parse(corpus::SHIPPED).unwrap();
    let mut out = Vec::new();
    for c in &cases {
        let a = Tableau::parse(&c.input.0, c.m).unwrap();
        let b = Tableau::parse(&c.input.1, c.m).unwrap();
        let f = fuse(&a, &b, &FusionOptions::default()).unwrap();
        out.push((format!("{} F", c.name), f.family.f.clone()));
        out.push((format!("{} J", c.name), f.j.clone()));
    }
    out
}

#[test]
fn reduced_basis_is_unique_under_shuffles() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (name, i) in corpus_ideals() {
        let want = i.gb().unwrap();
        for _ in 0..20 {
            let mut gens: Vec<QPoly> = i.gens().to_vec();
            gens.shuffle(&mut rng);
            let gens: Vec<QPoly> = gens
                .into_iter()
                .map(|g| {
                    let c = Rational::new(rng.gen_range(1i64..=9).into(), rng.gen_range(1i64..=9).into());
                    g.scale(&if rng.gen_bool(0.5) { -c } else { c })
                })
                .collect();
            let got = groebner_basis(i.ring(), &gens, &MonomialOrder::DegRevLex, DEFAULT_BUDGET).unwrap();
            assert_eq!(*want, got, "{}", name);
        }
    }
}

#[test]
fn generators_are_members() {
    for (name, i) in corpus_ideals() {
        for g in i.gens() {
            assert!(i.contains(g).unwrap(), "{}", name);
        }
        for g in i.gb().unwrap().iter() {
            assert!(i.normal_form(g).unwrap().is_zero(), "{}", name);
        }
    }
}

#[test]
fn radical_membership_agrees_with_components() {
    let cases = corpus::parse(corpus::SHIPPED).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for c in &cases {
        let a = Tableau::parse(&c.input.0, c.m).unwrap();
        let b = Tableau::parse(&c.input.1, c.m).unwrap();
        let f = fuse(&a, &b, &FusionOptions::default()).unwrap();
        let primes: Vec<&QIdeal> = f.components.iter().map(|c| &c.prime).collect();
        let mut tests: Vec<QPoly> = Vec::new();
        for p in &primes {
            tests.extend(p.gens().iter().cloned());
        }
        let singles = tests.clone();
        for _ in 0..6 {
            let x = singles.choose(&mut rng).unwrap();
            let y = singles.choose(&mut rng).unwrap();
            tests.push(x.clone() * y.clone());
        }
        for t in tests {
            let in_all = primes.iter().all(|p| p.contains(&t).unwrap());
            assert_eq!(f.j0.radical_contains(&t).unwrap(), in_all, "{}: {}", c.name, t);
        }
    }
}

#[test]
fn saturation_is_idempotent() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let r = xyz();
    for _ in 0..20 {
        let i = random_ideal(&mut rng, &r, 2);
        let f = random_poly(&mut rng, &r, 3, 1, 2);
        if f.is_zero() {
            continue;
        }
        let s1 = i.saturate_elem(&f).unwrap();
        assert!(s1.saturate_elem(&f).unwrap().equals(&s1).unwrap());
        assert!(s1.equals(&i.saturate_elem_iterated(&f).unwrap()).unwrap());
        assert!(s1.contains_ideal(&i).unwrap());
        let x = Polynomial::var(&r, 0);
        let sx = i.saturate_var(0).unwrap();
        assert!(sx.equals(&i.saturate_elem(&x).unwrap()).unwrap());
        assert!(sx.saturate_var(0).unwrap().equals(&sx).unwrap());
    }
}

/// Lex oracles are only run where the lex basis stays small.
const LEX_BUDGET: u64 = 300;

/// `I ∩ J` by a lex basis of `t I + (1 - t) J` with the tag variable first.
fn lex_intersection(i: &QIdeal, j: &QIdeal) -> Option<QIdeal> {
    let r = i.ring();
    let tagged = Ring::with_names(&["t", "x", "y", "z"]).unwrap();
    let t = Polynomial::var(&tagged, 0);
    let one_minus = Polynomial::one(&tagged) - t.clone();
    let mut gens = Vec::new();
    for g in i.gens() {
        gens.push(t.clone() * g.embed(&tagged).unwrap());
    }
    for g in j.gens() {
        gens.push(one_minus.clone() * g.embed(&tagged).unwrap());
    }
    let gb = groebner_basis(&tagged, &gens, &MonomialOrder::Lex, LEX_BUDGET).ok()?;
    let kept = gb.into_iter().filter(|g| !g.uses_var(0)).map(|g| g.embed(r).unwrap()).collect();
    Some(Ideal::new(r, kept))
}

fn linear(rng: &mut ChaCha8Rng, ring: &RingRef) -> QPoly {
    let mut p = Polynomial::from_int(ring, rng.gen_range(-2..=2));
    for v in 0..3 {
        p = p + Polynomial::var(ring, v) * Polynomial::from_int(ring, rng.gen_range(-1..=1));
    }
    p
}

#[test]
fn intersection_agrees_with_lex_elimination() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let r = xyz();
    let (mut checked, mut tries) = (0, 0);
    while checked < 20 {
        tries += 1;
        assert!(tries < 400, "too few cheap lex instances");
        // a reducible quadric and a plane each: the tagged lex basis stays small
        let mut pick = || {
            let q = linear(&mut rng, &r) * linear(&mut rng, &r);
            Ideal::new(&r, [q, linear(&mut rng, &r)].into_iter().filter(|p| !p.is_zero()).collect())
        };
        let (i, j) = (pick(), pick());
        let Some(want) = lex_intersection(&i, &j) else { continue };
        let k = i.intersect(&j).unwrap();
        assert!(k.equals(&want).unwrap());
        assert!(i.contains_ideal(&k).unwrap() && j.contains_ideal(&k).unwrap());
        assert!(k.contains_ideal(&i.product(&j).unwrap()).unwrap());
        checked += 1;
    }
    // monomial ideals: generated by pairwise lcms
    for _ in 0..20 {
        let mono = |rng: &mut ChaCha8Rng| -> Monomial {
            let e: Vec<u16> = (0..3).map(|_| rng.gen_range(0..=3)).collect();
            Monomial::from_exps(&e)
        };
        let a: Vec<Monomial> = (0..3).map(|_| mono(&mut rng)).collect();
        let b: Vec<Monomial> = (0..2).map(|_| mono(&mut rng)).collect();
        let to_ideal = |ms: &[Monomial]| -> QIdeal { Ideal::new(&r, ms.iter().map(|m| Polynomial::monomial(&r, *m, q(1))).collect()) };
        let lcms: Vec<Monomial> = a.iter().flat_map(|x| b.iter().map(move |y| x.lcm(y))).collect();
        assert!(to_ideal(&a).intersect(&to_ideal(&b)).unwrap().equals(&to_ideal(&lcms)).unwrap());
    }
    // principal ideals with a known lcm
    for _ in 0..20 {
        let h = random_poly(&mut rng, &r, 3, 1, 3);
        if h.is_zero() {
            continue;
        }
        let f = Polynomial::var(&r, 0) + Polynomial::from_int(&r, rng.gen_range(-3..=3));
        let g = Polynomial::var(&r, 1) + Polynomial::from_int(&r, rng.gen_range(-3..=3));
        let a = Ideal::new(&r, vec![f.clone() * h.clone()]);
        let b = Ideal::new(&r, vec![g.clone() * h.clone()]);
        let want = Ideal::new(&r, vec![f * g * h]);
        assert!(a.intersect(&b).unwrap().equals(&want).unwrap());
    }
}

#[test]
fn elimination_agrees_with_lex() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let r = xyz();
    let (mut checked, mut tries) = (0, 0);
    while checked < 20 {
        tries += 1;
        assert!(tries < 400, "too few cheap lex instances");
        let i = random_ideal(&mut rng, &r, 3);
        let Ok(gb) = groebner_basis(&r, i.gens(), &MonomialOrder::Lex, LEX_BUDGET) else { continue };
        let e = i.eliminate(&[0]).unwrap();
        let lex: Vec<QPoly> = gb.iter().filter(|g| !g.uses_var(0)).cloned().collect();
        assert!(e.equals(&Ideal::new(&r, lex)).unwrap());
        for g in e.gens() {
            assert!(!g.uses_var(0));
        }
        checked += 1;
    }
}

#[test]
fn unit_and_zero_ideals() {
    let r = xyz();
    let u: QIdeal = Ideal::unit(&r);
    assert!(u.is_unit().unwrap());
    assert_eq!(u.dimension().unwrap(), None);
    let z: QIdeal = Ideal::zero(&r);
    assert_eq!(z.dimension().unwrap(), Some(3));
    assert!(z.contains(&Polynomial::zero(&r)).unwrap());
    assert!(!z.contains(&Polynomial::one(&r)).unwrap());
    let c = Polynomial::constant(&r, Rational::one() + Rational::one());
    assert!(Ideal::new(&r, vec![c]).is_unit().unwrap());
    assert!(Rational::zero().is_zero());
}
