//! One line per acceptance criterion; exits nonzero if any line says FAIL.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use mvfusion::corpus;
use mvfusion::fusion::{fuse, govar_ideal, with_parameter, Fusion, FusionOptions};
use mvfusion::ideal::{groebner_basis, Ideal, DEFAULT_BUDGET};
use mvfusion::poly::{MonomialOrder, Polynomial, Ring, RingRef, SymbolicMatrix};
use mvfusion::slice::{build_t, g_of_a};
use mvfusion::tableau::sigma;
use mvfusion::{QIdeal, QPoly, Rational, Tableau};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn tab(s: &str, m: usize) -> Tableau {
    Tableau::parse(s, m).unwrap()
}

fn same(i: &QIdeal, gens: &[&str]) -> bool {
    let want: QIdeal = Ideal::parse(i.ring(), gens).unwrap();
    i.equals(&want).unwrap()
}

fn run(a: &str, b: &str, m: usize) -> Fusion {
    fuse(&tab(a, m), &tab(b, m), &FusionOptions::default()).unwrap()
}

fn criterion(n: u32, name: &str, limit: Duration, f: impl FnOnce() -> Check) -> bool {
    let start = Instant::now();
    let res = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
        let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
        Err(format!("panic: {}", msg.unwrap_or_default()))
    });
    let secs = start.elapsed();
    let res = res.and_then(|_| ensure(secs <= limit, || format!("took {:.1} s, limit {} s", secs.as_secs_f64(), limit.as_secs())));
    match &res {
        Ok(()) => println!("PASS {} {} ({:.2} s)", n, name, secs.as_secs_f64()),
        Err(e) => println!("FAIL {} {}: {}", n, name, e),
    }
    res.is_ok()
}

fn a2_product() -> Check {
    let f = run("22", "11/33", 3);
    let want: BTreeMap<String, u64> = [("33", 1), ("22/33", 1), ("23/3", 2)].iter().map(|(k, v)| (k.to_string(), *v)).collect();
    ensure(f.product() == want, || format!("product {:?}", f.product()))?;
    let table: [(&str, &[&str]); 3] = [
        ("1133/22", &["A[1,2,1]", "A[1,2,2]", "s"]),
        ("1122/33", &["A[2,3,1]", "A[2,3,2]", "s"]),
        ("1123/23", &["A[1,2,1]", "A[2,3,1]", "s"]),
    ];
    for (t, gens) in table {
        let c = f.components.iter().find(|c| c.tableau.to_string() == t).ok_or(format!("no component {}", t))?;
        ensure(same(&with_parameter(&c.prime).unwrap(), gens), || format!("prime of {}", t))?;
    }
    let c = f.components.iter().find(|c| c.multiplicity == 2).ok_or("no double component")?;
    let q = with_parameter(&c.primary).unwrap();
    let primary = ["A[2,3,1]^2", "A[1,2,2]*A[2,3,1] + A[1,2,1]*A[2,3,2]", "A[1,2,1]*A[2,3,1]", "A[1,2,1]^2", "s"];
    ensure(same(&q, &primary), || format!("primary {:?}", q.basis_strings()))
}

fn exchange_corpus() -> Check {
    let cases: Vec<_> = corpus::parse(corpus::SHIPPED).unwrap().into_iter().filter(|c| c.name.starts_with("ex")).collect();
    ensure(cases.len() == 15, || format!("{} cases", cases.len()))?;
    for c in &cases {
        ensure(!c.relations.is_empty() && !c.components.is_empty(), || format!("{} lacks relations or components", c.name))?;
        ensure(c.components.iter().all(|x| x.multiplicity == 1), || format!("{} expects a multiple component", c.name))?;
    }
    let bad: Vec<String> = corpus::run_all(&cases, &FusionOptions::default())
        .into_iter()
        .filter(|o| !o.passed())
        .map(|o| format!("{}: {:?} {:?}", o.name, o.failures, o.error))
        .collect();
    ensure(bad.is_empty(), || bad.join("; "))
}

const CLUSTER: &[([usize; 6], &str, &[&str])] = &[
    ([1, 0, 0, 0, 0, 0], "12", &[]),
    ([0, 0, 0, 1, 0, 0], "11/23", &["A[1,2,1]", "A[1,3,1]"]),
    ([0, 0, 0, 0, 0, 1], "11/22/34", &["A[1,2,1]", "A[1,2,2]", "A[1,3,1]", "A[1,4,1]", "A[2,3,1]", "A[2,4,1]"]),
    ([1, 0, 0, 1, 0, 0], "12/3", &["A[2,3,1]"]),
    ([0, 1, 0, 0, 0, 0], "13/2", &["A[1,2,1]"]),
    ([0, 0, 0, 1, 0, 1], "11/23/4", &["A[1,2,1]", "A[1,3,1]", "A[1,4,1]", "A[3,4,1]"]),
    ([0, 0, 0, 0, 1, 0], "11/24/3", &["A[1,2,1]", "A[1,3,1]", "A[2,3,1]", "A[1,4,1]"]),
    ([0, 1, 0, 0, 0, 1], "13/2/4", &["A[1,2,1]", "A[3,4,1]", "A[1,3,1]*A[2,4,1] - A[2,3,1]*A[1,4,1]"]),
    ([1, 0, 0, 0, 1, 0], "112/24/3", &["A[1,2,1]", "A[1,3,1]", "A[2,3,1]", "A[2,4,1]"]),
    ([0, 0, 1, 0, 0, 0], "14/2/3", &["A[1,2,1]", "A[1,3,1]", "A[2,3,1]"]),
    ([0, 1, 0, 0, 1, 0], "13/24", &["A[1,2,1]", "A[3,4,1]"]),
    ([1, 0, 0, 1, 0, 1], "12/3/4", &["A[2,3,1]", "A[2,4,1]", "A[3,4,1]"]),
];

fn cluster_table() -> Check {
    for (n, dom, gens) in CLUSTER {
        let t = sigma(n, 4).map_err(|e| e.to_string())?;
        ensure(t.to_string() == *dom, || format!("sigma{:?} = {}, expected {}", n, t, dom))?;
        let g = govar_ideal(&t, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        ensure(same(&g.ideal, gens), || format!("ideal of {}: {:?}", dom, g.ideal.basis_strings()))?;
    }
    Ok(())
}

fn datum_anchor() -> Check {
    let t = tab("1112/23", 3);
    ensure(t.lusztig_datum() == [1, 0, 1], || format!("datum {:?}", t.lusztig_datum()))?;
    ensure(t.gt_pattern() == [vec![3], vec![4, 1], vec![4, 2, 0]], || format!("pattern {:?}", t.gt_pattern()))
}

fn all_cases() -> Vec<(String, Fusion)> {
    corpus::parse(corpus::SHIPPED)
        .unwrap()
        .into_iter()
        .map(|c| {
            let f = fuse(&tab(&c.input.0, c.m), &tab(&c.input.1, c.m), &FusionOptions::default()).unwrap();
            (c.name, f)
        })
        .collect()
}

fn degree_additivity(cases: &[(String, Fusion)]) -> Check {
    for (name, f) in cases {
        let total: u64 = f.components.iter().map(|c| c.multiplicity * c.prime.degree().unwrap()).sum();
        ensure(total == f.j.degree().unwrap() && total == f.degree_j, || format!("{}: {} vs {}", name, total, f.degree_j))?;
    }
    Ok(())
}

fn flatness(cases: &[(String, Fusion)]) -> Check {
    for (name, f) in cases.iter().filter(|(n, _)| n == "a2" || n == "ex01") {
        let fam = &f.family.f;
        let s = fam.ring().param_index().unwrap();
        let one = Polynomial::var(fam.ring(), s) - Polynomial::one(fam.ring());
        let general = fam.with_gens(&[one]).unwrap().degree().unwrap();
        let special = fam.with_gens(&[Polynomial::var(fam.ring(), s)]).unwrap().degree().unwrap();
        ensure(general == special, || format!("{}: {} vs {}", name, general, special))?;
    }
    Ok(())
}

fn xyz() -> RingRef {
    Ring::with_names(&["x", "y", "z"]).unwrap()
}

fn linear(rng: &mut ChaCha8Rng, r: &RingRef) -> QPoly {
    let mut p = Polynomial::from_int(r, rng.gen_range(-2..=2));
    for v in 0..3 {
        p = p + Polynomial::var(r, v) * Polynomial::from_int(r, rng.gen_range(-1..=1));
    }
    p
}

fn small_ideal(rng: &mut ChaCha8Rng, r: &RingRef) -> QIdeal {
    let q = linear(rng, r) * linear(rng, r);
    Ideal::new(r, [q, linear(rng, r)].into_iter().filter(|p| !p.is_zero()).collect())
}

fn properties(cases: &[(String, Fusion)]) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);

    for (name, f) in cases {
        for i in [&f.family.f, &f.j] {
            let want = i.gb().unwrap();
            for _ in 0..20 {
                let mut gens = i.gens().to_vec();
                gens.shuffle(&mut rng);
                let got = groebner_basis(i.ring(), &gens, &MonomialOrder::DegRevLex, DEFAULT_BUDGET).unwrap();
                ensure(*want == got, || format!("shuffled basis differs on {}", name))?;
            }
        }
    }

    let r = xyz();
    for _ in 0..20 {
        let i = small_ideal(&mut rng, &r);
        let g = linear(&mut rng, &r);
        if g.is_zero() {
            continue;
        }
        let s = i.saturate_elem(&g).unwrap();
        ensure(s.saturate_elem(&g).unwrap().equals(&s).unwrap(), || "saturation is not idempotent".into())?;
    }

    let tagged = Ring::with_names(&["t", "x", "y", "z"]).unwrap();
    let t = Polynomial::var(&tagged, 0);
    let mut checked = 0;
    while checked < 20 {
        let (i, j) = (small_ideal(&mut rng, &r), small_ideal(&mut rng, &r));
        let mut gens: Vec<QPoly> = i.gens().iter().map(|g| t.clone() * g.embed(&tagged).unwrap()).collect();
        gens.extend(j.gens().iter().map(|g| (Polynomial::one(&tagged) - t.clone()) * g.embed(&tagged).unwrap()));
        let lex = groebner_basis(&tagged, &gens, &MonomialOrder::Lex, DEFAULT_BUDGET).unwrap();
        let want = Ideal::new(&r, lex.into_iter().filter(|g| !g.uses_var(0)).map(|g| g.embed(&r).unwrap()).collect());
        ensure(i.intersect(&j).unwrap().equals(&want).unwrap(), || "intersection disagrees with lex elimination".into())?;
        checked += 1;
    }

    let tr = Ring::with_names(&["t"]).unwrap();
    let shapes: [&[usize]; 5] = [&[2, 1], &[3, 2], &[2, 2, 1], &[4, 1, 1], &[3, 3]];
    for trial in 0..30 {
        let a = build_t::<Rational>(shapes[trial % shapes.len()]).unwrap();
        let n = a.matrix.nrows();
        let point: Vec<Rational> =
            (0..a.ring().nvars()).map(|_| Rational::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=4).into())).collect();
        let num = a.matrix.evaluate(&point);
        let mut ti = SymbolicMatrix::zeros(&tr, n, n);
        for i in 0..n {
            for j in 0..n {
                let mut e = -Polynomial::constant(&tr, num[i][j].clone());
                if i == j {
                    e = e + Polynomial::var(&tr, 0);
                }
                ti.set(i, j, e);
            }
        }
        let (_, g) = g_of_a(&a).unwrap();
        let g = g.map(|p| point.iter().enumerate().fold(p.clone(), |q, (k, v)| q.specialize(k, v)));
        let lhs = ti.determinant().unwrap();
        let rhs = g.determinant().unwrap().embed(&tr).unwrap();
        ensure(lhs == rhs, || format!("det g(A) differs from the characteristic polynomial at trial {}", trial))?;
    }

    for _ in 0..200 {
        let m = rng.gen_range(2..=5);
        let n: Vec<usize> = (0..m * (m - 1) / 2).map(|_| rng.gen_range(0..=3)).collect();
        let d = sigma(&n, m).unwrap();
        ensure(d.lusztig_datum() == n && d.strip_padding().lusztig_datum() == n, || format!("sigma round trip fails on {:?}", n))?;
    }

    for (a, b, m) in [("2", "1/3", 4), ("1/3", "1/2/4", 4), ("2", "1/3/4", 4), ("1/3", "2/4", 4), ("22", "11/33", 3)] {
        ensure(run(a, b, m).product() == run(b, a, m).product(), || format!("{} * {} is not commutative", a, b))?;
        let e = Tableau::empty(m);
        let unit = fuse(&tab(a, m), &e, &FusionOptions::default()).unwrap();
        let want: BTreeMap<String, u64> = [(tab(a, m).strip_padding().to_string(), 1)].into_iter().collect();
        ensure(unit.product() == want, || format!("{} * 1 = {:?}", a, unit.product()))?;
    }
    Ok(())
}

fn main() {
    let mut ok = true;
    ok &= criterion(1, "A_2 product and component ideals", Duration::from_secs(60), a2_product);
    ok &= criterion(2, "exchange-relation corpus", Duration::from_secs(600), exchange_corpus);
    ok &= criterion(3, "cluster table: sigma and orbital-variety ideals", Duration::from_secs(120), cluster_table);
    ok &= criterion(4, "Lusztig datum and GT pattern of 1112/23", Duration::from_secs(10), datum_anchor);
    let cases = all_cases();
    ok &= criterion(5, "degree additivity on every corpus run", Duration::from_secs(600), || degree_additivity(&cases));
    ok &= criterion(6, "flatness witness", Duration::from_secs(60), || flatness(&cases));
    ok &= criterion(7, "property suites", Duration::from_secs(600), || properties(&cases));
    if !ok {
        eprintln!("some acceptance criteria failed");
        std::process::exit(1);
    }
}
