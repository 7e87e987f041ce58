use mvfusion::poly::{bareiss_determinant, Polynomial, Ring, SymbolicMatrix};
use mvfusion::slice::{build_t, build_u, build_u_nilpotent, companion, g_of_a, shifted_power_coeffs, submatrix};
use mvfusion::{QMatrix, QPoly, Rational};
use rand::{Rng, SeedableRng};

fn rows(m: &QMatrix) -> Vec<Vec<String>> {
    m.to_strings()
}

fn grid(lines: &[&[&str]]) -> Vec<Vec<String>> {
    lines.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect()
}

#[test]
fn companion_blocks() {
    let r = Ring::with_names(&["s"]).unwrap();
    let s: QPoly = Polynomial::parse(&r, "s").unwrap();
    let c = companion(&r, &shifted_power_coeffs(&r, 1, 2, &s)).unwrap();
    assert_eq!(rows(&c), grid(&[&["0", "1", "0"], &["0", "0", "1"], &["0", "-s^2", "2*s"]]));
    let c = companion(&r, &shifted_power_coeffs(&r, 1, 0, &s)).unwrap();
    assert_eq!(rows(&c), grid(&[&["0"]]));
    let c = companion(&r, &shifted_power_coeffs(&r, 0, 1, &s)).unwrap();
    assert_eq!(rows(&c), grid(&[&["s"]]));
    let two: QPoly = Polynomial::from_int(&r, 2);
    assert!(companion(&r, &[Polynomial::one(&r), two]).is_err());
}

#[test]
fn t_mu_display_for_3_2() {
    let a = build_t::<Rational>(&[3, 2]).unwrap();
    assert_eq!(
        rows(&a.matrix),
        grid(&[
            &["0", "1", "0", "0", "0"],
            &["0", "0", "1", "0", "0"],
            &["A[1,1,1]", "A[1,1,2]", "A[1,1,3]", "A[1,2,1]", "A[1,2,2]"],
            &["0", "0", "0", "0", "1"],
            &["A[2,1,1]", "A[2,1,2]", "0", "A[2,2,1]", "A[2,2,2]"],
        ])
    );
    let (ring, g) = g_of_a(&a).unwrap();
    let want = [
        ["t^3 - A[1,1,3]*t^2 - A[1,1,2]*t - A[1,1,1]", "-A[2,1,2]*t - A[2,1,1]"],
        ["-A[1,2,2]*t - A[1,2,1]", "t^2 - A[2,2,2]*t - A[2,2,1]"],
    ];
    for i in 0..2 {
        for j in 0..2 {
            let w: QPoly = Polynomial::parse(&ring, want[i][j]).unwrap();
            assert_eq!(*g.get(i, j), w);
        }
    }
    assert_eq!(build_t::<Rational>(&[1, 1, 1]).unwrap().ring().nvars(), 9);
    assert_eq!(rows(&build_t::<Rational>(&[1]).unwrap().matrix), grid(&[&["A[1,1,1]"]]));
}

#[test]
fn u_family_display() {
    let a = build_u::<Rational>(&[1, 1, 0], &[2, 1, 1]).unwrap();
    assert_eq!(
        rows(&a.matrix),
        grid(&[
            &["0", "1", "0", "0", "0", "0"],
            &["0", "0", "1", "0", "0", "0"],
            &["0", "-s^2", "2*s", "A[1,2,1]", "A[1,2,2]", "A[1,3,1]"],
            &["0", "0", "0", "0", "1", "0"],
            &["0", "0", "0", "0", "s", "A[2,3,1]"],
            &["0", "0", "0", "0", "0", "s"],
        ])
    );
    // 3 + 1 + 1 upper variables plus s
    assert_eq!(a.ring().nvars(), 5);
    let e = build_u::<Rational>(&[0, 1, 0], &[1, 0, 1]).unwrap();
    assert_eq!(rows(&e.matrix), grid(&[&["s", "A[1,2,1]", "A[1,3,1]"], &["0", "0", "A[2,3,1]"], &["0", "0", "s"]]));
    assert!(build_u::<Rational>(&[0, 1], &[0, 1]).is_err());
}

#[test]
fn nilpotent_fibre_matches_family_at_zero() {
    let fam = build_u::<Rational>(&[2, 1, 1], &[0, 0, 0]).unwrap();
    let nil = build_u_nilpotent::<Rational>(&[2, 1, 1]).unwrap();
    let s = fam.ring().param_index().unwrap();
    let at0 = fam.matrix.map(|p| p.specialize(s, &Rational::from_integer(0.into())));
    assert_eq!(at0.embed(nil.ring()).unwrap(), nil.matrix);
    for i in 0..4 {
        for j in 0..=i {
            assert!(nil.matrix.get(i, j).is_zero());
        }
    }
}

#[test]
fn submatrix_prefixes() {
    let a = build_u::<Rational>(&[1, 1, 0, 0], &[1, 0, 1, 1]).unwrap();
    assert_eq!(submatrix(&a, 2, true).unwrap().nrows(), 2);
    assert!(submatrix(&a, 1, true).is_err());
    assert_eq!(submatrix(&a, 0, true).unwrap().nrows(), 0);
    assert_eq!(submatrix(&a, 5, true).unwrap(), a.matrix);
}

fn rand_q(rng: &mut impl Rng) -> Rational {
    Rational::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=4).into())
}

#[test]
fn characteristic_polynomial_oracle() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let shapes: [&[usize]; 6] = [&[1], &[2, 1], &[3, 2], &[2, 2, 1], &[4, 1, 1], &[3, 3]];
    let tr = Ring::with_names(&["t"]).unwrap();
    let t: QPoly = Polynomial::var(&tr, 0);
    for trial in 0..30 {
        let mu = shapes[trial % shapes.len()];
        let a = build_t::<Rational>(mu).unwrap();
        let n = a.matrix.nrows();
        let point: Vec<Rational> = (0..a.ring().nvars()).map(|_| rand_q(&mut rng)).collect();
        let num = a.matrix.evaluate(&point);
        // det(t I - A) over Q[t]
        let mut ti = SymbolicMatrix::zeros(&tr, n, n);
        for i in 0..n {
            for j in 0..n {
                let mut e = -Polynomial::constant(&tr, num[i][j].clone());
                if i == j {
                    e = e + &t;
                }
                ti.set(i, j, e);
            }
        }
        let lhs = ti.determinant().unwrap();
        let (gr, g) = g_of_a(&a).unwrap();
        let mut full = point.clone();
        full.push(Rational::from_integer(0.into()));
        let gi = g.map(|p| {
            let mut q = p.clone();
            for (k, v) in point.iter().enumerate() {
                q = q.specialize(k, v);
            }
            q
        });
        let rhs = gi.determinant().unwrap().embed(&tr).unwrap();
        assert_eq!(lhs, rhs, "mu = {:?}", mu);
        let _ = gr;
        // numeric determinant agrees with Bareiss at t = 0
        let minus_a: Vec<Vec<Rational>> = num.iter().map(|r| r.iter().map(|x| -x.clone()).collect()).collect();
        assert_eq!(lhs.constant_term(), bareiss_determinant(&minus_a));
    }
}
