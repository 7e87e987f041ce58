use mvfusion::tableau::{datum_len, datum_weight, dominance_padding, pair_from_index, pair_index, rho_dot, sigma, Tableau};
use proptest::prelude::*;

fn t(s: &str, m: usize) -> Tableau {
    Tableau::parse(s, m).unwrap()
}

// Dominant tableaux of the twelve cluster variables for GL_4, with their data and stable forms.
const CLUSTER: &[([usize; 6], &str, &str)] = &[
    ([1, 0, 0, 0, 0, 0], "12", "2"),
    ([0, 0, 0, 1, 0, 0], "11/23", "1/3"),
    ([0, 0, 0, 0, 0, 1], "11/22/34", "1/2/4"),
    ([1, 0, 0, 1, 0, 0], "12/3", "2/3"),
    ([0, 1, 0, 0, 0, 0], "13/2", "3"),
    ([0, 0, 0, 1, 0, 1], "11/23/4", "1/3/4"),
    ([0, 0, 0, 0, 1, 0], "11/24/3", "1/4"),
    ([0, 1, 0, 0, 0, 1], "13/2/4", "13/2/4"),
    ([1, 0, 0, 0, 1, 0], "112/24/3", "2/4"),
    ([0, 0, 1, 0, 0, 0], "14/2/3", "4"),
    ([0, 1, 0, 0, 1, 0], "13/24", "3/4"),
    ([1, 0, 0, 1, 0, 1], "12/3/4", "2/3/4"),
];

#[test]
fn cluster_table_sigma_and_stable_forms() {
    for (n, dom, stable) in CLUSTER {
        let d = sigma(n, 4).unwrap();
        assert_eq!(d.to_string(), *dom, "sigma of {:?}", n);
        assert_eq!(d.lusztig_datum(), n.to_vec());
        assert_eq!(d.strip_padding().to_string(), *stable, "stable form of {}", dom);
        assert_eq!(t(stable, 4).lusztig_datum(), n.to_vec());
    }
}

#[test]
fn datum_examples() {
    assert_eq!(t("112/24/3", 4).lusztig_datum(), vec![1, 0, 0, 0, 1, 0]);
    assert_eq!(t("13/2/4", 4).lusztig_datum(), vec![0, 1, 0, 0, 0, 1]);
    assert_eq!(t("1123/23", 3).lusztig_datum(), vec![1, 1, 1]);
    assert_eq!(pair_index(2, 3, 4), 3);
    assert_eq!(t("1123/23", 3).gt_pattern(), vec![vec![2], vec![3, 1], vec![4, 2, 0]]);
}

#[test]
fn stripping_examples() {
    for (a, b) in [("112/24/3", "2/4"), ("1133/22", "33"), ("1123/23", "23/3"), ("1122/33", "22/33"), ("11/24/3", "1/4"), ("11/23/4", "1/3/4")] {
        let m = 4;
        assert_eq!(t(a, m).strip_padding().to_string(), b);
    }
    assert!(t("13/2/4", 4).is_stable());
    assert!(!t("12/3", 4).is_stable());
}

#[test]
fn padding_of_worked_inputs() {
    let cases = [
        ("2", "1/3", "2", "1/3"),
        ("1/3", "1/2/4", "1/3", "1/2/4"),
        ("2", "1/3/4", "2", "1/3/4"),
        ("1/2/4", "2/3", "11/2/4", "2/3"),
        ("1/3/4", "2/4", "11/23/34", "2/4"),
    ];
    for (a, b, pa, pb) in cases {
        let (x, y) = dominance_padding(&t(a, 4), &t(b, 4)).unwrap();
        assert_eq!((x.to_string(), y.to_string()), (pa.to_string(), pb.to_string()), "{} * {}", a, b);
    }
}

#[test]
fn enumeration_counts() {
    // Kostka numbers
    assert_eq!(Tableau::enumerate(&[2, 1, 0], &[1, 1, 1]).len(), 2);
    assert_eq!(Tableau::enumerate(&[4, 2, 0], &[2, 2, 2]).len(), 3);
    assert_eq!(Tableau::enumerate(&[2, 2, 0, 0], &[1, 1, 1, 1]).len(), 2);
    assert_eq!(Tableau::enumerate(&[3, 2, 1, 0], &[1, 1, 1, 1]).len(), 0);
    assert_eq!(Tableau::enumerate(&[2, 1, 1, 0], &[1, 1, 1, 1]).len(), 3);
    let all = Tableau::enumerate(&[4, 2, 0], &[2, 2, 2]);
    let s: Vec<String> = all.iter().map(|x| x.to_string()).collect();
    assert_eq!(s, vec!["1122/33", "1123/23", "1133/22"]);
}

#[test]
fn rho_pairing() {
    assert_eq!(rho_dot(&[1, 0, -1]), 2);
    assert_eq!(rho_dot(&[1, -1, 0, 0]), 1);
}

fn datum_strategy() -> impl Strategy<Value = (usize, Vec<usize>)> {
    (2usize..=5).prop_flat_map(|m| (Just(m), proptest::collection::vec(0usize..=3, m * (m - 1) / 2)))
}

proptest! {
    #[test]
    fn sigma_is_a_section((m, n) in datum_strategy()) {
        let d = sigma(&n, m).unwrap();
        prop_assert_eq!(d.lusztig_datum(), n.clone());
        let w = d.weight();
        prop_assert!(w.windows(2).all(|x| x[0] >= x[1]));
        let s = d.strip_padding();
        prop_assert_eq!(s.lusztig_datum(), n);
        prop_assert!(s.is_stable());
    }

    #[test]
    fn datum_and_padding_determine_the_tableau((m, n) in datum_strategy(), extra in proptest::collection::vec(0usize..=2, 5)) {
        let base = sigma(&n, m).unwrap();
        let tab = base.add_padding(&extra[..m]).unwrap_or(base);
        let back = Tableau::from_datum_padding(&tab.lusztig_datum(), &tab.padding(), m).unwrap();
        prop_assert_eq!(&back, &tab);
        // weight identity: lambda - mu = sum n_(a,b) (e_a - e_b)
        let (lam, mu) = (tab.shape(), tab.weight());
        let mut diff = vec![0i64; m];
        for a in 1..=m {
            for b in a + 1..=m {
                let x = tab.lusztig_datum()[pair_index(a, b, m)] as i64;
                diff[a - 1] += x;
                diff[b - 1] -= x;
            }
        }
        let want: Vec<i64> = (0..m).map(|i| lam[i] as i64 - mu[i] as i64).collect();
        prop_assert_eq!(diff, want);
        // interlacing and round trip through the pattern
        let gt = tab.gt_pattern();
        prop_assert_eq!(Tableau::from_gt_pattern(&gt).unwrap(), tab.clone());
        let parsed = Tableau::parse(&tab.to_string(), m).unwrap();
        prop_assert_eq!(parsed, tab);
    }
}

#[test]
fn pair_index_round_trip() {
    for m in 2..=6 {
        let mut k = 0;
        for a in 1..m {
            for b in a + 1..=m {
                assert_eq!(pair_index(a, b, m), k);
                assert_eq!(pair_from_index(k, m), (a, b));
                k += 1;
            }
        }
        assert_eq!(k, datum_len(m));
    }
    assert_eq!(datum_weight(&[1, 0, 0, 1, 0, 0], 4), vec![1, 0, -1, 0]);
}
