use lie_elim::core_lie::{
    graded_rank, hall_basis, left_normed, rewrite_bracket, witt_ranks, Alphabet, HallBasis,
    LieElement,
};
use lie_elim::tensor_oracle::embed;
use lie_elim::LieError;
use num_bigint::BigInt;
use proptest::prelude::*;

fn mobius(n: u64) -> i64 {
    let (mut n, mut mu, mut p) = (n, 1i64, 2u64);
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

/// `(1/d) sum_{e | d} mu(e) k^(d/e)`.
fn necklace(k: u64, d: u64) -> u64 {
    let s: i128 = (1..=d)
        .filter(|e| d.is_multiple_of(*e))
        .map(|e| mobius(e) as i128 * (k as i128).pow((d / e) as u32))
        .sum();
    (s / d as i128) as u64
}

fn basis(k: usize, d: u32) -> HallBasis {
    HallBasis::new(Alphabet::numbered("y", k).unwrap(), d).unwrap()
}

#[test]
fn two_letters_in_degree_two() {
    let b = hall_basis(&Alphabet::new(vec![("x", 1), ("y", 1)]).unwrap(), 2).unwrap();
    assert_eq!(b.degree_range(1).len(), 2);
    assert_eq!(b.degree_range(2).len(), 1);
    assert_eq!(b.render_index(b.degree_range(2).start), "[y,x]");
}

#[test]
fn one_letter_has_nothing_above_degree_one() {
    let b = basis(1, 4);
    assert_eq!(
        (1..=4).map(|d| b.degree_range(d).len()).collect::<Vec<_>>(),
        vec![1, 0, 0, 0]
    );
}

#[test]
fn weighted_counts() {
    let b = HallBasis::new(Alphabet::new(vec![("a", 1), ("b", 2)]).unwrap(), 3).unwrap();
    assert_eq!(
        (1..=3).map(|d| b.degree_range(d).len()).collect::<Vec<_>>(),
        vec![1, 1, 1]
    );
    assert_eq!(witt_ranks(&[1, 2], 3), vec![1, 1, 1]);
}

#[test]
fn graded_rank_examples() {
    let b = basis(2, 5);
    assert_eq!(
        (1..=5)
            .map(|d| graded_rank(&b, d).unwrap())
            .collect::<Vec<_>>(),
        vec![2, 1, 2, 3, 6]
    );
    assert_eq!(graded_rank(&basis(3, 2), 2).unwrap(), 3);
    assert_eq!(graded_rank(&basis(1, 2), 2).unwrap(), 0);
    assert!(matches!(
        graded_rank(&b, 6),
        Err(LieError::InvalidArgument(_))
    ));
}

#[test]
fn zero_cutoff_is_rejected() {
    assert!(matches!(
        HallBasis::new(Alphabet::numbered("y", 2).unwrap(), 0),
        Err(LieError::InvalidArgument(_))
    ));
}

#[test]
fn witt_matches_necklace() {
    for k in 1..=4usize {
        let w = witt_ranks(&vec![1; k], 8);
        for d in 1..=8u64 {
            assert_eq!(
                w[d as usize - 1] as u64,
                necklace(k as u64, d),
                "k={k} d={d}"
            );
        }
    }
}

#[test]
fn bracket_examples() {
    let b = basis(2, 3);
    let (x, y) = (b.generator(0), b.generator(1));
    assert!(rewrite_bracket(&b, &x, &x).unwrap().is_zero());
    let yx = rewrite_bracket(&b, &y, &x).unwrap();
    assert_eq!(b.render(&yx), "[y2,y1]");
    assert_eq!(rewrite_bracket(&b, &x, &y).unwrap(), yx.neg());
    assert_eq!(left_normed(&b, std::slice::from_ref(&x)).unwrap(), x);
    assert_eq!(
        left_normed(&b, &[y.clone(), x.clone(), x.clone()]).unwrap(),
        b.bracket(&yx, &x).unwrap()
    );
    assert!(left_normed(&b, &[]).is_err());
}

#[test]
fn degree_three_hall_elements() {
    let b = basis(2, 3);
    let names: Vec<String> = b.degree_range(3).map(|i| b.render_index(i)).collect();
    assert_eq!(names, vec!["[y2,y1,y1]", "[y2,y1,y2]"]);
}

#[test]
fn overflow_is_an_error() {
    let b = basis(2, 2);
    let yx = b.bracket(&b.generator(1), &b.generator(0)).unwrap();
    assert!(matches!(
        b.bracket(&yx, &b.generator(0)),
        Err(LieError::Overflow { .. })
    ));
}

fn element(b: &HallBasis, d: u32) -> impl Strategy<Value = LieElement> {
    let range = b.degree_range(d);
    prop::collection::vec((range, -4i64..=4), 1..4).prop_map(|terms| {
        LieElement::from_terms(terms.into_iter().map(|(i, c)| (i, BigInt::from(c))))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bracket_matches_tensor_commutator(
        (u, v) in (element(&basis(3, 5), 2), element(&basis(3, 5), 3))
    ) {
        let b = basis(3, 5);
        let w = b.bracket(&u, &v).unwrap();
        prop_assert_eq!(embed(&b, &w), embed(&b, &u).commutator(&embed(&b, &v)));
    }

    #[test]
    fn antisymmetry_and_jacobi(
        (u, v, w) in (element(&basis(3, 6), 1), element(&basis(3, 6), 2), element(&basis(3, 6), 2))
    ) {
        let b = basis(3, 6);
        prop_assert_eq!(b.bracket(&u, &v).unwrap(), b.bracket(&v, &u).unwrap().neg());
        let j = b.bracket(&u, &b.bracket(&v, &w).unwrap()).unwrap()
            .add(&b.bracket(&v, &b.bracket(&w, &u).unwrap()).unwrap())
            .add(&b.bracket(&w, &b.bracket(&u, &v).unwrap()).unwrap());
        prop_assert!(j.is_zero());
    }

    #[test]
    fn bilinear(
        (u, v, w) in (element(&basis(2, 5), 2), element(&basis(2, 5), 2), element(&basis(2, 5), 3)),
        c in -3i64..=3
    ) {
        let b = basis(2, 5);
        let c = BigInt::from(c);
        let lhs = b.bracket(&u.add(&v.scaled(&c)), &w).unwrap();
        let rhs = b.bracket(&u, &w).unwrap().add(&b.bracket(&v, &w).unwrap().scaled(&c));
        prop_assert_eq!(lhs, rhs);
    }
}
