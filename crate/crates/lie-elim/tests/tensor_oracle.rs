use lie_elim::core_lie::{Alphabet, HallBasis, LieElement};
use lie_elim::tensor_oracle::{
    descent_expand, embed, identity_3_17_check, is_lie, lie_coordinates, lowest_term, magnus,
    magnus_descent_check, pbw_dim, xi_inverse, AssocPoly, GroupWord, Word,
};
use lie_elim::LieError;
use num_bigint::BigInt;
use proptest::prelude::*;

const ONES: [u32; 4] = [1, 1, 1, 1];

fn poly(terms: &[(&[usize], i64)]) -> AssocPoly {
    let mut p = AssocPoly::zero();
    for (letters, c) in terms {
        p.add_term(Word::new(letters, &ONES), BigInt::from(*c));
    }
    p
}

fn basis(k: usize, d: u32) -> HallBasis {
    HallBasis::new(Alphabet::numbered("y", k).unwrap(), d).unwrap()
}

fn letter(g: usize) -> AssocPoly {
    AssocPoly::letter(g, &ONES)
}

#[test]
fn embed_examples() {
    let b = basis(2, 3);
    let (x, y) = (b.generator(0), b.generator(1));
    assert_eq!(embed(&b, &x), letter(0));
    let yx = b.bracket(&y, &x).unwrap();
    assert_eq!(embed(&b, &yx), poly(&[(&[1, 0], 1), (&[0, 1], -1)]));
    let yxx = b.bracket(&yx, &x).unwrap();
    assert_eq!(
        embed(&b, &yxx),
        poly(&[(&[1, 0, 0], 1), (&[0, 1, 0], -2), (&[0, 0, 1], 1)])
    );
}

#[test]
fn descent_expansion_small_cases() {
    assert_eq!(
        descent_expand(&[letter(0), letter(1)]).unwrap(),
        poly(&[(&[0, 1], 1), (&[1, 0], -1)])
    );
    // [[a,b],c] = abc - bac - cab + cba: four terms, not six.
    let three = descent_expand(&[letter(0), letter(1), letter(2)]).unwrap();
    assert_eq!(
        three,
        poly(&[
            (&[0, 1, 2], 1),
            (&[1, 0, 2], -1),
            (&[2, 0, 1], -1),
            (&[2, 1, 0], 1)
        ])
    );
    assert_eq!(three.len(), 4);
    let b = basis(3, 3);
    let ln = b
        .left_normed(&[b.generator(0), b.generator(1), b.generator(2)])
        .unwrap();
    assert_eq!(three, embed(&b, &ln));
    assert!(descent_expand(&[letter(0)]).is_err());
}

#[test]
fn xi_inverse_examples() {
    let b = basis(2, 3);
    assert_eq!(xi_inverse(&b, 1, &[]).unwrap(), b.generator(1));
    assert_eq!(
        xi_inverse(&b, 1, &[b.generator(0)]).unwrap(),
        b.bracket(&b.generator(1), &b.generator(0)).unwrap()
    );
}

#[test]
fn pbw_dim_examples() {
    for d in 0..8 {
        assert_eq!(pbw_dim(&[1, 0, 0, 0, 0, 0, 0, 0], d), 1);
        assert_eq!(pbw_dim(&[2, 0, 0, 0, 0, 0, 0, 0], d), d as u128 + 1);
        assert_eq!(pbw_dim(&[2, 1, 2, 3, 6, 9, 18, 30], d), 1u128 << d);
    }
}

#[test]
fn identity_3_17_small_cases() {
    let b = basis(3, 5);
    let (x, y, z) = (b.generator(0), b.generator(1), b.generator(2));
    assert!(identity_3_17_check(&b, &y, &x, &[]).unwrap());
    assert!(identity_3_17_check(&b, &y, &x, std::slice::from_ref(&z)).unwrap());
    let yx = b.bracket(&y, &x).unwrap();
    assert!(identity_3_17_check(&b, &yx, &z, &[x.clone(), y.clone()]).unwrap());
}

#[test]
fn magnus_examples() {
    let x = GroupWord::generator(0);
    assert_eq!(
        magnus(&x, &ONES, 3).unwrap().poly,
        AssocPoly::one().add(&letter(0))
    );
    assert_eq!(
        magnus(&x.inverse().mul(&x), &ONES, 5).unwrap().poly,
        AssocPoly::one()
    );
    let (t, xi) = (GroupWord::generator(2), GroupWord::generator(0));
    let c = magnus(&GroupWord::commutator(&t, &xi), &ONES, 2).unwrap();
    assert_eq!(
        c.poly,
        AssocPoly::one().add(&poly(&[(&[2, 0], 1), (&[0, 2], -1)]))
    );
}

#[test]
fn lowest_terms_are_lie_relators() {
    let b = basis(3, 4);
    let (s, y1, y2) = (2, 0, 1);
    let g = GroupWord::generator;
    let w = GroupWord::left_normed(&[g(s), g(y1), g(y2)]).unwrap();
    let (d, part) = lowest_term(&magnus(&w, &ONES, 4).unwrap()).unwrap();
    assert_eq!(d, 3);
    let lie = b
        .left_normed(&[b.generator(s), b.generator(y1), b.generator(y2)])
        .unwrap();
    assert_eq!(part, embed(&b, &lie));
    assert!(is_lie(&b, &part).unwrap());

    let w4 = GroupWord::commutator(
        &GroupWord::commutator(&g(s), &g(y2)),
        &GroupWord::commutator(&g(s), &g(y1)),
    );
    let (d, part) = lowest_term(&magnus(&w4, &ONES, 5).unwrap()).unwrap();
    assert_eq!(d, 4);
    let sy2 = b.bracket(&b.generator(s), &b.generator(y2)).unwrap();
    let sy1 = b.bracket(&b.generator(s), &b.generator(y1)).unwrap();
    let lie4 = b.bracket(&sy2, &sy1).unwrap();
    assert_eq!(part, embed(&b, &lie4));

    assert_eq!(
        lowest_term(&magnus(&g(0), &ONES, 3).unwrap()).unwrap(),
        (1, letter(0))
    );
    let trivial = magnus(&g(0).mul(&g(0).inverse()), &ONES, 3).unwrap();
    assert!(matches!(
        lowest_term(&trivial),
        Err(LieError::TrivialToCutoff(3))
    ));
}

#[test]
fn non_lie_polynomial_is_rejected() {
    let b = basis(2, 3);
    assert!(!is_lie(&b, &poly(&[(&[0, 1], 1)])).unwrap());
    assert!(!is_lie(&b, &poly(&[(&[1, 0], 2), (&[0, 1], -1)])).unwrap());
    let yx = b.bracket(&b.generator(1), &b.generator(0)).unwrap();
    let twice = embed(&b, &yx.scaled(&BigInt::from(2)));
    assert_eq!(
        lie_coordinates(&b, &twice).unwrap(),
        Some(yx.scaled(&BigInt::from(2)))
    );
}

fn element(b: &HallBasis, d: u32) -> impl Strategy<Value = LieElement> {
    prop::collection::vec((b.degree_range(d), -3i64..=3), 1..3).prop_map(|terms| {
        LieElement::from_terms(terms.into_iter().map(|(i, c)| (i, BigInt::from(c))))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn descent_matches_left_normed(
        elems in prop::collection::vec(element(&basis(3, 6), 1), 2..5),
        head in element(&basis(3, 6), 2)
    ) {
        let b = basis(3, 6);
        let mut parts = vec![head];
        parts.extend(elems);
        let polys: Vec<AssocPoly> = parts.iter().map(|u| embed(&b, u)).collect();
        prop_assert_eq!(descent_expand(&polys).unwrap(), embed(&b, &b.left_normed(&parts).unwrap()));
    }

    #[test]
    fn identity_3_17_random(
        a in element(&basis(3, 6), 2),
        bb in element(&basis(3, 6), 1),
        c in prop::collection::vec(element(&basis(3, 6), 1), 0..4)
    ) {
        let b = basis(3, 6);
        prop_assert!(identity_3_17_check(&b, &a, &bb, &c).unwrap());
    }

    #[test]
    fn magnus_is_multiplicative(
        u in prop::collection::vec((0usize..3, prop::bool::ANY), 0..5),
        v in prop::collection::vec((0usize..3, prop::bool::ANY), 0..5)
    ) {
        let mk = |s: &[(usize, bool)]| GroupWord::from_syllables(s.iter().map(|&(g, p)| (g, if p { 1 } else { -1 })).collect()).unwrap();
        let (u, v) = (mk(&u), mk(&v));
        let lhs = magnus(&u.mul(&v), &ONES, 4).unwrap();
        prop_assert_eq!(lhs, magnus(&u, &ONES, 4).unwrap().mul(&magnus(&v, &ONES, 4).unwrap()));
    }

    #[test]
    fn magnus_descent_congruence(
        a in 0usize..3,
        g in prop::collection::vec(0usize..3, 2..4)
    ) {
        let gs: Vec<GroupWord> = g.iter().map(|&i| GroupWord::generator(i)).collect();
        let m = gs.len() as u32;
        prop_assert!(magnus_descent_check(&GroupWord::generator(a), &gs, &ONES, m + 1).unwrap());
    }
}
