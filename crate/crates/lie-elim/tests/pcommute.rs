use lie_elim::core_lie::{Alphabet, HallBasis, LieElement};
use lie_elim::pcommute::{
    eliminate, graphs_up_to_iso, ideal_generate, lazard_split, raag_ranks, raag_relators,
    rearrange, validate, GradedIdeal, PartialCommutation,
};
use lie_elim::zmodule::Lattice;
use lie_elim::LieError;
use proptest::prelude::*;

fn theta(n: usize, edges: &[(usize, usize)]) -> PartialCommutation {
    PartialCommutation::new(n, edges).unwrap()
}

fn basis(k: usize, d: u32) -> HallBasis {
    HallBasis::new(Alphabet::numbered("y", k).unwrap(), d).unwrap()
}

fn raag_ideal(b: &HallBasis, t: &PartialCommutation) -> GradedIdeal {
    ideal_generate(b, &raag_relators(b, t).unwrap(), b.max_degree()).unwrap()
}

#[test]
fn validate_examples() {
    let t = theta(2, &[(1, 2)]);
    assert!(t.contains(2, 1) && t.contains(1, 2));
    let norm = validate(&t);
    assert_eq!(norm.theta.delta(), vec![(2, 1)]);
    assert!(!norm.is_empty);
    assert!(validate(&PartialCommutation::empty(3)).is_empty);
    assert!(matches!(
        PartialCommutation::new(3, &[(3, 3)]),
        Err(LieError::InvalidArgument(_))
    ));
}

#[test]
fn validate_keeps_the_graph() {
    for n in 2..=4 {
        for t in graphs_up_to_iso(n, 6) {
            let norm = validate(&t);
            assert_eq!(norm.theta.edge_count(), t.edge_count());
            for (a, b) in norm.theta.delta() {
                assert!(t.contains(norm.original_label[a - 1], norm.original_label[b - 1]));
            }
            if !t.is_empty() {
                assert!(norm.theta.contains(2, 1));
            }
        }
    }
}

#[test]
fn isomorphism_class_counts() {
    assert_eq!(graphs_up_to_iso(3, 3).len(), 4);
    assert_eq!(graphs_up_to_iso(4, 4).len(), 9);
    assert_eq!(graphs_up_to_iso(4, 6).len(), 11);
}

#[test]
fn ideal_generate_examples() {
    let b = basis(2, 3);
    let yx = b.bracket(&b.generator(1), &b.generator(0)).unwrap();
    let i = ideal_generate(&b, &[yx], 3).unwrap();
    assert_eq!(i.ranks(), vec![0, 1, 2]);
    assert_eq!(ideal_generate(&b, &[], 3).unwrap().ranks(), vec![0, 0, 0]);
    let b3 = basis(3, 2);
    assert_eq!(raag_ideal(&b3, &PartialCommutation::complete(3)).rank(2), 3);
    let mixed = b
        .generator(0)
        .add(&b.bracket(&b.generator(1), &b.generator(0)).unwrap());
    assert!(matches!(
        ideal_generate(&b, &[mixed], 3),
        Err(LieError::InvalidArgument(_))
    ));
}

#[test]
fn raag_rank_examples() {
    assert_eq!(
        raag_ranks(&theta(2, &[(2, 1)]), 5).unwrap().ranks,
        vec![2, 0, 0, 0, 0]
    );
    assert_eq!(
        raag_ranks(&PartialCommutation::empty(2), 5).unwrap().ranks,
        vec![2, 1, 2, 3, 6]
    );
    let r = raag_ranks(&theta(3, &[(2, 1)]), 5).unwrap();
    assert_eq!(r.ranks, vec![3, 2, 5, 10, 24]);
    assert_eq!(r.ideal_ranks, vec![0, 1, 3, 8, 24]);
    assert!(r.saturated.iter().all(|&s| s));
    // y2 commutes with y1 and y3: Z x F_2, so Z + L(2 letters).
    let path = raag_ranks(&theta(3, &[(2, 1), (3, 2)]), 6).unwrap();
    assert_eq!(path.ranks, vec![3, 1, 2, 3, 6, 9]);
}

#[test]
fn rearrange_examples() {
    let t = theta(3, &[(3, 2)]);
    assert_eq!(rearrange(&[1, 2], &t, 3).unwrap(), vec![2, 1]);
    assert_eq!(
        rearrange(&[1, 1, 2], &theta(3, &[(2, 1)]), 3).unwrap(),
        vec![1, 1, 2]
    );
    assert_eq!(rearrange(&[], &t, 3).unwrap(), Vec::<usize>::new());
    assert!(matches!(
        rearrange(&[2, 1], &t, 3),
        Err(LieError::InvalidArgument(_))
    ));
}

#[test]
fn elimination_two_vertices() {
    let r = eliminate(&theta(2, &[(2, 1)]), 4).unwrap();
    assert!(r.steps.is_empty());
    let mut gens = r.base_generators.clone();
    gens.sort_by_key(|g| (g.len(), g.clone()));
    assert_eq!(
        gens,
        vec![
            "[y2,y1]",
            "[y2,y1,y1]",
            "[y2,y1,y2]",
            "[y2,y1,y1,y1]",
            "[y2,y1,y1,y2]",
            "[y2,y1,y2,y2]"
        ]
    );
    assert!(r.ok());
}

#[test]
fn elimination_single_edge_on_three() {
    let r = eliminate(&theta(3, &[(2, 1)]), 4).unwrap();
    assert_eq!(r.steps.len(), 1);
    assert!(!r.steps[0].b_generators.is_empty());
    assert!(r.ok());
    for row in &r.rows {
        assert_eq!(
            row.witt,
            row.letters + row.b_ranks.iter().sum::<usize>() + row.ideal_rank
        );
    }
}

#[test]
fn elimination_complete_graph() {
    let r = eliminate(&PartialCommutation::complete(3), 4).unwrap();
    assert!(r.ok());
    let coranks: Vec<usize> = r.rows.iter().map(|x| x.witt - x.ideal_rank).collect();
    assert_eq!(coranks, vec![3, 0, 0, 0]);
}

#[test]
fn elimination_rejects_empty_relation() {
    assert!(matches!(
        eliminate(&PartialCommutation::empty(3), 4),
        Err(LieError::Inapplicable(_))
    ));
    assert!(eliminate(&theta(2, &[(2, 1)]), 1).is_err());
}

#[test]
fn elimination_reports_input_labels() {
    let r = eliminate(&theta(3, &[(3, 2)]), 3).unwrap();
    assert_eq!(r.relabel, vec![2, 3, 1]);
    assert_eq!(r.base_generators[0], "[y3,y2]");
    assert_eq!(r.steps[0].next, "y1");
}

#[test]
fn chordal_relations_eliminate_cleanly() {
    for n in 2..=4 {
        for t in graphs_up_to_iso(n, 6) {
            if t.is_empty() || !t.is_chordal() {
                continue;
            }
            let r = eliminate(&t, 4).unwrap();
            assert!(r.ok(), "{:?}", t.delta());
        }
    }
}

/// `I(theta) ∩ L(y_1..y_i)` equals the ideal of `theta` restricted to the first `i` vertices.
#[test]
fn restriction_property() {
    let dmax = 4;
    for n in 3..=4 {
        let big = basis(n, dmax);
        for t in graphs_up_to_iso(n, 6) {
            let ideal = raag_ideal(&big, &t);
            for i in 2..n {
                let small = basis(i, dmax);
                let sub_ideal = raag_ideal(&small, &t.restrict(i));
                let images: Vec<LieElement> = (0..i).map(|g| big.generator(g)).collect();
                let into_big = small.evaluate_into(&images, &big).unwrap();
                let mut allowed = vec![false; n];
                allowed[..i].fill(true);
                for d in 1..=dmax {
                    let cut = ideal
                        .lattice(d)
                        .intersect_coordinates(&big.sub_alphabet_mask(d, &allowed));
                    let mapped = Lattice::span(
                        big.degree_range(d).len(),
                        sub_ideal.elements(&small, d).iter().map(|u| {
                            let mut img = LieElement::zero();
                            for (k, c) in u.terms() {
                                img.add_scaled(into_big[k].as_ref().unwrap(), c);
                            }
                            big.vector(&img, d).unwrap()
                        }),
                    );
                    assert_eq!(cut, mapped, "n={n} i={i} d={d} {:?}", t.delta());
                }
            }
        }
    }
}

#[test]
fn raag_ideals_are_saturated() {
    for n in 2..=4 {
        for t in graphs_up_to_iso(n, 6) {
            assert!(
                raag_ranks(&t, 5).unwrap().saturated.iter().all(|&s| s),
                "{:?}",
                t.delta()
            );
        }
    }
}

#[test]
fn lazard_split_small() {
    let b = basis(3, 5);
    for in_b in [
        [true, false, false],
        [true, true, false],
        [false, true, false],
    ] {
        for row in lazard_split(&b, &in_b, 5).unwrap() {
            assert!(row.independent);
            assert_eq!(row.total, row.sub + row.wreath);
        }
    }
    assert!(lazard_split(&b, &[true, true, true], 5).is_err());
}

fn edge_set(n: usize) -> impl Strategy<Value = Vec<(usize, usize)>> {
    let all: Vec<(usize, usize)> = (1..=n).flat_map(|a| (1..a).map(move |b| (a, b))).collect();
    prop::sample::subsequence(all.clone(), 0..=all.len())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn ideals_grow_with_the_relation(small in edge_set(4), extra in edge_set(4)) {
        let b = basis(4, 4);
        let mut bigger = small.clone();
        bigger.extend(extra);
        let (i1, i2) = (raag_ideal(&b, &theta(4, &small)), raag_ideal(&b, &theta(4, &bigger)));
        for d in 1..=4 {
            prop_assert!(i2.lattice(d).contains_lattice(i1.lattice(d)));
        }
    }

    #[test]
    fn ideal_is_bracket_closed(edges in edge_set(3)) {
        let b = basis(3, 5);
        let i = raag_ideal(&b, &theta(3, &edges));
        for d in 1..5 {
            for u in i.elements(&b, d) {
                for g in 0..3 {
                    let w = b.bracket(&u, &b.generator(g)).unwrap();
                    prop_assert!(i.lattice(d + 1).contains(&b.vector(&w, d + 1).unwrap()));
                }
            }
        }
    }
}
