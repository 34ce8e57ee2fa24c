use lie_elim::fp_ideal::{
    corollary_split, decompose_j, fp_graded_ranks, fp_ideal, fp_relators, psi_map,
    relator_magnus_check, theta_empty_case, FPPresentation, OmegaAlgebra,
};
use lie_elim::pcommute::{graphs_up_to_iso, PartialCommutation};
use lie_elim::zmodule::Lattice;
use lie_elim::LieError;

fn theta(n: usize, edges: &[(usize, usize)]) -> PartialCommutation {
    PartialCommutation::new(n, edges).unwrap()
}

#[test]
fn relator_examples() {
    let p = FPPresentation::new(&theta(2, &[(2, 1)])).unwrap();
    let b = p.ambient(4).unwrap();
    let names = p.names();
    let r = fp_relators(&p, &b).unwrap();
    let render = |v: &[lie_elim::pcommute::GenEntry]| {
        v.iter().map(|e| e.tree.render(&names)).collect::<Vec<_>>()
    };
    assert_eq!(render(&r.r2), vec!["[y2,y1]"]);
    assert_eq!(
        render(&r.r3),
        vec!["[s,y1,y1]", "[s,y1,y2]", "[s,y2,y1]", "[s,y2,y2]"]
    );
    assert_eq!(render(&r.r4), vec!["[[s,y2],[s,y1]]"]);

    let p0 = FPPresentation::new(&PartialCommutation::empty(3)).unwrap();
    let r0 = fp_relators(&p0, &p0.ambient(3).unwrap()).unwrap();
    assert_eq!((r0.r2.len(), r0.r3.len(), r0.r4.len()), (0, 9, 0));

    let pk = FPPresentation::new(&PartialCommutation::complete(3)).unwrap();
    let rk = fp_relators(&pk, &pk.ambient(4).unwrap()).unwrap();
    assert_eq!((rk.r2.len(), rk.r3.len(), rk.r4.len()), (3, 9, 3));
}

#[test]
fn presentation_needs_two_vertices() {
    assert!(matches!(
        FPPresentation::new(&PartialCommutation::empty(1)),
        Err(LieError::InvalidArgument(_))
    ));
}

#[test]
fn graded_ranks_single_edge() {
    let r = fp_graded_ranks(&theta(2, &[(2, 1)]), 5).unwrap();
    assert!(r.ok());
    assert_eq!(
        r.rows.iter().map(|x| x.rank_j).collect::<Vec<_>>(),
        vec![0, 1, 6, 16, 43]
    );
    assert_eq!(
        r.rows.iter().map(|x| x.rank_gr).collect::<Vec<_>>(),
        vec![3, 2, 2, 2, 5]
    );
}

#[test]
fn graded_ranks_empty_relation() {
    let r = fp_graded_ranks(&PartialCommutation::empty(2), 5).unwrap();
    assert!(r.ok());
    assert_eq!(
        r.rows.iter().map(|x| x.rank_j).collect::<Vec<_>>(),
        vec![0, 0, 4, 12, 36]
    );
    assert_eq!(
        r.rows.iter().map(|x| x.rank_gr).collect::<Vec<_>>(),
        vec![3, 3, 4, 6, 12]
    );
}

#[test]
fn graded_ranks_edge_on_three() {
    let r = fp_graded_ranks(&theta(3, &[(2, 1)]), 5).unwrap();
    assert!(r.ok());
    assert_eq!(
        r.rows.iter().map(|x| x.rank_j).collect::<Vec<_>>(),
        vec![0, 1, 12, 45, 169]
    );
    assert_eq!(
        r.rows.iter().map(|x| x.rank_gr).collect::<Vec<_>>(),
        vec![4, 5, 8, 15, 35]
    );
}

#[test]
fn degree_one_is_free() {
    for t in graphs_up_to_iso(3, 3) {
        let r = fp_graded_ranks(&t, 1).unwrap();
        assert_eq!((r.rows[0].rank_j, r.rows[0].rank_gr), (0, 4));
    }
}

#[test]
fn split_examples() {
    let rows = corollary_split(&theta(2, &[(2, 1)]), 4).unwrap();
    assert_eq!(
        (
            rows[0].raag_rank,
            rows[0].omega_quotient_rank,
            rows[0].rank_gr
        ),
        (2, 1, 3)
    );
    assert_eq!(
        (
            rows[1].raag_rank,
            rows[1].omega_quotient_rank,
            rows[1].rank_gr
        ),
        (0, 2, 2)
    );
    assert!(rows.iter().all(|r| r.ok));
}

#[test]
fn decomposition_single_edge() {
    let r = decompose_j(&theta(2, &[(2, 1)]), 5).unwrap();
    assert!(r.ok());
    let d2 = &r.rows[1];
    assert_eq!(
        d2.pieces.iter().map(|p| p.rank).collect::<Vec<_>>(),
        vec![1, 0, 0, 0]
    );
    let d4 = &r.rows[3];
    let omega2 = d4
        .pieces
        .iter()
        .find(|p| p.name == "gamma2(L(Omega2))")
        .unwrap();
    assert_eq!(omega2.rank, 1);
}

#[test]
fn decomposition_rejects_empty_relation() {
    assert!(matches!(
        decompose_j(&PartialCommutation::empty(2), 4),
        Err(LieError::Inapplicable(_))
    ));
}

#[test]
fn empty_relation_split() {
    let rows = theta_empty_case(2, 5).unwrap();
    assert!(rows.iter().all(|r| r.ok));
    let d3 = &rows[2];
    assert_eq!((d3.witt, d3.rank_y, d3.rank_omega, d3.rank_j), (8, 2, 2, 4));
    assert_eq!(
        (rows[0].rank_y, rows[0].rank_omega, rows[0].rank_j),
        (2, 1, 0)
    );
    for n in 2..=3 {
        let rows = theta_empty_case(n, 4).unwrap();
        assert_eq!(rows[1].witt, rows[1].rank_y + n);
        assert_eq!(rows[1].rank_j, 0);
    }
}

#[test]
fn psi_examples() {
    let p = FPPresentation::new(&theta(2, &[(2, 1)])).unwrap();
    let a = p.ambient(4).unwrap();
    let omega = OmegaAlgebra::new(&p, 8).unwrap();
    assert_eq!(
        psi_map(&omega, &a, &a.generator(0)).unwrap(),
        omega.omega(1)
    );
    let yx = a.bracket(&a.generator(1), &a.generator(0)).unwrap();
    let image = psi_map(&omega, &a, &yx).unwrap();
    assert_eq!(
        image,
        omega
            .basis
            .bracket(&omega.omega(2), &omega.omega(1))
            .unwrap()
    );
    assert_eq!(omega.basis.render(&image), "[w2,w1]");

    let small = OmegaAlgebra::new(&p, 3).unwrap();
    assert!(matches!(
        psi_map(&small, &a, &yx),
        Err(LieError::Overflow { .. })
    ));
}

#[test]
fn psi_is_injective_on_y_words() {
    let p = FPPresentation::new(&PartialCommutation::empty(3)).unwrap();
    let a = p.ambient(4).unwrap();
    let omega = OmegaAlgebra::new(&p, 8).unwrap();
    let psi = omega.psi(&a).unwrap();
    let mut allowed = vec![true; 4];
    allowed[3] = false;
    for d in 1..=4 {
        let images: Vec<_> = a
            .degree_range(d)
            .filter(|&i| a.uses_only(i, &allowed))
            .map(|i| {
                omega
                    .basis
                    .vector(
                        &psi.apply(&a, &lie_elim::core_lie::LieElement::basis(i))
                            .unwrap(),
                        2 * d,
                    )
                    .unwrap()
            })
            .collect();
        let count = images.len();
        assert_eq!(
            Lattice::span(omega.basis.degree_range(2 * d).len(), images).rank(),
            count
        );
    }
}

#[test]
fn realized_omega_ideal_lies_in_j() {
    let t = theta(3, &[(2, 1), (3, 2)]);
    let p = FPPresentation::new(&t).unwrap();
    let a = p.ambient(5).unwrap();
    let j = fp_ideal(&p, &a, 5).unwrap();
    let omega = OmegaAlgebra::new(&p, 5).unwrap();
    let i_omega = omega.ideal(&p.theta, 5).unwrap();
    let real = omega.realize(&a, p.s()).unwrap();
    for d in 1..=5 {
        for u in i_omega.elements(&omega.basis, d) {
            let mut img = lie_elim::core_lie::LieElement::zero();
            for (k, c) in u.terms() {
                img.add_scaled(real[k].as_ref().unwrap(), c);
            }
            if let Some(e) = a.homogeneous_degree(&img) {
                assert!(j.lattice(e).contains(&a.vector(&img, e).unwrap()));
            }
        }
    }
}

#[test]
fn magnus_relators_up_to_three_vertices() {
    for n in 2..=3 {
        for t in graphs_up_to_iso(n, 3) {
            let rows = relator_magnus_check(&t).unwrap();
            assert_eq!(rows.len(), n * n + 2 * t.edge_count());
            assert!(
                rows.iter()
                    .all(|r| r.matches && r.degree == r.expected_degree),
                "{:?}",
                t.delta()
            );
        }
    }
}
