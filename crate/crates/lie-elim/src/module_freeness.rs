//! Degree-wise checks that a relation module `I/[I,I]` is free over the
//! enveloping algebra of `L/I`, with the relators as free generators.

use serde::Serialize;

use crate::core_lie::{HallBasis, LieElement};
use crate::error::{invalid, LieError, Result};
use crate::pcommute::{ideal_generate, GradedIdeal};
use crate::tensor_oracle::pbw_dim;
use crate::zmodule::Lattice;

/// `[I, I]` degree by degree: the span of brackets of basis elements of
/// `I^p` and `I^q` with `p + q = d`.
pub fn gamma2(basis: &HallBasis, ideal: &GradedIdeal, max_degree: u32) -> Result<GradedIdeal> {
    if max_degree > ideal.max_degree() {
        return Err(LieError::Overflow {
            degree: max_degree,
            cutoff: ideal.max_degree(),
        });
    }
    let elements: Vec<Vec<LieElement>> = (0..=max_degree)
        .map(|d| {
            if d == 0 {
                Vec::new()
            } else {
                ideal
                    .lattice(d)
                    .rows()
                    .map(|r| basis.element_from_vector(d, r))
                    .collect()
            }
        })
        .collect();
    let mut lattices = Vec::new();
    for d in 1..=max_degree {
        let mut lat = Lattice::zero(basis.degree_range(d).len());
        for p in 1..=d / 2 {
            let q = d - p;
            let (left, right) = (&elements[p as usize], &elements[q as usize]);
            for (i, u) in left.iter().enumerate() {
                let start = if p == q { i + 1 } else { 0 };
                for v in &right[start..] {
                    lat.insert(basis.vector(&basis.bracket(u, v)?, d)?);
                }
            }
        }
        lat.canonicalize();
        lattices.push(lat);
    }
    Ok(GradedIdeal::from_lattices(lattices))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreenessRow {
    pub degree: u32,
    pub ideal_rank: usize,
    pub gamma2_rank: usize,
    /// `rank I^d - rank [I,I]^d`.
    pub actual: usize,
    /// `sum_r dim U(L/I)_{d - deg r}`.
    pub predicted: u128,
    /// Relator ad-word images span `I^d` modulo `[I,I]^d`.
    pub surjective: bool,
    /// `[I,I]^d` is a direct summand of `I^d`.
    pub saturated: bool,
    /// The relators generate exactly `I^d` as an ideal.
    pub generated: bool,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreenessReport {
    pub quotient_ranks: Vec<usize>,
    pub rows: Vec<FreenessRow>,
}

impl FreenessReport {
    pub fn ok(&self) -> bool {
        self.rows.iter().all(|r| r.ok)
    }

    pub fn row(&self, d: u32) -> &FreenessRow {
        &self.rows[d as usize - 1]
    }
}

/// Compares `I^d/[I,I]^d` with the free module on `relators` over
/// `U(L/I)`, degree by degree.
pub fn check_freeness(
    basis: &HallBasis,
    ideal: &GradedIdeal,
    relators: &[LieElement],
    max_degree: u32,
) -> Result<FreenessReport> {
    if max_degree > ideal.max_degree() {
        return Err(LieError::Overflow {
            degree: max_degree,
            cutoff: ideal.max_degree(),
        });
    }
    let mut relator_degrees = Vec::with_capacity(relators.len());
    for r in relators {
        match basis.homogeneous_degree(r) {
            Some(d) => relator_degrees.push(d),
            None => return invalid("relators must be nonzero and homogeneous"),
        }
    }
    let quotient_ranks: Vec<usize> = (1..=max_degree)
        .map(|d| basis.degree_range(d).len() - ideal.rank(d))
        .collect();
    let gamma = gamma2(basis, ideal, max_degree)?;
    let generated = ideal_generate(basis, relators, max_degree)?;
    let mut rows = Vec::new();
    for d in 1..=max_degree {
        let predicted: u128 = relator_degrees
            .iter()
            .filter(|&&rd| rd <= d)
            .map(|&rd| pbw_dim(&quotient_ranks, d - rd))
            .sum();
        let i_d = ideal.lattice(d);
        let g_d = gamma.lattice(d);
        let surjective = &generated.lattice(d).sum(g_d) == i_d;
        let saturated = g_d.is_saturated_in(i_d);
        let actual = i_d.rank() - g_d.rank();
        rows.push(FreenessRow {
            degree: d,
            ideal_rank: i_d.rank(),
            gamma2_rank: g_d.rank(),
            actual,
            predicted,
            surjective,
            saturated,
            generated: generated.lattice(d) == i_d,
            ok: predicted == actual as u128 && surjective && saturated,
        });
    }
    Ok(FreenessReport {
        quotient_ranks,
        rows,
    })
}
