//! The free associative algebra over the integers, used as an independent
//! check on Lie computations: embedding of Lie elements as commutator
//! polynomials, descent expansions, PBW dimension counts, and the Magnus
//! expansion of free group words.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::core_lie::{pbw_series, HallBasis, HallKind, LieElement};
use crate::error::{invalid, LieError, Result};
use crate::zmodule::{Lattice, SparseVec};

/// A word in the generators, ordered by (degree, letters).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    degree: u32,
    letters: Vec<u16>,
}

impl Word {
    pub fn empty() -> Self {
        Word {
            degree: 0,
            letters: Vec::new(),
        }
    }

    pub fn new(letters: &[usize], degrees: &[u32]) -> Self {
        Word {
            degree: letters.iter().map(|&g| degrees[g]).sum(),
            letters: letters.iter().map(|&g| g as u16).collect(),
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn letters(&self) -> impl Iterator<Item = usize> + '_ {
        self.letters.iter().map(|&g| g as usize)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.letters.len() + other.letters.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word {
            degree: self.degree + other.degree,
            letters,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AssocPoly {
    terms: BTreeMap<Word, BigInt>,
}

impl AssocPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Word::empty(), BigInt::one())
    }

    pub fn monomial(w: Word, c: BigInt) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn letter(g: usize, degrees: &[u32]) -> Self {
        Self::monomial(Word::new(&[g], degrees), BigInt::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, w: Word, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &AssocPoly) -> AssocPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &AssocPoly) -> AssocPoly {
        self.add(&other.scaled(&-BigInt::one()))
    }

    pub fn scaled(&self, c: &BigInt) -> AssocPoly {
        if c.is_zero() {
            return Self::zero();
        }
        AssocPoly {
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    /// Product, dropping words of degree above `cutoff` when given.
    pub fn mul_truncated(&self, other: &AssocPoly, cutoff: Option<u32>) -> AssocPoly {
        let mut out = AssocPoly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                if cutoff.is_some_and(|d| u.degree + v.degree > d) {
                    continue;
                }
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }

    pub fn mul(&self, other: &AssocPoly) -> AssocPoly {
        self.mul_truncated(other, None)
    }

    pub fn commutator(&self, other: &AssocPoly) -> AssocPoly {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn truncate(&self, cutoff: u32) -> AssocPoly {
        AssocPoly {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.degree <= cutoff)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn homogeneous_part(&self, d: u32) -> AssocPoly {
        AssocPoly {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.degree == d)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(|w| w.degree).min()
    }
}

/// Commutator-polynomial images of the Hall basis elements, memoized.
pub struct Embedder<'a> {
    basis: &'a HallBasis,
    cache: Vec<Option<AssocPoly>>,
}

impl<'a> Embedder<'a> {
    pub fn new(basis: &'a HallBasis) -> Self {
        Embedder {
            basis,
            cache: vec![None; basis.len()],
        }
    }

    pub fn basis_element(&mut self, index: usize) -> AssocPoly {
        if let Some(p) = &self.cache[index] {
            return p.clone();
        }
        let degrees = self.basis.alphabet().degrees();
        let p = match self.basis.elem(index).kind {
            HallKind::Leaf(g) => AssocPoly::letter(g, &degrees),
            HallKind::Node(a, b) => {
                let (pa, pb) = (self.basis_element(a), self.basis_element(b));
                pa.commutator(&pb)
            }
        };
        self.cache[index] = Some(p.clone());
        p
    }

    pub fn embed(&mut self, u: &LieElement) -> AssocPoly {
        let mut out = AssocPoly::zero();
        for (i, c) in u.terms() {
            for (w, x) in self.basis_element(i).terms() {
                out.add_term(w.clone(), x * c);
            }
        }
        out
    }
}

/// Image of `u` in the free associative algebra (`[u,v] -> uv - vu`).
pub fn embed(basis: &HallBasis, u: &LieElement) -> AssocPoly {
    Embedder::new(basis).embed(u)
}

/// `sum_S (-1)^|S| a_S(decreasing) a_1 a_{S^c}(increasing)` over `S` in
/// `{2..n}`, which equals the left-normed commutator `[a_1, ..., a_n]`.
pub fn descent_expand(a: &[AssocPoly]) -> Result<AssocPoly> {
    let n = a.len();
    if n < 2 {
        return invalid("descent expansion needs at least two factors");
    }
    let mut out = AssocPoly::zero();
    for mask in 0u64..(1u64 << (n - 1)) {
        let in_s = |i: usize| mask >> (i - 1) & 1 == 1;
        let mut order: Vec<usize> = (1..n).rev().filter(|&i| in_s(i)).collect();
        order.push(0);
        order.extend((1..n).filter(|&i| !in_s(i)));
        let mut term = AssocPoly::one();
        for i in order {
            term = term.mul(&a[i]);
        }
        if mask.count_ones() % 2 == 1 {
            term = term.scaled(&-BigInt::one());
        }
        out = out.add(&term);
    }
    Ok(out)
}

/// `[c, f_1, ..., f_k]` in Hall coordinates.
pub fn xi_inverse(basis: &HallBasis, c: usize, factors: &[LieElement]) -> Result<LieElement> {
    let mut parts = vec![basis.generator(c)];
    parts.extend_from_slice(factors);
    basis.left_normed(&parts)
}

/// Coefficient of `t^d` in `prod_k (1-t^k)^(-ranks[k-1])`.
pub fn pbw_dim(ranks: &[usize], d: u32) -> u128 {
    pbw_series(ranks, d as usize)[d as usize]
}

/// Checks `[a,b,c_1..c_r] = sum_S [[a, c_S], [b, c_{S^c}]]`, where `S` runs
/// over subsets of `1..r` and both index lists are increasing.
pub fn identity_3_17_check(
    basis: &HallBasis,
    a: &LieElement,
    b: &LieElement,
    c: &[LieElement],
) -> Result<bool> {
    let mut lhs_parts = vec![a.clone(), b.clone()];
    lhs_parts.extend_from_slice(c);
    let lhs = basis.left_normed(&lhs_parts)?;
    let r = c.len();
    let mut rhs = LieElement::zero();
    for mask in 0u64..(1u64 << r) {
        let mut left = vec![a.clone()];
        let mut right = vec![b.clone()];
        for (i, ci) in c.iter().enumerate() {
            if mask >> i & 1 == 1 {
                left.push(ci.clone());
            } else {
                right.push(ci.clone());
            }
        }
        let term = basis.bracket(&basis.left_normed(&left)?, &basis.left_normed(&right)?)?;
        rhs.add_scaled(&term, &BigInt::one());
    }
    Ok(lhs == rhs)
}

/// A free group word as a list of (generator, +1 or -1) syllables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupWord {
    syllables: Vec<(usize, i8)>,
}

impl GroupWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn generator(g: usize) -> Self {
        GroupWord {
            syllables: vec![(g, 1)],
        }
    }

    pub fn from_syllables(syllables: Vec<(usize, i8)>) -> Result<Self> {
        if syllables.iter().any(|&(_, e)| e != 1 && e != -1) {
            return invalid("exponents must be +1 or -1");
        }
        Ok(GroupWord { syllables })
    }

    pub fn syllables(&self) -> &[(usize, i8)] {
        &self.syllables
    }

    pub fn inverse(&self) -> Self {
        GroupWord {
            syllables: self.syllables.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    pub fn mul(&self, other: &GroupWord) -> Self {
        let mut syllables = self.syllables.clone();
        syllables.extend_from_slice(&other.syllables);
        GroupWord { syllables }
    }

    /// `[a,b] = a^-1 b^-1 a b`.
    pub fn commutator(a: &GroupWord, b: &GroupWord) -> Self {
        a.inverse().mul(&b.inverse()).mul(a).mul(b)
    }

    /// `[a_1, ..., a_k] = [[a_1, a_2], ..., a_k]`.
    pub fn left_normed(parts: &[GroupWord]) -> Result<Self> {
        let Some((first, rest)) = parts.split_first() else {
            return invalid("left-normed commutator of an empty list");
        };
        Ok(rest
            .iter()
            .fold(first.clone(), |acc, p| GroupWord::commutator(&acc, p)))
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        (0..e.unsigned_abs()).fold(GroupWord::identity(), |acc, _| acc.mul(&base))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MagnusSeries {
    pub poly: AssocPoly,
    pub cutoff: u32,
}

impl MagnusSeries {
    pub fn mul(&self, other: &MagnusSeries) -> MagnusSeries {
        let cutoff = self.cutoff.min(other.cutoff);
        MagnusSeries {
            poly: self.poly.mul_truncated(&other.poly, Some(cutoff)),
            cutoff,
        }
    }
}

/// Magnus expansion `g -> 1 + g`, `g^-1 -> 1 - g + g^2 - ...`, truncated at `cutoff`.
pub fn magnus(w: &GroupWord, degrees: &[u32], cutoff: u32) -> Result<MagnusSeries> {
    if cutoff == 0 {
        return invalid("Magnus cutoff must be at least 1");
    }
    let mut acc = AssocPoly::one();
    for &(g, e) in w.syllables() {
        let x = AssocPoly::letter(g, degrees);
        let factor = if e > 0 {
            AssocPoly::one().add(&x)
        } else {
            let mut f = AssocPoly::one();
            let mut power = AssocPoly::one();
            let mut sign = BigInt::one();
            for _ in 1..=cutoff / degrees[g] {
                power = power.mul_truncated(&x, Some(cutoff));
                sign = -sign;
                f = f.add(&power.scaled(&sign));
            }
            f
        };
        acc = acc.mul_truncated(&factor, Some(cutoff));
    }
    Ok(MagnusSeries { poly: acc, cutoff })
}

/// The lowest positive-degree part of a Magnus series.
pub fn lowest_term(s: &MagnusSeries) -> Result<(u32, AssocPoly)> {
    let rest = s.poly.sub(&AssocPoly::one());
    match rest.min_degree() {
        None => Err(LieError::TrivialToCutoff(s.cutoff)),
        Some(d) => Ok((d, rest.homogeneous_part(d))),
    }
}

/// True iff a homogeneous polynomial lies in the integer span of the
/// embedded Hall basis elements of its degree.
pub fn is_lie(basis: &HallBasis, p: &AssocPoly) -> Result<bool> {
    let Some(d) = p.min_degree() else {
        return Ok(true);
    };
    if p.terms().any(|(w, _)| w.degree() != d) {
        return invalid("polynomial is not homogeneous");
    }
    if d > basis.max_degree() {
        return Err(LieError::Overflow {
            degree: d,
            cutoff: basis.max_degree(),
        });
    }
    Ok(lie_coordinates(basis, p)?.is_some())
}

/// Hall coordinates of a homogeneous polynomial, if it is a Lie element.
pub fn lie_coordinates(basis: &HallBasis, p: &AssocPoly) -> Result<Option<LieElement>> {
    let Some(d) = p.min_degree() else {
        return Ok(Some(LieElement::zero()));
    };
    let mut emb = Embedder::new(basis);
    let images: Vec<AssocPoly> = basis
        .degree_range(d)
        .map(|i| emb.basis_element(i))
        .collect();
    let mut columns: BTreeMap<Word, usize> = BTreeMap::new();
    for img in &images {
        for (w, _) in img.terms() {
            let next = columns.len();
            columns.entry(w.clone()).or_insert(next);
        }
    }
    let to_vec = |q: &AssocPoly| -> Option<SparseVec> {
        let mut v: SparseVec = Vec::new();
        for (w, c) in q.terms() {
            v.push((*columns.get(w)?, c.clone()));
        }
        v.sort_by_key(|e| e.0);
        Some(v)
    };
    let Some(target) = to_vec(p) else {
        return Ok(None);
    };
    // Rows are the Hall images tagged with an identity block, so that the
    // combination found for `target` can be read off directly.
    let k = images.len();
    let width = columns.len();
    let mut lat = Lattice::zero(width + k);
    for (i, img) in images.iter().enumerate() {
        let mut v = to_vec(img).expect("column set covers every image");
        v.push((width + i, BigInt::one()));
        lat.insert(v);
    }
    let Some(coords) = lat.coordinates_prefix(&target, width) else {
        return Ok(None);
    };
    let start = basis.degree_range(d).start;
    Ok(Some(LieElement::from_terms(
        coords.into_iter().map(|(i, c)| (start + i, c)),
    )))
}

/// Checks `[a,[g_1..g_m]] = prod_kappa prod_{sigma in S_{m,kappa}}
/// [a, g_sigma(1), ..., g_sigma(m)]^((-1)^kappa)` in the Magnus expansion
/// through degree `weight + 1`, where `weight` is the smallest degree the
/// commutators can live in.
pub fn magnus_descent_check(
    a: &GroupWord,
    g: &[GroupWord],
    degrees: &[u32],
    cutoff: u32,
) -> Result<bool> {
    let m = g.len();
    if m < 2 {
        return invalid("need at least two group elements");
    }
    let lhs = magnus(
        &GroupWord::commutator(a, &GroupWord::left_normed(g)?),
        degrees,
        cutoff,
    )?;
    let mut rhs = MagnusSeries {
        poly: AssocPoly::one(),
        cutoff,
    };
    for mask in 0u64..(1u64 << (m - 1)) {
        let in_s = |i: usize| mask >> (i - 1) & 1 == 1;
        let mut order: Vec<usize> = (1..m).rev().filter(|&i| in_s(i)).collect();
        order.push(0);
        order.extend((1..m).filter(|&i| !in_s(i)));
        let mut parts = vec![a.clone()];
        parts.extend(order.iter().map(|&i| g[i].clone()));
        let mut w = GroupWord::left_normed(&parts)?;
        if mask.count_ones() % 2 == 1 {
            w = w.inverse();
        }
        rhs = rhs.mul(&magnus(&w, degrees, cutoff)?);
    }
    Ok(lhs == rhs)
}
