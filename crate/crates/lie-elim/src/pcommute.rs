//! Partial commutation relations, the relator ideal of a partially
//! commutative free Lie algebra, and the elimination algorithm that splits
//! `L(y_1..y_n)` into explicit free pieces.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::core_lie::{Alphabet, HallBasis, LieElement, LieMonomial};
use crate::error::{invalid, LieError, Result};
use crate::zmodule::{sum_rank, Lattice};

/// A symmetric irreflexive relation on `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialCommutation {
    n: usize,
    pairs: BTreeSet<(usize, usize)>,
}

impl PartialCommutation {
    /// Builds the symmetric closure of `edges` (1-based).
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut pairs = BTreeSet::new();
        for &(a, b) in edges {
            if a == b {
                return invalid(format!("self-loop ({a},{a})"));
            }
            if a == 0 || b == 0 || a > n || b > n {
                return invalid(format!("pair ({a},{b}) outside 1..={n}"));
            }
            pairs.insert((a, b));
            pairs.insert((b, a));
        }
        Ok(PartialCommutation { n, pairs })
    }

    pub fn empty(n: usize) -> Self {
        PartialCommutation {
            n,
            pairs: BTreeSet::new(),
        }
    }

    /// The complete relation on `1..=n`.
    pub fn complete(n: usize) -> Self {
        let edges: Vec<(usize, usize)> =
            (1..=n).flat_map(|a| (1..a).map(move |b| (a, b))).collect();
        Self::new(n, &edges).expect("complete graph is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.pairs.contains(&(a, b))
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.pairs.len() / 2
    }

    /// The selection `{(a,b) in theta : a > b}`, sorted.
    pub fn delta(&self) -> Vec<(usize, usize)> {
        self.pairs.iter().copied().filter(|(a, b)| a > b).collect()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.pairs.range((v, 0)..(v + 1, 0)).map(|p| p.1).collect()
    }

    /// The relation restricted to `1..=k`.
    pub fn restrict(&self, k: usize) -> Self {
        PartialCommutation {
            n: k,
            pairs: self
                .pairs
                .iter()
                .copied()
                .filter(|&(a, b)| a <= k && b <= k)
                .collect(),
        }
    }

    /// Relabels so that new vertex `i` is old vertex `order[i-1]`.
    pub fn relabel(&self, order: &[usize]) -> Self {
        let mut new_of = vec![0; self.n + 1];
        for (i, &old) in order.iter().enumerate() {
            new_of[old] = i + 1;
        }
        PartialCommutation {
            n: self.n,
            pairs: self
                .pairs
                .iter()
                .map(|&(a, b)| (new_of[a], new_of[b]))
                .collect(),
        }
    }

    /// True if every cycle of length at least 4 has a chord.
    pub fn is_chordal(&self) -> bool {
        let order = self.mcs_order();
        let g = self.relabel(&order);
        (1..=g.n).all(|v| {
            let back: Vec<usize> = g.neighbors(v).into_iter().filter(|&u| u < v).collect();
            back.iter()
                .all(|&a| back.iter().all(|&b| a == b || g.contains(a, b)))
        })
    }

    pub fn has_triangle(&self) -> bool {
        self.delta()
            .iter()
            .any(|&(a, b)| (1..b).any(|c| self.contains(a, c) && self.contains(b, c)))
    }

    /// Maximum cardinality search order, starting from the smallest
    /// non-isolated vertex; ties go to the smallest label.
    fn mcs_order(&self) -> Vec<usize> {
        let start = (1..=self.n)
            .find(|&v| !self.neighbors(v).is_empty())
            .unwrap_or(1);
        let mut weight = vec![0usize; self.n + 1];
        let mut done = vec![false; self.n + 1];
        let mut order = Vec::with_capacity(self.n);
        let mut next = Some(start);
        while let Some(v) = next {
            done[v] = true;
            order.push(v);
            for u in self.neighbors(v) {
                weight[u] += 1;
            }
            next = (1..=self.n)
                .filter(|&u| !done[u])
                .max_by_key(|&u| (weight[u], std::cmp::Reverse(u)));
        }
        order
    }
}

/// A relation relabeled for the elimination algorithm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedTheta {
    pub theta: PartialCommutation,
    /// `original_label[i-1]` is the input label of vertex `i`.
    pub original_label: Vec<usize>,
    pub is_empty: bool,
}

impl NormalizedTheta {
    pub fn names(&self, prefix: &str) -> Vec<String> {
        self.original_label
            .iter()
            .map(|l| format!("{prefix}{l}"))
            .collect()
    }
}

/// Relabels vertices in maximum cardinality search order. For a nonempty
/// relation this puts an edge between vertices 1 and 2, and for a chordal
/// relation the earlier neighbours of every vertex form a clique.
pub fn validate(theta: &PartialCommutation) -> NormalizedTheta {
    if theta.is_empty() {
        return NormalizedTheta {
            theta: theta.clone(),
            original_label: (1..=theta.n()).collect(),
            is_empty: true,
        };
    }
    let order = theta.mcs_order();
    NormalizedTheta {
        theta: theta.relabel(&order),
        original_label: order,
        is_empty: false,
    }
}

/// Graphs on `n` vertices with at most `max_edges` edges, one per isomorphism class.
pub fn graphs_up_to_iso(n: usize, max_edges: usize) -> Vec<PartialCommutation> {
    let all_edges: Vec<(usize, usize)> =
        (1..=n).flat_map(|a| (1..a).map(move |b| (a, b))).collect();
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << all_edges.len()) {
        if mask.count_ones() as usize > max_edges {
            continue;
        }
        let edges: Vec<(usize, usize)> = all_edges
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, e)| *e)
            .collect();
        let canon = perms
            .iter()
            .map(|p| {
                let mut e: Vec<(usize, usize)> = edges
                    .iter()
                    .map(|&(a, b)| {
                        let (x, y) = (p[a - 1], p[b - 1]);
                        (x.max(y), x.min(y))
                    })
                    .collect();
                e.sort_unstable();
                e
            })
            .min()
            .unwrap_or_default();
        if seen.insert(canon.clone()) {
            out.push(PartialCommutation::new(n, &canon).expect("valid edges"));
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n);
            out.push(q);
        }
    }
    out
}

/// An ideal stored degree by degree as lattices in Hall coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedIdeal {
    max_degree: u32,
    /// `lattices[d]` for `d = 0..=max_degree`; index 0 is unused.
    lattices: Vec<Lattice>,
}

impl GradedIdeal {
    pub fn from_lattices(lattices: Vec<Lattice>) -> Self {
        let mut all = vec![Lattice::zero(0)];
        all.extend(lattices);
        GradedIdeal {
            max_degree: (all.len() - 1) as u32,
            lattices: all,
        }
    }

    pub fn zero(basis: &HallBasis, max_degree: u32) -> Self {
        Self::from_lattices(
            (1..=max_degree)
                .map(|d| Lattice::zero(basis.degree_range(d).len()))
                .collect(),
        )
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn lattice(&self, d: u32) -> &Lattice {
        &self.lattices[d as usize]
    }

    pub fn rank(&self, d: u32) -> usize {
        self.lattices[d as usize].rank()
    }

    pub fn ranks(&self) -> Vec<usize> {
        (1..=self.max_degree).map(|d| self.rank(d)).collect()
    }

    /// Hermite basis of the degree-`d` part as Lie elements.
    pub fn elements(&self, basis: &HallBasis, d: u32) -> Vec<LieElement> {
        self.lattice(d)
            .hnf_rows()
            .iter()
            .map(|r| basis.element_from_vector(d, r))
            .collect()
    }
}

/// Degree-wise closure of `gens` under brackets with the alphabet generators.
pub fn ideal_generate(
    basis: &HallBasis,
    gens: &[LieElement],
    max_degree: u32,
) -> Result<GradedIdeal> {
    if max_degree > basis.max_degree() {
        return Err(LieError::Overflow {
            degree: max_degree,
            cutoff: basis.max_degree(),
        });
    }
    let mut by_degree: Vec<Vec<&LieElement>> = vec![Vec::new(); max_degree as usize + 1];
    for g in gens {
        if g.is_zero() {
            continue;
        }
        match basis.homogeneous_degree(g) {
            Some(d) if d <= max_degree => by_degree[d as usize].push(g),
            Some(_) => {}
            None => return invalid("ideal generators must be homogeneous"),
        }
    }
    let letters: Vec<(u32, LieElement)> = basis
        .alphabet()
        .generators()
        .iter()
        .map(|g| (g.degree, basis.generator(g.id)))
        .collect();
    let mut lattices = vec![Lattice::zero(0)];
    for d in 1..=max_degree {
        let mut lat = Lattice::zero(basis.degree_range(d).len());
        for g in &by_degree[d as usize] {
            lat.insert(basis.vector(g, d)?);
        }
        for (k, letter) in &letters {
            if *k >= d {
                continue;
            }
            let below: &Lattice = &lattices[(d - k) as usize];
            for row in below.rows() {
                let u = basis.element_from_vector(d - k, row);
                lat.insert(basis.vector(&basis.bracket(&u, letter)?, d)?);
            }
        }
        lat.canonicalize();
        lattices.push(lat);
    }
    Ok(GradedIdeal {
        max_degree,
        lattices,
    })
}

/// `[y_a, y_b]` for `(a,b)` in the selection, with `y_i` the generator `i-1`.
pub fn raag_relators(basis: &HallBasis, theta: &PartialCommutation) -> Result<Vec<LieElement>> {
    theta
        .delta()
        .iter()
        .map(|&(a, b)| basis.bracket(&basis.generator(a - 1), &basis.generator(b - 1)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RaagRanks {
    pub ranks: Vec<usize>,
    pub ideal_ranks: Vec<usize>,
    pub saturated: Vec<bool>,
}

/// Ranks of `L(y_1..y_n)/I(theta)` in degrees `1..=max_degree`.
pub fn raag_ranks(theta: &PartialCommutation, max_degree: u32) -> Result<RaagRanks> {
    if theta.n() == 0 {
        return invalid("relation on zero vertices");
    }
    let basis = HallBasis::new(Alphabet::numbered("y", theta.n())?, max_degree)?;
    let ideal = ideal_generate(&basis, &raag_relators(&basis, theta)?, max_degree)?;
    Ok(raag_ranks_from(&basis, &ideal))
}

pub fn raag_ranks_from(basis: &HallBasis, ideal: &GradedIdeal) -> RaagRanks {
    let dmax = ideal.max_degree();
    RaagRanks {
        ranks: (1..=dmax)
            .map(|d| basis.degree_range(d).len() - ideal.rank(d))
            .collect(),
        ideal_ranks: ideal.ranks(),
        saturated: (1..=dmax)
            .map(|d| ideal.lattice(d).is_saturated())
            .collect(),
    }
}

/// Moves the letters `y_j` with `(next, j)` in the selection to the front,
/// keeping their relative order. `word` is a sorted power word.
pub fn rearrange(word: &[usize], theta: &PartialCommutation, next: usize) -> Result<Vec<usize>> {
    if word.windows(2).any(|w| w[0] > w[1]) {
        return invalid("word must be sorted");
    }
    if word.iter().any(|&j| j >= next) {
        return invalid("letters must precede the next generator");
    }
    let (front, back): (Vec<usize>, Vec<usize>) =
        word.iter().partition(|&&j| theta.contains(next, j));
    Ok(front.into_iter().chain(back).collect())
}

/// A Lie element together with the bracket expression that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenEntry {
    pub elem: LieElement,
    pub tree: LieMonomial,
    pub degree: u32,
}

impl GenEntry {
    pub fn generator(basis: &HallBasis, id: usize) -> Self {
        GenEntry {
            elem: basis.generator(id),
            tree: LieMonomial::Leaf(id),
            degree: basis.alphabet().get(id).degree,
        }
    }

    pub fn bracket(basis: &HallBasis, a: &GenEntry, b: &GenEntry) -> Result<Self> {
        Ok(GenEntry {
            elem: basis.bracket(&a.elem, &b.elem)?,
            tree: LieMonomial::bracket(a.tree.clone(), b.tree.clone()),
            degree: a.degree + b.degree,
        })
    }

    pub fn left_normed(basis: &HallBasis, parts: &[&GenEntry]) -> Result<Self> {
        let (first, rest) = parts.split_first().expect("nonempty bracket");
        let mut acc = (*first).clone();
        for p in rest {
            acc = GenEntry::bracket(basis, &acc, p)?;
        }
        Ok(acc)
    }
}

/// The Hall basis of the free Lie algebra on a generating set, evaluated in
/// the ambient algebra and truncated at the cutoff.
#[derive(Clone, Debug)]
pub struct FreePiece {
    pub name: String,
    pub generators: Vec<GenEntry>,
    pub basis: Vec<GenEntry>,
}

impl FreePiece {
    pub fn new(
        ambient: &HallBasis,
        name: impl Into<String>,
        generators: Vec<GenEntry>,
        max_degree: u32,
    ) -> Result<Self> {
        let generators: Vec<GenEntry> = generators
            .into_iter()
            .filter(|g| g.degree <= max_degree)
            .collect();
        let mut piece = FreePiece {
            name: name.into(),
            generators,
            basis: Vec::new(),
        };
        if piece.generators.is_empty() {
            return Ok(piece);
        }
        let formal_alpha = Alphabet::new(
            piece
                .generators
                .iter()
                .enumerate()
                .map(|(i, g)| (format!("x{i}"), g.degree))
                .collect(),
        )?;
        let formal = HallBasis::new(formal_alpha, max_degree)?;
        let images: Vec<LieElement> = piece.generators.iter().map(|g| g.elem.clone()).collect();
        let trees: Vec<LieMonomial> = piece.generators.iter().map(|g| g.tree.clone()).collect();
        for (i, img) in formal
            .evaluate_into(&images, ambient)?
            .into_iter()
            .enumerate()
        {
            let elem = img.ok_or(LieError::Overflow {
                degree: formal.degree_of_index(i),
                cutoff: max_degree,
            })?;
            piece.basis.push(GenEntry {
                elem,
                tree: formal.monomial(i).substitute(&trees),
                degree: formal.degree_of_index(i),
            });
        }
        Ok(piece)
    }

    pub fn count(&self, d: u32) -> usize {
        self.basis.iter().filter(|e| e.degree == d).count()
    }

    pub fn lattice(&self, ambient: &HallBasis, d: u32) -> Result<Lattice> {
        entries_lattice(ambient, self.basis.iter().filter(|e| e.degree == d), d)
    }
}

pub fn entries_lattice<'a, I: IntoIterator<Item = &'a GenEntry>>(
    ambient: &HallBasis,
    entries: I,
    d: u32,
) -> Result<Lattice> {
    let mut lat = Lattice::zero(ambient.degree_range(d).len());
    for e in entries {
        lat.insert(ambient.vector(&e.elem, d)?);
    }
    lat.canonicalize();
    Ok(lat)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    /// Degree-one letter `y_j` (1-based).
    Letter(usize),
    Complement,
    Ideal,
}

#[derive(Clone, Debug)]
pub struct OrderedEntry {
    pub entry: GenEntry,
    pub role: Role,
}

/// One adjunction of a new generator to an ordered basis.
#[derive(Clone, Debug)]
pub struct StepOutput {
    /// Words containing a letter linked to the new generator.
    pub p1: Vec<GenEntry>,
    /// Words with no linked letter but some ideal basis element.
    pub p2: Vec<GenEntry>,
    /// All other words, starting with the new generator itself.
    pub p_rest: Vec<GenEntry>,
    /// `(P'' minus the new generator) wr {new generator}`.
    pub b_set: Vec<GenEntry>,
    /// `(P'_1 + P'_2) wr P''`.
    pub d_set: Vec<GenEntry>,
}

/// Sorted multisets of indices into `degrees` with total degree at most `budget`.
fn pbw_words(degrees: &[u32], budget: u32) -> Vec<Vec<usize>> {
    fn go(
        degrees: &[u32],
        start: usize,
        left: u32,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        out.push(cur.clone());
        for i in start..degrees.len() {
            if degrees[i] <= left {
                cur.push(i);
                go(degrees, i, left - degrees[i], cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(degrees, 0, budget, &mut Vec::new(), &mut out);
    out.sort_by_key(|w| (w.iter().map(|&i| degrees[i]).sum::<u32>(), w.len()));
    out
}

/// Brackets the new generator with every PBW word over `ordered`, after
/// moving linked letters to the front, and sorts the results into the
/// `P'_1`, `P'_2`, `P''` classes.
pub fn pbw_step(
    ambient: &HallBasis,
    ordered: &[OrderedEntry],
    next: &GenEntry,
    is_link: &dyn Fn(usize) -> bool,
    max_degree: u32,
) -> Result<StepOutput> {
    let budget = max_degree.saturating_sub(next.degree);
    let degrees: Vec<u32> = ordered.iter().map(|o| o.entry.degree).collect();
    let mut out = StepOutput {
        p1: vec![],
        p2: vec![],
        p_rest: vec![],
        b_set: vec![],
        d_set: vec![],
    };
    for word in pbw_words(&degrees, budget) {
        let letters: Vec<usize> = word
            .iter()
            .filter_map(|&i| match ordered[i].role {
                Role::Letter(j) => Some(j),
                _ => None,
            })
            .collect();
        let linked = letters.iter().any(|&j| is_link(j));
        let (front, back): (Vec<usize>, Vec<usize>) =
            word.iter().partition(|&&i| match ordered[i].role {
                Role::Letter(j) => is_link(j),
                _ => false,
            });
        let mut parts: Vec<&GenEntry> = vec![next];
        parts.extend(front.iter().chain(back.iter()).map(|&i| &ordered[i].entry));
        let entry = GenEntry::left_normed(ambient, &parts)?;
        if linked {
            out.p1.push(entry);
        } else if word.iter().any(|&i| ordered[i].role == Role::Ideal) {
            out.p2.push(entry);
        } else {
            out.p_rest.push(entry);
        }
    }
    for p in out.p_rest.iter().skip(1) {
        let mut cur = p.clone();
        loop {
            out.b_set.push(cur.clone());
            if cur.degree + next.degree > max_degree {
                break;
            }
            cur = GenEntry::bracket(ambient, &cur, next)?;
        }
    }
    fn extend(
        ambient: &HallBasis,
        cur: &GenEntry,
        tail: &[GenEntry],
        max_degree: u32,
        out: &mut Vec<GenEntry>,
    ) -> Result<()> {
        out.push(cur.clone());
        for q in tail {
            if cur.degree + q.degree <= max_degree {
                extend(
                    ambient,
                    &GenEntry::bracket(ambient, cur, q)?,
                    tail,
                    max_degree,
                    out,
                )?;
            }
        }
        Ok(())
    }
    let mut d_set = Vec::new();
    for p in out.p1.iter().chain(out.p2.iter()) {
        extend(ambient, p, &out.p_rest, max_degree, &mut d_set)?;
    }
    d_set.sort_by_key(|e| e.degree);
    out.b_set.sort_by_key(|e| e.degree);
    out.d_set = d_set;
    Ok(out)
}

/// Result of running the elimination algorithm for given images of `y_1..y_n`.
#[derive(Clone, Debug)]
pub struct EliminationRun {
    /// Hall basis on `{[y2,y1, y1^a, y2^b]}`, spanning the ideal on `y1, y2`.
    pub base_ideal: FreePiece,
    /// `L(B_3), ..., L(B_n)`.
    pub complement: Vec<FreePiece>,
    /// `L(D_3), ..., L(D_n)`.
    pub ideal: Vec<FreePiece>,
    pub steps: Vec<StepOutput>,
    /// The final ordered basis `Y < M_B3 < ... < M_Bn < M'_Y2 < M_D3 < ... < M_Dn`.
    pub ordered: Vec<OrderedEntry>,
}

fn ordered_basis(
    letters: &[GenEntry],
    complement: &[FreePiece],
    base: &FreePiece,
    ideal: &[FreePiece],
) -> Vec<OrderedEntry> {
    let mut ordered: Vec<OrderedEntry> = letters
        .iter()
        .enumerate()
        .map(|(j, e)| OrderedEntry {
            entry: e.clone(),
            role: Role::Letter(j + 1),
        })
        .collect();
    for piece in complement {
        ordered.extend(piece.basis.iter().map(|e| OrderedEntry {
            entry: e.clone(),
            role: Role::Complement,
        }));
    }
    for piece in std::iter::once(base).chain(ideal.iter()) {
        ordered.extend(piece.basis.iter().map(|e| OrderedEntry {
            entry: e.clone(),
            role: Role::Ideal,
        }));
    }
    ordered
}

/// Runs the elimination for `theta` (already relabeled so that `(2,1)` is an
/// edge) with `ys[i]` standing for `y_{i+1}` in the ambient algebra.
pub fn run_elimination(
    ambient: &HallBasis,
    ys: &[GenEntry],
    theta: &PartialCommutation,
    max_degree: u32,
) -> Result<EliminationRun> {
    let n = ys.len();
    if n < 2 || theta.n() != n {
        return invalid("elimination needs at least two generators and a matching relation");
    }
    if !theta.contains(2, 1) {
        return Err(LieError::Inapplicable(
            "(2,1) must be an edge; relabel with validate()".into(),
        ));
    }
    let (y1, y2) = (&ys[0], &ys[1]);
    let mut base_gens = Vec::new();
    if y1.degree + y2.degree <= max_degree {
        let mut head = GenEntry::bracket(ambient, y2, y1)?;
        loop {
            let mut cur = head.clone();
            loop {
                base_gens.push(cur.clone());
                if cur.degree + y2.degree > max_degree {
                    break;
                }
                cur = GenEntry::bracket(ambient, &cur, y2)?;
            }
            if head.degree + y1.degree > max_degree {
                break;
            }
            head = GenEntry::bracket(ambient, &head, y1)?;
        }
    }
    base_gens.sort_by_key(|e| e.degree);
    let base_ideal = FreePiece::new(ambient, "M'_Y2", base_gens, max_degree)?;
    let mut complement: Vec<FreePiece> = Vec::new();
    let mut ideal: Vec<FreePiece> = Vec::new();
    let mut steps = Vec::new();
    for kappa in 2..n {
        let ordered = ordered_basis(&ys[..kappa], &complement, &base_ideal, &ideal);
        let next_label = kappa + 1;
        let is_link = |j: usize| theta.contains(next_label, j);
        let step = pbw_step(ambient, &ordered, &ys[kappa], &is_link, max_degree)?;
        complement.push(FreePiece::new(
            ambient,
            format!("B_{next_label}"),
            step.b_set.clone(),
            max_degree,
        )?);
        ideal.push(FreePiece::new(
            ambient,
            format!("D_{next_label}"),
            step.d_set.clone(),
            max_degree,
        )?);
        steps.push(step);
    }
    let ordered = ordered_basis(ys, &complement, &base_ideal, &ideal);
    Ok(EliminationRun {
        base_ideal,
        complement,
        ideal,
        steps,
        ordered,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitCounts {
    pub degree: u32,
    pub p1: usize,
    pub p2: usize,
    pub p_rest: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StepReport {
    pub kappa: usize,
    /// Label of the adjoined generator, in input labels.
    pub next: String,
    pub b_generators: Vec<String>,
    pub d_generators: Vec<String>,
    pub split: Vec<SplitCounts>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EliminationRow {
    pub degree: u32,
    pub witt: usize,
    pub letters: usize,
    pub b_ranks: Vec<usize>,
    pub ideal_rank: usize,
    /// Witt rank equals letters + sum of complement ranks + ideal rank.
    pub identity_ok: bool,
    /// The ideal-side pieces span exactly the ideal generated by the relators.
    pub lattice_match: bool,
    /// All pieces together are linearly independent.
    pub independent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EliminationReport {
    pub n: usize,
    pub max_degree: u32,
    /// `relabel[i-1]` is the input label of working vertex `i`.
    pub relabel: Vec<usize>,
    pub chordal: bool,
    pub base_generators: Vec<String>,
    pub steps: Vec<StepReport>,
    pub rows: Vec<EliminationRow>,
}

impl EliminationReport {
    pub fn ok(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.identity_ok && r.lattice_match && r.independent)
    }
}

/// Runs the elimination algorithm on `L(y_1..y_n)` and checks, degree by
/// degree, the rank identity, the ideal lattice, and joint independence.
pub fn eliminate(theta: &PartialCommutation, max_degree: u32) -> Result<EliminationReport> {
    if theta.is_empty() {
        return Err(LieError::Inapplicable(
            "relation is empty; the ideal is zero".into(),
        ));
    }
    if max_degree < 2 {
        return invalid("elimination needs a cutoff of at least 2");
    }
    let norm = validate(theta);
    let t = &norm.theta;
    let n = t.n();
    let names = norm.names("y");
    let ambient = HallBasis::new(
        Alphabet::new(names.iter().map(|s| (s.clone(), 1)).collect())?,
        max_degree,
    )?;
    let ys: Vec<GenEntry> = (0..n).map(|i| GenEntry::generator(&ambient, i)).collect();
    let run = run_elimination(&ambient, &ys, t, max_degree)?;
    let ideal = ideal_generate(&ambient, &raag_relators(&ambient, t)?, max_degree)?;
    let render = |e: &GenEntry| e.tree.render(&names);
    let steps = run
        .steps
        .iter()
        .enumerate()
        .map(|(k, s)| StepReport {
            kappa: k + 2,
            next: names[k + 2].clone(),
            b_generators: s.b_set.iter().map(render).collect(),
            d_generators: s.d_set.iter().map(render).collect(),
            split: (1..=max_degree)
                .map(|d| SplitCounts {
                    degree: d,
                    p1: s.p1.iter().filter(|e| e.degree == d).count(),
                    p2: s.p2.iter().filter(|e| e.degree == d).count(),
                    p_rest: s.p_rest.iter().filter(|e| e.degree == d).count(),
                })
                .collect(),
        })
        .collect();
    let mut rows = Vec::new();
    for d in 1..=max_degree {
        let witt = ambient.degree_range(d).len();
        let letters = if d == 1 { n } else { 0 };
        let mut pieces: Vec<Lattice> = Vec::new();
        let mut count = letters;
        let letter_lat = entries_lattice(&ambient, ys.iter().filter(|e| e.degree == d), d)?;
        pieces.push(letter_lat);
        let mut b_ranks = Vec::new();
        for p in &run.complement {
            let lat = p.lattice(&ambient, d)?;
            b_ranks.push(lat.rank());
            count += p.count(d);
            pieces.push(lat);
        }
        let mut ideal_side = Lattice::zero(witt);
        for p in std::iter::once(&run.base_ideal).chain(run.ideal.iter()) {
            let lat = p.lattice(&ambient, d)?;
            count += p.count(d);
            ideal_side = ideal_side.sum(&lat);
            pieces.push(lat);
        }
        let refs: Vec<&Lattice> = pieces.iter().collect();
        let (stacked, _) = sum_rank(&refs);
        let ideal_rank = ideal.rank(d);
        rows.push(EliminationRow {
            degree: d,
            witt,
            letters,
            b_ranks: b_ranks.clone(),
            ideal_rank,
            identity_ok: witt == letters + b_ranks.iter().sum::<usize>() + ideal_rank,
            lattice_match: &ideal_side == ideal.lattice(d),
            independent: stacked == count,
        });
    }
    Ok(EliminationReport {
        n,
        max_degree,
        relabel: norm.original_label.clone(),
        chordal: t.is_chordal(),
        base_generators: run.base_ideal.generators.iter().map(render).collect(),
        steps,
        rows,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LazardRow {
    pub degree: u32,
    pub total: usize,
    pub sub: usize,
    pub wreath: usize,
    pub independent: bool,
}

/// `L(A) = L(B) + L(C wr B)` degree by degree, with `B` the generators
/// where `in_b` is true and `C` the rest.
pub fn lazard_split(ambient: &HallBasis, in_b: &[bool], max_degree: u32) -> Result<Vec<LazardRow>> {
    let k = ambient.alphabet().len();
    if in_b.len() != k || in_b.iter().all(|&b| b) {
        return invalid("C must be a nonempty set of generators");
    }
    let b_gens: Vec<GenEntry> = (0..k)
        .filter(|&g| in_b[g])
        .map(|g| GenEntry::generator(ambient, g))
        .collect();
    let mut wreath_gens = Vec::new();
    fn grow(
        ambient: &HallBasis,
        cur: GenEntry,
        b: &[GenEntry],
        dmax: u32,
        out: &mut Vec<GenEntry>,
    ) -> Result<()> {
        for g in b {
            if cur.degree + g.degree <= dmax {
                grow(ambient, GenEntry::bracket(ambient, &cur, g)?, b, dmax, out)?;
            }
        }
        out.push(cur);
        Ok(())
    }
    for c in (0..k).filter(|&g| !in_b[g]) {
        grow(
            ambient,
            GenEntry::generator(ambient, c),
            &b_gens,
            max_degree,
            &mut wreath_gens,
        )?;
    }
    wreath_gens.sort_by_key(|e| e.degree);
    let wreath = FreePiece::new(ambient, "C wr B", wreath_gens, max_degree)?;
    let mut rows = Vec::new();
    for d in 1..=max_degree {
        let sub_lat = Lattice::span(ambient.degree_range(d).len(), {
            let mask = ambient.sub_alphabet_mask(d, in_b);
            mask.iter()
                .enumerate()
                .filter(|(_, &m)| m)
                .map(|(i, _)| vec![(i, BigInt::one())])
                .collect::<Vec<_>>()
        });
        let w_lat = wreath.lattice(ambient, d)?;
        let (stacked, direct) = sum_rank(&[&sub_lat, &w_lat]);
        rows.push(LazardRow {
            degree: d,
            total: ambient.degree_range(d).len(),
            sub: sub_lat.rank(),
            wreath: w_lat.rank(),
            independent: direct
                && w_lat.rank() == wreath.count(d)
                && stacked == sub_lat.rank() + w_lat.rank(),
        });
    }
    Ok(rows)
}
