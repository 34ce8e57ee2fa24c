//! Integer lattices: Hermite and Smith normal forms, membership, saturation.
//!
//! Vectors are sparse, sorted by column, with no stored zeros. A [`Lattice`]
//! keeps an echelon basis keyed by pivot column; insertion merges a new
//! vector into the basis with extended-gcd row operations, so the basis
//! always spans exactly the lattice generated by everything inserted.

use std::borrow::Cow;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type SparseVec = Vec<(usize, BigInt)>;

/// `a*x + b*y` for sparse vectors.
pub fn lin_comb(a: &BigInt, x: &[(usize, BigInt)], b: &BigInt, y: &[(usize, BigInt)]) -> SparseVec {
    let mut out = Vec::with_capacity(x.len().max(y.len()));
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            let v = a * &x[i].1;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
        } else if take_y {
            let v = b * &y[j].1;
            if !v.is_zero() {
                out.push((y[j].0, v));
            }
            j += 1;
        } else {
            let v = a * &x[i].1 + b * &y[j].1;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// `x - q*y`, the common case of [`lin_comb`].
fn sub_multiple(x: &[(usize, BigInt)], q: &BigInt, y: &[(usize, BigInt)]) -> SparseVec {
    lin_comb(&BigInt::one(), x, &-q, y)
}

fn entry(v: &[(usize, BigInt)], col: usize) -> Option<&BigInt> {
    v.binary_search_by_key(&col, |e| e.0).ok().map(|k| &v[k].1)
}

pub fn sparse_from_dense(v: &[BigInt]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn dense_from_sparse(v: &[(usize, BigInt)], dim: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); dim];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(k: usize) -> Self {
        let mut m = Self::zeros(k, k);
        for i in 0..k {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(cols: usize, rows: &[Vec<T>]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "row {i} has the wrong length");
            for (j, x) in r.iter().enumerate() {
                m.set(i, j, x.clone().into());
            }
        }
        m
    }

    pub fn from_sparse_rows(cols: usize, rows: &[SparseVec]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            for (j, x) in r {
                m.set(i, *j, x.clone());
            }
        }
        m
    }

    pub fn diagonal<T: Into<BigInt> + Clone>(diag: &[T]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, x) in diag.iter().enumerate() {
            m.set(i, i, x.clone().into());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> BigInt {
        self.entries.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigInt) {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of range"
        );
        if x.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), x);
        }
    }

    pub fn row(&self, i: usize) -> SparseVec {
        self.entries
            .range((i, 0)..(i + 1, 0))
            .map(|(&(_, j), x)| (j, x.clone()))
            .collect()
    }
}

/// A sublattice of `Z^dim`, stored as an echelon basis keyed by pivot column.
///
/// The basis is brought into canonical Hermite form (positive pivots, entries
/// above each pivot reduced into `[0, pivot)`) on demand; two lattices are
/// equal iff their canonical bases are equal.
#[derive(Clone, Debug)]
pub struct Lattice {
    dim: usize,
    pivots: BTreeMap<usize, SparseVec>,
    reduced: bool,
}

impl PartialEq for Lattice {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.hnf_rows() == other.hnf_rows()
    }
}

impl Eq for Lattice {}

impl Lattice {
    pub fn zero(dim: usize) -> Self {
        Lattice {
            dim,
            pivots: BTreeMap::new(),
            reduced: true,
        }
    }

    pub fn full(dim: usize) -> Self {
        let mut l = Self::zero(dim);
        for i in 0..dim {
            l.pivots.insert(i, vec![(i, BigInt::one())]);
        }
        l
    }

    pub fn span<I: IntoIterator<Item = SparseVec>>(dim: usize, rows: I) -> Self {
        let mut l = Self::zero(dim);
        for r in rows {
            l.insert(r);
        }
        l.canonicalize();
        l
    }

    pub fn from_matrix(m: &IntMatrix) -> Self {
        Self::span(m.cols(), (0..m.rows()).map(|i| m.row(i)))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.pivots.keys().copied().collect()
    }

    /// Adds `v` to the generating set. Returns true if the rank grew.
    pub fn insert(&mut self, mut v: SparseVec) -> bool {
        debug_assert!(v.iter().all(|(i, x)| *i < self.dim && !x.is_zero()));
        loop {
            let Some((c, lead)) = v.first().map(|(c, x)| (*c, x.clone())) else {
                return false;
            };
            match self.pivots.get_mut(&c) {
                None => {
                    if lead.is_negative() {
                        for e in v.iter_mut() {
                            e.1 = -&e.1;
                        }
                    }
                    self.pivots.insert(c, v);
                    self.reduced = false;
                    return true;
                }
                Some(p) => {
                    let a = p[0].1.clone();
                    if lead.is_multiple_of(&a) {
                        v = sub_multiple(&v, &(&lead / &a), p);
                    } else {
                        let eg = a.extended_gcd(&lead);
                        let (g, s, t) = (eg.gcd, eg.x, eg.y);
                        let new_p = lin_comb(&s, p, &t, &v);
                        v = lin_comb(&(&a / &g), &v, &-(&lead / &g), p);
                        *p = new_p;
                        self.reduced = false;
                    }
                }
            }
        }
    }

    pub fn insert_all<I: IntoIterator<Item = SparseVec>>(&mut self, rows: I) {
        for r in rows {
            self.insert(r);
        }
    }

    fn reduce_rows(pivots: &mut BTreeMap<usize, SparseVec>) {
        let cols: Vec<usize> = pivots.keys().copied().collect();
        for (k, &ci) in cols.iter().enumerate() {
            let row_i = pivots[&ci].clone();
            let a = row_i[0].1.clone();
            for &cj in &cols[..k] {
                let row_j = pivots.get_mut(&cj).unwrap();
                if let Some(e) = entry(row_j, ci) {
                    let q = e.div_floor(&a);
                    if !q.is_zero() {
                        *row_j = sub_multiple(row_j, &q, &row_i);
                    }
                }
            }
        }
    }

    pub fn canonicalize(&mut self) {
        if !self.reduced {
            Self::reduce_rows(&mut self.pivots);
            self.reduced = true;
        }
    }

    fn canonical(&self) -> Cow<'_, BTreeMap<usize, SparseVec>> {
        if self.reduced {
            Cow::Borrowed(&self.pivots)
        } else {
            let mut p = self.pivots.clone();
            Self::reduce_rows(&mut p);
            Cow::Owned(p)
        }
    }

    /// Canonical Hermite basis rows, in increasing pivot order.
    pub fn hnf_rows(&self) -> Vec<SparseVec> {
        self.canonical().values().cloned().collect()
    }

    /// Echelon basis rows (not necessarily reduced), in increasing pivot order.
    pub fn rows(&self) -> impl Iterator<Item = &SparseVec> {
        self.pivots.values()
    }

    pub fn to_matrix(&self) -> IntMatrix {
        IntMatrix::from_sparse_rows(self.dim, &self.hnf_rows())
    }

    /// Coordinates of `v` in the echelon basis (row order), if `v` lies in the lattice.
    pub fn coordinates(&self, v: &[(usize, BigInt)]) -> Option<Vec<BigInt>> {
        let index: BTreeMap<usize, usize> = self
            .pivots
            .keys()
            .enumerate()
            .map(|(k, c)| (*c, k))
            .collect();
        let mut coords = vec![BigInt::zero(); self.pivots.len()];
        let mut v: SparseVec = v.to_vec();
        while let Some((c, lead)) = v.first().map(|(c, x)| (*c, x.clone())) {
            let p = self.pivots.get(&c)?;
            let (q, r) = lead.div_rem(&p[0].1);
            if !r.is_zero() {
                return None;
            }
            v = sub_multiple(&v, &q, p);
            coords[index[&c]] = q;
        }
        Some(coords)
    }

    /// For a lattice whose rows are `(image | tag)` with images in the first
    /// `width` columns: finds rows whose images sum to `v` and returns the
    /// matching combination of tags (shifted down by `width`).
    pub fn coordinates_prefix(&self, v: &[(usize, BigInt)], width: usize) -> Option<SparseVec> {
        let mut v: SparseVec = v.to_vec();
        while let Some((c, lead)) = v.first().map(|(c, x)| (*c, x.clone())) {
            if c >= width {
                break;
            }
            let p = self.pivots.get(&c)?;
            let (q, r) = lead.div_rem(&p[0].1);
            if !r.is_zero() {
                return None;
            }
            v = sub_multiple(&v, &q, p);
        }
        Some(v.into_iter().map(|(c, x)| (c - width, -x)).collect())
    }

    pub fn contains(&self, v: &[(usize, BigInt)]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_dense(&self, v: &[BigInt]) -> bool {
        assert_eq!(v.len(), self.dim);
        self.contains(&sparse_from_dense(v))
    }

    pub fn contains_lattice(&self, other: &Lattice) -> bool {
        other.rows().all(|r| self.contains(r))
    }

    pub fn sum(&self, other: &Lattice) -> Lattice {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        out.insert_all(other.rows().cloned());
        out.canonicalize();
        out
    }

    /// Intersection with the coordinate sublattice on the columns where `keep` is true.
    pub fn intersect_coordinates(&self, keep: &[bool]) -> Lattice {
        assert_eq!(keep.len(), self.dim);
        let mut order: Vec<usize> = (0..self.dim).filter(|&c| !keep[c]).collect();
        let split = order.len();
        order.extend((0..self.dim).filter(|&c| keep[c]));
        let mut to_new = vec![0; self.dim];
        for (new, &old) in order.iter().enumerate() {
            to_new[old] = new;
        }
        let mut permuted = Lattice::zero(self.dim);
        for r in self.rows() {
            let mut v: SparseVec = r.iter().map(|(c, x)| (to_new[*c], x.clone())).collect();
            v.sort_by_key(|e| e.0);
            permuted.insert(v);
        }
        let kept = permuted.pivots.range(split..).map(|(_, r)| {
            let mut v: SparseVec = r.iter().map(|(c, x)| (order[*c], x.clone())).collect();
            v.sort_by_key(|e| e.0);
            v
        });
        Lattice::span(self.dim, kept.collect::<Vec<_>>())
    }

    /// Elementary divisors of the basis matrix.
    pub fn elementary_divisors(&self) -> Vec<BigInt> {
        let canon = self.canonical();
        let mut ones = 0;
        let mut rest: Vec<&SparseVec> = Vec::new();
        for r in canon.values() {
            if r[0].1.is_one() {
                ones += 1;
            } else {
                rest.push(r);
            }
        }
        let mut out = vec![BigInt::one(); ones];
        if !rest.is_empty() {
            // Unit-pivot columns are zero in the remaining rows of a reduced
            // basis, so they split off as a direct summand.
            let mut cols: Vec<usize> = rest.iter().flat_map(|r| r.iter().map(|e| e.0)).collect();
            cols.sort_unstable();
            cols.dedup();
            let pos: BTreeMap<usize, usize> =
                cols.iter().enumerate().map(|(k, c)| (*c, k)).collect();
            let dense: Vec<Vec<BigInt>> = rest
                .iter()
                .map(|r| {
                    let mut d = vec![BigInt::zero(); cols.len()];
                    for (c, x) in r.iter() {
                        d[pos[c]] = x.clone();
                    }
                    d
                })
                .collect();
            out.extend(smith_dense(dense));
        }
        out
    }

    /// True iff `Z^dim / self` is torsion-free.
    pub fn is_saturated(&self) -> bool {
        if self.pivots.values().all(|r| r[0].1.is_one()) {
            return true;
        }
        self.elementary_divisors().iter().all(|d| d.is_one())
    }

    /// True iff `self` is contained in `sup` and `sup / self` is torsion-free.
    pub fn is_saturated_in(&self, sup: &Lattice) -> bool {
        let mut coords = Vec::with_capacity(self.rank());
        for r in self.rows() {
            match sup.coordinates(r) {
                Some(c) => coords.push(sparse_from_dense(&c)),
                None => return false,
            }
        }
        Lattice::span(sup.rank(), coords).is_saturated()
    }
}

pub fn hnf(m: &IntMatrix) -> Lattice {
    Lattice::from_matrix(m)
}

/// Elementary divisors `d1 | d2 | ...` of `m`, one per unit of rank.
pub fn snf(m: &IntMatrix) -> Vec<BigInt> {
    Lattice::from_matrix(m).elementary_divisors()
}

pub fn is_saturated(sub: &Lattice) -> bool {
    sub.is_saturated()
}

pub fn member(v: &[BigInt], sub: &Lattice) -> bool {
    sub.contains_dense(v)
}

/// Rank of the sum, and whether the sum is direct (stacked rank = sum of ranks).
pub fn sum_rank(subs: &[&Lattice]) -> (usize, bool) {
    let Some(first) = subs.first() else {
        return (0, true);
    };
    let mut total = Lattice::zero(first.dim());
    let mut individual = 0;
    for s in subs {
        assert_eq!(s.dim(), first.dim(), "lattices in different ambient spaces");
        individual += s.rank();
        total.insert_all(s.rows().cloned());
    }
    (total.rank(), total.rank() == individual)
}

/// Diagonal of a Smith form of a dense matrix (nonzero entries only).
fn smith_dense(mut m: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = min_abs_entry(&m, t) else {
            break;
        };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if !m[i][t].is_zero() {
                    let q = &m[i][t] / &m[t][t];
                    for j in t..cols {
                        let v = &q * &m[t][j];
                        m[i][j] -= v;
                    }
                    if !m[i][t].is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..cols {
                if !m[t][j].is_zero() {
                    let q = &m[t][j] / &m[t][t];
                    for row in m.iter_mut().skip(t) {
                        let v = &q * &row[t];
                        row[j] -= v;
                    }
                    if !m[t][j].is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                let (pi, pj) = min_abs_entry_in_cross(&m, t);
                m.swap(t, pi);
                for row in m.iter_mut() {
                    row.swap(t, pj);
                }
                continue;
            }
            let p = m[t][t].clone();
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !m[i][j].is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    for j in t..cols {
                        let v = m[i][j].clone();
                        m[t][j] += v;
                    }
                }
                None => break,
            }
        }
        diag.push(m[t][t].abs());
    }
    diag
}

fn min_abs_entry(m: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in m.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < m[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn min_abs_entry_in_cross(m: &[Vec<BigInt>], t: usize) -> (usize, usize) {
    let mut best = (t, t);
    let better = |x: &BigInt, b: &BigInt| !x.is_zero() && (b.is_zero() || x.abs() < b.abs());
    for i in t..m.len() {
        if better(&m[i][t], &m[best.0][best.1]) {
            best = (i, t);
        }
    }
    for j in t..m[t].len() {
        if better(&m[t][j], &m[best.0][best.1]) {
            best = (t, j);
        }
    }
    best
}
