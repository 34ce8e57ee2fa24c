//! Free Lie algebras over the integers on degree-weighted generators.
//!
//! Basis elements are M. Hall's basic commutators. Elements are numbered
//! degree-first; inside a degree, generators come first (by id), then
//! brackets `[a,b]` ordered by `(index(a), index(b))`. A bracket `[a,b]` is
//! basic iff `a > b` and either `a` is a generator or `a = [a1,a2]` with
//! `a2 <= b`, so the degree-2 elements read `[y2,y1]` (larger leaf first).
//!
//! Every algebra object carries a degree cutoff and refuses to produce
//! anything above it.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{invalid, LieError, Result};
use crate::zmodule::SparseVec;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Generator {
    pub id: usize,
    pub name: String,
    pub degree: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Alphabet {
    generators: Vec<Generator>,
}

impl Alphabet {
    pub fn new<S: Into<String>>(gens: Vec<(S, u32)>) -> Result<Self> {
        if gens.is_empty() {
            return invalid("alphabet must be nonempty");
        }
        let mut generators = Vec::with_capacity(gens.len());
        for (id, (name, degree)) in gens.into_iter().enumerate() {
            let name = name.into();
            if degree == 0 {
                return invalid(format!("generator {name} has degree 0"));
            }
            if generators.iter().any(|g: &Generator| g.name == name) {
                return invalid(format!("duplicate generator name {name}"));
            }
            generators.push(Generator { id, name, degree });
        }
        Ok(Alphabet { generators })
    }

    /// `prefix1, ..., prefixk`, all of degree 1.
    pub fn numbered(prefix: &str, k: usize) -> Result<Self> {
        Self::new((1..=k).map(|i| (format!("{prefix}{i}"), 1)).collect())
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn get(&self, id: usize) -> &Generator {
        &self.generators[id]
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.generators.iter().map(|g| g.degree).collect()
    }

    pub fn names(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.name.clone()).collect()
    }
}

/// A bracket tree over generator ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LieMonomial {
    Leaf(usize),
    Node(Box<LieMonomial>, Box<LieMonomial>),
}

impl LieMonomial {
    pub fn bracket(a: LieMonomial, b: LieMonomial) -> LieMonomial {
        LieMonomial::Node(Box::new(a), Box::new(b))
    }

    /// `[x1, x2, ..., xk]`, bracketing from the left.
    pub fn left_normed(parts: Vec<LieMonomial>) -> Option<LieMonomial> {
        let mut it = parts.into_iter();
        let first = it.next()?;
        Some(it.fold(first, LieMonomial::bracket))
    }

    pub fn degree(&self, degrees: &[u32]) -> u32 {
        match self {
            LieMonomial::Leaf(g) => degrees[*g],
            LieMonomial::Node(a, b) => a.degree(degrees) + b.degree(degrees),
        }
    }

    pub fn leaves(&self, out: &mut Vec<usize>) {
        match self {
            LieMonomial::Leaf(g) => out.push(*g),
            LieMonomial::Node(a, b) => {
                a.leaves(out);
                b.leaves(out);
            }
        }
    }

    /// Replaces every leaf `g` by `subst[g]`.
    pub fn substitute(&self, subst: &[LieMonomial]) -> LieMonomial {
        match self {
            LieMonomial::Leaf(g) => subst[*g].clone(),
            LieMonomial::Node(a, b) => {
                LieMonomial::bracket(a.substitute(subst), b.substitute(subst))
            }
        }
    }

    fn left_spine(&self) -> Option<Vec<usize>> {
        match self {
            LieMonomial::Leaf(g) => Some(vec![*g]),
            LieMonomial::Node(a, b) => match **b {
                LieMonomial::Leaf(g) => {
                    let mut s = a.left_spine()?;
                    s.push(g);
                    Some(s)
                }
                _ => None,
            },
        }
    }

    /// `[y2,y1,y1]` when the tree is a left-normed bracket of generators,
    /// nested pairs otherwise (`[[s,y2],[s,y1]]`).
    pub fn render(&self, names: &[String]) -> String {
        if let LieMonomial::Leaf(g) = self {
            return names[*g].clone();
        }
        if let Some(spine) = self.left_spine() {
            let parts: Vec<&str> = spine.iter().map(|g| names[*g].as_str()).collect();
            return format!("[{}]", parts.join(","));
        }
        match self {
            LieMonomial::Node(a, b) => format!("[{},{}]", a.render(names), b.render(names)),
            LieMonomial::Leaf(_) => unreachable!(),
        }
    }
}

/// A sparse integer combination of Hall basis elements, keyed by global index.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LieElement {
    coeffs: BTreeMap<usize, BigInt>,
}

impl LieElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(index: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(index, BigInt::one());
        LieElement { coeffs }
    }

    pub fn from_terms<I: IntoIterator<Item = (usize, BigInt)>>(terms: I) -> Self {
        let mut e = Self::zero();
        for (i, c) in terms {
            e.add_term(i, &c);
        }
        e
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, index: usize) -> BigInt {
        self.coeffs.get(&index).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().map(|(i, c)| (*i, c))
    }

    pub fn add_term(&mut self, index: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(index).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&index);
        }
    }

    pub fn add_scaled(&mut self, other: &LieElement, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for (i, x) in &other.coeffs {
            self.add_term(*i, &(x * c));
        }
    }

    pub fn scaled(&self, c: &BigInt) -> LieElement {
        if c.is_zero() {
            return Self::zero();
        }
        LieElement {
            coeffs: self.coeffs.iter().map(|(i, x)| (*i, x * c)).collect(),
        }
    }

    pub fn neg(&self) -> LieElement {
        LieElement {
            coeffs: self.coeffs.iter().map(|(i, x)| (*i, -x)).collect(),
        }
    }

    pub fn add(&self, other: &LieElement) -> LieElement {
        let mut out = self.clone();
        out.add_scaled(other, &BigInt::one());
        out
    }

    pub fn sub(&self, other: &LieElement) -> LieElement {
        let mut out = self.clone();
        out.add_scaled(other, &-BigInt::one());
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HallKind {
    Leaf(usize),
    Node(usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HallElem {
    pub kind: HallKind,
    pub degree: u32,
}

/// Hall basis of the free Lie algebra on an alphabet, up to a degree cutoff.
#[derive(Debug)]
pub struct HallBasis {
    alphabet: Alphabet,
    max_degree: u32,
    elems: Vec<HallElem>,
    /// `offsets[d]..offsets[d+1]` are the indices of degree `d`.
    offsets: Vec<usize>,
    leaf_index: Vec<usize>,
    node_index: HashMap<(usize, usize), usize>,
    cache: RwLock<HashMap<(usize, usize), Arc<LieElement>>>,
}

pub fn hall_basis(alphabet: &Alphabet, max_degree: u32) -> Result<HallBasis> {
    HallBasis::new(alphabet.clone(), max_degree)
}

impl HallBasis {
    pub fn new(alphabet: Alphabet, max_degree: u32) -> Result<Self> {
        if max_degree == 0 {
            return invalid("degree cutoff must be at least 1");
        }
        let dmax = max_degree as usize;
        let mut elems: Vec<HallElem> = Vec::new();
        let mut offsets = vec![0usize; dmax + 2];
        let mut leaf_index = vec![usize::MAX; alphabet.len()];
        let mut node_index = HashMap::new();
        for d in 1..=dmax {
            offsets[d] = elems.len();
            for g in alphabet.generators() {
                if g.degree as usize == d {
                    leaf_index[g.id] = elems.len();
                    elems.push(HallElem {
                        kind: HallKind::Leaf(g.id),
                        degree: g.degree,
                    });
                }
            }
            let mut pairs = Vec::new();
            for p in (d.div_ceil(2))..d {
                let q = d - p;
                for a in offsets[p]..offsets[p + 1] {
                    for b in offsets[q]..offsets[q + 1].min(a) {
                        let basic = match elems[a].kind {
                            HallKind::Leaf(_) => true,
                            HallKind::Node(_, a2) => a2 <= b,
                        };
                        if basic {
                            pairs.push((a, b));
                        }
                    }
                }
            }
            pairs.sort_unstable();
            for (a, b) in pairs {
                node_index.insert((a, b), elems.len());
                elems.push(HallElem {
                    kind: HallKind::Node(a, b),
                    degree: d as u32,
                });
            }
        }
        offsets[dmax + 1] = elems.len();
        Ok(HallBasis {
            alphabet,
            max_degree,
            elems,
            offsets,
            leaf_index,
            node_index,
            cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elem(&self, index: usize) -> HallElem {
        self.elems[index]
    }

    pub fn degree_of_index(&self, index: usize) -> u32 {
        self.elems[index].degree
    }

    /// Global indices of the degree-`d` elements.
    pub fn degree_range(&self, d: u32) -> std::ops::Range<usize> {
        if d == 0 || d > self.max_degree {
            return 0..0;
        }
        self.offsets[d as usize]..self.offsets[d as usize + 1]
    }

    pub fn graded_rank(&self, d: u32) -> Result<usize> {
        if d == 0 || d > self.max_degree {
            return invalid(format!("degree {d} outside 1..={}", self.max_degree));
        }
        Ok(self.degree_range(d).len())
    }

    pub fn generator(&self, id: usize) -> LieElement {
        LieElement::basis(self.leaf_index[id])
    }

    pub fn generator_index(&self, id: usize) -> usize {
        self.leaf_index[id]
    }

    pub fn monomial(&self, index: usize) -> LieMonomial {
        match self.elems[index].kind {
            HallKind::Leaf(g) => LieMonomial::Leaf(g),
            HallKind::Node(a, b) => LieMonomial::bracket(self.monomial(a), self.monomial(b)),
        }
    }

    pub fn render_index(&self, index: usize) -> String {
        self.monomial(index).render(&self.alphabet.names())
    }

    /// `2*[y2,y1] - [y2,y1,y1]` style rendering.
    pub fn render(&self, u: &LieElement) -> String {
        if u.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (i, c)) in u.terms().enumerate() {
            let m = self.render_index(i);
            let neg = c < &BigInt::zero();
            let abs = if neg { -c } else { c.clone() };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !abs.is_one() {
                out.push_str(&format!("{abs}*"));
            }
            out.push_str(&m);
        }
        out
    }

    /// The degree of `u` if it is homogeneous and nonzero.
    pub fn homogeneous_degree(&self, u: &LieElement) -> Option<u32> {
        let mut it = u.terms().map(|(i, _)| self.elems[i].degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    /// Coordinates of a degree-`d` element in the degree-`d` block.
    pub fn vector(&self, u: &LieElement, d: u32) -> Result<SparseVec> {
        let range = self.degree_range(d);
        let mut v = Vec::with_capacity(u.len());
        for (i, c) in u.terms() {
            if !range.contains(&i) {
                return invalid(format!("element is not homogeneous of degree {d}"));
            }
            v.push((i - range.start, c.clone()));
        }
        Ok(v)
    }

    pub fn element_from_vector(&self, d: u32, v: &[(usize, BigInt)]) -> LieElement {
        let start = self.degree_range(d).start;
        LieElement::from_terms(v.iter().map(|(i, c)| (start + i, c.clone())))
    }

    /// True if the basis element only involves generators with `allowed[g]`.
    pub fn uses_only(&self, index: usize, allowed: &[bool]) -> bool {
        match self.elems[index].kind {
            HallKind::Leaf(g) => allowed[g],
            HallKind::Node(a, b) => self.uses_only(a, allowed) && self.uses_only(b, allowed),
        }
    }

    /// Column mask of the degree-`d` block for the sub-algebra on `allowed` generators.
    pub fn sub_alphabet_mask(&self, d: u32, allowed: &[bool]) -> Vec<bool> {
        self.degree_range(d)
            .map(|i| self.uses_only(i, allowed))
            .collect()
    }

    fn check_degree(&self, d: u32) -> Result<()> {
        if d > self.max_degree {
            Err(LieError::Overflow {
                degree: d,
                cutoff: self.max_degree,
            })
        } else {
            Ok(())
        }
    }

    fn bracket_basis(&self, a: usize, b: usize) -> Result<Arc<LieElement>> {
        if a == b {
            return Ok(Arc::new(LieElement::zero()));
        }
        if a < b {
            return Ok(Arc::new(self.bracket_basis(b, a)?.neg()));
        }
        self.check_degree(self.elems[a].degree + self.elems[b].degree)?;
        if let Some(hit) = self.cache.read().unwrap().get(&(a, b)) {
            return Ok(hit.clone());
        }
        let result = match self.elems[a].kind {
            HallKind::Node(a1, a2) if a2 > b => {
                // [[a1,a2],b] = [[a1,b],a2] + [a1,[a2,b]]
                let x = self.bracket_basis(a1, b)?;
                let mut r = self.bracket(&x, &LieElement::basis(a2))?;
                let y = self.bracket_basis(a2, b)?;
                r.add_scaled(&self.bracket(&LieElement::basis(a1), &y)?, &BigInt::one());
                r
            }
            _ => LieElement::basis(self.node_index[&(a, b)]),
        };
        let result = Arc::new(result);
        self.cache.write().unwrap().insert((a, b), result.clone());
        Ok(result)
    }

    /// `[u,v]` in Hall coordinates.
    pub fn bracket(&self, u: &LieElement, v: &LieElement) -> Result<LieElement> {
        let mut out = LieElement::zero();
        for (i, a) in u.terms() {
            for (j, b) in v.terms() {
                let br = self.bracket_basis(i, j)?;
                if !br.is_zero() {
                    out.add_scaled(&br, &(a * b));
                }
            }
        }
        Ok(out)
    }

    pub fn left_normed(&self, parts: &[LieElement]) -> Result<LieElement> {
        let Some((first, rest)) = parts.split_first() else {
            return invalid("left-normed bracket of an empty list");
        };
        let mut acc = first.clone();
        for p in rest {
            acc = self.bracket(&acc, p)?;
        }
        Ok(acc)
    }

    /// Evaluates a bracket tree over this basis' generators.
    pub fn eval_monomial(&self, m: &LieMonomial) -> Result<LieElement> {
        match m {
            LieMonomial::Leaf(g) => Ok(self.generator(*g)),
            LieMonomial::Node(a, b) => {
                self.bracket(&self.eval_monomial(a)?, &self.eval_monomial(b)?)
            }
        }
    }

    /// Images of all basis elements under the Lie homomorphism sending
    /// generator `g` to `images[g]` in `target`. Entries are `None` where the
    /// image would exceed the target cutoff.
    pub fn evaluate_into(
        &self,
        images: &[LieElement],
        target: &HallBasis,
    ) -> Result<Vec<Option<LieElement>>> {
        if images.len() != self.alphabet.len() {
            return invalid("one image per generator required");
        }
        let mut out: Vec<Option<LieElement>> = Vec::with_capacity(self.elems.len());
        for e in &self.elems {
            let img = match e.kind {
                HallKind::Leaf(g) => Some(images[g].clone()),
                HallKind::Node(a, b) => match (&out[a], &out[b]) {
                    (Some(x), Some(y)) => match target.bracket(x, y) {
                        Ok(z) => Some(z),
                        Err(LieError::Overflow { .. }) => None,
                        Err(err) => return Err(err),
                    },
                    _ => None,
                },
            };
            out.push(img);
        }
        Ok(out)
    }
}

impl fmt::Display for HallBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in 1..=self.max_degree {
            let parts: Vec<String> = self.degree_range(d).map(|i| self.render_index(i)).collect();
            writeln!(f, "{d}: {}", parts.join(" "))?;
        }
        Ok(())
    }
}

pub fn rewrite_bracket(basis: &HallBasis, u: &LieElement, v: &LieElement) -> Result<LieElement> {
    basis.bracket(u, v)
}

pub fn left_normed(basis: &HallBasis, parts: &[LieElement]) -> Result<LieElement> {
    basis.left_normed(parts)
}

pub fn graded_rank(basis: &HallBasis, d: u32) -> Result<usize> {
    basis.graded_rank(d)
}

/// Ranks `r_1..r_D` of the free Lie algebra on generators of the given
/// degrees, from `prod_k (1-t^k)^(-r_k) = 1/(1 - sum_g t^deg(g))`.
pub fn witt_ranks(degrees: &[u32], max_degree: u32) -> Vec<usize> {
    let dmax = max_degree as usize;
    let mut words = vec![0u128; dmax + 1];
    words[0] = 1;
    for d in 1..=dmax {
        for &g in degrees {
            let g = g as usize;
            if g <= d {
                words[d] = words[d]
                    .checked_add(words[d - g])
                    .expect("word count overflow");
            }
        }
    }
    let mut ranks = vec![0usize; dmax];
    for d in 1..=dmax {
        let partial = pbw_series(&ranks[..d - 1], d);
        ranks[d - 1] = usize::try_from(words[d] - partial[d]).expect("rank overflow");
    }
    ranks
}

/// Coefficients `0..=upto` of `prod_k (1-t^k)^(-ranks[k-1])`.
pub(crate) fn pbw_series(ranks: &[usize], upto: usize) -> Vec<u128> {
    let mut poly = vec![0u128; upto + 1];
    poly[0] = 1;
    for (k0, &r) in ranks.iter().enumerate() {
        let k = k0 + 1;
        if k > upto {
            break;
        }
        for _ in 0..r {
            for d in k..=upto {
                poly[d] = poly[d]
                    .checked_add(poly[d - k])
                    .expect("PBW dimension overflow");
            }
        }
    }
    poly
}
