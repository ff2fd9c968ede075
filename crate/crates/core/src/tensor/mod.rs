//! The free-magma tensor algebra `T(M)` with exact rational coefficients.
//!
//! Letters are binary trees over a set of generators (the free magma),
//! words are concatenations of letters, and polynomials are finite linear
//! combinations of words. Grading is by leaf count.

mod algebra;
pub mod checks;
mod text;

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use algebra::{
    antipode_dot, antipode_star, gl_lie_bracket, gl_star, is_primitive, kmap_tensor,
    kmap_tensor_inverse, lie_bracket, triangle, unshuffle, unshuffle_word,
};
pub use text::Generators;

/// Exact scalar type.
pub type Scalar = BigRational;

/// Basis enumerations refuse degrees above this unless asked otherwise;
/// the coproduct of a word of length `k` has `2^k` terms.
pub const DEFAULT_DEGREE_CAP: usize = 8;

pub fn scalar(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TensorError {
    #[error("degree {requested} exceeds the configured cap {cap}")]
    DegreeCap { requested: usize, cap: usize },
    #[error("at least one generator is required")]
    NoGenerators,
    #[error("invalid generator name `{0}`")]
    InvalidName(String),
    #[error("duplicate generator name `{0}`")]
    DuplicateName(String),
    #[error("unknown generator `{name}` at offset {position}")]
    UnknownGenerator { name: String, position: usize },
    #[error("parse error at offset {position}: {message}")]
    Parse { message: String, position: usize },
    #[error("not primitive: {0}")]
    NotPrimitive(String),
}

/// A free-magma element: a generator, or `left ▷ right`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MagmaTree {
    Leaf(usize),
    Node(Box<MagmaTree>, Box<MagmaTree>),
}

impl MagmaTree {
    pub fn leaf(g: usize) -> Self {
        MagmaTree::Leaf(g)
    }

    /// The magma product `s ▷ t`.
    pub fn product(s: MagmaTree, t: MagmaTree) -> Self {
        MagmaTree::Node(Box::new(s), Box::new(t))
    }

    pub fn degree(&self) -> usize {
        match self {
            MagmaTree::Leaf(_) => 1,
            MagmaTree::Node(l, r) => l.degree() + r.degree(),
        }
    }

    pub fn max_generator(&self) -> usize {
        match self {
            MagmaTree::Leaf(g) => *g,
            MagmaTree::Node(l, r) => l.max_generator().max(r.max_generator()),
        }
    }

    fn structural_cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (MagmaTree::Leaf(a), MagmaTree::Leaf(b)) => a.cmp(b),
            (MagmaTree::Leaf(_), MagmaTree::Node(..)) => Ordering::Less,
            (MagmaTree::Node(..), MagmaTree::Leaf(_)) => Ordering::Greater,
            (MagmaTree::Node(l1, r1), MagmaTree::Node(l2, r2)) => l1.cmp(l2).then_with(|| r1.cmp(r2)),
        }
    }

    /// All trees with exactly `degree` leaves over `gens` generators, in order.
    pub fn all_of_degree(gens: usize, degree: usize) -> Vec<MagmaTree> {
        let mut table: Vec<Vec<MagmaTree>> = vec![Vec::new(), (0..gens).map(MagmaTree::Leaf).collect()];
        for d in 2..=degree {
            let mut out = Vec::new();
            for ld in 1..d {
                for l in &table[ld] {
                    for r in &table[d - ld] {
                        out.push(MagmaTree::product(l.clone(), r.clone()));
                    }
                }
            }
            out.sort();
            table.push(out);
        }
        if degree == 0 {
            return Vec::new();
        }
        table.swap_remove(degree)
    }
}

impl Ord for MagmaTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.structural_cmp(other))
    }
}

impl PartialOrd for MagmaTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A concatenation of letters; the empty word is the unit `𝟏`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct TensorWord(pub Vec<MagmaTree>);

impl TensorWord {
    pub fn unit() -> Self {
        TensorWord(Vec::new())
    }

    pub fn letter(t: MagmaTree) -> Self {
        TensorWord(vec![t])
    }

    pub fn letters(&self) -> &[MagmaTree] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(MagmaTree::degree).sum()
    }

    pub fn concat(&self, other: &TensorWord) -> TensorWord {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        TensorWord(v)
    }

    /// All words of exactly this degree over `gens` generators (the unit for 0).
    pub fn all_of_degree(gens: usize, degree: usize) -> Vec<TensorWord> {
        let trees: Vec<Vec<MagmaTree>> = (0..=degree).map(|d| MagmaTree::all_of_degree(gens, d)).collect();
        let mut words: Vec<Vec<TensorWord>> = vec![vec![TensorWord::unit()]];
        for d in 1..=degree {
            let mut out = Vec::new();
            for first in 1..=d {
                for t in &trees[first] {
                    for rest in &words[d - first] {
                        let mut v = vec![t.clone()];
                        v.extend(rest.0.iter().cloned());
                        out.push(TensorWord(v));
                    }
                }
            }
            out.sort();
            words.push(out);
        }
        words.swap_remove(degree)
    }

    /// All words of degree `0..=degree`, refusing degrees above `cap`.
    pub fn basis_up_to(gens: usize, degree: usize, cap: usize) -> Result<Vec<TensorWord>, TensorError> {
        if degree > cap {
            return Err(TensorError::DegreeCap { requested: degree, cap });
        }
        Ok((0..=degree).flat_map(|d| TensorWord::all_of_degree(gens, d)).collect())
    }
}

impl Ord for TensorWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.len().cmp(&other.len()))
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for TensorWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite linear combination of words with nonzero rational coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct TensorPoly {
    terms: BTreeMap<TensorWord, Scalar>,
}

impl TensorPoly {
    pub fn zero() -> Self {
        TensorPoly::default()
    }

    pub fn one() -> Self {
        TensorPoly::word(TensorWord::unit())
    }

    pub fn word(w: TensorWord) -> Self {
        let mut p = TensorPoly::zero();
        p.add_term(w, Scalar::one());
        p
    }

    pub fn letter(t: MagmaTree) -> Self {
        TensorPoly::word(TensorWord::letter(t))
    }

    pub fn generator(g: usize) -> Self {
        TensorPoly::letter(MagmaTree::Leaf(g))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (TensorWord, Scalar)>) -> Self {
        let mut p = TensorPoly::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn add_term(&mut self, w: TensorWord, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &TensorPoly, c: &Scalar) {
        for (w, d) in &other.terms {
            self.add_term(w.clone(), d * c);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TensorWord, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &TensorWord) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the unit word.
    pub fn counit(&self) -> Scalar {
        self.coefficient(&TensorWord::unit())
    }

    pub fn scale(&self, c: &Scalar) -> TensorPoly {
        let mut p = TensorPoly::zero();
        p.add_scaled(self, c);
        p
    }

    pub fn add(&self, other: &TensorPoly) -> TensorPoly {
        let mut p = self.clone();
        p.add_scaled(other, &Scalar::one());
        p
    }

    pub fn sub(&self, other: &TensorPoly) -> TensorPoly {
        let mut p = self.clone();
        p.add_scaled(other, &-Scalar::one());
        p
    }

    pub fn neg(&self) -> TensorPoly {
        self.scale(&-Scalar::one())
    }

    /// Bilinear word concatenation.
    pub fn concat(&self, other: &TensorPoly) -> TensorPoly {
        let mut p = TensorPoly::zero();
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                p.add_term(a.concat(b), c * d);
            }
        }
        p
    }

    /// The leaf-degree `d` component.
    pub fn homogeneous_part(&self, d: usize) -> TensorPoly {
        TensorPoly::from_terms(self.terms.iter().filter(|(w, _)| w.degree() == d).map(|(w, c)| (w.clone(), c.clone())))
    }

    pub fn is_homogeneous(&self, d: usize) -> bool {
        self.terms.keys().all(|w| w.degree() == d)
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(TensorWord::degree).max()
    }

    pub fn max_length(&self) -> Option<usize> {
        self.terms.keys().map(TensorWord::len).max()
    }

    /// Applies a linear map given on basis words.
    pub fn map_linear(&self, mut f: impl FnMut(&TensorWord) -> TensorPoly) -> TensorPoly {
        let mut p = TensorPoly::zero();
        for (w, c) in &self.terms {
            p.add_scaled(&f(w), c);
        }
        p
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.terms.keys().flat_map(|w| w.0.iter().map(MagmaTree::max_generator)).max()
    }
}

/// A finite linear combination of pairs of words: the tensor square.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TensorPolyPair {
    terms: BTreeMap<(TensorWord, TensorWord), Scalar>,
}

impl TensorPolyPair {
    pub fn zero() -> Self {
        TensorPolyPair::default()
    }

    pub fn add_term(&mut self, a: TensorWord, b: TensorWord, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((a, b)).or_insert_with(Scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    /// `self += c · (A ⊗ B)`.
    pub fn add_tensor(&mut self, a: &TensorPoly, b: &TensorPoly, c: &Scalar) {
        for (x, cx) in a.terms() {
            for (y, cy) in b.terms() {
                self.add_term(x.clone(), y.clone(), c * cx * cy);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(TensorWord, TensorWord), &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Applies `f ⊗ g` where both are linear maps given on basis words.
    pub fn map_linear(
        &self,
        mut f: impl FnMut(&TensorWord) -> TensorPoly,
        mut g: impl FnMut(&TensorWord) -> TensorPoly,
    ) -> TensorPolyPair {
        let mut out = TensorPolyPair::zero();
        for ((a, b), c) in &self.terms {
            out.add_tensor(&f(a), &g(b), c);
        }
        out
    }
}

/// Formats a rational as `p` or `p/q`.
pub fn format_scalar(c: &Scalar) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub(crate) fn abs_is_one(c: &Scalar) -> bool {
    c.abs().is_one()
}

#[cfg(test)]
mod tests;
