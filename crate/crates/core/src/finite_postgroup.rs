//! Finite post-groups as tables, and their braided-group and skew-brace
//! incarnations.
//!
//! All checks are exhaustive over the element set; witnesses are reported
//! with element names.

use std::fmt;

use thiserror::Error;

pub use crate::report::CheckLine;
use crate::group::{self, GroupAxiomError, GroupError, GroupTable, Table, TableError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PostGroupError {
    #[error(transparent)]
    Table(#[from] TableError),
    #[error("dot table is not a group: {0}")]
    DotGroup(GroupAxiomError),
    #[error("{a} ▷ - is not a bijection: {a} ▷ {b} = {a} ▷ {c}")]
    NotBijective { a: String, b: String, c: String },
    #[error("{a} ▷ - is not an automorphism: {a} ▷ ({b}.{c}) != ({a} ▷ {b}).({a} ▷ {c})")]
    NotAutomorphism { a: String, b: String, c: String },
    #[error("(a*b) ▷ c != a ▷ (b ▷ c) at a={a}, b={b}, c={c}")]
    GlAxiom { a: String, b: String, c: String },
}

/// A certified finite post-group `(G, ., ▷)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PostGroupTable {
    dot: GroupTable,
    triangle: Vec<Vec<usize>>,
    gl: Vec<Vec<usize>>,
}

impl PostGroupTable {
    pub fn new(
        names: Vec<String>,
        dot: Vec<Vec<usize>>,
        triangle: Vec<Vec<usize>>,
    ) -> Result<Self, PostGroupError> {
        group::check_names(&names)?;
        let n = names.len();
        group::check_square("dot", n, &dot)?;
        group::check_square("triangle", n, &triangle)?;
        let dot = GroupTable::new(names, dot).map_err(|e| match e {
            GroupError::Table(t) => PostGroupError::Table(t),
            GroupError::Axiom(a) => PostGroupError::DotGroup(a),
        })?;
        let name = |i: usize| dot.name(i).to_string();

        for a in 0..n {
            let row = &triangle[a];
            for b in 0..n {
                for c in (b + 1)..n {
                    if row[b] == row[c] {
                        return Err(PostGroupError::NotBijective { a: name(a), b: name(b), c: name(c) });
                    }
                }
            }
            for b in 0..n {
                for c in 0..n {
                    if row[dot.mul(b, c)] != dot.mul(row[b], row[c]) {
                        return Err(PostGroupError::NotAutomorphism { a: name(a), b: name(b), c: name(c) });
                    }
                }
            }
        }

        let gl: Vec<Vec<usize>> =
            (0..n).map(|a| (0..n).map(|b| dot.mul(a, triangle[a][b])).collect()).collect();
        for a in 0..n {
            for b in 0..n {
                let ab = gl[a][b];
                for c in 0..n {
                    if triangle[ab][c] != triangle[a][triangle[b][c]] {
                        return Err(PostGroupError::GlAxiom { a: name(a), b: name(b), c: name(c) });
                    }
                }
            }
        }
        Ok(PostGroupTable { dot, triangle, gl })
    }

    pub fn from_names(
        names: Vec<String>,
        dot: &[Vec<String>],
        triangle: &[Vec<String>],
    ) -> Result<Self, PostGroupError> {
        group::check_names(&names)?;
        let d = Table::from_names("dot", &names, dot)?;
        let t = Table::from_names("triangle", &names, triangle)?;
        PostGroupTable::new(names, d, t)
    }

    /// `a ▷ b = b`.
    pub fn trivial(g: &GroupTable) -> Self {
        let n = g.len();
        PostGroupTable::new(g.names().to_vec(), g.cells().to_vec(), vec![(0..n).collect(); n])
            .expect("trivial post-group")
    }

    /// The opposite of the trivial post-group: `a·b = b.a`, `a ▶ b = a.b.a⁻¹`.
    pub fn conjugation(g: &GroupTable) -> Self {
        PostGroupTable::trivial(g).opposite()
    }

    pub fn len(&self) -> usize {
        self.dot.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dot.is_empty()
    }

    pub fn names(&self) -> &[String] {
        self.dot.names()
    }

    pub fn name(&self, a: usize) -> &str {
        self.dot.name(a)
    }

    pub fn dot_group(&self) -> &GroupTable {
        &self.dot
    }

    pub fn dot(&self, a: usize, b: usize) -> usize {
        self.dot.mul(a, b)
    }

    pub fn tri(&self, a: usize, b: usize) -> usize {
        self.triangle[a][b]
    }

    pub fn unit(&self) -> usize {
        self.dot.unit()
    }

    pub fn dot_inv(&self, a: usize) -> usize {
        self.dot.inv(a)
    }

    pub fn triangle_table(&self) -> &[Vec<usize>] {
        &self.triangle
    }

    /// `a * b = a.(a ▷ b)`.
    pub fn gl(&self, a: usize, b: usize) -> usize {
        self.gl[a][b]
    }

    /// `(a ▷ -)⁻¹(b)`.
    pub fn tri_inv(&self, a: usize, b: usize) -> usize {
        self.triangle[a].iter().position(|&x| x == b).expect("rows are bijections")
    }

    /// `a^{*-1} = (a ▷ -)⁻¹(a^{.-1})`.
    pub fn gl_inverse(&self, a: usize) -> usize {
        self.tri_inv(a, self.dot_inv(a))
    }

    /// The Grossman–Larson group; its axioms are re-checked.
    pub fn gl_group(&self) -> GroupTable {
        let g = GroupTable::new(self.names().to_vec(), self.gl.clone()).expect("GL product is a group law");
        assert_eq!(g.unit(), self.unit());
        g
    }

    /// `(G, a·b := b.a, a ▶ b := a.(a ▷ b).a⁻¹)`.
    pub fn opposite(&self) -> PostGroupTable {
        let n = self.len();
        let dot = (0..n).map(|a| (0..n).map(|b| self.dot(b, a)).collect()).collect();
        let tri = (0..n)
            .map(|a| (0..n).map(|b| self.dot(self.gl(a, b), self.dot_inv(a))).collect())
            .collect();
        PostGroupTable::new(self.names().to_vec(), dot, tri).expect("opposite of a post-group")
    }

    pub fn is_pregroup(&self) -> bool {
        self.dot.is_abelian()
    }

    /// `σ(g, h) = (g ▷ h, (g ▷ h)^{*-1} * g * h)`.
    pub fn braiding(&self) -> BraidMap {
        let n = self.len();
        let mut pairs = Vec::with_capacity(n * n);
        for g in 0..n {
            for h in 0..n {
                let left = self.tri(g, h);
                let right = self.gl(self.gl_inverse(left), self.gl(g, h));
                pairs.push((left, right));
            }
        }
        BraidMap { names: self.names().to_vec(), pairs }
    }

    /// The skew brace `(G, ., *)`.
    pub fn to_skew_brace(&self) -> SkewBrace {
        SkewBrace::new(self.names().to_vec(), self.dot.cells().to_vec(), self.gl.clone())
            .expect("post-groups give skew braces")
    }

    pub fn name_dot(&self) -> Vec<Vec<String>> {
        self.dot.name_rows()
    }

    pub fn name_triangle(&self) -> Vec<Vec<String>> {
        Table::to_names(self.names(), &self.triangle)
    }
}

/// Identity of the triangle rows `a*((a ▷ -)⁻¹(a⁻¹)) = e` for every `a`.
pub fn check_gl_inverse_column(pg: &PostGroupTable) -> Result<(), String> {
    for a in 0..pg.len() {
        if pg.gl(a, pg.gl_inverse(a)) != pg.unit() || pg.gl(pg.gl_inverse(a), a) != pg.unit() {
            return Err(format!("GL inverse fails at {}", pg.name(a)));
        }
    }
    Ok(())
}

/// A witness of a failing identity on a triple of elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleWitness {
    pub triple: [String; 3],
    pub lhs: [String; 3],
    pub rhs: [String; 3],
}

impl fmt::Display for TripleWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.triple;
        let [l1, l2, l3] = &self.lhs;
        let [r1, r2, r3] = &self.rhs;
        write!(f, "({a}, {b}, {c}): lhs = ({l1}, {l2}, {l3}), rhs = ({r1}, {r2}, {r3})")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("σ is not a bijection: σ({a0},{b0}) = σ({a1},{b1})")]
    NotBijective { a0: String, b0: String, a1: String, b1: String },
    #[error("σ has {found} entries, expected {expected}")]
    Shape { found: usize, expected: usize },
    #[error("left component is not a left action at ({g}, {h}, {k})")]
    LeftAction { g: String, h: String, k: String },
    #[error("right component is not a right action at ({g}, {h}, {k})")]
    RightAction { g: String, h: String, k: String },
    #[error("m∘σ != m at ({g}, {h})")]
    Multiplication { g: String, h: String },
    #[error("braided group gives an invalid post-group: {0}")]
    PostGroup(#[from] PostGroupError),
}

/// A map `σ: G×G → G×G`, stored row-major as `σ(g,h) = pairs[g*n+h]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidMap {
    names: Vec<String>,
    pairs: Vec<(usize, usize)>,
}

impl BraidMap {
    pub fn new(names: Vec<String>, pairs: Vec<(usize, usize)>) -> Result<Self, BraidError> {
        let n = names.len();
        if pairs.len() != n * n || pairs.iter().any(|&(a, b)| a >= n || b >= n) {
            return Err(BraidError::Shape { found: pairs.len(), expected: n * n });
        }
        Ok(BraidMap { names, pairs })
    }

    /// The flip `P(g,h) = (h,g)`.
    pub fn flip(names: Vec<String>) -> Self {
        let n = names.len();
        let pairs = (0..n).flat_map(|g| (0..n).map(move |h| (h, g))).collect();
        BraidMap { names, pairs }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn apply(&self, g: usize, h: usize) -> (usize, usize) {
        self.pairs[g * self.len() + h]
    }

    /// `g ⇀ h`.
    pub fn left(&self, g: usize, h: usize) -> usize {
        self.apply(g, h).0
    }

    /// `g ↼ h`.
    pub fn right(&self, g: usize, h: usize) -> usize {
        self.apply(g, h).1
    }

    /// Overwrites one entry; used to build negative controls.
    pub fn set(&mut self, g: usize, h: usize, value: (usize, usize)) {
        let n = self.len();
        self.pairs[g * n + h] = value;
    }

    pub fn check_bijective(&self) -> Result<(), BraidError> {
        let n = self.len();
        let mut seen: Vec<Option<usize>> = vec![None; n * n];
        for (i, &(a, b)) in self.pairs.iter().enumerate() {
            if let Some(j) = seen[a * n + b] {
                return Err(BraidError::NotBijective {
                    a0: self.names[j / n].clone(),
                    b0: self.names[j % n].clone(),
                    a1: self.names[i / n].clone(),
                    b1: self.names[i % n].clone(),
                });
            }
            seen[a * n + b] = Some(i);
        }
        Ok(())
    }

    pub fn inverse(&self) -> Result<BraidMap, BraidError> {
        self.check_bijective()?;
        let n = self.len();
        let mut pairs = vec![(0, 0); n * n];
        for (i, &(a, b)) in self.pairs.iter().enumerate() {
            pairs[a * n + b] = (i / n, i % n);
        }
        Ok(BraidMap { names: self.names.clone(), pairs })
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &BraidMap) -> BraidMap {
        let pairs = other.pairs.iter().map(|&(a, b)| self.apply(a, b)).collect();
        BraidMap { names: self.names.clone(), pairs }
    }

    pub fn is_identity(&self) -> bool {
        let n = self.len();
        self.pairs.iter().enumerate().all(|(i, &p)| p == (i / n, i % n))
    }

    fn witness(&self, t: [usize; 3], l: [usize; 3], r: [usize; 3]) -> TripleWitness {
        let nm = |v: [usize; 3]| v.map(|i| self.names[i].clone());
        TripleWitness { triple: nm(t), lhs: nm(l), rhs: nm(r) }
    }

    fn on12(&self, [a, b, c]: [usize; 3]) -> [usize; 3] {
        let (x, y) = self.apply(a, b);
        [x, y, c]
    }

    fn on23(&self, [a, b, c]: [usize; 3]) -> [usize; 3] {
        let (y, z) = self.apply(b, c);
        [a, y, z]
    }

    /// `R = P∘σ` on a pair.
    fn r(&self, a: usize, b: usize) -> (usize, usize) {
        let (x, y) = self.apply(a, b);
        (y, x)
    }

    /// `(σ×id)(id×σ)(σ×id) = (id×σ)(σ×id)(id×σ)` on all triples.
    pub fn check_braid_equation(&self) -> Result<(), TripleWitness> {
        let n = self.len();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let t = [a, b, c];
                    let lhs = self.on12(self.on23(self.on12(t)));
                    let rhs = self.on23(self.on12(self.on23(t)));
                    if lhs != rhs {
                        return Err(self.witness(t, lhs, rhs));
                    }
                }
            }
        }
        Ok(())
    }

    /// `R12 R13 R23 = R23 R13 R12` for `R = P∘σ`, on all triples.
    pub fn check_ybe(&self) -> Result<(), TripleWitness> {
        let r12 = |[a, b, c]: [usize; 3]| {
            let (x, y) = self.r(a, b);
            [x, y, c]
        };
        let r23 = |[a, b, c]: [usize; 3]| {
            let (y, z) = self.r(b, c);
            [a, y, z]
        };
        let r13 = |[a, b, c]: [usize; 3]| {
            let (x, z) = self.r(a, c);
            [x, b, z]
        };
        let n = self.len();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let t = [a, b, c];
                    let lhs = r12(r13(r23(t)));
                    let rhs = r23(r13(r12(t)));
                    if lhs != rhs {
                        return Err(self.witness(t, lhs, rhs));
                    }
                }
            }
        }
        Ok(())
    }

    /// Braided-group axioms relative to the group law `star`, via the
    /// characterization by a left action, a right action and `m∘σ = m`.
    pub fn check_braided_group(&self, star: &GroupTable) -> Result<(), BraidError> {
        let n = self.len();
        if star.len() != n {
            return Err(BraidError::Shape { found: self.pairs.len(), expected: star.len() * star.len() });
        }
        self.check_bijective()?;
        let nm = |i: usize| self.names[i].clone();
        let e = star.unit();
        for g in 0..n {
            if self.left(e, g) != g {
                return Err(BraidError::LeftAction { g: nm(e), h: nm(e), k: nm(g) });
            }
            if self.right(g, e) != g {
                return Err(BraidError::RightAction { g: nm(g), h: nm(e), k: nm(e) });
            }
        }
        for g in 0..n {
            for h in 0..n {
                let (l, r) = self.apply(g, h);
                if star.mul(l, r) != star.mul(g, h) {
                    return Err(BraidError::Multiplication { g: nm(g), h: nm(h) });
                }
                for k in 0..n {
                    if self.left(star.mul(g, h), k) != self.left(g, self.left(h, k)) {
                        return Err(BraidError::LeftAction { g: nm(g), h: nm(h), k: nm(k) });
                    }
                    if self.right(g, star.mul(h, k)) != self.right(self.right(g, h), k) {
                        return Err(BraidError::RightAction { g: nm(g), h: nm(h), k: nm(k) });
                    }
                }
            }
        }
        Ok(())
    }
}

/// Post-group of a braided group: `g ▷ h = g ⇀ h`, `g.h = g*(g^{*-1} ⇀ h)`.
pub fn postgroup_from_braided(star: &GroupTable, sigma: &BraidMap) -> Result<PostGroupTable, BraidError> {
    sigma.check_braided_group(star)?;
    let n = star.len();
    let dot = (0..n)
        .map(|g| (0..n).map(|h| star.mul(g, sigma.left(star.inv(g), h))).collect())
        .collect();
    let tri = (0..n).map(|g| (0..n).map(|h| sigma.left(g, h)).collect()).collect();
    Ok(PostGroupTable::new(star.names().to_vec(), dot, tri)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SkewBraceError {
    #[error(transparent)]
    Table(#[from] TableError),
    #[error("dot table is not a group: {0}")]
    DotGroup(GroupAxiomError),
    #[error("star table is not a group: {0}")]
    StarGroup(GroupAxiomError),
    #[error("dot and star have different units")]
    Units,
    #[error("g*(h.k) != (g*h).g⁻¹.(g*k) at g={g}, h={h}, k={k}")]
    BraceIdentity { g: String, h: String, k: String },
    #[error("skew brace gives an invalid post-group: {0}")]
    PostGroup(#[from] PostGroupError),
}

/// A skew-left brace `(G, ., *)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewBrace {
    dot: GroupTable,
    star: GroupTable,
}

impl SkewBrace {
    pub fn new(names: Vec<String>, dot: Vec<Vec<usize>>, star: Vec<Vec<usize>>) -> Result<Self, SkewBraceError> {
        group::check_names(&names)?;
        let n = names.len();
        group::check_square("dot", n, &dot)?;
        group::check_square("star", n, &star)?;
        let split = |e: GroupError, wrap: fn(GroupAxiomError) -> SkewBraceError| match e {
            GroupError::Table(t) => SkewBraceError::Table(t),
            GroupError::Axiom(a) => wrap(a),
        };
        let dot = GroupTable::new(names.clone(), dot).map_err(|e| split(e, SkewBraceError::DotGroup))?;
        let star = GroupTable::new(names, star).map_err(|e| split(e, SkewBraceError::StarGroup))?;
        if dot.unit() != star.unit() {
            return Err(SkewBraceError::Units);
        }
        for g in 0..n {
            let gi = dot.inv(g);
            for h in 0..n {
                let gh = star.mul(g, h);
                for k in 0..n {
                    let lhs = star.mul(g, dot.mul(h, k));
                    let rhs = dot.mul(dot.mul(gh, gi), star.mul(g, k));
                    if lhs != rhs {
                        return Err(SkewBraceError::BraceIdentity {
                            g: dot.name(g).into(),
                            h: dot.name(h).into(),
                            k: dot.name(k).into(),
                        });
                    }
                }
            }
        }
        Ok(SkewBrace { dot, star })
    }

    pub fn from_names(
        names: Vec<String>,
        dot: &[Vec<String>],
        star: &[Vec<String>],
    ) -> Result<Self, SkewBraceError> {
        group::check_names(&names)?;
        let d = Table::from_names("dot", &names, dot)?;
        let s = Table::from_names("star", &names, star)?;
        SkewBrace::new(names, d, s)
    }

    pub fn names(&self) -> &[String] {
        self.dot.names()
    }

    pub fn dot(&self) -> &GroupTable {
        &self.dot
    }

    pub fn star(&self) -> &GroupTable {
        &self.star
    }

    /// `g ▷ h = g⁻¹.(g*h)`.
    pub fn to_postgroup(&self) -> Result<PostGroupTable, SkewBraceError> {
        let n = self.dot.len();
        let tri = (0..n)
            .map(|g| (0..n).map(|h| self.dot.mul(self.dot.inv(g), self.star.mul(g, h))).collect())
            .collect();
        Ok(PostGroupTable::new(self.names().to_vec(), self.dot.cells().to_vec(), tri)?)
    }
}

/// The full exhaustive battery on a validated post-group.
pub fn full_check(pg: &PostGroupTable) -> Vec<CheckLine> {
    let mut out = Vec::new();
    let gl = pg.gl_group();
    out.push(CheckLine::new("GL inverse column", check_gl_inverse_column(pg)));

    let sigma = pg.braiding();
    out.push(CheckLine::new(
        "braided group (actions, m∘σ = m)",
        sigma.check_braided_group(&gl).map_err(|e| e.to_string()),
    ));
    out.push(CheckLine::new("braid equation", sigma.check_braid_equation().map_err(|w| w.to_string())));
    out.push(CheckLine::new("Yang-Baxter (R = P∘σ)", sigma.check_ybe().map_err(|w| w.to_string())));
    out.push(CheckLine::new(
        "braided round trip",
        match postgroup_from_braided(&gl, &sigma) {
            Ok(back) if back == *pg => Ok(()),
            Ok(_) => Err("tables differ".into()),
            Err(e) => Err(e.to_string()),
        },
    ));

    let brace = SkewBrace::new(pg.names().to_vec(), pg.dot_group().cells().to_vec(), gl.cells().to_vec());
    out.push(CheckLine::new(
        "skew brace identity",
        brace.as_ref().map(|_| ()).map_err(|e| e.to_string()),
    ));
    out.push(CheckLine::new(
        "skew brace round trip",
        match brace.map(|b| b.to_postgroup().map(|p| (b, p))) {
            Ok(Ok((b, back))) if back == *pg && back.to_skew_brace() == b => Ok(()),
            Ok(Ok(_)) => Err("tables differ".into()),
            Ok(Err(e)) => Err(e.to_string()),
            Err(e) => Err(e.to_string()),
        },
    ));

    let op = pg.opposite();
    out.push(CheckLine::new(
        "opposite involution",
        if op.opposite() == *pg { Ok(()) } else { Err("opposite(opposite) differs".into()) },
    ));
    out.push(CheckLine::new(
        "opposite shares GL group",
        if op.gl_group() == gl { Ok(()) } else { Err("GL tables differ".into()) },
    ));
    out.push(CheckLine::new(
        "braiding(opposite) = σ⁻¹",
        match sigma.inverse() {
            Ok(inv) if inv == op.braiding() => Ok(()),
            Ok(_) => Err("tables differ".into()),
            Err(e) => Err(e.to_string()),
        },
    ));
    if pg.is_pregroup() {
        out.push(CheckLine::new(
            "pre-group: σ∘σ = id",
            if sigma.compose(&sigma).is_identity() { Ok(()) } else { Err("σ∘σ is not the identity".into()) },
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn corpus() -> Vec<(String, PostGroupTable)> {
        let mut out = Vec::new();
        for (label, g) in [
            ("Z2", GroupTable::cyclic(2)),
            ("Z3", GroupTable::cyclic(3)),
            ("Z4", GroupTable::cyclic(4)),
            ("S3", GroupTable::symmetric3()),
        ] {
            out.push((format!("trivial {label}"), PostGroupTable::trivial(&g)));
            out.push((format!("conjugation {label}"), PostGroupTable::conjugation(&g)));
        }
        out
    }

    #[test]
    fn trivial_and_conjugation_are_valid() {
        let s3 = GroupTable::symmetric3();
        let triv = PostGroupTable::trivial(&s3);
        let conj = PostGroupTable::conjugation(&s3);
        // trivial: * = .; conjugation: a*b = a.b in the original product
        assert_eq!(triv.gl_group().cells(), s3.cells());
        assert_eq!(conj.gl_group().cells(), s3.cells());
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(conj.tri(a, b), s3.mul(s3.mul(a, b), s3.inv(a)));
                assert_eq!(conj.dot(a, b), s3.mul(b, a));
            }
        }
    }

    #[test]
    fn additive_triangle_on_z3_is_rejected() {
        let g = GroupTable::cyclic(3);
        let tri = (0..3).map(|a| (0..3).map(|b| (a + b) % 3).collect()).collect();
        let err = PostGroupTable::new(g.names().to_vec(), g.cells().to_vec(), tri).unwrap_err();
        // 1 ▷ (0+0) = 1 but (1▷0)+(1▷0) = 2
        assert_eq!(err, PostGroupError::NotAutomorphism { a: "1".into(), b: "0".into(), c: "0".into() });
    }

    #[test]
    fn non_bijective_and_gl_failures() {
        let g = GroupTable::cyclic(2);
        let err = PostGroupTable::new(g.names().to_vec(), g.cells().to_vec(), vec![vec![0, 1], vec![0, 0]])
            .unwrap_err();
        assert!(matches!(err, PostGroupError::NotBijective { .. }));
        // ▷ by negation on Z3 with every row the automorphism -x:
        // (a*b) ▷ c = a ▷ (b ▷ c) requires (-1)^1 = (-1)^2, false.
        let g3 = GroupTable::cyclic(3);
        let neg: Vec<usize> = vec![0, 2, 1];
        let err = PostGroupTable::new(g3.names().to_vec(), g3.cells().to_vec(), vec![neg.clone(); 3]).unwrap_err();
        assert!(matches!(err, PostGroupError::GlAxiom { .. }));
    }

    #[test]
    fn opposite_examples() {
        let z4 = GroupTable::cyclic(4);
        let triv = PostGroupTable::trivial(&z4);
        // abelian: the opposite keeps the triangle
        assert_eq!(triv.opposite().triangle_table(), triv.triangle_table());
        let s3 = GroupTable::symmetric3();
        assert_eq!(PostGroupTable::trivial(&s3).opposite(), PostGroupTable::conjugation(&s3));
        for (_, pg) in corpus() {
            assert_eq!(pg.opposite().opposite(), pg);
        }
    }

    #[test]
    fn trivial_braiding_formula() {
        let s3 = GroupTable::symmetric3();
        let sigma = PostGroupTable::trivial(&s3).braiding();
        for g in 0..6 {
            for h in 0..6 {
                assert_eq!(sigma.apply(g, h), (h, s3.mul(s3.mul(s3.inv(h), g), h)));
            }
        }
    }

    #[test]
    fn braided_round_trip_from_flip() {
        // σ = flip on an abelian group gives back the trivial post-group
        let z3 = GroupTable::cyclic(3);
        let flip = BraidMap::flip(z3.names().to_vec());
        assert!(flip.check_braid_equation().is_ok());
        let pg = postgroup_from_braided(&z3, &flip).unwrap();
        assert_eq!(pg, PostGroupTable::trivial(&z3));
    }

    #[test]
    fn flip_satisfies_braid_equation_on_nonabelian() {
        let s3 = GroupTable::symmetric3();
        assert!(BraidMap::flip(s3.names().to_vec()).check_braid_equation().is_ok());
    }

    #[test]
    fn corrupted_braiding_fails_with_witness() {
        let s3 = GroupTable::symmetric3();
        let mut sigma = PostGroupTable::conjugation(&s3).braiding();
        let (a, b) = (sigma.apply(1, 2), sigma.apply(3, 4));
        sigma.set(1, 2, b);
        sigma.set(3, 4, a);
        assert!(sigma.check_bijective().is_ok());
        let w = sigma.check_braid_equation().unwrap_err();
        assert_ne!(w.lhs, w.rhs);
        assert!(sigma.check_ybe().is_err());
        assert!(sigma.check_braided_group(&s3).is_err());
    }

    #[test]
    fn pregroup_detection() {
        assert!(PostGroupTable::trivial(&GroupTable::cyclic(4)).is_pregroup());
        assert!(!PostGroupTable::conjugation(&GroupTable::symmetric3()).is_pregroup());
    }

    #[test]
    fn skew_brace_conversions() {
        let z3 = GroupTable::cyclic(3);
        let b = PostGroupTable::trivial(&z3).to_skew_brace();
        assert_eq!(b.dot(), b.star());
        let s3 = GroupTable::symmetric3();
        let conj = PostGroupTable::conjugation(&s3);
        let b = conj.to_skew_brace();
        assert_eq!(b.star().cells(), s3.cells());
        assert_eq!(b.to_postgroup().unwrap(), conj);
        // star = dot is always a brace; a non-group star is rejected
        let names = z3.names().to_vec();
        let star: Vec<Vec<usize>> = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]];
        let dot: Vec<Vec<usize>> = z3.cells().to_vec();
        assert!(SkewBrace::new(names.clone(), dot.clone(), star).is_ok());
        let bad_star = vec![vec![0, 1, 2], vec![1, 0, 2], vec![2, 2, 0]];
        assert!(SkewBrace::new(names, dot, bad_star).is_err());
    }

    #[test]
    fn full_battery_on_corpus() {
        for (label, pg) in corpus() {
            for line in full_check(&pg) {
                assert!(line.passed(), "{label}: {line}");
            }
            let sigma = pg.braiding();
            assert_eq!(sigma.inverse().unwrap(), pg.opposite().braiding(), "{label}");
            if pg.is_pregroup() {
                assert!(sigma.compose(&sigma).is_identity(), "{label}");
            }
        }
    }

    #[test]
    fn conjugation_s3_braiding_is_bijective_over_36_pairs() {
        let sigma = PostGroupTable::conjugation(&GroupTable::symmetric3()).braiding();
        assert_eq!(sigma.pairs().len(), 36);
        assert!(sigma.check_bijective().is_ok());
    }
}
