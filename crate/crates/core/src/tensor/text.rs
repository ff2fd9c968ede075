//! Text form: trees `(s>t)`, words `t1.t2`, polynomials `c*w + ...`.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{abs_is_one, format_scalar, MagmaTree, Scalar, TensorError, TensorPoly, TensorWord};

/// Named generators of the free magma.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generators {
    names: Vec<String>,
}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Generators {
    pub fn new(names: Vec<String>) -> Result<Self, TensorError> {
        if names.is_empty() {
            return Err(TensorError::NoGenerators);
        }
        for (i, n) in names.iter().enumerate() {
            if !valid_name(n) {
                return Err(TensorError::InvalidName(n.clone()));
            }
            if names[..i].contains(n) {
                return Err(TensorError::DuplicateName(n.clone()));
            }
        }
        Ok(Generators { names })
    }

    /// `x` for a single generator, otherwise `x1, ..., xn`.
    pub fn standard(n: usize) -> Result<Self, TensorError> {
        match n {
            0 => Err(TensorError::NoGenerators),
            1 => Generators::new(vec!["x".into()]),
            _ => Generators::new((1..=n).map(|i| format!("x{i}")).collect()),
        }
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

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn format_tree(&self, t: &MagmaTree) -> String {
        match t {
            MagmaTree::Leaf(g) => self.names[*g].clone(),
            MagmaTree::Node(l, r) => format!("({}>{})", self.format_tree(l), self.format_tree(r)),
        }
    }

    pub fn format_word(&self, w: &TensorWord) -> String {
        if w.is_unit() {
            return "1".into();
        }
        w.letters().iter().map(|t| self.format_tree(t)).collect::<Vec<_>>().join(".")
    }

    pub fn format_poly(&self, p: &TensorPoly) -> String {
        if p.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (w, c)) in p.terms().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let a = c.abs();
            if w.is_unit() {
                out.push_str(&format_scalar(&a));
            } else if abs_is_one(&a) {
                out.push_str(&self.format_word(w));
            } else {
                out.push_str(&format_scalar(&a));
                out.push('*');
                out.push_str(&self.format_word(w));
            }
        }
        out
    }

    pub fn parse_tree(&self, text: &str) -> Result<MagmaTree, TensorError> {
        let mut p = Parser::new(text, self);
        let t = p.tree()?;
        p.finish()?;
        Ok(t)
    }

    pub fn parse_word(&self, text: &str) -> Result<TensorWord, TensorError> {
        let mut p = Parser::new(text, self);
        let w = p.word()?;
        p.finish()?;
        Ok(w)
    }

    pub fn parse_poly(&self, text: &str) -> Result<TensorPoly, TensorError> {
        let mut p = Parser::new(text, self);
        let poly = p.poly()?;
        p.finish()?;
        Ok(poly)
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    gens: &'a Generators,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, gens: &'a Generators) -> Self {
        Parser { s: text.as_bytes(), pos: 0, gens }
    }

    fn err<T>(&self, message: &str) -> Result<T, TensorError> {
        Err(TensorError::Parse { message: message.into(), position: self.pos })
    }

    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        self.ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn finish(&mut self) -> Result<(), TensorError> {
        self.ws();
        if self.pos < self.s.len() {
            return self.err("unexpected trailing input");
        }
        Ok(())
    }

    fn tree(&mut self) -> Result<MagmaTree, TensorError> {
        self.ws();
        if self.eat(b'(') {
            let l = self.tree()?;
            if !self.eat(b'>') {
                return self.err("expected `>`");
            }
            let r = self.tree()?;
            if !self.eat(b')') {
                return self.err("expected `)`");
            }
            return Ok(MagmaTree::product(l, r));
        }
        let start = self.pos;
        while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_') {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a generator or `(`");
        }
        let name = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii");
        match self.gens.index_of(name) {
            Some(g) => Ok(MagmaTree::Leaf(g)),
            None => Err(TensorError::UnknownGenerator { name: name.into(), position: start }),
        }
    }

    fn word(&mut self) -> Result<TensorWord, TensorError> {
        self.ws();
        if self.peek() == Some(b'1') {
            self.pos += 1;
            if matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric()) {
                return self.err("malformed unit word");
            }
            return Ok(TensorWord::unit());
        }
        let mut letters = vec![self.tree()?];
        while self.eat(b'.') {
            letters.push(self.tree()?);
        }
        Ok(TensorWord(letters))
    }

    fn integer(&mut self) -> Result<BigInt, TensorError> {
        self.ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        Ok(std::str::from_utf8(&self.s[start..self.pos]).expect("ascii").parse().expect("digits"))
    }

    fn term(&mut self) -> Result<(TensorWord, Scalar), TensorError> {
        self.ws();
        if !matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            return Ok((self.word()?, Scalar::one()));
        }
        let numer = self.integer()?;
        let denom = if self.eat(b'/') { self.integer()? } else { BigInt::one() };
        if denom == BigInt::from(0) {
            return self.err("zero denominator");
        }
        let c = Scalar::new(numer, denom);
        if self.eat(b'*') {
            Ok((self.word()?, c))
        } else {
            Ok((TensorWord::unit(), c))
        }
    }

    fn poly(&mut self) -> Result<TensorPoly, TensorError> {
        let mut p = TensorPoly::zero();
        let mut negative = self.eat(b'-');
        if !negative {
            self.eat(b'+');
        }
        loop {
            self.ws();
            if self.peek() == Some(b'0') && !matches!(self.s.get(self.pos + 1), Some(c) if c.is_ascii_digit() || *c == b'/' || *c == b'*') {
                self.pos += 1;
            } else {
                let (w, c) = self.term()?;
                p.add_term(w, if negative { -c } else { c });
            }
            if self.eat(b'+') {
                negative = false;
            } else if self.eat(b'-') {
                negative = true;
            } else {
                return Ok(p);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::ratio;

    #[test]
    fn standard_names() {
        assert_eq!(Generators::standard(1).unwrap().names(), ["x"]);
        assert_eq!(Generators::standard(3).unwrap().names(), ["x1", "x2", "x3"]);
        assert!(Generators::standard(0).is_err());
        assert!(Generators::new(vec!["1a".into()]).is_err());
        assert!(Generators::new(vec!["a".into(), "a".into()]).is_err());
    }

    #[test]
    fn round_trip() {
        let g = Generators::standard(2).unwrap();
        for text in [
            "0",
            "1",
            "x1",
            "-x1.x2 + (x1>x2)",
            "1/2*x1.x1 - 1/2*(x1>x1)",
            "3 + 2*((x1>x2)>x1).x2",
        ] {
            let p = g.parse_poly(text).unwrap();
            let printed = g.format_poly(&p);
            assert_eq!(g.parse_poly(&printed).unwrap(), p, "{text} -> {printed}");
        }
        let p = g.parse_poly("x1.x2 - x2.x1 + x1.x2").unwrap();
        assert_eq!(p.coefficient(&g.parse_word("x1.x2").unwrap()), ratio(2, 1));
        assert_eq!(g.format_poly(&g.parse_poly("x1 - x1").unwrap()), "0");
    }

    #[test]
    fn canonical_printing() {
        let g = Generators::standard(2).unwrap();
        let p = g.parse_poly("(x1>x2) + x1.x2 - 1/3*x2").unwrap();
        // lower degree first, then shorter words
        assert_eq!(g.format_poly(&p), "-1/3*x2 + (x1>x2) + x1.x2");
    }

    #[test]
    fn parse_errors() {
        let g = Generators::standard(2).unwrap();
        assert!(matches!(g.parse_poly("x3"), Err(TensorError::UnknownGenerator { position: 0, .. })));
        assert!(matches!(g.parse_poly("(x1>x2"), Err(TensorError::Parse { .. })));
        assert!(matches!(g.parse_poly("x1 x2"), Err(TensorError::Parse { .. })));
        assert!(matches!(g.parse_poly("1/0*x1"), Err(TensorError::Parse { .. })));
    }
}
