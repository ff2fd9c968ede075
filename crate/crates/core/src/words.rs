//! Reduced words in the free group over a finite named alphabet.
//!
//! A [`Letter`] is a generator index together with a sign; the inverse
//! marker in text form is a single trailing apostrophe (`a'`). The unit
//! prints as the reserved token `e`.

use std::fmt;

use thiserror::Error;

/// Token used for the empty word in all text I/O.
pub const UNIT_TOKEN: &str = "e";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("unknown generator `{name}` at token {position}")]
    UnknownGenerator { name: String, position: usize },
    #[error("malformed token `{token}` at position {position}")]
    MalformedToken { token: String, position: usize },
    #[error("invalid generator name `{0}`")]
    InvalidName(String),
    #[error("duplicate generator name `{0}`")]
    DuplicateName(String),
    #[error("word uses generator index {index} but the alphabet has {size} generators")]
    AlphabetMismatch { index: usize, size: usize },
}

/// A generator or the dot-inverse of a generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn pos(generator: usize) -> Self {
        Letter { generator, inverse: false }
    }

    pub fn neg(generator: usize) -> Self {
        Letter { generator, inverse: true }
    }

    pub fn inv(self) -> Self {
        Letter { generator: self.generator, inverse: !self.inverse }
    }

    pub fn cancels(self, other: Letter) -> bool {
        self.generator == other.generator && self.inverse != other.inverse
    }
}

/// An element of the free group, stored in its unique reduced spelling.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ReducedWord {
    letters: Vec<Letter>,
}

impl ReducedWord {
    pub fn unit() -> Self {
        ReducedWord { letters: Vec::new() }
    }

    pub fn letter(a: Letter) -> Self {
        ReducedWord { letters: vec![a] }
    }

    /// Free reduction by a single stack scan.
    pub fn reduce<I: IntoIterator<Item = Letter>>(raw: I) -> Self {
        let mut stack: Vec<Letter> = Vec::new();
        for a in raw {
            match stack.last() {
                Some(&top) if top.cancels(a) => {
                    stack.pop();
                }
                _ => stack.push(a),
            }
        }
        ReducedWord { letters: stack }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_unit(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn dot(&self, other: &ReducedWord) -> ReducedWord {
        // Only the seam between the two reduced words can cancel.
        let mut k = 0;
        while k < self.len()
            && k < other.len()
            && self.letters[self.len() - 1 - k].cancels(other.letters[k])
        {
            k += 1;
        }
        let mut letters = Vec::with_capacity(self.len() + other.len() - 2 * k);
        letters.extend_from_slice(&self.letters[..self.len() - k]);
        letters.extend_from_slice(&other.letters[k..]);
        ReducedWord { letters }
    }

    pub fn invert(&self) -> ReducedWord {
        ReducedWord { letters: self.letters.iter().rev().map(|a| a.inv()).collect() }
    }

    /// Largest generator index used, if any.
    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|a| a.generator).max()
    }

    /// Applies a letter map that sends reduced words to reduced words
    /// (a permutation of generators extended sign-equivariantly).
    pub(crate) fn map_letters(&self, f: impl Fn(Letter) -> Letter) -> ReducedWord {
        ReducedWord { letters: self.letters.iter().map(|&a| f(a)).collect() }
    }
}

impl From<Letter> for ReducedWord {
    fn from(a: Letter) -> Self {
        ReducedWord::letter(a)
    }
}

/// Named generators; provides parsing and printing in the word syntax.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
}

pub fn is_valid_name(name: &str) -> bool {
    !name.is_empty()
        && name != UNIT_TOKEN
        && !name.contains('\'')
        && !name.chars().any(char::is_whitespace)
}

impl Alphabet {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self, WordError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if !is_valid_name(n) {
                return Err(WordError::InvalidName(n.clone()));
            }
            if names[..i].contains(n) {
                return Err(WordError::DuplicateName(n.clone()));
            }
        }
        Ok(Alphabet { names })
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

    pub fn name(&self, generator: usize) -> &str {
        &self.names[generator]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn check(&self, w: &ReducedWord) -> Result<(), WordError> {
        match w.max_generator() {
            Some(index) if index >= self.len() => {
                Err(WordError::AlphabetMismatch { index, size: self.len() })
            }
            _ => Ok(()),
        }
    }

    /// Parses whitespace-separated tokens `name` or `name'`; `e` is the unit.
    pub fn parse_letters(&self, text: &str) -> Result<Vec<Letter>, WordError> {
        let mut out = Vec::new();
        for (position, token) in text.split_whitespace().enumerate() {
            if token == UNIT_TOKEN {
                continue;
            }
            let (name, inverse) = match token.strip_suffix('\'') {
                Some(stem) => (stem, true),
                None => (token, false),
            };
            if name.is_empty() || name.contains('\'') {
                return Err(WordError::MalformedToken { token: token.to_string(), position });
            }
            let generator = self
                .index_of(name)
                .ok_or_else(|| WordError::UnknownGenerator { name: name.to_string(), position })?;
            out.push(Letter { generator, inverse });
        }
        Ok(out)
    }

    pub fn parse_word(&self, text: &str) -> Result<ReducedWord, WordError> {
        Ok(ReducedWord::reduce(self.parse_letters(text)?))
    }

    pub fn format_letter(&self, a: Letter) -> String {
        if a.inverse {
            format!("{}'", self.names[a.generator])
        } else {
            self.names[a.generator].clone()
        }
    }

    pub fn format_word(&self, w: &ReducedWord) -> String {
        if w.is_unit() {
            return UNIT_TOKEN.to_string();
        }
        w.letters().iter().map(|&a| self.format_letter(a)).collect::<Vec<_>>().join(" ")
    }

    pub fn display<'a>(&'a self, w: &'a ReducedWord) -> DisplayWord<'a> {
        DisplayWord { alphabet: self, word: w }
    }
}

pub struct DisplayWord<'a> {
    alphabet: &'a Alphabet,
    word: &'a ReducedWord,
}

impl fmt::Display for DisplayWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.alphabet.format_word(self.word))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn abc() -> Alphabet {
        Alphabet::new(["a", "b", "c"]).unwrap()
    }

    #[test]
    fn parse_examples() {
        let al = abc();
        assert!(al.parse_word("").unwrap().is_unit());
        assert!(al.parse_word("a a'").unwrap().is_unit());
        let w = al.parse_word("a b' b a").unwrap();
        assert_eq!(w.letters(), &[Letter::pos(0), Letter::pos(0)]);
        assert_eq!(al.format_word(&w), "a a");
        assert_eq!(al.format_word(&ReducedWord::unit()), "e");
        assert!(al.parse_word("e").unwrap().is_unit());
    }

    #[test]
    fn parse_errors_carry_position() {
        let al = abc();
        assert_eq!(
            al.parse_word("a z").unwrap_err(),
            WordError::UnknownGenerator { name: "z".into(), position: 1 }
        );
        assert!(matches!(
            al.parse_word("a b''").unwrap_err(),
            WordError::MalformedToken { position: 1, .. }
        ));
        assert!(matches!(al.parse_word("'").unwrap_err(), WordError::MalformedToken { .. }));
    }

    #[test]
    fn reserved_names_rejected() {
        assert!(Alphabet::new(["e"]).is_err());
        assert!(Alphabet::new(["a'"]).is_err());
        assert!(Alphabet::new(["a", "a"]).is_err());
        assert!(Alphabet::new(["a b"]).is_err());
    }

    #[test]
    fn reduce_examples() {
        assert!(ReducedWord::reduce([Letter::pos(0), Letter::neg(0)]).is_unit());
        let raw = [Letter::pos(0), Letter::pos(1), Letter::neg(1), Letter::pos(0)];
        assert_eq!(ReducedWord::reduce(raw).letters(), &[Letter::pos(0), Letter::pos(0)]);
    }

    #[test]
    fn dot_and_invert_examples() {
        let al = abc();
        let p = |s: &str| al.parse_word(s).unwrap();
        assert_eq!(p("a b").dot(&p("b' c")), p("a c"));
        assert_eq!(ReducedWord::unit().dot(&p("a b")), p("a b"));
        assert_eq!(p("a b'").invert(), p("b a'"));
        assert_eq!(al.format_word(&p("a").invert()), "a'");
        assert!(p("a b' c").dot(&p("a b' c").invert()).is_unit());
    }

    #[test]
    fn alphabet_check() {
        let al = Alphabet::new(["a"]).unwrap();
        let w = ReducedWord::letter(Letter::pos(2));
        assert_eq!(al.check(&w), Err(WordError::AlphabetMismatch { index: 2, size: 1 }));
    }

    fn raw_letters() -> impl Strategy<Value = Vec<Letter>> {
        prop::collection::vec((0usize..3, any::<bool>()), 0..24)
            .prop_map(|v| v.into_iter().map(|(g, i)| Letter { generator: g, inverse: i }).collect())
    }

    fn naive_reduce(mut v: Vec<Letter>) -> Vec<Letter> {
        // Repeatedly delete the first cancelling adjacent pair.
        loop {
            match (1..v.len()).find(|&i| v[i - 1].cancels(v[i])) {
                Some(i) => {
                    v.drain(i - 1..=i);
                }
                None => return v,
            }
        }
    }

    proptest! {
        #[test]
        fn reduce_matches_pair_deletion(raw in raw_letters()) {
            let w = ReducedWord::reduce(raw.clone());
            let expected = naive_reduce(raw.clone());
            prop_assert_eq!(w.letters(), expected.as_slice());
            prop_assert_eq!(ReducedWord::reduce(w.letters().to_vec()), w.clone());
            prop_assert!(w.len() <= raw.len());
            prop_assert_eq!((raw.len() - w.len()) % 2, 0);
        }

        #[test]
        fn group_axioms(a in raw_letters(), b in raw_letters(), c in raw_letters()) {
            let (u, v, w) = (ReducedWord::reduce(a), ReducedWord::reduce(b), ReducedWord::reduce(c));
            prop_assert_eq!(u.dot(&v).dot(&w), u.dot(&v.dot(&w)));
            prop_assert_eq!(ReducedWord::unit().dot(&u), u.clone());
            prop_assert_eq!(u.dot(&ReducedWord::unit()), u.clone());
            prop_assert!(u.dot(&u.invert()).is_unit());
            prop_assert_eq!(u.invert().invert(), u.clone());
            let concat: Vec<Letter> = u.letters().iter().chain(v.letters()).copied().collect();
            prop_assert_eq!(u.dot(&v), ReducedWord::reduce(concat));
        }

        #[test]
        fn print_parse_roundtrip(raw in raw_letters()) {
            let al = abc();
            let w = ReducedWord::reduce(raw);
            prop_assert_eq!(al.parse_word(&al.format_word(&w)).unwrap(), w);
        }
    }
}
