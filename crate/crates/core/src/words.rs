//! Words in free groups and free Milnor groups.
//!
//! A [`Word`] is always stored freely reduced. Commutators and conjugates
//! follow the conventions
//!
//! ```text
//! [u, v] = u^-1 v^-1 u v        u^g = g^-1 u g
//! ```
//!
//! under which `[fg, h] = [f, h]^g [g, h]` holds letter for letter.

mod parse;

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Mul;
use std::sync::Arc;

pub use parse::{parse_word, ParseError};

/// A generator of a free group: a numbered meridian `m<i>` or a symbolic
/// meridian `m_<name>`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    Numbered(u32),
    Named(Arc<str>),
}

impl Generator {
    pub fn numbered(index: u32) -> Self {
        assert!(index >= 1, "meridian indices start at 1");
        Generator::Numbered(index)
    }

    pub fn named(name: &str) -> Self {
        Generator::Named(Arc::from(name))
    }

    /// The variable index carried by a numbered meridian.
    pub fn index(&self) -> Option<u32> {
        match self {
            Generator::Numbered(i) => Some(*i),
            Generator::Named(_) => None,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Numbered(i) => write!(f, "m{i}"),
            Generator::Named(name) => write!(f, "m_{name}"),
        }
    }
}

/// A set of generators accepted by the parser.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Alphabet {
    max_numbered: Option<u32>,
    named: BTreeSet<Arc<str>>,
}

impl Alphabet {
    /// `m1 .. mn`.
    pub fn numbered(n: u32) -> Self {
        Alphabet {
            max_numbered: Some(n),
            named: BTreeSet::new(),
        }
    }

    /// Every numbered meridian, no symbolic ones.
    pub fn all_numbered() -> Self {
        Alphabet {
            max_numbered: None,
            named: BTreeSet::new(),
        }
    }

    pub fn with_named<'a>(mut self, names: impl IntoIterator<Item = &'a str>) -> Self {
        self.named.extend(names.into_iter().map(Arc::from));
        self
    }

    pub fn contains(&self, g: &Generator) -> bool {
        match g {
            Generator::Numbered(i) => *i >= 1 && self.max_numbered.is_none_or(|n| *i <= n),
            Generator::Named(name) => self.named.contains(name),
        }
    }
}

/// A generator or its inverse.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub generator: Generator,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: Generator, inverse: bool) -> Self {
        Letter { generator, inverse }
    }

    pub fn inverted(&self) -> Self {
        Letter {
            generator: self.generator.clone(),
            inverse: !self.inverse,
        }
    }

    fn cancels(&self, other: &Letter) -> bool {
        self.generator == other.generator && self.inverse != other.inverse
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "{}^-1", self.generator)
        } else {
            write!(f, "{}", self.generator)
        }
    }
}

/// A freely reduced word. The empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

/// Freely reduce a sequence of letters.
pub fn reduce<I: IntoIterator<Item = Letter>>(raw: I) -> Word {
    let mut letters: Vec<Letter> = Vec::new();
    for letter in raw {
        if letters.last().is_some_and(|top| top.cancels(&letter)) {
            letters.pop();
        } else {
            letters.push(letter);
        }
    }
    Word { letters }
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn generator(g: Generator) -> Self {
        Word {
            letters: vec![Letter::new(g, false)],
        }
    }

    /// Shorthand for the word `m<i>`.
    pub fn meridian(i: u32) -> Self {
        Word::generator(Generator::numbered(i))
    }

    pub fn named(name: &str) -> Self {
        Word::generator(Generator::named(name))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(Letter::inverted).collect(),
        }
    }

    pub fn product(&self, other: &Word) -> Word {
        reduce(self.letters.iter().chain(other.letters.iter()).cloned())
    }

    /// Generators occurring in the word, in canonical order.
    pub fn generators(&self) -> BTreeSet<Generator> {
        self.letters.iter().map(|l| l.generator.clone()).collect()
    }

    /// Replace every occurrence of a generator by a word.
    pub fn substitute(&self, mut image: impl FnMut(&Generator) -> Option<Word>) -> Word {
        let mut raw = Vec::with_capacity(self.letters.len());
        for letter in &self.letters {
            match image(&letter.generator) {
                Some(w) if letter.inverse => raw.extend(w.inverse().letters),
                Some(w) => raw.extend(w.letters),
                None => raw.push(letter.clone()),
            }
        }
        reduce(raw)
    }
}

impl Mul for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        self.product(rhs)
    }
}

impl Mul for Word {
    type Output = Word;

    fn mul(self, rhs: Word) -> Word {
        reduce(self.letters.into_iter().chain(rhs.letters))
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Self {
        reduce(iter)
    }
}

/// Canonical form: letters separated by single spaces, `1` for the identity.
/// The output parses back to the same word.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (k, letter) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

/// `[u, v] = u^-1 v^-1 u v`.
pub fn commutator(u: &Word, v: &Word) -> Word {
    let raw = u
        .inverse()
        .letters
        .into_iter()
        .chain(v.inverse().letters)
        .chain(u.letters.iter().cloned())
        .chain(v.letters.iter().cloned());
    reduce(raw)
}

/// `u^g = g^-1 u g`.
pub fn conjugate(u: &Word, g: &Word) -> Word {
    let raw = g
        .inverse()
        .letters
        .into_iter()
        .chain(u.letters.iter().cloned())
        .chain(g.letters.iter().cloned());
    reduce(raw)
}

/// The Milnor relator `[g^x, g^y]`.
pub fn milnor_relator(g: &Generator, x: &Word, y: &Word) -> Word {
    let base = Word::generator(g.clone());
    commutator(&conjugate(&base, x), &conjugate(&base, y))
}

/// Left-normed commutator `[[[w1, w2], w3], ...]`; a single word is returned as is.
pub fn left_normed_commutator(words: &[Word]) -> Word {
    let mut iter = words.iter();
    let Some(first) = iter.next() else {
        return Word::identity();
    };
    iter.fold(first.clone(), |acc, w| commutator(&acc, w))
}
