//! Milnor invariants with distinct indices for string-link style
//! presentations: `n` components, each with a longitude written as a word in
//! the meridians `m_1 .. m_n`.
//!
//! The invariant `mu(i_1 ... i_k; j)` is the coefficient of `x_{i_1} ... x_{i_k}`
//! in the expansion of longitude `j`, taken in the ring on all variables
//! except `x_j` (a component's own meridian is invisible up to link homotopy).
//! A presentation is homotopically trivial iff all of them vanish.
//!
//! No attempt is made to check that a presentation comes from a geometric
//! link; choosing longitudes for an actual link is up to the caller.

use std::fmt;
use std::path::Path;

use num_bigint::BigInt;
use thiserror::Error;

use crate::magnus::{ExpansionContext, MagnusError};
use crate::ring::Coefficient;
use crate::series::{Monomial, Series, VarSet};
use crate::words::{commutator, conjugate, parse_word, Alphabet, Generator, ParseError, Word};

/// Upper bound on components; variable indices must fit the reduced ring.
pub const MAX_COMPONENTS: usize = 63;

#[derive(Debug, Error)]
pub enum LinkError {
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
    #[error("line {line}: {source}")]
    Word { line: usize, source: ParseError },
    #[error("index error: {0}")]
    Index(String),
    #[error("unknown builtin link `{0}`")]
    UnknownBuiltin(String),
    #[error(transparent)]
    Magnus(#[from] MagnusError),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl LinkError {
    /// Malformed input, as opposed to a bad index, a generator outside the
    /// link's components or an unknown builtin name.
    pub fn is_format(&self) -> bool {
        match self {
            LinkError::Format { .. } | LinkError::Io { .. } => true,
            LinkError::Word { source, .. } => matches!(source, ParseError::Syntax { .. }),
            _ => false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkPresentation {
    n: usize,
    longitudes: Vec<Word>,
    pub name: Option<String>,
}

impl LinkPresentation {
    /// Longitude `j` is `longitudes[j - 1]`; every generator must be `m_i` with `i <= n`.
    pub fn new(longitudes: Vec<Word>) -> Result<Self, LinkError> {
        let n = longitudes.len();
        if n == 0 || n > MAX_COMPONENTS {
            return Err(LinkError::Index(format!(
                "component count {n} outside 1..={MAX_COMPONENTS}"
            )));
        }
        let alphabet = Alphabet::numbered(n as u32);
        for (j, w) in longitudes.iter().enumerate() {
            if let Some(g) = w.generators().into_iter().find(|g| !alphabet.contains(g)) {
                return Err(LinkError::Index(format!(
                    "longitude {} uses {g}, but there are {n} components",
                    j + 1
                )));
            }
        }
        Ok(LinkPresentation {
            n,
            longitudes,
            name: None,
        })
    }

    pub fn named(mut self, name: &str) -> Self {
        self.name = Some(name.to_string());
        self
    }

    pub fn components(&self) -> usize {
        self.n
    }

    pub fn longitude(&self, j: usize) -> &Word {
        &self.longitudes[j - 1]
    }

    pub fn longitudes(&self) -> &[Word] {
        &self.longitudes
    }

    fn all_vars(&self) -> VarSet {
        VarSet::first(self.n as u8)
    }

    fn check_component(&self, j: usize) -> Result<(), LinkError> {
        if (1..=self.n).contains(&j) {
            Ok(())
        } else {
            Err(LinkError::Index(format!(
                "component {j} outside 1..={}",
                self.n
            )))
        }
    }

    /// Expansion of longitude `j` over every variable except `x_j`.
    pub fn reduced_longitude(&self, j: usize) -> Result<Series<BigInt>, LinkError> {
        self.check_component(j)?;
        let vars = self.all_vars().without(j as u8);
        let ctx =
            ExpansionContext::new(vars).assign(Generator::numbered(j as u32), Series::one(vars))?;
        Ok(ctx.expand(self.longitude(j))?)
    }

    /// `mu(seq; target)`.
    pub fn mu(&self, seq: &[usize], target: usize) -> Result<BigInt, LinkError> {
        self.check_component(target)?;
        for &i in seq {
            self.check_component(i)?;
        }
        if seq.contains(&target) {
            return Err(LinkError::Index(format!(
                "target {target} occurs in the index sequence"
            )));
        }
        let vars: Vec<u8> = seq.iter().map(|&i| i as u8).collect();
        let monomial = Monomial::new(&vars)
            .ok_or_else(|| LinkError::Index("indices must be pairwise distinct".to_string()))?;
        Ok(self.reduced_longitude(target)?.coefficient(&monomial))
    }

    /// Every nonzero `mu` with distinct indices, in component then monomial order.
    pub fn nonzero_invariants(&self) -> Result<Vec<MuInvariant>, LinkError> {
        let mut out = Vec::new();
        for j in 1..=self.n {
            for (m, c) in self.reduced_longitude(j)?.terms() {
                if m.is_one() || c.is_zero() {
                    continue;
                }
                out.push(MuInvariant {
                    index_sequence: m.vars().iter().map(|&v| v as usize).collect(),
                    target: j,
                    value: c.clone(),
                });
            }
        }
        Ok(out)
    }

    /// True iff every longitude expands to 1 once its own variable is deleted.
    pub fn is_homotopically_trivial(&self) -> Result<bool, LinkError> {
        for j in 1..=self.n {
            if !self.reduced_longitude(j)?.is_one() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Parse the link file format:
    ///
    /// ```text
    /// components: 3
    /// longitude 1: [m2,m3]
    /// longitude 2: [m3,m1]
    /// longitude 3: [m1,m2]   # comments allowed
    /// ```
    pub fn parse(text: &str) -> Result<Self, LinkError> {
        let mut n: Option<usize> = None;
        let mut longitudes: Vec<Option<Word>> = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line_no = k + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let format_err = |message: String| LinkError::Format {
                line: line_no,
                message,
            };
            let Some((key, value)) = line.split_once(':') else {
                return Err(format_err(format!("expected `key: value`, found `{line}`")));
            };
            let key = key.trim();
            if key == "components" {
                if n.is_some() {
                    return Err(format_err("duplicate `components` line".into()));
                }
                let count: usize = value.trim().parse().map_err(|_| {
                    format_err(format!("invalid component count `{}`", value.trim()))
                })?;
                if count == 0 || count > MAX_COMPONENTS {
                    return Err(format_err(format!(
                        "component count {count} outside 1..={MAX_COMPONENTS}"
                    )));
                }
                n = Some(count);
                longitudes = vec![None; count];
            } else if let Some(index) = key.strip_prefix("longitude") {
                let count =
                    n.ok_or_else(|| format_err("`components` must precede the longitudes".into()))?;
                let j: usize = index.trim().parse().map_err(|_| {
                    format_err(format!("invalid longitude index `{}`", index.trim()))
                })?;
                if !(1..=count).contains(&j) {
                    return Err(format_err(format!(
                        "longitude index {j} outside 1..={count}"
                    )));
                }
                if longitudes[j - 1].is_some() {
                    return Err(format_err(format!("longitude {j} given twice")));
                }
                let word =
                    parse_word(value, &Alphabet::numbered(count as u32)).map_err(|source| {
                        LinkError::Word {
                            line: line_no,
                            source,
                        }
                    })?;
                longitudes[j - 1] = Some(word);
            } else {
                return Err(format_err(format!("unknown key `{key}`")));
            }
        }
        let n = n.ok_or(LinkError::Format {
            line: 1,
            message: "missing `components` line".into(),
        })?;
        let longitudes = longitudes
            .into_iter()
            .enumerate()
            .map(|(j, w)| {
                w.ok_or_else(|| LinkError::Format {
                    line: 0,
                    message: format!("longitude {} missing (expected {n})", j + 1),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        LinkPresentation::new(longitudes)
    }

    pub fn read(path: &Path) -> Result<Self, LinkError> {
        let text = std::fs::read_to_string(path).map_err(|source| LinkError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }
}

/// Serializes in the link file format.
impl fmt::Display for LinkPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(name) = &self.name {
            writeln!(f, "# {name}")?;
        }
        writeln!(f, "components: {}", self.n)?;
        for (j, w) in self.longitudes.iter().enumerate() {
            writeln!(f, "longitude {}: {w}", j + 1)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuInvariant {
    pub index_sequence: Vec<usize>,
    pub target: usize,
    pub value: BigInt,
}

/// `mu[1,2;3] = 1`.
impl fmt::Display for MuInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let seq: Vec<String> = self.index_sequence.iter().map(|i| i.to_string()).collect();
        write!(f, "mu[{};{}] = {}", seq.join(","), self.target, self.value)
    }
}

/// Built-in presentations: `unlink(n)`, `hopf`, `borromean`, `whitehead`.
pub fn builtin(name: &str) -> Result<LinkPresentation, LinkError> {
    let m = Word::meridian;
    let name = name.trim();
    let pres = match name {
        "hopf" => LinkPresentation::new(vec![m(2), m(1)])?,
        "borromean" => LinkPresentation::new(vec![
            commutator(&m(2), &m(3)),
            commutator(&m(3), &m(1)),
            commutator(&m(1), &m(2)),
        ])?,
        // Each longitude is a commutator of the other meridian with a conjugate of itself.
        "whitehead" => LinkPresentation::new(vec![
            commutator(&m(2), &conjugate(&m(2), &m(1))),
            commutator(&m(1), &conjugate(&m(1), &m(2))),
        ])?,
        _ => {
            let count = name
                .strip_prefix("unlink(")
                .and_then(|rest| rest.strip_suffix(')'))
                .and_then(|k| k.trim().parse::<usize>().ok())
                .ok_or_else(|| LinkError::UnknownBuiltin(name.to_string()))?;
            LinkPresentation::new(vec![Word::identity(); count])?
        }
    };
    Ok(pres.named(name))
}
