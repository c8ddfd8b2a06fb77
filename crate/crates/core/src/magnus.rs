//! The Magnus expansion `m_i -> 1 + x_i` into the reduced ring, and the
//! free Milnor group equality test it induces.
//!
//! The expansion kills every Milnor relator `[g^x, g^y]` and is injective on
//! the free Milnor group, so two words are equal there exactly when their
//! expansions agree.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use thiserror::Error;

use crate::ring::Coefficient;
use crate::series::{Series, SeriesError, VarSet};
use crate::words::{left_normed_commutator, Generator, Word};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum MagnusError {
    #[error("generator {0} has no assigned expansion")]
    Unassigned(Generator),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// Images of the generators. Numbered meridians `m_i` with `x_i` in the
/// variable set default to `1 + x_i`; anything else must be assigned.
#[derive(Clone, Debug)]
pub struct ExpansionContext<C: Coefficient> {
    vars: VarSet,
    assignment: BTreeMap<Generator, Series<C>>,
    inverses: BTreeMap<Generator, Series<C>>,
}

impl<C: Coefficient> ExpansionContext<C> {
    pub fn new(vars: VarSet) -> Self {
        ExpansionContext {
            vars,
            assignment: BTreeMap::new(),
            inverses: BTreeMap::new(),
        }
    }

    pub fn vars(&self) -> VarSet {
        self.vars
    }

    /// Override the image of `g`. The series must live over the context's
    /// variables and have constant term 1.
    pub fn assign(mut self, g: Generator, image: Series<C>) -> Result<Self, MagnusError> {
        if image.vars() != self.vars {
            return Err(SeriesError::AmbientMismatch(image.vars(), self.vars).into());
        }
        let constant = image.constant_term();
        if !constant.is_one() {
            return Err(SeriesError::NotInvertible(constant.to_string()).into());
        }
        self.inverses.insert(g.clone(), image.inverse()?);
        self.assignment.insert(g, image);
        Ok(self)
    }

    /// The image of a single generator.
    pub fn image(&self, g: &Generator) -> Result<Series<C>, MagnusError> {
        if let Some(s) = self.assignment.get(g) {
            return Ok(s.clone());
        }
        match g {
            Generator::Numbered(i) => {
                let i = u8::try_from(*i)
                    .ok()
                    .filter(|&i| self.vars.contains(i))
                    .ok_or_else(|| MagnusError::Unassigned(g.clone()))?;
                Ok(Series::generator(self.vars, i)?)
            }
            Generator::Named(_) => Err(MagnusError::Unassigned(g.clone())),
        }
    }

    fn inverse_image(&self, g: &Generator) -> Result<Series<C>, MagnusError> {
        match self.inverses.get(g) {
            Some(s) => Ok(s.clone()),
            None => Ok(self.image(g)?.inverse()?),
        }
    }

    /// The Magnus expansion of `w`.
    pub fn expand(&self, w: &Word) -> Result<Series<C>, MagnusError> {
        let mut images: BTreeMap<(&Generator, bool), Series<C>> = BTreeMap::new();
        let mut acc = Series::one(self.vars);
        for letter in w.letters() {
            let key = (&letter.generator, letter.inverse);
            let image = match images.entry(key) {
                Entry::Occupied(e) => e.into_mut(),
                Entry::Vacant(e) => e.insert(if letter.inverse {
                    self.inverse_image(&letter.generator)?
                } else {
                    self.image(&letter.generator)?
                }),
            };
            acc = acc.mul(image)?;
        }
        Ok(acc)
    }
}

impl ExpansionContext<BigInt> {
    /// Integer expansion over `x_1 .. x_n`.
    pub fn standard(n: u8) -> Self {
        ExpansionContext::new(VarSet::first(n))
    }
}

/// Expand over `x_1 .. x_n` with integer coefficients.
pub fn expand(w: &Word, n: u8) -> Result<Series<BigInt>, MagnusError> {
    ExpansionContext::standard(n).expand(w)
}

/// Equality in the free Milnor group on `m_1 .. m_n`.
pub fn mf_equal(u: &Word, v: &Word, n: u8) -> Result<bool, MagnusError> {
    let ctx = ExpansionContext::standard(n);
    Ok(ctx.expand(u)? == ctx.expand(v)?)
}

/// Triviality in the free Milnor group on `m_1 .. m_n`.
pub fn is_trivial_mf(w: &Word, n: u8) -> Result<bool, MagnusError> {
    Ok(expand(w, n)?.is_one())
}

const EXHAUSTIVE_LIMIT: usize = 4096;
const SAMPLES: usize = 512;

/// Check that `(n+1)`-fold left-normed commutators of meridians `m_1 .. m_n`
/// expand to 1. All `n^(n+1)` sequences are tried when there are at most
/// 4096 of them; otherwise a fixed-seed sample of 512.
pub fn nilpotency_class_check(n: u8) -> bool {
    assert!(n >= 1, "need at least one generator");
    let ctx = ExpansionContext::standard(n);
    let length = n as u32 + 1;
    let check = |seq: &[u32]| {
        let words: Vec<Word> = seq.iter().map(|&i| Word::meridian(i)).collect();
        ctx.expand(&left_normed_commutator(&words))
            .map(|s| s.is_one())
            .unwrap_or(false)
    };
    let total = (n as usize).checked_pow(length);
    match total {
        Some(total) if total <= EXHAUSTIVE_LIMIT => (0..total).all(|mut code| {
            let seq: Vec<u32> = (0..length)
                .map(|_| {
                    let i = (code % n as usize) as u32 + 1;
                    code /= n as usize;
                    i
                })
                .collect();
            check(&seq)
        }),
        _ => {
            let mut rng = StdRng::seed_from_u64(0x6d69_6c6e);
            (0..SAMPLES).all(|_| {
                let seq: Vec<u32> = (0..length).map(|_| rng.gen_range(1..=n as u32)).collect();
                check(&seq)
            })
        }
    }
}
