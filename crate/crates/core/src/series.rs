//! The reduced ring `R`: non-commutative polynomials in `x_i` modulo every
//! monomial in which some variable occurs twice.
//!
//! A basis of `R` is given by the square-free words in the variables, so the
//! ring is finite-dimensional and every element with constant term 1 is a
//! unit (its non-constant part is nilpotent).

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use smallvec::SmallVec;
use thiserror::Error;

use crate::ring::{write_signed, Coefficient};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("series over different variable sets ({0} vs {1})")]
    AmbientMismatch(VarSet, VarSet),
    #[error("series is not invertible: constant term is {0}, expected 1")]
    NotInvertible(String),
    #[error("series is constant; it has no positive-degree part")]
    Constant,
    #[error("variable x{0} is not in {1}")]
    UnknownVariable(u8, VarSet),
}

/// A finite set of variable indices in `1..=63`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VarSet(u64);

impl VarSet {
    /// `{1, ..., n}`.
    pub fn first(n: u8) -> Self {
        assert!(n <= 63, "at most 63 variables");
        VarSet::from_indices(1..=n)
    }

    pub fn from_indices(indices: impl IntoIterator<Item = u8>) -> Self {
        let mut bits = 0u64;
        for i in indices {
            assert!(
                (1..=63).contains(&i),
                "variable index {i} out of range 1..=63"
            );
            bits |= 1 << i;
        }
        VarSet(bits)
    }

    pub fn contains(&self, i: u8) -> bool {
        i < 64 && self.0 & (1 << i) != 0
    }

    pub fn without(&self, i: u8) -> Self {
        VarSet(self.0 & !(1u64 << i))
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn indices(&self) -> impl Iterator<Item = u8> + '_ {
        (1..64u8).filter(|&i| self.contains(i))
    }

    /// All square-free monomials over this set, in canonical order.
    pub fn monomials(&self) -> Vec<Monomial> {
        let vars: Vec<u8> = self.indices().collect();
        let mut out = vec![Monomial::one()];
        let mut frontier = vec![Monomial::one()];
        for _ in 0..vars.len() {
            let mut next = Vec::new();
            for m in &frontier {
                for &v in &vars {
                    if m.mask() & (1 << v) == 0 {
                        let mut grown = m.clone();
                        grown.vars.push(v);
                        next.push(grown);
                    }
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out.sort();
        out
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.indices().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "x{i}")?;
        }
        write!(f, "}}")
    }
}

/// A word `x_{i_1} ... x_{i_k}` in pairwise distinct variables.
///
/// Ordered by degree first, then lexicographically by index sequence.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    vars: SmallVec<[u8; 8]>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    /// `None` when an index repeats (the monomial is zero in `R`) or is out of range.
    pub fn new(vars: &[u8]) -> Option<Self> {
        let mut mask = 0u64;
        for &v in vars {
            if !(1..=63).contains(&v) || mask & (1 << v) != 0 {
                return None;
            }
            mask |= 1 << v;
        }
        Some(Monomial {
            vars: SmallVec::from_slice(vars),
        })
    }

    pub fn vars(&self) -> &[u8] {
        &self.vars
    }

    pub fn degree(&self) -> usize {
        self.vars.len()
    }

    pub fn is_one(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn mask(&self) -> u64 {
        self.vars.iter().fold(0, |m, &v| m | (1 << v))
    }

    pub fn contains(&self, v: u8) -> bool {
        self.vars.contains(&v)
    }

    fn concat(&self, other: &Monomial) -> Monomial {
        let mut vars = self.vars.clone();
        vars.extend_from_slice(&other.vars);
        Monomial { vars }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.vars
            .len()
            .cmp(&other.vars.len())
            .then_with(|| self.vars.cmp(&other.vars))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `x2.x3.x5`; the unit monomial prints as `1`.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.vars.is_empty() {
            return write!(f, "1");
        }
        for (k, v) in self.vars.iter().enumerate() {
            if k > 0 {
                write!(f, ".")?;
            }
            write!(f, "x{v}")?;
        }
        Ok(())
    }
}

/// An element of `R` over the variables `vars`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series<C> {
    vars: VarSet,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coefficient> Series<C> {
    pub fn zero(vars: VarSet) -> Self {
        Series {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: VarSet) -> Self {
        Series::constant(vars, C::one())
    }

    pub fn constant(vars: VarSet, c: C) -> Self {
        let mut s = Series::zero(vars);
        s.add_term(Monomial::one(), c);
        s
    }

    /// `1 + x_i`, the image of the `i`-th generator.
    pub fn generator(vars: VarSet, i: u8) -> Result<Self, SeriesError> {
        if !vars.contains(i) {
            return Err(SeriesError::UnknownVariable(i, vars));
        }
        let mut s = Series::one(vars);
        s.add_term(Monomial::new(&[i]).expect("single variable"), C::one());
        Ok(s)
    }

    /// Build from `(monomial, coefficient)` pairs, summing duplicates.
    /// Monomials using variables outside `vars` are rejected.
    pub fn from_terms(
        vars: VarSet,
        terms: impl IntoIterator<Item = (Monomial, C)>,
    ) -> Result<Self, SeriesError> {
        let mut s = Series::zero(vars);
        for (m, c) in terms {
            if let Some(&v) = m.vars().iter().find(|&&v| !vars.contains(v)) {
                return Err(SeriesError::UnknownVariable(v, vars));
            }
            s.add_term(m, c);
        }
        Ok(s)
    }

    pub fn vars(&self) -> VarSet {
        self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_term().is_one()
    }

    /// Coefficient of `m`; zero for monomials not stored (including those
    /// outside the variable set).
    pub fn coefficient(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn constant_term(&self) -> C {
        self.coefficient(&Monomial::one())
    }

    fn add_term(&mut self, m: Monomial, c: C) {
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c);
                }
            }
            Entry::Occupied(mut e) => {
                e.get_mut().add_assign_ref(&c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_same(&self, other: &Self) -> Result<(), SeriesError> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(SeriesError::AmbientMismatch(self.vars, other.vars))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        Series {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg_ref()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.add(&other.neg())
    }

    /// Product in `R`: concatenate monomials, dropping those with a repeated index.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_same(other)?;
        let right: Vec<(&Monomial, u64, &C)> =
            other.terms.iter().map(|(m, c)| (m, m.mask(), c)).collect();
        let mut acc: BTreeMap<Monomial, C> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            let mask_a = ma.mask();
            for &(mb, mask_b, cb) in &right {
                if mask_a & mask_b != 0 {
                    continue;
                }
                acc.entry(ma.concat(mb))
                    .or_insert_with(C::zero)
                    .add_product(ca, cb);
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(Series {
            vars: self.vars,
            terms: acc,
        })
    }

    /// Two-sided inverse of a series with constant term 1, computed as
    /// `sum_{k=0}^{n} (1 - s)^k`.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let constant = self.constant_term();
        if !constant.is_one() {
            return Err(SeriesError::NotInvertible(constant.to_string()));
        }
        let nilpotent = Series::one(self.vars).sub(self)?;
        let mut power = Series::one(self.vars);
        let mut total = Series::one(self.vars);
        for _ in 0..self.vars.len() {
            power = power.mul(&nilpotent)?;
            if power.is_zero() {
                break;
            }
            total = total.add(&power)?;
        }
        Ok(total)
    }

    /// The homogeneous part of minimal positive degree.
    pub fn lowest_degree_part(&self) -> Result<Self, SeriesError> {
        let degree = self
            .terms
            .keys()
            .map(Monomial::degree)
            .find(|&d| d > 0)
            .ok_or(SeriesError::Constant)?;
        Ok(self.homogeneous_part(degree))
    }

    pub fn homogeneous_part(&self, degree: usize) -> Self {
        Series {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Set the variables outside `vars` to zero and move to that ring.
    pub fn restrict(&self, vars: VarSet) -> Self {
        Series {
            vars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.vars().iter().all(|&v| vars.contains(v)))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn map_coefficients<D: Coefficient>(&self, mut f: impl FnMut(&C) -> D) -> Series<D> {
        let mut out = Series::zero(self.vars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Number of stored terms of each degree, indexed by degree.
    pub fn degree_histogram(&self) -> Vec<usize> {
        let mut hist = vec![0; self.vars.len() + 1];
        for m in self.terms.keys() {
            hist[m.degree()] += 1;
        }
        hist
    }
}

/// Canonical text form: terms in monomial order, explicit signs, unit
/// coefficients omitted, e.g. `1 + x1.x2 - x2.x1`. Non-constant coefficients
/// are parenthesised. The zero series prints as `0`.
impl<C: Coefficient> fmt::Display for Series<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let first = k == 0;
            match c.as_integer() {
                Some(value) => {
                    write_signed(f, first, &value, !m.is_one())?;
                    if !m.is_one() {
                        if !num_traits::Signed::abs(&value).eq(&BigInt::from(1)) {
                            write!(f, "*")?;
                        }
                        write!(f, "{m}")?;
                    }
                }
                None => {
                    if !first {
                        write!(f, " + ")?;
                    }
                    write!(f, "({c})")?;
                    if !m.is_one() {
                        write!(f, "*{m}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
