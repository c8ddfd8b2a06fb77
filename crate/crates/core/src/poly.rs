//! Multivariate integer polynomials in named unknowns.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use smallvec::SmallVec;

use crate::ring::{write_signed, Coefficient};

#[derive(Default)]
struct Interner {
    names: Vec<Arc<str>>,
    ids: HashMap<Arc<str>, u32>,
}

static INTERNER: Lazy<RwLock<Interner>> = Lazy::new(Default::default);

/// An interned unknown. Two unknowns are equal iff their names are equal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Unknown(u32);

impl Unknown {
    pub fn new(name: &str) -> Self {
        if let Some(&id) = INTERNER.read().expect("interner poisoned").ids.get(name) {
            return Unknown(id);
        }
        let mut table = INTERNER.write().expect("interner poisoned");
        if let Some(&id) = table.ids.get(name) {
            return Unknown(id);
        }
        let id = u32::try_from(table.names.len()).expect("too many unknowns");
        let name: Arc<str> = Arc::from(name);
        table.names.push(name.clone());
        table.ids.insert(name, id);
        Unknown(id)
    }

    pub fn name(&self) -> Arc<str> {
        INTERNER.read().expect("interner poisoned").names[self.0 as usize].clone()
    }
}

impl fmt::Display for Unknown {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

// (unknown, exponent) pairs sorted by unknown; exponents are positive.
type PowerProduct = SmallVec<[(Unknown, u32); 4]>;

// A power product with unknowns replaced by their names, for display order.
type NamedPowers = Vec<(Arc<str>, u32)>;

fn multiply_power_products(a: &PowerProduct, b: &PowerProduct) -> PowerProduct {
    let mut out = PowerProduct::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push((a[i].0, a[i].1 + b[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// A polynomial with integer coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntPolynomial {
    terms: BTreeMap<PowerProduct, BigInt>,
}

impl IntPolynomial {
    pub fn constant(value: impl Into<BigInt>) -> Self {
        let value = value.into();
        let mut terms = BTreeMap::new();
        if !Zero::is_zero(&value) {
            terms.insert(PowerProduct::new(), value);
        }
        IntPolynomial { terms }
    }

    pub fn unknown(u: Unknown) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(smallvec::smallvec![(u, 1)], <BigInt as One>::one());
        IntPolynomial { terms }
    }

    pub fn var(name: &str) -> Self {
        Self::unknown(Unknown::new(name))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|pp| pp.iter().map(|(_, e)| e).sum())
            .max()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|pp| pp.is_empty())
    }

    pub fn constant_term(&self) -> BigInt {
        self.terms
            .get(&PowerProduct::new())
            .cloned()
            .unwrap_or_default()
    }

    /// Every unknown that occurs with a nonzero coefficient.
    pub fn unknowns(&self) -> Vec<Unknown> {
        let mut out: Vec<Unknown> = self
            .terms
            .keys()
            .flat_map(|pp| pp.iter().map(|(u, _)| *u))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Evaluate at integer values; `value` is consulted once per unknown occurrence.
    pub fn evaluate(&self, mut value: impl FnMut(Unknown) -> BigInt) -> BigInt {
        let mut cache: HashMap<Unknown, BigInt> = HashMap::new();
        let mut total = <BigInt as Zero>::zero();
        for (pp, c) in &self.terms {
            let mut t = c.clone();
            for (u, e) in pp {
                let v = cache.entry(*u).or_insert_with(|| value(*u));
                t *= num_traits::pow(v.clone(), *e as usize);
            }
            total += t;
        }
        total
    }

    /// Evaluate with the given assignment; unknowns not listed are zero.
    pub fn evaluate_with(&self, assignment: &BTreeMap<Unknown, BigInt>) -> BigInt {
        self.evaluate(|u| assignment.get(&u).cloned().unwrap_or_default())
    }

    fn add_term(&mut self, pp: PowerProduct, c: BigInt) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(pp) {
            Entry::Vacant(e) => {
                if !Zero::is_zero(&c) {
                    e.insert(c);
                }
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if Zero::is_zero(e.get()) {
                    e.remove();
                }
            }
        }
    }

    fn sorted_terms(&self) -> Vec<(NamedPowers, &BigInt)> {
        let mut out: Vec<_> = self
            .terms
            .iter()
            .map(|(pp, c)| {
                let mut named: Vec<(Arc<str>, u32)> =
                    pp.iter().map(|(u, e)| (u.name(), *e)).collect();
                named.sort();
                (named, c)
            })
            .collect();
        out.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().map(|(_, e)| e).sum();
            let db: u32 = b.iter().map(|(_, e)| e).sum();
            da.cmp(&db).then_with(|| a.cmp(b))
        });
        out
    }
}

impl Coefficient for IntPolynomial {
    fn zero() -> Self {
        IntPolynomial::default()
    }

    fn one() -> Self {
        IntPolynomial::constant(1)
    }

    fn from_i64(value: i64) -> Self {
        IntPolynomial::constant(value)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_assign_ref(&mut self, other: &Self) {
        for (pp, c) in &other.terms {
            self.add_term(pp.clone(), c.clone());
        }
    }

    fn mul_ref(&self, other: &Self) -> Self {
        let mut out = IntPolynomial::default();
        out.add_product(self, other);
        out
    }

    fn neg_ref(&self) -> Self {
        IntPolynomial {
            terms: self.terms.iter().map(|(pp, c)| (pp.clone(), -c)).collect(),
        }
    }

    fn add_product(&mut self, a: &Self, b: &Self) {
        for (pa, ca) in &a.terms {
            for (pb, cb) in &b.terms {
                let pp = if pa.is_empty() {
                    pb.clone()
                } else if pb.is_empty() {
                    pa.clone()
                } else {
                    multiply_power_products(pa, pb)
                };
                self.add_term(pp, ca * cb);
            }
        }
    }

    fn as_integer(&self) -> Option<BigInt> {
        self.is_constant().then(|| self.constant_term())
    }
}

impl From<i64> for IntPolynomial {
    fn from(value: i64) -> Self {
        IntPolynomial::constant(value)
    }
}

impl std::ops::Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl std::ops::Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        self.mul_ref(rhs)
    }
}

impl std::ops::Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        self.neg_ref()
    }
}

/// Terms ordered by total degree, then lexicographically by unknown names,
/// e.g. `-1 - a.2 + a.2*b.4^2`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (named, c)) in self.sorted_terms().into_iter().enumerate() {
            write_signed(f, k == 0, c, !named.is_empty())?;
            for (i, (name, e)) in named.iter().enumerate() {
                let c_is_unit = One::is_one(&num_traits::Signed::abs(c));
                if i > 0 || !c_is_unit {
                    write!(f, "*")?;
                }
                write!(f, "{name}")?;
                if *e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(name: &str) -> IntPolynomial {
        IntPolynomial::var(name)
    }

    #[test]
    fn interning_is_stable() {
        assert_eq!(Unknown::new("t.x"), Unknown::new("t.x"));
        assert_ne!(Unknown::new("t.x"), Unknown::new("t.y"));
        assert_eq!(&*Unknown::new("t.y").name(), "t.y");
    }

    #[test]
    fn arithmetic_cancels_exactly() {
        let a = p("t.a");
        let b = p("t.b");
        // (a + b)(a - b) = a^2 - b^2
        let lhs = &(&a + &b) * &(&a + &(-&b));
        let rhs = &(&a * &a) + &(-&(&b * &b));
        assert_eq!(lhs, rhs);
        assert!((&a + &(-&a)).is_zero());
        assert_eq!(lhs.total_degree(), Some(2));
    }

    #[test]
    fn constants() {
        let c = IntPolynomial::constant(-3);
        assert!(c.is_constant());
        assert_eq!(c.as_integer(), Some(BigInt::from(-3)));
        assert!(p("t.a").as_integer().is_none());
        assert!(IntPolynomial::constant(0).is_zero());
    }

    #[test]
    fn evaluation() {
        let a = p("t.a");
        let b = p("t.b");
        let q = &(&a * &a) + &(&IntPolynomial::constant(2) * &b);
        let mut asg = BTreeMap::new();
        asg.insert(Unknown::new("t.a"), BigInt::from(3));
        assert_eq!(q.evaluate_with(&asg), BigInt::from(9));
        asg.insert(Unknown::new("t.b"), BigInt::from(-5));
        assert_eq!(q.evaluate_with(&asg), BigInt::from(-1));
    }

    #[test]
    fn display_is_graded_lex() {
        let a = p("s.a");
        let b = p("s.b");
        let q = &(&(&b * &a) + &(-&a)) + &IntPolynomial::constant(-1);
        assert_eq!(q.to_string(), "-1 - s.a + s.a*s.b");
        let sq = &(&a * &a) * &IntPolynomial::constant(3);
        assert_eq!(sq.to_string(), "3*s.a^2");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }
}
