//! Verifier for the relative-slice obstruction carried by the five-fold
//! commutator
//!
//! ```text
//! l1 = [m_a m2, [[m3, m_b m4], [m5, m6 m_c]]]
//! ```
//!
//! The handle meridians `m_a`, `m_b`, `m_c` are unknown elements of the free
//! Milnor group on `m2 .. m6`. Each is modelled by a fully generic series
//! over `x2 .. x6` with constant term 1 and one integer unknown per
//! square-free monomial. Under the standard constraint the linear
//! coefficient of `x2` in `m_a`, of `x4` in `m_b` and of `x6` in `m_c` is
//! zero. The expansion of `l1` is then computed with polynomial
//! coefficients, and the coefficient of `x2.x3.x4.x6.x5` is read off.
//!
//! A nonzero constant coefficient rules out every specialization of the
//! unknowns at once, in particular every choice coming from actual group
//! elements, since genuine Magnus images form a subset of the generic family.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;

use crate::magnus::{ExpansionContext, MagnusError};
use crate::poly::{IntPolynomial, Unknown};
use crate::ring::Coefficient;
use crate::series::{Monomial, Series, VarSet};
use crate::words::{commutator, parse_word, Alphabet, Generator, ParseError, Word};

/// The commutator `l1` as written.
pub const L1_EXPR: &str = "[m_a m2,[[m3,m_b m4],[m5,m6 m_c]]]";

/// Index order of the monomial whose coefficient decides the obstruction.
pub const TARGET_VARS: [u8; 5] = [2, 3, 4, 6, 5];

/// Handle labels and the meridian each one must not pick up linearly under
/// the standard constraint.
pub const HANDLES: [(char, u8); 3] = [('a', 2), ('b', 4), ('c', 6)];

/// Variables `x2 .. x6`.
pub fn variables() -> VarSet {
    VarSet::from_indices(2..=6)
}

pub fn target_monomial() -> Monomial {
    Monomial::new(&TARGET_VARS).expect("distinct indices")
}

/// Generators `m2 .. m6` and the handle meridians `m_a`, `m_b`, `m_c`.
pub fn alphabet() -> Alphabet {
    Alphabet::numbered(6).with_named(["a", "b", "c"])
}

pub fn build_l1() -> Word {
    parse_word(L1_EXPR, &alphabet()).expect("l1 expression parses")
}

/// Name of the unknown coefficient of `m` in the handle meridian `label`,
/// e.g. `a.24` for the `x2.x4` coefficient of `m_a`.
pub fn unknown_name(label: char, m: &Monomial) -> String {
    let digits: String = m.vars().iter().map(|v| v.to_string()).collect();
    format!("{label}.{digits}")
}

pub fn unknown_for(label: char, m: &Monomial) -> Unknown {
    Unknown::new(&unknown_name(label, m))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConstraintSpec {
    pub standard: bool,
}

impl ConstraintSpec {
    pub fn standard() -> Self {
        ConstraintSpec { standard: true }
    }

    pub fn relaxed() -> Self {
        ConstraintSpec { standard: false }
    }

    /// Linear coefficients forced to vanish in the meridian `label`.
    pub fn forbidden_linear(&self, label: char) -> BTreeSet<u8> {
        if !self.standard {
            return BTreeSet::new();
        }
        HANDLES
            .iter()
            .filter(|(l, _)| *l == label)
            .map(|&(_, v)| v)
            .collect()
    }
}

/// A handle meridian with generic Magnus expansion.
#[derive(Clone, Debug)]
pub struct ParametricMeridian {
    pub label: char,
    pub forbidden_linear: BTreeSet<u8>,
    pub series: Series<IntPolynomial>,
}

impl ParametricMeridian {
    pub fn new(label: char, spec: ConstraintSpec) -> Self {
        let forbidden_linear = spec.forbidden_linear(label);
        let vars = variables();
        let terms = vars.monomials().into_iter().filter_map(|m| {
            if m.is_one() {
                return Some((m, IntPolynomial::constant(1)));
            }
            if m.degree() == 1 && forbidden_linear.contains(&m.vars()[0]) {
                return None;
            }
            let u = unknown_for(label, &m);
            Some((m, IntPolynomial::unknown(u)))
        });
        let series = Series::from_terms(vars, terms).expect("monomials over x2..x6");
        ParametricMeridian {
            label,
            forbidden_linear,
            series,
        }
    }

    pub fn generator(&self) -> Generator {
        Generator::named(&self.label.to_string())
    }

    pub fn unknowns(&self) -> Vec<Unknown> {
        self.series
            .terms()
            .flat_map(|(_, c)| c.unknowns())
            .collect()
    }

    /// Substitute integers for the unknowns; unlisted unknowns become zero.
    pub fn specialize(&self, assignment: &BTreeMap<Unknown, BigInt>) -> Series<BigInt> {
        specialize(&self.series, assignment)
    }
}

pub fn specialize(
    series: &Series<IntPolynomial>,
    assignment: &BTreeMap<Unknown, BigInt>,
) -> Series<BigInt> {
    series.map_coefficients(|c| c.evaluate_with(assignment))
}

/// The three parametric handle meridians for `spec`.
pub fn parametric_meridians(spec: ConstraintSpec) -> Vec<ParametricMeridian> {
    HANDLES
        .iter()
        .map(|&(label, _)| ParametricMeridian::new(label, spec))
        .collect()
}

/// Expansion context over `x2 .. x6` with the generic handle meridians assigned.
pub fn parametric_context(spec: ConstraintSpec) -> ExpansionContext<IntPolynomial> {
    parametric_meridians(spec)
        .into_iter()
        .try_fold(ExpansionContext::new(variables()), |ctx, pm| {
            ctx.assign(pm.generator(), pm.series)
        })
        .expect("parametric meridians have constant term 1")
}

/// Integer context with the given images of `m_a`, `m_b`, `m_c`.
pub fn integer_context(
    images: &BTreeMap<char, Series<BigInt>>,
) -> Result<ExpansionContext<BigInt>, MagnusError> {
    images
        .iter()
        .try_fold(ExpansionContext::new(variables()), |ctx, (label, s)| {
            ctx.assign(Generator::named(&label.to_string()), s.clone())
        })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// The target coefficient is a nonzero integer independent of all unknowns.
    NonzeroConstant,
    /// The target coefficient depends on the unknowns.
    Parametric,
    /// The target coefficient is identically zero.
    Zero,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::NonzeroConstant => "nonzero-constant",
            Verdict::Parametric => "parametric",
            Verdict::Zero => "zero",
        })
    }
}

/// An integer assignment of the unknowns under which `M(l1) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub assignment: BTreeMap<Unknown, BigInt>,
    pub description: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (", self.description)?;
        if self.assignment.is_empty() {
            write!(f, "all unknowns 0")?;
        }
        for (k, (u, v)) in self.assignment.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u} = {v}")?;
        }
        if !self.assignment.is_empty() {
            write!(f, ", others 0")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Debug)]
pub struct ObstructionReport {
    pub spec: ConstraintSpec,
    pub word: Word,
    pub target: Monomial,
    pub target_coefficient: IntPolynomial,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    /// Non-constant monomials stored in the expansion.
    pub monomial_count: usize,
    pub degree_histogram: Vec<usize>,
    /// Monomials other than the target whose coefficient is a nonzero constant.
    pub other_constant_monomials: Vec<(Monomial, BigInt)>,
    pub expansion: Series<IntPolynomial>,
}

impl ObstructionReport {
    pub fn is_obstructed(&self) -> bool {
        self.verdict == Verdict::NonzeroConstant
    }

    fn witness_assignment_text(&self) -> String {
        match &self.witness {
            None => "none".to_string(),
            Some(w) if w.assignment.is_empty() => "zero".to_string(),
            Some(w) => w
                .assignment
                .iter()
                .map(|(u, v)| format!("{u}={v}"))
                .collect::<Vec<_>>()
                .join(","),
        }
    }

    fn histogram_text(&self) -> String {
        self.degree_histogram
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// One `key=value` pair per line, in a fixed order:
    /// `word`, `standard`, `target`, `coefficient`, `verdict`, `witness`,
    /// `witness_description`, `monomial_count`, `degree_histogram`, `other_constant_monomials`.
    pub fn render_machine(&self) -> String {
        let others: Vec<String> = self
            .other_constant_monomials
            .iter()
            .map(|(m, v)| format!("{m}:{v}"))
            .collect();
        let mut out = String::new();
        out.push_str(&format!("word={}\n", self.word));
        out.push_str(&format!("standard={}\n", self.spec.standard));
        out.push_str(&format!("target={}\n", self.target));
        out.push_str(&format!("coefficient={}\n", self.target_coefficient));
        out.push_str(&format!("verdict={}\n", self.verdict));
        out.push_str(&format!("witness={}\n", self.witness_assignment_text()));
        let description = self
            .witness
            .as_ref()
            .map_or("none", |w| w.description.as_str());
        out.push_str(&format!("witness_description={description}\n"));
        out.push_str(&format!("monomial_count={}\n", self.monomial_count));
        out.push_str(&format!("degree_histogram={}\n", self.histogram_text()));
        out.push_str(&format!("other_constant_monomials={}\n", others.join(",")));
        out
    }
}

impl fmt::Display for ObstructionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let constraint = if self.spec.standard {
            "standard (no x2 in m_a, no x4 in m_b, no x6 in m_c at degree 1)"
        } else {
            "none"
        };
        writeln!(f, "word:        {}", self.word)?;
        writeln!(f, "constraint:  {constraint}")?;
        writeln!(f, "target:      {}", self.target)?;
        writeln!(f, "coefficient: {}", self.target_coefficient)?;
        writeln!(f, "verdict:     {}", self.verdict)?;
        match &self.witness {
            Some(w) => writeln!(f, "witness:     {w}")?,
            None => writeln!(f, "witness:     none")?,
        }
        writeln!(
            f,
            "expansion:   {} non-constant monomials, by degree [{}]",
            self.monomial_count,
            self.histogram_text()
        )?;
        writeln!(
            f,
            "other monomials with constant coefficient: {}",
            self.other_constant_monomials.len()
        )?;
        match self.verdict {
            Verdict::NonzeroConstant => writeln!(
                f,
                "result:      obstructed; no choice of handle meridians cancels {}",
                self.target
            ),
            _ if self.witness.is_some() => writeln!(
                f,
                "result:      not obstructed; the witness makes the expansion trivial"
            ),
            _ => writeln!(f, "result:      undecided by the target coefficient"),
        }
    }
}

/// Handle meridians `m_h = m_i^-1` for the given handles, all other
/// coefficients 0.
fn inverse_handles(labels: &[(char, u8)]) -> Witness {
    let mut assignment = BTreeMap::new();
    let mut parts = Vec::new();
    for &(label, i) in labels {
        let xi = Monomial::new(&[i]).expect("single variable");
        assignment.insert(unknown_for(label, &xi), BigInt::from(-1));
        parts.push(format!("m_{label} = m{i}^-1"));
    }
    Witness {
        assignment,
        description: parts.join(", "),
    }
}

/// `m_a = m2^-1`: the linear `x2` coefficient of `m_a` is -1, everything else 0.
pub fn relaxed_witness() -> Witness {
    inverse_handles(&HANDLES[..1])
}

/// Trivial handles first, then every nonempty set of inverted handles,
/// smallest sets first.
fn candidate_witnesses() -> Vec<Witness> {
    let mut subsets: Vec<Vec<(char, u8)>> = (1u32..1 << HANDLES.len())
        .map(|bits| {
            HANDLES
                .iter()
                .enumerate()
                .filter(|(k, _)| bits & (1 << k) != 0)
                .map(|(_, h)| *h)
                .collect()
        })
        .collect();
    subsets.sort_by_key(|s| s.len());
    let mut out = vec![Witness {
        assignment: BTreeMap::new(),
        description: "m_a = m_b = m_c = 1".to_string(),
    }];
    out.extend(subsets.iter().map(|s| inverse_handles(s)));
    out
}

/// Run the verifier on `l1`.
pub fn verify(spec: ConstraintSpec) -> ObstructionReport {
    verify_word(&build_l1(), spec).expect("l1 only uses m2..m6 and the handle meridians")
}

/// Run the verifier on an arbitrary word over `m2 .. m6, m_a, m_b, m_c`.
pub fn verify_word(word: &Word, spec: ConstraintSpec) -> Result<ObstructionReport, MagnusError> {
    let ctx = parametric_context(spec);
    let expansion = ctx.expand(word)?;
    let target = target_monomial();
    let target_coefficient = expansion.coefficient(&target);
    let verdict = match target_coefficient.as_integer() {
        Some(v) if v == BigInt::from(0) => Verdict::Zero,
        Some(_) => Verdict::NonzeroConstant,
        None => Verdict::Parametric,
    };

    let allowed: BTreeSet<Unknown> = parametric_meridians(spec)
        .iter()
        .flat_map(ParametricMeridian::unknowns)
        .collect();
    let witness = if verdict == Verdict::NonzeroConstant {
        None
    } else {
        candidate_witnesses().into_iter().find(|w| {
            w.assignment.keys().all(|u| allowed.contains(u))
                && specialize(&expansion, &w.assignment).is_one()
        })
    };

    let other_constant_monomials = expansion
        .terms()
        .filter(|(m, _)| !m.is_one() && **m != target)
        .filter_map(|(m, c)| c.as_integer().map(|v| (m.clone(), v)))
        .collect();
    let mut degree_histogram = expansion.degree_histogram();
    degree_histogram[0] = 0;

    Ok(ObstructionReport {
        spec,
        word: word.clone(),
        target,
        target_coefficient,
        verdict,
        witness,
        monomial_count: degree_histogram.iter().sum(),
        degree_histogram,
        other_constant_monomials,
        expansion,
    })
}

/// Parse a word over the obstruction alphabet.
pub fn parse_l1_variant(text: &str) -> Result<Word, ParseError> {
    parse_word(text, &alphabet())
}

/// The eight five-fold commutators `[u2, [[m3, u4], [m5, u6]]]` with
/// `u2 in {m2, m_a}`, `u4 in {m4, m_b}`, `u6 in {m6, m_c}`.
pub fn decomposition_terms() -> Vec<Word> {
    let m = Word::meridian;
    let mut out = Vec::with_capacity(8);
    for u2 in [m(2), Word::named("a")] {
        for u4 in [m(4), Word::named("b")] {
            for u6 in [m(6), Word::named("c")] {
                let inner = commutator(&commutator(&m(3), &u4), &commutator(&m(5), &u6));
                out.push(commutator(&u2, &inner));
            }
        }
    }
    out
}

/// Product of the expansions of [`decomposition_terms`], an independent
/// route to the expansion of `l1`.
pub fn decomposition_oracle<C: Coefficient>(
    ctx: &ExpansionContext<C>,
) -> Result<Series<C>, MagnusError> {
    decomposition_terms()
        .iter()
        .try_fold(Series::one(ctx.vars()), |acc, w| {
            Ok(acc.mul(&ctx.expand(w)?)?)
        })
}

/// Every non-constant monomial has degree 5, so it uses each of `x2 .. x6` once.
pub fn uses_all_variables<C: Coefficient>(s: &Series<C>) -> bool {
    let full = s.vars().len();
    s.terms()
        .filter(|(m, _)| !m.is_one())
        .all(|(m, _)| m.degree() == full)
}

/// [`uses_all_variables`] on the generic expansion of `l1`.
pub fn all_variables_check(spec: ConstraintSpec) -> bool {
    let s = parametric_context(spec)
        .expand(&build_l1())
        .expect("l1 expands in the parametric context");
    uses_all_variables(&s)
}
