//! Brute-force reference expansion: compute in the full non-commutative
//! polynomial ring truncated at degree `n` (repeated indices allowed), and
//! only quotient by repeated-index monomials at the very end.

#![allow(dead_code)]

use std::collections::HashMap;

use milnor::{Generator, Word};
use proptest::prelude::*;

pub type FreePoly = HashMap<Vec<u8>, i64>;

fn mul(a: &FreePoly, b: &FreePoly, max_degree: usize) -> FreePoly {
    let mut out = FreePoly::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            if ma.len() + mb.len() > max_degree {
                continue;
            }
            let mut m = ma.clone();
            m.extend_from_slice(mb);
            *out.entry(m).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// `1 + x_i` or the geometric series `1 - x_i + x_i^2 - ...` up to `max_degree`.
fn letter(i: u8, inverse: bool, max_degree: usize) -> FreePoly {
    let mut p = FreePoly::new();
    p.insert(vec![], 1);
    if inverse {
        for k in 1..=max_degree {
            p.insert(vec![i; k], if k % 2 == 0 { 1 } else { -1 });
        }
    } else {
        p.insert(vec![i], 1);
    }
    p
}

/// Expansion of a word over numbered meridians, as `(index sequence, coefficient)`
/// pairs with pairwise-distinct indices, sorted.
pub fn reference_expansion(w: &Word, max_degree: usize) -> Vec<(Vec<u8>, i64)> {
    let mut acc = FreePoly::new();
    acc.insert(vec![], 1);
    for l in w.letters() {
        let Generator::Numbered(i) = l.generator else {
            panic!("reference expansion only handles numbered meridians");
        };
        acc = mul(&acc, &letter(i as u8, l.inverse, max_degree), max_degree);
    }
    let mut out: Vec<(Vec<u8>, i64)> = acc
        .into_iter()
        .filter(|(m, _)| {
            let mut seen = 0u64;
            m.iter().all(|&v| {
                let fresh = seen & (1 << v) == 0;
                seen |= 1 << v;
                fresh
            })
        })
        .collect();
    out.sort();
    out
}

/// All sequences of length <= n over `1..=n` without repeats, by filtering
/// the full set of sequences.
pub fn brute_force_basis_count(n: u8) -> usize {
    let mut count = 0;
    let mut frontier: Vec<Vec<u8>> = vec![vec![]];
    for _ in 0..=n {
        count += frontier
            .iter()
            .filter(|s| {
                let mut t = s.to_vec();
                t.sort();
                t.dedup();
                t.len() == s.len()
            })
            .count();
        frontier = frontier
            .iter()
            .flat_map(|s| {
                (1..=n).map(move |v| {
                    let mut t = s.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    count
}

pub fn series_as_pairs(s: &milnor::Series<num_bigint::BigInt>) -> Vec<(Vec<u8>, i64)> {
    let mut out: Vec<(Vec<u8>, i64)> = s
        .terms()
        .map(|(m, c)| {
            (
                m.vars().to_vec(),
                i64::try_from(c).expect("small coefficient"),
            )
        })
        .collect();
    out.sort();
    out
}

/// Random freely reduced words on `m1 .. m_gens` with at most `max_len` letters.
pub fn word(gens: u32, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((1..=gens, any::<bool>()), 0..=max_len).prop_map(|letters| {
        milnor::reduce(
            letters
                .into_iter()
                .map(|(i, inv)| milnor::words::Letter::new(Generator::numbered(i), inv)),
        )
    })
}
