mod common;

use common::{reference_expansion, series_as_pairs, word};
use milnor::magnus::nilpotency_class_check;
use milnor::words::left_normed_commutator;
use milnor::{commutator, conjugate, expand, is_trivial_mf, milnor_relator, Generator, Word};
use proptest::prelude::*;

fn m(i: u32) -> Word {
    Word::meridian(i)
}

proptest! {
    #[test]
    fn agrees_with_reference_expansion(w in word(4, 14)) {
        let s = expand(&w, 4).unwrap();
        prop_assert_eq!(series_as_pairs(&s), reference_expansion(&w, 4));
    }

    #[test]
    fn expansion_is_multiplicative(u in word(5, 10), v in word(5, 10)) {
        let lhs = expand(&(&u * &v), 5).unwrap();
        let rhs = expand(&u, 5).unwrap().mul(&expand(&v, 5).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn inversion_is_consistent(w in word(5, 12)) {
        prop_assert_eq!(
            expand(&w.inverse(), 5).unwrap(),
            expand(&w, 5).unwrap().inverse().unwrap()
        );
    }

    #[test]
    fn relators_expand_to_one(i in 1u32..=5, x in word(5, 6), y in word(5, 6)) {
        let r = milnor_relator(&Generator::numbered(i), &x, &y);
        prop_assert!(expand(&r, 5).unwrap().is_one());
    }

    #[test]
    fn conjugation_keeps_lowest_part(s in word(4, 10), t in word(4, 10)) {
        let es = expand(&s, 4).unwrap();
        prop_assume!(!es.is_one());
        let et = expand(&conjugate(&s, &t), 4).unwrap();
        prop_assert_eq!(es.lowest_degree_part().unwrap(), et.lowest_degree_part().unwrap());
    }
}

#[test]
fn commutator_expansion_against_reference() {
    let c = commutator(&m(5), &m(6));
    let s = expand(&c, 6).unwrap();
    assert_eq!(
        series_as_pairs(&s),
        vec![(vec![], 1), (vec![5, 6], 1), (vec![6, 5], -1)]
    );
    assert_eq!(series_as_pairs(&s), reference_expansion(&c, 6));
}

#[test]
fn core_five_fold_commutator_against_reference() {
    let core = commutator(
        &m(2),
        &commutator(&commutator(&m(3), &m(4)), &commutator(&m(5), &m(6))),
    );
    let reference = reference_expansion(&core, 5);
    let coefficient = reference
        .iter()
        .find(|(v, _)| v == &vec![2, 3, 4, 6, 5])
        .map(|(_, c)| *c);
    assert_eq!(coefficient, Some(-1));
    let s = milnor::ExpansionContext::new(milnor::VarSet::from_indices(2..=6))
        .expand(&core)
        .unwrap();
    assert_eq!(series_as_pairs(&s), reference);
}

#[test]
fn relator_triviality() {
    let r = milnor_relator(&Generator::numbered(1), &m(2), &m(3));
    assert!(is_trivial_mf(&r, 3).unwrap());
    assert!(!is_trivial_mf(&commutator(&m(1), &m(2)), 2).unwrap());
}

#[test]
fn class_bound() {
    assert!(nilpotency_class_check(5));
    // Length-n commutators of distinct meridians survive.
    let c = left_normed_commutator(&[m(1), m(2), m(3), m(4)]);
    assert!(!is_trivial_mf(&c, 4).unwrap());
}
