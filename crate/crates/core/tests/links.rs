mod common;

use milnor::links::{builtin, LinkPresentation};
use milnor::{milnor_relator, Generator, Monomial, VarSet};
use num_bigint::BigInt;
use proptest::prelude::*;

fn arb_presentation() -> impl Strategy<Value = LinkPresentation> {
    (2usize..=4).prop_flat_map(|n| {
        prop::collection::vec(common::word(n as u32, 10), n)
            .prop_map(|ls| LinkPresentation::new(ls).unwrap())
    })
}

/// Triviality via every distinct-index invariant avoiding the target.
fn trivial_by_invariants(p: &LinkPresentation) -> bool {
    let n = p.components();
    (1..=n).all(|j| {
        let vars = VarSet::first(n as u8).without(j as u8);
        vars.monomials()
            .iter()
            .filter(|m| !m.is_one())
            .all(|m: &Monomial| {
                let seq: Vec<usize> = m.vars().iter().map(|&v| v as usize).collect();
                p.mu(&seq, j).unwrap() == BigInt::from(0)
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn triviality_formulations_agree(p in arb_presentation()) {
        prop_assert_eq!(p.is_homotopically_trivial().unwrap(), trivial_by_invariants(&p));
    }

    #[test]
    fn relators_do_not_change_invariants(
        p in arb_presentation(),
        x in common::word(4, 5),
        y in common::word(4, 5),
        pick in 0usize..16,
    ) {
        let n = p.components();
        let clip = |w: &milnor::Word| w.substitute(|g| match g {
            Generator::Numbered(i) if *i as usize > n => Some(milnor::Word::identity()),
            _ => None,
        });
        let (x, y) = (clip(&x), clip(&y));
        let j = pick % n + 1;
        let i = (pick / n) % n + 1;
        let r = milnor_relator(&Generator::numbered(i as u32), &x, &y);
        let mut longitudes = p.longitudes().to_vec();
        longitudes[j - 1] = &longitudes[j - 1] * &r;
        let q = LinkPresentation::new(longitudes).unwrap();
        prop_assert_eq!(p.nonzero_invariants().unwrap(), q.nonzero_invariants().unwrap());
    }
}

#[test]
fn builtins_agree_across_formulations() {
    for name in ["unlink(1)", "unlink(3)", "hopf", "borromean", "whitehead"] {
        let p = builtin(name).unwrap();
        assert_eq!(
            p.is_homotopically_trivial().unwrap(),
            trivial_by_invariants(&p),
            "{name}"
        );
    }
}

#[test]
fn golden_values() {
    let hopf = builtin("hopf").unwrap();
    assert_eq!(hopf.mu(&[1], 2).unwrap(), BigInt::from(1));
    assert_eq!(hopf.mu(&[2], 1).unwrap(), BigInt::from(1));
    let bor = builtin("borromean").unwrap();
    assert_eq!(bor.mu(&[1, 2], 3).unwrap(), BigInt::from(1));
    assert_eq!(bor.mu(&[2, 3], 1).unwrap(), BigInt::from(1));
    assert_eq!(bor.mu(&[3, 1], 2).unwrap(), BigInt::from(1));
    assert!(!bor.is_homotopically_trivial().unwrap());
    assert!(builtin("whitehead")
        .unwrap()
        .is_homotopically_trivial()
        .unwrap());
    assert!(builtin("unlink(4)")
        .unwrap()
        .is_homotopically_trivial()
        .unwrap());
}
