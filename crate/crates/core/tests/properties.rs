mod common;

use std::sync::OnceLock;

use brace_forge::corpus::{parse_braces, BraceDocument};
use brace_forge::ideals::{enumerate_ideals, ideal_closure, is_ideal, quotient};
use brace_forge::{FiniteSkewBrace, SubSet};
use proptest::prelude::*;

fn corpus() -> &'static [FiniteSkewBrace] {
    static CORPUS: OnceLock<Vec<FiniteSkewBrace>> = OnceLock::new();
    CORPUS.get_or_init(|| common::corpus(27))
}

/// A corpus brace together with three of its elements.
fn brace_and_elements() -> impl Strategy<Value = (usize, usize, usize, usize)> {
    (0..corpus().len()).prop_flat_map(|i| {
        let n = corpus()[i].order();
        (Just(i), 0..n, 0..n, 0..n)
    })
}

fn brace_and_subset() -> impl Strategy<Value = (usize, Vec<usize>)> {
    (0..corpus().len()).prop_flat_map(|i| {
        let n = corpus()[i].order();
        (Just(i), prop::collection::vec(0..n, 0..4))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn lambda_is_a_homomorphism_into_additive_automorphisms((i, a, b, c) in brace_and_elements()) {
        let x = &corpus()[i];
        prop_assert_eq!(x.lambda(a, x.add(b, c)), x.add(x.lambda(a, b), x.lambda(a, c)));
        prop_assert_eq!(x.lambda(x.circ(a, b), c), x.lambda(a, x.lambda(b, c)));
        prop_assert_eq!(x.circ(a, b), x.add(a, x.lambda(a, b)));
        prop_assert_eq!(x.circ(a, b), x.add(x.add(a, x.star(a, b)), b));
    }

    #[test]
    fn lambda_is_bijective((i, a, _, _) in brace_and_elements()) {
        let x = &corpus()[i];
        let mut image: Vec<usize> = (0..x.order()).map(|b| x.lambda(a, b)).collect();
        image.sort_unstable();
        prop_assert!(image.into_iter().eq(0..x.order()));
    }

    #[test]
    fn ideal_closure_is_a_closure_operator((i, seed) in brace_and_subset()) {
        let x = &corpus()[i];
        let small = SubSet::from_indices(x.order(), seed.iter().copied().take(1)).unwrap();
        let large = SubSet::from_indices(x.order(), seed).unwrap();
        let closed = ideal_closure(x, &large).unwrap();
        prop_assert!(large.is_subset(closed.members()));
        prop_assert!(is_ideal(x, closed.members()).unwrap().holds());
        prop_assert_eq!(&ideal_closure(x, closed.members()).unwrap(), &closed);
        prop_assert!(ideal_closure(x, &small).unwrap().members().is_subset(closed.members()));
        let t = common::Tables::of(x);
        prop_assert!(common::is_ideal(&t, &common::from_members(x.order(), closed.members().iter())));
    }
}

#[test]
fn validation_is_idempotent() {
    for b in corpus() {
        let again = FiniteSkewBrace::from_rows(b.name(), &b.add_rows(), &b.circ_rows()).unwrap();
        assert_eq!(&again, b);
        let text = BraceDocument::from_brace(b).to_string();
        let parsed = parse_braces(&text).unwrap();
        assert_eq!(parsed.len(), 1);
        assert_eq!(&parsed[0], b);
        assert_eq!(parsed[0].name(), b.name());
    }
}

#[test]
fn ideals_are_additive_normal_cosets_agree_and_quotients_validate() {
    for b in corpus().iter().filter(|b| b.order() <= 16) {
        let t = common::Tables::of(b);
        for ideal in enumerate_ideals(b).unwrap() {
            let m = ideal.members().to_vec();
            for a in 0..b.order() {
                let circ_coset = common::from_members(t.n, m.iter().map(|&x| b.circ(a, x)));
                let add_coset = common::from_members(t.n, m.iter().map(|&x| b.add(a, x)));
                assert_eq!(circ_coset, add_coset);
                for &x in &m {
                    assert!(ideal.members().contains(b.add(b.add(a, x), b.neg(a))));
                }
            }
            let (q, map) = quotient(b, ideal.members()).unwrap();
            assert!(common::is_skew_brace(&q.add_rows(), &q.circ_rows()));
            assert_eq!(q.order() * ideal.len(), b.order());
            for x in 0..b.order() {
                for y in 0..b.order() {
                    assert_eq!(map[b.add(x, y)], q.add(map[x], map[y]));
                    assert_eq!(map[b.circ(x, y)], q.circ(map[x], map[y]));
                }
            }
        }
    }
}
