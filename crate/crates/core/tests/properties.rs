use assoc_core::arith::rat;
use assoc_core::lie::LieElement;
use assoc_core::mzv::{shuffle, stuffle, CompositionPoly, ReductionTable};
use assoc_core::{Atom, Composition, MzvExpr, Scalar, ZetaMonomial};
use proptest::prelude::*;

fn arb_scalar() -> impl Strategy<Value = Scalar> {
    let monomials = [
        (0u32, ZetaMonomial::one()),
        (2, ZetaMonomial::atom(Atom::Z2)),
        (3, ZetaMonomial::atom(Atom::Z3)),
        (5, ZetaMonomial::atom(Atom::Z5)),
        (8, ZetaMonomial::from_atoms([Atom::Z3, Atom::Z5])),
        (8, ZetaMonomial::atom(Atom::Z35)),
    ];
    proptest::collection::vec((0usize..monomials.len(), 0u32..4, -6i64..=6, 1i64..=4), 0..4).prop_map(move |terms| {
        let mut s = Scalar::zero();
        for (i, extra, n, d) in terms {
            let (weight, m) = &monomials[i];
            // the key may exceed the weight: missing weight is a power of ζ(2)
            let pad = ZetaMonomial::from_atoms(std::iter::repeat_n(Atom::Z2, extra as usize));
            let key = weight + 2 * extra;
            s += Scalar::new(key, MzvExpr::term(m.mul(&pad), rat(n, d))).unwrap();
        }
        s
    })
}

fn arb_lie_deg1() -> impl Strategy<Value = LieElement> {
    proptest::collection::vec((0u32..4, arb_scalar()), 0..3).prop_map(|terms| {
        let mut l = LieElement::zero();
        for (a, c) in terms {
            l.add_deg1(a, &c);
        }
        l
    })
}

/// Depth-one admissible compositions; their products stay within the tabulated depth.
fn arb_single(max_weight: u32) -> impl Strategy<Value = Composition> {
    (2..=max_weight).prop_map(|k| Composition::new(vec![k]))
}

fn reduce_all(t: &ReductionTable, poly: &CompositionPoly) -> MzvExpr {
    let mut out = MzvExpr::zero();
    for (k, c) in poly.iter() {
        out += &t.reduce(k).unwrap().scale(c);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn scalar_ring_laws(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Scalar::one(), a.clone());
    }

    #[test]
    fn lie_expansion_is_linear(p in arb_lie_deg1(), q in arb_lie_deg1(), s in arb_scalar()) {
        let lhs = p.add(&q.scale(&s)).expand(7);
        let rhs = p.expand(7).add(&q.expand(7).scale(&s));
        prop_assert_eq!(lhs.differences(&rhs), vec![]);
    }

    #[test]
    fn lie_bracket_is_the_commutator(p in arb_lie_deg1(), q in arb_lie_deg1()) {
        let (pe, qe) = (p.expand(8), q.expand(8));
        let commutator = pe.mul(&qe).sub(&qe.mul(&pe));
        let bracket = p.bracket(&q).unwrap().expand(8);
        prop_assert_eq!(bracket.differences(&commutator), vec![]);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn table_respects_double_shuffle(a in arb_single(9), b in arb_single(9)) {
        prop_assume!(a.weight() + b.weight() <= 11 && a.weight() + b.weight() != 10);
        let t = ReductionTable::shared(11).unwrap();
        let product = &t.reduce(&a).unwrap() * &t.reduce(&b).unwrap();
        prop_assert_eq!(&reduce_all(&t, &stuffle(&a, &b)), &product);
        let sh = shuffle(&a.to_word(), &b.to_word()).map_keys(|w| w.to_composition().unwrap());
        prop_assert_eq!(&reduce_all(&t, &sh), &product);
    }
}
