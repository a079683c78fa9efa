use std::cmp::Ordering;

use hkit_core::exactalg::ExactMatrix;
use hkit_core::{Field, Ideal, Monomial, MonomialOrder, Polynomial, Ring, RingSpec};
use proptest::prelude::*;
use proptest::test_runner::RngSeed;

fn ring(field: Field) -> Ring {
    RingSpec::new(&["x", "y", "z"], field).unwrap()
}

type RawPoly = Vec<(i64, [u32; 3])>;

fn raw_poly() -> impl Strategy<Value = RawPoly> {
    prop::collection::vec((-20i64..=20, [0u32..4, 0u32..4, 0u32..4]), 0..5)
}

fn build(r: &Ring, raw: &RawPoly) -> Polynomial {
    raw.iter().fold(Polynomial::zero(r), |acc, (c, e)| {
        acc.add(&Polynomial::monomial(r, Monomial::from_exponents(e), r.field().from_i64(*c)))
    })
}

/// Generators for Gröbner tests stay below degree 4 so lex bases stay small.
fn small_poly() -> impl Strategy<Value = RawPoly> {
    prop::collection::vec((-20i64..=20, [0u32..2, 0u32..2, 0u32..3]), 1..4)
}

fn fields() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::default()), Just(Field::Rationals), Just(Field::prime(7).unwrap())]
}

fn orders() -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![
        Just(MonomialOrder::Lex),
        Just(MonomialOrder::DegRevLex),
        Just(MonomialOrder::Elimination(1)),
        Just(MonomialOrder::Elimination(2)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 64,
        rng_seed: RngSeed::Fixed(20),
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn ring_axioms(field in fields(), a in raw_poly(), b in raw_poly(), c in raw_poly()) {
        let r = ring(field);
        let (a, b, c) = (build(&r, &a), build(&r, &b), build(&r, &c));
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.mul(&Polynomial::one(&r)), a.clone());
    }

    #[test]
    fn orders_refine_divisibility(order in orders(), e in [0u32..5, 0u32..5, 0u32..5], f in [0u32..5, 0u32..5, 0u32..5]) {
        let m = Monomial::from_exponents(&e);
        let n = m.mul(&Monomial::from_exponents(&f));
        let cmp = order.cmp(&m, &n);
        prop_assert!(cmp != Ordering::Greater);
        prop_assert_eq!(cmp == Ordering::Equal, f == [0, 0, 0]);
        prop_assert_eq!(order.cmp(&Monomial::one(3), &m) == Ordering::Less, e != [0, 0, 0]);
    }

    #[test]
    fn rank_plus_nullity(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 1..6), p in prop_oneof![Just(3u32), Just(5), Just(32003)]) {
        for field in [Field::prime(p).unwrap(), Field::Rationals] {
            let m = ExactMatrix::from_i64_rows(field, &rows);
            prop_assert_eq!(m.rank() + m.nullity(), 5);
            for v in m.nullspace() {
                prop_assert!(m.mul_vec(&v).iter().all(|x| x.is_zero()));
            }
        }
    }

    #[test]
    fn normal_form_idempotent(field in prop_oneof![Just(Field::default()), Just(Field::prime(7).unwrap())], order in orders(), gens in prop::collection::vec(small_poly(), 1..4), f in raw_poly()) {
        let r = ring(field);
        let gens: Vec<Polynomial> = gens.iter().map(|g| build(&r, g)).collect();
        let ideal = Ideal::new(&r, gens);
        let gb = ideal.groebner(order).unwrap();
        let f = build(&r, &f);
        let nf = gb.normal_form(&f);
        prop_assert_eq!(gb.normal_form(&nf), nf.clone());
        prop_assert!(gb.reduces_to_zero(&f.sub(&nf)));
        for g in ideal.gens() {
            prop_assert!(gb.reduces_to_zero(g));
        }
    }
}
