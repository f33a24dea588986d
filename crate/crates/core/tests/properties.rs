mod common;

use proptest::prelude::*;
use qtangent::oq::{pair, OElement};
use qtangent::parse::{parse_o, parse_scalar, parse_u};
use qtangent::scalar::Scalar;
use qtangent::uq::UElement;
use qtangent::qnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn scalar(seed: u64) -> Scalar {
    let mut r = rng(seed);
    let mut acc = common::coefficient(&mut r);
    if r.gen_bool(0.5) {
        acc = &acc + &(&Scalar::param(1) * &common::coefficient(&mut r));
    }
    if r.gen_bool(0.3) {
        let d = &Scalar::s() + &Scalar::from_int(r.gen_range(1..=3));
        acc = &acc / &d;
    }
    acc
}

fn o_element(seed: u64) -> OElement {
    let mut r = rng(seed);
    let mut out = OElement::zero();
    for _ in 0..r.gen_range(1..=3) {
        let word: Vec<_> = (0..r.gen_range(0..=3)).map(|_| r.gen_range(0..4)).collect();
        out = out.add(&OElement::from_word(&word).scale(&common::coefficient(&mut r)));
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let (a, b, c) = (scalar(a), scalar(b), scalar(c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a / &a).is_one());
        }
    }

    #[test]
    fn qnum_addition(m in -6i64..=6, n in -6i64..=6) {
        let lhs = qnum(m + n);
        let rhs = &(&Scalar::q_pow(n) * &qnum(m)) + &(&Scalar::q_pow(-m) * &qnum(n));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn scalar_round_trip(seed in any::<u64>()) {
        let a = scalar(seed);
        prop_assert_eq!(parse_scalar(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn u_round_trip(seed in any::<u64>()) {
        let x = common::element(&mut rng(seed));
        prop_assert_eq!(parse_u(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn o_round_trip(seed in any::<u64>()) {
        let x = o_element(seed);
        prop_assert_eq!(parse_o(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn u_associative(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (x, y, z) = (common::element(&mut r), common::element(&mut r), common::element(&mut r));
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
    }

    #[test]
    fn hopf_axioms(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (x, y) = (common::element(&mut r), common::element(&mut r));
        let dx = x.coproduct();
        prop_assert_eq!(dx.coproduct_left(), dx.coproduct_right());
        prop_assert_eq!(dx.counit_left(), x.clone());
        prop_assert_eq!(dx.counit_right(), x.clone());
        let unit = UElement::scalar(x.counit());
        prop_assert_eq!(dx.contract(|a| a.antipode(), Clone::clone), unit.clone());
        prop_assert_eq!(dx.contract(Clone::clone, |b| b.antipode()), unit);
        prop_assert_eq!(x.mul(&y).coproduct(), dx.mul(&y.coproduct()));
        prop_assert_eq!(x.mul(&y).counit(), &x.counit() * &y.counit());
    }

    #[test]
    fn pairing_dual_to_products(seed in any::<u64>()) {
        let x = common::element(&mut rng(seed));
        let (a, b) = (o_element(seed ^ 1), o_element(seed ^ 2));
        let lhs = pair(&x, &a.mul(&b));
        let mut rhs = Scalar::zero();
        for ((l, r), c) in x.coproduct().terms() {
            let t = &pair(&UElement::monomial(*l), &a) * &pair(&UElement::monomial(*r), &b);
            rhs = &rhs + &(c * &t);
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn o_counital(seed in any::<u64>()) {
        let a = o_element(seed);
        let da = a.coproduct();
        prop_assert_eq!(da.counit_left(), a.clone());
        prop_assert_eq!(da.counit_right(), a);
    }
}

#[test]
fn mixed_generators_rejected() {
    assert!(parse_u("E*u11").is_err());
    assert!(parse_o("u11 + K").is_err());
}
