mod common;

use qtangent::coideal::{closure, closure_via_coproduct, dim_lower_bound, is_right_coideal};
use qtangent::fixtures::{builtin_calculi, find_calculus};
use qtangent::oq::{pair, OElement};
use qtangent::parse::{parse_o, parse_u};
use qtangent::scalar::Scalar;
use qtangent::uq::UElement;
use qtangent::GroupLabel;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn commutator_of_e_and_f() {
    let lhs = parse_u("E*F - F*E").unwrap();
    let rhs = UElement::group(GroupLabel::Q)
        .sub(&UElement::group(GroupLabel::Q_INV))
        .scale(&(&Scalar::one() / &(&Scalar::q() - &Scalar::q_pow(-1))));
    assert_eq!(lhs, rhs);
}

#[test]
fn quantum_determinant() {
    assert_eq!(parse_o("u11*u22 - q*u12*u21").unwrap(), OElement::one());
}

#[test]
fn x_of_calc10() {
    let calculi = builtin_calculi();
    let rec = find_calculus(&calculi, "calc10").unwrap();
    let x = parse_u("q^(-1/2)*F*K").unwrap();
    assert_eq!(rec.basis().unwrap()[1], x);
}

#[test]
fn closure_agrees_with_coproduct_legs() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..40 {
        let x = common::element(&mut rng);
        let a = closure(std::slice::from_ref(&x)).unwrap();
        let b = closure_via_coproduct(std::slice::from_ref(&x)).unwrap();
        assert!(a.same_as(&b), "{x}");
        assert!(is_right_coideal(&a));
    }
}

#[test]
fn lower_bound_below_closure() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let x = common::element(&mut rng);
        let dim = closure(std::slice::from_ref(&x)).unwrap().dim();
        assert!(dim_lower_bound(&x).unwrap() <= dim, "{x}");
    }
}

#[test]
fn fundamental_matches_pairing() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..40 {
        let x = common::element(&mut rng);
        let m = x.fundamental();
        for r in 0..2 {
            for c in 0..2 {
                assert_eq!(*m.get(r, c), pair(&x, &OElement::u(r, c)), "{x} at {r}{c}");
            }
        }
    }
}

#[test]
fn fundamental_is_multiplicative() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..40 {
        let x = common::element(&mut rng);
        let y = common::element(&mut rng);
        assert_eq!(x.mul(&y).fundamental(), x.fundamental().mul(&y.fundamental()));
    }
}
