#![allow(dead_code)]

use qtangent::scalar::Scalar;
use qtangent::uq::{UElement, UMonomial};
use qtangent::GroupLabel;
use rand::Rng;

pub fn coefficient<R: Rng>(rng: &mut R) -> Scalar {
    match rng.gen_range(0..6) {
        0 => Scalar::from_int(rng.gen_range(-3..=3)),
        1 => Scalar::from_ratio(rng.gen_range(-3..=3), rng.gen_range(1..=4)),
        2 => Scalar::i(),
        3 => Scalar::s_pow(rng.gen_range(-2..=2)),
        4 => &Scalar::one() + &Scalar::q(),
        _ => &Scalar::from_int(2) * &Scalar::s_pow(-1),
    }
}

pub fn monomial<R: Rng>(rng: &mut R) -> UMonomial {
    UMonomial::new(
        rng.gen_range(0..=2),
        GroupLabel::new(rng.gen_range(0..4), rng.gen_range(-2..=2)),
        rng.gen_range(0..=2),
        rng.gen_range(0..=1),
    )
}

/// One to three terms of low degree, never zero.
pub fn element<R: Rng>(rng: &mut R) -> UElement {
    loop {
        let n = rng.gen_range(1..=3);
        let x = UElement::from_terms((0..n).map(|_| (monomial(rng), coefficient(rng))));
        if !x.is_zero() {
            return x;
        }
    }
}
