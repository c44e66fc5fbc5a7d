//! Ideal extensions: translating a fuzzy subset by a fixed element.
//!
//! On the base structure the extension of `A` by `x` grades each `y` by the
//! best products `x _ y` can do: min of `mu_A` and max of `nu_A` over the
//! operators.  On an operator semigroup, where the product is binary, the
//! extension by a class `r` is plain precomposition with left translation.

use crate::fuzzy::{CarrierKind, Grade, IFSubset};
use crate::operator::Context;

/// Extension of a subset over the base structure by the element `x`.
pub fn extend(a: &IFSubset, x: usize, ctx: &Context) -> IFSubset {
    let s = ctx.s();
    assert_eq!(
        a.carrier(),
        ctx.carrier(CarrierKind::S),
        "subset not over S"
    );
    assert!(x < s.s_size());
    let mut mu = Vec::with_capacity(s.s_size());
    let mut nu = Vec::with_capacity(s.s_size());
    for y in s.elements() {
        let mut m = Grade::one();
        let mut n = Grade::zero();
        for g in s.operators() {
            let p = s.product(x, g, y);
            m = m.min(a.mu(p));
            n = n.max(a.nu(p));
        }
        mu.push(m);
        nu.push(n);
    }
    IFSubset::new(a.carrier(), mu, nu).expect("grades come from an admissible subset")
}

/// Extension of a subset over an operator semigroup by the class `r`.
pub fn extend_op(b: &IFSubset, r: usize, ctx: &Context) -> IFSubset {
    let kind = b.carrier().kind();
    let op = ctx.op(kind).expect("subset not over an operator semigroup");
    assert_eq!(
        b.carrier(),
        ctx.carrier(kind),
        "subset bound to a foreign context"
    );
    assert!(r < op.class_count());
    let mu = (0..op.class_count()).map(|q| b.mu(op.mul(r, q))).collect();
    let nu = (0..op.class_count()).map(|q| b.nu(op.mul(r, q))).collect();
    IFSubset::new(b.carrier(), mu, nu).expect("grades come from an admissible subset")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuzzy::{characteristic_pair, classify_fuzzy, includes, CrispSubset};
    use crate::samples;

    fn g(p: i64, q: i64) -> Grade {
        Grade::new(p, q).unwrap()
    }

    fn ctx(s: crate::semigroup::GammaSemigroup) -> Context {
        Context::new(s).unwrap()
    }

    #[test]
    fn constants_are_fixed_points() {
        let c = ctx(samples::left_zero());
        let a = IFSubset::constant(c.carrier(CarrierKind::S), g(1, 3), g(1, 2)).unwrap();
        for x in 0..2 {
            assert_eq!(extend(&a, x, &c), a);
        }
        let b = IFSubset::constant(c.carrier(CarrierKind::L), g(1, 3), g(1, 2)).unwrap();
        for r in 0..2 {
            assert_eq!(extend_op(&b, r, &c), b);
        }
    }

    #[test]
    fn extension_by_an_outside_element_fixes_a_prime_indicator() {
        let c = ctx(samples::i2());
        let m = characteristic_pair(&CrispSubset::new(c.carrier(CarrierKind::S), vec![0]).unwrap());
        // 1 * y = y, so translating by 1 changes nothing.
        assert_eq!(extend(&m, 1, &c), m);
        // 0 * y = 0 lands inside for every y, so the extension saturates.
        let widened = extend(&m, 0, &c);
        assert_eq!(widened.mu_grades(), &[Grade::one(), Grade::one()]);
        assert_eq!(widened.nu_grades(), &[Grade::zero(), Grade::zero()]);
    }

    #[test]
    fn quotient_extension_follows_the_cayley_table() {
        let c = ctx(samples::i2());
        let b = IFSubset::new(
            c.carrier(CarrierKind::R),
            vec![Grade::one(), g(1, 2)],
            vec![Grade::zero(), g(1, 4)],
        )
        .unwrap();
        // [g,1] is the identity class of R.
        assert_eq!(c.right().identity(), Some(1));
        assert_eq!(extend_op(&b, 1, &c), b);
        // [g,0] absorbs, so every grade becomes the grade at [g,0].
        let absorbed = extend_op(&b, 0, &c);
        assert_eq!(absorbed.mu_grades(), &[Grade::one(), Grade::one()]);
        assert_eq!(absorbed.nu_grades(), &[Grade::zero(), Grade::zero()]);
    }

    #[test]
    fn extensions_grow_fuzzy_ideals() {
        let c = ctx(samples::i2());
        let a = IFSubset::new(
            c.carrier(CarrierKind::S),
            vec![Grade::one(), g(1, 2)],
            vec![Grade::zero(), g(1, 4)],
        )
        .unwrap();
        assert!(classify_fuzzy(&a, &c).ideal);
        for x in 0..2 {
            assert!(includes(&a, &extend(&a, x, &c)).unwrap());
        }
    }
}
