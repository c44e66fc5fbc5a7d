//! Small named instances used throughout the tests and handy at the REPL.

use crate::semigroup::GammaSemigroup;

/// One element, one operator; the only structure of that size.
pub fn singleton() -> GammaSemigroup {
    GammaSemigroup::new(1, 1, vec![0], None).unwrap()
}

/// `S = {a, b}`, one operator, `x g y = x`.
///
/// Its left operator semigroup has two classes and no left unity; its right
/// operator semigroup collapses to one class and a right unity exists.
pub fn left_zero() -> GammaSemigroup {
    GammaSemigroup::new(2, 1, vec![0, 0, 1, 1], None)
        .unwrap()
        .with_labels(
            vec!["a".to_string(), "b".to_string()],
            vec!["g".to_string()],
        )
        .unwrap()
}

/// `S = {0, 1}`, one operator, `x g y = x * y mod 2`. Both unities exist:
/// `[1, g]` on the left and `[g, 1]` on the right.
pub fn i2() -> GammaSemigroup {
    GammaSemigroup::new(2, 1, vec![0, 0, 0, 1], None)
        .unwrap()
        .with_labels(
            vec!["0".to_string(), "1".to_string()],
            vec!["g".to_string()],
        )
        .unwrap()
}

/// Both-sided structure on `S = G = {0, 1}` where every product is the
/// mod-2 product of all letters: `x a y = x & a & y` and `a x b = a & x & b`.
pub fn mod2_full() -> GammaSemigroup {
    GammaSemigroup::new(
        2,
        2,
        vec![0, 0, 0, 0, 0, 0, 0, 1],
        Some(vec![0, 0, 0, 0, 0, 0, 0, 1]),
    )
    .unwrap()
}

/// One element, two operators, all element products 0, `a x b = b`.
///
/// The two left pairs act identically on `S`, so without the gamma table the
/// left quotient is trivial; the gamma condition separates them into two
/// classes forming a right-zero semigroup.
pub fn strong_rho() -> GammaSemigroup {
    GammaSemigroup::new(1, 2, vec![0, 0], Some(vec![0, 1, 0, 1])).unwrap()
}

/// Deliberately non-associative: `0 g 1 = 1`, every other product 0.
pub fn broken() -> GammaSemigroup {
    GammaSemigroup::new(2, 1, vec![0, 1, 0, 0], None).unwrap()
}
