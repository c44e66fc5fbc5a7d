//! Left and right operator semigroups of a ternary-product structure.
//!
//! The left operator semigroup `L` collapses element/operator pairs `(x, a)`
//! that act identically on every element from the right; the right operator
//! semigroup `R` does the same for `(a, x)` acting from the left.  When the
//! structure carries an operator-valued table the equivalence additionally
//! compares the operator-valued actions, so distinct classes may survive that
//! a purely element-valued comparison would merge.
//!
//! Classes are numbered by their least raw pair in lexicographic order, which
//! keeps every derived artifact (Cayley tables, transfer images, printed
//! class names) reproducible across runs.

use crate::error::InputError;
use crate::fuzzy::{CarrierId, CarrierKind, CrispSubset};
use crate::semigroup::GammaSemigroup;

/// Which operator semigroup a quotient was built on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }

    pub fn carrier_kind(self) -> CarrierKind {
        match self {
            Side::Left => CarrierKind::L,
            Side::Right => CarrierKind::R,
        }
    }
}

/// A quotient of raw pairs under the action equivalence, together with its
/// induced binary product.
///
/// Raw pairs are `(element, operator)` on the left side and
/// `(operator, element)` on the right side.  The flat raw index of a pair
/// `(first, second)` is `first * second_range + second`.
#[derive(Clone, Debug)]
pub struct OperatorSemigroup {
    side: Side,
    class_of: Vec<usize>,
    members: Vec<Vec<(usize, usize)>>,
    cayley: Vec<usize>,
    origin: GammaSemigroup,
}

impl OperatorSemigroup {
    /// Quotients the raw pairs of `origin` on the requested side.
    ///
    /// Fails only when the induced product is not constant on classes, which
    /// requires an operator-valued table that itself violates the mixed
    /// associativity laws.
    pub fn build(origin: &GammaSemigroup, side: Side) -> Result<Self, InputError> {
        let s = origin.s_size();
        let g = origin.g_size();
        let (first_range, second_range) = match side {
            Side::Left => (s, g),
            Side::Right => (g, s),
        };
        let raw_count = first_range * second_range;

        // Action signature of a raw pair: the element-valued action on every
        // element, extended by the operator-valued action when available.
        let signature = |first: usize, second: usize| -> Vec<usize> {
            let mut sig = Vec::with_capacity(s + if origin.has_gamma_table() { g } else { 0 });
            match side {
                Side::Left => {
                    let (x, a) = (first, second);
                    for t in 0..s {
                        sig.push(origin.product(x, a, t));
                    }
                    if origin.has_gamma_table() {
                        for c in 0..g {
                            sig.push(origin.gamma_product(c, x, a).unwrap());
                        }
                    }
                }
                Side::Right => {
                    let (a, x) = (first, second);
                    for t in 0..s {
                        sig.push(origin.product(t, a, x));
                    }
                    if origin.has_gamma_table() {
                        for c in 0..g {
                            sig.push(origin.gamma_product(a, x, c).unwrap());
                        }
                    }
                }
            }
            sig
        };

        let mut class_of = vec![usize::MAX; raw_count];
        let mut members: Vec<Vec<(usize, usize)>> = Vec::new();
        let mut seen: std::collections::HashMap<Vec<usize>, usize> =
            std::collections::HashMap::new();
        for first in 0..first_range {
            for second in 0..second_range {
                let sig = signature(first, second);
                let class = *seen.entry(sig).or_insert_with(|| {
                    members.push(Vec::new());
                    members.len() - 1
                });
                class_of[first * second_range + second] = class;
                members[class].push((first, second));
            }
        }

        let class_count = members.len();
        let raw_product = |p: (usize, usize), q: (usize, usize)| -> (usize, usize) {
            match side {
                // [x,a][y,b] = [xay, b]
                Side::Left => (origin.product(p.0, p.1, q.0), q.1),
                // [a,x][b,y] = [a, xby]
                Side::Right => (p.0, origin.product(p.1, q.0, q.1)),
            }
        };
        let class_at = |pair: (usize, usize)| class_of[pair.0 * second_range + pair.1];

        let mut cayley = vec![0usize; class_count * class_count];
        for c1 in 0..class_count {
            for c2 in 0..class_count {
                let expected = class_at(raw_product(members[c1][0], members[c2][0]));
                cayley[c1 * class_count + c2] = expected;
                for &p in &members[c1] {
                    for &q in &members[c2] {
                        if class_at(raw_product(p, q)) != expected {
                            let (p_alt, q_wit) =
                                if class_at(raw_product(p, members[c2][0])) != expected {
                                    (members[c1][0], members[c2][0])
                                } else {
                                    (members[c2][0], p)
                                };
                            return Err(InputError::QuotientIllDefined {
                                side: side.name(),
                                p: if p_alt == members[c1][0] { p } else { q },
                                p_alt,
                                q: q_wit,
                            });
                        }
                    }
                }
            }
        }

        Ok(OperatorSemigroup {
            side,
            class_of,
            members,
            cayley,
            origin: origin.clone(),
        })
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn class_count(&self) -> usize {
        self.members.len()
    }

    pub fn carrier(&self) -> CarrierId {
        CarrierId::new(self.side.carrier_kind(), self.class_count())
    }

    /// Class of the raw pair `(first, second)`; pair order matches the side.
    pub fn class_of_pair(&self, first: usize, second: usize) -> usize {
        let second_range = match self.side {
            Side::Left => self.origin.g_size(),
            Side::Right => self.origin.s_size(),
        };
        self.class_of[first * second_range + second]
    }

    /// Lexicographically least raw pair of the class.
    pub fn representative(&self, class: usize) -> (usize, usize) {
        self.members[class][0]
    }

    /// All raw pairs of the class, in lexicographic order.
    pub fn class_members(&self, class: usize) -> &[(usize, usize)] {
        &self.members[class]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < self.class_count() && b < self.class_count());
        self.cayley[a * self.class_count() + b]
    }

    /// Two-sided identity class, if one exists.
    pub fn identity(&self) -> Option<usize> {
        (0..self.class_count())
            .find(|&e| (0..self.class_count()).all(|q| self.mul(e, q) == q && self.mul(q, e) == q))
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.class_count();
        (0..n).all(|a| (a + 1..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn origin(&self) -> &GammaSemigroup {
        &self.origin
    }

    /// Printable name of a class: `[r0,r1]#k` with `(r0, r1)` its least pair.
    pub fn class_display(&self, class: usize) -> String {
        let (r0, r1) = self.representative(class);
        let (a, b) = match self.side {
            Side::Left => (self.origin.s_label(r0), self.origin.g_label(r1)),
            Side::Right => (self.origin.g_label(r0), self.origin.s_label(r1)),
        };
        format!("[{a},{b}]#{class}")
    }
}

/// Unity classes of the two operator semigroups, when they exist.
///
/// `left` is a class `[e, d]` of `L` whose action fixes every element;
/// `right` is a class `[c, f]` of `R` doing the same from the right.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Unities {
    pub left: Option<usize>,
    pub right: Option<usize>,
}

impl Unities {
    pub fn both(&self) -> bool {
        self.left.is_some() && self.right.is_some()
    }
}

/// Scans for unity classes, preferring the lexicographically first witness
/// pair on each side.
pub fn find_unities(
    s: &GammaSemigroup,
    left: &OperatorSemigroup,
    right: &OperatorSemigroup,
) -> Unities {
    Unities {
        left: s.left_unity_pair().map(|(e, d)| left.class_of_pair(e, d)),
        right: s.right_unity_pair().map(|(c, f)| right.class_of_pair(c, f)),
    }
}

/// A validated structure bundled with both operator semigroups and their
/// unity classes; the working unit for every transfer and verification call.
#[derive(Clone, Debug)]
pub struct Context {
    s: GammaSemigroup,
    left: OperatorSemigroup,
    right: OperatorSemigroup,
    unities: Unities,
}

impl Context {
    pub fn new(s: GammaSemigroup) -> Result<Self, InputError> {
        let left = OperatorSemigroup::build(&s, Side::Left)?;
        let right = OperatorSemigroup::build(&s, Side::Right)?;
        let unities = find_unities(&s, &left, &right);
        Ok(Context {
            s,
            left,
            right,
            unities,
        })
    }

    pub fn s(&self) -> &GammaSemigroup {
        &self.s
    }

    pub fn left(&self) -> &OperatorSemigroup {
        &self.left
    }

    pub fn right(&self) -> &OperatorSemigroup {
        &self.right
    }

    pub fn unities(&self) -> Unities {
        self.unities
    }

    pub fn op(&self, kind: CarrierKind) -> Option<&OperatorSemigroup> {
        match kind {
            CarrierKind::S => None,
            CarrierKind::L => Some(&self.left),
            CarrierKind::R => Some(&self.right),
        }
    }

    pub fn carrier(&self, kind: CarrierKind) -> CarrierId {
        let size = match kind {
            CarrierKind::S => self.s.s_size(),
            CarrierKind::L => self.left.class_count(),
            CarrierKind::R => self.right.class_count(),
        };
        CarrierId::new(kind, size)
    }
}

/// The four set-level transfer maps between the base structure and its
/// operator semigroups.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransferMap {
    /// `R -> S`: elements all of whose right pairs land in the input.
    Star,
    /// `S -> R`: right-pair classes whose action lands in the input.
    StarPrime,
    /// `L -> S`: elements all of whose left pairs land in the input.
    Plus,
    /// `S -> L`: left-pair classes whose action lands in the input.
    PlusPrime,
}

impl TransferMap {
    pub fn source(self) -> CarrierKind {
        match self {
            TransferMap::Star => CarrierKind::R,
            TransferMap::Plus => CarrierKind::L,
            TransferMap::StarPrime | TransferMap::PlusPrime => CarrierKind::S,
        }
    }

    pub fn target(self) -> CarrierKind {
        match self {
            TransferMap::Star | TransferMap::Plus => CarrierKind::S,
            TransferMap::StarPrime => CarrierKind::R,
            TransferMap::PlusPrime => CarrierKind::L,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TransferMap::Star => "star",
            TransferMap::StarPrime => "star-prime",
            TransferMap::Plus => "plus",
            TransferMap::PlusPrime => "plus-prime",
        }
    }

    pub fn parse(text: &str) -> Result<Self, InputError> {
        match text {
            "star" => Ok(TransferMap::Star),
            "star-prime" => Ok(TransferMap::StarPrime),
            "plus" => Ok(TransferMap::Plus),
            "plus-prime" => Ok(TransferMap::PlusPrime),
            other => Err(InputError::Other(format!(
                "unknown transfer map `{other}` (expected star, star-prime, plus, plus-prime)"
            ))),
        }
    }
}

/// Moves a crisp subset along one of the four transfer maps.
///
/// Class membership on a quotient carrier is decided by the class
/// representative and asserted constant across all members of the class.
pub fn transfer_crisp(
    x: &CrispSubset,
    map: TransferMap,
    ctx: &Context,
) -> Result<CrispSubset, InputError> {
    let expected = ctx.carrier(map.source());
    if x.carrier() != expected {
        return Err(InputError::CarrierMismatch {
            got: x.carrier().to_string(),
            expected: expected.to_string(),
        });
    }
    let s = ctx.s();
    let members = match map {
        TransferMap::Star => (0..s.s_size())
            .filter(|&t| (0..s.g_size()).all(|a| x.contains(ctx.right().class_of_pair(a, t))))
            .collect(),
        TransferMap::Plus => (0..s.s_size())
            .filter(|&t| (0..s.g_size()).all(|a| x.contains(ctx.left().class_of_pair(t, a))))
            .collect(),
        TransferMap::StarPrime => {
            let r = ctx.right();
            (0..r.class_count())
                .filter(|&class| {
                    let held = |&(a, t): &(usize, usize)| {
                        (0..s.s_size()).all(|u| x.contains(s.product(u, a, t)))
                    };
                    let verdict = held(&r.class_members(class)[0]);
                    // The action of every member is identical, so membership
                    // cannot depend on the representative.
                    debug_assert!(r.class_members(class).iter().all(|p| held(p) == verdict));
                    verdict
                })
                .collect()
        }
        TransferMap::PlusPrime => {
            let l = ctx.left();
            (0..l.class_count())
                .filter(|&class| {
                    let held = |&(t, a): &(usize, usize)| {
                        (0..s.s_size()).all(|u| x.contains(s.product(t, a, u)))
                    };
                    let verdict = held(&l.class_members(class)[0]);
                    debug_assert!(l.class_members(class).iter().all(|p| held(p) == verdict));
                    verdict
                })
                .collect()
        }
    };
    CrispSubset::new(ctx.carrier(map.target()), members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    fn ctx(s: GammaSemigroup) -> Context {
        Context::new(s).unwrap()
    }

    #[test]
    fn left_zero_quotients() {
        let c = ctx(samples::left_zero());
        // xay = x: the left action of (x, a) is constantly x, so the two
        // elements stay separated; every right action is the identity map.
        assert_eq!(c.left().class_count(), 2);
        assert_eq!(c.right().class_count(), 1);
        assert_eq!(c.left().representative(0), (0, 0));
        assert_eq!(c.left().representative(1), (1, 0));
        // L is itself left-zero.
        for a in 0..2 {
            for b in 0..2 {
                assert_eq!(c.left().mul(a, b), a);
            }
        }
        assert_eq!(c.unities().left, None);
        assert_eq!(c.unities().right, Some(0));
    }

    #[test]
    fn mod_two_quotients() {
        let c = ctx(samples::i2());
        assert_eq!(c.left().class_count(), 2);
        assert_eq!(c.right().class_count(), 2);
        // Both quotients multiply like residues mod 2.
        for q in [c.left(), c.right()] {
            for a in 0..2 {
                for b in 0..2 {
                    assert_eq!(q.mul(a, b), a * b);
                }
            }
        }
        // Unity witnesses: (1, g) on the left, (g, 1) on the right.
        assert_eq!(c.left().representative(c.unities().left.unwrap()), (1, 0));
        assert_eq!(c.right().representative(c.unities().right.unwrap()), (0, 1));
        assert_eq!(c.left().identity(), c.unities().left);
    }

    #[test]
    fn singleton_has_both_unities() {
        let c = ctx(samples::singleton());
        assert_eq!(c.left().class_count(), 1);
        assert_eq!(c.right().class_count(), 1);
        assert!(c.unities().both());
    }

    #[test]
    fn operator_table_splits_classes() {
        let s = samples::strong_rho();
        let weak = Context::new(
            GammaSemigroup::new(s.s_size(), s.g_size(), s.raw_table().to_vec(), None).unwrap(),
        )
        .unwrap();
        let strong = ctx(s);
        // Without the operator-valued table both left pairs act alike; the
        // table distinguishes them.
        assert_eq!(weak.left().class_count(), 1);
        assert_eq!(strong.left().class_count(), 2);
        // The split quotient multiplies right-zero: [x,a][y,b] = [xay, b]
        // and the class is decided by the operator component alone.
        for a in 0..2 {
            for b in 0..2 {
                assert_eq!(strong.left().mul(a, b), b);
            }
        }
    }

    #[test]
    fn exotic_operator_table_breaks_the_quotient() {
        // Element product constant zero; operator-valued action chosen so two
        // pairs are equivalent yet produce distinct product classes.  Such a
        // table cannot satisfy the mixed word laws, so it only arises from
        // unvalidated input.
        let s = GammaSemigroup::new(2, 2, vec![0; 8], Some(vec![0, 1, 0, 0, 0, 1, 0, 0])).unwrap();
        assert!(!s.validate().is_valid());
        let err = OperatorSemigroup::build(&s, Side::Left).unwrap_err();
        assert!(matches!(
            err,
            InputError::QuotientIllDefined { side: "left", .. }
        ));
    }

    #[test]
    fn class_display_uses_labels() {
        let c = ctx(samples::i2());
        assert_eq!(c.left().class_display(0), "[0,g]#0");
        assert_eq!(c.right().class_display(1), "[g,1]#1");
    }

    #[test]
    fn crisp_transfer_on_the_worked_examples() {
        let c = ctx(samples::i2());
        let r = c.carrier(CarrierKind::R);
        let s = c.carrier(CarrierKind::S);
        // I = {[g,0]} pulls back to the elements annihilated from every side.
        let i = CrispSubset::new(r, vec![0]).unwrap();
        let star = transfer_crisp(&i, TransferMap::Star, &c).unwrap();
        assert_eq!(star.members(), &[0]);
        // P = {0} pushes forward to the classes that always land in P.
        let p = CrispSubset::new(s, vec![0]).unwrap();
        let prime = transfer_crisp(&p, TransferMap::StarPrime, &c).unwrap();
        assert_eq!(prime.members(), &[0]);

        let lz = ctx(samples::left_zero());
        // Left-zero: sa0 = s, so only the full subset pulls back fully.
        let j = CrispSubset::new(lz.carrier(CarrierKind::L), vec![0]).unwrap();
        let plus = transfer_crisp(&j, TransferMap::Plus, &lz).unwrap();
        assert_eq!(plus.members(), &[0]);
        let q = CrispSubset::new(lz.carrier(CarrierKind::S), vec![0]).unwrap();
        let plus_prime = transfer_crisp(&q, TransferMap::PlusPrime, &lz).unwrap();
        assert_eq!(plus_prime.members(), &[0]);
    }

    #[test]
    fn transfer_rejects_a_wrong_carrier() {
        let c = ctx(samples::i2());
        let wrong = CrispSubset::new(c.carrier(CarrierKind::S), vec![0]).unwrap();
        let err = transfer_crisp(&wrong, TransferMap::Star, &c).unwrap_err();
        assert!(matches!(err, InputError::CarrierMismatch { .. }));
    }

    #[test]
    fn transfer_map_names_round_trip() {
        for m in [
            TransferMap::Star,
            TransferMap::StarPrime,
            TransferMap::Plus,
            TransferMap::PlusPrime,
        ] {
            assert_eq!(TransferMap::parse(m.name()).unwrap(), m);
        }
        assert!(TransferMap::parse("sideways").is_err());
    }
}
