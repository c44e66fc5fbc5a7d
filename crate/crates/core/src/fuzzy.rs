//! Exact-rational membership grades, intuitionistic fuzzy subsets, and the
//! crisp/fuzzy ideal classifications used by every higher layer.
//!
//! Grades are rationals in `[0, 1]`; every comparison, infimum and supremum
//! in the toolkit is exact, so identities that hold mathematically hold
//! bit-for-bit here.  Subsets live over one of three carriers: the base
//! structure `S` or one of its operator semigroups `L` and `R`.

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::InputError;
use crate::operator::Context;

/// Which carrier a subset lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CarrierKind {
    /// The base structure's element set.
    S,
    /// Classes of the left operator semigroup.
    L,
    /// Classes of the right operator semigroup.
    R,
}

impl CarrierKind {
    pub fn name(self) -> &'static str {
        match self {
            CarrierKind::S => "S",
            CarrierKind::L => "L",
            CarrierKind::R => "R",
        }
    }

    pub fn parse(text: &str) -> Result<Self, InputError> {
        match text {
            "S" => Ok(CarrierKind::S),
            "L" => Ok(CarrierKind::L),
            "R" => Ok(CarrierKind::R),
            other => Err(InputError::Other(format!(
                "unknown carrier `{other}` (expected S, L or R)"
            ))),
        }
    }
}

impl std::fmt::Display for CarrierKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A carrier kind together with its size; subsets agree when both match.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CarrierId {
    kind: CarrierKind,
    size: usize,
}

impl CarrierId {
    pub fn new(kind: CarrierKind, size: usize) -> Self {
        CarrierId { kind, size }
    }

    pub fn kind(self) -> CarrierKind {
        self.kind
    }

    pub fn size(self) -> usize {
        self.size
    }
}

impl std::fmt::Display for CarrierId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}({})", self.kind, self.size)
    }
}

/// An exact membership grade: a rational in `[0, 1]`, kept in lowest terms.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Grade(Ratio<i64>);

impl Grade {
    pub fn new(numer: i64, denom: i64) -> Result<Self, InputError> {
        if denom == 0 {
            return Err(InputError::ZeroDenominator);
        }
        let r = Ratio::new(numer, denom);
        if r < Ratio::zero() || r > Ratio::one() {
            return Err(InputError::GradeRange {
                text: format!("{numer}/{denom}"),
            });
        }
        Ok(Grade(r))
    }

    pub fn zero() -> Self {
        Grade(Ratio::zero())
    }

    pub fn one() -> Self {
        Grade(Ratio::one())
    }

    /// Parses `p/q` or the integer shorthand `p`.
    pub fn parse(text: &str) -> Result<Self, InputError> {
        let bad = || InputError::GradeRange {
            text: text.to_string(),
        };
        match text.split_once('/') {
            Some((p, q)) => {
                let p: i64 = p.trim().parse().map_err(|_| bad())?;
                let q: i64 = q.trim().parse().map_err(|_| bad())?;
                Grade::new(p, q)
            }
            None => {
                let p: i64 = text.trim().parse().map_err(|_| bad())?;
                Grade::new(p, 1)
            }
        }
    }

    pub fn numer(self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(self) -> i64 {
        *self.0.denom()
    }

    /// `1 - self`; stays in range by the grade invariant.
    pub fn complement(self) -> Self {
        Grade(Ratio::one() - self.0)
    }

    /// True when `self + other <= 1`, the admissibility test for a pair.
    pub fn sums_within_one(self, other: Self) -> bool {
        self.0 + other.0 <= Ratio::one()
    }

    /// Exact midpoint, used to probe thresholds between occurring grades.
    pub fn midpoint(a: Self, b: Self) -> Self {
        Grade((a.0 + b.0) / 2)
    }
}

impl std::fmt::Display for Grade {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.denom() == &1 {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl std::fmt::Debug for Grade {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

/// A plain subset of a carrier, stored as a sorted list of indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CrispSubset {
    carrier: CarrierId,
    members: Vec<usize>,
}

impl CrispSubset {
    pub fn new(carrier: CarrierId, mut members: Vec<usize>) -> Result<Self, InputError> {
        members.sort_unstable();
        members.dedup();
        if let Some(&worst) = members.last() {
            if worst >= carrier.size() {
                return Err(InputError::IndexRange {
                    what: "subset member",
                    value: worst,
                    size: carrier.size(),
                });
            }
        }
        Ok(CrispSubset { carrier, members })
    }

    pub fn empty(carrier: CarrierId) -> Self {
        CrispSubset {
            carrier,
            members: Vec::new(),
        }
    }

    pub fn full(carrier: CarrierId) -> Self {
        CrispSubset {
            carrier,
            members: (0..carrier.size()).collect(),
        }
    }

    pub fn carrier(&self) -> CarrierId {
        self.carrier
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn intersection(&self, other: &CrispSubset) -> Result<CrispSubset, InputError> {
        check_carriers(self.carrier, other.carrier)?;
        let members = self
            .members
            .iter()
            .copied()
            .filter(|&x| other.contains(x))
            .collect();
        Ok(CrispSubset {
            carrier: self.carrier,
            members,
        })
    }
}

/// An intuitionistic fuzzy subset: membership and non-membership grades with
/// `mu(x) + nu(x) <= 1` everywhere.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IFSubset {
    carrier: CarrierId,
    mu: Vec<Grade>,
    nu: Vec<Grade>,
}

impl IFSubset {
    pub fn new(carrier: CarrierId, mu: Vec<Grade>, nu: Vec<Grade>) -> Result<Self, InputError> {
        if mu.len() != carrier.size() {
            return Err(InputError::TableSize {
                what: "membership grades",
                got: mu.len(),
                want: carrier.size(),
            });
        }
        if nu.len() != carrier.size() {
            return Err(InputError::TableSize {
                what: "non-membership grades",
                got: nu.len(),
                want: carrier.size(),
            });
        }
        for (x, (&m, &n)) in mu.iter().zip(nu.iter()).enumerate() {
            if !m.sums_within_one(n) {
                return Err(InputError::GradeSum { element: x });
            }
        }
        Ok(IFSubset { carrier, mu, nu })
    }

    pub fn constant(carrier: CarrierId, mu: Grade, nu: Grade) -> Result<Self, InputError> {
        IFSubset::new(carrier, vec![mu; carrier.size()], vec![nu; carrier.size()])
    }

    pub fn carrier(&self) -> CarrierId {
        self.carrier
    }

    pub fn len(&self) -> usize {
        self.carrier.size()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.size() == 0
    }

    pub fn mu(&self, x: usize) -> Grade {
        self.mu[x]
    }

    pub fn nu(&self, x: usize) -> Grade {
        self.nu[x]
    }

    pub fn mu_grades(&self) -> &[Grade] {
        &self.mu
    }

    pub fn nu_grades(&self) -> &[Grade] {
        &self.nu
    }

    /// Every grade value that occurs in the subset, plus 0 and 1, in
    /// increasing order; the only thresholds where level sets can change.
    pub fn occurring_thresholds(&self) -> Vec<Grade> {
        let mut ts = vec![Grade::zero(), Grade::one()];
        ts.extend_from_slice(&self.mu);
        ts.extend_from_slice(&self.nu);
        ts.sort_unstable();
        ts.dedup();
        ts
    }
}

/// Upper and lower level sets: `U = {x : mu(x) >= t}`, `L = {x : nu(x) <= t}`.
pub fn level_sets(a: &IFSubset, t: Grade) -> (CrispSubset, CrispSubset) {
    let upper = (0..a.len()).filter(|&x| a.mu(x) >= t).collect();
    let lower = (0..a.len()).filter(|&x| a.nu(x) <= t).collect();
    (
        CrispSubset {
            carrier: a.carrier(),
            members: upper,
        },
        CrispSubset {
            carrier: a.carrier(),
            members: lower,
        },
    )
}

/// The indicator pair of a crisp subset: `mu = 1` on it, `nu` its complement.
pub fn characteristic_pair(i: &CrispSubset) -> IFSubset {
    let mu: Vec<Grade> = (0..i.carrier().size())
        .map(|x| {
            if i.contains(x) {
                Grade::one()
            } else {
                Grade::zero()
            }
        })
        .collect();
    let nu = mu.iter().map(|&m| m.complement()).collect();
    IFSubset {
        carrier: i.carrier(),
        mu: mu.clone(),
        nu,
    }
}

/// Pointwise min of the `mu`s and max of the `nu`s of a nonempty family.
pub fn inf_family(family: &[IFSubset]) -> Result<IFSubset, InputError> {
    let first = family.first().ok_or(InputError::EmptyFamily)?;
    let carrier = first.carrier();
    let mut mu = first.mu.clone();
    let mut nu = first.nu.clone();
    for a in &family[1..] {
        check_carriers(a.carrier(), carrier)?;
        for x in 0..carrier.size() {
            mu[x] = mu[x].min(a.mu(x));
            nu[x] = nu[x].max(a.nu(x));
        }
    }
    Ok(IFSubset { carrier, mu, nu })
}

/// Fuzzy inclusion: `mu_A <= mu_B` and `nu_A >= nu_B` pointwise.
pub fn includes(a: &IFSubset, b: &IFSubset) -> Result<bool, InputError> {
    check_carriers(a.carrier(), b.carrier())?;
    Ok((0..a.len()).all(|x| a.mu(x) <= b.mu(x) && a.nu(x) >= b.nu(x)))
}

pub(crate) fn check_carriers(got: CarrierId, expected: CarrierId) -> Result<(), InputError> {
    if got != expected {
        return Err(InputError::CarrierMismatch {
            got: got.to_string(),
            expected: expected.to_string(),
        });
    }
    Ok(())
}

/// Uniform product access over the three carriers: the base structure uses
/// its operator-indexed ternary product, the quotients their binary one.
#[derive(Clone, Copy)]
pub(crate) enum CarrierHandle<'a> {
    Ternary(&'a crate::semigroup::GammaSemigroup),
    Binary(&'a crate::operator::OperatorSemigroup),
}

impl<'a> CarrierHandle<'a> {
    pub(crate) fn in_context(ctx: &'a Context, kind: CarrierKind) -> Self {
        match kind {
            CarrierKind::S => CarrierHandle::Ternary(ctx.s()),
            CarrierKind::L => CarrierHandle::Binary(ctx.left()),
            CarrierKind::R => CarrierHandle::Binary(ctx.right()),
        }
    }

    pub(crate) fn size(self) -> usize {
        match self {
            CarrierHandle::Ternary(s) => s.s_size(),
            CarrierHandle::Binary(q) => q.class_count(),
        }
    }

    /// How many products `x _ y` there are: one per operator, or just one.
    pub(crate) fn middle_count(self) -> usize {
        match self {
            CarrierHandle::Ternary(s) => s.g_size(),
            CarrierHandle::Binary(_) => 1,
        }
    }

    pub(crate) fn product(self, x: usize, middle: usize, y: usize) -> usize {
        match self {
            CarrierHandle::Ternary(s) => s.product(x, middle, y),
            CarrierHandle::Binary(q) => q.mul(x, y),
        }
    }
}

/// Crisp classification flags; `prime` and `semiprime` presuppose `ideal`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CrispClass {
    pub empty: bool,
    pub left_ideal: bool,
    pub right_ideal: bool,
    pub ideal: bool,
    /// Ideal where `x` and `y` multiplying into it under every operand
    /// forces one of them in.
    pub prime: bool,
    pub semiprime: bool,
}

/// Classifies a crisp subset over the carrier it names in `ctx`.
///
/// Panics if the subset's carrier does not match the context; bind subsets
/// to the context before classifying.
pub fn classify_crisp(p: &CrispSubset, ctx: &Context) -> CrispClass {
    let h = CarrierHandle::in_context(ctx, p.carrier().kind());
    assert_eq!(
        p.carrier().size(),
        h.size(),
        "subset bound to a foreign context"
    );
    let n = h.size();
    let m = h.middle_count();
    let all_products_in = |x: usize, y: usize| (0..m).all(|g| p.contains(h.product(x, g, y)));

    let left_ideal = (0..n).all(|s| {
        p.members()
            .iter()
            .all(|&q| (0..m).all(|g| p.contains(h.product(s, g, q))))
    });
    let right_ideal = (0..n).all(|s| {
        p.members()
            .iter()
            .all(|&q| (0..m).all(|g| p.contains(h.product(q, g, s))))
    });
    let ideal = left_ideal && right_ideal;
    let prime = ideal
        && (0..n).all(|x| (0..n).all(|y| !all_products_in(x, y) || p.contains(x) || p.contains(y)));
    let semiprime = ideal && (0..n).all(|x| !all_products_in(x, x) || p.contains(x));
    CrispClass {
        empty: p.is_empty(),
        left_ideal,
        right_ideal,
        ideal,
        prime,
        semiprime,
    }
}

/// Fuzzy classification flags; each later flag presupposes the earlier ones
/// noted in its docs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FuzzyClass {
    /// `mu(x_y) >= mu(y)` and `nu(x_y) <= nu(y)` for every product.
    pub left_ideal: bool,
    /// The mirror conditions in the left factor.
    pub right_ideal: bool,
    /// Both one-sided conditions.
    pub ideal: bool,
    /// Ideal whose grades split products exactly: `mu(x_y) = max`, `nu = min`.
    pub prime: bool,
    /// Ideal all of whose nonempty level sets are crisp-semiprime.
    pub semiprime: bool,
}

/// Classifies a fuzzy subset over the carrier it names in `ctx`.
///
/// Panics if the subset's carrier does not match the context.
pub fn classify_fuzzy(a: &IFSubset, ctx: &Context) -> FuzzyClass {
    let h = CarrierHandle::in_context(ctx, a.carrier().kind());
    assert_eq!(
        a.carrier().size(),
        h.size(),
        "subset bound to a foreign context"
    );
    let n = h.size();
    let m = h.middle_count();

    let mut left_ideal = true;
    let mut right_ideal = true;
    let mut pointwise_prime = true;
    for x in 0..n {
        for g in 0..m {
            for y in 0..n {
                let p = h.product(x, g, y);
                left_ideal &= a.mu(p) >= a.mu(y) && a.nu(p) <= a.nu(y);
                right_ideal &= a.mu(p) >= a.mu(x) && a.nu(p) <= a.nu(x);
                pointwise_prime &=
                    a.mu(p) == a.mu(x).max(a.mu(y)) && a.nu(p) == a.nu(x).min(a.nu(y));
            }
        }
    }
    let ideal = left_ideal && right_ideal;
    let prime = ideal && pointwise_prime;

    let semiprime = ideal
        && a.occurring_thresholds().iter().all(|&t| {
            let (u, l) = level_sets(a, t);
            (u.is_empty() || classify_crisp(&u, ctx).semiprime)
                && (l.is_empty() || classify_crisp(&l, ctx).semiprime)
        });

    FuzzyClass {
        left_ideal,
        right_ideal,
        ideal,
        prime,
        semiprime,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    fn g(p: i64, q: i64) -> Grade {
        Grade::new(p, q).unwrap()
    }

    fn ctx(s: crate::semigroup::GammaSemigroup) -> Context {
        Context::new(s).unwrap()
    }

    fn subset(c: CarrierId, mu: &[Grade], nu: &[Grade]) -> IFSubset {
        IFSubset::new(c, mu.to_vec(), nu.to_vec()).unwrap()
    }

    #[test]
    fn grades_reduce_and_print_canonically() {
        assert_eq!(g(2, 4), g(1, 2));
        assert_eq!(g(2, 4).to_string(), "1/2");
        assert_eq!(g(4, 4).to_string(), "1");
        assert_eq!(Grade::parse("3/4").unwrap(), g(3, 4));
        assert_eq!(Grade::parse("1").unwrap(), Grade::one());
        assert!(Grade::new(3, 2).is_err());
        assert!(Grade::new(-1, 2).is_err());
        assert!(Grade::new(1, 0).is_err());
        assert!(Grade::parse("x").is_err());
        assert_eq!(g(1, 4).complement(), g(3, 4));
        assert_eq!(Grade::midpoint(g(1, 2), g(3, 4)), g(5, 8));
    }

    #[test]
    fn grade_order_is_exact() {
        assert!(g(1, 3) < g(1, 2));
        assert!(g(2, 6) == g(1, 3));
        assert!(g(99, 100) < Grade::one());
    }

    #[test]
    fn subset_invariants_are_enforced() {
        let c = CarrierId::new(CarrierKind::S, 2);
        assert!(IFSubset::new(c, vec![Grade::one(); 2], vec![g(1, 4); 2]).is_err());
        assert!(IFSubset::new(c, vec![Grade::one()], vec![Grade::zero(); 2]).is_err());
        assert!(CrispSubset::new(c, vec![2]).is_err());
        let p = CrispSubset::new(c, vec![1, 0, 1]).unwrap();
        assert_eq!(p.members(), &[0, 1]);
    }

    #[test]
    fn level_sets_compare_exactly() {
        let c = CarrierId::new(CarrierKind::S, 2);
        let a = subset(c, &[Grade::one(), g(1, 2)], &[Grade::zero(), g(1, 4)]);
        let (u, _) = level_sets(&a, g(3, 4));
        assert_eq!(u.members(), &[0]);
        let (u, _) = level_sets(&a, g(1, 2));
        assert_eq!(u.members(), &[0, 1]);
        let (u, l) = level_sets(&a, Grade::zero());
        assert_eq!(u.members(), &[0, 1]);
        assert_eq!(l.members(), &[0]);
        let (_, l) = level_sets(&a, Grade::one());
        assert_eq!(l.members(), &[0, 1]);
    }

    #[test]
    fn thresholds_list_every_occurring_grade() {
        let c = CarrierId::new(CarrierKind::S, 2);
        let a = subset(c, &[g(1, 2), g(1, 3)], &[g(1, 4), g(1, 2)]);
        let ts = a.occurring_thresholds();
        assert_eq!(
            ts,
            vec![Grade::zero(), g(1, 4), g(1, 3), g(1, 2), Grade::one()]
        );
    }

    #[test]
    fn classify_crisp_on_the_worked_examples() {
        let c = ctx(samples::i2());
        let s = c.carrier(CarrierKind::S);
        let full = classify_crisp(&CrispSubset::full(s), &c);
        assert!(full.ideal && full.prime && full.semiprime && !full.empty);
        let zero = classify_crisp(&CrispSubset::new(s, vec![0]).unwrap(), &c);
        assert!(zero.ideal && zero.prime && zero.semiprime);

        let lz = ctx(samples::left_zero());
        let p = CrispSubset::new(lz.carrier(CarrierKind::S), vec![0]).unwrap();
        let flags = classify_crisp(&p, &lz);
        assert!(!flags.left_ideal);
        assert!(flags.right_ideal);

        let empty = classify_crisp(&CrispSubset::empty(s), &c);
        assert!(empty.empty && empty.ideal && empty.prime && empty.semiprime);
    }

    #[test]
    fn classify_crisp_on_a_quotient_carrier() {
        let c = ctx(samples::i2());
        // R multiplies mod 2, so {[g,0]} is a prime ideal there too.
        let i = CrispSubset::new(c.carrier(CarrierKind::R), vec![0]).unwrap();
        let flags = classify_crisp(&i, &c);
        assert!(flags.ideal && flags.prime && flags.semiprime);
    }

    #[test]
    fn classify_fuzzy_on_the_worked_examples() {
        let c = ctx(samples::i2());
        let s = c.carrier(CarrierKind::S);

        let constant = IFSubset::constant(s, g(1, 3), g(1, 3)).unwrap();
        let flags = classify_fuzzy(&constant, &c);
        assert!(flags.left_ideal && flags.right_ideal && flags.ideal);
        assert!(flags.prime && flags.semiprime);

        let a = subset(s, &[Grade::one(), g(1, 2)], &[Grade::zero(), g(1, 4)]);
        let flags = classify_fuzzy(&a, &c);
        assert!(flags.ideal && flags.prime && flags.semiprime);

        let lz = ctx(samples::left_zero());
        let b = subset(
            lz.carrier(CarrierKind::S),
            &[Grade::one(), Grade::zero()],
            &[Grade::zero(), Grade::zero()],
        );
        assert!(!classify_fuzzy(&b, &lz).left_ideal);
    }

    #[test]
    fn characteristic_pair_is_exactly_complementary() {
        let c = ctx(samples::i2());
        let s = c.carrier(CarrierKind::S);
        let m = characteristic_pair(&CrispSubset::new(s, vec![0]).unwrap());
        assert_eq!(m.mu_grades(), &[Grade::one(), Grade::zero()]);
        assert_eq!(m.nu_grades(), &[Grade::zero(), Grade::one()]);
        let none = characteristic_pair(&CrispSubset::empty(s));
        assert_eq!(none.mu_grades(), &[Grade::zero(), Grade::zero()]);
        let all = characteristic_pair(&CrispSubset::full(s));
        assert_eq!(all.nu_grades(), &[Grade::zero(), Grade::zero()]);
        for x in 0..2 {
            assert!(m.mu(x).sums_within_one(m.nu(x)));
            assert_eq!(m.mu(x).complement(), m.nu(x));
        }
    }

    #[test]
    fn inf_family_behaves_like_intersection() {
        let c = ctx(samples::i2());
        let s = c.carrier(CarrierKind::S);
        let a = subset(s, &[Grade::one(), g(1, 2)], &[Grade::zero(), g(1, 4)]);
        assert_eq!(inf_family(std::slice::from_ref(&a)).unwrap(), a);
        let top = IFSubset::constant(s, Grade::one(), Grade::zero()).unwrap();
        assert_eq!(inf_family(&[a.clone(), top]).unwrap(), a);

        let i = CrispSubset::new(s, vec![0]).unwrap();
        let j = CrispSubset::new(s, vec![1]).unwrap();
        let meet = inf_family(&[characteristic_pair(&i), characteristic_pair(&j)]).unwrap();
        assert_eq!(meet, characteristic_pair(&i.intersection(&j).unwrap()));

        assert!(matches!(inf_family(&[]), Err(InputError::EmptyFamily)));
        let wrong =
            IFSubset::constant(c.carrier(CarrierKind::R), Grade::one(), Grade::zero()).unwrap();
        assert!(inf_family(&[a, wrong]).is_err());
    }

    #[test]
    fn inclusion_is_a_pointwise_order() {
        let c = ctx(samples::i2());
        let s = c.carrier(CarrierKind::S);
        let a = subset(s, &[Grade::one(), g(1, 2)], &[Grade::zero(), g(1, 4)]);
        let b = subset(
            s,
            &[Grade::one(), Grade::one()],
            &[Grade::zero(), Grade::zero()],
        );
        assert!(includes(&a, &a).unwrap());
        assert!(includes(&a, &b).unwrap());
        assert!(!includes(&b, &a).unwrap());
        let bottom = characteristic_pair(&CrispSubset::empty(s));
        assert!(includes(&bottom, &a).unwrap());
        let wrong =
            IFSubset::constant(c.carrier(CarrierKind::L), Grade::one(), Grade::zero()).unwrap();
        assert!(includes(&a, &wrong).is_err());
    }

    /// The level-set and pointwise readings of fuzzy semiprimeness agree on
    /// an exhaustive small population.
    #[test]
    fn semiprime_readings_agree() {
        let lattice = [Grade::zero(), g(1, 2), Grade::one()];
        for s in [samples::i2(), samples::left_zero(), samples::mod2_full()] {
            let c = ctx(s);
            let carrier = c.carrier(CarrierKind::S);
            let mut pairs = Vec::new();
            for &m in &lattice {
                for &n in &lattice {
                    if m.sums_within_one(n) {
                        pairs.push((m, n));
                    }
                }
            }
            for &(m0, n0) in &pairs {
                for &(m1, n1) in &pairs {
                    let a = subset(carrier, &[m0, m1], &[n0, n1]);
                    let flags = classify_fuzzy(&a, &c);
                    let h = CarrierHandle::in_context(&c, CarrierKind::S);
                    let pointwise = flags.ideal
                        && (0..2).all(|x| {
                            let best_mu = (0..h.middle_count())
                                .map(|g| a.mu(h.product(x, g, x)))
                                .min()
                                .unwrap();
                            let worst_nu = (0..h.middle_count())
                                .map(|g| a.nu(h.product(x, g, x)))
                                .max()
                                .unwrap();
                            a.mu(x) >= best_mu && a.nu(x) <= worst_nu
                        });
                    assert_eq!(flags.semiprime, pointwise, "disagree on {a:?}");
                }
            }
        }
    }

    /// Level sets only change at occurring grade values.
    #[test]
    fn level_sets_are_constant_between_thresholds() {
        let c = CarrierId::new(CarrierKind::S, 3);
        let a = subset(
            c,
            &[g(1, 3), g(2, 3), Grade::one()],
            &[g(1, 2), g(1, 4), Grade::zero()],
        );
        let ts = a.occurring_thresholds();
        for w in ts.windows(2) {
            let mid = Grade::midpoint(w[0], w[1]);
            // Just above a threshold the upper set matches the next one.
            assert_eq!(level_sets(&a, mid).0, level_sets(&a, w[1]).0);
            // And the lower set matches the previous one.
            assert_eq!(level_sets(&a, mid).1, level_sets(&a, w[0]).1);
        }
    }
}
