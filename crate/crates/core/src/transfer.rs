//! The four grade-level transfer maps between the base structure and its
//! operator semigroups, plus their roundtrip compositions.
//!
//! Each map sends an intuitionistic fuzzy subset across carriers by taking an
//! exact minimum of membership grades (and maximum of non-membership grades)
//! over the finite index set the direction prescribes.  Values computed on a
//! quotient carrier are asserted independent of the chosen class member.

use crate::error::InputError;
use crate::fuzzy::{check_carriers, Grade, IFSubset};
use crate::operator::{Context, OperatorSemigroup, TransferMap};

fn min_max<I: Iterator<Item = (Grade, Grade)>>(grades: I) -> (Grade, Grade) {
    let mut mu = Grade::one();
    let mut nu = Grade::zero();
    for (m, n) in grades {
        mu = mu.min(m);
        nu = nu.max(n);
    }
    (mu, nu)
}

/// Grades of a class function evaluated through every member of a class must
/// agree; disagreement would mean the quotient itself is broken.
fn class_grades(
    op: &OperatorSemigroup,
    class: usize,
    eval: impl Fn(usize, usize) -> (Grade, Grade),
) -> (Grade, Grade) {
    let (f, s) = op.representative(class);
    let grades = eval(f, s);
    debug_assert!(
        op.class_members(class)
            .iter()
            .all(|&(a, b)| eval(a, b) == grades),
        "transfer grade depends on the class representative"
    );
    grades
}

/// Moves a fuzzy subset along one of the four transfer maps.
pub fn transfer_fuzzy(
    a: &IFSubset,
    map: TransferMap,
    ctx: &Context,
) -> Result<IFSubset, InputError> {
    check_carriers(a.carrier(), ctx.carrier(map.source()))?;
    let s = ctx.s();
    let target = ctx.carrier(map.target());
    let mut mu = Vec::with_capacity(target.size());
    let mut nu = Vec::with_capacity(target.size());
    match map {
        // mu(t) = min over operators of the grade at the class of (op, t).
        TransferMap::Star => {
            let r = ctx.right();
            for t in s.elements() {
                let (m, n) = min_max(
                    s.operators()
                        .map(|g| r.class_of_pair(g, t))
                        .map(|c| (a.mu(c), a.nu(c))),
                );
                mu.push(m);
                nu.push(n);
            }
        }
        // mu(t) = min over operators of the grade at the class of (t, op).
        TransferMap::Plus => {
            let l = ctx.left();
            for t in s.elements() {
                let (m, n) = min_max(
                    s.operators()
                        .map(|g| l.class_of_pair(t, g))
                        .map(|c| (a.mu(c), a.nu(c))),
                );
                mu.push(m);
                nu.push(n);
            }
        }
        // mu([op, x]) = min over elements u of the grade at u op x.
        TransferMap::StarPrime => {
            let r = ctx.right();
            for class in 0..r.class_count() {
                let (m, n) = class_grades(r, class, |g, x| {
                    min_max(s.elements().map(|u| {
                        let p = s.product(u, g, x);
                        (a.mu(p), a.nu(p))
                    }))
                });
                mu.push(m);
                nu.push(n);
            }
        }
        // mu([x, op]) = min over elements u of the grade at x op u.
        TransferMap::PlusPrime => {
            let l = ctx.left();
            for class in 0..l.class_count() {
                let (m, n) = class_grades(l, class, |x, g| {
                    min_max(s.elements().map(|u| {
                        let p = s.product(x, g, u);
                        (a.mu(p), a.nu(p))
                    }))
                });
                mu.push(m);
                nu.push(n);
            }
        }
    }
    IFSubset::new(target, mu, nu)
}

/// Applies `via`, then the map pointing back; the composition lands on the
/// carrier the subset started from.
pub fn roundtrip(a: &IFSubset, via: TransferMap, ctx: &Context) -> Result<IFSubset, InputError> {
    let back = match via {
        TransferMap::Star => TransferMap::StarPrime,
        TransferMap::StarPrime => TransferMap::Star,
        TransferMap::Plus => TransferMap::PlusPrime,
        TransferMap::PlusPrime => TransferMap::Plus,
    };
    transfer_fuzzy(&transfer_fuzzy(a, via, ctx)?, back, ctx)
}
