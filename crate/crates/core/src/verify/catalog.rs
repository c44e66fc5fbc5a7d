//! The claim catalog: every identity and preservation law the library's
//! operations are expected to satisfy, as executable entries.
//!
//! Entries are grouped by shape and share evaluation helpers: flavor
//! preservation along a transfer map, level-set commutation, round trips,
//! characteristic-pair commutation, and the extension laws.  Ids are stable
//! strings; callers select entries by id and reports key on them.

use crate::extension::{extend, extend_op};
use crate::fuzzy::{
    characteristic_pair, classify_crisp, classify_fuzzy, includes, inf_family, level_sets,
    CarrierKind, CrispClass, CrispSubset, FuzzyClass, Grade, IFSubset,
};
use crate::operator::{transfer_crisp, Context, TransferMap};
use crate::transfer::{roundtrip, transfer_fuzzy};

use super::instance::InstanceData;
use super::subsets::{index_families, index_pairs};
use super::{fmt_crisp, part_crisp, part_fuzzy, CaseSink, Hypothesis, WitnessKind, WitnessPart};

/// One verifiable claim with a stable id.
pub struct CheckEntry {
    pub id: &'static str,
    /// What the claim says, in one sentence fragment.
    pub title: &'static str,
    pub hypothesis: Hypothesis,
    pub witnesses: WitnessKind,
    pub run: fn(&InstanceData, &mut CaseSink),
}

/// Every catalog entry, in report order.
pub fn catalog() -> &'static [CheckEntry] {
    CATALOG
}

// Salts separating a check's own witness draws from the population draws.
const PAIR_SALT: u64 = 0x70;
const FAMILY_SALT: u64 = 0x71;

const CARRIER_OK: &str = "population subsets share the context's carriers";

type CrispFlavor = (&'static str, fn(&CrispClass) -> bool);
type FuzzyFlavor = (&'static str, fn(&FuzzyClass) -> bool);

fn c_left(c: &CrispClass) -> bool {
    c.left_ideal
}
fn c_right(c: &CrispClass) -> bool {
    c.right_ideal
}
fn c_ideal(c: &CrispClass) -> bool {
    c.ideal
}
fn c_prime(c: &CrispClass) -> bool {
    c.prime
}
fn c_semiprime(c: &CrispClass) -> bool {
    c.semiprime
}
fn f_left(c: &FuzzyClass) -> bool {
    c.left_ideal
}
fn f_right(c: &FuzzyClass) -> bool {
    c.right_ideal
}
fn f_ideal(c: &FuzzyClass) -> bool {
    c.ideal
}
fn f_prime(c: &FuzzyClass) -> bool {
    c.prime
}
fn f_semiprime(c: &FuzzyClass) -> bool {
    c.semiprime
}

const CRISP_LEFT_KINDS: &[CrispFlavor] = &[("left ideal", c_left), ("ideal", c_ideal)];
const CRISP_RIGHT_KINDS: &[CrispFlavor] = &[("right ideal", c_right), ("ideal", c_ideal)];
const CRISP_PRIME_KINDS: &[CrispFlavor] =
    &[("prime ideal", c_prime), ("semiprime ideal", c_semiprime)];
const FUZZY_LEFT_KINDS: &[FuzzyFlavor] = &[("fuzzy left ideal", f_left), ("fuzzy ideal", f_ideal)];
const FUZZY_RIGHT_KINDS: &[FuzzyFlavor] =
    &[("fuzzy right ideal", f_right), ("fuzzy ideal", f_ideal)];
const FUZZY_PRIME_KINDS: &[FuzzyFlavor] = &[
    ("fuzzy prime ideal", f_prime),
    ("fuzzy semiprime ideal", f_semiprime),
];
const FUZZY_PRIME_ONLY: &[FuzzyFlavor] = &[("fuzzy prime ideal", f_prime)];
const FUZZY_SEMIPRIME_ONLY: &[FuzzyFlavor] = &[("fuzzy semiprime ideal", f_semiprime)];
const FUZZY_ALL_KINDS: &[FuzzyFlavor] = &[
    ("fuzzy left ideal", f_left),
    ("fuzzy right ideal", f_right),
    ("fuzzy ideal", f_ideal),
];

/// Nonempty crisp subsets of the map's source holding any listed flavor map
/// to subsets holding the same flavor.
fn crisp_preservation(
    inst: &InstanceData,
    sink: &mut CaseSink,
    map: TransferMap,
    flavors: &[CrispFlavor],
) {
    let pop = &inst.crisp(map.source()).items;
    let flags = inst.crisp_flags(map.source());
    for (i, p) in pop.iter().enumerate() {
        if !flavors.iter().any(|(_, f)| f(&flags[i])) {
            continue;
        }
        if p.is_empty() {
            sink.skip("empty subset");
            continue;
        }
        let image = transfer_crisp(p, map, inst.ctx()).expect(CARRIER_OK);
        let image_flags = classify_crisp(&image, inst.ctx());
        for (name, f) in flavors {
            if f(&flags[i]) {
                sink.case(f(&image_flags), || {
                    (
                        vec![part_crisp("subset", p), part_crisp("image", &image)],
                        format!(
                            "{} image of the {name} {} is {}, which is not a {name}",
                            map.name(),
                            fmt_crisp(p),
                            fmt_crisp(&image)
                        ),
                    )
                });
            }
        }
    }
}

/// Level sets of the transferred subset are the transfers of the level
/// sets, at every occurring threshold.
fn level_commutation(inst: &InstanceData, sink: &mut CaseSink, map: TransferMap) {
    let ctx = inst.ctx();
    for a in &inst.fuzzy(map.source()).items {
        let image = transfer_fuzzy(a, map, ctx).expect(CARRIER_OK);
        for t in a.occurring_thresholds() {
            let (upper, lower) = level_sets(a, t);
            let (image_upper, image_lower) = level_sets(&image, t);
            let sides = [
                ("upper", &upper, &image_upper),
                ("lower", &lower, &image_lower),
            ];
            for (side, set, image_set) in sides {
                if set.is_empty() {
                    sink.skip("empty level set");
                    continue;
                }
                let moved = transfer_crisp(set, map, ctx).expect(CARRIER_OK);
                sink.case(moved == *image_set, || {
                    (
                        vec![part_fuzzy("subset", a), part_fuzzy("image", &image)],
                        format!(
                            "{side} level set at {t}: {} transfers to {}, but the image's is {}",
                            fmt_crisp(set),
                            fmt_crisp(&moved),
                            fmt_crisp(image_set)
                        ),
                    )
                });
            }
        }
    }
}

/// Fuzzy subsets of the map's source holding any listed flavor map to
/// subsets holding the same flavor.
fn fuzzy_preservation(
    inst: &InstanceData,
    sink: &mut CaseSink,
    map: TransferMap,
    flavors: &[FuzzyFlavor],
) {
    let pop = &inst.fuzzy(map.source()).items;
    let flags = inst.fuzzy_flags(map.source());
    for (i, a) in pop.iter().enumerate() {
        if !flavors.iter().any(|(_, f)| f(&flags[i])) {
            continue;
        }
        let image = transfer_fuzzy(a, map, inst.ctx()).expect(CARRIER_OK);
        let image_flags = classify_fuzzy(&image, inst.ctx());
        for (name, f) in flavors {
            if f(&flags[i]) {
                sink.case(f(&image_flags), || {
                    (
                        vec![part_fuzzy("subset", a), part_fuzzy("image", &image)],
                        format!("{} image of a {name} is not a {name}", map.name()),
                    )
                });
            }
        }
    }
}

/// First occurring threshold of `a` with a nonempty level set that is not
/// a crisp prime ideal, if any.
fn first_nonprime_level(a: &IFSubset, ctx: &Context) -> Option<Grade> {
    for t in a.occurring_thresholds() {
        let (upper, lower) = level_sets(a, t);
        for set in [&upper, &lower] {
            if !set.is_empty() && !classify_crisp(set, ctx).prime {
                return Some(t);
            }
        }
    }
    None
}

/// Fuzzy prime ideals of an operator semigroup map into the base as fuzzy
/// ideals whose nonempty level sets are all crisp prime; fuzzy semiprime
/// ideals map to fuzzy semiprime ideals.  With several operators the
/// pointwise prime identity can fail on the base even though every level
/// set stays prime, so the image's pointwise prime flag is asserted only
/// on single-operator instances, where the two readings coincide.
fn fuzzy_prime_into_base(inst: &InstanceData, sink: &mut CaseSink, map: TransferMap) {
    let ctx = inst.ctx();
    let pop = &inst.fuzzy(map.source()).items;
    let flags = inst.fuzzy_flags(map.source());
    let single_operator = ctx.s().g_size() == 1;
    for (i, a) in pop.iter().enumerate() {
        if !(flags[i].prime || flags[i].semiprime) {
            continue;
        }
        let image = transfer_fuzzy(a, map, ctx).expect(CARRIER_OK);
        let image_flags = classify_fuzzy(&image, ctx);
        if flags[i].prime {
            let bad_level = first_nonprime_level(&image, ctx);
            sink.case(image_flags.ideal && bad_level.is_none(), || {
                let detail = match bad_level {
                    Some(t) => format!(
                        "{} image of a fuzzy prime ideal has a level set at {t} that is not a prime ideal",
                        map.name()
                    ),
                    None => format!(
                        "{} image of a fuzzy prime ideal is not a fuzzy ideal",
                        map.name()
                    ),
                };
                (
                    vec![part_fuzzy("subset", a), part_fuzzy("image", &image)],
                    detail,
                )
            });
            if single_operator {
                sink.case(image_flags.prime, || {
                    (
                        vec![part_fuzzy("subset", a), part_fuzzy("image", &image)],
                        format!(
                            "{} image of a fuzzy prime ideal is not a fuzzy prime ideal",
                            map.name()
                        ),
                    )
                });
            }
        }
        if flags[i].semiprime {
            sink.case(image_flags.semiprime, || {
                (
                    vec![part_fuzzy("subset", a), part_fuzzy("image", &image)],
                    format!(
                        "{} image of a fuzzy semiprime ideal is not a fuzzy semiprime ideal",
                        map.name()
                    ),
                )
            });
        }
    }
}

/// `via_s` (out of the base) and `via_x` (back into it) are mutually
/// inverse on the listed fuzzy flavors and preserve inclusion between
/// qualifying subsets.  Flavors listed in `out_flavors` are additionally
/// asserted of the outbound image; callers narrow that list on instances
/// where a flavor provably does not survive the outbound map.
fn fuzzy_roundtrip(
    inst: &InstanceData,
    sink: &mut CaseSink,
    via_s: TransferMap,
    via_x: TransferMap,
    flavors: &[FuzzyFlavor],
    out_flavors: &[FuzzyFlavor],
) {
    let ctx = inst.ctx();
    let s_pop = &inst.fuzzy(CarrierKind::S).items;
    let s_flags = inst.fuzzy_flags(CarrierKind::S);
    let qualifying: Vec<usize> = (0..s_pop.len())
        .filter(|&i| flavors.iter().any(|(_, f)| f(&s_flags[i])))
        .collect();
    let mut images: Vec<Option<IFSubset>> = vec![None; s_pop.len()];
    for &i in &qualifying {
        let a = &s_pop[i];
        let image = transfer_fuzzy(a, via_s, ctx).expect(CARRIER_OK);
        let image_flags = classify_fuzzy(&image, ctx);
        let back = transfer_fuzzy(&image, via_x, ctx).expect(CARRIER_OK);
        sink.case(back == *a, || {
            (
                vec![part_fuzzy("subset", a), part_fuzzy("round trip", &back)],
                format!("{} then {} changed the subset", via_s.name(), via_x.name()),
            )
        });
        for (name, f) in out_flavors {
            if f(&s_flags[i]) {
                sink.case(f(&image_flags), || {
                    (
                        vec![part_fuzzy("subset", a), part_fuzzy("image", &image)],
                        format!(
                            "{} image of a {name} is not a {name} of the operator semigroup",
                            via_s.name()
                        ),
                    )
                });
            }
        }
        images[i] = Some(image);
    }
    let x_pop = &inst.fuzzy(via_x.source()).items;
    let x_flags = inst.fuzzy_flags(via_x.source());
    for (i, b) in x_pop.iter().enumerate() {
        if !flavors.iter().any(|(_, f)| f(&x_flags[i])) {
            continue;
        }
        let image = transfer_fuzzy(b, via_x, ctx).expect(CARRIER_OK);
        let back = transfer_fuzzy(&image, via_s, ctx).expect(CARRIER_OK);
        sink.case(back == *b, || {
            (
                vec![part_fuzzy("subset", b), part_fuzzy("round trip", &back)],
                format!("{} then {} changed the subset", via_x.name(), via_s.name()),
            )
        });
    }
    let pairs = index_pairs(
        &qualifying,
        inst.params().pair_cap,
        inst.rng(sink.salt() ^ PAIR_SALT),
    );
    for (i, j) in pairs.items {
        let a = &s_pop[i];
        let b = &s_pop[j];
        if !includes(a, b).expect(CARRIER_OK) {
            continue;
        }
        let a_image = images[i].as_ref().expect("qualifying images are cached");
        let b_image = images[j].as_ref().expect("qualifying images are cached");
        sink.case(includes(a_image, b_image).expect(CARRIER_OK), || {
            (
                vec![
                    part_fuzzy("smaller subset", a),
                    part_fuzzy("larger subset", b),
                    part_fuzzy("smaller image", a_image),
                    part_fuzzy("larger image", b_image),
                ],
                format!("inclusion is not preserved by {}", via_s.name()),
            )
        });
    }
}

/// A fuzzy ideal is included in its `via_s` round trip.
fn fuzzy_growth(inst: &InstanceData, sink: &mut CaseSink, via_s: TransferMap) {
    let ctx = inst.ctx();
    let pop = &inst.fuzzy(CarrierKind::S).items;
    let flags = inst.fuzzy_flags(CarrierKind::S);
    for (i, a) in pop.iter().enumerate() {
        if !flags[i].ideal {
            continue;
        }
        let grown = roundtrip(a, via_s, ctx).expect(CARRIER_OK);
        sink.case(includes(a, &grown).expect(CARRIER_OK), || {
            (
                vec![part_fuzzy("subset", a), part_fuzzy("round trip", &grown)],
                format!("the {} round trip lost part of a fuzzy ideal", via_s.name()),
            )
        });
    }
}

/// The fuzzy transfer of a characteristic pair is the characteristic pair
/// of the crisp transfer.
fn char_commutation(inst: &InstanceData, sink: &mut CaseSink, map: TransferMap, ideals_only: bool) {
    let ctx = inst.ctx();
    let pop = &inst.crisp(map.source()).items;
    for (i, p) in pop.iter().enumerate() {
        if ideals_only {
            if !inst.crisp_flags(map.source())[i].ideal {
                continue;
            }
            if p.is_empty() {
                sink.skip("empty subset");
                continue;
            }
        }
        let transferred = transfer_fuzzy(&characteristic_pair(p), map, ctx).expect(CARRIER_OK);
        let of_image = characteristic_pair(&transfer_crisp(p, map, ctx).expect(CARRIER_OK));
        sink.case(transferred == of_image, || {
            (
                vec![
                    part_crisp("subset", p),
                    part_fuzzy("transfer of the characteristic pair", &transferred),
                    part_fuzzy("characteristic pair of the transfer", &of_image),
                ],
                format!(
                    "characteristic pairs do not commute with {} on {}",
                    map.name(),
                    fmt_crisp(p)
                ),
            )
        });
    }
}

fn crisp_included(p: &CrispSubset, q: &CrispSubset) -> bool {
    p.members().iter().all(|&x| q.contains(x))
}

/// Crisp version of [`fuzzy_roundtrip`], skipping empty subsets.
fn crisp_roundtrip(
    inst: &InstanceData,
    sink: &mut CaseSink,
    via_s: TransferMap,
    via_x: TransferMap,
    flavors: &[CrispFlavor],
    out_flavors: &[CrispFlavor],
) {
    let ctx = inst.ctx();
    let s_pop = &inst.crisp(CarrierKind::S).items;
    let s_flags = inst.crisp_flags(CarrierKind::S);
    let mut qualifying = Vec::new();
    let mut images: Vec<Option<CrispSubset>> = vec![None; s_pop.len()];
    for (i, p) in s_pop.iter().enumerate() {
        if !flavors.iter().any(|(_, f)| f(&s_flags[i])) {
            continue;
        }
        if p.is_empty() {
            sink.skip("empty subset");
            continue;
        }
        qualifying.push(i);
        let image = transfer_crisp(p, via_s, ctx).expect(CARRIER_OK);
        let image_flags = classify_crisp(&image, ctx);
        let back = transfer_crisp(&image, via_x, ctx).expect(CARRIER_OK);
        sink.case(back == *p, || {
            (
                vec![part_crisp("subset", p), part_crisp("round trip", &back)],
                format!(
                    "{} then {} changed {} into {}",
                    via_s.name(),
                    via_x.name(),
                    fmt_crisp(p),
                    fmt_crisp(&back)
                ),
            )
        });
        for (name, f) in out_flavors {
            if f(&s_flags[i]) {
                sink.case(f(&image_flags), || {
                    (
                        vec![part_crisp("subset", p), part_crisp("image", &image)],
                        format!(
                            "{} image of the {name} {} is {}, which is not a {name} of the operator semigroup",
                            via_s.name(),
                            fmt_crisp(p),
                            fmt_crisp(&image)
                        ),
                    )
                });
            }
        }
        images[i] = Some(image);
    }
    let x_pop = &inst.crisp(via_x.source()).items;
    let x_flags = inst.crisp_flags(via_x.source());
    for (i, q) in x_pop.iter().enumerate() {
        if !flavors.iter().any(|(_, f)| f(&x_flags[i])) {
            continue;
        }
        if q.is_empty() {
            sink.skip("empty subset");
            continue;
        }
        let image = transfer_crisp(q, via_x, ctx).expect(CARRIER_OK);
        let back = transfer_crisp(&image, via_s, ctx).expect(CARRIER_OK);
        sink.case(back == *q, || {
            (
                vec![part_crisp("subset", q), part_crisp("round trip", &back)],
                format!(
                    "{} then {} changed {} into {}",
                    via_x.name(),
                    via_s.name(),
                    fmt_crisp(q),
                    fmt_crisp(&back)
                ),
            )
        });
    }
    let pairs = index_pairs(
        &qualifying,
        inst.params().pair_cap,
        inst.rng(sink.salt() ^ PAIR_SALT),
    );
    for (i, j) in pairs.items {
        let p = &s_pop[i];
        let q = &s_pop[j];
        if !crisp_included(p, q) {
            continue;
        }
        let p_image = images[i].as_ref().expect("qualifying images are cached");
        let q_image = images[j].as_ref().expect("qualifying images are cached");
        sink.case(crisp_included(p_image, q_image), || {
            (
                vec![
                    part_crisp("smaller subset", p),
                    part_crisp("larger subset", q),
                    part_crisp("smaller image", p_image),
                    part_crisp("larger image", q_image),
                ],
                format!("inclusion is not preserved by {}", via_s.name()),
            )
        });
    }
}

/// Right-operator subsets of the listed flavors map through the base into
/// the left operator semigroup, keep the flavors listed in `out_flavors`,
/// return unchanged, and preserve inclusion on the way over.
fn right_left_bijection(
    inst: &InstanceData,
    sink: &mut CaseSink,
    flavors: &[FuzzyFlavor],
    out_flavors: &[FuzzyFlavor],
) {
    let ctx = inst.ctx();
    let pop = &inst.fuzzy(CarrierKind::R).items;
    let flags = inst.fuzzy_flags(CarrierKind::R);
    let mut qualifying = Vec::new();
    let mut images: Vec<Option<IFSubset>> = vec![None; pop.len()];
    for (i, b) in pop.iter().enumerate() {
        if !flavors.iter().any(|(_, f)| f(&flags[i])) {
            continue;
        }
        let down = transfer_fuzzy(b, TransferMap::Star, ctx).expect(CARRIER_OK);
        let left_image = transfer_fuzzy(&down, TransferMap::PlusPrime, ctx).expect(CARRIER_OK);
        let left_flags = classify_fuzzy(&left_image, ctx);
        for (name, f) in out_flavors {
            if f(&flags[i]) {
                sink.case(f(&left_flags), || {
                    (
                        vec![part_fuzzy("subset", b), part_fuzzy("image", &left_image)],
                        format!("the left-operator image of a {name} is not a {name}"),
                    )
                });
            }
        }
        let up = transfer_fuzzy(&left_image, TransferMap::Plus, ctx).expect(CARRIER_OK);
        let back = transfer_fuzzy(&up, TransferMap::StarPrime, ctx).expect(CARRIER_OK);
        sink.case(back == *b, || {
            (
                vec![part_fuzzy("subset", b), part_fuzzy("round trip", &back)],
                "crossing to the left operator semigroup and back changed the subset".to_string(),
            )
        });
        qualifying.push(i);
        images[i] = Some(left_image);
    }
    let pairs = index_pairs(
        &qualifying,
        inst.params().pair_cap,
        inst.rng(sink.salt() ^ PAIR_SALT),
    );
    for (i, j) in pairs.items {
        let a = &pop[i];
        let b = &pop[j];
        if !includes(a, b).expect(CARRIER_OK) {
            continue;
        }
        let a_image = images[i].as_ref().expect("qualifying images are cached");
        let b_image = images[j].as_ref().expect("qualifying images are cached");
        sink.case(includes(a_image, b_image).expect(CARRIER_OK), || {
            (
                vec![
                    part_fuzzy("smaller subset", a),
                    part_fuzzy("larger subset", b),
                    part_fuzzy("smaller image", a_image),
                    part_fuzzy("larger image", b_image),
                ],
                "inclusion is not preserved by the left-operator image".to_string(),
            )
        });
    }
}

fn run_crisp_star(inst: &InstanceData, sink: &mut CaseSink) {
    crisp_preservation(inst, sink, TransferMap::Star, CRISP_LEFT_KINDS);
}
fn run_crisp_star_prime(inst: &InstanceData, sink: &mut CaseSink) {
    crisp_preservation(inst, sink, TransferMap::StarPrime, CRISP_LEFT_KINDS);
}
fn run_crisp_plus(inst: &InstanceData, sink: &mut CaseSink) {
    crisp_preservation(inst, sink, TransferMap::Plus, CRISP_RIGHT_KINDS);
}
fn run_crisp_plus_prime(inst: &InstanceData, sink: &mut CaseSink) {
    crisp_preservation(inst, sink, TransferMap::PlusPrime, CRISP_RIGHT_KINDS);
}

fn run_level_star(inst: &InstanceData, sink: &mut CaseSink) {
    level_commutation(inst, sink, TransferMap::Star);
}
fn run_level_star_prime(inst: &InstanceData, sink: &mut CaseSink) {
    level_commutation(inst, sink, TransferMap::StarPrime);
}
fn run_level_plus(inst: &InstanceData, sink: &mut CaseSink) {
    level_commutation(inst, sink, TransferMap::Plus);
}
fn run_level_plus_prime(inst: &InstanceData, sink: &mut CaseSink) {
    level_commutation(inst, sink, TransferMap::PlusPrime);
}

fn run_ifi_star(inst: &InstanceData, sink: &mut CaseSink) {
    fuzzy_preservation(inst, sink, TransferMap::Star, FUZZY_LEFT_KINDS);
}
fn run_ifi_star_prime(inst: &InstanceData, sink: &mut CaseSink) {
    fuzzy_preservation(inst, sink, TransferMap::StarPrime, FUZZY_LEFT_KINDS);
}
fn run_ifi_plus(inst: &InstanceData, sink: &mut CaseSink) {
    fuzzy_preservation(inst, sink, TransferMap::Plus, FUZZY_RIGHT_KINDS);
}
fn run_ifi_plus_prime(inst: &InstanceData, sink: &mut CaseSink) {
    fuzzy_preservation(inst, sink, TransferMap::PlusPrime, FUZZY_RIGHT_KINDS);
}

fn run_plus_roundtrip(inst: &InstanceData, sink: &mut CaseSink) {
    fuzzy_roundtrip(
        inst,
        sink,
        TransferMap::PlusPrime,
        TransferMap::Plus,
        FUZZY_RIGHT_KINDS,
        FUZZY_RIGHT_KINDS,
    );
}
fn run_star_roundtrip(inst: &InstanceData, sink: &mut CaseSink) {
    fuzzy_roundtrip(
        inst,
        sink,
        TransferMap::StarPrime,
        TransferMap::Star,
        FUZZY_LEFT_KINDS,
        FUZZY_LEFT_KINDS,
    );
}
fn run_plus_growth(inst: &InstanceData, sink: &mut CaseSink) {
    fuzzy_growth(inst, sink, TransferMap::PlusPrime);
}
fn run_star_growth(inst: &InstanceData, sink: &mut CaseSink) {
    fuzzy_growth(inst, sink, TransferMap::StarPrime);
}

fn run_char_star(inst: &InstanceData, sink: &mut CaseSink) {
    char_commutation(inst, sink, TransferMap::Star, false);
}
fn run_char_star_prime(inst: &InstanceData, sink: &mut CaseSink) {
    char_commutation(inst, sink, TransferMap::StarPrime, false);
}
fn run_char_plus(inst: &InstanceData, sink: &mut CaseSink) {
    char_commutation(inst, sink, TransferMap::Plus, false);
}
fn run_char_plus_prime(inst: &InstanceData, sink: &mut CaseSink) {
    char_commutation(inst, sink, TransferMap::PlusPrime, false);
}
fn run_char_ideal(inst: &InstanceData, sink: &mut CaseSink) {
    char_commutation(inst, sink, TransferMap::StarPrime, true);
}

fn run_crisp_bijection(inst: &InstanceData, sink: &mut CaseSink) {
    crisp_roundtrip(
        inst,
        sink,
        TransferMap::StarPrime,
        TransferMap::Star,
        CRISP_LEFT_KINDS,
        CRISP_LEFT_KINDS,
    );
}
fn run_crisp_bijection_left(inst: &InstanceData, sink: &mut CaseSink) {
    crisp_roundtrip(
        inst,
        sink,
        TransferMap::PlusPrime,
        TransferMap::Plus,
        CRISP_RIGHT_KINDS,
        CRISP_RIGHT_KINDS,
    );
}
// The collective prime and semiprime flavors survive the maps out of the
// base only when there is a single operator: with several operators a
// subset can be collectively prime while no single-operator product law
// holds, and its outbound image then breaks both flavors on the operator
// semigroup.  The affected runners assert those flavors of the outbound
// image on single-operator instances only; round trips, inclusions, and
// the inbound direction stay asserted everywhere they are theorems.
fn single_operator(inst: &InstanceData) -> bool {
    inst.ctx().s().g_size() == 1
}

fn run_crisp_prime_bijection(inst: &InstanceData, sink: &mut CaseSink) {
    let out = if single_operator(inst) {
        CRISP_PRIME_KINDS
    } else {
        &[]
    };
    crisp_roundtrip(
        inst,
        sink,
        TransferMap::StarPrime,
        TransferMap::Star,
        CRISP_PRIME_KINDS,
        out,
    );
}

fn run_crisp_prime_star(inst: &InstanceData, sink: &mut CaseSink) {
    crisp_preservation(inst, sink, TransferMap::Star, CRISP_PRIME_KINDS);
}
fn run_crisp_prime_star_prime(inst: &InstanceData, sink: &mut CaseSink) {
    if single_operator(inst) {
        crisp_preservation(inst, sink, TransferMap::StarPrime, CRISP_PRIME_KINDS);
    }
}
fn run_crisp_prime_plus(inst: &InstanceData, sink: &mut CaseSink) {
    crisp_preservation(inst, sink, TransferMap::Plus, CRISP_PRIME_KINDS);
}
fn run_crisp_prime_plus_prime(inst: &InstanceData, sink: &mut CaseSink) {
    if single_operator(inst) {
        crisp_preservation(inst, sink, TransferMap::PlusPrime, CRISP_PRIME_KINDS);
    }
}

fn run_ifpi_star(inst: &InstanceData, sink: &mut CaseSink) {
    fuzzy_prime_into_base(inst, sink, TransferMap::Star);
}
fn run_ifpi_star_prime(inst: &InstanceData, sink: &mut CaseSink) {
    // Pointwise primeness always survives the outbound map; the level-set
    // semiprime flavor does so only with a single operator.
    let flavors = if single_operator(inst) {
        FUZZY_PRIME_KINDS
    } else {
        FUZZY_PRIME_ONLY
    };
    fuzzy_preservation(inst, sink, TransferMap::StarPrime, flavors);
}
fn run_ifpi_plus(inst: &InstanceData, sink: &mut CaseSink) {
    fuzzy_prime_into_base(inst, sink, TransferMap::Plus);
}
fn run_ifpi_plus_prime(inst: &InstanceData, sink: &mut CaseSink) {
    let flavors = if single_operator(inst) {
        FUZZY_PRIME_KINDS
    } else {
        FUZZY_PRIME_ONLY
    };
    fuzzy_preservation(inst, sink, TransferMap::PlusPrime, flavors);
}

fn run_ifpi_roundtrip(inst: &InstanceData, sink: &mut CaseSink) {
    fuzzy_roundtrip(
        inst,
        sink,
        TransferMap::StarPrime,
        TransferMap::Star,
        FUZZY_PRIME_ONLY,
        FUZZY_PRIME_ONLY,
    );
}
fn run_ifspi_roundtrip(inst: &InstanceData, sink: &mut CaseSink) {
    let out = if single_operator(inst) {
        FUZZY_SEMIPRIME_ONLY
    } else {
        &[]
    };
    fuzzy_roundtrip(
        inst,
        sink,
        TransferMap::StarPrime,
        TransferMap::Star,
        FUZZY_SEMIPRIME_ONLY,
        out,
    );
}
fn run_left_prime_roundtrip(inst: &InstanceData, sink: &mut CaseSink) {
    let out = if single_operator(inst) {
        FUZZY_PRIME_KINDS
    } else {
        FUZZY_PRIME_ONLY
    };
    fuzzy_roundtrip(
        inst,
        sink,
        TransferMap::PlusPrime,
        TransferMap::Plus,
        FUZZY_PRIME_KINDS,
        out,
    );
}
fn run_right_left_prime(inst: &InstanceData, sink: &mut CaseSink) {
    // The hop through the base only keeps the pointwise reading of the
    // flavors when there is a single operator.
    let out = if single_operator(inst) {
        FUZZY_PRIME_KINDS
    } else {
        &[]
    };
    right_left_bijection(inst, sink, FUZZY_PRIME_KINDS, out);
}
fn run_right_left_ideal(inst: &InstanceData, sink: &mut CaseSink) {
    let flavors: &[FuzzyFlavor] = &[("fuzzy ideal", f_ideal)];
    right_left_bijection(inst, sink, flavors, flavors);
}

fn run_extension_monotone(inst: &InstanceData, sink: &mut CaseSink) {
    let ctx = inst.ctx();
    let pop = &inst.fuzzy(CarrierKind::S).items;
    let flags = inst.fuzzy_flags(CarrierKind::S);
    for (i, a) in pop.iter().enumerate() {
        if !flags[i].ideal {
            continue;
        }
        for x in 0..ctx.s().s_size() {
            let extension = extend(a, x, ctx);
            sink.case(includes(a, &extension).expect(CARRIER_OK), || {
                (
                    vec![part_fuzzy("subset", a), part_fuzzy("extension", &extension)],
                    format!("extension by element {x} does not include the fuzzy ideal"),
                )
            });
        }
    }
}

fn run_extension_transfer(inst: &InstanceData, sink: &mut CaseSink) {
    let ctx = inst.ctx();
    let right = ctx.right();
    for a in &inst.fuzzy(CarrierKind::S).items {
        let moved = transfer_fuzzy(a, TransferMap::StarPrime, ctx).expect(CARRIER_OK);
        for x in 0..ctx.s().s_size() {
            let lhs =
                transfer_fuzzy(&extend(a, x, ctx), TransferMap::StarPrime, ctx).expect(CARRIER_OK);
            let mut family = Vec::with_capacity(ctx.s().g_size());
            for op in 0..ctx.s().g_size() {
                let rhs = extend_op(&moved, right.class_of_pair(op, x), ctx);
                sink.case(includes(&lhs, &rhs).expect(CARRIER_OK), || {
                    (
                        vec![
                            part_fuzzy("subset", a),
                            part_fuzzy("transfer of the extension", &lhs),
                            part_fuzzy("operator extension", &rhs),
                        ],
                        format!(
                            "transfer of the extension by element {x} is not included in the operator extension at operator {op}"
                        ),
                    )
                });
                family.push(rhs);
            }
            let infimum = inf_family(&family).expect("per-operator extensions share a carrier");
            sink.case(lhs == infimum, || {
                (
                    vec![
                        part_fuzzy("subset", a),
                        part_fuzzy("transfer of the extension", &lhs),
                        part_fuzzy("infimum of the operator extensions", &infimum),
                    ],
                    format!(
                        "transfer of the extension by element {x} differs from the infimum over operators"
                    ),
                )
            });
        }
    }
}

fn run_extension_star(inst: &InstanceData, sink: &mut CaseSink) {
    let ctx = inst.ctx();
    let right = ctx.right();
    for b in &inst.fuzzy(CarrierKind::R).items {
        let down = transfer_fuzzy(b, TransferMap::Star, ctx).expect(CARRIER_OK);
        for x in 0..ctx.s().s_size() {
            let lhs = extend(&down, x, ctx);
            for op in 0..ctx.s().g_size() {
                let rhs = transfer_fuzzy(
                    &extend_op(b, right.class_of_pair(op, x), ctx),
                    TransferMap::Star,
                    ctx,
                )
                .expect(CARRIER_OK);
                sink.case(includes(&lhs, &rhs).expect(CARRIER_OK), || {
                    (
                        vec![
                            part_fuzzy("subset", b),
                            part_fuzzy("extension of the transfer", &lhs),
                            part_fuzzy("transfer of the operator extension", &rhs),
                        ],
                        format!(
                            "extension by element {x} escapes the transferred operator extension at operator {op}"
                        ),
                    )
                });
            }
        }
    }
}

fn run_extend_op_ideal(inst: &InstanceData, sink: &mut CaseSink) {
    let ctx = inst.ctx();
    let pop = &inst.fuzzy(CarrierKind::S).items;
    let flags = inst.fuzzy_flags(CarrierKind::S);
    for (i, a) in pop.iter().enumerate() {
        if !FUZZY_ALL_KINDS.iter().any(|(_, f)| f(&flags[i])) {
            continue;
        }
        for map in [TransferMap::StarPrime, TransferMap::PlusPrime] {
            let moved = transfer_fuzzy(a, map, ctx).expect(CARRIER_OK);
            let op = ctx
                .op(map.target())
                .expect("transfer targets are operator semigroups");
            for class in 0..op.class_count() {
                let extension = extend_op(&moved, class, ctx);
                let extension_flags = classify_fuzzy(&extension, ctx);
                for (name, f) in FUZZY_ALL_KINDS {
                    if f(&flags[i]) {
                        sink.case(f(&extension_flags), || {
                            (
                                vec![
                                    part_fuzzy("subset", a),
                                    part_fuzzy("operator extension", &extension),
                                ],
                                format!(
                                    "extension of the {} image by class {class} is not a {name}",
                                    map.name()
                                ),
                            )
                        });
                    }
                }
            }
        }
    }
}

fn run_extend_back_ideal(inst: &InstanceData, sink: &mut CaseSink) {
    let ctx = inst.ctx();
    for map in [TransferMap::Plus, TransferMap::Star] {
        let pop = &inst.fuzzy(map.source()).items;
        let flags = inst.fuzzy_flags(map.source());
        for (i, b) in pop.iter().enumerate() {
            if !FUZZY_ALL_KINDS.iter().any(|(_, f)| f(&flags[i])) {
                continue;
            }
            let down = transfer_fuzzy(b, map, ctx).expect(CARRIER_OK);
            for x in 0..ctx.s().s_size() {
                let extension = extend(&down, x, ctx);
                let extension_flags = classify_fuzzy(&extension, ctx);
                for (name, f) in FUZZY_ALL_KINDS {
                    if f(&flags[i]) {
                        sink.case(f(&extension_flags), || {
                            (
                                vec![part_fuzzy("subset", b), part_fuzzy("extension", &extension)],
                                format!(
                                    "extension of the {} image by element {x} is not a {name}",
                                    map.name()
                                ),
                            )
                        });
                    }
                }
            }
        }
    }
}

/// Extensions of subsets holding `flavor` hold it too.
fn extend_keeps(inst: &InstanceData, sink: &mut CaseSink, flavor: FuzzyFlavor) {
    let (name, f) = flavor;
    let ctx = inst.ctx();
    let pop = &inst.fuzzy(CarrierKind::S).items;
    let flags = inst.fuzzy_flags(CarrierKind::S);
    for (i, a) in pop.iter().enumerate() {
        if !f(&flags[i]) {
            continue;
        }
        for x in 0..ctx.s().s_size() {
            let extension = extend(a, x, ctx);
            sink.case(f(&classify_fuzzy(&extension, ctx)), || {
                (
                    vec![part_fuzzy("subset", a), part_fuzzy("extension", &extension)],
                    format!("extension of a {name} by element {x} is not a {name}"),
                )
            });
        }
    }
}

fn run_extend_ifi(inst: &InstanceData, sink: &mut CaseSink) {
    extend_keeps(inst, sink, ("fuzzy ideal", f_ideal));
}
fn run_extend_ifspi(inst: &InstanceData, sink: &mut CaseSink) {
    extend_keeps(inst, sink, ("fuzzy semiprime ideal", f_semiprime));
}

fn run_extend_inf_ifspi(inst: &InstanceData, sink: &mut CaseSink) {
    let ctx = inst.ctx();
    let qualifying = inst.fuzzy_matching(CarrierKind::S, |f| f.semiprime);
    let families = index_families(
        qualifying.len(),
        inst.params().family_cap,
        inst.rng(sink.salt() ^ FAMILY_SALT),
    );
    let pop = &inst.fuzzy(CarrierKind::S).items;
    for family in &families.items {
        let members: Vec<IFSubset> = family.iter().map(|&k| pop[qualifying[k]].clone()).collect();
        let infimum = inf_family(&members).expect("family members share a carrier");
        for x in 0..ctx.s().s_size() {
            let extension = extend(&infimum, x, ctx);
            sink.case(classify_fuzzy(&extension, ctx).semiprime, || {
                let mut parts: Vec<WitnessPart> = members
                    .iter()
                    .enumerate()
                    .map(|(k, m)| part_fuzzy(&format!("member {}", k + 1), m))
                    .collect();
                parts.push(part_fuzzy("extension of the infimum", &extension));
                (
                    parts,
                    format!(
                        "extension of the infimum by element {x} is not a fuzzy semiprime ideal"
                    ),
                )
            });
        }
    }
}

fn run_extend_spi_intersection(inst: &InstanceData, sink: &mut CaseSink) {
    let ctx = inst.ctx();
    let pop = &inst.crisp(CarrierKind::S).items;
    let flags = inst.crisp_flags(CarrierKind::S);
    let qualifying: Vec<usize> = (0..pop.len())
        .filter(|&i| flags[i].semiprime && !pop[i].is_empty())
        .collect();
    let families = index_families(
        qualifying.len(),
        inst.params().family_cap,
        inst.rng(sink.salt() ^ FAMILY_SALT),
    );
    for family in &families.items {
        let members: Vec<&CrispSubset> = family.iter().map(|&k| &pop[qualifying[k]]).collect();
        let mut intersection = members[0].clone();
        for m in &members[1..] {
            intersection = intersection
                .intersection(m)
                .expect("family members share a carrier");
        }
        if intersection.is_empty() {
            sink.skip("empty intersection");
            continue;
        }
        let pair = characteristic_pair(&intersection);
        for x in 0..ctx.s().s_size() {
            let extension = extend(&pair, x, ctx);
            sink.case(classify_fuzzy(&extension, ctx).semiprime, || {
                let mut parts: Vec<WitnessPart> = members
                    .iter()
                    .enumerate()
                    .map(|(k, m)| part_crisp(&format!("member {}", k + 1), m))
                    .collect();
                parts.push(part_fuzzy("extension of the intersection", &extension));
                (
                    parts,
                    format!(
                        "extension by element {x} of the characteristic pair of {} is not a fuzzy semiprime ideal",
                        fmt_crisp(&intersection)
                    ),
                )
            });
        }
    }
}

fn run_crisp_intersection(inst: &InstanceData, sink: &mut CaseSink) {
    let ctx = inst.ctx();
    let pop = &inst.crisp(CarrierKind::S).items;
    let families = index_families(
        pop.len(),
        inst.params().family_cap,
        inst.rng(sink.salt() ^ FAMILY_SALT),
    );
    for family in &families.items {
        let members: Vec<&CrispSubset> = family.iter().map(|&k| &pop[k]).collect();
        let mut intersection = members[0].clone();
        for m in &members[1..] {
            intersection = intersection
                .intersection(m)
                .expect("family members share a carrier");
        }
        let lhs = transfer_crisp(&intersection, TransferMap::StarPrime, ctx).expect(CARRIER_OK);
        let mut rhs = transfer_crisp(members[0], TransferMap::StarPrime, ctx).expect(CARRIER_OK);
        for m in &members[1..] {
            let moved = transfer_crisp(m, TransferMap::StarPrime, ctx).expect(CARRIER_OK);
            rhs = rhs.intersection(&moved).expect("transfers share a carrier");
        }
        sink.case(lhs == rhs, || {
            let mut parts: Vec<WitnessPart> = members
                .iter()
                .enumerate()
                .map(|(k, m)| part_crisp(&format!("member {}", k + 1), m))
                .collect();
            parts.push(part_crisp("transfer of the intersection", &lhs));
            parts.push(part_crisp("intersection of the transfers", &rhs));
            (
                parts,
                format!(
                    "star-prime does not distribute over the intersection {}",
                    fmt_crisp(&intersection)
                ),
            )
        });
    }
}

fn run_inf_family(inst: &InstanceData, sink: &mut CaseSink) {
    let ctx = inst.ctx();
    let pop = &inst.fuzzy(CarrierKind::S).items;
    let families = index_families(
        pop.len(),
        inst.params().family_cap,
        inst.rng(sink.salt() ^ FAMILY_SALT),
    );
    let mut moved: Vec<Option<IFSubset>> = vec![None; pop.len()];
    for family in &families.items {
        let members: Vec<IFSubset> = family.iter().map(|&k| pop[k].clone()).collect();
        let infimum = inf_family(&members).expect("family members share a carrier");
        let lhs = transfer_fuzzy(&infimum, TransferMap::StarPrime, ctx).expect(CARRIER_OK);
        for &k in family {
            if moved[k].is_none() {
                moved[k] =
                    Some(transfer_fuzzy(&pop[k], TransferMap::StarPrime, ctx).expect(CARRIER_OK));
            }
        }
        let images: Vec<IFSubset> = family
            .iter()
            .map(|&k| moved[k].clone().expect("transfer is cached"))
            .collect();
        let rhs = inf_family(&images).expect("transfers share a carrier");
        sink.case(lhs == rhs, || {
            let mut parts: Vec<WitnessPart> = members
                .iter()
                .enumerate()
                .map(|(k, m)| part_fuzzy(&format!("member {}", k + 1), m))
                .collect();
            parts.push(part_fuzzy("transfer of the infimum", &lhs));
            parts.push(part_fuzzy("infimum of the transfers", &rhs));
            (
                parts,
                "star-prime does not distribute over the infimum of the family".to_string(),
            )
        });
    }
}

fn run_prime_extension(inst: &InstanceData, sink: &mut CaseSink) {
    let ctx = inst.ctx();
    let pop = &inst.crisp(CarrierKind::S).items;
    let flags = inst.crisp_flags(CarrierKind::S);
    for (i, p) in pop.iter().enumerate() {
        if !flags[i].ideal {
            continue;
        }
        if p.is_empty() {
            sink.skip("empty subset");
            continue;
        }
        let pair = characteristic_pair(p);
        let mut violation: Option<(usize, IFSubset)> = None;
        for x in 0..ctx.s().s_size() {
            if p.contains(x) {
                continue;
            }
            let extension = extend(&pair, x, ctx);
            if extension != pair {
                violation = Some((x, extension));
                break;
            }
        }
        let fixes_all = violation.is_none();
        sink.case(flags[i].prime == fixes_all, || match &violation {
            Some((x, extension)) => (
                vec![part_crisp("subset", p), part_fuzzy("extension", extension)],
                format!(
                    "the ideal {} is elementwise prime, yet extension by outside element {x} moves its characteristic pair",
                    fmt_crisp(p)
                ),
            ),
            None => (
                vec![part_crisp("subset", p)],
                format!(
                    "every outside extension fixes the characteristic pair of {}, yet the ideal is not elementwise prime",
                    fmt_crisp(p)
                ),
            ),
        });
    }
}

static CATALOG: &[CheckEntry] = &[
    CheckEntry {
        id: "prop-2.3-crisp-star",
        title: "star transfer preserves crisp left ideals and ideals",
        hypothesis: Hypothesis::BothUnities,
        witnesses: WitnessKind::CrispSubsets,
        run: run_crisp_star,
    },
    CheckEntry {
        id: "prop-2.4-crisp-star-prime",
        title: "star-prime transfer preserves crisp left ideals and ideals",
        hypothesis: Hypothesis::BothUnities,
        witnesses: WitnessKind::CrispSubsets,
        run: run_crisp_star_prime,
    },
    CheckEntry {
        id: "rem-1-crisp-plus",
        title: "plus transfer preserves crisp right ideals and ideals",
        hypothesis: Hypothesis::BothUnities,
        witnesses: WitnessKind::CrispSubsets,
        run: run_crisp_plus,
    },
    CheckEntry {
        id: "rem-1-crisp-plus-prime",
        title: "plus-prime transfer preserves crisp right ideals and ideals",
        hypothesis: Hypothesis::BothUnities,
        witnesses: WitnessKind::CrispSubsets,
        run: run_crisp_plus_prime,
    },
    CheckEntry {
        id: "prop-2.5-level-star",
        title: "star transfer commutes with level sets",
        hypothesis: Hypothesis::None,
        witnesses: WitnessKind::FuzzySubsets,
        run: run_level_star,
    },
    CheckEntry {
        id: "prop-2.6-level-star-prime",
        title: "star-prime transfer commutes with level sets",
        hypothesis: Hypothesis::None,
        witnesses: WitnessKind::FuzzySubsets,
        run: run_level_star_prime,
    },
    CheckEntry {
        id: "rem-1-level-plus",
        title: "plus transfer commutes with level sets",
        hypothesis: Hypothesis::None,
        witnesses: WitnessKind::FuzzySubsets,
        run: run_level_plus,
    },
    CheckEntry {
        id: "rem-1-level-plus-prime",
        title: "plus-prime transfer commutes with level sets",
        hypothesis: Hypothesis::None,
        witnesses: WitnessKind::FuzzySubsets,
        run: run_level_plus_prime,
    },
    CheckEntry {
        id: "prop-2.7-ifi-star",
        title: "star transfer preserves fuzzy left ideals and ideals",
        hypothesis: Hypothesis::BothUnities,
        witnesses: WitnessKind::FuzzyIdealSubsets,
        run: run_ifi_star,
    },
    CheckEntry {
        id: "prop-2.8-ifi-star-prime",
        title: "star-prime transfer preserves fuzzy left ideals and ideals",
        hypothesis: Hypothesis::BothUnities,
        witnesses: WitnessKind::FuzzyIdealSubsets,
        run: run_ifi_star_prime,
    },
    CheckEntry {
        id: "rem-1-ifi-plus",
        title: "plus transfer preserves fuzzy right ideals and ideals",
        hypothesis: Hypothesis::BothUnities,
        witnesses: WitnessKind::FuzzyIdealSubsets,
        run: run_ifi_plus,
    },
    CheckEntry {
        id: "rem-1-ifi-plus-prime",
        title: "plus-prime transfer preserves fuzzy right ideals and ideals",
        hypothesis: Hypothesis::BothUnities,
        witnesses: WitnessKind::FuzzyIdealSubsets,
        run: run_ifi_plus_prime,
    },
    CheckEntry {
        id: "thm-2.9-roundtrip",
        title: "plus-prime and plus are mutually inverse on fuzzy right ideals and ideals",
        hypothesis: Hypothesis::BothUnities,
        witnesses: WitnessKind::FuzzyIdealSubsets,
        run: run_plus_roundtrip,
    },
    CheckEntry {
        id: "thm-2.10-roundtrip",
        title: "star-prime and star are mutually inverse on fuzzy left ideals and ideals",
        hypothesis: Hypothesis::BothUnities,
        witnesses: WitnessKind::FuzzyIdealSubsets,
        run: run_star_roundtrip,
    },
    CheckEntry {
        id: "thm-2.9-growth",
        title: "the plus-prime round trip never shrinks a fuzzy ideal",
        hypothesis: Hypothesis::None,
        witnesses: WitnessKind::FuzzyIdealSubsets,
        run: run_plus_growth,
    },
    CheckEntry {
        id: "thm-2.10-growth",
        title: "the star-prime round trip never shrinks a fuzzy ideal",
        hypothesis: Hypothesis::None,
        witnesses: WitnessKind::FuzzyIdealSubsets,
        run: run_star_growth,
    },
    CheckEntry {
        id: "lem-2.11-char-star",
        title: "characteristic pairs commute with star transfer",
        hypothesis: Hypothesis::None,
        witnesses: WitnessKind::CrispSubsets,
        run: run_char_star,
    },
    CheckEntry {
        id: "lem-2.12-char-star-prime",
        title: "characteristic pairs commute with star-prime transfer",
        hypothesis: Hypothesis::None,
        witnesses: WitnessKind::CrispSubsets,
        run: run_char_star_prime,
    },
    CheckEntry {
        id: "rem-2-char-plus",
        title: "characteristic pairs commute with plus transfer",
        hypothesis: Hypothesis::None,
        witnesses: WitnessKind::CrispSubsets,
        run: run_char_plus,
    },
    CheckEntry {
        id: "rem-2-char-plus-prime",
        title: "characteristic pairs commute with plus-prime transfer",
        hypothesis: Hypothesis::None,
        witnesses: WitnessKind::CrispSubsets,
        run: run_char_plus_prime,
    },
    CheckEntry {
        id: "lem-2.25-char-ideal",
        title: "characteristic pairs of nonempty ideals commute with star-prime transfer",
        hypothesis: Hypothesis::None,
        witnesses: WitnessKind::CrispSubsets,
        run: run_char_ideal,
    },
    CheckEntry {
        id: "thm-2.13-crisp-bijection",
        title: "star-prime and star are mutually inverse on crisp left ideals and ideals",
        hypothesis: Hypothesis::BothUnities,
        witnesses: WitnessKind::CrispSubsets,
        run: run_crisp_bijection,
    },
    CheckEntry {
        id: "rem-3-crisp-bijection-left",
        title: "plus-prime and plus are mutually inverse on crisp right ideals and ideals",
        hypothesis: Hypothesis::BothUnities,
        witnesses: WitnessKind::CrispSubsets,
        run: run_crisp_bijection_left,
    },
    CheckEntry {
        id: "thm-2.21-crisp-prime-bijection",
        title: "star-prime and star are mutually inverse on crisp prime and semiprime ideals",
        hypothesis: Hypothesis::None,
        witnesses: WitnessKind::CrispSubsets,
        run: run_crisp_prime_bijection,
    },
    CheckEntry {
        id: "prop-2.14-crisp-prime-star",
        title: "star transfer preserves crisp prime and semiprime ideals",
        hypothesis: Hypothesis::None,
        witnesses: WitnessKind::CrispSubsets,
        run: run_crisp_prime_star,
    },
    CheckEntry {
        id: "prop-2.15-crisp-prime-star-prime",
        title: "star-prime transfer preserves crisp prime and semiprime ideals",
        hypothesis: Hypothesis::None,
        witnesses: WitnessKind::CrispSubsets,
        run: run_crisp_prime_star_prime,
    },
    CheckEntry {
        id: "rem-4-crisp-prime-plus",
        title: "plus transfer preserves crisp prime and semiprime ideals",
        hypothesis: Hypothesis::None,
        witnesses: WitnessKind::CrispSubsets,
        run: run_crisp_prime_plus,
    },
    CheckEntry {
        id: "rem-4-crisp-prime-plus-prime",
        title: "plus-prime transfer preserves crisp prime and semiprime ideals",
        hypothesis: Hypothesis::None,
        witnesses: WitnessKind::CrispSubsets,
        run: run_crisp_prime_plus_prime,
    },
    CheckEntry {
        id: "prop-2.16-ifpi-star",
        title: "star transfer preserves prime level sets and fuzzy semiprime ideals",
        hypothesis: Hypothesis::None,
        witnesses: WitnessKind::FuzzyIdealSubsets,
        run: run_ifpi_star,
    },
    CheckEntry {
        id: "prop-2.17-ifpi-star-prime",
        title: "star-prime transfer preserves fuzzy prime and semiprime ideals",
        hypothesis: Hypothesis::None,
        witnesses: WitnessKind::FuzzyIdealSubsets,
        run: run_ifpi_star_prime,
    },
    CheckEntry {
        id: "rem-4-ifpi-plus",
        title: "plus transfer preserves prime level sets and fuzzy semiprime ideals",
        hypothesis: Hypothesis::None,
        witnesses: WitnessKind::FuzzyIdealSubsets,
        run: run_ifpi_plus,
    },
    CheckEntry {
        id: "rem-4-ifpi-plus-prime",
        title: "plus-prime transfer preserves fuzzy prime and semiprime ideals",
        hypothesis: Hypothesis::None,
        witnesses: WitnessKind::FuzzyIdealSubsets,
        run: run_ifpi_plus_prime,
    },
    CheckEntry {
        id: "thm-2.18-ifpi-roundtrip",
        title: "star-prime and star are mutually inverse on fuzzy prime ideals",
        hypothesis: Hypothesis::None,
        witnesses: WitnessKind::FuzzyIdealSubsets,
        run: run_ifpi_roundtrip,
    },
    CheckEntry {
        id: "rem-5-ifspi-roundtrip",
        title: "star-prime and star are mutually inverse on fuzzy semiprime ideals",
        hypothesis: Hypothesis::None,
        witnesses: WitnessKind::FuzzyIdealSubsets,
        run: run_ifspi_roundtrip,
    },
    CheckEntry {
        id: "rem-5-left-roundtrip",
        title: "plus-prime and plus are mutually inverse on fuzzy prime and semiprime ideals",
        hypothesis: Hypothesis::None,
        witnesses: WitnessKind::FuzzyIdealSubsets,
        run: run_left_prime_roundtrip,
    },
    CheckEntry {
        id: "cor-2.19-right-left-bijection",
        title: "fuzzy prime and semiprime ideals cross between the two operator semigroups",
        hypothesis: Hypothesis::None,
        witnesses: WitnessKind::FuzzyIdealSubsets,
        run: run_right_left_prime,
    },
    CheckEntry {
        id: "rem-6-right-left-ifi",
        title: "fuzzy ideals cross between the two operator semigroups",
        hypothesis: Hypothesis::BothUnities,
        witnesses: WitnessKind::FuzzyIdealSubsets,
        run: run_right_left_ideal,
    },
    CheckEntry {
        id: "s5-extension-monotone",
        title: "extensions grow fuzzy ideals",
        hypothesis: Hypothesis::None,
        witnesses: WitnessKind::FuzzyIdealSubsets,
        run: run_extension_monotone,
    },
    CheckEntry {
        id: "lem-2.23-extension-transfer",
        title: "star-prime transfer of an extension is the infimum of the operator extensions",
        hypothesis: Hypothesis::Commutative,
        witnesses: WitnessKind::FuzzySubsets,
        run: run_extension_transfer,
    },
    CheckEntry {
        id: "lem-2.24-extension-star",
        title: "extensions of star images stay inside transferred operator extensions",
        hypothesis: Hypothesis::None,
        witnesses: WitnessKind::FuzzySubsets,
        run: run_extension_star,
    },
    CheckEntry {
        id: "prop-2.22-extend-op-ideal",
        title: "operator extensions preserve the ideal kinds of transferred subsets",
        hypothesis: Hypothesis::Commutative,
        witnesses: WitnessKind::FuzzyIdealSubsets,
        run: run_extend_op_ideal,
    },
    CheckEntry {
        id: "prop-2.23-extend-back-ideal",
        title: "extensions of transferred operator subsets keep their ideal kinds",
        hypothesis: Hypothesis::Commutative,
        witnesses: WitnessKind::FuzzyIdealSubsets,
        run: run_extend_back_ideal,
    },
    CheckEntry {
        id: "prop-2.28-extend-ifi",
        title: "extensions of fuzzy ideals are fuzzy ideals",
        hypothesis: Hypothesis::CommutativeUnities,
        witnesses: WitnessKind::FuzzyIdealSubsets,
        run: run_extend_ifi,
    },
    CheckEntry {
        id: "prop-2.29-extend-ifspi",
        title: "extensions of fuzzy semiprime ideals are fuzzy semiprime ideals",
        hypothesis: Hypothesis::Commutative,
        witnesses: WitnessKind::FuzzyIdealSubsets,
        run: run_extend_ifspi,
    },
    CheckEntry {
        id: "prop-2.30-extend-inf-ifspi",
        title: "extensions of infima of fuzzy semiprime ideals are fuzzy semiprime ideals",
        hypothesis: Hypothesis::Commutative,
        witnesses: WitnessKind::IdealFamilies,
        run: run_extend_inf_ifspi,
    },
    CheckEntry {
        id: "thm-2.30-extend-spi-intersection",
        title: "extensions of intersections of semiprime ideals are fuzzy semiprime ideals",
        hypothesis: Hypothesis::Commutative,
        witnesses: WitnessKind::IdealFamilies,
        run: run_extend_spi_intersection,
    },
    CheckEntry {
        id: "lem-2.26-crisp-intersection",
        title: "star-prime transfer distributes over crisp intersections",
        hypothesis: Hypothesis::None,
        witnesses: WitnessKind::IdealFamilies,
        run: run_crisp_intersection,
    },
    CheckEntry {
        id: "lem-2.27-inf-family",
        title: "star-prime transfer distributes over infima of families",
        hypothesis: Hypothesis::None,
        witnesses: WitnessKind::IdealFamilies,
        run: run_inf_family,
    },
    CheckEntry {
        id: "thm-2.31-prime-extension",
        title: "an ideal is elementwise prime exactly when outside extensions fix its characteristic pair",
        hypothesis: Hypothesis::None,
        witnesses: WitnessKind::CrispSubsets,
        run: run_prime_extension,
    },
];

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn ids_are_unique_and_well_formed() {
        let mut seen = HashSet::new();
        for entry in catalog() {
            assert!(seen.insert(entry.id), "duplicate id {}", entry.id);
            assert!(
                entry
                    .id
                    .chars()
                    .all(|c| c.is_ascii_alphanumeric() || c == '-' || c == '.'),
                "id {} has unexpected characters",
                entry.id
            );
            assert!(!entry.title.is_empty());
        }
    }

    #[test]
    fn catalog_covers_every_cataloged_claim_family() {
        let ids: HashSet<&str> = catalog().iter().map(|e| e.id).collect();
        for required in [
            "prop-2.3-crisp-star",
            "prop-2.4-crisp-star-prime",
            "prop-2.5-level-star",
            "prop-2.6-level-star-prime",
            "prop-2.7-ifi-star",
            "prop-2.8-ifi-star-prime",
            "thm-2.9-roundtrip",
            "thm-2.10-roundtrip",
            "lem-2.11-char-star",
            "lem-2.12-char-star-prime",
            "thm-2.13-crisp-bijection",
            "prop-2.14-crisp-prime-star",
            "prop-2.15-crisp-prime-star-prime",
            "prop-2.16-ifpi-star",
            "prop-2.17-ifpi-star-prime",
            "thm-2.18-ifpi-roundtrip",
            "cor-2.19-right-left-bijection",
            "thm-2.21-crisp-prime-bijection",
            "prop-2.22-extend-op-ideal",
            "prop-2.23-extend-back-ideal",
            "lem-2.23-extension-transfer",
            "lem-2.24-extension-star",
            "lem-2.25-char-ideal",
            "lem-2.26-crisp-intersection",
            "lem-2.27-inf-family",
            "prop-2.28-extend-ifi",
            "prop-2.29-extend-ifspi",
            "prop-2.30-extend-inf-ifspi",
            "thm-2.30-extend-spi-intersection",
            "thm-2.31-prime-extension",
            "rem-1-crisp-plus",
            "rem-1-crisp-plus-prime",
            "rem-1-level-plus",
            "rem-1-level-plus-prime",
            "rem-1-ifi-plus",
            "rem-1-ifi-plus-prime",
            "rem-2-char-plus",
            "rem-2-char-plus-prime",
            "rem-3-crisp-bijection-left",
            "rem-4-crisp-prime-plus",
            "rem-4-crisp-prime-plus-prime",
            "rem-4-ifpi-plus",
            "rem-4-ifpi-plus-prime",
            "rem-5-ifspi-roundtrip",
            "rem-5-left-roundtrip",
            "rem-6-right-left-ifi",
            "s5-extension-monotone",
        ] {
            assert!(ids.contains(required), "catalog is missing {required}");
        }
    }
}
