//! Independent brute-force oracle for the enumerator.
//!
//! The oracle scans every total table with its own index arithmetic and its
//! own associativity test, so it shares no code with the backtracking search.
//! Expected counts: sizes (1,1) -> 1, (2,1) -> 8, (3,1) -> 113, and for the
//! two-operator sizes (1,2) -> 1, (2,2) -> 14, (3,2) -> 413.

use gsg::enumerate::{enumerate, EnumerateOptions, Filter};
use gsg::semigroup::GammaSemigroup;
use std::collections::BTreeSet;

/// All associative flat tables for the given sizes, by odometer scan.
/// Feasible up to (3,1) and (2,2); (3,2) uses the pair oracle below.
fn naive(s: usize, g: usize) -> Vec<Vec<usize>> {
    let cells = s * g * s;
    let idx = |x: usize, a: usize, y: usize| (x * g + a) * s + y;
    let assoc = |t: &[usize]| {
        for x in 0..s {
            for a in 0..g {
                for y in 0..s {
                    for b in 0..g {
                        for z in 0..s {
                            if t[idx(t[idx(x, a, y)], b, z)] != t[idx(x, a, t[idx(y, b, z)])] {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    };
    let mut out = Vec::new();
    let mut t = vec![0usize; cells];
    loop {
        if assoc(&t) {
            out.push(t.clone());
        }
        // odometer with the LAST cell fastest, so output is lexicographic
        let mut i = cells;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            t[i] += 1;
            if t[i] < s {
                break;
            }
            t[i] = 0;
        }
    }
}

/// Associative (3,2) tables as pairs of associative (3,1) tables passing the
/// two cross-operator word conditions.
fn naive_32_pairs() -> Vec<(Vec<usize>, Vec<usize>)> {
    let singles = naive(3, 1);
    let idx = |x: usize, y: usize| x * 3 + y;
    let mut out = Vec::new();
    for t1 in &singles {
        for t2 in &singles {
            let mut ok = true;
            'scan: for x in 0..3 {
                for y in 0..3 {
                    for z in 0..3 {
                        if t2[idx(t1[idx(x, y)], z)] != t1[idx(x, t2[idx(y, z)])]
                            || t1[idx(t2[idx(x, y)], z)] != t2[idx(x, t1[idx(y, z)])]
                        {
                            ok = false;
                            break 'scan;
                        }
                    }
                }
            }
            if ok {
                out.push((t1.clone(), t2.clone()));
            }
        }
    }
    out
}

fn enumerated_tables(s: usize, g: usize) -> Vec<Vec<usize>> {
    enumerate(s, g, &EnumerateOptions::default())
        .unwrap()
        .instances
        .iter()
        .map(|i| i.raw_table().to_vec())
        .collect()
}

#[test]
fn counts_match_the_oracle_exactly() {
    // Same tables, same order: the oracle scan is lexicographic by table.
    assert_eq!(enumerated_tables(1, 1), naive(1, 1));
    assert_eq!(enumerated_tables(2, 1), naive(2, 1));
    assert_eq!(enumerated_tables(3, 1), naive(3, 1));
    assert_eq!(enumerated_tables(1, 2), naive(1, 2));
    assert_eq!(enumerated_tables(2, 2), naive(2, 2));
}

#[test]
fn frozen_counts() {
    assert_eq!(enumerated_tables(1, 1).len(), 1);
    assert_eq!(enumerated_tables(2, 1).len(), 8);
    assert_eq!(enumerated_tables(3, 1).len(), 113);
    assert_eq!(enumerated_tables(1, 2).len(), 1);
    assert_eq!(enumerated_tables(2, 2).len(), 14);
}

#[test]
fn size_32_matches_the_pair_oracle() {
    let pairs: BTreeSet<(Vec<usize>, Vec<usize>)> = naive_32_pairs().into_iter().collect();
    assert_eq!(pairs.len(), 413);

    let found = enumerate(3, 2, &EnumerateOptions::default()).unwrap();
    assert!(!found.truncated);
    let split: BTreeSet<(Vec<usize>, Vec<usize>)> = found
        .instances
        .iter()
        .map(|inst| {
            let mut t1 = Vec::new();
            let mut t2 = Vec::new();
            for x in 0..3 {
                for y in 0..3 {
                    t1.push(inst.product(x, 0, y));
                    t2.push(inst.product(x, 1, y));
                }
            }
            (t1, t2)
        })
        .collect();
    assert_eq!(found.instances.len(), 413, "enumerator must not duplicate");
    assert_eq!(split, pairs);
}

#[test]
fn output_is_lexicographic_and_validates() {
    let found = enumerate(3, 2, &EnumerateOptions::default()).unwrap();
    for w in found.instances.windows(2) {
        assert!(w[0].raw_table() < w[1].raw_table());
    }
    for inst in &found.instances {
        assert!(inst.is_valid());
        assert!(!inst.has_gamma_table());
    }
}

#[test]
fn filters_match_a_direct_scan() {
    let all = enumerate(3, 1, &EnumerateOptions::default())
        .unwrap()
        .instances;
    let direct = |pred: &dyn Fn(&GammaSemigroup) -> bool| -> Vec<Vec<usize>> {
        all.iter()
            .filter(|i| pred(i))
            .map(|i| i.raw_table().to_vec())
            .collect()
    };
    let filtered = |f: Filter| -> Vec<Vec<usize>> {
        let opts = EnumerateOptions {
            filters: vec![f],
            limit: None,
        };
        enumerate(3, 1, &opts)
            .unwrap()
            .instances
            .iter()
            .map(|i| i.raw_table().to_vec())
            .collect()
    };
    assert_eq!(
        filtered(Filter::Commutative),
        direct(&|i| i.is_commutative())
    );
    assert_eq!(
        filtered(Filter::HasLeftUnity),
        direct(&|i| i.left_unity_pair().is_some())
    );
    assert_eq!(
        filtered(Filter::HasRightUnity),
        direct(&|i| i.right_unity_pair().is_some())
    );
    assert_eq!(
        filtered(Filter::HasBothUnities),
        direct(&|i| i.left_unity_pair().is_some() && i.right_unity_pair().is_some())
    );
    // Filters only shrink, and something survives each of them at this size.
    for f in [
        Filter::Commutative,
        Filter::HasLeftUnity,
        Filter::HasRightUnity,
        Filter::HasBothUnities,
    ] {
        let n = filtered(f).len();
        assert!(n > 0 && n < all.len());
    }
}

#[test]
fn limit_truncates_and_keeps_the_prefix() {
    let full = enumerate(2, 1, &EnumerateOptions::default()).unwrap();
    assert!(!full.truncated);
    let opts = EnumerateOptions {
        filters: vec![],
        limit: Some(3),
    };
    let cut = enumerate(2, 1, &opts).unwrap();
    assert!(cut.truncated);
    assert_eq!(cut.instances.len(), 3);
    assert_eq!(
        cut.instances
            .iter()
            .map(|i| i.raw_table().to_vec())
            .collect::<Vec<_>>(),
        full.instances[..3]
            .iter()
            .map(|i| i.raw_table().to_vec())
            .collect::<Vec<_>>()
    );
    // A limit equal to the total is not a truncation.
    let exact = enumerate(
        2,
        1,
        &EnumerateOptions {
            filters: vec![],
            limit: Some(8),
        },
    )
    .unwrap();
    assert!(!exact.truncated);
    assert_eq!(exact.instances.len(), 8);
}

#[test]
fn zero_sizes_are_input_errors() {
    assert!(enumerate(0, 1, &EnumerateOptions::default()).is_err());
    assert!(enumerate(1, 0, &EnumerateOptions::default()).is_err());
}
