//! Deterministic witness populations: fuzzy subsets over a grade lattice,
//! crisp subsets, index families and index pairs.
//!
//! Every generator is exhaustive while the population fits under the
//! configured cap and falls back to seeded sampling beyond it, so runs are
//! reproducible byte for byte and never silently partial: the choice is
//! recorded next to the data it produced.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::fuzzy::{CarrierId, Grade, IFSubset};

/// Grade-pair lattice and size limits for generated witnesses.
#[derive(Clone, Debug)]
pub struct SubsetParams {
    /// Grades a generated subset may use.
    pub lattice: Vec<Grade>,
    /// Largest population generated exhaustively.
    pub cap: u64,
    /// Subsets drawn when a population is sampled instead.
    pub sample: u64,
    /// Most families evaluated per (check, instance).
    pub family_cap: u64,
    /// Most witness pairs evaluated per (check, instance).
    pub pair_cap: u64,
    /// Base seed for every sampling decision.
    pub seed: u64,
}

impl Default for SubsetParams {
    fn default() -> Self {
        SubsetParams {
            lattice: default_lattice(),
            cap: 1_000_000,
            sample: 4096,
            family_cap: 4096,
            pair_cap: 4096,
            seed: 0,
        }
    }
}

/// The default grade lattice `{0, 1/4, 1/2, 3/4, 1}`.
pub fn default_lattice() -> Vec<Grade> {
    vec![
        Grade::zero(),
        Grade::new(1, 4).unwrap(),
        Grade::new(1, 2).unwrap(),
        Grade::new(3, 4).unwrap(),
        Grade::one(),
    ]
}

/// Parses a comma-separated grade list, e.g. `0,1/2,1`.
pub fn parse_lattice(text: &str) -> Result<Vec<Grade>, crate::error::InputError> {
    let mut grades = text
        .split(',')
        .map(|t| Grade::parse(t.trim()))
        .collect::<Result<Vec<_>, _>>()?;
    grades.sort_unstable();
    grades.dedup();
    if grades.is_empty() {
        return Err(crate::error::InputError::Other(
            "grade lattice is empty".to_string(),
        ));
    }
    Ok(grades)
}

/// A generated population, remembering whether it is the whole space.
#[derive(Clone, Debug)]
pub struct Generated<T> {
    pub items: Vec<T>,
    pub exhaustive: bool,
}

/// The admissible grade pairs of a lattice, in lexicographic order.
pub fn admissible_pairs(lattice: &[Grade]) -> Vec<(Grade, Grade)> {
    let mut pairs = Vec::new();
    for &m in lattice {
        for &n in lattice {
            if m.sums_within_one(n) {
                pairs.push((m, n));
            }
        }
    }
    pairs
}

fn subset_from_digits(
    carrier: CarrierId,
    pairs: &[(Grade, Grade)],
    digit: impl Fn(usize) -> usize,
) -> IFSubset {
    let mu = (0..carrier.size()).map(|x| pairs[digit(x)].0).collect();
    let nu = (0..carrier.size()).map(|x| pairs[digit(x)].1).collect();
    IFSubset::new(carrier, mu, nu).expect("lattice pairs are admissible")
}

/// All (or a seeded sample of) fuzzy subsets over `carrier` with grades in
/// the lattice, in lexicographic order when exhaustive.
pub fn fuzzy_population(
    carrier: CarrierId,
    params: &SubsetParams,
    mut rng: ChaCha8Rng,
) -> Generated<IFSubset> {
    let pairs = admissible_pairs(&params.lattice);
    let n = carrier.size() as u32;
    let total = (pairs.len() as u64).checked_pow(n);
    match total {
        Some(total) if total <= params.cap => {
            let mut items = Vec::with_capacity(total as usize);
            for code in 0..total {
                // Base-|pairs| digits, element 0 most significant.
                items.push(subset_from_digits(carrier, &pairs, |x| {
                    let place = (pairs.len() as u64).pow(n - 1 - x as u32);
                    ((code / place) % pairs.len() as u64) as usize
                }));
            }
            Generated {
                items,
                exhaustive: true,
            }
        }
        _ => {
            let items = (0..params.sample)
                .map(|_| {
                    let digits: Vec<usize> = (0..carrier.size())
                        .map(|_| rng.gen_range(0..pairs.len()))
                        .collect();
                    subset_from_digits(carrier, &pairs, |x| digits[x])
                })
                .collect();
            Generated {
                items,
                exhaustive: false,
            }
        }
    }
}

/// All (or a seeded sample of) crisp subsets of `carrier`, by ascending
/// membership mask when exhaustive.
pub fn crisp_population(
    carrier: CarrierId,
    params: &SubsetParams,
    mut rng: ChaCha8Rng,
) -> Generated<crate::fuzzy::CrispSubset> {
    let n = carrier.size();
    assert!(n < 64, "crisp population over an implausibly large carrier");
    let total = 1u64 << n;
    let from_mask = |mask: u64| {
        crate::fuzzy::CrispSubset::new(carrier, (0..n).filter(|&i| mask >> i & 1 == 1).collect())
            .expect("mask indices are in range")
    };
    if total <= params.cap {
        Generated {
            items: (0..total).map(from_mask).collect(),
            exhaustive: true,
        }
    } else {
        Generated {
            items: (0..params.sample)
                .map(|_| from_mask(rng.gen_range(0..total)))
                .collect(),
            exhaustive: false,
        }
    }
}

/// Families of 1 to 3 distinct population indices: exhaustive (singletons,
/// then pairs, then triples, each lexicographic) under the cap, else sampled.
pub fn index_families(n: usize, cap: u64, mut rng: ChaCha8Rng) -> Generated<Vec<usize>> {
    let n64 = n as u64;
    let total = n64
        + n64.saturating_mul(n64.saturating_sub(1)) / 2
        + n64
            .saturating_mul(n64.saturating_sub(1))
            .saturating_mul(n64.saturating_sub(2))
            / 6;
    if total <= cap {
        let mut items = Vec::with_capacity(total as usize);
        for i in 0..n {
            items.push(vec![i]);
        }
        for i in 0..n {
            for j in i + 1..n {
                items.push(vec![i, j]);
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    items.push(vec![i, j, k]);
                }
            }
        }
        Generated {
            items,
            exhaustive: true,
        }
    } else {
        let items = (0..cap)
            .map(|_| {
                let size = rng.gen_range(1..=3usize.min(n));
                let mut picks = Vec::with_capacity(size);
                while picks.len() < size {
                    let i = rng.gen_range(0..n);
                    if !picks.contains(&i) {
                        picks.push(i);
                    }
                }
                picks.sort_unstable();
                picks
            })
            .collect();
        Generated {
            items,
            exhaustive: false,
        }
    }
}

/// Ordered pairs of distinct entries of `indices`: exhaustive under the cap,
/// else sampled.
pub fn index_pairs(indices: &[usize], cap: u64, mut rng: ChaCha8Rng) -> Generated<(usize, usize)> {
    let n = indices.len() as u64;
    let total = n.saturating_mul(n.saturating_sub(1));
    if total <= cap {
        let mut items = Vec::with_capacity(total as usize);
        for &i in indices {
            for &j in indices {
                if i != j {
                    items.push((i, j));
                }
            }
        }
        Generated {
            items,
            exhaustive: true,
        }
    } else {
        let items = (0..cap)
            .map(|_| loop {
                let i = indices[rng.gen_range(0..indices.len())];
                let j = indices[rng.gen_range(0..indices.len())];
                if i != j {
                    break (i, j);
                }
            })
            .collect();
        Generated {
            items,
            exhaustive: false,
        }
    }
}

/// FNV-1a over arbitrary bytes; the stable identity of an instance for
/// seeding, so witness draws survive population reordering.
pub fn fnv1a(bytes: impl IntoIterator<Item = u8>) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// Mixes seed material into a full 64-bit state (splitmix64 finalizer).
pub fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

pub fn rng_from(parts: &[u64]) -> ChaCha8Rng {
    let mut state = 0u64;
    for &p in parts {
        state = mix(state ^ p);
    }
    ChaCha8Rng::seed_from_u64(state)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuzzy::CarrierKind;

    #[test]
    fn admissible_pairs_respect_the_sum_bound() {
        let lattice = parse_lattice("0,1/2,1").unwrap();
        let pairs = admissible_pairs(&lattice);
        assert_eq!(pairs.len(), 6);
        assert!(pairs.iter().all(|&(m, n)| m.sums_within_one(n)));
        let five = default_lattice();
        assert_eq!(admissible_pairs(&five).len(), 15);
    }

    #[test]
    fn exhaustive_fuzzy_population_has_the_predicted_size() {
        let params = SubsetParams {
            lattice: parse_lattice("0,1/2,1").unwrap(),
            ..SubsetParams::default()
        };
        let carrier = CarrierId::new(CarrierKind::S, 3);
        let pop = fuzzy_population(carrier, &params, rng_from(&[0]));
        assert!(pop.exhaustive);
        assert_eq!(pop.items.len(), 6usize.pow(3));
        // Lexicographic and duplicate-free.
        for w in pop.items.windows(2) {
            assert!((w[0].mu_grades(), w[0].nu_grades()) != (w[1].mu_grades(), w[1].nu_grades()));
        }
    }

    #[test]
    fn capped_population_is_sampled_and_seed_stable() {
        let params = SubsetParams {
            lattice: parse_lattice("0,1/2,1").unwrap(),
            cap: 10,
            sample: 7,
            seed: 5,
            ..SubsetParams::default()
        };
        let carrier = CarrierId::new(CarrierKind::S, 3);
        let a = fuzzy_population(carrier, &params, rng_from(&[5, 1]));
        let b = fuzzy_population(carrier, &params, rng_from(&[5, 1]));
        assert!(!a.exhaustive);
        assert_eq!(a.items.len(), 7);
        assert_eq!(a.items, b.items);
        let c = fuzzy_population(carrier, &params, rng_from(&[6, 1]));
        assert_ne!(a.items, c.items);
    }

    #[test]
    fn families_cover_all_small_combinations() {
        let fams = index_families(4, 1000, rng_from(&[0]));
        assert!(fams.exhaustive);
        // 4 singletons + 6 pairs + 4 triples.
        assert_eq!(fams.items.len(), 14);
        let capped = index_families(100, 50, rng_from(&[0]));
        assert!(!capped.exhaustive);
        assert_eq!(capped.items.len(), 50);
        assert!(capped.items.iter().all(|f| (1..=3).contains(&f.len())));
    }

    #[test]
    fn pairs_are_ordered_and_distinct() {
        let pairs = index_pairs(&[2, 5, 7], 100, rng_from(&[0]));
        assert!(pairs.exhaustive);
        assert_eq!(pairs.items.len(), 6);
        assert!(pairs.items.iter().all(|&(i, j)| i != j));
    }
}
