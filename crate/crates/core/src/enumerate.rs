//! Exhaustive enumeration of gamma-semigroups of a given size.
//!
//! Tables are filled cell by cell in flat-index order with candidate values in
//! increasing order, so completed tables appear in lexicographic order. After
//! every assignment all five-letter words whose two evaluation trees are fully
//! determined are compared, which prunes most of the tree long before a table
//! is complete. No gamma tables are generated.

use crate::error::InputError;
use crate::semigroup::GammaSemigroup;
use std::ops::ControlFlow;

/// Post-filters applied to each completed table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Filter {
    Commutative,
    HasLeftUnity,
    HasRightUnity,
    HasBothUnities,
}

impl Filter {
    pub fn accepts(&self, s: &GammaSemigroup) -> bool {
        match self {
            Filter::Commutative => s.is_commutative(),
            Filter::HasLeftUnity => s.left_unity_pair().is_some(),
            Filter::HasRightUnity => s.right_unity_pair().is_some(),
            Filter::HasBothUnities => {
                s.left_unity_pair().is_some() && s.right_unity_pair().is_some()
            }
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Filter::Commutative => "commutative",
            Filter::HasLeftUnity => "has-left-unity",
            Filter::HasRightUnity => "has-right-unity",
            Filter::HasBothUnities => "has-both-unities",
        }
    }
}

impl std::str::FromStr for Filter {
    type Err = InputError;

    fn from_str(s: &str) -> Result<Self, InputError> {
        match s {
            "commutative" => Ok(Filter::Commutative),
            "has-left-unity" => Ok(Filter::HasLeftUnity),
            "has-right-unity" => Ok(Filter::HasRightUnity),
            "has-both-unities" => Ok(Filter::HasBothUnities),
            other => Err(InputError::Other(format!("unknown filter {other}"))),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct EnumerateOptions {
    pub filters: Vec<Filter>,
    /// Maximum number of instances to yield; `None` means unbounded.
    pub limit: Option<usize>,
}

/// The collected result of an enumeration run.
#[derive(Debug, Clone)]
pub struct Enumeration {
    pub instances: Vec<GammaSemigroup>,
    /// True when the limit stopped the search before it was exhausted.
    pub truncated: bool,
}

const UNSET: usize = usize::MAX;

struct Search<'a, F> {
    s: usize,
    g: usize,
    table: Vec<usize>,
    filters: &'a [Filter],
    yield_fn: F,
}

impl<F: FnMut(GammaSemigroup) -> ControlFlow<()>> Search<'_, F> {
    #[inline]
    fn idx(&self, x: usize, a: usize, y: usize) -> usize {
        (x * self.g + a) * self.s + y
    }

    /// True when no fully determined word pair disagrees.
    fn consistent(&self) -> bool {
        for x in 0..self.s {
            for a in 0..self.g {
                for y in 0..self.s {
                    let xy = self.table[self.idx(x, a, y)];
                    for b in 0..self.g {
                        for z in 0..self.s {
                            let yz = self.table[self.idx(y, b, z)];
                            if xy == UNSET || yz == UNSET {
                                continue;
                            }
                            let lhs = self.table[self.idx(xy, b, z)];
                            let rhs = self.table[self.idx(x, a, yz)];
                            if lhs != UNSET && rhs != UNSET && lhs != rhs {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    fn fill(&mut self, cell: usize) -> ControlFlow<()> {
        if cell == self.table.len() {
            // The scan after the last assignment covered every word, so the
            // completed table is associative.
            let inst =
                GammaSemigroup::new(self.s, self.g, self.table.clone(), None).expect("in range");
            if self.filters.iter().all(|f| f.accepts(&inst)) {
                return (self.yield_fn)(inst);
            }
            return ControlFlow::Continue(());
        }
        for v in 0..self.s {
            self.table[cell] = v;
            if self.consistent() {
                self.fill(cell + 1)?;
            }
        }
        self.table[cell] = UNSET;
        ControlFlow::Continue(())
    }
}

/// Streams every instance in lexicographic table order into `visit`.
/// Returns `false` when `visit` stopped the search early.
pub fn enumerate_each(
    s_size: usize,
    g_size: usize,
    filters: &[Filter],
    visit: impl FnMut(GammaSemigroup) -> ControlFlow<()>,
) -> Result<bool, InputError> {
    if s_size == 0 {
        return Err(InputError::ZeroSize { what: "s_size" });
    }
    if g_size == 0 {
        return Err(InputError::ZeroSize { what: "g_size" });
    }
    let mut search = Search {
        s: s_size,
        g: g_size,
        table: vec![UNSET; s_size * g_size * s_size],
        filters,
        yield_fn: visit,
    };
    Ok(search.fill(0).is_continue())
}

/// Collects the enumeration, honoring `opts.limit`.
pub fn enumerate(
    s_size: usize,
    g_size: usize,
    opts: &EnumerateOptions,
) -> Result<Enumeration, InputError> {
    let mut instances = Vec::new();
    let completed = enumerate_each(s_size, g_size, &opts.filters, |inst| {
        if opts.limit == Some(instances.len()) {
            return ControlFlow::Break(());
        }
        instances.push(inst);
        ControlFlow::Continue(())
    })?;
    Ok(Enumeration {
        instances,
        truncated: !completed,
    })
}
