//! Per-instance evaluation state: the operator context plus lazily built,
//! shared witness populations and their classifications.

use std::sync::OnceLock;

use rand_chacha::ChaCha8Rng;

use crate::format::serialize_gsg;
use crate::fuzzy::{
    classify_crisp, classify_fuzzy, CarrierId, CarrierKind, CrispClass, CrispSubset, FuzzyClass,
    IFSubset,
};
use crate::operator::Context;
use crate::verify::subsets::{
    crisp_population, fnv1a, fuzzy_population, rng_from, Generated, SubsetParams,
};

fn slot(kind: CarrierKind) -> usize {
    match kind {
        CarrierKind::S => 0,
        CarrierKind::L => 1,
        CarrierKind::R => 2,
    }
}

/// One instance under test, with caches every check shares.
pub struct InstanceData {
    ctx: Context,
    params: SubsetParams,
    table_hash: u64,
    gsg: OnceLock<String>,
    crisp: [OnceLock<Generated<CrispSubset>>; 3],
    crisp_flags: [OnceLock<Vec<CrispClass>>; 3],
    fuzzy: [OnceLock<Generated<IFSubset>>; 3],
    fuzzy_flags: [OnceLock<Vec<FuzzyClass>>; 3],
}

impl InstanceData {
    pub fn new(ctx: Context, params: SubsetParams) -> Self {
        let s = ctx.s();
        let mut bytes: Vec<u8> = Vec::new();
        bytes.extend(s.s_size().to_le_bytes());
        bytes.extend(s.g_size().to_le_bytes());
        bytes.extend(s.raw_table().iter().flat_map(|v| v.to_le_bytes()));
        if let Some(gt) = s.raw_gamma_table() {
            bytes.push(1);
            bytes.extend(gt.iter().flat_map(|v| v.to_le_bytes()));
        }
        let table_hash = fnv1a(bytes);
        InstanceData {
            ctx,
            params,
            table_hash,
            gsg: OnceLock::new(),
            crisp: Default::default(),
            crisp_flags: Default::default(),
            fuzzy: Default::default(),
            fuzzy_flags: Default::default(),
        }
    }

    pub fn ctx(&self) -> &Context {
        &self.ctx
    }

    pub fn params(&self) -> &SubsetParams {
        &self.params
    }

    pub fn carrier(&self, kind: CarrierKind) -> CarrierId {
        self.ctx.carrier(kind)
    }

    /// The instance in its text format, for witness blocks.
    pub fn gsg(&self) -> &str {
        self.gsg.get_or_init(|| serialize_gsg(self.ctx.s()))
    }

    pub fn both_unities(&self) -> bool {
        self.ctx.unities().both()
    }

    pub fn commutative(&self) -> bool {
        self.ctx.s().is_commutative()
    }

    /// A deterministic generator tied to this instance's table and an extra
    /// salt, independent of the instance's position in any population.
    pub fn rng(&self, salt: u64) -> ChaCha8Rng {
        rng_from(&[self.params.seed, self.table_hash, salt])
    }

    pub fn crisp(&self, kind: CarrierKind) -> &Generated<CrispSubset> {
        self.crisp[slot(kind)].get_or_init(|| {
            crisp_population(
                self.carrier(kind),
                &self.params,
                self.rng(slot(kind) as u64),
            )
        })
    }

    pub fn crisp_flags(&self, kind: CarrierKind) -> &[CrispClass] {
        self.crisp_flags[slot(kind)].get_or_init(|| {
            self.crisp(kind)
                .items
                .iter()
                .map(|p| classify_crisp(p, &self.ctx))
                .collect()
        })
    }

    pub fn fuzzy(&self, kind: CarrierKind) -> &Generated<IFSubset> {
        self.fuzzy[slot(kind)].get_or_init(|| {
            fuzzy_population(
                self.carrier(kind),
                &self.params,
                self.rng(16 + slot(kind) as u64),
            )
        })
    }

    pub fn fuzzy_flags(&self, kind: CarrierKind) -> &[FuzzyClass] {
        self.fuzzy_flags[slot(kind)].get_or_init(|| {
            self.fuzzy(kind)
                .items
                .iter()
                .map(|a| classify_fuzzy(a, &self.ctx))
                .collect()
        })
    }

    /// Indices of the fuzzy witnesses over `kind` passing `filter`.
    pub fn fuzzy_matching(
        &self,
        kind: CarrierKind,
        filter: impl Fn(&FuzzyClass) -> bool,
    ) -> Vec<usize> {
        self.fuzzy_flags(kind)
            .iter()
            .enumerate()
            .filter(|(_, f)| filter(f))
            .map(|(i, _)| i)
            .collect()
    }
}
