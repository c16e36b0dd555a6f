//! The closed skew monoidal category of finite right `A`-sets induced by
//! the bialgebroid `G`.

mod aset;
mod closed;
mod coherence;
mod emb;
mod hopf;
mod product;
mod rank1;

pub use aset::{enumerate_asets, equivariant_maps, g_as_aset, FiniteASet, MAX_ASET_SIZE};
pub use closed::{
    closedness_check, find_left_adjoint, find_right_adjoint, internal_hom_sweep, internal_homs, ClosednessReport,
    InternalHomReport, MonAdjunction,
};
pub use coherence::{coherence_components, coherence_sweep, pentagon, CoherenceReport, SkewSetCategory};
pub use emb::{default_kappa, smm_from_unit_iso, Embedded};
pub use hopf::{hopf_checks, ClassMap, HopfReport, LeftSkew};
pub use product::{product_map, skew_product, SkewProduct};
pub use rank1::{rank1_subcategory, Rank1, Rank1Report};

use serde::Serialize;

use crate::error::SmmError;
use crate::finmon::{SmmInstance, Violation};

/// Every skew-set check on one instance, over `A`-sets of size at most `max`.
#[derive(Debug, Clone, Serialize)]
pub struct SkewSetReport {
    pub coherence: CoherenceReport,
    pub rank1: Rank1Report,
    pub internal_homs: InternalHomReport,
    pub closedness: ClosednessReport,
    pub hopf: HopfReport,
    pub embedding_isos: usize,
}

impl SkewSetReport {
    pub fn passes(&self) -> bool {
        self.coherence.passes()
            && self.rank1.passes()
            && self.internal_homs.passes()
            && self.closedness.passes()
            && self.hopf.passes()
            && self.embedding_isos > 0
    }

    /// All violations, tagged with the check they came from.
    pub fn violations(&self) -> Vec<(&'static str, &Violation)> {
        [
            ("coherence", &self.coherence.violations),
            ("rank1", &self.rank1.violations),
            ("internal-homs", &self.internal_homs.violations),
            ("closedness", &self.closedness.violations),
            ("hopf", &self.hopf.violations),
        ]
        .into_iter()
        .flat_map(|(name, vs)| vs.iter().map(move |v| (name, v)))
        .collect()
    }
}

pub fn skewset_report(inst: &SmmInstance, max: usize) -> Result<SkewSetReport, SmmError> {
    let embedded = smm_from_unit_iso(&default_kappa(inst)?, inst)?;
    Ok(SkewSetReport {
        coherence: coherence_sweep(inst, max)?,
        rank1: rank1_subcategory(inst, max)?,
        internal_homs: internal_hom_sweep(inst, max)?,
        closedness: closedness_check(inst),
        hopf: hopf_checks(inst)?,
        embedding_isos: embedded.isos.len(),
    })
}
