//! The bialgebroids `G = μT(A)` and `F = Q(A)δ` of a finite SMM, their
//! pairing and smash product, and the correspondence with source-regular
//! bialgebroids.

mod bialgebroid;
mod grouplike;
mod iso;
mod pairing;
mod reconstruct;
mod smash;
mod tensor;

pub use bialgebroid::{build_f, build_g, check_bialgebroid, BialgebroidData, Side, BIALGEBROID_AXIOMS};
pub use grouplike::{grouplike_bijection_check, GrouplikeReport};
pub use iso::{apply_smm_iso, check_bialgebroid_morphism, check_smm_iso, find_smm_isos, InducedMorphism, SmmIso};
pub use pairing::{pairing, pairing_matrix, pairing_property_check, PairingReport};
pub use reconstruct::{
    g_round_trip, inclusion, reconstruct_smm, reconstruction_iso, search_adjunctions, validate, AdjunctionData,
    Reconstruction,
};
pub use smash::{invariants_check, smash_product, InvariantsReport, SmashProduct};
pub use tensor::{product, Link, QuotientTensor};

use crate::error::SmmError;
use crate::finmon::SmmInstance;

/// Both bialgebroids and the pairing matrix, as JSON.
pub fn bialgebroid_dump(inst: &SmmInstance) -> Result<serde_json::Value, SmmError> {
    Ok(serde_json::json!({
        "G": build_g(inst)?.to_json(),
        "F": build_f(inst)?.to_json(),
        "pairing": pairing_matrix(inst),
    }))
}
