//! Exact-arithmetic toolkit for tournaments: skew-adjacency determinants and
//! Pfaffians over the integers, switching classes, diamond censuses, the
//! alternating one-vertex-extension family `L_n`, blowup constructions, and
//! membership recognizers for the determinant-bounded classes `D_k` — plus an
//! exhaustive verification harness that replays every structural claim the
//! library relies on at small orders.
//!
//! Everything is exact: no floating point anywhere.

pub mod blowup;
pub mod canon;
pub mod classify;
pub mod diamonds;
pub mod error;
pub mod linalg;
pub mod lnfamily;
pub mod patterns;
pub mod switching;
pub mod tournament;
pub mod verify;

pub use blowup::{
    blowup, blowup_det_formula, detect_blowup_structure, nine_det_witness, transitive_blowup,
    BlowupSpec,
};
pub use canon::{canonical_form, canonical_labeling};
pub use classify::{
    classify, in_dk, max_subdet, recognize_d1, recognize_d3, recognize_d5, six_profile, BaseKind,
    BlowupCertificate, ClassifyResult,
};
pub use diamonds::{check_delta_bounds, diamond_census, is_diamond, DiamondCensus};
pub use error::{Error, Result};
pub use linalg::{determinant, pfaffian, skew_matrix, SkewMatrix};
pub use lnfamily::{is_ln, ln_det, make_ln, max_onevertex_ext_det, q_value};
pub use patterns::{covertices, psi, revertices, theta, PsiPattern};
pub use switching::{switch, switching_canonical, switching_equivalent_labeled};
pub use tournament::{Tournament, VertexSet, MAX_VERTICES};
