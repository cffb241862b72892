//! Graded deformation invariants of determinantal schemes.

mod certificate;
mod codim;
mod hom;
mod slices;
mod tangent;

pub use hom::{ext1_r_dim, ext1_r_from_resolution, hom_mm_dim, restriction_data, RestrictionData};
pub use slices::{
    module_presentation, module_slice_dim, quotient_ring, ring_slice_dim, GradedModulePresentation,
    GradedQuotient, QuotientRingSlices, QuotientSlice, SliceBasis,
};
pub use tangent::{
    edge_image, edge_map_rank, ext1_a_dim, hom_ix_a_dim, perturbation_dim, MinorDerivatives,
};
pub use codim::{
    codim_estimate, column_deletion_report, estimate_from_hilbert_values, estimate_from_values, maximal_minors_estimate,
    sectioned_estimate, submaximal_minors_estimate, CodimEstimate, ColumnDeletion,
    DEFAULT_SLICE_CAP,
};
pub use certificate::{certificate, Preconditions, Refusal, TangentReport, Verdict};
