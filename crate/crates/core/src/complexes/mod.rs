//! Eagon-Northcott and Buchsbaum-Rim resolutions, their verification,
//! Hilbert data, and the comparison map between them.

mod complex;
mod hilbert;
mod module;
mod polymatrix;
mod tau;

pub use complex::{
    build_buchsbaum_rim, build_eagon_northcott, reduced_sum, ComplexKind, ExactnessFailure,
    ExactnessReport, GradedFreeComplex,
};
pub use hilbert::{hilbert_polynomial, render_rational, HilbertData, RationalPolynomial};
pub use module::{BasisLabel, GradedFreeModule, SliceLayout};
pub use polymatrix::PolyMatrix;
pub use tau::{build_tau, verify_tau, ChainMap, TauReport};
