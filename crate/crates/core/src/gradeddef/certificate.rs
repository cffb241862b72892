//! The component certificate: numeric tangent data plus the verdict logic.

use std::fmt;

use super::codim::{maximal_minors_estimate, submaximal_minors_estimate, CodimEstimate};
use super::hom::{hom_mm_dim, restriction_data};
use super::slices::{module_presentation, quotient_ring};
use super::tangent::{edge_map_rank, ext1_a_dim, hom_ix_a_dim, perturbation_dim};
use crate::detmodel::{dim_w_formula, nonempty, HomogeneousMatrix};
use crate::error::{Error, Result};
use crate::exactalg::Field;

/// Why no verdict was issued.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Refusal {
    /// The degree data admit no nonempty determinantal scheme.
    Empty,
    /// `codim I_t(A) != c` (or the Eagon-Northcott complex is not exact).
    NotStandardDeterminantal,
    /// `V(I_{t-1}(A))` was not confirmed to have codimension at least `c + 1`.
    NotGoodDeterminantal,
    /// A codimension estimate reached the slice cap before settling.
    Undetermined,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// `ext1_A = 0`, `hom_IX_A = λ_c + ΣK` and `dim X >= 1`: the closure of
    /// `W(b; a)` is a generically smooth component of the Hilbert scheme.
    ComponentCertified,
    /// `ext1_A = 0` and `hom_IX_A > λ_c + ΣK`: only the dimension of `W` is settled.
    DimWOnly,
    /// `n = c`: the tests are run, but the statement concerns the postulation Hilbert scheme.
    GradalgCaveat,
    Inconclusive,
    Refused(Refusal),
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Self::ComponentCertified => "COMPONENT_CERTIFIED",
            Self::DimWOnly => "DIM_W_ONLY",
            Self::GradalgCaveat => "GRADALG_CAVEAT",
            Self::Inconclusive => "INCONCLUSIVE",
            Self::Refused(Refusal::Empty) => "EMPTY",
            Self::Refused(Refusal::NotStandardDeterminantal) => "NOT_STANDARD_DETERMINANTAL",
            Self::Refused(Refusal::NotGoodDeterminantal) => "NOT_GOOD_DETERMINANTAL",
            Self::Refused(Refusal::Undetermined) => "CODIM_UNDETERMINED",
        }
    }

    pub fn is_refusal(&self) -> bool {
        matches!(self, Self::Refused(_))
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Evidence for the certificate's preconditions.
#[derive(Clone, Debug)]
pub struct Preconditions {
    pub nonempty: bool,
    /// `V(I_t(A))` cut by `n - c + 1` generic hyperplanes; empty iff `codim I_t = c`.
    pub maximal_estimate: CodimEstimate,
    /// `V(I_{t-1}(A))` cut by `n - c` generic hyperplanes; empty iff codimension `>= c + 1`.
    pub submaximal_estimate: CodimEstimate,
}

impl Preconditions {
    pub fn gather<F: Field>(a: &HomogeneousMatrix<F>, seed: u64, cap: usize) -> Self {
        Self {
            nonempty: nonempty(a.degree_data()),
            maximal_estimate: maximal_minors_estimate(a, seed, cap),
            submaximal_estimate: submaximal_minors_estimate(a, seed, cap),
        }
    }

    /// `None` when the estimate hit the slice cap.
    pub fn standard_determinantal(&self) -> Option<bool> {
        self.maximal_estimate.examined_locus_empty()
    }

    /// `None` when the estimate hit the slice cap.
    pub fn good_determinantal(&self) -> Option<bool> {
        self.submaximal_estimate.examined_locus_empty()
    }

    pub fn refusal(&self) -> Option<Refusal> {
        if !self.nonempty {
            return Some(Refusal::Empty);
        }
        match (self.standard_determinantal(), self.good_determinantal()) {
            (Some(false), _) => Some(Refusal::NotStandardDeterminantal),
            (None, _) | (_, None) => Some(Refusal::Undetermined),
            (_, Some(false)) => Some(Refusal::NotGoodDeterminantal),
            _ => None,
        }
    }
}

/// Dimensions entering the certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentReport {
    pub hom_g_m: usize,
    pub hom_f_m: usize,
    pub hom_m_m: usize,
    pub ext1_r: usize,
    pub hom_ix_a: usize,
    pub perturbation_dim: usize,
    pub rank_edge: usize,
    pub ext1_a: usize,
    pub formula_lambda: i128,
    pub tangent_excess: i128,
    pub verdict: Verdict,
}

/// Runs every tangent computation and decides the verdict.
///
/// `ext1_r` comes from the exact sequence with `hom_m_m` solved for
/// directly; the kernel of the restriction map must give the same
/// `hom_m_m`, otherwise an internal error is returned.
pub fn certificate<F: Field>(a: &HomogeneousMatrix<F>, pre: &Preconditions) -> Result<TangentReport> {
    let dd = a.degree_data();
    let formula_lambda = dim_w_formula(dd)?;
    let mut m = module_presentation(a);
    let rho = restriction_data(a, &mut m);
    let hom_m_m = hom_mm_dim(a);
    if rho.hom_mm() != hom_m_m {
        return Err(Error::Internal(format!(
            "Hom(M, M)_0 is {} from the restriction map but {hom_m_m} from the endomorphism system",
            rho.hom_mm()
        )));
    }
    let ext1_r = rho.hom_g_m + hom_m_m - rho.hom_f_m;
    let mut ring = quotient_ring(a);
    let hom_ix_a = hom_ix_a_dim(a, &mut ring);
    let rank_edge = edge_map_rank(a, &mut ring);
    let ext1_a = ext1_a_dim(ext1_r, rank_edge)?;
    let tangent_excess = hom_ix_a as i128 - formula_lambda;

    let verdict = if let Some(r) = pre.refusal() {
        Verdict::Refused(r)
    } else if dd.n() == dd.c() {
        Verdict::GradalgCaveat
    } else if ext1_a > 0 {
        Verdict::Inconclusive
    } else if tangent_excess == 0 {
        Verdict::ComponentCertified
    } else if tangent_excess > 0 {
        Verdict::DimWOnly
    } else {
        Verdict::Inconclusive
    };
    Ok(TangentReport {
        hom_g_m: rho.hom_g_m,
        hom_f_m: rho.hom_f_m,
        hom_m_m,
        ext1_r,
        hom_ix_a,
        perturbation_dim: perturbation_dim(a),
        rank_edge,
        ext1_a,
        formula_lambda,
        tangent_excess,
        verdict,
    })
}
