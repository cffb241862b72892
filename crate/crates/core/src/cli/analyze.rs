//! The full pipeline behind `analyze` and `reproduce`.

use std::time::{Duration, Instant};

use serde_json::{json, Map, Value};

use super::report::{big, int, Report};
use crate::complexes::{
    build_buchsbaum_rim, build_eagon_northcott, hilbert_polynomial, ExactnessReport,
    GradedFreeComplex, HilbertData,
};
use crate::detmodel::{HomogeneousMatrix, HypothesisReport, InvariantSet};
use crate::error::Result;
use crate::exactalg::Field;
use crate::gradeddef::{
    certificate, column_deletion_report, CodimEstimate, ColumnDeletion, Preconditions,
    TangentReport, DEFAULT_SLICE_CAP,
};

#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    /// Seed of the random matrix (echoed) and of the generic hyperplane sections.
    pub seed: u64,
    pub slice_cap: usize,
    /// Run the degreewise exactness checks of both resolutions.
    pub exactness: bool,
    /// Estimate `V(I_{t-1})` after deleting each column (needs `c >= 3`).
    pub column_deletion: bool,
    pub timing: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        Self {
            seed: 1,
            slice_cap: DEFAULT_SLICE_CAP,
            exactness: true,
            column_deletion: true,
            timing: false,
        }
    }
}

/// Results of the resolution checks for one complex.
#[derive(Clone, Debug)]
pub struct ResolutionCheck {
    pub dd_zero: bool,
    pub exactness: Option<ExactnessReport>,
    /// Whether `dim coker d_1` equals the alternating sum of the resolution in
    /// every examined degree.
    pub hilbert_agrees: Option<bool>,
}

impl ResolutionCheck {
    pub fn run<F: Field>(cx: &GradedFreeComplex<F>, exactness: bool) -> Self {
        let dd_zero = cx.verify_dd_zero();
        if !exactness {
            return Self {
                dd_zero,
                exactness: None,
                hilbert_agrees: None,
            };
        }
        let report = cx.verify_exactness(cx.default_bound());
        let top = cx.module(0);
        let agrees = (report.lowest_degree..=report.bound).all(|v| {
            let direct = top.slice_dim(cx.n(), v) - report.rank(1, v).unwrap_or(0);
            direct as i128 == cx.hilbert_from_complex(v)
        });
        Self {
            dd_zero,
            exactness: Some(report),
            hilbert_agrees: Some(agrees),
        }
    }

    pub fn passed(&self) -> bool {
        self.dd_zero
            && self.exactness.as_ref().is_none_or(ExactnessReport::is_exact)
            && self.hilbert_agrees.unwrap_or(true)
    }
}

#[derive(Clone, Debug)]
pub struct Analysis {
    pub field: String,
    pub seed: u64,
    pub invariants: InvariantSet,
    pub hypotheses: HypothesisReport,
    pub minors: usize,
    pub eagon_northcott: ResolutionCheck,
    pub buchsbaum_rim: ResolutionCheck,
    pub hilbert: HilbertData,
    pub preconditions: Preconditions,
    pub column_deletion: Option<Vec<ColumnDeletion>>,
    pub tangent: TangentReport,
    pub timings: Vec<(&'static str, Duration)>,
    pub n: usize,
    pub b: Vec<i64>,
    pub a: Vec<i64>,
}

pub fn analyze<F: Field>(a: &HomogeneousMatrix<F>, opts: &AnalyzeOptions) -> Result<Analysis> {
    let dd = a.degree_data();
    let mut timings = Vec::new();
    let mut clock = Instant::now();
    let mut lap = |name: &'static str, timings: &mut Vec<(&'static str, Duration)>| {
        timings.push((name, clock.elapsed()));
        clock = Instant::now();
    };

    let invariants = InvariantSet::compute(dd)?;
    let hypotheses = HypothesisReport::evaluate(dd);
    lap("invariants", &mut timings);

    let en = build_eagon_northcott(a);
    let br = build_buchsbaum_rim(a);
    let minors = en.module(1).rank();
    let eagon_northcott = ResolutionCheck::run(&en, opts.exactness);
    let buchsbaum_rim = ResolutionCheck::run(&br, opts.exactness);
    let hilbert = hilbert_polynomial(&en, en.default_bound());
    lap("resolutions", &mut timings);

    let preconditions = Preconditions::gather(a, opts.seed, opts.slice_cap);
    let column_deletion = if opts.column_deletion && dd.c() >= 3 {
        Some(column_deletion_report(a, opts.slice_cap)?)
    } else {
        None
    };
    lap("codimension", &mut timings);

    let tangent = certificate(a, &preconditions)?;
    lap("tangent", &mut timings);

    Ok(Analysis {
        field: a.field().tag(),
        seed: opts.seed,
        invariants,
        hypotheses,
        minors,
        eagon_northcott,
        buchsbaum_rim,
        hilbert,
        preconditions,
        column_deletion,
        tangent,
        timings,
        n: dd.n(),
        b: dd.b().to_vec(),
        a: dd.a().to_vec(),
    })
}

fn estimate_json(e: &CodimEstimate) -> Value {
    json!({
        "label": e.label,
        "ambient": e.ambient,
        "hyperplane_cuts": e.hyperplane_cuts,
        "values": e.values,
        "dim": e.dim,
        "heuristic": e.heuristic,
    })
}

fn resolution_json(r: &ResolutionCheck) -> Value {
    let mut m = Map::new();
    m.insert("dd_zero".into(), json!(r.dd_zero));
    if let Some(x) = &r.exactness {
        m.insert("exact".into(), json!(x.is_exact()));
        m.insert("bound".into(), json!(x.bound));
        let failures: Vec<Value> = x
            .failures
            .iter()
            .map(|f| json!({"position": f.position, "degree": f.degree, "kernel": f.kernel_dim, "image": f.image_dim}))
            .collect();
        m.insert("failures".into(), Value::Array(failures));
    }
    if let Some(h) = r.hilbert_agrees {
        m.insert("hilbert_direct_agrees".into(), json!(h));
    }
    Value::Object(m)
}

impl Analysis {
    /// The verdict-bearing key/value document; `timing` adds per-stage milliseconds.
    pub fn report(&self, timing: bool) -> Report {
        let mut r = invariants_report(self.n, &self.b, &self.a, &self.invariants, &self.hypotheses);
        let t = &self.tangent;
        r.insert("field".into(), json!(self.field));
        r.insert("seed".into(), json!(self.seed));
        r.insert("minors".into(), json!(self.minors));
        r.insert("eagon_northcott".into(), resolution_json(&self.eagon_northcott));
        r.insert("buchsbaum_rim".into(), resolution_json(&self.buchsbaum_rim));
        r.insert("hilbert_polynomial".into(), json!(self.hilbert.polynomial.to_string()));
        r.insert("scheme_dim".into(), json!(self.hilbert.scheme_dim));
        r.insert("degree".into(), big(&self.hilbert.degree));
        r.insert("genus".into(), self.hilbert.genus.as_ref().map_or(Value::Null, big));
        let p = &self.preconditions;
        r.insert("standard_determinantal".into(), json!(p.standard_determinantal()));
        r.insert("good_determinantal".into(), json!(p.good_determinantal()));
        r.insert(
            "codim_estimates".into(),
            json!([estimate_json(&p.maximal_estimate), estimate_json(&p.submaximal_estimate)]),
        );
        if let Some(cols) = &self.column_deletion {
            let v: Vec<Value> = cols
                .iter()
                .map(|c| json!({"column": c.column, "empty": c.empty(), "estimate": estimate_json(&c.estimate)}))
                .collect();
            r.insert("column_deletion".into(), Value::Array(v));
        }
        r.insert("hom_G_M".into(), json!(t.hom_g_m));
        r.insert("hom_F_M".into(), json!(t.hom_f_m));
        r.insert("hom_M_M".into(), json!(t.hom_m_m));
        r.insert("ext1_R".into(), json!(t.ext1_r));
        r.insert("hom_IX_A".into(), json!(t.hom_ix_a));
        r.insert("perturbation_dim".into(), json!(t.perturbation_dim));
        r.insert("rank_edge".into(), json!(t.rank_edge));
        r.insert("ext1_A".into(), json!(t.ext1_a));
        r.insert("tangent_excess".into(), int(t.tangent_excess));
        r.insert("verdict".into(), json!(t.verdict.name()));
        if timing {
            let m: Map<String, Value> = self
                .timings
                .iter()
                .map(|(k, d)| (k.to_string(), json!(d.as_millis() as u64)))
                .collect();
            r.insert("timing_ms".into(), Value::Object(m));
        }
        r
    }
}

/// Degree data echo, closed-form invariants and hypothesis flags.
pub fn invariants_report(
    n: usize,
    b: &[i64],
    a: &[i64],
    inv: &InvariantSet,
    hyp: &HypothesisReport,
) -> Report {
    let mut r = Report::new();
    r.insert("n".into(), json!(n));
    r.insert("b".into(), json!(b));
    r.insert("a".into(), json!(a));
    r.insert("t".into(), json!(b.len()));
    r.insert("c".into(), json!(a.len() + 1 - b.len()));
    let ell: Map<String, Value> = inv
        .ell
        .iter()
        .enumerate()
        .map(|(i, &x)| (format!("ell_{}", i + 2), int(x)))
        .collect();
    r.insert("ell".into(), Value::Object(ell));
    let h: Map<String, Value> = inv
        .h
        .iter()
        .enumerate()
        .map(|(i, &x)| (format!("h_{i}"), int(x)))
        .collect();
    r.insert("h".into(), Value::Object(h));
    r.insert("lambda_c".into(), int(inv.lambda_c));
    let k: Map<String, Value> = inv
        .k
        .iter()
        .enumerate()
        .map(|(i, &x)| (format!("K_{}", i + 3), int(x)))
        .collect();
    r.insert("K".into(), Value::Object(k));
    r.insert("dimW_formula".into(), int(inv.dim_w_formula));
    r.insert("nonempty".into(), json!(hyp.nonempty));
    r.insert("exception_family".into(), json!(hyp.exception_family));
    r.insert(
        "hypotheses".into(),
        json!({
            "formula_range_known": hyp.formula_range_known,
            "formula_known_by_degrees": hyp.formula_known_by_degrees,
            "formula_conjecture_hypotheses": hyp.formula_conjecture_hypotheses,
            "dimension_theorem_applies": hyp.dimension_theorem_applies,
            "component_by_degrees": hyp.component_by_degrees,
            "component_conjecture_applies": hyp.component_conjecture_applies,
        }),
    );
    r
}
