//! Serializable summaries of glued surfaces, curves and polynomial cases.
//!
//! Field order is declaration order and every collection is ordered, so the
//! JSON rendering of a report is a pure function of its input.

use serde::Serialize;

use crate::bside::{BsideError, StackyCurveSpec};
use crate::invertible::{ClosedForm, InvertibleError, InvertiblePoly, WeightSystem};
use crate::quiver::{generating_quiver, QuiverStats};
use crate::surface::{BoundaryComponent, GluedSurfaceSpec, SurfaceError, SurfaceInvariants};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Match,
    Mismatch,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Match
        } else {
            Verdict::Mismatch
        }
    }

    pub fn is_match(self) -> bool {
        self == Verdict::Match
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuiverCheck {
    pub verdict: Verdict,
    pub generating: QuiverStats,
    pub exceptional: QuiverStats,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SurfaceReport {
    pub invariants: SurfaceInvariants,
    pub boundaries: Vec<BoundaryComponent>,
    /// Cycle notation of each interface's boundary permutation.
    pub boundary_permutations: Vec<String>,
    pub quiver: QuiverStats,
}

impl SurfaceReport {
    pub fn new(spec: &GluedSurfaceSpec) -> Result<Self, SurfaceError> {
        spec.validate()?;
        Ok(SurfaceReport {
            invariants: spec.invariants(),
            boundaries: spec.boundary_components(),
            boundary_permutations: spec
                .interfaces()
                .map(|i| spec.interface_boundary_permutation(i).cycle_notation())
                .collect(),
            quiver: generating_quiver(spec).stats(),
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GlueReport {
    pub input: GluedSurfaceSpec,
    #[serde(flatten)]
    pub surface: SurfaceReport,
}

impl GlueReport {
    pub fn new(spec: &GluedSurfaceSpec) -> Result<Self, SurfaceError> {
        Ok(GlueReport {
            surface: SurfaceReport::new(spec)?,
            input: spec.clone(),
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CurveReport {
    pub input: StackyCurveSpec,
    /// Derived gluing permutations in cycle notation.
    pub gluings: Vec<String>,
    pub mirror: GluedSurfaceSpec,
    #[serde(flatten)]
    pub surface: SurfaceReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quiver_check: Option<QuiverCheck>,
}

impl CurveReport {
    pub fn new(curve: &StackyCurveSpec, check_quivers: bool) -> Result<Self, BsideError> {
        let mirror = curve.mirror_surface_spec()?;
        let surface = SurfaceReport::new(&mirror).expect("mirror of a valid curve is valid");
        let quiver_check = if check_quivers {
            Some(quiver_check(curve)?)
        } else {
            None
        };
        Ok(CurveReport {
            input: curve.clone(),
            gluings: mirror.gluings.iter().map(|g| g.cycle_notation()).collect(),
            mirror,
            surface,
            quiver_check,
        })
    }
}

pub fn quiver_check(curve: &StackyCurveSpec) -> Result<QuiverCheck, BsideError> {
    let mirror = curve.mirror_surface_spec()?;
    let exceptional = curve.exceptional_quiver()?;
    let outcome = curve.check_mirror_quivers()?;
    Ok(QuiverCheck {
        verdict: Verdict::from_bool(outcome.is_ok()),
        generating: generating_quiver(&mirror).stats(),
        exceptional: exceptional.stats(),
        detail: outcome.err().map(|e| e.to_string()),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct PolyReport {
    pub poly: String,
    pub ell: u64,
    pub weights: WeightSystem,
    pub admissible: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gluings: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mirror: Option<GluedSurfaceSpec>,
    pub computed: SurfaceInvariants,
    pub closed_form: ClosedForm,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quiver_check: Option<QuiverCheck>,
}

impl PolyReport {
    /// With `detailed` unset the mirror spec and its gluings are left out.
    pub fn new(
        w: &InvertiblePoly,
        ell: u64,
        check_quivers: bool,
        detailed: bool,
    ) -> Result<Self, InvertibleError> {
        let curve = w.bside_curve(ell)?;
        let closed_form = w.closed_form_invariants(ell)?;
        let mirror = curve
            .mirror_surface_spec()
            .expect("family curves are valid");
        let computed = mirror.invariants();
        let quiver_check =
            check_quivers.then(|| quiver_check(&curve).expect("family curves are valid"));
        let quivers_ok = quiver_check.as_ref().is_none_or(|c| c.verdict.is_match());
        Ok(PolyReport {
            poly: w.to_string(),
            ell,
            weights: w.weight_system(),
            admissible: w.admissible_indices(),
            gluings: detailed.then(|| mirror.gluings.iter().map(|g| g.cycle_notation()).collect()),
            verdict: Verdict::from_bool(closed_form.matches(&computed) && quivers_ok),
            mirror: detailed.then_some(mirror),
            computed,
            closed_form,
            quiver_check,
        })
    }
}
