//! End-to-end detection on implicit or parametric input, plus the surface
//! generator and plane sections.

mod detect;
mod generate;
mod implicitize;
mod precheck;
mod section;
mod tangency;

pub use detect::{detect_implicit, detect_parametric, AxisFamily, AxisReport, ClassificationReport, Evidence, SphereCenter};
pub use generate::{generate_ars, generated_axis, Directrix};
pub use implicitize::implicitize;
pub use precheck::{precheck_implicit, precheck_parametric, Certificate, PrecheckReport};
pub use section::{section_of_implicit, ConicKind, Plane, SectionFamily, SectionReport};

use crate::diffgeo::Parametrization;
use crate::error::Result;
use crate::exactmath::MultiPoly;
use crate::plucker::SampleConfig;

/// Surface given implicitly or by a rational parametrization in `(u, v)`.
#[derive(Clone, Debug, PartialEq)]
pub enum SurfaceSpec {
    Implicit(MultiPoly),
    Parametric(Parametrization),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config {
    pub seed: u64,
    /// Rows per sampling batch of the line system.
    pub samples: usize,
    /// Largest total degree tried when implicitizing.
    pub degree_bound: u32,
}

impl Default for Config {
    fn default() -> Self {
        Config { seed: 0, samples: 12, degree_bound: 12 }
    }
}

impl Config {
    pub fn sampling(&self) -> SampleConfig {
        SampleConfig { samples: self.samples, seed: self.seed }
    }
}

pub fn detect(spec: &SurfaceSpec, config: &Config) -> Result<ClassificationReport> {
    match spec {
        SurfaceSpec::Implicit(f) => detect_implicit(f, config),
        SurfaceSpec::Parametric(x) => detect_parametric(x, config),
    }
}

/// Exact section of either kind of surface; parametric input is implicitized
/// first.
pub fn cross_section(spec: &SurfaceSpec, plane: &Plane, degree_bound: u32) -> Result<SectionReport> {
    match spec {
        SurfaceSpec::Implicit(f) => section_of_implicit(f, plane),
        SurfaceSpec::Parametric(x) => section_of_implicit(&implicitize(x, degree_bound)?, plane),
    }
}
