//! Identity registry, verification engine, and structured reports.
//!
//! Every identity is registered with builders for its two sides. Two
//! verification modes exist:
//!
//! - `SeriesExact`: both sides are constructed as truncated graded series
//!   (or plain polynomials) in canonical form and compared structurally;
//!   a mismatch reports the first differing grading exponent and the
//!   rendered coefficient difference.
//! - `RatPointEval`: both sides are evaluated exactly at seeded random
//!   rational points, resampling on poles. For identities whose
//!   coefficients are rational expressions rather than polynomials this is
//!   the only computable mode.
//!
//! Reports are plain data with a stable field layout; suite runs are
//! deterministic given the same configuration and seed, independent of the
//! parallelism degree.

mod builders;
mod registry;

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::mpoly::MPoly;
use crate::point::RatPoint;
use crate::qrat::QRat;
use crate::qseries::AlphaMode;
use crate::rational::Rational;
use crate::series::GradedSeries;
use crate::vars::{Mono, VarSet};

pub use registry::{find_identity, registry, IdentityDef, PointKind};

/// Verification mode.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Mode {
    SeriesExact,
    RatPointEval,
}

impl Mode {
    pub fn label(&self) -> &'static str {
        match self {
            Mode::SeriesExact => "series",
            Mode::RatPointEval => "points",
        }
    }
}

/// Resolved parameters for one verification run. Identities interpret the
/// fields they use; unused fields stay None and are omitted from reports.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Params {
    pub mode: Mode,
    pub order: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub alpha: Option<AlphaMode>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub r: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub s: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub points: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub trials: Option<u32>,
    pub seed: u64,
}

impl Params {
    pub fn new(order: u32) -> Params {
        Params {
            mode: Mode::SeriesExact,
            order,
            alpha: None,
            r: None,
            s: None,
            n: None,
            k: None,
            points: None,
            trials: None,
            seed: 42,
        }
    }

    pub fn with_mode(mut self, m: Mode) -> Params {
        self.mode = m;
        self
    }

    pub fn with_alpha(mut self, a: AlphaMode) -> Params {
        self.alpha = Some(a);
        self
    }

    pub fn with_rs(mut self, r: i64, s: i64) -> Params {
        self.r = Some(r);
        self.s = Some(s);
        self
    }

    pub fn with_n(mut self, n: u32) -> Params {
        self.n = Some(n);
        self
    }

    pub fn with_k(mut self, k: u32) -> Params {
        self.k = Some(k);
        self
    }

    pub fn with_points(mut self, p: u32) -> Params {
        self.points = Some(p);
        self
    }

    pub fn with_trials(mut self, t: u32) -> Params {
        self.trials = Some(t);
        self
    }

    pub fn with_seed(mut self, s: u64) -> Params {
        self.seed = s;
        self
    }

    pub(crate) fn alpha_or(&self, d: AlphaMode) -> AlphaMode {
        self.alpha.unwrap_or(d)
    }

    pub(crate) fn r_or(&self, d: i64) -> i64 {
        self.r.unwrap_or(d)
    }

    pub(crate) fn s_or(&self, d: i64) -> i64 {
        self.s.unwrap_or(d)
    }

    pub(crate) fn n_or(&self, d: u32) -> u32 {
        self.n.unwrap_or(d)
    }

    pub(crate) fn k_or(&self, d: u32) -> u32 {
        self.k.unwrap_or(d)
    }

    /// Deterministic one-line rendering, used for report sorting.
    pub fn label(&self) -> String {
        let mut s = format!("mode={} order={}", self.mode.label(), self.order);
        if let Some(a) = self.alpha {
            s.push_str(&format!(" alpha={}", a.label()));
        }
        if let Some(r) = self.r {
            s.push_str(&format!(" r={}", r));
        }
        if let Some(v) = self.s {
            s.push_str(&format!(" s={}", v));
        }
        if let Some(n) = self.n {
            s.push_str(&format!(" n={}", n));
        }
        if let Some(k) = self.k {
            s.push_str(&format!(" k={}", k));
        }
        if let Some(p) = self.points {
            s.push_str(&format!(" points={}", p));
        }
        if let Some(t) = self.trials {
            s.push_str(&format!(" trials={}", t));
        }
        s
    }
}

/// Suite configuration. `None` fields defer to each identity's documented
/// default grid.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Identity ids to run; empty means the whole registry.
    pub ids: Vec<String>,
    pub order: Option<u32>,
    pub alphas: Option<Vec<AlphaMode>>,
    pub rs_range: Option<(i64, i64)>,
    pub n_max: Option<u32>,
    pub points: Option<u32>,
    pub seed: u64,
    /// Worker threads; 0 uses the process default.
    pub jobs: usize,
    /// Machine reports carry real timings only when set; otherwise
    /// elapsedMs is zeroed so reports are byte-identical across runs.
    pub include_timings: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            ids: Vec::new(),
            order: None,
            alphas: None,
            rs_range: None,
            n_max: None,
            points: None,
            seed: 42,
            jobs: 0,
            include_timings: false,
        }
    }
}

/// The subset of the configuration echoed into machine reports.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ConfigEcho {
    pub ids: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub order: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub alphas: Option<Vec<AlphaMode>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rs_range: Option<(i64, i64)>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n_max: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub points: Option<u32>,
    pub seed: u64,
}

impl From<&SuiteConfig> for ConfigEcho {
    fn from(c: &SuiteConfig) -> Self {
        ConfigEcho {
            ids: c.ids.clone(),
            order: c.order,
            alphas: c.alphas.clone(),
            rs_range: c.rs_range,
            n_max: c.n_max,
            points: c.points,
            seed: c.seed,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum Status {
    Pass,
    Fail,
    Skipped { reason: String },
}

impl Status {
    pub fn is_pass(&self) -> bool {
        matches!(self, Status::Pass)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Mismatch {
    /// Exponent vector over the identity's grading variables (empty for
    /// polynomial identities).
    pub exponents: Vec<i64>,
    /// Canonical rendering of the coefficient difference (or, in point
    /// mode, of the value difference at the witnessing point).
    pub diff_rendered: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct IdentityReport {
    pub id: String,
    pub params: Params,
    pub truncation: u32,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub first_mismatch: Option<Mismatch>,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub points_tried: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SuiteReport {
    pub engine_version: String,
    pub seed: u64,
    pub config: ConfigEcho,
    pub reports: Vec<IdentityReport>,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.reports.iter().all(|r| r.status.is_pass())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }

    pub fn from_json(s: &str) -> serde_json::Result<SuiteReport> {
        serde_json::from_str(s)
    }
}

/// Errors from the verification dispatch itself (not from the algebra).
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum VerifyError {
    #[error("unknown identity: {0}")]
    UnknownIdentity(String),
    #[error("parameters outside the identity's schema: {0}")]
    ParamOutOfSchema(String),
}

/// One comparison produced by an identity builder.
pub enum Check {
    Series {
        lhs: GradedSeries,
        rhs: GradedSeries,
    },
    Poly {
        lhs: MPoly,
        rhs: MPoly,
    },
    /// Display-only item (reduction definitions): always passes.
    Emit { name: &'static str, value: MPoly },
}

/// Verify one identity in one mode.
pub fn verify(id: &str, params: &Params, mode: Mode) -> Result<IdentityReport, VerifyError> {
    verify_with_options(id, params, mode, false)
}

/// Verify with an optional single-coefficient perturbation of the right
/// side; a correct engine must report Fail with a located mismatch for
/// every registered identity when `mutate_rhs` is set.
pub fn verify_with_options(
    id: &str,
    params: &Params,
    mode: Mode,
    mutate_rhs: bool,
) -> Result<IdentityReport, VerifyError> {
    let def = find_identity(id).ok_or_else(|| VerifyError::UnknownIdentity(id.to_string()))?;
    if !def.modes.contains(&mode) {
        return Err(VerifyError::ParamOutOfSchema(format!(
            "identity {} does not support mode {}",
            id,
            mode.label()
        )));
    }
    let start = Instant::now();
    let mut params = params.clone();
    params.mode = mode;
    let (status, mismatch, points_tried) = match mode {
        Mode::SeriesExact => run_series_mode(def, &params, mutate_rhs),
        Mode::RatPointEval => run_point_mode(def, &params, mutate_rhs),
    };
    Ok(IdentityReport {
        id: id.to_string(),
        params: params.clone(),
        truncation: params.order,
        status,
        first_mismatch: mismatch,
        elapsed_ms: start.elapsed().as_millis() as u64,
        points_tried,
    })
}

/// Random-point verification with explicit point count and seed.
pub fn verify_at_points(
    id: &str,
    params: &Params,
    point_count: u32,
    seed: u64,
) -> Result<IdentityReport, VerifyError> {
    let p = params.clone().with_points(point_count).with_seed(seed);
    verify(id, &p, Mode::RatPointEval)
}

fn grading_set(def: &IdentityDef) -> VarSet {
    VarSet::of(def.grading)
}

fn run_series_mode(
    def: &IdentityDef,
    params: &Params,
    mutate_rhs: bool,
) -> (Status, Option<Mismatch>, Option<u32>) {
    let checks = match (def.build)(params) {
        Ok(c) => c,
        Err(e) => {
            return (
                Status::Skipped {
                    reason: e.to_string(),
                },
                None,
                None,
            )
        }
    };
    let grading = grading_set(def);
    let mut mutate = mutate_rhs;
    for check in checks {
        match check {
            Check::Emit { .. } => {}
            Check::Poly { lhs, mut rhs } => {
                if std::mem::take(&mut mutate) {
                    rhs = rhs.add(&MPoly::one(rhs.universe()));
                }
                let diff = lhs.sub(&rhs);
                if !diff.is_zero() {
                    return (
                        Status::Fail,
                        Some(Mismatch {
                            exponents: Vec::new(),
                            diff_rendered: diff.render(),
                        }),
                        None,
                    );
                }
            }
            Check::Series { lhs, mut rhs } => {
                if std::mem::take(&mut mutate) {
                    let m = grading
                        .iter()
                        .next()
                        .map(Mono::var)
                        .unwrap_or(Mono::ONE);
                    let mut bump = GradedSeries::zero(rhs.universe(), rhs.grading(), rhs.order());
                    bump.add_term(m, MPoly::one(rhs.universe()));
                    rhs = rhs.add(&bump).expect("perturbation grading");
                }
                if let Some((mono, diff)) = lhs.first_mismatch(&rhs) {
                    return (
                        Status::Fail,
                        Some(Mismatch {
                            exponents: mono.exponents_in(grading),
                            diff_rendered: diff.render(),
                        }),
                        None,
                    );
                }
            }
        }
    }
    (Status::Pass, None, None)
}

/// Maximum consecutive pole resamples before giving up.
const MAX_RESAMPLES: u32 = 200;

fn run_point_mode(
    def: &IdentityDef,
    params: &Params,
    mutate_rhs: bool,
) -> (Status, Option<Mismatch>, Option<u32>) {
    // Rows of exact (lhs, rhs) values per point.
    type RowEval = Box<dyn Fn(&RatPoint) -> Result<Vec<(Rational, Rational)>, Error>>;
    let eval: RowEval = match def.point {
        PointKind::None => {
            return (
                Status::Skipped {
                    reason: "identity has no point-evaluation mode".into(),
                },
                None,
                None,
            )
        }
        PointKind::Custom(prep) => match prep(params) {
            Ok(f) => f,
            Err(e) => {
                return (
                    Status::Skipped {
                        reason: e.to_string(),
                    },
                    None,
                    None,
                )
            }
        },
        PointKind::Coeffwise => {
            let checks = match (def.build)(params) {
                Ok(c) => c,
                Err(e) => {
                    return (
                        Status::Skipped {
                            reason: e.to_string(),
                        },
                        None,
                        None,
                    )
                }
            };
            Box::new(move |pt: &RatPoint| {
                let mut rows = Vec::new();
                for check in &checks {
                    match check {
                        Check::Emit { .. } => {}
                        Check::Poly { lhs, rhs } => {
                            rows.push((lhs.eval(pt)?, rhs.eval(pt)?));
                        }
                        Check::Series { lhs, rhs } => {
                            let mut keys: Vec<Mono> = lhs
                                .iter()
                                .map(|(m, _)| *m)
                                .chain(rhs.iter().map(|(m, _)| *m))
                                .collect();
                            keys.sort();
                            keys.dedup();
                            for k in keys {
                                rows.push((lhs.coeff(&k).eval(pt)?, rhs.coeff(&k).eval(pt)?));
                            }
                        }
                    }
                }
                Ok(rows)
            })
        }
    };

    let count = params.points.unwrap_or_else(|| (def.point_count)(params));
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed ^ fnv1a(def.id));
    let mut tried = 0u32;
    for _ in 0..count {
        let mut resamples = 0u32;
        let rows = loop {
            let pt = RatPoint::sample(&mut rng);
            match eval(&pt) {
                Ok(rows) => break rows,
                Err(Error::PoleAtPoint) => {
                    resamples += 1;
                    if resamples > MAX_RESAMPLES {
                        return (
                            Status::Skipped {
                                reason: "resample budget exhausted near poles".into(),
                            },
                            None,
                            Some(tried),
                        );
                    }
                }
                Err(e) => {
                    return (
                        Status::Skipped {
                            reason: e.to_string(),
                        },
                        None,
                        Some(tried),
                    );
                }
            }
        };
        tried += 1;
        for (i, (lhs, mut rhs)) in rows.into_iter().enumerate() {
            if mutate_rhs && i == 0 {
                rhs += Rational::from(num::BigInt::from(1));
            }
            if lhs != rhs {
                let diff = lhs - rhs;
                return (
                    Status::Fail,
                    Some(Mismatch {
                        exponents: vec![i as i64],
                        diff_rendered: QRat::from_rational(&diff).render(),
                    }),
                    Some(tried),
                );
            }
        }
    }
    (Status::Pass, None, Some(tried))
}

fn fnv1a(s: &str) -> u64 {
    let mut h = 0xcbf29ce484222325u64;
    for b in s.as_bytes() {
        h ^= *b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

/// Run a configured suite over the registry. Unknown ids become Skipped
/// entries; per-identity errors never abort the suite. The aggregated
/// report is sorted by id then parameter label and is independent of the
/// parallelism degree.
pub fn run_suite(config: &SuiteConfig) -> SuiteReport {
    let mut jobs: Vec<(String, Params, Mode)> = Vec::new();
    let mut skipped: Vec<IdentityReport> = Vec::new();

    let ids: Vec<String> = if config.ids.is_empty() {
        registry().iter().map(|d| d.id.to_string()).collect()
    } else {
        config.ids.clone()
    };
    for id in ids {
        match find_identity(&id) {
            None => skipped.push(IdentityReport {
                id: id.clone(),
                params: Params::new(0).with_seed(config.seed),
                truncation: 0,
                status: Status::Skipped {
                    reason: format!("unknown identity: {}", id),
                },
                first_mismatch: None,
                elapsed_ms: 0,
                points_tried: None,
            }),
            Some(def) => {
                for params in (def.grid)(config) {
                    for mode in def.modes {
                        jobs.push((id.clone(), params.clone(), *mode));
                    }
                }
            }
        }
    }

    let run_all = |jobs: &[(String, Params, Mode)]| -> Vec<IdentityReport> {
        use rayon::prelude::*;
        jobs.par_iter()
            .map(|(id, params, mode)| {
                verify(id, params, *mode).unwrap_or_else(|e| IdentityReport {
                    id: id.clone(),
                    params: params.clone(),
                    truncation: params.order,
                    status: Status::Skipped {
                        reason: e.to_string(),
                    },
                    first_mismatch: None,
                    elapsed_ms: 0,
                    points_tried: None,
                })
            })
            .collect()
    };

    let mut reports = if config.jobs > 0 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .expect("thread pool");
        pool.install(|| run_all(&jobs))
    } else {
        run_all(&jobs)
    };
    reports.extend(skipped);
    reports.sort_by(|a, b| {
        a.id.cmp(&b.id)
            .then_with(|| a.params.label().cmp(&b.params.label()))
    });
    if !config.include_timings {
        for r in reports.iter_mut() {
            r.elapsed_ms = 0;
        }
    }
    SuiteReport {
        engine_version: crate::ENGINE_VERSION.to_string(),
        seed: config.seed,
        config: ConfigEcho::from(config),
        reports,
    }
}

/// Convenience: ids in registry order with their anchors, for listings.
pub fn list_identities() -> Vec<(&'static str, &'static str)> {
    let mut v: Vec<_> = registry().iter().map(|d| (d.id, d.anchor)).collect();
    v.sort();
    v
}

pub use builders::alpha_qpow;
