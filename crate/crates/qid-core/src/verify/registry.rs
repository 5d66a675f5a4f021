//! The identity registry: ids, source anchors, supported modes, parameter
//! grids and builder entry points.
//!
//! Anchors are short verbatim phrases locating each identity in the source
//! literature; `cmd list` prints them next to the ids.
//!
//! Default grids reproduce the acceptance envelope of each identity;
//! explicit suite configuration (order, alpha set, r/s range, n bound,
//! point count) overrides them uniformly.

use crate::error::Result;
use crate::qseries::AlphaMode;
use crate::vars::Var;

use super::builders;
use super::{Check, Mode, Params, SuiteConfig};

/// Point-evaluation support of an identity.
pub enum PointKind {
    /// No point mode registered.
    None,
    /// Evaluate the coefficients of the series built for SeriesExact mode
    /// at sampled points (cross-check of the exact proof).
    Coeffwise,
    /// Identity-specific evaluator for sides whose coefficients are
    /// rational expressions rather than polynomials.
    Custom(fn(&Params) -> Result<builders::PointEvalFn>),
}

pub struct IdentityDef {
    pub id: &'static str,
    pub anchor: &'static str,
    pub modes: &'static [Mode],
    /// Grading variables, in universe order; empty for polynomial
    /// identities.
    pub grading: &'static [Var],
    pub grid: fn(&SuiteConfig) -> Vec<Params>,
    pub build: fn(&Params) -> Result<Vec<Check>>,
    pub point: PointKind,
    /// Default point count for RatPointEval. For identities whose only
    /// proof is point mode this exceeds the documented total degree of the
    /// coefficients in the non-q variables; for Both-mode identities the
    /// series comparison is the proof and the point run is a smaller
    /// cross-check.
    pub point_count: fn(&Params) -> u32,
}

const SERIES_ONLY: &[Mode] = &[Mode::SeriesExact];
const BOTH: &[Mode] = &[Mode::SeriesExact, Mode::RatPointEval];
const POINTS_ONLY: &[Mode] = &[Mode::RatPointEval];

fn order_of(cfg: &SuiteConfig, default: u32) -> u32 {
    cfg.order.unwrap_or(default)
}

fn alphas_of(cfg: &SuiteConfig, default: &[AlphaMode], allow_inf: bool) -> Vec<AlphaMode> {
    let base: Vec<AlphaMode> = match &cfg.alphas {
        Some(v) => v.clone(),
        None => default.to_vec(),
    };
    base.into_iter()
        .filter(|a| allow_inf || !matches!(a, AlphaMode::Infinity))
        .collect()
}

fn rs_of(cfg: &SuiteConfig, default: (i64, i64)) -> Vec<(i64, i64)> {
    let (lo, hi) = cfg.rs_range.unwrap_or(default);
    let mut v = Vec::new();
    for r in lo..=hi {
        for s in lo..=hi {
            v.push((r, s));
        }
    }
    v
}

fn ns_of(cfg: &SuiteConfig, cap: u32) -> Vec<u32> {
    let hi = cfg.n_max.unwrap_or(cap).min(cap.max(cfg.n_max.unwrap_or(0)));
    (0..=hi).collect()
}

const ALPHAS_WIDE: &[AlphaMode] = &[
    AlphaMode::Integer(0),
    AlphaMode::Integer(1),
    AlphaMode::Integer(2),
    AlphaMode::Integer(3),
    AlphaMode::Integer(4),
    AlphaMode::Symbolic,
];

const ALPHAS_NARROW: &[AlphaMode] = &[
    AlphaMode::Integer(0),
    AlphaMode::Integer(1),
    AlphaMode::Integer(2),
    AlphaMode::Integer(3),
    AlphaMode::Symbolic,
];

const ALPHAS_SPOT: &[AlphaMode] = &[AlphaMode::Integer(2), AlphaMode::Symbolic];

const RS_SPOT: &[(i64, i64)] = &[(0, 0), (1, -1), (-2, 2)];

fn base(cfg: &SuiteConfig, order: u32) -> Params {
    Params::new(order).with_seed(cfg.seed)
}

fn grid_qpoch_inversion(cfg: &SuiteConfig) -> Vec<Params> {
    ns_of(cfg, 12)
        .into_iter()
        .map(|n| base(cfg, 0).with_n(n))
        .collect()
}

fn grid_qde(cfg: &SuiteConfig) -> Vec<Params> {
    let mut v = Vec::new();
    for n in ns_of(cfg, 6) {
        for (r, s) in rs_of(cfg, (-2, 2)) {
            for a in alphas_of(cfg, ALPHAS_WIDE, false) {
                v.push(base(cfg, 0).with_n(n).with_rs(r, s).with_alpha(a));
            }
        }
    }
    v
}

fn grid_ak(cfg: &SuiteConfig) -> Vec<Params> {
    let mut v = Vec::new();
    for k in 1..=4u32 {
        for (r, s) in RS_SPOT {
            for a in alphas_of(cfg, ALPHAS_SPOT, false) {
                v.push(base(cfg, 0).with_n(6).with_k(k).with_rs(*r, *s).with_alpha(a));
            }
        }
    }
    v
}

fn grid_gf_main(cfg: &SuiteConfig) -> Vec<Params> {
    let order = order_of(cfg, 8);
    let mut v = Vec::new();
    for (r, s) in rs_of(cfg, (-2, 2)) {
        for a in alphas_of(cfg, ALPHAS_WIDE, false) {
            v.push(base(cfg, order).with_rs(r, s).with_alpha(a));
        }
    }
    v
}

fn grid_gf_cauchy(cfg: &SuiteConfig) -> Vec<Params> {
    let n = cfg.n_max.unwrap_or(4).min(4);
    alphas_of(cfg, ALPHAS_WIDE, false)
        .into_iter()
        .map(|a| {
            let mut p = base(cfg, n).with_n(n).with_alpha(a);
            if let Some(pts) = cfg.points {
                p = p.with_points(pts);
            }
            p
        })
        .collect()
}

fn grid_single(cfg: &SuiteConfig) -> Vec<Params> {
    vec![base(cfg, order_of(cfg, 8))]
}

fn grid_leibniz(cfg: &SuiteConfig) -> Vec<Params> {
    vec![base(cfg, 0).with_n(4).with_trials(50)]
}

fn grid_da_ratio(cfg: &SuiteConfig) -> Vec<Params> {
    (1..=4u32)
        .map(|n| base(cfg, order_of(cfg, 8)).with_n(n))
        .collect()
}

fn grid_toperator(cfg: &SuiteConfig) -> Vec<Params> {
    (0..=4u32)
        .map(|k| base(cfg, order_of(cfg, 8)).with_k(k))
        .collect()
}

fn grid_rogers(cfg: &SuiteConfig) -> Vec<Params> {
    let order = order_of(cfg, 8);
    let mut v = Vec::new();
    for (r, s) in rs_of(cfg, (-1, 1)) {
        for a in alphas_of(cfg, ALPHAS_NARROW, false) {
            v.push(base(cfg, order).with_rs(r, s).with_alpha(a));
        }
    }
    v
}

fn grid_alpha_only(cfg: &SuiteConfig) -> Vec<Params> {
    let order = order_of(cfg, 8);
    alphas_of(cfg, ALPHAS_NARROW, false)
        .into_iter()
        .map(|a| base(cfg, order).with_alpha(a))
        .collect()
}

fn grid_chu(cfg: &SuiteConfig) -> Vec<Params> {
    ns_of(cfg, 10)
        .into_iter()
        .map(|n| base(cfg, 0).with_n(n))
        .collect()
}

fn grid_mixed_main(cfg: &SuiteConfig) -> Vec<Params> {
    let order = order_of(cfg, 8);
    let mut v = Vec::new();
    for (r, s) in rs_of(cfg, (-1, 1)) {
        for a in alphas_of(cfg, ALPHAS_NARROW, false) {
            v.push(base(cfg, order).with_rs(r, s).with_alpha(a));
        }
    }
    v
}

fn grid_rs_operator(cfg: &SuiteConfig) -> Vec<Params> {
    ns_of(cfg, 10)
        .into_iter()
        .map(|n| base(cfg, 0).with_n(n))
        .collect()
}

fn grid_reductions(cfg: &SuiteConfig) -> Vec<Params> {
    let mut v = Vec::new();
    for n in ns_of(cfg, 6) {
        for (r, s) in RS_SPOT {
            for a in alphas_of(cfg, ALPHAS_SPOT, false) {
                v.push(base(cfg, 0).with_n(n).with_rs(*r, *s).with_alpha(a));
            }
        }
    }
    v
}

fn pts_crosscheck(_p: &Params) -> u32 {
    12
}

fn pts_gf_cauchy(p: &Params) -> u32 {
    // coefficient of t^n has total degree at most 5n across x, y, z, a, A
    (5 * p.n.unwrap_or(4) + 1).max(25)
}

fn pts_none(_p: &Params) -> u32 {
    0
}

/// The full registry, in declaration order.
pub fn registry() -> &'static [IdentityDef] {
    &[
        IdentityDef {
            id: "qpoch-inversion",
            anchor: "use frequently the following relation",
            modes: SERIES_ONLY,
            grading: &[],
            grid: grid_qpoch_inversion,
            build: builders::build_qpoch_inversion,
            point: PointKind::None,
            point_count: pts_none,
        },
        IdentityDef {
            id: "qde-membership",
            anchor: "can be expanded in terms of",
            modes: SERIES_ONLY,
            grading: &[],
            grid: grid_qde,
            build: builders::build_qde_membership,
            point: PointKind::None,
            point_count: pts_none,
        },
        IdentityDef {
            id: "ak-recursion",
            anchor: "The iteration then reveals that",
            modes: SERIES_ONLY,
            grading: &[],
            grid: grid_ak,
            build: builders::build_ak_recursion,
            point: PointKind::None,
            point_count: pts_none,
        },
        IdentityDef {
            id: "gf-main",
            anchor: "be the polynomials defined as in",
            modes: BOTH,
            grading: &[Var::T],
            grid: grid_gf_main,
            build: builders::build_gf_main,
            point: PointKind::Coeffwise,
            point_count: pts_crosscheck,
        },
        IdentityDef {
            id: "gf-cauchy-2phi1",
            anchor: "we recover the Cauchy polynomials",
            modes: POINTS_ONLY,
            grading: &[Var::T],
            grid: grid_gf_cauchy,
            build: builders::build_unsupported,
            point: PointKind::Custom(builders::prep_gf_cauchy),
            point_count: pts_gf_cauchy,
        },
        IdentityDef {
            id: "gf-y0",
            anchor: "we get the concluding remarks of",
            modes: SERIES_ONLY,
            grading: &[Var::T],
            grid: grid_gf_main,
            build: builders::build_gf_y0,
            point: PointKind::None,
            point_count: pts_none,
        },
        IdentityDef {
            id: "gf-Fn",
            anchor: "reduce to trivariate $q$-polynomials",
            modes: SERIES_ONLY,
            grading: &[Var::T],
            grid: grid_single,
            build: builders::build_gf_fn,
            point: PointKind::None,
            point_count: pts_none,
        },
        IdentityDef {
            id: "leibniz",
            anchor: "The Leibniz rule for $D_a$",
            modes: SERIES_ONLY,
            grading: &[],
            grid: grid_leibniz,
            build: builders::build_leibniz,
            point: PointKind::None,
            point_count: pts_none,
        },
        IdentityDef {
            id: "da-ratio",
            anchor: "straightforward, but important",
            modes: SERIES_ONLY,
            grading: &[Var::A],
            grid: grid_da_ratio,
            build: builders::build_da_ratio,
            point: PointKind::None,
            point_count: pts_none,
        },
        IdentityDef {
            id: "toperator-lemma",
            anchor: "For $k\\in\\mathbb{N}_0$",
            modes: SERIES_ONLY,
            grading: &[Var::T, Var::Omega],
            grid: grid_toperator,
            build: builders::build_toperator,
            point: PointKind::None,
            point_count: pts_none,
        },
        IdentityDef {
            id: "rogers-main",
            anchor: "Rogers formula for generalized $q$-polynomials",
            modes: SERIES_ONLY,
            grading: &[Var::T, Var::Omega],
            grid: grid_rogers,
            build: builders::build_rogers_main,
            point: PointKind::None,
            point_count: pts_none,
        },
        IdentityDef {
            id: "rogers-r0s0",
            anchor: "extended Rogers formulas",
            modes: SERIES_ONLY,
            grading: &[Var::T, Var::Omega],
            grid: grid_alpha_only,
            build: builders::build_rogers_r0s0,
            point: PointKind::None,
            point_count: pts_none,
        },
        IdentityDef {
            id: "rogers-Fn",
            anchor: "As a special case of Theorem",
            modes: SERIES_ONLY,
            grading: &[Var::T, Var::Omega],
            grid: grid_single,
            build: builders::build_rogers_fn,
            point: PointKind::None,
            point_count: pts_none,
        },
        IdentityDef {
            id: "srivastava-agarwal",
            anchor: "For $\\max\\{|t|, |xt|\\}<1$",
            modes: SERIES_ONLY,
            grading: &[Var::T],
            grid: grid_single,
            build: builders::build_srivastava_agarwal,
            point: PointKind::None,
            point_count: pts_none,
        },
        IdentityDef {
            id: "chu-vandermonde",
            anchor: "$q$-Chu-Vandermonde formula will be needed",
            modes: SERIES_ONLY,
            grading: &[],
            grid: grid_chu,
            build: builders::build_chu_vandermonde,
            point: PointKind::None,
            point_count: pts_none,
        },
        IdentityDef {
            id: "mixed-main",
            anchor: "mixed generating function for generalized $q$-polynomials",
            modes: SERIES_ONLY,
            grading: &[Var::T, Var::X],
            grid: grid_mixed_main,
            build: builders::build_mixed_main,
            point: PointKind::None,
            point_count: pts_none,
        },
        IdentityDef {
            id: "mixed-b0",
            anchor: "Taking equation (\\ref{dqt})",
            modes: SERIES_ONLY,
            grading: &[Var::T, Var::X],
            grid: grid_single,
            build: builders::build_mixed_b0,
            point: PointKind::None,
            point_count: pts_none,
        },
        IdentityDef {
            id: "mixed-Fn",
            anchor: "Mixed generating function for trivariate",
            modes: BOTH,
            grading: &[Var::T, Var::X],
            grid: grid_single,
            build: builders::build_mixed_fn,
            point: PointKind::Coeffwise,
            point_count: pts_crosscheck,
        },
        IdentityDef {
            id: "rs-operator",
            anchor: "The generalized Rogers-Szeg\\\"o polynomials",
            modes: SERIES_ONLY,
            grading: &[],
            grid: grid_rs_operator,
            build: builders::build_rs_operator,
            point: PointKind::None,
            point_count: pts_none,
        },
        IdentityDef {
            id: "reductions",
            anchor: "Particular cases of known results",
            modes: SERIES_ONLY,
            grading: &[],
            grid: grid_reductions,
            build: builders::build_reductions,
            point: PointKind::None,
            point_count: pts_none,
        },
    ]
}

pub fn find_identity(id: &str) -> Option<&'static IdentityDef> {
    registry().iter().find(|d| d.id == id)
}
