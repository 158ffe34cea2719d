//! Parsing of the `--checks` list into check specifications.

use btr_core::bounds::{BoundParams, CheckSpec, Removed, TheoremId};
use btr_core::search::families;
use btr_core::Graph;

/// Parameter defaults shared by parametrized checks; set by CLI flags.
pub struct CheckParams {
    pub s: usize,
    pub t: usize,
    pub r: usize,
    pub h: Graph,
    pub k_const: Option<f64>,
}

impl Default for CheckParams {
    fn default() -> Self {
        CheckParams {
            s: 2,
            t: 2,
            r: 2,
            h: families::complete(3).expect("K3"),
            k_const: None,
        }
    }
}

pub const ALL_CHECK_NAMES: &[&str] = &[
    "prop1", "prop2", "prop3", "prop4", "lemma1", "c5pair", "identity-c4", "identity-in",
    "identity-in3", "identity-cw4", "hofmeister", "motzkin", "turan-step", "th0", "th1",
    "nikiforov", "corollary", "th3",
];

/// Expands a comma-separated check list (or "all") into specs.
pub fn parse_checks(list: &str, params: &CheckParams) -> Result<Vec<CheckSpec>, String> {
    let mut specs = Vec::new();
    let names: Vec<&str> = if list.trim() == "all" {
        ALL_CHECK_NAMES.to_vec()
    } else {
        list.split(',').map(str::trim).filter(|s| !s.is_empty()).collect()
    };
    for name in names {
        match name {
            "prop1" => specs.push(CheckSpec::Prop1),
            "prop2" => {
                for k in 2..=4 {
                    specs.push(CheckSpec::Prop2 { k });
                }
            }
            "prop3" => specs.push(CheckSpec::Prop3 {
                s: params.s.max(3),
                k_const: params.k_const.unwrap_or(2.0),
            }),
            "prop4" => specs.push(CheckSpec::Prop4 {
                h: params.h.clone(),
                s: params.s,
            }),
            "lemma1" => specs.push(CheckSpec::Lemma1 {
                h: params.h.clone(),
                t: params.t,
                removed: Removed::OneVertex,
            }),
            "c5pair" => specs.push(CheckSpec::C5Pair),
            "identity-c4" => specs.push(CheckSpec::IdentityC4),
            "identity-in" => specs.push(CheckSpec::IdentityIn),
            "identity-in3" => specs.push(CheckSpec::IdentityIn3),
            "identity-cw4" => specs.push(CheckSpec::IdentityCw4),
            "hofmeister" => specs.push(CheckSpec::Hofmeister),
            "motzkin" => specs.push(CheckSpec::MotzkinStraus),
            "turan-step" => specs.push(CheckSpec::TuranStep { r: params.r }),
            "th0" => specs.push(CheckSpec::Theorem {
                which: TheoremId::Th0,
                params: BoundParams {
                    s: 2,
                    t: params.t,
                    r: params.r,
                    h: families::complete(params.r + 1).map_err(|e| e.to_string())?,
                    k_const: params.k_const,
                },
            }),
            "th1" => specs.push(CheckSpec::Theorem {
                which: TheoremId::Th1,
                params: BoundParams {
                    s: params.s.max(3),
                    t: params.t.max(params.s.max(3)),
                    r: params.r,
                    h: params.h.clone(),
                    k_const: params.k_const,
                },
            }),
            "nikiforov" => specs.push(CheckSpec::Nikiforov {
                s: params.s.max(params.t),
                t: params.t.min(params.s),
            }),
            "corollary" => specs.push(CheckSpec::Corollary {
                params: BoundParams {
                    s: params.s,
                    t: params.t.max(params.s),
                    r: params.r,
                    h: params.h.clone(),
                    k_const: params.k_const,
                },
            }),
            "th3" => specs.push(CheckSpec::Th3Leading { t: params.t }),
            other => return Err(format!("unknown check {other:?}; known: {ALL_CHECK_NAMES:?} or \"all\"")),
        }
    }
    Ok(specs)
}
