//! Per-subcommand executors and the operation coverage table.
//!
//! Every executor decodes its input, runs the requested operation, and
//! returns a list of checks plus a machine-readable result. Structural
//! problems in the input surface as [`CliError::Decode`] (exit code 2),
//! domain rejections as [`CliError::Domain`] (exit code 3).

use gencx_core::dirac::Dirac;
use gencx_core::gclin::{
    annihilator_duality, bfield_equivalent, decompose_gc_linear, graph_invariance_check,
    is_cocr, is_cr, is_gc_linear, normalize, normalize_uniqueness_dimension,
    verify_gc_linear_witness, FStructure,
};
use gencx_core::gkahler::{
    bihermitian_from_gk, eps_pm, f_structures_of, gk_from_bihermitian, gk_to_tamed, holo_poisson,
    im_eps1_identity, subspace_identities, tamed_to_gk,
};
use gencx_core::json::{self, AnyDirac, DecodeError};
use gencx_core::liecourant::{
    closed_invariant_forms, invariant_normal_form_criteria, is_integrable_invariant,
    multiplication_map_check, projection_cocr_check, so4_borel_example,
};
use gencx_core::verify::Check;
use serde_json::{json, Value};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read input: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed JSON: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("invalid input structure: {0}")]
    Decode(#[from] DecodeError),
    #[error("{0}")]
    Domain(#[from] gencx_core::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) | CliError::Parse(_) | CliError::Decode(_) | CliError::Usage(_) => 2,
            CliError::Domain(_) => 3,
        }
    }
}

type OpOutput = (Vec<Check>, Option<Value>);

fn need_input<'v>(input: Option<&'v Value>, command: &str) -> Result<&'v Value, CliError> {
    input.ok_or_else(|| CliError::Usage(format!("`{command}` requires --input FILE")))
}

fn field<'v>(value: &'v Value, name: &str) -> Result<&'v Value, CliError> {
    value.get(name).ok_or_else(|| {
        CliError::Decode(DecodeError { path: name.into(), message: "missing field".into() })
    })
}

pub fn check_dirac(input: Option<&Value>) -> Result<OpOutput, CliError> {
    let value = need_input(input, "check-dirac")?;
    let l = json::dirac_from_value(value, "$")??;
    let mut checks = Vec::new();
    match l {
        AnyDirac::Q(l) => {
            let ee = l.decompose()?;
            checks.push(Check::pass(
                "maximal_isotropic",
                format!("dimension {} in K^{}", l.space().dim(), 2 * l.v_dim()),
            ));
            checks.push(Check::flag(
                "decompose_build_round_trip",
                Dirac::build(&ee.e, &ee.eps)? == l,
                format!("E of dimension {}, ε of rank {}", ee.e.dim(), ee.eps.rank()),
            ));
            checks.push(Check::flag(
                "kernel_identities",
                l.kernel_identities_hold(&ee),
                "V ∩ L = ker ε and *π(L) = Ann(V ∩ L)",
            ));
            checks.push(Check::pass(
                "classification",
                format!(
                    "poisson: {}, presymplectic: {}",
                    l.poisson_bivector().is_some(),
                    l.presymplectic_form().is_some()
                ),
            ));
            Ok((checks, Some(json::dirac_q_to_value(&l))))
        }
        AnyDirac::Qi(l) => {
            let ee = l.decompose()?;
            checks.push(Check::pass(
                "maximal_isotropic",
                format!("dimension {} in K^{}", l.space().dim(), 2 * l.v_dim()),
            ));
            checks.push(Check::flag(
                "decompose_build_round_trip",
                Dirac::build(&ee.e, &ee.eps)? == l,
                format!("E of dimension {}, ε of rank {}", ee.e.dim(), ee.eps.rank()),
            ));
            checks.push(Check::flag(
                "kernel_identities",
                l.kernel_identities_hold(&ee),
                "V ∩ L = ker ε and *π(L) = Ann(V ∩ L)",
            ));
            checks.push(Check::pass(
                "classification",
                format!(
                    "poisson: {}, presymplectic: {}",
                    l.poisson_bivector().is_some(),
                    l.presymplectic_form().is_some()
                ),
            ));
            Ok((checks, Some(json::dirac_qi_to_value(&l))))
        }
    }
}

fn transport(
    input: Option<&Value>,
    command: &str,
    push: bool,
) -> Result<OpOutput, CliError> {
    let value = need_input(input, command)?;
    let l = json::dirac_from_value(field(value, "L")?, "$.L")??;
    let f_val = field(value, "f")?;
    let mut checks = Vec::new();
    let result = match l {
        AnyDirac::Q(l) => {
            let f = json::mat_q_from_value(f_val, "$.f")?;
            let (a, b) = if push {
                (l.pushforward_formula(&f)?, l.pushforward_def(&f)?)
            } else {
                (l.pullback_formula(&f)?, l.pullback_def(&f)?)
            };
            checks.push(Check::flag("formula_matches_definition", a == b, "exact equality"));
            json::dirac_q_to_value(&a)
        }
        AnyDirac::Qi(l) => {
            let f = json::mat_qi_from_value(f_val, "$.f")?;
            let (a, b) = if push {
                (l.pushforward_formula(&f)?, l.pushforward_def(&f)?)
            } else {
                (l.pullback_formula(&f)?, l.pullback_def(&f)?)
            };
            checks.push(Check::flag("formula_matches_definition", a == b, "exact equality"));
            json::dirac_qi_to_value(&a)
        }
    };
    Ok((checks, Some(result)))
}

pub fn pushforward(input: Option<&Value>) -> Result<OpOutput, CliError> {
    transport(input, "pushforward", true)
}

pub fn pullback(input: Option<&Value>) -> Result<OpOutput, CliError> {
    transport(input, "pullback", false)
}

pub fn bfield(input: Option<&Value>) -> Result<OpOutput, CliError> {
    let value = need_input(input, "bfield")?;
    let l = json::dirac_from_value(field(value, "L")?, "$.L")??;
    let b_val = field(value, "B")?;
    let mut checks = Vec::new();
    let result = match l {
        AnyDirac::Q(l) => {
            let b = json::mat_q_from_value(b_val, "$.B")?;
            let moved = l.b_field(&b)?;
            let ee = l.decompose()?;
            let moved_ee = moved.decompose()?;
            checks.push(Check::flag(
                "shears_epsilon_by_restriction",
                moved_ee.eps == &ee.eps + &b.restrict_form(ee.e.basis()),
                "ε ↦ ε + B|_E",
            ));
            checks.push(Check::flag(
                "inverse_transform_returns",
                moved.b_field(&-&b)? == l,
                "exp(−B) ∘ exp(B) = id",
            ));
            json::dirac_q_to_value(&moved)
        }
        AnyDirac::Qi(l) => {
            let b = json::mat_qi_from_value(b_val, "$.B")?;
            let moved = l.b_field(&b)?;
            let ee = l.decompose()?;
            let moved_ee = moved.decompose()?;
            checks.push(Check::flag(
                "shears_epsilon_by_restriction",
                moved_ee.eps == &ee.eps + &b.restrict_form(ee.e.basis()),
                "ε ↦ ε + B|_E",
            ));
            checks.push(Check::flag(
                "inverse_transform_returns",
                moved.b_field(&-&b)? == l,
                "exp(−B) ∘ exp(B) = id",
            ));
            json::dirac_qi_to_value(&moved)
        }
    };
    Ok((checks, Some(result)))
}

pub fn poisson_quotient(input: Option<&Value>) -> Result<OpOutput, CliError> {
    let value = need_input(input, "poisson-quotient")?;
    let l = json::dirac_from_value(value, "$")??;
    let mut checks = Vec::new();
    let result = match l {
        AnyDirac::Q(l) => {
            let (phi, lp) = l.poisson_quotient()?;
            checks.push(Check::flag(
                "quotient_is_poisson",
                lp.poisson_bivector().is_some(),
                format!("quotient dimension {}", lp.v_dim()),
            ));
            checks.push(Check::flag("pulls_back_to_input", lp.pullback_def(&phi)? == l, "exact"));
            checks.push(match l.poisson_bivector() {
                Some(_) => Check::flag(
                    "projection_is_poisson_morphism",
                    Dirac::is_poisson_morphism(&phi, &l, &lp)?,
                    "bivector and push-forward characterizations agree",
                ),
                None => Check::skip(
                    "projection_is_poisson_morphism",
                    "input is not Poisson; the morphism predicate does not apply",
                ),
            });
            json!({ "phi": json::mat_q_to_value(&phi), "quotient": json::dirac_q_to_value(&lp) })
        }
        AnyDirac::Qi(l) => {
            let (phi, lp) = l.poisson_quotient()?;
            checks.push(Check::flag(
                "quotient_is_poisson",
                lp.poisson_bivector().is_some(),
                format!("quotient dimension {}", lp.v_dim()),
            ));
            checks.push(Check::flag("pulls_back_to_input", lp.pullback_def(&phi)? == l, "exact"));
            checks.push(match l.poisson_bivector() {
                Some(_) => Check::flag(
                    "projection_is_poisson_morphism",
                    Dirac::is_poisson_morphism(&phi, &l, &lp)?,
                    "bivector and push-forward characterizations agree",
                ),
                None => Check::skip(
                    "projection_is_poisson_morphism",
                    "input is not Poisson; the morphism predicate does not apply",
                ),
            });
            json!({ "phi": json::mat_qi_to_value(&phi), "quotient": json::dirac_qi_to_value(&lp) })
        }
    };
    Ok((checks, Some(result)))
}

pub fn gc_check(input: Option<&Value>) -> Result<OpOutput, CliError> {
    let value = need_input(input, "gc-check")?;
    let gc = json::gc_from_value(value, "$")??;
    let e = gc.cocr_space();
    let cap = e.intersect(&e.conjugate())?;
    let checks = vec![
        Check::pass(
            "generalized_complex",
            "L ∩ L̄ = 0 and the (E, ε) characterization agree".to_string(),
        ),
        Check::flag("cocr_space", is_cocr(e)?, format!("E + Ē = V^C, dim E = {}", e.dim())),
        Check::flag(
            "annihilator_duality",
            annihilator_duality(e)?,
            format!("Ann(E) is CR: {}", is_cr(&e.annihilator())?),
        ),
        Check::pass(
            "type_data",
            format!(
                "dim(E ∩ Ē) = {}, poisson rank {}",
                cap.dim(),
                gc.poisson_bivector().rank()
            ),
        ),
    ];
    let mut result = json::gc_to_value(&gc);
    let map = result.as_object_mut().expect("object");
    map.insert("J".into(), json::mat_q_to_value(gc.endo()));
    Ok((checks, Some(result)))
}

pub fn normal_form(input: Option<&Value>) -> Result<OpOutput, CliError> {
    let value = need_input(input, "normal-form")?;
    let gc = json::gc_from_value(field(value, "L")?, "$.L")??;
    let f_mat = json::mat_q_from_value(field(value, "F")?, "$.F")?;
    let f = FStructure::from_endo(f_mat)?;
    let cert = normalize(&gc, &f)?;
    let dim = normalize_uniqueness_dimension(&f)?;
    let checks = vec![
        Check::pass("normalizes", "exp(B)(L) is in normal form for F".to_string()),
        Check::flag("uniqueness", dim == 0, format!("solution space dimension {dim}")),
    ];
    let result = json!({
        "B": json::mat_q_to_value(&cert.b),
        "omega": json::mat_q_to_value(&cert.omega),
    });
    Ok((checks, Some(result)))
}

pub fn gc_linear(input: Option<&Value>) -> Result<OpOutput, CliError> {
    let value = need_input(input, "gc-linear")?;
    let source = json::gc_from_value(field(value, "source")?, "$.source")??;
    let target = json::gc_from_value(field(value, "target")?, "$.target")??;
    let t = json::mat_q_from_value(field(value, "t")?, "$.t")?;
    let linear = is_gc_linear(&t, &source, &target)?;
    let mut checks =
        vec![Check::pass("is_gc_linear", if linear { "true" } else { "false" }.to_string())];
    if linear {
        let witness = decompose_gc_linear(&t, &source, &target)?;
        checks.push(Check::flag(
            "factorization_witness",
            verify_gc_linear_witness(&t, &source, &target, &witness)?,
            format!(
                "symplectic block {}→{}, complex block {}→{}",
                witness.d_v.dim(),
                witness.d_w.dim(),
                witness.v_prime.dim(),
                witness.w_prime.dim()
            ),
        ));
    } else {
        checks.push(Check::skip("factorization_witness", "map is not generalized complex linear"));
    }
    if t.inverse().is_some() && source.v_dim() == target.v_dim() {
        let equivalent = bfield_equivalent(&source.pushforward_iso(&t)?, &target)?.is_some();
        checks.push(Check::flag(
            "bfield_equivalence_consistent",
            equivalent == linear,
            format!("push-forward B-field equivalent to target: {equivalent}"),
        ));
    } else {
        checks.push(Check::skip("bfield_equivalence_consistent", "map is not invertible"));
    }
    Ok((checks, Some(json!({ "gc_linear": linear }))))
}

pub fn graph_invariance(input: Option<&Value>) -> Result<OpOutput, CliError> {
    let value = need_input(input, "graph-invariance")?;
    let source = json::gc_from_value(field(value, "source")?, "$.source")??;
    let target = json::gc_from_value(field(value, "target")?, "$.target")??;
    let t = json::mat_q_from_value(field(value, "t")?, "$.t")?;
    let invariant = graph_invariance_check(&t, &source, &target)?;
    let linear = is_gc_linear(&t, &source, &target)?;
    let checks = vec![Check::pass(
        "flags",
        format!("graph_invariance: {invariant}, is_gc_linear: {linear}"),
    )];
    Ok((checks, Some(json!({ "graph_invariance": invariant, "gc_linear": linear }))))
}

pub fn gk_from_bihermitian_cmd(input: Option<&Value>) -> Result<OpOutput, CliError> {
    let value = need_input(input, "gk-from-bihermitian")?;
    let bh = json::bihermitian_from_value(value, "$")??;
    let pair = gk_from_bihermitian(bh)?;
    let ids = subspace_identities(&pair)?;
    let round = bihermitian_from_gk(pair.l1(), pair.l2())?;
    let (f1, f2) = f_structures_of(&pair)?;
    let checks = vec![
        Check::pass("generalized_kaehler", "commuting pair with positive −J₁J₂".to_string()),
        Check::flag("subspace_identities", ids.all_hold(), "kernel and eigenspace identities"),
        Check::flag(
            "bihermitian_round_trip",
            round.bihermitian() == pair.bihermitian(),
            "exact",
        ),
        Check::pass(
            "f_structures",
            format!("rank F1 = {}, rank F2 = {}", f1.endo().rank(), f2.endo().rank()),
        ),
    ];
    let result = json!({
        "h_plus_dim": pair.h_plus().dim(),
        "h_minus_dim": pair.h_minus().dim(),
        "vcal_dim": pair.vcal().dim(),
        "L1": json::gc_to_value(pair.l1()),
        "L2": json::gc_to_value(pair.l2()),
    });
    Ok((checks, Some(result)))
}

pub fn gk_to_tamed_cmd(input: Option<&Value>) -> Result<OpOutput, CliError> {
    let value = need_input(input, "gk-to-tamed")?;
    let bh = json::bihermitian_from_value(value, "$")??;
    let pair = gk_from_bihermitian(bh)?;
    let (tamed, residual) = gk_to_tamed(&pair)?;
    let checks = vec![Check::pass(
        "tamed_type",
        format!("residual B is {}", if residual.is_zero() { "zero" } else { "nonzero" }),
    )];
    let mut result = json::tamed_to_value(&tamed);
    let map = result.as_object_mut().expect("object");
    map.insert("B_residual".into(), json::mat_q_to_value(&residual));
    Ok((checks, Some(result)))
}

pub fn tamed_to_gk_cmd(input: Option<&Value>) -> Result<OpOutput, CliError> {
    let value = need_input(input, "tamed-to-gk")?;
    let tamed = json::tamed_from_value(value, "$")??;
    let pair = tamed_to_gk(&tamed)?;
    let ids = subspace_identities(&pair)?;
    let checks = vec![
        Check::pass("correspondence_identities", "adjoint and closed-form identities hold"),
        Check::flag("subspace_identities", ids.all_hold(), "kernel and eigenspace identities"),
    ];
    let mut result = json::bihermitian_to_value(pair.bihermitian());
    let map = result.as_object_mut().expect("object");
    map.insert("h_plus_dim".into(), json!(pair.h_plus().dim()));
    map.insert("h_minus_dim".into(), json!(pair.h_minus().dim()));
    map.insert("vcal_dim".into(), json!(pair.vcal().dim()));
    Ok((checks, Some(result)))
}

pub fn holo_poisson_cmd(input: Option<&Value>) -> Result<OpOutput, CliError> {
    let value = need_input(input, "holo-poisson")?;
    let tamed = json::tamed_from_value(value, "$")??;
    let pair = tamed_to_gk(&tamed)?;
    let hp = holo_poisson(&pair)?;
    let mut checks = vec![
        Check::pass("four_expressions_agree", "all closed forms and the definitional route"),
        Check::pass("image_is_vcal", format!("rank {}", hp.eta_plus.rank())),
    ];
    let jp = pair.bihermitian().j_plus();
    let jm = pair.bihermitian().j_minus();
    if (jp - jm).inverse().is_some() {
        let pm = eps_pm(&pair)?;
        checks.push(Check::flag(
            "im_eps1_identity",
            im_eps1_identity(&pair)?,
            format!("ε± solved on a domain of dimension {}", pm.domain.dim()),
        ));
    } else {
        checks.push(Check::skip("im_eps1_identity", "J+ − J− is singular"));
    }
    Ok((checks, Some(json!({ "eta_plus": json::mat_q_to_value(&hp.eta_plus) }))))
}

pub fn lie_example(input: Option<&Value>, name: Option<&str>) -> Result<OpOutput, CliError> {
    if let Some(value) = input {
        let g = json::lie_algebra_from_value(value, "$")??;
        let mut checks = vec![
            Check::pass(
                "lie_algebra",
                format!("dimension {}, antisymmetry and Jacobi hold", g.dim()),
            ),
            Check::pass(
                "closed_invariant_forms",
                format!("space of dimension {}", closed_invariant_forms(&g)?.len()),
            ),
        ];
        let result = if let Some(l_val) = value.get("L") {
            let l = json::dirac_from_value(l_val, "$.L")??;
            let integrable = match &l {
                AnyDirac::Q(l) => is_integrable_invariant(&g, l)?,
                AnyDirac::Qi(l) => is_integrable_invariant(&g, l)?,
            };
            checks.push(Check::pass(
                "invariant_integrability",
                format!("closed under the invariant Courant bracket: {integrable}"),
            ));
            json!({ "dim": g.dim(), "integrable": integrable })
        } else {
            json!({ "dim": g.dim() })
        };
        return Ok((checks, Some(result)));
    }
    match name.unwrap_or("so4") {
        "so4" => {
            let (g, data, gc, f) = so4_borel_example()?;
            let mult = multiplication_map_check()?;
            let proj = projection_cocr_check()?;
            let criteria = invariant_normal_form_criteria(&g, &f, &data.omega)?;
            let checks = vec![
                Check::flag(
                    "borel_normal_form",
                    gc.normal_form_omega(&f)?.is_some(),
                    "L(𝔠, iω) is in normal form",
                ),
                Check::flag(
                    "borel_integrable",
                    is_integrable_invariant(&g, gc.dirac())?,
                    "all basis brackets stay inside",
                ),
                Check::flag(
                    "multiplication_map",
                    mult.half_scaled && !mult.unscaled && mult.diagonal_cocr,
                    format!(
                        "half-scaled: {}, unscaled: {}, diagonal co-CR: {}",
                        mult.half_scaled, mult.unscaled, mult.diagonal_cocr
                    ),
                ),
                Check::flag(
                    "projection_to_quotient",
                    proj.complex_structure && proj.gc_linear && proj.image_dim == 2,
                    format!("complex structure of dimension {}", proj.image_dim),
                ),
                Check::flag(
                    "integrability_criteria",
                    criteria.clause_conjunction() && criteria.direct && criteria.agree(),
                    "clausewise and direct checks agree",
                ),
            ];
            Ok((checks, Some(json!({ "algebra_dim": g.dim(), "borel_dim": data.borel.dim() }))))
        }
        other => Err(CliError::Usage(format!(
            "unknown example {other:?}; available: so4 (or pass --input with structure constants)"
        ))),
    }
}

pub fn verify_all(seed: u64) -> Vec<Check> {
    gencx_core::verify::verify_all(seed)
}

/// Which operations each subcommand exercises; the unit test below checks
/// that every operation of every module is reachable from at least one
/// subcommand.
#[cfg_attr(not(test), allow(dead_code))]
pub const OP_COVERAGE: &[(&str, &[&str])] = &[
    (
        "check-dirac",
        &[
            "exactla.canonicalize",
            "exactla.kernel",
            "exactla.image",
            "exactla.contains",
            "dirac.pairing",
            "dirac.build",
            "dirac.decompose",
            "dirac.is_maximal_isotropic",
            "dirac.is_poisson",
            "dirac.is_presymplectic",
        ],
    ),
    (
        "pushforward",
        &[
            "dirac.pushforward_def",
            "dirac.pushforward_formula",
            "exactla.preimage",
            "exactla.intersect",
            "exactla.sum",
        ],
    ),
    ("pullback", &["dirac.pullback_def", "dirac.pullback_formula"]),
    ("bfield", &["dirac.bfield"]),
    ("poisson-quotient", &["dirac.poisson_quotient", "dirac.is_poisson_morphism"]),
    (
        "gc-check",
        &[
            "gclin.gc_from_dirac",
            "gclin.is_cr",
            "gclin.is_cocr",
            "gclin.annihilator_duality",
            "exactla.conjugate",
            "exactla.real_points",
        ],
    ),
    ("normal-form", &["gclin.normalize", "gclin.normal_form_build", "gclin.f_split"]),
    (
        "gc-linear",
        &[
            "gclin.is_gc_linear",
            "gclin.decompose_gc_linear",
            "gclin.f_from_split",
            "gclin.is_f_linear",
            "gclin.bfield_equivalent",
        ],
    ),
    ("graph-invariance", &["gclin.graph_invariance_check"]),
    (
        "gk-from-bihermitian",
        &[
            "gkahler.gk_from_bihermitian",
            "gkahler.bihermitian_from_gk",
            "gkahler.subspace_identities",
            "gkahler.f_structures_of",
            "exactla.is_positive_definite",
        ],
    ),
    ("gk-to-tamed", &["gkahler.gk_to_tamed"]),
    ("tamed-to-gk", &["gkahler.tamed_to_gk"]),
    (
        "holo-poisson",
        &["gkahler.holo_poisson", "gkahler.eps_pm", "gkahler.im_eps1_identity"],
    ),
    (
        "lie-example",
        &[
            "liecourant.courant_bracket",
            "liecourant.is_integrable_invariant",
            "liecourant.so4_borel_example",
            "liecourant.multiplication_map_check",
            "liecourant.projection_cocr_check",
            "liecourant.invariant_normal_form_criteria",
        ],
    ),
    (
        "verify-all",
        &[
            "cli.run",
            "gclin.type_decompose",
            "gkahler.two_of_three",
            "gkahler.first_product",
            "gkahler.second_product",
        ],
    ),
];

/// Every operation of every primary module.
#[cfg_attr(not(test), allow(dead_code))]
pub const ALL_OPS: &[&str] = &[
    "exactla.canonicalize",
    "exactla.sum",
    "exactla.intersect",
    "exactla.kernel",
    "exactla.image",
    "exactla.contains",
    "exactla.preimage",
    "exactla.conjugate",
    "exactla.real_points",
    "exactla.is_positive_definite",
    "dirac.pairing",
    "dirac.build",
    "dirac.decompose",
    "dirac.is_maximal_isotropic",
    "dirac.pushforward_def",
    "dirac.pushforward_formula",
    "dirac.pullback_def",
    "dirac.pullback_formula",
    "dirac.bfield",
    "dirac.poisson_quotient",
    "dirac.is_poisson",
    "dirac.is_presymplectic",
    "dirac.is_poisson_morphism",
    "gclin.is_cr",
    "gclin.is_cocr",
    "gclin.annihilator_duality",
    "gclin.f_split",
    "gclin.f_from_split",
    "gclin.is_f_linear",
    "gclin.gc_from_dirac",
    "gclin.normal_form_build",
    "gclin.normalize",
    "gclin.is_gc_linear",
    "gclin.decompose_gc_linear",
    "gclin.bfield_equivalent",
    "gclin.graph_invariance_check",
    "gclin.type_decompose",
    "gkahler.gk_from_bihermitian",
    "gkahler.bihermitian_from_gk",
    "gkahler.subspace_identities",
    "gkahler.f_structures_of",
    "gkahler.tamed_to_gk",
    "gkahler.gk_to_tamed",
    "gkahler.holo_poisson",
    "gkahler.eps_pm",
    "gkahler.im_eps1_identity",
    "gkahler.two_of_three",
    "gkahler.first_product",
    "gkahler.second_product",
    "liecourant.courant_bracket",
    "liecourant.is_integrable_invariant",
    "liecourant.so4_borel_example",
    "liecourant.multiplication_map_check",
    "liecourant.projection_cocr_check",
    "liecourant.invariant_normal_form_criteria",
    "cli.run",
];

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn every_operation_is_reachable_from_a_subcommand() {
        let covered: BTreeSet<&str> =
            OP_COVERAGE.iter().flat_map(|(_, ops)| ops.iter().copied()).collect();
        let all: BTreeSet<&str> = ALL_OPS.iter().copied().collect();
        let missing: Vec<&&str> = all.difference(&covered).collect();
        assert!(missing.is_empty(), "operations with no subcommand: {missing:?}");
        let unknown: Vec<&&str> = covered.difference(&all).collect();
        assert!(unknown.is_empty(), "coverage table names unknown operations: {unknown:?}");
    }
}
