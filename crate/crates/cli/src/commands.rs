//! Report builders for the non-verify commands.

use jetdisc::chart::DivisorChart;
use jetdisc::discrepancy::{
    center_ideal, classify_singularity, jlct_from_charts, jmld_over_charts, log_j_discrepancy,
    validate_chart, DiscrepancyReport,
};
use jetdisc::jets::{arc_order_of_ideal, jet_equations, verify_arc_on_variety};
use jetdisc::multiplier::{
    fractional_membership, jacobian_multiplier_member, mather_multiplier_member,
    MembershipCertificate, ResolutionData,
};
use jetdisc::rideal::RIdeal;
use jetdisc::series::SeriesOrder;
use jetdisc::snf::tangent_profile;
use jetdisc::Ideal;
use serde_json::{json, Value};

use crate::context::{rat, CliError, CliResult, Context};

pub fn generators(ideal: &Ideal) -> Value {
    json!(ideal
        .generators()
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>())
}

pub fn discrepancy_row(r: &DiscrepancyReport) -> Value {
    json!({
        "chart": r.label,
        "exceptional": r.exceptional,
        "km": r.km,
        "ord_jx": r.ord_jx,
        "kj": r.kj,
        "factor_orders": r.factor_orders,
        "ord_rideal": rat(&r.ord_rideal),
        "aj": rat(&r.aj),
        "am": rat(&r.am),
    })
}

/// `"exact"` for an attested chart set, otherwise the weaker reading.
pub fn attestation(attest: &Option<String>, weaker: &str) -> Value {
    json!({
        "attested": attest.is_some(),
        "attestation": attest,
        "sufficiency": if attest.is_some() { "exact" } else { weaker },
    })
}

/// Named R-ideal; a plain ideal name stands for that ideal to the power 1.
pub fn resolve_rideal(ctx: &Context, name: &str) -> CliResult<RIdeal> {
    match ctx.session.rideal(name) {
        Ok(a) => Ok(a),
        Err(e) => match ctx.session.ideal(name) {
            Ok(ideal) => Ok(RIdeal::single(ideal.clone(), jetdisc::rational::int(1))?),
            Err(_) => Err(e.into()),
        },
    }
}

/// Named R-ideal, or the trivial one when absent.
pub fn rideal_or_trivial(ctx: &Context, name: Option<&str>) -> CliResult<RIdeal> {
    match name {
        Some(n) => resolve_rideal(ctx, n),
        None => Ok(RIdeal::trivial(ctx.session.ring())),
    }
}

pub fn validated_chartset(
    ctx: &Context,
    name: &str,
) -> CliResult<(Vec<DivisorChart>, Option<String>)> {
    let (charts, attest) = ctx.session.chartset(name)?;
    let x = ctx.variety()?;
    for c in &charts {
        validate_chart(c, x.ideal(), &ctx.sampling)?;
    }
    Ok((charts, attest))
}

pub fn jac(ctx: &Context) -> CliResult<Value> {
    let x = ctx.variety()?;
    Ok(json!({
        "dim": x.dim(),
        "codim": x.codim(),
        "jacobian": generators(x.jacobian()),
    }))
}

pub fn lcidefect(ctx: &Context, v: &str) -> CliResult<Value> {
    let x = ctx.variety()?;
    let iv = ctx.session.ideal(v)?;
    let defect = ctx.engine.lci_defect(x.ideal(), iv)?;
    Ok(json!({
        "V": v,
        "defect": generators(&defect),
        "trivial": defect.has_unit_generator(),
    }))
}

pub fn jets(ctx: &Context, m: usize) -> CliResult<Value> {
    let x = ctx.variety()?;
    let eq = jet_equations(x.ideal(), m)?;
    Ok(json!({
        "m": m,
        "variables": eq.jet_ring.ring().names(),
        "equations": generators(&eq.ideal),
    }))
}

pub fn tdim(ctx: &Context, name: &str, m: Option<usize>) -> CliResult<Value> {
    let x = ctx.variety()?;
    let arc = match m {
        Some(m) => ctx.session.arc_at(name, m)?,
        None => ctx.session.arc(name)?,
    };
    let m = arc.trunc_order();
    if !verify_arc_on_variety(x.ideal(), &arc)? {
        return Err(jetdisc::Error::ArcNotOnVariety(name.to_string()).into());
    }
    let profile = tangent_profile(x.ideal(), &arc)?;
    let tangent =
        jetdisc::snf::kernel_dimension_from_profile(&profile, x.ideal().ring().num_vars());
    let (ord_jx, minors) = match arc_order_of_ideal(x.jacobian(), &arc)? {
        SeriesOrder::Finite(k) if k <= m => (json!(k), json!(x.dim() * (m + 1) + k)),
        other => (json!(other.to_string()), Value::Null),
    };
    Ok(json!({
        "arc": name,
        "m": m,
        "tangent_dim": tangent,
        "snf_orders": profile.diagonal_orders,
        "snf_zero_count": profile.zero_count,
        "ord_jx": ord_jx,
        "minors_formula": minors,
        "agree": minors.as_u64().map(|v| v == tangent as u64),
    }))
}

pub fn disc(ctx: &Context, chart: &str, rideal: Option<&str>) -> CliResult<Value> {
    let x = ctx.variety()?;
    let c = ctx.session.chart(chart)?;
    let validation = validate_chart(c, x.ideal(), &ctx.sampling)?;
    let a = rideal_or_trivial(ctx, rideal)?;
    let r = log_j_discrepancy(c, x, &a)?;
    let mut row = discrepancy_row(&r);
    row["rideal"] = json!(rideal.map_or_else(|| "1".to_string(), |n| n.to_string()));
    row["validation"] = json!({
        "on_variety": validation.on_variety,
        "immersive": validation.immersive,
        "sampled_ranks": validation.sampled_ranks,
        "assumption": validation.assumption,
    });
    row["center"] = generators(&center_ideal(c, &ctx.engine)?);
    Ok(row)
}

pub fn mld(ctx: &Context, charts: &str, center: &str, rideal: Option<&str>) -> CliResult<Value> {
    let x = ctx.variety()?;
    let (set, attest) = validated_chartset(ctx, charts)?;
    let t = ctx.session.ideal(center)?;
    let a = rideal_or_trivial(ctx, rideal)?;
    let r = jmld_over_charts(&set, x, &a, t, attest.is_some(), &ctx.engine)?;
    Ok(json!({
        "charts": charts,
        "center": center,
        "jmld": r.value.to_string(),
        "raw_minimum": rat(&r.raw_minimum),
        "clamped": r.clamped,
        "witnesses": r.witnesses,
        "per_chart": r.per_chart.iter().map(discrepancy_row).collect::<Vec<_>>(),
        "warning": r.warning,
        "attestation": attestation(&attest, "upper bound"),
    }))
}

pub fn lct(ctx: &Context, charts: &str, rideal: &str) -> CliResult<Value> {
    let x = ctx.variety()?;
    let (set, attest) = validated_chartset(ctx, charts)?;
    let a = resolve_rideal(ctx, rideal)?;
    let r = jlct_from_charts(&set, x, &a, attest.is_some())?;
    Ok(json!({
        "charts": charts,
        "rideal": rideal,
        "jlct": r.value.to_string(),
        "witness": r.witness,
        "reason": r.reason,
        "per_chart": r.per_chart.iter().map(discrepancy_row).collect::<Vec<_>>(),
        "attestation": attestation(&attest, "lower bound"),
    }))
}

pub enum MemberTarget<'a> {
    Poly(&'a str),
    Fraction(&'a str, &'a str),
}

pub fn certificate(c: &MembershipCertificate) -> Value {
    json!({
        "member": c.member,
        "first_violation": c.first_violation,
        "rows": c.rows.iter().map(|r| json!({
            "chart": r.label,
            "ord_g": r.ord_g,
            "km": r.km,
            "floor": r.floor,
            "holds": r.holds,
        })).collect::<Vec<_>>(),
        "attestation": attestation(&c.attestation, c.sufficiency()),
    })
}

pub fn member(
    ctx: &Context,
    target: MemberTarget,
    rideal: &str,
    charts: &str,
    jacobian: bool,
) -> CliResult<Value> {
    let x = ctx.variety()?.clone();
    let (set, attest) = validated_chartset(ctx, charts)?;
    let a = resolve_rideal(ctx, rideal)?;
    let r = ResolutionData::new(x, set, attest)?;
    let (element, cert) = match target {
        MemberTarget::Poly(g) => {
            let g = ctx.session.parse_poly(g)?;
            let cert = if jacobian {
                jacobian_multiplier_member(&g, &a, &r)?
            } else {
                mather_multiplier_member(&g, &a, &r)?
            };
            (json!(g.to_string()), cert)
        }
        MemberTarget::Fraction(num, den) => {
            let num = ctx.session.parse_poly(num)?;
            let den = ctx.session.parse_poly(den)?;
            let twisted;
            let a = if jacobian {
                twisted = a.with_factor(r.variety.jacobian().clone(), jetdisc::rational::int(1))?;
                &twisted
            } else {
                &a
            };
            let cert = fractional_membership(&num, &den, a, &r)?;
            (
                json!({ "num": num.to_string(), "den": den.to_string() }),
                cert,
            )
        }
    };
    let mut out = certificate(&cert);
    out["element"] = element;
    out["rideal"] = json!(rideal);
    out["charts"] = json!(charts);
    out["kind"] = json!(if jacobian { "jacobian" } else { "mather" });
    Ok(out)
}

pub fn classify(ctx: &Context, charts: &str, dlist: &[String]) -> CliResult<Value> {
    let x = ctx.variety()?;
    let (set, attest) = validated_chartset(ctx, charts)?;
    let d: Vec<Ideal> = dlist
        .iter()
        .map(|n| ctx.session.ideal(n).cloned())
        .collect::<Result<_, _>>()?;
    let v = classify_singularity(x, &set, attest.is_some(), &d, &ctx.sampling, &ctx.engine)?;
    Ok(json!({
        "charts": charts,
        "dlist": dlist,
        "per_chart": v.per_chart.iter().map(discrepancy_row).collect::<Vec<_>>(),
        "lcid_orders": v.lcid_orders,
        "min_exceptional": v.min_exceptional,
        "min_all": v.min_all,
        "j_canonical": v.j_canonical,
        "j_terminal": v.j_terminal,
        "log_j_canonical": v.log_j_canonical,
        "log_j_terminal": v.log_j_terminal,
        "pair_j_canonical": v.pair_j_canonical,
        "pair_log_j_canonical": v.pair_log_j_canonical,
        "jet_criterion": {
            "c": v.jet_criterion_c,
            "c_prime": v.jet_criterion_c_prime,
            "rows": v.jet_rows.iter().map(|r| json!({
                "chart": r.label,
                "m": r.m,
                "tangent_dim": r.tangent_dim,
                "bound": r.bound,
            })).collect::<Vec<_>>(),
        },
        "implications": v.implications,
        "attestation": attestation(&attest, v.sufficiency()),
    }))
}

pub fn print(ctx: &Context) -> Value {
    json!({ "text": ctx.session.to_string() })
}

pub fn missing(what: &str) -> CliError {
    CliError::precondition(format!("session declares no {what}"))
}
