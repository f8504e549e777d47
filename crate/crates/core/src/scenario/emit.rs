use serde_json::{json, Map, Value};

use super::{Scenario, SCHEMA_VERSION};
use crate::appraisal::LedgerItem;
use crate::projection::CostLine;

fn s<T: ToString>(v: T) -> Value {
    Value::String(v.to_string())
}

fn ledger(items: &[LedgerItem]) -> Value {
    items.iter().map(|i| json!({ "name": i.name, "amount": s(i.amount) })).collect()
}

fn cost_line(line: &CostLine) -> Value {
    let mut m = Map::new();
    m.insert("name".into(), s(&line.name));
    if let Some(g) = &line.group {
        m.insert("group".into(), s(g));
    }
    m.insert("base".into(), s(line.rule.base));
    m.insert("start_year".into(), Value::from(line.rule.start_year));
    m.insert("annual_ratio".into(), s(line.rule.annual_ratio));
    if let Some(f) = line.saving_fraction {
        m.insert("saving_fraction".into(), s(f));
    }
    if let Some(b) = line.benefit {
        m.insert("benefit".into(), Value::from(b));
    }
    Value::Object(m)
}

fn insert_opt(m: &mut Map<String, Value>, key: &str, v: Option<Value>) {
    if let Some(v) = v {
        m.insert(key.into(), v);
    }
}

/// Canonical JSON tree: decimal strings for every amount and rate, optional
/// fields omitted when absent. Object keys sort on serialization.
pub fn to_value(sc: &Scenario) -> Value {
    let benefits = json!({
        "items": sc.benefits.items.iter().map(|b| json!({
            "id": b.id,
            "name": b.name,
            "tangibility": b.tangibility.as_str(),
            "measurability": b.measurability.as_str(),
            "domain_class": b.domain_class.as_str(),
            "value_class": b.value_class.as_str(),
            "method": b.method.as_str(),
        })).collect::<Vec<_>>(),
        "exclusions": sc.benefits.exclusions.iter().collect::<Vec<_>>(),
    });

    let investment = json!({
        "staff": sc.investment.staff.iter().map(|l| json!({
            "role": l.role,
            "headcount": l.headcount,
            "hourly_wage": s(l.hourly_wage),
            "hours_per_day": s(l.hours_per_day),
            "working_days": l.working_days,
        })).collect::<Vec<_>>(),
        "hardware": ledger(&sc.investment.hardware),
        "network": ledger(&sc.investment.network),
        "support": ledger(&sc.investment.support),
    });

    let p = &sc.productivity;
    let mut productivity = Map::new();
    productivity.insert("loss_before".into(), s(p.loss_before));
    productivity.insert("loss_after".into(), s(p.loss_after));
    productivity.insert("growth".into(), s(p.growth));
    productivity.insert(
        "roles".into(),
        p.roles
            .iter()
            .map(|r| {
                json!({
                    "role": r.role,
                    "utilization_before": s(r.utilization_before),
                    "utilization_after": s(r.utilization_after),
                })
            })
            .collect(),
    );
    insert_opt(&mut productivity, "benefit", p.benefit.map(Value::from));

    let e = &sc.enrollment;
    let mut enrollment = Map::new();
    insert_opt(&mut enrollment, "benefit", e.benefit.map(Value::from));
    enrollment.insert("programs".into(), e.history.programs.iter().map(s).collect());
    enrollment.insert(
        "history".into(),
        e.history
            .rows
            .iter()
            .map(|r| {
                let mut row = Map::new();
                row.insert("year".into(), Value::from(r.year));
                row.insert("counts".into(), r.counts.iter().map(|&c| Value::from(c)).collect());
                insert_opt(&mut row, "total", r.total.map(Value::from));
                Value::Object(row)
            })
            .collect(),
    );
    insert_opt(&mut enrollment, "history_csv", e.history_csv.as_ref().map(s));
    insert_opt(
        &mut enrollment,
        "baseline_intake",
        e.baseline_intake.as_ref().map(|b| b.iter().map(|&c| Value::from(c)).collect()),
    );
    enrollment.insert("growth".into(), s(e.growth));
    enrollment.insert(
        "fee".into(),
        json!({
            "first_semester_items": e.fee.first_semester_items.iter()
                .map(|i| json!({ "name": i.name, "amount": s(i.amount) }))
                .collect::<Vec<_>>(),
            "donation_grades": e.fee.donation_grades.iter().map(s).collect::<Vec<_>>(),
            "earmarked_items": e.fee.earmarked_items,
            "overhead_fraction": s(e.fee.overhead_fraction),
            "escalation": s(e.fee.escalation),
        }),
    );
    enrollment.insert(
        "schedule".into(),
        e.schedule
            .entries
            .iter()
            .map(|x| json!({ "age": x.age, "semesters": x.semesters, "multiplier": s(x.multiplier) }))
            .collect(),
    );

    let o = &sc.options;
    let mut options = Map::new();
    options.insert("rounding".into(), s(o.rounding.as_str()));
    options.insert("table15_compat".into(), Value::from(o.table15_compat));
    options.insert("tax_rate".into(), s(o.tax_rate));
    insert_opt(&mut options, "discount_rate", o.discount_rate.map(s));

    json!({
        "schema_version": SCHEMA_VERSION,
        "meta": {
            "name": sc.meta.name,
            "currency": sc.meta.currency,
            "description": sc.meta.description,
        },
        "horizon": sc.horizon,
        "benefits": benefits,
        "investment": investment,
        "running_costs": sc.running_costs.iter().map(cost_line).collect::<Vec<_>>(),
        "operational_costs": sc.operational_costs.iter().map(cost_line).collect::<Vec<_>>(),
        "productivity": Value::Object(productivity),
        "enrollment": Value::Object(enrollment),
        "options": Value::Object(options),
    })
}

/// Pretty-printed canonical text with a trailing newline.
pub fn emit_scenario(sc: &Scenario) -> String {
    let mut text = serde_json::to_string_pretty(&to_value(sc)).expect("scenario values serialize");
    text.push('\n');
    text
}
