//! One-parameter sensitivity sweeps over a scenario.

use serde_json::Value;

use crate::appraisal::AppraisalResult;
use crate::diagnostics::Diagnostic;
use crate::error::{Error, Result};
use crate::evaluate::evaluate;
use crate::money::Decimal;
use crate::par::{ordered_map, Execution};
use crate::scenario::{parse_value, to_value, Scenario};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepPoint {
    pub value: Decimal,
    pub outcome: std::result::Result<AppraisalResult, Vec<Diagnostic>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Step {
    Key(String),
    Index(usize),
}

/// Splits `operational_costs[2].base` or `operational_costs.2.base`.
fn split_path(path: &str) -> Result<Vec<Step>> {
    let bad = || Error::validation(path, "malformed parameter path");
    let mut steps = Vec::new();
    for part in path.split('.') {
        let (key, mut rest) = match part.find('[') {
            Some(i) => (&part[..i], &part[i..]),
            None => (part, ""),
        };
        if key.is_empty() && rest.is_empty() {
            return Err(bad());
        }
        if !key.is_empty() {
            match key.parse::<usize>() {
                Ok(i) => steps.push(Step::Index(i)),
                Err(_) => steps.push(Step::Key(key.to_string())),
            }
        }
        while !rest.is_empty() {
            let close = rest.find(']').ok_or_else(bad)?;
            let i = rest[1..close].parse::<usize>().map_err(|_| bad())?;
            steps.push(Step::Index(i));
            rest = &rest[close + 1..];
            if !rest.is_empty() && !rest.starts_with('[') {
                return Err(bad());
            }
        }
    }
    Ok(steps)
}

fn leaf<'v>(root: &'v mut Value, path: &str) -> Result<&'v mut Value> {
    let mut node = root;
    for step in split_path(path)? {
        node = match (step, node) {
            (Step::Key(k), Value::Object(m)) => m.get_mut(&k),
            (Step::Index(i), Value::Array(a)) => a.get_mut(i),
            _ => None,
        }
        .ok_or_else(|| Error::validation(path, "parameter path does not exist in the scenario"))?;
    }
    let numeric = match &*node {
        Value::Number(_) => true,
        Value::String(s) => s.parse::<Decimal>().is_ok(),
        _ => false,
    };
    if !numeric {
        return Err(Error::validation(path, "parameter path does not name a numeric field"));
    }
    Ok(node)
}

/// Checks that `path` names a numeric field of `scenario`.
pub fn resolve_param(scenario: &Scenario, path: &str) -> Result<Decimal> {
    let mut tree = to_value(scenario);
    match leaf(&mut tree, path)? {
        Value::Number(n) => Ok(n.to_string().parse()?),
        Value::String(s) => Ok(s.parse()?),
        _ => unreachable!("leaf checks numeric"),
    }
}

fn point(tree: &Value, path: &str, value: Decimal) -> SweepPoint {
    let mut tree = tree.clone();
    *leaf(&mut tree, path).expect("resolved before the sweep") = Value::String(value.to_string());
    let outcome = match parse_value(&tree) {
        Err(diags) => Err(diags),
        Ok(parsed) => match evaluate(&parsed.scenario) {
            Ok(e) => Ok(e.result),
            Err(Error::Invalid(diags)) => Err(diags),
            Err(other) => Err(vec![Diagnostic::error(path, other.to_string())]),
        },
    };
    SweepPoint { value, outcome }
}

/// Re-evaluates the scenario once per value with `path` replaced. Points
/// that fail validation carry their diagnostics instead of a result.
pub fn sweep(scenario: &Scenario, path: &str, values: &[Decimal], execution: Execution) -> Result<Vec<SweepPoint>> {
    let mut tree = to_value(scenario);
    leaf(&mut tree, path)?;
    Ok(ordered_map(values, execution, |v| point(&tree, path, *v)))
}

/// `from, from + step, ...` up to and including `to`.
pub fn range(from: Decimal, to: Decimal, step: Decimal) -> Result<Vec<Decimal>> {
    if step <= Decimal::ZERO {
        return Err(Error::validation("step", "step must be positive"));
    }
    let mut out = Vec::new();
    let mut v = from;
    while v <= to {
        out.push(v);
        v = v.checked_add(step)?;
        if out.len() > 100_000 {
            return Err(Error::validation("step", "range has more than 100000 points"));
        }
    }
    Ok(out)
}
