mod common;

use common::models::{random_model, rng};
use common::oracle::{self, rat, OracleFee, OracleModel};
use num_rational::BigRational;
use roi_forge_core::enrollment::{cohort_revenue, cohort_waterfall, PaymentSchedule, ScheduleEntry};
use roi_forge_core::projection::{geometric_series, ProjectionRule};
use roi_forge_core::{baseline, Money, Rate};

fn as_rat(m: Money) -> BigRational {
    rat(&m.to_string())
}

#[test]
fn cohort_revenue_matches_enumeration_on_random_models() {
    let mut r = rng(0x5eed_c040);
    for case in 0..1000 {
        let (model, reference) = random_model(&mut r);
        let got = cohort_revenue(&model, &mut Vec::new()).unwrap_or_else(|e| panic!("case {case}: {e}"));
        let want = oracle::cohort_revenue(&reference);
        let got: Vec<BigRational> = got.revenue.iter().map(as_rat).collect();
        assert_eq!(got, want, "case {case}: {model:?}");
    }
}

#[test]
fn baseline_matches_enumeration() {
    let s = baseline();
    let fee = &s.enrollment.fee;
    let reference = OracleModel {
        baseline: s.enrollment.baseline().unwrap(),
        growth: rat("0.2"),
        fee: OracleFee {
            items: fee.first_semester_items.iter().map(|i| (i.name.clone(), as_rat(i.amount))).collect(),
            earmarked: fee.earmarked_items.clone(),
            donations: fee.donation_grades.iter().map(|&d| as_rat(d)).collect(),
            overhead: rat("0.4"),
            escalation: rat("0.05"),
        },
        schedule: vec![(0, 1, rat("1")), (1, 2, rat("0.65")), (2, 2, rat("0.65")), (3, 1, rat("0.65")), (4, 1, rat("0.65"))],
        horizon: 5,
    };
    let want = oracle::cohort_revenue(&reference);
    let got = cohort_revenue(&s.cohort_model(), &mut Vec::new()).unwrap();
    assert_eq!(got.revenue.iter().map(as_rat).collect::<Vec<_>>(), want);
    let total: BigRational = want.iter().cloned().sum();
    assert_eq!(oracle::round_half_up(&total), 20_619_593_679i64.into());
}

#[test]
fn two_year_schedule_without_growth() {
    let schedule = PaymentSchedule {
        entries: vec![
            ScheduleEntry { age: 0, semesters: 1, multiplier: Rate::ONE },
            ScheduleEntry { age: 1, semesters: 2, multiplier: Rate::parse("0.65").unwrap() },
        ],
    };
    let n1 = Money::rupiah(1_000_000);
    let (_, revenue) = cohort_waterfall(n1, Rate::ONE, &schedule, 4).unwrap();
    let expected = n1.mul_decimal("2.3".parse().unwrap()).unwrap();
    assert_eq!(revenue.values(), &[n1, expected, expected, expected]);
}

#[test]
fn enrollment_year_only_schedule_is_pure_growth() {
    let schedule = PaymentSchedule { entries: vec![ScheduleEntry { age: 0, semesters: 1, multiplier: Rate::ONE }] };
    let n1 = Money::rupiah(892_944_000);
    let factor = Rate::parse("1.26").unwrap();
    let (_, revenue) = cohort_waterfall(n1, factor, &schedule, 5).unwrap();
    let want = oracle::geometric(&as_rat(n1), 1, &rat("1.26"), 5);
    assert_eq!(revenue.iter().map(as_rat).collect::<Vec<_>>(), want);
}

#[test]
fn geometric_series_matches_direct_power() {
    let mut r = rng(7);
    use rand::Rng;
    for _ in 0..500 {
        let base = r.random_range(0..=100_000_000u64);
        let start = r.random_range(1..=6u32);
        let ratio = format!("{}.{:02}", r.random_range(0..=1), r.random_range(0..=99));
        let horizon = r.random_range(1..=8usize);
        let rule = ProjectionRule {
            base: Money::rupiah(base as i128),
            start_year: start,
            annual_ratio: Rate::parse(&ratio).unwrap(),
        };
        let got = geometric_series(&rule, horizon, &mut Vec::new()).unwrap();
        let want = oracle::geometric(&rat(&base.to_string()), start, &rat(&ratio), horizon);
        assert_eq!(got.iter().map(as_rat).collect::<Vec<_>>(), want, "{rule:?} over {horizon}");
    }
}

#[test]
fn npv_matches_per_year_division() {
    let e = roi_forge_core::evaluate(&baseline()).unwrap();
    let net: Vec<BigRational> = e.yearly_net.iter().map(as_rat).collect();
    let want = oracle::npv(&net, &as_rat(e.result.investment), &rat("0.1"));
    let got = as_rat(e.result.npv.unwrap());
    // the crate carries 24 fractional digits through each division
    let tolerance = rat("0.000000000000000000001");
    let diff = if got > want { &got - &want } else { &want - &got };
    assert!(diff < tolerance, "{got} vs {want}");
    assert_eq!(oracle::round_half_up(&want), 15_266_517_623i64.into());
}
