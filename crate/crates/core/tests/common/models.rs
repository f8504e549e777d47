//! Random small cohort models in both the crate's and the oracle's form.
//! Rate literals have at most two decimals and donation means are whole
//! rupiah, so every exact value stays within the carried precision.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use roi_forge_core::enrollment::{CohortModel, FeeItem, FeeModel, PaymentSchedule, ScheduleEntry};
use roi_forge_core::{Money, Rate};

use super::oracle::{rat, OracleFee, OracleModel};

fn two_places(rng: &mut ChaCha8Rng, lo: i32, hi: i32) -> String {
    let v = rng.random_range(lo..=hi);
    let sign = if v < 0 { "-" } else { "" };
    format!("{sign}{}.{:02}", v.abs() / 100, v.abs() % 100)
}

pub fn random_model(rng: &mut ChaCha8Rng) -> (CohortModel, OracleModel) {
    let horizon = rng.random_range(1..=6usize);
    let programs = rng.random_range(1..=4usize);
    let baseline: Vec<u64> = (0..programs).map(|_| rng.random_range(0..=500)).collect();
    let growth = two_places(rng, 0, 60);
    let escalation = two_places(rng, -10, 20);
    let overhead = format!("0.{}", rng.random_range(0..=9));

    let n_items = rng.random_range(1..=5usize);
    let items: Vec<(String, String)> =
        (0..n_items).map(|i| (format!("item{i}"), (rng.random_range(0..=3000u64) * 1000).to_string())).collect();
    let earmarked: Vec<String> = items.iter().filter(|_| rng.random_bool(0.3)).map(|(n, _)| n.clone()).collect();
    let n_grades = [0usize, 1, 2, 4][rng.random_range(0..4)];
    let donations: Vec<String> = (0..n_grades).map(|_| (rng.random_range(0..=10_000u64) * 1000).to_string()).collect();

    let mut schedule = vec![(0u32, rng.random_range(0..=2u32), two_places(rng, 0, 150))];
    for age in 1..horizon as u32 + 1 {
        if rng.random_bool(0.6) {
            schedule.push((age, rng.random_range(0..=3), two_places(rng, 0, 120)));
        }
    }

    let model = CohortModel {
        programs: (0..programs).map(|p| format!("P{p}")).collect(),
        baseline_intake: baseline.clone(),
        growth: Rate::parse(&growth).unwrap(),
        fee: FeeModel {
            first_semester_items: items
                .iter()
                .map(|(n, a)| FeeItem { name: n.clone(), amount: Money::parse(a).unwrap() })
                .collect(),
            donation_grades: donations.iter().map(|d| Money::parse(d).unwrap()).collect(),
            earmarked_items: earmarked.clone(),
            overhead_fraction: Rate::parse(&overhead).unwrap(),
            escalation: Rate::parse(&escalation).unwrap(),
        },
        schedule: PaymentSchedule {
            entries: schedule
                .iter()
                .map(|(age, semesters, m)| ScheduleEntry {
                    age: *age,
                    semesters: *semesters,
                    multiplier: Rate::parse(m).unwrap(),
                })
                .collect(),
        },
        horizon,
    };
    let oracle = OracleModel {
        baseline,
        growth: rat(&growth),
        fee: OracleFee {
            items: items.iter().map(|(n, a)| (n.clone(), rat(a))).collect(),
            earmarked,
            donations: donations.iter().map(|d| rat(d)).collect(),
            overhead: rat(&overhead),
            escalation: rat(&escalation),
        },
        schedule: schedule.iter().map(|(a, s, m)| (*a, *s, rat(m))).collect(),
        horizon,
    };
    (model, oracle)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
