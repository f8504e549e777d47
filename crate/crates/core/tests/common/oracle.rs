//! Reference computations over big rationals. Nothing here calls the crate
//! under test; inputs are decimal literals.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub fn rat(literal: &str) -> BigRational {
    let (neg, body) = match literal.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, literal),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    let digits: BigInt = format!("{int}{frac}").parse().expect("decimal literal");
    let r = BigRational::new(digits, BigInt::from(10).pow(frac.len() as u32));
    if neg {
        -r
    } else {
        r
    }
}

pub fn int(v: i128) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Ties away from zero.
pub fn round_half_up(r: &BigRational) -> BigInt {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    if r.is_negative() {
        -(-r + half).floor().to_integer()
    } else {
        (r + half).floor().to_integer()
    }
}

/// `base × ratio^(t − start)` from `start`, zero before, by direct power.
pub fn geometric(base: &BigRational, start: u32, ratio: &BigRational, horizon: usize) -> Vec<BigRational> {
    (1..=horizon as u32)
        .map(|t| if t < start { BigRational::zero() } else { base * num_traits::pow(ratio.clone(), (t - start) as usize) })
        .collect()
}

#[derive(Debug, Clone)]
pub struct OracleFee {
    pub items: Vec<(String, BigRational)>,
    pub earmarked: Vec<String>,
    pub donations: Vec<BigRational>,
    pub overhead: BigRational,
    pub escalation: BigRational,
}

#[derive(Debug, Clone)]
pub struct OracleModel {
    pub baseline: Vec<u64>,
    pub growth: BigRational,
    pub fee: OracleFee,
    /// `(age, semesters, multiplier)`
    pub schedule: Vec<(u32, u32, BigRational)>,
    pub horizon: usize,
}

pub fn per_student_net(fee: &OracleFee) -> BigRational {
    let mut total = BigRational::zero();
    for (name, amount) in &fee.items {
        if !fee.earmarked.contains(name) {
            total += amount;
        }
    }
    if !fee.donations.is_empty() {
        let sum: BigRational = fee.donations.iter().cloned().sum();
        total += sum / int(fee.donations.len() as i128);
    }
    total * (BigRational::one() - &fee.overhead)
}

pub fn intake(baseline: &[u64], growth: &BigRational) -> Vec<BigInt> {
    if !growth.is_positive() {
        return vec![BigInt::zero(); baseline.len()];
    }
    baseline.iter().map(|&b| round_half_up(&(int(b as i128) * growth))).collect()
}

/// Sums one payment per (cohort, age, semester) triple falling in each
/// project year.
pub fn cohort_revenue(m: &OracleModel) -> Vec<BigRational> {
    let students: BigInt = intake(&m.baseline, &m.growth).into_iter().sum();
    let fee = per_student_net(&m.fee);
    let factor = (BigRational::one() + &m.growth) * (BigRational::one() + &m.fee.escalation);
    let mut years = vec![BigRational::zero(); m.horizon];
    for cohort in 1..=m.horizon {
        let mut enrollment_year_revenue = BigRational::from_integer(students.clone()) * &fee;
        for _ in 1..cohort {
            enrollment_year_revenue *= &factor;
        }
        for (age, semesters, multiplier) in &m.schedule {
            let year = cohort + *age as usize;
            if year > m.horizon {
                continue;
            }
            for _semester in 0..*semesters {
                years[year - 1] += &enrollment_year_revenue * multiplier;
            }
        }
    }
    years
}

/// `−investment + Σ net_t / (1 + rate)^t`
pub fn npv(yearly_net: &[BigRational], investment: &BigRational, rate: &BigRational) -> BigRational {
    let base = BigRational::one() + rate;
    let mut total = -investment.clone();
    for (i, v) in yearly_net.iter().enumerate() {
        total += v / num_traits::pow(base.clone(), i + 1);
    }
    total
}
