//! Exact decimal arithmetic for rupiah amounts and dimensionless rates.
//!
//! Every value is a normalized `i128` mantissa with a decimal scale of at
//! most [`MAX_SCALE`] fractional digits. Addition and subtraction are always
//! exact. Multiplication is exact until a product would need more than
//! `MAX_SCALE` fractional digits, at which point it is rounded half-up at that
//! precision. Division produces the quotient at `MAX_SCALE` digits, so it is
//! exact whenever the true quotient terminates within that many digits.
//!
//! No binary floating point is used anywhere in this module.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};
use thiserror::Error;

/// Fractional digits carried internally.
pub const MAX_SCALE: u32 = 24;

/// Fractional digits allowed in a rate literal.
pub const RATE_LITERAL_SCALE: u32 = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoneyError {
    #[error("arithmetic overflow")]
    Overflow,
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid decimal literal `{0}`")]
    Parse(String),
    #[error("decimal literal `{literal}` has more than {max} fractional digits")]
    TooPrecise { literal: String, max: u32 },
}

/// Presentation rounding. Never applied implicitly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum RoundingMode {
    /// Nearest integer, ties away from zero.
    #[default]
    HalfUp,
    /// Toward zero.
    Down,
    /// Fraction to the nearest whole percent (two decimal places), ties away
    /// from zero. On money amounts this behaves like `HalfUp`.
    NearestPercent,
}

impl RoundingMode {
    pub fn as_str(self) -> &'static str {
        match self {
            RoundingMode::HalfUp => "half_up",
            RoundingMode::Down => "down",
            RoundingMode::NearestPercent => "nearest_percent",
        }
    }
}

impl FromStr for RoundingMode {
    type Err = MoneyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "half_up" => Ok(RoundingMode::HalfUp),
            "down" => Ok(RoundingMode::Down),
            "nearest_percent" => Ok(RoundingMode::NearestPercent),
            other => Err(MoneyError::Parse(other.to_string())),
        }
    }
}

fn pow10(exp: u32) -> Option<i128> {
    10i128.checked_pow(exp)
}

fn big_pow10(exp: u32) -> BigInt {
    BigInt::from(10u8).pow(exp)
}

/// Rounds `value / 10^digits` to an integer.
fn round_big(value: &BigInt, divisor: &BigInt, half_up: bool) -> BigInt {
    let quotient = value / divisor;
    let remainder = value % divisor;
    if !half_up || remainder == BigInt::from(0) {
        return quotient;
    }
    let twice = remainder.magnitude() * 2u8;
    if twice >= *divisor.magnitude() {
        let negative = (value.sign() == num_bigint::Sign::Minus) != (divisor.sign() == num_bigint::Sign::Minus);
        if negative {
            quotient - 1
        } else {
            quotient + 1
        }
    } else {
        quotient
    }
}

/// Signed decimal number `mantissa × 10^-scale`, always normalized so that
/// equal values have equal representations.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Decimal {
    mantissa: i128,
    scale: u32,
}

impl Decimal {
    pub const ZERO: Decimal = Decimal { mantissa: 0, scale: 0 };
    pub const ONE: Decimal = Decimal { mantissa: 1, scale: 0 };

    pub fn new(mantissa: i128, scale: u32) -> Result<Decimal, MoneyError> {
        let mut d = Decimal { mantissa, scale };
        d.normalize();
        if d.scale > MAX_SCALE {
            return Err(MoneyError::TooPrecise { literal: d.to_string(), max: MAX_SCALE });
        }
        Ok(d)
    }

    pub const fn from_int(value: i128) -> Decimal {
        Decimal { mantissa: value, scale: 0 }
    }

    pub fn mantissa(&self) -> i128 {
        self.mantissa
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa == 0
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa < 0
    }

    pub fn is_integer(&self) -> bool {
        self.scale == 0
    }

    /// Integer value, if there is no fractional part.
    pub fn to_i128(&self) -> Option<i128> {
        (self.scale == 0).then_some(self.mantissa)
    }

    fn normalize(&mut self) {
        if self.mantissa == 0 {
            self.scale = 0;
            return;
        }
        while self.scale > 0 && self.mantissa % 10 == 0 {
            self.mantissa /= 10;
            self.scale -= 1;
        }
    }

    fn from_big(mut mantissa: BigInt, mut scale: u32) -> Result<Decimal, MoneyError> {
        let ten = BigInt::from(10u8);
        let zero = BigInt::from(0u8);
        while scale > 0 && &mantissa % &ten == zero {
            mantissa /= &ten;
            scale -= 1;
        }
        let m = i128::try_from(&mantissa).map_err(|_| MoneyError::Overflow)?;
        Decimal::new(m, scale)
    }

    fn aligned(a: Decimal, b: Decimal) -> Option<(i128, i128, u32)> {
        let scale = a.scale.max(b.scale);
        let am = a.mantissa.checked_mul(pow10(scale - a.scale)?)?;
        let bm = b.mantissa.checked_mul(pow10(scale - b.scale)?)?;
        Some((am, bm, scale))
    }

    pub fn checked_add(self, rhs: Decimal) -> Result<Decimal, MoneyError> {
        let (a, b, scale) = Decimal::aligned(self, rhs).ok_or(MoneyError::Overflow)?;
        let sum = a.checked_add(b).ok_or(MoneyError::Overflow)?;
        Decimal::new(sum, scale)
    }

    pub fn checked_sub(self, rhs: Decimal) -> Result<Decimal, MoneyError> {
        self.checked_add(rhs.checked_neg()?)
    }

    pub fn checked_neg(self) -> Result<Decimal, MoneyError> {
        let m = self.mantissa.checked_neg().ok_or(MoneyError::Overflow)?;
        Ok(Decimal { mantissa: m, scale: self.scale })
    }

    pub fn abs(self) -> Result<Decimal, MoneyError> {
        if self.is_negative() {
            self.checked_neg()
        } else {
            Ok(self)
        }
    }

    pub fn checked_mul(self, rhs: Decimal) -> Result<Decimal, MoneyError> {
        let scale = self.scale + rhs.scale;
        if scale <= MAX_SCALE {
            if let Some(m) = self.mantissa.checked_mul(rhs.mantissa) {
                return Decimal::new(m, scale);
            }
        }
        let product = BigInt::from(self.mantissa) * BigInt::from(rhs.mantissa);
        if scale > MAX_SCALE {
            let rounded = round_big(&product, &big_pow10(scale - MAX_SCALE), true);
            Decimal::from_big(rounded, MAX_SCALE)
        } else {
            Decimal::from_big(product, scale)
        }
    }

    /// Quotient rounded half-up at `MAX_SCALE` fractional digits.
    pub fn checked_div(self, rhs: Decimal) -> Result<Decimal, MoneyError> {
        if rhs.is_zero() {
            return Err(MoneyError::DivisionByZero);
        }
        let numerator = BigInt::from(self.mantissa) * big_pow10(rhs.scale + MAX_SCALE);
        let denominator = BigInt::from(rhs.mantissa) * big_pow10(self.scale);
        Decimal::from_big(round_big(&numerator, &denominator, true), MAX_SCALE)
    }

    pub fn checked_pow(self, exp: u32) -> Result<Decimal, MoneyError> {
        let mut acc = Decimal::ONE;
        for _ in 0..exp {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }

    /// Rounds to `dp` fractional digits; `half_up` ties go away from zero,
    /// otherwise the value is truncated toward zero.
    pub fn round_dp(self, dp: u32, half_up: bool) -> Decimal {
        if self.scale <= dp {
            return self;
        }
        // scale <= MAX_SCALE, so the divisor fits an i128
        let divisor = pow10(self.scale - dp).expect("scale bounded by MAX_SCALE");
        let mut quotient = self.mantissa / divisor;
        let remainder = self.mantissa % divisor;
        if half_up && remainder.unsigned_abs() * 2 >= divisor.unsigned_abs() {
            quotient += self.mantissa.signum();
        }
        let mut d = Decimal { mantissa: quotient, scale: dp };
        d.normalize();
        d
    }

    pub fn round(self, mode: RoundingMode) -> Decimal {
        match mode {
            RoundingMode::HalfUp => self.round_dp(0, true),
            RoundingMode::Down => self.round_dp(0, false),
            RoundingMode::NearestPercent => self.round_dp(2, true),
        }
    }

    /// Fixed-point rendering with exactly `dp` fractional digits (half-up).
    pub fn to_fixed(self, dp: u32) -> String {
        let rounded = self.round_dp(dp, true);
        let mut s = rounded.to_string();
        if dp == 0 {
            return s;
        }
        let frac_len = s.find('.').map(|i| s.len() - i - 1).unwrap_or_else(|| {
            s.push('.');
            0
        });
        for _ in frac_len..dp as usize {
            s.push('0');
        }
        s
    }

    /// Integer part grouped by thousands, e.g. `22,081,297,308`; any
    /// fractional digits are kept as-is.
    pub fn grouped(self) -> String {
        let s = self.to_string();
        let (sign, rest) = s.strip_prefix('-').map(|r| ("-", r)).unwrap_or(("", s.as_str()));
        let (int, frac) = match rest.find('.') {
            Some(i) => (&rest[..i], &rest[i..]),
            None => (rest, ""),
        };
        let mut out = String::with_capacity(s.len() + int.len() / 3);
        for (i, ch) in int.chars().enumerate() {
            if i > 0 && (int.len() - i) % 3 == 0 {
                out.push(',');
            }
            out.push(ch);
        }
        format!("{sign}{out}{frac}")
    }
}

impl Ord for Decimal {
    fn cmp(&self, other: &Self) -> Ordering {
        match Decimal::aligned(*self, *other) {
            Some((a, b, _)) => a.cmp(&b),
            None => {
                let scale = self.scale.max(other.scale);
                let a = BigInt::from(self.mantissa) * big_pow10(scale - self.scale);
                let b = BigInt::from(other.mantissa) * big_pow10(scale - other.scale);
                a.cmp(&b)
            }
        }
    }
}

impl PartialOrd for Decimal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Decimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = self.mantissa.unsigned_abs().to_string();
        let sign = if self.mantissa < 0 { "-" } else { "" };
        if self.scale == 0 {
            return write!(f, "{sign}{digits}");
        }
        let scale = self.scale as usize;
        let padded = if digits.len() <= scale {
            format!("{}{}", "0".repeat(scale + 1 - digits.len()), digits)
        } else {
            digits
        };
        let split = padded.len() - scale;
        write!(f, "{sign}{}.{}", &padded[..split], &padded[split..])
    }
}

impl fmt::Debug for Decimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Decimal {
    type Err = MoneyError;

    /// Accepts `[-+]digits[.digits][(e|E)[-+]digits]`.
    fn from_str(literal: &str) -> Result<Self, Self::Err> {
        let bad = || MoneyError::Parse(literal.to_string());
        let s = literal.trim();
        let (negative, s) = match s.as_bytes().first() {
            Some(b'-') => (true, &s[1..]),
            Some(b'+') => (false, &s[1..]),
            _ => (false, s),
        };
        let (number, exponent) = match s.find(['e', 'E']) {
            Some(i) => {
                let exp: i64 = s[i + 1..].parse().map_err(|_| bad())?;
                (&s[..i], exp)
            }
            None => (s, 0),
        };
        let (int_part, frac_part) = match number.find('.') {
            Some(i) => (&number[..i], &number[i + 1..]),
            None => (number, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        let mut mantissa: i128 = 0;
        for ch in int_part.chars().chain(frac_part.chars()) {
            let digit = ch.to_digit(10).ok_or_else(bad)? as i128;
            mantissa = mantissa
                .checked_mul(10)
                .and_then(|m| m.checked_add(digit))
                .ok_or(MoneyError::Overflow)?;
        }
        if negative {
            mantissa = -mantissa;
        }
        let scale = frac_part.len() as i64 - exponent;
        let mut d = if scale < 0 {
            let factor = u32::try_from(-scale).ok().and_then(pow10).ok_or(MoneyError::Overflow)?;
            Decimal { mantissa: mantissa.checked_mul(factor).ok_or(MoneyError::Overflow)?, scale: 0 }
        } else {
            Decimal { mantissa, scale: u32::try_from(scale).map_err(|_| bad())? }
        };
        d.normalize();
        if d.scale > MAX_SCALE {
            return Err(MoneyError::TooPrecise { literal: literal.to_string(), max: MAX_SCALE });
        }
        Ok(d)
    }
}

impl Serialize for Decimal {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl From<i64> for Decimal {
    fn from(value: i64) -> Self {
        Decimal::from_int(value as i128)
    }
}

impl From<u64> for Decimal {
    fn from(value: u64) -> Self {
        Decimal::from_int(value as i128)
    }
}

/// An amount of rupiah.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Money(Decimal);

impl Money {
    pub const ZERO: Money = Money(Decimal::ZERO);

    pub const fn from_decimal(value: Decimal) -> Money {
        Money(value)
    }

    pub const fn rupiah(value: i128) -> Money {
        Money(Decimal::from_int(value))
    }

    pub fn parse(literal: &str) -> Result<Money, MoneyError> {
        literal.parse().map(Money)
    }

    pub fn decimal(self) -> Decimal {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(self) -> bool {
        self.0.is_negative()
    }

    pub fn checked_add(self, rhs: Money) -> Result<Money, MoneyError> {
        self.0.checked_add(rhs.0).map(Money)
    }

    pub fn checked_sub(self, rhs: Money) -> Result<Money, MoneyError> {
        self.0.checked_sub(rhs.0).map(Money)
    }

    pub fn checked_neg(self) -> Result<Money, MoneyError> {
        self.0.checked_neg().map(Money)
    }

    pub fn mul_rate(self, rate: Rate) -> Result<Money, MoneyError> {
        self.0.checked_mul(rate.0).map(Money)
    }

    pub fn mul_decimal(self, factor: Decimal) -> Result<Money, MoneyError> {
        self.0.checked_mul(factor).map(Money)
    }

    pub fn mul_int(self, factor: i128) -> Result<Money, MoneyError> {
        self.0.checked_mul(Decimal::from_int(factor)).map(Money)
    }

    pub fn div_decimal(self, divisor: Decimal) -> Result<Money, MoneyError> {
        self.0.checked_div(divisor).map(Money)
    }

    /// Dimensionless ratio `self / rhs`.
    pub fn ratio(self, rhs: Money) -> Result<Decimal, MoneyError> {
        self.0.checked_div(rhs.0)
    }

    pub fn round(self, mode: RoundingMode) -> Money {
        round_money(self, mode)
    }

    pub fn checked_sum<'a, I>(items: I) -> Result<Money, MoneyError>
    where
        I: IntoIterator<Item = &'a Money>,
    {
        items.into_iter().try_fold(Money::ZERO, |acc, m| acc.checked_add(*m))
    }
}

impl fmt::Display for Money {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for Money {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rp {}", self.0)
    }
}

impl FromStr for Money {
    type Err = MoneyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Money::parse(s)
    }
}

impl Serialize for Money {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

/// Dimensionless scalar: growth, decay, saving fractions, multipliers.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rate(Decimal);

impl Rate {
    pub const ZERO: Rate = Rate(Decimal::ZERO);
    pub const ONE: Rate = Rate(Decimal::ONE);

    pub const fn from_decimal(value: Decimal) -> Rate {
        Rate(value)
    }

    /// Parses a rate literal, which may carry at most six fractional digits.
    pub fn parse(literal: &str) -> Result<Rate, MoneyError> {
        let d: Decimal = literal.parse()?;
        if d.scale() > RATE_LITERAL_SCALE {
            return Err(MoneyError::TooPrecise {
                literal: literal.to_string(),
                max: RATE_LITERAL_SCALE,
            });
        }
        Ok(Rate(d))
    }

    pub fn decimal(self) -> Decimal {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0.is_zero()
    }

    /// `1 + self`
    pub fn one_plus(self) -> Result<Rate, MoneyError> {
        Decimal::ONE.checked_add(self.0).map(Rate)
    }

    /// `1 - self`
    pub fn complement(self) -> Result<Rate, MoneyError> {
        Decimal::ONE.checked_sub(self.0).map(Rate)
    }

    pub fn checked_add(self, rhs: Rate) -> Result<Rate, MoneyError> {
        self.0.checked_add(rhs.0).map(Rate)
    }

    pub fn checked_mul(self, rhs: Rate) -> Result<Rate, MoneyError> {
        self.0.checked_mul(rhs.0).map(Rate)
    }

    pub fn checked_pow(self, exp: u32) -> Result<Rate, MoneyError> {
        self.0.checked_pow(exp).map(Rate)
    }

    pub fn in_unit_interval(self) -> bool {
        self.0 >= Decimal::ZERO && self.0 <= Decimal::ONE
    }
}

impl fmt::Display for Rate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for Rate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rate({})", self.0)
    }
}

impl FromStr for Rate {
    type Err = MoneyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Rate::parse(s)
    }
}

impl Serialize for Rate {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

/// Exact product at carried precision.
pub fn mul_rate(m: Money, r: Rate) -> Result<Money, MoneyError> {
    m.mul_rate(r)
}

/// Integer-rupiah presentation value.
pub fn round_money(m: Money, mode: RoundingMode) -> Money {
    let mode = match mode {
        RoundingMode::NearestPercent => RoundingMode::HalfUp,
        other => other,
    };
    Money(m.0.round(mode))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn money(s: &str) -> Money {
        Money::parse(s).unwrap()
    }

    fn rate(s: &str) -> Rate {
        Rate::parse(s).unwrap()
    }

    #[test]
    fn mul_rate_matches_table_recurrences() {
        assert_eq!(mul_rate(money("360000"), rate("1.10")).unwrap(), money("396000"));
        assert_eq!(mul_rate(money("30150000"), rate("0.90")).unwrap(), money("27135000"));
        assert_eq!(mul_rate(money("123.456"), Rate::ONE).unwrap(), money("123.456"));
    }

    #[test]
    fn round_money_half_up() {
        assert_eq!(round_money(money("7727396790.896"), RoundingMode::HalfUp), money("7727396791"));
        assert_eq!(round_money(money("5672208881.664"), RoundingMode::HalfUp), money("5672208882"));
        assert_eq!(round_money(money("100.000000"), RoundingMode::HalfUp), money("100"));
        assert_eq!(round_money(money("449212.5"), RoundingMode::HalfUp), money("449213"));
        assert_eq!(round_money(money("-2.5"), RoundingMode::HalfUp), money("-3"));
    }

    #[test]
    fn round_money_down_truncates_toward_zero() {
        assert_eq!(round_money(money("449212.5"), RoundingMode::Down), money("449212"));
        assert_eq!(round_money(money("-2.7"), RoundingMode::Down), money("-2"));
    }

    #[test]
    fn nearest_percent_rounds_rates_to_two_places() {
        let d: Decimal = "0.65202".parse().unwrap();
        assert_eq!(d.round(RoundingMode::NearestPercent).to_string(), "0.65");
        let d: Decimal = "-0.46021".parse().unwrap();
        assert_eq!(d.round(RoundingMode::NearestPercent).to_string(), "-0.46");
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(money("0.100").to_string(), "0.1");
        assert_eq!(money("-0.05").to_string(), "-0.05");
        assert_eq!(money("1e3").to_string(), "1000");
        assert_eq!(money("1.5E-2").to_string(), "0.015");
        assert_eq!(money("+7").to_string(), "7");
        assert!(Money::parse("1,000").is_err());
        assert!(Money::parse("").is_err());
        assert!(Money::parse(".").is_err());
        assert!(Money::parse("abc").is_err());
    }

    #[test]
    fn rate_literals_limited_to_six_digits() {
        assert!(Rate::parse("0.123456").is_ok());
        assert!(matches!(Rate::parse("0.1234567"), Err(MoneyError::TooPrecise { .. })));
        // trailing zeros do not count
        assert_eq!(Rate::parse("0.10000000").unwrap(), rate("0.1"));
    }

    #[test]
    fn overflow_is_reported() {
        let big = Money::from_decimal(Decimal::from_int(i128::MAX / 2));
        assert_eq!(big.mul_rate(rate("3")), Err(MoneyError::Overflow));
        assert_eq!(big.checked_add(big).and_then(|s| s.checked_add(big)), Err(MoneyError::Overflow));
    }

    #[test]
    fn products_beyond_carried_precision_round_half_up() {
        let third = Decimal::ONE.checked_div(Decimal::from_int(3)).unwrap();
        assert_eq!(third.scale(), MAX_SCALE);
        let two_thirds = Decimal::from_int(2).checked_div(Decimal::from_int(3)).unwrap();
        assert_eq!(two_thirds.to_string(), "0.666666666666666666666667");
        let sq = third.checked_mul(third).unwrap();
        assert_eq!(sq.to_string(), "0.111111111111111111111111");
    }

    #[test]
    fn division_is_exact_when_terminating() {
        let q = Decimal::from_int(22_081_297_308)
            .checked_div(Decimal::from_int(5))
            .unwrap();
        assert_eq!(q.to_string(), "4416259461.6");
        assert_eq!(
            Decimal::ONE.checked_div(Decimal::ZERO),
            Err(MoneyError::DivisionByZero)
        );
    }

    #[test]
    fn ordering_across_scales() {
        assert!(money("0.5") < money("1"));
        assert!(money("-0.5") > money("-1"));
        let huge = Decimal::from_int(i128::MAX);
        let tiny: Decimal = "0.000000000000000000000001".parse().unwrap();
        assert!(huge > tiny);
    }

    #[test]
    fn fixed_and_grouped_rendering() {
        let d: Decimal = "1850.129644".parse().unwrap();
        assert_eq!(d.to_fixed(2), "1850.13");
        assert_eq!(Decimal::from_int(7).to_fixed(2), "7.00");
        assert_eq!(Decimal::from_int(22_081_297_308).grouped(), "22,081,297,308");
        assert_eq!(Decimal::from_int(-1000).grouped(), "-1,000");
        assert_eq!(Decimal::from_int(999).grouped(), "999");
    }
}
