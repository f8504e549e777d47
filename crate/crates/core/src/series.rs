//! Amounts indexed by project year.

use serde::Serialize;

use crate::money::{Money, MoneyError, RoundingMode};

/// One amount per project year; `values[0]` is year 1.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
#[serde(transparent)]
pub struct YearSeries {
    values: Vec<Money>,
}

impl YearSeries {
    pub fn new(values: Vec<Money>) -> Self {
        YearSeries { values }
    }

    pub fn zeros(horizon: usize) -> Self {
        YearSeries { values: vec![Money::ZERO; horizon] }
    }

    pub fn horizon(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[Money] {
        &self.values
    }

    /// Value for a 1-based project year.
    pub fn year(&self, year: usize) -> Option<Money> {
        year.checked_sub(1).and_then(|i| self.values.get(i).copied())
    }

    pub fn iter(&self) -> impl Iterator<Item = Money> + '_ {
        self.values.iter().copied()
    }

    pub fn map<F>(&self, f: F) -> Result<YearSeries, MoneyError>
    where
        F: FnMut(Money) -> Result<Money, MoneyError>,
    {
        self.values.iter().copied().map(f).collect::<Result<Vec<_>, _>>().map(YearSeries::new)
    }

    /// Presentation view; the exact series is left untouched.
    pub fn rounded(&self, mode: RoundingMode) -> YearSeries {
        YearSeries::new(self.values.iter().map(|m| m.round(mode)).collect())
    }

    pub fn is_all_zero(&self) -> bool {
        self.values.iter().all(|m| m.is_zero())
    }
}

impl FromIterator<Money> for YearSeries {
    fn from_iter<I: IntoIterator<Item = Money>>(iter: I) -> Self {
        YearSeries::new(iter.into_iter().collect())
    }
}

/// Exact sum over all years.
pub fn sum_series(series: &YearSeries) -> Result<Money, MoneyError> {
    Money::checked_sum(series.values())
}
