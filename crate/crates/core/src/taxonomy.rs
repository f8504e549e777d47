//! Benefit classification on the tangible/intangible × measurable/immeasurable
//! matrix, and selection of the benefits that carry money into the ROI.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::diagnostics::Diagnostic;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Tangibility {
    Tangible,
    Intangible,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Measurability {
    Measurable,
    Immeasurable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DomainClass {
    Technology,
    Business,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ValueClass {
    Financial,
    NonFinancial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    SimpleRoi,
    None,
}

macro_rules! keyword_enum {
    ($ty:ty { $($variant:ident => $text:literal),+ $(,)? }) => {
        impl $ty {
            pub const KEYWORDS: &'static [&'static str] = &[$($text),+];

            pub fn as_str(self) -> &'static str {
                match self { $(<$ty>::$variant => $text),+ }
            }

            pub fn from_keyword(s: &str) -> Option<Self> {
                match s { $($text => Some(<$ty>::$variant),)+ _ => None }
            }
        }
    };
}

keyword_enum!(Tangibility { Tangible => "tangible", Intangible => "intangible" });
keyword_enum!(Measurability { Measurable => "measurable", Immeasurable => "immeasurable" });
keyword_enum!(DomainClass { Technology => "technology", Business => "business" });
keyword_enum!(ValueClass { Financial => "financial", NonFinancial => "non_financial" });
keyword_enum!(Method { SimpleRoi => "simple_roi", None => "none" });

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BenefitItem {
    pub id: u32,
    pub name: String,
    pub tangibility: Tangibility,
    pub measurability: Measurability,
    pub domain_class: DomainClass,
    pub value_class: ValueClass,
    pub method: Method,
}

impl BenefitItem {
    /// The method column must agree with measurability and value class.
    pub fn is_consistent(&self) -> bool {
        let roi = self.method == Method::SimpleRoi;
        let measurable = self.measurability == Measurability::Measurable;
        let financial = self.value_class == ValueClass::Financial;
        roi == measurable && measurable == financial
    }
}

/// The 2×2 benefit matrix. Rows are Tangible then Intangible, columns are
/// Measurable then Immeasurable.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BenefitMatrix {
    cells: [[Vec<BenefitItem>; 2]; 2],
}

impl BenefitMatrix {
    fn index(t: Tangibility, m: Measurability) -> (usize, usize) {
        let row = match t {
            Tangibility::Tangible => 0,
            Tangibility::Intangible => 1,
        };
        let col = match m {
            Measurability::Measurable => 0,
            Measurability::Immeasurable => 1,
        };
        (row, col)
    }

    pub fn cell(&self, t: Tangibility, m: Measurability) -> &[BenefitItem] {
        let (r, c) = Self::index(t, m);
        &self.cells[r][c]
    }

    pub fn cell_ids(&self, t: Tangibility, m: Measurability) -> Vec<u32> {
        self.cell(t, m).iter().map(|b| b.id).collect()
    }

    /// Cells in row-major order with their keys.
    pub fn iter(&self) -> impl Iterator<Item = ((Tangibility, Measurability), &[BenefitItem])> {
        [Tangibility::Tangible, Tangibility::Intangible].into_iter().flat_map(move |t| {
            [Measurability::Measurable, Measurability::Immeasurable]
                .into_iter()
                .map(move |m| ((t, m), self.cell(t, m)))
        })
    }

    pub fn len(&self) -> usize {
        self.cells.iter().flatten().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn duplicate_ids(items: &[BenefitItem]) -> Vec<(usize, u32)> {
    let mut seen = BTreeSet::new();
    items
        .iter()
        .enumerate()
        .filter(|(_, b)| !seen.insert(b.id))
        .map(|(i, b)| (i, b.id))
        .collect()
}

pub fn classify_matrix(items: &[BenefitItem]) -> Result<BenefitMatrix> {
    if let Some((i, id)) = duplicate_ids(items).first() {
        return Err(Error::validation(format!("benefits.items[{i}].id"), format!("duplicate benefit id {id}")));
    }
    let mut matrix = BenefitMatrix::default();
    for item in items {
        let (r, c) = BenefitMatrix::index(item.tangibility, item.measurability);
        matrix.cells[r][c].push(item.clone());
    }
    Ok(matrix)
}

/// Benefits measured by Simple ROI, minus explicit exclusions, in their
/// original order. Exclusions naming no item produce a warning.
pub fn financial_benefits<'a>(
    items: &'a [BenefitItem],
    exclusions: &BTreeSet<u32>,
    diagnostics: &mut Vec<Diagnostic>,
) -> Vec<&'a BenefitItem> {
    for id in exclusions {
        if !items.iter().any(|b| b.id == *id) {
            diagnostics.push(Diagnostic::warning(
                "benefits.exclusions",
                format!("excluded benefit id {id} is not defined"),
            ));
        }
    }
    items
        .iter()
        .filter(|b| b.method == Method::SimpleRoi && !exclusions.contains(&b.id))
        .collect()
}

/// Duplicate ids and method-rule violations, in document order.
pub fn check_items(items: &[BenefitItem]) -> Vec<Diagnostic> {
    let dups: BTreeSet<usize> = duplicate_ids(items).into_iter().map(|(i, _)| i).collect();
    let mut out = Vec::new();
    for (i, item) in items.iter().enumerate() {
        if dups.contains(&i) {
            out.push(Diagnostic::error(format!("[{i}].id"), format!("duplicate benefit id {}", item.id)));
        }
        if !item.is_consistent() {
            out.push(Diagnostic::error(
                format!("[{i}].method"),
                format!(
                    "benefit {} is {}/{} but uses method {}; simple_roi requires a measurable financial benefit",
                    item.id,
                    item.measurability.as_str(),
                    item.value_class.as_str(),
                    item.method.as_str()
                ),
            ));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn item(id: u32, t: Tangibility, m: Measurability) -> BenefitItem {
        let financial = m == Measurability::Measurable;
        BenefitItem {
            id,
            name: format!("benefit {id}"),
            tangibility: t,
            measurability: m,
            domain_class: DomainClass::Business,
            value_class: if financial { ValueClass::Financial } else { ValueClass::NonFinancial },
            method: if financial { Method::SimpleRoi } else { Method::None },
        }
    }

    fn case_items() -> Vec<BenefitItem> {
        use Measurability::*;
        use Tangibility::*;
        let mut items = vec![
            item(1, Tangible, Measurable),
            item(2, Tangible, Measurable),
            item(3, Tangible, Immeasurable),
            item(4, Intangible, Measurable),
            item(5, Intangible, Measurable),
            item(6, Intangible, Measurable),
        ];
        items.extend((7..=13).map(|id| item(id, Intangible, Immeasurable)));
        items
    }

    #[test]
    fn case_matrix_cells() {
        use Measurability::*;
        use Tangibility::*;
        let m = classify_matrix(&case_items()).unwrap();
        assert_eq!(m.cell_ids(Tangible, Measurable), vec![1, 2]);
        assert_eq!(m.cell_ids(Tangible, Immeasurable), vec![3]);
        assert_eq!(m.cell_ids(Intangible, Measurable), vec![4, 5, 6]);
        assert_eq!(m.cell_ids(Intangible, Immeasurable), (7..=13).collect::<Vec<_>>());
        assert_eq!(m.len(), 13);
    }

    #[test]
    fn empty_and_single_item_matrices() {
        let m = classify_matrix(&[]).unwrap();
        assert!(m.iter().all(|(_, cell)| cell.is_empty()));
        let m = classify_matrix(&[item(1, Tangibility::Tangible, Measurability::Measurable)]).unwrap();
        let non_empty: Vec<_> = m.iter().filter(|(_, c)| !c.is_empty()).map(|(k, _)| k).collect();
        assert_eq!(non_empty, vec![(Tangibility::Tangible, Measurability::Measurable)]);
    }

    #[test]
    fn duplicate_ids_rejected() {
        let items = vec![
            item(1, Tangibility::Tangible, Measurability::Measurable),
            item(1, Tangibility::Intangible, Measurability::Measurable),
        ];
        assert!(matches!(classify_matrix(&items), Err(Error::Validation { .. })));
        assert_eq!(check_items(&items).len(), 1);
    }

    #[test]
    fn financial_selection_with_and_without_exclusions() {
        let items = case_items();
        let mut diags = Vec::new();
        let ids = |sel: Vec<&BenefitItem>| sel.iter().map(|b| b.id).collect::<Vec<_>>();
        assert_eq!(ids(financial_benefits(&items, &BTreeSet::from([5]), &mut diags)), vec![1, 2, 4, 6]);
        assert_eq!(ids(financial_benefits(&items, &BTreeSet::new(), &mut diags)), vec![1, 2, 4, 5, 6]);
        assert!(diags.is_empty());
    }

    #[test]
    fn unknown_exclusion_warns() {
        let mut diags = Vec::new();
        financial_benefits(&case_items(), &BTreeSet::from([99]), &mut diags);
        assert_eq!(diags.len(), 1);
        assert!(!diags[0].is_error());
    }

    #[test]
    fn all_immeasurable_yields_nothing() {
        let items: Vec<_> = (1..=4).map(|id| item(id, Tangibility::Intangible, Measurability::Immeasurable)).collect();
        assert!(financial_benefits(&items, &BTreeSet::new(), &mut Vec::new()).is_empty());
    }

    #[test]
    fn method_rule_violation_flagged() {
        let mut bad = item(3, Tangibility::Tangible, Measurability::Immeasurable);
        bad.method = Method::SimpleRoi;
        let diags = check_items(&[bad]);
        assert_eq!(diags.len(), 1);
        assert_eq!(diags[0].path, "[0].method");
    }
}
