//! The bundled baseline against every printed figure of the case study.

use roi_forge_core::enrollment::{
    estimate_growth, incremental_intake, per_student_net, table15_compat, yoy_changes, GrowthSelector,
};
use roi_forge_core::report::{export_tables, Format};
use roi_forge_core::{baseline, evaluate, Evaluation, Money, Rate, RoundingMode, YearSeries};

fn eval() -> Evaluation {
    evaluate(&baseline()).expect("baseline evaluates")
}

fn rounded(s: &YearSeries) -> Vec<i128> {
    s.iter().map(|m| m.round(RoundingMode::HalfUp).decimal().to_i128().unwrap()).collect()
}

fn whole(m: Money) -> i128 {
    m.round(RoundingMode::HalfUp).decimal().to_i128().unwrap()
}

#[test]
fn investment_ledger() {
    let e = eval();
    let inv = &e.investment;
    assert_eq!(inv.staff, Money::rupiah(136_500_000));
    assert_eq!(inv.hardware, Money::rupiah(82_000_000));
    assert_eq!(inv.network, Money::rupiah(5_800_000));
    assert_eq!(inv.support, Money::rupiah(14_400_000));
    assert_eq!(inv.total, Money::rupiah(238_700_000));
}

#[test]
fn staff_wages() {
    let s = baseline();
    let costs: Vec<Money> =
        s.investment.staff.iter().map(|l| roi_forge_core::appraisal::staff_cost(l).unwrap()).collect();
    let expected = [36_400_000, 54_600_000, 36_400_000, 9_100_000].map(Money::rupiah);
    assert_eq!(costs, expected);
    assert_eq!(s.investment.staff[0].total_hours().unwrap(), "1820".parse().unwrap());
}

#[test]
fn running_costs() {
    let e = eval();
    let rows: Vec<Vec<i128>> = e.running_costs.iter().map(|l| rounded(&l.cost)).collect();
    assert_eq!(rows[0], vec![0, 30_150_000, 27_135_000, 24_421_500, 21_979_350]);
    assert_eq!(rows[1], vec![0, 0, 16_000_000, 14_400_000, 12_960_000]);
    assert_eq!(rows[2], vec![0, 0, 24_000_000, 21_600_000, 19_440_000]);
    assert_eq!(rounded(&e.running_total), vec![0, 30_150_000, 67_135_000, 60_421_500, 54_379_350]);
    for l in &e.running_costs {
        assert!(l.cost.iter().all(|m| m.decimal().is_integer()), "{} is not whole rupiah", l.name);
    }
    assert_eq!(e.result.statement.running_costs, Money::rupiah(212_085_850));
}

const TABLE10: [[i128; 5]; 8] = [
    [360_000, 396_000, 435_600, 479_160, 527_076],
    [1_100_000, 1_210_000, 1_331_000, 1_464_100, 1_610_510],
    [450_000, 495_000, 544_500, 598_950, 658_845],
    [12_000_000, 13_200_000, 14_520_000, 15_972_000, 17_569_200],
    [35_000_000, 38_500_000, 42_350_000, 46_585_000, 51_243_500],
    [60_000_000, 66_000_000, 72_600_000, 79_860_000, 87_846_000],
    [72_000_000, 79_200_000, 87_120_000, 95_832_000, 105_415_200],
    [48_000_000, 52_800_000, 58_080_000, 63_888_000, 70_276_800],
];

#[test]
fn operational_costs() {
    let e = eval();
    for (line, expected) in e.operational_costs.iter().zip(TABLE10) {
        assert_eq!(rounded(&line.cost), expected, "{}", line.name);
    }
    assert_eq!(
        rounded(&e.operational_total),
        vec![228_910_000, 251_801_000, 276_981_100, 304_679_210, 335_147_131]
    );
}

const TABLE11: [[i128; 5]; 8] = [
    [270_000, 297_000, 326_700, 359_370, 395_307],
    [825_000, 907_500, 998_250, 1_098_075, 1_207_883],
    [337_500, 371_250, 408_375, 449_213, 494_134],
    [12_000_000, 13_200_000, 14_520_000, 15_972_000, 17_569_200],
    [26_250_000, 28_875_000, 31_762_500, 34_938_750, 38_432_625],
    [60_000_000, 66_000_000, 72_600_000, 79_860_000, 87_846_000],
    [72_000_000, 79_200_000, 87_120_000, 95_832_000, 105_415_200],
    [48_000_000, 52_800_000, 58_080_000, 63_888_000, 70_276_800],
];

#[test]
fn operational_savings() {
    let e = eval();
    for (line, expected) in e.operational_costs.iter().zip(TABLE11) {
        let got = rounded(line.saving.as_ref().unwrap());
        for (g, x) in got.iter().zip(expected) {
            assert!((g - x).abs() <= 1, "{}: {got:?} vs {expected:?}", line.name);
        }
    }
    assert_eq!(
        rounded(&e.savings_total),
        vec![219_682_500, 241_650_750, 265_815_825, 292_397_408, 321_637_148]
    );
    let fotocopy = e.operational_costs[2].saving.as_ref().unwrap();
    assert_eq!(fotocopy.year(4).unwrap(), Money::parse("449212.5").unwrap());
    assert_eq!(e.result.statement.operational_savings.round(RoundingMode::HalfUp), Money::rupiah(1_341_183_631));
}

#[test]
fn productivity() {
    let e = eval();
    assert_eq!(rounded(&e.productivity), vec![54_480_000, 59_928_000, 65_920_800, 72_512_880, 79_764_168]);
    assert_eq!(e.result.statement.productivity_benefit, Money::rupiah(332_605_848));
}

#[test]
fn enrollment_history_changes() {
    let s = baseline();
    let changes = yoy_changes(&s.enrollment.history, &mut Vec::new()).unwrap();
    let printed: [(i32, i64, i64); 19] = [
        (1987, -464, -30),
        (1988, -207, -19),
        (1989, -49, -5),
        (1990, 549, 65),
        (1991, -7, -1),
        (1992, 112, 8),
        (1993, 31, 2),
        (1994, 38, 2),
        (1995, 472, 30),
        (1996, -207, -10),
        (1997, 297, 16),
        (1998, -133, -6),
        (1999, 396, 20),
        (2000, -194, -8),
        (2001, -419, -19),
        (2002, -213, -12),
        (2003, -350, -22),
        (2004, 118, 10),
        (2005, -613, -46),
    ];
    let got: Vec<(i32, i64, i64)> = changes.iter().map(|c| (c.year, c.delta, c.pct.unwrap())).collect();
    assert_eq!(got, printed);
    let column_totals: Vec<u64> = (0..4).map(|p| s.enrollment.history.rows.iter().map(|r| r.counts[p]).sum()).collect();
    assert_eq!(column_totals, vec![7_686, 17_225, 1_580, 4_445]);
    assert_eq!(s.enrollment.history.rows.iter().map(|r| r.sum()).sum::<u64>(), 30_936);
}

#[test]
fn enrollment_inputs() {
    let s = baseline();
    assert_eq!(
        estimate_growth(&s.enrollment.history, GrowthSelector::PositiveOnly).unwrap(),
        Rate::parse("0.19125").unwrap()
    );
    assert_eq!(per_student_net(&s.enrollment.fee, &mut Vec::new()).unwrap(), Money::rupiah(6_201_000));
    let intake = incremental_intake(&s.enrollment.baseline().unwrap(), s.enrollment.growth).unwrap();
    assert_eq!(intake.per_program, vec![62, 59, 7, 16]);
    assert_eq!(intake.total, 144);
}

#[test]
fn enrollment_revenue() {
    let e = eval();
    let printed = [892_944_000i128, 2_285_936_640, 4_041_107_366, 5_672_208_882, 7_727_396_791];
    for (got, want) in rounded(&e.enrollment.revenue).iter().zip(printed) {
        assert!((got - want).abs() <= 1, "{got} vs {want}");
    }
    assert_eq!(e.enrollment.revenue.year(2).unwrap(), Money::rupiah(2_285_936_640));
    assert_eq!(whole(e.result.statement.enrollment_benefit), 20_619_593_679);
}

#[test]
fn per_program_revenue_view() {
    let e = eval();
    let compat = table15_compat(&e.enrollment.revenue).unwrap();
    let printed = [297_648_000i128, 761_978_880, 1_347_035_789, 1_890_736_294, 2_575_798_930];
    for (got, want) in rounded(&compat).iter().zip(printed) {
        assert!((got - want).abs() <= 1, "{got} vs {want}");
    }
    let ti: Vec<i128> = rounded(&table15_compat(&e.program_revenue[0]).unwrap());
    assert_eq!(ti, vec![128_154_000, 328_074_240, 579_973_742, 814_067_015, 1_109_024_539]);
    let sk: Vec<i128> = rounded(&table15_compat(&e.program_revenue[2]).unwrap());
    assert_eq!(sk, vec![14_469_000, 37_040_640, 65_480_906, 91_910_792, 125_212_448]);
    assert_eq!(e.program_revenue[0].year(2).unwrap(), Money::rupiah(984_222_720));

    let students: Vec<Vec<u64>> = e.intake_by_year.iter().map(|y| y.per_program.clone()).collect();
    assert_eq!(
        students,
        vec![vec![62, 59, 7, 16], vec![74, 71, 8, 19], vec![89, 85, 10, 23], vec![107, 102, 12, 28], vec![129, 122, 15, 33]]
    );
    assert!(e.diagnostics.iter().any(|d| d.message.contains("sum to 172") && d.message.contains("173")));
}

#[test]
fn cash_flow_and_roi() {
    let e = eval();
    let st = &e.result.statement;
    assert_eq!(whole(st.enrollment_benefit), 20_619_593_679);
    assert_eq!(whole(st.productivity_benefit), 332_605_848);
    assert_eq!(whole(st.net_economic_benefit), 20_952_199_527);
    assert_eq!(whole(st.operational_savings), 1_341_183_631);
    assert_eq!(whole(st.pre_tax_income), 22_293_383_158);
    assert_eq!(whole(st.running_costs), 212_085_850);
    assert_eq!(whole(st.net_cash_flow), 22_081_297_308);
    assert_eq!(e.result.roi_display(), "1850.13");
    let diff = e.result.roi_percent.checked_sub("1850.13".parse().unwrap()).unwrap().abs().unwrap();
    assert!(diff <= "0.01".parse().unwrap());
}

#[test]
fn benefit_matrix() {
    use roi_forge_core::taxonomy::{Measurability::*, Tangibility::*};
    let e = eval();
    assert_eq!(e.matrix.cell_ids(Tangible, Measurable), vec![1, 2]);
    assert_eq!(e.matrix.cell_ids(Tangible, Immeasurable), vec![3]);
    assert_eq!(e.matrix.cell_ids(Intangible, Measurable), vec![4, 5, 6]);
    assert_eq!(e.matrix.cell_ids(Intangible, Immeasurable), (7..=13).collect::<Vec<_>>());
    assert_eq!(e.financial_benefit_ids, vec![1, 2, 4, 6]);
}

#[test]
fn supporting_measures() {
    let e = eval();
    assert_eq!(e.result.payback_year, Some(1));
    assert_eq!(rounded(&e.yearly_net)[0], 1_167_106_500);
    // independently computed with exact fractions: 2458687929656104/161051
    assert_eq!(whole(e.result.npv.unwrap()), 15_266_517_623);
}

#[test]
fn exported_statement_line() {
    let docs = export_tables(&eval(), Format::Csv, false).unwrap();
    let t19 = &docs.iter().find(|(n, _)| n == "table19.csv").unwrap().1;
    assert!(t19.contains("Arus Kas Bersih,22081297308"));
}
