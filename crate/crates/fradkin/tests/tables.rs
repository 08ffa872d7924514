//! Regenerated commutation tables against hand-transcribed reference tables.
//! Cells are read as [row, column].

use fradkin::rational::{q, qq, Q};
use fradkin::tables::{reference_tables, CommTable};

mod common;

use common::fixtures::{fixtures, A_PLUS_2};

fn check(omega: &Q) {
    let tables = reference_tables(omega).unwrap();
    assert_eq!(tables.len(), 10);
    for ((id, table), (fid, rows)) in tables.iter().zip(fixtures()) {
        assert_eq!(*id, fid);
        assert_eq!(table.labels.len(), rows.len(), "{id}");
        assert_eq!(table.mismatches(rows, omega).unwrap(), 0, "{id}");
    }
}

#[test]
fn all_reference_tables_at_unit_omega() {
    check(&q(1));
}

#[test]
fn all_reference_tables_at_rational_omega() {
    check(&qq(7, 3));
}

#[test]
fn a_corrupted_fixture_is_caught() {
    let tables = reference_tables(&q(1)).unwrap();
    let t: &CommTable = &tables[0].1;
    let bad: &[&[&str]] = &[&["0", "4w f21", "4w f12"], A_PLUS_2[1], A_PLUS_2[2]];
    assert_eq!(t.mismatches(bad, &q(1)).unwrap(), 1);
}
