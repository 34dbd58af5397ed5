use serde::Serialize;

use forestry::bounds::{forest_table, ForestTableRow};

use crate::output::{ceil4, emit, json, Format, Table};
use crate::{Common, Failure};

const DEGREES: [usize; 5] = [5, 6, 7, 8, 9];

#[derive(Serialize)]
struct TableReport<'a> {
    table: &'a str,
    rows: &'a [ForestTableRow],
}

pub fn run(which: &str, common: &Common) -> Result<(), Failure> {
    let rows = forest_table(&DEGREES)?;
    let text = match common.format {
        Format::Json => json(&TableReport { table: which, rows: &rows }),
        Format::Tsv => build(which, &rows).tsv(),
        Format::Pretty => build(which, &rows).pretty(),
    };
    emit(common, &text)
}

/// Bound columns are rounded up; `α` and `c` are rounded to nearest.
fn build(which: &str, rows: &[ForestTableRow]) -> Table {
    if which == "1" {
        let mut t = Table::new(vec!["d", "new_bound", "ks_bound", "product_degree", "average_degree"]);
        for r in rows {
            t.push(vec![r.d.to_string(), ceil4(r.new_bound), ceil4(r.ks), format!("{}", r.product), ceil4(r.average)]);
        }
        t
    } else {
        let mut t = Table::new(vec!["d", "new_bound", "ks_bound", "alpha", "c"]);
        for r in rows {
            t.push(vec![
                r.d.to_string(),
                ceil4(r.new_bound),
                ceil4(r.ks),
                format!("{:.4}", r.alpha),
                format!("{:.4}", r.c),
            ]);
        }
        t
    }
}
