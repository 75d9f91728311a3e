use std::fmt::Write as _;

use crate::corridor::dp_count_vector;
use crate::error::{Error, Result};

use super::SweepReport;

const TABLE_H4: &str = include_str!("../../golden/table_h4.csv");
const TABLE_H5: &str = include_str!("../../golden/table_h5.csv");

/// Largest length in the stored tables.
pub const GOLDEN_N_MAX: u32 = 16;

/// Long-format CSV `i,ell,n,count` of all endpoint counts, starts and
/// endpoints descending, lengths ascending; zero cells are left blank.
pub fn render_table(h: u32, n_max: u32) -> String {
    let mut out = String::from("i,ell,n,count\n");
    let top = i64::from(h);
    for i in (0..=top).rev() {
        let columns: Vec<_> = (0..=n_max).map(|n| dp_count_vector(h, i, n)).collect();
        for ell in (0..=top).rev() {
            for (n, col) in columns.iter().enumerate() {
                let c = &col[ell as usize];
                if c.is_zero() {
                    writeln!(out, "{i},{ell},{n},").unwrap();
                } else {
                    writeln!(out, "{i},{ell},{n},{c}").unwrap();
                }
            }
        }
    }
    out
}

/// Stored reference table for `h`, when one exists and covers `n_max`.
pub fn golden_table(h: u32, n_max: u32) -> Option<&'static str> {
    if n_max != GOLDEN_N_MAX {
        return None;
    }
    match h {
        4 => Some(TABLE_H4),
        5 => Some(TABLE_H5),
        _ => None,
    }
}

/// Renders the table and compares it line by line with the stored one.
pub fn golden_compare(h: u32, n_max: u32) -> Result<SweepReport> {
    let golden = golden_table(h, n_max).ok_or(Error::NoGolden { h, n_max })?;
    let rendered = render_table(h, n_max);
    let mut rep = SweepReport::new(format!("table-h{h}"), format!("h={h}, n<={n_max}"));
    let (mut a, mut b) = (rendered.lines(), golden.lines());
    loop {
        match (a.next(), b.next()) {
            (None, None) => break,
            (x, y) => {
                let (x, y) = (x.unwrap_or("<eof>"), y.unwrap_or("<eof>"));
                let line = rep.checked + 1;
                if !rep.check(|| format!("line {line}"), &x.to_string(), &y.to_string()) {
                    break;
                }
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_shape() {
        let t = render_table(1, 2);
        assert_eq!(
            t,
            "i,ell,n,count\n1,1,0,1\n1,1,1,\n1,1,2,1\n1,0,0,\n1,0,1,1\n1,0,2,\n\
             0,1,0,\n0,1,1,1\n0,1,2,\n0,0,0,1\n0,0,1,\n0,0,2,1\n"
        );
    }

    #[test]
    fn both_tables_match() {
        for h in [4, 5] {
            let rep = golden_compare(h, GOLDEN_N_MAX).unwrap();
            assert!(rep.passed(), "{:?}", rep.failures);
            assert_eq!(
                rep.checked as usize,
                golden_table(h, 16).unwrap().lines().count()
            );
        }
    }

    #[test]
    fn missing_golden() {
        assert_eq!(
            golden_compare(6, 16).unwrap_err(),
            Error::NoGolden { h: 6, n_max: 16 }
        );
        assert!(golden_table(4, 15).is_none());
    }
}
