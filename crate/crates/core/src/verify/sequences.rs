use serde::Serialize;

use crate::corridor::{dp_count_window, Corridor, Window};
use crate::count::Count;

use super::table::{golden_table, GOLDEN_N_MAX};
use super::SweepReport;

/// Start and target window of a counting family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Family {
    pub h: u32,
    pub start: i64,
    pub k: i64,
    pub j: i64,
}

impl Family {
    fn full(h: u32) -> Self {
        let w = Window::full(Corridor::new(h));
        Family {
            h,
            start: 0,
            k: w.k,
            j: w.j,
        }
    }

    fn endpoint(h: u32, start: i64, ell: i64) -> Self {
        Family {
            h,
            start,
            k: ell,
            j: 0,
        }
    }
}

/// Where the listed terms come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    /// Read off the stored endpoint tables.
    Transcribed,
    /// Generated from the sequence's own formula.
    Definition,
    /// Fixed terms obtained by listing paths.
    BruteForce,
}

/// A catalogued integer sequence and the family it counts.
///
/// Term `t` is the family count at length `offset + t * stride`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReferenceSequence {
    pub label: &'static str,
    pub family: Family,
    pub offset: u32,
    pub stride: u32,
    pub source: Source,
    pub terms: Vec<Count>,
}

impl ReferenceSequence {
    /// Largest length covered by the listed terms.
    pub fn n_max(&self) -> u32 {
        self.offset + self.stride * (self.terms.len() as u32).saturating_sub(1)
    }
}

fn lit(xs: &[u64]) -> Vec<Count> {
    xs.iter().map(|&x| Count::from(x)).collect()
}

fn pow(base: u64, e: u32) -> Count {
    Count::from(base.pow(e))
}

fn fib(upto: usize) -> Vec<u64> {
    let mut f = vec![0u64, 1];
    while f.len() <= upto {
        let l = f.len();
        f.push(f[l - 1] + f[l - 2]);
    }
    f
}

fn golden_cell(h: u32, i: i64, ell: i64, n: u32) -> Count {
    let table = golden_table(h, GOLDEN_N_MAX).expect("stored table");
    let key = format!("{i},{ell},{n},");
    let line = table
        .lines()
        .find(|l| l.starts_with(&key))
        .expect("cell present in stored table");
    let v = &line[key.len()..];
    if v.is_empty() {
        Count::zero()
    } else {
        v.parse().expect("stored count")
    }
}

fn transcribed(label: &'static str, h: u32, i: i64, ell: i64, offset: u32) -> ReferenceSequence {
    let terms = (offset..=GOLDEN_N_MAX)
        .step_by(2)
        .map(|n| golden_cell(h, i, ell, n))
        .collect();
    ReferenceSequence {
        label,
        family: Family::endpoint(h, i, ell),
        offset,
        stride: 2,
        source: Source::Transcribed,
        terms,
    }
}

fn full(
    label: &'static str,
    h: u32,
    offset: u32,
    source: Source,
    terms: Vec<Count>,
) -> ReferenceSequence {
    ReferenceSequence {
        label,
        family: Family::full(h),
        offset,
        stride: 1,
        source,
        terms,
    }
}

fn dyck(label: &'static str, h: u32, source: Source, terms: Vec<Count>) -> ReferenceSequence {
    ReferenceSequence {
        label,
        family: Family::endpoint(h, 0, 0),
        offset: 0,
        stride: 2,
        source,
        terms,
    }
}

/// The whole catalogue.
pub fn references() -> Vec<ReferenceSequence> {
    use Source::*;
    let n = GOLDEN_N_MAX;
    let m = n / 2;
    let f = fib(2 * m as usize + 2);
    let a028495 = (0..=n)
        .map(|len| (0..=5).map(|ell| golden_cell(5, 0, ell, len)).sum())
        .collect();
    vec![
        full(
            "A000007",
            0,
            0,
            Definition,
            (0..=n).map(|t| Count::from(u64::from(t == 0))).collect(),
        ),
        full(
            "A000012",
            1,
            0,
            Definition,
            (0..=n).map(|_| Count::one()).collect(),
        ),
        full(
            "A016116",
            2,
            0,
            Definition,
            (0..=n).map(|t| pow(2, t / 2)).collect(),
        ),
        full(
            "A000045",
            3,
            0,
            Definition,
            (0..=n).map(|t| Count::from(f[t as usize + 1])).collect(),
        ),
        full(
            "A038754",
            4,
            1,
            Definition,
            (0..n)
                .map(|t| {
                    if t % 2 == 0 {
                        pow(3, t / 2)
                    } else {
                        &pow(3, t / 2) * 2
                    }
                })
                .collect(),
        ),
        full("A028495", 5, 0, Transcribed, a028495),
        full(
            "A030436",
            6,
            0,
            BruteForce,
            lit(&[
                1, 1, 2, 3, 6, 10, 20, 34, 68, 116, 232, 396, 792, 1352, 2704, 4616, 9232,
            ]),
        ),
        full(
            "A061551",
            7,
            0,
            BruteForce,
            lit(&[
                1, 1, 2, 3, 6, 10, 20, 35, 69, 124, 241, 440, 846, 1560, 2977, 5525, 10490,
            ]),
        ),
        full(
            "A178381",
            8,
            0,
            BruteForce,
            lit(&[
                1, 1, 2, 3, 6, 10, 20, 35, 70, 125, 250, 450, 900, 1625, 3250, 5875, 11750,
            ]),
        ),
        full(
            "A336675",
            9,
            0,
            BruteForce,
            lit(&[
                1, 1, 2, 3, 6, 10, 20, 35, 70, 126, 251, 460, 911, 1690, 3327, 6225, 12190,
            ]),
        ),
        full(
            "A336678",
            10,
            0,
            BruteForce,
            lit(&[
                1, 1, 2, 3, 6, 10, 20, 35, 70, 126, 252, 461, 922, 1702, 3404, 6315, 12630,
            ]),
        ),
        transcribed("A007051", 4, 1, 1, 0),
        transcribed("A000244", 4, 2, 1, 1),
        transcribed("A003462", 4, 1, 3, 2),
        transcribed("A025192", 4, 2, 2, 0),
        transcribed("A080937", 5, 0, 0, 0),
        transcribed("A094790", 5, 2, 1, 1),
        transcribed("A094789", 5, 1, 3, 2),
        transcribed("A005021", 5, 0, 4, 4),
        transcribed("A052975", 5, 2, 2, 0),
        transcribed("A060557", 5, 2, 3, 1),
        dyck(
            "A011782",
            2,
            Definition,
            (0..=m)
                .map(|t| if t == 0 { Count::one() } else { pow(2, t - 1) })
                .collect(),
        ),
        dyck(
            "A001519",
            3,
            Definition,
            (0..=m)
                .map(|t| Count::from(if t == 0 { 1 } else { f[2 * t as usize - 1] }))
                .collect(),
        ),
        transcribed("A124302", 4, 0, 0, 0),
        dyck(
            "A024175",
            6,
            BruteForce,
            lit(&[1, 1, 2, 5, 14, 42, 132, 428, 1416]),
        ),
        dyck(
            "A080938",
            7,
            BruteForce,
            lit(&[1, 1, 2, 5, 14, 42, 132, 429, 1429]),
        ),
        dyck(
            "A033191",
            8,
            BruteForce,
            lit(&[1, 1, 2, 5, 14, 42, 132, 429, 1430]),
        ),
        dyck(
            "A211216",
            9,
            BruteForce,
            lit(&[1, 1, 2, 5, 14, 42, 132, 429, 1430]),
        ),
    ]
}

/// Looks a catalogue entry up by label, ignoring case.
pub fn reference(label: &str) -> Option<ReferenceSequence> {
    references()
        .into_iter()
        .find(|r| r.label.eq_ignore_ascii_case(label))
}

/// Window counts for lengths `0..=n_max`.
pub fn sequence(h: u32, i: i64, k: i64, j: i64, n_max: u32) -> Vec<Count> {
    (0..=n_max)
        .map(|n| dp_count_window(h, i, k, j, n))
        .collect()
}

/// Checks every listed term whose length lies inside `computed`.
pub fn compare(reference: &ReferenceSequence, computed: &[Count]) -> SweepReport {
    let mut rep = SweepReport::new(
        reference.label,
        format!(
            "offset {}, stride {}, n<{}",
            reference.offset,
            reference.stride,
            computed.len()
        ),
    );
    for (t, term) in reference.terms.iter().enumerate() {
        let n = reference.offset as usize + t * reference.stride as usize;
        let Some(c) = computed.get(n) else { break };
        rep.check(|| format!("term {t} (n={n})"), c, term);
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corridor::{feasible_endpoints, Instance};
    use crate::enumerate::enumerate_paths;

    fn family_sequence(r: &ReferenceSequence, n_max: u32) -> Vec<Count> {
        let f = r.family;
        sequence(f.h, f.start, f.k, f.j, n_max)
    }

    #[test]
    fn catalogue_agrees() {
        let all = references();
        assert_eq!(all.len(), 28);
        for r in &all {
            let rep = compare(r, &family_sequence(r, r.n_max()));
            assert!(rep.passed(), "{}: {:?}", r.label, rep.failures);
            assert_eq!(rep.checked as usize, r.terms.len(), "{}", r.label);
        }
    }

    #[test]
    fn listed_fixtures_match_enumeration() {
        for r in references()
            .iter()
            .filter(|r| r.source == Source::BruteForce)
        {
            let f = r.family;
            for (t, term) in r.terms.iter().enumerate() {
                let n = r.offset + t as u32 * r.stride;
                let ends = feasible_endpoints(&Instance::new(f.h, n, f.start, f.k, f.j));
                let listed = enumerate_paths(f.h, f.start, n, Some(&ends))
                    .unwrap()
                    .count();
                assert_eq!(*term, listed as u64, "{} term {t}", r.label);
            }
        }
    }

    #[test]
    fn lookup_ignores_case() {
        let r = reference("a094789").unwrap();
        assert_eq!(r.label, "A094789");
        assert_eq!(
            r.family,
            Family {
                h: 5,
                start: 1,
                k: 3,
                j: 0
            }
        );
        assert_eq!(r.terms[..4], lit(&[1, 4, 14, 47])[..]);
        assert!(reference("A999999").is_none());
    }

    #[test]
    fn mismatch_is_reported() {
        let mut r = reference("A000045").unwrap();
        r.terms[5] = Count::from(9u64);
        let rep = compare(&r, &family_sequence(&r, 10));
        assert_eq!(rep.failures.len(), 1);
        assert_eq!(rep.failures[0].instance, "term 5 (n=5)");
        assert_eq!(rep.checked, 11);
    }

    #[test]
    fn distinct_dyck_bounds() {
        let h8 = family_sequence(&reference("A033191").unwrap(), 18);
        let h9 = family_sequence(&reference("A211216").unwrap(), 18);
        assert_eq!(h8[18], 4861);
        assert_eq!(h9[18], 4862);
    }
}
