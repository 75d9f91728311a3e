//! Exhaustive identity, engine and bijection sweeps, reference sequences and
//! table rendering.

mod bijections;
mod engines;
mod identities;
mod sequences;
mod table;

pub use bijections::{alternate_frames, check_bijections};
pub use engines::{check_engines, check_mohanty_mapping, EngineSweep};
pub use identities::{
    check_identities, check_theorem_pair, diagnose_theorem_out_of_domain, CountTable, PairCheck,
};
pub use sequences::{compare, reference, references, sequence, Family, ReferenceSequence, Source};
pub use table::{golden_compare, golden_table, render_table};

use serde::Serialize;

/// How a sweep distributes its independent instances.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    /// Rayon fan-out when the `parallel` feature is on, sequential otherwise.
    #[default]
    Parallel,
}

/// Maps `f` over `items`, keeping input order in the output.
pub(crate) fn fan_out<T, R, F>(exec: Exec, items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => {
            use rayon::prelude::*;
            items.into_par_iter().map(f).collect()
        }
        _ => items.into_iter().map(f).collect(),
    }
}

/// One checked instance with both sides of the comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub instance: String,
    pub lhs: String,
    pub rhs: String,
}

impl Record {
    pub fn new(instance: impl Into<String>, lhs: impl ToString, rhs: impl ToString) -> Self {
        Record {
            instance: instance.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }
}

/// Outcome of checking one named identity over a parameter range.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    #[serde(rename = "suite")]
    pub name: String,
    pub ranges: String,
    #[serde(serialize_with = "as_string")]
    pub checked: u64,
    pub failures: Vec<Record>,
    /// Noteworthy passing instances, e.g. worked examples.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub highlights: Vec<Record>,
}

fn as_string<S: serde::Serializer>(v: &u64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

impl SweepReport {
    pub fn new(name: impl Into<String>, ranges: impl Into<String>) -> Self {
        SweepReport {
            name: name.into(),
            ranges: ranges.into(),
            checked: 0,
            failures: Vec::new(),
            highlights: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Records one comparison.
    pub fn check<T: PartialEq + ToString>(
        &mut self,
        instance: impl FnOnce() -> String,
        lhs: &T,
        rhs: &T,
    ) -> bool {
        self.checked += 1;
        let ok = lhs == rhs;
        if !ok {
            self.failures
                .push(Record::new(instance(), lhs.to_string(), rhs.to_string()));
        }
        ok
    }

    pub fn fail(&mut self, instance: impl Into<String>, lhs: impl ToString, rhs: impl ToString) {
        self.failures.push(Record::new(instance, lhs, rhs));
    }

    /// Folds partial reports (same name) into this one, in order.
    pub fn absorb(&mut self, parts: impl IntoIterator<Item = SweepReport>) {
        for p in parts {
            self.checked += p.checked;
            self.failures.extend(p.failures);
            self.highlights.extend(p.highlights);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_json_shape() {
        let mut r = SweepReport::new("demo", "h<=1");
        r.check(|| "a".into(), &1u64, &1u64);
        r.check(|| "b".into(), &1u64, &2u64);
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["suite"], "demo");
        assert_eq!(json["checked"], "2");
        assert_eq!(json["failures"][0]["instance"], "b");
        assert_eq!(json["failures"][0]["rhs"], "2");
        assert!(json.get("highlights").is_none());
        assert!(!r.passed());
    }

    #[test]
    fn fan_out_keeps_order() {
        let items: Vec<u32> = (0..200).collect();
        let seq = fan_out(Exec::Sequential, items.clone(), |x| x * 3);
        let par = fan_out(Exec::Parallel, items, |x| x * 3);
        assert_eq!(seq, par);
    }
}
