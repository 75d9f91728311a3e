use crate::closed_form::{cf_count_endpoint, cf_count_window, mohanty_count, OrthogonalInstance};
use crate::corridor::{dp_count_vector, symmetry_bound, window_sum, Instance};
use crate::count::Count;
use crate::enumerate::enumerate_paths;
use crate::transfer::tm_count_vector;

use super::{fan_out, Exec, SweepReport};

/// Parameter ranges for [`check_engines`]; the enumeration oracle only runs
/// inside the smaller box.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EngineSweep {
    pub h_max: u32,
    pub n_max: u32,
    pub oracle_h_max: u32,
    pub oracle_n_max: u32,
}

impl Default for EngineSweep {
    fn default() -> Self {
        EngineSweep {
            h_max: 8,
            n_max: 24,
            oracle_h_max: 5,
            oracle_n_max: 12,
        }
    }
}

fn oracle_vector(h: u32, i: i64, n: u32) -> Vec<Count> {
    let mut hist = vec![0u64; h as usize + 1];
    for p in enumerate_paths(h, i, n, None).expect("oracle range stays under the cap") {
        hist[p.end() as usize] += 1;
    }
    hist.into_iter().map(Count::from).collect()
}

/// DP, closed form and transfer matrix agree on every endpoint and every
/// window inside the symmetry bounds; all three match enumeration in the
/// oracle box.
pub fn check_engines(params: EngineSweep, exec: Exec) -> SweepReport {
    let items: Vec<(u32, u32)> = (0..=params.h_max)
        .flat_map(|h| (0..=params.n_max).map(move |n| (h, n)))
        .collect();
    let parts = fan_out(exec, items, |(h, n)| {
        let mut rep = SweepReport::new("engines", "");
        let top = i64::from(h);
        let with_oracle = h <= params.oracle_h_max && n <= params.oracle_n_max;
        let dp: Vec<Vec<Count>> = (0..=top).map(|i| dp_count_vector(h, i, n)).collect();
        for i in 0..=top {
            let tm = tm_count_vector(h, i, u64::from(n));
            let oracle = with_oracle.then(|| oracle_vector(h, i, n));
            for l in 0..=top {
                let d = &dp[i as usize][l as usize];
                let at = || format!("h={h} n={n} i={i} ell={l}");
                rep.check(
                    || format!("{} dp~cf", at()),
                    d,
                    &cf_count_endpoint(h, i, l, n).unwrap(),
                );
                rep.check(|| format!("{} dp~tm", at()), d, &tm[l as usize]);
                if let Some(o) = &oracle {
                    rep.check(|| format!("{} dp~oracle", at()), d, &o[l as usize]);
                }
            }
            let windows = (-1..=top).flat_map(|k| {
                let m = if k == -1 { 0 } else { symmetry_bound(h, k) };
                (0..=m).map(move |j| (k, j))
            });
            for (k, j) in windows {
                if i > if k == -1 { 0 } else { symmetry_bound(h, k) } {
                    continue;
                }
                let inst = Instance::new(h, n, i, k, j);
                let d = window_sum(&dp[i as usize], &inst);
                let at = || format!("h={h} n={n} i={i} k={k} j={j}");
                rep.check(
                    || format!("{} dp~cf", at()),
                    &d,
                    &cf_count_window(h, i, k, j, n).unwrap(),
                );
                rep.check(|| format!("{} dp~tm", at()), &d, &window_sum(&tm, &inst));
                if let Some(o) = &oracle {
                    rep.check(|| format!("{} dp~oracle", at()), &d, &window_sum(o, &inst));
                }
            }
        }
        rep
    });
    let mut report = SweepReport::new(
        "engines",
        format!(
            "h<={}, n<={}; oracle h<={}, n<={}",
            params.h_max, params.n_max, params.oracle_h_max, params.oracle_n_max
        ),
    );
    report.absorb(parts);
    report
}

/// Bounded N/E path counts under the diagonal-to-orthogonal change of
/// variables `a = (n+i-ℓ)/2`, `b = (n-i+ℓ)/2`, `s = h-i+1`, `t = i+1`.
pub fn check_mohanty_mapping(h_max: u32, n_max: u32, exec: Exec) -> SweepReport {
    let items: Vec<(u32, u32)> = (0..=h_max)
        .flat_map(|h| (0..=n_max).map(move |n| (h, n)))
        .collect();
    let parts = fan_out(exec, items, |(h, n)| {
        let mut rep = SweepReport::new("mohanty-mapping", "");
        let top = i64::from(h);
        let n64 = i64::from(n);
        for i in 0..=top {
            let dp = dp_count_vector(h, i, n);
            for l in 0..=top {
                if (n64 + i - l).rem_euclid(2) != 0 || (l - i).abs() > n64 {
                    continue;
                }
                let a = ((n64 + i - l) / 2) as u64;
                let b = ((n64 - i + l) / 2) as u64;
                let oi = OrthogonalInstance::new(a, b, (top - i + 1) as u64, (i + 1) as u64)
                    .expect("mapped instance is in the extended domain");
                rep.check(
                    || format!("h={h} n={n} i={i} ell={l} (a={a} b={b})"),
                    &mohanty_count(oi).unwrap(),
                    &dp[l as usize],
                );
            }
        }
        rep
    });
    let mut report = SweepReport::new("mohanty-mapping", format!("h<={h_max}, n<={n_max}"));
    report.absorb(parts);
    report
}
