use std::collections::HashSet;

use crate::bijection::{
    alt_flip_reverse, alt_full_reverse, applicability, correspond, BijectionCase, Variant,
};
use crate::corridor::{
    dp_count_window, feasible_endpoints, symmetry_bound, Corridor, Instance, Window,
};
use crate::enumerate::enumerate_paths;
use crate::error::Result;
use crate::path::Path;

use super::{fan_out, Exec, SweepReport};

fn source_set(h: u32, i: i64, k: i64, j: i64, n: u32) -> Vec<Path> {
    let ends = feasible_endpoints(&Instance::new(h, n, i, k, j));
    if ends.is_empty() {
        return Vec::new();
    }
    enumerate_paths(h, i, n, Some(&ends))
        .expect("bijection sweep stays under the enumeration cap")
        .collect()
}

fn main_instance(h: u32, k: i64, i: i64, j: i64, n: u32) -> SweepReport {
    let mut rep = SweepReport::new("bijection-main", "");
    let at = format!("h={h} n={n} k={k} i={i} j={j}");
    let source = source_set(h, i, k, j, n);
    let target_window = Window::new(k, i);
    let corridor = Corridor::new(h);
    let mut image = HashSet::with_capacity(source.len());
    for p in &source {
        let (q, case) = match correspond(p, h, k, i, j) {
            Ok(out) => out,
            Err(e) => {
                rep.fail(format!("{at} path={p}"), "error", e);
                continue;
            }
        };
        rep.checked += 1;
        let well_defined =
            q.base == j && q.fits(corridor) && q.ends_in(target_window) && q.len() == p.len();
        if !well_defined {
            rep.fail(
                format!("{at} path={p} well-defined"),
                &q,
                format!("start {j}, end in ⟨{k}±{i}⟩"),
            );
        }
        if case == BijectionCase::Equal && &q != p {
            rep.fail(format!("{at} path={p} identity"), &q, p);
        }
        match correspond(&q, h, k, j, i) {
            Ok((back, _)) if &back == p => {}
            Ok((back, _)) => rep.fail(format!("{at} path={p} inverse"), back, p),
            Err(e) => rep.fail(format!("{at} path={p} inverse"), "error", e),
        }
        if !image.insert(q.clone()) {
            rep.fail(format!("{at} path={p} injective"), &q, "duplicate image");
        }
    }
    rep.check(
        || format!("{at} |source|"),
        &dp_count_window(h, i, k, j, n),
        &crate::count::Count::from(source.len() as u64),
    );
    rep.check(
        || format!("{at} |image|"),
        &dp_count_window(h, j, k, i, n),
        &crate::count::Count::from(image.len() as u64),
    );
    rep
}

fn alternate_instance(
    variant: Variant,
    name: &str,
    map: fn(&Path, u32, i64, i64, i64) -> Result<Path>,
    (h, k, i, j, n): (u32, i64, i64, i64, u32),
) -> SweepReport {
    let mut rep = SweepReport::new(name, "");
    debug_assert!(applicability(h, n, variant));
    let at = format!("h={h} n={n} k={k} i={i} j={j}");
    let source = source_set(h, i, k, j, n);
    let mut image = HashSet::with_capacity(source.len());
    for p in &source {
        rep.checked += 1;
        match map(p, h, k, i, j) {
            Ok(q) => {
                if !image.insert(q.clone()) {
                    rep.fail(format!("{at} path={p}"), q, "duplicate image");
                }
            }
            Err(e) => rep.fail(format!("{at} path={p}"), "error", e),
        }
    }
    rep.check(
        || format!("{at} |image| vs target"),
        &crate::count::Count::from(image.len() as u64),
        &dp_count_window(h, j, k, i, n),
    );
    rep
}

/// `(h, k, i, j, n)` instances on which an alternate map is swept.
///
/// Full reversal: the two directions between bounded Grand Dyck paths and
/// Dyck prefixes at `k = h÷2`, plus, for odd `h`, every bounded `(i, j)` at
/// `k = h÷2`. Flip-then-reverse: Grand Dyck to Dyck prefix. Only lengths for
/// which [`applicability`] holds are listed.
pub fn alternate_frames(
    variant: Variant,
    h_max: u32,
    n_max: u32,
) -> Vec<(u32, i64, i64, i64, u32)> {
    let mut out = Vec::new();
    for h in 0..=h_max {
        let mid = i64::from(h / 2);
        let mut pairs: Vec<(i64, i64)> = match variant {
            Variant::Main => Vec::new(),
            Variant::FullReverse if h % 2 == 1 => {
                let m = symmetry_bound(h, mid);
                (0..=m).flat_map(|i| (0..=m).map(move |j| (i, j))).collect()
            }
            Variant::FullReverse => vec![(mid, 0), (0, mid)],
            Variant::FlipReverse => vec![(mid, 0)],
        };
        pairs.dedup();
        for n in 0..=n_max {
            if !applicability(h, n, variant) {
                continue;
            }
            out.extend(pairs.iter().map(|&(i, j)| (h, mid, i, j, n)));
        }
    }
    out
}

/// Main correspondence on every bounded instance, then both alternate maps
/// on their frames.
pub fn check_bijections(h_max: u32, n_max: u32, exec: Exec) -> Vec<SweepReport> {
    let mut items = Vec::new();
    for h in 0..=h_max {
        for k in -1..=i64::from(h) {
            let m = if k == -1 { 0 } else { symmetry_bound(h, k) };
            for i in 0..=m {
                for j in 0..=m {
                    for n in 0..=n_max {
                        items.push((h, k, i, j, n));
                    }
                }
            }
        }
    }
    let parts = fan_out(exec, items, |(h, k, i, j, n)| main_instance(h, k, i, j, n));
    let mut main = SweepReport::new(
        "bijection-main",
        format!("h<={h_max}, n<={n_max}, all bounded (k, i, j)"),
    );
    main.absorb(parts);
    main.highlights.push(worked_example_highlight());

    let full = fan_out(
        exec,
        alternate_frames(Variant::FullReverse, h_max, n_max),
        |f| {
            alternate_instance(
                Variant::FullReverse,
                "bijection-full-reverse",
                alt_full_reverse,
                f,
            )
        },
    );
    let mut full_rep = SweepReport::new(
        "bijection-full-reverse",
        format!("h<={h_max}, n<={n_max}, k=h/2 frames where applicable"),
    );
    full_rep.absorb(full);

    let flip = fan_out(
        exec,
        alternate_frames(Variant::FlipReverse, h_max, n_max),
        |f| {
            alternate_instance(
                Variant::FlipReverse,
                "bijection-flip-reverse",
                alt_flip_reverse,
                f,
            )
        },
    );
    let mut flip_rep = SweepReport::new(
        "bijection-flip-reverse",
        format!("h<={h_max}, n<={n_max}, Grand Dyck to Dyck prefix where applicable"),
    );
    flip_rep.absorb(flip);

    vec![main, full_rep, flip_rep]
}

fn worked_example_highlight() -> super::Record {
    let p: Path = "1:DUDUDUUUUUDU".parse().expect("literal path");
    let q = correspond(&p, 5, 3, 1, 2)
        .map(|(q, _)| crate::ta::ta_encode(&q, 3).to_string())
        .unwrap_or_else(|e| e.to_string());
    super::Record::new(
        "h=5 n=12 k=3 i=1 j=2 path=1:DUDUDUUUUUDU",
        crate::ta::ta_encode(&p, 3),
        q,
    )
}
