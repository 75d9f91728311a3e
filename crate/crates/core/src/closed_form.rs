//! Reflection-method closed forms: alternating binomial sums over mirror
//! images across the two corridor walls.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::corridor::Corridor;
use crate::count::Count;
use crate::error::{Error, Result};

/// `C(n, m)`, zero for `m < 0` or `m > n`.
pub fn binomial(n: u64, m: i64) -> Count {
    Count::from(binomial_big(n, m))
}

/// `C(n, twice_m / 2)`, zero whenever `twice_m` is odd (non-integral index).
pub fn binomial_half(n: u64, twice_m: i64) -> Count {
    if twice_m.rem_euclid(2) != 0 {
        return Count::zero();
    }
    binomial(n, twice_m / 2)
}

fn binomial_big(n: u64, m: i64) -> BigUint {
    if m < 0 || m as u64 > n {
        return BigUint::zero();
    }
    let m = (m as u64).min(n - m as u64);
    let mut acc = BigUint::one();
    for t in 0..m {
        acc *= n - t;
        acc /= t + 1;
    }
    acc
}

fn binomial_signed(n: u64, m: i64) -> BigInt {
    BigInt::from(binomial_big(n, m))
}

fn into_count(acc: BigInt, what: &str) -> Result<Count> {
    Count::from_signed(acc)
        .ok_or_else(|| Error::Invariant(format!("{what} summed to a negative value")))
}

/// Monotone N/E lattice path question: from the origin to `(a, b)` strictly
/// between the lines `y = x + s` and `y = x - t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrthogonalInstance {
    pub a: u64,
    pub b: u64,
    pub s: u64,
    pub t: u64,
}

impl OrthogonalInstance {
    pub fn new(a: u64, b: u64, s: u64, t: u64) -> Result<Self> {
        let oi = OrthogonalInstance { a, b, s, t };
        oi.check()?;
        Ok(oi)
    }

    fn check(&self) -> Result<()> {
        if self.s < 1 || self.t < 1 {
            return Err(Error::Domain(format!(
                "gaps must be positive, got s={} t={}",
                self.s, self.t
            )));
        }
        let diff = self.b as i64 - self.a as i64;
        if diff < -(self.t as i64) || diff > self.s as i64 {
            return Err(Error::Domain(format!(
                "endpoint ({}, {}) is beyond the bounds -{} <= b-a <= {}",
                self.a, self.b, self.t, self.s
            )));
        }
        Ok(())
    }
}

/// Bounded monotone path count by the reflection formula. Endpoints on a
/// boundary line give zero.
pub fn mohanty_count(oi: OrthogonalInstance) -> Result<Count> {
    oi.check()?;
    let n = oi.a + oi.b;
    let period = (oi.s + oi.t) as i64;
    let (a, b, t) = (oi.a as i64, oi.b as i64, oi.t as i64);
    let mut acc = BigInt::zero();
    for z in (-b - t).div_euclid(period)..=a.div_euclid(period) + 1 {
        let m = b + z * period;
        acc += binomial_signed(n, m) - binomial_signed(n, m + t);
    }
    into_count(acc, "reflection sum")
}

/// Single-endpoint corridor count via the reflection formula.
pub fn cf_count_endpoint(h: u32, i: i64, ell: i64, n: u32) -> Result<Count> {
    let corridor = Corridor::new(h);
    if !corridor.contains(i) || !corridor.contains(ell) {
        return Err(Error::Domain(format!(
            "start {i} and end {ell} must lie in [0..{h}]"
        )));
    }
    let n64 = i64::from(n);
    let twice = n64 - i + ell;
    if twice.rem_euclid(2) != 0 {
        return Ok(Count::zero());
    }
    let base = twice / 2;
    let period = i64::from(h) + 2;
    let mut acc = BigInt::zero();
    for z in (-base - i - 1).div_euclid(period)..=(n64 - base).div_euclid(period) + 1 {
        let m = base + z * period;
        acc += binomial_signed(u64::from(n), m) - binomial_signed(u64::from(n), m + i + 1);
    }
    into_count(acc, "endpoint sum")
}

/// Derived indices of the window closed form.
///
/// `q = n+k-i-j`, `r = ⌈q/2⌉`, `p = k-j+(q mod 2)`,
/// `v = -⌊(r+i+j+1)/(h+2)⌋`, `u = ⌊(n-r)/(h+2)⌋`. The outer sum runs over
/// `z ∈ [v, u]`, the inner one over the `j+1` candidate endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosedFormPlan {
    pub q: i64,
    pub r: i64,
    pub p: i64,
    pub v: i64,
    pub u: i64,
}

impl ClosedFormPlan {
    pub fn new(h: u32, i: i64, k: i64, j: i64, n: u32) -> Self {
        let n = i64::from(n);
        let period = i64::from(h) + 2;
        let q = n + k - i - j;
        let r = -((-q).div_euclid(2));
        let p = k - j + q.rem_euclid(2);
        let v = -(r + i + j + 1).div_euclid(period);
        let u = (n - r).div_euclid(period);
        ClosedFormPlan { q, r, p, v, u }
    }
}

/// Window count `F_{i→⟨k±j⟩}(n)` from the closed form with the plan's `z` range.
pub fn cf_count_window(h: u32, i: i64, k: i64, j: i64, n: u32) -> Result<Count> {
    let plan = ClosedFormPlan::new(h, i, k, j, n);
    cf_count_window_over(h, i, k, j, n, plan.v..=plan.u)
}

/// Same sum as [`cf_count_window`] over an explicit `z` range.
pub fn cf_count_window_over(
    h: u32,
    i: i64,
    k: i64,
    j: i64,
    n: u32,
    zs: std::ops::RangeInclusive<i64>,
) -> Result<Count> {
    if !Corridor::new(h).contains(i) {
        return Err(Error::Domain(format!("start {i} must lie in [0..{h}]")));
    }
    if j < -1 {
        return Err(Error::InvalidHalfWidth(j));
    }
    let plan = ClosedFormPlan::new(h, i, k, j, n);
    let period = i64::from(h) + 2;
    let top = i64::from(h);
    let n64 = u64::from(n);
    let mut acc = BigInt::zero();
    for z in zs {
        let shift = plan.r + z * period;
        for sidx in 0..=j {
            // 2·sidx + p is the candidate endpoint
            if !(0..=top).contains(&(2 * sidx + plan.p)) {
                continue;
            }
            acc += binomial_signed(n64, shift + sidx) - binomial_signed(n64, shift + i + sidx + 1);
        }
    }
    into_count(acc, "window sum")
}

/// Bounded Dyck prefixes: paths from 0 of length `n` anywhere in `[0..h]`.
pub fn dyck_prefix_count(h: u32, n: u32) -> Count {
    let half = i64::from(h / 2);
    let plan = ClosedFormPlan::new(h, 0, half, half, n);
    let period = i64::from(h) + 2;
    let n64 = u64::from(n);
    let up = i64::from(n).div_euclid(2) + i64::from(n).rem_euclid(2);
    let mut acc = BigInt::zero();
    for z in plan.v..=plan.u {
        acc += binomial_signed(n64, up + z * period)
            - binomial_signed(n64, up + half + z * period + 1);
    }
    Count::from_signed(acc).expect("prefix count is nonnegative")
}

/// Dyck paths of semilength `m` and height at most `h`.
pub fn grossman_dyck_count(h: u32, m: u32) -> Count {
    let period = i64::from(h) + 2;
    let m = i64::from(m);
    let reach = m.div_euclid(period) + 1;
    let len = 2 * m as u64;
    let mut acc = BigInt::zero();
    for z in -reach..=reach {
        acc += binomial_signed(len, m + z * period) - binomial_signed(len, m + z * period + 1);
    }
    Count::from_signed(acc).expect("Dyck count is nonnegative")
}
