//! Corridors, endpoint windows, and the forward counting recurrence.

use crate::count::Count;

/// The strip of admissible ordinates `[0..h]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Corridor {
    pub h: u32,
}

impl Corridor {
    pub fn new(h: u32) -> Self {
        Corridor { h }
    }

    pub fn top(self) -> i64 {
        i64::from(self.h)
    }

    pub fn contains(self, y: i64) -> bool {
        (0..=self.top()).contains(&y)
    }
}

/// The endpoint range `[k-j .. k+j+1]`, written ⟨k±j⟩.
///
/// `j = -1` is the empty window. Windows may overhang the corridor; clipping
/// happens in [`feasible_endpoints`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Window {
    pub k: i64,
    pub j: i64,
}

impl Window {
    pub fn new(k: i64, j: i64) -> Self {
        Window { k, j }
    }

    pub fn low(self) -> i64 {
        self.k - self.j
    }

    pub fn high(self) -> i64 {
        self.k + self.j + 1
    }

    pub fn is_empty(self) -> bool {
        self.j < 0
    }

    pub fn contains(self, y: i64) -> bool {
        !self.is_empty() && self.low() <= y && y <= self.high()
    }

    /// A window around `k` that covers the whole corridor after clipping.
    pub fn full(corridor: Corridor) -> Self {
        let h = corridor.top();
        Window::new(h / 2, (h + 1) / 2)
    }
}

/// One counting question: paths of `n` steps from `i` ending in `window`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Instance {
    pub corridor: Corridor,
    pub n: u32,
    pub i: i64,
    pub window: Window,
}

impl Instance {
    pub fn new(h: u32, n: u32, i: i64, k: i64, j: i64) -> Self {
        Instance {
            corridor: Corridor::new(h),
            n,
            i,
            window: Window::new(k, j),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Validity {
    pub counting_valid: bool,
    pub theorem_valid: bool,
}

/// Largest `i`/`j` for which the symmetry `F(i→⟨k±j⟩) = F(j→⟨k±i⟩)` is claimed.
pub fn symmetry_bound(h: u32, k: i64) -> i64 {
    (k + 1).min(i64::from(h) - k)
}

pub fn is_theorem_valid(h: u32, k: i64, i: i64, j: i64) -> bool {
    if k == -1 {
        return i == 0 && j == 0;
    }
    if !(0..=i64::from(h)).contains(&k) {
        return false;
    }
    let m = symmetry_bound(h, k);
    (0..=m).contains(&i) && (0..=m).contains(&j)
}

pub fn validate_instance(inst: &Instance) -> Validity {
    let counting_valid = inst.corridor.contains(inst.i) && inst.window.j >= -1;
    Validity {
        counting_valid,
        theorem_valid: counting_valid
            && is_theorem_valid(inst.corridor.h, inst.window.k, inst.i, inst.window.j),
    }
}

/// Endpoints inside the clipped window with the parity of `n + i`, ascending.
pub fn feasible_endpoints(inst: &Instance) -> Vec<i64> {
    if inst.window.is_empty() {
        return Vec::new();
    }
    let lo = inst.window.low().max(0);
    let hi = inst.window.high().min(inst.corridor.top());
    let parity = (i64::from(inst.n) + inst.i).rem_euclid(2);
    (lo..=hi).filter(|l| l.rem_euclid(2) == parity).collect()
}

/// Counts `A_{i→ℓ}(n)` for every `ℓ ∈ [0..h]` by the forward recurrence.
pub fn dp_count_vector(h: u32, i: i64, n: u32) -> Vec<Count> {
    let corridor = Corridor::new(h);
    let width = h as usize + 1;
    let mut cur = vec![Count::zero(); width];
    if !corridor.contains(i) {
        return cur;
    }
    cur[i as usize] = Count::one();
    for _ in 0..n {
        let mut next = vec![Count::zero(); width];
        for (y, c) in cur.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if y > 0 {
                next[y - 1] += c;
            }
            if y + 1 < width {
                next[y + 1] += c;
            }
        }
        cur = next;
    }
    cur
}

/// `A_{i→ℓ}(n)` in a corridor of height `h`; zero when `i` or `ℓ` is outside.
pub fn dp_count_endpoint(h: u32, i: i64, ell: i64, n: u32) -> Count {
    if !Corridor::new(h).contains(ell) {
        return Count::zero();
    }
    dp_count_vector(h, i, n).swap_remove(ell as usize)
}

/// `F_{i→⟨k±j⟩}(n)`: the sum of endpoint counts over the feasible window.
pub fn dp_count_window(h: u32, i: i64, k: i64, j: i64, n: u32) -> Count {
    let inst = Instance::new(h, n, i, k, j);
    let ends = feasible_endpoints(&inst);
    if ends.is_empty() || !inst.corridor.contains(i) {
        return Count::zero();
    }
    let vector = dp_count_vector(h, i, n);
    window_sum(&vector, &inst)
}

/// Sums a precomputed endpoint vector over the instance's feasible endpoints.
pub fn window_sum(vector: &[Count], inst: &Instance) -> Count {
    feasible_endpoints(inst)
        .into_iter()
        .map(|l| &vector[l as usize])
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn validity_examples() {
        let v = validate_instance(&Instance::new(4, 9, 2, 2, 1));
        assert!(v.counting_valid && v.theorem_valid);
        let v = validate_instance(&Instance::new(4, 9, 2, 3, 1));
        assert!(v.counting_valid && !v.theorem_valid);
        let v = validate_instance(&Instance::new(0, 0, 0, 0, 0));
        assert!(v.theorem_valid);
        let v = validate_instance(&Instance::new(3, 5, 0, -1, 0));
        assert!(v.theorem_valid);
        let v = validate_instance(&Instance::new(3, 5, 1, -1, 0));
        assert!(v.counting_valid && !v.theorem_valid);
        let v = validate_instance(&Instance::new(3, 5, 4, 1, 0));
        assert!(!v.counting_valid);
        let v = validate_instance(&Instance::new(3, 5, 0, 1, -2));
        assert!(!v.counting_valid);
    }

    #[test]
    fn feasible_endpoint_examples() {
        assert_eq!(
            feasible_endpoints(&Instance::new(4, 12, 1, 2, 1)),
            vec![1, 3]
        );
        assert_eq!(feasible_endpoints(&Instance::new(4, 1, 0, 0, 0)), vec![1]);
        assert_eq!(
            feasible_endpoints(&Instance::new(5, 6, 0, 2, 3)),
            vec![0, 2, 4]
        );
        assert!(feasible_endpoints(&Instance::new(5, 6, 0, 2, -1)).is_empty());
    }

    #[test]
    fn endpoint_counts_from_tables() {
        assert_eq!(dp_count_endpoint(4, 1, 3, 12), 364u64);
        assert_eq!(dp_count_endpoint(4, 2, 2, 16), 4374u64);
        assert_eq!(dp_count_endpoint(4, 0, 1, 2), 0u64);
        // brute-force enumeration gives 34
        assert_eq!(dp_count_endpoint(3, 0, 0, 10), 34u64);
        assert_eq!(dp_count_endpoint(4, 5, 3, 12), 0u64);
        assert_eq!(dp_count_endpoint(4, 1, -1, 12), 0u64);
    }

    #[test]
    fn window_counts() {
        assert_eq!(dp_count_window(4, 2, 2, 1, 9), 162u64);
        assert_eq!(dp_count_window(4, 1, 2, 2, 9), 162u64);
        assert_eq!(dp_count_window(4, 1, 3, 2, 9), 121u64);
        assert_eq!(dp_count_window(4, 2, 3, 1, 9), 81u64);
        assert_eq!(dp_count_window(4, 2, 3, -1, 9), 0u64);
    }

    #[test]
    fn zero_step_boundary_condition() {
        for h in 0..5u32 {
            for i in 0..=i64::from(h) {
                for k in -1..=i64::from(h) {
                    for j in -1..4 {
                        let expect = u64::from(j >= 0 && k - j <= i && i <= k + j + 1);
                        assert_eq!(dp_count_window(h, i, k, j, 0), expect, "{h} {i} {k} {j}");
                    }
                }
            }
        }
    }

    #[test]
    fn total_walks_nondecreasing_in_height() {
        for n in 0..14u32 {
            let mut prev = Count::zero();
            for h in 0..8u32 {
                let w = Window::full(Corridor::new(h));
                let total = dp_count_window(h, 0, w.k, w.j, n);
                let row: Count = dp_count_vector(h, 0, n).iter().sum();
                assert_eq!(total, row);
                assert!(total >= prev);
                prev = total;
            }
        }
    }

    #[test]
    fn window_recurrence_needs_bounds() {
        // h=1, n=1, i=0, ⟨0±1⟩: one path, but the recurrence would give 2
        assert_eq!(dp_count_window(1, 0, 0, 1, 1), 1u64);
        let rhs = dp_count_window(1, 0, 0, 0, 0) + dp_count_window(1, 0, 0, 2, 0);
        assert_eq!(rhs, 2u64);
    }

    proptest! {
        #[test]
        fn parity_zeroes(h in 0u32..7, n in 0u32..20, i in 0i64..7, l in 0i64..7) {
            prop_assume!(i <= i64::from(h) && l <= i64::from(h));
            if (i64::from(n) + i - l).rem_euclid(2) == 1 {
                prop_assert!(dp_count_endpoint(h, i, l, n).is_zero());
            }
        }

        #[test]
        fn window_recurrence(h in 1u32..8, n in 1u32..16, k_frac in 0.0f64..1.0, i_frac in 0.0f64..1.0, j_frac in 0.0f64..1.0) {
            // holds when both (i, j) and (i, j + 1) satisfy the symmetry bounds
            let k = ((f64::from(h) + 1.0) * k_frac) as i64;
            let bound = symmetry_bound(h, k);
            prop_assume!(bound >= 1);
            let i = ((bound as f64 + 1.0) * i_frac) as i64;
            let j = (bound as f64 * j_frac) as i64;
            prop_assert!(is_theorem_valid(h, k, i, j) && is_theorem_valid(h, k, i, j + 1));
            let lhs = dp_count_window(h, i, k, j, n);
            let rhs = dp_count_window(h, i, k, j - 1, n - 1) + dp_count_window(h, i, k, j + 1, n - 1);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn start_recurrence(h in 0u32..7, n in 1u32..16, i in 0i64..7, k in -1i64..7, j in -1i64..6) {
            prop_assume!(i <= i64::from(h) && k <= i64::from(h));
            let lhs = dp_count_window(h, i, k, j, n);
            let rhs = dp_count_window(h, i - 1, k, j, n - 1) + dp_count_window(h, i + 1, k, j, n - 1);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
