//! Exhaustive path enumeration, used as the brute-force oracle.

use crate::corridor::{dp_count_vector, Corridor};
use crate::count::Count;
use crate::error::{Error, Result};
use crate::path::{Path, Step};

pub const DEFAULT_ENUM_CAP: u64 = 10_000_000;

/// Every path of `n` steps from `i` (ending in `filter`, if given), in
/// lexicographic order with `D < U`. Refuses above [`DEFAULT_ENUM_CAP`].
pub fn enumerate_paths(h: u32, i: i64, n: u32, filter: Option<&[i64]>) -> Result<PathIter> {
    enumerate_paths_capped(h, i, n, filter, DEFAULT_ENUM_CAP)
}

pub fn enumerate_paths_capped(
    h: u32,
    i: i64,
    n: u32,
    filter: Option<&[i64]>,
    cap: u64,
) -> Result<PathIter> {
    let corridor = Corridor::new(h);
    if !corridor.contains(i) {
        return Err(Error::StartOutsideCorridor { start: i, h });
    }
    let predicted = predicted_count(h, i, n, filter);
    if predicted > cap {
        return Err(Error::EnumerationTooLarge { predicted, cap });
    }
    Ok(PathIter::new(corridor, i, n as usize, filter))
}

/// Number of paths [`enumerate_paths`] would yield.
pub fn predicted_count(h: u32, i: i64, n: u32, filter: Option<&[i64]>) -> Count {
    let corridor = Corridor::new(h);
    let vector = dp_count_vector(h, i, n);
    match filter {
        None => vector.iter().sum(),
        Some(ends) => {
            let mut ends: Vec<i64> = ends
                .iter()
                .copied()
                .filter(|&l| corridor.contains(l))
                .collect();
            ends.sort_unstable();
            ends.dedup();
            ends.iter().map(|&l| &vector[l as usize]).sum()
        }
    }
}

pub struct PathIter {
    corridor: Corridor,
    base: i64,
    n: usize,
    // reach[r][y]: some admissible completion of r steps exists from y
    reach: Vec<Vec<bool>>,
    steps: Vec<Step>,
    ordinates: Vec<i64>,
    pending: bool,
}

impl PathIter {
    fn new(corridor: Corridor, base: i64, n: usize, filter: Option<&[i64]>) -> Self {
        let width = corridor.h as usize + 1;
        let mut reach = Vec::with_capacity(n + 1);
        reach.push(
            (0..width as i64)
                .map(|y| filter.is_none_or(|f| f.contains(&y)))
                .collect::<Vec<_>>(),
        );
        for r in 1..=n {
            let prev = &reach[r - 1];
            let row = (0..width)
                .map(|y| (y > 0 && prev[y - 1]) || (y + 1 < width && prev[y + 1]))
                .collect();
            reach.push(row);
        }
        let mut it = PathIter {
            corridor,
            base,
            n,
            reach,
            steps: Vec::with_capacity(n),
            ordinates: vec![base],
            pending: false,
        };
        it.pending = it.reach[n][base as usize];
        if it.pending {
            it.fill();
        }
        it
    }

    fn can_take(&self, from: i64, step: Step) -> bool {
        let y = from + step.delta();
        let remaining = self.n - self.steps.len() - 1;
        self.corridor.contains(y) && self.reach[remaining][y as usize]
    }

    fn push(&mut self, step: Step) {
        let y = self.ordinates[self.ordinates.len() - 1] + step.delta();
        self.steps.push(step);
        self.ordinates.push(y);
    }

    // Extends the current prefix with its smallest admissible completion.
    fn fill(&mut self) {
        while self.steps.len() < self.n {
            let y = self.ordinates[self.ordinates.len() - 1];
            let step = if self.can_take(y, Step::Down) {
                Step::Down
            } else {
                Step::Up
            };
            debug_assert!(self.can_take(y, step));
            self.push(step);
        }
    }

    fn advance(&mut self) -> bool {
        while let Some(step) = self.steps.pop() {
            self.ordinates.pop();
            let y = self.ordinates[self.ordinates.len() - 1];
            if step == Step::Down && self.can_take(y, Step::Up) {
                self.push(Step::Up);
                self.fill();
                return true;
            }
        }
        false
    }
}

impl Iterator for PathIter {
    type Item = Path;

    fn next(&mut self) -> Option<Path> {
        if !self.pending {
            return None;
        }
        let out = Path::new(self.base, self.steps.clone());
        self.pending = self.advance();
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corridor::dp_count_endpoint;

    #[test]
    fn two_step_returns() {
        let paths: Vec<String> = enumerate_paths(4, 1, 2, Some(&[1]))
            .unwrap()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(paths, vec!["1:DU", "1:UD"]);
    }

    #[test]
    fn table_cell_by_enumeration() {
        assert_eq!(enumerate_paths(4, 1, 12, Some(&[3])).unwrap().count(), 364);
    }

    #[test]
    fn height_one_forces_zigzag() {
        let paths: Vec<Path> = enumerate_paths(1, 0, 5, None).unwrap().collect();
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].to_string(), "0:UDUDU");
    }

    #[test]
    fn empty_and_flat_cases() {
        assert_eq!(enumerate_paths(0, 0, 0, None).unwrap().count(), 1);
        assert_eq!(enumerate_paths(0, 0, 3, None).unwrap().count(), 0);
        assert_eq!(enumerate_paths(3, 0, 4, Some(&[1])).unwrap().count(), 0);
        assert!(matches!(
            enumerate_paths(3, 4, 4, None),
            Err(Error::StartOutsideCorridor { .. })
        ));
    }

    #[test]
    fn lexicographic_and_valid() {
        let all: Vec<Path> = enumerate_paths(3, 1, 9, None).unwrap().collect();
        assert!(all.windows(2).all(|w| w[0].steps < w[1].steps));
        assert!(all.iter().all(|p| p.fits(Corridor::new(3))));
    }

    #[test]
    fn cap_guard() {
        let err = enumerate_paths_capped(4, 1, 12, Some(&[3]), 363)
            .err()
            .unwrap();
        assert_eq!(
            err,
            Error::EnumerationTooLarge {
                predicted: Count::from(364u64),
                cap: 363
            }
        );
        assert!(enumerate_paths(10, 0, 40, None).is_err());
    }

    #[test]
    fn matches_dp_exhaustively() {
        for h in 0..=5u32 {
            for i in 0..=i64::from(h) {
                for n in 0..=12u32 {
                    for l in 0..=i64::from(h) {
                        let got = enumerate_paths(h, i, n, Some(&[l])).unwrap().count() as u64;
                        assert_eq!(
                            dp_count_endpoint(h, i, l, n),
                            got,
                            "h={h} i={i} l={l} n={n}"
                        );
                    }
                }
            }
        }
    }
}
