//! Diagonal paths and their `<base>:<steps>` text form.

use std::fmt;
use std::str::FromStr;

use crate::corridor::{Corridor, Window};
use crate::error::{Error, Result};

/// A single diagonal step. `Down` orders before `Up`, which fixes the
/// enumeration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Down,
    Up,
}

impl Step {
    pub fn delta(self) -> i64 {
        match self {
            Step::Down => -1,
            Step::Up => 1,
        }
    }

    pub fn flipped(self) -> Step {
        match self {
            Step::Down => Step::Up,
            Step::Up => Step::Down,
        }
    }

    fn as_char(self) -> char {
        match self {
            Step::Down => 'D',
            Step::Up => 'U',
        }
    }
}

/// A base ordinate followed by NE (`U`) and SE (`D`) steps.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    pub base: i64,
    pub steps: Vec<Step>,
}

impl Path {
    pub fn new(base: i64, steps: Vec<Step>) -> Self {
        Path { base, steps }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn end(&self) -> i64 {
        self.base + self.steps.iter().map(|s| s.delta()).sum::<i64>()
    }

    /// All `n + 1` visited ordinates, starting with the base.
    pub fn ordinates(&self) -> Vec<i64> {
        let mut ys = Vec::with_capacity(self.steps.len() + 1);
        let mut y = self.base;
        ys.push(y);
        for s in &self.steps {
            y += s.delta();
            ys.push(y);
        }
        ys
    }

    /// Fails with the first step that leaves the corridor.
    pub fn check_in(&self, corridor: Corridor) -> Result<()> {
        if !corridor.contains(self.base) {
            return Err(Error::StartOutsideCorridor {
                start: self.base,
                h: corridor.h,
            });
        }
        let mut y = self.base;
        for (pos, s) in self.steps.iter().enumerate() {
            y += s.delta();
            if !corridor.contains(y) {
                return Err(Error::PathOutsideCorridor {
                    position: pos + 1,
                    h: corridor.h,
                });
            }
        }
        Ok(())
    }

    pub fn fits(&self, corridor: Corridor) -> bool {
        self.check_in(corridor).is_ok()
    }

    pub fn ends_in(&self, window: Window) -> bool {
        window.contains(self.end())
    }

    /// Left-to-right mirror image: starts at this path's end and retraces it.
    pub fn time_reversed(&self) -> Path {
        Path {
            base: self.end(),
            steps: self.steps.iter().rev().map(|s| s.flipped()).collect(),
        }
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.base)?;
        for s in &self.steps {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for Path {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            what: "path",
            input: s.to_string(),
        };
        let (base, steps) = s.split_once(':').ok_or_else(bad)?;
        let base: i64 = base.trim().parse().map_err(|_| bad())?;
        let steps = steps
            .trim()
            .chars()
            .map(|c| match c {
                'U' => Ok(Step::Up),
                'D' => Ok(Step::Down),
                _ => Err(bad()),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Path { base, steps })
    }
}
