//! Toward/Away encoding of paths relative to the line `y = k + 1/2`.
//!
//! From ordinate `y`, the step toward the line is labeled `T` and the other
//! one `A`. Steps that cross the line (up from `k`, down from `k + 1`) count as
//! toward. A base ordinate plus a label sequence determines the path.

use std::fmt;
use std::str::FromStr;

use crate::corridor::{Corridor, Window};
use crate::error::{Error, Result};
use crate::path::{Path, Step};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Label {
    Toward,
    Away,
}

impl Label {
    /// Label of `step` taken from ordinate `y`.
    pub fn of(y: i64, k: i64, step: Step) -> Label {
        let toward = match step {
            Step::Up => y <= k,
            Step::Down => y > k,
        };
        if toward {
            Label::Toward
        } else {
            Label::Away
        }
    }

    /// The step carrying this label from ordinate `y`.
    pub fn step_from(self, y: i64, k: i64) -> Step {
        let below = y <= k;
        match (self, below) {
            (Label::Toward, true) | (Label::Away, false) => Step::Up,
            (Label::Toward, false) | (Label::Away, true) => Step::Down,
        }
    }

    fn as_char(self) -> char {
        match self {
            Label::Toward => 'T',
            Label::Away => 'A',
        }
    }
}

/// A path in TA form: center row `k`, start ordinate and labels.
/// Text form is `<k>/<base>:<labels>`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TaWord {
    pub k: i64,
    pub base: i64,
    pub labels: Vec<Label>,
}

impl TaWord {
    pub fn new(k: i64, base: i64, labels: Vec<Label>) -> Self {
        TaWord { k, base, labels }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label_string(&self) -> String {
        self.labels.iter().map(|l| l.as_char()).collect()
    }
}

impl fmt::Display for TaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}:{}", self.k, self.base, self.label_string())
    }
}

pub fn parse_labels(s: &str) -> Result<Vec<Label>> {
    s.chars()
        .map(|c| match c {
            'T' => Ok(Label::Toward),
            'A' => Ok(Label::Away),
            _ => Err(Error::Parse {
                what: "TA labels",
                input: s.to_string(),
            }),
        })
        .collect()
}

impl FromStr for TaWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            what: "TA word",
            input: s.to_string(),
        };
        let (k, rest) = s.split_once('/').ok_or_else(bad)?;
        let (base, labels) = rest.split_once(':').ok_or_else(bad)?;
        Ok(TaWord {
            k: k.trim().parse().map_err(|_| bad())?,
            base: base.trim().parse().map_err(|_| bad())?,
            labels: parse_labels(labels.trim()).map_err(|_| bad())?,
        })
    }
}

pub fn ta_encode(path: &Path, k: i64) -> TaWord {
    let mut y = path.base;
    let labels = path
        .steps
        .iter()
        .map(|&s| {
            let l = Label::of(y, k, s);
            y += s.delta();
            l
        })
        .collect();
    TaWord::new(k, path.base, labels)
}

/// The unique path with this encoding; fails at the first label that leaves
/// the corridor.
pub fn ta_decode(word: &TaWord, h: u32) -> Result<Path> {
    let corridor = Corridor::new(h);
    if !corridor.contains(word.base) {
        return Err(Error::StartOutsideCorridor {
            start: word.base,
            h,
        });
    }
    let mut y = word.base;
    let mut steps = Vec::with_capacity(word.labels.len());
    for (pos, l) in word.labels.iter().enumerate() {
        let s = l.step_from(y, word.k);
        y += s.delta();
        if !corridor.contains(y) {
            return Err(Error::DecodeOutOfCorridor { position: pos, h });
        }
        steps.push(s);
    }
    Ok(Path::new(word.base, steps))
}

/// Labels reversed verbatim, with a new base.
pub fn reverse_word(word: &TaWord, new_base: i64) -> TaWord {
    TaWord::new(
        word.k,
        new_base,
        word.labels.iter().rev().copied().collect(),
    )
}

/// Smallest half-width `w ≥ 0` with `y ∈ ⟨k±w⟩`.
pub fn window_index(y: i64, k: i64) -> i64 {
    if y <= k {
        k - y
    } else {
        y - k - 1
    }
}

/// Half-widths along a word under the forward rule: `A` widens by one, `T`
/// narrows by one but never below zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowTrace(pub Vec<i64>);

impl WindowTrace {
    pub fn forward(start: i64, labels: &[Label]) -> Self {
        let mut w = start;
        let mut out = Vec::with_capacity(labels.len() + 1);
        out.push(w);
        for l in labels {
            w = match l {
                Label::Away => w + 1,
                Label::Toward => (w - 1).max(0),
            };
            out.push(w);
        }
        WindowTrace(out)
    }
}

/// Where the backward window scan first reaches its target.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Split {
    /// The suffix starting at this label index is the shortest one whose
    /// onset has the target size.
    At(usize),
    Never,
}

/// Scans labels right to left from window size `j_end`, `T` widening and `A`
/// narrowing by one, and returns the first index at which the size equals
/// `i_target`. Going below zero is an error.
pub fn backward_window_split(word: &TaWord, j_end: i64, i_target: i64) -> Result<Split> {
    if !(0 <= j_end && j_end < i_target) {
        return Err(Error::Domain(format!(
            "backward split needs 0 <= j_end < i_target, got {j_end} and {i_target}"
        )));
    }
    let mut w = j_end;
    for pos in (0..word.labels.len()).rev() {
        w += match word.labels[pos] {
            Label::Toward => 1,
            Label::Away => -1,
        };
        if w < 0 {
            return Err(Error::NegativeWindow { position: pos });
        }
        if w == i_target {
            return Ok(Split::At(pos));
        }
    }
    Ok(Split::Never)
}

/// `true` if `y` lies in the window `⟨k±w⟩`.
pub fn in_window(y: i64, k: i64, w: i64) -> bool {
    Window::new(k, w).contains(y)
}
