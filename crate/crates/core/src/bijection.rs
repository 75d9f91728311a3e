//! Correspondence between paths from `i` ending in `⟨k±j⟩` and paths from
//! `j` ending in `⟨k±i⟩`, built by splicing TA label sequences.

use std::fmt;
use std::str::FromStr;

use crate::corridor::{is_theorem_valid, Corridor, Window};
use crate::error::{Error, Result};
use crate::path::Path;
use crate::ta::{backward_window_split, reverse_word, ta_decode, ta_encode, Label, Split, TaWord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BijectionCase {
    Equal,
    Less,
    Greater,
    LessNoTouch,
    GreaterNoTouch,
}

impl fmt::Display for BijectionCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BijectionCase::Equal => "equal",
            BijectionCase::Less => "less",
            BijectionCase::Greater => "greater",
            BijectionCase::LessNoTouch => "less-no-touch",
            BijectionCase::GreaterNoTouch => "greater-no-touch",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    Main,
    FullReverse,
    FlipReverse,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Main => "main",
            Variant::FullReverse => "full-reverse",
            Variant::FlipReverse => "flip-reverse",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "main" => Ok(Variant::Main),
            "reverse" | "full-reverse" => Ok(Variant::FullReverse),
            "flip-reverse" => Ok(Variant::FlipReverse),
            _ => Err(Error::Parse {
                what: "bijection variant",
                input: s.to_string(),
            }),
        }
    }
}

fn check_source(p: &Path, h: u32, k: i64, i: i64, j: i64) -> Result<()> {
    p.check_in(Corridor::new(h))?;
    if p.base != i {
        return Err(Error::Domain(format!(
            "path starts at {} instead of {i}",
            p.base
        )));
    }
    if !p.ends_in(Window::new(k, j)) {
        return Err(Error::Domain(format!(
            "path ends at {} outside ⟨{k}±{j}⟩",
            p.end()
        )));
    }
    Ok(())
}

fn decode_spliced(labels: Vec<Label>, k: i64, base: i64, h: u32) -> Result<Path> {
    ta_decode(&TaWord::new(k, base, labels), h)
        .map_err(|e| Error::Invariant(format!("spliced word failed to decode: {e}")))
}

/// Maps `p` (from `i`, ending in `⟨k±j⟩`) to its counterpart from `j`
/// ending in `⟨k±i⟩`. Requires `(h, k, i, j)` inside the symmetry bounds.
pub fn correspond(p: &Path, h: u32, k: i64, i: i64, j: i64) -> Result<(Path, BijectionCase)> {
    if !is_theorem_valid(h, k, i, j) {
        return Err(Error::Domain(format!(
            "(h={h}, k={k}, i={i}, j={j}) is outside the symmetry bounds"
        )));
    }
    check_source(p, h, k, i, j)?;
    if i == j {
        return Ok((p.clone(), BijectionCase::Equal));
    }
    let word = ta_encode(p, k);
    let labels = &word.labels;
    let (spliced, case) = if i < j {
        // first vertex at height j closes the prefix Q
        match p.ordinates().iter().position(|&y| y == j) {
            Some(cut) => {
                let mut out = labels[cut..].to_vec();
                out.extend(labels[..cut].iter().rev());
                (out, BijectionCase::Less)
            }
            None => (
                labels.iter().rev().copied().collect(),
                BijectionCase::LessNoTouch,
            ),
        }
    } else {
        match backward_window_split(&word, j, i)? {
            Split::At(cut) => {
                let mut out: Vec<Label> = labels[cut..].iter().rev().copied().collect();
                out.extend_from_slice(&labels[..cut]);
                (out, BijectionCase::Greater)
            }
            Split::Never => (
                labels.iter().rev().copied().collect(),
                BijectionCase::GreaterNoTouch,
            ),
        }
    };
    Ok((decode_spliced(spliced, k, j, h)?, case))
}

fn finish_alternate(word: TaWord, h: u32, k: i64, i: i64) -> Result<Path> {
    let out = ta_decode(&word, h).map_err(|e| Error::NotApplicable(e.to_string()))?;
    if !out.ends_in(Window::new(k, i)) {
        return Err(Error::NotApplicable(format!(
            "image {out} ends outside ⟨{k}±{i}⟩"
        )));
    }
    Ok(out)
}

/// Reverses the whole TA word and decodes it from `j`.
pub fn alt_full_reverse(p: &Path, h: u32, k: i64, i: i64, j: i64) -> Result<Path> {
    check_source(p, h, k, i, j)?;
    let word = ta_encode(p, k);
    finish_alternate(reverse_word(&word, j), h, k, i)
}

/// Mirrors `p` left to right first (its end becomes the start), then
/// proceeds as [`alt_full_reverse`].
pub fn alt_flip_reverse(p: &Path, h: u32, k: i64, i: i64, j: i64) -> Result<Path> {
    check_source(p, h, k, i, j)?;
    let word = ta_encode(&p.time_reversed(), k);
    finish_alternate(reverse_word(&word, j), h, k, i)
}

/// Parity conditions under which each alternate map is a bijection on the
/// frames it is meant for.
pub fn applicability(h: u32, n: u32, variant: Variant) -> bool {
    let odd = h % 2 == 1;
    let same_parity = odd == (n % 2 == 1);
    match variant {
        Variant::Main => true,
        Variant::FullReverse => odd || same_parity,
        Variant::FlipReverse => !odd || same_parity,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(s: &str) -> Path {
        s.parse().unwrap()
    }

    #[test]
    fn long_example_forward_and_back() {
        let blue = path("1:DUDUDUUUUUDU");
        let (purple, case) = correspond(&blue, 5, 3, 1, 2).unwrap();
        assert_eq!(case, BijectionCase::Less);
        assert_eq!(ta_encode(&purple, 3).to_string(), "3/2:TTATATTATATA");
        let (back, case) = correspond(&purple, 5, 3, 2, 1).unwrap();
        assert_eq!(case, BijectionCase::Greater);
        assert_eq!(back, blue);
    }

    #[test]
    fn equal_case_is_identity() {
        let p = path("1:UUDUUDDDDUUU");
        assert_eq!(
            correspond(&p, 4, 2, 1, 1).unwrap(),
            (p, BijectionCase::Equal)
        );
    }

    #[test]
    fn no_touch_cases() {
        // from 0, never reaching 1 in zero steps
        let p = path("0:");
        assert_eq!(
            correspond(&p, 3, 1, 0, 1).unwrap(),
            (path("1:"), BijectionCase::LessNoTouch)
        );
        assert_eq!(
            correspond(&path("1:"), 3, 1, 1, 0).unwrap(),
            (path("0:"), BijectionCase::GreaterNoTouch)
        );
    }

    #[test]
    fn rejects_bad_input() {
        let p = path("1:DUDUDUUUUUDU");
        assert!(matches!(correspond(&p, 5, 3, 2, 1), Err(Error::Domain(_))));
        assert!(matches!(correspond(&p, 4, 3, 1, 2), Err(Error::Domain(_))));
        assert!(matches!(
            correspond(&path("3:UD"), 5, 3, 3, 1),
            Err(Error::Domain(_))
        ));
        assert!(correspond(&p, 5, 3, 1, 3).is_err());
    }

    #[test]
    fn tat_reversal_needs_odd_height() {
        // TAT from 0 relative to k=1: a Dyck prefix of length 3
        let p = ta_decode(&"1/0:TAT".parse().unwrap(), 2).unwrap();
        assert!(matches!(
            alt_full_reverse(&p, 2, 1, 0, 1),
            Err(Error::NotApplicable(_))
        ));
        // the main map only reverses part of it
        let (q, _) = correspond(&p, 2, 1, 0, 1).unwrap();
        assert_eq!(ta_encode(&q, 1).label_string(), "ATT");
        // with odd height the plain reversal succeeds
        let p3 = ta_decode(&"1/0:TAT".parse().unwrap(), 3).unwrap();
        let q3 = alt_full_reverse(&p3, 3, 1, 0, 1).unwrap();
        assert_eq!(q3.to_string(), "1:UUD");
    }

    #[test]
    fn alternate_on_empty_path() {
        let p = path("2:");
        assert_eq!(alt_full_reverse(&p, 4, 2, 2, 2).unwrap(), p);
        assert_eq!(alt_flip_reverse(&p, 4, 2, 2, 0).unwrap(), path("0:"));
    }

    #[test]
    fn applicability_table() {
        assert!(applicability(3, 8, Variant::FullReverse));
        assert!(!applicability(4, 7, Variant::FullReverse));
        assert!(applicability(4, 7, Variant::FlipReverse));
        assert!(applicability(4, 8, Variant::FlipReverse));
        assert!(applicability(4, 8, Variant::FullReverse));
        assert!(!applicability(3, 8, Variant::FlipReverse));
        assert!(applicability(3, 7, Variant::FlipReverse));
        assert!(applicability(5, 2, Variant::Main));
    }

    #[test]
    fn variant_names() {
        assert_eq!("main".parse::<Variant>().unwrap(), Variant::Main);
        assert_eq!("reverse".parse::<Variant>().unwrap(), Variant::FullReverse);
        assert_eq!(
            "flip-reverse".parse::<Variant>().unwrap(),
            Variant::FlipReverse
        );
        assert!("other".parse::<Variant>().is_err());
    }
}
