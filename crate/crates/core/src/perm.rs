//! Permutations of finite sets of positive integers, in one-line and cycle
//! notation, plus recognizers for the permutation families used throughout
//! the crate.
//!
//! A permutation of `A = {a_1 < ... < a_n}` is stored as its one-line word
//! `w`; as a function it sends `a_i` to `w_i`. Most of the time `A = [n]`,
//! but the recursive bijections work on arbitrary ground sets, so nothing
//! here assumes it.

use std::fmt;
use std::str::FromStr;

use crate::error::{CudError, Result};

pub type Entry = u32;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<Entry>,
}

impl Permutation {
    /// Builds a permutation from its one-line word. Entries must be positive
    /// and pairwise distinct; the ground set is the set of entries.
    pub fn new(word: Vec<Entry>) -> Result<Self> {
        if word.contains(&0) {
            return Err(CudError::Parse("entries must be positive".into()));
        }
        let mut sorted = word.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(CudError::Parse(format!("entry {} appears twice", w[0])));
        }
        Ok(Self { word })
    }

    pub(crate) fn from_word_unchecked(word: Vec<Entry>) -> Self {
        debug_assert!(Self::new(word.clone()).is_ok());
        Self { word }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn identity(n: usize) -> Self {
        Self { word: (1..=n as Entry).collect() }
    }

    pub fn word(&self) -> &[Entry] {
        &self.word
    }

    pub fn into_word(self) -> Vec<Entry> {
        self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// The ground set in increasing order.
    pub fn ground(&self) -> Vec<Entry> {
        let mut g = self.word.clone();
        g.sort_unstable();
        g
    }

    /// True when the ground set is `[n]`.
    pub fn is_on_range(&self) -> bool {
        // entries are distinct and positive, so max == len forces {1..n}
        self.word.iter().copied().max().unwrap_or(0) as usize == self.word.len()
    }

    /// Image of `a` under the permutation viewed as a function on its ground set.
    pub fn image(&self, a: Entry) -> Option<Entry> {
        let g = self.ground();
        g.binary_search(&a).ok().map(|i| self.word[i])
    }

    /// Lookup table `img[a] = σ(a)` indexed by value (0 where undefined).
    fn image_table(&self) -> Vec<Entry> {
        let max = self.word.iter().copied().max().unwrap_or(0) as usize;
        let mut table = vec![0; max + 1];
        if self.is_on_range() {
            for (i, &w) in self.word.iter().enumerate() {
                table[i + 1] = w;
            }
        } else {
            for (&a, &w) in self.ground().iter().zip(&self.word) {
                table[a as usize] = w;
            }
        }
        table
    }

    pub fn to_cycles(&self) -> CycleDecomposition {
        let img = self.image_table();
        let mut seen = vec![false; img.len()];
        let mut cycles = Vec::new();
        for a in self.ground() {
            if seen[a as usize] {
                continue;
            }
            let mut cycle = vec![a];
            seen[a as usize] = true;
            let mut b = img[a as usize];
            while b != a {
                seen[b as usize] = true;
                cycle.push(b);
                b = img[b as usize];
            }
            cycles.push(cycle);
        }
        // ground is visited in increasing order, so each cycle already starts
        // with its minimum and the cycles come sorted by first entry
        CycleDecomposition { cycles }
    }

    /// Replaces each entry `a_i` by `a_{n+1-i}` (relative to the ground set).
    pub fn switch(&self) -> Permutation {
        let mut word = self.word.clone();
        switch_in_place(&mut word);
        Self { word }
    }

    pub fn is_up_down(&self) -> bool {
        is_up_down(&self.word)
    }

    pub fn is_down_up(&self) -> bool {
        is_down_up(&self.word)
    }

    /// Parses either notation: cycle notation when the text starts with `(`,
    /// otherwise a space separated one-line word.
    pub fn parse_any(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.starts_with('(') {
            Ok(trimmed.parse::<CycleDecomposition>()?.to_permutation())
        } else {
            trimmed.parse()
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = CudError;

    fn from_str(s: &str) -> Result<Self> {
        let word = s
            .split_whitespace()
            .map(|tok| {
                tok.parse::<Entry>()
                    .map_err(|_| CudError::Parse(format!("bad entry `{tok}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(word)
    }
}

/// Applies the switch to a word, relative to the word's own value set.
pub fn switch_in_place(word: &mut [Entry]) {
    let mut sorted = word.to_vec();
    sorted.sort_unstable();
    let n = sorted.len();
    for x in word.iter_mut() {
        let rank = sorted.binary_search(x).expect("value present");
        *x = sorted[n - 1 - rank];
    }
}

/// `w_1 < w_2 > w_3 < ...`; words of length 0 and 1 qualify.
pub fn is_up_down(w: &[Entry]) -> bool {
    w.windows(2)
        .enumerate()
        .all(|(i, p)| if i % 2 == 0 { p[0] < p[1] } else { p[0] > p[1] })
}

/// `w_1 > w_2 < w_3 > ...`; words of length 0 and 1 qualify.
pub fn is_down_up(w: &[Entry]) -> bool {
    w.windows(2)
        .enumerate()
        .all(|(i, p)| if i % 2 == 0 { p[0] > p[1] } else { p[0] < p[1] })
}

pub fn is_alternating(w: &[Entry]) -> bool {
    is_up_down(w) || is_down_up(w)
}

/// An up-down cycle: its standard form is an up-down word.
pub fn cycle_is_up_down(cycle: &[Entry]) -> bool {
    let start = cycle
        .iter()
        .enumerate()
        .min_by_key(|(_, &a)| a)
        .map_or(0, |(i, _)| i);
    rotation_is_up_down(cycle, start)
}

/// A generalized up-down cycle: some rotation is an up-down word.
pub fn cycle_is_generalized_up_down(cycle: &[Entry]) -> bool {
    (0..cycle.len().max(1)).any(|r| rotation_is_up_down(cycle, r))
}

fn rotation_is_up_down(cycle: &[Entry], start: usize) -> bool {
    let len = cycle.len();
    (0..len.saturating_sub(1)).all(|i| {
        let a = cycle[(start + i) % len];
        let b = cycle[(start + i + 1) % len];
        if i % 2 == 0 {
            a < b
        } else {
            a > b
        }
    })
}

/// Standard-form cycles ordered by increasing first entry.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleDecomposition {
    cycles: Vec<Vec<Entry>>,
}

impl CycleDecomposition {
    /// Normalizes arbitrary cycles (any rotation, any order). The ground set
    /// is the union of the cycles.
    pub fn new(cycles: Vec<Vec<Entry>>) -> Result<Self> {
        let mut all: Vec<Entry> = cycles.iter().flatten().copied().collect();
        if cycles.iter().any(Vec::is_empty) {
            return Err(CudError::MalformedCycles("empty cycle".into()));
        }
        if all.contains(&0) {
            return Err(CudError::MalformedCycles("entries must be positive".into()));
        }
        all.sort_unstable();
        if let Some(w) = all.windows(2).find(|w| w[0] == w[1]) {
            return Err(CudError::MalformedCycles(format!("entry {} repeated", w[0])));
        }
        let mut cycles: Vec<Vec<Entry>> = cycles
            .into_iter()
            .map(|mut c| {
                let start = c.iter().enumerate().min_by_key(|(_, &a)| a).unwrap().0;
                c.rotate_left(start);
                c
            })
            .collect();
        cycles.sort_unstable_by_key(|c| c[0]);
        Ok(Self { cycles })
    }

    /// Like [`CycleDecomposition::new`], but also checks that the cycles
    /// cover exactly `ground`.
    pub fn with_ground(cycles: Vec<Vec<Entry>>, ground: &[Entry]) -> Result<Self> {
        let c = Self::new(cycles)?;
        let mut g = ground.to_vec();
        g.sort_unstable();
        let have = c.ground();
        if have != g {
            let missing: Vec<_> = g.iter().filter(|a| have.binary_search(a).is_err()).collect();
            let extra: Vec<_> = have.iter().filter(|a| g.binary_search(a).is_err()).collect();
            return Err(CudError::MalformedCycles(format!(
                "cycles do not cover the ground set (missing {missing:?}, outside {extra:?})"
            )));
        }
        Ok(c)
    }

    pub(crate) fn from_normalized_unchecked(cycles: Vec<Vec<Entry>>) -> Self {
        let c = Self { cycles };
        debug_assert_eq!(Self::new(c.cycles.clone()).as_ref(), Ok(&c));
        c
    }

    pub fn cycles(&self) -> &[Vec<Entry>] {
        &self.cycles
    }

    pub fn into_cycles(self) -> Vec<Vec<Entry>> {
        self.cycles
    }

    pub fn num_cycles(&self) -> usize {
        self.cycles.len()
    }

    /// Number of elements in the ground set.
    pub fn size(&self) -> usize {
        self.cycles.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn ground(&self) -> Vec<Entry> {
        let mut g: Vec<Entry> = self.cycles.iter().flatten().copied().collect();
        g.sort_unstable();
        g
    }

    pub fn to_permutation(&self) -> Permutation {
        let ground = self.ground();
        let mut word = vec![0; ground.len()];
        for c in &self.cycles {
            for (i, &a) in c.iter().enumerate() {
                let pos = ground.binary_search(&a).expect("in ground");
                word[pos] = c[(i + 1) % c.len()];
            }
        }
        Permutation::from_word_unchecked(word)
    }

    pub fn is_cud(&self) -> bool {
        self.cycles.iter().all(|c| is_up_down(c))
    }
}

/// Inverse of [`Permutation::to_cycles`].
pub fn from_cycles(c: &CycleDecomposition) -> Permutation {
    c.to_permutation()
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cycles.is_empty() {
            return f.write_str("()");
        }
        for c in &self.cycles {
            f.write_str("(")?;
            for (i, a) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{a}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl FromStr for CycleDecomposition {
    type Err = CudError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "()" {
            return Ok(Self::default());
        }
        let mut cycles = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| CudError::Parse(format!("expected `(` at `{rest}`")))?;
            let close = body
                .find(')')
                .ok_or_else(|| CudError::Parse("unclosed cycle".into()))?;
            let cycle = body[..close]
                .split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<Entry>()
                        .map_err(|_| CudError::Parse(format!("bad entry `{}`", tok.trim())))
                })
                .collect::<Result<Vec<_>>>()?;
            cycles.push(cycle);
            rest = body[close + 1..].trim_start();
        }
        Self::new(cycles)
    }
}

/// Named permutation classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    All,
    Ud,
    DownUp,
    Cud,
    CudEvenOnly,
    CudOddOnly,
    CudDerangement,
    Gcud,
    GcudOddOnly,
    GcudEvenOnly,
    CudCyclic,
    GcudCyclic,
    UdLastGtFirst,
    /// Excedances map to deficiencies and deficiencies to excedances; fixed
    /// points allowed.
    ExcDefSwap,
}

impl Family {
    pub const ALL: [Family; 14] = [
        Family::All,
        Family::Ud,
        Family::DownUp,
        Family::Cud,
        Family::CudEvenOnly,
        Family::CudOddOnly,
        Family::CudDerangement,
        Family::Gcud,
        Family::GcudOddOnly,
        Family::GcudEvenOnly,
        Family::CudCyclic,
        Family::GcudCyclic,
        Family::UdLastGtFirst,
        Family::ExcDefSwap,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::All => "all",
            Family::Ud => "ud",
            Family::DownUp => "down-up",
            Family::Cud => "cud",
            Family::CudEvenOnly => "cud-even-only",
            Family::CudOddOnly => "cud-odd-only",
            Family::CudDerangement => "cud-derangement",
            Family::Gcud => "gcud",
            Family::GcudOddOnly => "gcud-odd-only",
            Family::GcudEvenOnly => "gcud-even-only",
            Family::CudCyclic => "cud-cyclic",
            Family::GcudCyclic => "gcud-cyclic",
            Family::UdLastGtFirst => "ud-last-gt-first",
            Family::ExcDefSwap => "exc-def-swap",
        }
    }

    /// Families defined through the one-line word (any ground set allowed).
    pub fn is_word_family(self) -> bool {
        matches!(self, Family::All | Family::Ud | Family::DownUp | Family::UdLastGtFirst)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = CudError;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == norm)
            .ok_or_else(|| CudError::UnknownName(s.to_string()))
    }
}

pub fn is_member(p: &Permutation, family: Family) -> Result<bool> {
    if !family.is_word_family() && !p.is_on_range() {
        return Err(CudError::Domain(format!(
            "family {family} is defined on [n]; got ground set {:?}",
            p.ground()
        )));
    }
    let w = p.word();
    let in_family = match family {
        Family::All => true,
        Family::Ud => is_up_down(w),
        Family::DownUp => is_down_up(w),
        Family::UdLastGtFirst => {
            !w.is_empty() && w.len().is_multiple_of(2) && is_up_down(w) && w[w.len() - 1] > w[0]
        }
        Family::ExcDefSwap => excedances_alternate(p),
        _ => {
            let cycles = p.to_cycles();
            let cs = cycles.cycles();
            let generalized = matches!(
                family,
                Family::Gcud | Family::GcudOddOnly | Family::GcudEvenOnly | Family::GcudCyclic
            );
            let shape_ok = |c: &Vec<Entry>| match family {
                Family::CudEvenOnly | Family::GcudEvenOnly => c.len().is_multiple_of(2),
                Family::CudOddOnly | Family::GcudOddOnly => c.len() % 2 == 1,
                Family::CudDerangement => c.len() > 1,
                _ => true,
            };
            let cyclic_ok = match family {
                Family::CudCyclic | Family::GcudCyclic => cs.len() == 1,
                _ => true,
            };
            cyclic_ok
                && cs.iter().all(|c| {
                    shape_ok(c)
                        && if generalized {
                            cycle_is_generalized_up_down(c)
                        } else {
                            is_up_down(c)
                        }
                })
        }
    };
    Ok(in_family)
}

/// Pointwise test: the image of every excedance is a deficiency and the
/// image of every deficiency is an excedance.
pub fn excedances_alternate(p: &Permutation) -> bool {
    let img = p.image_table();
    p.ground().into_iter().all(|a| {
        let b = img[a as usize];
        let c = img[b as usize];
        match b.cmp(&a) {
            std::cmp::Ordering::Greater => c < b,
            std::cmp::Ordering::Less => c > b,
            std::cmp::Ordering::Equal => true,
        }
    })
}
