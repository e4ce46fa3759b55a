//! Permutation statistics.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{CudError, Result};
use crate::perm::{is_up_down, Entry, Permutation};

/// Every statistic the crate tracks, evaluated on one permutation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StatVector {
    /// cycles
    pub c: u32,
    /// odd cycles
    pub c_o: u32,
    /// even cycles
    pub c_e: u32,
    /// fixed points
    pub fp: u32,
    /// left-to-right minima (position 1 included)
    pub lrm: u32,
    /// length of the min-max subsequence
    pub st: u32,
    /// extreme elements (LR minima or maxima at positions >= 2)
    pub extr: u32,
    /// excedances
    pub exc: u32,
    /// up-down cycles
    pub ud: u32,
    /// cycles that are not up-down
    pub nud: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Stat {
    C,
    Co,
    Ce,
    Fp,
    Lrm,
    St,
    Extr,
    Exc,
    Ud,
    Nud,
}

impl Stat {
    pub const ALL: [Stat; 10] = [
        Stat::C,
        Stat::Co,
        Stat::Ce,
        Stat::Fp,
        Stat::Lrm,
        Stat::St,
        Stat::Extr,
        Stat::Exc,
        Stat::Ud,
        Stat::Nud,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Stat::C => "c",
            Stat::Co => "c_o",
            Stat::Ce => "c_e",
            Stat::Fp => "fp",
            Stat::Lrm => "lrm",
            Stat::St => "st",
            Stat::Extr => "extr",
            Stat::Exc => "exc",
            Stat::Ud => "ud",
            Stat::Nud => "nud",
        }
    }

    pub fn of(self, v: &StatVector) -> u32 {
        match self {
            Stat::C => v.c,
            Stat::Co => v.c_o,
            Stat::Ce => v.c_e,
            Stat::Fp => v.fp,
            Stat::Lrm => v.lrm,
            Stat::St => v.st,
            Stat::Extr => v.extr,
            Stat::Exc => v.exc,
            Stat::Ud => v.ud,
            Stat::Nud => v.nud,
        }
    }

    /// Parses a comma separated list such as `lrm,st`.
    pub fn parse_list(s: &str) -> Result<Vec<Stat>> {
        s.split(',').map(str::parse).collect()
    }
}

impl fmt::Display for Stat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Stat {
    type Err = CudError;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('-', "_");
        let norm = match norm.as_str() {
            "co" => "c_o".to_string(),
            "ce" => "c_e".to_string(),
            _ => norm,
        };
        Stat::ALL
            .into_iter()
            .find(|st| st.name() == norm)
            .ok_or_else(|| CudError::UnknownName(s.to_string()))
    }
}

pub fn stats(p: &Permutation) -> StatVector {
    let mut v = StatVector::default();
    let ground = p.ground();
    for cycle in p.to_cycles().cycles() {
        v.c += 1;
        if cycle.len() % 2 == 1 {
            v.c_o += 1;
        } else {
            v.c_e += 1;
        }
        if cycle.len() == 1 {
            v.fp += 1;
        }
        if is_up_down(cycle) {
            v.ud += 1;
        }
    }
    v.nud = v.c - v.ud;
    v.exc = p
        .word()
        .iter()
        .zip(&ground)
        .filter(|(&image, &a)| image > a)
        .count() as u32;
    v.lrm = lrm(p.word());
    v.extr = extr(p.word());
    v.st = st(p.word());
    v
}

pub fn lrm(w: &[Entry]) -> u32 {
    let mut min = Entry::MAX;
    let mut count = 0;
    for &a in w {
        if a < min {
            min = a;
            count += 1;
        }
    }
    count
}

pub fn extr(w: &[Entry]) -> u32 {
    let Some(&first) = w.first() else { return 0 };
    let (mut min, mut max) = (first, first);
    let mut count = 0;
    for &a in &w[1..] {
        if a < min {
            min = a;
            count += 1;
        } else if a > max {
            max = a;
            count += 1;
        }
    }
    count
}

/// Positions (0-based) of the extreme elements.
pub fn extreme_positions(w: &[Entry]) -> Vec<usize> {
    let Some(&first) = w.first() else { return Vec::new() };
    let (mut min, mut max) = (first, first);
    let mut out = Vec::new();
    for (i, &a) in w.iter().enumerate().skip(1) {
        if a < min {
            min = a;
            out.push(i);
        } else if a > max {
            max = a;
            out.push(i);
        }
    }
    out
}

/// Positions (0-based) of the left-to-right minima.
pub fn lrm_positions(w: &[Entry]) -> Vec<usize> {
    let mut min = Entry::MAX;
    let mut out = Vec::new();
    for (i, &a) in w.iter().enumerate() {
        if a < min {
            min = a;
            out.push(i);
        }
    }
    out
}

pub fn st(w: &[Entry]) -> u32 {
    min_max_positions(w, &MinMaxPattern::alternating()).len() as u32
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Extremum {
    Min,
    Max,
}

/// An infinite min/max sequence given as a finite head followed by a tail
/// that repeats forever.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MinMaxPattern {
    head: Vec<Extremum>,
    tail: Vec<Extremum>,
}

impl MinMaxPattern {
    pub fn new(head: Vec<Extremum>, tail: Vec<Extremum>) -> Result<Self> {
        if tail.is_empty() {
            return Err(CudError::Parse("pattern tail must be nonempty".into()));
        }
        Ok(Self { head, tail })
    }

    /// min, max, min, max, ...
    pub fn alternating() -> Self {
        Self { head: Vec::new(), tail: vec![Extremum::Min, Extremum::Max] }
    }

    pub fn constant(e: Extremum) -> Self {
        Self { head: Vec::new(), tail: vec![e] }
    }

    /// The `j`-th term, 0-based.
    pub fn get(&self, j: usize) -> Extremum {
        if j < self.head.len() {
            self.head[j]
        } else {
            self.tail[(j - self.head.len()) % self.tail.len()]
        }
    }
}

impl FromStr for MinMaxPattern {
    type Err = CudError;

    /// `min,max,...` repeats the whole word; without the trailing `...` the
    /// last token repeats. `head;tail` gives an explicit non-repeating head,
    /// e.g. `max;min,max,...`.
    fn from_str(s: &str) -> Result<Self> {
        if let Some((head, tail)) = s.split_once(';') {
            let head = parse_tokens(head)?;
            let tail = parse_tokens(tail.trim().trim_end_matches("...").trim_end_matches(','))?;
            return Self::new(head, tail);
        }
        let mut tokens: Vec<&str> = s.split(',').map(str::trim).collect();
        let repeat_all = tokens.last() == Some(&"...");
        if repeat_all {
            tokens.pop();
        }
        let word = parse_tokens(&tokens.join(","))?;
        if repeat_all {
            Self::new(Vec::new(), word)
        } else {
            let (head, last) = word.split_at(word.len() - 1);
            Self::new(head.to_vec(), last.to_vec())
        }
    }
}

fn parse_tokens(s: &str) -> Result<Vec<Extremum>> {
    let word = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| match t.to_ascii_lowercase().as_str() {
            "min" => Ok(Extremum::Min),
            "max" => Ok(Extremum::Max),
            _ => Err(CudError::Parse(format!("bad pattern token `{t}`"))),
        })
        .collect::<Result<Vec<_>>>()?;
    if word.is_empty() {
        return Err(CudError::Parse("empty pattern".into()));
    }
    Ok(word)
}

impl fmt::Display for MinMaxPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |w: &[Extremum]| {
            w.iter()
                .map(|e| match e {
                    Extremum::Min => "min",
                    Extremum::Max => "max",
                })
                .collect::<Vec<_>>()
                .join(",")
        };
        match (self.head.is_empty(), self.tail.len()) {
            (true, _) => write!(f, "{},...", join(&self.tail)),
            (false, 1) => write!(f, "{},{}", join(&self.head), join(&self.tail)),
            (false, _) => write!(f, "{};{},...", join(&self.head), join(&self.tail)),
        }
    }
}

/// 0-based positions `i_1 < i_2 < ... < i_k = n-1` of the subsequence where
/// `π_{i_j}` is the `s_j`-extremum of everything after `i_{j-1}`.
pub fn min_max_positions(w: &[Entry], s: &MinMaxPattern) -> Vec<usize> {
    let mut out = Vec::new();
    let mut start = 0;
    let mut j = 0;
    while start < w.len() {
        let rest = w[start..].iter().enumerate();
        let pick = match s.get(j) {
            Extremum::Min => rest.min_by_key(|(_, &a)| a),
            Extremum::Max => rest.max_by_key(|(_, &a)| a),
        };
        let i = start + pick.expect("nonempty").0;
        out.push(i);
        start = i + 1;
        j += 1;
    }
    out
}

pub fn min_max_subsequence(p: &Permutation, s: &MinMaxPattern) -> Vec<Entry> {
    min_max_positions(p.word(), s)
        .into_iter()
        .map(|i| p.word()[i])
        .collect()
}

/// The statistic `m_s`: length of the subsequence above.
pub fn m_s(p: &Permutation, s: &MinMaxPattern) -> u32 {
    min_max_positions(p.word(), s).len() as u32
}
