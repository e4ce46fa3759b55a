//! Brute-force enumeration of permutation families and their statistic
//! distributions. Everything the series side claims is checked against
//! these counts.

pub mod verify;

use std::collections::BTreeMap;

use crate::error::{CudError, Result};
use crate::perm::{is_down_up, is_member, is_up_down, Entry, Family, Permutation};
use crate::series::{MPoly, Marker, Monomial, Rational};
use crate::stats::{stats, Stat, StatVector};

/// Largest sizes the oracle will enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Families enumerated by filtering `S_n`.
    pub general: usize,
    /// Families built directly from up-down words.
    pub word: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self { general: 9, word: 11 }
    }
}

impl Caps {
    /// Both caps set to `cap`.
    pub fn uniform(cap: usize) -> Self {
        Self { general: cap, word: cap }
    }

    pub fn for_family(&self, f: Family) -> usize {
        if uses_word_generation(f) {
            self.word
        } else {
            self.general
        }
    }

    pub fn check(&self, f: Family, n: usize) -> Result<()> {
        let cap = self.for_family(f);
        if n > cap {
            return Err(CudError::CapExceeded { what: format!("family `{f}`"), n, cap });
        }
        Ok(())
    }
}

fn uses_word_generation(f: Family) -> bool {
    matches!(f, Family::Ud | Family::DownUp | Family::UdLastGtFirst)
}

/// `S_n` in lexicographic order of one-line notation.
pub struct LexPermutations {
    next: Option<Vec<Entry>>,
}

impl LexPermutations {
    pub fn new(n: usize) -> Self {
        Self { next: Some((1..=n as Entry).collect()) }
    }
}

impl Iterator for LexPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut w = current.clone();
        // standard next-permutation step
        if let Some(i) = (1..w.len()).rev().find(|&i| w[i - 1] < w[i]) {
            let j = (i..w.len()).rev().find(|&j| w[j] > w[i - 1]).unwrap();
            w.swap(i - 1, j);
            w[i..].reverse();
            self.next = Some(w);
        }
        Some(Permutation::from_word_unchecked(current))
    }
}

pub fn all_permutations(n: usize) -> LexPermutations {
    LexPermutations::new(n)
}

/// Members of `f` on `[n]`, lexicographic, using the default caps.
pub fn enumerate(f: Family, n: usize) -> Result<Vec<Permutation>> {
    enumerate_capped(f, n, &Caps::default())
}

pub fn enumerate_capped(f: Family, n: usize, caps: &Caps) -> Result<Vec<Permutation>> {
    caps.check(f, n)?;
    if uses_word_generation(f) {
        Ok(enumerate_direct(f, n).expect("direct generator exists"))
    } else {
        Ok(enumerate_filtered(f, n))
    }
}

/// Filters `S_n` through [`is_member`]. No cap check.
pub fn enumerate_filtered(f: Family, n: usize) -> Vec<Permutation> {
    all_permutations(n)
        .filter(|p| is_member(p, f).expect("[n] ground set"))
        .collect()
}

/// Builds the family directly, without looking at non-members: alternating
/// words by backtracking, CUD families by growing up-down cycles. `None` for
/// families without a direct generator. Output is lexicographic.
pub fn enumerate_direct(f: Family, n: usize) -> Option<Vec<Permutation>> {
    let out = match f {
        Family::Ud | Family::DownUp | Family::UdLastGtFirst => {
            let mut out = Vec::new();
            let mut word = Vec::with_capacity(n);
            let mut used = vec![false; n + 1];
            alternating_words(n, f == Family::DownUp, &mut word, &mut used, &mut out);
            if f == Family::UdLastGtFirst {
                out.retain(|w| is_member(w, f).unwrap());
            }
            out
        }
        Family::Cud
        | Family::CudEvenOnly
        | Family::CudOddOnly
        | Family::CudDerangement
        | Family::CudCyclic => {
            let mut out = Vec::new();
            let mut builder = CycleBuilder { n, family: f, used: vec![false; n + 1], cycles: Vec::new() };
            builder.extend(&mut out);
            out.sort();
            out
        }
        _ => return None,
    };
    Some(out)
}

fn alternating_words(
    n: usize,
    down_first: bool,
    word: &mut Vec<Entry>,
    used: &mut [bool],
    out: &mut Vec<Permutation>,
) {
    if word.len() == n {
        out.push(Permutation::from_word_unchecked(word.clone()));
        return;
    }
    for a in 1..=n as Entry {
        if used[a as usize] {
            continue;
        }
        if let Some(&last) = word.last() {
            let rise_expected = (word.len() % 2 == 1) != down_first;
            if (a > last) != rise_expected {
                continue;
            }
        }
        used[a as usize] = true;
        word.push(a);
        alternating_words(n, down_first, word, used, out);
        word.pop();
        used[a as usize] = false;
    }
}

struct CycleBuilder {
    n: usize,
    family: Family,
    used: Vec<bool>,
    cycles: Vec<Vec<Entry>>,
}

impl CycleBuilder {
    fn length_ok(&self, len: usize) -> bool {
        match self.family {
            Family::CudEvenOnly => len.is_multiple_of(2),
            Family::CudOddOnly => len % 2 == 1,
            Family::CudDerangement => len > 1,
            _ => true,
        }
    }

    /// Opens a new cycle at the smallest unused element, or records the
    /// permutation when everything is used.
    fn extend(&mut self, out: &mut Vec<Permutation>) {
        let Some(start) = (1..=self.n as Entry).find(|&a| !self.used[a as usize]) else {
            if self.family == Family::CudCyclic && self.cycles.is_empty() {
                return;
            }
            let c = crate::perm::CycleDecomposition::from_normalized_unchecked(self.cycles.clone());
            out.push(c.to_permutation());
            return;
        };
        if self.family == Family::CudCyclic && !self.cycles.is_empty() {
            return;
        }
        self.used[start as usize] = true;
        self.cycles.push(vec![start]);
        self.grow(out);
        self.cycles.pop();
        self.used[start as usize] = false;
    }

    fn grow(&mut self, out: &mut Vec<Permutation>) {
        let cycle = self.cycles.last().unwrap();
        let len = cycle.len();
        let last = cycle[len - 1];
        if self.length_ok(len) {
            self.extend(out);
        }
        let rise = len % 2 == 1;
        for b in 1..=self.n as Entry {
            if self.used[b as usize] || (b > last) != rise {
                continue;
            }
            self.used[b as usize] = true;
            self.cycles.last_mut().unwrap().push(b);
            self.grow(out);
            self.cycles.last_mut().unwrap().pop();
            self.used[b as usize] = false;
        }
    }
}

pub fn count(f: Family, n: usize) -> Result<u64> {
    Ok(enumerate(f, n)?.len() as u64)
}

/// Joint distribution of some statistics over a family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistributionTable {
    pub family: Family,
    pub n: usize,
    pub stats: Vec<Stat>,
    pub rows: BTreeMap<Vec<u32>, u64>,
}

impl DistributionTable {
    pub fn new(family: Family, n: usize, stats: Vec<Stat>) -> Self {
        Self { family, n, stats, rows: BTreeMap::new() }
    }

    pub fn record(&mut self, v: &StatVector) {
        let key = self.stats.iter().map(|s| s.of(v)).collect();
        *self.rows.entry(key).or_insert(0) += 1;
    }

    pub fn total(&self) -> u64 {
        self.rows.values().sum()
    }

    /// Adds another table over the same family, size and statistics.
    pub fn merge(&mut self, other: &DistributionTable) -> Result<()> {
        if (self.family, self.n, &self.stats) != (other.family, other.n, &other.stats) {
            return Err(CudError::Domain("cannot merge tables of different shapes".into()));
        }
        for (k, c) in &other.rows {
            *self.rows.entry(k.clone()).or_insert(0) += c;
        }
        Ok(())
    }

    /// Distribution of one column.
    pub fn marginal(&self, stat: Stat) -> Option<BTreeMap<u32, u64>> {
        let idx = self.stats.iter().position(|&s| s == stat)?;
        let mut out = BTreeMap::new();
        for (k, c) in &self.rows {
            *out.entry(k[idx]).or_insert(0) += c;
        }
        Some(out)
    }

    /// Generating polynomial with `markers[i]` marking `stats[i]`.
    pub fn to_poly(&self, markers: &[Marker]) -> MPoly {
        assert_eq!(markers.len(), self.stats.len(), "one marker per statistic");
        let mut p = MPoly::zero();
        for (key, &c) in &self.rows {
            let mono = markers
                .iter()
                .zip(key)
                .fold(Monomial::one(), |m, (&mk, &e)| m.with(mk, e as u16));
            p.add_term(mono, Rational::from_integer(c.into()));
        }
        p
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for s in &self.stats {
            out.push_str(s.name());
            out.push(',');
        }
        out.push_str("count\n");
        for (k, c) in &self.rows {
            for v in k {
                out.push_str(&v.to_string());
                out.push(',');
            }
            out.push_str(&c.to_string());
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|(k, c)| {
                let mut row = serde_json::Map::new();
                for (s, v) in self.stats.iter().zip(k) {
                    row.insert(s.name().into(), (*v).into());
                }
                row.insert("count".into(), (*c).into());
                serde_json::Value::Object(row)
            })
            .collect();
        serde_json::json!({
            "family": self.family.name(),
            "n": self.n,
            "stats": self.stats.iter().map(|s| s.name()).collect::<Vec<_>>(),
            "rows": rows,
        })
    }
}

pub fn distribution(f: Family, n: usize, stat_list: &[Stat]) -> Result<DistributionTable> {
    distribution_capped(f, n, stat_list, &Caps::default())
}

pub fn distribution_capped(
    f: Family,
    n: usize,
    stat_list: &[Stat],
    caps: &Caps,
) -> Result<DistributionTable> {
    let mut table = DistributionTable::new(f, n, stat_list.to_vec());
    for p in enumerate_capped(f, n, caps)? {
        table.record(&stats(&p));
    }
    Ok(table)
}

/// Quick predicate used by tests: every generated word alternates.
pub fn all_alternating(ps: &[Permutation], down_first: bool) -> bool {
    ps.iter().all(|p| if down_first { is_down_up(p.word()) } else { is_up_down(p.word()) })
}
