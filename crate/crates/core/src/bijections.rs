//! Constructive bijections between up-down permutations, cycle-up-down
//! permutations and their relatives.
//!
//! * [`g_even`]: up-down words of even length to CUD permutations with only
//!   even cycles (cut at the left-to-right minima).
//! * [`f_odd`]: up-down words to CUD permutations with only odd cycles
//!   (peel off the prefix ending at the minimum, switch the rest, recurse).
//! * [`phi`]: `UD_{n+1} -> CUD_n`, gluing `g_even` and `f_odd` around the 1.
//! * [`jbij`]: a second `UD_{n+1} -> CUD_n` map that cuts at extreme
//!   elements; cycles correspond to extreme elements.
//! * [`h_map`] and [`ell_map`]: the maps on all of `S_n` that carry min-max
//!   subsequences to left-to-right minima, and LR minima to extreme elements.
//!
//! "Switching" a subword always means switching it relative to its own value
//! set, leaving the other entries in place.

use std::fmt;
use std::str::FromStr;

use crate::error::{domain, CudError, Result};
use crate::perm::{
    is_alternating, is_up_down, switch_in_place, CycleDecomposition, Entry, Permutation,
};
use crate::stats::{extreme_positions, lrm_positions, min_max_positions, Extremum, MinMaxPattern};

/// A finite 0/1 word.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BitWord(pub Vec<bool>);

impl BitWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All words of length `k`, in lexicographic order.
    pub fn all(k: usize) -> impl Iterator<Item = BitWord> {
        (0u64..1 << k).map(move |m| BitWord((0..k).rev().map(|b| m >> b & 1 == 1).collect()))
    }
}

impl fmt::Display for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BitWord {
    type Err = CudError;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(CudError::Parse(format!("bad bit `{c}`"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(BitWord)
    }
}

fn require_up_down(p: &Permutation, what: &str) -> Result<()> {
    if !p.is_up_down() {
        return domain(format!("{what}: `{p}` is not up-down"));
    }
    Ok(())
}

fn require_cud(c: &CycleDecomposition, what: &str) -> Result<()> {
    if !c.is_cud() {
        return domain(format!("{what}: {c} is not cycle-up-down"));
    }
    Ok(())
}

fn require_range(ground: &[Entry], what: &str) -> Result<()> {
    if ground.iter().enumerate().any(|(i, &a)| a as usize != i + 1) {
        return domain(format!("{what}: ground set must be [n], got {ground:?}"));
    }
    Ok(())
}

/// Concatenation of the standard-form cycles, ordered by decreasing first
/// entry when `descending`, increasing otherwise.
pub fn foata_word(c: &CycleDecomposition, descending: bool) -> Permutation {
    let word: Vec<Entry> = if descending {
        c.cycles().iter().rev().flatten().copied().collect()
    } else {
        c.cycles().iter().flatten().copied().collect()
    };
    Permutation::from_word_unchecked(word)
}

/// Inverse of the descending [`foata_word`]: cut the word before each of its
/// LR minima.
pub fn foata_cycles(p: &Permutation) -> CycleDecomposition {
    let w = p.word();
    let mut cuts = lrm_positions(w);
    cuts.push(w.len());
    let cycles = cuts.windows(2).map(|c| w[c[0]..c[1]].to_vec()).collect();
    CycleDecomposition::new(cycles).expect("a word splits into disjoint cycles")
}

pub fn g_even(p: &Permutation) -> Result<CycleDecomposition> {
    require_up_down(p, "g")?;
    if !p.len().is_multiple_of(2) {
        return domain(format!("g: `{p}` has odd length"));
    }
    Ok(foata_cycles(p))
}

pub fn g_even_inverse(c: &CycleDecomposition) -> Result<Permutation> {
    require_cud(c, "g inverse")?;
    if let Some(odd) = c.cycles().iter().find(|cy| cy.len() % 2 == 1) {
        return domain(format!("g inverse: odd cycle {odd:?}"));
    }
    Ok(foata_word(c, true))
}

pub fn f_odd(p: &Permutation) -> Result<CycleDecomposition> {
    require_up_down(p, "f")?;
    let mut rest = p.word().to_vec();
    let mut cycles = Vec::new();
    while !rest.is_empty() {
        let k = (0..rest.len()).min_by_key(|&i| rest[i]).unwrap();
        let mut cycle = rest[..=k].to_vec();
        cycle.reverse();
        cycles.push(cycle);
        rest.drain(..=k);
        switch_in_place(&mut rest);
    }
    Ok(CycleDecomposition::from_normalized_unchecked(cycles))
}

pub fn f_odd_inverse(c: &CycleDecomposition) -> Result<Permutation> {
    require_cud(c, "f inverse")?;
    if let Some(even) = c.cycles().iter().find(|cy| cy.len() % 2 == 0) {
        return domain(format!("f inverse: even cycle {even:?}"));
    }
    let mut acc: Vec<Entry> = Vec::new();
    for cycle in c.cycles().iter().rev() {
        switch_in_place(&mut acc);
        let mut next: Vec<Entry> = cycle.iter().rev().copied().collect();
        next.extend_from_slice(&acc);
        acc = next;
    }
    Ok(Permutation::from_word_unchecked(acc))
}

/// `UD_{n+1} -> CUD_n`. Even cycles come from the part before the 1 through
/// [`g_even`], odd cycles from the switched part after it through [`f_odd`].
pub fn phi(p: &Permutation) -> Result<CycleDecomposition> {
    require_up_down(p, "phi")?;
    require_range(&p.ground(), "phi")?;
    if p.is_empty() {
        return domain("phi: input must have at least one entry");
    }
    let w = p.word();
    let k = w.iter().position(|&a| a == 1).unwrap();
    let left: Vec<Entry> = w[..k].iter().map(|a| a - 1).collect();
    let mut right: Vec<Entry> = w[k + 1..].iter().map(|a| a - 1).collect();
    switch_in_place(&mut right);
    let mut cycles = g_even(&Permutation::from_word_unchecked(left))?.into_cycles();
    cycles.extend(f_odd(&Permutation::from_word_unchecked(right))?.into_cycles());
    CycleDecomposition::new(cycles)
}

pub fn phi_inverse(c: &CycleDecomposition) -> Result<Permutation> {
    require_cud(c, "phi inverse")?;
    require_range(&c.ground(), "phi inverse")?;
    let (even, odd): (Vec<_>, Vec<_>) =
        c.cycles().iter().cloned().partition(|cy| cy.len() % 2 == 0);
    let left = g_even_inverse(&CycleDecomposition::from_normalized_unchecked(even))?;
    let mut right = f_odd_inverse(&CycleDecomposition::from_normalized_unchecked(odd))?.into_word();
    switch_in_place(&mut right);
    let mut word: Vec<Entry> = left.word().iter().map(|a| a + 1).collect();
    word.push(1);
    word.extend(right.iter().map(|a| a + 1));
    Ok(Permutation::from_word_unchecked(word))
}

/// `UD_{n+1} -> CUD_n`, one cycle per extreme element.
///
/// Working word `τ`: take its rightmost extreme element; if it is an LR
/// maximum, switch all of `τ` so it becomes an LR minimum. The suffix of `τ`
/// starting there is the next cycle (already in standard form) and is
/// deleted. Stops when only `n+1` is left.
pub fn jbij(p: &Permutation) -> Result<CycleDecomposition> {
    require_up_down(p, "jbij")?;
    require_range(&p.ground(), "jbij")?;
    if p.is_empty() {
        return domain("jbij: input must have at least one entry");
    }
    let mut tau = p.word().to_vec();
    let mut cycles = Vec::new();
    while tau.len() > 1 {
        let k = *extreme_positions(&tau).last().expect("position 2 is extreme");
        if tau[k] > tau[0] {
            switch_in_place(&mut tau);
        }
        cycles.push(tau.split_off(k));
    }
    debug_assert_eq!(tau, vec![p.len() as Entry]);
    CycleDecomposition::new(cycles)
}

/// Length of the longest alternating (up-down or down-up) prefix.
fn alternating_prefix_len(w: &[Entry]) -> usize {
    (1..=w.len()).rev().find(|&k| is_alternating(&w[..k])).unwrap_or(0)
}

pub fn jbij_inverse(c: &CycleDecomposition) -> Result<Permutation> {
    require_cud(c, "jbij inverse")?;
    require_range(&c.ground(), "jbij inverse")?;
    let n = c.size() as Entry;
    let mut tau = vec![n + 1];
    tau.extend_from_slice(foata_word(c, true).word());
    loop {
        let k = alternating_prefix_len(&tau);
        if k == tau.len() {
            break;
        }
        switch_in_place(&mut tau[..k]);
    }
    if !is_up_down(&tau) {
        switch_in_place(&mut tau);
    }
    Ok(Permutation::from_word_unchecked(tau))
}

/// Cyclic rotation `σ_{2i-1} ... σ_{2k} σ_1 ... σ_{2i-2}` of an up-down word
/// of length `2k` starting with its minimum; `1 <= i <= k`.
pub fn rotate_ud(p: &Permutation, i: usize) -> Result<Permutation> {
    let w = p.word();
    if w.is_empty() || !w.len().is_multiple_of(2) || !is_up_down(w) {
        return domain(format!("rotate: `{p}` is not up-down of even length"));
    }
    if w[0] != *w.iter().min().unwrap() {
        return domain(format!("rotate: `{p}` does not start with its minimum"));
    }
    let k = w.len() / 2;
    if i == 0 || i > k {
        return domain(format!("rotate: index {i} outside 1..={k}"));
    }
    let mut out = w.to_vec();
    out.rotate_left(2 * i - 2);
    Ok(Permutation::from_word_unchecked(out))
}

/// Inverse of [`rotate_ud`]: an up-down word of even length whose last entry
/// exceeds its first, split into the rotation starting at its minimum and
/// the index `i` that recovers it.
pub fn rotate_ud_inverse(p: &Permutation) -> Result<(Permutation, usize)> {
    let w = p.word();
    if w.is_empty() || !w.len().is_multiple_of(2) || !is_up_down(w) || w[w.len() - 1] < w[0] {
        return domain(format!("rotate inverse: `{p}` is not up-down with last > first"));
    }
    let j = (0..w.len()).min_by_key(|&i| w[i]).unwrap();
    let mut sigma = w.to_vec();
    sigma.rotate_left(j);
    let head_len = (w.len() - j) % w.len();
    Ok((Permutation::from_word_unchecked(sigma), head_len / 2 + 1))
}

/// Carries the `m_s` subsequence of `p` to the left-to-right minima of the
/// image. With the alternating pattern this is the min-max map.
pub fn h_map(p: &Permutation, s: &MinMaxPattern) -> Permutation {
    let positions = min_max_positions(p.word(), s);
    let mut tau = p.word().to_vec();
    if s.get(0) == Extremum::Max {
        switch_in_place(&mut tau);
    }
    for (j, &i) in positions.iter().enumerate().take(positions.len().saturating_sub(1)) {
        if s.get(j) != s.get(j + 1) {
            switch_in_place(&mut tau[i + 1..]);
        }
    }
    tau.reverse();
    Permutation::from_word_unchecked(tau)
}

/// Builds `σ ∈ S_n` from `p ∈ S_{n-1}` and one bit per LR minimum of `p`:
/// bit 0 keeps the matching extreme element an LR minimum, bit 1 turns it
/// into an LR maximum.
pub fn ell_map(p: &Permutation, s: &BitWord) -> Result<Permutation> {
    require_range(&p.ground(), "ell")?;
    let minima = lrm_positions(p.word());
    if s.len() != minima.len() {
        return domain(format!(
            "ell: need {} bits (one per LR minimum), got {}",
            minima.len(),
            s.len()
        ));
    }
    // tau is 0-indexed with tau_0 = n, so LR minimum at word index q sits at q + 1
    let mut tau = vec![p.len() as Entry + 1];
    tau.extend_from_slice(p.word());
    switch_prefixes(&mut tau, &minima.iter().map(|q| q + 1).collect::<Vec<_>>(), &s.0);
    Ok(Permutation::from_word_unchecked(tau))
}

/// For `j = k, ..., 1`, switch `tau[0..=pos_j]` when `bit_j != bit_{j+1}`
/// with `bit_{k+1} = 0`.
fn switch_prefixes(tau: &mut [Entry], positions: &[usize], bits: &[bool]) {
    for j in (0..positions.len()).rev() {
        let next = bits.get(j + 1).copied().unwrap_or(false);
        if bits[j] != next {
            switch_in_place(&mut tau[..=positions[j]]);
        }
    }
}

pub fn ell_inverse(q: &Permutation) -> Result<(Permutation, BitWord)> {
    require_range(&q.ground(), "ell inverse")?;
    let positions = extreme_positions(q.word());
    if positions.is_empty() {
        return domain(format!("ell inverse: `{q}` has no extreme elements"));
    }
    let w = q.word();
    let bits: Vec<bool> = positions.iter().map(|&i| w[i] > w[0]).collect();
    let mut tau = w.to_vec();
    switch_prefixes(&mut tau, &positions, &bits);
    debug_assert_eq!(tau[0] as usize, w.len());
    Ok((Permutation::from_word_unchecked(tau[1..].to_vec()), BitWord(bits)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn compact(s: &str) -> Permutation {
        Permutation::new(s.bytes().map(|b| (b - b'0') as Entry).collect()).unwrap()
    }

    fn spaced(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn cyc(s: &str) -> CycleDecomposition {
        s.parse().unwrap()
    }

    #[test]
    fn g_examples() {
        assert_eq!(g_even(&compact("47261538")).unwrap().to_string(), "(1,5,3,8)(2,6)(4,7)");
        assert_eq!(g_even(&compact("12")).unwrap(), cyc("(1,2)"));
        assert_eq!(g_even(&spaced("5 8 2 7 4 11")).unwrap(), cyc("(5,8)(2,7,4,11)"));
        assert_eq!(g_even_inverse(&cyc("(4,7)(2,6)(1,5,3,8)")).unwrap(), compact("47261538"));
        assert_eq!(g_even_inverse(&cyc("(1,2)")).unwrap(), compact("12"));
    }

    #[test]
    fn g_rejects_bad_input() {
        assert!(g_even(&compact("132")).is_err());
        assert!(g_even(&compact("2143")).is_err());
        assert!(g_even_inverse(&cyc("(1,2)(3)")).is_err());
    }

    #[test]
    fn f_examples() {
        assert_eq!(f_odd(&compact("471938562")).unwrap(), cyc("(1,7,4)(2)(3,8,6,9,5)"));
        assert_eq!(f_odd(&compact("1")).unwrap(), cyc("(1)"));
        assert_eq!(f_odd(&spaced("3 10 1 9 6")).unwrap(), cyc("(1,10,3)(6)(9)"));
        assert_eq!(f_odd_inverse(&cyc("(1,8,5,7,2)(3,6,4)")).unwrap(), compact("27581436"));
        assert_eq!(f_odd_inverse(&cyc("(1)")).unwrap(), compact("1"));
        assert!(f_odd(&compact("21")).is_err());
        assert!(f_odd_inverse(&cyc("(1,2)")).is_err());
    }

    #[test]
    fn phi_examples() {
        let p = spaced("6 9 3 8 5 12 1 10 2 11 4 7");
        let c = cyc("(5,8)(2,7,4,11)(1,10,3)(6)(9)");
        assert_eq!(phi(&p).unwrap(), c);
        assert_eq!(phi_inverse(&c).unwrap(), p);
        assert_eq!(phi(&compact("1")).unwrap(), CycleDecomposition::default());
        assert_eq!(phi_inverse(&CycleDecomposition::default()).unwrap(), compact("1"));
        assert_eq!(phi(&compact("12")).unwrap(), cyc("(1)"));
    }

    #[test]
    fn jbij_examples() {
        let p = compact("351827496");
        let c = cyc("(1,4)(2,8,3,6)(5)(7)");
        assert_eq!(jbij(&p).unwrap(), c);
        assert_eq!(jbij_inverse(&c).unwrap(), p);
        assert_eq!(jbij(&compact("12")).unwrap(), cyc("(1)"));
        assert_eq!(jbij_inverse(&cyc("(1)")).unwrap(), compact("12"));
        assert!(jbij(&compact("321")).is_err());
        assert!(jbij_inverse(&cyc("(1,2,3)")).is_err());
    }

    #[test]
    fn foata_examples() {
        let c = cyc("(1,4)(2,8,3,6)(5)(7)");
        assert_eq!(foata_word(&c, true), compact("75283614"));
        assert_eq!(foata_word(&cyc("(1)"), true), compact("1"));
        assert_eq!(foata_word(&cyc("(1)"), false), compact("1"));
        assert_eq!(foata_word(&cyc("(4,7)(2,6)(1,5,3,8)"), true), compact("47261538"));
        let mut tau = vec![9];
        tau.extend_from_slice(foata_word(&c, true).word());
        assert_eq!(tau, compact("975283614").into_word());
        let p = compact("75283614");
        assert_eq!(foata_cycles(&p), c);
        assert_eq!(foata_word(&foata_cycles(&p), true), p);
    }

    #[test]
    fn rotation_examples() {
        let p = compact("1324");
        assert_eq!(rotate_ud(&p, 1).unwrap(), p);
        assert_eq!(rotate_ud(&p, 2).unwrap(), compact("2413"));
        assert_eq!(rotate_ud_inverse(&compact("2413")).unwrap(), (p.clone(), 2));
        assert_eq!(rotate_ud_inverse(&p).unwrap(), (p.clone(), 1));
        assert!(rotate_ud(&p, 3).is_err());
        assert!(rotate_ud(&compact("2314"), 1).is_err());
    }

    #[test]
    fn h_example() {
        let p = compact("48127635");
        assert_eq!(h_map(&p, &MinMaxPattern::alternating()), compact("53627184"));
    }

    #[test]
    fn ell_examples() {
        let p = compact("86742513");
        let s: BitWord = "10011".parse().unwrap();
        let q = ell_map(&p, &s).unwrap();
        assert_eq!(q, compact("572418693"));
        assert_eq!(ell_inverse(&q).unwrap(), (p, s));
        let one = compact("1");
        let zero: BitWord = "0".parse().unwrap();
        assert_eq!(ell_map(&one, &zero).unwrap(), compact("21"));
        assert_eq!(ell_inverse(&compact("21")).unwrap(), (one.clone(), zero));
        assert!(ell_map(&one, &"01".parse().unwrap()).is_err());
        assert!(ell_inverse(&one).is_err());
    }

    #[test]
    fn bitword_enumeration() {
        let words: Vec<String> = BitWord::all(2).map(|b| b.to_string()).collect();
        assert_eq!(words, ["00", "01", "10", "11"]);
        assert!("012".parse::<BitWord>().is_err());
    }
}
