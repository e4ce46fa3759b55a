//! CUD permutations with only even cycles as pairs of perfect matchings on
//! a line: red arcs above join `i` to `π(i)` when `π(i) > i`, blue arcs
//! below when `π(i) < i`.

use std::fmt;
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{domain, CudError, Result};
use crate::perm::{is_member, Entry, Family, Permutation};

/// Red (above) and blue (below) perfect matchings of `[n]` with the same set
/// of opening vertices. Pairs are stored as `(smaller, larger)`, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatchingPair {
    n: usize,
    red: Vec<(Entry, Entry)>,
    blue: Vec<(Entry, Entry)>,
}

fn normalize(arcs: &[(Entry, Entry)]) -> Vec<(Entry, Entry)> {
    let mut out: Vec<_> = arcs.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    out.sort_unstable();
    out
}

fn check_perfect(n: usize, arcs: &[(Entry, Entry)], colour: &str) -> Result<()> {
    let mut seen = vec![false; n + 1];
    for &(a, b) in arcs {
        for v in [a, b] {
            if v == 0 || v as usize > n || std::mem::replace(&mut seen[v as usize], true) {
                return domain(format!("{colour} arcs are not a perfect matching of [{n}]"));
            }
        }
        if a == b {
            return domain(format!("{colour} arc {a}-{b} is a loop"));
        }
    }
    if seen[1..].iter().any(|s| !s) {
        return domain(format!("{colour} arcs miss a vertex of [{n}]"));
    }
    Ok(())
}

fn openers(arcs: &[(Entry, Entry)]) -> Vec<Entry> {
    let mut out: Vec<Entry> = arcs.iter().map(|a| a.0).collect();
    out.sort_unstable();
    out
}

impl MatchingPair {
    pub fn new(n: usize, red: &[(Entry, Entry)], blue: &[(Entry, Entry)]) -> Result<Self> {
        if !n.is_multiple_of(2) {
            return domain(format!("matchings need an even number of vertices, got {n}"));
        }
        let red = normalize(red);
        let blue = normalize(blue);
        check_perfect(n, &red, "red")?;
        check_perfect(n, &blue, "blue")?;
        if openers(&red) != openers(&blue) {
            return domain("red and blue matchings disagree on the opening vertices");
        }
        Ok(Self { n, red, blue })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn red(&self) -> &[(Entry, Entry)] {
        &self.red
    }

    pub fn blue(&self) -> &[(Entry, Entry)] {
        &self.blue
    }
}

impl fmt::Display for MatchingPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |arcs: &[(Entry, Entry)]| {
            arcs.iter().map(|(a, b)| format!("{a}-{b}")).collect::<Vec<_>>().join(" ")
        };
        write!(f, "red: {} / blue: {}", side(&self.red), side(&self.blue))
    }
}

fn require_even_cud(p: &Permutation) -> Result<()> {
    if !p.is_on_range() {
        return domain(format!("`{p}` is not a permutation of [n]"));
    }
    if !is_member(p, Family::CudEvenOnly)? {
        return domain(format!(
            "{} is not a CUD permutation with only even cycles",
            p.to_cycles()
        ));
    }
    Ok(())
}

pub fn to_matching_pair(p: &Permutation) -> Result<MatchingPair> {
    require_even_cud(p)?;
    let (mut red, mut blue) = (Vec::new(), Vec::new());
    for (i, &v) in p.word().iter().enumerate() {
        let i = i as Entry + 1;
        if v > i {
            red.push((i, v));
        } else {
            blue.push((v, i));
        }
    }
    MatchingPair::new(p.len(), &red, &blue)
}

/// Openers follow their red arc, closers their blue arc.
pub fn from_matching_pair(mp: &MatchingPair) -> Result<Permutation> {
    let n = mp.n;
    let mut word = vec![0; n];
    for &(a, b) in &mp.red {
        word[a as usize - 1] = b;
    }
    for &(a, b) in &mp.blue {
        word[b as usize - 1] = a;
    }
    let p = Permutation::new(word).map_err(|_| {
        CudError::Domain("red and blue arcs do not define a permutation".into())
    })?;
    require_even_cud(&p)?;
    Ok(p)
}

/// Every perfect matching of `[n]`, each as sorted `(smaller, larger)` pairs.
pub fn perfect_matchings(n: usize) -> Vec<Vec<(Entry, Entry)>> {
    fn rec(free: &mut Vec<Entry>, cur: &mut Vec<(Entry, Entry)>, out: &mut Vec<Vec<(Entry, Entry)>>) {
        if free.is_empty() {
            out.push(cur.clone());
            return;
        }
        let a = free.remove(0);
        for idx in 0..free.len() {
            let b = free.remove(idx);
            cur.push((a, b));
            rec(free, cur, out);
            cur.pop();
            free.insert(idx, b);
        }
        free.insert(0, a);
    }
    let mut out = Vec::new();
    if n.is_multiple_of(2) {
        rec(&mut (1..=n as Entry).collect(), &mut Vec::new(), &mut out);
    }
    out
}

/// Every valid pair on `[n]`, found by pairing matchings directly.
pub fn all_matching_pairs(n: usize) -> Vec<MatchingPair> {
    let all = perfect_matchings(n);
    let mut out = Vec::new();
    for red in &all {
        for blue in &all {
            if openers(red) == openers(blue) {
                out.push(MatchingPair { n, red: red.clone(), blue: blue.clone() });
            }
        }
    }
    out
}

const SPACING: i64 = 40;
const RED: &str = "#cc0000";
const BLUE: &str = "#0044cc";

/// Arc diagram as an SVG document.
pub fn render_arc_diagram(p: &Permutation) -> Result<String> {
    let mp = to_matching_pair(p)?;
    let n = mp.n as i64;
    let max_r = (n - 1).max(1) * SPACING / 2;
    let width = (n + 1) * SPACING;
    let height = 2 * max_r + 2 * SPACING;
    let y = max_r + SPACING;
    let x = |v: Entry| v as i64 * SPACING;

    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    )
    .unwrap();
    writeln!(s, "  <line x1=\"{}\" y1=\"{y}\" x2=\"{}\" y2=\"{y}\" stroke=\"#000000\" stroke-width=\"1\"/>", SPACING / 2, width - SPACING / 2).unwrap();
    for (arcs, colour, sweep) in [(&mp.red, RED, 1), (&mp.blue, BLUE, 0)] {
        for &(a, b) in arcs.iter() {
            let r = (x(b) - x(a)) / 2;
            writeln!(
                s,
                "  <path d=\"M {} {y} A {r} {r} 0 0 {sweep} {} {y}\" fill=\"none\" stroke=\"{colour}\" stroke-width=\"2\"/>",
                x(a),
                x(b)
            )
            .unwrap();
        }
    }
    for v in 1..=n as Entry {
        writeln!(s, "  <circle cx=\"{}\" cy=\"{y}\" r=\"4\" fill=\"#000000\"/>", x(v)).unwrap();
        writeln!(
            s,
            "  <text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">{v}</text>",
            x(v) + 8,
            y + 16
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    Ok(s)
}

pub fn write_arc_diagram(p: &Permutation, path: impl AsRef<Path>) -> Result<()> {
    let svg = render_arc_diagram(p)?;
    std::fs::write(path.as_ref(), svg)
        .map_err(|e| CudError::Io(format!("{}: {e}", path.as_ref().display())))
}
