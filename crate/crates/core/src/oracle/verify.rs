//! The verification driver: every identity, count and bijection property
//! the crate claims, checked against brute-force enumeration.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{all_permutations, enumerate_direct};
use crate::bijections::{
    ell_inverse, ell_map, f_odd, f_odd_inverse, foata_cycles, foata_word, g_even, g_even_inverse,
    h_map, jbij, jbij_inverse, phi, phi_inverse, rotate_ud, rotate_ud_inverse, BitWord,
};
use crate::error::{domain, Result};
use crate::matchings::{all_matching_pairs, from_matching_pair, to_matching_pair, MatchingPair};
use crate::perm::{
    excedances_alternate, from_cycles, is_member, is_up_down,
    CycleDecomposition, Family, Permutation,
};
use crate::series::catalog::{catalog, SequenceId};
use crate::series::cf::secant_cf_convergent;
use crate::series::formulas::{
    exc_closed_form_terms, exc_polynomial, expected_ud_cycles, expected_ud_cycles_from_series,
    no_ud_cycles_count, no_ud_cycles_ratio, to_f64,
};
use crate::series::numbers::{euler_numbers, factorial, stirling_row};
use crate::series::{format_rational, int, rat, MPoly, Marker, Monomial, Rational, Series};
use crate::stats::{extreme_positions, lrm_positions, m_s, stats, MinMaxPattern, Stat, StatVector};

/// Largest `n_cap` accepted by [`verify_all`].
pub const MAX_N_CAP: usize = 9;

/// Order of the exact series identities.
pub const IDENTITY_ORDER: usize = 20;

/// Entries `E_0..=E_EULER_TABLE_LEN-1` the verifier needs.
pub const EULER_TABLE_LEN: usize = 21;

/// Patterns used for the `m_s` and `h_s` checks.
pub const PATTERNS: [&str; 5] = ["min,max,...", "min,...", "max,...", "max,min,...", "min,min,max,..."];

pub const EXPECTED_UD_CYCLES_QUOTED: f64 = 1.841817641;
pub const NO_UD_CYCLES_QUOTED: f64 = 0.1585290152;
pub const LIMIT_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub n: usize,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Report {
    pub results: Vec<CheckResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| !r.pass)
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.failures().next()
    }

    /// Distinct check names in the order they first ran.
    pub fn check_names(&self) -> Vec<&str> {
        let mut seen = HashSet::new();
        self.results
            .iter()
            .map(|r| r.check.as_str())
            .filter(|c| seen.insert(*c))
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("plain data")
    }

    /// One line per check name: status, how many sizes ran, first failure.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for name in self.check_names() {
            let rows: Vec<&CheckResult> = self.results.iter().filter(|r| r.check == name).collect();
            let ns: Vec<usize> = rows.iter().map(|r| r.n).collect();
            let span = format!("n={}..{}", ns.iter().min().unwrap(), ns.iter().max().unwrap());
            match rows.iter().find(|r| !r.pass) {
                None => writeln!(out, "PASS {name} ({span})").unwrap(),
                Some(r) => writeln!(
                    out,
                    "FAIL {name} (n={}): expected {}, got {}",
                    r.n, r.expected, r.actual
                )
                .unwrap(),
            }
        }
        let failed = self.results.iter().filter(|r| !r.pass).count();
        writeln!(
            out,
            "{} checks, {} results, {} failed",
            self.check_names().len(),
            self.results.len(),
            failed
        )
        .unwrap();
        out
    }

    fn push(&mut self, check: &str, n: usize, expected: String, actual: String, pass: bool) {
        self.results.push(CheckResult { check: check.to_string(), n, expected, actual, pass });
    }

    fn eq<T: PartialEq + Show>(&mut self, check: &str, n: usize, expected: T, actual: T) {
        let pass = expected == actual;
        self.push(check, n, expected.show(), actual.show(), pass);
    }

    /// Records a count of counterexamples, which must be zero.
    fn none(&mut self, check: &str, n: usize, violations: usize) {
        self.eq(check, n, 0usize, violations);
    }
}

/// Rendering of check values in the report.
trait Show {
    fn show(&self) -> String;
}

macro_rules! show_display {
    ($($t:ty),*) => {
        $(impl Show for $t {
            fn show(&self) -> String {
                self.to_string()
            }
        })*
    };
}

show_display!(u32, u64, usize, bool, BigInt, String, MPoly, Permutation, CycleDecomposition, MatchingPair);

impl Show for Rational {
    fn show(&self) -> String {
        format_rational(self)
    }
}

impl<T: Show> Show for Vec<T> {
    fn show(&self) -> String {
        format!("[{}]", self.iter().map(Show::show).collect::<Vec<_>>().join(", "))
    }
}

impl<C: crate::series::Coeff + Show> Show for Series<C> {
    fn show(&self) -> String {
        self.coeffs().to_vec().show()
    }
}

impl<K: Show, V: Show> Show for BTreeMap<K, V> {
    fn show(&self) -> String {
        let items: Vec<String> = self.iter().map(|(k, v)| format!("{}: {}", k.show(), v.show())).collect();
        format!("{{{}}}", items.join(", "))
    }
}

impl<A: Show, B: Show> Show for (A, B) {
    fn show(&self) -> String {
        format!("({}, {})", self.0.show(), self.1.show())
    }
}

struct Item {
    p: Permutation,
    s: StatVector,
}

/// Runs every check up to a size cap. The Euler table can be replaced to
/// confirm that a wrong table is caught.
pub struct Verifier {
    n_cap: usize,
    euler: Vec<BigInt>,
    sym: Vec<Vec<Item>>,
    ud: Vec<Vec<Item>>,
}

pub fn verify_all(n_cap: usize) -> Result<Report> {
    Ok(Verifier::new(n_cap)?.run())
}

impl Verifier {
    pub fn new(n_cap: usize) -> Result<Self> {
        if n_cap > MAX_N_CAP {
            return Err(crate::error::CudError::CapExceeded {
                what: "verification".into(),
                n: n_cap,
                cap: MAX_N_CAP,
            });
        }
        let sym = (0..=n_cap)
            .map(|n| all_permutations(n).map(|p| Item { s: stats(&p), p }).collect())
            .collect();
        let ud = (0..=n_cap + 1)
            .map(|n| {
                enumerate_direct(Family::Ud, n)
                    .unwrap()
                    .into_iter()
                    .map(|p| Item { s: stats(&p), p })
                    .collect()
            })
            .collect();
        Ok(Self { n_cap, euler: euler_numbers(EULER_TABLE_LEN - 1), sym, ud })
    }

    /// Replaces the Euler numbers every count is compared with.
    pub fn with_euler_table(mut self, table: Vec<BigInt>) -> Result<Self> {
        if table.len() < EULER_TABLE_LEN {
            return domain(format!("Euler table needs {EULER_TABLE_LEN} entries"));
        }
        self.euler = table;
        Ok(self)
    }

    pub fn n_cap(&self) -> usize {
        self.n_cap
    }

    pub fn run(&self) -> Report {
        let mut r = Report::default();
        self.euler_table(&mut r);
        self.counts(&mut r);
        self.generation(&mut r);
        self.perm_invariants(&mut r);
        self.statistics(&mut r);
        self.stirling(&mut r);
        self.bijections(&mut r);
        self.examples(&mut r);
        self.identities(&mut r);
        self.coherence(&mut r);
        self.distributions(&mut r);
        self.expectations(&mut r);
        self.continued_fraction(&mut r);
        self.matchings(&mut r);
        r
    }

    fn e(&self, k: usize) -> BigInt {
        self.euler[k].clone()
    }

    fn members(&self, f: Family, n: usize) -> impl Iterator<Item = &Item> {
        self.sym[n].iter().filter(move |it| is_member(&it.p, f).unwrap())
    }

    fn count(&self, f: Family, n: usize) -> BigInt {
        BigInt::from(self.members(f, n).count())
    }

    fn catalog_terms(&self, id: SequenceId, n_max: usize) -> Vec<BigInt> {
        catalog(id, n_max).unwrap().integer_terms().expect("integer EGF terms")
    }

    fn euler_table(&self, r: &mut Report) {
        let n = EULER_TABLE_LEN - 1;
        let series = self.catalog_terms(SequenceId::Euler, n);
        r.eq("euler-boustrophedon-vs-series", n, series, self.euler[..=n].to_vec());
    }

    fn counts(&self, r: &mut Report) {
        let cap = self.n_cap;
        let terms = |id| self.catalog_terms(id, cap);
        let (gcud, gcud_odd, gcud_even) =
            (terms(SequenceId::Gcud), terms(SequenceId::GcudOddOnly), terms(SequenceId::GcudEvenOnly));
        let (gcud_cyc, derange, swap) = (
            terms(SequenceId::GcudEvenCyclic),
            terms(SequenceId::CudDerangements),
            terms(SequenceId::ExcDefSwap),
        );
        for n in 0..=cap {
            r.eq("count-cud", n, self.e(n + 1), self.count(Family::Cud, n));
            r.eq("count-cud-odd-only", n, self.e(n), self.count(Family::CudOddOnly, n));
            let even = if n % 2 == 0 { self.e(n) } else { BigInt::zero() };
            r.eq("count-cud-even-only", n, even, self.count(Family::CudEvenOnly, n));
            if n >= 1 {
                r.eq("count-cud-cyclic", n, self.e(n - 1), self.count(Family::CudCyclic, n));
            }
            r.eq("count-cud-derangements", n, derange[n].clone(), self.count(Family::CudDerangement, n));
            r.eq("count-gcud", n, gcud[n].clone(), self.count(Family::Gcud, n));
            r.eq("count-gcud-odd-only", n, gcud_odd[n].clone(), self.count(Family::GcudOddOnly, n));
            r.eq("count-gcud-even-only", n, gcud_even[n].clone(), self.count(Family::GcudEvenOnly, n));
            r.eq("count-exc-def-swap", n, swap[n].clone(), self.count(Family::ExcDefSwap, n));
            if n >= 2 && n % 2 == 0 {
                let cyclic = self.count(Family::GcudCyclic, n);
                r.eq("count-gcud-cyclic-even", n, gcud_cyc[n].clone(), cyclic.clone());
                let k = n / 2;
                let expected = self.e(n) - BigInt::from(k - 1) * self.e(n - 1);
                r.eq("gcud-cyclic-even-formula", n, expected, cyclic);
            }
        }
        let k_euler = self.catalog_terms(SequenceId::KEulerOdd, cap + 1);
        for n in 0..=cap + 1 {
            r.eq("count-ud", n, self.e(n), BigInt::from(self.ud[n].len()));
            let down_up = enumerate_direct(Family::DownUp, n).unwrap().len();
            r.eq("count-down-up", n, self.e(n), BigInt::from(down_up));
            if n >= 2 && n % 2 == 0 {
                let k = n / 2;
                let last_gt_first =
                    BigInt::from(self.ud[n].iter().filter(|it| is_member(&it.p, Family::UdLastGtFirst).unwrap()).count());
                r.eq("count-ud-last-gt-first", n, BigInt::from(k) * self.e(n - 1), last_gt_first.clone());
                r.eq("catalog-k-euler-odd", n, k_euler[n].clone(), last_gt_first);
            }
        }
    }

    fn generation(&self, r: &mut Report) {
        let direct_families = [
            Family::Ud,
            Family::DownUp,
            Family::UdLastGtFirst,
            Family::Cud,
            Family::CudEvenOnly,
            Family::CudOddOnly,
            Family::CudDerangement,
            Family::CudCyclic,
        ];
        for f in direct_families {
            for n in 0..=self.n_cap {
                let direct = enumerate_direct(f, n).unwrap();
                let filtered: Vec<Permutation> = self.members(f, n).map(|it| it.p.clone()).collect();
                let same = direct == filtered;
                r.push(
                    &format!("direct-vs-filter[{f}]"),
                    n,
                    format!("{} members, identical lists", filtered.len()),
                    format!("{} members, {}", direct.len(), if same { "identical lists" } else { "lists differ" }),
                    same,
                );
            }
        }
    }

    fn perm_invariants(&self, r: &mut Report) {
        for n in 0..=self.n_cap {
            let all = &self.sym[n];
            let bad = all
                .iter()
                .filter(|it| {
                    let c = it.p.to_cycles();
                    from_cycles(&c) != it.p || CycleDecomposition::new(c.cycles().to_vec()).as_ref() != Ok(&c)
                })
                .count();
            r.none("cycles-roundtrip", n, bad);
            let bad = all.iter().filter(|it| it.p.switch().switch() != it.p).count();
            r.none("switch-involution", n, bad);

            let switched: BTreeSet<Permutation> = self.ud[n].iter().map(|it| it.p.switch()).collect();
            let down_up: BTreeSet<Permutation> = enumerate_direct(Family::DownUp, n).unwrap().into_iter().collect();
            r.eq("switch-ud-onto-down-up", n, down_up.len(), if switched == down_up { switched.len() } else { 0 });

            let bad = self.members(Family::Cud, n).filter(|it| !is_member(&it.p, Family::Gcud).unwrap()).count();
            r.none("cud-subset-gcud", n, bad);
            let bad = self
                .members(Family::Gcud, n)
                .flat_map(|it| it.p.to_cycles().into_cycles())
                .filter(|c| c.len() % 2 == 1 && up_down_rotations(c) != 1)
                .count();
            r.none("gcud-odd-cycle-unique-representation", n, bad);
            if n % 2 == 1 {
                r.eq("count-gcud-cyclic-odd", n, self.e(n), self.count(Family::GcudCyclic, n));
            }
            let bad = all
                .iter()
                .filter(|it| {
                    is_member(&it.p, Family::CudEvenOnly).unwrap() != (it.s.fp == 0 && excedances_alternate(&it.p))
                })
                .count();
            r.none("even-only-excedance-characterization", n, bad);
        }
    }

    fn statistics(&self, r: &mut Report) {
        for n in 0..=self.n_cap {
            let bad = self.sym[n]
                .iter()
                .filter(|it| {
                    let s = &it.s;
                    let w = it.p.word();
                    let deficiencies = w.iter().enumerate().filter(|&(i, &v)| (v as usize) < i + 1).count() as u32;
                    s.c != s.c_o + s.c_e
                        || s.nud != s.c - s.ud
                        || s.fp > s.c_o
                        || s.exc + deficiencies + s.fp != n as u32
                })
                .count();
            r.none("stat-relations", n, bad);
            let bad = self.members(Family::Cud, n).filter(|it| it.s.c_o + 2 * it.s.exc != n as u32).count();
            r.none("cud-parity-relation", n, bad);
        }
        for n in 1..=self.n_cap + 1 {
            let extr = marginal(self.ud[n].iter().map(|it| it.s.extr));
            let lrm_st = marginal(self.ud[n].iter().map(|it| it.s.lrm + it.s.st - 2));
            r.eq("ud-extr-vs-lrm-plus-st", n, lrm_st, extr);
        }
    }

    fn stirling(&self, r: &mut Report) {
        let patterns: Vec<MinMaxPattern> = PATTERNS.iter().map(|p| p.parse().unwrap()).collect();
        for n in 0..=self.n_cap {
            let row: BTreeMap<u32, u64> = stirling_row(n)
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k as u32, u64::try_from(c).unwrap()))
                .collect();
            let all = &self.sym[n];
            let total: BigInt = stirling_row(n).iter().sum();
            r.eq("stirling-row-sum", n, factorial(n), total);
            r.eq("stirling-c", n, row.clone(), marginal(all.iter().map(|it| it.s.c)));
            r.eq("stirling-lrm", n, row.clone(), marginal(all.iter().map(|it| it.s.lrm)));
            r.eq("stirling-st", n, row.clone(), marginal(all.iter().map(|it| it.s.st)));
            for (text, s) in PATTERNS.iter().zip(&patterns) {
                let dist = marginal(all.iter().map(|it| m_s(&it.p, s)));
                r.eq(&format!("stirling-m_s[{text}]"), n, row.clone(), dist);
            }
            if n >= 1 {
                let expected: BTreeMap<u32, u64> = stirling_row(n - 1)
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k as u32, u64::try_from(c << k).unwrap()))
                    .collect();
                r.eq("extr-two-power-stirling", n, expected, marginal(all.iter().map(|it| it.s.extr)));
            }
        }
    }

    fn bijections(&self, r: &mut Report) {
        for n in 0..=self.n_cap {
            let domain_ud = &self.ud[n + 1];
            let cud: BTreeSet<CycleDecomposition> = self.members(Family::Cud, n).map(|it| it.p.to_cycles()).collect();

            let mut images = BTreeSet::new();
            let mut bad_stats = 0;
            let mut bad_roundtrip = 0;
            for it in domain_ud {
                let c = phi(&it.p).unwrap();
                let s = stats(&c.to_permutation());
                if s.c_e + 1 != it.s.lrm || s.c_o + 1 != it.s.st || s.c + 2 != it.s.lrm + it.s.st {
                    bad_stats += 1;
                }
                if phi_inverse(&c).as_ref() != Ok(&it.p) {
                    bad_roundtrip += 1;
                }
                images.insert(c);
            }
            r.eq("phi-bijection", n, cud.len(), bijective_size(&images, &cud, domain_ud.len()));
            r.none("phi-roundtrip", n, bad_roundtrip);
            r.none("phi-statistics", n, bad_stats);

            let mut images = BTreeSet::new();
            let mut bad_stats = 0;
            let mut bad_roundtrip = 0;
            for it in domain_ud {
                let c = jbij(&it.p).unwrap();
                if c.num_cycles() as u32 != it.s.extr {
                    bad_stats += 1;
                }
                if jbij_inverse(&c).as_ref() != Ok(&it.p) {
                    bad_roundtrip += 1;
                }
                images.insert(c);
            }
            r.eq("jbij-bijection", n, cud.len(), bijective_size(&images, &cud, domain_ud.len()));
            r.none("jbij-roundtrip", n, bad_roundtrip);
            r.none("jbij-extr", n, bad_stats);

            let odd: BTreeSet<CycleDecomposition> =
                self.members(Family::CudOddOnly, n).map(|it| it.p.to_cycles()).collect();
            let mut images = BTreeSet::new();
            let (mut bad_stats, mut bad_roundtrip) = (0, 0);
            for it in &self.ud[n] {
                let c = f_odd(&it.p).unwrap();
                bad_stats += usize::from(c.num_cycles() as u32 != it.s.st);
                bad_roundtrip += usize::from(f_odd_inverse(&c).as_ref() != Ok(&it.p));
                images.insert(c);
            }
            r.eq("f-bijection", n, odd.len(), bijective_size(&images, &odd, self.ud[n].len()));
            r.none("f-roundtrip", n, bad_roundtrip);
            r.none("f-st", n, bad_stats);

            if n % 2 == 0 {
                let even: BTreeSet<CycleDecomposition> =
                    self.members(Family::CudEvenOnly, n).map(|it| it.p.to_cycles()).collect();
                let mut images = BTreeSet::new();
                let (mut bad_stats, mut bad_roundtrip) = (0, 0);
                for it in &self.ud[n] {
                    let c = g_even(&it.p).unwrap();
                    let openers: Vec<u32> = c.cycles().iter().rev().map(|cy| cy[0]).collect();
                    let minima: Vec<u32> = lrm_positions(it.p.word()).iter().map(|&i| it.p.word()[i]).collect();
                    bad_stats += usize::from(c.num_cycles() as u32 != it.s.lrm || openers != minima);
                    bad_roundtrip += usize::from(g_even_inverse(&c).as_ref() != Ok(&it.p));
                    images.insert(c);
                }
                r.eq("g-bijection", n, even.len(), bijective_size(&images, &even, self.ud[n].len()));
                r.none("g-roundtrip", n, bad_roundtrip);
                r.none("g-lrm", n, bad_stats);
            }
        }
        self.rotation(r);
        self.min_max_maps(r);
        self.ell(r);
        for n in 0..=self.n_cap {
            let bad = self.sym[n].iter().filter(|it| foata_word(&foata_cycles(&it.p), true) != it.p).count();
            r.none("foata-roundtrip", n, bad);
        }
    }

    fn rotation(&self, r: &mut Report) {
        for n in (2..=self.n_cap + 1).step_by(2) {
            let k = n / 2;
            let domain_set: Vec<&Permutation> = self.ud[n]
                .iter()
                .map(|it| &it.p)
                .filter(|p| is_member(p, Family::UdLastGtFirst).unwrap())
                .collect();
            let starts_at_one: BTreeSet<&Permutation> = self.ud[n].iter().map(|it| &it.p).filter(|p| p.word()[0] == 1).collect();
            let mut pairs = BTreeSet::new();
            let mut bad = 0;
            for p in &domain_set {
                match rotate_ud_inverse(p) {
                    Ok((sigma, i)) => {
                        let ok = (1..=k).contains(&i)
                            && starts_at_one.contains(&sigma)
                            && rotate_ud(&sigma, i).as_ref() == Ok(*p);
                        bad += usize::from(!ok);
                        pairs.insert((sigma, i));
                    }
                    Err(_) => bad += 1,
                }
            }
            let forward_ok = starts_at_one.iter().all(|s| {
                (1..=k).all(|i| rotate_ud(s, i).map(|q| is_member(&q, Family::UdLastGtFirst).unwrap()).unwrap_or(false))
            });
            r.eq("rotation-bijection", n, k * starts_at_one.len(), if bad == 0 && forward_ok { pairs.len() } else { 0 });
        }
    }

    fn min_max_maps(&self, r: &mut Report) {
        for text in PATTERNS {
            let s: MinMaxPattern = text.parse().unwrap();
            for n in 0..=self.n_cap {
                let mut images = HashSet::new();
                let mut bad = 0;
                for it in &self.sym[n] {
                    let q = h_map(&it.p, &s);
                    bad += usize::from(stats(&q).lrm != m_s(&it.p, &s));
                    images.insert(q);
                }
                r.eq(&format!("h_s-bijection[{text}]"), n, self.sym[n].len(), images.len());
                r.none(&format!("h_s-lrm-equals-m_s[{text}]"), n, bad);
            }
        }
    }

    fn ell(&self, r: &mut Report) {
        for n in 2..=self.n_cap {
            let mut images = HashSet::new();
            let mut bad = 0;
            for it in &self.sym[n - 1] {
                let minima = lrm_positions(it.p.word());
                for bits in BitWord::all(minima.len()) {
                    let q = ell_map(&it.p, &bits).unwrap();
                    let extreme = extreme_positions(q.word());
                    let w = q.word();
                    let shifted: Vec<usize> = minima.iter().map(|i| i + 1).collect();
                    let kinds_ok = extreme.iter().zip(&bits.0).all(|(&i, &b)| (w[i] > w[0]) == b);
                    let ok = extreme == shifted
                        && kinds_ok
                        && ell_inverse(&q).as_ref() == Ok(&(it.p.clone(), bits.clone()));
                    bad += usize::from(!ok);
                    images.insert(q);
                }
            }
            let with_extremes = self.sym[n].iter().filter(|it| it.s.extr > 0).count();
            r.eq("ell-bijection", n, with_extremes, images.len());
            r.none("ell-roundtrip-and-extremes", n, bad);
        }
    }

    fn examples(&self, r: &mut Report) {
        let perm = |s: &str| Permutation::parse_any(s).unwrap();
        let compact = |s: &str| Permutation::new(s.bytes().map(|b| (b - b'0') as u32).collect()).unwrap();
        let cyc = |s: &str| s.parse::<CycleDecomposition>().unwrap();
        let alt: MinMaxPattern = "min,max,...".parse().unwrap();
        let mut ex = |name: &str, expected: String, actual: String| {
            let pass = expected == actual;
            r.push(&format!("example-{name}"), 0, expected, actual, pass);
        };
        ex("cycles", "(1,2,5,3)(4,7)(6)".into(), compact("2517364").to_cycles().to_string());
        ex("switch", "6 2 4 3".into(), compact("2634").switch().to_string());
        ex("cud-member", "true false".into(), format!(
            "{} {}",
            is_member(&perm("(1,5,2,7)(3)(4,8,6)(9)"), Family::Cud).unwrap(),
            is_member(&perm("(1,3,5)(2,4)(6)"), Family::Cud).unwrap()
        ));
        ex("st", "1 7 3 5".into(), {
            let p = compact("48127635");
            crate::stats::min_max_subsequence(&p, &alt).iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
        });
        ex("g", "(1,5,3,8)(2,6)(4,7)".into(), g_even(&compact("47261538")).unwrap().to_string());
        ex("g-inverse", "4 7 2 6 1 5 3 8".into(), g_even_inverse(&cyc("(4,7)(2,6)(1,5,3,8)")).unwrap().to_string());
        ex("f", "(1,7,4)(2)(3,8,6,9,5)".into(), f_odd(&compact("471938562")).unwrap().to_string());
        ex("f-inverse", "2 7 5 8 1 4 3 6".into(), f_odd_inverse(&cyc("(1,8,5,7,2)(3,6,4)")).unwrap().to_string());
        ex("phi", "(1,10,3)(2,7,4,11)(5,8)(6)(9)".into(), phi(&perm("6 9 3 8 5 12 1 10 2 11 4 7")).unwrap().to_string());
        ex("phi-inverse", "6 9 3 8 5 12 1 10 2 11 4 7".into(), phi_inverse(&cyc("(5,8)(2,7,4,11)(1,10,3)(6)(9)")).unwrap().to_string());
        ex("jbij", "(1,4)(2,8,3,6)(5)(7)".into(), jbij(&compact("351827496")).unwrap().to_string());
        ex("jbij-inverse", "3 5 1 8 2 7 4 9 6".into(), jbij_inverse(&cyc("(1,4)(2,8,3,6)(5)(7)")).unwrap().to_string());
        ex("h", "5 3 6 2 7 1 8 4".into(), h_map(&compact("48127635"), &alt).to_string());
        ex("ell", "5 7 2 4 1 8 6 9 3".into(), ell_map(&compact("86742513"), &"10011".parse().unwrap()).unwrap().to_string());
        ex("ell-inverse", "(8 6 7 4 2 5 1 3, 10011)".into(), {
            let (p, b) = ell_inverse(&compact("572418693")).unwrap();
            format!("({p}, {b})")
        });
        ex("matching", "red: 1-4 2-6 3-7 5-8 / blue: 1-7 2-4 3-6 5-8".into(), to_matching_pair(&perm("(1,4,2,6,3,7)(5,8)")).unwrap().to_string());
    }

    fn identities(&self, r: &mut Report) {
        let n = IDENTITY_ORDER;
        type S = Series<Rational>;
        let euler = |k: usize| &S::sec(k) + &S::tan(k);
        let e1 = euler(n + 1).differentiate();
        let e2 = euler(n + 2).differentiate().differentiate();
        r.eq("identity-exp-int-euler", n, e1.clone(), euler(n - 1).integrate().exp().unwrap());
        r.eq("identity-exp-int-tan", n, S::sec(n), S::tan(n - 1).integrate().exp().unwrap());
        r.eq("identity-exp-int-sec", n, euler(n), S::sec(n - 1).integrate().exp().unwrap());
        r.eq("identity-euler-second-derivative", n, e2, &euler(n) * &e1);
        r.eq("identity-euler-derivative", n, e1.clone(), &euler(n) * &S::sec(n));
        r.eq("identity-cud-reciprocal", n, catalog(SequenceId::Cud, n).unwrap().plain().unwrap().clone(), e1);
        r.eq("identity-sec-cos", n, S::one(n), &S::sec(n) * &S::cos(n));
    }

    fn coherence(&self, r: &mut Report) {
        let n = IDENTITY_ORDER;
        let one = int(1);
        let marked = |id| catalog(id, n).unwrap().marked().unwrap().clone();
        let plain = |id| catalog(id, n).unwrap().plain().unwrap().clone();
        let set = |s: &Series<MPoly>, ms: &[Marker]| {
            ms.iter().fold(s.clone(), |acc, &m| acc.eval_marker(m, &one)).to_rational().unwrap()
        };
        let euler = &Series::<Rational>::sec(n) + &Series::tan(n);

        r.eq("coherence-cud-fp-cycles", n, plain(SequenceId::Cud), set(&marked(SequenceId::CudFpCycles), &[Marker::X, Marker::T]));
        r.eq("coherence-cud-cycles", n, plain(SequenceId::Cud), set(&marked(SequenceId::CudCycles), &[Marker::T]));
        r.eq("coherence-gcud-fp-cycles", n, plain(SequenceId::Gcud), set(&marked(SequenceId::GcudFpCycles), &[Marker::X, Marker::T]));
        r.eq("coherence-perm-ud-nud", n, Series::geometric(n), set(&marked(SequenceId::PermUdNud), &[Marker::V, Marker::W]));
        r.eq("coherence-ud-st", n, euler.clone(), set(&marked(SequenceId::UdSt), &[Marker::T]));
        let minus_one = &euler - &Series::one(n);
        r.eq("coherence-ud-lrm", n, minus_one.clone(), set(&marked(SequenceId::UdLrm), &[Marker::T]));
        r.eq("coherence-ud-extr", n, minus_one, set(&marked(SequenceId::UdExtr), &[Marker::T]));

        // t_o = t_e = t turns the odd/even polynomial into the cycle polynomial
        let odd_even = marked(SequenceId::CudOddEven).map(|c| {
            let mut out = MPoly::zero();
            for (mono, coef) in c.terms() {
                let e = mono.exponent(Marker::To) + mono.exponent(Marker::Te);
                out.add_term(Monomial::one().with(Marker::T, e), coef.clone());
            }
            out
        });
        r.eq("coherence-cud-odd-even", n, marked(SequenceId::CudCycles), odd_even);
        // x = 0 gives derangements
        let derangements = marked(SequenceId::CudFpCycles)
            .eval_marker(Marker::X, &Rational::zero())
            .eval_marker(Marker::T, &one)
            .to_rational()
            .unwrap();
        r.eq("coherence-cud-derangements", n, plain(SequenceId::CudDerangements), derangements);
    }

    fn distributions(&self, r: &mut Report) {
        let cap = self.n_cap;
        let table = |id: SequenceId| catalog(id, cap).unwrap().egf_polys();
        let entries: [(SequenceId, Family, &[Stat], usize); 8] = [
            (SequenceId::CudFpCycles, Family::Cud, &[Stat::Fp, Stat::C], 0),
            (SequenceId::CudCycles, Family::Cud, &[Stat::C], 0),
            (SequenceId::CudOddEven, Family::Cud, &[Stat::Co, Stat::Ce], 0),
            (SequenceId::GcudFpCycles, Family::Gcud, &[Stat::Fp, Stat::C], 0),
            (SequenceId::PermUdNud, Family::All, &[Stat::Ud, Stat::Nud], 0),
            (SequenceId::UdSt, Family::Ud, &[Stat::St], 0),
            (SequenceId::UdLrm, Family::Ud, &[Stat::Lrm], 1),
            (SequenceId::UdExtr, Family::Ud, &[Stat::Extr], 1),
        ];
        for (id, family, stat_list, start) in entries {
            let polys = table(id);
            let markers = id.markers();
            for n in start..=cap {
                let items: Box<dyn Iterator<Item = &Item>> = if family == Family::Ud {
                    Box::new(self.ud[n].iter())
                } else {
                    Box::new(self.members(family, n))
                };
                let oracle = oracle_poly(items.map(|it| &it.s), stat_list, markers);
                r.eq(&format!("distribution-{id}"), n, polys[n].clone(), oracle);
            }
        }
        for n in 0..=cap {
            let oracle = oracle_poly(self.members(Family::Cud, n).map(|it| &it.s), &[Stat::Exc], &[Marker::T]);
            r.eq("distribution-exc", n, exc_polynomial(n).unwrap(), oracle);
        }
        for s in [rat(1, 2), int(2)] {
            let terms = exc_closed_form_terms(&s, cap).unwrap();
            let t = &s * &s;
            for (n, term) in terms.into_iter().enumerate() {
                let poly = exc_polynomial(n).unwrap().eval(Marker::T, &t).as_constant().unwrap();
                r.eq(&format!("exc-closed-form[t={}]", format_rational(&t)), n, poly, term);
            }
        }
    }

    fn expectations(&self, r: &mut Report) {
        for n in 1..=self.n_cap {
            let total: u64 = self.sym[n].iter().map(|it| it.s.ud as u64).sum();
            let mean = Rational::new(BigInt::from(total), factorial(n));
            r.eq("expected-ud-cycles", n, expected_ud_cycles(n), mean);
            let r_n = self.sym[n].iter().filter(|it| it.s.ud == 0).count();
            r.eq("no-ud-cycles-count", n, no_ud_cycles_count(n).unwrap(), BigInt::from(r_n));
        }
        for n in 1..=crate::series::catalog::DEFAULT_ORDER_CAP {
            r.eq("expected-ud-cycles-series", n, expected_ud_cycles(n), expected_ud_cycles_from_series(n).unwrap());
            let ratio = Rational::new(no_ud_cycles_count(n).unwrap(), factorial(n));
            r.eq("no-ud-cycles-formula", n, no_ud_cycles_ratio(n), ratio);
        }
        let n = 40;
        let value = to_f64(&expected_ud_cycles(n));
        within(r, "expected-ud-cycles-limit", n, EXPECTED_UD_CYCLES_QUOTED, value);
        let value = to_f64(&no_ud_cycles_ratio(n));
        within(r, "no-ud-cycles-limit", n, NO_UD_CYCLES_QUOTED, value);
    }

    fn continued_fraction(&self, r: &mut Report) {
        for d in 1..=10 {
            let conv = secant_cf_convergent(d, d);
            let expected: Vec<BigInt> = (0..=d).map(|m| self.e(2 * m)).collect();
            let actual: Vec<BigInt> = conv.coeffs().iter().map(|c| c.to_integer()).collect();
            r.eq("continued-fraction", d, expected, actual);
        }
    }

    fn matchings(&self, r: &mut Report) {
        for n in (0..=self.n_cap).step_by(2) {
            let pairs: BTreeSet<MatchingPair> = all_matching_pairs(n).into_iter().collect();
            r.eq("matching-count", n, self.e(n), BigInt::from(pairs.len()));
            let mut images = BTreeSet::new();
            let mut bad = 0;
            for it in self.members(Family::CudEvenOnly, n) {
                let mp = to_matching_pair(&it.p).unwrap();
                bad += usize::from(from_matching_pair(&mp).as_ref() != Ok(&it.p));
                images.insert(mp);
            }
            r.eq("matching-bijection", n, pairs.len(), if images == pairs { images.len() } else { 0 });
            r.none("matching-roundtrip", n, bad);
        }
    }
}

/// Size of `images` if it equals `target` and was produced injectively from
/// `domain_len` inputs, else 0.
fn bijective_size<T: Ord>(images: &BTreeSet<T>, target: &BTreeSet<T>, domain_len: usize) -> usize {
    if images == target && images.len() == domain_len {
        images.len()
    } else {
        0
    }
}

fn up_down_rotations(cycle: &[u32]) -> usize {
    let mut w = cycle.to_vec();
    (0..cycle.len())
        .filter(|_| {
            let ok = is_up_down(&w);
            w.rotate_left(1);
            ok
        })
        .count()
}

fn marginal(values: impl Iterator<Item = u32>) -> BTreeMap<u32, u64> {
    let mut out = BTreeMap::new();
    for v in values {
        *out.entry(v).or_insert(0) += 1;
    }
    out
}

fn oracle_poly<'a>(vs: impl Iterator<Item = &'a StatVector>, stat_list: &[Stat], markers: &[Marker]) -> MPoly {
    let mut p = MPoly::zero();
    for v in vs {
        let mono = stat_list
            .iter()
            .zip(markers)
            .fold(Monomial::one(), |m, (s, &mk)| m.with(mk, s.of(v) as u16));
        p.add_term(mono, Rational::one());
    }
    p
}

fn within(r: &mut Report, check: &str, n: usize, quoted: f64, value: f64) {
    let pass = (value - quoted).abs() <= LIMIT_TOLERANCE;
    r.push(check, n, format!("{quoted} ± {LIMIT_TOLERANCE:e}"), format!("{value:.12}"), pass);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes() {
        let report = verify_all(5).unwrap();
        let failures: Vec<_> = report.failures().collect();
        assert!(failures.is_empty(), "{failures:#?}");
        assert!(report.check_names().len() >= 40);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(verify_all(MAX_N_CAP + 1).is_err());
    }

    #[test]
    fn corrupted_table_is_caught() {
        let mut table = euler_numbers(EULER_TABLE_LEN - 1);
        table[5] += 1;
        let report = Verifier::new(4).unwrap().with_euler_table(table).unwrap().run();
        let first = report.first_failure().unwrap();
        assert_eq!(first.check, "euler-boustrophedon-vs-series");
        assert!(report.failures().any(|f| f.check == "count-cud" && f.n == 4));
    }
}
