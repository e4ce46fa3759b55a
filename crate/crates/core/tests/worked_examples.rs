use cudlab::bijections::*;
use cudlab::matchings::{from_matching_pair, to_matching_pair, MatchingPair};
use cudlab::oracle::{count, distribution, enumerate};
use cudlab::perm::{from_cycles, is_member, CycleDecomposition, Family, Permutation};
use cudlab::series::catalog::{catalog, SequenceId};
use cudlab::series::cf::secant_cf_convergent;
use cudlab::series::formulas::*;
use cudlab::series::numbers::{euler_numbers, stirling_c, stirling_row};
use cudlab::series::{int, rat, Coeff, MPoly, Marker, Rational, Series};
use cudlab::stats::{min_max_subsequence, stats, MinMaxPattern, Stat};
use num_bigint::BigInt;

fn compact(s: &str) -> Permutation {
    Permutation::new(s.bytes().map(|b| (b - b'0') as u32).collect()).unwrap()
}

fn spaced(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn cyc(s: &str) -> CycleDecomposition {
    s.parse().unwrap()
}

fn pat(s: &str) -> MinMaxPattern {
    s.parse().unwrap()
}

#[test]
fn cycle_notation() {
    assert_eq!(compact("2517364").to_cycles().to_string(), "(1,2,5,3)(4,7)(6)");
    assert_eq!(Permutation::identity(3).to_cycles().to_string(), "(1)(2)(3)");
    assert_eq!(from_cycles(&cyc("(1,2,5,3)(4,7)(6)")), compact("2517364"));
    assert_eq!(from_cycles(&cyc("(1)(2)")), compact("12"));
    let p = from_cycles(&cyc("(1,4)(2,8,3,6)(5)(7)"));
    let expected = [(1, 4), (4, 1), (2, 8), (8, 3), (3, 6), (6, 2), (5, 5), (7, 7)];
    for (a, b) in expected {
        assert_eq!(p.image(a), Some(b));
    }
    assert!("(1,2)(2,3)".parse::<CycleDecomposition>().is_err());
    assert!(CycleDecomposition::with_ground(vec![vec![1, 3]], &[1, 2, 3]).is_err());
}

#[test]
fn foata_correspondence() {
    let w = compact("75283614");
    assert_eq!(foata_word(&foata_cycles(&w), true), w);
}

#[test]
fn switches() {
    assert_eq!(compact("2634").switch(), compact("6243"));
    assert_eq!(Permutation::empty().switch(), Permutation::empty());
    assert_eq!(compact("938562").switch(), compact("283659"));
}

#[test]
fn membership() {
    let p = |s: &str| Permutation::parse_any(s).unwrap();
    assert!(is_member(&p("(1,5,2,7)(3)(4,8,6)(9)"), Family::Cud).unwrap());
    assert!(!is_member(&p("(1,3,5)(2,4)(6)"), Family::Cud).unwrap());
    let general = p("(2,3,4,6)");
    assert!(cudlab::perm::cycle_is_generalized_up_down(&[2, 3, 4, 6]));
    assert!(!cudlab::perm::cycle_is_up_down(&[2, 3, 4, 6]));
    assert!(is_member(&general, Family::Cud).is_err());
    assert!(!is_member(&p("(1,2,4,3)"), Family::Gcud).unwrap());
    for s in ["(1,3,4,2)", "(1,4,3,2)"] {
        assert!(!is_member(&p(s), Family::Gcud).unwrap());
    }
    assert!(is_member(&Permutation::empty(), Family::Cud).unwrap());
    assert!(is_member(&Permutation::empty(), Family::Ud).unwrap());
}

#[test]
fn statistic_examples() {
    let p = compact("48127635");
    assert_eq!(stats(&p).st, 4);
    assert_eq!(min_max_subsequence(&p, &pat("min,max,...")), [1, 7, 3, 5]);
    let id = stats(&Permutation::identity(4));
    assert_eq!((id.c, id.c_o, id.c_e, id.fp, id.lrm, id.exc), (4, 4, 0, 4, 1, 0));
    assert_eq!(stats(&compact("351827496")).extr, 4);
    let s = stats(&from_cycles(&cyc("(1,4)(2,8,3,6)(5)(7)")));
    assert_eq!((s.exc, s.c_o), (3, 2));
    assert_eq!(s.c_o + 2 * s.exc, 8);
    assert_eq!(stats(&Permutation::empty()), Default::default());
}

#[test]
fn min_max_patterns() {
    let p = compact("48127635");
    // the whole word is scanned first, so min,min,... walks the right-to-left minima
    assert_eq!(min_max_subsequence(&p, &pat("min,...")), [1, 2, 3, 5]);
    assert_eq!(min_max_subsequence(&p, &pat("max,...")), [8, 7, 6, 5]);
    assert!(min_max_subsequence(&Permutation::empty(), &pat("min,...")).is_empty());
    assert!("min,foo,...".parse::<MinMaxPattern>().is_err());
    assert_eq!(pat("min,max,...").to_string(), "min,max,...");
}

#[test]
fn bijection_examples() {
    assert_eq!(g_even(&compact("47261538")).unwrap(), cyc("(4,7)(2,6)(1,5,3,8)"));
    assert_eq!(g_even(&compact("12")).unwrap(), cyc("(1,2)"));
    assert_eq!(g_even(&spaced("5 8 2 7 4 11")).unwrap(), cyc("(5,8)(2,7,4,11)"));
    assert_eq!(g_even_inverse(&cyc("(4,7)(2,6)(1,5,3,8)")).unwrap(), compact("47261538"));
    assert_eq!(f_odd(&compact("471938562")).unwrap(), cyc("(1,7,4)(2)(3,8,6,9,5)"));
    assert_eq!(f_odd(&spaced("3 10 1 9 6")).unwrap(), cyc("(1,10,3)(6)(9)"));
    assert_eq!(f_odd_inverse(&cyc("(1,8,5,7,2)(3,6,4)")).unwrap(), compact("27581436"));
    let p = spaced("6 9 3 8 5 12 1 10 2 11 4 7");
    let c = cyc("(5,8)(2,7,4,11)(1,10,3)(6)(9)");
    assert_eq!(phi(&p).unwrap(), c);
    assert_eq!(phi_inverse(&c).unwrap(), p);
    assert!(phi(&compact("1")).unwrap().is_empty());
    assert_eq!(phi(&compact("12")).unwrap(), cyc("(1)"));
    assert_eq!(jbij(&compact("351827496")).unwrap(), cyc("(1,4)(2,8,3,6)(5)(7)"));
    assert_eq!(jbij_inverse(&cyc("(1,4)(2,8,3,6)(5)(7)")).unwrap(), compact("351827496"));
    assert_eq!(jbij(&compact("12")).unwrap(), cyc("(1)"));
    assert_eq!(jbij_inverse(&cyc("(1)")).unwrap(), compact("12"));
    let mut tau = vec![9];
    tau.extend_from_slice(foata_word(&cyc("(1,4)(2,8,3,6)(5)(7)"), true).word());
    assert_eq!(Permutation::new(tau).unwrap(), compact("975283614"));
    assert_eq!(h_map(&compact("48127635"), &MinMaxPattern::alternating()), compact("53627184"));
    assert_eq!(ell_map(&compact("86742513"), &"10011".parse().unwrap()).unwrap(), compact("572418693"));
    assert_eq!(ell_map(&compact("1"), &"0".parse().unwrap()).unwrap(), compact("21"));
    assert_eq!(
        ell_inverse(&compact("572418693")).unwrap(),
        (compact("86742513"), "10011".parse().unwrap())
    );
    assert_eq!(ell_inverse(&compact("21")).unwrap(), (compact("1"), "0".parse().unwrap()));
    assert!(ell_map(&compact("21"), &"0".parse().unwrap()).is_err());
    assert!(ell_inverse(&compact("1")).is_err());
}

#[test]
fn bijection_domains() {
    assert!(g_even(&compact("123")).is_err());
    assert!(f_odd(&compact("321")).is_err());
    assert!(phi(&compact("21")).is_err());
    assert!(jbij_inverse(&cyc("(1,2,3)")).is_err());
    assert!(phi_inverse(&cyc("(1,2,3)")).is_err());
    assert!(f_odd_inverse(&cyc("(1,2)")).is_err());
    assert!(g_even_inverse(&cyc("(1)")).is_err());
}

#[test]
fn rotation_small() {
    assert_eq!(rotate_ud(&compact("1324"), 1).unwrap(), compact("1324"));
    let q = rotate_ud(&compact("1324"), 2).unwrap();
    assert_eq!(q, compact("2413"));
    assert!(is_member(&q, Family::UdLastGtFirst).unwrap());
    assert_eq!(count(Family::UdLastGtFirst, 4).unwrap(), 4);
}

#[test]
fn h_is_a_bijection_on_s6() {
    let s = MinMaxPattern::alternating();
    let images: std::collections::HashSet<_> =
        enumerate(Family::All, 6).unwrap().iter().map(|p| h_map(p, &s)).collect();
    assert_eq!(images.len(), 720);
}

#[test]
fn ell_extreme_counts() {
    let dist = distribution(Family::All, 5, &[Stat::Extr]).unwrap();
    for (k, c) in dist.marginal(Stat::Extr).unwrap() {
        let expected = stirling_c(4, k as usize) << k;
        assert_eq!(BigInt::from(c), expected, "k={k}");
    }
}

#[test]
fn series_arithmetic() {
    type S = Series<Rational>;
    let a = S::new(vec![int(1), int(1), int(0)]);
    let b = S::new(vec![int(1), int(-1), int(0)]);
    assert_eq!(&a * &b, S::new(vec![int(1), int(0), int(-1)]));
    assert_eq!(&S::sec(10) * &S::cos(10), S::one(10));
    assert_eq!(&S::tan(10) * &S::cos(10), S::sin(10));
    assert_eq!(S::zero(6).exp().unwrap(), S::one(6));
}

#[test]
fn marked_powers() {
    let t = MPoly::var(Marker::T);
    let s = catalog(SequenceId::CudCycles, 2).unwrap();
    assert_eq!(s.egf_polys()[2], t.plus(&t.times(&t)));
    let base = (&Series::<Rational>::one(3) - &Series::sin(3)).lift();
    assert_eq!(base.pow(&MPoly::zero()).unwrap(), Series::one(3));
    let to = MPoly::var(Marker::To);
    let te = MPoly::var(Marker::Te);
    let s = catalog(SequenceId::CudOddEven, 2).unwrap();
    assert_eq!(s.egf_polys()[2], to.times(&to).plus(&te));
}

#[test]
fn numbers() {
    let e: Vec<i64> = euler_numbers(8).iter().map(|x| x.try_into().unwrap()).collect();
    assert_eq!(e, [1, 1, 1, 2, 5, 16, 61, 272, 1385]);
    let series = catalog(SequenceId::Euler, 8).unwrap().integer_terms().unwrap();
    assert_eq!(series, euler_numbers(8));
    assert_eq!(stirling_row(3)[1..], [2.into(), 3.into(), 1.into()]);
    assert_eq!(stirling_c(2, 5), BigInt::from(0));
}

#[test]
fn catalog_examples() {
    let terms = |id, n| -> Vec<i64> {
        catalog(id, n).unwrap().integer_terms().unwrap()[1..].iter().map(|x| x.try_into().unwrap()).collect()
    };
    assert_eq!(terms(SequenceId::Gcud, 9), [1, 2, 6, 21, 97, 491, 2989, 19756, 148444]);
    assert_eq!(terms(SequenceId::GcudEvenOnly, 9), [0, 1, 0, 6, 0, 89, 0, 2431, 0]);
    assert_eq!(terms(SequenceId::GcudEvenCyclic, 9), [0, 1, 0, 3, 0, 29, 0, 569, 0]);
    assert_eq!(terms(SequenceId::CudDerangements, 9), [0, 1, 1, 5, 15, 71, 341, 1945, 12135]);
    assert_eq!(terms(SequenceId::Cud, 3)[2], 5);
    assert!("not-a-sequence".parse::<SequenceId>().is_err());
}

#[test]
fn excedance_polynomial() {
    let t = MPoly::var(Marker::T);
    assert_eq!(exc_polynomial(2).unwrap(), MPoly::one().plus(&t));
    assert_eq!(exc_polynomial(0).unwrap(), MPoly::one());
    assert_eq!(exc_polynomial(8).unwrap().total(), Rational::from_integer(euler_numbers(9)[9].clone()));
}

#[test]
fn continued_fraction_examples() {
    assert_eq!(*secant_cf_convergent(2, 2).coeff(2), int(5));
    assert_eq!(secant_cf_convergent(1, 5), Series::geometric(5));
    let e = euler_numbers(16);
    let conv = secant_cf_convergent(8, 8);
    for m in 0..=8 {
        assert_eq!(*conv.coeff(m), Rational::from_integer(e[2 * m].clone()));
    }
}

#[test]
fn expectation_examples() {
    assert_eq!(expected_ud_cycles(3), rat(5, 3));
    assert_eq!(expected_ud_cycles(1), int(1));
    assert!((to_f64(&expected_ud_cycles(40)) - 1.841817641).abs() <= 1e-9);
    assert_eq!(no_ud_cycles_count(1).unwrap(), BigInt::from(0));
    assert_eq!(no_ud_cycles_count(2).unwrap(), BigInt::from(0));
    assert_eq!(no_ud_cycles_count(3).unwrap(), BigInt::from(1));
    assert_eq!(no_ud_cycles_ratio(8), rat(1, 6) - rat(1, 120) + rat(1, 5040));
}

#[test]
fn distribution_examples() {
    let t = distribution(Family::Cud, 2, &[Stat::C]).unwrap();
    assert_eq!(t.to_poly(&[Marker::T]).to_string(), "t + t^2");
    let t = distribution(Family::All, 3, &[Stat::St]).unwrap();
    assert_eq!(t.to_csv(), "st,count\n1,2\n2,3\n3,1\n");
    for n in 0..=7 {
        let lrm = distribution(Family::All, n, &[Stat::Lrm]).unwrap().marginal(Stat::Lrm).unwrap();
        let c = distribution(Family::All, n, &[Stat::C]).unwrap().marginal(Stat::C).unwrap();
        assert_eq!(lrm, c);
    }
    assert_eq!(count(Family::Cud, 3).unwrap(), 5);
    assert_eq!(count(Family::Gcud, 4).unwrap(), 21);
    assert_eq!(count(Family::Ud, 0).unwrap(), 1);
    assert_eq!(count(Family::CudEvenOnly, 6).unwrap(), 61);
}

#[test]
fn matching_examples() {
    let p = Permutation::parse_any("(1,4,2,6,3,7)(5,8)").unwrap();
    let mp = to_matching_pair(&p).unwrap();
    assert_eq!(mp.red(), &[(1, 4), (2, 6), (3, 7), (5, 8)]);
    assert_eq!(mp.blue(), &[(1, 7), (2, 4), (3, 6), (5, 8)]);
    assert_eq!(from_matching_pair(&mp).unwrap(), p);
    let tiny = MatchingPair::new(2, &[(1, 2)], &[(2, 1)]).unwrap();
    assert_eq!(from_matching_pair(&tiny).unwrap(), Permutation::parse_any("(1,2)").unwrap());
    let q = Permutation::parse_any("(1,2,3)").unwrap();
    assert!(to_matching_pair(&q).is_err());
}
