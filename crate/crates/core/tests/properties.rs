//! Exhaustive and randomized properties of the bijections, on `[n]` and on
//! arbitrary finite ground sets.

use std::collections::BTreeSet;

use cudlab::bijections::*;
use cudlab::oracle::{enumerate, enumerate_direct, enumerate_filtered};
use cudlab::perm::{is_member, CycleDecomposition, Entry, Family, Permutation};
use cudlab::stats::{stats, MinMaxPattern};
use proptest::prelude::*;

fn relabel(p: &Permutation, ground: &[Entry]) -> Permutation {
    Permutation::new(p.word().iter().map(|&v| ground[v as usize - 1]).collect()).unwrap()
}

/// A random up-down permutation of a random ground set.
fn up_down_on_random_ground(max_len: usize) -> impl Strategy<Value = Permutation> {
    (0..=max_len)
        .prop_flat_map(|n| {
            let ground = proptest::collection::btree_set(1u32..60, n);
            (ground, any::<prop::sample::Index>())
        })
        .prop_map(|(ground, idx)| {
            let ground: Vec<Entry> = ground.into_iter().collect();
            let all = enumerate_direct(Family::Ud, ground.len()).unwrap();
            relabel(&all[idx.index(all.len())], &ground)
        })
}

fn any_on_random_ground(max_len: usize) -> impl Strategy<Value = Permutation> {
    proptest::collection::btree_set(1u32..60, 0..=max_len)
        .prop_flat_map(|ground| {
            let ground: Vec<Entry> = ground.into_iter().collect();
            (Just(ground.clone()), Just(ground).prop_shuffle())
        })
        .prop_map(|(_, word)| Permutation::new(word).unwrap())
}

proptest! {
    #[test]
    fn f_counts_min_max_length(p in up_down_on_random_ground(9)) {
        let c = f_odd(&p).unwrap();
        prop_assert_eq!(c.num_cycles() as u32, stats(&p).st);
        prop_assert!(c.cycles().iter().all(|cy| cy.len() % 2 == 1));
        prop_assert!(c.is_cud());
        prop_assert_eq!(c.ground(), p.ground());
        prop_assert_eq!(f_odd_inverse(&c).unwrap(), p);
    }

    #[test]
    fn g_counts_left_to_right_minima(p in up_down_on_random_ground(10)) {
        prop_assume!(p.len() % 2 == 0);
        let c = g_even(&p).unwrap();
        prop_assert_eq!(c.num_cycles() as u32, stats(&p).lrm);
        prop_assert_eq!(c.ground(), p.ground());
        prop_assert_eq!(g_even_inverse(&c).unwrap(), p);
    }

    #[test]
    fn cycles_roundtrip_on_any_ground(p in any_on_random_ground(10)) {
        let c = p.to_cycles();
        prop_assert_eq!(c.to_permutation(), p.clone());
        prop_assert_eq!(CycleDecomposition::new(c.cycles().to_vec()).unwrap(), c.clone());
        prop_assert_eq!(c.to_string().parse::<CycleDecomposition>().unwrap(), c);
        prop_assert_eq!(p.to_string().parse::<Permutation>().unwrap(), p.clone());
        prop_assert_eq!(p.switch().switch(), p.clone());
        prop_assert_eq!(p.switch().ground(), p.ground());
    }

    #[test]
    fn switch_reverses_alternation(p in up_down_on_random_ground(10)) {
        prop_assert!(p.switch().is_down_up());
    }

    #[test]
    fn statistics_ignore_relabeling(p in any_on_random_ground(9)) {
        // word statistics depend only on relative order
        let ground = p.ground();
        let ranks: Vec<Entry> = p.word().iter().map(|v| ground.binary_search(v).unwrap() as Entry + 1).collect();
        let q = Permutation::new(ranks).unwrap();
        let (a, b) = (stats(&p), stats(&q));
        prop_assert_eq!((a.lrm, a.st, a.extr), (b.lrm, b.st, b.extr));
    }

    #[test]
    fn h_s_carries_m_s_to_minima(
        p in any_on_random_ground(9).prop_map(|p| {
            let ground = p.ground();
            Permutation::new(p.word().iter().map(|v| ground.binary_search(v).unwrap() as Entry + 1).collect()).unwrap()
        }),
        pattern in prop::sample::select(vec!["min,max,...", "min,...", "max,...", "max;min,...", "min,min,max,..."]),
    ) {
        let s: MinMaxPattern = pattern.parse().unwrap();
        prop_assert_eq!(stats(&h_map(&p, &s)).lrm, cudlab::stats::m_s(&p, &s));
    }
}

#[test]
fn phi_and_jbij_are_bijections_up_to_eight() {
    for n in 0..=8 {
        let cud: BTreeSet<CycleDecomposition> =
            enumerate(Family::Cud, n).unwrap().iter().map(Permutation::to_cycles).collect();
        let domain = enumerate(Family::Ud, n + 1).unwrap();
        assert_eq!(domain.len(), cud.len(), "n={n}");
        let via_phi: BTreeSet<_> = domain.iter().map(|p| phi(p).unwrap()).collect();
        let via_j: BTreeSet<_> = domain.iter().map(|p| jbij(p).unwrap()).collect();
        assert_eq!(via_phi, cud, "phi n={n}");
        assert_eq!(via_j, cud, "jbij n={n}");
        for p in &domain {
            let s = stats(p);
            let c = phi(p).unwrap();
            let cs = stats(&c.to_permutation());
            assert_eq!((cs.c_e + 1, cs.c_o + 1), (s.lrm, s.st));
            assert_eq!(phi_inverse(&c).unwrap(), *p);
            let d = jbij(p).unwrap();
            assert_eq!(d.num_cycles() as u32, s.extr);
            assert_eq!(jbij_inverse(&d).unwrap(), *p);
        }
    }
}

#[test]
fn inverse_maps_land_in_up_down() {
    for n in 0..=7 {
        for p in enumerate(Family::Cud, n).unwrap() {
            let c = p.to_cycles();
            assert!(phi_inverse(&c).unwrap().is_up_down());
            assert!(jbij_inverse(&c).unwrap().is_up_down());
        }
    }
}

#[test]
fn direct_generation_agrees_with_filtering() {
    for f in [Family::Ud, Family::DownUp, Family::UdLastGtFirst, Family::Cud, Family::CudEvenOnly, Family::CudOddOnly] {
        for n in 0..=8 {
            assert_eq!(enumerate_direct(f, n).unwrap(), enumerate_filtered(f, n), "{f} n={n}");
        }
    }
}

#[test]
fn switch_maps_ud_onto_down_up() {
    for n in 0..=8 {
        let switched: BTreeSet<_> = enumerate(Family::Ud, n).unwrap().iter().map(Permutation::switch).collect();
        let down_up: BTreeSet<_> = enumerate(Family::DownUp, n).unwrap().into_iter().collect();
        assert_eq!(switched, down_up);
    }
}

#[test]
fn cud_inside_gcud_and_excedance_characterization() {
    for n in 0..=8 {
        for p in enumerate(Family::All, n).unwrap() {
            if is_member(&p, Family::Cud).unwrap() {
                assert!(is_member(&p, Family::Gcud).unwrap());
            }
            let even = is_member(&p, Family::CudEvenOnly).unwrap();
            let pointwise = stats(&p).fp == 0 && cudlab::perm::excedances_alternate(&p);
            assert_eq!(even, pointwise, "{p}");
        }
    }
}

#[test]
fn rotation_both_directions() {
    for k in 1..=4 {
        let n = 2 * k;
        let starts: Vec<Permutation> =
            enumerate(Family::Ud, n).unwrap().into_iter().filter(|p| p.word()[0] == 1).collect();
        let targets: BTreeSet<Permutation> = enumerate(Family::UdLastGtFirst, n).unwrap().into_iter().collect();
        let mut image = BTreeSet::new();
        for s in &starts {
            for i in 1..=k {
                let q = rotate_ud(s, i).unwrap();
                assert_eq!(rotate_ud_inverse(&q).unwrap(), (s.clone(), i));
                image.insert(q);
            }
        }
        assert_eq!(image, targets, "k={k}");
    }
}

#[test]
fn ell_roundtrip_on_s5() {
    let mut images = BTreeSet::new();
    for p in enumerate(Family::All, 5).unwrap() {
        let k = stats(&p).lrm as usize;
        for bits in BitWord::all(k) {
            let q = ell_map(&p, &bits).unwrap();
            assert_eq!(stats(&q).extr as usize, k);
            assert_eq!(ell_inverse(&q).unwrap(), (p.clone(), bits));
            images.insert(q);
        }
    }
    assert_eq!(images.len(), 720);
}

#[test]
fn bijections_refuse_general_ground_where_needed() {
    let p = Permutation::new(vec![3, 7]).unwrap();
    assert!(ell_map(&p, &"0".parse().unwrap()).is_err());
    assert!(is_member(&p, Family::Cud).is_err());
    assert!(is_member(&p, Family::Ud).unwrap());
}
