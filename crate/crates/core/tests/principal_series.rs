use proptest::prelude::*;

use serre_core::principal_series::{jh_of_induced, locate_in_ps, socle_of_induced, u_contents};
use serre_core::tuples::{SubsetS, Sym};
use serre_core::weight::{chi_of_weight, conjugate_char, weight_dim, ICharacter, Weight};
use serre_core::{Error, Params};

fn pr(p: u32, f: usize) -> Params {
    Params::new(p, f).unwrap()
}

fn sorted(mut v: Vec<Weight>) -> Vec<Weight> {
    v.sort();
    v
}

#[test]
fn f1_example() {
    let p = pr(5, 1);
    let chi = conjugate_char(&chi_of_weight(&p, &Weight::new(&p, vec![2], 0).unwrap()));
    let jh = jh_of_induced(&p, &chi);
    let ws = sorted(jh.factors.iter().map(|x| x.weight.clone()).collect());
    assert_eq!(ws, vec![Weight::new(&p, vec![2], 0).unwrap(), Weight::new(&p, vec![2], 2).unwrap()]);
    assert_eq!(ws.iter().map(weight_dim).sum::<u64>(), 6);
}

#[test]
fn f2_example() {
    let p = pr(7, 2);
    let chi = chi_of_weight(&p, &Weight::new(&p, vec![2, 1], 0).unwrap());
    let jh = jh_of_induced(&p, &chi);
    assert_eq!(jh.factors.len(), 4);
    assert!(jh.dropped.is_empty());
    assert_eq!(jh.factors.iter().map(|x| weight_dim(&x.weight)).sum::<u64>(), 50);
}

#[test]
fn socle_is_the_all_x_factor() {
    let p = pr(7, 2);
    for a in 0..48 {
        let chi = ICharacter::new(&p, a, 5);
        let jh = jh_of_induced(&p, &chi);
        let soc = socle_of_induced(&p, &chi);
        if chi.is_s_fixed() {
            assert_eq!(soc.len(), 2);
            continue;
        }
        let bottom = jh.factors.iter().find(|x| x.j.is_empty()).unwrap();
        assert_eq!(bottom.lambda, vec![Sym::X, Sym::X]);
        assert_eq!(soc, vec![bottom.weight.clone()]);
        assert_eq!(u_contents(&p, bottom, &chi).unwrap(), vec![bottom.clone()]);
        if let Some(top) = jh.factors.iter().find(|x| x.j == SubsetS::full(2)) {
            assert_eq!(u_contents(&p, top, &chi).unwrap(), jh.factors);
        }
    }
}

#[test]
fn u_contents_rejects_foreign_factors() {
    let p = pr(5, 2);
    let chi = ICharacter::new(&p, 7, 0);
    let other = jh_of_induced(&p, &ICharacter::new(&p, 13, 0)).factors[0].clone();
    assert!(matches!(u_contents(&p, &other, &chi), Err(Error::Domain(_))));
}

#[test]
fn degenerate_characters_report_dropped_tuples() {
    let p = pr(5, 2);
    let chi = conjugate_char(&chi_of_weight(&p, &Weight::new(&p, vec![0, 2], 0).unwrap()));
    let jh = jh_of_induced(&p, &chi);
    assert!(!jh.dropped.is_empty());
    assert_eq!(jh.factors.len() + jh.dropped.len(), 4);
}

#[test]
fn locate_in_ps_finds_the_socle() {
    let p = pr(7, 2);
    let s = Weight::new(&p, vec![2, 1], 3).unwrap();
    let hit = locate_in_ps(&p, &s, &s).unwrap();
    assert!(hit.j.is_empty());
}

fn params_and_char() -> impl Strategy<Value = (Params, ICharacter)> {
    prop_oneof![Just((5u32, 1usize)), Just((5, 2)), Just((7, 2)), Just((5, 3)), Just((7, 3))].prop_flat_map(|(p, f)| {
        let params = pr(p, f);
        let n = params.qm1() as i64;
        (Just(params), 0..n, 0..n).prop_map(|(params, a, b)| (params, ICharacter::new(&params, a, b)))
    })
}

proptest! {
    #[test]
    fn multiplicity_one((p, chi) in params_and_char()) {
        let mut ws: Vec<Weight> = jh_of_induced(&p, &chi).factors.into_iter().map(|x| x.weight).collect();
        let n = ws.len();
        ws.sort();
        ws.dedup();
        prop_assert_eq!(ws.len(), n);
    }

    #[test]
    fn u_contents_are_closed_under_j((p, chi) in params_and_char()) {
        let jh = jh_of_induced(&p, &chi).factors;
        for tau in &jh {
            let u = u_contents(&p, tau, &chi).unwrap();
            prop_assert!(u.contains(tau));
            for x in &u {
                prop_assert!(x.j.is_subset(&tau.j));
            }
        }
    }
}
