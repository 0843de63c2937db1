use proptest::prelude::*;

use serre_core::weight::{
    alpha, char_normal_form, char_times_alpha_power, chi_of_weight, conjugate_char, dual_weight, ext1_dim_i,
    sigma_s, weight_dim, weights_of_char, Ext1, ExtLevel, ICharacter, Weight,
};
use serre_core::{Error, Params};

fn pr(p: u32, f: usize) -> Params {
    Params::new(p, f).unwrap()
}

fn w(params: &Params, r: &[u32], t: i64) -> Weight {
    Weight::new(params, r.to_vec(), t).unwrap()
}

#[test]
fn params_reject_bad_input() {
    assert!(matches!(Params::new(4, 2), Err(Error::Params(_))));
    assert!(Params::new(2, 1).is_err());
    assert!(Params::new(5, 0).is_err());
    let p = pr(7, 2);
    assert_eq!((p.q(), p.qm1()), (49, 48));
    assert_eq!(p.idx(-1), 1);
    assert_eq!(p.digits(39), vec![4, 5]);
}

#[test]
fn weight_constructor_checks_digits() {
    let p = pr(5, 2);
    assert!(Weight::new(&p, vec![5, 0], 0).is_err());
    assert!(Weight::new(&p, vec![1], 0).is_err());
    assert_eq!(w(&p, &[1, 2], -1).twist, 23);
    assert_eq!(Weight::from_signed(&p, &[-1, 2], 0), None);
}

#[test]
fn chi_of_weight_examples() {
    let p = pr(7, 2);
    assert_eq!(chi_of_weight(&p, &w(&p, &[2, 1], 0)), ICharacter { a: 9, b: 0 });
    assert_eq!(chi_of_weight(&p, &w(&p, &[0, 0], 3)), ICharacter { a: 3, b: 3 });
    let p1 = pr(5, 1);
    assert_eq!(chi_of_weight(&p1, &w(&p1, &[2], 2)), ICharacter { a: 0, b: 2 });
}

#[test]
fn conjugate_and_alpha() {
    assert_eq!(conjugate_char(&ICharacter { a: 9, b: 0 }), ICharacter { a: 0, b: 9 });
    assert_eq!(conjugate_char(&ICharacter { a: 3, b: 3 }), ICharacter { a: 3, b: 3 });
    assert_eq!(alpha(&pr(5, 1)), ICharacter { a: 1, b: 3 });
    assert_eq!(alpha(&pr(7, 2)), ICharacter { a: 1, b: 47 });
}

#[test]
fn normal_form_examples() {
    let p = pr(7, 2);
    assert_eq!(char_normal_form(&p, &ICharacter { a: 9, b: 0 }), (vec![2, 1], 0));
    assert_eq!(char_normal_form(&p, &ICharacter { a: 0, b: 9 }), (vec![4, 5], 9));
    assert_eq!(char_normal_form(&p, &ICharacter { a: 3, b: 3 }), (vec![0, 0], 3));
}

#[test]
fn alpha_power_examples() {
    let p = pr(7, 2);
    let chi = chi_of_weight(&p, &w(&p, &[3, 1], 0));
    let got = char_times_alpha_power(&p, &chi, 0, -1);
    assert_eq!(got, ICharacter { a: 9, b: 1 });
    assert_eq!(char_normal_form(&p, &got), (vec![1, 1], 1));
    let chi = chi_of_weight(&p, &w(&p, &[1, 0], 0));
    assert_eq!(char_normal_form(&p, &char_times_alpha_power(&p, &chi, 0, -1)), (vec![5, 6], 1));
    assert_eq!(char_times_alpha_power(&p, &chi, 1, 0), chi);
}

#[test]
fn weights_of_char_examples() {
    let p1 = pr(5, 1);
    let mut ws = weights_of_char(&p1, &ICharacter { a: 3, b: 3 });
    ws.sort();
    assert_eq!(ws, vec![w(&p1, &[0], 3), w(&p1, &[4], 3)]);
    let p = pr(7, 2);
    assert_eq!(weights_of_char(&p, &ICharacter { a: 9, b: 0 }), vec![w(&p, &[2, 1], 0)]);
}

#[test]
fn sigma_s_and_dim_examples() {
    let p = pr(7, 2);
    assert_eq!(sigma_s(&p, &w(&p, &[2, 1], 0)), w(&p, &[4, 5], 9));
    assert_eq!(sigma_s(&p, &w(&p, &[0, 0], 5)), w(&p, &[6, 6], 5));
    assert_eq!(weight_dim(&w(&p, &[2, 1], 0)), 6);
    assert_eq!(weight_dim(&w(&p, &[0, 0], 0)), 1);
    assert_eq!(weight_dim(&w(&p, &[6, 6], 0)), 49);
}

#[test]
fn ext1_examples() {
    let p = pr(7, 2);
    let chi = chi_of_weight(&p, &w(&p, &[2, 1], 0));
    assert_eq!(ext1_dim_i(&p, &chi, &chi, ExtLevel::ModZ1).dim, 0);
    let down = char_times_alpha_power(&p, &chi, 1, -1);
    assert_eq!(ext1_dim_i(&p, &down, &chi, ExtLevel::ModK1), Ext1 { dim: 1, witness: Some((-1, 1)) });
    let up = char_times_alpha_power(&p, &chi, 0, 1);
    assert_eq!(ext1_dim_i(&p, &up, &chi, ExtLevel::ModK1).dim, 0);
    assert_eq!(ext1_dim_i(&p, &up, &chi, ExtLevel::ModZ1), Ext1 { dim: 1, witness: Some((1, 0)) });
}

fn small_params() -> impl Strategy<Value = Params> {
    prop_oneof![Just((3u32, 1usize)), Just((5, 1)), Just((5, 2)), Just((7, 2)), Just((5, 3)), Just((3, 4))]
        .prop_map(|(p, f)| Params::new(p, f).unwrap())
}

fn params_and_char() -> impl Strategy<Value = (Params, ICharacter)> {
    small_params().prop_flat_map(|p| {
        let n = p.qm1() as i64;
        (Just(p), 0..n, 0..n).prop_map(|(p, a, b)| (p, ICharacter::new(&p, a, b)))
    })
}

fn params_and_weight() -> impl Strategy<Value = (Params, Weight)> {
    small_params().prop_flat_map(|p| {
        let f = p.f();
        (Just(p), proptest::collection::vec(0..p.p(), f), 0..p.qm1() as i64)
            .prop_map(|(p, r, t)| (p, Weight::new(&p, r, t).unwrap()))
    })
}

proptest! {
    #[test]
    fn weights_of_char_have_that_character((p, chi) in params_and_char()) {
        for s in weights_of_char(&p, &chi) {
            prop_assert_eq!(chi_of_weight(&p, &s), chi);
        }
    }

    #[test]
    fn sigma_s_commutes_with_conjugation((p, s) in params_and_weight()) {
        prop_assert_eq!(chi_of_weight(&p, &sigma_s(&p, &s)), conjugate_char(&chi_of_weight(&p, &s)));
        prop_assert_eq!(sigma_s(&p, &sigma_s(&p, &s)).r, s.r.clone());
    }

    #[test]
    fn dual_is_an_involution((p, s) in params_and_weight()) {
        prop_assert_eq!(dual_weight(&p, &dual_weight(&p, &s)), s);
    }

    #[test]
    fn normal_form_recomposes((p, chi) in params_and_char()) {
        let (s, t) = char_normal_form(&p, &chi);
        prop_assert!(s.iter().all(|&x| x < p.p()));
        prop_assert!(s.iter().any(|&x| x != p.p() - 1));
        let sum = p.weighted_sum(&s.iter().map(|&x| x as i64).collect::<Vec<_>>());
        prop_assert_eq!(ICharacter::new(&p, sum + t as i64, t as i64), chi);
    }

    #[test]
    fn alpha_power_round_trip((p, chi) in params_and_char(), j in 0usize..4, k in -9i64..9) {
        let j = j % p.f();
        let down = char_times_alpha_power(&p, &chi, j, k);
        prop_assert_eq!(char_times_alpha_power(&p, &down, j, -k), chi);
    }

    #[test]
    fn ext1_mod_k1_below_mod_z1((p, a) in params_and_char(), b in 0i64..1000, c in 0i64..1000, near in any::<bool>(), j in 0usize..4) {
        let j = j % p.f();
        let other = if near { char_times_alpha_power(&p, &a, j, -1) } else { ICharacter::new(&p, b, c) };
        let k1 = ext1_dim_i(&p, &other, &a, ExtLevel::ModK1);
        let z1 = ext1_dim_i(&p, &other, &a, ExtLevel::ModZ1);
        prop_assert!(k1.dim <= z1.dim);
        if k1.dim == 1 && z1.witness.is_some_and(|(s, _)| s < 0) {
            prop_assert_eq!(k1.witness, z1.witness);
        }
    }
}
