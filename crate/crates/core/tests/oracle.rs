use std::sync::Arc;

use proptest::prelude::*;

use serre_core::diamond::GaloisParams;
use serre_core::oracle::module::{character_module, induce, pi_twist, weight_highest_vector, weight_module};
use serre_core::oracle::structure::{h_eigenspaces, hom_space, invariants};
use serre_core::oracle::verify::{counts_of, verify_f2_sub_rep, verify_s1_condition, verify_witt, EjInduced};
use serre_core::oracle::{jh_multiset, socle, socle_series, Field, FqElem, GroupContext, Subgroup};
use serre_core::principal_series::jh_of_induced;
use serre_core::report::failures;
use serre_core::weight::{chi_of_weight, conjugate_char, ICharacter, Weight};
use serre_core::{Error, Params};

fn pr(p: u32, f: usize) -> Params {
    Params::new(p, f).unwrap()
}

fn ctx(p: u32, f: usize) -> Arc<GroupContext> {
    GroupContext::new(pr(p, f)).unwrap()
}

#[test]
fn field_size_limit() {
    assert!(matches!(Field::new(pr(7, 4)), Err(Error::Params(_))));
    assert!(Field::new(pr(5, 4)).is_ok());
}

#[test]
fn field_axioms_small() {
    let fl = Field::new(pr(5, 2)).unwrap();
    let g = fl.generator();
    assert_eq!(fl.pow(g, 24), fl.one());
    assert!((1..24).all(|k| fl.pow(g, k) != fl.one()));
    for a in fl.elements() {
        assert_eq!(fl.add(a, fl.neg(a)), fl.zero());
        if a != fl.zero() {
            assert_eq!(fl.mul(a, fl.inv(a).unwrap()), fl.one());
            assert_eq!(fl.exp(fl.log(a).unwrap() as u64), a);
        }
        assert_eq!(fl.frob(a, 2), a);
        assert_eq!(fl.from_coeffs(&fl.coeffs(a)), a);
    }
}

fn field_and_elem() -> impl Strategy<Value = (Field, FqElem, FqElem)> {
    prop_oneof![Just((5u32, 1usize)), Just((5, 2)), Just((7, 2)), Just((5, 3)), Just((3, 4))].prop_flat_map(|(p, f)| {
        let q = p.pow(f as u32) as u16;
        (0..q, 0..q).prop_map(move |(a, b)| (Field::new(pr(p, f)).unwrap(), FqElem(a), FqElem(b)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn teichmuller_is_multiplicative((fl, a, b) in field_and_elem()) {
        let ta = fl.teichmuller(a);
        prop_assert_eq!(fl.gr_pow(&ta, fl.q() as u64), ta);
        prop_assert_eq!(fl.reduce(&ta), a);
        prop_assert_eq!(fl.gr_mul(&ta, &fl.teichmuller(b)), fl.teichmuller(fl.mul(a, b)));
    }

    #[test]
    fn galois_ring_arithmetic((fl, a, b) in field_and_elem()) {
        let x = fl.gr_add(&fl.lift(a), &fl.p_times(b));
        let y = fl.gr_add(&fl.teichmuller(b), &fl.p_times(a));
        prop_assert_eq!(fl.gr_sub(&fl.gr_add(&x, &y), &y), x);
        prop_assert_eq!(fl.gr_mul(&x, &fl.gr_one()), x);
        prop_assert_eq!(fl.reduce(&fl.gr_mul(&x, &y)), fl.mul(a, b));
        prop_assert_eq!(fl.gr_div_p(&fl.p_times(b)), Some(b));
        if a != fl.zero() {
            let inv = fl.gr_inv(&x).unwrap();
            prop_assert_eq!(fl.gr_mul(&x, &inv), fl.gr_one());
        } else {
            prop_assert!(!fl.gr_is_unit(&x));
        }
    }
}

#[test]
fn coset_decomposition_round_trips() {
    let c = ctx(5, 2);
    let fl = &c.field;
    let gens = c.generators(Subgroup::K);
    assert_eq!(c.coset_reps().len(), fl.q() + 1);
    for g in &gens {
        for idx in 0..c.coset_reps().len() {
            let (to, i) = c.coset_decompose(g, idx).unwrap();
            assert!(c.in_iwahori(&i));
            assert_eq!(c.mul(g, &c.coset_reps()[idx]), c.mul(&c.coset_reps()[to], &i));
        }
    }
    let singular = c.int_mat(1, 1, 1, 1);
    assert!(c.coset_decompose(&singular, 0).is_err());
}

#[test]
fn weight_modules_are_representations() {
    let c = ctx(5, 2);
    let gens = c.generators(Subgroup::K);
    let pairs: Vec<_> = gens.iter().flat_map(|x| gens.iter().map(move |y| (*x, *y))).collect();
    for r in [[0u32, 0], [2, 1], [4, 3]] {
        let s = Weight::new(c.params(), r.to_vec(), 3).unwrap();
        let m = weight_module(&c, &s);
        assert!(m.check_multiplicative(&pairs));
        let inv = invariants(&m, Subgroup::I1);
        assert_eq!(inv.dim(), 1, "{s}");
        assert!(inv.contains(&c.field, &m.unit_vector(weight_highest_vector(&s))));
        let eig = h_eigenspaces(&m, &inv);
        assert_eq!(eig.len(), 1);
        assert_eq!(eig[0].0, chi_of_weight(c.params(), &s));
    }
}

#[test]
fn schur_and_socle_of_a_weight() {
    let c = ctx(5, 2);
    let s = Weight::new(c.params(), vec![2, 1], 0).unwrap();
    let t = Weight::new(c.params(), vec![1, 2], 0).unwrap();
    let ms = weight_module(&c, &s);
    assert_eq!(hom_space(&ms, &ms).unwrap().len(), 1);
    assert!(hom_space(&ms, &weight_module(&c, &t)).unwrap().is_empty());
    let soc = socle(&ms).unwrap();
    assert_eq!(soc.factors, vec![(s, 1)]);
}

#[test]
fn induced_character_matches_the_combinatorics() {
    let c = ctx(5, 2);
    let params = *c.params();
    for chi in [ICharacter::new(&params, 7, 0), ICharacter::new(&params, 13, 2), ICharacter::new(&params, 3, 3)] {
        let ind = Arc::new(induce(&character_module(&c, chi)).unwrap());
        assert_eq!(ind.dim, params.q() as usize + 1);
        let (layers, spaces) = socle_series(&ind).unwrap();
        assert_eq!(spaces.last().unwrap().dim(), ind.dim);
        let total: usize = layers.iter().flatten().map(|(w, k)| k * serre_core::weight::weight_dim(w) as usize).sum();
        assert_eq!(total, ind.dim);
        let want = counts_of(jh_of_induced(&params, &chi).factors.into_iter().map(|x| x.weight));
        assert_eq!(jh_multiset(&ind).unwrap(), want, "χ={chi}");
    }
}

#[test]
fn pi_twist_conjugates_the_character() {
    let c = ctx(5, 2);
    let params = *c.params();
    let chi = ICharacter::new(&params, 7, 0);
    let tw = Arc::new(induce(&pi_twist(&character_module(&c, chi)).unwrap()).unwrap());
    let want = counts_of(jh_of_induced(&params, &conjugate_char(&chi)).factors.into_iter().map(|x| x.weight));
    assert_eq!(jh_multiset(&tw).unwrap(), want);
    assert!(pi_twist(&weight_module(&c, &Weight::new(&params, vec![1, 1], 0).unwrap())).is_err());
}

#[test]
fn witt_identities_small() {
    let c = ctx(5, 1);
    let params = *c.params();
    let w = EjInduced::new(&c, chi_of_weight(&params, &Weight::new(&params, vec![2], 0).unwrap()), 0).unwrap();
    assert_eq!(w.module.dim, 2 * 6);
    let recs = verify_witt(&w);
    assert!(!recs.is_empty());
    assert!(failures(&recs).is_empty(), "{:?}", failures(&recs));
    assert!(EjInduced::new(&c, w.chi, 1).is_err());
}

#[test]
fn s1_fails_on_a_character() {
    let c = ctx(5, 2);
    let m = Arc::new(character_module(&c, ICharacter::new(&c.params().clone(), 7, 0)));
    assert!(!verify_s1_condition(&m, &[FqElem(1)]).unwrap());
}

fn sub_rep(r: [i64; 2]) -> Vec<serre_core::report::CheckRecord> {
    verify_f2_sub_rep(&ctx(7, 2), &GaloisParams::new(false, r.to_vec(), 0)).unwrap()
}

#[test]
fn f2_sub_rep_holds_from_r0_two() {
    let recs = sub_rep([2, 1]);
    assert!(recs.len() > 5);
    assert!(failures(&recs).is_empty(), "{:?}", failures(&recs));
}

/// At `r_0 = 1` the quotient by the `r_0`-th socle layer is larger than claimed, but `χ_3` still
/// does not occur in it.
#[test]
fn f2_sub_rep_at_r0_one() {
    let recs = sub_rep([1, 0]);
    let bad = failures(&recs);
    assert_eq!(bad.len(), 1, "{bad:?}");
    assert!(bad[0].anchor.starts_with("M_2 / soc^{r_0} M_2 ="));
    let absent = recs.iter().find(|r| r.anchor.starts_with("χ_3 does not occur")).unwrap();
    assert!(absent.pass);
}
