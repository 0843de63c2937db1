use proptest::prelude::*;

use serre_core::diamond::{
    couples_in_block, d0_all, d0_factors, delta_consistent, delta_of_tau, diamond_set, diamond_weights,
    ell_decomposition, find_special_sigma, generic_params, is_generic, lifts, special_tau, xi_and_j, GaloisParams,
};
use serre_core::tuples::{delta_irr, delta_red, Sym::*};
use serre_core::weight::{sigma_s, Weight};
use serre_core::{Error, Params};

fn pr(p: u32, f: usize) -> Params {
    Params::new(p, f).unwrap()
}

fn sweep() -> Vec<(Params, GaloisParams)> {
    let mut out = Vec::new();
    for p in [5u32, 7] {
        for f in 1..=3 {
            let params = pr(p, f);
            for red in [true, false] {
                out.extend(generic_params(&params, red).into_iter().map(|r| (params, r)));
            }
        }
    }
    out
}

#[test]
fn genericity_examples() {
    assert!(is_generic(&pr(7, 2), &GaloisParams::new(false, vec![2, 1], 0)));
    assert!(!is_generic(&pr(7, 2), &GaloisParams::new(true, vec![0, 0], 0)));
    assert!(!is_generic(&pr(7, 2), &GaloisParams::new(true, vec![4, 4], 0)));
    assert!(is_generic(&pr(5, 3), &GaloisParams::new(false, vec![1, 0, 0], 0)));
    let bad = GaloisParams::new(true, vec![0, 0], 0);
    assert!(matches!(diamond_set(&pr(7, 2), &bad), Err(Error::Domain(_))));
}

#[test]
fn f1_diamond_set() {
    let p = pr(5, 1);
    let got = diamond_weights(&p, &GaloisParams::new(false, vec![2], 0)).unwrap();
    assert_eq!(got, vec![Weight::new(&p, vec![2], 0).unwrap(), Weight::new(&p, vec![2], 2).unwrap()]);
}

#[test]
fn f2_table_weights() {
    let p = pr(7, 2);
    let got = diamond_weights(&p, &GaloisParams::new(false, vec![2, 1], 0)).unwrap();
    let w = |r: [u32; 2], t| Weight::new(&p, r.to_vec(), t).unwrap();
    let mut want = vec![w([2, 1], 0), w([1, 4], 14), w([4, 3], 16), w([3, 2], 44)];
    let mut got = got;
    want.sort();
    got.sort();
    assert_eq!(got, want);
}

#[test]
fn f2_first_block() {
    let p = pr(7, 2);
    let rho = GaloisParams::new(false, vec![2, 1], 0);
    let sigma = diamond_set(&p, &rho).unwrap().into_iter().find(|d| d.weight.r == vec![2, 1]).unwrap();
    let mut digits: Vec<Vec<u32>> = d0_factors(&p, &rho, &sigma).unwrap().into_iter().map(|x| x.weight.r).collect();
    digits.sort();
    assert_eq!(digits, vec![vec![2, 1], vec![2, 5], vec![3, 0], vec![3, 4]]);
}

#[test]
fn lifting_rule() {
    assert!(lifts(&[X, X]));
    assert!(!lifts(&[XMinus1, X]));
    assert!(lifts(&[P1MX, P1MX]));
}

#[test]
fn sizes_and_multiplicity_one() {
    for (p, rho) in sweep() {
        let set = diamond_set(&p, &rho).unwrap();
        assert_eq!(set.len(), 1 << p.f(), "{rho}");
        let mut ws: Vec<Weight> = d0_all(&p, &rho).unwrap().into_iter().map(|x| x.weight).collect();
        let n = ws.len();
        ws.sort();
        ws.dedup();
        assert_eq!(ws.len(), n, "{rho}");
        for d in &set {
            assert_eq!(d.ell, d.s.len());
        }
    }
}

/// `δ(τ)` against a search through every block of `D_0(ρ)` for `τ^[s]`.
#[test]
fn delta_matches_brute_force() {
    let mut lifting = 0;
    for (p, rho) in sweep() {
        let set = diamond_set(&p, &rho).unwrap();
        for d in &set {
            for tau in d0_factors(&p, &rho, d).unwrap().into_iter().filter(|x| x.lifts) {
                lifting += 1;
                let ts = sigma_s(&p, &tau.weight);
                let hits: Vec<&Weight> = set
                    .iter()
                    .filter(|b| d0_factors(&p, &rho, b).unwrap().iter().any(|x| x.weight == ts))
                    .map(|b| &b.weight)
                    .collect();
                let delta = delta_of_tau(&p, &rho, &tau).unwrap();
                assert_eq!(hits, vec![&delta.weight], "p={} {rho} τ={}", p.p(), tau.weight);
                assert!(delta_consistent(&p, &rho, &tau).unwrap());
            }
        }
    }
    assert!(lifting > 1000);
}

#[test]
fn delta_on_diamond_weights_is_the_subset_map() {
    for (p, rho) in sweep() {
        let f = p.f();
        for d in diamond_set(&p, &rho).unwrap() {
            let own = d0_factors(&p, &rho, &d).unwrap().into_iter().find(|x| x.weight == d.weight).unwrap();
            let want = if rho.reducible { delta_red(f, d.s) } else { delta_irr(f, d.s) };
            let got = delta_of_tau(&p, &rho, &own).unwrap();
            assert_eq!(got.s, want, "{rho} σ={}", d.weight);
        }
    }
}

#[test]
fn ell_decomposition_is_binomial() {
    let p = pr(7, 3);
    let rho = GaloisParams::new(true, vec![1, 2, 3], 0);
    let dec = ell_decomposition(&p, &rho).unwrap();
    let sizes: Vec<usize> = (0..=3).map(|l| dec.get(&l).map_or(0, Vec::len)).collect();
    assert_eq!(sizes, vec![1, 3, 3, 1]);
    assert!(ell_decomposition(&p, &GaloisParams::new(false, vec![1, 2, 3], 0)).is_err());
}

#[test]
fn special_weights() {
    let p = pr(5, 3);
    let rho = GaloisParams::new(false, vec![1, 1, 1], 0);
    let sigma = find_special_sigma(&p, &rho).unwrap();
    assert_eq!(sigma.lambda, vec![P1MX, XPlus1, P2MX]);
    for j in 0..3 {
        let tau = special_tau(&p, &rho, &sigma, j).unwrap().unwrap();
        let xi = xi_and_j(&p, &rho, &tau).unwrap();
        assert!(xi.consistent());
        assert!(!xi.j_xi.contains(p.idx(j as i64 - 2)));
        assert_eq!(xi.j_xi.len(), 2);
    }
    let p4 = pr(5, 4);
    let red = GaloisParams::new(true, vec![1, 2, 1, 2], 0);
    assert_eq!(find_special_sigma(&p4, &red).unwrap().lambda, vec![XPlus1, P2MX, XPlus1, P2MX]);
    assert!(find_special_sigma(&pr(5, 2), &GaloisParams::new(false, vec![1, 1], 0)).is_err());
}

#[test]
fn couples_exist_somewhere() {
    let p = pr(7, 3);
    let mut found = 0;
    for rho in generic_params(&p, false).into_iter().take(40) {
        for d in diamond_set(&p, &rho).unwrap() {
            for j in 0..3 {
                found += couples_in_block(&p, &rho, &d, j).unwrap().len();
            }
        }
    }
    assert!(found > 0);
}

proptest! {
    #[test]
    fn twisting_rho_twists_everything(k in 0usize..200, t in 0u64..48) {
        let p = pr(7, 2);
        let all = generic_params(&p, k % 2 == 0);
        let rho = all[k % all.len()].clone();
        let mut tw = rho.clone();
        tw.twist = t;
        let a = diamond_weights(&p, &rho).unwrap();
        let b = diamond_weights(&p, &tw).unwrap();
        for (x, y) in a.iter().zip(&b) {
            prop_assert_eq!(&x.r, &y.r);
            prop_assert_eq!(y.twist, (x.twist + t) % 48);
        }
    }
}
