use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use serre_core::diamond::{
    diamond_set, find_special_sigma, generic_params, special_tau, verify_combination, xi_and_j, GaloisParams,
};
use serre_core::filtration::{check_f2_tables, check_v1_s1, jh_of_pi_induced};
use serre_core::oracle::module::{character_module, induce};
use serre_core::oracle::verify::{
    counts_of, counts_to_string, verify_calcul_h, verify_ej_chain, verify_e_two_char, verify_f2_sub_rep,
    verify_ind_ej, verify_s1_f2, verify_s1_special, verify_two_char_w_omega, verify_uplus, verify_w_omega,
    verify_witt, EjInduced, Term,
};
use serre_core::oracle::{jh_multiset, FqElem, GroupContext};
use serre_core::principal_series::jh_of_induced;
use serre_core::report::CheckRecord;
use serre_core::tuples::SubsetS;
use serre_core::weight::{chi_of_weight, conjugate_char, ICharacter, Weight};
use serre_core::{Error, Params, Result};

use crate::{Case, RunConfig, Suite};

fn list<T: Copy>(given: Option<T>, default: &[T]) -> Vec<T> {
    given.map(|x| vec![x]).unwrap_or_else(|| default.to_vec())
}

fn error_record(label: &str, e: &Error) -> CheckRecord {
    CheckRecord::new("no error", label, "a result", e, false)
}

/// Runs `f` on every item in parallel; domain errors skip the item, other errors fail it.
fn sweep<T: Sync>(items: &[T], label: impl Fn(&T) -> String + Sync, f: impl Fn(&T) -> Result<Vec<CheckRecord>> + Sync) -> Vec<CheckRecord> {
    items
        .par_iter()
        .map(|x| match f(x) {
            Ok(v) => v,
            Err(Error::Domain(_)) => Vec::new(),
            Err(e) => vec![error_record(&label(x), &e)],
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

fn default_digits(f: usize) -> Vec<Vec<u32>> {
    match f {
        1 => vec![vec![2], vec![1], vec![3]],
        2 => vec![vec![2, 1], vec![1, 3], vec![3, 0], vec![3, 2]],
        _ => {
            let mut a = vec![1; f];
            a[0] = 2;
            let mut b = vec![2; f];
            b[0] = 1;
            vec![a, b]
        }
    }
}

/// Weights `σ` whose characters `χ_σ` feed the oracle suites.
fn weights(cfg: &RunConfig, params: &Params) -> Result<Vec<Weight>> {
    match cfg.digits()? {
        Some(r) => {
            let r: Vec<u32> =
                r.iter().map(|&x| u32::try_from(x).map_err(|_| crate::usage("negative digit"))).collect::<Result<_>>()?;
            Ok(vec![Weight::new(params, r, cfg.twist as i64)?])
        }
        None => default_digits(params.f())
            .into_iter()
            .filter(|r| r.iter().all(|&x| x < params.p()))
            .map(|r| Weight::new(params, r, cfg.twist as i64))
            .collect(),
    }
}

fn chars(cfg: &RunConfig, params: &Params) -> Result<Vec<ICharacter>> {
    Ok(weights(cfg, params)?.iter().map(|w| chi_of_weight(params, w)).collect())
}

fn contexts(cfg: &RunConfig, ps: &[u32], fs: &[usize]) -> Result<Vec<Arc<GroupContext>>> {
    let mut out = Vec::new();
    for &p in &list(cfg.p, ps) {
        for &f in &list(cfg.f, fs) {
            out.push(GroupContext::new(Params::new(p, f)?)?);
        }
    }
    Ok(out)
}

fn jh_suite(cfg: &RunConfig) -> Result<Vec<CheckRecord>> {
    let mut items = Vec::new();
    for ctx in contexts(cfg, &[5], &[1, 2])? {
        let params = *ctx.params();
        let n = params.qm1() as i64;
        let mut cs: Vec<ICharacter> = (0..n).map(|a| ICharacter::new(&params, a, 0)).collect();
        cs.extend((1..n.min(8)).map(|a| ICharacter::new(&params, a, a)));
        let mut rng = StdRng::seed_from_u64(cfg.seed ^ (params.q() << 8));
        cs.extend((0..5).map(|_| ICharacter::new(&params, rng.random_range(0..n), rng.random_range(0..n))));
        items.extend(cs.into_iter().map(|c| (ctx.clone(), c)));
    }
    Ok(sweep(
        &items,
        |(ctx, c)| format!("p={} f={} χ={c}", ctx.params().p(), ctx.params().f()),
        |(ctx, c)| {
            let params = *ctx.params();
            let inst = format!("p={} f={} χ={c}", params.p(), params.f());
            let ind = Arc::new(induce(&character_module(ctx, conjugate_char(c)))?);
            let oracle = jh_multiset(&ind)?;
            let combinatorial = counts_of(jh_of_induced(&params, c).factors.into_iter().map(|x| x.weight));
            let dims: u64 = combinatorial.iter().map(|(w, k)| serre_core::weight::weight_dim(w) * *k as u64).sum();
            Ok(vec![
                CheckRecord::eq("JH of Ind χ^s", inst.clone(), counts_to_string(&combinatorial), counts_to_string(&oracle)),
                CheckRecord::eq("dimensions of the factors add up to q+1", inst, params.q() + 1, dims),
            ])
        },
    ))
}

type EjItem = (Arc<GroupContext>, ICharacter, usize);

fn ej_items(cfg: &RunConfig, fs: &[usize]) -> Result<Vec<EjItem>> {
    let mut items = Vec::new();
    for ctx in contexts(cfg, &[5], fs)? {
        let params = *ctx.params();
        for c in chars(cfg, &params)? {
            for j in 0..params.f() {
                items.push((ctx.clone(), c, j));
            }
        }
    }
    Ok(items)
}

fn ej_label((ctx, c, j): &EjItem) -> String {
    format!("p={} f={} χ={c} j={j}", ctx.params().p(), ctx.params().f())
}

fn random_terms(rng: &mut StdRng, q: u64) -> Vec<Term> {
    (0..3)
        .map(|_| Term {
            big: rng.random_bool(0.5),
            k: rng.random_range(0..q),
            coef: FqElem(rng.random_range(1..q) as u16),
        })
        .collect()
}

fn special_cases(cfg: &RunConfig) -> Result<Vec<(Params, GaloisParams)>> {
    let mut out = Vec::new();
    let pairs: Vec<(u32, usize)> = match (cfg.p, cfg.f) {
        (Some(p), Some(f)) => vec![(p, f)],
        (Some(p), None) => vec![(p, 3), (p, 4)],
        (None, Some(f)) => vec![(5, f), (7, f)],
        (None, None) => vec![(5, 3), (7, 3), (5, 4)],
    };
    for (p, f) in pairs {
        let params = Params::new(p, f)?;
        let reducible = match cfg.case {
            Some(c) => c == Case::Reducible,
            None => f % 2 == 0,
        };
        let rhos = match cfg.digits()? {
            Some(r) => vec![GaloisParams::new(reducible, r, cfg.twist)],
            None => generic_params(&params, reducible),
        };
        out.extend(rhos.into_iter().map(|r| (params, r)));
    }
    Ok(out)
}

fn special_suite(cfg: &RunConfig) -> Result<Vec<CheckRecord>> {
    let items = special_cases(cfg)?;
    Ok(sweep(
        &items,
        |(params, rho)| format!("p={} {rho}", params.p()),
        |(params, rho)| {
            let f = params.f();
            let inst = format!("p={} {rho}", params.p());
            let sigma = find_special_sigma(params, rho)?;
            let mut out = vec![CheckRecord::new("special σ exists", inst.clone(), "found", &sigma.weight, true)];
            for j in 0..f {
                let label = format!("{inst} σ={} j={j}", sigma.weight);
                match special_tau(params, rho, &sigma, j)? {
                    None => out.push(CheckRecord::new("τ_j lies in D_0,σ", label, "present", "absent", false)),
                    Some(tau) => {
                        let xi = xi_and_j(params, rho, &tau)?;
                        let mut want = SubsetS::full(f);
                        want.remove(params.idx(j as i64 - 2));
                        out.push(CheckRecord::eq("J(ξ) = S minus {j-2}", format!("{label} τ={}", tau.weight), want, xi.j_xi));
                    }
                }
            }
            Ok(out)
        },
    ))
}

fn s1s2_suite(cfg: &RunConfig) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    let special: Vec<(Params, GaloisParams)> = if cfg.p.is_some() || cfg.f.is_some() || cfg.digits()?.is_some() {
        special_cases(cfg)?.into_iter().filter(|(params, _)| params.f() != 2).collect()
    } else {
        vec![
            (Params::new(5, 3)?, GaloisParams::new(false, vec![1, 1, 1], 0)),
            (Params::new(7, 3)?, GaloisParams::new(false, vec![2, 1, 2], 0)),
            (Params::new(5, 4)?, GaloisParams::new(true, vec![1, 2, 1, 2], 0)),
        ]
    };
    out.extend(sweep(
        &special,
        |(params, rho)| format!("p={} {rho}", params.p()),
        |(params, rho)| {
            let ctx = GroupContext::new(*params)?;
            let sigma = find_special_sigma(params, rho)?;
            let mut recs = Vec::new();
            for j in 0..params.f() {
                if let Some(tau) = special_tau(params, rho, &sigma, j)? {
                    recs.extend(verify_s1_special(&ctx, &sigma.weight, &tau.weight, j)?);
                }
            }
            Ok(recs)
        },
    ));
    let f2 = match (cfg.p, cfg.f) {
        (_, Some(f)) if f != 2 => Vec::new(),
        (p, _) => {
            let params = Params::new(p.unwrap_or(7), 2)?;
            match cfg.digits()? {
                Some(r) => vec![(params, GaloisParams::new(false, r, cfg.twist))],
                None => generic_params(&params, false).into_iter().map(|r| (params, r)).collect(),
            }
        }
    };
    out.extend(sweep(
        &f2,
        |(params, rho)| format!("p={} {rho}", params.p()),
        |(params, rho)| {
            let ctx = GroupContext::new(*params)?;
            let mut recs = verify_s1_f2(&ctx, rho)?;
            match verify_f2_sub_rep(&ctx, rho) {
                Ok(v) => recs.extend(v),
                Err(Error::Domain(_)) => {}
                Err(e) => return Err(e),
            }
            Ok(recs)
        },
    ));
    Ok(out)
}

fn rho_items(cfg: &RunConfig, ps: &[u32], fs: &[usize]) -> Result<Vec<(Params, GaloisParams)>> {
    let mut out = Vec::new();
    for &p in &list(cfg.p, ps) {
        for &f in &list(cfg.f, fs) {
            let params = Params::new(p, f)?;
            out.extend(cfg.rhos(&params)?.into_iter().map(|r| (params, r)));
        }
    }
    Ok(out)
}

pub fn run(suite: Suite, cfg: &RunConfig) -> Result<Vec<CheckRecord>> {
    match suite {
        Suite::Jh => jh_suite(cfg),
        Suite::Witt => Ok(sweep(&ej_items(cfg, &[2])?, ej_label, |(ctx, c, j)| {
            Ok(verify_witt(&EjInduced::new(ctx, *c, *j)?))
        })),
        Suite::Uplus => Ok(sweep(&ej_items(cfg, &[2])?, ej_label, |(ctx, c, j)| {
            let w = EjInduced::new(ctx, *c, *j)?;
            Ok((0..ctx.params().q()).flat_map(|k| verify_uplus(&w, k)).collect())
        })),
        Suite::CalculH => {
            let items: Vec<(usize, EjItem)> = ej_items(cfg, &[2])?.into_iter().enumerate().collect();
            Ok(sweep(&items, |(_, x)| ej_label(x), |(n, (ctx, c, j))| {
                let w = EjInduced::new(ctx, *c, *j)?;
                let mut rng = StdRng::seed_from_u64(cfg.seed.wrapping_add(*n as u64));
                Ok((0..5).flat_map(|_| verify_calcul_h(&w, &random_terms(&mut rng, ctx.params().q()))).collect())
            }))
        }
        Suite::Indej => Ok(sweep(&ej_items(cfg, &[2])?, ej_label, |(ctx, c, j)| {
            let mut out = verify_ind_ej(ctx, *c, *j)?;
            for s in 1..ctx.params().p() {
                out.extend(verify_ej_chain(ctx, *c, *j, s)?);
            }
            Ok(out)
        })),
        Suite::Womega => {
            let mut out = sweep(&ej_items(cfg, &[1, 2])?, ej_label, |(ctx, c, j)| {
                let w = EjInduced::new(ctx, *c, *j)?;
                let mut recs = Vec::new();
                for omega in jh_of_pi_induced(ctx.params(), &w.psi()) {
                    recs.extend(verify_w_omega(&w, &omega)?);
                }
                Ok(recs)
            });
            let mut two = Vec::new();
            for ctx in contexts(cfg, &[5], &[2])? {
                if ctx.params().f() < 2 {
                    continue;
                }
                for w in weights(cfg, ctx.params())? {
                    for j in 0..ctx.params().f() {
                        two.push((ctx.clone(), w.clone(), j));
                    }
                }
            }
            out.extend(sweep(
                &two,
                |(ctx, w, j)| format!("p={} f={} σ={w} j={j}", ctx.params().p(), ctx.params().f()),
                |(ctx, w, j)| {
                    let params = *ctx.params();
                    let tau = serre_core::filtration::plus_partner(&params, w, *j)
                        .ok_or_else(|| Error::Domain("no partner".into()))?;
                    let s1 = w.r[params.idx(*j as i64 - 1)] + 1;
                    let mut recs =
                        verify_e_two_char(ctx, chi_of_weight(&params, w), chi_of_weight(&params, &tau), *j, s1)?;
                    recs.extend(verify_two_char_w_omega(ctx, w, *j)?);
                    Ok(recs)
                },
            ));
            Ok(out)
        }
        Suite::Combination => {
            let mut items = Vec::new();
            for (params, rho) in rho_items(cfg, &[5, 7], &[2, 3])? {
                for sigma in diamond_set(&params, &rho)? {
                    for j in 0..params.f() {
                        items.push((params, rho.clone(), sigma.clone(), j));
                    }
                }
            }
            Ok(sweep(
                &items,
                |(params, rho, s, j)| format!("p={} {rho} σ={} j={j}", params.p(), s.weight),
                |(params, rho, s, j)| verify_combination(params, rho, s, *j),
            ))
        }
        Suite::F2 => {
            let params = Params::new(cfg.p.unwrap_or(7), 2)?;
            if cfg.f.is_some_and(|f| f != 2) {
                return Err(crate::usage("the f2 suite needs f = 2"));
            }
            let rhos = match cfg.digits()? {
                Some(r) => vec![GaloisParams::new(false, r, cfg.twist)],
                None => generic_params(&params, false),
            };
            Ok(sweep(&rhos, |rho| format!("p={} {rho}", params.p()), |rho| {
                let mut out = check_f2_tables(&params, rho)?;
                out.extend(check_v1_s1(&params, rho)?);
                Ok(out)
            }))
        }
        Suite::Special => special_suite(cfg),
        Suite::S1s2 => s1s2_suite(cfg),
    }
}
