//! The ten acceptance criteria, one PASS/FAIL line each.

use std::sync::Arc;
use std::time::{Duration, Instant};

use serre_core::diamond::{
    d0_all, d0_factors, delta_of_tau, diamond_set, find_special_sigma, generic_params, special_tau,
    verify_combination, xi_and_j, GaloisParams,
};
use serre_core::filtration::{check_f2_tables, jh_of_pi_induced, plus_partner};
use serre_core::oracle::module::{character_module, induce};
use serre_core::oracle::verify::{
    counts_of, counts_to_string, verify_e_two_char, verify_ej_chain, verify_s1_f2, verify_s1_special,
    verify_uplus, verify_w_omega, verify_witt, EjInduced,
};
use serre_core::oracle::{jh_multiset, GroupContext};
use serre_core::principal_series::jh_of_induced;
use serre_core::report::{failures, CheckRecord};
use serre_core::tuples::{s_of_mu, SubsetS, Sym};
use serre_core::weight::{chi_of_weight, conjugate_char, weight_dim, ICharacter, Weight};
use serre_core::Params;

type Outcome = Result<String, String>;

fn records_outcome(recs: &[CheckRecord], elapsed: Duration, limit: Option<Duration>) -> Outcome {
    if recs.is_empty() {
        return Err("no checks ran".into());
    }
    let bad = failures(recs);
    if let Some(r) = bad.first() {
        return Err(format!(
            "{}/{} checks failed; first: {} | {} | expected {} got {}",
            bad.len(),
            recs.len(),
            r.anchor,
            r.instance,
            r.expected,
            r.got
        ));
    }
    if let Some(l) = limit {
        if elapsed > l {
            return Err(format!("{} checks passed but took {elapsed:.1?} (limit {l:?})", recs.len()));
        }
    }
    Ok(format!("{} checks in {elapsed:.1?}", recs.len()))
}

fn params(p: u32, f: usize) -> Params {
    Params::new(p, f).unwrap()
}

fn ctx(p: u32, f: usize) -> Arc<GroupContext> {
    GroupContext::new(params(p, f)).unwrap()
}

fn all_digits(f: usize, range: std::ops::RangeInclusive<u32>) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = vec![vec![]];
    for _ in 0..f {
        out = out
            .into_iter()
            .flat_map(|v| {
                range.clone().map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

fn jh_cross_check() -> Outcome {
    let start = Instant::now();
    let mut recs = Vec::new();
    let mut fixed = 0;
    for f in [1, 2] {
        let pr = params(5, f);
        let c = ctx(5, f);
        let n = pr.qm1() as i64;
        let mut chars: Vec<ICharacter> = (0..n).map(|a| ICharacter::new(&pr, a, 0)).collect();
        chars.extend((0..4).map(|a| ICharacter::new(&pr, a, a)));
        chars.extend([ICharacter::new(&pr, 5, 2), ICharacter::new(&pr, n - 1, 3)]);
        for chi in chars {
            fixed += chi.is_s_fixed() as usize;
            let ind = Arc::new(induce(&character_module(&c, conjugate_char(&chi))).unwrap());
            let oracle = jh_multiset(&ind).unwrap();
            let comb = counts_of(jh_of_induced(&pr, &chi).factors.into_iter().map(|x| x.weight));
            recs.push(CheckRecord::eq(
                "JH of Ind χ^s",
                format!("f={f} χ={chi}"),
                counts_to_string(&comb),
                counts_to_string(&oracle),
            ));
        }
    }
    if recs.len() < 20 || fixed == 0 {
        return Err(format!("sweep too small: {} characters, {fixed} with χ = χ^s", recs.len()));
    }
    records_outcome(&recs, start.elapsed(), Some(Duration::from_secs(120)))
}

fn dimension_identity() -> Outcome {
    let start = Instant::now();
    let mut recs = Vec::new();
    for p in [5u32, 7] {
        for f in 1..=3 {
            let pr = params(p, f);
            for s in all_digits(f, 1..=p - 2) {
                for t in [0i64, 1, 7] {
                    let chi = ICharacter::new(&pr, pr.weighted_sum(&s.iter().map(|&x| x as i64).collect::<Vec<_>>()) + t, t);
                    let jh = jh_of_induced(&pr, &chi);
                    let total: u64 = jh.factors.iter().map(|x| weight_dim(&x.weight)).sum();
                    recs.push(CheckRecord::eq("Σ dim = q+1", format!("p={p} f={f} s={s:?} t={t}"), pr.q() + 1, total));
                    recs.push(CheckRecord::eq("2^f factors", format!("p={p} f={f} s={s:?} t={t}"), 1usize << f, jh.factors.len()));
                }
            }
        }
    }
    records_outcome(&recs, start.elapsed(), Some(Duration::from_secs(1)))
}

fn diamond_counts() -> Outcome {
    let start = Instant::now();
    let mut recs = Vec::new();
    for p in [5u32, 7] {
        for f in 1..=3 {
            let pr = params(p, f);
            for red in [true, false] {
                for rho in generic_params(&pr, red) {
                    let inst = format!("p={p} {rho}");
                    recs.push(CheckRecord::eq("|D(ρ)| = 2^f", inst.clone(), 1usize << f, diamond_set(&pr, &rho).unwrap().len()));
                    let mut ws: Vec<Weight> = d0_all(&pr, &rho).unwrap().into_iter().map(|x| x.weight).collect();
                    let n = ws.len();
                    ws.sort();
                    ws.dedup();
                    recs.push(CheckRecord::eq("D_0 multiplicity one", inst, n, ws.len()));
                }
            }
        }
    }
    records_outcome(&recs, start.elapsed(), Some(Duration::from_secs(30)))
}

fn f2_table() -> Outcome {
    let start = Instant::now();
    let pr = params(7, 2);
    let rho = GaloisParams::new(false, vec![2, 1], 0);
    let mut recs = check_f2_tables(&pr, &rho).unwrap();
    let w = |r: [u32; 2], t: i64| Weight::new(&pr, r.to_vec(), t).unwrap();
    let sigmas = [w([2, 1], 0), w([1, 4], 14), w([4, 3], 16), w([3, 2], 44)];
    let s_blocks = [[[3, 0], [3, 4]], [[0, 1], [4, 5]], [[1, 2], [5, 2]], [[2, 3], [2, 3]]];
    let tails = [[2, 5], [5, 0], [0, 3], [3, 2]];
    let set = diamond_set(&pr, &rho).unwrap();
    for (k, sigma) in sigmas.iter().enumerate() {
        let inst = format!("σ{}={sigma}", k + 1);
        let Some(d) = set.iter().find(|d| d.weight == *sigma) else {
            recs.push(CheckRecord::new("σ_i in D(ρ)", inst, "present", "absent", false));
            continue;
        };
        let factors = d0_factors(&pr, &rho, d).unwrap();
        let layer = |n: usize| {
            let mut v: Vec<Vec<u32>> = factors.iter().filter(|x| s_of_mu(&x.mu).len() == n).map(|x| x.weight.r.clone()).collect();
            v.sort();
            format!("{v:?}")
        };
        let mut sb: Vec<Vec<u32>> = s_blocks[k].iter().map(|x| x.to_vec()).collect();
        sb.sort();
        recs.push(CheckRecord::eq("S_i", inst.clone(), format!("{sb:?}"), layer(1)));
        recs.push(CheckRecord::eq("tail", inst.clone(), format!("{:?}", vec![tails[k].to_vec()]), layer(2)));
        let own = factors.iter().find(|x| x.weight == *sigma).unwrap();
        let delta = delta_of_tau(&pr, &rho, own).unwrap().weight;
        recs.push(CheckRecord::eq("δ(σ_i) = σ_{i+1}", inst, sigmas[(k + 1) % 4].clone(), delta));
    }
    records_outcome(&recs, start.elapsed(), None)
}

fn ej_pairs(c: &Arc<GroupContext>) -> Vec<(ICharacter, usize)> {
    let pr = *c.params();
    let mut out = Vec::new();
    for r in [[2u32, 1], [1, 3], [3, 0], [3, 2]] {
        let chi = chi_of_weight(&pr, &Weight::new(&pr, r.to_vec(), 0).unwrap());
        for j in 0..2 {
            out.push((chi, j));
        }
    }
    out
}

fn witt_identities() -> Outcome {
    let start = Instant::now();
    let c = ctx(5, 2);
    let mut recs = Vec::new();
    for (chi, j) in ej_pairs(&c) {
        let w = EjInduced::new(&c, chi, j).unwrap();
        recs.push(CheckRecord::eq("dim W = 52", format!("χ={chi} j={j}"), 52, w.module.dim));
        recs.extend(verify_witt(&w));
    }
    records_outcome(&recs, start.elapsed(), Some(Duration::from_secs(60)))
}

fn uplus_action() -> Outcome {
    let start = Instant::now();
    let c = ctx(5, 2);
    let mut recs = Vec::new();
    for (chi, j) in ej_pairs(&c) {
        let w = EjInduced::new(&c, chi, j).unwrap();
        for k in 0..c.params().q() {
            recs.extend(verify_uplus(&w, k));
        }
    }
    records_outcome(&recs, start.elapsed(), None)
}

fn combination() -> Outcome {
    let start = Instant::now();
    let mut recs = Vec::new();
    for p in [5u32, 7] {
        for f in [2, 3] {
            let pr = params(p, f);
            for red in [true, false] {
                for rho in generic_params(&pr, red) {
                    for sigma in diamond_set(&pr, &rho).unwrap() {
                        for j in 0..f {
                            recs.extend(verify_combination(&pr, &rho, &sigma, j).unwrap());
                        }
                    }
                }
            }
        }
    }
    records_outcome(&recs, start.elapsed(), Some(Duration::from_secs(300)))
}

fn special_weights() -> Outcome {
    let start = Instant::now();
    let mut recs = Vec::new();
    for (p, f, red) in [(5u32, 3usize, false), (7, 3, false), (5, 4, true)] {
        let pr = params(p, f);
        let want: Vec<Sym> = if red {
            (0..f).map(|i| if i % 2 == 0 { Sym::XPlus1 } else { Sym::P2MX }).collect()
        } else {
            (0..f).map(|i| if i == 0 { Sym::P1MX } else if i % 2 == 1 { Sym::XPlus1 } else { Sym::P2MX }).collect()
        };
        for rho in generic_params(&pr, red) {
            let inst = format!("p={p} {rho}");
            let sigma = find_special_sigma(&pr, &rho).unwrap();
            recs.push(CheckRecord::new("λ of the special weight", inst.clone(), format!("{want:?}"), format!("{:?}", sigma.lambda), sigma.lambda == want));
            for j in 0..f {
                let tau = special_tau(&pr, &rho, &sigma, j).unwrap();
                let Some(tau) = tau else {
                    recs.push(CheckRecord::new("τ_j exists", format!("{inst} j={j}"), "present", "absent", false));
                    continue;
                };
                let mut full = SubsetS::full(f);
                full.remove(pr.idx(j as i64 - 2));
                recs.push(CheckRecord::eq("J(ξ) = S minus {j-2}", format!("{inst} j={j}"), full, xi_and_j(&pr, &rho, &tau).unwrap().j_xi));
            }
        }
    }
    records_outcome(&recs, start.elapsed(), None)
}

fn w_omega() -> Outcome {
    let start = Instant::now();
    let mut recs = Vec::new();
    for (f, r) in [(2usize, vec![2u32, 1]), (1, vec![2])] {
        let c = ctx(5, f);
        let pr = *c.params();
        let chi = chi_of_weight(&pr, &Weight::new(&pr, r, 0).unwrap());
        for j in 0..f {
            let w = EjInduced::new(&c, chi, j).unwrap();
            for omega in jh_of_pi_induced(&pr, &w.psi()) {
                recs.extend(verify_w_omega(&w, &omega).unwrap());
            }
        }
    }
    if !recs.iter().any(|r| r.anchor.contains("contains Ind")) {
        return Err("the f = 1 containment check did not run".into());
    }
    records_outcome(&recs, start.elapsed(), Some(Duration::from_secs(300)))
}

fn structure_modules() -> Outcome {
    let start = Instant::now();
    let mut recs = Vec::new();
    let c = ctx(5, 2);
    let pr = *c.params();
    for r in [[1u32, 2], [2, 1], [3, 2]] {
        let sigma = Weight::new(&pr, r.to_vec(), 0).unwrap();
        for j in 0..2 {
            let Some(tau) = plus_partner(&pr, &sigma, j) else { continue };
            let s1 = sigma.r[pr.idx(j as i64 - 1)] + 1;
            recs.extend(verify_e_two_char(&c, chi_of_weight(&pr, &sigma), chi_of_weight(&pr, &tau), j, s1).unwrap());
        }
    }
    for (chi, j) in ej_pairs(&c) {
        for s in 1..=4 {
            recs.extend(verify_ej_chain(&c, chi, j, s).unwrap());
        }
    }
    for (p, f, red, r) in [(5u32, 3usize, false, vec![1i64, 1, 1]), (7, 3, false, vec![2, 1, 2]), (5, 4, true, vec![1, 2, 1, 2])] {
        let c = ctx(p, f);
        let rho = GaloisParams::new(red, r, 0);
        let sigma = find_special_sigma(c.params(), &rho).unwrap();
        for j in 0..f {
            let tau = special_tau(c.params(), &rho, &sigma, j).unwrap().expect("τ_j exists");
            recs.extend(verify_s1_special(&c, &sigma.weight, &tau.weight, j).unwrap());
        }
    }
    let c7 = ctx(7, 2);
    for rho in generic_params(c7.params(), false) {
        recs.extend(verify_s1_f2(&c7, &rho).unwrap());
    }
    records_outcome(&recs, start.elapsed(), None)
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("1 JH cross-check against the oracle", jh_cross_check),
        ("2 dimension identity Σ dim = q+1", dimension_identity),
        ("3 |D(ρ)| = 2^f and D_0 multiplicity one", diamond_counts),
        ("4 f = 2 table at p = 7, r = (2,1)", f2_table),
        ("5 Witt identities in W", witt_identities),
        ("6 U+ action", uplus_action),
        ("7 combinatorial propositions on couples", combination),
        ("8 special weights and J(ξ)", special_weights),
        ("9 W_ω against the predicates", w_omega),
        ("10 structure modules and (S1)", structure_modules),
    ];
    let mut failed = Vec::new();
    for (name, run) in criteria {
        match run() {
            Ok(msg) => println!("PASS  criterion {name}: {msg}"),
            Err(msg) => {
                println!("FAIL  criterion {name}: {msg}");
                failed.push(name);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
