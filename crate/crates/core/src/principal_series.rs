//! Jordan-Holder factors of `Ind_I^K χ` and the contents of the submodules `U(τ)`.

use alloc::vec::Vec;

use crate::error::{domain, Result};
use crate::params::Params;
use crate::tuples::{e_of_lambda, enumerate_p, eval_tuple, j_of_lambda, SubsetS, Tuple};
use crate::weight::{char_normal_form, conjugate_char, ICharacter, Weight};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsFactor {
    pub weight: Weight,
    pub lambda: Tuple,
    pub j: SubsetS,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedJh {
    pub factors: Vec<PsFactor>,
    /// Tuples forgotten because some entry evaluated below zero.
    pub dropped: Vec<Tuple>,
}

/// Evaluate every `λ ∈ P` at the digits `r` with twist `t`.
pub fn ps_factors_at(params: &Params, r: &[u32], twist: u64) -> InducedJh {
    let ri: Vec<i64> = r.iter().map(|&x| x as i64).collect();
    let mut factors = Vec::new();
    let mut dropped = Vec::new();
    for lambda in enumerate_p(params.f()) {
        let vals = eval_tuple(params.p(), &lambda, &ri);
        if vals.iter().any(|&v| v < 0) {
            dropped.push(lambda);
            continue;
        }
        let e = e_of_lambda(params, &lambda, &ri).expect("P tuples have even brackets");
        let weight = Weight::from_signed(params, &vals, e + twist as i64).expect("entries in range");
        factors.push(PsFactor { j: j_of_lambda(&lambda), weight, lambda });
    }
    InducedJh { factors, dropped }
}

/// JH factors of `Ind_I^K χ`. The tuples are evaluated at the normal form of `χ^s`, so the
/// factor with `J = ∅` is the socle and `J(τ)` has its usual meaning for `U(τ)`.
pub fn jh_of_induced(params: &Params, chi: &ICharacter) -> InducedJh {
    let (r, t) = char_normal_form(params, &conjugate_char(chi));
    ps_factors_at(params, &r, t)
}

/// JH content of `U(τ) ⊆ Ind_I^K χ`.
pub fn u_contents(params: &Params, tau: &PsFactor, chi: &ICharacter) -> Result<Vec<PsFactor>> {
    let jh = jh_of_induced(params, chi);
    if !jh.factors.iter().any(|x| x == tau) {
        return Err(domain(alloc::format!("{} is not a factor of Ind {}", tau.weight, chi)));
    }
    if chi.is_s_fixed() {
        return Ok(alloc::vec![tau.clone()]);
    }
    Ok(jh.factors.into_iter().filter(|x| x.j.is_subset(&tau.j)).collect())
}

/// `soc_K Ind_I^K χ`: one weight, or the pair `σ, σ^[s]` when `χ = χ^s`.
pub fn socle_of_induced(params: &Params, chi: &ICharacter) -> Vec<Weight> {
    let jh = jh_of_induced(params, chi);
    if chi.is_s_fixed() {
        return jh.factors.into_iter().map(|x| x.weight).collect();
    }
    jh.factors.into_iter().filter(|x| x.j.is_empty()).map(|x| x.weight).collect()
}

/// The factor of `Ind_I^K χ_σ^s`, evaluated at the digits of `σ` itself, whose weight is `w`.
pub fn locate_in_ps(params: &Params, sigma: &Weight, w: &Weight) -> Option<PsFactor> {
    ps_factors_at(params, &sigma.r, sigma.twist).factors.into_iter().find(|x| x.weight == *w)
}

