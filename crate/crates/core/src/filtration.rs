//! Couples of weights, the contents of `W_ω`, the socle diagram of the two-character example,
//! and the explicit structures of the case `f = 2` with `ρ` irreducible.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::diamond::{d0_factors, diamond_set, GaloisParams};
use crate::error::{domain, Error, Result};
use crate::params::Params;
use crate::principal_series::{jh_of_induced, PsFactor};
use crate::report::CheckRecord;
use crate::tuples::SubsetS;
use crate::weight::{
    char_normal_form, char_times_alpha_power, chi_of_weight, conjugate_char, sigma_s, weight_dim, ICharacter,
    Weight,
};

/// Type `(sign, j)` of a couple `(σ, τ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoupleType {
    pub sign: i8,
    pub j: usize,
}

impl fmt::Display for CoupleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:+},{})", self.sign, self.j)
    }
}

/// A layered display: each entry is one column of the diagram, listed top to bottom.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FiltrationLayer {
    pub layers: Vec<Vec<Weight>>,
}

impl FiltrationLayer {
    pub fn len(&self) -> usize {
        self.layers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.layers.is_empty()
    }

    /// All weights, column by column.
    pub fn weights(&self) -> impl Iterator<Item = &Weight> {
        self.layers.iter().flatten()
    }
}

/// `(+1, j)` partner: `(.., p-2-r_{j-1}, r_j+1, ..) ⊗ det^{t + p^{j-1}(r_{j-1}+1) - p^j}`.
pub fn plus_partner(params: &Params, sigma: &Weight, j: usize) -> Option<Weight> {
    partner(params, sigma, j, 1)
}

/// `(-1, j)` partner: `(.., p-2-r_{j-1}, r_j-1, ..) ⊗ det^{t + p^{j-1}(r_{j-1}+1)}`.
pub fn minus_partner(params: &Params, sigma: &Weight, j: usize) -> Option<Weight> {
    partner(params, sigma, j, -1)
}

fn partner(params: &Params, sigma: &Weight, j: usize, sign: i64) -> Option<Weight> {
    let f = params.f();
    if f < 2 || j >= f {
        return None;
    }
    let p = params.p() as i64;
    let jm1 = params.idx(j as i64 - 1);
    let mut r = sigma.digits_i64();
    if r[jm1] > p - 2 {
        return None;
    }
    let mut twist = sigma.twist as i64 + params.pow(j as i64 - 1) as i64 * (r[jm1] + 1);
    if sign > 0 {
        twist -= params.pow(j as i64) as i64;
    }
    r[jm1] = p - 2 - r[jm1];
    r[j] += sign;
    Weight::from_signed(params, &r, twist)
}

/// Every `(±1, j)` for which `τ` is the corresponding partner of `σ`.
pub fn couple_types(params: &Params, sigma: &Weight, tau: &Weight) -> Vec<CoupleType> {
    let mut out = Vec::new();
    for j in 0..params.f() {
        if plus_partner(params, sigma, j).as_ref() == Some(tau) {
            out.push(CoupleType { sign: 1, j });
        }
        if minus_partner(params, sigma, j).as_ref() == Some(tau) {
            out.push(CoupleType { sign: -1, j });
        }
    }
    out
}

pub fn couple_type(params: &Params, sigma: &Weight, tau: &Weight) -> Option<CoupleType> {
    couple_types(params, sigma, tau).into_iter().next()
}

/// `J' = {i : r'_i = p-1, r_i = 0}` where `χ = (r) ⊗ η` and `χα^{-p^j} = (r') ⊗ η'`.
pub fn j_prime(params: &Params, chi: &ICharacter, j: usize) -> SubsetS {
    let (r, _) = char_normal_form(params, chi);
    let (rp, _) = char_normal_form(params, &char_times_alpha_power(params, chi, j, -1));
    SubsetS::from_indices((0..params.f()).filter(|&i| rp[i] == params.p() - 1 && r[i] == 0))
}

/// JH factors of `Ind_I^K Π(ψ)`, labelled by the digits of `ψ`.
pub fn jh_of_pi_induced(params: &Params, psi: &ICharacter) -> Vec<PsFactor> {
    jh_of_induced(params, &conjugate_char(psi)).factors
}

/// Whether `U(τ) ⊆ W_ω` inside `Ind_I^K Π(E_j(χ))`, with `ω` a factor of `Ind_I^K Π(χα^{-p^j})`
/// and `τ` a factor of `Ind_I^K Π(χ)`.
pub fn w_contains_u(params: &Params, chi: &ICharacter, j: usize, omega: &PsFactor, tau: &PsFactor) -> Result<bool> {
    let f = params.f();
    if j >= f {
        return Err(domain(alloc::format!("index {j} out of range")));
    }
    let psi = char_times_alpha_power(params, chi, j, -1);
    if !jh_of_pi_induced(params, &psi).contains(omega) {
        return Err(domain(alloc::format!("{} is not a factor of Ind Π{psi}", omega.weight)));
    }
    if !jh_of_pi_induced(params, chi).contains(tau) {
        return Err(domain(alloc::format!("{} is not a factor of Ind Π{chi}", tau.weight)));
    }
    if f == 1 {
        return Ok(true);
    }
    let jm1 = params.idx(j as i64 - 1);
    if chi.is_s_fixed() {
        if !tau.j.is_empty() {
            return Ok(true);
        }
        let mut cover = omega.j;
        cover.insert(jm1);
        return Ok(cover == SubsetS::full(f));
    }
    let (r, _) = char_normal_form(params, chi);
    let mut allowed = omega.j;
    allowed.insert(jm1);
    if r[j] <= 1 {
        allowed = allowed.union(&j_prime(params, chi, j));
        allowed.insert(j);
    }
    Ok(tau.j.is_subset(&allowed))
}

/// Which induced module a factor of `W_ω` is taken from in the two-character setting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Sigma,
    Tau,
}

/// Whether `U(σ')` (resp. `U(τ')`) lies in `W_ω ⊆ Ind_I^K Π(E_{j-1}(χ_σ, χ_τ, r_{j-1}+1))`.
pub fn w_contents_two_char(
    params: &Params,
    sigma: &Weight,
    j: usize,
    omega: &PsFactor,
    factor: &PsFactor,
    side: Side,
) -> Result<bool> {
    let tau = plus_partner(params, sigma, j)
        .ok_or_else(|| domain(alloc::format!("{sigma} has no (+1,{j}) partner")))?;
    if sigma.r[j] < 1 {
        return Err(domain(alloc::format!("r_{j} = 0 for {sigma}")));
    }
    let jm1 = params.idx(j as i64 - 1);
    let jm2 = params.idx(j as i64 - 2);
    let chi = chi_of_weight(params, sigma);
    let psi = char_times_alpha_power(params, &chi, jm1, -(sigma.r[jm1] as i64 + 1));
    if !jh_of_pi_induced(params, &psi).contains(omega) {
        return Err(domain(alloc::format!("{} is not a factor of Ind Π{psi}", omega.weight)));
    }
    let (home, extra) = match side {
        Side::Sigma => (chi, SubsetS::from_indices([jm1, jm2])),
        Side::Tau => (chi_of_weight(params, &tau), SubsetS::singleton(jm1)),
    };
    if !jh_of_pi_induced(params, &home).contains(factor) {
        return Err(domain(alloc::format!("{} is not a factor of Ind Π{home}", factor.weight)));
    }
    Ok(factor.j.is_subset(&omega.j.union(&extra)))
}

/// `ε(ω) = 1` iff `χα^{-p^j}` is fixed by `s` and `ω` is one-dimensional.
pub fn epsilon(params: &Params, chi: &ICharacter, j: usize, omega: &Weight) -> bool {
    char_times_alpha_power(params, chi, j, -1).is_s_fixed() && weight_dim(omega) == 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtVanishing {
    VanishesByPaper,
    NonvanishingAllowed,
    Unknown,
}

impl fmt::Display for ExtVanishing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExtVanishing::VanishesByPaper => "vanishes",
            ExtVanishing::NonvanishingAllowed => "nonvanishing-allowed",
            ExtVanishing::Unknown => "unknown",
        })
    }
}

/// Sufficient conditions for `Ext^1_K(τ, σ) = 0`; couples are reported as allowed to be nonzero.
pub fn ext_vanishing(params: &Params, sigma: &Weight, tau: &Weight) -> ExtVanishing {
    let f = params.f();
    if f < 2 {
        return ExtVanishing::Unknown;
    }
    let p = params.p();
    if sigma == tau && sigma.r.iter().all(|&x| x <= p - 2) {
        return ExtVanishing::VanishesByPaper;
    }
    for j in 0..f {
        let jm1 = params.idx(j as i64 - 1);
        if sigma.r[jm1] > p - 2 {
            continue;
        }
        for (shift, ok) in [(2i64, sigma.r[j] + 3 <= p), (-2, sigma.r[j] >= 2)] {
            if !ok {
                continue;
            }
            let mut r = sigma.digits_i64();
            r[j] += shift;
            let twist = sigma.twist as i64 - shift / 2 * params.pow(j as i64) as i64;
            if Weight::from_signed(params, &r, twist).as_ref() == Some(tau) {
                return ExtVanishing::VanishesByPaper;
            }
        }
    }
    if !couple_types(params, sigma, tau).is_empty() || !couple_types(params, tau, sigma).is_empty() {
        return ExtVanishing::NonvanishingAllowed;
    }
    ExtVanishing::Unknown
}

/// The socle diagram of `W_ω` for a couple `(σ, τ)` of type `(+1, j)` and `J(ω) = ∅`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Example1 {
    pub sigma: Weight,
    pub tau: Weight,
    pub j: usize,
    pub r: u32,
    pub t: u32,
    /// `σ^{(i)}_*` for `0 ≤ i ≤ r` and `* ⊆ {j-2, j-1}`, where present.
    pub entries: Vec<(u32, SubsetS, Weight)>,
    pub top: Vec<Weight>,
    pub bottom: Vec<Weight>,
    pub omega: Weight,
    pub tau_j1: Weight,
    pub tau_empty: Weight,
    pub layers: FiltrationLayer,
}

impl Example1 {
    pub fn get(&self, i: u32, set: SubsetS) -> Option<&Weight> {
        self.entries.iter().find(|(k, s, _)| *k == i && *s == set).map(|(_, _, w)| w)
    }

    /// Weights grouped by the character index `i`; the last group holds `ω, τ_{j-1}, τ_∅`.
    pub fn groups(&self) -> Vec<Vec<Weight>> {
        let mut out: Vec<Vec<Weight>> = (0..=self.r)
            .map(|i| self.weights_at(i).cloned().collect())
            .collect();
        out.push(alloc::vec![self.omega.clone(), self.tau_j1.clone(), self.tau_empty.clone()]);
        out
    }

    fn weights_at(&self, i: u32) -> impl Iterator<Item = &Weight> {
        let (top, bottom) = (&self.top, &self.bottom);
        self.entries
            .iter()
            .filter(move |(k, _, w)| *k == i && (top.contains(w) || bottom.contains(w)))
            .map(|(_, _, w)| w)
    }

    pub fn j_sets(&self, params: &Params) -> [SubsetS; 4] {
        let jm1 = params.idx(self.j as i64 - 1);
        let jm2 = params.idx(self.j as i64 - 2);
        [
            SubsetS::EMPTY,
            SubsetS::singleton(jm1),
            SubsetS::singleton(jm2),
            SubsetS::from_indices([jm1, jm2]),
        ]
    }
}

fn factor_with_j(factors: &[PsFactor], set: SubsetS) -> Option<Weight> {
    factors.iter().find(|x| x.j == set).map(|x| x.weight.clone())
}

pub fn example1_filtration(params: &Params, sigma: &Weight, j: usize) -> Result<Example1> {
    let f = params.f();
    let p = params.p();
    if f < 2 || j >= f {
        return Err(domain(alloc::format!("need f ≥ 2 and j < f, got f={f}, j={j}")));
    }
    let jm1 = params.idx(j as i64 - 1);
    let jm2 = params.idx(j as i64 - 2);
    if sigma.r[jm2] == p - 1 {
        return Err(domain(alloc::format!("r_{jm2} = p-1 for {sigma}")));
    }
    if sigma.r[j] < 1 {
        return Err(domain(alloc::format!("r_{j} = 0 for {sigma}")));
    }
    let tau = plus_partner(params, sigma, j)
        .ok_or_else(|| domain(alloc::format!("{sigma} has no (+1,{j}) partner")))?;
    let r = sigma.r[jm1];
    let t = r / 2;
    let chi = chi_of_weight(params, sigma);
    let sets = [
        SubsetS::EMPTY,
        SubsetS::singleton(jm1),
        SubsetS::singleton(jm2),
        SubsetS::from_indices([jm1, jm2]),
    ];
    let (e, a, b, full) = (sets[0], sets[1], sets[2], sets[3]);
    let mut entries = Vec::new();
    for i in 0..=r {
        let psi = char_times_alpha_power(params, &chi, jm1, -(i as i64));
        let jh = jh_of_pi_induced(params, &psi);
        for set in sets {
            if let Some(w) = factor_with_j(&jh, set) {
                if !entries.iter().any(|(k, s, _): &(u32, SubsetS, Weight)| *k == i && *s == set) {
                    entries.push((i, set, w));
                }
            }
        }
    }
    let last = jh_of_pi_induced(params, &char_times_alpha_power(params, &chi, jm1, -(r as i64 + 1)));
    let omega = factor_with_j(&last, e).ok_or_else(|| Error::Invariant("ω is missing".into()))?;
    let tau_jh = jh_of_pi_induced(params, &chi_of_weight(params, &tau));
    let tau_j1 = factor_with_j(&tau_jh, a).ok_or_else(|| Error::Invariant("τ_{j-1} is missing".into()))?;
    let tau_empty = factor_with_j(&tau_jh, e).ok_or_else(|| Error::Invariant("τ_∅ is missing".into()))?;

    let lookup = |i: u32, set: SubsetS| -> Result<Weight> {
        entries
            .iter()
            .find(|(k, s, _)| *k == i && *s == set)
            .map(|(_, _, w)| w.clone())
            .ok_or_else(|| Error::Invariant(alloc::format!("σ^({i})_{set} is missing")))
    };
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    for i in 0..=t {
        top.push(lookup(i, a)?);
        top.push(lookup(i, full)?);
        bottom.push(lookup(i, e)?);
        if i < t || r % 2 == 1 {
            bottom.push(lookup(i, b)?);
        }
    }
    for i in t + 1..=r {
        top.push(lookup(i, e)?);
        top.push(lookup(i, b)?);
    }
    let mut layers: Vec<Vec<Weight>> = top
        .iter()
        .enumerate()
        .map(|(k, w)| {
            let mut col = alloc::vec![w.clone()];
            col.extend(bottom.get(k).cloned());
            col
        })
        .collect();
    layers.push(alloc::vec![omega.clone(), tau_j1.clone(), tau_empty.clone()]);
    top.push(omega.clone());
    Ok(Example1 {
        sigma: sigma.clone(),
        tau,
        j,
        r,
        t,
        entries,
        top,
        bottom,
        omega,
        tau_j1,
        tau_empty,
        layers: FiltrationLayer { layers },
    })
}

/// The closed formulas for `σ^{(i)}_*` when `f ≥ 3`; `None` where a digit leaves `[0, p-1]`.
pub fn example1_explicit(params: &Params, sigma: &Weight, j: usize) -> Result<Vec<(u32, SubsetS, Option<Weight>)>> {
    let f = params.f();
    if f < 3 || j >= f {
        return Err(domain(alloc::format!("closed formulas need f ≥ 3 and j < f, got f={f}, j={j}")));
    }
    let p = params.p() as i64;
    let jm1 = params.idx(j as i64 - 1);
    let jm2 = params.idx(j as i64 - 2);
    let (pj1, pj2) = (params.pow(j as i64 - 1) as i64, params.pow(j as i64 - 2) as i64);
    let base = sigma.digits_i64();
    let eta = sigma.twist as i64;
    let r = base[jm1];
    let t = r / 2;
    let (r2, rj) = (base[jm2], base[j]);
    let sets = [
        SubsetS::EMPTY,
        SubsetS::singleton(jm1),
        SubsetS::singleton(jm2),
        SubsetS::from_indices([jm1, jm2]),
    ];
    let mut out = Vec::new();
    let mut push = |i: i64, set: SubsetS, d2: i64, d1: i64, dj: i64, twist: i64| {
        let mut d = base.clone();
        d[jm2] = d2;
        d[jm1] = d1;
        d[j] = dj;
        out.push((i as u32, set, Weight::from_signed(params, &d, eta + twist)));
    };
    for i in 0..=t {
        push(i, sets[0], r2, r - 2 * i, rj, pj1 * i);
        push(i, sets[2], p - 2 - r2, r - 1 - 2 * i, rj, pj1 * i + pj2 * (r2 + 1));
        push(i, sets[1], r2, p - 2 - r + 2 * i, rj - 1, pj1 * (r + 1 - i));
        push(i, sets[3], p - 2 - r2, p - 1 - r + 2 * i, rj - 1, pj1 * (r - i) + pj2 * (r2 + 1));
    }
    for i in t + 1..=r {
        push(i, sets[0], r2, p + r - 2 * i, rj - 1, pj1 * i);
        push(i, sets[2], p - 2 - r2, p + r - 1 - 2 * i, rj - 1, pj1 * i + pj2 * (r2 + 1));
    }
    Ok(out)
}

/// The coincidences among the weights of the diagram.
pub fn example1_coincidences(params: &Params, ex: &Example1) -> Vec<CheckRecord> {
    let [_, a, b, full] = ex.j_sets(params);
    let e = SubsetS::EMPTY;
    let inst = |s: &str| alloc::format!("σ={} j={} {s}", ex.sigma, ex.j);
    let show = |w: Option<&Weight>| -> String {
        w.map(|x| alloc::format!("{x}")).unwrap_or_else(|| "absent".into())
    };
    let mut out = alloc::vec![CheckRecord::eq(
        "σ^(0)_{j-1} ≅ ω",
        inst("i=0"),
        show(Some(&ex.omega)),
        show(ex.get(0, a)),
    )];
    for i in 1..=ex.t {
        let k = ex.r + 1 - i;
        out.push(CheckRecord::eq(
            "σ^(i)_{j-1} ≅ σ^(r+1-i)_∅",
            inst(&alloc::format!("i={i}")),
            show(ex.get(k, e)),
            show(ex.get(i, a)),
        ));
        out.push(CheckRecord::eq(
            "σ^(i-1)_J ≅ σ^(r+1-i)_{j-2}",
            inst(&alloc::format!("i={i}")),
            show(ex.get(k, b)),
            show(ex.get(i - 1, full)),
        ));
    }
    out
}

/// One row `σ | S | tail` of `D_0(ρ)` for `f = 2`, `ρ` irreducible; the last two columns
/// are digit pairs, meaningful up to twist, and may leave `[0, p-1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct F2Row {
    pub sigma: Weight,
    pub s_block: [[i64; 2]; 2],
    pub tail: [i64; 2],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct F2Tables {
    pub rows: Vec<F2Row>,
    /// `(p-2-r_0, r_1+3) ⊗ det^{r_0+p(p-2)}`, when `r_1 ≤ p-4`.
    pub omega: Option<Weight>,
}

fn require_f2(params: &Params, rho: &GaloisParams) -> Result<(i64, i64)> {
    let p = params.p() as i64;
    if params.f() != 2 || rho.reducible || rho.r.len() != 2 {
        return Err(domain(alloc::format!("need f=2 and ρ irreducible, got f={}, {rho}", params.f())));
    }
    let (r0, r1) = (rho.r[0], rho.r[1]);
    if !(1..=p - 2).contains(&r0) || !(0..=p - 3).contains(&r1) {
        return Err(domain(alloc::format!("need 1 ≤ r_0 ≤ p-2 and 0 ≤ r_1 ≤ p-3, got {rho}")));
    }
    Ok((r0, r1))
}

pub fn f2_tables(params: &Params, rho: &GaloisParams) -> Result<F2Tables> {
    let (r0, r1) = require_f2(params, rho)?;
    let p = params.p() as i64;
    let eta = rho.twist as i64;
    let w = |a: i64, b: i64, t: i64| -> Result<Weight> {
        Weight::from_signed(params, &[a, b], t + eta)
            .ok_or_else(|| Error::Invariant(alloc::format!("({a},{b}) is not a weight")))
    };
    let rows = alloc::vec![
        F2Row { sigma: w(r0, r1, 0)?, s_block: [[p - 2 - r0, r1 - 1], [r0 + 1, p - 2 - r1]], tail: [p - 3 - r0, p - 1 - r1] },
        F2Row {
            sigma: w(r0 - 1, p - 2 - r1, p * (r1 + 1))?,
            s_block: [[r0 - 2, r1], [p - 1 - r0, p - 1 - r1]],
            tail: [p - r0, r1 - 1],
        },
        F2Row {
            sigma: w(p - 1 - r0, p - 3 - r1, r0 + p * (r1 + 1))?,
            s_block: [[r0 - 1, p - 4 - r1], [p - r0, r1 + 1]],
            tail: [r0 - 2, r1 + 2],
        },
        F2Row {
            sigma: w(p - 2 - r0, r1 + 1, r0 + p * (p - 1))?,
            s_block: [[p - 3 - r0, p - 3 - r1], [r0, r1 + 2]],
            tail: [r0 + 1, p - 4 - r1],
        },
    ];
    let omega = if r1 <= p - 4 { Some(w(p - 2 - r0, r1 + 3, r0 + p * (p - 2))?) } else { None };
    Ok(F2Tables { rows, omega })
}

fn in_range(p: u32, d: &[i64; 2]) -> bool {
    d.iter().all(|&x| (0..p as i64).contains(&x))
}

fn sorted_digits(mut v: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    v.sort();
    v
}

struct DigitList(Vec<Vec<u32>>);

impl fmt::Display for DigitList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl PartialEq for DigitList {
    fn eq(&self, o: &Self) -> bool {
        self.0 == o.0
    }
}

/// Compare the closed-form table with `D(ρ)`, `D_0(ρ)` (by layer `|S(μ)|`) and the cycle of `δ`.
pub fn check_f2_tables(params: &Params, rho: &GaloisParams) -> Result<Vec<CheckRecord>> {
    let tables = f2_tables(params, rho)?;
    let p = params.p();
    let set = diamond_set(params, rho)?;
    let mut out = Vec::new();
    let mut listed: Vec<Weight> = tables.rows.iter().map(|r| r.sigma.clone()).collect();
    let mut computed: Vec<Weight> = set.iter().map(|d| d.weight.clone()).collect();
    listed.sort();
    computed.sort();
    let inst = alloc::format!("p={p} {rho}");
    out.push(CheckRecord::new(
        "f=2 Diamond weights",
        inst.clone(),
        alloc::format!("{listed:?}"),
        alloc::format!("{computed:?}"),
        listed == computed,
    ));
    for (k, row) in tables.rows.iter().enumerate() {
        let label = alloc::format!("{inst} σ{}={}", k + 1, row.sigma);
        let Some(dw) = set.iter().find(|d| d.weight == row.sigma) else {
            out.push(CheckRecord::new("f=2 D_0 rows", label, "σ in D(ρ)", "missing", false));
            continue;
        };
        let factors = d0_factors(params, rho, dw)?;
        let layer = |n: usize| -> Vec<Vec<u32>> {
            sorted_digits(
                factors
                    .iter()
                    .filter(|x| crate::tuples::s_of_mu(&x.mu).len() == n)
                    .map(|x| x.weight.r.clone())
                    .collect(),
            )
        };
        let expect = |ds: &[[i64; 2]]| -> Vec<Vec<u32>> {
            sorted_digits(ds.iter().filter(|d| in_range(p, d)).map(|d| d.iter().map(|&x| x as u32).collect()).collect())
        };
        out.push(CheckRecord::eq(
            "f=2 D_0 socle",
            alloc::format!("{label} [layer 0]"),
            DigitList(alloc::vec![row.sigma.r.clone()]),
            DigitList(layer(0)),
        ));
        out.push(CheckRecord::eq(
            "f=2 S block",
            alloc::format!("{label} [layer 1]"),
            DigitList(expect(&row.s_block)),
            DigitList(layer(1)),
        ));
        out.push(CheckRecord::eq(
            "f=2 D_0 tail",
            alloc::format!("{label} [layer 2]"),
            DigitList(expect(&[row.tail])),
            DigitList(layer(2)),
        ));
        let next = &tables.rows[(k + 1) % 4].sigma;
        let ss = sigma_s(params, &row.sigma);
        let target = set.iter().find(|d| d.weight == *next);
        let hit = match target {
            Some(d) => d0_factors(params, rho, d)?.iter().any(|x| x.weight == ss),
            None => false,
        };
        out.push(CheckRecord::new(
            "δ(σ_i) = σ_{i+1}",
            label,
            alloc::format!("{ss} in D_0,{next}"),
            if hit { "found" } else { "not found" },
            hit,
        ));
    }
    Ok(out)
}

/// The socle displays of `V_1` and of `S_1`, together with the chain `τ_0, …, τ_{r_0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct V1S1 {
    pub tau: Vec<Weight>,
    pub tau_in_diamond: Vec<bool>,
    pub v1: FiltrationLayer,
    pub s1: FiltrationLayer,
}

pub fn v1_s1_filtrations(params: &Params, rho: &GaloisParams) -> Result<V1S1> {
    let (r0, _) = require_f2(params, rho)?;
    let tables = f2_tables(params, rho)?;
    let sig = |k: usize| tables.rows[k].sigma.clone();
    let ex = example1_filtration(params, &sig(1), 1)?;
    let len = 2 * r0 as usize + 1;
    if ex.top.len() != len {
        return Err(Error::Invariant(alloc::format!("top row has {} entries, expected {len}", ex.top.len())));
    }
    let tau: Vec<Weight> = ex.top[..=r0 as usize].to_vec();
    let diamond = crate::diamond::diamond_weights(params, rho)?;
    let tau_in_diamond = tau.iter().map(|w| diamond.contains(w)).collect();
    let s1 = FiltrationLayer { layers: ex.top.iter().map(|w| alloc::vec![w.clone()]).collect() };
    let mut v1 = s1.clone();
    v1.layers.push(alloc::vec![sig(3), sig(0)]);
    Ok(V1S1 { tau, tau_in_diamond, v1, s1 })
}

/// The assertions of the lemma on `V_1` and of the `S_1` display.
pub fn check_v1_s1(params: &Params, rho: &GaloisParams) -> Result<Vec<CheckRecord>> {
    let (r0, _) = require_f2(params, rho)?;
    let tables = f2_tables(params, rho)?;
    let v = v1_s1_filtrations(params, rho)?;
    let sig = |k: usize| &tables.rows[k].sigma;
    let inst = alloc::format!("p={} {rho}", params.p());
    let mut out = alloc::vec![
        CheckRecord::eq("τ_0 = σ_3", inst.clone(), sig(2).clone(), v.tau[0].clone()),
        CheckRecord::eq("τ_1 = σ_2^[s]", inst.clone(), sigma_s(params, sig(1)), v.tau[1].clone()),
        CheckRecord::eq("(V_1/σ_1) layer count", inst.clone(), 2 * r0 as usize + 2, v.v1.len()),
        CheckRecord::new(
            "(σ_1, σ_4) of type (+1,1)",
            inst.clone(),
            "(+1,1)",
            alloc::format!("{:?}", couple_type(params, sig(0), sig(3))),
            couple_type(params, sig(0), sig(3)) == Some(CoupleType { sign: 1, j: 1 }),
        ),
    ];
    for i in 0..r0 as usize {
        let ct = couple_type(params, &v.tau[i], &v.tau[i + 1]);
        out.push(CheckRecord::new(
            "(τ_i, τ_{i+1}) of type (+1,0)",
            alloc::format!("{inst} i={i}"),
            "(+1,0)",
            alloc::format!("{ct:?}"),
            ct == Some(CoupleType { sign: 1, j: 0 }),
        ));
    }
    for i in 1..=r0 as usize {
        out.push(CheckRecord::new(
            "τ_i ∉ D(ρ)",
            alloc::format!("{inst} i={i}"),
            "not Diamond",
            alloc::format!("{} in D = {}", v.tau[i], v.tau_in_diamond[i]),
            !v.tau_in_diamond[i],
        ));
    }
    let layers = &v.s1.layers;
    let n = layers.len();
    let mirrored = (0..n).all(|k| layers[k] == layers[n - 1 - k]);
    out.push(CheckRecord::new("S_1 display is symmetric", inst.clone(), "τ_i at i and 2r_0-i", mirrored, mirrored));
    out.push(CheckRecord::eq("S_1 = V_1 without the last column", inst, &v.v1.layers[..n] == layers.as_slice(), true));
    Ok(out)
}
