//! Diamond weights `D(ρ)`, the factors of `D_0(ρ)`, lifting, the map `δ` and the
//! combinatorics of couples inside a block `D_{0,σ}(ρ)`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{domain, Error, Result};
use crate::filtration::{couple_types, CoupleType};
use crate::params::Params;
use crate::principal_series::ps_factors_at;
use crate::report::CheckRecord;
use crate::tuples::{
    compatible, delta_irr, delta_red, e_of_exprs, e_of_lambda, enumerate_id, enumerate_imu, enumerate_rd,
    eval_tuple, j_of_lambda, mu_of_lambda, s_of_lambda, s_of_mu, tuple_to_string, Expr, Family,
    SubsetS, Sym, Tuple,
};
use crate::weight::{sigma_s, Weight};

/// Parameters of a generic semisimple `ρ`: reducibility, the exponents `r_i`, and `η = det^twist`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaloisParams {
    pub reducible: bool,
    pub r: Vec<i64>,
    pub twist: u64,
}

impl GaloisParams {
    pub fn new(reducible: bool, r: Vec<i64>, twist: u64) -> Self {
        GaloisParams { reducible, r, twist }
    }

    fn family(&self) -> Family {
        if self.reducible {
            Family::RD
        } else {
            Family::ID
        }
    }
}

impl fmt::Display for GaloisParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = if self.reducible { "red" } else { "irr" };
        write!(f, "{kind} r={:?}", self.r)?;
        if self.twist != 0 {
            write!(f, " twist={}", self.twist)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiamondWeight {
    pub weight: Weight,
    pub lambda: Tuple,
    pub s: SubsetS,
    pub ell: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct D0Factor {
    pub base: DiamondWeight,
    pub mu: Tuple,
    pub weight: Weight,
    pub lifts: bool,
}

impl D0Factor {
    /// `μ_i ∘ λ_i` as expressions in `x_i`.
    pub fn composed(&self) -> Vec<Expr> {
        self.mu.iter().zip(&self.base.lambda).map(|(m, l)| m.expr().compose(&l.expr())).collect()
    }
}

pub fn is_generic(params: &Params, rho: &GaloisParams) -> bool {
    let p = params.p() as i64;
    if rho.r.len() != params.f() {
        return false;
    }
    if rho.reducible {
        rho.r.iter().all(|&x| (0..=p - 3).contains(&x))
            && rho.r.iter().any(|&x| x != 0)
            && rho.r.iter().any(|&x| x != p - 3)
    } else {
        (1..=p - 2).contains(&rho.r[0]) && rho.r[1..].iter().all(|&x| (0..=p - 3).contains(&x))
    }
}

/// Every generic `ρ` of the given kind with twist `0`, in lexicographic order of `r`.
pub fn generic_params(params: &Params, reducible: bool) -> Vec<GaloisParams> {
    let p = params.p() as i64;
    let mut rs: Vec<Vec<i64>> = alloc::vec![Vec::new()];
    for _ in 0..params.f() {
        rs = rs
            .into_iter()
            .flat_map(|v| {
                (0..p).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    rs.into_iter()
        .map(|r| GaloisParams::new(reducible, r, 0))
        .filter(|rho| is_generic(params, rho))
        .collect()
}

fn require_generic(params: &Params, rho: &GaloisParams) -> Result<()> {
    if is_generic(params, rho) {
        Ok(())
    } else {
        Err(domain(alloc::format!("{rho} is not generic for p={}", params.p())))
    }
}

/// `D(ρ)`, ordered by `S_λ` read as a bitset.
pub fn diamond_set(params: &Params, rho: &GaloisParams) -> Result<Vec<DiamondWeight>> {
    require_generic(params, rho)?;
    let family = rho.family();
    let tuples = if rho.reducible { enumerate_rd(params.f()) } else { enumerate_id(params.f()) };
    let mut out = Vec::with_capacity(tuples.len());
    for lambda in tuples {
        let vals = eval_tuple(params.p(), &lambda, &rho.r);
        let e = e_of_lambda(params, &lambda, &rho.r)?;
        let weight = Weight::from_signed(params, &vals, e + rho.twist as i64).ok_or_else(|| {
            Error::Invariant(alloc::format!("{} leaves range at {rho}", tuple_to_string(&lambda)))
        })?;
        let s = s_of_lambda(family, &lambda);
        out.push(DiamondWeight { weight, ell: s.len(), s, lambda });
    }
    out.sort_by_key(|d| d.s);
    Ok(out)
}

/// Lifting criterion: every `μ_i` lies in `{p-2-y, p-1-y, y, y+1}`.
pub fn lifts(mu: &[Sym]) -> bool {
    mu.iter().all(|s| matches!(s, Sym::P2MX | Sym::P1MX | Sym::X | Sym::XPlus1))
}

/// JH factors of `D_{0,σ}(ρ)` in enumeration order of `I(y)`.
pub fn d0_factors(params: &Params, rho: &GaloisParams, sigma: &DiamondWeight) -> Result<Vec<D0Factor>> {
    let set = diamond_set(params, rho)?;
    if !set.contains(sigma) {
        return Err(domain(alloc::format!("{} is not a Diamond weight of {rho}", sigma.weight)));
    }
    let mu_lambda = mu_of_lambda(rho.family(), &sigma.lambda);
    let p = params.p() as i64;
    let mut out = Vec::new();
    for mu in enumerate_imu(params.f()) {
        if !compatible(&mu, &mu_lambda) {
            continue;
        }
        let comp: Vec<Expr> = mu.iter().zip(&sigma.lambda).map(|(m, l)| m.expr().compose(&l.expr())).collect();
        let vals: Vec<i64> = comp.iter().zip(&rho.r).map(|(e, &x)| e.eval(params.p(), x)).collect();
        if vals.iter().any(|&v| !(0..p).contains(&v)) {
            continue;
        }
        let e = e_of_exprs(params, &comp, &rho.r)?;
        let weight = Weight::from_signed(params, &vals, e + rho.twist as i64).expect("checked range");
        out.push(D0Factor { base: sigma.clone(), lifts: lifts(&mu), mu, weight });
    }
    Ok(out)
}

/// All factors of `D_0(ρ)`, block by block.
pub fn d0_all(params: &Params, rho: &GaloisParams) -> Result<Vec<D0Factor>> {
    let mut out = Vec::new();
    for sigma in diamond_set(params, rho)? {
        out.extend(d0_factors(params, rho, &sigma)?);
    }
    Ok(out)
}

/// `(S^-, S^+)` for a lifting factor.
pub fn s_plus_minus(params: &Params, rho: &GaloisParams, factor: &D0Factor) -> Result<(SubsetS, SubsetS)> {
    if !factor.lifts {
        return Err(domain(alloc::format!("{} does not lift", factor.weight)));
    }
    let f = params.f();
    let comp = factor.composed();
    let s = factor.base.s;
    let mut minus = SubsetS::EMPTY;
    let mut plus = SubsetS::EMPTY;
    for i in 0..f {
        let c = comp[params.idx(i as i64 - 1)];
        let (minus_set, plus_set): (&[Expr], &[Expr]) = if !rho.reducible && i == 1 % f {
            (
                &[Expr::pos(-1), Expr::pos(0), Expr::neg(0)],
                &[Expr::neg(-2), Expr::neg(-1), Expr::pos(1)],
            )
        } else {
            (
                &[Expr::pos(0), Expr::pos(1), Expr::neg(-1)],
                &[Expr::neg(-3), Expr::neg(-2), Expr::pos(2)],
            )
        };
        if s.contains(i) && minus_set.contains(&c) {
            minus.insert(i);
        }
        if !s.contains(i) && plus_set.contains(&c) {
            plus.insert(i);
        }
    }
    Ok((minus, plus))
}

/// Subset attached to `δ(τ)`.
pub fn delta_subset(params: &Params, rho: &GaloisParams, factor: &D0Factor) -> Result<SubsetS> {
    let (minus, plus) = s_plus_minus(params, rho, factor)?;
    let inner = factor.base.s.minus(&minus).union(&plus);
    Ok(if rho.reducible { delta_red(params.f(), inner) } else { delta_irr(params.f(), inner) })
}

pub fn delta_of_tau(params: &Params, rho: &GaloisParams, factor: &D0Factor) -> Result<DiamondWeight> {
    let target = delta_subset(params, rho, factor)?;
    diamond_set(params, rho)?
        .into_iter()
        .find(|d| d.s == target)
        .ok_or_else(|| Error::Invariant(alloc::format!("no Diamond weight with S = {target}")))
}

/// Whether `τ^[s]` occurs in `D_{0,δ(τ)}(ρ)`.
pub fn delta_consistent(params: &Params, rho: &GaloisParams, factor: &D0Factor) -> Result<bool> {
    let d = delta_of_tau(params, rho, factor)?;
    let ts = sigma_s(params, &factor.weight);
    Ok(d0_factors(params, rho, &d)?.iter().any(|x| x.weight == ts))
}

/// `ξ ∈ P(y)` realizing `δ(τ)` inside `Ind_I^K χ_τ^s`, and `J(ξ)` computed three ways.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XiData {
    pub delta: DiamondWeight,
    pub xi: Tuple,
    pub j_xi: SubsetS,
    /// `μ` of `τ^[s]` inside `D_{0,δ(τ)}(ρ)`.
    pub theta: Tuple,
    /// `{i : θ_i ∈ {y, y+1}}`.
    pub j_theta: SubsetS,
    /// `{i : i+1 ∉ S(θ)}`.
    pub j_s_theta: SubsetS,
}

impl XiData {
    pub fn consistent(&self) -> bool {
        self.j_xi == self.j_theta && self.j_xi == self.j_s_theta
    }
}

pub fn xi_and_j(params: &Params, rho: &GaloisParams, factor: &D0Factor) -> Result<XiData> {
    let f = params.f();
    let delta = delta_of_tau(params, rho, factor)?;
    let xi_factor = ps_factors_at(params, &factor.weight.r, factor.weight.twist)
        .factors
        .into_iter()
        .find(|x| x.weight == delta.weight)
        .ok_or_else(|| Error::Invariant(alloc::format!("δ({}) = {} not in Ind", factor.weight, delta.weight)))?;
    let ts = sigma_s(params, &factor.weight);
    let theta = d0_factors(params, rho, &delta)?
        .into_iter()
        .find(|x| x.weight == ts)
        .ok_or_else(|| Error::Invariant(alloc::format!("{ts} not in D_0 of {}", delta.weight)))?
        .mu;
    let j_theta = SubsetS::from_indices((0..f).filter(|&i| matches!(theta[i], Sym::X | Sym::XPlus1)));
    let st = s_of_mu(&theta);
    let j_s_theta = SubsetS::from_indices((0..f).filter(|&i| !st.contains((i + 1) % f)));
    Ok(XiData { delta, j_xi: j_of_lambda(&xi_factor.lambda), xi: xi_factor.lambda, theta, j_theta, j_s_theta })
}

pub fn ell_decomposition(params: &Params, rho: &GaloisParams) -> Result<BTreeMap<usize, Vec<DiamondWeight>>> {
    if !rho.reducible {
        return Err(domain("the ℓ-decomposition is defined for reducible ρ"));
    }
    let mut out: BTreeMap<usize, Vec<DiamondWeight>> = BTreeMap::new();
    for d in diamond_set(params, rho)? {
        out.entry(d.ell).or_default().push(d);
    }
    Ok(out)
}

fn cyc_set(params: &Params, idx: &[i64]) -> SubsetS {
    SubsetS::from_indices(idx.iter().map(|&i| params.idx(i)))
}

/// Pairs `(τ_1, τ_2)` of lifting factors of `D_{0,σ}(ρ)` forming a couple of type `(+1, j)`.
pub fn couples_in_block(
    params: &Params,
    rho: &GaloisParams,
    sigma: &DiamondWeight,
    j: usize,
) -> Result<Vec<(D0Factor, D0Factor)>> {
    let lifting: Vec<D0Factor> = d0_factors(params, rho, sigma)?.into_iter().filter(|x| x.lifts).collect();
    let target = CoupleType { sign: 1, j };
    let mut out = Vec::new();
    for t1 in &lifting {
        for t2 in &lifting {
            if couple_types(params, &t1.weight, &t2.weight).contains(&target) {
                out.push((t1.clone(), t2.clone()));
            }
        }
    }
    Ok(out)
}

fn shape_of_couple(params: &Params, rho: &GaloisParams, sigma: &DiamondWeight, j: usize, t1: &[Sym], t2: &[Sym]) -> bool {
    let f = params.f();
    let jm1 = params.idx(j as i64 - 1);
    let mu_l = mu_of_lambda(rho.family(), &sigma.lambda);
    let off = (0..f).filter(|&i| i != j && i != jm1).all(|i| t1[i] == t2[i]);
    let a = mu_l[j] == Sym::P3MX
        && (t1[jm1], t1[j]) == (Sym::X, Sym::X)
        && (t2[jm1], t2[j]) == (Sym::P2MX, Sym::XPlus1);
    let b = mu_l[j] == Sym::P1MX
        && (t1[jm1], t1[j]) == (Sym::X, Sym::P2MX)
        && (t2[jm1], t2[j]) == (Sym::P2MX, Sym::P1MX);
    off && (a || b)
}

/// Evaluate every clause on the couples of type `(+1, j)` inside `D_{0,σ}(ρ)`: the shape of
/// the `μ`, the digit relations for `θ ∘ λ`, the behaviour of `S_{λ_k}`, of `λ_k`, of `S(θ_k)`,
/// and of `J(ξ_k)`. An empty list means no such couple exists.
pub fn verify_combination(
    params: &Params,
    rho: &GaloisParams,
    sigma: &DiamondWeight,
    j: usize,
) -> Result<Vec<CheckRecord>> {
    let f = params.f();
    let p = params.p() as i64;
    let jm1 = params.idx(j as i64 - 1);
    let mut out = Vec::new();
    for (t1, t2) in couples_in_block(params, rho, sigma, j)? {
        let inst = alloc::format!("p={} {rho} σ={} j={j} τ1={} τ2={}", p, sigma.weight, t1.weight, t2.weight);
        let ctx = |s: &str| -> String { alloc::format!("{inst} [{s}]") };
        out.push(CheckRecord::new(
            "couple μ-shape",
            ctx("shape"),
            "one of the two listed shapes",
            alloc::format!("{} / {}", tuple_to_string(&t1.mu), tuple_to_string(&t2.mu)),
            shape_of_couple(params, rho, sigma, j, &t1.mu, &t2.mu),
        ));
        let x1 = xi_and_j(params, rho, &t1)?;
        let x2 = xi_and_j(params, rho, &t2)?;
        let digits = |x: &XiData| -> Vec<i64> {
            x.theta
                .iter()
                .zip(&x.delta.lambda)
                .zip(&rho.r)
                .map(|((t, l), &r)| t.expr().compose(&l.expr()).eval(params.p(), r))
                .collect()
        };
        let (d1, d2) = (digits(&x1), digits(&x2));
        let mut ok = (0..f).filter(|&i| i != j && i != jm1).all(|i| d1[i] == d2[i]);
        ok &= d1[j] == d2[j] + 1;
        ok &= d1[jm1] + d2[jm1] == p;
        out.push(CheckRecord::new("θ∘λ digit relations", ctx("theta-digits"), "relations hold", alloc::format!("{d1:?} vs {d2:?}"), ok));
        out.push(CheckRecord::eq("S_λ differ on {j-1,j}", ctx("S-lambda"), cyc_set(params, &[j as i64 - 1, j as i64]), x1.delta.s.sym_diff(&x2.delta.s)));
        let differ = SubsetS::from_indices((0..f).filter(|&i| x1.delta.lambda[i] != x2.delta.lambda[i]));
        out.push(CheckRecord::eq(
            "λ differ on {j-2,j-1,j}",
            ctx("lambda"),
            cyc_set(params, &[j as i64 - 2, j as i64 - 1, j as i64]),
            differ,
        ));
        out.push(CheckRecord::eq("S(θ) differ at j-1", ctx("S-theta"), cyc_set(params, &[j as i64 - 1]), s_of_mu(&x1.theta).sym_diff(&s_of_mu(&x2.theta))));
        out.push(CheckRecord::new(
            "J(ξ) three ways",
            ctx("xi-consistency"),
            "J(ξ) = {θ ∈ {y,y+1}} = {i+1 ∉ S(θ)}",
            alloc::format!("{}|{}|{} ; {}|{}|{}", x1.j_xi, x1.j_theta, x1.j_s_theta, x2.j_xi, x2.j_theta, x2.j_s_theta),
            x1.consistent() && x2.consistent(),
        ));
        out.push(CheckRecord::eq("J(ξ) differ at j-2", ctx("J-xi"), cyc_set(params, &[j as i64 - 2]), x1.j_xi.sym_diff(&x2.j_xi)));
    }
    Ok(out)
}

/// The weight of the lemma on special Diamond weights: `f` odd with `ρ` irreducible, or
/// `f ≥ 4` even with `ρ` reducible.
pub fn find_special_sigma(params: &Params, rho: &GaloisParams) -> Result<DiamondWeight> {
    let f = params.f();
    let lambda: Tuple = match (rho.reducible, f) {
        (false, f) if f >= 3 && f % 2 == 1 => (0..f)
            .map(|i| match i {
                0 => Sym::P1MX,
                i if i % 2 == 1 => Sym::XPlus1,
                _ => Sym::P2MX,
            })
            .collect(),
        (true, f) if f >= 4 && f % 2 == 0 => {
            (0..f).map(|i| if i % 2 == 0 { Sym::XPlus1 } else { Sym::P2MX }).collect()
        }
        _ => return Err(domain(alloc::format!("no special weight for f={f}, {rho}"))),
    };
    let set = diamond_set(params, rho)?;
    let sigma = set
        .iter()
        .find(|d| d.lambda == lambda)
        .cloned()
        .ok_or_else(|| Error::Invariant(alloc::format!("{} is not in the family", tuple_to_string(&lambda))))?;
    let ss = sigma_s(params, &sigma.weight);
    if !set.iter().any(|d| d.weight == ss) {
        return Err(Error::Invariant(alloc::format!("σ^[s] = {ss} is not a Diamond weight")));
    }
    if mu_of_lambda(rho.family(), &sigma.lambda).iter().any(|&m| m != Sym::P3MX) {
        return Err(Error::Invariant("μ_λ is not constant p-3-y".into()));
    }
    Ok(sigma)
}

/// The factor `τ_j` of `D_{0,σ}(ρ)` with `μ = (.., y_{j-2}, p-2-y_{j-1}, y_j+1, ..)`.
pub fn special_tau(params: &Params, rho: &GaloisParams, sigma: &DiamondWeight, j: usize) -> Result<Option<D0Factor>> {
    let f = params.f();
    let mut mu = alloc::vec![Sym::X; f];
    mu[params.idx(j as i64 - 1)] = Sym::P2MX;
    mu[j] = Sym::XPlus1;
    Ok(d0_factors(params, rho, sigma)?.into_iter().find(|x| x.mu == mu))
}

/// Weight of `D(ρ)` as a bare `Weight` list, in `S_λ` order.
pub fn diamond_weights(params: &Params, rho: &GaloisParams) -> Result<Vec<Weight>> {
    Ok(diamond_set(params, rho)?.into_iter().map(|d| d.weight).collect())
}

