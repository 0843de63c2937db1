//! Checks of the explicit vector identities and of the module structures, run on the
//! brute-force model and reported as [`CheckRecord`]s.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::field::FqElem;
use super::group::{GroupContext, Subgroup};
use super::linalg::{spin, Matrix, Subspace, Vector};
use super::module::{
    character_module, direct_sum, ej_module, induce, induced_index, pi_twist, ExplicitModule, Level,
};
use super::structure::{
    cosocle, h_eigenspaces, hom_space, i_radical, jh_multiset, quotient_by_non_diamond_socle, restricted_loewy,
    socle, socle_series, unipotent_socle_series, WeightCounts,
};
use crate::error::{domain, Error, Result};
use crate::filtration::{
    epsilon, example1_filtration, f2_tables, jh_of_pi_induced, plus_partner, w_contains_u, w_contents_two_char,
    Side,
};
use crate::diamond::GaloisParams;
use crate::principal_series::{u_contents, PsFactor};
use crate::report::CheckRecord;
use crate::weight::{
    char_normal_form, char_times_alpha_power, chi_of_weight, conjugate_char, weight_dim, ICharacter, Weight,
};

/// Value of a character on `diag([x^i], [x^j])`.
fn char_at(ctx: &GroupContext, psi: &ICharacter, i: u64, j: u64) -> FqElem {
    let fl = &ctx.field;
    let n = (fl.q() - 1) as u64;
    fl.exp((i * psi.a + j * psi.b) % n)
}

/// Whether `v` is an `H`-eigenvector of character `psi`.
fn is_eigen(m: &ExplicitModule, v: &[FqElem], psi: &ICharacter) -> bool {
    let ctx = &m.ctx;
    let fl = &ctx.field;
    [(1, 0), (0, 1)].iter().all(|&(i, j)| {
        let h = ctx.h_element(i, j);
        m.act(&h, v) == fl.vec_scale(v, char_at(ctx, psi, i, j))
    })
}

pub fn counts_to_string(c: &WeightCounts) -> String {
    let parts: Vec<String> =
        c.iter().map(|(w, k)| if *k == 1 { format!("{w}") } else { format!("{w}x{k}") }).collect();
    format!("[{}]", parts.join(", "))
}

fn chars_list(cs: &[ICharacter]) -> String {
    let parts: Vec<String> = cs.iter().map(|c| format!("{c}")).collect();
    format!("[{}]", parts.join(", "))
}

pub fn counts_of(ws: impl IntoIterator<Item = Weight>) -> WeightCounts {
    let mut out: WeightCounts = Vec::new();
    for w in ws {
        if let Some(e) = out.iter_mut().find(|(x, _)| *x == w) {
            e.1 += 1;
        } else {
            out.push((w, 1));
        }
    }
    out.sort();
    out
}

/// `Σ_λ λ^k [k_λ, u]` for a vector `u` of the inducing module.
pub fn lambda_sum_vec(ctx: &GroupContext, u: &[FqElem], k: u64) -> Vector {
    let fl = &ctx.field;
    let d = u.len();
    let mut v = vec![FqElem(0); (fl.q() + 1) * d];
    for lam in fl.elements() {
        let coef = if lam.0 == 0 { FqElem(u16::from(k == 0)) } else { fl.pow(lam, k) };
        for (s, &x) in u.iter().enumerate() {
            v[induced_index(d, lam.0 as usize, s)] = fl.mul(coef, x);
        }
    }
    v
}

/// `[1, u]` in an induced module.
pub fn at_identity(ctx: &GroupContext, u: &[FqElem]) -> Vector {
    let q = ctx.field.q();
    let d = u.len();
    let mut v = vec![FqElem(0); (q + 1) * d];
    for (s, &x) in u.iter().enumerate() {
        v[induced_index(d, q, s)] = x;
    }
    v
}

/// Coordinates of `Ind_I^K` of an `I`-stable subspace of the inducing module.
pub fn induced_subspace(ctx: &GroupContext, inner: &Subspace) -> Subspace {
    let fl = &ctx.field;
    let q = fl.q();
    let d = inner.n;
    let mut out = Subspace::zero((q + 1) * d);
    for rep in 0..=q {
        for b in inner.basis() {
            let mut v = vec![FqElem(0); (q + 1) * d];
            for (s, &x) in b.iter().enumerate() {
                v[induced_index(d, rep, s)] = x;
            }
            out.insert(fl, v);
        }
    }
    out
}

/// `W = Ind_I^K Π(E_j(χ))` with the vectors `f_k`, `F_k`.
#[derive(Clone)]
pub struct EjInduced {
    pub ctx: Arc<GroupContext>,
    pub chi: ICharacter,
    pub j: usize,
    pub module: Arc<ExplicitModule>,
}

impl EjInduced {
    pub fn new(ctx: &Arc<GroupContext>, chi: ICharacter, j: usize) -> Result<Self> {
        if j >= ctx.params().f() {
            return Err(domain(format!("index {j} out of range")));
        }
        let module = Arc::new(induce(&pi_twist(&ej_module(ctx, chi, j))?)?);
        Ok(EjInduced { ctx: ctx.clone(), chi, j, module })
    }

    pub fn f(&self, k: u64) -> Vector {
        lambda_sum_vec(&self.ctx, &[FqElem(1), FqElem(0)], k)
    }

    pub fn big_f(&self, k: u64) -> Vector {
        lambda_sum_vec(&self.ctx, &[FqElem(0), FqElem(1)], k)
    }

    /// `Ind_I^K Π(χ)`, spanned by the `[k, Π(v)]`.
    pub fn sub_chi(&self) -> Subspace {
        let fl = &self.ctx.field;
        induced_subspace(&self.ctx, &Subspace::spanned_by(fl, 2, [vec![FqElem(1), FqElem(0)]]))
    }

    /// `χα^{-p^j}`.
    pub fn psi(&self) -> ICharacter {
        char_times_alpha_power(self.ctx.params(), &self.chi, self.j, -1)
    }

    /// `F_{Σ_{i∈J(θ)} p^i(p-1-θ_i(r'_i))} + ε(ω) η'(-1) [1, Π(w)]`.
    pub fn omega_generator(&self, omega: &PsFactor) -> Vector {
        let params = *self.ctx.params();
        let fl = &self.ctx.field;
        let p = params.p() as u64;
        let k: u64 =
            omega.j.iter().map(|i| params.pow(i as i64) * (p - 1 - omega.weight.r[i] as u64)).sum();
        let mut v = self.big_f(k);
        if epsilon(&params, &self.chi, self.j, &omega.weight) {
            let (_, t) = char_normal_form(&params, &self.psi());
            let sign = fl.pow(fl.neg(fl.one()), t);
            let e = at_identity(&self.ctx, &[FqElem(0), sign]);
            v = fl.vec_add(&v, &e);
        }
        v
    }

    pub fn w_omega(&self, omega: &PsFactor) -> Subspace {
        self.module.spin([self.omega_generator(omega)])
    }
}

fn instance(ctx: &GroupContext, chi: &ICharacter, j: usize) -> String {
    format!("p={} f={} χ={chi} j={j}", ctx.params().p(), ctx.params().f())
}

fn first_failure(fails: &[u64]) -> String {
    match fails.first() {
        None => "all k".into(),
        Some(k) => format!("fails at k={k} ({} failures)", fails.len()),
    }
}

/// The identities for `f_k`, `F_k`: eigencharacters and the three matrix actions, for every k.
pub fn verify_witt(w: &EjInduced) -> Vec<CheckRecord> {
    let ctx = &w.ctx;
    let fl = &ctx.field;
    let params = *ctx.params();
    let q1 = params.qm1();
    let pj = params.pow(w.j as i64);
    let m = &w.module;
    let inst = instance(ctx, &w.chi, w.j);
    let wrap = |k: u64| if k <= q1 { k } else { k - q1 };
    let (mut e1, mut e2, mut e3, mut e4, mut e0) = (vec![], vec![], vec![], vec![], vec![]);
    let g2 = ctx.int_mat(1, params.p() as i64, 0, 1);
    let g3 = ctx.int_mat(1, 0, params.p() as i64, 1);
    let g4 = ctx.int_mat(1 + params.p() as i64, 0, 0, 1);
    let id = ctx.identity();
    for k in 0..=q1 {
        let (fk, bfk) = (w.f(k), w.big_f(k));
        let cf = char_times_alpha_power(&params, &w.chi, 0, -(k as i64));
        let cbf = char_times_alpha_power(&params, &cf, w.j, -1);
        if !(is_eigen(m, &fk, &cf) && is_eigen(m, &bfk, &cbf)) {
            e1.push(k);
        }
        if m.act(&g2, &bfk) != fl.vec_add(&bfk, &fk) {
            e2.push(k);
        }
        if m.act(&g3, &bfk) != fl.vec_sub(&bfk, &w.f(wrap(k + 2 * pj))) {
            e3.push(k);
        }
        if m.act(&g4, &bfk) != fl.vec_add(&bfk, &w.f(wrap(k + pj))) {
            e4.push(k);
        }
        if m.act(&id, &bfk) != bfk {
            e0.push(k);
        }
    }
    [
        ("F_k, f_k are H-eigenvectors of characters χα^{-k-p^j}, χα^{-k}", e1),
        ("(1 p; 0 1) F_k = F_k + f_k", e2),
        ("(1 0; p 1) F_k = F_k - f_{k+2p^j}", e3),
        ("(1+p 0; 0 1) F_k = F_k + f_{k+p^j}", e4),
        ("identity fixes F_k", e0),
    ]
    .into_iter()
    .map(|(a, e)| CheckRecord::new(a, inst.clone(), "all k", first_failure(&e), e.is_empty()))
    .collect()
}

/// One term of a combination of the `F_k` and `f_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Term {
    pub big: bool,
    pub k: u64,
    pub coef: FqElem,
}

/// Every vector with a nonzero coefficient in `R` lies in the `I`-span of `R`.
pub fn verify_calcul_h(w: &EjInduced, terms: &[Term]) -> Vec<CheckRecord> {
    let fl = &w.ctx.field;
    let n = w.module.dim;
    let mut r = vec![FqElem(0); n];
    let mut coef: Vec<((bool, u64), FqElem)> = Vec::new();
    for t in terms {
        let v = if t.big { w.big_f(t.k) } else { w.f(t.k) };
        fl.axpy(&mut r, t.coef, &v);
        match coef.iter_mut().find(|(key, _)| *key == (t.big, t.k)) {
            Some(e) => e.1 = fl.add(e.1, t.coef),
            None => coef.push(((t.big, t.k), t.coef)),
        }
    }
    let span = spin(fl, &w.module.gens(Subgroup::I), [r], n);
    let label: Vec<String> = coef
        .iter()
        .filter(|(_, c)| c.0 != 0)
        .map(|((big, k), c)| format!("{}·{}_{k}", c.0, if *big { "F" } else { "f" }))
        .collect();
    let inst = format!("{} R={}", instance(&w.ctx, &w.chi, w.j), label.join("+"));
    coef.iter()
        .filter(|(_, c)| c.0 != 0)
        .map(|((big, k), _)| {
            let v = if *big { w.big_f(*k) } else { w.f(*k) };
            let ok = span.contains(fl, &v);
            CheckRecord::new(
                "nonzero terms of R lie in <I·R>",
                inst.clone(),
                format!("{}_{k} ∈ <I·R>", if *big { "F" } else { "f" }),
                if ok { "member" } else { "not a member" },
                ok,
            )
        })
        .collect()
}

fn digitwise_le(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// `<U^+ f_k>` has the basis `f_{k'}` with `k' ≤ k` digitwise and is `I`-stable; `<U^+ F_k>`
/// contains the `f_{k'}` with `k'_{j-1}` free and `k'_i ≤ k_i` otherwise.
pub fn verify_uplus(w: &EjInduced, k: u64) -> Vec<CheckRecord> {
    let ctx = &w.ctx;
    let fl = &ctx.field;
    let params = *ctx.params();
    let n = w.module.dim;
    let kd = params.digits(k);
    let jm1 = params.idx(w.j as i64 - 1);
    let up = w.module.gens(Subgroup::UPlus);
    let inst = format!("{} k={k}", instance(ctx, &w.chi, w.j));
    let s1 = spin(fl, &up, [w.f(k)], n);
    let expected = Subspace::spanned_by(
        fl,
        n,
        (0..=params.qm1()).filter(|&kp| digitwise_le(&params.digits(kp), &kd)).map(|kp| w.f(kp)),
    );
    let stable = spin(fl, &w.module.gens(Subgroup::I), s1.basis().iter().cloned(), n).dim() == s1.dim();
    let s2 = spin(fl, &up, [w.big_f(k)], n);
    let missing: Vec<u64> = (0..=params.qm1())
        .filter(|&kp| {
            let d = params.digits(kp);
            (0..params.f()).all(|i| i == jm1 || d[i] <= kd[i])
        })
        .filter(|&kp| !s2.contains(fl, &w.f(kp)))
        .collect();
    vec![
        CheckRecord::new(
            "<U+ f_k> has basis f_{k'}, k' ≤ k digitwise",
            inst.clone(),
            format!("dim {}", expected.dim()),
            format!("dim {}, equal: {}", s1.dim(), s1 == expected),
            s1 == expected,
        ),
        CheckRecord::new("<U+ f_k> is I-stable", inst.clone(), true, stable, stable),
        CheckRecord::new(
            "<U+ F_k> contains f_{k'} with k'_{j-1} free",
            inst,
            "all present",
            if missing.is_empty() { "all present".into() } else { format!("missing {missing:?}") },
            missing.is_empty(),
        ),
    ]
}

/// `R_0 = Σ [k_λ, w]` and `R_{q-1}` in `Ind_I^K E_j(χ)` (no `Π`-twist); needs `r'_j ≤ p-2`.
pub fn verify_ind_ej(ctx: &Arc<GroupContext>, chi: ICharacter, j: usize) -> Result<Vec<CheckRecord>> {
    let params = *ctx.params();
    let fl = &ctx.field;
    let p = params.p();
    let psi = char_times_alpha_power(&params, &chi, j, -1);
    let (rp, eta) = char_normal_form(&params, &psi);
    if rp[j] > p - 2 {
        return Err(domain(format!("r'_{j} = {} > p-2 for χ={chi}", rp[j])));
    }
    let ind = Arc::new(induce(&ej_module(ctx, chi, j))?);
    let n = ind.dim;
    let q1 = params.qm1();
    let wv = [FqElem(0), FqElem(1)];
    let r0 = lambda_sum_vec(ctx, &wv, 0);
    let rq = lambda_sum_vec(ctx, &wv, q1);
    let inst = instance(ctx, &chi, j);
    let fixed = ind.gens(Subgroup::I1).iter().all(|g| fl.mat_vec(g, &r0) == r0);
    let sub = ind.spin([r0.clone()]);
    let flipped: Vec<i64> = rp.iter().map(|&x| (p - 1 - x) as i64).collect();
    let twist = params.weighted_sum(&rp.iter().map(|&x| x as i64).collect::<Vec<_>>()) + eta as i64;
    let expected = Weight::from_signed(&params, &flipped, twist)
        .ok_or_else(|| Error::Invariant("flipped digits out of range".into()))?;
    let soc = socle(&ind.submodule(&sub)?)?;
    let irreducible = soc.factors == vec![(expected.clone(), 1)] && soc.space.dim() == sub.dim();
    let full = ind.spin([rq.clone()]).dim();
    let s = ctx.int_mat(0, 1, 1, 0);
    let lhs = ind.act(&s, &at_identity(ctx, &wv));
    let rhs = fl.vec_sub(&r0, &rq);
    Ok(vec![
        CheckRecord::new("R_0 is I_1-fixed", inst.clone(), true, fixed, fixed),
        CheckRecord::new(
            "<K·R_0> is irreducible of the flipped weight",
            inst.clone(),
            format!("{expected}, dim {}", weight_dim(&expected)),
            format!("{}, dim {}", counts_to_string(&soc.factors), sub.dim()),
            irreducible,
        ),
        CheckRecord::eq("<K·R_{q-1}> is everything", inst.clone(), n, full),
        CheckRecord::new("(0 1; 1 0)[1,w] = R_0 - R_{q-1}", inst, true, lhs == rhs, lhs == rhs),
    ])
}

/// `W_ω` against the predicted cosocle, image and contents.
pub fn verify_w_omega(w: &EjInduced, omega: &PsFactor) -> Result<Vec<CheckRecord>> {
    let ctx = &w.ctx;
    let fl = &ctx.field;
    let params = *ctx.params();
    let m = &w.module;
    let psi = w.psi();
    let inst = format!("{} ω={}", instance(ctx, &w.chi, w.j), omega.weight);
    let wo = w.w_omega(omega);
    let sub = Arc::new(m.submodule(&wo)?);
    let mut out = Vec::new();
    let cos = cosocle(&sub)?;
    out.push(CheckRecord::eq(
        "cosocle of W_ω is ω",
        inst.clone(),
        counts_to_string(&vec![(omega.weight.clone(), 1)]),
        counts_to_string(&cos),
    ));
    let x = w.sub_chi();
    let inter = wo.intersect(fl, &x);
    let image = Arc::new(m.section(&inter, &wo)?);
    let expected_image = counts_of(u_contents(&params, omega, &conjugate_char(&psi))?.into_iter().map(|f| f.weight));
    out.push(CheckRecord::eq(
        "W_ω modulo Ind Π(χ) is U(ω)",
        inst.clone(),
        counts_to_string(&expected_image),
        counts_to_string(&jh_multiset(&image)?),
    ));
    let inside = jh_multiset(&Arc::new(m.submodule(&inter)?))?;
    for tau in jh_of_pi_induced(&params, &w.chi) {
        let predicted = w_contains_u(&params, &w.chi, w.j, omega, &tau)?;
        let found = inside.iter().any(|(x, _)| *x == tau.weight);
        out.push(CheckRecord::new(
            "U(τ) ⊆ W_ω as predicted",
            format!("{inst} τ={} J(τ)={}", tau.weight, tau.j),
            predicted,
            found,
            predicted == found,
        ));
    }
    if params.f() == 1 {
        let all = x.is_subspace_of(fl, &wo);
        out.push(CheckRecord::new("f = 1: W_ω contains Ind Π(χ)", inst, true, all, all));
    }
    Ok(out)
}

/// `E_j(χ, s)`: the `I`-span of `f_{p^j s}` inside `Ind_I^K Π(χ)`.
pub fn ej_chain_module(ctx: &Arc<GroupContext>, chi: ICharacter, j: usize, s: u32) -> Result<ExplicitModule> {
    let params = *ctx.params();
    if s > params.p() - 1 {
        return Err(domain(format!("s = {s} > p-1")));
    }
    let ind = Arc::new(induce(&pi_twist(&character_module(ctx, chi))?)?.restrict_to_i());
    let v = lambda_sum_vec(ctx, &[FqElem(1)], params.pow(j as i64) * s as u64);
    let span = ind.spin([v]);
    ind.submodule(&span)?.with_level(Level::K1)
}

/// `E_{j-1}(χ, χ', s+1)`, the kernel of `E_{j-1}(χ, s+1) ⊕ E_j(χ') → χα^{-p^{j-1}(s+1)}`.
pub fn e_two_char_module(
    ctx: &Arc<GroupContext>,
    chi: ICharacter,
    chi2: ICharacter,
    j: usize,
    s1: u32,
) -> Result<ExplicitModule> {
    let params = *ctx.params();
    let f = params.f();
    if j >= f {
        return Err(domain(format!("index {j} out of range")));
    }
    if s1 == 0 || s1 > params.p() - 1 {
        return Err(domain(format!("s+1 = {s1} outside [1, p-1]")));
    }
    let jm1 = params.idx(j as i64 - 1);
    let corner = char_times_alpha_power(&params, &chi, jm1, -(s1 as i64));
    if corner != char_times_alpha_power(&params, &chi2, j, -1) {
        return Err(domain(format!("{chi}α^(-p^{jm1}·{s1}) ≠ {chi2}α^(-p^{j})")));
    }
    let a = ej_chain_module(ctx, chi, jm1, s1)?;
    let b = ej_module(ctx, chi2, j);
    let c = character_module(ctx, corner);
    let h1 = hom_space(&a, &c)?;
    let h2 = hom_space(&b, &c)?;
    if h1.len() != 1 || h2.len() != 1 {
        return Err(Error::Invariant(format!("projections onto the corner: {} and {}", h1.len(), h2.len())));
    }
    let fl = &ctx.field;
    let mut row = Matrix::zero(1, a.dim + b.dim);
    for i in 0..a.dim {
        row.set(0, i, h1[0].get(0, i));
    }
    for i in 0..b.dim {
        row.set(0, a.dim + i, fl.neg(h2[0].get(0, i)));
    }
    let sum = Arc::new(direct_sum(&a, &b)?);
    let kernel = Subspace::spanned_by(fl, sum.dim, fl.kernel(&row));
    sum.submodule(&kernel)
}

/// The unique `H`-eigenvector (up to scalar) of character `psi`.
pub fn eigenvector(m: &ExplicitModule, psi: &ICharacter) -> Result<Vector> {
    let all = h_eigenspaces(m, &Subspace::whole(m.dim));
    let (_, s) = all
        .into_iter()
        .find(|(c, _)| c == psi)
        .ok_or_else(|| domain(format!("{psi} does not occur")))?;
    if s.dim() != 1 {
        return Err(domain(format!("{psi} occurs {} times", s.dim())));
    }
    Ok(s.basis()[0].clone())
}

fn layer_characters(m: &ExplicitModule, series: &[Subspace]) -> Vec<Vec<(ICharacter, usize)>> {
    let fl = &m.ctx.field;
    let mut prev = Subspace::zero(m.dim);
    let mut out = Vec::new();
    let all = h_eigenspaces(m, &Subspace::whole(m.dim));
    for s in series {
        let mut layer = Vec::new();
        for (c, e) in &all {
            let grow = prev.sum(fl, &e.intersect(fl, s)).dim() - prev.dim();
            if grow > 0 {
                layer.push((*c, grow));
            }
        }
        out.push(layer);
        prev = s.clone();
    }
    out
}

fn chars_to_string(layers: &[Vec<(ICharacter, usize)>]) -> String {
    let parts: Vec<String> = layers
        .iter()
        .map(|l| l.iter().map(|(c, k)| if *k == 1 { format!("{c}") } else { format!("{c}x{k}") }).collect::<Vec<_>>().join("+"))
        .collect();
    parts.join(" — ")
}

/// `E_j(χ, s)` is uniserial of dimension `s+1` with layers `χ, χα^{-p^j}, …`.
pub fn verify_ej_chain(ctx: &Arc<GroupContext>, chi: ICharacter, j: usize, s: u32) -> Result<Vec<CheckRecord>> {
    let params = *ctx.params();
    let m = ej_chain_module(ctx, chi, j, s)?;
    let inst = format!("{} s={s}", instance(ctx, &chi, j));
    let series = unipotent_socle_series(&m, Subgroup::I1);
    let got = layer_characters(&m, &series);
    let expected: Vec<Vec<(ICharacter, usize)>> = (0..=s)
        .map(|i| vec![(char_times_alpha_power(&params, &chi, j, -(i as i64)), 1)])
        .collect();
    let mut out = vec![
        CheckRecord::eq("dim E_j(χ,s) = s+1", inst.clone(), s as usize + 1, m.dim),
        CheckRecord::eq("socle layers of E_j(χ,s)", inst.clone(), chars_to_string(&expected), chars_to_string(&got)),
        CheckRecord::eq("U+ Loewy length of E_j(χ,s)", inst.clone(), s as usize + 1, restricted_loewy(&m, Subgroup::UPlus)),
    ];
    if s == 1 {
        let e = ej_module(ctx, chi, j);
        let homs = hom_space(&e, &m)?;
        let iso = homs.iter().any(|h| ctx.field.rank(h) == 2);
        out.push(CheckRecord::new("E_j(χ,1) ≅ E_j(χ)", inst, true, iso, iso));
    }
    Ok(out)
}

/// Dimension, multiplicity one, socle and cosocle, and the `U^+` Loewy length of
/// `E_{j-1}(χ, χ', s+1)`.
pub fn verify_e_two_char(
    ctx: &Arc<GroupContext>,
    chi: ICharacter,
    chi2: ICharacter,
    j: usize,
    s1: u32,
) -> Result<Vec<CheckRecord>> {
    let params = *ctx.params();
    let m = Arc::new(e_two_char_module(ctx, chi, chi2, j, s1)?);
    let inst = format!("{} χ'={chi2} s+1={s1}", instance(ctx, &chi, j));
    let all = h_eigenspaces(&m, &Subspace::whole(m.dim));
    let mult1 = all.iter().all(|(_, e)| e.dim() == 1);
    let series = unipotent_socle_series(&m, Subgroup::I1);
    let layers = layer_characters(&m, &series);
    let jm1 = params.idx(j as i64 - 1);
    let corner = char_times_alpha_power(&params, &chi, jm1, -(s1 as i64));
    let mut soc: Vec<ICharacter> = layers.first().map(|l| l.iter().map(|(c, _)| *c).collect()).unwrap_or_default();
    soc.sort();
    let mut expected_soc = vec![chi, chi2];
    expected_soc.sort();
    let top = eigenvector(&m, &corner)?;
    let generates = m.spin([top]).dim() == m.dim;
    let rad = i_radical(&m);
    let cos_dim = m.dim - rad.dim();
    let chain: Vec<ICharacter> = (0..s1).map(|i| char_times_alpha_power(&params, &chi, jm1, -(i as i64))).collect();
    let chain_ok = chain.iter().enumerate().all(|(i, c)| {
        layers.get(i).is_some_and(|l| l.iter().any(|(x, _)| x == c))
    });
    Ok(vec![
        CheckRecord::eq("dim E_{j-1}(χ,χ',s+1) = s+3", inst.clone(), s1 as usize + 2, m.dim),
        CheckRecord::new("multiplicity one", inst.clone(), true, mult1, mult1),
        CheckRecord::eq(
            "socle is χ ⊕ χ'",
            inst.clone(),
            chars_list(&expected_soc),
            chars_list(&soc),
        ),
        CheckRecord::new(
            "cosocle is the corner character",
            inst.clone(),
            format!("{corner}, 1-dim"),
            format!("generated by it: {generates}, cosocle dim {cos_dim}"),
            generates && cos_dim == 1,
        ),
        CheckRecord::new(
            "socle layers follow the chain χα^{-p^{j-1}i}",
            inst.clone(),
            chars_to_string(&chain.iter().map(|c| vec![(*c, 1)]).collect::<Vec<_>>()),
            chars_to_string(&layers),
            chain_ok && layers.len() == s1 as usize + 1,
        ),
        CheckRecord::eq("U+ Loewy length = s+2", inst, s1 as usize + 1, restricted_loewy(&m, Subgroup::UPlus)),
    ])
}

/// The quantities in the sufficient condition `r^+(<I·v>) > max(r^-(M), r^+(ker β))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct S1Data {
    pub r_plus_v: usize,
    pub r_minus_m: usize,
    pub r_plus_ker: usize,
}

impl S1Data {
    pub fn holds(&self) -> bool {
        self.r_plus_v > self.r_minus_m.max(self.r_plus_ker)
    }
}

/// `ker β`: the radical, the other `H`-eigenspaces and a complement of `v` in its own.
pub fn kernel_beta(m: &ExplicitModule, v: &[FqElem]) -> Result<Subspace> {
    let fl = &m.ctx.field;
    let rad = i_radical(m);
    if rad.contains(fl, v) {
        return Err(domain("v lies in the radical"));
    }
    let all = h_eigenspaces(m, &Subspace::whole(m.dim));
    let (own, others): (Vec<_>, Vec<_>) = all.into_iter().partition(|(_, e)| e.contains(fl, v));
    if own.is_empty() {
        return Err(domain("v is not an H-eigenvector"));
    }
    let mut k = rad;
    for (_, e) in &others {
        k = k.sum(fl, e);
    }
    for b in own[0].1.basis() {
        let mut t = k.clone();
        t.insert(fl, b.clone());
        if !t.contains(fl, v) {
            k = t;
        }
    }
    Ok(k)
}

pub fn s1_data(m: &Arc<ExplicitModule>, v: &[FqElem]) -> Result<S1Data> {
    let kb = kernel_beta(m, v)?;
    let gen = m.spin([v.to_vec()]);
    Ok(S1Data {
        r_plus_v: restricted_loewy(&m.submodule(&gen)?, Subgroup::UPlus),
        r_minus_m: restricted_loewy(m, Subgroup::UMinus),
        r_plus_ker: restricted_loewy(&m.submodule(&kb)?, Subgroup::UPlus),
    })
}

pub fn verify_s1_condition(m: &Arc<ExplicitModule>, v: &[FqElem]) -> Result<bool> {
    Ok(s1_data(m, v)?.holds())
}

fn s1_record(anchor: &str, inst: String, d: &S1Data) -> CheckRecord {
    CheckRecord::new(
        anchor,
        inst,
        "r+(<I·v>) > max(r-(M), r+(ker β))",
        format!("{} > max({}, {})", d.r_plus_v, d.r_minus_m, d.r_plus_ker),
        d.holds(),
    )
}

/// `(M_τ, v_τ)` with `M_τ = E_{j-1}(χ_σ, χ_τ, r_{j-1}+1)` and `v_τ` its corner vector.
pub fn verify_s1_special(ctx: &Arc<GroupContext>, sigma: &Weight, tau: &Weight, j: usize) -> Result<Vec<CheckRecord>> {
    let params = *ctx.params();
    let jm1 = params.idx(j as i64 - 1);
    let s1 = sigma.r[jm1] + 1;
    let (cs, ct) = (chi_of_weight(&params, sigma), chi_of_weight(&params, tau));
    let m = Arc::new(e_two_char_module(ctx, cs, ct, j, s1)?);
    let corner = char_times_alpha_power(&params, &ct, j, -1);
    let v = eigenvector(&m, &corner)?;
    let d = s1_data(&m, &v)?;
    let inst = format!("p={} f={} σ={sigma} τ={tau} j={j}", params.p(), params.f());
    Ok(vec![
        s1_record("(S1) for (M_τ, v_τ)", inst.clone(), &d),
        CheckRecord::eq("r-(M_τ) = 1", inst, 1, d.r_minus_m),
    ])
}

/// `(M_1, v_1)` with `M_1 = E_0(χ_2, χ_1^s, r_0)` in the case `f = 2`, `ρ` irreducible.
pub fn verify_s1_f2(ctx: &Arc<GroupContext>, rho: &GaloisParams) -> Result<Vec<CheckRecord>> {
    let params = *ctx.params();
    let tables = f2_tables(&params, rho)?;
    let chi = |k: usize| chi_of_weight(&params, &tables.rows[k].sigma);
    let c2 = chi(1);
    let c1s = conjugate_char(&chi(0));
    let r0 = rho.r[0] as u32;
    let m = Arc::new(e_two_char_module(ctx, c2, c1s, 1, r0)?);
    let corner = char_times_alpha_power(&params, &c2, 0, -(r0 as i64));
    let v = eigenvector(&m, &corner)?;
    let d = s1_data(&m, &v)?;
    let inst = format!("p={} {rho}", params.p());
    Ok(vec![
        CheckRecord::eq("v_1 has character χ_3", inst.clone(), chi(2), corner),
        CheckRecord::eq("r+(M_1) = r_0+1", inst.clone(), r0 as usize + 1, d.r_plus_v),
        s1_record("(S1) for (M_1, v_1)", inst, &d),
    ])
}

/// Contents of `W_ω ⊆ Ind_I^K Π(E_{j-1}(χ_σ, χ_τ, r_{j-1}+1))` for `ω` a factor of `Ind Π` of the
/// corner character, against the two-character predicates; with `J(ω) = ∅` also against the
/// displayed diagram.
pub fn verify_two_char_w_omega(ctx: &Arc<GroupContext>, sigma: &Weight, j: usize) -> Result<Vec<CheckRecord>> {
    let params = *ctx.params();
    let fl = &ctx.field;
    let tau = plus_partner(&params, sigma, j).ok_or_else(|| domain(format!("{sigma} has no (+1,{j}) partner")))?;
    let jm1 = params.idx(j as i64 - 1);
    let s1 = sigma.r[jm1] + 1;
    let (cs, ct) = (chi_of_weight(&params, sigma), chi_of_weight(&params, &tau));
    let m = Arc::new(e_two_char_module(ctx, cs, ct, j, s1)?);
    let psi = char_times_alpha_power(&params, &cs, jm1, -(s1 as i64));
    let v_psi = eigenvector(&m, &psi)?;
    let w = Arc::new(induce(&pi_twist(&m)?)?);
    let line = |c: &ICharacter| -> Result<Subspace> {
        Ok(induced_subspace(ctx, &Subspace::spanned_by(fl, m.dim, [eigenvector(&m, c)?])))
    };
    let (x_sigma, x_tau) = (line(&cs)?, line(&ct)?);
    let (rpsi, eta) = char_normal_form(&params, &psi);
    let _ = rpsi;
    let p = params.p() as u64;
    let mut out = Vec::new();
    for omega in jh_of_pi_induced(&params, &psi) {
        let k: u64 = omega.j.iter().map(|i| params.pow(i as i64) * (p - 1 - omega.weight.r[i] as u64)).sum();
        let mut gen = lambda_sum_vec(ctx, &v_psi, k);
        if psi.is_s_fixed() && weight_dim(&omega.weight) == 1 {
            let sign = fl.pow(fl.neg(fl.one()), eta);
            gen = fl.vec_add(&gen, &at_identity(ctx, &fl.vec_scale(&v_psi, sign)));
        }
        let wo = w.spin([gen]);
        let sub = Arc::new(w.submodule(&wo)?);
        let inst = format!("p={} f={} σ={sigma} j={j} ω={}", params.p(), params.f(), omega.weight);
        out.push(CheckRecord::eq(
            "cosocle of W_ω is ω",
            inst.clone(),
            counts_to_string(&vec![(omega.weight.clone(), 1)]),
            counts_to_string(&cosocle(&sub)?),
        ));
        for (side, xs, home) in [(Side::Sigma, &x_sigma, cs), (Side::Tau, &x_tau, ct)] {
            let inside = jh_multiset(&Arc::new(w.submodule(&wo.intersect(fl, xs))?))?;
            for fct in jh_of_pi_induced(&params, &home) {
                let predicted = w_contents_two_char(&params, sigma, j, &omega, &fct, side)?;
                let found = inside.iter().any(|(x, _)| *x == fct.weight);
                out.push(CheckRecord::new(
                    match side {
                        Side::Sigma => "U(σ') ⊆ W_ω as predicted",
                        Side::Tau => "U(τ') ⊆ W_ω as predicted",
                    },
                    format!("{inst} factor={} J={}", fct.weight, fct.j),
                    predicted,
                    found,
                    predicted == found,
                ));
            }
        }
        if omega.j.is_empty() {
            if let Ok(ex) = example1_filtration(&params, sigma, j) {
                let expected = counts_of(ex.layers.weights().cloned());
                let got = jh_multiset(&sub)?;
                out.push(CheckRecord::eq(
                    "W_ω has the factors of the displayed diagram",
                    inst.clone(),
                    counts_to_string(&expected),
                    counts_to_string(&got),
                ));
                out.push(CheckRecord::eq("ω of the diagram", inst, ex.omega.clone(), omega.weight.clone()));
            }
        }
    }
    Ok(out)
}

/// The socle layers of a `K`-module as a display string.
pub fn socle_layers_string(m: &Arc<ExplicitModule>) -> Result<String> {
    let (layers, _) = socle_series(m)?;
    Ok(layers.iter().map(counts_to_string).collect::<Vec<_>>().join(" — "))
}

/// The case `f = 2`, `ρ` irreducible: the image of `W_ω ⊆ Ind_I^K Π(E_1(χ_3))` with socle `σ_4`,
/// and the `I`-module `M_2` generated by the image of `F_{p(p-3-r_1)}`. The vectors
/// `f_k`, `F_k` are those of `E_1(χ_3)`, the extension whose index matches them.
pub fn verify_f2_sub_rep(ctx: &Arc<GroupContext>, rho: &GaloisParams) -> Result<Vec<CheckRecord>> {
    let params = *ctx.params();
    let fl = &ctx.field;
    let tables = f2_tables(&params, rho)?;
    let omega_w = tables.omega.clone().ok_or_else(|| domain("ω is not a weight for r_1 = p-3"))?;
    let sig = |k: usize| tables.rows[k].sigma.clone();
    let chi3 = chi_of_weight(&params, &sig(2));
    let chi4 = chi_of_weight(&params, &sig(3));
    let p = params.p() as u64;
    let (r0, r1) = (rho.r[0] as u64, rho.r[1] as u64);
    let w = EjInduced::new(ctx, chi3, 1)?;
    let inst = format!("p={} {rho}", params.p());
    let mut out = Vec::new();
    let omega = jh_of_pi_induced(&params, &w.psi())
        .into_iter()
        .find(|x| x.weight == omega_w)
        .ok_or_else(|| Error::Invariant(format!("{omega_w} is not a factor of Ind Π(χ_3α^-p)")))?;
    let wo = w.w_omega(&omega);
    let contains_all = w.sub_chi().is_subspace_of(fl, &wo);
    out.push(CheckRecord::new("W_ω contains Ind Π(χ_3)", inst.clone(), true, contains_all, contains_all));
    let sub = Arc::new(w.module.submodule(&wo)?);
    let (bar, killed) = quotient_by_non_diamond_socle(&sub, &[sig(3)])?;
    let bar = Arc::new(bar);
    let (layers, _) = socle_series(&bar)?;
    let expected = vec![
        vec![(sig(3), 1)],
        vec![(crate::weight::sigma_s(&params, &sig(2)), 1)],
        vec![(omega_w.clone(), 1)],
    ];
    out.push(CheckRecord::eq(
        "image of W_ω is σ_4 — σ_3^[s] — ω",
        inst.clone(),
        expected.iter().map(counts_to_string).collect::<Vec<_>>().join(" — "),
        layers.iter().map(counts_to_string).collect::<Vec<_>>().join(" — "),
    ));
    // M_2 inside the image
    let to_bar = |v: Vector| -> Vector { bar.project_from_parent(&sub.project_from_parent(&v).expect("in W_ω")).expect("whole") };
    let _ = &killed;
    let bar_i = Arc::new(bar.restrict_to_i());
    let v_omega = to_bar(w.big_f(p * (p - 3 - r1)));
    let m2_span = bar_i.spin([v_omega.clone()]);
    let m2 = Arc::new(bar_i.submodule(&m2_span)?);
    let mut listed: Vec<Vector> = Vec::new();
    for d0 in (p - 1 - r0)..p {
        listed.push(to_bar(w.f(d0 + p * (p - 3 - r1))));
    }
    listed.push(to_bar(w.f(p * (p - 2 - r1))));
    listed.push(to_bar(w.f(p * (p - 1 - r1))));
    listed.push(to_bar(w.big_f(p * (p - 4 - r1))));
    listed.push(v_omega.clone());
    let listed_span = Subspace::spanned_by(fl, bar.dim, listed);
    out.push(CheckRecord::eq("dim M_2 = r_0+5", inst.clone(), r0 as usize + 5, m2.dim));
    out.push(CheckRecord::new(
        "M_2 is spanned by the listed vectors",
        inst.clone(),
        true,
        listed_span == m2_span,
        listed_span == m2_span,
    ));
    let v_char = is_eigen(&bar_i, &v_omega, &chi4);
    out.push(CheckRecord::new("v_ω has character χ_4", inst.clone(), true, v_char, v_char));
    out.push(CheckRecord::eq("r+(M_2) = r_0+2", inst.clone(), r0 as usize + 2, restricted_loewy(&m2, Subgroup::UPlus)));
    out.push(CheckRecord::eq("r-(M_2) = 2", inst.clone(), 2, restricted_loewy(&m2, Subgroup::UMinus)));
    let series = unipotent_socle_series(&m2, Subgroup::I1);
    let top = if series.len() > r0 as usize {
        let q = m2.quotient(&series[r0 as usize - 1])?;
        let mut cs: Vec<ICharacter> =
            h_eigenspaces(&q, &Subspace::whole(q.dim)).into_iter().flat_map(|(c, e)| vec![c; e.dim()]).collect();
        cs.sort();
        cs
    } else {
        Vec::new()
    };
    let absent = !top.is_empty() && !top.contains(&chi3);
    out.push(CheckRecord::new("χ_3 does not occur in M_2 / soc^{r_0} M_2", inst.clone(), true, absent, absent));
    let mut want = vec![chi4, char_times_alpha_power(&params, &conjugate_char(&chi3), 0, -(r0 as i64))];
    want.sort();
    out.push(CheckRecord::eq(
        "M_2 / soc^{r_0} M_2 = χ_4 ⊕ χ_3^s α^{-r_0}",
        inst.clone(),
        chars_list(&want),
        chars_list(&top),
    ));
    // M_2' = <e_4, e_ω> ≅ Π(E_1(χ_4^s))
    let e4 = to_bar(w.f(p * (p - 2 - r1)));
    let e_om = to_bar(w.big_f(p * (p - 4 - r1)));
    let m2p_span = Subspace::spanned_by(fl, bar.dim, [e4, e_om]);
    let stable = bar_i.spin(m2p_span.basis().iter().cloned()).dim() == 2;
    let iso = if stable {
        let m2p = bar_i.submodule(&m2p_span)?;
        let model = pi_twist(&ej_module(ctx, conjugate_char(&chi4), 1))?;
        hom_space(&model, &m2p)?.iter().any(|h| fl.rank(h) == 2)
    } else {
        false
    };
    out.push(CheckRecord::new("<e_4, e_ω> ≅ Π(E_1(χ_4^s))", inst, true, iso, iso));
    Ok(out)
}
