//! Explicit finite-dimensional representations of `K/K_2` and `I/I_2` over `F_q`.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::field::FqElem;
use super::group::{GroupContext, Mat2, Subgroup};
use super::linalg::{spin, Matrix, Subspace, Vector};
use crate::error::{domain, Result};
use crate::weight::{char_times_alpha_power, ICharacter, Weight};

/// The group a module is defined over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    K,
    I,
}

/// A normal subgroup on which the module is known to be trivial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    /// Trivial on `K_1` (or `K_1 ∩ I`).
    K1,
    /// Trivial on `(1+p O, O; p^2 O, 1+p O)`, the `Π`-conjugate of `K_1`.
    PiK1,
    /// Trivial on `K_2` only.
    K2,
}

type EvalFn = dyn Fn(&GroupContext, &Mat2) -> Matrix + Send + Sync;

#[derive(Clone)]
enum Body {
    Eval(Arc<EvalFn>),
    /// `B / A` inside `parent`: `a` is a submodule, `c` a complement of `a` in `B`, reduced mod `a`.
    Section { parent: Arc<ExplicitModule>, a: Subspace, c: Subspace },
}

/// A representation given by an evaluator `g ↦ ρ(g)`.
#[derive(Clone)]
pub struct ExplicitModule {
    pub ctx: Arc<GroupContext>,
    pub dim: usize,
    pub domain: Domain,
    pub level: Level,
    body: Body,
}

impl core::fmt::Debug for ExplicitModule {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("ExplicitModule")
            .field("dim", &self.dim)
            .field("domain", &self.domain)
            .field("level", &self.level)
            .finish()
    }
}

impl ExplicitModule {
    pub fn from_fn(
        ctx: &Arc<GroupContext>,
        dim: usize,
        domain: Domain,
        level: Level,
        eval: impl Fn(&GroupContext, &Mat2) -> Matrix + Send + Sync + 'static,
    ) -> Self {
        ExplicitModule { ctx: ctx.clone(), dim, domain, level, body: Body::Eval(Arc::new(eval)) }
    }

    /// `ρ(g)`.
    pub fn eval(&self, g: &Mat2) -> Matrix {
        match &self.body {
            Body::Eval(f) => f(&self.ctx, g),
            Body::Section { parent, a, c } => {
                let fl = &self.ctx.field;
                let r = parent.eval(g);
                let cols: Vec<Vector> = c
                    .basis()
                    .iter()
                    .map(|v| {
                        let y = a.reduce(fl, fl.mat_vec(&r, v));
                        c.coords(fl, &y).expect("section is stable")
                    })
                    .collect();
                Matrix::from_columns(self.dim, &cols)
            }
        }
    }

    /// `g · v`.
    pub fn act(&self, g: &Mat2, v: &[FqElem]) -> Vector {
        match &self.body {
            Body::Eval(f) => self.ctx.field.mat_vec(&f(&self.ctx, g), v),
            Body::Section { parent, a, c } => {
                let fl = &self.ctx.field;
                let y = parent.act(g, &lift_along(fl, v, c));
                c.coords(fl, &a.reduce(fl, y)).expect("section is stable")
            }
        }
    }

    /// For a section `B / A` of a parent module: a preimage in the parent of the vector `v`.
    pub fn lift_to_parent(&self, v: &[FqElem]) -> Option<Vector> {
        match &self.body {
            Body::Section { c, .. } => Some(lift_along(&self.ctx.field, v, c)),
            Body::Eval(_) => None,
        }
    }

    /// For a section `B / A`: the image of a parent vector, if it lies in `B`.
    pub fn project_from_parent(&self, v: &[FqElem]) -> Option<Vector> {
        match &self.body {
            Body::Section { a, c, .. } => {
                let fl = &self.ctx.field;
                c.coords(fl, &a.reduce(fl, v.to_vec()))
            }
            Body::Eval(_) => None,
        }
    }

    /// For a section, the subspace of the parent that it is taken modulo.
    pub fn parent_kernel(&self) -> Option<&Subspace> {
        match &self.body {
            Body::Section { a, .. } => Some(a),
            Body::Eval(_) => None,
        }
    }

    /// Matrices of a subgroup's generators.
    pub fn gens(&self, which: Subgroup) -> Vec<Matrix> {
        self.ctx.generators(which).iter().map(|g| self.eval(g)).collect()
    }

    /// Generators of the whole domain.
    pub fn domain_gens(&self) -> Vec<Matrix> {
        self.gens(match self.domain {
            Domain::K => Subgroup::K,
            Domain::I => Subgroup::I,
        })
    }

    pub fn unit_vector(&self, i: usize) -> Vector {
        let mut v = vec![FqElem(0); self.dim];
        v[i] = FqElem(1);
        v
    }

    /// `B / A` for submodules `A ⊆ B` given by spanning vectors in this module's coordinates.
    pub fn section(self: &Arc<Self>, a: &Subspace, b: &Subspace) -> Result<ExplicitModule> {
        let fl = &self.ctx.field;
        if !a.is_subspace_of(fl, b) {
            return Err(domain("section needs A ⊆ B"));
        }
        let gens = self.domain_gens();
        for s in [a, b] {
            for v in s.basis() {
                for g in &gens {
                    if !s.contains(fl, &fl.mat_vec(g, v)) {
                        return Err(domain("section bounds must be submodules"));
                    }
                }
            }
        }
        let mut c = Subspace::zero(self.dim);
        for v in b.basis() {
            c.insert(fl, a.reduce(fl, v.clone()));
        }
        Ok(ExplicitModule {
            ctx: self.ctx.clone(),
            dim: c.dim(),
            domain: self.domain,
            level: self.level,
            body: Body::Section { parent: self.clone(), a: a.clone(), c },
        })
    }

    pub fn submodule(self: &Arc<Self>, b: &Subspace) -> Result<ExplicitModule> {
        self.section(&Subspace::zero(self.dim), b)
    }

    pub fn quotient(self: &Arc<Self>, a: &Subspace) -> Result<ExplicitModule> {
        self.section(a, &Subspace::whole(self.dim))
    }

    /// The same representation viewed as an `I`-module.
    pub fn restrict_to_i(&self) -> ExplicitModule {
        let mut m = self.clone();
        m.domain = Domain::I;
        m
    }

    /// Submodule generated by `vs`.
    pub fn spin(&self, vs: impl IntoIterator<Item = Vector>) -> Subspace {
        spin(&self.ctx.field, &self.domain_gens(), vs, self.dim)
    }

    /// Checks `ρ(gh) = ρ(g)ρ(h)` and `ρ(1) = 1` on the given pairs.
    pub fn check_multiplicative(&self, pairs: &[(Mat2, Mat2)]) -> bool {
        let fl = &self.ctx.field;
        self.eval(&self.ctx.identity()).is_identity()
            && pairs.iter().all(|(g, h)| self.eval(&self.ctx.mul(g, h)) == fl.mat_mul(&self.eval(g), &self.eval(h)))
    }

    /// The same module with a smaller declared kernel, after checking it on generators of `K_1`.
    pub fn with_level(&self, level: Level) -> Result<ExplicitModule> {
        let mut m = self.clone();
        m.level = level;
        if m.check_level(&self.ctx.generators(Subgroup::K)) {
            Ok(m)
        } else {
            Err(domain("module is not trivial on the requested subgroup"))
        }
    }

    /// Checks that the declared kernel acts trivially on the given sample elements.
    pub fn check_level(&self, samples: &[Mat2]) -> bool {
        let ctx = &self.ctx;
        let fl = &ctx.field;
        let in_kernel = |g: &Mat2| -> bool {
            let [a, b, c, d] = ctx.reduce(g);
            match self.level {
                Level::K1 => a.0 == 1 && d.0 == 1 && b.0 == 0 && c.0 == 0,
                Level::PiK1 => {
                    a.0 == 1 && d.0 == 1 && fl.gr_div_p(&g.c).is_some_and(|x| x.0 == 0)
                }
                Level::K2 => {
                    let one = fl.gr_one();
                    fl.gr_sub(&g.a, &one) == fl.gr_zero()
                        && g.b == fl.gr_zero()
                        && g.c == fl.gr_zero()
                        && fl.gr_sub(&g.d, &one) == fl.gr_zero()
                }
            }
        };
        samples.iter().filter(|g| in_kernel(g)).all(|g| self.eval(g).is_identity())
    }
}

fn lift_along(fl: &super::field::Field, v: &[FqElem], c: &Subspace) -> Vector {
    let mut x = vec![FqElem(0); c.n];
    for (coef, row) in v.iter().zip(c.basis()) {
        fl.axpy(&mut x, *coef, row);
    }
    x
}

/// A character `(a b; pc d) ↦ abar^χ.a dbar^χ.b` of `I`.
pub fn character_module(ctx: &Arc<GroupContext>, chi: ICharacter) -> ExplicitModule {
    ExplicitModule::from_fn(ctx, 1, Domain::I, Level::K1, move |c, g| {
        let fl = &c.field;
        let [a, _, _, d] = c.reduce(g);
        let mut m = Matrix::zero(1, 1);
        m.set(0, 0, fl.mul(fl.pow(a, chi.a), fl.pow(d, chi.b)));
        m
    })
}

fn char_value(ctx: &GroupContext, chi: &ICharacter, g: &Mat2) -> FqElem {
    let fl = &ctx.field;
    let [a, _, _, d] = ctx.reduce(g);
    fl.mul(fl.pow(a, chi.a), fl.pow(d, chi.b))
}

/// `Sym^r` of `(a b; c d)` in the basis `x^l y^{r-l}`, acting by `P(x, y) ↦ P(ax + cy, bx + dy)`.
fn sym_power(ctx: &GroupContext, r: usize, m: [FqElem; 4]) -> Matrix {
    let fl = &ctx.field;
    let [a, b, c, d] = m;
    let mut out = Matrix::zero(r + 1, r + 1);
    for k in 0..=r {
        // coefficients by power of x
        let mut poly = vec![FqElem(0); r + 1];
        poly[0] = FqElem(1);
        let mut deg = 0;
        for step in 0..r {
            let (lin_x, lin_y) = if step < k { (a, c) } else { (b, d) };
            let mut next = vec![FqElem(0); r + 1];
            for e in 0..=deg {
                next[e + 1] = fl.add(next[e + 1], fl.mul(poly[e], lin_x));
                next[e] = fl.add(next[e], fl.mul(poly[e], lin_y));
            }
            poly = next;
            deg += 1;
        }
        for (l, &x) in poly.iter().enumerate() {
            out.set(l, k, x);
        }
    }
    out
}

/// The weight `σ = ⊗_i (Sym^{r_i} F_q^2)^{Fr^i} ⊗ det^t` as a `K/K_1`-module. The basis is
/// indexed by `(l_0, ..., l_{f-1})` with `l_0` running slowest; `x^{r_0} ⊗ ... ⊗ x^{r_{f-1}}`
/// (the last basis vector) spans the `I_1`-invariants.
pub fn weight_module(ctx: &Arc<GroupContext>, sigma: &Weight) -> ExplicitModule {
    let r: Vec<usize> = sigma.r.iter().map(|&x| x as usize).collect();
    let dim = r.iter().map(|x| x + 1).product();
    let twist = sigma.twist;
    ExplicitModule::from_fn(ctx, dim, Domain::K, Level::K1, move |c, g| {
        let fl = &c.field;
        let m = c.reduce(g);
        let mut acc = Matrix::identity(1);
        for (i, &ri) in r.iter().enumerate() {
            let mi = m.map(|x| fl.frob(x, i));
            acc = fl.kron(&acc, &sym_power(c, ri, mi));
        }
        let det = fl.sub(fl.mul(m[0], m[3]), fl.mul(m[1], m[2]));
        fl.mat_scale(&acc, fl.pow(det, twist))
    })
}

/// Index of the highest weight vector in [`weight_module`].
pub fn weight_highest_vector(sigma: &Weight) -> usize {
    sigma.r.iter().map(|&x| x as usize + 1).product::<usize>() - 1
}

/// `E_j(χ)` in the basis `{v, w}`: `g v = χ(g) v`, `g w = χα^{-p^j}(g)(w + (b/d)^{p^j} v)`.
pub fn ej_module(ctx: &Arc<GroupContext>, chi: ICharacter, j: usize) -> ExplicitModule {
    let params = *ctx.params();
    let chi2 = char_times_alpha_power(&params, &chi, j, -1);
    ExplicitModule::from_fn(ctx, 2, Domain::I, Level::K1, move |c, g| {
        let fl = &c.field;
        let [_, b, _, d] = c.reduce(g);
        let x = char_value(c, &chi, g);
        let y = char_value(c, &chi2, g);
        let ratio = fl.frob(fl.mul(b, fl.inv(d).expect("d is a unit on I")), j);
        let mut m = Matrix::zero(2, 2);
        m.set(0, 0, x);
        m.set(0, 1, fl.mul(y, ratio));
        m.set(1, 1, y);
        m
    })
}

/// `Π(M)`: `h · Π(v) = Π((Π^{-1} h Π) · v)`. `M` must be trivial on `K_1 ∩ I`.
pub fn pi_twist(m: &ExplicitModule) -> Result<ExplicitModule> {
    if m.domain != Domain::I {
        return Err(domain("Π-twist needs an I-module"));
    }
    let level = match m.level {
        Level::K1 => Level::PiK1,
        Level::PiK1 => Level::K1,
        Level::K2 => return Err(domain("Π-twist needs a module trivial on K_1 ∩ I")),
    };
    let inner = m.clone();
    Ok(ExplicitModule::from_fn(&m.ctx, m.dim, Domain::I, level, move |c, h| {
        inner.eval(&c.pi_conjugate(h).expect("element of I"))
    }))
}

/// `Ind_I^K M` on the basis `[k, e_s]`, `k` running over [`GroupContext::coset_reps`]; the
/// coordinate of `[k_idx, e_s]` is `idx * dim M + s`.
pub fn induce(m: &ExplicitModule) -> Result<ExplicitModule> {
    if m.domain != Domain::I {
        return Err(domain("induction needs an I-module"));
    }
    let q = m.ctx.field.q();
    let d = m.dim;
    let inner = m.clone();
    let level = if m.level == Level::K1 { Level::K1 } else { Level::K2 };
    Ok(ExplicitModule::from_fn(&m.ctx, (q + 1) * d, Domain::K, level, move |c, g| {
        let n = (q + 1) * d;
        let mut out = Matrix::zero(n, n);
        for idx in 0..=q {
            let (to, i) = c.coset_decompose(g, idx).expect("element of K");
            let blk = inner.eval(&i);
            for s in 0..d {
                for t in 0..d {
                    out.set(to * d + s, idx * d + t, blk.get(s, t));
                }
            }
        }
        out
    }))
}

/// `A ⊕ B`.
pub fn direct_sum(a: &ExplicitModule, b: &ExplicitModule) -> Result<ExplicitModule> {
    if a.domain != b.domain {
        return Err(domain("direct sum of modules over different groups"));
    }
    let level = if a.level == b.level { a.level } else { Level::K2 };
    let (x, y) = (a.clone(), b.clone());
    Ok(ExplicitModule::from_fn(&a.ctx, a.dim + b.dim, a.domain, level, move |_, g| {
        x.eval(g).direct_sum(&y.eval(g))
    }))
}

/// Contragredient `g ↦ ρ(g^{-1})^T`.
pub fn dual(m: &ExplicitModule) -> ExplicitModule {
    let inner = m.clone();
    ExplicitModule::from_fn(&m.ctx, m.dim, m.domain, m.level, move |c, g| {
        inner.eval(&c.inv(g).expect("invertible")).transpose()
    })
}

/// Coordinate of `[k_idx, e_s]` in an induced module.
pub fn induced_index(inner_dim: usize, rep: usize, s: usize) -> usize {
    rep * inner_dim + s
}

/// `Σ_λ λ^k [k_λ, e_s]` in `Ind_I^K M` (with `0^0 = 1` and `0^{q-1} = 0`).
pub fn lambda_sum(ctx: &GroupContext, inner_dim: usize, k: u64, s: usize) -> Vector {
    let fl = &ctx.field;
    let q = fl.q();
    let mut v = vec![FqElem(0); (q + 1) * inner_dim];
    for lam in fl.elements() {
        let coef = if lam.0 == 0 { FqElem(u16::from(k == 0)) } else { fl.pow(lam, k) };
        v[induced_index(inner_dim, lam.0 as usize, s)] = coef;
    }
    v
}
