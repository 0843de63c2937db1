//! Invariants, eigenspaces, socles and Jordan-Holder factors of explicit modules.

use alloc::sync::Arc;
use alloc::vec::Vec;

use super::field::FqElem;
use super::group::Subgroup;
use super::linalg::{spin, Matrix, Subspace, Vector};
use super::module::{character_module, induce, weight_highest_vector, weight_module, Domain, ExplicitModule};
use crate::error::{domain, Result};
use crate::weight::{dual_weight, weights_of_char, ICharacter, Weight};

/// Multiset of weights, sorted.
pub type WeightCounts = Vec<(Weight, usize)>;

fn nonpivot_coords(s: &Subspace, v: &[FqElem]) -> Vector {
    let piv = s.pivots();
    v.iter().enumerate().filter(|(i, _)| !piv.contains(i)).map(|(_, &x)| x).collect()
}

/// `{v ∈ V : (g - 1) v ∈ base for every generator g}`.
pub fn relative_invariants(m: &ExplicitModule, gens: &[Matrix], base: &Subspace) -> Subspace {
    let fl = &m.ctx.field;
    let n = m.dim;
    let rows_per = n - base.dim();
    let mut big = Matrix::zero(rows_per * gens.len().max(1), n);
    for (gi, g) in gens.iter().enumerate() {
        for j in 0..n {
            let mut col = g.column(j);
            col[j] = fl.sub(col[j], FqElem(1));
            let red = nonpivot_coords(base, &base.reduce(fl, col));
            for (i, x) in red.into_iter().enumerate() {
                big.set(gi * rows_per + i, j, x);
            }
        }
    }
    Subspace::spanned_by(fl, n, fl.kernel(&big))
}

/// Fixed vectors of a subgroup.
pub fn invariants(m: &ExplicitModule, which: Subgroup) -> Subspace {
    relative_invariants(m, &m.gens(which), &Subspace::zero(m.dim))
}

/// Socle series over a subgroup acting through a `p`-group (`I_1`, `U^+`, `U^-`).
pub fn unipotent_socle_series(m: &ExplicitModule, which: Subgroup) -> Vec<Subspace> {
    let gens = m.gens(which);
    let mut out = Vec::new();
    let mut cur = Subspace::zero(m.dim);
    while cur.dim() < m.dim {
        let next = relative_invariants(m, &gens, &cur);
        if next.dim() == cur.dim() {
            break;
        }
        out.push(next.clone());
        cur = next;
    }
    out
}

/// Loewy length as a representation of `U^+` or `U^-` (or `I_1`).
pub fn restricted_loewy(m: &ExplicitModule, which: Subgroup) -> usize {
    unipotent_socle_series(m, which).len()
}

/// Loewy length of the submodule `s`.
pub fn restricted_loewy_of(m: &Arc<ExplicitModule>, s: &Subspace, which: Subgroup) -> Result<usize> {
    Ok(restricted_loewy(&m.submodule(s)?, which))
}

/// `H`-eigenspaces inside an `H`-stable subspace.
pub fn h_eigenspaces(m: &ExplicitModule, within: &Subspace) -> Vec<(ICharacter, Subspace)> {
    let ctx = &m.ctx;
    let fl = &ctx.field;
    let qm1 = (fl.q() - 1) as u64;
    let d = within.dim();
    if d == 0 {
        return Vec::new();
    }
    let restrict = |g: &Matrix| -> Matrix {
        let cols: Vec<Vector> =
            within.basis().iter().map(|b| within.coords(fl, &fl.mat_vec(g, b)).expect("H-stable")).collect();
        Matrix::from_columns(d, &cols)
    };
    let d1 = restrict(&m.eval(&ctx.h_element(1, 0)));
    let d2 = restrict(&m.eval(&ctx.h_element(0, 1)));
    let lift = |coords: &[FqElem]| -> Vector {
        let mut v = alloc::vec![FqElem(0); m.dim];
        for (c, b) in coords.iter().zip(within.basis()) {
            fl.axpy(&mut v, *c, b);
        }
        v
    };
    let shifted = |mat: &Matrix, e: u64| -> Matrix {
        let mut x = mat.clone();
        let s = fl.exp(e);
        for i in 0..d {
            x.set(i, i, fl.sub(x.get(i, i), s));
        }
        x
    };
    let mut out = Vec::new();
    for a in 0..qm1 {
        let ka = fl.kernel(&shifted(&d1, a));
        if ka.is_empty() {
            continue;
        }
        for b in 0..qm1 {
            // restrict d2 - x^b to the d1-eigenspace by stacking both conditions
            let mut big = Matrix::zero(2 * d, d);
            let s1 = shifted(&d1, a);
            let s2 = shifted(&d2, b);
            for i in 0..d {
                for j in 0..d {
                    big.set(i, j, s1.get(i, j));
                    big.set(d + i, j, s2.get(i, j));
                }
            }
            let k = fl.kernel(&big);
            if !k.is_empty() {
                let sp = Subspace::spanned_by(fl, m.dim, k.iter().map(|c| lift(c)));
                out.push((ICharacter { a, b }, sp));
            }
        }
    }
    out
}

/// `H`-character multiset of an `I`-module; these are its Jordan-Holder factors.
pub fn i_jh_characters(m: &ExplicitModule) -> Vec<(ICharacter, usize)> {
    h_eigenspaces(m, &Subspace::whole(m.dim)).into_iter().map(|(c, s)| (c, s.dim())).collect()
}

/// Radical of an `I`-module: the span of `(g - 1) V` over `I_1`.
pub fn i_radical(m: &ExplicitModule) -> Subspace {
    let fl = &m.ctx.field;
    let mut vs = Vec::new();
    for g in m.gens(Subgroup::I1) {
        for j in 0..m.dim {
            let mut col = g.column(j);
            col[j] = fl.sub(col[j], FqElem(1));
            vs.push(col);
        }
    }
    m.spin(vs)
}

/// Generators of the kernel of `Ind_I^K χ_σ → σ`, `[k, 1] ↦ k v_σ`, as coefficient vectors
/// on the coset representatives.
fn presentation_kernel(m: &ExplicitModule, sigma: &Weight) -> Vec<Vector> {
    let ctx = &m.ctx;
    let fl = &ctx.field;
    let wm = weight_module(ctx, sigma);
    let hv = wm.unit_vector(weight_highest_vector(sigma));
    let cols: Vec<Vector> = ctx.coset_reps().iter().map(|k| wm.act(k, &hv)).collect();
    let phi = Matrix::from_columns(wm.dim, &cols);
    let kernel = fl.kernel(&phi);
    // keep only module generators of the kernel inside Ind χ_σ
    let params = *ctx.params();
    let chi = crate::weight::chi_of_weight(&params, sigma);
    let ind = induce(&character_module(ctx, chi)).expect("character of I");
    let gens = ind.domain_gens();
    let mut span = Subspace::zero(ind.dim);
    let mut out = Vec::new();
    for c in kernel {
        if !span.contains(fl, &c) {
            span = spin(fl, &gens, span.basis().iter().cloned().chain(core::iter::once(c.clone())), ind.dim);
            out.push(c);
        }
    }
    out
}

/// Socle of a `K`-module, with the multiplicity of every weight.
#[derive(Debug, Clone)]
pub struct SocleData {
    pub space: Subspace,
    pub factors: WeightCounts,
    /// Per weight, a basis of the `I_1`-invariant vectors generating its copies.
    pub generators: Vec<(Weight, Vec<Vector>)>,
}

/// `I_1`-invariant vectors `v` of character `χ_σ` such that `[1, 1] ↦ v` factors through `σ`.
pub fn hom_vectors(m: &ExplicitModule, sigma: &Weight, eigen: &Subspace, rep_mats: &[Matrix]) -> Vec<Vector> {
    let fl = &m.ctx.field;
    let rels = presentation_kernel(m, sigma);
    let e = eigen.dim();
    if e == 0 {
        return Vec::new();
    }
    let n = m.dim;
    let images: Vec<Vec<Vector>> =
        eigen.basis().iter().map(|b| rep_mats.iter().map(|k| fl.mat_vec(k, b)).collect()).collect();
    let mut big = Matrix::zero(rels.len() * n, e);
    for (ri, c) in rels.iter().enumerate() {
        for (mi, imgs) in images.iter().enumerate() {
            let mut acc = alloc::vec![FqElem(0); n];
            for (coef, img) in c.iter().zip(imgs) {
                fl.axpy(&mut acc, *coef, img);
            }
            for (i, x) in acc.into_iter().enumerate() {
                big.set(ri * n + i, mi, x);
            }
        }
    }
    fl.kernel(&big)
        .into_iter()
        .map(|coords| {
            let mut v = alloc::vec![FqElem(0); n];
            for (c, b) in coords.iter().zip(eigen.basis()) {
                fl.axpy(&mut v, *c, b);
            }
            v
        })
        .collect()
}

pub fn socle(m: &ExplicitModule) -> Result<SocleData> {
    if m.domain != Domain::K {
        return Err(domain("the K-socle needs a K-module"));
    }
    let params = *m.ctx.params();
    let inv = invariants(m, Subgroup::I1);
    let rep_mats: Vec<Matrix> = m.ctx.coset_reps().iter().map(|k| m.eval(k)).collect();
    let mut factors = Vec::new();
    let mut generators = Vec::new();
    let mut all = Vec::new();
    for (psi, eig) in h_eigenspaces(m, &inv) {
        for sigma in weights_of_char(&params, &psi) {
            let sols = hom_vectors(m, &sigma, &eig, &rep_mats);
            if !sols.is_empty() {
                factors.push((sigma.clone(), sols.len()));
                all.extend(sols.iter().cloned());
                generators.push((sigma, sols));
            }
        }
    }
    factors.sort();
    let space = m.spin(all);
    Ok(SocleData { space, factors, generators })
}

/// Socle series, as layers of weights, together with the filtration as subspaces.
pub fn socle_series(m: &Arc<ExplicitModule>) -> Result<(Vec<WeightCounts>, Vec<Subspace>)> {
    let mut layers = Vec::new();
    let mut spaces = Vec::new();
    let fl = &m.ctx.field;
    let mut cur = Subspace::zero(m.dim);
    while cur.dim() < m.dim {
        let quot = Arc::new(m.quotient(&cur)?);
        let s = socle(&quot)?;
        if s.space.dim() == 0 {
            return Err(crate::error::Error::Invariant("empty socle of a nonzero module".into()));
        }
        // lift the socle of the quotient back
        let mut next = cur.clone();
        for v in s.space.basis() {
            next.insert(fl, quot.lift_to_parent(v).expect("section"));
        }
        layers.push(s.factors);
        spaces.push(next.clone());
        cur = next;
    }
    Ok((layers, spaces))
}

fn merge_counts(into: &mut WeightCounts, more: &[(Weight, usize)]) {
    for (w, k) in more {
        if let Some(e) = into.iter_mut().find(|(x, _)| x == w) {
            e.1 += k;
        } else {
            into.push((w.clone(), *k));
        }
    }
    into.sort();
}

/// Jordan-Holder factors with multiplicity.
pub fn jh_multiset(m: &Arc<ExplicitModule>) -> Result<WeightCounts> {
    let (layers, _) = socle_series(m)?;
    let mut out = Vec::new();
    for l in &layers {
        merge_counts(&mut out, l);
    }
    Ok(out)
}

/// Cosocle, computed as the dual of the socle of the dual module.
pub fn cosocle(m: &ExplicitModule) -> Result<WeightCounts> {
    let params = *m.ctx.params();
    let s = socle(&super::module::dual(m))?;
    let mut out: WeightCounts = s.factors.iter().map(|(w, k)| (dual_weight(&params, w), *k)).collect();
    out.sort();
    Ok(out)
}

/// Basis of `Hom(A, B)`, as `dim B x dim A` matrices commuting with the generators.
pub fn hom_space(a: &ExplicitModule, b: &ExplicitModule) -> Result<Vec<Matrix>> {
    if a.domain != b.domain {
        return Err(domain("hom space between modules over different groups"));
    }
    let fl = &a.ctx.field;
    let (da, db) = (a.dim, b.dim);
    let gens = a.ctx.generators(match a.domain {
        Domain::K => Subgroup::K,
        Domain::I => Subgroup::I,
    });
    // unknown φ[i][j] at index i * da + j; equation (φ A_g - B_g φ)[i][k] = 0
    let mut big = Matrix::zero(gens.len() * db * da, db * da);
    for (gi, g) in gens.iter().enumerate() {
        let ag = a.eval(g);
        let bg = b.eval(g);
        for i in 0..db {
            for k in 0..da {
                let row = (gi * db + i) * da + k;
                for j in 0..da {
                    let idx = i * da + j;
                    big.set(row, idx, fl.add(big.get(row, idx), ag.get(j, k)));
                }
                for l in 0..db {
                    let idx = l * da + k;
                    big.set(row, idx, fl.sub(big.get(row, idx), bg.get(i, l)));
                }
            }
        }
    }
    Ok(fl
        .kernel(&big)
        .into_iter()
        .map(|x| Matrix { rows: db, cols: da, data: x })
        .collect())
}

/// Repeatedly quotient by the irreducible submodules whose weight lies outside `keep`. Returns
/// the quotient and the kernel of `V →` quotient.
pub fn quotient_by_non_diamond_socle(
    m: &Arc<ExplicitModule>,
    keep: &[Weight],
) -> Result<(ExplicitModule, Subspace)> {
    let fl = &m.ctx.field;
    let mut killed = Subspace::zero(m.dim);
    loop {
        let quot = Arc::new(m.quotient(&killed)?);
        let s = socle(&quot)?;
        let bad: Vec<Vector> = s
            .generators
            .iter()
            .filter(|(w, _)| !keep.contains(w))
            .flat_map(|(_, vs)| vs.iter().cloned())
            .collect();
        if bad.is_empty() {
            return Ok((Arc::try_unwrap(quot).unwrap_or_else(|a| (*a).clone()), killed));
        }
        let sub = quot.spin(bad);
        for v in sub.basis() {
            killed.insert(fl, quot.lift_to_parent(v).expect("section"));
        }
    }
}
