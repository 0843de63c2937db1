//! `2 x 2` matrices over `GR(p^2, f)`, generators of `K/K_2` and its subgroups, and the coset
//! decomposition of `K / I`.

use alloc::sync::Arc;
use alloc::vec::Vec;

use super::field::{FqElem, Field, GrElem};
use crate::error::{domain, Result};
use crate::params::Params;

/// `(a b; c d)` over `GR(p^2, f)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a: GrElem,
    pub b: GrElem,
    pub c: GrElem,
    pub d: GrElem,
}

/// Subgroups whose generators the context provides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Subgroup {
    K,
    I,
    I1,
    H,
    UPlus,
    UMinus,
}

/// Arithmetic, generators and coset representatives for `K = GL_2(O_F)` modulo `K_2`.
#[derive(Debug)]
pub struct GroupContext {
    pub field: Field,
    reps: Vec<Mat2>,
}

impl GroupContext {
    pub fn new(params: Params) -> Result<Arc<Self>> {
        let field = Field::new(params)?;
        let mut ctx = GroupContext { field, reps: Vec::new() };
        let one = ctx.field.gr_one();
        let zero = ctx.field.gr_zero();
        let mut reps: Vec<Mat2> = ctx
            .field
            .elements()
            .map(|l| Mat2 { a: ctx.field.teichmuller(l), b: one, c: one, d: zero })
            .collect();
        reps.push(ctx.identity());
        ctx.reps = reps;
        Ok(Arc::new(ctx))
    }

    pub fn params(&self) -> &Params {
        self.field.params()
    }

    pub fn mat(&self, a: GrElem, b: GrElem, c: GrElem, d: GrElem) -> Mat2 {
        Mat2 { a, b, c, d }
    }
    pub fn identity(&self) -> Mat2 {
        let (o, z) = (self.field.gr_one(), self.field.gr_zero());
        Mat2 { a: o, b: z, c: z, d: o }
    }
    /// Integer matrix.
    pub fn int_mat(&self, a: i64, b: i64, c: i64, d: i64) -> Mat2 {
        let g = |n| self.field.gr_int(n);
        Mat2 { a: g(a), b: g(b), c: g(c), d: g(d) }
    }
    pub fn upper(&self, t: GrElem) -> Mat2 {
        let (o, z) = (self.field.gr_one(), self.field.gr_zero());
        Mat2 { a: o, b: t, c: z, d: o }
    }
    pub fn lower(&self, t: GrElem) -> Mat2 {
        let (o, z) = (self.field.gr_one(), self.field.gr_zero());
        Mat2 { a: o, b: z, c: t, d: o }
    }
    pub fn diag(&self, a: GrElem, d: GrElem) -> Mat2 {
        let z = self.field.gr_zero();
        Mat2 { a, b: z, c: z, d }
    }

    pub fn mul(&self, x: &Mat2, y: &Mat2) -> Mat2 {
        let fl = &self.field;
        let e = |p: &GrElem, q: &GrElem, r: &GrElem, s: &GrElem| fl.gr_add(&fl.gr_mul(p, q), &fl.gr_mul(r, s));
        Mat2 { a: e(&x.a, &y.a, &x.b, &y.c), b: e(&x.a, &y.b, &x.b, &y.d), c: e(&x.c, &y.a, &x.d, &y.c), d: e(&x.c, &y.b, &x.d, &y.d) }
    }
    pub fn det(&self, x: &Mat2) -> GrElem {
        let fl = &self.field;
        fl.gr_sub(&fl.gr_mul(&x.a, &x.d), &fl.gr_mul(&x.b, &x.c))
    }
    pub fn is_invertible(&self, x: &Mat2) -> bool {
        self.field.gr_is_unit(&self.det(x))
    }
    pub fn inv(&self, x: &Mat2) -> Result<Mat2> {
        let fl = &self.field;
        let di = fl.gr_inv(&self.det(x)).ok_or_else(|| domain("matrix is not invertible mod p"))?;
        Ok(Mat2 { a: fl.gr_mul(&x.d, &di), b: fl.gr_neg(&fl.gr_mul(&x.b, &di)), c: fl.gr_neg(&fl.gr_mul(&x.c, &di)), d: fl.gr_mul(&x.a, &di) })
    }
    /// Membership in `I`: lower-left entry in `pO`.
    pub fn in_iwahori(&self, x: &Mat2) -> bool {
        self.is_invertible(x) && self.field.reduce(&x.c).0 == 0
    }
    pub fn in_k1(&self, x: &Mat2) -> bool {
        let fl = &self.field;
        fl.reduce(&x.a).0 == 1 && fl.reduce(&x.d).0 == 1 && fl.reduce(&x.b).0 == 0 && fl.reduce(&x.c).0 == 0
    }
    /// Entries mod `p`.
    pub fn reduce(&self, x: &Mat2) -> [FqElem; 4] {
        let fl = &self.field;
        [fl.reduce(&x.a), fl.reduce(&x.b), fl.reduce(&x.c), fl.reduce(&x.d)]
    }

    /// `Π^{-1} h Π` for `h = (a b; pc d) ∈ I`, equal to `(d c; pb a)`. The entry `c` is only
    /// defined mod `p`; its coefficient-wise lift is used.
    pub fn pi_conjugate(&self, h: &Mat2) -> Result<Mat2> {
        let fl = &self.field;
        let c = fl.gr_div_p(&h.c).ok_or_else(|| domain("Π-conjugation needs an element of I"))?;
        let pb = fl.p_times(fl.reduce(&h.b));
        Ok(Mat2 { a: h.d, b: fl.lift(c), c: pb, d: h.a })
    }

    /// Coset representatives of `K / I`: `([λ] 1; 1 0)` indexed by the code of `λ`, then the
    /// identity at index `q`.
    pub fn coset_reps(&self) -> &[Mat2] {
        &self.reps
    }

    /// Writes `g k_idx = k_{idx'} i` with `i ∈ I`; returns `(idx', i)`.
    pub fn coset_decompose(&self, g: &Mat2, idx: usize) -> Result<(usize, Mat2)> {
        if !self.is_invertible(g) {
            return Err(domain("coset decomposition needs an invertible matrix"));
        }
        let fl = &self.field;
        let h = self.mul(g, &self.reps[idx]);
        let (x, y) = (fl.reduce(&h.a), fl.reduce(&h.c));
        if y.0 == 0 {
            return Ok((self.reps.len() - 1, h));
        }
        let lam = fl.mul(x, fl.inv(y).expect("unit"));
        let t = fl.teichmuller(lam);
        // ([λ] 1; 1 0)^{-1} = (0 1; 1 -[λ])
        let kinv = Mat2 { a: fl.gr_zero(), b: fl.gr_one(), c: fl.gr_one(), d: fl.gr_neg(&t) };
        Ok((lam.0 as usize, self.mul(&kinv, &h)))
    }

    /// Additive generators `[x^i]` of `O / p^2`.
    fn teich_basis(&self) -> Vec<GrElem> {
        (0..self.field.f()).map(|i| self.field.teichmuller(self.field.basis(i))).collect()
    }
    fn p_basis(&self) -> Vec<GrElem> {
        (0..self.field.f()).map(|i| self.field.p_times(self.field.basis(i))).collect()
    }

    pub fn generators(&self, which: Subgroup) -> Vec<Mat2> {
        let fl = &self.field;
        let one = fl.gr_one();
        let tb = self.teich_basis();
        let pb = self.p_basis();
        let g = fl.teichmuller(fl.generator());
        let one_plus_p: Vec<GrElem> = pb.iter().map(|x| fl.gr_add(&one, x)).collect();
        let mut out = Vec::new();
        let uplus = |out: &mut Vec<Mat2>| {
            for t in tb.iter().chain(&pb) {
                out.push(self.upper(*t));
            }
        };
        let uminus = |out: &mut Vec<Mat2>| {
            for t in &pb {
                out.push(self.lower(*t));
            }
        };
        let torus1 = |out: &mut Vec<Mat2>| {
            for u in &one_plus_p {
                out.push(self.diag(*u, one));
                out.push(self.diag(one, *u));
            }
        };
        let h = |out: &mut Vec<Mat2>| {
            out.push(self.diag(g, one));
            out.push(self.diag(one, g));
        };
        match which {
            Subgroup::K => {
                uplus(&mut out);
                for t in tb.iter().chain(&pb) {
                    out.push(self.lower(*t));
                }
                h(&mut out);
                torus1(&mut out);
            }
            Subgroup::I => {
                uplus(&mut out);
                uminus(&mut out);
                h(&mut out);
                torus1(&mut out);
            }
            Subgroup::I1 => {
                uplus(&mut out);
                uminus(&mut out);
                torus1(&mut out);
            }
            Subgroup::H => h(&mut out),
            Subgroup::UPlus => uplus(&mut out),
            Subgroup::UMinus => uminus(&mut out),
        }
        out
    }

    /// The element of `H` acting by `(x^i, x^j)`.
    pub fn h_element(&self, i: u64, j: u64) -> Mat2 {
        let fl = &self.field;
        self.diag(fl.teichmuller(fl.exp(i)), fl.teichmuller(fl.exp(j)))
    }

    /// Sum of two matrices (used for the `p`-adic perturbations in the vector identities).
    pub fn add(&self, x: &Mat2, y: &Mat2) -> Mat2 {
        let fl = &self.field;
        Mat2 { a: fl.gr_add(&x.a, &y.a), b: fl.gr_add(&x.b, &y.b), c: fl.gr_add(&x.c, &y.c), d: fl.gr_add(&x.d, &y.d) }
    }
}
