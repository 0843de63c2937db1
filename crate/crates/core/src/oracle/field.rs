//! `F_q` and the Galois ring `GR(p^2, f)`, both modulo one fixed primitive polynomial.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::params::Params;

/// Largest `q` the oracle accepts; the field tables are `q^2` entries.
pub const MAX_Q: u64 = 1024;
pub const MAX_F: usize = 10;

/// An element of `F_q`: the coefficients of a polynomial of degree `< f`, packed in base `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FqElem(pub u16);

/// An element of `GR(p^2, f)`: coefficients mod `p^2` of a polynomial of degree `< f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct GrElem(pub [u32; MAX_F]);

/// Arithmetic tables for `F_q` and `GR(p^2, f)`.
#[derive(Debug, Clone)]
pub struct Field {
    params: Params,
    p: u32,
    f: usize,
    q: usize,
    /// `x^f = sum poly[i] x^i` is the relation; stored as the negated low coefficients.
    poly: Vec<u32>,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
    exp: Vec<u16>,
    log: Vec<u32>,
    teich: Vec<GrElem>,
}

fn poly_mul_mod(a: &[u64], b: &[u64], low: &[u64], m: u64) -> Vec<u64> {
    let f = low.len();
    let mut prod = vec![0u64; 2 * f];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % m;
        }
    }
    // x^f = -sum low[i] x^i
    for d in (f..2 * f).rev() {
        let c = prod[d];
        if c == 0 {
            continue;
        }
        prod[d] = 0;
        for i in 0..f {
            prod[d - f + i] = (prod[d - f + i] + (m - low[i]) * c) % m;
        }
    }
    prod.truncate(f);
    prod
}

impl Field {
    /// Builds the tables, choosing the first monic polynomial (lexicographic in its low
    /// coefficients) for which `x` generates `F_q^x`.
    pub fn new(params: Params) -> Result<Self> {
        let (p, f, q) = (params.p(), params.f(), params.q());
        if q > MAX_Q || f > MAX_F {
            return Err(Error::Params(alloc::format!("oracle needs q <= {MAX_Q}, got q = {q}")));
        }
        let q = q as usize;
        let pu = p as u64;
        let (low, exp_polys) = (0..q)
            .find_map(|code| {
                let low: Vec<u64> = params.digits(code as u64).iter().map(|&d| d as u64).collect();
                if low[0] == 0 {
                    return None;
                }
                let mut x = vec![0u64; f];
                if f == 1 {
                    x[0] = (pu - low[0]) % pu;
                } else {
                    x[1] = 1;
                }
                let mut cur = vec![0u64; f];
                cur[0] = 1;
                let mut seen = Vec::with_capacity(q - 1);
                for k in 0..q - 1 {
                    if k > 0 && cur.iter().enumerate().all(|(i, &c)| c == u64::from(i == 0)) {
                        return None;
                    }
                    seen.push(cur.clone());
                    cur = poly_mul_mod(&cur, &x, &low, pu);
                }
                Some((low, seen))
            })
            .ok_or_else(|| Error::Invariant("no primitive polynomial found".into()))?;
        let encode = |c: &[u64]| -> u16 { c.iter().rev().fold(0u64, |acc, &d| acc * pu + d) as u16 };
        let exp: Vec<u16> = exp_polys.iter().map(|c| encode(c)).collect();
        let mut log = vec![u32::MAX; q];
        for (k, &e) in exp.iter().enumerate() {
            log[e as usize] = k as u32;
        }
        let digits = |a: usize| params.digits(a as u64);
        let mut add = vec![0u16; q * q];
        let mut neg = vec![0u16; q];
        for a in 0..q {
            let da = digits(a);
            neg[a] = encode(&da.iter().map(|&x| (pu - x as u64) % pu).collect::<Vec<_>>());
            for b in 0..q {
                let db = digits(b);
                let s: Vec<u64> = da.iter().zip(&db).map(|(&x, &y)| (x as u64 + y as u64) % pu).collect();
                add[a * q + b] = encode(&s);
            }
        }
        let n = (q - 1) as u32;
        let mut mul = vec![0u16; q * q];
        let mut inv = vec![0u16; q];
        for a in 1..q {
            inv[a] = exp[((n - log[a]) % n) as usize];
            for b in 1..q {
                mul[a * q + b] = exp[((log[a] + log[b]) % n) as usize];
            }
        }
        let mut field = Field {
            params,
            p,
            f,
            q,
            poly: low.iter().map(|&x| x as u32).collect(),
            add,
            mul,
            neg,
            inv,
            exp,
            log,
            teich: Vec::new(),
        };
        field.teich = (0..q).map(|a| field.gr_pow(&field.lift(FqElem(a as u16)), q as u64)).collect();
        Ok(field)
    }

    pub fn params(&self) -> &Params {
        &self.params
    }
    pub fn q(&self) -> usize {
        self.q
    }
    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn f(&self) -> usize {
        self.f
    }
    /// Low coefficients `c_i` of the defining polynomial `x^f + sum c_i x^i`.
    pub fn modulus(&self) -> &[u32] {
        &self.poly
    }

    pub fn zero(&self) -> FqElem {
        FqElem(0)
    }
    pub fn one(&self) -> FqElem {
        FqElem(1)
    }
    /// The primitive element `x`.
    pub fn generator(&self) -> FqElem {
        FqElem(self.exp[1 % (self.q - 1)])
    }
    pub fn elements(&self) -> impl Iterator<Item = FqElem> {
        (0..self.q as u16).map(FqElem)
    }
    /// Image of an integer in the prime field.
    pub fn from_int(&self, n: i64) -> FqElem {
        FqElem(n.rem_euclid(self.p as i64) as u16)
    }
    /// `x^i`, the polynomial basis element.
    pub fn basis(&self, i: usize) -> FqElem {
        FqElem((self.p as u64).pow(i as u32) as u16)
    }

    #[inline]
    pub fn add(&self, a: FqElem, b: FqElem) -> FqElem {
        FqElem(self.add[a.0 as usize * self.q + b.0 as usize])
    }
    #[inline]
    pub fn sub(&self, a: FqElem, b: FqElem) -> FqElem {
        self.add(a, self.neg(b))
    }
    #[inline]
    pub fn neg(&self, a: FqElem) -> FqElem {
        FqElem(self.neg[a.0 as usize])
    }
    #[inline]
    pub fn mul(&self, a: FqElem, b: FqElem) -> FqElem {
        FqElem(self.mul[a.0 as usize * self.q + b.0 as usize])
    }
    pub fn inv(&self, a: FqElem) -> Option<FqElem> {
        (a.0 != 0).then(|| FqElem(self.inv[a.0 as usize]))
    }
    /// `a^e` with the conventions `0^0 = 1` and `0^e = 0` for `e > 0`.
    pub fn pow(&self, a: FqElem, e: u64) -> FqElem {
        if e == 0 {
            return self.one();
        }
        if a.0 == 0 {
            return self.zero();
        }
        let n = (self.q - 1) as u64;
        FqElem(self.exp[((self.log[a.0 as usize] as u64 * (e % n)) % n) as usize])
    }
    /// `a^e` for a signed exponent; `a` must be nonzero when `e < 0`.
    pub fn pow_signed(&self, a: FqElem, e: i64) -> FqElem {
        if a.0 == 0 {
            return if e == 0 { self.one() } else { self.zero() };
        }
        let n = (self.q - 1) as i64;
        FqElem(self.exp[(self.log[a.0 as usize] as i64 * e.rem_euclid(n)).rem_euclid(n) as usize])
    }
    /// Discrete logarithm to the base `x`.
    pub fn log(&self, a: FqElem) -> Option<u32> {
        (a.0 != 0).then(|| self.log[a.0 as usize])
    }
    pub fn exp(&self, k: u64) -> FqElem {
        FqElem(self.exp[(k % (self.q as u64 - 1)) as usize])
    }
    /// `a^(p^i)`.
    pub fn frob(&self, a: FqElem, i: usize) -> FqElem {
        self.pow(a, (self.p as u64).pow((i % self.f) as u32))
    }
    pub fn coeffs(&self, a: FqElem) -> Vec<u32> {
        self.params.digits(a.0 as u64)
    }
    pub fn from_coeffs(&self, c: &[u32]) -> FqElem {
        let p = self.p as u64;
        FqElem(c.iter().rev().fold(0u64, |acc, &d| acc * p + (d as u64 % p)) as u16)
    }

    // ---- GR(p^2, f) ----

    fn m2(&self) -> u64 {
        (self.p as u64) * (self.p as u64)
    }

    pub fn gr_zero(&self) -> GrElem {
        GrElem::default()
    }
    pub fn gr_one(&self) -> GrElem {
        self.gr_int(1)
    }
    pub fn gr_int(&self, n: i64) -> GrElem {
        let mut g = GrElem::default();
        g.0[0] = n.rem_euclid(self.m2() as i64) as u32;
        g
    }
    /// The lift with coefficients in `[0, p)`.
    pub fn lift(&self, a: FqElem) -> GrElem {
        let mut g = GrElem::default();
        for (i, d) in self.coeffs(a).into_iter().enumerate() {
            g.0[i] = d;
        }
        g
    }
    pub fn reduce(&self, a: &GrElem) -> FqElem {
        let c: Vec<u32> = a.0[..self.f].iter().map(|&x| x % self.p).collect();
        self.from_coeffs(&c)
    }
    /// Teichmuller representative `[a]`.
    pub fn teichmuller(&self, a: FqElem) -> GrElem {
        self.teich[a.0 as usize]
    }
    /// `p * lift(a)`.
    pub fn p_times(&self, a: FqElem) -> GrElem {
        self.gr_mul(&self.gr_int(self.p as i64), &self.lift(a))
    }
    pub fn gr_add(&self, a: &GrElem, b: &GrElem) -> GrElem {
        let m = self.m2() as u32;
        let mut g = GrElem::default();
        for i in 0..self.f {
            g.0[i] = (a.0[i] + b.0[i]) % m;
        }
        g
    }
    pub fn gr_neg(&self, a: &GrElem) -> GrElem {
        let m = self.m2() as u32;
        let mut g = GrElem::default();
        for i in 0..self.f {
            g.0[i] = (m - a.0[i]) % m;
        }
        g
    }
    pub fn gr_sub(&self, a: &GrElem, b: &GrElem) -> GrElem {
        self.gr_add(a, &self.gr_neg(b))
    }
    pub fn gr_mul(&self, a: &GrElem, b: &GrElem) -> GrElem {
        let low: Vec<u64> = self.poly.iter().map(|&x| x as u64).collect();
        let av: Vec<u64> = a.0[..self.f].iter().map(|&x| x as u64).collect();
        let bv: Vec<u64> = b.0[..self.f].iter().map(|&x| x as u64).collect();
        let c = poly_mul_mod(&av, &bv, &low, self.m2());
        let mut g = GrElem::default();
        for (i, x) in c.into_iter().enumerate() {
            g.0[i] = x as u32;
        }
        g
    }
    pub fn gr_pow(&self, a: &GrElem, mut e: u64) -> GrElem {
        let mut base = *a;
        let mut acc = self.gr_one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.gr_mul(&acc, &base);
            }
            base = self.gr_mul(&base, &base);
            e >>= 1;
        }
        acc
    }
    pub fn gr_is_unit(&self, a: &GrElem) -> bool {
        self.reduce(a).0 != 0
    }
    /// Inverse of a unit by one Newton step from the residue inverse.
    pub fn gr_inv(&self, a: &GrElem) -> Option<GrElem> {
        let v = self.lift(self.inv(self.reduce(a))?);
        let two = self.gr_int(2);
        Some(self.gr_mul(&v, &self.gr_sub(&two, &self.gr_mul(a, &v))))
    }
    /// For `a ∈ pGR`, the residue of `a / p`.
    pub fn gr_div_p(&self, a: &GrElem) -> Option<FqElem> {
        if a.0[..self.f].iter().any(|&x| x % self.p != 0) {
            return None;
        }
        let c: Vec<u32> = a.0[..self.f].iter().map(|&x| x / self.p).collect();
        Some(self.from_coeffs(&c))
    }
}
