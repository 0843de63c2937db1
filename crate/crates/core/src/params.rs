use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Residue characteristic `p`, residue degree `f` and `q = p^f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Params {
    p: u32,
    f: usize,
    q: u64,
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

impl Params {
    pub fn new(p: u32, f: usize) -> Result<Self> {
        if !is_prime(p) || p < 3 {
            return Err(Error::Params(alloc::format!("p = {p} must be an odd prime")));
        }
        if f == 0 || f > 16 {
            return Err(Error::Params(alloc::format!("f = {f} must lie in 1..=16")));
        }
        let q = (p as u64)
            .checked_pow(f as u32)
            .filter(|&q| q < (1 << 31))
            .ok_or_else(|| Error::Params(alloc::format!("q = {p}^{f} too large")))?;
        Ok(Params { p, f, q })
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn f(&self) -> usize {
        self.f
    }
    pub fn q(&self) -> u64 {
        self.q
    }
    /// The order `q - 1` of `F_q^x`; every character exponent lives mod this.
    pub fn qm1(&self) -> u64 {
        self.q - 1
    }

    /// `p^i` with `i` taken mod `f`.
    pub fn pow(&self, i: i64) -> u64 {
        (self.p as u64).pow(self.idx(i) as u32)
    }

    /// Reduce an index cyclically into `0..f`.
    pub fn idx(&self, i: i64) -> usize {
        i.rem_euclid(self.f as i64) as usize
    }

    pub fn modq1(&self, n: i64) -> u64 {
        n.rem_euclid(self.qm1() as i64) as u64
    }

    /// Base-`p` digits of `n < q`, least significant first.
    pub fn digits(&self, mut n: u64) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.f);
        for _ in 0..self.f {
            out.push((n % self.p as u64) as u32);
            n /= self.p as u64;
        }
        out
    }

    /// `sum p^i c_i` without reduction.
    pub fn weighted_sum(&self, c: &[i64]) -> i64 {
        c.iter()
            .enumerate()
            .map(|(i, &x)| x * (self.p as i64).pow(i as u32))
            .sum()
    }
}
