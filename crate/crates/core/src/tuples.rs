//! Symbolic tuples `λ_i(x_i) ∈ Z ± x_i` and their subset encodings.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::params::Params;

/// One slot of a symbolic tuple. The same symbols serve `x` (for `P`, `RD`, `ID`)
/// and `y` (for `I(y)`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sym {
    X,
    XMinus1,
    XPlus1,
    P1MX,
    P2MX,
    P3MX,
}

use Sym::*;

pub type Tuple = Vec<Sym>;

/// `x + off` when `neg` is false, `p + off - x` otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Expr {
    pub neg: bool,
    pub off: i64,
}

impl Expr {
    pub const fn pos(off: i64) -> Self {
        Expr { neg: false, off }
    }
    pub const fn neg(off: i64) -> Self {
        Expr { neg: true, off }
    }

    pub fn eval(&self, p: u32, x: i64) -> i64 {
        if self.neg {
            p as i64 + self.off - x
        } else {
            x + self.off
        }
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Expr) -> Expr {
        Expr {
            neg: self.neg ^ inner.neg,
            off: self.off + if self.neg { -inner.off } else { inner.off },
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = |o: i64| if o < 0 { alloc::format!("-{}", -o) } else { alloc::format!("+{o}") };
        match (self.neg, self.off) {
            (false, 0) => write!(f, "x"),
            (false, o) => write!(f, "x{}", sign(o)),
            (true, 0) => write!(f, "p-x"),
            (true, o) => write!(f, "p{}-x", sign(o)),
        }
    }
}

impl Sym {
    pub const fn expr(self) -> Expr {
        match self {
            X => Expr::pos(0),
            XMinus1 => Expr::pos(-1),
            XPlus1 => Expr::pos(1),
            P1MX => Expr::neg(-1),
            P2MX => Expr::neg(-2),
            P3MX => Expr::neg(-3),
        }
    }

    pub fn eval(self, p: u32, x: i64) -> i64 {
        self.expr().eval(p, x)
    }

    pub fn name(self) -> &'static str {
        match self {
            X => "x",
            XMinus1 => "x-1",
            XPlus1 => "x+1",
            P1MX => "p-1-x",
            P2MX => "p-2-x",
            P3MX => "p-3-x",
        }
    }
}

impl fmt::Display for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn tuple_to_string(t: &[Sym]) -> alloc::string::String {
    let parts: Vec<&str> = t.iter().map(|s| s.name()).collect();
    alloc::format!("({})", parts.join(", "))
}

/// Subset of `{0, .., f-1}` as a bitset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SubsetS(pub u32);

impl SubsetS {
    pub const EMPTY: SubsetS = SubsetS(0);

    pub fn full(f: usize) -> Self {
        SubsetS((1u32 << f) - 1)
    }
    pub fn singleton(i: usize) -> Self {
        SubsetS(1 << i)
    }
    pub fn from_indices(it: impl IntoIterator<Item = usize>) -> Self {
        SubsetS(it.into_iter().fold(0, |acc, i| acc | (1 << i)))
    }
    pub fn contains(&self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }
    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }
    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1 << i);
    }
    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }
    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }
    pub fn union(&self, o: &SubsetS) -> SubsetS {
        SubsetS(self.0 | o.0)
    }
    pub fn intersect(&self, o: &SubsetS) -> SubsetS {
        SubsetS(self.0 & o.0)
    }
    pub fn minus(&self, o: &SubsetS) -> SubsetS {
        SubsetS(self.0 & !o.0)
    }
    pub fn sym_diff(&self, o: &SubsetS) -> SubsetS {
        SubsetS(self.0 ^ o.0)
    }
    pub fn is_subset(&self, o: &SubsetS) -> bool {
        self.0 & !o.0 == 0
    }
    pub fn complement(&self, f: usize) -> SubsetS {
        SubsetS::full(f).minus(self)
    }
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..32).filter(move |&i| self.contains(i))
    }
    pub fn all(f: usize) -> impl Iterator<Item = SubsetS> {
        (0..1u32 << f).map(SubsetS)
    }
}

impl fmt::Display for SubsetS {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (n, i) in self.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    P,
    RD,
    ID,
    IMu,
}

impl Family {
    /// Allowed symbols at slot `i`, in enumeration order.
    pub fn alphabet(self, i: usize) -> &'static [Sym] {
        match (self, i) {
            (Family::P, _) | (Family::ID, 0) => &[X, XMinus1, P2MX, P1MX],
            (Family::RD, _) | (Family::ID, _) => &[X, XPlus1, P2MX, P3MX],
            (Family::IMu, _) => &[X, XMinus1, XPlus1, P2MX, P3MX, P1MX],
        }
    }

    fn single_slot(self) -> &'static [Sym] {
        match self {
            Family::P | Family::ID => &[X, P1MX],
            Family::RD => &[X, P3MX],
            Family::IMu => &[X, P1MX, P3MX],
        }
    }
}

/// Symbols allowed at slot `i + 1` given `cur` at slot `i` (f > 1).
fn successors(family: Family, f: usize, i: usize, cur: Sym) -> &'static [Sym] {
    match family {
        Family::P => match cur {
            X | XMinus1 => &[X, P2MX],
            _ => &[P1MX, XMinus1],
        },
        Family::RD => match cur {
            X | XPlus1 => &[X, P2MX],
            _ => &[P3MX, XPlus1],
        },
        Family::ID => {
            let last = i == f - 1;
            match (i, cur) {
                (0, X | XMinus1) => &[X, P2MX],
                (0, _) => &[P3MX, XPlus1],
                (_, X | XPlus1) => &[X, P2MX],
                _ if last => &[P1MX, XMinus1],
                _ => &[P3MX, XPlus1],
            }
        }
        Family::IMu => match cur {
            X | XMinus1 | XPlus1 => &[X, P2MX],
            _ => &[XMinus1, XPlus1, P3MX, P1MX],
        },
    }
}

/// Membership test by the adjacency rules, slot by slot and cyclically.
pub fn is_valid(family: Family, t: &[Sym]) -> bool {
    let f = t.len();
    if f == 0 {
        return false;
    }
    if f == 1 {
        return family.single_slot().contains(&t[0]);
    }
    (0..f).all(|i| {
        family.alphabet(i).contains(&t[i]) && successors(family, f, i, t[i]).contains(&t[(i + 1) % f])
    })
}

fn enumerate(family: Family, f: usize) -> Vec<Tuple> {
    if f == 1 {
        return family.single_slot().iter().map(|&s| alloc::vec![s]).collect();
    }
    let mut out = Vec::new();
    let mut stack: Vec<Tuple> = family.alphabet(0).iter().rev().map(|&s| alloc::vec![s]).collect();
    while let Some(t) = stack.pop() {
        let i = t.len() - 1;
        let cur = t[i];
        if t.len() == f {
            if successors(family, f, i, cur).contains(&t[0]) {
                out.push(t);
            }
            continue;
        }
        let next = successors(family, f, i, cur);
        for &s in family.alphabet(i + 1).iter().rev() {
            if next.contains(&s) {
                let mut u = t.clone();
                u.push(s);
                stack.push(u);
            }
        }
    }
    out
}

pub fn enumerate_p(f: usize) -> Vec<Tuple> {
    enumerate(Family::P, f)
}
pub fn enumerate_rd(f: usize) -> Vec<Tuple> {
    enumerate(Family::RD, f)
}
pub fn enumerate_id(f: usize) -> Vec<Tuple> {
    enumerate(Family::ID, f)
}
pub fn enumerate_imu(f: usize) -> Vec<Tuple> {
    enumerate(Family::IMu, f)
}

pub fn eval_tuple(p: u32, t: &[Sym], r: &[i64]) -> Vec<i64> {
    t.iter().zip(r).map(|(s, &x)| s.eval(p, x)).collect()
}

pub fn exprs_of(t: &[Sym]) -> Vec<Expr> {
    t.iter().map(|s| s.expr()).collect()
}

/// `e` for a tuple of expressions: half of `sum p^i (x_i - E_i(x_i))`, plus `(q - 1)/2`
/// when the last slot has negative sign in `x`.
pub fn e_of_exprs(params: &Params, t: &[Expr], r: &[i64]) -> Result<i64> {
    let diff: Vec<i64> = t.iter().zip(r).map(|(e, &x)| x - e.eval(params.p(), x)).collect();
    let mut bracket = params.weighted_sum(&diff);
    if t.last().is_some_and(|e| e.neg) {
        bracket += params.qm1() as i64;
    }
    if bracket % 2 != 0 {
        return Err(Error::Invariant(alloc::format!("odd bracket {bracket} in e()")));
    }
    Ok(bracket / 2)
}

pub fn e_of_lambda(params: &Params, t: &[Sym], r: &[i64]) -> Result<i64> {
    e_of_exprs(params, &exprs_of(t), r)
}

pub fn j_of_lambda(t: &[Sym]) -> SubsetS {
    SubsetS::from_indices(t.iter().enumerate().filter(|(_, s)| matches!(s, P2MX | P1MX)).map(|(i, _)| i))
}

/// `S_λ` for `λ ∈ RD` (`family = RD`) or `λ ∈ ID` (`family = ID`).
pub fn s_of_lambda(family: Family, t: &[Sym]) -> SubsetS {
    SubsetS::from_indices(
        t.iter()
            .enumerate()
            .filter(|&(i, s)| match (family, i) {
                (Family::ID, 0) => matches!(s, P1MX | XMinus1),
                _ => matches!(s, P3MX | XPlus1),
            })
            .map(|(i, _)| i),
    )
}

pub fn mu_of_lambda(family: Family, t: &[Sym]) -> Tuple {
    t.iter()
        .enumerate()
        .map(|(i, s)| {
            let first = match (family, i) {
                (Family::ID, 0) => matches!(s, P2MX | XMinus1),
                _ => matches!(s, P3MX | X),
            };
            if first {
                P1MX
            } else {
                P3MX
            }
        })
        .collect()
}

pub fn compatible(mu: &[Sym], nu: &[Sym]) -> bool {
    let a = |s: &Sym| matches!(s, X | P2MX | XPlus1 | P3MX);
    let b = |s: &Sym| matches!(s, X | P2MX | XMinus1 | P1MX);
    mu.len() == nu.len() && mu.iter().zip(nu).all(|(m, n)| (a(m) && a(n)) || (b(m) && b(n)))
}

pub fn s_of_mu(mu: &[Sym]) -> SubsetS {
    SubsetS::from_indices(
        mu.iter().enumerate().filter(|(_, s)| matches!(s, XMinus1 | XPlus1 | P3MX | P1MX)).map(|(i, _)| i),
    )
}

pub fn delta_red(f: usize, s: SubsetS) -> SubsetS {
    SubsetS::from_indices((0..f).filter(|&i| s.contains((i + 1) % f)))
}

pub fn delta_irr(f: usize, s: SubsetS) -> SubsetS {
    let mut out = SubsetS::from_indices((1..f).filter(|&i| s.contains((i + 1) % f)));
    if !s.contains(1 % f) {
        out.insert(0);
    }
    out
}
