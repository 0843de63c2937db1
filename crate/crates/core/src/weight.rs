//! Serre weights and characters of the Iwahori subgroup.
//!
//! A character of `I` is stored as an exponent pair `(a, b)` mod `q - 1`,
//! acting on `(a b; pc d)` by `abar^a * dbar^b`.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::params::Params;

/// `(r_0, ..., r_{f-1}) ⊗ det^twist`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub r: Vec<u32>,
    pub twist: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ICharacter {
    pub a: u64,
    pub b: u64,
}

impl Weight {
    /// Builds a weight, reducing the twist mod `q - 1`.
    pub fn new(params: &Params, r: Vec<u32>, twist: i64) -> Result<Self> {
        if r.len() != params.f() {
            return Err(Error::Params(alloc::format!(
                "weight has {} digits, expected {}",
                r.len(),
                params.f()
            )));
        }
        if let Some(bad) = r.iter().find(|&&x| x >= params.p()) {
            return Err(Error::Params(alloc::format!("digit {bad} out of range")));
        }
        Ok(Weight { r, twist: params.modq1(twist) })
    }

    /// Checked constructor from signed digits; `None` if any digit leaves `[0, p-1]`.
    pub fn from_signed(params: &Params, r: &[i64], twist: i64) -> Option<Self> {
        if r.len() != params.f() || r.iter().any(|&x| x < 0 || x >= params.p() as i64) {
            return None;
        }
        Some(Weight { r: r.iter().map(|&x| x as u32).collect(), twist: params.modq1(twist) })
    }

    /// Equality up to a determinant twist.
    pub fn same_up_to_twist(&self, other: &Weight) -> bool {
        self.r == other.r
    }

    pub fn digits_i64(&self) -> Vec<i64> {
        self.r.iter().map(|&x| x as i64).collect()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.r.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")?;
        if self.twist != 0 {
            write!(f, "⊗det^{}", self.twist)?;
        }
        Ok(())
    }
}

impl ICharacter {
    pub fn new(params: &Params, a: i64, b: i64) -> Self {
        ICharacter { a: params.modq1(a), b: params.modq1(b) }
    }

    pub fn mul(&self, params: &Params, other: &ICharacter) -> Self {
        ICharacter::new(params, (self.a + other.a) as i64, (self.b + other.b) as i64)
    }

    pub fn is_s_fixed(&self) -> bool {
        self.a == self.b
    }

    /// Value on the Teichmuller diagonal `diag(x, y)` with `x = g^i`, `y = g^j`,
    /// returned as an exponent of the generator `g`.
    pub fn log_value(&self, params: &Params, log_x: u64, log_y: u64) -> u64 {
        let n = params.qm1();
        ((self.a as u128 * log_x as u128 + self.b as u128 * log_y as u128) % n as u128) as u64
    }
}

impl fmt::Display for ICharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.a, self.b)
    }
}

pub fn chi_of_weight(params: &Params, sigma: &Weight) -> ICharacter {
    let sum = params.weighted_sum(&sigma.digits_i64());
    ICharacter::new(params, sum + sigma.twist as i64, sigma.twist as i64)
}

pub fn conjugate_char(chi: &ICharacter) -> ICharacter {
    ICharacter { a: chi.b, b: chi.a }
}

pub fn alpha(params: &Params) -> ICharacter {
    ICharacter::new(params, 1, -1)
}

/// Digits `s` (not all `p - 1`) of `a - b` mod `q - 1` and the twist `t = b`.
pub fn char_normal_form(params: &Params, chi: &ICharacter) -> (Vec<u32>, u64) {
    let diff = params.modq1(chi.a as i64 - chi.b as i64);
    (params.digits(diff), chi.b)
}

/// `chi * alpha^(k p^j)`.
pub fn char_times_alpha_power(params: &Params, chi: &ICharacter, j: usize, k: i64) -> ICharacter {
    let e = (k % params.qm1() as i64) * params.pow(j as i64) as i64;
    ICharacter::new(params, chi.a as i64 + e, chi.b as i64 - e)
}

pub fn weights_of_char(params: &Params, chi: &ICharacter) -> Vec<Weight> {
    let (s, t) = char_normal_form(params, chi);
    let mut out = alloc::vec![Weight { r: s, twist: t }];
    if chi.is_s_fixed() {
        out.push(Weight { r: alloc::vec![params.p() - 1; params.f()], twist: t });
    }
    out
}

/// The weight `σ^[s]` whose `I_1`-invariants carry `χ_σ^s`.
pub fn sigma_s(params: &Params, sigma: &Weight) -> Weight {
    let p = params.p();
    let sum = params.weighted_sum(&sigma.digits_i64());
    Weight {
        r: sigma.r.iter().map(|&x| p - 1 - x).collect(),
        twist: params.modq1(sigma.twist as i64 + sum),
    }
}

/// Twist of the contragredient: `(r) ⊗ det^t` dualizes to `(r) ⊗ det^(-t - sum p^i r_i)`.
pub fn dual_weight(params: &Params, sigma: &Weight) -> Weight {
    let sum = params.weighted_sum(&sigma.digits_i64());
    Weight { r: sigma.r.clone(), twist: params.modq1(-(sigma.twist as i64) - sum) }
}

pub fn weight_dim(sigma: &Weight) -> u64 {
    sigma.r.iter().map(|&x| x as u64 + 1).product()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtLevel {
    ModZ1,
    ModK1,
}

/// Dimension of `Ext^1_I(χ', χ)` together with the sign and slot of the witnessing `α`-power.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ext1 {
    pub dim: u32,
    pub witness: Option<(i8, usize)>,
}

pub fn ext1_dim_i(params: &Params, chi_prime: &ICharacter, chi: &ICharacter, level: ExtLevel) -> Ext1 {
    let signs: &[i64] = match level {
        ExtLevel::ModK1 => &[-1],
        ExtLevel::ModZ1 => &[-1, 1],
    };
    for &k in signs {
        for j in 0..params.f() {
            if char_times_alpha_power(params, chi, j, k) == *chi_prime {
                return Ext1 { dim: 1, witness: Some((k as i8, j)) };
            }
        }
    }
    Ext1 { dim: 0, witness: None }
}
