//! Weighted (factorial) Schur functions `s_lambda^w(v; x | a)`, the
//! evaluations `psi_mu`, the weighted vanishing values, and the weighted
//! Pieri rules.
//!
//! The weighted functions are the tableau sum evaluated at the shifted
//! alphabets
//!
//! ```text
//! x_i^v    = x_i - (v_i / v_ch) x_ch
//! a_l^{vw} = a_l - (w_l / v_ch) x_ch
//! 0_l^{vw} =     - (w_l / v_ch) x_ch
//! ```
//!
//! Every factor of the tableau product has denominator `v_ch`, so the result
//! is a polynomial numerator over `v_ch^{|lambda|}`.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::local::{DenomGen, DenomImage, LocalizedElem};
use crate::partition::Partition;
use crate::poly::Polynomial;
use crate::schur::{tableau_sum, Alphabet};
use crate::var::{Family, VarId};

/// The alphabets a weighted function is built from: which `a`-alphabet is
/// shifted (or zero) and which weight family `w` / `w'` shifts it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WeightedFlavor {
    pub a: Alphabet,
    pub w: Family,
}

impl WeightedFlavor {
    /// `s_lambda^w(v; x | a)`
    pub const FACTORIAL: WeightedFlavor = WeightedFlavor {
        a: Alphabet::A,
        w: Family::W,
    };
    /// `s_lambda^w(v; x)`
    pub const ZERO: WeightedFlavor = WeightedFlavor {
        a: Alphabet::Zero,
        w: Family::W,
    };
    /// `s_lambda^{w'}(v; x | a')`
    pub const PRIMED: WeightedFlavor = WeightedFlavor {
        a: Alphabet::Aprime,
        w: Family::Wprime,
    };
    /// `s_lambda^{w'}(v; x)`
    pub const PRIMED_ZERO: WeightedFlavor = WeightedFlavor {
        a: Alphabet::Zero,
        w: Family::Wprime,
    };
    /// `s_lambda^w(v; x | a')`, the auxiliary interpolation basis.
    pub const AUX: WeightedFlavor = WeightedFlavor {
        a: Alphabet::Aprime,
        w: Family::W,
    };
}

/// Sums of variables that recur everywhere.
pub struct AggregateSymbols;

impl AggregateSymbols {
    pub fn x_ch(d: usize) -> Polynomial {
        Polynomial::sum_of((1..=d as u32).map(VarId::x))
    }
    pub fn v_ch(d: usize) -> Polynomial {
        Polynomial::sum_of((1..=d as u32).map(VarId::v))
    }
    pub fn w_ch(d: usize) -> Polynomial {
        Polynomial::sum_of((1..=d as u32).map(VarId::w))
    }
    pub fn a_ch(d: usize) -> Polynomial {
        Polynomial::sum_of((1..=d as u32).map(VarId::a))
    }
    /// `sum_i a_{bar lambda_i}` in the given family.
    pub fn a_lambda_in(lambda: &Partition, fam: Family) -> Polynomial {
        Polynomial::sum_of(lambda.bar().entries().iter().map(|&b| VarId::new(fam, b)))
    }
    pub fn a_lambda(lambda: &Partition) -> Polynomial {
        Self::a_lambda_in(lambda, Family::A)
    }
    pub fn w_lambda(lambda: &Partition) -> Polynomial {
        DenomGen::WLambda(lambda.clone()).to_polynomial()
    }
    /// The `mu`-shifted alphabet `(a^mu)_l = a_l - (w_l / w_mu) a_mu`.
    pub fn mu_shifted_a(l: u32, mu: &Partition) -> LocalizedElem {
        let w_mu = Self::w_lambda(mu);
        let num = &(&Polynomial::var(VarId::a(l)) * &w_mu)
            - &(&Polynomial::var(VarId::w(l)) * &Self::a_lambda(mu));
        LocalizedElem::over(num, DenomGen::WLambda(mu.clone()))
    }
}

/// Numerators (over `v_ch`) of the shifted alphabets for a fixed `d`.
#[derive(Debug, Clone)]
pub struct ShiftedAlphabets {
    d: usize,
    x_ch: Polynomial,
    v_ch: Polynomial,
}

impl ShiftedAlphabets {
    pub fn new(d: usize) -> Self {
        ShiftedAlphabets {
            d,
            x_ch: AggregateSymbols::x_ch(d),
            v_ch: AggregateSymbols::v_ch(d),
        }
    }

    fn vch(&self) -> DenomGen {
        DenomGen::VCh { d: self.d }
    }

    /// Numerator of `x_i^v`: `x_i v_ch - v_i x_ch`.
    pub fn xv_numerator(&self, i: u32) -> Polynomial {
        &(&Polynomial::var(VarId::x(i)) * &self.v_ch) - &(&Polynomial::var(VarId::v(i)) * &self.x_ch)
    }

    /// Numerator of `a_l^{vw}` (or `0_l^{vw}` for the zero alphabet).
    pub fn avw_numerator(&self, flavor: WeightedFlavor, l: u32) -> Polynomial {
        let shift = &Polynomial::var(VarId::new(flavor.w, l)) * &self.x_ch;
        &(&flavor.a.symbol(l) * &self.v_ch) - &shift
    }

    pub fn xv(&self, i: u32) -> LocalizedElem {
        LocalizedElem::over(self.xv_numerator(i), self.vch())
    }

    pub fn avw(&self, l: u32) -> LocalizedElem {
        LocalizedElem::over(self.avw_numerator(WeightedFlavor::FACTORIAL, l), self.vch())
    }

    pub fn zero_vw(&self, l: u32) -> LocalizedElem {
        LocalizedElem::over(self.avw_numerator(WeightedFlavor::ZERO, l), self.vch())
    }

    pub fn shifted(&self, flavor: WeightedFlavor, l: u32) -> LocalizedElem {
        LocalizedElem::over(self.avw_numerator(flavor, l), self.vch())
    }
}

/// `s_lambda(x^v | a^{vw})` for the given flavor, normalized.
pub fn weighted_schur_flavored(lambda: &Partition, flavor: WeightedFlavor) -> LocalizedElem {
    let d = lambda.d();
    let sh = ShiftedAlphabets::new(d);
    let num = tableau_sum(
        lambda,
        |i| sh.xv_numerator(i),
        |l| sh.avw_numerator(flavor, l),
    );
    let den = BTreeMap::from([(DenomGen::VCh { d }, lambda.size())]);
    LocalizedElem::new(num, den).normalize()
}

/// `s_lambda^w(v; x | a)`.
pub fn weighted_factorial_schur(lambda: &Partition) -> LocalizedElem {
    weighted_schur_flavored(lambda, WeightedFlavor::FACTORIAL)
}

/// `s_lambda^w(v; x) = s_lambda(x^v | 0^{vw})`.
pub fn weighted_schur(lambda: &Partition) -> LocalizedElem {
    weighted_schur_flavored(lambda, WeightedFlavor::ZERO)
}

/// `psi_mu^{vw}`: `x_i -> target_{bar mu_i}`, `v_i -> w_{bar mu_i}`, so that
/// `v_ch -> w_mu`. The usual target alphabet is `a`.
pub fn psi_mu_vw_in(e: &LocalizedElem, mu: &Partition, target: Family) -> LocalizedElem {
    let bar = mu.bar();
    let d = mu.d() as u32;
    e.rename_with(
        |v| match v.family {
            Family::X if v.index <= d => VarId::new(target, bar.entries()[v.index as usize - 1]),
            Family::V if v.index <= d => VarId::w(bar.entries()[v.index as usize - 1]),
            _ => v,
        },
        |g| match g {
            DenomGen::VCh { .. } => DenomImage::Gen(DenomGen::WLambda(mu.clone())),
            _ => DenomImage::Same,
        },
    )
}

/// `psi_mu` on a plain polynomial in `x` and `a`: `x_i -> a_{bar mu_i}`.
pub fn psi_mu(p: &Polynomial, mu: &Partition) -> Polynomial {
    let bar = mu.bar();
    let d = mu.d() as u32;
    p.map_vars(|v| match v.family {
        Family::X if v.index <= d => VarId::a(bar.entries()[v.index as usize - 1]),
        _ => v,
    })
}

pub fn psi_mu_vw(e: &LocalizedElem, mu: &Partition) -> LocalizedElem {
    psi_mu_vw_in(e, mu, Family::A)
}

/// What the vanishing lemma predicts for `psi_mu(s_lambda^w(v; x | a))`.
#[derive(Debug, Clone)]
pub enum VanishingPrediction {
    /// `mu` does not contain `lambda`.
    Zero,
    /// `mu = lambda`: the product over the lower set, kept factor by factor.
    Diagonal(Vec<LocalizedElem>),
    /// `mu` strictly contains `lambda`: no closed form is asserted.
    Unconstrained,
}

impl VanishingPrediction {
    pub fn value(&self) -> Option<LocalizedElem> {
        match self {
            VanishingPrediction::Zero => Some(LocalizedElem::zero()),
            VanishingPrediction::Diagonal(factors) => Some(
                factors
                    .iter()
                    .fold(LocalizedElem::one(), |acc, f| &acc * f),
            ),
            VanishingPrediction::Unconstrained => None,
        }
    }
}

/// The factors `(w_rho / w_lambda) a_lambda - a_rho`, `rho` in `[lambda]_-`,
/// written over the alphabet `fam`.
pub fn diagonal_factors_in(lambda: &Partition, fam: Family) -> Vec<LocalizedElem> {
    let a_lam = AggregateSymbols::a_lambda_in(lambda, fam);
    let w_lam = AggregateSymbols::w_lambda(lambda);
    lambda
        .lower_set()
        .iter()
        .map(|rho| {
            let num = &(&AggregateSymbols::w_lambda(rho) * &a_lam)
                - &(&w_lam * &AggregateSymbols::a_lambda_in(rho, fam));
            LocalizedElem::over(num, DenomGen::WLambda(lambda.clone()))
        })
        .collect()
}

pub fn vanishing_value(lambda: &Partition, mu: &Partition) -> VanishingPrediction {
    if lambda == mu {
        VanishingPrediction::Diagonal(diagonal_factors_in(lambda, Family::A))
    } else if !mu.contains_same_d(lambda) {
        VanishingPrediction::Zero
    } else {
        VanishingPrediction::Unconstrained
    }
}

/// Left-hand side of the weighted Pieri rule: `s_div^{w'}(v;x|a') * s_lambda^w(v;x|a)`
/// (or the `a = a' = 0` version).
pub fn weighted_pieri_lhs(lambda: &Partition, factorial: bool) -> LocalizedElem {
    let d = lambda.d();
    let div = Partition::div(d);
    if factorial {
        &weighted_schur_flavored(&div, WeightedFlavor::PRIMED) * &weighted_factorial_schur(lambda)
    } else {
        &weighted_schur_flavored(&div, WeightedFlavor::PRIMED_ZERO) * &weighted_schur(lambda)
    }
}

/// Right-hand side of the weighted Pieri rule:
/// `((w'_ch / w_lambda) a_lambda - a'_ch) s_lambda^w + sum_{lambda' -> lambda} (w'_ch / w_lambda) s_{lambda'}^w`,
/// without the first term in the non-factorial case.
pub fn weighted_pieri_rhs(lambda: &Partition, factorial: bool) -> LocalizedElem {
    let d = lambda.d();
    let wp_ch = Polynomial::sum_of((1..=d as u32).map(VarId::wprime));
    let gen = DenomGen::WLambda(lambda.clone());
    let ratio = LocalizedElem::over(wp_ch.clone(), gen.clone());
    let flavor = if factorial {
        WeightedFlavor::FACTORIAL
    } else {
        WeightedFlavor::ZERO
    };
    let mut covers_sum = LocalizedElem::zero();
    for cover in lambda.covers_adding_one_box() {
        covers_sum = &covers_sum + &weighted_schur_flavored(&cover, flavor);
    }
    let mut rhs = &ratio * &covers_sum;
    if factorial {
        let ap_ch = Polynomial::sum_of((1..=d as u32).map(VarId::aprime));
        let diag_num = &(&wp_ch * &AggregateSymbols::a_lambda(lambda))
            - &(&ap_ch * &AggregateSymbols::w_lambda(lambda));
        let diag = LocalizedElem::over(diag_num, gen);
        rhs = &rhs + &(&diag * &weighted_factorial_schur(lambda));
    }
    rhs
}

/// The weighted Pieri identity holds for `lambda`.
pub fn check_weighted_pieri(lambda: &Partition, factorial: bool) -> Result<bool> {
    Ok(weighted_pieri_lhs(lambda, factorial).loc_equal(&weighted_pieri_rhs(lambda, factorial)))
}
