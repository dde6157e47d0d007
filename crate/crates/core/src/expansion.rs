use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::local::{DenomGen, DenomImage, LocalizedElem, LocalizedJson};
use crate::partition::Partition;
use crate::poly::Polynomial;
use crate::schur::{factorial_schur_tableaux, Alphabet};
use crate::var::{Family, VarId};
use crate::weighted::{
    diagonal_factors_in, psi_mu, psi_mu_vw_in, weighted_schur_flavored, AggregateSymbols,
    WeightedFlavor,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Basis {
    /// `s_nu(x | a)`
    FactorialA,
    /// `s_nu^w(v; x | a)`
    WeightedFactorial,
    /// `s_nu^w(v; x)`
    Weighted,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::FactorialA => "factorial",
            Basis::WeightedFactorial => "weighted-factorial",
            Basis::Weighted => "weighted",
        }
    }

    fn flavor(self) -> WeightedFlavor {
        match self {
            Basis::Weighted => WeightedFlavor::ZERO,
            _ => WeightedFlavor::FACTORIAL,
        }
    }

    /// The basis element for `nu` as a localized element.
    pub fn element(self, nu: &Partition) -> LocalizedElem {
        match self {
            Basis::FactorialA => {
                LocalizedElem::new(factorial_schur_tableaux(nu, Alphabet::A), Default::default())
            }
            _ => weighted_schur_flavored(nu, self.flavor()),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ExpansionResult {
    pub basis: Basis,
    /// Nonzero coefficients only.
    pub coefficients: BTreeMap<Partition, LocalizedElem>,
    pub residual: LocalizedElem,
}

impl ExpansionResult {
    pub fn residual_zero(&self) -> bool {
        self.residual.is_zero()
    }

    pub fn coefficient(&self, nu: &Partition) -> LocalizedElem {
        self.coefficients
            .get(nu)
            .cloned()
            .unwrap_or_else(LocalizedElem::zero)
    }

    /// Coefficientwise agreement under `loc_equal`, supports included.
    pub fn same_coefficients(&self, other: &ExpansionResult) -> bool {
        let keys: std::collections::BTreeSet<_> = self
            .coefficients
            .keys()
            .chain(other.coefficients.keys())
            .collect();
        keys.into_iter()
            .all(|k| self.coefficient(k).loc_equal(&other.coefficient(k)))
    }

    pub fn to_json(&self) -> ExpansionJson {
        ExpansionJson {
            basis: self.basis.name().to_string(),
            coefficients: self
                .coefficients
                .iter()
                .map(|(nu, c)| CoefficientJson {
                    partition: nu.rows().to_vec(),
                    text: c.canonical_string(),
                    value: c.to_json(),
                })
                .collect(),
            residual_zero: self.residual_zero(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ExpansionJson {
    pub basis: String,
    pub coefficients: Vec<CoefficientJson>,
    pub residual_zero: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoefficientJson {
    pub partition: Vec<u32>,
    pub text: String,
    pub value: LocalizedJson,
}

fn x_a_degree(p: &Polynomial) -> u32 {
    p.degree_in(|f| matches!(f, Family::X | Family::A | Family::Aprime | Family::Y | Family::Z))
}

/// Expands a symmetric polynomial over `{s_nu(x | a)}` by triangular
/// interpolation at the points `x = a_{bar nu}`.
pub fn expand_factorial(p: &Polynomial, d: usize) -> Result<ExpansionResult> {
    let candidates = Partition::enumerate(d, x_a_degree(p), None);
    let mut basis_cache: HashMap<Partition, Polynomial> = HashMap::new();
    let mut coeffs: BTreeMap<Partition, Polynomial> = BTreeMap::new();
    for nu in &candidates {
        let mut rem = psi_mu(p, nu);
        for (rho, f) in &coeffs {
            if nu.contains_same_d(rho) {
                let s = basis_cache
                    .entry(rho.clone())
                    .or_insert_with(|| factorial_schur_tableaux(rho, Alphabet::A));
                rem = &rem - &(f * &psi_mu(s, nu));
            }
        }
        if rem.is_zero() {
            continue;
        }
        let a_nu = AggregateSymbols::a_lambda(nu);
        for rho in nu.lower_set() {
            let factor = &a_nu - &AggregateSymbols::a_lambda(&rho);
            rem = rem.exact_divide(&factor).map_err(|_| {
                Error::NotInSpan(format!("division at {nu} is not exact"))
            })?;
        }
        coeffs.insert(nu.clone(), rem);
    }
    let mut residual = p.clone();
    for (nu, f) in &coeffs {
        let s = basis_cache
            .entry(nu.clone())
            .or_insert_with(|| factorial_schur_tableaux(nu, Alphabet::A));
        residual = &residual - &(f * &*s);
    }
    if !residual.is_zero() {
        return Err(Error::NotInSpan(format!(
            "residual {residual} survives with candidates up to size {}",
            x_a_degree(p)
        )));
    }
    Ok(ExpansionResult {
        basis: Basis::FactorialA,
        coefficients: coeffs
            .into_iter()
            .map(|(k, v)| (k, LocalizedElem::new(v, Default::default())))
            .collect(),
        residual: LocalizedElem::zero(),
    })
}

/// `c_{lambda mu}^nu(a, b)`: the expansion of `s_lambda(x | b) s_mu(x | a)`
/// over `{s_nu(x | a)}`, with `b` realised as the `a'` alphabet.
pub fn structure_constants(lambda: &Partition, mu: &Partition) -> Result<ExpansionResult> {
    structure_constants_in(lambda, mu, Alphabet::Aprime)
}

/// Same as [`structure_constants`] with an explicit alphabet for the
/// `lambda` factor (`A` gives `c(a, a)`, `Zero` gives `c(a, 0)`).
pub fn structure_constants_in(
    lambda: &Partition,
    mu: &Partition,
    b: Alphabet,
) -> Result<ExpansionResult> {
    if lambda.d() != mu.d() {
        return Err(Error::RowBoundMismatch(lambda.d(), mu.d()));
    }
    let prod = &factorial_schur_tableaux(lambda, b) * &factorial_schur_tableaux(mu, Alphabet::A);
    let res = expand_factorial(&prod, mu.d())?;
    for nu in res.coefficients.keys() {
        if !nu.contains_same_d(mu) || nu.size() > lambda.size() + mu.size() {
            return Err(Error::Mismatch(format!(
                "coefficient at {nu} breaks the support bound for {lambda} * {mu}"
            )));
        }
    }
    Ok(res)
}

/// Expands `e` over a weighted basis by the triangular sweep through
/// `psi_nu^{vw}`. For the `a = 0` basis the sweep runs over
/// `s_nu(x^v | a'^{vw})` and sets `a' = 0` at the end, since the evaluations
/// alone do not separate the `a = 0` basis.
pub fn weighted_expand_interpolate(
    e: &LocalizedElem,
    d: usize,
    degree_bound: u32,
    basis: Basis,
) -> Result<ExpansionResult> {
    let (flavor, target) = match basis {
        Basis::WeightedFactorial => (WeightedFlavor::FACTORIAL, Family::A),
        Basis::Weighted => {
            if e.involves_family(Family::Aprime) {
                return Err(Error::Unsupported(
                    "the a = 0 sweep reserves the a' alphabet".into(),
                ));
            }
            (WeightedFlavor::AUX, Family::Aprime)
        }
        Basis::FactorialA => {
            return Err(Error::Unsupported(
                "use expand_factorial for the factorial basis".into(),
            ))
        }
    };
    let candidates = Partition::enumerate(d, degree_bound, None);
    let mut basis_cache: HashMap<Partition, LocalizedElem> = HashMap::new();
    let mut coeffs: BTreeMap<Partition, LocalizedElem> = BTreeMap::new();
    for nu in &candidates {
        let mut rem = psi_mu_vw_in(e, nu, target);
        for (rho, f) in &coeffs {
            if nu.contains_same_d(rho) {
                let s = basis_cache
                    .entry(rho.clone())
                    .or_insert_with(|| weighted_schur_flavored(rho, flavor));
                rem = &rem - &(f * &psi_mu_vw_in(s, nu, target));
            }
        }
        let mut rem = rem.normalize();
        if rem.is_zero() {
            continue;
        }
        for factor in diagonal_factors_in(nu, target) {
            rem = rem.checked_div(&factor).map_err(|_| Error::MembershipViolation {
                partition: nu.clone(),
                reason: "division by the diagonal value is not exact".into(),
            })?;
        }
        let rem = rem.normalize();
        if !rem.denominators_all(|g| matches!(g, DenomGen::WLambda(_))) {
            return Err(Error::MembershipViolation {
                partition: nu.clone(),
                reason: format!("denominator outside the w_lambda generators in {rem}"),
            });
        }
        coeffs.insert(nu.clone(), rem);
    }
    if basis == Basis::Weighted {
        coeffs = coeffs
            .into_iter()
            .map(|(nu, f)| {
                let f = f
                    .map_with(
                        |v| (v.family == Family::Aprime).then(Polynomial::zero),
                        |_| Ok(DenomImage::Same),
                    )?
                    .normalize();
                Ok((nu, f))
            })
            .collect::<Result<BTreeMap<_, _>>>()?;
        coeffs.retain(|_, f| !f.is_zero());
    }
    finish_weighted(e, basis, coeffs, degree_bound)
}

fn finish_weighted(
    e: &LocalizedElem,
    basis: Basis,
    coeffs: BTreeMap<Partition, LocalizedElem>,
    degree_bound: u32,
) -> Result<ExpansionResult> {
    let mut residual = e.clone();
    for (nu, f) in &coeffs {
        residual = &residual - &(f * &basis.element(nu));
    }
    let residual = residual.normalize();
    if !residual.is_zero() {
        return Err(Error::NotInSpan(format!(
            "weighted residual survives with candidates up to size {degree_bound}"
        )));
    }
    Ok(ExpansionResult {
        basis,
        coefficients: coeffs,
        residual,
    })
}

/// A weighted element written as `sum_nu g_nu(z) s_nu` where `z` stands for
/// `x_ch / v_ch` and the `s_nu` belong to a weighted basis. Produced by
/// substituting shifted alphabets into `c_{lambda mu}^nu(a, b)`.
#[derive(Debug, Clone)]
pub struct ZExpansion {
    pub d: usize,
    pub basis: Basis,
    /// `terms[nu][k]` is the coefficient of `z^k s_nu`.
    pub terms: BTreeMap<Partition, Vec<LocalizedElem>>,
    /// The element being represented.
    pub target: LocalizedElem,
}

fn z() -> VarId {
    VarId::z(1)
}

impl ZExpansion {
    /// `s_lambda(x^v | src^{vw}) * s_mu(x^v | basis^{vw})`, where `src` is
    /// the factorial or zero weighted alphabet.
    pub fn from_product(
        lambda: &Partition,
        mu: &Partition,
        source: Basis,
        basis: Basis,
    ) -> Result<ZExpansion> {
        if basis == Basis::FactorialA || source == Basis::FactorialA {
            return Err(Error::Unsupported("weighted bases only".into()));
        }
        let d = mu.d();
        let consts = structure_constants(lambda, mu)?;
        let shift = |l: u32, factorial: bool| {
            let wz = &Polynomial::var(VarId::w(l)) * &Polynomial::var(z());
            if factorial {
                &Polynomial::var(VarId::a(l)) - &wz
            } else {
                -wz
            }
        };
        let mut terms = BTreeMap::new();
        for (nu, c) in &consts.coefficients {
            let g = c.numerator().substitute(|v| match v.family {
                Family::A => Some(shift(v.index, basis == Basis::WeightedFactorial)),
                Family::Aprime => Some(shift(v.index, source == Basis::WeightedFactorial)),
                _ => None,
            });
            let zdeg = g.degree_in(|f| f == Family::Z);
            let mut parts = vec![Polynomial::zero(); zdeg as usize + 1];
            for (m, coeff) in g.terms() {
                let k = m.exponent(z());
                let rest = crate::poly::Monomial::from_pairs(
                    m.factors().iter().filter(|(v, _)| *v != z()).cloned(),
                );
                parts[k as usize].add_term(rest, coeff.clone());
            }
            terms.insert(
                nu.clone(),
                parts
                    .into_iter()
                    .map(|p| LocalizedElem::new(p, Default::default()))
                    .collect(),
            );
        }
        let target = &source.element(lambda) * &basis.element(mu);
        Ok(ZExpansion {
            d,
            basis,
            terms,
            target,
        })
    }

    /// The element the expansion spells out, with `z = x_ch / v_ch`.
    pub fn evaluate(&self) -> LocalizedElem {
        let zloc = LocalizedElem::over(AggregateSymbols::x_ch(self.d), DenomGen::VCh { d: self.d });
        let mut out = LocalizedElem::zero();
        for (nu, parts) in &self.terms {
            let s = self.basis.element(nu);
            let mut zk = LocalizedElem::one();
            for g in parts {
                out = &out + &(&(g * &zk) * &s);
                zk = &zk * &zloc;
            }
        }
        out
    }
}

/// Eliminates the powers of `z = x_ch / v_ch` with the weighted Pieri rule:
/// `z s_nu = sum_{nu' -> nu} s_{nu'} / w_nu`, plus `(a_nu / w_nu) s_nu` in
/// the factorial case.
pub fn weighted_expand_pieri(pre: &ZExpansion) -> Result<ExpansionResult> {
    let factorial = match pre.basis {
        Basis::WeightedFactorial => true,
        Basis::Weighted => false,
        Basis::FactorialA => return Err(Error::Unsupported("weighted bases only".into())),
    };
    let mut work = pre.terms.clone();
    let mut done: BTreeMap<Partition, LocalizedElem> = BTreeMap::new();
    // Reductions only feed nu itself at a lower power or strictly larger
    // partitions, so one pass in size order suffices.
    while let Some((nu, mut parts)) = work.pop_first() {
        let gen = DenomGen::WLambda(nu.clone());
        let inv_w = LocalizedElem::over(Polynomial::one(), gen.clone());
        let covers = nu.covers_adding_one_box();
        while parts.len() > 1 {
            let top = parts.pop().expect("nonempty");
            let k = parts.len();
            if top.is_zero() {
                continue;
            }
            let share = &top * &inv_w;
            if factorial {
                let diag = LocalizedElem::over(AggregateSymbols::a_lambda(&nu), gen.clone());
                parts[k - 1] = &parts[k - 1] + &(&top * &diag);
            }
            for cover in &covers {
                let slot = work.entry(cover.clone()).or_default();
                if slot.len() < k {
                    slot.resize(k, LocalizedElem::zero());
                }
                slot[k - 1] = &slot[k - 1] + &share;
            }
        }
        let c = parts
            .pop()
            .unwrap_or_else(LocalizedElem::zero)
            .normalize();
        if !c.is_zero() {
            done.insert(nu, c);
        }
    }
    let bound = done.keys().map(|p| p.size()).max().unwrap_or(0);
    finish_weighted(&pre.target, pre.basis, done, bound)
}

/// Applies `a_l -> a_l + t` (with `t` a fresh symbol) to every coefficient.
pub fn shift_a(e: &LocalizedElem) -> LocalizedElem {
    let t = Polynomial::var(VarId::z(2));
    e.map_with(
        |v| (v.family == Family::A).then(|| &Polynomial::var(v) + &t),
        |_| Ok(DenomImage::Same),
    )
    .expect("no denominator is remapped")
}
