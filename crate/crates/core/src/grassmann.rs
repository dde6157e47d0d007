use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expansion::{weighted_expand_interpolate, Basis};
use crate::local::{DenomGen, DenomImage, LocalizedElem};
use crate::partition::Partition;
use crate::poly::{int, Polynomial, Rational};
use crate::schur::{factorial_schur_tableaux, Alphabet};
use crate::var::{Family, VarId};
use crate::verify::Check;
use crate::weighted::{psi_mu_vw, weighted_factorial_schur, weighted_schur};

/// Weights `itw_1..itw_n` and the twist `u` at a finite stage `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightConfig {
    pub d: usize,
    pub n: usize,
    pub itw: Vec<u32>,
    pub u: u32,
}

impl WeightConfig {
    pub fn new(d: usize, itw: Vec<u32>, u: u32) -> Result<Self> {
        let cfg = WeightConfig {
            d,
            n: itw.len(),
            itw,
            u,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.d == 0 {
            return Err(Error::InvalidConfig("d must be positive".into()));
        }
        if self.itw.len() != self.n {
            return Err(Error::InvalidConfig(format!(
                "itw has {} entries but n = {}",
                self.itw.len(),
                self.n
            )));
        }
        if self.n <= self.d {
            return Err(Error::InvalidConfig(format!(
                "n = {} must exceed d = {}",
                self.n, self.d
            )));
        }
        if self.u == 0 {
            return Err(Error::InvalidConfig("u must be positive".into()));
        }
        Ok(())
    }

    /// `itw_l + u/d`, the image of `w_l`.
    pub fn w_value(&self, l: u32) -> Result<Rational> {
        if l == 0 || l as usize > self.n {
            return Err(Error::IndexOutOfConfig { index: l, n: self.n });
        }
        Ok(int(self.itw[l as usize - 1] as i64) + Rational::new((self.u as i64).into(), (self.d as i64).into()))
    }

    /// `q_i = bar itw_i + u/d` with `bar itw_i = itw_{n+1-i}`.
    pub fn q(&self, i: u32) -> Rational {
        self.w_value(self.n as u32 + 1 - i).expect("1 <= i <= n")
    }

    /// The stage-`n` configuration obtained by dropping the last weight.
    pub fn truncated(&self) -> Result<WeightConfig> {
        WeightConfig::new(self.d, self.itw[..self.n - 1].to_vec(), self.u)
    }

    pub fn fixed_points(&self) -> Vec<Partition> {
        Partition::rectangle(self.d, self.n)
    }
}

impl fmt::Display for WeightConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let itw: Vec<String> = self.itw.iter().map(|w| w.to_string()).collect();
        write!(f, "d={} n={} itw=({}) u={}", self.d, self.n, itw.join(","), self.u)
    }
}

fn eval_denominator(g: &DenomGen, cfg: &WeightConfig) -> Result<DenomImage> {
    match g {
        DenomGen::WLambda(_) => {
            let p = g.to_polynomial();
            let mut total = Rational::from_integer(0.into());
            for (m, c) in p.terms() {
                let mut t = c.clone();
                for (v, e) in m.factors() {
                    if v.family != Family::W {
                        return Err(Error::UnmappedDenominator(g.to_string()));
                    }
                    for _ in 0..*e {
                        t *= cfg.w_value(v.index)?;
                    }
                }
                total += t;
            }
            Ok(DenomImage::Scalar(total))
        }
        _ => Err(Error::UnmappedDenominator(g.to_string())),
    }
}

/// `phi_n`: `w_l -> itw_l + u/d`, `a_l -> -y_{n+1-l}` (or 0 past `n`).
pub fn phi_n(e: &LocalizedElem, cfg: &WeightConfig) -> Result<Polynomial> {
    let n = cfg.n as u32;
    for v in e.numerator().variables() {
        match v.family {
            Family::W if v.index > n => {
                return Err(Error::IndexOutOfConfig {
                    index: v.index,
                    n: cfg.n,
                })
            }
            Family::W | Family::A => {}
            _ => {
                return Err(Error::Unsupported(format!(
                    "phi_n is defined on w and a only, found {v}"
                )))
            }
        }
    }
    let out = e.map_with(
        |v| match v.family {
            Family::W => Some(Polynomial::constant(cfg.w_value(v.index).expect("checked"))),
            Family::A if v.index <= n => Some(-Polynomial::var(VarId::y(n + 1 - v.index))),
            Family::A => Some(Polynomial::zero()),
            _ => None,
        },
        |g| eval_denominator(g, cfg),
    )?;
    Ok(out.numerator().clone())
}

/// `phi_n(psi_mu(s_lambda^w(v; x | a)))`.
pub fn restriction_via_phi(lambda: &Partition, mu: &Partition, cfg: &WeightConfig) -> Result<Polynomial> {
    restriction_of(&weighted_factorial_schur(lambda), mu, cfg)
}

fn restriction_of(s: &LocalizedElem, mu: &Partition, cfg: &WeightConfig) -> Result<Polynomial> {
    phi_n(&psi_mu_vw(s, mu), cfg)
}

/// `s_lambda` evaluated at `x_i = -(y^mu)_{mu_i}`, `a_l = -(y^mu)_{n+1-l}`,
/// where `(y^mu)_i = y_i - (q_i / q_mu) y_mu` and `mu` is read as a subset.
pub fn restriction_direct(lambda: &Partition, mu: &Partition, cfg: &WeightConfig) -> Result<Polynomial> {
    let n = cfg.n as u32;
    let subset = mu.to_subset(cfg.n)?;
    let q_mu: Rational = subset.elements.iter().map(|&j| cfg.q(j)).sum();
    let y_mu = Polynomial::sum_of(subset.elements.iter().map(|&j| VarId::y(j)));
    let y_shift = |i: u32| -> Polynomial {
        &Polynomial::var(VarId::y(i)) - &y_mu.scale(&(cfg.q(i) / &q_mu))
    };
    let s = factorial_schur_tableaux(lambda, Alphabet::A);
    for v in s.variables() {
        if v.family == Family::A && v.index > n {
            return Err(Error::NotInRectangle {
                partition: lambda.clone(),
                d: cfg.d,
                cols: cfg.n - cfg.d,
            });
        }
    }
    Ok(s.substitute(|v| match v.family {
        Family::X => Some(-y_shift(subset.elements[v.index as usize - 1])),
        Family::A => Some(-y_shift(n + 1 - v.index)),
        _ => None,
    }))
}

/// Evaluates the weights in `s_lambda^w(v; x | a)` (or `s_lambda^w(v; x)`).
pub fn evaluate_weights(lambda: &Partition, cfg: &WeightConfig, factorial: bool) -> Result<LocalizedElem> {
    let s = if factorial {
        weighted_factorial_schur(lambda)
    } else {
        weighted_schur(lambda)
    };
    if let Some(l) = s.numerator().max_index(Family::W) {
        if l as usize > cfg.n {
            return Err(Error::IndexOutOfConfig { index: l, n: cfg.n });
        }
    }
    Ok(s
        .map_with(
            |v| (v.family == Family::W).then(|| Polynomial::constant(cfg.w_value(v.index).expect("checked"))),
            |g| match g {
                DenomGen::VCh { .. } => Ok(DenomImage::Same),
                _ => eval_denominator(g, cfg),
            },
        )?
        .normalize())
}

/// Fixed-point restrictions of the classes indexed by `P(d, n)`.
#[derive(Debug, Clone)]
pub struct RestrictionTable {
    pub config: WeightConfig,
    pub partitions: Vec<Partition>,
    entries: BTreeMap<(Partition, Partition), Polynomial>,
}

pub fn build_table(cfg: &WeightConfig) -> Result<RestrictionTable> {
    cfg.validate()?;
    let partitions = cfg.fixed_points();
    let classes: Vec<LocalizedElem> = partitions.par_iter().map(weighted_factorial_schur).collect();
    let pairs: Vec<(usize, usize)> = (0..partitions.len())
        .flat_map(|i| (0..partitions.len()).map(move |j| (i, j)))
        .collect();
    let cells: Vec<Polynomial> = pairs
        .par_iter()
        .map(|&(i, j)| restriction_of(&classes[i], &partitions[j], cfg))
        .collect::<Result<_>>()?;
    let entries = pairs
        .iter()
        .zip(cells)
        .map(|(&(i, j), c)| ((partitions[i].clone(), partitions[j].clone()), c))
        .collect();
    Ok(RestrictionTable {
        config: cfg.clone(),
        partitions,
        entries,
    })
}

impl RestrictionTable {
    pub fn entry(&self, lambda: &Partition, mu: &Partition) -> Option<&Polynomial> {
        self.entries.get(&(lambda.clone(), mu.clone()))
    }

    fn cell(&self, lambda: &Partition, mu: &Partition) -> &Polynomial {
        self.entry(lambda, mu).expect("both indices in P(d, n)")
    }

    /// Zero off the containment order, nonzero diagonal, homogeneous rows.
    pub fn invariant_failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        for lam in &self.partitions {
            for mu in &self.partitions {
                let c = self.cell(lam, mu);
                if !mu.contains_same_d(lam) && !c.is_zero() {
                    out.push(format!("entry ({lam}, {mu}) should vanish but is {c}"));
                }
                if lam == mu && c.is_zero() {
                    out.push(format!("diagonal entry at {lam} is zero"));
                }
                if !c.is_zero() && !c.is_homogeneous(2 * lam.size()) {
                    out.push(format!("entry ({lam}, {mu}) is not homogeneous of degree {}", 2 * lam.size()));
                }
            }
        }
        out
    }

    /// Expands a restriction vector (indexed like `partitions`) over the
    /// table rows by the triangular sweep.
    pub fn solve(&self, vector: &BTreeMap<Partition, Polynomial>) -> Result<BTreeMap<Partition, Polynomial>> {
        let mut coeffs: BTreeMap<Partition, Polynomial> = BTreeMap::new();
        for nu in &self.partitions {
            let mut rem = vector.get(nu).cloned().unwrap_or_else(Polynomial::zero);
            for (rho, c) in &coeffs {
                rem = &rem - &(c * self.cell(rho, nu));
            }
            if rem.is_zero() {
                continue;
            }
            let q = rem.exact_divide(self.cell(nu, nu)).map_err(|_| {
                Error::Mismatch(format!("restriction vector is not a combination of rows at {nu}"))
            })?;
            coeffs.insert(nu.clone(), q);
        }
        Ok(coeffs)
    }

    /// `C_{lambda mu}^kappa(y)` from pointwise products of rows.
    pub fn structure_constants(&self, lambda: &Partition, mu: &Partition) -> Result<BTreeMap<Partition, Polynomial>> {
        let product = self
            .partitions
            .iter()
            .map(|nu| (nu.clone(), self.cell(lambda, nu) * self.cell(mu, nu)))
            .collect();
        self.solve(&product)
    }

    pub fn to_json(&self) -> TableJson {
        TableJson {
            config: self.config.clone(),
            columns: self
                .partitions
                .iter()
                .map(|mu| ColumnJson {
                    partition: mu.rows().to_vec(),
                    subset: mu.to_subset(self.config.n).expect("in rectangle").elements,
                })
                .collect(),
            rows: self
                .partitions
                .iter()
                .map(|lam| RowJson {
                    lambda: lam.rows().to_vec(),
                    cells: self.partitions.iter().map(|mu| self.cell(lam, mu).to_string()).collect(),
                })
                .collect(),
        }
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
        let csv_err = |e: csv::Error| Error::Parse(e.to_string());
        let itw: Vec<String> = self.config.itw.iter().map(|x| x.to_string()).collect();
        w.write_record([
            "#config".to_string(),
            format!("d={}", self.config.d),
            format!("n={}", self.config.n),
            format!("itw={}", itw.join(" ")),
            format!("u={}", self.config.u),
        ])
        .map_err(csv_err)?;
        let mut header = vec!["lambda".to_string()];
        for mu in &self.partitions {
            header.push(mu.to_subset(self.config.n).expect("in rectangle").to_string());
        }
        w.write_record(&header).map_err(csv_err)?;
        for lam in &self.partitions {
            let mut rec = vec![lam.to_string()];
            rec.extend(self.partitions.iter().map(|mu| self.cell(lam, mu).to_string()));
            w.write_record(&rec).map_err(csv_err)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableJson {
    pub config: WeightConfig,
    pub columns: Vec<ColumnJson>,
    pub rows: Vec<RowJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ColumnJson {
    pub partition: Vec<u32>,
    pub subset: Vec<u32>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RowJson {
    pub lambda: Vec<u32>,
    pub cells: Vec<String>,
}

fn check(suite: &str, name: String, failure: Option<String>) -> Check {
    Check::new(suite, name, failure)
}

fn first_failure(failures: Vec<String>) -> Option<String> {
    failures.into_iter().next()
}

/// The two readings of the fixed-point restriction agree on `P(d, n)^2`.
pub fn check_restriction_routes(cfg: &WeightConfig, table: &RestrictionTable) -> Check {
    let pairs: Vec<(&Partition, &Partition)> = table
        .partitions
        .iter()
        .flat_map(|l| table.partitions.iter().map(move |m| (l, m)))
        .collect();
    let failures: Vec<String> = pairs
        .par_iter()
        .filter_map(|(l, m)| match restriction_direct(l, m, cfg) {
            Ok(p) if &p == table.cell(l, m) => None,
            Ok(p) => Some(format!("({l}, {m}): direct {p} vs composite {}", table.cell(l, m))),
            Err(e) => Some(format!("({l}, {m}): {e}")),
        })
        .collect();
    check(
        "homomorphism",
        format!("restriction routes agree [{cfg}]"),
        first_failure(failures),
    )
}

/// Product consistency for `s_lambda^w * s_mu^w` at every fixed point, in
/// both the equivariant and the `a = 0` form.
pub fn verify_homomorphism(
    cfg: &WeightConfig,
    table: &RestrictionTable,
    lambda: &Partition,
    mu: &Partition,
) -> Result<Vec<Check>> {
    let tag = format!("{lambda}*{mu} [{cfg}]");
    let bound = lambda.size() + mu.size();
    let d = cfg.d;
    let prod = &weighted_factorial_schur(lambda) * &weighted_factorial_schur(mu);
    let f = weighted_expand_interpolate(&prod, d, bound, Basis::WeightedFactorial)?;
    let mut failures = Vec::new();
    let mut phi_f: BTreeMap<Partition, Polynomial> = BTreeMap::new();
    for (kappa, c) in &f.coefficients {
        if kappa.in_rectangle(cfg.n) {
            phi_f.insert(kappa.clone(), phi_n(c, cfg)?);
        } else {
            let s = weighted_factorial_schur(kappa);
            for nu in &table.partitions {
                let r = restriction_of(&s, nu, cfg)?;
                if !r.is_zero() {
                    failures.push(format!("class {kappa} outside P(d,n) restricts to {r} at {nu}"));
                }
            }
        }
    }
    let in_table = lambda.in_rectangle(cfg.n) && mu.in_rectangle(cfg.n);
    for nu in &table.partitions {
        let lhs = if in_table {
            table.cell(lambda, nu) * table.cell(mu, nu)
        } else {
            &restriction_via_phi(lambda, nu, cfg)? * &restriction_via_phi(mu, nu, cfg)?
        };
        let mut rhs = Polynomial::zero();
        for (kappa, c) in &phi_f {
            rhs = &rhs + &(c * table.cell(kappa, nu));
        }
        if lhs != rhs {
            failures.push(format!("at {nu}: product {lhs} vs expansion {rhs}"));
        }
    }
    let mut checks = vec![check("homomorphism", format!("equivariant product {tag}"), first_failure(failures))];
    if !in_table {
        return Ok(checks);
    }

    let table_consts = table.structure_constants(lambda, mu)?;
    let mut failures = Vec::new();
    for kappa in &table.partitions {
        let a = table_consts.get(kappa).cloned().unwrap_or_else(Polynomial::zero);
        let b = phi_f.get(kappa).cloned().unwrap_or_else(Polynomial::zero);
        if a != b {
            failures.push(format!("at {kappa}: table {a} vs phi_n {b}"));
        }
    }
    checks.push(check("homomorphism", format!("equivariant constants {tag}"), first_failure(failures)));

    let prod0 = &weighted_schur(lambda) * &weighted_schur(mu);
    let g = weighted_expand_interpolate(&prod0, d, bound, Basis::Weighted)?;
    let mut failures = Vec::new();
    for kappa in &table.partitions {
        let a = constant_part(table_consts.get(kappa));
        let b = match g.coefficients.get(kappa) {
            Some(c) => phi_n(c, cfg)?,
            None => Polynomial::zero(),
        };
        if a != b {
            failures.push(format!("at {kappa}: table {a} vs phi_n {b}"));
        }
    }
    checks.push(check("homomorphism", format!("nonequivariant constants {tag}"), first_failure(failures)));
    Ok(checks)
}

fn constant_part(p: Option<&Polynomial>) -> Polynomial {
    p.map(|p| p.filter_terms(|m| m.is_one()))
        .unwrap_or_else(Polynomial::zero)
}

/// `Phi_n(s_lambda^w) = 0` at every fixed point, for `lambda` outside `P(d, n)`.
pub fn check_killed(cfg: &WeightConfig, lambda: &Partition) -> Result<Check> {
    let s = weighted_factorial_schur(lambda);
    let mut failure = None;
    for nu in cfg.fixed_points() {
        let r = restriction_of(&s, &nu, cfg)?;
        if !r.is_zero() {
            failure = Some(format!("restriction at {nu} is {r}"));
            break;
        }
    }
    Ok(check("homomorphism", format!("class {lambda} vanishes [{cfg}]"), failure))
}

/// `rho_n^*: y_1 -> 0, y_i -> y_{i-1}`.
pub fn rho_pullback(p: &Polynomial) -> Polynomial {
    p.substitute(|v| match v.family {
        Family::Y if v.index == 1 => Some(Polynomial::zero()),
        Family::Y => Some(Polynomial::var(VarId::y(v.index - 1))),
        _ => None,
    })
}

/// Stage stability from `n + 1` down to `n`: tables and structure constants.
pub fn pullback_check(cfg_n1: &WeightConfig) -> Result<Vec<Check>> {
    let cfg_n = cfg_n1.truncated()?;
    let (big, small) = rayon::join(|| build_table(cfg_n1), || build_table(&cfg_n));
    let (big, small) = (big?, small?);
    let tag = format!("[{cfg_n1} -> n={}]", cfg_n.n);

    let mut failures = Vec::new();
    for lam in &big.partitions {
        for mu in &small.partitions {
            let shifted = mu.to_subset(cfg_n.n)?.shifted().to_partition()?;
            let pulled = rho_pullback(big.cell(lam, &shifted));
            let expected = small.entry(lam, mu).cloned().unwrap_or_else(Polynomial::zero);
            if pulled != expected {
                failures.push(format!("({lam}, {mu}): pulled back {pulled} vs {expected}"));
            }
        }
    }
    let mut checks = vec![check("pullback", format!("restriction tables {tag}"), first_failure(failures))];

    let mut eq_fail = Vec::new();
    let mut neq_fail = Vec::new();
    for lam in &small.partitions {
        for mu in &small.partitions {
            let c_big = big.structure_constants(lam, mu)?;
            let c_small = small.structure_constants(lam, mu)?;
            for kappa in &small.partitions {
                let b = c_big.get(kappa).map(rho_pullback).unwrap_or_else(Polynomial::zero);
                let s = c_small.get(kappa).cloned().unwrap_or_else(Polynomial::zero);
                if b != s {
                    eq_fail.push(format!("{lam}*{mu} at {kappa}: {b} vs {s}"));
                }
                let b0 = constant_part(c_big.get(kappa));
                let s0 = constant_part(c_small.get(kappa));
                if b0 != s0 {
                    neq_fail.push(format!("{lam}*{mu} at {kappa}: {b0} vs {s0}"));
                }
            }
        }
    }
    checks.push(check("pullback", format!("equivariant constants {tag}"), first_failure(eq_fail)));
    checks.push(check("pullback", format!("nonequivariant constants {tag}"), first_failure(neq_fail)));
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn p(rows: &[u32]) -> Partition {
        Partition::new(rows.len(), rows.to_vec()).unwrap()
    }

    fn poly(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn cfg() -> WeightConfig {
        WeightConfig::new(2, vec![1, 0, 2, 1], 2).unwrap()
    }

    #[test]
    fn config_validation() {
        assert!(WeightConfig::new(2, vec![1, 1], 2).is_err());
        assert!(WeightConfig::new(2, vec![1, 1, 1], 0).is_err());
        let bad = WeightConfig { d: 2, n: 4, itw: vec![1, 2, 3], u: 1 };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn phi_examples() {
        let c = cfg();
        let e = |s: &str| LocalizedElem::new(poly(s), Default::default());
        assert_eq!(phi_n(&e("a3"), &c).unwrap(), poly("-y2"));
        assert_eq!(phi_n(&e("a5"), &c).unwrap(), Polynomial::zero());
        assert_eq!(phi_n(&e("w2"), &c).unwrap(), Polynomial::one());
        assert!(matches!(phi_n(&e("w5"), &c), Err(Error::IndexOutOfConfig { index: 5, n: 4 })));
    }

    #[test]
    fn one_box_restriction() {
        let c = cfg();
        let div = p(&[1, 0]);
        // (w2 + w1)/(w3 + w1) (a3 + a1) - (a2 + a1) with w = (2, 1, 3, 2)
        let expected = &poly("-y2 - y4").scale(&rat(3, 5)) + &poly("y3 + y4");
        assert_eq!(restriction_via_phi(&div, &div, &c).unwrap(), expected);
        assert_eq!(restriction_direct(&div, &div, &c).unwrap(), expected);
        assert!(restriction_via_phi(&div, &p(&[0, 0]), &c).unwrap().is_zero());
        assert!(restriction_direct(&div, &p(&[0, 0]), &c).unwrap().is_zero());
    }

    #[test]
    fn empty_class_restricts_to_one() {
        let c = cfg();
        for mu in c.fixed_points() {
            assert_eq!(restriction_via_phi(&p(&[0, 0]), &mu, &c).unwrap(), Polynomial::one());
            assert_eq!(restriction_direct(&p(&[0, 0]), &mu, &c).unwrap(), Polynomial::one());
        }
    }

    #[test]
    fn small_table_shape() {
        let c = WeightConfig::new(2, vec![1, 0, 2], 2).unwrap();
        let t = build_table(&c).unwrap();
        assert_eq!(t.partitions.len(), 3);
        assert!(t.invariant_failures().is_empty());
        let csv = t.to_csv().unwrap();
        assert_eq!(csv.lines().count(), 5);
        assert!(csv.lines().nth(1).unwrap().starts_with("lambda,"));
        let j = serde_json::to_value(t.to_json()).unwrap();
        assert_eq!(j["rows"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn evaluated_weights() {
        let c = cfg();
        let div = p(&[1, 0]);
        let vch = DenomGen::VCh { d: 2 };
        let fs = LocalizedElem::over(poly("3*x1 + 3*x2 - a1*v1 - a1*v2 - a2*v1 - a2*v2"), vch.clone());
        assert!(evaluate_weights(&div, &c, true).unwrap().loc_equal(&fs));
        let s = LocalizedElem::over(poly("3*x1 + 3*x2"), vch);
        assert!(evaluate_weights(&div, &c, false).unwrap().loc_equal(&s));
        assert!(evaluate_weights(&p(&[0, 0]), &c, true).unwrap().loc_equal(&LocalizedElem::one()));
        let small = WeightConfig::new(2, vec![1, 0, 2], 2).unwrap();
        assert!(matches!(
            evaluate_weights(&p(&[3, 0]), &small, true),
            Err(Error::IndexOutOfConfig { .. })
        ));
    }

    #[test]
    fn three_zero_is_killed() {
        assert!(check_killed(&cfg(), &p(&[3, 0])).unwrap().passed);
    }

    #[test]
    fn div_squared_is_consistent() {
        let c = cfg();
        let t = build_table(&c).unwrap();
        let div = p(&[1, 0]);
        for ch in verify_homomorphism(&c, &t, &div, &div).unwrap() {
            assert!(ch.passed, "{ch:?}");
        }
    }

    #[test]
    fn pullback_small() {
        let c = WeightConfig::new(2, vec![1, 0, 2, 1], 2).unwrap();
        for ch in pullback_check(&c).unwrap() {
            assert!(ch.passed, "{ch:?}");
        }
    }
}
