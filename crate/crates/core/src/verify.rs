use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expansion::{
    shift_a, structure_constants, structure_constants_in, weighted_expand_interpolate,
    weighted_expand_pieri, Basis, ExpansionResult, ZExpansion,
};
use crate::grassmann::{
    build_table, check_killed, check_restriction_routes, pullback_check, verify_homomorphism,
    WeightConfig,
};
use crate::local::{DenomGen, DenomImage, LocalizedElem};
use crate::partition::Partition;
use crate::poly::Polynomial;
use crate::schur::{ordinary_schur, Alphabet};
use crate::var::{Family, VarId};
use crate::weighted::{
    check_weighted_pieri, psi_mu_vw, vanishing_value, weighted_factorial_schur, weighted_schur,
    VanishingPrediction,
};

/// One named verification outcome.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub suite: String,
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl Check {
    pub fn new(suite: &str, name: String, failure: Option<String>) -> Check {
        Check {
            suite: suite.to_string(),
            name,
            passed: failure.is_none(),
            counterexample: failure,
        }
    }

    fn from_result(suite: &str, name: String, r: Result<Option<String>>) -> Check {
        match r {
            Ok(f) => Check::new(suite, name, f),
            Err(e) => Check::new(suite, name, Some(e.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Vanishing,
    Pieri,
    Basis,
    Closure,
    Homomorphism,
    Pullback,
    All,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Vanishing,
        Suite::Pieri,
        Suite::Basis,
        Suite::Closure,
        Suite::Homomorphism,
        Suite::Pullback,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Vanishing => "vanishing",
            Suite::Pieri => "pieri",
            Suite::Basis => "basis",
            Suite::Closure => "closure",
            Suite::Homomorphism => "homomorphism",
            Suite::Pullback => "pullback",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s}")))
    }
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "passed": self.passed(),
            "total": self.checks.len(),
            "failed": self.failures().count(),
            "checks": self.checks,
        })
    }
}

/// Bounds for a single suite run.
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub d: usize,
    pub max_size: u32,
    pub configs: Vec<WeightConfig>,
}

impl VerifyOptions {
    pub fn default_configs() -> Vec<WeightConfig> {
        vec![
            WeightConfig::new(2, vec![1, 0, 2, 1], 2).expect("valid"),
            WeightConfig::new(2, vec![1, 1, 1, 1], 2).expect("valid"),
        ]
    }

    /// The documented default bounds of each suite.
    pub fn defaults(suite: Suite) -> VerifyOptions {
        let max_size = match suite {
            Suite::Vanishing => 4,
            Suite::Pieri | Suite::Basis => 3,
            Suite::Closure => 2,
            Suite::Homomorphism | Suite::Pullback | Suite::All => 4,
        };
        VerifyOptions {
            d: 2,
            max_size,
            configs: VerifyOptions::default_configs(),
        }
    }
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<Report> {
    let checks = match suite {
        Suite::Vanishing => vanishing_suite(opts.d, opts.max_size),
        Suite::Pieri => pieri_suite(opts.d, opts.max_size),
        Suite::Basis => basis_suite(opts.d, opts.max_size, &opts.configs),
        Suite::Closure => closure_suite(opts.d, opts.max_size),
        Suite::Homomorphism => homomorphism_suite(&opts.configs, opts.max_size),
        Suite::Pullback => pullback_suite(&opts.configs),
        Suite::All => return run_all(&opts.configs),
    };
    Ok(Report { checks })
}

/// Every suite at its default bounds, plus the `d = 3` vanishing sweep.
pub fn run_all(configs: &[WeightConfig]) -> Result<Report> {
    let mut report = Report::default();
    for suite in Suite::ALL {
        let mut opts = VerifyOptions::defaults(suite);
        opts.configs = configs.to_vec();
        report.extend(run_suite(suite, &opts)?);
        if suite == Suite::Vanishing {
            report.extend(Report {
                checks: vanishing_suite(3, 3),
            });
        }
    }
    Ok(report)
}

fn pairs(parts: &[Partition]) -> Vec<(Partition, Partition)> {
    parts
        .iter()
        .flat_map(|l| parts.iter().map(move |m| (l.clone(), m.clone())))
        .collect()
}

/// `psi_mu(s_lambda^w(v; x | a))` against the vanishing prediction.
pub fn vanishing_suite(d: usize, max_size: u32) -> Vec<Check> {
    let parts = Partition::enumerate(d, max_size, None);
    let classes: BTreeMap<Partition, LocalizedElem> = parts
        .par_iter()
        .map(|l| (l.clone(), weighted_factorial_schur(l)))
        .collect();
    pairs(&parts)
        .into_par_iter()
        .filter_map(|(lam, mu)| {
            let prediction = vanishing_value(&lam, &mu);
            let expected = prediction.value()?;
            let got = psi_mu_vw(&classes[&lam], &mu);
            let kind = match prediction {
                VanishingPrediction::Zero => "vanishes",
                _ => "diagonal",
            };
            let failure = (!got.loc_equal(&expected)).then(|| format!("got {got}, expected {expected}"));
            Some(Check::new("vanishing", format!("{lam} at {mu} {kind}"), failure))
        })
        .collect()
}

pub fn pieri_suite(d: usize, max_size: u32) -> Vec<Check> {
    Partition::enumerate(d, max_size, None)
        .into_par_iter()
        .flat_map_iter(|lam| {
            [(true, "factorial"), (false, "a = 0")].map(|(factorial, label)| {
                let r = check_weighted_pieri(&lam, factorial)
                    .map(|ok| (!ok).then(|| "the two sides differ".to_string()));
                Check::from_result("pieri", format!("{label} Pieri rule at {lam}"), r)
            })
        })
        .collect()
}

fn wlambda_only(e: &LocalizedElem) -> bool {
    e.denominators_all(|g| matches!(g, DenomGen::WLambda(_)))
}

fn membership_failure(r: &ExpansionResult) -> Option<String> {
    if !r.residual_zero() {
        return Some(format!("residual {}", r.residual));
    }
    r.coefficients
        .iter()
        .find(|(_, c)| !wlambda_only(c))
        .map(|(nu, c)| format!("coefficient at {nu} has denominator outside w_lambda: {c}"))
}

/// Triangularity of the evaluation matrix, the stage witness, and the
/// two-way change of basis between the weighted bases.
pub fn basis_suite(d: usize, max_size: u32, configs: &[WeightConfig]) -> Vec<Check> {
    let parts = Partition::enumerate(d, max_size, None);
    let classes: BTreeMap<Partition, LocalizedElem> = parts
        .par_iter()
        .map(|l| (l.clone(), weighted_factorial_schur(l)))
        .collect();
    let bad: Vec<String> = pairs(&parts)
        .into_par_iter()
        .filter_map(|(lam, mu)| {
            let v = psi_mu_vw(&classes[&lam], &mu);
            if !mu.contains_same_d(&lam) && !v.is_zero() {
                Some(format!("entry ({lam}, {mu}) is {v}"))
            } else if lam == mu && v.is_zero() {
                Some(format!("diagonal entry at {lam} vanishes"))
            } else {
                None
            }
        })
        .collect();
    let mut checks = vec![Check::new(
        "basis",
        format!("evaluation matrix triangular on P({d}) up to size {max_size}"),
        bad.into_iter().next(),
    )];
    checks.extend(configs.par_iter().map(|cfg| {
        let r = build_table(cfg).map(|t| t.invariant_failures().into_iter().next());
        Check::from_result("basis", format!("stage table triangular [{cfg}]"), r)
    }).collect::<Vec<_>>());
    checks.extend(
        parts
            .par_iter()
            .flat_map_iter(|lam| {
                let fwd = weighted_expand_interpolate(
                    &classes[lam],
                    d,
                    lam.size(),
                    Basis::Weighted,
                )
                .map(|r| membership_failure(&r));
                let back = weighted_expand_interpolate(
                    &weighted_schur(lam),
                    d,
                    lam.size(),
                    Basis::WeightedFactorial,
                )
                .map(|r| membership_failure(&r));
                [
                    Check::from_result("basis", format!("factorial class {lam} over the a = 0 basis"), fwd),
                    Check::from_result("basis", format!("a = 0 class {lam} over the factorial basis"), back),
                ]
            })
            .collect::<Vec<_>>(),
    );
    checks
}

fn unordered_pairs(parts: &[Partition]) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for (i, l) in parts.iter().enumerate() {
        for m in &parts[i..] {
            out.push((l.clone(), m.clone()));
        }
    }
    out
}

fn closure_pair(lam: &Partition, mu: &Partition) -> Result<Vec<(String, Option<String>)>> {
    let d = lam.d();
    let tag = format!("{lam}*{mu}");
    let prod = &weighted_schur(lam) * &weighted_schur(mu);
    let interp = weighted_expand_interpolate(&prod, d, lam.size() + mu.size(), Basis::Weighted)?;
    let mut closure = membership_failure(&interp);
    if closure.is_none() {
        closure = interp
            .coefficients
            .iter()
            .find(|(_, c)| c.involves_family(Family::A) || c.involves_family(Family::Aprime))
            .map(|(nu, c)| format!("coefficient at {nu} involves a: {c}"));
    }
    let pre = ZExpansion::from_product(lam, mu, Basis::Weighted, Basis::Weighted)?;
    let pieri = weighted_expand_pieri(&pre)?;
    let agree = (!interp.same_coefficients(&pieri)).then(|| {
        format!(
            "interpolation {:?} vs Pieri reduction {:?}",
            render(&interp),
            render(&pieri)
        )
    });
    let consts = structure_constants_in(lam, mu, Alphabet::A)?;
    let shift = consts
        .coefficients
        .iter()
        .find(|(_, c)| !shift_a(c).loc_equal(c))
        .map(|(nu, c)| format!("c at {nu} = {c} moves under a -> a + t"));
    let classical = classical_failure(lam, mu)?;
    Ok(vec![
        (format!("a = 0 product {tag} closes"), closure),
        (format!("two routes agree on {tag}"), agree),
        (format!("shift invariance of c(a,a) for {tag}"), shift),
        (format!("classical constants for {tag}"), classical),
    ])
}

fn render(r: &ExpansionResult) -> Vec<String> {
    r.coefficients.iter().map(|(k, v)| format!("{k}: {v}")).collect()
}

/// `c_{lambda mu}^nu(0, 0)` against leading-monomial peeling of the
/// ordinary product.
fn classical_failure(lam: &Partition, mu: &Partition) -> Result<Option<String>> {
    let consts = structure_constants(lam, mu)?;
    let mut ours: BTreeMap<Partition, Polynomial> = BTreeMap::new();
    for (nu, c) in &consts.coefficients {
        let c0 = c
            .map_with(
                |v| matches!(v.family, Family::A | Family::Aprime).then(Polynomial::zero),
                |_| Ok(DenomImage::Same),
            )?
            .numerator()
            .clone();
        if !c0.is_zero() {
            ours.insert(nu.clone(), c0);
        }
    }
    let peeled = peel_ordinary(&(&ordinary_schur(lam) * &ordinary_schur(mu)), lam.d())?;
    Ok((ours != peeled).then(|| format!("computed {ours:?} vs peeled {peeled:?}")))
}

/// Expands a symmetric polynomial in `x_1..x_d` over ordinary Schur
/// polynomials by repeatedly removing the leading monomial.
pub fn peel_ordinary(p: &Polynomial, d: usize) -> Result<BTreeMap<Partition, Polynomial>> {
    let mut rest = p.clone();
    let mut out = BTreeMap::new();
    while let Some((m, c)) = rest.leading_term() {
        let rows: Vec<u32> = (1..=d as u32).map(|i| m.exponent(VarId::x(i))).collect();
        if m.factors().iter().any(|(v, _)| v.family != Family::X) {
            return Err(Error::Unsupported(format!("non-x variable in {m:?}")));
        }
        let nu = Partition::new(d, rows).map_err(|_| Error::NotInSpan(format!("leading monomial {m:?} is not dominant")))?;
        let c = c.clone();
        rest = &rest - &ordinary_schur(&nu).scale(&c);
        out.insert(nu, Polynomial::constant(c));
    }
    Ok(out)
}

pub fn closure_suite(d: usize, max_size: u32) -> Vec<Check> {
    let parts = Partition::enumerate(d, max_size, None);
    unordered_pairs(&parts)
        .into_par_iter()
        .flat_map_iter(|(lam, mu)| match closure_pair(&lam, &mu) {
            Ok(v) => v
                .into_iter()
                .map(|(name, f)| Check::new("closure", name, f))
                .collect::<Vec<_>>(),
            Err(e) => vec![Check::new(
                "closure",
                format!("closure checks for {lam}*{mu}"),
                Some(e.to_string()),
            )],
        })
        .collect()
}

/// Restriction routes, product consistency for `|lambda| + |mu| <= max_total`
/// and the vanishing of the first class outside the rectangle.
pub fn homomorphism_suite(configs: &[WeightConfig], max_total: u32) -> Vec<Check> {
    let mut checks = Vec::new();
    for cfg in configs {
        let table = match build_table(cfg) {
            Ok(t) => t,
            Err(e) => {
                checks.push(Check::new("homomorphism", format!("table [{cfg}]"), Some(e.to_string())));
                continue;
            }
        };
        checks.push(check_restriction_routes(cfg, &table));
        let pairs: Vec<(Partition, Partition)> = unordered_pairs(&table.partitions)
            .into_iter()
            .filter(|(l, m)| l.size() + m.size() <= max_total)
            .collect();
        checks.extend(
            pairs
                .par_iter()
                .flat_map_iter(|(l, m)| match verify_homomorphism(cfg, &table, l, m) {
                    Ok(v) => v,
                    Err(e) => vec![Check::new(
                        "homomorphism",
                        format!("product {l}*{m} [{cfg}]"),
                        Some(e.to_string()),
                    )],
                })
                .collect::<Vec<_>>(),
        );
        let mut rows = vec![0; cfg.d];
        rows[0] = (cfg.n - cfg.d + 1) as u32;
        let outside = Partition::new(cfg.d, rows).expect("valid partition");
        checks.push(match check_killed(cfg, &outside) {
            Ok(c) => c,
            Err(e) => Check::new("homomorphism", format!("class {outside} vanishes"), Some(e.to_string())),
        });
    }
    checks
}

/// Each config is read as the stage `n + 1` data.
pub fn pullback_suite(configs: &[WeightConfig]) -> Vec<Check> {
    configs
        .par_iter()
        .flat_map_iter(|cfg| match pullback_check(cfg) {
            Ok(v) => v,
            Err(e) => vec![Check::new("pullback", format!("pullback [{cfg}]"), Some(e.to_string()))],
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn peeling_one_box_square() {
        let div = Partition::div(2);
        let sq = &ordinary_schur(&div) * &ordinary_schur(&div);
        let got = peel_ordinary(&sq, 2).unwrap();
        assert_eq!(got.len(), 2);
        for nu in [[2, 0], [1, 1]] {
            assert_eq!(got[&Partition::new(2, nu.to_vec()).unwrap()], Polynomial::one());
        }
    }

    #[test]
    fn small_suites_pass() {
        let mut checks = vanishing_suite(2, 2);
        checks.extend(pieri_suite(2, 1));
        checks.extend(closure_suite(2, 1));
        assert!(!checks.is_empty());
        for c in &checks {
            assert!(c.passed, "{c:?}");
        }
    }

    #[test]
    fn report_json() {
        let r = Report {
            checks: vec![Check::new("pieri", "x".into(), Some("bad".into()))],
        };
        let j = r.to_json();
        assert_eq!(j["passed"], false);
        assert_eq!(j["failed"], 1);
        assert_eq!(j["checks"][0]["counterexample"], "bad");
    }
}
