//! The localized ring: polynomials divided by products of the allowed
//! generators `v_ch`, `w_lambda` (and transiently `w'_ch`).
//!
//! Denominators are formal multisets of generators. Equality is decided by
//! cross-multiplication; [`LocalizedElem::normalize`] cancels generators that
//! divide the numerator. Every generator is linear, hence irreducible, and
//! distinct generators are never proportional, so a fully normalized element
//! has a unique numerator and denominator.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::{Polynomial, PolynomialJson, Rational};
use crate::var::{Family, VarId};

/// An allowed denominator generator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DenomGen {
    /// `v_1 + ... + v_d`
    VCh { d: usize },
    /// `w_lambda = sum_i w_{bar lambda_i}`
    WLambda(Partition),
    /// `w'_1 + ... + w'_d`
    WprimeCh { d: usize },
}

impl DenomGen {
    pub fn to_polynomial(&self) -> Polynomial {
        match self {
            DenomGen::VCh { d } => Polynomial::sum_of((1..=*d as u32).map(VarId::v)),
            DenomGen::WLambda(lam) => {
                Polynomial::sum_of(lam.bar().entries().iter().map(|&b| VarId::w(b)))
            }
            DenomGen::WprimeCh { d } => Polynomial::sum_of((1..=*d as u32).map(VarId::wprime)),
        }
    }

    fn to_json(&self) -> DenomJson {
        match self {
            DenomGen::VCh { d } => DenomJson {
                kind: "vCh".into(),
                d: Some(*d),
                partition: None,
            },
            DenomGen::WLambda(lam) => DenomJson {
                kind: "wLambda".into(),
                d: None,
                partition: Some(lam.rows().to_vec()),
            },
            DenomGen::WprimeCh { d } => DenomJson {
                kind: "wprimeCh".into(),
                d: Some(*d),
                partition: None,
            },
        }
    }

    fn from_json(j: &DenomJson) -> Result<DenomGen> {
        let missing = |what: &str| Error::Parse(format!("denominator {:?} lacks {what}", j.kind));
        match j.kind.as_str() {
            "vCh" => Ok(DenomGen::VCh { d: j.d.ok_or_else(|| missing("d"))? }),
            "wprimeCh" => Ok(DenomGen::WprimeCh { d: j.d.ok_or_else(|| missing("d"))? }),
            "wLambda" => {
                let rows = j.partition.clone().ok_or_else(|| missing("partition"))?;
                Ok(DenomGen::WLambda(Partition::new(rows.len(), rows)?))
            }
            other => Err(Error::Parse(format!("unknown denominator kind {other:?}"))),
        }
    }
}

impl fmt::Display for DenomGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_polynomial())
    }
}

/// Formal product of generators with multiplicities.
pub type Denominator = BTreeMap<DenomGen, u32>;

/// Where a denominator generator goes under a substitution.
#[derive(Debug, Clone)]
pub enum DenomImage {
    Same,
    Gen(DenomGen),
    Scalar(Rational),
}

/// `numerator / product(denominator)`.
#[derive(Debug, Clone, Default)]
pub struct LocalizedElem {
    num: Polynomial,
    den: Denominator,
}

impl LocalizedElem {
    pub fn new(num: Polynomial, den: Denominator) -> Self {
        let den = den.into_iter().filter(|(_, k)| *k > 0).collect();
        let mut e = LocalizedElem { num, den };
        if e.num.is_zero() {
            e.den.clear();
        }
        e
    }

    pub fn zero() -> Self {
        LocalizedElem::default()
    }

    pub fn one() -> Self {
        Polynomial::one().into()
    }

    /// `num / gen`.
    pub fn over(num: Polynomial, gen: DenomGen) -> Self {
        LocalizedElem::new(num, BTreeMap::from([(gen, 1)]))
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Denominator {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    /// The expanded denominator polynomial.
    pub fn denominator_polynomial(&self) -> Polynomial {
        expand_denominator(&self.den)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        LocalizedElem::new(self.num.scale(c), self.den.clone())
    }

    pub fn pow(&self, k: u32) -> Self {
        let den = self.den.iter().map(|(g, m)| (g.clone(), m * k)).collect();
        LocalizedElem::new(self.num.pow(k), den)
    }

    /// Denominator generators satisfy `pred`.
    pub fn denominators_all(&self, pred: impl Fn(&DenomGen) -> bool) -> bool {
        self.den.keys().all(pred)
    }

    pub fn involves_family(&self, fam: Family) -> bool {
        self.num.involves_family(fam)
            || self
                .den
                .keys()
                .any(|g| g.to_polynomial().involves_family(fam))
    }

    /// Cancels every generator that exactly divides the numerator.
    pub fn normalize(&self) -> LocalizedElem {
        if self.num.is_zero() {
            return LocalizedElem::zero();
        }
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        for (g, mult) in den.iter_mut() {
            let gp = g.to_polynomial();
            while *mult > 0 {
                match num.exact_divide(&gp) {
                    Ok(q) => {
                        num = q;
                        *mult -= 1;
                    }
                    Err(_) => break,
                }
            }
        }
        LocalizedElem::new(num, den)
    }

    /// `num(self) * den(other) == num(other) * den(self)`, after removing the
    /// common part of the two denominators.
    pub fn loc_equal(&self, other: &LocalizedElem) -> bool {
        let (extra_self, extra_other) = denominator_differences(&self.den, &other.den);
        let lhs = &self.num * &expand_denominator(&extra_other);
        let rhs = &other.num * &expand_denominator(&extra_self);
        lhs == rhs
    }

    /// Exact quotient `self / other` inside the localized ring. Fails when
    /// the numerator of `other` does not divide what remains after clearing
    /// the generators.
    pub fn checked_div(&self, other: &LocalizedElem) -> Result<LocalizedElem> {
        if other.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // self / other = num_s * den_o / (den_s * num_o)
        let (extra_s, extra_o) = denominator_differences(&self.den, &other.den);
        let top = &self.num * &expand_denominator(&extra_o);
        let q = top.exact_divide(&other.num)?;
        Ok(LocalizedElem::new(q, extra_s))
    }

    /// Applies a substitution given on variables by polynomial images (the
    /// numerator is substituted), with `gen_image` deciding where each
    /// denominator generator goes. Scalars are folded into the coefficients.
    pub fn map_with(
        &self,
        image: impl Fn(VarId) -> Option<Polynomial>,
        gen_image: impl Fn(&DenomGen) -> Result<DenomImage>,
    ) -> Result<LocalizedElem> {
        let num = self.num.substitute(image);
        self.map_with_num(num, gen_image)
    }

    /// Like [`map_with`](Self::map_with) for substitutions sending variables
    /// to variables, which never needs polynomial multiplication.
    pub fn rename_with(
        &self,
        rename: impl Fn(VarId) -> VarId,
        gen_image: impl Fn(&DenomGen) -> DenomImage,
    ) -> LocalizedElem {
        let num = self.num.map_vars(rename);
        self.map_with_num(num, |g| Ok(gen_image(g)))
            .expect("generator images given directly")
    }

    fn map_with_num(
        &self,
        mut num: Polynomial,
        gen_image: impl Fn(&DenomGen) -> Result<DenomImage>,
    ) -> Result<LocalizedElem> {
        let mut den = Denominator::new();
        let mut scalar = Rational::one();
        for (g, k) in &self.den {
            match gen_image(g)? {
                DenomImage::Same => *den.entry(g.clone()).or_insert(0) += k,
                DenomImage::Gen(h) => *den.entry(h).or_insert(0) += k,
                DenomImage::Scalar(c) => {
                    if c.is_zero() {
                        return Err(Error::UnmappedDenominator(g.to_string()));
                    }
                    for _ in 0..*k {
                        scalar *= &c;
                    }
                }
            }
        }
        if !scalar.is_one() {
            num = num.scale(&scalar.recip());
        }
        Ok(LocalizedElem::new(num, den))
    }

    /// True iff the element is fixed by every simultaneous transposition
    /// `(x_i, v_i) <-> (x_{i+1}, v_{i+1})`.
    pub fn is_symmetric(&self, d: usize) -> bool {
        (1..d as u32).all(|i| {
            let swap = |v: VarId| match v.family {
                Family::X | Family::V if v.index == i => Some(VarId::new(v.family, i + 1)),
                Family::X | Family::V if v.index == i + 1 => Some(VarId::new(v.family, i)),
                _ => None,
            };
            let swapped_num = self.num.map_vars(|v| swap(v).unwrap_or(v));
            // v_ch and every w-generator are invariant under the swap
            LocalizedElem::new(swapped_num, self.den.clone()).loc_equal(self)
        })
    }

    pub fn to_json(&self) -> LocalizedJson {
        let mut denom = Vec::new();
        for (g, k) in &self.den {
            for _ in 0..*k {
                denom.push(g.to_json());
            }
        }
        LocalizedJson {
            terms: self.num.to_json().terms,
            denom,
        }
    }

    pub fn from_json(j: &LocalizedJson) -> Result<LocalizedElem> {
        let num = Polynomial::from_json(&PolynomialJson {
            terms: j.terms.clone(),
        })?;
        let mut den = Denominator::new();
        for g in &j.denom {
            *den.entry(DenomGen::from_json(g)?).or_insert(0) += 1;
        }
        Ok(LocalizedElem::new(num, den))
    }

    /// Rendering of the normalized form.
    pub fn canonical_string(&self) -> String {
        self.normalize().to_string()
    }
}

/// Generic substitution of a polynomial with localized images.
///
/// The result is put over the least common multiset of the images'
/// denominators, so it is a multiset union of image denominators.
pub fn substitute(p: &Polynomial, image: impl Fn(VarId) -> Option<LocalizedElem>) -> LocalizedElem {
    let mut images: HashMap<VarId, Option<LocalizedElem>> = HashMap::new();
    for v in p.variables() {
        images.insert(v, image(v));
    }
    // (numerator, denominator) of each term
    let mut parts: Vec<(Polynomial, Denominator)> = Vec::with_capacity(p.num_terms());
    let mut common = Denominator::new();
    let mut powers: HashMap<(VarId, u32), Polynomial> = HashMap::new();
    for (m, c) in p.terms() {
        let mut acc = Polynomial::constant(c.clone());
        let mut den = Denominator::new();
        for &(v, e) in m.factors() {
            match &images[&v] {
                None => acc = acc.mul_monomial(&crate::poly::Monomial::from_pairs([(v, e)]), &Rational::one()),
                Some(img) => {
                    let pw = powers.entry((v, e)).or_insert_with(|| img.num.pow(e));
                    acc = &acc * &*pw;
                    for (g, k) in &img.den {
                        *den.entry(g.clone()).or_insert(0) += k * e;
                    }
                }
            }
        }
        for (g, k) in &den {
            let slot = common.entry(g.clone()).or_insert(0);
            *slot = (*slot).max(*k);
        }
        parts.push((acc, den));
    }
    let mut gen_powers: HashMap<(DenomGen, u32), Polynomial> = HashMap::new();
    let mut num = Polynomial::zero();
    for (acc, den) in parts {
        let mut term = acc;
        for (g, k) in &common {
            let missing = k - den.get(g).copied().unwrap_or(0);
            if missing > 0 {
                let gp = gen_powers
                    .entry((g.clone(), missing))
                    .or_insert_with(|| g.to_polynomial().pow(missing));
                term = &term * &*gp;
            }
        }
        num += &term;
    }
    LocalizedElem::new(num, common)
}

fn expand_denominator(den: &Denominator) -> Polynomial {
    let mut p = Polynomial::one();
    for (g, k) in den {
        p = &p * &g.to_polynomial().pow(*k);
    }
    p
}

/// Returns `(a \ b, b \ a)` as multisets.
fn denominator_differences(a: &Denominator, b: &Denominator) -> (Denominator, Denominator) {
    let mut only_a = Denominator::new();
    let mut only_b = Denominator::new();
    for (g, &k) in a {
        let j = b.get(g).copied().unwrap_or(0);
        if k > j {
            only_a.insert(g.clone(), k - j);
        }
    }
    for (g, &k) in b {
        let j = a.get(g).copied().unwrap_or(0);
        if k > j {
            only_b.insert(g.clone(), k - j);
        }
    }
    (only_a, only_b)
}

fn add_over_common(x: &LocalizedElem, y: &LocalizedElem, negate_y: bool) -> LocalizedElem {
    if y.is_zero() {
        return x.clone();
    }
    if x.is_zero() {
        return if negate_y { -y } else { y.clone() };
    }
    let (only_x, only_y) = denominator_differences(&x.den, &y.den);
    let mut common = x.den.clone();
    for (g, k) in &only_y {
        *common.entry(g.clone()).or_insert(0) += k;
    }
    let mut num = &x.num * &expand_denominator(&only_y);
    let other = &y.num * &expand_denominator(&only_x);
    if negate_y {
        num -= &other;
    } else {
        num += &other;
    }
    LocalizedElem::new(num, common)
}

impl From<Polynomial> for LocalizedElem {
    fn from(p: Polynomial) -> Self {
        LocalizedElem::new(p, Denominator::new())
    }
}

impl From<VarId> for LocalizedElem {
    fn from(v: VarId) -> Self {
        Polynomial::var(v).into()
    }
}

impl PartialEq for LocalizedElem {
    fn eq(&self, other: &Self) -> bool {
        self.loc_equal(other)
    }
}

impl<'a> Add<&'a LocalizedElem> for &'a LocalizedElem {
    type Output = LocalizedElem;
    fn add(self, rhs: &'a LocalizedElem) -> LocalizedElem {
        add_over_common(self, rhs, false)
    }
}

impl<'a> Sub<&'a LocalizedElem> for &'a LocalizedElem {
    type Output = LocalizedElem;
    fn sub(self, rhs: &'a LocalizedElem) -> LocalizedElem {
        add_over_common(self, rhs, true)
    }
}

impl<'a> Mul<&'a LocalizedElem> for &'a LocalizedElem {
    type Output = LocalizedElem;
    fn mul(self, rhs: &'a LocalizedElem) -> LocalizedElem {
        if self.is_zero() || rhs.is_zero() {
            return LocalizedElem::zero();
        }
        let mut den = self.den.clone();
        for (g, k) in &rhs.den {
            *den.entry(g.clone()).or_insert(0) += k;
        }
        LocalizedElem::new(&self.num * &rhs.num, den)
    }
}

impl Neg for &LocalizedElem {
    type Output = LocalizedElem;
    fn neg(self) -> LocalizedElem {
        LocalizedElem::new(-&self.num, self.den.clone())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<LocalizedElem> for LocalizedElem {
            type Output = LocalizedElem;
            fn $f(self, rhs: LocalizedElem) -> LocalizedElem {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LocalizedElem {
    type Output = LocalizedElem;
    fn neg(self) -> LocalizedElem {
        -&self
    }
}

impl fmt::Display for LocalizedElem {
    /// `num` when the denominator is empty, else `(num)/(g1)^k*(g2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({})/", self.num)?;
        for (i, (g, k)) in self.den.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if *k == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{k}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DenomJson {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub d: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub partition: Option<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalizedJson {
    pub terms: Vec<crate::poly::TermJson>,
    pub denom: Vec<DenomJson>,
}
