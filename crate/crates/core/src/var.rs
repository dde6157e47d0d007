//! Indexed variable families.
//!
//! Every polynomial in this crate lives in one big ring whose variables come
//! from a handful of indexed alphabets: `x_i`, `a_l`, `v_i`, `w_l`, the primed
//! copies `a'_l`, `w'_l`, the torus weights `y_i`, and the auxiliary symbols
//! `z_k` used internally for formal placeholders (the ratio `x_ch / v_ch`, a
//! translation parameter, ...).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Variable family. The declaration order is the canonical variable order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    X,
    A,
    V,
    W,
    Aprime,
    Wprime,
    Y,
    Z,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::X,
        Family::A,
        Family::V,
        Family::W,
        Family::Aprime,
        Family::Wprime,
        Family::Y,
        Family::Z,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            Family::X => "x",
            Family::A => "a",
            Family::V => "v",
            Family::W => "w",
            Family::Aprime => "a'",
            Family::Wprime => "w'",
            Family::Y => "y",
            Family::Z => "z",
        }
    }

    /// Graded degree of a variable of this family: `x`, `a`, `a'`, `y` (and the
    /// placeholder `z = x_ch / v_ch`) have degree 2, the weight families degree 0.
    pub fn graded_degree(self) -> u32 {
        match self {
            Family::X | Family::A | Family::Aprime | Family::Y | Family::Z => 2,
            Family::V | Family::W | Family::Wprime => 0,
        }
    }
}

/// A single variable: a family together with a positive index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId {
    pub family: Family,
    pub index: u32,
}

impl VarId {
    pub fn new(family: Family, index: u32) -> Self {
        assert!(index >= 1, "variable indices start at 1");
        VarId { family, index }
    }

    pub fn x(i: u32) -> Self {
        Self::new(Family::X, i)
    }
    pub fn a(l: u32) -> Self {
        Self::new(Family::A, l)
    }
    pub fn v(i: u32) -> Self {
        Self::new(Family::V, i)
    }
    pub fn w(l: u32) -> Self {
        Self::new(Family::W, l)
    }
    pub fn aprime(l: u32) -> Self {
        Self::new(Family::Aprime, l)
    }
    pub fn wprime(l: u32) -> Self {
        Self::new(Family::Wprime, l)
    }
    pub fn y(i: u32) -> Self {
        Self::new(Family::Y, i)
    }
    pub fn z(k: u32) -> Self {
        Self::new(Family::Z, k)
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.symbol(), self.index)
    }
}

impl FromStr for VarId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("not a variable name: {s:?}"));
        let mut chars = s.chars();
        let head = chars.next().ok_or_else(bad)?;
        let rest = chars.as_str();
        let (primed, digits) = match rest.strip_prefix('\'') {
            Some(d) => (true, d),
            None => (false, rest),
        };
        let family = match (head, primed) {
            ('x', false) => Family::X,
            ('a', false) => Family::A,
            ('v', false) => Family::V,
            ('w', false) => Family::W,
            ('a', true) => Family::Aprime,
            ('w', true) => Family::Wprime,
            ('y', false) => Family::Y,
            ('z', false) => Family::Z,
            _ => return Err(bad()),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let index: u32 = digits.parse().map_err(|_| bad())?;
        if index == 0 {
            return Err(bad());
        }
        Ok(VarId { family, index })
    }
}
