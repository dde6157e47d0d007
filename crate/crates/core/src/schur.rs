//! Factorial Schur functions `s_lambda(x | a)`.
//!
//! Two independent routes are provided: the determinant ratio
//! `det[(x_j | a)^{b_i + d - i}] / prod_{i<j} (x_i - x_j)` and the sum over
//! semistandard tableaux of `prod_alpha (x_{T(alpha)} - a_{T(alpha) + c(alpha)})`.
//! The tableau sum is generic over the ring, which is how the weighted
//! functions are obtained by substitution.

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::Polynomial;
use crate::ring::RingElem;
use crate::var::{Family, VarId};

/// Which `a`-alphabet a factorial Schur function is taken over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Alphabet {
    A,
    Aprime,
    /// `a_l = 0` for all `l`: ordinary Schur polynomials.
    Zero,
}

impl Alphabet {
    pub fn family(self) -> Option<Family> {
        match self {
            Alphabet::A => Some(Family::A),
            Alphabet::Aprime => Some(Family::Aprime),
            Alphabet::Zero => None,
        }
    }

    pub fn symbol(self, l: u32) -> Polynomial {
        match self.family() {
            Some(f) => Polynomial::var(VarId::new(f, l)),
            None => Polynomial::zero(),
        }
    }
}

/// `(y | a)^k = (y - a_1) ... (y - a_k)`.
pub fn raising_factorial(y: &Polynomial, a: Alphabet, k: u32) -> Polynomial {
    let mut out = Polynomial::one();
    for l in 1..=k {
        out = &out * &(y - &a.symbol(l));
    }
    out
}

/// A semistandard tableau, stored row by row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ssyt {
    pub shape: Partition,
    pub entries: Vec<Vec<u32>>,
}

impl Ssyt {
    /// Rows weakly increasing, columns strictly increasing, entries in `1..=d`.
    pub fn is_valid(&self) -> bool {
        let d = self.shape.d() as u32;
        let rows = self.shape.rows();
        if self.entries.len() != rows.len() {
            return false;
        }
        for (i, row) in self.entries.iter().enumerate() {
            if row.len() != rows[i] as usize || row.iter().any(|&t| t == 0 || t > d) {
                return false;
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
            if i > 0 && row.iter().zip(&self.entries[i - 1]).any(|(lo, hi)| lo <= hi) {
                return false;
            }
        }
        true
    }

    /// `(row, column, entry)` for every box, 1-based.
    pub fn boxes(&self) -> impl Iterator<Item = (u32, u32, u32)> + '_ {
        self.entries.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(move |(j, &t)| (i as u32 + 1, j as u32 + 1, t))
        })
    }
}

/// All semistandard tableaux of shape `lambda` with entries in `1..=d`,
/// filled column by column.
pub fn enumerate_ssyt(lambda: &Partition) -> Vec<Ssyt> {
    let d = lambda.d() as u32;
    let rows = lambda.rows();
    let ncols = rows[0] as usize;
    let heights: Vec<usize> = (0..ncols)
        .map(|j| rows.iter().filter(|&&b| b as usize > j).count())
        .collect();
    let mut columns: Vec<Vec<u32>> = Vec::with_capacity(ncols);
    let mut out = Vec::new();
    fill_columns(d, &heights, &mut columns, &mut out);
    out.into_iter()
        .map(|cols| {
            let entries = rows
                .iter()
                .enumerate()
                .map(|(i, &b)| (0..b as usize).map(|j| cols[j][i]).collect())
                .collect();
            Ssyt {
                shape: lambda.clone(),
                entries,
            }
        })
        .collect()
}

fn fill_columns(d: u32, heights: &[usize], columns: &mut Vec<Vec<u32>>, out: &mut Vec<Vec<Vec<u32>>>) {
    let j = columns.len();
    if j == heights.len() {
        out.push(columns.clone());
        return;
    }
    let mut col = Vec::with_capacity(heights[j]);
    fill_column(d, heights, j, &mut col, columns, out);
}

fn fill_column(
    d: u32,
    heights: &[usize],
    j: usize,
    col: &mut Vec<u32>,
    columns: &mut Vec<Vec<u32>>,
    out: &mut Vec<Vec<Vec<u32>>>,
) {
    let i = col.len();
    if i == heights[j] {
        columns.push(col.clone());
        fill_columns(d, heights, columns, out);
        columns.pop();
        return;
    }
    let above = col.last().map_or(1, |&t| t + 1);
    let left = if j > 0 { columns[j - 1][i] } else { 1 };
    let lo = above.max(left);
    // leave room for the strictly increasing entries below
    let hi = d - (heights[j] - i - 1) as u32;
    for t in lo..=hi {
        col.push(t);
        fill_column(d, heights, j, col, columns, out);
        col.pop();
    }
}

/// Tableau sum with arbitrary images for `x_i` and `a_l`.
pub fn tableau_sum<R: RingElem>(
    lambda: &Partition,
    x: impl Fn(u32) -> R,
    a: impl Fn(u32) -> R,
) -> R {
    let d = lambda.d() as u32;
    let max_a = lambda.first_row() + d;
    // factor[t][k] = x_t - a_k
    let xs: Vec<R> = (1..=d).map(&x).collect();
    let as_: Vec<R> = (1..=max_a).map(&a).collect();
    let mut factor: Vec<Vec<Option<R>>> = vec![vec![None; max_a as usize + 1]; d as usize + 1];
    let mut total = R::zero();
    for t in enumerate_ssyt(lambda) {
        let mut prod = R::one();
        for (i, j, e) in t.boxes() {
            let k = (e + j - i) as usize;
            let f = factor[e as usize][k]
                .get_or_insert_with(|| xs[e as usize - 1].sub(&as_[k - 1]))
                .clone();
            prod = prod.mul(&f);
            if prod.is_zero() {
                break;
            }
        }
        total = total.add(&prod);
    }
    total
}

/// `s_lambda(x | a)` by the tableau formula.
pub fn factorial_schur_tableaux(lambda: &Partition, alphabet: Alphabet) -> Polynomial {
    tableau_sum(
        lambda,
        |i| Polynomial::var(VarId::x(i)),
        |l| alphabet.symbol(l),
    )
}

/// `s_lambda(x | a)` by the determinant ratio.
pub fn factorial_schur_det(lambda: &Partition, alphabet: Alphabet) -> Result<Polynomial> {
    let d = lambda.d();
    let rows = lambda.rows();
    let matrix: Vec<Vec<Polynomial>> = (0..d)
        .map(|i| {
            let k = rows[i] + (d - i - 1) as u32;
            (1..=d as u32)
                .map(|j| raising_factorial(&Polynomial::var(VarId::x(j)), alphabet, k))
                .collect()
        })
        .collect();
    let det = if d <= 4 {
        cofactor_det(&matrix)
    } else {
        bareiss_det(matrix.clone()).unwrap_or_else(|| cofactor_det(&matrix))
    };
    det.exact_divide(&vandermonde(d))
        .map_err(|_| Error::InternalNonDivisible(lambda.clone()))
}

/// Ordinary Schur polynomial: the factorial one at `a = 0`.
pub fn ordinary_schur(lambda: &Partition) -> Polynomial {
    factorial_schur_tableaux(lambda, Alphabet::Zero)
}

/// `prod_{i<j} (x_i - x_j)`.
pub fn vandermonde(d: usize) -> Polynomial {
    let mut out = Polynomial::one();
    for i in 1..=d as u32 {
        for j in i + 1..=d as u32 {
            out = &out * &(&Polynomial::var(VarId::x(i)) - &Polynomial::var(VarId::x(j)));
        }
    }
    out
}

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &[Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    match n {
        0 => Polynomial::one(),
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        _ => {
            let mut total = Polynomial::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Polynomial>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != j)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * &cofactor_det(&minor);
                if j % 2 == 0 {
                    total += &term;
                } else {
                    total -= &term;
                }
            }
            total
        }
    }
}

/// Fraction-free Gaussian elimination. `None` on a zero pivot.
pub fn bareiss_det(mut m: Vec<Vec<Polynomial>>) -> Option<Polynomial> {
    let n = m.len();
    if n == 0 {
        return Some(Polynomial::one());
    }
    let mut prev = Polynomial::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            return None;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_divide(&prev).ok()?;
            }
        }
        prev = m[k][k].clone();
    }
    Some(m[n - 1][n - 1].clone())
}
