//! Exact rational scalars, vectors and matrices.
//!
//! Every numeric value in the engine is a [`Rational`]. Face classification
//! compares coordinates against `±1` exactly, so there is no floating point
//! anywhere on the decision path.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision fraction, always kept in lowest terms.
pub type Rational = BigRational;

/// Errors from the numeric layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumError {
    #[error("empty vector has no consensus seminorm")]
    EmptyVector,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square: row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("matrix dimension must be at least 2, found {0}")]
    TooSmall(usize),
    #[error("row {row} sums to {sum}, not 1")]
    RowSumNotOne { row: usize, sum: Rational },
    #[error("invalid rational {input:?}: {reason}")]
    Parse { input: String, reason: &'static str },
}

/// Parses `"p"`, `"-p"` or `"p/q"`. Decimal notation is rejected.
///
/// Both the ASCII hyphen and the Unicode minus sign are accepted as the sign.
pub fn parse_rational(input: &str) -> Result<Rational, NumError> {
    let err = |reason| NumError::Parse {
        input: input.to_string(),
        reason,
    };
    let s = input.trim();
    let (negative, body) = if let Some(rest) = s.strip_prefix('-') {
        (true, rest)
    } else if let Some(rest) = s.strip_prefix('\u{2212}') {
        (true, rest)
    } else {
        (false, s)
    };
    let (num, den) = match body.split_once('/') {
        Some((p, q)) => (p, Some(q)),
        None => (body, None),
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    if body.contains('.') {
        return Err(err("decimals are not accepted, write p/q"));
    }
    if !digits(num) {
        return Err(err("expected digits"));
    }
    let mut numer = BigInt::from_str(num).map_err(|_| err("expected digits"))?;
    if negative {
        numer = -numer;
    }
    let denom = match den {
        Some(q) if !digits(q) => return Err(err("expected digits after '/'")),
        Some(q) => BigInt::from_str(q).map_err(|_| err("expected digits after '/'"))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(Rational::new(numer, denom))
}

/// Shorthand for an integer-valued rational.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Shorthand for `p/q`. Panics on a zero denominator.
pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses a comma-separated vector such as `"1,-1/2,0"`.
pub fn parse_vector(input: &str) -> Result<Vec<Rational>, NumError> {
    input.split(',').map(parse_rational).collect()
}

/// Formats a vector as `(a, b, c)` with exact entries.
pub fn format_vector(x: &[Rational]) -> String {
    let parts: Vec<String> = x.iter().map(|v| v.to_string()).collect();
    format!("({})", parts.join(", "))
}

/// The distance to consensus `½(max_i x_i − min_i x_i)`.
pub fn consensus_seminorm(x: &[Rational]) -> Result<Rational, NumError> {
    let (min, max) = min_max(x).ok_or(NumError::EmptyVector)?;
    Ok((max - min) / int(2))
}

pub(crate) fn min_max(x: &[Rational]) -> Option<(&Rational, &Rational)> {
    let first = x.first()?;
    Some(x.iter().fold((first, first), |(lo, hi), v| {
        (if v < lo { v } else { lo }, if v > hi { v } else { hi })
    }))
}

/// Square matrix of rationals, row-major, dimension at least 2.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    n: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, NumError> {
        let n = rows.len();
        if n < 2 {
            return Err(NumError::TooSmall(n));
        }
        let mut entries = Vec::with_capacity(n * n);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != n {
                return Err(NumError::NotSquare {
                    row,
                    len: r.len(),
                    n,
                });
            }
            entries.extend(r);
        }
        Ok(RationalMatrix { n, entries })
    }

    /// Builds a matrix from string entries, e.g. `&[&["0", "1/2"], &["-1", "-1/2"]]`.
    pub fn parse<R: AsRef<[S]>, S: AsRef<str>>(rows: &[R]) -> Result<Self, NumError> {
        let rows = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|s| parse_rational(s.as_ref())).collect())
            .collect::<Result<Vec<Vec<_>>, _>>()?;
        Self::from_rows(rows)
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 2, "matrix dimension must be at least 2");
        let mut entries = vec![Rational::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = Rational::one();
        }
        RationalMatrix { n, entries }
    }

    /// The averaging matrix `11ᵀ/n`.
    pub fn averaging(n: usize) -> Self {
        assert!(n >= 2, "matrix dimension must be at least 2");
        RationalMatrix {
            n,
            entries: vec![frac(1, n as i64); n * n],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.entries.chunks(self.n)
    }

    /// Exact matrix-vector product.
    pub fn apply(&self, x: &[Rational]) -> Result<Vec<Rational>, NumError> {
        if x.len() != self.n {
            return Err(NumError::DimensionMismatch {
                expected: self.n,
                found: x.len(),
            });
        }
        Ok(self.rows().map(|r| dot(r, x)).collect())
    }

    /// Exact product `self · other`.
    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix, NumError> {
        if other.n != self.n {
            return Err(NumError::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let n = self.n;
        let mut entries = vec![Rational::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        entries[i * n + j] += a * b;
                    }
                }
            }
        }
        Ok(RationalMatrix { n, entries })
    }

    fn row_sums(&self) -> impl Iterator<Item = Rational> + '_ {
        self.rows().map(|r| r.iter().sum())
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.rows().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let parts: Vec<String> = r.iter().map(|v| v.to_string()).collect();
            write!(f, "[{}]", parts.join(", "))?;
        }
        write!(f, "]")
    }
}

pub(crate) fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(p, q)| !p.is_zero() && !q.is_zero())
        .map(|(p, q)| p * q)
        .sum()
}

/// True iff every row of `a` sums exactly to 1, i.e. `a·1 = 1`.
pub fn check_fixed_vector(a: &RationalMatrix) -> bool {
    a.row_sums().all(|s| s.is_one())
}

/// Induced operator seminorm of `a` with respect to the consensus seminorm.
///
/// For `a·1 = 1` this is `½ max_{i,j} Σ_k |a_ik − a_jk|`. The formula only
/// holds under that condition, so other matrices are rejected.
pub fn dobrushin_seminorm(a: &RationalMatrix) -> Result<Rational, NumError> {
    if let Some((row, sum)) = a.row_sums().enumerate().find(|(_, s)| !s.is_one()) {
        return Err(NumError::RowSumNotOne { row, sum });
    }
    let n = a.dim();
    let mut best = Rational::zero();
    for i in 0..n {
        for j in i + 1..n {
            let d: Rational = a
                .row(i)
                .iter()
                .zip(a.row(j))
                .map(|(p, q)| (p - q).abs())
                .sum();
            if d > best {
                best = d;
            }
        }
    }
    Ok(best / int(2))
}

/// Why a matrix was rejected from a switched system.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("a switched system needs at least one matrix")]
    Empty,
    #[error("matrix {index} has dimension {found}, expected {expected}")]
    DimensionMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("matrix {index} does not fix the consensus vector: row {row} sums to {sum}")]
    FixedVector {
        index: usize,
        row: usize,
        sum: Rational,
    },
    #[error("matrix {index} violates the weak Lyapunov assumption: induced seminorm {seminorm} > 1")]
    SeminormAboveOne { index: usize, seminorm: Rational },
    #[error("{labels} labels given for {matrices} matrices")]
    LabelCount { labels: usize, matrices: usize },
}

/// A validated set of matrices `A_0 … A_{m−1}` sharing the fixed vector `1`
/// and never increasing the consensus seminorm.
///
/// Switching words index into [`SwitchedSystem::matrices`] with 0-based indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwitchedSystem {
    n: usize,
    matrices: Vec<RationalMatrix>,
    labels: Vec<String>,
}

impl SwitchedSystem {
    /// Validates `matrices`; labels default to `A0`, `A1`, ...
    pub fn new(matrices: Vec<RationalMatrix>) -> Result<Self, ValidationError> {
        let labels = (0..matrices.len()).map(|i| format!("A{i}")).collect();
        Self::with_labels(matrices, labels)
    }

    pub fn with_labels(
        matrices: Vec<RationalMatrix>,
        labels: Vec<String>,
    ) -> Result<Self, ValidationError> {
        let n = matrices.first().ok_or(ValidationError::Empty)?.dim();
        if labels.len() != matrices.len() {
            return Err(ValidationError::LabelCount {
                labels: labels.len(),
                matrices: matrices.len(),
            });
        }
        for (index, a) in matrices.iter().enumerate() {
            if a.dim() != n {
                return Err(ValidationError::DimensionMismatch {
                    index,
                    expected: n,
                    found: a.dim(),
                });
            }
            let seminorm = dobrushin_seminorm(a).map_err(|e| match e {
                NumError::RowSumNotOne { row, sum } => ValidationError::FixedVector { index, row, sum },
                other => unreachable!("unexpected error from seminorm: {other}"),
            })?;
            if seminorm > Rational::one() {
                return Err(ValidationError::SeminormAboveOne { index, seminorm });
            }
        }
        Ok(SwitchedSystem {
            n,
            matrices,
            labels,
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }

    pub fn matrices(&self) -> &[RationalMatrix] {
        &self.matrices
    }

    pub fn matrix(&self, index: usize) -> &RationalMatrix {
        &self.matrices[index]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }
}

/// Validates a list of matrices into a [`SwitchedSystem`].
pub fn validate_system(matrices: Vec<RationalMatrix>) -> Result<SwitchedSystem, ValidationError> {
    SwitchedSystem::new(matrices)
}
