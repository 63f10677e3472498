//! Open faces of the invariant polyhedron `P = {x : ½(max x − min x) ≤ 1}`.
//!
//! Every proper open face of `P` contains exactly one signed vector
//! `v ∈ {−1,0,1}ⁿ` with at least one `+1` and one `−1`. Because `P = −P`,
//! the faces `F` and `−F` are merged into one pair, named by the member whose
//! first nonzero component is `+1`.

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactnum::{int, min_max, Rational};

/// Default dimension guard for face enumeration (3ⁿ pairs are materialized).
pub const DEFAULT_MAX_N: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FaceError {
    #[error("point has consensus seminorm {seminorm} > 1 and lies outside the polyhedron")]
    OutsidePolyhedron { seminorm: Rational },
    #[error("empty point")]
    Empty,
    #[error("n = {n} exceeds the limit {max_n}: the face graph has about 3^{n}/2 nodes")]
    Capacity { n: usize, max_n: usize },
    #[error("dimension must be at least 2, found {0}")]
    TooSmall(usize),
    #[error("sign vector needs at least one +1 and one -1")]
    NotProper,
    #[error("invalid face text {0:?}")]
    Parse(String),
}

/// Open face of `P`, up to sign.
///
/// Ordering puts `Interior` first, then pairs lexicographically by their
/// canonical sign vector with `−1 < 0 < +1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FaceId {
    Interior,
    Pair(SignVector),
}

/// Canonical signed vector of a proper face pair.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignVector(Box<[i8]>);

impl SignVector {
    /// Canonicalizes `signs`, which must contain both a `+1` and a `−1`.
    pub fn new(mut signs: Vec<i8>) -> Result<Self, FaceError> {
        debug_assert!(signs.iter().all(|s| (-1..=1).contains(s)));
        if !(signs.contains(&1) && signs.contains(&-1)) {
            return Err(FaceError::NotProper);
        }
        if signs.iter().find(|&&s| s != 0) == Some(&-1) {
            signs.iter_mut().for_each(|s| *s = -*s);
        }
        Ok(SignVector(signs.into_boxed_slice()))
    }

    pub fn signs(&self) -> &[i8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The vector itself, a point of the open face.
    pub fn to_point(&self) -> Vec<Rational> {
        self.0.iter().map(|&s| int(s as i64)).collect()
    }

    /// Base-3 rank of the vector in lexicographic order over `{−1,0,1}ⁿ`.
    pub(crate) fn ternary_rank(&self) -> usize {
        self.0.iter().fold(0, |acc, &s| acc * 3 + (s + 1) as usize)
    }
}

impl FaceId {
    /// Builds a face pair from any member `v` or `−v`.
    pub fn pair(signs: Vec<i8>) -> Result<Self, FaceError> {
        SignVector::new(signs).map(FaceId::Pair)
    }

    pub fn is_interior(&self) -> bool {
        matches!(self, FaceId::Interior)
    }

    /// A point in the open face: `v` itself, or the origin for the interior.
    pub fn representative(&self, n: usize) -> Vec<Rational> {
        match self {
            FaceId::Interior => vec![Rational::zero(); n],
            FaceId::Pair(v) => {
                assert_eq!(v.len(), n, "face {self} does not have dimension {n}");
                v.to_point()
            }
        }
    }
}

impl fmt::Display for FaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FaceId::Interior => f.write_str("int"),
            FaceId::Pair(v) => v.0.iter().try_for_each(|s| {
                f.write_str(match s {
                    1 => "+",
                    0 => "0",
                    _ => "-",
                })
            }),
        }
    }
}

impl std::str::FromStr for FaceId {
    type Err = FaceError;

    /// Parses `"int"` or a sign string such as `"+0-"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "int" {
            return Ok(FaceId::Interior);
        }
        let signs = s
            .chars()
            .map(|c| match c {
                '+' => Ok(1),
                '0' => Ok(0),
                '-' | '\u{2212}' => Ok(-1),
                _ => Err(FaceError::Parse(s.to_string())),
            })
            .collect::<Result<Vec<i8>, _>>()?;
        FaceId::pair(signs).map_err(|_| FaceError::Parse(s.to_string()))
    }
}

/// Returns the open face containing `x` (or `−x`).
///
/// Uses the shift-and-round rule: `x + (1 − max x)·1` has all entries in
/// `[−1, 1]`, and entries strictly inside are rounded to zero. O(n).
pub fn classify_point(x: &[Rational]) -> Result<FaceId, FaceError> {
    let (min, max) = min_max(x).ok_or(FaceError::Empty)?;
    let width = max - min;
    let two = int(2);
    if width < two {
        return Ok(FaceId::Interior);
    }
    if width > two {
        return Err(FaceError::OutsidePolyhedron {
            seminorm: width / two,
        });
    }
    let shift = Rational::one() - max;
    let signs = x
        .iter()
        .map(|xi| {
            let y = xi + &shift;
            if y.is_one() {
                1
            } else if y == -Rational::one() {
                -1
            } else {
                0
            }
        })
        .collect();
    // a point of width exactly 2 always yields both signs
    Ok(FaceId::pair(signs).expect("boundary point has both extreme signs"))
}

/// A point of the open face `f`; the origin for the interior.
pub fn representative_point(f: &FaceId, n: usize) -> Vec<Rational> {
    f.representative(n)
}

/// Face counts of `P` in dimension `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FaceCensus {
    pub n: usize,
    /// `3ⁿ − 2ⁿ⁺¹ + 2`, including the interior.
    pub total_faces: u128,
    /// `N = ½(3ⁿ − 2ⁿ⁺¹ + 1)`, pairs of opposite proper faces.
    pub proper_pairs: u128,
}

impl FaceCensus {
    /// Closed-form counts; valid for `2 ≤ n ≤ 80`.
    pub fn new(n: usize) -> Result<Self, FaceError> {
        if n < 2 {
            return Err(FaceError::TooSmall(n));
        }
        if n > 80 {
            return Err(FaceError::Capacity { n, max_n: 80 });
        }
        let p3 = 3u128.pow(n as u32);
        let p2 = 2u128.pow(n as u32 + 1);
        Ok(FaceCensus {
            n,
            total_faces: p3 - p2 + 2,
            proper_pairs: (p3 - p2 + 1) / 2,
        })
    }
}

/// Number of proper face pairs `N` as a `usize`, for `n` within the guard.
pub fn proper_pair_count(n: usize) -> usize {
    FaceCensus::new(n).expect("dimension within census range").proper_pairs as usize
}

/// All canonical proper face pairs in lexicographic order, with the census.
pub fn enumerate_faces(n: usize, max_n: usize) -> Result<(Vec<FaceId>, FaceCensus), FaceError> {
    if n > max_n {
        return Err(FaceError::Capacity { n, max_n });
    }
    let census = FaceCensus::new(n)?;
    let mut faces = Vec::with_capacity(census.proper_pairs as usize);
    let mut v = vec![-1i8; n];
    loop {
        let first = v.iter().find(|&&s| s != 0);
        if first == Some(&1) && v.contains(&-1) {
            faces.push(FaceId::Pair(SignVector(v.clone().into_boxed_slice())));
        }
        // lexicographic successor over {-1, 0, 1}^n
        let Some(pos) = v.iter().rposition(|&s| s < 1) else {
            break;
        };
        v[pos] += 1;
        v[pos + 1..].iter_mut().for_each(|s| *s = -1);
    }
    debug_assert_eq!(faces.len() as u128, census.proper_pairs);
    Ok((faces, census))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{frac, parse_vector};

    fn pair(s: &str) -> FaceId {
        s.parse().unwrap()
    }

    /// Face from the active set of the facet constraints ½(x_i − x_j) ≤ 1.
    fn active_set_face(x: &[Rational]) -> Option<Vec<(usize, usize)>> {
        let n = x.len();
        let two = int(2);
        let mut active = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    let d = &x[i] - &x[j];
                    assert!(d <= two);
                    if d == two {
                        active.push((i, j));
                    }
                }
            }
        }
        (!active.is_empty()).then_some(active)
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_point(&parse_vector("1/2,1/5").unwrap()).unwrap(), FaceId::Interior);
        assert_eq!(classify_point(&parse_vector("1,-1").unwrap()).unwrap(), pair("+-"));
        let x = parse_vector("1,3/10,-1").unwrap();
        assert_eq!(active_set_face(&x).unwrap(), vec![(0, 2)]);
        assert_eq!(classify_point(&x).unwrap(), FaceId::pair(vec![1, 0, -1]).unwrap());
        assert!(matches!(
            classify_point(&parse_vector("2,-1").unwrap()),
            Err(FaceError::OutsidePolyhedron { .. })
        ));
    }

    #[test]
    fn representative_examples() {
        assert_eq!(pair("+0-").representative(3), parse_vector("1,0,-1").unwrap());
        assert_eq!(FaceId::Interior.representative(2), parse_vector("0,0").unwrap());
        assert_eq!(pair("+-").representative(2), parse_vector("1,-1").unwrap());
    }

    #[test]
    fn canonical_form_and_text() {
        assert_eq!(FaceId::pair(vec![-1, 0, 1]).unwrap(), pair("+0-"));
        assert_eq!(pair("-0+").to_string(), "+0-");
        assert_eq!(pair("0\u{2212}+").to_string(), "0+-");
        assert!(FaceId::pair(vec![1, 0, 1]).is_err());
        assert!("+x".parse::<FaceId>().is_err());
        assert_eq!("int".parse::<FaceId>().unwrap(), FaceId::Interior);
    }

    #[test]
    fn enumeration_counts() {
        let (faces, census) = enumerate_faces(2, DEFAULT_MAX_N).unwrap();
        assert_eq!(faces, vec![pair("+-")]);
        assert_eq!(census.total_faces, 3);
        let (faces, census) = enumerate_faces(3, DEFAULT_MAX_N).unwrap();
        assert_eq!((faces.len(), census.total_faces), (6, 13));
        let (faces, census) = enumerate_faces(4, DEFAULT_MAX_N).unwrap();
        assert_eq!((faces.len(), census.total_faces), (25, 51));
        for n in 2..=8 {
            let (faces, census) = enumerate_faces(n, DEFAULT_MAX_N).unwrap();
            let brute = (0..3usize.pow(n as u32))
                .filter(|k| {
                    let digits: Vec<usize> = (0..n).map(|i| k / 3usize.pow(i as u32) % 3).collect();
                    digits.contains(&0) && digits.contains(&2)
                })
                .count();
            assert_eq!(census.total_faces as usize, brute + 1);
            assert_eq!(faces.len() * 2, brute);
            assert!(faces.windows(2).all(|w| w[0] < w[1]));
        }
        assert!(matches!(enumerate_faces(13, DEFAULT_MAX_N), Err(FaceError::Capacity { .. })));
    }

    #[test]
    fn enumerated_pairs_classify_to_themselves() {
        let (faces, _) = enumerate_faces(5, DEFAULT_MAX_N).unwrap();
        for f in &faces {
            let v = f.representative(5);
            assert_eq!(&classify_point(&v).unwrap(), f);
            let neg: Vec<Rational> = v.iter().map(|x| -x).collect();
            assert_eq!(&classify_point(&neg).unwrap(), f);
        }
    }

    #[test]
    fn grid_agrees_with_active_sets() {
        // boundary points of P with denominators ≤ 4, shifted so max = 1
        for n in 2..=4usize {
            let grid: Vec<Rational> = (-4..=4).map(|k| frac(k, 4)).collect();
            let total = grid.len().pow(n as u32);
            for k in 0..total {
                let x: Vec<Rational> = (0..n)
                    .map(|i| grid[k / grid.len().pow(i as u32) % grid.len()].clone())
                    .collect();
                let Some(active) = active_set_face(&x) else {
                    assert_eq!(classify_point(&x).unwrap(), FaceId::Interior);
                    continue;
                };
                let face = classify_point(&x).unwrap();
                let v = face.representative(n);
                let same = active_set_face(&v).unwrap() == active
                    || active_set_face(&v.iter().map(|t| -t).collect::<Vec<_>>()).unwrap() == active;
                assert!(same, "{x:?} -> {face}");
                let shifted: Vec<Rational> = x.iter().map(|t| t + frac(3, 7)).collect();
                assert_eq!(classify_point(&shifted).unwrap(), face);
            }
        }
    }
}
