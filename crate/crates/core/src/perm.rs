//! Permutations of `[n]` in one-line notation and the statistics built on
//! them: Coxeter length, odd length and the descent set.
//!
//! Positions and values are 1-based. The odd length compares position
//! parities, so shifting the indexing by one changes the statistic.

use std::fmt;

use crate::class::PositionSet;
use crate::error::{Error, Result};

/// Largest `n` supported anywhere in the crate (position sets are packed in a `u64`).
pub const MAX_N: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<u8>,
}

/// Parity pattern of a permutation relative to its positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChessboardClass {
    /// `i + σ(i)` is even for every `i`.
    EvenChessboard,
    /// `i + σ(i)` is odd for every `i`; only possible for even `n`.
    OddChessboard,
    NotChessboard,
}

/// Which permutations a generating function is summed over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub enum Population {
    /// All of `S_n`.
    FullSn,
    /// Even chessboard elements `C_{n,+}`.
    ChessEven,
    /// Odd chessboard elements `C_{n,−}`.
    ChessOdd,
    /// `C_n = C_{n,+} ∪ C_{n,−}`.
    ChessAll,
}

impl Population {
    pub const ALL: [Population; 4] = [
        Population::FullSn,
        Population::ChessEven,
        Population::ChessOdd,
        Population::ChessAll,
    ];

    pub fn admits(self, class: ChessboardClass) -> bool {
        match self {
            Population::FullSn => true,
            Population::ChessEven => class == ChessboardClass::EvenChessboard,
            Population::ChessOdd => class == ChessboardClass::OddChessboard,
            Population::ChessAll => class != ChessboardClass::NotChessboard,
        }
    }

    /// The flag spelling used on the command line.
    pub fn flag(self) -> &'static str {
        match self {
            Population::FullSn => "sn",
            Population::ChessEven => "cn+",
            Population::ChessOdd => "cn-",
            Population::ChessAll => "cn",
        }
    }
}

impl std::str::FromStr for Population {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Population::ALL
            .into_iter()
            .find(|p| p.flag() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown population `{s}` (expected sn, cn, cn+ or cn-)")))
    }
}

impl Permutation {
    /// Builds a permutation from its one-line notation `σ(1), …, σ(n)`.
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if n == 0 || n > MAX_N {
            return Err(Error::UnsupportedSize { n, max: MAX_N });
        }
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!("value {v} not in [1, {n}]")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation(format!("value {v} repeated")));
            }
        }
        Ok(Self {
            values: values.into_iter().map(|v| v as u8).collect(),
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new((1..=n).collect())
    }

    /// The longest element `w₀ : i ↦ n + 1 − i`.
    pub fn longest_element(n: usize) -> Result<Self> {
        Self::new((1..=n).rev().collect())
    }

    /// The adjacent transposition `s_i = (i, i+1)` in `S_n`.
    pub fn simple_transposition(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::PositionOutOfRange { position: i, n });
        }
        let mut values: Vec<usize> = (1..=n).collect();
        values.swap(i - 1, i);
        Self::new(values)
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// `σ(i)` for `1 ≤ i ≤ n`.
    pub fn value(&self, i: usize) -> usize {
        self.values[i - 1] as usize
    }

    pub fn values(&self) -> impl Iterator<Item = usize> + '_ {
        self.values.iter().map(|&v| v as usize)
    }

    /// Number of inversions, i.e. the Coxeter length `ℓ(σ)`.
    pub fn inv_length(&self) -> usize {
        inversions(&self.values)
    }

    /// Number of inversions `(i, j)` whose positions have opposite parity.
    pub fn odd_length(&self) -> usize {
        odd_inversions(&self.values)
    }

    pub fn descent_set(&self) -> PositionSet {
        PositionSet::from_bits(descent_bits(&self.values))
    }

    /// `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(Permutation {
            values: other.values.iter().map(|&v| self.values[v as usize - 1]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut values = vec![0u8; self.n()];
        for (i, &v) in self.values.iter().enumerate() {
            values[v as usize - 1] = (i + 1) as u8;
        }
        Permutation { values }
    }

    pub fn chessboard_class(&self) -> ChessboardClass {
        chessboard(&self.values)
    }

    pub fn is_identity(&self) -> bool {
        self.values.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Advances to the lexicographic successor; returns `false` (leaving the
    /// permutation untouched) when already at the last one.
    pub fn next_lex(&mut self) -> bool {
        let v = &mut self.values;
        let Some(pivot) = (0..v.len().saturating_sub(1)).rev().find(|&i| v[i] < v[i + 1]) else {
            return false;
        };
        let succ = (pivot + 1..v.len()).rev().find(|&j| v[j] > v[pivot]).unwrap();
        v.swap(pivot, succ);
        v[pivot + 1..].reverse();
        true
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> Result<LexPermutations> {
        Ok(LexPermutations {
            next: Some(Permutation::identity(n)?),
        })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

pub struct LexPermutations {
    next: Option<Permutation>,
}

impl Iterator for LexPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if succ.next_lex() {
            self.next = Some(succ);
        }
        Some(current)
    }
}

pub(crate) fn inversions(values: &[u8]) -> usize {
    let mut count = 0;
    for (i, &a) in values.iter().enumerate() {
        count += values[i + 1..].iter().filter(|&&b| a > b).count();
    }
    count
}

pub(crate) fn odd_inversions(values: &[u8]) -> usize {
    let mut count = 0;
    for (i, &a) in values.iter().enumerate() {
        // j = i + 1, i + 3, ... have opposite parity to i
        count += values[i + 1..].iter().step_by(2).filter(|&&b| a > b).count();
    }
    count
}

/// Bit `i` set iff position `i` (1-based) is a descent.
pub(crate) fn descent_bits(values: &[u8]) -> u64 {
    values
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .fold(0, |acc, (i, _)| acc | 1 << (i + 1))
}

pub(crate) fn chessboard(values: &[u8]) -> ChessboardClass {
    let parity = |i: usize, v: u8| (i + 1 + v as usize) % 2;
    let first = parity(0, values[0]);
    if values.iter().enumerate().any(|(i, &v)| parity(i, v) != first) {
        ChessboardClass::NotChessboard
    } else if first == 0 {
        ChessboardClass::EvenChessboard
    } else {
        ChessboardClass::OddChessboard
    }
}

/// `⌊n/2⌋⌈n/2⌉`, the odd length of `w₀`.
pub fn max_odd_length(n: usize) -> usize {
    (n / 2) * n.div_ceil(2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn inversion_counts() {
        assert_eq!(Permutation::identity(4).unwrap().inv_length(), 0);
        assert_eq!(p(&[4, 3, 2, 1]).inv_length(), 6);
        assert_eq!(p(&[3, 4, 1, 2]).inv_length(), 4);
    }

    #[test]
    fn odd_length_examples() {
        assert_eq!(Permutation::identity(5).unwrap().odd_length(), 0);
        assert_eq!(Permutation::simple_transposition(4, 2).unwrap().odd_length(), 1);
        assert_eq!(p(&[5, 4, 3, 2, 1]).odd_length(), 6);
        assert_eq!(p(&[3, 4, 1, 2]).odd_length(), 2);
    }

    #[test]
    fn indexing_is_one_based() {
        // 2 1 3: the single inversion sits at positions (1, 2), opposite parity.
        // With 0-based or shifted indexing the answer would be unchanged here,
        // so also check 3 2 1 where (1, 3) is a same-parity inversion.
        assert_eq!(p(&[2, 1, 3]).odd_length(), 1);
        assert_eq!(p(&[3, 2, 1]).odd_length(), 2);
        assert_eq!(p(&[3, 1, 2]).odd_length(), 1);
        // i + σ(i) uses 1-based i: σ = e is even chessboard, not odd.
        assert_eq!(p(&[1, 2]).chessboard_class(), ChessboardClass::EvenChessboard);
        assert_eq!(p(&[2, 1]).descent_set().iter().collect::<Vec<_>>(), vec![1]);
    }

    #[test]
    fn descent_sets() {
        assert!(Permutation::identity(4).unwrap().descent_set().is_empty());
        assert_eq!(p(&[4, 3, 2, 1]).descent_set().iter().collect::<Vec<_>>(), vec![1, 2, 3]);
        assert_eq!(p(&[3, 4, 1, 2]).descent_set().iter().collect::<Vec<_>>(), vec![2]);
    }

    #[test]
    fn longest_element_and_compose() {
        assert_eq!(Permutation::longest_element(1).unwrap(), p(&[1]));
        let w0 = Permutation::longest_element(4).unwrap();
        assert_eq!(w0, p(&[4, 3, 2, 1]));
        assert!(w0.compose(&w0).unwrap().is_identity());
        let q = p(&[3, 4, 1, 2]);
        assert_eq!(Permutation::identity(4).unwrap().compose(&q).unwrap(), q);
        assert_eq!(w0.compose(&q).unwrap(), p(&[2, 1, 4, 3]));
        assert!(matches!(
            w0.compose(&Permutation::identity(3).unwrap()),
            Err(Error::SizeMismatch { left: 4, right: 3 })
        ));
    }

    #[test]
    fn chessboard_examples() {
        assert_eq!(p(&[1, 2, 3, 4]).chessboard_class(), ChessboardClass::EvenChessboard);
        assert_eq!(p(&[2, 1, 4, 3]).chessboard_class(), ChessboardClass::OddChessboard);
        assert_eq!(p(&[1, 2, 4, 3]).chessboard_class(), ChessboardClass::NotChessboard);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![]).is_err());
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 3]).is_err());
    }

    #[test]
    fn lex_enumeration_counts() {
        for n in 1..=6 {
            let all: Vec<_> = Permutation::all(n).unwrap().collect();
            assert_eq!(all.len(), (1..=n).product::<usize>());
            assert!(all.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn odd_length_is_bounded_by_length() {
        for n in 1..=7 {
            for s in Permutation::all(n).unwrap() {
                assert!(s.odd_length() <= s.inv_length());
                assert!(s.inv_length() <= n * (n - 1) / 2);
                assert!(s.odd_length() <= max_odd_length(n));
            }
        }
    }

    #[test]
    fn no_odd_chessboard_for_odd_n() {
        for n in [1, 3, 5, 7] {
            assert!(Permutation::all(n)
                .unwrap()
                .all(|s| s.chessboard_class() != ChessboardClass::OddChessboard));
        }
    }

    #[test]
    fn chessboard_closure() {
        for n in 1..=6 {
            let chess: Vec<_> = Permutation::all(n)
                .unwrap()
                .filter(|s| s.chessboard_class() != ChessboardClass::NotChessboard)
                .collect();
            for a in &chess {
                for b in &chess {
                    let ab = a.compose(b).unwrap();
                    assert_ne!(ab.chessboard_class(), ChessboardClass::NotChessboard);
                    if a.chessboard_class() == ChessboardClass::EvenChessboard
                        && b.chessboard_class() == ChessboardClass::EvenChessboard
                    {
                        assert_eq!(ab.chessboard_class(), ChessboardClass::EvenChessboard);
                    }
                }
                if a.chessboard_class() == ChessboardClass::EvenChessboard {
                    assert_eq!(a.inverse().chessboard_class(), ChessboardClass::EvenChessboard);
                }
            }
        }
    }
}
