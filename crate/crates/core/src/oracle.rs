//! Brute-force ground truth.
//!
//! [`BucketTable`] makes a single pass over `S_n` and files every
//! permutation under its exact descent set, keeping one dense signed
//! polynomial per population in each bucket. Any descent class is then the
//! union of the buckets `D` with `descents ⊆ D ⊆ [n−1] ∖ ascents`, so all
//! `3^{n−1}` classes are answered from one enumeration.
//!
//! [`signed_poly_filtered`] is the slow path: it walks `S_n` in
//! lexicographic order through [`Permutation`] and filters by membership.
//! The two paths share no enumeration code.

use rayon::prelude::*;

use crate::class::ClassSpec;
use crate::error::{Error, Result};
use crate::laurent::SignedPoly;
use crate::perm::{max_odd_length, Permutation, Population};

pub const DEFAULT_CAP: usize = 11;
/// Upper bound accepted for an explicit cap override.
pub const HARD_CAP: usize = 14;

const FULL: usize = 0;
const EVEN: usize = 1;
const ODD: usize = 2;

/// Per-descent-set signed sums over `S_n`, `C_{n,+}` and `C_{n,−}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BucketTable {
    n: usize,
    /// `max L + 1`
    width: usize,
    /// `signed[pop][bucket * width + L]`, bucket = descent bits >> 1.
    signed: [Vec<i64>; 3],
    /// Unsigned count per bucket and odd length over `S_n`.
    unsigned: Vec<u64>,
}

impl BucketTable {
    fn empty(n: usize) -> Self {
        let width = max_odd_length(n) + 1;
        let cells = (1usize << (n - 1)) * width;
        Self {
            n,
            width,
            signed: [vec![0; cells], vec![0; cells], vec![0; cells]],
            unsigned: vec![0; cells],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_buckets(&self) -> usize {
        1 << (self.n - 1)
    }

    fn merge(mut self, other: &BucketTable) -> Self {
        for (dst, src) in self.signed.iter_mut().zip(&other.signed) {
            dst.iter_mut().zip(src).for_each(|(a, b)| *a += b);
        }
        self.unsigned.iter_mut().zip(&other.unsigned).for_each(|(a, b)| *a += b);
        self
    }

    fn cell_range(&self, bucket: usize) -> std::ops::Range<usize> {
        bucket * self.width..(bucket + 1) * self.width
    }

    /// Signed polynomial of one exact-descent-set bucket (`bits` as in
    /// [`crate::class::PositionSet::bits`]).
    pub fn bucket(&self, bits: u64, pop: Population) -> SignedPoly {
        let mut acc = vec![0i64; self.width];
        self.accumulate(bits as usize >> 1, pop, &mut acc);
        SignedPoly::from_dense(&acc)
    }

    fn accumulate(&self, bucket: usize, pop: Population, acc: &mut [i64]) {
        let range = self.cell_range(bucket);
        let mut add = |src: &[i64]| acc.iter_mut().zip(&src[range.clone()]).for_each(|(a, b)| *a += b);
        match pop {
            Population::FullSn => add(&self.signed[FULL]),
            Population::ChessEven => add(&self.signed[EVEN]),
            Population::ChessOdd => add(&self.signed[ODD]),
            Population::ChessAll => {
                add(&self.signed[EVEN]);
                add(&self.signed[ODD]);
            }
        }
    }

    fn check_spec(&self, c: &ClassSpec) -> Result<()> {
        if c.n() != self.n {
            return Err(Error::SizeMismatch {
                left: c.n(),
                right: self.n,
            });
        }
        Ok(())
    }

    /// Buckets (as shifted indices) belonging to a class.
    fn class_buckets(&self, c: &ClassSpec) -> impl Iterator<Item = usize> {
        let forced = c.descents().bits() as usize >> 1;
        let free = c.free().bits() as usize >> 1;
        // all submasks of `free`, including 0
        let mut sub = Some(free);
        std::iter::from_fn(move || {
            let s = sub?;
            sub = (s != 0).then(|| (s - 1) & free);
            Some(s | forced)
        })
    }

    pub fn signed_poly(&self, c: &ClassSpec, pop: Population) -> Result<SignedPoly> {
        self.check_spec(c)?;
        let mut acc = vec![0i64; self.width];
        for bucket in self.class_buckets(c) {
            self.accumulate(bucket, pop, &mut acc);
        }
        Ok(SignedPoly::from_dense(&acc))
    }

    /// Number of permutations in a class.
    pub fn cardinality(&self, c: &ClassSpec) -> Result<u64> {
        self.check_spec(c)?;
        Ok(self
            .class_buckets(c)
            .map(|b| self.unsigned[self.cell_range(b)].iter().sum::<u64>())
            .sum())
    }

    /// `Σ_{σ ∈ S_n} x^{L(σ)}`.
    pub fn distribution(&self) -> SignedPoly {
        let mut acc = vec![0u64; self.width];
        for chunk in self.unsigned.chunks(self.width) {
            acc.iter_mut().zip(chunk).for_each(|(a, b)| *a += b);
        }
        SignedPoly::from_terms(acc.into_iter().enumerate().map(|(e, c)| (e as i64, c)))
    }

    /// Total number of permutations filed, which must be `n!`.
    pub fn total_count(&self) -> u64 {
        self.unsigned.iter().sum()
    }
}

struct Walker<'a> {
    n: usize,
    width: usize,
    table: &'a mut BucketTable,
}

#[derive(Clone, Copy)]
struct State {
    /// values already placed, bit v
    used: u64,
    /// values placed at odd / even positions
    at_odd: u64,
    at_even: u64,
    inv_parity: u32,
    odd_len: usize,
    descents: usize,
    last: usize,
    even_board: bool,
    odd_board: bool,
}

impl Walker<'_> {
    /// Places a value at 1-based position `pos`, trying values in increasing
    /// order so leaves are visited lexicographically.
    fn walk(&mut self, pos: usize, st: State) {
        if pos > self.n {
            let idx = st.descents * self.width + st.odd_len;
            let sign = if st.inv_parity == 0 { 1 } else { -1 };
            self.table.signed[FULL][idx] += sign;
            if st.even_board {
                self.table.signed[EVEN][idx] += sign;
            }
            if st.odd_board {
                self.table.signed[ODD][idx] += sign;
            }
            self.table.unsigned[idx] += 1;
            return;
        }
        let mut free = !st.used & ((1u64 << (self.n + 1)) - 2);
        while free != 0 {
            let v = free.trailing_zeros() as usize;
            free &= free - 1;
            self.walk(pos + 1, step(st, pos, v));
        }
    }
}

fn step(st: State, pos: usize, v: usize) -> State {
    let greater = !((1u64 << (v + 1)) - 1);
    let opposite = if pos % 2 == 1 { st.at_even } else { st.at_odd };
    let mut next = st;
    next.inv_parity ^= (st.used & greater).count_ones() & 1;
    next.odd_len += (opposite & greater).count_ones() as usize;
    if pos > 1 && st.last > v {
        next.descents |= 1 << (pos - 2);
    }
    next.used |= 1 << v;
    if pos % 2 == 1 {
        next.at_odd |= 1 << v;
    } else {
        next.at_even |= 1 << v;
    }
    let same = (pos + v) % 2 == 0;
    next.even_board &= same;
    next.odd_board &= !same;
    next.last = v;
    next
}

const START: State = State {
    used: 0,
    at_odd: 0,
    at_even: 0,
    inv_parity: 0,
    odd_len: 0,
    descents: 0,
    last: 0,
    even_board: true,
    odd_board: true,
};

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if cap > HARD_CAP {
        return Err(Error::CapExceeded { n: cap, cap: HARD_CAP });
    }
    if n == 0 {
        return Err(Error::UnsupportedSize { n, max: cap });
    }
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    Ok(())
}

fn partial_table(n: usize, first: usize) -> BucketTable {
    let mut table = BucketTable::empty(n);
    let width = table.width;
    let mut walker = Walker {
        n,
        width,
        table: &mut table,
    };
    walker.walk(2, step(START, 1, first));
    table
}

/// One pass over `S_n`, fanned out over the value of `σ(1)`.
pub fn build_bucket_table_with_cap(n: usize, cap: usize) -> Result<BucketTable> {
    check_cap(n, cap)?;
    let parts: Vec<BucketTable> = (1..=n).into_par_iter().map(|first| partial_table(n, first)).collect();
    Ok(parts.iter().fold(BucketTable::empty(n), |acc, p| acc.merge(p)))
}

pub fn build_bucket_table(n: usize) -> Result<BucketTable> {
    build_bucket_table_with_cap(n, DEFAULT_CAP)
}

/// Single-threaded build, for checking that the parallel build is schedule independent.
pub fn build_bucket_table_sequential(n: usize, cap: usize) -> Result<BucketTable> {
    check_cap(n, cap)?;
    let mut table = BucketTable::empty(n);
    let width = table.width;
    Walker {
        n,
        width,
        table: &mut table,
    }
    .walk(1, START);
    Ok(table)
}

/// `Σ (−1)^{ℓ(σ)} x^{L(σ)}` over the permutations of `c` in `pop`, from the
/// table when one is supplied and by filtered enumeration otherwise.
pub fn signed_poly(c: &ClassSpec, pop: Population, table: Option<&BucketTable>) -> Result<SignedPoly> {
    match table {
        Some(t) => t.signed_poly(c, pop),
        None => {
            check_cap(c.n(), DEFAULT_CAP)?;
            signed_poly_filtered(c, pop)
        }
    }
}

/// Direct enumeration of `S_n` through [`Permutation`] statistics.
pub fn signed_poly_filtered(c: &ClassSpec, pop: Population) -> Result<SignedPoly> {
    let mut acc = SignedPoly::zero();
    for s in Permutation::all(c.n())? {
        if !c.contains(&s)? || !pop.admits(s.chessboard_class()) {
            continue;
        }
        let sign = if s.inv_length() % 2 == 0 { 1 } else { -1 };
        acc += &SignedPoly::monomial(sign, s.odd_length() as i64);
    }
    Ok(acc)
}

/// `L_n(x) = Σ_{σ ∈ S_n} x^{L(σ)}`.
pub fn distribution(n: usize) -> Result<SignedPoly> {
    distribution_with_cap(n, DEFAULT_CAP)
}

pub fn distribution_with_cap(n: usize, cap: usize) -> Result<SignedPoly> {
    Ok(build_bucket_table_with_cap(n, cap)?.distribution())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(i64, i64)]) -> SignedPoly {
        SignedPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn tiny_tables() {
        let t = build_bucket_table(1).unwrap();
        assert_eq!(t.num_buckets(), 1);
        assert_eq!(t.bucket(0, Population::FullSn), SignedPoly::one());
        let t = build_bucket_table(2).unwrap();
        assert_eq!(t.bucket(0, Population::FullSn), SignedPoly::one());
        assert_eq!(t.bucket(0b10, Population::FullSn), SignedPoly::monomial(-1, 1));
        assert_eq!(build_bucket_table(4).unwrap().total_count(), 24);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(build_bucket_table(12), Err(Error::CapExceeded { n: 12, cap: 11 })));
        assert!(build_bucket_table(0).is_err());
        assert!(build_bucket_table_with_cap(5, 4).is_err());
        assert!(build_bucket_table_with_cap(3, HARD_CAP + 1).is_err());
    }

    #[test]
    fn counterexamples_at_eight() {
        let t = build_bucket_table(8).unwrap();
        let nonzero = ClassSpec::from_lists(8, &[1, 2, 4], &[3, 5, 6, 7]).unwrap();
        assert_eq!(
            t.signed_poly(&nonzero, Population::FullSn).unwrap(),
            poly(&[(6, -1), (8, -1), (10, -1)])
        );
        let zero = ClassSpec::from_lists(8, &[1, 2, 4], &[3, 5, 6]).unwrap();
        assert!(t.signed_poly(&zero, Population::FullSn).unwrap().is_zero());
    }

    #[test]
    fn s2_unrestricted() {
        let c = ClassSpec::unrestricted(2).unwrap();
        assert_eq!(signed_poly(&c, Population::FullSn, None).unwrap(), poly(&[(0, 1), (1, -1)]));
    }

    #[test]
    fn distributions() {
        assert_eq!(distribution(3).unwrap(), poly(&[(0, 1), (1, 4), (2, 1)]));
        assert_eq!(distribution(4).unwrap(), poly(&[(0, 1), (1, 8), (2, 6), (3, 8), (4, 1)]));
        assert_eq!(
            distribution(6).unwrap(),
            SignedPoly::from_dense(&[1, 16, 59, 137, 147, 147, 137, 59, 16, 1])
        );
    }

    #[test]
    fn table_and_filter_agree() {
        for n in 1..=6 {
            let t = build_bucket_table(n).unwrap();
            for c in ClassSpec::all_disjoint(n).unwrap() {
                for pop in Population::ALL {
                    assert_eq!(
                        t.signed_poly(&c, pop).unwrap(),
                        signed_poly_filtered(&c, pop).unwrap(),
                        "{c} {pop:?}"
                    );
                }
                let direct = Permutation::all(n).unwrap().filter(|s| c.contains(s).unwrap()).count();
                assert_eq!(t.cardinality(&c).unwrap(), direct as u64);
            }
        }
    }

    #[test]
    fn size_mismatch() {
        let t = build_bucket_table(4).unwrap();
        let c = ClassSpec::unrestricted(5).unwrap();
        assert!(matches!(t.signed_poly(&c, Population::FullSn), Err(Error::SizeMismatch { .. })));
    }

    #[test]
    fn parallel_matches_sequential() {
        for n in 1..=8 {
            assert_eq!(
                build_bucket_table(n).unwrap(),
                build_bucket_table_sequential(n, DEFAULT_CAP).unwrap()
            );
        }
    }

    #[test]
    fn distribution_shape() {
        let mut fact = 1u64;
        for n in 1..=10usize {
            fact *= n as u64;
            let t = build_bucket_table(n).unwrap();
            assert_eq!(t.total_count(), fact);
            let l = t.distribution();
            assert!(l.is_symmetric());
            assert_eq!(l.degree(), Some(max_odd_length(n) as i64));
            assert_eq!(l.coeff(max_odd_length(n) as i64), 1.into());
            assert_eq!(l.eval_at_one(), fact.into());
        }
    }
}
