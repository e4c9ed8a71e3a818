//! Descent classes `{w ∈ S_n : descents ⊆ D(w) ⊆ [n−1] ∖ ascents}` and the
//! structural predicates on them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, UnmixedClause};
use crate::perm::{Permutation, MAX_N};

/// A set of small positive integers, packed into a `u64` (bit `i` ↔ `i`).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PositionSet(u64);

/// The closed integer interval `[lo, hi]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Interval {
    pub lo: usize,
    pub hi: usize,
}

impl Interval {
    pub fn new(lo: usize, hi: usize) -> Result<Self> {
        if lo > hi || lo == 0 || hi >= MAX_N {
            return Err(Error::Precondition(format!("[{lo}, {hi}] is not a valid interval")));
        }
        Ok(Self { lo, hi })
    }

    pub fn len(&self) -> usize {
        self.hi - self.lo + 1
    }

    pub fn to_set(self) -> PositionSet {
        PositionSet::range(self.lo, self.hi)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl PositionSet {
    pub const EMPTY: PositionSet = PositionSet(0);

    pub fn from_bits(bits: u64) -> Self {
        debug_assert_eq!(bits & 1, 0, "position 0 is never stored");
        Self(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// `[lo, hi]` as a set; empty when `lo > hi`.
    pub fn range(lo: usize, hi: usize) -> Self {
        if lo > hi {
            return Self::EMPTY;
        }
        let upper = if hi >= 63 { u64::MAX } else { (1u64 << (hi + 1)) - 1 };
        Self(upper & !((1u64 << lo) - 1))
    }

    /// `[1, n−1]`.
    pub fn full(n: usize) -> Self {
        Self::range(1, n.saturating_sub(1))
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        assert!((1..64).contains(&i), "position {i} out of packed range");
        self.0 |= 1 << i;
    }

    pub fn remove(&mut self, i: usize) {
        if i < 64 {
            self.0 &= !(1 << i);
        }
    }

    pub fn with(mut self, i: usize) -> Self {
        self.insert(i);
        self
    }

    pub fn without(mut self, i: usize) -> Self {
        self.remove(i);
        self
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn union(self, other: Self) -> Self {
        Self(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        Self(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        Self(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// `self + 1 = {i + 1 : i ∈ self}`.
    pub fn shifted_up(self) -> Self {
        assert!(self.0 >> 63 == 0, "shift overflows packed range");
        Self(self.0 << 1)
    }

    /// `{i − 1 : i ∈ self, i ≥ 2}`.
    pub fn shifted_down(self) -> Self {
        Self(self.0 >> 1 & !1)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            (bits != 0).then(|| {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                i
            })
        })
    }

    /// Maximal runs of consecutive elements, in increasing order.
    pub fn connected_components(self) -> Vec<Interval> {
        let mut out = Vec::new();
        let mut rest = self.0;
        while rest != 0 {
            let lo = rest.trailing_zeros() as usize;
            let run = (rest >> lo).trailing_ones() as usize;
            let hi = lo + run - 1;
            out.push(Interval { lo, hi });
            rest &= !PositionSet::range(lo, hi).0;
        }
        out
    }

    /// The component of `self` containing `i`, if any.
    pub fn component_of(self, i: usize) -> Option<Interval> {
        self.connected_components().into_iter().find(|c| c.lo <= i && i <= c.hi)
    }

    /// Comma-separated list, e.g. `1,2,4`; empty string for `∅`.
    pub fn to_list_string(self) -> String {
        self.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl FromIterator<usize> for PositionSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = PositionSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Debug for PositionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for PositionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.to_list_string())
    }
}

impl FromStr for PositionSet {
    type Err = Error;

    /// Parses a comma-separated list of positive integers; blank means `∅`.
    fn from_str(s: &str) -> Result<Self> {
        let mut set = PositionSet::EMPTY;
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let i: usize = tok
                .parse()
                .map_err(|_| Error::Precondition(format!("`{tok}` is not a position")))?;
            if !(1..MAX_N).contains(&i) {
                return Err(Error::PositionOutOfRange { position: i, n: MAX_N });
            }
            set.insert(i);
        }
        Ok(set)
    }
}

impl Serialize for PositionSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for PositionSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        if let Some(&bad) = v.iter().find(|&&i| !(1..MAX_N).contains(&i)) {
            return Err(serde::de::Error::custom(format!("position {bad} out of range")));
        }
        Ok(v.into_iter().collect())
    }
}

/// A descent class of `S_n`: `ascents` are positions forced to be ascents,
/// `descents` positions forced to be descents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClassSpec {
    n: usize,
    ascents: PositionSet,
    descents: PositionSet,
}

impl ClassSpec {
    pub fn new(n: usize, ascents: PositionSet, descents: PositionSet) -> Result<Self> {
        if n == 0 || n >= MAX_N {
            return Err(Error::UnsupportedSize { n, max: MAX_N - 1 });
        }
        let full = PositionSet::full(n);
        if let Some(bad) = ascents.union(descents).difference(full).iter().next() {
            return Err(Error::PositionOutOfRange { position: bad, n });
        }
        if let Some(both) = ascents.intersection(descents).iter().next() {
            return Err(Error::Overlapping(both));
        }
        Ok(Self { n, ascents, descents })
    }

    pub fn from_lists(n: usize, ascents: &[usize], descents: &[usize]) -> Result<Self> {
        let to_set = |xs: &[usize]| -> Result<PositionSet> {
            xs.iter().try_fold(PositionSet::EMPTY, |s, &i| {
                if i == 0 || i >= n {
                    Err(Error::PositionOutOfRange { position: i, n })
                } else {
                    Ok(s.with(i))
                }
            })
        };
        Self::new(n, to_set(ascents)?, to_set(descents)?)
    }

    /// The whole of `S_n`.
    pub fn unrestricted(n: usize) -> Result<Self> {
        Self::new(n, PositionSet::EMPTY, PositionSet::EMPTY)
    }

    /// `σ(1) > σ(2) < σ(3) > ⋯`: descents at odd positions, ascents at even ones.
    pub fn alternating(n: usize) -> Result<Self> {
        let full = PositionSet::full(n);
        let odd: PositionSet = full.iter().filter(|i| i % 2 == 1).collect();
        Self::new(n, full.difference(odd), odd)
    }

    /// `σ(1) < σ(2) > σ(3) < ⋯`.
    pub fn reverse_alternating(n: usize) -> Result<Self> {
        Ok(Self::alternating(n)?.swapped())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ascents(&self) -> PositionSet {
        self.ascents
    }

    pub fn descents(&self) -> PositionSet {
        self.descents
    }

    pub fn constrained(&self) -> PositionSet {
        self.ascents.union(self.descents)
    }

    /// Positions in `[n−1]` with no constraint.
    pub fn free(&self) -> PositionSet {
        PositionSet::full(self.n).difference(self.constrained())
    }

    /// Same `n` with ascents and descents exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            n: self.n,
            ascents: self.descents,
            descents: self.ascents,
        }
    }

    pub fn with_sets(&self, ascents: PositionSet, descents: PositionSet) -> Result<Self> {
        Self::new(self.n, ascents, descents)
    }

    /// Whether a descent set (as a bit mask) belongs to this class.
    pub fn admits_descent_bits(&self, bits: u64) -> bool {
        self.descents.0 & !bits == 0 && bits & self.ascents.0 == 0
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.n() != self.n {
            return Err(Error::SizeMismatch {
                left: p.n(),
                right: self.n,
            });
        }
        Ok(self.admits_descent_bits(p.descent_set().bits()))
    }

    pub fn unmixed_violation(&self) -> Option<UnmixedClause> {
        let (a, d) = (self.ascents, self.descents);
        if !a.is_disjoint(d) {
            Some(UnmixedClause::Overlap)
        } else if !a.shifted_up().is_disjoint(d) {
            Some(UnmixedClause::AscentThenDescent)
        } else if !a.is_disjoint(d.shifted_up()) {
            Some(UnmixedClause::DescentThenAscent)
        } else {
            None
        }
    }

    pub fn is_unmixed(&self) -> bool {
        self.unmixed_violation().is_none()
    }

    pub(crate) fn require_unmixed(&self) -> Result<()> {
        match self.unmixed_violation() {
            Some(clause) => Err(Error::NotUnmixed(clause)),
            None => Ok(()),
        }
    }

    /// Every component has odd size and exactly `s + t − 1` positions are free.
    pub fn is_compressed(&self) -> Result<bool> {
        self.require_unmixed()?;
        let a = self.ascents.connected_components();
        let d = self.descents.connected_components();
        let all_odd = a.iter().chain(&d).all(|c| c.len() % 2 == 1);
        Ok(all_odd && self.free().len() + 1 == a.len() + d.len())
    }

    /// Positions in `[n]` where the forced pattern turns from rising to falling.
    pub fn peaks(&self) -> PositionSet {
        let (a, d) = (self.ascents, self.descents);
        a.shifted_up().difference(a).union(d.difference(d.shifted_up()))
    }

    /// Positions in `[n]` where the forced pattern turns from falling to rising.
    pub fn valleys(&self) -> PositionSet {
        let (a, d) = (self.ascents, self.descents);
        a.difference(a.shifted_up()).union(d.shifted_up().difference(d))
    }

    /// Sufficient condition for the signed generating function to vanish:
    /// some even-size component `[i, i+2k+1]` of the constrained positions
    /// has every valley and every peak in `[i, i+2k+2]` of opposite parity.
    pub fn zero_condition(&self) -> bool {
        let peaks = self.peaks();
        let valleys = self.valleys();
        self.constrained()
            .connected_components()
            .into_iter()
            .filter(|c| c.len() % 2 == 0)
            .any(|c| {
                let window = PositionSet::range(c.lo, c.hi + 1);
                let p = peaks.intersection(window);
                let v = valleys.intersection(window);
                p.iter().all(|b| v.iter().all(|a| (a + b) % 2 == 1))
            })
    }

    /// Every disjoint `(ascents, descents)` pair over `[n−1]`, ordered by the
    /// base-3 code where position `i` carries digit `i−1` (0 free, 1 ascent, 2 descent).
    pub fn all_disjoint(n: usize) -> Result<Vec<ClassSpec>> {
        if n == 0 || n > 20 {
            return Err(Error::UnsupportedSize { n, max: 20 });
        }
        let slots = n - 1;
        let total = 3usize.pow(slots as u32);
        Ok((0..total)
            .map(|mut code| {
                let (mut a, mut d) = (PositionSet::EMPTY, PositionSet::EMPTY);
                for pos in 1..=slots {
                    match code % 3 {
                        1 => a.insert(pos),
                        2 => d.insert(pos),
                        _ => {}
                    }
                    code /= 3;
                }
                ClassSpec { n, ascents: a, descents: d }
            })
            .collect())
    }

    pub fn all_unmixed(n: usize) -> Result<Vec<ClassSpec>> {
        Ok(Self::all_disjoint(n)?.into_iter().filter(|c| c.is_unmixed()).collect())
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} ascents={} descents={}", self.n, self.ascents, self.descents)
    }
}
