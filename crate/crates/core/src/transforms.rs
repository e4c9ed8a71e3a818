//! Rewrites of a descent class that change its signed generating function
//! in a controlled way.
//!
//! Each transform returns a [`TransformResult`] describing the new class and
//! the relation `old = factor · new` (or `old = factor · new(1/x)` when
//! `reciprocal` is set). Nothing is evaluated here; the verify module checks
//! the relations against the oracle.

use serde::Serialize;

use crate::class::{ClassSpec, Interval, PositionSet};
use crate::error::{Error, Result};
use crate::laurent::SignedPoly;
use crate::perm::{max_odd_length, Population};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum TransformKind {
    ShiftRightAscent,
    ShiftLeftAscent,
    ShiftRightDescent,
    ShiftLeftDescent,
    ReverseDescentComponent,
    Complement,
    ConjecturedMixedShift,
}

/// How chessboard populations of the old class correspond to the new one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum PopulationMap {
    /// The relation is only claimed over all of `S_n`.
    FullSnOnly,
    /// The relation also holds on `C_{n,+}` and on `C_{n,−}` separately.
    Preserved,
    /// `C_{n,+}` of the old class relates to `C_{n,−}` of the new one and vice versa.
    SwapChessboard,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransformResult {
    pub kind: TransformKind,
    pub new_spec: ClassSpec,
    /// Always a signed monomial.
    pub factor: SignedPoly,
    pub reciprocal: bool,
    pub population_map: PopulationMap,
    /// `true` when the relation is conjectured rather than proved.
    pub conjectural: bool,
    /// For shifts: the class with the union of old and new shifted sets,
    /// which has the same generating function as both ends.
    pub intermediate: Option<ClassSpec>,
}

impl TransformResult {
    fn equality(kind: TransformKind, new_spec: ClassSpec, intermediate: Option<ClassSpec>) -> Self {
        Self {
            kind,
            new_spec,
            factor: SignedPoly::one(),
            reciprocal: false,
            population_map: PopulationMap::Preserved,
            conjectural: false,
            intermediate,
        }
    }

    /// The old generating function predicted from the new one.
    pub fn predict_old(&self, new_gf: &SignedPoly) -> SignedPoly {
        if self.reciprocal {
            &self.factor * &new_gf.reciprocal_substitute()
        } else {
            &self.factor * new_gf
        }
    }

    /// The population of the new class to compare against `old` of the old
    /// class, or `None` if the relation says nothing about `old`.
    pub fn corresponding_population(&self, old: Population) -> Option<Population> {
        use Population::*;
        match (self.population_map, old) {
            (_, FullSn) => Some(FullSn),
            (PopulationMap::FullSnOnly, _) => None,
            (PopulationMap::Preserved, p) => Some(p),
            (PopulationMap::SwapChessboard, ChessEven) => Some(ChessOdd),
            (PopulationMap::SwapChessboard, ChessOdd) => Some(ChessEven),
            (PopulationMap::SwapChessboard, ChessAll) => Some(ChessAll),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Ascent,
    Descent,
}

impl Side {
    fn pick(self, c: &ClassSpec) -> PositionSet {
        match self {
            Side::Ascent => c.ascents(),
            Side::Descent => c.descents(),
        }
    }

    fn rebuild(self, c: &ClassSpec, moved: PositionSet) -> Result<ClassSpec> {
        match self {
            Side::Ascent => c.with_sets(moved, c.descents()),
            Side::Descent => c.with_sets(c.ascents(), moved),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Side::Ascent => "ascents",
            Side::Descent => "descents",
        }
    }
}

fn fail(msg: String) -> Error {
    Error::Precondition(msg)
}

/// Checks that `[lo, hi]` is exactly a connected component of `set`.
fn require_component(set: PositionSet, lo: usize, hi: usize) -> Result<()> {
    if lo == 0 || set.component_of(lo) != Some(Interval { lo, hi }) {
        return Err(fail(format!("[{lo}, {hi}] is not a connected component of ascents ∪ descents")));
    }
    Ok(())
}

fn shift_right(c: &ClassSpec, side: Side, kind: TransformKind, i: usize, k: usize) -> Result<TransformResult> {
    let (lo, hi) = (i, i + 2 * k);
    let union = c.constrained();
    require_component(union, lo, hi)?;
    let moved = side.pick(c);
    if !PositionSet::range(lo, hi).is_subset(moved) {
        return Err(fail(format!("[{lo}, {hi}] is not contained in {}", side.name())));
    }
    if hi + 1 >= c.n() {
        return Err(fail(format!("target position {} is outside [1, {}]", hi + 1, c.n() - 1)));
    }
    if union.contains(hi + 2) {
        return Err(fail(format!("position {} lies in ascents ∪ descents", hi + 2)));
    }
    let new_spec = side.rebuild(c, moved.without(lo).with(hi + 1))?;
    let intermediate = side.rebuild(c, moved.with(hi + 1))?;
    Ok(TransformResult::equality(kind, new_spec, Some(intermediate)))
}

fn shift_left(c: &ClassSpec, side: Side, kind: TransformKind, i: usize, k: usize) -> Result<TransformResult> {
    if i == 0 {
        return Err(fail("i must be a positive position".into()));
    }
    let (lo, hi) = (i + 1, i + 2 * k + 1);
    let union = c.constrained();
    require_component(union, lo, hi)?;
    let moved = side.pick(c);
    if !PositionSet::range(lo, hi).is_subset(moved) {
        return Err(fail(format!("[{lo}, {hi}] is not contained in {}", side.name())));
    }
    if union.contains(i - 1) {
        return Err(fail(format!("position {} lies in ascents ∪ descents", i - 1)));
    }
    let new_spec = side.rebuild(c, moved.without(hi).with(i))?;
    let intermediate = side.rebuild(c, moved.with(i))?;
    Ok(TransformResult::equality(kind, new_spec, Some(intermediate)))
}

/// Moves the ascent component `[i, i+2k]` one step right:
/// ascents become `(I ∖ {i}) ∪ {i+2k+1}`.
pub fn shift_right_ascent(c: &ClassSpec, i: usize, k: usize) -> Result<TransformResult> {
    shift_right(c, Side::Ascent, TransformKind::ShiftRightAscent, i, k)
}

/// Moves the ascent component `[i+1, i+2k+1]` one step left:
/// ascents become `(I ∖ {i+2k+1}) ∪ {i}`.
pub fn shift_left_ascent(c: &ClassSpec, i: usize, k: usize) -> Result<TransformResult> {
    shift_left(c, Side::Ascent, TransformKind::ShiftLeftAscent, i, k)
}

pub fn shift_right_descent(c: &ClassSpec, i: usize, k: usize) -> Result<TransformResult> {
    shift_right(c, Side::Descent, TransformKind::ShiftRightDescent, i, k)
}

pub fn shift_left_descent(c: &ClassSpec, i: usize, k: usize) -> Result<TransformResult> {
    shift_left(c, Side::Descent, TransformKind::ShiftLeftDescent, i, k)
}

/// Turns an even-size descent component of size `2k` into ascents, at the
/// cost of the factor `(−1)^k x^{k(k+1)}`.
pub fn reverse_descent_component(c: &ClassSpec, comp: Interval) -> Result<TransformResult> {
    require_component(c.constrained(), comp.lo, comp.hi)?;
    let block = comp.to_set();
    if !block.is_subset(c.descents()) {
        return Err(fail(format!("{comp} is not contained in descents")));
    }
    if comp.len() % 2 == 1 {
        return Err(fail(format!("{comp} has odd size {}", comp.len())));
    }
    let k = comp.len() / 2;
    let new_spec = c.with_sets(c.ascents().union(block), c.descents().difference(block))?;
    let sign = if k % 2 == 0 { 1 } else { -1 };
    Ok(TransformResult {
        kind: TransformKind::ReverseDescentComponent,
        new_spec,
        factor: SignedPoly::monomial(sign, (k * (k + 1)) as i64),
        reciprocal: false,
        population_map: PopulationMap::Preserved,
        conjectural: false,
        intermediate: None,
    })
}

/// Exchanges ascents and descents via `σ ↦ w₀σ`:
/// `old(x) = (−1)^{ℓ(w₀)} x^{L(w₀)} · new(1/x)`.
pub fn complement(c: &ClassSpec) -> TransformResult {
    let n = c.n();
    let sign = if (n * (n - 1) / 2) % 2 == 0 { 1 } else { -1 };
    TransformResult {
        kind: TransformKind::Complement,
        new_spec: c.swapped(),
        factor: SignedPoly::monomial(sign, max_odd_length(n) as i64),
        reciprocal: true,
        population_map: if n % 2 == 0 {
            PopulationMap::SwapChessboard
        } else {
            PopulationMap::Preserved
        },
        conjectural: false,
        intermediate: None,
    }
}

/// Shifts a component `[i, i+2k]` of mixed ascents and descents one step
/// right. The equality of generating functions is conjectural.
pub fn conjectured_mixed_shift(c: &ClassSpec, i: usize, k: usize) -> Result<TransformResult> {
    let (lo, hi) = (i, i + 2 * k);
    let union = c.constrained();
    require_component(union, lo, hi)?;
    if hi + 1 >= c.n() {
        return Err(fail(format!("target position {} is outside [1, {}]", hi + 1, c.n() - 1)));
    }
    if union.contains(hi + 2) {
        return Err(fail(format!("position {} lies in ascents ∪ descents", hi + 2)));
    }
    let block = PositionSet::range(lo, hi);
    let a = c.ascents().intersection(block);
    let b = c.descents().intersection(block);
    let new_spec = c.with_sets(
        c.ascents().difference(a).union(a.shifted_up()),
        c.descents().difference(b).union(b.shifted_up()),
    )?;
    Ok(TransformResult {
        kind: TransformKind::ConjecturedMixedShift,
        new_spec,
        factor: SignedPoly::one(),
        reciprocal: false,
        population_map: PopulationMap::FullSnOnly,
        conjectural: true,
        intermediate: None,
    })
}

/// Whether some component `[i, i+2k+1]` has `[i, i+2k]` in ascents and its
/// last position in descents, which forces the generating function to vanish.
pub fn ascent_run_ending_in_descent(c: &ClassSpec) -> bool {
    c.constrained().connected_components().into_iter().any(|comp| {
        comp.len() % 2 == 0
            && c.descents().contains(comp.hi)
            && PositionSet::range(comp.lo, comp.hi - 1).is_subset(c.ascents())
    })
}
