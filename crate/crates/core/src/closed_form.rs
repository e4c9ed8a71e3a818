//! Product formulas for signed odd-length generating functions.
//!
//! Every value here is `Σ (−1)^{ℓ(σ)} x^{L(σ)}` over some set of
//! permutations, written as a product of Gaussian multinomials at `q = x²`
//! and factors `1 − x^{2k}`. Divisions by `[M]_{x²}` or `[m]_{x²}` go
//! through [`SignedPoly::exact_div`], so a transcription error surfaces as
//! an [`Error::InexactDivision`] instead of a wrong answer.

use serde::Serialize;

use crate::class::{ClassSpec, PositionSet};
use crate::error::{Error, Result};
use crate::laurent::{gaussian_multinomial, one_minus_even_powers, q_integer, SignedPoly};
use crate::perm::Population;

/// Numerical data read off the components of an unmixed class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnmixedShape {
    pub n: usize,
    /// `⌊(|I_j|+1)/2⌋` for each ascent component, left to right.
    pub b: Vec<usize>,
    /// `⌊(|J_k|+1)/2⌋` for each descent component, left to right.
    pub d: Vec<usize>,
    pub b_tilde: usize,
    pub d_tilde: usize,
    /// `b̃ + d̃`
    pub big_m: usize,
    /// `⌊n/2⌋`
    pub m: usize,
    /// `Σ d_k²`
    pub alpha: usize,
}

impl UnmixedShape {
    /// The multinomial `[M; b, d]_{x²}`.
    pub fn multinomial(&self) -> Result<SignedPoly> {
        let parts: Vec<usize> = self.b.iter().chain(&self.d).copied().collect();
        gaussian_multinomial(&parts)
    }
}

fn half_up(len: usize) -> usize {
    len.div_ceil(2)
}

pub fn shape_of(c: &ClassSpec) -> Result<UnmixedShape> {
    c.require_unmixed()?;
    let b: Vec<usize> = c.ascents().connected_components().iter().map(|i| half_up(i.len())).collect();
    let d: Vec<usize> = c.descents().connected_components().iter().map(|i| half_up(i.len())).collect();
    let b_tilde = b.iter().sum();
    let d_tilde = d.iter().sum();
    let alpha = d.iter().map(|x| x * x).sum();
    Ok(UnmixedShape {
        n: c.n(),
        b,
        d,
        b_tilde,
        d_tilde,
        big_m: b_tilde + d_tilde,
        m: c.n() / 2,
        alpha,
    })
}

/// `(−1)^{sign} x^e` with `sign` taken mod 2.
fn signed_power(sign: usize, e: usize) -> SignedPoly {
    SignedPoly::monomial(if sign % 2 == 0 { 1 } else { -1 }, e as i64)
}

/// Signed sum over the even or odd chessboard elements of the quotient
/// with forced ascents `ascents` and no forced descents.
pub fn quotient_formula(n: usize, ascents: PositionSet, pop: Population) -> Result<SignedPoly> {
    let c = ClassSpec::new(n, ascents, PositionSet::EMPTY)?;
    let shape = shape_of(&c)?;
    let m_tilde = shape.b_tilde;
    let even = || -> Result<SignedPoly> {
        Ok(&shape.multinomial()? * &one_minus_even_powers(m_tilde + 1, (n - 1) / 2))
    };
    match pop {
        Population::ChessEven => even(),
        Population::ChessOdd if n % 2 == 1 => Err(Error::EmptyPopulation(n)),
        Population::ChessOdd if m_tilde == shape.m => Ok(SignedPoly::zero()),
        Population::ChessOdd => Ok(&SignedPoly::monomial(-1, shape.m as i64) * &even()?),
        other => Err(Error::Precondition(format!(
            "quotient formula is stated for cn+ and cn-, not {}",
            other.flag()
        ))),
    }
}

/// Signed sum over the whole unmixed class in `S_n`.
pub fn unmixed_formula(c: &ClassSpec) -> Result<SignedPoly> {
    let shape = shape_of(c)?;
    let compressed = c.is_compressed()?;
    assert_eq!(
        compressed,
        c.n() == 2 * shape.big_m,
        "compressedness must coincide with n = 2M for {c}"
    );
    let mult = shape.multinomial()?;
    let (b, d) = (shape.b_tilde, shape.d_tilde);
    if compressed {
        let numer = &(&SignedPoly::x_pow(d as i64) * &q_integer(b))
            + &(&SignedPoly::x_pow(b as i64) * &q_integer(d));
        let scaled = &(&signed_power(d, shape.alpha) * &numer) * &mult;
        scaled.exact_div(&q_integer(shape.big_m))
    } else {
        let tail = (2 * shape.big_m + 2..=c.n()).fold(SignedPoly::one(), |acc, k| {
            let sign = if k % 2 == 1 { 1 } else { -1 };
            &acc * &SignedPoly::from_terms([(0, 1), ((k / 2) as i64, sign)])
        });
        Ok(&(&signed_power(d, d + shape.alpha) * &mult) * &tail)
    }
}

/// Signed sum over the even (`ChessEven`) or odd (`ChessOdd`) chessboard
/// elements of an unmixed class. `ChessAll` is their sum and `FullSn`
/// defers to [`unmixed_formula`].
pub fn chessboard_formula(c: &ClassSpec, pop: Population) -> Result<SignedPoly> {
    let shape = shape_of(c)?;
    let n = c.n();
    let (b, d, big_m, m, alpha) = (shape.b_tilde, shape.d_tilde, shape.big_m, shape.m, shape.alpha);
    let mult = shape.multinomial()?;
    // (−x)^{d̃} x^{α(J)}
    let lead = signed_power(d, d + alpha);
    match pop {
        Population::FullSn => unmixed_formula(c),
        Population::ChessAll => {
            Ok(&chessboard_formula(c, Population::ChessEven)? + &chessboard_formula(c, Population::ChessOdd)?)
        }
        Population::ChessEven if n % 2 == 1 => Ok(&(&lead * &mult) * &one_minus_even_powers(big_m + 1, m)),
        Population::ChessOdd if n % 2 == 1 => Ok(SignedPoly::zero()),
        Population::ChessEven if big_m == m => (&(&lead * &q_integer(b)) * &mult).exact_div(&q_integer(m)),
        Population::ChessEven => Ok(&(&lead * &mult) * &one_minus_even_powers(big_m + 1, m - 1)),
        Population::ChessOdd if big_m == m => {
            (&(&signed_power(d, b + alpha) * &q_integer(d)) * &mult).exact_div(&q_integer(m))
        }
        Population::ChessOdd => {
            let lead = signed_power(d + 1, d + m + alpha);
            Ok(&(&lead * &mult) * &one_minus_even_powers(big_m + 1, m - 1))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum AlternatingVariant {
    /// `σ(1) > σ(2) < σ(3) > ⋯`
    Alternating,
    /// `σ(1) < σ(2) > σ(3) < ⋯`
    ReverseAlternating,
}

impl AlternatingVariant {
    pub fn spec(self, n: usize) -> Result<ClassSpec> {
        match self {
            AlternatingVariant::Alternating => ClassSpec::alternating(n),
            AlternatingVariant::ReverseAlternating => ClassSpec::reverse_alternating(n),
        }
    }
}

pub fn alternating_formula(n: usize, variant: AlternatingVariant) -> Result<SignedPoly> {
    if n == 0 {
        return Err(Error::UnsupportedSize { n, max: crate::perm::MAX_N });
    }
    // S_1 consists of the identity alone, which both patterns admit vacuously.
    if n == 1 {
        return Ok(SignedPoly::one());
    }
    if n % 2 == 1 {
        return Ok(SignedPoly::zero());
    }
    let h = n / 2;
    Ok(match variant {
        AlternatingVariant::Alternating => signed_power(h, h),
        AlternatingVariant::ReverseAlternating => SignedPoly::x_pow((h * (h - 1)) as i64),
    })
}
