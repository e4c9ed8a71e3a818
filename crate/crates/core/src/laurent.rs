//! Sparse Laurent polynomials in one variable `x` with arbitrary-precision
//! integer coefficients, plus q-integers and Gaussian multinomials at `q = x²`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent → coefficient, never storing a zero coefficient.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SignedPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl SignedPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c·x^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c.into());
        p
    }

    /// `x^e`.
    pub fn x_pow(e: i64) -> Self {
        Self::monomial(1, e)
    }

    /// From `(exponent, coefficient)` pairs; repeated exponents are summed.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// From a dense coefficient slice whose first entry is the coefficient of `x^0`.
    pub fn from_dense(coeffs: &[i64]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(e, &c)| (e as i64, c)))
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// Highest exponent; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn low_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// The single term `(exponent, coefficient)` if this is a monomial.
    pub fn as_monomial(&self) -> Option<(i64, &BigInt)> {
        (self.terms.len() == 1).then(|| self.terms().next().unwrap())
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Value at an integer point; negative exponents are rejected.
    pub fn eval_int(&self, x: i64) -> Option<BigInt> {
        if self.low_degree().is_some_and(|e| e < 0) {
            return None;
        }
        let x = BigInt::from(x);
        Some(self.terms().map(|(e, c)| c * x.pow(e as u32)).sum())
    }

    /// Multiplies by `x^e`.
    pub fn shift(&self, e: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(&k, c)| (k + e, c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// The substitution `x → 1/x`.
    pub fn reciprocal_substitute(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&k, c)| (-k, c.clone())).collect(),
        }
    }

    /// `q` with `self = q · den`, or the remainder left by long division.
    pub fn exact_div(&self, den: &SignedPoly) -> Result<SignedPoly> {
        let (Some(den_low), Some(den_high)) = (den.low_degree(), den.degree()) else {
            return Err(Error::DivisionByZero);
        };
        let Some(num_low) = self.low_degree() else {
            return Ok(Self::zero());
        };
        let d = den.dense_from(den_low);
        let mut r = self.dense_from(num_low);
        let d_deg = (den_high - den_low) as usize;
        let lead = &d[d_deg];
        let inexact = |r: &[BigInt]| Error::InexactDivision {
            remainder: Self::from_terms(r.iter().enumerate().map(|(e, c)| (e as i64 + num_low, c.clone()))),
        };
        if r.len() <= d_deg {
            return Err(inexact(&r));
        }
        let mut quotient = vec![BigInt::zero(); r.len() - d_deg];
        for top in (d_deg..r.len()).rev() {
            if r[top].is_zero() {
                continue;
            }
            if !(&r[top] % lead).is_zero() {
                return Err(inexact(&r));
            }
            let factor = &r[top] / lead;
            let base = top - d_deg;
            for (j, dc) in d.iter().enumerate() {
                r[base + j] -= &factor * dc;
            }
            quotient[base] = factor;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return Err(inexact(&r));
        }
        Ok(Self::from_terms(
            quotient.into_iter().enumerate().map(|(e, c)| (e as i64 + num_low - den_low, c)),
        ))
    }

    fn dense_from(&self, low: i64) -> Vec<BigInt> {
        let high = self.degree().unwrap_or(low);
        let mut v = vec![BigInt::zero(); (high - low + 1) as usize];
        for (e, c) in self.terms() {
            v[(e - low) as usize] = c.clone();
        }
        v
    }

    /// Coefficients from lowest to highest exponent, gaps filled with zero.
    pub fn coefficient_range(&self) -> Vec<BigInt> {
        match self.low_degree() {
            Some(low) => self.dense_from(low),
            None => Vec::new(),
        }
    }

    /// Palindromic coefficient sequence over `[low_degree, degree]`.
    pub fn is_symmetric(&self) -> bool {
        let c = self.coefficient_range();
        c.iter().eq(c.iter().rev())
    }

    /// Weakly rising then weakly falling over `[low_degree, degree]`,
    /// internal zeros included.
    pub fn is_unimodal(&self) -> Result<bool> {
        if self.terms.values().any(|c| c.is_negative()) {
            return Err(Error::NegativeCoefficient);
        }
        let c = self.coefficient_range();
        let mut i = 0;
        while i + 1 < c.len() && c[i] <= c[i + 1] {
            i += 1;
        }
        while i + 1 < c.len() && c[i] >= c[i + 1] {
            i += 1;
        }
        Ok(i + 1 >= c.len())
    }

    pub fn has_nonnegative_exponents(&self) -> bool {
        self.low_degree().is_none_or(|e| e >= 0)
    }
}

/// `[k]_{x²} = 1 + x² + ⋯ + x^{2(k−1)}`; zero for `k = 0`.
pub fn q_integer(k: usize) -> SignedPoly {
    SignedPoly::from_terms((0..k as i64).map(|j| (2 * j, 1)))
}

/// `[k]_{x²}! = ∏_{i=1}^{k} [i]_{x²}`; one for `k = 0`.
pub fn q_factorial(k: usize) -> SignedPoly {
    (1..=k).fold(SignedPoly::one(), |acc, i| &acc * &q_integer(i))
}

/// `[Σ parts]_{x²}! / ∏ [part]_{x²}!`.
pub fn gaussian_multinomial(parts: &[usize]) -> Result<SignedPoly> {
    let total = parts.iter().sum();
    parts
        .iter()
        .filter(|&&p| p > 1)
        .try_fold(q_factorial(total), |acc, &p| acc.exact_div(&q_factorial(p)))
}

/// `∏_{k=lo}^{hi} (1 − x^{2k})`; one when the range is empty.
pub fn one_minus_even_powers(lo: usize, hi: usize) -> SignedPoly {
    (lo..=hi).fold(SignedPoly::one(), |acc, k| {
        &acc * &SignedPoly::from_terms([(0, 1), (2 * k as i64, -1)])
    })
}

impl fmt::Display for SignedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            if e == 1 {
                f.write_str("x")?;
            } else {
                write!(f, "x^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SignedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedPoly({self})")
    }
}

impl Add for &SignedPoly {
    type Output = SignedPoly;

    fn add(self, rhs: &SignedPoly) -> SignedPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for SignedPoly {
    type Output = SignedPoly;

    fn add(mut self, rhs: SignedPoly) -> SignedPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&SignedPoly> for SignedPoly {
    fn add_assign(&mut self, rhs: &SignedPoly) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c.clone());
        }
    }
}

impl Neg for &SignedPoly {
    type Output = SignedPoly;

    fn neg(self) -> SignedPoly {
        SignedPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for SignedPoly {
    type Output = SignedPoly;

    fn neg(self) -> SignedPoly {
        -&self
    }
}

impl Sub for &SignedPoly {
    type Output = SignedPoly;

    fn sub(self, rhs: &SignedPoly) -> SignedPoly {
        self + &(-rhs)
    }
}

impl Sub for SignedPoly {
    type Output = SignedPoly;

    fn sub(self, rhs: SignedPoly) -> SignedPoly {
        &self - &rhs
    }
}

impl Mul for &SignedPoly {
    type Output = SignedPoly;

    fn mul(self, rhs: &SignedPoly) -> SignedPoly {
        let mut out = SignedPoly::zero();
        for (ea, ca) in self.terms() {
            for (eb, cb) in rhs.terms() {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Mul for SignedPoly {
    type Output = SignedPoly;

    fn mul(self, rhs: SignedPoly) -> SignedPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for SignedPoly {
    fn sum<I: Iterator<Item = SignedPoly>>(iter: I) -> Self {
        iter.fold(SignedPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

/// Lexicographic on the ascending term list; only used to sort reports.
impl PartialOrd for SignedPoly {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SignedPoly {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.terms().cmp(other.terms())
    }
}

struct Coeff<'a>(&'a BigInt);

impl Serialize for Coeff<'_> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => {
                let n: serde_json::Number = self.0.to_string().parse().map_err(serde::ser::Error::custom)?;
                n.serialize(s)
            }
        }
    }
}

#[derive(Serialize)]
struct TermsOut<'a> {
    terms: Vec<(i64, Coeff<'a>)>,
}

#[derive(Deserialize)]
struct TermsIn {
    terms: Vec<(i64, serde_json::Number)>,
}

/// `{"terms": [[exponent, coefficient], ...]}`, ascending exponents, exact integers.
impl Serialize for SignedPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TermsOut {
            terms: self.terms().map(|(e, c)| (e, Coeff(c))).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SignedPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = TermsIn::deserialize(d)?;
        let mut p = SignedPoly::zero();
        let mut last = None;
        for (e, n) in raw.terms {
            let c: BigInt = n
                .to_string()
                .parse()
                .map_err(|_| serde::de::Error::custom(format!("coefficient {n} is not an integer")))?;
            if c.is_zero() {
                return Err(serde::de::Error::custom("zero coefficient in term list"));
            }
            if last.is_some_and(|l| l >= e) {
                return Err(serde::de::Error::custom("exponents must be strictly ascending"));
            }
            last = Some(e);
            p.add_term(e, c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(terms: &[(i64, i64)]) -> SignedPoly {
        SignedPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&poly(&[(0, 1), (1, -1)]) + &poly(&[(1, 1)]), SignedPoly::one());
        let p = &SignedPoly::monomial(-1, 6) * &poly(&[(0, 1), (2, 1), (4, 1)]);
        assert_eq!(p, poly(&[(6, -1), (8, -1), (10, -1)]));
        assert!((&p * &SignedPoly::zero()).is_zero());
        assert_eq!(SignedPoly::monomial(0, 3), SignedPoly::zero());
    }

    #[test]
    fn rendering() {
        assert_eq!(poly(&[(6, -1), (8, -1), (10, -1)]).to_string(), "-x^6 - x^8 - x^10");
        assert_eq!(poly(&[(0, 1), (1, -1)]).to_string(), "1 - x");
        assert_eq!(SignedPoly::zero().to_string(), "0");
        assert_eq!(poly(&[(3, 1), (4, 1), (5, 2), (6, 1), (7, 1)]).to_string(), "x^3 + x^4 + 2x^5 + x^6 + x^7");
        assert_eq!(poly(&[(-3, 1), (-1, 1)]).to_string(), "x^-3 + x^-1");
        assert_eq!(poly(&[(0, -1)]).to_string(), "-1");
        assert_eq!(poly(&[(0, -5), (1, -3)]).to_string(), "-5 - 3x");
    }

    #[test]
    fn exact_division() {
        let a = poly(&[(0, 1), (2, 1), (4, 1)]);
        let b = poly(&[(0, 1), (2, 1)]);
        assert_eq!((&a * &b).exact_div(&a).unwrap(), b);
        assert_eq!(poly(&[(0, 1), (4, -1)]).exact_div(&poly(&[(0, 1), (2, -1)])).unwrap(), b);
        match poly(&[(0, 1), (1, 1)]).exact_div(&poly(&[(0, 1), (1, -1)])) {
            Err(Error::InexactDivision { remainder }) => assert!(!remainder.is_zero()),
            other => panic!("expected inexact division, got {other:?}"),
        }
        assert!(matches!(b.exact_div(&SignedPoly::zero()), Err(Error::DivisionByZero)));
        assert!(SignedPoly::zero().exact_div(&b).unwrap().is_zero());
        // Laurent shifts on both sides
        assert_eq!(b.shift(-3).exact_div(&a.shift(5)).map(|_| ()).is_err(), true);
        assert_eq!((&a * &b).shift(-3).exact_div(&a.shift(2)).unwrap(), b.shift(-5));
        // leading coefficient not divisible
        assert!(poly(&[(1, 1)]).exact_div(&poly(&[(1, 2)])).is_err());
    }

    #[test]
    fn q_integers() {
        assert!(q_integer(0).is_zero());
        assert_eq!(q_integer(1), SignedPoly::one());
        assert_eq!(q_integer(3), poly(&[(0, 1), (2, 1), (4, 1)]));
        assert_eq!(q_factorial(0), SignedPoly::one());
    }

    #[test]
    fn multinomials() {
        assert_eq!(gaussian_multinomial(&[]).unwrap(), SignedPoly::one());
        assert_eq!(gaussian_multinomial(&[1, 1]).unwrap(), poly(&[(0, 1), (2, 1)]));
        // (1+x²)(1+x²+x⁴) = 1 + 2x² + 2x⁴ + x⁶
        assert_eq!(gaussian_multinomial(&[1, 1, 1]).unwrap(), poly(&[(0, 1), (2, 2), (4, 2), (6, 1)]));
        assert_eq!(gaussian_multinomial(&[0, 3]).unwrap(), SignedPoly::one());
    }

    /// Every composition of every total up to 8.
    fn compositions(total: usize) -> Vec<Vec<usize>> {
        if total == 0 {
            return vec![vec![]];
        }
        (1..=total)
            .flat_map(|first| {
                compositions(total - first).into_iter().map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
            })
            .collect()
    }

    #[test]
    fn multinomials_are_polynomials() {
        for total in 0..=8 {
            for parts in compositions(total) {
                let g = gaussian_multinomial(&parts).expect("q-multinomial must divide exactly");
                assert!(g.terms().all(|(e, c)| e >= 0 && c.is_positive()));
                let fact = |k: usize| (1..=k).map(BigInt::from).product::<BigInt>();
                let expect = parts.iter().fold(fact(total), |acc, &p| acc / fact(p));
                assert_eq!(g.eval_at_one(), expect, "{parts:?}");
                let mut rev = parts.clone();
                rev.reverse();
                assert_eq!(gaussian_multinomial(&rev).unwrap(), g);
                let mut with_zero = parts.clone();
                with_zero.push(0);
                assert_eq!(gaussian_multinomial(&with_zero).unwrap(), g);
            }
        }
    }

    #[test]
    fn reciprocal() {
        assert_eq!(SignedPoly::one().reciprocal_substitute(), SignedPoly::one());
        assert_eq!(poly(&[(1, 1), (3, 1)]).reciprocal_substitute(), poly(&[(-1, 1), (-3, 1)]));
    }

    #[test]
    fn symmetry_and_unimodality() {
        let l4 = poly(&[(0, 1), (1, 8), (2, 6), (3, 8), (4, 1)]);
        assert!(l4.is_symmetric());
        assert!(!l4.is_unimodal().unwrap());
        let l3 = poly(&[(0, 1), (1, 4), (2, 1)]);
        assert!(l3.is_symmetric() && l3.is_unimodal().unwrap());
        assert!(SignedPoly::one().is_symmetric() && SignedPoly::one().is_unimodal().unwrap());
        // internal zero breaks unimodality
        assert!(!poly(&[(0, 1), (2, 1)]).is_unimodal().unwrap());
        assert!(poly(&[(0, 1), (1, -1)]).is_unimodal().is_err());
        assert!(!poly(&[(0, 1), (1, 2)]).is_symmetric());
        assert!(poly(&[(3, 2), (5, 2)]).is_symmetric());
    }

    #[test]
    fn json_shape() {
        let p = poly(&[(6, -1), (8, -1), (10, -1)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"terms":[[6,-1],[8,-1],[10,-1]]}"#);
        let big = SignedPoly::monomial(BigInt::from(10).pow(30), 2);
        let s = serde_json::to_string(&big).unwrap();
        assert_eq!(s, r#"{"terms":[[2,1000000000000000000000000000000]]}"#);
        assert_eq!(serde_json::from_str::<SignedPoly>(&s).unwrap(), big);
        assert!(serde_json::from_str::<SignedPoly>(r#"{"terms":[[1,0]]}"#).is_err());
        assert!(serde_json::from_str::<SignedPoly>(r#"{"terms":[[2,1],[1,1]]}"#).is_err());
        assert!(serde_json::from_str::<SignedPoly>(r#"{"terms":[[1,1.5]]}"#).is_err());
    }

    fn arb_poly() -> impl Strategy<Value = SignedPoly> {
        proptest::collection::vec((-6i64..8, -5i64..6), 0..6).prop_map(SignedPoly::from_terms)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn division_inverts_multiplication(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
        }

        #[test]
        fn reciprocal_is_homomorphic_involution(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!(a.reciprocal_substitute().reciprocal_substitute(), a.clone());
            prop_assert_eq!((&a * &b).reciprocal_substitute(), &a.reciprocal_substitute() * &b.reciprocal_substitute());
            prop_assert_eq!((&a + &b).reciprocal_substitute(), &a.reciprocal_substitute() + &b.reciprocal_substitute());
        }

        #[test]
        fn json_round_trip(a in arb_poly()) {
            let s = serde_json::to_string(&a).unwrap();
            let back: SignedPoly = serde_json::from_str(&s).unwrap();
            prop_assert_eq!(back.to_string(), a.to_string());
        }
    }
}
