//! Exact scalars, parities and finitely supported linear combinations.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar, always kept in lowest terms with a positive denominator.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Checked division; `None` when the divisor is zero.
pub fn checked_div(a: &Scalar, b: &Scalar) -> Option<Scalar> {
    if b.is_zero() {
        None
    } else {
        Some(a / b)
    }
}

/// Parses `"p"`, `"-p"` or `"p/q"`.
pub fn parse_scalar(s: &str) -> Option<Scalar> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(BigRational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

/// `p` or `p/q`; never a decimal.
pub fn format_scalar(c: &Scalar) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Element of Z/2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    #[default]
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(odd: bool) -> Self {
        if odd {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn bit(self) -> u32 {
        self as u32
    }

    /// The sign `(-1)^(self * other)`, returned as `true` when negative.
    pub fn koszul(self, other: Parity) -> bool {
        self.is_odd() && other.is_odd()
    }

    pub fn times(self, k: u32) -> Parity {
        Parity::from_bit(self.is_odd() && k % 2 == 1)
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.is_odd() != rhs.is_odd())
    }
}

impl AddAssign for Parity {
    fn add_assign(&mut self, rhs: Parity) {
        *self = *self + rhs;
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// A finitely supported map from keys to nonzero scalars.
///
/// No stored coefficient is ever zero, so structural equality is equality of
/// elements.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element<K: Ord> {
    terms: BTreeMap<K, Scalar>,
}

impl<K: Ord> Default for Element<K> {
    fn default() -> Self {
        Element {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> Element<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(key: K, coeff: Scalar) -> Self {
        let mut e = Self::zero();
        e.add_term(key, coeff);
        e
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, Scalar::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, Scalar> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, Scalar> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, key: K, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Adds `c * other` in place.
    pub fn add_scaled(&mut self, c: &Scalar, other: &Element<K>) {
        if c.is_zero() {
            return;
        }
        for (k, v) in other.iter() {
            self.add_term(k.clone(), c * v);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Element {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Applies a key-level linear map and sums the images.
    pub fn map_linear<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> Element<L>) -> Element<L> {
        let mut out = Element::zero();
        for (k, c) in self.iter() {
            out.add_scaled(c, &f(k));
        }
        out
    }

    /// Relabels keys; colliding keys have their coefficients summed.
    pub fn map_keys<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> L) -> Element<L> {
        let mut out = Element::zero();
        for (k, c) in self.iter() {
            out.add_term(f(k), c.clone());
        }
        out
    }

    pub fn filter(&self, mut keep: impl FnMut(&K) -> bool) -> Self {
        Element {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }
}

impl<K: Ord + Clone> FromIterator<(K, Scalar)> for Element<K> {
    fn from_iter<I: IntoIterator<Item = (K, Scalar)>>(iter: I) -> Self {
        let mut e = Element::zero();
        for (k, c) in iter {
            e.add_term(k, c);
        }
        e
    }
}

impl<'a, K: Ord + Clone> IntoIterator for &'a Element<K> {
    type Item = (&'a K, &'a Scalar);
    type IntoIter = btree_map::Iter<'a, K, Scalar>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + Clone> Add for &Element<K> {
    type Output = Element<K>;
    fn add(self, rhs: &Element<K>) -> Element<K> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Clone> Add for Element<K> {
    type Output = Element<K>;
    fn add(mut self, rhs: Element<K>) -> Element<K> {
        self += &rhs;
        self
    }
}

impl<K: Ord + Clone> AddAssign<&Element<K>> for Element<K> {
    fn add_assign(&mut self, rhs: &Element<K>) {
        for (k, v) in rhs.iter() {
            self.add_term(k.clone(), v.clone());
        }
    }
}

impl<K: Ord + Clone> Sub for &Element<K> {
    type Output = Element<K>;
    fn sub(self, rhs: &Element<K>) -> Element<K> {
        let mut out = self.clone();
        for (k, v) in rhs.iter() {
            out.add_term(k.clone(), -v);
        }
        out
    }
}

impl<K: Ord + Clone> Sub for Element<K> {
    type Output = Element<K>;
    fn sub(self, rhs: Element<K>) -> Element<K> {
        &self - &rhs
    }
}

impl<K: Ord + Clone> Neg for &Element<K> {
    type Output = Element<K>;
    fn neg(self) -> Element<K> {
        Element {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }
}

impl<K: Ord + Clone> Neg for Element<K> {
    type Output = Element<K>;
    fn neg(self) -> Element<K> {
        -&self
    }
}

impl<K: Ord + Clone> Mul<&Element<K>> for &Scalar {
    type Output = Element<K>;
    fn mul(self, rhs: &Element<K>) -> Element<K> {
        rhs.scale(self)
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for Element<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, v) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({})*{:?}", format_scalar(v), k)?;
        }
        Ok(())
    }
}

/// Returns `-c` when `negative`, else `c`.
pub fn signed(c: Scalar, negative: bool) -> Scalar {
    if negative {
        -c
    } else {
        c
    }
}

pub fn sign_scalar(negative: bool) -> Scalar {
    signed(Scalar::one(), negative)
}

/// Dense square matrix over the rationals, row-major.
pub type Matrix = Vec<Vec<Scalar>>;

pub fn identity_matrix(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect())
        .collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    let inner = b.len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut s = Scalar::zero();
                    for k in 0..inner {
                        if !a[i][k].is_zero() && !b[k][j].is_zero() {
                            s += &a[i][k] * &b[k][j];
                        }
                    }
                    s
                })
                .collect()
        })
        .collect()
}

pub fn transpose(a: &Matrix) -> Matrix {
    let m = a.first().map_or(0, |r| r.len());
    (0..m).map(|j| a.iter().map(|row| row[j].clone()).collect()).collect()
}

/// Exact Gauss-Jordan inversion. `None` if the matrix is singular.
pub fn invert(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let mut left: Matrix = a.to_vec();
    let mut right = identity_matrix(n);
    for col in 0..n {
        let pivot = (col..n).find(|&r| !left[r][col].is_zero())?;
        left.swap(col, pivot);
        right.swap(col, pivot);
        let inv = Scalar::one() / &left[col][col];
        for j in 0..n {
            left[col][j] = &left[col][j] * &inv;
            right[col][j] = &right[col][j] * &inv;
        }
        for r in 0..n {
            if r == col || left[r][col].is_zero() {
                continue;
            }
            let factor = left[r][col].clone();
            for j in 0..n {
                let dl = &factor * &left[col][j];
                left[r][j] -= dl;
                let dr = &factor * &right[col][j];
                right[r][j] -= dr;
            }
        }
    }
    Some(right)
}

pub fn is_negative(c: &Scalar) -> bool {
    c.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn e(pairs: &[(u8, Scalar)]) -> Element<u8> {
        pairs.iter().cloned().collect()
    }

    #[test]
    fn like_terms_combine() {
        let a = e(&[(1, ratio(1, 2))]);
        assert_eq!(&a + &a, e(&[(1, int(1))]));
    }

    #[test]
    fn cancellation_prunes() {
        let a = e(&[(1, int(1))]);
        let b = e(&[(1, int(-1))]);
        let s = &a + &b;
        assert!(s.is_zero());
        assert_eq!(s.len(), 0);
        assert!((&a + &(-&a)).is_zero());
        assert!((&a + &a.scale(&int(-1))).is_zero());
    }

    #[test]
    fn disjoint_support() {
        let s = &e(&[(1, int(2))]) + &e(&[(2, int(3))]);
        assert_eq!(s, e(&[(1, int(2)), (2, int(3))]));
    }

    #[test]
    fn scaling() {
        assert!(e(&[(1, int(5))]).scale(&int(0)).is_zero());
        let a = e(&[(1, int(2)), (3, ratio(-7, 3))]);
        assert_eq!(a.scale(&int(1)), a);
        assert_eq!(e(&[(1, int(2))]).scale(&ratio(1, 2)), e(&[(1, int(1))]));
    }

    #[test]
    fn is_zero_cases() {
        assert!(Element::<u8>::zero().is_zero());
        assert!(!e(&[(1, int(1))]).is_zero());
    }

    #[test]
    fn scalars_lowest_terms() {
        let c = ratio(6, -4);
        assert_eq!(c.numer(), &BigInt::from(-3));
        assert_eq!(c.denom(), &BigInt::from(2));
        assert_eq!(format_scalar(&c), "-3/2");
        assert_eq!(parse_scalar("6/-4"), Some(c));
        assert_eq!(parse_scalar("1/0"), None);
        assert!(checked_div(&int(1), &int(0)).is_none());
    }

    #[test]
    fn parity_arithmetic() {
        assert_eq!(Parity::Odd + Parity::Odd, Parity::Even);
        assert_eq!(Parity::Even + Parity::Odd, Parity::Odd);
        assert_eq!(Parity::Odd.times(3), Parity::Odd);
        assert_eq!(Parity::Odd.times(2), Parity::Even);
        assert!(Parity::Odd.koszul(Parity::Odd));
        assert!(!Parity::Odd.koszul(Parity::Even));
    }

    #[test]
    fn inversion_exact() {
        let m = vec![vec![int(2), int(1)], vec![int(1), int(1)]];
        let inv = invert(&m).unwrap();
        assert_eq!(mat_mul(&m, &inv), identity_matrix(2));
        let singular = vec![vec![int(1), int(0)], vec![int(0), int(0)]];
        assert!(invert(&singular).is_none());
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        (-6i64..=6, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
    }

    fn arb_element() -> impl Strategy<Value = Element<u8>> {
        proptest::collection::vec((0u8..6, arb_scalar()), 0..6)
            .prop_map(|v| v.into_iter().collect())
    }

    proptest! {
        #[test]
        fn addition_is_commutative(a in arb_element(), b in arb_element()) {
            prop_assert_eq!(&a + &b, &b + &a);
        }

        #[test]
        fn addition_is_associative(a in arb_element(), b in arb_element(), c in arb_element()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        }

        #[test]
        fn scaling_distributes(a in arb_element(), b in arb_element(), s in arb_scalar(), t in arb_scalar()) {
            prop_assert_eq!((&a + &b).scale(&s), &a.scale(&s) + &b.scale(&s));
            prop_assert_eq!(a.scale(&(&s + &t)), &a.scale(&s) + &a.scale(&t));
            prop_assert_eq!(a.scale(&s).scale(&t), a.scale(&(&s * &t)));
        }

        #[test]
        fn canonical_form_has_no_zeros(a in arb_element(), b in arb_element()) {
            let s = &a - &b;
            prop_assert!(s.iter().all(|(_, c)| !c.is_zero()));
            prop_assert!((&s - &s).is_zero());
        }
    }
}
