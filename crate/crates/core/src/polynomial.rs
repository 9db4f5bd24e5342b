//! The Frobenius polynomial algebra `P_n(A)`, the action of `S_n` and the
//! Frobenius divided difference operators `∂_i`.
//!
//! Monomials are kept in the normal order `a x_1^{k_1} ⋯ x_n^{k_n}`, with
//! `a ∈ B_A^{⊗n}`. The dot `x_j` has the parity `p` of the trace, so
//! `x_i x_j = (-1)^p x_j x_i` for `i ≠ j` and `a x_i = (-1)^{p|a|} x_i a`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::frobenius::{FrobeniusSuperalgebra, TensorElement, TensorWord};
use crate::linear::{int, signed, Element, Parity, Scalar};
use crate::nilcoxeter::check_strands;
use crate::presentation::{self, Gen, GeneratedAlgebra, Relation};
use crate::report::Report;
use crate::textio::print;
use crate::Error;

/// Basis monomial `a x^k`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PolKey {
    pub word: TensorWord,
    pub exps: Vec<u32>,
}

impl PolKey {
    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }
}

pub type PolElement = Element<PolKey>;

/// All exponent vectors of length `n` with total degree at most `cap`, sorted.
pub fn exponent_vectors(n: usize, cap: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for k in 0..=left {
            cur.push(k);
            rec(n, left - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, cap, &mut Vec::with_capacity(n), &mut out);
    out
}

/// `(-1)^{p Σ_{i>j} k_i l_j}`: the sign of sorting `x^k x^l` into normal order.
pub(crate) fn sort_sign(p: Parity, k: &[u32], l: &[u32]) -> bool {
    if !p.is_odd() {
        return false;
    }
    let mut acc = 0u32;
    let mut higher = 0u32;
    for j in (0..k.len()).rev() {
        acc += higher * l[j];
        higher += k[j];
    }
    acc % 2 == 1
}

/// `(a x^k)(b x^l)` in normal order.
pub(crate) fn monomial_mul(alg: &FrobeniusSuperalgebra, x: &PolKey, y: &PolKey) -> PolElement {
    let p = alg.trace_parity();
    let k_total: u32 = x.degree();
    let mut negative = p.times(k_total).koszul(alg.word_parity(&y.word));
    negative ^= sort_sign(p, &x.exps, &y.exps);
    let exps: Vec<u32> = x.exps.iter().zip(&y.exps).map(|(a, b)| a + b).collect();
    let mut out = Element::zero();
    for (w, c) in &alg.word_mul(&x.word, &y.word) {
        out.add_term(
            PolKey {
                word: w.clone(),
                exps: exps.clone(),
            },
            signed(c.clone(), negative),
        );
    }
    out
}

#[derive(Clone, Debug)]
pub struct Polynomial {
    alg: FrobeniusSuperalgebra,
    n: usize,
}

impl Polynomial {
    pub fn new(alg: FrobeniusSuperalgebra, n: usize) -> Result<Self, Error> {
        check_strands(n)?;
        Ok(Polynomial { alg, n })
    }

    pub fn algebra(&self) -> &FrobeniusSuperalgebra {
        &self.alg
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn key(&self, word: TensorWord, exps: Vec<u32>) -> PolKey {
        PolKey { word, exps }
    }

    pub fn one(&self) -> PolElement {
        Element::basis(self.key(TensorWord::constant(self.n, self.alg.unit()), vec![0; self.n]))
    }

    /// `x^k` with all-unit tokens.
    pub fn x_power(&self, exps: &[u32]) -> PolElement {
        Element::basis(self.key(TensorWord::constant(self.n, self.alg.unit()), exps.to_vec()))
    }

    pub fn x(&self, j: usize) -> PolElement {
        let mut exps = vec![0; self.n];
        exps[j - 1] = 1;
        self.x_power(&exps)
    }

    pub fn tensor(&self, t: &TensorElement) -> PolElement {
        t.map_keys(|w| self.key(w.clone(), vec![0; self.n]))
    }

    pub fn token(&self, strand: usize, index: usize) -> PolElement {
        self.tensor(&self.alg.on_strand(self.n, strand, &Element::basis(index)))
    }

    pub fn mul_keys(&self, x: &PolKey, y: &PolKey) -> PolElement {
        monomial_mul(&self.alg, x, y)
    }

    pub fn mul(&self, a: &PolElement, b: &PolElement) -> PolElement {
        let mut out = Element::zero();
        for (x, ca) in a {
            for (y, cb) in b {
                out.add_scaled(&(ca * cb), &self.mul_keys(x, y));
            }
        }
        out
    }

    pub fn try_mul(&self, a: &PolElement, b: &PolElement) -> Result<PolElement, Error> {
        for k in a.keys().chain(b.keys()) {
            self.check_key(k)?;
        }
        Ok(self.mul(a, b))
    }

    pub fn check_key(&self, k: &PolKey) -> Result<(), Error> {
        if k.word.len() != self.n || k.exps.len() != self.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: k.word.len().max(k.exps.len()),
            });
        }
        if let Some(&bad) = k.word.entries().iter().find(|&&e| e >= self.alg.dim()) {
            return Err(Error::AlgebraMismatch(format!("basis index {bad} in {}", self.alg.name())));
        }
        Ok(())
    }

    /// Parity of a monomial: `|a| + |k| p`.
    pub fn parity(&self, k: &PolKey) -> Parity {
        self.alg.word_parity(&k.word) + self.alg.trace_parity().times(k.degree())
    }

    /// All monomials of total degree at most `cap`.
    pub fn monomials(&self, cap: u32) -> Vec<PolKey> {
        let exps = exponent_vectors(self.n, cap);
        TensorWord::all(self.n, self.alg.dim())
            .into_iter()
            .flat_map(|w| exps.iter().map(move |k| PolKey { word: w.clone(), exps: k.clone() }))
            .collect()
    }

    fn check_crossing(&self, i: usize) -> Result<(), Error> {
        if i == 0 || i >= self.n {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.n - 1,
            });
        }
        Ok(())
    }

    /// `s_i` on one monomial.
    pub fn s_key(&self, i: usize, k: &PolKey) -> (PolKey, bool) {
        let (word, mut negative) = self.alg.swap_word(i, &k.word);
        let mut exps = k.exps.clone();
        exps.swap(i - 1, i);
        if self.alg.trace_parity().is_odd() {
            negative ^= (k.exps[i - 1] * k.exps[i]) % 2 == 1;
        }
        (PolKey { word, exps }, negative)
    }

    pub fn s_action(&self, i: usize, f: &PolElement) -> Result<PolElement, Error> {
        self.check_crossing(i)?;
        let mut out = Element::zero();
        for (k, c) in f {
            let (k2, neg) = self.s_key(i, k);
            out.add_term(k2, signed(c.clone(), neg));
        }
        Ok(out)
    }

    /// `τ_i` as a polynomial.
    pub fn tau(&self, i: usize) -> Result<PolElement, Error> {
        Ok(self.tensor(&self.alg.tau_at(self.n, i)?))
    }

    /// `∂_i(x_j)`.
    fn ddiff_x(&self, i: usize, j: usize) -> Result<PolElement, Error> {
        Ok(if j == i + 1 {
            self.tau(i)?
        } else if j == i {
            let sign = if self.alg.trace_parity().is_odd() { int(1) } else { int(-1) };
            self.tau(i)?.scale(&sign)
        } else {
            Element::zero()
        })
    }

    /// `∂_i(x^k)` by peeling the leftmost dot.
    fn ddiff_power(&self, i: usize, exps: &[u32]) -> Result<PolElement, Error> {
        let Some(j) = exps.iter().position(|&e| e > 0) else {
            return Ok(Element::zero());
        };
        let mut rest = exps.to_vec();
        rest[j] -= 1;
        let j = j + 1;
        let target = if j == i {
            i + 1
        } else if j == i + 1 {
            i
        } else {
            j
        };
        let head = self.mul(&self.ddiff_x(i, j)?, &self.x_power(&rest));
        let tail = self.mul(&self.x(target), &self.ddiff_power(i, &rest)?);
        Ok(&head + &tail)
    }

    /// The Frobenius divided difference operator, from its values on
    /// generators and the twisted Leibniz rule `∂(fg) = ∂(f)g + s(f)∂(g)`.
    /// On `a x^k` the token block is peeled first, then the dots left to
    /// right.
    pub fn ddiff(&self, i: usize, f: &PolElement) -> Result<PolElement, Error> {
        self.check_crossing(i)?;
        if !self.alg.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let mut out = Element::zero();
        for (k, c) in f {
            let (word, neg) = self.alg.swap_word(i, &k.word);
            let head = Element::term(self.key(word, vec![0; self.n]), signed(c.clone(), neg));
            out += &self.mul(&head, &self.ddiff_power(i, &k.exps)?);
        }
        Ok(out)
    }

    /// `∂_i(a p) = τ_i a (p - s_i p)/(x_{i+1} - x_i)` for an even trace.
    pub fn ddiff_closed_even(&self, i: usize, f: &PolElement) -> Result<PolElement, Error> {
        self.check_crossing(i)?;
        if self.alg.trace_parity().is_odd() {
            return Err(Error::OddTraceParity);
        }
        let tau = self.tau(i)?;
        let mut out = Element::zero();
        for (k, c) in f {
            let mut swapped = k.exps.clone();
            swapped.swap(i - 1, i);
            let mut numerator: BTreeMap<Vec<u32>, Scalar> = BTreeMap::new();
            *numerator.entry(k.exps.clone()).or_insert_with(Scalar::zero) += int(1);
            *numerator.entry(swapped).or_insert_with(Scalar::zero) -= int(1);
            numerator.retain(|_, v| !v.is_zero());
            let quotient = divide_by_difference(numerator, i)?;
            let q: PolElement = quotient
                .into_iter()
                .map(|(e, v)| (self.key(TensorWord::constant(self.n, self.alg.unit()), e), v))
                .collect();
            let a = Element::term(self.key(k.word.clone(), vec![0; self.n]), c.clone());
            out += &self.mul(&self.mul(&tau, &a), &q);
        }
        Ok(out)
    }

    pub fn format(&self, e: &PolElement) -> String {
        print::format_linear(e, |k| {
            let mut f = print::word_factors(&self.alg, &k.word);
            f.extend(print::power_factors("x", &k.exps));
            f
        })
    }

    pub fn relations(&self) -> Vec<Relation> {
        let mut out = presentation::token_relations(&self.alg, self.n);
        out.extend(presentation::dot_relations(&self.alg, self.n));
        out
    }

    pub fn verify_relations(&self) -> Report {
        let mut report = Report::new(format!("polynomial relations, A = {}, n = {}", self.alg.name(), self.n));
        presentation::check_relations(self, &self.relations(), &mut report);
        report
    }
}

/// Exact division of a commutative polynomial by `x_{i+1} - x_i`, reducing
/// the term with the highest power of `x_{i+1}` first.
fn divide_by_difference(mut num: BTreeMap<Vec<u32>, Scalar>, i: usize) -> Result<BTreeMap<Vec<u32>, Scalar>, Error> {
    let (lo, hi) = (i - 1, i);
    let mut quotient = BTreeMap::new();
    while let Some(lead) = num.keys().max_by(|a, b| (a[hi], a[lo], *a).cmp(&(b[hi], b[lo], *b))).cloned() {
        if lead[hi] == 0 {
            return Err(Error::NonDivisible);
        }
        let c = num.remove(&lead).unwrap();
        let mut q = lead.clone();
        q[hi] -= 1;
        let mut shifted = q.clone();
        shifted[lo] += 1;
        // subtracting c q (x_{i+1} - x_i) removes `lead` and adds c q x_i
        let entry = num.entry(shifted.clone()).or_insert_with(Scalar::zero);
        *entry += &c;
        if entry.is_zero() {
            num.remove(&shifted);
        }
        *quotient.entry(q).or_insert_with(Scalar::zero) += c;
    }
    quotient.retain(|_, v: &mut Scalar| !v.is_zero());
    Ok(quotient)
}

impl GeneratedAlgebra for Polynomial {
    type Key = PolKey;

    fn strands(&self) -> usize {
        self.n
    }

    fn one(&self) -> PolElement {
        Polynomial::one(self)
    }

    fn generator(&self, g: &Gen) -> Option<PolElement> {
        match *g {
            Gen::Token { strand, index } if (1..=self.n).contains(&strand) && index < self.alg.dim() => {
                Some(self.token(strand, index))
            }
            Gen::X(j) if (1..=self.n).contains(&j) => Some(self.x(j)),
            _ => None,
        }
    }

    fn mul(&self, a: &PolElement, b: &PolElement) -> PolElement {
        Polynomial::mul(self, a, b)
    }

    fn format(&self, e: &PolElement) -> String {
        Polynomial::format(self, e)
    }

    fn labels(&self) -> Vec<String> {
        self.alg.labels().to_vec()
    }
}
