//! The Frobenius nilHecke algebra `NH_n(A)` on the basis `a x^k u_w`.
//!
//! A product `e · (b x^l u_v)` is computed by right multiplication with the
//! generators of the right factor in order: the token block `b`, the dots
//! `x_1^{l_1} ⋯ x_n^{l_n}`, then the crossings of the canonical reduced word
//! of `v`. The three primitive moves are
//!
//! * `(a x^k u_w) b = (-1)^{p|k||b|} a w(b) x^k u_w`,
//! * `(a x^k u_w) u_i = a x^k u_{w s_i}` if `ℓ(w s_i) > ℓ(w)`, else zero,
//! * `(a x^k u_w) x_j = a x^k (u_w x_j)`, where `u_w x_j` is expanded by
//!   moving `x_j` through the last crossing of `w` with the dot-crossing
//!   relations:
//!   `u_w x_j = (u_{w'} x_{s_i(j)}) u_i + ε w'(τ_i) u_{w'}` with `w = w' s_i`,
//!   `ε = 1` for `j = i + 1`, `ε = -(-1)^p` for `j = i` and `ε = 0` otherwise.
//!
//! The recursion for `u_w x_j` terminates because `ℓ(w')` < `ℓ(w)`, and every
//! term it produces has at most one dot, so the expansion is a finite sum in
//! normal form. Expansions are cached per `(w, j)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::RwLock;

use num_traits::Zero;
use serde::Serialize;

use crate::frobenius::{AlgElement, AlgebraData, FrobeniusSuperalgebra, TensorElement, TensorWord};
use crate::linear::{int, sign_scalar, signed, Element, Parity};
use crate::nilcoxeter::{check_strands, NcElement};
use crate::polynomial::{exponent_vectors, monomial_mul, PolElement, PolKey, Polynomial};
use crate::presentation::{self, Gen, GeneratedAlgebra, Mapped, Relation};
use crate::report::Report;
use crate::symgroup::Permutation;
use crate::textio::print;
use crate::Error;

/// Basis monomial `a x_1^{k_1} ⋯ x_n^{k_n} u_w`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NilHeckeKey {
    pub word: TensorWord,
    pub exps: Vec<u32>,
    pub perm: Permutation,
}

impl NilHeckeKey {
    pub fn pol_key(&self) -> PolKey {
        PolKey {
            word: self.word.clone(),
            exps: self.exps.clone(),
        }
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }
}

pub type NhElement = Element<NilHeckeKey>;

/// Target of the action on `P_n(A) ⊗ N_n(k)`: pairs `f ⊗ u_w`.
pub type PolNcElement = Element<(PolKey, Permutation)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GradedDegree {
    pub z_degree: i64,
    pub parity: Parity,
}

pub struct NilHecke {
    pol: Polynomial,
    n: usize,
    taus: Vec<TensorElement>,
    ux_cache: RwLock<HashMap<(Permutation, usize), NhElement>>,
}

impl Clone for NilHecke {
    fn clone(&self) -> Self {
        NilHecke {
            pol: self.pol.clone(),
            n: self.n,
            taus: self.taus.clone(),
            ux_cache: RwLock::new(self.ux_cache.read().unwrap().clone()),
        }
    }
}

impl fmt::Debug for NilHecke {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NilHecke").field("algebra", &self.algebra().name()).field("n", &self.n).finish()
    }
}

impl NilHecke {
    /// Requires a symmetric `A`.
    pub fn new(alg: FrobeniusSuperalgebra, n: usize) -> Result<Self, Error> {
        check_strands(n)?;
        if !alg.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let taus = (1..n).map(|i| alg.tau_at(n, i)).collect::<Result<Vec<_>, _>>()?;
        Ok(NilHecke {
            pol: Polynomial::new(alg, n)?,
            n,
            taus,
            ux_cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn algebra(&self) -> &FrobeniusSuperalgebra {
        self.pol.algebra()
    }

    pub fn polynomial(&self) -> &Polynomial {
        &self.pol
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn p(&self) -> Parity {
        self.algebra().trace_parity()
    }

    fn unit_word(&self) -> TensorWord {
        TensorWord::constant(self.n, self.algebra().unit())
    }

    pub fn key(&self, word: TensorWord, exps: Vec<u32>, perm: Permutation) -> NilHeckeKey {
        NilHeckeKey { word, exps, perm }
    }

    pub fn one(&self) -> NhElement {
        Element::basis(self.key(self.unit_word(), vec![0; self.n], Permutation::identity(self.n)))
    }

    pub fn x(&self, j: usize) -> NhElement {
        let mut exps = vec![0; self.n];
        exps[j - 1] = 1;
        Element::basis(self.key(self.unit_word(), exps, Permutation::identity(self.n)))
    }

    pub fn u_of(&self, w: &Permutation) -> NhElement {
        Element::basis(self.key(self.unit_word(), vec![0; self.n], w.clone()))
    }

    pub fn u(&self, i: usize) -> NhElement {
        self.u_of(&Permutation::simple(self.n, i))
    }

    pub fn tensor(&self, t: &TensorElement) -> NhElement {
        t.map_keys(|w| self.key(w.clone(), vec![0; self.n], Permutation::identity(self.n)))
    }

    pub fn token(&self, strand: usize, index: usize) -> NhElement {
        self.tensor(&self.algebra().on_strand(self.n, strand, &Element::basis(index)))
    }

    /// `τ_i`.
    pub fn tau(&self, i: usize) -> NhElement {
        self.tensor(&self.taus[i - 1])
    }

    /// The natural map `P_n(A) → NH_n(A)`.
    pub fn embed_pol(&self, f: &PolElement) -> NhElement {
        f.map_keys(|k| self.key(k.word.clone(), k.exps.clone(), Permutation::identity(self.n)))
    }

    /// The natural map `N_n(A) → NH_n(A)`; restricts to `N_n(k)` on
    /// crossing monomials.
    pub fn embed_nc(&self, z: &NcElement) -> NhElement {
        z.map_keys(|k| self.key(k.word.clone(), vec![0; self.n], k.perm.clone()))
    }

    fn right_word(&self, e: &NhElement, b: &TensorWord) -> NhElement {
        let alg = self.algebra();
        let p = self.p();
        let mut out = Element::zero();
        for (k, c) in e {
            let (moved, mut negative) = alg.permute_word(&k.perm, b);
            negative ^= p.times(k.degree()).koszul(alg.word_parity(&moved));
            for (w, d) in &alg.word_mul(&k.word, &moved) {
                out.add_term(self.key(w.clone(), k.exps.clone(), k.perm.clone()), signed(c * d, negative));
            }
        }
        out
    }

    fn right_u(&self, e: &NhElement, i: usize) -> NhElement {
        let mut out = Element::zero();
        for (k, c) in e {
            if !k.perm.has_right_descent(i) {
                out.add_term(self.key(k.word.clone(), k.exps.clone(), k.perm.mul_simple_right(i)), c.clone());
            }
        }
        out
    }

    /// `u_w x_j` in normal form.
    fn u_times_x(&self, w: &Permutation, j: usize) -> NhElement {
        if w.is_identity() {
            return self.x(j);
        }
        if let Some(hit) = self.ux_cache.read().unwrap().get(&(w.clone(), j)) {
            return hit.clone();
        }
        let i = *w.reduced_word().last().unwrap();
        let shorter = w.mul_simple_right(i);
        let moved_j = if j == i {
            i + 1
        } else if j == i + 1 {
            i
        } else {
            j
        };
        let mut out = self.right_u(&self.u_times_x(&shorter, moved_j), i);
        let eps = if j == i + 1 {
            int(1)
        } else if j == i {
            -sign_scalar(self.p().is_odd())
        } else {
            int(0)
        };
        if !eps.is_zero() {
            for (word, c) in &self.taus[i - 1] {
                let (moved, negative) = self.algebra().permute_word(&shorter, word);
                out.add_term(self.key(moved, vec![0; self.n], shorter.clone()), signed(&eps * c, negative));
            }
        }
        self.ux_cache.write().unwrap().insert((w.clone(), j), out.clone());
        out
    }

    fn right_x(&self, e: &NhElement, j: usize) -> NhElement {
        let alg = self.algebra();
        let mut out = Element::zero();
        let mut by_perm: BTreeMap<&Permutation, NhElement> = BTreeMap::new();
        for (k, c) in e {
            let expansion = by_perm.entry(&k.perm).or_insert_with(|| self.u_times_x(&k.perm, j));
            let left = k.pol_key();
            for (t, d) in expansion.iter() {
                for (m, f) in &monomial_mul(alg, &left, &t.pol_key()) {
                    out.add_term(self.key(m.word.clone(), m.exps.clone(), t.perm.clone()), c * d * f);
                }
            }
        }
        out
    }

    /// Right multiplication by one basis monomial.
    pub fn mul_by_key(&self, e: &NhElement, k: &NilHeckeKey) -> NhElement {
        let mut cur = if k.word.is_constant(self.algebra().unit()) { e.clone() } else { self.right_word(e, &k.word) };
        for (j, &power) in k.exps.iter().enumerate() {
            for _ in 0..power {
                cur = self.right_x(&cur, j + 1);
            }
        }
        for i in k.perm.reduced_word() {
            cur = self.right_u(&cur, i);
        }
        cur
    }

    pub fn mul(&self, a: &NhElement, b: &NhElement) -> NhElement {
        let mut out = Element::zero();
        for (k, c) in b {
            out.add_scaled(c, &self.mul_by_key(a, k));
        }
        out
    }

    pub fn mul_keys(&self, x: &NilHeckeKey, y: &NilHeckeKey) -> NhElement {
        self.mul_by_key(&Element::basis(x.clone()), y)
    }

    pub fn try_mul(&self, a: &NhElement, b: &NhElement) -> Result<NhElement, Error> {
        for k in a.keys().chain(b.keys()) {
            self.check_key(k)?;
        }
        Ok(self.mul(a, b))
    }

    pub fn check_key(&self, k: &NilHeckeKey) -> Result<(), Error> {
        if k.word.len() != self.n || k.exps.len() != self.n || k.perm.size() != self.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: k.word.len().max(k.exps.len()).max(k.perm.size()),
            });
        }
        if let Some(&bad) = k.word.entries().iter().find(|&&e| e >= self.algebra().dim()) {
            return Err(Error::AlgebraMismatch(format!("basis index {bad} in {}", self.algebra().name())));
        }
        Ok(())
    }

    /// Basis keys with total dot degree at most `cap`.
    pub fn basis(&self, cap: u32) -> Vec<NilHeckeKey> {
        let perms = Permutation::all(self.n);
        self.pol
            .monomials(cap)
            .into_iter()
            .flat_map(|m| perms.iter().map(move |w| NilHeckeKey { word: m.word.clone(), exps: m.exps.clone(), perm: w.clone() }))
            .collect()
    }

    pub fn parity(&self, k: &NilHeckeKey) -> Parity {
        self.algebra().word_parity(&k.word) + self.p().times(k.degree())
    }

    /// `f u_w`.
    pub fn bt_expand(&self, f: &PolElement, w: &Permutation) -> NhElement {
        self.mul(&self.embed_pol(f), &self.u_of(w))
    }

    /// Reads a normal form back as `Σ_w f_w ⊗ u_w`, sorted by `w`.
    pub fn bt_factor(&self, e: &NhElement) -> Vec<(PolElement, Permutation)> {
        let mut parts: BTreeMap<Permutation, PolElement> = BTreeMap::new();
        for (k, c) in e {
            parts.entry(k.perm.clone()).or_insert_with(Element::zero).add_term(k.pol_key(), c.clone());
        }
        parts.into_iter().map(|(w, f)| (f, w)).collect()
    }

    fn u_on_pol_nc(&self, i: usize, t: &PolNcElement) -> PolNcElement {
        let mut out = Element::zero();
        for ((f, z), c) in t {
            let fe = Element::term(f.clone(), c.clone());
            if !z.has_left_descent(i) {
                let sz = z.mul_simple_left(i);
                for (g, d) in &self.pol.s_action(i, &fe).expect("crossing index in range") {
                    out.add_term((g.clone(), sz.clone()), d.clone());
                }
            }
            for (g, d) in &self.pol.ddiff(i, &fe).expect("symmetric algebra") {
                out.add_term((g.clone(), z.clone()), d.clone());
            }
        }
        out
    }

    /// The action on `P_n(A) ⊗ N_n(k)`: polynomials act by left
    /// multiplication and `u_i (f ⊗ z) = s_i(f) ⊗ u_i z + ∂_i(f) ⊗ z`.
    pub fn act_polnc(&self, e: &NhElement, t: &PolNcElement) -> PolNcElement {
        let mut out = Element::zero();
        for (k, c) in e {
            let mut cur = t.clone();
            for &i in k.perm.reduced_word().iter().rev() {
                cur = self.u_on_pol_nc(i, &cur);
            }
            let left = k.pol_key();
            for ((f, z), d) in &cur {
                for (g, m) in &self.pol.mul_keys(&left, f) {
                    out.add_term((g.clone(), z.clone()), c * d * m);
                }
            }
        }
        out
    }

    /// The polynomial representation: `u_j` acts by `∂_j`, everything else
    /// by left multiplication.
    pub fn act_pol(&self, e: &NhElement, f: &PolElement) -> PolElement {
        let mut out = Element::zero();
        for (k, c) in e {
            let mut cur = f.clone();
            for &i in k.perm.reduced_word().iter().rev() {
                cur = self.pol.ddiff(i, &cur).expect("symmetric algebra");
            }
            let left = Element::term(k.pol_key(), c.clone());
            out += &self.pol.mul(&left, &cur);
        }
        out
    }

    /// `ω↔`: `u_i ↦ -u_{n-i}`, `x_i ↦ x_{n+1-i}`, `a ↦ π(a)`.
    pub fn omega_lr(&self, e: &NhElement) -> NhElement {
        let n = self.n;
        let pi = Permutation::longest(n);
        let mut out = Element::zero();
        for (k, c) in e {
            let (word, negative) = self.algebra().permute_word(&pi, &k.word);
            let mut cur = Element::term(self.key(word, vec![0; n], Permutation::identity(n)), signed(c.clone(), negative));
            for (j, &power) in k.exps.iter().enumerate() {
                for _ in 0..power {
                    cur = self.right_x(&cur, n - j);
                }
            }
            let letters = k.perm.reduced_word();
            for &i in &letters {
                cur = self.right_u(&cur, n - i);
            }
            out.add_scaled(&sign_scalar(letters.len() % 2 == 1), &cur);
        }
        out
    }

    /// `ω↕`, the anti-automorphism `u_i ↦ (-1)^p u_i`, `x_i ↦ x_i`, `a ↦ a`
    /// with `ω(fg) = (-1)^{|f||g|} ω(g) ω(f)`. Tokens reverse their order, so
    /// this is only defined for supercommutative `A`.
    pub fn omega_ud(&self, e: &NhElement) -> Result<NhElement, Error> {
        if !self.algebra().is_supercommutative() {
            return Err(Error::NotSupercommutative);
        }
        let alg = self.algebra();
        let p = self.p();
        let mut out = Element::zero();
        for (k, c) in e {
            let mut gens: Vec<(Gen, Parity)> = Vec::new();
            for s in (1..=self.n).rev() {
                let b = k.word.get(s);
                if b != alg.unit() {
                    gens.push((Gen::Token { strand: s, index: b }, alg.parity(b)));
                }
            }
            for (j, &power) in k.exps.iter().enumerate() {
                for _ in 0..power {
                    gens.push((Gen::X(j + 1), p));
                }
            }
            let letters = k.perm.reduced_word();
            for &i in &letters {
                gens.push((Gen::U(i), Parity::Even));
            }
            let mut negative = p.is_odd() && letters.len() % 2 == 1;
            let mut seen = Parity::Even;
            for (_, q) in &gens {
                negative ^= seen.koszul(*q);
                seen += *q;
            }
            let mut cur = Element::term(self.key(self.unit_word(), vec![0; self.n], Permutation::identity(self.n)), signed(c.clone(), negative));
            for (g, _) in gens.iter().rev() {
                cur = self.mul(&cur, &self.generator(g).unwrap());
            }
            out += &cur;
        }
        Ok(out)
    }

    /// `deg(a) + |k|(d + 2) + ℓ(w)(d - 2)` together with the parity.
    pub fn z_degree(&self, k: &NilHeckeKey) -> Result<GradedDegree, Error> {
        let g = self.algebra().grading().ok_or(Error::NotGraded)?;
        let d = g.d();
        let word: i64 = k.word.entries().iter().map(|&b| g.degrees[b]).sum();
        Ok(GradedDegree {
            z_degree: word + k.degree() as i64 * (d + 2) + k.perm.length() as i64 * (d - 2),
            parity: self.parity(k),
        })
    }

    pub fn format(&self, e: &NhElement) -> String {
        print::format_linear(e, |k| {
            let mut f = print::word_factors(self.algebra(), &k.word);
            f.extend(print::power_factors("x", &k.exps));
            f.extend(print::perm_factors("u", &k.perm));
            f
        })
    }

    /// Every defining relation of `NH_n(A)`, tokens ranging over `B_A`.
    pub fn relations(&self) -> Vec<Relation> {
        let alg = self.algebra();
        let mut out = presentation::token_relations(alg, self.n);
        out.extend(presentation::crossing_relations(self.n));
        out.extend(presentation::slide_relations(alg, self.n));
        out.extend(presentation::dot_relations(alg, self.n));
        out.extend(presentation::dot_crossing_relations(alg, self.n));
        out
    }

    pub fn verify_relations(&self) -> Report {
        let mut report = Report::new(format!("nilHecke relations, A = {}, n = {}", self.algebra().name(), self.n));
        presentation::check_relations(self, &self.relations(), &mut report);
        report
    }

    /// Number of basis keys with dot degree at most `cap`.
    pub fn rank(&self, cap: u32) -> usize {
        let perms: usize = (1..=self.n).product();
        self.algebra().dim().pow(self.n as u32) * exponent_vectors(self.n, cap).len() * perms
    }
}

impl GeneratedAlgebra for NilHecke {
    type Key = NilHeckeKey;

    fn strands(&self) -> usize {
        self.n
    }

    fn one(&self) -> NhElement {
        NilHecke::one(self)
    }

    fn generator(&self, g: &Gen) -> Option<NhElement> {
        match *g {
            Gen::Token { strand, index } if (1..=self.n).contains(&strand) && index < self.algebra().dim() => {
                Some(self.token(strand, index))
            }
            Gen::X(j) if (1..=self.n).contains(&j) => Some(self.x(j)),
            Gen::U(i) if (1..self.n).contains(&i) => Some(self.u(i)),
            _ => None,
        }
    }

    fn mul(&self, a: &NhElement, b: &NhElement) -> NhElement {
        NilHecke::mul(self, a, b)
    }

    fn format(&self, e: &NhElement) -> String {
        NilHecke::format(self, e)
    }

    fn labels(&self) -> Vec<String> {
        self.algebra().labels().to_vec()
    }
}

/// `A` with the trace `tr₂(a) = tr₁(a u)` for an invertible homogeneous `u`.
pub fn retrace(alg: &FrobeniusSuperalgebra, u: &AlgElement) -> Result<FrobeniusSuperalgebra, Error> {
    let parity = alg
        .element_parity(u)
        .ok_or_else(|| Error::InvalidData("u must be nonzero and homogeneous".into()))?;
    let trace = (0..alg.dim()).map(|b| alg.trace(&alg.mul(&Element::basis(b), u))).collect();
    let data = AlgebraData {
        name: format!("{} (retraced)", alg.name()),
        trace,
        trace_parity: alg.trace_parity() + parity,
        grading: None,
        ..alg.data().clone()
    };
    FrobeniusSuperalgebra::new(data)
}

/// Checks that `x_j ↦ (-1)^{|u|} x_j u_[j]`, with tokens and crossings fixed,
/// carries the relations of `NH_n(A, tr₁)` into `NH_n(A, tr₂)`.
pub fn trace_change_check(alg: &FrobeniusSuperalgebra, u: &AlgElement, n: usize) -> Result<Report, Error> {
    let source = NilHecke::new(alg.clone(), n)?;
    let target = NilHecke::new(retrace(alg, u)?, n)?;
    let sign = sign_scalar(alg.element_parity(u).is_some_and(Parity::is_odd));
    let images = |g: &Gen| -> Option<NhElement> {
        match *g {
            Gen::X(j) => {
                let tok = target.tensor(&alg.on_strand(n, j, u));
                Some(target.mul(&target.x(j), &tok).scale(&sign))
            }
            _ => target.generator(g),
        }
    };
    let mapped = Mapped {
        target: &target,
        images,
        labels: alg.labels().to_vec(),
    };
    let mut report = Report::new(format!("trace change, A = {}, n = {n}", alg.name()));
    presentation::check_relations(&mapped, &source.relations(), &mut report);
    Ok(report)
}
