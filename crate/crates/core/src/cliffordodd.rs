//! The odd nilHecke algebra with adjoined Clifford generators,
//! `ONH_n ⊗ Cl^{⊗n}`, and its isomorphism with `NH_n(Cl)`.
//!
//! All generators `c_i`, `y_i`, `v_i` are odd. Basis monomials are
//! `c_S y^k v_w` with `c_S = c_{s_m} ⋯ c_{s_1}` for `s_m > ⋯ > s_1`, and
//! `v_w` the product along the canonical reduced word of `w`. Products are
//! computed by right multiplication with the generators of the right factor:
//!
//! * `(c_S y^k v_w) c_j = (-1)^{ℓ(w) + |k|} c_S c_j y^k v_w`,
//! * `(c_S y^k v_w) y_j = c_S y^k (v_w y_j)`, with `v_w y_j` expanded through
//!   the last crossing by `v_i y_j = -y_{s_i(j)} v_i + [j ∈ {i, i+1}]`,
//! * `(c_S y^k v_w) v_i = ± c_S y^k v_{w s_i}` when lengths add, the sign
//!   counting the commutation moves that turn `canonical(w) i` into
//!   `canonical(w s_i)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::RwLock;

use crate::frobenius::{Builtin, FrobeniusSuperalgebra, TensorWord};
use crate::linear::{int, ratio, signed, Element, Parity};
use crate::nilcoxeter::check_strands;
use crate::nilhecke::{NhElement, NilHecke};
use crate::polynomial::{exponent_vectors, sort_sign};
use crate::presentation::{self, Gen, GeneratedAlgebra, Relation};
use crate::report::Report;
use crate::symgroup::{braid_class_with_parity, Permutation};
use crate::textio::print;
use crate::Error;

/// Basis monomial `c_S y^k v_w`; bit `j - 1` of `cset` records `c_j`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OddNHKey {
    pub cset: u32,
    pub exps: Vec<u32>,
    pub perm: Permutation,
}

impl OddNHKey {
    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Indices of the Clifford generators, largest first.
    pub fn clifford_indices(&self) -> Vec<usize> {
        (1..=32).rev().filter(|&j| self.cset >> (j - 1) & 1 == 1).collect()
    }
}

pub type OnhElement = Element<OddNHKey>;

pub struct OddNilHecke {
    n: usize,
    cl: NilHecke,
    vv_cache: RwLock<HashMap<(Permutation, usize), bool>>,
    vy_cache: RwLock<HashMap<(Permutation, usize), OnhElement>>,
}

impl fmt::Debug for OddNilHecke {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OddNilHecke").field("n", &self.n).finish()
    }
}

impl OddNilHecke {
    pub fn new(n: usize) -> Result<Self, Error> {
        check_strands(n)?;
        Ok(OddNilHecke {
            n,
            cl: NilHecke::new(FrobeniusSuperalgebra::builtin(Builtin::CliffordOdd), n)?,
            vv_cache: RwLock::new(HashMap::new()),
            vy_cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `NH_n(Cl)`, the source of [`OddNilHecke::psi`].
    pub fn clifford_nil_hecke(&self) -> &NilHecke {
        &self.cl
    }

    pub fn key(&self, cset: u32, exps: Vec<u32>, perm: Permutation) -> OddNHKey {
        OddNHKey { cset, exps, perm }
    }

    fn plain(&self, cset: u32, exps: Vec<u32>, perm: Permutation) -> OnhElement {
        Element::basis(self.key(cset, exps, perm))
    }

    pub fn one(&self) -> OnhElement {
        self.plain(0, vec![0; self.n], Permutation::identity(self.n))
    }

    pub fn c(&self, j: usize) -> OnhElement {
        self.plain(1 << (j - 1), vec![0; self.n], Permutation::identity(self.n))
    }

    pub fn y(&self, j: usize) -> OnhElement {
        let mut exps = vec![0; self.n];
        exps[j - 1] = 1;
        self.plain(0, exps, Permutation::identity(self.n))
    }

    pub fn v_of(&self, w: &Permutation) -> OnhElement {
        self.plain(0, vec![0; self.n], w.clone())
    }

    pub fn v(&self, i: usize) -> OnhElement {
        self.v_of(&Permutation::simple(self.n, i))
    }

    pub fn parity(&self, k: &OddNHKey) -> Parity {
        Parity::from_bit((k.cset.count_ones() + k.degree() + k.perm.length() as u32) % 2 == 1)
    }

    fn right_c(&self, e: &OnhElement, j: usize) -> OnhElement {
        let bit = 1u32 << (j - 1);
        let mut out = Element::zero();
        for (k, c) in e {
            let below = (k.cset & (bit - 1)).count_ones();
            let negative = (k.perm.length() as u32 + k.degree() + below) % 2 == 1;
            out.add_term(self.key(k.cset ^ bit, k.exps.clone(), k.perm.clone()), signed(c.clone(), negative));
        }
        out
    }

    /// Sign of `v_{canonical(w)} v_i` against `v_{w s_i}`; `ℓ(w s_i) > ℓ(w)`.
    fn vv_sign(&self, w: &Permutation, i: usize) -> bool {
        if let Some(&hit) = self.vv_cache.read().unwrap().get(&(w.clone(), i)) {
            return hit;
        }
        let mut word = w.reduced_word();
        word.push(i);
        let canonical = w.mul_simple_right(i).reduced_word();
        let negative = braid_class_with_parity(&canonical)
            .into_iter()
            .find(|(x, _)| *x == word)
            .map(|(_, parity)| parity)
            .expect("reduced words of one permutation are braid equivalent");
        self.vv_cache.write().unwrap().insert((w.clone(), i), negative);
        negative
    }

    fn right_v(&self, e: &OnhElement, i: usize) -> OnhElement {
        let mut out = Element::zero();
        for (k, c) in e {
            if !k.perm.has_right_descent(i) {
                let negative = self.vv_sign(&k.perm, i);
                out.add_term(self.key(k.cset, k.exps.clone(), k.perm.mul_simple_right(i)), signed(c.clone(), negative));
            }
        }
        out
    }

    /// `v_w y_j` in normal form.
    fn v_times_y(&self, w: &Permutation, j: usize) -> OnhElement {
        if w.is_identity() {
            return self.y(j);
        }
        if let Some(hit) = self.vy_cache.read().unwrap().get(&(w.clone(), j)) {
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
        let mut out = self.right_v(&self.v_times_y(&shorter, moved_j), i).scale(&int(-1));
        if j == i || j == i + 1 {
            out += &self.v_of(&shorter);
        }
        self.vy_cache.write().unwrap().insert((w.clone(), j), out.clone());
        out
    }

    fn right_y(&self, e: &OnhElement, j: usize) -> OnhElement {
        let mut out = Element::zero();
        for (k, c) in e {
            for (m, d) in &self.v_times_y(&k.perm, j) {
                let exps = k.exps.iter().zip(&m.exps).map(|(a, b)| a + b).collect();
                let negative = sort_sign(Parity::Odd, &k.exps, &m.exps);
                out.add_term(self.key(k.cset, exps, m.perm.clone()), signed(c * d, negative));
            }
        }
        out
    }

    /// `e · k`, multiplying by the generators of `k` in order.
    pub fn mul_by_key(&self, e: &OnhElement, k: &OddNHKey) -> OnhElement {
        let mut cur = e.clone();
        for j in k.clifford_indices() {
            cur = self.right_c(&cur, j);
        }
        for (j, &power) in k.exps.iter().enumerate() {
            for _ in 0..power {
                cur = self.right_y(&cur, j + 1);
            }
        }
        for i in k.perm.reduced_word() {
            cur = self.right_v(&cur, i);
        }
        cur
    }

    pub fn mul(&self, a: &OnhElement, b: &OnhElement) -> OnhElement {
        let mut out = Element::zero();
        for (k, c) in b {
            out.add_scaled(c, &self.mul_by_key(a, k));
        }
        out
    }

    pub fn mul_keys(&self, x: &OddNHKey, y: &OddNHKey) -> OnhElement {
        self.mul_by_key(&Element::basis(x.clone()), y)
    }

    /// Multiplication after checking that every key has `n` strands.
    pub fn try_mul(&self, a: &OnhElement, b: &OnhElement) -> Result<OnhElement, Error> {
        for k in a.keys().chain(b.keys()) {
            self.check_key(k)?;
        }
        Ok(self.mul(a, b))
    }

    pub fn check_key(&self, k: &OddNHKey) -> Result<(), Error> {
        let c_strands = 32 - k.cset.leading_zeros() as usize;
        if k.exps.len() != self.n || k.perm.size() != self.n || c_strands > self.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: k.exps.len().max(k.perm.size()).max(c_strands),
            });
        }
        Ok(())
    }

    /// Basis keys with `|k| <= cap`: `2^n · #exponents · n!` of them.
    pub fn basis(&self, cap: u32) -> Vec<OddNHKey> {
        let perms = Permutation::all(self.n);
        let mut out = Vec::new();
        for cset in 0..1u32 << self.n {
            for exps in exponent_vectors(self.n, cap) {
                for w in &perms {
                    out.push(self.key(cset, exps.clone(), w.clone()));
                }
            }
        }
        out
    }

    /// `NH_n(Cl) → ONH_n ⊗ Cl^{⊗n}`: `c_i ↦ c_i`, `x_i ↦ y_i`,
    /// `u_i ↦ (c_i - c_{i+1}) v_i`.
    pub fn psi(&self, e: &NhElement) -> OnhElement {
        let unit = self.cl.algebra().unit();
        let mut out = Element::zero();
        for (k, c) in e {
            let cset = (1..=self.n).filter(|&s| k.word.get(s) != unit).fold(0, |acc, s| acc | 1 << (s - 1));
            let mut cur = Element::term(self.key(cset, k.exps.clone(), Permutation::identity(self.n)), c.clone());
            for i in k.perm.reduced_word() {
                let image = &self.mul(&self.c(i), &self.v(i)) - &self.mul(&self.c(i + 1), &self.v(i));
                cur = self.mul(&cur, &image);
            }
            out += &cur;
        }
        out
    }

    /// The inverse of [`OddNilHecke::psi`]: `v_i ↦ ½ τ_i u_i`.
    pub fn psi_inv(&self, e: &OnhElement) -> NhElement {
        let alg = self.cl.algebra();
        let clifford = (0..alg.dim()).find(|&b| b != alg.unit()).unwrap();
        let half = ratio(1, 2);
        let mut out = Element::zero();
        for (k, c) in e {
            let entries = (1..=self.n).map(|s| if k.cset >> (s - 1) & 1 == 1 { clifford } else { alg.unit() }).collect();
            let key = self.cl.key(TensorWord::new(entries), k.exps.clone(), Permutation::identity(self.n));
            let mut cur = Element::term(key, c.clone());
            for i in k.perm.reduced_word() {
                let image = self.cl.mul(&self.cl.tau(i), &self.cl.u(i)).scale(&half);
                cur = self.cl.mul(&cur, &image);
            }
            out += &cur;
        }
        out
    }

    pub fn format(&self, e: &OnhElement) -> String {
        print::format_linear(e, |k| {
            let mut f: Vec<String> = k.clifford_indices().iter().map(|j| format!("c{j}")).collect();
            f.extend(print::power_factors("y", &k.exps));
            f.extend(print::perm_factors("v", &k.perm));
            f
        })
    }

    /// The odd nilHecke relations together with the Clifford relations.
    pub fn relations(&self) -> Vec<Relation> {
        let n = self.n;
        let (v, y, c) = (Gen::V, Gen::Y, Gen::C);
        let anti = |name: &str, a: Vec<Gen>, b: Vec<Gen>| Relation::new(name).plus(int(1), a).plus(int(1), b);
        let mut out = Vec::new();
        for i in 1..n {
            out.push(Relation::new("v_i^2 = 0").plus(int(1), vec![v(i), v(i)]));
            for j in 1..n {
                if i.abs_diff(j) > 1 {
                    out.push(anti("v_i v_j = -v_j v_i", vec![v(i), v(j)], vec![v(j), v(i)]));
                }
            }
            if i + 1 < n {
                out.push(Relation::equal("braid", vec![v(i), v(i + 1), v(i)], vec![v(i + 1), v(i), v(i + 1)]));
            }
            for j in 1..=n {
                if j != i && j != i + 1 {
                    out.push(anti("y_j v_i = -v_i y_j", vec![y(j), v(i)], vec![v(i), y(j)]));
                }
            }
            out.push(anti("v_i y_(i+1) + y_i v_i = 1", vec![v(i), y(i + 1)], vec![y(i), v(i)]).plus(int(-1), vec![]));
            out.push(anti("y_(i+1) v_i + v_i y_i = 1", vec![y(i + 1), v(i)], vec![v(i), y(i)]).plus(int(-1), vec![]));
            for j in 1..=n {
                out.push(anti("v_i c_j = -c_j v_i", vec![v(i), c(j)], vec![c(j), v(i)]));
            }
        }
        for i in 1..=n {
            out.push(Relation::new("c_i^2 = 1").plus(int(1), vec![c(i), c(i)]).plus(int(-1), vec![]));
            for j in 1..=n {
                if i != j {
                    out.push(anti("y_i y_j = -y_j y_i", vec![y(i), y(j)], vec![y(j), y(i)]));
                    out.push(anti("c_i c_j = -c_j c_i", vec![c(i), c(j)], vec![c(j), c(i)]));
                }
                out.push(anti("y_i c_j = -c_j y_i", vec![y(i), c(j)], vec![c(j), y(i)]));
            }
        }
        out
    }

    pub fn verify_relations(&self) -> Report {
        let mut report = Report::new(format!("odd nilHecke relations, n = {}", self.n));
        presentation::check_relations(self, &self.relations(), &mut report);
        report
    }
}

impl GeneratedAlgebra for OddNilHecke {
    type Key = OddNHKey;

    fn strands(&self) -> usize {
        self.n
    }

    fn one(&self) -> OnhElement {
        OddNilHecke::one(self)
    }

    fn generator(&self, g: &Gen) -> Option<OnhElement> {
        let n = self.n;
        match *g {
            Gen::C(j) if (1..=n).contains(&j) => Some(self.c(j)),
            Gen::Token { strand, index } if (1..=n).contains(&strand) && index < 2 => {
                Some(if index == self.cl.algebra().unit() { self.one() } else { self.c(strand) })
            }
            Gen::Y(j) if (1..=n).contains(&j) => Some(self.y(j)),
            Gen::V(i) if (1..n).contains(&i) => Some(self.v(i)),
            _ => None,
        }
    }

    fn mul(&self, a: &OnhElement, b: &OnhElement) -> OnhElement {
        OddNilHecke::mul(self, a, b)
    }

    fn format(&self, e: &OnhElement) -> String {
        OddNilHecke::format(self, e)
    }

    fn labels(&self) -> Vec<String> {
        self.cl.algebra().labels().to_vec()
    }
}

/// The relation suite of `ONH_n ⊗ Cl^{⊗n}`.
pub fn onh_verify(n: usize) -> Result<Report, Error> {
    Ok(OddNilHecke::new(n)?.verify_relations())
}

#[cfg(test)]
mod tests {
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;

    fn onh(n: usize) -> OddNilHecke {
        OddNilHecke::new(n).unwrap()
    }

    #[test]
    fn examples() {
        let a = onh(2);
        assert!(a.mul(&a.v(1), &a.v(1)).is_zero());
        assert_eq!(a.mul(&a.v(1), &a.y(2)), &a.one() - &a.mul(&a.y(1), &a.v(1)));
        assert_eq!(a.mul(&a.c(1), &a.c(1)), a.one());
        assert_eq!(a.format(&a.mul(&a.v(1), &a.y(2))), "1 - y1*v1");
        let e = a.mul(&a.mul(&a.c(1), &a.c(2)), &a.y(1));
        assert_eq!(a.format(&e), "-c2*c1*y1");
    }

    #[test]
    fn relations_hold() {
        for n in 1..=4 {
            let r = onh_verify(n).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn far_crossings_anticommute() {
        let a = onh(4);
        assert_eq!(a.mul(&a.v(1), &a.v(3)), -&a.mul(&a.v(3), &a.v(1)));
        let w = Permutation::from_word(4, &[1, 3]);
        assert_eq!(a.mul(&a.v(3), &a.v(1)), -&a.v_of(&w));
    }

    #[test]
    fn associativity_on_random_triples() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let a = onh(3);
        let keys = a.basis(2);
        for _ in 0..60 {
            let [x, y, z] = [0; 3].map(|_| Element::basis(keys[rng.gen_range(0..keys.len())].clone()));
            assert_eq!(a.mul(&a.mul(&x, &y), &z), a.mul(&x, &a.mul(&y, &z)));
        }
    }

    #[test]
    fn basis_keys_are_their_generator_products() {
        let a = onh(3);
        for k in a.basis(2) {
            let mut gens: Vec<Gen> = k.clifford_indices().into_iter().map(Gen::C).collect();
            for (j, &p) in k.exps.iter().enumerate() {
                gens.extend(std::iter::repeat_n(Gen::Y(j + 1), p as usize));
            }
            gens.extend(k.perm.reduced_word().into_iter().map(Gen::V));
            assert_eq!(a.monomial(&gens), Element::basis(k));
        }
    }

    #[test]
    fn psi_examples() {
        let a = onh(3);
        let nh = a.clifford_nil_hecke();
        assert_eq!(a.psi(&nh.u(1)), &a.mul(&a.c(1), &a.v(1)) - &a.mul(&a.c(2), &a.v(1)));
        assert_eq!(a.psi(&nh.x(3)), a.y(3));
        assert_eq!(a.psi(&nh.tau(1)), &a.c(1) - &a.c(2));
        assert_eq!(a.psi_inv(&a.y(2)), nh.x(2));
        assert_eq!(a.psi_inv(&a.v(1)), nh.mul(&nh.tau(1), &nh.u(1)).scale(&ratio(1, 2)));
        assert_eq!(a.psi_inv(&a.psi(&nh.u(1))), nh.u(1));
    }

    #[test]
    fn psi_is_a_bijection_on_keys() {
        for n in 1..=3 {
            let a = onh(n);
            let nh = a.clifford_nil_hecke();
            let cap = 3;
            for k in nh.basis(cap) {
                let e = Element::basis(k);
                assert_eq!(a.psi_inv(&a.psi(&e)), e);
            }
            let keys = a.basis(cap);
            assert_eq!(keys.len(), nh.rank(cap));
            for k in keys {
                let e = Element::basis(k);
                assert_eq!(a.psi(&a.psi_inv(&e)), e);
            }
        }
    }

    #[test]
    fn psi_is_multiplicative_and_even() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        let a = onh(3);
        let nh = a.clifford_nil_hecke();
        let keys = nh.basis(2);
        for _ in 0..60 {
            let x = keys[rng.gen_range(0..keys.len())].clone();
            let y = keys[rng.gen_range(0..keys.len())].clone();
            let (ex, ey) = (Element::basis(x.clone()), Element::basis(y));
            assert_eq!(a.psi(&nh.mul(&ex, &ey)), a.mul(&a.psi(&ex), &a.psi(&ey)));
            assert!(a.psi(&ex).keys().all(|k| a.parity(k) == nh.parity(&x)));
        }
    }

    #[test]
    fn size_checks() {
        let a = onh(2);
        let b = onh(3);
        assert!(matches!(a.try_mul(&a.v(1), &b.v(1)), Err(Error::SizeMismatch { .. })));
        assert!(matches!(a.try_mul(&b.c(3), &a.one()), Err(Error::SizeMismatch { .. })));
    }
}
