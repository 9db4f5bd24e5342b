//! The Frobenius nilCoxeter algebra `N_n(A)`, with basis `a u_w`.

use crate::frobenius::{FrobeniusSuperalgebra, TensorElement, TensorWord};
use crate::linear::{signed, Element};
use crate::presentation::{self, Gen, GeneratedAlgebra, Relation};
use crate::report::Report;
use crate::symgroup::Permutation;
use crate::textio::print;
use crate::Error;

/// Largest supported number of strands.
pub const MAX_STRANDS: usize = 12;

/// Basis monomial `a u_w`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NilCoxKey {
    pub word: TensorWord,
    pub perm: Permutation,
}

pub type NcElement = Element<NilCoxKey>;

#[derive(Clone, Debug)]
pub struct NilCoxeter {
    alg: FrobeniusSuperalgebra,
    n: usize,
}

pub(crate) fn check_strands(n: usize) -> Result<(), Error> {
    if n == 0 {
        return Err(Error::IndexOutOfRange { index: 0, max: MAX_STRANDS });
    }
    if n > MAX_STRANDS {
        return Err(Error::SizeTooLarge { n, max: MAX_STRANDS });
    }
    Ok(())
}

impl NilCoxeter {
    pub fn new(alg: FrobeniusSuperalgebra, n: usize) -> Result<Self, Error> {
        check_strands(n)?;
        Ok(NilCoxeter { alg, n })
    }

    pub fn algebra(&self) -> &FrobeniusSuperalgebra {
        &self.alg
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn unit_word(&self) -> TensorWord {
        TensorWord::constant(self.n, self.alg.unit())
    }

    pub fn one(&self) -> NcElement {
        self.u_of(&Permutation::identity(self.n))
    }

    /// `u_w`, the crossing monomial with all-unit tokens.
    pub fn u_of(&self, w: &Permutation) -> NcElement {
        Element::basis(NilCoxKey {
            word: self.unit_word(),
            perm: w.clone(),
        })
    }

    /// `u_i`.
    pub fn u(&self, i: usize) -> NcElement {
        self.u_of(&Permutation::simple(self.n, i))
    }

    /// The product `u_{i_1} ⋯ u_{i_k}` computed by multiplication.
    pub fn u_word(&self, word: &[usize]) -> NcElement {
        word.iter().fold(self.one(), |acc, &i| self.mul(&acc, &self.u(i)))
    }

    pub fn tensor(&self, t: &TensorElement) -> NcElement {
        t.map_keys(|w| NilCoxKey {
            word: w.clone(),
            perm: Permutation::identity(self.n),
        })
    }

    /// Basis element `index` of `A` on `strand`.
    pub fn token(&self, strand: usize, index: usize) -> NcElement {
        self.tensor(&self.alg.on_strand(self.n, strand, &Element::basis(index)))
    }

    /// `(a u_w)(b u_v) = a w(b) u_{wv}` when lengths add, else zero.
    pub fn mul_keys(&self, x: &NilCoxKey, y: &NilCoxKey) -> NcElement {
        let wv = x.perm.compose_unchecked(&y.perm);
        if wv.length() != x.perm.length() + y.perm.length() {
            return Element::zero();
        }
        let (moved, negative) = self.alg.permute_word(&x.perm, &y.word);
        let mut out = Element::zero();
        for (word, c) in &self.alg.word_mul(&x.word, &moved) {
            out.add_term(
                NilCoxKey {
                    word: word.clone(),
                    perm: wv.clone(),
                },
                signed(c.clone(), negative),
            );
        }
        out
    }

    pub fn mul(&self, a: &NcElement, b: &NcElement) -> NcElement {
        let mut out = Element::zero();
        for (x, ca) in a {
            for (y, cb) in b {
                out.add_scaled(&(ca * cb), &self.mul_keys(x, y));
            }
        }
        out
    }

    /// Multiplication after checking that every key fits this algebra.
    pub fn try_mul(&self, a: &NcElement, b: &NcElement) -> Result<NcElement, Error> {
        for k in a.keys().chain(b.keys()) {
            self.check_key(k)?;
        }
        Ok(self.mul(a, b))
    }

    pub fn check_key(&self, k: &NilCoxKey) -> Result<(), Error> {
        if k.word.len() != self.n || k.perm.size() != self.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: k.word.len().max(k.perm.size()),
            });
        }
        if let Some(&bad) = k.word.entries().iter().find(|&&e| e >= self.alg.dim()) {
            return Err(Error::AlgebraMismatch(format!("basis index {bad} in {}", self.alg.name())));
        }
        Ok(())
    }

    /// All basis keys: `(dim A)^n · n!` of them.
    pub fn basis(&self) -> Vec<NilCoxKey> {
        let perms = Permutation::all(self.n);
        TensorWord::all(self.n, self.alg.dim())
            .into_iter()
            .flat_map(|word| {
                perms.iter().map(move |perm| NilCoxKey {
                    word: word.clone(),
                    perm: perm.clone(),
                })
            })
            .collect()
    }

    pub fn format(&self, e: &NcElement) -> String {
        print::format_linear(e, |k| {
            let mut f = print::word_factors(&self.alg, &k.word);
            f.extend(print::perm_factors("u", &k.perm));
            f
        })
    }

    /// The defining relations of `N_n(A)` with tokens ranging over the basis.
    pub fn relations(&self) -> Vec<Relation> {
        let mut out = presentation::token_relations(&self.alg, self.n);
        out.extend(presentation::crossing_relations(self.n));
        out.extend(presentation::slide_relations(&self.alg, self.n));
        out
    }

    pub fn verify_relations(&self) -> Report {
        let mut report = Report::new(format!("nilCoxeter relations, A = {}, n = {}", self.alg.name(), self.n));
        presentation::check_relations(self, &self.relations(), &mut report);
        report
    }
}

impl GeneratedAlgebra for NilCoxeter {
    type Key = NilCoxKey;

    fn strands(&self) -> usize {
        self.n
    }

    fn one(&self) -> NcElement {
        NilCoxeter::one(self)
    }

    fn generator(&self, g: &Gen) -> Option<NcElement> {
        match *g {
            Gen::Token { strand, index } if (1..=self.n).contains(&strand) && index < self.alg.dim() => {
                Some(self.token(strand, index))
            }
            Gen::U(i) if (1..self.n).contains(&i) => Some(self.u(i)),
            _ => None,
        }
    }

    fn mul(&self, a: &NcElement, b: &NcElement) -> NcElement {
        NilCoxeter::mul(self, a, b)
    }

    fn format(&self, e: &NcElement) -> String {
        NilCoxeter::format(self, e)
    }

    fn labels(&self) -> Vec<String> {
        self.alg.labels().to_vec()
    }
}

#[cfg(test)]
mod tests {
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::frobenius::Builtin;

    fn nc(b: Builtin, n: usize) -> NilCoxeter {
        NilCoxeter::new(FrobeniusSuperalgebra::builtin(b), n).unwrap()
    }

    #[test]
    fn examples() {
        let a = nc(Builtin::Ground, 3);
        assert!(a.mul(&a.u(1), &a.u(1)).is_zero());
        let s1s2 = Permutation::simple(3, 1).compose(&Permutation::simple(3, 2)).unwrap();
        assert_eq!(a.mul(&a.u(1), &a.u(2)), a.u_of(&s1s2));
        let c = nc(Builtin::CliffordOdd, 2);
        assert_eq!(c.mul(&c.u(1), &c.token(1, 1)), c.mul(&c.token(2, 1), &c.u(1)));
        assert_eq!(c.format(&c.mul(&c.u(1), &c.token(1, 1))), "c[2]*u1");
    }

    #[test]
    fn u_of_is_independent_of_reduced_word() {
        let a = nc(Builtin::CliffordOdd, 4);
        for w in Permutation::all(4) {
            for word in w.all_reduced_words().unwrap() {
                assert_eq!(a.u_word(&word), a.u_of(&w));
            }
        }
        assert_eq!(a.u_of(&Permutation::identity(4)), a.one());
    }

    #[test]
    fn unicorn_relations_hold() {
        for (b, n) in [(Builtin::Ground, 3), (Builtin::CliffordOdd, 3), (Builtin::DualNumbers, 2), (Builtin::CyclicGroup(3), 3)] {
            let r = nc(b, n).verify_relations();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn rank() {
        assert_eq!(nc(Builtin::CliffordOdd, 3).basis().len(), 8 * 6);
        assert_eq!(nc(Builtin::CyclicGroup(3), 2).basis().len(), 9 * 2);
    }

    #[test]
    fn associativity_on_random_triples() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for b in [Builtin::CliffordOdd, Builtin::DualNumbers, Builtin::CyclicGroup(3)] {
            let a = nc(b, 3);
            let keys = a.basis();
            for _ in 0..150 {
                let [x, y, z] = [0; 3].map(|_| Element::basis(keys[rng.gen_range(0..keys.len())].clone()));
                assert_eq!(a.mul(&a.mul(&x, &y), &z), a.mul(&x, &a.mul(&y, &z)));
            }
        }
    }

    #[test]
    fn factors_are_subalgebras() {
        let a = nc(Builtin::CliffordOdd, 3);
        let id = Permutation::identity(3);
        let words: Vec<_> = a.basis().into_iter().filter(|k| k.perm == id).collect();
        for x in &words {
            for y in &words {
                assert!(a.mul_keys(x, y).keys().all(|k| k.perm == id));
            }
        }
        let crossings: Vec<_> = Permutation::all(3).into_iter().map(|w| a.u_of(&w)).collect();
        for x in &crossings {
            for y in &crossings {
                assert!(a.mul(x, y).keys().all(|k| k.word.is_constant(0)));
            }
        }
    }

    #[test]
    fn size_checks() {
        let a = nc(Builtin::CliffordOdd, 2);
        let b = nc(Builtin::CliffordOdd, 3);
        assert!(matches!(a.try_mul(&a.u(1), &b.u(1)), Err(Error::SizeMismatch { .. })));
        let bogus = Element::basis(NilCoxKey {
            word: TensorWord::constant(2, 5),
            perm: Permutation::identity(2),
        });
        assert!(matches!(a.try_mul(&bogus, &a.one()), Err(Error::AlgebraMismatch(_))));
        assert!(NilCoxeter::new(FrobeniusSuperalgebra::builtin(Builtin::Ground), 0).is_err());
    }
}
