//! Generators, relations and the evaluation of relations inside an algebra
//! given on a basis.

use num_traits::{One, Zero};

use crate::frobenius::FrobeniusSuperalgebra;
use crate::linear::{format_scalar, int, is_negative, sign_scalar, Element, Scalar};
use crate::report::Report;

/// A generator symbol. Strand and crossing indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    /// Basis element `index` of `A` on strand `strand`.
    Token { strand: usize, index: usize },
    X(usize),
    U(usize),
    Y(usize),
    V(usize),
    /// Clifford generator of the odd nilHecke side.
    C(usize),
}

/// An algebra presented on a basis, with generator symbols it can evaluate.
pub trait GeneratedAlgebra {
    type Key: Ord + Clone;

    fn strands(&self) -> usize;

    fn one(&self) -> Element<Self::Key>;

    /// The element named by `g`, or `None` if the symbol does not belong to
    /// this algebra.
    fn generator(&self, g: &Gen) -> Option<Element<Self::Key>>;

    fn mul(&self, a: &Element<Self::Key>, b: &Element<Self::Key>) -> Element<Self::Key>;

    fn format(&self, e: &Element<Self::Key>) -> String;

    /// Basis labels of the coefficient algebra, if it has tokens.
    fn labels(&self) -> Vec<String> {
        Vec::new()
    }

    fn label(&self, index: usize) -> String {
        self.labels().get(index).cloned().unwrap_or_else(|| format!("b{index}"))
    }

    fn gen_text(&self, g: &Gen) -> String {
        match g {
            Gen::Token { strand, index } => format!("{}[{strand}]", self.label(*index)),
            Gen::X(j) => format!("x{j}"),
            Gen::U(i) => format!("u{i}"),
            Gen::Y(j) => format!("y{j}"),
            Gen::V(i) => format!("v{i}"),
            Gen::C(i) => format!("c{i}"),
        }
    }

    fn monomial(&self, gens: &[Gen]) -> Element<Self::Key> {
        gens.iter().fold(self.one(), |acc, g| {
            let e = self.generator(g).expect("generator belongs to the algebra");
            self.mul(&acc, &e)
        })
    }
}

/// A linear combination of generator monomials that should vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub name: String,
    pub terms: Vec<(Scalar, Vec<Gen>)>,
}

impl Relation {
    pub fn new(name: impl Into<String>) -> Self {
        Relation {
            name: name.into(),
            terms: Vec::new(),
        }
    }

    pub fn plus(mut self, c: Scalar, gens: Vec<Gen>) -> Self {
        if !c.is_zero() {
            self.terms.push((c, gens));
        }
        self
    }

    /// `lhs - rhs` for two monomials.
    pub fn equal(name: impl Into<String>, lhs: Vec<Gen>, rhs: Vec<Gen>) -> Self {
        Relation::new(name).plus(int(1), lhs).plus(int(-1), rhs)
    }

    pub fn evaluate<A: GeneratedAlgebra + ?Sized>(&self, alg: &A) -> Element<A::Key> {
        let mut out = Element::zero();
        for (c, gens) in &self.terms {
            out.add_scaled(c, &alg.monomial(gens));
        }
        out
    }

    /// Parseable text of the relation, e.g. `u1*x2 - x1*u1 - c[1] + c[2]`.
    pub fn text<A: GeneratedAlgebra + ?Sized>(&self, alg: &A) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (pos, (c, gens)) in self.terms.iter().enumerate() {
            let negative = is_negative(c);
            let abs = if negative { -c } else { c.clone() };
            match (pos, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let body: Vec<String> = gens.iter().map(|g| alg.gen_text(g)).collect();
            match (abs.is_one(), body.is_empty()) {
                (_, true) => out.push_str(&format_scalar(&abs)),
                (true, false) => out.push_str(&body.join("*")),
                (false, false) => out.push_str(&format!("{}*{}", format_scalar(&abs), body.join("*"))),
            }
        }
        out
    }
}

/// Evaluates every relation and records it under its name.
pub fn check_relations<A: GeneratedAlgebra + ?Sized>(alg: &A, relations: &[Relation], report: &mut Report) {
    for rel in relations {
        let value = rel.evaluate(alg);
        report.record(&rel.name, value.is_zero(), || {
            format!("{}   [normal form: {}]", rel.text(alg), alg.format(&value))
        });
    }
}

fn tok(strand: usize, index: usize) -> Gen {
    Gen::Token { strand, index }
}

/// Relations among tokens: the product on one strand, the unit, and the
/// super interchange law between distinct strands.
pub fn token_relations(a: &FrobeniusSuperalgebra, n: usize) -> Vec<Relation> {
    let mut out = Vec::new();
    let dim = a.dim();
    for j in 1..=n {
        out.push(Relation::new("token unit").plus(int(1), vec![tok(j, a.unit())]).plus(int(-1), vec![]));
        for x in 0..dim {
            for y in 0..dim {
                let mut rel = Relation::new("token product").plus(int(1), vec![tok(j, x), tok(j, y)]);
                for (k, c) in a.mul_basis(x, y) {
                    rel = rel.plus(-c, vec![tok(j, *k)]);
                }
                out.push(rel);
            }
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            for x in 0..dim {
                for y in 0..dim {
                    let sign = sign_scalar(a.parity(x).koszul(a.parity(y)));
                    out.push(
                        Relation::new("token interchange")
                            .plus(int(1), vec![tok(i, x), tok(j, y)])
                            .plus(-sign, vec![tok(j, y), tok(i, x)]),
                    );
                }
            }
        }
    }
    out
}

/// `u_i^2 = 0`, far commutation and the braid relation.
pub fn crossing_relations(n: usize) -> Vec<Relation> {
    let mut out = Vec::new();
    for i in 1..n {
        out.push(Relation::new("u_i^2 = 0").plus(int(1), vec![Gen::U(i), Gen::U(i)]));
        for j in 1..n {
            if i.abs_diff(j) > 1 {
                out.push(Relation::equal("far commutation", vec![Gen::U(i), Gen::U(j)], vec![Gen::U(j), Gen::U(i)]));
            }
        }
        if i + 1 < n {
            out.push(Relation::equal(
                "braid",
                vec![Gen::U(i), Gen::U(i + 1), Gen::U(i)],
                vec![Gen::U(i + 1), Gen::U(i), Gen::U(i + 1)],
            ));
        }
    }
    out
}

/// Tokens sliding through crossings: `u_i a_[j] = a_[s_i(j)] u_i`.
pub fn slide_relations(a: &FrobeniusSuperalgebra, n: usize) -> Vec<Relation> {
    let mut out = Vec::new();
    for i in 1..n {
        for j in 1..=n {
            let target = if j == i {
                i + 1
            } else if j == i + 1 {
                i
            } else {
                j
            };
            for x in 0..a.dim() {
                out.push(Relation::equal(
                    "token slides through crossing",
                    vec![Gen::U(i), tok(j, x)],
                    vec![tok(target, x), Gen::U(i)],
                ));
            }
        }
    }
    out
}

/// `x_i x_j = (-1)^p x_j x_i` and `a x_i = (-1)^{p|a|} x_i a`.
pub fn dot_relations(a: &FrobeniusSuperalgebra, n: usize) -> Vec<Relation> {
    let p = a.trace_parity();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                out.push(
                    Relation::new("dots anticommute up to (-1)^p")
                        .plus(int(1), vec![Gen::X(i), Gen::X(j)])
                        .plus(-sign_scalar(p.is_odd()), vec![Gen::X(j), Gen::X(i)]),
                );
            }
            for x in 0..a.dim() {
                out.push(
                    Relation::new("token passes dot")
                        .plus(int(1), vec![tok(j, x), Gen::X(i)])
                        .plus(-sign_scalar(p.koszul(a.parity(x))), vec![Gen::X(i), tok(j, x)]),
                );
            }
        }
    }
    out
}

/// Terms `c * τ_i` as token monomials (`b` on strand `i + 1`, `b^∨` on `i`).
pub fn tau_terms(a: &FrobeniusSuperalgebra, i: usize, c: &Scalar) -> Vec<(Scalar, Vec<Gen>)> {
    a.teleporter()
        .iter()
        .map(|(w, k)| (c * k, vec![tok(i + 1, w.get(2)), tok(i, w.get(1))]))
        .collect()
}

/// The dot-crossing relations of the nilHecke algebra.
pub fn dot_crossing_relations(a: &FrobeniusSuperalgebra, n: usize) -> Vec<Relation> {
    let sign_p = sign_scalar(a.trace_parity().is_odd());
    let mut out = Vec::new();
    for i in 1..n {
        let mut rel = Relation::equal("u_i x_(i+1) = x_i u_i + τ_i", vec![Gen::U(i), Gen::X(i + 1)], vec![Gen::X(i), Gen::U(i)]);
        rel.terms.extend(tau_terms(a, i, &int(-1)));
        out.push(rel);
        let mut rel = Relation::equal(
            "x_(i+1) u_i = u_i x_i + (-1)^p τ_i",
            vec![Gen::X(i + 1), Gen::U(i)],
            vec![Gen::U(i), Gen::X(i)],
        );
        rel.terms.extend(tau_terms(a, i, &-&sign_p));
        out.push(rel);
        for j in 1..=n {
            if j != i && j != i + 1 {
                out.push(Relation::equal("far dot commutes with crossing", vec![Gen::X(j), Gen::U(i)], vec![Gen::U(i), Gen::X(j)]));
            }
        }
    }
    out
}

/// Generators of one presentation sent to elements of another algebra; the
/// relations of the source can then be checked on the images.
pub struct Mapped<'a, T: GeneratedAlgebra, F> {
    pub target: &'a T,
    pub images: F,
    pub labels: Vec<String>,
}

impl<'a, T, F> GeneratedAlgebra for Mapped<'a, T, F>
where
    T: GeneratedAlgebra,
    F: Fn(&Gen) -> Option<Element<T::Key>>,
{
    type Key = T::Key;

    fn strands(&self) -> usize {
        self.target.strands()
    }

    fn one(&self) -> Element<T::Key> {
        self.target.one()
    }

    fn generator(&self, g: &Gen) -> Option<Element<T::Key>> {
        (self.images)(g)
    }

    fn mul(&self, a: &Element<T::Key>, b: &Element<T::Key>) -> Element<T::Key> {
        self.target.mul(a, b)
    }

    fn format(&self, e: &Element<T::Key>) -> String {
        self.target.format(e)
    }

    fn labels(&self) -> Vec<String> {
        self.labels.clone()
    }
}
